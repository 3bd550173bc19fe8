use std::path::Path;
use std::process::Command;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use heptad::deformation::planted::{planted_coconic, planted_collinear};
use heptad::deformation::WallKind;
use heptad::io::{ClassReport, ConfigFile};
use heptad_cli::service::router;
use http_body_util::BodyExt;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use tower::ServiceExt;

fn seed_text(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../seeds").join(format!("{name}.json"));
    std::fs::read_to_string(p).unwrap()
}

fn seed_value(name: &str) -> Value {
    serde_json::from_str(&seed_text(name)).unwrap()
}

async fn send(method: &str, uri: &str, body: String) -> (StatusCode, String) {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(Body::from(body))
        .unwrap();
    let resp = router().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, String::from_utf8(bytes.to_vec()).unwrap())
}

fn cli(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_heptad")).args(args).output().unwrap();
    String::from_utf8(out.stdout).unwrap()
}

#[tokio::test]
async fn classify_matches_cli_output() {
    let (status, body) = send("POST", "/classify", seed_text("hept7")).await;
    assert_eq!(status, StatusCode::OK);
    let report: ClassReport = serde_json::from_str(&body).unwrap();
    assert_eq!(report.class.as_deref(), Some("(7,0,0,0)"));
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../seeds/hept7.json");
    assert_eq!(body, cli(&["classify", "--json", path.to_str().unwrap()]));
}

#[tokio::test]
async fn classify_errors() {
    let bad = r#"{"points": [["1/0","1","1"],["0","1","1"],["1","1","1"],["2","3","1"],["5","7","1"],["3","-2","1"],["4","4","1"]]}"#;
    let (status, body) = send("POST", "/classify", bad.into()).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let v: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["kind"], "ParseError");

    let collinear = r#"{"points": [["0","0","1"],["1","0","1"],["2","0","1"],["0","1","1"],["5","7","1"],["3","-2","1"],["-4","9","1"]]}"#;
    let (status, body) = send("POST", "/classify", collinear.into()).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    let v: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["kind"], "NotTypical");
    assert_eq!(v["report"]["typicality"]["collinear_triples"][0], json!([0, 1, 2]));

    let (status, _) = send("POST", "/classify", "{".into()).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn seeds_match_cli_listing() {
    let (status, body) = send("GET", "/seeds", String::new()).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body, cli(&["seeds", "list", "--json"]));
    let v: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["seeds"].as_array().unwrap().len(), 18);
}

#[tokio::test]
async fn cremona_endpoint() {
    let mut req = seed_value("hept7");
    req["base"] = json!([0, 1, 2]);
    let (status, body) = send("POST", "/cremona", req.to_string()).await;
    assert_eq!(status, StatusCode::OK);
    let v: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["class"], "(3,4,0,0)_1");
    let image = ConfigFile::parse(&body).unwrap().to_configuration().unwrap();
    assert_eq!(heptad::q_class(&image).unwrap().to_string(), "(3,4,0,0)_1");

    req["base"] = json!([0, 1, 9]);
    let (status, _) = send("POST", "/cremona", req.to_string()).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn path_endpoint_certifies_and_reports_events() {
    let perturbed = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/hept7-perturbed.json")).unwrap();
    let req = json!({"start": seed_value("hept7"), "end": serde_json::from_str::<Value>(&perturbed).unwrap()});
    let (status, body) = send("POST", "/path", req.to_string()).await;
    assert_eq!(status, StatusCode::OK);
    let v: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["certified"], true);
    assert_eq!(v["events"], json!([]));

    let req = json!({"start": seed_value("c1600"), "end": seed_value("c1060"), "search": {}});
    let (status, body) = send("POST", "/path", req.to_string()).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert!(body.contains("ClassMismatch"));

    let base = heptad::atlas::seed("c1222").unwrap().configuration.clone();
    let delta = heptad::io::parse_rational("1/1000000000").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seen = (false, false);
    for _ in 0..200 {
        let planted = if seen.0 { planted_coconic(&base, &delta, &mut rng) } else { planted_collinear(&base, &delta, &mut rng) };
        let Some(p) = planted else { continue };
        let req = json!({
            "start": ConfigFile::from_configuration(p.path.start()),
            "end": ConfigFile::from_configuration(p.path.end()),
        });
        let (status, body) = send("POST", "/path", req.to_string()).await;
        assert_eq!(status, StatusCode::OK);
        let v: Value = serde_json::from_str(&body).unwrap();
        assert_eq!(v["certified"], false);
        let events = v["events"].as_array().unwrap();
        assert_eq!(events.len(), 1);
        let (kind, labels) = match &p.wall {
            WallKind::Collinear(l) => ("collinear", json!(l)),
            WallKind::Coconic(l) => ("coconic", json!(l)),
        };
        assert_eq!(events[0]["kind"], kind);
        assert_eq!(events[0]["labels"], labels);
        if p.wall.is_collinear() {
            seen.0 = true;
        } else {
            seen.1 = true;
            break;
        }
    }
    assert!(seen.0 && seen.1);
}

#[test]
fn serve_reads_port_from_environment() {
    use std::io::{BufRead, BufReader, Read, Write};
    use std::net::{TcpListener, TcpStream};
    use std::process::Stdio;

    let port = TcpListener::bind("127.0.0.1:0").unwrap().local_addr().unwrap().port();
    let mut child = Command::new(env!("CARGO_BIN_EXE_heptad"))
        .arg("serve")
        .env("HEPTAD_PORT", port.to_string())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut line = String::new();
    BufReader::new(child.stderr.take().unwrap()).read_line(&mut line).unwrap();
    assert!(line.contains(&format!("127.0.0.1:{port}")), "{line}");

    let mut stream = TcpStream::connect(("127.0.0.1", port)).unwrap();
    write!(stream, "GET /seeds HTTP/1.1\r\nHost: localhost\r\nConnection: close\r\n\r\n").unwrap();
    let mut resp = String::new();
    stream.read_to_string(&mut resp).unwrap();
    child.kill().unwrap();
    child.wait().unwrap();
    assert!(resp.starts_with("HTTP/1.1 200"), "{resp}");
    assert!(resp.ends_with(&cli(&["seeds", "list", "--json"])));
}
