//! Local JSON service: `POST /classify`, `POST /path`, `POST /cremona`,
//! `GET /seeds`. Every handler is a stateless call into the library.

use axum::body::Bytes;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use heptad::io::ConfigFile;
use heptad::Error;
use serde::de::DeserializeOwned;

use crate::api::{self, ErrorBody};

/// Default port when neither `--port` nor `HEPTAD_PORT` is given.
pub const DEFAULT_PORT: u16 = 7077;

pub fn router() -> Router {
    Router::new()
        .route("/classify", post(classify))
        .route("/path", post(path))
        .route("/cremona", post(cremona))
        .route("/seeds", get(seeds))
}

fn json(status: StatusCode, body: String) -> Response {
    (status, [(header::CONTENT_TYPE, "application/json")], body).into_response()
}

fn status_of(e: &Error) -> StatusCode {
    match e.kind() {
        "ParseError" => StatusCode::BAD_REQUEST,
        "NotTypical" | "ImageDegenerate" | "RepDegenerate" | "ClassMismatch" => StatusCode::UNPROCESSABLE_ENTITY,
        "UnknownSeed" => StatusCode::NOT_FOUND,
        _ => StatusCode::INTERNAL_SERVER_ERROR,
    }
}

fn error(e: &Error) -> Response {
    json(status_of(e), api::to_json(&ErrorBody::new(e)))
}

fn parse<T: DeserializeOwned>(body: &Bytes) -> Result<T, Response> {
    serde_json::from_slice(body).map_err(|e| error(&Error::Parse(e.to_string())))
}

async fn classify(body: Bytes) -> Response {
    let text = std::str::from_utf8(&body).map_err(|e| Error::Parse(e.to_string()));
    let file = match text.and_then(ConfigFile::parse) {
        Ok(f) => f,
        Err(e) => return error(&e),
    };
    match api::classify(&file) {
        Ok(report) => json(StatusCode::OK, report.to_json()),
        Err((e, report)) => json(status_of(&e), api::to_json(&ErrorBody { report, ..ErrorBody::new(&e) })),
    }
}

async fn path(body: Bytes) -> Response {
    let req: api::PathRequest = match parse(&body) {
        Ok(r) => r,
        Err(r) => return r,
    };
    match tokio::task::spawn_blocking(move || api::path(&req)).await {
        Ok(Ok(report)) => json(StatusCode::OK, api::to_json(&report)),
        Ok(Err(e)) => error(&e),
        Err(e) => error(&Error::InvariantViolated(e.to_string())),
    }
}

async fn cremona(body: Bytes) -> Response {
    let req: api::CremonaRequest = match parse(&body) {
        Ok(r) => r,
        Err(r) => return r,
    };
    match api::cremona_image(&req) {
        Ok(img) => json(StatusCode::OK, api::to_json(&img)),
        Err(e) => error(&e),
    }
}

async fn seeds() -> Response {
    match api::seeds_json() {
        Ok(s) => json(StatusCode::OK, s),
        Err(e) => error(&e),
    }
}

/// Serves on `127.0.0.1:port` until the process is stopped.
pub async fn serve(port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router()).await
}
