//! Request and response bodies shared by the command line and the service.

use heptad::atlas::{builtin_seeds, seed_file_json};
use heptad::cremona::{cremona, CremonaBase};
use heptad::deformation::{find_q_path, is_q_isotopy, LinearPath, SearchConfig, WallEventView};
use heptad::io::{ClassReport, ConfigFile};
use heptad::{q_class, Config, Error, Result};
use serde::{Deserialize, Serialize};

/// Process exit status for each error kind.
pub fn exit_code(e: &Error) -> i32 {
    match e.kind() {
        "ParseError" => 2,
        "NotTypical" => 3,
        "ImageDegenerate" => 4,
        "RepDegenerate" => 5,
        "ClassMismatch" => 7,
        _ => 1,
    }
}

/// Exit status of a path whose segment crosses walls or whose search failed.
pub const EXIT_NOT_CERTIFIED: i32 = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ClassReport>,
}

impl ErrorBody {
    pub fn new(e: &Error) -> Self {
        ErrorBody { kind: e.kind().to_string(), detail: e.to_string(), report: None }
    }
}

/// Classifies a configuration file. A non-typical 7-configuration yields
/// `NotTypical` together with its partial report.
pub fn classify(file: &ConfigFile) -> std::result::Result<ClassReport, (Error, Option<ClassReport>)> {
    let c = file.to_configuration().map_err(|e| (e, None))?;
    let report = ClassReport::build(&c).map_err(|e| (e, None))?;
    if report.is_typical() {
        Ok(report)
    } else {
        let e = match c.require_typical() {
            Err(e) => e,
            Ok(()) => Error::InvariantViolated("typicality disagrees".into()),
        };
        Err((e, Some(report)))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchParams {
    #[serde(default)]
    pub budget: Option<usize>,
    #[serde(default)]
    pub seed: Option<u64>,
}

impl SearchParams {
    pub fn config(&self) -> SearchConfig {
        let d = SearchConfig::default();
        SearchConfig { budget: self.budget.unwrap_or(d.budget), seed: self.seed.unwrap_or(d.seed), ..d }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRequest {
    pub start: ConfigFile,
    pub end: ConfigFile,
    /// Searches for a piecewise-linear path instead of checking the segment.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchParams>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathReport {
    pub certified: bool,
    pub classes: [String; 2],
    /// Walls crossed by the straight segment (empty for a search).
    pub events: Vec<WallEventView>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub waypoints: Option<Vec<ConfigFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relabeling: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub calls: Option<usize>,
}

fn seven(file: &ConfigFile) -> Result<Config> {
    let c = file.to_configuration()?;
    if c.len() != 7 {
        return Err(Error::WrongSize { expected: "7", got: c.len() });
    }
    c.require_typical()?;
    Ok(c)
}

pub fn path(req: &PathRequest) -> Result<PathReport> {
    let (a, b) = (seven(&req.start)?, seven(&req.end)?);
    let classes = [q_class(&a)?.name().to_string(), q_class(&b)?.name().to_string()];
    if let Some(params) = &req.search {
        let found = find_q_path(&a, &b, params.config())?;
        return Ok(match found {
            Some(p) => PathReport {
                certified: true,
                classes,
                events: Vec::new(),
                waypoints: Some(p.waypoints.iter().map(ConfigFile::from_configuration).collect()),
                relabeling: Some(p.relabeling),
                calls: Some(p.calls),
            },
            None => PathReport { certified: false, classes, events: Vec::new(), waypoints: None, relabeling: None, calls: None },
        });
    }
    let check = is_q_isotopy(&LinearPath::new(a, b)?)?;
    Ok(PathReport {
        certified: check.certified,
        classes,
        events: check.events.iter().map(|e| e.view()).collect(),
        waypoints: None,
        relabeling: None,
        calls: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CremonaRequest {
    #[serde(flatten)]
    pub config: ConfigFile,
    pub base: [usize; 3],
}

/// Image configuration, with its class as an extra field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CremonaResponse {
    #[serde(flatten)]
    pub config: ConfigFile,
    pub class: String,
}

pub fn cremona_image(req: &CremonaRequest) -> Result<CremonaResponse> {
    let c = seven(&req.config)?;
    let [i, j, k] = req.base;
    if [i, j, k].iter().any(|&l| l >= 7) {
        return Err(Error::Parse(format!("base {:?} has a label outside 0..7", req.base)));
    }
    let base = CremonaBase::new(i, j, k).map_err(|e| Error::Parse(e.to_string()))?;
    let img = cremona(&c, base)?;
    Ok(CremonaResponse { config: ConfigFile::from_configuration(&img), class: q_class(&img)?.name().to_string() })
}

/// The seed library in its file format.
pub fn seeds_json() -> Result<String> {
    Ok(seed_file_json(builtin_seeds()?))
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
