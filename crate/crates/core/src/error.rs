use thiserror::Error;

use crate::configuration::TypicalityReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("zero coordinate triple")]
    ZeroVector,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("identical arguments")]
    IdenticalArguments,
    #[error("point {0} does not lie on the line")]
    PointNotOnLine(usize),
    #[error("configuration must have {expected} points, got {got}")]
    WrongSize { expected: &'static str, got: usize },
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("configuration is not simple: collinear triples {0:?}")]
    NotSimple(Vec<[usize; 3]>),
    #[error("configuration is not typical")]
    NotTypical(Box<TypicalityReport>),
    #[error("six-configuration is not cyclic (component count {0})")]
    NotCyclic(usize),
    #[error("adjacency graph has {0} components, expected 1, 2, 3 or 6")]
    InvalidComponentCount(usize),
    #[error("derivative code {0:?} is not a known class")]
    UnknownCode([usize; 4]),
    #[error("configuration is not heptagonal")]
    NotHeptagonal,
    #[error("no rotation or reflection of the heptagon yields the canonical index sequence")]
    CanonicalizationFailed,
    #[error("operation not applicable: {0}")]
    NotApplicable(String),
    #[error("ambiguous result: {0}")]
    Ambiguous(String),
    #[error("fingerprint not in calibration table: {0}")]
    UnknownFingerprint(String),
    #[error("point {0} representative vanishes along the path")]
    RepDegenerate(usize),
    #[error("endpoint classes differ: {0} vs {1}")]
    ClassMismatch(String, String),
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error("Cremona image for base {base:?} is not typical")]
    ImageDegenerate { base: [usize; 3] },
    #[error("seed {0} failed verification: {1}")]
    SeedCorrupt(String, String),
    #[error("unknown seed {0}")]
    UnknownSeed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Coarse error category used by the command line and the service.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) | Error::WrongSize { .. } | Error::DuplicatePoint(..) | Error::ZeroVector => "ParseError",
            Error::NotTypical(_) | Error::NotSimple(_) => "NotTypical",
            Error::ImageDegenerate { .. } => "ImageDegenerate",
            Error::RepDegenerate(_) => "RepDegenerate",
            Error::ClassMismatch(..) => "ClassMismatch",
            Error::UnknownSeed(_) => "UnknownSeed",
            _ => "Internal",
        }
    }
}
