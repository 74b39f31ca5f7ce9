use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("sym_exp needs a character without graded-degree-0 part; found one at (c={c}, w={w})")]
    DegreeZeroInput { c: i64, w: i64 },

    #[error("sym_log needs the unit 1 at (k,c,w)=(0,0,0) as the whole degree-0 slice")]
    MissingUnit,

    #[error("truncation {requested} exceeds the degree guardrail {cap} (set TCFA_MAX_DEGREE_CAP to override)")]
    DegreeCap { requested: usize, cap: usize },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("calibration failure: {0}")]
    Calibration(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code: 3 for internal invariant violations, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Calibration(_) => 3,
            _ => 2,
        }
    }
}
