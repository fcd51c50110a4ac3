use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error(
        "degenerate beta_{index} = {value}: Pochhammer denominator vanishes for degree {degree}"
    )]
    DegenerateBeta {
        index: usize,
        value: String,
        degree: usize,
    },

    #[error("change of variables is singular at {0}")]
    MapSingularity(String),

    #[error("cannot cancel {r} parameter pairs: {reason}")]
    PairMismatch { r: usize, reason: String },

    #[error("zeros are not separated: min separation {min_separation:e} <= floor {floor:e}")]
    DegenerateZeros { min_separation: f64, floor: f64 },

    #[error("special case `{case}` expects p={p}, q={q}, got p={got_p}, q={got_q}")]
    CaseArityMismatch {
        case: String,
        p: usize,
        q: usize,
        got_p: usize,
        got_q: usize,
    },

    #[error("unknown special case `{0}`")]
    UnknownCase(String),

    #[error("eigenvalue iteration did not converge after {iterations} sweeps ({converged} of {n} eigenvalues deflated)")]
    NoConvergence {
        iterations: usize,
        converged: usize,
        n: usize,
    },

    #[error("sampler exhausted {attempts} attempts for draw {draw_index}")]
    SamplingExhausted { draw_index: u64, attempts: u32 },

    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
