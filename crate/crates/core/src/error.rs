use thiserror::Error;

/// Failures raised by the solver stack.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("inadmissible state: rho={rho:e}, p11={p11:e}, det(p)={det:e}")]
    Admissibility { rho: f64, p11: f64, det: f64 },

    #[error("star-pressure iteration did not converge after {iterations} iterations (last p11={last:e})")]
    NoConvergence { iterations: usize, last: f64 },

    #[error("star pressure left the positive axis (p11={0:e})")]
    NonPositiveStar(f64),

    #[error("singular shock-side system for u2/p12 (det={0:e})")]
    SingularStarSystem(f64),

    #[error("degenerate 2x2 system in {context} (det={det:e})")]
    DegenerateSystem { context: &'static str, det: f64 },

    #[error("solver failed at step {step}, t={time:e}: {source}")]
    Step {
        step: usize,
        time: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("{axis}-sweep failed on line {line}: {source}")]
    Sweep {
        axis: char,
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
