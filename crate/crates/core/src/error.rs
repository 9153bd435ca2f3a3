use thiserror::Error;

/// Errors produced by the special functions, eigenvalue searches and the
/// spectrum driver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    #[error(
        "series did not converge after {terms} terms (partial sum {partial_sum:e}, last term {last_term:e})"
    )]
    Convergence {
        terms: usize,
        partial_sum: f64,
        last_term: f64,
    },

    #[error("evaluation error in {func}: {detail}")]
    Evaluation { func: &'static str, detail: String },

    #[error("no sign change for {what} in window [{lo}, {hi}] (found {found} of {wanted})")]
    Search {
        what: String,
        lo: f64,
        hi: f64,
        found: usize,
        wanted: usize,
    },

    #[error("root refinement failed on bracket [{lo}, {hi}] after {iterations} iterations")]
    Root { lo: f64, hi: f64, iterations: usize },

    #[error("quadrature did not reach tolerance: estimate {estimate:e}, error {error:e} after {intervals} intervals")]
    Integration {
        estimate: f64,
        error: f64,
        intervals: usize,
    },

    #[error("pair (nu={nu}, m={m}) is not reachable: {reason}")]
    Classification { nu: f64, m: f64, reason: String },

    #[error("impedance undefined at a field null ({component} = 0)")]
    UndefinedImpedance { component: &'static str },

    #[error("ODE integration failed: {0}")]
    Ode(String),

    #[error("unknown fixture `{0}`")]
    FixtureNotFound(String),

    #[error("fixture parse error at line {line}: {detail}")]
    FixtureParse { line: usize, detail: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("mode (m={m}, k={k:?}, n={n}): {source}")]
    Mode {
        m: f64,
        k: Option<u32>,
        n: u32,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        func,
        detail: detail.into(),
    }
}
