use thiserror::Error;

/// Errors reported by the library.
///
/// Exactness violations (a fraction-free division leaving a remainder, an
/// alternant quotient that does not divide, an explicit sum that does not
/// reduce to an integer) are bugs, not inputs, and panic instead.
#[derive(Debug, Error)]
pub enum Error {
    /// Cofactor expansion is a cross-check, not an engine; it refuses large inputs.
    #[error("laplace expansion is limited to {limit}x{limit} matrices, got {size}x{size}")]
    SizeGuard { size: usize, limit: usize },

    /// The alternant denominator vanishes when two alphabet entries coincide.
    #[error("bialternant evaluation requires pairwise-distinct alphabet entries")]
    DegenerateAlphabet,

    /// A parameter lies outside the domain of the requested method.
    #[error("{0}")]
    Domain(String),

    /// A guard coefficient of the fitted series came out nonzero, so the
    /// hypothesised denominator does not generate the sequence.
    #[error("generating-function fit failed for (a,b)=({a},{b}): coefficient of q^{index} is {value}, expected 0")]
    FitFailure {
        a: usize,
        b: usize,
        index: usize,
        value: String,
    },

    /// A rational function was built with den(0) = 0; no power series exists at q = 0.
    #[error("denominator has zero constant term")]
    ZeroConstantTerm,
}

pub type Result<T> = std::result::Result<T, Error>;
