use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what} = {value} is out of range ({range})")]
    Range {
        what: &'static str,
        value: u64,
        range: &'static str,
    },

    /// `n` has no nonzero zero divisors, so Γ(ℤ_n) has no vertices.
    #[error("graph is empty: Z_{0} has no nonzero zero divisors")]
    EmptyGraph(u64),

    #[error("{what} has size {size}, exceeding the cap of {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("no closed form for n = {n} (family {family})")]
    UnsupportedFamily { n: u64, family: String },

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
