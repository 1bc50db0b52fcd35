//! Error type shared across the library.

use thiserror::Error;

/// Errors produced by constructors, evaluators, and searches.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument fell outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A zero-product form of odd length cannot be folded into a real
    /// trigonometric polynomial of integer order.
    #[error("zero form has odd length {m}; conversion needs an even number of zeros")]
    OddDegree { m: usize },

    /// Self-inversiveness is defined for coefficient slices of odd length
    /// (orders 0..=2n of a degree-2n polynomial).
    #[error("coefficient slice has even length {len}; expected odd length 2n+1")]
    EvenLength { len: usize },

    /// Zero angles must close up: twice the conjugate-pair angles plus the
    /// unimodular angles must be an integer multiple of 2 pi.
    #[error("zero angles do not close up: angle sum / 2pi = {sum} is not near an integer")]
    ClosureViolated { sum: f64 },

    /// A level-set threshold must be strictly positive.
    #[error("invalid threshold h = {h}; need h > 0")]
    InvalidThreshold { h: f64 },

    /// Both harmonic coefficients vanished; the phase of 0 is undefined.
    #[error("cannot reduce the zero harmonic: A = B = 0")]
    ZeroHarmonic,
}

pub type Result<T> = std::result::Result<T, Error>;
