//! Error type shared by all modules of the crate.

/// Errors for invalid parameters. Numeric contract violations that the
/// type system cannot express (a modulus below 2, non-coprime torus
/// weights, an enumeration request beyond the oracle cap) are reported
/// through this enum rather than by panicking.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("torus weights must be positive, got ({0}, {1})")]
    NonPositiveWeights(u64, u64),
    #[error("torus weights must be coprime, got ({0}, {1})")]
    NonCoprimeWeights(u64, u64),
    #[error("partition size {n} exceeds the enumeration cap {cap}")]
    EnumerationCapExceeded { n: u64, cap: u64 },
    #[error("series divisor must have constant term 1, got {0}")]
    NonUnitConstantTerm(num_bigint::BigInt),
    #[error("parts must be positive and nonincreasing")]
    MalformedPartition,
    #[error("the plane Hilbert scheme Poincare polynomial requires n >= 1")]
    PlanePoincareOfZero,
    #[error("asymptotic for exactly k multiples requires n > A*k, got n={n}, A={modulus}, k={k}")]
    AsymptoticOutOfRange { modulus: u64, k: u64, n: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
