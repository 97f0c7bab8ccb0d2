//! Exact partition statistics and the Betti distributions of Hilbert schemes
//! of points on the plane.
//!
//! The crate has four layers:
//!
//! - [`partition`]: exact big-integer counting of partitions under various
//!   restrictions (at most `k` parts, `A`-regular, at most / exactly `k`
//!   parts divisible by `A`), the Erdos-Lehner inclusion-exclusion sums,
//!   and a brute-force enumeration oracle.
//! - [`qseries`]: truncated q-series arithmetic with exact coefficients,
//!   giving an independent generating-function route to every count.
//! - [`hilbert`]: Poincare polynomials of the Hilbert schemes `X^[n]` and
//!   their quasihomogeneous fixed-point loci `X^[n]_{alpha,beta}`, the
//!   normalized Betti cumulative distribution, and figure point clouds.
//! - [`asymptotics`]: the closed-form limit laws these exact quantities
//!   converge to (Hardy-Ramanujan, Hagis, Ingham-type coefficient
//!   asymptotics, and Gumbel cumulative distributions).

pub mod asymptotics;
pub mod error;
pub mod hilbert;
pub mod partition;
pub mod qseries;

pub use error::{Error, Result};

/// Exact nonnegative count. All partition counts and series coefficients
/// that represent counts are carried in this type; overflow is impossible
/// and arithmetic is exact.
pub type BigCount = num_bigint::BigUint;
