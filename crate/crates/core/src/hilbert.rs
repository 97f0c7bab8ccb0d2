//! Poincare polynomials and Betti distributions of Hilbert schemes of
//! points on the plane.
//!
//! For the full Hilbert scheme X^\[n\] the Poincare polynomial is
//! P(X^\[n\];T) = sum_{j=0}^{2n-2} b_j(n) T^j with all odd-degree Betti
//! numbers zero; the even coefficient b_{2j}(n) counts partitions of n with
//! exactly n - j parts, equivalently p_{<=n-j}(j).
//!
//! For the quasihomogeneous fixed-point locus X^\[n\]_{alpha,beta} of the
//! one-dimensional torus with coprime weights (alpha, beta), the
//! Buryak-Feigin generating function
//!
//!   sum_n P(X^\[n\]_{alpha,beta};T) q^n
//!     = (q^A;q^A)_inf / ((q;q)_inf (T^2 q^A;q^A)_inf),  A = alpha + beta,
//!
//! identifies the coefficient of T^{2j} with p_j(A;n), so the polynomial
//! depends only on alpha + beta and evaluates to p(n) at T = 1.
//!
//! The normalized cumulative distribution of the Betti numbers is
//!   Phi_n(alpha,beta;x) = (1/p(n)) sum_{j<=x} b_j = p_{<=x/2}(A;n)/p(n),
//! which, recentered by delta_n(alpha,beta) and rescaled by 2 sqrt(n),
//! converges to the Gumbel law in [`crate::asymptotics::gumbel_betti_cdf`].

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::asymptotics;
use crate::error::{Error, Result};
use crate::partition;
use crate::BigCount;

/// Coprime positive weights (alpha, beta) of the one-dimensional subtorus
/// {(t^alpha, t^beta)} acting on the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusWeights {
    alpha: u64,
    beta: u64,
}

impl TorusWeights {
    pub fn new(alpha: u64, beta: u64) -> Result<Self> {
        if alpha == 0 || beta == 0 {
            return Err(Error::NonPositiveWeights(alpha, beta));
        }
        if alpha.gcd(&beta) != 1 {
            return Err(Error::NonCoprimeWeights(alpha, beta));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    /// alpha + beta, the effective modulus A. Always >= 2.
    pub fn weight_sum(&self) -> u64 {
        self.alpha + self.beta
    }
}

/// Which Hilbert scheme a [`BettiPolynomial`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BettiFlavor {
    /// The full Hilbert scheme X^\[n\] of the plane.
    Plane,
    /// The quasihomogeneous locus cut out by a torus action.
    Quasihomogeneous(TorusWeights),
}

/// A Poincare polynomial in T with only even-degree terms: entry j of
/// `half_coeffs` is the Betti number b_{2j}. Evaluation at T = 1 gives p(n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiPolynomial {
    n: u64,
    flavor: BettiFlavor,
    half_coeffs: Vec<BigCount>,
}

impl BettiPolynomial {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn flavor(&self) -> BettiFlavor {
        self.flavor
    }

    /// Coefficients indexed by half-degree: element j is b_{2j}.
    pub fn half_coeffs(&self) -> &[BigCount] {
        &self.half_coeffs
    }

    /// b_degree; zero for odd degrees and degrees above the top.
    pub fn betti_number(&self, degree: u64) -> BigCount {
        if !degree.is_multiple_of(2) {
            return BigCount::default();
        }
        self.half_coeffs
            .get((degree / 2) as usize)
            .cloned()
            .unwrap_or_default()
    }

    /// Largest tracked degree, 2 * (len - 1).
    pub fn top_degree(&self) -> u64 {
        2 * (self.half_coeffs.len() as u64 - 1)
    }

    /// P(.;1) = sum of all Betti numbers = p(n).
    pub fn evaluate_at_one(&self) -> BigCount {
        self.half_coeffs.iter().sum()
    }
}

/// Poincare polynomial of the quasihomogeneous Hilbert scheme
/// X^\[n\]_{alpha,beta}: b_{2j} = p_j(alpha+beta; n) for
/// 0 <= j <= floor(n / (alpha+beta)).
pub fn quasihomogeneous_poincare(weights: &TorusWeights, n: u64) -> BettiPolynomial {
    let half_coeffs = partition::exact_multiple_counts(weights.weight_sum(), n)
        .expect("weight sum is at least 2");
    BettiPolynomial {
        n,
        flavor: BettiFlavor::Quasihomogeneous(*weights),
        half_coeffs,
    }
}

/// Poincare polynomial of the full Hilbert scheme X^\[n\], degree 2n - 2:
/// b_{2j} counts partitions of n with exactly n - j parts, i.e.
/// p_{<=n-j}(j). Requires n >= 1.
pub fn plane_poincare(n: u64) -> Result<BettiPolynomial> {
    if n == 0 {
        return Err(Error::PlanePoincareOfZero);
    }
    let half_coeffs = (0..n)
        .map(|j| partition::partition_count_max_parts(j, n - j))
        .collect();
    Ok(BettiPolynomial {
        n,
        flavor: BettiFlavor::Plane,
        half_coeffs,
    })
}

/// The Betti cumulative distribution
/// Phi_n(alpha,beta;x) = (1/p(n)) sum_{j<=x} b_j(alpha,beta;n)
///                     = p_{<=floor(x/2)}(alpha+beta; n) / p(n),
/// a right-continuous step function with jumps at even integers, inclusive
/// at integer x. The exact rational mass is converted to f64 only here, at
/// the module boundary.
pub fn betti_cdf(weights: &TorusWeights, n: u64, x: f64) -> f64 {
    if x < 0.0 {
        return 0.0;
    }
    let modulus = weights.weight_sum();
    let top = n / modulus;
    let j = (x / 2.0).floor();
    if j >= top as f64 {
        return 1.0;
    }
    let mass = partition::count_multiples_at_most(modulus, j as u64, n)
        .expect("weight sum is at least 2");
    big_ratio(&mass, &partition::partition_count(n))
}

/// Phi_n evaluated at the recentered, rescaled argument
/// 2 sqrt(n) x + delta_n(alpha,beta); converges pointwise to
/// [`crate::asymptotics::gumbel_betti_cdf`] at alpha + beta as n grows.
pub fn rescaled_betti_cdf(weights: &TorusWeights, n: u64, x: f64) -> f64 {
    assert!(n >= 1, "rescaling requires n >= 1");
    let arg = 2.0 * (n as f64).sqrt() * x + asymptotics::delta_n(weights, n);
    betti_cdf(weights, n, arg)
}

/// One normalized point of a Betti distribution plot.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FigurePoint {
    /// Degree scaled into [0, 1].
    pub x: f64,
    /// Betti number divided by p(n).
    pub y: f64,
}

/// The point cloud {(2m / top_degree, b_{2m} / p(n))} of a Poincare
/// polynomial; one point per even degree, masses summing to 1.
pub fn figure_points(poly: &BettiPolynomial) -> Vec<FigurePoint> {
    let total = poly.evaluate_at_one();
    let top_half = poly.half_coeffs().len() - 1;
    poly.half_coeffs()
        .iter()
        .enumerate()
        .map(|(m, b)| FigurePoint {
            x: if top_half == 0 {
                0.0
            } else {
                m as f64 / top_half as f64
            },
            y: big_ratio(b, &total),
        })
        .collect()
}

/// Exact ratio of two big counts as f64. Safe well past desk scale: p(n)
/// only overflows f64 near n = 18000; past that the ratio is formed in
/// log space, which stays exact to f64 precision as long as the ratio
/// itself is representable.
pub fn big_ratio(numerator: &BigCount, denominator: &BigCount) -> f64 {
    use num_traits::Zero;
    if numerator.is_zero() {
        return 0.0;
    }
    match (numerator.to_f64(), denominator.to_f64()) {
        (Some(num), Some(den)) if num.is_finite() && den.is_finite() => num / den,
        _ => (ln_big(numerator) - ln_big(denominator)).exp(),
    }
}

/// Natural log of a positive big integer: mantissa from the top 64 bits,
/// the rest as a power of two.
fn ln_big(value: &BigCount) -> f64 {
    let bits = value.bits();
    if bits <= 64 {
        return value.to_f64().expect("fits").ln();
    }
    let top = (value >> (bits - 64)).to_f64().expect("64-bit mantissa");
    top.ln() + (bits - 64) as f64 * std::f64::consts::LN_2
}
