//! Closed-form asymptotics and limit laws, in double precision.
//!
//! Exact counts grow like exp(c sqrt(n)); this module evaluates the main
//! terms they converge to:
//!
//! - [`hardy_ramanujan`]: p(n) ~ exp(C sqrt(n)) / (4 n sqrt(3)),
//!   C = pi sqrt(2/3);
//! - [`hagis_regular`]: the Hagis main term for A-regular partitions;
//! - [`pleqk_asymptotic`] / [`pk_asymptotic`]: the coefficient asymptotics
//!   for p_{<=k}(A;n) and p_k(A;n) obtained from Ingham's Tauberian theorem
//!   applied to the generating function
//!   (q^A;q^A)_inf / ((q;q)_inf (q^A;q^A)_k);
//! - [`gumbel_parts_cdf`] / [`gumbel_betti_cdf`]: the Gumbel limit laws for
//!   the number of parts divisible by A and for the Betti distributions of
//!   the quasihomogeneous Hilbert schemes (they coincide as functions once
//!   A = alpha + beta, since 2/(AC) = sqrt(6)/(pi A) and
//!   AC/2 = pi A / sqrt(6));
//! - the centering sequences [`k_threshold`] and [`delta_n`], the
//!   Erdos-Lehner tail approximation [`el_star_term`], and the Ingham
//!   parameter triple with its recombined coefficient estimate.
//!
//! Exact big-integer counts are converted to f64 only at comparison
//! boundaries; all tolerances live with the callers.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hilbert::TorusWeights;

/// Euler-Mascheroni constant, 16 significant digits.
pub const EULER_GAMMA: f64 = 0.5772156649015329;

/// C = pi sqrt(2/3) = 2.56509966..., the exponential growth rate of
/// sqrt-scale partition asymptotics.
pub fn growth_constant() -> f64 {
    PI * (2.0f64 / 3.0).sqrt()
}

/// C_A = sqrt(12) A^{-3/4} (A-1)^{1/4}, the Hagis prefactor.
pub fn hagis_prefactor(modulus: u64) -> f64 {
    let a = modulus as f64;
    12.0f64.sqrt() * a.powf(-0.75) * (a - 1.0).powf(0.25)
}

/// Hardy-Ramanujan main term: p(n) ~ exp(C sqrt(n)) / (4 n sqrt(3)).
pub fn hardy_ramanujan(n: u64) -> f64 {
    assert!(n >= 1);
    let nf = n as f64;
    (growth_constant() * nf.sqrt()).exp() / (4.0 * nf * 3.0f64.sqrt())
}

/// Hagis main term for the A-regular counts:
/// p_reg(A;n) ~ C_A (24n - 1 + A)^{-3/4}
///              exp(C sqrt((A-1)/A (n + (A-1)/24))).
pub fn hagis_regular(modulus: u64, n: u64) -> Result<f64> {
    validate_modulus(modulus)?;
    let a = modulus as f64;
    let nf = n as f64;
    let exponent = growth_constant() * ((a - 1.0) / a * (nf + (a - 1.0) / 24.0)).sqrt();
    Ok(hagis_prefactor(modulus) * (24.0 * nf - 1.0 + a).powf(-0.75) * exponent.exp())
}

fn ln_factorial(k: u64) -> f64 {
    (2..=k).map(|i| (i as f64).ln()).sum()
}

/// Main term of p_{<=k}(A;n) for fixed k as n grows:
///
///   24^{k/2-1/4} n^{k/2-3/4}
///   -------------------------------------------------- e^{2 pi sqrt((1/6)(1-1/A) n)}.
///   sqrt(2) (1-1/A)^{k/2-1/4} k! A^{k+1/2} (2 pi)^k
///
/// Evaluated in log space so large k and n stay finite.
pub fn pleqk_asymptotic(modulus: u64, k: u64, n: u64) -> Result<f64> {
    validate_modulus(modulus)?;
    let a = modulus as f64;
    let kf = k as f64;
    let nf = n as f64;
    let frac = 1.0 - 1.0 / a;
    let ln_value = (kf / 2.0 - 0.25) * 24.0f64.ln() + (kf / 2.0 - 0.75) * nf.ln()
        - (0.5 * 2.0f64.ln()
            + (kf / 2.0 - 0.25) * frac.ln()
            + ln_factorial(k)
            + (kf + 0.5) * a.ln()
            + kf * (2.0 * PI).ln())
        + 2.0 * PI * (frac * nf / 6.0).sqrt();
    Ok(ln_value.exp())
}

/// Main term of p_k(A;n): the same expression with n - Ak in place of n,
/// by the identity p_k(A;n) = p_{<=k}(A;n-Ak). Requires n > Ak.
pub fn pk_asymptotic(modulus: u64, k: u64, n: u64) -> Result<f64> {
    validate_modulus(modulus)?;
    match k.checked_mul(modulus) {
        Some(ak) if ak < n => pleqk_asymptotic(modulus, k, n - ak),
        _ => Err(Error::AsymptoticOutOfRange { modulus, k, n }),
    }
}

/// Which of the two Gumbel normalizations a [`GumbelSpec`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GumbelKind {
    /// Limit of p_{<=k}(A;n)/p(n) at k = k_{A,n}(x): CDF
    /// exp(-(2/(AC)) exp(-xAC/2)). Valid for A >= 1 (A = 1 is the
    /// classical Erdos-Lehner limit).
    Parts,
    /// Limit of the rescaled Betti distribution of X^\[n\]_{alpha,beta} with
    /// A = alpha + beta: CDF exp(-(sqrt6/(pi A)) exp(-pi A x / sqrt6)).
    /// Requires A >= 2.
    Betti,
}

/// A Gumbel limit law determined by the effective modulus A.
/// Location mu = s ln s and scale s satisfy CDF(x) = exp(-e^{-(x-mu)/s});
/// for both kinds s = 2/(AC) = sqrt(6)/(pi A).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GumbelSpec {
    modulus: u64,
    kind: GumbelKind,
}

impl GumbelSpec {
    pub fn parts(modulus: u64) -> Self {
        assert!(modulus >= 1);
        Self {
            modulus,
            kind: GumbelKind::Parts,
        }
    }

    pub fn betti(modulus: u64) -> Self {
        assert!(modulus >= 2, "betti kind requires alpha + beta >= 2");
        Self {
            modulus,
            kind: GumbelKind::Betti,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn kind(&self) -> GumbelKind {
        self.kind
    }

    /// Multiplier of the inner exponential: 2/(AC), resp. sqrt(6)/(pi A).
    pub fn prefactor(&self) -> f64 {
        let a = self.modulus as f64;
        match self.kind {
            GumbelKind::Parts => 2.0 / (a * growth_constant()),
            GumbelKind::Betti => 6.0f64.sqrt() / (PI * a),
        }
    }

    /// Decay rate of the inner exponential: AC/2, resp. pi A / sqrt(6).
    pub fn decay_rate(&self) -> f64 {
        let a = self.modulus as f64;
        match self.kind {
            GumbelKind::Parts => a * growth_constant() / 2.0,
            GumbelKind::Betti => PI * a / 6.0f64.sqrt(),
        }
    }

    pub fn cdf(&self, x: f64) -> f64 {
        (-self.prefactor() * (-self.decay_rate() * x).exp()).exp()
    }

    /// Scale parameter s = 1 / decay rate.
    pub fn scale(&self) -> f64 {
        1.0 / self.decay_rate()
    }

    /// Location parameter mu = s ln(prefactor).
    pub fn location(&self) -> f64 {
        self.scale() * self.prefactor().ln()
    }

    /// Mean s (ln s + gamma); the prefactor equals the scale here.
    pub fn mean(&self) -> f64 {
        let s = self.prefactor();
        s * (s.ln() + EULER_GAMMA)
    }

    /// Variance 1/A^2 exactly (= pi^2 s^2 / 6 for this scale).
    pub fn variance(&self) -> f64 {
        let a = self.modulus as f64;
        1.0 / (a * a)
    }
}

/// Gumbel CDF exp(-(2/(AC)) exp(-xAC/2)) for the number of parts divisible
/// by A; A >= 1.
pub fn gumbel_parts_cdf(modulus: u64, x: f64) -> f64 {
    GumbelSpec::parts(modulus).cdf(x)
}

/// Gumbel CDF exp(-(sqrt6/(pi A)) exp(-pi A x/sqrt6)) for the rescaled
/// Betti distributions, A = alpha + beta >= 2. Identical to
/// [`gumbel_parts_cdf`] at the same x and A.
pub fn gumbel_betti_cdf(modulus: u64, x: f64) -> f64 {
    GumbelSpec::betti(modulus).cdf(x)
}

/// Closed-form (mean, variance) of the Gumbel law.
pub fn gumbel_moments(modulus: u64, kind: GumbelKind) -> (f64, f64) {
    let spec = match kind {
        GumbelKind::Parts => GumbelSpec::parts(modulus),
        GumbelKind::Betti => GumbelSpec::betti(modulus),
    };
    (spec.mean(), spec.variance())
}

/// The part-count threshold k_{A,n}(x) = sqrt(n) log(n)/(AC) + x sqrt(n).
pub fn k_threshold(modulus: u64, n: u64, x: f64) -> f64 {
    assert!(modulus >= 1 && n >= 1);
    let nf = n as f64;
    nf.sqrt() * nf.ln() / (modulus as f64 * growth_constant()) + x * nf.sqrt()
}

/// floor(k_{A,n}(x)) clamped below at zero.
pub fn k_threshold_floor(modulus: u64, n: u64, x: f64) -> u64 {
    let k = k_threshold(modulus, n, x).floor();
    if k < 0.0 {
        0
    } else {
        k as u64
    }
}

/// The Betti recentering delta_n(alpha,beta)
/// = sqrt(6)/(pi (alpha+beta)) sqrt(n) log(n).
pub fn delta_n(weights: &TorusWeights, n: u64) -> f64 {
    assert!(n >= 1);
    let nf = n as f64;
    6.0f64.sqrt() / (PI * weights.weight_sum() as f64) * nf.sqrt() * nf.ln()
}

/// Erdos-Lehner tail approximation for S*_k(m;j) = S_k(m;j)/p(j):
/// (1/m!) ((2/C) sqrt(j) exp(-Ck/(2 sqrt(j))))^m. Independent of A.
pub fn el_star_term(k: u64, j: u64, m: u64) -> f64 {
    assert!(j >= 1);
    let c = growth_constant();
    let jf = j as f64;
    let base = 2.0 / c * jf.sqrt() * (-c * k as f64 / (2.0 * jf.sqrt())).exp();
    let mut value = 1.0;
    for i in 1..=m {
        value *= base / i as f64;
    }
    value
}

/// The parameter triple fed to Ingham's Tauberian theorem for the
/// generating function of p_{<=k}(A;n): the radial behavior is
/// f(e^{-t}) ~ lambda t^power e^{growth/t} with
/// lambda = 1/(k! A^{k+1/2}), power = -k, growth = (pi^2/6)(1 - 1/A).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InghamParameters {
    pub lambda: f64,
    pub power: f64,
    pub growth: f64,
}

impl InghamParameters {
    /// The theorem's output: a(n) ~ lambda growth^{power/2 + 1/4} /
    /// (2 sqrt(pi)) * n^{-(power/2 + 3/4)} * e^{2 sqrt(growth n)}.
    /// Algebraically identical to [`pleqk_asymptotic`]; evaluated along an
    /// independent path so the equality is a genuine machine-precision
    /// check.
    pub fn coefficient_estimate(&self, n: u64) -> f64 {
        let nf = n as f64;
        self.lambda * self.growth.powf(self.power / 2.0 + 0.25) / (2.0 * PI.sqrt())
            * nf.powf(-(self.power / 2.0 + 0.75))
            * (2.0 * (self.growth * nf).sqrt()).exp()
    }
}

/// Ingham parameters (lambda, power, growth) for fixed A >= 2 and k.
pub fn ingham_parameters(modulus: u64, k: u64) -> Result<InghamParameters> {
    validate_modulus(modulus)?;
    let a = modulus as f64;
    Ok(InghamParameters {
        lambda: (-(ln_factorial(k) + (k as f64 + 0.5) * a.ln())).exp(),
        power: -(k as f64),
        growth: PI * PI / 6.0 * (1.0 - 1.0 / a),
    })
}

fn validate_modulus(modulus: u64) -> Result<()> {
    if modulus < 2 {
        Err(Error::ModulusTooSmall(modulus))
    } else {
        Ok(())
    }
}
