//! Truncated q-series arithmetic with exact integer coefficients.
//!
//! A [`QSeries`] holds the coefficients of a formal power series in q up to
//! an explicit truncation order N; every coefficient through q^N is exact.
//! Coefficients are signed: finite Pochhammer products such as
//! (q;q)_3 = 1 - q - q^2 + q^4 + q^5 - q^6 have negative entries even though
//! every series that represents counts is nonnegative.
//!
//! The module provides the q-Pochhammer symbols
//! (q^c; q^s)_k = prod_{i=0}^{k-1} (1 - q^{c+is}) and their truncated
//! infinite versions, exact multiplication and division (divisor constant
//! term 1, so quotients of the counting kind stay integral), and the two
//! generating functions
//!
//! - (q^A;q^A)_inf / ((q;q)_inf (T q^A;q^A)_inf), whose T^k q^n coefficient
//!   is p_k(A;n)  ([`coefficients_exact_multiples`]);
//! - (q^A;q^A)_inf / ((q;q)_inf (q^A;q^A)_k), whose q^n coefficient is
//!   p_{<=k}(A;n)  ([`coefficients_at_most_multiples`]).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::BigCount;

/// A power series in q truncated (inclusively) at an explicit order.
/// Arithmetic propagates the truncation as the minimum of the operands;
/// reading past it is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    /// Series with the given coefficients; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least q^0");
        Self { coeffs }
    }

    /// The constant series 1 + O(q^{truncation+1}).
    pub fn one(truncation: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); truncation + 1];
        coeffs[0] = BigInt::one();
        Self { coeffs }
    }

    /// Inclusive order of validity: coefficients 0..=truncation are exact.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of q^n. Panics when n exceeds the truncation order:
    /// such a read would silently return garbage, not zero.
    pub fn coeff(&self, n: usize) -> &BigInt {
        assert!(
            n <= self.truncation(),
            "coefficient q^{n} requested beyond truncation order {}",
            self.truncation()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact product, truncated at the smaller of the two orders.
    pub fn multiply(&self, other: &QSeries) -> QSeries {
        let trunc = self.truncation().min(other.truncation());
        let mut out = vec![BigInt::zero(); trunc + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(trunc + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(trunc + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        QSeries { coeffs: out }
    }

    /// Exact quotient by back-substitution. The divisor must have constant
    /// term 1, which keeps every coefficient integral; this covers all the
    /// Pochhammer quotients that arise here.
    pub fn divide(&self, divisor: &QSeries) -> Result<QSeries> {
        if !divisor.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm(divisor.coeffs[0].clone()));
        }
        let trunc = self.truncation().min(divisor.truncation());
        let mut out = vec![BigInt::zero(); trunc + 1];
        for n in 0..=trunc {
            let mut v = self.coeffs[n].clone();
            for i in 1..=n {
                if divisor.coeffs[i].is_zero() {
                    continue;
                }
                v -= &divisor.coeffs[i] * &out[n - i];
            }
            out[n] = v;
        }
        Ok(QSeries { coeffs: out })
    }

    /// q^e * self, at the same truncation order.
    pub fn shift_up(&self, e: usize) -> QSeries {
        let trunc = self.truncation();
        let mut out = vec![BigInt::zero(); trunc + 1];
        if e <= trunc {
            out[e..].clone_from_slice(&self.coeffs[..=trunc - e]);
        }
        QSeries { coeffs: out }
    }

    /// In-place multiplication by (1 - q^e); exact and sparse.
    fn mul_one_minus_power(&mut self, e: usize) {
        if e > self.truncation() {
            return; // the factor is 1 + O(q^{>N})
        }
        for n in (e..=self.truncation()).rev() {
            let sub = self.coeffs[n - e].clone();
            self.coeffs[n] -= sub;
        }
    }
}

/// The finite q-Pochhammer product prod_{i=0}^{k-1} (1 - q^{offset + i*step}),
/// truncated at `truncation`.
pub fn pochhammer_finite(offset: u64, step: u64, k: u64, truncation: usize) -> QSeries {
    assert!(offset >= 1 && step >= 1);
    let mut series = QSeries::one(truncation);
    for i in 0..k {
        let e = offset + i * step;
        if e as usize > truncation {
            break; // remaining factors are 1 to this order
        }
        series.mul_one_minus_power(e as usize);
    }
    series
}

/// The infinite product prod_{i>=0} (1 - q^{offset + i*step}) truncated at
/// `truncation`; exact to that order since the dropped factors are
/// 1 + O(q^{>truncation}).
pub fn pochhammer_infinite(offset: u64, step: u64, truncation: usize) -> QSeries {
    assert!(offset >= 1 && step >= 1);
    let factors = if offset as usize > truncation {
        0
    } else {
        (truncation as u64 - offset) / step + 1
    };
    pochhammer_finite(offset, step, factors, truncation)
}

/// The series (q^A;q^A)_inf / ((q;q)_inf (q^A;q^A)_k) = sum_n p_{<=k}(A;n) q^n.
pub fn coefficients_at_most_multiples(modulus: u64, k: u64, truncation: usize) -> Result<QSeries> {
    if modulus < 2 {
        return Err(Error::ModulusTooSmall(modulus));
    }
    let numerator = pochhammer_infinite(modulus, modulus, truncation);
    let denominator = pochhammer_infinite(1, 1, truncation)
        .multiply(&pochhammer_finite(modulus, modulus, k, truncation));
    numerator.divide(&denominator)
}

/// A series in T and q, with entry (k, n) the exact coefficient of T^k q^n,
/// valid for all k <= kmax and n <= truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    rows: Vec<Vec<BigCount>>,
}

impl BivariateSeries {
    pub fn kmax(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn truncation(&self) -> usize {
        self.rows[0].len() - 1
    }

    /// Coefficient of T^k q^n. Panics outside the tracked ranges.
    pub fn coeff(&self, k: usize, n: usize) -> &BigCount {
        assert!(
            k <= self.kmax() && n <= self.truncation(),
            "coefficient T^{k} q^{n} beyond tracked orders ({}, {})",
            self.kmax(),
            self.truncation()
        );
        &self.rows[k][n]
    }

    /// The T^k row as a slice of q-coefficients.
    pub fn row(&self, k: usize) -> &[BigCount] {
        &self.rows[k]
    }
}

/// The bivariate expansion of (q^A;q^A)_inf / ((q;q)_inf (T q^A;q^A)_inf):
/// entry (k, n) is p_k(A;n), the number of partitions of n with exactly k
/// parts divisible by A.
///
/// The T^0 row is the A-regular series (q^A;q^A)_inf / (q;q)_inf; each
/// geometric factor 1/(1 - T q^{Am}) is then folded in with the in-place
/// update `rows[k][n] += rows[k-1][n - Am]`, keeping memory at
/// (kmax+1)(truncation+1) integers.
pub fn coefficients_exact_multiples(
    modulus: u64,
    kmax: usize,
    truncation: usize,
) -> Result<BivariateSeries> {
    if modulus < 2 {
        return Err(Error::ModulusTooSmall(modulus));
    }
    let regular = pochhammer_infinite(modulus, modulus, truncation)
        .divide(&pochhammer_infinite(1, 1, truncation))?;
    let base: Vec<BigCount> = regular
        .coeffs()
        .iter()
        .map(|c| {
            c.to_biguint()
                .expect("A-regular series coefficients are counts")
        })
        .collect();

    let mut rows = vec![base];
    rows.resize(kmax + 1, vec![BigCount::zero(); truncation + 1]);

    let a = modulus as usize;
    let mut e = a;
    while e <= truncation {
        for k in 1..=kmax {
            let (lower, upper) = rows.split_at_mut(k);
            let prev = &lower[k - 1];
            let cur = &mut upper[0];
            for n in e..=truncation {
                cur[n] += &prev[n - e];
            }
        }
        e += a;
    }
    Ok(BivariateSeries { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use proptest::prelude::*;

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn pochhammer_finite_examples() {
        assert_eq!(pochhammer_finite(1, 1, 0, 5), QSeries::one(5));
        assert_eq!(
            pochhammer_finite(2, 2, 1, 4).coeffs(),
            ints(&[1, 0, -1, 0, 0]).as_slice()
        );
        // (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6
        assert_eq!(
            pochhammer_finite(1, 1, 3, 6).coeffs(),
            ints(&[1, -1, -1, 0, 1, 1, -1]).as_slice()
        );
    }

    #[test]
    fn pochhammer_infinite_reciprocal_is_partition_series() {
        assert_eq!(pochhammer_infinite(1, 1, 0), QSeries::one(0));
        let euler = pochhammer_infinite(1, 1, 5);
        let recip = QSeries::one(5).divide(&euler).unwrap();
        assert_eq!(recip.coeffs(), ints(&[1, 1, 2, 3, 5, 7]).as_slice());
    }

    #[test]
    fn regular_series_from_quotient() {
        // (q^2;q^2)_inf / (q;q)_inf counts odd-part (= 2-regular) partitions
        let series = pochhammer_infinite(2, 2, 6)
            .divide(&pochhammer_infinite(1, 1, 6))
            .unwrap();
        assert_eq!(series.coeffs(), ints(&[1, 1, 1, 2, 2, 3, 4]).as_slice());
    }

    #[test]
    fn multiply_identity_and_telescoping() {
        let p = QSeries::from_coeffs(ints(&[1, 4, 0, -2, 7]));
        assert_eq!(p.multiply(&QSeries::one(4)), p);
        // (1-q) * sum q^n = 1
        let geometric = QSeries::from_coeffs(ints(&[1, 1, 1, 1, 1, 1]));
        let one_minus_q = pochhammer_finite(1, 1, 1, 5);
        assert_eq!(geometric.multiply(&one_minus_q), QSeries::one(5));
    }

    #[test]
    fn divide_requires_unit_constant_term() {
        let p = QSeries::one(3);
        let d = QSeries::from_coeffs(ints(&[2, 1, 0, 0]));
        assert_eq!(
            p.divide(&d),
            Err(Error::NonUnitConstantTerm(BigInt::from(2)))
        );
    }

    #[test]
    fn truncation_is_min_of_operands() {
        let a = QSeries::one(9);
        let b = QSeries::one(4);
        assert_eq!(a.multiply(&b).truncation(), 4);
        assert_eq!(a.divide(&b).unwrap().truncation(), 4);
    }

    #[test]
    #[should_panic(expected = "beyond truncation")]
    fn coeff_past_truncation_panics() {
        let p = QSeries::one(3);
        let _ = p.coeff(4);
    }

    #[test]
    fn at_most_multiples_series() {
        // k = 0: the A-regular series
        let s = coefficients_at_most_multiples(3, 0, 20).unwrap();
        let reg = partition::regular_partition_counts(3, 20).unwrap();
        for (n, count) in reg.iter().enumerate() {
            assert_eq!(s.coeff(n), &BigInt::from(count.clone()), "n={n}");
        }
        // A=2, k=1: q^4 coefficient is 4
        let s = coefficients_at_most_multiples(2, 1, 8).unwrap();
        assert_eq!(s.coeff(4), &BigInt::from(4));
        // k >= N/A: the bound is vacuous, coefficients are p(n)
        let s = coefficients_at_most_multiples(3, 10, 30).unwrap();
        for n in 0..=30 {
            assert_eq!(
                s.coeff(n),
                &BigInt::from(partition::partition_count(n as u64)),
                "n={n}"
            );
        }
        assert!(coefficients_at_most_multiples(1, 0, 5).is_err());
    }

    #[test]
    fn bivariate_rows_are_exact_counts() {
        let biv = coefficients_exact_multiples(3, 20, 60).unwrap();
        // T^0 row: the 3-regular counts
        let reg = partition::regular_partition_counts(3, 60).unwrap();
        assert_eq!(biv.row(0), reg.as_slice());
        // every entry matches the convolution route
        for k in 0..=20u64 {
            for n in 0..=60u64 {
                assert_eq!(
                    biv.coeff(k as usize, n as usize),
                    &partition::count_multiples_exact(3, k, n).unwrap(),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn bivariate_table_anchor() {
        let biv = coefficients_exact_multiples(3, 1, 200).unwrap();
        assert_eq!(
            biv.coeff(1, 200),
            &"93125823847".parse::<BigCount>().unwrap()
        );
    }

    #[test]
    fn q_binomial_shift_consistency() {
        // T^k row of the bivariate expansion = q^{Ak} * (at-most-k series),
        // the generating-function form of p_k(A;n) = p_{<=k}(A;n-Ak).
        for &a in &[2u64, 3] {
            let n = 60usize;
            let biv = coefficients_exact_multiples(a, 5, n).unwrap();
            for k in 0..=5u64 {
                let at_most = coefficients_at_most_multiples(a, k, n).unwrap();
                let shifted = at_most.shift_up((a * k) as usize);
                for q in 0..=n {
                    assert_eq!(
                        &BigInt::from(biv.coeff(k as usize, q).clone()),
                        shifted.coeff(q),
                        "A={a} k={k} q^{q}"
                    );
                }
            }
        }
    }

    #[test]
    fn specialization_at_t_one_recovers_p() {
        let n = 60usize;
        let biv = coefficients_exact_multiples(2, 30, n).unwrap();
        for q in 0..=n {
            let total: BigCount = (0..=30).map(|k| biv.coeff(k, q).clone()).sum();
            assert_eq!(total, partition::partition_count(q as u64), "q^{q}");
        }
    }

    fn small_series() -> impl Strategy<Value = QSeries> {
        prop::collection::vec(-6i64..=6, 1..=10)
            .prop_map(|v| QSeries::from_coeffs(v.into_iter().map(BigInt::from).collect()))
    }

    fn unit_series() -> impl Strategy<Value = QSeries> {
        prop::collection::vec(-6i64..=6, 0..=9).prop_map(|v| {
            let mut coeffs = vec![BigInt::one()];
            coeffs.extend(v.into_iter().map(BigInt::from));
            QSeries::from_coeffs(coeffs)
        })
    }

    proptest! {
        #[test]
        fn multiplication_commutes(a in small_series(), b in small_series()) {
            prop_assert_eq!(a.multiply(&b), b.multiply(&a));
        }

        #[test]
        fn multiplication_associates(
            a in small_series(),
            b in small_series(),
            c in small_series()
        ) {
            let left = a.multiply(&b).multiply(&c);
            let right = a.multiply(&b.multiply(&c));
            prop_assert_eq!(left, right);
        }

        #[test]
        fn divide_then_multiply_round_trips(a in small_series(), b in unit_series()) {
            let trunc = a.truncation().min(b.truncation());
            let q = a.divide(&b).unwrap();
            let back = q.multiply(&b);
            for n in 0..=trunc {
                prop_assert_eq!(back.coeff(n), a.coeff(n));
            }
        }
    }
}
