//! Implementations of the table-producing commands.

use betti_core::asymptotics::{gumbel_parts_cdf, k_threshold, k_threshold_floor, pk_asymptotic};
use betti_core::hilbert::{
    figure_points, plane_poincare, quasihomogeneous_poincare, BettiPolynomial, TorusWeights,
};
use betti_core::partition::{
    count_multiples_at_most, count_multiples_exact, partition_count,
};
use betti_core::qseries::{coefficients_at_most_multiples, coefficients_exact_multiples};
use betti_core::BigCount;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::output::{Cell, Table};
use crate::CliError;

/// Default x grid for `gumbel-table`: the reference illustration at
/// A=2, n=600.
pub const DEFAULT_X_GRID: [f64; 7] = [-0.1, 0.0, 0.1, 0.2, 0.3, 1.5, 2.0];

fn ratio(numerator: &BigCount, denominator: &BigCount) -> f64 {
    numerator.to_f64().unwrap_or(f64::INFINITY) / denominator.to_f64().unwrap_or(f64::INFINITY)
}

/// `count`: one row per computation route. With `cross_check` the
/// convolution and q-series routes are both evaluated and must agree.
pub fn count(
    modulus: u64,
    k: u64,
    n: u64,
    at_most: bool,
    cross_check: bool,
) -> Result<Table, CliError> {
    let mut table = Table::new(vec!["A", "k", "n", "kind", "method", "value"]);
    let kind = if at_most { "at-most" } else { "exact" };

    let convolution = if at_most {
        count_multiples_at_most(modulus, k, n)?
    } else {
        count_multiples_exact(modulus, k, n)?
    };
    let mut row = |method: &str, value: String| {
        table.push(vec![
            Cell::int(modulus),
            Cell::int(k),
            Cell::int(n),
            Cell::Text(kind.to_string()),
            Cell::Text(method.to_string()),
            Cell::Int(value),
        ]);
    };
    row("convolution", convolution.to_string());

    if cross_check {
        let via_series = if at_most {
            coefficients_at_most_multiples(modulus, k, n as usize)?
                .coeff(n as usize)
                .clone()
        } else {
            BigInt::from(
                coefficients_exact_multiples(modulus, k as usize, n as usize)?
                    .coeff(k as usize, n as usize)
                    .clone(),
            )
        };
        row("qseries", via_series.to_string());
        if via_series != BigInt::from(convolution) {
            return Err(CliError::CrossCheckMismatch {
                table: Box::new(table),
            });
        }
    }
    Ok(table)
}

/// `table1`: exact p_1(3;n), its asymptotic main term, and their ratio.
pub fn table1(n_list: &[u64]) -> Result<Table, CliError> {
    let mut table = Table::new(vec!["n", "exact", "asymptotic", "ratio"]);
    for &n in n_list {
        let exact = count_multiples_exact(3, 1, n)?;
        let approx = pk_asymptotic(3, 1, n)?;
        table.push(vec![
            Cell::int(n),
            Cell::Int(exact.to_string()),
            Cell::Real(approx),
            Cell::Real(exact.to_f64().unwrap_or(f64::INFINITY) / approx),
        ]);
    }
    Ok(table)
}

/// `gumbel-table`: the finite-n distribution against its Gumbel limit.
pub fn gumbel_table(modulus: u64, n: u64, xs: &[f64]) -> Result<Table, CliError> {
    if modulus < 2 {
        return Err(betti_core::Error::ModulusTooSmall(modulus).into());
    }
    if n == 0 {
        return Err(CliError::InvalidArguments(
            "gumbel-table requires n >= 1".to_string(),
        ));
    }
    let total = partition_count(n);
    let mut table = Table::new(vec!["x", "floor_k", "threshold", "delta", "gumbel"]);
    for &x in xs {
        let floor_k = k_threshold_floor(modulus, n, x);
        let exact = count_multiples_at_most(modulus, floor_k, n)?;
        table.push(vec![
            Cell::Real(x),
            Cell::int(floor_k),
            Cell::Real(k_threshold(modulus, n, x)),
            Cell::Real(ratio(&exact, &total)),
            Cell::Real(gumbel_parts_cdf(modulus, x)),
        ]);
    }
    Ok(table)
}

/// Which Poincare polynomial `figure` and `poincare` refer to.
pub enum PolynomialSource {
    Plane { n: u64 },
    Quasihomogeneous { alpha: u64, beta: u64, n: u64 },
}

impl PolynomialSource {
    pub fn build(&self) -> Result<BettiPolynomial, CliError> {
        match self {
            PolynomialSource::Plane { n } => Ok(plane_poincare(*n)?),
            PolynomialSource::Quasihomogeneous { alpha, beta, n } => {
                let weights = TorusWeights::new(*alpha, *beta)?;
                Ok(quasihomogeneous_poincare(&weights, *n))
            }
        }
    }
}

/// `figure`: the normalized point cloud of a Betti distribution.
pub fn figure(source: &PolynomialSource) -> Result<Table, CliError> {
    let poly = source.build()?;
    let mut table = Table::new(vec!["x", "y"]);
    for point in figure_points(&poly) {
        table.push(vec![Cell::Real(point.x), Cell::Real(point.y)]);
    }
    Ok(table)
}

/// `poincare`: half-degree / coefficient rows of a Poincare polynomial.
pub fn poincare(source: &PolynomialSource) -> Result<Table, CliError> {
    let poly = source.build()?;
    let mut table = Table::new(vec!["half_degree", "coefficient"]);
    for (j, coeff) in poly.half_coeffs().iter().enumerate() {
        table.push(vec![Cell::int(j), Cell::Int(coeff.to_string())]);
    }
    Ok(table)
}
