//! The `verify` command: runs the invariant suites of every module at a
//! configurable scale and reports one row per check.

use betti_core::asymptotics::{
    gumbel_betti_cdf, gumbel_moments, gumbel_parts_cdf, ingham_parameters, pleqk_asymptotic,
    GumbelKind, GumbelSpec,
};
use betti_core::hilbert::{figure_points, plane_poincare, quasihomogeneous_poincare, TorusWeights};
use betti_core::partition::{
    count_multiples_at_most, count_multiples_exact, enumerate_partitions_with_cap,
    erdos_lehner_inclusion_exclusion, exact_multiple_counts, partition_count,
    partition_count_max_parts, regular_partition_count,
};
use betti_core::qseries::coefficients_exact_multiples;
use betti_core::BigCount;

use crate::output::{Cell, Table};

pub struct VerifyReport {
    pub table: Table,
    pub failures: usize,
}

struct Recorder {
    table: Table,
    failures: usize,
}

impl Recorder {
    fn new() -> Self {
        Self {
            table: Table::new(vec!["suite", "check", "status", "detail"]),
            failures: 0,
        }
    }

    fn record(&mut self, suite: &str, check: &str, ok: bool, detail: String) {
        if !ok {
            self.failures += 1;
        }
        self.table.push(vec![
            Cell::Text(suite.to_string()),
            Cell::Text(check.to_string()),
            Cell::Text(if ok { "pass" } else { "fail" }.to_string()),
            Cell::Text(detail),
        ]);
    }
}

/// Run every suite. `max_n` bounds the oracle comparisons, `oracle_cap`
/// bounds the enumeration itself.
pub fn run(max_n: u64, oracle_cap: u64) -> VerifyReport {
    let mut rec = Recorder::new();
    oracle_suite(&mut rec, max_n.min(oracle_cap), oracle_cap);
    identity_suite(&mut rec, (4 * max_n).min(200));
    qseries_suite(&mut rec, (2 * max_n).min(80) as usize);
    hilbert_suite(&mut rec, max_n);
    asymptotics_suite(&mut rec);
    VerifyReport {
        failures: rec.failures,
        table: rec.table,
    }
}

/// Every counting operation against brute-force enumeration.
fn oracle_suite(rec: &mut Recorder, max_n: u64, cap: u64) {
    let moduli = [2u64, 3, 4, 5];
    let mut bad = Vec::new();
    let mut checked = 0u64;
    for n in 0..=max_n {
        let partitions: Vec<_> = match enumerate_partitions_with_cap(n, cap) {
            Ok(stream) => stream.collect(),
            Err(e) => {
                rec.record("oracle", "enumeration", false, e.to_string());
                return;
            }
        };
        if BigCount::from(partitions.len()) != partition_count(n) {
            bad.push(format!("p({n})"));
        }
        let mut by_parts = vec![0u64; (n + 1) as usize];
        for p in &partitions {
            by_parts[p.num_parts()] += 1;
        }
        let mut cumulative = 0u64;
        for k in 0..=n {
            cumulative += by_parts[k as usize];
            checked += 1;
            if partition_count_max_parts(n, k) != BigCount::from(cumulative) {
                bad.push(format!("p_<={k}({n})"));
            }
        }
        for &a in &moduli {
            let mut by_multiples = vec![0u64; (n / a + 1) as usize];
            for p in &partitions {
                by_multiples[p.multiples_of(a)] += 1;
            }
            if regular_partition_count(a, n).unwrap() != BigCount::from(by_multiples[0]) {
                bad.push(format!("p_reg({a};{n})"));
            }
            let mut cumulative = 0u64;
            for k in 0..=(n / a) {
                cumulative += by_multiples[k as usize];
                checked += 2;
                if count_multiples_exact(a, k, n).unwrap() != BigCount::from(by_multiples[k as usize])
                {
                    bad.push(format!("p_{k}({a};{n})"));
                }
                if count_multiples_at_most(a, k, n).unwrap() != BigCount::from(cumulative) {
                    bad.push(format!("p_<={k}({a};{n})"));
                }
            }
        }
    }
    rec.record(
        "oracle",
        "counts-vs-enumeration",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{checked} comparisons up to n={max_n}")
        } else {
            format!("mismatches: {}", bad.join(", "))
        },
    );
}

/// The exact identities: completeness, the shift identity via the q-series
/// route, and the Erdos-Lehner inclusion-exclusion.
fn identity_suite(rec: &mut Recorder, n_max: u64) {
    for &a in &[2u64, 3, 5] {
        let mut complete = true;
        let mut shifted = true;
        let bivariate =
            coefficients_exact_multiples(a, (n_max / a) as usize, n_max as usize).unwrap();
        for n in 0..=n_max {
            let profile = exact_multiple_counts(a, n).unwrap();
            let total: BigCount = profile.iter().sum();
            complete &= total == partition_count(n);
            for (k, count) in profile.iter().enumerate() {
                shifted &= bivariate.coeff(k, n as usize) == count;
            }
        }
        rec.record(
            "identities",
            &format!("completeness-A{a}"),
            complete,
            format!("sum_k p_k({a};n) = p(n) for n <= {n_max}"),
        );
        rec.record(
            "identities",
            &format!("exact-vs-qseries-A{a}"),
            shifted,
            format!("p_k({a};n) matches the generating function for n <= {n_max}"),
        );
    }

    let j_max = n_max.min(120);
    let mut ok = true;
    for j in 0..=j_max {
        for k in 0..=j {
            ok &= erdos_lehner_inclusion_exclusion(k, j) == partition_count_max_parts(j, k);
        }
    }
    rec.record(
        "identities",
        "inclusion-exclusion",
        ok,
        format!("alternating sum equals p_<=k(j) for j <= {j_max}"),
    );
}

fn qseries_suite(rec: &mut Recorder, n_max: usize) {
    use betti_core::qseries::{coefficients_at_most_multiples, pochhammer_infinite, QSeries};

    // reciprocal of the Euler product enumerates p(n)
    let euler = pochhammer_infinite(1, 1, n_max);
    let recip = QSeries::one(n_max).divide(&euler).unwrap();
    let mut ok = true;
    for n in 0..=n_max {
        ok &= recip.coeff(n) == &num_bigint::BigInt::from(partition_count(n as u64));
    }
    rec.record(
        "qseries",
        "euler-product",
        ok,
        format!("1/(q;q)_inf enumerates p(n) to order {n_max}"),
    );

    // the q-binomial shift: T^k row = q^{Ak} times the at-most-k series
    let mut ok = true;
    for &a in &[2u64, 3] {
        let bivariate = coefficients_exact_multiples(a, 5, n_max).unwrap();
        for k in 0..=5u64 {
            let at_most = coefficients_at_most_multiples(a, k, n_max).unwrap();
            let shifted = at_most.shift_up((a * k) as usize);
            for n in 0..=n_max {
                ok &= &num_bigint::BigInt::from(bivariate.coeff(k as usize, n).clone())
                    == shifted.coeff(n);
            }
        }
    }
    rec.record(
        "qseries",
        "q-binomial-shift",
        ok,
        format!("T^k row = q^(Ak) * at-most series to order {n_max}"),
    );
}

fn hilbert_suite(rec: &mut Recorder, max_n: u64) {
    let pairs = [(1u64, 2u64), (1, 4), (2, 3)];
    let mut ok = true;
    for (alpha, beta) in pairs {
        let w = TorusWeights::new(alpha, beta).unwrap();
        for n in 0..=(2 * max_n) {
            ok &= quasihomogeneous_poincare(&w, n).evaluate_at_one() == partition_count(n);
        }
    }
    rec.record(
        "hilbert",
        "quasihomogeneous-at-one",
        ok,
        format!("P(X;1) = p(n) for n <= {}", 2 * max_n),
    );

    let mut ok = true;
    for n in 1..=max_n {
        ok &= plane_poincare(n).unwrap().evaluate_at_one() == partition_count(n);
    }
    rec.record(
        "hilbert",
        "plane-at-one",
        ok,
        format!("P(X^[n];1) = p(n) for n <= {max_n}"),
    );

    let mut ok = true;
    for (alpha, beta) in pairs {
        let w = TorusWeights::new(alpha, beta).unwrap();
        let mass: f64 = figure_points(&quasihomogeneous_poincare(&w, max_n))
            .iter()
            .map(|p| p.y)
            .sum();
        ok &= (mass - 1.0).abs() <= 1e-12;
    }
    rec.record("hilbert", "figure-mass", ok, "masses sum to 1".to_string());
}

fn asymptotics_suite(rec: &mut Recorder) {
    let mut ok = true;
    let mut worst = 0.0f64;
    for &a in &[2u64, 3, 5] {
        for k in 0..=4 {
            let params = ingham_parameters(a, k).unwrap();
            for &n in &[100u64, 1000] {
                let rel =
                    (params.coefficient_estimate(n) / pleqk_asymptotic(a, k, n).unwrap() - 1.0)
                        .abs();
                worst = worst.max(rel);
                ok &= rel <= 1e-12;
            }
        }
    }
    rec.record(
        "asymptotics",
        "ingham-recombination",
        ok,
        format!("worst relative gap {worst:.2e}"),
    );

    let mut ok = true;
    for a in 2..=10u64 {
        for i in 0..=40 {
            let x = -2.0 + 0.1 * i as f64;
            ok &= (gumbel_betti_cdf(a, x) - gumbel_parts_cdf(a, x)).abs() <= 1e-12;
        }
    }
    rec.record(
        "asymptotics",
        "gumbel-consistency",
        ok,
        "Betti and parts limit laws coincide".to_string(),
    );

    let mut ok = true;
    for (a, kind) in [(2u64, GumbelKind::Parts), (3, GumbelKind::Betti)] {
        let spec = match kind {
            GumbelKind::Parts => GumbelSpec::parts(a),
            GumbelKind::Betti => GumbelSpec::betti(a),
        };
        let (qmean, qvar) = moments_by_quadrature(&spec);
        let (mean, var) = gumbel_moments(a, kind);
        ok &= (qmean - mean).abs() <= 1e-6 && (qvar - var).abs() <= 1e-6;
    }
    rec.record(
        "asymptotics",
        "gumbel-moments",
        ok,
        "quadrature matches closed forms to 1e-6".to_string(),
    );
}

fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + i as f64 * h);
    }
    s * h / 3.0
}

fn moments_by_quadrature(spec: &GumbelSpec) -> (f64, f64) {
    let f = |x: f64| spec.cdf(x);
    let mean = simpson(|x| 1.0 - f(x), 0.0, 80.0, 80_000) - simpson(f, -30.0, 0.0, 30_000);
    let ex2 = simpson(|x| 2.0 * x * (1.0 - f(x)), 0.0, 80.0, 80_000)
        - simpson(|x| 2.0 * x * f(x), -30.0, 0.0, 30_000);
    (mean, ex2 - mean * mean)
}
