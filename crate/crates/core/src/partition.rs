//! Exact partition counting.
//!
//! - [`partition_count`]: p(n) via the pentagonal-number recurrence.
//! - [`partition_count_max_parts`]: p_{<=k}(n), partitions of n with at most
//!   k parts, via the recurrence p_{<=k}(n) = p_{<=k-1}(n) + p_{<=k}(n-k).
//! - [`regular_partition_count`]: p_reg(A;n), partitions with no part
//!   divisible by A.
//! - [`count_multiples_at_most`] / [`count_multiples_exact`]: p_{<=k}(A;n)
//!   and p_k(A;n), partitions of n with at most / exactly k parts divisible
//!   by A. The at-most count is the convolution
//!   p_{<=k}(A;n) = sum_j p_{<=k}(j) * p_reg(A; n - A*j); the exact count
//!   uses the identity p_k(A;n) = p_{<=k}(A; n - A*k).
//! - [`erdos_lehner_term`] / [`erdos_lehner_inclusion_exclusion`]: the sums
//!   S_k(m;j) and the alternating identity p_{<=k}(j) = sum_m (-1)^m S_k(m;j).
//! - [`enumerate_partitions`]: the brute-force oracle, a reverse-lexicographic
//!   stream of all partitions of n.
//!
//! All counts are exact. Computed tables are memoized in module-internal
//! storage: any operation may be called from multiple threads; readers share
//! the tables and extensions happen under a single writer lock.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::BigCount;

/// Default bound for [`enumerate_partitions`]. p(60) is just under 10^6,
/// which enumerates in well under a minute; anything larger must opt in
/// through [`enumerate_partitions_with_cap`].
pub const DEFAULT_ORACLE_CAP: u64 = 60;

// ---------------------------------------------------------------------------
// memoized tables
// ---------------------------------------------------------------------------

struct Tables {
    /// plain[n] = p(n)
    plain: RwLock<Vec<BigCount>>,
    /// max_parts[k][n] = p_{<=k}(n); rows extend independently
    max_parts: RwLock<Vec<Vec<BigCount>>>,
    /// regular[A][n] = p_reg(A;n)
    regular: RwLock<HashMap<u64, Vec<BigCount>>>,
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| Tables {
        plain: RwLock::new(vec![BigCount::one()]),
        max_parts: RwLock::new(Vec::new()),
        regular: RwLock::new(HashMap::new()),
    })
}

/// Extend the p(n) table through n_max using Euler's pentagonal recurrence
///   p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
/// Positive and negative contributions accumulate separately so the
/// subtraction happens once, on a provably nonnegative result.
fn extend_plain(table: &mut Vec<BigCount>, n_max: usize) {
    for n in table.len()..=n_max {
        let mut pos = BigCount::zero();
        let mut neg = BigCount::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let add_to_pos = k % 2 == 1;
            if add_to_pos {
                pos += &table[n - g1];
            } else {
                neg += &table[n - g1];
            }
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                if add_to_pos {
                    pos += &table[n - g2];
                } else {
                    neg += &table[n - g2];
                }
            }
            k += 1;
        }
        table.push(pos - neg);
    }
}

fn ensure_plain(n_max: usize) {
    {
        let t = tables().plain.read().unwrap();
        if t.len() > n_max {
            return;
        }
    }
    let mut t = tables().plain.write().unwrap();
    extend_plain(&mut t, n_max);
}

/// Extend rows 0..=k of the p_{<=k}(n) table through n_max.
fn extend_max_parts(rows: &mut Vec<Vec<BigCount>>, k: usize, n_max: usize) {
    if rows.is_empty() {
        rows.push(vec![BigCount::one()]);
    }
    // row 0 is 1, 0, 0, ...
    while rows[0].len() <= n_max {
        rows[0].push(BigCount::zero());
    }
    for kk in 1..=k {
        if rows.len() <= kk {
            rows.push(Vec::new());
        }
        let (prev_rows, cur_rows) = rows.split_at_mut(kk);
        let prev = &prev_rows[kk - 1];
        let cur = &mut cur_rows[0];
        for n in cur.len()..=n_max {
            let mut v = prev[n].clone();
            if n >= kk {
                v += &cur[n - kk];
            }
            cur.push(v);
        }
    }
}

fn ensure_max_parts(k: usize, n_max: usize) {
    {
        let rows = tables().max_parts.read().unwrap();
        if rows.len() > k && rows[k].len() > n_max && rows[0].len() > n_max {
            return;
        }
    }
    let mut rows = tables().max_parts.write().unwrap();
    extend_max_parts(&mut rows, k, n_max);
}

/// Compute p_reg(A; 0..=n_max) from scratch: an unbounded-knapsack pass over
/// the part sizes not divisible by A.
fn compute_regular(modulus: u64, n_max: usize) -> Vec<BigCount> {
    let mut t = vec![BigCount::zero(); n_max + 1];
    t[0] = BigCount::one();
    for part in 1..=n_max {
        if (part as u64).is_multiple_of(modulus) {
            continue;
        }
        for m in part..=n_max {
            let (lo, hi) = t.split_at_mut(m);
            hi[0] += &lo[m - part];
        }
    }
    t
}

fn ensure_regular(modulus: u64, n_max: usize) {
    {
        let map = tables().regular.read().unwrap();
        if map.get(&modulus).is_some_and(|t| t.len() > n_max) {
            return;
        }
    }
    let mut map = tables().regular.write().unwrap();
    let entry = map.entry(modulus).or_default();
    if entry.len() <= n_max {
        // the part-major pass does not extend incrementally; rebuild
        *entry = compute_regular(modulus, n_max);
    }
}

fn validate_modulus(modulus: u64) -> Result<()> {
    if modulus < 2 {
        Err(Error::ModulusTooSmall(modulus))
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// counting operations
// ---------------------------------------------------------------------------

/// p(n), the number of partitions of n. p(0) = 1.
pub fn partition_count(n: u64) -> BigCount {
    ensure_plain(n as usize);
    tables().plain.read().unwrap()[n as usize].clone()
}

/// The table p(0), p(1), ..., p(n_max).
pub fn partition_counts(n_max: u64) -> Vec<BigCount> {
    ensure_plain(n_max as usize);
    tables().plain.read().unwrap()[..=n_max as usize].to_vec()
}

/// p_{<=k}(n), the number of partitions of n with at most k parts.
/// Equals p(n) for k >= n; p_{<=0}(n) vanishes for n >= 1.
pub fn partition_count_max_parts(n: u64, k: u64) -> BigCount {
    if k >= n {
        return partition_count(n);
    }
    let (k, n) = (k as usize, n as usize);
    ensure_max_parts(k, n);
    tables().max_parts.read().unwrap()[k][n].clone()
}

/// The table p_{<=k}(0), ..., p_{<=k}(n_max) for a fixed k.
pub fn max_parts_counts(k: u64, n_max: u64) -> Vec<BigCount> {
    let (k, n_max) = (k as usize, n_max as usize);
    let k = k.min(n_max); // p_{<=k}(n) = p_{<=n}(n) for k >= n
    ensure_max_parts(k, n_max);
    tables().max_parts.read().unwrap()[k][..=n_max].to_vec()
}

/// p_reg(A;n), the number of A-regular partitions of n: partitions with no
/// part divisible by A. By Glaisher's bijection this also counts partitions
/// of n in which no part repeats A or more times.
pub fn regular_partition_count(modulus: u64, n: u64) -> Result<BigCount> {
    validate_modulus(modulus)?;
    ensure_regular(modulus, n as usize);
    Ok(tables().regular.read().unwrap()[&modulus][n as usize].clone())
}

/// The table p_reg(A;0), ..., p_reg(A;n_max).
pub fn regular_partition_counts(modulus: u64, n_max: u64) -> Result<Vec<BigCount>> {
    validate_modulus(modulus)?;
    ensure_regular(modulus, n_max as usize);
    Ok(tables().regular.read().unwrap()[&modulus][..=n_max as usize].to_vec())
}

/// p_{<=k}(A;n), the number of partitions of n with at most k parts that are
/// multiples of A, by the convolution
/// p_{<=k}(A;n) = sum_{j=0}^{floor(n/A)} p_{<=k}(j) * p_reg(A; n - A*j):
/// split a partition into its multiples of A (divided through by A, a
/// partition of some j into at most k parts) and an A-regular remainder.
pub fn count_multiples_at_most(modulus: u64, k: u64, n: u64) -> Result<BigCount> {
    validate_modulus(modulus)?;
    let n = n as usize;
    let a = modulus as usize;
    let j_max = n / a;
    ensure_regular(modulus, n);
    let use_plain = k as usize >= j_max;
    if use_plain {
        ensure_plain(j_max);
    } else {
        ensure_max_parts(k as usize, j_max);
    }

    let reg_map = tables().regular.read().unwrap();
    let reg = &reg_map[&modulus];
    let mut acc = BigCount::zero();
    if use_plain {
        // the part-count bound is vacuous on 0..=j_max
        let plain = tables().plain.read().unwrap();
        for j in 0..=j_max {
            acc += &plain[j] * &reg[n - a * j];
        }
    } else {
        let rows = tables().max_parts.read().unwrap();
        let row = &rows[k as usize];
        for j in 0..=j_max {
            acc += &row[j] * &reg[n - a * j];
        }
    }
    Ok(acc)
}

/// p_k(A;n), the number of partitions of n with exactly k parts that are
/// multiples of A, through the identity p_k(A;n) = p_{<=k}(A; n - A*k).
/// Zero whenever A*k > n.
pub fn count_multiples_exact(modulus: u64, k: u64, n: u64) -> Result<BigCount> {
    validate_modulus(modulus)?;
    match k.checked_mul(modulus) {
        Some(ak) if ak <= n => count_multiples_at_most(modulus, k, n - ak),
        _ => Ok(BigCount::zero()),
    }
}

/// The full profile p_0(A;n), p_1(A;n), ..., p_{floor(n/A)}(A;n).
/// Summing it recovers p(n).
pub fn exact_multiple_counts(modulus: u64, n: u64) -> Result<Vec<BigCount>> {
    validate_modulus(modulus)?;
    let k_max = n / modulus;
    (0..=k_max)
        .map(|k| count_multiples_exact(modulus, k, n))
        .collect()
}

// ---------------------------------------------------------------------------
// Erdos-Lehner sums
// ---------------------------------------------------------------------------

/// S_k(m;j) = sum over 1 <= r_1 < ... < r_m with
/// T_m <= r_1 + ... + r_m <= j - m*k of p(j - sum_i (k + r_i)),
/// where T_m = m(m+1)/2. S_k(0;j) = p(j) by the empty-sum convention.
///
/// The tuple sum collapses: the number of strictly increasing m-tuples with
/// sum s is p_{<=m}(s - T_m) (subtract the staircase 0,1,...,m-1 and then 1
/// from each part), so
/// S_k(m;j) = sum_{u=0}^{j-mk-T_m} p_{<=m}(u) * p(j - mk - T_m - u).
pub fn erdos_lehner_term(k: u64, m: u64, j: u64) -> BigCount {
    if m == 0 {
        return partition_count(j);
    }
    let Some(budget) = tuple_budget(k, m, j) else {
        return BigCount::zero(); // the constraint window is empty
    };
    ensure_plain(budget);
    ensure_max_parts(m as usize, budget);
    let plain = tables().plain.read().unwrap();
    let rows = tables().max_parts.read().unwrap();
    let row = &rows[m as usize];
    let mut acc = BigCount::zero();
    for u in 0..=budget {
        acc += &row[u] * &plain[budget - u];
    }
    acc
}

/// j - m*k - T_m when the constraint window T_m <= sum r_i <= j - m*k is
/// nonempty, None otherwise (including when m*k + T_m overflows).
fn tuple_budget(k: u64, m: u64, j: u64) -> Option<usize> {
    let floor = m
        .checked_mul(k)
        .and_then(|mk| mk.checked_add(m * (m + 1) / 2))?;
    if j < floor {
        return None;
    }
    Some((j - floor) as usize)
}

/// The Erdos-Lehner inclusion-exclusion identity
/// p_{<=k}(j) = sum_{m>=0} (-1)^m S_k(m;j). The sum is finite: it stops at
/// the first m whose constraint window T_m <= j - m*k is empty, so this is
/// an exact evaluation rather than a truncation.
pub fn erdos_lehner_inclusion_exclusion(k: u64, j: u64) -> BigCount {
    let mut acc = BigInt::zero();
    let mut m = 0u64;
    loop {
        if m > 0 && tuple_budget(k, m, j).is_none() {
            break;
        }
        let term = BigInt::from(erdos_lehner_term(k, m, j));
        if m.is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
        m += 1;
    }
    acc.to_biguint()
        .expect("inclusion-exclusion total is a partition count")
}

// ---------------------------------------------------------------------------
// enumeration oracle
// ---------------------------------------------------------------------------

/// A single partition: positive parts in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionList {
    parts: Vec<u64>,
}

impl PartitionList {
    /// Validates that `parts` is nonincreasing and strictly positive.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self { parts })
        } else {
            Err(Error::MalformedPartition)
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn largest_part(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of parts divisible by `modulus`.
    pub fn multiples_of(&self, modulus: u64) -> usize {
        assert!(modulus >= 1);
        self.parts.iter().filter(|&&p| p % modulus == 0).count()
    }
}

/// Iterator over all partitions of a fixed n in reverse-lexicographic order:
/// n itself first, the all-ones partition last.
#[derive(Debug)]
pub struct Partitions {
    state: Option<Vec<u64>>,
}

impl Iterator for Partitions {
    type Item = PartitionList;

    fn next(&mut self) -> Option<PartitionList> {
        let current = self.state.take()?;
        self.state = successor(&current);
        Some(PartitionList { parts: current })
    }
}

/// Reverse-lexicographic successor: strip trailing ones, decrement the new
/// last part, and refill the freed weight greedily with parts no larger
/// than it. Returns None after the all-ones partition.
fn successor(parts: &[u64]) -> Option<Vec<u64>> {
    let mut next: Vec<u64> = parts.to_vec();
    let mut freed = 0u64;
    while next.last() == Some(&1) {
        next.pop();
        freed += 1;
    }
    let last = next.last_mut()?;
    *last -= 1;
    freed += 1;
    let cap = *last;
    while freed > 0 {
        let part = cap.min(freed);
        next.push(part);
        freed -= part;
    }
    Some(next)
}

/// Every partition of n, exactly once, under the default oracle cap.
pub fn enumerate_partitions(n: u64) -> Result<Partitions> {
    enumerate_partitions_with_cap(n, DEFAULT_ORACLE_CAP)
}

/// Same as [`enumerate_partitions`] with an explicit runtime cap.
pub fn enumerate_partitions_with_cap(n: u64, cap: u64) -> Result<Partitions> {
    if n > cap {
        return Err(Error::EnumerationCapExceeded { n, cap });
    }
    let initial = if n == 0 { Vec::new() } else { vec![n] };
    Ok(Partitions {
        state: Some(initial),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn big(v: u64) -> BigCount {
        BigUint::from(v)
    }

    #[test]
    fn partition_count_small_values() {
        assert_eq!(partition_count(0), big(1));
        assert_eq!(partition_count(5), big(7));
        assert_eq!(partition_count(50), big(204226));
    }

    #[test]
    fn partition_count_matches_oracle() {
        for n in 0..=25 {
            let by_enum = enumerate_partitions(n).unwrap().count();
            assert_eq!(partition_count(n), big(by_enum as u64), "n={n}");
        }
    }

    #[test]
    fn max_parts_examples() {
        assert_eq!(partition_count_max_parts(7, 1), big(1));
        assert_eq!(partition_count_max_parts(5, 2), big(3)); // 5, 4+1, 3+2
        assert_eq!(partition_count_max_parts(5, 5), big(7));
        assert_eq!(partition_count_max_parts(0, 0), big(1));
        assert_eq!(partition_count_max_parts(3, 0), big(0));
    }

    #[test]
    fn max_parts_matches_oracle() {
        for n in 0..=20 {
            let partitions: Vec<_> = enumerate_partitions(n).unwrap().collect();
            for k in 0..=n {
                let expected = partitions.iter().filter(|p| p.num_parts() as u64 <= k).count();
                assert_eq!(
                    partition_count_max_parts(n, k),
                    big(expected as u64),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn regular_examples() {
        assert_eq!(regular_partition_count(2, 0).unwrap(), big(1));
        assert_eq!(regular_partition_count(2, 5).unwrap(), big(3)); // 5, 3+1+1, 1^5
        assert_eq!(regular_partition_count(3, 6).unwrap(), big(7));
        assert_eq!(
            regular_partition_count(1, 5),
            Err(Error::ModulusTooSmall(1))
        );
    }

    #[test]
    fn at_most_examples() {
        assert_eq!(count_multiples_at_most(2, 0, 5).unwrap(), big(3));
        assert_eq!(count_multiples_at_most(2, 1, 4).unwrap(), big(4));
        assert_eq!(count_multiples_at_most(2, 10, 6).unwrap(), big(11)); // = p(6)
        assert_eq!(count_multiples_at_most(0, 1, 4), Err(Error::ModulusTooSmall(0)));
    }

    #[test]
    fn exact_examples() {
        assert_eq!(
            count_multiples_exact(3, 1, 200).unwrap(),
            "93125823847".parse::<BigUint>().unwrap()
        );
        assert_eq!(count_multiples_exact(5, 3, 10).unwrap(), big(0)); // A*k > n
        assert_eq!(count_multiples_exact(2, 1, 4).unwrap(), big(2)); // 4; 2+1+1
    }

    #[test]
    fn exact_profile_sums_to_p() {
        for &(a, n) in &[(2u64, 30u64), (3, 25), (5, 40)] {
            let profile = exact_multiple_counts(a, n).unwrap();
            let total: BigCount = profile.iter().sum();
            assert_eq!(total, partition_count(n), "A={a} n={n}");
        }
    }

    /// Direct evaluation of S_k(m;j) by enumerating the increasing tuples.
    fn erdos_lehner_term_direct(k: u64, m: u64, j: u64) -> BigCount {
        if m == 0 {
            return partition_count(j);
        }
        fn rec(depth: u64, min_r: u64, sum: u64, k: u64, m: u64, j: u64, acc: &mut BigCount) {
            if depth == m {
                let staircase = m * (m + 1) / 2;
                if sum >= staircase && sum + m * k <= j {
                    *acc += partition_count(j - m * k - sum);
                }
                return;
            }
            let mut r = min_r;
            while sum + r + m * k <= j {
                rec(depth + 1, r + 1, sum + r, k, m, j, acc);
                r += 1;
            }
        }
        let mut acc = BigCount::zero();
        rec(0, 1, 0, k, m, j, &mut acc);
        acc
    }

    #[test]
    fn erdos_lehner_term_examples() {
        assert_eq!(erdos_lehner_term(2, 0, 5), big(7)); // = p(5)
        assert_eq!(erdos_lehner_term(2, 1, 5), big(4)); // p(2)+p(1)+p(0)
        assert_eq!(erdos_lehner_term(2, 2, 5), big(0)); // empty window
        assert_eq!(erdos_lehner_term(u64::MAX, 2, 5), big(0)); // overflow-safe
        assert_eq!(erdos_lehner_inclusion_exclusion(u64::MAX, 7), big(15)); // = p(7)
    }

    #[test]
    fn erdos_lehner_term_matches_direct_enumeration() {
        for k in 0..5 {
            for m in 0..4 {
                for j in 0..26 {
                    assert_eq!(
                        erdos_lehner_term(k, m, j),
                        erdos_lehner_term_direct(k, m, j),
                        "k={k} m={m} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn inclusion_exclusion_examples() {
        assert_eq!(erdos_lehner_inclusion_exclusion(2, 5), big(3));
        assert_eq!(erdos_lehner_inclusion_exclusion(0, 0), big(1));
        assert_eq!(erdos_lehner_inclusion_exclusion(12, 12), big(77)); // = p(12)
    }

    #[test]
    fn inclusion_exclusion_matches_max_parts() {
        for j in 0..=60 {
            for k in 0..=j {
                assert_eq!(
                    erdos_lehner_inclusion_exclusion(k, j),
                    partition_count_max_parts(j, k),
                    "k={k} j={j}"
                );
            }
        }
    }

    #[test]
    fn enumeration_reverse_lex_order() {
        let got: Vec<Vec<u64>> = enumerate_partitions(4)
            .unwrap()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn enumeration_edge_cases() {
        let empty: Vec<_> = enumerate_partitions(0).unwrap().collect();
        assert_eq!(empty, vec![PartitionList { parts: vec![] }]);
        assert_eq!(enumerate_partitions(10).unwrap().count(), 42);
        assert_eq!(
            enumerate_partitions(61).unwrap_err(),
            Error::EnumerationCapExceeded { n: 61, cap: 60 }
        );
        assert!(enumerate_partitions_with_cap(61, 61).is_ok());
    }

    #[test]
    fn enumeration_yields_valid_partitions() {
        for p in enumerate_partitions(12).unwrap() {
            assert_eq!(p.size(), 12);
            assert!(PartitionList::new(p.parts().to_vec()).is_ok());
        }
    }

    #[test]
    fn memo_tables_are_safe_under_concurrent_callers() {
        let handles: Vec<_> = (0..8u64)
            .map(|t| {
                std::thread::spawn(move || {
                    // overlapping ranges force concurrent reads and extensions
                    for n in 0..=(60 + 5 * t) {
                        let total: BigCount =
                            exact_multiple_counts(2 + t % 3, n).unwrap().iter().sum();
                        assert_eq!(total, partition_count(n));
                        let _ = erdos_lehner_inclusion_exclusion(t, n);
                    }
                })
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
    }

    #[test]
    fn partition_list_validation() {
        assert!(PartitionList::new(vec![3, 1, 1]).is_ok());
        assert_eq!(
            PartitionList::new(vec![1, 3]),
            Err(Error::MalformedPartition)
        );
        assert_eq!(
            PartitionList::new(vec![2, 0]),
            Err(Error::MalformedPartition)
        );
    }
}
