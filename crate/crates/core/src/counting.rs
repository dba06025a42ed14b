//! Exact solution counting for power-sum systems.
//!
//! A system is described by the variable count and the list of exponents
//! that must agree between the two sides. The counters report, for tuples
//! drawn from [1, X]:
//!
//! * `solutions` — ordered pairs of tuples whose power sums agree at every
//!   listed exponent,
//! * `diagonal` — the pairs where one tuple is a permutation of the other,
//! * `nondiagonal` — their difference.
//!
//! Two independent routes are provided. The naive route enumerates every
//! ordered tuple and compares signatures pairwise; it is the reference
//! oracle and is guarded by a pair budget. The fast route enumerates
//! multisets once, histograms their power-sum signatures, and sums squared
//! ordering counts; it is guarded by a histogram budget and can be split
//! into shards for parallel execution by a std caller.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use core::fmt;
use core::time::Duration;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::symfunc::{IntTuple, Witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountError {
    ZeroVars,
    ZeroDegree,
    ZeroXMax,
    /// The omitted-degree shift must satisfy d < k for counting and
    /// 2d < k when constructing witnesses.
    InvalidShift { k: usize, d: usize },
    /// Splitting by distinct-value count needs 1 <= r <= k.
    SplitOutOfRange { r: usize, k: usize },
    ShardOutOfRange { shard: usize, num_shards: usize },
    /// The naive route would compare this many ordered pairs.
    PairBudgetExceeded { required: u128, allowed: u128 },
    /// The histogram route would enumerate this many multisets.
    MapBudgetExceeded { attempted: BigUint, allowed: u128 },
}

impl fmt::Display for CountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountError::ZeroVars => write!(f, "systems need at least one variable"),
            CountError::ZeroDegree => write!(f, "full systems need degree at least 1"),
            CountError::ZeroXMax => write!(f, "the range bound X must be at least 1"),
            CountError::InvalidShift { k, d } => {
                write!(f, "shift d={d} is out of range for k={k}")
            }
            CountError::SplitOutOfRange { r, k } => {
                write!(f, "split parameter r={r} is out of range for k={k}")
            }
            CountError::ShardOutOfRange { shard, num_shards } => {
                write!(f, "shard {shard} outside [0, {num_shards})")
            }
            CountError::PairBudgetExceeded { required, allowed } => {
                write!(f, "naive route needs {required} pair comparisons, budget allows {allowed}")
            }
            CountError::MapBudgetExceeded { attempted, allowed } => {
                write!(f, "histogram route needs {attempted} multisets, budget allows {allowed}")
            }
        }
    }
}

impl core::error::Error for CountError {}

// ---- System description ----

/// The exponent list defining one power-sum system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemSpec {
    vars: usize,
    exponents: Vec<u32>,
}

impl SystemSpec {
    /// All exponents 1..=degree (the complete system).
    pub fn full(vars: usize, degree: u32) -> Result<Self, CountError> {
        if vars == 0 {
            return Err(CountError::ZeroVars);
        }
        if degree == 0 {
            return Err(CountError::ZeroDegree);
        }
        Ok(SystemSpec { vars, exponents: (1..=degree).collect() })
    }

    /// Exponents 1..=k with k-d removed (the system with one degree
    /// omitted). Requires d < k.
    pub fn incomplete(k: usize, d: usize) -> Result<Self, CountError> {
        if k == 0 {
            return Err(CountError::ZeroVars);
        }
        if d >= k {
            return Err(CountError::InvalidShift { k, d });
        }
        let omitted = (k - d) as u32;
        Ok(SystemSpec {
            vars: k,
            exponents: (1..=k as u32).filter(|&e| e != omitted).collect(),
        })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Power sums of `tuple` at each listed exponent.
    fn signature(&self, tuple: &[u64]) -> Vec<BigInt> {
        self.exponents
            .iter()
            .map(|&e| {
                let mut acc = BigInt::zero();
                for &z in tuple {
                    acc += BigInt::from(z).pow(e);
                }
                acc
            })
            .collect()
    }
}

impl fmt::Display for SystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} variables, exponents", self.vars)?;
        if self.exponents.is_empty() {
            return write!(f, " (none)");
        }
        for (i, e) in self.exponents.iter().enumerate() {
            write!(f, "{}{e}", if i == 0 { " " } else { "," })?;
        }
        Ok(())
    }
}

// ---- Combinatorial helpers ----

fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

/// Number of distinct orderings of a nondecreasing tuple: n! over the
/// product of the multiplicity factorials.
fn orderings(sorted: &[u64]) -> BigUint {
    let mut denom = BigUint::one();
    let mut run = 1usize;
    for i in 1..sorted.len() {
        if sorted[i] == sorted[i - 1] {
            run += 1;
        } else {
            denom *= factorial(run);
            run = 1;
        }
    }
    denom *= factorial(run);
    factorial(sorted.len()) / denom
}

/// Multisets of size k drawn from [1, x_max]: binomial(x_max + k - 1, k).
pub fn multiset_count(k: usize, x_max: u64) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k as u64 {
        num *= BigUint::from(x_max + i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

/// Calls `f` for every nondecreasing k-tuple over [1, x_max], in
/// lexicographic order. `max_distinct` prunes branches that would use that
/// many distinct values or more (pass k + 1 for no pruning).
fn for_each_multiset<F: FnMut(&[u64])>(
    k: usize,
    x_max: u64,
    max_distinct: usize,
    f: &mut F,
) {
    let mut tuple = Vec::with_capacity(k);
    descend(k, x_max, max_distinct, &mut tuple, 1, 0, f);
}

fn descend<F: FnMut(&[u64])>(
    k: usize,
    x_max: u64,
    max_distinct: usize,
    tuple: &mut Vec<u64>,
    min: u64,
    distinct: usize,
    f: &mut F,
) {
    if tuple.len() == k {
        f(tuple);
        return;
    }
    for v in min..=x_max {
        let next_distinct = if tuple.last() == Some(&v) { distinct } else { distinct + 1 };
        if next_distinct >= max_distinct {
            // values are nondecreasing, so every later choice at this
            // depth introduces a new value as well
            break;
        }
        tuple.push(v);
        descend(k, x_max, max_distinct, tuple, v, next_distinct, f);
        tuple.pop();
    }
}

fn check_map_budget(k: usize, x_max: u64, budget: &Budget) -> Result<(), CountError> {
    let attempted = multiset_count(k, x_max);
    if attempted > BigUint::from(budget.max_map_entries) {
        return Err(CountError::MapBudgetExceeded {
            attempted,
            allowed: budget.max_map_entries,
        });
    }
    Ok(())
}

// ---- Reports ----

/// Exact counts for one system over [1, X].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub spec: SystemSpec,
    pub x_max: u64,
    /// Ordered pairs of tuples with matching signatures.
    pub solutions: BigInt,
    /// Pairs where the tuples are permutations of each other.
    pub diagonal: BigInt,
    /// solutions - diagonal.
    pub nondiagonal: BigInt,
    /// Always zero here; IO-facing callers measure and fill it in.
    pub elapsed: Duration,
}

impl CountReport {
    pub fn method_summary(&self) -> String {
        alloc::format!("{} over X={}", self.spec, self.x_max)
    }
}

// ---- Diagonal count ----

/// Sum of squared ordering counts over all multisets: the number of
/// permutation pairs. Depends only on the variable count, not on the
/// exponent list.
pub fn count_diagonal(spec: &SystemSpec, x_max: u64) -> Result<BigInt, CountError> {
    if x_max == 0 {
        return Err(CountError::ZeroXMax);
    }
    let mut total = BigUint::zero();
    for_each_multiset(spec.vars, x_max, spec.vars + 1, &mut |m| {
        let w = orderings(m);
        total += &w * &w;
    });
    Ok(total.into())
}

// ---- Naive route ----

/// Reference counter: enumerates all X^k ordered tuples and compares
/// signatures pairwise, classifying each matching pair as diagonal or not
/// by sorting. Refuses to start if X^(2k) exceeds the pair budget.
pub fn count_naive(
    spec: &SystemSpec,
    x_max: u64,
    budget: &Budget,
) -> Result<CountReport, CountError> {
    if x_max == 0 {
        return Err(CountError::ZeroXMax);
    }
    let k = spec.vars;
    let tuples = (x_max as u128).checked_pow(k as u32);
    let required = tuples.and_then(|t| t.checked_mul(t)).unwrap_or(u128::MAX);
    if required > budget.max_pairs {
        return Err(CountError::PairBudgetExceeded { required, allowed: budget.max_pairs });
    }

    let n = tuples.expect("within budget") as usize;
    let mut sigs: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    let mut sorted: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut tuple = alloc::vec![1u64; k];
    loop {
        sigs.push(spec.signature(&tuple));
        let mut s = tuple.clone();
        s.sort_unstable();
        sorted.push(s);

        // odometer step
        let mut pos = 0;
        loop {
            if pos == k {
                break;
            }
            if tuple[pos] < x_max {
                tuple[pos] += 1;
                break;
            }
            tuple[pos] = 1;
            pos += 1;
        }
        if pos == k {
            break;
        }
    }

    let mut solutions = BigUint::zero();
    let mut diagonal = BigUint::zero();
    for i in 0..n {
        for j in 0..n {
            if sigs[i] == sigs[j] {
                solutions += 1u32;
                if sorted[i] == sorted[j] {
                    diagonal += 1u32;
                }
            }
        }
    }
    let solutions = BigInt::from(solutions);
    let diagonal = BigInt::from(diagonal);
    let nondiagonal = &solutions - &diagonal;
    Ok(CountReport {
        spec: spec.clone(),
        x_max,
        solutions,
        diagonal,
        nondiagonal,
        elapsed: Duration::ZERO,
    })
}

// ---- Histogram route ----

/// Partial histogram produced by one shard of the multiset enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShardHistogram {
    map: BTreeMap<Vec<BigInt>, BigUint>,
    diagonal: BigUint,
}

impl ShardHistogram {
    pub fn empty() -> Self {
        ShardHistogram { map: BTreeMap::new(), diagonal: BigUint::zero() }
    }

    pub fn entries(&self) -> usize {
        self.map.len()
    }

    pub fn absorb(&mut self, other: ShardHistogram) {
        for (sig, w) in other.map {
            *self.map.entry(sig).or_insert_with(BigUint::zero) += w;
        }
        self.diagonal += other.diagonal;
    }
}

/// Histograms the multisets whose smallest entry z satisfies
/// (z - 1) % num_shards == shard. Merging all shards reproduces the full
/// enumeration exactly once.
pub fn count_shard(
    spec: &SystemSpec,
    x_max: u64,
    shard: usize,
    num_shards: usize,
) -> Result<ShardHistogram, CountError> {
    if x_max == 0 {
        return Err(CountError::ZeroXMax);
    }
    if num_shards == 0 || shard >= num_shards {
        return Err(CountError::ShardOutOfRange { shard, num_shards });
    }
    let mut hist = ShardHistogram::empty();
    for_each_multiset(spec.vars, x_max, spec.vars + 1, &mut |m| {
        if (m[0] - 1) % num_shards as u64 != shard as u64 {
            return;
        }
        let w = orderings(m);
        hist.diagonal += &w * &w;
        *hist.map.entry(spec.signature(m)).or_insert_with(BigUint::zero) += w;
    });
    Ok(hist)
}

/// Merges shard histograms and turns them into a report: solutions is the
/// sum of squared signature weights, diagonal the sum of squared ordering
/// counts.
pub fn finalize(spec: &SystemSpec, x_max: u64, parts: Vec<ShardHistogram>) -> CountReport {
    let mut merged = ShardHistogram::empty();
    for p in parts {
        merged.absorb(p);
    }
    let mut solutions = BigUint::zero();
    for w in merged.map.values() {
        solutions += w * w;
    }
    let solutions = BigInt::from(solutions);
    let diagonal = BigInt::from(merged.diagonal);
    let nondiagonal = &solutions - &diagonal;
    CountReport {
        spec: spec.clone(),
        x_max,
        solutions,
        diagonal,
        nondiagonal,
        elapsed: Duration::ZERO,
    }
}

/// Single-threaded histogram count with a budget precheck on the multiset
/// enumeration.
pub fn count_fast(
    spec: &SystemSpec,
    x_max: u64,
    budget: &Budget,
) -> Result<CountReport, CountError> {
    if x_max == 0 {
        return Err(CountError::ZeroXMax);
    }
    check_map_budget(spec.vars, x_max, budget)?;
    let hist = count_shard(spec, x_max, 0, 1)?;
    Ok(finalize(spec, x_max, alloc::vec![hist]))
}

// ---- Witness extraction ----

/// Lists non-diagonal solutions of the system with one degree omitted as
/// verified-shape witnesses, in lexicographic order of (sorted x, sorted y)
/// with x lexicographically below y, up to `limit`. The omitted-degree gap
/// h is the power-sum difference at exponent k - d.
pub fn nondiagonal_witnesses(
    k: usize,
    d: usize,
    x_max: u64,
    limit: usize,
    budget: &Budget,
) -> Result<Vec<Witness>, CountError> {
    if k == 0 {
        return Err(CountError::ZeroVars);
    }
    if 2 * d >= k {
        return Err(CountError::InvalidShift { k, d });
    }
    if x_max == 0 {
        return Err(CountError::ZeroXMax);
    }
    check_map_budget(k, x_max, budget)?;

    let spec = SystemSpec::incomplete(k, d).expect("checked shift");
    let mut groups: BTreeMap<Vec<BigInt>, Vec<Vec<u64>>> = BTreeMap::new();
    for_each_multiset(k, x_max, k + 1, &mut |m| {
        groups.entry(spec.signature(m)).or_default().push(m.to_vec());
    });

    let omitted = (k - d) as u32;
    let mut pairs: Vec<(Vec<u64>, Vec<u64>)> = Vec::new();
    for members in groups.values() {
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    pairs.sort();
    pairs.truncate(limit);

    let witnesses = pairs
        .into_iter()
        .map(|(x, y)| {
            let power = |t: &[u64]| -> BigInt {
                t.iter().map(|&z| BigInt::from(z).pow(omitted)).sum()
            };
            let h = power(&x) - power(&y);
            Witness::new(
                IntTuple::new(x).expect("nonempty in-range tuple"),
                IntTuple::new(y).expect("nonempty in-range tuple"),
                d,
                h,
            )
            .expect("shape checked")
        })
        .collect();
    Ok(witnesses)
}

// ---- Distinct-value split of the non-diagonal count ----

/// Non-diagonal solutions split by whether both tuples use fewer than r
/// distinct values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VSplit {
    pub k: usize,
    pub d: usize,
    pub x_max: u64,
    pub split_r: usize,
    /// Non-diagonal pairs where both sides have fewer than r distinct
    /// values.
    pub few_distinct: BigInt,
    /// The remaining non-diagonal pairs.
    pub many_distinct: BigInt,
    /// Their sum (the full non-diagonal count).
    pub nondiagonal: BigInt,
}

/// Splits the non-diagonal count at (k, d, X) by the distinct-value
/// threshold r. The few-distinct part is computed from a restricted
/// histogram over multisets with fewer than r distinct values, so the full
/// pair enumeration is never materialized.
pub fn v_split(
    k: usize,
    d: usize,
    x_max: u64,
    r: usize,
    budget: &Budget,
) -> Result<VSplit, CountError> {
    if r == 0 || r > k {
        return Err(CountError::SplitOutOfRange { r, k });
    }
    let spec = SystemSpec::incomplete(k, d)?;
    let report = count_fast(&spec, x_max, budget)?;

    let mut map: BTreeMap<Vec<BigInt>, BigUint> = BTreeMap::new();
    let mut restricted_diagonal = BigUint::zero();
    for_each_multiset(k, x_max, r, &mut |m| {
        let w = orderings(m);
        restricted_diagonal += &w * &w;
        *map.entry(spec.signature(m)).or_insert_with(BigUint::zero) += w;
    });
    let mut both_restricted = BigUint::zero();
    for w in map.values() {
        both_restricted += w * w;
    }
    let few_distinct = BigInt::from(both_restricted) - BigInt::from(restricted_diagonal);
    let many_distinct = &report.nondiagonal - &few_distinct;
    Ok(VSplit {
        k,
        d,
        x_max,
        split_r: r,
        few_distinct,
        many_distinct,
        nondiagonal: report.nondiagonal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn naive_frozen_examples() {
        let b = Budget::default();
        let r = count_naive(&SystemSpec::incomplete(2, 0).unwrap(), 2, &b).unwrap();
        assert_eq!((r.solutions, r.diagonal, r.nondiagonal), (big(6), big(6), big(0)));

        let r = count_naive(&SystemSpec::incomplete(3, 1).unwrap(), 2, &b).unwrap();
        assert_eq!((r.solutions, r.diagonal, r.nondiagonal), (big(20), big(20), big(0)));

        let r = count_naive(&SystemSpec::incomplete(2, 0).unwrap(), 4, &b).unwrap();
        assert_eq!((r.solutions, r.diagonal, r.nondiagonal), (big(44), big(28), big(16)));
    }

    #[test]
    fn fast_matches_naive_on_small_ranges() {
        let b = Budget::default();
        let cases: &[(usize, usize, u64)] =
            &[(2, 0, 6), (3, 0, 5), (3, 1, 4), (4, 2, 3), (4, 1, 3), (5, 2, 2)];
        for &(k, d, x_top) in cases {
            let spec = SystemSpec::incomplete(k, d).unwrap();
            for x in 1..=x_top {
                let naive = count_naive(&spec, x, &b).unwrap();
                let fast = count_fast(&spec, x, &b).unwrap();
                assert_eq!(naive.solutions, fast.solutions, "k={k} d={d} X={x}");
                assert_eq!(naive.diagonal, fast.diagonal, "k={k} d={d} X={x}");
            }
        }
    }

    #[test]
    fn full_system_is_all_diagonal_at_small_degree() {
        let b = Budget::default();
        let spec = SystemSpec::full(2, 2).unwrap();
        let r = count_fast(&spec, 2, &b).unwrap();
        assert_eq!((r.solutions, r.diagonal, r.nondiagonal), (big(6), big(6), big(0)));

        let spec = SystemSpec::full(3, 3).unwrap();
        for x in 1..=4 {
            let r = count_fast(&spec, x, &b).unwrap();
            assert_eq!(r.nondiagonal, big(0), "X={x}");
        }
    }

    #[test]
    fn diagonal_closed_forms() {
        let spec2 = SystemSpec::incomplete(2, 0).unwrap();
        assert_eq!(count_diagonal(&spec2, 3).unwrap(), big(15));

        // three variables: 6X^3 - 9X^2 + 4X
        let spec3 = SystemSpec::incomplete(3, 0).unwrap();
        for x in 1..=8i64 {
            let expect = 6 * x * x * x - 9 * x * x + 4 * x;
            assert_eq!(count_diagonal(&spec3, x as u64).unwrap(), big(expect), "X={x}");
        }

        // the diagonal ignores the exponent list
        let alt = SystemSpec::incomplete(3, 1).unwrap();
        assert_eq!(count_diagonal(&alt, 7).unwrap(), count_diagonal(&spec3, 7).unwrap());
    }

    #[test]
    fn shard_merge_is_invariant() {
        let b = Budget::default();
        let spec = SystemSpec::incomplete(3, 0).unwrap();
        let whole = count_fast(&spec, 6, &b).unwrap();
        for n in [1usize, 2, 3, 5, 6, 9] {
            let parts: Vec<ShardHistogram> =
                (0..n).map(|s| count_shard(&spec, 6, s, n).unwrap()).collect();
            let merged = finalize(&spec, 6, parts);
            assert_eq!(merged.solutions, whole.solutions, "shards={n}");
            assert_eq!(merged.diagonal, whole.diagonal, "shards={n}");
        }
    }

    #[test]
    fn witness_enumeration_frozen() {
        let b = Budget::default();
        let ws = nondiagonal_witnesses(3, 0, 7, usize::MAX, &b).unwrap();
        assert_eq!(ws.len(), 4);
        assert_eq!(ws[0].x.values(), &[1, 4, 4]);
        assert_eq!(ws[0].y.values(), &[2, 2, 5]);
        assert_eq!(ws[0].h, big(-12));
        assert!(ws
            .iter()
            .any(|w| w.x.values() == [1, 5, 6] && w.y.values() == [2, 3, 7] && w.h == big(-36)));

        let first = nondiagonal_witnesses(3, 0, 7, 1, &b).unwrap();
        assert_eq!(first.len(), 1);
        assert_eq!(first[0].x.values(), &[1, 4, 4]);

        let ws12 = nondiagonal_witnesses(3, 0, 12, usize::MAX, &b).unwrap();
        assert_eq!(ws12.len(), 32);
        assert!(ws12
            .iter()
            .any(|w| w.x.values() == [1, 5, 6] && w.y.values() == [2, 3, 7]));
    }

    #[test]
    fn witness_enumeration_shifted() {
        let b = Budget::default();
        let ws = nondiagonal_witnesses(3, 1, 6, usize::MAX, &b).unwrap();
        assert!(ws
            .iter()
            .any(|w| w.x.values() == [1, 5, 5] && w.y.values() == [2, 3, 6] && w.h == big(2)));

        let ws = nondiagonal_witnesses(4, 1, 15, usize::MAX, &b).unwrap();
        assert!(ws.iter().any(|w| w.x.values() == [2, 7, 11, 15]
            && w.y.values() == [3, 5, 13, 14]
            && w.h == big(-36)));
    }

    #[test]
    fn witness_enumeration_empty_ranges() {
        let b = Budget::default();
        for x in 1..=8 {
            assert!(nondiagonal_witnesses(4, 1, x, usize::MAX, &b).unwrap().is_empty(), "X={x}");
        }
        for x in 1..=6 {
            assert!(nondiagonal_witnesses(5, 2, x, usize::MAX, &b).unwrap().is_empty(), "X={x}");
        }
    }

    #[test]
    fn matching_nondiagonal_tuples_share_no_value() {
        // within any signature class, distinct multisets have disjoint
        // supports on these ranges
        for k in 2..=4usize {
            for d in 0..k {
                let spec = SystemSpec::incomplete(k, d).unwrap();
                for x_max in 1..=6u64 {
                    let mut groups: BTreeMap<Vec<BigInt>, Vec<Vec<u64>>> = BTreeMap::new();
                    for_each_multiset(k, x_max, k + 1, &mut |m| {
                        groups.entry(spec.signature(m)).or_default().push(m.to_vec());
                    });
                    for members in groups.values() {
                        for (i, a) in members.iter().enumerate() {
                            for b in &members[i + 1..] {
                                assert!(
                                    a.iter().all(|v| !b.contains(v)),
                                    "k={k} d={d} X={x_max}: {a:?} and {b:?} share a value"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn v_split_frozen_examples() {
        let b = Budget::default();
        let cases: &[(usize, usize, u64, usize, i64, i64)] = &[
            (2, 0, 4, 2, 0, 16),
            (3, 0, 8, 2, 0, 216),
            (3, 0, 8, 3, 72, 144),
            (3, 0, 7, 3, 54, 72),
        ];
        for &(k, d, x, r, v1, v2) in cases {
            let s = v_split(k, d, x, r, &b).unwrap();
            assert_eq!(s.few_distinct, big(v1), "k={k} d={d} X={x} r={r}");
            assert_eq!(s.many_distinct, big(v2), "k={k} d={d} X={x} r={r}");
            assert_eq!(s.nondiagonal, &s.few_distinct + &s.many_distinct);
        }
    }

    #[test]
    fn v_split_matches_direct_pair_enumeration() {
        let b = Budget::default();
        for (k, d, x_max, r) in [(3usize, 0usize, 6u64, 3usize), (3, 0, 5, 2), (3, 1, 4, 2)] {
            let spec = SystemSpec::incomplete(k, d).unwrap();
            // enumerate every ordered pair directly
            let n = (x_max as usize).pow(k as u32);
            let mut tuples = Vec::with_capacity(n);
            let mut t = vec![1u64; k];
            loop {
                tuples.push(t.clone());
                let mut pos = 0;
                while pos < k {
                    if t[pos] < x_max {
                        t[pos] += 1;
                        break;
                    }
                    t[pos] = 1;
                    pos += 1;
                }
                if pos == k {
                    break;
                }
            }
            let distinct = |t: &[u64]| {
                let mut s = t.to_vec();
                s.sort_unstable();
                s.dedup();
                s.len()
            };
            let mut few = 0i64;
            for a in &tuples {
                for bt in &tuples {
                    if spec.signature(a) != spec.signature(bt) {
                        continue;
                    }
                    let mut sa = a.clone();
                    let mut sb = bt.clone();
                    sa.sort_unstable();
                    sb.sort_unstable();
                    if sa == sb {
                        continue;
                    }
                    if distinct(a) < r && distinct(bt) < r {
                        few += 1;
                    }
                }
            }
            let s = v_split(k, d, x_max, r, &b).unwrap();
            assert_eq!(s.few_distinct, big(few), "k={k} d={d} X={x_max} r={r}");
        }
    }

    #[test]
    fn budget_refusals() {
        let b = Budget::default();
        let spec = SystemSpec::incomplete(5, 0).unwrap();
        match count_naive(&spec, 10, &b) {
            Err(CountError::PairBudgetExceeded { required, allowed }) => {
                assert_eq!(required, 10_000_000_000);
                assert_eq!(allowed, 1_000_000_000);
            }
            other => panic!("expected pair budget refusal, got {other:?}"),
        }

        let tiny = Budget { max_map_entries: 10, ..Budget::default() };
        match count_fast(&spec, 10, &tiny) {
            Err(CountError::MapBudgetExceeded { attempted, allowed }) => {
                assert_eq!(attempted, BigUint::from(2002u32));
                assert_eq!(allowed, 10);
            }
            other => panic!("expected map budget refusal, got {other:?}"),
        }
        assert!(matches!(
            nondiagonal_witnesses(5, 0, 10, 5, &tiny),
            Err(CountError::MapBudgetExceeded { .. })
        ));
    }

    #[test]
    fn parameter_validation() {
        let b = Budget::default();
        assert_eq!(SystemSpec::incomplete(3, 3), Err(CountError::InvalidShift { k: 3, d: 3 }));
        assert_eq!(SystemSpec::incomplete(0, 0), Err(CountError::ZeroVars));
        assert_eq!(SystemSpec::full(2, 0), Err(CountError::ZeroDegree));
        assert!(matches!(
            count_fast(&SystemSpec::incomplete(2, 0).unwrap(), 0, &b),
            Err(CountError::ZeroXMax)
        ));
        assert_eq!(
            nondiagonal_witnesses(4, 2, 5, 10, &b),
            Err(CountError::InvalidShift { k: 4, d: 2 })
        );
        assert!(matches!(v_split(3, 0, 4, 0, &b), Err(CountError::SplitOutOfRange { .. })));
        assert!(matches!(v_split(3, 0, 4, 4, &b), Err(CountError::SplitOutOfRange { .. })));
        assert!(matches!(
            count_shard(&SystemSpec::incomplete(2, 0).unwrap(), 3, 2, 2),
            Err(CountError::ShardOutOfRange { .. })
        ));
    }

    #[test]
    fn multiset_count_matches_enumeration() {
        for k in 1..=4usize {
            for x in 1..=6u64 {
                let mut n = 0u64;
                for_each_multiset(k, x, k + 1, &mut |_| n += 1);
                assert_eq!(multiset_count(k, x), BigUint::from(n), "k={k} X={x}");
            }
        }
    }
}
