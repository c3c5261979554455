//! Brute-force generation of partitions, overpartitions and k-colored
//! partitions, with their rank/crank statistics.
//!
//! This module is the independent ground truth for every table: it never
//! touches a generating function.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tables::{CrankTable, Provenance, Statistic};

/// Largest `n` enumerated for partition statistics (crank, rank).
pub const PARTITION_CEILING: usize = 60;
/// Largest `n` enumerated for overpartition statistics.
pub const OVERPARTITION_CEILING: usize = 25;
/// Largest `n` enumerated for k-colored partitions with `k <= 4`.
pub const KCOLORED_CEILING: usize = 25;
/// Largest `n` enumerated for k-colored partitions with `k > 4`.
pub const KCOLORED_WIDE_CEILING: usize = 15;

/// A partition; parts are stored weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts into weakly decreasing order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// One part of an overpartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OverPart {
    pub value: u32,
    pub overlined: bool,
}

/// An overpartition: each distinct part value may have its first occurrence
/// overlined. Parts are stored decreasing, with the overlined copy first
/// among equal values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Overpartition {
    parts: Vec<OverPart>,
}

impl Overpartition {
    /// Canonicalizes the ordering; returns `None` for zero parts or for two
    /// overlined copies of the same value.
    pub fn new(mut parts: Vec<OverPart>) -> Option<Self> {
        if parts.iter().any(|p| p.value == 0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.value.cmp(&a.value).then(b.overlined.cmp(&a.overlined)));
        let doubled = parts
            .windows(2)
            .any(|w| w[0].value == w[1].value && w[0].overlined && w[1].overlined);
        if doubled {
            return None;
        }
        Some(Overpartition { parts })
    }

    pub fn parts(&self) -> &[OverPart] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|p| u64::from(p.value)).sum()
    }

    /// The subpartition of non-overlined parts.
    pub fn non_overlined(&self) -> Partition {
        Partition {
            parts: self
                .parts
                .iter()
                .filter(|p| !p.overlined)
                .map(|p| p.value)
                .collect(),
        }
    }

    /// The even non-overlined parts, each halved.
    pub fn halved_even_non_overlined(&self) -> Partition {
        Partition {
            parts: self
                .parts
                .iter()
                .filter(|p| !p.overlined && p.value % 2 == 0)
                .map(|p| p.value / 2)
                .collect(),
        }
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if p.overlined {
                write!(f, "~{}", p.value)?;
            } else {
                write!(f, "{}", p.value)?;
            }
        }
        f.write_str(")")
    }
}

/// A k-tuple of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KColoredPartition {
    components: Vec<Partition>,
}

impl KColoredPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        KColoredPartition { components }
    }

    pub fn colors(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn size(&self) -> u64 {
        self.components.iter().map(Partition::size).sum()
    }
}

/// Signed unit weights placed at crank values; every object's weights sum to `+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedContribution(pub Vec<(i64, i64)>);

impl WeightedContribution {
    pub fn total_weight(&self) -> i64 {
        self.0.iter().map(|&(_, w)| w).sum()
    }

    /// Weight at `m`, zero if absent.
    pub fn weight_at(&self, m: i64) -> i64 {
        self.0
            .iter()
            .filter(|&&(x, _)| x == m)
            .map(|&(_, w)| w)
            .sum()
    }
}

/// Dyson's rank: largest part minus number of parts.
pub fn rank(p: &Partition) -> Result<i64> {
    match p.parts.first() {
        Some(&largest) => Ok(i64::from(largest) - p.len() as i64),
        None => Err(Error::EmptyPartition),
    }
}

/// Andrews-Garvan crank.
pub fn crank(p: &Partition) -> Result<i64> {
    if p.is_empty() {
        return Err(Error::EmptyPartition);
    }
    Ok(crank_of_parts(&p.parts))
}

/// Crank of a nonempty weakly decreasing part list.
fn crank_of_parts(parts: &[u32]) -> i64 {
    let ones = parts.iter().rev().take_while(|&&p| p == 1).count();
    if ones == 0 {
        return i64::from(parts[0]);
    }
    let above = parts.iter().take_while(|&&p| p as usize > ones).count();
    above as i64 - ones as i64
}

/// Weights contributed to the crank table by a partition. The partition `(1)`
/// spreads as `-1` at `m = 0` and `+1` at `m = ±1`; the empty partition sits at `0`.
pub fn crank_contrib(p: &Partition) -> WeightedContribution {
    let mut out = Vec::with_capacity(3);
    visit_crank_contrib(&p.parts, |m, w| out.push((m, w)));
    WeightedContribution(out)
}

fn visit_crank_contrib(parts: &[u32], mut emit: impl FnMut(i64, i64)) {
    match parts {
        [] => emit(0, 1),
        [1] => {
            emit(0, -1);
            emit(-1, 1);
            emit(1, 1);
        }
        _ => emit(crank_of_parts(parts), 1),
    }
}

/// `crank_contrib` of the non-overlined subpartition.
pub fn first_residual_contrib(o: &Overpartition) -> WeightedContribution {
    crank_contrib(&o.non_overlined())
}

/// `crank_contrib` of the halved even non-overlined parts.
pub fn second_residual_contrib(o: &Overpartition) -> WeightedContribution {
    crank_contrib(&o.halved_even_non_overlined())
}

/// Number of parts of the first component minus number of parts of the second.
pub fn kcrank(c: &KColoredPartition) -> Result<i64> {
    if c.colors() < 2 {
        return Err(Error::InvalidColors(c.colors()));
    }
    Ok(c.components[0].len() as i64 - c.components[1].len() as i64)
}

/// Partitions of `n` in colexicographic order: the part lists read
/// smallest-first are in lexicographic order, so `(1,...,1)` comes first and
/// `(n)` last.
pub struct Partitions {
    // ascending parts in a[0..=k]
    a: Vec<u32>,
    k: usize,
    pending_empty: bool,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.pending_empty {
            self.pending_empty = false;
            return Some(Partition::empty());
        }
        let asc = self.advance()?;
        Some(Partition {
            parts: asc.iter().rev().copied().collect(),
        })
    }
}

impl Partitions {
    /// Kelleher's ascending-composition rule; returns the next ascending part list.
    fn advance(&mut self) -> Option<&[u32]> {
        if self.k == 0 {
            return None;
        }
        let a = &mut self.a;
        let mut k = self.k;
        let x = a[k - 1] + 1;
        let mut y = a[k] - 1;
        k -= 1;
        while x <= y {
            a[k] = x;
            y -= x;
            k += 1;
        }
        a[k] = x + y;
        self.k = k;
        Some(&self.a[..=k])
    }
}

pub fn gen_partitions(n: usize) -> Partitions {
    if n == 0 {
        return Partitions {
            a: Vec::new(),
            k: 0,
            pending_empty: true,
        };
    }
    let mut a = vec![0u32; n + 1];
    a[1] = n as u32;
    Partitions {
        a,
        k: 1,
        pending_empty: false,
    }
}

/// Calls `visit` with the decreasing part list of every partition of `n`.
fn for_each_partition(n: usize, mut visit: impl FnMut(&[u32])) {
    let mut it = gen_partitions(n);
    if it.pending_empty {
        visit(&[]);
        return;
    }
    let mut desc = Vec::with_capacity(n);
    while let Some(asc) = it.advance() {
        desc.clear();
        desc.extend(asc.iter().rev());
        visit(&desc);
    }
}

/// Overpartitions of `n`: partitions in [`gen_partitions`] order, and for each
/// one every subset of its distinct values overlined (subset as a bit mask
/// over distinct values, largest value in the lowest bit).
pub fn gen_overpartitions(n: usize) -> impl Iterator<Item = Overpartition> {
    gen_partitions(n).flat_map(|p| {
        let mut distinct: Vec<u32> = p.parts.clone();
        distinct.dedup();
        let masks = 1u64 << distinct.len();
        (0..masks).map(move |mask| overline(&p.parts, &distinct, mask))
    })
}

fn overline(parts: &[u32], distinct: &[u32], mask: u64) -> Overpartition {
    let mut out = Vec::with_capacity(parts.len());
    let mut slot = 0usize;
    let mut prev = 0u32;
    for &v in parts {
        let first = v != prev;
        if first && prev != 0 {
            slot += 1;
        }
        prev = v;
        debug_assert_eq!(distinct[slot], v);
        out.push(OverPart {
            value: v,
            overlined: first && (mask >> slot) & 1 == 1,
        });
    }
    Overpartition { parts: out }
}

/// k-colored partitions of `n`; component sizes run over weak compositions of
/// `n` in lexicographic order, components over [`gen_partitions`] order.
pub fn gen_kcolored(k: usize, n: usize) -> Vec<KColoredPartition> {
    let by_size: Vec<Vec<Partition>> = (0..=n).map(|s| gen_partitions(s).collect()).collect();
    let mut out = Vec::new();
    let mut current: Vec<&Partition> = Vec::with_capacity(k);
    for_each_tuple(&by_size, k, n, &mut current, &mut |c| {
        out.push(KColoredPartition::new(
            c.iter().map(|&p| p.clone()).collect(),
        ));
    });
    out
}

fn for_each_tuple<'a, T>(
    by_size: &'a [Vec<T>],
    k: usize,
    remaining: usize,
    current: &mut Vec<&'a T>,
    visit: &mut impl FnMut(&[&'a T]),
) {
    if current.len() + 1 == k {
        for item in &by_size[remaining] {
            current.push(item);
            visit(current);
            current.pop();
        }
        return;
    }
    for size in 0..=remaining {
        for item in &by_size[size] {
            current.push(item);
            for_each_tuple(by_size, k, remaining - size, current, visit);
            current.pop();
        }
    }
}

/// Enumeration ceiling for a statistic.
pub fn oracle_ceiling(statistic: Statistic) -> usize {
    match statistic {
        Statistic::Crank | Statistic::Rank => PARTITION_CEILING,
        Statistic::OverlineCrank | Statistic::M2Crank => OVERPARTITION_CEILING,
        Statistic::KCrank(k) if k <= 4 => KCOLORED_CEILING,
        Statistic::KCrank(_) => KCOLORED_WIDE_CEILING,
    }
}

/// Dense row of weighted counts for `m` in `-n..=n`.
fn row_by_enumeration(statistic: Statistic, n: usize) -> Vec<i64> {
    let offset = n as i64;
    let mut row = vec![0i64; 2 * n + 1];
    let mut add = |m: i64, w: i64| row[(m + offset) as usize] += w;
    match statistic {
        Statistic::Crank => for_each_partition(n, |p| visit_crank_contrib(p, &mut add)),
        Statistic::Rank => for_each_partition(n, |p| match p.first() {
            Some(&largest) => add(i64::from(largest) - p.len() as i64, 1),
            None => add(0, 1),
        }),
        Statistic::OverlineCrank => {
            for o in gen_overpartitions(n) {
                for (m, w) in first_residual_contrib(&o).0 {
                    add(m, w);
                }
            }
        }
        Statistic::M2Crank => {
            for o in gen_overpartitions(n) {
                for (m, w) in second_residual_contrib(&o).0 {
                    add(m, w);
                }
            }
        }
        Statistic::KCrank(k) => {
            let lengths: Vec<Vec<usize>> = (0..=n)
                .map(|s| gen_partitions(s).map(|p| p.len()).collect())
                .collect();
            let mut current = Vec::with_capacity(k);
            for_each_tuple(&lengths, k, n, &mut current, &mut |c| {
                add(*c[0] as i64 - *c[1] as i64, 1);
            });
        }
    }
    row
}

/// Weighted-count table built by exhaustive enumeration, rows `0..=n_max`.
pub fn oracle_table(statistic: Statistic, n_max: usize) -> Result<CrankTable> {
    if let Statistic::KCrank(k) = statistic {
        if k < 2 {
            return Err(Error::InvalidColors(k));
        }
    }
    let ceiling = oracle_ceiling(statistic);
    if n_max > ceiling {
        return Err(Error::OracleCeiling {
            statistic,
            requested: n_max,
            ceiling,
        });
    }
    let rows: Vec<Vec<i64>> = (0..=n_max)
        .into_par_iter()
        .map(|n| row_by_enumeration(statistic, n))
        .collect();
    CrankTable::from_dense_rows(statistic, Provenance::Oracle, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn over(v: &[(u32, bool)]) -> Overpartition {
        Overpartition::new(
            v.iter()
                .map(|&(value, overlined)| OverPart { value, overlined })
                .collect(),
        )
        .unwrap()
    }

    fn weights(c: &WeightedContribution) -> Vec<(i64, i64)> {
        let mut v = c.0.clone();
        v.sort_unstable();
        v
    }

    #[test]
    fn partition_counts() {
        assert_eq!(
            gen_partitions(0).collect::<Vec<_>>(),
            vec![Partition::empty()]
        );
        assert_eq!(gen_partitions(4).count(), 5);
        assert_eq!(gen_partitions(10).count(), 42);
    }

    #[test]
    fn colex_order() {
        let got: Vec<Vec<u32>> = gen_partitions(4).map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![1, 1, 1, 1],
                vec![2, 1, 1],
                vec![3, 1],
                vec![2, 2],
                vec![4]
            ]
        );
    }

    #[test]
    fn partitions_are_distinct_and_sum_to_n() {
        for n in 0..=18 {
            let all: Vec<Partition> = gen_partitions(n).collect();
            let unique: std::collections::HashSet<_> = all.iter().collect();
            assert_eq!(unique.len(), all.len());
            for p in &all {
                assert_eq!(p.size(), n as u64);
                assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }

    #[test]
    fn overpartition_listing() {
        assert_eq!(gen_overpartitions(0).count(), 1);
        assert_eq!(gen_overpartitions(4).count(), 14);
        let two: Vec<String> = gen_overpartitions(2).map(|o| o.to_string()).collect();
        assert_eq!(two, vec!["(1,1)", "(~1,1)", "(2)", "(~2)"]);
        for o in gen_overpartitions(9) {
            assert_eq!(Overpartition::new(o.parts().to_vec()).as_ref(), Some(&o));
        }
    }

    #[test]
    fn overpartition_validation() {
        assert!(Overpartition::new(vec![
            OverPart {
                value: 2,
                overlined: true
            },
            OverPart {
                value: 2,
                overlined: true
            },
        ])
        .is_none());
        let o = over(&[(2, false), (2, true)]);
        assert_eq!(o.to_string(), "(~2,2)");
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&part(&[4])).unwrap(), 3);
        assert_eq!(rank(&part(&[2, 1])).unwrap(), 0);
        assert_eq!(rank(&part(&[1, 1, 1, 1])).unwrap(), -3);
        assert!(matches!(
            rank(&Partition::empty()),
            Err(Error::EmptyPartition)
        ));
    }

    #[test]
    fn crank_examples() {
        assert_eq!(crank(&part(&[9, 7, 5, 5, 4, 3, 1, 1])).unwrap(), 4);
        assert_eq!(crank(&part(&[3])).unwrap(), 3);
        assert_eq!(crank(&part(&[1, 1])).unwrap(), -2);
        assert!(crank(&Partition::empty()).is_err());
    }

    #[test]
    fn crank_contributions() {
        assert_eq!(
            weights(&crank_contrib(&part(&[1]))),
            vec![(-1, 1), (0, -1), (1, 1)]
        );
        assert_eq!(weights(&crank_contrib(&Partition::empty())), vec![(0, 1)]);
        assert_eq!(weights(&crank_contrib(&part(&[2, 1]))), vec![(0, 1)]);
    }

    #[test]
    fn residual_contributions() {
        let a = over(&[(7, true), (5, true), (2, true), (1, false)]);
        assert_eq!(a.size(), 15);
        assert_eq!(
            weights(&first_residual_contrib(&a)),
            vec![(-1, 1), (0, -1), (1, 1)]
        );

        let lambda = over(&[
            (9, true),
            (9, false),
            (7, false),
            (6, true),
            (5, false),
            (5, false),
            (4, true),
            (4, false),
            (3, false),
            (1, true),
            (1, false),
            (1, false),
        ]);
        assert_eq!(lambda.non_overlined().parts(), &[9, 7, 5, 5, 4, 3, 1, 1]);
        assert_eq!(weights(&first_residual_contrib(&lambda)), vec![(4, 1)]);
        assert_eq!(lambda.halved_even_non_overlined().parts(), &[2]);
        assert_eq!(weights(&second_residual_contrib(&lambda)), vec![(2, 1)]);

        assert_eq!(
            weights(&first_residual_contrib(&over(&[(2, true)]))),
            vec![(0, 1)]
        );

        let b = over(&[
            (10, true),
            (9, false),
            (9, false),
            (7, true),
            (7, false),
            (6, true),
            (5, false),
            (3, false),
            (3, false),
            (2, true),
            (2, false),
        ]);
        assert_eq!(
            weights(&second_residual_contrib(&b)),
            vec![(-1, 1), (0, -1), (1, 1)]
        );
        assert_eq!(
            weights(&second_residual_contrib(&over(&[(1, false), (1, false)]))),
            vec![(0, 1)]
        );
    }

    #[test]
    fn kcrank_examples() {
        let c = |v: Vec<&[u32]>| KColoredPartition::new(v.into_iter().map(part).collect());
        assert_eq!(kcrank(&c(vec![&[1], &[], &[]])).unwrap(), 1);
        assert_eq!(kcrank(&c(vec![&[], &[1, 1]])).unwrap(), -2);
        assert_eq!(kcrank(&c(vec![&[2, 1], &[3]])).unwrap(), 1);
        assert!(matches!(
            kcrank(&c(vec![&[1]])),
            Err(Error::InvalidColors(1))
        ));
    }

    #[test]
    fn kcolored_listing() {
        let two = gen_kcolored(2, 1);
        assert_eq!(two.len(), 2);
        let cranks: Vec<i64> = two.iter().map(|c| kcrank(c).unwrap()).collect();
        assert_eq!(cranks, vec![-1, 1]);
        // coefficients of 1/(q;q)^3: 1, 3, 9, 22, 51
        let counts: Vec<usize> = (0..=4).map(|n| gen_kcolored(3, n).len()).collect();
        assert_eq!(counts, vec![1, 3, 9, 22, 51]);
        assert!(gen_kcolored(3, 4)
            .iter()
            .all(|c| c.size() == 4 && c.colors() == 3));
    }

    #[test]
    fn every_contribution_has_unit_weight() {
        for n in 0..=10 {
            for o in gen_overpartitions(n) {
                assert_eq!(first_residual_contrib(&o).total_weight(), 1);
                assert_eq!(second_residual_contrib(&o).total_weight(), 1);
            }
        }
    }

    #[test]
    fn oracle_rows() {
        let t = oracle_table(Statistic::OverlineCrank, 2).unwrap();
        assert_eq!(t.full_row_i64(2), vec![1, 1, 0, 1, 1]);
        let r = oracle_table(Statistic::Rank, 4).unwrap();
        assert_eq!(r.full_row_i64(4), vec![0, 1, 0, 1, 1, 1, 0, 1, 0]);
        let c = oracle_table(Statistic::Crank, 1).unwrap();
        assert_eq!(c.full_row_i64(1), vec![1, -1, 1]);
    }

    #[test]
    fn oracle_ceilings_enforced() {
        assert!(matches!(
            oracle_table(Statistic::OverlineCrank, 26),
            Err(Error::OracleCeiling { ceiling: 25, .. })
        ));
        assert!(matches!(
            oracle_table(Statistic::KCrank(1), 3),
            Err(Error::InvalidColors(1))
        ));
    }
}
