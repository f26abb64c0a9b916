//! Partitions, standard Young tableaux and multi-partitions.
//!
//! These index the irreducible representations: partitions of `n` index
//! `Irr(S_n)`, and multi-partitions (one partition per base-group irrep,
//! total size `n`) index `Irr(W_n)`. Enumeration orders are part of the
//! public contract: partitions come in reverse-lexicographic order, and
//! tableaux in last-letter order, so downstream matrices are reproducible
//! bit-for-bit across runs.

use std::fmt;

use crate::error::{Error, Result};

/// An integer partition: weakly decreasing positive parts.
///
/// The empty partition is the unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::validation(format!(
                    "parts not weakly decreasing: {parts:?}"
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::validation(format!("zero part in {parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Single-row partition `(n)`, indexing the trivial representation.
    pub fn single_row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The hook `(n-1, 1)` of the standard representation.
    pub fn standard_hook(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!("(n-1,1) needs n >= 2, got {n}")));
        }
        Partition::new(vec![n - 1, 1])
    }

    /// Parses `"(3,1)"`, `"(2)"` or `"()"`.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::parse(format!("partition must look like (2,1): {text:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(format!("bad part {p:?} in {text:?}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `m`, reverse-lexicographic: first part descending,
/// recursively. `p(0) = [()]`.
pub fn enumerate_partitions(m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for first in (1..=top).rev() {
            current.push(first);
            rec(remaining - first, first, current, out);
            current.pop();
        }
    }
    rec(m, m.max(1), &mut current, &mut out);
    out
}

/// A standard Young tableau: the diagram of `shape` filled by `1..=size`,
/// strictly increasing along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(shape: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = shape.size();
        if rows.len() != shape.num_rows() {
            return Err(Error::validation("row count differs from shape"));
        }
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.parts()[r] {
                return Err(Error::validation(format!("row {r} has wrong length")));
            }
            for (c, &v) in row.iter().enumerate() {
                if v < 1 || v > n || seen[v] {
                    return Err(Error::validation(format!("bad or repeated entry {v}")));
                }
                seen[v] = true;
                if c > 0 && row[c - 1] >= v {
                    return Err(Error::validation("rows must increase"));
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(Error::validation("columns must increase"));
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// 0-based (row, column) of entry `k`.
    pub fn position_of(&self, k: usize) -> Option<(usize, usize)> {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == k {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Content `col - row` of entry `k` (0-based coordinates); the axial
    /// distance between consecutive entries drives Young's orthogonal form.
    pub fn content_of(&self, k: usize) -> Option<i64> {
        self.position_of(k).map(|(r, c)| c as i64 - r as i64)
    }
}

/// All standard tableaux of shape `mu` in last-letter order, plus their
/// count (the dimension of the corresponding `S_n`-irrep).
///
/// Last-letter order: tableaux compare by the row of the largest entry on
/// which they differ, later rows first. Generation removes the largest
/// entry from each corner, corners ordered by descending row.
pub fn tableaux_and_dimension(mu: &Partition) -> (Vec<StandardTableau>, usize) {
    let n = mu.size();
    if n == 0 {
        let empty = StandardTableau {
            shape: Partition::empty(),
            rows: Vec::new(),
        };
        return (vec![empty], 1);
    }

    fn corners(parts: &[usize]) -> Vec<usize> {
        // Rows whose last cell is removable, descending row index.
        let mut out = Vec::new();
        for r in (0..parts.len()).rev() {
            if r + 1 == parts.len() || parts[r] > parts[r + 1] {
                out.push(r);
            }
        }
        out
    }

    fn rec(parts: &mut Vec<usize>, entry: usize, filling: &mut Vec<(usize, usize, usize)>, out: &mut Vec<Vec<(usize, usize, usize)>>) {
        if entry == 0 {
            out.push(filling.clone());
            return;
        }
        for r in corners(parts) {
            let c = parts[r] - 1;
            filling.push((entry, r, c));
            parts[r] -= 1;
            if parts[r] == 0 {
                parts.pop();
            }
            rec(parts, entry - 1, filling, out);
            if parts.len() == r {
                parts.push(1);
            } else {
                parts[r] += 1;
            }
            filling.pop();
        }
    }

    let mut placements = Vec::new();
    let mut parts = mu.parts().to_vec();
    rec(&mut parts, n, &mut Vec::new(), &mut placements);

    let tableaux: Vec<StandardTableau> = placements
        .into_iter()
        .map(|placement| {
            let mut rows: Vec<Vec<usize>> = mu.parts().iter().map(|&len| vec![0; len]).collect();
            for (entry, r, c) in placement {
                rows[r][c] = entry;
            }
            StandardTableau {
                shape: mu.clone(),
                rows,
            }
        })
        .collect();
    let dim = tableaux.len();
    (tableaux, dim)
}

/// A multi-partition: one partition per base-group irrep slot.
///
/// The order (total size) equals `n` when indexing `Irr(W_n)`; the support
/// is the set of slots carrying a nonempty partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPartition {
    slots: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(slots: Vec<Partition>) -> Self {
        MultiPartition { slots }
    }

    pub fn num_slots(&self) -> usize {
        self.slots.len()
    }

    pub fn slot(&self, i: usize) -> &Partition {
        &self.slots[i]
    }

    pub fn slots(&self) -> &[Partition] {
        &self.slots
    }

    /// Total size across slots.
    pub fn order(&self) -> usize {
        self.slots.iter().map(|p| p.size()).sum()
    }

    /// Slot indices with a nonempty partition, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.slots.len())
            .filter(|&i| !self.slots[i].is_empty())
            .collect()
    }

    /// Whether the support is exactly the trivial slot 0 (the lifts).
    pub fn is_lift(&self) -> bool {
        self.support() == [0]
    }

    /// Parses `"((2);();(1))"`.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::parse(format!("multi-partition must look like ((2);();(1)): {text:?}")))?;
        let slots: Vec<Partition> = inner
            .split(';')
            .map(|s| Partition::parse(s.trim()))
            .collect::<Result<_>>()?;
        Ok(MultiPartition { slots })
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.slots.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All multi-partitions with `num_slots` slots and total size `n`.
///
/// Slot sizes are chosen first-slot-largest (descending weak compositions),
/// and each slot runs through `enumerate_partitions` order.
pub fn enumerate_multipartitions(num_slots: usize, n: usize) -> Vec<MultiPartition> {
    assert!(num_slots >= 1, "need at least one slot");
    let mut out = Vec::new();
    let mut current: Vec<Partition> = Vec::new();
    fn rec(
        slot: usize,
        num_slots: usize,
        remaining: usize,
        current: &mut Vec<Partition>,
        out: &mut Vec<MultiPartition>,
    ) {
        if slot == num_slots {
            if remaining == 0 {
                out.push(MultiPartition::new(current.clone()));
            }
            return;
        }
        if slot == num_slots - 1 {
            for p in enumerate_partitions(remaining) {
                current.push(p);
                rec(slot + 1, num_slots, 0, current, out);
                current.pop();
            }
            return;
        }
        for size in (0..=remaining).rev() {
            for p in enumerate_partitions(size) {
                current.push(p);
                rec(slot + 1, num_slots, remaining - size, current, out);
                current.pop();
            }
        }
    }
    rec(0, num_slots, n, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent partition counter via the bounded-part recurrence.
    fn partition_count_oracle(m: usize) -> usize {
        fn p(m: usize, max: usize) -> usize {
            if m == 0 {
                return 1;
            }
            (1..=max.min(m)).map(|first| p(m - first, first)).sum()
        }
        p(m, m.max(1))
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn partitions_of_small_m() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let p3: Vec<String> = enumerate_partitions(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(p3, vec!["(3)", "(2,1)", "(1,1,1)"]);
        assert_eq!(enumerate_partitions(5).len(), 7);
    }

    #[test]
    fn partition_counts_match_oracle() {
        for m in 0..=8 {
            assert_eq!(
                enumerate_partitions(m).len(),
                partition_count_oracle(m),
                "count mismatch at m={m}"
            );
        }
    }

    #[test]
    fn partitions_are_unique_and_reverse_lex() {
        for m in 0..=8 {
            let ps = enumerate_partitions(m);
            for w in ps.windows(2) {
                // Reverse-lexicographic: earlier entry is lexicographically larger.
                assert!(w[0].parts() > w[1].parts(), "{:?} !> {:?}", w[0], w[1]);
            }
            let mut dedup = ps.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), ps.len());
            for p in &ps {
                assert_eq!(p.size(), m);
            }
        }
    }

    #[test]
    fn tableaux_counts_and_dimension_identity() {
        let (ts, d) = tableaux_and_dimension(&Partition::new(vec![4]).unwrap());
        assert_eq!(d, 1);
        assert_eq!(ts[0].rows(), &[vec![1, 2, 3, 4]]);

        let (ts, d) = tableaux_and_dimension(&Partition::new(vec![2, 1]).unwrap());
        assert_eq!(d, 2);
        // Last-letter order: the row-filled tableau first.
        assert_eq!(ts[0].rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(ts[1].rows(), &[vec![1, 3], vec![2]]);

        let (_, d31) = tableaux_and_dimension(&Partition::new(vec![3, 1]).unwrap());
        assert_eq!(d31, 3);

        // Regular-representation dimension identity.
        for m in 1..=6 {
            let total: usize = enumerate_partitions(m)
                .iter()
                .map(|mu| {
                    let (_, d) = tableaux_and_dimension(mu);
                    d * d
                })
                .sum();
            assert_eq!(total, factorial(m), "sum dim^2 != m! at m={m}");
        }
    }

    #[test]
    fn tableaux_last_letter_order() {
        // For (3,1): A=[[1,2,3],[4]], B=[[1,2,4],[3]], C=[[1,3,4],[2]].
        let (ts, _) = tableaux_and_dimension(&Partition::new(vec![3, 1]).unwrap());
        assert_eq!(ts[0].rows(), &[vec![1, 2, 3], vec![4]]);
        assert_eq!(ts[1].rows(), &[vec![1, 2, 4], vec![3]]);
        assert_eq!(ts[2].rows(), &[vec![1, 3, 4], vec![2]]);
        // Pairwise check of the defining comparison.
        for i in 0..ts.len() {
            for j in (i + 1)..ts.len() {
                let n = ts[i].size();
                let k = (1..=n)
                    .rev()
                    .find(|&k| ts[i].position_of(k) != ts[j].position_of(k))
                    .unwrap();
                let (ri, _) = ts[i].position_of(k).unwrap();
                let (rj, _) = ts[j].position_of(k).unwrap();
                assert!(ri > rj, "tableau {i} should place {k} in a later row than {j}");
            }
        }
    }

    #[test]
    fn tableaux_are_valid() {
        for mu in enumerate_partitions(6) {
            let (ts, d) = tableaux_and_dimension(&mu);
            assert_eq!(ts.len(), d);
            for t in &ts {
                StandardTableau::new(mu.clone(), t.rows().to_vec()).unwrap();
            }
        }
    }

    #[test]
    fn multipartitions_single_slot_and_pairs() {
        let single = enumerate_multipartitions(1, 4);
        assert_eq!(single.len(), enumerate_partitions(4).len());

        let two = enumerate_multipartitions(2, 2);
        let shown: Vec<String> = two.iter().map(|m| m.to_string()).collect();
        assert_eq!(
            shown,
            vec!["((2);())", "((1,1);())", "((1);(1))", "(();(2))", "(();(1,1))"]
        );
        // 3 slots, order 2: one slot holding (2) or (1,1) gives 6, two
        // slots holding (1) each gives 3.
        assert_eq!(enumerate_multipartitions(3, 2).len(), 9);
    }

    #[test]
    fn multipartition_counts_match_composition_oracle() {
        // Direct double loop over weak compositions.
        fn oracle(k: usize, n: usize) -> usize {
            fn rec(slots: usize, remaining: usize) -> usize {
                if slots == 1 {
                    return enumerate_partitions(remaining).len();
                }
                (0..=remaining)
                    .map(|m| enumerate_partitions(m).len() * rec(slots - 1, remaining - m))
                    .sum()
            }
            rec(k, n)
        }
        for k in 1..=3 {
            for n in 0..=5 {
                assert_eq!(enumerate_multipartitions(k, n).len(), oracle(k, n));
            }
        }
    }

    #[test]
    fn multipartition_order_support_and_parse() {
        let m = MultiPartition::parse("((2);();(1))").unwrap();
        assert_eq!(m.order(), 3);
        assert_eq!(m.support(), vec![0, 2]);
        assert!(!m.is_lift());
        let lift = MultiPartition::parse("((2,1);())").unwrap();
        assert!(lift.is_lift());
        assert_eq!(MultiPartition::parse(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn partition_parse_and_validation() {
        assert_eq!(Partition::parse("(3,1)").unwrap().parts(), &[3, 1]);
        assert_eq!(Partition::parse("()").unwrap(), Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::parse("3,1").is_err());
    }
}
