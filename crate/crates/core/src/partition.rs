//! Integer partitions and compositions, with the descent-set dictionary
//! between compositions of `n` and subsets of `{1, ..., n-1}`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition is
/// allowed and indexes the degree-0 basis element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(parts));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row length with 1-based index; rows beyond the last part have length 0.
    pub fn row(&self, r: usize) -> u32 {
        if r >= 1 && r <= self.0.len() {
            self.0[r - 1]
        } else {
            0
        }
    }

    /// Cell membership for the 1-based cell (row, column).
    pub fn contains_cell(&self, row: usize, col: u32) -> bool {
        row >= 1 && col >= 1 && self.row(row) >= col
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other
            .0
            .iter()
            .enumerate()
            .all(|(i, &p)| self.row(i + 1) >= p)
    }

    pub fn conjugate(&self) -> Partition {
        let mut cols = Vec::new();
        if let Some(&first) = self.0.first() {
            for c in 1..=first {
                cols.push(self.0.iter().filter(|&&p| p >= c).count() as u32);
            }
        }
        Partition(cols)
    }

    /// Dominance order on partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let mut a = 0u32;
        let mut b = 0u32;
        for i in 0..self.0.len().max(other.0.len()) {
            a += self.row(i + 1);
            b += other.row(i + 1);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Internal constructor for rows already known to be valid.
    pub(crate) fn from_rows_unchecked(rows: Vec<u32>) -> Partition {
        debug_assert!(Partition::new(rows.clone()).is_ok());
        Partition(rows)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// A sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// The partition obtained by sorting the parts decreasingly.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_rows_unchecked(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// The descent set D(alpha) = {a1, a1+a2, ...} of partial sums, omitting the
/// full sum.
pub fn descent_set(alpha: &Composition) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    let mut acc = 0;
    for (i, &p) in alpha.parts().iter().enumerate() {
        acc += p;
        if i + 1 < alpha.len() {
            out.insert(acc);
        }
    }
    out
}

/// The unique composition of `n` whose descent set equals `descents`.
pub fn composition_from_descents(n: u32, descents: &BTreeSet<u32>) -> Result<Composition> {
    if n == 0 {
        if descents.is_empty() {
            return Ok(Composition::empty());
        }
        return Err(Error::InvalidDescent {
            descent: *descents.iter().next().unwrap(),
            max: 0,
        });
    }
    for &d in descents {
        if d == 0 || d >= n {
            return Err(Error::InvalidDescent {
                descent: d,
                max: n - 1,
            });
        }
    }
    let mut parts = Vec::with_capacity(descents.len() + 1);
    let mut prev = 0;
    for &d in descents {
        parts.push(d - prev);
        prev = d;
    }
    parts.push(n - prev);
    Composition::new(parts)
}

/// `beta` refines `alpha` when D(alpha) is a subset of D(beta); this is the
/// order in which the fundamental basis expands over the monomial one.
pub fn refines(beta: &Composition, alpha: &Composition) -> Result<bool> {
    if beta.size() != alpha.size() {
        return Err(Error::SizeMismatch {
            left: beta.size(),
            right: alpha.size(),
        });
    }
    let da = descent_set(alpha);
    let db = descent_set(beta);
    Ok(da.is_subset(&db))
}

/// The descent composition of a label word: position `r` is a descent
/// exactly when `labels[r-1] > labels[r]`.
pub fn chain_composition(labels: &[i64]) -> Composition {
    let n = labels.len() as u32;
    let mut descents = BTreeSet::new();
    for (i, w) in labels.windows(2).enumerate() {
        if w[0] > w[1] {
            descents.insert(i as u32 + 1);
        }
    }
    composition_from_descents(n, &descents).expect("descents are in range by construction")
}

/// All partitions of `n`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n)
}

/// All partitions of `n` with every part at most `max`.
pub fn partitions_bounded(n: u32, max: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::from_rows_unchecked(acc.clone()));
            return;
        }
        let top = max.min(n);
        for p in (1..=top).rev() {
            acc.push(p);
            rec(n - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    rec(n, max, &mut acc, &mut out);
    out
}

/// All partitions contained in `outer`.
pub fn sub_partitions(outer: &Partition) -> Vec<Partition> {
    fn rec(outer: &[u32], row: usize, prev: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == outer.len() {
            out.push(Partition::from_rows_unchecked(
                acc.iter().copied().take_while(|&p| p > 0).collect(),
            ));
            return;
        }
        let top = outer[row].min(prev);
        for p in (0..=top).rev() {
            acc.push(p);
            rec(outer, row + 1, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    rec(outer.parts(), 0, u32::MAX, &mut acc, &mut out);
    out.sort();
    out.dedup();
    out
}

/// All distinct rearrangements of the parts of `lambda` as compositions.
pub fn rearrangements(lambda: &Partition) -> Vec<Composition> {
    fn rec(remaining: &mut Vec<u32>, acc: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if remaining.is_empty() {
            out.push(Composition::new(acc.clone()).unwrap());
            return;
        }
        let mut seen = BTreeSet::new();
        for i in 0..remaining.len() {
            let p = remaining[i];
            if !seen.insert(p) {
                continue;
            }
            remaining.swap_remove(i);
            acc.push(p);
            rec(remaining, acc, out);
            acc.pop();
            remaining.push(p);
            let last = remaining.len() - 1;
            remaining.swap(i, last);
        }
    }
    let mut remaining = lambda.parts().to_vec();
    let mut acc = Vec::new();
    let mut out = Vec::new();
    rec(&mut remaining, &mut acc, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Partitions of `n` in lexicographically decreasing order; this refines
/// dominance, so triangular systems can be solved in one pass.
pub fn partitions_lex_desc(n: u32) -> Vec<Partition> {
    let mut all = partitions_of(n);
    all.sort_by(|a, b| b.parts().cmp(a.parts()));
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn descent_sets() {
        assert_eq!(
            descent_set(&comp(&[2, 1, 1])),
            BTreeSet::from([2, 3]),
        );
        assert_eq!(descent_set(&comp(&[4])), BTreeSet::new());
        assert_eq!(descent_set(&comp(&[1, 1, 2])), BTreeSet::from([1, 2]));
    }

    #[test]
    fn compositions_from_descents() {
        assert_eq!(
            composition_from_descents(4, &BTreeSet::from([2, 3])).unwrap(),
            comp(&[2, 1, 1])
        );
        assert_eq!(
            composition_from_descents(4, &BTreeSet::new()).unwrap(),
            comp(&[4])
        );
        assert_eq!(
            composition_from_descents(3, &BTreeSet::from([1, 2])).unwrap(),
            comp(&[1, 1, 1])
        );
        assert!(matches!(
            composition_from_descents(3, &BTreeSet::from([3])),
            Err(Error::InvalidDescent { .. })
        ));
    }

    #[test]
    fn refinement() {
        assert!(refines(&comp(&[1, 1, 2]), &comp(&[2, 2])).unwrap());
        assert!(!refines(&comp(&[4]), &comp(&[2, 2])).unwrap());
        assert!(refines(&comp(&[2, 1]), &comp(&[2, 1])).unwrap());
        assert!(refines(&Composition::empty(), &Composition::empty()).unwrap());
        assert!(matches!(
            refines(&comp(&[2]), &comp(&[1])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1, 1]).is_ok());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn conjugate_and_dominance() {
        let p = Partition::new(vec![4, 2, 1]).unwrap();
        assert_eq!(p.conjugate(), Partition::new(vec![3, 2, 1, 1]).unwrap());
        let a = Partition::new(vec![3, 1]).unwrap();
        let b = Partition::new(vec![2, 2]).unwrap();
        assert!(a.dominates(&b));
        assert!(!b.dominates(&a));
    }

    #[test]
    fn sub_partition_counts() {
        let nu = Partition::new(vec![2, 1]).unwrap();
        let subs = sub_partitions(&nu);
        // (), (1), (2), (1,1), (2,1)
        assert_eq!(subs.len(), 5);
    }

    #[test]
    fn chain_compositions() {
        assert_eq!(chain_composition(&[0, 1, -1]), comp(&[2, 1]));
        assert_eq!(chain_composition(&[0, -1, 1]), comp(&[1, 2]));
        assert_eq!(chain_composition(&[]), Composition::empty());
    }

    proptest! {
        #[test]
        fn descents_round_trip(parts in proptest::collection::vec(1u32..5, 0..6)) {
            let alpha = Composition::new(parts).unwrap();
            let d = descent_set(&alpha);
            let back = composition_from_descents(alpha.size(), &d).unwrap();
            prop_assert_eq!(back, alpha);
        }

        #[test]
        fn rearrangement_class_is_closed(parts in proptest::collection::vec(1u32..4, 0..5)) {
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(sorted).unwrap();
            let rs = rearrangements(&lam);
            prop_assert!(rs.iter().all(|c| c.sorted() == lam));
            // the sorted composition itself appears
            prop_assert!(rs.iter().any(|c| c.parts() == lam.parts()));
        }
    }
}
