//! Finitely supported permutations of the integers.
//!
//! Only non-fixed points are stored, so elements with negative support (the
//! border words of partitions live there) cost nothing extra. Multiplication
//! is function composition: `(p * q)(i) = p(q(i))`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IntegerPermutation {
    map: BTreeMap<i64, i64>,
}

impl IntegerPermutation {
    pub fn identity() -> Self {
        IntegerPermutation {
            map: BTreeMap::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    /// Build from consecutive images starting at position `start`.
    pub fn from_images(start: i64, images: &[i64]) -> Result<Self> {
        let mut map = BTreeMap::new();
        let positions: std::collections::BTreeSet<i64> =
            (start..start + images.len() as i64).collect();
        let values: std::collections::BTreeSet<i64> = images.iter().copied().collect();
        if values.len() != images.len() || values != positions {
            return Err(Error::InvalidWindow(format!(
                "images {:?} are not a bijection of {}..={}",
                images,
                start,
                start + images.len() as i64 - 1
            )));
        }
        for (offset, &v) in images.iter().enumerate() {
            let pos = start + offset as i64;
            if v != pos {
                map.insert(pos, v);
            }
        }
        Ok(IntegerPermutation { map })
    }

    /// One-line notation on positions 1..=n.
    pub fn from_one_based(images: &[i64]) -> Result<Self> {
        Self::from_images(1, images)
    }

    pub fn transposition(a: i64, b: i64) -> Self {
        debug_assert_ne!(a, b);
        let mut map = BTreeMap::new();
        map.insert(a, b);
        map.insert(b, a);
        IntegerPermutation { map }
    }

    /// The adjacent transposition swapping `r` and `r + 1`.
    pub fn adjacent(r: i64) -> Self {
        Self::transposition(r, r + 1)
    }

    pub fn apply(&self, i: i64) -> i64 {
        self.map.get(&i).copied().unwrap_or(i)
    }

    /// The position mapped to value `v`.
    pub fn preimage(&self, v: i64) -> i64 {
        for (&i, &w) in &self.map {
            if w == v {
                return i;
            }
        }
        v
    }

    pub fn inverse(&self) -> Self {
        let map = self.map.iter().map(|(&i, &v)| (v, i)).collect();
        IntegerPermutation { map }
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut map = BTreeMap::new();
        let mut keys: std::collections::BTreeSet<i64> = self.map.keys().copied().collect();
        keys.extend(other.map.keys().copied());
        for i in keys {
            let v = self.apply(other.apply(i));
            if v != i {
                map.insert(i, v);
            }
        }
        IntegerPermutation { map }
    }

    pub fn support_min(&self) -> Option<i64> {
        self.map.keys().next().copied()
    }

    pub fn support_max(&self) -> Option<i64> {
        self.map.keys().next_back().copied()
    }

    /// Images of `lo..=hi` in order.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).map(|i| self.apply(i)).collect()
    }

    /// Coxeter length: inversions inside the interval spanned by the moved
    /// points (everything outside is fixed and in order).
    pub fn length(&self) -> usize {
        let (lo, hi) = match (self.support_min(), self.support_max()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return 0,
        };
        let w = self.window(lo, hi);
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// A reduced word `(i_1, ..., i_l)` with
    /// `s_{i_1} * s_{i_2} * ... * s_{i_l} = self` (left-to-right product).
    /// Deterministic: peels the leftmost descent.
    pub fn reduced_word(&self) -> Vec<i64> {
        let mut w = self.clone();
        let mut word = Vec::new();
        loop {
            let (lo, hi) = match (w.support_min(), w.support_max()) {
                (Some(lo), Some(hi)) => (lo, hi),
                _ => break,
            };
            let mut descent = None;
            for r in lo..hi {
                if w.apply(r) > w.apply(r + 1) {
                    descent = Some(r);
                    break;
                }
            }
            let r = descent.expect("a non-identity permutation has a descent");
            w = w.multiply(&Self::adjacent(r));
            word.push(r);
        }
        word.reverse();
        word
    }

    /// No decreasing subsequence of length three among the window spanned by
    /// the moved points.
    pub fn is_321_avoiding(&self) -> bool {
        self.find_321_pattern().is_none()
    }

    /// A witness `(positions, values)` for a 321 pattern, if one exists.
    pub fn find_321_pattern(&self) -> Option<([i64; 3], [i64; 3])> {
        let (lo, hi) = match (self.support_min(), self.support_max()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return None,
        };
        let w = self.window(lo, hi);
        let n = w.len();
        // prefix argmax of values greater than w[j], suffix min below w[j]
        for j in 0..n {
            let before = (0..j).find(|&i| {
                w[i] > w[j] && (j + 1..n).any(|k| w[k] < w[j])
            });
            if let Some(i) = before {
                let k = (j + 1..n).find(|&k| w[k] < w[j]).unwrap();
                return Some((
                    [lo + i as i64, lo + j as i64, lo + k as i64],
                    [w[i], w[j], w[k]],
                ));
            }
        }
        None
    }

    /// Values pulled upward: `{a : self^{-1}(a) < a}`.
    pub fn up_set(&self) -> std::collections::BTreeSet<i64> {
        self.map
            .iter()
            .filter(|&(&pos, &val)| pos < val)
            .map(|(_, &val)| val)
            .collect()
    }

    pub fn moved_points(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.map.iter().map(|(&i, &v)| (i, v))
    }
}

impl fmt::Display for IntegerPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.support_min(), self.support_max()) {
            (Some(lo), Some(hi)) => {
                let w: Vec<String> = self.window(lo, hi).iter().map(|v| v.to_string()).collect();
                write!(f, "[{}..{}: {}]", lo, hi, w.join(","))
            }
            _ => write!(f, "[id]"),
        }
    }
}

/// Left-to-right product of adjacent transpositions: the group element whose
/// reduced words include `word` when lengths add up.
pub fn word_product(word: &[i64]) -> IntegerPermutation {
    let mut acc = IntegerPermutation::identity();
    for &r in word {
        acc = acc.multiply(&IntegerPermutation::adjacent(r));
    }
    acc
}
