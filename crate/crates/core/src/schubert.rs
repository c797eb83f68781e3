//! The r-Bruhat order on finitely supported permutations of the positive
//! integers. Covers multiply by a transposition of values straddling the cut
//! position; saturated chains carry label words whose descent compositions
//! produce the interval quasisymmetric function. Also here: the Pieri series
//! over increasing chains and the chain-local involutions that pair descents
//! with ascents.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::expansion::{Basis, Expansion};
use crate::partition::chain_composition;
use crate::perm::IntegerPermutation;

/// The r-Bruhat order with cut position `r >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RBruhat {
    r: i64,
}

/// A value pair `(a, b)` with `a < b`, labelling the cover that multiplies by
/// the transposition of those values.
pub type MonkLabel = (i64, i64);

/// A saturated chain recorded with its start; labels are stored in
/// application order (the first label acts first).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Chain {
    pub start: IntegerPermutation,
    pub r: i64,
    pub labels: Vec<MonkLabel>,
}

impl Chain {
    /// End permutation; `None` when the labels fail to compose on the start.
    pub fn end(&self) -> Option<IntegerPermutation> {
        let order = RBruhat::new(self.r).ok()?;
        order.apply_word(&self.start, &self.labels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

impl RBruhat {
    pub fn new(r: i64) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidWindow(format!("cut position {r} must be >= 1")));
        }
        Ok(RBruhat { r })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    /// The cover `u -> (a b) u` when the positions of `a` and `b` straddle
    /// the cut and no value between them sits between those positions.
    pub fn cover(&self, u: &IntegerPermutation, a: i64, b: i64) -> Option<IntegerPermutation> {
        if a >= b || a < 1 {
            return None;
        }
        let i = u.preimage(a);
        let j = u.preimage(b);
        if !(i <= self.r && self.r < j) {
            return None;
        }
        for l in i + 1..j {
            let v = u.apply(l);
            if a < v && v < b {
                return None;
            }
        }
        Some(IntegerPermutation::transposition(a, b).multiply(u))
    }

    pub fn apply_word(
        &self,
        u: &IntegerPermutation,
        labels: &[MonkLabel],
    ) -> Option<IntegerPermutation> {
        let mut cur = u.clone();
        for &(a, b) in labels {
            cur = self.cover(&cur, a, b)?;
        }
        Some(cur)
    }

    /// All covers out of `x` whose values stay inside `1..=bound`.
    fn covers_within(&self, x: &IntegerPermutation, bound: i64) -> Vec<(MonkLabel, IntegerPermutation)> {
        let mut out = Vec::new();
        let hi_i = self.r.min(bound);
        for i in 1..=hi_i {
            let a = x.apply(i);
            for j in self.r + 1..=bound {
                let b = x.apply(j);
                if a < b {
                    if let Some(y) = self.cover(x, a, b) {
                        out.push(((a, b), y));
                    }
                }
            }
        }
        out
    }

    fn interval_bound(&self, u: &IntegerPermutation, w: &IntegerPermutation) -> i64 {
        let mut bound = self.r + 1;
        if let Some(m) = u.support_max() {
            bound = bound.max(m);
        }
        if let Some(m) = w.support_max() {
            bound = bound.max(m);
        }
        bound
    }

    /// All saturated chains of `[u, w]`, sorted by label word.
    pub fn chains(&self, u: &IntegerPermutation, w: &IntegerPermutation) -> Vec<Chain> {
        let lu = u.length();
        let lw = w.length();
        if u == w {
            return vec![Chain {
                start: u.clone(),
                r: self.r,
                labels: Vec::new(),
            }];
        }
        if lw <= lu {
            return Vec::new();
        }
        let depth = lw - lu;
        let bound = self.interval_bound(u, w);
        let mut words = Vec::new();
        let mut labels = Vec::new();
        self.chain_dfs(u, w, bound, depth, &mut labels, &mut words);
        words.sort();
        words
            .into_iter()
            .map(|labels| Chain {
                start: u.clone(),
                r: self.r,
                labels,
            })
            .collect()
    }

    fn chain_dfs(
        &self,
        x: &IntegerPermutation,
        w: &IntegerPermutation,
        bound: i64,
        depth: usize,
        labels: &mut Vec<MonkLabel>,
        out: &mut Vec<Vec<MonkLabel>>,
    ) {
        if depth == 0 {
            if x == w {
                out.push(labels.clone());
            }
            return;
        }
        for ((a, b), y) in self.covers_within(x, bound) {
            // positions below the cut only ever increase toward w, positions
            // above only decrease; prune as soon as that is violated
            let i = y.preimage(b);
            let j = y.preimage(a);
            if y.apply(i) > w.apply(i) || y.apply(j) < w.apply(j) {
                continue;
            }
            labels.push((a, b));
            self.chain_dfs(&y, w, bound, depth - 1, labels, out);
            labels.pop();
        }
    }

    /// The recursively built distinguished chain of `[u, w]`, or `None` when
    /// the interval is empty.
    pub fn canonical_chain(&self, u: &IntegerPermutation, w: &IntegerPermutation) -> Option<Chain> {
        let mut labels = Vec::new();
        let mut cur = u.clone();
        let bound = self.interval_bound(u, w);
        let budget = w.length().saturating_sub(u.length());
        for _ in 0..budget {
            if cur == w {
                break;
            }
            let mut i1 = None;
            for i in (1..=self.r).rev() {
                if cur.apply(i) < w.apply(i) {
                    i1 = Some(i);
                    break;
                }
            }
            let i1 = i1?;
            let a = cur.apply(i1);
            let mut b = None;
            for j in self.r + 1..=bound {
                let v = cur.apply(j);
                if v > a && w.apply(j) <= a {
                    b = Some(v);
                    break;
                }
            }
            let b = b?;
            cur = self.cover(&cur, a, b)?;
            labels.push((a, b));
        }
        if cur == w {
            Some(Chain {
                start: u.clone(),
                r: self.r,
                labels,
            })
        } else {
            None
        }
    }

    /// Interval quasisymmetric function in the fundamental basis: one term
    /// per chain, indexed by the descent composition of the second labels.
    pub fn interval_k(&self, u: &IntegerPermutation, w: &IntegerPermutation) -> Expansion {
        let mut out = Expansion::zero(Basis::F);
        for chain in self.chains(u, w) {
            let bs: Vec<i64> = chain.labels.iter().map(|&(_, b)| b).collect();
            let alpha = chain_composition(&bs);
            out.add(alpha.parts().to_vec(), BigInt::from(1));
        }
        out
    }

    /// The degree-k Pieri series applied to `u`: endpoints of chains whose
    /// second labels strictly increase. Every coefficient is one.
    pub fn pieri_h(&self, k: u32, u: &IntegerPermutation) -> BTreeMap<IntegerPermutation, BigInt> {
        let mut out = BTreeMap::new();
        let base = self
            .interval_bound(u, u)
            .max(u.support_max().unwrap_or(0));
        let bound = base + k as i64;
        self.pieri_dfs(u, i64::MIN, k, bound, &mut out);
        out
    }

    fn pieri_dfs(
        &self,
        x: &IntegerPermutation,
        last_b: i64,
        remaining: u32,
        bound: i64,
        out: &mut BTreeMap<IntegerPermutation, BigInt>,
    ) {
        if remaining == 0 {
            *out.entry(x.clone()).or_insert_with(|| BigInt::from(0)) += 1;
            return;
        }
        for ((_, b), y) in self.covers_within(x, bound) {
            if b > last_b {
                self.pieri_dfs(&y, b, remaining - 1, bound, out);
            }
        }
    }
}

/// From a non-identity permutation, the interval it labels: the cut is the
/// number of pulled-up values, the top sorts those values first, and the
/// bottom is the preimage of the top.
pub fn interval_from_zeta(
    zeta: &IntegerPermutation,
) -> Result<(IntegerPermutation, IntegerPermutation, i64)> {
    if zeta.is_identity() {
        return Err(Error::IdentityHasNoInterval);
    }
    let up = zeta.up_set();
    let r = up.len() as i64;
    let max_needed = zeta.support_max().unwrap_or(0).max(r) + r;
    let mut images: Vec<i64> = up.iter().copied().collect();
    let mut rest: Vec<i64> = (1..=max_needed).filter(|v| !up.contains(v)).collect();
    images.append(&mut rest);
    // the images list is long enough that everything beyond it is fixed
    let w = IntegerPermutation::from_images(1, &images[..])
        .expect("sorted up-set followed by its complement is a bijection");
    let u = zeta.inverse().multiply(&w);
    Ok((u, w, r))
}

/// True when `zeta` factors into totally disjoint increasing cycles whose
/// length statistics sum to `k`.
pub fn is_k_increasing(zeta: &IntegerPermutation, k: u32) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    let mut cycles: Vec<Vec<i64>> = Vec::new();
    for (start, _) in zeta.moved_points() {
        if seen.contains(&start) {
            continue;
        }
        let mut cycle = vec![start];
        let mut cur = zeta.apply(start);
        while cur != start {
            cycle.push(cur);
            cur = zeta.apply(cur);
        }
        for &c in &cycle {
            seen.insert(c);
        }
        cycles.push(cycle);
    }
    let mut total = 0u32;
    for cycle in &cycles {
        // increasing cycle: descending through its support, wrapping at the
        // bottom
        let mut sorted = cycle.clone();
        sorted.sort_unstable_by(|x, y| y.cmp(x));
        let m = sorted.len();
        for t in 0..m {
            let next = sorted[(t + 1) % m];
            if zeta.apply(sorted[t]) != next {
                return false;
            }
        }
        total += m as u32 - 1;
    }
    if total != k {
        return false;
    }
    for x in 0..cycles.len() {
        for y in x + 1..cycles.len() {
            if !totally_disjoint(&cycles[x], &cycles[y]) {
                return false;
            }
        }
    }
    true
}

fn totally_disjoint(c1: &[i64], c2: &[i64]) -> bool {
    let (min1, max1) = (c1.iter().min().unwrap(), c1.iter().max().unwrap());
    let (min2, max2) = (c2.iter().min().unwrap(), c2.iter().max().unwrap());
    // disjoint intervals
    if max1 < min2 || max2 < min1 {
        return true;
    }
    // or one interval misses the other's support entirely
    if !c2.iter().any(|v| min1 <= v && v <= max1) {
        return true;
    }
    if !c1.iter().any(|v| min2 <= v && v <= max2) {
        return true;
    }
    false
}

fn disjoint_labels(s: MonkLabel, t: MonkLabel) -> bool {
    s.0 != t.0 && s.0 != t.1 && s.1 != t.0 && s.1 != t.1
}

/// Rewrite the three labels at a one-descent position, exchanging the
/// descent-ascent and ascent-descent patterns. The twelve cases come from the
/// defining relations of the cover monoid.
pub(crate) fn phi_rewrite(triple: [MonkLabel; 3]) -> Option<[MonkLabel; 3]> {
    let [x, y, z] = triple;
    let desc1 = x.1 > y.1;
    let desc2 = y.1 > z.1;
    debug_assert!(desc1 != desc2);
    if desc1 {
        // descent then ascent
        if y.1 == x.0 && z.0 == x.0 {
            if z.1 < x.1 {
                // x=(b,d) y=(a,b) z=(b,c) -> (b,c)(c,d)(a,c)
                Some([(x.0, z.1), (z.1, x.1), (y.0, z.1)])
            } else if x.1 < z.1 {
                // x=(b,c) y=(a,b) z=(b,d) -> (a,c)(c,d)(b,c)
                Some([(y.0, x.1), (x.1, z.1), (x.0, x.1)])
            } else {
                None
            }
        } else if y.1 == x.0 && disjoint_labels(z, x) && disjoint_labels(z, y) {
            // x=(a,c) y=(alpha,a) z=(beta,b): rotate z to the front
            Some([z, x, y])
        } else if z.0 == y.1 && disjoint_labels(x, y) && disjoint_labels(x, z) {
            // x=(beta,b) y=(alpha,a) z=(a,c): rotate x to the back
            Some([y, z, x])
        } else if disjoint_labels(y, z) && x.1 < z.1 {
            Some([x, z, y])
        } else if disjoint_labels(x, y) && z.1 < x.1 {
            Some([y, x, z])
        } else {
            None
        }
    } else {
        // ascent then descent
        if y.0 == x.1 && z.1 == x.1 {
            if z.0 < x.0 {
                // x=(b,c) y=(c,d) z=(a,c) -> (b,d)(a,b)(b,c)
                Some([(x.0, y.1), (z.0, x.0), (x.0, x.1)])
            } else if x.0 < z.0 {
                // x=(a,c) y=(c,d) z=(b,c) -> (b,c)(a,b)(b,d)
                Some([(z.0, x.1), (x.0, z.0), (z.0, y.1)])
            } else {
                None
            }
        } else if z.1 == y.0 && disjoint_labels(x, y) && disjoint_labels(x, z) {
            // x=(beta,b) y=(a,c) z=(alpha,a): rotate x to the back
            Some([y, z, x])
        } else if y.0 == x.1 && disjoint_labels(z, x) && disjoint_labels(z, y) {
            // x=(alpha,a) y=(a,c) z=(beta,b): rotate z to the front
            Some([z, x, y])
        } else if disjoint_labels(y, z) && z.1 < x.1 {
            Some([x, z, y])
        } else if disjoint_labels(x, y) && x.1 < z.1 {
            Some([y, x, z])
        } else {
            None
        }
    }
}

/// The chain-local involution at position `i` (one-based, `1 < i < n`).
/// Chains whose descent set meets `{i-1, i}` in zero or two places are fixed;
/// otherwise the triple at `i-1, i, i+1` is rewritten, toggling the pattern.
pub fn phi_involution(i: usize, chain: &Chain) -> Result<Chain> {
    let n = chain.labels.len();
    if i <= 1 || i >= n {
        return Err(Error::ChainIndexOutOfRange { index: i, len: n });
    }
    let order = RBruhat::new(chain.r)?;
    // states along the chain, validating it on the way
    let mut states = Vec::with_capacity(n + 1);
    states.push(chain.start.clone());
    for &(a, b) in &chain.labels {
        let next = order
            .cover(states.last().unwrap(), a, b)
            .ok_or(Error::BrokenChain)?;
        states.push(next);
    }
    let triple = [
        chain.labels[i - 2],
        chain.labels[i - 1],
        chain.labels[i],
    ];
    let desc1 = triple[0].1 > triple[1].1;
    let desc2 = triple[1].1 > triple[2].1;
    if desc1 == desc2 {
        return Ok(chain.clone());
    }
    let rewritten = phi_rewrite(triple).ok_or(Error::UnmatchedTriple { index: i })?;
    // the rewrite must traverse the same rank-three subinterval
    let mut cur = states[i - 2].clone();
    for &(a, b) in &rewritten {
        cur = order.cover(&cur, a, b).ok_or(Error::BrokenChain)?;
    }
    if cur != states[i + 1] {
        return Err(Error::BrokenChain);
    }
    let mut labels = chain.labels.clone();
    labels[i - 2] = rewritten[0];
    labels[i - 1] = rewritten[1];
    labels[i] = rewritten[2];
    Ok(Chain {
        start: chain.start.clone(),
        r: chain.r,
        labels,
    })
}
