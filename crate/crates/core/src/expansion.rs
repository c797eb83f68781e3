//! Sparse integer expansions over the quasisymmetric bases M (monomial) and
//! F (fundamental), the noncommutative bases R (ribbon) and hN (words in the
//! complete generators), and the symmetric bases m, h, s.
//!
//! Every conversion here is exact over the integers: the fundamental/monomial
//! change of basis is inclusion-exclusion over descent sets, and the Schur
//! expansion is obtained by back-substitution through the unitriangular
//! Kostka system.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{
    composition_from_descents, descent_set, partitions_lex_desc, rearrangements, Composition,
    Partition,
};
use crate::tableau;

/// Basis tags. `M`, `F`, `R` and `HN` are indexed by compositions; `Mon`,
/// `Hom` and `Schur` (printed `m`, `h`, `s`) by partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    M,
    F,
    R,
    HN,
    Mon,
    Hom,
    Schur,
}

impl Basis {
    pub fn short_name(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::R => "R",
            Basis::HN => "hN",
            Basis::Mon => "m",
            Basis::Hom => "h",
            Basis::Schur => "s",
        }
    }

    /// Whether indices in this basis are partitions (otherwise compositions).
    pub fn partition_indexed(self) -> bool {
        matches!(self, Basis::Mon | Basis::Hom | Basis::Schur)
    }

    pub fn from_short_name(name: &str) -> Option<Basis> {
        Some(match name {
            "M" => Basis::M,
            "F" => Basis::F,
            "R" => Basis::R,
            "hN" => Basis::HN,
            "m" => Basis::Mon,
            "h" => Basis::Hom,
            "s" => Basis::Schur,
            _ => return None,
        })
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl Serialize for Basis {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.short_name())
    }
}

/// A sparse integer combination of basis elements. Zero coefficients are
/// never stored; term order is lexicographic in the index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    basis: Basis,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Expansion {
    pub fn zero(basis: Basis) -> Self {
        Expansion {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The constant 1 in the given basis: the empty index with coefficient 1.
    pub fn one(basis: Basis) -> Self {
        let mut e = Expansion::zero(basis);
        e.add(Vec::new(), BigInt::from(1));
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&mut self, index: Vec<u32>, coeff: BigInt) {
        if self.basis.partition_indexed() {
            debug_assert!(index.windows(2).all(|w| w[0] >= w[1]));
        }
        debug_assert!(index.iter().all(|&p| p > 0));
        let entry = self.terms.entry(index).or_insert_with(BigInt::zero);
        *entry += coeff;
        // prune zeros eagerly so equality is structural
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn add_partition(&mut self, index: &Partition, coeff: BigInt) {
        debug_assert!(self.basis.partition_indexed());
        self.add(index.parts().to_vec(), coeff);
    }

    pub fn add_composition(&mut self, index: &Composition, coeff: BigInt) {
        debug_assert!(!self.basis.partition_indexed());
        self.add(index.parts().to_vec(), coeff);
    }

    pub fn coeff(&self, index: &[u32]) -> BigInt {
        self.terms.get(index).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_assign(&mut self, other: &Expansion) {
        debug_assert_eq!(self.basis, other.basis);
        for (idx, c) in other.iter() {
            self.add(idx.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Expansion) {
        debug_assert_eq!(self.basis, other.basis);
        for (idx, c) in other.iter() {
            self.add(idx.clone(), -c.clone());
        }
    }

    pub fn scaled(&self, factor: &BigInt) -> Expansion {
        let mut out = Expansion::zero(self.basis);
        for (idx, c) in self.iter() {
            out.add(idx.clone(), c * factor);
        }
        out
    }

    fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::BasisMismatch {
                expected: basis,
                found: self.basis,
            });
        }
        Ok(())
    }

    /// Human-readable rendering: terms sorted by index, printed as
    /// `9*s[4] + 30*s[3,1] - ...`.
    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (idx, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let idx_s: Vec<String> = idx.iter().map(|p| p.to_string()).collect();
            out.push_str(&format!("{}*{}[{}]", mag, self.basis, idx_s.join(",")));
        }
        out
    }
}

impl Serialize for Expansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Term<'a>(&'a Vec<u32>, &'a BigInt);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("index", self.0)?;
                let n: serde_json::Number = serde_json::from_str(&self.1.to_string())
                    .map_err(serde::ser::Error::custom)?;
                m.serialize_entry("coeff", &n)?;
                m.end()
            }
        }
        struct Terms<'a>(&'a BTreeMap<Vec<u32>, BigInt>);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for (idx, c) in self.0 {
                    seq.serialize_element(&Term(idx, c))?;
                }
                seq.end()
            }
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("basis", &self.basis)?;
        m.serialize_entry("terms", &Terms(&self.terms))?;
        m.end()
    }
}

/// F_alpha = sum of M_beta over refinements beta of alpha, i.e. over all
/// descent sets containing D(alpha).
pub fn fundamental_to_monomial(e: &Expansion) -> Result<Expansion> {
    e.expect_basis(Basis::F)?;
    let mut out = Expansion::zero(Basis::M);
    for (idx, c) in e.iter() {
        let alpha = Composition::new(idx.clone())?;
        let n = alpha.size();
        let d = descent_set(&alpha);
        for t in supersets(&d, n) {
            let beta = composition_from_descents(n, &t)?;
            out.add(beta.parts().to_vec(), c.clone());
        }
    }
    Ok(out)
}

/// Exact inverse of [`fundamental_to_monomial`] by inclusion-exclusion on
/// descent sets.
pub fn monomial_to_fundamental(e: &Expansion) -> Result<Expansion> {
    e.expect_basis(Basis::M)?;
    let mut out = Expansion::zero(Basis::F);
    for (idx, c) in e.iter() {
        let alpha = Composition::new(idx.clone())?;
        let n = alpha.size();
        let d = descent_set(&alpha);
        for t in supersets(&d, n) {
            let sign = if (t.len() - d.len()) % 2 == 0 { 1 } else { -1 };
            let beta = composition_from_descents(n, &t)?;
            out.add(beta.parts().to_vec(), c * BigInt::from(sign));
        }
    }
    Ok(out)
}

fn supersets(d: &BTreeSet<u32>, n: u32) -> Vec<BTreeSet<u32>> {
    let free: Vec<u32> = (1..n).filter(|x| !d.contains(x)).collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u64..(1u64 << free.len()) {
        let mut t = d.clone();
        for (i, &x) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                t.insert(x);
            }
        }
        out.push(t);
    }
    out
}

/// Witness for a failed symmetry check: two rearrangements of the same part
/// multiset with different coefficients.
fn symmetry_witness(e: &Expansion) -> Option<(Vec<u32>, BigInt, Vec<u32>, BigInt)> {
    let mut classes: BTreeMap<Partition, Vec<u32>> = BTreeMap::new();
    for (idx, _) in e.iter() {
        let comp = Composition::new(idx.clone()).expect("stored indices are valid");
        classes.entry(comp.sorted()).or_insert_with(|| idx.clone());
    }
    for (lambda, witness_idx) in classes {
        let expected = e.coeff(&witness_idx);
        for r in rearrangements(&lambda) {
            let c = e.coeff(r.parts());
            if c != expected {
                return Some((witness_idx, expected, r.parts().to_vec(), c));
            }
        }
    }
    None
}

/// True when every rearrangement class of compositions carries a single
/// coefficient, i.e. the expansion lies in the symmetric subspace.
pub fn is_symmetric(e: &Expansion) -> Result<bool> {
    e.expect_basis(Basis::M)?;
    Ok(symmetry_witness(e).is_none())
}

/// Collapse a symmetric M-expansion to the monomial symmetric basis.
pub fn monomial_to_symmetric(e: &Expansion) -> Result<Expansion> {
    e.expect_basis(Basis::M)?;
    if let Some((first, c1, second, c2)) = symmetry_witness(e) {
        return Err(Error::NotSymmetric {
            first,
            first_coeff: c1.to_string(),
            second,
            second_coeff: c2.to_string(),
        });
    }
    let mut out = Expansion::zero(Basis::Mon);
    for (idx, c) in e.iter() {
        let comp = Composition::new(idx.clone())?;
        let lambda = comp.sorted();
        if lambda.parts() == idx.as_slice() {
            out.add(idx.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Expand in Schur functions by back-substitution through
/// s_lambda = sum_mu K(lambda,mu) m_mu, degree by degree.
pub fn symmetric_monomial_to_schur(e: &Expansion) -> Result<Expansion> {
    e.expect_basis(Basis::Mon)?;
    let mut by_degree: BTreeMap<u32, BTreeMap<Vec<u32>, BigInt>> = BTreeMap::new();
    for (idx, c) in e.iter() {
        let deg: u32 = idx.iter().sum();
        by_degree
            .entry(deg)
            .or_default()
            .insert(idx.clone(), c.clone());
    }
    let mut out = Expansion::zero(Basis::Schur);
    for (deg, mut cur) in by_degree {
        let order = partitions_lex_desc(deg);
        for lambda in &order {
            let c = match cur.get(lambda.parts()) {
                Some(c) if !c.is_zero() => c.clone(),
                _ => continue,
            };
            out.add(lambda.parts().to_vec(), c.clone());
            for mu in &order {
                let k = tableau::kostka(lambda, mu)?;
                if k == 0 {
                    continue;
                }
                let entry = cur.entry(mu.parts().to_vec()).or_insert_with(BigInt::zero);
                *entry -= &c * BigInt::from(k);
            }
        }
        debug_assert!(cur.values().all(|c| c.is_zero()));
    }
    Ok(out)
}

/// Full pipeline F -> M -> m -> s; fails when the input is not symmetric.
pub fn fundamental_to_schur(e: &Expansion) -> Result<Expansion> {
    let m = fundamental_to_monomial(e)?;
    let mono = monomial_to_symmetric(&m)?;
    symmetric_monomial_to_schur(&mono)
}

/// The fundamental expansion of a single Schur function, summing over
/// standard tableaux by descent composition. This is the independent check
/// for [`fundamental_to_schur`].
pub fn schur_to_fundamental(lambda: &Partition) -> Expansion {
    let mut out = Expansion::zero(Basis::F);
    for alpha in tableau::standard_descent_compositions(lambda) {
        out.add(alpha.parts().to_vec(), BigInt::from(1));
    }
    out
}

/// The ribbon basis element written in words of complete generators:
/// a signed sum over coarsenings.
pub fn ribbon_in_complete(alpha: &Composition) -> Expansion {
    let mut out = Expansion::zero(Basis::HN);
    let n = alpha.size();
    let d = descent_set(alpha);
    // coarsenings correspond to subsets of the descent set
    let elems: Vec<u32> = d.iter().copied().collect();
    for mask in 0u64..(1u64 << elems.len()) {
        let mut s = BTreeSet::new();
        for (i, &x) in elems.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.insert(x);
            }
        }
        let beta = composition_from_descents(n, &s).expect("subset of a valid descent set");
        let sign = if (alpha.len() - beta.len()) % 2 == 0 {
            1
        } else {
            -1
        };
        out.add(beta.parts().to_vec(), BigInt::from(sign));
    }
    out
}
