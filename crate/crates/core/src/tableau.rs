//! Tableau counting: Kostka numbers by semistandard enumeration, standard
//! tableaux by descent composition, Littlewood-Richardson coefficients for
//! skew shapes, and the determinantal h-expansion of a Schur function.
//!
//! These are deliberately direct enumerations. They double as independent
//! checks for the chain-based computations elsewhere in the crate.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::expansion::{Basis, Expansion};
use crate::partition::{composition_from_descents, partitions_bounded, Composition, Partition};

/// Number of semistandard tableaux of shape `lambda` and content `mu`,
/// counted by cell-by-cell backtracking. Unitriangular in dominance:
/// `kostka(l, l) = 1` and the count vanishes unless `lambda` dominates `mu`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    if lambda.size() == 0 {
        return Ok(1);
    }
    if !lambda.dominates(mu) {
        return Ok(0);
    }
    let rows = lambda.parts();
    let content = mu.parts();
    let mut used = vec![0u32; content.len()];
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&r| vec![0; r as usize]).collect();

    fn rec(
        rows: &[u32],
        content: &[u32],
        used: &mut [u32],
        grid: &mut [Vec<usize>],
        row: usize,
        col: usize,
    ) -> u64 {
        if row == rows.len() {
            return 1;
        }
        let (nrow, ncol) = if col + 1 < rows[row] as usize {
            (row, col + 1)
        } else {
            (row + 1, 0)
        };
        let min_left = if col > 0 { grid[row][col - 1] } else { 1 };
        let min_above = if row > 0 && (grid[row - 1].len() > col) {
            grid[row - 1][col] + 1
        } else {
            1
        };
        let lo = min_left.max(min_above);
        let mut total = 0;
        for v in lo..=content.len() {
            if used[v - 1] == content[v - 1] {
                continue;
            }
            used[v - 1] += 1;
            grid[row][col] = v;
            total += rec(rows, content, used, grid, nrow, ncol);
            used[v - 1] -= 1;
        }
        total
    }

    Ok(rec(rows, content, &mut used, &mut grid, 0, 0))
}

/// Descent compositions of the standard tableaux of shape `lambda`:
/// `i` is a descent when `i + 1` sits in a strictly lower row.
pub fn standard_descent_compositions(lambda: &Partition) -> Vec<Composition> {
    let n = lambda.size();
    if n == 0 {
        return vec![Composition::empty()];
    }
    let rows = lambda.parts();
    let mut fill = vec![0u32; rows.len()];
    let mut row_of = vec![0usize; n as usize + 1];
    let mut out = Vec::new();

    fn rec(
        rows: &[u32],
        fill: &mut [u32],
        row_of: &mut [usize],
        t: u32,
        n: u32,
        out: &mut Vec<Composition>,
    ) {
        if t > n {
            let mut descents = std::collections::BTreeSet::new();
            for i in 1..n {
                if row_of[i as usize + 1] > row_of[i as usize] {
                    descents.insert(i);
                }
            }
            out.push(composition_from_descents(n, &descents).unwrap());
            return;
        }
        for r in 0..rows.len() {
            if fill[r] < rows[r] && (r == 0 || fill[r - 1] > fill[r]) {
                fill[r] += 1;
                row_of[t as usize] = r;
                rec(rows, fill, row_of, t + 1, n, out);
                fill[r] -= 1;
            }
        }
    }

    rec(rows, &mut fill, &mut row_of, 1, n, &mut out);
    out
}

/// Littlewood-Richardson skew Schur expansion of the shape `outer/inner`,
/// counting lattice semistandard fillings directly.
pub fn lr_skew_schur(outer: &Partition, inner: &Partition) -> Result<Expansion> {
    if !outer.contains(inner) {
        return Err(Error::NotContained {
            inner: inner.parts().to_vec(),
            outer: outer.parts().to_vec(),
        });
    }
    let n = outer.size() - inner.size();
    let mut out = Expansion::zero(Basis::Schur);
    if n == 0 {
        out.add(Vec::new(), BigInt::from(1));
        return Ok(out);
    }
    // Cells in reverse reading order: each row right-to-left, top row first.
    let mut cells: Vec<(usize, u32)> = Vec::new();
    for r in 1..=outer.len() {
        let lo = inner.row(r);
        let hi = outer.row(r);
        for c in (lo + 1..=hi).rev() {
            cells.push((r, c));
        }
    }
    for mu in partitions_bounded(n, n) {
        let count = lr_count(&cells, inner, mu.parts());
        if count > 0 {
            out.add(mu.parts().to_vec(), BigInt::from(count));
        }
    }
    Ok(out)
}

fn lr_count(cells: &[(usize, u32)], inner: &Partition, content: &[u32]) -> u64 {
    let mut used = vec![0u32; content.len()];
    let mut value: std::collections::BTreeMap<(usize, u32), usize> =
        std::collections::BTreeMap::new();

    fn rec(
        cells: &[(usize, u32)],
        inner: &Partition,
        content: &[u32],
        used: &mut [u32],
        value: &mut std::collections::BTreeMap<(usize, u32), usize>,
        pos: usize,
    ) -> u64 {
        if pos == cells.len() {
            return 1;
        }
        let (r, c) = cells[pos];
        // row weakly increases left to right: cell to the right was placed
        // earlier in reverse reading order
        let max_right = value.get(&(r, c + 1)).copied().unwrap_or(usize::MAX);
        // column strictly increases downward
        let min_above = if r > 1 && c > inner.row(r - 1) {
            value.get(&(r - 1, c)).copied().unwrap_or(0) + 1
        } else {
            1
        };
        let mut total = 0;
        for v in min_above..=content.len() {
            if v > max_right {
                break;
            }
            if used[v - 1] == content[v - 1] {
                continue;
            }
            // lattice condition on the reverse reading word
            if v > 1 && used[v - 1] >= used[v - 2] {
                continue;
            }
            used[v - 1] += 1;
            value.insert((r, c), v);
            total += rec(cells, inner, content, used, value, pos + 1);
            used[v - 1] -= 1;
            value.remove(&(r, c));
        }
        total
    }

    rec(cells, inner, content, &mut used, &mut value, 0)
}

/// The h-expansion of a Schur function from the Jacobi-Trudi determinant.
pub fn jacobi_trudi_h(lambda: &Partition) -> Expansion {
    let mut out = Expansion::zero(Basis::Hom);
    let l = lambda.len();
    if l == 0 {
        out.add(Vec::new(), BigInt::from(1));
        return out;
    }
    let rows = lambda.parts();
    let mut perm: Vec<usize> = (0..l).collect();
    let mut taken = vec![false; l];

    fn rec(
        rows: &[u32],
        perm: &mut [usize],
        taken: &mut [bool],
        depth: usize,
        sign: i64,
        out: &mut Expansion,
    ) {
        let l = rows.len();
        if depth == l {
            let mut parts: Vec<i64> = Vec::with_capacity(l);
            for i in 0..l {
                let sub = rows[i] as i64 + perm[i] as i64 - i as i64;
                if sub < 0 {
                    return;
                }
                if sub > 0 {
                    parts.push(sub);
                }
            }
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let idx: Vec<u32> = parts.iter().map(|&p| p as u32).collect();
            out.add(idx, BigInt::from(sign));
            return;
        }
        for j in 0..l {
            if taken[j] {
                continue;
            }
            taken[j] = true;
            perm[depth] = j;
            // transposition count parity relative to sorted prefix
            let inversions = (0..depth).filter(|&i| perm[i] > j).count();
            let s = if inversions % 2 == 0 { sign } else { -sign };
            rec(rows, perm, taken, depth + 1, s, out);
            taken[j] = false;
        }
    }

    rec(rows, &mut perm, &mut taken, 0, 1, &mut out);
    out
}
