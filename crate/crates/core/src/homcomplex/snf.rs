//! Smith normal form of sparse integer matrices.
//!
//! Unit pivots are eliminated first on the sparse rows (each one splits off a
//! `1` and leaves the Schur complement). Whatever remains has no unit entry
//! and is diagonalised densely with big integers, after which the diagonal is
//! brought into divisibility order by gcd/lcm exchanges.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::boundary::SparseMatrix;

/// Machine integer that moves to a big integer on overflow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    fn norm(b: BigInt) -> Int {
        match b.to_i64() {
            Some(x) => Int::Small(x),
            None => Int::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(x) => BigInt::from(*x),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Int::Small(1) | Int::Small(-1))
    }

    pub fn mul(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(x) = a.checked_mul(*b) {
                return Int::Small(x);
            }
        }
        Int::norm(self.to_big() * other.to_big())
    }

    pub fn sub(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(x) = a.checked_sub(*b) {
                return Int::Small(x);
            }
        }
        Int::norm(self.to_big() - other.to_big())
    }

    pub fn neg(&self) -> Int {
        Int::Small(0).sub(self)
    }
}

/// Rank and invariant factors of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    pub rank: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<BigInt>,
}

type Row = Vec<(u32, Int)>;

/// `target - f * pivot_row`, skipping column `skip`.
fn axpy(target: &Row, f: &Int, pivot: &Row, skip: u32, fresh: &mut Vec<u32>) -> Row {
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < pivot.len() {
        let ci = target.get(i).map_or(u32::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(u32::MAX, |e| e.0);
        if ci < cj {
            out.push(target[i].clone());
            i += 1;
        } else if cj < ci {
            if cj != skip {
                out.push((cj, f.mul(&pivot[j].1).neg()));
                fresh.push(cj);
            }
            j += 1;
        } else {
            if ci != skip {
                let v = target[i].1.sub(&f.mul(&pivot[j].1));
                if !v.is_zero() {
                    out.push((ci, v));
                }
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn lookup(row: &Row, col: u32) -> Option<&Int> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|k| &row[k].1)
}

/// Invariant factors by dense elimination. Consumes the matrix.
fn dense_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry of the remaining block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let x = &q * &a[t][j];
                        a[i][j] -= x;
                    }
                    dirty |= !a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let x = &q * &row[t];
                        row[j] -= x;
                    }
                    dirty |= !a[t][j].is_zero();
                }
            }
            if !dirty {
                break;
            }
            // A remainder is smaller than the pivot: move it into place.
            let mut best = (t, t);
            for i in t + 1..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            }
            if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    // gcd/lcm exchanges give the divisibility chain.
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = &diag[i] / &g * &diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

/// Smith normal form summary of `m`.
pub fn smith(m: &SparseMatrix) -> Smith {
    let mut rows: Vec<Row> = vec![Vec::new(); m.rows];
    for (j, col) in m.columns.iter().enumerate() {
        for &(i, v) in col {
            rows[i].push((j as u32, Int::Small(v)));
        }
    }
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); m.cols];
    for (i, r) in rows.iter().enumerate() {
        for (c, _) in r {
            col_rows[*c as usize].push(i as u32);
        }
    }
    let mut rank = 0;
    let mut fresh = Vec::new();
    loop {
        let mut order: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].is_empty()).collect();
        order.sort_by_key(|&i| rows[i].len());
        let mut pivoted = false;
        for r in order {
            if rows[r].is_empty() {
                continue;
            }
            // Unit entry whose column has the fewest rows.
            let Some(&(c, ref p)) = rows[r]
                .iter()
                .filter(|e| e.1.is_unit())
                .min_by_key(|e| col_rows[e.0 as usize].len())
            else {
                continue;
            };
            let sign = p.clone();
            let pivot_row = core::mem::take(&mut rows[r]);
            let mut hits = core::mem::take(&mut col_rows[c as usize]);
            hits.sort_unstable();
            hits.dedup();
            for &i in &hits {
                let i = i as usize;
                if i == r {
                    continue;
                }
                let Some(a) = lookup(&rows[i], c).cloned() else { continue };
                let f = a.mul(&sign);
                fresh.clear();
                rows[i] = axpy(&rows[i], &f, &pivot_row, c, &mut fresh);
                for &cj in &fresh {
                    col_rows[cj as usize].push(i as u32);
                }
            }
            rank += 1;
            pivoted = true;
            // Compact the lists that grew long with stale entries.
            if rank % 256 == 0 {
                for (cj, list) in col_rows.iter_mut().enumerate() {
                    list.retain(|&i| lookup(&rows[i as usize], cj as u32).is_some());
                }
            }
        }
        if !pivoted {
            break;
        }
    }
    let left: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].is_empty()).collect();
    let mut torsion = Vec::new();
    if !left.is_empty() {
        let mut cols: Vec<u32> = left.iter().flat_map(|&i| rows[i].iter().map(|e| e.0)).collect();
        cols.sort_unstable();
        cols.dedup();
        let mut dense = vec![vec![BigInt::zero(); cols.len()]; left.len()];
        for (di, &i) in left.iter().enumerate() {
            for (c, v) in &rows[i] {
                let dj = cols.binary_search(c).unwrap();
                dense[di][dj] = v.to_big();
            }
        }
        for d in dense_diagonal(dense) {
            if !d.is_zero() {
                rank += 1;
                if d > BigInt::one() {
                    torsion.push(d);
                }
            }
        }
    }
    Smith { rank, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: &[&[i64]]) -> SparseMatrix {
        let r = rows.len();
        let c = rows[0].len();
        let mut m = SparseMatrix::zero(r, c);
        for j in 0..c {
            for i in 0..r {
                if rows[i][j] != 0 {
                    m.columns[j].push((i, rows[i][j]));
                }
            }
        }
        m
    }

    #[test]
    fn small_examples() {
        let s = smith(&matrix(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.rank, 2);
        assert_eq!(s.torsion, vec![BigInt::from(6)]);
        let s = smith(&matrix(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(s.rank, 3);
        assert_eq!(s.torsion, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let s = smith(&matrix(&[&[1, 2], &[2, 4]]));
        assert_eq!((s.rank, s.torsion.len()), (1, 0));
        assert_eq!(smith(&SparseMatrix::zero(3, 0)).rank, 0);
    }

    #[test]
    fn overflow_promotes() {
        let big = i64::MAX / 2;
        let s = smith(&matrix(&[&[1, big], &[big, 3]]));
        assert_eq!(s.rank, 2);
        let det = BigInt::from(3) - BigInt::from(big) * BigInt::from(big);
        assert_eq!(s.torsion, vec![det.abs()]);
    }
}
