use alloc::vec::Vec;

use super::cells::{CellComplex, Cell};
use crate::error::{Error, Result};

/// Integer matrix stored by columns; each column lists `(row, value)` sorted
/// by row with no zero entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix { rows, cols, columns: alloc::vec![Vec::new(); cols] }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// `self * other`, panicking on `i64` overflow (entries here are tiny).
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = SparseMatrix::zero(self.rows, other.cols);
        let mut acc = alloc::vec![0i64; self.rows];
        for (j, col) in other.columns.iter().enumerate() {
            let mut touched = Vec::new();
            for &(k, b) in col {
                for &(i, a) in &self.columns[k] {
                    if acc[i] == 0 {
                        touched.push(i);
                    }
                    acc[i] = acc[i].checked_add(a.checked_mul(b).unwrap()).unwrap();
                }
            }
            touched.sort_unstable();
            touched.dedup();
            for i in touched {
                if acc[i] != 0 {
                    out.columns[j].push((i, acc[i]));
                }
                acc[i] = 0;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// `self * x` for a dense integer vector.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let mut out = alloc::vec![0i64; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            if x[j] != 0 {
                for &(i, a) in col {
                    out[i] += a * x[j];
                }
            }
        }
        out
    }
}

/// Orientation rule for the boundary of `σ × τ`. Only [`SignConvention::Product`]
/// gives a chain complex; the other one exists so tests can confirm that a
/// broken sign is detected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    Product,
    #[doc(hidden)]
    WithoutCrossSign,
}

/// Signed faces of a cell: `Σ (-1)^{pos(v,σ)} (σ∖v × τ) + (-1)^{|σ|-1} Σ (-1)^{pos(w,τ)} (σ × τ∖w)`.
pub fn signed_faces(cell: &Cell, convention: SignConvention) -> Vec<(Cell, i64)> {
    let mut out = Vec::new();
    if cell.sigma.len() >= 2 {
        for (pos, v) in cell.sigma.iter().enumerate() {
            let mut s = cell.sigma.clone();
            s.remove(v);
            out.push((Cell::new(s, cell.tau.clone()), if pos % 2 == 0 { 1 } else { -1 }));
        }
    }
    if cell.tau.len() >= 2 {
        let cross = match convention {
            SignConvention::Product if (cell.sigma.len() - 1) % 2 == 1 => -1,
            _ => 1,
        };
        for (pos, w) in cell.tau.iter().enumerate() {
            let mut t = cell.tau.clone();
            t.remove(w);
            out.push((Cell::new(cell.sigma.clone(), t), cross * if pos % 2 == 0 { 1 } else { -1 }));
        }
    }
    out
}

/// `∂_k : C_k → C_{k-1}` for `1 ≤ k ≤ built_dim`.
pub fn boundary_matrix_with(c: &CellComplex, k: usize, convention: SignConvention) -> Result<SparseMatrix> {
    if k == 0 || k > c.built_dim() {
        return Ok(SparseMatrix::zero(c.cells(k.saturating_sub(1)).len(), c.cells(k).len()));
    }
    let mut m = SparseMatrix::zero(c.cells(k - 1).len(), c.cells(k).len());
    for (j, cell) in c.cells(k).iter().enumerate() {
        let mut col = Vec::new();
        for (face, sign) in signed_faces(cell, convention) {
            let i = c.index[k - 1]
                .get(&face)
                .copied()
                .ok_or_else(|| Error::Structure(alloc::format!("face {face:?} of {cell:?} missing")))?;
            col.push((i, sign));
        }
        col.sort_unstable();
        m.columns[j] = col;
    }
    Ok(m)
}

pub fn boundary_matrix(c: &CellComplex, k: usize) -> Result<SparseMatrix> {
    boundary_matrix_with(c, k, SignConvention::Product)
}

/// `[∂_0, ∂_1, …, ∂_{built_dim}]`, with `∂_0` the zero map to the zero group.
pub fn boundary_matrices_with(c: &CellComplex, convention: SignConvention) -> Result<Vec<SparseMatrix>> {
    (0..=c.built_dim()).map(|k| boundary_matrix_with(c, k, convention)).collect()
}

pub fn boundary_matrices(c: &CellComplex) -> Result<Vec<SparseMatrix>> {
    boundary_matrices_with(c, SignConvention::Product)
}

/// Verifies `∂_{k-1} ∂_k = 0` for every consecutive pair.
pub fn check_chain_complex(mats: &[SparseMatrix]) -> Result<()> {
    for k in 2..mats.len() {
        if !mats[k - 1].mul(&mats[k]).is_zero() {
            return Err(Error::Structure(alloc::format!("boundary of boundary is nonzero in degree {k}")));
        }
    }
    Ok(())
}
