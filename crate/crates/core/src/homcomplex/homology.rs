use alloc::vec::Vec;

use num_bigint::BigUint;

use super::boundary::{boundary_matrices, SparseMatrix};
use super::cells::CellComplex;
use super::snf::{smith, Smith};
use crate::error::{Error, Result};

/// Integer homology through `max_dim`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologySummary {
    /// `b_0, …, b_{max_dim}`.
    pub betti: Vec<usize>,
    /// Invariant factors `≥ 2` of each `H_k`, each dividing the next.
    pub torsion: Vec<Vec<BigUint>>,
    pub max_dim: usize,
    pub top_dim: usize,
    /// Cells above `max_dim + 1` were never built, so higher groups are unknown.
    pub truncated: bool,
}

impl HomologySummary {
    /// Whether the reduced group `H̃_k` is nonzero.
    pub fn reduced_nonzero(&self, k: usize) -> bool {
        let b = self.betti[k] - usize::from(k == 0);
        b > 0 || !self.torsion[k].is_empty()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }
}

fn to_unsigned(s: &Smith) -> Vec<BigUint> {
    s.torsion.iter().map(|t| t.magnitude().clone()).collect()
}

/// Homology of `c` through `min(max_dim, c.max_dim())`.
pub fn homology(c: &CellComplex, max_dim: Option<usize>) -> Result<HomologySummary> {
    let mats = boundary_matrices(c)?;
    homology_from(c, &mats, max_dim)
}

pub(crate) fn homology_from(c: &CellComplex, mats: &[SparseMatrix], max_dim: Option<usize>) -> Result<HomologySummary> {
    let max_dim = max_dim.map_or(c.max_dim(), |m| m.min(c.max_dim()));
    // smiths[k] describes ∂_k; index 0 and anything past the top are zero maps.
    // The builder always stores cells one dimension past max_dim when they exist.
    let smiths: Vec<Smith> = (0..=max_dim + 1)
        .map(|k| match mats.get(k) {
            Some(m) if k > 0 => smith(m),
            _ => Smith { rank: 0, torsion: Vec::new() },
        })
        .collect();
    let mut betti = Vec::with_capacity(max_dim + 1);
    let mut torsion = Vec::with_capacity(max_dim + 1);
    for k in 0..=max_dim {
        let f = c.cells(k).len();
        betti.push(f - smiths[k].rank - smiths[k + 1].rank);
        torsion.push(to_unsigned(&smiths[k + 1]));
    }
    Ok(HomologySummary { betti, torsion, max_dim, top_dim: c.top_dim(), truncated: max_dim < c.top_dim() })
}

/// `b_1`; positive exactly when `H_1` contains a copy of `ℤ`.
pub fn h1_free_rank(h: &HomologySummary) -> usize {
    h.betti.get(1).copied().unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connectivity {
    Exact(isize),
    /// Reduced homology vanishes through `max_dim` but higher groups were not computed.
    AtLeast(isize),
    /// Homologically acyclic.
    Infinite,
}

impl core::fmt::Display for Connectivity {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Connectivity::Exact(k) => write!(f, "{k}"),
            Connectivity::AtLeast(k) => write!(f, ">={k}"),
            Connectivity::Infinite => write!(f, "inf"),
        }
    }
}

/// Homological estimate of connectivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConnectivityEstimate {
    pub value: Connectivity,
    /// Set when the complex is connected with `H_1 = 0`. The fundamental group
    /// is not computed, so the value may overstate the true connectivity.
    pub caveat: bool,
}

impl ConnectivityEstimate {
    /// The numeric value, with `AtLeast` read as its bound.
    pub fn as_lower(&self) -> Option<isize> {
        match self.value {
            Connectivity::Exact(k) | Connectivity::AtLeast(k) => Some(k),
            Connectivity::Infinite => None,
        }
    }
}

pub fn homological_connectivity(h: &HomologySummary) -> ConnectivityEstimate {
    if h.betti[0] > 1 {
        return ConnectivityEstimate { value: Connectivity::Exact(-1), caveat: false };
    }
    let caveat = h.max_dim == 0 || !h.reduced_nonzero(1);
    let value = match (0..=h.max_dim).find(|&k| h.reduced_nonzero(k)) {
        Some(k) => Connectivity::Exact(k as isize - 1),
        None if h.truncated => Connectivity::AtLeast(h.max_dim as isize),
        None => Connectivity::Infinite,
    };
    ConnectivityEstimate { value, caveat }
}

/// Connected components of the 1-skeleton, by union-find.
pub fn component_count(c: &CellComplex) -> usize {
    let n0 = c.cells(0).len();
    let mut parent: Vec<usize> = (0..n0).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = n0;
    for cell in c.cells(1) {
        let mut ends = super::cells::faces(cell).map(|f| c.index_of(&f).unwrap());
        let (a, b) = (ends.next().unwrap(), ends.next().unwrap());
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

/// Euler characteristic and `b_0` cross-checks against the cell counts.
pub fn check_invariants(c: &CellComplex, h: &HomologySummary) -> Result<()> {
    if !h.truncated {
        let chi: i64 = c.f_vector().iter().take(h.max_dim + 1).enumerate().map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) }).sum();
        if chi != h.euler_characteristic() {
            return Err(Error::Structure(alloc::format!("Euler characteristic {chi} vs Betti sum {}", h.euler_characteristic())));
        }
    }
    let comps = component_count(c);
    if comps != h.betti[0] {
        return Err(Error::Structure(alloc::format!("b0 = {} but {comps} components", h.betti[0])));
    }
    Ok(())
}
