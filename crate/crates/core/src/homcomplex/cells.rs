use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A cell `σ × τ` of `hom(K2, G)`; its dimension is `|σ| + |τ| - 2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub sigma: VertexSet,
    pub tau: VertexSet,
}

impl Cell {
    pub fn new(sigma: VertexSet, tau: VertexSet) -> Cell {
        Cell { sigma, tau }
    }

    pub fn dim(&self) -> usize {
        self.sigma.len() + self.tau.len() - 2
    }

    /// Whether every `v ∈ σ`, `w ∈ τ` is an edge of `g`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        !self.sigma.is_empty()
            && !self.tau.is_empty()
            && self.sigma.iter().all(|v| v < g.n() && self.tau.is_subset(g.nbrs(v)))
    }
}

/// Cells of `hom(K2, G)` up to [`CellComplex::built_dim`], sorted within each
/// dimension.
#[derive(Debug, Clone)]
pub struct CellComplex {
    pub(crate) cells: Vec<Vec<Cell>>,
    pub(crate) index: Vec<BTreeMap<Cell, usize>>,
    /// Dimension of the largest cell of the whole complex.
    pub(crate) top_dim: usize,
    /// Homology is exact through this dimension.
    pub(crate) max_dim: usize,
    pub(crate) graph: Graph,
}

/// Default ceiling for homology dimensions.
pub const DEFAULT_MAX_DIM: usize = 6;

impl CellComplex {
    pub fn cells(&self, k: usize) -> &[Cell] {
        self.cells.get(k).map_or(&[], |c| c.as_slice())
    }

    pub fn index_of(&self, cell: &Cell) -> Option<usize> {
        self.index.get(cell.dim())?.get(cell).copied()
    }

    pub fn top_dim(&self) -> usize {
        self.top_dim
    }

    /// Homology dimensions that are fully determined by the stored cells.
    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    /// Highest dimension with stored cells (at most `max_dim + 1`).
    pub fn built_dim(&self) -> usize {
        self.cells.len() - 1
    }

    /// Whether cells above `max_dim` exist but were not considered.
    pub fn is_truncated(&self) -> bool {
        self.max_dim < self.top_dim
    }

    /// Number of cells per stored dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.len()).collect()
    }

    /// The graph the complex was built from.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Checks that every face of every stored cell is stored.
    pub fn check_closed(&self) -> Result<()> {
        for (k, cells) in self.cells.iter().enumerate().skip(1) {
            for c in cells {
                for face in faces(c) {
                    if !self.index[k - 1].contains_key(&face) {
                        return Err(Error::Structure(alloc::format!("face {face:?} of {c:?} missing")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Builds a complex from explicit cells; used to exercise the closure check.
    pub fn from_cells(g: &Graph, cells: Vec<Cell>, max_dim: usize) -> Result<CellComplex> {
        let top = cells.iter().map(Cell::dim).max().ok_or(Error::Edgeless)?;
        let mut by_dim: Vec<Vec<Cell>> = alloc::vec![Vec::new(); top + 1];
        if let Some(bad) = cells.iter().find(|c| !c.is_valid(g)) {
            return Err(Error::Structure(alloc::format!("{bad:?} is not a cell of the graph")));
        }
        for c in cells {
            by_dim[c.dim()].push(c);
        }
        let cx = finish(g, by_dim, top, max_dim.min(top));
        cx.check_closed()?;
        Ok(cx)
    }
}

/// Codimension-one faces, dropping one vertex from `σ` or from `τ`.
pub(crate) fn faces(c: &Cell) -> impl Iterator<Item = Cell> + '_ {
    let from_sigma = c.sigma.iter().filter(move |_| c.sigma.len() >= 2).map(move |v| {
        let mut s = c.sigma.clone();
        s.remove(v);
        Cell::new(s, c.tau.clone())
    });
    let from_tau = c.tau.iter().filter(move |_| c.tau.len() >= 2).map(move |w| {
        let mut t = c.tau.clone();
        t.remove(w);
        Cell::new(c.sigma.clone(), t)
    });
    from_sigma.chain(from_tau)
}

fn finish(g: &Graph, mut by_dim: Vec<Vec<Cell>>, top_dim: usize, max_dim: usize) -> CellComplex {
    let mut index = Vec::with_capacity(by_dim.len());
    for cells in by_dim.iter_mut() {
        cells.sort();
        cells.dedup();
        index.push(cells.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect());
    }
    CellComplex { cells: by_dim, index, top_dim, max_dim, graph: g.clone() }
}

/// All size-`k` subsets of `set`, each passed to `f`.
fn for_each_subset(set: &[usize], k: usize, f: &mut impl FnMut(&VertexSet)) {
    fn rec(set: &[usize], start: usize, k: usize, cur: &mut VertexSet, f: &mut impl FnMut(&VertexSet)) {
        if k == 0 {
            f(cur);
            return;
        }
        for i in start..=set.len() - k {
            cur.insert(set[i]);
            rec(set, i + 1, k - 1, cur, f);
            cur.remove(set[i]);
        }
    }
    if k <= set.len() {
        rec(set, 0, k, &mut VertexSet::new(), f);
    }
}

/// Enumerates `σ` in increasing order together with `C(σ) = ∩_{v∈σ} N(v)`,
/// visiting only `σ` with `C(σ)` nonempty.
fn walk_sigmas(g: &Graph, f: &mut impl FnMut(&VertexSet, &VertexSet)) {
    fn rec(g: &Graph, sigma: &mut VertexSet, common: &VertexSet, next: usize, f: &mut impl FnMut(&VertexSet, &VertexSet)) {
        f(sigma, common);
        for v in next..g.n() {
            let c = common.intersection(g.nbrs(v));
            if c.is_empty() {
                continue;
            }
            sigma.insert(v);
            rec(g, sigma, &c, v + 1, f);
            sigma.remove(v);
        }
    }
    for v in 0..g.n() {
        if g.nbrs(v).is_empty() {
            continue;
        }
        let mut sigma = VertexSet::singleton(v);
        rec(g, &mut sigma, &g.nbrs(v).clone(), v + 1, f);
    }
}

/// Dimension of the largest cell of `hom(K2, g)`.
pub fn top_dimension(g: &Graph) -> Result<usize> {
    if g.is_edgeless() {
        return Err(Error::Edgeless);
    }
    let mut top = 0;
    walk_sigmas(g, &mut |s, c| top = top.max(s.len() + c.len() - 2));
    Ok(top)
}

/// `hom(K2, g)` with enough cells for homology through `max_dim` (default
/// `min(top, 6)`).
pub fn build_hom_k2(g: &Graph, max_dim: Option<usize>) -> Result<CellComplex> {
    let top = top_dimension(g)?;
    let max_dim = max_dim.unwrap_or(DEFAULT_MAX_DIM).min(top);
    let built = (max_dim + 1).min(top);
    let mut by_dim: Vec<Vec<Cell>> = alloc::vec![Vec::new(); built + 1];
    walk_sigmas(g, &mut |sigma, common| {
        let s = sigma.len();
        if s > built + 1 {
            return;
        }
        let cs = common.to_vec();
        for t in 1..=(built + 2 - s).min(cs.len()) {
            for_each_subset(&cs, t, &mut |tau| by_dim[s + t - 2].push(Cell::new(sigma.clone(), tau.clone())));
        }
    });
    Ok(finish(g, by_dim, top, max_dim))
}

/// Number of cells of each dimension of the full complex, by brute force over
/// all pairs of vertex subsets. Test oracle for small graphs.
#[cfg(test)]
pub(crate) fn brute_force_f_vector(g: &Graph) -> Vec<usize> {
    let n = g.n();
    assert!(n <= 10);
    let mut f = Vec::new();
    for s in 1u32..1 << n {
        for t in 1u32..1 << n {
            let ok = (0..n).filter(|&v| s >> v & 1 == 1).all(|v| (0..n).filter(|&w| t >> w & 1 == 1).all(|w| g.has_edge(v, w)));
            if ok {
                let d = (s.count_ones() + t.count_ones() - 2) as usize;
                if f.len() <= d {
                    f.resize(d + 1, 0);
                }
                f[d] += 1;
            }
        }
    }
    f
}
