use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use rand_core::RngCore;

use super::boundary::{boundary_matrix, SparseMatrix};
use super::cells::{Cell, CellComplex};
use super::snf::smith;
use crate::bitset::VertexSet;
use crate::error::{input_err, Error, Result};
use crate::graph::Graph;

/// Closed walk `a_0 b_1 a_1 b_2 … a_{n-1} b_n` of even length `2n`; the step
/// from `b_n` back to `a_0` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvenClosedWalk {
    vertices: Vec<usize>,
}

impl EvenClosedWalk {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<EvenClosedWalk> {
        let len = vertices.len();
        if len == 0 || len % 2 == 1 {
            return Err(input_err!("closed walk must have positive even length, got {len}"));
        }
        for i in 0..len {
            let (u, v) = (vertices[i], vertices[(i + 1) % len]);
            if u >= g.n() || v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n: g.n() });
            }
            if !g.has_edge(u, v) {
                return Err(input_err!("walk step {u} -> {v} is not an edge"));
            }
        }
        Ok(EvenClosedWalk { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of steps, `2n`.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The walk `k` times around.
    pub fn repeat(&self, k: usize) -> EvenClosedWalk {
        EvenClosedWalk { vertices: self.vertices.repeat(k) }
    }

    /// The 1-cell crossed at position `j`, with its orientation sign, or `None`
    /// when the walk backtracks there.
    pub(crate) fn triple(&self, j: usize) -> Option<(Cell, i64)> {
        let w = &self.vertices;
        let len = w.len();
        let (prev, mid, next) = (w[(j + len - 1) % len], w[j], w[(j + 1) % len]);
        if prev == next {
            return None;
        }
        let pair: VertexSet = [prev, next].into_iter().collect();
        let single = VertexSet::singleton(mid);
        let cell = if j % 2 == 0 { Cell::new(single, pair) } else { Cell::new(pair, single) };
        // The boundary of an edge cell is (larger end) - (smaller end), so
        // moving up in vertex order is the positive direction.
        Some((cell, if prev < next { 1 } else { -1 }))
    }
}

/// A 1-chain, one coefficient per 1-cell of the complex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain1 {
    pub coeffs: Vec<i64>,
}

impl Chain1 {
    pub fn zero(c: &CellComplex) -> Chain1 {
        Chain1 { coeffs: vec![0; c.cells(1).len()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&x| x == 0)
    }

    pub fn add(&mut self, other: &Chain1) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().copied().enumerate().filter(|e| e.1 != 0)
    }
}

/// `∂_1` applied to a chain.
pub fn chain_boundary(c: &CellComplex, chain: &Chain1) -> Result<Vec<i64>> {
    Ok(boundary_matrix(c, 1)?.apply(&chain.coeffs))
}

/// The 1-chain traced by `gamma`: every vertex of the walk contributes the edge
/// cell joining the two directed edges around it. Fails if the result is not
/// a cycle.
pub fn cycle_chain(c: &CellComplex, gamma: &EvenClosedWalk) -> Result<Chain1> {
    let g = c.graph();
    EvenClosedWalk::new(g, gamma.vertices.clone())?;
    let mut chain = Chain1::zero(c);
    for j in 0..gamma.len() {
        if let Some((cell, s)) = gamma.triple(j) {
            let i = c.index_of(&cell).ok_or_else(|| Error::Structure(alloc::format!("{cell:?} not in complex")))?;
            chain.coeffs[i] += s;
        }
    }
    if chain_boundary(c, &chain)?.iter().any(|&x| x != 0) {
        return Err(Error::Structure("walk chain has nonzero boundary".into()));
    }
    Ok(chain)
}

/// Closed walks of the double cover `G × K2` through one base vertex per
/// component: the fundamental cycle of every non-tree edge, projected to `G`.
/// Walks longer than `cap` are dropped. Together they span the cycle space of
/// the cover.
pub fn fundamental_walks(g: &Graph, cap: usize) -> Vec<EvenClosedWalk> {
    let n = g.n();
    // Cover vertex (v, s) is 2v + s.
    let mut parent = vec![usize::MAX; 2 * n];
    let mut depth = vec![usize::MAX; 2 * n];
    let mut root = vec![usize::MAX; 2 * n];
    let mut tree_edges = Vec::new();
    for start in (0..n).filter(|&v| !g.nbrs(v).is_empty()).map(|v| 2 * v) {
        if depth[start] != usize::MAX {
            continue;
        }
        depth[start] = 0;
        root[start] = start;
        let mut q = VecDeque::from([start]);
        while let Some(x) = q.pop_front() {
            for w in g.nbrs(x / 2).iter() {
                let y = 2 * w + (1 - x % 2);
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parent[y] = x;
                    root[y] = start;
                    tree_edges.push((x.min(y), x.max(y)));
                    q.push_back(y);
                }
            }
        }
    }
    tree_edges.sort_unstable();
    let path_to_root = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let mut out = Vec::new();
    for v in 0..n {
        for w in g.nbrs(v).iter() {
            // Cover edge (v,0) - (w,1), once each.
            let (x, y) = (2 * v, 2 * w + 1);
            if depth[x] == usize::MAX || tree_edges.binary_search(&(x.min(y), x.max(y))).is_ok() {
                continue;
            }
            if depth[x] + depth[y] + 1 > cap {
                continue;
            }
            let mut walk: Vec<usize> = path_to_root(x);
            walk.reverse();
            let back = path_to_root(y);
            walk.extend(&back[..back.len() - 1]);
            debug_assert_eq!(root[x], root[y]);
            let vs = walk.into_iter().map(|z| z / 2).collect();
            out.push(EvenClosedWalk { vertices: vs });
        }
    }
    out
}

/// Random closed walk: `steps` random moves from a random non-isolated vertex,
/// closed up by a shortest return path in the double cover.
pub fn random_even_closed_walk<R: RngCore>(g: &Graph, steps: usize, rng: &mut R) -> Result<EvenClosedWalk> {
    let active: Vec<usize> = (0..g.n()).filter(|&v| !g.nbrs(v).is_empty()).collect();
    if active.is_empty() {
        return Err(Error::Edgeless);
    }
    let pick = |rng: &mut R, k: usize| (rng.next_u64() % k as u64) as usize;
    let start = active[pick(rng, active.len())];
    let mut walk = vec![start];
    let mut cur = start;
    for _ in 0..steps {
        let nb = g.nbrs(cur).to_vec();
        cur = nb[pick(rng, nb.len())];
        walk.push(cur);
    }
    // BFS in the cover from (start, 0) so the return leg ends there.
    let n = g.n();
    let target = 2 * cur + (steps % 2);
    let mut prev = vec![usize::MAX; 2 * n];
    prev[2 * start] = 2 * start;
    let mut q = VecDeque::from([2 * start]);
    while let Some(x) = q.pop_front() {
        if x == target {
            break;
        }
        for w in g.nbrs(x / 2).iter() {
            let y = 2 * w + (1 - x % 2);
            if prev[y] == usize::MAX {
                prev[y] = x;
                q.push_back(y);
            }
        }
    }
    // Walk back from the target towards the start.
    let mut x = target;
    while x != 2 * start {
        x = prev[x];
        walk.push(x / 2);
    }
    walk.pop();
    if walk.is_empty() {
        // Zero steps: bounce along an edge.
        walk = vec![start, g.nbrs(start).first().unwrap()];
    }
    EvenClosedWalk::new(g, walk)
}

/// Outcome of [`h1_span_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanReport {
    pub b1: usize,
    /// Rank of the span of the walk classes in `H_1 ⊗ ℚ`.
    pub span_rank: usize,
    pub walks: usize,
    pub cap: usize,
}

impl SpanReport {
    pub fn spans(&self) -> bool {
        self.span_rank == self.b1
    }
}

fn with_columns(m: &SparseMatrix, extra: &[Chain1]) -> SparseMatrix {
    let mut out = m.clone();
    for ch in extra {
        out.columns.push(ch.support().collect());
        out.cols += 1;
    }
    out
}

/// Rank of the classes of `chains` in `H_1 ⊗ ℚ`.
pub fn class_rank(c: &CellComplex, chains: &[Chain1]) -> Result<usize> {
    let d2 = boundary_matrix(c, 2)?;
    Ok(smith(&with_columns(&d2, chains)).rank - smith(&d2).rank)
}

/// How much of `H_1 ⊗ ℚ` the classes of closed walks of length `≤ cap` span.
pub fn h1_span_check(c: &CellComplex, walk_length_cap: usize) -> Result<SpanReport> {
    if c.max_dim() < 1 && c.top_dim() >= 1 {
        return Err(input_err!("complex was built without dimension 2"));
    }
    let d1 = boundary_matrix(c, 1)?;
    let d2 = boundary_matrix(c, 2)?;
    let r2 = smith(&d2).rank;
    let b1 = c.cells(1).len() - smith(&d1).rank - r2;
    let walks = fundamental_walks(c.graph(), walk_length_cap);
    let chains: Vec<Chain1> = walks.iter().map(|w| cycle_chain(c, w)).collect::<Result<_>>()?;
    let span_rank = smith(&with_columns(&d2, &chains)).rank - r2;
    Ok(SpanReport { b1, span_rank, walks: walks.len(), cap: walk_length_cap })
}
