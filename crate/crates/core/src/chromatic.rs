//! Exact chromatic number by DSATUR branch and bound.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::budget::{Budget, Unlimited};
use crate::graph::Graph;

/// A proper colouring: `colors[v] < k` and no edge is monochromatic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c < self.k)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChromaticNumber {
    Exact(usize),
    /// Search ran out of budget between these bounds.
    Interval { lo: usize, hi: usize },
    /// Some vertex is looped, so no proper colouring exists.
    Infinite,
}

impl ChromaticNumber {
    pub fn exact(self) -> Option<usize> {
        match self {
            ChromaticNumber::Exact(k) => Some(k),
            _ => None,
        }
    }

    /// Best known upper bound; `None` for graphs with loops.
    pub fn upper(self) -> Option<usize> {
        match self {
            ChromaticNumber::Exact(k) | ChromaticNumber::Interval { hi: k, .. } => Some(k),
            ChromaticNumber::Infinite => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub value: ChromaticNumber,
    /// Best colouring found, absent for graphs with loops.
    pub coloring: Option<Coloring>,
}

/// Size of a greedily grown clique, best over all start vertices.
pub fn greedy_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::new();
    for start in 0..g.n() {
        let mut clique = VertexSet::singleton(start);
        let mut cand = g.nbrs(start) - &clique;
        while let Some(v) = cand.iter().max_by_key(|&v| (g.nbrs(v) & &cand).len()) {
            clique.insert(v);
            cand.intersect_with(g.nbrs(v));
            cand.remove(v);
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

struct Search<'a, B> {
    g: &'a Graph,
    colors: Vec<usize>,
    /// `seen[v][c]`: neighbours of `v` currently coloured `c`.
    seen: Vec<Vec<u32>>,
    sat: Vec<usize>,
    best: usize,
    best_colors: Vec<usize>,
    lo: usize,
    budget: B,
    aborted: bool,
}

const NONE: usize = usize::MAX;

impl<B: Budget> Search<'_, B> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for u in self.g.nbrs(v).iter() {
            if self.seen[u][c] == 0 {
                self.sat[u] += 1;
            }
            self.seen[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = NONE;
        for u in self.g.nbrs(v).iter() {
            self.seen[u][c] -= 1;
            if self.seen[u][c] == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        let uncolored_degree = |v: usize| self.g.nbrs(v).iter().filter(|&u| self.colors[u] == NONE).count();
        (0..self.g.n())
            .filter(|&v| self.colors[v] == NONE)
            .max_by_key(|&v| (self.sat[v], uncolored_degree(v), core::cmp::Reverse(v)))
    }

    fn run(&mut self, used: usize) {
        if self.aborted || self.best <= self.lo {
            return;
        }
        if self.budget.exhausted() {
            self.aborted = true;
            return;
        }
        let Some(v) = self.pick() else {
            self.best = used;
            self.best_colors.clone_from(&self.colors);
            return;
        };
        for c in 0..(used + 1).min(self.best - 1) {
            if self.seen[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            self.run(used.max(c + 1));
            self.unassign(v, c);
            if self.aborted || self.best <= self.lo {
                return;
            }
        }
    }
}

/// Exact chromatic number within `budget`.
pub fn chromatic_number_with(g: &Graph, budget: impl Budget) -> ChromaticResult {
    if g.has_loops() {
        return ChromaticResult { value: ChromaticNumber::Infinite, coloring: None };
    }
    let n = g.n();
    let lo = greedy_clique(g).len().max(1);
    let mut s = Search {
        g,
        colors: vec![NONE; n],
        seen: vec![vec![0; n + 1]; n],
        sat: vec![0; n],
        best: n + 1,
        best_colors: Vec::new(),
        lo,
        budget,
        aborted: false,
    };
    // One greedy DSATUR pass gives the first incumbent.
    let mut used = 0;
    while let Some(v) = s.pick() {
        let c = (0..).find(|&c| s.seen[v][c] == 0).unwrap();
        s.assign(v, c);
        used = used.max(c + 1);
    }
    s.best = used;
    s.best_colors = s.colors.clone();
    for v in 0..n {
        let c = s.colors[v];
        s.unassign(v, c);
    }
    s.run(0);
    let coloring = Coloring { colors: s.best_colors, k: s.best };
    let value = if s.aborted && s.best > lo {
        ChromaticNumber::Interval { lo, hi: s.best }
    } else {
        ChromaticNumber::Exact(s.best)
    };
    ChromaticResult { value, coloring: Some(coloring) }
}

pub fn chromatic_number(g: &Graph) -> ChromaticResult {
    chromatic_number_with(g, Unlimited)
}
