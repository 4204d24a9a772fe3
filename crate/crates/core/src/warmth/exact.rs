//! Greatest fixed point of the pruning operator over all nonempty proper
//! subsets, for graphs small enough to index every subset.
//!
//! `A` survives a round iff `V \ A` is a union of at most `d` holes
//! `V \ N(B)` with `B` still alive. Unions of `j` holes are produced for all
//! `A` at once by OR-convolution (zeta transform, pointwise product, Möbius
//! transform). Counts stay below `4^n`, so the `u64` arithmetic is exact.

use alloc::vec;
use alloc::vec::Vec;

use super::family::{witness_closure, Search};
use crate::bitset::VertexSet;
use crate::budget::Budget;
use crate::graph::Graph;

/// Hard limit for the exact engine; memory is a few `u64` per subset.
pub const EXACT_HARD_LIMIT: usize = 24;

fn zeta(f: &mut [u64], n: usize) {
    for i in 0..n {
        let bit = 1usize << i;
        for m in 0..f.len() {
            if m & bit != 0 {
                f[m] = f[m].wrapping_add(f[m ^ bit]);
            }
        }
    }
}

fn mobius(f: &mut [u64], n: usize) {
    for i in 0..n {
        let bit = 1usize << i;
        for m in 0..f.len() {
            if m & bit != 0 {
                f[m] = f[m].wrapping_sub(f[m ^ bit]);
            }
        }
    }
}

/// `N(B)` for every subset mask `B`.
pub(crate) fn neighborhood_table(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let adj: Vec<u32> = (0..n).map(|v| g.nbrs(v).to_mask() as u32).collect();
    let mut nb = vec![0u32; 1 << n];
    for m in 1..nb.len() {
        let low = m.trailing_zeros() as usize;
        nb[m] = nb[m & (m - 1)] | adj[low];
    }
    nb
}

/// Surviving masks of the pruning fixed point, or `None` when the budget ran
/// out.
pub(crate) fn fixed_point(g: &Graph, nb: &[u32], d: usize, budget: &mut impl Budget) -> Option<Vec<bool>> {
    let n = g.n();
    let size = 1usize << n;
    let full = size - 1;
    let mut alive = vec![true; size];
    alive[0] = false;
    alive[full] = false;
    let mut holes = vec![0u64; size];
    let mut cur = vec![0u64; size];
    loop {
        if budget.exhausted() {
            return None;
        }
        holes.iter_mut().for_each(|h| *h = 0);
        for b in 1..full {
            if alive[b] {
                holes[full ^ nb[b] as usize] = 1;
            }
        }
        cur.copy_from_slice(&holes);
        zeta(&mut holes, n);
        for _ in 1..d {
            zeta(&mut cur, n);
            for (c, h) in cur.iter_mut().zip(holes.iter()) {
                *c = c.wrapping_mul(*h);
            }
            mobius(&mut cur, n);
            cur.iter_mut().for_each(|c| *c = (*c != 0) as u64);
            if budget.exhausted() {
                return None;
            }
        }
        let mut changed = false;
        for a in 1..full {
            if alive[a] && cur[full ^ a] == 0 {
                alive[a] = false;
                changed = true;
            }
        }
        if !changed {
            return Some(alive);
        }
    }
}

pub(crate) fn search(g: &Graph, d: usize, mut budget: impl Budget) -> Search {
    let n = g.n();
    let nb = neighborhood_table(g);
    let Some(alive) = fixed_point(g, &nb, d, &mut budget) else {
        return Search::OutOfBudget;
    };
    // Seed with the smallest survivor; prefer a singleton.
    let Some(seed) = (1..alive.len()).filter(|&m| alive[m]).min_by_key(|&m| (m.count_ones(), m)) else {
        return Search::Absent;
    };
    // One representative per distinct neighbourhood among survivors.
    let full = (1usize << n) - 1;
    let mut rep = vec![u32::MAX; 1 << n];
    for b in 1..full {
        if alive[b] {
            let v = nb[b] as usize;
            if rep[v] == u32::MAX || (b as u32).count_ones() < rep[v].count_ones() {
                rep[v] = b as u32;
            }
        }
    }
    let present: Vec<usize> = (0..rep.len()).filter(|&v| rep[v] != u32::MAX).collect();
    let candidates = |a: &VertexSet| {
        let am = a.to_mask() as usize;
        present
            .iter()
            .filter(|&&v| v & am == am)
            .map(|&v| (VertexSet::from_mask(v as u64), VertexSet::from_mask(rep[v] as u64)))
            .collect()
    };
    match witness_closure(g, d, VertexSet::from_mask(seed as u64), candidates, &mut budget) {
        Some(f) => Search::Found(f),
        None => Search::OutOfBudget,
    }
}
