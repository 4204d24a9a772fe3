//! Local searches: witness sizes, singleton generators and complete
//! bipartite subgraphs.

use alloc::vec::Vec;

use super::cover::min_cover;
use crate::bitset::VertexSet;
use crate::budget::Unlimited;
use crate::graph::Graph;

/// Fewest distinct members whose neighbourhoods intersect exactly to `a`.
pub fn minimal_witness_size(g: &Graph, family: &[VertexSet], a: &VertexSet) -> Option<usize> {
    let all = g.vertices();
    if a.is_empty() || !a.is_subset(&all) || *a == all {
        return None;
    }
    let mut nbs: Vec<VertexSet> = family.iter().map(|b| g.nbhd(b)).filter(|nb| a.is_subset(nb)).collect();
    nbs.sort();
    nbs.dedup();
    let mut meet = all.clone();
    for nb in &nbs {
        meet.intersect_with(nb);
    }
    if meet != *a {
        return None;
    }
    let holes: Vec<VertexSet> = nbs.iter().map(|nb| all.difference(nb)).collect();
    min_cover(&all.difference(a), &holes, Unlimited).map(|c| c.len())
}

/// A set `U`, `1 ≤ |U| ≤ k`, with `∩_{u∈U} N(u) = {v}`.
pub fn generated_by_at_most(g: &Graph, v: usize, k: usize) -> Option<VertexSet> {
    if v >= g.n() || k == 0 {
        return None;
    }
    let all = g.vertices();
    let target = all.difference(&VertexSet::singleton(v));
    // Every generator is a neighbour of v.
    let cands: Vec<usize> = g.nbrs(v).to_vec();
    let holes: Vec<VertexSet> = cands.iter().map(|&u| all.difference(g.nbrs(u))).collect();
    if target.is_empty() {
        // Single vertex graph: a loop at v makes {v} its own generator.
        return cands.first().map(|&u| VertexSet::singleton(u));
    }
    let best = min_cover(&target, &holes, Unlimited)?;
    (best.len() <= k).then(|| best.iter().map(|&i| cands[i]).collect())
}

/// Disjoint `A`, `B` with `|A| = a`, `|B| = b` and every cross pair an edge.
pub fn find_complete_bipartite(g: &Graph, a: usize, b: usize) -> Option<(VertexSet, VertexSet)> {
    if a == 0 || b == 0 || a + b > g.n() {
        return None;
    }
    if a > b {
        return find_complete_bipartite(g, b, a).map(|(x, y)| (y, x));
    }
    fn grow(g: &Graph, a: usize, b: usize, side: &mut Vec<usize>, common: &VertexSet, start: usize) -> Option<VertexSet> {
        let free = common.difference(&side.iter().copied().collect());
        if free.len() < b {
            return None;
        }
        if side.len() == a {
            return Some(free.iter().take(b).collect());
        }
        for u in start..g.n() {
            if g.degree(u) < b {
                continue;
            }
            let next = common.intersection(g.nbrs(u));
            side.push(u);
            if let Some(found) = grow(g, a, b, side, &next, u + 1) {
                return Some(found);
            }
            side.pop();
        }
        None
    }
    let mut side = Vec::new();
    let other = grow(g, a, b, &mut side, &g.vertices(), 0)?;
    Some((side.into_iter().collect(), other))
}

/// Subgraph containment checked by brute force over all vertex subsets; the
/// test oracle for [`find_complete_bipartite`].
#[cfg(test)]
pub(crate) fn contains_complete_bipartite_naive(g: &Graph, a: usize, b: usize) -> bool {
    let n = g.n();
    assert!(n <= 16);
    for am in 0u32..1 << n {
        if am.count_ones() as usize != a {
            continue;
        }
        for bm in 0u32..1 << n {
            if bm.count_ones() as usize != b || am & bm != 0 {
                continue;
            }
            let ok = (0..n).filter(|&x| am >> x & 1 == 1).all(|x| (0..n).filter(|&y| bm >> y & 1 == 1).all(|y| g.has_edge(x, y)));
            if ok {
                return true;
            }
        }
    }
    false
}
