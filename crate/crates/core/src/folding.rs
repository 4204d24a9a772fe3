//! Folds, stiff reduction and dismantlability.

use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Folds applied in order, in the vertex labels of the original graph.
/// Step `(v, w)` deletes `v`, which had `N(v) ⊆ N(w)` at that moment.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FoldSequence {
    pub steps: Vec<(usize, usize)>,
}

impl FoldSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the sequence on `g`, checking the fold condition at every step.
    /// Returns the surviving vertices on success.
    pub fn replay(&self, g: &Graph) -> Option<Vec<usize>> {
        let mut alive = g.vertices();
        for &(v, w) in &self.steps {
            if v == w || !alive.contains(v) || !alive.contains(w) {
                return None;
            }
            if !(g.nbrs(v) & &alive).is_subset(g.nbrs(w)) {
                return None;
            }
            alive.remove(v);
        }
        Some(alive.to_vec())
    }
}

/// The stiff residue of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StiffReduction {
    pub graph: Graph,
    /// `kept[i]` is the original label of residue vertex `i`.
    pub kept: Vec<usize>,
    pub folds: FoldSequence,
}

fn first_fold(adj: &[VertexSet], alive: &VertexSet) -> Option<(usize, usize)> {
    for v in alive.iter() {
        for w in alive.iter() {
            if v != w && adj[v].is_subset(&adj[w]) {
                return Some((v, w));
            }
        }
    }
    None
}

/// A pair `(v, w)`, `v ≠ w`, with `N(v) ⊆ N(w)`: lowest `v` first, then
/// lowest `w`.
pub fn find_fold(g: &Graph) -> Option<(usize, usize)> {
    let adj: Vec<VertexSet> = (0..g.n()).map(|v| g.nbrs(v).clone()).collect();
    first_fold(&adj, &g.vertices())
}

/// Folds until no fold is available.
pub fn stiff_reduction(g: &Graph) -> StiffReduction {
    let mut adj: Vec<VertexSet> = (0..g.n()).map(|v| g.nbrs(v).clone()).collect();
    let mut alive = g.vertices();
    let mut steps = Vec::new();
    while let Some((v, w)) = first_fold(&adj, &alive) {
        steps.push((v, w));
        alive.remove(v);
        for u in g.nbrs(v).iter() {
            adj[u].remove(v);
        }
    }
    let kept = alive.to_vec();
    let graph = g.induced_subgraph(&kept).expect("residue keeps at least one vertex");
    StiffReduction { graph, kept, folds: FoldSequence { steps } }
}

/// Whether `g` folds down to a single looped vertex.
pub fn is_dismantlable(g: &Graph) -> bool {
    let r = stiff_reduction(g);
    r.graph.n() == 1 && r.graph.is_looped(0)
}

/// Whether no fold is available.
pub fn is_stiff(g: &Graph) -> bool {
    find_fold(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use alloc::vec;

    #[test]
    fn path_folds_end_onto_other_end() {
        let p3 = path(3).unwrap();
        assert_eq!(find_fold(&p3), Some((0, 2)));
        let r = stiff_reduction(&p3);
        assert_eq!(r.graph, complete(2).unwrap());
        assert_eq!(r.folds.replay(&p3), Some(r.kept.clone()));
    }

    #[test]
    fn stiff_graphs_are_unchanged() {
        for g in [cycle(5).unwrap(), complete(5).unwrap(), looped_cycle(6).unwrap()] {
            assert!(is_stiff(&g));
            let r = stiff_reduction(&g);
            assert_eq!(r.graph, g);
            assert!(r.folds.is_empty());
        }
    }

    #[test]
    fn dismantlable_examples() {
        assert!(is_dismantlable(&looped_cycle(1).unwrap()));
        assert!(is_dismantlable(&complete(5).unwrap().with_all_loops()));
        assert!(!is_dismantlable(&looped_cycle(6).unwrap()));
        assert!(!is_dismantlable(&complete(2).unwrap()));
        // a looped path folds onto one end
        assert!(is_dismantlable(&path(4).unwrap().with_all_loops()));
    }

    #[test]
    fn isolated_vertices_fold_away() {
        let g = Graph::from_edges(4, vec![(1, 2), (2, 3), (3, 1)]).unwrap();
        let r = stiff_reduction(&g);
        assert_eq!(r.folds.steps[0], (0, 1));
        assert_eq!(r.graph, complete(3).unwrap());
    }
}
