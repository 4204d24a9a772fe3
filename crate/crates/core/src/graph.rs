//! Finite simple graphs with optional loops.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::{input_err, Error, Result};

/// Largest vertex count accepted by any constructor.
pub const MAX_VERTICES: usize = 1024;

/// A finite undirected graph on `0..n` without multi-edges. Loops are stored
/// on the diagonal: `v` is looped iff `v ∈ N(v)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(input_err!("a graph needs at least one vertex"));
        }
        if n > MAX_VERTICES {
            return Err(input_err!("{n} vertices exceeds the limit of {MAX_VERTICES}"));
        }
        Ok(Graph { n, adj: vec![VertexSet::new(); n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighbor sets, checking symmetry and range.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        let g = Graph::empty(n).map(|_| Graph { n, adj })?;
        for u in 0..n {
            for v in g.adj[u].iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if !g.adj[v].contains(u) {
                    return Err(input_err!("adjacency not symmetric at ({u}, {v})"));
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn is_looped(&self, v: usize) -> bool {
        self.adj[v].contains(v)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|v| self.is_looped(v))
    }

    /// `N(v)`; contains `v` itself iff `v` is looped.
    pub fn neighborhood(&self, v: usize) -> Result<&VertexSet> {
        self.check(v)?;
        Ok(&self.adj[v])
    }

    /// Unchecked neighbor set for internal hot paths.
    #[inline]
    pub fn nbrs(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// `N(A) = ∪_{v∈A} N(v)`; `N(∅) = ∅`.
    pub fn set_neighborhood(&self, a: &VertexSet) -> Result<VertexSet> {
        if a.bound() > self.n {
            return Err(Error::VertexOutOfRange { vertex: a.bound() - 1, n: self.n });
        }
        Ok(self.nbhd(a))
    }

    pub(crate) fn nbhd(&self, a: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in a.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// `∩_{v∈A} N(v)`, with the empty intersection read as `V`.
    pub fn common_neighborhood(&self, a: &VertexSet) -> VertexSet {
        let mut it = a.iter();
        let Some(first) = it.next() else { return self.vertices() };
        let mut out = self.adj[first].clone();
        for v in it {
            out.intersect_with(&self.adj[v]);
            if out.is_empty() {
                break;
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u <= v`, loops included, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v >= u).map(move |v| (u, v)))
    }

    /// Number of edges, each loop counted once.
    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(VertexSet::is_empty)
    }

    /// Vertex sets of the connected components, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::singleton(s);
            let mut frontier = VertexSet::singleton(s);
            while !frontier.is_empty() {
                let next = self.nbhd(&frontier).difference(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Per-component 2-colourings, or `None` when some component has an odd
    /// closed walk (a loop counts as one).
    pub fn bipartition(&self) -> Option<Vec<(VertexSet, VertexSet)>> {
        let mut colour = vec![u8::MAX; self.n];
        let mut parts = Vec::new();
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            let (mut p0, mut p1) = (VertexSet::new(), VertexSet::new());
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if colour[u] == 0 {
                    p0.insert(u);
                } else {
                    p1.insert(u);
                }
                for w in self.adj[u].iter() {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return None;
                    }
                }
            }
            parts.push((p0, p1));
        }
        Some(parts)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Length of a shortest cycle; a loop has length 1. `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        self.shortest_cycle().map(|c| c.len())
    }

    /// Vertices of some shortest cycle in traversal order.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        if let Some(v) = (0..self.n).find(|&v| self.is_looped(v)) {
            return Some(vec![v]);
        }
        let mut best: Option<(usize, usize, usize, usize)> = None; // (len, root, u, w)
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for r in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[r] = 0;
            let mut queue = VecDeque::from([r]);
            while let Some(u) = queue.pop_front() {
                if let Some((len, ..)) = best {
                    if 2 * dist[u] >= len {
                        break;
                    }
                }
                for w in self.adj[u].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.map_or(true, |b| len < b.0) {
                            best = Some((len, r, u, w));
                        }
                    }
                }
            }
        }
        let (_, r, u, w) = best?;
        // Re-run the search from the winning root to recover both tree paths.
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[r] = 0;
        let mut queue = VecDeque::from([r]);
        while let Some(x) = queue.pop_front() {
            for y in self.adj[x].iter() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let path_to = |mut x: usize| {
            let mut p = vec![x];
            while x != r {
                x = parent[x];
                p.push(x);
            }
            p.reverse();
            p
        };
        let mut cycle = path_to(u);
        let mut back = path_to(w);
        back.remove(0);
        back.reverse();
        cycle.extend(back);
        Some(cycle)
    }

    /// Subgraph induced on `keep` (in the given order), relabelled `0..keep.len()`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            self.check(v)?;
            index[v] = i;
        }
        let mut g = Graph::empty(keep.len())?;
        for (i, &v) in keep.iter().enumerate() {
            for w in self.adj[v].iter() {
                if index[w] != usize::MAX {
                    g.adj[i].insert(index[w]);
                }
            }
        }
        Ok(g)
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n + other.n, edges.collect::<Vec<_>>())
    }

    /// Categorical (tensor) product; vertex `(g, h)` is `g * other.n() + h`.
    pub fn categorical_product(&self, other: &Graph) -> Result<Graph> {
        let m = other.n;
        let mut g = Graph::empty(self.n * m)?;
        for (a, b) in self.edges() {
            for (c, d) in other.edges() {
                g.add_edge(a * m + c, b * m + d)?;
                g.add_edge(a * m + d, b * m + c)?;
            }
        }
        Ok(g)
    }

    /// The same graph with every vertex looped.
    pub fn with_all_loops(&self) -> Graph {
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v].insert(v);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn neighborhoods() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.neighborhood(0).unwrap().to_vec(), vec![1, 2, 3]);
        assert!(matches!(k4.neighborhood(4), Err(Error::VertexOutOfRange { vertex: 4, n: 4 })));

        let c6 = cycle(6).with_all_loops();
        assert_eq!(c6.neighborhood(2).unwrap().to_vec(), vec![1, 2, 3]);

        let iso = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(iso.neighborhood(2).unwrap().is_empty());
    }

    #[test]
    fn set_neighborhood_examples() {
        let c5 = cycle(5);
        let a: VertexSet = [0, 2].into_iter().collect();
        assert_eq!(c5.set_neighborhood(&a).unwrap().to_vec(), vec![1, 3, 4]);
        assert!(c5.set_neighborhood(&VertexSet::new()).unwrap().is_empty());
        let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let p1: VertexSet = [0, 1].into_iter().collect();
        assert_eq!(k23.set_neighborhood(&p1).unwrap().to_vec(), vec![2, 3, 4]);
        assert!(c5.set_neighborhood(&VertexSet::singleton(9)).is_err());
    }

    #[test]
    fn bipartite_examples() {
        let k33 = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        assert!(k33.is_bipartite());
        assert!(!cycle(5).is_bipartite());
        let loop1 = Graph::from_edges(1, [(0, 0)]).unwrap();
        assert!(!loop1.is_bipartite());
        let parts = cycle(6).bipartition().unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0.to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(5).girth(), Some(5));
        let tree = Graph::from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(tree.girth(), None);
        assert_eq!(Graph::from_edges(2, [(0, 1), (1, 1)]).unwrap().girth(), Some(1));
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.girth(), Some(3));
        let c = cycle(7).shortest_cycle().unwrap();
        assert_eq!(c.len(), 7);
        for i in 0..7 {
            assert!(cycle(7).has_edge(c[i], c[(i + 1) % 7]));
        }
    }

    #[test]
    fn edges_and_counts() {
        let g = cycle(6).with_all_loops();
        assert_eq!(g.edge_count(), 12);
        assert!(g.has_loops());
        assert_eq!(cycle(4).components().len(), 1);
        let two = cycle(3).disjoint_union(&cycle(3)).unwrap();
        assert_eq!(two.components().len(), 2);
        assert!(Graph::empty(0).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c5 = cycle(5);
        let p = c5.induced_subgraph(&[4, 0, 1]).unwrap();
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
