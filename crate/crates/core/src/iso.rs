//! Graph isomorphism by colour refinement and backtracking. Meant for the
//! small graphs the tests compare, not as a general canonical labelling.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Stable colour refinement of two graphs at once, so colours are comparable.
fn refine(g: &Graph, h: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let init = |x: &Graph, v: usize| (x.degree(v), x.is_looped(v));
    let mut keys: BTreeMap<(usize, bool), usize> = BTreeMap::new();
    for v in 0..n {
        let k = keys.len();
        keys.entry(init(g, v)).or_insert(k);
    }
    let mut cg: Vec<usize> = (0..n).map(|v| keys[&init(g, v)]).collect();
    let mut ch = Vec::with_capacity(n);
    for v in 0..n {
        ch.push(*keys.get(&init(h, v))?);
    }
    let mut classes = keys.len();
    loop {
        let sig = |x: &Graph, c: &[usize], v: usize| {
            let mut s: Vec<usize> = x.nbrs(v).iter().map(|u| c[u]).collect();
            s.sort_unstable();
            (c[v], s)
        };
        let mut table = BTreeMap::new();
        let mut ng = Vec::with_capacity(n);
        for v in 0..n {
            let k = table.len();
            ng.push(*table.entry(sig(g, &cg, v)).or_insert(k));
        }
        let mut nh = Vec::with_capacity(n);
        for v in 0..n {
            nh.push(*table.get(&sig(h, &ch, v))?);
        }
        let done = table.len() == classes;
        classes = table.len();
        cg = ng;
        ch = nh;
        if done {
            break;
        }
    }
    let mut count_g = vec![0usize; classes];
    let mut count_h = vec![0usize; classes];
    cg.iter().for_each(|&c| count_g[c] += 1);
    ch.iter().for_each(|&c| count_h[c] += 1);
    (count_g == count_h).then_some((cg, ch))
}

/// An isomorphism `g → h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (cg, ch) = refine(g, h)?;
    let n = g.n();
    // Next vertex: most neighbours already placed, then smallest colour class.
    let mut size = BTreeMap::new();
    cg.iter().for_each(|&c| *size.entry(c).or_insert(0usize) += 1);
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (core::cmp::Reverse(links[v]), size[&cg[v]], v))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for u in g.nbrs(v).iter() {
            links[u] += 1;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        i: usize,
        order: &[usize],
        g: &Graph,
        h: &Graph,
        cg: &[usize],
        ch: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&v) = order.get(i) else { return true };
        for w in 0..h.n() {
            if used[w] || ch[w] != cg[v] || g.is_looped(v) != h.is_looped(w) {
                continue;
            }
            let ok = order[..i].iter().all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
            if !ok {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(i + 1, order, g, h, cg, ch, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }
    extend(0, &order, g, h, &cg, &ch, &mut map, &mut used).then_some(map)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Whether `map` is an isomorphism `g → h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let n = g.n();
    if h.n() != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &w in map {
        if w >= n || seen[w] {
            return false;
        }
        seen[w] = true;
    }
    (0..n).all(|u| (0..n).all(|v| g.has_edge(u, v) == h.has_edge(map[u], map[v])))
}
