//! Constructors for every graph family used by the experiments.

use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::bitset::VertexSet;
use crate::error::{input_err, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(input_err!("complete graph needs n >= 1"));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// The cycle `C_m`, `m >= 3`.
pub fn cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(input_err!("cycle needs m >= 3, got {m}"));
    }
    Graph::from_edges(m, (0..m).map(|i| (i, (i + 1) % m)))
}

/// The cycle of the given length with a loop at every vertex. Lengths 1 and 2
/// give a looped vertex and a looped edge, which the twisted toroidal
/// recursion uses for `m = 1`.
pub fn looped_cycle(length: usize) -> Result<Graph> {
    if length == 0 {
        return Err(input_err!("looped cycle needs length >= 1"));
    }
    let edges = (0..length).flat_map(|i| [(i, i), (i, (i + 1) % length)]);
    Graph::from_edges(length, edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(input_err!("complete bipartite graph needs a, b >= 1"));
    }
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Path on `k` vertices.
pub fn path(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(input_err!("path needs k >= 1"));
    }
    Graph::from_edges(k, (1..k).map(|i| (i - 1, i)))
}

/// k-subsets of `0..n` as bitmasks, in lexicographic order of their sorted
/// member lists.
pub fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, left: usize, acc: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..=n - left {
            rec(i + 1, n, left - 1, acc | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out
}

/// Kneser graph `K(n, k)`: k-subsets of `0..n`, adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k < 1 || n < 2 * k {
        return Err(input_err!("kneser graph needs n >= 2k >= 2, got n={n}, k={k}"));
    }
    if n > 63 {
        return Err(input_err!("kneser graph ground set limited to 63 elements"));
    }
    let verts = k_subsets(n, k);
    if verts.len() > MAX_VERTICES {
        return Err(input_err!("kneser({n},{k}) has {} vertices", verts.len()));
    }
    let mut edges = Vec::new();
    for (i, &a) in verts.iter().enumerate() {
        for (j, &b) in verts.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(verts.len(), edges)
}

/// Mycielskian: vertices `V`, copies `V' = n..2n` and apex `z = 2n`.
pub fn mycielski(g: &Graph) -> Result<Graph> {
    if g.has_loops() {
        return Err(input_err!("mycielski construction is undefined for looped graphs"));
    }
    let n = g.n();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        edges.push((u, v));
        edges.push((n + u, v));
        edges.push((n + v, u));
    }
    for v in 0..n {
        edges.push((n + v, 2 * n));
    }
    Graph::from_edges(2 * n + 1, edges)
}

/// An involutive automorphism, the only group action the twisted products use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z2Action {
    perm: Vec<usize>,
}

impl Z2Action {
    /// Validates that `perm` is an involution and an automorphism of `g`.
    pub fn new(g: &Graph, perm: Vec<usize>) -> Result<Z2Action> {
        let n = g.n();
        if perm.len() != n {
            return Err(input_err!("action has {} entries for {n} vertices", perm.len()));
        }
        for (v, &p) in perm.iter().enumerate() {
            if p >= n || perm[p] != v {
                return Err(input_err!("action is not an involution at vertex {v}"));
            }
        }
        for u in 0..n {
            for v in 0..n {
                if g.has_edge(u, v) != g.has_edge(perm[u], perm[v]) {
                    return Err(input_err!("action is not an automorphism at ({u}, {v})"));
                }
            }
        }
        Ok(Z2Action { perm })
    }

    pub fn trivial(g: &Graph) -> Z2Action {
        Z2Action { perm: (0..g.n()).collect() }
    }

    /// The swap on `K_2`.
    pub fn swap() -> Z2Action {
        Z2Action { perm: vec![1, 0] }
    }

    /// `i ↦ i + length/2` on a cycle of even length.
    pub fn antipodal(length: usize) -> Result<Z2Action> {
        if length == 0 || length % 2 != 0 {
            return Err(input_err!("antipodal action needs an even cycle length"));
        }
        let m = length / 2;
        Ok(Z2Action { perm: (0..length).map(|i| (i + m) % length).collect() })
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.perm[v]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }
}

/// `G ×_{Z2} H` together with the quotient map from `V(G) × V(H)`.
#[derive(Debug, Clone)]
pub struct TwistedProduct {
    pub graph: Graph,
    /// `quotient[g * |H| + h]` is the vertex of the class of `(g, h)`.
    pub quotient: Vec<usize>,
    /// Lexicographically least representative of each class.
    pub representatives: Vec<(usize, usize)>,
    /// `[g, h] ↦ [γg, h]`, the action the recursion hands to the next factor.
    pub induced_action: Z2Action,
}

/// Twisted product: the categorical product modulo `(γg, h) ~ (g, γh)`.
pub fn twisted_product(g: &Graph, act_g: &Z2Action, h: &Graph, act_h: &Z2Action) -> Result<TwistedProduct> {
    // Re-validate: the actions may have been built for another graph.
    let act_g = Z2Action::new(g, act_g.perm.clone())?;
    let act_h = Z2Action::new(h, act_h.perm.clone())?;
    let (ng, nh) = (g.n(), h.n());
    if ng * nh > 4 * MAX_VERTICES {
        return Err(input_err!("twisted product of {ng} x {nh} vertices is too large"));
    }
    let mut quotient = vec![usize::MAX; ng * nh];
    let mut representatives = Vec::new();
    for a in 0..ng {
        for b in 0..nh {
            if quotient[a * nh + b] != usize::MAX {
                continue;
            }
            // (a, b) ~ (γa, γb); scanning in lexicographic order visits the least first.
            let idx = representatives.len();
            representatives.push((a, b));
            quotient[a * nh + b] = idx;
            quotient[act_g.apply(a) * nh + act_h.apply(b)] = idx;
        }
    }
    let mut graph = Graph::empty(representatives.len())?;
    for (a, a2) in g.edges() {
        for (b, b2) in h.edges() {
            graph.add_edge(quotient[a * nh + b], quotient[a2 * nh + b2])?;
            graph.add_edge(quotient[a * nh + b2], quotient[a2 * nh + b])?;
        }
    }
    let perm = representatives.iter().map(|&(a, b)| quotient[act_g.apply(a) * nh + b]).collect();
    let induced_action = Z2Action::new(&graph, perm)?;
    Ok(TwistedProduct { graph, quotient, representatives, induced_action })
}

/// Index of the class `[ε, a_1..a_k]` (coordinates in `Z/2m`) in
/// [`twisted_toroidal`]: each `a_i ≥ m` is shifted down by `m`, flipping `ε`.
pub fn toroidal_index(m: usize, eps: usize, coords: &[usize]) -> usize {
    let mut e = eps & 1;
    let mut idx = 0;
    let mut scale = 1;
    for &a in coords {
        let mut a = a % (2 * m);
        if a >= m {
            a -= m;
            e ^= 1;
        }
        idx += a * scale;
        scale *= m;
    }
    e * scale + idx
}

/// Twisted toroidal graph `T_{k,m}` on `2·m^k` vertices, built from the
/// explicit coordinates. Vertex `ε·m^k + Σ a_i m^{i-1}` is `[ε, a]` with all
/// `a_i < m`.
pub fn twisted_toroidal(k: usize, m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(input_err!("twisted toroidal graph needs m >= 1"));
    }
    let count = m.checked_pow(k as u32).and_then(|x| x.checked_mul(2));
    let Some(nv) = count.filter(|&c| c <= MAX_VERTICES) else {
        return Err(input_err!("T_{{{k},{m}}} exceeds {MAX_VERTICES} vertices"));
    };
    let half = nv / 2;
    let mut g = Graph::empty(nv)?;
    let mut coords = vec![0usize; k];
    let mut shifted = vec![0usize; k];
    for v in 0..nv {
        let eps = v / half;
        let mut rest = v % half;
        for c in coords.iter_mut() {
            *c = rest % m;
            rest /= m;
        }
        // α ∈ {-1, 0, 1}^k, enumerated as base-3 digits.
        for code in 0..3usize.pow(k as u32) {
            let mut c3 = code;
            for (s, &a) in shifted.iter_mut().zip(coords.iter()) {
                *s = a + 2 * m + (c3 % 3) - 1;
                c3 /= 3;
            }
            g.add_edge(v, toroidal_index(m, 1 - eps, &shifted))?;
        }
    }
    Ok(g)
}

/// `[ε, a] ↦ [-ε, a]` on [`twisted_toroidal`]`(k, m)`.
pub fn toroidal_action(k: usize, m: usize) -> Result<Z2Action> {
    let g = twisted_toroidal(k, m)?;
    let half = g.n() / 2;
    let perm = (0..g.n()).map(|v| (v + half) % g.n()).collect();
    Z2Action::new(&g, perm)
}

/// `T_{k,m}` from the recursive definition `T_{k+1,m} = T_{k,m} ×_{Z2} C°_{2m}`.
pub fn twisted_toroidal_recursive(k: usize, m: usize) -> Result<TwistedProduct> {
    let ring = looped_cycle(2 * m)?;
    let antipodal = Z2Action::antipodal(2 * m)?;
    let k2 = complete(2)?;
    let mut current = TwistedProduct {
        quotient: vec![0, 1],
        representatives: vec![(0, 0), (1, 0)],
        induced_action: Z2Action::swap(),
        graph: k2,
    };
    for _ in 0..k {
        current = twisted_product(&current.graph, &current.induced_action, &ring, &antipodal)?;
    }
    Ok(current)
}

/// ChaCha8 seeded through `rand_core`'s `seed_from_u64`, so a seed produces
/// the same stream on every platform.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform in `[0, 1)` from the top 53 bits of one 64-bit draw.
#[inline]
pub fn unit_f64(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// `G(n, p)`: each pair `i < j` (lexicographic order) is drawn once.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(input_err!("edge probability {p} outside [0, 1]"));
    }
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if unit_f64(&mut rng) < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Expected degrees for the Chung–Lu model.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeSequence {
    w: Vec<f64>,
}

impl DegreeSequence {
    /// Requires `0 ≤ w_i ≤ n-1` and `w_i² ≤ Σ w` for every `i`.
    pub fn new(w: Vec<f64>) -> Result<DegreeSequence> {
        let n = w.len();
        if n == 0 {
            return Err(input_err!("degree sequence is empty"));
        }
        let total: f64 = w.iter().sum();
        for (i, &x) in w.iter().enumerate() {
            if !(x >= 0.0 && x <= (n - 1) as f64) {
                return Err(input_err!("w[{i}] = {x} outside [0, {}]", n - 1));
            }
            if x * x > total * (1.0 + 1e-12) {
                return Err(input_err!("w[{i}]^2 = {} exceeds the total {total}", x * x));
            }
        }
        Ok(DegreeSequence { w })
    }

    pub fn weights(&self) -> &[f64] {
        &self.w
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }
}

/// Chung–Lu graph: edge `ij` with probability `w_i w_j / Σ w`.
pub fn chung_lu(w: &DegreeSequence, seed: u64) -> Result<Graph> {
    let n = w.len();
    let total: f64 = w.w.iter().sum();
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = if total > 0.0 { (w.w[i] * w.w[j] / total).min(1.0) } else { 0.0 };
            if unit_f64(&mut rng) < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Relabels a graph by a permutation: vertex `v` becomes `perm[v]`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Result<Graph> {
    if perm.len() != g.n() || perm.iter().copied().collect::<VertexSet>().len() != g.n() {
        return Err(input_err!("relabelling is not a permutation"));
    }
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v])).collect::<Vec<_>>())
}
