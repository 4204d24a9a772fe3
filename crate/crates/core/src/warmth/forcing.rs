//! Building a 2-stable family from a closed walk whose chain has infinite
//! order in `H_1(hom(K2, G))`.
//!
//! Vertices reached at a given phase of `γ` by closed walks whose chain is
//! homologous to a multiple of `c(γ)` are collected into the sets `A_i`, `B_i`.
//! Homology classes are compared through a random cocycle mod a large prime,
//! so a walk can be accepted by mistake with negligible probability. Nothing
//! unverified is returned: the family is checked for 2-stability at the end.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use rand_core::{RngCore, SeedableRng};

use super::family::StableFamily;
use crate::bitset::VertexSet;
use crate::error::{input_err, Result};
use crate::graph::Graph;
use crate::homcomplex::{boundary_matrix, build_hom_k2, class_rank, cycle_chain, Cell, CellComplex, EvenClosedWalk};

const P: u64 = (1 << 61) - 1;
/// Layer size above which a walk search is abandoned.
const STATE_CAP: usize = 200_000;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn addmod(a: u64, b: u64) -> u64 {
    (a + b) % P
}

fn submod(a: u64, b: u64) -> u64 {
    (a + P - b) % P
}

fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    r
}

fn signed(x: i64) -> u64 {
    if x >= 0 { x as u64 % P } else { submod(0, (-x) as u64 % P) }
}

/// Random element of the space of 1-cochains vanishing on boundaries of
/// 2-cells, mod `P`.
fn random_cocycle(c: &CellComplex, rng: &mut impl RngCore) -> Result<Vec<u64>> {
    let d2 = boundary_matrix(c, 2)?;
    let m = c.cells(1).len();
    // Echelon form of the 2-cell boundaries, keyed by leading column.
    let mut pivots: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
    for col in &d2.columns {
        let mut row: BTreeMap<usize, u64> = col.iter().map(|&(i, v)| (i, signed(v))).collect();
        while let Some((&lead, &val)) = row.iter().next() {
            match pivots.get(&lead) {
                Some(p) => {
                    // p is normalised to leading coefficient 1.
                    for &(j, pv) in p {
                        let e = row.entry(j).or_insert(0);
                        *e = submod(*e, mulmod(val, pv));
                        if *e == 0 {
                            row.remove(&j);
                        }
                    }
                }
                None => {
                    let inv = powmod(val, P - 2);
                    pivots.insert(lead, row.iter().map(|(&j, &v)| (j, mulmod(v, inv))).collect());
                    break;
                }
            }
        }
    }
    let mut x = vec![0u64; m];
    for (j, xj) in x.iter_mut().enumerate() {
        if !pivots.contains_key(&j) {
            *xj = rng.next_u64() % P;
        }
    }
    // Pivot rows only reach to the right of their lead, so solve right to left.
    for (&lead, row) in pivots.iter().rev() {
        let s = row.iter().skip(1).fold(0, |acc, &(j, v)| addmod(acc, mulmod(v, x[j])));
        x[lead] = submod(0, s);
    }
    Ok(x)
}

/// What the walk search produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForcingOutcome {
    /// A verified 2-stable family: `A_i` at even phases, `B_i` at odd ones.
    Verified(StableFamily),
    /// The bounded closure did not verify.
    Inconclusive(ForcingReport),
}

impl ForcingOutcome {
    pub fn family(&self) -> Option<&StableFamily> {
        match self {
            ForcingOutcome::Verified(f) => Some(f),
            ForcingOutcome::Inconclusive(_) => None,
        }
    }
}

/// The sets found when verification failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingReport {
    pub a: Vec<VertexSet>,
    pub b: Vec<VertexSet>,
    /// Some walk searches hit the state cap.
    pub truncated: bool,
}

struct Voltage<'a> {
    c: &'a CellComplex,
    f: &'a [u64],
}

impl Voltage<'_> {
    /// Contribution of the edge cell through `mid` at a phase of the given parity.
    fn triple(&self, prev: usize, mid: usize, next: usize, even: bool) -> u64 {
        if prev == next {
            return 0;
        }
        let pair: VertexSet = [prev, next].into_iter().collect();
        let single = VertexSet::singleton(mid);
        let cell = if even { Cell::new(single, pair) } else { Cell::new(pair, single) };
        let v = self.f[self.c.index_of(&cell).expect("walk edge cell")];
        if prev < next { v } else { submod(0, v) }
    }
}

type State = (usize, usize, usize, u64);

/// Closed walks of length `len` from `gamma[anchor]` whose voltage is
/// `target`, with phase `anchor + t` at step `t`. Adds every vertex on such a
/// walk to `phase_sets` and returns false if the state cap was hit.
fn force(g: &Graph, volt: &Voltage, gamma: &[usize], anchor: usize, len: usize, target: u64, phase_sets: &mut [VertexSet]) -> bool {
    let period = gamma.len();
    let v0 = gamma[anchor];
    let even = |t: usize| (anchor + t) % 2 == 0;
    // Layer t holds (cur, prev, first, voltage); the middle at step t is
    // charged when step t + 1 is chosen.
    let mut layers: Vec<BTreeSet<State>> = Vec::with_capacity(len + 1);
    layers.push(BTreeSet::new());
    let mut l1 = BTreeSet::new();
    for w in g.nbrs(v0).iter() {
        l1.insert((w, v0, w, 0));
    }
    layers.push(l1);
    for t in 1..len {
        let mut next = BTreeSet::new();
        for &(cur, prev, first, v) in &layers[t] {
            for w in g.nbrs(cur).iter() {
                next.insert((w, cur, first, addmod(v, volt.triple(prev, cur, w, even(t)))));
            }
        }
        if next.len() > STATE_CAP {
            return false;
        }
        layers.push(next);
    }
    // Co-reachable states, from the accepting end backwards.
    let mut alive: Vec<BTreeSet<State>> = vec![BTreeSet::new(); len + 1];
    for &s in &layers[len] {
        let (cur, prev, first, v) = s;
        if cur == v0 && addmod(v, volt.triple(prev, v0, first, even(0))) == target {
            alive[len].insert(s);
        }
    }
    for t in (1..len).rev() {
        let mut keep = BTreeSet::new();
        for &s in &layers[t] {
            let (cur, prev, first, v) = s;
            let live = g.nbrs(cur).iter().any(|w| alive[t + 1].contains(&(w, cur, first, addmod(v, volt.triple(prev, cur, w, even(t))))));
            if live {
                keep.insert(s);
            }
        }
        alive[t] = keep;
    }
    if alive[1].is_empty() {
        return true;
    }
    phase_sets[anchor % period].insert(v0);
    for (t, layer) in alive.iter().enumerate().skip(1) {
        for &(cur, ..) in layer {
            phase_sets[(anchor + t) % period].insert(cur);
        }
    }
    true
}

/// Builds `A_i, B_i` from the walks forced by `gamma` and verifies 2-stability.
/// `walk_cap` bounds the length of forcing walks (default six times the
/// length of `gamma`). Fails when `gamma` is not a closed even walk of `g` or
/// its chain has finite order.
pub fn two_stable_witness_search(g: &Graph, gamma: &EvenClosedWalk, walk_cap: Option<usize>) -> Result<ForcingOutcome> {
    let gamma = EvenClosedWalk::new(g, gamma.vertices().to_vec())?;
    let cx = build_hom_k2(g, Some(1))?;
    let chain = cycle_chain(&cx, &gamma)?;
    if class_rank(&cx, &[chain.clone()])? == 0 {
        return Err(input_err!("the chain of the walk has finite order in H1"));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_c0c1_c1e5);
    let (f, x) = loop {
        let f = random_cocycle(&cx, &mut rng)?;
        let x = chain.support().fold(0, |acc, (i, k)| addmod(acc, mulmod(f[i], signed(k))));
        if x != 0 {
            break (f, x);
        }
    };
    let volt = Voltage { c: &cx, f: &f };
    let w = gamma.vertices();
    let period = w.len();
    let n = period / 2;
    let cap = walk_cap.unwrap_or(6 * period);
    let mut phase_sets = vec![VertexSet::new(); period];
    for (t, &v) in w.iter().enumerate() {
        phase_sets[t].insert(v);
    }
    let mut truncated = false;
    for anchor in 0..period {
        for r in 1..=cap / period {
            let target = mulmod(x, r as u64 % P);
            truncated |= !force(g, &volt, w, anchor, r * period, target, &mut phase_sets);
        }
    }
    // Phase 2i is A_i, phase 2i - 1 is B_i.
    let a: Vec<VertexSet> = (0..n).map(|i| phase_sets[2 * i].clone()).collect();
    let b: Vec<VertexSet> = (0..n).map(|i| phase_sets[(2 * i + period - 1) % period].clone()).collect();
    match assemble(g, &a, &b) {
        Some(fam) => Ok(ForcingOutcome::Verified(fam)),
        None => Ok(ForcingOutcome::Inconclusive(ForcingReport { a, b, truncated })),
    }
}

fn assemble(g: &Graph, a: &[VertexSet], b: &[VertexSet]) -> Option<StableFamily> {
    let n = a.len();
    let all = g.vertices();
    if a.iter().chain(b).any(|s| s.is_empty() || *s == all) {
        return None;
    }
    for i in 0..n {
        let bi = g.nbhd(&a[(i + n - 1) % n]).intersection(&g.nbhd(&a[i]));
        let ai = g.nbhd(&b[i]).intersection(&g.nbhd(&b[(i + 1) % n]));
        if bi != b[i] || ai != a[i] {
            return None;
        }
    }
    let mut members: Vec<VertexSet> = Vec::new();
    let id = |s: &VertexSet, members: &mut Vec<VertexSet>| match members.iter().position(|m| m == s) {
        Some(k) => k,
        None => {
            members.push(s.clone());
            members.len() - 1
        }
    };
    let ia: Vec<usize> = a.iter().map(|s| id(s, &mut members)).collect();
    let ib: Vec<usize> = b.iter().map(|s| id(s, &mut members)).collect();
    let mut witnesses = vec![Vec::new(); members.len()];
    for i in 0..n {
        witnesses[ib[i]] = vec![ia[(i + n - 1) % n], ia[i]];
        witnesses[ia[i]] = vec![ib[i], ib[(i + 1) % n]];
    }
    let fam = StableFamily { d: 2, members, witnesses };
    fam.verify(g).ok()?;
    Some(fam)
}
