//! Fixed point of the pruning operator over a restricted universe, for graphs
//! too large for the exact engine. A family found here is genuine; failure to
//! find one proves nothing.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::cover::{cover_within, maximal, Cover};
use super::family::{witness_closure, Search};
use crate::bitset::VertexSet;
use crate::budget::Budget;
use crate::graph::Graph;

/// Singletons, `N(v)` and `N(N(v))`, then closure under `N(·)` and pairwise
/// intersection until nothing new appears or `cap` sets are collected.
pub(crate) fn universe(g: &Graph, cap: usize) -> Vec<VertexSet> {
    let all = g.vertices();
    let ok = |s: &VertexSet| !s.is_empty() && *s != all;
    let mut seen: BTreeSet<VertexSet> = BTreeSet::new();
    let mut list: Vec<VertexSet> = Vec::new();
    let push = |s: VertexSet, seen: &mut BTreeSet<VertexSet>, list: &mut Vec<VertexSet>| {
        if list.len() < cap && ok(&s) && seen.insert(s.clone()) {
            list.push(s);
        }
    };
    for v in 0..g.n() {
        push(VertexSet::singleton(v), &mut seen, &mut list);
    }
    for v in 0..g.n() {
        let nv = g.nbrs(v).clone();
        let nnv = g.nbhd(&nv);
        push(nv, &mut seen, &mut list);
        push(nnv, &mut seen, &mut list);
    }
    let mut start = 0;
    while start < list.len() && list.len() < cap {
        let end = list.len();
        for i in start..end {
            let ni = g.nbhd(&list[i]);
            push(ni, &mut seen, &mut list);
            for j in 0..i.min(end) {
                let x = list[i].intersection(&list[j]);
                push(x, &mut seen, &mut list);
            }
            if list.len() >= cap {
                break;
            }
        }
        start = end;
    }
    list
}

pub(crate) fn search(g: &Graph, d: usize, cap: usize, mut budget: impl Budget) -> Search {
    let all = g.vertices();
    let members = universe(g, cap);
    let nbs: Vec<VertexSet> = members.iter().map(|a| g.nbhd(a)).collect();
    let mut alive: Vec<bool> = alloc::vec![true; members.len()];
    loop {
        // Distinct neighbourhoods of survivors; deletions commit after the pass.
        let distinct: Vec<&VertexSet> = {
            let set: BTreeSet<&VertexSet> = (0..members.len()).filter(|&i| alive[i]).map(|i| &nbs[i]).collect();
            set.into_iter().collect()
        };
        let mut doomed = Vec::new();
        for (i, a) in members.iter().enumerate() {
            if !alive[i] {
                continue;
            }
            let holes: Vec<VertexSet> = distinct.iter().filter(|nb| a.is_subset(nb)).map(|nb| all.difference(nb)).collect();
            let mut meet = all.clone();
            for h in &holes {
                meet.difference_with(h);
            }
            let survives = meet == *a && {
                let keep: Vec<VertexSet> = maximal(&holes).into_iter().map(|k| holes[k].clone()).collect();
                match cover_within(&all.difference(a), &keep, d, &mut budget) {
                    Cover::Found(_) => true,
                    Cover::Impossible => false,
                    Cover::OutOfBudget => return Search::OutOfBudget,
                }
            };
            if !survives {
                doomed.push(i);
            }
        }
        if doomed.is_empty() {
            break;
        }
        for i in doomed {
            alive[i] = false;
        }
        if budget.exhausted() {
            return Search::OutOfBudget;
        }
    }
    let Some(seed) = (0..members.len()).filter(|&i| alive[i]).min_by_key(|&i| (members[i].len(), members[i].clone())) else {
        return Search::Absent;
    };
    let survivors: Vec<usize> = (0..members.len()).filter(|&i| alive[i]).collect();
    let candidates = |a: &VertexSet| {
        let mut out: Vec<(VertexSet, VertexSet)> = Vec::new();
        let mut seen = BTreeSet::new();
        for &i in &survivors {
            if a.is_subset(&nbs[i]) && seen.insert(&nbs[i]) {
                out.push((nbs[i].clone(), members[i].clone()));
            }
        }
        out
    };
    match witness_closure(g, d, members[seed].clone(), candidates, &mut budget) {
        Some(f) => Search::Found(f),
        None => Search::OutOfBudget,
    }
}
