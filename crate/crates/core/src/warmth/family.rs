use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::cover::{cover_within, maximal, Cover};
use crate::bitset::VertexSet;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A d-stable family with its witnesses. `witnesses[i]` lists `d` member
/// indices (repetition allowed) whose neighbourhoods intersect to
/// `members[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableFamily {
    pub d: usize,
    pub members: Vec<VertexSet>,
    pub witnesses: Vec<Vec<usize>>,
}

impl StableFamily {
    /// Checks every invariant against `g`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let fail = |msg: alloc::string::String| Err(Error::Structure(msg));
        let all = g.vertices();
        if self.d == 0 {
            return fail(format!("d must be at least 1"));
        }
        if self.members.is_empty() || self.members.len() != self.witnesses.len() {
            return fail(format!("family is empty or witness table is misaligned"));
        }
        for (i, a) in self.members.iter().enumerate() {
            if a.is_empty() || !a.is_subset(&all) || *a == all {
                return fail(format!("member {i} is not a nonempty proper subset"));
            }
            let w = &self.witnesses[i];
            if w.len() != self.d || w.iter().any(|&j| j >= self.members.len()) {
                return fail(format!("member {i} has a malformed witness list"));
            }
            let mut meet = all.clone();
            for &j in w {
                meet.intersect_with(&g.nbhd(&self.members[j]));
            }
            if meet != *a {
                return fail(format!("witnesses of member {i} intersect to {meet:?}, not {a:?}"));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The same family viewed as `d2`-stable (`d2 ≥ d`), padding witnesses by
    /// repetition.
    pub fn padded(&self, d2: usize) -> StableFamily {
        assert!(d2 >= self.d);
        let witnesses = self
            .witnesses
            .iter()
            .map(|w| {
                let mut w = w.clone();
                w.resize(d2, w[w.len() - 1]);
                w
            })
            .collect();
        StableFamily { d: d2, members: self.members.clone(), witnesses }
    }
}

/// Outcome of a budgeted family search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(StableFamily),
    Absent,
    OutOfBudget,
}

impl Search {
    pub fn found(self) -> Option<StableFamily> {
        match self {
            Search::Found(f) => Some(f),
            _ => None,
        }
    }
}

/// Grows a family from `seed` by repeatedly adding witnesses. `candidates(A)`
/// returns `(N(B), B)` for surviving members `B` with `N(B) ⊇ A`; any set
/// closed under this step is itself d-stable.
pub(crate) fn witness_closure<F, B>(g: &Graph, d: usize, seed: VertexSet, mut candidates: F, mut budget: B) -> Option<StableFamily>
where
    F: FnMut(&VertexSet) -> Vec<(VertexSet, VertexSet)>,
    B: Budget,
{
    let all = g.vertices();
    let mut members = alloc::vec![seed.clone()];
    let mut index = BTreeMap::new();
    index.insert(seed, 0usize);
    let mut witnesses = Vec::new();
    let mut next = 0;
    while next < members.len() {
        let a = members[next].clone();
        next += 1;
        let cands = candidates(&a);
        let holes: Vec<VertexSet> = cands.iter().map(|(nb, _)| all.difference(nb)).collect();
        let keep = maximal(&holes);
        let kept_holes: Vec<VertexSet> = keep.iter().map(|&i| holes[i].clone()).collect();
        let chosen = match cover_within(&all.difference(&a), &kept_holes, d, &mut budget) {
            Cover::Found(c) => c,
            _ => return None,
        };
        let mut w = Vec::with_capacity(d);
        for c in chosen {
            let b = cands[keep[c]].1.clone();
            let len = members.len();
            let j = *index.entry(b.clone()).or_insert(len);
            if j == len {
                members.push(b);
            }
            w.push(j);
        }
        let last = *w.last()?;
        w.resize(d, last);
        witnesses.push(w);
    }
    Some(StableFamily { d, members, witnesses })
}
