//! Set cover by branch and bound, the inner step of every stability test.

use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::budget::Budget;

/// Drops sets contained in another set of the list (keeping one copy of
/// duplicates). Returns indices into `sets`.
pub(crate) fn maximal(sets: &[VertexSet]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| core::cmp::Reverse(sets[i].len()));
    let mut kept: Vec<usize> = Vec::new();
    for i in order {
        if !kept.iter().any(|&j| sets[i].is_subset(&sets[j])) {
            kept.push(i);
        }
    }
    kept
}

struct Dfs<'a, B> {
    sets: &'a [VertexSet],
    chosen: Vec<usize>,
    budget: B,
    aborted: bool,
}

impl<B: Budget> Dfs<'_, B> {
    fn run(&mut self, rest: &VertexSet, left: usize) -> bool {
        if rest.is_empty() {
            return true;
        }
        if left == 0 || self.aborted {
            return false;
        }
        if self.budget.exhausted() {
            self.aborted = true;
            return false;
        }
        let widest = self.sets.iter().map(|s| s.intersection(rest).len()).max().unwrap_or(0);
        if widest == 0 || widest * left < rest.len() {
            return false;
        }
        // Branch on the element with the fewest covering sets.
        let mut pick = None;
        let mut fewest = usize::MAX;
        for e in rest.iter() {
            let c = self.sets.iter().filter(|s| s.contains(e)).count();
            if c < fewest {
                fewest = c;
                pick = Some(e);
                if c <= 1 {
                    break;
                }
            }
        }
        let e = pick.unwrap();
        if fewest == 0 {
            return false;
        }
        let mut options: Vec<(usize, usize)> = (0..self.sets.len())
            .filter(|&i| self.sets[i].contains(e))
            .map(|i| (self.sets[i].intersection(rest).len(), i))
            .collect();
        options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, i) in options {
            self.chosen.push(i);
            if self.run(&rest.difference(&self.sets[i]), left - 1) {
                return true;
            }
            self.chosen.pop();
            if self.aborted {
                return false;
            }
        }
        false
    }
}

/// Outcome of a bounded cover search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Cover {
    Found(Vec<usize>),
    Impossible,
    OutOfBudget,
}

/// Some cover of `target` by at most `limit` sets, as indices.
pub(crate) fn cover_within(target: &VertexSet, sets: &[VertexSet], limit: usize, budget: impl Budget) -> Cover {
    let mut dfs = Dfs { sets, chosen: Vec::new(), budget, aborted: false };
    if dfs.run(target, limit) {
        Cover::Found(dfs.chosen)
    } else if dfs.aborted {
        Cover::OutOfBudget
    } else {
        Cover::Impossible
    }
}

/// Greedy cover: repeatedly take the set covering most uncovered elements.
pub(crate) fn greedy_cover(target: &VertexSet, sets: &[VertexSet]) -> Option<Vec<usize>> {
    let mut rest = target.clone();
    let mut chosen = Vec::new();
    while !rest.is_empty() {
        let (best, gain) = (0..sets.len())
            .map(|i| (i, sets[i].intersection(&rest).len()))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))?;
        if gain == 0 {
            return None;
        }
        chosen.push(best);
        rest.difference_with(&sets[best]);
    }
    Some(chosen)
}

/// A minimum cover, by greedy upper bound and iterative deepening below it.
pub(crate) fn min_cover(target: &VertexSet, sets: &[VertexSet], mut budget: impl Budget) -> Option<Vec<usize>> {
    let mut best = greedy_cover(target, sets)?;
    let widest = sets.iter().map(|s| s.intersection(target).len()).max().unwrap_or(1).max(1);
    let lower = target.len().div_ceil(widest);
    for k in lower..best.len() {
        match cover_within(target, sets, k, &mut budget) {
            Cover::Found(c) => {
                best = c;
                break;
            }
            Cover::Impossible => {}
            Cover::OutOfBudget => break,
        }
    }
    Some(best)
}
