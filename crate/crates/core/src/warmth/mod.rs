//! Warmth through d-stable families.

mod cover;
mod exact;
mod family;
mod forcing;
mod heuristic;
mod local;

use alloc::vec;

pub use exact::EXACT_HARD_LIMIT;
pub use family::{Search, StableFamily};
pub use forcing::{two_stable_witness_search, ForcingOutcome, ForcingReport};
pub use local::{find_complete_bipartite, generated_by_at_most, minimal_witness_size};

use crate::bitset::VertexSet;
use crate::budget::{Budget, StepBudget, Unlimited};
use crate::chromatic::{chromatic_number_with, ChromaticNumber};
use crate::error::{input_err, Error, Result};
use crate::folding::{stiff_reduction, StiffReduction};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Full powerset universe; bounded by [`SearchConfig::exact_cap`].
    Exact,
    /// Restricted universe; finds families but cannot refute them.
    Heuristic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest vertex count for exact mode.
    pub exact_cap: usize,
    /// Largest candidate universe in heuristic mode.
    pub universe_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { exact_cap: 20, universe_cap: 4000 }
    }
}

/// Budgeted search for a d-stable family.
pub fn d_stable_family_search(g: &Graph, d: usize, mode: Mode, config: &SearchConfig, budget: impl Budget) -> Result<Search> {
    if d == 0 {
        return Err(input_err!("d must be at least 1"));
    }
    if g.n() == 1 {
        // No nonempty proper subsets.
        return Ok(Search::Absent);
    }
    match mode {
        Mode::Exact => {
            let cap = config.exact_cap.min(EXACT_HARD_LIMIT);
            if g.n() > cap {
                return Err(Error::Capacity { n: g.n(), cap });
            }
            Ok(exact::search(g, d, budget))
        }
        Mode::Heuristic => Ok(heuristic::search(g, d, config.universe_cap, budget)),
    }
}

/// A d-stable family if one exists (exact mode) or one was found (heuristic).
pub fn d_stable_family_exists(g: &Graph, d: usize, mode: Mode) -> Result<Option<StableFamily>> {
    Ok(d_stable_family_search(g, d, mode, &SearchConfig::default(), Unlimited)?.found())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WarmthValue {
    Exact(usize),
    Infinite,
    /// `lo ≤ ζ ≤ hi`; `hi` is `None` when no upper bound is known.
    Interval { lo: usize, hi: Option<usize> },
}

impl WarmthValue {
    pub fn exact(self) -> Option<usize> {
        match self {
            WarmthValue::Exact(z) => Some(z),
            _ => None,
        }
    }

    /// Best upper bound, `None` for `∞` or unbounded intervals.
    pub fn upper(self) -> Option<usize> {
        match self {
            WarmthValue::Exact(z) => Some(z),
            WarmthValue::Interval { hi, .. } => hi,
            WarmthValue::Infinite => None,
        }
    }
}

impl core::fmt::Display for WarmthValue {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            WarmthValue::Exact(z) => write!(f, "{z}"),
            WarmthValue::Infinite => write!(f, "inf"),
            WarmthValue::Interval { lo, hi: Some(hi) } => write!(f, "[{lo},{hi}]"),
            WarmthValue::Interval { lo, hi: None } => write!(f, "[{lo},inf]"),
        }
    }
}

/// Why `ζ` is at least the reported lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerBound {
    /// Any graph with an edge has `ζ ≥ 2`.
    HasEdge,
    /// Connected and not bipartite, so no 1-stable family: `ζ ≥ 3`.
    NotBipartite,
    /// Exact search refuted every d-stable family for `d ≤ refuted`.
    Exhaustive { refuted: usize },
    /// Folds down to a single looped vertex.
    Dismantlable,
}

/// Where the upper bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpperBound {
    /// The attached stable family.
    Family,
    /// `ζ ≤ χ`.
    Chromatic,
    Unknown,
    Dismantlable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WarmthResult {
    pub value: WarmthValue,
    pub mode: Mode,
    pub lower: LowerBound,
    pub upper: UpperBound,
    /// Certificate for the upper bound, on the vertices of [`Self::residue`]
    /// when folding was applied and on the input graph otherwise.
    pub family: Option<StableFamily>,
    /// Stiff residue the search ran on, if folding was applied.
    pub residue: Option<StiffReduction>,
    /// True when the search stopped on the budget.
    pub out_of_budget: bool,
}

impl WarmthResult {
    /// The graph the certificate refers to.
    pub fn certificate_graph<'a>(&'a self, g: &'a Graph) -> &'a Graph {
        self.residue.as_ref().map_or(g, |r| &r.graph)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WarmthOptions {
    pub mode: Mode,
    /// Largest d tried; default `χ - 1` when `χ` is found within
    /// `chromatic_steps`, else the vertex count.
    pub d_cap: Option<usize>,
    /// Search on the stiff residue.
    pub fold: bool,
    pub config: SearchConfig,
    pub chromatic_steps: u64,
}

impl Default for WarmthOptions {
    fn default() -> Self {
        WarmthOptions { mode: Mode::Exact, d_cap: None, fold: true, config: SearchConfig::default(), chromatic_steps: 2_000_000 }
    }
}

impl WarmthOptions {
    pub fn with_mode(mode: Mode) -> Self {
        WarmthOptions { mode, ..Default::default() }
    }
}

/// The 1-stable family of a bipartite or disconnected graph.
fn two_family(g: &Graph) -> StableFamily {
    let all = g.vertices();
    if !g.is_connected() {
        let comp = g.components().into_iter().find(|c| c.iter().any(|v| !g.nbrs(v).is_empty())).unwrap();
        return StableFamily { d: 1, members: vec![comp], witnesses: vec![vec![0]] };
    }
    let (p1, p2) = g.bipartition().unwrap().pop().unwrap();
    debug_assert_eq!(&p1 | &p2, all);
    StableFamily { d: 1, members: vec![p1, p2], witnesses: vec![vec![1], vec![0]] }
}

/// Singletons along a shortest cycle; 2-stable when the girth is at least 5.
fn girth_family(g: &Graph) -> StableFamily {
    let cyc = g.shortest_cycle().unwrap();
    let len = cyc.len();
    let members = cyc.iter().map(|&v| VertexSet::singleton(v)).collect();
    let witnesses = (0..len).map(|i| vec![(i + len - 1) % len, (i + 1) % len]).collect();
    StableFamily { d: 2, members, witnesses }
}

/// `ζ(g)` with the default budget-free search.
pub fn warmth(g: &Graph, options: &WarmthOptions) -> Result<WarmthResult> {
    warmth_with(g, options, Unlimited)
}

pub fn warmth_with(g: &Graph, options: &WarmthOptions, mut budget: impl Budget) -> Result<WarmthResult> {
    if g.is_edgeless() {
        return Err(Error::Edgeless);
    }
    let base = |value, lower, upper, family| WarmthResult {
        value,
        mode: options.mode,
        lower,
        upper,
        family,
        residue: None,
        out_of_budget: false,
    };
    if !g.is_connected() || g.is_bipartite() {
        return Ok(base(WarmthValue::Exact(2), LowerBound::HasEdge, UpperBound::Family, Some(two_family(g))));
    }
    let reduction = stiff_reduction(g);
    if reduction.graph.n() == 1 && reduction.graph.is_looped(0) {
        let mut r = base(WarmthValue::Infinite, LowerBound::Dismantlable, UpperBound::Dismantlable, None);
        r.residue = Some(reduction);
        return Ok(r);
    }
    let (h, residue) = if options.fold && !reduction.folds.is_empty() {
        (reduction.graph.clone(), Some(reduction))
    } else {
        (g.clone(), None)
    };
    let h = &h;
    let lo = 3;
    let mut result = base(WarmthValue::Interval { lo, hi: None }, LowerBound::NotBipartite, UpperBound::Unknown, None);
    result.residue = residue;
    if !h.has_loops() && h.girth().is_some_and(|girth| girth >= 5) {
        result.value = WarmthValue::Exact(3);
        result.upper = UpperBound::Family;
        result.family = Some(girth_family(h));
        return Ok(result);
    }
    if options.mode == Mode::Exact && h.n() > options.config.exact_cap.min(EXACT_HARD_LIMIT) {
        return Err(Error::Capacity { n: h.n(), cap: options.config.exact_cap.min(EXACT_HARD_LIMIT) });
    }
    let chi = || match chromatic_number_with(h, StepBudget::new(options.chromatic_steps)).value {
        ChromaticNumber::Exact(k) => Some(k),
        _ => None,
    };
    let mut chi_cache: Option<Option<usize>> = None;
    let mut d = lo - 1;
    loop {
        let cap = match options.d_cap {
            Some(c) => c,
            None if d <= 2 => usize::MAX,
            None => chi_cache.get_or_insert_with(chi).map_or(h.n(), |k| k.saturating_sub(1).max(2)),
        };
        if d > cap {
            break;
        }
        match d_stable_family_search(h, d, options.mode, &options.config, &mut budget)? {
            Search::Found(f) => {
                result.upper = UpperBound::Family;
                result.family = Some(f);
                result.value = if options.mode == Mode::Exact || lo == d + 1 {
                    if options.mode == Mode::Exact && d + 1 > lo {
                        result.lower = LowerBound::Exhaustive { refuted: d - 1 };
                    }
                    WarmthValue::Exact(d + 1)
                } else {
                    WarmthValue::Interval { lo, hi: Some(d + 1) }
                };
                return Ok(result);
            }
            Search::Absent => {}
            Search::OutOfBudget => {
                result.out_of_budget = true;
                break;
            }
        }
        d += 1;
    }
    let refuted = d - 1;
    let lo = if options.mode == Mode::Exact && refuted >= 2 {
        result.lower = LowerBound::Exhaustive { refuted };
        refuted + 2
    } else {
        lo
    };
    let hi = chi_cache.unwrap_or_else(chi);
    if hi.is_some() {
        result.upper = UpperBound::Chromatic;
    }
    result.value = match hi {
        Some(hi) if hi == lo => WarmthValue::Exact(hi),
        _ => WarmthValue::Interval { lo, hi },
    };
    Ok(result)
}
