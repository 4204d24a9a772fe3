//! Invariant reports and the consistency checks run on them.
//!
//! JSON output is a serialised [`InvariantReport`] (or a list of them) and
//! carries [`SCHEMA_VERSION`]. Every invariant records how it was obtained,
//! so no number appears without its mode.

use homwarm_core::chromatic::ChromaticNumber;
use homwarm_core::homcomplex::{Connectivity, ConnectivityEstimate, HomologySummary};
use homwarm_core::warmth::{LowerBound, Mode, UpperBound, WarmthResult, WarmthValue};
use serde::{Deserialize, Serialize};

use crate::family::Provenance;

/// Bumped whenever a field is renamed, removed or changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Consistent,
    /// Holds for the homological value; the true connectivity was not
    /// confirmed because `π_1` is not computed.
    ConsistentWithCaveat,
    Violated,
    /// Bounds too loose, or a budget ran out.
    Inconclusive,
    /// Hypothesis not met.
    NotApplicable,
}

impl Check {
    pub fn is_violation(self) -> bool {
        self == Check::Violated
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub status: Check,
    pub note: String,
}

fn rec(status: Check, note: impl Into<String>) -> CheckRecord {
    CheckRecord { status, note: note.into() }
}

/// A numeric invariant with lower and upper bounds; `upper = None` means no
/// finite upper bound is known, `infinite` that the value is `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub lower: usize,
    pub upper: Option<usize>,
    pub infinite: bool,
}

impl Bounds {
    pub fn exact(&self) -> Option<usize> {
        self.upper.filter(|&u| u == self.lower && !self.infinite)
    }

    fn display(&self) -> String {
        match (self.infinite, self.exact(), self.upper) {
            (true, _, _) => "inf".into(),
            (_, Some(z), _) => z.to_string(),
            (_, None, Some(hi)) => format!("[{},{hi}]", self.lower),
            (_, None, None) => format!("[{},inf]", self.lower),
        }
    }
}

impl From<WarmthValue> for Bounds {
    fn from(v: WarmthValue) -> Bounds {
        match v {
            WarmthValue::Exact(z) => Bounds { lower: z, upper: Some(z), infinite: false },
            WarmthValue::Infinite => Bounds { lower: usize::MAX, upper: None, infinite: true },
            WarmthValue::Interval { lo, hi } => Bounds { lower: lo, upper: hi, infinite: false },
        }
    }
}

impl From<ChromaticNumber> for Bounds {
    fn from(v: ChromaticNumber) -> Bounds {
        match v {
            ChromaticNumber::Exact(k) => Bounds { lower: k, upper: Some(k), infinite: false },
            ChromaticNumber::Interval { lo, hi } => Bounds { lower: lo, upper: Some(hi), infinite: false },
            ChromaticNumber::Infinite => Bounds { lower: usize::MAX, upper: None, infinite: true },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableFamilyDto {
    pub d: usize,
    pub members: Vec<Vec<usize>>,
    pub witnesses: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WarmthReport {
    /// `"3"`, `"[3,5]"`, `"[3,inf]"` or `"inf"`.
    pub value: String,
    pub bounds: Bounds,
    /// `exact` or `heuristic`: the search mode used.
    pub mode: String,
    pub lower_reason: String,
    pub upper_reason: String,
    pub out_of_budget: bool,
    /// Vertices left after folding, if folding ran.
    pub residue_vertices: Option<usize>,
    pub folds: usize,
    /// Upper-bound certificate, on the residue's vertex numbering when folded.
    pub certificate: Option<StableFamilyDto>,
    /// Set when the search could not run at all.
    pub error: Option<String>,
}

impl WarmthReport {
    pub fn from_result(r: &WarmthResult) -> WarmthReport {
        let lower_reason = match r.lower {
            LowerBound::HasEdge => "has an edge".to_string(),
            LowerBound::NotBipartite => "connected and not bipartite".to_string(),
            LowerBound::Exhaustive { refuted } => format!("no d-stable family for d <= {refuted}"),
            LowerBound::Dismantlable => "dismantlable".to_string(),
        };
        let upper_reason = match r.upper {
            UpperBound::Family => "stable family",
            UpperBound::Chromatic => "chromatic number",
            UpperBound::Unknown => "none",
            UpperBound::Dismantlable => "dismantlable",
        };
        WarmthReport {
            value: r.value.to_string(),
            bounds: r.value.into(),
            mode: mode_name(r.mode).into(),
            lower_reason,
            upper_reason: upper_reason.into(),
            out_of_budget: r.out_of_budget,
            residue_vertices: r.residue.as_ref().map(|s| s.graph.n()),
            folds: r.residue.as_ref().map_or(0, |s| s.folds.len()),
            certificate: r.family.as_ref().map(|f| StableFamilyDto {
                d: f.d,
                members: f.members.iter().map(|m| m.iter().collect()).collect(),
                witnesses: f.witnesses.clone(),
            }),
            error: None,
        }
    }

    /// Placeholder when warmth could not be computed; bounds are the trivial ones.
    pub fn failed(mode: Mode, lower: usize, error: String) -> WarmthReport {
        WarmthReport {
            value: format!("[{lower},inf]"),
            bounds: Bounds { lower, upper: None, infinite: false },
            mode: mode_name(mode).into(),
            lower_reason: "trivial".into(),
            upper_reason: "none".into(),
            out_of_budget: false,
            residue_vertices: None,
            folds: 0,
            certificate: None,
            error: Some(error),
        }
    }
}

pub fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Exact => "exact",
        Mode::Heuristic => "heuristic",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub betti: Vec<usize>,
    /// Invariant factors per dimension, as decimal strings.
    pub torsion: Vec<Vec<String>>,
    pub max_dim: usize,
    pub top_dim: usize,
    pub truncated: bool,
    pub f_vector: Vec<usize>,
}

impl HomologyReport {
    pub fn new(h: &HomologySummary, f_vector: Vec<usize>) -> HomologyReport {
        HomologyReport {
            betti: h.betti.clone(),
            torsion: h.torsion.iter().map(|t| t.iter().map(|x| x.to_string()).collect()).collect(),
            max_dim: h.max_dim,
            top_dim: h.top_dim,
            truncated: h.truncated,
            f_vector,
        }
    }

    pub fn torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    /// `"1"`, `">=6"` or `"inf"`.
    pub value: String,
    /// `exact`, `at_least` or `infinite`.
    pub kind: String,
    pub k: Option<isize>,
    /// The complex is connected with `H_1 = 0`; simple connectivity is not
    /// verified, so the value is an upper estimate of the true connectivity.
    pub caveat: bool,
}

impl From<ConnectivityEstimate> for ConnectivityReport {
    fn from(c: ConnectivityEstimate) -> Self {
        let (kind, k) = match c.value {
            Connectivity::Exact(k) => ("exact", Some(k)),
            Connectivity::AtLeast(k) => ("at_least", Some(k)),
            Connectivity::Infinite => ("infinite", None),
        };
        ConnectivityReport { value: c.value.to_string(), kind: kind.into(), k, caveat: c.caveat }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticReport {
    pub value: String,
    pub bounds: Bounds,
    /// `exact`, `interval` (budget ran out) or `infinite` (loops).
    pub status: String,
}

impl From<ChromaticNumber> for ChromaticReport {
    fn from(c: ChromaticNumber) -> Self {
        let b: Bounds = c.into();
        let status = match c {
            ChromaticNumber::Exact(_) => "exact",
            ChromaticNumber::Interval { .. } => "interval",
            ChromaticNumber::Infinite => "infinite",
        };
        ChromaticReport { value: b.display(), bounds: b, status: status.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KabEntry {
    pub a: usize,
    pub b: usize,
    pub present: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    /// `ζ ≤ conn(hom(K2,G)) + 3`.
    pub conjecture_consistent: CheckRecord,
    /// `b_1 ≥ 1 ⇒ ζ ≤ 3`.
    pub h1_consistent: CheckRecord,
    /// No `K_{a,b}` subgraph `⇒ ζ ≤ a+b-1`.
    pub kab_free_consistent: CheckRecord,
    /// `ζ ≤ χ`.
    pub warmth_le_chi: CheckRecord,
    /// `conn + 3 ≤ χ`.
    pub conn_le_chi: CheckRecord,
}

impl Checks {
    pub fn all(&self) -> [(&'static str, &CheckRecord); 5] {
        [
            ("conjecture", &self.conjecture_consistent),
            ("h1", &self.h1_consistent),
            ("kab_free", &self.kab_free_consistent),
            ("warmth_le_chi", &self.warmth_le_chi),
            ("conn_le_chi", &self.conn_le_chi),
        ]
    }

    pub fn any_violation(&self) -> bool {
        self.all().iter().any(|(_, c)| c.status.is_violation())
    }

    pub fn any_inconclusive(&self) -> bool {
        self.all().iter().any(|(_, c)| c.status == Check::Inconclusive)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub schema_version: u32,
    /// SHA-256 of the sorted edge list.
    pub graph_id: String,
    pub provenance: Provenance,
    pub vertices: usize,
    pub edges: usize,
    pub has_loops: bool,
    pub warmth: WarmthReport,
    pub homology: HomologyReport,
    pub connectivity: ConnectivityReport,
    pub chromatic: ChromaticReport,
    pub kab: Vec<KabEntry>,
    pub checks: Checks,
}

/// `ζ ≤ conn + 3`. Since the homological value can only overstate the true
/// connectivity, a failure against it is a genuine failure, while a pass
/// under the caveat is labelled as such.
pub fn check_conjecture(z: Bounds, c: ConnectivityEstimate) -> CheckRecord {
    use Connectivity::*;
    let pass = |note: String| if c.caveat { rec(Check::ConsistentWithCaveat, note + "; pi_1 not checked") } else { rec(Check::Consistent, note) };
    match (z.infinite, c.value) {
        (true, Infinite) => rec(Check::Consistent, "dismantlable, so the complex is contractible"),
        (true, AtLeast(k)) => rec(Check::Inconclusive, format!("zeta = inf, homology vanishes through {k} but was truncated")),
        (true, Exact(k)) => rec(Check::Violated, format!("zeta = inf but hconn = {k}")),
        (false, Infinite) => pass("homologically acyclic".into()),
        (false, Exact(k)) => {
            let bound = k + 3;
            match z.upper {
                Some(hi) if hi as isize <= bound => pass(format!("zeta <= {hi} <= {bound}")),
                _ if z.lower as isize > bound => rec(Check::Violated, format!("zeta >= {} > hconn + 3 = {bound}", z.lower)),
                _ => rec(Check::Inconclusive, format!("zeta in {} straddles {bound}", z.display())),
            }
        }
        (false, AtLeast(k)) => match z.upper {
            Some(hi) if hi as isize <= k + 3 => pass(format!("zeta <= {hi} <= {}", k + 3)),
            _ => rec(Check::Inconclusive, format!("hconn >= {k} only; zeta = {}", z.display())),
        },
    }
}

/// `b_1 ≥ 1 ⇒ ζ ≤ 3`.
pub fn check_h1(z: Bounds, h: &HomologySummary) -> CheckRecord {
    match h.betti.get(1) {
        None => rec(Check::Inconclusive, "H_1 not computed"),
        Some(0) => rec(Check::NotApplicable, "b1 = 0"),
        Some(&b1) => compare_le(z, 3, &format!("b1 = {b1}")),
    }
}

fn compare_le(z: Bounds, bound: usize, why: &str) -> CheckRecord {
    if z.infinite || z.lower > bound {
        return rec(Check::Violated, format!("{why}, yet zeta = {} > {bound}", z.display()));
    }
    match z.upper {
        Some(hi) if hi <= bound => rec(Check::Consistent, format!("{why}; zeta = {} <= {bound}", z.display())),
        _ => rec(Check::Inconclusive, format!("{why}; zeta = {} not known to be <= {bound}", z.display())),
    }
}

/// No `K_{a,b}` for some listed pair `⇒ ζ ≤ a+b-1`. Dismantlable graphs are
/// excluded: a looped triangle has no `K_{2,2}` yet `ζ = ∞`.
pub fn check_kab(z: Bounds, kab: &[KabEntry]) -> CheckRecord {
    if z.infinite {
        return rec(Check::NotApplicable, "dismantlable");
    }
    match kab.iter().filter(|e| !e.present).min_by_key(|e| e.a + e.b) {
        None => rec(Check::NotApplicable, "every listed K_{a,b} is present"),
        Some(e) => compare_le(z, e.a + e.b - 1, &format!("no K_{{{},{}}}", e.a, e.b)),
    }
}

/// `ζ ≤ χ`.
pub fn check_warmth_chi(z: Bounds, chi: Bounds) -> CheckRecord {
    if chi.infinite {
        return rec(Check::NotApplicable, "loops: no proper colouring");
    }
    let hi = chi.upper.unwrap();
    if z.infinite || z.lower > hi {
        return rec(Check::Violated, format!("zeta = {} > chi <= {hi}", z.display()));
    }
    match z.upper {
        Some(zh) if zh <= chi.lower => rec(Check::Consistent, format!("zeta <= {zh} <= chi")),
        _ => rec(Check::Inconclusive, format!("zeta = {}, chi = {}", z.display(), chi.display())),
    }
}

/// `conn + 3 ≤ χ`, judged only where the homological value is trustworthy.
pub fn check_conn_chi(c: ConnectivityEstimate, chi: Bounds) -> CheckRecord {
    if chi.infinite {
        return rec(Check::NotApplicable, "loops: no proper colouring");
    }
    let hi = chi.upper.unwrap();
    let k = match c.value {
        Connectivity::Exact(k) => k,
        Connectivity::AtLeast(k) if k + 3 > hi as isize => k,
        _ if c.caveat => return rec(Check::Inconclusive, format!("hconn = {} under caveat", c.value)),
        _ => return rec(Check::Inconclusive, format!("hconn = {}", c.value)),
    };
    if k + 3 <= chi.lower as isize {
        // True connectivity never exceeds the homological one.
        rec(Check::Consistent, format!("hconn + 3 = {} <= chi", k + 3))
    } else if k + 3 > hi as isize {
        if c.caveat {
            rec(Check::Inconclusive, format!("hconn + 3 = {} > chi, but pi_1 not checked", k + 3))
        } else {
            rec(Check::Violated, format!("hconn + 3 = {} > chi = {hi}", k + 3))
        }
    } else {
        rec(Check::Inconclusive, format!("hconn + 3 = {} inside chi = {}", k + 3, chi.display()))
    }
}

/// Fixed CSV header for per-graph rows. Order never changes within a schema version.
pub const CSV_HEADER: [&str; 22] = [
    "schema_version",
    "n",
    "trial",
    "seed",
    "graph_id",
    "provenance",
    "vertices",
    "edges",
    "zeta",
    "zeta_lower",
    "zeta_upper",
    "zeta_mode",
    "hconn",
    "hconn_kind",
    "hconn_caveat",
    "betti",
    "torsion_free",
    "chi",
    "conjecture",
    "h1",
    "kab_free",
    "warmth_le_chi",
];

/// One CSV row, in [`CSV_HEADER`] order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CsvRow {
    pub schema_version: u32,
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    pub graph_id: String,
    pub provenance: String,
    pub vertices: usize,
    pub edges: usize,
    pub zeta: String,
    pub zeta_lower: Option<usize>,
    pub zeta_upper: Option<usize>,
    pub zeta_mode: String,
    pub hconn: String,
    pub hconn_kind: String,
    pub hconn_caveat: bool,
    /// Semicolon-separated.
    pub betti: String,
    pub torsion_free: bool,
    pub chi: String,
    pub conjecture: Check,
    pub h1: Check,
    pub kab_free: Check,
    pub warmth_le_chi: Check,
}

impl CsvRow {
    pub fn new(n: usize, trial: usize, seed: u64, r: &InvariantReport) -> CsvRow {
        let b = r.warmth.bounds;
        CsvRow {
            schema_version: SCHEMA_VERSION,
            n,
            trial,
            seed,
            graph_id: r.graph_id.clone(),
            provenance: r.provenance.to_string(),
            vertices: r.vertices,
            edges: r.edges,
            zeta: r.warmth.value.clone(),
            zeta_lower: (!b.infinite).then_some(b.lower),
            zeta_upper: b.upper,
            zeta_mode: r.warmth.mode.clone(),
            hconn: r.connectivity.value.clone(),
            hconn_kind: r.connectivity.kind.clone(),
            hconn_caveat: r.connectivity.caveat,
            betti: r.homology.betti.iter().map(usize::to_string).collect::<Vec<_>>().join(";"),
            torsion_free: r.homology.torsion_free(),
            chi: r.chromatic.value.clone(),
            conjecture: r.checks.conjecture_consistent.status,
            h1: r.checks.h1_consistent.status,
            kab_free: r.checks.kab_free_consistent.status,
            warmth_le_chi: r.checks.warmth_le_chi.status,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(z: usize) -> Bounds {
        WarmthValue::Exact(z).into()
    }

    fn conn(value: Connectivity, caveat: bool) -> ConnectivityEstimate {
        ConnectivityEstimate { value, caveat }
    }

    #[test]
    fn conjecture_cases() {
        use Connectivity::*;
        assert_eq!(check_conjecture(exact(3), conn(Exact(1), true)).status, Check::ConsistentWithCaveat);
        assert_eq!(check_conjecture(exact(3), conn(Exact(0), false)).status, Check::Consistent);
        assert_eq!(check_conjecture(exact(2), conn(Exact(-1), false)).status, Check::Consistent);
        // A failure against the homological value is a real failure.
        assert_eq!(check_conjecture(exact(5), conn(Exact(1), true)).status, Check::Violated);
        assert_eq!(check_conjecture(exact(5), conn(AtLeast(1), true)).status, Check::Inconclusive);
        let wide = WarmthValue::Interval { lo: 3, hi: Some(6) }.into();
        assert_eq!(check_conjecture(wide, conn(Exact(1), true)).status, Check::Inconclusive);
        assert_eq!(check_conjecture(WarmthValue::Infinite.into(), conn(Infinite, true)).status, Check::Consistent);
        assert_eq!(check_conjecture(exact(3), conn(Infinite, true)).status, Check::ConsistentWithCaveat);
    }

    #[test]
    fn kab_and_chi_cases() {
        let kab = [KabEntry { a: 2, b: 2, present: false }, KabEntry { a: 2, b: 3, present: false }];
        assert_eq!(check_kab(exact(3), &kab).status, Check::Consistent);
        assert_eq!(check_kab(exact(4), &kab).status, Check::Violated);
        assert_eq!(check_kab(WarmthValue::Infinite.into(), &kab).status, Check::NotApplicable);
        assert_eq!(check_kab(exact(4), &[KabEntry { a: 2, b: 2, present: true }]).status, Check::NotApplicable);
        let chi4: Bounds = ChromaticNumber::Exact(4).into();
        assert_eq!(check_warmth_chi(exact(3), chi4).status, Check::Consistent);
        assert_eq!(check_warmth_chi(exact(5), chi4).status, Check::Violated);
        assert_eq!(check_warmth_chi(exact(3), ChromaticNumber::Infinite.into()).status, Check::NotApplicable);
        assert_eq!(check_conn_chi(conn(Connectivity::Exact(1), true), chi4).status, Check::Consistent);
        assert_eq!(check_conn_chi(conn(Connectivity::Exact(2), true), chi4).status, Check::Inconclusive);
        assert_eq!(check_conn_chi(conn(Connectivity::Exact(2), false), chi4).status, Check::Violated);
        assert_eq!(check_conn_chi(conn(Connectivity::Infinite, true), chi4).status, Check::Inconclusive);
    }

    #[test]
    fn header_matches_row_fields() {
        let mut w = csv::Writer::from_writer(Vec::new());
        let row = CsvRow {
            schema_version: 1,
            n: 0,
            trial: 0,
            seed: 0,
            graph_id: String::new(),
            provenance: String::new(),
            vertices: 0,
            edges: 0,
            zeta: String::new(),
            zeta_lower: None,
            zeta_upper: None,
            zeta_mode: String::new(),
            hconn: String::new(),
            hconn_kind: String::new(),
            hconn_caveat: false,
            betti: String::new(),
            torsion_free: true,
            chi: String::new(),
            conjecture: Check::Consistent,
            h1: Check::NotApplicable,
            kab_free: Check::NotApplicable,
            warmth_le_chi: Check::Consistent,
        };
        w.serialize(&row).unwrap();
        let text = String::from_utf8(w.into_inner().unwrap()).unwrap();
        assert_eq!(text.lines().next().unwrap(), CSV_HEADER.join(","));
    }
}
