//! Per-graph invariant reports and seeded random sweeps.

use homwarm_core::chromatic::chromatic_number_with;
use homwarm_core::generators::{chung_lu, erdos_renyi};
use homwarm_core::homcomplex::{homological_connectivity, homology_of};
use homwarm_core::warmth::{find_complete_bipartite, warmth_with, Mode, WarmthOptions};
use homwarm_core::{Error, Graph};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::deadline::Deadline;
use crate::family::{power_law_weights, Provenance};
use crate::io::canonical_hash;
use crate::report::*;

/// Pairs `(a, b)` probed for complete bipartite subgraphs.
pub const KAB_PAIRS: [(usize, usize); 3] = [(2, 2), (2, 3), (3, 3)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOptions {
    /// `None`: exact when the stiff residue fits the exact engine, heuristic otherwise.
    pub mode: Option<Mode>,
    pub max_d: Option<usize>,
    pub fold: bool,
    /// Highest homology dimension; `None` uses the complex builder's default.
    pub max_dim: Option<usize>,
    /// Wall-clock budget for each of the warmth and colouring searches.
    pub budget_ms: Option<u64>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { mode: None, max_d: None, fold: true, max_dim: None, budget_ms: None }
    }
}

fn warmth_report(g: &Graph, opts: &CheckOptions) -> Result<WarmthReport, Error> {
    let run = |mode| {
        let w = WarmthOptions { mode, d_cap: opts.max_d, fold: opts.fold, ..WarmthOptions::default() };
        warmth_with(g, &w, Deadline::after_ms(opts.budget_ms))
    };
    let result = match opts.mode {
        Some(mode) => run(mode),
        None => match run(Mode::Exact) {
            Err(Error::Capacity { .. }) => run(Mode::Heuristic),
            other => other,
        },
    };
    match result {
        Ok(r) => Ok(WarmthReport::from_result(&r)),
        Err(e @ Error::Capacity { .. }) => Ok(WarmthReport::failed(Mode::Exact, 2, e.to_string())),
        Err(e) => Err(e),
    }
}

/// Computes every invariant of `g` and evaluates the consistency checks.
pub fn run_conjecture_check(g: &Graph, provenance: Provenance, opts: &CheckOptions) -> Result<InvariantReport, Error> {
    if g.is_edgeless() {
        return Err(Error::Edgeless);
    }
    let warmth = warmth_report(g, opts)?;
    let (complex, h) = homology_of(g, opts.max_dim)?;
    let conn = homological_connectivity(&h);
    let chi = chromatic_number_with(g, Deadline::after_ms(opts.budget_ms)).value;
    let kab: Vec<KabEntry> =
        KAB_PAIRS.iter().map(|&(a, b)| KabEntry { a, b, present: find_complete_bipartite(g, a, b).is_some() }).collect();
    let z = warmth.bounds;
    let chi_b: Bounds = chi.into();
    let checks = Checks {
        conjecture_consistent: check_conjecture(z, conn),
        h1_consistent: check_h1(z, &h),
        kab_free_consistent: check_kab(z, &kab),
        warmth_le_chi: check_warmth_chi(z, chi_b),
        conn_le_chi: check_conn_chi(conn, chi_b),
    };
    Ok(InvariantReport {
        schema_version: SCHEMA_VERSION,
        graph_id: canonical_hash(g),
        provenance,
        vertices: g.n(),
        edges: g.edge_count(),
        has_loops: g.has_loops(),
        warmth,
        homology: HomologyReport::new(&h, complex.f_vector()),
        connectivity: conn.into(),
        chromatic: chi.into(),
        kab,
        checks,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum RandomModel {
    Gnp { p: f64 },
    /// Power-law expected degrees with mean `avg` and exponent `beta`.
    ChungLu { avg: f64, beta: f64 },
}

impl RandomModel {
    pub fn sample(&self, n: usize, seed: u64) -> Result<(Graph, Provenance), Error> {
        let (g, generator, params) = match *self {
            RandomModel::Gnp { p } => (erdos_renyi(n, p, seed)?, "gnp", format!("{n},{p}")),
            RandomModel::ChungLu { avg, beta } => {
                (chung_lu(&power_law_weights(n, avg, beta)?, seed)?, "chung-lu", format!("{n},{avg},{beta}"))
            }
        };
        Ok((g, Provenance::Generator { generator: generator.into(), params, seed: Some(seed) }))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub model: RandomModel,
    pub ns: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub check: CheckOptions,
    /// Worker threads; `None` uses rayon's global pool.
    pub threads: Option<usize>,
}

/// Seed of trial `t` at size `n`; splitmix64 finalisers over the inputs.
pub fn trial_seed(seed: u64, n: usize, t: usize) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
    mix(mix(mix(seed) ^ n as u64) ^ t as u64)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    /// Absent when the sample had no edges.
    pub report: Option<InvariantReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stat {
    pub count: usize,
    pub mean: Option<f64>,
    pub min: Option<f64>,
    pub max: Option<f64>,
}

impl Stat {
    fn of(xs: &[f64]) -> Stat {
        let fold = |f: fn(f64, f64) -> f64| xs.iter().copied().reduce(f);
        Stat {
            count: xs.len(),
            mean: (!xs.is_empty()).then(|| xs.iter().sum::<f64>() / xs.len() as f64),
            min: fold(f64::min),
            max: fold(f64::max),
        }
    }
}

/// Per-`n` summary. `zeta` uses exact values and lower bounds of intervals;
/// `zeta_inexact` counts the latter. `hconn` reads `>=k` as `k` and skips
/// acyclic complexes, counted in `hconn_infinite`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub n: usize,
    pub trials: usize,
    pub edgeless: usize,
    pub zeta: Stat,
    pub zeta_inexact: usize,
    pub zeta_infinite: usize,
    pub hconn: Stat,
    pub hconn_infinite: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub model: RandomModel,
    pub seed: u64,
    pub trials: Vec<TrialRecord>,
    pub aggregates: Vec<Aggregate>,
}

fn aggregate(n: usize, records: &[&TrialRecord]) -> Aggregate {
    let reports: Vec<&InvariantReport> = records.iter().filter_map(|r| r.report.as_ref()).collect();
    let finite: Vec<&Bounds> = reports.iter().map(|r| &r.warmth.bounds).filter(|b| !b.infinite).collect();
    let zetas: Vec<f64> = finite.iter().map(|b| b.lower as f64).collect();
    let hconns: Vec<f64> = reports.iter().filter_map(|r| r.connectivity.k).map(|k| k as f64).collect();
    Aggregate {
        n,
        trials: records.len(),
        edgeless: records.len() - reports.len(),
        zeta: Stat::of(&zetas),
        zeta_inexact: finite.iter().filter(|b| b.exact().is_none()).count(),
        zeta_infinite: reports.len() - finite.len(),
        hconn: Stat::of(&hconns),
        hconn_infinite: reports.iter().filter(|r| r.connectivity.k.is_none()).count(),
        violations: reports.iter().filter(|r| r.checks.any_violation()).count(),
    }
}

/// Runs `trials` samples per size. Trials are independent and seeded by
/// [`trial_seed`], so the output does not depend on the thread count.
pub fn run_random_sweep(cfg: &SweepConfig) -> Result<SweepReport, Error> {
    let jobs: Vec<(usize, usize)> = cfg.ns.iter().flat_map(|&n| (0..cfg.trials).map(move |t| (n, t))).collect();
    let run_one = |&(n, t): &(usize, usize)| -> Result<TrialRecord, Error> {
        let seed = trial_seed(cfg.seed, n, t);
        let (g, prov) = cfg.model.sample(n, seed)?;
        let report = match run_conjecture_check(&g, prov, &cfg.check) {
            Ok(r) => Some(r),
            Err(Error::Edgeless) => None,
            Err(e) => return Err(e),
        };
        Ok(TrialRecord { n, trial: t, seed, report })
    };
    let run_all = || jobs.par_iter().map(run_one).collect::<Result<Vec<_>, _>>();
    let trials = match cfg.threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::Input(e.to_string()))?
            .install(run_all)?,
        None => run_all()?,
    };
    let aggregates = cfg
        .ns
        .iter()
        .map(|&n| aggregate(n, &trials.iter().filter(|r| r.n == n).collect::<Vec<_>>()))
        .collect();
    Ok(SweepReport { schema_version: SCHEMA_VERSION, model: cfg.model, seed: cfg.seed, trials, aggregates })
}

impl SweepReport {
    /// Per-trial rows under [`CSV_HEADER`]; edgeless samples are skipped.
    pub fn trials_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER).unwrap();
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(w.into_inner().unwrap());
        for t in &self.trials {
            if let Some(r) = &t.report {
                w.serialize(CsvRow::new(t.n, t.trial, t.seed, r)).unwrap();
            }
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    /// One row per `n` under [`AGGREGATE_HEADER`].
    pub fn aggregates_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(AGGREGATE_HEADER).unwrap();
        let opt = |x: Option<f64>| x.map_or(String::new(), |v| format!("{v:.4}"));
        for a in &self.aggregates {
            w.write_record([
                a.n.to_string(),
                a.trials.to_string(),
                a.edgeless.to_string(),
                opt(a.zeta.mean),
                opt(a.zeta.min),
                opt(a.zeta.max),
                a.zeta_inexact.to_string(),
                a.zeta_infinite.to_string(),
                opt(a.hconn.mean),
                opt(a.hconn.min),
                opt(a.hconn.max),
                a.hconn_infinite.to_string(),
                a.violations.to_string(),
            ])
            .unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

pub const AGGREGATE_HEADER: [&str; 13] = [
    "n",
    "trials",
    "edgeless",
    "zeta_mean",
    "zeta_min",
    "zeta_max",
    "zeta_inexact",
    "zeta_infinite",
    "hconn_mean",
    "hconn_min",
    "hconn_max",
    "hconn_infinite",
    "violations",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::generate;

    fn report(spec: &str) -> InvariantReport {
        let g = generate(spec, 0).unwrap();
        run_conjecture_check(&g.graph, g.provenance, &CheckOptions::default()).unwrap()
    }

    #[test]
    fn grotzsch_report() {
        let r = report("grotzsch");
        assert_eq!(r.warmth.value, "3");
        assert_eq!(r.connectivity.value, "1");
        assert!(r.connectivity.caveat);
        assert_eq!(r.chromatic.value, "4");
        assert_eq!(r.checks.conjecture_consistent.status, Check::ConsistentWithCaveat);
        assert_eq!(r.checks.h1_consistent.status, Check::NotApplicable);
        assert_eq!(r.checks.warmth_le_chi.status, Check::Consistent);
        assert_eq!(r.checks.conn_le_chi.status, Check::Consistent);
    }

    #[test]
    fn kneser_6_2_report() {
        let r = report("kneser:6,2");
        assert_eq!((r.warmth.value.as_str(), r.connectivity.value.as_str()), ("3", "1"));
        assert!(!r.checks.any_violation());
    }

    #[test]
    fn odd_cycle_report() {
        let r = report("cycle:7");
        assert_eq!(r.homology.betti, vec![1, 1]);
        assert_eq!(r.checks.h1_consistent.status, Check::Consistent);
        assert_eq!(r.checks.kab_free_consistent.status, Check::Consistent);
        assert_eq!(r.checks.conjecture_consistent.status, Check::Consistent);
    }

    #[test]
    fn dismantlable_report() {
        let r = report("looped-cycle:3");
        assert_eq!(r.warmth.value, "inf");
        assert_eq!(r.checks.conjecture_consistent.status, Check::Consistent);
        assert_eq!(r.checks.kab_free_consistent.status, Check::NotApplicable);
        assert_eq!(r.checks.warmth_le_chi.status, Check::NotApplicable);
    }

    #[test]
    fn large_graphs_fall_back_to_heuristic() {
        let r = report("toroidal:2,5");
        assert_eq!(r.warmth.mode, "heuristic");
        assert_eq!(r.warmth.value, "3");
        let g = generate("toroidal:2,5", 0).unwrap();
        let forced = CheckOptions { mode: Some(Mode::Exact), fold: true, ..Default::default() };
        let r = run_conjecture_check(&g.graph, g.provenance, &forced).unwrap();
        assert!(r.warmth.error.is_some());
        assert_eq!(r.checks.h1_consistent.status, Check::Inconclusive);
    }

    #[test]
    fn edgeless_is_an_error() {
        let g = Graph::empty(3).unwrap();
        let prov = Provenance::Generator { generator: "empty".into(), params: "3".into(), seed: None };
        assert_eq!(run_conjecture_check(&g, prov, &CheckOptions::default()), Err(Error::Edgeless));
    }

    #[test]
    fn sweep_is_deterministic_across_thread_counts() {
        let mut cfg = SweepConfig {
            model: RandomModel::Gnp { p: 0.5 },
            ns: vec![6, 8],
            trials: 5,
            seed: 11,
            check: CheckOptions::default(),
            threads: Some(1),
        };
        let a = run_random_sweep(&cfg).unwrap();
        cfg.threads = Some(3);
        let b = run_random_sweep(&cfg).unwrap();
        assert_eq!(a.trials_csv(), b.trials_csv());
        assert_eq!(a.aggregates_csv(), b.aggregates_csv());
        assert_eq!(a.trials.len(), 10);
        assert!(a.trials_csv().starts_with(&CSV_HEADER.join(",")));
        cfg.seed = 12;
        assert_ne!(run_random_sweep(&cfg).unwrap().trials_csv(), a.trials_csv());
    }

    #[test]
    fn chung_lu_sweep_runs() {
        let cfg = SweepConfig {
            model: RandomModel::ChungLu { avg: 4.0, beta: 2.5 },
            ns: vec![10],
            trials: 3,
            seed: 1,
            check: CheckOptions::default(),
            threads: None,
        };
        let r = run_random_sweep(&cfg).unwrap();
        assert_eq!(r.aggregates[0].trials, 3);
    }

    #[test]
    fn trial_seeds_differ() {
        let seeds: std::collections::BTreeSet<u64> =
            (0..3).flat_map(|n| (0..50).map(move |t| trial_seed(0, n, t))).collect();
        assert_eq!(seeds.len(), 150);
    }
}
