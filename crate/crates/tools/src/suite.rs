//! The twelve acceptance criteria as a runnable suite.
//!
//! Each criterion returns a one-line detail on success and the first
//! counterexample on failure. A criterion that finishes over its time limit
//! fails as well.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use homwarm_core::chromatic::chromatic_number;
use homwarm_core::folding::stiff_reduction;
use homwarm_core::generators::{complete, cycle, erdos_renyi, mycielski, rng_from_seed, twisted_toroidal};
use homwarm_core::homcomplex::{
    build_hom_k2, chain_boundary, cycle_chain, h1_free_rank, h1_span_check, homological_connectivity, homology_of,
    random_even_closed_walk, Connectivity, HomologySummary,
};
use homwarm_core::warmth::{
    find_complete_bipartite, warmth, LowerBound, Mode, WarmthOptions, WarmthResult, WarmthValue,
};
use homwarm_core::{Error, Graph};
use serde::Serialize;

use crate::corpus::{corpus, CorpusEntry, CORPUS_SIZE};
use crate::experiments::{run_random_sweep, CheckOptions, RandomModel, SweepConfig, KAB_PAIRS};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub limit: Duration,
    run: fn() -> Outcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub results: Vec<CriterionResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    /// Fixed-width table, one row per criterion.
    pub fn table(&self) -> String {
        let mut s = format!("{:>3}  {:<4}  {:<28}  {:>9}  detail\n", "id", "ok", "criterion", "ms");
        for r in &self.results {
            s += &r.line();
            s.push('\n');
        }
        s
    }
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let ok = if self.passed { "PASS" } else { "FAIL" };
        format!("{:>3}  {ok:<4}  {:<28}  {:>9}  {}", self.id, self.name, self.elapsed_ms, self.detail)
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, name: "complete-graph-warmth", limit: secs(10), run: complete_warmth },
        Criterion { id: 2, name: "complete-graph-spheres", limit: secs(30), run: complete_spheres },
        Criterion { id: 3, name: "b0-dichotomy", limit: secs(60), run: dichotomy },
        Criterion { id: 4, name: "grotzsch", limit: secs(60), run: grotzsch },
        Criterion { id: 5, name: "odd-cycles", limit: secs(30), run: odd_cycles },
        Criterion { id: 6, name: "h1-implies-warmth-3", limit: secs(180), run: h1_implies_three },
        Criterion { id: 7, name: "twisted-toroidal", limit: secs(180), run: toroidal },
        Criterion { id: 8, name: "kab-free-bound", limit: secs(120), run: kab_free },
        Criterion { id: 9, name: "fold-invariance", limit: secs(180), run: fold_invariance },
        Criterion { id: 10, name: "walk-chains", limit: secs(120), run: walk_chains },
        Criterion { id: 11, name: "chromatic-order", limit: secs(180), run: chromatic_order },
        Criterion { id: 12, name: "random-sweep", limit: secs(240), run: random_sweep },
    ]
}

/// Runs the selected criteria (all when `only` is empty) in order,
/// handing each result to `on_result` as soon as it is known.
pub fn run_paper_suite(only: &[usize], mut on_result: impl FnMut(&CriterionResult)) -> SuiteReport {
    let mut results = Vec::new();
    for c in criteria().into_iter().filter(|c| only.is_empty() || only.contains(&c.id)) {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if elapsed > c.limit {
            passed = false;
            detail = format!("over time limit {:?}; {detail}", c.limit);
        }
        let r = CriterionResult {
            id: c.id,
            name: c.name,
            passed,
            detail,
            elapsed_ms: elapsed.as_millis(),
            limit_ms: c.limit.as_millis(),
        };
        on_result(&r);
        results.push(r);
    }
    SuiteReport { schema_version: crate::report::SCHEMA_VERSION, results }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn exact_warmth(g: &Graph) -> Result<WarmthResult, String> {
    warmth(g, &WarmthOptions::with_mode(Mode::Exact)).map_err(err)
}

fn zeta_exact(g: &Graph) -> Result<usize, String> {
    let r = exact_warmth(g)?;
    match r.value {
        WarmthValue::Exact(z) => Ok(z),
        v => Err(format!("exact mode left zeta = {v}")),
    }
}

/// Reduced homology is that of `S^k`, free, and nothing is truncated.
fn is_sphere(h: &HomologySummary, k: usize) -> bool {
    let expect: Vec<usize> = (0..=h.max_dim).map(|i| usize::from(i == 0) + usize::from(i == k)).collect();
    h.betti == expect && h.torsion.iter().all(Vec::is_empty) && !h.truncated
}

fn complete_warmth() -> Outcome {
    let mut vals = Vec::new();
    for n in 3..=5 {
        let z = zeta_exact(&complete(n).map_err(err)?)?;
        ensure!(z == n, "zeta(K{n}) = {z}");
        vals.push(format!("zeta(K{n})={z}"));
    }
    Ok(vals.join(" "))
}

fn complete_spheres() -> Outcome {
    for n in 3..=5 {
        let (_, h) = homology_of(&complete(n).map_err(err)?, None).map_err(err)?;
        ensure!(h.max_dim == n - 2, "hom(K2,K{n}) built to dim {}", h.max_dim);
        ensure!(is_sphere(&h, n - 2), "hom(K2,K{n}): betti {:?} torsion {:?}", h.betti, h.torsion);
    }
    Ok("S^1, S^2, S^3 for n = 3, 4, 5; torsion-free".into())
}

fn active_components(g: &Graph) -> usize {
    g.components().iter().filter(|c| c.iter().any(|v| g.degree(v) > 0)).count()
}

fn dichotomy() -> Outcome {
    let c = corpus();
    ensure!(c.len() == CORPUS_SIZE, "corpus has {} graphs", c.len());
    let mut split = 0;
    for e in &c {
        let (_, h) = homology_of(&e.graph, Some(0)).map_err(err)?;
        let predicted = active_components(&e.graph) > 1 || e.graph.is_bipartite();
        ensure!((h.betti[0] > 1) == predicted, "{}: b0 = {}, bipartite-or-disconnected = {predicted}", e.name, h.betti[0]);
        split += usize::from(predicted);
    }
    Ok(format!("{} graphs, {split} with b0 > 1", c.len()))
}

fn grotzsch() -> Outcome {
    let g = mycielski(&cycle(5).map_err(err)?).map_err(err)?;
    let z = zeta_exact(&g)?;
    ensure!(z == 3, "zeta = {z}");
    let (_, h) = homology_of(&g, None).map_err(err)?;
    let conn = homological_connectivity(&h);
    ensure!(conn.value == Connectivity::Exact(1), "hconn = {}", conn.value);
    ensure!(is_sphere(&h, 2), "betti {:?} torsion {:?}", h.betti, h.torsion);
    Ok(format!("zeta=3 hconn=1 betti={:?}", h.betti))
}

/// `b_1` of `hom(K2, G)` for a graph of maximum degree 2, straight from the
/// definition: the complex is then a graph on the directed edges, with one
/// edge for every vertex and unordered pair of its neighbours on either side.
fn b1_degree_two_oracle(g: &Graph) -> usize {
    let darts: Vec<(usize, usize)> = (0..g.n()).flat_map(|u| g.nbrs(u).iter().map(move |v| (u, v))).collect();
    let index: BTreeMap<(usize, usize), usize> = darts.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let mut parent: Vec<usize> = (0..darts.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] == x {
            x
        } else {
            let r = find(p, p[x]);
            p[x] = r;
            r
        }
    }
    let mut edges = 0;
    for x in 0..g.n() {
        let nb = g.nbrs(x).to_vec();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                for (a, b) in [((x, nb[i]), (x, nb[j])), ((nb[i], x), (nb[j], x))] {
                    edges += 1;
                    let (ra, rb) = (find(&mut parent, index[&a]), find(&mut parent, index[&b]));
                    parent[ra] = rb;
                }
            }
        }
    }
    let comps = (0..darts.len()).filter(|&i| find(&mut parent, i) == i).count();
    edges + comps - darts.len()
}

fn odd_cycles() -> Outcome {
    for m in [5, 7, 9] {
        let g = cycle(m).map_err(err)?;
        let z = zeta_exact(&g)?;
        ensure!(z == 3, "zeta(C{m}) = {z}");
        let (_, h) = homology_of(&g, None).map_err(err)?;
        let oracle = b1_degree_two_oracle(&g);
        ensure!(oracle == 1 && h1_free_rank(&h) == 1, "C{m}: b1 = {}, oracle {oracle}", h1_free_rank(&h));
    }
    Ok("zeta=3 and b1=1 for C5, C7, C9".into())
}

fn corpus_with_b1() -> Result<Vec<(CorpusEntry, usize)>, String> {
    let mut out = Vec::new();
    for e in corpus() {
        let (_, h) = homology_of(&e.graph, Some(1)).map_err(err)?;
        let b1 = h1_free_rank(&h);
        out.push((e, b1));
    }
    Ok(out)
}

fn h1_implies_three() -> Outcome {
    let mut hits = 0;
    for (e, b1) in corpus_with_b1()? {
        if b1 == 0 {
            continue;
        }
        hits += 1;
        let z = zeta_exact(&e.graph).map_err(|m| format!("{}: {m}", e.name))?;
        ensure!(z <= 3, "{}: b1 = {b1} but zeta = {z}", e.name);
    }
    ensure!(hits > 0, "no corpus graph has b1 >= 1");
    Ok(format!("{hits} corpus graphs with b1 >= 1, all zeta <= 3"))
}

fn toroidal() -> Outcome {
    let t15 = twisted_toroidal(1, 5).map_err(err)?;
    let z = zeta_exact(&t15)?;
    ensure!(z == 3, "zeta(T_1,5) = {z}");
    let t25 = twisted_toroidal(2, 5).map_err(err)?;
    let r = match exact_warmth(&t25) {
        Ok(r) => r,
        // Stiff with 50 vertices: the upper bound comes from a heuristic
        // certificate, the lower bound from bipartiteness failing.
        Err(_) => warmth(&t25, &WarmthOptions::with_mode(Mode::Heuristic)).map_err(err)?,
    };
    ensure!(r.value == WarmthValue::Exact(3), "zeta(T_2,5) = {}", r.value);
    ensure!(t25.is_connected() && !t25.is_bipartite(), "T_2,5 lower bound does not apply");
    if r.lower == LowerBound::NotBipartite {
        let fam = r.family.as_ref().ok_or("no certificate for T_2,5")?;
        fam.verify(r.certificate_graph(&t25)).map_err(err)?;
    }
    let mut bad = Vec::new();
    for k in 1..=3u32 {
        for m in 1..=7usize {
            let g = twisted_toroidal(k as usize, m).map_err(err)?;
            ensure!(g.n() == 2 * m.pow(k), "T_{k},{m} has {} vertices", g.n());
            let want = 3usize.pow(k);
            let degs: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
            if degs.iter().any(|&d| d != want) {
                bad.push(format!("T_{k},{m} degrees {}..{} not {want}", degs.iter().min().unwrap(), degs.iter().max().unwrap()));
            }
        }
    }
    ensure!(bad.is_empty(), "zeta(T_1,5)=zeta(T_2,5)=3 and vertex counts 2m^k hold; regularity fails: {}", bad.join("; "));
    Ok(format!("zeta(T_1,5)=3 exact, zeta(T_2,5)=3 ({} mode); 2m^k and 3^k-regular for k<=3, m<=7", crate::report::mode_name(r.mode)))
}

fn kab_free() -> Outcome {
    let mut applied = 0;
    for e in corpus() {
        let absent: Vec<(usize, usize)> =
            KAB_PAIRS.iter().copied().filter(|&(a, b)| find_complete_bipartite(&e.graph, a, b).is_none()).collect();
        if absent.is_empty() {
            continue;
        }
        let z = zeta_exact(&e.graph).map_err(|m| format!("{}: {m}", e.name))?;
        for (a, b) in absent {
            applied += 1;
            ensure!(z < a + b, "{}: no K_{a},{b} but zeta = {z}", e.name);
        }
    }
    Ok(format!("{applied} (graph, a, b) cases, zero exceptions"))
}

/// Homology with trailing zero groups trimmed, so complexes of different top
/// dimension compare equal when their homology agrees.
fn trimmed(h: &HomologySummary) -> (Vec<usize>, Vec<Vec<String>>) {
    let mut betti = h.betti.clone();
    let mut tors: Vec<Vec<String>> = h.torsion.iter().map(|t| t.iter().map(|x| x.to_string()).collect()).collect();
    while betti.len() > 1 && betti.last() == Some(&0) && tors.last().is_some_and(Vec::is_empty) {
        betti.pop();
        tors.pop();
    }
    (betti, tors)
}

fn fold_invariance() -> Outcome {
    let no_fold = WarmthOptions { fold: false, ..WarmthOptions::with_mode(Mode::Exact) };
    let (mut done, mut folded, mut seed) = (0, 0, 1000u64);
    while done < 50 {
        seed += 1;
        let n = 5 + (seed % 8) as usize;
        let p = [0.2, 0.3, 0.45, 0.6][(seed / 8 % 4) as usize];
        let g = erdos_renyi(n, p, seed).map_err(err)?;
        let keep: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
        if keep.len() < 2 {
            continue;
        }
        let g = g.induced_subgraph(&keep).map_err(err)?;
        let red = stiff_reduction(&g);
        let (before, after) = (warmth(&g, &no_fold).map_err(err)?.value, warmth(&red.graph, &no_fold).map_err(err)?.value);
        ensure!(before == after, "gnp:{n},{p}@{seed}: zeta {before} before folding, {after} after");
        // Edgeless residues cannot occur: a fold keeps every edge's image.
        let (_, h0) = homology_of(&g, Some(n)).map_err(err)?;
        let (_, h1) = homology_of(&red.graph, Some(n)).map_err(err)?;
        ensure!(!h0.truncated && !h1.truncated, "gnp:{n},{p}@{seed}: homology truncated");
        ensure!(trimmed(&h0) == trimmed(&h1), "gnp:{n},{p}@{seed}: homology {:?} vs {:?}", h0.betti, h1.betti);
        folded += usize::from(!red.folds.is_empty());
        done += 1;
    }
    Ok(format!("50 graphs, {folded} with at least one fold"))
}

fn walk_chains() -> Outcome {
    let c = corpus();
    let mut rng = rng_from_seed(42);
    for i in 0..100 {
        let e = &c[(i * 37) % c.len()];
        let cx = build_hom_k2(&e.graph, Some(1)).map_err(err)?;
        let w = random_even_closed_walk(&e.graph, 2 + i % 11, &mut rng).map_err(err)?;
        let ch = cycle_chain(&cx, &w).map_err(|m| format!("{}: {m}", e.name))?;
        ensure!(chain_boundary(&cx, &ch).map_err(err)?.iter().all(|&x| x == 0), "{}: nonzero boundary", e.name);
    }
    let named = [
        ("C5", cycle(5)),
        ("C7", cycle(7)),
        ("C4", cycle(4)),
        ("K4", complete(4)),
        ("Grotzsch", cycle(5).and_then(|c| mycielski(&c))),
    ];
    let mut parts = Vec::new();
    for (name, g) in named {
        let g = g.map_err(err)?;
        let cx = build_hom_k2(&g, Some(1)).map_err(err)?;
        let s = h1_span_check(&cx, 4 * g.n()).map_err(err)?;
        ensure!(s.spans(), "{name}: walks span rank {} of b1 = {}", s.span_rank, s.b1);
        parts.push(format!("{name}:{}/{}", s.span_rank, s.b1));
    }
    Ok(format!("100 walk chains closed; span {}", parts.join(" ")))
}

fn chromatic_order() -> Outcome {
    let (mut zeta_checked, mut conn_checked) = (0, 0);
    for e in corpus() {
        let Some(chi) = chromatic_number(&e.graph).value.exact() else { continue };
        let z = zeta_exact(&e.graph).map_err(|m| format!("{}: {m}", e.name))?;
        ensure!(z <= chi, "{}: zeta = {z} > chi = {chi}", e.name);
        zeta_checked += 1;
        // The caveat is clear exactly when b0 > 1 or b1 > 0, so dimensions 0
        // and 1 settle every case that is checked.
        let (_, h) = homology_of(&e.graph, Some(1)).map_err(err)?;
        let conn = homological_connectivity(&h);
        if let (Connectivity::Exact(k), false) = (conn.value, conn.caveat) {
            ensure!(k + 3 <= chi as isize, "{}: hconn + 3 = {} > chi = {chi}", e.name, k + 3);
            conn_checked += 1;
        }
    }
    Ok(format!("zeta <= chi on {zeta_checked} graphs, hconn + 3 <= chi on {conn_checked} caveat-clear graphs"))
}

pub fn sweep_config(seed: u64, threads: Option<usize>) -> SweepConfig {
    SweepConfig {
        model: RandomModel::Gnp { p: 0.5 },
        ns: vec![8, 12, 16],
        trials: 30,
        seed,
        check: CheckOptions::default(),
        threads,
    }
}

fn random_sweep() -> Outcome {
    let a = run_random_sweep(&sweep_config(2024, None)).map_err(err)?;
    let b = run_random_sweep(&sweep_config(2024, Some(1))).map_err(err)?;
    ensure!(a.trials_csv() == b.trials_csv(), "same seed gave different CSV");
    let means: Vec<(usize, f64, f64)> =
        a.aggregates.iter().map(|g| (g.n, g.zeta.mean.unwrap_or(f64::NAN), g.hconn.mean.unwrap_or(f64::NAN))).collect();
    let shown: Vec<String> = means.iter().map(|(n, z, h)| format!("n={n}: zeta {z:.2} hconn {h:.2}")).collect();
    ensure!(means.windows(2).all(|w| w[0].1 <= w[1].1), "mean zeta not monotone: {}", shown.join(", "));
    Ok(shown.join(", "))
}
