//! Fixed test corpus: the named families at small sizes plus seeded random
//! graphs, 200 graphs with distinct edge sets.
//!
//! Every graph has minimum degree at least 1 (random samples lose their
//! isolated vertices) and none is dismantlable. All have at most 18 vertices,
//! so exact warmth applies throughout.

use std::collections::BTreeSet;

use homwarm_core::folding::is_dismantlable;
use homwarm_core::Graph;

use crate::family::{generate, Provenance};
use crate::io::canonical_hash;

pub const CORPUS_SIZE: usize = 200;
pub const CORPUS_SEED: u64 = 0x5eed;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    /// The generating spec; `-core` marks samples whose isolated vertices were dropped.
    pub name: String,
    pub graph: Graph,
    pub provenance: Provenance,
}

const NAMED: &[&str] = &[
    "complete:2",
    "complete:3",
    "complete:4",
    "complete:5",
    "complete:6",
    "complete:7",
    "path:7",
    "path:2",
    "path:3",
    "path:4",
    "path:5",
    "path:6",
    "bipartite:1,3",
    "bipartite:2,2",
    "bipartite:2,3",
    "bipartite:3,3",
    "bipartite:3,4",
    "bipartite:4,4",
    "wheel:3",
    "wheel:4",
    "wheel:5",
    "wheel:6",
    "wheel:7",
    "wheel:8",
    "kneser:5,2",
    "kneser:6,2",
    "grotzsch",
    "mycielski:complete:3",
    "mycielski:cycle:7",
    "mycielski:path:3",
    "mycielski:complete:2",
    "looped-cycle:4",
    "looped-cycle:5",
    "looped-cycle:6",
    "looped-cycle:7",
    "looped-cycle:8",
    "toroidal:1,3",
    "toroidal:1,4",
    "toroidal:1,5",
    "toroidal:1,6",
    "toroidal:1,7",
    "toroidal:2,3",
    "union:cycle:5|complete:2",
    "union:complete:3|complete:3",
    "union:cycle:4|cycle:5",
    "union:cycle:5|cycle:7",
    "product:complete:3|complete:3",
    "product:cycle:5|complete:3",
    "product:cycle:5|complete:2",
    "product:path:2|cycle:5",
    "product:complete:3|complete:4",
];

/// Drops isolated vertices; `None` if nothing with an edge remains.
fn core_of(g: &Graph) -> Option<Graph> {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    (!keep.is_empty()).then(|| g.induced_subgraph(&keep).unwrap())
}

pub fn corpus() -> Vec<CorpusEntry> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |name: String, graph: Graph, provenance: Provenance, out: &mut Vec<CorpusEntry>| {
        if !is_dismantlable(&graph) && seen.insert(canonical_hash(&graph)) {
            out.push(CorpusEntry { name, graph, provenance });
        }
    };
    let cycles = (3..=12).map(|n| format!("cycle:{n}"));
    for spec in cycles.chain(NAMED.iter().map(|s| s.to_string())) {
        let g = generate(&spec, 0).expect("corpus spec");
        push(spec, g.graph, g.provenance, &mut out);
    }
    let mut k = 0u64;
    while out.len() < CORPUS_SIZE {
        let n = 5 + (k % 12) as usize;
        let p = [0.25, 0.4, 0.55, 0.7][(k / 12 % 4) as usize];
        let spec = if k % 10 == 9 { format!("chung-lu:{n},3,2.5") } else { format!("gnp:{n},{p}") };
        let seed = CORPUS_SEED + k;
        k += 1;
        let g = generate(&spec, seed).expect("corpus spec");
        let Some(core) = core_of(&g.graph) else { continue };
        let name = if core.n() < g.graph.n() { format!("{spec}@{seed}-core") } else { format!("{spec}@{seed}") };
        push(name, core, g.provenance, &mut out);
    }
    out
}
