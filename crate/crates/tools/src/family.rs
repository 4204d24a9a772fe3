//! Graphs named on the command line as `family:params`.
//!
//! | spec                    | graph                                        |
//! |-------------------------|----------------------------------------------|
//! | `complete:n`            | K_n                                          |
//! | `cycle:n`               | C_n                                          |
//! | `looped-cycle:n`        | C_n with a loop at every vertex              |
//! | `path:k`                | path on k vertices                           |
//! | `bipartite:a,b`         | K_{a,b}                                      |
//! | `wheel:n`               | C_n plus a hub joined to every rim vertex    |
//! | `kneser:n,k`            | Kneser graph K(n,k)                          |
//! | `petersen`              | K(5,2)                                       |
//! | `grotzsch`              | Mycielskian of C_5                           |
//! | `mycielski:SPEC`        | Mycielskian of another spec                  |
//! | `toroidal:k,m`          | twisted toroidal graph T_{k,m}               |
//! | `gnp:n,p`               | G(n,p), seeded                               |
//! | `chung-lu:n,avg,beta`   | Chung–Lu with power-law weights, seeded      |
//! | `union:SPEC|SPEC`       | disjoint union                               |
//! | `product:SPEC|SPEC`     | categorical product                          |

use homwarm_core::generators::{
    chung_lu, complete, complete_bipartite, cycle, erdos_renyi, kneser, looped_cycle, mycielski, path, twisted_toroidal,
    DegreeSequence,
};
use homwarm_core::Graph;
use serde::{Deserialize, Serialize};

/// Where a graph came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Generator { generator: String, params: String, seed: Option<u64> },
    File { path: String, sha256: String },
}

impl Provenance {
    pub fn file(path: &str, bytes: &[u8]) -> Provenance {
        use sha2::{Digest, Sha256};
        Provenance::File { path: path.to_string(), sha256: hex::encode(Sha256::digest(bytes)) }
    }
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::Generator { generator, params, seed } => {
                write!(f, "{generator}")?;
                if !params.is_empty() {
                    write!(f, ":{params}")?;
                }
                if let Some(s) = seed {
                    write!(f, "@{s}")?;
                }
                Ok(())
            }
            Provenance::File { path, sha256 } => write!(f, "file:{path}#{}", &sha256[..12]),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    #[error("unknown family {0:?}")]
    Unknown(String),
    #[error("{spec}: {msg}")]
    Params { spec: String, msg: String },
    #[error(transparent)]
    Graph(#[from] homwarm_core::Error),
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub provenance: Provenance,
}

fn numbers<T: std::str::FromStr>(spec: &str, params: &str, count: usize) -> Result<Vec<T>, SpecError> {
    let bad = |msg: String| SpecError::Params { spec: spec.to_string(), msg };
    let parts: Vec<&str> = if params.is_empty() { Vec::new() } else { params.split(',').map(str::trim).collect() };
    if parts.len() != count {
        return Err(bad(format!("expected {count} parameter(s), found {}", parts.len())));
    }
    parts.iter().map(|p| p.parse().map_err(|_| bad(format!("cannot parse {p:?}")))).collect()
}

/// Power-law weights `∝ (i+1)^{-1/(beta-1)}` with mean `avg`, clipped to the
/// model's admissible range.
pub fn power_law_weights(n: usize, avg: f64, beta: f64) -> Result<DegreeSequence, homwarm_core::Error> {
    if !(beta > 2.0) || !(avg > 0.0) || n < 2 {
        return Err(homwarm_core::Error::Input(format!("chung-lu needs n >= 2, avg > 0, beta > 2 (got {n}, {avg}, {beta})")));
    }
    let raw: Vec<f64> = (0..n).map(|i| ((i + 1) as f64).powf(-1.0 / (beta - 1.0))).collect();
    let scale = avg * n as f64 / raw.iter().sum::<f64>();
    let mut w: Vec<f64> = raw.iter().map(|x| x * scale).collect();
    for _ in 0..32 {
        let cap = w.iter().sum::<f64>().sqrt().min((n - 1) as f64);
        if w.iter().all(|&x| x <= cap) {
            break;
        }
        w.iter_mut().for_each(|x| *x = x.min(cap));
    }
    DegreeSequence::new(w)
}

fn wheel(n: usize) -> Result<Graph, homwarm_core::Error> {
    let rim = cycle(n)?;
    Graph::from_edges(n + 1, rim.edges().chain((0..n).map(|v| (v, n))).collect::<Vec<_>>())
}

/// Builds the graph named by `spec`. `seed` is used, and recorded, only by
/// the random families.
pub fn generate(spec: &str, seed: u64) -> Result<Generated, SpecError> {
    let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
    let prov = |seed: Option<u64>| Provenance::Generator { generator: name.to_string(), params: params.to_string(), seed };
    let fixed = |graph: Graph| Ok(Generated { graph, provenance: prov(None) });
    match name {
        "complete" => fixed(complete(numbers(spec, params, 1)?[0])?),
        "cycle" => fixed(cycle(numbers(spec, params, 1)?[0])?),
        "looped-cycle" => fixed(looped_cycle(numbers(spec, params, 1)?[0])?),
        "path" => fixed(path(numbers(spec, params, 1)?[0])?),
        "wheel" => fixed(wheel(numbers(spec, params, 1)?[0])?),
        "bipartite" => {
            let v: Vec<usize> = numbers(spec, params, 2)?;
            fixed(complete_bipartite(v[0], v[1])?)
        }
        "kneser" => {
            let v: Vec<usize> = numbers(spec, params, 2)?;
            fixed(kneser(v[0], v[1])?)
        }
        "toroidal" => {
            let v: Vec<usize> = numbers(spec, params, 2)?;
            fixed(twisted_toroidal(v[0], v[1])?)
        }
        "petersen" => {
            numbers::<usize>(spec, params, 0)?;
            fixed(kneser(5, 2)?)
        }
        "grotzsch" => {
            numbers::<usize>(spec, params, 0)?;
            fixed(mycielski(&cycle(5)?)?)
        }
        "mycielski" => {
            let inner = generate(params, seed)?;
            let seed = match inner.provenance {
                Provenance::Generator { seed, .. } => seed,
                Provenance::File { .. } => None,
            };
            Ok(Generated { graph: mycielski(&inner.graph)?, provenance: prov(seed) })
        }
        "union" | "product" => {
            let (a, b) = params.split_once('|').ok_or_else(|| SpecError::Params {
                spec: spec.to_string(),
                msg: "expected two specs separated by '|'".into(),
            })?;
            let (a, b) = (generate(a, seed)?, generate(b, seed)?);
            let graph = if name == "union" { a.graph.disjoint_union(&b.graph)? } else { a.graph.categorical_product(&b.graph)? };
            let seeded = [&a, &b].iter().any(|g| matches!(g.provenance, Provenance::Generator { seed: Some(_), .. }));
            Ok(Generated { graph, provenance: prov(seeded.then_some(seed)) })
        }
        "gnp" => {
            let v: Vec<f64> = numbers(spec, params, 2)?;
            if v[0] < 0.0 || v[0].fract() != 0.0 {
                return Err(SpecError::Params { spec: spec.into(), msg: "n must be a non-negative integer".into() });
            }
            Ok(Generated { graph: erdos_renyi(v[0] as usize, v[1], seed)?, provenance: prov(Some(seed)) })
        }
        "chung-lu" => {
            let v: Vec<f64> = numbers(spec, params, 3)?;
            if v[0] < 0.0 || v[0].fract() != 0.0 {
                return Err(SpecError::Params { spec: spec.into(), msg: "n must be a non-negative integer".into() });
            }
            let w = power_law_weights(v[0] as usize, v[1], v[2])?;
            Ok(Generated { graph: chung_lu(&w, seed)?, provenance: prov(Some(seed)) })
        }
        _ => Err(SpecError::Unknown(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use homwarm_core::iso::is_isomorphic;

    #[test]
    fn named_families() {
        let g = generate("kneser:6,2", 0).unwrap();
        assert_eq!((g.graph.n(), g.graph.edge_count()), (15, 45));
        assert_eq!(g.provenance, Provenance::Generator { generator: "kneser".into(), params: "6,2".into(), seed: None });
        let gr = generate("grotzsch", 0).unwrap().graph;
        assert!(is_isomorphic(&gr, &generate("mycielski:cycle:5", 0).unwrap().graph));
        assert_eq!(generate("wheel:5", 0).unwrap().graph.edge_count(), 10);
        assert_eq!(generate("union:cycle:5|complete:2", 0).unwrap().graph.n(), 7);
        assert_eq!(generate("product:complete:3|complete:3", 0).unwrap().graph.edge_count(), 18);
        assert_eq!(generate("toroidal:1,5", 0).unwrap().graph.n(), 10);
    }

    #[test]
    fn random_families_record_seed() {
        let a = generate("gnp:12,0.5", 7).unwrap();
        assert_eq!(a.provenance.to_string(), "gnp:12,0.5@7");
        assert_eq!(a.graph, generate("gnp:12,0.5", 7).unwrap().graph);
        let c = generate("chung-lu:30,4,2.5", 3).unwrap();
        assert_eq!(c.graph.n(), 30);
        assert_eq!(generate("union:gnp:5,0.5|cycle:3", 1).unwrap().provenance.to_string(), "union:gnp:5,0.5|cycle:3@1");
    }

    #[test]
    fn bad_specs() {
        assert!(matches!(generate("moebius:3", 0), Err(SpecError::Unknown(_))));
        assert!(matches!(generate("kneser:6", 0), Err(SpecError::Params { .. })));
        assert!(matches!(generate("cycle:x", 0), Err(SpecError::Params { .. })));
        assert!(matches!(generate("cycle:2", 0), Err(SpecError::Graph(_))));
        assert!(generate("gnp:5,1.5", 0).is_err());
        assert!(generate("chung-lu:10,2,1.5", 0).is_err());
    }

    #[test]
    fn power_law_weights_are_admissible() {
        for n in [5, 20, 100] {
            let w = power_law_weights(n, 3.0, 2.2).unwrap();
            assert_eq!(w.len(), n);
        }
    }
}
