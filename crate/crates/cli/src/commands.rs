//! `gen`, `solve` and `check-partition`.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use serde_json::{json, Value};
use toeplitz_core::distance::DistanceMatrix;
use toeplitz_core::domination::{family_formula_applies, k_domination_number_with, DominationOptions};
use toeplitz_core::partition::{partition_dimension_with, twin_part_violation};
use toeplitz_core::resolving::{metric_dimension_with, MetricDimOptions};
use toeplitz_core::spectral::spectrum_report;
use toeplitz_core::structure::intersection_profile;
use toeplitz_core::{
    dihedral_cayley, find_isomorphism, is_distance_regular, is_isomorphism, is_resolving_partition, true_twins,
    Budget, Graph, Partition, PdOptions, VertexSet,
};

use crate::source::{load_file, GraphSource, Loaded};
use crate::{CliError, Common, GraphFormat, Output, Solver, SCHEMA};

pub const COMPUTED_PROVENANCE: &str = "computed, not paper-asserted";

pub fn budget(seconds: Option<f64>) -> Result<Budget, CliError> {
    match seconds {
        None => Ok(Budget::unlimited()),
        Some(s) if s.is_finite() && s >= 0.0 => Ok(Budget::with_timeout(Duration::from_secs_f64(s))),
        Some(s) => Err(CliError::Usage(format!("invalid budget {s}"))),
    }
}

pub fn elapsed_ms(start: Instant, deterministic: bool) -> u64 {
    if deterministic {
        0
    } else {
        start.elapsed().as_millis() as u64
    }
}

fn labels(g: &Graph, set: VertexSet) -> Vec<String> {
    set.iter().map(|v| g.label(v)).collect()
}

/// Merges the common envelope fields into a result object.
fn envelope(id: &str, body: Value, start: Instant, common: &Common) -> Value {
    let mut out = json!({ "schema": SCHEMA, "graph_id": id });
    out.as_object_mut().unwrap().extend(body.as_object().cloned().unwrap_or_default());
    out["elapsed_ms"] = json!(elapsed_ms(start, common.deterministic));
    out
}

pub fn gen(source: &GraphSource, format: GraphFormat, out: Option<PathBuf>) -> Result<Output, CliError> {
    let Loaded { graph, id, .. } = source.load()?;
    let text = match format {
        GraphFormat::Json => serde_json::to_string_pretty(&graph.to_json()).expect("graph serializes") + "\n",
        GraphFormat::Dot => graph.to_dot(&id),
    };
    Ok(match out {
        Some(path) => Output { stdout: String::new(), file: Some((path, text)), failed_claims: 0 },
        None => Output { stdout: text, file: None, failed_claims: 0 },
    })
}

pub fn solve(which: Solver) -> Result<Output, CliError> {
    let start = Instant::now();
    let (source, common) = match &which {
        Solver::Dim { source, common }
        | Solver::Pd { source, common }
        | Solver::Domk { source, common, .. }
        | Solver::Spectrum { source, common }
        | Solver::Twins { source, common }
        | Solver::Drg { source, common }
        | Solver::Iso { source, common, .. } => (source, common),
    };
    let loaded = source.load()?;
    let g = &loaded.graph;
    let budget = budget(common.budget_seconds)?;
    let body = match &which {
        Solver::Dim { .. } => {
            let r = metric_dimension_with(g, &MetricDimOptions { budget, ..Default::default() })?;
            json!({ "dim": r.value, "witness": labels(g, r.witness), "nodes_explored": r.nodes_explored })
        }
        Solver::Pd { .. } => {
            let opts = PdOptions { threads: common.threads.max(1), budget, ..Default::default() };
            let r = partition_dimension_with(g, &opts)?;
            let mut body = json!({
                "pd": r.value,
                "witness_parts": r.witness.label_parts(),
                "lower_bound": r.lower_bound,
                "k_values_refuted": r.refuted,
                "nodes_explored": r.nodes_explored,
            });
            if let Some(n) = loaded.family {
                if n >= 8 {
                    body["provenance"] = json!(COMPUTED_PROVENANCE);
                }
            }
            body
        }
        Solver::Domk { k, .. } => {
            if *k == 0 {
                return Err(CliError::Usage("k must be at least 1".into()));
            }
            let r = k_domination_number_with(g, *k, &DominationOptions { budget, ..Default::default() })?;
            let in_range = loaded.family.is_some_and(|n| family_formula_applies(n, *k));
            let mut body = json!({
                "k": k,
                "gamma_k": r.value,
                "witness": labels(g, r.witness),
                "in_paper_range": in_range,
                "nodes_explored": r.nodes_explored,
            });
            if loaded.family.is_some() && !in_range {
                body["note"] = json!("outside paper range");
            }
            body
        }
        Solver::Spectrum { .. } => serde_json::to_value(spectrum_report(g)?).expect("report serializes"),
        Solver::Twins { .. } => {
            let t = true_twins(g);
            let pairs: Vec<[String; 2]> = t.pairs.iter().map(|&(u, v)| [g.label(u), g.label(v)]).collect();
            let mut body = json!({ "count": t.len(), "pairs": pairs, "matching": t.is_matching() });
            if let Some(n) = loaded.family {
                body["partner_shift"] = json!(n);
            }
            body
        }
        Solver::Drg { .. } => {
            let (regular, _) = is_distance_regular(g)?;
            let dm = DistanceMatrix::new(g)?;
            let profile = intersection_profile(g, &dm);
            let layers: Vec<Value> = (0..=profile.max_distance())
                .map(|r| {
                    let at = |f: fn(&toeplitz_core::structure::IntersectionEntry) -> usize| {
                        let mut v: Vec<usize> =
                            profile.entries.iter().filter(|e| e.distance == r).map(f).collect();
                        v.sort_unstable();
                        v.dedup();
                        v
                    };
                    json!({ "distance": r, "c": at(|e| e.c), "a": at(|e| e.a), "b": at(|e| e.b) })
                })
                .collect();
            json!({
                "distance_regular": regular,
                "regular_degree": g.regular_degree(),
                "diameter": dm.diameter(),
                "intersection_numbers": layers,
            })
        }
        Solver::Iso { with, .. } => {
            let (h, other_id) = match (with, loaded.family) {
                (Some(path), _) => (load_file(path)?, format!("file:{}", path.display())),
                (None, Some(n)) => (dihedral_cayley(n)?, format!("Cay(D_{}, Psi)", 2 * n)),
                (None, None) => {
                    return Err(CliError::Usage(
                        "--with FILE is required unless the graph is a family member".into(),
                    ))
                }
            };
            match find_isomorphism(g, &h) {
                Some(map) => {
                    let pairs: Vec<[String; 2]> =
                        map.iter().enumerate().map(|(u, &w)| [g.label(u), h.label(w)]).collect();
                    json!({
                        "other_id": other_id,
                        "isomorphic": true,
                        "verified": is_isomorphism(g, &h, &map),
                        "mapping": pairs,
                    })
                }
                None => json!({ "other_id": other_id, "isomorphic": false, "mapping": null }),
            }
        }
    };
    Ok(Output::json(&envelope(&loaded.id, body, start, common), common.out.clone()))
}

pub fn check_partition(source: &GraphSource, text: &str, common: &Common) -> Result<Output, CliError> {
    let start = Instant::now();
    let loaded = source.load()?;
    let g = &loaded.graph;
    let p = Partition::parse(text, g.order())?;
    let dm = DistanceMatrix::new(g)?;
    let report = is_resolving_partition(&dm, &p);
    let collision = report.witness_collision.map(|(u, v)| [g.label(u), g.label(v)]);
    let twin = twin_part_violation(g, &p).map(|(u, v)| [g.label(u), g.label(v)]);
    let body = json!({
        "partition": p.to_text(),
        "k": p.k(),
        "resolving": report.resolving,
        "witness_collision": collision,
        "twin_violation": twin,
        "representations": report.vectors,
    });
    Ok(Output::json(&envelope(&loaded.id, body, start, common), common.out.clone()))
}
