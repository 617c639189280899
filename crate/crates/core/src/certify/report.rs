use std::collections::{BTreeMap, HashMap};

use serde_json::{json, Map, Value};

use super::{Certificate, PipelineReport};
use crate::graph::{NamedDigraph, VertexColoring};
use crate::subdivision::{CyclePattern, Direction, SubdivisionWitness};

pub const REPORT_SCHEMA: u64 = 1;

/// Certificate as JSON, with vertices written by name.
pub fn certificate_to_json(cert: &Certificate, names: &[String]) -> Value {
    match cert {
        Certificate::Colored { coloring, bound } => {
            let colors: BTreeMap<&str, usize> =
                names.iter().zip(&coloring.colors).map(|(n, &c)| (n.as_str(), c)).collect();
            json!({
                "kind": "coloring",
                "palette": coloring.palette,
                "bound": bound,
                "colors": colors,
            })
        }
        Certificate::Subdivided { witness, pattern } => {
            let name = |v: &usize| names[*v].clone();
            json!({
                "kind": "subdivision",
                "pattern": pattern,
                "branch_vertices": witness.branch_vertices().iter().map(name).collect::<Vec<_>>(),
                "paths": witness.paths.iter().map(|p| p.iter().map(name).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "directions": witness.directions,
            })
        }
    }
}

/// Deterministic JSON for a pipeline report; timing is left out.
pub fn report_to_json(r: &PipelineReport, names: &[String]) -> Value {
    json!({
        "schema": REPORT_SCHEMA,
        "k": r.k,
        "pattern": r.pattern,
        "status": r.status,
        "route": r.route,
        "reason": r.reason,
        "certificate": r.certificate.as_ref().map(|c| certificate_to_json(c, names)),
        "classes": r.classes,
        "counters": r.counters,
    })
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value, String> {
    obj.get(key).ok_or_else(|| format!("missing field `{key}`"))
}

fn as_count(v: &Value, what: &str) -> Result<usize, String> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| format!("`{what}` must be a non-negative integer"))
}

/// Reads a certificate, or a report wrapping one, against the named digraph.
pub fn certificate_from_json(v: &Value, g: &NamedDigraph) -> Result<Certificate, String> {
    let obj = v.as_object().ok_or("certificate must be a JSON object")?;
    if let Some(inner) = obj.get("certificate") {
        if inner.is_null() {
            return Err("report carries no certificate".into());
        }
        return certificate_from_json(inner, g);
    }
    let index: HashMap<&str, usize> = g.names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let lookup = |name: &str| index.get(name).copied().ok_or_else(|| format!("unknown vertex `{name}`"));
    let vertex = |v: &Value| -> Result<usize, String> {
        let name = match v {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            _ => return Err(format!("bad vertex {v}")),
        };
        lookup(&name)
    };
    match field(obj, "kind")?.as_str() {
        Some("coloring") => {
            let palette = as_count(field(obj, "palette")?, "palette")?;
            let bound = match obj.get("bound") {
                Some(b) => as_count(b, "bound")?,
                None => palette,
            };
            let map = field(obj, "colors")?.as_object().ok_or("`colors` must be an object")?;
            let mut colors = vec![None; g.digraph.n()];
            for (name, c) in map {
                let u = lookup(name)?;
                colors[u] = Some(as_count(c, "color")?);
            }
            let colors = colors
                .into_iter()
                .enumerate()
                .map(|(u, c)| c.ok_or_else(|| format!("vertex `{}` has no colour", g.names[u])))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Certificate::Colored { coloring: VertexColoring { colors, palette }, bound })
        }
        Some("subdivision") => {
            let pattern: CyclePattern =
                serde_json::from_value(field(obj, "pattern")?.clone()).map_err(|e| format!("bad pattern: {e}"))?;
            let pattern = CyclePattern::new(pattern.0).map_err(|e| e.to_string())?;
            let directions: Vec<Direction> = serde_json::from_value(field(obj, "directions")?.clone())
                .map_err(|e| format!("bad directions: {e}"))?;
            let paths = field(obj, "paths")?
                .as_array()
                .ok_or("`paths` must be an array")?
                .iter()
                .map(|p| {
                    p.as_array()
                        .ok_or_else(|| "each path must be an array".to_string())?
                        .iter()
                        .map(vertex)
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Certificate::Subdivided { witness: SubdivisionWitness { paths, directions }, pattern })
        }
        _ => Err("`kind` must be \"coloring\" or \"subdivision\"".into()),
    }
}
