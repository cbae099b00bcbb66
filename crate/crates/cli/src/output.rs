//! Stable JSON/CSV serialization of library results.

use primzono::{DiameterRecord, GeneratorSet, IntVec, VertexRecord, ZonotopeSummary};
use serde_json::{json, Value};

/// Bumped whenever the serialized layout changes; cache entries from
/// other versions are ignored.
pub const SCHEMA_VERSION: u32 = 1;

pub fn meta(g: &GeneratorSet) -> Value {
    json!({
        "d": g.d,
        "p": g.p,
        "q": g.q.to_string(),
        "positive": g.positive,
        "version": SCHEMA_VERSION,
    })
}

pub fn generators_json(g: &GeneratorSet) -> Value {
    json!({ "meta": meta(g), "generators": g.generators() })
}

pub fn vertex_value(r: &VertexRecord) -> Value {
    json!({
        "signs": r.signs.to_vec(),
        "z": r.z_point,
        "h": r.h_point,
        "witness": r.witness,
    })
}

pub fn vertices_json(g: &GeneratorSet, records: &[VertexRecord]) -> Value {
    let vertices: Vec<Value> = records.iter().map(vertex_value).collect();
    json!({ "meta": meta(g), "generators": g.generators(), "vertices": vertices })
}

pub fn summary_json(g: &GeneratorSet, s: &ZonotopeSummary) -> Value {
    json!({
        "meta": meta(g),
        "summary": {
            "count": s.vertex_count,
            "diameter": s.diameter,
            "grid": s.grid_k,
            "translation": s.translation,
        },
    })
}

pub fn delta_json(r: &DiameterRecord) -> Value {
    json!({
        "d": r.d,
        "k": r.k,
        "diameter": r.diameter,
        "grid": r.grid_k,
        "inferred_schedule": r.inferred_schedule,
        "generators": r.generators,
    })
}

fn join(v: &IntVec, sep: &str) -> String {
    v.as_slice()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn generators_csv(g: &GeneratorSet) -> String {
    let mut out = String::new();
    let header: Vec<String> = (0..g.d).map(|j| format!("g{j}")).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for v in g.iter() {
        out.push_str(&join(v, ","));
        out.push('\n');
    }
    out
}

pub fn vertices_csv(g: &GeneratorSet, records: &[VertexRecord]) -> String {
    let mut out = String::from("signs");
    for prefix in ["z", "h", "w"] {
        for j in 0..g.d {
            out.push_str(&format!(",{prefix}{j}"));
        }
    }
    out.push('\n');
    for r in records {
        let signs: String = r
            .signs
            .to_vec()
            .iter()
            .map(|&s| if s == 1 { '+' } else { '-' })
            .collect();
        out.push_str(&signs);
        for v in [&r.z_point, &r.h_point, &r.witness] {
            out.push(',');
            out.push_str(&join(v, ","));
        }
        out.push('\n');
    }
    out
}

pub fn summary_csv(s: &ZonotopeSummary) -> String {
    format!(
        "count,diameter,grid,translation\n{},{},{},{}\n",
        s.vertex_count,
        s.diameter,
        s.grid_k,
        join(&s.translation, " ")
    )
}

pub fn delta_csv(records: &[DiameterRecord]) -> String {
    let mut out = String::from("d,k,diameter,grid\n");
    for r in records {
        out.push_str(&format!("{},{},{},{}\n", r.d, r.k, r.diameter, r.grid_k));
    }
    out
}
