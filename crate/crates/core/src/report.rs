//! Versioned JSON documents for verdicts and the other command results.
//!
//! The layout is described by `schema/verdict.schema.json` at the workspace
//! root. Tri-values serialize as `"yes"`, `"no"` or `"unknown"`; slopes and
//! knots as their canonical text.

use serde_json::{json, Value};

use crate::engine::{Flags, Premise, Property, Trace, Verdict};
use crate::knot::KnotExpr;
use crate::slope::Slope;

pub const SCHEMA: &str = "surgery-verdict/1";

fn premise_json(p: &Premise) -> Value {
    match p {
        Premise::Fact(f) => json!({ "fact": f }),
        Premise::Sub(s) => json!({
            "sub": {
                "knot": s.knot.to_string(),
                "slope": s.slope.to_string(),
                "property": s.property.as_str(),
                "value": s.value,
                "traces": s.traces.iter().map(trace_json).collect::<Vec<_>>(),
            }
        }),
    }
}

fn trace_json(t: &Trace) -> Value {
    json!({
        "rule": t.rule_id,
        "citation": t.citation,
        "property": t.property.as_str(),
        "value": t.value,
        "conjectural": t.conjectural,
        "premises": t.premises.iter().map(premise_json).collect::<Vec<_>>(),
    })
}

pub fn verdict_json(v: &Verdict) -> Value {
    let mut out = serde_json::Map::new();
    for p in Property::ALL {
        out.insert(p.as_str().to_string(), json!(v.get(p)));
    }
    out.insert(
        "traces".into(),
        v.traces.iter().map(trace_json).collect::<Vec<_>>().into(),
    );
    out.insert(
        "reductions".into(),
        v.reductions
            .iter()
            .map(|r| {
                json!({
                    "description": r.description,
                    "knot": r.knot.to_string(),
                    "slope": r.slope.to_string(),
                })
            })
            .collect::<Vec<_>>()
            .into(),
    );
    out.insert("notes".into(), json!(v.notes));
    Value::Object(out)
}

fn flags_json(f: Flags) -> Value {
    json!({ "assume_conjecture": f.assume_conjecture })
}

fn results_json(results: &[(Slope, Verdict)]) -> Value {
    results
        .iter()
        .map(|(s, v)| json!({ "slope": s.to_string(), "verdict": verdict_json(v) }))
        .collect::<Vec<_>>()
        .into()
}

pub fn classify_json(knot: &KnotExpr, slope: Slope, flags: Flags, v: &Verdict) -> Value {
    json!({
        "schema": SCHEMA,
        "command": "classify",
        "knot": knot.to_string(),
        "slope": slope.to_string(),
        "flags": flags_json(flags),
        "verdict": verdict_json(v),
    })
}

pub fn scan_json(knot: &KnotExpr, flags: Flags, results: &[(Slope, Verdict)]) -> Value {
    json!({
        "schema": SCHEMA,
        "command": "scan",
        "knot": knot.to_string(),
        "flags": flags_json(flags),
        "results": results_json(results),
    })
}

pub fn farey_ball_json(radius: u32, qmax: u64, slopes: &[Slope]) -> Value {
    json!({
        "schema": SCHEMA,
        "command": "farey-ball",
        "radius": radius,
        "qmax": qmax,
        "slopes": slopes.iter().map(Slope::to_string).collect::<Vec<_>>(),
    })
}

pub fn farey_dist_json(from: Slope, to: Slope, distance: u32) -> Value {
    json!({
        "schema": SCHEMA,
        "command": "farey-dist",
        "from": from.to_string(),
        "to": to.to_string(),
        "distance": distance,
    })
}

/// One `query` line of a batch document with its results.
pub struct BatchEntry {
    pub name: String,
    pub line: usize,
    pub knot: KnotExpr,
    pub flags: Flags,
    pub results: Vec<(Slope, Verdict)>,
}

pub fn batch_json(entries: &[BatchEntry]) -> Value {
    let queries: Vec<Value> = entries
        .iter()
        .map(|e| {
            json!({
                "name": e.name,
                "line": e.line,
                "knot": e.knot.to_string(),
                "flags": flags_json(e.flags),
                "results": results_json(&e.results),
            })
        })
        .collect();
    json!({ "schema": SCHEMA, "command": "batch", "queries": queries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Inconsistency,
}

pub fn error_json(command: &str, kind: ErrorKind, message: &str) -> Value {
    let kind = match kind {
        ErrorKind::Input => "input",
        ErrorKind::Inconsistency => "inconsistency",
    };
    json!({
        "schema": SCHEMA,
        "command": command,
        "error": { "kind": kind, "message": message },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{classify, Query};

    #[test]
    fn verdict_fields() {
        let k = KnotExpr::torus(2, 3);
        let s = Slope::integer(1);
        let v = classify(&Query::new(k.clone(), s)).unwrap();
        let doc = classify_json(&k, s, Flags::default(), &v);
        assert_eq!(doc["schema"], SCHEMA);
        assert_eq!(doc["verdict"]["lo"], "no");
        assert_eq!(doc["verdict"]["l_space"], "yes");
        assert_eq!(doc["verdict"]["toroidal"], "unknown");
        let trace = &doc["verdict"]["traces"][0];
        assert!(trace["rule"].is_string() && trace["citation"].is_string());
    }
}
