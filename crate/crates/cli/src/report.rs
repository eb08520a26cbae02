//! JSON and plain-text rendering. `serde_json::Value` objects keep their keys
//! sorted, which keeps output byte-stable.

use beitoric::edge_ideals::{edge_ideal_names, ToricnessReport};
use beitoric::sweep::SweepSummary;
use serde_json::{json, Value};

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn lines(items: &[String]) -> String {
    items.iter().map(|l| format!("{l}\n")).collect()
}

pub fn toricness_json(r: &ToricnessReport) -> Value {
    let names = edge_ideal_names(r.n);
    json!({
        "n": r.n,
        "components": r.components,
        "is_toric": r.is_toric,
        "witness": r.witness.map(|w| json!({"k": w.k, "i": w.i, "j": w.j})),
        "verified": r.verified,
        "decomposition": r.decomposition.as_ref().map(|blocks| {
            blocks
                .iter()
                .map(|b| json!({
                    "component": b.component,
                    "generators": b.ideal.render(&names),
                }))
                .collect::<Vec<_>>()
        }),
    })
}

fn braces(c: &[usize]) -> String {
    let inner: Vec<String> = c.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn toricness_text(r: &ToricnessReport) -> String {
    let names = edge_ideal_names(r.n);
    let comps: Vec<String> = r.components.iter().map(|c| braces(c)).collect();
    let mut out = format!(
        "n: {}\ncomponents: {}\nis_toric: {}\n",
        r.n,
        comps.join(" "),
        r.is_toric
    );
    if let Some(w) = r.witness {
        let edge = |a: usize, b: usize| braces(&[a.min(b), a.max(b)]);
        out.push_str(&format!(
            "witness: k={} i={} j={} (edges {} and {} present, {} missing)\n",
            w.k,
            w.i,
            w.j,
            edge(w.i, w.k),
            edge(w.j, w.k),
            edge(w.i, w.j)
        ));
    }
    if let Some(v) = r.verified {
        out.push_str(&format!("verified: {v}\n"));
    }
    if let Some(blocks) = &r.decomposition {
        for b in blocks {
            let gens = b.ideal.render(&names);
            let body = if gens.is_empty() {
                "0".to_string()
            } else {
                gens.join(", ")
            };
            out.push_str(&format!("block {}: {}\n", braces(&b.component), body));
        }
    }
    out
}

pub fn sweep_json(s: &SweepSummary) -> Value {
    json!({
        "summary": {
            "max_n": s.max_n,
            "graphs_checked": s.graphs_checked(),
            "levels": s.levels.iter().map(|l| json!({
                "n": l.n,
                "graphs_checked": l.graphs_checked,
                "toric_count": l.toric_count,
            })).collect::<Vec<_>>(),
            "mismatches": s.mismatches.iter().map(|m| json!({
                "n": m.n,
                "mask": m.mask,
                "is_toric": m.is_toric,
                "verified": m.verified,
                "error": m.error,
            })).collect::<Vec<_>>(),
        },
        "wall_time_secs": s.wall_time.as_secs_f64(),
    })
}

pub fn sweep_text(s: &SweepSummary) -> String {
    let mut out = String::new();
    for l in &s.levels {
        out.push_str(&format!(
            "n={}: graphs_checked={} toric_count={}\n",
            l.n, l.graphs_checked, l.toric_count
        ));
    }
    out.push_str(&format!(
        "total graphs_checked={} mismatches={} wall_time={:.3}s\n",
        s.graphs_checked(),
        s.mismatches.len(),
        s.wall_time.as_secs_f64()
    ));
    out
}
