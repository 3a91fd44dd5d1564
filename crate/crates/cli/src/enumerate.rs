//! Tables of weak combinatorics per degree.

use std::fmt::Write as _;

use nearfree_core::combinat::{
    analyze_degree, count_admissible, degree_upper_bound, exponent_range, mdr_lower_bound, Candidate, DegreeAnalysis,
};
use nearfree_core::singular::WeakCombinatorics;
use serde_json::{json, Value};

use crate::report::SCHEMA;
use crate::CliError;

pub const MIN_DEGREE: usize = 3;

/// Rejects degrees that cannot carry a nearly free arrangement.
pub fn check_degree(m: usize) -> Result<(), CliError> {
    if m < MIN_DEGREE {
        return Err(CliError::Invalid(format!(
            "degree {m} is out of range: arrangements with a line and a conic have m >= {MIN_DEGREE}"
        )));
    }
    let bound = degree_upper_bound();
    if m > bound {
        let (lo, hi) = exponent_range(m);
        return Err(CliError::Invalid(format!(
            "degree {m} is out of range: ceil(2*{m}/3 - 2) = {lo} > floor({m}/2) = {hi}, \
             so mdr cannot reach its lower bound; nearly free degrees are at most {bound}"
        )));
    }
    Ok(())
}

fn wc_json(wc: &WeakCombinatorics) -> Value {
    json!({"d": wc.d, "k": wc.k, "n2": wc.n2, "t": wc.t, "n3": wc.n3, "tau": wc.tau()})
}

fn header(out: &mut String) {
    let _ = writeln!(out, "{:>3} {:>3} {:>4} {:>4} {:>4} {:>5}", "k", "d", "n2", "t", "n3", "tau");
}

fn row(out: &mut String, wc: &WeakCombinatorics) {
    let _ = write!(out, "{:>3} {:>3} {:>4} {:>4} {:>4} {:>5}", wc.k, wc.d, wc.n2, wc.t, wc.n3, wc.tau());
}

pub fn count_table(m: usize) -> Vec<Candidate> {
    count_admissible(m)
}

pub fn count_text(m: usize, rows: &[Candidate]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "m = {m}: {} admissible weak combinatorics", rows.len());
    header(&mut out);
    for c in rows {
        row(&mut out, &c.wc);
        out.push('\n');
    }
    out
}

pub fn count_json(m: usize, rows: &[Candidate]) -> Value {
    json!({
        "schema": SCHEMA,
        "m": m,
        "mode": "count-only",
        "rows": rows.iter().map(|c| wc_json(&c.wc)).collect::<Vec<_>>(),
    })
}

/// Candidates grouped by weak combinatorics, each with its exponent pairs.
pub fn grouped(an: &DegreeAnalysis) -> Vec<(WeakCombinatorics, Vec<(usize, usize)>)> {
    let mut out: Vec<(WeakCombinatorics, Vec<(usize, usize)>)> = Vec::new();
    for c in &an.candidates {
        let e = c.exponents.expect("nearly free candidates carry exponents");
        match out.iter_mut().find(|(wc, _)| *wc == c.wc) {
            Some((_, es)) => es.push(e),
            None => out.push((c.wc, vec![e])),
        }
    }
    out
}

pub fn nearly_free_text(an: &DegreeAnalysis) -> String {
    let mut out = String::new();
    let m = an.m;
    let rows = grouped(an);
    let _ = writeln!(out, "m = {m}: {} ({} weak combinatorics)", an.status, rows.len());
    if !an.hirzebruch_active {
        let _ = writeln!(out, "Hirzebruch filter inactive (m < 6)");
    }
    if !rows.is_empty() {
        header(&mut out);
        for (wc, es) in &rows {
            row(&mut out, wc);
            let es: Vec<String> = es.iter().map(|(a, b)| format!("({a}, {b})")).collect();
            let _ = writeln!(out, "  exponents {}", es.join(", "));
        }
    }
    let _ = writeln!(out, "\ncertificate:");
    for line in an.certificate() {
        let _ = writeln!(out, "  {line}");
    }
    out
}

pub fn nearly_free_json(an: &DegreeAnalysis) -> Value {
    json!({
        "schema": SCHEMA,
        "m": an.m,
        "mode": "nearly-free",
        "status": an.status.to_string(),
        "mdr_lower_bound": mdr_lower_bound(an.m),
        "exponent_range": [an.exponent_range.0, an.exponent_range.1],
        "hirzebruch_active": an.hirzebruch_active,
        "rows": grouped(an).iter().map(|(wc, es)| {
            let mut v = wc_json(wc);
            v["exponents"] = json!(es.iter().map(|(a, b)| [a, b]).collect::<Vec<_>>());
            v
        }).collect::<Vec<_>>(),
        "branches": an.branches.iter().map(|b| json!({
            "exponents": [b.exponents.0, b.exponents.1],
            "tau": b.tau,
            "steps": b.steps.iter().map(|s| json!({
                "k": s.k, "rows": s.rows, "survivors": s.survivors, "reason": s.reason,
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "certificate": an.certificate(),
    })
}

pub fn analyze(m: usize) -> Result<DegreeAnalysis, CliError> {
    check_degree(m)?;
    Ok(analyze_degree(m))
}
