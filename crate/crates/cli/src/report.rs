//! The `analyze` report: geometry, syzygies, verdict and consistency checks.

use std::fmt::Write as _;

use nearfree_core::arrangement::{Arrangement, ScopeWarning};
use nearfree_core::combinat::{hirzebruch_holds, hirzebruch_slack, mdr_lower_bound, Hirzebruch};
use nearfree_core::exactpoly::{fmt_rational, HPoly};
use nearfree_core::jacobian::{syzygy_report, verify_relation, JacobianError, SyzygyReport};
use nearfree_core::singular::{check_count, group_and_classify, SingPoint, SingularError, WeakCombinatorics};
use serde_json::{json, Value};

use crate::CliError;

pub const SCHEMA: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    fn label(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct PointSummary {
    pub kind: String,
    pub point: String,
    pub real: bool,
    pub branches: Vec<String>,
    pub multiplicities: Vec<(String, String, u32)>,
}

#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub arrangement: Arrangement,
    pub polynomial: HPoly,
    pub warnings: Vec<ScopeWarning>,
    pub points: Vec<PointSummary>,
    pub wc: WeakCombinatorics,
    pub tau_local: usize,
    pub syzygy: SyzygyReport,
    pub witness_verified: bool,
    pub checks: Vec<Check>,
}

impl AnalysisReport {
    pub fn consistent(&self) -> bool {
        self.tau_local == self.syzygy.tau
            && self.witness_verified
            && self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

fn summarize(arr: &Arrangement, p: &SingPoint) -> Result<PointSummary, CliError> {
    let mut point = p.point.clone();
    let real = point.is_real().map_err(|e| CliError::Inconsistent(e.to_string()))?;
    Ok(PointSummary {
        kind: p.kind.to_string(),
        point: p.point.to_string(),
        real,
        branches: p.branches.iter().map(|&b| arr.label(b)).collect(),
        multiplicities: p
            .multiplicities
            .iter()
            .map(|&((a, b), mu)| (arr.label(a), arr.label(b), mu))
            .collect(),
    })
}

fn checks(wc: &WeakCombinatorics, mdr: usize, in_scope: bool) -> Vec<Check> {
    let m = wc.m();
    let skip = |name| Check {
        name,
        status: CheckStatus::Skipped,
        detail: "needs at least one line and one conic".into(),
    };
    let verdict = |ok: bool| if ok { CheckStatus::Pass } else { CheckStatus::Fail };
    let count = Check {
        name: "count",
        status: verdict(check_count(wc)),
        detail: format!(
            "binom({m}, 2) - k = {} and n2 + 2t + 3n3 = {}",
            m * (m - 1) / 2 - wc.k,
            wc.n2 + 2 * wc.t + 3 * wc.n3
        ),
    };
    if !in_scope {
        return vec![count, skip("mdr lower bound"), skip("Hirzebruch")];
    }
    let lb = mdr_lower_bound(m);
    let bound = Check {
        name: "mdr lower bound",
        status: verdict(mdr >= lb),
        detail: format!("mdr = {mdr} >= ceil(2*{m}/3 - 2) = {lb}"),
    };
    let slack = fmt_rational(&hirzebruch_slack(wc));
    let hirz = match hirzebruch_holds(wc) {
        Hirzebruch::NotApplicable => Check {
            name: "Hirzebruch",
            status: CheckStatus::Skipped,
            detail: format!("only claimed for m >= 6 (m = {m})"),
        },
        h => Check {
            name: "Hirzebruch",
            status: verdict(h.passes()),
            detail: format!("8k + n2 + 3/4 n3 - d - 5/2 t = {slack} >= 0"),
        },
    };
    vec![count, bound, hirz]
}

fn singular_error(e: SingularError) -> CliError {
    match e {
        SingularError::Arrangement(e) => CliError::Invalid(e.to_string()),
        e @ SingularError::UnsupportedSingularity { .. } => CliError::Unsupported(e.to_string()),
        e => CliError::Inconsistent(e.to_string()),
    }
}

fn jacobian_error(e: JacobianError) -> CliError {
    match e {
        JacobianError::ConstantPolynomial | JacobianError::ZeroPolynomial => CliError::Invalid(e.to_string()),
        e => CliError::Inconsistent(e.to_string()),
    }
}

pub fn analyze(arr: Arrangement) -> Result<AnalysisReport, CliError> {
    let validation = arr.validate().map_err(|e| CliError::Invalid(e.to_string()))?;
    let polynomial = arr.defining_polynomial().map_err(|e| CliError::Invalid(e.to_string()))?;
    let (sing, wc) = group_and_classify(&arr).map_err(singular_error)?;
    let points = sing.iter().map(|p| summarize(&arr, p)).collect::<Result<_, _>>()?;
    let syzygy = syzygy_report(&polynomial).map_err(jacobian_error)?;
    let witness_verified = verify_relation(&polynomial, &syzygy.relation.witness);
    let checks = checks(&wc, syzygy.mdr(), validation.in_scope());
    Ok(AnalysisReport {
        tau_local: wc.tau(),
        arrangement: arr,
        polynomial,
        warnings: validation.warnings,
        points,
        wc,
        syzygy,
        witness_verified,
        checks,
    })
}

fn component_strings(arr: &Arrangement) -> Vec<(String, String)> {
    arr.components()
        .enumerate()
        .map(|(i, c)| (arr.label(i), c.form().to_string()))
        .collect()
}

pub fn render_text(rep: &AnalysisReport) -> String {
    let arr = &rep.arrangement;
    let syz = &rep.syzygy;
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "arrangement: d = {} lines, k = {} conics, m = {}", arr.d(), arr.k(), arr.degree());
    for (label, form) in component_strings(arr) {
        let _ = writeln!(w, "  {label}: {form}");
    }
    let _ = writeln!(w, "f = {}", rep.polynomial);
    for warning in &rep.warnings {
        let _ = writeln!(w, "warning: {warning}");
    }
    let _ = writeln!(w, "\nsingular points ({}):", rep.points.len());
    for p in &rep.points {
        let place = if p.real { "real" } else { "complex" };
        let _ = writeln!(w, "  {:<12} {} [{place}] on {}", p.kind, p.point, p.branches.join(", "));
        if p.multiplicities.iter().any(|m| m.2 > 1) {
            let mults: Vec<String> = p.multiplicities.iter().map(|(a, b, mu)| format!("i({a}, {b}) = {mu}")).collect();
            let _ = writeln!(w, "  {:<12} {}", "", mults.join(", "));
        }
    }
    let _ = writeln!(w, "\nweak combinatorics: {}", rep.wc);
    let _ = writeln!(w, "tau from local types (n2 + 3t + 4n3): {}", rep.tau_local);
    let dims: Vec<String> = syz.milnor_dims.iter().map(|(k, v)| format!("dim M(f)_{k} = {v}")).collect();
    let _ = writeln!(w, "tau from the Milnor algebra:           {} ({})", syz.tau, dims.join(", "));
    let rel = &syz.relation;
    let _ = writeln!(w, "mdr = {}", rel.mdr);
    let _ = writeln!(
        w,
        "  witness: ({}) * f_x + ({}) * f_y + ({}) * f_z = 0  [{}]",
        rel.witness[0],
        rel.witness[1],
        rel.witness[2],
        if rep.witness_verified { "verified" } else { "NOT VERIFIED" }
    );
    if syz.koszul_only() {
        let _ = writeln!(w, "  only relations of Koszul degree m - 1 exist");
    }
    let v = &syz.verdict;
    let m1 = (v.m - 1) as i64;
    let r = v.r as i64;
    let _ = writeln!(
        w,
        "\nr^2 - r(m-1) + (m-1)^2 = {} and tau + 1 = {}",
        r * r - r * m1 + m1 * m1,
        v.tau + 1
    );
    let _ = writeln!(w, "verdict: {v}");
    if let Some(shape) = v.resolution_shape() {
        let _ = writeln!(w, "resolution: {shape}");
    }
    let _ = writeln!(w, "\nchecks:");
    for c in &rep.checks {
        let _ = writeln!(w, "  [{}] {}: {}", c.status.label(), c.name, c.detail);
    }
    let _ = writeln!(w, "\nstatus: {}", if rep.consistent() { "CONSISTENT" } else { "INCONSISTENT" });
    out
}

fn coeff_strings<'a>(cs: impl IntoIterator<Item = &'a nearfree_core::exactpoly::Rational>) -> Vec<String> {
    cs.into_iter().map(fmt_rational).collect()
}

pub fn render_json(rep: &AnalysisReport) -> Value {
    let arr = &rep.arrangement;
    let syz = &rep.syzygy;
    let v = &syz.verdict;
    json!({
        "schema": SCHEMA,
        "arrangement": {
            "lines": arr.lines.iter().map(|l| coeff_strings(&l.coeffs)).collect::<Vec<_>>(),
            "conics": arr.conics.iter().map(|c| coeff_strings(&c.coeffs)).collect::<Vec<_>>(),
            "components": component_strings(arr)
                .into_iter()
                .map(|(label, form)| json!({"label": label, "form": form}))
                .collect::<Vec<_>>(),
            "d": arr.d(),
            "k": arr.k(),
            "m": arr.degree(),
            "polynomial": rep.polynomial.to_string(),
        },
        "warnings": rep.warnings.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "singular_points": rep.points.iter().map(|p| json!({
            "kind": p.kind,
            "point": p.point,
            "real": p.real,
            "branches": p.branches,
            "multiplicities": p.multiplicities.iter()
                .map(|(a, b, mu)| json!({"pair": [a, b], "multiplicity": mu}))
                .collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "weak_combinatorics": {
            "d": rep.wc.d, "k": rep.wc.k, "n2": rep.wc.n2, "t": rep.wc.t, "n3": rep.wc.n3,
        },
        "tau": {
            "local": rep.tau_local,
            "milnor": syz.tau,
            "milnor_dims": syz.milnor_dims.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
        },
        "mdr": {
            "value": syz.mdr(),
            "witness": syz.relation.witness.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "verified": rep.witness_verified,
            "kernel_dims": syz.relation.kernel_dims,
            "koszul_only": syz.koszul_only(),
        },
        "verdict": {
            "m": v.m,
            "r": v.r,
            "tau": v.tau,
            "nearly_free": v.nearly_free,
            "exponents": v.exponents.map(|(a, b)| vec![a, b]),
            "resolution": v.resolution_shape(),
        },
        "checks": rep.checks.iter().map(|c| json!({
            "name": c.name, "status": c.status.label(), "detail": c.detail,
        })).collect::<Vec<_>>(),
        "status": if rep.consistent() { "consistent" } else { "inconsistent" },
    })
}
