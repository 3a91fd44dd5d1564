//! Admissible weak combinatorics and the nearly-free constraints on them.
//!
//! All inequalities are evaluated in exact rationals.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::exactpoly::{int, rat, Rational};
use crate::singular::{check_count, WeakCombinatorics};

/// Largest degree surviving the mdr sandwich.
pub const DEGREE_UPPER_BOUND: usize = 12;

/// Degrees the constraints used here cannot decide.
pub const OPEN_DEGREES: [usize; 2] = [8, 9];

fn binom2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Hirzebruch {
    /// Degree below 6: the inequality is not claimed.
    NotApplicable,
    Holds,
    Fails,
}

impl Hirzebruch {
    pub fn passes(self) -> bool {
        self != Hirzebruch::Fails
    }
}

/// A weak combinatorics with the constraint values recorded.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Candidate {
    pub wc: WeakCombinatorics,
    pub exponents: Option<(usize, usize)>,
    pub count_holds: bool,
    pub incidence_feasible: bool,
    /// `d1^2 + d2^2 + d1 d2 - d1 - 2 d2 = tau`, when exponents are attached.
    pub tau_identity: Option<bool>,
    /// `2(t + n3) = d1^2 + d2^2 - d1 - 3 d2 + 2k`, when exponents are attached.
    pub tacnode_identity: Option<bool>,
    pub hirzebruch: Hirzebruch,
}

impl Candidate {
    fn plain(wc: WeakCombinatorics) -> Self {
        Candidate {
            wc,
            exponents: None,
            count_holds: check_count(&wc),
            incidence_feasible: incidence_feasible(&wc),
            tau_identity: None,
            tacnode_identity: None,
            hirzebruch: hirzebruch_holds(&wc),
        }
    }

    fn key(&self) -> (usize, usize, usize, usize, Option<(usize, usize)>) {
        (self.wc.k, self.wc.n2, self.wc.t, self.wc.n3, self.exponents)
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.wc)?;
        if let Some((d1, d2)) = self.exponents {
            write!(f, " exponents ({d1}, {d2})")?;
        }
        Ok(())
    }
}

/// Most LLC triple points possible when `free` line-conic pairs are not
/// used by tacnodes: a conic crossed transversally by `x` lines carries at
/// most `min(x, binom(x, 2))` of them.
fn llc_capacity(d: usize, k: usize, free: usize) -> usize {
    let f = |x: usize| x.min(binom2(x));
    // best[s]: optimum over the conics seen so far with s free pairs
    let mut best = alloc::vec![None; free + 1];
    best[0] = Some(0);
    for _ in 0..k {
        let mut next = alloc::vec![None; free + 1];
        for (s, v) in best.iter().enumerate() {
            let Some(v) = v else { continue };
            for x in 0..=d.min(free - s) {
                let cand = v + f(x);
                if next[s + x].is_none_or(|w| cand > w) {
                    next[s + x] = Some(cand);
                }
            }
        }
        best = next;
    }
    best[free].unwrap_or(0)
}

/// Necessary condition for realising the singularities inside the
/// pairwise intersection budgets: each pair of lines meets once, a line and
/// a conic twice, two conics four times (with multiplicity).
///
/// A tacnode uses up a line-conic pair, or half of a conic-conic pair. A
/// triple point takes one unit from each of its three pairs and needs three
/// distinct components; a line tangent to a conic meets it nowhere else.
pub fn incidence_feasible(wc: &WeakCombinatorics) -> bool {
    let (d, k) = (wc.d, wc.k);
    let ll = binom2(d);
    let lc_pairs = d * k;
    let cc = 4 * binom2(k);
    for t_lc in 0..=wc.t.min(lc_pairs) {
        let t_cc = wc.t - t_lc;
        if 2 * t_cc > cc {
            continue;
        }
        let free = lc_pairs - t_lc;
        let cap_llc = llc_capacity(d, k, free);
        let cc_left = cc - 2 * t_cc;
        for a in 0..=wc.n3 {
            if 3 * a > ll {
                break;
            }
            for b in 0..=(wc.n3 - a).min(ll - 3 * a).min(cap_llc).min(free) {
                // split the rest between LCC (c) and CCC (e) triple points
                let rest = wc.n3 - a - b;
                let c_hi = rest.min(free - b);
                let c_lo = if k < 3 { rest } else { (3 * rest).saturating_sub(cc_left).div_ceil(2) };
                if c_lo <= c_hi && c_lo + 3 * (rest - c_lo) <= cc_left {
                    return true;
                }
            }
        }
    }
    false
}

/// Every `(d, k; n2, t, n3)` with `d, k >= 1`, `2k + d = m` and the
/// combinatorial count, whether or not it fits the pair budgets.
pub fn count_solutions(m: usize) -> Vec<Candidate> {
    let mut out = Vec::new();
    for k in 1..=m / 2 {
        if 2 * k >= m {
            break;
        }
        let d = m - 2 * k;
        let total = binom2(m) - k;
        for n3 in 0..=total / 3 {
            for t in 0..=(total - 3 * n3) / 2 {
                let n2 = total - 3 * n3 - 2 * t;
                out.push(Candidate::plain(WeakCombinatorics::new(d, k, n2, t, n3)));
            }
        }
    }
    out.sort_by_key(Candidate::key);
    out
}

/// Solutions of the combinatorial count that also pass
/// [`incidence_feasible`], sorted by `(k, n2, t, n3)`.
pub fn count_admissible(m: usize) -> Vec<Candidate> {
    count_solutions(m).into_iter().filter(|c| c.incidence_feasible).collect()
}

/// `ceil(2m/3 - 2)`, never below zero.
pub fn mdr_lower_bound(m: usize) -> usize {
    let v = rat(2 * m as i64, 3) - int(2);
    let c = v.ceil().to_integer();
    c.to_usize().unwrap_or(0)
}

/// `8k + n2 + 3/4 n3 >= d + 5/2 t`, claimed only for degree at least 6.
pub fn hirzebruch_holds(wc: &WeakCombinatorics) -> Hirzebruch {
    if wc.m() < 6 {
        return Hirzebruch::NotApplicable;
    }
    if hirzebruch_slack(wc) >= Rational::from_integer(0.into()) {
        Hirzebruch::Holds
    } else {
        Hirzebruch::Fails
    }
}

/// `8k + n2 + 3/4 n3 - d - 5/2 t`.
pub fn hirzebruch_slack(wc: &WeakCombinatorics) -> Rational {
    let q = |v: usize| int(v as i64);
    q(8 * wc.k) + q(wc.n2) + rat(3, 4) * q(wc.n3) - q(wc.d) - rat(5, 2) * q(wc.t)
}

/// Range of the smaller exponent: `max(1, ceil(2m/3 - 2)) ..= floor(m/2)`.
///
/// `d1 = 0` would make the partials dependent, which a smooth conic rules out.
pub fn exponent_range(m: usize) -> (usize, usize) {
    (mdr_lower_bound(m).max(1), m / 2)
}

/// `d1^2 + d2^2 + d1 d2 - d1 - 2 d2`: the Tjurina number forced by exponents.
pub fn tau_from_exponents(d1: usize, d2: usize) -> i64 {
    let (a, b) = (d1 as i64, d2 as i64);
    a * a + b * b + a * b - a - 2 * b
}

fn tacnode_identity(wc: &WeakCombinatorics, d1: usize, d2: usize) -> bool {
    let lhs = 2 * (wc.t + wc.n3) as i64;
    let (a, b) = (d1 as i64, d2 as i64);
    lhs == a * a + b * b - a - 3 * b + 2 * wc.k as i64
}

/// Rows of [`count_admissible`] compatible with some exponent pair, one
/// entry per (row, exponents), sorted by `(k, n2, t, n3)`.
pub fn nearly_free_candidates(m: usize) -> Vec<Candidate> {
    analyze_degree(m).candidates
}

/// Largest `m` with `ceil(2m/3 - 2) <= floor(m/2)`.
pub fn degree_upper_bound() -> usize {
    // past m = 18 the gap 2m/3 - 2 - m/2 exceeds 1, so nothing is feasible
    (3..=18)
        .filter(|&m| exponent_range(m).0 <= exponent_range(m).1)
        .max()
        .expect("m = 3 is feasible")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeStatus {
    /// Candidates survive; realisability is a separate question.
    Candidates,
    /// Candidates survive and the constraints here cannot decide existence.
    Open,
    /// No weak combinatorics survives.
    NonExistence,
}

impl fmt::Display for DegreeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegreeStatus::Candidates => "CANDIDATES",
            DegreeStatus::Open => "OPEN",
            DegreeStatus::NonExistence => "NON-EXISTENCE",
        })
    }
}

/// What happened to one exponent pair `(d1, d2)` for one number of conics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchStep {
    pub k: usize,
    /// Rows satisfying the count and the forced Tjurina number.
    pub rows: usize,
    pub survivors: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentBranch {
    pub exponents: (usize, usize),
    pub tau: i64,
    pub steps: Vec<BranchStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeAnalysis {
    pub m: usize,
    pub mdr_lower_bound: usize,
    pub exponent_range: (usize, usize),
    pub hirzebruch_active: bool,
    pub branches: Vec<ExponentBranch>,
    pub candidates: Vec<Candidate>,
    pub status: DegreeStatus,
}

impl DegreeAnalysis {
    /// Human-readable justification, one line per eliminated branch.
    pub fn certificate(&self) -> Vec<String> {
        let m = self.m;
        let (lo, hi) = self.exponent_range;
        let mut lines = Vec::new();
        lines.push(format!(
            "mdr >= ceil(2*{m}/3 - 2) = {}, and d1 <= floor({m}/2) = {hi}",
            self.mdr_lower_bound
        ));
        if lo > hi {
            lines.push(format!("{lo} > {hi}: no exponent pair (d1, d2) is possible"));
            return lines;
        }
        for b in &self.branches {
            let (d1, d2) = b.exponents;
            lines.push(format!("exponents ({d1}, {d2}) force tau = {}", b.tau));
            for s in &b.steps {
                lines.push(format!("  k = {}: {}", s.k, s.reason));
            }
        }
        lines
    }
}

/// Coarse Hirzebruch bound on `t` from `n2 + 3/4 n3 <= n2 + n3`.
fn coarse_t_bound(k: usize, d: usize, b: usize) -> Option<usize> {
    let v = rat(2, 5) * (int(8 * k as i64) + int(b as i64) - int(d as i64));
    (v >= int(0)).then(|| v.floor().to_integer().to_usize().unwrap_or(0))
}

/// Full per-degree analysis: candidates and the reason each branch dies.
pub fn analyze_degree(m: usize) -> DegreeAnalysis {
    let (lo, hi) = exponent_range(m);
    let hirzebruch_active = m >= 6;
    let solutions = count_solutions(m);
    let mut branches = Vec::new();
    let mut candidates = Vec::new();
    for d1 in lo..=hi {
        let d2 = m - d1;
        let tau = tau_from_exponents(d1, d2);
        let mut steps = Vec::new();
        for k in (1..).take_while(|k| 2 * k < m) {
            let d = m - 2 * k;
            let rows: Vec<&Candidate> = solutions
                .iter()
                .filter(|c| c.wc.k == k && c.wc.tau() as i64 == tau)
                .collect();
            let mut survivors = 0;
            let mut infeasible = 0;
            let mut best_failure: Option<(Rational, WeakCombinatorics)> = None;
            for row in &rows {
                let tac = tacnode_identity(&row.wc, d1, d2);
                assert!(tac, "tacnode identity fails for {}", row.wc);
                if !row.hirzebruch.passes() {
                    let slack = hirzebruch_slack(&row.wc);
                    if best_failure.as_ref().is_none_or(|(s, _)| slack > *s) {
                        best_failure = Some((slack, row.wc));
                    }
                } else if !row.incidence_feasible {
                    infeasible += 1;
                } else {
                    survivors += 1;
                    candidates.push(Candidate {
                        exponents: Some((d1, d2)),
                        tau_identity: Some(true),
                        tacnode_identity: Some(tac),
                        ..(*row).clone()
                    });
                }
            }
            // the count and tau give t + n3 = a and n2 + n3 = b
            let twice_a = (d1 * d1 + d2 * d2 + 2 * k) as i64 - (d1 + 3 * d2) as i64;
            let a = twice_a / 2;
            let b = binom2(m) as i64 - k as i64 - twice_a;
            let reason = if rows.is_empty() {
                if twice_a < 0 || twice_a.is_odd() {
                    format!("2(t + n3) = {twice_a} has no nonnegative integer solution")
                } else {
                    format!("t + n3 = {a} and n2 + n3 = {b}: no nonnegative solution")
                }
            } else {
                let (a, b) = (a as usize, b as usize);
                let failed = rows.len() - survivors - infeasible;
                let coarse = coarse_t_bound(k, d, b).filter(|t| t + b < a);
                let mut parts = alloc::vec![format!("t + n3 = {a}, n2 + n3 = {b}, {} row(s)", rows.len())];
                match (coarse, &best_failure) {
                    (Some(tb), _) if failed == rows.len() => parts.push(format!(
                        "Hirzebruch gives t <= floor(2/5 * ({} + {b} - {d})) = {tb}, so t + n3 <= {} < {a} (margin {})",
                        8 * k,
                        tb + b,
                        a - tb - b
                    )),
                    (_, Some((slack, wc))) => parts.push(format!(
                        "Hirzebruch fails on {failed}, largest slack {} at (n2, t, n3) = ({}, {}, {})",
                        crate::exactpoly::fmt_rational(slack),
                        wc.n2,
                        wc.t,
                        wc.n3
                    )),
                    _ => {}
                }
                if infeasible > 0 {
                    parts.push(format!("{infeasible} exceed the pairwise intersection budgets"));
                }
                parts.push(format!("{survivors} survive"));
                parts.join("; ")
            };
            steps.push(BranchStep {
                k,
                rows: rows.len(),
                survivors,
                reason,
            });
        }
        branches.push(ExponentBranch {
            exponents: (d1, d2),
            tau,
            steps,
        });
    }
    candidates.sort_by_key(Candidate::key);
    let status = if candidates.is_empty() {
        DegreeStatus::NonExistence
    } else if OPEN_DEGREES.contains(&m) {
        DegreeStatus::Open
    } else {
        DegreeStatus::Candidates
    };
    DegreeAnalysis {
        m,
        mdr_lower_bound: mdr_lower_bound(m),
        exponent_range: (lo, hi),
        hirzebruch_active,
        branches,
        candidates,
        status,
    }
}
