mod common;

use common::*;
use nearfree_core::combinat::*;
use nearfree_core::singular::{group_and_classify, WeakCombinatorics};

fn tau_rows(m: usize, tau: usize) -> Vec<WeakCombinatorics> {
    count_solutions(m)
        .into_iter()
        .map(|c| c.wc)
        .filter(|wc| wc.tau() == tau)
        .collect()
}

#[test]
fn degree_ten_structure_before_hirzebruch() {
    let rows = tau_rows(10, 60);
    assert!(!rows.is_empty());
    for wc in &rows {
        assert_eq!(wc.t + wc.n3, 15 + wc.k);
        assert_eq!(wc.t, 4 * wc.k + wc.n2);
        assert_eq!(wc.n2 + wc.n3, 15 - 3 * wc.k);
        assert!((1..=4).contains(&wc.k));
        // Hirzebruch reduces to 5 >= 9k + 9 n2
        assert_eq!(hirzebruch_holds(wc) == Hirzebruch::Holds, 5 >= 9 * wc.k + 9 * wc.n2);
    }
    assert!(nearly_free_candidates(10).is_empty());
}

#[test]
fn degree_twelve_structure_before_hirzebruch() {
    let rows = tau_rows(12, 90);
    let ks: std::collections::BTreeSet<usize> = rows.iter().map(|wc| wc.k).collect();
    assert_eq!(ks.into_iter().collect::<Vec<_>>(), [1, 2, 3, 4, 5]);
    for wc in &rows {
        assert_eq!(2 * (wc.t + wc.n3), 48 + 2 * wc.k);
        assert_eq!(wc.n2 + wc.n3, 18 - 3 * wc.k);
        assert_eq!(hirzebruch_holds(wc), Hirzebruch::Fails);
    }
    let cert = analyze_degree(12).certificate().join("\n");
    // exact floors of 2/5 (7k + 6)
    for (k, t) in [(1, 5), (2, 8), (3, 10), (4, 13), (5, 16)] {
        assert!(cert.contains(&format!("k = {k}: ")), "{cert}");
        assert!(cert.contains(&format!(") = {t}, so")), "{cert}");
    }
}

#[test]
fn degree_eleven_has_no_exponents() {
    let a = analyze_degree(11);
    assert_eq!(a.exponent_range, (6, 5));
    assert!(a.branches.is_empty());
    assert!(a.certificate().iter().any(|l| l.contains("6 > 5")));
}

#[test]
fn open_degrees_have_candidates() {
    for m in OPEN_DEGREES {
        let a = analyze_degree(m);
        assert_eq!(a.status, DegreeStatus::Open);
        assert!(!a.candidates.is_empty());
    }
}

#[test]
fn survivors_satisfy_every_constraint() {
    for m in 3..=12 {
        let admissible = count_admissible(m);
        for c in nearly_free_candidates(m) {
            let (d1, d2) = c.exponents.unwrap();
            assert_eq!(d1 + d2, m);
            assert!(d1 <= d2 && d1 >= mdr_lower_bound(m));
            assert_eq!(c.tacnode_identity, Some(true));
            assert!(c.count_holds && c.incidence_feasible && c.hirzebruch.passes());
            assert!(admissible.iter().any(|a| a.wc == c.wc));
            assert_eq!(tau_from_exponents(d1, d2), c.wc.tau() as i64);
        }
    }
}

#[test]
fn fixtures_appear_among_candidates() {
    for arr in [c3(), c4(), c4_prime(), c5(), c6(), c7()] {
        let (_, wc) = group_and_classify(&arr).unwrap();
        assert!(
            nearly_free_candidates(wc.m()).iter().any(|c| c.wc == wc),
            "{wc} missing"
        );
    }
}

#[test]
fn sandwich_identity_over_all_degrees() {
    for m in 3..=12usize {
        for d1 in 0..=m / 2 {
            let (mi, r) = (m as i64, d1 as i64);
            assert_eq!(
                r * r - r * (mi - 1) + (mi - 1) * (mi - 1) - 1,
                tau_from_exponents(d1, m - d1)
            );
        }
    }
    assert_eq!(degree_upper_bound(), 12);
    assert!(exponent_range(13).0 > exponent_range(13).1);
}

#[test]
fn candidates_are_sorted() {
    for m in 3..=9 {
        let keys: Vec<_> = nearly_free_candidates(m)
            .iter()
            .map(|c| (c.wc.k, c.wc.n2, c.wc.t, c.wc.n3))
            .collect();
        assert!(keys.windows(2).all(|w| w[0] <= w[1]));
    }
}
