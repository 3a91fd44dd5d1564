mod common;

use common::*;
use nearfree_core::arrangement::Arrangement;
use nearfree_core::jacobian::{kernel_dim, syzygy_report, tjurina_global};
use nearfree_core::singular::group_and_classify;

/// Name, arrangement, tau, mdr, exponents.
type Fixture = (&'static str, Arrangement, usize, usize, (usize, usize));

fn fixtures() -> Vec<Fixture> {
    vec![
        ("C3", c3(), 2, 1, (1, 2)),
        ("C4", c4(), 6, 2, (2, 2)),
        ("C4'", c4_prime(), 6, 2, (2, 2)),
        ("C5", c5(), 11, 2, (2, 3)),
        ("C6", c6(), 18, 2, (2, 4)),
        ("C7", c7(), 26, 3, (3, 4)),
    ]
}

#[test]
fn fixtures_are_nearly_free() {
    for (name, arr, tau, mdr, exps) in fixtures() {
        let f = arr.defining_polynomial().unwrap();
        let rep = syzygy_report(&f).unwrap();
        assert_eq!(rep.tau, tau, "{name}");
        assert_eq!(rep.mdr(), mdr, "{name}");
        assert!(rep.verdict.nearly_free, "{name}");
        assert_eq!(rep.verdict.exponents, Some(exps), "{name}");
        assert!(!rep.koszul_only(), "{name}");
    }
}

#[test]
fn tjurina_agrees_with_local_classification() {
    for (name, arr, ..) in fixtures() {
        let (_, wc) = group_and_classify(&arr).unwrap();
        let f = arr.defining_polynomial().unwrap();
        assert_eq!(tjurina_global(&f).unwrap(), wc.tau(), "{name}");
    }
}

#[test]
fn kernel_dimension_is_monotone() {
    for (name, arr, ..) in fixtures() {
        let f = arr.defining_polynomial().unwrap();
        let m = arr.degree();
        let dims: Vec<usize> = (0..m).map(|r| kernel_dim(&f, r).unwrap()).collect();
        assert!(dims.windows(2).all(|w| w[0] <= w[1]), "{name}: {dims:?}");
        assert!(*dims.last().unwrap() > 0, "{name}");
    }
}
