mod common;

use common::*;
use nearfree_core::arrangement::{Arrangement, ConicSpec};
use nearfree_core::singular::{group_and_classify, SingKind, SingularError, WeakCombinatorics};

fn wc(arr: &Arrangement) -> WeakCombinatorics {
    group_and_classify(arr).unwrap().1
}

#[test]
fn fixture_combinatorics() {
    assert_eq!(wc(&c3()), WeakCombinatorics::new(1, 1, 2, 0, 0));
    assert_eq!(wc(&c4()), WeakCombinatorics::new(2, 1, 2, 0, 1));
    assert_eq!(wc(&c4_prime()), WeakCombinatorics::new(2, 1, 3, 1, 0));
    assert_eq!(wc(&c5()), WeakCombinatorics::new(3, 1, 3, 0, 2));
    assert_eq!(wc(&c6()), WeakCombinatorics::new(4, 1, 2, 0, 4));
    assert_eq!(wc(&c7()), WeakCombinatorics::new(5, 1, 6, 4, 2));
}

#[test]
fn tangent_line_is_a_tacnode() {
    let (points, _) = group_and_classify(&c4_prime()).unwrap();
    let tac: Vec<_> = points.iter().filter(|p| p.kind == SingKind::Tacnode).collect();
    assert_eq!(tac.len(), 1);
    let p = tac[0].point.as_rational().unwrap();
    assert_eq!(p.map(|q| q.to_string()), ["0", "1", "1/4"]);
    assert_eq!(tac[0].branches, [0, 2]);
}

#[test]
fn tjurina_numbers_of_fixtures() {
    for (arr, tau) in [(c3(), 2), (c4(), 6), (c4_prime(), 6), (c5(), 11), (c6(), 18), (c7(), 26)] {
        assert_eq!(wc(&arr).tau(), tau);
    }
}

#[test]
fn osculating_conics_are_unsupported() {
    // y z = x^2 and y z = x^2 + x y meet only at (0:0:1), with contact order 4
    let arr = Arrangement::new(
        vec![line(1, 1, 1)],
        vec![ConicSpec::from_ints([-1, 0, 0, 0, 0, 1]), ConicSpec::from_ints([-1, 0, 0, -1, 0, 1])],
    );
    match group_and_classify(&arr) {
        Err(SingularError::UnsupportedSingularity { diagnosis, components, .. }) => {
            assert!(diagnosis.contains("A7") || diagnosis.contains("A5"), "{diagnosis}");
            assert_eq!(components, ["C1", "C2"]);
        }
        other => panic!("expected unsupported singularity, got {other:?}"),
    }
}

#[test]
fn tangency_inside_a_triple_point_is_unsupported() {
    // the tangent y = 1 to the unit circle and the line x = 0 through the contact point
    let arr = Arrangement::new(vec![line(0, 1, -1), line(1, 0, 0)], vec![circle(1)]);
    match group_and_classify(&arr) {
        Err(SingularError::UnsupportedSingularity { diagnosis, .. }) => {
            assert!(diagnosis.contains("three-branch"), "{diagnosis}")
        }
        other => panic!("expected unsupported singularity, got {other:?}"),
    }
}

#[test]
fn four_concurrent_lines_are_unsupported() {
    let arr = Arrangement::new(
        vec![line(1, 0, 0), line(0, 1, 0), line(1, 1, 0), line(1, -1, 0)],
        vec![circle(1)],
    );
    assert!(matches!(
        group_and_classify(&arr),
        Err(SingularError::UnsupportedSingularity { .. })
    ));
}

#[test]
fn complex_points_are_counted() {
    // the line z = 0 meets the circle at the two circular points (1 : ±i : 0)
    let arr = Arrangement::new(vec![line(0, 0, 1)], vec![circle(1)]);
    let (points, wc) = group_and_classify(&arr).unwrap();
    assert_eq!(wc, WeakCombinatorics::new(1, 1, 2, 0, 0));
    for mut p in points {
        assert!(!p.point.is_real().unwrap());
    }
}
