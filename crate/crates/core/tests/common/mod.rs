#![allow(dead_code)]

use nearfree_core::arrangement::{Arrangement, ConicSpec, LineSpec};

pub fn circle(r2: i64) -> ConicSpec {
    ConicSpec::from_ints([1, 1, -r2, 0, 0, 0])
}

pub fn line(a: i64, b: i64, c: i64) -> LineSpec {
    LineSpec::from_ints(a, b, c)
}

/// Circle of radius 4 with y = x - 4.
pub fn c3() -> Arrangement {
    Arrangement::new(vec![line(-1, 1, 4)], vec![circle(16)])
}

/// Circle of radius 4 with y = x + 4 and y = -x + 4.
pub fn c4() -> Arrangement {
    Arrangement::new(vec![line(-1, 1, -4), line(1, 1, -4)], vec![circle(16)])
}

/// Circle of radius 4 with the tangent y = 4 and the diameter y = x.
pub fn c4_prime() -> Arrangement {
    Arrangement::new(vec![line(0, 1, -4), line(-1, 1, 0)], vec![circle(16)])
}

/// Circle of radius 4 with y = x - 4, y = -x + 4 and y = x + 4.
pub fn c5() -> Arrangement {
    Arrangement::new(vec![line(-1, 1, 4), line(1, 1, -4), line(-1, 1, -4)], vec![circle(16)])
}

/// [`c5`] plus y = -x - 4.
pub fn c6() -> Arrangement {
    Arrangement::new(
        vec![line(-1, 1, 4), line(1, 1, -4), line(-1, 1, -4), line(1, 1, 4)],
        vec![circle(16)],
    )
}

/// Unit circle, x = ±1, y = ±1, and y = -x.
pub fn c7() -> Arrangement {
    Arrangement::new(
        vec![line(1, 0, -1), line(1, 0, 1), line(0, 1, -1), line(0, 1, 1), line(1, 1, 0)],
        vec![circle(1)],
    )
}
