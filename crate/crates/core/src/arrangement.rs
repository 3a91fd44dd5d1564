//! Conic-line arrangements and their defining polynomials.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::exactpoly::{rat, HPoly, Rational};
use crate::linalg::determinant;

/// The line `a x + b y + c z = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LineSpec {
    pub coeffs: [Rational; 3],
}

/// The conic `A x^2 + B y^2 + C z^2 + D xy + E xz + F yz = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConicSpec {
    pub coeffs: [Rational; 6],
}

impl LineSpec {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        Self { coeffs: [a, b, c] }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Self::new(rat(a, 1), rat(b, 1), rat(c, 1))
    }

    pub fn form(&self) -> HPoly {
        HPoly::linear(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl ConicSpec {
    pub fn new(coeffs: [Rational; 6]) -> Self {
        Self { coeffs }
    }

    pub fn from_ints(c: [i64; 6]) -> Self {
        Self::new(c.map(|v| rat(v, 1)))
    }

    pub fn form(&self) -> HPoly {
        let [a, b, c, d, e, f] = self.coeffs.clone();
        HPoly::from_terms(
            2,
            [
                ([2, 0, 0], a),
                ([0, 2, 0], b),
                ([0, 0, 2], c),
                ([1, 1, 0], d),
                ([1, 0, 1], e),
                ([0, 1, 1], f),
            ],
        )
    }

    /// The symmetric matrix `Q` with `v^T Q v` equal to the conic form.
    pub fn matrix(&self) -> [[Rational; 3]; 3] {
        let [a, b, c, d, e, f] = &self.coeffs;
        let half = rat(1, 2);
        let (d2, e2, f2) = (d * &half, e * &half, f * &half);
        [
            [a.clone(), d2.clone(), e2.clone()],
            [d2, b.clone(), f2.clone()],
            [e2, f2, c.clone()],
        ]
    }

    pub fn determinant(&self) -> Rational {
        determinant(self.matrix().iter().map(|r| r.to_vec()).collect())
    }

    pub fn is_smooth(&self) -> bool {
        !self.determinant().is_zero()
    }
}

/// One irreducible component of an arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Component {
    Line(LineSpec),
    Conic(ConicSpec),
}

impl Component {
    pub fn degree(&self) -> u32 {
        match self {
            Component::Line(_) => 1,
            Component::Conic(_) => 2,
        }
    }

    pub fn form(&self) -> HPoly {
        match self {
            Component::Line(l) => l.form(),
            Component::Conic(c) => c.form(),
        }
    }
}

/// Lines and smooth conics, stored in input order.
///
/// Components are indexed lines first (`0..d`), then conics (`d..d+k`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Arrangement {
    pub lines: Vec<LineSpec>,
    pub conics: Vec<ConicSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArrangementError {
    #[error("conic C{} is degenerate (its symmetric matrix has determinant 0)", .index + 1)]
    DegenerateConic { index: usize },
    #[error("line L{} has all coefficients zero", .index + 1)]
    ZeroLine { index: usize },
    #[error("components {first} and {second} are proportional (repeated component)")]
    RepeatedComponent { first: String, second: String },
    #[error("the arrangement has no components")]
    EmptyArrangement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScopeWarning {
    NoLines,
    NoConics,
}

impl fmt::Display for ScopeWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScopeWarning::NoLines => f.write_str("d = 0: no lines; combinatorial claims assume d >= 1"),
            ScopeWarning::NoConics => f.write_str("k = 0: no conics; combinatorial claims assume k >= 1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub d: usize,
    pub k: usize,
    pub m: usize,
    pub warnings: Vec<ScopeWarning>,
}

impl ValidationReport {
    /// Both lines and conics present.
    pub fn in_scope(&self) -> bool {
        self.warnings.is_empty()
    }
}

fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    (0..a.len()).all(|i| (i + 1..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

impl Arrangement {
    pub fn new(lines: Vec<LineSpec>, conics: Vec<ConicSpec>) -> Self {
        Self { lines, conics }
    }

    pub fn d(&self) -> usize {
        self.lines.len()
    }

    pub fn k(&self) -> usize {
        self.conics.len()
    }

    /// Degree `2k + d`.
    pub fn degree(&self) -> usize {
        2 * self.k() + self.d()
    }

    pub fn num_components(&self) -> usize {
        self.d() + self.k()
    }

    pub fn component(&self, index: usize) -> Component {
        if index < self.d() {
            Component::Line(self.lines[index].clone())
        } else {
            Component::Conic(self.conics[index - self.d()].clone())
        }
    }

    pub fn components(&self) -> impl Iterator<Item = Component> + '_ {
        (0..self.num_components()).map(move |i| self.component(i))
    }

    /// `L1..Ld` for lines, `C1..Ck` for conics.
    pub fn label(&self, index: usize) -> String {
        if index < self.d() {
            alloc::format!("L{}", index + 1)
        } else {
            alloc::format!("C{}", index - self.d() + 1)
        }
    }

    pub fn validate(&self) -> Result<ValidationReport, ArrangementError> {
        if self.num_components() == 0 {
            return Err(ArrangementError::EmptyArrangement);
        }
        for (i, l) in self.lines.iter().enumerate() {
            if l.is_zero() {
                return Err(ArrangementError::ZeroLine { index: i });
            }
        }
        for (i, c) in self.conics.iter().enumerate() {
            if !c.is_smooth() {
                return Err(ArrangementError::DegenerateConic { index: i });
            }
        }
        for i in 0..self.d() {
            for j in i + 1..self.d() {
                if proportional(&self.lines[i].coeffs, &self.lines[j].coeffs) {
                    return Err(self.repeated(i, j));
                }
            }
        }
        for i in 0..self.k() {
            for j in i + 1..self.k() {
                if proportional(&self.conics[i].coeffs, &self.conics[j].coeffs) {
                    return Err(self.repeated(self.d() + i, self.d() + j));
                }
            }
        }
        let mut warnings = Vec::new();
        if self.d() == 0 {
            warnings.push(ScopeWarning::NoLines);
        }
        if self.k() == 0 {
            warnings.push(ScopeWarning::NoConics);
        }
        Ok(ValidationReport {
            d: self.d(),
            k: self.k(),
            m: self.degree(),
            warnings,
        })
    }

    fn repeated(&self, a: usize, b: usize) -> ArrangementError {
        ArrangementError::RepeatedComponent {
            first: self.label(a),
            second: self.label(b),
        }
    }

    /// Product of all component forms, homogeneous of degree `2k + d`.
    pub fn defining_polynomial(&self) -> Result<HPoly, ArrangementError> {
        self.validate()?;
        let one = HPoly::monomial([0, 0, 0], rat(1, 1));
        Ok(self.components().fold(one, |acc, c| &acc * &c.form()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, Var};
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    pub(crate) fn c3() -> Arrangement {
        Arrangement::new(vec![LineSpec::from_ints(-1, 1, 4)], vec![ConicSpec::from_ints([1, 1, -16, 0, 0, 0])])
    }

    #[test]
    fn validates_the_degree_three_example() {
        let rep = c3().validate().unwrap();
        assert_eq!((rep.d, rep.k, rep.m), (1, 1, 3));
        assert!(rep.in_scope());
    }

    #[test]
    fn degenerate_and_repeated_components() {
        let bad = Arrangement::new(vec![LineSpec::from_ints(1, 0, 0)], vec![ConicSpec::from_ints([1, 1, 2, 2, 0, 0])]);
        assert_eq!(bad.validate(), Err(ArrangementError::DegenerateConic { index: 0 }));
        let twice = Arrangement::new(
            vec![LineSpec::from_ints(1, 2, 3), LineSpec::from_ints(1, 2, 3)],
            vec![ConicSpec::from_ints([1, 1, -1, 0, 0, 0])],
        );
        assert!(matches!(twice.validate(), Err(ArrangementError::RepeatedComponent { .. })));
        let scaled = Arrangement::new(
            vec![LineSpec::from_ints(1, 0, 0)],
            vec![ConicSpec::from_ints([1, 1, -1, 0, 0, 0]), ConicSpec::from_ints([-2, -2, 2, 0, 0, 0])],
        );
        assert!(matches!(scaled.validate(), Err(ArrangementError::RepeatedComponent { .. })));
        assert_eq!(Arrangement::default().validate(), Err(ArrangementError::EmptyArrangement));
    }

    #[test]
    fn scope_warnings() {
        let only_conic = Arrangement::new(vec![], vec![ConicSpec::from_ints([1, 1, -1, 0, 0, 0])]);
        assert_eq!(only_conic.validate().unwrap().warnings, [ScopeWarning::NoLines]);
    }

    #[test]
    fn defining_polynomials() {
        let f = c3().defining_polynomial().unwrap();
        assert_eq!(f.degree(), 3);
        let x = HPoly::var(Var::X);
        let y = HPoly::var(Var::Y);
        let z = HPoly::var(Var::Z);
        let conic = &(&(&x * &x) + &(&y * &y)) - &(&z * &z).scale(&int(16));
        let line = &(&y - &x) + &z.scale(&int(4));
        assert_eq!(f, &conic * &line);

        let simple = Arrangement::new(vec![LineSpec::from_ints(1, 0, 0)], vec![ConicSpec::from_ints([1, 1, 1, 0, 0, 0])]);
        assert_eq!(simple.defining_polynomial().unwrap().to_string(), "x^3 + x*y^2 + x*z^2");
    }

    proptest! {
        #[test]
        fn product_is_order_independent_and_vanishes_on_lines(
            ls in proptest::collection::vec((-4i64..=4, -4i64..=4, 1i64..=4), 1..4),
            t in -5i64..=5,
        ) {
            let mut lines: Vec<LineSpec> = Vec::new();
            for (a, b, c) in ls {
                let l = LineSpec::from_ints(a, b, c);
                if lines.iter().all(|o| !proportional(&o.coeffs, &l.coeffs)) {
                    lines.push(l);
                }
            }
            let conic = ConicSpec::from_ints([1, 2, -3, 0, 1, 0]);
            let arr = Arrangement::new(lines.clone(), vec![conic.clone()]);
            let f = arr.defining_polynomial().unwrap();
            prop_assert_eq!(f.degree() as usize, arr.degree());
            let mut rev = lines.clone();
            rev.reverse();
            prop_assert_eq!(&Arrangement::new(rev, vec![conic]).defining_polynomial().unwrap(), &f);
            // (x : y : z) = (c t, c, -(a t + b)) lies on a x + b y + c z = 0
            for l in &lines {
                let [a, b, c] = l.coeffs.clone();
                let tq = int(t);
                let p = [&c * &tq, c.clone(), -(&a * &tq + &b)];
                prop_assert!(f.eval(&p).is_zero());
            }
        }
    }
}
