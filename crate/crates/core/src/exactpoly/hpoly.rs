use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{fmt_rational, NfElem, NumberField, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Exponent triple of `x^i y^j z^k`.
///
/// Ordered graded-lexicographically with `x > y > z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.0[0].cmp(&other.0[0]))
            .then(self.0[1].cmp(&other.0[1]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `degree`, largest first.
pub fn monomials_of_degree(degree: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(((degree + 1) * (degree + 2) / 2) as usize);
    for i in (0..=degree).rev() {
        for j in (0..=degree - i).rev() {
            out.push(Monomial([i, j, degree - i - j]));
        }
    }
    out
}

/// Position of `mono` in [`monomials_of_degree`] for its own degree.
pub fn monomial_index(mono: &Monomial) -> usize {
    let d = mono.degree() as usize;
    let (i, j) = (mono.0[0] as usize, mono.0[1] as usize);
    (d - i) * (d - i + 1) / 2 + (d - i - j)
}

/// Homogeneous polynomial in `x, y, z` with rational coefficients.
///
/// Every stored monomial has total degree `degree` and a nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HPoly {
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl HPoly {
    pub fn zero(degree: u32) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a form from `(exponents, coefficient)` pairs; repeated
    /// monomials are summed. Panics if the exponents are not all of the
    /// same degree.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = ([u32; 3], Rational)>) -> Self {
        let mut out = Self::zero(degree);
        for (e, c) in terms {
            out.add_term(Monomial(e), c);
        }
        out
    }

    pub fn monomial(exps: [u32; 3], c: Rational) -> Self {
        Self::from_terms(exps.iter().sum(), [(exps, c)])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Self::monomial(e, Rational::one())
    }

    /// `a x + b y + c z`.
    pub fn linear(coeffs: &[Rational; 3]) -> Self {
        Self::from_terms(
            1,
            [
                ([1, 0, 0], coeffs[0].clone()),
                ([0, 1, 0], coeffs[1].clone()),
                ([0, 0, 1], coeffs[2].clone()),
            ],
        )
    }

    fn add_term(&mut self, mono: Monomial, c: Rational) {
        assert_eq!(mono.degree(), self.degree, "inhomogeneous term");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: [u32; 3]) -> Rational {
        self.terms
            .get(&Monomial(exps))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Terms from the smallest monomial to the largest.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn partial(&self, var: Var) -> Self {
        let v = var.index();
        let mut out = Self::zero(self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.0[v];
            if e == 0 {
                continue;
            }
            let mut exps = m.0;
            exps[v] -= 1;
            out.add_term(Monomial(exps), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::monomial([0, 0, 0], Rational::one()), |acc, _| &acc * self)
    }

    pub fn eval(&self, point: &[Rational; 3]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[v];
                }
            }
            acc += t;
        }
        acc
    }

    /// Evaluation at a point with coordinates in a number field.
    pub fn eval_in(&self, field: &NumberField, point: &[NfElem; 3]) -> NfElem {
        let mut powers: [Vec<NfElem>; 3] = Default::default();
        for (v, pw) in powers.iter_mut().enumerate() {
            pw.push(field.one());
            for k in 1..=self.degree as usize {
                let next = field.mul(&pw[k - 1], &point[v]);
                pw.push(next);
            }
        }
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = field.from_rational(c.clone());
            for v in 0..3 {
                t = field.mul(&t, &powers[v][m.0[v] as usize]);
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Substitutes linear forms for `x, y, z`.
    pub fn substitute_linear(&self, forms: &[HPoly; 3]) -> Self {
        assert!(forms.iter().all(|f| f.degree == 1), "substitution requires linear forms");
        let mut powers: [Vec<HPoly>; 3] = Default::default();
        for (v, pw) in powers.iter_mut().enumerate() {
            pw.push(HPoly::monomial([0, 0, 0], Rational::one()));
            for k in 1..=self.degree as usize {
                let next = &pw[k - 1] * &forms[v];
                pw.push(next);
            }
        }
        let mut out = Self::zero(self.degree);
        for (m, c) in &self.terms {
            let prod = &(&powers[0][m.0[0] as usize] * &powers[1][m.0[1] as usize])
                * &powers[2][m.0[2] as usize];
            out = &out + &prod.scale(c);
        }
        out
    }

    /// Dense coefficient vector in the basis [`monomials_of_degree`].
    pub fn dense_coeffs(&self) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); ((self.degree + 1) * (self.degree + 2) / 2) as usize];
        for (m, c) in &self.terms {
            out[monomial_index(m)] = c.clone();
        }
        out
    }

    /// Inverse of [`HPoly::dense_coeffs`].
    pub fn from_dense(degree: u32, coeffs: &[Rational]) -> Self {
        let basis = monomials_of_degree(degree);
        assert_eq!(basis.len(), coeffs.len(), "dense vector length mismatch");
        Self::from_terms(degree, basis.iter().zip(coeffs).map(|(m, c)| (m.0, c.clone())))
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let constant = m.degree() == 0;
            let mut parts: Vec<alloc::string::String> = Vec::new();
            if !a.is_one() || constant {
                parts.push(fmt_rational(&a));
            }
            for (v, name) in ["x", "y", "z"].iter().enumerate() {
                match m.0[v] {
                    0 => {}
                    1 => parts.push((*name).into()),
                    e => parts.push(alloc::format!("{name}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &HPoly {
    type Output = HPoly;
    fn add(self, rhs: &HPoly) -> HPoly {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        assert_eq!(self.degree, rhs.degree, "sum of forms of different degree");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Sub for &HPoly {
    type Output = HPoly;
    fn sub(self, rhs: &HPoly) -> HPoly {
        self + &(-rhs)
    }
}

impl Mul for &HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &HPoly) -> HPoly {
        let mut out = HPoly::zero(self.degree + rhs.degree);
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                out.add_term(ma.mul(mb), a * b);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::int;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn x() -> HPoly {
        HPoly::var(Var::X)
    }
    fn y() -> HPoly {
        HPoly::var(Var::Y)
    }
    fn z() -> HPoly {
        HPoly::var(Var::Z)
    }

    fn circle16() -> HPoly {
        &(&(&x() * &x()) + &(&y() * &y())) - &(&z() * &z()).scale(&int(16))
    }

    #[test]
    fn partials_follow_the_monomial_rule() {
        let c = circle16();
        assert_eq!(c.partial(Var::X), x().scale(&int(2)));
        assert_eq!(c.partial(Var::Z), z().scale(&int(-32)));
        let k = HPoly::monomial([0, 0, 0], int(5));
        assert!(k.partial(Var::X).is_zero());
    }

    #[test]
    fn grlex_order_and_rendering() {
        assert_eq!(circle16().to_string(), "x^2 + y^2 - 16*z^2");
        let m = monomials_of_degree(2);
        let names: Vec<[u32; 3]> = m.iter().map(|m| m.0).collect();
        assert_eq!(
            names,
            [[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]]
        );
        for (i, mono) in monomials_of_degree(7).iter().enumerate() {
            assert_eq!(monomial_index(mono), i);
        }
        let f = HPoly::from_terms(3, [([1, 1, 1], crate::exactpoly::rat(-1, 2)), ([3, 0, 0], int(1))]);
        assert_eq!(f.to_string(), "x^3 - 1/2*x*y*z");
    }

    #[test]
    fn degree_seven_product_partials_vanish_at_a_triple_point() {
        // (x^2+y^2-z^2)(x^2-z^2)(y^2-z^2)(y+x)
        let sq = |a: &HPoly| a * a;
        let f = &(&(&(&sq(&x()) + &sq(&y())) - &sq(&z())) * &(&sq(&x()) - &sq(&z())))
            * &(&(&sq(&y()) - &sq(&z())) * &(&y() + &x()));
        assert_eq!(f.degree(), 7);
        let fy = f.partial(Var::Y);
        assert_eq!(fy.degree(), 6);
        let p = [int(1), int(0), int(1)];
        assert_eq!(f.eval(&p), int(0));
        for v in Var::ALL {
            assert_eq!(f.partial(v).eval(&p), int(0));
        }
    }

    #[test]
    fn dense_round_trip() {
        let f = circle16();
        assert_eq!(HPoly::from_dense(2, &f.dense_coeffs()), f);
    }

    fn arb_form(max_deg: u32) -> impl Strategy<Value = HPoly> {
        (0..=max_deg).prop_flat_map(|d| {
            let n = ((d + 1) * (d + 2) / 2) as usize;
            proptest::collection::vec(-6i64..=6, n)
                .prop_map(move |cs| HPoly::from_dense(d, &cs.iter().map(|&c| int(c)).collect::<Vec<_>>()))
        })
    }

    proptest! {
        #[test]
        fn euler_relation(f in arb_form(5)) {
            let lhs = [Var::X, Var::Y, Var::Z]
                .iter()
                .map(|&v| &HPoly::var(v) * &f.partial(v))
                .fold(HPoly::zero(f.degree()), |acc, t| &acc + &t);
            prop_assert_eq!(lhs, f.scale(&int(f.degree() as i64)));
        }

        #[test]
        fn leibniz_rule(f in arb_form(3), g in arb_form(3)) {
            for v in Var::ALL {
                let lhs = (&f * &g).partial(v);
                let rhs = &(&f.partial(v) * &g) + &(&f * &g.partial(v));
                prop_assert!((&lhs - &rhs).is_zero());
            }
        }
    }
}
