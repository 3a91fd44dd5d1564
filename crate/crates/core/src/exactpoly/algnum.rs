//! Algebraic numbers as (minimal polynomial, isolating box) pairs.
//!
//! Isolation runs Weierstrass (Durand-Kerner) iterations in dyadic rational
//! arithmetic and certifies the result with Smith's inclusion discs: the
//! disc of radius `n |p(z_i)| / |lc * prod_{j != i} (z_i - z_j)|` around
//! each approximation, when pairwise disjoint, holds exactly one root.
//! Refinement is certified Newton: `n |p(w) / p'(w)|` bounds the distance
//! from `w` to the nearest root.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::complex::{rat_to_f64, CBox, CRat};
use super::{int, minimal_polynomial, sqrt_upper, NfElem, NumberField, PolyError, Rational, UPoly};

const ISOLATION_ROUNDS: usize = 10;
const WEIERSTRASS_SWEEPS: usize = 40;
const NEWTON_ATTEMPTS: usize = 10;
const REFINE_BUDGET: usize = 200;

/// A single complex root of a monic irreducible rational polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgNum {
    minpoly: UPoly,
    isolating_box: CBox,
}

impl AlgNum {
    pub fn from_rational(q: Rational) -> Self {
        Self {
            minpoly: UPoly::linear_root(q.clone()),
            isolating_box: CBox::point(&CRat::real(q)),
        }
    }

    /// Caller guarantees `minpoly` is monic irreducible and `isolating_box`
    /// holds exactly one of its roots.
    pub fn from_parts(minpoly: UPoly, isolating_box: CBox) -> Self {
        debug_assert!(minpoly.leading().is_some_and(One::is_one));
        Self {
            minpoly,
            isolating_box,
        }
    }

    /// Every root of a monic irreducible polynomial.
    pub fn roots_of(minpoly: &UPoly) -> Result<Vec<AlgNum>, PolyError> {
        let minpoly = minpoly.monic();
        if minpoly.degree() == Some(1) {
            return Ok(vec![Self::from_rational(-minpoly.coeff(0))]);
        }
        Ok(isolate_roots(&minpoly)?
            .into_iter()
            .map(|b| Self::from_parts(minpoly.clone(), b))
            .collect())
    }

    pub fn minpoly(&self) -> &UPoly {
        &self.minpoly
    }

    pub fn isolating_box(&self) -> &CBox {
        &self.isolating_box
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap_or(0)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.degree() == 1).then(|| -self.minpoly.coeff(0))
    }

    pub fn separation_sq(&self) -> Option<Rational> {
        root_separation_sq_lower_bound(&self.minpoly)
    }

    /// Shrinks the isolating box at least once.
    pub fn refine(&mut self) -> Result<(), PolyError> {
        let sep = self.separation_sq().unwrap_or_else(Rational::zero);
        self.isolating_box = refine_box(&self.minpoly, &self.isolating_box, &sep)?;
        Ok(())
    }

    /// Refines until the box diagonal squared is below `target`.
    pub fn refine_until(&mut self, target_diam_sq: &Rational) -> Result<(), PolyError> {
        for _ in 0..REFINE_BUDGET {
            if &self.isolating_box.diam_sqr() < target_diam_sq {
                return Ok(());
            }
            self.refine()?;
        }
        Err(PolyError::RefinementExhausted(self.degree()))
    }

    pub fn is_real(&mut self) -> Result<bool, PolyError> {
        let Some(sep) = self.separation_sq() else {
            return Ok(true);
        };
        for _ in 0..REFINE_BUDGET {
            if !self.isolating_box.meets_real_axis() {
                return Ok(false);
            }
            // Box narrower than sep/2 touching the axis: the conjugate root
            // would lie closer than the separation bound.
            if int(4) * self.isolating_box.diam_sqr() < sep {
                self.isolating_box.im = super::complex::Interval::point(Rational::zero());
                return Ok(true);
            }
            self.refine()?;
        }
        Err(PolyError::RefinementExhausted(self.degree()))
    }

    /// Exact equality, refining both boxes as needed.
    pub fn try_eq(&mut self, other: &mut AlgNum) -> Result<bool, PolyError> {
        if self.minpoly != other.minpoly {
            return Ok(false);
        }
        let Some(sep) = self.separation_sq() else {
            return Ok(true);
        };
        for _ in 0..REFINE_BUDGET {
            if !self.isolating_box.intersects(&other.isolating_box) {
                return Ok(false);
            }
            let (da, db) = (self.isolating_box.diam_sqr(), other.isolating_box.diam_sqr());
            if int(4) * &da < sep && int(4) * &db < sep {
                return Ok(true);
            }
            if da >= db {
                self.refine()?;
            } else {
                other.refine()?;
            }
        }
        Err(PolyError::RefinementExhausted(self.degree()))
    }

    /// The image of `elem` under the embedding of `field` that sends the
    /// generator to `generator`, a root of the field modulus.
    pub fn from_field_element(
        field: &NumberField,
        elem: &NfElem,
        generator: &mut AlgNum,
    ) -> Result<AlgNum, PolyError> {
        debug_assert_eq!(generator.minpoly(), field.modulus());
        if let Some(q) = elem.as_rational() {
            return Ok(Self::from_rational(q));
        }
        let minpoly = minimal_polynomial(field, elem);
        let Some(sep) = root_separation_sq_lower_bound(&minpoly) else {
            return Ok(Self::from_rational(-minpoly.coeff(0)));
        };
        // An enclosure narrower than the separation bound holds no other
        // conjugate of elem.
        for _ in 0..REFINE_BUDGET {
            let enclosure = CBox::eval(elem.as_poly(), generator.isolating_box());
            if enclosure.diam_sqr() < sep {
                return Ok(Self::from_parts(minpoly, enclosure));
            }
            generator.refine()?;
        }
        Err(PolyError::RefinementExhausted(field.degree()))
    }

    /// Centre of the box as floats; display and plotting only.
    pub fn approx(&self) -> (f64, f64) {
        self.isolating_box.center().to_f64()
    }

    pub fn approx_re(&self) -> f64 {
        rat_to_f64(&self.isolating_box.center().re)
    }
}

/// `a == b` as complex numbers.
///
/// Panics only if refinement exhausts its budget, which signals a bug in
/// the isolation invariants rather than a hard input.
pub fn algnum_eq(a: &AlgNum, b: &AlgNum) -> bool {
    let (mut a, mut b) = (a.clone(), b.clone());
    a.try_eq(&mut b).expect("algebraic number comparison did not converge")
}

/// Lower bound on the squared minimum distance between distinct roots of a
/// squarefree polynomial; `None` when it has at most one root.
pub fn root_separation_sq_lower_bound(p: &UPoly) -> Option<Rational> {
    let n = p.degree()?;
    if n < 2 {
        return None;
    }
    // sep > sqrt(3 |disc|) n^{-(n+2)/2} ||p||^{-(n-1)} with |disc| >= 1.
    let c = p.primitive_integer_coeffs();
    let norm_sq: BigInt = c.iter().map(|v| v * v).sum();
    let n_big = BigInt::from(n as u64);
    let denom = num_traits::pow(n_big, n + 2) * num_traits::pow(norm_sq, n - 1);
    Some(Rational::new(BigInt::from(3), denom))
}

/// Bits of precision needed to resolve a quantity of size `w`.
fn bits_for(w: &Rational) -> u32 {
    let num = w.numer().bits() as i64;
    let den = w.denom().bits() as i64;
    (den - num).max(0) as u32
}

/// One certified Newton step shrinking `b`, an isolating box of a root of
/// the squarefree `p`.
pub(crate) fn refine_box(p: &UPoly, b: &CBox, sep_sq: &Rational) -> Result<CBox, PolyError> {
    let n = p.degree().unwrap_or(0);
    let dp = p.derivative();
    let width = b.max_width();
    if width.is_zero() {
        return Ok(b.clone());
    }
    let n_sq = int((n * n) as i64);
    let mut bits = 2 * bits_for(&width) + 64;
    for attempt in 0..NEWTON_ATTEMPTS {
        let mut w = b.center();
        for _ in 0..(4 + 2 * attempt) {
            let d = CRat::eval(&dp, &w);
            if d.is_zero() {
                break;
            }
            w = (&w - &CRat::eval(p, &w).div(&d)).round(bits);
        }
        let pw = CRat::eval(p, &w);
        if pw.is_zero() {
            if b.contains(&w) {
                return Ok(CBox::point(&w));
            }
            bits *= 2;
            continue;
        }
        let dw = CRat::eval(&dp, &w);
        if dw.is_zero() {
            bits *= 2;
            continue;
        }
        let rho_sq = &n_sq * pw.norm_sqr() / dw.norm_sqr();
        let half = sqrt_upper(&rho_sq);
        let nb = CBox::square(&w, &half);
        if nb.max_width() < width {
            let inside = nb.within(b);
            let close = nb.intersects(b) && int(2) * (nb.diam_sqr() + b.diam_sqr()) < *sep_sq;
            if inside || close {
                return Ok(nb);
            }
        }
        bits *= 2;
    }
    Err(PolyError::RefinementExhausted(n))
}

/// Isolating squares for all complex roots of a squarefree polynomial,
/// sorted by real then imaginary part of their centres.
pub fn isolate_roots(p: &UPoly) -> Result<Vec<CBox>, PolyError> {
    let n = match p.degree() {
        None => return Err(PolyError::UndefinedInput("roots of the zero polynomial")),
        Some(0) => return Ok(Vec::new()),
        Some(n) => n,
    };
    let q = p.monic();
    if n == 1 {
        return Ok(vec![CBox::point(&CRat::real(-q.coeff(0)))]);
    }
    if q.gcd(&q.derivative()).degree() != Some(0) {
        return Err(PolyError::NotSquarefree);
    }
    if let Some(z) = float_weierstrass(&q) {
        if let Some(boxes) = smith_certify(&q, &z) {
            return Ok(sorted(boxes));
        }
    }
    let radius = q.cauchy_bound();
    let seed = CRat::new(super::rat(2, 5), super::rat(9, 10));
    let mut z: Vec<CRat> = Vec::with_capacity(n);
    let mut cur = CRat::real(radius.clone());
    for _ in 0..n {
        z.push(cur.clone());
        cur = &cur * &seed;
    }
    let mut bits = 64u32;
    for _ in 0..ISOLATION_ROUNDS {
        z = z.into_iter().map(|w| w.round(bits)).collect();
        for _ in 0..WEIERSTRASS_SWEEPS {
            for i in 0..n {
                let mut den = CRat::real(Rational::one());
                for j in 0..n {
                    if i != j {
                        den = &den * &(&z[i] - &z[j]);
                    }
                }
                if den.is_zero() {
                    // coincident iterates: nudge apart
                    z[i] = &z[i] + &CRat::new(Rational::zero(), Rational::new(1.into(), BigInt::one() << 8));
                    continue;
                }
                let step = CRat::eval(&q, &z[i]).div(&den);
                z[i] = (&z[i] - &step).round(bits);
            }
        }
        if let Some(boxes) = smith_certify(&q, &z) {
            return Ok(sorted(boxes));
        }
        bits = (bits * 2).min(1 << 14);
    }
    Err(PolyError::RefinementExhausted(n))
}

fn sorted(mut boxes: Vec<CBox>) -> Vec<CBox> {
    boxes.sort_by(|a, b| {
        let (ca, cb) = (a.center(), b.center());
        ca.re.cmp(&cb.re).then(ca.im.cmp(&cb.im))
    });
    boxes
}

/// Weierstrass iteration in hardware floats. Only a source of starting
/// points: whatever it returns is certified (or rejected) exactly.
fn float_weierstrass(q: &UPoly) -> Option<Vec<CRat>> {
    let c: Vec<f64> = q.coeffs().iter().map(rat_to_f64).collect();
    if c.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let n = c.len() - 1;
    let mul = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    let eval = |z: (f64, f64)| c.iter().rev().fold((0.0, 0.0), |acc, &k| {
        let m = mul(acc, z);
        (m.0 + k, m.1)
    });
    let radius = 1.0 + c[..n].iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut z: Vec<(f64, f64)> = Vec::with_capacity(n);
    let mut cur = (radius, 0.0);
    for _ in 0..n {
        z.push(cur);
        cur = mul(cur, (0.4, 0.9));
    }
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let mut den = (1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den = mul(den, (z[i].0 - z[j].0, z[i].1 - z[j].1));
                }
            }
            let norm = den.0 * den.0 + den.1 * den.1;
            if norm == 0.0 || !norm.is_finite() {
                return None;
            }
            let v = eval(z[i]);
            let step = ((v.0 * den.0 + v.1 * den.1) / norm, (v.1 * den.0 - v.0 * den.1) / norm);
            z[i] = (z[i].0 - step.0, z[i].1 - step.1);
            moved = moved.max(step.0.abs() + step.1.abs());
        }
        if moved == 0.0 {
            break;
        }
    }
    z.iter()
        .map(|&(re, im)| Some(CRat::new(Rational::from_float(re)?, Rational::from_float(im)?)))
        .collect()
}

/// Smith inclusion squares, if pairwise disjoint.
fn smith_certify(q: &UPoly, z: &[CRat]) -> Option<Vec<CBox>> {
    let n = z.len();
    let n_sq = int((n * n) as i64);
    let mut boxes = Vec::with_capacity(n);
    for i in 0..n {
        let mut den = Rational::one();
        for j in 0..n {
            if i != j {
                den *= (&z[i] - &z[j]).norm_sqr();
            }
        }
        if den.is_zero() {
            return None;
        }
        let rho_sq = &n_sq * CRat::eval(q, &z[i]).norm_sqr() / den;
        boxes.push(CBox::square(&z[i], &sqrt_upper(&rho_sq)));
    }
    for i in 0..n {
        for j in i + 1..n {
            if boxes[i].intersects(&boxes[j]) {
                return None;
            }
        }
    }
    Some(boxes)
}
