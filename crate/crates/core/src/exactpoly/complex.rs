//! Gaussian rationals and rational-cornered complex boxes with exact
//! interval arithmetic.

use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::{round_dyadic, Rational, UPoly};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CRat {
    pub re: Rational,
    pub im: Rational,
}

impl CRat {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// Panics on division by zero.
    pub fn div(&self, rhs: &CRat) -> CRat {
        let n = rhs.norm_sqr();
        assert!(!n.is_zero(), "complex division by zero");
        let num = self * &rhs.conj();
        CRat::new(num.re / &n, num.im / n)
    }

    pub fn round(&self, bits: u32) -> CRat {
        CRat::new(round_dyadic(&self.re, bits), round_dyadic(&self.im, bits))
    }

    /// Horner evaluation of a rational polynomial.
    pub fn eval(p: &UPoly, z: &CRat) -> CRat {
        p.coeffs()
            .iter()
            .rev()
            .fold(CRat::default(), |acc, c| &(&acc * z) + &CRat::real(c.clone()))
    }

    /// Rough `f64` value for display and plotting only.
    pub fn to_f64(&self) -> (f64, f64) {
        (rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

pub(crate) fn rat_to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

impl Add for &CRat {
    type Output = CRat;
    fn add(self, rhs: &CRat) -> CRat {
        CRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &CRat {
    type Output = CRat;
    fn sub(self, rhs: &CRat) -> CRat {
        CRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &CRat {
    type Output = CRat;
    fn mul(self, rhs: &CRat) -> CRat {
        CRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &CRat {
    type Output = CRat;
    fn neg(self) -> CRat {
        CRat::new(-&self.re, -&self.im)
    }
}

/// Closed real interval with rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn point(v: Rational) -> Self {
        Self { lo: v.clone(), hi: v }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn within(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    fn add(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn sub(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }

    fn mul(&self, o: &Interval) -> Interval {
        let cands = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        Interval { lo, hi }
    }
}

/// Axis-parallel complex rectangle `re x im` with rational corners.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CBox {
    pub re: Interval,
    pub im: Interval,
}

impl CBox {
    pub fn point(z: &CRat) -> Self {
        Self {
            re: Interval::point(z.re.clone()),
            im: Interval::point(z.im.clone()),
        }
    }

    /// Square of half-width `half` centred at `c`.
    pub fn square(c: &CRat, half: &Rational) -> Self {
        Self {
            re: Interval {
                lo: &c.re - half,
                hi: &c.re + half,
            },
            im: Interval {
                lo: &c.im - half,
                hi: &c.im + half,
            },
        }
    }

    pub fn center(&self) -> CRat {
        let two = Rational::from_integer(2.into());
        CRat::new(
            (&self.re.lo + &self.re.hi) / &two,
            (&self.im.lo + &self.im.hi) / two,
        )
    }

    /// Squared length of the diagonal.
    pub fn diam_sqr(&self) -> Rational {
        let w = self.re.width();
        let h = self.im.width();
        &w * &w + &h * &h
    }

    pub fn max_width(&self) -> Rational {
        let w = self.re.width();
        let h = self.im.width();
        if w > h {
            w
        } else {
            h
        }
    }

    pub fn contains(&self, z: &CRat) -> bool {
        self.re.contains(&z.re) && self.im.contains(&z.im)
    }

    pub fn intersects(&self, other: &CBox) -> bool {
        self.re.intersects(&other.re) && self.im.intersects(&other.im)
    }

    pub fn within(&self, other: &CBox) -> bool {
        self.re.within(&other.re) && self.im.within(&other.im)
    }

    pub fn conj(&self) -> CBox {
        CBox {
            re: self.re.clone(),
            im: Interval {
                lo: -&self.im.hi,
                hi: -&self.im.lo,
            },
        }
    }

    pub fn meets_real_axis(&self) -> bool {
        !self.im.lo.is_positive() && !self.im.hi.is_negative()
    }

    pub fn add(&self, o: &CBox) -> CBox {
        CBox {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn mul(&self, o: &CBox) -> CBox {
        CBox {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    /// Interval Horner evaluation: an enclosure of `p(z)` for every `z` in
    /// the box.
    pub fn eval(p: &UPoly, b: &CBox) -> CBox {
        p.coeffs().iter().rev().fold(
            CBox::point(&CRat::default()),
            |acc, c| acc.mul(b).add(&CBox::point(&CRat::real(c.clone()))),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, rat};

    #[test]
    fn interval_evaluation_encloses_samples() {
        let p = UPoly::from_ints(&[1, -3, 0, 2]);
        let b = CBox {
            re: Interval { lo: rat(-1, 2), hi: rat(3, 4) },
            im: Interval { lo: rat(-1, 3), hi: rat(1, 5) },
        };
        let enc = CBox::eval(&p, &b);
        for (re, im) in [(rat(-1, 2), rat(-1, 3)), (rat(0, 1), rat(0, 1)), (rat(3, 4), rat(1, 5)), (rat(1, 7), rat(-1, 9))] {
            assert!(enc.contains(&CRat::eval(&p, &CRat::new(re, im))));
        }
    }

    #[test]
    fn complex_division() {
        let a = CRat::new(int(1), int(2));
        let b = CRat::new(int(3), int(-1));
        let q = a.div(&b);
        assert_eq!(&q * &b, a);
    }
}
