//! Exact arithmetic in `Q[t]/(g)` for monic irreducible `g`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{PolyError, Rational, UPoly};
use crate::linalg::{kernel_basis, RatMatrix};

/// Element of a number field: a polynomial in the generator of degree below
/// the field degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NfElem(UPoly);

impl NfElem {
    pub fn as_poly(&self) -> &UPoly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.0.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.0.coeff(0)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumberField {
    modulus: UPoly,
}

impl NumberField {
    /// `modulus` must be irreducible over `Q`; it is made monic here.
    pub fn new(modulus: &UPoly) -> Self {
        assert!(
            modulus.degree().is_some_and(|d| d >= 1),
            "number field modulus must be nonconstant"
        );
        Self {
            modulus: modulus.monic(),
        }
    }

    /// `Q` itself, presented as `Q[t]/(t)`.
    pub fn rationals() -> Self {
        Self::new(&UPoly::identity())
    }

    pub fn modulus(&self) -> &UPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn elem(&self, p: &UPoly) -> NfElem {
        NfElem(p.rem(&self.modulus))
    }

    pub fn zero(&self) -> NfElem {
        NfElem(UPoly::zero())
    }

    pub fn one(&self) -> NfElem {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, q: Rational) -> NfElem {
        NfElem(UPoly::constant(q))
    }

    /// The class of `t`, a root of the modulus.
    pub fn generator(&self) -> NfElem {
        self.elem(&UPoly::identity())
    }

    pub fn add(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem(&a.0 + &b.0)
    }

    pub fn sub(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem(&a.0 - &b.0)
    }

    pub fn neg(&self, a: &NfElem) -> NfElem {
        NfElem(-&a.0)
    }

    pub fn mul(&self, a: &NfElem, b: &NfElem) -> NfElem {
        self.elem(&(&a.0 * &b.0))
    }

    pub fn scale(&self, a: &NfElem, c: &Rational) -> NfElem {
        NfElem(a.0.scale(c))
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: &NfElem) -> Result<NfElem, PolyError> {
        if a.is_zero() {
            return Err(PolyError::UndefinedInput("inverse of zero"));
        }
        // Invariant: s * a == r (mod modulus).
        let (mut r0, mut r1) = (self.modulus.clone(), a.0.clone());
        let (mut s0, mut s1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        let g = r0;
        if g.degree() != Some(0) {
            // a shares a factor with the modulus, so the modulus is reducible
            return Err(PolyError::UndefinedInput("number field modulus is reducible"));
        }
        let c = g.coeff(0).recip();
        Ok(self.elem(&s0.scale(&c)))
    }

    pub fn div(&self, a: &NfElem, b: &NfElem) -> Result<NfElem, PolyError> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// Polynomial with number-field coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NfPoly {
    pub coeffs: Vec<NfElem>,
}

impl NfPoly {
    pub fn new(mut coeffs: Vec<NfElem>) -> Self {
        while coeffs.last().is_some_and(NfElem::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn rem(&self, field: &NumberField, d: &NfPoly) -> Result<NfPoly, PolyError> {
        let dd = d.degree().ok_or(PolyError::UndefinedInput("division by zero polynomial"))?;
        let lc_inv = field.inv(&d.coeffs[dd])?;
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let top = r.len() - 1;
            if !r[top].is_zero() {
                let q = field.mul(&r[top], &lc_inv);
                for (j, c) in d.coeffs.iter().enumerate() {
                    let idx = top - dd + j;
                    r[idx] = field.sub(&r[idx], &field.mul(&q, c));
                }
            }
            r.pop();
        }
        Ok(NfPoly::new(r))
    }

    /// Monic gcd over the field.
    pub fn gcd(field: &NumberField, a: &NfPoly, b: &NfPoly) -> Result<NfPoly, PolyError> {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(field, &b)?;
            a = b;
            b = r;
        }
        match a.degree() {
            None => Ok(a),
            Some(d) => {
                let inv = field.inv(&a.coeffs[d])?;
                Ok(NfPoly::new(a.coeffs.iter().map(|c| field.mul(c, &inv)).collect()))
            }
        }
    }
}

/// Minimal polynomial over `Q` of a number-field element, found as the first
/// linear dependency among its powers.
pub fn minimal_polynomial(field: &NumberField, a: &NfElem) -> UPoly {
    let n = field.degree();
    let mut powers = alloc::vec![field.one()];
    for k in 1..=n {
        let next = field.mul(&powers[k - 1], a);
        powers.push(next);
        // columns are the coordinate vectors of 1, a, ..., a^k
        let mut m = RatMatrix::zeros(n, k + 1);
        for (col, pw) in powers.iter().enumerate() {
            for row in 0..n {
                m.set(row, col, pw.as_poly().coeff(row));
            }
        }
        let kernel = kernel_basis(&m);
        if let Some(v) = kernel.first() {
            return UPoly::new(v.clone()).monic();
        }
    }
    unreachable!("an element of a degree-{n} field satisfies a polynomial of degree <= {n}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::int;

    #[test]
    fn inverse_in_q_sqrt2() {
        let k = NumberField::new(&UPoly::from_ints(&[-2, 0, 1]));
        let a = k.elem(&UPoly::from_ints(&[1, 1])); // 1 + sqrt2
        let inv = k.inv(&a).unwrap();
        assert_eq!(k.mul(&a, &inv), k.one());
        // (1 + sqrt2)^{-1} = sqrt2 - 1
        assert_eq!(inv, k.elem(&UPoly::from_ints(&[-1, 1])));
    }

    #[test]
    fn minpoly_of_elements() {
        let k = NumberField::new(&UPoly::from_ints(&[-2, 0, 0, 0, 1])); // 2^(1/4)
        let t = k.generator();
        let sq = k.mul(&t, &t);
        assert_eq!(minimal_polynomial(&k, &sq), UPoly::from_ints(&[-2, 0, 1]));
        assert_eq!(minimal_polynomial(&k, &t), UPoly::from_ints(&[-2, 0, 0, 0, 1]));
        let three = k.from_rational(int(3));
        assert_eq!(minimal_polynomial(&k, &three), UPoly::from_ints(&[-3, 1]));
    }

    #[test]
    fn gcd_over_extension() {
        // over Q(i): gcd(z^2 + 1, z - i) = z - i
        let k = NumberField::new(&UPoly::from_ints(&[1, 0, 1]));
        let i = k.generator();
        let a = NfPoly::new(alloc::vec![k.one(), k.zero(), k.one()]);
        let b = NfPoly::new(alloc::vec![k.neg(&i), k.one()]);
        let g = NfPoly::gcd(&k, &a, &b).unwrap();
        assert_eq!(g, b);
    }
}
