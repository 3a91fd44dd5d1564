//! Squarefree decomposition and factorization over `Q` up to degree four.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::complex::CRat;
use super::{int, isolate_roots, round_rational, PolyError, Rational, UPoly};

const MAX_FACTOR_DEGREE: usize = 4;

/// Yun's algorithm: monic pairwise coprime squarefree factors with
/// strictly increasing multiplicities. The rational unit is dropped.
pub fn squarefree_decomposition(p: &UPoly) -> Result<Vec<(UPoly, u32)>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::UndefinedInput("squarefree decomposition of zero"));
    }
    let p = p.monic();
    let mut out = Vec::new();
    let dp = p.derivative();
    let mut a = p.gcd(&dp);
    let mut b = p.exact_div(&a);
    let mut c = dp.exact_div(&a);
    let mut d = &c - &b.derivative();
    let mut mult = 1;
    while b.degree().is_some_and(|deg| deg > 0) {
        a = b.gcd(&d);
        if a.degree().is_some_and(|deg| deg > 0) {
            out.push((a.clone(), mult));
        }
        b = b.exact_div(&a);
        c = d.exact_div(&a);
        d = &c - &b.derivative();
        mult += 1;
    }
    Ok(out)
}

/// Irreducible monic factors over `Q` of a squarefree polynomial of degree
/// at most four.
///
/// Candidate factors are read off certified root approximations: a rational
/// root `r` of the primitive integer form with leading coefficient `a_n`
/// makes `a_n r` an integer, and a quadratic factor with roots `{r_i, r_j}`
/// makes `a_n (r_i + r_j)` and `a_n r_i r_j` integers. Approximations are
/// refined until rounding recovers those integers, and every candidate is
/// confirmed by exact division, so a missing factor is a proof of
/// irreducibility rather than a numerical guess.
pub fn factor_rational(p: &UPoly) -> Result<Vec<UPoly>, PolyError> {
    let deg = p
        .degree()
        .ok_or(PolyError::UndefinedInput("factorization of zero"))?;
    if deg > MAX_FACTOR_DEGREE {
        return Err(PolyError::UnsupportedDegree {
            degree: deg,
            max: MAX_FACTOR_DEGREE,
        });
    }
    if deg == 0 {
        return Ok(Vec::new());
    }
    if deg == 1 {
        return Ok(alloc::vec![p.monic()]);
    }
    let ints = p.primitive_integer_coeffs();
    let lead = ints.last().cloned().expect("nonzero").abs();
    let lead_q = Rational::from_integer(lead.clone());
    let mut roots = isolate_roots(p)?;

    // Tolerance: |a_n| * |error of a pair sum or product| < 1/4.
    let bound = p.cauchy_bound();
    let tol = Rational::one() / (int(4) * &lead_q * (int(2) * &bound + int(1)));
    let tol_sq = &tol * &tol;
    let sep = super::root_separation_sq_lower_bound(p).unwrap_or_else(Rational::zero);
    for b in roots.iter_mut() {
        let mut guard = 0;
        while b.diam_sqr() >= tol_sq {
            *b = super::algnum::refine_box(p, b, &sep)?;
            guard += 1;
            if guard > 200 {
                return Err(PolyError::RefinementExhausted(deg));
            }
        }
    }
    let approx: Vec<CRat> = roots.iter().map(|b| b.center()).collect();
    let quarter = Rational::new(BigInt::one(), BigInt::from(4));

    let mut remaining = p.monic();
    let mut factors = Vec::new();
    let mut used = alloc::vec![false; approx.len()];

    for (i, z) in approx.iter().enumerate() {
        let scaled = &z.re * &lead_q;
        if (&z.im * &lead_q).abs() > quarter {
            continue;
        }
        let cand = Rational::new(round_rational(&scaled), lead.clone());
        if remaining.eval(&cand).is_zero() {
            let lin = UPoly::linear_root(cand);
            remaining = remaining.exact_div(&lin);
            factors.push(lin);
            used[i] = true;
        }
    }

    let rest_deg = remaining.degree().unwrap_or(0);
    if rest_deg == 4 {
        // split into two quadratics if some root pairing has rational
        // elementary symmetric functions
        let idx: Vec<usize> = (0..approx.len()).filter(|&i| !used[i]).collect();
        for &(a, b) in &[(0usize, 1usize), (0, 2), (0, 3)] {
            let (za, zb) = (&approx[idx[a]], &approx[idx[b]]);
            let s = &(za + zb) * &CRat::real(lead_q.clone());
            let pr = &(za * zb) * &CRat::real(lead_q.clone());
            if s.im.abs() > quarter || pr.im.abs() > quarter {
                continue;
            }
            let quad = UPoly::new(alloc::vec![
                Rational::new(round_rational(&pr.re), lead.clone()),
                Rational::new(-round_rational(&s.re), lead.clone()),
                Rational::one(),
            ]);
            let (q, r) = remaining.div_rem(&quad);
            if r.is_zero() {
                factors.push(quad);
                factors.push(q.monic());
                remaining = UPoly::one();
                break;
            }
        }
    }
    if remaining.degree().is_some_and(|d| d > 0) {
        factors.push(remaining);
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::string::{String, ToString};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    fn names(fs: &[UPoly]) -> BTreeSet<String> {
        fs.iter().map(|f| f.to_string()).collect()
    }

    #[test]
    fn squarefree_examples() {
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        assert_eq!(squarefree_decomposition(&f).unwrap(), [(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
        assert_eq!(squarefree_decomposition(&p(&[1, 0, 1])).unwrap(), [(p(&[1, 0, 1]), 1)]);
        let g = p(&[-2, 0, 1]).pow(2);
        assert_eq!(squarefree_decomposition(&g).unwrap(), [(p(&[-2, 0, 1]), 2)]);
        assert!(squarefree_decomposition(&UPoly::zero()).is_err());
    }

    #[test]
    fn factor_examples() {
        assert_eq!(names(&factor_rational(&p(&[-1, 0, 1])).unwrap()), names(&[p(&[-1, 1]), p(&[1, 1])]));
        assert_eq!(factor_rational(&p(&[1, 0, 1])).unwrap(), [p(&[1, 0, 1])]);
        assert_eq!(
            names(&factor_rational(&p(&[-4, 0, 0, 0, 1])).unwrap()),
            names(&[p(&[-2, 0, 1]), p(&[2, 0, 1])])
        );
    }

    #[test]
    fn factor_mixed_and_irreducible_quartics() {
        // (3t - 1)(t^3 - 2): rational root plus irreducible cubic
        let f = &p(&[-1, 3]) * &p(&[-2, 0, 0, 1]);
        let got = factor_rational(&f).unwrap();
        assert_eq!(got.len(), 2);
        assert!(got.contains(&UPoly::linear_root(crate::exactpoly::rat(1, 3))));
        // t^4 + 1 is irreducible over Q
        assert_eq!(factor_rational(&p(&[1, 0, 0, 0, 1])).unwrap(), [p(&[1, 0, 0, 0, 1])]);
        // (2t^2 + 3t + 5)(7t^2 - 1)
        let g = &p(&[5, 3, 2]) * &p(&[-1, 0, 7]);
        assert_eq!(factor_rational(&g).unwrap().len(), 2);
    }

    #[test]
    fn factor_rejects_high_degree() {
        assert_eq!(
            factor_rational(&p(&[1, 0, 0, 0, 0, 1])),
            Err(PolyError::UnsupportedDegree { degree: 5, max: 4 })
        );
    }

    fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = UPoly> {
        proptest::collection::vec(-9i64..=9, 1..=max_deg + 1)
            .prop_map(|c| UPoly::from_ints(&c))
            .prop_filter("nonzero", |f| !f.is_zero())
    }

    proptest! {
        #[test]
        fn squarefree_degrees_add_up(a in nonzero_poly(2), b in nonzero_poly(2)) {
            let f = &(&a * &a) * &b;
            let parts = squarefree_decomposition(&f).unwrap();
            let total: usize = parts.iter().map(|(g, m)| g.degree().unwrap() * *m as usize).sum();
            prop_assert_eq!(total, f.degree().unwrap());
            let prod = parts.iter().fold(UPoly::one(), |acc, (g, m)| &acc * &g.pow(*m));
            prop_assert_eq!(prod, f.monic());
        }

        #[test]
        fn factors_multiply_back(a in nonzero_poly(2), b in nonzero_poly(2)) {
            let f = &a * &b;
            prop_assume!(f.degree().unwrap() >= 1);
            let sf = f.exact_div(&f.gcd(&f.derivative()));
            let factors = factor_rational(&sf).unwrap();
            let prod = factors.iter().fold(UPoly::one(), |acc, g| &acc * g);
            prop_assert_eq!(prod, sf.monic());
            for g in &factors {
                let d = g.degree().unwrap();
                // no rational root in a factor of degree > 1
                if d > 1 {
                    let again = factor_rational(g).unwrap();
                    prop_assert_eq!(again.len(), 1);
                }
            }
        }

        #[test]
        fn resultant_vanishes_iff_common_factor(a in nonzero_poly(4), b in nonzero_poly(4)) {
            let res = super::super::upoly_resultant(&a, &b).unwrap();
            let common = a.gcd(&b).degree().unwrap_or(0) > 0;
            prop_assert_eq!(res.is_zero(), common);
        }
    }
}
