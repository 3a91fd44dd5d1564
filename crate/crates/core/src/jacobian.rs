//! Syzygies of the Jacobian ideal and the Milnor algebra.
//!
//! Everything reduces to exact rank and kernel computations on Macaulay
//! matrices of the map `(a, b, c) -> a fx + b fy + c fz`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::exactpoly::{monomial_index, monomials_of_degree, HPoly, Rational, Var};
use crate::linalg::{kernel_basis, rank_exact, RatMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JacobianError {
    #[error("the polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("the polynomial is zero")]
    ZeroPolynomial,
    #[error("Milnor algebra dimensions did not stabilise by degree {last_degree}; the curve is probably not reduced")]
    StabilizationFailure { last_degree: usize },
    #[error("syzygy witness failed exact verification in degree {0}")]
    WitnessFailure(usize),
}

/// `(fx, fy, fz)`.
pub fn jacobian_generators(f: &HPoly) -> (HPoly, HPoly, HPoly) {
    (f.partial(Var::X), f.partial(Var::Y), f.partial(Var::Z))
}

/// The multiplication map `S_r^3 -> S_{r+m-1}` in graded-lex bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayMatrix {
    pub r: usize,
    pub matrix: RatMatrix,
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `dim S_k`.
pub fn forms_dim(k: usize) -> usize {
    binom2(k + 2)
}

fn check(f: &HPoly) -> Result<usize, JacobianError> {
    if f.is_zero() {
        return Err(JacobianError::ZeroPolynomial);
    }
    match f.degree() {
        0 => Err(JacobianError::ConstantPolynomial),
        m => Ok(m as usize),
    }
}

fn build_macaulay(partials: &[HPoly; 3], m: usize, r: usize) -> MacaulayMatrix {
    let target = (r + m - 1) as u32;
    let basis = monomials_of_degree(r as u32);
    let block = basis.len();
    let mut matrix = RatMatrix::zeros(forms_dim(target as usize), 3 * block);
    for (b, g) in partials.iter().enumerate() {
        for (j, mono) in basis.iter().enumerate() {
            for (gm, c) in g.terms() {
                let row = monomial_index(&gm.mul(mono));
                let col = b * block + j;
                let v = matrix.get(row, col) + c;
                matrix.set(row, col, v);
            }
        }
    }
    MacaulayMatrix { r, matrix }
}

/// Matrix of `(a, b, c) -> a fx + b fy + c fz` on triples of degree-`r` forms.
///
/// Rows follow the degree-`(r+m-1)` monomials, columns three blocks of
/// degree-`r` monomials; both in descending graded-lex order.
pub fn macaulay_matrix(f: &HPoly, r: usize) -> Result<MacaulayMatrix, JacobianError> {
    let m = check(f)?;
    let (a, b, c) = jacobian_generators(f);
    Ok(build_macaulay(&[a, b, c], m, r))
}

fn triple_from_vector(v: &[Rational], r: usize) -> [HPoly; 3] {
    let block = forms_dim(r);
    let basis = monomials_of_degree(r as u32);
    core::array::from_fn(|b| {
        HPoly::from_terms(
            r as u32,
            basis
                .iter()
                .zip(&v[b * block..(b + 1) * block])
                .filter(|(_, c)| !c.is_zero())
                .map(|(mono, c)| (mono.0, c.clone())),
        )
    })
}

/// Dimension of the space of degree-`r` relations among the partials.
pub fn kernel_dim(f: &HPoly, r: usize) -> Result<usize, JacobianError> {
    let mac = macaulay_matrix(f, r)?;
    Ok(mac.matrix.cols() - rank_exact(&mac.matrix))
}

/// A relation of minimal degree among the partial derivatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalRelation {
    pub mdr: usize,
    /// `(a, b, c)` with `a fx + b fy + c fz = 0`.
    pub witness: [HPoly; 3],
    /// Kernel dimension for each `r <= mdr`.
    pub kernel_dims: Vec<usize>,
}

impl MinimalRelation {
    /// The partials are linearly dependent: the curve is a cone.
    pub fn is_cone(&self) -> bool {
        self.mdr == 0
    }
}

/// Checks `a fx + b fy + c fz = 0` by polynomial arithmetic.
pub fn verify_relation(f: &HPoly, triple: &[HPoly; 3]) -> bool {
    let (fx, fy, fz) = jacobian_generators(f);
    let sum = &(&(&triple[0] * &fx) + &(&triple[1] * &fy)) + &(&triple[2] * &fz);
    sum.is_zero() && triple.iter().any(|p| !p.is_zero())
}

/// Smallest degree of a nonzero relation, with an exactly verified witness.
///
/// Koszul relations count, so the search always ends by `r = m - 1`.
pub fn minimal_relation(f: &HPoly) -> Result<MinimalRelation, JacobianError> {
    let m = check(f)?;
    let (a, b, c) = jacobian_generators(f);
    let partials = [a, b, c];
    let mut kernel_dims = Vec::new();
    for r in 0..m {
        let mac = build_macaulay(&partials, m, r);
        let kernel = kernel_basis(&mac.matrix);
        kernel_dims.push(kernel.len());
        if let Some(v) = kernel.first() {
            let witness = triple_from_vector(v, r);
            if !verify_relation(f, &witness) {
                return Err(JacobianError::WitnessFailure(r));
            }
            return Ok(MinimalRelation {
                mdr: r,
                witness,
                kernel_dims,
            });
        }
    }
    // (0, -fz, fy) lives in degree m - 1
    Err(JacobianError::WitnessFailure(m - 1))
}

pub fn mdr(f: &HPoly) -> Result<usize, JacobianError> {
    minimal_relation(f).map(|rel| rel.mdr)
}

/// `dim M(f)_k`.
pub fn milnor_dim(f: &HPoly, k: usize) -> Result<usize, JacobianError> {
    let m = check(f)?;
    if k + 1 < m {
        return Ok(forms_dim(k));
    }
    let mac = macaulay_matrix(f, k + 1 - m)?;
    Ok(forms_dim(k) - rank_exact(&mac.matrix))
}

/// Milnor algebra dimensions from degree `3m - 6` until two consecutive
/// values agree.
pub fn milnor_stabilization(f: &HPoly) -> Result<BTreeMap<usize, usize>, JacobianError> {
    let m = check(f)?;
    let start = (3 * m).saturating_sub(6);
    let mut dims = BTreeMap::new();
    let mut prev = milnor_dim(f, start)?;
    dims.insert(start, prev);
    for k in start + 1..=5 * m {
        let cur = milnor_dim(f, k)?;
        dims.insert(k, cur);
        if cur == prev {
            return Ok(dims);
        }
        prev = cur;
    }
    Err(JacobianError::StabilizationFailure { last_degree: 5 * m })
}

/// Total Tjurina number: the stable value of `dim M(f)_k`.
pub fn tjurina_global(f: &HPoly) -> Result<usize, JacobianError> {
    let dims = milnor_stabilization(f)?;
    Ok(*dims.values().next_back().expect("at least two degrees computed"))
}

/// Whether `r^2 - r(m-1) + (m-1)^2 = tau + 1`, with exponents `(r, m - r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NearFreeVerdict {
    pub m: usize,
    pub r: usize,
    pub tau: usize,
    pub nearly_free: bool,
    pub exponents: Option<(usize, usize)>,
}

impl NearFreeVerdict {
    /// The shape of the minimal resolution of `M(f)` for these exponents.
    pub fn resolution_shape(&self) -> Option<String> {
        let (d1, d2) = self.exponents?;
        let m = self.m;
        Some(format!(
            "0 -> S(-{}) -> S(-{}) + S(-{}) + S(-{}) -> S^3(-{}) -> S -> M(f) -> 0",
            d2 + m,
            d1 + m - 1,
            d2 + m - 1,
            d2 + m - 1,
            m - 1
        ))
    }
}

impl fmt::Display for NearFreeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponents {
            Some((d1, d2)) => write!(f, "nearly free with exponents ({d1}, {d2})"),
            None => f.write_str("not nearly free"),
        }
    }
}

pub fn nearly_free_verdict(m: usize, r: usize, tau: usize) -> NearFreeVerdict {
    let (m_i, r_i) = (m as i64, r as i64);
    let lhs = r_i * r_i - r_i * (m_i - 1) + (m_i - 1) * (m_i - 1);
    let nearly_free = lhs == tau as i64 + 1;
    NearFreeVerdict {
        m,
        r,
        tau,
        nearly_free,
        exponents: nearly_free.then(|| (r, m - r)),
    }
}

/// Everything the Jacobian side computes for one curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyReport {
    pub m: usize,
    pub relation: MinimalRelation,
    pub milnor_dims: BTreeMap<usize, usize>,
    pub tau: usize,
    pub verdict: NearFreeVerdict,
}

impl SyzygyReport {
    pub fn mdr(&self) -> usize {
        self.relation.mdr
    }

    /// `mdr = m - 1`: only Koszul-degree relations exist.
    pub fn koszul_only(&self) -> bool {
        self.relation.mdr + 1 == self.m
    }
}

pub fn syzygy_report(f: &HPoly) -> Result<SyzygyReport, JacobianError> {
    let m = check(f)?;
    let relation = minimal_relation(f)?;
    let milnor_dims = milnor_stabilization(f)?;
    let tau = *milnor_dims.values().next_back().expect("nonempty");
    let verdict = nearly_free_verdict(m, relation.mdr, tau);
    Ok(SyzygyReport {
        m,
        relation,
        milnor_dims,
        tau,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::int;

    fn xyz() -> HPoly {
        HPoly::monomial([1, 1, 1], int(1))
    }

    fn var(v: Var) -> HPoly {
        HPoly::var(v)
    }

    #[test]
    fn generators() {
        let (a, b, c) = jacobian_generators(&xyz());
        assert_eq!(a, HPoly::monomial([0, 1, 1], int(1)));
        assert_eq!(b, HPoly::monomial([1, 0, 1], int(1)));
        assert_eq!(c, HPoly::monomial([1, 1, 0], int(1)));
        let (a, b, c) = jacobian_generators(&HPoly::monomial([3, 0, 0], int(1)));
        assert_eq!(a, HPoly::monomial([2, 0, 0], int(3)));
        assert!(b.is_zero() && c.is_zero());
    }

    #[test]
    fn macaulay_shapes() {
        let mac = macaulay_matrix(&xyz(), 1).unwrap();
        assert_eq!((mac.matrix.rows(), mac.matrix.cols()), (10, 9));
        let f7 = HPoly::monomial([7, 0, 0], int(1));
        let mac = macaulay_matrix(&f7, 3).unwrap();
        assert_eq!((mac.matrix.rows(), mac.matrix.cols()), (55, 30));
        assert!(macaulay_matrix(&HPoly::monomial([0, 0, 0], int(2)), 0).is_err());
    }

    #[test]
    fn triangle_relations() {
        assert_eq!(kernel_dim(&xyz(), 0).unwrap(), 0);
        assert_eq!(kernel_dim(&xyz(), 1).unwrap(), 2);
        let rel = minimal_relation(&xyz()).unwrap();
        assert_eq!(rel.mdr, 1);
        assert_eq!(rel.kernel_dims, [0, 2]);
        // x fx - y fy = 0 and y fy - z fz = 0 span the kernel
        let w1 = [var(Var::X), -&var(Var::Y), HPoly::zero(1)];
        let w2 = [HPoly::zero(1), var(Var::Y), -&var(Var::Z)];
        assert!(verify_relation(&xyz(), &w1));
        assert!(verify_relation(&xyz(), &w2));
        assert!(verify_relation(&xyz(), &rel.witness));
        assert_eq!(tjurina_global(&xyz()).unwrap(), 3);
        assert!(!nearly_free_verdict(3, 1, 3).nearly_free);
    }

    #[test]
    fn smooth_conic_and_cones() {
        let conic = &(&HPoly::monomial([2, 0, 0], int(1)) + &HPoly::monomial([0, 2, 0], int(1)))
            + &HPoly::monomial([0, 0, 2], int(1));
        assert_eq!(milnor_dim(&conic, 4).unwrap(), 0);
        assert_eq!(milnor_dim(&conic, 0).unwrap(), 1);
        assert_eq!(milnor_dim(&conic, 1).unwrap(), 0);
        assert_eq!(tjurina_global(&conic).unwrap(), 0);
        // x^2 - y^2 does not involve z
        let cone = &HPoly::monomial([2, 0, 0], int(1)) - &HPoly::monomial([0, 2, 0], int(1));
        let rel = minimal_relation(&cone).unwrap();
        assert!(rel.is_cone());
        assert_eq!(rel.witness[2], HPoly::monomial([0, 0, 0], int(1)));
    }

    #[test]
    fn koszul_relation_always_exists() {
        // a smooth cubic has no relation below degree m - 1 = 2
        let f = &(&HPoly::monomial([3, 0, 0], int(1)) + &HPoly::monomial([0, 3, 0], int(1)))
            + &HPoly::monomial([0, 0, 3], int(1));
        let (_, fy, fz) = jacobian_generators(&f);
        assert!(verify_relation(&f, &[HPoly::zero(2), -&fz, fy]));
        let rel = minimal_relation(&f).unwrap();
        assert_eq!(rel.mdr, 2);
        assert_eq!(tjurina_global(&f).unwrap(), 0);
    }

    #[test]
    fn non_reduced_input_does_not_stabilise() {
        let x2y = HPoly::monomial([2, 1, 0], int(1));
        assert_eq!(
            tjurina_global(&x2y),
            Err(JacobianError::StabilizationFailure { last_degree: 15 })
        );
    }

    #[test]
    fn verdict_examples() {
        let v = nearly_free_verdict(3, 1, 2);
        assert_eq!(v.exponents, Some((1, 2)));
        assert_eq!(nearly_free_verdict(7, 3, 26).exponents, Some((3, 4)));
        assert_eq!(nearly_free_verdict(3, 1, 3).exponents, None);
        assert_eq!(
            v.resolution_shape().unwrap(),
            "0 -> S(-5) -> S(-3) + S(-4) + S(-4) -> S^3(-2) -> S -> M(f) -> 0"
        );
    }

    #[test]
    fn dimension_formula_matches_exponent_form() {
        for d1 in 0i64..=12 {
            for d2 in d1..=14 {
                let (m, r) = (d1 + d2, d1);
                let lhs = r * r - r * (m - 1) + (m - 1) * (m - 1) - 1;
                assert_eq!(lhs, d1 * d1 + d2 * d2 + d1 * d2 - d1 - 2 * d2);
            }
        }
    }
}
