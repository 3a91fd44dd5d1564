//! Exact rank and kernel computations over the rationals.
//!
//! Rank is computed modulo word-sized primes until their product exceeds
//! the Hadamard bound on the minors that could still raise it; a rank mod p
//! never exceeds the rank over Q, so the result is certified. Kernels and
//! determinants use fraction-free (Bareiss) elimination on integer-scaled
//! rows followed by rational back-substitution. Pivots are the first
//! nonzero entry in column order, so output is deterministic.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exactpoly::{denominator_lcm, Rational};

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }
}

/// Integer echelon form with the pivot column of each nonzero row.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn integer_rows(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|r| {
            let row = m.row(r);
            let scale = Rational::from_integer(denominator_lcm(row));
            row.iter().map(|q| (q * &scale).to_integer()).collect()
        })
        .collect()
}

fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let piv = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let lead = core::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = &piv * &row[j] - &lead * &pivot_row[j];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "inexact Bareiss division");
                row[j] = q;
            }
        }
        prev = piv;
        pivots.push(c);
        rank += 1;
    }
    a.truncate(rank);
    Echelon { rows: a, pivots }
}

/// Rank over `Q`.
///
/// Computed modulo word-sized primes. A rank mod `p` never exceeds the
/// rank over `Q`, and once the primes used multiply past the Hadamard bound
/// of every square minor, a nonzero minor of larger size would have survived
/// modulo at least one of them. The maximum is therefore exact.
pub fn rank_exact(m: &RatMatrix) -> usize {
    let rows = integer_rows(m);
    let full = m.rows.min(m.cols);
    let bound = hadamard_bits(&rows);
    let rows: Vec<Vec<Entry>> = rows.iter().map(|r| r.iter().map(Entry::new).collect()).collect();
    let mut best = 0;
    let mut covered = 0u64;
    let mut p = PRIME_START;
    // only minors of size best + 1 could still raise the rank
    while best < full && covered <= bound[best + 1] {
        p = prev_prime(p);
        best = best.max(rank_mod(&rows, m.cols, p));
        covered += 61; // p > 2^61
    }
    best
}

/// Rank by exact fraction-free elimination; slower, used as a cross-check.
pub fn rank_bareiss(m: &RatMatrix) -> usize {
    bareiss(integer_rows(m), m.cols).pivots.len()
}

const PRIME_START: u64 = 1 << 62;

/// Entry `s`: upper bound on `log2` of any `s x s` minor, from the `s`
/// largest row norms (Hadamard).
fn hadamard_bits(rows: &[Vec<BigInt>]) -> Vec<u64> {
    let mut norms: Vec<u64> = rows
        .iter()
        .map(|r| r.iter().map(|v| v * v).sum::<BigInt>().bits())
        .collect();
    norms.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = alloc::vec![0];
    let mut acc = 0;
    for n in norms {
        acc += n;
        out.push(acc.div_ceil(2) + 1);
    }
    out
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    if p < 1 << 32 {
        a * b % p
    } else {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'bases: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn prev_prime(mut n: u64) -> u64 {
    loop {
        n -= 1;
        if is_prime(n) {
            return n;
        }
    }
}

/// Matrix entry prepared for repeated reduction.
enum Entry {
    Small(i64),
    Big(BigInt),
}

impl Entry {
    fn new(v: &BigInt) -> Self {
        use num_traits::ToPrimitive;
        v.to_i64().map_or_else(|| Entry::Big(v.clone()), Entry::Small)
    }

    fn reduce(&self, p: u64) -> u64 {
        use num_traits::ToPrimitive;
        let r = match self {
            Entry::Small(v) => v % p as i64,
            Entry::Big(v) => (v % BigInt::from(p)).to_i64().expect("residue fits"),
        };
        if r < 0 {
            (r + p as i64) as u64
        } else {
            r as u64
        }
    }
}

fn rank_mod(rows: &[Vec<Entry>], cols: usize, p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|v| v.reduce(p)).collect()).collect();
    let nrows = a.len();
    let mut rank = 0;
    for c in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let factor = p - mul_mod(row[c], inv, p);
            for j in c..cols {
                if pivot_row[j] != 0 {
                    row[j] = (row[j] + mul_mod(factor, pivot_row[j], p)) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Basis of `{v : M v = 0}`, one vector per non-pivot column.
///
/// Every vector is re-multiplied against `M` and the rank-nullity count is
/// asserted before returning.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let ech = bareiss(integer_rows(m), m.cols);
    let rank = ech.pivots.len();
    let mut is_pivot = vec![false; m.cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::with_capacity(m.cols - rank);
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); m.cols];
        v[free] = Rational::one();
        for (i, &p) in ech.pivots.iter().enumerate().rev() {
            let row = &ech.rows[i];
            let mut acc = Rational::zero();
            for j in p + 1..m.cols {
                if !row[j].is_zero() && !v[j].is_zero() {
                    acc += Rational::from_integer(row[j].clone()) * &v[j];
                }
            }
            v[p] = -acc / Rational::from_integer(row[p].clone());
        }
        basis.push(v);
    }
    assert_eq!(rank + basis.len(), m.cols, "rank-nullity violated");
    for v in &basis {
        assert!(
            m.mul_vec(v).iter().all(Zero::is_zero),
            "kernel vector fails re-multiplication"
        );
    }
    basis
}

/// Determinant of a square matrix given by rows.
pub fn determinant(rows: Vec<Vec<Rational>>) -> Rational {
    let n = rows.len();
    if n == 0 {
        return Rational::one();
    }
    assert!(rows.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let m = RatMatrix::from_rows(rows);
    // Row scaling multiplies the determinant by the product of the scales.
    let mut scale = Rational::one();
    let int_rows: Vec<Vec<BigInt>> = (0..n)
        .map(|r| {
            let row = m.row(r);
            let s = Rational::from_integer(denominator_lcm(row));
            scale *= &s;
            row.iter().map(|q| (q * &s).to_integer()).collect()
        })
        .collect();
    let mut a = int_rows;
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Rational::from_integer(sign * &a[n - 1][n - 1]) / scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::int;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_exact(&RatMatrix::identity(3)), 3);
        assert_eq!(rank_exact(&RatMatrix::zeros(4, 2)), 0);
        assert_eq!(rank_exact(&mat(&[&[1, 2], &[2, 4], &[3, 6]])), 1);
    }

    #[test]
    fn rank_survives_a_large_prime_factor() {
        // singular modulo the first prime tried, regular over Q
        let p = prev_prime(PRIME_START);
        let q = Rational::from_integer(BigInt::from(p));
        let m = RatMatrix::from_rows(alloc::vec![alloc::vec![q.clone(), int(0)], alloc::vec![int(0), int(1)]]);
        assert_eq!(rank_exact(&m), 2);
        let sq = Rational::from_integer(BigInt::from(p) * BigInt::from(p));
        let m = RatMatrix::from_rows(alloc::vec![alloc::vec![sq.clone(), int(1)], alloc::vec![int(0), sq]]);
        assert_eq!(rank_exact(&m), 2);
        assert!(is_prime((1 << 61) - 1) && !is_prime((1 << 62) - 1));
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&RatMatrix::identity(3)).is_empty());
        let k = kernel_basis(&mat(&[&[1, 1, 1]]));
        assert_eq!(k.len(), 2);
        let k = kernel_basis(&RatMatrix::zeros(0, 3));
        assert_eq!(k.len(), 3);
    }

    #[test]
    fn determinants() {
        let d = determinant(alloc::vec![
            alloc::vec![int(2), int(0), int(1)],
            alloc::vec![int(1), int(3), int(2)],
            alloc::vec![int(1), int(1), int(2)],
        ]);
        assert_eq!(d, int(6));
        let singular = determinant(alloc::vec![
            alloc::vec![int(1), int(1), int(0)],
            alloc::vec![int(1), int(1), int(0)],
            alloc::vec![int(0), int(0), int(2)],
        ]);
        assert_eq!(singular, int(0));
        let half = crate::exactpoly::rat(1, 2);
        let d = determinant(alloc::vec![alloc::vec![half.clone(), int(1)], alloc::vec![int(3), half]]);
        assert_eq!(d, crate::exactpoly::rat(-11, 4));
    }

    fn arb_matrix() -> impl Strategy<Value = RatMatrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r).prop_map(|rows| {
                RatMatrix::from_rows(
                    rows.into_iter()
                        .map(|row| row.into_iter().map(|v| crate::exactpoly::rat(v, 1 + v.abs())).collect())
                        .collect(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(m in arb_matrix()) {
            prop_assert_eq!(rank_exact(&m), rank_exact(&m.transpose()));
        }

        #[test]
        fn modular_rank_matches_elimination(m in arb_matrix()) {
            prop_assert_eq!(rank_exact(&m), rank_bareiss(&m));
        }

        #[test]
        fn kernel_vectors_are_independent(m in arb_matrix()) {
            let k = kernel_basis(&m);
            prop_assert_eq!(k.len() + rank_exact(&m), m.cols());
            if !k.is_empty() {
                let stacked = RatMatrix::from_rows(k.clone());
                prop_assert_eq!(rank_exact(&stacked), k.len());
            }
        }
    }
}
