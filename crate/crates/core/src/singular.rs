//! Singular points of an arrangement over the complex numbers.
//!
//! Every pair of components is intersected exactly. Lines meet lines at the
//! cross product of their coefficient vectors. Otherwise the pair is moved
//! by an integral projective shear, the `z` variable is eliminated with a
//! Sylvester resultant, and each irreducible factor `g` of the eliminant
//! gives a Galois orbit of intersection points with coordinates in
//! `Q[t]/(g)`. The fibre above the projected root must contain a single
//! common point; when it does, the root multiplicity is the local
//! intersection multiplicity, and otherwise the pair is re-sheared.
//!
//! Points from different pairs are then grouped by exact comparison of
//! their normalised algebraic coordinates, cross-checked against exact
//! incidence of every component, and classified.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{Arrangement, ArrangementError, ConicSpec, LineSpec};
use crate::exactpoly::{
    factor_rational, fmt_rational, int, squarefree_decomposition, AlgNum, HPoly, NfElem, NfPoly,
    NumberField, PolyError, Rational, UPoly,
};

/// Shears tried after the identity before giving up on a pair.
pub const MAX_SHEAR_RETRIES: usize = 8;
const SHEAR_SEED: u64 = 0x6e65_6172_6672_6565;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SingularError {
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error("no admissible projection found for {first} and {second} after {MAX_SHEAR_RETRIES} shears")]
    NumericalDegeneracy { first: String, second: String },
    #[error("unsupported singularity at {point}: {diagnosis} (components {})", .components.join(", "))]
    UnsupportedSingularity {
        diagnosis: String,
        components: Vec<String>,
        point: String,
    },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Projective point, normalised so the first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint {
    pub coords: [AlgNum; 3],
}

impl ProjPoint {
    pub fn try_eq(&mut self, other: &mut ProjPoint) -> Result<bool, PolyError> {
        for i in 0..3 {
            if !self.coords[i].try_eq(&mut other.coords[i])? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All coordinates rational.
    pub fn as_rational(&self) -> Option<[Rational; 3]> {
        let [a, b, c] = &self.coords;
        Some([a.as_rational()?, b.as_rational()?, c.as_rational()?])
    }

    pub fn is_real(&mut self) -> Result<bool, PolyError> {
        for c in self.coords.iter_mut() {
            if !c.is_real()? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(" : ")?;
            }
            match c.as_rational() {
                Some(q) => f.write_str(&fmt_rational(&q))?,
                None => {
                    let (re, im) = c.approx();
                    write!(f, "[{} ~ {re:.4}{im:+.4}i]", c.minpoly())?;
                }
            }
        }
        f.write_str(")")
    }
}

/// A Galois orbit of intersection points: the conjugates of one point with
/// coordinates in `field`, normalised so the first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointOrbit {
    pub field: NumberField,
    pub coords: [NfElem; 3],
}

impl PointOrbit {
    fn normalized(field: NumberField, coords: [NfElem; 3]) -> Result<Self, PolyError> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or(PolyError::UndefinedInput("projective point with all coordinates zero"))?;
        let inv = field.inv(&lead)?;
        let coords = coords.map(|c| field.mul(&c, &inv));
        Ok(Self { field, coords })
    }

    fn rational(p: [Rational; 3]) -> Result<Self, PolyError> {
        let k = NumberField::rationals();
        let coords = p.map(|q| k.from_rational(q));
        Self::normalized(k, coords)
    }

    /// Number of conjugate points.
    pub fn size(&self) -> usize {
        self.field.degree()
    }

    /// Whether `form` vanishes on the orbit (exact, in the number field).
    pub fn lies_on(&self, form: &HPoly) -> bool {
        form.eval_in(&self.field, &self.coords).is_zero()
    }

    /// One [`ProjPoint`] per embedding of the field.
    pub fn points(&self) -> Result<Vec<ProjPoint>, PolyError> {
        let mut out = Vec::with_capacity(self.size());
        for mut root in AlgNum::roots_of(self.field.modulus())? {
            let c0 = AlgNum::from_field_element(&self.field, &self.coords[0], &mut root)?;
            let c1 = AlgNum::from_field_element(&self.field, &self.coords[1], &mut root)?;
            let c2 = AlgNum::from_field_element(&self.field, &self.coords[2], &mut root)?;
            out.push(ProjPoint {
                coords: [c0, c1, c2],
            });
        }
        Ok(out)
    }
}

/// One intersection point of a pair of components with its local
/// intersection multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionRecord {
    pub point: ProjPoint,
    pub multiplicity: u32,
}

/// Integral change of coordinates `x -> x + c y + a z`, `y -> e x + y + b z`,
/// invertible because `c e != 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Shear {
    a: i64,
    b: i64,
    c: i64,
    e: i64,
}

impl Shear {
    const IDENTITY: Shear = Shear { a: 0, b: 0, c: 0, e: 0 };

    fn random(rng: &mut ChaCha8Rng, attempt: usize) -> Self {
        let r = (attempt as i64 + 1).min(9);
        loop {
            let s = Shear {
                a: rng.gen_range(-r..=r),
                b: rng.gen_range(-r..=r),
                c: rng.gen_range(-r..=r),
                e: rng.gen_range(-r..=r),
            };
            if s.c * s.e != 1 {
                return s;
            }
        }
    }

    fn forms(&self) -> [HPoly; 3] {
        [
            HPoly::linear(&[int(1), int(self.c), int(self.a)]),
            HPoly::linear(&[int(self.e), int(1), int(self.b)]),
            HPoly::linear(&[int(0), int(0), int(1)]),
        ]
    }

    /// Original coordinates of a point given in sheared coordinates.
    fn unshear(&self, k: &NumberField, p: &[NfElem; 3]) -> [NfElem; 3] {
        let [x, y, z] = p;
        let x0 = k.add(&k.add(x, &k.scale(y, &int(self.c))), &k.scale(z, &int(self.a)));
        let y0 = k.add(&k.add(&k.scale(x, &int(self.e)), y), &k.scale(z, &int(self.b)));
        [x0, y0, z.clone()]
    }
}

/// `h(x, 1, z)` as a polynomial in `z` with coefficients in `Q[x]`.
fn z_coefficients(h: &HPoly) -> Vec<UPoly> {
    let mut out = vec![UPoly::zero(); h.degree() as usize + 1];
    for (m, c) in h.terms() {
        let [i, _, k] = m.0;
        out[k as usize] = &out[k as usize] + &UPoly::monomial(c.clone(), i as usize);
    }
    out
}

/// Determinant of a small matrix with polynomial entries (Laplace expansion).
fn poly_det(rows: &[Vec<UPoly>]) -> UPoly {
    let n = rows.len();
    match n {
        0 => return UPoly::one(),
        1 => return rows[0][0].clone(),
        _ => {}
    }
    let mut acc = UPoly::zero();
    for col in 0..n {
        if rows[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<UPoly>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &rows[0][col] * &poly_det(&minor);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Sylvester resultant in `z` of two polynomials with `Q[x]` coefficients.
fn resultant_in_z(f: &[UPoly], g: &[UPoly]) -> UPoly {
    let (df, dg) = (f.len() - 1, g.len() - 1);
    let size = df + dg;
    let mut rows = Vec::with_capacity(size);
    for (shifts, coeffs) in [(dg, f), (df, g)] {
        for s in 0..shifts {
            let mut row = vec![UPoly::zero(); size];
            for (k, c) in coeffs.iter().rev().enumerate() {
                row[s + k] = c.clone();
            }
            rows.push(row);
        }
    }
    poly_det(&rows)
}

/// `(z - z0)^e` over the field, or `None` if `d` is not such a power.
fn single_root(k: &NumberField, d: &NfPoly) -> Option<NfElem> {
    let e = d.degree()?;
    if e == 0 {
        return None;
    }
    // d is monic: z0 = -(coefficient of z^{e-1}) / e
    let z0 = k.scale(&k.neg(&d.coeffs[e - 1]), &Rational::new(1.into(), (e as i64).into()));
    let lin = NfPoly::new(vec![k.neg(&z0), k.one()]);
    let mut pow = NfPoly::new(vec![k.one()]);
    for _ in 0..e {
        let mut next = vec![k.zero(); pow.coeffs.len() + 1];
        for (i, a) in pow.coeffs.iter().enumerate() {
            for (j, b) in lin.coeffs.iter().enumerate() {
                next[i + j] = k.add(&next[i + j], &k.mul(a, b));
            }
        }
        pow = NfPoly::new(next);
    }
    (pow == *d).then_some(z0)
}

/// Intersection orbits of two forms under one shear; `Ok(None)` when the
/// projection is not admissible.
fn try_meet(f: &HPoly, g: &HPoly, shear: &Shear) -> Result<Option<Vec<(PointOrbit, u32)>>, PolyError> {
    let forms = shear.forms();
    let (fs, gs) = (f.substitute_linear(&forms), g.substitute_linear(&forms));
    let (df, dg) = (f.degree(), g.degree());
    // the projection centre (0:0:1) must lie on neither curve
    if fs.coeff([0, 0, df]).is_zero() || gs.coeff([0, 0, dg]).is_zero() {
        return Ok(None);
    }
    let (fz, gz) = (z_coefficients(&fs), z_coefficients(&gs));
    let res = resultant_in_z(&fz, &gz);
    let n = (df * dg) as usize;
    // (x : y) = (1 : 0) must not be a root
    if res.degree() != Some(n) {
        return Ok(None);
    }
    let mut orbits = Vec::new();
    let mut total = 0usize;
    for (part, mult) in squarefree_decomposition(&res)? {
        for factor in factor_rational(&part)? {
            let k = NumberField::new(&factor);
            let lift = |coeffs: &[UPoly]| NfPoly::new(coeffs.iter().map(|c| k.elem(c)).collect());
            let common = NfPoly::gcd(&k, &lift(&fz), &lift(&gz))?;
            let Some(z0) = single_root(&k, &common) else {
                return Ok(None);
            };
            let sheared = [k.generator(), k.one(), z0];
            let original = shear.unshear(&k, &sheared);
            total += mult as usize * k.degree();
            orbits.push((PointOrbit::normalized(k, original)?, mult));
        }
    }
    assert_eq!(total, n, "eliminant roots do not account for the Bezout number");
    Ok(Some(orbits))
}

/// Exact intersection orbits of two distinct irreducible forms.
fn meet_orbits(f: &HPoly, g: &HPoly, rng: &mut ChaCha8Rng) -> Result<Option<Vec<(PointOrbit, u32)>>, PolyError> {
    if let Some(found) = try_meet(f, g, &Shear::IDENTITY)? {
        return Ok(Some(found));
    }
    for attempt in 0..MAX_SHEAR_RETRIES {
        if let Some(found) = try_meet(f, g, &Shear::random(rng, attempt))? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

fn expand(orbits: &[(PointOrbit, u32)]) -> Result<Vec<IntersectionRecord>, PolyError> {
    let mut out = Vec::new();
    for (orbit, mult) in orbits {
        for point in orbit.points()? {
            out.push(IntersectionRecord {
                point,
                multiplicity: *mult,
            });
        }
    }
    Ok(out)
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn line_line_orbit(l1: &LineSpec, l2: &LineSpec) -> Result<PointOrbit, SingularError> {
    let p = cross(&l1.coeffs, &l2.coeffs);
    if p.iter().all(Zero::is_zero) {
        return Err(ArrangementError::RepeatedComponent {
            first: "line".into(),
            second: "line".into(),
        }
        .into());
    }
    Ok(PointOrbit::rational(p)?)
}

/// The unique meeting point of two distinct lines, multiplicity 1.
pub fn line_line_meet(l1: &LineSpec, l2: &LineSpec) -> Result<IntersectionRecord, SingularError> {
    let orbit = line_line_orbit(l1, l2)?;
    let point = orbit.points()?.remove(0);
    Ok(IntersectionRecord {
        point,
        multiplicity: 1,
    })
}

fn degeneracy(first: &str, second: &str) -> SingularError {
    SingularError::NumericalDegeneracy {
        first: first.into(),
        second: second.into(),
    }
}

/// Two simple points or one tangency point.
pub fn line_conic_meet(l: &LineSpec, c: &ConicSpec) -> Result<Vec<IntersectionRecord>, SingularError> {
    let mut rng = ChaCha8Rng::seed_from_u64(SHEAR_SEED);
    let orbits = meet_orbits(&l.form(), &c.form(), &mut rng)?.ok_or_else(|| degeneracy("line", "conic"))?;
    Ok(expand(&orbits)?)
}

/// Intersection points of two distinct smooth conics with contact orders.
pub fn conic_conic_meet(c1: &ConicSpec, c2: &ConicSpec) -> Result<Vec<IntersectionRecord>, SingularError> {
    let mut rng = ChaCha8Rng::seed_from_u64(SHEAR_SEED);
    let orbits = meet_orbits(&c1.form(), &c2.form(), &mut rng)?.ok_or_else(|| degeneracy("conic", "conic"))?;
    Ok(expand(&orbits)?)
}

/// All intersections of one pair of components.
#[derive(Debug, Clone)]
pub struct PairIntersection {
    pub pair: (usize, usize),
    pub orbits: Vec<(PointOrbit, u32)>,
    pub records: Vec<IntersectionRecord>,
}

impl PairIntersection {
    /// Sum of multiplicities over all points of the pair.
    pub fn bezout_sum(&self) -> usize {
        self.orbits.iter().map(|(o, m)| o.size() * *m as usize).sum()
    }
}

/// Intersects every pair of components and audits Bezout for each.
pub fn pairwise_intersections(arr: &Arrangement) -> Result<Vec<PairIntersection>, SingularError> {
    arr.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(SHEAR_SEED);
    let n = arr.num_components();
    let d = arr.d();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let orbits = if j < d {
                vec![(line_line_orbit(&arr.lines[i], &arr.lines[j])?, 1)]
            } else {
                let (f, g) = (arr.component(i).form(), arr.component(j).form());
                meet_orbits(&f, &g, &mut rng)?.ok_or_else(|| degeneracy(&arr.label(i), &arr.label(j)))?
            };
            let records = expand(&orbits)?;
            let pi = PairIntersection {
                pair: (i, j),
                orbits,
                records,
            };
            let expected = (arr.component(i).degree() * arr.component(j).degree()) as usize;
            if pi.bezout_sum() != expected {
                return Err(SingularError::Inconsistent(alloc::format!(
                    "{} and {} meet with total multiplicity {} instead of {expected}",
                    arr.label(i),
                    arr.label(j),
                    pi.bezout_sum()
                )));
            }
            out.push(pi);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingKind {
    /// A1: two transversal branches.
    Node,
    /// A3: two branches with simple tangency.
    Tacnode,
    /// D4: three pairwise transversal branches.
    Triple,
}

impl SingKind {
    pub fn local_tjurina(self) -> usize {
        match self {
            SingKind::Node => 1,
            SingKind::Tacnode => 3,
            SingKind::Triple => 4,
        }
    }
}

impl fmt::Display for SingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SingKind::Node => "node",
            SingKind::Tacnode => "tacnode",
            SingKind::Triple => "triple point",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingPoint {
    pub point: ProjPoint,
    /// Component indices through the point, ascending.
    pub branches: Vec<usize>,
    pub multiplicities: Vec<((usize, usize), u32)>,
    pub kind: SingKind,
}

/// The vector `(d, k; n2, t, n3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakCombinatorics {
    pub d: usize,
    pub k: usize,
    pub n2: usize,
    pub t: usize,
    pub n3: usize,
}

impl WeakCombinatorics {
    pub fn new(d: usize, k: usize, n2: usize, t: usize, n3: usize) -> Self {
        Self { d, k, n2, t, n3 }
    }

    /// Degree `2k + d`.
    pub fn m(&self) -> usize {
        2 * self.k + self.d
    }

    pub fn tau(&self) -> usize {
        tjurina_from_wc(self)
    }
}

impl fmt::Display for WeakCombinatorics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={}, k={}; n2={}, t={}, n3={})", self.d, self.k, self.n2, self.t, self.n3)
    }
}

/// `binom(m, 2) - k == n2 + 2t + 3 n3`.
pub fn check_count(wc: &WeakCombinatorics) -> bool {
    let m = wc.m();
    m * m.saturating_sub(1) / 2 == wc.k + wc.n2 + 2 * wc.t + 3 * wc.n3
}

/// `n2 + 3t + 4 n3`.
pub fn tjurina_from_wc(wc: &WeakCombinatorics) -> usize {
    wc.n2 + 3 * wc.t + 4 * wc.n3
}

struct Group {
    point: ProjPoint,
    members: Vec<((usize, usize), u32, usize)>,
}

/// Locates, groups and classifies every singular point.
pub fn group_and_classify(arr: &Arrangement) -> Result<(Vec<SingPoint>, WeakCombinatorics), SingularError> {
    let pairs = pairwise_intersections(arr)?;
    let forms: Vec<HPoly> = arr.components().map(|c| c.form()).collect();

    // incidence of each orbit, computed exactly in its number field
    let mut incidence: Vec<Vec<BTreeSet<usize>>> = Vec::with_capacity(pairs.len());
    for pi in &pairs {
        let sets = pi
            .orbits
            .iter()
            .map(|(o, _)| (0..forms.len()).filter(|&c| o.lies_on(&forms[c])).collect())
            .collect();
        incidence.push(sets);
    }

    let mut groups: Vec<Group> = Vec::new();
    for (pidx, pi) in pairs.iter().enumerate() {
        let mut rec = 0;
        for (oidx, (orbit, mult)) in pi.orbits.iter().enumerate() {
            for _ in 0..orbit.size() {
                let mut point = pi.records[rec].point.clone();
                rec += 1;
                let mut found = None;
                for (g, group) in groups.iter_mut().enumerate() {
                    if point.try_eq(&mut group.point)? {
                        found = Some(g);
                        break;
                    }
                }
                let member = (pi.pair, *mult, pidx * 1000 + oidx);
                match found {
                    Some(g) => groups[g].members.push(member),
                    None => groups.push(Group {
                        point,
                        members: vec![member],
                    }),
                }
            }
        }
    }

    let mut points = Vec::with_capacity(groups.len());
    let mut unsupported = None;
    for group in groups {
        let branches: BTreeSet<usize> = group.members.iter().flat_map(|((a, b), _, _)| [*a, *b]).collect();
        let nb = branches.len();
        if group.members.len() != nb * (nb - 1) / 2 {
            return Err(SingularError::Inconsistent(alloc::format!(
                "point {} has {} pair records for {nb} branches",
                group.point,
                group.members.len()
            )));
        }
        for (_, _, key) in &group.members {
            let exact = &incidence[key / 1000][key % 1000];
            if *exact != branches {
                return Err(SingularError::Inconsistent(alloc::format!(
                    "grouped branches {:?} at {} disagree with exact incidence {:?}",
                    branches,
                    group.point,
                    exact
                )));
            }
        }
        let mults: Vec<((usize, usize), u32)> = group.members.iter().map(|(p, m, _)| (*p, *m)).collect();
        let labels = || branches.iter().map(|&b| arr.label(b)).collect::<Vec<_>>();
        let kind = match nb {
            2 => match mults[0].1 {
                1 => Some(SingKind::Node),
                2 => Some(SingKind::Tacnode),
                mu => {
                    unsupported.get_or_insert_with(|| SingularError::UnsupportedSingularity {
                        diagnosis: alloc::format!("two branches with contact order {mu} (A{} or worse)", 2 * mu - 1),
                        components: labels(),
                        point: alloc::format!("{}", group.point),
                    });
                    None
                }
            },
            3 if mults.iter().all(|(_, m)| *m == 1) => Some(SingKind::Triple),
            3 => {
                unsupported.get_or_insert_with(|| SingularError::UnsupportedSingularity {
                    diagnosis: "tangency inside a three-branch point".into(),
                    components: labels(),
                    point: alloc::format!("{}", group.point),
                });
                None
            }
            _ => {
                unsupported.get_or_insert_with(|| SingularError::UnsupportedSingularity {
                    diagnosis: alloc::format!("{nb} branches through one point"),
                    components: labels(),
                    point: alloc::format!("{}", group.point),
                });
                None
            }
        };
        if let Some(kind) = kind {
            points.push(SingPoint {
                point: group.point,
                branches: branches.into_iter().collect(),
                multiplicities: mults,
                kind,
            });
        }
    }
    if let Some(err) = unsupported {
        return Err(err);
    }

    let count = |k: SingKind| points.iter().filter(|p| p.kind == k).count();
    let wc = WeakCombinatorics::new(
        arr.d(),
        arr.k(),
        count(SingKind::Node),
        count(SingKind::Tacnode),
        count(SingKind::Triple),
    );
    if !check_count(&wc) {
        return Err(SingularError::Inconsistent(alloc::format!(
            "combinatorial count fails for {wc}"
        )));
    }
    Ok((points, wc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn rational_points(recs: &[IntersectionRecord]) -> Vec<([Rational; 3], u32)> {
        recs.iter()
            .filter_map(|r| r.point.as_rational().map(|p| (p, r.multiplicity)))
            .collect()
    }

    fn pt(a: i64, b: i64, c: i64) -> [Rational; 3] {
        [int(a), int(b), int(c)]
    }

    #[test]
    fn lines_meet_in_one_point() {
        let r = line_line_meet(&LineSpec::from_ints(1, 0, 0), &LineSpec::from_ints(0, 1, 0)).unwrap();
        assert_eq!((r.point.as_rational().unwrap(), r.multiplicity), (pt(0, 0, 1), 1));
        let r = line_line_meet(&LineSpec::from_ints(-1, 1, -4), &LineSpec::from_ints(1, 1, -4)).unwrap();
        assert_eq!(r.point.as_rational().unwrap(), [int(0), int(1), rat(1, 4)]);
        // y = z and y = 2z meet at infinity
        let r = line_line_meet(&LineSpec::from_ints(0, 1, -1), &LineSpec::from_ints(0, 1, -2)).unwrap();
        assert_eq!(r.point.as_rational().unwrap(), pt(1, 0, 0));
        assert!(line_line_meet(&LineSpec::from_ints(1, 2, 3), &LineSpec::from_ints(2, 4, 6)).is_err());
    }

    #[test]
    fn line_conic_cases() {
        let circle16 = ConicSpec::from_ints([1, 1, -16, 0, 0, 0]);
        let recs = line_conic_meet(&LineSpec::from_ints(-1, 1, 4), &circle16).unwrap();
        let mut got = rational_points(&recs);
        got.sort();
        // (4:0:1) and (0:-4:1) normalised by their first nonzero coordinate
        let mut want = vec![([int(1), int(0), rat(1, 4)], 1), ([int(0), int(1), rat(-1, 4)], 1)];
        want.sort();
        assert_eq!(got, want);

        let unit = ConicSpec::from_ints([1, 1, -1, 0, 0, 0]);
        let recs = line_conic_meet(&LineSpec::from_ints(0, 1, -1), &unit).unwrap();
        assert_eq!(rational_points(&recs), [(pt(0, 1, 1), 2)]);

        let recs = line_conic_meet(&LineSpec::from_ints(0, 0, 1), &unit).unwrap();
        assert_eq!(recs.len(), 2);
        for r in &recs {
            assert_eq!(r.multiplicity, 1);
            assert_eq!(r.point.coords[0].as_rational(), Some(int(1)));
            assert_eq!(r.point.coords[1].minpoly(), &UPoly::from_ints(&[1, 0, 1]));
            assert_eq!(r.point.coords[2].as_rational(), Some(int(0)));
        }
    }

    #[test]
    fn conic_conic_cases() {
        let unit = ConicSpec::from_ints([1, 1, -1, 0, 0, 0]);
        let recs = conic_conic_meet(&unit, &ConicSpec::from_ints([1, 1, -4, 0, 0, 0])).unwrap();
        assert_eq!(recs.len(), 2);
        for r in &recs {
            assert_eq!(r.multiplicity, 2);
            assert_eq!(r.point.coords[1].minpoly(), &UPoly::from_ints(&[1, 0, 1]));
        }

        let recs = conic_conic_meet(&unit, &ConicSpec::from_ints([2, 1, -1, 0, 0, 0])).unwrap();
        let mut got = rational_points(&recs);
        got.sort();
        assert_eq!(got, [(pt(0, 1, -1), 2), (pt(0, 1, 1), 2)]);

        let recs = conic_conic_meet(&ConicSpec::from_ints([1, 2, -3, 1, 0, 0]), &ConicSpec::from_ints([3, -1, -2, 0, 1, 1])).unwrap();
        assert_eq!(recs.len(), 4);
        assert!(recs.iter().all(|r| r.multiplicity == 1));
    }

    #[test]
    fn count_and_tjurina_arithmetic() {
        assert!(check_count(&WeakCombinatorics::new(5, 1, 6, 4, 2)));
        assert!(!check_count(&WeakCombinatorics::new(1, 1, 1, 0, 0)));
        assert!(check_count(&WeakCombinatorics::new(4, 1, 2, 0, 4)));
        assert_eq!(tjurina_from_wc(&WeakCombinatorics::new(1, 1, 2, 0, 0)), 2);
        assert_eq!(tjurina_from_wc(&WeakCombinatorics::new(3, 1, 3, 0, 2)), 11);
        assert_eq!(tjurina_from_wc(&WeakCombinatorics::new(1, 1, 0, 0, 0)), 0);
    }
}
