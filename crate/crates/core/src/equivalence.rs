//! Canonical forms of lattice point configurations under affine unimodular
//! maps, together with the automorphism group and cheap invariants.
//!
//! A configuration is canonicalized by sending an ordered affine basis
//! `(p0, p1, p2, p3)` of its points to the origin and the columns of the
//! Hermite normal form of `(p1-p0, p2-p0, p3-p0)`. The left unimodular factor
//! is killed by the normal form, so the image set only depends on the basis up
//! to equivalence; the representative is the lexicographically smallest image
//! over a set of bases selected by equivalence-invariant criteria:
//!
//! 1. the 4-subsets of minimal nonzero volume,
//! 2. among their orderings, those whose per-point invariant key
//!    (number of minimal-volume subsets through the point, total volume of
//!    subsets through the point) is lexicographically smallest.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::geometry::{affine_dimension, convex_hull, det3, hnf, Functional, HullData, IntMatrix3, LatticePoint};

/// `p -> linear * p + translation`, with `|det linear| = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineUnimodularMap {
    pub linear: IntMatrix3,
    pub translation: LatticePoint,
}

impl AffineUnimodularMap {
    pub const IDENTITY: AffineUnimodularMap =
        AffineUnimodularMap { linear: IntMatrix3::IDENTITY, translation: LatticePoint::ORIGIN };

    pub fn new(linear: IntMatrix3, translation: LatticePoint) -> Result<Self> {
        if linear.det()?.abs() != 1 {
            return Err(Error::SingularMatrix);
        }
        Ok(AffineUnimodularMap { linear, translation })
    }

    pub fn translation(t: LatticePoint) -> Self {
        AffineUnimodularMap { linear: IntMatrix3::IDENTITY, translation: t }
    }

    #[inline]
    pub fn apply(&self, p: LatticePoint) -> LatticePoint {
        self.linear.apply(p) + self.translation
    }

    pub fn apply_all(&self, points: &[LatticePoint]) -> Vec<LatticePoint> {
        points.iter().map(|&p| self.apply(p)).collect()
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &AffineUnimodularMap) -> Result<AffineUnimodularMap> {
        Ok(AffineUnimodularMap {
            linear: self.linear.mul(&inner.linear)?,
            translation: self.apply(inner.translation),
        })
    }

    pub fn inverse(&self) -> Result<AffineUnimodularMap> {
        let inv = self.linear.inverse_unimodular()?;
        Ok(AffineUnimodularMap { linear: inv, translation: -inv.apply(self.translation) })
    }

    /// The functional `f ∘ self⁻¹`, so that `push_forward(f)(self(p)) = f(p)`.
    pub fn push_forward(&self, f: &Functional) -> Result<Functional> {
        let inv = self.inverse()?;
        let n = inv.linear.transpose().apply(f.normal());
        Ok(Functional::new(n.x, n.y, n.z, f.eval(inv.translation)))
    }

    pub fn determinant(&self) -> i128 {
        self.linear.det().expect("unimodular maps have small entries")
    }
}

impl fmt::Display for AffineUnimodularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.linear.0;
        write!(f, "[{:?} {:?} {:?}] + {}", m[0], m[1], m[2], self.translation)
    }
}

/// A finite set of lattice points, kept sorted and deduplicated, with its hull
/// computed on first use.
#[derive(Clone, Default)]
pub struct PointConfiguration {
    points: Vec<LatticePoint>,
    hull: OnceLock<HullData>,
}

impl PointConfiguration {
    pub fn new(mut points: Vec<LatticePoint>) -> Self {
        points.sort_unstable();
        points.dedup();
        PointConfiguration { points, hull: OnceLock::new() }
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn into_points(self) -> Vec<LatticePoint> {
        self.points
    }

    pub fn hull(&self) -> &HullData {
        self.hull.get_or_init(|| convex_hull(&self.points))
    }

    pub fn dimension(&self) -> u8 {
        affine_dimension(&self.points)
    }
}

impl Deref for PointConfiguration {
    type Target = [LatticePoint];
    fn deref(&self) -> &[LatticePoint] {
        &self.points
    }
}

impl PartialEq for PointConfiguration {
    fn eq(&self, o: &Self) -> bool {
        self.points == o.points
    }
}
impl Eq for PointConfiguration {}

impl Hash for PointConfiguration {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.points.hash(state)
    }
}

impl fmt::Debug for PointConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.points.iter()).finish()
    }
}

impl From<Vec<LatticePoint>> for PointConfiguration {
    fn from(v: Vec<LatticePoint>) -> Self {
        PointConfiguration::new(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    /// Canonical representative, sorted lexicographically.
    pub points: Vec<LatticePoint>,
    pub hash: u64,
    pub automorphism_count: usize,
}

/// FNV-1a over the coordinate stream.
pub fn fingerprint(points: &[LatticePoint]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for p in points {
        for c in p.coords() {
            for b in c.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        }
    }
    h
}

#[derive(Clone, Debug)]
pub struct Canonicalization {
    pub form: CanonicalForm,
    /// Maps the input configuration onto `form.points`.
    pub witness: AffineUnimodularMap,
    /// Every affine unimodular map fixing `form.points` setwise.
    pub automorphisms: Vec<AffineUnimodularMap>,
}

struct Basis {
    origin: LatticePoint,
    u: IntMatrix3,
}

impl Basis {
    fn as_map(&self) -> AffineUnimodularMap {
        AffineUnimodularMap { linear: self.u, translation: -self.u.apply(self.origin) }
    }
}

/// Selects the ordered bases to try. Returns index quadruples.
fn select_bases(points: &[LatticePoint]) -> Result<Vec<[usize; 4]>> {
    let n = points.len();
    if n < 4 || affine_dimension(points) < 3 {
        return Err(Error::NotFullDimensional);
    }
    let mut subsets: Vec<([usize; 4], u64)> = Vec::with_capacity(n * n * n * n / 24);
    let mut min_vol = u64::MAX;
    let mut total = vec![0u64; n];
    for a in 0..n {
        for b in a + 1..n {
            let db = points[b] - points[a];
            for c in b + 1..n {
                let dc = points[c] - points[a];
                let cr = db.cross(dc);
                for d in c + 1..n {
                    let v = cr.dot(points[d] - points[a]).unsigned_abs();
                    if v == 0 {
                        continue;
                    }
                    for i in [a, b, c, d] {
                        total[i] += v;
                    }
                    min_vol = min_vol.min(v);
                    subsets.push(([a, b, c, d], v));
                }
            }
        }
    }
    let mut min_count = vec![0u32; n];
    for (s, v) in &subsets {
        if *v == min_vol {
            for &i in s {
                min_count[i] += 1;
            }
        }
    }
    let key = |i: usize| (min_count[i], total[i]);
    let mut best_key = None;
    let mut bases = Vec::new();
    for (s, v) in &subsets {
        if *v != min_vol {
            continue;
        }
        for perm in PERMS_4 {
            let q = [s[perm[0]], s[perm[1]], s[perm[2]], s[perm[3]]];
            let k = [key(q[0]), key(q[1]), key(q[2]), key(q[3])];
            match best_key {
                Some(bk) if k > bk => continue,
                Some(bk) if k == bk => bases.push(q),
                _ => {
                    best_key = Some(k);
                    bases.clear();
                    bases.push(q);
                }
            }
        }
    }
    Ok(bases)
}

const PERMS_4: [[usize; 4]; 24] = [
    [0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3], [0, 2, 3, 1], [0, 3, 1, 2], [0, 3, 2, 1],
    [1, 0, 2, 3], [1, 0, 3, 2], [1, 2, 0, 3], [1, 2, 3, 0], [1, 3, 0, 2], [1, 3, 2, 0],
    [2, 0, 1, 3], [2, 0, 3, 1], [2, 1, 0, 3], [2, 1, 3, 0], [2, 3, 0, 1], [2, 3, 1, 0],
    [3, 0, 1, 2], [3, 0, 2, 1], [3, 1, 0, 2], [3, 1, 2, 0], [3, 2, 0, 1], [3, 2, 1, 0],
];

/// The unimodular `U` with `U * (p1-p0 | p2-p0 | p3-p0)` in Hermite normal form.
fn basis_transform(points: &[LatticePoint], q: [usize; 4]) -> Result<Basis> {
    let o = points[q[0]];
    let m = IntMatrix3::from_columns(points[q[1]] - o, points[q[2]] - o, points[q[3]] - o);
    let det = det3(m.column(0), m.column(1), m.column(2));
    let u = if det.abs() == 1 {
        let adj = m.adjugate()?;
        if det == 1 {
            adj
        } else {
            IntMatrix3(adj.0.map(|r| r.map(|v| -v)))
        }
    } else {
        hnf(&m)?.1
    };
    Ok(Basis { origin: o, u })
}

fn image_into(points: &[LatticePoint], b: &Basis, out: &mut Vec<LatticePoint>) {
    out.clear();
    out.extend(points.iter().map(|&p| b.u.apply(p - b.origin)));
    out.sort_unstable();
}

/// Runs the minimization; returns the representative and the bases achieving
/// it (only the first one unless `keep_minimizers`).
fn minimize(points: &[LatticePoint], keep_minimizers: bool) -> Result<(Vec<LatticePoint>, Vec<Basis>)> {
    let bases = select_bases(points)?;
    let mut best: Vec<LatticePoint> = Vec::new();
    let mut cur: Vec<LatticePoint> = Vec::with_capacity(points.len());
    let mut minimizers = Vec::new();
    for q in bases {
        let b = basis_transform(points, q)?;
        image_into(points, &b, &mut cur);
        if best.is_empty() || cur < best {
            std::mem::swap(&mut best, &mut cur);
            minimizers.clear();
            minimizers.push(b);
        } else if keep_minimizers && cur == best {
            minimizers.push(b);
        }
    }
    Ok((best, minimizers))
}

/// Canonical representative only; the hot-path variant used for dedup.
pub fn canonical_points(points: &[LatticePoint]) -> Result<Vec<LatticePoint>> {
    Ok(minimize(points, false)?.0)
}

/// Canonical representative plus one map sending `points` onto it.
pub fn canonical_with_witness(points: &[LatticePoint]) -> Result<(Vec<LatticePoint>, AffineUnimodularMap)> {
    let (rep, bases) = minimize(points, false)?;
    Ok((rep, bases[0].as_map()))
}

/// Full canonicalization: representative, a witness map and the automorphism
/// group of the representative.
pub fn canonical_form(points: &[LatticePoint]) -> Result<Canonicalization> {
    let (rep, minimizers) = minimize(points, true)?;
    let witness = minimizers[0].as_map();
    let mut autos: Vec<AffineUnimodularMap> = Vec::with_capacity(minimizers.len());
    let mut seen = HashSet::new();
    for b in &minimizers {
        // witness ∘ b⁻¹ maps rep -> points -> rep
        let g = witness.compose(&b.as_map().inverse()?)?;
        if seen.insert(g) {
            autos.push(g);
        }
    }
    autos.sort();
    Ok(Canonicalization {
        form: CanonicalForm { hash: fingerprint(&rep), points: rep, automorphism_count: autos.len() },
        witness,
        automorphisms: autos,
    })
}

/// Sorted multiset of `|det(p1-p0, p2-p0, p3-p0)|` over all 4-subsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VolumeVectorInvariant(pub Vec<u64>);

pub fn volume_vector_invariant(points: &[LatticePoint]) -> VolumeVectorInvariant {
    let n = points.len();
    let mut v = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let o = points[a];
                    v.push(det3(points[b] - o, points[c] - o, points[d] - o).unsigned_abs() as u64);
                }
            }
        }
    }
    v.sort_unstable();
    VolumeVectorInvariant(v)
}

/// Decides equivalence; on success returns a map `t` with `t(a) = b`.
pub fn are_equivalent(a: &[LatticePoint], b: &[LatticePoint]) -> Result<Option<AffineUnimodularMap>> {
    if affine_dimension(a) < 3 || affine_dimension(b) < 3 {
        return Err(Error::NotFullDimensional);
    }
    if a.len() != b.len() || volume_vector_invariant(a) != volume_vector_invariant(b) {
        return Ok(None);
    }
    let ca = canonical_form(a)?;
    let cb = canonical_form(b)?;
    if ca.form.points != cb.form.points {
        return Ok(None);
    }
    Ok(Some(cb.witness.inverse()?.compose(&ca.witness)?))
}

/// Every affine unimodular map sending `a` onto `b` setwise.
pub fn transformations_between(a: &[LatticePoint], b: &[LatticePoint]) -> Result<Vec<AffineUnimodularMap>> {
    let ca = canonical_form(a)?;
    let cb = canonical_form(b)?;
    if a.len() != b.len() || ca.form.points != cb.form.points {
        return Ok(Vec::new());
    }
    let back = cb.witness.inverse()?;
    let mut out = Vec::with_capacity(ca.automorphisms.len());
    for s in &ca.automorphisms {
        out.push(back.compose(&s.compose(&ca.witness)?)?);
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64, z: i64) -> LatticePoint {
        LatticePoint::new(x, y, z)
    }

    fn unit() -> Vec<LatticePoint> {
        vec![p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(0, 0, 1)]
    }

    #[test]
    fn translated_tetrahedron_same_form() {
        let a = canonical_points(&unit()).unwrap();
        let b = canonical_points(&[p(5, 3, 1), p(6, 3, 1), p(5, 4, 1), p(5, 3, 2)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(canonical_points(&a).unwrap(), a);
    }

    #[test]
    fn unit_tetrahedron_symmetries() {
        let c = canonical_form(&unit()).unwrap();
        assert_eq!(c.form.automorphism_count, 24);
        assert_eq!(transformations_between(&unit(), &unit()).unwrap().len(), 24);
    }

    #[test]
    fn inequivalent_volumes() {
        let empty2 = [p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(1, 1, 2)];
        assert!(are_equivalent(&unit(), &empty2).unwrap().is_none());
    }

    #[test]
    fn flat_input_rejected() {
        let flat = [p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(1, 1, 0)];
        assert!(matches!(canonical_form(&flat), Err(Error::NotFullDimensional)));
    }

    #[test]
    fn witness_maps_onto_representative() {
        let pts = vec![p(-1, -1, 1), p(-1, 1, -2), p(0, 1, 5), p(2, -1, 0), p(0, 0, 0), p(0, 0, 1), p(0, 0, 2)];
        let c = canonical_form(&pts).unwrap();
        let mut img = c.witness.apply_all(&pts);
        img.sort();
        assert_eq!(img, c.form.points);
        assert!(c.automorphisms.contains(&AffineUnimodularMap::IDENTITY));
    }

    #[test]
    fn volume_vector_of_unit() {
        assert_eq!(volume_vector_invariant(&unit()).0, vec![1]);
    }

    #[test]
    fn map_inverse_roundtrip() {
        let m = AffineUnimodularMap::new(IntMatrix3::from_rows([1, 2, 0], [0, 1, 0], [3, 1, -1]), p(4, -2, 7)).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(inv.compose(&m).unwrap(), AffineUnimodularMap::IDENTITY);
        assert_eq!(m.determinant().abs(), 1);
    }
}
