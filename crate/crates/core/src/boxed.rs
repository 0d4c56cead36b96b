//! Boxed polytopes: all lattice points except three outliers `v1, v2, v3` are
//! vertices of a parallelepiped `Q = ∩ f_i⁻¹[0,1]`, and `f_i(v_j) ∉ {0,1}`
//! exactly when `i = j`.
//!
//! From size seven on, `Q` is either the unit cube or the half-volume
//! parallelepiped `Q0` cut out by `y+z, x+z, x+y`. The census runs three sweeps:
//!
//! * `Q0`: the four lattice points of `Q0` plus one outlier from each of three
//!   eight-element menus;
//! * unit cube, every edge of the cube met: start from the whole cube plus
//!   outliers one step outside it, then peel cube vertices;
//! * unit cube, some edge missed: eight cube-vertex subsets up to symmetry,
//!   with outliers up to six steps outside when their edge is missed.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::equivalence::{canonical_with_witness, PointConfiguration};
use crate::error::{Error, Result};
use crate::geometry::{
    affine_dimension, convex_hull, count_lattice_points_up_to, det3, Functional, IntMatrix3, LatticePoint,
};
use crate::width::{essential_vertices_with_hull, width_at_most_one};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoxKind {
    /// `|det(f1, f2, f3)| = 1`.
    UnitCube,
    /// `|det(f1, f2, f3)| = 2`.
    Q0,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxedCertificate {
    pub kind: BoxKind,
    pub functionals: [Functional; 3],
    pub outliers: [LatticePoint; 3],
    pub box_points: Vec<LatticePoint>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoxedDefect {
    TooManyPoints,
    NotFullDimensional,
    WidthAtMostOne,
    NotPrimitive(usize),
    KindMismatch,
    OutlierNotInConfiguration(usize),
    /// `f_i(v_j) ∈ {0,1}` fails to hold exactly for `i ≠ j`.
    OutlierPattern { functional: usize, outlier: usize },
    PointOutsideBox(LatticePoint),
    BoxPointsMismatch,
}

impl fmt::Display for BoxedDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

fn zero_one(v: i64) -> bool {
    v == 0 || v == 1
}

/// Checks every condition of a boxed certificate against `points` exactly.
pub fn verify_boxed(points: &[LatticePoint], cert: &BoxedCertificate) -> std::result::Result<(), BoxedDefect> {
    if points.len() > 11 {
        return Err(BoxedDefect::TooManyPoints);
    }
    if affine_dimension(points) < 3 {
        return Err(BoxedDefect::NotFullDimensional);
    }
    for (i, f) in cert.functionals.iter().enumerate() {
        if !f.is_primitive() {
            return Err(BoxedDefect::NotPrimitive(i));
        }
    }
    let [f1, f2, f3] = cert.functionals;
    let det = det3(f1.normal(), f2.normal(), f3.normal()).abs();
    let expected = match cert.kind {
        BoxKind::UnitCube => 1,
        BoxKind::Q0 => 2,
    };
    if det != expected {
        return Err(BoxedDefect::KindMismatch);
    }
    for (j, v) in cert.outliers.iter().enumerate() {
        if !points.contains(v) {
            return Err(BoxedDefect::OutlierNotInConfiguration(j));
        }
    }
    for (i, f) in cert.functionals.iter().enumerate() {
        for (j, v) in cert.outliers.iter().enumerate() {
            if zero_one(f.eval(*v)) == (i == j) {
                return Err(BoxedDefect::OutlierPattern { functional: i, outlier: j });
            }
        }
    }
    let mut inside: Vec<LatticePoint> = points.iter().copied().filter(|p| !cert.outliers.contains(p)).collect();
    for &p in &inside {
        if !cert.functionals.iter().all(|f| zero_one(f.eval(p))) {
            return Err(BoxedDefect::PointOutsideBox(p));
        }
    }
    inside.sort_unstable();
    let mut listed = cert.box_points.clone();
    listed.sort_unstable();
    if inside != listed {
        return Err(BoxedDefect::BoxPointsMismatch);
    }
    if width_at_most_one(points) {
        return Err(BoxedDefect::WidthAtMostOne);
    }
    Ok(())
}

/// Functionals `f`, normalized to minimum 0 on `rest`, taking only the values
/// 0 and 1 on `rest` and another value at `v`.
fn slab_functionals(rest: &[LatticePoint], v: LatticePoint) -> Vec<Functional> {
    let mut out = Vec::new();
    let mut push = |n: LatticePoint| {
        if n.is_zero() || n.content() != 1 {
            return;
        }
        let (lo, hi) = Functional::linear(n).range_on(rest);
        if hi - lo <= 1 {
            let f = Functional::new(n.x, n.y, n.z, -lo);
            if !zero_one(f.eval(v)) && !out.contains(&f) {
                out.push(f);
            }
            if hi == lo {
                // a plane: the slab can sit on either side of it
                let g = Functional::new(n.x, n.y, n.z, 1 - lo);
                if !zero_one(g.eval(v)) && !out.contains(&g) {
                    out.push(g);
                }
            }
        }
    };
    if affine_dimension(rest) == 3 {
        // dual-basis box [-1,1]³ holds every functional of width <= 1
        let o = rest[0];
        let basis = independent_triple(rest).expect("full-dimensional");
        let m = IntMatrix3::from_columns(basis[0] - o, basis[1] - o, basis[2] - o).transpose();
        let det = m.det().expect("small entries") as i64;
        let adj = m.adjugate().expect("small entries");
        for a in -1..=1i64 {
            for b in -1..=1i64 {
                for c in -1..=1i64 {
                    let w = adj.apply(LatticePoint::new(a, b, c));
                    if w.x % det == 0 && w.y % det == 0 && w.z % det == 0 {
                        let n = LatticePoint::new(w.x / det, w.y / det, w.z / det);
                        push(n);
                    }
                }
            }
        }
    } else if affine_dimension(rest) == 2 {
        let o = rest[0];
        let normal = rest
            .iter()
            .flat_map(|&a| rest.iter().map(move |&b| (a - o).cross(b - o)))
            .find(|n| !n.is_zero())
            .expect("planar");
        let g = normal.content();
        push(LatticePoint::new(normal.x / g, normal.y / g, normal.z / g));
        push(LatticePoint::new(-normal.x / g, -normal.y / g, -normal.z / g));
    }
    out
}

fn independent_triple(points: &[LatticePoint]) -> Option<[LatticePoint; 3]> {
    let o = points[0];
    for i in 1..points.len() {
        for j in i + 1..points.len() {
            for k in j + 1..points.len() {
                if det3(points[i] - o, points[j] - o, points[k] - o) != 0 {
                    return Some([points[i], points[j], points[k]]);
                }
            }
        }
    }
    None
}

/// Searches for a certificate, preferring the unit cube. Outliers are
/// restricted to points whose removal leaves a set of dimension at least two.
pub fn find_boxed_certificate(points: &[LatticePoint]) -> Option<BoxedCertificate> {
    if points.len() > 11 || affine_dimension(points) < 3 || width_at_most_one(points) {
        return None;
    }
    let mut options: Vec<(usize, Functional)> = Vec::new();
    for (i, &v) in points.iter().enumerate() {
        let rest: Vec<LatticePoint> = points.iter().copied().filter(|&p| p != v).collect();
        options.extend(slab_functionals(&rest, v).into_iter().map(|f| (i, f)));
    }
    let mut q0 = None;
    for a in 0..options.len() {
        for b in 0..options.len() {
            for c in 0..options.len() {
                let (ia, fa) = options[a];
                let (ib, fb) = options[b];
                let (ic, fc) = options[c];
                if ia == ib || ia == ic || ib == ic {
                    continue;
                }
                let kind = match det3(fa.normal(), fb.normal(), fc.normal()).abs() {
                    1 => BoxKind::UnitCube,
                    2 => BoxKind::Q0,
                    _ => continue,
                };
                let outliers = [points[ia], points[ib], points[ic]];
                let cert = BoxedCertificate {
                    kind,
                    functionals: [fa, fb, fc],
                    outliers,
                    box_points: points.iter().copied().filter(|p| !outliers.contains(p)).collect(),
                };
                if verify_boxed(points, &cert).is_err() {
                    continue;
                }
                if kind == BoxKind::UnitCube {
                    return Some(cert);
                }
                q0.get_or_insert(cert);
            }
        }
    }
    q0
}

/// A boxed class in canonical coordinates, with a certificate in the same
/// coordinates.
#[derive(Clone, Debug)]
pub struct BoxedClass {
    pub points: Vec<LatticePoint>,
    pub vertex_count: usize,
    pub certificate: BoxedCertificate,
}

impl BoxedClass {
    pub fn size(&self) -> usize {
        self.points.len()
    }
}

/// Canonicalizes candidates, carries certificates along, and keeps the first
/// certificate seen per class.
fn dedup_classes(found: Vec<(Vec<LatticePoint>, BoxedCertificate)>) -> Result<Vec<BoxedClass>> {
    let canon: Vec<(Vec<LatticePoint>, BoxedCertificate)> = found
        .into_par_iter()
        .map(|(pts, cert)| {
            let (rep, phi) = canonical_with_witness(&pts)?;
            let functionals = [
                phi.push_forward(&cert.functionals[0])?,
                phi.push_forward(&cert.functionals[1])?,
                phi.push_forward(&cert.functionals[2])?,
            ];
            let outliers = cert.outliers.map(|v| phi.apply(v));
            let mut box_points = phi.apply_all(&cert.box_points);
            box_points.sort_unstable();
            Ok((rep, BoxedCertificate { kind: cert.kind, functionals, outliers, box_points }))
        })
        .collect::<Result<_>>()?;
    let mut by_form: BTreeMap<Vec<LatticePoint>, BoxedCertificate> = BTreeMap::new();
    for (rep, cert) in canon {
        by_form.entry(rep).or_insert(cert);
    }
    Ok(by_form
        .into_iter()
        .map(|(points, certificate)| BoxedClass {
            vertex_count: convex_hull(&points).vertices.len(),
            points,
            certificate,
        })
        .collect())
}

/// Whether `conv(points)` has no lattice points besides `points`, which must
/// be distinct.
fn exact(points: &[LatticePoint]) -> bool {
    let hull = convex_hull(points);
    count_lattice_points_up_to(&hull, points.len()) == points.len()
}

const fn p(x: i64, y: i64, z: i64) -> LatticePoint {
    LatticePoint::new(x, y, z)
}

const Q0_BASE: [LatticePoint; 4] = [p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(0, 0, 1)];

const Q0_MENUS: [[LatticePoint; 8]; 3] = [
    [p(-1, 1, 1), p(-1, 1, 2), p(-1, 2, 1), p(0, 1, 1), p(1, -1, -1), p(1, -1, 0), p(1, 0, -1), p(2, -1, -1)],
    [p(1, -1, 1), p(1, -1, 2), p(2, -1, 1), p(1, 0, 1), p(-1, 1, -1), p(-1, 1, 0), p(0, 1, -1), p(-1, 2, -1)],
    [p(1, 1, -1), p(1, 2, -1), p(2, 1, -1), p(1, 1, 0), p(-1, -1, 1), p(-1, 0, 1), p(0, -1, 1), p(-1, -1, 2)],
];

const Q0_FUNCTIONALS: [Functional; 3] =
    [Functional::new(0, 1, 1, 0), Functional::new(1, 0, 1, 0), Functional::new(1, 1, 0, 0)];

const UNIT_FUNCTIONALS: [Functional; 3] =
    [Functional::new(1, 0, 0, 0), Functional::new(0, 1, 0, 0), Functional::new(0, 0, 1, 0)];

/// Size-seven configurations boxed with respect to `Q0`.
pub fn boxed_enumerate_q0() -> Result<Vec<BoxedClass>> {
    let mut found = Vec::new();
    for &v1 in &Q0_MENUS[0] {
        for &v2 in &Q0_MENUS[1] {
            for &v3 in &Q0_MENUS[2] {
                let mut pts = Q0_BASE.to_vec();
                pts.extend([v1, v2, v3]);
                pts.sort_unstable();
                pts.dedup();
                if pts.len() != 7 || affine_dimension(&pts) < 3 || !exact(&pts) {
                    continue;
                }
                let cert = BoxedCertificate {
                    kind: BoxKind::Q0,
                    functionals: Q0_FUNCTIONALS,
                    outliers: [v1, v2, v3],
                    box_points: Q0_BASE.to_vec(),
                };
                if verify_boxed(&pts, &cert).is_ok() {
                    found.push((pts, cert));
                }
            }
        }
    }
    dedup_classes(found)
}

/// Cube vertex `i`, with bit 0 for x, bit 1 for y, bit 2 for z.
fn cube_vertex(i: usize) -> LatticePoint {
    p((i & 1) as i64, ((i >> 1) & 1) as i64, ((i >> 2) & 1) as i64)
}

fn cube_points(mask: u8) -> Vec<LatticePoint> {
    (0..8).filter(|i| mask >> i & 1 == 1).map(cube_vertex).collect()
}

/// Outlier along axis `axis` at coordinate `a`, the other coordinates given by
/// the two bits of `lambda`.
fn outlier(axis: usize, a: i64, lambda: usize) -> LatticePoint {
    let mut c = [0i64; 3];
    let others: Vec<usize> = (0..3).filter(|&j| j != axis).collect();
    c[axis] = a;
    c[others[0]] = (lambda & 1) as i64;
    c[others[1]] = ((lambda >> 1) & 1) as i64;
    LatticePoint::from_coords(c)
}

fn unit_certificate(mask: u8, v: [LatticePoint; 3]) -> BoxedCertificate {
    BoxedCertificate { kind: BoxKind::UnitCube, functionals: UNIT_FUNCTIONALS, outliers: v, box_points: cube_points(mask) }
}

fn assemble(mask: u8, v: &[LatticePoint]) -> Vec<LatticePoint> {
    let mut pts = cube_points(mask);
    pts.extend_from_slice(v);
    pts.sort_unstable();
    pts
}

/// Unit-cube configurations reachable from the whole cube: all eight cube
/// vertices with outliers at `a_i ∈ {-1, 2}`, then every sequence of
/// cube-vertex removals keeping the exact lattice-point set and width above
/// one. Peeling continues past the point where some cube edge is missed.
pub fn boxed_enumerate_fulledge() -> Result<Vec<BoxedClass>> {
    let mut choices: Vec<Vec<LatticePoint>> = vec![Vec::new(); 3];
    for (axis, list) in choices.iter_mut().enumerate() {
        for a in [-1, 2] {
            for lambda in 0..4 {
                list.push(outlier(axis, a, lambda));
            }
        }
    }
    let mut triples = Vec::new();
    for &v1 in &choices[0] {
        for &v2 in &choices[1] {
            for &v3 in &choices[2] {
                triples.push([v1, v2, v3]);
            }
        }
    }
    let found: Vec<(Vec<LatticePoint>, BoxedCertificate)> = triples
        .par_iter()
        .flat_map_iter(|&v| {
            let mut out = Vec::new();
            let mut alive = [false; 256];
            // supersets come first when masks are visited in decreasing order
            for mask in (0..=255u8).rev() {
                if mask.count_ones() < 4 {
                    continue;
                }
                let reachable = mask == 255 || (0..8).any(|i| mask >> i & 1 == 0 && alive[(mask | 1 << i) as usize]);
                if !reachable {
                    continue;
                }
                let pts = assemble(mask, &v);
                if affine_dimension(&pts) < 3 || !exact(&pts) || width_at_most_one(&pts) {
                    continue;
                }
                alive[mask as usize] = true;
                out.push((pts, unit_certificate(mask, v)));
            }
            out
        })
        .collect();
    dedup_classes(found)
}

/// One cube-vertex subset per symmetry class among those of size at least
/// four that miss an edge. Masks use bit `x + 2y + 4z`.
pub const MISSING_EDGE_CLASSES: [u8; 8] = [
    0b0111_0111, // triangular prism: cube minus the edge x = y = 1
    0b0101_0111, // pyramid over the facet x = 0, apex (1,0,0)
    0b0011_1101, // pyramid over the rectangle y + z = 1, apex (0,0,0)
    0b0101_0101, // facet x = 0
    0b1001_1001, // diagonal rectangle x = y
    0b0001_0111, // corner tetrahedron at the origin
    0b0011_0101, // unimodular tetrahedron (0,0,0),(0,0,1),(0,1,0),(1,0,1)
    0b1001_0101, // unimodular tetrahedron (0,0,0),(0,0,1),(0,1,0),(1,1,1)
];

/// Unit-cube configurations whose cube part misses some edge.
pub fn boxed_enumerate_missingedge() -> Result<Vec<BoxedClass>> {
    let found: Vec<(Vec<LatticePoint>, BoxedCertificate)> = MISSING_EDGE_CLASSES
        .par_iter()
        .flat_map_iter(|&mask| missing_edge_sweep(mask))
        .collect();
    dedup_classes(found)
}

fn missing_edge_sweep(mask: u8) -> Vec<(Vec<LatticePoint>, BoxedCertificate)> {
    let cube = cube_points(mask);
    // outliers that alone add no lattice point
    let mut cands: Vec<Vec<LatticePoint>> = vec![Vec::new(); 3];
    for (axis, list) in cands.iter_mut().enumerate() {
        for lambda in 0..4 {
            let lo = outlier(axis, 0, lambda);
            let hi = outlier(axis, 1, lambda);
            let edge_met = cube.contains(&lo) || cube.contains(&hi);
            let range: Vec<i64> = if edge_met { vec![-1, 2] } else { (-6..=7).filter(|a| !zero_one(*a)).collect() };
            for a in range {
                let v = outlier(axis, a, lambda);
                let mut pts = cube.clone();
                pts.push(v);
                if exact(&pts) {
                    list.push(v);
                }
            }
        }
    }
    let pair_ok = |x: LatticePoint, y: LatticePoint| {
        let mut pts = cube.clone();
        pts.extend([x, y]);
        exact(&pts)
    };
    let mut out = Vec::new();
    for &v1 in &cands[0] {
        for &v2 in &cands[1] {
            if !pair_ok(v1, v2) {
                continue;
            }
            for &v3 in &cands[2] {
                if !pair_ok(v1, v3) || !pair_ok(v2, v3) {
                    continue;
                }
                let pts = assemble(mask, &[v1, v2, v3]);
                if affine_dimension(&pts) < 3 || width_at_most_one(&pts) || !exact(&pts) {
                    continue;
                }
                out.push((pts, unit_certificate(mask, [v1, v2, v3])));
            }
        }
    }
    out
}

/// Union of the three sweeps, one entry per class, sorted by size and then by
/// canonical form.
pub fn boxed_all() -> Result<&'static [BoxedClass]> {
    static ALL: OnceLock<Vec<BoxedClass>> = OnceLock::new();
    if let Some(v) = ALL.get() {
        return Ok(v);
    }
    let mut found = Vec::new();
    for sweep in [boxed_enumerate_q0()?, boxed_enumerate_fulledge()?, boxed_enumerate_missingedge()?] {
        found.extend(sweep.into_iter().map(|c| (c.points, c.certificate)));
    }
    let mut all = dedup_classes(found)?;
    all.sort_by(|a, b| (a.size(), &a.points).cmp(&(b.size(), &b.points)));
    Ok(ALL.get_or_init(|| all))
}

/// Quasi-minimal boxed classes of size `n`, in canonical form.
pub fn boxed_quasiminimal(n: usize) -> Result<Vec<PointConfiguration>> {
    if n < 7 {
        return Err(Error::UseSeedLists(n));
    }
    let mut out = Vec::new();
    for class in boxed_all()?.iter().filter(|c| c.size() == n) {
        let hull = convex_hull(&class.points);
        if essential_vertices_with_hull(&class.points, &hull)?.non_essential.len() <= 1 {
            out.push(PointConfiguration::new(class.points.clone()));
        }
    }
    Ok(out)
}

/// Class counts keyed by `(size, vertex count)`.
pub fn census(classes: &[BoxedClass]) -> BTreeMap<(usize, usize), usize> {
    let mut m = BTreeMap::new();
    for c in classes {
        *m.entry((c.size(), c.vertex_count)).or_insert(0) += 1;
    }
    m
}

/// Per-size totals of a census.
pub fn totals_by_size(classes: &[BoxedClass]) -> HashMap<usize, usize> {
    let mut m = HashMap::new();
    for c in classes {
        *m.entry(c.size()).or_insert(0) += 1;
    }
    m
}

/// The quasi-minimal boxed representatives shipped in
/// `data/boxed_quasiminimal_v1.txt`, as `(size, vertices)`.
pub fn reference_quasiminimal() -> Vec<(usize, Vec<LatticePoint>)> {
    const DATA: &str = include_str!("../data/boxed_quasiminimal_v1.txt");
    DATA.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace();
            let size = it.next().and_then(|s| s.parse().ok()).expect("size field");
            let verts = it
                .map(|t| {
                    let c: Vec<i64> = t.split(',').map(|x| x.parse().expect("coordinate")).collect();
                    LatticePoint::new(c[0], c[1], c[2])
                })
                .collect();
            (size, verts)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::lattice_points;

    #[test]
    fn spiked_and_boxed_example() {
        let pts = vec![p(1, 0, 0), p(0, 1, 2), p(-1, 0, 0), p(0, -1, 1), p(0, 0, 0), p(0, 0, 1)];
        let mut cert = BoxedCertificate {
            kind: BoxKind::UnitCube,
            functionals: UNIT_FUNCTIONALS,
            outliers: [p(-1, 0, 0), p(0, -1, 1), p(0, 1, 2)],
            box_points: vec![p(0, 0, 0), p(0, 0, 1), p(1, 0, 0)],
        };
        assert_eq!(verify_boxed(&pts, &cert), Ok(()));
        cert.outliers[2] = p(0, 1, 1);
        assert!(verify_boxed(&pts, &cert).is_err());
    }

    #[test]
    fn second_dilation_is_boxed() {
        let pts = lattice_points(&convex_hull(&[p(0, 0, 0), p(2, 0, 0), p(0, 2, 0), p(0, 0, 2)]));
        let outliers = [p(2, 0, 0), p(0, 2, 0), p(0, 0, 2)];
        let cert = BoxedCertificate {
            kind: BoxKind::UnitCube,
            functionals: UNIT_FUNCTIONALS,
            outliers,
            box_points: pts.iter().copied().filter(|q| !outliers.contains(q)).collect(),
        };
        assert_eq!(verify_boxed(&pts, &cert), Ok(()));
        assert_eq!(find_boxed_certificate(&pts).map(|c| c.kind), Some(BoxKind::UnitCube));
    }

    #[test]
    fn missing_edge_classes_are_the_cube_orbits() {
        let mut group = Vec::new();
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            for flips in 0..8usize {
                group.push((perm, flips));
            }
        }
        let act = |(perm, flips): ([usize; 3], usize), mask: u8| -> u8 {
            let mut out = 0u8;
            for i in 0..8usize {
                if mask >> i & 1 == 1 {
                    let bits = [i & 1, i >> 1 & 1, i >> 2 & 1];
                    let j: usize = (0..3).map(|k| (bits[perm[k]] ^ (flips >> k & 1)) << k).sum();
                    out |= 1 << j;
                }
            }
            out
        };
        let orbit_min = |mask: u8| group.iter().map(|&g| act(g, mask)).min().unwrap();
        let edges: Vec<(usize, usize)> =
            (0..8).flat_map(|i| (0..3).map(move |b| (i, i ^ (1 << b)))).filter(|(i, j)| i < j).collect();
        let mut orbits: Vec<u8> = (0..=255u8)
            .filter(|m| m.count_ones() >= 4)
            .filter(|m| edges.iter().any(|&(i, j)| m >> i & 1 == 0 && m >> j & 1 == 0))
            .map(orbit_min)
            .collect();
        orbits.sort_unstable();
        orbits.dedup();
        let mut ours: Vec<u8> = MISSING_EDGE_CLASSES.iter().map(|&m| orbit_min(m)).collect();
        ours.sort_unstable();
        assert_eq!(ours, orbits);
    }

    #[test]
    fn reference_data_shape() {
        let r = reference_quasiminimal();
        assert_eq!(r.len(), 32);
        for (size, verts) in r {
            assert_eq!(lattice_points(&convex_hull(&verts)).len(), size);
        }
    }
}
