//! Exact convex hulls of small lattice point sets.
//!
//! Facets are found by testing every affinely independent triple of input
//! points as a candidate supporting plane. Inputs in this crate have at most a
//! few dozen points, so the quartic cost is irrelevant next to exactness, and
//! coplanar points fall into a single facet without any merging step.

use super::{det3, Functional, LatticePoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullData {
    /// The input points, in input order.
    pub points: Vec<LatticePoint>,
    /// Indices into `points` of the vertices of the hull, ascending.
    pub vertices: Vec<usize>,
    /// Inward facet functionals: primitive, zero on the facet, positive
    /// inside. For lower-dimensional hulls these are the relative facets
    /// inside the affine hull.
    pub facets: Vec<Functional>,
    /// Functionals vanishing on the affine hull (empty when `dimension == 3`).
    pub equations: Vec<Functional>,
    pub dimension: u8,
    /// Six times the Euclidean volume; zero unless `dimension == 3`.
    pub normalized_volume: u64,
}

impl HullData {
    pub fn vertex_points(&self) -> Vec<LatticePoint> {
        self.vertices.iter().map(|&i| self.points[i]).collect()
    }

    #[inline]
    pub fn contains(&self, p: LatticePoint) -> bool {
        self.equations.iter().all(|f| f.eval(p) == 0) && self.facets.iter().all(|f| f.eval(p) >= 0)
    }

    #[inline]
    pub fn contains_strictly(&self, p: LatticePoint) -> bool {
        self.equations.iter().all(|f| f.eval(p) == 0) && self.facets.iter().all(|f| f.eval(p) > 0)
    }

    /// Volume recomputed as a signed sum over oriented facet triangles with
    /// apex at the origin. Independent of the fan used for
    /// `normalized_volume`; both must agree.
    pub fn normalized_volume_by_divergence(&self) -> u64 {
        if self.dimension != 3 {
            return 0;
        }
        let mut total: i128 = 0;
        for f in &self.facets {
            let ring = self.facet_ring(f);
            // outward orientation: (b - a) x (c - a) points against the inward normal
            for w in 1..ring.len() - 1 {
                let (a, b, c) = (ring[0], ring[w], ring[w + 1]);
                total -= det3(a, b, c);
            }
        }
        total.unsigned_abs() as u64
    }

    /// Vertices on facet `f`, ordered so that consecutive triples turn
    /// counter-clockwise around the inward normal.
    fn facet_ring(&self, f: &Functional) -> Vec<LatticePoint> {
        let mut ring: Vec<LatticePoint> =
            self.vertices.iter().map(|&i| self.points[i]).filter(|&p| f.eval(p) == 0).collect();
        let n = f.normal();
        let a = ring[0];
        ring[1..].sort_by(|&p, &q| {
            let s = n.dot((p - a).cross(q - a));
            0.cmp(&s)
        });
        ring
    }
}

/// Exact hull of a nonempty list of distinct lattice points.
pub fn convex_hull(points: &[LatticePoint]) -> HullData {
    assert!(!points.is_empty(), "convex_hull of an empty set");
    let dimension = super::affine_dimension(points);
    let mut hull = HullData {
        points: points.to_vec(),
        vertices: Vec::new(),
        facets: Vec::new(),
        equations: Vec::new(),
        dimension,
        normalized_volume: 0,
    };
    match dimension {
        3 => full_dimensional(&mut hull),
        2 => planar(&mut hull),
        1 => linear(&mut hull),
        _ => {
            let p = points[0];
            hull.equations = vec![
                Functional::new(1, 0, 0, -p.x),
                Functional::new(0, 1, 0, -p.y),
                Functional::new(0, 0, 1, -p.z),
            ];
            hull.vertices = vec![0];
        }
    }
    hull
}

fn primitive_through(normal: LatticePoint, base: LatticePoint) -> Functional {
    let g = normal.content();
    let n = LatticePoint::new(normal.x / g, normal.y / g, normal.z / g);
    Functional::through(n, base)
}

/// Orients `f` so that all points evaluate `>= 0`; `None` if `f` separates them.
fn supporting(f: Functional, points: &[LatticePoint]) -> Option<Functional> {
    let (mut pos, mut neg) = (false, false);
    for &p in points {
        let v = f.eval(p);
        if v > 0 {
            pos = true;
        } else if v < 0 {
            neg = true;
        }
        if pos && neg {
            return None;
        }
    }
    if neg {
        Some(Functional::new(-f.a, -f.b, -f.c, -f.d))
    } else {
        Some(f)
    }
}

fn full_dimensional(hull: &mut HullData) {
    let pts = &hull.points;
    let n = pts.len();
    let mut facets: Vec<Functional> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let dij = pts[j] - pts[i];
            for k in j + 1..n {
                if facets.iter().any(|f| f.eval(pts[i]) == 0 && f.eval(pts[j]) == 0 && f.eval(pts[k]) == 0) {
                    continue;
                }
                let normal = dij.cross(pts[k] - pts[i]);
                if normal.is_zero() {
                    continue;
                }
                if let Some(f) = supporting(primitive_through(normal, pts[i]), pts) {
                    facets.push(f);
                }
            }
        }
    }
    facets.sort();
    hull.vertices = (0..n)
        .filter(|&i| {
            let on: Vec<LatticePoint> =
                facets.iter().filter(|f| f.eval(pts[i]) == 0).map(|f| f.normal()).collect();
            spans_space(&on)
        })
        .collect();
    hull.facets = facets;
    hull.normalized_volume = fan_volume(hull);
}

fn spans_space(normals: &[LatticePoint]) -> bool {
    for a in 0..normals.len() {
        for b in a + 1..normals.len() {
            let c = normals[a].cross(normals[b]);
            if c.is_zero() {
                continue;
            }
            if normals[b + 1..].iter().any(|&n| c.dot(n) != 0) {
                return true;
            }
        }
    }
    false
}

/// Sum of |det| over the fan from the first vertex to every facet triangle
/// not containing it.
fn fan_volume(hull: &HullData) -> u64 {
    let apex = hull.points[hull.vertices[0]];
    let mut total: u128 = 0;
    for f in &hull.facets {
        if f.eval(apex) == 0 {
            continue;
        }
        let ring = hull.facet_ring(f);
        for w in 1..ring.len() - 1 {
            total += det3(ring[0] - apex, ring[w] - apex, ring[w + 1] - apex).unsigned_abs();
        }
    }
    total as u64
}

fn planar(hull: &mut HullData) {
    let pts = &hull.points;
    let p0 = pts[0];
    let mut normal = LatticePoint::ORIGIN;
    'outer: for i in 1..pts.len() {
        for j in i + 1..pts.len() {
            normal = (pts[i] - p0).cross(pts[j] - p0);
            if !normal.is_zero() {
                break 'outer;
            }
        }
    }
    let plane = primitive_through(normal, p0);
    let n = plane.normal();
    let mut edges: Vec<Functional> = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let e = pts[j] - pts[i];
            if e.is_zero() {
                continue;
            }
            if edges.iter().any(|f| f.eval(pts[i]) == 0 && f.eval(pts[j]) == 0) {
                continue;
            }
            let m = n.cross(e);
            if let Some(f) = supporting(primitive_through(m, pts[i]), pts) {
                edges.push(f);
            }
        }
    }
    edges.sort();
    hull.vertices = (0..pts.len()).filter(|&i| edges.iter().filter(|f| f.eval(pts[i]) == 0).count() >= 2).collect();
    hull.facets = edges;
    hull.equations = vec![plane];
}

fn linear(hull: &mut HullData) {
    let pts = &hull.points;
    let p0 = pts[0];
    let dir = pts.iter().map(|&p| p - p0).find(|d| !d.is_zero()).expect("dimension 1");
    let g = dir.content();
    let dir = LatticePoint::new(dir.x / g, dir.y / g, dir.z / g);
    let axes = [LatticePoint::new(1, 0, 0), LatticePoint::new(0, 1, 0), LatticePoint::new(0, 0, 1)];
    hull.equations =
        axes.iter().map(|&e| dir.cross(e)).filter(|c| !c.is_zero()).map(|c| primitive_through(c, p0)).collect();
    let t = |p: LatticePoint| dir.dot(p - p0);
    let lo = (0..pts.len()).min_by_key(|&i| t(pts[i])).unwrap();
    let hi = (0..pts.len()).max_by_key(|&i| t(pts[i])).unwrap();
    hull.facets = vec![Functional::through(dir, pts[lo]), Functional::through(-dir, pts[hi])];
    let mut v = vec![lo, hi];
    v.sort_unstable();
    hull.vertices = v;
}

/// Integer interval `[lo, hi]` of `z` allowed by the facets at fixed `(x, y)`.
fn z_interval(funcs: &[Functional], x: i64, y: i64, lo: i64, hi: i64) -> Option<(i64, i64)> {
    let (mut lo, mut hi) = (lo, hi);
    for f in funcs {
        let r = f.a * x + f.b * y + f.d;
        if f.c > 0 {
            // c*z >= -r
            lo = lo.max((-r).div_euclid(f.c) + i64::from((-r).rem_euclid(f.c) != 0));
        } else if f.c < 0 {
            // z <= r / -c
            hi = hi.min(r.div_euclid(-f.c));
        } else if r < 0 {
            return None;
        }
        if lo > hi {
            return None;
        }
    }
    Some((lo, hi))
}

fn bounding_box(points: &[LatticePoint], scale: i64) -> ([i64; 3], [i64; 3]) {
    let mut lo = [i64::MAX; 3];
    let mut hi = [i64::MIN; 3];
    for p in points {
        for (k, c) in p.coords().into_iter().enumerate() {
            lo[k] = lo[k].min(c * scale);
            hi[k] = hi[k].max(c * scale);
        }
    }
    (lo, hi)
}

/// Visits every lattice point of `scale * hull`, lexicographically. Stops
/// early when `visit` returns `false`.
pub(crate) fn scan_lattice_points(hull: &HullData, scale: i64, mut visit: impl FnMut(LatticePoint) -> bool) {
    let verts = hull.vertex_points();
    let (lo, hi) = bounding_box(&verts, scale);
    let scaled = |f: &Functional| Functional::new(f.a, f.b, f.c, f.d * scale);
    let facets: Vec<Functional> = hull.facets.iter().map(scaled).collect();
    let equations: Vec<Functional> = hull.equations.iter().map(scaled).collect();
    let mut constraints = facets.clone();
    for e in &equations {
        constraints.push(*e);
        constraints.push(Functional::new(-e.a, -e.b, -e.c, -e.d));
    }
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            let Some((z0, z1)) = z_interval(&constraints, x, y, lo[2], hi[2]) else { continue };
            for z in z0..=z1 {
                if !visit(LatticePoint::new(x, y, z)) {
                    return;
                }
            }
        }
    }
}

/// All lattice points of the hull, sorted lexicographically.
pub fn lattice_points(hull: &HullData) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    scan_lattice_points(hull, 1, |p| {
        out.push(p);
        true
    });
    out
}

/// Lattice points strictly inside a full-dimensional hull.
pub fn interior_lattice_points(hull: &HullData) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    scan_lattice_points(hull, 1, |p| {
        if hull.contains_strictly(p) {
            out.push(p);
        }
        true
    });
    out
}

/// Number of lattice points of `k * hull`.
pub fn count_lattice_points_dilated(hull: &HullData, k: i64) -> usize {
    let mut n = 0;
    scan_lattice_points(hull, k, |_| {
        n += 1;
        true
    });
    n
}

/// Number of lattice points, giving up (returning `limit + 1`) once `limit`
/// is exceeded.
pub fn count_lattice_points_up_to(hull: &HullData, limit: usize) -> usize {
    let mut n = 0;
    scan_lattice_points(hull, 1, |_| {
        n += 1;
        n <= limit
    });
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64, z: i64) -> LatticePoint {
        LatticePoint::new(x, y, z)
    }

    fn t_n(n: i64) -> Vec<LatticePoint> {
        vec![p(-1, -1, 1), p(-1, 1, -2), p(0, 1, 2 * n - 9), p(2, -1, 0)]
    }

    #[test]
    fn unit_tetrahedron() {
        let h = convex_hull(&[p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(0, 0, 1)]);
        assert_eq!(h.dimension, 3);
        assert_eq!(h.vertices.len(), 4);
        assert_eq!(h.facets.len(), 4);
        assert_eq!(h.normalized_volume, 1);
        assert_eq!(lattice_points(&h).len(), 4);
        assert!(interior_lattice_points(&h).is_empty());
    }

    #[test]
    fn t7_volume_and_points() {
        let h = convex_hull(&t_n(7));
        assert_eq!(h.normalized_volume, 44);
        assert_eq!(h.vertices.len(), 4);
        let pts = lattice_points(&h);
        assert_eq!(pts.len(), 7);
        for q in [p(0, 0, 0), p(0, 0, 1), p(0, 0, 2)] {
            assert!(pts.contains(&q));
        }
        assert_eq!(interior_lattice_points(&h), vec![p(0, 0, 0), p(0, 0, 1), p(0, 0, 2)]);
    }

    #[test]
    fn collinear_points() {
        let h = convex_hull(&[p(0, 0, 0), p(0, 0, 1), p(0, 0, 2)]);
        assert_eq!(h.dimension, 1);
        assert_eq!(h.vertices, vec![0, 2]);
        assert_eq!(lattice_points(&h).len(), 3);
    }

    #[test]
    fn dilated_simplex() {
        let h = convex_hull(&[p(0, 0, 0), p(2, 0, 0), p(0, 2, 0), p(0, 0, 2)]);
        assert_eq!(h.normalized_volume, 8);
        assert_eq!(lattice_points(&h).len(), 10);
        assert!(interior_lattice_points(&h).is_empty());
    }

    #[test]
    fn planar_hexagon_points() {
        let pts = [p(1, 0, 5), p(0, 1, 5), p(-1, 1, 5), p(-1, 0, 5), p(0, -1, 5), p(1, -1, 5), p(0, 0, 5)];
        let h = convex_hull(&pts);
        assert_eq!(h.dimension, 2);
        assert_eq!(h.vertices.len(), 6);
        assert_eq!(lattice_points(&h).len(), 7);
    }

    #[test]
    fn cube_has_six_facets() {
        let mut pts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    pts.push(p(x, y, z));
                }
            }
        }
        let h = convex_hull(&pts);
        assert_eq!(h.facets.len(), 6);
        assert_eq!(h.vertices.len(), 8);
        assert_eq!(h.normalized_volume, 6);
        assert_eq!(h.normalized_volume_by_divergence(), 6);
    }
}
