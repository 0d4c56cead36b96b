//! Lattice width, width witnesses and essential vertices.
//!
//! For a full-dimensional set with an affine basis `p0 + d1, p0 + d2, p0 + d3`
//! every functional `c` of width at most `w` has `|c·d_i| <= w`. Writing
//! `m = Mᵀc` with `M = (d1 | d2 | d3)`, the candidates are `c = adj(Mᵀ) m / det`
//! for `m` in the box `[-w, w]³`; the box is grown one unit at a time, so the
//! first level with a hit is the width.

use crate::error::{Error, Result};
use crate::geometry::{affine_dimension, convex_hull, Functional, HullData, IntMatrix3, LatticePoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WidthResult {
    pub width: u64,
    /// Attains the width; takes values in `[0, width]` on the set. Its linear
    /// part is the lexicographically smallest optimal one with first nonzero
    /// coordinate positive.
    pub functional: Functional,
}

struct Dual {
    adj_t: IntMatrix3,
    det: i64,
}

fn dual_basis(points: &[LatticePoint]) -> Result<Dual> {
    let o = points[0];
    let n = points.len();
    for i in 1..n {
        let a = points[i] - o;
        for j in i + 1..n {
            let b = points[j] - o;
            let cr = a.cross(b);
            if cr.is_zero() {
                continue;
            }
            for k in j + 1..n {
                let c = points[k] - o;
                let det = cr.dot(c);
                if det != 0 {
                    let mt = IntMatrix3::from_columns(a, b, c).transpose();
                    return Ok(Dual { adj_t: mt.adjugate()?, det });
                }
            }
        }
    }
    Err(Error::NotFullDimensional)
}

fn first_nonzero_positive(m: [i64; 3]) -> bool {
    match m.iter().find(|&&v| v != 0) {
        Some(&v) => v > 0,
        None => false,
    }
}

impl Dual {
    /// The integer functional with `Mᵀc = m`, if any.
    #[inline]
    fn functional(&self, m: [i64; 3]) -> Option<LatticePoint> {
        let v = self.adj_t.apply(LatticePoint::from_coords(m));
        if v.x % self.det != 0 || v.y % self.det != 0 || v.z % self.det != 0 {
            return None;
        }
        Some(LatticePoint::new(v.x / self.det, v.y / self.det, v.z / self.det))
    }
}

fn range(c: LatticePoint, points: &[LatticePoint]) -> (i64, i64) {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for &p in points {
        let v = c.dot(p);
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (lo, hi)
}

/// Lattice width of a full-dimensional point set.
pub fn width(points: &[LatticePoint]) -> Result<WidthResult> {
    let dual = dual_basis(points)?;
    let mut w: i64 = 1;
    loop {
        let mut best: Option<(LatticePoint, i64)> = None;
        for a in -w..=w {
            for b in -w..=w {
                for c in -w..=w {
                    let m = [a, b, c];
                    if !first_nonzero_positive(m) {
                        continue;
                    }
                    let Some(mut f) = dual.functional(m) else { continue };
                    let (lo, hi) = range(f, points);
                    if hi - lo > w || f.content() != 1 {
                        continue;
                    }
                    let mut lo = lo;
                    if !first_nonzero_positive(f.coords()) {
                        f = -f;
                        lo = -hi;
                    }
                    if best.is_none_or(|(g, _)| f < g) {
                        best = Some((f, lo));
                    }
                }
            }
        }
        if let Some((f, lo)) = best {
            // every functional of width < w has m in the previous box
            return Ok(WidthResult { width: w as u64, functional: Functional::new(f.x, f.y, f.z, -lo) });
        }
        w += 1;
    }
}

/// Whether some lattice functional takes at most two consecutive values.
/// Lower-dimensional sets count as width zero.
pub fn width_at_most_one(points: &[LatticePoint]) -> bool {
    let Ok(dual) = dual_basis(points) else { return true };
    for a in -1..=1i64 {
        for b in -1..=1i64 {
            for c in -1..=1i64 {
                let m = [a, b, c];
                if !first_nonzero_positive(m) {
                    continue;
                }
                if let Some(f) = dual.functional(m) {
                    let (lo, hi) = range(f, points);
                    if hi - lo <= 1 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialVertexReport {
    pub essential: Vec<LatticePoint>,
    pub non_essential: Vec<LatticePoint>,
}

/// A vertex `v` is essential when `A \ {v}` is lower-dimensional or has width
/// at most one.
pub fn essential_vertices(points: &[LatticePoint]) -> Result<EssentialVertexReport> {
    essential_vertices_with_hull(points, &convex_hull(points))
}

pub fn essential_vertices_with_hull(points: &[LatticePoint], hull: &HullData) -> Result<EssentialVertexReport> {
    if hull.dimension < 3 {
        return Err(Error::NotFullDimensional);
    }
    let mut report = EssentialVertexReport { essential: Vec::new(), non_essential: Vec::new() };
    let mut rest = Vec::with_capacity(points.len());
    for v in hull.vertex_points() {
        rest.clear();
        rest.extend(points.iter().copied().filter(|&p| p != v));
        if affine_dimension(&rest) < 3 || width_at_most_one(&rest) {
            report.essential.push(v);
        } else {
            report.non_essential.push(v);
        }
    }
    Ok(report)
}

pub fn is_quasi_minimal(points: &[LatticePoint]) -> Result<bool> {
    Ok(essential_vertices(points)?.non_essential.len() <= 1)
}

pub fn is_minimal(points: &[LatticePoint]) -> Result<bool> {
    Ok(essential_vertices(points)?.non_essential.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64, z: i64) -> LatticePoint {
        LatticePoint::new(x, y, z)
    }

    #[test]
    fn unit_cube_has_width_one() {
        let mut cube = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    cube.push(p(x, y, z));
                }
            }
        }
        let w = width(&cube).unwrap();
        assert_eq!(w.width, 1);
        assert_eq!(w.functional, Functional::new(0, 0, 1, 0));
        assert!(width_at_most_one(&cube));
    }

    #[test]
    fn tn_has_width_two() {
        let t7 = [p(-1, -1, 1), p(-1, 1, -2), p(0, 1, 5), p(2, -1, 0), p(0, 0, 0), p(0, 0, 1), p(0, 0, 2)];
        let w = width(&t7).unwrap();
        assert_eq!(w.width, 2);
        assert!(!width_at_most_one(&t7));
        for q in &t7 {
            let v = w.functional.eval(*q);
            assert!((0..=2).contains(&v));
        }
    }

    #[test]
    fn figure_polytope_quasi_minimal_not_minimal() {
        let pts = crate::geometry::lattice_points(&convex_hull(&[p(-1, 1, 2), p(1, 0, 0), p(-1, 0, 0), p(0, 5, 0)]));
        assert_eq!(pts.len(), 9);
        assert_eq!(width(&pts).unwrap().width, 2);
        let r = essential_vertices(&pts).unwrap();
        assert_eq!(r.non_essential, vec![p(0, 5, 0)]);
        assert!(is_quasi_minimal(&pts).unwrap());
        assert!(!is_minimal(&pts).unwrap());
    }

    #[test]
    fn flat_set() {
        let flat = [p(0, 0, 0), p(1, 0, 0), p(0, 1, 0)];
        assert!(matches!(width(&flat), Err(Error::NotFullDimensional)));
        assert!(width_at_most_one(&flat));
    }
}
