//! Exact integer primitives: lattice points, 3x3 integer matrices, affine
//! functionals and the Hermite normal form.
//!
//! Everything here is integer-only. Determinants and matrix products are
//! evaluated in `i128` with checked arithmetic; an overflow surfaces as
//! [`Error::Overflow`] instead of wrapping.

mod hull;

pub use hull::{
    convex_hull, count_lattice_points_dilated, count_lattice_points_up_to, interior_lattice_points, lattice_points, HullData};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint::new(0, 0, 0);

    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        LatticePoint { x, y, z }
    }

    pub fn from_coords(c: [i64; 3]) -> Self {
        LatticePoint::new(c[0], c[1], c[2])
    }

    pub fn coords(self) -> [i64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(self, o: LatticePoint) -> i64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0 && self.z == 0
    }

    /// gcd of the absolute values of the coordinates (0 for the origin).
    pub fn content(self) -> i64 {
        gcd(gcd(self.x, self.y), self.z)
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<LatticePoint> for i64 {
    type Output = LatticePoint;
    fn mul(self, p: LatticePoint) -> LatticePoint {
        LatticePoint::new(self * p.x, self * p.y, self * p.z)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

/// Signed determinant of the matrix with columns `a`, `b`, `c`.
pub fn det3(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> i128 {
    // |coordinates| < 2^40 keeps every triple product inside i128.
    let (a0, a1, a2) = (a.x as i128, a.y as i128, a.z as i128);
    let (b0, b1, b2) = (b.x as i128, b.y as i128, b.z as i128);
    let (c0, c1, c2) = (c.x as i128, c.y as i128, c.z as i128);
    a0 * (b1 * c2 - b2 * c1) - b0 * (a1 * c2 - a2 * c1) + c0 * (a1 * b2 - a2 * b1)
}

/// Integer 3x3 matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntMatrix3(pub [[i64; 3]; 3]);

impl IntMatrix3 {
    pub const IDENTITY: IntMatrix3 = IntMatrix3([[1, 0, 0], [0, 1, 0], [0, 0, 1]]);

    pub fn from_rows(r0: [i64; 3], r1: [i64; 3], r2: [i64; 3]) -> Self {
        IntMatrix3([r0, r1, r2])
    }

    pub fn from_columns(c0: LatticePoint, c1: LatticePoint, c2: LatticePoint) -> Self {
        IntMatrix3([[c0.x, c1.x, c2.x], [c0.y, c1.y, c2.y], [c0.z, c1.z, c2.z]])
    }

    pub fn column(&self, j: usize) -> LatticePoint {
        LatticePoint::new(self.0[0][j], self.0[1][j], self.0[2][j])
    }

    pub fn row(&self, i: usize) -> LatticePoint {
        LatticePoint::from_coords(self.0[i])
    }

    pub fn transpose(&self) -> IntMatrix3 {
        let m = &self.0;
        IntMatrix3([[m[0][0], m[1][0], m[2][0]], [m[0][1], m[1][1], m[2][1]], [m[0][2], m[1][2], m[2][2]]])
    }

    pub fn det(&self) -> Result<i128> {
        let w = self.wide();
        let minor = |a: i128, b: i128, c: i128, d: i128| -> Option<i128> {
            a.checked_mul(d)?.checked_sub(b.checked_mul(c)?)
        };
        let t = || -> Option<i128> {
            let m0 = minor(w[1][1], w[1][2], w[2][1], w[2][2])?;
            let m1 = minor(w[1][0], w[1][2], w[2][0], w[2][2])?;
            let m2 = minor(w[1][0], w[1][1], w[2][0], w[2][1])?;
            w[0][0]
                .checked_mul(m0)?
                .checked_sub(w[0][1].checked_mul(m1)?)?
                .checked_add(w[0][2].checked_mul(m2)?)
        };
        t().ok_or(Error::Overflow("determinant"))
    }

    /// Adjugate, so that `self * adj = det * I`.
    pub fn adjugate(&self) -> Result<IntMatrix3> {
        let m = self.wide();
        let mut out = [[0i64; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                // cofactor of entry (j, i)
                let (r0, r1) = others(j);
                let (c0, c1) = others(i);
                let c = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
                let c = if (i + j) % 2 == 0 { c } else { -c };
                *v = i64::try_from(c).map_err(|_| Error::Overflow("adjugate"))?;
            }
        }
        Ok(IntMatrix3(out))
    }

    pub fn mul(&self, o: &IntMatrix3) -> Result<IntMatrix3> {
        let a = self.wide();
        let b = o.wide();
        let mut out = [[0i64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let s = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
                out[i][j] = i64::try_from(s).map_err(|_| Error::Overflow("matrix product"))?;
            }
        }
        Ok(IntMatrix3(out))
    }

    pub fn apply(&self, p: LatticePoint) -> LatticePoint {
        let m = &self.0;
        LatticePoint::new(
            m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z,
            m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z,
            m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z,
        )
    }

    /// Inverse of a matrix with determinant ±1.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix3> {
        let d = self.det()?;
        if d.abs() != 1 {
            return Err(Error::SingularMatrix);
        }
        let adj = self.adjugate()?;
        if d == 1 {
            Ok(adj)
        } else {
            Ok(IntMatrix3(adj.0.map(|r| r.map(|v| -v))))
        }
    }

    fn wide(&self) -> [[i128; 3]; 3] {
        self.0.map(|r| r.map(|v| v as i128))
    }
}

fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `U * M = H`,
/// `|det U| = 1`, `H` upper triangular with positive diagonal and every
/// entry above a pivot reduced into `[0, pivot)`.
pub fn hnf(m: &IntMatrix3) -> Result<(IntMatrix3, IntMatrix3)> {
    const OVF: Error = Error::Overflow("hermite normal form");
    let mut h = m.wide();
    let mut u = IntMatrix3::IDENTITY.wide();

    fn row_axpy(rows: &mut [[i128; 3]; 3], dst: usize, q: i128, src: usize) -> Option<()> {
        for k in 0..3 {
            rows[dst][k] = rows[dst][k].checked_sub(q.checked_mul(rows[src][k])?)?;
        }
        Some(())
    }

    for col in 0..3 {
        // Euclid on rows col.. until only row `col` has a nonzero entry in this column.
        loop {
            let mut pivot = None;
            for r in col..3 {
                if h[r][col] != 0 && pivot.is_none_or(|p: usize| h[r][col].abs() < h[p][col].abs()) {
                    pivot = Some(r);
                }
            }
            let Some(p) = pivot else { return Err(Error::SingularMatrix) };
            h.swap(col, p);
            u.swap(col, p);
            let mut done = true;
            for r in col + 1..3 {
                if h[r][col] != 0 {
                    let q = h[r][col].div_euclid(h[col][col]);
                    row_axpy(&mut h, r, q, col).ok_or(OVF)?;
                    row_axpy(&mut u, r, q, col).ok_or(OVF)?;
                    if h[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h[col][col] < 0 {
            for k in 0..3 {
                h[col][k] = -h[col][k];
                u[col][k] = -u[col][k];
            }
        }
        for j in 0..col {
            let q = h[j][col].div_euclid(h[col][col]);
            if q != 0 {
                row_axpy(&mut h, j, q, col).ok_or(OVF)?;
                row_axpy(&mut u, j, q, col).ok_or(OVF)?;
            }
        }
    }
    let narrow = |a: [[i128; 3]; 3]| -> Result<IntMatrix3> {
        let mut out = [[0i64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = i64::try_from(a[i][j]).map_err(|_| OVF)?;
            }
        }
        Ok(IntMatrix3(out))
    };
    Ok((narrow(h)?, narrow(u)?))
}

/// Affine integer functional `p -> a*x + b*y + c*z + d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Functional {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Functional {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Functional { a, b, c, d }
    }

    pub fn linear(normal: LatticePoint) -> Self {
        Functional::new(normal.x, normal.y, normal.z, 0)
    }

    /// The functional `normal . (p - base)`.
    pub fn through(normal: LatticePoint, base: LatticePoint) -> Self {
        Functional::new(normal.x, normal.y, normal.z, -normal.dot(base))
    }

    pub fn normal(&self) -> LatticePoint {
        LatticePoint::new(self.a, self.b, self.c)
    }

    #[inline]
    pub fn eval(&self, p: LatticePoint) -> i64 {
        self.a * p.x + self.b * p.y + self.c * p.z + self.d
    }

    pub fn is_primitive(&self) -> bool {
        self.normal().content() == 1
    }

    /// Minimum and maximum over a nonempty point set.
    pub fn range_on(&self, points: &[LatticePoint]) -> (i64, i64) {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for &p in points {
            let v = self.eval(p);
            lo = lo.min(v);
            hi = hi.max(v);
        }
        (lo, hi)
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{:+}y{:+}z{:+}", self.a, self.b, self.c, self.d)
    }
}

/// Affine dimension of a point set (-1 for the empty set is reported as 0).
pub fn affine_dimension(points: &[LatticePoint]) -> u8 {
    let Some((&p0, rest)) = points.split_first() else { return 0 };
    let mut first = None;
    let mut plane = None;
    for &p in rest {
        let d = p - p0;
        if d.is_zero() {
            continue;
        }
        match first {
            None => first = Some(d),
            Some(f) => match plane {
                None => {
                    let n: LatticePoint = f.cross(d);
                    if !n.is_zero() {
                        plane = Some(n);
                    }
                }
                Some(n) => {
                    if n.dot(d) != 0 {
                        return 3;
                    }
                }
            },
        }
    }
    match (first, plane) {
        (None, _) => 0,
        (Some(_), None) => 1,
        (Some(_), Some(_)) => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_identity_and_permutation() {
        let (h, u) = hnf(&IntMatrix3::IDENTITY).unwrap();
        assert_eq!(h, IntMatrix3::IDENTITY);
        assert_eq!(u, IntMatrix3::IDENTITY);

        let p = IntMatrix3::from_rows([0, 1, 0], [0, 0, 1], [1, 0, 0]);
        let (h, u) = hnf(&p).unwrap();
        assert_eq!(h, IntMatrix3::IDENTITY);
        assert_eq!(u, p.inverse_unimodular().unwrap());
    }

    #[test]
    fn hnf_singular_is_error() {
        let m = IntMatrix3::from_rows([1, 2, 3], [2, 4, 6], [0, 0, 1]);
        assert!(matches!(hnf(&m), Err(Error::SingularMatrix)));
    }

    #[test]
    fn hnf_shape() {
        let m = IntMatrix3::from_columns(
            LatticePoint::new(2, 0, 0),
            LatticePoint::new(1, 3, 0),
            LatticePoint::new(5, 4, 7),
        );
        let (h, u) = hnf(&m).unwrap();
        assert_eq!(u.mul(&m).unwrap(), h);
        assert_eq!(u.det().unwrap().abs(), 1);
        for k in 0..3 {
            assert!(h.0[k][k] >= 1);
            for j in k + 1..3 {
                assert_eq!(h.0[j][k], 0);
            }
            for j in 0..k {
                assert!(0 <= h.0[j][k] && h.0[j][k] < h.0[k][k]);
            }
        }
        assert_eq!(h.det().unwrap(), m.det().unwrap().abs());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = IntMatrix3::from_rows([2, 1, 0], [1, 1, 0], [3, 4, 1]);
        assert_eq!(m.det().unwrap(), 1);
        let inv = m.inverse_unimodular().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), IntMatrix3::IDENTITY);
        let big = IntMatrix3::from_rows([i64::MAX, 0, 0], [0, i64::MAX, 0], [0, 0, i64::MAX]);
        assert!(matches!(big.det(), Err(Error::Overflow(_))));
    }

    #[test]
    fn dimensions() {
        let o = LatticePoint::ORIGIN;
        let e1 = LatticePoint::new(1, 0, 0);
        let e2 = LatticePoint::new(0, 1, 0);
        let e3 = LatticePoint::new(0, 0, 1);
        assert_eq!(affine_dimension(&[o]), 0);
        assert_eq!(affine_dimension(&[o, e1, 2 * e1]), 1);
        assert_eq!(affine_dimension(&[o, e1, e2, e1 + e2]), 2);
        assert_eq!(affine_dimension(&[o, e1, e2, e3]), 3);
    }
}
