//! Spiked quasi-minimal polytopes: closed-form families indexed by the length
//! `k` of the long vertical fiber.
//!
//! Every family is instantiated at each parameter choice whose size formula
//! can give the requested size. Candidates are then re-validated (exact size,
//! width above one, quasi-minimality) and deduplicated, so the `k = 2`
//! degenerations need no special casing.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use crate::equivalence::{canonical_points, PointConfiguration};
use crate::error::{Error, Result};
use crate::geometry::{convex_hull, lattice_points, LatticePoint};
use crate::width::{essential_vertices_with_hull, width_at_most_one};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpikedFamily {
    Minimal,
    Q1,
    Q2,
    Q3,
    Q4,
    Q5,
    Q6,
    Q7,
    Q8,
    Q9,
    Q10a,
    Q10b,
}

impl SpikedFamily {
    pub const ALL: [SpikedFamily; 12] = [
        SpikedFamily::Minimal,
        SpikedFamily::Q1,
        SpikedFamily::Q2,
        SpikedFamily::Q3,
        SpikedFamily::Q4,
        SpikedFamily::Q5,
        SpikedFamily::Q6,
        SpikedFamily::Q7,
        SpikedFamily::Q8,
        SpikedFamily::Q9,
        SpikedFamily::Q10a,
        SpikedFamily::Q10b,
    ];

    /// Declared size for parameters `(k, b)`; only `Q10a` depends on `b`.
    pub fn size(self, k: i64, b: i64) -> i64 {
        match self {
            SpikedFamily::Q1 | SpikedFamily::Q4 | SpikedFamily::Q5 | SpikedFamily::Q6 | SpikedFamily::Q7 => k + 4,
            SpikedFamily::Q3 => k + 6,
            SpikedFamily::Q10a => (3 * k + b).div_euclid(2) + 5,
            _ => k + 5,
        }
    }

    /// The admissible `(a, b)` pairs for a given `k`; unused slots are 0.
    fn parameters(self, k: i64) -> Vec<(i64, i64)> {
        match self {
            SpikedFamily::Minimal => vec![(0, 0), (0, 1), (1, 1)],
            SpikedFamily::Q5 => vec![(-1, 0), (0, 0)],
            SpikedFamily::Q6 => vec![(-2, 0), (-1, 0), (0, 0)],
            SpikedFamily::Q7 => vec![(-5, 0), (-1, 0)],
            SpikedFamily::Q8 => [-1, 0].iter().flat_map(|&a| (a..2 * k).map(move |b| (a, b))).collect(),
            SpikedFamily::Q9 => [-2, -1, 0].iter().flat_map(|&a| [0, 1].map(|b| (a, b))).collect(),
            SpikedFamily::Q10a => vec![(-1, -1), (-1, 0), (0, -1), (0, 0)],
            SpikedFamily::Q10b => vec![(-1, 0), (0, 0)],
            _ => vec![(0, 0)],
        }
    }

    fn vertices(self, k: i64, a: i64, b: i64) -> Vec<LatticePoint> {
        let p = LatticePoint::new;
        match self {
            SpikedFamily::Minimal => vec![p(1, 0, 0), p(0, 1, 0), p(-1, 0, -a), p(0, -1, 2 * k + b)],
            SpikedFamily::Q1 => vec![p(1, -1, -1), p(-1, 1, 1), p(-1, -1, 0), p(0, 0, k)],
            SpikedFamily::Q2 => vec![p(1, -1, 0), p(-1, 1, -1), p(-1, -1, 0), p(0, 0, k)],
            SpikedFamily::Q3 => vec![p(1, -1, 0), p(-1, 1, 0), p(-1, -1, 0), p(0, 0, k)],
            SpikedFamily::Q4 => vec![p(2, -1, -1), p(-1, 2, 1), p(-1, -1, 0), p(0, 0, k)],
            SpikedFamily::Q5 => vec![p(1, -1, -1), p(0, 1, a), p(-1, -1, 0), p(0, 0, k)],
            SpikedFamily::Q6 => vec![p(1, 0, 0), p(0, 1, a), p(-1, -1, 0), p(0, 0, k)],
            SpikedFamily::Q7 => vec![p(2, 1, 0), p(-1, 1, a), p(-1, -1, 0), p(0, 0, k)],
            SpikedFamily::Q8 => vec![p(1, 0, 0), p(0, 1, 0), p(-1, 0, a), p(0, -1, b), p(0, 0, k)],
            SpikedFamily::Q9 => vec![p(1, 0, 0), p(0, 1, 0), p(-1, -1, a), p(1, 1, 2 * k - a + b)],
            SpikedFamily::Q10a => vec![p(1, 0, a), p(0, 2, b), p(-1, 0, 0), p(0, 0, k)],
            SpikedFamily::Q10b => vec![p(1, 0, 0), p(0, 2, a), p(-1, 0, 0), p(0, 1, k)],
        }
    }
}

impl fmt::Display for SpikedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpikedFamily::Minimal => f.write_str("M"),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpikedRejection {
    Size { actual: usize },
    WidthOne,
    NotQuasiMinimal,
    /// The vertex designated non-essential is essential, or a minimal-family
    /// member has a non-essential vertex.
    NotSpiked,
}

#[derive(Clone, Debug)]
pub struct SpikedFamilyInstance {
    pub family: SpikedFamily,
    pub k: i64,
    pub a: i64,
    pub b: i64,
    pub vertices: Vec<LatticePoint>,
    pub declared_size: usize,
    /// Lattice points of the hull, sorted.
    pub points: Vec<LatticePoint>,
    pub rejected: Option<SpikedRejection>,
}

fn validate(n: usize, family: SpikedFamily, vertices: &[LatticePoint], points: &[LatticePoint]) -> Option<SpikedRejection> {
    if points.len() != n {
        return Some(SpikedRejection::Size { actual: points.len() });
    }
    if width_at_most_one(points) {
        return Some(SpikedRejection::WidthOne);
    }
    let hull = convex_hull(points);
    let report = match essential_vertices_with_hull(points, &hull) {
        Ok(r) if r.non_essential.len() <= 1 => r,
        _ => return Some(SpikedRejection::NotQuasiMinimal),
    };
    let spiked = match family {
        SpikedFamily::Minimal => report.non_essential.is_empty(),
        _ => report.non_essential == [*vertices.last().expect("families are nonempty")],
    };
    (!spiked).then_some(SpikedRejection::NotSpiked)
}

/// The raw parameter sweep for size `n`, each instance tagged with the filter
/// that rejected it, if any.
pub fn spiked_family_instances(n: usize) -> Vec<SpikedFamilyInstance> {
    let target = n as i64;
    let mut out = Vec::new();
    for family in SpikedFamily::ALL {
        for k in 2..=target {
            let mut params = family.parameters(k);
            params.retain(|&(_, b)| family.size(k, b) == target);
            for (a, b) in params {
                let vertices = family.vertices(k, a, b);
                let points = lattice_points(&convex_hull(&vertices));
                let rejected = validate(n, family, &vertices, &points);
                out.push(SpikedFamilyInstance { family, k, a, b, vertices, declared_size: n, points, rejected });
            }
        }
    }
    out
}

/// All spiked quasi-minimal classes of size `n`, as canonical representatives
/// in sorted order.
pub fn spiked_generate(n: usize) -> Result<Vec<PointConfiguration>> {
    if n < 7 {
        return Err(Error::UseSeedLists(n));
    }
    let instances = spiked_family_instances(n);
    for inst in instances.iter().filter(|i| i.rejected.is_some()) {
        log::debug!("spiked {} k={} a={} b={} rejected: {:?}", inst.family, inst.k, inst.a, inst.b, inst.rejected);
    }
    let canon: Vec<Vec<LatticePoint>> = instances
        .par_iter()
        .filter(|i| i.rejected.is_none())
        .map(|i| canonical_points(&i.points))
        .collect::<Result<_>>()?;
    let mut seen = HashSet::new();
    let mut classes: Vec<PointConfiguration> =
        canon.into_iter().filter(|c| seen.insert(c.clone())).map(PointConfiguration::new).collect();
    classes.sort_by(|x, y| x.points().cmp(y.points()));
    Ok(classes)
}
