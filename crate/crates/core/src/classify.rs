//! Per-class invariants and the aggregated census tables.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::boxed::{boxed_all, boxed_enumerate_fulledge, boxed_enumerate_missingedge, boxed_enumerate_q0, census, BoxedClass};
use crate::equivalence::{canonical_points, PointConfiguration};
use crate::error::{Error, Result};
use crate::geometry::{
    affine_dimension, convex_hull, count_lattice_points_dilated, det3, gcd, interior_lattice_points, LatticePoint,
};
use crate::pipeline::quasi_minimal;
use crate::spiked::spiked_generate;
use crate::store::{Database, Record, TsvTable};
use crate::width::{essential_vertices_with_hull, width};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub size: usize,
    pub vertex_count: usize,
    pub interior_count: usize,
    pub width: u64,
    pub normalized_volume: u64,
    pub sublattice_index: u64,
    pub is_canonical: bool,
    pub is_terminal: bool,
    pub is_normal: bool,
    pub is_dps: bool,
    /// Decided only when the database holds size `size + 1`, or for size 8.
    pub is_dps_maximal: Option<bool>,
    pub is_quasi_minimal: bool,
    pub is_minimal: bool,
    pub is_clean: bool,
}

/// Index of the affine lattice spanned by `points`: the gcd of all nonzero
/// 4-point determinants.
pub fn sublattice_index(points: &[LatticePoint]) -> u64 {
    let n = points.len();
    let mut g: i64 = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let o = points[a];
                    let v = det3(points[b] - o, points[c] - o, points[d] - o);
                    if v != 0 {
                        g = gcd(g, v as i64);
                        if g == 1 {
                            return 1;
                        }
                    }
                }
            }
        }
    }
    g.unsigned_abs()
}

/// `#(2P ∩ Z³) = #(A + A)`, which decides normality in dimension 3.
pub fn is_normal(points: &[LatticePoint]) -> bool {
    let mut sums = HashSet::with_capacity(points.len() * (points.len() + 1) / 2);
    for (i, &a) in points.iter().enumerate() {
        for &b in &points[i..] {
            sums.insert(a + b);
        }
    }
    count_lattice_points_dilated(&convex_hull(points), 2) == sums.len()
}

/// All sums `a + b` with `a <= b` are distinct.
pub fn is_dps(points: &[LatticePoint]) -> bool {
    let mut sums = HashSet::with_capacity(points.len() * (points.len() + 1) / 2);
    for (i, &a) in points.iter().enumerate() {
        for &b in &points[i..] {
            if !sums.insert(a + b) {
                return false;
            }
        }
    }
    true
}

/// Canonical forms of the vertex removals of the dps classes of one size.
/// A dps class one size smaller is maximal iff it is not in this set.
pub struct DpsExtensions {
    pub size: usize,
    children: HashSet<Record>,
}

impl DpsExtensions {
    pub fn build(classes: &[Record], size: usize) -> Result<Self> {
        let per: Vec<Vec<Record>> = classes
            .par_iter()
            .filter(|c| c.len() == size && is_dps(c))
            .map(|c| {
                let hull = convex_hull(c);
                let mut out = Vec::new();
                for v in hull.vertex_points() {
                    let rest: Vec<LatticePoint> = c.iter().copied().filter(|&p| p != v).collect();
                    if affine_dimension(&rest) == 3 {
                        out.push(canonical_points(&rest)?);
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        Ok(DpsExtensions { size, children: per.into_iter().flatten().collect() })
    }

    pub fn extends(&self, canonical: &[LatticePoint]) -> bool {
        self.children.contains(canonical)
    }
}

/// Maximality of a dps class among width > 1 dps polytopes.
pub fn is_dps_maximal(points: &[LatticePoint], db: &Database) -> Result<bool> {
    let n = points.len();
    if n >= 8 {
        return Ok(true);
    }
    let next = db.get(n + 1).ok_or(Error::DatabaseIncomplete(n + 1))?;
    let ext = DpsExtensions::build(next, n + 1)?;
    Ok(!ext.extends(&canonical_points(points)?))
}

/// `T_n = conv{(-1,-1,1), (-1,1,-2), (0,1,2n-9), (2,-1,0)}`: size `n`, width 2,
/// clean, normalized volume `12(n-4)+8`.
pub fn make_tn(n: usize) -> Result<PointConfiguration> {
    if n < 5 {
        return Err(Error::Consistency(format!("T_n needs n >= 5, got {n}")));
    }
    let p = LatticePoint::new;
    let verts = [p(-1, -1, 1), p(-1, 1, -2), p(0, 1, 2 * n as i64 - 9), p(2, -1, 0)];
    let hull = convex_hull(&verts);
    let pts = crate::geometry::lattice_points(&hull);
    let inner = interior_lattice_points(&hull);
    let ok = pts.len() == n
        && hull.normalized_volume == 12 * (n as u64 - 4) + 8
        && pts.len() - inner.len() == 4
        && width(&pts)?.width == 2;
    if !ok {
        return Err(Error::Consistency(format!("T_{n} does not have its defining properties")));
    }
    Ok(PointConfiguration::new(pts))
}

/// `points` must be canonical when `dps_ext` is given.
pub fn classify(points: &[LatticePoint], dps_ext: Option<&DpsExtensions>) -> Result<ClassificationRecord> {
    let hull = convex_hull(points);
    if hull.dimension < 3 {
        return Err(Error::NotFullDimensional);
    }
    let size = points.len();
    let vertex_count = hull.vertices.len();
    let interior_count = points.iter().filter(|&&p| hull.contains_strictly(p)).count();
    let report = essential_vertices_with_hull(points, &hull)?;
    let dps = is_dps(points);
    let is_dps_maximal = match (dps, size, dps_ext) {
        (false, _, _) => Some(false),
        (true, s, _) if s >= 8 => Some(true),
        (true, s, Some(ext)) if ext.size == s + 1 => Some(!ext.extends(points)),
        _ => None,
    };
    Ok(ClassificationRecord {
        size,
        vertex_count,
        interior_count,
        width: width(points)?.width,
        normalized_volume: hull.normalized_volume,
        sublattice_index: sublattice_index(points),
        is_canonical: interior_count == 1,
        is_terminal: interior_count == 1 && size == vertex_count + 1,
        is_normal: is_normal(points),
        is_dps: dps,
        is_dps_maximal,
        is_quasi_minimal: report.non_essential.len() <= 1,
        is_minimal: report.non_essential.is_empty(),
        is_clean: size == vertex_count + interior_count,
    })
}

/// Normal with no full-dimensional vertex removal that is normal.
pub fn is_bruns_exception(points: &[LatticePoint]) -> bool {
    if !is_normal(points) {
        return false;
    }
    !convex_hull(points).vertex_points().into_iter().any(|v| {
        let rest: Vec<LatticePoint> = points.iter().copied().filter(|&p| p != v).collect();
        affine_dimension(&rest) == 3 && is_normal(&rest)
    })
}

/// Records for every class of one size, in database order. Records must be
/// canonical.
pub fn classify_size(db: &Database, n: usize) -> Result<Vec<ClassificationRecord>> {
    let classes = db.get(n).ok_or(Error::DatabaseIncomplete(n))?;
    let ext = match db.get(n + 1) {
        Some(next) if n < 8 => Some(DpsExtensions::build(next, n + 1)?),
        _ => None,
    };
    classes.par_iter().map(|c| classify(c, ext.as_ref())).collect()
}

pub fn classify_all(db: &Database) -> Result<BTreeMap<usize, Vec<ClassificationRecord>>> {
    db.sizes.keys().map(|&n| Ok((n, classify_size(db, n)?))).collect()
}

fn bump(cells: &mut BTreeMap<String, u64>, id: String) {
    *cells.entry(id).or_insert(0) += 1;
}

/// Census cells of one size, keyed like the published tables.
pub fn census_cells(n: usize, classes: &[Record], records: &[ClassificationRecord]) -> Result<BTreeMap<String, u64>> {
    let mut c = BTreeMap::new();
    c.insert(format!("census/size={n}/total"), records.len() as u64);
    for r in records {
        let v = r.vertex_count;
        bump(&mut c, format!("census/size={n}/vertices={v}"));
        if r.is_quasi_minimal {
            bump(&mut c, format!("quasi-minimal/size={n}/vertices={v}"));
            bump(&mut c, format!("quasi-minimal/size={n}/total"));
        }
        if r.is_canonical {
            bump(&mut c, format!("canonical/size={n}"));
        }
        if r.is_terminal {
            bump(&mut c, format!("terminal/size={n}"));
        }
        bump(&mut c, format!("width/size={n}/width={}", r.width));
        bump(&mut c, format!("interior/size={n}/interior={}/vertices={v}", r.interior_count));
        bump(&mut c, format!("index/size={n}/index={}", r.sublattice_index));
        if r.is_normal {
            bump(&mut c, format!("normal/size={n}"));
        }
        if r.is_dps {
            bump(&mut c, format!("dps/size={n}/vertices={v}"));
            bump(&mut c, format!("dps/size={n}/total"));
        }
        if r.is_dps_maximal == Some(true) {
            bump(&mut c, format!("dps-maximal/size={n}/vertices={v}"));
            bump(&mut c, format!("dps-maximal/size={n}/total"));
        }
    }
    if let (Some(max), Some(min)) = (records.iter().map(|r| r.normalized_volume).max(), records.iter().map(|r| r.normalized_volume).min()) {
        let at_max: Vec<usize> = (0..records.len()).filter(|&i| records[i].normalized_volume == max).collect();
        c.insert(format!("volume/size={n}/max"), max);
        c.insert(format!("volume/size={n}/max-count"), at_max.len() as u64);
        let tn = canonical_points(&make_tn(n)?)?;
        c.insert(format!("volume/size={n}/max-is-tn"), u64::from(at_max.len() == 1 && classes[at_max[0]] == tn));
        c.insert(format!("volume/size={n}/min"), min);
        c.insert(format!("volume/size={n}/min-count"), records.iter().filter(|r| r.normalized_volume == min).count() as u64);
    }
    let bruns = classes.par_iter().filter(|p| is_bruns_exception(p)).count();
    c.insert(format!("bruns/size={n}"), bruns as u64);
    Ok(c)
}

fn boxed_cells(c: &mut BTreeMap<String, u64>, prefix: &str, classes: &[BoxedClass]) {
    for ((n, v), k) in census(classes) {
        c.insert(format!("{prefix}/size={n}/vertices={v}"), k as u64);
        *c.entry(format!("{prefix}/size={n}/total")).or_insert(0) += k as u64;
    }
}

/// Cells computed from the quasi-minimal generators alone.
pub fn generator_cells() -> Result<BTreeMap<String, u64>> {
    let mut c = BTreeMap::new();
    for n in 7..=11 {
        for s in spiked_generate(n)? {
            bump(&mut c, format!("spiked/size={n}/vertices={}", s.hull().vertices.len()));
            bump(&mut c, format!("spiked/size={n}/total"));
        }
        let spiked: Vec<Record> = spiked_generate(n)?.into_iter().map(|s| s.into_points()).collect();
        for q in quasi_minimal(n)? {
            if spiked.binary_search(&q).is_err() {
                let v = convex_hull(&q).vertices.len();
                bump(&mut c, format!("boxed-quasi-minimal/size={n}/vertices={v}"));
                bump(&mut c, format!("boxed-quasi-minimal/size={n}/total"));
            }
        }
    }
    boxed_cells(&mut c, "boxed-q0", &boxed_enumerate_q0()?);
    boxed_cells(&mut c, "boxed-full-edge", &boxed_enumerate_fulledge()?);
    boxed_cells(&mut c, "boxed-missing-edge", &boxed_enumerate_missingedge()?);
    boxed_cells(&mut c, "boxed-irredundant", boxed_all()?);
    Ok(c)
}

/// Every computable cell for `db` and its classification records, plus the
/// generator cells.
pub fn computed_cells(db: &Database, records: &BTreeMap<usize, Vec<ClassificationRecord>>) -> Result<BTreeMap<String, u64>> {
    let mut cells = generator_cells()?;
    for (&n, rs) in records {
        let classes = db.get(n).ok_or(Error::DatabaseIncomplete(n))?;
        cells.extend(census_cells(n, classes, rs)?);
    }
    Ok(cells)
}

/// Report tables for a classified database.
pub fn tables(records: &BTreeMap<usize, Vec<ClassificationRecord>>) -> Vec<TsvTable> {
    let max_v = records.values().flatten().map(|r| r.vertex_count).max().unwrap_or(4);
    let vertex_headers: Vec<String> = (4..=max_v).map(|v| format!("v{v}")).collect();
    let by_vertices = |name: &str, pick: &dyn Fn(&ClassificationRecord) -> bool| {
        let mut h: Vec<&str> = vec!["size"];
        h.extend(vertex_headers.iter().map(String::as_str));
        h.push("total");
        let mut t = TsvTable::new(name, &h);
        for (n, rs) in records {
            let mut row = vec![n.to_string()];
            let mut total = 0;
            for v in 4..=max_v {
                let k = rs.iter().filter(|r| r.vertex_count == v && pick(r)).count();
                total += k;
                row.push(k.to_string());
            }
            row.push(total.to_string());
            t.push(row);
        }
        t
    };
    let mut out = vec![
        by_vertices("classes by size and vertex count", &|_| true),
        by_vertices("quasi-minimal classes by size and vertex count", &|r| r.is_quasi_minimal),
        by_vertices("dps classes by size and vertex count", &|r| r.is_dps),
        by_vertices("maximal dps classes by size and vertex count", &|r| r.is_dps_maximal == Some(true)),
    ];

    let mut t = TsvTable::new("canonical and terminal classes", &["size", "canonical", "terminal"]);
    for (n, rs) in records {
        t.push([*n, rs.iter().filter(|r| r.is_canonical).count(), rs.iter().filter(|r| r.is_terminal).count()]);
    }
    out.push(t);

    let max_w = records.values().flatten().map(|r| r.width).max().unwrap_or(2);
    let wh: Vec<String> = std::iter::once("size".to_string()).chain((2..=max_w).map(|w| format!("width{w}"))).collect();
    let mut t = TsvTable::new("classes by width", &wh.iter().map(String::as_str).collect::<Vec<_>>());
    for (n, rs) in records {
        let mut row = vec![n.to_string()];
        row.extend((2..=max_w).map(|w| rs.iter().filter(|r| r.width == w).count().to_string()));
        t.push(row);
    }
    out.push(t);

    let mut t = TsvTable::new("classes by interior points and vertex count", &["size", "interior", "vertices", "count"]);
    for (n, rs) in records {
        let mut cells: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for r in rs {
            *cells.entry((r.interior_count, r.vertex_count)).or_insert(0) += 1;
        }
        for ((i, v), k) in cells {
            t.push([*n, i, v, k]);
        }
    }
    out.push(t);

    let mut t = TsvTable::new("classes by sublattice index", &["size", "index", "count"]);
    for (n, rs) in records {
        let mut cells: BTreeMap<u64, usize> = BTreeMap::new();
        for r in rs {
            *cells.entry(r.sublattice_index).or_insert(0) += 1;
        }
        for (i, k) in cells {
            t.push([*n as u64, i, k as u64]);
        }
    }
    out.push(t);

    let mut t = TsvTable::new("normal classes", &["size", "normal", "fraction"]);
    for (n, rs) in records {
        let k = rs.iter().filter(|r| r.is_normal).count();
        t.push([n.to_string(), k.to_string(), format!("{:.3}", k as f64 / rs.len().max(1) as f64)]);
    }
    out.push(t);

    let mut t = TsvTable::new("normalized volume extremes", &["size", "min", "min_count", "max", "max_count"]);
    for (n, rs) in records {
        let (Some(min), Some(max)) = (rs.iter().map(|r| r.normalized_volume).min(), rs.iter().map(|r| r.normalized_volume).max()) else {
            continue;
        };
        let cnt = |v: u64| rs.iter().filter(|r| r.normalized_volume == v).count() as u64;
        t.push([*n as u64, min, cnt(min), max, cnt(max)]);
    }
    out.push(t);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64, z: i64) -> LatticePoint {
        LatticePoint::new(x, y, z)
    }

    #[test]
    fn unit_tetrahedron() {
        let t = [p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(0, 0, 1)];
        assert_eq!(sublattice_index(&t), 1);
        assert!(is_normal(&t));
        assert!(is_dps(&t));
    }

    #[test]
    fn spiked_index_two() {
        let verts = [p(1, -1, -1), p(-1, 1, 1), p(-1, -1, 0), p(0, 0, 3)];
        let pts = crate::geometry::lattice_points(&convex_hull(&verts));
        // every lattice point has x + y even
        assert!(pts.iter().all(|q| (q.x + q.y) % 2 == 0));
        assert_eq!(sublattice_index(&pts), 2);
        assert!(!is_normal(&pts));
    }

    #[test]
    fn tn_properties() {
        assert_eq!(make_tn(5).unwrap().hull().normalized_volume, 20);
        let t7 = make_tn(7).unwrap();
        assert_eq!(interior_lattice_points(t7.hull()).len(), 3);
        let t11 = make_tn(11).unwrap();
        assert_eq!((t11.len(), width(&t11).unwrap().width), (11, 2));
        let r = classify(&t11, None).unwrap();
        assert!(r.is_clean && !r.is_canonical);
    }

    #[test]
    fn collinear_triple_is_not_dps() {
        assert!(!is_dps(&[p(0, 0, 0), p(1, 0, 0), p(2, 0, 0), p(0, 1, 0), p(0, 0, 1)]));
        // parallelogram
        assert!(!is_dps(&[p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(1, 1, 0), p(0, 0, 1)]));
    }

    #[test]
    fn maximality_needs_next_size() {
        let db = Database::default();
        let t = [p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(0, 0, 1)];
        assert!(matches!(is_dps_maximal(&t, &db), Err(Error::DatabaseIncomplete(5))));
    }
}
