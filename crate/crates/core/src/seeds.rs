//! The complete lists at sizes 5 and 6, which start the recursion, and the
//! volume-bounded brute-force oracle that produces them.
//!
//! Oracle: let `T` be a tetrahedron of maximum volume spanned by lattice
//! points of `P`. Replacing vertex `i` of `T` by a point `p` scales the volume
//! by `|λ_i(p)|`, so every lattice point of `P` has all barycentric coordinates
//! in `[-1, 1]` with respect to `T`, and more strongly no 4-subset of `P` has
//! volume above `vol(T)`. Every `P` of size `n` and volume at most `vmax` is
//! therefore found by taking each tetrahedron class of volume at most `vmax`
//! (from the Hermite normal forms of determinant at most `vmax`), and adding
//! lattice points of that bounded region one at a time, closing under the
//! hull after each addition.

use std::collections::BTreeSet;
use std::path::Path;

use rayon::prelude::*;

use crate::equivalence::canonical_points;
use crate::error::{Error, Result};
use crate::geometry::{convex_hull, count_lattice_points_up_to, det3, lattice_points, IntMatrix3, LatticePoint};
use crate::store::lp3::{Lp3File, ReadMode};
use crate::store::{records_hash, Record};
use crate::width::width_at_most_one;

pub const SEED_COUNTS: [(usize, usize); 2] = [(5, 9), (6, 76)];

/// Largest normalized volume of a width > 1 polytope of size `n`.
pub fn volume_bound(n: usize) -> u64 {
    12 * (n as u64 - 4) + 8
}

/// The polytope of size 6 that is neither quasi-minimal nor merged.
pub fn exceptional_size6() -> Vec<LatticePoint> {
    let p = LatticePoint::new;
    vec![p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(-1, -1, 0), p(1, 2, 3), p(-1, -2, -3)]
}

/// Tetrahedron classes of normalized volume at most `vmax` with at most
/// `max_points` lattice points, as canonical vertex lists.
pub fn tetrahedron_classes(vmax: u64, max_points: usize) -> Result<Vec<[LatticePoint; 4]>> {
    let vmax = vmax as i64;
    let mut matrices = Vec::new();
    for a in 1..=vmax {
        for b in 1..=vmax / a {
            for c in 1..=vmax / (a * b) {
                for h01 in 0..b {
                    for h02 in 0..c {
                        for h12 in 0..c {
                            matrices.push(IntMatrix3::from_rows([a, h01, h02], [0, b, h12], [0, 0, c]));
                        }
                    }
                }
            }
        }
    }
    let found: Vec<Option<Vec<LatticePoint>>> = matrices
        .par_iter()
        .map(|h| {
            let verts = [LatticePoint::new(0, 0, 0), h.column(0), h.column(1), h.column(2)];
            if count_lattice_points_up_to(&convex_hull(&verts), max_points) > max_points {
                return Ok(None);
            }
            canonical_points(&verts).map(Some)
        })
        .collect::<Result<_>>()?;
    let classes: BTreeSet<Vec<LatticePoint>> = found.into_iter().flatten().collect();
    Ok(classes.into_iter().map(|v| [v[0], v[1], v[2], v[3]]).collect())
}

fn volume(a: LatticePoint, b: LatticePoint, c: LatticePoint, d: LatticePoint) -> u64 {
    det3(b - a, c - a, d - a).unsigned_abs() as u64
}

/// Whether `p` together with any three points of `set` spans volume at most `cap`.
fn fits(set: &[LatticePoint], p: LatticePoint, cap: u64) -> bool {
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            for k in j + 1..set.len() {
                if volume(set[i], set[j], set[k], p) > cap {
                    return false;
                }
            }
        }
    }
    true
}

struct Search<'a> {
    n: usize,
    vmax: u64,
    cap: u64,
    region: &'a [LatticePoint],
    found: Vec<Record>,
}

impl Search<'_> {
    fn visit(&mut self, set: &[LatticePoint]) -> Result<()> {
        if set.len() == self.n && !width_at_most_one(set) {
            self.found.push(canonical_points(set)?);
        }
        Ok(())
    }

    fn extend(&mut self, set: &[LatticePoint], next: usize) -> Result<()> {
        if set.len() >= self.n {
            return Ok(());
        }
        for (i, &p) in self.region.iter().enumerate().skip(next) {
            if set.binary_search(&p).is_ok() || !fits(set, p, self.cap) {
                continue;
            }
            let mut grown = set.to_vec();
            grown.push(p);
            let hull = convex_hull(&grown);
            if hull.normalized_volume > self.vmax || count_lattice_points_up_to(&hull, self.n) > self.n {
                continue;
            }
            let closure = lattice_points(&hull);
            // points the closure added must respect the maximal volume too
            if closure.len() > grown.len() && !self.all_fit(&closure) {
                continue;
            }
            self.visit(&closure)?;
            self.extend(&closure, i + 1)?;
        }
        Ok(())
    }

    fn all_fit(&self, set: &[LatticePoint]) -> bool {
        (0..set.len()).all(|l| {
            let (head, tail) = set.split_at(l);
            let rest: Vec<LatticePoint> = head.iter().chain(&tail[1..]).copied().collect();
            fits(&rest, set[l], self.cap)
        })
    }
}

fn region(t: &[LatticePoint; 4]) -> Vec<LatticePoint> {
    let cap = volume(t[0], t[1], t[2], t[3]);
    // corners of the region {λ_i >= -1}: one barycentric coordinate 4, the others -1
    let sum = t[0] + t[1] + t[2] + t[3];
    let corners: Vec<LatticePoint> = t.iter().map(|&v| 5 * v - sum).collect();
    let lo = |k: usize| corners.iter().map(|c| c.coords()[k]).min().unwrap();
    let hi = |k: usize| corners.iter().map(|c| c.coords()[k]).max().unwrap();
    let mut out = Vec::new();
    for x in lo(0)..=hi(0) {
        for y in lo(1)..=hi(1) {
            for z in lo(2)..=hi(2) {
                let p = LatticePoint::new(x, y, z);
                if fits(t, p, cap) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// All classes of size `n` and width above one with normalized volume at most
/// `vmax`. Complete when `vmax` is at least the volume bound for `n`.
pub fn oracle_enumerate(n: usize, vmax: u64) -> Result<Vec<Record>> {
    let required = volume_bound(n.max(5));
    if vmax < required {
        return Err(Error::BoundTooSmall { given: vmax, required });
    }
    let tetrahedra = tetrahedron_classes(vmax, n)?;
    log::info!("oracle size {n}: {} tetrahedron classes up to volume {vmax}", tetrahedra.len());
    let per: Vec<Vec<Record>> = tetrahedra
        .par_iter()
        .map(|t| {
            let start = lattice_points(&convex_hull(t));
            let region = region(t);
            let mut s = Search { n, vmax, cap: volume(t[0], t[1], t[2], t[3]), region: &region, found: Vec::new() };
            s.visit(&start)?;
            s.extend(&start, 0)?;
            Ok(s.found)
        })
        .collect::<Result<_>>()?;
    let classes: BTreeSet<Record> = per.into_iter().flatten().collect();
    Ok(classes.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedDatabase {
    pub size5: Vec<Record>,
    pub size6: Vec<Record>,
    /// Comment lines describing how each list was produced.
    pub provenance: Vec<String>,
}

impl SeedDatabase {
    pub fn get(&self, n: usize) -> Option<&[Record]> {
        match n {
            5 => Some(&self.size5),
            6 => Some(&self.size6),
            _ => None,
        }
    }

    fn validate(self) -> Result<Self> {
        for (n, expected) in SEED_COUNTS {
            let got = self.get(n).map_or(0, |r| r.len());
            if got != expected {
                return Err(Error::SeedValidationFailed(format!("size {n}: {got} classes, expected {expected}")));
            }
        }
        let exceptional = canonical_points(&exceptional_size6())?;
        if self.size6.binary_search(&exceptional).is_err() {
            return Err(Error::SeedValidationFailed("the exceptional size-6 polytope is missing".into()));
        }
        Ok(self)
    }

    fn from_files(f5: Lp3File, f6: Lp3File) -> Result<Self> {
        let mut provenance = f5.comments;
        provenance.extend(f6.comments);
        SeedDatabase { size5: f5.records, size6: f6.records, provenance }.validate()
    }

    /// Runs the oracle at sizes 5 and 6 with volume bounds `factor` times the
    /// theorem values.
    pub fn generate(factor: u64) -> Result<Self> {
        let mut files = Vec::new();
        for (n, _) in SEED_COUNTS {
            let vmax = factor * volume_bound(n);
            let records = oracle_enumerate(n, vmax)?;
            files.push(seed_file(n, vmax, records));
        }
        let f6 = files.pop().unwrap();
        let f5 = files.pop().unwrap();
        SeedDatabase::from_files(f5, f6)
    }

    /// Loads `seeds_size5.lp3` and `seeds_size6.lp3` from `dir`, regenerating
    /// and writing them when either is missing.
    pub fn load_or_generate(dir: &Path) -> Result<Self> {
        let (p5, p6) = (dir.join(seed_file_name(5)), dir.join(seed_file_name(6)));
        if p5.exists() && p6.exists() {
            return SeedDatabase::from_files(Lp3File::read(&p5, ReadMode::Strict)?, Lp3File::read(&p6, ReadMode::Strict)?);
        }
        log::warn!("seed cache missing in {}, running the oracle", dir.display());
        let db = SeedDatabase::generate(1)?;
        std::fs::create_dir_all(dir)?;
        for n in [5, 6] {
            seed_file(n, volume_bound(n), db.get(n).unwrap().to_vec()).write(&dir.join(seed_file_name(n)))?;
        }
        Ok(db)
    }
}

pub fn seed_file_name(n: usize) -> String {
    format!("seeds_size{n}.lp3")
}

/// An LP3 file with a provenance line naming the oracle parameters and the
/// hash of the record list.
pub fn seed_file(n: usize, vmax: u64, records: Vec<Record>) -> Lp3File {
    let mut file = Lp3File::new(Vec::new(), records);
    file.comments.push(format!(" oracle size={n} vmax={vmax} classes={} run_hash={:016x}", file.records.len(), records_hash(&file.records)));
    file
}

const CACHED_SIZE5: &str = include_str!("../data/seeds_size5.lp3");
const CACHED_SIZE6: &str = include_str!("../data/seeds_size6.lp3");

/// The shipped seed lists, validated.
pub fn seed_database() -> Result<SeedDatabase> {
    SeedDatabase::from_files(Lp3File::parse(CACHED_SIZE5, ReadMode::Strict)?, Lp3File::parse(CACHED_SIZE6, ReadMode::Strict)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_checked() {
        assert!(matches!(oracle_enumerate(5, 19), Err(Error::BoundTooSmall { given: 19, required: 20 })));
    }

    #[test]
    fn shipped_seeds_validate() {
        let db = seed_database().unwrap();
        assert_eq!((db.size5.len(), db.size6.len()), (9, 76));
        assert!(db.provenance.iter().any(|l| l.contains("vmax=20")));
    }

    #[test]
    fn tampered_cache_rejected() {
        let mut f6 = Lp3File::parse(CACHED_SIZE6, ReadMode::Strict).unwrap();
        f6.records.pop();
        let f5 = Lp3File::parse(CACHED_SIZE5, ReadMode::Strict).unwrap();
        assert!(matches!(SeedDatabase::from_files(f5, f6), Err(Error::SeedValidationFailed(_))));
    }

    #[test]
    fn region_of_unit_tetrahedron() {
        let p = LatticePoint::new;
        let r = region(&[p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(0, 0, 1)]);
        // every point has all barycentric coordinates in [-1, 1]
        for q in &r {
            let l = [1 - q.x - q.y - q.z, q.x, q.y, q.z];
            assert!(l.iter().all(|v| (-1..=1).contains(v)), "{q}");
        }
        assert!(r.contains(&p(1, 1, -1)));
        assert!(!r.contains(&p(2, 0, 0)));
    }
}
