//! Mergings: size-`n` polytopes built from two width > 1 polytopes of size
//! `n - 1` that share a full-dimensional child.
//!
//! If `P1 \ {v1}` and `P2 \ {v2}` are both equivalent to a representative `R`
//! through maps `φ1` and `φ2`, the maps between the two children are exactly
//! `t = φ2⁻¹ ∘ s ∘ φ1` for `s` in `Aut(R)`. Each `t` gives the candidate
//! `conv(P2 ∪ {t(v1)})`, accepted when its only new lattice point is `t(v1)`.
//! Width > 1 is inherited from `P2`, so it is only asserted.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::path::Path;

use rayon::prelude::*;

use crate::equivalence::{canonical_form, canonical_points, canonical_with_witness, AffineUnimodularMap};
use crate::error::{Error, Result};
use crate::geometry::{affine_dimension, convex_hull, count_lattice_points_up_to, LatticePoint};
use crate::store::checkpoint::Checkpoint;
use crate::store::{records_hash, Record};
use crate::width::width_at_most_one;

#[derive(Clone, Debug)]
pub struct VertexRemoval {
    /// Index of the parent in the input list.
    pub parent: usize,
    pub vertex: LatticePoint,
    /// Parent points minus `vertex`, sorted.
    pub child: Vec<LatticePoint>,
    /// `None` when the child is lower-dimensional.
    pub canonical: Option<(Vec<LatticePoint>, AffineUnimodularMap)>,
}

impl VertexRemoval {
    pub fn is_full_dimensional(&self) -> bool {
        self.canonical.is_some()
    }
}

/// One entry per vertex of `points`.
pub fn vertex_removals(parent: usize, points: &[LatticePoint]) -> Result<Vec<VertexRemoval>> {
    let hull = convex_hull(points);
    if hull.dimension < 3 {
        return Err(Error::NotFullDimensional);
    }
    hull.vertex_points()
        .into_iter()
        .map(|v| {
            let child: Vec<LatticePoint> = points.iter().copied().filter(|&p| p != v).collect();
            let canonical = if affine_dimension(&child) == 3 { Some(canonical_with_witness(&child)?) } else { None };
            Ok(VertexRemoval { parent, vertex: v, child, canonical })
        })
        .collect()
}

/// Full-dimensional removals grouped by child class, in the order of the
/// canonical child representatives.
pub struct ChildIndex {
    pub removals: Vec<VertexRemoval>,
    pub groups: Vec<(Vec<LatticePoint>, Vec<usize>)>,
}

impl ChildIndex {
    pub fn build(classes: &[Record]) -> Result<Self> {
        let per: Vec<Vec<VertexRemoval>> =
            classes.par_iter().enumerate().map(|(i, c)| vertex_removals(i, c)).collect::<Result<_>>()?;
        let removals: Vec<VertexRemoval> = per.into_iter().flatten().filter(VertexRemoval::is_full_dimensional).collect();
        let mut by_child: BTreeMap<&[LatticePoint], Vec<usize>> = BTreeMap::new();
        for (i, r) in removals.iter().enumerate() {
            let (rep, _) = r.canonical.as_ref().expect("filtered to full-dimensional");
            by_child.entry(rep.as_slice()).or_default().push(i);
        }
        let groups = by_child.into_iter().map(|(rep, ids)| (rep.to_vec(), ids)).collect();
        Ok(ChildIndex { removals, groups })
    }
}

/// Every merging within one child-class group, canonicalized.
fn merge_group(index: &ChildIndex, group: usize, classes: &[Record], n: usize) -> Result<BTreeSet<Record>> {
    let (rep, members) = &index.groups[group];
    let autos = canonical_form(rep)?.automorphisms;
    let mut raw: HashSet<Vec<LatticePoint>> = HashSet::new();
    let mut out = BTreeSet::new();
    for (a, &i1) in members.iter().enumerate() {
        let e1 = &index.removals[i1];
        let phi1 = &e1.canonical.as_ref().unwrap().1;
        for &i2 in &members[a..] {
            let e2 = &index.removals[i2];
            let inv2 = e2.canonical.as_ref().unwrap().1.inverse()?;
            let parent2 = &classes[e2.parent];
            for s in &autos {
                let t = inv2.compose(&s.compose(phi1)?)?;
                let u = t.apply(e1.vertex);
                if parent2.binary_search(&u).is_ok() {
                    continue;
                }
                let mut pts = parent2.clone();
                pts.push(u);
                pts.sort_unstable();
                if !raw.insert(pts.clone()) {
                    continue;
                }
                if count_lattice_points_up_to(&convex_hull(&pts), n) != n {
                    continue;
                }
                debug_assert!(!width_at_most_one(&pts));
                out.insert(canonical_points(&pts)?);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug)]
pub struct MergeOptions<'a> {
    /// Where to persist progress; resumed from when it exists.
    pub checkpoint: Option<&'a Path>,
    /// Groups processed between checkpoint writes.
    pub chunk: usize,
    /// Return [`Error::Interrupted`] after this many chunks, leaving the
    /// checkpoint behind; used to bound the length of a single run.
    pub stop_after_chunks: Option<usize>,
}

impl Default for MergeOptions<'_> {
    fn default() -> Self {
        MergeOptions { checkpoint: None, chunk: 4096, stop_after_chunks: None }
    }
}

/// All mergings of size `n` from the complete size-`(n - 1)` list.
pub fn merge_all(classes: &[Record], n: usize) -> Result<Vec<Record>> {
    merge_all_with(classes, n, MergeOptions::default())
}

pub fn merge_all_with(classes: &[Record], n: usize, opts: MergeOptions<'_>) -> Result<Vec<Record>> {
    if let Some(c) = classes.iter().find(|c| c.len() + 1 != n) {
        return Err(Error::Consistency(format!("merge input of size {} for target size {n}", c.len())));
    }
    let index = ChildIndex::build(classes)?;
    let total = index.groups.len();
    let input_hash = records_hash(classes);
    log::info!("size {n}: {} removals in {total} child classes", index.removals.len());

    let mut found: BTreeSet<Record> = BTreeSet::new();
    let mut done: BTreeSet<usize> = BTreeSet::new();
    if let Some(path) = opts.checkpoint.filter(|p| p.exists()) {
        let cp = Checkpoint::read(path)?;
        if cp.size != n || cp.input_hash != input_hash || cp.groups_total != total {
            return Err(Error::Checkpoint(format!("{} was written for a different input", path.display())));
        }
        log::info!("resuming size {n}: {} of {total} groups done", cp.groups_done.len());
        found.extend(cp.records);
        done = cp.groups_done;
    }

    let pending: Vec<usize> = (0..total).filter(|g| !done.contains(g)).collect();
    for (k, chunk) in pending.chunks(opts.chunk.max(1)).enumerate() {
        if opts.stop_after_chunks == Some(k) {
            return Err(Error::Interrupted(done.len()));
        }
        let results: Vec<BTreeSet<Record>> =
            chunk.par_iter().map(|&g| merge_group(&index, g, classes, n)).collect::<Result<_>>()?;
        for r in results {
            found.extend(r);
        }
        done.extend(chunk.iter().copied());
        if let Some(path) = opts.checkpoint {
            let cp = Checkpoint {
                size: n,
                input_hash,
                groups_total: total,
                groups_done: done.clone(),
                records: found.iter().cloned().collect(),
            };
            cp.write(path)?;
        }
        log::debug!("size {n}: {}/{total} groups, {} classes", done.len(), found.len());
    }
    Ok(found.into_iter().collect())
}

/// Whether some two distinct vertices `v`, `w` of `points` have `P^v`, `P^w`
/// of width > 1 and `P^{vw}` full-dimensional.
pub fn is_merged(points: &[LatticePoint]) -> bool {
    let hull = convex_hull(points);
    let wide: Vec<LatticePoint> = hull
        .vertex_points()
        .into_iter()
        .filter(|&v| {
            let rest: Vec<LatticePoint> = points.iter().copied().filter(|&p| p != v).collect();
            affine_dimension(&rest) == 3 && !width_at_most_one(&rest)
        })
        .collect();
    for (i, &v) in wide.iter().enumerate() {
        for &w in &wide[i + 1..] {
            let rest: Vec<LatticePoint> = points.iter().copied().filter(|&p| p != v && p != w).collect();
            if affine_dimension(&rest) == 3 {
                return true;
            }
        }
    }
    false
}
