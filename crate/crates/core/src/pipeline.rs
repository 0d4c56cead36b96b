//! The size-by-size enumeration: seeds at sizes 5 and 6, then for each larger
//! size the quasi-minimal classes together with all mergings of the previous
//! size.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use crate::boxed::boxed_quasiminimal;
use crate::error::{Error, Result};
use crate::merging::{merge_all_with, MergeOptions};
use crate::seeds::seed_database;
use crate::spiked::spiked_generate;
use crate::store::lp3::{sort_records, Lp3File, ReadMode};
use crate::store::{size_path, Database, Record};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Seed,
    QuasiMinimal,
    Merged,
}

#[derive(Clone, Debug, Default)]
pub struct SizeResult {
    /// All classes, sorted.
    pub classes: Vec<Record>,
    /// Quasi-minimal classes, sorted; disjoint from `merged`.
    pub quasi_minimal: Vec<Record>,
    pub merged: Vec<Record>,
    pub elapsed: Duration,
    /// Loaded from an earlier run instead of computed.
    pub resumed: bool,
}

#[derive(Clone, Debug, Default)]
pub struct EnumerationRun {
    pub max_size: usize,
    pub sizes: BTreeMap<usize, SizeResult>,
}

impl EnumerationRun {
    pub fn database(&self) -> Database {
        let mut db = Database::default();
        for (&n, r) in &self.sizes {
            db.sizes.insert(n, r.classes.clone());
        }
        db
    }

    pub fn provenance(&self, n: usize, class: &Record) -> Result<Provenance> {
        let r = self.sizes.get(&n).ok_or(Error::DatabaseIncomplete(n))?;
        if n < 7 {
            return match r.classes.binary_search(class) {
                Ok(_) => Ok(Provenance::Seed),
                Err(_) => Err(Error::Consistency(format!("class not in the size-{n} list"))),
            };
        }
        let qm = r.quasi_minimal.binary_search(class).is_ok();
        let merged = r.merged.binary_search(class).is_ok();
        match (qm, merged) {
            (true, true) => Err(Error::Consistency(format!("size-{n} class is both quasi-minimal and merged"))),
            (true, false) => Ok(Provenance::QuasiMinimal),
            (false, true) => Ok(Provenance::Merged),
            (false, false) => Err(Error::Consistency(format!("class not in the size-{n} list"))),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Directory receiving `size_NN.lp3` files and merge checkpoints.
    pub out_dir: Option<PathBuf>,
    /// Reuse size files and checkpoints already in `out_dir`.
    pub resume: bool,
}

/// Spiked and boxed quasi-minimal classes of size `n >= 7`, sorted and unique.
pub fn quasi_minimal(n: usize) -> Result<Vec<Record>> {
    let mut out: Vec<Record> = spiked_generate(n)?.into_iter().map(|c| c.into_points()).collect();
    out.extend(boxed_quasiminimal(n)?.into_iter().map(|c| c.into_points()));
    sort_records(&mut out);
    Ok(out)
}

fn checkpoint_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("size_{n:02}.checkpoint"))
}

fn split(classes: Vec<Record>, qm: &[Record]) -> (Vec<Record>, Vec<Record>) {
    classes.into_iter().partition(|c| qm.binary_search(c).is_ok())
}

fn compute_size(n: usize, prev: &[Record], opts: &RunOptions) -> Result<SizeResult> {
    let start = Instant::now();
    let qm = quasi_minimal(n)?;
    let checkpoint = opts.out_dir.as_deref().map(|d| checkpoint_path(d, n));
    if let Some(cp) = checkpoint.as_deref().filter(|p| !opts.resume && p.exists()) {
        std::fs::remove_file(cp)?;
    }
    let merged = merge_all_with(prev, n, MergeOptions { checkpoint: checkpoint.as_deref(), ..Default::default() })?;
    if let Some(c) = merged.iter().find(|c| qm.binary_search(c).is_ok()) {
        return Err(Error::Consistency(format!("size-{n} class {c:?} is both quasi-minimal and merged")));
    }
    let mut classes = qm.clone();
    classes.extend(merged.iter().cloned());
    sort_records(&mut classes);
    Ok(SizeResult { classes, quasi_minimal: qm, merged, elapsed: start.elapsed(), resumed: false })
}

fn persist(dir: &Path, n: usize, r: &SizeResult) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let comments = if n < 7 {
        vec![format!(" size={n} classes={} source=seed-oracle", r.classes.len())]
    } else {
        vec![format!(" size={n} classes={} quasi_minimal={} merged={}", r.classes.len(), r.quasi_minimal.len(), r.merged.len())]
    };
    Lp3File::new(comments, r.classes.clone()).write(&size_path(dir, n))?;
    let cp = checkpoint_path(dir, n);
    if cp.exists() {
        std::fs::remove_file(cp)?;
    }
    Ok(())
}

/// Enumerates every size from 5 through `max_size`.
pub fn enumerate(max_size: usize, opts: &RunOptions) -> Result<EnumerationRun> {
    if max_size < 5 {
        return Err(Error::Consistency(format!("maximum size {max_size} is below 5")));
    }
    if max_size > 11 {
        log::warn!("above size 11 the quasi-minimal input is spiked only; these sizes are not checked against published counts");
    }
    let seeds = seed_database()?;
    let mut run = EnumerationRun { max_size, sizes: BTreeMap::new() };
    for n in 5..=max_size.min(6) {
        let classes = seeds.get(n).unwrap().to_vec();
        let r = SizeResult { classes, ..Default::default() };
        if let Some(dir) = &opts.out_dir {
            persist(dir, n, &r)?;
        }
        run.sizes.insert(n, r);
    }
    for n in 7..=max_size {
        let existing = opts.out_dir.as_deref().map(|d| size_path(d, n)).filter(|p| opts.resume && p.exists());
        let r = match existing {
            Some(path) => {
                let classes = Lp3File::read(&path, ReadMode::Strict)?.records;
                if classes.iter().any(|c| c.len() != n) {
                    return Err(Error::Consistency(format!("{} holds records of the wrong size", path.display())));
                }
                let qm = quasi_minimal(n)?;
                let (quasi_minimal, merged) = split(classes.clone(), &qm);
                if quasi_minimal.len() != qm.len() {
                    return Err(Error::Consistency(format!("{} lacks quasi-minimal classes", path.display())));
                }
                log::info!("size {n}: loaded {} classes from {}", classes.len(), path.display());
                SizeResult { classes, quasi_minimal, merged, elapsed: Duration::ZERO, resumed: true }
            }
            None => {
                let prev = &run.sizes[&(n - 1)].classes;
                let r = compute_size(n, prev, opts)?;
                log::info!(
                    "size {n}: {} classes ({} quasi-minimal, {} merged) in {:.1?}",
                    r.classes.len(),
                    r.quasi_minimal.len(),
                    r.merged.len(),
                    r.elapsed
                );
                if let Some(dir) = &opts.out_dir {
                    persist(dir, n, &r)?;
                }
                r
            }
        };
        run.sizes.insert(n, r);
    }
    Ok(run)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_seven_in_memory() {
        let run = enumerate(7, &RunOptions::default()).unwrap();
        let r = &run.sizes[&7];
        assert_eq!((r.classes.len(), r.quasi_minimal.len(), r.merged.len()), (496, 50, 446));
        for c in &r.quasi_minimal {
            assert_eq!(run.provenance(7, c).unwrap(), Provenance::QuasiMinimal);
        }
        assert_eq!(run.provenance(5, &run.sizes[&5].classes[0]).unwrap(), Provenance::Seed);
    }

    #[test]
    fn too_small() {
        assert!(enumerate(4, &RunOptions::default()).is_err());
    }
}
