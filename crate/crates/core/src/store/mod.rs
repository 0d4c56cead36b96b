//! Persistent databases: one LP3 file per size in a directory, checkpoints,
//! TSV reports and the published tables.

pub mod checkpoint;
pub mod expected;
pub mod lp3;
pub mod tsv;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

pub use checkpoint::Checkpoint;
pub use lp3::{Lp3File, ReadMode};
pub use tsv::TsvTable;

use crate::equivalence::fingerprint;
use crate::error::{Error, Result};
use crate::geometry::LatticePoint;

pub type Record = Vec<LatticePoint>;

pub fn size_file_name(n: usize) -> String {
    format!("size_{n:02}.lp3")
}

pub fn size_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(size_file_name(n))
}

/// Canonical classes grouped by size; each list sorted and unique.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Database {
    pub sizes: BTreeMap<usize, Vec<Record>>,
}

impl Database {
    pub fn insert_size(&mut self, n: usize, mut records: Vec<Record>) {
        lp3::sort_records(&mut records);
        self.sizes.insert(n, records);
    }

    pub fn get(&self, n: usize) -> Option<&[Record]> {
        self.sizes.get(&n).map(Vec::as_slice)
    }

    /// Largest `m` with every size `5..=m` present.
    pub fn complete_through(&self) -> Option<usize> {
        let mut m = None;
        for n in 5.. {
            if !self.sizes.contains_key(&n) {
                return m;
            }
            m = Some(n);
        }
        unreachable!()
    }

    /// Reads every `size_NN.lp3` in `dir`. Records must match their file's size.
    pub fn load_dir(dir: &Path, mode: ReadMode) -> Result<Self> {
        let mut db = Database::default();
        for entry in fs::read_dir(dir)? {
            let path = entry?.path();
            let Some(n) = path
                .file_name()
                .and_then(|f| f.to_str())
                .and_then(|f| f.strip_prefix("size_")?.strip_suffix(".lp3")?.parse::<usize>().ok())
            else {
                continue;
            };
            let file = Lp3File::read(&path, mode)?;
            if let Some(r) = file.records.iter().find(|r| r.len() != n) {
                return Err(Error::Consistency(format!("{} holds a record of size {}", path.display(), r.len())));
            }
            db.sizes.insert(n, file.records);
        }
        Ok(db)
    }

    pub fn save_size(&self, dir: &Path, n: usize, comments: Vec<String>) -> Result<()> {
        let records = self.sizes.get(&n).cloned().unwrap_or_default();
        fs::create_dir_all(dir)?;
        Lp3File::new(comments, records).write(&size_path(dir, n))
    }
}

/// Order-sensitive FNV-1a over a sorted record list.
pub fn records_hash(records: &[Record]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for r in records {
        for b in fingerprint(r).to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

/// Classes only in `a` and only in `b`. Both inputs must already be canonical.
pub fn diff_db(a: &[Record], b: &[Record]) -> (Vec<Record>, Vec<Record>) {
    let sa: BTreeSet<&Record> = a.iter().collect();
    let sb: BTreeSet<&Record> = b.iter().collect();
    let mut only_a: Vec<Record> = sa.difference(&sb).map(|r| (*r).clone()).collect();
    let mut only_b: Vec<Record> = sb.difference(&sa).map(|r| (*r).clone()).collect();
    lp3::sort_records(&mut only_a);
    lp3::sort_records(&mut only_b);
    (only_a, only_b)
}
