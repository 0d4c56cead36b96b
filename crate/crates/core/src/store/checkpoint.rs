//! Per-size merge checkpoints: an LP3 body holding the classes found so far,
//! followed by `key=value` footer lines.
//!
//! ```text
//! #LP3 1
//! 8 ...
//! size=8
//! input_hash=1a2b3c4d5e6f7081
//! groups_total=412
//! groups_done=0-17,19
//! ```
//!
//! A group id is listed only after all of its candidates are in the body, so
//! resuming from any checkpoint reproduces the uninterrupted result.

use std::collections::BTreeSet;
use std::path::Path;

use super::lp3::{write_atomic, Lp3File, ReadMode};
use crate::error::{Error, Result};
use crate::geometry::LatticePoint;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub size: usize,
    /// Fingerprint of the size-(n-1) input the groups were formed from.
    pub input_hash: u64,
    pub groups_total: usize,
    pub groups_done: BTreeSet<usize>,
    pub records: Vec<Vec<LatticePoint>>,
}

fn format_ranges(ids: &BTreeSet<usize>) -> String {
    let mut parts = Vec::new();
    let mut it = ids.iter().copied().peekable();
    while let Some(start) = it.next() {
        let mut end = start;
        while it.peek() == Some(&(end + 1)) {
            end = it.next().unwrap();
        }
        parts.push(if start == end { start.to_string() } else { format!("{start}-{end}") });
    }
    parts.join(",")
}

fn parse_ranges(s: &str) -> Result<BTreeSet<usize>> {
    let bad = || Error::Checkpoint(format!("malformed group list {s:?}"));
    let mut out = BTreeSet::new();
    for part in s.split(',').filter(|p| !p.is_empty()) {
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b): (usize, usize) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
                out.extend(a..=b);
            }
            None => {
                out.insert(part.parse().map_err(|_| bad())?);
            }
        }
    }
    Ok(out)
}

impl Checkpoint {
    pub fn render(&self) -> String {
        let mut text = Lp3File::new(Vec::new(), self.records.clone()).render();
        text.push_str(&format!(
            "size={}\ninput_hash={:016x}\ngroups_total={}\ngroups_done={}\n",
            self.size,
            self.input_hash,
            self.groups_total,
            format_ranges(&self.groups_done)
        ));
        text
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_atomic(path, self.render().as_bytes())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (footer, body): (Vec<&str>, Vec<&str>) = text.lines().partition(|l| l.contains('='));
        let mut body = body.join("\n");
        body.push('\n');
        let lp3 = Lp3File::parse(&body, ReadMode::Strict).map_err(|e| Error::Checkpoint(e.to_string()))?;
        let get = |key: &str| -> Result<&str> {
            footer
                .iter()
                .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
                .ok_or_else(|| Error::Checkpoint(format!("missing {key}")))
        };
        let num = |key: &str| -> Result<usize> {
            get(key)?.parse().map_err(|_| Error::Checkpoint(format!("bad {key}")))
        };
        let ck = Checkpoint {
            size: num("size")?,
            input_hash: u64::from_str_radix(get("input_hash")?, 16)
                .map_err(|_| Error::Checkpoint("bad input_hash".into()))?,
            groups_total: num("groups_total")?,
            groups_done: parse_ranges(get("groups_done")?)?,
            records: lp3.records,
        };
        if ck.groups_done.iter().any(|&g| g >= ck.groups_total) {
            return Err(Error::Checkpoint("group id out of range".into()));
        }
        if ck.records.iter().any(|r| r.len() != ck.size) {
            return Err(Error::Checkpoint("record of the wrong size".into()));
        }
        Ok(ck)
    }

    pub fn read(path: &Path) -> Result<Self> {
        Checkpoint::parse(&std::fs::read_to_string(path)?)
    }
}
