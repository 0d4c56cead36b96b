//! The LP3 line format.
//!
//! ```text
//! #LP3 1
//! # free-form comment lines
//! 5 -1 0 0 0 0 0 0 0 1 0 1 0 1 0 0
//! ```
//!
//! Each record is `n` followed by the `3n` coordinates of a canonical
//! representative, points in lexicographic order. Records are sorted as
//! integer tuples and unique. Output always uses single spaces and LF.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::equivalence::canonical_points;
use crate::error::{Error, Result};
use crate::geometry::{affine_dimension, convex_hull, lattice_points, LatticePoint};

pub const HEADER: &str = "#LP3 1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReadMode {
    /// Every record must already be canonical, sorted and unique.
    Strict,
    /// Any whitespace-separated coordinate list; each line is replaced by the
    /// canonical form of the lattice points of its hull.
    Lenient,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Lp3File {
    /// Comment lines without the leading `#`.
    pub comments: Vec<String>,
    pub records: Vec<Vec<LatticePoint>>,
}

/// Record order: size first, then the points lexicographically, which is the
/// integer-tuple order of the rendered lines.
pub fn sort_records(records: &mut Vec<Vec<LatticePoint>>) {
    records.sort_unstable_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    records.dedup();
}

pub fn format_record(points: &[LatticePoint]) -> String {
    let mut s = points.len().to_string();
    for p in points {
        for c in p.coords() {
            s.push(' ');
            s.push_str(&c.to_string());
        }
    }
    s
}

impl Lp3File {
    pub fn new(comments: Vec<String>, mut records: Vec<Vec<LatticePoint>>) -> Self {
        sort_records(&mut records);
        Lp3File { comments, records }
    }

    pub fn render(&self) -> String {
        let mut out = String::with_capacity(64 * self.records.len() + 64);
        out.push_str(HEADER);
        out.push('\n');
        for c in &self.comments {
            out.push('#');
            out.push_str(c);
            out.push('\n');
        }
        for r in &self.records {
            out.push_str(&format_record(r));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str, mode: ReadMode) -> Result<Self> {
        let mut lines = text.lines().enumerate().peekable();
        match lines.peek() {
            Some((_, l)) if l.starts_with("#LP3") => {
                if l.trim_end() != HEADER {
                    return Err(Error::Version(l.to_string()));
                }
                lines.next();
            }
            _ if mode == ReadMode::Strict => return Err(Error::Version("missing #LP3 header".into())),
            _ => {}
        }
        let mut file = Lp3File::default();
        let mut linenos = Vec::new();
        for (i, line) in lines {
            let lineno = i + 1;
            if let Some(c) = line.strip_prefix('#') {
                file.comments.push(c.to_string());
                continue;
            }
            if line.trim().is_empty() {
                if mode == ReadMode::Strict {
                    return Err(Error::Parse { line: lineno, msg: "empty line".into() });
                }
                continue;
            }
            let record = match mode {
                ReadMode::Strict => parse_strict(line, lineno)?,
                ReadMode::Lenient => parse_lenient(line, lineno)?,
            };
            file.records.push(record);
            linenos.push(lineno);
        }
        match mode {
            ReadMode::Strict => {
                for (i, w) in file.records.windows(2).enumerate() {
                    if (w[0].len(), &w[0]) >= (w[1].len(), &w[1]) {
                        return Err(Error::Parse { line: linenos[i + 1], msg: "records out of order or duplicated".into() });
                    }
                }
            }
            ReadMode::Lenient => {
                let before = file.records.len();
                sort_records(&mut file.records);
                if file.records.len() != before {
                    log::warn!("dropped {} duplicate classes on ingest", before - file.records.len());
                }
            }
        }
        Ok(file)
    }

    pub fn read(path: &Path, mode: ReadMode) -> Result<Self> {
        Lp3File::parse(&fs::read_to_string(path)?, mode)
    }

    /// Writes via a temporary file and a rename, so readers never see a
    /// partial file.
    pub fn write(&self, path: &Path) -> Result<()> {
        write_atomic(path, self.render().as_bytes())
    }
}

pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = std::path::PathBuf::from(tmp);
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

fn parse_ints(line: &str, lineno: usize) -> Result<Vec<i64>> {
    line.split_whitespace()
        .map(|t| t.parse::<i64>().map_err(|e| Error::Parse { line: lineno, msg: format!("{t:?}: {e}") }))
        .collect()
}

fn to_points(coords: &[i64]) -> Vec<LatticePoint> {
    coords.chunks_exact(3).map(|c| LatticePoint::new(c[0], c[1], c[2])).collect()
}

fn parse_strict(line: &str, lineno: usize) -> Result<Vec<LatticePoint>> {
    if line.contains("  ") || line.starts_with(' ') || line.ends_with(' ') || line.contains('\t') {
        return Err(Error::Parse { line: lineno, msg: "fields must be separated by single spaces".into() });
    }
    let ints = parse_ints(line, lineno)?;
    let n = *ints.first().ok_or(Error::Parse { line: lineno, msg: "empty record".into() })?;
    if n < 4 || ints.len() as i64 != 1 + 3 * n {
        return Err(Error::Parse { line: lineno, msg: format!("size {n} does not match {} coordinates", ints.len() - 1) });
    }
    let points = to_points(&ints[1..]);
    let canon = canonical_points(&points).map_err(|e| Error::Parse { line: lineno, msg: e.to_string() })?;
    if canon != points {
        return Err(Error::Parse { line: lineno, msg: "record is not in canonical form".into() });
    }
    Ok(points)
}

/// One loose coordinate list, replaced by the canonical form of the lattice
/// points of its hull.
pub fn parse_lenient(line: &str, lineno: usize) -> Result<Vec<LatticePoint>> {
    let cleaned: String = line.chars().map(|c| if ",;()[]".contains(c) { ' ' } else { c }).collect();
    let ints = parse_ints(&cleaned, lineno)?;
    let coords = if !ints.is_empty() && ints.len() % 3 == 1 && ints[0] * 3 == ints.len() as i64 - 1 {
        &ints[1..]
    } else if ints.len() % 3 == 0 {
        &ints[..]
    } else {
        return Err(Error::Parse { line: lineno, msg: "coordinate count is not a multiple of three".into() });
    };
    let given = to_points(coords);
    if affine_dimension(&given) < 3 {
        return Err(Error::Parse { line: lineno, msg: "points are not full-dimensional".into() });
    }
    let points = lattice_points(&convex_hull(&given));
    if points.len() != given.len() {
        log::warn!("line {lineno}: {} points listed, hull has {} lattice points", given.len(), points.len());
    }
    canonical_points(&points).map_err(|e| Error::Parse { line: lineno, msg: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> Vec<LatticePoint> {
        canonical_points(&[
            LatticePoint::new(0, 0, 0),
            LatticePoint::new(1, 0, 0),
            LatticePoint::new(0, 1, 0),
            LatticePoint::new(0, 0, 1),
        ])
        .unwrap()
    }

    #[test]
    fn round_trip_is_byte_stable() {
        let f = Lp3File::new(vec![" note".into()], vec![unit()]);
        let text = f.render();
        assert!(text.starts_with("#LP3 1\n# note\n4 "));
        let back = Lp3File::parse(&text, ReadMode::Strict).unwrap();
        assert_eq!(back.render(), text);
    }

    #[test]
    fn strict_rejects_non_canonical() {
        let text = "#LP3 1\n4 5 5 5 6 5 5 5 6 5 5 5 6\n";
        assert!(matches!(Lp3File::parse(text, ReadMode::Strict), Err(Error::Parse { line: 2, .. })));
        let lenient = Lp3File::parse(text, ReadMode::Lenient).unwrap();
        assert_eq!(lenient.records, vec![unit()]);
    }

    #[test]
    fn header_version_checked() {
        assert!(matches!(Lp3File::parse("#LP3 2\n", ReadMode::Lenient), Err(Error::Version(_))));
        assert!(matches!(Lp3File::parse("4 0 0 0\n", ReadMode::Strict), Err(Error::Version(_))));
    }

    #[test]
    fn malformed_line_reports_number() {
        let text = "#LP3 1\n4 0 0 x\n";
        assert!(matches!(Lp3File::parse(text, ReadMode::Strict), Err(Error::Parse { line: 2, .. })));
    }
}
