//! Tab-separated report tables: the table name, a header row, then data rows.

use std::fmt::Write as _;
use std::path::Path;

use super::lp3::write_atomic;
use crate::error::Result;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TsvTable {
    pub name: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl TsvTable {
    pub fn new(name: impl Into<String>, headers: &[&str]) -> Self {
        TsvTable { name: name.into(), headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push<I, S>(&mut self, row: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        let row: Vec<String> = row.into_iter().map(|c| c.to_string()).collect();
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.name);
        let _ = writeln!(out, "{}", self.headers.join("\t"));
        for r in &self.rows {
            let _ = writeln!(out, "{}", r.join("\t"));
        }
        out
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_atomic(path, self.render().as_bytes())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout() {
        let mut t = TsvTable::new("totals", &["size", "count"]);
        t.push([5, 9]);
        t.push(["6", "76"]);
        assert_eq!(t.render(), "totals\nsize\tcount\n5\t9\n6\t76\n");
    }
}
