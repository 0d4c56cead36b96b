//! Published count tables as data, and the cell-by-cell comparison against a
//! computed census.
//!
//! Cell ids are paths such as `census/size=9/vertices=5` or
//! `index/size=6/index=3`. A computed census is a map from the same ids to
//! counts; cells for a size the run covers but absent from the map count as 0.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Origin {
    QuasiMinimalCensus,
    QuasiMinimalSpiked,
    QuasiMinimalBoxed,
    MainCensus,
    CanonicalTerminal,
    Width,
    Interior,
    SublatticeIndex,
    Normal,
    Dps,
    DpsMaximal,
    BoxedQ0,
    BoxedFullEdge,
    BoxedMissingEdge,
    BoxedIrredundant,
    Volume,
    Bruns,
}

impl Origin {
    pub fn title(self) -> &'static str {
        match self {
            Origin::QuasiMinimalCensus => "quasi-minimal polytopes by size and vertices",
            Origin::QuasiMinimalSpiked => "spiked quasi-minimal polytopes by size and vertices",
            Origin::QuasiMinimalBoxed => "boxed quasi-minimal polytopes by size and vertices",
            Origin::MainCensus => "width > 1 polytopes by size and vertices",
            Origin::CanonicalTerminal => "canonical and terminal polytopes by size",
            Origin::Width => "polytopes by size and width",
            Origin::Interior => "polytopes by size, interior points and vertices",
            Origin::SublatticeIndex => "polytopes by size and sublattice index",
            Origin::Normal => "normal polytopes by size",
            Origin::Dps => "dps polytopes by size and vertices",
            Origin::DpsMaximal => "maximal dps polytopes by size and vertices",
            Origin::BoxedQ0 => "boxed polytopes over the Q0 box",
            Origin::BoxedFullEdge => "boxed polytopes meeting every cube edge",
            Origin::BoxedMissingEdge => "boxed polytopes missing a cube edge",
            Origin::BoxedIrredundant => "boxed polytopes, irredundant",
            Origin::Volume => "normalized volume extremes",
            Origin::Bruns => "normal polytopes with no normal vertex removal",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedCell {
    pub id: String,
    pub origin: Origin,
    pub value: u64,
    /// Largest database size the cell depends on; 0 for cells computed from
    /// the quasi-minimal generators alone.
    pub requires: usize,
    /// A printed value known to be inconsistent with its own table.
    pub erratum: Option<&'static str>,
}

const BOXED_SIZE9_ERRATUM: &str = "printed row total 279 disagrees with its cells 0+5+30+56+18 = 109";

/// Vertex-count rows: `(size, counts for 4, 5, ... vertices)`.
type Rows = &'static [(usize, &'static [u64])];

const QUASI_MINIMAL: Rows = &[
    (5, &[9, 0]),
    (6, &[22, 13, 0]),
    (7, &[25, 21, 4]),
    (8, &[24, 18, 0]),
    (9, &[26, 18, 0]),
    (10, &[25, 21, 0]),
    (11, &[24, 25, 0]),
];
const SPIKED: Rows = &[(7, &[21, 6]), (8, &[22, 13]), (9, &[26, 17]), (10, &[24, 21]), (11, &[24, 25])];
const BOXED_QUASI_MINIMAL: Rows =
    &[(7, &[4, 15, 4]), (8, &[2, 5, 0]), (9, &[0, 1, 0]), (10, &[1, 0, 0]), (11, &[0, 0, 0])];
const MAIN: Rows = &[
    (5, &[9, 0]),
    (6, &[36, 40, 0]),
    (7, &[103, 296, 97, 0]),
    (8, &[193, 1195, 1140, 147, 0]),
    (9, &[282, 2853, 5920, 2491, 152, 0]),
    (10, &[478, 5985, 18505, 16384, 3575, 108, 0]),
    (11, &[619, 11432, 48103, 64256, 28570, 3425, 59]),
];
const MAIN_TOTALS: &[(usize, u64)] = &[(5, 9), (6, 76), (7, 496), (8, 2675), (9, 11698), (10, 45035), (11, 156464)];
const CANONICAL: &[(usize, u64, u64)] =
    &[(5, 8, 8), (6, 49, 38), (7, 218, 95), (8, 723, 144), (9, 1990, 151), (10, 4587, 107), (11, 9376, 59)];
/// `(size, [width 2, width 3, width 4, width 5])`.
const WIDTHS: &[(usize, [u64; 4])] = &[
    (5, [9, 0, 0, 0]),
    (6, [74, 2, 0, 0]),
    (7, [477, 19, 0, 0]),
    (8, [2524, 151, 0, 0]),
    (9, [10862, 836, 0, 0]),
    (10, [40885, 4148, 2, 0]),
    (11, [137803, 18635, 26, 0]),
];
/// `(size, rows by interior count starting at 0, each by vertices from 4)`.
const INTERIOR: &[(usize, &[&[u64]])] = &[
    (5, &[&[1], &[8]]),
    (6, &[&[2, 2], &[11, 38], &[23]]),
    (7, &[&[5, 10, 2], &[17, 106, 95], &[30, 180], &[51]]),
    (8, &[&[5, 27, 24, 3], &[10, 176, 393, 144], &[31, 429, 723], &[57, 563], &[90]]),
    (9, &[&[4, 43, 69, 26, 1], &[19, 195, 833, 792, 151], &[15, 524, 2303, 1673], &[50, 1075, 2715], &[92, 1016], &[102]]),
    (
        10,
        &[
            &[8, 56, 156, 109, 16, 1],
            &[15, 300, 1235, 1975, 955, 107],
            &[21, 554, 3822, 6774, 2604],
            &[37, 1304, 7504, 7526],
            &[92, 2029, 5788],
            &[119, 1742],
            &[186],
        ],
    ),
    (
        11,
        &[
            &[6, 59, 235, 267, 81, 5],
            &[19, 302, 1809, 3658, 2781, 748, 59],
            &[23, 661, 5208, 13859, 12234, 2672],
            &[32, 1326, 11892, 27467, 13474],
            &[46, 2421, 16239, 19005],
            &[99, 3307, 12720],
            &[185, 3356],
            &[209],
        ],
    ),
];
/// `(size, [index 1, index 2, index 3, index 5])`.
const INDICES: &[(usize, [u64; 4])] = &[
    (5, [7, 0, 1, 1]),
    (6, [71, 2, 3, 0]),
    (7, [486, 8, 2, 0]),
    (8, [2658, 14, 3, 0]),
    (9, [11680, 15, 3, 0]),
    (10, [45012, 19, 4, 0]),
    (11, [156436, 24, 4, 0]),
];
const NORMAL: &[(usize, u64)] = &[(5, 1), (6, 10), (7, 61), (8, 325), (9, 1532), (10, 6661), (11, 25749)];
const DPS: Rows = &[(5, &[9, 0]), (6, &[20, 25, 0]), (7, &[5, 31, 12, 0]), (8, &[3, 2, 1, 0])];
const DPS_MAXIMAL: Rows = &[(5, &[0, 0]), (6, &[0, 0, 0]), (7, &[3, 21, 9, 0]), (8, &[3, 2, 1, 0])];
const FULL_EDGE: Rows = &[
    (7, &[1, 21, 28, 0]),
    (8, &[2, 11, 48, 30, 0]),
    (9, &[0, 5, 24, 45, 16, 0]),
    (10, &[1, 0, 7, 21, 20, 6, 0]),
    (11, &[0, 1, 0, 4, 6, 4, 1]),
];
const FULL_EDGE_TOTALS: &[(usize, u64)] = &[(7, 50), (8, 91), (9, 90), (10, 55), (11, 16)];
const MISSING_EDGE: Rows = &[(7, &[4, 51, 47, 0]), (8, &[2, 19, 72, 31, 0]), (9, &[0, 3, 20, 35, 8])];
const MISSING_EDGE_TOTALS: &[(usize, u64)] = &[(7, 102), (8, 124), (9, 66)];
const IRREDUNDANT: Rows = &[
    (7, &[4, 51, 49, 0]),
    (8, &[2, 19, 77, 38, 0]),
    (9, &[0, 5, 30, 56, 18, 0]),
    (10, &[1, 0, 7, 21, 20, 6, 0]),
    (11, &[0, 1, 0, 4, 6, 4, 1]),
];
const IRREDUNDANT_TOTALS: &[(usize, u64)] = &[(7, 104), (8, 136), (9, 279), (10, 55), (11, 16)];

pub fn max_volume(n: usize) -> u64 {
    12 * (n as u64 - 4) + 8
}

struct Builder(Vec<ExpectedCell>);

impl Builder {
    fn push(&mut self, origin: Origin, id: String, value: u64, requires: usize) {
        self.0.push(ExpectedCell { id, origin, value, requires, erratum: None });
    }

    fn rows(&mut self, origin: Origin, prefix: &str, rows: Rows, db: bool, totals: bool) {
        for &(n, cells) in rows {
            let requires = if db { n } else { 0 };
            for (i, &v) in cells.iter().enumerate() {
                self.push(origin, format!("{prefix}/size={n}/vertices={}", i + 4), v, requires);
            }
            if totals {
                self.push(origin, format!("{prefix}/size={n}/total"), cells.iter().sum(), requires);
            }
        }
    }

    fn totals(&mut self, origin: Origin, prefix: &str, totals: &[(usize, u64)], db: bool) {
        for &(n, v) in totals {
            self.push(origin, format!("{prefix}/size={n}/total"), v, if db { n } else { 0 });
        }
    }
}

/// Every published cell, in a fixed order.
pub fn expected_cells() -> Vec<ExpectedCell> {
    let mut b = Builder(Vec::new());
    b.rows(Origin::QuasiMinimalCensus, "quasi-minimal", QUASI_MINIMAL, true, true);
    b.rows(Origin::QuasiMinimalSpiked, "spiked", SPIKED, false, true);
    b.rows(Origin::QuasiMinimalBoxed, "boxed-quasi-minimal", BOXED_QUASI_MINIMAL, false, true);
    b.rows(Origin::MainCensus, "census", MAIN, true, false);
    b.totals(Origin::MainCensus, "census", MAIN_TOTALS, true);
    for &(n, c, t) in CANONICAL {
        b.push(Origin::CanonicalTerminal, format!("canonical/size={n}"), c, n);
        b.push(Origin::CanonicalTerminal, format!("terminal/size={n}"), t, n);
    }
    for &(n, ws) in WIDTHS {
        for (i, &v) in ws.iter().enumerate() {
            b.push(Origin::Width, format!("width/size={n}/width={}", i + 2), v, n);
        }
    }
    for &(n, rows) in INTERIOR {
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                b.push(Origin::Interior, format!("interior/size={n}/interior={i}/vertices={}", j + 4), v, n);
            }
        }
    }
    for &(n, idx) in INDICES {
        for (k, &v) in [1, 2, 3, 5].iter().zip(idx.iter()) {
            b.push(Origin::SublatticeIndex, format!("index/size={n}/index={k}"), v, n);
        }
    }
    for &(n, v) in NORMAL {
        b.push(Origin::Normal, format!("normal/size={n}"), v, n);
    }
    b.rows(Origin::Dps, "dps", DPS, true, true);
    for &(n, cells) in DPS_MAXIMAL {
        // maximality at size n is decided against the size n + 1 database
        let requires = if n < 8 { n + 1 } else { n };
        for (i, &v) in cells.iter().enumerate() {
            b.push(Origin::DpsMaximal, format!("dps-maximal/size={n}/vertices={}", i + 4), v, requires);
        }
        b.push(Origin::DpsMaximal, format!("dps-maximal/size={n}/total"), cells.iter().sum(), requires);
    }
    b.push(Origin::BoxedQ0, "boxed-q0/size=7/total".into(), 5, 0);
    b.rows(Origin::BoxedFullEdge, "boxed-full-edge", FULL_EDGE, false, false);
    b.totals(Origin::BoxedFullEdge, "boxed-full-edge", FULL_EDGE_TOTALS, false);
    b.rows(Origin::BoxedMissingEdge, "boxed-missing-edge", MISSING_EDGE, false, false);
    b.totals(Origin::BoxedMissingEdge, "boxed-missing-edge", MISSING_EDGE_TOTALS, false);
    b.rows(Origin::BoxedIrredundant, "boxed-irredundant", IRREDUNDANT, false, false);
    b.totals(Origin::BoxedIrredundant, "boxed-irredundant", IRREDUNDANT_TOTALS, false);
    for n in 5..=11 {
        b.push(Origin::Volume, format!("volume/size={n}/max"), max_volume(n), n);
        b.push(Origin::Volume, format!("volume/size={n}/max-count"), 1, n);
        b.push(Origin::Volume, format!("volume/size={n}/max-is-tn"), 1, n);
    }
    b.push(Origin::Volume, "volume/size=9/min".into(), 10, 9);
    b.push(Origin::Volume, "volume/size=10/min".into(), 8, 10);
    b.push(Origin::Volume, "volume/size=10/min-count".into(), 1, 10);
    for n in 5..=11 {
        b.push(Origin::Bruns, format!("bruns/size={n}"), 0, n);
    }
    let mut cells = b.0;
    for c in &mut cells {
        if c.id == "boxed-irredundant/size=9/total" {
            c.erratum = Some(BOXED_SIZE9_ERRATUM);
        }
    }
    cells
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Whitelisted,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
            Status::Whitelisted => "WHITELISTED",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CellOutcome {
    pub cell: ExpectedCell,
    pub computed: Option<u64>,
    pub status: Status,
}

impl fmt::Display for CellOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} expected {}", self.status, self.cell.id, self.cell.value)?;
        if let Some(v) = self.computed {
            write!(f, " got {v}")?;
        }
        write!(f, " [{}]", self.cell.origin.title())?;
        if let (Status::Whitelisted, Some(note)) = (self.status, self.cell.erratum) {
            write!(f, " erratum: {note}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub outcomes: Vec<CellOutcome>,
}

impl Report {
    pub fn count(&self, status: Status) -> usize {
        self.outcomes.iter().filter(|o| o.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn outcomes_with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a CellOutcome> + 'a {
        self.outcomes.iter().filter(move |o| o.cell.id.starts_with(prefix))
    }
}

/// Compares `computed` against every published cell. `complete_through` is
/// the largest `m` such that the database holds every size in `5..=m`
/// (`None` when there is no database); generator cells are always compared
/// if `generators` is set.
pub fn verify_against_published(computed: &BTreeMap<String, u64>, complete_through: Option<usize>, generators: bool) -> Report {
    let mut outcomes = Vec::new();
    for cell in expected_cells() {
        let available = match cell.requires {
            0 => generators,
            r => complete_through.is_some_and(|m| r <= m),
        };
        if !available {
            outcomes.push(CellOutcome { cell, computed: None, status: Status::Skipped });
            continue;
        }
        let got = computed.get(&cell.id).copied().unwrap_or(0);
        let status = match (got == cell.value, cell.erratum) {
            (true, _) => Status::Pass,
            (false, Some(_)) => Status::Whitelisted,
            (false, None) => Status::Fail,
        };
        outcomes.push(CellOutcome { cell, computed: Some(got), status });
    }
    Report { outcomes }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let cells = expected_cells();
        let ids: std::collections::HashSet<_> = cells.iter().map(|c| c.id.clone()).collect();
        assert_eq!(ids.len(), cells.len());
    }

    #[test]
    fn rows_sum_to_published_totals() {
        let cells = expected_cells();
        let get = |id: &str| cells.iter().find(|c| c.id == id).unwrap().value;
        for &(n, t) in MAIN_TOTALS {
            let s: u64 = (4..=n).map(|v| cells.iter().find(|c| c.id == format!("census/size={n}/vertices={v}")).map_or(0, |c| c.value)).sum();
            assert_eq!(s, t, "size {n}");
            let w: u64 = (2..=5).map(|w| get(&format!("width/size={n}/width={w}"))).sum();
            assert_eq!(w, t, "width size {n}");
            let i: u64 = [1, 2, 3, 5].iter().map(|k| get(&format!("index/size={n}/index={k}"))).sum();
            assert_eq!(i, t, "index size {n}");
            let int: u64 = cells.iter().filter(|c| c.id.starts_with(&format!("interior/size={n}/"))).map(|c| c.value).sum();
            assert_eq!(int, t, "interior size {n}");
            let canon: u64 = cells.iter().filter(|c| c.id.starts_with(&format!("interior/size={n}/interior=1/"))).map(|c| c.value).sum();
            assert_eq!(canon, get(&format!("canonical/size={n}")));
            assert_eq!(get(&format!("interior/size={n}/interior=1/vertices={}", n - 1)), get(&format!("terminal/size={n}")));
        }
        for (n, qm) in [(7, 50), (8, 42), (9, 44), (10, 46), (11, 49)] {
            assert_eq!(get(&format!("quasi-minimal/size={n}/total")), qm);
            let parts = get(&format!("spiked/size={n}/total")) + get(&format!("boxed-quasi-minimal/size={n}/total"));
            assert_eq!(parts, qm, "spiked and boxed are disjoint at size {n}");
        }
    }

    #[test]
    fn skipped_failed_and_whitelisted() {
        let mut computed = BTreeMap::new();
        computed.insert("census/size=5/vertices=4".to_string(), 9);
        computed.insert("census/size=5/total".to_string(), 10);
        computed.insert("boxed-irredundant/size=9/total".to_string(), 109);
        let r = verify_against_published(&computed, Some(5), true);
        let find = |id: &str| r.outcomes.iter().find(|o| o.cell.id == id).unwrap();
        assert_eq!(find("census/size=5/vertices=4").status, Status::Pass);
        assert_eq!(find("census/size=5/vertices=5").status, Status::Pass);
        assert_eq!(find("census/size=5/total").status, Status::Fail);
        assert_eq!(find("census/size=6/total").status, Status::Skipped);
        assert_eq!(find("boxed-irredundant/size=9/total").status, Status::Whitelisted);
        assert!(find("boxed-irredundant/size=9/total").to_string().contains("erratum"));
        assert!(!r.passed());
    }
}
