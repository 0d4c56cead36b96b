//! `lp3`: enumerate, classify and verify lattice 3-polytopes of width > 1.
//!
//! Exit codes: 0 success, 1 failed validation or runtime error, 2 usage error.
//! Reports go to stdout, progress to stderr.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use log::LevelFilter;

use lp3_core::classify::{classify_all, computed_cells, tables, ClassificationRecord};
use lp3_core::pipeline::{enumerate, RunOptions};
use lp3_core::seeds::{oracle_enumerate, seed_file, volume_bound};
use lp3_core::store::expected::{verify_against_published, Status};
use lp3_core::store::lp3::{format_record, parse_lenient};
use lp3_core::store::{diff_db, Database, Lp3File, ReadMode, TsvTable};

#[derive(Parser, Debug)]
#[command(name = "lp3", version, about = "Lattice 3-polytopes of width larger than one, by size")]
struct Cli {
    /// Worker threads (default: all logical cores). Never changes any output.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
    /// More progress output on stderr (repeat for more).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate all classes up to a size and write one LP3 file per size.
    Enumerate {
        #[arg(long, default_value_t = 11, value_parser = clap::value_parser!(u32).range(5..))]
        max_size: u32,
        #[arg(long)]
        out: PathBuf,
        /// Keep size files and merge checkpoints already in the output directory.
        #[arg(long)]
        resume: bool,
    },
    /// Classify a database and write TSV tables.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        report: PathBuf,
        /// Require canonical, sorted records instead of repairing them.
        #[arg(long)]
        strict: bool,
    },
    /// Compare a database against the published tables; exits 1 on any FAIL.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Run the brute-force oracle for one size.
    Oracle {
        #[arg(long, value_parser = clap::value_parser!(u32).range(5..=7))]
        size: u32,
        /// Normalized volume bound (default: the largest volume at that size).
        #[arg(long)]
        volume_bound: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Canonicalize loose coordinate lists, one configuration per line.
    Canon { file: PathBuf },
    /// Print the classes only in A (`<`) and only in B (`>`); exits 1 if any.
    Diff { a: PathBuf, b: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => LevelFilter::Info,
        1 => LevelFilter::Debug,
        _ => LevelFilter::Trace,
    };
    env_logger::Builder::new().filter_level(level).format_timestamp_secs().init();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn read_mode(strict: bool) -> ReadMode {
    if strict {
        ReadMode::Strict
    } else {
        ReadMode::Lenient
    }
}

fn load(input: &Path, strict: bool) -> Result<Database> {
    let db = Database::load_dir(input, read_mode(strict)).with_context(|| format!("reading {}", input.display()))?;
    if db.sizes.is_empty() {
        bail!("no size_NN.lp3 files in {}", input.display());
    }
    Ok(db)
}

/// Returns whether the command's own check passed.
fn run(command: Command) -> Result<bool> {
    match command {
        Command::Enumerate { max_size, out, resume } => {
            let opts = RunOptions { out_dir: Some(out.clone()), resume };
            let run = enumerate(max_size as usize, &opts)?;
            let mut t = TsvTable::new("enumeration summary", &["size", "classes", "quasi_minimal", "merged", "seconds"]);
            for (n, r) in &run.sizes {
                let (qm, merged) = if *n < 7 {
                    ("-".to_string(), "-".to_string())
                } else {
                    (r.quasi_minimal.len().to_string(), r.merged.len().to_string())
                };
                t.push([n.to_string(), r.classes.len().to_string(), qm, merged, format!("{:.2}", r.elapsed.as_secs_f64())]);
            }
            t.write(&out.join("summary.tsv"))?;
            print!("{}", t.render());
            Ok(true)
        }
        Command::Classify { input, report, strict } => {
            let db = load(&input, strict)?;
            let records = classify_all(&db)?;
            std::fs::create_dir_all(&report)?;
            for t in tables(&records) {
                let file = format!("{}.tsv", t.name.replace(' ', "_"));
                t.write(&report.join(&file))?;
                println!("wrote {file}");
            }
            records_table(&db, &records).write(&report.join("records.tsv"))?;
            println!("wrote records.tsv");
            Ok(true)
        }
        Command::Verify { input, strict } => {
            let db = load(&input, strict)?;
            let records = classify_all(&db)?;
            let cells = computed_cells(&db, &records)?;
            let report = verify_against_published(&cells, db.complete_through(), true);
            for o in &report.outcomes {
                println!("{o}");
            }
            println!(
                "summary: {} pass, {} fail, {} skipped, {} whitelisted",
                report.count(Status::Pass),
                report.count(Status::Fail),
                report.count(Status::Skipped),
                report.count(Status::Whitelisted)
            );
            Ok(report.passed())
        }
        Command::Oracle { size, volume_bound: vb, out } => {
            let n = size as usize;
            let vmax = vb.unwrap_or_else(|| volume_bound(n));
            let records = oracle_enumerate(n, vmax)?;
            println!("size {n}: {} classes", records.len());
            seed_file(n, vmax, records).write(&out)?;
            Ok(true)
        }
        Command::Canon { file } => {
            let text = std::fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() || line.starts_with('#') {
                    continue;
                }
                println!("{}", format_record(&parse_lenient(line, i + 1)?));
            }
            Ok(true)
        }
        Command::Diff { a, b } => {
            let fa = Lp3File::read(&a, ReadMode::Lenient).with_context(|| format!("reading {}", a.display()))?;
            let fb = Lp3File::read(&b, ReadMode::Lenient).with_context(|| format!("reading {}", b.display()))?;
            let (only_a, only_b) = diff_db(&fa.records, &fb.records);
            for r in &only_a {
                println!("< {}", format_record(r));
            }
            for r in &only_b {
                println!("> {}", format_record(r));
            }
            eprintln!("{} only in {}, {} only in {}", only_a.len(), a.display(), only_b.len(), b.display());
            Ok(only_a.is_empty() && only_b.is_empty())
        }
    }
}

fn records_table(db: &Database, records: &BTreeMap<usize, Vec<ClassificationRecord>>) -> TsvTable {
    let mut t = TsvTable::new(
        "class invariants",
        &[
            "size", "vertices", "interior", "width", "volume", "index", "canonical", "terminal", "normal", "dps",
            "dps_maximal", "quasi_minimal", "minimal", "clean", "record",
        ],
    );
    let flag = |b: bool| if b { "1" } else { "0" }.to_string();
    for (n, rs) in records {
        let classes = db.get(*n).unwrap_or_default();
        for (r, c) in rs.iter().zip(classes) {
            t.push([
                r.size.to_string(),
                r.vertex_count.to_string(),
                r.interior_count.to_string(),
                r.width.to_string(),
                r.normalized_volume.to_string(),
                r.sublattice_index.to_string(),
                flag(r.is_canonical),
                flag(r.is_terminal),
                flag(r.is_normal),
                flag(r.is_dps),
                r.is_dps_maximal.map_or("-".to_string(), flag),
                flag(r.is_quasi_minimal),
                flag(r.is_minimal),
                flag(r.is_clean),
                format_record(c),
            ]);
        }
    }
    t
}
