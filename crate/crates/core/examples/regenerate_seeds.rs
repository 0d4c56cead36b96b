//! Reruns the seed oracle and rewrites the shipped seed lists.
//!
//! ```text
//! cargo run --release -p lp3-core --example regenerate_seeds [FACTOR]
//! ```
//!
//! `FACTOR` multiplies the volume bound (default 1); the output must not
//! change for any factor of at least 1.

use std::path::Path;
use std::time::Instant;

use lp3_core::seeds::{oracle_enumerate, seed_file, seed_file_name, volume_bound};

fn main() -> lp3_core::Result<()> {
    let factor: u64 = std::env::args().nth(1).map_or(1, |a| a.parse().expect("factor must be an integer"));
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    for n in [5, 6] {
        let start = Instant::now();
        let vmax = factor * volume_bound(n);
        let records = oracle_enumerate(n, vmax)?;
        println!("size {n}: {} classes in {:.1?}", records.len(), start.elapsed());
        seed_file(n, vmax, records).write(&dir.join(seed_file_name(n)))?;
    }
    Ok(())
}
