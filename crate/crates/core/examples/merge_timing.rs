//! Times the enumeration up to a given size (default 9).
//!
//! ```text
//! cargo run --release -p lp3-core --example merge_timing [MAX_SIZE]
//! ```

use lp3_core::pipeline::{enumerate, RunOptions};

fn main() -> lp3_core::Result<()> {
    let max: usize = std::env::args().nth(1).map_or(9, |a| a.parse().expect("size must be an integer"));
    let run = enumerate(max, &RunOptions::default())?;
    for (n, r) in &run.sizes {
        println!("size {n}: {} classes, {} quasi-minimal, {} merged, {:.1?}", r.classes.len(), r.quasi_minimal.len(), r.merged.len(), r.elapsed);
    }
    Ok(())
}
