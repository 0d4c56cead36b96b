mod common;

use std::collections::BTreeSet;

use common::width_by_box;
use lp3_core::error::Error;
use lp3_core::geometry::{affine_dimension, convex_hull, lattice_points, LatticePoint};
use lp3_core::merging::{is_merged, merge_all, merge_all_with, MergeOptions};
use lp3_core::pipeline::{enumerate, RunOptions};
use lp3_core::seeds::seed_database;

fn without(points: &[LatticePoint], drop: &[LatticePoint]) -> Vec<LatticePoint> {
    points.iter().copied().filter(|p| !drop.contains(p)).collect()
}

/// Merged by definition, with widths from the box search and vertices from
/// "not in the hull of the others".
fn merged_by_box(points: &[LatticePoint]) -> bool {
    let vertices: Vec<LatticePoint> =
        points.iter().copied().filter(|&v| !convex_hull(&without(points, &[v])).contains(v)).collect();
    let wide: Vec<LatticePoint> = vertices
        .into_iter()
        .filter(|&v| {
            let rest = without(points, &[v]);
            affine_dimension(&rest) == 3 && width_by_box(&rest, 10) > 1
        })
        .collect();
    wide.iter().enumerate().any(|(i, &v)| wide[i + 1..].iter().any(|&w| affine_dimension(&without(points, &[v, w])) == 3))
}

#[test]
fn size_six_mergings_match_definition() {
    let seeds = seed_database().unwrap();
    let by_definition: BTreeSet<_> = seeds.size6.iter().filter(|c| merged_by_box(c)).cloned().collect();
    let merged: BTreeSet<_> = merge_all(&seeds.size5, 6).unwrap().into_iter().collect();
    assert_eq!(merged, by_definition);
    assert_eq!(merged.len(), 40);
    for c in &seeds.size6 {
        assert_eq!(is_merged(c), merged.contains(c));
    }
}

#[test]
fn every_merging_is_a_closed_set_of_width_above_one() {
    let seeds = seed_database().unwrap();
    for c in merge_all(&seeds.size6, 7).unwrap() {
        assert_eq!(lattice_points(&convex_hull(&c)), c);
        assert!(width_by_box(&c, 10) > 1);
    }
}

fn size7() -> Vec<Vec<LatticePoint>> {
    enumerate(7, &RunOptions::default()).unwrap().sizes[&7].classes.clone()
}

#[test]
fn thread_count_does_not_change_output() {
    let prev = size7();
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| merge_all(&prev, 8).unwrap())
    };
    let one = run(1);
    assert_eq!(one, run(3));
    assert_eq!(one.len(), 2633);
}

#[test]
fn interrupted_merge_resumes_to_identical_result() {
    let prev = size7();
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("size_08.checkpoint");
    let opts = MergeOptions { checkpoint: Some(&cp), chunk: 50, stop_after_chunks: Some(3) };
    match merge_all_with(&prev, 8, opts) {
        Err(Error::Interrupted(done)) => assert_eq!(done, 150),
        other => panic!("expected interruption, got {other:?}"),
    }
    assert!(cp.exists());
    let resumed = merge_all_with(&prev, 8, MergeOptions { stop_after_chunks: None, ..opts }).unwrap();
    assert_eq!(resumed, merge_all(&prev, 8).unwrap());
}
