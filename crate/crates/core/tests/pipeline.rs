mod common;

use lp3_core::classify::make_tn;
use lp3_core::equivalence::canonical_points;
use lp3_core::geometry::LatticePoint;
use lp3_core::merging::is_merged;
use lp3_core::pipeline::{enumerate, quasi_minimal, Provenance, RunOptions};
use lp3_core::seeds::exceptional_size6;
use lp3_core::width::is_quasi_minimal;

#[test]
fn size_seven_is_quasi_minimal_xor_merged() {
    let run = enumerate(7, &RunOptions::default()).unwrap();
    let r = &run.sizes[&7];
    assert_eq!((r.classes.len(), r.quasi_minimal.len(), r.merged.len()), (496, 50, 446));
    for c in &r.classes {
        let qm = is_quasi_minimal(c).unwrap();
        assert_ne!(qm, is_merged(c), "{c:?}");
        let expected = if qm { Provenance::QuasiMinimal } else { Provenance::Merged };
        assert_eq!(run.provenance(7, c).unwrap(), expected);
    }
}

#[test]
fn exceptional_polytope_is_neither() {
    let ex = exceptional_size6();
    assert!(!is_quasi_minimal(&ex).unwrap());
    assert!(!is_merged(&ex));
}

#[test]
fn tn_is_merged_and_dilated_simplex_is_quasi_minimal() {
    let t8 = make_tn(8).unwrap().into_points();
    assert!(is_merged(&t8));
    assert!(!is_quasi_minimal(&t8).unwrap());

    let p = LatticePoint::new;
    let mut two_delta = Vec::new();
    for x in 0..=2 {
        for y in 0..=2 - x {
            for z in 0..=2 - x - y {
                two_delta.push(p(x, y, z));
            }
        }
    }
    assert_eq!(two_delta.len(), 10);
    assert!(!is_merged(&two_delta));
    let canon = canonical_points(&two_delta).unwrap();
    assert!(quasi_minimal(10).unwrap().binary_search(&canon).is_ok());
}

#[test]
fn resumed_run_writes_identical_files() {
    let fresh = tempfile::tempdir().unwrap();
    enumerate(8, &RunOptions { out_dir: Some(fresh.path().into()), resume: false }).unwrap();

    let partial = tempfile::tempdir().unwrap();
    enumerate(7, &RunOptions { out_dir: Some(partial.path().into()), resume: false }).unwrap();
    let run = enumerate(8, &RunOptions { out_dir: Some(partial.path().into()), resume: true }).unwrap();
    assert!(run.sizes[&7].resumed);
    assert!(!run.sizes[&8].resumed);

    for n in 5..=8 {
        let name = format!("size_{n:02}.lp3");
        assert_eq!(std::fs::read(fresh.path().join(&name)).unwrap(), std::fs::read(partial.path().join(&name)).unwrap());
    }
}

#[test]
fn below_five_is_rejected() {
    assert!(enumerate(4, &RunOptions::default()).is_err());
}
