mod common;

use common::{random_map, rng};
use lp3_core::store::lp3::format_record;
use lp3_core::store::{diff_db, Database, Lp3File, ReadMode};
use rand::seq::SliceRandom;

const SHIPPED: [&str; 2] = ["seeds_size5.lp3", "seeds_size6.lp3"];

fn shipped(name: &str) -> String {
    std::fs::read_to_string(std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)).unwrap()
}

#[test]
fn shipped_files_round_trip_byte_for_byte() {
    for name in SHIPPED {
        let text = shipped(name);
        assert_eq!(Lp3File::parse(&text, ReadMode::Strict).unwrap().render(), text);
        assert_eq!(Lp3File::parse(&text, ReadMode::Lenient).unwrap().render(), text);
    }
}

#[test]
fn lenient_ingest_of_scrambled_records() {
    let text = shipped(SHIPPED[1]);
    let file = Lp3File::parse(&text, ReadMode::Strict).unwrap();
    let mut r = rng(31);
    let mut lines: Vec<String> = file
        .records
        .iter()
        .map(|c| {
            let mut moved = random_map(&mut r).apply_all(c);
            moved.shuffle(&mut r);
            format_record(&moved)
        })
        .collect();
    lines.shuffle(&mut r);
    let scrambled = lines.join("\n") + "\n";
    assert!(Lp3File::parse(&scrambled, ReadMode::Strict).is_err());
    let back = Lp3File::parse(&scrambled, ReadMode::Lenient).unwrap();
    assert_eq!(back.records, file.records);
    assert_eq!(diff_db(&back.records, &file.records), (vec![], vec![]));
}

#[test]
fn database_directory_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let mut db = Database::default();
    for (n, name) in [(5, SHIPPED[0]), (6, SHIPPED[1])] {
        let f = Lp3File::parse(&shipped(name), ReadMode::Strict).unwrap();
        db.insert_size(n, f.records);
        db.save_size(dir.path(), n, Vec::new()).unwrap();
    }
    let back = Database::load_dir(dir.path(), ReadMode::Strict).unwrap();
    assert_eq!(back, db);
    assert_eq!(back.complete_through(), Some(6));
}
