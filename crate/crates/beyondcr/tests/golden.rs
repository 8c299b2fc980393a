use std::path::PathBuf;

use beyondcr::golden::{golden_files, golden_params};
use beyondcr::json::parse_drawing_json;
use beyondcr::{compute_crossings, standard_drawing, Concept, LayoutVariant};

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn fixtures_match_committed_files() {
    let files = golden_files().unwrap();
    let dir = fixtures_dir();
    let mut committed: Vec<String> =
        std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    committed.sort();
    let names: Vec<&String> = files.iter().map(|(n, _)| n).collect();
    assert_eq!(names, committed.iter().collect::<Vec<_>>());
    for (name, text) in &files {
        let on_disk = std::fs::read_to_string(dir.join(name)).unwrap();
        assert!(on_disk == *text, "{name} differs from the committed fixture; rerun `beyondcr fixtures`");
    }
}

#[test]
fn generation_is_repeatable() {
    assert_eq!(golden_files().unwrap(), golden_files().unwrap());
}

// (vertices, edges, witness crossings, upper crossings), frozen from the
// emitters at the fixture parameters
const FROZEN: [(Concept, usize, usize, usize, usize); 14] = [
    (Concept::KPlanar, 37, 63, 16, 3),
    (Concept::KVertexPlanar, 61, 87, 16, 3),
    (Concept::Ic, 28, 39, 4, 2),
    (Concept::Nic, 29, 40, 4, 2),
    (Concept::Nnic, 46, 73, 16, 4),
    (Concept::KFanCrossingFree, 46, 73, 16, 4),
    (Concept::AdjacencyCrossing, 40, 135, 58, 64),
    (Concept::FanCrossing, 40, 135, 58, 64),
    (Concept::WeakFanPlanar, 40, 135, 58, 64),
    (Concept::StrongFanPlanar, 40, 135, 58, 64),
    (Concept::KEdgeCrossing, 30, 49, 1, 2),
    (Concept::KGapPlanar, 132, 180, 40, 100),
    (Concept::KApex, 48, 86, 18, 3),
    (Concept::Skewness, 50, 94, 14, 3),
];

#[test]
fn frozen_fixture_sizes() {
    for (c, n, m, wit, up) in FROZEN {
        let (ell, k) = golden_params(c);
        let w = standard_drawing(c, ell, k, LayoutVariant::Witness).unwrap();
        let u = standard_drawing(c, ell, k, LayoutVariant::Upper).unwrap();
        assert_eq!((w.graph.n(), w.graph.m()), (n, m), "{c}");
        assert_eq!(compute_crossings(&w).unwrap().len(), wit, "{c}");
        assert_eq!(compute_crossings(&u).unwrap().len(), up, "{c}");
    }
}

#[test]
fn committed_fixtures_parse_back() {
    let text = std::fs::read_to_string(fixtures_dir().join("witness_ic_l2.json")).unwrap();
    let (d, meta) = parse_drawing_json(&text).unwrap();
    assert_eq!(meta.concept, Some(Concept::Ic));
    assert_eq!(d, standard_drawing(Concept::Ic, 2, 1, LayoutVariant::Witness).unwrap());
}
