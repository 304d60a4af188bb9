mod common;

use common::{bridged_double_c5, c4_with_pendants, c5_plus_chord, sqc_corpus};
use gorenstein_core::sqc::{find_sqc_partition_with, readings_disagree, sqc_gorenstein, CycleReading};
use gorenstein_core::{is_gorenstein, CharSpec, Graph};

#[test]
fn corpus_members_validate_under_both_readings() {
    for (name, g) in sqc_corpus(16) {
        for reading in [CycleReading::Walk, CycleReading::Induced] {
            if let Some(p) = find_sqc_partition_with(&g, reading).unwrap() {
                p.validate(&g, reading).unwrap_or_else(|e| panic!("{name} ({reading}): {e}"));
            }
        }
    }
}

#[test]
fn the_corpus_is_entirely_sqc() {
    let corpus = sqc_corpus(16);
    assert!(corpus.len() > 30);
    for (name, g) in &corpus {
        assert!(find_sqc_partition_with(g, CycleReading::Walk).unwrap().is_some(), "{name}");
        assert!(!readings_disagree(g).unwrap(), "{name}");
    }
}

#[test]
fn named_examples() {
    assert!(!sqc_gorenstein(&bridged_double_c5()).unwrap());
    assert!(!sqc_gorenstein(&c4_with_pendants()).unwrap());
    assert!(!sqc_gorenstein(&c5_plus_chord()).unwrap());
    assert!(!is_gorenstein(&c5_plus_chord(), CharSpec::All).unwrap().gorenstein);
}

#[test]
fn cycles_other_than_the_pentagon_are_not_sqc() {
    for n in [3, 4, 6, 7, 8, 9] {
        let g = Graph::cycle(n).unwrap();
        let sqc = find_sqc_partition_with(&g, CycleReading::Walk).unwrap().is_some();
        // The triangle is a simplex.
        assert_eq!(sqc, n == 3, "C{n}");
    }
}
