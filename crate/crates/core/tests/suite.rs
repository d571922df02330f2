use trilie::suite::{run_suite, DEFAULT_SEED, ITEMS};

#[test]
fn every_item_passes() {
    let items = run_suite(DEFAULT_SEED);
    assert_eq!(items.len(), ITEMS.len());
    for item in &items {
        assert!(item.report.passed, "item {} {}: {:?} {:?}", item.number, item.name, item.report.witness, item.report.notes);
    }
}

#[test]
fn other_seed_passes_and_repeats() {
    let a = run_suite(7);
    let b = run_suite(7);
    for (x, y) in a.iter().zip(&b) {
        assert!(x.report.passed, "{}", x.name);
        assert_eq!(x.report, y.report);
    }
}
