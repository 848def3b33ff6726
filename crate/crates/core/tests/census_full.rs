use kummer_g2::census::{closed_form_irreducible_rigid, closed_form_nonflat, run_census, run_census_serial, CensusMode};
use kummer_g2::orbifold::relation_table;

#[test]
fn free_census_matches_closed_forms() {
    let r = run_census(CensusMode::Free, None).unwrap();
    assert_eq!(r.total(), 1 << 20);
    assert_eq!(r.irreducible_and_rigid(), closed_form_irreducible_rigid());
    assert_eq!(r.nonflat_irreducible_rigid(), closed_form_nonflat());
    assert_eq!(r.counts.criterion_mismatches, 0);
}

#[test]
fn parallel_and_serial_agree() {
    let a = run_census(CensusMode::Free, None).unwrap();
    let b = run_census_serial(CensusMode::Free, None).unwrap();
    assert_eq!(a.counts, b.counts);
}

#[test]
fn constrained_census_is_a_subset() {
    let table = relation_table().unwrap();
    let c = run_census(CensusMode::Constrained, Some(&table)).unwrap();
    let f = run_census(CensusMode::Free, None).unwrap();
    println!("constrained counts: {:?}", c.counts);
    assert!(c.total() < f.total());
    assert!(c.irreducible_and_rigid() <= f.irreducible_and_rigid());
    assert!(!c.constraints.is_empty());
}
