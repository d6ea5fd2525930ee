use std::time::Instant;

use foldline_core::folding::chain::{verify_builtin_chain, verify_chain, Chain};
use foldline_core::folding::{b2_closed_form, B2Models, Folding};
use foldline_core::semifield::{SymRat, Vars};
use foldline_core::weyl::Word;

fn dcba() -> (Vars, Vec<SymRat>) {
    let vars = Vars::new(["a", "b", "c", "d"]);
    let g = vars.generators();
    let coords = vec![g[3].clone(), g[2].clone(), g[1].clone(), g[0].clone()];
    (vars, coords)
}

#[test]
fn a3_chain_verifies() {
    let report = verify_builtin_chain("b2-from-a3").unwrap();
    assert!(report.ok, "{report:?}");
    assert_eq!(report.verified_steps(), 5);
    assert_eq!(report.endpoint.from, "2121");
    assert_eq!(report.endpoint.to, "1212");
}

#[test]
fn a4_chain_as_printed_fails_only_at_the_known_coordinate() {
    let report = verify_builtin_chain("b2-from-a4").unwrap();
    assert_eq!(report.steps.len(), 23);
    let failed: Vec<(usize, Option<usize>)> = report
        .steps
        .iter()
        .filter(|s| !s.ok)
        .map(|s| (s.line, s.offending_coordinate))
        .collect();
    assert_eq!(failed, vec![(13, Some(8)), (23, Some(3))]);
    assert!(report.endpoint.ok);
}

#[test]
fn corrected_a4_chain_verifies() {
    let report = verify_builtin_chain("b2-from-a4-corrected").unwrap();
    assert!(report.ok, "{report:?}");
    assert_eq!(report.verified_steps(), 23);
}

#[test]
fn corrupted_chain_is_caught_at_the_right_step() {
    let text = include_str!("../data/chains/b2_from_a3.txt").replace(
        "line 2^{d} 1^{(bc)/(b+d)} 2'^{b+d} 1^{(cd)/(b+d)} 2^{b} 1^{a}",
        "line 2^{d} 1^{(cd)/(b+d)} 2'^{b+d} 1^{(bc)/(b+d)} 2^{b} 1^{a}",
    );
    let (chain, folding) = Chain::parse(&text).unwrap();
    let report = verify_chain(&chain, &folding);
    assert!(!report.ok);
    let bad = report.first_failure().unwrap();
    assert_eq!(bad.line, 2);
    assert_eq!(bad.offending_coordinate, Some(2));
}

#[test]
fn chain_word_error_is_caught() {
    let text = include_str!("../data/chains/b2_from_a3.txt").replace(
        "line 2^{d} 1^{(bc)/(b+d)} 2^{(ab(b+d))/(alpha)} 2'^{b+d}",
        "line 2^{d} 2^{(ab(b+d))/(alpha)} 1^{(bc)/(b+d)} 2'^{b+d}",
    );
    let (chain, folding) = Chain::parse(&text).unwrap();
    let report = verify_chain(&chain, &folding);
    assert!(!report.ok);
    assert_eq!(report.first_failure().unwrap().line, 4);
}

#[test]
fn symbolic_closed_form_in_both_models() {
    let start = Instant::now();
    let (_, coords) = dcba();
    let models = B2Models::new().unwrap();
    let (x, y) = models.transitions(&coords).unwrap();
    let expected = b2_closed_form(&coords[0], &coords[1], &coords[2], &coords[3]).unwrap();
    assert_eq!(x, expected.to_vec());
    assert_eq!(y, expected.to_vec());
    assert!(models.compare_models(&coords).unwrap());
    eprintln!("symbolic B2 transitions: {:?}", start.elapsed());
}

#[test]
fn folded_words_parse_with_orbit_labels() {
    let f = Folding::builtin("A4+flip").unwrap();
    assert_eq!(f.folded_word("2121").unwrap(), Word(vec![1, 0, 1, 0]));
    assert!(f.folded_word("2112").is_err());
}
