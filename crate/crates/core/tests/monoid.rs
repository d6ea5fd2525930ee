use proptest::prelude::*;

use foldline_core::cartan::{builtin, DiagramAutomorphism};
use foldline_core::chamber::Chamber;
use foldline_core::folding::Folding;
use foldline_core::monoid::{folded_mul, Monoid, MonoidElement, MonoidGenerator};
use foldline_core::weyl::Word;

fn chamber(name: &str) -> Chamber {
    Chamber::new(&builtin(name).unwrap().0).unwrap()
}

fn xi(i: usize, n: u64) -> MonoidGenerator {
    MonoidGenerator { i, n: n as i64 }
}

fn el(coords: Vec<u64>) -> MonoidElement {
    MonoidElement { coords }
}

#[test]
fn a3_word_choice_for_generator_action() {
    let c = chamber("A3");
    let m = Monoid::new(&c);
    let w1 = Word::parse(c.datum(), "121321").unwrap();
    let w2 = Word::parse(c.datum(), "123121").unwrap();
    let e = el(vec![4, 0, 2, 5, 1, 3]);
    assert_eq!(
        m.left_mul_gen_via(xi(0, 2), &e, &w1).unwrap(),
        m.left_mul_gen_via(xi(0, 2), &e, &w2).unwrap()
    );
}

#[test]
fn sigma_is_an_involution_on_a3() {
    let c = chamber("A3");
    let m = Monoid::new(&c);
    let sigma = DiagramAutomorphism::new(c.datum(), vec![2, 1, 0]).unwrap();
    let e = el(vec![1, 4, 0, 2, 6, 3]);
    let once = m.sigma(&e, &sigma).unwrap();
    assert_eq!(m.sigma(&once, &sigma).unwrap(), e);
    let id = DiagramAutomorphism::identity(c.datum());
    assert_eq!(m.sigma(&e, &id).unwrap(), e);
}

#[test]
fn crystal_graph_dot_for_a2() {
    let c = chamber("A2");
    let m = Monoid::new(&c);
    let g = m.crystal_graph(3).unwrap();
    assert_eq!(g.vertices.len(), 64);
    assert!(g.edges.iter().all(|&(a, b, _)| a != b));
    let dot = g.to_dot(c.datum().labels());
    assert!(dot.contains("\"(0,0,0)\" -> \"(1,0,0)\" [label=\"1\"];"));
}

#[test]
fn json_shape() {
    let c = chamber("A2");
    let m = Monoid::new(&c);
    let v = m.to_json(&el(vec![0, 1, 2]));
    assert_eq!(
        v,
        serde_json::json!({"word": ["1", "2", "1"], "coords": [0, 1, 2]})
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sigma_is_a_homomorphism(x in proptest::collection::vec(0u64..6, 6), y in proptest::collection::vec(0u64..6, 6)) {
        let c = chamber("A3");
        let m = Monoid::new(&c);
        let sigma = DiagramAutomorphism::new(c.datum(), vec![2, 1, 0]).unwrap();
        let (x, y) = (el(x), el(y));
        let lhs = m.sigma(&m.mul(&x, &y).unwrap(), &sigma).unwrap();
        let rhs = m.mul(&m.sigma(&x, &sigma).unwrap(), &m.sigma(&y, &sigma).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_ignores_the_word_of_the_left_factor(x in proptest::collection::vec(0u64..7, 6), y in proptest::collection::vec(0u64..7, 6)) {
        // ζ is independent of the reduced word, so writing x in another
        // word and applying its letters must give the same product.
        let c = chamber("A3");
        let m = Monoid::new(&c);
        let (x, y) = (el(x), el(y));
        let other = Word::parse(c.datum(), "321323").unwrap();
        let coords = m.coords_at(&x, &other).unwrap();
        let gens: Vec<MonoidGenerator> = other.letters().iter().zip(&coords).map(|(&i, &n)| xi(i, n)).collect();
        prop_assert_eq!(m.apply_string(&gens, &y).unwrap(), m.mul(&x, &y).unwrap());
    }

    #[test]
    fn left_action_never_raises_l(x in proptest::collection::vec(0u64..7, 3), i in 0usize..2, n in 0u64..7) {
        let c = chamber("A2");
        let m = Monoid::new(&c);
        let x = el(x);
        let y = m.left_mul_gen(xi(i, n), &x).unwrap();
        prop_assert_eq!(m.l_coord(&y, i).unwrap(), n.min(m.l_coord(&x, i).unwrap()));
    }

    #[test]
    fn folded_products_stay_fixed(f1 in proptest::collection::vec(0u64..6, 4), f2 in proptest::collection::vec(0u64..6, 4)) {
        for name in ["Dstyle:n=2", "A4+flip"] {
            let f = Folding::builtin(name).unwrap();
            let p = folded_mul(&f, &f1, &f2).unwrap();
            prop_assert_eq!(p.len(), 4);
            prop_assert_eq!(folded_mul(&f, &[0, 0, 0, 0], &f2).unwrap(), vec![0, 0, 0, 0]);
        }
    }
}
