use proptest::prelude::*;

use forestalg::coalgebra::{coproduct, coproduct_rec, counit_left, counit_right};
use forestalg::dualprod::{left_path, star};
use forestalg::forest::{parse_forest, Alphabet, Decoration, Forest, Tree};
use forestalg::freemod::{concat_lin, rational, Coefficient, LinComb, Monomial, Rational};
use forestalg::morphisms::{phi, phi_subsets};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rational(p, q))
}

fn coefficient() -> impl Strategy<Value = Coefficient> {
    prop::collection::vec((small_rational(), -3i32..=3, 0u32..=3, 0u32..=2), 0..5).prop_map(|terms| {
        let mut c = Coefficient::zero();
        for (q, l, m, n) in terms {
            c += Coefficient::monomial(q, Monomial::new(l, m, n));
        }
        c
    })
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |q| *q != rational(0, 1))
}

fn tree() -> impl Strategy<Value = Tree> {
    let leaf = prop_oneof![
        Just(Decoration::omega("a")),
        Just(Decoration::omega("b")),
        Just(Decoration::x("x")),
        Just(Decoration::x("y")),
    ]
    .prop_map(Tree::leaf);
    leaf.prop_recursive(3, 8, 3, |inner| {
        (prop_oneof![Just("a"), Just("b")], prop::collection::vec(inner, 0..3))
            .prop_map(|(w, kids)| Tree::new(Decoration::omega(w), kids).unwrap())
    })
}

fn forest() -> impl Strategy<Value = Forest> {
    prop::collection::vec(tree(), 0..3)
        .prop_map(Forest::from_trees)
        .prop_filter("at most 9 vertices", |f| f.nvertices() <= 9)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn coefficients_form_a_commutative_ring(a in coefficient(), b in coefficient(), c in coefficient()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Coefficient::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_ring_morphism(
        a in coefficient(),
        b in coefficient(),
        l in nonzero_rational(),
        m in small_rational(),
        n in small_rational(),
    ) {
        let ev = |c: &Coefficient| c.eval(&l, &m, &n).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
    }

    #[test]
    fn coefficient_text_and_json_round_trip(a in coefficient()) {
        prop_assert_eq!(a.to_string().parse::<Coefficient>().unwrap(), a.clone());
        let back: Coefficient = serde_json::from_value(a.to_json()).unwrap();
        prop_assert_eq!(back, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn forest_text_round_trips(f in forest()) {
        let alphabet = Alphabet::new(&["a", "b"], &["x", "y"]).unwrap();
        prop_assert_eq!(parse_forest(&f.to_string(), &alphabet).unwrap(), f);
    }

    #[test]
    fn coproducts_agree_beyond_the_exhaustive_range(f in forest()) {
        prop_assert_eq!(coproduct_rec(&f), coproduct(&f));
    }

    #[test]
    fn counit_is_two_sided(f in forest()) {
        let d = coproduct(&f);
        prop_assert_eq!(counit_left(&d), LinComb::basis(f.clone()));
        prop_assert_eq!(counit_right(&d), LinComb::basis(f));
    }

    #[test]
    fn phi_closed_form_and_multiplicativity(f in forest(), g in forest()) {
        prop_assume!(f.nvertices() + g.nvertices() <= 10);
        prop_assert_eq!(phi(&LinComb::basis(f.clone())), phi_subsets(&f));
        let lhs = phi(&LinComb::basis(f.concat(&g)));
        let rhs = concat_lin(&phi(&LinComb::basis(f)), &phi(&LinComb::basis(g)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_has_binomially_many_distinct_terms(f in forest(), g in forest()) {
        let (m, n) = (f.breadth(), left_path(&g).len());
        let want = (0..n).fold(1usize, |acc, i| acc * (m + n - i) / (i + 1));
        let r = star(&f, &g);
        prop_assert_eq!(r.len(), want);
        prop_assert!(r.iter().all(|(_, c)| c.is_one()));
    }
}
