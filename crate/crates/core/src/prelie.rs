//! The pre-Lie product `F₁ ⊳ F₂ = Σ F₂⁽¹⁾ F₁ F₂⁽²⁾` and its bracket.

use crate::coalgebra::coproduct_rec;
use crate::forest::{Forest, Layout};
use crate::freemod::{Coefficient, LinComb};

/// `⊳` through the recursive coproduct, sandwiching `f1` between the legs.
pub fn prelie(f1: &Forest, f2: &Forest) -> LinComb<Forest> {
    coproduct_rec(f2)
        .iter()
        .map(|((g, h), c)| (Forest::sandwich(g, f1, h), c.clone()))
        .collect()
}

/// `⊳` from the biideal chain of `f2`, without building the coproduct.
pub fn prelie_closed(f1: &Forest, f2: &Forest) -> LinComb<Forest> {
    let splits = Layout::new(f2).biideal_splits();
    let minus_lambda = -Coefficient::lambda();
    let mu = Coefficient::mu();
    let mut out = LinComb::zero();
    for (k, (i, j)) in splits.iter().enumerate() {
        out.add_term(Forest::sandwich(i, f1, j), minus_lambda.clone());
        if k > 0 {
            out.add_term(Forest::sandwich(&splits[k - 1].0, f1, j), mu.clone());
        }
    }
    out
}

pub fn prelie_lin(x: &LinComb<Forest>, y: &LinComb<Forest>) -> LinComb<Forest> {
    let mut out = LinComb::zero();
    for (f, c) in x.iter() {
        for (g, d) in y.iter() {
            out.add_scaled(&prelie_closed(f, g), &(c * d));
        }
    }
    out
}

/// `[F₁, F₂] = F₁ ⊳ F₂ − F₂ ⊳ F₁`.
pub fn bracket(f1: &Forest, f2: &Forest) -> LinComb<Forest> {
    &prelie_closed(f1, f2) - &prelie_closed(f2, f1)
}

pub fn bracket_lin(x: &LinComb<Forest>, y: &LinComb<Forest>) -> LinComb<Forest> {
    &prelie_lin(x, y) - &prelie_lin(y, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{parse_forest, Alphabet};

    fn basis(f: &Forest) -> LinComb<Forest> {
        LinComb::basis(f.clone())
    }

    fn p(s: &str) -> Forest {
        parse_forest(s, &Alphabet::new(&["a", "b", "c"], &["x", "y"]).unwrap()).unwrap()
    }

    fn lc(terms: &[(&str, &str)]) -> LinComb<Forest> {
        terms.iter().map(|(c, f)| (p(f), c.parse().unwrap())).collect()
    }

    fn both(f1: &str, f2: &str) -> LinComb<Forest> {
        let got = prelie(&p(f1), &p(f2));
        assert_eq!(got, prelie_closed(&p(f1), &p(f2)));
        got
    }

    #[test]
    fn point_on_tree() {
        let expected = lc(&[
            ("m", "x a"),
            ("m", "b x"),
            ("-l", "x a[b]"),
            ("-l", "b x a"),
            ("-l", "a[b] x"),
        ]);
        assert_eq!(both("x", "a[b]"), expected);
    }

    #[test]
    fn tree_on_point() {
        let expected = lc(&[("m", "a[b]"), ("-l", "x a[b]"), ("-l", "a[b] x")]);
        assert_eq!(both("a[b]", "x"), expected);
    }

    #[test]
    fn unit_on_point() {
        assert_eq!(both("1", "x"), lc(&[("m", "1"), ("-2*l", "x")]));
    }

    #[test]
    fn tree_on_word() {
        let expected = lc(&[
            ("m", "a[b] y"),
            ("m", "c a[b]"),
            ("-l", "a[b] c y"),
            ("-l", "c a[b] y"),
            ("-l", "c y a[b]"),
        ]);
        assert_eq!(both("a[b]", "c y"), expected);
    }

    #[test]
    fn brackets() {
        let expected = lc(&[("m", "x a"), ("m", "b x"), ("-m", "a[b]"), ("-l", "b x a")]);
        assert_eq!(bracket(&p("x"), &p("a[b]")), expected);
        assert!(bracket(&p("a[x]"), &p("a[x]")).is_zero());
        assert!(bracket(&Forest::empty(), &Forest::empty()).is_zero());
    }

    #[test]
    fn associator_display() {
        let (f1, f2, f3) = (p("x"), p("a[b]"), p("c y"));
        let assoc = |u: &Forest, v: &Forest| {
            let left = prelie_lin(&basis(u), &prelie_closed(v, &f3));
            &left - &prelie_lin(&prelie_closed(u, v), &basis(&f3))
        };
        let expected = lc(&[
            ("m^2", "a[b] x"),
            ("m^2", "x a[b]"),
            ("-l*m", "a[b] y x"),
            ("-l*m", "x y a[b]"),
            ("-l*m", "a[b] c x"),
            ("-l*m", "x c a[b]"),
            ("-l*m", "a[b] x y"),
            ("-l*m", "x a[b] y"),
            ("-l*m", "c a[b] x"),
            ("-l*m", "c x a[b]"),
            ("l^2", "a[b] c x y"),
            ("l^2", "x c a[b] y"),
            ("l^2", "a[b] c y x"),
            ("l^2", "x c y a[b]"),
            ("l^2", "c a[b] y x"),
            ("l^2", "c x y a[b]"),
        ]);
        assert_eq!(assoc(&f1, &f2), expected);
        assert_eq!(assoc(&f2, &f1), expected);
    }
}
