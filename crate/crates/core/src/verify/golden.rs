//! Worked examples as canonical-text fixtures.

use crate::coalgebra::coproduct;
use crate::dualprod::{star, star_weighted};
use crate::forest::{parse_forest, Alphabet, Forest};
use crate::freemod::{Basis, Coefficient, LinComb, Pair};
use crate::morphisms::phi;
use crate::prelie::{bracket, prelie_closed};

/// A computed value next to its expected canonical text.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub actual: String,
    pub expected: String,
}

impl Fixture {
    pub fn matches(&self) -> bool {
        self.actual == self.expected
    }
}

fn fixture<B: Basis>(name: &str, actual: LinComb<B>, expected: LinComb<B>) -> Fixture {
    Fixture {
        name: name.to_string(),
        actual: actual.to_string(),
        expected: expected.to_string(),
    }
}

struct Ctx {
    alphabet: Alphabet,
}

impl Ctx {
    fn f(&self, s: &str) -> Forest {
        parse_forest(s, &self.alphabet).expect("fixture forest parses")
    }

    fn c(s: &str) -> Coefficient {
        s.parse().expect("fixture coefficient parses")
    }

    fn single(&self, terms: &[(&str, &str)]) -> LinComb<Forest> {
        terms.iter().map(|(c, f)| (self.f(f), Ctx::c(c))).collect()
    }

    fn pairs(&self, terms: &[(&str, &str, &str)]) -> LinComb<Pair> {
        terms
            .iter()
            .map(|(c, g, h)| ((self.f(g), self.f(h)), Ctx::c(c)))
            .collect()
    }

    fn cop(&self, name: &str, f: &str, terms: &[(&str, &str, &str)]) -> Fixture {
        fixture(name, coproduct(&self.f(f)), self.pairs(terms))
    }
}

/// Every fixture, in a fixed order.
pub fn golden_fixtures() -> Vec<Fixture> {
    let cx = Ctx {
        alphabet: Alphabet::new(&["a", "b", "c", "d", "w"], &["x", "y"]).expect("valid alphabet"),
    };
    let mut out = vec![
        cx.cop("coproduct x", "x", &[("m", "1", "1"), ("-l", "x", "1"), ("-l", "1", "x")]),
        cx.cop("coproduct a", "a", &[("m", "1", "1"), ("-l", "a", "1"), ("-l", "1", "a")]),
        cx.cop(
            "coproduct a[x]",
            "a[x]",
            &[
                ("m", "x", "1"),
                ("m", "1", "a"),
                ("-l", "a[x]", "1"),
                ("-l", "x", "a"),
                ("-l", "1", "a[x]"),
            ],
        ),
        cx.cop(
            "coproduct y a[x]",
            "y a[x]",
            &[
                ("m", "y x", "1"),
                ("m", "y", "a"),
                ("m", "1", "a[x]"),
                ("-l", "y a[x]", "1"),
                ("-l", "y x", "a"),
                ("-l", "y", "a[x]"),
                ("-l", "1", "y a[x]"),
            ],
        ),
        cx.cop(
            "coproduct a[y b[x]]",
            "a[y b[x]]",
            &[
                ("m", "1", "a[b[x]]"),
                ("m", "y", "a[b]"),
                ("m", "y x", "a"),
                ("m", "y b[x]", "1"),
                ("-l", "a[y b[x]]", "1"),
                ("-l", "y b[x]", "a"),
                ("-l", "y x", "a[b]"),
                ("-l", "y", "a[b[x]]"),
                ("-l", "1", "a[y b[x]]"),
            ],
        ),
        cx.cop(
            "biideal expansion b a[x]",
            "b a[x]",
            &[
                ("m", "1", "a[x]"),
                ("m", "b", "a"),
                ("m", "b x", "1"),
                ("-l", "1", "b a[x]"),
                ("-l", "b", "a[x]"),
                ("-l", "b x", "a"),
                ("-l", "b a[x]", "1"),
            ],
        ),
        cx.cop(
            "biideal expansion w[a b[x]]",
            "w[a b[x]]",
            &[
                ("m", "1", "w[b[x]]"),
                ("m", "a", "w[b]"),
                ("m", "a x", "w"),
                ("m", "a b[x]", "1"),
                ("-l", "w[a b[x]]", "1"),
                ("-l", "a b[x]", "w"),
                ("-l", "a x", "w[b]"),
                ("-l", "a", "w[b[x]]"),
                ("-l", "1", "w[a b[x]]"),
            ],
        ),
        fixture(
            "star a b, c[d]",
            star(&cx.f("a b"), &cx.f("c[d]")),
            cx.single(&[
                ("1", "a b c[d]"),
                ("1", "a c[b d]"),
                ("1", "a c[d[b]]"),
                ("1", "c[a b d]"),
                ("1", "c[a d[b]]"),
                ("1", "c[d[a b]]"),
            ]),
        ),
        fixture(
            "star a b, c[x]",
            star(&cx.f("a b"), &cx.f("c[x]")),
            cx.single(&[("1", "a b c[x]"), ("1", "a c[b x]"), ("1", "c[a b x]")]),
        ),
    ];
    out.push(weighted_fixture());
    for (src, terms) in [
        ("a", vec![("1", "a"), ("n", "1")]),
        ("a[b]", vec![("1", "a[b]"), ("n", "a"), ("n", "b"), ("n^2", "1")]),
        (
            "a[b c]",
            vec![
                ("1", "a[b c]"),
                ("n", "a[b]"),
                ("n", "a[c]"),
                ("n", "b c"),
                ("n^2", "a"),
                ("n^2", "b"),
                ("n^2", "c"),
                ("n^3", "1"),
            ],
        ),
        (
            "a[b[c]]",
            vec![
                ("1", "a[b[c]]"),
                ("n", "a[b]"),
                ("n", "a[c]"),
                ("n", "b[c]"),
                ("n^2", "a"),
                ("n^2", "b"),
                ("n^2", "c"),
                ("n^3", "1"),
            ],
        ),
    ] {
        out.push(fixture(
            &format!("phi {src}"),
            phi(&LinComb::basis(cx.f(src))),
            cx.single(&terms),
        ));
    }
    out.push(fixture(
        "prelie x, a[b]",
        prelie_closed(&cx.f("x"), &cx.f("a[b]")),
        cx.single(&[
            ("m", "x a"),
            ("m", "b x"),
            ("-l", "x a[b]"),
            ("-l", "b x a"),
            ("-l", "a[b] x"),
        ]),
    ));
    out.push(fixture(
        "prelie a[b], x",
        prelie_closed(&cx.f("a[b]"), &cx.f("x")),
        cx.single(&[("m", "a[b]"), ("-l", "x a[b]"), ("-l", "a[b] x")]),
    ));
    out.push(fixture(
        "bracket x, a[b]",
        bracket(&cx.f("x"), &cx.f("a[b]")),
        cx.single(&[("m", "x a"), ("m", "b x"), ("-m", "a[b]"), ("-l", "b x a")]),
    ));
    out.push(fixture(
        "prelie a[b], c y",
        prelie_closed(&cx.f("a[b]"), &cx.f("c y")),
        cx.single(&[
            ("m", "a[b] y"),
            ("m", "c a[b]"),
            ("-l", "a[b] c y"),
            ("-l", "c a[b] y"),
            ("-l", "c y a[b]"),
        ]),
    ));
    out
}

/// `a ⋆_{λ,μ} b[c]` over Ω = {a, b, c, w}, X = {x}.
fn weighted_fixture() -> Fixture {
    let cx = Ctx {
        alphabet: Alphabet::new(&["a", "b", "c", "w"], &["x"]).expect("valid alphabet"),
    };
    let mut expected = cx.single(&[("-l", "a b[c]"), ("-l", "b[a c]"), ("-l", "b[c[a]]")]);
    let per_omega = [
        "a {} b[c]",
        "{}[a] b[c]",
        "a b[{} c]",
        "b[a {} c]",
        "b[{}[a] c]",
        "a b[c[{}]]",
        "b[a c[{}]]",
        "b[c[a {}]]",
        "b[c[{}[a]]]",
    ];
    for w in ["a", "b", "c", "w"] {
        for t in per_omega {
            expected.add_term(cx.f(&t.replace("{}", w)), Coefficient::mu());
        }
    }
    let per_x = ["a {} b[c]", "a b[{} c]", "b[a {} c]", "a b[c[{}]]", "b[a c[{}]]", "b[c[a {}]]"];
    for t in per_x {
        expected.add_term(cx.f(&t.replace("{}", "x")), Coefficient::mu());
    }
    let actual = star_weighted(
        &LinComb::basis(cx.f("a")),
        &LinComb::basis(cx.f("b[c]")),
        &cx.alphabet,
    );
    fixture("star-weighted a, b[c]", actual, expected)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_match() {
        let fixtures = golden_fixtures();
        assert_eq!(fixtures.len(), 18);
        for fx in fixtures {
            assert!(fx.matches(), "{}:\n{}\nexpected:\n{}", fx.name, fx.actual, fx.expected);
        }
    }
}
