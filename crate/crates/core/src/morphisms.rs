//! The automorphism families `φ_ν` and `θ_ν`.

use crate::forest::{graft, Forest, Layout, Tree};
use crate::freemod::{concat_lin, Coefficient, LinComb, Pair, Rational};

/// Which morphism, and whether ν stays symbolic or is evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Morphism {
    Phi,
    Theta,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Symbolic,
    Value(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismSpec {
    pub which: Morphism,
    pub param: Param,
}

impl MorphismSpec {
    pub fn apply(&self, x: &LinComb<Forest>) -> LinComb<Forest> {
        let out = match self.which {
            Morphism::Phi => phi(x),
            Morphism::Theta => theta(x),
        };
        match &self.param {
            Param::Symbolic => out,
            Param::Value(v) => eval_nu(&out, v),
        }
    }
}

fn eval_nu(x: &LinComb<Forest>, v: &Rational) -> LinComb<Forest> {
    x.try_map_coeffs(|c| c.eval_partial(None, None, Some(v)))
        .expect("substituting ν has no poles")
}

fn phi_tree(t: &Tree) -> LinComb<Forest> {
    let nu = Coefficient::nu();
    if !t.root().is_omega() {
        let mut out = LinComb::basis(Forest::single(t.clone()));
        out.add_term(Forest::empty(), nu);
        return out;
    }
    let below = phi_forest(&t.children_forest());
    let mut out = below.scale(&nu);
    for (g, c) in below.iter() {
        let grafted = graft(t.root(), g).expect("Ω decoration");
        out.add_term(Forest::single(grafted), c.clone());
    }
    out
}

fn phi_forest(f: &Forest) -> LinComb<Forest> {
    let mut out = LinComb::basis(Forest::empty());
    for t in f.trees() {
        out = concat_lin(&out, &phi_tree(t));
    }
    out
}

/// `φ_ν` with ν symbolic, from `φ(•_x) = •_x + ν` and `φ∘B⁺_ω = (B⁺_ω + ν)∘φ`.
pub fn phi(x: &LinComb<Forest>) -> LinComb<Forest> {
    x.map_linear(phi_forest)
}

pub fn phi_at(x: &LinComb<Forest>, nu: &Rational) -> LinComb<Forest> {
    eval_nu(&phi(x), nu)
}

/// `Σ_{I ⊆ V(F)} ν^{|V(F)∖I|} F|_I`.
pub fn phi_subsets(f: &Forest) -> LinComb<Forest> {
    let layout = Layout::new(f);
    let n = layout.len();
    let mut out = LinComb::zero();
    let mut mask = vec![false; n];
    for bits in 0u64..(1u64 << n) {
        for (i, m) in mask.iter_mut().enumerate() {
            *m = bits >> i & 1 == 1;
        }
        let dropped = n as u32 - bits.count_ones();
        out.add_term(layout.restrict_mask(&mask), Coefficient::term(1, 0, 0, dropped));
    }
    out
}

/// `θ_ν(F) = ν^{n_F} F`.
pub fn theta(x: &LinComb<Forest>) -> LinComb<Forest> {
    x.iter()
        .map(|(f, c)| (f.clone(), c * &Coefficient::term(1, 0, 0, f.nvertices() as u32)))
        .collect()
}

/// Applies a linear map on each leg of `H ⊗ H`.
pub fn tensor_map(t: &LinComb<Pair>, mut f: impl FnMut(&Forest) -> LinComb<Forest>) -> LinComb<Pair> {
    t.map_linear(|(g, h)| crate::freemod::tensor(&f(g), &f(h)))
}

pub fn phi2(t: &LinComb<Pair>) -> LinComb<Pair> {
    tensor_map(t, phi_forest)
}

pub fn theta2(t: &LinComb<Pair>) -> LinComb<Pair> {
    tensor_map(t, |g| theta(&LinComb::basis(g.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{parse_forest, Alphabet};

    fn p(s: &str) -> Forest {
        parse_forest(s, &Alphabet::new(&["a", "b", "c"], &["x"]).unwrap()).unwrap()
    }

    fn lc(terms: &[(&str, &str)]) -> LinComb<Forest> {
        terms.iter().map(|(c, f)| (p(f), c.parse().unwrap())).collect()
    }

    fn both(s: &str) -> LinComb<Forest> {
        let f = p(s);
        let rec = phi(&LinComb::basis(f.clone()));
        assert_eq!(rec, phi_subsets(&f));
        rec
    }

    #[test]
    fn phi_examples() {
        assert_eq!(both("1"), lc(&[("1", "1")]));
        assert_eq!(both("x"), lc(&[("1", "x"), ("n", "1")]));
        assert_eq!(both("a"), lc(&[("1", "a"), ("n", "1")]));
        assert_eq!(both("a[b]"), lc(&[("1", "a[b]"), ("n", "a"), ("n", "b"), ("n^2", "1")]));
        assert_eq!(
            both("a[b c]"),
            lc(&[
                ("1", "a[b c]"),
                ("n", "a[b]"),
                ("n", "a[c]"),
                ("n", "b c"),
                ("n^2", "a"),
                ("n^2", "b"),
                ("n^2", "c"),
                ("n^3", "1"),
            ])
        );
        assert_eq!(
            both("a[b[c]]"),
            lc(&[
                ("1", "a[b[c]]"),
                ("n", "a[b]"),
                ("n", "a[c]"),
                ("n", "b[c]"),
                ("n^2", "a"),
                ("n^2", "b"),
                ("n^2", "c"),
                ("n^3", "1"),
            ])
        );
    }

    #[test]
    fn phi_at_zero_is_identity() {
        let x = LinComb::basis(p("a[x b] c"));
        assert_eq!(phi_at(&x, &Rational::from_integer(0.into())), x);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&LinComb::basis(Forest::empty())), LinComb::basis(Forest::empty()));
        assert_eq!(theta(&LinComb::basis(p("x"))), lc(&[("n", "x")]));
        assert_eq!(theta(&LinComb::basis(p("a[x] b"))), lc(&[("n^3", "a[x] b")]));
    }

    #[test]
    fn parameterised_application() {
        let x = LinComb::basis(p("x"));
        let m = MorphismSpec {
            which: Morphism::Phi,
            param: Param::Value(Rational::from_integer(2.into())),
        };
        assert_eq!(m.apply(&x), lc(&[("1", "x"), ("2", "1")]));
        let m = MorphismSpec {
            which: Morphism::Theta,
            param: Param::Symbolic,
        };
        assert_eq!(m.apply(&x), lc(&[("n", "x")]));
    }
}
