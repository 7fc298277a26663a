//! The coproduct `Δ_{λ,μ}` and its counit.
//!
//! Two independent routes are provided. [`coproduct_rec`] follows the
//! inductive definition (1-cocycle step on trees, weighted derivation on
//! concatenations); [`coproduct_biideal`] sums restrictions along the chain
//! of forest biideals. Everything else in the crate uses the latter.

use crate::forest::{graft, Decoration, Forest, Layout, Tree};
use crate::freemod::{act_left, act_right, Coefficient, LinComb, Pair, Triple};

fn one_one() -> Pair {
    (Forest::empty(), Forest::empty())
}

/// `Δ` by its recursive definition.
pub fn coproduct_rec(f: &Forest) -> LinComb<Pair> {
    let lambda = Coefficient::lambda();
    match f.trees() {
        [] => LinComb::term(one_one(), -&lambda),
        [t] => coproduct_tree_rec(t),
        [t1, rest @ ..] => {
            let head = Forest::single(t1.clone());
            let tail = Forest::from_trees(rest.to_vec());
            let mut out = act_left(&head, &coproduct_rec(&tail));
            out = &out + &act_right(&coproduct_tree_rec(t1), &tail);
            out.add_term((head, tail), lambda);
            out
        }
    }
}

fn coproduct_tree_rec(t: &Tree) -> LinComb<Pair> {
    let minus_lambda = -Coefficient::lambda();
    let mu = Coefficient::mu();
    let me = Forest::single(t.clone());
    if !t.root().is_omega() {
        let mut out = LinComb::term(one_one(), mu);
        out.add_term((me.clone(), Forest::empty()), minus_lambda.clone());
        out.add_term((Forest::empty(), me), minus_lambda);
        return out;
    }
    let below = t.children_forest();
    let mut out = graft_second(t.root(), &coproduct_rec(&below));
    out.add_term((me, Forest::empty()), minus_lambda);
    out.add_term((below, Forest::empty()), mu);
    out
}

/// `(id ⊗ B⁺_ω)` applied to a tensor.
pub fn graft_second(omega: &Decoration, t: &LinComb<Pair>) -> LinComb<Pair> {
    t.iter()
        .map(|((g, h), c)| {
            let grafted = graft(omega, h).expect("Ω decoration");
            ((g.clone(), Forest::single(grafted)), c.clone())
        })
        .collect()
}

/// `Δ` as `−λ Σ F|I_k ⊗ F|J_k + μ Σ F|I_{k−1} ⊗ F|J_k` over the biideal chain.
pub fn coproduct_biideal(f: &Forest) -> LinComb<Pair> {
    let splits = Layout::new(f).biideal_splits();
    let minus_lambda = -Coefficient::lambda();
    let mu = Coefficient::mu();
    let mut out = LinComb::zero();
    for k in 0..splits.len() {
        out.add_term(splits[k].clone(), minus_lambda.clone());
        if k > 0 {
            out.add_term((splits[k - 1].0.clone(), splits[k].1.clone()), mu.clone());
        }
    }
    out
}

/// The default coproduct.
pub fn coproduct(f: &Forest) -> LinComb<Pair> {
    coproduct_biideal(f)
}

pub fn coproduct_lin(x: &LinComb<Forest>) -> LinComb<Pair> {
    x.map_linear(coproduct)
}

/// `(Δ ⊗ id)`.
pub fn coproduct_left(t: &LinComb<Pair>) -> LinComb<Triple> {
    t.map_linear(|(g, h)| {
        coproduct(g)
            .iter()
            .map(|((a, b), c)| ((a.clone(), b.clone(), h.clone()), c.clone()))
            .collect()
    })
}

/// `(id ⊗ Δ)`.
pub fn coproduct_right(t: &LinComb<Pair>) -> LinComb<Triple> {
    t.map_linear(|(g, h)| {
        coproduct(h)
            .iter()
            .map(|((a, b), c)| ((g.clone(), a.clone(), b.clone()), c.clone()))
            .collect()
    })
}

/// `ε(F) = −μ^{n_F} λ^{−(n_F+1)}`.
pub fn counit(f: &Forest) -> Coefficient {
    let n = f.nvertices() as u32;
    Coefficient::term(-1, -(n as i32) - 1, n, 0)
}

pub fn counit_lin(x: &LinComb<Forest>) -> Coefficient {
    let mut out = Coefficient::zero();
    for (f, c) in x.iter() {
        out += c * &counit(f);
    }
    out
}

/// `(ε ⊗ id)`.
pub fn counit_left(t: &LinComb<Pair>) -> LinComb<Forest> {
    t.iter()
        .map(|((g, h), c)| (h.clone(), c * &counit(g)))
        .collect()
}

/// `(id ⊗ ε)`.
pub fn counit_right(t: &LinComb<Pair>) -> LinComb<Forest> {
    t.iter()
        .map(|((g, h), c)| (g.clone(), c * &counit(h)))
        .collect()
}
