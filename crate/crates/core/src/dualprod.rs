//! The Kronecker pairing and the products dual to `Δ_{λ,μ}`.

use crate::forest::{Alphabet, Forest, Tree, VertexId};
use crate::freemod::{Coefficient, LinComb, Pair};

/// `⟨x, y⟩` with forests orthonormal.
pub fn pairing(x: &LinComb<Forest>, y: &LinComb<Forest>) -> Coefficient {
    let mut out = Coefficient::zero();
    for (f, c) in x.iter() {
        out += c * &y.coeff(f);
    }
    out
}

/// Leg-wise pairing on `H ⊗ H`.
pub fn pairing2(x: &LinComb<Pair>, y: &LinComb<Pair>) -> Coefficient {
    let mut out = Coefficient::zero();
    for (b, c) in x.iter() {
        out += c * &y.coeff(b);
    }
    out
}

/// Vertices `v_1, …, v_n` along the leftmost root-to-leaf path, dropping
/// the final leaf when it is X-decorated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftPath {
    pub vertices: Vec<VertexId>,
}

impl LeftPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

pub fn left_path(g: &Forest) -> LeftPath {
    let mut vertices = Vec::new();
    let mut node = g.trees().first();
    let mut path = vec![0];
    while let Some(t) = node {
        if t.children().is_empty() {
            if t.root().is_omega() {
                vertices.push(VertexId::new(path.clone()));
            }
            break;
        }
        vertices.push(VertexId::new(path.clone()));
        path.push(0);
        node = t.children().first();
    }
    LeftPath { vertices }
}

fn left_path_len(g: &Forest) -> usize {
    left_path(g).len()
}

/// Calls `visit` with every non-decreasing map `{0..m} → {0..=n}`.
fn for_each_increasing(m: usize, n: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(sigma: &mut Vec<usize>, m: usize, n: usize, visit: &mut impl FnMut(&[usize])) {
        if sigma.len() == m {
            visit(sigma);
            return;
        }
        let lo = sigma.last().copied().unwrap_or(0);
        for j in lo..=n {
            sigma.push(j);
            go(sigma, m, n, visit);
            sigma.pop();
        }
    }
    go(&mut Vec::with_capacity(m), m, n, visit);
}

/// Rebuilds the tree at `v_depth`, prepending `grafts[depth - 1]` to its
/// children and recursing into the leftmost child while on the path.
fn rebuild(t: &Tree, depth: usize, n: usize, grafts: &[Vec<Tree>]) -> Tree {
    let mut out = t.clone();
    let kids = out.children_mut();
    if depth < n {
        kids[0] = rebuild(&t.children()[0], depth + 1, n, grafts);
    }
    let added = &grafts[depth - 1];
    if !added.is_empty() {
        kids.splice(0..0, added.iter().cloned());
    }
    out
}

/// `F ↷_σ G`: tree `T_i` goes to the far left when `σ(i) = 0` and
/// becomes the leftmost child of `v_{σ(i)}` otherwise. Trees sharing a
/// target keep their left-to-right order from `F`.
fn graft_along(f: &Forest, g: &Forest, n: usize, sigma: &[usize]) -> Forest {
    let mut left = Vec::new();
    let mut grafts: Vec<Vec<Tree>> = vec![Vec::new(); n];
    for (t, &j) in f.trees().iter().zip(sigma) {
        if j == 0 {
            left.push(t.clone());
        } else {
            grafts[j - 1].push(t.clone());
        }
    }
    let mut trees = left;
    if let Some((first, rest)) = g.trees().split_first() {
        trees.push(if n > 0 { rebuild(first, 1, n, &grafts) } else { first.clone() });
        trees.extend_from_slice(rest);
    }
    Forest::from_trees(trees)
}

/// `F ⋆ G` (the dual product for `λ = −1, μ = 0`); every coefficient is 1.
pub fn star(f: &Forest, g: &Forest) -> LinComb<Forest> {
    let n = left_path_len(g);
    let mut out = LinComb::zero();
    for_each_increasing(f.breadth(), n, &mut |sigma| {
        out.add_term(graft_along(f, g, n, sigma), Coefficient::one());
    });
    out
}

pub fn star_lin(x: &LinComb<Forest>, y: &LinComb<Forest>) -> LinComb<Forest> {
    let mut out = LinComb::zero();
    for (f, c) in x.iter() {
        for (g, d) in y.iter() {
            out.add_scaled(&star(f, g), &(c * d));
        }
    }
    out
}

/// `x ⋆_{λ,μ} y = −λ x⋆y + μ Σ_{ω ∈ X ⊔ Ω} x⋆•_ω⋆y`.
pub fn star_weighted(x: &LinComb<Forest>, y: &LinComb<Forest>, alphabet: &Alphabet) -> LinComb<Forest> {
    let mut out = star_lin(x, y).scale(&-Coefficient::lambda());
    let mu = Coefficient::mu();
    for d in alphabet.all() {
        let point = LinComb::basis(Forest::point(d.clone()));
        let left = star_lin(x, &point);
        out.add_scaled(&star_lin(&left, y), &mu);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> Alphabet {
        Alphabet::new(&["a", "b", "c", "d"], &["x"]).unwrap()
    }

    fn p(s: &str) -> Forest {
        crate::forest::parse_forest(s, &alpha()).unwrap()
    }

    fn sum(items: &[&str]) -> LinComb<Forest> {
        items.iter().map(|s| (p(s), Coefficient::one())).collect()
    }

    #[test]
    fn pairing_is_kronecker() {
        let f = LinComb::basis(p("a[x]"));
        let g = LinComb::basis(p("x a"));
        assert!(pairing(&f, &f).is_one());
        assert!(pairing(&f, &g).is_zero());
        let x = &f.scale(&Coefficient::int(2)) + &g.scale(&Coefficient::int(3));
        let y = &f - &g;
        assert_eq!(pairing(&x, &y), Coefficient::int(-1));
    }

    #[test]
    fn left_paths() {
        assert_eq!(left_path(&p("c[d]")).len(), 2);
        assert_eq!(left_path(&p("c[x]")).len(), 1);
        assert!(left_path(&Forest::empty()).is_empty());
        assert!(left_path(&p("x a[b]")).is_empty());
        assert_eq!(
            left_path(&p("a[b[c d] x] b")).vertices,
            vec![VertexId::new(vec![0]), VertexId::new(vec![0, 0]), VertexId::new(vec![0, 0, 0])]
        );
    }

    #[test]
    fn star_six_terms() {
        let got = star(&p("a b"), &p("c[d]"));
        let expected = sum(&["a b c[d]", "a c[b d]", "a c[d[b]]", "c[a b d]", "c[a d[b]]", "c[d[a b]]"]);
        assert_eq!(got, expected);
    }

    #[test]
    fn star_three_terms() {
        let got = star(&p("a b"), &p("c[x]"));
        assert_eq!(got, sum(&["a b c[x]", "a c[b x]", "c[a b x]"]));
    }

    #[test]
    fn star_units() {
        let g = p("c[d x] a");
        assert_eq!(star(&Forest::empty(), &g), LinComb::basis(g.clone()));
        assert_eq!(star(&g, &Forest::empty()), LinComb::basis(g));
    }

    #[test]
    fn weighted_on_units() {
        let one = LinComb::basis(Forest::empty());
        let got = star_weighted(&one, &one, &alpha());
        let mut expected = LinComb::term(Forest::empty(), -Coefficient::lambda());
        for s in ["a", "b", "c", "d", "x"] {
            expected.add_term(p(s), Coefficient::mu());
        }
        assert_eq!(got, expected);
    }
}
