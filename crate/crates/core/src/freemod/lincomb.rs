use std::collections::hash_map::{Entry, HashMap};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};

use serde_json::{json, Value};

use super::Coefficient;
use crate::forest::{render_forest, Forest};

pub type Pair = (Forest, Forest);
pub type Triple = (Forest, Forest, Forest);

/// A basis of forests or of tensor powers of forests.
pub trait Basis: Clone + Eq + Hash + Send + Sync {
    fn legs(&self) -> Vec<&Forest>;
}

impl Basis for Forest {
    fn legs(&self) -> Vec<&Forest> {
        vec![self]
    }
}

impl Basis for Pair {
    fn legs(&self) -> Vec<&Forest> {
        vec![&self.0, &self.1]
    }
}

impl Basis for Triple {
    fn legs(&self) -> Vec<&Forest> {
        vec![&self.0, &self.1, &self.2]
    }
}

/// Finitely supported linear combination; zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct LinComb<B: Basis> {
    terms: HashMap<B, Coefficient>,
}

impl<B: Basis> Default for LinComb<B> {
    fn default() -> Self {
        LinComb {
            terms: HashMap::new(),
        }
    }
}

impl<B: Basis> PartialEq for LinComb<B> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<B: Basis> Eq for LinComb<B> {}

impl<B: Basis> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, Coefficient::one())
    }

    pub fn term(b: B, c: Coefficient) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn add_term(&mut self, b: B, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<B>, c: &Coefficient) {
        for (b, d) in &other.terms {
            self.add_term(b.clone(), d * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Coefficient {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Coefficient)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn try_map_coeffs<E>(
        &self,
        mut f: impl FnMut(&Coefficient) -> Result<Coefficient, E>,
    ) -> Result<Self, E> {
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            out.add_term(b.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Extends `f` linearly from basis elements.
    pub fn map_linear<C: Basis>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Keeps only the terms whose basis element satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&B) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms in canonical order: by the canonical text of each leg in turn.
    pub fn sorted_terms(&self) -> Vec<(Vec<String>, &Coefficient)> {
        let mut v: Vec<(Vec<String>, &Coefficient)> = self
            .terms
            .iter()
            .map(|(b, c)| (b.legs().into_iter().map(render_forest).collect(), c))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(legs, c)| json!({"coeff": c.to_json(), "legs": legs}))
                .collect(),
        )
    }
}

impl<B: Basis> FromIterator<(B, Coefficient)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Coefficient)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

/// One term per line: `(coeff) leg ⊗ leg`, in canonical order.
impl<B: Basis> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (legs, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "({c}) {}", legs.join(" ⊗ "))?;
        }
        Ok(())
    }
}

impl<B: Basis> Add<&LinComb<B>> for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Coefficient::one());
        out
    }
}

impl<B: Basis> Sub<&LinComb<B>> for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Coefficient::int(-1));
        out
    }
}

impl<B: Basis> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        self.scale(&Coefficient::int(-1))
    }
}

/// `x ⊗ y` for combinations of forests.
pub fn tensor(x: &LinComb<Forest>, y: &LinComb<Forest>) -> LinComb<Pair> {
    let mut out = LinComb::zero();
    for (f, c) in x.iter() {
        for (g, d) in y.iter() {
            out.add_term((f.clone(), g.clone()), c * d);
        }
    }
    out
}

/// Concatenation product, extended bilinearly.
pub fn concat_lin(x: &LinComb<Forest>, y: &LinComb<Forest>) -> LinComb<Forest> {
    let mut out = LinComb::zero();
    for (f, c) in x.iter() {
        for (g, d) in y.iter() {
            out.add_term(f.concat(g), c * d);
        }
    }
    out
}

/// `F·(G⊗H) = FG⊗H`.
pub fn act_left(f: &Forest, t: &LinComb<Pair>) -> LinComb<Pair> {
    t.iter()
        .map(|((g, h), c)| ((f.concat(g), h.clone()), c.clone()))
        .collect()
}

/// `(G⊗H)·F = G⊗HF`.
pub fn act_right(t: &LinComb<Pair>, f: &Forest) -> LinComb<Pair> {
    t.iter()
        .map(|((g, h), c)| ((g.clone(), h.concat(f)), c.clone()))
        .collect()
}
