//! Decorated planar rooted forests.
//!
//! Internal vertices always carry an Ω-decoration; leaves may carry either
//! kind. Values are immutable once built and compare structurally, so the
//! planar order of trees and children is significant.

mod enumerate;
mod order;
mod text;

use std::fmt;
use std::sync::Arc;

pub use enumerate::{enumerate_forests, forests_of_size};
pub use order::{
    biideals, is_biideal, order_leq, restrict, vertex_at, vertex_order, VertexId, VertexSet,
};
pub(crate) use order::Layout;
pub use text::{parse_forest, render_forest};

use crate::error::ForestError;

/// Which component of the alphabet a symbol comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Omega,
    X,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decoration {
    symbol: Arc<str>,
    kind: Kind,
}

impl Decoration {
    pub fn omega(symbol: &str) -> Self {
        Decoration {
            symbol: symbol.into(),
            kind: Kind::Omega,
        }
    }

    pub fn x(symbol: &str) -> Self {
        Decoration {
            symbol: symbol.into(),
            kind: Kind::X,
        }
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_omega(&self) -> bool {
        self.kind == Kind::Omega
    }
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol)
    }
}

/// The two finite, disjoint symbol sets Ω and X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    omega: Vec<Decoration>,
    xset: Vec<Decoration>,
}

fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(omega: &[S], xset: &[S]) -> Result<Self, ForestError> {
        let mut seen = std::collections::HashSet::new();
        for s in omega.iter().chain(xset) {
            let s = s.as_ref();
            if !valid_ident(s) {
                return Err(ForestError::BadSymbol(s.to_string()));
            }
            if !seen.insert(s.to_string()) {
                return Err(ForestError::DuplicateSymbol(s.to_string()));
            }
        }
        Ok(Alphabet {
            omega: omega.iter().map(|s| Decoration::omega(s.as_ref())).collect(),
            xset: xset.iter().map(|s| Decoration::x(s.as_ref())).collect(),
        })
    }

    pub fn omega(&self) -> &[Decoration] {
        &self.omega
    }

    pub fn xset(&self) -> &[Decoration] {
        &self.xset
    }

    /// All decorations, X first then Ω.
    pub fn all(&self) -> impl Iterator<Item = &Decoration> {
        self.xset.iter().chain(self.omega.iter())
    }

    pub fn lookup(&self, symbol: &str) -> Option<&Decoration> {
        self.all().find(|d| &*d.symbol == symbol)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    root: Decoration,
    children: Vec<Tree>,
}

impl Tree {
    /// A single vertex `•_d`; valid for either kind.
    pub fn leaf(root: Decoration) -> Self {
        Tree {
            root,
            children: Vec::new(),
        }
    }

    pub fn new(root: Decoration, children: Vec<Tree>) -> Result<Self, ForestError> {
        if !children.is_empty() && !root.is_omega() {
            return Err(ForestError::InternalX(root.symbol().to_string()));
        }
        Ok(Tree { root, children })
    }

    pub fn root(&self) -> &Decoration {
        &self.root
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    /// The forest of children, i.e. `F̄` for a tree `B⁺_ω(F̄)`.
    pub fn children_forest(&self) -> Forest {
        Forest {
            trees: self.children.clone(),
        }
    }

    pub fn nvertices(&self) -> usize {
        1 + self.children.iter().map(Tree::nvertices).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        if self.root.is_omega() {
            1 + self.children.iter().map(Tree::depth).max().unwrap_or(0)
        } else {
            0
        }
    }

    pub(crate) fn children_mut(&mut self) -> &mut Vec<Tree> {
        &mut self.children
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Forest {
    trees: Vec<Tree>,
}

impl Forest {
    /// The empty forest `1`.
    pub fn empty() -> Self {
        Forest::default()
    }

    pub fn from_trees(trees: Vec<Tree>) -> Self {
        Forest { trees }
    }

    pub fn single(tree: Tree) -> Self {
        Forest { trees: vec![tree] }
    }

    pub fn point(d: Decoration) -> Self {
        Forest::single(Tree::leaf(d))
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn into_trees(self) -> Vec<Tree> {
        self.trees
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn breadth(&self) -> usize {
        self.trees.len()
    }

    pub fn nvertices(&self) -> usize {
        self.trees.iter().map(Tree::nvertices).sum()
    }

    pub fn depth(&self) -> usize {
        self.trees.iter().map(Tree::depth).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Forest) -> Forest {
        let mut trees = Vec::with_capacity(self.trees.len() + other.trees.len());
        trees.extend_from_slice(&self.trees);
        trees.extend_from_slice(&other.trees);
        Forest { trees }
    }

    /// Concatenation of three forests, `a·b·c`.
    pub fn sandwich(a: &Forest, b: &Forest, c: &Forest) -> Forest {
        let mut trees = Vec::with_capacity(a.breadth() + b.breadth() + c.breadth());
        trees.extend_from_slice(&a.trees);
        trees.extend_from_slice(&b.trees);
        trees.extend_from_slice(&c.trees);
        Forest { trees }
    }

    /// Splits off the first tree: `T₁ F′`.
    pub fn split_first(&self) -> Option<(&Tree, Forest)> {
        self.trees
            .split_first()
            .map(|(t, rest)| (t, Forest::from_trees(rest.to_vec())))
    }
}

impl From<Tree> for Forest {
    fn from(t: Tree) -> Self {
        Forest::single(t)
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_forest(self))
    }
}

/// Free function form of [`Forest::concat`].
pub fn concat(f: &Forest, g: &Forest) -> Forest {
    f.concat(g)
}

/// The grafting operator `B⁺_ω`: a new ω-root above all roots of `f`.
pub fn graft(omega: &Decoration, f: &Forest) -> Result<Tree, ForestError> {
    if !omega.is_omega() {
        return Err(ForestError::GraftOnX(omega.symbol().to_string()));
    }
    Ok(Tree {
        root: omega.clone(),
        children: f.trees.clone(),
    })
}
