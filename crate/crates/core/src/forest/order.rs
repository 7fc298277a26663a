//! Vertices, the total order "higher or more on the left", forest biideals
//! and restriction to a vertex subset.

use std::collections::BTreeSet;
use std::fmt;

use super::{Decoration, Forest, Tree};
use crate::error::ForestError;

/// A vertex addressed by its index path: tree index at the top level, then
/// child indices downward. Only meaningful relative to one host forest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(Vec<usize>);

impl VertexId {
    pub fn new(path: Vec<usize>) -> Self {
        VertexId(path)
    }

    pub fn path(&self) -> &[usize] {
        &self.0
    }

    pub fn is_ancestor_of(&self, other: &VertexId) -> bool {
        self.0.len() < other.0.len() && other.0.starts_with(&self.0)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "/{}", parts.join("/"))
    }
}

/// `v ⊴ u`, evaluated straight from the definition: `v` is weakly below
/// `u` on a root-to-leaf path, or the two are incomparable and `u` lies
/// strictly further left.
pub fn order_leq(v: &VertexId, u: &VertexId) -> bool {
    if v == u || v.is_ancestor_of(u) {
        return true;
    }
    if u.is_ancestor_of(v) {
        return false;
    }
    let (a, b) = v
        .0
        .iter()
        .zip(&u.0)
        .find(|(a, b)| a != b)
        .expect("distinct incomparable paths differ somewhere");
    b < a
}

/// A set of vertices of one host forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    host: Forest,
    members: BTreeSet<VertexId>,
}

impl VertexSet {
    pub fn new(host: &Forest, members: impl IntoIterator<Item = VertexId>) -> Result<Self, ForestError> {
        let members: BTreeSet<VertexId> = members.into_iter().collect();
        if members.iter().any(|v| vertex_at(host, v).is_none()) {
            return Err(ForestError::ForeignVertexSet);
        }
        Ok(VertexSet {
            host: host.clone(),
            members,
        })
    }

    pub fn empty(host: &Forest) -> Self {
        VertexSet {
            host: host.clone(),
            members: BTreeSet::new(),
        }
    }

    pub fn host(&self) -> &Forest {
        &self.host
    }

    pub fn members(&self) -> &BTreeSet<VertexId> {
        &self.members
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.members.contains(v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Vertices of the host not in this set.
    pub fn complement(&self) -> VertexSet {
        let layout = Layout::new(&self.host);
        VertexSet {
            host: self.host.clone(),
            members: layout
                .paths
                .into_iter()
                .filter(|v| !self.members.contains(v))
                .collect(),
        }
    }

    /// Decorations of the members, in pre-order.
    pub fn decorations(&self) -> Vec<Decoration> {
        let layout = Layout::new(&self.host);
        layout
            .paths
            .iter()
            .zip(&layout.decos)
            .filter(|(p, _)| self.members.contains(p))
            .map(|(_, d)| d.clone())
            .collect()
    }
}

/// Looks up the tree rooted at `v` inside `f`.
pub fn vertex_at<'a>(f: &'a Forest, v: &VertexId) -> Option<&'a Tree> {
    let (first, rest) = v.0.split_first()?;
    let mut t = f.trees().get(*first)?;
    for &i in rest {
        t = t.children().get(i)?;
    }
    Some(t)
}

/// Flat pre-order view of a forest. Indices below are pre-order positions.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub paths: Vec<VertexId>,
    pub decos: Vec<Decoration>,
    pub parent: Vec<Option<usize>>,
    /// Pre-order indices listed in left-to-right post-order, i.e. in
    /// ⊴-decreasing order.
    pub postorder: Vec<usize>,
}

impl Layout {
    pub fn new(f: &Forest) -> Self {
        let n = f.nvertices();
        let mut layout = Layout {
            paths: Vec::with_capacity(n),
            decos: Vec::with_capacity(n),
            parent: Vec::with_capacity(n),
            postorder: Vec::with_capacity(n),
        };
        let mut path = Vec::new();
        for (i, t) in f.trees().iter().enumerate() {
            path.push(i);
            layout.visit(t, None, &mut path);
            path.pop();
        }
        layout
    }

    fn visit(&mut self, t: &Tree, parent: Option<usize>, path: &mut Vec<usize>) {
        let me = self.paths.len();
        self.paths.push(VertexId(path.clone()));
        self.decos.push(t.root().clone());
        self.parent.push(parent);
        for (i, c) in t.children().iter().enumerate() {
            path.push(i);
            self.visit(c, Some(me), path);
            path.pop();
        }
        self.postorder.push(me);
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    /// Restriction to the vertices flagged in `mask`, contracting through
    /// removed vertices. Siblings keep their pre-order positions.
    pub fn restrict_mask(&self, mask: &[bool]) -> Forest {
        let n = self.len();
        let mut kids: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut roots = Vec::new();
        for v in (0..n).filter(|&v| mask[v]) {
            let mut p = self.parent[v];
            while let Some(q) = p {
                if mask[q] {
                    break;
                }
                p = self.parent[q];
            }
            match p {
                Some(q) => kids[q].push(v),
                None => roots.push(v),
            }
        }
        fn build(v: usize, decos: &[Decoration], kids: &[Vec<usize>]) -> Tree {
            Tree {
                root: decos[v].clone(),
                children: kids[v].iter().map(|&c| build(c, decos, kids)).collect(),
            }
        }
        Forest::from_trees(roots.iter().map(|&r| build(r, &self.decos, &kids)).collect())
    }

    /// `(F|I_k, F|J_k)` for every biideal `I_k`, `k = 0..=n`.
    pub fn biideal_splits(&self) -> Vec<(Forest, Forest)> {
        let n = self.len();
        let mut mask = vec![false; n];
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            if k > 0 {
                mask[self.postorder[k - 1]] = true;
            }
            let comp: Vec<bool> = mask.iter().map(|b| !b).collect();
            out.push((self.restrict_mask(&mask), self.restrict_mask(&comp)));
        }
        out
    }
}

/// Vertices listed in strictly ⊴-decreasing order (left-to-right
/// post-order); the first entry is the maximum.
pub fn vertex_order(f: &Forest) -> Vec<VertexId> {
    let layout = Layout::new(f);
    layout
        .postorder
        .iter()
        .map(|&i| layout.paths[i].clone())
        .collect()
}

/// The `n_F + 1` forest biideals `I_0 ⊂ I_1 ⊂ … ⊂ I_{n_F}`.
pub fn biideals(f: &Forest) -> Vec<VertexSet> {
    let order = vertex_order(f);
    let mut out = Vec::with_capacity(order.len() + 1);
    let mut members = BTreeSet::new();
    out.push(VertexSet {
        host: f.clone(),
        members: members.clone(),
    });
    for v in order {
        members.insert(v);
        out.push(VertexSet {
            host: f.clone(),
            members: members.clone(),
        });
    }
    out
}

/// Whether `set` is closed upward under ⊴.
pub fn is_biideal(set: &VertexSet) -> bool {
    let all = Layout::new(&set.host).paths;
    set.members
        .iter()
        .all(|u| all.iter().all(|v| !order_leq(u, v) || set.members.contains(v)))
}

/// `F|I`: the forest on `I` whose ancestor and left-right relations are the
/// restrictions of those of `F`.
pub fn restrict(f: &Forest, set: &VertexSet) -> Result<Forest, ForestError> {
    if set.host != *f {
        return Err(ForestError::ForeignVertexSet);
    }
    let layout = Layout::new(f);
    let mask: Vec<bool> = layout.paths.iter().map(|p| set.contains(p)).collect();
    Ok(layout.restrict_mask(&mask))
}
