//! Decorated planar rooted forests with the weighted infinitesimal
//! bialgebra structure `Δ_{λ,μ}`, its dual products, the `φ_ν`/`θ_ν`
//! morphisms and the induced pre-Lie product.

pub mod coalgebra;
pub mod dualprod;
pub mod error;
pub mod forest;
pub mod freemod;
pub mod morphisms;
pub mod prelie;
pub mod verify;

pub use error::{CoeffError, ForestError};
pub use forest::{Alphabet, Decoration, Forest, Kind, Tree};
pub use freemod::{Coefficient, LinComb, Pair, Rational, Triple};
