//! Cobordism calculus for `k`-fold simple branched coverings.
//!
//! Two-dimensional coverings are modelled by monodromy ([`hurwitz`]), their
//! complete cobordism invariants and basis realizations live in [`cob2`], the
//! group `Cob(2, k)` is recomputed from an exact sequence in [`homology`]
//! (on top of the abelian-group engine in [`fgab`]), and [`ranks`] evaluates
//! the rank formulas in every dimension. [`search`] holds exhaustive and
//! randomized oracles over monodromy data.

pub mod cob2;
pub mod doc;
pub mod fgab;
pub mod homology;
pub mod hurwitz;
pub mod perm;
pub mod ranks;
pub mod search;

pub use cob2::{BasisCoeffs, ClassVector};
pub use doc::CoveringDocument;
pub use fgab::{FGAbelianGroup, Homomorphism, IntMatrix};
pub use hurwitz::{BranchPoint, BranchedCoveringSet, HurwitzData, Mode, Sign};
pub use num_bigint::BigInt;
pub use perm::Perm;
