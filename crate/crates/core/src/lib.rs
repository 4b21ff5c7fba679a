//! Exact folding of simple root systems under diagram automorphisms and the
//! branching of `V(d rho)` to the fixed-point subalgebra.
//!
//! - [`rootsys`]: root systems, Weyl group combinatorics, dimension formula.
//! - [`folding`]: diagram automorphisms, the restriction map and the short subsystem.
//! - [`charalg`]: sparse formal characters, Freudenthal, Klimyk, decomposition.
//! - [`branching`]: constituents of `res V(d rho)` and the checks tying them together.

pub mod branching;
pub mod charalg;
pub mod error;
pub mod folding;
pub mod linalg;
pub mod rootsys;

pub use charalg::{FormalCharacter, IrrDecomposition, Limits};
pub use error::{Error, Result};
pub use folding::{DiagramAutomorphism, FoldedPair};
pub use rootsys::{Family, LieType, RootSystem, RootVector, Weight};
