//! Combinatorial nonembeddability certificates for simplicial complexes.
//!
//! The crate works with complexes on small ground sets `[n]` (`n <= 63`), stored
//! as antichains of facets packed into single machine words. On top of that it
//! provides
//!
//! * Alexander duals, joins, deleted joins and Bier spheres ([`dual`]),
//! * chain complexes over GF(2): Betti numbers, cocycles, cup products and the
//!   counting cochain ([`z2`]),
//! * Kneser-graph colouring bounds and assembled Z2-index lower bounds that
//!   certify nonembeddability into Euclidean space ([`certify`]),
//! * a plain-text facet format and a canonical JSON report ([`io`]).
//!
//! Index bounds are lower bounds only. A certificate never claims more than the
//! two routes it implements can prove: the Sarkaria colouring bound, and the
//! Bier-sphere bound for complexes that equal their own Alexander dual.

pub mod certify;
pub mod complex;
pub mod dual;
mod error;
pub mod face;
mod facemap;
pub mod io;
pub mod set_system;
pub mod z2;

pub use complex::{ComplexKind, FVector, SimplicialComplex};
pub use error::{Error, Result};
pub use face::{FaceSet, MAX_VERTICES};
pub use facemap::{FaceMap, EXHAUSTIVE_LIMIT};
pub use set_system::SetSystem;
