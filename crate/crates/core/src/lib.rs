//! Exact counting of equivalence and weak equivalence classes of Cayley
//! graphs `C(A, Ω)` of a finite group `A`.
//!
//! Two independent routes are provided: [`oracle`] enumerates connection
//! sets and counts orbits directly, while [`formula`] evaluates the closed
//! Burnside/Möbius expressions over automorphisms, invariant subgroups and
//! cycle types. [`circulant`] specializes the machinery to cyclic groups.

pub mod census;
pub mod circulant;
pub mod error;
pub mod formula;
pub mod group;
pub mod lattice;
pub mod limits;
pub mod morphism;
pub mod numbers;
pub mod oracle;
pub mod partition;

pub use error::{CensusError, Result};
pub use group::spec::build_group;
pub use group::{ElementSet, FiniteGroup};
pub use limits::Limits;
pub use morphism::{Automorphism, AutomorphismGroup, Mode};
