pub mod catalog;
pub mod determinantal;
pub mod error;
pub mod gorenstein;
pub mod lattice;
pub mod poset;
pub mod sagbi;
pub mod semigroup;
pub mod vector;

pub use error::{Error, Result};
pub use lattice::{DistributiveLattice, LatticeHom};
pub use poset::{Poset, PosetJson};
pub use vector::ExponentVector;
