//! Unary algebras, their congruence lattices, and overalgebra constructions.

pub mod caps;
pub mod catalog;
pub mod closure;
pub mod error;
pub mod gset;
pub mod io;
pub mod lattice;
pub mod overalgebra;
pub mod partition;
pub mod unary_algebra;

pub use caps::Caps;
pub use catalog::catalog;
pub use closure::{MapSet, SubEq};
pub use error::{Error, Result};
pub use gset::{GroupAction, Perm};
pub use lattice::{FiniteLattice, PartitionLattice};
pub use overalgebra::{Construction, OveralgebraResult};
pub use partition::Partition;
pub use unary_algebra::{ConLattice, Op, Residuation, UnaryAlgebra};
