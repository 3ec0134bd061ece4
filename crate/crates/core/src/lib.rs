//! Exact computations with Young symmetrizers in the group algebra of the
//! symmetric group.

pub mod algebra;
pub mod certificate;
pub mod corner;
pub mod error;
pub mod graph;
pub mod parallel;
pub mod partition;
pub mod perm;
pub mod rational;
pub mod symmetric;
pub mod symmetrizer;
pub mod tableau;
pub mod tensor;
pub mod verify;

pub use algebra::AlgebraElement;
pub use error::{Error, Result};
pub use parallel::Execution;
pub use partition::Partition;
pub use perm::Permutation;
pub use rational::Rational;
pub use tableau::YoungTableau;
