//! Exact computations with linear canonical relations: composition with
//! excess bookkeeping, indexed canonical relations, the Sabot order on
//! indexed Lagrangian Grassmannians, and a finite-set relation backend.

pub mod error;
pub mod finite;
pub mod indexed;
pub mod json;
pub mod linalg;
pub mod path;
pub mod random;
pub mod relations;
pub mod symplectic;
pub mod verify;

pub use error::{Error, Result};
