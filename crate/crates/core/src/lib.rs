//! Exact structure-constant computations for finite-dimensional Hopf algebras:
//! diagonal crossed coproducts and the codouble, (α,β)-Yetter-Drinfeld modules
//! with their braided crossed structure, and the coquasitriangular crossed
//! Turaev group-coalgebra CT(H). Every axiom is checked as a literal identity
//! between canonical exact coordinate arrays.

pub mod crossed;
pub mod group;
pub mod hopf;
pub mod io;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod turaev;
pub mod yd;

pub use report::{Check, Report, Status};
pub use scalar::{Field, Scalar};
pub use tensor::{LinMap, Tensor1to2, Tensor2to1, Vector};
