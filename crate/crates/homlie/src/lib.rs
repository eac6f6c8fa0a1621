//! Exact-arithmetic hom-Lie algebras.
//!
//! A hom-Lie algebra is a vector space with a skew-symmetric bracket and a
//! linear twisting map α satisfying the α-twisted Jacobi identity
//! [α(u),[v,w]] + [α(v),[w,u]] + [α(w),[u,v]] = 0. This crate represents
//! finite-dimensional examples over ℚ by structure constants, verifies the
//! axioms, and computes graded derivation spaces, representations, twisted
//! cochain cohomology, central/derivation extensions, semidirect products and
//! one-parameter deformations. Scalars are arbitrary-precision rationals, so
//! every result is exact.
//!
//! All values are immutable after construction and every operation is a pure
//! function.
//!
//! ```
//! use homlie::cohomology::cohomology;
//! use homlie::derivation::{derivation_space, inner_derivation_space};
//! use homlie::representation::Representation;
//!
//! let g = homlie::corpus::sl2();
//! assert!(g.verify_hom_jacobi().holds);
//! assert!(g.is_regular());
//!
//! // every derivation of sl2 is inner, so H¹ of the α⁻¹-adjoint complex vanishes
//! let rep = Representation::adjoint(&g, -1)?;
//! let h1 = cohomology(&rep, 1)?;
//! assert_eq!(h1.dim_h, 0);
//! assert_eq!(derivation_space(&g, 0)?.dim(), inner_derivation_space(&g, 0)?.dim());
//! # Ok::<(), homlie::Error>(())
//! ```

pub mod algebra;
pub mod cohomology;
pub mod corpus;
pub mod deformation;
pub mod derivation;
pub mod error;
pub mod io;
pub mod linalg;
pub mod representation;

pub use algebra::{Counterexample, HomLieAlgebra, LinearMap, VerificationReport};
pub use error::Error;
pub use linalg::{Matrix, Rational, Subspace, Vector};
