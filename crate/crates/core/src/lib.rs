//! Exact-arithmetic geometric algebra toolkit: global and local Witt bases of
//! null vectors, spectral bases, coordinate-matrix isomorphisms, the
//! recursive Ω matrix family, and the Pauli and Dirac representations.
//!
//! Every value is exact. Scalars live in `Q(j)[√d]` and equality is
//! structural.

pub mod dirac;
pub mod error;
pub mod matrix;
pub mod multivector;
pub mod omega;
pub mod random;
pub mod report;
pub mod scalar;
pub mod signature;
pub mod spectral;
pub mod verify;
pub mod witt_global;
pub mod witt_local;

pub use error::{Error, Result};
pub use matrix::{bareiss_det, Central, Matrix, MvMatrix};
pub use multivector::{blade_product, Blade, Multivector};
pub use omega::{det_omega, fast_apply, gram_check, omega, OmegaMatrix, Variant};
pub use report::{Check, Status, VerifyReport};
pub use scalar::{Part, RadicalKey, Rational, Scalar};
pub use signature::Signature;
pub use spectral::{matrix_to_mv, mv_to_matrix, SpectralBasis};
pub use witt_global::{check_global_duality, make_global_witt, spectral_basis_nn, GlobalWitt};
pub use witt_local::{
    alpha, c8_complex_table, complex_identification_g22, ef_from_c, hadamard_identification, make_local_witt,
    no_identification_g12, FrameMap, LocalWitt,
};
pub use verify::{run_suite, Suite, VerifyOptions};
