//! Algebras given by structure constants, their modules, `⊗_R`, and the
//! ring-level certificates: retractions `α: S → R` and separability
//! idempotents `e ∈ S ⊗_R S`.

mod algebra;
mod hom;
mod idempotent;
mod module;
mod retraction;
mod tensor;

pub use algebra::{check_algebra, StructureAlgebra};
pub use hom::{check_hom, find_algebra_homs, AlgebraHom, HomSearch};
pub use idempotent::{
    induce_delta_and_check, solve_sep_idempotent, verify_sep_idempotent, SepContext, SepIdempotent, SepSearch,
};
pub use module::{check_bimodule, check_left_module, check_right_module, Bimodule, LeftModule, RightModule};
pub use retraction::{retraction_kernel, verify_retraction, verify_retraction_ideal, RetractionAlpha};
pub use tensor::{alg_tensor, alg_tensor3};
