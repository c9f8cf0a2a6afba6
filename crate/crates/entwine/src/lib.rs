//! Entwining structures `(A, C, ψ)`, entwined modules, and the θ/ζ
//! certificates for the two forgetful functors out of entwined modules.

mod harness;
mod module;
mod omega;
mod structure;
mod system;
mod theta;
mod zeta;

pub use harness::{check_family, delta, gamma, test_family, theta_harness, zeta_harness, TestFamily};
pub use module::{check_entwined_module, check_morphism, induce_fa, induce_fc, EntwinedModule};
pub use omega::{check_lambda, check_omega, LambdaS, OmegaT};
pub use structure::{check_entwining, EntwiningStructure};
pub use theta::{solve_theta, verify_theta, ThetaMap, ThetaSearch};
pub use zeta::{solve_zeta, verify_zeta, ZetaMap, ZetaSearch};
