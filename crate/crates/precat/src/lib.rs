//! Linear categories over a field ("rings with several objects"), functors,
//! modules as functors into vector spaces, and the coend `M ⊗_R N`.

mod category;
mod ext;
mod functor;
mod module;
mod res;
mod tensor;

pub use category::{check_category, LinearCategory};
pub use ext::{check_ext_certificate, ExtAlpha};
pub use functor::{check_functor, LinearFunctor};
pub use module::{check_cat_module, CatModule, Variance};
pub use res::{check_res_certificate, solve_res_certificate, ResContext, ResGamma, ResSearch};
pub use tensor::{cat_tensor, coend_offsets};
