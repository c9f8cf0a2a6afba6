//! Based spaces and linear maps between them.
//!
//! Tensor products use the row-major convention everywhere: in `M ⊗ N` the
//! vector `e_i ⊗ f_j` has index `i * dim(N) + j`. Every structure map in the
//! other crates is a [`LinMap`] written against that convention.

mod linmap;
mod quotient;
pub mod report;
mod space;

pub use exactla::{Field, LaError, Matrix, Scalar};
pub use linmap::{apply_tensor, compose_all, tensor_all, tensor_map, tensor_swap, LinMap};
pub use quotient::{quotient_by, quotient_by_sparse, QuotientSpace};
pub use report::{Condition, Report, Witness};
pub use space::{tensor_index, tensor_space, BasedSpace};

/// Splits a flat tensor index into its factor indices (row-major).
pub fn decode_index(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        if d == 0 {
            continue;
        }
        *slot = idx % d;
        idx /= d;
    }
    out
}

/// Inverse of [`decode_index`].
pub fn encode_index(parts: &[usize], dims: &[usize]) -> usize {
    parts.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}
