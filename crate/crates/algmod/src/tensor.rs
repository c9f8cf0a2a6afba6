use exactla::{sparse, sparse_axpy, LaError, SparseVec};
use findim::{quotient_by_sparse, tensor_space, LinMap, QuotientSpace};

use crate::{Bimodule, LeftModule, RightModule, StructureAlgebra};

fn same_algebra(a: &StructureAlgebra, b: &StructureAlgebra) -> Result<(), LaError> {
    if a.field() != b.field() {
        return Err(LaError::FieldMismatch(a.field(), b.field()));
    }
    if !a.same_as(b) {
        return Err(LaError::Dimension("modules are over different algebras".into()));
    }
    Ok(())
}

fn sparse_columns(m: &LinMap) -> Vec<SparseVec> {
    (0..m.domain.dim).map(|j| sparse(&m.image(j))).collect()
}

/// `Σ c_x e_(embed x)` for a sparse `v`.
fn shifted(v: &SparseVec, embed: impl Fn(usize) -> usize) -> SparseVec {
    v.iter().map(|(i, c)| (embed(*i), c.clone())).collect()
}

fn difference(mut a: SparseVec, b: SparseVec) -> SparseVec {
    if let Some(one) = b.values().next().map(|x| x.field().one()) {
        sparse_axpy(&mut a, &-one, &b);
    }
    a
}

/// `M ⊗_R N` as the quotient of `M ⊗ N` by the span of
/// `(m_i r_j) ⊗ n_k - m_i ⊗ (r_j n_k)`, triples in lexicographic order.
pub fn alg_tensor(m: &RightModule, n: &LeftModule) -> Result<QuotientSpace, LaError> {
    same_algebra(&m.algebra, &n.algebra)?;
    let (dm, dr, dn) = (m.space.dim, m.algebra.dim(), n.space.dim);
    let rho = sparse_columns(&m.action);
    let lam = sparse_columns(&n.action);
    let rels = (0..dm).flat_map(move |i| (0..dr).flat_map(move |j| (0..dn).map(move |k| (i, j, k)))).map(|(i, j, k)| {
        difference(shifted(&rho[i * dr + j], |x| x * dn + k), shifted(&lam[j * dn + k], |x| i * dn + x))
    });
    quotient_by_sparse(&tensor_space(&m.space, &n.space)?, rels)
}

/// `M ⊗_R B ⊗_S N` as a single quotient of `M ⊗ B ⊗ N` by the relations at
/// both junctions.
pub fn alg_tensor3(m: &RightModule, b: &Bimodule, n: &LeftModule) -> Result<QuotientSpace, LaError> {
    same_algebra(&m.algebra, &b.left)?;
    same_algebra(&b.right, &n.algebra)?;
    let (dm, db, dn) = (m.space.dim, b.space.dim, n.space.dim);
    let (dr, ds) = (b.left.dim(), b.right.dim());
    let rho = sparse_columns(&m.action);
    let bl = sparse_columns(&b.left_action);
    let br = sparse_columns(&b.right_action);
    let lam = sparse_columns(&n.action);
    let idx = |i: usize, l: usize, k: usize| (i * db + l) * dn + k;
    let mut rels = Vec::new();
    for i in 0..dm {
        for j in 0..dr {
            for l in 0..db {
                for k in 0..dn {
                    rels.push(difference(
                        shifted(&rho[i * dr + j], |x| idx(x, l, k)),
                        shifted(&bl[j * db + l], |x| idx(i, x, k)),
                    ));
                }
            }
        }
    }
    for i in 0..dm {
        for l in 0..db {
            for j in 0..ds {
                for k in 0..dn {
                    rels.push(difference(
                        shifted(&br[l * ds + j], |x| idx(i, x, k)),
                        shifted(&lam[j * dn + k], |x| idx(i, l, x)),
                    ));
                }
            }
        }
    }
    quotient_by_sparse(&tensor_space(&tensor_space(&m.space, &b.space)?, &n.space)?, rels)
}
