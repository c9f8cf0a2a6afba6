use exactla::{sparse, sparse_axpy, LaError, SparseVec};
use findim::{quotient_by_sparse, BasedSpace, QuotientSpace};

use crate::{CatModule, Variance};

/// Start of the block `M(a) ⊗ N(a)` in `⊕_a M(a) ⊗ N(a)`; the last entry is
/// the total dimension.
pub fn coend_offsets(m: &CatModule, n: &CatModule) -> Vec<usize> {
    let mut out = vec![0];
    for a in 0..m.category.n() {
        out.push(out[a] + m.values[a].dim * n.values[a].dim);
    }
    out
}

fn shifted(v: &[exactla::Scalar], embed: impl Fn(usize) -> usize) -> SparseVec {
    sparse(v).into_iter().map(|(i, c)| (embed(i), c)).collect()
}

/// `M ⊗_R N = ⊕_a M(a) ⊗ N(a)` modulo `M(r)x ⊗ y - x ⊗ N(r)y` for basis
/// elements `r ∈ hom(a, b)`, `x ∈ M(b)`, `y ∈ N(a)`, in lexicographic order
/// of `(a, b, r, x, y)`.
pub fn cat_tensor(m: &CatModule, n: &CatModule) -> Result<QuotientSpace, LaError> {
    if m.variance != Variance::Right || n.variance != Variance::Left {
        return Err(LaError::Dimension("cat_tensor takes a right module and a left module".into()));
    }
    if m.category.field != n.category.field {
        return Err(LaError::FieldMismatch(m.category.field, n.category.field));
    }
    if m.category != n.category {
        return Err(LaError::Dimension("modules are over different categories".into()));
    }
    let c = &m.category;
    let off = coend_offsets(m, n);
    let ambient = BasedSpace::new(c.field, off[c.n()]);
    let minus = -c.field.one();
    let mut rels = Vec::new();
    for a in 0..c.n() {
        for b in 0..c.n() {
            let (dna, dnb) = (n.values[a].dim, n.values[b].dim);
            for r in 0..c.hom_dim(a, b) {
                for x in 0..m.values[b].dim {
                    let mx = m.act_basis(a, b, r, x);
                    for y in 0..dna {
                        let mut rel = shifted(&mx, |i| off[a] + i * dna + y);
                        let ny = n.act_basis(a, b, r, y);
                        sparse_axpy(&mut rel, &minus, &shifted(&ny, |j| off[b] + x * dnb + j));
                        rels.push(rel);
                    }
                }
            }
        }
    }
    quotient_by_sparse(&ambient, rels)
}
