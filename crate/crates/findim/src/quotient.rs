use exactla::{sparse, vector, LaError, Matrix, Scalar, SparseEchelon, SparseVec};

use crate::{BasedSpace, LinMap};

/// `ambient / span(relations)`.
///
/// The quotient basis is the set of non-pivot coordinates of the RREF of the
/// relations, so the section sends quotient basis vector `t` to the ambient
/// basis vector at the `t`-th non-pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    pub ambient: BasedSpace,
    pub projection: LinMap,
    pub section: LinMap,
}

impl QuotientSpace {
    pub fn dim(&self) -> usize {
        self.projection.codomain.dim
    }

    pub fn space(&self) -> &BasedSpace {
        &self.projection.codomain
    }

    pub fn project(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LaError> {
        self.projection.apply(v)
    }

    pub fn lift(&self, q: &[Scalar]) -> Result<Vec<Scalar>, LaError> {
        self.section.apply(q)
    }

    /// Ambient coordinates chosen as representatives of the quotient basis.
    pub fn representatives(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|t| {
                let col = self.section.image(t);
                col.iter().position(|x| !x.is_zero()).expect("section columns are unit vectors")
            })
            .collect()
    }

    /// Nonzero rows of the RREF of the relations, read back off the
    /// projection: the row of pivot `p` is `e_p - section(projection(e_p))`.
    pub fn relation_span(&self) -> Matrix {
        let field = self.ambient.field;
        let n = self.ambient.dim;
        let reps = self.representatives();
        let mut is_rep = vec![false; n];
        for &r in &reps {
            is_rep[r] = true;
        }
        let rows: Vec<Vec<Scalar>> = (0..n)
            .filter(|&p| !is_rep[p])
            .map(|p| {
                let mut row = vector::unit(field, n, p);
                for (t, x) in self.projection.image(p).iter().enumerate() {
                    row[reps[t]] = -x;
                }
                row
            })
            .collect();
        Matrix::from_rows(field, n, &rows).expect("row lengths")
    }
}

pub fn quotient_by(ambient: &BasedSpace, relations: &[Vec<Scalar>]) -> Result<QuotientSpace, LaError> {
    if let Some(bad) = relations.iter().find(|r| r.len() != ambient.dim) {
        return Err(LaError::Dimension(format!(
            "relation of length {} in a space of dimension {}",
            bad.len(),
            ambient.dim
        )));
    }
    quotient_by_sparse(ambient, relations.iter().map(|r| sparse(r)))
}

/// Same as [`quotient_by`] with relations streamed as sparse vectors.
pub fn quotient_by_sparse(
    ambient: &BasedSpace,
    relations: impl IntoIterator<Item = SparseVec>,
) -> Result<QuotientSpace, LaError> {
    let field = ambient.field;
    let n = ambient.dim;
    let mut ech = SparseEchelon::new(field, n);
    for r in relations {
        ech.insert(&r)?;
    }
    let mut is_pivot = vec![false; n];
    for p in ech.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut position = vec![usize::MAX; n];
    for (t, &c) in free.iter().enumerate() {
        position[c] = t;
    }
    let qspace = BasedSpace {
        field,
        dim: free.len(),
        labels: ambient.labels.as_ref().map(|l| free.iter().map(|&c| l[c].clone()).collect()),
    };
    // e_p for a pivot column p reduces to -(row of p) on the free columns
    let mut proj = Matrix::zeros(field, free.len(), n);
    for (t, &c) in free.iter().enumerate() {
        proj.set(t, c, field.one());
    }
    for p in ech.pivots() {
        for (&c, x) in ech.row(p).expect("pivot row") {
            if c != p {
                proj.set(position[c], p, -x);
            }
        }
    }
    let sect = Matrix::from_columns(field, n, &free.iter().map(|&c| vector::unit(field, n, c)).collect::<Vec<_>>())?;
    Ok(QuotientSpace {
        ambient: ambient.clone(),
        projection: LinMap::new(ambient.clone(), qspace.clone(), proj)?,
        section: LinMap::new(qspace, ambient.clone(), sect)?,
    })
}
