use std::collections::BTreeMap;

use crate::{Field, LaError, Scalar};

/// Sparse vector: coordinate ↦ nonzero value.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// Row space kept in reduced row echelon form as relations arrive one at a
/// time. Rows are sparse, which keeps quotients of large tensor powers cheap
/// when the relations are.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    field: Field,
    dim: usize,
    /// pivot column ↦ row with a 1 there and zeros in every other pivot column
    rows: BTreeMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new(field: Field, dim: usize) -> SparseEchelon {
        SparseEchelon { field, dim, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec> {
        self.rows.get(&pivot)
    }

    /// Reduces `v` against the current rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (p, c) in v {
            if let Some(row) = self.rows.get(p) {
                sparse_axpy(&mut out, &-c.clone(), row);
            }
        }
        out
    }

    /// Adds `v` to the row space; returns whether the rank went up.
    pub fn insert(&mut self, v: &SparseVec) -> Result<bool, LaError> {
        if let Some((&k, s)) = v.iter().next_back() {
            if k >= self.dim {
                return Err(LaError::Dimension(format!("coordinate {k} in a space of dimension {}", self.dim)));
            }
            if s.field() != self.field {
                return Err(LaError::FieldMismatch(self.field, s.field()));
            }
        }
        let mut r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else {
            return Ok(false);
        };
        let inv = lead.inv()?;
        for x in r.values_mut() {
            *x = &*x * &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                sparse_axpy(row, &-c, &r);
            }
        }
        self.rows.insert(p, r);
        Ok(true)
    }

    pub fn insert_dense(&mut self, v: &[Scalar]) -> Result<bool, LaError> {
        self.insert(&sparse(v))
    }
}

pub fn sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// `acc += c * v`, dropping entries that cancel.
pub fn sparse_axpy(acc: &mut SparseVec, c: &Scalar, v: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (i, x) in v {
        let add = c * x;
        match acc.get_mut(i) {
            Some(y) => {
                *y = &*y + &add;
                if y.is_zero() {
                    acc.remove(i);
                }
            }
            None => {
                acc.insert(*i, add);
            }
        }
    }
}
