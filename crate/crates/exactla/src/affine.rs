use crate::matrix::kernel_from_rref;
use crate::{vector, Field, LaError, Matrix, Scalar};

/// `particular + span(kernel_basis)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpace {
    pub field: Field,
    pub particular: Vec<Scalar>,
    pub kernel_basis: Vec<Vec<Scalar>>,
}

impl AffineSpace {
    pub fn ambient_dim(&self) -> usize {
        self.particular.len()
    }

    pub fn dim(&self) -> usize {
        self.kernel_basis.len()
    }

    /// `particular + sum coeffs[i] * kernel_basis[i]`.
    pub fn point(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coeffs.len(), self.kernel_basis.len(), "coefficient count");
        let mut v = self.particular.clone();
        for (c, k) in coeffs.iter().zip(&self.kernel_basis) {
            vector::axpy(&mut v, c, k);
        }
        v
    }

    /// Number of points, `base^exponent`, if it fits the limit.
    pub fn check_size(&self, limit: u64) -> Result<u64, LaError> {
        let p = self.field.order().ok_or(LaError::InfiniteField)?;
        let exceeded = LaError::LimitExceeded { base: p, exponent: self.dim(), limit };
        let mut n: u64 = 1;
        for _ in 0..self.dim() {
            n = n.checked_mul(p).ok_or_else(|| exceeded.clone())?;
            if n > limit {
                return Err(exceeded);
            }
        }
        if n > limit {
            return Err(exceeded);
        }
        Ok(n)
    }
}

/// Solves `a x = b`.
pub fn solve_affine(a: &Matrix, b: &[Scalar]) -> Result<AffineSpace, LaError> {
    if a.rows() != b.len() {
        return Err(LaError::Dimension(format!("{} rows but right-hand side of length {}", a.rows(), b.len())));
    }
    let field = a.field();
    let rhs = Matrix::from_columns(field, a.rows(), &[b.to_vec()])?;
    let aug = a.hstack(&rhs)?;
    let (r, pivots) = aug.rref();
    let n = a.cols();
    if pivots.last() == Some(&n) {
        return Err(LaError::NoSolution);
    }
    let mut particular = vector::zeros(field, n);
    for (row, &p) in pivots.iter().enumerate() {
        particular[p] = r.get(row, n).clone();
    }
    // drop the augmented column before reading off the kernel
    let mut coeff = Matrix::zeros(field, r.rows(), n);
    for i in 0..r.rows() {
        for j in 0..n {
            coeff.set(i, j, r.get(i, j).clone());
        }
    }
    Ok(AffineSpace { field, particular, kernel_basis: kernel_from_rref(&coeff, &pivots) })
}

/// Streams the points of `s` in lexicographic order of kernel coefficients
/// (first coefficient most significant).
pub fn enumerate_affine(s: &AffineSpace, limit: u64) -> Result<AffineIter, LaError> {
    let total = s.check_size(limit)?;
    let elements = s.field.elements()?;
    Ok(AffineIter {
        space: s.clone(),
        elements,
        digits: vec![0; s.dim()],
        remaining: total,
    })
}

pub struct AffineIter {
    space: AffineSpace,
    elements: Vec<Scalar>,
    digits: Vec<usize>,
    remaining: u64,
}

impl Iterator for AffineIter {
    type Item = Vec<Scalar>;

    fn next(&mut self) -> Option<Vec<Scalar>> {
        if self.remaining == 0 {
            return None;
        }
        let coeffs: Vec<Scalar> = self.digits.iter().map(|&d| self.elements[d].clone()).collect();
        let point = self.space.point(&coeffs);
        self.remaining -= 1;
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.elements.len() {
                break;
            }
            *d = 0;
        }
        Some(point)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}
