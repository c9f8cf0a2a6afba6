use exactla::{vector, Field, LaError, Matrix, Scalar};

use crate::space::{tensor_space, BasedSpace};

/// A linear map; column `j` of `matrix` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    pub domain: BasedSpace,
    pub codomain: BasedSpace,
    pub matrix: Matrix,
}

impl LinMap {
    pub fn new(domain: BasedSpace, codomain: BasedSpace, matrix: Matrix) -> Result<LinMap, LaError> {
        if matrix.rows() != codomain.dim || matrix.cols() != domain.dim {
            return Err(LaError::Dimension(format!(
                "matrix is {}x{} but the map goes from dimension {} to {}",
                matrix.rows(),
                matrix.cols(),
                domain.dim,
                codomain.dim
            )));
        }
        for f in [domain.field, codomain.field] {
            if f != matrix.field() {
                return Err(LaError::FieldMismatch(matrix.field(), f));
            }
        }
        Ok(LinMap { domain, codomain, matrix })
    }

    /// Map between unlabeled spaces of the given dimensions.
    pub fn from_matrix(matrix: Matrix) -> LinMap {
        let f = matrix.field();
        LinMap {
            domain: BasedSpace::new(f, matrix.cols()),
            codomain: BasedSpace::new(f, matrix.rows()),
            matrix,
        }
    }

    /// Map whose value on basis vector `j` is `images[j]`.
    pub fn from_images(domain: BasedSpace, codomain: BasedSpace, images: &[Vec<Scalar>]) -> Result<LinMap, LaError> {
        if images.len() != domain.dim {
            return Err(LaError::Dimension(format!("{} images for a domain of dimension {}", images.len(), domain.dim)));
        }
        let m = Matrix::from_columns(domain.field, codomain.dim, images)?;
        LinMap::new(domain, codomain, m)
    }

    pub fn identity(space: &BasedSpace) -> LinMap {
        LinMap {
            domain: space.clone(),
            codomain: space.clone(),
            matrix: Matrix::identity(space.field, space.dim),
        }
    }

    pub fn zero(domain: &BasedSpace, codomain: &BasedSpace) -> LinMap {
        LinMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: Matrix::zeros(domain.field, codomain.dim, domain.dim),
        }
    }

    /// `k -> V`, `1 ↦ v`.
    pub fn from_vector(codomain: &BasedSpace, v: &[Scalar]) -> Result<LinMap, LaError> {
        LinMap::from_images(BasedSpace::ground(codomain.field), codomain.clone(), &[v.to_vec()])
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LaError> {
        self.matrix.mul_vec(v)
    }

    /// Image of the `j`-th basis vector.
    pub fn image(&self, j: usize) -> Vec<Scalar> {
        self.matrix.column(j)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinMap) -> Result<LinMap, LaError> {
        if inner.codomain.dim != self.domain.dim {
            return Err(LaError::Dimension(format!(
                "cannot compose: inner map lands in dimension {}, outer starts from {}",
                inner.codomain.dim, self.domain.dim
            )));
        }
        Ok(LinMap {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.mul(&inner.matrix)?,
        })
    }

    fn check_parallel(&self, other: &LinMap) -> Result<(), LaError> {
        if self.domain.dim != other.domain.dim || self.codomain.dim != other.codomain.dim {
            return Err(LaError::Dimension("maps are not parallel".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap, LaError> {
        self.check_parallel(other)?;
        Ok(LinMap { matrix: self.matrix.add(&other.matrix)?, ..self.clone() })
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap, LaError> {
        self.check_parallel(other)?;
        Ok(LinMap { matrix: self.matrix.sub(&other.matrix)?, ..self.clone() })
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        LinMap { matrix: self.matrix.scale(c), ..self.clone() }
    }

    /// Basis of the kernel.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        self.matrix.kernel()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// `f ⊗ g` with `(f⊗g)(e_i⊗e_j) = f(e_i) ⊗ g(e_j)`.
pub fn tensor_map(f: &LinMap, g: &LinMap) -> Result<LinMap, LaError> {
    Ok(LinMap {
        domain: tensor_space(&f.domain, &g.domain)?,
        codomain: tensor_space(&f.codomain, &g.codomain)?,
        matrix: f.matrix.kron(&g.matrix)?,
    })
}

/// `f1 ⊗ f2 ⊗ ... ⊗ fn`.
pub fn tensor_all(maps: &[&LinMap]) -> Result<LinMap, LaError> {
    let (first, rest) = maps.split_first().ok_or_else(|| LaError::Dimension("empty tensor".into()))?;
    rest.iter().try_fold((*first).clone(), |acc, g| tensor_map(&acc, g))
}

/// `f1 ∘ f2 ∘ ... ∘ fn`, applied right to left.
pub fn compose_all(maps: &[&LinMap]) -> Result<LinMap, LaError> {
    let (last, rest) = maps.split_last().ok_or_else(|| LaError::Dimension("empty composite".into()))?;
    rest.iter().rev().try_fold((*last).clone(), |acc, f| f.compose(&acc))
}

/// `(f ⊗ g)(v)` without forming the Kronecker product.
pub fn apply_tensor(f: &LinMap, g: &LinMap, v: &[Scalar]) -> Result<Vec<Scalar>, LaError> {
    let (n, m) = (f.domain.dim, g.domain.dim);
    if v.len() != n * m {
        return Err(LaError::Dimension(format!("vector of length {} for a domain of dimension {}", v.len(), n * m)));
    }
    let field = f.field();
    let (fc, gc) = (f.codomain.dim, g.codomain.dim);
    let mut out = vector::zeros(field, fc * gc);
    for i in 0..n {
        let row = &v[i * m..(i + 1) * m];
        if vector::is_zero(row) {
            continue;
        }
        let gi = g.apply(row)?;
        for a in 0..fc {
            let c = f.matrix.get(a, i);
            if !c.is_zero() {
                vector::axpy(&mut out[a * gc..(a + 1) * gc], c, &gi);
            }
        }
    }
    Ok(out)
}

/// The flip `m ⊗ n ↦ n ⊗ m`.
pub fn tensor_swap(m: &BasedSpace, n: &BasedSpace) -> Result<LinMap, LaError> {
    let dom = tensor_space(m, n)?;
    let cod = tensor_space(n, m)?;
    let mut mat = Matrix::zeros(m.field, cod.dim, dom.dim);
    for i in 0..m.dim {
        for j in 0..n.dim {
            mat.set(j * m.dim + i, i * n.dim + j, m.field.one());
        }
    }
    LinMap::new(dom, cod, mat)
}
