use crate::{vector, AffineSpace, Field, LaError, Matrix, Scalar};

/// A system of equations `B(x ⊗ x) + L x + c = 0`, one per row, stored
/// sparsely so that candidates can be rejected at the first failing row.
#[derive(Clone, Debug)]
pub struct QuadraticSystem {
    field: Field,
    nvars: usize,
    rows: Vec<Row>,
}

#[derive(Clone, Debug)]
struct Row {
    quad: Vec<(usize, usize, Scalar)>,
    lin: Vec<(usize, Scalar)>,
    constant: Scalar,
}

impl QuadraticSystem {
    /// `bilinear` is `W x n^2` (column `i*n + j` holds `B(e_i, e_j)`),
    /// `linear` is `W x n`, `constant` has length `W`.
    pub fn new(bilinear: &Matrix, linear: &Matrix, constant: &[Scalar]) -> Result<QuadraticSystem, LaError> {
        let field = linear.field();
        let n = linear.cols();
        let w = linear.rows();
        if bilinear.field() != field {
            return Err(LaError::FieldMismatch(field, bilinear.field()));
        }
        if bilinear.rows() != w || bilinear.cols() != n * n || constant.len() != w {
            return Err(LaError::Dimension(format!(
                "quadratic system: bilinear {}x{}, linear {}x{}, constant {}",
                bilinear.rows(),
                bilinear.cols(),
                w,
                n,
                constant.len()
            )));
        }
        let mut rows = Vec::with_capacity(w);
        for r in 0..w {
            let mut quad: Vec<(usize, usize, Scalar)> = Vec::new();
            for i in 0..n {
                for j in i..n {
                    let mut c = bilinear.get(r, i * n + j).clone();
                    if i != j {
                        c = &c + bilinear.get(r, j * n + i);
                    }
                    if !c.is_zero() {
                        quad.push((i, j, c));
                    }
                }
            }
            let lin = (0..n)
                .filter(|&i| !linear.get(r, i).is_zero())
                .map(|i| (i, linear.get(r, i).clone()))
                .collect();
            rows.push(Row { quad, lin, constant: constant[r].clone() });
        }
        Ok(QuadraticSystem { field, nvars: n, rows })
    }

    /// Stacks the equations of several systems in the same unknowns.
    pub fn concat(parts: &[QuadraticSystem]) -> Result<QuadraticSystem, LaError> {
        let first = parts.first().ok_or_else(|| LaError::Dimension("empty system list".into()))?;
        let mut rows = Vec::new();
        for p in parts {
            if p.nvars != first.nvars || p.field != first.field {
                return Err(LaError::Dimension("systems in different unknowns".into()));
            }
            rows.extend(p.rows.iter().cloned());
        }
        Ok(QuadraticSystem { field: first.field, nvars: first.nvars, rows })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn equations(&self) -> usize {
        self.rows.len()
    }

    pub fn residual(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.nvars, "unknown count");
        self.rows.iter().map(|r| eval_row(r, x)).collect()
    }

    pub fn first_violation(&self, x: &[Scalar]) -> Option<usize> {
        assert_eq!(x.len(), self.nvars, "unknown count");
        self.rows.iter().position(|r| !eval_row(r, x).is_zero())
    }

    pub fn holds(&self, x: &[Scalar]) -> bool {
        self.first_violation(x).is_none()
    }
}

fn eval_row(r: &Row, x: &[Scalar]) -> Scalar {
    let mut acc = r.constant.clone();
    for (i, c) in &r.lin {
        if !x[*i].is_zero() {
            acc = &acc + &(c * &x[*i]);
        }
    }
    for (i, j, c) in &r.quad {
        if !x[*i].is_zero() && !x[*j].is_zero() {
            acc = &acc + &(&(c * &x[*i]) * &x[*j]);
        }
    }
    acc
}

/// Points of an affine space that satisfy a quadratic system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub solutions: Vec<Vec<Scalar>>,
    pub examined: u64,
}

/// Enumerates `space` in lexicographic coefficient order and keeps the points
/// satisfying `system`. Only finite fields are supported.
pub fn filter_affine(space: &AffineSpace, system: &QuadraticSystem, limit: u64) -> Result<SearchOutcome, LaError> {
    let total = space.check_size(limit)?;
    let Field::Prime(p) = space.field else {
        return Err(LaError::InfiniteField);
    };
    if system.field != space.field {
        return Err(LaError::FieldMismatch(space.field, system.field));
    }
    if system.nvars != space.ambient_dim() {
        return Err(LaError::Dimension(format!(
            "system in {} unknowns, space of dimension {}",
            system.nvars,
            space.ambient_dim()
        )));
    }
    let p = p as u64;
    let res = |s: &Scalar| s.residue().expect("prime field") as u64;
    let rows: Vec<FastRow> = system
        .rows
        .iter()
        .map(|r| FastRow {
            quad: r.quad.iter().map(|(i, j, c)| (*i, *j, res(c))).collect(),
            lin: r.lin.iter().map(|(i, c)| (*i, res(c))).collect(),
            constant: res(&r.constant),
        })
        .collect();
    let kernel: Vec<Vec<u64>> = space.kernel_basis.iter().map(|k| k.iter().map(res).collect()).collect();
    let mut x: Vec<u64> = space.particular.iter().map(res).collect();
    let mut digits = vec![0u64; kernel.len()];
    let mut solutions = Vec::new();
    for _ in 0..total {
        if rows.iter().all(|r| r.eval(&x, p) == 0) {
            solutions.push(x.iter().map(|&v| Scalar::from_i64(space.field, v as i64)).collect());
        }
        for d in (0..digits.len()).rev() {
            for (xi, ki) in x.iter_mut().zip(&kernel[d]) {
                *xi = (*xi + ki) % p;
            }
            digits[d] += 1;
            if digits[d] < p {
                break;
            }
            digits[d] = 0;
        }
    }
    Ok(SearchOutcome { solutions, examined: total })
}

struct FastRow {
    quad: Vec<(usize, usize, u64)>,
    lin: Vec<(usize, u64)>,
    constant: u64,
}

impl FastRow {
    fn eval(&self, x: &[u64], p: u64) -> u64 {
        let mut acc = self.constant;
        for &(i, c) in &self.lin {
            acc = (acc + c * x[i]) % p;
        }
        for &(i, j, c) in &self.quad {
            acc = (acc + c * x[i] % p * x[j]) % p;
        }
        acc
    }
}

/// Bilinear matrix (`W x n^2`) of `(x, y) ↦ f(x, y)` sampled on basis pairs.
pub fn bilinear_from_fn(
    field: Field,
    n: usize,
    w: usize,
    mut f: impl FnMut(&[Scalar], &[Scalar]) -> Result<Vec<Scalar>, LaError>,
) -> Result<Matrix, LaError> {
    let mut cols = Vec::with_capacity(n * n);
    for i in 0..n {
        let ei = vector::unit(field, n, i);
        for j in 0..n {
            cols.push(f(&ei, &vector::unit(field, n, j))?);
        }
    }
    Matrix::from_columns(field, w, &cols)
}
