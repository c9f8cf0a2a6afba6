use std::fmt;

use crate::{vector, Field, LaError, Scalar};

/// Dense row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Matrix, LaError> {
        if entries.len() != rows * cols {
            return Err(LaError::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.field() != field) {
            return Err(LaError::FieldMismatch(field, bad.field()));
        }
        Ok(Matrix { rows, cols, field, entries })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, field, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Scalar>]) -> Result<Matrix, LaError> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LaError::Dimension(format!("row of length {} where {cols} expected", r.len())));
            }
            entries.extend(r.iter().cloned());
        }
        Matrix::new(field, rows.len(), cols, entries)
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Result<Matrix, LaError> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(LaError::Dimension(format!("column of length {} where {rows} expected", c.len())));
            }
            for (i, x) in c.iter().enumerate() {
                if x.field() != field {
                    return Err(LaError::FieldMismatch(field, x.field()));
                }
                m.entries[i * m.cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "scalar field mismatch");
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.entries)
    }

    fn check_field(&self, other: &Matrix) -> Result<(), LaError> {
        if self.field != other.field {
            return Err(LaError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LaError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(LaError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        // Structure-constant matrices are mostly zeros, so skip them.
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LaError> {
        if v.len() != self.cols {
            return Err(LaError::Dimension(format!(
                "cannot apply {}x{} matrix to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        if let Some(bad) = v.iter().find(|x| x.field() != self.field) {
            return Err(LaError::FieldMismatch(self.field, bad.field()));
        }
        let mut out = vector::zeros(self.field, self.rows);
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, k);
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix, LaError> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LaError::Dimension(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, field: self.field, entries })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LaError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LaError> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let entries = self.entries.iter().map(|x| c * x).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, entries }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Kronecker product; row `i*p + k`, column `j*q + l` holds `a[i][j] * b[k][l]`.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix, LaError> {
        self.check_field(other)?;
        let (p, q) = (other.rows, other.cols);
        let mut out = Matrix::zeros(self.field, self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.entries[(i * p + k) * out.cols + j * q + l] = a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, LaError> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(LaError::Dimension(format!("hstack of {} and {} rows", self.rows, other.rows)));
        }
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            entries.extend_from_slice(self.row(i));
            entries.extend_from_slice(other.row(i));
        }
        Ok(Matrix { rows: self.rows, cols, field: self.field, entries })
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LaError> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(LaError::Dimension(format!("vstack of {} and {} columns", self.cols, other.cols)));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, field: self.field, entries })
    }

    /// Reduced row echelon form and the pivot columns (strictly increasing).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let idx = r * m.cols + j;
                m.entries[idx] = &m.entries[idx] * &inv;
            }
            // clear the column everywhere else
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pv = m.entries[r * m.cols + j].clone();
                    if pv.is_zero() {
                        continue;
                    }
                    let idx = i * m.cols + j;
                    m.entries[idx] = &m.entries[idx] - &(&f * &pv);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, one vector per free column of the RREF.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }
}

pub(crate) fn kernel_from_rref(r: &Matrix, pivots: &[usize]) -> Vec<Vec<Scalar>> {
    let n = r.cols;
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vector::unit(r.field, n, f);
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, f);
        }
        basis.push(v);
    }
    basis
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rs: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_i64(Field::Rational, x)).collect())
            .collect();
        Matrix::from_rows(Field::Rational, cols, &rs).unwrap()
    }

    #[test]
    fn rref_identity() {
        let (r, p) = Matrix::identity(Field::Rational, 2).rref();
        assert_eq!(r, Matrix::identity(Field::Rational, 2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = q(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r, q(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_zero() {
        let z = Matrix::zeros(Field::Rational, 3, 2);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn kron_of_scalars() {
        assert_eq!(q(&[&[2]]).kron(&q(&[&[3]])).unwrap(), q(&[&[6]]));
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(vector::is_zero(&m.mul_vec(&k[0]).unwrap()));
    }

    #[test]
    fn construction_checks_shape_and_field() {
        assert!(Matrix::new(Field::Rational, 2, 2, vec![Field::Rational.one(); 3]).is_err());
        assert!(Matrix::new(Field::Rational, 1, 1, vec![Field::Prime(2).one()]).is_err());
        assert!(q(&[&[1]]).mul(&Matrix::identity(Field::Prime(5), 1)).is_err());
    }
}
