use exactla::{vector, Field, LaError, Matrix, QuadraticSystem, Scalar};

/// Writes an affine condition `F(x) = 0` as `a x = b`, sampling `F` at zero
/// and at the unit vectors.
pub(crate) fn affine_system(field: Field, n: usize, f: impl Fn(&[Scalar]) -> Vec<Scalar>) -> (Matrix, Vec<Scalar>) {
    let c = f(&vector::zeros(field, n));
    let cols: Vec<Vec<Scalar>> = (0..n).map(|i| vector::sub(&f(&vector::unit(field, n, i)), &c)).collect();
    let a = Matrix::from_columns(field, c.len(), &cols).expect("columns share a length");
    let b = vector::scale(&-field.one(), &c);
    (a, b)
}

/// `B(x, x) = L x` where `bilinear(i, j) = B(e_i, e_j)` and `linear(e_i) = L e_i`.
pub(crate) fn quadratic_system(
    field: Field,
    n: usize,
    bilinear: impl Fn(usize, usize) -> Vec<Scalar>,
    linear: impl Fn(&[Scalar]) -> Vec<Scalar>,
) -> Result<QuadraticSystem, LaError> {
    let lin_cols: Vec<Vec<Scalar>> =
        (0..n).map(|i| vector::scale(&-field.one(), &linear(&vector::unit(field, n, i)))).collect();
    let w = lin_cols.first().map_or(0, |c| c.len());
    let mut quad_cols = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            quad_cols.push(bilinear(i, j));
        }
    }
    let b = Matrix::from_columns(field, w, &quad_cols)?;
    let l = Matrix::from_columns(field, w, &lin_cols)?;
    QuadraticSystem::new(&b, &l, &vector::zeros(field, w))
}
