use exactla::{vector, Field, LaError, Scalar};
use findim::{tensor_all, tensor_space, BasedSpace, Condition, LinMap, Report};

/// Unital associative algebra `(A, ∇, 1)` given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    pub space: BasedSpace,
    /// `A ⊗ A → A`
    pub mult: LinMap,
    pub unit: Vec<Scalar>,
}

impl StructureAlgebra {
    pub fn new(space: BasedSpace, mult: LinMap, unit: Vec<Scalar>) -> Result<StructureAlgebra, LaError> {
        let n = space.dim;
        if mult.domain.dim != n * n || mult.codomain.dim != n {
            return Err(LaError::Dimension(format!(
                "multiplication must be {n}x{} for an algebra of dimension {n}",
                n * n
            )));
        }
        if unit.len() != n {
            return Err(LaError::Dimension(format!("unit has length {} but the algebra has dimension {n}", unit.len())));
        }
        if mult.field() != space.field {
            return Err(LaError::FieldMismatch(space.field, mult.field()));
        }
        let mult = LinMap::new(tensor_space(&space, &space)?, space.clone(), mult.matrix)?;
        Ok(StructureAlgebra { space, mult, unit })
    }

    /// Builds the algebra from the products of basis elements.
    pub fn from_table(
        space: BasedSpace,
        unit: Vec<Scalar>,
        product: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Result<StructureAlgebra, LaError> {
        let n = space.dim;
        let images: Vec<Vec<Scalar>> = (0..n * n).map(|k| product(k / n, k % n)).collect();
        let mult = LinMap::from_images(tensor_space(&space, &space)?, space.clone(), &images)?;
        StructureAlgebra::new(space, mult, unit)
    }

    /// The ground field `k`.
    pub fn ground(field: Field) -> StructureAlgebra {
        let space = BasedSpace::with_labels(field, vec!["1".into()]).expect("one label");
        StructureAlgebra::from_table(space, vec![field.one()], |_, _| vec![field.one()]).expect("valid table")
    }

    /// `M_n(k)` with basis `E_ij` at index `i*n + j` and `E_ij E_kl = δ_jk E_il`.
    pub fn matrix(field: Field, n: usize) -> StructureAlgebra {
        let labels = (0..n * n).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
        let space = BasedSpace::with_labels(field, labels).expect("distinct labels");
        let mut unit = vector::zeros(field, n * n);
        for i in 0..n {
            unit[i * n + i] = field.one();
        }
        StructureAlgebra::from_table(space, unit, |a, b| {
            let (i, j, k, l) = (a / n, a % n, b / n, b % n);
            if j == k {
                vector::unit(field, n * n, i * n + l)
            } else {
                vector::zeros(field, n * n)
            }
        })
        .expect("valid table")
    }

    /// `k^n` with orthogonal idempotents `e_1, ..., e_n`.
    pub fn product(field: Field, n: usize) -> StructureAlgebra {
        let labels = (0..n).map(|i| format!("e{}", i + 1)).collect();
        let space = BasedSpace::with_labels(field, labels).expect("distinct labels");
        StructureAlgebra::from_table(space, vec![field.one(); n], |a, b| {
            if a == b {
                vector::unit(field, n, a)
            } else {
                vector::zeros(field, n)
            }
        })
        .expect("valid table")
    }

    /// `k[i]/(i^2 + 1)` with basis `1, i`. Over `Q` this is `Q(i)`; over
    /// `GF(p)` with `p ≡ 3 mod 4` it is `GF(p^2)`.
    pub fn gaussian(field: Field) -> StructureAlgebra {
        let space = BasedSpace::with_labels(field, vec!["1".into(), "i".into()]).expect("distinct labels");
        StructureAlgebra::from_table(space, vector::unit(field, 2, 0), |a, b| match (a, b) {
            (0, x) | (x, 0) => vector::unit(field, 2, x),
            _ => vec![-field.one(), field.zero()],
        })
        .expect("valid table")
    }

    /// `k[x]/(x^2)` with basis `1, x`.
    pub fn dual_numbers(field: Field) -> StructureAlgebra {
        let space = BasedSpace::with_labels(field, vec!["1".into(), "x".into()]).expect("distinct labels");
        StructureAlgebra::from_table(space, vector::unit(field, 2, 0), |a, b| match (a, b) {
            (0, x) | (x, 0) => vector::unit(field, 2, x),
            _ => vector::zeros(field, 2),
        })
        .expect("valid table")
    }

    /// Upper triangular 2x2 matrices with basis `E11, E12, E22`.
    pub fn upper_triangular(field: Field) -> StructureAlgebra {
        let space = BasedSpace::with_labels(field, vec!["E11".into(), "E12".into(), "E22".into()]).expect("labels");
        // (row, col) of each basis element
        let rc = [(0, 0), (0, 1), (1, 1)];
        StructureAlgebra::from_table(space, vec![field.one(), field.zero(), field.one()], |a, b| {
            let ((i, j), (k, l)) = (rc[a], rc[b]);
            if j != k {
                return vector::zeros(field, 3);
            }
            let idx = rc.iter().position(|&p| p == (i, l)).expect("upper triangular");
            vector::unit(field, 3, idx)
        })
        .expect("valid table")
    }

    pub fn field(&self) -> Field {
        self.space.field
    }

    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.unit.clone()
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.field(), self.dim(), i)
    }

    /// `i_A: k → A`.
    pub fn unit_map(&self) -> LinMap {
        LinMap::from_vector(&self.space, &self.unit).expect("unit has the algebra's dimension")
    }

    pub fn identity(&self) -> LinMap {
        LinMap::identity(&self.space)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.mult.apply(&vector::tensor(a, b)).expect("operands have the algebra's dimension")
    }

    /// `x ↦ a x`.
    pub fn left_mult(&self, a: &[Scalar]) -> LinMap {
        let images: Vec<_> = (0..self.dim()).map(|j| self.mul(a, &self.basis(j))).collect();
        LinMap::from_images(self.space.clone(), self.space.clone(), &images).expect("square")
    }

    /// `x ↦ x a`.
    pub fn right_mult(&self, a: &[Scalar]) -> LinMap {
        let images: Vec<_> = (0..self.dim()).map(|j| self.mul(&self.basis(j), a)).collect();
        LinMap::from_images(self.space.clone(), self.space.clone(), &images).expect("square")
    }

    /// Same structure constants and unit (labels ignored).
    pub fn same_as(&self, other: &StructureAlgebra) -> bool {
        self.mult.matrix == other.mult.matrix && self.unit == other.unit
    }
}

/// Associativity on basis triples and both unit laws.
pub fn check_algebra(a: &StructureAlgebra) -> Report {
    let n = a.dim();
    let id = a.identity();
    let mut report = Report::new();
    let assoc = (|| -> Result<Condition, LaError> {
        let lhs = a.mult.compose(&tensor_all(&[&a.mult, &id])?)?;
        let rhs = a.mult.compose(&tensor_all(&[&id, &a.mult])?)?;
        Ok(Condition::from_maps("assoc", &lhs, &rhs, &[n, n, n]))
    })()
    .expect("dimensions fixed by construction");
    report.push(assoc);
    let u = a.unit_map();
    let left = a.mult.compose(&tensor_all(&[&u, &id]).expect("same field")).expect("dims");
    let right = a.mult.compose(&tensor_all(&[&id, &u]).expect("same field")).expect("dims");
    report.push(Condition::from_maps("unit-left", &left, &id, &[n]));
    report.push(Condition::from_maps("unit-right", &right, &id, &[n]));
    report
}
