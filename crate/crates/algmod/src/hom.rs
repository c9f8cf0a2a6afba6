use exactla::{bilinear_from_fn, filter_affine, vector, AffineSpace, LaError, Matrix, QuadraticSystem, Scalar};
use findim::{tensor_map, Condition, LinMap, Report};

use crate::StructureAlgebra;

/// Unital algebra map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraHom {
    pub source: StructureAlgebra,
    pub target: StructureAlgebra,
    pub map: LinMap,
}

impl AlgebraHom {
    pub fn new(source: StructureAlgebra, target: StructureAlgebra, map: LinMap) -> Result<AlgebraHom, LaError> {
        if map.domain.dim != source.dim() || map.codomain.dim != target.dim() {
            return Err(LaError::Dimension(format!(
                "hom matrix is {}x{} but the algebras have dimensions {} and {}",
                map.codomain.dim,
                map.domain.dim,
                source.dim(),
                target.dim()
            )));
        }
        let map = LinMap::new(source.space.clone(), target.space.clone(), map.matrix)?;
        Ok(AlgebraHom { source, target, map })
    }

    pub fn identity(a: &StructureAlgebra) -> AlgebraHom {
        AlgebraHom { source: a.clone(), target: a.clone(), map: a.identity() }
    }

    /// `i_A: k → A`.
    pub fn unit_of(a: &StructureAlgebra) -> AlgebraHom {
        let k = StructureAlgebra::ground(a.field());
        AlgebraHom { map: LinMap::new(k.space.clone(), a.space.clone(), a.unit_map().matrix).expect("dims"), source: k, target: a.clone() }
    }

    /// `a + ib ↦ [[a, -b], [b, a]]` from `k[i]/(i^2+1)` into `M_2(k)`.
    pub fn gaussian_to_matrix(field: exactla::Field) -> AlgebraHom {
        let src = StructureAlgebra::gaussian(field);
        let tgt = StructureAlgebra::matrix(field, 2);
        let (o, z) = (field.one(), field.zero());
        let images = vec![vec![o.clone(), z.clone(), z.clone(), o.clone()], vec![z.clone(), -o.clone(), o, z]];
        let map = LinMap::from_images(src.space.clone(), tgt.space.clone(), &images).expect("dims");
        AlgebraHom { source: src, target: tgt, map }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.map.apply(v).expect("vector has the source dimension")
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AlgebraHom) -> Result<AlgebraHom, LaError> {
        Ok(AlgebraHom { source: inner.source.clone(), target: self.target.clone(), map: self.map.compose(&inner.map)? })
    }
}

/// Unitality and multiplicativity on basis pairs.
pub fn check_hom(h: &AlgebraHom) -> Report {
    let n = h.source.dim();
    let mut report = Report::new();
    let mut unit = Condition::new("unit");
    unit.compare(vec![], &h.apply(&h.source.unit), &h.target.unit);
    report.push(unit);
    let lhs = h.map.compose(&h.source.mult).expect("dims");
    let rhs = h.target.mult.compose(&tensor_map(&h.map, &h.map).expect("field")).expect("dims");
    report.push(Condition::from_maps("mult", &lhs, &rhs, &[n, n]));
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSearch {
    pub homs: Vec<LinMap>,
    pub examined: u64,
}

/// Exhaustive search over every linear map `source → target` (there are
/// `p^(dim source · dim target)` of them) for unital algebra maps.
///
/// Unknowns are the matrix entries column by column: unknown `j*t + i` is
/// entry `(i, j)`.
pub fn find_algebra_homs(source: &StructureAlgebra, target: &StructureAlgebra, limit: u64) -> Result<HomSearch, LaError> {
    let field = source.field();
    if target.field() != field {
        return Err(LaError::FieldMismatch(field, target.field()));
    }
    let (s, t) = (source.dim(), target.dim());
    let nvars = s * t;
    let to_map = |x: &[Scalar]| -> LinMap {
        let cols: Vec<Vec<Scalar>> = (0..s).map(|j| x[j * t..(j + 1) * t].to_vec()).collect();
        LinMap::from_images(source.space.clone(), target.space.clone(), &cols).expect("dims")
    };
    let space = AffineSpace {
        field,
        particular: vector::zeros(field, nvars),
        kernel_basis: (0..nvars).map(|i| vector::unit(field, nvars, i)).collect(),
    };
    // unit: M u_s - u_t = 0, purely linear
    let unit_lin: Vec<Vec<Scalar>> = (0..nvars).map(|v| to_map(&vector::unit(field, nvars, v)).apply(&source.unit).expect("dims")).collect();
    let unit_lin = Matrix::from_columns(field, t, &unit_lin)?;
    let unit_sys = QuadraticSystem::new(&Matrix::zeros(field, t, nvars * nvars), &unit_lin, &vector::scale(&-field.one(), &target.unit))?;
    // mult: M(e_i e_j) - M(e_i) M(e_j) = 0 for all basis pairs (i, j)
    let w = s * s * t;
    let lin_cols: Vec<Vec<Scalar>> = (0..nvars)
        .map(|v| to_map(&vector::unit(field, nvars, v)).compose(&source.mult).expect("dims").matrix.transpose().entries().to_vec())
        .collect();
    let mult_lin = Matrix::from_columns(field, w, &lin_cols)?;
    let bil = bilinear_from_fn(field, nvars, w, |x, y| {
        let (mx, my) = (to_map(x), to_map(y));
        let mut out = Vec::with_capacity(w);
        for i in 0..s {
            for j in 0..s {
                let prod = target.mul(&mx.image(i), &my.image(j));
                out.extend(prod.into_iter().map(|c| -c));
            }
        }
        Ok(out)
    })?;
    let mult_sys = QuadraticSystem::new(&bil, &mult_lin, &vector::zeros(field, w))?;
    let system = QuadraticSystem::concat(&[unit_sys, mult_sys])?;
    let found = filter_affine(&space, &system, limit)?;
    Ok(HomSearch { homs: found.solutions.iter().map(|x| to_map(x)).collect(), examined: found.examined })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactla::Field;

    #[test]
    fn identity_and_gaussian_embedding_are_homs() {
        let m2 = StructureAlgebra::matrix(Field::Rational, 2);
        assert!(check_hom(&AlgebraHom::identity(&m2)).passed());
        assert!(check_hom(&AlgebraHom::gaussian_to_matrix(Field::Rational)).passed());
    }

    #[test]
    fn zero_map_fails_unit() {
        let m2 = StructureAlgebra::matrix(Field::Rational, 2);
        let h = AlgebraHom { source: m2.clone(), target: m2.clone(), map: LinMap::zero(&m2.space, &m2.space) };
        let r = check_hom(&h);
        assert!(!r.passed_tag("unit"));
    }

    #[test]
    fn homs_from_k_squared_to_k() {
        // the two projections
        let f = Field::Prime(2);
        let found = find_algebra_homs(&StructureAlgebra::product(f, 2), &StructureAlgebra::ground(f), 100).unwrap();
        assert_eq!(found.examined, 4);
        assert_eq!(found.homs.len(), 2);
    }
}
