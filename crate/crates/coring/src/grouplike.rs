use exactla::{filter_affine, solve_affine, vector, AffineSpace, LaError, Matrix, QuadraticSystem, Scalar};
use findim::{Condition, Report};

use crate::Coring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrouplikeElement {
    pub coring: Coring,
    pub vector: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub struct GrouplikeSearch {
    /// Invariant elements with `ε(x) = 1`, or `None` if there are none.
    pub linear: Option<AffineSpace>,
    pub solutions: Vec<Vec<Scalar>>,
    pub examined: u64,
}

/// Tags `invariant` (`a x = x a`, witness `at = [a]`), `counit`
/// (`ε(x) = 1`) and `grouplike` (`Δ(x) = x ⊗ x` in `C ⊗_A C`).
pub fn verify_grouplike(g: &GrouplikeElement) -> Result<Report, LaError> {
    let c = &g.coring;
    let x = &g.vector;
    if x.len() != c.dim() {
        return Err(LaError::Dimension(format!("element has {} coordinates, coring has dimension {}", x.len(), c.dim())));
    }
    let mut report = Report::new();
    let mut inv = Condition::new("invariant");
    for a in 0..c.base.dim() {
        let av = c.base.basis(a);
        inv.compare(vec![a], &c.act_left(&av, x), &c.act_right(x, &av));
    }
    report.push(inv);
    let mut counit = Condition::new("counit");
    counit.compare(vec![], &c.counit.apply(x)?, &c.base.unit);
    report.push(counit);
    let sq = c.square()?;
    let mut gl = Condition::new("grouplike");
    gl.compare(vec![], &sq.project(&c.comult.apply(x)?)?, &sq.project(&vector::tensor(x, x))?);
    report.push(gl);
    Ok(report)
}

/// Solves invariance and `ε(x) = 1` exactly, then filters the affine
/// solution space by `Δ(x) = x ⊗ x`. Order is lexicographic in the kernel
/// coefficients.
pub fn find_invariant_grouplikes(c: &Coring, limit: u64) -> Result<GrouplikeSearch, LaError> {
    let f = c.base.field();
    let n = c.dim();
    let mut a = Matrix::zeros(f, 0, n);
    let mut b = Vec::new();
    for i in 0..c.base.dim() {
        let av = c.base.basis(i);
        a = a.vstack(&c.left_by(&av).sub(&c.right_by(&av))?.matrix)?;
        b.extend(vector::zeros(f, n));
    }
    a = a.vstack(&c.counit.matrix)?;
    b.extend(c.base.unit.iter().cloned());
    let space = match solve_affine(&a, &b) {
        Ok(s) => s,
        Err(LaError::NoSolution) => return Ok(GrouplikeSearch { linear: None, solutions: vec![], examined: 0 }),
        Err(e) => return Err(e),
    };
    space.check_size(limit)?;
    let sq = c.square()?;
    let lin = sq.projection.compose(&c.comult)?.matrix.scale(&-f.one());
    let system = QuadraticSystem::new(&sq.projection.matrix, &lin, &vector::zeros(f, sq.dim()))?;
    let found = filter_affine(&space, &system, limit)?;
    Ok(GrouplikeSearch { linear: Some(space), solutions: found.solutions, examined: found.examined })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{sweedler_coring, StructureCoalgebra};
    use algmod::{AlgebraHom, StructureAlgebra};
    use exactla::Field;

    #[test]
    fn trivial_coring_has_only_one() {
        let f = Field::Prime(2);
        for a in [StructureAlgebra::product(f, 2), StructureAlgebra::matrix(f, 2), StructureAlgebra::dual_numbers(f)] {
            let found = find_invariant_grouplikes(&Coring::trivial(&a), 1 << 16).unwrap();
            assert_eq!(found.solutions, vec![a.unit.clone()]);
        }
    }

    #[test]
    fn zero_is_not_grouplike() {
        let a = StructureAlgebra::matrix(Field::Rational, 2);
        let g = GrouplikeElement { coring: Coring::trivial(&a), vector: vector::zeros(Field::Rational, 4) };
        let r = verify_grouplike(&g).unwrap();
        assert!(!r.passed_tag("counit"));
        let one = GrouplikeElement { vector: a.unit.clone(), ..g };
        assert!(verify_grouplike(&one).unwrap().passed());
    }

    #[test]
    fn comatrix_grouplikes_match_brute_force() {
        let f = Field::Prime(2);
        let c = Coring::from_coalgebra(&StructureCoalgebra::comatrix(f, 2));
        let found = find_invariant_grouplikes(&c, 1 << 16).unwrap();
        let mut brute = Vec::new();
        for m in 0..16u32 {
            let x: Vec<Scalar> = (0..4).map(|i| Scalar::from_i64(f, ((m >> (3 - i)) & 1) as i64)).collect();
            // over k the conditions live in C ⊗ C itself
            let cc = StructureCoalgebra::comatrix(f, 2);
            if cc.delta(&x) == vector::tensor(&x, &x) && cc.epsilon(&x) == f.one() {
                brute.push(x);
            }
        }
        assert_eq!(found.solutions, brute);
        // grouplikes of the comatrix coalgebra are algebra maps M_2(k) → k
        assert!(brute.is_empty());
    }

    #[test]
    fn sweedler_of_identity_contains_one_tensor_one() {
        let s = StructureAlgebra::upper_triangular(Field::Prime(2));
        let c = sweedler_coring(&AlgebraHom::identity(&s)).unwrap();
        let found = find_invariant_grouplikes(&c, 1 << 16).unwrap();
        assert_eq!(found.solutions.len(), 1);
        assert!(verify_grouplike(&GrouplikeElement { coring: c, vector: found.solutions[0].clone() }).unwrap().passed());
    }
}
