use algmod::{alg_tensor, alg_tensor3, check_bimodule, AlgebraHom, Bimodule, LeftModule, RightModule, StructureAlgebra};
use exactla::{vector, LaError, Scalar};
use findim::{apply_tensor, tensor_all, tensor_space, BasedSpace, Condition, LinMap, QuotientSpace, Report};

use crate::StructureCoalgebra;

#[derive(Debug, thiserror::Error)]
pub enum CoringError {
    #[error(transparent)]
    La(#[from] LaError),
    #[error("coring axioms fail: {}", .0.join(", "))]
    AxiomFailure(Vec<String>),
}

/// An `A`-coring. `comult` lands in `C ⊗ C` and is compared after projecting
/// to `C ⊗_A C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coring {
    pub base: StructureAlgebra,
    pub bimodule: Bimodule,
    pub comult: LinMap,
    /// `C → A`
    pub counit: LinMap,
}

impl Coring {
    pub fn new(base: StructureAlgebra, bimodule: Bimodule, comult: LinMap, counit: LinMap) -> Result<Coring, LaError> {
        if !bimodule.left.same_as(&base) || !bimodule.right.same_as(&base) {
            return Err(LaError::Dimension("coring bimodule must be over the base algebra on both sides".into()));
        }
        let c = &bimodule.space;
        if comult.domain.dim != c.dim || comult.codomain.dim != c.dim * c.dim {
            return Err(LaError::Dimension(format!("comultiplication must be {}x{}", c.dim * c.dim, c.dim)));
        }
        if counit.domain.dim != c.dim || counit.codomain.dim != base.dim() {
            return Err(LaError::Dimension(format!("counit must be {}x{}", base.dim(), c.dim)));
        }
        let comult = LinMap::new(c.clone(), tensor_space(c, c)?, comult.matrix)?;
        let counit = LinMap::new(c.clone(), base.space.clone(), counit.matrix)?;
        Ok(Coring { base, bimodule, comult, counit })
    }

    /// `C = A`, `Δ(a) = a ⊗ 1`, `ε = 1`.
    pub fn trivial(a: &StructureAlgebra) -> Coring {
        let id = a.identity();
        let comult = tensor_all(&[&id, &a.unit_map()]).expect("field");
        Coring { base: a.clone(), bimodule: Bimodule::regular(a), comult, counit: id }
    }

    /// A coalgebra over `k` as a `k`-coring.
    pub fn from_coalgebra(c: &StructureCoalgebra) -> Coring {
        let k = StructureAlgebra::ground(c.field());
        let id = LinMap::identity(&c.space);
        let act = |dom: BasedSpace| LinMap::new(dom, c.space.clone(), id.matrix.clone()).expect("dims");
        let bimodule = Bimodule {
            left: k.clone(),
            right: k.clone(),
            space: c.space.clone(),
            left_action: act(tensor_space(&k.space, &c.space).expect("field")),
            right_action: act(tensor_space(&c.space, &k.space).expect("field")),
        };
        let counit = LinMap::new(c.space.clone(), k.space.clone(), c.counit.matrix.clone()).expect("dims");
        Coring { base: k, bimodule, comult: c.comult.clone(), counit }
    }

    pub fn space(&self) -> &BasedSpace {
        &self.bimodule.space
    }

    pub fn dim(&self) -> usize {
        self.bimodule.space.dim
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.base.field(), self.dim(), i)
    }

    /// `C ⊗_A C`.
    pub fn square(&self) -> Result<QuotientSpace, LaError> {
        alg_tensor(&self.bimodule.as_right(), &self.bimodule.as_left())
    }

    /// `C ⊗_A C ⊗_A C`.
    pub fn cube(&self) -> Result<QuotientSpace, LaError> {
        alg_tensor3(&self.bimodule.as_right(), &self.bimodule, &self.bimodule.as_left())
    }

    pub fn act_left(&self, a: &[Scalar], c: &[Scalar]) -> Vec<Scalar> {
        self.bimodule.left_action.apply(&vector::tensor(a, c)).expect("dims")
    }

    pub fn act_right(&self, c: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.bimodule.right_action.apply(&vector::tensor(c, a)).expect("dims")
    }

    /// `x ↦ a x`.
    pub fn left_by(&self, a: &[Scalar]) -> LinMap {
        let images: Vec<_> = (0..self.dim()).map(|i| self.act_left(a, &self.basis(i))).collect();
        LinMap::from_images(self.space().clone(), self.space().clone(), &images).expect("square")
    }

    /// `x ↦ x a`.
    pub fn right_by(&self, a: &[Scalar]) -> LinMap {
        let images: Vec<_> = (0..self.dim()).map(|i| self.act_right(&self.basis(i), a)).collect();
        LinMap::from_images(self.space().clone(), self.space().clone(), &images).expect("square")
    }
}

/// Bimodule axioms, `A`-bilinearity of `Δ` and `ε`, `coassoc` in
/// `C ⊗_A C ⊗_A C` and the counit laws.
pub fn check_coring(c: &Coring) -> Result<Report, LaError> {
    let mut report = check_bimodule(&c.bimodule);
    let sq = c.square()?;
    let cube = c.cube()?;
    let (da, dc) = (c.base.dim(), c.dim());
    let idc = LinMap::identity(c.space());
    let lam = &c.bimodule.left_action;
    let rho = &c.bimodule.right_action;
    let mut dl = Condition::new("comult-left-linear");
    let mut dr = Condition::new("comult-right-linear");
    let mut el = Condition::new("counit-left-linear");
    let mut er = Condition::new("counit-right-linear");
    for a in 0..da {
        let av = c.base.basis(a);
        for i in 0..dc {
            let ci = c.basis(i);
            let d = c.comult.apply(&ci)?;
            // a Δ(c) and Δ(c) a act on the outer factors
            let ad = apply_tensor(&c.left_by(&av), &idc, &d)?;
            let da = apply_tensor(&idc, &c.right_by(&av), &d)?;
            dl.compare(vec![a, i], &sq.project(&c.comult.apply(&c.act_left(&av, &ci))?)?, &sq.project(&ad)?);
            dr.compare(vec![i, a], &sq.project(&c.comult.apply(&c.act_right(&ci, &av))?)?, &sq.project(&da)?);
            let e = c.counit.apply(&ci)?;
            el.compare(vec![a, i], &c.counit.apply(&c.act_left(&av, &ci))?, &c.base.mul(&av, &e));
            er.compare(vec![i, a], &c.counit.apply(&c.act_right(&ci, &av))?, &c.base.mul(&e, &av));
        }
    }
    let mut coassoc = Condition::new("coassoc");
    let mut left = Condition::new("counit-left");
    let mut right = Condition::new("counit-right");
    let eps_l = lam.compose(&tensor_all(&[&c.counit, &idc])?)?;
    let eps_r = rho.compose(&tensor_all(&[&idc, &c.counit])?)?;
    for i in 0..dc {
        let d = c.comult.apply(&c.basis(i))?;
        let l = cube.project(&apply_tensor(&c.comult, &idc, &d)?)?;
        let r = cube.project(&apply_tensor(&idc, &c.comult, &d)?)?;
        coassoc.compare(vec![i], &l, &r);
        left.compare(vec![i], &eps_l.apply(&d)?, &c.basis(i));
        right.compare(vec![i], &eps_r.apply(&d)?, &c.basis(i));
    }
    for cond in [dl, dr, el, er, coassoc, left, right] {
        report.push(cond);
    }
    Ok(report)
}

/// `S ⊗_R S` for `φ: R → S`, with `Δ(s ⊗ t) = (s ⊗ 1) ⊗_S (1 ⊗ t)` and
/// `ε(s ⊗ t) = st`. Coordinates are those of `alg_tensor` on the regular
/// modules restricted along `φ`.
pub fn sweedler_coring(phi: &AlgebraHom) -> Result<Coring, CoringError> {
    let s = &phi.target;
    let q = alg_tensor(&RightModule::regular(s).restrict(phi)?, &LeftModule::regular(s).restrict(phi)?)?;
    let c = q.space().clone();
    let ids = s.identity();
    let left_action = q.projection.compose(&tensor_all(&[&s.mult, &ids])?)?.compose(&tensor_all(&[&ids, &q.section])?)?;
    let right_action = q.projection.compose(&tensor_all(&[&ids, &s.mult])?)?.compose(&tensor_all(&[&q.section, &ids])?)?;
    let u = s.unit_map();
    let spread = tensor_all(&[&ids, &u, &u, &ids])?;
    let comult = tensor_all(&[&q.projection, &q.projection])?.compose(&spread)?.compose(&q.section)?;
    let counit = s.mult.compose(&q.section)?;
    let bimodule = Bimodule {
        left: s.clone(),
        right: s.clone(),
        space: c.clone(),
        left_action: LinMap::new(tensor_space(&s.space, &c)?, c.clone(), left_action.matrix)?,
        right_action: LinMap::new(tensor_space(&c, &s.space)?, c.clone(), right_action.matrix)?,
    };
    let coring = Coring::new(s.clone(), bimodule, comult, counit)?;
    let report = check_coring(&coring)?;
    if !report.passed() {
        return Err(CoringError::AxiomFailure(report.failing_tags().iter().map(|t| t.to_string()).collect()));
    }
    Ok(coring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactla::Field;

    #[test]
    fn trivial_and_coalgebra_corings_pass() {
        let f = Field::Prime(2);
        for a in [StructureAlgebra::matrix(f, 2), StructureAlgebra::dual_numbers(f)] {
            assert!(check_coring(&Coring::trivial(&a)).unwrap().passed());
        }
        assert!(check_coring(&Coring::from_coalgebra(&StructureCoalgebra::comatrix(f, 2))).unwrap().passed());
    }

    #[test]
    fn sweedler_dimensions() {
        let k = StructureAlgebra::ground(Field::Rational);
        assert_eq!(sweedler_coring(&AlgebraHom::identity(&k)).unwrap().dim(), 1);
        let gauss = StructureAlgebra::gaussian(Field::Rational);
        assert_eq!(sweedler_coring(&AlgebraHom::unit_of(&gauss)).unwrap().dim(), 4);
        let k2 = StructureAlgebra::product(Field::Prime(2), 2);
        assert_eq!(sweedler_coring(&AlgebraHom::unit_of(&k2)).unwrap().dim(), 4);
    }

    #[test]
    fn broken_counit_is_reported() {
        let f = Field::Prime(3);
        let a = StructureAlgebra::product(f, 2);
        let mut c = Coring::trivial(&a);
        c.counit = c.counit.scale(&Scalar::from_i64(f, 2));
        let r = check_coring(&c).unwrap();
        assert!(!r.passed_tag("counit-left"));
        assert!(r.passed_tag("coassoc"));
    }
}
