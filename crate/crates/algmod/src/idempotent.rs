use exactla::{filter_affine, solve_affine, vector, AffineSpace, LaError, Matrix, QuadraticSystem, Scalar};
use findim::{tensor_all, Condition, LinMap, QuotientSpace, Report, Witness};

use crate::{alg_tensor, alg_tensor3, check_right_module, AlgebraHom, Bimodule, LeftModule, RightModule, StructureAlgebra};

/// Candidate `e ∈ S ⊗_R S` in the coordinates of [`SepContext::q2`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SepIdempotent {
    pub base_map: AlgebraHom,
    pub side_map: AlgebraHom,
    pub element: Vec<Scalar>,
}

/// The quotients `S ⊗_R S`, `S ⊗_R S ⊗_R S` and the three equations for a
/// pair `φ: R → S`, `ξ: T → S`.
#[derive(Clone, Debug)]
pub struct SepContext {
    pub phi: AlgebraHom,
    pub xi: AlgebraHom,
    pub q2: QuotientSpace,
    pub q3: QuotientSpace,
}

#[derive(Clone, Debug)]
pub struct SepSearch {
    /// Solutions of Eq1 and Eq2, or `None` if there are none.
    pub classical: Option<AffineSpace>,
    pub solutions: Vec<SepIdempotent>,
    pub examined: u64,
}

impl SepContext {
    pub fn new(phi: &AlgebraHom, xi: &AlgebraHom) -> Result<SepContext, LaError> {
        if !phi.target.same_as(&xi.target) {
            return Err(LaError::Dimension("φ and ξ must have the same target".into()));
        }
        let s = &phi.target;
        let right = RightModule::regular(s).restrict(phi)?;
        let left = LeftModule::regular(s).restrict(phi)?;
        let bimod = Bimodule::regular(s).restrict(phi, phi)?;
        let q2 = alg_tensor(&right, &left)?;
        let q3 = alg_tensor3(&right, &bimod, &left)?;
        Ok(SepContext { phi: phi.clone(), xi: xi.clone(), q2, q3 })
    }

    fn s(&self) -> &StructureAlgebra {
        &self.phi.target
    }

    pub fn dim(&self) -> usize {
        self.q2.dim()
    }

    /// `x ↦ ξ(t) x` and `x ↦ x ξ(t)` on `S ⊗_R S`.
    fn sides(&self, t: usize) -> (LinMap, LinMap) {
        let s = self.s();
        let xt = self.xi.map.image(t);
        let id = s.identity();
        let on_q2 = |m: LinMap| self.q2.projection.compose(&m).and_then(|m| m.compose(&self.q2.section)).expect("dims");
        (
            on_q2(tensor_all(&[&s.left_mult(&xt), &id]).expect("field")),
            on_q2(tensor_all(&[&id, &s.right_mult(&xt)]).expect("field")),
        )
    }

    /// `mult ∘ section: S ⊗_R S → S`.
    fn multiply(&self) -> LinMap {
        self.s().mult.compose(&self.q2.section).expect("dims")
    }

    /// `Σ a_i ⊗ 1 ⊗ b_i` in `S ⊗_R S ⊗_R S`.
    fn insert_one(&self) -> LinMap {
        let s = self.s();
        let m = tensor_all(&[&s.identity(), &s.unit_map(), &s.identity()]).expect("field");
        self.q3.projection.compose(&m).and_then(|m| m.compose(&self.q2.section)).expect("dims")
    }

    /// Column `i*n + j` is `a ⊗ bc ⊗ d` projected to `S ⊗_R S ⊗_R S`, where
    /// `a ⊗ b` and `c ⊗ d` are the representatives of basis vectors `i`, `j`.
    fn middle_product(&self) -> Matrix {
        let s = self.s();
        let ds = s.dim();
        let reps = self.q2.representatives();
        let n = reps.len();
        let w = self.q3.dim();
        let mut cols = Vec::with_capacity(n * n);
        for &ri in &reps {
            for &rj in &reps {
                let (a, b, c, d) = (ri / ds, ri % ds, rj / ds, rj % ds);
                let bc = s.mul(&s.basis(b), &s.basis(c));
                let mut col = vector::zeros(s.field(), w);
                for (m, coeff) in bc.iter().enumerate() {
                    if !coeff.is_zero() {
                        vector::axpy(&mut col, coeff, &self.q3.projection.image((a * ds + m) * ds + d));
                    }
                }
                cols.push(col);
            }
        }
        Matrix::from_columns(s.field(), w, &cols).expect("dims")
    }

    fn check_len(&self, x: &[Scalar]) -> Result<(), LaError> {
        if x.len() != self.dim() {
            return Err(LaError::Dimension(format!(
                "element has {} coordinates but S ⊗_R S has dimension {}",
                x.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// Tags `Eq1` (witness `at = [t]`), `Eq2`, `Eq3`.
    pub fn verify(&self, x: &[Scalar]) -> Result<Report, LaError> {
        self.check_len(x)?;
        let mut report = Report::new();
        let mut eq1 = Condition::new("Eq1");
        for t in 0..self.xi.source.dim() {
            let (l, r) = self.sides(t);
            eq1.compare(vec![t], &l.apply(x)?, &r.apply(x)?);
        }
        report.push(eq1);
        let mut eq2 = Condition::new("Eq2");
        eq2.compare(vec![], &self.multiply().apply(x)?, &self.s().unit);
        report.push(eq2);
        let mut eq3 = Condition::new("Eq3");
        eq3.compare(vec![], &self.middle_product().mul_vec(&vector::tensor(x, x))?, &self.insert_one().apply(x)?);
        report.push(eq3);
        Ok(report)
    }

    /// Eq1 and Eq2 as `a x = b`.
    pub fn linear_system(&self) -> (Matrix, Vec<Scalar>) {
        let f = self.s().field();
        let n = self.dim();
        let mut a = Matrix::zeros(f, 0, n);
        let mut b = Vec::new();
        for t in 0..self.xi.source.dim() {
            let (l, r) = self.sides(t);
            a = a.vstack(&l.sub(&r).expect("parallel").matrix).expect("cols");
            b.extend(vector::zeros(f, n));
        }
        a = a.vstack(&self.multiply().matrix).expect("cols");
        b.extend(self.s().unit.iter().cloned());
        (a, b)
    }

    /// Eq3 as `B(x ⊗ x) + L x = 0`.
    pub fn quadratic_system(&self) -> Result<QuadraticSystem, LaError> {
        let ins = self.insert_one();
        let lin = ins.matrix.scale(&-self.s().field().one());
        QuadraticSystem::new(&self.middle_product(), &lin, &vector::zeros(self.s().field(), self.q3.dim()))
    }

    pub fn solve(&self, limit: u64) -> Result<SepSearch, LaError> {
        let (a, b) = self.linear_system();
        let space = match solve_affine(&a, &b) {
            Ok(s) => s,
            Err(LaError::NoSolution) => return Ok(SepSearch { classical: None, solutions: vec![], examined: 0 }),
            Err(e) => return Err(e),
        };
        space.check_size(limit)?;
        let found = filter_affine(&space, &self.quadratic_system()?, limit)?;
        let solutions = found
            .solutions
            .into_iter()
            .map(|x| SepIdempotent { base_map: self.phi.clone(), side_map: self.xi.clone(), element: x })
            .collect();
        Ok(SepSearch { classical: Some(space), solutions, examined: found.examined })
    }

    /// Coordinates of `Σ c_(a,b) s_a ⊗ s_b` given in `S ⊗ S`.
    pub fn project(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LaError> {
        self.q2.project(v)
    }
}

pub fn verify_sep_idempotent(e: &SepIdempotent) -> Result<Report, LaError> {
    SepContext::new(&e.base_map, &e.side_map)?.verify(&e.element)
}

/// All `e` satisfying Eq1–Eq3, in lexicographic order of the kernel
/// coefficients of the Eq1+Eq2 solution space.
pub fn solve_sep_idempotent(phi: &AlgebraHom, xi: &AlgebraHom, limit: u64) -> Result<SepSearch, LaError> {
    SepContext::new(phi, xi)?.solve(limit)
}

fn compare_columns(cond: &mut Condition, module: usize, lhs: &LinMap, rhs: &LinMap) {
    for j in 0..lhs.domain.dim {
        let (a, b) = (lhs.image(j), rhs.image(j));
        cond.record(a == b, || Witness::values(vec![module, j], &a, &b));
    }
}

/// Evaluates `δ_N: N → N ⊗_R S, n ↦ n e¹ ⊗ e²` on each right `S`-module and
/// checks `counit` (`n e¹ e² = n`), `natural` (`T`-linearity through `ξ`) and
/// `heavy` (`n e¹ ⊗ e² e'¹ ⊗ e'² = n e¹ ⊗ 1 ⊗ e²`). Witnesses are located at
/// `[module, basis vector]`. Modules failing their own axioms are reported
/// under `module`.
pub fn induce_delta_and_check(e: &SepIdempotent, modules: &[RightModule]) -> Result<Report, LaError> {
    let ctx = SepContext::new(&e.base_map, &e.side_map)?;
    ctx.check_len(&e.element)?;
    let s = ctx.s();
    let ebar = LinMap::from_vector(&ctx.q2.ambient, &ctx.q2.lift(&e.element)?)?;
    let left_s = LeftModule::regular(s).restrict(&ctx.phi)?;
    let bimod = Bimodule::regular(s).restrict(&ctx.phi, &ctx.phi)?;
    let mut axioms = Condition::new("module");
    let mut counit = Condition::new("counit");
    let mut natural = Condition::new("natural");
    let mut heavy = Condition::new("heavy");
    for (mi, n) in modules.iter().enumerate() {
        if !n.algebra.same_as(s) {
            return Err(LaError::Dimension(format!("test module {mi} is not over S")));
        }
        let own = check_right_module(n);
        axioms.record(own.passed(), || Witness::note(vec![mi], format!("fails {}", own.failing_tags().join(", "))));
        if !own.passed() {
            continue;
        }
        let nr = n.restrict(&ctx.phi)?;
        let qn = alg_tensor(&nr, &left_s)?;
        let qnn = alg_tensor3(&nr, &bimod, &left_s)?;
        let id_n = LinMap::identity(&n.space);
        let id_s = s.identity();
        let delta = qn.projection.compose(&tensor_all(&[&n.action, &id_s])?)?.compose(&tensor_all(&[&id_n, &ebar])?)?;
        compare_columns(&mut counit, mi, &n.action.compose(&qn.section)?.compose(&delta)?, &id_n);
        for t in 0..ctx.xi.source.dim() {
            let rt = n.action.compose(&tensor_all(&[&id_n, &LinMap::from_vector(&s.space, &ctx.xi.map.image(t))?])?)?;
            let lhs = delta.compose(&rt)?;
            let rhs = qn.projection.compose(&tensor_all(&[&id_n, &s.right_mult(&ctx.xi.map.image(t))])?)?.compose(&qn.section)?.compose(&delta)?;
            compare_columns(&mut natural, mi, &lhs, &rhs);
        }
        let after = tensor_all(&[&s.mult, &id_s])?.compose(&tensor_all(&[&id_s, &ebar])?)?;
        let lhs = qnn.projection.compose(&tensor_all(&[&id_n, &after])?)?.compose(&qn.section)?.compose(&delta)?;
        let ins = tensor_all(&[&id_n, &s.unit_map(), &id_s])?;
        let rhs = qnn.projection.compose(&ins)?.compose(&qn.section)?.compose(&delta)?;
        compare_columns(&mut heavy, mi, &lhs, &rhs);
    }
    let mut report = Report::new();
    for c in [axioms, counit, natural, heavy] {
        report.push(c);
    }
    Ok(report)
}
