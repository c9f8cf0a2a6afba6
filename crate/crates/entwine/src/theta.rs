use exactla::{filter_affine, solve_affine, AffineSpace, LaError, Scalar};
use findim::{tensor_space, BasedSpace, Condition, LinMap, Report};

use crate::structure::{chain, map_from_unknowns, t, unknowns_of};
use crate::system::{affine_system, quadratic_system};
use crate::{EntwiningStructure, OmegaT};

/// `θ: C ⊗ C → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaMap {
    pub structure: EntwiningStructure,
    pub map: LinMap,
}

#[derive(Clone, Debug)]
pub struct ThetaSearch {
    /// Solutions of E4.4 and E4.5 in the coordinates of [`ThetaMap::unknowns`],
    /// or `None` if there are none.
    pub linear: Option<AffineSpace>,
    pub solutions: Vec<ThetaMap>,
    pub examined: u64,
}

fn domain(e: &EntwiningStructure) -> BasedSpace {
    tensor_space(&e.coalgebra.space, &e.coalgebra.space).expect("one field")
}

impl ThetaMap {
    pub fn new(structure: EntwiningStructure, map: LinMap) -> Result<ThetaMap, LaError> {
        let (da, dc) = structure.dims();
        if map.domain.dim != dc * dc || map.codomain.dim != da {
            return Err(LaError::Dimension(format!("θ must be {da}x{}", dc * dc)));
        }
        let map = LinMap::new(domain(&structure), structure.algebra.space.clone(), map.matrix)?;
        Ok(ThetaMap { structure, map })
    }

    /// `x ⊗ y ↦ ε(x) ε(y) 1`.
    pub fn counit_square(e: &EntwiningStructure) -> ThetaMap {
        let eps = &e.coalgebra.counit;
        let map = chain(&[&e.unit(), &t(&[eps, eps])]);
        ThetaMap::new(e.clone(), map).expect("dims")
    }

    /// Coordinates: the image of basis vector `j` of `C ⊗ C` fills slots
    /// `j*dim A ..`.
    pub fn from_unknowns(e: &EntwiningStructure, x: &[Scalar]) -> Result<ThetaMap, LaError> {
        let map = map_from_unknowns(&domain(e), &e.algebra.space, x)?;
        ThetaMap::new(e.clone(), map)
    }

    pub fn unknowns(&self) -> Vec<Scalar> {
        unknowns_of(&self.map)
    }

    /// `T_θ = (1 ⊗ ε) ∘ (E4.6 left side)`, the element of Ω induced by `γ ∘ γF^C U^C`.
    pub fn omega_image(&self) -> OmegaT {
        let e = &self.structure;
        let map = chain(&[&t(&[&e.id_a(), &e.coalgebra.counit]), &e46_lhs(e, &self.map, &self.map)]);
        OmegaT { structure: e.clone(), map }
    }
}

/// `(θ ⊗ 1)(1 ⊗ Δ)` and `ψ(1 ⊗ θ)(Δ ⊗ 1)`, both `C ⊗ C → A ⊗ C`.
fn e44(e: &EntwiningStructure, th: &LinMap) -> (LinMap, LinMap) {
    let (id_c, comult) = (e.id_c(), &e.coalgebra.comult);
    let lhs = chain(&[&t(&[th, &id_c]), &t(&[&id_c, comult])]);
    let rhs = chain(&[&e.psi, &t(&[&id_c, th]), &t(&[comult, &id_c])]);
    (lhs, rhs)
}

/// `θΔ` and `i ε`.
fn e45(e: &EntwiningStructure, th: &LinMap) -> (LinMap, LinMap) {
    (chain(&[th, &e.coalgebra.comult]), chain(&[&e.unit(), &e.coalgebra.counit]))
}

/// `(ψ ⊗ 1)(1 ⊗ θ ⊗ 1)(1 ⊗ 1 ⊗ Δ): C ⊗ C ⊗ C → A ⊗ C ⊗ C`.
fn e46_inner(e: &EntwiningStructure, th: &LinMap) -> LinMap {
    let id_c = e.id_c();
    chain(&[&t(&[&e.psi, &id_c]), &t(&[&id_c, th, &id_c]), &t(&[&id_c, &id_c, &e.coalgebra.comult])])
}

/// `(∇ ⊗ 1)(1 ⊗ θ ⊗ 1)(1 ⊗ 1 ⊗ Δ): A ⊗ C ⊗ C → A ⊗ C`.
fn e46_outer(e: &EntwiningStructure, th: &LinMap) -> LinMap {
    let (id_a, id_c) = (e.id_a(), e.id_c());
    chain(&[&t(&[&e.algebra.mult, &id_c]), &t(&[&id_a, th, &id_c]), &t(&[&id_a, &id_c, &e.coalgebra.comult])])
}

/// Left side of E4.6 with `first` in the inner slot and `second` in the outer.
fn e46_lhs(e: &EntwiningStructure, first: &LinMap, second: &LinMap) -> LinMap {
    chain(&[&e46_outer(e, second), &e46_inner(e, first)])
}

/// `(θ ⊗ 1)(1 ⊗ Δ)(1 ⊗ ε ⊗ 1)`.
fn e46_rhs(e: &EntwiningStructure, th: &LinMap) -> LinMap {
    let id_c = e.id_c();
    let (lhs44, _) = e44(e, th);
    chain(&[&lhs44, &t(&[&id_c, &e.coalgebra.counit, &id_c])])
}

/// Tags `E4.4`, `E4.5`, `E4.6`; witnesses are basis tuples of `C ⊗ C` or
/// `C ⊗ C ⊗ C` (`C` for E4.5).
pub fn verify_theta(th: &ThetaMap) -> Report {
    let e = &th.structure;
    let dc = e.coalgebra.dim();
    let mut report = Report::new();
    let (l, r) = e44(e, &th.map);
    report.push(Condition::from_maps("E4.4", &l, &r, &[dc, dc]));
    let (l, r) = e45(e, &th.map);
    report.push(Condition::from_maps("E4.5", &l, &r, &[dc]));
    let l = e46_lhs(e, &th.map, &th.map);
    let r = e46_rhs(e, &th.map);
    report.push(Condition::from_maps("E4.6", &l, &r, &[dc, dc, dc]));
    report
}

/// Solves E4.4 and E4.5 exactly, then enumerates that affine space and keeps
/// the points satisfying E4.6. Order follows the kernel coefficients.
pub fn solve_theta(e: &EntwiningStructure, limit: u64) -> Result<ThetaSearch, LaError> {
    let f = e.algebra.field();
    let (da, dc) = e.dims();
    let n = da * dc * dc;
    let dom = domain(e);
    let as_map = |x: &[Scalar]| map_from_unknowns(&dom, &e.algebra.space, x).expect("length n");
    let (a, b) = affine_system(f, n, |x| {
        let th = as_map(x);
        let (l1, r1) = e44(e, &th);
        let (l2, r2) = e45(e, &th);
        let mut v = unknowns_of(&l1.sub(&r1).expect("parallel"));
        v.extend(unknowns_of(&l2.sub(&r2).expect("parallel")));
        v
    });
    let space = match solve_affine(&a, &b) {
        Ok(s) => s,
        Err(LaError::NoSolution) => return Ok(ThetaSearch { linear: None, solutions: vec![], examined: 0 }),
        Err(err) => return Err(err),
    };
    space.check_size(limit)?;
    let units: Vec<LinMap> = (0..n).map(|i| as_map(&exactla::vector::unit(f, n, i))).collect();
    let inner: Vec<LinMap> = units.iter().map(|u| e46_inner(e, u)).collect();
    let outer: Vec<LinMap> = units.iter().map(|u| e46_outer(e, u)).collect();
    let system = quadratic_system(
        f,
        n,
        |i, j| unknowns_of(&outer[j].compose(&inner[i]).expect("dims")),
        |x| unknowns_of(&e46_rhs(e, &as_map(x))),
    )?;
    let found = filter_affine(&space, &system, limit)?;
    let solutions = found
        .solutions
        .iter()
        .map(|x| ThetaMap::new(e.clone(), as_map(x)).expect("dims"))
        .collect();
    Ok(ThetaSearch { linear: Some(space), solutions, examined: found.examined })
}
