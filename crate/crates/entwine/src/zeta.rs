use exactla::{filter_affine, solve_affine, vector, AffineSpace, LaError, Scalar};
use findim::{tensor_space, BasedSpace, Condition, LinMap, Report};

use crate::structure::{chain, map_from_unknowns, t, unknowns_of};
use crate::system::{affine_system, quadratic_system};
use crate::{EntwiningStructure, LambdaS};

/// `ζ: C → A ⊗ A`, `c ↦ ζ¹(c) ⊗ ζ²(c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaMap {
    pub structure: EntwiningStructure,
    pub map: LinMap,
}

#[derive(Clone, Debug)]
pub struct ZetaSearch {
    /// Solutions of E4.9 and E4.10 in the coordinates of [`ZetaMap::unknowns`],
    /// or `None` if there are none.
    pub linear: Option<AffineSpace>,
    pub solutions: Vec<ZetaMap>,
    pub examined: u64,
}

fn codomain(e: &EntwiningStructure) -> BasedSpace {
    tensor_space(&e.algebra.space, &e.algebra.space).expect("one field")
}

impl ZetaMap {
    pub fn new(structure: EntwiningStructure, map: LinMap) -> Result<ZetaMap, LaError> {
        let (da, dc) = structure.dims();
        if map.domain.dim != dc || map.codomain.dim != da * da {
            return Err(LaError::Dimension(format!("ζ must be {}x{dc}", da * da)));
        }
        let map = LinMap::new(structure.coalgebra.space.clone(), codomain(&structure), map.matrix)?;
        Ok(ZetaMap { structure, map })
    }

    /// `c ↦ ε(c) 1 ⊗ 1`.
    pub fn counit(e: &EntwiningStructure) -> ZetaMap {
        let one = vector::tensor(&e.algebra.unit, &e.algebra.unit);
        let map = chain(&[&LinMap::from_vector(&codomain(e), &one).expect("dims"), &e.coalgebra.counit]);
        ZetaMap::new(e.clone(), map).expect("dims")
    }

    /// Coordinates: `ζ(c_j)` fills slots `j*dim(A)^2 ..`.
    pub fn from_unknowns(e: &EntwiningStructure, x: &[Scalar]) -> Result<ZetaMap, LaError> {
        let map = map_from_unknowns(&e.coalgebra.space, &codomain(e), x)?;
        ZetaMap::new(e.clone(), map)
    }

    pub fn unknowns(&self) -> Vec<Scalar> {
        unknowns_of(&self.map)
    }

    /// `S_ζ`, the left side of E4.11, the element of Λ induced by `δF_A U_A ∘ δ`.
    pub fn lambda_image(&self) -> LambdaS {
        let e = &self.structure;
        LambdaS { structure: e.clone(), map: e411_lhs(e, &self.map, &self.map) }
    }
}

/// `(1 ⊗ ∇)(ζ ⊗ 1)` and `(∇ ⊗ 1)(1 ⊗ ζ)ψ`, both `C ⊗ A → A ⊗ A`.
fn e49(e: &EntwiningStructure, z: &LinMap) -> (LinMap, LinMap) {
    let (id_a, mult) = (e.id_a(), &e.algebra.mult);
    let lhs = chain(&[&t(&[&id_a, mult]), &t(&[z, &id_a])]);
    let rhs = chain(&[&t(&[mult, &id_a]), &t(&[&id_a, z]), &e.psi]);
    (lhs, rhs)
}

/// `∇ζ` and `i ε`.
fn e410(e: &EntwiningStructure, z: &LinMap) -> (LinMap, LinMap) {
    (chain(&[&e.algebra.mult, z]), chain(&[&e.unit(), &e.coalgebra.counit]))
}

/// `(Δ ⊗ 1 ⊗ 1)(1 ⊗ ∇)(1 ⊗ ζ ⊗ 1)(Δ ⊗ 1)(1 ⊗ i): C → C ⊗ C ⊗ A ⊗ A`.
fn e411_inner(e: &EntwiningStructure, z: &LinMap) -> LinMap {
    let (id_a, id_c, comult) = (e.id_a(), e.id_c(), &e.coalgebra.comult);
    chain(&[
        &t(&[comult, &id_a, &id_a]),
        &t(&[&id_c, &id_a, &e.algebra.mult]),
        &t(&[&id_c, z, &id_a]),
        &t(&[comult, &id_a]),
        &t(&[&id_c, &e.unit()]),
    ])
}

/// `(ε ⊗ 1 ⊗ 1 ⊗ 1)(1 ⊗ 1 ⊗ 1 ⊗ ∇)(1 ⊗ 1 ⊗ ζ ⊗ 1)(1 ⊗ ψ ⊗ 1): C ⊗ C ⊗ A ⊗ A → A ⊗ A ⊗ A`.
fn e411_outer(e: &EntwiningStructure, z: &LinMap) -> LinMap {
    let (id_a, id_c) = (e.id_a(), e.id_c());
    chain(&[
        &t(&[&e.coalgebra.counit, &id_a, &id_a, &id_a]),
        &t(&[&id_c, &id_a, &id_a, &e.algebra.mult]),
        &t(&[&id_c, &id_a, z, &id_a]),
        &t(&[&id_c, &e.psi, &id_a]),
    ])
}

/// Left side of E4.11 with `first` in the inner slot and `second` in the outer.
fn e411_lhs(e: &EntwiningStructure, first: &LinMap, second: &LinMap) -> LinMap {
    chain(&[&e411_outer(e, second), &e411_inner(e, first)])
}

/// `(1 ⊗ i ⊗ 1) ζ (ε ⊗ 1) Δ`.
fn e411_rhs(e: &EntwiningStructure, z: &LinMap) -> LinMap {
    let (id_a, id_c) = (e.id_a(), e.id_c());
    chain(&[&t(&[&id_a, &e.unit(), &id_a]), z, &t(&[&e.coalgebra.counit, &id_c]), &e.coalgebra.comult])
}

/// Tags `E4.9`, `E4.10`, `E4.11`; witnesses are basis tuples of `C ⊗ A`
/// (E4.9) or `C`.
pub fn verify_zeta(z: &ZetaMap) -> Report {
    let e = &z.structure;
    let (da, dc) = e.dims();
    let mut report = Report::new();
    let (l, r) = e49(e, &z.map);
    report.push(Condition::from_maps("E4.9", &l, &r, &[dc, da]));
    let (l, r) = e410(e, &z.map);
    report.push(Condition::from_maps("E4.10", &l, &r, &[dc]));
    let l = e411_lhs(e, &z.map, &z.map);
    let r = e411_rhs(e, &z.map);
    report.push(Condition::from_maps("E4.11", &l, &r, &[dc]));
    report
}

/// Solves E4.9 and E4.10 exactly, then enumerates that affine space and keeps
/// the points satisfying E4.11.
pub fn solve_zeta(e: &EntwiningStructure, limit: u64) -> Result<ZetaSearch, LaError> {
    let f = e.algebra.field();
    let (da, dc) = e.dims();
    let n = dc * da * da;
    let cod = codomain(e);
    let as_map = |x: &[Scalar]| map_from_unknowns(&e.coalgebra.space, &cod, x).expect("length n");
    let (a, b) = affine_system(f, n, |x| {
        let z = as_map(x);
        let (l1, r1) = e49(e, &z);
        let (l2, r2) = e410(e, &z);
        let mut v = unknowns_of(&l1.sub(&r1).expect("parallel"));
        v.extend(unknowns_of(&l2.sub(&r2).expect("parallel")));
        v
    });
    let space = match solve_affine(&a, &b) {
        Ok(s) => s,
        Err(LaError::NoSolution) => return Ok(ZetaSearch { linear: None, solutions: vec![], examined: 0 }),
        Err(err) => return Err(err),
    };
    space.check_size(limit)?;
    let units: Vec<LinMap> = (0..n).map(|i| as_map(&vector::unit(f, n, i))).collect();
    let inner: Vec<LinMap> = units.iter().map(|u| e411_inner(e, u)).collect();
    let outer: Vec<LinMap> = units.iter().map(|u| e411_outer(e, u)).collect();
    let system = quadratic_system(
        f,
        n,
        |i, j| unknowns_of(&outer[j].compose(&inner[i]).expect("dims")),
        |x| unknowns_of(&e411_rhs(e, &as_map(x))),
    )?;
    let found = filter_affine(&space, &system, limit)?;
    let solutions = found.solutions.iter().map(|x| ZetaMap::new(e.clone(), as_map(x)).expect("dims")).collect();
    Ok(ZetaSearch { linear: Some(space), solutions, examined: found.examined })
}
