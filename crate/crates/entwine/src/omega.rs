use exactla::LaError;
use findim::{Condition, LinMap, Report};

use crate::structure::{chain, t};
use crate::EntwiningStructure;

/// `T: C ⊗ C ⊗ C → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaT {
    pub structure: EntwiningStructure,
    pub map: LinMap,
}

/// `S: C → A ⊗ A ⊗ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaS {
    pub structure: EntwiningStructure,
    pub map: LinMap,
}

impl OmegaT {
    pub fn new(structure: EntwiningStructure, map: LinMap) -> Result<OmegaT, LaError> {
        let (da, dc) = structure.dims();
        if map.domain.dim != dc * dc * dc || map.codomain.dim != da {
            return Err(LaError::Dimension(format!("T must be {da}x{}", dc * dc * dc)));
        }
        Ok(OmegaT { structure, map })
    }
}

impl LambdaS {
    pub fn new(structure: EntwiningStructure, map: LinMap) -> Result<LambdaS, LaError> {
        let (da, dc) = structure.dims();
        if map.domain.dim != dc || map.codomain.dim != da * da * da {
            return Err(LaError::Dimension(format!("S must be {}x{dc}", da * da * da)));
        }
        Ok(LambdaS { structure, map })
    }
}

/// Tag `Omega`: `ψ(1 ⊗ T)(Δ ⊗ 1 ⊗ 1) = (T ⊗ 1)(1 ⊗ 1 ⊗ Δ)` on `C ⊗ C ⊗ C`.
pub fn check_omega(x: &OmegaT) -> Report {
    let e = &x.structure;
    let (id_c, comult) = (e.id_c(), &e.coalgebra.comult);
    let dc = e.coalgebra.dim();
    let lhs = chain(&[&e.psi, &t(&[&id_c, &x.map]), &t(&[comult, &id_c, &id_c])]);
    let rhs = chain(&[&t(&[&x.map, &id_c]), &t(&[&id_c, &id_c, comult])]);
    let mut r = Report::new();
    r.push(Condition::from_maps("Omega", &lhs, &rhs, &[dc, dc, dc]));
    r
}

/// Tag `Lambda`: `(∇ ⊗ 1 ⊗ 1)(1 ⊗ S)ψ = (1 ⊗ 1 ⊗ ∇)(S ⊗ 1)` on `C ⊗ A`.
pub fn check_lambda(x: &LambdaS) -> Report {
    let e = &x.structure;
    let (da, dc) = e.dims();
    let (id_a, mult) = (e.id_a(), &e.algebra.mult);
    let lhs = chain(&[&t(&[mult, &id_a, &id_a]), &t(&[&id_a, &x.map]), &e.psi]);
    let rhs = chain(&[&t(&[&id_a, &id_a, mult]), &t(&[&x.map, &id_a])]);
    let mut r = Report::new();
    r.push(Condition::from_maps("Lambda", &lhs, &rhs, &[dc, da]));
    r
}
