use algmod::{check_right_module, RightModule};
use coring::{check_right_comodule, RightComodule};
use exactla::{LaError, Matrix};
use findim::{tensor_space, BasedSpace, Condition, LinMap, Report};

use crate::structure::{chain, t};
use crate::EntwiningStructure;

/// `(M, ρ_M: M ⊗ A → M, ρ^M: M → M ⊗ C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntwinedModule {
    pub structure: EntwiningStructure,
    pub space: BasedSpace,
    pub action: LinMap,
    pub coaction: LinMap,
}

impl EntwinedModule {
    pub fn new(structure: EntwiningStructure, space: BasedSpace, action: LinMap, coaction: LinMap) -> Result<EntwinedModule, LaError> {
        let (da, dc) = structure.dims();
        let m = space.dim;
        if action.domain.dim != m * da || action.codomain.dim != m {
            return Err(LaError::Dimension(format!("action must be {m}x{}", m * da)));
        }
        if coaction.domain.dim != m || coaction.codomain.dim != m * dc {
            return Err(LaError::Dimension(format!("coaction must be {}x{m}", m * dc)));
        }
        let action = LinMap::new(tensor_space(&space, &structure.algebra.space)?, space.clone(), action.matrix)?;
        let coaction = LinMap::new(space.clone(), tensor_space(&space, &structure.coalgebra.space)?, coaction.matrix)?;
        Ok(EntwinedModule { structure, space, action, coaction })
    }

    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn identity(&self) -> LinMap {
        LinMap::identity(&self.space)
    }

    pub fn as_module(&self) -> RightModule {
        RightModule { algebra: self.structure.algebra.clone(), space: self.space.clone(), action: self.action.clone() }
    }

    pub fn as_comodule(&self) -> RightComodule {
        RightComodule { coalgebra: self.structure.coalgebra.clone(), space: self.space.clone(), coaction: self.coaction.clone() }
    }

    /// `M ⊕ N` with the basis of `M` first.
    pub fn direct_sum(&self, other: &EntwinedModule) -> Result<EntwinedModule, LaError> {
        if self.structure != other.structure {
            return Err(LaError::Dimension("direct sum of modules over different entwinings".into()));
        }
        let (da, dc) = self.structure.dims();
        let (m, n) = (self.dim(), other.dim());
        let f = self.space.field;
        let space = BasedSpace::new(f, m + n);
        // blocks are placed by hand since the tensor factor sits on the right
        let mut act = Matrix::zeros(f, m + n, (m + n) * da);
        let mut coact = Matrix::zeros(f, (m + n) * dc, m + n);
        for (src, offset) in [(self, 0), (other, m)] {
            for i in 0..src.dim() {
                for a in 0..da {
                    let img = src.action.image(i * da + a);
                    for (r, v) in img.iter().enumerate() {
                        act.set(offset + r, (offset + i) * da + a, v.clone());
                    }
                }
                let img = src.coaction.image(i);
                for (r, v) in img.iter().enumerate() {
                    let (row, c) = (r / dc, r % dc);
                    coact.set((offset + row) * dc + c, offset + i, v.clone());
                }
            }
        }
        let action = LinMap::new(tensor_space(&space, &self.structure.algebra.space)?, space.clone(), act)?;
        let coaction = LinMap::new(space.clone(), tensor_space(&space, &self.structure.coalgebra.space)?, coact)?;
        EntwinedModule::new(self.structure.clone(), space, action, coaction)
    }
}

fn renamed(report: Report, prefix: &str) -> Report {
    let mut out = Report::new();
    for mut c in report.conditions {
        c.tag = format!("{prefix}-{}", c.tag);
        out.push(c);
    }
    out
}

/// Tags `action-assoc`, `action-unit`, `coaction-coassoc`,
/// `coaction-counit`, `compat`.
pub fn check_entwined_module(m: &EntwinedModule) -> Report {
    let mut report = renamed(check_right_module(&m.as_module()), "action");
    report.extend(renamed(check_right_comodule(&m.as_comodule()), "coaction"));
    let e = &m.structure;
    let (id_m, id_a, id_c) = (m.identity(), e.id_a(), e.id_c());
    let lhs = chain(&[&m.coaction, &m.action]);
    let rhs = chain(&[&t(&[&m.action, &id_c]), &t(&[&id_m, &e.psi]), &t(&[&m.coaction, &id_a])]);
    report.push(Condition::from_maps("compat", &lhs, &rhs, &[m.dim(), e.dims().0]));
    report
}

/// `F^C(M) = M ⊗ C` with action `(ρ_M ⊗ 1)(1 ⊗ ψ)` and coaction `1 ⊗ Δ`.
pub fn induce_fc(e: &EntwiningStructure, m: &RightModule) -> Result<EntwinedModule, LaError> {
    if !m.algebra.same_as(&e.algebra) {
        return Err(LaError::Dimension("module is over a different algebra".into()));
    }
    let id_m = LinMap::identity(&m.space);
    let space = tensor_space(&m.space, &e.coalgebra.space)?;
    let action = chain(&[&t(&[&m.action, &e.id_c()]), &t(&[&id_m, &e.psi])]);
    let coaction = t(&[&id_m, &e.coalgebra.comult]);
    EntwinedModule::new(e.clone(), space, action, coaction)
}

/// `F_A(N) = N ⊗ A` with action `1 ⊗ ∇` and coaction `(1 ⊗ ψ)(ρ^N ⊗ 1)`.
pub fn induce_fa(e: &EntwiningStructure, n: &RightComodule) -> Result<EntwinedModule, LaError> {
    if n.coalgebra != e.coalgebra {
        return Err(LaError::Dimension("comodule is over a different coalgebra".into()));
    }
    let id_n = LinMap::identity(&n.space);
    let space = tensor_space(&n.space, &e.algebra.space)?;
    let action = t(&[&id_n, &e.algebra.mult]);
    let coaction = chain(&[&t(&[&id_n, &e.psi]), &t(&[&n.coaction, &e.id_a()])]);
    EntwinedModule::new(e.clone(), space, action, coaction)
}

/// `linear` (`f ρ_M = ρ_N (f ⊗ 1)`) and `colinear` (`ρ^N f = (f ⊗ 1) ρ^M`).
pub fn check_morphism(f: &LinMap, source: &EntwinedModule, target: &EntwinedModule) -> Report {
    let e = &source.structure;
    let (da, _) = e.dims();
    let mut report = Report::new();
    let lhs = chain(&[f, &source.action]);
    let rhs = chain(&[&target.action, &t(&[f, &e.id_a()])]);
    report.push(Condition::from_maps("linear", &lhs, &rhs, &[source.dim(), da]));
    let lhs = chain(&[&target.coaction, f]);
    let rhs = chain(&[&t(&[f, &e.id_c()]), &source.coaction]);
    report.push(Condition::from_maps("colinear", &lhs, &rhs, &[source.dim()]));
    report
}
