use exactla::{LaError, Scalar};
use findim::{tensor_all, tensor_space, BasedSpace, Condition, LinMap, Report};

use crate::{AlgebraHom, StructureAlgebra};

/// `ρ: M ⊗ A → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    pub algebra: StructureAlgebra,
    pub space: BasedSpace,
    pub action: LinMap,
}

/// `λ: A ⊗ M → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    pub algebra: StructureAlgebra,
    pub space: BasedSpace,
    pub action: LinMap,
}

/// `(A, B)`-bimodule: `A ⊗ M → M` and `M ⊗ B → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub left: StructureAlgebra,
    pub right: StructureAlgebra,
    pub space: BasedSpace,
    pub left_action: LinMap,
    pub right_action: LinMap,
}

fn action_shape(action: &LinMap, m: &BasedSpace, a: &StructureAlgebra) -> Result<(), LaError> {
    if action.domain.dim != m.dim * a.dim() || action.codomain.dim != m.dim {
        return Err(LaError::Dimension(format!(
            "action must be {}x{} for a module of dimension {} over an algebra of dimension {}",
            m.dim,
            m.dim * a.dim(),
            m.dim,
            a.dim()
        )));
    }
    if action.field() != a.field() || m.field != a.field() {
        return Err(LaError::FieldMismatch(a.field(), action.field()));
    }
    Ok(())
}

impl RightModule {
    pub fn new(algebra: StructureAlgebra, space: BasedSpace, action: LinMap) -> Result<RightModule, LaError> {
        action_shape(&action, &space, &algebra)?;
        let action = LinMap::new(tensor_space(&space, &algebra.space)?, space.clone(), action.matrix)?;
        Ok(RightModule { algebra, space, action })
    }

    /// `A_A`.
    pub fn regular(a: &StructureAlgebra) -> RightModule {
        RightModule { algebra: a.clone(), space: a.space.clone(), action: a.mult.clone() }
    }

    /// Restriction along `h: R → S` of a right `S`-module.
    pub fn restrict(&self, h: &AlgebraHom) -> Result<RightModule, LaError> {
        let id = LinMap::identity(&self.space);
        let action = self.action.compose(&tensor_all(&[&id, &h.map])?)?;
        Ok(RightModule { algebra: h.source.clone(), space: self.space.clone(), action })
    }

    pub fn act(&self, m: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.action.apply(&exactla::vector::tensor(m, a)).expect("dimensions")
    }
}

impl LeftModule {
    pub fn new(algebra: StructureAlgebra, space: BasedSpace, action: LinMap) -> Result<LeftModule, LaError> {
        action_shape(&action, &space, &algebra)?;
        let action = LinMap::new(tensor_space(&algebra.space, &space)?, space.clone(), action.matrix)?;
        Ok(LeftModule { algebra, space, action })
    }

    pub fn regular(a: &StructureAlgebra) -> LeftModule {
        LeftModule { algebra: a.clone(), space: a.space.clone(), action: a.mult.clone() }
    }

    pub fn restrict(&self, h: &AlgebraHom) -> Result<LeftModule, LaError> {
        let id = LinMap::identity(&self.space);
        let action = self.action.compose(&tensor_all(&[&h.map, &id])?)?;
        Ok(LeftModule { algebra: h.source.clone(), space: self.space.clone(), action })
    }

    pub fn act(&self, a: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        self.action.apply(&exactla::vector::tensor(a, m)).expect("dimensions")
    }
}

impl Bimodule {
    pub fn new(
        left: StructureAlgebra,
        right: StructureAlgebra,
        space: BasedSpace,
        left_action: LinMap,
        right_action: LinMap,
    ) -> Result<Bimodule, LaError> {
        let l = LeftModule::new(left, space.clone(), left_action)?;
        let r = RightModule::new(right, space.clone(), right_action)?;
        Ok(Bimodule { left: l.algebra, right: r.algebra, space, left_action: l.action, right_action: r.action })
    }

    /// `_A A_A`.
    pub fn regular(a: &StructureAlgebra) -> Bimodule {
        Bimodule {
            left: a.clone(),
            right: a.clone(),
            space: a.space.clone(),
            left_action: a.mult.clone(),
            right_action: a.mult.clone(),
        }
    }

    /// Restricts the left action along `l` and the right action along `r`.
    pub fn restrict(&self, l: &AlgebraHom, r: &AlgebraHom) -> Result<Bimodule, LaError> {
        let left = self.as_left().restrict(l)?;
        let right = self.as_right().restrict(r)?;
        Ok(Bimodule {
            left: left.algebra,
            right: right.algebra,
            space: self.space.clone(),
            left_action: left.action,
            right_action: right.action,
        })
    }

    pub fn as_left(&self) -> LeftModule {
        LeftModule { algebra: self.left.clone(), space: self.space.clone(), action: self.left_action.clone() }
    }

    pub fn as_right(&self) -> RightModule {
        RightModule { algebra: self.right.clone(), space: self.space.clone(), action: self.right_action.clone() }
    }
}

fn right_conditions(report: &mut Report, prefix: &str, m: &RightModule) {
    let (dm, da) = (m.space.dim, m.algebra.dim());
    let id_m = LinMap::identity(&m.space);
    let id_a = m.algebra.identity();
    let lhs = m.action.compose(&tensor_all(&[&m.action, &id_a]).expect("field")).expect("dims");
    let rhs = m.action.compose(&tensor_all(&[&id_m, &m.algebra.mult]).expect("field")).expect("dims");
    report.push(Condition::from_maps(format!("{prefix}assoc"), &lhs, &rhs, &[dm, da, da]));
    let unit = m.action.compose(&tensor_all(&[&id_m, &m.algebra.unit_map()]).expect("field")).expect("dims");
    report.push(Condition::from_maps(format!("{prefix}unit"), &unit, &id_m, &[dm]));
}

fn left_conditions(report: &mut Report, prefix: &str, m: &LeftModule) {
    let (dm, da) = (m.space.dim, m.algebra.dim());
    let id_m = LinMap::identity(&m.space);
    let id_a = m.algebra.identity();
    let lhs = m.action.compose(&tensor_all(&[&id_a, &m.action]).expect("field")).expect("dims");
    let rhs = m.action.compose(&tensor_all(&[&m.algebra.mult, &id_m]).expect("field")).expect("dims");
    report.push(Condition::from_maps(format!("{prefix}assoc"), &lhs, &rhs, &[da, da, dm]));
    let unit = m.action.compose(&tensor_all(&[&m.algebra.unit_map(), &id_m]).expect("field")).expect("dims");
    report.push(Condition::from_maps(format!("{prefix}unit"), &unit, &id_m, &[dm]));
}

pub fn check_right_module(m: &RightModule) -> Report {
    let mut r = Report::new();
    right_conditions(&mut r, "", m);
    r
}

pub fn check_left_module(m: &LeftModule) -> Report {
    let mut r = Report::new();
    left_conditions(&mut r, "", m);
    r
}

/// Tags `left-assoc`, `left-unit`, `right-assoc`, `right-unit`, `commute`.
pub fn check_bimodule(b: &Bimodule) -> Report {
    let mut r = Report::new();
    left_conditions(&mut r, "left-", &b.as_left());
    right_conditions(&mut r, "right-", &b.as_right());
    let id_m = LinMap::identity(&b.space);
    let (ida, idb) = (b.left.identity(), b.right.identity());
    let lhs = b.right_action.compose(&tensor_all(&[&b.left_action, &idb]).expect("field")).expect("dims");
    let rhs = b.left_action.compose(&tensor_all(&[&ida, &b.right_action]).expect("field")).expect("dims");
    r.push(Condition::from_maps("commute", &lhs, &rhs, &[b.left.dim(), id_m.domain.dim, b.right.dim()]));
    r
}
