//! Evaluates the natural transformations built from θ or ζ on a fixed finite
//! family of entwined modules. Passing here is evidence, not proof: the
//! transformations are quantified over all entwined modules.

use algmod::RightModule;
use coring::RightComodule;
use exactla::{LaError, Matrix};
use findim::{Condition, LinMap, Report, Witness};

use crate::module::{check_morphism, induce_fa, induce_fc};
use crate::structure::{chain, t};
use crate::{EntwinedModule, EntwiningStructure, ThetaMap, ZetaMap};

/// Modules and morphisms `(source, target, map)` between them.
#[derive(Clone, Debug)]
pub struct TestFamily {
    pub modules: Vec<EntwinedModule>,
    pub morphisms: Vec<(usize, usize, LinMap)>,
}

/// `F^C(A)`, `F_A(C)`, their direct sum; `ψ: F_A(C) → F^C(A)` and the
/// inclusions and projections of the sum.
pub fn test_family(e: &EntwiningStructure) -> Result<TestFamily, LaError> {
    let fc = induce_fc(e, &RightModule::regular(&e.algebra))?;
    let fa = induce_fa(e, &RightComodule::regular(&e.coalgebra))?;
    let sum = fc.direct_sum(&fa)?;
    let f = e.algebra.field();
    let (m, n) = (fc.dim(), fa.dim());
    let block = |rows: usize, cols: usize, at_row: usize, at_col: usize, size: usize| {
        let mut mat = Matrix::zeros(f, rows, cols);
        for i in 0..size {
            mat.set(at_row + i, at_col + i, f.one());
        }
        mat
    };
    let lin = |src: &EntwinedModule, dst: &EntwinedModule, mat: Matrix| LinMap::new(src.space.clone(), dst.space.clone(), mat);
    let morphisms = vec![
        (1, 0, e.psi.clone()),
        (0, 2, lin(&fc, &sum, block(m + n, m, 0, 0, m))?),
        (1, 2, lin(&fa, &sum, block(m + n, n, m, 0, n))?),
        (2, 0, lin(&sum, &fc, block(m, m + n, 0, 0, m))?),
        (2, 1, lin(&sum, &fa, block(n, m + n, 0, m, n))?),
    ];
    Ok(TestFamily { modules: vec![fc, fa, sum], morphisms })
}

/// `γ_M = ρ_M (1 ⊗ θ)(ρ^M ⊗ 1): M ⊗ C → M`.
pub fn gamma(th: &ThetaMap, m: &EntwinedModule) -> LinMap {
    chain(&[&m.action, &t(&[&m.identity(), &th.map]), &t(&[&m.coaction, &th.structure.id_c()])])
}

/// `δ_M = (ρ_M ⊗ 1)(1 ⊗ ζ)ρ^M: M → M ⊗ A`.
pub fn delta(z: &ZetaMap, m: &EntwinedModule) -> LinMap {
    chain(&[&t(&[&m.action, &z.structure.id_a()]), &t(&[&m.identity(), &z.map]), &m.coaction])
}

fn compare(cond: &mut Condition, slot: usize, lhs: &LinMap, rhs: &LinMap) {
    for j in 0..lhs.domain.dim {
        let (a, b) = (lhs.image(j), rhs.image(j));
        cond.record(a == b, || Witness::values(vec![slot, j], &a, &b));
    }
}

fn module_condition(family: &TestFamily) -> Condition {
    let mut c = Condition::new("module");
    for (i, m) in family.modules.iter().enumerate() {
        let r = crate::check_entwined_module(m);
        c.record(r.passed(), || Witness::note(vec![i], format!("failing {:?}", r.failing_tags())));
    }
    c
}

/// On each module of [`test_family`]: `colinear` (`γ_M` is `C`-colinear from
/// `M ⊗ C` with `1 ⊗ Δ`), `retract` (`γ_M ρ^M = 1`), `heavy`
/// (`γ_M γ_{F^C M} = γ_M (1 ⊗ ε ⊗ 1)`), and `natural` on each morphism.
/// Witnesses are `[module or morphism, basis index]`.
pub fn theta_harness(th: &ThetaMap) -> Result<Report, LaError> {
    let e = &th.structure;
    let family = test_family(e)?;
    let (id_c, comult, counit) = (e.id_c(), &e.coalgebra.comult, &e.coalgebra.counit);
    let mut colinear = Condition::new("colinear");
    let mut retract = Condition::new("retract");
    let mut heavy = Condition::new("heavy");
    for (i, m) in family.modules.iter().enumerate() {
        let g = gamma(th, m);
        let id_m = m.identity();
        compare(&mut colinear, i, &chain(&[&m.coaction, &g]), &chain(&[&t(&[&g, &id_c]), &t(&[&id_m, comult])]));
        compare(&mut retract, i, &chain(&[&g, &m.coaction]), &id_m);
        let fm = induce_fc(e, &m.as_module())?;
        let lhs = chain(&[&g, &gamma(th, &fm)]);
        let rhs = chain(&[&g, &t(&[&id_m, counit, &id_c])]);
        compare(&mut heavy, i, &lhs, &rhs);
    }
    let mut natural = Condition::new("natural");
    for (k, (s, d, f)) in family.morphisms.iter().enumerate() {
        let (src, dst) = (&family.modules[*s], &family.modules[*d]);
        compare(&mut natural, k, &chain(&[&gamma(th, dst), &t(&[f, &id_c])]), &chain(&[f, &gamma(th, src)]));
    }
    let mut report = Report::new();
    for c in [module_condition(&family), colinear, retract, heavy, natural] {
        report.push(c);
    }
    Ok(report)
}

/// On each module of [`test_family`]: `linear` (`δ_M` is `A`-linear into
/// `M ⊗ A` with `1 ⊗ ∇`), `retract` (`ρ_M δ_M = 1`), `heavy`
/// (`δ_{F_A M} δ_M = (1 ⊗ i ⊗ 1) δ_M`), and `natural` on each morphism.
pub fn zeta_harness(z: &ZetaMap) -> Result<Report, LaError> {
    let e = &z.structure;
    let family = test_family(e)?;
    let (id_a, mult) = (e.id_a(), &e.algebra.mult);
    let mut linear = Condition::new("linear");
    let mut retract = Condition::new("retract");
    let mut heavy = Condition::new("heavy");
    for (i, m) in family.modules.iter().enumerate() {
        let d = delta(z, m);
        let id_m = m.identity();
        compare(&mut linear, i, &chain(&[&d, &m.action]), &chain(&[&t(&[&id_m, mult]), &t(&[&d, &id_a])]));
        compare(&mut retract, i, &chain(&[&m.action, &d]), &id_m);
        let fm = induce_fa(e, &m.as_comodule())?;
        let lhs = chain(&[&delta(z, &fm), &d]);
        let rhs = chain(&[&t(&[&id_m, &e.unit(), &id_a]), &d]);
        compare(&mut heavy, i, &lhs, &rhs);
    }
    let mut natural = Condition::new("natural");
    for (k, (s, d, f)) in family.morphisms.iter().enumerate() {
        let (src, dst) = (&family.modules[*s], &family.modules[*d]);
        compare(&mut natural, k, &chain(&[&delta(z, dst), f]), &chain(&[&t(&[f, &id_a]), &delta(z, src)]));
    }
    let mut report = Report::new();
    for c in [module_condition(&family), linear, retract, heavy, natural] {
        report.push(c);
    }
    Ok(report)
}

/// Checks that every morphism of the family is `A`-linear and `C`-colinear.
pub fn check_family(family: &TestFamily) -> Report {
    let mut linear = Condition::new("linear");
    let mut colinear = Condition::new("colinear");
    for (k, (s, d, f)) in family.morphisms.iter().enumerate() {
        let r = check_morphism(f, &family.modules[*s], &family.modules[*d]);
        linear.record(r.passed_tag("linear"), || Witness::note(vec![k], "not A-linear"));
        colinear.record(r.passed_tag("colinear"), || Witness::note(vec![k], "not C-colinear"));
    }
    let mut report = Report::new();
    report.push(module_condition(family));
    report.push(linear);
    report.push(colinear);
    report
}
