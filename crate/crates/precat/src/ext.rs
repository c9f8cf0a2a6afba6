use exactla::{LaError, Scalar};
use findim::{Condition, LinMap, Report, Witness};

use crate::LinearFunctor;

/// Components `α_(a,b): S(φψa, φb) → R(ψa, b)` for `Q →ψ R →φ S`, stored at
/// `a*|R| + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtAlpha {
    pub psi: LinearFunctor,
    pub phi: LinearFunctor,
    pub components: Vec<LinMap>,
}

impl ExtAlpha {
    pub fn new(psi: LinearFunctor, phi: LinearFunctor, components: Vec<LinMap>) -> Result<ExtAlpha, LaError> {
        if psi.target != phi.source {
            return Err(LaError::Dimension("ψ must land in the source of φ".into()));
        }
        let (nq, nr) = (psi.source.n(), phi.source.n());
        if components.len() != nq * nr {
            return Err(LaError::Dimension(format!("α needs {} components", nq * nr)));
        }
        let (r, s) = (&phi.source, &phi.target);
        let mut checked = Vec::with_capacity(nq * nr);
        for a in 0..nq {
            for b in 0..nr {
                let dom = s.hom(phi.obj(psi.obj(a)), phi.obj(b));
                let cod = r.hom(psi.obj(a), b);
                let m = &components[a * nr + b];
                if m.domain.dim != dom.dim || m.codomain.dim != cod.dim {
                    return Err(LaError::Dimension(format!("α at ({a},{b}) must be {}x{}", cod.dim, dom.dim)));
                }
                checked.push(LinMap::new(dom.clone(), cod.clone(), m.matrix.clone())?);
            }
        }
        Ok(ExtAlpha { psi, phi, components: checked })
    }

    pub fn component(&self, a: usize, b: usize) -> &LinMap {
        &self.components[a * self.phi.source.n() + b]
    }

    fn apply(&self, a: usize, b: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.component(a, b).apply(v).expect("dims")
    }
}

/// Tags `(1)` (`α ∘ φ = id`, witness `[a, b, r]`), `(2)`
/// (`α(g∘f) = α(g∘φα(f))`, witness `[a, b, c, g, f]`) and `bimod`, checked on
/// hom basis elements: `[0, a, b, b', g, h]` for `g∘α(h) = α(φ(g)∘h)` and
/// `[1, a', a, b, q, h]` for `α(h)∘ψ(q) = α(h∘φψ(q))`.
pub fn check_ext_certificate(alpha: &ExtAlpha) -> Report {
    let (psi, phi) = (&alpha.psi, &alpha.phi);
    let (q, r, s) = (&psi.source, &phi.source, &phi.target);
    let (nq, nr) = (q.n(), r.n());
    let top = |a: usize| phi.obj(psi.obj(a));

    let mut one = Condition::new("(1)");
    for a in 0..nq {
        for b in 0..nr {
            for i in 0..r.hom_dim(psi.obj(a), b) {
                let back = alpha.apply(a, b, &phi.on_hom(psi.obj(a), b).image(i));
                let e = r.basis(psi.obj(a), b, i);
                one.record(back == e, || Witness::values(vec![a, b, i], &back, &e));
            }
        }
    }

    let mut two = Condition::new("(2)");
    for a in 0..nq {
        for b in 0..nr {
            for c in 0..nr {
                let (x, y, z) = (top(a), phi.obj(b), phi.obj(c));
                for g in 0..s.hom_dim(y, z) {
                    let gv = s.basis(y, z, g);
                    for f in 0..s.hom_dim(x, y) {
                        let lhs = alpha.apply(a, c, &s.compose_basis(x, y, z, g, f));
                        let round = phi.apply(psi.obj(a), b, &alpha.component(a, b).image(f));
                        let rhs = alpha.apply(a, c, &s.comp(x, y, z, &gv, &round));
                        two.record(lhs == rhs, || Witness::values(vec![a, b, c, g, f], &lhs, &rhs));
                    }
                }
            }
        }
    }

    let mut bimod = Condition::new("bimod");
    for a in 0..nq {
        for b in 0..nr {
            for b2 in 0..nr {
                for g in 0..r.hom_dim(b, b2) {
                    let phig = phi.on_hom(b, b2).image(g);
                    for h in 0..s.hom_dim(top(a), phi.obj(b)) {
                        let lhs = r.comp(psi.obj(a), b, b2, &r.basis(b, b2, g), &alpha.component(a, b).image(h));
                        let moved = s.comp(top(a), phi.obj(b), phi.obj(b2), &phig, &s.basis(top(a), phi.obj(b), h));
                        let rhs = alpha.apply(a, b2, &moved);
                        bimod.record(lhs == rhs, || Witness::values(vec![0, a, b, b2, g, h], &lhs, &rhs));
                    }
                }
            }
        }
    }
    for a in 0..nq {
        for a2 in 0..nq {
            for f in 0..q.hom_dim(a2, a) {
                let psif = psi.on_hom(a2, a).image(f);
                let phipsif = phi.apply(psi.obj(a2), psi.obj(a), &psif);
                for b in 0..nr {
                    for h in 0..s.hom_dim(top(a), phi.obj(b)) {
                        let lhs = r.comp(psi.obj(a2), psi.obj(a), b, &alpha.component(a, b).image(h), &psif);
                        let moved = s.comp(top(a2), top(a), phi.obj(b), &s.basis(top(a), phi.obj(b), h), &phipsif);
                        let rhs = alpha.apply(a2, b, &moved);
                        bimod.record(lhs == rhs, || Witness::values(vec![1, a2, a, b, f, h], &lhs, &rhs));
                    }
                }
            }
        }
    }

    let mut report = Report::new();
    report.push(one);
    report.push(two);
    report.push(bimod);
    report
}
