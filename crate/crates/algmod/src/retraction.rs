use exactla::{LaError, Scalar};
use findim::{tensor_all, Condition, LinMap, Report};

use crate::AlgebraHom;

/// Candidate `α: S → R` for `Q →ψ R →φ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractionAlpha {
    pub phi: AlgebraHom,
    pub psi: AlgebraHom,
    pub map: LinMap,
}

impl RetractionAlpha {
    pub fn new(phi: AlgebraHom, psi: AlgebraHom, map: LinMap) -> Result<RetractionAlpha, LaError> {
        if !psi.target.same_as(&phi.source) {
            return Err(LaError::Dimension("ψ must land in the source of φ".into()));
        }
        if map.domain.dim != phi.target.dim() || map.codomain.dim != phi.source.dim() {
            return Err(LaError::Dimension(format!(
                "α must be {}x{}, got {}x{}",
                phi.source.dim(),
                phi.target.dim(),
                map.codomain.dim,
                map.domain.dim
            )));
        }
        let map = LinMap::new(phi.target.space.clone(), phi.source.space.clone(), map.matrix)?;
        Ok(RetractionAlpha { phi, psi, map })
    }
}

fn condition_i(r: &RetractionAlpha) -> Condition {
    let lhs = r.map.compose(&r.phi.map).expect("dims");
    Condition::from_maps("(i)", &lhs, &r.phi.source.identity(), &[r.phi.source.dim()])
}

/// `α(s · q) = α(s) · q` where `s · q = s φψ(q)`.
fn q_linear(r: &RetractionAlpha) -> Condition {
    let (rr, s) = (&r.phi.source, &r.phi.target);
    let phipsi = r.phi.map.compose(&r.psi.map).expect("dims");
    let lhs = r.map.compose(&s.mult).expect("dims").compose(&tensor_all(&[&s.identity(), &phipsi]).expect("field")).expect("dims");
    let rhs = rr.mult.compose(&tensor_all(&[&r.map, &r.psi.map]).expect("field")).expect("dims");
    Condition::from_maps("Q-linear", &lhs, &rhs, &[s.dim(), r.psi.source.dim()])
}

/// Tags `(i)`, `(ii)` (`α(s₁ φα(s₂)) = α(s₁ s₂)`) and `Q-linear`.
pub fn verify_retraction(r: &RetractionAlpha) -> Report {
    let s = &r.phi.target;
    let mut report = Report::new();
    report.push(condition_i(r));
    let phialpha = r.phi.map.compose(&r.map).expect("dims");
    let lhs = r.map.compose(&s.mult).expect("dims").compose(&tensor_all(&[&s.identity(), &phialpha]).expect("field")).expect("dims");
    let rhs = r.map.compose(&s.mult).expect("dims");
    report.push(Condition::from_maps("(ii)", &lhs, &rhs, &[s.dim(), s.dim()]));
    report.push(q_linear(r));
    report
}

/// Basis of `ker α`.
pub fn retraction_kernel(r: &RetractionAlpha) -> Vec<Vec<Scalar>> {
    r.map.kernel()
}

/// Tags `(i)`, `Q-linear` and `left-ideal` (`α(s_j k) = 0` for basis
/// elements `s_j` and kernel basis vectors `k`; witness `at = [j, k]`).
pub fn verify_retraction_ideal(r: &RetractionAlpha) -> Report {
    let s = &r.phi.target;
    let mut report = Report::new();
    report.push(condition_i(r));
    report.push(q_linear(r));
    let mut ideal = Condition::new("left-ideal");
    let zero = exactla::vector::zeros(s.field(), r.phi.source.dim());
    for (ki, k) in retraction_kernel(r).iter().enumerate() {
        for j in 0..s.dim() {
            let v = r.map.apply(&s.mul(&s.basis(j), k)).expect("dims");
            ideal.compare(vec![j, ki], &v, &zero);
        }
    }
    report.push(ideal);
    report
}
