use algmod::{LeftModule, RightModule};
use exactla::{vector, LaError, Scalar};
use findim::{quotient_by, tensor_all, tensor_space, BasedSpace, Condition, LinMap, Report, Witness};

use crate::{LinearCategory, LinearFunctor};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    /// Covariant: `N(r): N(a) → N(b)` for `r ∈ hom(a, b)`.
    Left,
    /// Contravariant: `M(r): M(b) → M(a)`.
    Right,
}

/// A linear functor from the category (or its opposite) to vector spaces.
/// `actions[a*n + b]` is `hom(a, b) ⊗ N(a) → N(b)` for left modules and
/// `M(b) ⊗ hom(a, b) → M(a)` for right modules, matching the algebra case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatModule {
    pub category: LinearCategory,
    pub variance: Variance,
    pub values: Vec<BasedSpace>,
    pub actions: Vec<LinMap>,
}

impl CatModule {
    pub fn new(category: LinearCategory, variance: Variance, values: Vec<BasedSpace>, actions: Vec<LinMap>) -> Result<CatModule, LaError> {
        let n = category.n();
        if values.len() != n || actions.len() != n * n {
            return Err(LaError::Dimension(format!("a module on {n} objects needs {n} spaces and {} actions", n * n)));
        }
        if let Some(v) = values.iter().find(|v| v.field != category.field) {
            return Err(LaError::FieldMismatch(category.field, v.field));
        }
        let mut checked = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (dom, cod) = match variance {
                    Variance::Left => (tensor_space(category.hom(a, b), &values[a])?, &values[b]),
                    Variance::Right => (tensor_space(&values[b], category.hom(a, b))?, &values[a]),
                };
                let m = &actions[a * n + b];
                if m.domain.dim != dom.dim || m.codomain.dim != cod.dim {
                    return Err(LaError::Dimension(format!("action at ({a},{b}) must be {}x{}", cod.dim, dom.dim)));
                }
                checked.push(LinMap::new(dom, cod.clone(), m.matrix.clone())?);
            }
        }
        Ok(CatModule { category, variance, values, actions: checked })
    }

    pub fn zero(category: &LinearCategory, variance: Variance) -> CatModule {
        let z = BasedSpace::new(category.field, 0);
        let n = category.n();
        CatModule::new(category.clone(), variance, vec![z.clone(); n], vec![LinMap::zero(&z, &z); n * n]).expect("dims")
    }

    /// `b ↦ S(φb, x)`, acting by `f ↦ f ∘ φ(r)`.
    pub fn hom_into(phi: &LinearFunctor, x: usize) -> CatModule {
        let (r, s) = (&phi.source, &phi.target);
        let n = r.n();
        let values = (0..n).map(|b| s.hom(phi.obj(b), x).clone()).collect();
        let mut actions = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let id = LinMap::identity(s.hom(phi.obj(b), x));
                let lifted = tensor_all(&[&id, phi.on_hom(a, b)]).expect("field");
                actions.push(s.composition(phi.obj(a), phi.obj(b), x).compose(&lifted).expect("dims"));
            }
        }
        CatModule::new(r.clone(), Variance::Right, values, actions).expect("dims")
    }

    /// `b ↦ S(x, φb)`, acting by `g ↦ φ(r) ∘ g`.
    pub fn hom_from(phi: &LinearFunctor, x: usize) -> CatModule {
        let (r, s) = (&phi.source, &phi.target);
        let n = r.n();
        let values = (0..n).map(|b| s.hom(x, phi.obj(b)).clone()).collect();
        let mut actions = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let id = LinMap::identity(s.hom(x, phi.obj(a)));
                let lifted = tensor_all(&[phi.on_hom(a, b), &id]).expect("field");
                actions.push(s.composition(x, phi.obj(a), phi.obj(b)).compose(&lifted).expect("dims"));
            }
        }
        CatModule::new(r.clone(), Variance::Left, values, actions).expect("dims")
    }

    /// `hom(-, a)`.
    pub fn representable_right(c: &LinearCategory, a: usize) -> CatModule {
        CatModule::hom_into(&LinearFunctor::identity(c), a)
    }

    /// `hom(a, -)`.
    pub fn representable_left(c: &LinearCategory, a: usize) -> CatModule {
        CatModule::hom_from(&LinearFunctor::identity(c), a)
    }

    pub fn from_right_module(m: &RightModule) -> CatModule {
        let c = LinearCategory::from_algebra(&m.algebra);
        CatModule::new(c, Variance::Right, vec![m.space.clone()], vec![m.action.clone()]).expect("dims")
    }

    pub fn from_left_module(m: &LeftModule) -> CatModule {
        let c = LinearCategory::from_algebra(&m.algebra);
        CatModule::new(c, Variance::Left, vec![m.space.clone()], vec![m.action.clone()]).expect("dims")
    }

    pub fn value(&self, a: usize) -> &BasedSpace {
        &self.values[a]
    }

    pub fn action(&self, a: usize, b: usize) -> &LinMap {
        &self.actions[a * self.category.n() + b]
    }

    /// The action of `r ∈ hom(a, b)` on `x`, in whichever direction the
    /// variance dictates.
    pub fn act(&self, a: usize, b: usize, r: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let v = match self.variance {
            Variance::Left => vector::tensor(r, x),
            Variance::Right => vector::tensor(x, r),
        };
        self.action(a, b).apply(&v).expect("dims")
    }

    /// `act` on basis elements.
    pub fn act_basis(&self, a: usize, b: usize, r: usize, x: usize) -> Vec<Scalar> {
        let j = match self.variance {
            Variance::Left => r * self.values[a].dim + x,
            Variance::Right => x * self.category.hom_dim(a, b) + r,
        };
        self.action(a, b).image(j)
    }

    /// The quotient by the submodule generated by `(object, element)` pairs.
    pub fn quotient_by_generated(&self, gens: &[(usize, Vec<Scalar>)]) -> Result<CatModule, LaError> {
        let c = &self.category;
        let n = c.n();
        let mut spans: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); n];
        for (a, x) in gens {
            if *a >= n || x.len() != self.values[*a].dim {
                return Err(LaError::Dimension(format!("generator at object {a} has the wrong shape")));
            }
            for b in 0..n {
                let (from, to) = match self.variance {
                    Variance::Left => (*a, b),
                    Variance::Right => (b, *a),
                };
                for r in 0..c.hom_dim(from, to) {
                    spans[b].push(self.act(from, to, &c.basis(from, to, r), x));
                }
            }
        }
        let quotients = (0..n).map(|b| quotient_by(&self.values[b], &spans[b])).collect::<Result<Vec<_>, _>>()?;
        let mut actions = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let id_hom = LinMap::identity(c.hom(a, b));
                let m = match self.variance {
                    Variance::Left => {
                        let lift = tensor_all(&[&id_hom, &quotients[a].section])?;
                        quotients[b].projection.compose(&self.action(a, b).compose(&lift)?)?
                    }
                    Variance::Right => {
                        let lift = tensor_all(&[&quotients[b].section, &id_hom])?;
                        quotients[a].projection.compose(&self.action(a, b).compose(&lift)?)?
                    }
                };
                actions.push(m);
            }
        }
        let values = quotients.iter().map(|q| q.space().clone()).collect();
        CatModule::new(c.clone(), self.variance, values, actions)
    }

    /// Objectwise direct sum.
    pub fn direct_sum(&self, other: &CatModule) -> Result<CatModule, LaError> {
        if self.category != other.category || self.variance != other.variance {
            return Err(LaError::Dimension("summands live over different categories".into()));
        }
        let c = &self.category;
        let n = c.n();
        let f = c.field;
        let values: Vec<BasedSpace> = (0..n).map(|a| BasedSpace::new(f, self.values[a].dim + other.values[a].dim)).collect();
        let mut actions = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (src, dst) = match self.variance {
                    Variance::Left => (a, b),
                    Variance::Right => (b, a),
                };
                let d1 = self.values[src].dim;
                let mut images = Vec::new();
                let mut push = |r: usize, x: usize| {
                    let v = if x < d1 {
                        let mut v = self.act_basis(a, b, r, x);
                        v.extend(vector::zeros(f, other.values[dst].dim));
                        v
                    } else {
                        let mut v = vector::zeros(f, self.values[dst].dim);
                        v.extend(other.act_basis(a, b, r, x - d1));
                        v
                    };
                    images.push(v);
                };
                let (hd, vd) = (c.hom_dim(a, b), values[src].dim);
                match self.variance {
                    Variance::Left => (0..hd).for_each(|r| (0..vd).for_each(|x| push(r, x))),
                    Variance::Right => (0..vd).for_each(|x| (0..hd).for_each(|r| push(r, x))),
                }
                let dom = match self.variance {
                    Variance::Left => tensor_space(c.hom(a, b), &values[a])?,
                    Variance::Right => tensor_space(&values[b], c.hom(a, b))?,
                };
                actions.push(LinMap::from_images(dom, values[dst].clone(), &images)?);
            }
        }
        CatModule::new(c.clone(), self.variance, values, actions)
    }
}

/// Tags `assoc` and `unit`. Left modules: `(g∘f)·x = g·(f·x)`, witness
/// `[a, b, c, g, f, x]` with `x ∈ N(a)`. Right modules: `x·(g∘f) = (x·g)·f`
/// with `x ∈ M(c)`. `unit` witnesses are `[a, x]`.
pub fn check_cat_module(m: &CatModule) -> Report {
    let c = &m.category;
    let n = c.n();
    let mut assoc = Condition::new("assoc");
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                let start = match m.variance {
                    Variance::Left => a,
                    Variance::Right => cc,
                };
                for g in 0..c.hom_dim(b, cc) {
                    for f in 0..c.hom_dim(a, b) {
                        let gf = c.compose_basis(a, b, cc, g, f);
                        for x in 0..m.values[start].dim {
                            let lhs = m.act(a, cc, &gf, &vector::unit(c.field, m.values[start].dim, x));
                            let rhs = match m.variance {
                                Variance::Left => m.act(b, cc, &c.basis(b, cc, g), &m.act_basis(a, b, f, x)),
                                Variance::Right => m.act(a, b, &c.basis(a, b, f), &m.act_basis(b, cc, g, x)),
                            };
                            assoc.record(lhs == rhs, || Witness::values(vec![a, b, cc, g, f, x], &lhs, &rhs));
                        }
                    }
                }
            }
        }
    }
    let mut unit = Condition::new("unit");
    for a in 0..n {
        for x in 0..m.values[a].dim {
            let xv = vector::unit(c.field, m.values[a].dim, x);
            let v = m.act(a, a, c.identity(a), &xv);
            unit.record(v == xv, || Witness::values(vec![a, x], &v, &xv));
        }
    }
    let mut report = Report::new();
    report.push(assoc);
    report.push(unit);
    report
}
