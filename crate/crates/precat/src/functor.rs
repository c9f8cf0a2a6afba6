use algmod::AlgebraHom;
use exactla::{LaError, Scalar};
use findim::{Condition, LinMap, Report, Witness};

use crate::LinearCategory;

/// `hom_maps[a*n + b]: hom(a, b) → hom(Fa, Fb)` with `n` the number of
/// source objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFunctor {
    pub source: LinearCategory,
    pub target: LinearCategory,
    pub object_map: Vec<usize>,
    pub hom_maps: Vec<LinMap>,
}

impl LinearFunctor {
    pub fn new(
        source: LinearCategory,
        target: LinearCategory,
        object_map: Vec<usize>,
        hom_maps: Vec<LinMap>,
    ) -> Result<LinearFunctor, LaError> {
        if source.field != target.field {
            return Err(LaError::FieldMismatch(source.field, target.field));
        }
        let n = source.n();
        if object_map.len() != n || hom_maps.len() != n * n {
            return Err(LaError::Dimension(format!("a functor on {n} objects needs {n} object images and {} hom maps", n * n)));
        }
        if let Some(&x) = object_map.iter().find(|&&x| x >= target.n()) {
            return Err(LaError::Dimension(format!("object image {x} out of range")));
        }
        let mut maps = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let m = &hom_maps[a * n + b];
                let cod = target.hom(object_map[a], object_map[b]);
                if m.domain.dim != source.hom_dim(a, b) || m.codomain.dim != cod.dim {
                    return Err(LaError::Dimension(format!("hom map at ({a},{b}) must be {}x{}", cod.dim, source.hom_dim(a, b))));
                }
                maps.push(LinMap::new(source.hom(a, b).clone(), cod.clone(), m.matrix.clone())?);
            }
        }
        Ok(LinearFunctor { source, target, object_map, hom_maps: maps })
    }

    pub fn identity(c: &LinearCategory) -> LinearFunctor {
        let maps = c.homs.iter().map(LinMap::identity).collect();
        LinearFunctor { source: c.clone(), target: c.clone(), object_map: (0..c.n()).collect(), hom_maps: maps }
    }

    /// The functor between one-object categories induced by `h`.
    pub fn from_hom(h: &AlgebraHom) -> LinearFunctor {
        LinearFunctor {
            source: LinearCategory::from_algebra(&h.source),
            target: LinearCategory::from_algebra(&h.target),
            object_map: vec![0],
            hom_maps: vec![h.map.clone()],
        }
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &LinearFunctor) -> Result<LinearFunctor, LaError> {
        if inner.target != self.source {
            return Err(LaError::Dimension("functors are not composable".into()));
        }
        let n = inner.source.n();
        let mut maps = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                maps.push(self.on_hom(inner.object_map[a], inner.object_map[b]).compose(&inner.hom_maps[a * n + b])?);
            }
        }
        let objects = inner.object_map.iter().map(|&x| self.object_map[x]).collect();
        LinearFunctor::new(inner.source.clone(), self.target.clone(), objects, maps)
    }

    pub fn obj(&self, a: usize) -> usize {
        self.object_map[a]
    }

    pub fn on_hom(&self, a: usize, b: usize) -> &LinMap {
        &self.hom_maps[a * self.source.n() + b]
    }

    pub fn apply(&self, a: usize, b: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.on_hom(a, b).apply(v).expect("dims")
    }
}

/// Tags `identity` (witness `[a]`) and `compose` (witness `[a, b, c, g, f]`).
pub fn check_functor(f: &LinearFunctor) -> Report {
    let (s, t) = (&f.source, &f.target);
    let n = s.n();
    let mut identity = Condition::new("identity");
    for a in 0..n {
        let img = f.apply(a, a, s.identity(a));
        identity.record(img == t.identity(f.obj(a)), || Witness::values(vec![a], &img, t.identity(f.obj(a))));
    }
    let mut compose = Condition::new("compose");
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for g in 0..s.hom_dim(b, c) {
                    for h in 0..s.hom_dim(a, b) {
                        let lhs = f.apply(a, c, &s.compose_basis(a, b, c, g, h));
                        let (fg, fh) = (f.on_hom(b, c).image(g), f.on_hom(a, b).image(h));
                        let rhs = t.comp(f.obj(a), f.obj(b), f.obj(c), &fg, &fh);
                        compose.record(lhs == rhs, || Witness::values(vec![a, b, c, g, h], &lhs, &rhs));
                    }
                }
            }
        }
    }
    let mut report = Report::new();
    report.push(identity);
    report.push(compose);
    report
}
