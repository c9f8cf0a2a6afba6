use algmod::StructureAlgebra;
use exactla::{vector, Field, LaError, Scalar};
use findim::{tensor_space, BasedSpace, Condition, LinMap, Report, Witness};

/// Finitely many objects, finite-dimensional hom spaces and bilinear
/// composition. `homs[a*n + b]` is `hom(a, b)`; `compose[(a*n + b)*n + c]`
/// maps `hom(b, c) ⊗ hom(a, b) → hom(a, c)`, so `g ∘ f` sits at index
/// `g*dim hom(a, b) + f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCategory {
    pub field: Field,
    pub objects: Vec<String>,
    pub homs: Vec<BasedSpace>,
    pub compose: Vec<LinMap>,
    pub identities: Vec<Vec<Scalar>>,
}

impl LinearCategory {
    pub fn new(
        field: Field,
        objects: Vec<String>,
        homs: Vec<BasedSpace>,
        compose: Vec<LinMap>,
        identities: Vec<Vec<Scalar>>,
    ) -> Result<LinearCategory, LaError> {
        let n = objects.len();
        if homs.len() != n * n || compose.len() != n * n * n || identities.len() != n {
            return Err(LaError::Dimension(format!("{n} objects need {} hom spaces and {} composition maps", n * n, n * n * n)));
        }
        if let Some(h) = homs.iter().find(|h| h.field != field) {
            return Err(LaError::FieldMismatch(field, h.field));
        }
        let mut compose = compose;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let k = (a * n + b) * n + c;
                    let dom = tensor_space(&homs[b * n + c], &homs[a * n + b])?;
                    let m = &compose[k];
                    if m.domain.dim != dom.dim || m.codomain.dim != homs[a * n + c].dim {
                        return Err(LaError::Dimension(format!(
                            "composition at ({a},{b},{c}) must be {}x{}",
                            homs[a * n + c].dim,
                            dom.dim
                        )));
                    }
                    compose[k] = LinMap::new(dom, homs[a * n + c].clone(), m.matrix.clone())?;
                }
            }
        }
        for (a, id) in identities.iter().enumerate() {
            if id.len() != homs[a * n + a].dim {
                return Err(LaError::Dimension(format!("identity of object {a} has the wrong length")));
            }
        }
        Ok(LinearCategory { field, objects, homs, compose, identities })
    }

    /// `dims[a*n + b] = dim hom(a, b)`; `product(a, b, c, g, f)` gives the
    /// coordinates of `g ∘ f` for basis elements `g ∈ hom(b, c)`, `f ∈ hom(a, b)`.
    pub fn from_fn(
        field: Field,
        objects: Vec<String>,
        dims: &[usize],
        product: impl Fn(usize, usize, usize, usize, usize) -> Vec<Scalar>,
        identities: Vec<Vec<Scalar>>,
    ) -> Result<LinearCategory, LaError> {
        let n = objects.len();
        if dims.len() != n * n {
            return Err(LaError::Dimension(format!("{n} objects need {} hom dimensions", n * n)));
        }
        let homs: Vec<BasedSpace> = dims.iter().map(|&d| BasedSpace::new(field, d)).collect();
        let mut compose = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (dab, dbc, dac) = (dims[a * n + b], dims[b * n + c], dims[a * n + c]);
                    let mut images = Vec::with_capacity(dab * dbc);
                    for g in 0..dbc {
                        for f in 0..dab {
                            let v = product(a, b, c, g, f);
                            if v.len() != dac {
                                return Err(LaError::Dimension(format!("product at ({a},{b},{c}) must have length {dac}")));
                            }
                            images.push(v);
                        }
                    }
                    let dom = tensor_space(&homs[b * n + c], &homs[a * n + b])?;
                    compose.push(LinMap::from_images(dom, homs[a * n + c].clone(), &images)?);
                }
            }
        }
        LinearCategory::new(field, objects, homs, compose, identities)
    }

    /// One object whose endomorphisms are `a`, with `g ∘ f = g f`.
    pub fn from_algebra(a: &StructureAlgebra) -> LinearCategory {
        LinearCategory {
            field: a.field(),
            objects: vec!["*".into()],
            homs: vec![a.space.clone()],
            compose: vec![a.mult.clone()],
            identities: vec![a.unit.clone()],
        }
    }

    /// `hom(a, b) = B` when `le[a][b]`, else 0, composing by multiplication in
    /// the commutative algebra `coeff`. `le` must be reflexive and transitive.
    pub fn preorder(le: &[Vec<bool>], coeff: &StructureAlgebra) -> Result<LinearCategory, LaError> {
        let n = le.len();
        for a in 0..n {
            if le[a].len() != n || !le[a][a] {
                return Err(LaError::Dimension("relation must be square and reflexive".into()));
            }
            for b in 0..n {
                for c in 0..n {
                    if le[a][b] && le[b][c] && !le[a][c] {
                        return Err(LaError::Dimension(format!("relation is not transitive at ({a},{b},{c})")));
                    }
                }
            }
        }
        let d = coeff.dim();
        let dims: Vec<usize> = (0..n * n).map(|k| if le[k / n][k % n] { d } else { 0 }).collect();
        let objects = (1..=n).map(|i| i.to_string()).collect();
        let ids = (0..n).map(|_| coeff.unit.clone()).collect();
        LinearCategory::from_fn(coeff.field(), objects, &dims, |_, _, _, g, f| coeff.mul(&coeff.basis(g), &coeff.basis(f)), ids)
    }

    /// Objects `1 → 2` with one arrow.
    pub fn path_a2(field: Field) -> LinearCategory {
        LinearCategory::preorder(&[vec![true, true], vec![false, true]], &StructureAlgebra::ground(field)).expect("a partial order")
    }

    pub fn n(&self) -> usize {
        self.objects.len()
    }

    pub fn hom(&self, a: usize, b: usize) -> &BasedSpace {
        &self.homs[a * self.n() + b]
    }

    pub fn hom_dim(&self, a: usize, b: usize) -> usize {
        self.hom(a, b).dim
    }

    /// `hom(b, c) ⊗ hom(a, b) → hom(a, c)`.
    pub fn composition(&self, a: usize, b: usize, c: usize) -> &LinMap {
        let n = self.n();
        &self.compose[(a * n + b) * n + c]
    }

    /// `g ∘ f` for basis elements.
    pub fn compose_basis(&self, a: usize, b: usize, c: usize, g: usize, f: usize) -> Vec<Scalar> {
        self.composition(a, b, c).image(g * self.hom_dim(a, b) + f)
    }

    /// `g ∘ f` for arbitrary vectors.
    pub fn comp(&self, a: usize, b: usize, c: usize, g: &[Scalar], f: &[Scalar]) -> Vec<Scalar> {
        self.composition(a, b, c).apply(&vector::tensor(g, f)).expect("dims")
    }

    pub fn basis(&self, a: usize, b: usize, i: usize) -> Vec<Scalar> {
        vector::unit(self.field, self.hom_dim(a, b), i)
    }

    pub fn identity(&self, a: usize) -> &[Scalar] {
        &self.identities[a]
    }
}

/// Tags `assoc` (witness `[a, b, c, d, h, g, f]` for `(h∘g)∘f ≠ h∘(g∘f)`)
/// and `unit` (witness `[a, b, f, side]`, side 0 for `1∘f`, 1 for `f∘1`).
pub fn check_category(c: &LinearCategory) -> Report {
    let n = c.n();
    let mut assoc = Condition::new("assoc");
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                for d in 0..n {
                    for h in 0..c.hom_dim(cc, d) {
                        for g in 0..c.hom_dim(b, cc) {
                            let hg = c.compose_basis(b, cc, d, h, g);
                            for f in 0..c.hom_dim(a, b) {
                                let lhs = c.comp(a, b, d, &hg, &c.basis(a, b, f));
                                let gf = c.compose_basis(a, b, cc, g, f);
                                let rhs = c.comp(a, cc, d, &c.basis(cc, d, h), &gf);
                                assoc.record(lhs == rhs, || Witness::values(vec![a, b, cc, d, h, g, f], &lhs, &rhs));
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = Condition::new("unit");
    for a in 0..n {
        for b in 0..n {
            for f in 0..c.hom_dim(a, b) {
                let fv = c.basis(a, b, f);
                let left = c.comp(a, b, b, c.identity(b), &fv);
                unit.record(left == fv, || Witness::values(vec![a, b, f, 0], &left, &fv));
                let right = c.comp(a, a, b, &fv, c.identity(a));
                unit.record(right == fv, || Witness::values(vec![a, b, f, 1], &right, &fv));
            }
        }
    }
    let mut report = Report::new();
    report.push(assoc);
    report.push(unit);
    report
}
