use exactla::{filter_affine, solve_affine, sparse, sparse_axpy, vector, AffineSpace, LaError, Matrix, QuadraticSystem, Scalar, SparseVec};
use findim::{quotient_by_sparse, BasedSpace, Condition, LinMap, QuotientSpace, Report, Witness};

use crate::{cat_tensor, coend_offsets, CatModule, LinearFunctor};

/// `Γ_a` for each object `a` of `T`, in the coordinates of
/// [`ResContext::pair`]`(a, a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResGamma {
    pub phi: LinearFunctor,
    pub xi: LinearFunctor,
    pub elements: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug)]
pub struct ResSearch {
    /// Solutions of cond1 and cond2 in the joint coordinates of
    /// [`ResContext::offsets`], or `None` if there are none.
    pub linear: Option<AffineSpace>,
    pub solutions: Vec<ResGamma>,
    pub examined: u64,
}

/// The coends needed to evaluate a [`ResGamma`] for `φ: R → S`, `ξ: T → S`.
///
/// `pair(a, c)` is `S(φ-, ξa) ⊗_R S(ξc, φ-)`, with ambient blocks indexed by
/// the objects `b` of `R` and `f ⊗ g` at `f*dim S(ξc, φb) + g`. It is built
/// when `a = c` or `T(c, a) ≠ 0`. `triple(a)` is
/// `S(φ-, ξa) ⊗_R S(φ-, φ-) ⊗_R S(ξa, φ-)` as one quotient of
/// `⊕_(b,d) S(φb, ξa) ⊗ S(φd, φb) ⊗ S(ξa, φd)` by the relations at both
/// junctions.
#[derive(Clone, Debug)]
pub struct ResContext {
    pub phi: LinearFunctor,
    pub xi: LinearFunctor,
    pairs: Vec<Option<(QuotientSpace, Vec<usize>)>>,
    triples: Vec<(QuotientSpace, Vec<usize>)>,
    maps: Maps,
}

/// The linear and bilinear maps of the three conditions, built once.
#[derive(Clone, Debug, Default)]
struct Maps {
    /// `(c, a, t, ξ(t) ∘ -, - ∘ ξ(t))`
    naturality: Vec<(usize, usize, usize, LinMap, LinMap)>,
    multiply: Vec<LinMap>,
    middle: Vec<Matrix>,
    insert_one: Vec<LinMap>,
}

fn shifted(v: &[Scalar], embed: impl Fn(usize) -> usize) -> SparseVec {
    sparse(v).into_iter().map(|(i, c)| (embed(i), c)).collect()
}

impl ResContext {
    pub fn new(phi: &LinearFunctor, xi: &LinearFunctor) -> Result<ResContext, LaError> {
        if phi.target != xi.target {
            return Err(LaError::Dimension("φ and ξ must have the same target".into()));
        }
        let nt = xi.source.n();
        let mut pairs = Vec::with_capacity(nt * nt);
        for a in 0..nt {
            for c in 0..nt {
                if a == c || xi.source.hom_dim(c, a) > 0 {
                    let m = CatModule::hom_into(phi, xi.obj(a));
                    let n = CatModule::hom_from(phi, xi.obj(c));
                    pairs.push(Some((cat_tensor(&m, &n)?, coend_offsets(&m, &n))));
                } else {
                    pairs.push(None);
                }
            }
        }
        let triples = (0..nt).map(|a| triple(phi, xi.obj(a))).collect::<Result<Vec<_>, _>>()?;
        let mut ctx = ResContext { phi: phi.clone(), xi: xi.clone(), pairs, triples, maps: Maps::default() };
        let mut maps = Maps::default();
        for c in 0..nt {
            for a in 0..nt {
                for t in 0..xi.source.hom_dim(c, a) {
                    maps.naturality.push((c, a, t, ctx.left_t(c, a, t), ctx.right_t(c, a, t)));
                }
            }
        }
        for a in 0..nt {
            maps.multiply.push(ctx.multiply(a));
            maps.middle.push(ctx.middle(a));
            maps.insert_one.push(ctx.insert_one(a));
        }
        ctx.maps = maps;
        Ok(ctx)
    }

    fn nt(&self) -> usize {
        self.xi.source.n()
    }

    pub fn pair(&self, a: usize, c: usize) -> Option<&QuotientSpace> {
        self.pairs[a * self.nt() + c].as_ref().map(|p| &p.0)
    }

    pub fn triple(&self, a: usize) -> &QuotientSpace {
        &self.triples[a].0
    }

    /// Start of `Γ_a` in the joint coordinates; the last entry is the total.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = vec![0];
        for a in 0..self.nt() {
            out.push(out[a] + self.dim(a));
        }
        out
    }

    pub fn dim(&self, a: usize) -> usize {
        self.pair(a, a).expect("diagonal pairs are built").dim()
    }

    fn s_dims(&self, b: usize, a: usize, c: usize) -> (usize, usize) {
        let s = &self.phi.target;
        (s.hom_dim(self.phi.obj(b), self.xi.obj(a)), s.hom_dim(self.xi.obj(c), self.phi.obj(b)))
    }

    /// Ambient index of `f ⊗ g` in block `b` of `pair(a, c)`.
    fn pair_index(&self, a: usize, c: usize, b: usize, f: usize, g: usize) -> usize {
        let off = &self.pairs[a * self.nt() + c].as_ref().expect("built").1;
        off[b] + f * self.s_dims(b, a, c).1 + g
    }

    /// `(b, f, g)` for each quotient basis vector of `pair(a, c)`.
    fn pair_reps(&self, a: usize, c: usize) -> Vec<(usize, usize, usize)> {
        let (q, off) = self.pairs[a * self.nt() + c].as_ref().expect("built");
        q.representatives()
            .into_iter()
            .map(|i| {
                let b = off.partition_point(|&o| o <= i) - 1;
                let dg = self.s_dims(b, a, c).1;
                (b, (i - off[b]) / dg, (i - off[b]) % dg)
            })
            .collect()
    }

    /// The class of `Σ f ⊗ g` over `(b, f, g)` with `f ∈ S(φb, ξa)` and
    /// `g ∈ S(ξa, φb)`, in `pair(a, a)`.
    pub fn class_of(&self, a: usize, terms: &[(usize, Vec<Scalar>, Vec<Scalar>)]) -> Result<Vec<Scalar>, LaError> {
        let q = self.pair(a, a).expect("built");
        let mut v = vector::zeros(self.phi.target.field, q.ambient.dim);
        for (b, f, g) in terms {
            let (df, dg) = self.s_dims(*b, a, a);
            if f.len() != df || g.len() != dg {
                return Err(LaError::Dimension(format!("term in block {b} has the wrong shape")));
            }
            let t = vector::tensor(f, g);
            let start = self.pair_index(a, a, *b, 0, 0);
            for (k, x) in t.into_iter().enumerate() {
                v[start + k] = &v[start + k] + &x;
            }
        }
        q.project(&v)
    }

    /// `ξ(t) ∘ -` on the left factor, `pair(c, c) → pair(a, c)`.
    fn left_t(&self, c: usize, a: usize, t: usize) -> LinMap {
        let s = &self.phi.target;
        let (xa, xc) = (self.xi.obj(a), self.xi.obj(c));
        let xt = self.xi.on_hom(c, a).image(t);
        let target = self.pair(a, c).expect("built");
        let images: Vec<Vec<Scalar>> = self
            .pair_reps(c, c)
            .into_iter()
            .map(|(b, f, g)| {
                let pb = self.phi.obj(b);
                let tf = s.comp(pb, xc, xa, &xt, &s.basis(pb, xc, f));
                let mut v = vector::zeros(s.field, target.ambient.dim);
                for (i, x) in tf.into_iter().enumerate() {
                    v[self.pair_index(a, c, b, i, g)] = x;
                }
                target.project(&v).expect("dims")
            })
            .collect();
        LinMap::from_images(self.pair(c, c).expect("built").space().clone(), target.space().clone(), &images).expect("dims")
    }

    /// `- ∘ ξ(t)` on the right factor, `pair(a, a) → pair(a, c)`.
    fn right_t(&self, c: usize, a: usize, t: usize) -> LinMap {
        let s = &self.phi.target;
        let (xa, xc) = (self.xi.obj(a), self.xi.obj(c));
        let xt = self.xi.on_hom(c, a).image(t);
        let target = self.pair(a, c).expect("built");
        let images: Vec<Vec<Scalar>> = self
            .pair_reps(a, a)
            .into_iter()
            .map(|(b, f, g)| {
                let pb = self.phi.obj(b);
                let gt = s.comp(xc, xa, pb, &s.basis(xa, pb, g), &xt);
                let mut v = vector::zeros(s.field, target.ambient.dim);
                for (j, x) in gt.into_iter().enumerate() {
                    v[self.pair_index(a, c, b, f, j)] = x;
                }
                target.project(&v).expect("dims")
            })
            .collect();
        LinMap::from_images(self.pair(a, a).expect("built").space().clone(), target.space().clone(), &images).expect("dims")
    }

    /// `f ⊗ g ↦ f ∘ g`, `pair(a, a) → S(ξa, ξa)`.
    fn multiply(&self, a: usize) -> LinMap {
        let s = &self.phi.target;
        let xa = self.xi.obj(a);
        let images: Vec<Vec<Scalar>> =
            self.pair_reps(a, a).into_iter().map(|(b, f, g)| s.compose_basis(xa, self.phi.obj(b), xa, f, g)).collect();
        LinMap::from_images(self.pair(a, a).expect("built").space().clone(), s.hom(xa, xa).clone(), &images).expect("dims")
    }

    fn triple_index(&self, a: usize, b: usize, d: usize, x: usize, m: usize, y: usize) -> usize {
        let s = &self.phi.target;
        let (pb, pd, xa) = (self.phi.obj(b), self.phi.obj(d), self.xi.obj(a));
        let (dm, dy) = (s.hom_dim(pd, pb), s.hom_dim(xa, pd));
        self.triples[a].1[b * self.phi.source.n() + d] + (x * dm + m) * dy + y
    }

    /// `f ⊗ g ↦ f ⊗ 1 ⊗ g`, `pair(a, a) → triple(a)`.
    fn insert_one(&self, a: usize) -> LinMap {
        let s = &self.phi.target;
        let y = self.triple(a);
        let images: Vec<Vec<Scalar>> = self
            .pair_reps(a, a)
            .into_iter()
            .map(|(b, f, g)| {
                let pb = self.phi.obj(b);
                let mut v = vector::zeros(s.field, y.ambient.dim);
                for (m, x) in s.identity(pb).iter().enumerate() {
                    v[self.triple_index(a, b, b, f, m, g)] = x.clone();
                }
                y.project(&v).expect("dims")
            })
            .collect();
        LinMap::from_images(self.pair(a, a).expect("built").space().clone(), y.space().clone(), &images).expect("dims")
    }

    /// Column `i*n + j` is `f ⊗ (g ∘ f') ⊗ g'` in `triple(a)`, where `f ⊗ g`
    /// and `f' ⊗ g'` represent basis vectors `i`, `j` of `pair(a, a)`.
    fn middle(&self, a: usize) -> Matrix {
        let s = &self.phi.target;
        let xa = self.xi.obj(a);
        let y = self.triple(a);
        let reps = self.pair_reps(a, a);
        let mut cols = Vec::with_capacity(reps.len() * reps.len());
        for &(b, f, g) in &reps {
            for &(d, f2, g2) in &reps {
                let gf = s.compose_basis(self.phi.obj(d), xa, self.phi.obj(b), g, f2);
                let mut v = vector::zeros(s.field, y.ambient.dim);
                for (m, x) in gf.into_iter().enumerate() {
                    v[self.triple_index(a, b, d, f, m, g2)] = x;
                }
                cols.push(y.project(&v).expect("dims"));
            }
        }
        Matrix::from_columns(s.field, y.dim(), &cols).expect("dims")
    }

    fn split<'a>(&self, x: &'a [Scalar]) -> Result<Vec<&'a [Scalar]>, LaError> {
        let off = self.offsets();
        if x.len() != off[self.nt()] {
            return Err(LaError::Dimension(format!("Γ has {} coordinates, expected {}", x.len(), off[self.nt()])));
        }
        Ok((0..self.nt()).map(|a| &x[off[a]..off[a + 1]]).collect())
    }

    /// Tags `cond1` (witness `[c, a, t]` for `t ∈ T(c, a)`), `cond2` and
    /// `cond3` (witness `[a]`), on the concatenation of the `Γ_a`.
    pub fn verify(&self, x: &[Scalar]) -> Result<Report, LaError> {
        let g = self.split(x)?;
        let mut cond1 = Condition::new("cond1");
        for (c, a, t, l, r) in &self.maps.naturality {
            let (lhs, rhs) = (l.apply(g[*c])?, r.apply(g[*a])?);
            cond1.record(lhs == rhs, || Witness::values(vec![*c, *a, *t], &lhs, &rhs));
        }
        let mut cond2 = Condition::new("cond2");
        let mut cond3 = Condition::new("cond3");
        for a in 0..self.nt() {
            let one = self.phi.target.identity(self.xi.obj(a));
            cond2.compare(vec![a], &self.maps.multiply[a].apply(g[a])?, one);
            let lhs = self.maps.middle[a].mul_vec(&vector::tensor(g[a], g[a]))?;
            cond3.compare(vec![a], &lhs, &self.maps.insert_one[a].apply(g[a])?);
        }
        let mut report = Report::new();
        report.push(cond1);
        report.push(cond2);
        report.push(cond3);
        Ok(report)
    }

    /// cond1 and cond2 as `A x = b` in the joint coordinates.
    pub fn linear_system(&self) -> (Matrix, Vec<Scalar>) {
        let f = self.phi.target.field;
        let off = self.offsets();
        let n = off[self.nt()];
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let mut rhs = Vec::new();
        let place = |rows: &mut Vec<Vec<Scalar>>, start: usize, m: &LinMap, at: usize, sign: &Scalar| {
            for i in 0..m.codomain.dim {
                for j in 0..m.domain.dim {
                    let v = &rows[start + i][at + j] + &(sign * m.matrix.get(i, j));
                    rows[start + i][at + j] = v;
                }
            }
        };
        for (c, a, _, l, r) in &self.maps.naturality {
            let start = rows.len();
            rows.extend((0..l.codomain.dim).map(|_| vector::zeros(f, n)));
            rhs.extend(vector::zeros(f, l.codomain.dim));
            place(&mut rows, start, l, off[*c], &f.one());
            place(&mut rows, start, r, off[*a], &-f.one());
        }
        for a in 0..self.nt() {
            let m = &self.maps.multiply[a];
            let start = rows.len();
            rows.extend((0..m.codomain.dim).map(|_| vector::zeros(f, n)));
            place(&mut rows, start, m, off[a], &f.one());
            rhs.extend(self.phi.target.identity(self.xi.obj(a)).iter().cloned());
        }
        (Matrix::from_rows(f, n, &rows).expect("rows share a length"), rhs)
    }

    /// cond3 as `B(x ⊗ x) + L x = 0`, block-diagonal in the objects of `T`.
    pub fn quadratic_system(&self) -> Result<QuadraticSystem, LaError> {
        let f = self.phi.target.field;
        let off = self.offsets();
        let n = off[self.nt()];
        let w: usize = (0..self.nt()).map(|a| self.triple(a).dim()).sum();
        let mut bil = Matrix::zeros(f, w, n * n);
        let mut lin = Matrix::zeros(f, w, n);
        let mut row = 0;
        for a in 0..self.nt() {
            let (mid, ins, da) = (&self.maps.middle[a], &self.maps.insert_one[a], self.dim(a));
            for r in 0..self.triple(a).dim() {
                for i in 0..da {
                    for j in 0..da {
                        bil.set(row + r, (off[a] + i) * n + off[a] + j, mid.get(r, i * da + j).clone());
                    }
                    lin.set(row + r, off[a] + i, -ins.matrix.get(r, i).clone());
                }
            }
            row += self.triple(a).dim();
        }
        QuadraticSystem::new(&bil, &lin, &vector::zeros(f, w))
    }

    pub fn solve(&self, limit: u64) -> Result<ResSearch, LaError> {
        if self.phi.target.field.order().is_none() {
            return Err(LaError::InfiniteField);
        }
        let (a, b) = self.linear_system();
        let space = match solve_affine(&a, &b) {
            Ok(s) => s,
            Err(LaError::NoSolution) => return Ok(ResSearch { linear: None, solutions: vec![], examined: 0 }),
            Err(e) => return Err(e),
        };
        space.check_size(limit)?;
        let found = filter_affine(&space, &self.quadratic_system()?, limit)?;
        let solutions = found.solutions.iter().map(|x| self.gamma(x).expect("length")).collect();
        Ok(ResSearch { linear: Some(space), solutions, examined: found.examined })
    }

    /// Splits joint coordinates into a [`ResGamma`].
    pub fn gamma(&self, x: &[Scalar]) -> Result<ResGamma, LaError> {
        let elements = self.split(x)?.into_iter().map(|g| g.to_vec()).collect();
        Ok(ResGamma { phi: self.phi.clone(), xi: self.xi.clone(), elements })
    }
}

/// `S(φ-, x) ⊗_R S(φ-, φ-) ⊗_R S(x, φ-)` and its block offsets, indexed by
/// `b*|R| + d` for the block `S(φb, x) ⊗ S(φd, φb) ⊗ S(x, φd)`.
fn triple(phi: &LinearFunctor, x: usize) -> Result<(QuotientSpace, Vec<usize>), LaError> {
    let (r, s) = (&phi.source, &phi.target);
    let nr = r.n();
    let left = CatModule::hom_into(phi, x);
    let right = CatModule::hom_from(phi, x);
    // S(φd, φ-) as a left module for each d, S(φ-, φb) as a right module for each b
    let middle_left: Vec<CatModule> = (0..nr).map(|d| CatModule::hom_from(phi, phi.obj(d))).collect();
    let middle_right: Vec<CatModule> = (0..nr).map(|b| CatModule::hom_into(phi, phi.obj(b))).collect();
    let dims = |b: usize, d: usize| (left.values[b].dim, s.hom_dim(phi.obj(d), phi.obj(b)), right.values[d].dim);
    let mut off = vec![0];
    for b in 0..nr {
        for d in 0..nr {
            let (dx, dm, dy) = dims(b, d);
            off.push(off[b * nr + d] + dx * dm * dy);
        }
    }
    let idx = |b: usize, d: usize, x: usize, m: usize, y: usize| {
        let (_, dm, dy) = dims(b, d);
        off[b * nr + d] + (x * dm + m) * dy + y
    };
    let minus = -s.field.one();
    let mut rels = Vec::new();
    for d in 0..nr {
        for b1 in 0..nr {
            for b2 in 0..nr {
                for rr in 0..r.hom_dim(b1, b2) {
                    for xx in 0..left.values[b2].dim {
                        let xr = left.act_basis(b1, b2, rr, xx);
                        for m in 0..middle_left[d].values[b1].dim {
                            let rm = middle_left[d].act_basis(b1, b2, rr, m);
                            for y in 0..right.values[d].dim {
                                let mut rel = shifted(&xr, |i| idx(b1, d, i, m, y));
                                sparse_axpy(&mut rel, &minus, &shifted(&rm, |j| idx(b2, d, xx, j, y)));
                                rels.push(rel);
                            }
                        }
                    }
                }
            }
        }
    }
    for b in 0..nr {
        for d1 in 0..nr {
            for d2 in 0..nr {
                for rr in 0..r.hom_dim(d1, d2) {
                    for xx in 0..left.values[b].dim {
                        for m in 0..middle_right[b].values[d2].dim {
                            let mr = middle_right[b].act_basis(d1, d2, rr, m);
                            for y in 0..right.values[d1].dim {
                                let ry = right.act_basis(d1, d2, rr, y);
                                let mut rel = shifted(&mr, |j| idx(b, d1, xx, j, y));
                                sparse_axpy(&mut rel, &minus, &shifted(&ry, |k| idx(b, d2, xx, m, k)));
                                rels.push(rel);
                            }
                        }
                    }
                }
            }
        }
    }
    let q = quotient_by_sparse(&BasedSpace::new(s.field, off[nr * nr]), rels)?;
    Ok((q, off))
}

impl ResGamma {
    pub fn new(phi: LinearFunctor, xi: LinearFunctor, elements: Vec<Vec<Scalar>>) -> Result<ResGamma, LaError> {
        let ctx = ResContext::new(&phi, &xi)?;
        if elements.len() != xi.source.n() {
            return Err(LaError::Dimension(format!("Γ needs {} elements", xi.source.n())));
        }
        for (a, e) in elements.iter().enumerate() {
            if e.len() != ctx.dim(a) {
                return Err(LaError::Dimension(format!("Γ_{a} must have {} coordinates", ctx.dim(a))));
            }
        }
        Ok(ResGamma { phi, xi, elements })
    }

    /// `Γ_a = 1_a ⊗ 1_a` for `φ = ξ = id`.
    pub fn identity(c: &crate::LinearCategory) -> ResGamma {
        let id = LinearFunctor::identity(c);
        let ctx = ResContext::new(&id, &id).expect("same target");
        let elements = (0..c.n())
            .map(|a| ctx.class_of(a, &[(a, c.identity(a).to_vec(), c.identity(a).to_vec())]).expect("shape"))
            .collect();
        ResGamma { phi: id.clone(), xi: id, elements }
    }

    pub fn joint(&self) -> Vec<Scalar> {
        self.elements.concat()
    }
}

pub fn check_res_certificate(gamma: &ResGamma) -> Result<Report, LaError> {
    ResContext::new(&gamma.phi, &gamma.xi)?.verify(&gamma.joint())
}

/// All `Γ` satisfying cond1–cond3, in lexicographic order of the kernel
/// coefficients of the cond1+cond2 solution space.
pub fn solve_res_certificate(phi: &LinearFunctor, xi: &LinearFunctor, limit: u64) -> Result<ResSearch, LaError> {
    ResContext::new(phi, xi)?.solve(limit)
}
