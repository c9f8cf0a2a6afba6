use exactla::{vector, Field, LaError, Scalar};
use findim::{apply_tensor, tensor_space, BasedSpace, Condition, LinMap, Report};

/// Counital coassociative coalgebra `(C, Δ, ε)` over the ground field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureCoalgebra {
    pub space: BasedSpace,
    /// `C → C ⊗ C`
    pub comult: LinMap,
    /// `C → k`
    pub counit: LinMap,
}

impl StructureCoalgebra {
    pub fn new(space: BasedSpace, comult: LinMap, counit: LinMap) -> Result<StructureCoalgebra, LaError> {
        let n = space.dim;
        if comult.domain.dim != n || comult.codomain.dim != n * n {
            return Err(LaError::Dimension(format!("comultiplication must be {}x{n}", n * n)));
        }
        if counit.domain.dim != n || counit.codomain.dim != 1 {
            return Err(LaError::Dimension(format!("counit must be 1x{n}")));
        }
        let comult = LinMap::new(space.clone(), tensor_space(&space, &space)?, comult.matrix)?;
        let counit = LinMap::new(space.clone(), BasedSpace::ground(space.field), counit.matrix)?;
        Ok(StructureCoalgebra { space, comult, counit })
    }

    /// Builds the coalgebra from `Δ(c_i)` and `ε(c_i)`.
    pub fn from_table(
        space: BasedSpace,
        comult: impl Fn(usize) -> Vec<Scalar>,
        counit: impl Fn(usize) -> Scalar,
    ) -> Result<StructureCoalgebra, LaError> {
        let n = space.dim;
        let d = LinMap::from_images(space.clone(), tensor_space(&space, &space)?, &(0..n).map(&comult).collect::<Vec<_>>())?;
        let e = LinMap::from_images(space.clone(), BasedSpace::ground(space.field), &(0..n).map(|i| vec![counit(i)]).collect::<Vec<_>>())?;
        StructureCoalgebra::new(space, d, e)
    }

    /// `k` with `Δ(1) = 1 ⊗ 1`.
    pub fn ground(field: Field) -> StructureCoalgebra {
        StructureCoalgebra::grouplike(field, 1)
    }

    /// The group coalgebra on `n` grouplikes `g_i`: `Δ(g_i) = g_i ⊗ g_i`, `ε(g_i) = 1`.
    pub fn grouplike(field: Field, n: usize) -> StructureCoalgebra {
        let labels = if n == 1 { vec!["1".into()] } else { (0..n).map(|i| format!("g{}", i + 1)).collect() };
        let space = BasedSpace::with_labels(field, labels).expect("distinct labels");
        StructureCoalgebra::from_table(space, |i| vector::unit(field, n * n, i * n + i), |_| field.one()).expect("valid table")
    }

    /// Comatrix coalgebra: `Δ(e_ij) = Σ_k e_ik ⊗ e_kj`, `ε(e_ij) = δ_ij`, with
    /// `e_ij` at index `i*n + j`.
    pub fn comatrix(field: Field, n: usize) -> StructureCoalgebra {
        let d = n * n;
        let labels = (0..d).map(|k| format!("e{}{}", k / n + 1, k % n + 1)).collect();
        let space = BasedSpace::with_labels(field, labels).expect("distinct labels");
        StructureCoalgebra::from_table(
            space,
            |a| {
                let (i, j) = (a / n, a % n);
                let mut v = vector::zeros(field, d * d);
                for k in 0..n {
                    v[(i * n + k) * d + k * n + j] = field.one();
                }
                v
            },
            |a| if a / n == a % n { field.one() } else { field.zero() },
        )
        .expect("valid table")
    }

    pub fn field(&self) -> Field {
        self.space.field
    }

    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.field(), self.dim(), i)
    }

    pub fn identity(&self) -> LinMap {
        LinMap::identity(&self.space)
    }

    pub fn delta(&self, c: &[Scalar]) -> Vec<Scalar> {
        self.comult.apply(c).expect("dimensions")
    }

    pub fn epsilon(&self, c: &[Scalar]) -> Scalar {
        self.counit.apply(c).expect("dimensions")[0].clone()
    }
}

/// `coassoc`, `counit-left` (`(ε⊗1)Δ = 1`), `counit-right`; witnesses at the
/// basis index.
pub fn check_coalgebra(c: &StructureCoalgebra) -> Report {
    let id = c.identity();
    let mut coassoc = Condition::new("coassoc");
    let mut left = Condition::new("counit-left");
    let mut right = Condition::new("counit-right");
    for i in 0..c.dim() {
        let d = c.delta(&c.basis(i));
        let l = apply_tensor(&c.comult, &id, &d).expect("dims");
        let r = apply_tensor(&id, &c.comult, &d).expect("dims");
        coassoc.compare(vec![i], &l, &r);
        // k ⊗ C and C ⊗ k are identified with C
        left.compare(vec![i], &apply_tensor(&c.counit, &id, &d).expect("dims"), &c.basis(i));
        right.compare(vec![i], &apply_tensor(&id, &c.counit, &d).expect("dims"), &c.basis(i));
    }
    let mut report = Report::new();
    for cond in [coassoc, left, right] {
        report.push(cond);
    }
    report
}

/// `ρ: M → M ⊗ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComodule {
    pub coalgebra: StructureCoalgebra,
    pub space: BasedSpace,
    pub coaction: LinMap,
}

impl RightComodule {
    pub fn new(coalgebra: StructureCoalgebra, space: BasedSpace, coaction: LinMap) -> Result<RightComodule, LaError> {
        if coaction.domain.dim != space.dim || coaction.codomain.dim != space.dim * coalgebra.dim() {
            return Err(LaError::Dimension(format!(
                "coaction must be {}x{}",
                space.dim * coalgebra.dim(),
                space.dim
            )));
        }
        let coaction = LinMap::new(space.clone(), tensor_space(&space, &coalgebra.space)?, coaction.matrix)?;
        Ok(RightComodule { coalgebra, space, coaction })
    }

    /// `C` coacting on itself by `Δ`.
    pub fn regular(c: &StructureCoalgebra) -> RightComodule {
        RightComodule { coalgebra: c.clone(), space: c.space.clone(), coaction: c.comult.clone() }
    }
}

/// `coassoc` (`(ρ⊗1)ρ = (1⊗Δ)ρ`) and `counit` (`(1⊗ε)ρ = 1`).
pub fn check_right_comodule(m: &RightComodule) -> Report {
    let id_m = LinMap::identity(&m.space);
    let id_c = m.coalgebra.identity();
    let mut coassoc = Condition::new("coassoc");
    let mut counit = Condition::new("counit");
    for i in 0..m.space.dim {
        let e = vector::unit(m.space.field, m.space.dim, i);
        let r = m.coaction.apply(&e).expect("dims");
        coassoc.compare(
            vec![i],
            &apply_tensor(&m.coaction, &id_c, &r).expect("dims"),
            &apply_tensor(&id_m, &m.coalgebra.comult, &r).expect("dims"),
        );
        counit.compare(vec![i], &apply_tensor(&id_m, &m.coalgebra.counit, &r).expect("dims"), &e);
    }
    let mut report = Report::new();
    report.push(coassoc);
    report.push(counit);
    report
}
