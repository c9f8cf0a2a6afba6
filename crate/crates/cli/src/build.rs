//! Resolves a [`SpecDocument`] into library structures, checking names and
//! shapes on the way.

use std::collections::BTreeMap;

use algmod::{AlgebraHom, LeftModule, RetractionAlpha, RightModule, SepContext, SepIdempotent, StructureAlgebra};
use coring::{sweedler_coring, CoringError, GrouplikeElement, StructureCoalgebra};
use entwine::{EntwiningStructure, ThetaMap, ZetaMap};
use exactla::{vector, Field, LaError, Matrix, Scalar};
use findim::{BasedSpace, LinMap};
use precat::{ExtAlpha, LinearCategory, LinearFunctor, ResContext, ResGamma};

use crate::doc::*;
use crate::CliError;

#[derive(Clone, Debug)]
pub enum Module {
    Left(LeftModule),
    Right(RightModule),
}

#[derive(Clone, Debug)]
pub enum Certificate {
    Retraction(RetractionAlpha),
    Idempotent(SepIdempotent),
    Theta(ThetaMap),
    Zeta(ZetaMap),
    Ext(ExtAlpha),
    Res(ResGamma),
    Grouplike(GrouplikeElement),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Retraction(_) => "retraction",
            Certificate::Idempotent(_) => "idempotent",
            Certificate::Theta(_) => "theta",
            Certificate::Zeta(_) => "zeta",
            Certificate::Ext(_) => "ext",
            Certificate::Res(_) => "res",
            Certificate::Grouplike(_) => "grouplike",
        }
    }
}

/// Every definition and certificate of a document, resolved.
#[derive(Clone, Debug)]
pub struct Env {
    pub field: Field,
    pub algebras: BTreeMap<String, StructureAlgebra>,
    pub coalgebras: BTreeMap<String, StructureCoalgebra>,
    pub homs: BTreeMap<String, AlgebraHom>,
    pub modules: BTreeMap<String, Module>,
    pub entwinings: BTreeMap<String, EntwiningStructure>,
    pub categories: BTreeMap<String, LinearCategory>,
    pub functors: BTreeMap<String, LinearFunctor>,
    pub certificates: BTreeMap<String, Certificate>,
}

pub(crate) fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

/// Wraps a library error with the place it came from.
pub(crate) fn la(ctx: &str) -> impl Fn(LaError) -> CliError + '_ {
    move |e| match e {
        LaError::LimitExceeded { .. } => CliError::Limit(format!("{ctx}: {e}")),
        _ => CliError::Input(format!("{ctx}: {e}")),
    }
}

pub(crate) fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: &str, name: &str, ctx: &str) -> Result<&'a T, CliError> {
    map.get(name).ok_or_else(|| input(format!("{ctx}: undeclared {kind} '{name}'")))
}

fn scalar(field: Field, c: &Cell, ctx: &str) -> Result<Scalar, CliError> {
    match c {
        Cell::Int(n) => Ok(Scalar::from_i64(field, *n)),
        Cell::Text(s) => Scalar::parse(field, s).map_err(la(ctx)),
    }
}

fn vector(field: Field, v: &[Cell], len: usize, ctx: &str) -> Result<Vec<Scalar>, CliError> {
    if v.len() != len {
        return Err(input(format!("{ctx}: expected {len} entries, got {}", v.len())));
    }
    v.iter().map(|c| scalar(field, c, ctx)).collect()
}

fn matrix(field: Field, rows: &Rows, shape: (usize, usize), ctx: &str) -> Result<Matrix, CliError> {
    let (r, c) = shape;
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        let got = rows.first().map_or(0, Vec::len);
        return Err(input(format!("{ctx}: matrix must be {r}x{c}, got {}x{got}", rows.len())));
    }
    let parsed: Vec<Vec<Scalar>> = rows.iter().map(|row| vector(field, row, c, ctx)).collect::<Result<_, _>>()?;
    Matrix::from_rows(field, c, &parsed).map_err(la(ctx))
}

fn map(field: Field, rows: &Rows, shape: (usize, usize), ctx: &str) -> Result<LinMap, CliError> {
    Ok(LinMap::from_matrix(matrix(field, rows, shape, ctx)?))
}

fn size(n: Option<usize>, ctx: &str) -> Result<usize, CliError> {
    n.ok_or_else(|| input(format!("{ctx}: preset needs n")))
}

fn require<'a, T>(x: &'a Option<T>, what: &str, ctx: &str) -> Result<&'a T, CliError> {
    x.as_ref().ok_or_else(|| input(format!("{ctx}: missing {what}")))
}

fn object(names: &[String], name: &str, ctx: &str) -> Result<usize, CliError> {
    names.iter().position(|o| o == name).ok_or_else(|| input(format!("{ctx}: no object '{name}'")))
}

/// Splits `"a,b"` into object indices, one per list of names.
fn objects(lists: &[&[String]], key: &str, ctx: &str) -> Result<Vec<usize>, CliError> {
    let parts: Vec<&str> = key.split(',').map(str::trim).collect();
    if parts.len() != lists.len() {
        return Err(input(format!("{ctx}: key '{key}' must name {} objects", lists.len())));
    }
    parts.iter().zip(lists).map(|(p, names)| object(names, p, ctx)).collect()
}

fn algebra(field: Field, name: &str, d: &AlgebraDef) -> Result<StructureAlgebra, CliError> {
    let ctx = format!("algebra '{name}'");
    if let Some(p) = &d.preset {
        return match p.as_str() {
            "ground" => Ok(StructureAlgebra::ground(field)),
            "matrix" => Ok(StructureAlgebra::matrix(field, size(d.n, &ctx)?)),
            "product" => Ok(StructureAlgebra::product(field, size(d.n, &ctx)?)),
            "gaussian" => Ok(StructureAlgebra::gaussian(field)),
            "dual_numbers" => Ok(StructureAlgebra::dual_numbers(field)),
            "upper_triangular" => Ok(StructureAlgebra::upper_triangular(field)),
            _ => Err(input(format!("{ctx}: unknown preset '{p}'"))),
        };
    }
    let dim = *require(&d.dim, "dim", &ctx)?;
    let mult = map(field, require(&d.mult, "mult", &ctx)?, (dim, dim * dim), &ctx)?;
    let unit = vector(field, require(&d.unit, "unit", &ctx)?, dim, &ctx)?;
    StructureAlgebra::new(BasedSpace::new(field, dim), mult, unit).map_err(la(&ctx))
}

fn coalgebra(field: Field, name: &str, d: &CoalgebraDef) -> Result<StructureCoalgebra, CliError> {
    let ctx = format!("coalgebra '{name}'");
    if let Some(p) = &d.preset {
        return match p.as_str() {
            "ground" => Ok(StructureCoalgebra::ground(field)),
            "grouplike" => Ok(StructureCoalgebra::grouplike(field, size(d.n, &ctx)?)),
            "comatrix" => Ok(StructureCoalgebra::comatrix(field, size(d.n, &ctx)?)),
            _ => Err(input(format!("{ctx}: unknown preset '{p}'"))),
        };
    }
    let dim = *require(&d.dim, "dim", &ctx)?;
    let comult = map(field, require(&d.comult, "comult", &ctx)?, (dim * dim, dim), &ctx)?;
    let counit = map(field, &vec![require(&d.counit, "counit", &ctx)?.clone()], (1, dim), &ctx)?;
    StructureCoalgebra::new(BasedSpace::new(field, dim), comult, counit).map_err(la(&ctx))
}

fn hom(env: &Env, name: &str, d: &HomDef) -> Result<AlgebraHom, CliError> {
    let ctx = format!("hom '{name}'");
    let s = lookup(&env.algebras, "algebra", &d.source, &ctx)?;
    let t = lookup(&env.algebras, "algebra", &d.target, &ctx)?;
    match (d.preset.as_deref(), &d.matrix) {
        (Some("identity"), None) if d.source == d.target => Ok(AlgebraHom::identity(s)),
        (Some("identity"), None) => Err(input(format!("{ctx}: identity needs source = target"))),
        (Some("unit"), None) if s.same_as(&StructureAlgebra::ground(env.field)) => Ok(AlgebraHom::unit_of(t)),
        (Some("unit"), None) => Err(input(format!("{ctx}: unit needs the ground algebra as source"))),
        (Some(p), None) => Err(input(format!("{ctx}: unknown preset '{p}'"))),
        (None, Some(m)) => AlgebraHom::new(s.clone(), t.clone(), map(env.field, m, (t.dim(), s.dim()), &ctx)?).map_err(la(&ctx)),
        _ => Err(input(format!("{ctx}: give exactly one of preset and matrix"))),
    }
}

fn module(env: &Env, name: &str, d: &ModuleDef) -> Result<Module, CliError> {
    let ctx = format!("module '{name}'");
    let a = lookup(&env.algebras, "algebra", &d.algebra, &ctx)?;
    if let Some(p) = &d.preset {
        if p != "regular" {
            return Err(input(format!("{ctx}: unknown preset '{p}'")));
        }
        return Ok(match d.side {
            Side::Left => Module::Left(LeftModule::regular(a)),
            Side::Right => Module::Right(RightModule::regular(a)),
        });
    }
    let dim = *require(&d.dim, "dim", &ctx)?;
    let action = map(env.field, require(&d.action, "action", &ctx)?, (dim, dim * a.dim()), &ctx)?;
    let space = BasedSpace::new(env.field, dim);
    match d.side {
        Side::Left => LeftModule::new(a.clone(), space, action).map(Module::Left),
        Side::Right => RightModule::new(a.clone(), space, action).map(Module::Right),
    }
    .map_err(la(&ctx))
}

fn entwining(env: &Env, name: &str, d: &EntwiningDef) -> Result<EntwiningStructure, CliError> {
    let ctx = format!("entwining '{name}'");
    let a = lookup(&env.algebras, "algebra", &d.algebra, &ctx)?.clone();
    let c = lookup(&env.coalgebras, "coalgebra", &d.coalgebra, &ctx)?.clone();
    match (d.preset.as_deref(), &d.psi) {
        (Some("swap"), None) => EntwiningStructure::swap(a, c).map_err(la(&ctx)),
        (Some(p), None) => Err(input(format!("{ctx}: unknown preset '{p}'"))),
        (None, Some(m)) => {
            let n = a.dim() * c.dim();
            EntwiningStructure::new(a, c, map(env.field, m, (n, n), &ctx)?).map_err(la(&ctx))
        }
        _ => Err(input(format!("{ctx}: give exactly one of preset and psi"))),
    }
}

fn category(env: &Env, name: &str, d: &CategoryDef) -> Result<LinearCategory, CliError> {
    let ctx = format!("category '{name}'");
    let f = env.field;
    let coeff = match &d.algebra {
        Some(a) => lookup(&env.algebras, "algebra", a, &ctx)?.clone(),
        None => StructureAlgebra::ground(f),
    };
    let named = |mut c: LinearCategory| -> Result<LinearCategory, CliError> {
        if !d.objects.is_empty() {
            if d.objects.len() != c.n() {
                return Err(input(format!("{ctx}: expected {} object names", c.n())));
            }
            c.objects = d.objects.clone();
        }
        Ok(c)
    };
    match d.preset.as_deref() {
        Some("path_a2") => return named(LinearCategory::path_a2(f)),
        Some("algebra") => {
            require(&d.algebra, "algebra", &ctx)?;
            return named(LinearCategory::from_algebra(&coeff));
        }
        Some("preorder") => {
            let n = d.objects.len();
            let mut le = vec![vec![false; n]; n];
            for (a, row) in le.iter_mut().enumerate() {
                row[a] = true;
            }
            for (a, b) in &d.le {
                le[object(&d.objects, a, &ctx)?][object(&d.objects, b, &ctx)?] = true;
            }
            return named(LinearCategory::preorder(&le, &coeff).map_err(la(&ctx))?);
        }
        Some(p) => return Err(input(format!("{ctx}: unknown preset '{p}'"))),
        None => {}
    }
    let n = d.objects.len();
    if n == 0 {
        return Err(input(format!("{ctx}: needs objects")));
    }
    let names = d.objects.as_slice();
    let mut dims = vec![0; n * n];
    for (key, &dim) in &d.homs {
        let ab = objects(&[names, names], key, &ctx)?;
        dims[ab[0] * n + ab[1]] = dim;
    }
    let homs: Vec<BasedSpace> = dims.iter().map(|&d| BasedSpace::new(f, d)).collect();
    let shape = |a: usize, b: usize, c: usize| (dims[a * n + c], dims[b * n + c] * dims[a * n + b]);
    let mut compose: Vec<LinMap> = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (r, k) = shape(a, b, c);
                compose.push(LinMap::from_matrix(Matrix::zeros(f, r, k)));
            }
        }
    }
    for (key, rows) in &d.compose {
        let abc = objects(&[names, names, names], key, &ctx)?;
        let (a, b, c) = (abc[0], abc[1], abc[2]);
        compose[(a * n + b) * n + c] = map(f, rows, shape(a, b, c), &format!("{ctx} compose {key}"))?;
    }
    let mut identities: Vec<Vec<Scalar>> = (0..n).map(|a| vector::zeros(f, dims[a * n + a])).collect();
    for (key, v) in &d.identities {
        let a = object(names, key, &ctx)?;
        identities[a] = vector(f, v, dims[a * n + a], &format!("{ctx} identity {key}"))?;
    }
    LinearCategory::new(f, d.objects.clone(), homs, compose, identities).map_err(la(&ctx))
}

fn functor(env: &Env, name: &str, d: &FunctorDef) -> Result<LinearFunctor, CliError> {
    let ctx = format!("functor '{name}'");
    match d.preset.as_deref() {
        Some("identity") => {
            let s = require(&d.source, "source", &ctx)?;
            if d.target.as_ref().is_some_and(|t| t != s) {
                return Err(input(format!("{ctx}: identity needs source = target")));
            }
            return Ok(LinearFunctor::identity(lookup(&env.categories, "category", s, &ctx)?));
        }
        Some("hom") => {
            if d.source.is_some() || d.target.is_some() {
                return Err(input(format!("{ctx}: a hom functor takes its categories from the hom")));
            }
            let h = require(&d.hom, "hom", &ctx)?;
            return Ok(LinearFunctor::from_hom(lookup(&env.homs, "hom", h, &ctx)?));
        }
        Some(p) => return Err(input(format!("{ctx}: unknown preset '{p}'"))),
        None => {}
    }
    let s = lookup(&env.categories, "category", require(&d.source, "source", &ctx)?, &ctx)?;
    let t = lookup(&env.categories, "category", require(&d.target, "target", &ctx)?, &ctx)?;
    let mut object_map = vec![usize::MAX; s.n()];
    for (a, b) in &d.objects {
        object_map[object(&s.objects, a, &ctx)?] = object(&t.objects, b, &ctx)?;
    }
    if let Some(a) = object_map.iter().position(|&x| x == usize::MAX) {
        return Err(input(format!("{ctx}: no image for object '{}'", s.objects[a])));
    }
    let n = s.n();
    let shape = |a: usize, b: usize| (t.hom_dim(object_map[a], object_map[b]), s.hom_dim(a, b));
    let mut maps: Vec<LinMap> =
        (0..n * n).map(|k| LinMap::from_matrix(Matrix::zeros(env.field, shape(k / n, k % n).0, shape(k / n, k % n).1))).collect();
    for (key, rows) in &d.maps {
        let ab = objects(&[&s.objects, &s.objects], key, &ctx)?;
        maps[ab[0] * n + ab[1]] = map(env.field, rows, shape(ab[0], ab[1]), &format!("{ctx} map {key}"))?;
    }
    LinearFunctor::new(s.clone(), t.clone(), object_map, maps).map_err(la(&ctx))
}

fn coeff(field: Field, c: &Option<Cell>, ctx: &str) -> Result<Scalar, CliError> {
    c.as_ref().map_or(Ok(field.one()), |c| scalar(field, c, ctx))
}

fn certificate(env: &Env, name: &str, d: &CertificateDef) -> Result<Certificate, CliError> {
    let ctx = format!("certificate '{name}'");
    let f = env.field;
    let hom = |n: &str| lookup(&env.homs, "hom", n, &ctx);
    let functor = |n: &str| lookup(&env.functors, "functor", n, &ctx);
    let ent = |n: &str| lookup(&env.entwinings, "entwining", n, &ctx);
    Ok(match d {
        CertificateDef::Retraction { phi, psi, matrix } => {
            let (phi, psi) = (hom(phi)?, hom(psi)?);
            let m = map(f, matrix, (phi.source.dim(), phi.target.dim()), &ctx)?;
            Certificate::Retraction(RetractionAlpha::new(phi.clone(), psi.clone(), m).map_err(la(&ctx))?)
        }
        CertificateDef::Idempotent { phi, xi, element, terms } => {
            let phi = hom(phi)?;
            let xi = match xi {
                Some(x) => hom(x)?.clone(),
                None => AlgebraHom::identity(&phi.target),
            };
            let sc = SepContext::new(phi, &xi).map_err(la(&ctx))?;
            let element = match (element, terms.is_empty()) {
                (Some(v), true) => vector(f, v, sc.dim(), &ctx)?,
                (None, false) => {
                    let d = phi.target.dim();
                    let mut acc = vector::zeros(f, d * d);
                    for t in terms {
                        let c = coeff(f, &t.coeff, &ctx)?;
                        let simple = vector::tensor(&vector(f, &t.left, d, &ctx)?, &vector(f, &t.right, d, &ctx)?);
                        vector::axpy(&mut acc, &c, &simple);
                    }
                    sc.project(&acc).map_err(la(&ctx))?
                }
                _ => return Err(input(format!("{ctx}: give exactly one of element and terms"))),
            };
            Certificate::Idempotent(SepIdempotent { base_map: phi.clone(), side_map: xi, element })
        }
        CertificateDef::Theta { entwining, matrix } => {
            let e = ent(entwining)?;
            let (da, dc) = e.dims();
            Certificate::Theta(ThetaMap::new(e.clone(), map(f, matrix, (da, dc * dc), &ctx)?).map_err(la(&ctx))?)
        }
        CertificateDef::Zeta { entwining, matrix } => {
            let e = ent(entwining)?;
            let (da, dc) = e.dims();
            Certificate::Zeta(ZetaMap::new(e.clone(), map(f, matrix, (da * da, dc), &ctx)?).map_err(la(&ctx))?)
        }
        CertificateDef::Ext { psi, phi, components } => {
            let (psi, phi) = (functor(psi)?, functor(phi)?);
            if psi.target != phi.source {
                return Err(input(format!("{ctx}: psi must land in the source of phi")));
            }
            let (q, r, s) = (&psi.source, &phi.source, &phi.target);
            let nr = r.n();
            let shape = |a: usize, b: usize| (r.hom_dim(psi.obj(a), b), s.hom_dim(phi.obj(psi.obj(a)), phi.obj(b)));
            let mut comps: Vec<LinMap> = (0..q.n() * nr)
                .map(|k| {
                    let (rows, cols) = shape(k / nr, k % nr);
                    LinMap::from_matrix(Matrix::zeros(f, rows, cols))
                })
                .collect();
            for (key, rows) in components {
                let ab = objects(&[&q.objects, &r.objects], key, &ctx)?;
                comps[ab[0] * nr + ab[1]] = map(f, rows, shape(ab[0], ab[1]), &format!("{ctx} component {key}"))?;
            }
            Certificate::Ext(ExtAlpha::new(psi.clone(), phi.clone(), comps).map_err(la(&ctx))?)
        }
        CertificateDef::Res { phi, xi, elements } => {
            let phi = functor(phi)?;
            let xi = match xi {
                Some(x) => functor(x)?.clone(),
                None => LinearFunctor::identity(&phi.target),
            };
            if xi.target != phi.target {
                return Err(input(format!("{ctx}: phi and xi must share a target")));
            }
            let rc = ResContext::new(phi, &xi).map_err(la(&ctx))?;
            let t = &xi.source;
            let mut gamma: Vec<Vec<Scalar>> = (0..t.n()).map(|a| vector::zeros(f, rc.dim(a))).collect();
            for (key, el) in elements {
                let a = object(&t.objects, key, &ctx)?;
                gamma[a] = match (&el.coords, el.terms.is_empty()) {
                    (Some(v), true) => vector(f, v, rc.dim(a), &ctx)?,
                    (None, false) => {
                        let s = &phi.target;
                        let mut terms = Vec::with_capacity(el.terms.len());
                        for term in &el.terms {
                            let b = object(&phi.source.objects, &term.via, &ctx)?;
                            let (x, y) = (phi.obj(b), xi.obj(a));
                            let left = vector(f, &term.left, s.hom_dim(x, y), &ctx)?;
                            let right = vector(f, &term.right, s.hom_dim(y, x), &ctx)?;
                            terms.push((b, vector::scale(&coeff(f, &term.coeff, &ctx)?, &left), right));
                        }
                        rc.class_of(a, &terms).map_err(la(&ctx))?
                    }
                    _ => return Err(input(format!("{ctx}: element '{key}' needs exactly one of coords and terms"))),
                };
            }
            Certificate::Res(ResGamma::new(phi.clone(), xi, gamma).map_err(la(&ctx))?)
        }
        CertificateDef::Grouplike { hom: h, vector: v } => {
            let coring = sweedler_coring(hom(h)?).map_err(|e| match e {
                CoringError::La(e) => la(&ctx)(e),
                e => input(format!("{ctx}: {e}")),
            })?;
            let vector = vector(f, v, coring.dim(), &ctx)?;
            Certificate::Grouplike(GrouplikeElement { coring, vector })
        }
    })
}

/// Names must be unique across all kinds of definition and certificate.
fn check_names(doc: &SpecDocument) -> Result<(), CliError> {
    let d = &doc.definitions;
    let mut seen: BTreeMap<&str, &str> = BTreeMap::new();
    let groups: [(&str, Vec<&String>); 8] = [
        ("algebra", d.algebras.keys().collect()),
        ("coalgebra", d.coalgebras.keys().collect()),
        ("hom", d.homs.keys().collect()),
        ("module", d.modules.keys().collect()),
        ("entwining", d.entwinings.keys().collect()),
        ("category", d.categories.keys().collect()),
        ("functor", d.functors.keys().collect()),
        ("certificate", doc.certificates.keys().collect()),
    ];
    for (kind, names) in &groups {
        for n in names {
            if let Some(other) = seen.insert(n.as_str(), kind) {
                return Err(input(format!("name '{n}' is declared as both {other} and {kind}")));
            }
        }
    }
    Ok(())
}

pub fn load(doc: &SpecDocument) -> Result<Env, CliError> {
    let field: Field = doc.field.parse().map_err(la("field"))?;
    check_names(doc)?;
    let d = &doc.definitions;
    let mut env = Env {
        field,
        algebras: BTreeMap::new(),
        coalgebras: BTreeMap::new(),
        homs: BTreeMap::new(),
        modules: BTreeMap::new(),
        entwinings: BTreeMap::new(),
        categories: BTreeMap::new(),
        functors: BTreeMap::new(),
        certificates: BTreeMap::new(),
    };
    for (n, a) in &d.algebras {
        env.algebras.insert(n.clone(), algebra(field, n, a)?);
    }
    for (n, c) in &d.coalgebras {
        env.coalgebras.insert(n.clone(), coalgebra(field, n, c)?);
    }
    for (n, h) in &d.homs {
        let h = hom(&env, n, h)?;
        env.homs.insert(n.clone(), h);
    }
    for (n, m) in &d.modules {
        let m = module(&env, n, m)?;
        env.modules.insert(n.clone(), m);
    }
    for (n, e) in &d.entwinings {
        let e = entwining(&env, n, e)?;
        env.entwinings.insert(n.clone(), e);
    }
    for (n, c) in &d.categories {
        let c = category(&env, n, c)?;
        env.categories.insert(n.clone(), c);
    }
    for (n, f) in &d.functors {
        let f = functor(&env, n, f)?;
        env.functors.insert(n.clone(), f);
    }
    for (n, c) in &doc.certificates {
        let c = certificate(&env, n, c)?;
        env.certificates.insert(n.clone(), c);
    }
    Ok(env)
}
