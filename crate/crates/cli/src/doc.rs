//! The input document. Everything is plain data; [`crate::build`] resolves it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// A matrix or vector entry: `"3/4"`, `"-1"`, or a bare integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Int(i64),
    Text(String),
}

pub type Vector = Vec<Cell>;
pub type Rows = Vec<Vec<Cell>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub field: String,
    #[serde(default)]
    pub definitions: Definitions,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub certificates: BTreeMap<String, CertificateDef>,
    #[serde(default)]
    pub tasks: Vec<Task>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Definitions {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub coalgebras: BTreeMap<String, CoalgebraDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub homs: BTreeMap<String, HomDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub entwinings: BTreeMap<String, EntwiningDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub categories: BTreeMap<String, CategoryDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub functors: BTreeMap<String, FunctorDef>,
}

/// Either `preset` (with `n` where it takes a size) or `dim`, `mult`
/// (`dim × dim²`, column `i*dim + j` is `e_i e_j`) and `unit`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDef {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vector>,
}

/// Either `preset` or `dim`, `comult` (`dim² × dim`) and `counit` (one row).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraDef {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vector>,
}

/// `preset` is `identity` or `unit`; otherwise `matrix` is
/// `dim target × dim source`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDef {
    pub source: String,
    pub target: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Rows>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// `preset: regular`, or `dim` and `action` (`M ⊗ A → M` for right modules,
/// `A ⊗ M → M` for left ones).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDef {
    pub algebra: String,
    pub side: Side,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Rows>,
}

/// `preset: swap`, or `psi` as a square matrix `C ⊗ A → A ⊗ C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntwiningDef {
    pub algebra: String,
    pub coalgebra: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<Rows>,
}

/// Presets: `path_a2`, `algebra` (one object), `preorder` (`objects`, `le`
/// pairs, optional `algebra` of coefficients). Explicit: `objects`, `homs`
/// keyed `"a,b"`, `compose` keyed `"a,b,c"` (`hom(b,c) ⊗ hom(a,b) →
/// hom(a,c)`) and `identities`. Missing entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDef {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub le: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub homs: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub compose: BTreeMap<String, Rows>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub identities: BTreeMap<String, Vector>,
}

/// Presets: `identity` (on `source`), `hom` (the one-object functor of an
/// algebra hom). Explicit: `source`, `target`, `objects` (image of each
/// source object) and `maps` keyed `"a,b"`; missing maps are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDef {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hom: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub objects: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, Rows>,
}

/// `coeff · left ⊗ right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeff: Option<Cell>,
    pub left: Vector,
    pub right: Vector,
}

/// `coeff · f ⊗ g` with `f ∈ S(φb, ξa)`, `g ∈ S(ξa, φb)` and `b = via`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResTerm {
    pub via: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeff: Option<Cell>,
    pub left: Vector,
    pub right: Vector,
}

/// Quotient coordinates or a sum of simple tensors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResElement {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vector>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<ResTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum CertificateDef {
    /// `α: S → R` for `Q →ψ R →φ S`.
    Retraction { phi: String, psi: String, matrix: Rows },
    /// An element of `S ⊗_R S`; `xi` defaults to the identity of `S`.
    Idempotent {
        phi: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        xi: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        element: Option<Vector>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        terms: Vec<Term>,
    },
    /// `θ: C ⊗ C → A`.
    Theta { entwining: String, matrix: Rows },
    /// `ζ: C → A ⊗ A`.
    Zeta { entwining: String, matrix: Rows },
    /// Components keyed `"a,b"` by objects of the source of `psi` and of `phi`.
    Ext { psi: String, phi: String, components: BTreeMap<String, Rows> },
    /// `Γ_a` keyed by the objects of the source of `xi` (default the identity
    /// of the target of `phi`).
    Res {
        phi: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        xi: Option<String>,
        elements: BTreeMap<String, ResElement>,
    },
    /// An element of the Sweedler coring of `hom`.
    Grouplike { hom: String, vector: Vector },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    Pass,
    Fail,
    Empty,
    Nonempty,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskArgs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalgebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hom: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entwining: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub functor: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limit: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Task {
    pub op: String,
    #[serde(default)]
    pub args: TaskArgs,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Expect>,
}
