use algmod::StructureAlgebra;
use coring::StructureCoalgebra;
use exactla::{LaError, Scalar};
use findim::{tensor_space, tensor_swap, BasedSpace, Condition, LinMap, Report};

/// `(A, C, ψ)` with `ψ: C ⊗ A → A ⊗ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntwiningStructure {
    pub algebra: StructureAlgebra,
    pub coalgebra: StructureCoalgebra,
    pub psi: LinMap,
}

impl EntwiningStructure {
    pub fn new(algebra: StructureAlgebra, coalgebra: StructureCoalgebra, psi: LinMap) -> Result<EntwiningStructure, LaError> {
        if algebra.field() != coalgebra.field() {
            return Err(LaError::FieldMismatch(algebra.field(), coalgebra.field()));
        }
        let n = algebra.dim() * coalgebra.dim();
        if psi.domain.dim != n || psi.codomain.dim != n {
            return Err(LaError::Dimension(format!("ψ must be {n}x{n}")));
        }
        let psi = LinMap::new(
            tensor_space(&coalgebra.space, &algebra.space)?,
            tensor_space(&algebra.space, &coalgebra.space)?,
            psi.matrix,
        )?;
        Ok(EntwiningStructure { algebra, coalgebra, psi })
    }

    /// The flip `c ⊗ a ↦ a ⊗ c`.
    pub fn swap(algebra: StructureAlgebra, coalgebra: StructureCoalgebra) -> Result<EntwiningStructure, LaError> {
        let psi = tensor_swap(&coalgebra.space, &algebra.space)?;
        EntwiningStructure::new(algebra, coalgebra, psi)
    }

    pub fn a(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn c(&self) -> &StructureCoalgebra {
        &self.coalgebra
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.algebra.dim(), self.coalgebra.dim())
    }

    pub(crate) fn id_a(&self) -> LinMap {
        self.algebra.identity()
    }

    pub(crate) fn id_c(&self) -> LinMap {
        self.coalgebra.identity()
    }

    pub(crate) fn unit(&self) -> LinMap {
        self.algebra.unit_map()
    }
}

/// Tensor product of maps; dimensions are fixed by construction.
pub(crate) fn t(maps: &[&LinMap]) -> LinMap {
    findim::tensor_all(maps).expect("maps over one field")
}

/// Composite applied right to left.
pub(crate) fn chain(maps: &[&LinMap]) -> LinMap {
    findim::compose_all(maps).expect("composable by construction")
}

/// Map whose image of basis vector `j` is `x[j*rows .. (j+1)*rows]`.
pub(crate) fn map_from_unknowns(domain: &BasedSpace, codomain: &BasedSpace, x: &[Scalar]) -> Result<LinMap, LaError> {
    let rows = codomain.dim;
    if x.len() != rows * domain.dim {
        return Err(LaError::Dimension(format!("{} coordinates for a {}x{} map", x.len(), rows, domain.dim)));
    }
    let images: Vec<Vec<Scalar>> = (0..domain.dim).map(|j| x[j * rows..(j + 1) * rows].to_vec()).collect();
    LinMap::from_images(domain.clone(), codomain.clone(), &images)
}

/// Inverse of [`map_from_unknowns`].
pub(crate) fn unknowns_of(m: &LinMap) -> Vec<Scalar> {
    (0..m.domain.dim).flat_map(|j| m.image(j)).collect()
}

/// Tags `ent1` (multiplication), `ent2` (unit), `ent3` (comultiplication),
/// `ent4` (counit). Witnesses are basis tuples of the domain.
pub fn check_entwining(e: &EntwiningStructure) -> Report {
    let (da, dc) = e.dims();
    let (id_a, id_c, psi) = (e.id_a(), e.id_c(), &e.psi);
    let (mult, comult, counit) = (&e.algebra.mult, &e.coalgebra.comult, &e.coalgebra.counit);
    let mut report = Report::new();

    let lhs = chain(&[psi, &t(&[&id_c, mult])]);
    let rhs = chain(&[&t(&[mult, &id_c]), &t(&[&id_a, psi]), &t(&[psi, &id_a])]);
    report.push(Condition::from_maps("ent1", &lhs, &rhs, &[dc, da, da]));

    let lhs = chain(&[psi, &t(&[&id_c, &e.unit()])]);
    let rhs = t(&[&e.unit(), &id_c]);
    report.push(Condition::from_maps("ent2", &lhs, &rhs, &[dc]));

    let lhs = chain(&[&t(&[&id_a, comult]), psi]);
    let rhs = chain(&[&t(&[psi, &id_c]), &t(&[&id_c, psi]), &t(&[comult, &id_a])]);
    report.push(Condition::from_maps("ent3", &lhs, &rhs, &[dc, da]));

    let lhs = chain(&[&t(&[&id_a, counit]), psi]);
    let rhs = t(&[counit, &id_a]);
    report.push(Condition::from_maps("ent4", &lhs, &rhs, &[dc, da]));
    report
}
