use exactla::{Field, LaError};

/// A vector space with a fixed ordered basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasedSpace {
    pub field: Field,
    pub dim: usize,
    pub labels: Option<Vec<String>>,
}

impl BasedSpace {
    pub fn new(field: Field, dim: usize) -> BasedSpace {
        BasedSpace { field, dim, labels: None }
    }

    pub fn with_labels(field: Field, labels: Vec<String>) -> Result<BasedSpace, LaError> {
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(LaError::Dimension(format!("duplicate basis label {dup:?}")));
        }
        Ok(BasedSpace { field, dim: labels.len(), labels: Some(labels) })
    }

    /// The ground field as a one-dimensional space.
    pub fn ground(field: Field) -> BasedSpace {
        BasedSpace::new(field, 1)
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{i}"),
        }
    }
}

pub fn tensor_space(m: &BasedSpace, n: &BasedSpace) -> Result<BasedSpace, LaError> {
    if m.field != n.field {
        return Err(LaError::FieldMismatch(m.field, n.field));
    }
    let labels = match (&m.labels, &n.labels) {
        (Some(a), Some(b)) => Some(a.iter().flat_map(|x| b.iter().map(move |y| format!("{x}⊗{y}"))).collect()),
        _ => None,
    };
    Ok(BasedSpace { field: m.field, dim: m.dim * n.dim, labels })
}

/// Index of `e_i ⊗ f_j` in `M ⊗ N` where `dim N = n_dim`.
pub fn tensor_index(n_dim: usize, i: usize, j: usize) -> usize {
    i * n_dim + j
}
