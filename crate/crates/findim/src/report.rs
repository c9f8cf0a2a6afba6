//! Verdicts of the checkers: one [`Condition`] per named axiom or equation,
//! each with a few witnesses when it fails.

use exactla::{vector, Scalar};
use serde::{Deserialize, Serialize};

use crate::{decode_index, LinMap};

/// Failing instances kept per condition.
pub const MAX_WITNESSES: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Basis indices (one per tensor factor) where the two sides differ.
    pub at: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn values(at: Vec<usize>, lhs: &[Scalar], rhs: &[Scalar]) -> Witness {
        Witness {
            at,
            lhs: Some(vector::to_strings(lhs)),
            rhs: Some(vector::to_strings(rhs)),
            note: None,
        }
    }

    pub fn note(at: Vec<usize>, note: impl Into<String>) -> Witness {
        Witness { at, lhs: None, rhs: None, note: Some(note.into()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub tag: String,
    pub passed: bool,
    /// Number of instances evaluated.
    pub checked: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
}

impl Condition {
    pub fn new(tag: impl Into<String>) -> Condition {
        Condition { tag: tag.into(), passed: true, checked: 0, witnesses: Vec::new() }
    }

    /// Records one instance.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    pub fn fail(&mut self, witness: Witness) {
        self.record(false, || witness);
    }

    /// Compares two vectors at a single location.
    pub fn compare(&mut self, at: Vec<usize>, lhs: &[Scalar], rhs: &[Scalar]) {
        self.record(lhs == rhs, || Witness::values(at, lhs, rhs));
    }

    /// Compares two parallel maps column by column. `factors` are the tensor
    /// factor dimensions of the domain, used to decode witness locations.
    pub fn compare_maps(&mut self, lhs: &LinMap, rhs: &LinMap, factors: &[usize]) {
        assert_eq!(lhs.domain.dim, rhs.domain.dim, "maps are not parallel");
        assert_eq!(lhs.codomain.dim, rhs.codomain.dim, "maps are not parallel");
        for j in 0..lhs.domain.dim {
            let (a, b) = (lhs.image(j), rhs.image(j));
            self.record(a == b, || Witness::values(decode_index(j, factors), &a, &b));
        }
    }

    pub fn from_maps(tag: impl Into<String>, lhs: &LinMap, rhs: &LinMap, factors: &[usize]) -> Condition {
        let mut c = Condition::new(tag);
        c.compare_maps(lhs, rhs, factors);
        c
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub conditions: Vec<Condition>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, c: Condition) {
        self.conditions.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.conditions.extend(other.conditions);
    }

    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|c| c.passed)
    }

    pub fn condition(&self, tag: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.tag == tag)
    }

    /// Whether the condition with this tag exists and passed.
    pub fn passed_tag(&self, tag: &str) -> bool {
        self.condition(tag).is_some_and(|c| c.passed)
    }

    pub fn failing_tags(&self) -> Vec<&str> {
        self.conditions.iter().filter(|c| !c.passed).map(|c| c.tag.as_str()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactla::{Field, Matrix};

    #[test]
    fn failing_condition_keeps_decoded_witness() {
        let f = Field::Prime(2);
        let id = LinMap::from_matrix(Matrix::identity(f, 4));
        let zero = LinMap::from_matrix(Matrix::zeros(f, 4, 4));
        let c = Condition::from_maps("law", &id, &zero, &[2, 2]);
        assert!(!c.passed);
        assert_eq!(c.checked, 4);
        assert_eq!(c.witnesses.len(), MAX_WITNESSES);
        assert_eq!(c.witnesses[3].at, vec![1, 1]);
    }
}
