//! Coalgebras over the ground field, `A`-corings and their invariant
//! grouplike elements.

mod coalgebra;
mod coring;
mod grouplike;

pub use coalgebra::{check_coalgebra, check_right_comodule, RightComodule, StructureCoalgebra};
pub use coring::{check_coring, sweedler_coring, Coring, CoringError};
pub use grouplike::{find_invariant_grouplikes, verify_grouplike, GrouplikeElement, GrouplikeSearch};
