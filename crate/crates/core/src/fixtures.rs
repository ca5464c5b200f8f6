//! Worked examples shared by the unit tests, the verification harness, and
//! the CLI golden tests.

use crate::tableau::{PuncturedTableau, Tableau};

/// The running punctured example: shape `(5,4,3,3,1)` with holes at
/// `(1,2), (1,3), (2,4), (3,1), (4,1), (4,2)`.
///
/// ```text
/// 2 o o 2 4
/// 3 4 4 o
/// o 6 8
/// o o 9
/// 5
/// ```
pub fn punctured_example() -> PuncturedTableau {
    PuncturedTableau::parse("2 o o 2 4\n3 4 4 o\no 6 8\no o 9\n5", 9).unwrap()
}

/// The symplectic tableau that feeds the row-insertion and Berele examples.
pub fn berele_input_example() -> Tableau {
    Tableau::parse("1 1 2 3 3\n3 3 4 8\n6 6 8\n8 8 9\n9", 10).unwrap()
}

/// Input to the sliding example: one hole at `(2,1)`.
pub fn sliding_example() -> PuncturedTableau {
    PuncturedTableau::parse("1 1 2 2 3\no 3 3 8\n6 6 8\n8 8 9\n9", 9).unwrap()
}

/// Output of sliding the hole at `(2,1)`: route `(1,3,3,3)`, terminal row 4.
pub fn sliding_example_result() -> PuncturedTableau {
    PuncturedTableau::parse("1 1 2 2 3\n3 3 8 8\n6 6 9\n8 8 o\n9", 9).unwrap()
}

/// Input to the rectification example: holes at `(2,1)` and `(3,1)`.
pub fn rectification_example() -> PuncturedTableau {
    PuncturedTableau::parse("1 1 2 2 3\no 3 3 8\no 6 8\n6 8 9\n8\n9", 9).unwrap()
}

/// The rectified tableau.
pub fn rectification_example_result() -> Tableau {
    Tableau::parse("1 1 2 2 3\n3 3 8 8\n6 6 9\n8 8\n9", 9).unwrap()
}

/// The non-symplectic tableau fed to the first-column pruning example
/// (it equals `berele_input_example` row-inserted with 2).
pub fn suc_example() -> Tableau {
    Tableau::parse("1 1 2 2 3\n3 3 3 8\n4 6 8\n6 8 9\n8\n9", 10).unwrap()
}

/// The Berele insertion result for `(berele_input_example, 2)`, which is
/// also the fixed point reached from `suc_example`.
pub fn berele_example_result() -> Tableau {
    Tableau::parse("1 1 2 2 3\n3 3 8 8\n6 6 9\n8 8\n9", 10).unwrap()
}
