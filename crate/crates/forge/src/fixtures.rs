//! Small structure-constant fixtures shared by the unit tests.

use crate::matrix::Matrix;
use crate::tensor::StructTensor;

/// Zinbiel product: e_0∗e_0 = e_2, e_1∗e_0 = e_2, e_1∗e_1 = e_2.
pub fn zinbiel3() -> StructTensor {
    StructTensor::from_int_entries(3, &[(0, 0, 2, 1), (1, 0, 2, 1), (1, 1, 2, 1)])
}

/// Its symmetrization: commutative, associative, radical square in e_2.
pub fn assoc3() -> StructTensor {
    StructTensor::from_int_entries(
        3,
        &[(0, 0, 2, 2), (1, 1, 2, 2), (0, 1, 2, 1), (1, 0, 2, 1)],
    )
}

/// e_0 ↦ e_0, e_1 ↦ e_1, e_2 ↦ 2e_2; a derivation of both products above.
pub fn d1() -> Matrix {
    Matrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]])
}

/// e_0 ↦ e_1, e_1 ↦ -e_0 + e_1, e_2 ↦ e_2; commutes with d1.
pub fn d2() -> Matrix {
    Matrix::from_int_rows(&[&[0, -1, 0], &[1, 1, 0], &[0, 0, 1]])
}

/// Bracket induced on assoc3 by the pair (d1, d2): [e_0, e_1] = -3e_2.
pub fn bracket3() -> StructTensor {
    StructTensor::from_int_entries(3, &[(0, 1, 2, -3), (1, 0, 2, 3)])
}

/// Pre-Lie product induced on zinbiel3 by the same pair.
pub fn diamond3() -> StructTensor {
    StructTensor::from_int_entries(
        3,
        &[(0, 0, 2, -1), (0, 1, 2, -2), (1, 0, 2, 1), (1, 1, 2, -1)],
    )
}
