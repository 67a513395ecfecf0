//! Shared fixtures: a 3-dimensional differential Zinbiel algebra, the
//! structures it induces, and the values those constructions must reproduce.
//! Expected coefficients were worked out by hand and are frozen here; the
//! library has to match them exactly.

use forge::matrix::Matrix;
use forge::scalar::int;
use forge::tensor::{Element2, StructTensor};

/// Zinbiel product on basis e_0, e_1, e_2:
/// e_0∗e_0 = e_2, e_1∗e_0 = e_2, e_1∗e_1 = e_2.
pub fn zinbiel3() -> StructTensor {
    StructTensor::from_int_entries(3, &[(0, 0, 2, 1), (1, 0, 2, 1), (1, 1, 2, 1)])
}

/// First commuting derivation: e_0 ↦ e_0, e_1 ↦ e_1, e_2 ↦ 2e_2.
pub fn d1() -> Matrix {
    Matrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]])
}

/// Second commuting derivation: e_0 ↦ e_1, e_1 ↦ -e_0 + e_1, e_2 ↦ e_2.
pub fn d2() -> Matrix {
    Matrix::from_int_rows(&[&[0, -1, 0], &[1, 1, 0], &[0, 0, 1]])
}

/// Symmetrization of the Zinbiel product: the commutative associative
/// algebra with e_0·e_0 = e_1·e_1 = 2e_2, e_0·e_1 = e_1·e_0 = e_2.
pub fn assoc3() -> StructTensor {
    StructTensor::from_int_entries(
        3,
        &[(0, 0, 2, 2), (1, 1, 2, 2), (0, 1, 2, 1), (1, 0, 2, 1)],
    )
}

/// Poisson bracket induced on assoc3 by the derivation pair: [e_0, e_1] = -3e_2.
pub fn bracket3() -> StructTensor {
    StructTensor::from_int_entries(3, &[(0, 1, 2, -3), (1, 0, 2, 3)])
}

/// Companion product a⋄b = d1(a)∗d2(b) - d2(a)∗d1(b):
/// e_0⋄e_0 = -e_2, e_0⋄e_1 = -2e_2, e_1⋄e_0 = e_2, e_1⋄e_1 = -e_2.
pub fn diamond3() -> StructTensor {
    StructTensor::from_int_entries(
        3,
        &[(0, 0, 2, -1), (0, 1, 2, -2), (1, 0, 2, 1), (1, 1, 2, -1)],
    )
}

/// Genuinely non-associative 2-dimensional product used to exercise fail
/// paths: e_0·e_0 = e_0 + e_1, e_0·e_1 = e_1.
pub fn nonassoc2() -> StructTensor {
    StructTensor::from_int_entries(2, &[(0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 1, 1)])
}

// Six-dimensional double space: indices 0..2 are e_0, e_1, e_2 of assoc3,
// indices 3..5 the dual basis vectors.

/// Expected nonzero products of the 6-dimensional double of assoc3 beyond
/// those of assoc3 itself: e_0·e_5 = e_3, e_1·e_5 = e_3 + e_4 and mirror
/// images (the product is commutative).
pub fn double6_product() -> StructTensor {
    let mut c = StructTensor::zero(6);
    for (i, j, k, x) in assoc3().entries() {
        c.set(i, j, k, x);
    }
    for &(i, j, k, n) in &[
        (0usize, 5usize, 3usize, 1i64),
        (5, 0, 3, 1),
        (1, 5, 3, 1),
        (5, 1, 3, 1),
        (1, 5, 4, 1),
        (5, 1, 4, 1),
    ] {
        c.set(i, j, k, int(n));
    }
    c
}

/// Expected nonzero brackets of the double beyond bracket3:
/// [e_0, e_5] = e_3 + 2e_4, [e_1, e_5] = -e_3 + e_4 (antisymmetrized).
pub fn double6_bracket() -> StructTensor {
    let mut b = StructTensor::zero(6);
    for (i, j, k, x) in bracket3().entries() {
        b.set(i, j, k, x);
    }
    for &(i, j, k, n) in &[
        (0usize, 5usize, 3usize, 1i64),
        (0, 5, 4, 2),
        (5, 0, 3, -1),
        (5, 0, 4, -2),
        (1, 5, 3, -1),
        (1, 5, 4, 1),
        (5, 1, 3, 1),
        (5, 1, 4, -1),
    ] {
        b.set(i, j, k, int(n));
    }
    b
}

/// Expected Lie cobracket values on the double.
pub fn double6_delta_expected() -> Vec<(usize, Element2)> {
    vec![
        (
            0,
            Element2::from_int_entries(
                6,
                6,
                &[(2, 3, 1), (3, 2, -1), (2, 4, -1), (4, 2, 1)],
            ),
        ),
        (
            1,
            Element2::from_int_entries(
                6,
                6,
                &[(2, 3, 2), (3, 2, -2), (2, 4, 1), (4, 2, -1)],
            ),
        ),
        (2, Element2::zero(6, 6)),
        (3, Element2::zero(6, 6)),
        (4, Element2::zero(6, 6)),
        (5, Element2::from_int_entries(6, 6, &[(3, 4, 3), (4, 3, -3)])),
    ]
}

/// Expected cocommutative comultiplication values on the double.
pub fn double6_comult_expected() -> Vec<(usize, Element2)> {
    vec![
        (
            0,
            Element2::from_int_entries(
                6,
                6,
                &[(2, 3, -1), (3, 2, -1), (4, 2, -1), (2, 4, -1)],
            ),
        ),
        (
            1,
            Element2::from_int_entries(6, 6, &[(2, 4, -1), (4, 2, -1)]),
        ),
        (2, Element2::zero(6, 6)),
        (3, Element2::zero(6, 6)),
        (4, Element2::zero(6, 6)),
        (
            5,
            Element2::from_int_entries(
                6,
                6,
                &[(3, 3, -2), (4, 4, -2), (4, 3, -1), (3, 4, -1)],
            ),
        ),
    ]
}

/// Canonical antisymmetric element Σ e_i⊗e_i* - e_i*⊗e_i on the double.
pub fn canonical_r6() -> Element2 {
    Element2::from_int_entries(
        6,
        6,
        &[
            (0, 3, 1),
            (1, 4, 1),
            (2, 5, 1),
            (3, 0, -1),
            (4, 1, -1),
            (5, 2, -1),
        ],
    )
}
