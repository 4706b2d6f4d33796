//! Reference matrices as printed for the eight-level construction, used as
//! golden values by the verification suite.

use crate::matrix::ComplexMatrix;

#[rustfmt::skip]
const A: [[i8; 64]; 4] = [
    [
        1, 0, 0, 0, 0, 0, 1, 0,
        0, 1, 0, 0, 0, 0, 0, 1,
        0, 0, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 0, 0,
        1, 0, 0, 0, 0, 0, 1, 0,
        0, 1, 0, 0, 0, 0, 0, 1,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 0, 0,
        0, 0, 1, 0, 1, 0, 0, 0,
        0, 0, 0, 1, 0, 1, 0, 0,
        0, 0, 1, 0, 1, 0, 0, 0,
        0, 0, 0, 1, 0, 1, 0, 0,
        0, 0, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 0, 0,
    ],
    [
         1,  0, 0, 0, 0, 0, -1,  0,
         0,  1, 0, 0, 0, 0,  0, -1,
         0,  0, 0, 0, 0, 0,  0,  0,
         0,  0, 0, 0, 0, 0,  0,  0,
         0,  0, 0, 0, 0, 0,  0,  0,
         0,  0, 0, 0, 0, 0,  0,  0,
        -1,  0, 0, 0, 0, 0,  1,  0,
         0, -1, 0, 0, 0, 0,  0,  1,
    ],
    [
        0, 0,  0,  0,  0,  0, 0, 0,
        0, 0,  0,  0,  0,  0, 0, 0,
        0, 0,  1,  0, -1,  0, 0, 0,
        0, 0,  0,  1,  0, -1, 0, 0,
        0, 0, -1,  0,  1,  0, 0, 0,
        0, 0,  0, -1,  0,  1, 0, 0,
        0, 0,  0,  0,  0,  0, 0, 0,
        0, 0,  0,  0,  0,  0, 0, 0,
    ],
];

#[rustfmt::skip]
const B: [[i8; 64]; 4] = [
    [
        1, 0, 0, 0, 0, 0, 0, 0,
        0, 1, 0, 0, 0, 0, 0, 0,
        0, 0, 1, 0, 0, 0, 0, 0,
        0, 0, 0, 1, 0, 0, 0, 0,
        0, 0, 0, 0, 1, 0, 0, 0,
        0, 0, 0, 0, 0, 1, 0, 0,
        0, 0, 0, 0, 0, 0, 1, 0,
        0, 0, 0, 0, 0, 0, 0, 1,
    ],
    [
        0, 1, 0, 0, 0, 0, 0, 0,
        1, 0, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 1, 0, 0, 0, 0,
        0, 0, 1, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 1, 0, 0,
        0, 0, 0, 0, 1, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 0, 1,
        0, 0, 0, 0, 0, 0, 1, 0,
    ],
    [
        1,  0, 0,  0, 0,  0, 0,  0,
        0, -1, 0,  0, 0,  0, 0,  0,
        0,  0, 1,  0, 0,  0, 0,  0,
        0,  0, 0, -1, 0,  0, 0,  0,
        0,  0, 0,  0, 1,  0, 0,  0,
        0,  0, 0,  0, 0, -1, 0,  0,
        0,  0, 0,  0, 0,  0, 1,  0,
        0,  0, 0,  0, 0,  0, 0, -1,
    ],
    [
         0, 1,  0, 0,  0, 0,  0, 0,
        -1, 0,  0, 0,  0, 0,  0, 0,
         0, 0,  0, 1,  0, 0,  0, 0,
         0, 0, -1, 0,  0, 0,  0, 0,
         0, 0,  0, 0,  0, 1,  0, 0,
         0, 0,  0, 0, -1, 0,  0, 0,
         0, 0,  0, 0,  0, 0,  0, 1,
         0, 0,  0, 0,  0, 0, -1, 0,
    ],
];

#[rustfmt::skip]
const SWAP_0_2: [i8; 64] = [
    1, 0, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 1, 0, 0, 0,
    0, 0, 1, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 1, 0,
    0, 1, 0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 1, 0, 0,
    0, 0, 0, 1, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0, 0, 1,
];

fn to_matrix(entries: &[i8; 64]) -> ComplexMatrix {
    let real: Vec<f64> = entries.iter().map(|&x| f64::from(x)).collect();
    ComplexMatrix::from_real(8, 8, &real).expect("8x8 integer table")
}

/// Printed `A^index` (index 1..=4), resource `|β^1>`.
pub fn printed_a(index: usize) -> ComplexMatrix {
    to_matrix(&A[index - 1])
}

/// Printed `B^index` (index 1..=4), resource `|β^1>`.
pub fn printed_b(index: usize) -> ComplexMatrix {
    to_matrix(&B[index - 1])
}

/// Printed SWAP between factors 1 and 3 (0-based: 0 and 2).
pub fn printed_swap() -> ComplexMatrix {
    to_matrix(&SWAP_0_2)
}
