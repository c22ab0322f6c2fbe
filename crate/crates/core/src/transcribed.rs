//! Matrix forms of the published bases, entry by entry.
//!
//! 8×8 entries are `(sign, row, col)` with rows/columns named by Z2^3 labels;
//! 7×7 entries are `(coefficient, times √2, row, col)` with 1-based indices.

pub(crate) type EForm = [(&'static str, [(i8, &'static str, &'static str); 4]); 14];
pub(crate) type SevenForm = [(&'static str, &'static [(i8, bool, u8, u8)]); 14];

pub(crate) const G2_E: EForm = [
    (
        "e1",
        [
            (1, "011", "111"),
            (-1, "111", "011"),
            (1, "110", "010"),
            (-1, "010", "110"),
        ],
    ),
    (
        "e2",
        [
            (1, "101", "001"),
            (-1, "001", "101"),
            (1, "111", "011"),
            (-1, "011", "111"),
        ],
    ),
    (
        "e3",
        [
            (1, "100", "110"),
            (-1, "110", "100"),
            (1, "111", "101"),
            (-1, "101", "111"),
        ],
    ),
    (
        "e4",
        [
            (1, "011", "001"),
            (-1, "001", "011"),
            (1, "101", "111"),
            (-1, "111", "101"),
        ],
    ),
    (
        "e5",
        [
            (1, "100", "010"),
            (-1, "010", "100"),
            (1, "101", "011"),
            (-1, "011", "101"),
        ],
    ),
    (
        "e6",
        [
            (1, "111", "001"),
            (-1, "001", "111"),
            (1, "011", "101"),
            (-1, "101", "011"),
        ],
    ),
    (
        "e7",
        [
            (1, "100", "101"),
            (-1, "101", "100"),
            (1, "110", "111"),
            (-1, "111", "110"),
        ],
    ),
    (
        "e8",
        [
            (1, "011", "010"),
            (-1, "010", "011"),
            (1, "111", "110"),
            (-1, "110", "111"),
        ],
    ),
    (
        "e9",
        [
            (1, "001", "100"),
            (-1, "100", "001"),
            (1, "011", "110"),
            (-1, "110", "011"),
        ],
    ),
    (
        "e10",
        [
            (1, "111", "010"),
            (-1, "010", "111"),
            (1, "110", "011"),
            (-1, "011", "110"),
        ],
    ),
    (
        "e11",
        [
            (1, "111", "100"),
            (-1, "100", "111"),
            (1, "110", "101"),
            (-1, "101", "110"),
        ],
    ),
    (
        "e12",
        [
            (1, "010", "001"),
            (-1, "001", "010"),
            (1, "101", "110"),
            (-1, "110", "101"),
        ],
    ),
    (
        "e13",
        [
            (1, "011", "100"),
            (-1, "100", "011"),
            (1, "110", "001"),
            (-1, "001", "110"),
        ],
    ),
    (
        "e14",
        [
            (1, "101", "010"),
            (-1, "010", "101"),
            (1, "001", "110"),
            (-1, "110", "001"),
        ],
    ),
];

pub(crate) const CASE1_E: EForm = [
    (
        "e1",
        [
            (1, "011", "111"),
            (-1, "111", "011"),
            (1, "110", "010"),
            (-1, "010", "110"),
        ],
    ),
    (
        "e2",
        [
            (1, "101", "001"),
            (-1, "001", "101"),
            (1, "111", "011"),
            (-1, "011", "111"),
        ],
    ),
    (
        "e3",
        [
            (1, "100", "110"),
            (-1, "110", "100"),
            (1, "111", "101"),
            (-1, "101", "111"),
        ],
    ),
    (
        "e4",
        [
            (1, "001", "011"),
            (-1, "011", "001"),
            (1, "101", "111"),
            (-1, "111", "101"),
        ],
    ),
    (
        "e5",
        [
            (1, "010", "100"),
            (1, "100", "010"),
            (1, "101", "011"),
            (1, "011", "101"),
        ],
    ),
    (
        "e6",
        [
            (1, "111", "001"),
            (1, "001", "111"),
            (-1, "101", "011"),
            (-1, "011", "101"),
        ],
    ),
    (
        "e7",
        [
            (1, "100", "101"),
            (-1, "101", "100"),
            (1, "110", "111"),
            (-1, "111", "110"),
        ],
    ),
    (
        "e8",
        [
            (1, "011", "010"),
            (-1, "010", "011"),
            (1, "111", "110"),
            (-1, "110", "111"),
        ],
    ),
    (
        "e9",
        [
            (1, "001", "100"),
            (-1, "100", "001"),
            (1, "011", "110"),
            (-1, "110", "011"),
        ],
    ),
    (
        "e10",
        [
            (1, "111", "010"),
            (-1, "010", "111"),
            (1, "110", "011"),
            (-1, "011", "110"),
        ],
    ),
    (
        "e11",
        [
            (1, "111", "100"),
            (-1, "100", "111"),
            (1, "110", "101"),
            (-1, "101", "110"),
        ],
    ),
    (
        "e12",
        [
            (1, "001", "010"),
            (-1, "010", "001"),
            (1, "101", "110"),
            (-1, "110", "101"),
        ],
    ),
    (
        "e13",
        [
            (-1, "011", "100"),
            (-1, "100", "011"),
            (1, "001", "110"),
            (1, "110", "001"),
        ],
    ),
    (
        "e14",
        [
            (1, "010", "101"),
            (1, "101", "010"),
            (-1, "001", "110"),
            (-1, "110", "001"),
        ],
    ),
];

pub(crate) const CASE2_E: EForm = [
    (
        "e1",
        [
            (1, "011", "111"),
            (-1, "111", "011"),
            (1, "110", "010"),
            (-1, "010", "110"),
        ],
    ),
    (
        "e2",
        [
            (1, "101", "001"),
            (-1, "001", "101"),
            (1, "111", "011"),
            (-1, "011", "111"),
        ],
    ),
    (
        "e3",
        [
            (1, "100", "110"),
            (-1, "110", "100"),
            (1, "111", "101"),
            (-1, "101", "111"),
        ],
    ),
    (
        "e4",
        [
            (1, "011", "001"),
            (-1, "001", "011"),
            (1, "101", "111"),
            (-1, "111", "101"),
        ],
    ),
    (
        "e5",
        [
            (1, "100", "010"),
            (-1, "010", "100"),
            (1, "101", "011"),
            (-1, "011", "101"),
        ],
    ),
    (
        "e6",
        [
            (1, "111", "001"),
            (-1, "001", "111"),
            (1, "011", "101"),
            (-1, "101", "011"),
        ],
    ),
    (
        "e7",
        [
            (1, "100", "101"),
            (1, "101", "100"),
            (1, "110", "111"),
            (1, "111", "110"),
        ],
    ),
    (
        "e8",
        [
            (1, "011", "010"),
            (1, "010", "011"),
            (-1, "111", "110"),
            (-1, "110", "111"),
        ],
    ),
    (
        "e9",
        [
            (1, "001", "100"),
            (-1, "100", "001"),
            (1, "011", "110"),
            (-1, "110", "011"),
        ],
    ),
    (
        "e10",
        [
            (1, "111", "010"),
            (-1, "010", "111"),
            (1, "011", "110"),
            (-1, "110", "011"),
        ],
    ),
    (
        "e11",
        [
            (1, "111", "100"),
            (1, "100", "111"),
            (-1, "110", "101"),
            (-1, "101", "110"),
        ],
    ),
    (
        "e12",
        [
            (1, "001", "010"),
            (1, "010", "001"),
            (1, "101", "110"),
            (1, "110", "101"),
        ],
    ),
    (
        "e13",
        [
            (1, "011", "100"),
            (-1, "100", "011"),
            (1, "110", "001"),
            (-1, "001", "110"),
        ],
    ),
    (
        "e14",
        [
            (1, "010", "101"),
            (-1, "101", "010"),
            (1, "001", "110"),
            (-1, "110", "001"),
        ],
    ),
];

pub(crate) const CASE3_E: EForm = [
    (
        "e1",
        [
            (1, "011", "111"),
            (-1, "111", "011"),
            (1, "110", "010"),
            (-1, "010", "110"),
        ],
    ),
    (
        "e2",
        [
            (1, "101", "001"),
            (-1, "001", "101"),
            (1, "111", "011"),
            (-1, "011", "111"),
        ],
    ),
    (
        "e3",
        [
            (1, "100", "110"),
            (-1, "110", "100"),
            (1, "111", "101"),
            (-1, "101", "111"),
        ],
    ),
    (
        "e4",
        [
            (1, "011", "001"),
            (-1, "001", "011"),
            (1, "101", "111"),
            (-1, "111", "101"),
        ],
    ),
    (
        "e5",
        [
            (1, "100", "010"),
            (-1, "010", "100"),
            (1, "101", "011"),
            (-1, "011", "101"),
        ],
    ),
    (
        "e6",
        [
            (1, "111", "001"),
            (-1, "001", "111"),
            (1, "011", "101"),
            (-1, "101", "011"),
        ],
    ),
    (
        "e7",
        [
            (1, "101", "100"),
            (-1, "100", "101"),
            (1, "110", "111"),
            (-1, "111", "110"),
        ],
    ),
    (
        "e8",
        [
            (1, "011", "010"),
            (-1, "010", "011"),
            (1, "111", "110"),
            (-1, "110", "111"),
        ],
    ),
    (
        "e9",
        [
            (1, "100", "001"),
            (-1, "001", "100"),
            (1, "011", "110"),
            (-1, "110", "011"),
        ],
    ),
    (
        "e10",
        [
            (1, "111", "010"),
            (-1, "010", "111"),
            (1, "110", "011"),
            (-1, "011", "110"),
        ],
    ),
    (
        "e11",
        [
            (1, "111", "100"),
            (1, "100", "111"),
            (1, "110", "101"),
            (1, "101", "110"),
        ],
    ),
    (
        "e12",
        [
            (1, "001", "010"),
            (1, "010", "001"),
            (-1, "101", "110"),
            (-1, "110", "101"),
        ],
    ),
    (
        "e13",
        [
            (1, "011", "100"),
            (1, "100", "011"),
            (1, "110", "001"),
            (1, "001", "110"),
        ],
    ),
    (
        "e14",
        [
            (1, "010", "101"),
            (1, "101", "010"),
            (1, "001", "110"),
            (1, "110", "001"),
        ],
    ),
];

pub(crate) const G2_7X7: SevenForm = [
    (
        "h1",
        &[
            (-1, false, 1, 1),
            (2, false, 2, 2),
            (-1, false, 3, 3),
            (1, false, 4, 4),
            (-2, false, 5, 5),
            (1, false, 6, 6),
        ],
    ),
    (
        "h2",
        &[
            (1, false, 1, 1),
            (-1, false, 2, 2),
            (-1, false, 4, 4),
            (1, false, 5, 5),
        ],
    ),
    (
        "x1",
        &[
            (1, false, 3, 5),
            (-1, false, 2, 6),
            (1, true, 7, 1),
            (-1, true, 4, 7),
        ],
    ),
    (
        "x2",
        &[
            (1, false, 1, 6),
            (-1, false, 3, 4),
            (1, true, 7, 2),
            (-1, true, 5, 7),
        ],
    ),
    (
        "x3",
        &[
            (-1, false, 1, 5),
            (1, false, 2, 4),
            (1, true, 7, 3),
            (-1, true, 6, 7),
        ],
    ),
    (
        "y1",
        &[
            (-1, false, 5, 3),
            (1, false, 6, 2),
            (-1, true, 1, 7),
            (1, true, 7, 4),
        ],
    ),
    (
        "y2",
        &[
            (-1, false, 6, 1),
            (1, false, 4, 3),
            (-1, true, 2, 7),
            (1, true, 7, 5),
        ],
    ),
    (
        "y3",
        &[
            (1, false, 5, 1),
            (-1, false, 4, 2),
            (-1, true, 3, 7),
            (1, true, 7, 6),
        ],
    ),
    ("a12", &[(1, false, 1, 2), (-1, false, 5, 4)]),
    ("a23", &[(1, false, 2, 3), (-1, false, 6, 5)]),
    ("a13", &[(1, false, 1, 3), (-1, false, 6, 4)]),
    ("a21", &[(1, false, 2, 1), (-1, false, 4, 5)]),
    ("a32", &[(1, false, 3, 2), (-1, false, 5, 6)]),
    ("a31", &[(1, false, 3, 1), (-1, false, 4, 6)]),
];

pub(crate) const COLOR_7X7: SevenForm = [
    (
        "h1",
        &[
            (-1, false, 1, 1),
            (2, false, 2, 2),
            (-1, false, 3, 3),
            (1, false, 4, 4),
            (-2, false, 5, 5),
            (1, false, 6, 6),
        ],
    ),
    (
        "h2",
        &[
            (1, false, 1, 1),
            (-1, false, 2, 2),
            (-1, false, 4, 4),
            (1, false, 5, 5),
        ],
    ),
    (
        "x1",
        &[
            (1, false, 3, 5),
            (-1, false, 2, 6),
            (1, true, 7, 1),
            (-1, true, 4, 7),
        ],
    ),
    (
        "x2",
        &[
            (-1, false, 1, 6),
            (-1, false, 3, 4),
            (1, true, 7, 2),
            (1, true, 5, 7),
        ],
    ),
    (
        "x3",
        &[
            (1, false, 1, 5),
            (-1, false, 2, 4),
            (1, true, 7, 3),
            (-1, true, 6, 7),
        ],
    ),
    (
        "y1",
        &[
            (-1, false, 5, 3),
            (1, false, 6, 2),
            (-1, true, 1, 7),
            (1, true, 7, 4),
        ],
    ),
    (
        "y2",
        &[
            (1, false, 6, 1),
            (1, false, 4, 3),
            (-1, true, 2, 7),
            (-1, true, 7, 5),
        ],
    ),
    (
        "y3",
        &[
            (1, false, 5, 1),
            (-1, false, 4, 2),
            (1, true, 3, 7),
            (-1, true, 7, 6),
        ],
    ),
    ("a12", &[(1, false, 1, 2), (-1, false, 5, 4)]),
    ("a23", &[(1, false, 2, 3), (-1, false, 6, 5)]),
    ("a13", &[(1, false, 1, 3), (1, false, 6, 4)]),
    ("a21", &[(1, false, 2, 1), (-1, false, 4, 5)]),
    ("a32", &[(1, false, 3, 2), (-1, false, 5, 6)]),
    ("a31", &[(1, false, 3, 1), (1, false, 4, 6)]),
];
