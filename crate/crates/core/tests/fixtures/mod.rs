//! Worked examples from the literature on identifiable scaling
//! reparametrizations, transcribed as data.

#![allow(dead_code)]

use compid::DirectedGraph;

pub fn graph(n: usize, edges: &[(usize, usize)]) -> DirectedGraph {
    DirectedGraph::new(n, edges.iter().copied()).unwrap()
}

/// Support condition holds for (2,3).
pub fn support_example() -> DirectedGraph {
    graph(4, &[(4, 1), (1, 2), (3, 2), (2, 3), (3, 4)])
}

/// L-saturating matching exists, yet `B(G)` has rank 11 of 12.
pub fn five_vertex() -> DirectedGraph {
    graph(
        5,
        &[(1, 2), (1, 3), (2, 4), (3, 5), (4, 5), (5, 4), (4, 1), (5, 1)],
    )
}

/// Expected dimension, but collapsing the exchange with 2 loses it.
pub fn exchange_example() -> DirectedGraph {
    graph(
        6,
        &[
            (2, 1),
            (4, 1),
            (1, 2),
            (3, 2),
            (6, 2),
            (2, 3),
            (5, 4),
            (3, 5),
            (4, 6),
            (5, 6),
        ],
    )
}

/// Support condition holds for (3,4); the segment 3 -> 5 -> 2 repairs it.
pub fn segment_example() -> DirectedGraph {
    graph(4, &[(2, 1), (4, 1), (1, 2), (2, 3), (4, 3), (3, 4)])
}

#[rustfmt::skip]
pub const DEFICIENT_COLUMNS: [(usize, usize); 12] = [
    (2, 3), (2, 4), (2, 5), (3, 2), (3, 4), (3, 5), (4, 2), (4, 3), (4, 5), (5, 2), (5, 3), (5, 4),
];

#[rustfmt::skip]
pub const DEFICIENT_ROWS: [(usize, usize); 12] = [
    (1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 2), (3, 4), (3, 5), (4, 1), (4, 3), (5, 1), (5, 2),
];

/// `B(G)` for [`five_vertex`] as printed, including the `+a53` at row (4,3),
/// column (4,5) where the defining formula gives `-a53`.
#[rustfmt::skip]
pub const DEFICIENT_PRINTED: [[&str; 12]; 12] = [
    ["0", "0", "0", "0", "0", "0", "a14", "0", "0", "a15", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "a14", "0", "0", "a15", "0"],
    ["a22-a33", "0", "-a53", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "a22-a44", "-a54", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "-a45", "a22-a55", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "a33-a22", "-a42", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "a33-a44", "-a54", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "-a45", "a33-a55", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "-a21", "-a31", "0", "0", "0", "0"],
    ["a42", "0", "0", "0", "0", "0", "0", "a44-a33", "a53", "0", "a45", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "-a21", "-a31", "0"],
    ["0", "0", "0", "a53", "0", "0", "a54", "0", "0", "a55-a22", "0", "-a42"],
];

/// Which parameter sits in a printed cell, ignoring sign; diagonal
/// differences map to themselves.
pub fn unsigned(cell: &str) -> &str {
    cell.strip_prefix('-').unwrap_or(cell)
}
