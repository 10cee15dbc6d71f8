use crate::graph::{bit, DirectedGraph};

/// First pair `(i, j)` of non-input vertices, in lexicographic order, such
/// that row `j` of `A(G)` is supported inside row `i` and column `i` inside
/// column `j`. Diagonal entries count as non-zero.
///
/// Any hit forces the edge `j -> i` and rules out the expected dimension.
pub fn condition_support(g: &DirectedGraph) -> Option<(usize, usize)> {
    let n = g.n();
    let row = |v: usize| g.in_set(v) | bit(v);
    let col = |v: usize| g.out_set(v) | bit(v);
    (2..=n)
        .flat_map(|i| (2..=n).map(move |j| (i, j)))
        .find(|&(i, j)| i != j && row(j) & !row(i) == 0 && col(i) & !col(j) == 0)
}
