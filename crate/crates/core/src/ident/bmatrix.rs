use std::fmt::{self, Write as _};

use serde::Serialize;

use super::params::{trial_rng, ParameterAssignment};
use crate::algebra::{matrix::rank_capped, FieldElement, Matrix, PrimeField, Ring};
use crate::error::Result;
use crate::graph::DirectedGraph;

/// Column labels `L` and row labels `R` of `B(G)`, both lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexSets {
    #[serde(rename = "L")]
    pub l: Vec<(usize, usize)>,
    #[serde(rename = "R")]
    pub r: Vec<(usize, usize)>,
}

pub fn index_sets(g: &DirectedGraph) -> IndexSets {
    let n = g.n();
    let l = (2..=n)
        .flat_map(|i| (2..=n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let r = (1..=n)
        .flat_map(|k| (1..=n).map(move |l| (k, l)))
        .filter(|&(k, l)| k != l && !g.has_edge(l, k))
        .collect();
    IndexSets { l, r }
}

/// Symbolic entry of `B(G)`; `Pos(i, j)` is `a_ij`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BEntry {
    Zero,
    Pos(usize, usize),
    Neg(usize, usize),
    /// `a_kk - a_ll`
    DiagDiff(usize, usize),
}

impl BEntry {
    /// The parameter occupying the cell, ignoring sign.
    pub fn parameter(self) -> Option<(usize, usize)> {
        match self {
            BEntry::Zero | BEntry::DiagDiff(..) => None,
            BEntry::Pos(i, j) | BEntry::Neg(i, j) => Some((i, j)),
        }
    }

    pub fn evaluate(self, field: &PrimeField, params: &ParameterAssignment) -> FieldElement {
        let get = |i, j| params.get(i, j).expect("pattern only names free parameters");
        match self {
            BEntry::Zero => field.zero(),
            BEntry::Pos(i, j) => get(i, j),
            BEntry::Neg(i, j) => field.neg(get(i, j)),
            BEntry::DiagDiff(k, l) => field.sub(get(k, k), get(l, l)),
        }
    }
}

fn sub(i: usize, j: usize) -> String {
    if i < 10 && j < 10 {
        format!("{i}{j}")
    } else {
        format!("{i},{j}")
    }
}

impl fmt::Display for BEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BEntry::Zero => f.write_str("0"),
            BEntry::Pos(i, j) => write!(f, "a{}", sub(i, j)),
            BEntry::Neg(i, j) => write!(f, "-a{}", sub(i, j)),
            BEntry::DiagDiff(k, l) => write!(f, "a{}-a{}", sub(k, k), sub(l, l)),
        }
    }
}

/// Entry `((k,l), (i,j))` of `B(G)`.
pub fn b_entry(g: &DirectedGraph, (k, l): (usize, usize), (i, j): (usize, usize)) -> BEntry {
    if (i, j) == (k, l) {
        BEntry::DiagDiff(k, l)
    } else if i == k && g.has_edge(l, j) {
        BEntry::Neg(j, l)
    } else if j == l && g.has_edge(i, k) {
        BEntry::Pos(k, i)
    } else {
        BEntry::Zero
    }
}

pub fn b_pattern(g: &DirectedGraph) -> (IndexSets, Matrix<BEntry>) {
    let sets = index_sets(g);
    let m = Matrix::from_fn(sets.r.len(), sets.l.len(), |r, c| {
        b_entry(g, sets.r[r], sets.l[c])
    });
    (sets, m)
}

/// `B(G)` evaluated at a parameter point, with its labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexedBMatrix {
    pub index_sets: IndexSets,
    pub matrix: Matrix<FieldElement>,
}

pub fn build_b(
    g: &DirectedGraph,
    field: &PrimeField,
    params: &ParameterAssignment,
) -> Result<IndexedBMatrix> {
    params.check(g)?;
    let (index_sets, pattern) = b_pattern(g);
    let matrix = pattern.map(|e| e.evaluate(field, params));
    Ok(IndexedBMatrix { index_sets, matrix })
}

fn label((a, b): (usize, usize)) -> String {
    format!("({a},{b})")
}

/// Renders a labelled matrix: column labels on top, row labels on the left.
pub fn render_labelled<T: fmt::Display>(sets: &IndexSets, cell: impl Fn(usize, usize) -> T) -> String {
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(sets.r.len() + 1);
    grid.push(
        std::iter::once(String::new())
            .chain(sets.l.iter().map(|&p| label(p)))
            .collect(),
    );
    for (r, &rl) in sets.r.iter().enumerate() {
        let mut row = vec![label(rl)];
        row.extend((0..sets.l.len()).map(|c| cell(r, c).to_string()));
        grid.push(row);
    }
    let width = grid.iter().flatten().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for row in grid {
        let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        writeln!(out, "{}", line.join(" ").trim_end()).unwrap();
    }
    out
}

impl IndexedBMatrix {
    pub fn render(&self) -> String {
        render_labelled(&self.index_sets, |r, c| self.matrix[(r, c)].value())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<Vec<u64>> = (0..self.matrix.rows())
            .map(|r| self.matrix.row(r).iter().map(|x| x.value()).collect())
            .collect();
        serde_json::json!({
            "rows": self.index_sets.r,
            "cols": self.index_sets.l,
            "entries": entries,
        })
    }
}

/// Outcome of the randomized rank test on `B(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BRank {
    pub rank: usize,
    #[serde(rename = "L_size")]
    pub l_size: usize,
    #[serde(rename = "R_size")]
    pub r_size: usize,
    /// Evaluations actually performed; stops early at full rank.
    pub trials: usize,
    pub full_rank: bool,
}

/// Maximum rank of `B(G)` over up to `trials` random evaluations drawn
/// from `seed`.
pub fn b_rank(g: &DirectedGraph, field: &PrimeField, trials: usize, seed: u64) -> BRank {
    let (sets, pattern) = b_pattern(g);
    let (l_size, r_size) = (sets.l.len(), sets.r.len());
    let mut rng = trial_rng(seed, 0);
    let mut best = 0;
    let mut done = 0;
    while best < l_size && done < trials {
        let params = ParameterAssignment::random(g, field, &mut rng);
        let m = pattern.map(|e| e.evaluate(field, &params));
        best = best.max(rank_capped(field, &m, l_size));
        done += 1;
    }
    BRank {
        rank: best,
        l_size,
        r_size,
        trials: done,
        full_rank: best == l_size,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> DirectedGraph {
        DirectedGraph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn index_set_sizes() {
        let two = DirectedGraph::cycle(2).unwrap();
        let s = index_sets(&two);
        assert!(s.l.is_empty() && s.r.is_empty());
        let three = DirectedGraph::cycle(3).unwrap();
        let s = index_sets(&three);
        assert_eq!(s.l, vec![(2, 3), (3, 2)]);
        assert_eq!(s.r, vec![(1, 2), (2, 3), (3, 1)]);
    }

    #[test]
    fn three_cycle_columns() {
        let c = DirectedGraph::cycle(3).unwrap();
        let (sets, p) = b_pattern(&c);
        let col = |pair| {
            let c = sets.l.iter().position(|&x| x == pair).unwrap();
            let mut by_row: Vec<_> = sets
                .r
                .iter()
                .enumerate()
                .map(|(r, &rl)| (rl, p[(r, c)]))
                .collect();
            by_row.sort_by_key(|&(rl, _)| [(1, 2), (3, 1), (2, 3)].iter().position(|&x| x == rl));
            by_row.into_iter().map(|(_, e)| e).collect::<Vec<_>>()
        };
        assert_eq!(
            col((2, 3)),
            vec![BEntry::Zero, BEntry::Zero, BEntry::DiagDiff(2, 3)]
        );
        assert_eq!(
            col((3, 2)),
            vec![BEntry::Pos(1, 3), BEntry::Neg(2, 1), BEntry::Zero]
        );
    }

    #[test]
    fn entry_rendering() {
        assert_eq!(BEntry::Neg(5, 3).to_string(), "-a53");
        assert_eq!(BEntry::DiagDiff(2, 3).to_string(), "a22-a33");
        assert_eq!(BEntry::Pos(10, 2).to_string(), "a10,2");
    }

    #[test]
    fn cycles_have_full_rank() {
        let f = PrimeField::default();
        for n in 2..=7 {
            let r = b_rank(&DirectedGraph::cycle(n).unwrap(), &f, 3, 11);
            assert!(r.full_rank, "cycle {n}: {r:?}");
            assert!(r.trials <= 1);
        }
    }

    #[test]
    fn build_matches_pattern() {
        let f = PrimeField::default();
        let support_example = g(4, &[(4, 1), (1, 2), (3, 2), (2, 3), (3, 4)]);
        let p = ParameterAssignment::from_seed(&support_example, &f, 3);
        let b = build_b(&support_example, &f, &p).unwrap();
        let (_, pat) = b_pattern(&support_example);
        assert_eq!(b.matrix, pat.map(|e| e.evaluate(&f, &p)));
        assert!(b.render().lines().count() == b.index_sets.r.len() + 1);
        assert!(!b_rank(&support_example, &f, 3, 1).full_rank);
    }
}
