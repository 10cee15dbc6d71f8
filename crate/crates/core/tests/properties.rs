use compid::algebra::{rank, FieldElement, Matrix, PrimeField};
use compid::canon::canonical_form;
use compid::ears::{ear_decomposition, find_nontrivial_ear_decomposition};
use compid::ident::{b_rank, decide, jacobian_rank, Config};
use compid::random::random_strongly_connected;
use compid::structure::{inductive_ordering, is_minimally_strongly_connected};
use compid::DirectedGraph;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_matrix() -> impl Strategy<Value = Matrix<FieldElement>> {
    // tiny prime so that rank deficiency actually happens
    let f = PrimeField::new(5).unwrap();
    (0usize..7, 0usize..7).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(0u64..5, r * c)
            .prop_map(move |v| Matrix::from_fn(r, c, |i, j| f.elem(v[i * c + j])))
    })
}

fn graph(max_n: usize, dense: bool) -> impl Strategy<Value = DirectedGraph> {
    (2..=max_n, any::<u64>()).prop_map(move |(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cap = if dense { n * (n - 1) } else { 2 * n - 2 };
        random_strongly_connected(n, cap, &mut rng).unwrap()
    })
}

fn relabelling(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((2..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|rest| {
        let mut label = vec![1];
        label.extend(rest);
        label
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_is_bounded_and_transpose_invariant(m in small_matrix()) {
        let f = PrimeField::new(5).unwrap();
        let r = rank(&f, &m);
        prop_assert!(r <= m.rows().min(m.cols()));
        prop_assert_eq!(r, rank(&f, &m.transpose()));
    }

    #[test]
    fn rank_ignores_row_and_column_order(m in small_matrix(), seed in any::<u64>()) {
        let f = PrimeField::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rows: Vec<usize> = (0..m.rows()).collect();
        let mut cols: Vec<usize> = (0..m.cols()).collect();
        rand::seq::SliceRandom::shuffle(rows.as_mut_slice(), &mut rng);
        rand::seq::SliceRandom::shuffle(cols.as_mut_slice(), &mut rng);
        let p = Matrix::from_fn(m.rows(), m.cols(), |r, c| m[(rows[r], cols[c])]);
        prop_assert_eq!(rank(&f, &p), rank(&f, &m));
    }

    #[test]
    fn canonical_form_ignores_relabelling(
        (g, label) in graph(7, true).prop_flat_map(|g| { let n = g.n(); (Just(g), relabelling(n)) })
    ) {
        let h = g.relabel(&label).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn ear_decompositions_are_valid(g in graph(7, true)) {
        let ed = ear_decomposition(&g).unwrap();
        ed.validate(&g).unwrap();
        prop_assert_eq!(ed.len(), g.edge_count() - g.n() + 1);
        prop_assert!(ed.ears()[0].vertices.contains(&1));
        if let Some(nt) = find_nontrivial_ear_decomposition(&g).unwrap() {
            nt.validate(&g).unwrap();
            prop_assert!(nt.is_nontrivial());
            prop_assert_eq!(ed.trivial_count(), 0);
        } else {
            prop_assert!(ed.trivial_count() > 0);
        }
    }

    #[test]
    fn structure_implications(g in graph(7, false)) {
        if is_minimally_strongly_connected(&g).unwrap() {
            prop_assert!(find_nontrivial_ear_decomposition(&g).unwrap().is_some());
        }
        if inductive_ordering(&g).unwrap().is_some() {
            prop_assert!(g.edge_count() >= 2 * g.n() - 2);
        }
    }

    #[test]
    fn criteria_agree(g in graph(7, false), seed in any::<u64>()) {
        let f = PrimeField::default();
        let b = b_rank(&g, &f, 3, seed);
        let j = jacobian_rank(&g, &f, 3, seed);
        prop_assert_eq!(b.full_rank, j.expected, "{}", g);
    }

    #[test]
    fn more_trials_never_lower_the_rank(g in graph(6, true), seed in any::<u64>()) {
        let f = PrimeField::default();
        let few = b_rank(&g, &f, 1, seed);
        let many = b_rank(&g, &f, 4, seed);
        prop_assert!(many.rank >= few.rank);
    }

    #[test]
    fn fewer_rows_than_columns_means_no(g in graph(6, true)) {
        let v = decide(&g, &Config::default()).unwrap();
        if v.r_size < v.l_size {
            prop_assert!(g.edge_count() > 2 * g.n() - 2);
            prop_assert!(!v.answer.is_yes());
        }
    }

    #[test]
    fn decisions_are_reproducible(g in graph(6, true), seed in any::<u64>()) {
        let cfg = Config::with_seed(seed);
        prop_assert_eq!(decide(&g, &cfg).unwrap().to_json(), decide(&g, &cfg).unwrap().to_json());
    }

    #[test]
    fn graph_formats_round_trip(g in graph(8, true)) {
        prop_assert_eq!(DirectedGraph::parse(&g.to_text()).unwrap(), g.clone());
        let json = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(DirectedGraph::parse(&json).unwrap(), g);
    }
}
