mod oracle;

use compid::algebra::{char_poly_coeffs, FieldElement, Matrix, PrimeField, DEFAULT_PRIME};
use compid::census::enumerate_class;
use compid::ident::{jacobian, parameter_slots, ParameterAssignment};
use compid::random::random_strongly_connected;
use oracle::{q, to_field, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_rational(rng: &mut impl Rng) -> Q {
    q(rng.random_range(-50..=50), rng.random_range(1..=9))
}

fn reduce(m: &[Vec<Q>], f: &PrimeField) -> Matrix<FieldElement> {
    Matrix::from_fn(m.len(), m[0].len(), |r, c| {
        f.elem(to_field(&m[r][c], f.modulus()))
    })
}

#[test]
fn berkowitz_matches_interpolated_determinants() {
    let f = PrimeField::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 1..=6 {
        for _ in 0..20 {
            let a: Vec<Vec<Q>> = (0..k)
                .map(|_| (0..k).map(|_| random_rational(&mut rng)).collect())
                .collect();
            let expected: Vec<u64> = oracle::char_poly_by_interpolation(&a)
                .iter()
                .map(|c| to_field(c, DEFAULT_PRIME))
                .collect();
            let got: Vec<u64> = char_poly_coeffs(&f, &reduce(&a, &f))
                .iter()
                .map(|c| c.value())
                .collect();
            assert_eq!(got, expected, "k = {k}");
        }
    }
}

#[test]
fn dual_jacobian_matches_symbolic_derivatives() {
    let f = PrimeField::default();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut graphs: Vec<_> = (2..=4).flat_map(|n| enumerate_class(n).unwrap()).collect();
    graphs.extend((0..30).map(|_| random_strongly_connected(4, 12, &mut rng).unwrap()));
    for g in graphs {
        let slots = parameter_slots(&g);
        let values: Vec<Q> = slots.iter().map(|_| random_rational(&mut rng)).collect();
        let n = g.n();
        let mut a = vec![vec![q(0, 1); n]; n];
        for (&(i, j), v) in slots.iter().zip(&values) {
            a[i - 1][j - 1] = v.clone();
        }
        let field_values: Vec<_> = values
            .iter()
            .map(|v| f.elem(to_field(v, DEFAULT_PRIME)))
            .collect();
        let params = ParameterAssignment::from_slots(&g, &field_values).unwrap();
        let got = jacobian(&g, &f, &params).unwrap();
        let want = reduce(&oracle::jacobian(&a, &slots), &f);
        assert_eq!(got, want, "{g}");
    }
}

#[test]
fn symbolic_jacobian_rank_is_capped_by_scaling() {
    // independent of the field: the rational Jacobian never exceeds m + 1
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for g in enumerate_class(3).unwrap() {
        let slots = parameter_slots(&g);
        let n = g.n();
        let mut a = vec![vec![q(0, 1); n]; n];
        for &(i, j) in &slots {
            a[i - 1][j - 1] = random_rational(&mut rng);
        }
        let r = oracle::rank(&oracle::jacobian(&a, &slots));
        assert!(r <= g.edge_count() + 1);
    }
}

#[test]
fn char_poly_is_conjugation_invariant() {
    let f = PrimeField::default();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..100 {
        let k = rng.random_range(1..=7);
        let a = Matrix::from_fn(k, k, |_, _| f.sample(&mut rng));
        let mut perm: Vec<usize> = (0..k).collect();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let conj = Matrix::from_fn(k, k, |r, c| a[(perm[r], perm[c])]);
        assert_eq!(char_poly_coeffs(&f, &conj), char_poly_coeffs(&f, &a));
    }
}

#[test]
fn oracle_closed_forms() {
    let a = vec![vec![q(2, 1), q(3, 1)], vec![q(5, 1), q(7, 1)]];
    assert_eq!(oracle::char_poly_by_interpolation(&a), vec![q(-9, 1), q(-1, 1)]);
    // d c2 / d a11 = a22, d c2 / d a12 = -a21
    assert_eq!(oracle::char_poly_partial(&a, 2, (0, 0)), q(7, 1));
    assert_eq!(oracle::char_poly_partial(&a, 2, (0, 1)), q(-5, 1));
    assert_eq!(oracle::char_poly_partial(&a, 1, (1, 1)), q(-1, 1));
    assert_eq!(to_field(&q(-1, 2), 7), 3);
}
