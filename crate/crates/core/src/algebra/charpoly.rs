use super::matrix::Matrix;
use super::Ring;

/// Coefficients `(c1, ..., ck)` of `det(λI - A) = λ^k + c1 λ^(k-1) + ... + ck`
/// by Berkowitz's algorithm, which never divides.
pub fn char_poly_coeffs<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Vec<R::Elem> {
    assert_eq!(
        a.rows(),
        a.cols(),
        "characteristic polynomial of a non-square matrix"
    );
    let k = a.rows();
    // characteristic polynomial of the leading r x r block, highest degree first
    let mut poly = vec![ring.one()];
    for r in 0..k {
        let column: Vec<R::Elem> = (0..r).map(|i| a[(i, r)]).collect();
        let row: Vec<R::Elem> = (0..r).map(|j| a[(r, j)]).collect();
        // first column of the Toeplitz matrix: 1, -a_rr, -R C, -R A C, ...
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(ring.one());
        toeplitz.push(ring.neg(a[(r, r)]));
        let mut power = column;
        for _ in 0..r {
            toeplitz.push(ring.neg(dot(ring, &row, &power)));
            power = (0..r).map(|i| dot(ring, &a.row(i)[..r], &power)).collect();
        }
        poly = (0..r + 2)
            .map(|i| {
                let mut acc = ring.zero();
                for j in 0..=i.min(poly.len() - 1) {
                    acc = ring.add(acc, ring.mul(toeplitz[i - j], poly[j]));
                }
                acc
            })
            .collect();
    }
    poly.split_off(1)
}

fn dot<R: Ring>(ring: &R, x: &[R::Elem], y: &[R::Elem]) -> R::Elem {
    x.iter()
        .zip(y)
        .fold(ring.zero(), |acc, (&a, &b)| ring.add(acc, ring.mul(a, b)))
}
