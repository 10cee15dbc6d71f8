//! Reference computations over the rationals, independent of the library's
//! finite-field code paths.

#![allow(dead_code)]

use num::{BigInt, BigRational, One, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Residue of `x` modulo the prime `p`.
pub fn to_field(x: &Q, p: u64) -> u64 {
    let m = BigInt::from(p);
    let num = ((x.numer() % &m) + &m) % &m;
    let den = ((x.denom() % &m) + &m) % &m;
    assert!(!den.is_zero(), "denominator divisible by p");
    let inv = den.modpow(&(&m - 2), &m);
    let r = (num * inv) % &m;
    r.try_into().expect("residue fits in u64")
}

/// Determinant by elimination with rational pivots.
pub fn det(m: &[Vec<Q>]) -> Q {
    let k = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| !a[r][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c].clone();
        let pivot = a[c].clone();
        for row in &mut a[c + 1..] {
            let f = &row[c] / &pivot[c];
            for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= &f * p;
            }
        }
    }
    d
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(c1, ..., ck)` of `det(λI - A)` from its values at `λ = 0..=k` by
/// Lagrange interpolation.
pub fn char_poly_by_interpolation(a: &[Vec<Q>]) -> Vec<Q> {
    let k = a.len();
    let mut coeffs = vec![Q::zero(); k + 1];
    for t in 0..=k {
        let shifted: Vec<Vec<Q>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        if i == j {
                            q(t as i64, 1) - &a[i][j]
                        } else {
                            -a[i][j].clone()
                        }
                    })
                    .collect()
            })
            .collect();
        let y = det(&shifted);
        let mut basis = vec![Q::one()];
        let mut denom = Q::one();
        for s in (0..=k).filter(|&s| s != t) {
            basis = poly_mul(&basis, &[q(-(s as i64), 1), Q::one()]);
            denom *= q(t as i64 - s as i64, 1);
        }
        for (c, b) in coeffs.iter_mut().zip(basis) {
            *c += &y * b / &denom;
        }
    }
    assert!(coeffs[k].is_one(), "characteristic polynomial is monic");
    coeffs[..k].iter().rev().cloned().collect()
}

/// Calls `visit(perm, sign)` for every permutation of `items`.
fn permutations(items: &[usize], visit: &mut impl FnMut(&[usize], i64)) {
    fn go(rest: &mut Vec<usize>, chosen: &mut Vec<usize>, sign: i64, visit: &mut impl FnMut(&[usize], i64)) {
        if rest.is_empty() {
            visit(chosen, sign);
            return;
        }
        for idx in 0..rest.len() {
            let x = rest.remove(idx);
            chosen.push(x);
            // picking the idx-th remaining element costs idx transpositions
            go(rest, chosen, if idx % 2 == 0 { sign } else { -sign }, visit);
            chosen.pop();
            rest.insert(idx, x);
        }
    }
    go(&mut items.to_vec(), &mut Vec::new(), 1, visit);
}

/// `∂ c_k / ∂ a_pq` (0-based `p`, `q`) where `c_k = (-1)^k e_k` is the sum of
/// signed principal `k x k` minors, each expanded by Leibniz's formula.
/// Every Leibniz term is multilinear in the entries, so the derivative of a
/// term containing `a_pq` is the product of its other factors.
pub fn char_poly_partial(a: &[Vec<Q>], k: usize, (p, qq): (usize, usize)) -> Q {
    let n = a.len();
    let mut total = Q::zero();
    for subset in 0u32..1 << n {
        if subset.count_ones() as usize != k || subset >> p & 1 == 0 || subset >> qq & 1 == 0 {
            continue;
        }
        let rows: Vec<usize> = (0..n).filter(|i| subset >> i & 1 == 1).collect();
        permutations(&rows, &mut |image, sign| {
            let Some(pos) = rows.iter().position(|&r| r == p) else {
                return;
            };
            if image[pos] != qq {
                return;
            }
            let mut term = q(sign, 1);
            for (idx, &r) in rows.iter().enumerate() {
                if idx != pos {
                    term *= &a[r][image[idx]];
                }
            }
            total += term;
        });
    }
    if k % 2 == 1 {
        -total
    } else {
        total
    }
}

/// Jacobian of the double characteristic polynomial map at `a`, columns in
/// the given slot order (1-based matrix positions).
pub fn jacobian(a: &[Vec<Q>], slots: &[(usize, usize)]) -> Vec<Vec<Q>> {
    let n = a.len();
    let a1: Vec<Vec<Q>> = a[1..].iter().map(|row| row[1..].to_vec()).collect();
    let mut rows = Vec::with_capacity(2 * n - 1);
    for k in 1..=n {
        rows.push(
            slots
                .iter()
                .map(|&(i, j)| char_poly_partial(a, k, (i - 1, j - 1)))
                .collect(),
        );
    }
    for k in 1..n {
        rows.push(
            slots
                .iter()
                .map(|&(i, j)| {
                    if i == 1 || j == 1 {
                        Q::zero()
                    } else {
                        char_poly_partial(&a1, k, (i - 2, j - 2))
                    }
                })
                .collect(),
        );
    }
    rows
}

/// Rank over the rationals.
pub fn rank(m: &[Vec<Q>]) -> usize {
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let pivot = a[r].clone();
        for row in &mut a[r + 1..] {
            let f = &row[c] / &pivot[c];
            for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= &f * p;
            }
        }
        r += 1;
    }
    r
}
