//! Independent oracles for the property suites. Nothing here may call into
//! the Smith normal form under test: invariant factors are recomputed from
//! scratch as quotients of gcds of k-by-k minors.

use acyclo_core::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// All k-element subsets of 0..n in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            go(i + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

/// Determinant by cofactor expansion; independent of the Bareiss routine in
/// the library (slow but fine at oracle scale).
fn det_expansion(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for (j, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = top * det_expansion(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Invariant factors of an integer matrix via gcds of minors:
/// `d_k = gcd(all k x k minors)`, k-th factor `= d_k / d_(k-1)`.
pub fn minors_invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let (rows, cols) = (m.rows(), m.cols());
    let max_k = rows.min(cols);
    let mut factors = Vec::new();
    let mut previous = BigInt::one();
    for k in 1..=max_k {
        let mut gcd = BigInt::zero();
        for row_set in subsets(rows, k) {
            for col_set in subsets(cols, k) {
                let sub: Vec<Vec<BigInt>> = row_set
                    .iter()
                    .map(|&i| col_set.iter().map(|&j| m.get(i, j).clone()).collect())
                    .collect();
                gcd = gcd.gcd(&det_expansion(&sub));
            }
        }
        if gcd.is_zero() {
            break; // all k x k minors vanish: rank < k
        }
        factors.push(gcd.abs() / &previous);
        previous = gcd.abs();
    }
    factors
}
