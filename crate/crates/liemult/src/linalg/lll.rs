//! Exact LLL lattice basis reduction with delta = 3/4.
//!
//! The basis vectors are the *columns* of the matrix. Gram-Schmidt data is
//! kept as exact rationals, so the reduction is deterministic and correct for
//! arbitrary integer input.

use super::IntMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

struct GramSchmidt {
    /// mu[i][j] for j < i.
    mu: Vec<Vec<BigRational>>,
    /// Squared lengths of the orthogonalized vectors.
    norms: Vec<BigRational>,
}

fn gram_schmidt(basis: &IntMatrix) -> GramSchmidt {
    let n = basis.cols();
    let dim = basis.rows();
    let mut star: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    let mut norms = Vec::with_capacity(n);
    for i in 0..n {
        let mut v: Vec<BigRational> =
            (0..dim).map(|r| BigRational::from(basis[(r, i)].clone())).collect();
        for j in 0..i {
            let num: BigRational = (0..dim)
                .map(|r| BigRational::from(basis[(r, i)].clone()) * &star[j][r])
                .sum();
            let m = if norms[j] == BigRational::zero() {
                BigRational::zero()
            } else {
                num / &norms[j]
            };
            for r in 0..dim {
                let t = &m * &star[j][r];
                v[r] -= t;
            }
            mu[i][j] = m;
        }
        let norm: BigRational = v.iter().map(|x| x * x).sum();
        norms.push(norm);
        star.push(v);
    }
    GramSchmidt { mu, norms }
}

/// LLL-reduce the columns of `basis` in place. Requires linearly independent
/// columns. Uses the classic size-reduction + Lovasz-condition loop.
pub fn lll_reduce(basis: &mut IntMatrix) {
    let n = basis.cols();
    if n <= 1 {
        return;
    }
    let delta = rat(3, 4);
    let mut gs = gram_schmidt(basis);
    let mut k = 1;
    while k < n {
        // Size-reduce column k against columns k-1 .. 0.
        for j in (0..k).rev() {
            let m = &gs.mu[k][j];
            let rounded = round_rational(m);
            if !rounded.is_zero() {
                for r in 0..basis.rows() {
                    let v = &basis[(r, k)] - &rounded * &basis[(r, j)];
                    basis[(r, k)] = v;
                }
                gs = gram_schmidt(basis);
            }
        }
        // Lovasz condition.
        let lhs = &gs.norms[k];
        let mu2 = &gs.mu[k][k - 1] * &gs.mu[k][k - 1];
        let rhs = (&delta - mu2) * &gs.norms[k - 1];
        if *lhs >= rhs {
            k += 1;
        } else {
            basis.swap_cols(k, k - 1);
            gs = gram_schmidt(basis);
            k = k.max(2) - 1;
        }
    }
}

fn round_rational(x: &BigRational) -> BigInt {
    // Nearest integer, ties toward zero.
    let two = BigInt::from(2);
    let n = x.numer();
    let d = x.denom();
    if n.is_negative() {
        -((-n * &two + d) / (d * &two))
    } else {
        (n * &two + d) / (d * &two)
    }
}

/// Squared Euclidean norms of the columns.
fn col_norm2(basis: &IntMatrix, j: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for r in 0..basis.rows() {
        acc += &basis[(r, j)] * &basis[(r, j)];
    }
    acc
}

/// The shortest nonzero lattice vector, found by LLL preprocessing followed
/// by exact Fincke-Pohst enumeration. Columns of `basis` must be linearly
/// independent. Ties are broken deterministically.
pub fn shortest_vector_after_lll(basis: &IntMatrix) -> Vec<BigInt> {
    let mut b = basis.clone();
    lll_reduce(&mut b);
    let n = b.cols();
    let mut best_j = 0;
    let mut best = col_norm2(&b, 0);
    for j in 1..n {
        let nj = col_norm2(&b, j);
        if nj < best {
            best = nj;
            best_j = j;
        }
    }
    let mut best_vec = b.col_vec(best_j);
    if n == 1 {
        return best_vec;
    }
    // Enumerate all coefficient vectors with ||sum c_i b_i||^2 <= best.
    let gs = gram_schmidt(&b);
    let bound = BigRational::from(best.clone());
    let mut coeff = vec![BigInt::zero(); n];
    enumerate(&b, &gs, n, &bound, &mut coeff, &mut best_vec, &mut best);
    best_vec
}

fn enumerate(
    b: &IntMatrix,
    gs: &GramSchmidt,
    level: usize,
    remaining: &BigRational,
    coeff: &mut Vec<BigInt>,
    best_vec: &mut Vec<BigInt>,
    best: &mut BigInt,
) {
    if level == 0 {
        if coeff.iter().all(|c| c.is_zero()) {
            return;
        }
        let v: Vec<BigInt> = (0..b.rows())
            .map(|r| {
                let mut acc = BigInt::zero();
                for j in 0..b.cols() {
                    acc += &b[(r, j)] * &coeff[j];
                }
                acc
            })
            .collect();
        let norm: BigInt = v.iter().map(|x| x * x).sum();
        if norm < *best || (norm == *best && v < *best_vec) {
            *best = norm;
            *best_vec = v;
        }
        return;
    }
    let i = level - 1;
    if gs.norms[i].is_zero() {
        return;
    }
    // Center of the allowed interval for coeff[i] given the outer choices.
    let mut center = BigRational::zero();
    for j in level..b.cols() {
        center -= &gs.mu[j][i] * BigRational::from(coeff[j].clone());
    }
    // Candidates c satisfy (c - center)^2 * norms[i] <= remaining; walk
    // outward from the nearest integer in both directions until exceeded.
    let c0 = round_rational(&center);
    let mut try_candidate = |cand: BigInt,
                             coeff: &mut Vec<BigInt>,
                             best_vec: &mut Vec<BigInt>,
                             best: &mut BigInt|
     -> bool {
        let diff = BigRational::from(cand.clone()) - &center;
        let used = &diff * &diff * &gs.norms[i];
        if used > *remaining {
            return false;
        }
        coeff[i] = cand;
        let rem = remaining - used;
        enumerate(b, gs, i, &rem, coeff, best_vec, best);
        true
    };
    let mut k = BigInt::zero();
    loop {
        if !try_candidate(&c0 + &k, coeff, best_vec, best) {
            break;
        }
        k += 1;
    }
    k = BigInt::from(1);
    loop {
        if !try_candidate(&c0 - &k, coeff, best_vec, best) {
            break;
        }
        k += 1;
    }
    coeff[i] = BigInt::zero();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_known_basis() {
        // Classic example: [(1, 1), (0, 2)] style skew basis.
        let mut b = IntMatrix::from_i64_rows(&[vec![1, 3], vec![1, 4]]);
        lll_reduce(&mut b);
        // Lattice is all of Z^2 (det = 1); reduced basis vectors have norm 1.
        let n0: BigInt = (0..2).map(|r| &b[(r, 0)] * &b[(r, 0)]).sum();
        let n1: BigInt = (0..2).map(|r| &b[(r, 1)] * &b[(r, 1)]).sum();
        assert_eq!(n0, BigInt::from(1));
        assert_eq!(n1, BigInt::from(1));
    }

    #[test]
    fn shortest_vector_simple() {
        let b = IntMatrix::from_i64_rows(&[vec![201, 100], vec![200, 100]]);
        // Lattice contains (1, 0) = b1 - 2*b2.
        let v = shortest_vector_after_lll(&b);
        let norm: BigInt = v.iter().map(|x| x * x).sum();
        assert_eq!(norm, BigInt::from(1));
    }

    #[test]
    fn shortest_vector_skewed() {
        let b = IntMatrix::from_i64_rows(&[vec![5, 8], vec![3, 5]]);
        // det = 1, so shortest vector has norm 1 or 2; lattice is Z^2.
        let v = shortest_vector_after_lll(&b);
        let norm: BigInt = v.iter().map(|x| x * x).sum();
        assert_eq!(norm, BigInt::from(1));
    }
}
