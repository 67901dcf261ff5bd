//! Integer linear systems via column echelon form (Hermite-style reduction).
//!
//! `solve_integer_system` finds one integer solution of `A x = b` together
//! with a lattice basis of the integer kernel, or reports that no integer
//! solution exists. All transformations are unimodular column operations, so
//! the kernel columns really are a basis of `ker_Z(A)`.

use super::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug)]
pub struct IntegerSolution {
    /// One integer solution of `A x = b`.
    pub particular: Vec<BigInt>,
    /// Columns form a basis of the integer kernel of `A`.
    pub kernel: IntMatrix,
}

struct ColumnEchelon {
    h: IntMatrix,
    u: IntMatrix,
    /// (row, col) positions of the staircase pivots.
    pivots: Vec<(usize, usize)>,
}

/// Reduce `a` to column echelon form `h = a * u` with `u` unimodular.
fn column_echelon(a: &IntMatrix) -> ColumnEchelon {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.cols());
    let mut pivots = Vec::new();
    let mut col = 0;

    for row in 0..h.rows() {
        if col == h.cols() {
            break;
        }
        // Euclidean reduction across the active columns of this row.
        loop {
            let mut best: Option<usize> = None;
            for j in col..h.cols() {
                if h[(row, j)].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(j),
                    Some(b) => {
                        if h[(row, j)].abs() < h[(row, b)].abs() {
                            best = Some(j);
                        }
                    }
                }
            }
            let Some(p) = best else { break };
            h.swap_cols(col, p);
            u.swap_cols(col, p);
            let mut done = true;
            for j in col + 1..h.cols() {
                if h[(row, j)].is_zero() {
                    continue;
                }
                let q = h[(row, j)].div_floor(&h[(row, col)]);
                if !q.is_zero() {
                    for i in 0..h.rows() {
                        let v = &h[(i, j)] - &q * &h[(i, col)];
                        h[(i, j)] = v;
                    }
                    for i in 0..u.rows() {
                        let v = &u[(i, j)] - &q * &u[(i, col)];
                        u[(i, j)] = v;
                    }
                }
                if !h[(row, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !h[(row, col)].is_zero() {
            if h[(row, col)].is_negative() {
                for i in 0..h.rows() {
                    let v = -h[(i, col)].clone();
                    h[(i, col)] = v;
                }
                for i in 0..u.rows() {
                    let v = -u[(i, col)].clone();
                    u[(i, col)] = v;
                }
            }
            pivots.push((row, col));
            col += 1;
        }
    }

    ColumnEchelon { h, u, pivots }
}

/// Basis of the integer kernel of `a`, as matrix columns.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let ech = column_echelon(a);
    let first_free = ech.pivots.len();
    let free: Vec<usize> = (first_free..a.cols()).collect();
    ech.u.select_cols(&free)
}

/// Solve `a x = b` over the integers.
pub fn solve_integer_system(a: &IntMatrix, b: &[BigInt]) -> Option<IntegerSolution> {
    assert_eq!(b.len(), a.rows());
    let ech = column_echelon(a);
    let ncols = a.cols();
    let mut y = vec![BigInt::zero(); ncols];
    let mut pivot_of_row = vec![None; a.rows()];
    for &(r, c) in &ech.pivots {
        pivot_of_row[r] = Some(c);
    }
    for row in 0..a.rows() {
        let mut rest = b[row].clone();
        for j in 0..ncols {
            if !ech.h[(row, j)].is_zero() && !y[j].is_zero() {
                rest -= &ech.h[(row, j)] * &y[j];
            }
        }
        match pivot_of_row[row] {
            Some(c) => {
                let (q, r) = rest.div_rem(&ech.h[(row, c)]);
                if !r.is_zero() {
                    return None;
                }
                y[c] = q;
            }
            None => {
                if !rest.is_zero() {
                    return None;
                }
            }
        }
    }
    let particular = ech.u.mul_vec(&y);
    let first_free = ech.pivots.len();
    let free: Vec<usize> = (first_free..ncols).collect();
    let kernel = ech.u.select_cols(&free);
    Some(IntegerSolution { particular, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check_solution(a: &IntMatrix, b: &[BigInt]) {
        let sol = solve_integer_system(a, b).expect("solvable");
        assert_eq!(a.mul_vec(&sol.particular), b);
        for j in 0..sol.kernel.cols() {
            let col = sol.kernel.col_vec(j);
            assert!(a.mul_vec(&col).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_simple() {
        let a = IntMatrix::from_i64_rows(&[vec![1, 1, 1]]);
        let b = vec![BigInt::from(3)];
        check_solution(&a, &b);
        let sol = solve_integer_system(&a, &b).unwrap();
        assert_eq!(sol.kernel.cols(), 2);
    }

    #[test]
    fn no_integer_solution() {
        let a = IntMatrix::from_i64_rows(&[vec![2]]);
        assert!(solve_integer_system(&a, &[BigInt::one()]).is_none());
        let a2 = IntMatrix::from_i64_rows(&[vec![2, 4], vec![0, 0]]);
        assert!(solve_integer_system(&a2, &[BigInt::from(3), BigInt::zero()]).is_none());
    }

    #[test]
    fn inconsistent_rows() {
        let a = IntMatrix::from_i64_rows(&[vec![1, 1], vec![1, 1]]);
        assert!(solve_integer_system(&a, &[BigInt::from(1), BigInt::from(2)]).is_none());
        check_solution(&a, &[BigInt::from(2), BigInt::from(2)]);
    }

    #[test]
    fn kernel_of_marginal_matrix() {
        // 2x2 contingency margins: rank 3, kernel dim 1.
        let a = IntMatrix::from_i64_rows(&[
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 1],
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1],
        ]);
        let k = integer_kernel(&a);
        assert_eq!(k.cols(), 1);
        let col = k.col_vec(0);
        assert!(a.mul_vec(&col).iter().all(|x| x.is_zero()));
        assert!(!col.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn gcd_style_diagonal() {
        let a = IntMatrix::from_i64_rows(&[vec![4, 6]]);
        // 4x + 6y = 2 solvable, = 1 not.
        check_solution(&a, &[BigInt::from(2)]);
        assert!(solve_integer_system(&a, &[BigInt::one()]).is_none());
    }
}
