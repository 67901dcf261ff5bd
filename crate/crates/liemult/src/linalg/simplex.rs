//! Exact two-phase simplex over `BigRational` with Bland's rule.
//!
//! Used for feasibility certificates, boundedness checks, affine-hull
//! detection, and variable bounds. Instances are small and dense, so a plain
//! tableau with exact pivoting is the right tool; Bland's rule guarantees
//! termination on degenerate instances.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Maximize `objective . x` subject to `a x = b` with `x[j] >= 0` whenever
/// `nonneg[j]`, the remaining variables free.
#[derive(Clone, Debug)]
pub struct LpProblem {
    pub a: Vec<Vec<BigRational>>,
    pub b: Vec<BigRational>,
    pub objective: Vec<BigRational>,
    pub nonneg: Vec<bool>,
}

#[derive(Clone, Debug)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: BigRational, point: Vec<BigRational> },
}

impl LpProblem {
    pub fn from_int_rows(
        a: &[Vec<BigInt>],
        b: &[BigInt],
        objective: Vec<BigRational>,
        nonneg: Vec<bool>,
    ) -> Self {
        let a = a
            .iter()
            .map(|row| row.iter().map(|x| BigRational::from(x.clone())).collect())
            .collect();
        let b = b.iter().map(|x| BigRational::from(x.clone())).collect();
        LpProblem { a, b, objective, nonneg }
    }

    pub fn solve(&self) -> LpOutcome {
        let m = self.a.len();
        let n = self.objective.len();
        assert!(self.a.iter().all(|r| r.len() == n));
        assert_eq!(self.b.len(), m);
        assert_eq!(self.nonneg.len(), n);

        // Split free variables into differences of nonnegatives.
        // Column map: structural j -> (pos col, optional neg col).
        let mut pos_col = vec![0usize; n];
        let mut neg_col = vec![None; n];
        let mut ncols = 0;
        for j in 0..n {
            pos_col[j] = ncols;
            ncols += 1;
            if !self.nonneg[j] {
                neg_col[j] = Some(ncols);
                ncols += 1;
            }
        }
        let art_start = ncols;
        let total = ncols + m;

        // Tableau rows: [structural+artificial | rhs], with rhs >= 0.
        let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
        for i in 0..m {
            let mut row = vec![BigRational::zero(); total + 1];
            let flip = self.b[i].is_negative();
            for j in 0..n {
                let v = if flip { -self.a[i][j].clone() } else { self.a[i][j].clone() };
                row[pos_col[j]] = v.clone();
                if let Some(nc) = neg_col[j] {
                    row[nc] = -v;
                }
            }
            row[art_start + i] = BigRational::one();
            row[total] = if flip { -self.b[i].clone() } else { self.b[i].clone() };
            t.push(row);
        }
        let mut basis: Vec<usize> = (art_start..art_start + m).collect();

        // Phase 1: maximize -sum(artificials).
        let mut phase1_costs = vec![BigRational::zero(); total];
        for c in phase1_costs.iter_mut().skip(art_start) {
            *c = -BigRational::one();
        }
        run_simplex(&mut t, &mut basis, &phase1_costs, total);
        let phase1_value: BigRational =
            basis.iter().zip(&t).map(|(&bj, row)| phase1_costs[bj].clone() * &row[total]).sum();
        if phase1_value < BigRational::zero() {
            return LpOutcome::Infeasible;
        }

        // Drive remaining artificials out of the basis; drop redundant rows.
        let mut keep_rows = Vec::new();
        for i in 0..t.len() {
            if basis[i] >= art_start {
                let pivot_col = (0..art_start).find(|&j| !t[i][j].is_zero());
                match pivot_col {
                    Some(j) => {
                        pivot(&mut t, &mut basis, i, j, total);
                        keep_rows.push(i);
                    }
                    None => {
                        // Redundant constraint row; rhs must be 0 here.
                        debug_assert!(t[i][total].is_zero());
                    }
                }
            } else {
                keep_rows.push(i);
            }
        }
        if keep_rows.len() != t.len() {
            t = keep_rows.iter().map(|&i| t[i].clone()).collect();
            basis = keep_rows.iter().map(|&i| basis[i]).collect();
        }

        // Phase 2: the real objective; artificial columns are forbidden.
        let mut phase2_costs = vec![BigRational::zero(); total];
        for j in 0..n {
            phase2_costs[pos_col[j]] = self.objective[j].clone();
            if let Some(nc) = neg_col[j] {
                phase2_costs[nc] = -self.objective[j].clone();
            }
        }
        if !run_simplex(&mut t, &mut basis, &phase2_costs, art_start) {
            return LpOutcome::Unbounded;
        }

        // Read off the solution.
        let mut split = vec![BigRational::zero(); total];
        for (i, &bj) in basis.iter().enumerate() {
            split[bj] = t[i][total].clone();
        }
        let mut point = Vec::with_capacity(n);
        for j in 0..n {
            let mut v = split[pos_col[j]].clone();
            if let Some(nc) = neg_col[j] {
                v -= &split[nc];
            }
            point.push(v);
        }
        let value: BigRational =
            self.objective.iter().zip(&point).map(|(c, x)| c * x).sum();
        LpOutcome::Optimal { value, point }
    }
}

/// Bland-rule simplex on the tableau. Columns `0..allowed` may enter the
/// basis. Returns false if the objective is unbounded above.
fn run_simplex(
    t: &mut Vec<Vec<BigRational>>,
    basis: &mut [usize],
    costs: &[BigRational],
    allowed: usize,
) -> bool {
    let total = costs.len();
    loop {
        // Reduced costs: c_j - c_B . (column j of tableau).
        let mut entering = None;
        for j in 0..allowed {
            if basis.contains(&j) {
                continue;
            }
            let mut red = costs[j].clone();
            for (i, &bj) in basis.iter().enumerate() {
                if !costs[bj].is_zero() && !t[i][j].is_zero() {
                    red -= costs[bj].clone() * &t[i][j];
                }
            }
            if red > BigRational::zero() {
                entering = Some(j);
                break; // Bland: smallest improving index.
            }
        }
        let Some(e) = entering else {
            return true;
        };
        // Ratio test with Bland tie-break (smallest basis variable index).
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..t.len() {
            if t[i][e] > BigRational::zero() {
                let ratio = &t[i][total] / &t[i][e];
                match &leave {
                    None => leave = Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < *lr || (ratio == *lr && basis[i] < basis[*li]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let Some((li, _)) = leave else {
            return false;
        };
        pivot(t, basis, li, e, total);
    }
}

fn pivot(t: &mut [Vec<BigRational>], basis: &mut [usize], row: usize, col: usize, total: usize) {
    let p = t[row][col].clone();
    for v in t[row].iter_mut() {
        *v /= p.clone();
    }
    for i in 0..t.len() {
        if i == row || t[i][col].is_zero() {
            continue;
        }
        let f = t[i][col].clone();
        for j in 0..=total {
            let delta = &f * &t[row][j];
            t[i][j] -= delta;
        }
    }
    basis[row] = col;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ri(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn simple_max() {
        // max x1 + x2 s.t. x1 + x2 + slack = 4, all >= 0.
        let lp = LpProblem {
            a: vec![vec![ri(1), ri(1), ri(1)]],
            b: vec![ri(4)],
            objective: vec![ri(1), ri(1), ri(0)],
            nonneg: vec![true, true, true],
        };
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, ri(4)),
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn infeasible() {
        // x1 + x2 = -1 with x >= 0.
        let lp = LpProblem {
            a: vec![vec![ri(1), ri(1)]],
            b: vec![ri(-1)],
            objective: vec![ri(0), ri(0)],
            nonneg: vec![true, true],
        };
        assert!(matches!(lp.solve(), LpOutcome::Infeasible));
    }

    #[test]
    fn unbounded() {
        // max x1 with x1 - x2 = 0, x >= 0.
        let lp = LpProblem {
            a: vec![vec![ri(1), ri(-1)]],
            b: vec![ri(0)],
            objective: vec![ri(1), ri(0)],
            nonneg: vec![true, true],
        };
        assert!(matches!(lp.solve(), LpOutcome::Unbounded));
    }

    #[test]
    fn free_variable() {
        // max -y s.t. y free, y >= -3 encoded as y + s = ... use y - s = -3, s >= 0.
        let lp = LpProblem {
            a: vec![vec![ri(1), ri(-1)]],
            b: vec![ri(-3)],
            objective: vec![ri(-1), ri(0)],
            nonneg: vec![false, true],
        };
        match lp.solve() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, ri(3));
                assert_eq!(point[0], ri(-3));
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn degenerate_terminates() {
        // Multiple redundant constraints meeting at a degenerate vertex.
        let lp = LpProblem {
            a: vec![
                vec![ri(1), ri(1), ri(1), ri(0)],
                vec![ri(1), ri(1), ri(0), ri(1)],
                vec![ri(2), ri(2), ri(1), ri(1)],
            ],
            b: vec![ri(2), ri(2), ri(4)],
            objective: vec![ri(1), ri(2), ri(0), ri(0)],
            nonneg: vec![true, true, true, true],
        };
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, ri(4)),
            other => panic!("unexpected: {other:?}"),
        }
    }
}
