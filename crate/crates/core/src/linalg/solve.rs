//! Exact linear systems by fraction-free (Bareiss) elimination.

use alloc::vec::Vec;

use crate::ring::{Poly, Rational};

/// `matrix * x = rhs` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub matrix: Vec<Vec<Rational>>,
    pub rhs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    /// Consistent but with `nullity` free parameters; `particular` sets them to 0.
    Underdetermined { particular: Vec<Rational>, nullity: usize },
    Inconsistent,
}

impl Solution {
    pub fn unique(self) -> Option<Vec<Rational>> {
        match self {
            Solution::Unique(v) => Some(v),
            _ => None,
        }
    }
}

/// Scales each row to integer entries so elimination stays in the integers.
fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    use num_integer::Integer;
    rows.iter()
        .map(|r| {
            let l = r.iter().fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(&c.denom()));
            let l = Rational::from_bigint(l);
            r.iter().map(|c| c * &l).collect()
        })
        .collect()
}

/// Bareiss elimination in place; returns pivot columns in row order.
fn bareiss(a: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let nrows = a.len();
    let mut prev = Rational::ONE;
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, p);
        for r in row + 1..nrows {
            for c in col + 1..a[r].len() {
                let v = &(&a[row][col] * &a[r][c]) - &(&a[r][col] * &a[row][c]);
                a[r][c] = &v / &prev;
            }
            a[r][col] = Rational::ZERO;
        }
        prev = a[row][col].clone();
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut a = integer_rows(rows);
    bareiss(&mut a, ncols).len()
}

/// Solves the system exactly.
pub fn exact_solve(sys: &LinearSystem) -> Solution {
    let ncols = sys.matrix.first().map_or(0, Vec::len);
    assert_eq!(sys.matrix.len(), sys.rhs.len(), "system dimensions");
    let augmented: Vec<Vec<Rational>> = sys
        .matrix
        .iter()
        .zip(&sys.rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let mut a = integer_rows(&augmented);
    let pivots = bareiss(&mut a, ncols);
    // A nonzero right-hand side below the pivot rows means no solution.
    if a[pivots.len()..].iter().any(|r| !r[ncols].is_zero()) {
        return Solution::Inconsistent;
    }
    let mut x = alloc::vec![Rational::ZERO; ncols];
    for (row, &col) in pivots.iter().enumerate().rev() {
        let mut v = a[row][ncols].clone();
        for c in col + 1..ncols {
            if !a[row][c].is_zero() {
                v = &v - &(&a[row][c] * &x[c]);
            }
        }
        x[col] = &v / &a[row][col];
    }
    if pivots.len() < ncols {
        Solution::Underdetermined { particular: x, nullity: ncols - pivots.len() }
    } else {
        Solution::Unique(x)
    }
}

/// Finds rationals `c` with `target = sum_i c_i basis_i`, matching polynomial
/// coefficients. The answer is unique only if the basis is independent.
pub fn solve_combination(target: &Poly, basis: &[Poly]) -> Solution {
    use crate::ring::Monomial;
    let mut monos: Vec<Monomial> = target.terms().iter().map(|t| t.0).collect();
    for b in basis {
        monos.extend(b.terms().iter().map(|t| t.0));
    }
    monos.sort_unstable();
    monos.dedup();
    let matrix = monos.iter().map(|m| basis.iter().map(|b| b.coefficient(m)).collect()).collect();
    let rhs = monos.iter().map(|m| target.coefficient(m)).collect();
    if basis.is_empty() {
        return if target.is_zero() { Solution::Unique(Vec::new()) } else { Solution::Inconsistent };
    }
    exact_solve(&LinearSystem { matrix, rhs })
}
