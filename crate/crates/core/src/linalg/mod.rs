//! Wronskians, covariant-induced linear maps, Sylvester resultants and exact
//! linear systems.
//!
//! Determinants over polynomial rings use Laplace expansion row by row with
//! every minor on the current rows memoized by its column set, so no
//! polynomial division is ever needed.

mod solve;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::forms::{transvectant, Form, Pair};
use crate::ring::{Poly, Rational};

pub use solve::{exact_solve, rank, solve_combination, LinearSystem, Solution};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    /// Wronskian arguments of different orders.
    MixedOrders,
    /// More forms than the dimension of their space.
    TooManyForms { count: usize, order: u32 },
    /// The transvection `(Phi, G)_r` of a covariant-induced map is impossible.
    BadMapShape { a: u32, b: u32, q: u32 },
    /// Resultant of a constant form.
    ZeroOrder,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::MixedOrders => f.write_str("Wronskian of forms of different orders"),
            LinalgError::TooManyForms { count, order } => {
                write!(f, "{} forms of order {} are necessarily dependent", count, order)
            }
            LinalgError::BadMapShape { a, b, q } => {
                write!(f, "no map S_{} -> S_{} from a covariant of order {}", a, b, q)
            }
            LinalgError::ZeroOrder => f.write_str("resultant needs forms of positive order"),
        }
    }
}

/// Ring operations needed by the determinant.
pub trait DetEntry: Clone {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl DetEntry for Poly {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

impl DetEntry for Form {
    fn add(&self, other: &Self) -> Self {
        Form::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Form::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Form::mul(self, other)
    }
    fn is_zero(&self) -> bool {
        Form::is_zero(self)
    }
}

/// Determinant of a square matrix by memoized minor expansion.
///
/// Minors on rows `0..k` are indexed by their column bitmask; row `k` is
/// expanded against the minors of the previous level. Panics on a
/// non-square or empty matrix, or more than 32 columns.
pub fn determinant<T: DetEntry>(rows: &[Vec<T>]) -> T {
    let n = rows.len();
    assert!(n > 0 && n <= 32 && rows.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    // Level 1: single entries of row 0.
    let mut level: HashMap<u32, T> = (0..n).map(|c| (1u32 << c, rows[0][c].clone())).collect();
    for (k, row) in rows.iter().enumerate().skip(1) {
        let mut next: HashMap<u32, T> = HashMap::new();
        for mask in subsets_of_size(n, k + 1) {
            let mut acc: Option<T> = None;
            let mut fallback: Option<T> = None;
            // position of column c inside the sorted set gives the cofactor sign
            for (pos, c) in (0..n).filter(|c| mask >> c & 1 == 1).enumerate() {
                let minor = &level[&(mask & !(1 << c))];
                let entry = &row[c];
                if entry.is_zero() || minor.is_zero() {
                    if fallback.is_none() {
                        fallback = Some(entry.mul(minor));
                    }
                    continue;
                }
                let term = entry.mul(minor);
                let negative = (k + pos) % 2 == 1;
                acc = Some(match acc {
                    None if negative => fallback.clone().unwrap_or_else(|| term.sub(&term)).sub(&term),
                    None => term,
                    Some(a) if negative => a.sub(&term),
                    Some(a) => a.add(&term),
                });
            }
            next.insert(mask, acc.or(fallback).expect("nonempty column set"));
        }
        level = next;
    }
    level.remove(&((1u64 << n) as u32).wrapping_sub(1)).expect("full minor")
}

fn subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    (0u64..(1u64 << n)).map(|m| m as u32).filter(|m| m.count_ones() as usize == k).collect()
}

/// Wronskian `W(A_1..A_m)` of forms of a common order `n`: the determinant of
/// the matrix with entry `(i, j)` equal to `d^(m-1) A_i / dx1^(m-j) dx2^(j-1)`.
/// It has order `m (n - m + 1)` and vanishes iff the forms are dependent.
pub fn wronskian(forms: &[Form]) -> Result<Form, LinalgError> {
    assert!(!forms.is_empty(), "Wronskian of no forms");
    let n = forms[0].order();
    if forms.iter().any(|f| f.order() != n) {
        return Err(LinalgError::MixedOrders);
    }
    let m = forms.len() as u32;
    if m > n + 1 {
        return Err(LinalgError::TooManyForms { count: forms.len(), order: n });
    }
    let matrix: Vec<Vec<Form>> =
        forms.iter().map(|f| (1..=m).map(|j| f.partial(m - j, j - 1)).collect()).collect();
    let w = determinant(&matrix);
    let adeg = forms.iter().map(Form::adeg).sum();
    Ok(w.with_adeg(adeg))
}

/// A matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Poly>>,
}

impl FormMatrix {
    pub fn zero(rows: usize, cols: usize) -> FormMatrix {
        FormMatrix { rows, cols, entries: vec![vec![Poly::zero(); cols]; rows] }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Poly::is_zero)
    }

    /// Evaluates every entry as a rational, if all are constants.
    pub fn to_rational(&self) -> Option<Vec<Vec<Rational>>> {
        self.entries.iter().map(|r| r.iter().map(Poly::as_constant).collect()).collect()
    }

    /// Rank over the rationals of a constant matrix.
    pub fn rank(&self) -> Option<usize> {
        Some(solve::rank(&self.to_rational()?))
    }
}

/// The monomial basis `x1^a, x1^(a-1) x2, ..., x2^a` of `S_a`.
pub fn monomial_basis(a: u32) -> Vec<Form> {
    (0..=a)
        .map(|k| {
            let mut c = vec![Poly::zero(); a as usize + 1];
            c[k as usize] = Poly::one();
            Form::from_coeffs(c, Pair::X).expect("monomial")
        })
        .collect()
}

fn map_order(a: u32, b: u32, q: u32) -> Result<u32, LinalgError> {
    let bad = LinalgError::BadMapShape { a, b, q };
    if a + q < b || (a + q - b) % 2 == 1 {
        return Err(bad);
    }
    let r = (a + q - b) / 2;
    if r > a.min(q) {
        return Err(bad);
    }
    Ok(r)
}

/// The images `h(x1^a), ..., h(x2^a)` of `h: S_a -> S_b, G -> (Phi, G)_r`,
/// `r = (a + q - b)/2`.
pub fn map_images(phi: &Form, a: u32, b: u32) -> Result<Vec<Form>, LinalgError> {
    let r = map_order(a, b, phi.order())?;
    Ok(monomial_basis(a).iter().map(|g| transvectant(phi, g, r)).collect())
}

/// The `(b+1) x (a+1)` matrix of `h: G -> (Phi, G)_r` on monomial bases.
pub fn covariant_map_matrix(phi: &Form, a: u32, b: u32) -> Result<FormMatrix, LinalgError> {
    let images = map_images(phi, a, b)?;
    let mut m = FormMatrix::zero(b as usize + 1, a as usize + 1);
    for (col, img) in images.iter().enumerate() {
        for row in 0..=b as usize {
            m.entries[row][col] = img.coeff(row).clone();
        }
    }
    Ok(m)
}

/// Wronskian of the map `h: S_a -> S_b` induced by `Phi`, for `a <= b`.
pub fn map_wronskian(phi: &Form, a: u32, b: u32) -> Result<Form, LinalgError> {
    wronskian(&map_images(phi, a, b)?)
}

/// Determinant of the Sylvester matrix of `A` (order `m`) and `B` (order `n`):
/// `n` shifted rows of A-coefficients followed by `m` rows of B-coefficients,
/// coefficients listed from `x1^m` down to `x2^m`.
pub fn sylvester_resultant(a: &Form, b: &Form) -> Result<Poly, LinalgError> {
    let (m, n) = (a.order() as usize, b.order() as usize);
    if m == 0 || n == 0 {
        return Err(LinalgError::ZeroOrder);
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![Poly::zero(); size];
        for (j, c) in a.coeffs().iter().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![Poly::zero(); size];
        for (j, c) in b.coeffs().iter().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    Ok(determinant(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    fn form(s: &str) -> Form {
        Form::parse_order(&parse_poly(s).unwrap(), Pair::X).unwrap()
    }

    fn det_oracle(m: &[Vec<Rational>]) -> Rational {
        // Leibniz over permutations
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = Rational::ZERO;
        permute(&mut perm, 0, &mut |p| {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inv += 1;
                    }
                }
            }
            let mut prod = Rational::ONE;
            for (i, &c) in p.iter().enumerate() {
                prod = &prod * &m[i][c];
            }
            if inv % 2 == 1 {
                prod = -prod;
            }
            total = &total + &prod;
        });
        total
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn determinant_matches_leibniz() {
        let vals: Vec<Vec<Rational>> = (0..5)
            .map(|i| (0..5).map(|j| Rational::from_int(((i * 7 + j * 3 + i * j) % 11) as i64 - 5)).collect())
            .collect();
        let polys: Vec<Vec<Poly>> = vals.iter().map(|r| r.iter().map(|c| Poly::constant(c.clone())).collect()).collect();
        assert_eq!(determinant(&polys).as_constant().unwrap_or(Rational::ZERO), det_oracle(&vals));
    }

    #[test]
    fn wronskian_examples() {
        let w = wronskian(&[form("x1^2"), form("x1*x2"), form("x2^2")]).unwrap();
        assert_eq!(w.body(), Poly::int(4));
        assert!(wronskian(&[form("x1^2"), form("x1^2"), form("x2^2")]).unwrap().is_zero());
        assert_eq!(wronskian(&[form("x1^2"), form("x1")]), Err(LinalgError::MixedOrders));
    }

    #[test]
    fn wronskian_is_alternating_and_orthogonal() {
        let fs = [form("x1^3 + x2^3"), form("x1^2*x2 - 2*x2^3"), form("x1*x2^2 + 5*x1^3")];
        let w = wronskian(&fs).unwrap();
        let swapped = wronskian(&[fs[1].clone(), fs[0].clone(), fs[2].clone()]).unwrap();
        assert_eq!(swapped, w.neg());
        // W has order m(n-m+1) = 3; (W, A_i)_3 = 0
        for f in &fs {
            assert!(transvectant(&w, f, 3).is_zero());
        }
    }

    #[test]
    fn resultants() {
        assert_eq!(sylvester_resultant(&form("x1^2"), &form("x2^2")).unwrap(), Poly::one());
        let shared = sylvester_resultant(&form("(x1+x2)*(x1-3*x2)"), &form("(x1+x2)*x2^2")).unwrap();
        assert!(shared.is_zero());
        let a = form("2*x1^2 + x1*x2 - x2^2");
        let b = form("x1^3 - 4*x2^3 + x1*x2^2");
        let ab = sylvester_resultant(&a, &b).unwrap();
        let ba = sylvester_resultant(&b, &a).unwrap();
        assert_eq!(ab, ba.scale(&Rational::from_int(if (2 * 3) % 2 == 0 { 1 } else { -1 })));
    }

    #[test]
    fn map_matrix_kernel() {
        let f = form("x1^5 + x2^5");
        let m = covariant_map_matrix(&f, 2, 3).unwrap();
        // x1 x2 is the middle basis vector
        assert!((0..4).all(|r| m.entries[r][1].is_zero()));
        let g = form("x1^5 + x2^5 + (x1+x2)^5");
        assert_eq!(covariant_map_matrix(&g, 2, 3).unwrap().rank(), Some(3));
        assert!(covariant_map_matrix(&Form::zero(5, 0, Pair::X), 2, 3).unwrap().is_zero());
        assert!(covariant_map_matrix(&f, 2, 4).is_err());
    }
}
