use alloc::vec::Vec;

use super::Form;
use crate::ring::{binomial, factorial, falling, PolyAccumulator, Rational};

/// The `r`-th transvectant `(A, B)_r`.
///
/// Computed on coefficient vectors: the term `A_j x1^(m-j) x2^j` against
/// `B_l x1^(n-l) x2^l` lands on index `j + l - r` of the result with weight
/// `sum_i (-1)^i C(r,i) ff(m-j, r-i) ff(j, i) ff(n-l, i) ff(l, r-i)`, which is
/// exactly what differentiating the two bodies produces. Out of range `r`
/// gives the zero form of order `m + n - 2r` clamped at 0.
///
/// Panics if the forms live in different variable pairs.
pub fn transvectant(a: &Form, b: &Form, r: u32) -> Form {
    assert_eq!(a.pair(), b.pair(), "transvectant of forms in different variable pairs");
    let (m, n) = (a.order(), b.order());
    let adeg = a.adeg() + b.adeg();
    if r > m.min(n) {
        return Form::zero((m + n).saturating_sub(2 * r), adeg, a.pair());
    }
    if r == 0 {
        return a.mul(b);
    }
    let pref = &(&factorial(m - r) * &factorial(n - r)) / &(&factorial(m) * &factorial(n));
    let out_order = (m + n - 2 * r) as usize;
    let mut accs: Vec<PolyAccumulator> = (0..=out_order).map(|_| PolyAccumulator::new()).collect();
    // Column weights for B depend only on (l, i); cache them.
    let bw: Vec<Vec<Rational>> =
        (0..=n).map(|l| (0..=r).map(|i| &falling(n - l, i) * &falling(l, r - i)).collect()).collect();
    let signs: Vec<Rational> = (0..=r)
        .map(|i| {
            let c = binomial(r, i);
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    for j in 0..=m {
        let aj = a.coeff(j as usize);
        if aj.is_zero() {
            continue;
        }
        let aw: Vec<Rational> = (0..=r).map(|i| &(&signs[i as usize] * &falling(m - j, r - i)) * &falling(j, i)).collect();
        for l in 0..=n {
            if j + l < r || j + l - r > out_order as u32 {
                continue;
            }
            let bl = b.coeff(l as usize);
            if bl.is_zero() {
                continue;
            }
            let mut w = Rational::ZERO;
            for i in 0..=r as usize {
                if !aw[i].is_zero() && !bw[l as usize][i].is_zero() {
                    w += &(&aw[i] * &bw[l as usize][i]);
                }
            }
            if w.is_zero() {
                continue;
            }
            accs[(j + l - r) as usize].add_product(aj, bl, &(&w * &pref));
        }
    }
    Form::raw(accs.into_iter().map(PolyAccumulator::finish).collect(), adeg, a.pair())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::Pair;
    use crate::ring::{parse_poly, Poly, Var};

    fn form(s: &str) -> Form {
        Form::parse_order(&parse_poly(s).unwrap(), Pair::X).unwrap()
    }

    /// The defining formula applied to full polynomial bodies.
    fn oracle(a: &Form, b: &Form, r: u32) -> Poly {
        let (m, n) = (a.order(), b.order());
        if r > m.min(n) {
            return Poly::zero();
        }
        let (pa, pb) = (a.body(), b.body());
        let mut acc = Poly::zero();
        for i in 0..=r {
            let da = pa.derivative(Var::X1, r - i).derivative(Var::X2, i);
            let db = pb.derivative(Var::X1, i).derivative(Var::X2, r - i);
            let mut c = binomial(r, i);
            if i % 2 == 1 {
                c = -c;
            }
            acc = &acc + &(&da * &db).scale(&c);
        }
        let pref = &(&factorial(m - r) * &factorial(n - r)) / &(&factorial(m) * &factorial(n));
        acc.scale(&pref)
    }

    #[test]
    fn sum_of_fifth_powers() {
        let f = form("x1^5+x2^5");
        assert_eq!(transvectant(&f, &f, 4).body(), parse_poly("2*x1*x2").unwrap());
    }

    #[test]
    fn zeroth_is_product_and_out_of_range_is_zero() {
        let a = form("x1^2 - 3*x1*x2");
        let b = form("a1*x1 + x2");
        assert_eq!(transvectant(&a, &b, 0).body(), &a.body() * &b.body());
        let z = transvectant(&a, &b, 2);
        assert!(z.is_zero());
        assert_eq!(z.order(), 0);
    }

    #[test]
    fn agrees_with_direct_differentiation() {
        let samples = ["x1^3 + 2*a0*x1*x2^2 - x2^3", "a1*x1^2*x2 + 5*x2^3", "x1^4 - a2*x2^4 + x1^2*x2^2", "7*x1 - a3*x2"];
        for s in samples {
            for t in samples {
                let (a, b) = (form(s), form(t));
                for r in 0..=4 {
                    assert_eq!(transvectant(&a, &b, r).body(), oracle(&a, &b, r), "{} {} {}", s, t, r);
                }
            }
        }
    }
}
