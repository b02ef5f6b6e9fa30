//! Cayley's Omega operator, polarization and the Gordan series.

use alloc::vec;
use alloc::vec::Vec;

use super::{transvectant, BiForm, Form, FormError};
use crate::ring::{binomial, factorial, falling, Poly, Rational};

fn omega_once(g: &BiForm) -> BiForm {
    let (p, q) = (g.xorder(), g.yorder());
    if p == 0 || q == 0 {
        return BiForm::zero(p.saturating_sub(1), q.saturating_sub(1), g.adeg());
    }
    let mut grid = vec![vec![Poly::zero(); q as usize]; p as usize];
    for (j, row) in grid.iter_mut().enumerate() {
        for (l, cell) in row.iter_mut().enumerate() {
            // d2/dx1 dy2 from (j, l+1) minus d2/dx2 dy1 from (j+1, l).
            let up = g.entry(j, l + 1).scale(&Rational::from_int(((p as usize - j) * (l + 1)) as i64));
            let left = g.entry(j + 1, l).scale(&Rational::from_int(((j + 1) * (q as usize - l)) as i64));
            *cell = &up - &left;
        }
    }
    BiForm::raw(grid, g.adeg())
}

/// `Omega^k G` with `Omega = d2/dx1 dy2 - d2/dx2 dy1`.
pub fn omega(g: &BiForm, k: u32) -> BiForm {
    let mut out = g.clone();
    for _ in 0..k {
        out = omega_once(&out);
    }
    out
}

/// The bracket `x1 y2 - x2 y1`.
pub fn bracket() -> BiForm {
    BiForm::raw(vec![vec![Poly::zero(), Poly::one()], vec![Poly::int(-1), Poly::zero()]], 0)
}

/// `pi_r(G) = (m-r)!(n-r)!/(m!n!) {Omega^r G}_{y:=x}` for `G` of orders `(m, n)`.
pub fn pi_r(g: &BiForm, r: u32) -> Result<Form, FormError> {
    let (m, n) = (g.xorder(), g.yorder());
    if r > m.min(n) {
        return Err(FormError::OutOfRange { index: r, bound: m.min(n) });
    }
    let pref = &(&factorial(m - r) * &factorial(n - r)) / &(&factorial(m) * &factorial(n));
    Ok(omega(g, r).diagonal().scale(&pref))
}

/// `((p-t)!/p!) (y1 d/dx1 + y2 d/dx2)^t theta`, bihomogeneous of orders `(s, t)`.
/// On a pure power `l^p` this gives `l(x)^s l(y)^t`.
pub fn polarize(theta: &Form, s: u32, t: u32) -> Result<BiForm, FormError> {
    let p = theta.order();
    if s + t != p {
        return Err(FormError::BadSplit { order: p, s, t });
    }
    let pref = &factorial(p - t) / &factorial(p);
    let mut grid = vec![vec![Poly::zero(); t as usize + 1]; s as usize + 1];
    for j in 0..=p {
        let c = theta.coeff(j as usize);
        if c.is_zero() {
            continue;
        }
        for k in 0..=t.min(j) {
            // x1^(p-j) x2^j loses t-k factors of x1 and k of x2.
            if p - j < t - k || j - k > s {
                continue;
            }
            let w = &(&(&binomial(t, k) * &falling(p - j, t - k)) * &falling(j, k)) * &pref;
            let cell = &mut grid[(j - k) as usize][k as usize];
            *cell = &*cell + &c.scale(&w);
        }
    }
    Ok(BiForm::raw(grid, theta.adeg()))
}

/// The Gordan series of `A(x) B(y)`: pairs `(c_r, (A,B)_r)` with
/// `c_r = C(m,r) C(n,r) / C(m+n-r+1, r)`, such that
/// `A(x) B(y) = sum_r c_r (xy)^r polarize((A,B)_r, m-r, n-r)`.
///
/// The reconstruction is checked before returning.
pub fn gordan_series(a: &Form, b: &Form) -> Vec<(Rational, Form)> {
    let (m, n) = (a.order(), b.order());
    let series: Vec<(Rational, Form)> = (0..=m.min(n))
        .map(|r| {
            let c = &(&binomial(m, r) * &binomial(n, r)) / &binomial(m + n - r + 1, r);
            (c, transvectant(a, b, r))
        })
        .collect();
    let mut total = BiForm::zero(m, n, a.adeg() + b.adeg());
    for (r, (c, t)) in series.iter().enumerate() {
        let r = r as u32;
        let piece = bracket().pow(r).mul(&polarize(t, m - r, n - r).expect("split matches order"));
        total = total.add(&piece.scale(c));
    }
    assert!(total == BiForm::outer(a, b), "Gordan series failed to reconstruct");
    series
}

/// The `i`-th component of the coefficient-absorbed Gordan decomposition of
/// `Gamma` (orders `(d, n)`):
/// `A_i = (d+n-2i+1)! / (i! (d+n-i+1)!) {Omega^i Gamma}_{y:=x}`.
pub fn gordan_extract(gamma: &BiForm, i: u32) -> Result<Form, FormError> {
    let (d, n) = (gamma.xorder(), gamma.yorder());
    if i > d.min(n) {
        return Err(FormError::OutOfRange { index: i, bound: d.min(n) });
    }
    let c = &factorial(d + n - 2 * i + 1) / &(&factorial(i) * &factorial(d + n - i + 1));
    Ok(omega(gamma, i).diagonal().scale(&c))
}

/// Inverse of [`gordan_extract`]: `sum_i (xy)^i polarize(A_i, d-i, n-i)`.
pub fn gordan_reconstruct(components: &[Form], d: u32, n: u32) -> BiForm {
    let mut total = BiForm::zero(d, n, 0);
    for (i, a) in components.iter().enumerate() {
        let i = i as u32;
        if a.is_zero() {
            continue;
        }
        let piece = bracket().pow(i).mul(&polarize(a, d - i, n - i).expect("component order is d+n-2i"));
        total = total.add(&piece);
    }
    total
}

/// `mu(p,q; l,i) = l!/(l-i)! * (p+q-l+2i+1)!/(p+q-l+i+1)!` for `l >= i`, else 0.
///
/// It is the factor in `{Omega^l (xy)^i a_x^p b_y^q}_{y:=x} = mu * {Omega^(l-i) a_x^p b_y^q}_{y:=x}`.
pub fn mu_coefficient(p: u32, q: u32, l: u32, i: u32) -> Rational {
    if l < i || l > p + q + i + 1 {
        return Rational::ZERO;
    }
    let base = p + q + i + 1 - l;
    &falling(l, i) * &falling(base + i, i)
}

/// `nu(p1,q1,p2,q2; u) = sum_t (-1)^(u-t) C(u,t) p1!/(p1-t)! q1!/(q1-u+t)! p2!/(p2-u+t)! q2!/(q2-t)!`
/// over `max(0, u-min(q1,p2)) <= t <= min(p1,q2,u)`; empty sums are zero.
pub fn nu_coefficient(p1: u32, q1: u32, p2: u32, q2: u32, u: u32) -> Rational {
    let lo = u.saturating_sub(q1.min(p2));
    let hi = p1.min(q2).min(u);
    let mut acc = Rational::ZERO;
    for t in lo..=hi {
        if lo > hi {
            break;
        }
        let term = &(&(&(&binomial(u, t) * &falling(p1, t)) * &falling(q1, u - t)) * &falling(p2, u - t)) * &falling(q2, t);
        if (u - t) % 2 == 1 {
            acc = &acc - &term;
        } else {
            acc = &acc + &term;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::Pair;
    use crate::ring::{parse_poly, Var};

    fn form(s: &str) -> Form {
        Form::parse_order(&parse_poly(s).unwrap(), Pair::X).unwrap()
    }

    fn biform(s: &str, p: u32, q: u32) -> BiForm {
        BiForm::from_poly(&parse_poly(s).unwrap(), p, q).unwrap()
    }

    fn monomials(n: u32) -> Vec<Form> {
        (0..=n)
            .map(|j| {
                let mut c = vec![Poly::zero(); n as usize + 1];
                c[j as usize] = Poly::one();
                Form::from_coeffs(c, Pair::X).unwrap()
            })
            .collect()
    }

    /// Omega applied to the full body by differentiation.
    fn omega_oracle(g: &BiForm) -> Poly {
        let b = g.body();
        &b.derivative(Var::X1, 1).derivative(Var::Y2, 1) - &b.derivative(Var::X2, 1).derivative(Var::Y1, 1)
    }

    #[test]
    fn omega_basics() {
        assert_eq!(omega(&biform("x1*y2", 1, 1), 1).body(), Poly::one());
        assert!(omega(&biform("x1*y1", 1, 1), 1).is_zero());
        assert_eq!(omega(&bracket(), 1).body(), Poly::int(2));
        let g = biform("3*x1^2*y1*y2 - a0*x1*x2*y2^2 + x2^2*y1^2", 2, 2);
        assert_eq!(omega(&g, 1).body(), omega_oracle(&g));
    }

    #[test]
    fn bracket_basics() {
        assert!(bracket().diagonal().is_zero());
        assert_eq!(bracket().pow(2).body().len(), 3);
    }

    #[test]
    fn omega_cancels_a_bracket_factor() {
        let g = biform("x1^2*y1 - 2*x1*x2*y2 + a1*x2^2*y1", 2, 1);
        let lhs = omega(&bracket().mul(&g), 1);
        let rhs = g.scale(&Rational::from_int(2 + 1 + 2)).add(&bracket().mul(&omega(&g, 1)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pi_r_examples() {
        let a = form("x1^2 + 3*x1*x2");
        let b = form("x1^3 - x2^3 + 2*x1*x2^2");
        let g = BiForm::outer(&a, &b);
        assert_eq!(pi_r(&g, 0).unwrap().body(), &a.body() * &b.body());
        for r in 0..=2 {
            assert_eq!(pi_r(&g, r).unwrap(), transvectant(&a, &b, r));
        }
        assert!(pi_r(&g, 3).is_err());
        assert_eq!(pi_r(&biform("x1^2*y2", 2, 1), 1).unwrap().body(), parse_poly("x1").unwrap());
    }

    #[test]
    fn polarize_examples() {
        assert_eq!(polarize(&form("x1^2"), 1, 1).unwrap().body(), parse_poly("x1*y1").unwrap());
        let cube = form("(x1+x2)^3");
        assert_eq!(polarize(&cube, 2, 1).unwrap().body(), parse_poly("(x1+x2)^2*(y1+y2)").unwrap());
        let theta = form("x1^3 - 4*x1*x2^2");
        assert_eq!(polarize(&theta, 3, 0).unwrap().body(), theta.body());
        assert!(polarize(&theta, 1, 1).is_err());
    }

    #[test]
    fn gordan_series_small_cases() {
        let s = gordan_series(&form("x1^2"), &form("x2"));
        assert_eq!(s[0].0, Rational::ONE);
        assert_eq!(s[1].0, Rational::new(2, 3));
        assert_eq!(s[1].1.body(), parse_poly("x1").unwrap());
        let s = gordan_series(&form("x1"), &form("x1"));
        assert!(s[1].1.is_zero());
    }

    #[test]
    fn gordan_reconstruction_on_monomial_pairs() {
        for m in 0..=4 {
            for n in 0..=4 {
                for a in monomials(m) {
                    for b in monomials(n) {
                        gordan_series(&a, &b);
                        let g = BiForm::outer(&a, &b);
                        let parts: Vec<Form> = (0..=m.min(n)).map(|i| gordan_extract(&g, i).unwrap()).collect();
                        assert_eq!(gordan_reconstruct(&parts, m, n), g);
                    }
                }
            }
        }
    }

    #[test]
    fn gordan_extract_edge_cases() {
        // bracket^k alone sits entirely in component k
        for k in 0..=3 {
            let g = bracket().pow(k);
            for i in 0..=k {
                let c = gordan_extract(&g, i).unwrap();
                assert_eq!(c.is_zero(), i != k, "k={} i={}", k, i);
            }
            assert_eq!(gordan_extract(&g, k).unwrap().body(), Poly::one());
        }
        // x-order 0: only the 0-th component exists
        let g = biform("y1^2 - 3*y2^2", 0, 2);
        assert_eq!(gordan_extract(&g, 0).unwrap().body(), parse_poly("x1^2 - 3*x2^2").unwrap());
        assert!(gordan_extract(&g, 1).is_err());
    }

    #[test]
    fn mu_and_nu() {
        assert_eq!(mu_coefficient(3, 2, 0, 0), Rational::ONE);
        assert_eq!(mu_coefficient(3, 2, 1, 2), Rational::ZERO);
        assert_eq!(nu_coefficient(0, 0, 0, 0, 1), Rational::ZERO);
        assert_eq!(nu_coefficient(2, 3, 1, 1, 0), Rational::ONE);
    }

    #[test]
    fn mu_matches_omega_on_bracket_multiples() {
        let a = form("x1 + 2*x2");
        let b = form("3*x1 - x2");
        for p in 0..=3u32 {
            for q in 0..=3u32 {
                let base = BiForm::outer(&a.pow(p), &b.pow(q).with_pair(Pair::X));
                for i in 0..=2u32 {
                    let g = bracket().pow(i).mul(&base);
                    for l in i..=(p.min(q) + i) {
                        let lhs = omega(&g, l).diagonal();
                        let rhs = omega(&base, l - i).diagonal().scale(&mu_coefficient(p, q, l, i));
                        assert_eq!(lhs, rhs, "p={} q={} l={} i={}", p, q, l, i);
                    }
                }
            }
        }
    }

    #[test]
    fn top_transvectant_pairing_is_nondegenerate() {
        // (A, B)_m = 0 for every monomial B of order m forces A = 0.
        for m in 0..=5u32 {
            let basis = monomials(m);
            let mut rows: Vec<Vec<Rational>> = Vec::new();
            for a in &basis {
                rows.push(basis.iter().map(|b| transvectant(a, b, m).coeff(0).as_constant().unwrap_or(Rational::ZERO)).collect());
            }
            // antidiagonal with nonzero entries
            for (i, row) in rows.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    assert_eq!(x.is_zero(), i + j != m as usize, "m={} i={} j={}", m, i, j);
                }
            }
        }
    }
}
