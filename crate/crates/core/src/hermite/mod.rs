//! Computations around the Hermite invariant on the canonical family `F_Q`:
//! the syzygies `U`, `V`, the Wronskian `Gamma_tau` and its factor `K_tau`,
//! the special triples, the Jacobian triple, the Morley map and `Lambda`,
//! the involution `Q -> Q'` and the singular locus.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::covariants::{canonical_fq, probe_forms, quartic_t, Covariant, QuinticCatalog, ThetaName};
use crate::forms::{transvectant, Form, Pair};
use crate::linalg::{exact_solve, map_wronskian, sylvester_resultant, wronskian, LinearSystem, Solution};
use crate::ring::{Monomial, Poly, Rational, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HermiteError {
    /// An expected polynomial factor does not divide.
    NotDivisible(&'static str),
    /// A displayed factorization does not hold.
    FactorizationMismatch(&'static str),
    /// A special-triple system had free parameters.
    NonUnique { exponents: (u32, u32, u32) },
    /// The probe list ran out before the extraction system became regular.
    DegenerateProbes,
    /// The extracted triple fails the symbolic check.
    NotASyzygy(&'static str),
}

impl fmt::Display for HermiteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HermiteError::NotDivisible(what) => write!(f, "{} does not divide", what),
            HermiteError::FactorizationMismatch(what) => write!(f, "factorization of {} does not hold", what),
            HermiteError::NonUnique { exponents } => write!(f, "system for {:?} is underdetermined", exponents),
            HermiteError::DegenerateProbes => write!(f, "all probes degenerate"),
            HermiteError::NotASyzygy(what) => write!(f, "{} is not annihilated", what),
        }
    }
}

/// `tau = (alpha, beta, gamma)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl Triple {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Triple {
        Triple { alpha, beta, gamma }
    }

    pub fn params(&self) -> TripleParams {
        TripleParams {
            alpha: Poly::constant(self.alpha.clone()),
            beta: Poly::constant(self.beta.clone()),
            gamma: Poly::constant(self.gamma.clone()),
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

/// A triple whose entries may be polynomials, e.g. the symbols `alpha, beta, gamma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleParams {
    pub alpha: Poly,
    pub beta: Poly,
    pub gamma: Poly,
}

impl TripleParams {
    pub fn symbolic() -> TripleParams {
        TripleParams { alpha: Poly::var(Var::ALPHA), beta: Poly::var(Var::BETA), gamma: Poly::var(Var::GAMMA) }
    }
}

/// A point `Q = [q0, q1, q2]` parametrizing `F_Q = x1 (q0 x1^4 + 2 q1 x1^2 x2^2 + q2 x2^4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoint {
    pub q0: Poly,
    pub q1: Poly,
    pub q2: Poly,
}

impl QPoint {
    pub fn symbolic() -> QPoint {
        QPoint { q0: Poly::var(Var::Q0), q1: Poly::var(Var::Q1), q2: Poly::var(Var::Q2) }
    }

    pub fn rational(q0: Rational, q1: Rational, q2: Rational) -> QPoint {
        QPoint { q0: Poly::constant(q0), q1: Poly::constant(q1), q2: Poly::constant(q2) }
    }

    pub fn int(q0: i64, q1: i64, q2: i64) -> QPoint {
        QPoint { q0: Poly::int(q0), q1: Poly::int(q1), q2: Poly::int(q2) }
    }

    fn bindings(&self) -> [(Var, Poly); 3] {
        [(Var::Q0, self.q0.clone()), (Var::Q1, self.q1.clone()), (Var::Q2, self.q2.clone())]
    }

    /// Substitutes this point into a polynomial in `q0, q1, q2`.
    pub fn apply(&self, p: &Poly) -> Poly {
        p.substitute(&self.bindings())
    }

    /// The quintic `F_Q`.
    pub fn fq(&self) -> Form {
        canonical_fq().substitute(&self.bindings())
    }

    /// `q2, q0 q2 + 3 q1^2, 5 q0 q2 - q1^2`: the factors cutting out the singular locus.
    pub fn singular_factors(&self) -> [Poly; 3] {
        let q0q2 = &self.q0 * &self.q2;
        let q1sq = &self.q1 * &self.q1;
        [self.q2.clone(), &q0q2 + &q1sq.scale(&Rational::from_int(3)), &q0q2.scale(&Rational::from_int(5)) - &q1sq]
    }

    pub fn scale(&self, c: &Poly) -> QPoint {
        QPoint { q0: &self.q0 * c, q1: &self.q1 * c, q2: &self.q2 * c }
    }
}

/// `Q' = [q0 q2 - (6/5) q1^2, q1 q2, -q2^2]`.
pub fn involution(q: &QPoint) -> QPoint {
    QPoint {
        q0: &(&q.q0 * &q.q2) - &(&q.q1 * &q.q1).scale(&Rational::new(6, 5)),
        q1: &q.q1 * &q.q2,
        q2: -&(&q.q2 * &q.q2),
    }
}

/// True iff `F_Q` lies over the singular locus, for a rational `Q`.
pub fn singular_membership(q: &QPoint) -> bool {
    q.singular_factors().iter().any(Poly::is_zero)
}

/// `theta51(F_Q)`, an order-1 form whose coefficients cut out the singular locus.
pub fn theta51_at(cat: &QuinticCatalog, q: &QPoint) -> Form {
    cat.theta(ThetaName::T51).at(&q.fq())
}

/// `U = theta33 theta22 - alpha theta40 F`.
pub fn syzygy_u(cat: &QuinticCatalog, alpha: &Poly) -> Covariant {
    let t = |n| cat.theta(n);
    let main = t(ThetaName::T33).mul(t(ThetaName::T22));
    let corr = t(ThetaName::T40).mul(cat.f());
    Covariant::with_degree(main.form().sub(&corr.form().scale_poly(alpha)), 5, 5)
}

/// `V = theta51 theta22^2 - beta theta40^2 F - gamma theta80 F`.
pub fn syzygy_v(cat: &QuinticCatalog, beta: &Poly, gamma: &Poly) -> Covariant {
    let t = |n| cat.theta(n);
    let main = t(ThetaName::T51).mul(&t(ThetaName::T22).pow(2));
    let b = t(ThetaName::T40).pow(2).mul(cat.f());
    let c = t(ThetaName::T80).mul(cat.f());
    let form = main.form().sub(&b.form().scale_poly(beta)).sub(&c.form().scale_poly(gamma));
    Covariant::with_degree(form, 5, 9)
}

/// The five order-5 images spanning `sigma_tau(F)`:
/// `(x1^2, F)_1, (x1 x2, F)_1, (x2^2, F)_1, U, V`.
pub fn sigma_tau_images(cat: &QuinticCatalog, tau: &TripleParams) -> Vec<Covariant> {
    let f = cat.f();
    let mut out: Vec<Covariant> = crate::linalg::monomial_basis(2)
        .iter()
        .map(|g| Covariant::with_degree(transvectant(g, f.form(), 1), 5, 1))
        .collect();
    out.push(syzygy_u(cat, &tau.alpha));
    out.push(syzygy_v(cat, &tau.beta, &tau.gamma));
    out
}

/// `Gamma_tau`, the Wronskian of `sigma_tau(F)`, as a covariant of degree-order `(17, 5)`.
pub fn gamma_tau(cat: &QuinticCatalog, tau: &TripleParams) -> Covariant {
    let forms: Vec<Form> = sigma_tau_images(cat, tau).into_iter().map(Covariant::into_form).collect();
    Covariant::with_degree(wronskian(&forms).expect("five quintics"), 5, 17)
}

/// `Gamma_tau` evaluated at a quintic `f`. Evaluation commutes with the
/// determinant, so the images are specialized first.
pub fn gamma_tau_at(cat: &QuinticCatalog, tau: &TripleParams, f: &Form) -> Form {
    let forms: Vec<Form> = sigma_tau_images(cat, tau).iter().map(|c| c.at(f)).collect();
    wronskian(&forms).expect("five quintics")
}

/// The scalar in `Gamma_tau(F_Q) = c q2^3 (q0q2+3q1^2)(5q0q2-q1^2) K_tau F_Q'`.
pub fn gamma_tau_scale() -> Rational {
    Rational::from_bigints(
        num_bigint::BigInt::from(-(64 * 9 * 151 * 293i64)),
        num_bigint::BigInt::from(5u8).pow(15),
    )
}

/// The scalar in `E_H(F_Q) = c q2^3 (q0q2+3q1^2)^2 (5q0q2-q1^2)^4 F_Q'`.
pub fn evectant_fq_scale() -> Rational {
    Rational::from_bigints(num_bigint::BigInt::from(-64), num_bigint::BigInt::from(3u8) * num_bigint::BigInt::from(5u8).pow(14))
}

/// The scalar in `Lambda(F_Q) = c q2^3 (q0q2+3q1^2)^2 (5q0q2-q1^2)^5 x1^5`.
pub fn lambda_fq_scale() -> Rational {
    Rational::from_bigints(
        -(num_bigint::BigInt::from(2u8).pow(16) * num_bigint::BigInt::from(3u8).pow(9)),
        num_bigint::BigInt::from(5u8).pow(14),
    )
}

/// `prod_k factor_k^e_k`.
pub fn factor_product(factors: &[Poly], exponents: &[u32]) -> Poly {
    factors.iter().zip(exponents).fold(Poly::one(), |acc, (f, &e)| &acc * &f.pow(e))
}

/// Strips the given factors from `p` as often as each divides; returns the
/// multiplicities and the cofactor.
pub fn factor_exponents(p: &Poly, factors: &[Poly]) -> (Vec<u32>, Poly) {
    let mut rest = p.clone();
    let mut exps = vec![0; factors.len()];
    if rest.is_zero() {
        return (exps, rest);
    }
    for (k, f) in factors.iter().enumerate() {
        while let Some(q) = rest.div_exact(f) {
            rest = q;
            exps[k] += 1;
        }
    }
    (exps, rest)
}

/// `K_tau` as a polynomial in `q0, q1, q2, alpha, beta, gamma`, recovered
/// from `Gamma_tau(F_Q)` by exact division and checked coefficient by coefficient.
pub fn k_tau(cat: &QuinticCatalog) -> Result<Poly, HermiteError> {
    let q = QPoint::symbolic();
    let g = gamma_tau_at(cat, &TripleParams::symbolic(), &q.fq());
    let fq2 = involution(&q).fq();
    let prefactor = factor_product(&q.singular_factors(), &[3, 1, 1]).scale(&gamma_tau_scale());
    let k = g.coeff(0).div_exact(&(&prefactor * fq2.coeff(0))).ok_or(HermiteError::NotDivisible("Gamma_tau(F_Q)"))?;
    if g != fq2.scale_poly(&(&prefactor * &k)) {
        return Err(HermiteError::FactorizationMismatch("Gamma_tau(F_Q)"));
    }
    Ok(k)
}

/// The coefficients of `K_tau` at `q0^4 q2^4, q0^3 q1^2 q2^3, q0^2 q1^4 q2^2, q0 q1^6 q2, q1^8`.
pub fn k_tau_coefficients(k: &Poly) -> [Poly; 5] {
    let by_q = k.coefficients_in(&[Var::Q0, Var::Q1, Var::Q2]);
    core::array::from_fn(|j| {
        let j = j as u32;
        let m = Monomial::from_pairs(&[(Var::Q0, 4 - j), (Var::Q1, 2 * j), (Var::Q2, 4 - j)]);
        by_q.iter().find(|(mm, _)| *mm == m).map_or(Poly::zero(), |(_, c)| c.clone())
    })
}

/// One solvable case of `K_tau = delta q2^r (q0q2+3q1^2)^s (5q0q2-q1^2)^t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialTriple {
    pub exponents: (u32, u32, u32),
    pub triple: Triple,
    pub delta: Rational,
}

/// All `(r, s, t)` with `r + 2s + 2t = 8` for which `K_tau` can take the
/// displayed shape, with the unique `(alpha, beta, gamma, delta)` in each case.
pub fn solve_special_triples(k: &Poly) -> Result<Vec<SpecialTriple>, HermiteError> {
    let qvars = [Var::Q0, Var::Q1, Var::Q2];
    let k_by_q = k.coefficients_in(&qvars);
    let sym = QPoint::symbolic().singular_factors();
    let linear_part = |c: &Poly, v: Option<Var>| {
        let m = v.map_or(Monomial::ONE, Monomial::var);
        c.coefficient(&m)
    };
    let mut found = Vec::new();
    for r in (0..=8u32).step_by(2) {
        for s in 0..=(8 - r) / 2 {
            let t = (8 - r) / 2 - s;
            let target = factor_product(&sym, &[r, s, t]);
            let t_by_q = target.coefficients_in(&qvars);
            let mut monos: Vec<Monomial> = k_by_q.iter().chain(&t_by_q).map(|(m, _)| *m).collect();
            monos.sort_unstable();
            monos.dedup();
            let mut matrix = Vec::new();
            let mut rhs = Vec::new();
            for m in &monos {
                let kc = k_by_q.iter().find(|(mm, _)| mm == m).map_or(Poly::zero(), |(_, c)| c.clone());
                let tc = t_by_q.iter().find(|(mm, _)| mm == m).map_or(Poly::zero(), |(_, c)| c.clone());
                let tc = tc.as_constant().expect("numeric target");
                matrix.push(vec![
                    linear_part(&kc, Some(Var::ALPHA)),
                    linear_part(&kc, Some(Var::BETA)),
                    linear_part(&kc, Some(Var::GAMMA)),
                    -&tc,
                ]);
                rhs.push(-&linear_part(&kc, None));
            }
            match exact_solve(&LinearSystem { matrix, rhs }) {
                Solution::Unique(x) => found.push(SpecialTriple {
                    exponents: (r, s, t),
                    triple: Triple::new(x[0].clone(), x[1].clone(), x[2].clone()),
                    delta: x[3].clone(),
                }),
                Solution::Underdetermined { .. } => return Err(HermiteError::NonUnique { exponents: (r, s, t) }),
                Solution::Inconsistent => {}
            }
        }
    }
    Ok(found)
}

/// Scalar value of an order-0 form.
fn scalar(f: &Form) -> Rational {
    f.coeff(0).as_constant().expect("numeric invariant")
}

/// The triple with `(E_H, U)_5 = (E_H, V)_5 = 0`. The three rationals are read
/// off at general probe quintics, where `H` does not vanish, and the two
/// syzygies are then checked symbolically.
pub fn jacobian_triple(cat: &QuinticCatalog, h: &Covariant, e_h: &Covariant) -> Result<Triple, HermiteError> {
    let t = |n| cat.theta(n);
    let u_main = t(ThetaName::T33).mul(t(ThetaName::T22));
    let v_main = t(ThetaName::T51).mul(&t(ThetaName::T22).pow(2));
    let mut alpha = None;
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for f in probe_forms(5, 64) {
        let hf = scalar(&h.at(&f));
        let i4 = scalar(&t(ThetaName::T40).at(&f));
        if hf.is_zero() {
            continue;
        }
        let ef = e_h.at(&f);
        if alpha.is_none() && !i4.is_zero() {
            let lhs = scalar(&transvectant(&ef, &u_main.at(&f), 5));
            alpha = Some(&lhs / &(&i4 * &hf));
        }
        let i8 = scalar(&t(ThetaName::T80).at(&f));
        let lhs = scalar(&transvectant(&ef, &v_main.at(&f), 5));
        let row = vec![&(&i4 * &i4) * &hf, &i8 * &hf];
        let mut trial: Vec<Vec<Rational>> = rows.iter().map(|r| r.0.clone()).collect();
        trial.push(row.clone());
        if crate::linalg::rank(&trial) > rows.len() {
            rows.push((row, lhs));
        }
        if alpha.is_some() && rows.len() == 2 {
            break;
        }
    }
    let alpha = alpha.ok_or(HermiteError::DegenerateProbes)?;
    if rows.len() < 2 {
        return Err(HermiteError::DegenerateProbes);
    }
    let sys = LinearSystem { matrix: rows.iter().map(|r| r.0.clone()).collect(), rhs: rows.iter().map(|r| r.1.clone()).collect() };
    let bg = exact_solve(&sys).unique().ok_or(HermiteError::DegenerateProbes)?;
    let tau = Triple::new(alpha, bg[0].clone(), bg[1].clone());

    let p = tau.params();
    if !e_h.transvect(&syzygy_u(cat, &p.alpha), 5).is_zero() {
        return Err(HermiteError::NotASyzygy("U"));
    }
    if !e_h.transvect(&syzygy_v(cat, &p.beta, &p.gamma), 5).is_zero() {
        return Err(HermiteError::NotASyzygy("V"));
    }
    Ok(tau)
}

/// `mu_F(A) = (A, (F, theta33)_1)_1 + (1/6) A (F, theta33)_2` for a linear form `A`,
/// given `F` and `theta33(F)`.
pub fn morley_mu(f: &Form, t33: &Form, a: &Form) -> Form {
    assert_eq!(a.order(), 1, "the Morley map acts on linear forms");
    let first = transvectant(a, &transvectant(f, t33, 1), 1);
    let second = a.mul(&transvectant(f, t33, 2)).scale(&Rational::new(1, 6));
    first.add(&second)
}

/// `Lambda` at `f`: the Wronskian of
/// `x1^2 theta33, x1 x2 theta33, x2^2 theta33, mu(x1), mu(x2)`.
pub fn lambda_at(cat: &QuinticCatalog, f: &Form) -> Form {
    let t33 = cat.theta(ThetaName::T33).at(f);
    let mut rows: Vec<Form> = crate::linalg::monomial_basis(2).iter().map(|g| g.mul(&t33)).collect();
    for a in crate::linalg::monomial_basis(1) {
        rows.push(morley_mu(f, &t33, &a));
    }
    wronskian(&rows).expect("five quintics")
}

/// `Lambda` with generic coefficients.
pub fn lambda(cat: &QuinticCatalog) -> Covariant {
    Covariant::with_degree(lambda_at(cat, cat.f().form()), 5, 17)
}

/// Whether `(ab, cd)_1 (ac, bd)_1 (ad, bc)_1` is a nonzero multiple of `T(abcd)`.
pub fn triple_intersection_check(a: &Form, b: &Form, c: &Form, d: &Form) -> bool {
    let p = |x: &Form, y: &Form| x.mul(y);
    let product = transvectant(&p(a, b), &p(c, d), 1)
        .mul(&transvectant(&p(a, c), &p(b, d), 1))
        .mul(&transvectant(&p(a, d), &p(b, c), 1));
    let t = quartic_t(&p(&p(a, b), &p(c, d)));
    !t.is_zero() && matches!(product.proportional(&t), Some(c) if !c.is_zero())
}

/// `W(1)`: the Wronskian of `S_2 -> S_3, G -> (F, G)_2`.
pub fn w1(cat: &QuinticCatalog) -> Covariant {
    Covariant::with_degree(map_wronskian(cat.f().form(), 2, 3).expect("valid map"), 5, 3)
}

/// `W(2)`: the Wronskian of `S_3 -> S_4, G -> (F, G)_2`.
pub fn w2(cat: &QuinticCatalog) -> Covariant {
    Covariant::with_degree(map_wronskian(cat.f().form(), 3, 4).expect("valid map"), 5, 4)
}

/// The five tangent vectors of `(l1, l2, xi) -> l1 (l1^4 + 2 xi l1^2 l2^2 + l2^4)`
/// at `(x1, x2, xi)` along `(x1,0,0), (x2,0,0), (0,x1,0), (0,x2,0), (0,0,1)`.
pub fn tangent_vectors() -> Vec<Form> {
    let x1 = Poly::var(Var::X1);
    let x2 = Poly::var(Var::X2);
    let xi = Poly::var(Var::XI);
    let eps = Poly::var(Var::T);
    let fhat = |l1: &Poly, l2: &Poly, xi: &Poly| {
        let (s1, s2) = (l1 * l1, l2 * l2);
        let inner = &(&(&s1 * &s1) + &(&(&s1 * &s2) * xi).scale(&Rational::from_int(2))) + &(&s2 * &s2);
        l1 * &inner
    };
    let zero = Poly::zero();
    let one = Poly::one();
    let directions = [(&x1, &zero, &zero), (&x2, &zero, &zero), (&zero, &x1, &zero), (&zero, &x2, &zero), (&zero, &zero, &one)];
    directions
        .iter()
        .map(|(m1, m2, eta)| {
            let moved = fhat(&(&x1 + &(&eps * m1)), &(&x2 + &(&eps * m2)), &(&xi + &(&eps * eta)));
            let tangent = moved.derivative(Var::T, 1).specialize(&[(Var::T, Rational::ZERO)]);
            Form::from_poly(&tangent, 5, Pair::X).expect("quintic")
        })
        .collect()
}

pub fn tangent_wronskian() -> Form {
    wronskian(&tangent_vectors()).expect("five quintics")
}

/// `Res(F, theta33)`, a degree-18 invariant.
pub fn resultant_f_theta33(cat: &QuinticCatalog) -> Poly {
    sylvester_resultant(cat.f().form(), cat.theta(ThetaName::T33).form()).expect("positive orders")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn lin(s: &str) -> Form {
        Form::from_poly(&p(s), 1, Pair::X).unwrap()
    }

    #[test]
    fn involution_squares_to_scalar() {
        let q = QPoint::symbolic();
        let back = involution(&involution(&q));
        assert_eq!(back, q.scale(&p("-q2^3")));
        assert_eq!(involution(&QPoint::int(1, 0, 0)), QPoint::int(0, 0, 0));
    }

    #[test]
    fn singular_points() {
        assert!(singular_membership(&QPoint::int(1, 0, 0)));
        assert!(singular_membership(&QPoint::int(1, 1, -3)));
        assert!(singular_membership(&QPoint::int(1, 5, 5)));
        assert!(!singular_membership(&QPoint::int(1, 1, 1)));
    }

    #[test]
    fn syzygy_shapes() {
        let cat = QuinticCatalog::new();
        let u = syzygy_u(&cat, &Poly::int(2));
        assert_eq!((u.degree(), u.order()), (5, 5));
        let u0 = syzygy_u(&cat, &Poly::zero());
        assert_eq!(u0, cat.theta(ThetaName::T33).mul(cat.theta(ThetaName::T22)));
        let v = syzygy_v(&cat, &Poly::int(1), &Poly::int(-1));
        assert_eq!((v.degree(), v.order()), (9, 5));
    }

    #[test]
    fn gamma_tau_evaluation_commutes() {
        let cat = QuinticCatalog::new();
        let tau = Triple::new(Rational::new(1, 6), Rational::new(2, 45), Rational::new(-1, 3)).params();
        let f = probe_forms(5, 1).remove(0);
        let w = gamma_tau_at(&cat, &tau, &f);
        assert_eq!(w.order(), 5);
        let specialized: Vec<Form> = sigma_tau_images(&cat, &tau).iter().map(|c| c.at(&f)).collect();
        assert_eq!(w, wronskian(&specialized).unwrap());
    }

    #[test]
    fn factor_stripping() {
        let f = [p("q2"), p("q0*q2 + 3*q1^2")];
        let x = &factor_product(&f, &[2, 3]) * &p("q0 - q1");
        let (e, rest) = factor_exponents(&x, &f);
        assert_eq!(e, vec![2, 3]);
        assert_eq!(rest, p("q0 - q1"));
    }

    #[test]
    fn morley_map_is_linear() {
        let cat = QuinticCatalog::new();
        let f = probe_forms(5, 2).remove(1);
        let t33 = cat.theta(ThetaName::T33).at(&f);
        let (a, b) = (lin("x1 - 2*x2"), lin("3*x2"));
        let sum = morley_mu(&f, &t33, &a.add(&b));
        assert_eq!(sum, morley_mu(&f, &t33, &a).add(&morley_mu(&f, &t33, &b)));
        assert_eq!(sum.order(), 5);
        // generic F: a-degree 4
        let generic = morley_mu(cat.f().form(), cat.theta(ThetaName::T33).form(), &a);
        assert_eq!(generic.coeff(0).homogeneous_degree_in(&(0..6).map(Var::a).collect::<Vec<_>>()), Some(4));
    }

    #[test]
    fn triple_intersections() {
        let (x1, x2) = (lin("x1"), lin("x2"));
        assert!(triple_intersection_check(&x1, &x2, &lin("x1+x2"), &lin("x1-x2")));
        assert!(triple_intersection_check(&x1, &lin("x1+x2"), &lin("x1+2*x2"), &lin("x1+3*x2")));
    }

    #[test]
    fn tangent_vectors_match_closed_forms() {
        let v = tangent_vectors();
        assert_eq!(v[0].body(), p("x1*(5*x1^4 + 6*xi*x1^2*x2^2 + x2^4)"));
        assert_eq!(v[1].body(), p("x2*(5*x1^4 + 6*xi*x1^2*x2^2 + x2^4)"));
        assert_eq!(v[2].body(), p("4*x1^2*x2*(xi*x1^2 + x2^2)"));
        assert_eq!(v[3].body(), p("4*x1*x2^2*(xi*x1^2 + x2^2)"));
        assert_eq!(v[4].body(), p("2*x1^3*x2^2"));
    }
}
