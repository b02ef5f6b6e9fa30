//! Evectant calculus: the evectant operator, evectant sequences of arbitrary
//! covariants, their propagation through transvectants, and the differential
//! identities they satisfy.

use alloc::vec::Vec;
use core::fmt;

use crate::covariants::{generic_form, Covariant};
use crate::forms::{gordan_extract, mu_coefficient, nu_coefficient, BiForm, Form, Pair};
use crate::ring::{binomial, factorial, falling, Poly, Rational, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvectantError {
    /// Degree-zero covariants have no evectants.
    ZeroDegree,
    /// The classical evectant needs an invariant.
    NotInvariant { order: u32 },
    TransvectantIndex { r: u32, bound: u32 },
    GroundFormMismatch,
}

impl fmt::Display for EvectantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvectantError::ZeroDegree => write!(f, "covariant of degree 0 has no evectants"),
            EvectantError::NotInvariant { order } => write!(f, "classical evectant needs an invariant, got order {}", order),
            EvectantError::TransvectantIndex { r, bound } => write!(f, "transvectant index {} exceeds {}", r, bound),
            EvectantError::GroundFormMismatch => write!(f, "covariants of different ground forms"),
        }
    }
}

/// The evectants `A_0 .. A_min(d,n)` of a covariant `Phi`, characterized by
/// `sum_i (A_i, F)_(d-i) = Phi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvectantSequence {
    source: Covariant,
    components: Vec<Covariant>,
}

impl EvectantSequence {
    pub fn source(&self) -> &Covariant {
        &self.source
    }

    pub fn components(&self) -> &[Covariant] {
        &self.components
    }

    pub fn component(&self, i: usize) -> Option<&Covariant> {
        self.components.get(i)
    }

    /// Indices of the nonzero components.
    pub fn support(&self) -> Vec<usize> {
        (0..self.components.len()).filter(|&i| !self.components[i].is_zero()).collect()
    }

    /// `sum_i (A_i, F)_(d-i)`.
    pub fn euler_sum(&self) -> Covariant {
        let d = self.source.d();
        let f = generic_form(d);
        let mut total = Covariant::with_degree(Form::zero(self.source.order(), 0, Pair::X), d, self.source.degree());
        for (i, a) in self.components.iter().enumerate() {
            if !a.is_zero() {
                total = total.add(&a.transvect(&f, d - i as u32));
            }
        }
        total
    }

    /// Checks the Euler reconstruction and the degree-order bookkeeping.
    pub fn is_consistent(&self) -> bool {
        let (d, m, n) = (self.source.d(), self.source.degree(), self.source.order());
        let shapes = self.components.iter().enumerate().all(|(i, a)| {
            a.degree() == m - 1 && a.order() == d + n - 2 * i as u32
        });
        shapes && self.components.len() as u32 == d.min(n) + 1 && self.euler_sum() == self.source
    }

    /// Replaces component `i`, for building deliberately broken sequences.
    pub fn with_component(mut self, i: usize, a: Covariant) -> EvectantSequence {
        self.components[i] = a;
        self
    }
}

/// `E(x) o Phi(y) = sum_i dPhi(y)/da_i x1^i (-x2)^(d-i)`, with no `1/m`.
fn evectant_action(phi: &Covariant) -> BiForm {
    let d = phi.d() as usize;
    let n = phi.order() as usize;
    let mut grid = alloc::vec![alloc::vec![Poly::zero(); n + 1]; d + 1];
    for i in 0..=d {
        // x1^i (-x2)^(d-i) sits at x-index d-i
        let sign = if (d - i) % 2 == 1 { -1 } else { 1 };
        for (cell, c) in grid[d - i].iter_mut().zip(phi.form().coeffs()) {
            let der = c.derivative(Var::a(i), 1);
            *cell = if sign < 0 { -&der } else { der };
        }
    }
    BiForm::raw(grid, phi.degree().saturating_sub(1))
}

/// The evectant operator `Gamma = (1/m) E(x) o Phi(y)`, with `(Gamma, F)_d = Phi(y)`.
pub fn evectant_operator(phi: &Covariant) -> Result<BiForm, EvectantError> {
    let m = phi.degree();
    if m == 0 {
        return Err(EvectantError::ZeroDegree);
    }
    Ok(evectant_action(phi).scale(&Rational::from_int(m as i64).recip()))
}

fn sequence_from_operator(phi: &Covariant, gamma: &BiForm) -> EvectantSequence {
    let (d, m) = (phi.d(), phi.degree());
    let components = (0..=d.min(phi.order()))
        .map(|i| Covariant::with_degree(gordan_extract(gamma, i).expect("i <= min(d, n)"), d, m - 1))
        .collect();
    EvectantSequence { source: phi.clone(), components }
}

/// Evectants by direct extraction from the evectant operator.
pub fn evectant_sequence(phi: &Covariant) -> Result<EvectantSequence, EvectantError> {
    let gamma = evectant_operator(phi)?;
    Ok(sequence_from_operator(phi, &gamma))
}

/// Evectants of `Phi^k` from the operator of `Phi`: `Gamma(Phi^k) = Phi(y)^(k-1) Gamma(Phi)`.
pub fn evectant_sequence_of_power(phi: &Covariant, k: u32) -> Result<EvectantSequence, EvectantError> {
    let gamma = evectant_operator(phi)?;
    assert!(k >= 1, "power must be positive");
    let y_power = phi.form().pow(k - 1).with_pair(Pair::Y);
    let lifted = BiForm::outer(&Form::constant(Poly::one()), &y_power).mul(&gamma);
    Ok(sequence_from_operator(&phi.pow(k), &lifted))
}

fn kappa(d: u32, n: u32, n2: u32, m: u32, m2: u32, r: u32, s: u32) -> Rational {
    let num = &(&factorial(n - r) * &factorial(n2 - r)) * &factorial(d + n + n2 - 2 * r - 2 * s + 1);
    let den = &(&(&factorial(n) * &factorial(n2)) * &(&factorial(s) * &factorial(d + n + n2 - 2 * r - s + 1)))
        * &Rational::from_int((m + m2) as i64);
    &num / &den
}

fn lambda(i: u32, k: u32, n: u32, n2: u32, r: u32) -> Rational {
    let v = &(&(&binomial(r, k) * &falling(i, k)) * &falling(n - i, r - k)) * &falling(n2, r);
    if k % 2 == 1 {
        -&v
    } else {
        v
    }
}

/// Coefficient of `(A_i, Psi)_(r-i+s)` (or of `(B_i, Phi)_(r-i+s)` with the
/// roles of `n` and `n2` swapped) in `C_s`, without the `kappa m` prefactor.
fn side_coefficient(d: u32, n: u32, n2: u32, r: u32, s: u32, i: u32) -> Rational {
    let lo = [0i64, r as i64 - n as i64 + i as i64, i as i64 - s as i64].into_iter().max().unwrap() as u32;
    let hi = i.min(r);
    let mut acc = Rational::ZERO;
    if lo > hi {
        return acc;
    }
    for k in lo..=hi {
        let mu = mu_coefficient(d + k - i, n + n2 + k - 2 * r - i, s, i - k);
        if mu.is_zero() {
            continue;
        }
        let nu = nu_coefficient(d - i, n + k - i - r, k, n2 - r, s + k - i);
        acc = &acc + &(&(&lambda(i, k, n, n2, r) * &mu) * &nu);
    }
    acc
}

/// The evectants of `(Phi, Psi)_r` computed from those of `Phi` and `Psi`.
pub fn transvectant_evectants(
    a_seq: &EvectantSequence,
    b_seq: &EvectantSequence,
    r: u32,
) -> Result<EvectantSequence, EvectantError> {
    let (phi, psi) = (&a_seq.source, &b_seq.source);
    if phi.d() != psi.d() {
        return Err(EvectantError::GroundFormMismatch);
    }
    let (d, m, m2, n, n2) = (phi.d(), phi.degree(), psi.degree(), phi.order(), psi.order());
    if r > n.min(n2) {
        return Err(EvectantError::TransvectantIndex { r, bound: n.min(n2) });
    }
    let theta = phi.transvect(psi, r);
    let top = d.min(n + n2 - 2 * r);
    let mut components = Vec::with_capacity(top as usize + 1);
    for s in 0..=top {
        let k = kappa(d, n, n2, m, m2, r, s);
        let order = d + n + n2 - 2 * r - 2 * s;
        let mut c = Covariant::with_degree(Form::zero(order, 0, Pair::X), d, m + m2 - 1);
        let mut push = |coef: Rational, a: &Covariant, other: &Covariant, i: u32| {
            // index r-i+s outside [0, min orders] contributes nothing
            if coef.is_zero() || a.is_zero() || r + s < i {
                return;
            }
            let t = r + s - i;
            if t > a.order().min(other.order()) {
                return;
            }
            c = c.add(&a.transvect(other, t).scale(&coef));
        };
        let xi_pre = &k * &Rational::from_int(m as i64);
        for i in 0..=d.min(n) {
            let coef = &xi_pre * &side_coefficient(d, n, n2, r, s, i);
            push(coef, &a_seq.components[i as usize], psi, i);
        }
        let mut eta_pre = &k * &Rational::from_int(m2 as i64);
        if r % 2 == 1 {
            eta_pre = -&eta_pre;
        }
        for i in 0..=d.min(n2) {
            let coef = &eta_pre * &side_coefficient(d, n2, n, r, s, i);
            push(coef, &b_seq.components[i as usize], phi, i);
        }
        components.push(c);
    }
    Ok(EvectantSequence { source: theta, components })
}

/// The evectants of the product `Phi Psi`, as a zeroth transvectant.
pub fn product_evectants(a_seq: &EvectantSequence, b_seq: &EvectantSequence) -> Result<EvectantSequence, EvectantError> {
    transvectant_evectants(a_seq, b_seq, 0)
}

/// The evectants of the generic form itself: only `A_d = 1`.
pub fn ground_evectants(d: u32) -> EvectantSequence {
    let f = generic_form(d);
    let mut components: Vec<Covariant> =
        (0..d).map(|i| Covariant::with_degree(Form::zero(2 * d - 2 * i, 0, Pair::X), d, 0)).collect();
    components.push(Covariant::with_degree(Form::constant(Poly::one()), d, 0));
    EvectantSequence { source: f, components }
}

/// `E_I = (1/m) sum_i dI/da_i (-x2)^(d-i) x1^i` for an invariant `I`.
pub fn classical_evectant(inv: &Covariant) -> Result<Covariant, EvectantError> {
    if inv.order() != 0 {
        return Err(EvectantError::NotInvariant { order: inv.order() });
    }
    let gamma = evectant_operator(inv)?;
    let form = gamma.as_x_form().expect("y-order 0");
    Ok(Covariant::with_degree(form, inv.d(), inv.degree() - 1))
}

/// The three infinitesimal covariance equations:
/// `sum (d-i) a_(i+1) dPhi/da_i = x1 dPhi/dx2`,
/// `sum i a_(i-1) dPhi/da_i = x2 dPhi/dx1`,
/// `sum (d-2i) a_i dPhi/da_i = x1 dPhi/dx1 - x2 dPhi/dx2`.
pub fn covariance_pde_check(phi: &Covariant) -> bool {
    let d = phi.d();
    let body = phi.form().body();
    let x1 = Poly::var(Var::X1);
    let x2 = Poly::var(Var::X2);
    let a = |i: u32| Poly::var(Var::a(i as usize));
    let da: Vec<Poly> = (0..=d).map(|i| body.derivative(Var::a(i as usize), 1)).collect();
    let dx1 = body.derivative(Var::X1, 1);
    let dx2 = body.derivative(Var::X2, 1);
    let int = |n: i64| Rational::from_int(n);

    let mut lower = Poly::zero();
    let mut raise = Poly::zero();
    let mut torus = Poly::zero();
    for i in 0..=d {
        if i < d {
            lower = &lower + &(&a(i + 1) * &da[i as usize]).scale(&int((d - i) as i64));
        }
        if i > 0 {
            raise = &raise + &(&a(i - 1) * &da[i as usize]).scale(&int(i as i64));
        }
        torus = &torus + &(&a(i) * &da[i as usize]).scale(&int(d as i64 - 2 * i as i64));
    }
    lower == &x1 * &dx2 && raise == &x2 * &dx1 && torus == &(&x1 * &dx1) - &(&x2 * &dx2)
}

fn omega_weight(q: u32, i: u32, d: u32, m: u32, n: u32) -> Rational {
    let (i, d, m, n) = (i as i64, d as i64, m as i64, n as i64);
    match q {
        0 => Rational::from_int(d - i),
        1 => &Rational::new((d - i) * (2 * i - n), d * (n + 2)) + &Rational::new(m * i - n, m * d),
        2 => Rational::from_int(i * (n - i) * (d - i + n + 1)),
        _ => unreachable!(),
    }
}

/// The `q`-th identity `sum_i w_(i,q) (A_i, F)_(d-i-1+q)`, which should vanish.
pub fn omega_identity(seq: &EvectantSequence, q: u32) -> Covariant {
    let src = &seq.source;
    let (d, m, n) = (src.d(), src.degree(), src.order());
    let f = generic_form(d);
    let order = (n + 2).saturating_sub(2 * q);
    let mut total = Covariant::with_degree(Form::zero(order, 0, Pair::X), d, m);
    for (i, a) in seq.components.iter().enumerate() {
        let i = i as u32;
        if a.is_zero() || d + q < i + 1 {
            continue;
        }
        let w = omega_weight(q, i, d, m, n);
        if w.is_zero() {
            continue;
        }
        total = total.add(&a.transvect(&f, d + q - i - 1).scale(&w));
    }
    total
}

/// Checks all three identities `q = 0, 1, 2`.
pub fn omega_identity_check(seq: &EvectantSequence) -> bool {
    (0..=2).all(|q| omega_identity(seq, q).is_zero())
}

/// Both sides of `(([E(x) o Phi(y)], F(x))_(d-1), U(x))_2 = (n/d) {(Phi, U)_1}_(x:=y)`,
/// as forms in `y`.
pub fn phi_diffeq_sides(phi: &Covariant, u: &Form) -> (Form, Form) {
    let d = phi.d();
    let f = generic_form(d);
    let lhs = evectant_action(phi)
        .transvect_x(f.form(), d - 1)
        .transvect_x(u, 2)
        .as_y_form()
        .expect("x-order 0");
    let rhs = crate::forms::transvectant(phi.form(), u, 1)
        .scale(&Rational::new(phi.order() as i64, d as i64))
        .with_pair(Pair::Y);
    (lhs, rhs)
}

pub fn phi_diffeq_check(phi: &Covariant, u: &Form) -> bool {
    let (lhs, rhs) = phi_diffeq_sides(phi, u);
    lhs.order() == rhs.order() && lhs.coeffs() == rhs.coeffs()
}

/// How to reach the evectants of `theta22^7` inside the iterative pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerPath {
    /// Six products, each through the transvectant theorem.
    Iterate,
    /// `Gamma(Phi^k) = Phi(y)^(k-1) Gamma(Phi)`, then direct extraction.
    Shortcut,
}

/// The evectants of `H = (theta22^7, F theta39)_14`, obtained from the
/// ground form's sequence by repeated use of the transvectant theorem.
/// The single component is the classical evectant of `H`.
pub fn hermite_evectants(path: PowerPath) -> EvectantSequence {
    let g = ground_evectants(5);
    let t = |a: &EvectantSequence, b: &EvectantSequence, r| transvectant_evectants(a, b, r).expect("valid index");
    let t22 = t(&g, &g, 4);
    let t26 = t(&g, &g, 2);
    let t39 = t(&g, &t26, 1);
    let f_t39 = t(&g, &t39, 0);
    let t22_7 = match path {
        PowerPath::Iterate => (1..7).fold(t22.clone(), |acc, _| t(&acc, &t22, 0)),
        PowerPath::Shortcut => evectant_sequence_of_power(t22.source(), 7).expect("degree 2"),
    };
    t(&t22_7, &f_t39, 14)
}
