//! Binary and bihomogeneous forms.
//!
//! A [`Form`] of order `n` is stored as its coefficient vector: entry `j`
//! multiplies `x1^(n-j) * x2^j` (or the same power product in `y`). The
//! coefficients are polynomials that never mention `x1, x2, y1, y2`. Working
//! on coefficient vectors keeps transvectants and Wronskians free of repeated
//! differentiation of full polynomial bodies.

mod gordan;
mod transvectant;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ring::{binomial, falling, Monomial, Poly, PolyAccumulator, Rational, Var};

pub use gordan::{bracket, gordan_extract, gordan_reconstruct, gordan_series, mu_coefficient, nu_coefficient, omega, pi_r, polarize};
pub use transvectant::transvectant;

/// Which pair of homogeneous variables a form is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pair {
    X,
    Y,
}

impl Pair {
    pub fn vars(self) -> [Var; 2] {
        match self {
            Pair::X => [Var::X1, Var::X2],
            Pair::Y => [Var::Y1, Var::Y2],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormError {
    /// The body is not homogeneous of the declared order.
    NotHomogeneous { expected: u32 },
    /// A coefficient mentions a homogeneous variable of the other pair.
    ForeignVariable(Var),
    /// Two forms that must share an order do not.
    OrderMismatch { left: u32, right: u32 },
    /// An index such as `r` lies outside the range where the operation is defined.
    OutOfRange { index: u32, bound: u32 },
    /// Polarization with `s + t` different from the order.
    BadSplit { order: u32, s: u32, t: u32 },
}

impl fmt::Display for FormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormError::NotHomogeneous { expected } => write!(f, "not homogeneous of order {}", expected),
            FormError::ForeignVariable(v) => write!(f, "unexpected variable {} in a coefficient", v),
            FormError::OrderMismatch { left, right } => write!(f, "order mismatch: {} vs {}", left, right),
            FormError::OutOfRange { index, bound } => write!(f, "index {} exceeds {}", index, bound),
            FormError::BadSplit { order, s, t } => write!(f, "cannot split order {} as {} + {}", order, s, t),
        }
    }
}

const HOMOGENEOUS: [Var; 4] = [Var::X1, Var::X2, Var::Y1, Var::Y2];

fn a_vars() -> Vec<Var> {
    (0..=crate::ring::MAX_GENERIC_ORDER).map(Var::a).collect()
}

/// Common degree in `a0..a9` of the nonzero coefficients, if there is one.
fn coefficient_degree(coeffs: &[Poly]) -> Result<Option<u32>, ()> {
    let avars = a_vars();
    let mut found = None;
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        let d = c.homogeneous_degree_in(&avars).ok_or(())?;
        match found {
            None => found = Some(d),
            Some(e) if e != d => return Err(()),
            _ => {}
        }
    }
    Ok(found)
}

/// A binary form: homogeneous of a fixed order in one variable pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    coeffs: Vec<Poly>,
    adeg: u32,
    pair: Pair,
}

impl Form {
    /// Builds a form from its coefficient vector, inferring the a-degree.
    /// The order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Poly>, pair: Pair) -> Result<Form, FormError> {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        for c in &coeffs {
            for v in HOMOGENEOUS {
                if c.degree_of(v) > 0 {
                    return Err(FormError::ForeignVariable(v));
                }
            }
        }
        // Mixed a-degrees are allowed (specializations, perturbed test data); the
        // recorded a-degree is then 0.
        let adeg = coefficient_degree(&coeffs).ok().flatten().unwrap_or(0);
        Ok(Form { coeffs, adeg, pair })
    }

    /// Internal constructor: the caller guarantees the gradings.
    pub(crate) fn raw(coeffs: Vec<Poly>, adeg: u32, pair: Pair) -> Form {
        debug_assert!(!coeffs.is_empty());
        Form { coeffs, adeg, pair }
    }

    pub fn zero(order: u32, adeg: u32, pair: Pair) -> Form {
        Form { coeffs: vec![Poly::zero(); order as usize + 1], adeg, pair }
    }

    /// A form with constant coefficients.
    pub fn constant(c: Poly) -> Form {
        Form::from_coeffs(vec![c], Pair::X).expect("constant form")
    }

    /// Reads a polynomial as a form of the given order in `pair`.
    pub fn from_poly(p: &Poly, order: u32, pair: Pair) -> Result<Form, FormError> {
        let [v1, v2] = pair.vars();
        let mut coeffs = vec![Poly::zero(); order as usize + 1];
        for (m, c) in p.coefficients_in(&[v1, v2]) {
            if m.degree() != order {
                return Err(FormError::NotHomogeneous { expected: order });
            }
            coeffs[m.exp(v2) as usize] = c;
        }
        Form::from_coeffs(coeffs, pair)
    }

    /// Like [`Form::from_poly`] but reads the order off the polynomial.
    /// The zero polynomial becomes the zero form of order 0.
    pub fn parse_order(p: &Poly, pair: Pair) -> Result<Form, FormError> {
        let order = if p.is_zero() {
            0
        } else {
            p.homogeneous_degree_in(&pair.vars()).ok_or(FormError::NotHomogeneous { expected: 0 })?
        };
        Form::from_poly(p, order, pair)
    }

    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn adeg(&self) -> u32 {
        self.adeg
    }

    pub fn pair(&self) -> Pair {
        self.pair
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Poly> {
        self.coeffs
    }

    /// Coefficient of `x1^(n-j) x2^j`.
    pub fn coeff(&self, j: usize) -> &Poly {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    /// The same form written in another variable pair.
    pub fn with_pair(&self, pair: Pair) -> Form {
        Form { coeffs: self.coeffs.clone(), adeg: self.adeg, pair }
    }

    /// Overrides the recorded a-degree.
    pub fn with_adeg(mut self, adeg: u32) -> Form {
        self.adeg = adeg;
        self
    }

    /// The form as a polynomial.
    pub fn body(&self) -> Poly {
        let [v1, v2] = self.pair.vars();
        let n = self.order();
        let mut acc = PolyAccumulator::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            let m = Monomial::from_pairs(&[(v1, n - j as u32), (v2, j as u32)]);
            for (cm, cc) in c.terms() {
                acc.add_term(cm.mul(&m), cc);
            }
        }
        acc.finish()
    }

    fn merged_adeg(&self, other: &Form) -> u32 {
        match (self.is_zero(), other.is_zero()) {
            (true, false) => other.adeg,
            _ => self.adeg,
        }
    }

    pub fn add(&self, other: &Form) -> Form {
        assert_eq!(self.order(), other.order(), "adding forms of different orders");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Form { coeffs, adeg: self.merged_adeg(other), pair: self.pair }
    }

    pub fn sub(&self, other: &Form) -> Form {
        assert_eq!(self.order(), other.order(), "subtracting forms of different orders");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Form { coeffs, adeg: self.merged_adeg(other), pair: self.pair }
    }

    pub fn neg(&self) -> Form {
        self.scale(&Rational::from_int(-1))
    }

    pub fn scale(&self, c: &Rational) -> Form {
        Form { coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(), adeg: self.adeg, pair: self.pair }
    }

    /// Multiplies every coefficient by a polynomial free of the homogeneous variables.
    pub fn scale_poly(&self, c: &Poly) -> Form {
        let extra = coefficient_degree(core::slice::from_ref(c)).ok().flatten().unwrap_or(0);
        Form { coeffs: self.coeffs.iter().map(|p| p * c).collect(), adeg: self.adeg + extra, pair: self.pair }
    }

    /// Product of forms (the 0-th transvectant).
    pub fn mul(&self, other: &Form) -> Form {
        let (m, n) = (self.coeffs.len(), other.coeffs.len());
        let mut accs: Vec<PolyAccumulator> = (0..m + n - 1).map(|_| PolyAccumulator::new()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                accs[i + j].add_product(a, b, &Rational::ONE);
            }
        }
        Form { coeffs: accs.into_iter().map(PolyAccumulator::finish).collect(), adeg: self.adeg + other.adeg, pair: self.pair }
    }

    pub fn pow(&self, k: u32) -> Form {
        let mut acc = Form::raw(vec![Poly::one()], 0, self.pair);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `d^(k1+k2) / dx1^k1 dx2^k2` of the form.
    pub fn partial(&self, k1: u32, k2: u32) -> Form {
        let n = self.order();
        if k1 + k2 > n {
            return Form::zero(0, self.adeg, self.pair);
        }
        let new_order = n - k1 - k2;
        let mut coeffs = Vec::with_capacity(new_order as usize + 1);
        for j in k2..=(n - k1) {
            let w = &falling(n - j, k1) * &falling(j, k2);
            coeffs.push(self.coeffs[j as usize].scale(&w));
        }
        Form { coeffs, adeg: self.adeg, pair: self.pair }
    }

    /// Applies a map to every coefficient; the a-degree is re-inferred.
    pub fn map_coeffs<F: FnMut(&Poly) -> Poly>(&self, f: F) -> Form {
        let coeffs: Vec<Poly> = self.coeffs.iter().map(f).collect();
        let adeg = coefficient_degree(&coeffs).ok().flatten().unwrap_or(0);
        Form { coeffs, adeg, pair: self.pair }
    }

    /// Substitutes polynomials for coefficient-side variables.
    pub fn substitute(&self, bindings: &[(Var, Poly)]) -> Form {
        self.map_coeffs(|c| c.substitute(bindings))
    }

    /// Substitutes rational values for coefficient-side variables.
    pub fn specialize(&self, values: &[(Var, Rational)]) -> Form {
        self.map_coeffs(|c| c.specialize(values))
    }

    /// Evaluates a covariant of `d`-ics at a concrete `d`-ic `f`: each `a_i`
    /// becomes the coefficient of `x1^(d-i) x2^i` in `f` divided by `C(d,i)`.
    pub fn at(&self, f: &Form) -> Form {
        self.substitute(&generic_bindings(f))
    }

    /// Restriction to `x1 = 0`, i.e. the coefficient of `x2^n`.
    pub fn at_x1_zero(&self) -> Poly {
        self.coeffs.last().unwrap().clone()
    }

    /// Number of monomials of the body.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().map(Poly::len).sum()
    }

    /// `c` with `self = c * other`, comparing bodies.
    pub fn proportional(&self, other: &Form) -> Option<Rational> {
        if self.order() != other.order() {
            return None;
        }
        self.body().proportional(&other.body())
    }
}

/// Bindings `a_i := f_i / C(d,i)` for evaluating covariants of the generic `d`-ic at `f`.
pub fn generic_bindings(f: &Form) -> Vec<(Var, Poly)> {
    let d = f.order();
    (0..=d).map(|i| (Var::a(i as usize), f.coeff(i as usize).scale(&binomial(d, i).recip()))).collect()
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.body(), f)
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[order {}, adeg {}]({})", self.order(), self.adeg, self.body())
    }
}

/// A form bihomogeneous in `x` and `y`. Entry `(j, l)` of the grid multiplies
/// `x1^(p-j) x2^j y1^(q-l) y2^l`, with `p` the x-order and `q` the y-order.
#[derive(Clone, PartialEq, Eq)]
pub struct BiForm {
    grid: Vec<Vec<Poly>>,
    adeg: u32,
}

impl BiForm {
    pub fn zero(xorder: u32, yorder: u32, adeg: u32) -> BiForm {
        BiForm { grid: vec![vec![Poly::zero(); yorder as usize + 1]; xorder as usize + 1], adeg }
    }

    pub(crate) fn raw(grid: Vec<Vec<Poly>>, adeg: u32) -> BiForm {
        BiForm { grid, adeg }
    }

    pub fn from_grid(grid: Vec<Vec<Poly>>) -> Result<BiForm, FormError> {
        assert!(!grid.is_empty() && !grid[0].is_empty(), "empty grid");
        let width = grid[0].len();
        assert!(grid.iter().all(|r| r.len() == width), "ragged grid");
        let flat: Vec<Poly> = grid.iter().flatten().cloned().collect();
        for c in &flat {
            for v in HOMOGENEOUS {
                if c.degree_of(v) > 0 {
                    return Err(FormError::ForeignVariable(v));
                }
            }
        }
        let adeg = coefficient_degree(&flat).ok().flatten().unwrap_or(0);
        Ok(BiForm { grid, adeg })
    }

    /// Reads a polynomial bihomogeneous of orders `(p, q)` in `x` and `y`.
    pub fn from_poly(body: &Poly, p: u32, q: u32) -> Result<BiForm, FormError> {
        let mut grid = vec![vec![Poly::zero(); q as usize + 1]; p as usize + 1];
        for (m, c) in body.coefficients_in(&HOMOGENEOUS) {
            if m.exp(Var::X1) + m.exp(Var::X2) != p {
                return Err(FormError::NotHomogeneous { expected: p });
            }
            if m.exp(Var::Y1) + m.exp(Var::Y2) != q {
                return Err(FormError::NotHomogeneous { expected: q });
            }
            grid[m.exp(Var::X2) as usize][m.exp(Var::Y2) as usize] = c;
        }
        BiForm::from_grid(grid)
    }

    /// `A(x) * B(y)`.
    pub fn outer(a: &Form, b: &Form) -> BiForm {
        let grid = a.coeffs().iter().map(|ca| b.coeffs().iter().map(|cb| ca * cb).collect()).collect();
        BiForm { grid, adeg: a.adeg() + b.adeg() }
    }

    pub fn xorder(&self) -> u32 {
        self.grid.len() as u32 - 1
    }

    pub fn yorder(&self) -> u32 {
        self.grid[0].len() as u32 - 1
    }

    pub fn adeg(&self) -> u32 {
        self.adeg
    }

    pub fn entry(&self, j: usize, l: usize) -> &Poly {
        &self.grid[j][l]
    }

    pub fn grid(&self) -> &[Vec<Poly>] {
        &self.grid
    }

    pub fn is_zero(&self) -> bool {
        self.grid.iter().flatten().all(Poly::is_zero)
    }

    pub fn body(&self) -> Poly {
        let (p, q) = (self.xorder(), self.yorder());
        let mut acc = PolyAccumulator::new();
        for (j, row) in self.grid.iter().enumerate() {
            for (l, c) in row.iter().enumerate() {
                let m = Monomial::from_pairs(&[
                    (Var::X1, p - j as u32),
                    (Var::X2, j as u32),
                    (Var::Y1, q - l as u32),
                    (Var::Y2, l as u32),
                ]);
                for (cm, cc) in c.terms() {
                    acc.add_term(cm.mul(&m), cc);
                }
            }
        }
        acc.finish()
    }

    pub fn add(&self, other: &BiForm) -> BiForm {
        assert_eq!((self.xorder(), self.yorder()), (other.xorder(), other.yorder()), "bi-order mismatch");
        let grid = self.grid.iter().zip(&other.grid).map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect()).collect();
        let adeg = if self.is_zero() { other.adeg } else { self.adeg };
        BiForm { grid, adeg }
    }

    pub fn scale(&self, c: &Rational) -> BiForm {
        BiForm { grid: self.grid.iter().map(|r| r.iter().map(|p| p.scale(c)).collect()).collect(), adeg: self.adeg }
    }

    pub fn mul(&self, other: &BiForm) -> BiForm {
        let (p, q) = (self.xorder() + other.xorder(), self.yorder() + other.yorder());
        let mut accs: Vec<Vec<PolyAccumulator>> =
            (0..=p).map(|_| (0..=q).map(|_| PolyAccumulator::new()).collect()).collect();
        for (j1, r1) in self.grid.iter().enumerate() {
            for (l1, c1) in r1.iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                for (j2, r2) in other.grid.iter().enumerate() {
                    for (l2, c2) in r2.iter().enumerate() {
                        accs[j1 + j2][l1 + l2].add_product(c1, c2, &Rational::ONE);
                    }
                }
            }
        }
        let grid = accs.into_iter().map(|r| r.into_iter().map(PolyAccumulator::finish).collect()).collect();
        BiForm { grid, adeg: self.adeg + other.adeg }
    }

    pub fn pow(&self, k: u32) -> BiForm {
        let mut acc = BiForm { grid: vec![vec![Poly::one()]], adeg: 0 };
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Restriction to the diagonal `y := x`.
    pub fn diagonal(&self) -> Form {
        let n = (self.xorder() + self.yorder()) as usize;
        let mut accs: Vec<PolyAccumulator> = (0..=n).map(|_| PolyAccumulator::new()).collect();
        for (j, row) in self.grid.iter().enumerate() {
            for (l, c) in row.iter().enumerate() {
                accs[j + l].add_poly(c);
            }
        }
        Form::raw(accs.into_iter().map(PolyAccumulator::finish).collect(), self.adeg, Pair::X)
    }

    /// Reads a form with y-order 0 as a form in `x`.
    pub fn as_x_form(&self) -> Option<Form> {
        (self.yorder() == 0).then(|| Form::raw(self.grid.iter().map(|r| r[0].clone()).collect(), self.adeg, Pair::X))
    }

    /// Reads a form with x-order 0 as a form in `y`.
    pub fn as_y_form(&self) -> Option<Form> {
        (self.xorder() == 0).then(|| Form::raw(self.grid[0].clone(), self.adeg, Pair::Y))
    }

    /// The `y`-coefficient forms: entry `l` is the x-form multiplying `y1^(q-l) y2^l`.
    pub fn y_slices(&self) -> Vec<Form> {
        (0..=self.yorder() as usize)
            .map(|l| Form::raw(self.grid.iter().map(|r| r[l].clone()).collect(), self.adeg, Pair::X))
            .collect()
    }

    /// Reassembles a form from its y-slices (see [`BiForm::y_slices`]).
    pub fn from_y_slices(slices: &[Form]) -> BiForm {
        let p = slices[0].order() as usize;
        assert!(slices.iter().all(|s| s.order() as usize == p), "slices of different x-orders");
        let grid = (0..=p).map(|j| slices.iter().map(|s| s.coeff(j).clone()).collect()).collect();
        let adeg = slices.iter().find(|s| !s.is_zero()).map_or(slices[0].adeg(), Form::adeg);
        BiForm { grid, adeg }
    }

    /// Transvectant in `x` with a form in `x`, treating `y` as a parameter.
    pub fn transvect_x(&self, b: &Form, r: u32) -> BiForm {
        let slices: Vec<Form> = self.y_slices().iter().map(|s| transvectant(s, b, r)).collect();
        let mut out = BiForm::from_y_slices(&slices);
        out.adeg = self.adeg + b.adeg();
        out
    }

    /// Substitutes polynomials for coefficient-side variables.
    pub fn substitute(&self, bindings: &[(Var, Poly)]) -> BiForm {
        let grid: Vec<Vec<Poly>> = self.grid.iter().map(|r| r.iter().map(|c| c.substitute(bindings)).collect()).collect();
        let flat: Vec<Poly> = grid.iter().flatten().cloned().collect();
        let adeg = coefficient_degree(&flat).ok().flatten().unwrap_or(0);
        BiForm { grid, adeg }
    }
}

impl fmt::Debug for BiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiForm[{}, {}]({})", self.xorder(), self.yorder(), self.body())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn body_round_trip() {
        let f = Form::from_poly(&p("a0*x1^2 + 2*a1*x1*x2 + a2*x2^2"), 2, Pair::X).unwrap();
        assert_eq!(f.adeg(), 1);
        assert_eq!(f.coeff(1), &p("2*a1"));
        assert_eq!(f.body(), p("a0*x1^2 + 2*a1*x1*x2 + a2*x2^2"));
        assert!(Form::from_poly(&p("x1^2 + x2"), 2, Pair::X).is_err());
        assert_eq!(Form::from_poly(&p("a0*x1 + a1^2*x2"), 1, Pair::X).unwrap().adeg(), 0);
        assert!(Form::from_poly(&p("y1*x1"), 1, Pair::X).is_err());
    }

    #[test]
    fn partials_match_polynomial_derivatives() {
        let body = p("3*x1^4 - 2*a3*x1^3*x2 + x1*x2^3 + 7*x2^4");
        let f = Form::from_poly(&body, 4, Pair::X).unwrap();
        for k1 in 0..=4 {
            for k2 in 0..=(4 - k1) {
                let want = body.derivative(Var::X1, k1).derivative(Var::X2, k2);
                assert_eq!(f.partial(k1, k2).body(), want);
            }
        }
    }

    #[test]
    fn products_and_diagonal() {
        let a = Form::from_poly(&p("x1+x2"), 1, Pair::X).unwrap();
        let b = Form::from_poly(&p("x1-x2"), 1, Pair::X).unwrap();
        assert_eq!(a.mul(&b).body(), p("x1^2-x2^2"));
        assert_eq!(a.pow(3).body(), p("(x1+x2)^3"));
        let g = BiForm::outer(&a, &b);
        assert_eq!(g.body(), p("(x1+x2)*(y1-y2)"));
        assert_eq!(g.diagonal().body(), p("x1^2-x2^2"));
        assert_eq!(BiForm::from_poly(&g.body(), 1, 1).unwrap(), g);
    }

    #[test]
    fn transvectant_in_x_with_y_parameters() {
        let g = BiForm::from_poly(&p("x1^2*y1 - 3*x1*x2*y2 + a0*x2^2*y1"), 2, 1).unwrap();
        let b = Form::from_poly(&p("x1^2 + 2*x2^2"), 2, Pair::X).unwrap();
        let t = g.transvect_x(&b, 1);
        // slice by slice against the y-coefficient forms
        for (l, s) in g.y_slices().iter().enumerate() {
            assert_eq!(t.y_slices()[l], transvectant(s, &b, 1));
        }
        assert_eq!((t.xorder(), t.yorder()), (2, 1));
    }

    #[test]
    fn evaluation_at_a_quintic() {
        let generic = Form::from_poly(&p("a0*x1^2 + 2*a1*x1*x2 + a2*x2^2"), 2, Pair::X).unwrap();
        let f = Form::from_poly(&p("x1^2 + 6*x1*x2 - x2^2"), 2, Pair::X).unwrap();
        assert_eq!(generic.at(&f), f);
    }
}
