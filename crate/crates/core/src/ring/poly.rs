use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use hashbrown::HashMap;

use super::monomial::{Monomial, Var};
use super::rational::Rational;
use super::RingError;

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted ascending in graded-lex order with no zero
/// coefficients, so two polynomials are equal iff their term vectors are.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Rational)>,
}

/// Hash-map accumulator for sums of products; avoids materializing every
/// intermediate product as its own sorted polynomial.
#[derive(Default)]
pub struct PolyAccumulator {
    map: HashMap<Monomial, Rational>,
}

impl PolyAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        PolyAccumulator { map: HashMap::with_capacity(n) }
    }

    #[inline]
    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&m) {
            Some(e) => *e += c,
            None => {
                self.map.insert(m, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, p: &Poly, w: &Rational) {
        if w.is_zero() {
            return;
        }
        for (m, c) in &p.terms {
            if w.is_one() {
                self.add_term(*m, c);
            } else {
                self.add_term(*m, &(c * w));
            }
        }
    }

    pub fn add_poly(&mut self, p: &Poly) {
        self.add_scaled(p, &Rational::ONE);
    }

    /// Adds `w * p * q`.
    pub fn add_product(&mut self, p: &Poly, q: &Poly, w: &Rational) {
        if w.is_zero() || p.is_zero() || q.is_zero() {
            return;
        }
        self.map.reserve(p.len().saturating_mul(q.len()).min(1 << 16));
        for (mp, cp) in &p.terms {
            let cpw = if w.is_one() { cp.clone() } else { cp * w };
            for (mq, cq) in &q.terms {
                self.add_term(mp.mul(mq), &(&cpw * cq));
            }
        }
    }

    pub fn finish(self) -> Poly {
        let mut terms: Vec<(Monomial, Rational)> =
            self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        Poly { terms }
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::ONE)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v), Rational::ONE)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: alloc::vec![(m, c)] }
        }
    }

    /// Collects arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut acc = PolyAccumulator::new();
        for (m, c) in iter {
            acc.add_term(m, &c);
        }
        acc.finish()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    /// The value if this polynomial is a constant (zero counts).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Largest term in canonical order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last().map(|(m, c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(t, _)| t.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        // Multiplying by a monomial preserves the relative order.
        Poly { terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    pub fn mul_poly(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_monomial(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_monomial(m, c);
        }
        let mut acc = PolyAccumulator::with_capacity(self.len().max(other.len()) * 4);
        acc.add_product(self, other, &Rational::ONE);
        acc.finish()
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(lm)?;
            let qc = c / lc;
            rem = &rem - &divisor.mul_monomial(&qm, &qc);
            quotient.push((qm, qc));
        }
        // leading terms were produced in decreasing order
        quotient.reverse();
        Some(Poly { terms: quotient })
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_poly(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_poly(&base);
            }
        }
        acc
    }

    /// k-fold partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var, k: u32) -> Poly {
        if k == 0 {
            return self.clone();
        }
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e < k {
                continue;
            }
            let mut factor: i64 = 1;
            for j in 0..k {
                factor *= (e - j) as i64;
            }
            let mut nm = *m;
            nm.set(v, e - k);
            terms.push((nm, c * &Rational::from_int(factor)));
        }
        // Every surviving term loses the same k from one exponent, so the order holds.
        Poly { terms }
    }

    /// Largest exponent of `v` appearing in the polynomial.
    pub fn degree_of(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// The common degree in `vars` if every term has the same one.
    pub fn homogeneous_degree_in(&self, vars: &[Var]) -> Option<u32> {
        let mut it = self.terms.iter().map(|(m, _)| m.degree_in(vars));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::all().filter(|&v| self.terms.iter().any(|(m, _)| m.exp(v) > 0)).collect()
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn substitute(&self, bindings: &[(Var, Poly)]) -> Poly {
        if bindings.is_empty() {
            return self.clone();
        }
        let vars: Vec<Var> = bindings.iter().map(|(v, _)| *v).collect();
        // Group by the bound part so each power product is expanded once.
        let mut groups: HashMap<Monomial, Vec<(Monomial, Rational)>> = HashMap::new();
        for (m, c) in &self.terms {
            let (bound, rest) = m.split(&vars);
            groups.entry(bound).or_default().push((rest, c.clone()));
        }
        let mut powers: Vec<Vec<Poly>> = bindings.iter().map(|(_, p)| alloc::vec![Poly::one(), p.clone()]).collect();
        let mut acc = PolyAccumulator::new();
        let mut keys: Vec<Monomial> = groups.keys().copied().collect();
        keys.sort_unstable();
        for bound in keys {
            let rest = Poly::from_terms(groups.remove(&bound).unwrap());
            let mut image = Poly::one();
            for (k, v) in vars.iter().enumerate() {
                let e = bound.exp(*v) as usize;
                if e == 0 {
                    continue;
                }
                while powers[k].len() <= e {
                    let next = powers[k].last().unwrap().mul_poly(&bindings[k].1);
                    powers[k].push(next);
                }
                image = image.mul_poly(&powers[k][e]);
                if image.is_zero() {
                    break;
                }
            }
            acc.add_product(&image, &rest, &Rational::ONE);
        }
        acc.finish()
    }

    /// Substitutes rational values for some variables.
    pub fn specialize(&self, values: &[(Var, Rational)]) -> Poly {
        let mut acc = PolyAccumulator::with_capacity(self.len());
        for (m, c) in &self.terms {
            let mut c = c.clone();
            let mut nm = *m;
            for (v, val) in values {
                let e = m.exp(*v);
                if e > 0 {
                    c = &c * &val.pow(e);
                    nm.set(*v, 0);
                }
            }
            acc.add_term(nm, &c);
        }
        acc.finish()
    }

    /// Groups terms by their part in `vars`: returns `(monomial in vars, coefficient poly)`
    /// in ascending order of the monomial.
    pub fn coefficients_in(&self, vars: &[Var]) -> Vec<(Monomial, Poly)> {
        let mut groups: HashMap<Monomial, Vec<(Monomial, Rational)>> = HashMap::new();
        for (m, c) in &self.terms {
            let (inside, rest) = m.split(vars);
            groups.entry(inside).or_default().push((rest, c.clone()));
        }
        let mut out: Vec<(Monomial, Poly)> = groups
            .into_iter()
            .map(|(k, mut ts)| {
                ts.sort_unstable_by_key(|a| a.0);
                (k, Poly { terms: ts })
            })
            .collect();
        out.sort_unstable_by_key(|a| a.0);
        out
    }

    /// Returns `c` with `self = c * other`, if such a nonzero `c` exists.
    /// Two zero polynomials are proportional with ratio 1.
    pub fn proportional(&self, other: &Poly) -> Option<Rational> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Some(Rational::ONE),
            (true, false) | (false, true) => return None,
            _ => {}
        }
        if self.len() != other.len() {
            return None;
        }
        let (lm_p, lc_p) = self.leading().unwrap();
        let (lm_q, lc_q) = other.leading().unwrap();
        if lm_p != lm_q {
            return None;
        }
        let ratio = lc_p / lc_q;
        let same = self
            .terms
            .iter()
            .zip(&other.terms)
            .all(|((mp, cp), (mq, cq))| mp == mq && *cp == cq * &ratio);
        same.then_some(ratio)
    }

    /// Splits `self = content * primitive` where the primitive part has
    /// coprime integer coefficients and a positive leading coefficient.
    pub fn content_and_primitive(&self) -> Result<(Rational, Poly), RingError> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Zero};
        if self.is_zero() {
            return Err(RingError::ZeroContent);
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(&c.numer());
            den_lcm = den_lcm.lcm(&c.denom());
        }
        let mut content = Rational::from_bigints(num_gcd, den_lcm);
        if self.leading().unwrap().1.signum() < 0 {
            content = -content;
        }
        let inv = content.recip();
        Ok((content, self.scale(&inv)))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_poly(rhs)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

impl core::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        let mut acc = PolyAccumulator::new();
        for p in iter {
            acc.add_poly(&p);
        }
        acc.finish()
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
    fn difference_of_squares() {
        assert_eq!(&p("x1+x2") * &p("x1-x2"), p("x1^2-x2^2"));
        assert_eq!(&p("x1+x2") + &Poly::zero(), p("x1+x2"));
        assert_eq!(&p("2/3*x1") * &p("3/2*x2"), p("x1*x2"));
    }

    #[test]
    fn powers() {
        assert_eq!(p("x1+x2").pow(2), p("x1^2+2*x1*x2+x2^2"));
        assert_eq!(p("a0*x1+7").pow(0), Poly::one());
        assert_eq!(p("x1^3").pow(3), p("x1^9"));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x1^5").derivative(Var::X1, 4), p("120*x1"));
        assert_eq!(p("a0*x1^2").derivative(Var::a(0), 1), p("x1^2"));
        assert_eq!(p("x2^3").derivative(Var::X1, 1), Poly::zero());
    }

    #[test]
    fn substitution() {
        let fq = p("x1*(q0*x1^4+2*q1*x1^2*x2^2+q2*x2^4)");
        let at = fq.substitute(&[(Var::Q0, Poly::one()), (Var::Q1, Poly::zero()), (Var::Q2, Poly::zero())]);
        assert_eq!(at, p("x1^5"));
        let br = p("x1*y2-x2*y1");
        let diag = br.substitute(&[(Var::Y1, Poly::var(Var::X1)), (Var::Y2, Poly::var(Var::X2))]);
        assert!(diag.is_zero());
        // simultaneous, not sequential
        let swapped = p("x1^2*x2").substitute(&[(Var::X1, Poly::var(Var::X2)), (Var::X2, Poly::var(Var::X1))]);
        assert_eq!(swapped, p("x1*x2^2"));
    }

    #[test]
    fn proportionality() {
        assert_eq!(p("2*x1*x2").proportional(&p("x1*x2")), Some(Rational::from_int(2)));
        assert_eq!(p("x1^2").proportional(&p("x1*x2")), None);
        assert_eq!(Poly::zero().proportional(&Poly::zero()), Some(Rational::ONE));
        assert_eq!(p("x1+x2").proportional(&p("x1+2*x2")), None);
    }

    #[test]
    fn content() {
        let (c, q) = p("4*x1^2+6*x2^2").content_and_primitive().unwrap();
        assert_eq!((c, q), (Rational::from_int(2), p("2*x1^2+3*x2^2")));
        let (c, q) = p("-x1").content_and_primitive().unwrap();
        assert_eq!((c, q), (Rational::from_int(-1), p("x1")));
        let (c, q) = p("24/125*x2^3").content_and_primitive().unwrap();
        assert_eq!((c, q), (Rational::new(24, 125), p("x2^3")));
        assert!(Poly::zero().content_and_primitive().is_err());
    }

    #[test]
    fn coefficient_grouping() {
        let f = p("a0*x1^2 + 3*a1*x1^2 + a2*x2^2");
        let groups = f.coefficients_in(&[Var::X1, Var::X2]);
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[1].0, Monomial::var_pow(Var::X2, 2));
        assert_eq!(groups[0].1, p("a0+3*a1"));
    }

    #[test]
    fn exact_division() {
        let a = p("x1^2 - x2^2 + 3*q0*x1");
        let b = p("x1 + x2 - q0/2");
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&a), Some(b));
        assert_eq!(p("x1^2 + 1").div_exact(&p("x1 + 1")), None);
        assert_eq!(Poly::zero().div_exact(&a), Some(Poly::zero()));
        assert_eq!(a.div_exact(&Poly::zero()), None);
    }
}
