//! Covariants of the generic binary `d`-ic and the quintic catalog.

mod catalog;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::forms::{transvectant, Form, Pair};
use crate::linalg::{exact_solve, LinearSystem, Solution};
use crate::ring::{binomial, Poly, Rational, Var};

pub use catalog::{hermite_from, probes_for, QuinticCatalog, ThetaName, GENERATOR_TABLE};

/// A covariant of `d`-ics of degree `m` in the coefficients and order `q`.
#[derive(Clone, PartialEq, Eq)]
pub struct Covariant {
    form: Form,
    d: u32,
    m: u32,
}

impl Covariant {
    /// Wraps a form built from the generic `d`-ic; degree and order are read off it.
    pub fn new(form: Form, d: u32) -> Covariant {
        let m = form.adeg();
        Covariant { form, d, m }
    }

    /// Like [`Covariant::new`] with the degree given explicitly (for the zero covariant).
    pub fn with_degree(form: Form, d: u32, m: u32) -> Covariant {
        Covariant { form: form.with_adeg(m), d, m }
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn into_form(self) -> Form {
        self.form
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.form.order()
    }

    /// `(d m - q) / 2`, or `None` when it is not a nonnegative integer.
    pub fn weight(&self) -> Option<u32> {
        let dm = self.d * self.m;
        let q = self.order();
        (dm >= q && (dm - q).is_multiple_of(2)).then(|| (dm - q) / 2)
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_zero()
    }

    pub fn transvect(&self, other: &Covariant, r: u32) -> Covariant {
        assert_eq!(self.d, other.d, "covariants of different ground forms");
        Covariant::with_degree(transvectant(&self.form, &other.form, r), self.d, self.m + other.m)
    }

    pub fn mul(&self, other: &Covariant) -> Covariant {
        self.transvect(other, 0)
    }

    pub fn pow(&self, k: u32) -> Covariant {
        Covariant::with_degree(self.form.pow(k), self.d, self.m * k)
    }

    pub fn scale(&self, c: &Rational) -> Covariant {
        Covariant::with_degree(self.form.scale(c), self.d, self.m)
    }

    pub fn add(&self, other: &Covariant) -> Covariant {
        assert_eq!((self.m, self.order()), (other.m, other.order()), "degree-order mismatch");
        Covariant::with_degree(self.form.add(&other.form), self.d, self.m)
    }

    pub fn sub(&self, other: &Covariant) -> Covariant {
        assert_eq!((self.m, self.order()), (other.m, other.order()), "degree-order mismatch");
        Covariant::with_degree(self.form.sub(&other.form), self.d, self.m)
    }

    /// Value at a concrete (or parametrized) `d`-ic.
    pub fn at(&self, f: &Form) -> Form {
        assert_eq!(f.order(), self.d, "evaluating at a form of the wrong order");
        self.form.at(f)
    }
}

impl fmt::Debug for Covariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Covariant[d {}, ({}, {})]({})", self.d, self.m, self.order(), self.form.body())
    }
}

/// The generic `d`-ic `sum_i C(d,i) a_i x1^(d-i) x2^i`.
pub fn generic_form(d: u32) -> Covariant {
    assert!((1..=crate::ring::MAX_GENERIC_ORDER as u32).contains(&d), "generic form order out of range");
    let coeffs = (0..=d).map(|i| Poly::var(Var::a(i as usize)).scale(&binomial(d, i))).collect();
    Covariant::new(Form::from_coeffs(coeffs, Pair::X).expect("generic form"), d)
}

/// Number of partitions of `n` into at most `k` parts, each at most `l`
/// (the coefficient of `q^n` in the Gaussian binomial `[k+l, k]`).
pub fn partitions_bounded(n: i64, k: u32, l: u32) -> u64 {
    if n < 0 {
        return 0;
    }
    let n = n as usize;
    // table[j][s]: partitions of s into at most j parts, each <= l, built by
    // conjugation-free recursion over the largest allowed part.
    // Use p(s; parts <= k, size <= l) = number of Ferrers diagrams in a k x l box.
    let (k, l) = (k as usize, l as usize);
    // dp over part sizes 1..=l, each part used any number of times, with a cap on the part count.
    let mut dp = vec![vec![0u64; n + 1]; k + 1];
    dp[0][0] = 1;
    for part in 1..=l {
        for count in 1..=k {
            for s in part..=n {
                dp[count][s] += dp[count - 1][s - part];
            }
        }
    }
    (0..=k).map(|c| dp[c][n]).sum()
}

/// Dimension of the space of covariants of degree `m` and order `q` of binary `d`-ics.
pub fn cayley_sylvester(d: u32, m: u32, q: u32) -> i64 {
    let dm = (d * m) as i64;
    let q = q as i64;
    if dm < q || (dm - q) % 2 == 1 {
        return 0;
    }
    let w = (dm - q) / 2;
    partitions_bounded(w, d, m) as i64 - partitions_bounded(w - 1, d, m) as i64
}

/// The canonical quintic `x1 (q0 x1^4 + 2 q1 x1^2 x2^2 + q2 x2^4)`.
pub fn canonical_fq() -> Form {
    let mut c = vec![Poly::zero(); 6];
    c[0] = Poly::var(Var::Q0);
    c[2] = Poly::var(Var::Q1).scale(&Rational::from_int(2));
    c[4] = Poly::var(Var::Q2);
    Form::from_coeffs(c, Pair::X).expect("canonical quintic")
}

/// `T(G) = (G, (G, G)_2)_1` for a quartic `G`.
pub fn quartic_t(g: &Form) -> Form {
    assert_eq!(g.order(), 4, "quartic_t needs a quartic");
    transvectant(g, &transvectant(g, g, 2), 1)
}

/// Deterministic probe `d`-ics: first `x1^d + x2^d + (x1+x2)^d`, then forms
/// with coefficients in `-3..=3` drawn from a fixed integer hash.
pub fn probe_forms(d: u32, count: usize) -> Vec<Form> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    let first: Vec<Poly> = (0..=d)
        .map(|j| {
            let mut c = binomial(d, j);
            if j == 0 || j == d {
                c = &c + &Rational::ONE;
            }
            Poly::constant(c)
        })
        .collect();
    out.push(Form::from_coeffs(first, Pair::X).unwrap());
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    while out.len() < count {
        let coeffs = (0..=d)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                Poly::int(((state >> 33) % 7) as i64 - 3)
            })
            .collect();
        out.push(Form::from_coeffs(coeffs, Pair::X).unwrap());
    }
    out
}

/// Named covariants of one common degree-order.
#[derive(Clone, Debug)]
pub struct CovariantBasis {
    pub entries: Vec<(String, Covariant)>,
}

impl CovariantBasis {
    pub fn new(entries: Vec<(String, Covariant)>) -> CovariantBasis {
        if let Some((_, first)) = entries.first() {
            let shape = (first.degree(), first.order());
            assert!(entries.iter().all(|(_, c)| (c.degree(), c.order()) == shape), "basis entries differ in degree-order");
        }
        CovariantBasis { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rank of the specialization matrix over the given probes.
    pub fn probe_rank(&self, probes: &[Form]) -> usize {
        let rows = specialization_rows(self, probes);
        crate::linalg::FormMatrix { rows: rows.len(), cols: self.len(), entries: rows.iter().map(|r| r.iter().cloned().map(Poly::constant).collect()).collect() }
            .rank()
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisError {
    /// The probes do not separate the basis; supply more.
    RankDeficient { rank: usize, needed: usize },
    /// The target is not a combination of the basis.
    NotInSpan,
    /// Target and basis differ in degree-order.
    ShapeMismatch,
}

impl fmt::Display for BasisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisError::RankDeficient { rank, needed } => write!(f, "probe system has rank {} < {}", rank, needed),
            BasisError::NotInSpan => f.write_str("target is not in the span of the basis"),
            BasisError::ShapeMismatch => f.write_str("target and basis differ in degree-order"),
        }
    }
}

fn constant_coeffs(f: &Form) -> Vec<Rational> {
    f.coeffs().iter().map(|c| c.as_constant().unwrap_or(Rational::ZERO)).collect()
}

fn specialization_rows(basis: &CovariantBasis, probes: &[Form]) -> Vec<Vec<Rational>> {
    let mut rows = Vec::new();
    for p in probes {
        let cols: Vec<Vec<Rational>> = basis.entries.iter().map(|(_, c)| constant_coeffs(&c.at(p))).collect();
        let q = cols.first().map_or(0, Vec::len);
        for j in 0..q {
            rows.push(cols.iter().map(|c| c[j].clone()).collect());
        }
    }
    rows
}

/// Coefficients `c` with `target = sum_i c_i basis_i`, found by specializing
/// at the probes and then verified on the generic forms.
pub fn express_in_basis(target: &Covariant, basis: &CovariantBasis, probes: &[Form]) -> Result<Vec<Rational>, BasisError> {
    if basis.entries.iter().any(|(_, c)| (c.degree(), c.order()) != (target.degree(), target.order())) {
        return Err(BasisError::ShapeMismatch);
    }
    let matrix = specialization_rows(basis, probes);
    let rhs: Vec<Rational> = probes.iter().flat_map(|p| constant_coeffs(&target.at(p))).collect();
    let sys = LinearSystem { matrix, rhs };
    let coeffs = match exact_solve(&sys) {
        Solution::Unique(c) => c,
        Solution::Inconsistent => return Err(BasisError::NotInSpan),
        Solution::Underdetermined { nullity, .. } => {
            return Err(BasisError::RankDeficient { rank: basis.len() - nullity, needed: basis.len() })
        }
    };
    let mut combo = Form::zero(target.order(), target.degree(), Pair::X);
    for (c, (_, b)) in coeffs.iter().zip(&basis.entries) {
        combo = combo.add(&b.form().scale(c));
    }
    if combo != *target.form() {
        return Err(BasisError::NotInSpan);
    }
    Ok(coeffs)
}

/// Every nonzero compound transvectant `(...((F,F)_r1, F)_r2, ..., F)_r(m-1)`
/// of degree `m` and order `q`, with the index sequences that produced them.
pub fn compound_transvectants(f: &Covariant, m: u32, q: u32) -> Vec<(Vec<u32>, Covariant)> {
    let mut level: Vec<(Vec<u32>, Covariant)> = vec![(Vec::new(), f.clone())];
    for step in 1..m {
        let mut next = Vec::new();
        for (path, c) in &level {
            for r in 0..=c.order().min(f.order()) {
                let t = c.transvect(f, r);
                // the final order can only shrink from here on
                let remaining = m - 1 - step;
                if t.is_zero() || t.order() + remaining * f.order() < q {
                    continue;
                }
                let mut p = path.clone();
                p.push(r);
                next.push((p, t));
            }
        }
        level = next;
    }
    level.into_iter().filter(|(_, c)| c.order() == q).collect()
}

/// Writes a covariant of the generic form as a rational combination of
/// compound transvectants, returning the index sequences used.
pub fn express_in_compounds(target: &Covariant) -> Result<Vec<(Vec<u32>, Rational)>, BasisError> {
    let d = target.d();
    let f = generic_form(d);
    let probes = probe_forms(d, 16);
    let mut chosen: Vec<(Vec<u32>, Covariant)> = Vec::new();
    for (path, c) in compound_transvectants(&f, target.degree(), target.order()) {
        let mut trial = CovariantBasis::new(chosen.iter().map(|(_, c)| (String::new(), c.clone())).collect());
        trial.entries.push((String::new(), c.clone()));
        if trial.probe_rank(&probes) == trial.len() {
            chosen.push((path, c));
        }
    }
    let basis = CovariantBasis::new(chosen.iter().map(|(_, c)| (String::new(), c.clone())).collect());
    let coeffs = express_in_basis(target, &basis, &probes)?;
    Ok(chosen.into_iter().map(|(p, _)| p).zip(coeffs).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    #[test]
    fn generic_forms() {
        assert_eq!(generic_form(1).form().body(), parse_poly("a0*x1 + a1*x2").unwrap());
        let f = generic_form(5);
        let coeffs: Vec<Rational> = f.form().coeffs().iter().map(|c| c.terms()[0].1.clone()).collect();
        let want: Vec<Rational> = [1, 5, 10, 10, 5, 1].iter().map(|&n| Rational::from_int(n)).collect();
        assert_eq!(coeffs, want);
        assert_eq!(f.weight(), Some(0));
        assert_eq!((f.degree(), f.order()), (1, 5));
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_bounded(0, 3, 2), 1);
        assert_eq!(partitions_bounded(-1, 3, 2), 0);
        assert_eq!(partitions_bounded(45, 5, 18), 967);
        assert_eq!(partitions_bounded(44, 5, 18), 966);
        assert_eq!(partitions_bounded(20, 5, 9), 98);
        assert_eq!(partitions_bounded(19, 5, 9), 93);
    }

    /// Brute-force count of partitions in a box.
    fn partitions_oracle(n: i64, k: u32, l: u32) -> u64 {
        fn go(n: i64, k: u32, max: u32) -> u64 {
            if n == 0 {
                return 1;
            }
            if k == 0 || n < 0 {
                return 0;
            }
            (1..=max.min(n as u32)).map(|p| go(n - p as i64, k - 1, p)).sum()
        }
        if n < 0 {
            0
        } else {
            go(n, k, l)
        }
    }

    #[test]
    fn partition_counts_match_brute_force() {
        for n in 0..25 {
            for k in 0..6 {
                for l in 0..7 {
                    assert_eq!(partitions_bounded(n, k, l), partitions_oracle(n, k, l), "{} {} {}", n, k, l);
                }
            }
        }
    }

    #[test]
    fn dimension_counts() {
        assert_eq!(cayley_sylvester(5, 4, 8), 2);
        assert_eq!(cayley_sylvester(5, 18, 0), 1);
        assert_eq!(cayley_sylvester(5, 3, 1), 0);
        assert_eq!(cayley_sylvester(4, 3, 6), 1);
        assert_eq!(cayley_sylvester(5, 9, 5), 5);
        assert_eq!(cayley_sylvester(5, 2, 1), 0);
    }

    #[test]
    fn canonical_quintic() {
        let fq = canonical_fq();
        let at = fq.specialize(&[(Var::Q0, Rational::ONE), (Var::Q1, Rational::ZERO), (Var::Q2, Rational::ZERO)]);
        assert_eq!(at.body(), parse_poly("x1^5").unwrap());
        assert_eq!(fq.coeff(2), &parse_poly("2*q1").unwrap());
        assert!(fq.coeff(5).is_zero());
    }

    #[test]
    fn quartic_t_examples() {
        let g = generic_form(4);
        let t = quartic_t(g.form());
        assert_eq!(t.at_x1_zero(), parse_poly("-(2*a3^3 + a1*a4^2 - 3*a2*a3*a4)").unwrap());
        let sq = Form::parse_order(&parse_poly("x1^2*x2^2").unwrap(), Pair::X).unwrap();
        assert!(quartic_t(&sq).is_zero());
    }

    #[test]
    fn quartic_t_factorization() {
        let g = Form::parse_order(&parse_poly("x1*(x1+alpha*x2)*(x1-beta*x2)*(x1+beta*x2)").unwrap(), Pair::X).unwrap();
        let t = quartic_t(&g).body();
        let restricted = t.substitute(&[(Var::X1, parse_poly("alpha*x2").unwrap())]);
        let want = parse_poly("1/32*x2^6*alpha^3*(alpha^2+3*beta^2)*(alpha^2+4*alpha*beta-beta^2)*(alpha^2-4*alpha*beta-beta^2)").unwrap();
        assert_eq!(restricted, want);
    }

    #[test]
    fn probes_are_deterministic() {
        let a = probe_forms(5, 6);
        let b = probe_forms(5, 6);
        assert_eq!(a, b);
        assert_eq!(a[0].body(), parse_poly("x1^5 + x2^5 + (x1+x2)^5").unwrap());
    }

    #[test]
    fn basis_expression_on_a48() {
        let f = generic_form(5);
        let t22 = f.transvect(&f, 4);
        let t26 = f.transvect(&f, 2);
        let basis = CovariantBasis::new(vec![
            ("t26*t22".into(), t26.mul(&t22)),
            ("F*(F,t22)_2".into(), f.mul(&f.transvect(&t22, 2))),
        ]);
        let probes = probe_forms(5, 4);
        assert_eq!(basis.probe_rank(&probes), 2);
        let target = basis.entries[0].1.clone();
        assert_eq!(express_in_basis(&target, &basis, &probes).unwrap(), vec![Rational::ONE, Rational::ZERO]);
        let half = basis.entries[0].1.scale(&Rational::new(1, 2)).sub(&basis.entries[1].1);
        assert_eq!(express_in_basis(&half, &basis, &probes).unwrap(), vec![Rational::new(1, 2), Rational::from_int(-1)]);
    }

    #[test]
    fn compound_transvectant_enumeration() {
        let f = generic_form(5);
        // degree 2 order 2 is spanned by (F,F)_4
        let list = compound_transvectants(&f, 2, 2);
        assert_eq!(list.len(), 1);
        assert_eq!(list[0].0, vec![4]);
    }
}
