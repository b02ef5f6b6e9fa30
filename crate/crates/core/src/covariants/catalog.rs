//! The covariants of binary quintics used throughout the Hermite computations.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{express_in_basis, generic_form, probe_forms, BasisError, Covariant, CovariantBasis};
use crate::ring::Rational;

/// Degree-orders `(m, q)` of the minimal generators of the quintic covariant ring.
pub const GENERATOR_TABLE: &[(u32, u32)] = &[
    (1, 5),
    (2, 2),
    (2, 6),
    (3, 3),
    (3, 5),
    (3, 9),
    (4, 0),
    (4, 4),
    (4, 6),
    (5, 1),
    (5, 3),
    (5, 7),
    (6, 2),
    (6, 4),
    (7, 1),
    (7, 5),
    (8, 0),
    (8, 2),
    (9, 3),
    (11, 1),
    (12, 0),
    (13, 1),
    (18, 0),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ThetaName {
    T22,
    T26,
    T33,
    T39,
    T40,
    T44,
    T51,
    T80,
    T82,
}

impl ThetaName {
    pub const ALL: [ThetaName; 9] = [
        ThetaName::T22,
        ThetaName::T26,
        ThetaName::T33,
        ThetaName::T39,
        ThetaName::T40,
        ThetaName::T44,
        ThetaName::T51,
        ThetaName::T80,
        ThetaName::T82,
    ];

    /// The degree-order encoded in the name.
    pub fn degree_order(self) -> (u32, u32) {
        match self {
            ThetaName::T22 => (2, 2),
            ThetaName::T26 => (2, 6),
            ThetaName::T33 => (3, 3),
            ThetaName::T39 => (3, 9),
            ThetaName::T40 => (4, 0),
            ThetaName::T44 => (4, 4),
            ThetaName::T51 => (5, 1),
            ThetaName::T80 => (8, 0),
            ThetaName::T82 => (8, 2),
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for ThetaName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, q) = self.degree_order();
        write!(f, "theta{}{}", m, q)
    }
}

impl FromStr for ThetaName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s.trim_start_matches("theta").trim_start_matches('t');
        ThetaName::ALL
            .iter()
            .copied()
            .find(|t| {
                let (m, q) = t.degree_order();
                digits == alloc::format!("{}{}", m, q)
            })
            .ok_or_else(|| alloc::format!("unknown covariant name `{}`", s))
    }
}

/// The generic quintic and the catalog covariants, computed eagerly.
#[derive(Clone, Debug)]
pub struct QuinticCatalog {
    f: Covariant,
    thetas: Vec<Covariant>,
    t82_recipe: String,
    t82_expansion: Vec<Rational>,
}

impl QuinticCatalog {
    pub fn new() -> QuinticCatalog {
        let f = generic_form(5);
        let t22 = f.transvect(&f, 4);
        let t26 = f.transvect(&f, 2);
        let t33 = t22.transvect(&f, 2);
        let t39 = f.transvect(&t26, 1);
        let t40 = t22.transvect(&t22, 2);
        let t44 = t22.transvect(&t26, 2);
        let t51 = t22.pow(2).transvect(&f, 4);
        let t80 = t22.pow(3).transvect(&t26, 6);

        // The (8,2) generator: first nonzero candidate, since that space is one-dimensional.
        let candidates: [(&str, Covariant); 3] = [
            ("(theta22^2,theta44)_3", t22.pow(2).transvect(&t44, 3)),
            ("(theta51,theta33)_1", t51.transvect(&t33, 1)),
            ("(theta40*theta22,theta22)_1", t40.mul(&t22).transvect(&t22, 1)),
        ];
        let (recipe, raw82) = candidates.into_iter().find(|(_, c)| !c.is_zero()).expect("some (8,2) candidate is nonzero");

        let mut cat = QuinticCatalog {
            f,
            thetas: vec![t22, t26, t33, t39, t40, t44, t51, t80, raw82.clone()],
            t82_recipe: recipe.to_string(),
            t82_expansion: Vec::new(),
        };
        // Fix the scale of theta82 by the first coefficient of (F, theta82)_1 in basis B.
        let basis = cat.basis_95();
        let probes = probes_for(&basis, 5);
        let raw = express_in_basis(&cat.f.transvect(&raw82, 1), &basis, &probes).expect("(F,theta82)_1 lies in A_{9,5}");
        let lambda = &Rational::new(-7, 10) / &raw[0];
        cat.thetas[ThetaName::T82.index()] = raw82.scale(&lambda);
        cat.t82_expansion = raw.iter().map(|c| c * &lambda).collect();
        cat
    }

    pub fn f(&self) -> &Covariant {
        &self.f
    }

    pub fn theta(&self, name: ThetaName) -> &Covariant {
        &self.thetas[name.index()]
    }

    /// Which candidate construction produced theta82.
    pub fn t82_recipe(&self) -> &str {
        &self.t82_recipe
    }

    /// The coefficients of `(F, theta82)_1` in [`QuinticCatalog::basis_95`]
    /// after normalization; the first is `-7/10` by construction.
    pub fn t82_expansion(&self) -> &[Rational] {
        &self.t82_expansion
    }

    /// Basis `{t51 t22^2, t51 t44, t40 t33 t22, t40^2 F, t80 F}` of `A_{9,5}`.
    pub fn basis_95(&self) -> CovariantBasis {
        use ThetaName::*;
        let t = |n| self.theta(n);
        CovariantBasis::new(vec![
            ("theta51*theta22^2".into(), t(T51).mul(&t(T22).pow(2))),
            ("theta51*theta44".into(), t(T51).mul(t(T44))),
            ("theta40*theta33*theta22".into(), t(T40).mul(t(T33)).mul(t(T22))),
            ("theta40^2*F".into(), t(T40).pow(2).mul(&self.f)),
            ("theta80*F".into(), t(T80).mul(&self.f)),
        ])
    }

    /// Expresses `target` in `basis`, adding probes until they separate it.
    pub fn express(&self, target: &Covariant, basis: &CovariantBasis) -> Result<Vec<Rational>, BasisError> {
        express_in_basis(target, basis, &probes_for(basis, self.f.d()))
    }
}

impl Default for QuinticCatalog {
    fn default() -> Self {
        Self::new()
    }
}

/// The shortest prefix of the deterministic probe list that gives full rank
/// (capped at 64 probes).
pub fn probes_for(basis: &CovariantBasis, d: u32) -> Vec<crate::forms::Form> {
    let all = probe_forms(d, 64);
    for k in 1..=all.len() {
        if basis.probe_rank(&all[..k]) == basis.len() {
            return all[..k].to_vec();
        }
    }
    all
}

/// `H = (theta22^7, F theta39)_14`, the degree-18 skew invariant.
pub fn hermite_from(cat: &QuinticCatalog) -> Covariant {
    let t22 = cat.theta(ThetaName::T22);
    let t39 = cat.theta(ThetaName::T39);
    t22.pow(7).transvect(&cat.f().mul(t39), 14)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covariants::cayley_sylvester;
    use crate::forms::{Form, Pair};
    use crate::ring::{parse_poly, Poly};

    fn quintic(s: &str) -> Form {
        Form::from_poly(&parse_poly(s).unwrap(), 5, Pair::X).unwrap()
    }

    #[test]
    fn table_cells_have_positive_dimension() {
        for &(m, q) in GENERATOR_TABLE {
            assert!(cayley_sylvester(5, m, q) >= 1, "({}, {})", m, q);
        }
    }

    #[test]
    fn names_parse() {
        for t in ThetaName::ALL {
            assert_eq!(t.to_string().parse::<ThetaName>(), Ok(t));
        }
        assert_eq!("33".parse::<ThetaName>(), Ok(ThetaName::T33));
        assert!("theta99".parse::<ThetaName>().is_err());
    }

    #[test]
    fn catalog_entries() {
        let cat = QuinticCatalog::new();
        for t in ThetaName::ALL {
            let c = cat.theta(t);
            assert!(!c.is_zero(), "{} vanishes", t);
            assert_eq!((c.degree(), c.order()), t.degree_order(), "{}", t);
            assert!(c.weight().is_some());
            assert!(GENERATOR_TABLE.contains(&t.degree_order()));
        }
        assert_eq!(cat.t82_expansion()[0], Rational::new(-7, 10));
    }

    #[test]
    fn theta_values_at_examples() {
        let cat = QuinticCatalog::new();
        let f = quintic("x1^5+x2^5");
        assert_eq!(cat.theta(ThetaName::T22).at(&f).body(), parse_poly("2*x1*x2").unwrap());
        let g = quintic("x1^5+2*x2^5+(x1+x2)^5");
        assert_eq!(cat.theta(ThetaName::T33).at(&g).body(), parse_poly("-12*x1*x2*(x1+x2)").unwrap());
    }

    #[test]
    fn theta33_restriction() {
        let cat = QuinticCatalog::new();
        // F = x1 * (generic quartic): a5 = 0 and a_i -> a_(i-1) * C(4,i-1)/C(5,i) scaled
        let quartic = crate::covariants::generic_form(4);
        let f = Form::from_coeffs(
            quartic.form().coeffs().iter().cloned().chain(core::iter::once(Poly::zero())).collect(),
            Pair::X,
        )
        .unwrap();
        let restricted = cat.theta(ThetaName::T33).at(&f).at_x1_zero();
        let want = parse_poly("24/125*(2*a3^3 + a1*a4^2 - 3*a2*a3*a4)").unwrap();
        assert_eq!(restricted, want);
    }
}
