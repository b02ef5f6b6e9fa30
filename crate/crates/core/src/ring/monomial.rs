use core::fmt;

/// Number of variables in the global universe.
pub const NVARS: usize = 24;

/// A variable of the global, totally ordered universe
/// `a0 < … < a9 < x1 < x2 < y1 < y2 < q0 < q1 < q2 < alpha < beta < gamma < delta < xi < s < t`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u8);

const NAMES: [&str; NVARS] = [
    "a0", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "x1", "x2", "y1", "y2", "q0", "q1",
    "q2", "alpha", "beta", "gamma", "delta", "xi", "s", "t",
];

/// Largest `d` for which the generic d-ic has its coefficients in the universe.
pub const MAX_GENERIC_ORDER: usize = 9;

impl Var {
    pub const X1: Var = Var(10);
    pub const X2: Var = Var(11);
    pub const Y1: Var = Var(12);
    pub const Y2: Var = Var(13);
    pub const Q0: Var = Var(14);
    pub const Q1: Var = Var(15);
    pub const Q2: Var = Var(16);
    pub const ALPHA: Var = Var(17);
    pub const BETA: Var = Var(18);
    pub const GAMMA: Var = Var(19);
    pub const DELTA: Var = Var(20);
    pub const XI: Var = Var(21);
    pub const S: Var = Var(22);
    pub const T: Var = Var(23);

    /// The coefficient variable `a_i` of the generic form.
    pub fn a(i: usize) -> Var {
        assert!(i <= MAX_GENERIC_ORDER, "a{} is outside the variable universe", i);
        Var(i as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Option<Var> {
        (i < NVARS).then_some(Var(i as u8))
    }

    pub fn name(self) -> &'static str {
        NAMES[self.0 as usize]
    }

    pub fn from_name(name: &str) -> Option<Var> {
        NAMES.iter().position(|n| *n == name).map(|i| Var(i as u8))
    }

    pub fn is_coefficient(self) -> bool {
        (self.0 as usize) <= MAX_GENERIC_ORDER
    }

    pub fn all() -> impl Iterator<Item = Var> {
        (0..NVARS as u8).map(Var)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A power product over the universe. Exponents are stored in reverse universe
/// order, so the derived `Ord` is graded-lexicographic with the highest variable
/// compared first (`x1^2 > a0*x1`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    deg: u16,
    exps: [u8; NVARS],
}

#[inline]
fn slot(v: Var) -> usize {
    NVARS - 1 - v.index()
}

impl Monomial {
    pub const ONE: Monomial = Monomial { deg: 0, exps: [0; NVARS] };

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        let mut m = Self::ONE;
        m.set(v, e);
        m
    }

    pub fn from_pairs(pairs: &[(Var, u32)]) -> Self {
        let mut m = Self::ONE;
        for &(v, e) in pairs {
            let cur = m.exp(v);
            m.set(v, cur + e);
        }
        m
    }

    #[inline]
    pub fn exp(&self, v: Var) -> u32 {
        self.exps[slot(v)] as u32
    }

    #[inline]
    pub fn set(&mut self, v: Var, e: u32) {
        let e = u8::try_from(e).expect("exponent overflow");
        let old = self.exps[slot(v)];
        self.exps[slot(v)] = e;
        self.deg = self.deg - old as u16 + e as u16;
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        vars.iter().map(|&v| self.exp(v)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; NVARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        Monomial { deg: self.deg + other.deg, exps }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = [0u8; NVARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i].checked_sub(other.exps[i])?;
        }
        Some(Monomial { deg: self.deg - other.deg, exps })
    }

    /// Iterator over `(var, exponent)` with nonzero exponents, in universe order.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        (0..NVARS).filter_map(move |i| {
            let e = self.exps[NVARS - 1 - i];
            (e > 0).then_some((Var(i as u8), e as u32))
        })
    }

    /// Splits off the part in `vars`: returns `(part in vars, rest)`.
    pub fn split(&self, vars: &[Var]) -> (Monomial, Monomial) {
        let mut inside = Monomial::ONE;
        let mut rest = *self;
        for &v in vars {
            let e = self.exp(v);
            if e > 0 {
                inside.set(v, e);
                rest.set(v, 0);
            }
        }
        (inside, rest)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.factors() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order() {
        let a0 = Monomial::var(Var::a(0));
        let x1sq = Monomial::var_pow(Var::X1, 2);
        let a0x1 = a0.mul(&Monomial::var(Var::X1));
        assert!(a0 < x1sq);
        assert!(a0x1 < x1sq);
        assert!(Monomial::var(Var::a(5)) > Monomial::var(Var::a(0)));
        let x1 = Monomial::var(Var::X1);
        assert!(x1 < x1sq);
    }

    #[test]
    fn names_round_trip() {
        for v in Var::all() {
            assert_eq!(Var::from_name(v.name()), Some(v));
        }
        assert_eq!(Var::from_name("zz"), None);
    }

    #[test]
    fn split_and_divide() {
        let m = Monomial::from_pairs(&[(Var::a(1), 2), (Var::X1, 3), (Var::X2, 1)]);
        let (xs, rest) = m.split(&[Var::X1, Var::X2]);
        assert_eq!(xs, Monomial::from_pairs(&[(Var::X1, 3), (Var::X2, 1)]));
        assert_eq!(rest, Monomial::var_pow(Var::a(1), 2));
        assert_eq!(m.div(&xs), Some(rest));
        assert_eq!(rest.div(&xs), None);
    }
}
