//! Exact Laurent polynomials over the integers in one variable.
//!
//! Exponents are stored doubled so that `t^{1/2}` is representable: the key `k` stands for
//! `x^{k/2}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variable {
    A,
    T,
}

impl Variable {
    fn symbol(self) -> &'static str {
        match self {
            Variable::A => "A",
            Variable::T => "t",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    var: Variable,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(var: Variable) -> Self {
        Self {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: Variable) -> Self {
        Self::constant(var, 1)
    }

    pub fn constant(var: Variable, c: impl Into<BigInt>) -> Self {
        Self::monomial_doubled(var, 0, c)
    }

    /// `c · x^e` for an integer exponent `e`.
    pub fn monomial(var: Variable, exp: i64, c: impl Into<BigInt>) -> Self {
        Self::monomial_doubled(var, 2 * exp, c)
    }

    /// `c · x^{doubled/2}`.
    pub fn monomial_doubled(var: Variable, doubled: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(var);
        p.add_term(doubled, c.into());
        p
    }

    /// From `(integer exponent, coefficient)` pairs; repeated exponents accumulate.
    pub fn from_terms(var: Variable, terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(2 * e, BigInt::from(c));
        }
        p
    }

    pub fn variable(&self) -> Variable {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// `(doubled exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Coefficient of `x^{doubled/2}`.
    pub fn coeff_doubled(&self, doubled: i64) -> BigInt {
        self.terms.get(&doubled).cloned().unwrap_or_default()
    }

    /// Coefficient of `x^e`.
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeff_doubled(2 * exp)
    }

    pub fn min_doubled_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_doubled_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, doubled: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(doubled) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Same coefficients, variable renamed.
    pub fn with_variable(mut self, var: Variable) -> Self {
        self.var = var;
        self
    }

    /// Multiplies by `x^{doubled/2}`.
    pub fn shift_doubled(&self, doubled: i64) -> Self {
        Self {
            var: self.var,
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + doubled, c.clone()))
                .collect(),
        }
    }

    /// Substitution `x -> x^{num/den}` on doubled exponents; every resulting doubled exponent
    /// must be an integer.
    pub fn substitute_power(&self, var: Variable, num: i64, den: i64) -> Option<Self> {
        let mut out = Self::zero(var);
        for (&e, c) in &self.terms {
            let scaled = e * num;
            if scaled % den != 0 {
                return None;
            }
            out.add_term(scaled / den, c.clone());
        }
        Some(out)
    }

    /// `p(x) -> p(x⁻¹)`.
    pub fn invert_variable(&self) -> Self {
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.var);
        }
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.var);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        result
    }

    /// Value at `x = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder or is
    /// not integral.
    pub fn div_exact(&self, divisor: &LaurentPolynomial) -> Option<LaurentPolynomial> {
        assert_eq!(self.var, divisor.var);
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.var));
        }
        let (&d_lead_e, d_lead_c) = divisor.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quotient = Self::zero(self.var);
        let d_min = divisor.min_doubled_exp().unwrap();
        let d_span = d_lead_e - d_min;
        while let Some((&r_e, r_c)) = rem.terms.iter().next_back() {
            // remainder span smaller than divisor span => not exact
            if r_e - rem.min_doubled_exp().unwrap() < d_span {
                return None;
            }
            if !(r_c % d_lead_c).is_zero() {
                return None;
            }
            let q_c = r_c / d_lead_c;
            let q_e = r_e - d_lead_e;
            let term = Self::monomial_doubled(self.var, q_e, q_c.clone());
            rem = &rem - &(divisor * &term);
            quotient.add_term(q_e, q_c);
        }
        Some(quotient)
    }

    /// Normalizes a polynomial known up to units `±x^k`: shifted so its exponents are
    /// symmetric about zero and signed so the value at `x = 1` is non-negative (the highest
    /// coefficient is made positive when that value is zero).
    pub fn symmetrize(&self) -> Self {
        let (Some(lo), Some(hi)) = (self.min_doubled_exp(), self.max_doubled_exp()) else {
            return self.clone();
        };
        let shifted = self.shift_doubled(-(lo + hi).div_euclid(2));
        let v = shifted.eval_at_one();
        let negate = if v.is_zero() {
            shifted.terms.values().next_back().unwrap().is_negative()
        } else {
            v.is_negative()
        };
        if negate {
            -shifted
        } else {
            shifted
        }
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.var, rhs.var, "variable mismatch");
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.var, rhs.var, "variable mismatch");
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.var, rhs.var, "variable mismatch");
        let mut out = LaurentPolynomial::zero(self.var);
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            var: self.var,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPolynomial {
    /// Ascending exponents: `t^-1 - 1 + t`, `-A^3`, `t^(1/2) + 2t^(-3/2)`; `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = self.var.symbol();
        for (k, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{sym}")?;
            if e % 2 != 0 {
                write!(f, "^({}/2)", e)?;
            } else if e != 2 {
                write!(f, "^{}", e / 2)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(Variable::T, terms.iter().copied())
    }

    #[test]
    fn zero_has_no_terms() {
        let p = t(&[(1, 2), (1, -2)]);
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn rendering() {
        assert_eq!(t(&[(-1, 1), (0, -1), (1, 1)]).to_string(), "t^-1 - 1 + t");
        assert_eq!(LaurentPolynomial::one(Variable::T).to_string(), "1");
        assert_eq!(t(&[(1, 1), (3, 1), (4, -1)]).to_string(), "t + t^3 - t^4");
        assert_eq!(
            LaurentPolynomial::monomial(Variable::A, 3, -1).to_string(),
            "-A^3"
        );
        let half = &LaurentPolynomial::monomial_doubled(Variable::T, 1, 1)
            + &LaurentPolynomial::monomial_doubled(Variable::T, -3, 2);
        assert_eq!(half.to_string(), "2t^(-3/2) + t^(1/2)");
    }

    #[test]
    fn arithmetic() {
        let a = t(&[(0, 1), (1, 1)]);
        let b = t(&[(0, 1), (1, -1)]);
        assert_eq!(&a * &b, t(&[(0, 1), (2, -1)]));
        assert_eq!(&a + &b, t(&[(0, 2)]));
        assert_eq!(a.pow(3), t(&[(0, 1), (1, 3), (2, 3), (3, 1)]));
        assert_eq!(a.pow(0), LaurentPolynomial::one(Variable::T));
    }

    #[test]
    fn exact_division() {
        let d = t(&[(0, 1), (1, 1), (2, 1)]);
        let q = t(&[(-1, 2), (0, -1), (3, 5)]);
        assert_eq!((&d * &q).div_exact(&d), Some(q));
        assert_eq!(t(&[(0, 1)]).div_exact(&t(&[(0, 1), (1, 1)])), None);
        assert_eq!(t(&[(0, 3)]).div_exact(&t(&[(0, 2)])), None);
    }

    #[test]
    fn symmetrize_trefoil_and_figure_eight() {
        let tref = t(&[(0, 1), (1, -1), (2, 1)]);
        assert_eq!(tref.symmetrize().to_string(), "t^-1 - 1 + t");
        let fig8 = t(&[(3, 1), (4, -3), (5, 1)]);
        assert_eq!(fig8.symmetrize().to_string(), "-t^-1 + 3 - t");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
        proptest::collection::vec((-6i64..6, -5i64..5), 0..6)
            .prop_map(|v| LaurentPolynomial::from_terms(Variable::T, v))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b), Some(a));
        }
    }
}
