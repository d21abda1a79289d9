//! Exact one-variable Laurent polynomials over the integers.
//!
//! The variable is written `A` by default (Kauffman bracket variable) but is
//! purely positional; Jones polynomials reuse the same type with variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Sparse integer Laurent polynomial in one variable.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent1 {
    coeffs: BTreeMap<i64, BigInt>,
}

impl Laurent1 {
    pub fn zero() -> Self {
        Laurent1::default()
    }

    pub fn one() -> Self {
        Laurent1::constant(BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Laurent1::monomial(0, c)
    }

    /// `c * A^exp`.
    pub fn monomial<T: Into<BigInt>>(exp: i64, c: T) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Laurent1 { coeffs }
    }

    /// The loop value `delta = -A^2 - A^-2`.
    pub fn delta() -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(2, BigInt::from(-1));
        coeffs.insert(-2, BigInt::from(-1));
        Laurent1 { coeffs }
    }

    /// Build from `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, T)>,
        T: Into<BigInt>,
    {
        let mut p = Laurent1::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).map_or(false, |c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Difference of highest and lowest exponents. Errors on the zero polynomial.
    pub fn span(&self) -> Result<i64> {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => Ok(hi - lo),
            _ => Err(Error::ZeroPolynomial),
        }
    }

    pub(crate) fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(exp) {
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

    /// Multiply by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        let coeffs = self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect();
        Laurent1 { coeffs }
    }

    /// Multiply by an integer scalar.
    pub fn scale<T: Into<BigInt>>(&self, c: T) -> Self {
        let c: BigInt = c.into();
        if c.is_zero() {
            return Laurent1::zero();
        }
        let coeffs = self.coeffs.iter().map(|(e, k)| (*e, k * &c)).collect();
        Laurent1 { coeffs }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Laurent1::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `A -> A^k` (k != 0). Exponents scale exactly.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitute_power requires a nonzero exponent");
        let coeffs = self.coeffs.iter().map(|(e, c)| (e * k, c.clone())).collect();
        Laurent1 { coeffs }
    }

    /// Substitute `A -> -A`: flips the sign of odd-exponent coefficients.
    pub fn substitute_neg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| (*e, if e.rem_euclid(2) == 1 { -c } else { c.clone() }))
            .collect();
        Laurent1 { coeffs }
    }

    /// Exact division; `None` if the divisor does not divide exactly.
    pub fn divide_exact(&self, divisor: &Laurent1) -> Option<Laurent1> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent1::zero());
        }
        // Shift both to ordinary polynomials and long-divide from the top.
        let slo = self.min_exp().unwrap();
        let dlo = divisor.min_exp().unwrap();
        let mut rem: BTreeMap<i64, BigInt> = self.shift(-slo).coeffs;
        let div = divisor.shift(-dlo);
        let dhi = div.max_exp().unwrap();
        let dlead = div.coeff(dhi);
        let mut quot = Laurent1::zero();
        while let Some((&rhi, _)) = rem.iter().next_back() {
            if rhi < dhi {
                return None;
            }
            let rlead = rem.get(&rhi).unwrap().clone();
            let (q, r) = num_integer_div_rem(&rlead, &dlead);
            if !r.is_zero() {
                return None;
            }
            let shift = rhi - dhi;
            quot.add_term(shift, q.clone());
            for (e, c) in div.coeffs.iter() {
                let exp = e + shift;
                let delta = c * &q;
                use std::collections::btree_map::Entry;
                match rem.entry(exp) {
                    Entry::Vacant(v) => {
                        let val = -delta;
                        if !val.is_zero() {
                            v.insert(val);
                        }
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
        }
        Some(quot.shift(slo - dlo))
    }

    /// Strip the polynomial into `sign * A^exp * g` with `g(0) != 0` and the
    /// lowest coefficient of `g` positive in sign convention `sign`.
    ///
    /// Returns `(sign, exp, g)`; errors on zero.
    pub fn strip_monomial(&self) -> Result<(i8, i64, Laurent1)> {
        let lo = self.min_exp().ok_or(Error::ZeroPolynomial)?;
        let g = self.shift(-lo);
        let trail = g.coeff(0);
        let sign = if trail.is_negative() { -1 } else { 1 };
        let g = if sign < 0 { -&g } else { g };
        Ok((sign, lo, g))
    }

    /// Coefficients of the ordinary polynomial `A^{-min} * self`, ascending.
    pub fn dense_coeffs(&self) -> Vec<BigInt> {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
                for (e, c) in &self.coeffs {
                    out[(e - lo) as usize] = c.clone();
                }
                out
            }
            _ => Vec::new(),
        }
    }

    /// Numeric evaluation at a complex point.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.coeffs {
            acc += bigint_to_f64(c) * crate::poly::cpow(z, *e);
        }
        acc
    }

    /// Sum of coefficients, i.e. the value at `A = 1`, computed exactly.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// L2 norm of the coefficient vector.
    pub fn l2_norm(&self) -> f64 {
        self.coeffs
            .values()
            .map(|c| {
                let v = bigint_to_f64(c);
                v * v
            })
            .sum::<f64>()
            .sqrt()
    }

    /// Render with an explicit variable name (canonical text form).
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.coeffs.len());
        for (e, c) in self.coeffs.iter().rev() {
            parts.push(super::format_term(c, &[(var, *e)]));
        }
        parts.join(" + ")
    }
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::INFINITY)
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

impl fmt::Display for Laurent1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("A"))
    }
}

impl fmt::Debug for Laurent1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent1({})", self)
    }
}

impl Add for &Laurent1 {
    type Output = Laurent1;
    fn add(self, rhs: &Laurent1) -> Laurent1 {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Laurent1 {
    type Output = Laurent1;
    fn sub(self, rhs: &Laurent1) -> Laurent1 {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &Laurent1 {
    type Output = Laurent1;
    fn neg(self) -> Laurent1 {
        let coeffs = self.coeffs.iter().map(|(e, c)| (*e, -c)).collect();
        Laurent1 { coeffs }
    }
}

impl Mul for &Laurent1 {
    type Output = Laurent1;
    fn mul(self, rhs: &Laurent1) -> Laurent1 {
        let mut out = Laurent1::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Laurent1 {
            type Output = Laurent1;
            fn $method(self, rhs: Laurent1) -> Laurent1 {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Laurent1> for Laurent1 {
            type Output = Laurent1;
            fn $method(self, rhs: &Laurent1) -> Laurent1 {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Laurent1 {
    type Output = Laurent1;
    fn neg(self) -> Laurent1 {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_squared() {
        let d2 = Laurent1::delta().pow(2);
        let expected = Laurent1::from_terms([(4, 1), (0, 2), (-4, 1)]);
        assert_eq!(d2, expected);
    }

    #[test]
    fn span_of_delta_is_four() {
        assert_eq!(Laurent1::delta().span().unwrap(), 4);
        assert_eq!(Laurent1::constant(5).span().unwrap(), 0);
        assert!(Laurent1::zero().span().is_err());
    }

    #[test]
    fn additive_inverse_cancels() {
        let p = Laurent1::from_terms([(3, 7), (-1, -2), (0, 5)]);
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn exact_division_by_delta() {
        let d = Laurent1::delta();
        let p = &d * &d;
        assert_eq!(p.divide_exact(&d).unwrap(), d);
        let q = Laurent1::from_terms([(1, 1), (0, -1)]);
        assert!(q.divide_exact(&d).is_none());
    }

    #[test]
    fn delta_at_sixth_root_is_one() {
        let xi = Complex64::from_polar(1.0, std::f64::consts::PI / 3.0);
        let v = Laurent1::delta().evaluate(xi);
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn delta_at_one_is_minus_two() {
        let v = Laurent1::delta().evaluate(Complex64::new(1.0, 0.0));
        assert!((v - Complex64::new(-2.0, 0.0)).norm() < 1e-12);
        assert_eq!(Laurent1::delta().eval_at_one(), BigInt::from(-2));
    }

    #[test]
    fn canonical_text_for_delta() {
        assert_eq!(Laurent1::delta().to_string(), "-1*A^2 + -1*A^-2");
    }

    #[test]
    fn strip_monomial_normalizes_sign() {
        let p = Laurent1::from_terms([(-2, -1), (2, -1)]); // delta
        let (sign, exp, g) = p.strip_monomial().unwrap();
        assert_eq!(sign, -1);
        assert_eq!(exp, -2);
        assert_eq!(g, Laurent1::from_terms([(0, 1), (4, 1)]));
    }
}
