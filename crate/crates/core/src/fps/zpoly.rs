//! Dense polynomials in one auxiliary variable with big-integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A polynomial `c0 + c1 x + c2 x^2 + ...` in the auxiliary variable
/// (written `z` or `c` depending on context).
///
/// The coefficient vector is kept canonical: the last entry is never zero
/// and the zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * x^deg`
    pub fn monomial<T: Into<BigInt>>(c: T, deg: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        ZPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero past the end).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// The constant polynomial value, if the degree is at most zero.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// True if this is the constant `1` or `-1`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> ZPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    /// Exact division by `x^k`; `None` if a dropped coefficient is nonzero.
    pub fn unshift(&self, k: usize) -> Option<ZPoly> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(ZPoly::from_coeffs(
            self.coeffs.iter().skip(k).cloned().collect(),
        ))
    }

    /// In-place `self += c * x^k * other`.
    pub fn add_scaled_shifted(&mut self, other: &ZPoly, c: &BigInt, k: usize) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let need = other.coeffs.len() + k;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (i, a) in other.coeffs.iter().enumerate() {
            self.coeffs[i + k] += a * c;
        }
        self.normalize();
    }

    pub fn add_assign_ref(&mut self, other: &ZPoly) {
        if other.is_zero() {
            return;
        }
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        self.normalize();
    }

    pub fn sub_assign_ref(&mut self, other: &ZPoly) {
        if other.is_zero() {
            return;
        }
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        self.normalize();
    }

    /// Accumulate `a * b` into `self` without allocating a temporary product.
    pub fn add_product(&mut self, a: &ZPoly, b: &ZPoly) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let need = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    self.coeffs[i + j] += x * y;
                }
            }
        }
        self.normalize();
    }

    /// Evaluate at an integer point (Horner).
    pub fn eval(&self, v: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    /// `x d/dx`: maps `c x^m` to `m c x^m`.
    pub fn euler_derivative(&self) -> ZPoly {
        ZPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| c * BigInt::from(m))
                .collect(),
        )
    }

    /// Substitute `x -> s * x^e` for `s = ±1`.
    pub fn substitute_monomial(&self, negate: bool, e: usize) -> ZPoly {
        if e == 0 {
            let v = if negate {
                -BigInt::one()
            } else {
                BigInt::one()
            };
            return ZPoly::constant(self.eval(&v));
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len().max(1) - 1) * e + 1];
        for (m, c) in self.coeffs.iter().enumerate() {
            coeffs[m * e] = if negate && m % 2 == 1 { -c } else { c.clone() };
        }
        ZPoly::from_coeffs(coeffs)
    }

    /// Exact quotient by `(1 - x)`, or `None` if `(1 - x)` does not divide.
    pub fn div_one_minus_x(&self) -> Option<ZPoly> {
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        // p = (1 - x) r  <=>  r_i = p_0 + ... + p_i, and the full sum vanishes.
        let mut r = Vec::with_capacity(self.coeffs.len());
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc += c;
            r.push(acc.clone());
        }
        if !acc.is_zero() {
            return None;
        }
        r.pop();
        Some(ZPoly::from_coeffs(r))
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl From<i64> for ZPoly {
    fn from(c: i64) -> Self {
        ZPoly::constant(c)
    }
}

impl From<BigInt> for ZPoly {
    fn from(c: BigInt) -> Self {
        ZPoly::constant(c)
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        let mut out = ZPoly::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: ZPoly) -> ZPoly {
        &self + &rhs
    }
}

impl Sub for ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: ZPoly) -> ZPoly {
        &self - &rhs
    }
}

impl Mul for ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: ZPoly) -> ZPoly {
        &self * &rhs
    }
}

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        -&self
    }
}

/// Canonical list form `[c0, c1, ...]`, used by the series line format.
impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let p = ZPoly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(ZPoly::from_i64s(&[0, 0]).degree(), None);
        assert!(ZPoly::from_i64s(&[0]).is_zero());
    }

    #[test]
    fn difference_of_squares_cancels() {
        let a = ZPoly::from_i64s(&[1, 1]);
        let b = ZPoly::from_i64s(&[1, -1]);
        assert_eq!(&a * &b, ZPoly::from_i64s(&[1, 0, -1]));
        assert_eq!(&(&a + &b) - &ZPoly::constant(2), ZPoly::zero());
    }

    #[test]
    fn division_by_one_minus_x() {
        // z^2 - 1 = (1 - z)(-(1 + z))
        let p = ZPoly::from_i64s(&[-1, 0, 1]);
        assert_eq!(p.div_one_minus_x(), Some(ZPoly::from_i64s(&[-1, -1])));
        assert_eq!(ZPoly::from_i64s(&[1, 1]).div_one_minus_x(), None);
        assert_eq!(ZPoly::zero().div_one_minus_x(), Some(ZPoly::zero()));
    }

    #[test]
    fn evaluation_and_derivative() {
        let p = ZPoly::from_i64s(&[0, 1, 0, -3]);
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(-22));
        assert_eq!(p.euler_derivative(), ZPoly::from_i64s(&[0, 1, 0, -9]));
        assert_eq!(ZPoly::constant(7).euler_derivative(), ZPoly::zero());
    }

    #[test]
    fn display_format() {
        assert_eq!(ZPoly::from_i64s(&[3, 0, -1]).to_string(), "[3, 0, -1]");
        assert_eq!(ZPoly::zero().to_string(), "[]");
    }

    #[test]
    fn monomial_substitution() {
        // 1 + 2x + 3x^2 with x -> -x^2
        let p = ZPoly::from_i64s(&[1, 2, 3]);
        assert_eq!(
            p.substitute_monomial(true, 2),
            ZPoly::from_i64s(&[1, 0, -2, 0, 3])
        );
        assert_eq!(p.substitute_monomial(false, 0), ZPoly::constant(6));
    }
}
