//! Truncated power series in `q` with [`ZPoly`] coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::zpoly::ZPoly;
use super::FpsError;

/// Coefficients of `q^0 .. q^(order-1)`, each exact.
///
/// Binary operations return a series whose order is the smaller of the two
/// operand orders; nothing is ever implicitly extended.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<ZPoly>,
}

/// A coefficient disagreement between two series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub lhs: ZPoly,
    pub rhs: ZPoly,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![ZPoly::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ZPoly::one(), order)
    }

    pub fn constant(c: ZPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// `c * z^zexp * q^qexp`, dropped entirely when `qexp >= order`.
    pub fn monomial<T: Into<BigInt>>(c: T, zexp: usize, qexp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if qexp < order {
            s.coeffs[qexp] = ZPoly::monomial(c, zexp);
        }
        s
    }

    /// The series `z` itself.
    pub fn z(order: usize) -> Self {
        Self::monomial(1, 1, 0, order)
    }

    /// The series `q` itself.
    pub fn q(order: usize) -> Self {
        Self::monomial(1, 0, 1, order)
    }

    pub fn from_coeffs(coeffs: Vec<ZPoly>) -> Self {
        Series { coeffs }
    }

    /// Series with integer (z-free) coefficients.
    pub fn from_ints<I, T>(values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Series {
            coeffs: values
                .into_iter()
                .map(|v| ZPoly::constant(v.into()))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[ZPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ZPoly> {
        self.coeffs
    }

    /// Coefficient of `q^n`; panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &ZPoly {
        &self.coeffs[n]
    }

    pub fn set_coeff(&mut self, n: usize, c: ZPoly) {
        if n < self.coeffs.len() {
            self.coeffs[n] = c;
        }
    }

    /// Adds `c` to the coefficient of `q^n` (ignored past the order).
    pub fn add_to_coeff(&mut self, n: usize, c: &ZPoly) {
        if n < self.coeffs.len() {
            self.coeffs[n].add_assign_ref(c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ZPoly::is_zero)
    }

    /// Smallest `n` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Largest z-degree over all coefficients.
    pub fn z_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(ZPoly::degree).max()
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series {
            coeffs: self.coeffs.iter().take(order).cloned().collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> Series {
        self.scale(&BigInt::from(c))
    }

    /// In-place `self += other`, truncating to the smaller order.
    pub fn add_assign_ref(&mut self, other: &Series) {
        self.coeffs.truncate(other.order());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_assign_ref(b);
        }
    }

    pub fn sub_assign_ref(&mut self, other: &Series) {
        self.coeffs.truncate(other.order());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.sub_assign_ref(b);
        }
    }

    /// Schoolbook product, exact below `min(self.order, other.order)`.
    pub fn mul_ref(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        // A z-free factor with few terms (a polynomial in q) is handled by
        // accumulating shifted copies of the other operand.
        let mut out = Series::zero(order);
        let (sparse, dense) = if self.nonzero_terms() <= other.nonzero_terms() {
            (self, other)
        } else {
            (other, self)
        };
        for (i, a) in sparse.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            if let Some(c) = a.as_constant() {
                for (j, b) in dense.coeffs.iter().enumerate().take(order - i) {
                    if !b.is_zero() {
                        out.coeffs[i + j].add_scaled_shifted(b, &c, 0);
                    }
                }
            } else {
                for (j, b) in dense.coeffs.iter().enumerate().take(order - i) {
                    if !b.is_zero() {
                        out.coeffs[i + j].add_product(a, b);
                    }
                }
            }
        }
        out
    }

    fn nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplicative inverse; the constant term must be `+1` or `-1`.
    pub fn invert(&self) -> Result<Series, FpsError> {
        let order = self.order();
        if order == 0 {
            return Ok(Series::zero(0));
        }
        let a0 = &self.coeffs[0];
        if !a0.is_unit() {
            return Err(FpsError::NonUnitConstantTerm(a0.clone()));
        }
        // a0 is its own inverse
        let inv0 = a0.coeff(0);
        let mut b = Series::zero(order);
        b.coeffs[0] = ZPoly::constant(inv0.clone());
        for n in 1..order {
            let mut acc = ZPoly::zero();
            for i in 1..=n {
                let ai = &self.coeffs[i];
                if !ai.is_zero() {
                    acc.add_product(ai, &b.coeffs[n - i]);
                }
            }
            b.coeffs[n] = acc.scale(&-&inv0);
        }
        Ok(b)
    }

    /// Multiply by `(1 + c z^zexp q^qexp)` in linear time.
    pub fn mul_binomial(&self, c: &BigInt, zexp: usize, qexp: usize) -> Series {
        let mut out = self.clone();
        if c.is_zero() {
            return out;
        }
        if qexp == 0 {
            for p in out.coeffs.iter_mut() {
                let extra = p.shift(zexp).scale(c);
                p.add_assign_ref(&extra);
            }
            return out;
        }
        for n in (qexp..self.order()).rev() {
            let src = &self.coeffs[n - qexp];
            if !src.is_zero() {
                out.coeffs[n].add_scaled_shifted(src, c, zexp);
            }
        }
        out
    }

    /// Divide by `(1 - c z^zexp q^qexp)` with `qexp >= 1`, in linear time.
    pub fn div_binomial(&self, c: &BigInt, zexp: usize, qexp: usize) -> Result<Series, FpsError> {
        if qexp == 0 {
            return Err(FpsError::ZeroQPower);
        }
        let mut out = self.clone();
        if c.is_zero() {
            return Ok(out);
        }
        for n in qexp..out.order() {
            let (lo, hi) = out.coeffs.split_at_mut(n);
            let prev = &lo[n - qexp];
            if !prev.is_zero() {
                hi[0].add_scaled_shifted(prev, c, zexp);
            }
        }
        Ok(out)
    }

    /// Multiply by `q^d`, keeping the order.
    pub fn mul_q_pow(&self, d: usize) -> Series {
        let order = self.order();
        let mut coeffs = vec![ZPoly::zero(); d.min(order)];
        coeffs.extend(self.coeffs.iter().take(order.saturating_sub(d)).cloned());
        Series { coeffs }
    }

    /// Multiply by `q^-d`; the order drops by `d` and the dropped low
    /// coefficients must vanish.
    pub fn div_q_pow(&self, d: usize) -> Result<Series, FpsError> {
        if let Some(n) = self.coeffs.iter().take(d).position(|c| !c.is_zero()) {
            return Err(FpsError::NegativePowerResidue {
                exponent: n as i64 - d as i64,
                coeff: self.coeffs[n].clone(),
            });
        }
        Ok(Series {
            coeffs: self.coeffs.iter().skip(d).cloned().collect(),
        })
    }

    /// Multiply by `q^d` for any sign of `d` (see [`Series::div_q_pow`]).
    pub fn mul_q_laurent(&self, d: i64) -> Result<Series, FpsError> {
        if d >= 0 {
            Ok(self.mul_q_pow(d as usize))
        } else {
            self.div_q_pow(d.unsigned_abs() as usize)
        }
    }

    /// Multiply every coefficient by `z^e`.
    pub fn mul_z_pow(&self, e: usize) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|p| p.shift(e)).collect(),
        }
    }

    /// Exact division of every coefficient by `z^e`.
    pub fn div_z_pow(&self, e: usize) -> Result<Series, FpsError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, p)| p.unshift(e).ok_or(FpsError::NotDivisible { n }))
            .collect::<Result<Vec<_>, _>>()
            .map(Series::from_coeffs)
    }

    /// `z d/dz` applied coefficientwise.
    pub fn dz(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(ZPoly::euler_derivative).collect(),
        }
    }

    /// `dz` applied `m` times.
    pub fn dz_pow(&self, m: usize) -> Series {
        (0..m).fold(self.clone(), |s, _| s.dz())
    }

    /// Evaluate the auxiliary variable at an integer.
    pub fn subst_z(&self, v: &BigInt) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .map(|p| ZPoly::constant(p.eval(v)))
                .collect(),
        }
    }

    pub fn subst_z_i64(&self, v: i64) -> Series {
        self.subst_z(&BigInt::from(v))
    }

    /// Substitute `z -> q^k`; terms pushed past the order are dropped.
    pub fn subst_z_qpow(&self, k: usize) -> Series {
        let order = self.order();
        let mut out = Series::zero(order);
        for (n, p) in self.coeffs.iter().enumerate() {
            for (m, c) in p.coeffs().iter().enumerate() {
                let e = n + k * m;
                if e < order && !c.is_zero() {
                    out.coeffs[e].add_scaled_shifted(&ZPoly::one(), c, 0);
                }
            }
        }
        out
    }

    /// Coefficientwise exact quotient by `(1 - z)`.
    pub fn exact_div_one_minus_z(&self) -> Result<Series, FpsError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, p)| p.div_one_minus_x().ok_or(FpsError::NotDivisible { n }))
            .collect::<Result<Vec<_>, _>>()
            .map(Series::from_coeffs)
    }

    /// First `n >= n_lo` below both orders where the coefficients differ.
    pub fn first_mismatch(&self, other: &Series, n_lo: usize) -> Option<Mismatch> {
        let hi = self.order().min(other.order());
        (n_lo..hi)
            .find(|&n| self.coeffs[n] != other.coeffs[n])
            .map(|n| Mismatch {
                n,
                lhs: self.coeffs[n].clone(),
                rhs: other.coeffs[n].clone(),
            })
    }

    /// True if every coefficient has z-degree zero.
    pub fn is_z_free(&self) -> bool {
        self.coeffs.iter().all(|p| p.degree().unwrap_or(0) == 0)
    }

    /// Integer coefficients of a z-free series.
    pub fn int_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(ZPoly::as_constant).collect()
    }

    /// Parse the line format produced by `Display`.
    pub fn parse_lines(text: &str) -> Result<Series, FpsError> {
        let mut coeffs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bad = || FpsError::BadSeriesText { line: lineno + 1 };
            let (idx, rest) = line.split_once(':').ok_or_else(bad)?;
            let idx: usize = idx.trim().parse().map_err(|_| bad())?;
            if idx != coeffs.len() {
                return Err(bad());
            }
            let body = rest
                .trim()
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(bad)?;
            let mut cs = Vec::new();
            if !body.trim().is_empty() {
                for tok in body.split(',') {
                    cs.push(tok.trim().parse::<BigInt>().map_err(|_| bad())?);
                }
            }
            let p = ZPoly::from_coeffs(cs.clone());
            if p.coeffs().len() != cs.len() {
                return Err(bad());
            }
            coeffs.push(p);
        }
        Ok(Series::from_coeffs(coeffs))
    }
}

/// One line per power of `q`: `n: [c0, c1, ...]`.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, p) in self.coeffs.iter().enumerate() {
            writeln!(f, "{n}: {p}")?;
        }
        Ok(())
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.mul_ref(rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|p| -p).collect(),
        }
    }
}

impl Add for Series {
    type Output = Series;
    fn add(mut self, rhs: Series) -> Series {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for Series {
    type Output = Series;
    fn sub(mut self, rhs: Series) -> Series {
        self.sub_assign_ref(&rhs);
        self
    }
}

impl Mul for Series {
    type Output = Series;
    fn mul(self, rhs: Series) -> Series {
        self.mul_ref(&rhs)
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

/// `-1` when `negative`, else `+1`.
pub(crate) fn unit(negative: bool) -> BigInt {
    if negative {
        -BigInt::one()
    } else {
        BigInt::one()
    }
}

/// Parity sign `(-1)^e`.
pub fn sign_pow(e: i64) -> BigInt {
    unit(e.rem_euclid(2) == 1)
}
