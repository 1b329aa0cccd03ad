//! Exact arithmetic on truncated formal power series in `q` whose
//! coefficients are integer polynomials in one auxiliary variable `z`
//! (which doubles as `c` where a formula calls for it).
//!
//! Besides ring arithmetic this module provides the standard building
//! blocks: q-Pochhammer products, Gaussian binomials, geometric factors,
//! the pentagonal and square theta series, and divisor-count series.

mod series;
mod zpoly;

pub use series::{sign_pow, Mismatch, Series};
pub use zpoly::ZPoly;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use series::unit;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FpsError {
    #[error("constant term {0} is not a unit")]
    NonUnitConstantTerm(ZPoly),
    #[error("invalid Pochhammer spec: {0}")]
    InvalidPochSpec(&'static str),
    #[error("geometric factor needs a positive power of q")]
    ZeroQPower,
    #[error("coefficient of q^{n} is not divisible")]
    NotDivisible { n: usize },
    #[error("nonzero coefficient {coeff} at q^{exponent} after a negative shift")]
    NegativePowerResidue { exponent: i64, coeff: ZPoly },
    #[error("malformed series text at line {line}")]
    BadSeriesText { line: usize },
}

/// Number of factors in a Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Count {
    Finite(usize),
    Infinite,
}

/// `(a; q^step)_count` with `a = ±z^a_zexp q^a_qpow`.
///
/// The product is `prod_{i < count} (1 - a q^(i*step))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PochSpec {
    pub negative: bool,
    pub a_zexp: usize,
    pub a_qpow: usize,
    pub step_qpow: usize,
    pub count: Count,
}

impl PochSpec {
    pub fn new(
        negative: bool,
        a_zexp: usize,
        a_qpow: usize,
        step_qpow: usize,
        count: Count,
    ) -> Self {
        PochSpec {
            negative,
            a_zexp,
            a_qpow,
            step_qpow,
            count,
        }
    }

    /// `(q^a; q)_count`
    pub fn q_shift(a_qpow: usize, count: Count) -> Self {
        Self::new(false, 0, a_qpow, 1, count)
    }

    /// `(z q^a; q)_count`
    pub fn zq_shift(a_qpow: usize, count: Count) -> Self {
        Self::new(false, 1, a_qpow, 1, count)
    }

    fn validate(&self) -> Result<(), FpsError> {
        if self.step_qpow == 0 {
            return Err(FpsError::InvalidPochSpec(
                "step must be a positive power of q",
            ));
        }
        if self.count == Count::Infinite && self.a_qpow == 0 {
            return Err(FpsError::InvalidPochSpec(
                "infinite product needs a positive power of q in its first factor",
            ));
        }
        Ok(())
    }

    /// q-exponents of the factors that can matter below `order`.
    fn factor_qpows(&self, order: usize) -> impl Iterator<Item = usize> + '_ {
        let n = match self.count {
            Count::Finite(n) => n,
            Count::Infinite => usize::MAX,
        };
        (0..n)
            .map(move |i| self.a_qpow + i * self.step_qpow)
            .take_while(move |&p| p < order || self.count != Count::Infinite)
    }

    fn factor_coeff(&self) -> BigInt {
        // 1 - a q^p with a = ±z^e: the binomial coefficient is -(±1)
        unit(!self.negative)
    }
}

/// The product described by `spec`, truncated to `order`.
pub fn pochhammer(spec: &PochSpec, order: usize) -> Result<Series, FpsError> {
    spec.validate()?;
    let c = spec.factor_coeff();
    let mut acc = Series::one(order);
    for p in spec.factor_qpows(order) {
        if p >= order {
            continue;
        }
        acc = acc.mul_binomial(&c, spec.a_zexp, p);
    }
    Ok(acc)
}

/// Reciprocal of [`pochhammer`], computed factor by factor in linear time.
pub fn inv_pochhammer(spec: &PochSpec, order: usize) -> Result<Series, FpsError> {
    spec.validate()?;
    if spec.a_qpow == 0 && spec.count != Count::Finite(0) {
        return Err(FpsError::NonUnitConstantTerm(
            &ZPoly::one() - &ZPoly::monomial(unit(spec.negative), spec.a_zexp),
        ));
    }
    // 1/(1 - a q^p) = 1/(1 - (±z^e) q^p)
    let c = unit(spec.negative);
    let mut acc = Series::one(order);
    for p in spec.factor_qpows(order) {
        if p >= order {
            continue;
        }
        acc = acc.div_binomial(&c, spec.a_zexp, p)?;
    }
    Ok(acc)
}

/// `(q^a; q)_n` for a finite count.
pub fn qpoch(a: usize, n: usize, order: usize) -> Series {
    pochhammer(&PochSpec::q_shift(a, Count::Finite(n)), order).expect("finite q-shift product")
}

/// `1 / (q^a; q)_n`, requires `a >= 1` unless `n == 0`.
pub fn inv_qpoch(a: usize, n: usize, order: usize) -> Series {
    inv_pochhammer(&PochSpec::q_shift(a, Count::Finite(n)), order).expect("unit constant term")
}

/// `(q^a; q)_inf`, requires `a >= 1`.
pub fn qpoch_inf(a: usize, order: usize) -> Series {
    pochhammer(&PochSpec::q_shift(a, Count::Infinite), order).expect("a >= 1")
}

/// `1 / (q^a; q)_inf`, requires `a >= 1`.
pub fn inv_qpoch_inf(a: usize, order: usize) -> Series {
    inv_pochhammer(&PochSpec::q_shift(a, Count::Infinite), order).expect("a >= 1")
}

/// Divide in place by `(q^a; q)_n`.
pub fn div_qpoch(s: &Series, a: usize, n: usize) -> Series {
    let one = BigInt::one();
    let mut acc = s.clone();
    for i in 0..n {
        let p = a + i;
        if p >= acc.order() {
            break;
        }
        acc = acc.div_binomial(&one, 0, p).expect("positive power");
    }
    acc
}

/// The Gaussian binomial `[n, k]_q` as a polynomial in `q`, truncated;
/// zero when `k > n`.
pub fn q_binomial(n: usize, k: usize, order: usize) -> Series {
    if k > n {
        return Series::zero(order);
    }
    let k = k.min(n - k);
    let minus_one = -BigInt::one();
    let mut acc = Series::one(order);
    for i in 1..=k {
        acc = acc.mul_binomial(&minus_one, 0, n - k + i);
    }
    div_qpoch(&acc, 1, k)
}

/// `1 / (1 - z^zpow q^qpow)`.
pub fn geometric(zpow: usize, qpow: usize, order: usize) -> Result<Series, FpsError> {
    if qpow == 0 {
        return Err(FpsError::ZeroQPower);
    }
    Series::one(order).div_binomial(&BigInt::one(), zpow, qpow)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThetaKind {
    /// `sum_{j in Z} (-1)^j q^(j(3j+1)/2)`
    Pentagonal,
    /// `1 + 2 sum_{j >= 1} (-1)^j q^(j^2)`
    Square,
}

/// Theta series written out term by term (no multiplication involved).
pub fn theta(kind: ThetaKind, order: usize) -> Series {
    let mut s = Series::zero(order);
    if order == 0 {
        return s;
    }
    s.set_coeff(0, ZPoly::one());
    match kind {
        ThetaKind::Pentagonal => {
            for j in 1usize.. {
                let lo = j * (3 * j - 1) / 2;
                if lo >= order {
                    break;
                }
                let c = ZPoly::constant(sign_pow(j as i64));
                s.add_to_coeff(lo, &c);
                s.add_to_coeff(j * (3 * j + 1) / 2, &c);
            }
        }
        ThetaKind::Square => {
            for j in 1usize.. {
                if j * j >= order {
                    break;
                }
                s.add_to_coeff(j * j, &ZPoly::constant(sign_pow(j as i64) * 2));
            }
        }
    }
    s
}

/// `sum_n d_{>=k_min}(n) q^n`, the number of divisors of `n` that are at
/// least `k_min`, filled by walking the multiples of each admissible divisor.
pub fn divisor_series(k_min: usize, order: usize) -> Series {
    let mut counts = vec![0u64; order];
    for m in k_min.max(1)..order {
        for n in (m..order).step_by(m) {
            counts[n] += 1;
        }
    }
    Series::from_ints(counts)
}

/// First disagreement at or above `n_lo`.
pub fn first_mismatch(a: &Series, b: &Series, n_lo: usize) -> Option<Mismatch> {
    a.first_mismatch(b, n_lo)
}

/// `sum_{n >= 1} q^n / (1 - q^n)` restricted to `n` in `lo..=hi`.
pub fn lambert_range(lo: usize, hi: usize, order: usize) -> Series {
    let mut s = Series::zero(order);
    for m in lo.max(1)..=hi.min(order.saturating_sub(1)) {
        for n in (m..order).step_by(m) {
            s.add_to_coeff(n, &ZPoly::one());
        }
    }
    s
}

#[cfg(test)]
mod tests;
