//! Weighted sums over partitions into distinct parts.

use num_bigint::BigInt;
use num_traits::Zero;

use super::arith::{divisor_table, isqrt, pentagonal_index};
use super::enumerate::{for_each_distinct, s_k};
use crate::fps::{sign_pow, ZPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(m: usize) -> Parity {
        if m % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Which power of `-1` weights a partition with `#` parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignConvention {
    /// `(-1)^#`
    Sharp,
    /// `(-1)^(# - 1)`
    SharpMinusOne,
}

impl SignConvention {
    pub fn sign(self, len: usize) -> i64 {
        let e = match self {
            SignConvention::Sharp => len,
            SignConvention::SharpMinusOne => len + 1,
        };
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// A weighted statistic; summing it over `D(n)` gives a polynomial in the
/// auxiliary variable (`z`, or `c` for [`StatVariant::FfwC`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StatVariant {
    /// `(-1)^# z^(s_k)`, over all of `D(n)`
    FfwKz(usize),
    /// `(-1)^(#-1) (1 + z + ... + z^(s-1))`
    AglZ,
    /// `(-c)^# s`
    FfwC,
    /// `(-1)^# s^m z^s`
    Power(u32),
    /// `(-1)^# (1 + z + ... + z^(s_k - s_(k-1) - 1))` over `# >= k`
    Tails(usize),
    /// `(-1)^# (s_k - s_(k-1))` over `# >= k`
    Diff(usize),
    /// the sign alone, over partitions whose smallest part has the given parity
    Parity(Parity, SignConvention),
}

fn sign(len: usize) -> i64 {
    SignConvention::Sharp.sign(len)
}

/// `1 + z + ... + z^(d-1)` added with weight `w` into a dense accumulator.
fn add_ones(acc: &mut Vec<i64>, d: usize, w: i64) {
    if acc.len() < d {
        acc.resize(d, 0);
    }
    for a in &mut acc[..d] {
        *a += w;
    }
}

fn add_at(acc: &mut Vec<i64>, deg: usize, w: i64) {
    if acc.len() <= deg {
        acc.resize(deg + 1, 0);
    }
    acc[deg] += w;
}

/// Adds the weight of one partition (ascending parts) into a dense
/// coefficient accumulator.
fn accumulate(v: StatVariant, parts: &[usize], acc: &mut Vec<i64>) {
    let len = parts.len();
    let s = s_k(parts, 1);
    match v {
        StatVariant::FfwKz(k) => add_at(acc, s_k(parts, k), sign(len)),
        StatVariant::AglZ => add_ones(acc, s, -sign(len)),
        StatVariant::FfwC => {
            let w = if len % 2 == 0 { s as i64 } else { -(s as i64) };
            add_at(acc, len, w)
        }
        StatVariant::Power(m) => add_at(acc, s, sign(len) * (s as i64).pow(m)),
        StatVariant::Tails(k) if len >= k => {
            add_ones(acc, s_k(parts, k) - s_k(parts, k - 1), sign(len))
        }
        StatVariant::Diff(k) if len >= k => {
            let d = (s_k(parts, k) - s_k(parts, k - 1)) as i64;
            add_at(acc, 0, sign(len) * d)
        }
        StatVariant::Parity(p, conv) if len > 0 && Parity::of(s) == p => {
            add_at(acc, 0, conv.sign(len))
        }
        _ => {}
    }
}

/// The weighted sum of `v` over `D(n)`, by enumeration.
pub fn stat_poly(n: usize, v: StatVariant) -> ZPoly {
    let mut acc = Vec::new();
    for_each_distinct(n, |parts| accumulate(v, parts, &mut acc));
    ZPoly::from_i64s(&acc)
}

/// `sum_{pi in D(n)} weight(pi)` for an arbitrary integer weight.
pub fn weighted_sum<F: FnMut(&[usize]) -> i64>(n: usize, mut weight: F) -> i64 {
    let mut total = 0;
    for_each_distinct(n, |parts| total += weight(parts));
    total
}

/// `sum_{pi in D(n)} (-1)^# s_k(pi)`, zero at `n = 0`.
pub fn ffw_k(n: usize, k: usize) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    stat_poly(n, StatVariant::FfwKz(k))
        .euler_derivative()
        .eval(&BigInt::from(1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// the second smallest part statistic via divisor sums
    Ffw2,
    /// the third smallest part statistic via floor-weighted divisor sums
    Ffw3,
    /// even smallest part count with square / pentagonal case labels
    Thm14,
    /// the same with the "not square" / "not pentagonal" labels exchanged
    Thm34Printed,
    /// at least two parts, sign `(-1)^(# - s_2)`
    Thm37,
}

/// Exact value of the closed form `which` at `n >= 1`.
pub fn closed_form(n: usize, which: ClosedForm) -> BigInt {
    closed_form_table(n, which).pop().unwrap_or_default()
}

/// `closed_form(m, which)` for `m` in `0..=n_max` (entry `0` is zero),
/// sharing one divisor sieve.
pub fn closed_form_table(n_max: usize, which: ClosedForm) -> Vec<BigInt> {
    let d = divisor_table(n_max);
    let mut out = vec![BigInt::zero(); n_max + 1];
    match which {
        ClosedForm::Ffw2 => {
            let mut prefix: i64 = 0;
            for n in 1..=n_max {
                out[n] = BigInt::from(prefix - d[n] as i64 + 1);
                prefix += d[n] as i64;
            }
        }
        ClosedForm::Ffw3 => {
            for (n, slot) in out.iter_mut().enumerate().skip(1) {
                let mut acc: i64 = 0;
                for i in 1..n {
                    acc += (((n - i - 1) / 2) as i64 - 1) * d[i] as i64;
                }
                let half = (5 + sign_pow(n as i64)) / 2;
                *slot = BigInt::from(-acc - d[n] as i64 - n as i64) + half;
            }
        }
        ClosedForm::Thm14 | ClosedForm::Thm34Printed => {
            let printed = which == ClosedForm::Thm34Printed;
            for (n, slot) in out.iter_mut().enumerate().skip(1) {
                let r = isqrt(n);
                let square = (r * r == n).then_some(r);
                let pent = pentagonal_index(n);
                let v: i64 = match (square, pent) {
                    (Some(j), Some(k)) => pm(k) - pm(j as i64),
                    // with the labels exchanged both single cases are vacuous
                    (Some(j), None) if !printed => -pm(j as i64),
                    (None, Some(k)) if !printed => pm(k),
                    _ => 0,
                };
                *slot = BigInt::from(v);
            }
        }
        ClosedForm::Thm37 => {
            for (n, slot) in out.iter_mut().enumerate().skip(1) {
                let l = isqrt(n);
                let v = -pm(l as i64) + pentagonal_index(n).map_or(0, pm);
                *slot = BigInt::from(v);
            }
        }
    }
    out
}

/// `(-1)^e`
fn pm(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
