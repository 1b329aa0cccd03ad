//! Shared series constructions for the registry.

use num_bigint::BigInt;
use num_traits::One;

use crate::fps::{
    div_qpoch, divisor_series, inv_qpoch, lambert_range, qpoch_inf, sign_pow, FpsError, Series,
    ZPoly,
};
use crate::partitions::{divisor_ge_table, ffw_k, stat_poly, weighted_sum, StatVariant};

use super::Builder;

pub type Built = Result<Series, FpsError>;

pub fn tri(n: usize) -> usize {
    n * (n + 1) / 2
}

/// `(-1)^e` as a small integer.
pub fn sgn(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn one() -> BigInt {
    BigInt::one()
}

pub fn minus_one() -> BigInt {
    -BigInt::one()
}

/// A builder for a check with a single (unlabelled) parameter value.
pub fn single<F>(f: F) -> Builder
where
    F: Fn(usize) -> Built + Send + Sync + 'static,
{
    Box::new(move |order| Ok(vec![f(order)?]))
}

/// A builder evaluating `f` at each parameter value in turn.
pub fn per<P, F>(ps: &[P], f: F) -> Builder
where
    P: Copy + Send + Sync + 'static,
    F: Fn(P, usize) -> Built + Send + Sync + 'static,
{
    let ps = ps.to_vec();
    Box::new(move |order| ps.iter().map(|&p| f(p, order)).collect())
}

/// Coefficient `f(n)` at `q^n` for `1 <= n < order`.
pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> ZPoly) -> Series {
    let mut s = Series::zero(order);
    for n in 1..order {
        s.set_coeff(n, f(n));
    }
    s
}

pub fn from_i64s(order: usize, f: impl Fn(usize) -> i64) -> Series {
    from_fn(order, |n| ZPoly::constant(f(n)))
}

pub fn enum_stat(order: usize, v: StatVariant) -> Series {
    from_fn(order, |n| stat_poly(n, v))
}

pub fn enum_weight(order: usize, w: impl Fn(&[usize]) -> i64) -> Series {
    from_fn(order, |n| ZPoly::constant(weighted_sum(n, &w)))
}

/// `sum_n FFW_k(n) q^n` by enumeration.
pub fn enum_ffw(order: usize, k: usize) -> Series {
    from_fn(order, |n| ffw_k(n, k).into())
}

/// `sum_n d_{>=k}(n) q^n` from the integer sieve (no series code involved).
pub fn sieve_divisors(order: usize, k_min: usize) -> Series {
    let t = divisor_ge_table(order.saturating_sub(1), k_min);
    from_i64s(order, |n| t[n] as i64)
}

/// `T[n] = (q^n; q)_inf` for every `n >= 1`, built by peeling one factor
/// at a time off `(q; q)_inf`.
pub struct Tails {
    t: Vec<Series>,
    order: usize,
}

impl Tails {
    pub fn new(order: usize) -> Self {
        let mut t = vec![Series::one(order), qpoch_inf(1, order)];
        for n in 1..order {
            let next = t[n].div_binomial(&one(), 0, n).expect("positive power");
            t.push(next);
        }
        Tails { t, order }
    }

    pub fn get(&self, n: usize) -> Series {
        assert!(n >= 1, "(1; q)_inf vanishes");
        if n >= self.order {
            Series::one(self.order)
        } else {
            self.t[n].clone()
        }
    }

    /// `(q^n; q)_inf - 1`, of valuation at least `n`.
    pub fn minus_one(&self, n: usize) -> Series {
        &self.get(n) - &Series::one(self.order)
    }
}

/// `1/(q;q)_n` for `n = 0, 1, ..., order`, one division per step. The last
/// few agree modulo `q^order`, but sums like `sum z^n/(q;q)_n` at `z = q`
/// still need the index `n = order`.
pub fn inv_qq_prefix(order: usize) -> impl Iterator<Item = Series> {
    let mut cur = Some(Series::one(order));
    let mut n = 0;
    std::iter::from_fn(move || {
        let out = cur.take()?;
        n += 1;
        if n <= order {
            cur = Some(out.div_binomial(&one(), 0, n).expect("positive power"));
        }
        Some(out)
    })
}

/// `-sum_{i in is} (-1)^i q^(i(i+1)/2) / (q;q)_i (D(q) - sum_{n=1}^{k-i-1} q^n/(1-q^n))`,
/// where `D` is the divisor series.
pub fn divisor_form(k: usize, is: impl Iterator<Item = usize>, order: usize) -> Series {
    let d = divisor_series(1, order);
    let mut acc = Series::zero(order);
    for i in is {
        if tri(i) >= order {
            continue;
        }
        let tail = lambert_range(1, k.saturating_sub(i + 1), order);
        let inner = &d - &tail;
        let term = div_qpoch(&inner, 1, i).mul_q_pow(tri(i));
        acc.sub_assign_ref(&term.scale(&sign_pow(i as i64)));
    }
    acc
}

/// `z^k sum_{n>=k} (-1)^n q^(n(n+1)/2) / ((q;q)_{n-k} (zq^{n-k+1};q)_k)`.
pub fn gen1_sum(k: usize, order: usize) -> Built {
    let mut acc = Series::zero(order);
    let mut n = k;
    while tri(n) < order {
        let mut t = Series::monomial(sign_pow(n as i64), k, tri(n), order);
        t = inv_qpoch(1, n - k, order) * t;
        for j in 0..k {
            t = t.div_binomial(&one(), 1, n - k + 1 + j)?;
        }
        acc.add_assign_ref(&t);
        n += 1;
    }
    Ok(acc)
}
