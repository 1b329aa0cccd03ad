//! Sieves, recognisers and small dynamic programs used as independent oracles.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Zero};

use super::enumerate::for_each_distinct;
use super::stats::{Parity, SignConvention};
use crate::fps::{Series, ZPoly};

pub fn isqrt(n: usize) -> usize {
    n.sqrt()
}

/// The nonzero `j` with `n = j(3j - 1)/2`, if any.
///
/// Positive `j` covers `k(3k - 1)/2`, negative `j` covers `k(3k + 1)/2`.
pub fn pentagonal_index(n: usize) -> Option<i64> {
    if n == 0 {
        return None;
    }
    // n = j(3j-1)/2  <=>  24n + 1 = (6j - 1)^2
    let m = 24 * n as u128 + 1;
    let s = m.sqrt();
    if s * s != m {
        return None;
    }
    let s = s as i64;
    if (1 + s) % 6 == 0 {
        Some((1 + s) / 6)
    } else if (1 - s) % 6 == 0 {
        Some((1 - s) / 6)
    } else {
        None
    }
}

/// Number of divisors of `n` that are at least `k_min`.
pub fn divisor_count(n: usize, k_min: usize) -> usize {
    let mut count = 0;
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            count += usize::from(d >= k_min);
            let e = n / d;
            if e != d {
                count += usize::from(e >= k_min);
            }
        }
        d += 1;
    }
    count
}

/// `d(n)` for `n` in `0..=n_max`, with `d(0) = 0`.
pub fn divisor_table(n_max: usize) -> Vec<u32> {
    divisor_ge_table(n_max, 1)
}

/// `d_{>=k_min}(n)` for `n` in `0..=n_max`, with entry `0` zero.
pub fn divisor_ge_table(n_max: usize, k_min: usize) -> Vec<u32> {
    let mut t = vec![0u32; n_max + 1];
    for m in k_min.max(1)..=n_max {
        for n in (m..=n_max).step_by(m) {
            t[n] += 1;
        }
    }
    t
}

/// `sum_n (sum_{d | n} z^d) q^n`, filled by the divisor sieve.
pub fn divisor_power_series(order: usize) -> Series {
    let mut coeffs: Vec<Vec<BigInt>> = (0..order).map(|n| vec![BigInt::zero(); n + 1]).collect();
    for d in 1..order {
        for n in (d..order).step_by(d) {
            coeffs[n][d] += 1;
        }
    }
    Series::from_coeffs(coeffs.into_iter().map(ZPoly::from_coeffs).collect())
}

/// Partitions of `m` (repetition allowed) into parts from `1..k`, for
/// `m` in `0..=n_max`.
pub fn parts_lt_table(n_max: usize, k: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::zero(); n_max + 1];
    t[0] = BigInt::one();
    for part in 1..k {
        for m in part..=n_max {
            let prev = t[m - part].clone();
            t[m] += prev;
        }
    }
    t
}

pub fn parts_lt_count(n: usize, k: usize) -> BigInt {
    parts_lt_table(n, k).swap_remove(n)
}

/// Sum of the largest parts over the partitions of `n` into exactly `len`
/// distinct parts.
pub fn largest_sum_fixed_len(n: usize, len: usize) -> u64 {
    let mut total = 0;
    for_each_distinct(n, |parts| {
        if parts.len() == len {
            total += *parts.last().expect("len >= 1") as u64;
        }
    });
    total
}

/// `t[n][s] = sum (-1)^#` over partitions of `n` into distinct parts with
/// smallest part `s`, for `n <= n_max`, without enumerating.
///
/// Entries are bounded by `|D(n)|`, which fits `i64` far beyond any
/// practical `n_max`.
pub fn smallest_part_sign_table(n_max: usize) -> Vec<Vec<i64>> {
    // g[m] = signed count of distinct partitions of m with all parts >= a,
    // swept from a = n_max + 1 down to a = 1
    let mut g = vec![0i64; n_max + 1];
    g[0] = 1;
    let mut t: Vec<Vec<i64>> = (0..=n_max).map(|n| vec![0; n + 1]).collect();
    for a in (1..=n_max).rev() {
        // partitions with smallest part exactly a: -q^a * g_{a+1}
        for n in a..=n_max {
            t[n][a] = -g[n - a];
        }
        for m in (a..=n_max).rev() {
            g[m] -= g[m - a];
        }
    }
    t
}

/// `sum (-1)^#` (or `(-1)^(#-1)`) over `D(n)` restricted to smallest parts
/// of the given parity, for `n` in `0..=n_max`.
pub fn parity_sign_sums(n_max: usize, parity: Parity, conv: SignConvention) -> Vec<i64> {
    let flip = match conv {
        SignConvention::Sharp => 1,
        SignConvention::SharpMinusOne => -1,
    };
    smallest_part_sign_table(n_max)
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|&(s, _)| s > 0 && Parity::of(s) == parity)
                .map(|(_, v)| flip * v)
                .sum()
        })
        .collect()
}
