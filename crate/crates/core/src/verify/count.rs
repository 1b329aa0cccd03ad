//! Integer counting recurrences used as independent sides. Nothing here
//! touches series multiplication or division; results are wrapped in a
//! `Series` only at the end.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::fps::{Series, ZPoly};

/// `(c[n], t[n])` for `n < len`: the number of partitions of `n` into parts
/// from `lo..=hi`, and the total number of parts over those partitions.
fn part_counts(len: usize, lo: usize, hi: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut c = vec![BigInt::zero(); len];
    let mut t = vec![BigInt::zero(); len];
    if len == 0 {
        return (c, t);
    }
    c[0] = 1.into();
    for p in lo..=hi.min(len.saturating_sub(1)) {
        // ascending n reuses the updated entries, so p may repeat
        for n in p..len {
            let (cp, tp) = (c[n - p].clone(), t[n - p].clone());
            t[n] += &tp + &cp;
            c[n] += cp;
        }
    }
    (c, t)
}

fn from_ints(order: usize, v: &[BigInt]) -> Series {
    Series::from_coeffs((0..order).map(|n| ZPoly::constant(v[n].clone())).collect())
}

/// Partitions into parts in `lo..=hi` (`hi = None` for no upper bound).
pub fn partitions_between(order: usize, lo: usize, hi: Option<usize>) -> Series {
    let (c, _) = part_counts(order, lo, hi.unwrap_or(order));
    from_ints(order, &c)
}

/// At `q^n`: the total number of parts over partitions of `n + lo` into parts
/// in `lo..=hi`.
pub fn parts_between_shifted(order: usize, lo: usize, hi: Option<usize>) -> Series {
    let len = order + lo;
    let (_, t) = part_counts(len, lo, hi.unwrap_or(len));
    from_ints(order, &t[lo..])
}

/// `sum (-z)^#S q^(sum S)` over finite sets `S` of nonnegative integers.
pub fn signed_distinct_with_zero(order: usize) -> Series {
    // d[n][l]: sets of distinct positive parts summing to n with l elements
    let mut d: Vec<Vec<BigInt>> = vec![Vec::new(); order];
    if order == 0 {
        return Series::zero(0);
    }
    d[0] = vec![1.into()];
    for p in 1..order {
        for n in (p..order).rev() {
            let src = d[n - p].clone();
            let dst = &mut d[n];
            if dst.len() < src.len() + 1 {
                dst.resize(src.len() + 1, BigInt::zero());
            }
            for (l, v) in src.iter().enumerate() {
                dst[l + 1] += v;
            }
        }
    }
    let coeffs = d
        .into_iter()
        .map(|row| {
            // the part 0 is either in S or not: multiply by (1 + z), then sign
            let with_zero: Vec<BigInt> = (0..=row.len())
                .map(|l| {
                    let a = row.get(l).cloned().unwrap_or_default();
                    let b = if l > 0 {
                        row[l - 1].clone()
                    } else {
                        BigInt::zero()
                    };
                    let v = a + b;
                    if l % 2 == 0 {
                        v
                    } else {
                        -v
                    }
                })
                .collect();
            ZPoly::from_coeffs(with_zero)
        })
        .collect();
    Series::from_coeffs(coeffs)
}

/// `prod_{n>=1} (1 + 2 sum_{j>=1} (-1)^j q^(nj))`, the signed overpartition
/// count, one factor at a time.
pub fn signed_overpartitions(order: usize) -> Series {
    let mut c = vec![BigInt::zero(); order];
    if order > 0 {
        c[0] = 1.into();
    }
    for p in 1..order {
        let old = c.clone();
        for m in p..order {
            let mut j = 1;
            while j * p <= m {
                let v = &old[m - j * p] * 2;
                if j % 2 == 0 {
                    c[m] += v;
                } else {
                    c[m] -= v;
                }
                j += 1;
            }
        }
    }
    from_ints(order, &c)
}
