use crate::fps::{
    geometric, inv_pochhammer, inv_qpoch, inv_qpoch_inf, pochhammer, q_binomial, qpoch_inf,
    sign_pow, theta, Count, PochSpec, Series, ThetaKind,
};
use crate::partitions::smallest_part_sign_table;
use crate::verify::build::{inv_qq_prefix, minus_one, one, per, single, Built};
use crate::verify::count::{
    partitions_between, parts_between_shifted, signed_distinct_with_zero, signed_overpartitions,
};
use crate::verify::{IdentityCheck, Suite};

use super::Entry;

const S: Suite = Suite::Classical;

/// `(N, m)` pairs for the Gaussian binomial series at `z = q^(m+1)`.
const BINOM_PARAMS: [(usize, usize); 20] = {
    let mut out = [(0, 0); 20];
    let mut i = 0;
    while i < 20 {
        out[i] = (i / 4 + 1, i % 4);
        i += 1;
    }
    out
};

fn binom_labels() -> Vec<String> {
    BINOM_PARAMS
        .iter()
        .map(|(n, m)| format!("N={n}, m={m}"))
        .collect()
}

const JTP: [(usize, usize); 2] = [(1, 1), (1, 2)];

fn jtp_labels(ps: &[(usize, usize)]) -> Vec<String> {
    let pw = |e: usize| {
        if e == 1 {
            "q".to_string()
        } else {
            format!("q^{e}")
        }
    };
    ps.iter()
        .map(|&(a, b)| format!("a={}, b={}", pw(a), pw(b)))
        .collect()
}

pub fn entries() -> Vec<IdentityCheck> {
    vec![
        Entry::new("euler_pent", S, "pentagonal number theorem")
            .from(0)
            .side("product", single(|o| Ok(qpoch_inf(1, o))))
            .side(
                "pentagonal theta",
                single(|o| Ok(theta(ThetaKind::Pentagonal, o))),
            )
            .counted(
                "signed distinct-part count",
                single(|o| Ok(signed_count(o))),
            )
            .done(),
        Entry::new(
            "gauss_sq",
            S,
            "Gauss: (q;q)/(-q;q) is the alternating square theta",
        )
        .from(0)
        .side("products", single(gauss_products))
        .side("square theta", single(|o| Ok(theta(ThetaKind::Square, o))))
        .counted(
            "signed overpartition count",
            single(|o| Ok(signed_overpartitions(o))),
        )
        .done(),
        Entry::new("jtp_qq", S, "triple product with alternating sign")
            .labelled(jtp_labels(&JTP))
            .from(0)
            .counted(
                "bilateral sum",
                per(&JTP, |(a, b), o| Ok(bilateral(a, b, true, o))),
            )
            .side("product", per(&JTP, |(a, b), o| jtp_product(a, b, o)))
            .done(),
        Entry::new(
            "jtp_printed",
            S,
            "triple product without the alternating sign",
        )
        .printed()
        .labelled(jtp_labels(&JTP[..1]))
        .from(0)
        .counted(
            "bilateral sum",
            per(&JTP[..1], |(a, b), o| Ok(bilateral(a, b, false, o))),
        )
        .side("product", per(&JTP[..1], |(a, b), o| jtp_product(a, b, o)))
        .done(),
        Entry::new("euler_zq", S, "Euler's expansion of (z;q)_inf")
            .from(0)
            .side("product", single(zq_product))
            .side("series", single(|o| Ok(euler_series(o))))
            .counted(
                "signed set count",
                single(|o| Ok(signed_distinct_with_zero(o))),
            )
            .done(),
        Entry::new(
            "binom_337",
            S,
            "sum of [N+j-1, j] z^j is 1/(z;q)_N at z = q^(m+1)",
        )
        .labelled(binom_labels())
        .from(0)
        .side(
            "series",
            per(&BINOM_PARAMS, |(n, m), o| Ok(binom_series(n, m, o))),
        )
        .side(
            "product",
            per(&BINOM_PARAMS, |(n, m), o| Ok(inv_qpoch(m + 1, n, o))),
        )
        .counted(
            "partition count",
            per(&BINOM_PARAMS, |(n, m), o| {
                Ok(partitions_between(o, m + 1, Some(m + n)))
            }),
        )
        .done(),
        Entry::new(
            "binom_diff",
            S,
            "z-derivative of the Gaussian binomial series at z = q^(m+1)",
        )
        .labelled(binom_labels())
        .from(0)
        .side(
            "series",
            per(&BINOM_PARAMS, |(n, m), o| Ok(binom_diff_series(n, m, o))),
        )
        .side(
            "product",
            per(&BINOM_PARAMS, |(n, m), o| binom_diff_product(n, m, o)),
        )
        .counted(
            "part count",
            per(&BINOM_PARAMS, |(n, m), o| {
                Ok(parts_between_shifted(o, m + 1, Some(m + n)))
            }),
        )
        .done(),
        Entry::new(
            "zn_21",
            S,
            "sum_{n>=0} z^n/(q;q)_n = 1/(z;q)_inf at z = q^k",
        )
        .params("k", &[1, 2, 3, 4])
        .from(0)
        .side(
            "series from n=0",
            per(&[1, 2, 3, 4], |k, o| Ok(zn_series(k, 0, o))),
        )
        .side(
            "product",
            per(&[1, 2, 3, 4], |k, o| Ok(inv_qpoch_inf(k, o))),
        )
        .counted(
            "partition count",
            per(&[1, 2, 3, 4], |k, o| Ok(partitions_between(o, k, None))),
        )
        .done(),
        Entry::new("zn_21_printed", S, "the same sum started at n=1")
            .printed()
            .params("k", &[1, 2, 3, 4])
            .from(0)
            .side(
                "series from n=1",
                per(&[1, 2, 3, 4], |k, o| Ok(zn_series(k, 1, o))),
            )
            .side(
                "product",
                per(&[1, 2, 3, 4], |k, o| Ok(inv_qpoch_inf(k, o))),
            )
            .done(),
        Entry::new("zsum_22", S, "z-derivative of 1/(z;q)_inf at z = q^k")
            .params("k", &[1, 2, 3, 4])
            .from(0)
            .side("series", per(&[1, 2, 3, 4], |k, o| Ok(zsum_series(k, o))))
            .side("product", per(&[1, 2, 3, 4], zsum_product))
            .counted(
                "part count",
                per(&[1, 2, 3, 4], |k, o| Ok(parts_between_shifted(o, k, None))),
            )
            .done(),
    ]
}

/// `sum_{pi in D(n)} (-1)^#`, from the smallest-part table.
fn signed_count(order: usize) -> Series {
    let t = smallest_part_sign_table(order - 1);
    let mut s = Series::zero(order);
    for (n, row) in t.iter().enumerate() {
        let total: i64 = if n == 0 { 1 } else { row.iter().sum() };
        s.set_coeff(n, total.into());
    }
    s
}

fn gauss_products(order: usize) -> Built {
    let minus_q = inv_pochhammer(&PochSpec::new(true, 0, 1, 1, Count::Infinite), order)?;
    Ok(qpoch_inf(1, order) * minus_q)
}

/// `sum_{n in Z} [(-1)^n] q^(a n(n+1)/2 + b n(n-1)/2)`
fn bilateral(a: usize, b: usize, signed: bool, order: usize) -> Series {
    let mut s = Series::zero(order);
    let c = |m: usize| if signed { sign_pow(m as i64) } else { one() };
    s.add_to_coeff(0, &one().into());
    for m in 1.. {
        // n = m and n = -m
        let pos = a * m * (m + 1) / 2 + b * m * (m - 1) / 2;
        let neg = a * m * (m - 1) / 2 + b * m * (m + 1) / 2;
        if pos >= order && neg >= order {
            break;
        }
        for e in [pos, neg] {
            if e < order {
                s.add_to_coeff(e, &c(m).into());
            }
        }
    }
    s
}

/// `(q^a; q^(a+b))_inf (q^b; q^(a+b))_inf (q^(a+b); q^(a+b))_inf`
fn jtp_product(a: usize, b: usize, order: usize) -> Built {
    let step = a + b;
    let f = |p| pochhammer(&PochSpec::new(false, 0, p, step, Count::Infinite), order);
    Ok(f(a)? * f(b)? * f(step)?)
}

/// `(1 - z) (zq; q)_inf`
fn zq_product(order: usize) -> Built {
    Ok(
        pochhammer(&PochSpec::zq_shift(1, Count::Infinite), order)?.mul_binomial(
            &minus_one(),
            1,
            0,
        ),
    )
}

/// `sum_{m>=0} (-z)^m q^(m(m-1)/2) / (q;q)_m`
fn euler_series(order: usize) -> Series {
    let mut acc = Series::zero(order);
    for (m, inv) in inv_qq_prefix(order).enumerate() {
        let e = m * m.saturating_sub(1) / 2;
        if e >= order {
            break;
        }
        acc.add_assign_ref(&inv.mul_q_pow(e).mul_z_pow(m).scale(&sign_pow(m as i64)));
    }
    acc
}

/// `sum_{j>=0} [N+j-1, j] q^((m+1) j)`
fn binom_series(n: usize, m: usize, order: usize) -> Series {
    let mut acc = Series::zero(order);
    let mut j = 0;
    while (m + 1) * j < order {
        acc.add_assign_ref(&q_binomial(n + j - 1, j, order).mul_q_pow((m + 1) * j));
        j += 1;
    }
    acc
}

/// `sum_{j>=1} j [N+j-1, j] q^((m+1)(j-1))`
fn binom_diff_series(n: usize, m: usize, order: usize) -> Series {
    let mut acc = Series::zero(order);
    let mut j = 1;
    while (m + 1) * (j - 1) < order {
        let t = q_binomial(n + j - 1, j, order).mul_q_pow((m + 1) * (j - 1));
        acc.add_assign_ref(&t.scale_i64(j as i64));
        j += 1;
    }
    acc
}

/// `1/(q^(m+1);q)_N sum_{j<N} q^j / (1 - q^(m+1+j))`
fn binom_diff_product(n: usize, m: usize, order: usize) -> Built {
    let mut inner = Series::zero(order);
    for j in 0..n {
        inner.add_assign_ref(&geometric(0, m + 1 + j, order)?.mul_q_pow(j));
    }
    Ok(inv_qpoch(m + 1, n, order) * inner)
}

/// `sum_{n>=lo} q^(kn) / (q;q)_n`
fn zn_series(k: usize, lo: usize, order: usize) -> Series {
    let mut acc = Series::zero(order);
    for (n, inv) in inv_qq_prefix(order).enumerate() {
        if k * n >= order {
            break;
        }
        if n >= lo {
            acc.add_assign_ref(&inv.mul_q_pow(k * n));
        }
    }
    acc
}

/// `sum_{n>=1} n q^(k(n-1)) / (q;q)_n`
fn zsum_series(k: usize, order: usize) -> Series {
    let mut acc = Series::zero(order);
    for (n, inv) in inv_qq_prefix(order).enumerate().skip(1) {
        if k * (n - 1) >= order {
            break;
        }
        acc.add_assign_ref(&inv.mul_q_pow(k * (n - 1)).scale_i64(n as i64));
    }
    acc
}

/// `1/(q^k;q)_inf sum_{n>=0} q^n / (1 - q^(n+k))`
fn zsum_product(k: usize, order: usize) -> Built {
    let mut inner = Series::zero(order);
    for n in 0..order {
        inner.add_assign_ref(&geometric(0, n + k, order)?.mul_q_pow(n));
    }
    Ok(inv_qpoch_inf(k, order) * inner)
}
