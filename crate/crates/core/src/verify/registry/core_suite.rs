use crate::fps::{
    geometric, inv_pochhammer, pochhammer, q_binomial, qpoch_inf, sign_pow, Count, PochSpec, Series,
};
use crate::partitions::{closed_form_table, divisor_power_series, ClosedForm, StatVariant};
use crate::verify::build::{
    divisor_form, enum_ffw, enum_stat, enum_weight, inv_qq_prefix, one, per, sieve_divisors,
    single, tri, Built, Tails,
};
use crate::verify::{IdentityCheck, Suite};

use super::Entry;

const S: Suite = Suite::Core;
const K4: [usize; 4] = [1, 2, 3, 4];
const K5: [usize; 5] = [1, 2, 3, 4, 5];

pub fn entries() -> Vec<IdentityCheck> {
    vec![
        Entry::new(
            "uchimura",
            S,
            "sum n q^n (q^(n+1);q)_inf equals the divisor series",
        )
        .side("tail sum", single(|o| Ok(uchimura_tails(o))))
        .side("alternating sum", single(|o| Ok(uchimura_alternating(o))))
        .counted("divisor sieve", single(|o| Ok(sieve_divisors(o, 1))))
        .done(),
        Entry::new("ffw_eq_d", S, "signed smallest-part sum equals d(n)")
            .enumerated(
                "enumeration",
                single(|o| Ok(enum_weight(o, |p| sign_m1(p.len()) * p[0] as i64))),
            )
            .counted("divisor sieve", single(|o| Ok(sieve_divisors(o, 1))))
            .done(),
        Entry::new(
            "ramanujan_c",
            S,
            "alternating sum with (cq;q)_n against sum c^n q^n/(1-q^n)",
        )
        .side("alternating sum", single(ramanujan_alternating))
        .counted(
            "divisor powers (sieve)",
            single(|o| Ok(divisor_power_series(o))),
        )
        .side("Lambert sum", single(ramanujan_lambert))
        .done(),
        agl(false),
        agl(true),
        weighted_c(false),
        weighted_c(true),
        dilcher(false),
        dilcher(true),
        Entry::new(
            "thm11",
            S,
            "FFW_k as a q-binomial tail sum and as a divisor form",
        )
        .params("k", &K5)
        .enumerated("enumeration", per(&K5, |k, o| Ok(enum_ffw(o, k))))
        .side(
            "q-binomial tail sum",
            per(&K5, |k, o| Ok(ffw_tail_sum(k, o))),
        )
        .side(
            "divisor form",
            per(&K5, |k, o| Ok(divisor_form(k, 0..k, o))),
        )
        .done(),
        Entry::new(
            "thm11_proof_final",
            S,
            "divisor form with index range 1..=k",
        )
        .printed()
        .params("k", &K5)
        .enumerated("enumeration", per(&K5, |k, o| Ok(enum_ffw(o, k))))
        .side(
            "divisor form, i in 1..=k",
            per(&K5, |k, o| Ok(divisor_form(k, 1..k + 1, o))),
        )
        .done(),
        Entry::new("cor12_ffw2", S, "FFW_2 via divisor prefix sums")
            .enumerated("enumeration", single(|o| Ok(enum_ffw(o, 2))))
            .side("closed form", single(|o| Ok(closed(o, ClosedForm::Ffw2))))
            .done(),
        Entry::new("cor12_ffw3", S, "FFW_3 via floor-weighted divisor sums")
            .enumerated("enumeration", single(|o| Ok(enum_ffw(o, 3))))
            .side("closed form", single(|o| Ok(closed(o, ClosedForm::Ffw3))))
            .done(),
        Entry::new("thm13", S, "FFW_k as a double alternating sum")
            .params("k", &K5)
            .enumerated("enumeration", per(&K5, |k, o| Ok(enum_ffw(o, k))))
            .side("double sum", per(&K5, thm13_double_sum))
            .done(),
        Entry::new("remark", S, "double sum and divisor form of FFW_k agree")
            .params("k", &K5)
            .side("double sum", per(&K5, thm13_double_sum))
            .side(
                "divisor form",
                per(&K5, |k, o| Ok(divisor_form(k, 0..k, o))),
            )
            .enumerated("enumeration", per(&K5, |k, o| Ok(enum_ffw(o, k))))
            .done(),
    ]
}

/// `(-1)^(len-1)`
fn sign_m1(len: usize) -> i64 {
    if len % 2 == 1 {
        1
    } else {
        -1
    }
}

fn closed(order: usize, which: ClosedForm) -> Series {
    let t = closed_form_table(order - 1, which);
    let mut s = Series::zero(order);
    for (n, v) in t.into_iter().enumerate().skip(1) {
        s.set_coeff(n, v.into());
    }
    s
}

/// `sum_{n>=1} n q^n (q^(n+1);q)_inf`
fn uchimura_tails(order: usize) -> Series {
    let tails = Tails::new(order);
    let mut acc = Series::zero(order);
    for n in 1..order {
        acc.add_assign_ref(&tails.get(n + 1).mul_q_pow(n).scale_i64(n as i64));
    }
    acc
}

/// `sum_{n>=1} (-1)^(n-1) q^(n(n+1)/2) / ((1-q^n)(q;q)_n)`
fn uchimura_alternating(order: usize) -> Series {
    let mut acc = Series::zero(order);
    for (n, inv) in inv_qq_prefix(order).enumerate().skip(1) {
        if tri(n) >= order {
            break;
        }
        let t = inv
            .mul_q_pow(tri(n))
            .div_binomial(&one(), 0, n)
            .expect("n >= 1");
        acc.add_assign_ref(&t.scale(&sign_pow(n as i64 - 1)));
    }
    acc
}

/// `sum_{n>=1} (-1)^(n-1) c^n q^(n(n+1)/2) / ((1-q^n)(cq;q)_n)`
fn ramanujan_alternating(order: usize) -> Built {
    let mut acc = Series::zero(order);
    let mut inv_cq = Series::one(order);
    let mut n = 1;
    while tri(n) < order {
        inv_cq = inv_cq.div_binomial(&one(), 1, n)?;
        let t = inv_cq
            .mul_q_pow(tri(n))
            .mul_z_pow(n)
            .div_binomial(&one(), 0, n)?;
        acc.add_assign_ref(&t.scale(&sign_pow(n as i64 - 1)));
        n += 1;
    }
    Ok(acc)
}

/// `sum_{n>=1} c^n q^n / (1-q^n)`
fn ramanujan_lambert(order: usize) -> Built {
    let mut acc = Series::zero(order);
    for n in 1..order {
        acc.add_assign_ref(&geometric(0, n, order)?.mul_q_pow(n).mul_z_pow(n));
    }
    Ok(acc)
}

/// Generating function of the AGL statistic four ways. The printed tail
/// sum starts at `n = 1` and misses the `n = 0` term `1 - (q;q)_inf`.
fn agl(printed: bool) -> IdentityCheck {
    let lo = usize::from(printed);
    let e = if printed {
        Entry::new("agl_printed", S, "AGL tail sum started at n=1").printed()
    } else {
        Entry::new(
            "agl",
            S,
            "AGL statistic: tail sum, alternating sum and closed form",
        )
    };
    e.enumerated(
        "enumeration",
        single(|o| Ok(enum_stat(o, StatVariant::AglZ))),
    )
    .side("tail sum", single(move |o| Ok(agl_tails(lo, o))))
    .side("alternating sum", single(agl_alternating))
    .side("closed form", single(agl_closed))
    .done()
}

/// `sum_{n>=lo} z^n (1 - (q^(n+1);q)_inf)`
fn agl_tails(lo: usize, order: usize) -> Series {
    let tails = Tails::new(order);
    let mut acc = Series::zero(order);
    for n in lo..order {
        acc.sub_assign_ref(&tails.minus_one(n + 1).mul_z_pow(n));
    }
    acc
}

/// `sum_{n>=1} (-1)^(n-1) q^(n(n+1)/2) / ((1-zq^n)(q;q)_n)`
fn agl_alternating(order: usize) -> Built {
    let mut acc = Series::zero(order);
    for (n, inv) in inv_qq_prefix(order).enumerate().skip(1) {
        if tri(n) >= order {
            break;
        }
        let t = inv.mul_q_pow(tri(n)).div_binomial(&one(), 1, n)?;
        acc.add_assign_ref(&t.scale(&sign_pow(n as i64 - 1)));
    }
    Ok(acc)
}

/// `(1 - (q;q)_inf / (zq;q)_inf) / (1 - z)`
fn agl_closed(order: usize) -> Built {
    let ratio =
        qpoch_inf(1, order) * inv_pochhammer(&PochSpec::zq_shift(1, Count::Infinite), order)?;
    (Series::one(order) - ratio).exact_div_one_minus_z()
}

/// The `c`-weighted smallest-part sum with `c` kept symbolic. The Lambert side holds with
/// `(c;q)_n`; the printed `(-c;q)_n` flips the sign of the `c`-linear term.
fn weighted_c(printed: bool) -> IdentityCheck {
    let e = if printed {
        Entry::new("gup_c_printed", S, "Lambert side written with (-c;q)_n").printed()
    } else {
        Entry::new(
            "gup_c",
            S,
            "(-c)^# weighted smallest parts: alternating and Lambert sums",
        )
    };
    e.enumerated(
        "enumeration",
        single(|o| Ok(enum_stat(o, StatVariant::FfwC))),
    )
    .side("alternating sum", single(weighted_c_alternating))
    .side(
        "Lambert sum",
        single(move |o| weighted_c_lambert(printed, o)),
    )
    .done()
}

/// `sum_{n>=1} (-c)^n q^(n(n+1)/2) / ((1-q^n)(q;q)_n)`
fn weighted_c_alternating(order: usize) -> Built {
    let mut acc = Series::zero(order);
    for (n, inv) in inv_qq_prefix(order).enumerate().skip(1) {
        if tri(n) >= order {
            break;
        }
        let t = inv
            .mul_q_pow(tri(n))
            .mul_z_pow(n)
            .div_binomial(&one(), 0, n)?;
        acc.add_assign_ref(&t.scale(&sign_pow(n as i64)));
    }
    Ok(acc)
}

/// `sum_{n>=1} ((±c;q)_n - 1) q^n / (1-q^n)`
fn weighted_c_lambert(negative: bool, order: usize) -> Built {
    let mut acc = Series::zero(order);
    for n in 1..order {
        let poch = pochhammer(&PochSpec::new(negative, 1, 0, 1, Count::Finite(n)), order)?;
        let t = (poch - Series::one(order))
            .mul_q_pow(n)
            .div_binomial(&one(), 0, n)?;
        acc.add_assign_ref(&t);
    }
    Ok(acc)
}

/// Dilcher's ordinary-binomial analogue. The alternating middle sum holds
/// with prefactor `q^(-k(k-1)/2)`; the printed `q^(+k(k-1)/2)` is off by
/// `q^(k(k-1))`.
fn dilcher(printed: bool) -> IdentityCheck {
    let e = if printed {
        Entry::new(
            "dilcher_printed",
            S,
            "middle sum with prefactor q^(k(k-1)/2)",
        )
        .printed()
    } else {
        Entry::new(
            "dilcher",
            S,
            "binomial tail sum, alternating sum and nested Lambert sums",
        )
    };
    e.params("k", &K4)
        .enumerated(
            "enumeration",
            per(&K4, |k, o| {
                Ok(enum_weight(o, move |p| {
                    sign_m1(p.len()) * binomial(p[0], k)
                }))
            }),
        )
        .side(
            "binomial tail sum",
            per(&K4, |k, o| Ok(dilcher_tails(k, o))),
        )
        .side(
            "alternating sum",
            per(&K4, move |k, o| dilcher_alternating(k, printed, o)),
        )
        .side(
            "nested Lambert sums",
            per(&K4, |k, o| Ok(nested_lambert(k, o))),
        )
        .done()
}

fn binomial(n: usize, k: usize) -> i64 {
    if n < k {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// `sum_{n>=k} C(n,k) q^n (q^(n+1);q)_inf`
fn dilcher_tails(k: usize, order: usize) -> Series {
    let tails = Tails::new(order);
    let mut acc = Series::zero(order);
    for n in k..order {
        acc.add_assign_ref(&tails.get(n + 1).mul_q_pow(n).scale_i64(binomial(n, k)));
    }
    acc
}

/// `q^(∓k(k-1)/2) sum_{m>=1} (-1)^(m-1) q^((m+k)(m+k-1)/2) / ((q;q)_m (1-q^m)^k)`
fn dilcher_alternating(k: usize, printed: bool, order: usize) -> Built {
    let mut acc = Series::zero(order);
    for (m, inv) in inv_qq_prefix(order).enumerate().skip(1) {
        let base = (m + k) * (m + k - 1) / 2;
        let e = if printed {
            base + k * (k - 1) / 2
        } else {
            base - k * (k - 1) / 2
        };
        if e >= order {
            break;
        }
        let mut t = inv.mul_q_pow(e);
        for _ in 0..k {
            t = t.div_binomial(&one(), 0, m)?;
        }
        acc.add_assign_ref(&t.scale(&sign_pow(m as i64 - 1)));
    }
    Ok(acc)
}

/// `sum_{j_1>=1} L(j_1) sum_{j_2<=j_1} L(j_2) ... sum_{j_k<=j_(k-1)} L(j_k)`
/// with `L(j) = q^j/(1-q^j)`, by carrying prefix sums one level at a time.
fn nested_lambert(k: usize, order: usize) -> Series {
    let lam = |j: usize| {
        Series::one(order)
            .mul_q_pow(j)
            .div_binomial(&one(), 0, j)
            .expect("j >= 1")
    };
    // level[j] = L(j) * sum_{i <= j} previous[i]
    let mut level: Vec<Series> = (1..order).map(lam).collect();
    for _ in 1..k {
        let mut prefix = Series::zero(order);
        let mut next = Vec::with_capacity(level.len());
        for (idx, cur) in level.iter().enumerate() {
            prefix.add_assign_ref(cur);
            let j = idx + 1;
            // L(j) * prefix, as a shift and a binomial division
            next.push(
                prefix
                    .mul_q_pow(j)
                    .div_binomial(&one(), 0, j)
                    .expect("j >= 1"),
            );
        }
        level = next;
    }
    let mut acc = Series::zero(order);
    for s in &level {
        acc.add_assign_ref(s);
    }
    acc
}

/// `(-1)^k q^(k(k-1)/2) sum_{n>=k} [n-1, k-1] n q^n (q^(n+1);q)_inf`
pub(super) fn ffw_tail_sum(k: usize, order: usize) -> Series {
    let tails = Tails::new(order);
    let mut acc = Series::zero(order);
    let shift = k * (k - 1) / 2;
    for n in k..order {
        if n + shift >= order {
            break;
        }
        let t = (q_binomial(n - 1, k - 1, order) * tails.get(n + 1)).mul_q_pow(n + shift);
        acc.add_assign_ref(&t.scale_i64(n as i64));
    }
    acc.scale(&sign_pow(k as i64))
}

/// `sum_{j=0}^{k-1} sum_{m>=k} (-1)^m q^(m(m+1)/2) / ((q;q)_m (1-q^(m-j)))`
fn thm13_double_sum(k: usize, order: usize) -> Built {
    let mut acc = Series::zero(order);
    for (m, inv) in inv_qq_prefix(order).enumerate().skip(k) {
        if tri(m) >= order {
            break;
        }
        let base = inv.mul_q_pow(tri(m)).scale(&sign_pow(m as i64));
        for j in 0..k {
            acc.add_assign_ref(&base.div_binomial(&one(), 0, m - j)?);
        }
    }
    Ok(acc)
}
