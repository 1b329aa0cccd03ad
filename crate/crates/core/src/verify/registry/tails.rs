use crate::fps::{q_binomial, Series};
use crate::partitions::{largest_sum_fixed_len, StatVariant};
use crate::verify::build::{
    divisor_form, enum_ffw, enum_stat, enum_weight, from_i64s, minus_one, one, per, sgn,
    sieve_divisors, single, Built, Tails,
};
use crate::verify::{IdentityCheck, Suite};

use super::Entry;

const S: Suite = Suite::Tails;
const K1: [usize; 4] = [1, 2, 3, 4];
const K2: [usize; 3] = [2, 3, 4];
const K23: [usize; 2] = [2, 3];

pub fn entries() -> Vec<IdentityCheck> {
    vec![
        Entry::new(
            "ztails",
            S,
            "(-1)^# (1 + z + ... + z^(s_k - s_(k-1) - 1)) as a sum of tails",
        )
        .params("k", &K2)
        .enumerated(
            "enumeration",
            per(&K2, |k, o| Ok(enum_stat(o, StatVariant::Tails(k)))),
        )
        .side("sum of tails", per(&K2, |k, o| Ok(z_tails(k, o))))
        .done(),
        Entry::new(
            "minus",
            S,
            "(-1)^# (s_k - s_(k-1)) as a q-binomial sum of tails",
        )
        .params("k", &K1)
        .enumerated(
            "enumeration",
            per(&K1, |k, o| Ok(enum_stat(o, StatVariant::Diff(k)))),
        )
        .side("sum of tails", per(&K1, |k, o| Ok(diff_tails(k, o))))
        .done(),
        Entry::new("uchimura_tails", S, "(-1)^# s as the plain sum of tails")
            .enumerated(
                "enumeration",
                single(|o| Ok(enum_weight(o, |p| sgn(p.len()) * p[0] as i64))),
            )
            .side("sum of tails", single(|o| Ok(tails_from(1, o))))
            .side("minus divisor sieve", single(|o| Ok(-sieve_divisors(o, 1))))
            .done(),
        Entry::new(
            "recursive",
            S,
            "FFW_k from FFW_(k-1), a sum of tails and a largest-part sum",
        )
        .params("k", &K2)
        .enumerated("enumeration", per(&K2, |k, o| Ok(enum_ffw(o, k))))
        .side("recursion", per(&K2, |k, o| Ok(recursion(k, o))))
        .enumerated(
            "combinatorial split",
            per(&K2, |k, o| Ok(combinatorial_split(k, o))),
        )
        .done(),
        Entry::new(
            "thm44_corrected",
            S,
            "sum of tails over l = 2..k with inner sums from n = l",
        )
        .printed()
        .params("k", &K2)
        .enumerated("enumeration", per(&K2, |k, o| Ok(enum_ffw(o, k))))
        .side("sum over l", per(&K2, |k, o| Ok(thm44_range(k, o))))
        .done(),
        Entry::new(
            "thm44_printed",
            S,
            "sum of tails over all l >= 2 with inner sums from n = k",
        )
        .printed()
        .params("k", &K2)
        .enumerated("enumeration", per(&K2, |k, o| Ok(enum_ffw(o, k))))
        .side("sum over l", per(&K2, |k, o| Ok(thm44_unbounded(k, o))))
        .done(),
        Entry::new(
            "thm44_telescoped",
            S,
            "FFW_k as -D(q) plus the telescoped recursion",
        )
        .params("k", &K2)
        .enumerated("enumeration", per(&K2, |k, o| Ok(enum_ffw(o, k))))
        .side("telescoped sum", per(&K2, |k, o| Ok(telescoped(k, o))))
        .done(),
        Entry::new("zneg1_k2", S, "odd gap s_2 - s_1, three equivalent sums")
            .enumerated(
                "enumeration",
                single(|o| Ok(enum_weight(o, |p| odd_gap(p, 2)))),
            )
            .side("double sum", single(|o| Ok(zneg1_k2_double(o, true))))
            .side("interchanged", single(|o| Ok(zneg1_k2_swapped(o, true))))
            .side("closed inner sum", single(|o| zneg1_k2_closed(o, true)))
            .done(),
        Entry::new(
            "zneg1_k2_printed",
            S,
            "odd gap s_2 - s_1 without the (-1)^m factor",
        )
        .printed()
        .enumerated(
            "enumeration",
            single(|o| Ok(enum_weight(o, |p| odd_gap(p, 2)))),
        )
        .side("double sum", single(|o| Ok(zneg1_k2_double(o, false))))
        .side("interchanged", single(|o| Ok(zneg1_k2_swapped(o, false))))
        .side("closed inner sum", single(|o| zneg1_k2_closed(o, false)))
        .done(),
        Entry::new(
            "zneg1_gen",
            S,
            "odd gap s_k - s_(k-1) as a signed sum of tails",
        )
        .params("k", &K23)
        .enumerated(
            "enumeration",
            per(&K23, |k, o| Ok(enum_weight(o, |p| odd_gap(p, k)))),
        )
        .side(
            "sum of tails",
            per(&K23, |k, o| Ok(zneg1_general(k, o, true))),
        )
        .done(),
        Entry::new(
            "zneg1_gen_printed",
            S,
            "odd gap with inner sign (-1)^n and outer (-1)^k",
        )
        .printed()
        .params("k", &K23)
        .enumerated(
            "enumeration",
            per(&K23, |k, o| Ok(enum_weight(o, |p| odd_gap(p, k)))),
        )
        .side(
            "sum of tails",
            per(&K23, |k, o| Ok(zneg1_general(k, o, false))),
        )
        .done(),
    ]
}

/// `(-1)^#` if `# >= k` and `s_k - s_(k-1)` is odd, else 0.
fn odd_gap(parts: &[usize], k: usize) -> i64 {
    if parts.len() < k {
        return 0;
    }
    let prev = if k >= 2 { parts[k - 2] } else { 0 };
    if (parts[k - 1] - prev) % 2 == 1 {
        sgn(parts.len())
    } else {
        0
    }
}

/// `sum_{n>=lo} ((q^n;q)_inf - 1)`
fn tails_from(lo: usize, order: usize) -> Series {
    let tails = Tails::new(order);
    let mut acc = Series::zero(order);
    for n in lo.max(1)..order {
        acc.add_assign_ref(&tails.minus_one(n));
    }
    acc
}

/// `q^(j(j+1)/2) sum_{n>=lo} [n-1, j] ((q^n;q)_inf - 1)`
fn binomial_tails(j: usize, lo: usize, order: usize) -> Series {
    let tails = Tails::new(order);
    let shift = j * (j + 1) / 2;
    let mut acc = Series::zero(order);
    for n in lo.max(j + 1)..order {
        if n + shift >= order {
            break;
        }
        acc.add_assign_ref(&(q_binomial(n - 1, j, order) * tails.minus_one(n)));
    }
    acc.mul_q_pow(shift)
}

/// `q^(j(j+1)/2) sum_{n>=lo} [n-1, j] n q^n`, the generating function of the
/// largest part over partitions into exactly `j + 1` distinct parts.
fn binomial_weighted(j: usize, lo: usize, order: usize) -> Series {
    let shift = j * (j + 1) / 2;
    let mut acc = Series::zero(order);
    for n in lo.max(j + 1)..order {
        if n + shift >= order {
            break;
        }
        acc.add_assign_ref(&q_binomial(n - 1, j, order).mul_q_pow(n).scale_i64(n as i64));
    }
    acc.mul_q_pow(shift)
}

/// `(-1)^(k-1) q^((k-1)(k-2)/2) sum_{m>=k-1} q^m [m-1, k-2] U_m`, where
/// `U_m = sum_{n>=m+1} z^(n-m-1) ((q^n;q)_inf - 1)`.
fn z_tails(k: usize, order: usize) -> Series {
    let tails = Tails::new(order);
    // U_m = ((q^(m+1);q)_inf - 1) + z U_(m+1), and U_m = 0 once m + 1 >= order
    let mut u = vec![Series::zero(order); order + 1];
    for m in (0..order).rev() {
        let mut next = u[m + 1].mul_z_pow(1);
        next.add_assign_ref(&tails.minus_one(m + 1));
        u[m] = next;
    }
    let shift = (k - 1) * (k - 2) / 2;
    let mut acc = Series::zero(order);
    for m in (k - 1)..order {
        if m + shift >= order {
            break;
        }
        acc.add_assign_ref(&(&q_binomial(m - 1, k - 2, order) * &u[m]).mul_q_pow(m));
    }
    acc.mul_q_pow(shift).scale_i64(sgn(k - 1))
}

/// `(-1)^(k-1) q^(k(k-1)/2) sum_{n>=k} [n-1, k-1] ((q^n;q)_inf - 1)`
fn diff_tails(k: usize, order: usize) -> Series {
    binomial_tails(k - 1, k, order).scale_i64(sgn(k - 1))
}

/// `FFW_(k-1)` (divisor form) plus the gap sum minus the exactly-`(k-1)`-parts term.
fn recursion(k: usize, order: usize) -> Series {
    let mut acc = divisor_form(k - 1, 0..k - 1, order);
    acc.add_assign_ref(&diff_tails(k, order));
    acc.sub_assign_ref(&binomial_weighted(k - 2, k - 1, order).scale_i64(sgn(k - 1)));
    acc
}

/// The same split computed from partition counts alone.
fn combinatorial_split(k: usize, order: usize) -> Series {
    let mut acc = enum_ffw(order, k - 1);
    acc.add_assign_ref(&enum_stat(order, StatVariant::Diff(k)));
    let largest = from_i64s(order, |n| largest_sum_fixed_len(n, k - 1) as i64);
    acc.sub_assign_ref(&largest.scale_i64(sgn(k - 1)));
    acc
}

/// `sum_{l=2}^k (-1)^(l-1) (A_l - B_l) + sum_{n>=1} d(n) q^n`, with both inner
/// sums started at `n = l`.
fn thm44_range(k: usize, order: usize) -> Series {
    let mut acc = sieve_divisors(order, 1);
    for l in 2..=k {
        let t = &binomial_tails(l - 1, l, order) - &binomial_weighted(l - 2, l, order);
        acc.add_assign_ref(&t.scale_i64(sgn(l - 1)));
    }
    acc
}

/// `sum_{l>=2} (-1)^(l(l-1)/2) (A_l - B_l) + sum_{n>=k} d(n) q^n`, with both
/// inner sums started at `n = k`.
fn thm44_unbounded(k: usize, order: usize) -> Series {
    let d = sieve_divisors(order, 1);
    let mut acc = Series::zero(order);
    for n in k..order {
        acc.set_coeff(n, d.coeff(n).clone());
    }
    let mut l = 2;
    while (l - 1) * (l - 2) / 2 < order {
        let t = &binomial_tails(l - 1, k, order) - &binomial_weighted(l - 2, k, order);
        acc.add_assign_ref(&t.scale_i64(sgn(l * (l - 1) / 2)));
        l += 1;
    }
    acc
}

/// `-D(q) + sum_{l=2}^k (-1)^(l-1) (A_l from n = l  -  B_l from n = l-1)`
fn telescoped(k: usize, order: usize) -> Series {
    let mut acc = -sieve_divisors(order, 1);
    for l in 2..=k {
        let t = &binomial_tails(l - 1, l, order) - &binomial_weighted(l - 2, l - 1, order);
        acc.add_assign_ref(&t.scale_i64(sgn(l - 1)));
    }
    acc
}

/// `sum_{n>=m+1} (-1)^n ((q^n;q)_inf - 1)` for every `m`, by suffix sums.
fn signed_suffixes(order: usize) -> Vec<Series> {
    let tails = Tails::new(order);
    let mut out = vec![Series::zero(order); order + 1];
    for m in (0..order).rev() {
        let mut s = out[m + 1].clone();
        if m + 1 < order {
            s.add_assign_ref(&tails.minus_one(m + 1).scale_i64(sgn(m + 1)));
        }
        out[m] = s;
    }
    out
}

/// `sum_{m>=1} (±q)^m sum_{n>=m+1} (-1)^n ((q^n;q)_inf - 1)`; the minus sign
/// is the one that matches the enumeration.
fn zneg1_k2_double(order: usize, signed: bool) -> Series {
    let suffix = signed_suffixes(order);
    let mut acc = Series::zero(order);
    for (m, s) in suffix.iter().enumerate().take(order).skip(1) {
        let w = if signed { sgn(m) } else { 1 };
        acc.add_assign_ref(&s.mul_q_pow(m).scale_i64(w));
    }
    acc
}

/// `sum_{n>=2} (-1)^n ((q^n;q)_inf - 1) sum_{m=1}^{n-1} (±q)^m`
fn zneg1_k2_swapped(order: usize, signed: bool) -> Series {
    let tails = Tails::new(order);
    let mut acc = Series::zero(order);
    for n in 2..order {
        let mut inner = Series::zero(order);
        for m in 1..n {
            let w = if signed { sgn(m) } else { 1 };
            inner.add_to_coeff(m, &w.into());
        }
        acc.add_assign_ref(&(inner * tails.minus_one(n)).scale_i64(sgn(n)));
    }
    acc
}

/// `(±q)/(1 ∓ q) sum_{n>=2} (-1)^n (1 - (±q)^(n-1)) ((q^n;q)_inf - 1)`, i.e.
/// `-q/(1+q) ...` with the sign and `q/(1-q) ...` without.
fn zneg1_k2_closed(order: usize, signed: bool) -> Built {
    let tails = Tails::new(order);
    let mut acc = Series::zero(order);
    for n in 2..order {
        // 1 - (±1)^(n-1) q^(n-1)
        let c = if signed { -sgn(n - 1) } else { -1 };
        let t = tails.minus_one(n).mul_binomial(&c.into(), 0, n - 1);
        acc.add_assign_ref(&t.scale_i64(sgn(n)));
    }
    let acc = acc.mul_q_pow(1);
    if signed {
        Ok(-acc.div_binomial(&minus_one(), 0, 1)?)
    } else {
        acc.div_binomial(&one(), 0, 1)
    }
}

/// Corrected: `(-1)^(k-1) q^((k-1)(k-2)/2) sum_m q^m [m-1, k-2] sum_{n>=m+1} (-1)^(n-m-1) (T_n - 1)`.
/// Printed: `(-1)^k q^((k-1)(k-2)/2) sum_m q^m [m-1, k-2] sum_{n>=m+1} (-1)^n (T_n - 1)`.
fn zneg1_general(k: usize, order: usize, corrected: bool) -> Series {
    let suffix = signed_suffixes(order);
    let shift = (k - 1) * (k - 2) / 2;
    let mut acc = Series::zero(order);
    for m in (k - 1)..order {
        if m + shift >= order {
            break;
        }
        // suffix[m] carries (-1)^n; (-1)^(n-m-1) = (-1)^n (-1)^(m+1)
        let w = if corrected { sgn(m + 1) } else { 1 };
        acc.add_assign_ref(
            &(&q_binomial(m - 1, k - 2, order) * &suffix[m])
                .mul_q_pow(m)
                .scale_i64(w),
        );
    }
    let outer = if corrected { sgn(k - 1) } else { sgn(k) };
    acc.mul_q_pow(shift).scale_i64(outer)
}
