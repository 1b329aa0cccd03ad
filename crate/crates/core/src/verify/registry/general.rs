use crate::fps::{
    inv_pochhammer, inv_qpoch, pochhammer, qpoch_inf, sign_pow, theta, Count, PochSpec, Series,
    ThetaKind,
};
use crate::partitions::{
    closed_form_table, isqrt, parity_sign_sums, ClosedForm, Parity, SignConvention, StatVariant,
};
use crate::verify::build::{
    enum_stat, enum_weight, from_i64s, gen1_sum, inv_qq_prefix, minus_one, one, per, sgn, single,
    tri, Built, Tails,
};
use crate::verify::{IdentityCheck, Suite};

use super::Entry;

const S: Suite = Suite::General;
const K4: [usize; 4] = [1, 2, 3, 4];
const K3: [usize; 3] = [1, 2, 3];
const M4: [u32; 4] = [0, 1, 2, 3];

pub fn entries() -> Vec<IdentityCheck> {
    vec![
        Entry::new(
            "gen1",
            S,
            "(-1)^# z^(s_k) over at least k parts: single-sum form",
        )
        .params("k", &K4)
        .enumerated(
            "enumeration, # >= k",
            per(&K4, |k, o| Ok(enum_at_least(k, o))),
        )
        .side("single sum", per(&K4, gen1_sum))
        .done(),
        Entry::new(
            "gen1_printed",
            S,
            "single-sum form against all of D(n), s_k = 0 included",
        )
        .printed()
        .params("k", &K3)
        .enumerated(
            "enumeration, all of D(n)",
            per(&K3, |k, o| Ok(enum_stat(o, StatVariant::FfwKz(k)))),
        )
        .side("single sum", per(&K3, gen1_sum))
        .done(),
        Entry::new(
            "gen2",
            S,
            "(-1)^# z^(s_k) over at least k parts: finite sum of tails of 1/(zq^(i+1);q)",
        )
        .params("k", &K4)
        .enumerated(
            "enumeration, # >= k",
            per(&K4, |k, o| Ok(enum_at_least(k, o))),
        )
        .side("finite sum", per(&K4, gen2_sum))
        .side("single sum", per(&K4, gen1_sum))
        .done(),
        Entry::new("coro1", S, "(-1)^(# - s) over D(n)")
            .enumerated(
                "enumeration",
                single(|o| Ok(enum_weight(o, |p| sgn(p.len() + p[0])))),
            )
            .side("single sum", single(coro1_sum))
            .side("products", single(coro1_products))
            .done(),
        alladi(false),
        alladi(true),
        Entry::new("thm14", S, "(-1)^# over D(n) with even smallest part")
            .side("closed form", single(|o| Ok(closed(o, ClosedForm::Thm14))))
            .side(
                "parity recursion",
                single(|o| Ok(parity(o, Parity::Even, SignConvention::Sharp))),
            )
            .enumerated(
                "enumeration",
                single(|o| {
                    Ok(enum_stat(
                        o,
                        StatVariant::Parity(Parity::Even, SignConvention::Sharp),
                    ))
                }),
            )
            .done(),
        Entry::new(
            "thm34_printed",
            S,
            "even smallest part with the square/pentagonal labels swapped",
        )
        .printed()
        .side(
            "closed form",
            single(|o| Ok(closed(o, ClosedForm::Thm34Printed))),
        )
        .side(
            "parity recursion",
            single(|o| Ok(parity(o, Parity::Even, SignConvention::Sharp))),
        )
        .done(),
        Entry::new(
            "z1",
            S,
            "(-1)^# over distinct partitions with at least two parts",
        )
        .enumerated(
            "enumeration",
            single(|o| Ok(enum_weight(o, |p| at_least_two(p, sgn(p.len()))))),
        )
        .side("single sum", single(|o| Ok(z1_sum(o))))
        .side("products", single(z1_products))
        .side("coefficients", single(|o| Ok(z1_coefficients(o))))
        .done(),
        Entry::new("coro2222", S, "(-1)^(# - s_2) over at least two parts")
            .enumerated("enumeration", single(|o| Ok(enum_weight(o, qp_weight))))
            .side("single sum", single(coro2222_sum))
            .side("products", single(coro2222_products))
            .done(),
        Entry::new(
            "qp",
            S,
            "(-1)^(# - s_2) over at least two parts: largest square below n",
        )
        .side("closed form", single(|o| Ok(closed(o, ClosedForm::Thm37))))
        .enumerated("enumeration", single(|o| Ok(enum_weight(o, qp_weight))))
        .side("theta difference", single(qp_thetas))
        .done(),
        Entry::new("genth", S, "(-1)^# s_k z^(s_k - 1): both derivative forms")
            .params("k", &K3)
            .enumerated(
                "enumeration / z",
                per(&K3, |k, o| genth_lhs(k, o)?.div_z_pow(1)),
            )
            .side(
                "minus the double sum",
                per(&K3, |k, o| Ok(-genth_double_sum(k, o)?)),
            )
            .side("finite sum", per(&K3, genth_finite_sum))
            .done(),
        Entry::new(
            "genth_printed",
            S,
            "derivative forms against (-1)^# s_k z^(s_k)",
        )
        .printed()
        .params("k", &K3)
        .enumerated("enumeration", per(&K3, genth_lhs))
        .side("double sum", per(&K3, genth_double_sum))
        .side("finite sum", per(&K3, genth_finite_sum))
        .done(),
        Entry::new(
            "coro39",
            S,
            "(-1)^(# - 1) s z^s: tails, squared denominators, Lambert-type sum",
        )
        .enumerated(
            "enumeration",
            single(|o| Ok(-enum_stat(o, StatVariant::Power(1)))),
        )
        .side("tail sum", single(|o| Ok(weighted_tails(1, o))))
        .side(
            "z times single sum",
            single(|o| Ok(coro39_sum(o)?.mul_z_pow(1))),
        )
        .side(
            "z times product sum",
            single(|o| Ok(coro39_products(o)?.mul_z_pow(1))),
        )
        .done(),
        Entry::new(
            "coro39_printed",
            S,
            "(-1)^# s z^s against the undecorated right-hand forms",
        )
        .printed()
        .enumerated(
            "enumeration",
            single(|o| Ok(enum_stat(o, StatVariant::Power(1)))),
        )
        .side("tail sum", single(|o| Ok(weighted_tails(1, o))))
        .side("single sum", single(coro39_sum))
        .side("product sum", single(coro39_products))
        .done(),
        Entry::new("coro310", S, "(-1)^(# + s) s over D(n)")
            .enumerated(
                "enumeration",
                single(|o| Ok(enum_weight(o, |p| sgn(p.len() + p[0]) * p[0] as i64))),
            )
            .side("single sum", single(coro310_sum))
            .side("product sum", single(coro310_products))
            .done(),
        Entry::new(
            "m_mc",
            S,
            "sum n^m z^n q^n (q^(n+1);q)_inf as minus the m-th z-derivative",
        )
        .params("m", &M4)
        .side("tail sum", per(&M4, |m, o| Ok(weighted_tails(m, o))))
        .side(
            "minus derivative of the k=1 sum",
            per(&M4, |m, o| Ok(-gen1_sum(1, o)?.dz_pow(m as usize))),
        )
        .enumerated(
            "minus enumeration",
            per(&M4, |m, o| Ok(-enum_stat(o, StatVariant::Power(m)))),
        )
        .done(),
        Entry::new(
            "m_mc_printed",
            S,
            "tail sum equated to the derivative without the sign",
        )
        .printed()
        .params("m", &M4)
        .side("tail sum", per(&M4, |m, o| Ok(weighted_tails(m, o))))
        .side(
            "derivative of the k=1 sum",
            per(&M4, |m, o| Ok(gen1_sum(1, o)?.dz_pow(m as usize))),
        )
        .done(),
    ]
}

fn closed(order: usize, which: ClosedForm) -> Series {
    let t = closed_form_table(order - 1, which);
    let mut s = Series::zero(order);
    for (n, v) in t.into_iter().enumerate().skip(1) {
        s.set_coeff(n, v.into());
    }
    s
}

fn parity(order: usize, p: Parity, conv: SignConvention) -> Series {
    let t = parity_sign_sums(order - 1, p, conv);
    from_i64s(order, |n| t[n])
}

fn at_least_two(parts: &[usize], w: i64) -> i64 {
    if parts.len() >= 2 {
        w
    } else {
        0
    }
}

fn qp_weight(parts: &[usize]) -> i64 {
    match parts.get(1) {
        Some(&s2) => sgn(parts.len() + s2),
        None => 0,
    }
}

/// `FFW_k(z, n)` restricted to partitions with at least `k` parts, i.e.
/// the enumeration with its `z^0` coefficient removed.
fn enum_at_least(k: usize, order: usize) -> Series {
    let all = enum_stat(order, StatVariant::FfwKz(k));
    &all - &all.subst_z_i64(0)
}

/// `(q;q)_inf sum_{i<k} (-1)^(k+i) q^((k-i)(k-i-1)/2) / ((q;q)_i (q;q)_(k-i-1))
///  (1/(zq^(i+1);q)_inf - sum_{j<k} (zq^(i+1))^j / (q;q)_j)`
fn gen2_sum(k: usize, order: usize) -> Built {
    let mut acc = Series::zero(order);
    for i in 0..k {
        let mut inner = inv_pochhammer(&PochSpec::zq_shift(i + 1, Count::Infinite), order)?;
        for (j, inv) in inv_qq_prefix(order).enumerate().take(k) {
            inner.sub_assign_ref(&inv.mul_q_pow((i + 1) * j).mul_z_pow(j));
        }
        let e = (k - i) * (k - i - 1) / 2;
        let t = (inner * inv_qpoch(1, i, order) * inv_qpoch(1, k - i - 1, order)).mul_q_pow(e);
        acc.add_assign_ref(&t.scale(&sign_pow((k + i) as i64)));
    }
    Ok(qpoch_inf(1, order) * acc)
}

/// `sum_{n>=1} (-1)^(n-1) q^(n(n+1)/2) / ((q;q)_(n-1) (1+q^n))`
fn coro1_sum(order: usize) -> Built {
    let mut acc = Series::zero(order);
    for (m, inv) in inv_qq_prefix(order).enumerate() {
        let n = m + 1;
        if tri(n) >= order {
            break;
        }
        let t = inv.mul_q_pow(tri(n)).div_binomial(&minus_one(), 0, n)?;
        acc.add_assign_ref(&t.scale(&sign_pow(m as i64)));
    }
    Ok(acc)
}

fn inv_minus_q(order: usize) -> Built {
    inv_pochhammer(&PochSpec::new(true, 0, 1, 1, Count::Infinite), order)
}

/// `(q;q)_inf - (q;q)_inf / (-q;q)_inf`
fn coro1_products(order: usize) -> Built {
    let qq = qpoch_inf(1, order);
    let ratio = &qq * &inv_minus_q(order)?;
    Ok(qq - ratio)
}

/// Odd smallest part. The sign that matches `(-1)^(j-1)` at `n = j^2` is
/// `(-1)^(# - 1)`; the printed `(-1)^#` gives the negative.
fn alladi(printed: bool) -> IdentityCheck {
    let conv = if printed {
        SignConvention::Sharp
    } else {
        SignConvention::SharpMinusOne
    };
    let e = if printed {
        Entry::new("alladi_printed", S, "odd smallest part weighted by (-1)^#").printed()
    } else {
        Entry::new(
            "alladi",
            S,
            "odd smallest part weighted by (-1)^(# - 1) is supported on squares",
        )
    };
    e.side("squares", single(|o| Ok(square_indicator(o))))
        .side(
            "parity recursion",
            single(move |o| Ok(parity(o, Parity::Odd, conv))),
        )
        .enumerated(
            "enumeration",
            single(move |o| Ok(enum_stat(o, StatVariant::Parity(Parity::Odd, conv)))),
        )
        .done()
}

/// `(-1)^(j-1)` at `n = j^2`, zero elsewhere.
fn square_indicator(order: usize) -> Series {
    from_i64s(order, |n| {
        let r = isqrt(n);
        if r * r == n {
            sgn(r + 1)
        } else {
            0
        }
    })
}

/// `sum_{n>=2} (-1)^n q^(n(n+1)/2) / (q;q)_n`
fn z1_sum(order: usize) -> Series {
    let mut acc = Series::zero(order);
    for (n, inv) in inv_qq_prefix(order).enumerate().skip(2) {
        if tri(n) >= order {
            break;
        }
        acc.add_assign_ref(&inv.mul_q_pow(tri(n)).scale_i64(sgn(n)));
    }
    acc
}

/// `(q;q)_inf - (1 - 2q)/(1 - q)`
fn z1_products(order: usize) -> Built {
    let num = Series::one(order) - Series::monomial(2, 0, 1, order);
    Ok(qpoch_inf(1, order) - num.div_binomial(&one(), 0, 1)?)
}

/// `1 + (-1)^j` at generalized pentagonal `n`, `1` elsewhere.
fn z1_coefficients(order: usize) -> Series {
    let pent = theta(ThetaKind::Pentagonal, order);
    let mut s = Series::zero(order);
    for n in 1..order {
        let mut c = pent.coeff(n).clone();
        c.add_assign_ref(&crate::fps::ZPoly::one());
        s.set_coeff(n, c);
    }
    s
}

/// `sum_{n>=2} (-1)^n q^(n(n+1)/2) / ((q;q)_(n-2) (1+q^(n-1)) (1+q^n))`
fn coro2222_sum(order: usize) -> Built {
    let mut acc = Series::zero(order);
    for (m, inv) in inv_qq_prefix(order).enumerate() {
        let n = m + 2;
        if tri(n) >= order {
            break;
        }
        let t = inv
            .mul_q_pow(tri(n))
            .div_binomial(&minus_one(), 0, n - 1)?
            .div_binomial(&minus_one(), 0, n)?;
        acc.add_assign_ref(&t.scale_i64(sgn(n)));
    }
    Ok(acc)
}

/// `(q;q)_inf - (q;q^2)_inf (q^2;q)_inf`
fn coro2222_products(order: usize) -> Built {
    let odd = pochhammer(&PochSpec::new(false, 0, 1, 2, Count::Infinite), order)?;
    Ok(qpoch_inf(1, order) - odd * qpoch_inf(2, order))
}

/// `sum_j (-1)^j q^(j(3j+1)/2) - (1 + 2 sum_{n>=1} (-1)^n q^(n^2)) / (1-q)`
fn qp_thetas(order: usize) -> Built {
    let sq = theta(ThetaKind::Square, order).div_binomial(&one(), 0, 1)?;
    Ok(theta(ThetaKind::Pentagonal, order) - sq)
}

/// `sum_{pi in D(n)} (-1)^# s_k z^(s_k)`
fn genth_lhs(k: usize, order: usize) -> Built {
    Ok(enum_stat(order, StatVariant::FfwKz(k)).dz())
}

/// `z^(k-1) sum_{j<k} sum_{n>=k} (-1)^(n-1) q^(n(n+1)/2)
///  / ((q;q)_(n-k) (zq^(n-k+1);q)_k (1 - zq^(n-j)))`
fn genth_double_sum(k: usize, order: usize) -> Built {
    let mut acc = Series::zero(order);
    for (m, inv) in inv_qq_prefix(order).enumerate() {
        let n = m + k;
        if tri(n) >= order {
            break;
        }
        let mut base = inv.mul_q_pow(tri(n)).mul_z_pow(k - 1).scale_i64(sgn(n + 1));
        for i in 0..k {
            base = base.div_binomial(&one(), 1, m + 1 + i)?;
        }
        for j in 0..k {
            acc.add_assign_ref(&base.div_binomial(&one(), 1, n - j)?);
        }
    }
    Ok(acc)
}

/// `(-1)^k q^(k(k-1)/2) (q;q)_inf sum_{j<k} (-1)^j q^(j(j+1)/2 - jk) / ((q;q)_j (q;q)_(k-j-1))
///  (1/(zq^(j+1);q)_inf sum_{m>=1} q^(m+j)/(1 - zq^(j+m)) - (1/z) sum_{n<k} n (zq^(j+1))^n / (q;q)_n)`
fn genth_finite_sum(k: usize, order: usize) -> Built {
    let mut acc = Series::zero(order);
    for j in 0..k {
        let mut lambert = Series::zero(order);
        for m in 1..order {
            lambert.add_assign_ref(&Series::one(order).mul_q_pow(m + j).div_binomial(
                &one(),
                1,
                j + m,
            )?);
        }
        let mut inner =
            inv_pochhammer(&PochSpec::zq_shift(j + 1, Count::Infinite), order)? * lambert;
        for (n, inv) in inv_qq_prefix(order).enumerate().take(k).skip(1) {
            inner.sub_assign_ref(
                &inv.mul_q_pow((j + 1) * n)
                    .mul_z_pow(n - 1)
                    .scale_i64(n as i64),
            );
        }
        let e = (k - j) * (k - j - 1) / 2;
        let t = (inner * inv_qpoch(1, j, order) * inv_qpoch(1, k - j - 1, order)).mul_q_pow(e);
        acc.add_assign_ref(&t.scale(&sign_pow((k + j) as i64)));
    }
    Ok(qpoch_inf(1, order) * acc)
}

/// `sum_{n>=1} n^m z^n q^n (q^(n+1);q)_inf`
fn weighted_tails(m: u32, order: usize) -> Series {
    let tails = Tails::new(order);
    let mut acc = Series::zero(order);
    for n in 1..order {
        let w = (n as i64).pow(m);
        acc.add_assign_ref(&tails.get(n + 1).mul_q_pow(n).mul_z_pow(n).scale_i64(w));
    }
    acc
}

/// `sum_{n>=1} (-1)^(n-1) q^(n(n+1)/2) / ((q;q)_(n-1) (1 - c q^n)^2)` with `c = z` or `c = -1`.
fn squared_sum(order: usize, zexp: usize, c: &num_bigint::BigInt) -> Built {
    let mut acc = Series::zero(order);
    for (m, inv) in inv_qq_prefix(order).enumerate() {
        let n = m + 1;
        if tri(n) >= order {
            break;
        }
        let t = inv
            .mul_q_pow(tri(n))
            .div_binomial(c, zexp, n)?
            .div_binomial(c, zexp, n)?;
        acc.add_assign_ref(&t.scale_i64(sgn(m)));
    }
    Ok(acc)
}

fn coro39_sum(order: usize) -> Built {
    squared_sum(order, 1, &one())
}

/// `(q;q)_inf / (zq;q)_inf sum_{m>=1} q^m / (1 - zq^m)`
fn coro39_products(order: usize) -> Built {
    let mut lambert = Series::zero(order);
    for m in 1..order {
        lambert.add_assign_ref(&Series::one(order).mul_q_pow(m).div_binomial(&one(), 1, m)?);
    }
    let ratio =
        qpoch_inf(1, order) * inv_pochhammer(&PochSpec::zq_shift(1, Count::Infinite), order)?;
    Ok(ratio * lambert)
}

fn coro310_sum(order: usize) -> Built {
    squared_sum(order, 0, &minus_one())
}

/// `(q;q)_inf / (-q;q)_inf sum_{n>=1} q^n / (1 + q^n)`
fn coro310_products(order: usize) -> Built {
    let mut lambert = Series::zero(order);
    for n in 1..order {
        lambert.add_assign_ref(&Series::one(order).mul_q_pow(n).div_binomial(
            &minus_one(),
            0,
            n,
        )?);
    }
    Ok(qpoch_inf(1, order) * inv_minus_q(order)? * lambert)
}
