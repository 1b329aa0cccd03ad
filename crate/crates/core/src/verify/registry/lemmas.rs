use crate::fps::{inv_qpoch, inv_qpoch_inf, q_binomial, sign_pow, Series, ZPoly};
use crate::verify::build::{inv_qq_prefix, per, sieve_divisors, Built};
use crate::verify::{IdentityCheck, Suite};

use super::Entry;

const S: Suite = Suite::Lemmas;
const KS: [usize; 4] = [1, 2, 3, 4];

fn nk_params() -> Vec<(usize, usize)> {
    (0..=12)
        .flat_map(|n| KS.iter().map(move |&k| (n, k)))
        .collect()
}

pub fn entries() -> Vec<IdentityCheck> {
    let nk = nk_params();
    vec![
        Entry::new(
            "lemma21",
            S,
            "sum over 0 < n_1 < ... < n_k <= n of q^(n_1+...+n_k)",
        )
        .labelled(nk.iter().map(|(n, k)| format!("n={n}, k={k}")).collect())
        .from(0)
        .counted(
            "subset enumeration",
            per(&nk, |(n, k), o| Ok(subset_sum(n, k, o))),
        )
        .side(
            "q-binomial",
            per(&nk, |(n, k), o| {
                Ok(q_binomial(n, k, o).mul_q_pow(k * (k + 1) / 2))
            }),
        )
        .done(),
        Entry::new(
            "lemma22",
            S,
            "sum n q^(kn)/(q;q)_n against divisors at least k",
        )
        .params("k", &KS)
        .from(0)
        .side("series", per(&KS, |k, o| Ok(lemma22_series(k, o))))
        .counted(
            "divisor sieve",
            per(&KS, |k, o| Ok(inv_qpoch_inf(k, o) * sieve_divisors(o, k))),
        )
        .done(),
        Entry::new(
            "lemma23",
            S,
            "q-binomial weighted sum against divisors at least i",
        )
        .params("k", &KS)
        .from(0)
        .side("series", per(&KS, |k, o| Ok(lemma23_series(k, o))))
        .counted("divisor sieve", per(&KS, lemma23_divisors))
        .done(),
    ]
}

/// Direct enumeration of the `k`-subsets of `1..=n`.
fn subset_sum(n: usize, k: usize, order: usize) -> Series {
    fn go(next: usize, n: usize, left: usize, sum: usize, out: &mut Vec<i64>) {
        if left == 0 {
            if sum < out.len() {
                out[sum] += 1;
            }
            return;
        }
        for p in next..=n {
            go(p + 1, n, left - 1, sum + p, out);
        }
    }
    let mut counts = vec![0i64; order];
    go(1, n, k, 0, &mut counts);
    Series::from_coeffs(counts.into_iter().map(ZPoly::constant).collect())
}

/// `sum_{n>=1} n q^(kn) / (q;q)_n`
fn lemma22_series(k: usize, order: usize) -> Series {
    let mut acc = Series::zero(order);
    for (n, inv) in inv_qq_prefix(order).enumerate().skip(1) {
        if k * n >= order {
            break;
        }
        acc.add_assign_ref(&inv.mul_q_pow(k * n).scale_i64(n as i64));
    }
    acc
}

/// `sum_{n>=1} [n-1, k-1] n q^n / (q;q)_n`
fn lemma23_series(k: usize, order: usize) -> Series {
    let mut acc = Series::zero(order);
    for (n, inv) in inv_qq_prefix(order).enumerate().skip(1) {
        let t = (q_binomial(n - 1, k - 1, order) * inv).mul_q_pow(n);
        acc.add_assign_ref(&t.scale_i64(n as i64));
    }
    acc
}

/// `-(q^k/(q;q)_inf) sum_{i=1}^k (-1)^i q^(i(i-1)/2 - ki) / (q;q)_{k-i} sum_n d_{>=i}(n) q^n`.
///
/// Individual terms carry negative powers of `q` that cancel in the sum;
/// everything is computed shifted by `q^shift` and the shift is removed at
/// the end, which fails loudly if anything is left below `q^0`.
fn lemma23_divisors(k: usize, order: usize) -> Built {
    let exps: Vec<i64> = (1..=k as i64)
        .map(|i| k as i64 + i * (i - 1) / 2 - k as i64 * i)
        .collect();
    let shift = exps.iter().map(|e| -e).max().unwrap_or(0).max(0) as usize;
    let wide = order + shift;
    let mut acc = Series::zero(wide);
    for (i, e) in (1..=k).zip(&exps) {
        let t = inv_qpoch(1, k - i, wide) * sieve_divisors(wide, i);
        let t = t.mul_q_pow((e + shift as i64) as usize);
        acc.add_assign_ref(&t.scale(&sign_pow(i as i64 + 1)));
    }
    (inv_qpoch_inf(1, wide) * acc).div_q_pow(shift)
}
