//! Growth of `FFW_k(n)` against `(-1)^k n^(k-1) ln n / ((k-1)!)^2`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::partitions::{closed_form_table, ClosedForm};

use super::build::divisor_form;

#[derive(Clone, Debug, PartialEq)]
pub struct AsymRow {
    pub n: usize,
    pub value: BigInt,
    /// `(-1)^k n^(k-1) ln n / ((k-1)!)^2`
    pub main_term: f64,
    pub ratio: f64,
    /// `value` over the same main term with a single `(k-1)!` in the
    /// denominator; tends to `1/(k-1)!` rather than 1.
    pub single_factorial_ratio: f64,
}

fn factorial(m: usize) -> f64 {
    (1..=m).map(|i| i as f64).product()
}

/// The sample points `n_max/10, n_max/4, n_max/2, n_max`, deduplicated and
/// clamped below at 1.
pub fn sample_points(n_max: usize) -> Vec<usize> {
    let mut pts: Vec<usize> = [n_max / 10, n_max / 4, n_max / 2, n_max]
        .into_iter()
        .map(|n| n.max(1))
        .collect();
    pts.dedup();
    pts
}

/// Exact `FFW_k(n)` for `n <= n_max`, entry 0 unused.
pub fn ffw_values(k: usize, n_max: usize) -> Vec<BigInt> {
    assert!(k >= 2, "the main term vanishes for k = 1");
    if k == 2 {
        return closed_form_table(n_max, ClosedForm::Ffw2);
    }
    let s = divisor_form(k, 0..k, n_max + 1);
    (0..=n_max)
        .map(|n| s.coeff(n).as_constant().expect("z-free series"))
        .collect()
}

pub fn asym_table(k: usize, n_max: usize) -> Vec<AsymRow> {
    let values = ffw_values(k, n_max);
    let f = factorial(k - 1);
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    sample_points(n_max)
        .into_iter()
        .map(|n| {
            let value = values[n].clone();
            let v = value.to_f64().unwrap_or(f64::NAN);
            let x = n as f64;
            let base = sign * x.powi(k as i32 - 1) * x.ln();
            let main_term = base / (f * f);
            AsymRow {
                n,
                value,
                main_term,
                ratio: v / main_term,
                single_factorial_ratio: v / (base / f),
            }
        })
        .collect()
}
