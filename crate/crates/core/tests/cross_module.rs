//! Checks that cross the module boundaries through the public API only.

use num_bigint::BigInt;
use proptest::prelude::*;
use qtails_core::fps::{divisor_series, q_binomial, qpoch_inf, Series};
use qtails_core::partitions::{
    closed_form_table, enum_distinct, ffw_k, stat_poly, ClosedForm, StatVariant,
};
use qtails_core::qexpr;
use qtails_core::verify::{self, Status};

fn expand(text: &str, order: usize) -> Series {
    qexpr::eval(&qexpr::parse(text).unwrap(), order).unwrap()
}

#[test]
fn distinct_part_counts_from_text() {
    let s = expand("poch(-q;q;inf)", 61);
    for n in 0..=60 {
        let count = enum_distinct(n).count();
        assert_eq!(s.coeff(n).as_constant(), Some(BigInt::from(count)), "n={n}");
    }
}

#[test]
fn signed_smallest_part_sum_is_minus_divisor_count() {
    let d = expand("dsum", 101);
    for n in 1..=100 {
        let v = stat_poly(n, StatVariant::FfwKz(1))
            .euler_derivative()
            .eval(&BigInt::from(1));
        assert_eq!(-v, d.coeff(n).as_constant().unwrap(), "n={n}");
    }
}

#[test]
fn text_and_engine_agree_on_standard_products() {
    let order = 80;
    assert_eq!(expand("poch(q;q;inf)", order), qpoch_inf(1, order));
    assert_eq!(expand("pent", order), qpoch_inf(1, order));
    assert_eq!(expand("dsum_ge(3)", order), divisor_series(3, order));
    for (n, k) in [(6, 2), (7, 3), (9, 4)] {
        assert_eq!(
            expand(&format!("qbin({n},{k})"), order),
            q_binomial(n, k, order)
        );
    }
}

#[test]
fn closed_forms_match_enumeration() {
    let f2 = closed_form_table(60, ClosedForm::Ffw2);
    let f3 = closed_form_table(60, ClosedForm::Ffw3);
    for n in 1..=60 {
        assert_eq!(f2[n], ffw_k(n, 2), "n={n}");
        assert_eq!(f3[n], ffw_k(n, 3), "n={n}");
    }
}

#[test]
fn every_suite_meets_expectations_at_the_default_order() {
    let reports = verify::run_suite(None, 40).unwrap();
    assert!(verify::suite_passes(&reports));
    let printed = reports.iter().filter(|r| r.status == Status::Fail).count();
    assert!(printed >= 10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// A finite Pochhammer quotient times its denominator is the numerator.
    #[test]
    fn quotient_times_denominator(
        a in 0usize..3, p in 1usize..4, s in 1usize..3, n in 0usize..5,
        b in 1usize..4, t in 1usize..3, neg in any::<bool>(),
    ) {
        let sign = if neg { "-" } else { "" };
        let num = format!("poch({sign}z^{a}q^{p};q^{s};{n})");
        let den = format!("poch(zq^{b};q^{t};inf)");
        let order = 20;
        let quot = expand(&format!("{num}/{den}"), order);
        prop_assert_eq!(&quot * &expand(&den, order), expand(&num, order));
    }

    /// Raising to a power agrees with repeated multiplication.
    #[test]
    fn power_is_repeated_product(e in 0u32..5, p in 1usize..3) {
        let order = 25;
        let base = expand(&format!("1/poch(zq^{p};q;inf)"), order);
        let mut acc = Series::one(order);
        for _ in 0..e {
            acc = &acc * &base;
        }
        prop_assert_eq!(expand(&format!("(1/poch(zq^{p};q;inf))^{e}"), order), acc);
    }
}
