use super::*;
use crate::fps::{pochhammer, q_binomial, Count, PochSpec, ZPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn parts_of(n: usize) -> Vec<Vec<usize>> {
    enum_distinct(n).map(|p| p.parts().to_vec()).collect()
}

/// All subsets of `1..=n`, as ascending vectors; the brute-force oracle.
fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
}

fn int(p: &ZPoly) -> i64 {
    i64::try_from(p.as_constant().expect("constant")).unwrap()
}

#[test]
fn enumeration_of_six() {
    assert_eq!(
        parts_of(6),
        vec![vec![1, 2, 3], vec![1, 5], vec![2, 4], vec![6]]
    );
    assert_eq!(parts_of(1), vec![vec![1]]);
    assert_eq!(parts_of(0), vec![Vec::<usize>::new()]);
}

#[test]
fn iterator_and_callback_agree_with_brute_force() {
    for n in 0..=18 {
        let mut brute: Vec<Vec<usize>> = subsets(n)
            .filter(|s| s.iter().sum::<usize>() == n)
            .collect();
        brute.sort();
        let mut fast = Vec::new();
        for_each_distinct(n, |p| fast.push(p.to_vec()));
        assert_eq!(parts_of(n), brute, "n={n}");
        assert_eq!(fast, brute, "n={n}");
    }
}

#[test]
fn iterator_is_restartable() {
    let it = enum_distinct(20);
    let a: Vec<_> = it.clone().collect();
    let b: Vec<_> = it.collect();
    assert_eq!(a, b);
    assert_eq!(a.len(), 64);
}

#[test]
fn counts_match_the_distinct_parts_product() {
    let prod = pochhammer(&PochSpec::new(true, 0, 1, 1, Count::Infinite), 61).unwrap();
    for n in 0..=60 {
        assert_eq!(
            BigInt::from(enum_distinct(n).count()),
            prod.coeff(n).coeff(0),
            "n={n}"
        );
    }
}

#[test]
fn kth_smallest_part() {
    assert_eq!(s_k(&[1, 2, 3], 2), 2);
    assert_eq!(s_k(&[5], 2), 0);
    assert_eq!(s_k(&[4, 7], 0), 0);
    let p = DistinctPartition::new(vec![2, 5, 9]).unwrap();
    assert_eq!(
        (p.smallest(), p.largest(), p.s_k(3), p.sum()),
        (2, 9, 9, 16)
    );
    assert!(DistinctPartition::new(vec![3, 3]).is_none());
    assert!(DistinctPartition::new(vec![0, 3]).is_none());
    assert_eq!(p.to_string(), "{2,5,9}");
}

#[test]
fn stat_poly_examples() {
    assert_eq!(
        stat_poly(3, StatVariant::FfwKz(2)),
        ZPoly::from_i64s(&[-1, 0, 1])
    );
    assert_eq!(
        stat_poly(6, StatVariant::FfwKz(1)),
        ZPoly::from_i64s(&[0, 0, 1, 0, 0, 0, -1])
    );
    assert_eq!(
        stat_poly(5, StatVariant::Tails(2)),
        ZPoly::from_i64s(&[2, 1, 1])
    );
    assert_eq!(
        stat_poly(3, StatVariant::Power(1)),
        ZPoly::from_i64s(&[0, 1, 0, -3])
    );
    assert_eq!(
        stat_poly(
            4,
            StatVariant::Parity(Parity::Odd, SignConvention::SharpMinusOne)
        ),
        ZPoly::constant(-1)
    );
}

#[test]
fn ffw_examples() {
    assert_eq!(ffw_k(6, 1), BigInt::from(-4));
    assert_eq!(ffw_k(6, 2), BigInt::from(7));
    assert_eq!(ffw_k(6, 3), BigInt::from(-3));
    assert_eq!(ffw_k(0, 2), BigInt::from(0));
}

#[test]
fn closed_form_examples() {
    assert_eq!(closed_form(6, ClosedForm::Ffw2), BigInt::from(7));
    assert_eq!(closed_form(6, ClosedForm::Ffw3), BigInt::from(-3));
    assert_eq!(closed_form(4, ClosedForm::Thm14), BigInt::from(-1));
    assert_eq!(closed_form(5, ClosedForm::Thm37), BigInt::from(0));
}

#[test]
fn pentagonal_indices() {
    assert_eq!(pentagonal_index(5), Some(2));
    assert_eq!(pentagonal_index(7), Some(-2));
    assert_eq!(pentagonal_index(6), None);
    for j in -30i64..=30 {
        if j != 0 {
            assert_eq!(pentagonal_index((j * (3 * j - 1) / 2) as usize), Some(j));
        }
    }
}

#[test]
fn divisor_counts() {
    assert_eq!(divisor_count(6, 1), 4);
    assert_eq!(divisor_count(6, 2), 3);
    assert_eq!(divisor_count(1, 2), 0);
    let t = divisor_table(500);
    for k in 1..5 {
        let tk = divisor_ge_table(500, k);
        for n in 1..=500 {
            assert_eq!(tk[n] as usize, divisor_count(n, k));
            assert_eq!(t[n] as usize, (1..=n).filter(|d| n % d == 0).count());
        }
    }
    let s = divisor_power_series(13);
    assert_eq!(
        s.coeff(12),
        &ZPoly::from_i64s(&[0, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 1])
    );
}

#[test]
fn restricted_partition_counts() {
    assert_eq!(parts_lt_count(4, 3), BigInt::from(3));
    assert_eq!(parts_lt_count(0, 7), BigInt::from(1));
    assert_eq!(parts_lt_count(5, 2), BigInt::from(1));
    // k = 3 has the closed form floor(n/2) + 1
    let t = parts_lt_table(100, 3);
    for (n, v) in t.iter().enumerate() {
        assert_eq!(*v, BigInt::from(n / 2 + 1));
    }
}

/// p_{<k}(n) grows like n^(k-2) / ((k-1)! (k-2)!); a growth exponent of k
/// would put these ratios out by a factor of order n^2.
#[test]
fn restricted_partition_growth() {
    let n = 4000usize;
    for k in 3..=5u32 {
        let t = parts_lt_table(n, k as usize);
        let fact = |m: u32| (1..=m).product::<u32>() as f64;
        let main = (n as f64).powi(k as i32 - 2) / (fact(k - 1) * fact(k - 2));
        let ratio = t[n].to_string().parse::<f64>().unwrap() / main;
        assert!((ratio - 1.0).abs() < 0.01, "k={k} ratio={ratio}");
    }
}

#[test]
fn largest_part_sums() {
    assert_eq!(largest_sum_fixed_len(6, 2), 9);
    assert_eq!(largest_sum_fixed_len(6, 1), 6);
    assert_eq!(largest_sum_fixed_len(2, 2), 0);
}

#[test]
fn sign_table_matches_enumeration() {
    let t = smallest_part_sign_table(40);
    for n in 1..=40 {
        let mut row = vec![0i64; n + 1];
        for_each_distinct(n, |p| row[p[0]] += if p.len() % 2 == 0 { 1 } else { -1 });
        assert_eq!(t[n], row, "n={n}");
        for (par, conv) in [
            (Parity::Even, SignConvention::Sharp),
            (Parity::Odd, SignConvention::SharpMinusOne),
        ] {
            let e = int(&stat_poly(n, StatVariant::Parity(par, conv)));
            assert_eq!(parity_sign_sums(n, par, conv)[n], e);
        }
    }
}

#[test]
fn divisor_count_by_enumeration_to_100() {
    let d = divisor_table(100);
    for n in 1..=100 {
        assert_eq!(ffw_k(n, 1), BigInt::from(-(d[n] as i64)), "n={n}");
    }
}

#[test]
fn euler_pentagonal_by_enumeration() {
    for n in 1..=60 {
        let v = weighted_sum(n, |p| if p.len() % 2 == 1 { 1 } else { -1 });
        let expect = pentagonal_index(n).map_or(0, |j| if j.rem_euclid(2) == 1 { 1 } else { -1 });
        assert_eq!(v, expect, "n={n}");
    }
}

#[test]
fn nested_sums_are_shifted_gaussian_binomials() {
    for n in 0usize..=12 {
        for k in 0..=4 {
            let order = k * (k + 1) / 2 + k * n.saturating_sub(k) + 1;
            let mut brute = vec![0i64; order];
            for s in subsets(n).filter(|s| s.len() == k) {
                brute[s.iter().sum::<usize>()] += 1;
            }
            let rhs = q_binomial(n, k, order).mul_q_pow(k * (k + 1) / 2);
            let rhs: Vec<i64> = rhs
                .int_coeffs()
                .unwrap()
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect();
            assert_eq!(brute, rhs, "n={n} k={k}");
        }
    }
}

#[test]
fn tails_at_one_give_differences() {
    for n in 1..=40 {
        for k in 1..=4 {
            let tails = stat_poly(n, StatVariant::Tails(k)).eval(&BigInt::from(1));
            assert_eq!(
                ZPoly::constant(tails),
                stat_poly(n, StatVariant::Diff(k)),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn second_and_third_closed_forms() {
    let f2 = closed_form_table(60, ClosedForm::Ffw2);
    let f3 = closed_form_table(60, ClosedForm::Ffw3);
    for n in 1..=60 {
        assert_eq!(f2[n], ffw_k(n, 2), "n={n}");
        assert_eq!(f3[n], ffw_k(n, 3), "n={n}");
    }
}

#[test]
fn even_smallest_part_closed_form_to_200() {
    let closed = closed_form_table(200, ClosedForm::Thm14);
    let dp = parity_sign_sums(200, Parity::Even, SignConvention::Sharp);
    for n in 1..=200 {
        assert_eq!(closed[n], BigInt::from(dp[n]), "n={n}");
    }
}

#[test]
fn exchanged_labels_disagree_first_at_two() {
    let printed = closed_form_table(40, ClosedForm::Thm34Printed);
    let dp = parity_sign_sums(40, Parity::Even, SignConvention::Sharp);
    let first = (1..=40).find(|&n| printed[n] != BigInt::from(dp[n]));
    assert_eq!(first, Some(2));
}

proptest! {
    #[test]
    fn smallest_parts_increase(n in 0usize..=40) {
        for p in enum_distinct(n) {
            let len = p.len();
            prop_assert_eq!(p.sum(), n);
            for i in 1..=len {
                for j in i + 1..=len {
                    prop_assert!(p.s_k(i) < p.s_k(j));
                }
            }
            for k in 0..=len + 2 {
                prop_assert_eq!(p.s_k(k) == 0, k == 0 || k > len);
            }
        }
    }

    #[test]
    fn lexicographic_and_distinct(n in 0usize..=40) {
        let all: Vec<_> = enum_distinct(n).collect();
        prop_assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
