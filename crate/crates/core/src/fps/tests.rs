use super::*;
use proptest::prelude::*;

fn ints(s: &Series) -> Vec<i64> {
    s.int_coeffs()
        .expect("z-free series")
        .iter()
        .map(|c| i64::try_from(c).unwrap())
        .collect()
}

fn poly(cs: &[i64]) -> ZPoly {
    ZPoly::from_i64s(cs)
}

/// Partitions of `n` with parts at most `max`, by brute recursion.
fn count_partitions(n: usize, max: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=max.min(n)).map(|p| count_partitions(n - p, p)).sum()
}

#[test]
fn telescoping_product() {
    let a = Series::from_ints([1, -1, 0, 0]);
    let b = Series::from_ints([1, 1, 1, 1]);
    assert_eq!(&a * &b, Series::one(4));
}

#[test]
fn one_is_identity() {
    let a = Series::from_coeffs(vec![poly(&[1, 2]), poly(&[]), poly(&[0, 0, 3])]);
    assert_eq!(&Series::one(3) * &a, a);
}

#[test]
fn difference_of_squares() {
    let zq = Series::monomial(1, 1, 1, 3);
    let plus = &Series::one(3) + &zq;
    let minus = &Series::one(3) - &zq;
    let expect = Series::from_coeffs(vec![poly(&[1]), poly(&[]), poly(&[0, 0, -1])]);
    assert_eq!(&plus * &minus, expect);
}

#[test]
fn result_order_is_min_of_operands() {
    assert_eq!((&Series::one(5) * &Series::one(3)).order(), 3);
    assert_eq!((&Series::one(5) + &Series::one(3)).order(), 3);
}

#[test]
fn invert_geometric() {
    let a = Series::from_ints([1, -1, 0, 0]);
    assert_eq!(ints(&a.invert().unwrap()), vec![1, 1, 1, 1]);
}

#[test]
fn invert_euler_product_gives_partition_counts() {
    let expect: Vec<i64> = (0..6).map(|n| count_partitions(n, n) as i64).collect();
    assert_eq!(expect, vec![1, 1, 2, 3, 5, 7]);
    let euler = qpoch_inf(1, 6);
    assert_eq!(ints(&euler.invert().unwrap()), expect);
    assert_eq!(ints(&inv_qpoch_inf(1, 6)), expect);
}

#[test]
fn invert_rejects_non_unit() {
    let a = Series::from_ints([0, 1, 1]);
    assert!(matches!(a.invert(), Err(FpsError::NonUnitConstantTerm(_))));
    let b = Series::from_coeffs(vec![poly(&[1, -1]), poly(&[1])]);
    assert!(matches!(b.invert(), Err(FpsError::NonUnitConstantTerm(_))));
    let c = Series::from_ints([-1, 3, 0, 0]);
    assert_eq!(&c * &c.invert().unwrap(), Series::one(4));
}

#[test]
fn euler_product_is_pentagonal() {
    let euler = pochhammer(&PochSpec::q_shift(1, Count::Infinite), 8).unwrap();
    assert_eq!(ints(&euler), vec![1, -1, -1, 0, 0, 1, 0, 1]);
}

#[test]
fn empty_pochhammer_is_one() {
    for spec in [
        PochSpec::new(true, 3, 0, 2, Count::Finite(0)),
        PochSpec::zq_shift(1, Count::Finite(0)),
    ] {
        assert_eq!(pochhammer(&spec, 5).unwrap(), Series::one(5));
    }
}

#[test]
fn single_factor_pochhammer() {
    let s = pochhammer(&PochSpec::zq_shift(1, Count::Finite(1)), 3).unwrap();
    assert_eq!(
        s,
        Series::from_coeffs(vec![poly(&[1]), poly(&[0, -1]), poly(&[])])
    );
}

#[test]
fn infinite_pochhammer_needs_positive_start() {
    let spec = PochSpec::zq_shift(0, Count::Infinite);
    assert!(matches!(
        pochhammer(&spec, 5),
        Err(FpsError::InvalidPochSpec(_))
    ));
    // finite products may start at q^0: (z; q)_2 = (1 - z)(1 - zq)
    let s = pochhammer(&PochSpec::zq_shift(0, Count::Finite(2)), 3).unwrap();
    assert_eq!(
        s,
        Series::from_coeffs(vec![poly(&[1, -1]), poly(&[0, -1, 1]), poly(&[])])
    );
}

#[test]
fn pochhammer_matches_explicit_factors() {
    for (neg, ze, a, step, n) in [(false, 1, 1, 1, 4), (true, 0, 2, 3, 3), (true, 2, 0, 1, 5)] {
        let spec = PochSpec::new(neg, ze, a, step, Count::Finite(n));
        let mut expect = Series::one(20);
        for i in 0..n {
            let c = if neg { 1 } else { -1 };
            let factor = &Series::one(20) + &Series::monomial(c, ze, a + i * step, 20);
            expect = &expect * &factor;
        }
        assert_eq!(pochhammer(&spec, 20).unwrap(), expect);
    }
}

#[test]
fn gaussian_binomials() {
    assert_eq!(
        ints(&q_binomial(4, 2, 10)),
        vec![1, 1, 2, 1, 1, 0, 0, 0, 0, 0]
    );
    assert_eq!(q_binomial(7, 0, 6), Series::one(6));
    assert_eq!(q_binomial(3, 5, 6), Series::zero(6));
    // [n,k] = [n-1,k-1] + q^k [n-1,k]
    for n in 1..9 {
        for k in 1..n {
            let rec = &q_binomial(n - 1, k - 1, 40) + &q_binomial(n - 1, k, 40).mul_q_pow(k);
            assert_eq!(q_binomial(n, k, 40), rec, "n={n} k={k}");
        }
    }
}

#[test]
fn geometric_expansions() {
    assert_eq!(ints(&geometric(0, 1, 4).unwrap()), vec![1, 1, 1, 1]);
    let g = geometric(1, 2, 5).unwrap();
    assert_eq!(
        g,
        Series::from_coeffs(vec![
            poly(&[1]),
            poly(&[]),
            poly(&[0, 1]),
            poly(&[]),
            poly(&[0, 0, 1])
        ])
    );
    assert_eq!(geometric(1, 0, 3), Err(FpsError::ZeroQPower));
}

#[test]
fn exact_division_by_one_minus_z() {
    let p = Series::from_coeffs(vec![poly(&[]), poly(&[-1, 0, 1]), poly(&[2, -2])]);
    let r = p.exact_div_one_minus_z().unwrap();
    assert_eq!(
        r,
        Series::from_coeffs(vec![poly(&[]), poly(&[-1, -1]), poly(&[2])])
    );
    let bad = Series::from_coeffs(vec![poly(&[]), poly(&[1, 1])]);
    assert_eq!(
        bad.exact_div_one_minus_z(),
        Err(FpsError::NotDivisible { n: 1 })
    );
}

#[test]
fn theta_series() {
    assert_eq!(
        ints(&theta(ThetaKind::Pentagonal, 8)),
        vec![1, -1, -1, 0, 0, 1, 0, 1]
    );
    assert_eq!(ints(&theta(ThetaKind::Square, 5)), vec![1, -2, 0, 0, 2]);
    assert_eq!(theta(ThetaKind::Pentagonal, 1), Series::one(1));
    assert_eq!(theta(ThetaKind::Square, 1), Series::one(1));
}

#[test]
fn dz_and_substitution() {
    let s = Series::monomial(1, 2, 3, 5);
    assert_eq!(s.dz(), Series::monomial(2, 2, 3, 5));
    assert!(Series::from_ints([3, 1, 4]).dz().is_zero());
    let p = Series::constant(poly(&[-1, 0, 1]), 1);
    assert!(p.subst_z_i64(1).is_zero());
    assert!(p.subst_z_i64(-1).is_zero());
    let p = Series::constant(poly(&[0, 1, 0, -3]), 1);
    assert_eq!(ints(&p.subst_z_i64(2)), vec![-22]);
}

#[test]
fn divisor_counts() {
    let d1 = divisor_series(1, 7);
    assert_eq!(ints(&d1), vec![0, 1, 2, 2, 3, 2, 4]);
    assert_eq!(ints(&divisor_series(2, 7))[6], 3);
    assert!(ints(&divisor_series(7, 7)).iter().all(|&c| c == 0));
}

#[test]
fn lambert_form_of_divisor_series() {
    let n = 60;
    let mut lambert = Series::zero(n);
    for m in 1..n {
        lambert.add_assign_ref(&geometric(0, m, n).unwrap().mul_q_pow(m));
    }
    assert_eq!(lambert, divisor_series(1, n));
}

#[test]
fn mismatch_reporting() {
    let a = Series::from_ints([1, 1, 0, 0, 0]);
    let b = Series::from_ints([1, 1, 0, 1, 0]);
    assert_eq!(first_mismatch(&a, &a, 0), None);
    let m = first_mismatch(&a, &b, 0).unwrap();
    assert_eq!((m.n, m.lhs, m.rhs), (3, ZPoly::zero(), ZPoly::one()));
    assert_eq!(
        first_mismatch(&theta(ThetaKind::Pentagonal, 60), &qpoch_inf(1, 60), 0),
        None
    );
}

#[test]
fn pentagonal_theorem_at_order_200() {
    assert_eq!(theta(ThetaKind::Pentagonal, 200), qpoch_inf(1, 200));
}

#[test]
fn gauss_square_theta_at_order_200() {
    let neg_q = pochhammer(&PochSpec::new(true, 0, 1, 1, Count::Infinite), 200).unwrap();
    let lhs = &qpoch_inf(1, 200) * &neg_q.invert().unwrap();
    assert_eq!(lhs, theta(ThetaKind::Square, 200));
}

#[test]
fn triple_product_at_a_equals_b_equals_q() {
    let n = 100;
    let odd = pochhammer(&PochSpec::new(false, 0, 1, 2, Count::Infinite), n).unwrap();
    let even = pochhammer(&PochSpec::new(false, 0, 2, 2, Count::Infinite), n).unwrap();
    // the alternating square theta
    assert_eq!(&(&odd * &odd) * &even, theta(ThetaKind::Square, n));
    // sum_{j in Z} q^(j^2) needs a = b = -q
    let odd_plus = pochhammer(&PochSpec::new(true, 0, 1, 2, Count::Infinite), n).unwrap();
    let mut squares = Series::one(n);
    for j in 1..10 {
        squares.add_to_coeff(j * j, &ZPoly::constant(2));
    }
    assert_eq!(&(&odd_plus * &odd_plus) * &even, squares);
}

#[test]
fn series_text_round_trip() {
    let big: BigInt = "-12345678901234567890".parse().unwrap();
    let s = Series::from_coeffs(vec![
        poly(&[1]),
        poly(&[]),
        ZPoly::from_coeffs(vec![BigInt::from(0), big]),
    ]);
    let text = s.to_string();
    assert_eq!(text, "0: [1]\n1: []\n2: [0, -12345678901234567890]\n");
    assert_eq!(Series::parse_lines(&text).unwrap(), s);
    assert!(Series::parse_lines("0: [1, 0]\n").is_err());
    assert!(Series::parse_lines("1: [1]\n").is_err());
}

#[test]
fn laurent_shift_checks_residue() {
    let s = Series::from_ints([0, 0, 5, 1]);
    assert_eq!(s.div_q_pow(2).unwrap(), Series::from_ints([5, 1]));
    assert!(matches!(
        s.div_q_pow(3),
        Err(FpsError::NegativePowerResidue { exponent: -1, .. })
    ));
}

fn arb_poly() -> impl Strategy<Value = ZPoly> {
    prop::collection::vec(-9i64..=9, 0..=6).prop_map(|cs| ZPoly::from_i64s(&cs))
}

fn arb_series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(arb_poly(), order).prop_map(Series::from_coeffs)
}

fn arb_unit_series() -> impl Strategy<Value = Series> {
    (any::<bool>(), prop::collection::vec(arb_poly(), 1..20)).prop_map(|(neg, mut rest)| {
        rest.insert(0, ZPoly::constant(if neg { -1 } else { 1 }));
        Series::from_coeffs(rest)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ring_laws((a, b, c) in (1usize..=20).prop_flat_map(|n| (arb_series(n), arb_series(n), arb_series(n)))) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn invert_round_trip(a in arb_unit_series()) {
        let inv = a.invert().unwrap();
        prop_assert_eq!(&a * &inv, Series::one(a.order()));
    }

    #[test]
    fn dz_is_a_derivation(a in arb_series(12), b in arb_series(12)) {
        let lhs = (&a * &b).dz();
        let rhs = &(&a.dz() * &b) + &(&a * &b.dz());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_ring_map(a in arb_series(10), b in arb_series(10), v in -4i64..=4) {
        prop_assert_eq!((&a * &b).subst_z_i64(v), &a.subst_z_i64(v) * &b.subst_z_i64(v));
        prop_assert_eq!((&a + &b).subst_z_i64(v), &a.subst_z_i64(v) + &b.subst_z_i64(v));
    }

    #[test]
    fn binomial_division_undoes_multiplication(a in arb_series(15), neg in any::<bool>(), ze in 0usize..3, qe in 1usize..5) {
        let c = if neg { -BigInt::one() } else { BigInt::one() };
        let m = a.mul_binomial(&-&c, ze, qe);
        prop_assert_eq!(m.div_binomial(&c, ze, qe).unwrap(), a);
    }

    #[test]
    fn text_format_round_trips(a in arb_series(8)) {
        prop_assert_eq!(Series::parse_lines(&a.to_string()).unwrap(), a);
    }
}
