mod common;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use common::{binomial, frac, q};
use radix::algebra::{
    expand_rhs_order3, functional_identity_check, layer_constant_poly, IntPolynomial,
};
use radix::expr::{eval_expr, parse, print_text, tokenize, RadExpr, TokenKind};
use radix::numeric::{Dyadic, Interval, Rounding};
use radix::radical::{
    depth_sweep, enclose, refine_bracket, truncated_eval, Entry4Spec, GeneralSpec, RadicalError,
    TailPolicy,
};
use radix::report::{
    format_decimal, parse_decimal_exact, rows_from_results, to_csv, to_svg, SweepRow, CSV_HEADER,
};
use radix::BigRat;

const STARTS: [(i64, i64); 4] = [(1, 1), (3, 2), (2, 1), (10, 1)];

fn start(index: usize) -> BigRat {
    let (n, d) = STARTS[index];
    frac(n, d)
}

fn lo(i: &Interval) -> BigRat {
    i.lo().to_rational()
}

fn hi(i: &Interval) -> BigRat {
    i.hi().to_rational()
}

fn interval_strategy() -> impl Strategy<Value = (BigRat, BigRat)> {
    (common::signed_rational(), common::nonnegative_rational()).prop_map(|(a, w)| {
        let b = &a + w;
        (a, b)
    })
}

fn nonnegative_interval() -> impl Strategy<Value = (BigRat, BigRat)> {
    (
        common::nonnegative_rational(),
        common::nonnegative_rational(),
    )
        .prop_map(|(a, w)| {
            let b = &a + w;
            (a, b)
        })
}

fn enclosure(a: &BigRat, b: &BigRat, precision: u32) -> Interval {
    let lo = Interval::from_rational(a, precision);
    let hi = Interval::from_rational(b, precision);
    Interval::new(lo.lo().clone(), hi.hi().clone(), precision)
}

fn int_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-20i64..=20, 0..=9)
        .prop_map(|c| IntPolynomial::new(c.into_iter().map(BigInt::from).collect()))
}

// numeric

proptest! {
    #[test]
    fn arithmetic_contains_exact_results(
        (a0, a1) in interval_strategy(),
        (b0, b1) in interval_strategy(),
        ta in 0u32..=8,
        tb in 0u32..=8,
        precision in 16u32..=128,
    ) {
        let x = &a0 + (&a1 - &a0) * frac(ta.into(), 8);
        let y = &b0 + (&b1 - &b0) * frac(tb.into(), 8);
        let a = enclosure(&a0, &a1, precision);
        let b = enclosure(&b0, &b1, precision);
        prop_assert!(a.add(&b).contains(&(&x + &y)));
        prop_assert!(a.sub(&b).contains(&(&x - &y)));
        prop_assert!(a.mul(&b).contains(&(&x * &y)));
        prop_assert!(a.neg().contains(&-x.clone()));
        prop_assert!(a.pow(3).contains(&(&x * &x * &x)));
    }

    #[test]
    fn add_width_is_bounded(a in common::signed_rational(), b in common::signed_rational(), precision in 16u32..=128) {
        let ia = Interval::from_rational(&a, precision);
        let ib = Interval::from_rational(&b, precision);
        let sum = ia.add(&ib);
        let slack = sum.ulp() * q(2);
        prop_assert!(sum.width() <= ia.width() + ib.width() + slack);
    }

    #[test]
    fn rational_conversion_is_one_ulp(value in common::signed_rational(), precision in 16u32..=160) {
        let i = Interval::from_rational(&value, precision);
        prop_assert!(i.contains(&value));
        prop_assert!(i.width() <= i.ulp());
    }

    #[test]
    fn root_raised_contains_radicand((a, b) in nonnegative_interval(), n in 2u32..=9, precision in 16u32..=160) {
        let v = enclosure(&a, &b, precision);
        let r = v.nth_root(n).unwrap();
        prop_assert!(r.lo().pow(n) <= *v.lo());
        prop_assert!(r.hi().pow(n) >= *v.hi());
    }

    #[test]
    fn root_endpoints_are_within_one_ulp(value in common::nonnegative_rational(), n in 2u32..=9, precision in 16u32..=160) {
        prop_assume!(!value.is_zero());
        let point = Interval::point(Dyadic::from_rational(&value, precision, Rounding::Floor), precision);
        let r = point.nth_root(n).unwrap();
        prop_assert!(r.width() <= r.ulp());
        // exact check on the lower endpoint: lo^n <= v < (lo + ulp)^n
        let next = r.lo().add(&Dyadic::from_rational(&r.ulp(), precision, Rounding::Floor));
        prop_assert!(next.pow(n) > *point.lo());
    }

    #[test]
    fn root_is_monotone(
        (a, b) in nonnegative_interval(),
        grow_lo in common::nonnegative_rational(),
        grow_hi in common::nonnegative_rational(),
        n in 2u32..=7,
        precision in 16u32..=128,
    ) {
        let w_lo = (&a - grow_lo).max(BigRat::zero());
        let w_hi = &b + grow_hi;
        let inner = enclosure(&a, &b, precision).nth_root(n).unwrap();
        let outer = enclosure(&w_lo, &w_hi, precision).nth_root(n).unwrap();
        prop_assert!(lo(&outer) <= lo(&inner) + inner.ulp());
        prop_assert!(hi(&inner) <= hi(&outer) + inner.ulp());
    }

    #[test]
    fn doubling_precision_stays_within_a_coarse_ulp(value in common::nonnegative_rational(), n in 2u32..=7, precision in 16u32..=96) {
        let coarse = Interval::from_rational(&value, precision).nth_root(n).unwrap();
        let fine = Interval::from_rational(&value, 2 * precision).nth_root(n).unwrap();
        let ulp = coarse.ulp();
        prop_assert!(lo(&fine) >= lo(&coarse) - &ulp);
        prop_assert!(hi(&fine) <= hi(&coarse) + &ulp);
    }

    #[test]
    fn doubling_precision_in_truncations(order in 2u32..=6, s in 0usize..4, depth in 1u64..=5, precision in 32u32..=96) {
        let spec = GeneralSpec::new(order, start(s)).unwrap();
        let coarse = truncated_eval(&spec, depth, &TailPolicy::Zero, precision).unwrap().value;
        let fine = truncated_eval(&spec, depth, &TailPolicy::Zero, 2 * precision).unwrap().value;
        let slack = coarse.ulp() * BigRat::from_integer(depth.into());
        prop_assert!(lo(&fine) >= lo(&coarse) - &slack);
        prop_assert!(hi(&fine) <= hi(&coarse) + &slack);
    }
}

#[test]
fn sum_of_tenths_at_double_precision() {
    let a = Interval::from_rational(&frac(1, 10), 53);
    let b = Interval::from_rational(&frac(2, 10), 53);
    let sum = a.add(&b);
    assert!(sum.contains(&frac(3, 10)));
    assert!(sum.width() <= sum.ulp() * q(2));
}

#[test]
fn one_third_at_ten_digits() {
    // 34 bits is the binary stand-in for ten significant digits
    let third = Interval::from_rational(&frac(1, 3), 34);
    assert!(third.contains(&frac(1, 3)));
    assert!(third.width() <= frac(1, 1_000_000_000));
}

#[test]
fn square_root_of_two_squares_back() {
    let r = Interval::from_rational(&q(2), 128).nth_root(2).unwrap();
    assert!(r.lo().pow(2) <= Dyadic::from(2));
    assert!(r.hi().pow(2) >= Dyadic::from(2));
    assert!(r.width() <= r.ulp());
}

#[test]
fn small_interval_cases() {
    let sum = Interval::zero(64).add(&Interval::from_rational(&q(1), 64));
    assert_eq!((lo(&sum), hi(&sum)), (q(1), q(1)));
    let wide = enclosure(&q(1), &q(2), 64).add(&enclosure(&q(3), &q(4), 64));
    assert!(wide.contains(&q(4)) && wide.contains(&q(6)));
    let six = Interval::from_rational(&q(2), 64).mul(&Interval::from_rational(&q(3), 64));
    assert_eq!((lo(&six), hi(&six)), (q(6), q(6)));
    let sign = enclosure(&q(-1), &q(1), 64).mul(&enclosure(&q(-1), &q(1), 64));
    assert!(sign.contains(&q(-1)) && sign.contains(&q(1)));
    let square = enclosure(&q(1), &q(2), 64).mul(&enclosure(&q(1), &q(2), 64));
    assert!(square.contains(&q(1)) && square.contains(&q(4)));
    let seventh = Interval::from_rational(&q(1), 64).nth_root(7).unwrap();
    assert_eq!((lo(&seventh), hi(&seventh)), (q(1), q(1)));
    let half = Interval::from_rational(&frac(-7, 2), 64);
    assert_eq!((lo(&half), hi(&half)), (frac(-7, 2), frac(-7, 2)));
}

// radical

#[test]
fn fixed_point_tail_is_exact_across_the_grid() {
    for order in 2..=12 {
        for s in 0..4 {
            let x = start(s);
            let spec = GeneralSpec::new(order, x.clone()).unwrap();
            for depth in 1..=6u64 {
                let value = truncated_eval(&spec, depth, &TailPolicy::ExactFixedPoint, 128)
                    .unwrap()
                    .value;
                assert!(
                    value.contains(&(&x + BigRat::one())),
                    "n={order} x={x} d={depth}"
                );
                let budget = value.ulp() * BigRat::from_integer((4 * depth).into());
                assert!(
                    value.width() <= budget,
                    "n={order} x={x} d={depth} too wide"
                );
            }
        }
    }
}

#[test]
fn zero_tail_lower_bounds_rise_toward_the_limit() {
    for order in 2..=8 {
        for s in 0..4 {
            let x = start(s);
            let limit = &x + BigRat::one();
            let spec = GeneralSpec::new(order, x.clone()).unwrap();
            let results = depth_sweep(&spec, 10, &TailPolicy::Zero, 128).unwrap();
            for pair in results.windows(2) {
                let slack = pair[1].value.ulp() * q(2);
                assert!(
                    lo(&pair[1].value) + slack >= lo(&pair[0].value),
                    "n={order} x={x}"
                );
            }
            assert!(results.iter().all(|r| lo(&r.value) <= limit));
        }
    }
}

#[test]
fn scaled_upper_tail_dominates_for_order_three() {
    for s in 0..4 {
        let x = start(s);
        let limit = &x + BigRat::one();
        let spec = GeneralSpec::new(3, x.clone()).unwrap();
        let tail = TailPolicy::ScaledBound(frac(3, 2));
        let results = depth_sweep(&spec, 10, &tail, 128).unwrap();
        for r in &results {
            assert!(
                lo(&r.value) + r.value.ulp() * q(2) >= limit,
                "x={x} d={}",
                r.depth
            );
        }
        for pair in results.windows(2) {
            let slack = pair[0].value.ulp() * q(2);
            assert!(hi(&pair[1].value) <= hi(&pair[0].value) + slack, "x={x}");
        }
    }
}

#[test]
fn bracket_exponents_shrink_by_three() {
    for k in 1..=80 {
        let current = refine_bracket(3, k).unwrap();
        let previous = refine_bracket(3, k - 1).unwrap();
        assert_eq!(current.hi_exponent.clone() * q(3), previous.hi_exponent);
        assert_eq!(current.lo_exponent, -current.hi_exponent.clone());
    }
    let forty = refine_bracket(3, 40).unwrap();
    let expected = frac(3, 2) / BigRat::from_integer(num_traits::pow(BigInt::from(3), 40));
    assert_eq!(forty.hi_exponent, expected);
}

#[test]
fn rigorous_enclosures_contain_the_limit_and_tighten() {
    for s in 0..4 {
        let x = start(s);
        let spec = GeneralSpec::new(3, x.clone()).unwrap();
        let mut previous: Option<BigRat> = None;
        for depth in 1..=10 {
            let e = enclose(&spec, depth, 128).unwrap();
            assert!(e.is_rigorous());
            assert!(
                e.interval.contains(&(&x + BigRat::one())),
                "x={x} d={depth}"
            );
            let width = e.interval.width();
            if let Some(prev) = previous {
                assert!(width <= prev + e.interval.ulp() * q(4), "x={x} d={depth}");
            }
            previous = Some(width);
        }
    }
}

proptest! {
    #[test]
    fn entry4_truncations_contain_their_limit(
        x in common::nonnegative_rational(),
        nprime in common::nonnegative_rational(),
        a in common::signed_rational(),
        depth in 1u64..=8,
    ) {
        // the radical is nonnegative, so the identity needs x + n' + a >= 0
        prop_assume!(&x + &nprime + &a >= BigRat::zero());
        let spec = Entry4Spec::new(x.clone(), nprime.clone(), a.clone());
        match truncated_eval(&spec, depth, &TailPolicy::ExactFixedPoint, 128) {
            Ok(r) => prop_assert!(r.value.contains(&(&x + &nprime + &a))),
            Err(RadicalError::NegativeRadicand { .. }) => prop_assume!(false),
            Err(other) => prop_assert!(false, "unexpected error {other}"),
        }
    }

    #[test]
    fn truncation_matches_fixed_point_oracle(order in 2u32..=5, s in 0usize..4, depth in 1u64..=6) {
        let x = start(s);
        let spec = GeneralSpec::new(order, x.clone()).unwrap();
        let r = truncated_eval(&spec, depth, &TailPolicy::Zero, 128).unwrap().value;
        let layers: Vec<_> = (0..depth).map(|j| common::general_layer_oracle(order, &x, j)).collect();
        let oracle = common::fixed_point_radical(order, &layers, &BigRat::zero(), 256);
        let slack = r.ulp() * q(4);
        prop_assert!(lo(&r) - &slack <= oracle && oracle <= hi(&r) + &slack);
    }

    #[test]
    fn layers_match_the_binomial_oracle(order in 2u32..=12, s in 0usize..4, j in 0u64..=50) {
        let x = start(s);
        let term = GeneralSpec::new(order, x.clone()).unwrap().layer(j);
        let (constant, multiplier) = common::general_layer_oracle(order, &x, j);
        prop_assert_eq!(term.constant, constant);
        prop_assert_eq!(term.multiplier, multiplier);
    }
}

#[test]
fn general_layer_cases() {
    let layer = |n, x, j| {
        let t = GeneralSpec::new(n, q(x)).unwrap().layer(j);
        (t.constant, t.multiplier, t.argument)
    };
    assert_eq!(layer(3, 1, 0), (q(4), q(1), q(1)));
    assert_eq!(layer(3, 1, 1), (q(10), q(9), q(3)));
    assert_eq!(layer(2, 2, 0), (q(1), q(2), q(2)));
    assert_eq!(layer(4, 1, 0), (q(11), q(1), q(1)));
}

#[test]
fn entry4_layer_cases() {
    let layer = |x, n, a, j| {
        let t = Entry4Spec::new(q(x), q(n), q(a)).layer(j);
        (t.constant, t.multiplier)
    };
    assert_eq!(layer(2, 1, 0, 0), (q(1), q(2)));
    assert_eq!(layer(2, 1, 0, 1), (q(1), q(3)));
    assert_eq!(layer(0, 5, 1, 0), (q(36), q(0)));
}

#[test]
fn truncation_cases() {
    let cube = GeneralSpec::new(3, q(1)).unwrap();
    let two = truncated_eval(&cube, 1, &TailPolicy::ExactFixedPoint, 128)
        .unwrap()
        .value;
    assert_eq!((lo(&two), hi(&two)), (q(2), q(2)));

    let square = GeneralSpec::new(2, q(2)).unwrap();
    for depth in [1, 5, 17] {
        let r = truncated_eval(&square, depth, &TailPolicy::ExactFixedPoint, 128).unwrap();
        assert!(r.value.contains(&q(3)));
    }

    // cbrt(4 + cbrt(10 + 9 cbrt(16))) by the fixed-point oracle
    let layers = [(q(4), q(1)), (q(10), q(9)), (q(16), q(25))];
    let oracle = common::fixed_point_radical(3, &layers, &BigRat::zero(), 256);
    let r = truncated_eval(&cube, 3, &TailPolicy::Zero, 128)
        .unwrap()
        .value;
    assert!(lo(&r) <= &oracle + r.ulp() && oracle <= hi(&r) + r.ulp());
    assert!(hi(&r) < q(2));
}

#[test]
fn enclosure_cases() {
    let e = enclose(&GeneralSpec::new(3, q(1)).unwrap(), 1, 128).unwrap();
    assert!(e.interval.contains(&q(2)));
    let e = enclose(&GeneralSpec::new(2, q(2)).unwrap(), 10, 128).unwrap();
    assert!(e.interval.contains(&q(3)));
    assert!(!e.is_rigorous());
    let e = enclose(&GeneralSpec::new(3, q(2)).unwrap(), 5, 128).unwrap();
    assert!(e.interval.contains(&q(3)));
}

#[test]
fn sweep_cases() {
    let cube = GeneralSpec::new(3, q(1)).unwrap();
    let results = depth_sweep(&cube, 8, &TailPolicy::Zero, 128).unwrap();
    assert_eq!(results.len(), 8);
    assert!(results.iter().all(|r| hi(&r.value) < q(2)));
    assert!(q(2) - lo(&results[7].value) < frac(1, 1000));

    let square = GeneralSpec::new(2, q(2)).unwrap();
    let one = depth_sweep(&square, 1, &TailPolicy::ExactFixedPoint, 128).unwrap();
    assert_eq!(one.len(), 1);
    assert!(one[0].value.contains(&q(3)));

    let entry = Entry4Spec::new(q(2), q(1), q(0));
    let results = depth_sweep(&entry, 6, &TailPolicy::Zero, 128).unwrap();
    for pair in results.windows(2) {
        assert!(pair[0].value.lo() <= pair[1].value.lo());
    }
    assert!(results.iter().all(|r| hi(&r.value) <= q(3)));
}

// algebra

proptest! {
    #[test]
    fn polynomial_pow_is_repeated_mul(p in int_poly(), power in 0u32..=5) {
        let mut expected = IntPolynomial::constant(BigInt::one());
        for _ in 0..power {
            expected = &expected * &p;
        }
        prop_assert_eq!(p.pow(power), expected);
    }
}

#[test]
fn identity_holds_through_sixty_four() {
    for n in 2..=64 {
        assert_eq!(functional_identity_check(n), Ok(true), "n={n}");
    }
}

#[test]
fn layer_constants_are_symmetric_binomials() {
    for n in 2..=40u32 {
        let poly = layer_constant_poly(n).unwrap();
        assert_eq!(poly.degree(), Some(n as usize - 2));
        for k in 0..=n - 2 {
            let c = poly.coefficient(k as usize);
            assert_eq!(c, binomial(n, k), "n={n} k={k}");
            assert_eq!(c, binomial(n, n - k), "n={n} k={k}");
        }
    }
}

#[test]
fn order_three_expansion_matches_cube() {
    let one = BigRat::one();
    let cube = radix::algebra::RatPolynomial::linear_shift(one.clone()).pow(3);
    assert_eq!(expand_rhs_order3(&one, &one), cube);
    let zero = BigRat::zero();
    assert_eq!(
        expand_rhs_order3(&zero, &zero).coefficients(),
        &[q(1), q(3)]
    );
    assert_eq!(
        expand_rhs_order3(&q(2), &zero).coefficients(),
        &[q(1), q(3), q(4), q(2)]
    );
}

// expr

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn printed_trees_parse_back(tree in common::any_syntax_tree()) {
        let text = print_text(&tree);
        prop_assert_eq!(parse(&text).unwrap(), tree);
    }

    #[test]
    fn rational_trees_stay_enclosed(tree in common::rational_tree(), precision in 16u32..=160) {
        let exact = common::exact_value(&tree);
        prop_assert!(eval_expr(&tree, None, precision).unwrap().contains(&exact));
    }
}

#[test]
fn generator_and_syntax_agree() {
    for order in 2..=4 {
        for x in [q(1), q(2)] {
            let spec = GeneralSpec::new(order, x.clone()).unwrap();
            for depth in 1..=3 {
                let text = print_text(&RadExpr::from_general(&spec, depth));
                let tree = parse(&text).unwrap();
                let syntax = eval_expr(&tree, Some(&BigRat::zero()), 128).unwrap();
                let generator = truncated_eval(&spec, depth, &TailPolicy::Zero, 128)
                    .unwrap()
                    .value;
                let slack = generator.ulp() * q(2);
                assert!((lo(&syntax) - lo(&generator)).abs() <= slack, "{text}");
                assert!((hi(&syntax) - hi(&generator)).abs() <= slack, "{text}");
            }
        }
    }
}

#[test]
fn deleting_any_token_breaks_the_corpus() {
    for source in common::corpus() {
        parse(source).unwrap();
        let tokens = tokenize(source).unwrap();
        for token in tokens.iter().filter(|t| t.kind != TokenKind::Eof) {
            // a space keeps the neighbours from fusing into one token, e.g. `1^2` -> `1 2`
            let mutated = format!("{} {}", &source[..token.offset], &source[token.end..]);
            assert!(
                parse(&mutated).is_err(),
                "deleting {:?} from {source:?} still parses",
                token.kind
            );
        }
    }
}

#[test]
fn square_prefix_with_resolved_tail() {
    let tree = parse("root(2, 1 + 2*...)").unwrap();
    assert!(eval_expr(&tree, Some(&q(4)), 128).unwrap().contains(&q(3)));
    let eight = parse("root(3, 8)").unwrap();
    assert!(eval_expr(&eight, None, 128).unwrap().contains(&q(2)));
}

// report

fn cube_rows(depth: u64) -> Vec<SweepRow> {
    let spec = GeneralSpec::new(3, q(1)).unwrap();
    rows_from_results(
        &depth_sweep(&spec, depth, &TailPolicy::Zero, 128).unwrap(),
        12,
    )
}

#[test]
fn csv_round_trips_through_a_reader() {
    let rows = cube_rows(8);
    let text = to_csv(&rows);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        reader
            .headers()
            .unwrap()
            .iter()
            .collect::<Vec<_>>()
            .join(","),
        CSV_HEADER
    );
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), rows.len());
    for (record, row) in records.iter().zip(&rows) {
        assert_eq!(record[0].parse::<u64>().unwrap(), row.depth);
        assert_eq!(&record[1], row.lower);
        assert_eq!(&record[2], row.upper);
        assert_eq!(&record[3], row.width);
        assert_eq!(&record[4], row.tail);
    }
    let lowers: Vec<BigRat> = rows
        .iter()
        .map(|r| parse_decimal_exact(&r.lower).unwrap())
        .collect();
    assert!(lowers.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn empty_csv_is_just_the_header() {
    assert_eq!(to_csv(&[]), format!("{CSV_HEADER}\n"));
}

#[test]
fn first_row_is_the_cube_root_of_four() {
    let rows = cube_rows(1);
    // 12 significant digits: scale cbrt(4) by 10^11, i.e. the radicand by 10^33
    let scaled = BigInt::from(4) * num_traits::pow(BigInt::from(10), 33);
    let floor = scaled.to_biguint().unwrap().nth_root(3);
    let oracle = BigRat::new(BigInt::from(floor), num_traits::pow(BigInt::from(10), 11));
    assert_eq!(parse_decimal_exact(&rows[0].lower).unwrap(), oracle);
    assert_eq!(
        parse_decimal_exact(&rows[0].upper).unwrap(),
        oracle + frac(1, 100_000_000_000)
    );
}

proptest! {
    #[test]
    fn rendered_decimals_enclose_endpoints(order in 2u32..=6, s in 0usize..4, depth in 1u64..=6, digits in 3u32..=30) {
        let spec = GeneralSpec::new(order, start(s)).unwrap();
        let r = truncated_eval(&spec, depth, &TailPolicy::Zero, 128).unwrap();
        let row = SweepRow::from_result(&r, digits);
        prop_assert!(parse_decimal_exact(&row.lower).unwrap() <= lo(&r.value));
        prop_assert!(parse_decimal_exact(&row.upper).unwrap() >= hi(&r.value));
        prop_assert!(parse_decimal_exact(&row.width).unwrap() >= r.value.width());
    }

    #[test]
    fn directed_decimals_bracket_any_rational(value in common::signed_rational(), digits in 1u32..=20) {
        let down = parse_decimal_exact(&format_decimal(&value, digits, Rounding::Floor)).unwrap();
        let up = parse_decimal_exact(&format_decimal(&value, digits, Rounding::Ceil)).unwrap();
        prop_assert!(down <= value && value <= up);
    }
}

#[test]
fn svg_is_deterministic() {
    let rows = cube_rows(8);
    let first = to_svg(&rows, &q(2)).unwrap();
    let second = to_svg(&cube_rows(8), &q(2)).unwrap();
    assert_eq!(first, second);
    for line in first.lines() {
        let tag = line
            .trim_start()
            .trim_start_matches('<')
            .trim_start_matches('/');
        let name: String = tag
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric())
            .collect();
        assert!(
            ["svg", "g", "line", "polyline", "text"].contains(&name.as_str()),
            "unexpected element in {line}"
        );
    }
}

#[test]
fn single_row_svg_has_one_point_and_the_limit() {
    let rows = cube_rows(1);
    let svg = to_svg(&rows, &q(2)).unwrap();
    let polyline = svg.lines().find(|l| l.starts_with("<polyline")).unwrap();
    let points = polyline
        .split("points=\"")
        .nth(1)
        .unwrap()
        .split('"')
        .next()
        .unwrap();
    assert_eq!(points.split_whitespace().count(), 1);
    assert!(svg.contains(r#"class="limit""#));
    assert!(to_svg(&[], &q(2)).is_err());
}
