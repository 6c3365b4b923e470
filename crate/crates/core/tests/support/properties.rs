//! Property checks shared by the proptest suite and the acceptance runner.

#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use quotcount::invariants::{
    check_wallcross, chi_quot_series, config_space_euler, pt_series, sym_series,
    weighted_chi_quot_series,
};
use quotcount::partitions::partitions_of;
use quotcount::{CurveSetup, PowerSeries};

use super::oracles;

pub fn series_of_order(order: usize) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(-40i64..=40, order + 1)
        .prop_map(move |c| PowerSeries::make(c, order as i64).unwrap())
}

/// Series with constant term `±1`.
pub fn unit_series_of_order(order: usize) -> impl Strategy<Value = PowerSeries> {
    (prop::bool::ANY, prop::collection::vec(-40i64..=40, order)).prop_map(move |(neg, tail)| {
        let mut c = vec![if neg { -1 } else { 1 }];
        c.extend(tail);
        PowerSeries::make(c, order as i64).unwrap()
    })
}

pub fn three_series() -> impl Strategy<Value = (PowerSeries, PowerSeries, PowerSeries)> {
    (0usize..=8).prop_flat_map(|n| (series_of_order(n), series_of_order(n), series_of_order(n)))
}

pub fn two_series() -> impl Strategy<Value = (PowerSeries, PowerSeries)> {
    (0usize..=8).prop_flat_map(|n| (series_of_order(n), series_of_order(n)))
}

pub fn unit_series() -> impl Strategy<Value = PowerSeries> {
    (0usize..=8).prop_flat_map(unit_series_of_order)
}

pub fn curve_setup() -> impl Strategy<Value = CurveSetup> {
    (-30i64..=30, 0u32..=6, -10i64..=10, 0usize..=10)
        .prop_map(|(chi, g, bps, order)| CurveSetup::new(chi, g, order).with_bps(bps))
}

pub fn ring_axioms(
    (a, b, c): (PowerSeries, PowerSeries, PowerSeries),
) -> Result<(), TestCaseError> {
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert_eq!(&a * &PowerSeries::one(a.order()), a.clone());
    prop_assert_eq!(&a + &PowerSeries::zero(a.order()), a);
    Ok(())
}

pub fn inverse_is_two_sided(a: PowerSeries) -> Result<(), TestCaseError> {
    let inv = a.inverse().unwrap();
    let one = PowerSeries::one(a.order());
    prop_assert_eq!(&a * &inv, one.clone());
    prop_assert_eq!(&inv * &a, one);
    prop_assert_eq!(inv.inverse().unwrap(), a);
    Ok(())
}

pub fn pow_is_additive((a, e1, e2): (PowerSeries, i64, i64)) -> Result<(), TestCaseError> {
    let lhs = a.pow_int(e1 + e2).unwrap();
    let rhs = &a.pow_int(e1).unwrap() * &a.pow_int(e2).unwrap();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn substitute_neg_homomorphism(
    (a, b, e): (PowerSeries, PowerSeries, i64),
) -> Result<(), TestCaseError> {
    let neg = PowerSeries::substitute_neg;
    prop_assert_eq!(neg(&neg(&a)), a.clone());
    prop_assert_eq!(neg(&(&a + &b)), &neg(&a) + &neg(&b));
    prop_assert_eq!(neg(&(&a * &b)), &neg(&a) * &neg(&b));
    let flipped = neg(&a);
    for k in 0..=a.order() {
        let sign = if k % 2 == 0 {
            BigInt::from(1)
        } else {
            BigInt::from(-1)
        };
        prop_assert_eq!(&flipped.coeffs()[k], &(&a.coeffs()[k] * sign));
    }
    // The unit-constant variant of `a` exercises inverse and negative powers.
    let mut unit = a.coeffs().to_vec();
    unit[0] = BigInt::from(1);
    let u = PowerSeries::from_coeffs(unit, a.order()).unwrap();
    prop_assert_eq!(neg(&u.inverse().unwrap()), neg(&u).inverse().unwrap());
    prop_assert_eq!(neg(&u.pow_int(e).unwrap()), neg(&u).pow_int(e).unwrap());
    Ok(())
}

pub fn partition_counts(j: u32) -> Result<(), TestCaseError> {
    let generated = partitions_of(j);
    let brute = oracles::partitions_brute(j);
    prop_assert_eq!(generated.len(), brute.len());
    for p in &generated {
        prop_assert!(brute.contains(p.parts()));
    }
    const KNOWN: [usize; 9] = [1, 1, 2, 3, 5, 7, 11, 15, 22];
    if let Some(&k) = KNOWN.get(j as usize) {
        prop_assert_eq!(generated.len(), k);
    }
    Ok(())
}

pub fn aut_order_multinomial(parts: Vec<u32>) -> Result<(), TestCaseError> {
    let mut parts = parts;
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let alpha = quotcount::Partition::new(parts).unwrap();
    let orderings = oracles::distinct_orderings(alpha.parts());
    let r_factorial: BigInt = (1..=alpha.part_count()).map(BigInt::from).product();
    prop_assert_eq!(alpha.aut_order() * BigInt::from(orderings), r_factorial);
    Ok(())
}

pub fn config_space_inclusion_exclusion((e, r): (i64, usize)) -> Result<(), TestCaseError> {
    let expected = oracles::config_space_inclusion_exclusion(e, r);
    prop_assert_eq!(config_space_euler(e, r), BigInt::from(expected));
    Ok(())
}

pub fn curve_identities(setup: CurveSetup) -> Result<(), TestCaseError> {
    let plain = chi_quot_series(&setup);
    prop_assert_eq!(weighted_chi_quot_series(&setup), plain.substitute_neg());
    let bps = BigInt::from(setup.bps);
    prop_assert_eq!(
        sym_series(&setup).substitute_neg().scale(&bps),
        pt_series(&setup)
    );
    prop_assert_eq!(check_wallcross(&setup).verdict(), Some(true));
    Ok(())
}
