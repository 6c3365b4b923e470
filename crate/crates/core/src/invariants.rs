//! Euler characteristics of Quot schemes of a curve in a threefold and the
//! local DT/PT generating series attached to the curve.
//!
//! `χ(Q^n_C)` is computed two ways:
//!
//! * the stratified sum over `j ≤ n` and partitions `α ⊢ j`
//!   `Σ χ(Hilb^{n-j} Y₀) · |G_α|⁻¹ · χ(C^{r_α} ∖ Δ) · ∏ χ(F_{α_i})`, and
//! * the closed form `M(q)^{χ(Y)} (1-q)^{2g-2}`.
//!
//! The signed counterpart replaces `q` by `-q`, and the DT side of the
//! wall-crossing identity is `M(-q)^{χ(Y)} · PT_C(q)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::partitions::PartitionIter;
use crate::series::{PowerSeries, SeriesError, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("index {n} exceeds the truncation order {order}")]
    OutOfRange { n: usize, order: usize },
    #[error("stratified sum for n = {n} is not an integer: {value}")]
    NonIntegral { n: usize, value: String },
    #[error("the local model series needs order at least 1")]
    OrderTooSmall,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Numerical data of a smooth curve `C` of genus `g` in a threefold `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveSetup {
    /// Topological Euler characteristic of the threefold.
    pub chi_y: i64,
    pub genus: u32,
    /// BPS number of the curve; 1 for a rigid curve.
    pub bps: i64,
    /// Truncation order of every series.
    pub order: usize,
}

impl CurveSetup {
    pub fn new(chi_y: i64, genus: u32, order: usize) -> Self {
        CurveSetup {
            chi_y,
            genus,
            bps: 1,
            order,
        }
    }

    pub fn with_bps(self, bps: i64) -> Self {
        CurveSetup { bps, ..self }
    }

    /// `χ(C) = 2 - 2g`.
    pub fn chi_c(&self) -> i64 {
        2 - 2 * i64::from(self.genus)
    }

    /// `χ(Y ∖ C)`.
    pub fn chi_complement(&self) -> i64 {
        self.chi_y - self.chi_c()
    }

    /// Exponent `2g - 2` of the curve factors.
    fn curve_exponent(&self) -> i64 {
        -self.chi_c()
    }
}

/// Second computation route attached to a report, with per-index agreement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub label: String,
    pub coefficients: Vec<BigInt>,
    pub agree: Vec<bool>,
}

/// Exact coefficient table for `n = 0..=order`, optionally paired with a
/// second route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub params: CurveSetup,
    pub label: String,
    pub coefficients: Vec<BigInt>,
    pub cross_check: Option<CrossCheck>,
}

impl InvariantReport {
    pub fn new(params: CurveSetup, label: impl Into<String>, coefficients: Vec<BigInt>) -> Self {
        InvariantReport {
            params,
            label: label.into(),
            coefficients,
            cross_check: None,
        }
    }

    /// Attaches a second route; the sequences are compared index by index and
    /// a length mismatch counts as disagreement at the missing indices.
    pub fn with_cross_check(mut self, label: impl Into<String>, other: Vec<BigInt>) -> Self {
        let len = self.coefficients.len().max(other.len());
        let agree = (0..len)
            .map(|i| matches!((self.coefficients.get(i), other.get(i)), (Some(x), Some(y)) if x == y))
            .collect();
        self.cross_check = Some(CrossCheck {
            label: label.into(),
            coefficients: other,
            agree,
        });
        self
    }

    /// `Some(true)` iff a cross-check is attached and agrees everywhere.
    pub fn verdict(&self) -> Option<bool> {
        self.cross_check
            .as_ref()
            .map(|c| c.agree.iter().all(|&ok| ok))
    }
}

/// Cheah's series `Σ χ(Hilb^n X) q^n = M(q)^{χ(X)}`.
pub fn hilb_series(chi: i64, order: usize) -> PowerSeries {
    PowerSeries::macmahon(order)
        .pow_int(chi)
        .expect("M(q) has constant term 1")
}

/// `χ(C^r ∖ Δ)` for a curve with `χ(C) = e`: the falling factorial
/// `e (e-1) ... (e-r+1)`.
pub fn config_space_euler(e: i64, r: usize) -> BigInt {
    (0..r).map(|i| BigInt::from(e) - BigInt::from(i)).product()
}

/// `χ(F_j) = χ(M_j)`, the coefficient of `q^j` in `M(q)/(1-q)`.
pub fn chi_f(j: usize) -> BigInt {
    local_euler_series(j)
        .into_coeffs()
        .pop()
        .expect("series has order j")
}

/// `Σ χ(M_n) q^n = M(q)/(1-q)`.
pub fn local_euler_series(order: usize) -> PowerSeries {
    &PowerSeries::macmahon(order) * &PowerSeries::geometric(order)
}

/// Tables shared by every `n` of one stratified computation.
struct Strata {
    hilb: PowerSeries,
    chi_f: PowerSeries,
    chi_c: i64,
}

impl Strata {
    fn new(setup: &CurveSetup, order: usize) -> Self {
        Strata {
            hilb: hilb_series(setup.chi_complement(), order),
            chi_f: local_euler_series(order),
            chi_c: setup.chi_c(),
        }
    }

    fn term(&self, n: usize) -> Result<BigInt, InvariantError> {
        let mut total = BigRational::zero();
        for j in 0..=n {
            let hilb = &self.hilb.coeffs()[n - j];
            if hilb.is_zero() {
                continue;
            }
            for alpha in PartitionIter::new(j as u32) {
                let config = config_space_euler(self.chi_c, alpha.part_count());
                if config.is_zero() {
                    continue;
                }
                let fibres: BigInt = alpha
                    .parts()
                    .iter()
                    .map(|&p| &self.chi_f.coeffs()[p as usize])
                    .product();
                let numer = hilb * config * fibres;
                total += BigRational::new(numer, alpha.aut_order());
            }
        }
        if total.is_integer() {
            Ok(total.to_integer())
        } else {
            Err(InvariantError::NonIntegral {
                n,
                value: total.to_string(),
            })
        }
    }
}

/// `χ(Q^n_C)` by summing over the strata `(j, α)`.
pub fn chi_quot_stratified(setup: &CurveSetup, n: usize) -> Result<BigInt, InvariantError> {
    if n > setup.order {
        return Err(InvariantError::OutOfRange {
            n,
            order: setup.order,
        });
    }
    Strata::new(setup, n).term(n)
}

/// `χ(Q^n_C)` for every `n ≤ order` by the stratified route, sharing the
/// Hilbert-scheme and punctual tables across `n`.
pub fn chi_quot_stratified_all(setup: &CurveSetup) -> Result<Vec<BigInt>, InvariantError> {
    let strata = Strata::new(setup, setup.order);
    (0..=setup.order).map(|n| strata.term(n)).collect()
}

/// `Σ χ(Q^n_C) q^n = M(q)^{χ(Y)} (1-q)^{2g-2}`.
pub fn chi_quot_series(setup: &CurveSetup) -> PowerSeries {
    let curve = PowerSeries::binomial_series(Sign::Minus, setup.curve_exponent(), setup.order);
    &hilb_series(setup.chi_y, setup.order) * &curve
}

/// `Σ χ̃(Q^n_C) q^n = M(-q)^{χ(Y)} (1+q)^{2g-2}`.
///
/// Also evaluated as `chi_quot_series(q ↦ -q)`; the two must coincide.
pub fn weighted_chi_quot_series(setup: &CurveSetup) -> PowerSeries {
    let direct = weighted_chi_quot_direct(setup);
    let substituted = chi_quot_series(setup).substitute_neg();
    assert_eq!(
        direct, substituted,
        "signed Euler characteristic routes disagree for {setup:?}"
    );
    direct
}

fn weighted_chi_quot_direct(setup: &CurveSetup) -> PowerSeries {
    let signed_macmahon = PowerSeries::macmahon(setup.order)
        .substitute_neg()
        .pow_int(setup.chi_y)
        .expect("M(-q) has constant term 1");
    let curve = PowerSeries::binomial_series(Sign::Plus, setup.curve_exponent(), setup.order);
    &signed_macmahon * &curve
}

/// `PT_C(q) = n_{g,C} (1+q)^{2g-2}`.
pub fn pt_series(setup: &CurveSetup) -> PowerSeries {
    PowerSeries::binomial_series(Sign::Plus, setup.curve_exponent(), setup.order)
        .scale(&BigInt::from(setup.bps))
}

/// Macdonald's `Σ χ(Sym^n C) q^n = (1-q)^{-χ(C)}`.
pub fn sym_series(setup: &CurveSetup) -> PowerSeries {
    PowerSeries::binomial_series(Sign::Minus, setup.curve_exponent(), setup.order)
}

/// `DT_C(q) = M(-q)^{χ(Y)} · PT_C(q)`.
pub fn dt_series_conjectural(setup: &CurveSetup) -> PowerSeries {
    let signed_macmahon = PowerSeries::macmahon(setup.order)
        .substitute_neg()
        .pow_int(setup.chi_y)
        .expect("M(-q) has constant term 1");
    &signed_macmahon * &pt_series(setup)
}

/// Both sides of the wall-crossing equivalence, coefficient by coefficient:
/// the DT series against `n_{g,C} · χ̃(Q^n_C)`.
pub fn check_wallcross(setup: &CurveSetup) -> InvariantReport {
    let dt = dt_series_conjectural(setup).into_coeffs();
    let bps = BigInt::from(setup.bps);
    let weighted = weighted_chi_quot_series(setup).scale(&bps).into_coeffs();
    InvariantReport::new(*setup, "dt", dt).with_cross_check("bps_weighted_chi", weighted)
}

/// `Σ DT(M_n) q^{n+1} = q M(-q)/(1+q)`.
pub fn local_model_series(order: usize) -> Result<PowerSeries, InvariantError> {
    if order == 0 {
        return Err(InvariantError::OrderTooSmall);
    }
    let signed = local_euler_series(order).substitute_neg();
    Ok(signed.shift(1))
}

/// Stratified and closed-form routes side by side.
pub fn chi_quot_report(setup: &CurveSetup) -> Result<InvariantReport, InvariantError> {
    let stratified = chi_quot_stratified_all(setup)?;
    let series = chi_quot_series(setup).into_coeffs();
    Ok(
        InvariantReport::new(*setup, "chi_quot_stratified", stratified)
            .with_cross_check("chi_quot_series", series),
    )
}
