//! Truncated formal power series in one variable `q` with big-integer
//! coefficients.
//!
//! A [`PowerSeries`] of order `N` stores the coefficients of `q^0 ..= q^N`.
//! Binary operations truncate to the smaller of the two orders, so a result
//! never claims more precision than both of its inputs carry.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors raised by series construction and inversion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation order must be non-negative, got {0}")]
    NegativeOrder(i64),
    #[error("{given} coefficients do not fit in a series of order {order}")]
    TooManyCoefficients { given: usize, order: usize },
    #[error("constant term {0} is not a unit; the series has no inverse over the integers")]
    NotInvertible(BigInt),
    #[error("coefficient index {index} exceeds truncation order {order}")]
    IndexOutOfRange { index: usize, order: usize },
}

/// Sign of the linear term in `(1 ± q)^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn as_bigint(self) -> BigInt {
        match self {
            Sign::Plus => BigInt::one(),
            Sign::Minus => -BigInt::one(),
        }
    }
}

/// An immutable truncated power series `c_0 + c_1 q + ... + c_N q^N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    // invariant: coeffs.len() == order + 1
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    /// Builds a series from leading coefficients, padding with zeros up to
    /// `q^order`. A negative order is rejected.
    pub fn make<I, T>(coeffs: I, order: i64) -> Result<Self, SeriesError>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let order = usize::try_from(order).map_err(|_| SeriesError::NegativeOrder(order))?;
        Self::from_coeffs(coeffs.into_iter().map(Into::into).collect(), order)
    }

    /// Same as [`PowerSeries::make`] for an order that is already known to be valid.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>, order: usize) -> Result<Self, SeriesError> {
        if coeffs.len() > order + 1 {
            return Err(SeriesError::TooManyCoefficients {
                given: coeffs.len(),
                order,
            });
        }
        coeffs.resize(order + 1, BigInt::zero());
        Ok(PowerSeries { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigInt::one(), order)
    }

    pub fn constant(c: impl Into<BigInt>, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c.into();
        s
    }

    /// The variable `q` itself (truncated to `0` at order zero).
    pub fn variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigInt::one();
        }
        s
    }

    /// `1 + q + q^2 + ... + q^order`, i.e. `1/(1-q)`.
    pub fn geometric(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigInt::one(); order + 1],
        }
    }

    /// The MacMahon function `M(q) = ∏_{k≥1} (1-q^k)^{-k}`, the generating
    /// series of plane partitions.
    ///
    /// Each factor `(1-q^k)^{-1}` is applied in place as the recurrence
    /// `c_i += c_{i-k}`; factors with `k > order` are `1` at this truncation.
    pub fn macmahon(order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        for k in 1..=order {
            for _ in 0..k {
                for i in k..=order {
                    let prev = coeffs[i - k].clone();
                    coeffs[i] += prev;
                }
            }
        }
        PowerSeries { coeffs }
    }

    /// `(1 + sign·q)^exponent` for any integer exponent, from the
    /// generalized binomial coefficients `C(e, k)`.
    pub fn binomial_series(sign: Sign, exponent: i64, order: usize) -> Self {
        let e = BigInt::from(exponent);
        let s = sign.as_bigint();
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut binom = BigInt::one();
        let mut sign_pow = BigInt::one();
        coeffs.push(BigInt::one());
        for k in 1..=order {
            // C(e, k) = C(e, k-1) · (e - k + 1) / k, exact at every step.
            binom = binom * (&e - BigInt::from(k - 1)) / BigInt::from(k);
            sign_pow *= &s;
            coeffs.push(&binom * &sign_pow);
        }
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// The exact coefficient of `q^n`.
    pub fn coefficient(&self, n: usize) -> Result<&BigInt, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::IndexOutOfRange {
            index: n,
            order: self.order(),
        })
    }

    /// Drops every coefficient above `q^order`. Extending is not allowed.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Multiplies by `q^k`, keeping the current order.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k > self.order() {
                break;
            }
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        PowerSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        PowerSeries { coeffs }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    fn unit_constant(&self) -> Result<BigInt, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.abs().is_one() {
            Ok(c0.clone())
        } else {
            Err(SeriesError::NotInvertible(c0.clone()))
        }
    }

    /// Multiplicative inverse; requires the constant term to be `±1`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        // c0 is ±1, so it is its own inverse.
        let c0 = self.unit_constant()?;
        let order = self.order();
        let mut inv: Vec<BigInt> = Vec::with_capacity(order + 1);
        inv.push(c0.clone());
        for k in 1..=order {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &inv[k - i];
            }
            inv.push(-(&c0 * acc));
        }
        Ok(PowerSeries { coeffs: inv })
    }

    /// Integer power. Negative exponents go through [`PowerSeries::inverse`]
    /// and therefore need a unit constant term.
    pub fn pow_int(&self, e: i64) -> Result<Self, SeriesError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut result = Self::one(self.order());
        let mut square = base;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&square);
            }
            exp >>= 1;
            if exp > 0 {
                square = square.mul(&square);
            }
        }
        Ok(result)
    }

    /// The substitution `q ↦ -q`: flips the sign of every odd coefficient.
    pub fn substitute_neg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        PowerSeries { coeffs }
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(q^{})]", self.order() + 1)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}")?,
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::add(self, rhs)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::sub(self, rhs)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::mul(self, rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
