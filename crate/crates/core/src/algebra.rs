//! The Frank family of t-norms, their dual t-conorms and conjugates.
//!
//! For `s ∈ (0, ∞)`, `s ≠ 1`:
//!
//! ```text
//! t_s(x, y) = log_s(1 + (s^x − 1)(s^y − 1) / (s − 1))
//! ```
//!
//! The three limits are first-class: `s = 0` is `Min`, `s = 1` is the
//! product and `s = ∞` is the Łukasiewicz t-norm `Max(0, x + y − 1)`.
//! Two Frank t-norms with parameters `s` and `1/s` are conjugated, so the
//! Gödel (`Min`) and Łukasiewicz logics form a conjugate pair and the
//! product is self-conjugate.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Excursions outside `[0, 1]` up to this size are treated as rounding drift.
pub const CLAMP_TOLERANCE: f64 = 1e-12;

/// Parameters below this value evaluate the `Min` branch.
pub const MIN_BRANCH_THRESHOLD: f64 = 1e-12;
/// Parameters with `|s − 1|` below this value evaluate the product branch.
pub const PRODUCT_BRANCH_THRESHOLD: f64 = 1e-9;
/// Parameters above this value evaluate the Łukasiewicz branch.
pub const LUKASIEWICZ_BRANCH_THRESHOLD: f64 = 1e12;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("value {0} is outside [0, 1]")]
pub struct RangeError(pub f64);

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParameterError {
    #[error("Frank parameter must be a non-negative number, got {0}")]
    Negative(f64),
    #[error("Frank parameter is NaN")]
    NotANumber,
    #[error("cannot parse Frank parameter '{0}': expected min, prod, luk or a non-negative decimal")]
    Syntax(String),
}

/// A membership grade: a real number in `[0, 1]`.
#[derive(Debug, Clone, Copy, Default, PartialEq, PartialOrd)]
pub struct UnitValue(f64);

impl UnitValue {
    pub const ZERO: UnitValue = UnitValue(0.0);
    pub const ONE: UnitValue = UnitValue(1.0);

    pub fn new(value: f64) -> Result<Self, RangeError> {
        if (0.0..=1.0).contains(&value) {
            Ok(UnitValue(value))
        } else {
            Err(RangeError(value))
        }
    }

    /// Accepts values within `tolerance` of the interval and clamps them in.
    pub fn new_clamped(value: f64, tolerance: f64) -> Result<Self, RangeError> {
        if value >= -tolerance && value <= 1.0 + tolerance {
            Ok(UnitValue(value.clamp(0.0, 1.0)))
        } else {
            Err(RangeError(value))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// The standard negation `1 − x`.
    #[inline]
    pub fn negation(self) -> Self {
        UnitValue(1.0 - self.0)
    }
}

impl TryFrom<f64> for UnitValue {
    type Error = RangeError;

    fn try_from(value: f64) -> Result<Self, Self::Error> {
        UnitValue::new(value)
    }
}

impl From<UnitValue> for f64 {
    fn from(value: UnitValue) -> f64 {
        value.0
    }
}

impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Clamps floating drift back into `[0, 1]`.
///
/// Panics if the excursion exceeds [`CLAMP_TOLERANCE`]: that can only mean
/// an evaluation routine is broken, not that the caller passed bad data.
#[inline]
pub(crate) fn settle(value: f64) -> UnitValue {
    match UnitValue::new_clamped(value, CLAMP_TOLERANCE) {
        Ok(v) => v,
        Err(_) => panic!("internal consistency error: t-norm evaluation produced {value}"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Branch {
    Min,
    Product,
    Lukasiewicz,
    /// Natural logarithm of `s`.
    Finite(f64),
}

/// Selects one member of the Frank t-norm family, `s ∈ [0, ∞]`.
///
/// Finite parameters are stored as `ln s`, which makes conjugation
/// (`s ↦ 1/s`) an exact negation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrankParameter(Branch);

impl FrankParameter {
    /// `s = 0`: Gödel, `Min(x, y)`.
    pub const MIN: FrankParameter = FrankParameter(Branch::Min);
    /// `s = 1`: product, `x·y`.
    pub const PRODUCT: FrankParameter = FrankParameter(Branch::Product);
    /// `s = ∞`: Łukasiewicz, `Max(0, x + y − 1)`.
    pub const LUKASIEWICZ: FrankParameter = FrankParameter(Branch::Lukasiewicz);

    pub fn new(s: f64) -> Result<Self, ParameterError> {
        if s.is_nan() {
            return Err(ParameterError::NotANumber);
        }
        if s < 0.0 {
            return Err(ParameterError::Negative(s));
        }
        let branch = if s < MIN_BRANCH_THRESHOLD {
            Branch::Min
        } else if (s - 1.0).abs() < PRODUCT_BRANCH_THRESHOLD {
            Branch::Product
        } else if s > LUKASIEWICZ_BRANCH_THRESHOLD {
            Branch::Lukasiewicz
        } else {
            Branch::Finite(s.ln())
        };
        Ok(FrankParameter(branch))
    }

    /// The parameter value `s`, with `f64::INFINITY` for the Łukasiewicz limit.
    pub fn value(self) -> f64 {
        match self.0 {
            Branch::Min => 0.0,
            Branch::Product => 1.0,
            Branch::Lukasiewicz => f64::INFINITY,
            Branch::Finite(ln_s) => ln_s.exp(),
        }
    }

    /// The parameter `1/s` of the conjugate t-norm.
    pub fn conjugate(self) -> Self {
        FrankParameter(match self.0 {
            Branch::Min => Branch::Lukasiewicz,
            Branch::Lukasiewicz => Branch::Min,
            Branch::Product => Branch::Product,
            Branch::Finite(ln_s) => Branch::Finite(-ln_s),
        })
    }

    pub fn is_limit(self) -> bool {
        !matches!(self.0, Branch::Finite(_))
    }
}

impl Default for FrankParameter {
    fn default() -> Self {
        FrankParameter::MIN
    }
}

impl FromStr for FrankParameter {
    type Err = ParameterError;

    /// Accepts `min`, `prod`, `luk` (also `inf`) or a non-negative decimal.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        match text.trim() {
            "min" => Ok(FrankParameter::MIN),
            "prod" => Ok(FrankParameter::PRODUCT),
            "luk" | "inf" => Ok(FrankParameter::LUKASIEWICZ),
            other => {
                let s: f64 = other.parse().map_err(|_| ParameterError::Syntax(other.to_string()))?;
                FrankParameter::new(s)
            }
        }
    }
}

impl fmt::Display for FrankParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Branch::Min => f.write_str("min"),
            Branch::Product => f.write_str("prod"),
            Branch::Lukasiewicz => f.write_str("luk"),
            Branch::Finite(ln_s) => write!(f, "{}", ln_s.exp()),
        }
    }
}

/// The Frank t-norm `t_s(x, y)`.
pub fn tnorm(s: FrankParameter, x: UnitValue, y: UnitValue) -> UnitValue {
    let (a, b) = (x.get(), y.get());
    // Lattice corners are exact for every member of the family.
    if a == 0.0 || b == 0.0 {
        return UnitValue::ZERO;
    }
    if a == 1.0 {
        return y;
    }
    if b == 1.0 {
        return x;
    }
    let value = match s.0 {
        Branch::Min => a.min(b),
        Branch::Product => a * b,
        Branch::Lukasiewicz => (a + b - 1.0).max(0.0),
        Branch::Finite(ln_s) => {
            let ratio = (a * ln_s).exp_m1() * (b * ln_s).exp_m1() / ln_s.exp_m1();
            if ratio > -0.5 {
                ratio.ln_1p() / ln_s
            } else {
                // Only reachable for s < 1/2, where 1 + ratio cancels. Use
                // (1 + ratio)(1 − s) = s^x (1 − s^(1−x)) + s^y (1 − s^x),
                // a sum of non-negative terms.
                let parts = (a * ln_s).exp() * -((1.0 - a) * ln_s).exp_m1() + (b * ln_s).exp() * -(a * ln_s).exp_m1();
                (parts / -ln_s.exp_m1()).ln() / ln_s
            }
        }
    };
    settle(value)
}

/// The dual t-conorm `1 − t_s(1 − x, 1 − y)`.
///
/// The limits use their closed forms `Max(x, y)`, `x + y − x·y` and
/// `Min(1, x + y)`, which avoid the rounding of the double negation.
pub fn tconorm(s: FrankParameter, x: UnitValue, y: UnitValue) -> UnitValue {
    let (a, b) = (x.get(), y.get());
    if a == 0.0 {
        return y;
    }
    if b == 0.0 {
        return x;
    }
    if a == 1.0 || b == 1.0 {
        return UnitValue::ONE;
    }
    let value = match s.0 {
        Branch::Min => a.max(b),
        Branch::Product => a + b - a * b,
        Branch::Lukasiewicz => (a + b).min(1.0),
        Branch::Finite(_) => 1.0 - tnorm(s, x.negation(), y.negation()).get(),
    };
    settle(value)
}

/// The conjugate t-norm, i.e. the Frank t-norm with parameter `1/s`.
pub fn conjugate_tnorm(s: FrankParameter, x: UnitValue, y: UnitValue) -> UnitValue {
    tnorm(s.conjugate(), x, y)
}
