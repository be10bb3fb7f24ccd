//! Bipolar pairs `(x, y)` decomposed into the five descriptors truth `τ`,
//! falsity `φ`, contradiction `κ`, undefinedness `π` and indeterminacy `ι`.
//!
//! With `∘` a Frank t-norm, `•` its conjugate and `⊕` its t-conorm:
//!
//! ```text
//! τ = x • ȳ
//! φ = x̄ • y
//! π = (x̄ ∘ ȳ) • (x̄ ⊕ ȳ)
//! κ = (x ∘ y) • (x ⊕ y)
//! ι = 2 · (x̄ ∘ ȳ ∘ x ∘ y)
//! ```
//!
//! The five sum to one for every `s`, and `x = τ + κ + ι/2`,
//! `y = φ + κ + ι/2` recovers the pair.

use thiserror::Error;

use crate::algebra::{conjugate_tnorm, tconorm, tnorm, FrankParameter, RangeError, UnitValue};

/// Tolerance on the partition of unity.
pub const PARTITION_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DecompositionError {
    #[error(transparent)]
    Range(#[from] RangeError),
    #[error("descriptors sum to {sum}, not 1")]
    PartitionViolation { sum: f64 },
    #[error("internal consistency error: indeterminacy residual {0} is negative")]
    NegativeResidual(f64),
}

/// A membership / non-membership pair with no joint constraint.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BipolarPair {
    pub x: UnitValue,
    pub y: UnitValue,
}

impl BipolarPair {
    pub fn new(x: f64, y: f64) -> Result<Self, RangeError> {
        Ok(BipolarPair {
            x: UnitValue::new(x)?,
            y: UnitValue::new(y)?,
        })
    }

    /// The pair with both coordinates negated, `(1 − x, 1 − y)`.
    pub fn negation(self) -> Self {
        BipolarPair {
            x: self.x.negation(),
            y: self.y.negation(),
        }
    }

    pub fn swapped(self) -> Self {
        BipolarPair { x: self.y, y: self.x }
    }
}

/// The five descriptors `(τ, φ, κ, π, ι)`, a partition of unity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PentaCoords {
    tau: f64,
    phi: f64,
    kappa: f64,
    pi: f64,
    iota: f64,
}

impl PentaCoords {
    /// Validates each descriptor against `[0, 1]` and the sum against 1.
    pub fn new(tau: f64, phi: f64, kappa: f64, pi: f64, iota: f64) -> Result<Self, DecompositionError> {
        for v in [tau, phi, kappa, pi, iota] {
            UnitValue::new(v)?;
        }
        let sum = tau + phi + kappa + pi + iota;
        if (sum - 1.0).abs() > PARTITION_TOLERANCE {
            return Err(DecompositionError::PartitionViolation { sum });
        }
        Ok(PentaCoords {
            tau,
            phi,
            kappa,
            pi,
            iota,
        })
    }

    /// Builds the descriptors from `τ, φ, κ, π`, taking `ι` as the residual.
    pub fn from_four(tau: f64, phi: f64, kappa: f64, pi: f64) -> Result<Self, DecompositionError> {
        for v in [tau, phi, kappa, pi] {
            UnitValue::new(v)?;
        }
        let iota = residual(tau, phi, kappa, pi)?;
        Ok(PentaCoords {
            tau,
            phi,
            kappa,
            pi,
            iota,
        })
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn pi(&self) -> f64 {
        self.pi
    }

    pub fn iota(&self) -> f64 {
        self.iota
    }

    /// `[τ, φ, κ, π, ι]`
    pub fn to_array(&self) -> [f64; 5] {
        [self.tau, self.phi, self.kappa, self.pi, self.iota]
    }

    pub fn sum(&self) -> f64 {
        self.tau + self.phi + self.kappa + self.pi + self.iota
    }
}

fn residual(tau: f64, phi: f64, kappa: f64, pi: f64) -> Result<f64, DecompositionError> {
    let sum = tau + phi + kappa + pi;
    let iota = 1.0 - sum;
    if iota < -PARTITION_TOLERANCE {
        return Err(DecompositionError::PartitionViolation { sum });
    }
    Ok(iota.max(0.0))
}

/// Decomposes `pair` with the Frank t-norm selected by `s`.
///
/// `ι` is the residual `1 − τ − φ − κ − π`; see
/// [`indeterminacy_direct`] for the product form.
pub fn decompose(pair: BipolarPair, s: FrankParameter) -> Result<PentaCoords, DecompositionError> {
    let BipolarPair { x, y } = pair;
    let (nx, ny) = (x.negation(), y.negation());

    let tau = conjugate_tnorm(s, x, ny).get();
    let phi = conjugate_tnorm(s, nx, y).get();
    let pi = conjugate_tnorm(s, tnorm(s, nx, ny), tconorm(s, nx, ny)).get();
    let kappa = conjugate_tnorm(s, tnorm(s, x, y), tconorm(s, x, y)).get();

    let iota = 1.0 - (tau + phi + kappa + pi);
    if iota < -PARTITION_TOLERANCE {
        return Err(DecompositionError::NegativeResidual(iota));
    }
    Ok(PentaCoords {
        tau,
        phi,
        kappa,
        pi,
        iota: iota.max(0.0),
    })
}

/// `2 · (x̄ ∘ ȳ ∘ x ∘ y)`, folded left to right.
pub fn indeterminacy_direct(pair: BipolarPair, s: FrankParameter) -> f64 {
    let BipolarPair { x, y } = pair;
    let quad = [y.negation(), x, y]
        .into_iter()
        .fold(x.negation(), |acc, v| tnorm(s, acc, v));
    2.0 * quad.get()
}

/// Closed form of [`decompose`] for the Łukasiewicz–Gödel pair (`s = 0`).
pub fn decompose_lg(pair: BipolarPair) -> PentaCoords {
    let (x, y) = (pair.x.get(), pair.y.get());
    let diff = x - y;
    let excess = x + y - 1.0;
    let iota = 1.0 - diff.abs() - excess.abs();
    PentaCoords {
        tau: diff.max(0.0),
        phi: (-diff).max(0.0),
        kappa: excess.max(0.0),
        pi: (-excess).max(0.0),
        // |x − y| + |x + y − 1| = 2·max(|x − ½|, |y − ½|) ≤ 1
        iota: iota.max(0.0),
    }
}

/// The inverse transform `x = τ + κ + ι/2`, `y = φ + κ + ι/2`.
pub fn compose(coords: &PentaCoords) -> BipolarPair {
    let half = coords.iota / 2.0;
    // PentaCoords admits sums up to 1 + PARTITION_TOLERANCE.
    let clamp = |v: f64| UnitValue::new(v.clamp(0.0, 1.0)).expect("clamped");
    BipolarPair {
        x: clamp(coords.tau + coords.kappa + half),
        y: clamp(coords.phi + coords.kappa + half),
    }
}
