//! Penta-valued fuzzy sets (FP5) over a finite, ordered universe.
//!
//! Each element carries truth `τ`, falsity `φ`, contradiction `κ` and
//! undefinedness `π` with `τ + φ + κ + π ≤ 1`; indeterminacy
//! `ι = 1 − τ − φ − κ − π` is always derived, never stored.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{tconorm, tnorm, FrankParameter, ParameterError, UnitValue};
use crate::decomposition::{decompose_lg, BipolarPair, PentaCoords};
use crate::logic::PentaTruthValue;

/// Absolute tolerance for every set-level constraint.
pub const CONSTRAINT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GradeError {
    #[error("{field} = {value} is outside [0, 1]")]
    Range { field: &'static str, value: f64 },
    #[error("tau+phi+kappa+pi = {sum} exceeds 1")]
    Constraint { sum: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SetError {
    #[error("element '{0}' appears more than once")]
    DuplicateElement(String),
    #[error("element '{element}': {source}")]
    Grade { element: String, source: GradeError },
    #[error("element '{element}': {field} = {value} is outside [0, 1]")]
    Range {
        element: String,
        field: &'static str,
        value: f64,
    },
    #[error("universes differ at position {position}: {}", mismatch(.left, .right))]
    UniverseMismatch {
        position: usize,
        left: Option<String>,
        right: Option<String>,
    },
    #[error(
        "element '{element}': result ({tau}, {phi}, {kappa}, {pi}) sums to {} > 1 (operands {left} and {right})",
        tau + phi + kappa + pi
    )]
    ConstraintViolation {
        element: String,
        tau: f64,
        phi: f64,
        kappa: f64,
        pi: f64,
        left: Fp5Grade,
        right: Fp5Grade,
    },
    #[error("element '{element}': mu = {mu}, nu = {nu} violates the {kind} constraint")]
    InputConstraint {
        element: String,
        kind: InputKind,
        mu: f64,
        nu: f64,
    },
}

fn mismatch(left: &Option<String>, right: &Option<String>) -> String {
    match (left, right) {
        (Some(l), Some(r)) => format!("'{l}' vs '{r}'"),
        (Some(l), None) => format!("'{l}' has no counterpart"),
        (None, Some(r)) => format!("'{r}' has no counterpart"),
        (None, None) => "no element".to_string(),
    }
}

/// The four stored descriptors of one FP5 element.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fp5Grade {
    tau: f64,
    phi: f64,
    kappa: f64,
    pi: f64,
}

impl Fp5Grade {
    pub const TRUE: Fp5Grade = Fp5Grade::crisp(1.0, 0.0, 0.0, 0.0);
    pub const FALSE: Fp5Grade = Fp5Grade::crisp(0.0, 1.0, 0.0, 0.0);
    pub const CONTRADICTORY: Fp5Grade = Fp5Grade::crisp(0.0, 0.0, 1.0, 0.0);
    pub const UNDEFINED: Fp5Grade = Fp5Grade::crisp(0.0, 0.0, 0.0, 1.0);
    pub const INDETERMINATE: Fp5Grade = Fp5Grade::crisp(0.0, 0.0, 0.0, 0.0);

    const fn crisp(tau: f64, phi: f64, kappa: f64, pi: f64) -> Self {
        Fp5Grade { tau, phi, kappa, pi }
    }

    pub fn new(tau: f64, phi: f64, kappa: f64, pi: f64) -> Result<Self, GradeError> {
        for (field, value) in [("tau", tau), ("phi", phi), ("kappa", kappa), ("pi", pi)] {
            if UnitValue::new(value).is_err() {
                return Err(GradeError::Range { field, value });
            }
        }
        let sum = tau + phi + kappa + pi;
        if sum > 1.0 + CONSTRAINT_TOLERANCE {
            return Err(GradeError::Constraint { sum });
        }
        Ok(Fp5Grade { tau, phi, kappa, pi })
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

    /// `1 − τ − φ − κ − π`, floored at zero for sums within tolerance of 1.
    pub fn iota(&self) -> f64 {
        (1.0 - (self.tau + self.phi + self.kappa + self.pi)).max(0.0)
    }

    pub fn to_coords(&self) -> PentaCoords {
        PentaCoords::new(self.tau, self.phi, self.kappa, self.pi, self.iota())
            .expect("validated grade forms a partition")
    }

    pub fn from_coords(coords: &PentaCoords) -> Self {
        Fp5Grade {
            tau: coords.tau(),
            phi: coords.phi(),
            kappa: coords.kappa(),
            pi: coords.pi(),
        }
    }

    pub fn from_truth_value(value: PentaTruthValue) -> Self {
        match value {
            PentaTruthValue::True => Self::TRUE,
            PentaTruthValue::False => Self::FALSE,
            PentaTruthValue::Contradictory => Self::CONTRADICTORY,
            PentaTruthValue::Undefined => Self::UNDEFINED,
            PentaTruthValue::Indeterminate => Self::INDETERMINATE,
        }
    }

    /// The crisp value this grade sits on, if it is one of the five vertices.
    pub fn truth_value(&self) -> Option<PentaTruthValue> {
        PentaTruthValue::ALL
            .into_iter()
            .find(|v| Self::from_truth_value(*v) == *self)
    }

    /// Swaps truth and falsity.
    pub fn complement(&self) -> Self {
        Fp5Grade {
            tau: self.phi,
            phi: self.tau,
            ..*self
        }
    }
}

impl fmt::Display for Fp5Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.tau, self.phi, self.kappa, self.pi)
    }
}

/// The t-conorm / t-norm pair used by union and intersection.
///
/// Every couple is a dual pair drawn from the Frank family.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum NormCouple {
    #[default]
    MaxMin,
    ProductProbSum,
    LukasiewiczBounded,
    Frank(FrankParameter),
}

impl NormCouple {
    pub fn parameter(&self) -> FrankParameter {
        match self {
            NormCouple::MaxMin => FrankParameter::MIN,
            NormCouple::ProductProbSum => FrankParameter::PRODUCT,
            NormCouple::LukasiewiczBounded => FrankParameter::LUKASIEWICZ,
            NormCouple::Frank(s) => *s,
        }
    }

    /// `∧`
    pub fn norm(&self, a: f64, b: f64) -> f64 {
        tnorm(self.parameter(), unit(a), unit(b)).get()
    }

    /// `∨`
    pub fn conorm(&self, a: f64, b: f64) -> f64 {
        tconorm(self.parameter(), unit(a), unit(b)).get()
    }
}

fn unit(v: f64) -> UnitValue {
    UnitValue::new(v).expect("grade coordinates are validated on construction")
}

impl FromStr for NormCouple {
    type Err = ParameterError;

    /// `minmax`, `prod`, `luk` or `frank:<s>`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        match text.trim() {
            "minmax" => Ok(NormCouple::MaxMin),
            "prod" => Ok(NormCouple::ProductProbSum),
            "luk" => Ok(NormCouple::LukasiewiczBounded),
            other => match other.strip_prefix("frank:") {
                Some(value) => value.parse().map(NormCouple::Frank),
                None => Err(ParameterError::Syntax(other.to_string())),
            },
        }
    }
}

impl fmt::Display for NormCouple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormCouple::MaxMin => f.write_str("minmax"),
            NormCouple::ProductProbSum => f.write_str("prod"),
            NormCouple::LukasiewiczBounded => f.write_str("luk"),
            NormCouple::Frank(s) => write!(f, "frank:{s}"),
        }
    }
}

fn check_unique<'a>(ids: impl IntoIterator<Item = &'a String>) -> Result<(), SetError> {
    let mut seen = HashSet::new();
    for id in ids {
        if !seen.insert(id.as_str()) {
            return Err(SetError::DuplicateElement(id.clone()));
        }
    }
    Ok(())
}

/// A penta-valued fuzzy set over an ordered universe of unique identifiers.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FP5Set {
    universe: Vec<String>,
    grades: Vec<Fp5Grade>,
}

impl FP5Set {
    pub fn new<S: Into<String>>(elements: impl IntoIterator<Item = (S, Fp5Grade)>) -> Result<Self, SetError> {
        let (universe, grades): (Vec<String>, Vec<Fp5Grade>) =
            elements.into_iter().map(|(id, g)| (id.into(), g)).unzip();
        check_unique(&universe)?;
        Ok(FP5Set { universe, grades })
    }

    /// Builds a set from raw `[τ, φ, κ, π]` rows, validating each one.
    pub fn from_rows<S: Into<String>>(rows: impl IntoIterator<Item = (S, [f64; 4])>) -> Result<Self, SetError> {
        let elements = rows
            .into_iter()
            .map(|(id, [tau, phi, kappa, pi])| {
                let element = id.into();
                match Fp5Grade::new(tau, phi, kappa, pi) {
                    Ok(grade) => Ok((element, grade)),
                    Err(source) => Err(SetError::Grade { element, source }),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        FP5Set::new(elements)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    pub fn get(&self, element: &str) -> Option<Fp5Grade> {
        self.universe
            .iter()
            .position(|id| id == element)
            .map(|i| self.grades[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Fp5Grade)> {
        self.universe
            .iter()
            .map(String::as_str)
            .zip(self.grades.iter().copied())
    }

    fn check_same_universe(&self, other: &FP5Set) -> Result<(), SetError> {
        let longest = self.len().max(other.len());
        for position in 0..longest {
            let (left, right) = (self.universe.get(position), other.universe.get(position));
            if left != right {
                return Err(SetError::UniverseMismatch {
                    position: position + 1,
                    left: left.cloned(),
                    right: right.cloned(),
                });
            }
        }
        Ok(())
    }

    fn combine(&self, other: &FP5Set, op: impl Fn(&Fp5Grade, &Fp5Grade) -> [f64; 4]) -> Result<FP5Set, SetError> {
        self.check_same_universe(other)?;
        let grades = self
            .iter()
            .zip(&other.grades)
            .map(|((element, a), b)| {
                let [tau, phi, kappa, pi] = op(&a, b);
                Fp5Grade::new(tau, phi, kappa, pi).map_err(|_| SetError::ConstraintViolation {
                    element: element.to_string(),
                    tau,
                    phi,
                    kappa,
                    pi,
                    left: a,
                    right: *b,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FP5Set {
            universe: self.universe.clone(),
            grades,
        })
    }
}

/// `τ = τ_A ∨ τ_B`, `φ = φ_A ∧ φ_B`, `π = π_A ∧ π_B`, `κ = κ_A ∧ κ_B`.
pub fn union(a: &FP5Set, b: &FP5Set, couple: NormCouple) -> Result<FP5Set, SetError> {
    a.combine(b, |x, y| {
        [
            couple.conorm(x.tau, y.tau),
            couple.norm(x.phi, y.phi),
            couple.norm(x.kappa, y.kappa),
            couple.norm(x.pi, y.pi),
        ]
    })
}

/// `τ = τ_A ∧ τ_B`, `φ = φ_A ∨ φ_B`, `π = π_A ∧ π_B`, `κ = κ_A ∧ κ_B`.
pub fn intersection(a: &FP5Set, b: &FP5Set, couple: NormCouple) -> Result<FP5Set, SetError> {
    a.combine(b, |x, y| {
        [
            couple.norm(x.tau, y.tau),
            couple.conorm(x.phi, y.phi),
            couple.norm(x.kappa, y.kappa),
            couple.norm(x.pi, y.pi),
        ]
    })
}

pub fn complement(a: &FP5Set) -> FP5Set {
    FP5Set {
        universe: a.universe.clone(),
        grades: a.grades.iter().map(Fp5Grade::complement).collect(),
    }
}

/// Membership `μ` and non-membership `ν` per element, jointly unconstrained.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BipolarInputSet {
    universe: Vec<String>,
    pairs: Vec<BipolarPair>,
}

impl BipolarInputSet {
    pub fn new<S: Into<String>>(elements: impl IntoIterator<Item = (S, BipolarPair)>) -> Result<Self, SetError> {
        let (universe, pairs): (Vec<String>, Vec<BipolarPair>) =
            elements.into_iter().map(|(id, p)| (id.into(), p)).unzip();
        check_unique(&universe)?;
        Ok(BipolarInputSet { universe, pairs })
    }

    /// Builds a set from raw `(μ, ν)` rows.
    pub fn from_rows<S: Into<String>>(rows: impl IntoIterator<Item = (S, f64, f64)>) -> Result<Self, SetError> {
        let elements = rows
            .into_iter()
            .map(|(id, mu, nu)| {
                let element = id.into();
                for (field, value) in [("mu", mu), ("nu", nu)] {
                    if UnitValue::new(value).is_err() {
                        return Err(SetError::Range { element, field, value });
                    }
                }
                let pair = BipolarPair::new(mu, nu).expect("checked");
                Ok((element, pair))
            })
            .collect::<Result<Vec<_>, _>>()?;
        BipolarInputSet::new(elements)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, BipolarPair)> {
        self.universe.iter().map(String::as_str).zip(self.pairs.iter().copied())
    }

    pub fn get(&self, element: &str) -> Option<BipolarPair> {
        self.universe.iter().position(|id| id == element).map(|i| self.pairs[i])
    }
}

/// A classical fuzzy set: membership only, `ν = 1 − μ` implied.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FuzzySet {
    universe: Vec<String>,
    memberships: Vec<UnitValue>,
}

impl FuzzySet {
    pub fn new<S: Into<String>>(elements: impl IntoIterator<Item = (S, UnitValue)>) -> Result<Self, SetError> {
        let (universe, memberships): (Vec<String>, Vec<UnitValue>) =
            elements.into_iter().map(|(id, mu)| (id.into(), mu)).unzip();
        check_unique(&universe)?;
        Ok(FuzzySet { universe, memberships })
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, UnitValue)> {
        self.universe
            .iter()
            .map(String::as_str)
            .zip(self.memberships.iter().copied())
    }

    /// The equivalent bipolar set `(μ, 1 − μ)`.
    pub fn to_bipolar(&self) -> BipolarInputSet {
        BipolarInputSet {
            universe: self.universe.clone(),
            pairs: self
                .memberships
                .iter()
                .map(|mu| BipolarPair {
                    x: *mu,
                    y: mu.negation(),
                })
                .collect(),
        }
    }
}

/// The family a bipolar input is claimed to belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InputKind {
    /// `μ + ν = 1`
    Fuzzy,
    /// `μ + ν ≤ 1`
    Intuitionistic,
    /// `μ + ν ≥ 1`
    Paraconsistent,
    /// no constraint
    Bipolar,
}

impl InputKind {
    /// The index the kind attaches to each element: the uncertainty
    /// `π = 1 − μ − ν` for intuitionistic sets, the contradiction
    /// `κ = μ + ν − 1` for paraconsistent ones, and the deviation
    /// `μ + ν − 1` from the partition for fuzzy sets.
    pub fn index(self, pair: BipolarPair) -> Option<f64> {
        let sum = pair.x.get() + pair.y.get();
        match self {
            InputKind::Fuzzy | InputKind::Paraconsistent => Some(sum - 1.0),
            InputKind::Intuitionistic => Some(1.0 - sum),
            InputKind::Bipolar => None,
        }
    }

    pub fn admits(self, pair: BipolarPair) -> bool {
        match (self, self.index(pair)) {
            (InputKind::Fuzzy, Some(deviation)) => deviation.abs() <= CONSTRAINT_TOLERANCE,
            (_, Some(index)) => index >= -CONSTRAINT_TOLERANCE,
            (_, None) => true,
        }
    }
}

impl fmt::Display for InputKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputKind::Fuzzy => "fuzzy",
            InputKind::Intuitionistic => "intuitionistic",
            InputKind::Paraconsistent => "paraconsistent",
            InputKind::Bipolar => "bipolar",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub element: String,
    pub kind: InputKind,
    pub mu: f64,
    pub nu: f64,
    /// See [`InputKind::index`].
    pub index: f64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "element '{}': mu + nu = {} violates the {} constraint",
            self.element,
            self.mu + self.nu,
            self.kind
        )
    }
}

/// Elements that break `kind`'s constraint; empty when all comply.
pub fn validate(input: &BipolarInputSet, kind: InputKind) -> Vec<Violation> {
    input
        .iter()
        .filter(|(_, pair)| !kind.admits(*pair))
        .map(|(element, pair)| Violation {
            element: element.to_string(),
            kind,
            mu: pair.x.get(),
            nu: pair.y.get(),
            index: kind.index(pair).unwrap_or(0.0),
        })
        .collect()
}

fn first_violation(input: &BipolarInputSet, kind: InputKind) -> Result<(), SetError> {
    match validate(input, kind).into_iter().next() {
        Some(v) => Err(SetError::InputConstraint {
            element: v.element,
            kind,
            mu: v.mu,
            nu: v.nu,
        }),
        None => Ok(()),
    }
}

fn translate(universe: &[String], grades: impl Iterator<Item = [f64; 4]>) -> FP5Set {
    let grades = grades
        .map(|[tau, phi, kappa, pi]| {
            // Translators produce partitions by construction; absorb rounding.
            let c = |v: f64| v.clamp(0.0, 1.0);
            Fp5Grade::new(c(tau), c(phi), c(kappa), c(pi)).expect("translator output is a partition")
        })
        .collect();
    FP5Set {
        universe: universe.to_vec(),
        grades,
    }
}

/// Element-wise Łukasiewicz–Gödel decomposition of `(μ, ν)`.
pub fn from_bipolar(input: &BipolarInputSet) -> FP5Set {
    translate(
        &input.universe,
        input.pairs.iter().map(|p| {
            let c = decompose_lg(*p);
            [c.tau(), c.phi(), c.kappa(), c.pi()]
        }),
    )
}

/// `τ = (2μ − 1)₊`, `φ = (1 − 2μ)₊`, `κ = π = 0`.
pub fn from_fuzzy(input: &FuzzySet) -> FP5Set {
    translate(
        &input.universe,
        input.memberships.iter().map(|mu| {
            let d = 2.0 * mu.get() - 1.0;
            [d.max(0.0), (-d).max(0.0), 0.0, 0.0]
        }),
    )
}

/// `τ = (μ − ν)₊`, `φ = (ν − μ)₊`, `π = 1 − μ − ν`, `κ = 0`; needs `μ + ν ≤ 1`.
pub fn from_intuitionistic(input: &BipolarInputSet) -> Result<FP5Set, SetError> {
    first_violation(input, InputKind::Intuitionistic)?;
    Ok(translate(
        &input.universe,
        input.pairs.iter().map(|p| {
            let (mu, nu) = (p.x.get(), p.y.get());
            [(mu - nu).max(0.0), (nu - mu).max(0.0), 0.0, 1.0 - mu - nu]
        }),
    ))
}

/// `τ = (μ − ν)₊`, `φ = (ν − μ)₊`, `κ = μ + ν − 1`, `π = 0`; needs `μ + ν ≥ 1`.
pub fn from_paraconsistent(input: &BipolarInputSet) -> Result<FP5Set, SetError> {
    first_violation(input, InputKind::Paraconsistent)?;
    Ok(translate(
        &input.universe,
        input.pairs.iter().map(|p| {
            let (mu, nu) = (p.x.get(), p.y.get());
            [(mu - nu).max(0.0), (nu - mu).max(0.0), mu + nu - 1.0, 0.0]
        }),
    ))
}

/// `μ = τ + κ + ι/2`, `ν = φ + κ + ι/2`.
pub fn to_bipolar(set: &FP5Set) -> BipolarInputSet {
    BipolarInputSet {
        universe: set.universe.clone(),
        pairs: set
            .grades
            .iter()
            .map(|g| crate::decomposition::compose(&g.to_coords()))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use PentaTruthValue::*;

    fn single(grade: Fp5Grade) -> FP5Set {
        FP5Set::new([("e1", grade)]).unwrap()
    }

    fn grade(tau: f64, phi: f64, kappa: f64, pi: f64) -> Fp5Grade {
        Fp5Grade::new(tau, phi, kappa, pi).unwrap()
    }

    fn only(set: &FP5Set) -> Fp5Grade {
        set.iter().next().unwrap().1
    }

    fn assert_grade(actual: Fp5Grade, expected: [f64; 5]) {
        let got = [actual.tau(), actual.phi(), actual.kappa(), actual.pi(), actual.iota()];
        for (a, e) in got.iter().zip(expected) {
            assert!((a - e).abs() < 1e-12, "{got:?} vs {expected:?}");
        }
    }

    fn bipolar(mu: f64, nu: f64) -> BipolarInputSet {
        BipolarInputSet::from_rows([("e1", mu, nu)]).unwrap()
    }

    #[test]
    fn union_examples() {
        let u = union(
            &single(Fp5Grade::UNDEFINED),
            &single(Fp5Grade::CONTRADICTORY),
            NormCouple::MaxMin,
        )
        .unwrap();
        assert_eq!(only(&u), Fp5Grade::INDETERMINATE);
        assert_eq!(only(&u).iota(), 1.0);
        let u = union(&single(Fp5Grade::TRUE), &single(Fp5Grade::FALSE), NormCouple::MaxMin).unwrap();
        assert_eq!(only(&u).truth_value(), Some(True));
        let half = single(grade(0.5, 0.0, 0.5, 0.0));
        assert_eq!(union(&half, &half, NormCouple::MaxMin).unwrap(), half);
    }

    #[test]
    fn intersection_examples() {
        let i = intersection(
            &single(Fp5Grade::UNDEFINED),
            &single(Fp5Grade::TRUE),
            NormCouple::MaxMin,
        )
        .unwrap();
        assert_eq!(only(&i).truth_value(), Some(Indeterminate));
        let i = intersection(
            &single(Fp5Grade::CONTRADICTORY),
            &single(Fp5Grade::FALSE),
            NormCouple::MaxMin,
        )
        .unwrap();
        assert_eq!(only(&i).truth_value(), Some(False));
        let a = single(grade(0.3, 0.2, 0.1, 0.2));
        assert_eq!(intersection(&a, &a, NormCouple::MaxMin).unwrap(), a);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(only(&complement(&single(Fp5Grade::TRUE))), Fp5Grade::FALSE);
        assert_eq!(
            only(&complement(&single(Fp5Grade::CONTRADICTORY))),
            Fp5Grade::CONTRADICTORY
        );
        assert_grade(
            only(&complement(&single(grade(0.3, 0.2, 0.1, 0.2)))),
            [0.2, 0.3, 0.1, 0.2, 0.2],
        );
    }

    #[test]
    fn universe_mismatch_names_first_difference() {
        let a = FP5Set::new([("e1", Fp5Grade::TRUE), ("e2", Fp5Grade::TRUE)]).unwrap();
        let b = FP5Set::new([("e1", Fp5Grade::TRUE), ("e3", Fp5Grade::TRUE)]).unwrap();
        let err = union(&a, &b, NormCouple::MaxMin).unwrap_err();
        assert_eq!(
            err,
            SetError::UniverseMismatch {
                position: 2,
                left: Some("e2".into()),
                right: Some("e3".into())
            }
        );
        assert_eq!(err.to_string(), "universes differ at position 2: 'e2' vs 'e3'");
        let short = FP5Set::new([("e1", Fp5Grade::TRUE)]).unwrap();
        assert!(matches!(
            intersection(&a, &short, NormCouple::MaxMin),
            Err(SetError::UniverseMismatch {
                position: 2,
                right: None,
                ..
            })
        ));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            FP5Set::new([("a", Fp5Grade::TRUE), ("a", Fp5Grade::FALSE)]),
            Err(SetError::DuplicateElement(id)) if id == "a"
        ));
        assert!(matches!(
            FP5Set::from_rows([("x", [0.6, 0.6, 0.0, 0.0])]),
            Err(SetError::Grade {
                source: GradeError::Constraint { .. },
                ..
            })
        ));
        assert!(matches!(
            FP5Set::from_rows([("x", [1.5, 0.0, 0.0, 0.0])]),
            Err(SetError::Grade {
                source: GradeError::Range { field: "tau", .. },
                ..
            })
        ));
        assert!(matches!(
            BipolarInputSet::from_rows([("x", 0.2, -0.1)]),
            Err(SetError::Range { field: "nu", .. })
        ));
    }

    #[test]
    fn bipolar_translator_examples() {
        assert_grade(only(&from_bipolar(&bipolar(0.7, 0.2))), [0.5, 0.0, 0.0, 0.1, 0.4]);
        assert_grade(only(&from_bipolar(&bipolar(1.0, 1.0))), [0.0, 0.0, 1.0, 0.0, 0.0]);
        assert_grade(only(&from_bipolar(&bipolar(0.5, 0.5))), [0.0, 0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn fuzzy_translator_examples() {
        let fs = |mu: f64| FuzzySet::new([("e1", UnitValue::new(mu).unwrap())]).unwrap();
        assert_grade(only(&from_fuzzy(&fs(0.8))), [0.6, 0.0, 0.0, 0.0, 0.4]);
        assert_grade(only(&from_fuzzy(&fs(0.5))), [0.0, 0.0, 0.0, 0.0, 1.0]);
        assert_eq!(only(&from_fuzzy(&fs(1.0))), Fp5Grade::TRUE);
    }

    #[test]
    fn intuitionistic_translator_examples() {
        assert_grade(
            only(&from_intuitionistic(&bipolar(0.3, 0.3)).unwrap()),
            [0.0, 0.0, 0.0, 0.4, 0.6],
        );
        assert_eq!(
            only(&from_intuitionistic(&bipolar(0.0, 0.0)).unwrap()),
            Fp5Grade::UNDEFINED
        );
        assert_grade(
            only(&from_intuitionistic(&bipolar(0.6, 0.1)).unwrap()),
            [0.5, 0.0, 0.0, 0.3, 0.2],
        );
        let err = from_intuitionistic(&bipolar(0.8, 0.7)).unwrap_err();
        assert!(matches!(err, SetError::InputConstraint { ref element, .. } if element == "e1"));
    }

    #[test]
    fn paraconsistent_translator_examples() {
        assert_grade(
            only(&from_paraconsistent(&bipolar(0.8, 0.7)).unwrap()),
            [0.1, 0.0, 0.5, 0.0, 0.4],
        );
        assert_eq!(
            only(&from_paraconsistent(&bipolar(1.0, 1.0)).unwrap()),
            Fp5Grade::CONTRADICTORY
        );
        assert_grade(
            only(&from_paraconsistent(&bipolar(0.5, 0.5)).unwrap()),
            [0.0, 0.0, 0.0, 0.0, 1.0],
        );
        assert!(from_paraconsistent(&bipolar(0.3, 0.3)).is_err());
    }

    #[test]
    fn to_bipolar_examples() {
        let back = to_bipolar(&FP5Set::from_rows([("e1", [0.5, 0.0, 0.0, 0.1])]).unwrap());
        let p = back.get("e1").unwrap();
        assert!((p.x.get() - 0.7).abs() < 1e-12 && (p.y.get() - 0.2).abs() < 1e-12);
        assert_eq!(
            to_bipolar(&single(Fp5Grade::TRUE)).get("e1").unwrap(),
            BipolarPair::new(1.0, 0.0).unwrap()
        );
        assert_eq!(
            to_bipolar(&single(Fp5Grade::INDETERMINATE)).get("e1").unwrap(),
            BipolarPair::new(0.5, 0.5).unwrap()
        );
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&bipolar(0.8, 0.2), InputKind::Fuzzy).is_empty());
        let v = validate(&bipolar(0.8, 0.7), InputKind::Intuitionistic);
        assert_eq!(v.len(), 1);
        assert!((v[0].index + 0.5).abs() < 1e-12);
        assert!(validate(&bipolar(0.9, 0.9), InputKind::Bipolar).is_empty());
        assert!(validate(&bipolar(0.2, 0.3), InputKind::Paraconsistent).len() == 1);
        assert!(validate(&bipolar(0.2, 0.3), InputKind::Fuzzy).len() == 1);
        assert!(validate(&bipolar(0.5, 0.5 + 5e-10), InputKind::Intuitionistic).is_empty());
    }

    #[test]
    fn couple_parsing() {
        assert_eq!("minmax".parse::<NormCouple>().unwrap(), NormCouple::MaxMin);
        assert_eq!("prod".parse::<NormCouple>().unwrap(), NormCouple::ProductProbSum);
        assert_eq!("luk".parse::<NormCouple>().unwrap(), NormCouple::LukasiewiczBounded);
        assert_eq!(
            "frank:2".parse::<NormCouple>().unwrap(),
            NormCouple::Frank(FrankParameter::new(2.0).unwrap())
        );
        assert!("frank:x".parse::<NormCouple>().is_err());
        assert!("maxmin".parse::<NormCouple>().is_err());
    }

    #[test]
    fn vertices_round_trip_through_truth_values() {
        for v in PentaTruthValue::ALL {
            assert_eq!(Fp5Grade::from_truth_value(v).truth_value(), Some(v));
        }
        assert_eq!(grade(0.5, 0.0, 0.0, 0.0).truth_value(), None);
    }
}
