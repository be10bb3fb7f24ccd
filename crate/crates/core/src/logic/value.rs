use std::fmt;
use std::ops::{BitAnd, BitOr, Not};
use std::str::FromStr;

use thiserror::Error;

/// One of the five crisp truth values.
///
/// Declaration order is the display order `t, i, u, c, f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum PentaTruthValue {
    True = 0,
    Indeterminate = 1,
    Undefined = 2,
    Contradictory = 3,
    False = 4,
}

use PentaTruthValue::{Contradictory as C, False as F, Indeterminate as I, True as T, Undefined as U};

const OR_TABLE: [[PentaTruthValue; 5]; 5] = [
    //  t  i  u  c  f
    [T, T, T, T, T], // t
    [T, I, I, I, I], // i
    [T, I, U, I, I], // u
    [T, I, I, C, I], // c
    [T, I, I, I, F], // f
];

const AND_TABLE: [[PentaTruthValue; 5]; 5] = [
    //  t  i  u  c  f
    [T, I, I, I, F], // t
    [I, I, I, I, F], // i
    [I, I, U, I, F], // u
    [I, I, I, C, F], // c
    [F, F, F, F, F], // f
];

const NOT_TABLE: [PentaTruthValue; 5] = [F, I, U, C, T];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("'{0}' is not a truth value (expected one of T, I, U, C, F)")]
pub struct TruthValueError(pub String);

impl PentaTruthValue {
    pub const ALL: [PentaTruthValue; 5] = [T, I, U, C, F];

    pub fn or(self, other: Self) -> Self {
        OR_TABLE[self as usize][other as usize]
    }

    pub fn and(self, other: Self) -> Self {
        AND_TABLE[self as usize][other as usize]
    }

    pub fn negate(self) -> Self {
        NOT_TABLE[self as usize]
    }

    /// The uppercase literal used in expressions: `T, I, U, C, F`.
    pub fn symbol(self) -> char {
        match self {
            T => 'T',
            I => 'I',
            U => 'U',
            C => 'C',
            F => 'F',
        }
    }

    pub fn from_symbol(symbol: char) -> Option<Self> {
        match symbol {
            'T' => Some(T),
            'I' => Some(I),
            'U' => Some(U),
            'C' => Some(C),
            'F' => Some(F),
            _ => None,
        }
    }

    pub fn from_bool(value: bool) -> Self {
        if value {
            T
        } else {
            F
        }
    }

    pub fn to_bool(self) -> Option<bool> {
        match self {
            T => Some(true),
            F => Some(false),
            _ => None,
        }
    }
}

pub fn or5(a: PentaTruthValue, b: PentaTruthValue) -> PentaTruthValue {
    a.or(b)
}

pub fn and5(a: PentaTruthValue, b: PentaTruthValue) -> PentaTruthValue {
    a.and(b)
}

pub fn not5(a: PentaTruthValue) -> PentaTruthValue {
    a.negate()
}

impl Not for PentaTruthValue {
    type Output = Self;

    fn not(self) -> Self {
        self.negate()
    }
}

impl BitAnd for PentaTruthValue {
    type Output = Self;

    fn bitand(self, rhs: Self) -> Self {
        self.and(rhs)
    }
}

impl BitOr for PentaTruthValue {
    type Output = Self;

    fn bitor(self, rhs: Self) -> Self {
        self.or(rhs)
    }
}

impl fmt::Display for PentaTruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for PentaTruthValue {
    type Err = TruthValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Self::from_symbol(c),
            _ => None,
        }
        .ok_or_else(|| TruthValueError(s.to_string()))
    }
}
