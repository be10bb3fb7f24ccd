//! Penta-valued knowledge representation.
//!
//! * [`algebra`]: the Frank t-norm family, its t-conorms and conjugates.
//! * [`decomposition`]: bipolar pairs split into truth, falsity,
//!   contradiction, undefinedness and indeterminacy, and back.
//! * [`logic`]: the crisp five-valued connectives and an expression language.
//! * [`sets`]: FP5 sets, their union / intersection / complement and
//!   translators from fuzzy, intuitionistic, paraconsistent and bipolar sets.
//! * [`cli`]: the `fp5` command-line front end.

pub mod algebra;
pub mod cli;
pub mod decomposition;
pub mod logic;
pub mod sets;

pub use algebra::{conjugate_tnorm, tconorm, tnorm, FrankParameter, UnitValue};
pub use decomposition::{compose, decompose, decompose_lg, BipolarPair, PentaCoords};
pub use logic::{and5, eval_expr, not5, or5, parse_expr, truth_table, Assignment, LogicExpr, PentaTruthValue};
pub use sets::{
    complement, from_bipolar, from_fuzzy, from_intuitionistic, from_paraconsistent, intersection, to_bipolar, union,
    validate, BipolarInputSet, FP5Set, Fp5Grade, FuzzySet, InputKind, NormCouple,
};
