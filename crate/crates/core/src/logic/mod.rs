//! Crisp five-valued logic over `t, i, u, c, f` and a small expression
//! language for it.

mod eval;
mod expr;
mod value;

pub use eval::{
    eval_expr, truth_table, truth_table_capped, Assignment, AssignmentError, EvalError, TruthRow, TruthTable,
    MAX_TABLE_VARIABLES,
};
pub use expr::{parse_expr, Expected, LogicExpr, ParseError};
pub use value::{and5, not5, or5, PentaTruthValue, TruthValueError};
