use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::expr::LogicExpr;
use super::value::{PentaTruthValue, TruthValueError};

/// Default cap on the number of variables in a truth table (5⁶ rows).
pub const MAX_TABLE_VARIABLES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable '{0}' is not bound")]
    Unbound(String),
    #[error("expression has {found} variables, truth tables are capped at {cap}")]
    TooManyVariables { found: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssignmentError {
    #[error("binding '{0}' is not of the form name=V")]
    Malformed(String),
    #[error("'{0}' is not a valid variable name")]
    BadName(String),
    #[error(transparent)]
    Value(#[from] TruthValueError),
    #[error("variable '{0}' is bound twice")]
    Duplicate(String),
}

/// Variable bindings, ordered by name.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment(BTreeMap<String, PentaTruthValue>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(&mut self, name: impl Into<String>, value: PentaTruthValue) -> &mut Self {
        self.0.insert(name.into(), value);
        self
    }

    pub fn get(&self, name: &str) -> Option<PentaTruthValue> {
        self.0.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, PentaTruthValue)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<S: Into<String>> FromIterator<(S, PentaTruthValue)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (S, PentaTruthValue)>>(iter: I) -> Self {
        Assignment(iter.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }
}

fn is_variable_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('a'..='z')) && chars.all(|c| matches!(c, 'a'..='z' | '0'..='9' | '_'))
}

/// Parses `name=V,name=V,...`; an empty string is the empty assignment.
impl FromStr for Assignment {
    type Err = AssignmentError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut bindings = BTreeMap::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, value) = part
                .split_once('=')
                .ok_or_else(|| AssignmentError::Malformed(part.to_string()))?;
            let name = name.trim();
            if !is_variable_name(name) {
                return Err(AssignmentError::BadName(name.to_string()));
            }
            let value: PentaTruthValue = value.parse()?;
            if bindings.insert(name.to_string(), value).is_some() {
                return Err(AssignmentError::Duplicate(name.to_string()));
            }
        }
        Ok(Assignment(bindings))
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, value)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{name}={value}")?;
        }
        Ok(())
    }
}

pub fn eval_expr(expr: &LogicExpr, env: &Assignment) -> Result<PentaTruthValue, EvalError> {
    Ok(match expr {
        LogicExpr::Variable(name) => env.get(name).ok_or_else(|| EvalError::Unbound(name.clone()))?,
        LogicExpr::Literal(v) => *v,
        LogicExpr::Not(inner) => eval_expr(inner, env)?.negate(),
        LogicExpr::And(l, r) => eval_expr(l, env)?.and(eval_expr(r, env)?),
        LogicExpr::Or(l, r) => eval_expr(l, env)?.or(eval_expr(r, env)?),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthRow {
    /// Values in the order of [`TruthTable::variables`].
    pub inputs: Vec<PentaTruthValue>,
    pub output: PentaTruthValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    pub variables: Vec<String>,
    pub rows: Vec<TruthRow>,
}

impl TruthTable {
    pub fn assignment(&self, row: &TruthRow) -> Assignment {
        self.variables.iter().cloned().zip(row.inputs.iter().copied()).collect()
    }

    pub fn write_csv<W: std::io::Write>(&self, mut out: W) -> std::io::Result<()> {
        let mut header: Vec<&str> = self.variables.iter().map(String::as_str).collect();
        header.push("value");
        writeln!(out, "{}", header.join(","))?;
        for row in &self.rows {
            let mut cells: Vec<String> = row.inputs.iter().map(ToString::to_string).collect();
            cells.push(row.output.to_string());
            writeln!(out, "{}", cells.join(","))?;
        }
        Ok(())
    }
}

pub fn truth_table(expr: &LogicExpr) -> Result<TruthTable, EvalError> {
    truth_table_capped(expr, MAX_TABLE_VARIABLES)
}

/// Enumerates all `5ⁿ` assignments, variables sorted by name, values in the
/// order `t, i, u, c, f`, last variable varying fastest.
pub fn truth_table_capped(expr: &LogicExpr, max_variables: usize) -> Result<TruthTable, EvalError> {
    let variables: Vec<String> = expr.variables().into_iter().map(str::to_string).collect();
    if variables.len() > max_variables {
        return Err(EvalError::TooManyVariables {
            found: variables.len(),
            cap: max_variables,
        });
    }
    let n = variables.len();
    let count = 5usize.pow(n as u32);
    let mut rows = Vec::with_capacity(count);
    let mut env = Assignment::new();
    for index in 0..count {
        let mut inputs = vec![PentaTruthValue::True; n];
        let mut rest = index;
        for slot in inputs.iter_mut().rev() {
            *slot = PentaTruthValue::ALL[rest % 5];
            rest /= 5;
        }
        for (name, value) in variables.iter().zip(&inputs) {
            env.bind(name.clone(), *value);
        }
        let output = eval_expr(expr, &env)?;
        rows.push(TruthRow { inputs, output });
    }
    Ok(TruthTable { variables, rows })
}
