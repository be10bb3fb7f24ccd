//! Expressions over the five-valued connectives.
//!
//! ```text
//! Or    := And ('|' And)*
//! And   := Unary ('&' Unary)*
//! Unary := '!' Unary | '(' Or ')' | Literal | Variable
//! ```
//!
//! Literals are the uppercase letters `T I U C F`; variables match
//! `[a-z][a-z0-9_]*`. Whitespace is insignificant.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::value::PentaTruthValue;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LogicExpr {
    Variable(String),
    Literal(PentaTruthValue),
    Not(Box<LogicExpr>),
    And(Box<LogicExpr>, Box<LogicExpr>),
    Or(Box<LogicExpr>, Box<LogicExpr>),
}

impl LogicExpr {
    pub fn var(name: impl Into<String>) -> Self {
        LogicExpr::Variable(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: LogicExpr) -> Self {
        LogicExpr::Not(Box::new(inner))
    }

    pub fn and(left: LogicExpr, right: LogicExpr) -> Self {
        LogicExpr::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: LogicExpr, right: LogicExpr) -> Self {
        LogicExpr::Or(Box::new(left), Box::new(right))
    }

    /// Distinct variable names, sorted.
    pub fn variables(&self) -> BTreeSet<&str> {
        let mut names = BTreeSet::new();
        self.collect_variables(&mut names);
        names
    }

    fn collect_variables<'a>(&'a self, names: &mut BTreeSet<&'a str>) {
        match self {
            LogicExpr::Variable(name) => {
                names.insert(name);
            }
            LogicExpr::Literal(_) => {}
            LogicExpr::Not(inner) => inner.collect_variables(names),
            LogicExpr::And(l, r) | LogicExpr::Or(l, r) => {
                l.collect_variables(names);
                r.collect_variables(names);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            LogicExpr::Variable(_) | LogicExpr::Literal(_) => 1,
            LogicExpr::Not(inner) => 1 + inner.depth(),
            LogicExpr::And(l, r) | LogicExpr::Or(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            LogicExpr::Or(..) => 1,
            LogicExpr::And(..) => 2,
            _ => 3,
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>, min_precedence: u8) -> fmt::Result {
        if self.precedence() < min_precedence {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

/// Prints with the minimal parentheses that re-parse to the same tree.
impl fmt::Display for LogicExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogicExpr::Variable(name) => f.write_str(name),
            LogicExpr::Literal(v) => write!(f, "{v}"),
            LogicExpr::Not(inner) => {
                f.write_str("!")?;
                inner.fmt_operand(f, 3)
            }
            LogicExpr::And(l, r) => {
                l.fmt_operand(f, 2)?;
                f.write_str(" & ")?;
                r.fmt_operand(f, 3)
            }
            LogicExpr::Or(l, r) => {
                l.fmt_operand(f, 1)?;
                f.write_str(" | ")?;
                r.fmt_operand(f, 2)
            }
        }
    }
}

impl FromStr for LogicExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_expr(s)
    }
}

/// What the parser would have accepted at the failure point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Operand,
    Operator,
    CloseParen,
    EndOfInput,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expected::Operand => "operand",
            Expected::Operator => "operator",
            Expected::CloseParen => "')'",
            Expected::EndOfInput => "end of input",
        })
    }
}

fn list(expected: &[Expected]) -> String {
    expected
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" or ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown character '{ch}' at offset {offset}")]
    UnknownCharacter { offset: usize, ch: char },
    #[error("syntax error at offset {offset}: expected {}, found {found}", list(.expected))]
    Syntax {
        offset: usize,
        expected: Vec<Expected>,
        found: String,
    },
}

impl ParseError {
    /// Byte offset of the failure in the input.
    pub fn offset(&self) -> usize {
        match self {
            ParseError::UnknownCharacter { offset, .. } | ParseError::Syntax { offset, .. } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Bang,
    Amp,
    Pipe,
    Open,
    Close,
    Literal(PentaTruthValue),
    Ident(String),
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Bang => f.write_str("'!'"),
            Token::Amp => f.write_str("'&'"),
            Token::Pipe => f.write_str("'|'"),
            Token::Open => f.write_str("'('"),
            Token::Close => f.write_str("')'"),
            Token::Literal(v) => write!(f, "literal {v}"),
            Token::Ident(name) => write!(f, "variable '{name}'"),
            Token::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        let token = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'!' => Token::Bang,
            b'&' => Token::Amp,
            b'|' => Token::Pipe,
            b'(' => Token::Open,
            b')' => Token::Close,
            b'a'..=b'z' => {
                let start = pos;
                while pos < bytes.len() && matches!(bytes[pos], b'a'..=b'z' | b'0'..=b'9' | b'_') {
                    pos += 1;
                }
                tokens.push((start, Token::Ident(text[start..pos].to_string())));
                continue;
            }
            _ => match PentaTruthValue::from_symbol(b as char) {
                Some(v) if b.is_ascii() => Token::Literal(v),
                _ => {
                    let ch = text[pos..].chars().next().expect("non-empty remainder");
                    return Err(ParseError::UnknownCharacter { offset: pos, ch });
                }
            },
        };
        tokens.push((pos, token));
        pos += 1;
    }
    tokens.push((text.len(), Token::End));
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.cursor].1
    }

    fn advance(&mut self) -> Token {
        let token = self.tokens[self.cursor].1.clone();
        if token != Token::End {
            self.cursor += 1;
        }
        token
    }

    fn error(&self, expected: Vec<Expected>) -> ParseError {
        let (offset, token) = &self.tokens[self.cursor];
        ParseError::Syntax {
            offset: *offset,
            expected,
            found: token.to_string(),
        }
    }

    fn or(&mut self) -> Result<LogicExpr, ParseError> {
        let mut expr = self.and()?;
        while *self.peek() == Token::Pipe {
            self.advance();
            expr = LogicExpr::or(expr, self.and()?);
        }
        Ok(expr)
    }

    fn and(&mut self) -> Result<LogicExpr, ParseError> {
        let mut expr = self.unary()?;
        while *self.peek() == Token::Amp {
            self.advance();
            expr = LogicExpr::and(expr, self.unary()?);
        }
        Ok(expr)
    }

    fn unary(&mut self) -> Result<LogicExpr, ParseError> {
        match self.peek() {
            Token::Bang => {
                self.advance();
                Ok(LogicExpr::not(self.unary()?))
            }
            Token::Open => {
                self.advance();
                let inner = self.or()?;
                if *self.peek() != Token::Close {
                    return Err(self.error(vec![Expected::Operator, Expected::CloseParen]));
                }
                self.advance();
                Ok(inner)
            }
            Token::Literal(_) | Token::Ident(_) => match self.advance() {
                Token::Literal(v) => Ok(LogicExpr::Literal(v)),
                Token::Ident(name) => Ok(LogicExpr::Variable(name)),
                _ => unreachable!(),
            },
            _ => Err(self.error(vec![Expected::Operand])),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<LogicExpr, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        cursor: 0,
    };
    let expr = parser.or()?;
    if *parser.peek() != Token::End {
        return Err(parser.error(vec![Expected::Operator, Expected::EndOfInput]));
    }
    Ok(expr)
}
