//! Exact arithmetic in the conjugation-closed polynomial ring over the
//! Gaussian rationals, localized at a designated set of unit symbols.
//!
//! The coefficient domain is [`GaussRat`]; ring elements are [`StarPoly`]
//! values over some [`Symbol`] type, and localized elements are
//! [`UnitFraction`] values whose denominators are monomials in unit
//! symbols only. Everything is canonical: two elements are equal iff their
//! representations are identical.
//!
//! ```
//! use crgeo::scalar::parse_expr;
//! use std::collections::BTreeSet;
//!
//! let units: BTreeSet<String> = ["a".to_string()].into();
//! let f = parse_expr("-b/(a^2*conj(a))", &units)?;
//! let g = parse_expr("b*a^-2*conj(a)^-1", &units)?;
//! assert_eq!(f, g.neg());
//! assert_eq!(f.to_string(), "-b/(a^2*conj(a))");
//! # Ok::<(), crgeo::scalar::ScalarError>(())
//! ```

mod fraction;
mod gauss;
mod parse;
mod poly;
mod symbol;

pub use fraction::{Binding, UnitFraction};
pub use gauss::GaussRat;
pub use parse::{parse_expr, Lexer, Token};
pub use poly::{Monomial, StarPoly};
pub use symbol::{Symbol, SymbolRef};

use thiserror::Error;

/// Errors of the scalar kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    /// Inversion was requested of something that is not a unit monomial.
    #[error("not a unit in the localized ring: {0}")]
    NotAUnit(String),
    /// A symbol occurring in the expression has no binding.
    #[error("unbound symbol: {0}")]
    UnboundSymbol(String),
    /// A unit symbol was bound to zero.
    #[error("unit symbol bound to zero: {0}")]
    ZeroUnit(String),
    /// A symbol and its conjugate were bound to non-conjugate values.
    #[error("inconsistent conjugation in binding for: {0}")]
    InconsistentConjugation(String),
    /// Parse error, with a 1-based column position.
    #[error("syntax error at column {col}: {msg}")]
    Syntax { col: usize, msg: String },
}
