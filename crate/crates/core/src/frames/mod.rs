//! Formal vector-field calculus over abstract frames.
//!
//! Vector expressions are linear combinations of frame symbols with
//! polynomial coefficients in opaque function atoms. Frame symbols act on
//! atoms as formal derivations; nothing is ever expanded or commuted, so
//! a derived identity here is an identity of the free Leibniz calculus.
//!
//! ```
//! use crgeo::frames::derive_transfer;
//! use crgeo::groups::GroupId;
//!
//! // the coefficient definition the bracket calculus forces for class I
//! let d = derive_transfer(GroupId::I)?;
//! assert_eq!(d.def("b").unwrap().to_string(), "-I*conj(a)*Lbar(a)");
//! # Ok::<(), crgeo::frames::FrameError>(())
//! ```

mod derive;
mod golden;
mod table;
mod vector;

pub use derive::{coeff_order, derive_transfer, DerivedTransfer};
pub use golden::{compare_with_paper, ErratumReport, TransferDiff};
pub use table::{
    builtin_declarations, parse_declarations, parse_func_expr, parse_vector_expr, BracketTable,
    Declarations, TransferRule,
};
pub use vector::{apply_vector, derive_poly, vf_bracket, FuncPoly, VectorExpr};

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::scalar::{ScalarError, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("untabulated bracket: [{x}, {y}]")]
    UntabulatedBracket { x: FrameSymbol, y: FrameSymbol },
    #[error("frame symbol {0} has no conjugate partner in the frame")]
    NoConjugatePartner(FrameSymbol),
    #[error("derived weight mismatch at {frame}: expected {expected}, got {got}")]
    WeightMismatch {
        frame: FrameSymbol,
        expected: String,
        got: String,
    },
    #[error("coefficient at {frame} is not the conjugate of {name}: got {got}")]
    ConjMismatch {
        frame: FrameSymbol,
        name: String,
        got: String,
    },
    #[error("coefficient {name} is not fixed by conjugation: {got}")]
    NotReal { name: String, got: String },
    #[error("unexpected nonzero coefficient at {frame}: {got}")]
    NonzeroEntry { frame: FrameSymbol, got: String },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: ScalarError },
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
}

/// The frame fields appearing across the six classes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FrameSymbol {
    L,
    Lbar,
    T,
    S,
    Sbar,
    R,
    K,
    Kbar,
    L1,
    L2,
    L1bar,
    L2bar,
}

impl FrameSymbol {
    pub const ALL: [FrameSymbol; 12] = [
        FrameSymbol::L,
        FrameSymbol::Lbar,
        FrameSymbol::T,
        FrameSymbol::S,
        FrameSymbol::Sbar,
        FrameSymbol::R,
        FrameSymbol::K,
        FrameSymbol::Kbar,
        FrameSymbol::L1,
        FrameSymbol::L2,
        FrameSymbol::L1bar,
        FrameSymbol::L2bar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FrameSymbol::L => "L",
            FrameSymbol::Lbar => "Lbar",
            FrameSymbol::T => "T",
            FrameSymbol::S => "S",
            FrameSymbol::Sbar => "Sbar",
            FrameSymbol::R => "R",
            FrameSymbol::K => "K",
            FrameSymbol::Kbar => "Kbar",
            FrameSymbol::L1 => "L1",
            FrameSymbol::L2 => "L2",
            FrameSymbol::L1bar => "L1bar",
            FrameSymbol::L2bar => "L2bar",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        FrameSymbol::ALL.iter().copied().find(|f| f.name() == name)
    }

    /// The conjugate partner. The third-order field of the fifth frame has
    /// no partner inside the frame.
    pub fn conj(self) -> Option<Self> {
        match self {
            FrameSymbol::L => Some(FrameSymbol::Lbar),
            FrameSymbol::Lbar => Some(FrameSymbol::L),
            FrameSymbol::T => Some(FrameSymbol::T),
            FrameSymbol::S => Some(FrameSymbol::Sbar),
            FrameSymbol::Sbar => Some(FrameSymbol::S),
            FrameSymbol::R => None,
            FrameSymbol::K => Some(FrameSymbol::Kbar),
            FrameSymbol::Kbar => Some(FrameSymbol::K),
            FrameSymbol::L1 => Some(FrameSymbol::L1bar),
            FrameSymbol::L1bar => Some(FrameSymbol::L1),
            FrameSymbol::L2 => Some(FrameSymbol::L2bar),
            FrameSymbol::L2bar => Some(FrameSymbol::L2),
        }
    }

    pub fn is_real(self) -> bool {
        self == FrameSymbol::T
    }
}

impl fmt::Display for FrameSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// An opaque coefficient function, possibly conjugated, possibly with a
/// prefix of formal derivations applied (outermost first). Atoms with
/// distinct prefixes are independent ring variables: `T(a)` carries no
/// relation to `L(Lbar(a))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FuncAtom {
    base: Arc<str>,
    base_conjugated: bool,
    prefix: Vec<FrameSymbol>,
    real: bool,
}

impl FuncAtom {
    pub fn new(base: &str, real: bool) -> Self {
        FuncAtom {
            base: Arc::from(base),
            base_conjugated: false,
            prefix: Vec::new(),
            real,
        }
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn prefix(&self) -> &[FrameSymbol] {
        &self.prefix
    }

    pub fn is_base_conjugated(&self) -> bool {
        self.base_conjugated
    }

    /// Apply a derivation: extend the prefix on the outside.
    pub fn derived_by(&self, frame: FrameSymbol) -> Self {
        let mut prefix = Vec::with_capacity(self.prefix.len() + 1);
        prefix.push(frame);
        prefix.extend(self.prefix.iter().copied());
        FuncAtom {
            base: self.base.clone(),
            base_conjugated: self.base_conjugated,
            prefix,
            real: self.real,
        }
    }

    /// Whether the conjugate exists (every prefix derivation has a
    /// conjugate partner).
    pub fn conjugable(&self) -> bool {
        self.prefix.iter().all(|f| f.conj().is_some())
    }
}

impl Symbol for FuncAtom {
    /// `conj(X(f)) = conj(X)(conj(f))`: conjugation distributes over
    /// derivation prefixes, and real bases are fixed.
    fn conj_symbol(&self) -> Self {
        FuncAtom {
            base: self.base.clone(),
            base_conjugated: if self.real {
                false
            } else {
                !self.base_conjugated
            },
            prefix: self
                .prefix
                .iter()
                .map(|f| {
                    f.conj()
                        .unwrap_or_else(|| panic!("cannot conjugate derivation by {f}"))
                })
                .collect(),
            real: self.real,
        }
    }

    fn is_unit_symbol(&self) -> bool {
        false
    }

    fn write_expr(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for frame in &self.prefix {
            write!(f, "{}(", frame.name())?;
        }
        if self.base_conjugated {
            write!(f, "conj({})", self.base)?;
        } else {
            write!(f, "{}", self.base)?;
        }
        for _ in &self.prefix {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl Ord for FuncAtom {
    fn cmp(&self, other: &Self) -> Ordering {
        self.base
            .cmp(&other.base)
            .then_with(|| self.prefix.cmp(&other.prefix))
            .then_with(|| self.base_conjugated.cmp(&other.base_conjugated))
    }
}

impl PartialOrd for FuncAtom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FuncAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_expr(f)
    }
}
