//! Symbols of the polynomial ring.
//!
//! The ring machinery is generic over the symbol type so that the same
//! canonical-form code serves plain named symbols, the function atoms of
//! the frame calculus, and real coordinate variables.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A ring variable. Implementors supply the conjugation involution, the
/// unit flag (may the symbol appear in denominators), and their rendering
/// in the expression grammar.
///
/// `Ord` fixes the global symbol order used by canonical forms.
pub trait Symbol: Clone + Ord + Eq + std::hash::Hash + fmt::Debug {
    fn conj_symbol(&self) -> Self;
    fn is_unit_symbol(&self) -> bool;
    fn write_expr(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

/// A named symbol, possibly conjugated, possibly declared a unit. A
/// symbol declared real is its own conjugate.
///
/// `conj` is an involution and preserves the unit flag. The global order
/// puts units first, then sorts alphabetically, with the conjugated
/// variant immediately after its base.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymbolRef {
    name: Arc<str>,
    conjugated: bool,
    unit: bool,
    real: bool,
}

impl SymbolRef {
    pub fn new(name: &str, unit: bool) -> Self {
        SymbolRef {
            name: Arc::from(name),
            conjugated: false,
            unit,
            real: false,
        }
    }

    /// A symbol fixed by conjugation.
    pub fn real(name: &str, unit: bool) -> Self {
        SymbolRef {
            name: Arc::from(name),
            conjugated: false,
            unit,
            real: true,
        }
    }

    pub fn conjugate_of(name: &str, unit: bool) -> Self {
        SymbolRef {
            name: Arc::from(name),
            conjugated: true,
            unit,
            real: false,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_conjugated(&self) -> bool {
        self.conjugated
    }

    pub fn is_real(&self) -> bool {
        self.real
    }
}

impl Symbol for SymbolRef {
    fn conj_symbol(&self) -> Self {
        if self.real {
            return self.clone();
        }
        SymbolRef {
            name: self.name.clone(),
            conjugated: !self.conjugated,
            unit: self.unit,
            real: false,
        }
    }

    fn is_unit_symbol(&self) -> bool {
        self.unit
    }

    fn write_expr(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conjugated {
            write!(f, "conj({})", self.name)
        } else {
            write!(f, "{}", self.name)
        }
    }
}

impl Ord for SymbolRef {
    fn cmp(&self, other: &Self) -> Ordering {
        // units first
        other
            .unit
            .cmp(&self.unit)
            .then_with(|| self.name.cmp(&other.name))
            .then_with(|| self.conjugated.cmp(&other.conjugated))
    }
}

impl PartialOrd for SymbolRef {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SymbolRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_expr(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conj_is_involution() {
        let s = SymbolRef::new("a", true);
        assert_eq!(s.conj_symbol().conj_symbol(), s);
        assert!(s.conj_symbol().is_unit_symbol());
    }

    #[test]
    fn order_units_first_then_alpha_then_conj() {
        let a = SymbolRef::new("a", true);
        let abar = a.conj_symbol();
        let b = SymbolRef::new("b", false);
        let bbar = b.conj_symbol();
        let mut v = vec![bbar.clone(), abar.clone(), b.clone(), a.clone()];
        v.sort();
        assert_eq!(v, vec![a, abar, b, bbar]);
    }
}
