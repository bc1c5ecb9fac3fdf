//! Vector expressions and the Leibniz bracket.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::scalar::{GaussRat, StarPoly};

use super::table::BracketTable;
use super::{FrameError, FrameSymbol, FuncAtom};

/// A polynomial whose symbols are function atoms.
pub type FuncPoly = StarPoly<FuncAtom>;

/// A formal linear combination of frame fields with polynomial
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VectorExpr {
    comps: BTreeMap<FrameSymbol, FuncPoly>,
}

impl VectorExpr {
    pub fn zero() -> Self {
        VectorExpr::default()
    }

    pub fn frame(f: FrameSymbol) -> Self {
        VectorExpr::term(f, FuncPoly::one())
    }

    pub fn term(f: FrameSymbol, coeff: FuncPoly) -> Self {
        let mut comps = BTreeMap::new();
        if !coeff.is_zero() {
            comps.insert(f, coeff);
        }
        VectorExpr { comps }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn component(&self, f: FrameSymbol) -> FuncPoly {
        self.comps.get(&f).cloned().unwrap_or_else(FuncPoly::zero)
    }

    pub fn components(&self) -> impl Iterator<Item = (&FrameSymbol, &FuncPoly)> {
        self.comps.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (f, c) in &other.comps {
            let sum = out.component(*f).add(c);
            if sum.is_zero() {
                out.comps.remove(f);
            } else {
                out.comps.insert(*f, sum);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        VectorExpr {
            comps: self.comps.iter().map(|(f, c)| (*f, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &FuncPoly) -> Self {
        if k.is_zero() {
            return VectorExpr::zero();
        }
        VectorExpr {
            comps: self.comps.iter().map(|(f, c)| (*f, c.mul(k))).collect(),
        }
    }

    pub fn scale_const(&self, k: &GaussRat) -> Self {
        self.scale(&FuncPoly::constant(k.clone()))
    }

    /// Joint conjugation of frame symbols and coefficient atoms; an
    /// involution. Fails only if the expression involves the unpaired
    /// third-order field.
    pub fn conj(&self) -> Result<Self, FrameError> {
        let mut comps = BTreeMap::new();
        for (f, c) in &self.comps {
            let partner = f.conj().ok_or(FrameError::NoConjugatePartner(*f))?;
            for atom in c.symbols() {
                if !atom.conjugable() {
                    return Err(FrameError::NoConjugatePartner(FrameSymbol::R));
                }
            }
            comps.insert(partner, c.conj());
        }
        Ok(VectorExpr { comps })
    }

    /// The total term count of all coefficients.
    pub fn num_terms(&self) -> usize {
        self.comps.values().map(|c| c.num_terms()).sum()
    }
}

impl fmt::Display for VectorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        for (i, (frame, coeff)) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if coeff.as_constant().is_some_and(|c| c.is_one()) {
                write!(f, "{frame}")?;
            } else if coeff.num_terms() > 1 {
                write!(f, "({coeff})*{frame}")?;
            } else {
                write!(f, "{coeff}*{frame}")?;
            }
        }
        Ok(())
    }
}

/// Apply a frame derivation to a polynomial coefficient by the Leibniz
/// product rule: constants map to zero and atoms gain a prefix.
pub fn derive_poly(frame: FrameSymbol, poly: &FuncPoly) -> FuncPoly {
    let atoms: BTreeSet<FuncAtom> = poly.symbols().cloned().collect();
    let mut out = FuncPoly::zero();
    for atom in atoms {
        let slope = poly.partial(&atom);
        if slope.is_zero() {
            continue;
        }
        out = out.add(&slope.mul(&FuncPoly::symbol(atom.derived_by(frame))));
    }
    out
}

/// Apply a vector expression to a polynomial as a derivation.
pub fn apply_vector(x: &VectorExpr, poly: &FuncPoly) -> FuncPoly {
    let mut out = FuncPoly::zero();
    for (f, c) in x.components() {
        out = out.add(&c.mul(&derive_poly(*f, poly)));
    }
    out
}

/// The Lie bracket of two vector expressions: the bilinear extension of
/// the tabulated frame brackets by the Leibniz rule,
/// `[fX, gY] = fg[X,Y] + fX(g)·Y - gY(f)·X`.
pub fn vf_bracket(
    x: &VectorExpr,
    y: &VectorExpr,
    table: &BracketTable,
) -> Result<VectorExpr, FrameError> {
    let mut out = VectorExpr::zero();
    // structural part
    for (fx, cx) in x.components() {
        for (fy, cy) in y.components() {
            let frame_bracket = table.bracket_of(*fx, *fy)?;
            out = out.add(&frame_bracket.scale(&cx.mul(cy)));
        }
    }
    // X applied to the coefficients of Y
    for (fy, cy) in y.components() {
        out = out.add(&VectorExpr::term(*fy, apply_vector(x, cy)));
    }
    // minus Y applied to the coefficients of X
    for (fx, cx) in x.components() {
        out = out.sub(&VectorExpr::term(*fx, apply_vector(y, cx)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::builtin_declarations;
    use crate::groups::GroupId;

    fn atom(name: &str) -> FuncPoly {
        FuncPoly::symbol(FuncAtom::new(name, false))
    }

    fn table(class: GroupId) -> BracketTable {
        builtin_declarations().table(class).clone()
    }

    #[test]
    fn class_i_bracket_of_scaled_generators() {
        // [a L, conj(a) Lbar] = a conj(a) (-I T) + a L(conj(a)) Lbar - conj(a) Lbar(a) L
        let a = atom("a");
        let abar = a.conj();
        let x = VectorExpr::term(FrameSymbol::L, a.clone());
        let y = VectorExpr::term(FrameSymbol::Lbar, abar.clone());
        let b = vf_bracket(&x, &y, &table(GroupId::I)).unwrap();

        assert_eq!(
            b.component(FrameSymbol::T),
            a.mul(&abar).scale(&GaussRat::minus_i())
        );
        assert_eq!(
            b.component(FrameSymbol::Lbar),
            a.mul(&derive_poly(FrameSymbol::L, &abar))
        );
        assert_eq!(
            b.component(FrameSymbol::L),
            abar.mul(&derive_poly(FrameSymbol::Lbar, &a)).neg()
        );
    }

    #[test]
    fn bracket_with_itself_vanishes() {
        let x = VectorExpr::term(FrameSymbol::L, atom("f"))
            .add(&VectorExpr::term(FrameSymbol::Lbar, atom("g")));
        let b = vf_bracket(&x, &x, &table(GroupId::I)).unwrap();
        assert!(b.is_zero(), "got {b}");
    }

    #[test]
    fn untabulated_bracket_is_reported() {
        let x = VectorExpr::frame(FrameSymbol::L);
        let y = VectorExpr::frame(FrameSymbol::T);
        assert!(matches!(
            vf_bracket(&x, &y, &table(GroupId::I)),
            Err(FrameError::UntabulatedBracket {
                x: FrameSymbol::L,
                y: FrameSymbol::T
            })
        ));
    }

    #[test]
    fn class_iii2_r_row_expansion() {
        // [a L, a^2 conj(a) S + c T + d Lbar + e L] in the class III2 table
        let a = atom("a");
        let weight = a.mul(&a).mul(&a.conj());
        let x = VectorExpr::term(FrameSymbol::L, a.clone());
        let y = VectorExpr::term(FrameSymbol::S, weight.clone())
            .add(&VectorExpr::term(FrameSymbol::T, atom("c")))
            .add(&VectorExpr::term(FrameSymbol::Lbar, atom("d")))
            .add(&VectorExpr::term(FrameSymbol::L, atom("e")));
        let b = vf_bracket(&x, &y, &table(GroupId::III2)).unwrap();

        // R coefficient: a * a^2 conj(a)
        assert_eq!(b.component(FrameSymbol::R), a.mul(&weight));
        // S coefficient: a c + a L(a^2 conj(a))
        assert_eq!(
            b.component(FrameSymbol::S),
            a.mul(&atom("c"))
                .add(&a.mul(&derive_poly(FrameSymbol::L, &weight)))
        );
        // T coefficient: -I a d + a L(c)
        assert_eq!(
            b.component(FrameSymbol::T),
            a.mul(&atom("d"))
                .scale(&GaussRat::minus_i())
                .add(&a.mul(&derive_poly(FrameSymbol::L, &atom("c"))))
        );
        // Lbar coefficient: a L(d)
        assert_eq!(
            b.component(FrameSymbol::Lbar),
            a.mul(&derive_poly(FrameSymbol::L, &atom("d")))
        );
        // L coefficient: a L(e) - a^2 conj(a) S(a) - c T(a) - d Lbar(a) - e L(a)
        let expected_l = a
            .mul(&derive_poly(FrameSymbol::L, &atom("e")))
            .sub(&weight.mul(&derive_poly(FrameSymbol::S, &a)))
            .sub(&atom("c").mul(&derive_poly(FrameSymbol::T, &a)))
            .sub(&atom("d").mul(&derive_poly(FrameSymbol::Lbar, &a)))
            .sub(&atom("e").mul(&derive_poly(FrameSymbol::L, &a)));
        assert_eq!(b.component(FrameSymbol::L), expected_l);
    }

    #[test]
    fn conjugation_of_real_expression_is_fixed() {
        let a = atom("a");
        let b = atom("b");
        // a conj(a) T + conj(b) Lbar + b L
        let x = VectorExpr::term(FrameSymbol::T, a.mul(&a.conj()))
            .add(&VectorExpr::term(FrameSymbol::Lbar, b.conj()))
            .add(&VectorExpr::term(FrameSymbol::L, b.clone()));
        assert_eq!(x.conj().unwrap(), x);
    }

    #[test]
    fn conjugation_of_s_row() {
        let a = atom("a");
        let weight = a.mul(&a).mul(&a.conj());
        let x = VectorExpr::term(FrameSymbol::S, weight.clone())
            .add(&VectorExpr::term(FrameSymbol::T, atom("c")))
            .add(&VectorExpr::term(FrameSymbol::Lbar, atom("d")))
            .add(&VectorExpr::term(FrameSymbol::L, atom("e")));
        let c = x.conj().unwrap();
        assert_eq!(c.component(FrameSymbol::Sbar), weight.conj());
        assert_eq!(c.component(FrameSymbol::T), atom("c").conj());
        assert_eq!(c.component(FrameSymbol::L), atom("d").conj());
        assert_eq!(c.component(FrameSymbol::Lbar), atom("e").conj());
        assert_eq!(c.conj().unwrap(), x);
    }

    #[test]
    fn conj_commutes_with_bracket() {
        let tbl = table(GroupId::II);
        let x = VectorExpr::term(FrameSymbol::L, atom("f"))
            .add(&VectorExpr::term(FrameSymbol::T, atom("g")));
        let y = VectorExpr::term(FrameSymbol::Lbar, atom("h"));
        let lhs = vf_bracket(&x, &y, &tbl).unwrap().conj().unwrap();
        let rhs = vf_bracket(&x.conj().unwrap(), &y.conj().unwrap(), &tbl).unwrap();
        assert_eq!(lhs, rhs);
    }
}
