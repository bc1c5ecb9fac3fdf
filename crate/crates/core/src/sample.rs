//! Seeded random sampling of ring elements, bindings, vector expressions
//! and group parameters, shared by the property suites and the CLI's
//! reproducible spot checks.

use std::collections::BTreeMap;

use rand::Rng;

use crate::frames::{FrameSymbol, FuncAtom, FuncPoly, VectorExpr};
use crate::groups::{GroupId, GroupTemplate};
use crate::scalar::{Binding, GaussRat, Monomial, StarPoly, Symbol, SymbolRef};

/// A small random Gaussian rational with denominators up to 3.
pub fn gauss(rng: &mut impl Rng) -> GaussRat {
    let re = GaussRat::from_ratio(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=3));
    let im = GaussRat::from_ratio(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=3));
    &re + &(&im * &GaussRat::i())
}

/// A nonzero random Gaussian rational.
pub fn gauss_nonzero(rng: &mut impl Rng) -> GaussRat {
    loop {
        let v = gauss(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

/// A random polynomial over the given symbols.
pub fn poly(rng: &mut impl Rng, symbols: &[SymbolRef], max_terms: usize) -> StarPoly<SymbolRef> {
    let mut out = StarPoly::zero();
    let terms = rng.gen_range(0..=max_terms);
    for _ in 0..terms {
        let mut powers = Vec::new();
        for s in symbols {
            if rng.gen_bool(0.6) {
                powers.push((s.clone(), rng.gen_range(1..=2u32)));
            }
        }
        out = out.add(&StarPoly::term(Monomial::from_powers(powers), gauss(rng)));
    }
    out
}

/// A random localized fraction: a polynomial numerator over a random
/// monomial in the unit symbols.
pub fn unit_fraction(
    rng: &mut impl Rng,
    symbols: &[SymbolRef],
    max_terms: usize,
) -> crate::scalar::UnitFraction {
    let numerator = crate::scalar::UnitFraction::from_poly(poly(rng, symbols, max_terms));
    let mut den = crate::scalar::UnitFraction::one();
    for s in symbols.iter().filter(|s| s.is_unit_symbol()) {
        let e = rng.gen_range(0..=2u32);
        if e > 0 {
            let power = crate::scalar::UnitFraction::symbol(s.clone())
                .pow(e as i64)
                .expect("unit power");
            den = den.mul(&power);
        }
    }
    numerator.div(&den).expect("unit-monomial denominator")
}

/// A conjugation-consistent binding covering the given symbols and their
/// conjugates, with unit symbols bound away from zero.
pub fn binding(rng: &mut impl Rng, symbols: &[SymbolRef]) -> Binding {
    let mut b = Binding::new();
    for s in symbols {
        let v = if s.is_unit_symbol() {
            gauss_nonzero(rng)
        } else {
            gauss(rng)
        };
        b.bind_pair(s.name(), s.is_unit_symbol(), v);
    }
    b
}

/// A random function polynomial over the given atom names.
pub fn func_poly(rng: &mut impl Rng, atoms: &[&str], max_terms: usize) -> FuncPoly {
    let mut out = FuncPoly::zero();
    let terms = rng.gen_range(0..=max_terms);
    for _ in 0..terms {
        let mut term = FuncPoly::constant(gauss(rng));
        for name in atoms {
            if rng.gen_bool(0.5) {
                let mut atom = FuncAtom::new(name, false);
                if rng.gen_bool(0.3) {
                    atom = atom.conj_symbol();
                }
                term = term.mul(&FuncPoly::symbol(atom));
            }
        }
        out = out.add(&term);
    }
    out
}

/// A random vector expression over the given frames and atom names.
pub fn vector_expr(rng: &mut impl Rng, frames: &[FrameSymbol], atoms: &[&str]) -> VectorExpr {
    let mut out = VectorExpr::zero();
    for f in frames {
        if rng.gen_bool(0.7) {
            out = out.add(&VectorExpr::term(*f, func_poly(rng, atoms, 2)));
        }
    }
    out
}

/// A random polynomial-coefficient coordinate vector field.
pub fn coord_field(
    rng: &mut impl Rng,
    ambient: crate::hypersurface::Ambient,
) -> crate::hypersurface::CoordVectorField {
    use crate::hypersurface::{CoordVectorField, RationalFunc, RealPoly};
    let mut out = CoordVectorField::zero(ambient);
    for dir in ambient.dirs() {
        if rng.gen_bool(0.6) {
            let mut p = RealPoly::zero();
            for _ in 0..rng.gen_range(1..=2) {
                let mut powers = Vec::new();
                for v in ambient.vars() {
                    if rng.gen_bool(0.4) {
                        powers.push((*v, rng.gen_range(1..=2u32)));
                    }
                }
                p = p.add(&RealPoly::term(
                    crate::scalar::Monomial::from_powers(powers),
                    gauss(rng),
                ));
            }
            out.set(*dir, RationalFunc::from_poly(p));
        }
    }
    out
}

/// Random numeric parameter values for a group template, respecting unit
/// and reality constraints.
pub fn group_values(rng: &mut impl Rng, t: &GroupTemplate) -> BTreeMap<String, GaussRat> {
    let mut out = BTreeMap::new();
    for p in t.params() {
        let v = loop {
            let mut v = gauss(rng);
            if p.kind.is_real() {
                v = GaussRat::new(
                    v.re().clone(),
                    num::rational::BigRational::from_integer(0.into()),
                );
            }
            if !p.kind.is_unit() || !v.is_zero() {
                break v;
            }
        };
        out.insert(p.name.to_string(), v);
    }
    // the 2x2 block of the fourth group must stay invertible
    if t.id() == GroupId::IV1 {
        let det =
            |m: &BTreeMap<String, GaussRat>| &(&m["a11"] * &m["a22"]) - &(&m["a21"] * &m["a12"]);
        while det(&out).is_zero() {
            out.insert("a11".to_string(), gauss_nonzero(rng));
            out.insert("a22".to_string(), gauss_nonzero(rng));
            out.insert("a12".to_string(), gauss(rng));
        }
    }
    out
}
