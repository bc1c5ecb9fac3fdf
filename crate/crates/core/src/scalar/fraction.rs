//! The localization of the polynomial ring at its unit symbols: fractions
//! whose denominator is a monomial in unit symbols with coefficient 1.

use std::collections::BTreeMap;
use std::fmt;

use super::gauss::GaussRat;
use super::poly::{Monomial, StarPoly};
use super::symbol::{Symbol, SymbolRef};
use super::ScalarError;

/// A canonical element `numerator / denominator` of the localized ring.
///
/// Canonical form: the denominator involves only unit symbols and carries
/// coefficient 1, and no symbol power divides both the denominator and
/// every numerator term. Zero is `0/1`. Equality of fractions is equality
/// of canonical forms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnitFraction {
    num: StarPoly<SymbolRef>,
    den: Monomial<SymbolRef>,
}

impl UnitFraction {
    /// Build and canonicalize. Fails unless the denominator is a unit
    /// monomial.
    pub fn new(num: StarPoly<SymbolRef>, den: Monomial<SymbolRef>) -> Result<Self, ScalarError> {
        if !den.involves_only_units() {
            return Err(ScalarError::NotAUnit(den.to_string()));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: StarPoly<SymbolRef>, den: Monomial<SymbolRef>) -> Self {
        if num.is_zero() {
            return UnitFraction {
                num,
                den: Monomial::one(),
            };
        }
        let mut den_powers: Vec<(SymbolRef, u32)> = den.powers().to_vec();
        let mut num = num;
        for (s, e) in den_powers.iter_mut() {
            let shared = num
                .terms()
                .map(|(m, _)| m.exponent_of(s))
                .min()
                .unwrap_or(0)
                .min(*e);
            if shared > 0 {
                let mut lowered = StarPoly::zero();
                for (m, c) in num.terms() {
                    lowered = lowered.add(&StarPoly::term(
                        m.try_div_power(s, shared).unwrap(),
                        c.clone(),
                    ));
                }
                num = lowered;
                *e -= shared;
            }
        }
        UnitFraction {
            num,
            den: Monomial::from_powers(den_powers),
        }
    }

    pub fn from_poly(num: StarPoly<SymbolRef>) -> Self {
        UnitFraction {
            num,
            den: Monomial::one(),
        }
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::from_poly(StarPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(StarPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(StarPoly::one())
    }

    pub fn symbol(s: SymbolRef) -> Self {
        Self::from_poly(StarPoly::symbol(s))
    }

    pub fn numerator(&self) -> &StarPoly<SymbolRef> {
        &self.num
    }

    pub fn denominator(&self) -> &Monomial<SymbolRef> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.as_constant().is_some_and(|c| c.is_one())
    }

    /// The fraction as a polynomial, when the denominator is 1. This is the
    /// lossless round-trip back to the plain ring.
    pub fn as_poly(&self) -> Option<&StarPoly<SymbolRef>> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<GaussRat> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    pub fn add(&self, other: &Self) -> Self {
        // common denominator: max of exponents per symbol
        let mut powers: BTreeMap<SymbolRef, u32> = BTreeMap::new();
        for (s, e) in self.den.powers().iter().chain(other.den.powers()) {
            let slot = powers.entry(s.clone()).or_insert(0);
            *slot = (*slot).max(*e);
        }
        let common = Monomial::from_powers(powers.clone().into_iter().collect());
        let lift = |f: &UnitFraction| -> StarPoly<SymbolRef> {
            let extra = Monomial::from_powers(
                powers
                    .iter()
                    .map(|(s, e)| (s.clone(), e - f.den.exponent_of(s)))
                    .collect(),
            );
            f.num.mul(&StarPoly::term(extra, GaussRat::one()))
        };
        Self::reduced(lift(self).add(&lift(other)), common)
    }

    pub fn neg(&self) -> Self {
        UnitFraction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Exact reciprocal. The numerator must be a single term whose monomial
    /// involves only unit symbols.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        let (m, c) = self
            .num
            .as_single_term()
            .ok_or_else(|| ScalarError::NotAUnit(self.to_string()))?;
        if !m.involves_only_units() {
            return Err(ScalarError::NotAUnit(self.to_string()));
        }
        let inv_c = c.inv().expect("nonzero coefficient of a stored term");
        Ok(Self::reduced(
            StarPoly::term(self.den.clone(), inv_c),
            m.clone(),
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = UnitFraction::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn conj(&self) -> Self {
        Self::reduced(self.num.conj(), self.den.conj())
    }

    /// Equality by cross-multiplication: `f = g` iff
    /// `num(f)*den(g) - num(g)*den(f)` normalizes to zero. Agrees with
    /// canonical-form equality.
    pub fn cross_eq(&self, other: &Self) -> bool {
        let lhs = self
            .num
            .mul(&StarPoly::term(other.den.clone(), GaussRat::one()));
        let rhs = other
            .num
            .mul(&StarPoly::term(self.den.clone(), GaussRat::one()));
        lhs.sub(&rhs).is_zero()
    }

    /// Equality modulo defining relations for derived unit symbols: cross
    /// multiply, expand each related symbol by its defining polynomial, and
    /// test for zero.
    pub fn eq_mod_relations(
        &self,
        other: &Self,
        relations: &[(SymbolRef, StarPoly<SymbolRef>)],
    ) -> bool {
        let lhs = self
            .num
            .mul(&StarPoly::term(other.den.clone(), GaussRat::one()));
        let rhs = other
            .num
            .mul(&StarPoly::term(self.den.clone(), GaussRat::one()));
        let mut diff = lhs.sub(&rhs);
        for (s, value) in relations {
            diff = diff.subst_symbol(s, value);
        }
        diff.is_zero()
    }

    /// Exact evaluation under a symbol binding.
    pub fn substitute(&self, binding: &Binding) -> Result<GaussRat, ScalarError> {
        binding.validate()?;
        for s in self.num.symbols() {
            binding.lookup(s)?;
        }
        let num = self.num.eval(|s| binding.lookup(s))?;
        let mut den = GaussRat::one();
        for (s, e) in self.den.powers() {
            den = &den * &binding.lookup(s)?.pow(*e);
        }
        Ok(num
            .div(&den)
            .expect("unit denominators evaluate to nonzero"))
    }

    /// Substitute fractions for symbols (used to instantiate parametric
    /// matrix templates). Conjugated symbols receive the conjugated value.
    pub fn subst_symbols(
        &self,
        mut lookup: impl FnMut(&SymbolRef) -> Result<UnitFraction, ScalarError>,
    ) -> Result<UnitFraction, ScalarError> {
        let mut resolve = |s: &SymbolRef| -> Result<UnitFraction, ScalarError> {
            let base = SymbolRef::new(s.name(), s.is_unit_symbol());
            let v = lookup(&base)?;
            Ok(if s.is_conjugated() { v.conj() } else { v })
        };
        let mut acc = UnitFraction::zero();
        for (m, c) in self.num.terms() {
            let mut prod = UnitFraction::constant(c.clone());
            for (s, e) in m.powers() {
                prod = prod.mul(&resolve(s)?.pow(*e as i64)?);
            }
            acc = acc.add(&prod);
        }
        let mut den = UnitFraction::one();
        for (s, e) in self.den.powers() {
            den = den.mul(&resolve(s)?.pow(*e as i64)?);
        }
        acc.div(&den)
    }
}

impl fmt::Display for UnitFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// An association of symbols to exact values. A symbol whose conjugate is
/// bound resolves to the conjugate of that value, so bindings may list
/// either or both members of a conjugate pair.
#[derive(Clone, Debug, Default)]
pub struct Binding {
    values: BTreeMap<SymbolRef, GaussRat>,
}

impl Binding {
    pub fn new() -> Self {
        Binding::default()
    }

    pub fn bind(&mut self, s: SymbolRef, v: GaussRat) -> &mut Self {
        self.values.insert(s, v);
        self
    }

    /// Bind a base symbol and its conjugate consistently.
    pub fn bind_pair(&mut self, name: &str, unit: bool, v: GaussRat) -> &mut Self {
        let s = SymbolRef::new(name, unit);
        self.values.insert(s.conj_symbol(), v.conj());
        self.values.insert(s, v);
        self
    }

    fn validate(&self) -> Result<(), ScalarError> {
        for (s, v) in &self.values {
            if s.is_unit_symbol() && v.is_zero() {
                return Err(ScalarError::ZeroUnit(s.to_string()));
            }
            if let Some(w) = self.values.get(&s.conj_symbol()) {
                if *w != v.conj() {
                    return Err(ScalarError::InconsistentConjugation(s.name().to_string()));
                }
            }
        }
        Ok(())
    }

    fn lookup(&self, s: &SymbolRef) -> Result<GaussRat, ScalarError> {
        if let Some(v) = self.values.get(s) {
            return Ok(v.clone());
        }
        if let Some(v) = self.values.get(&s.conj_symbol()) {
            return Ok(v.conj());
        }
        Err(ScalarError::UnboundSymbol(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_expr;
    use std::collections::BTreeSet;

    fn units() -> BTreeSet<String> {
        ["a"].iter().map(|s| s.to_string()).collect()
    }

    fn expr(text: &str) -> UnitFraction {
        parse_expr(text, &units()).unwrap()
    }

    #[test]
    fn mul_inverse_cancels() {
        let f = expr("1/a").mul(&expr("a"));
        assert!(f.is_one());
    }

    #[test]
    fn add_with_unlike_denominators() {
        // bc/a^4*conj(a)^2 + (-e)/a^3*conj(a) = (bc - e*a*conj(a))/(a^4*conj(a)^2)
        let lhs = expr("b*c/(a^4*conj(a)^2)").add(&expr("-e/(a^3*conj(a))"));
        let rhs = expr("(b*c - e*a*conj(a))/(a^4*conj(a)^2)");
        assert_eq!(lhs, rhs);
        assert!(lhs.cross_eq(&rhs));
    }

    #[test]
    fn cancellation_to_polynomial() {
        let f = expr("c/(a^3*conj(a)^2)").mul(&expr("a^3*conj(a)^2"));
        assert_eq!(f, expr("c"));
        assert!(f.as_poly().is_some());
    }

    #[test]
    fn inv_of_monomial_and_errors() {
        assert_eq!(expr("a").inv().unwrap(), expr("1/a"));
        assert_eq!(expr("2*a*conj(a)").inv().unwrap(), expr("1/2/(a*conj(a))"));
        assert!(matches!(expr("a + b").inv(), Err(ScalarError::NotAUnit(_))));
        assert!(matches!(expr("b").inv(), Err(ScalarError::NotAUnit(_))));
    }

    #[test]
    fn substitute_exactly() {
        let f = expr("a*conj(a)");
        let mut b = Binding::new();
        b.bind_pair("a", true, GaussRat::from_parts(1, 1));
        assert_eq!(f.substitute(&b).unwrap(), GaussRat::from_int(2));
    }

    #[test]
    fn substitute_error_paths() {
        let f = expr("a*b");
        let mut b = Binding::new();
        b.bind_pair("a", true, GaussRat::one());
        assert!(matches!(
            f.substitute(&b),
            Err(ScalarError::UnboundSymbol(_))
        ));

        let mut z = Binding::new();
        z.bind_pair("a", true, GaussRat::zero());
        assert!(matches!(
            expr("a").substitute(&z),
            Err(ScalarError::ZeroUnit(_))
        ));

        let mut bad = Binding::new();
        bad.bind(SymbolRef::new("b", false), GaussRat::i());
        bad.bind(SymbolRef::new("b", false).conj_symbol(), GaussRat::i());
        assert!(matches!(
            expr("b*conj(b)").substitute(&bad),
            Err(ScalarError::InconsistentConjugation(_))
        ));
    }

    #[test]
    fn substitute_inverse_entry_example() {
        // -b/(a^2*conj(a)) at a = 1, b = 3 evaluates to -3
        let f = expr("-b/(a^2*conj(a))");
        let mut b = Binding::new();
        b.bind_pair("a", true, GaussRat::one());
        b.bind_pair("b", false, GaussRat::from_int(3));
        assert_eq!(f.substitute(&b).unwrap(), GaussRat::from_int(-3));
    }

    #[test]
    fn canonical_equality_agrees_with_cross_multiplication() {
        let f = expr("(b + c)/(a^2*conj(a))");
        // same element written with a removable common power
        let g = expr("(b*a + c*a)/(a^3*conj(a))");
        assert_eq!(f, g);
        assert!(f.cross_eq(&g));
        let h = expr("(b + c)/(a*conj(a))");
        assert_ne!(f, h);
        assert!(!f.cross_eq(&h));
    }

    #[test]
    fn denominator_one_roundtrips_to_poly() {
        let f = expr("b*a/(a)");
        assert!(f.as_poly().is_some());
        assert_eq!(f, expr("b"));
    }
}
