//! Multivariate polynomials over the Gaussian rationals with a fixed
//! degree-lexicographic monomial order. Canonical by construction: no zero
//! coefficients, no zero exponents, terms sorted by the global order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::traits::Zero;

use super::gauss::GaussRat;
use super::symbol::Symbol;

/// A power product of symbols. The empty monomial denotes 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial<S: Symbol> {
    // sorted by symbol, exponents strictly positive
    powers: Vec<(S, u32)>,
}

impl<S: Symbol> Monomial<S> {
    pub fn one() -> Self {
        Monomial { powers: Vec::new() }
    }

    pub fn symbol(s: S) -> Self {
        Monomial {
            powers: vec![(s, 1)],
        }
    }

    pub fn from_powers(mut powers: Vec<(S, u32)>) -> Self {
        powers.retain(|(_, e)| *e > 0);
        powers.sort_by(|a, b| a.0.cmp(&b.0));
        // merge duplicates
        let mut merged: Vec<(S, u32)> = Vec::with_capacity(powers.len());
        for (s, e) in powers {
            match merged.last_mut() {
                Some((t, f)) if *t == s => *f += e,
                _ => merged.push((s, e)),
            }
        }
        Monomial { powers: merged }
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent_of(&self, s: &S) -> u32 {
        self.powers
            .iter()
            .find(|(t, _)| t == s)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn powers(&self) -> &[(S, u32)] {
        &self.powers
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut powers = self.powers.clone();
        powers.extend(other.powers.iter().cloned());
        Monomial::from_powers(powers)
    }

    pub fn pow(&self, e: u32) -> Self {
        Monomial::from_powers(
            self.powers
                .iter()
                .map(|(s, k)| (s.clone(), k * e))
                .collect(),
        )
    }

    pub fn conj(&self) -> Self {
        Monomial::from_powers(
            self.powers
                .iter()
                .map(|(s, e)| (s.conj_symbol(), *e))
                .collect(),
        )
    }

    /// Divide by `s^e` if every power is present; `None` otherwise.
    pub fn try_div_power(&self, s: &S, e: u32) -> Option<Self> {
        let have = self.exponent_of(s);
        if have < e {
            return None;
        }
        Some(Monomial::from_powers(
            self.powers
                .iter()
                .map(|(t, k)| (t.clone(), if t == s { k - e } else { *k }))
                .collect(),
        ))
    }

    pub fn involves_only_units(&self) -> bool {
        self.powers.iter().all(|(s, _)| s.is_unit_symbol())
    }
}

impl<S: Symbol> Ord for Monomial<S> {
    /// Degree first, then lexicographic on exponent vectors in the global
    /// symbol order: of two monomials with equal degree, the one with the
    /// higher power of the earliest distinguishing symbol is the greater.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let mut ia = self.powers.iter().peekable();
            let mut ib = other.powers.iter().peekable();
            loop {
                match (ia.peek(), ib.peek()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some((sa, ea)), Some((sb, eb))) => match sa.cmp(sb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(eb);
                            }
                            ia.next();
                            ib.next();
                        }
                    },
                }
            }
        })
    }
}

impl<S: Symbol> PartialOrd for Monomial<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: Symbol> fmt::Display for Monomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, (s, e)) in self.powers.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            s.write_expr(f)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StarPoly<S: Symbol> {
    terms: BTreeMap<Monomial<S>, GaussRat>,
}

impl<S: Symbol> StarPoly<S> {
    pub fn zero() -> Self {
        StarPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        StarPoly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        StarPoly { terms }
    }

    pub fn symbol(s: S) -> Self {
        StarPoly::term(Monomial::symbol(s), GaussRat::one())
    }

    pub fn term(m: Monomial<S>, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        StarPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial<S>, &GaussRat)> {
        self.terms.iter()
    }

    /// The value of a constant polynomial, if it is one.
    pub fn as_constant(&self) -> Option<GaussRat> {
        match self.terms.len() {
            0 => Some(GaussRat::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// The single term of a monomial polynomial, if it is one.
    pub fn as_single_term(&self) -> Option<(&Monomial<S>, &GaussRat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = &S> {
        self.terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|(s, _)| s))
    }

    fn add_term(&mut self, m: Monomial<S>, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        StarPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = StarPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return StarPoly::zero();
        }
        StarPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = StarPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Complex conjugation: coefficients conjugated, every symbol's
    /// conjugation flag toggled. An involution and a ring homomorphism.
    pub fn conj(&self) -> Self {
        let mut out = StarPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.conj(), c.conj());
        }
        out
    }

    /// Formal partial derivative with respect to one symbol.
    pub fn partial(&self, s: &S) -> Self {
        let mut out = StarPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent_of(s);
            if e > 0 {
                let lowered = m.try_div_power(s, 1).unwrap();
                out.add_term(lowered, &GaussRat::from_int(e as i64) * c);
            }
        }
        out
    }

    /// Substitute a polynomial for one symbol.
    pub fn subst_symbol(&self, s: &S, value: &StarPoly<S>) -> Self {
        let mut out = StarPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent_of(s);
            if e == 0 {
                out.add_term(m.clone(), c.clone());
            } else {
                let rest = m.try_div_power(s, e).unwrap();
                let piece = value.pow(e).mul(&StarPoly::term(rest, c.clone()));
                out = out.add(&piece);
            }
        }
        out
    }

    /// Evaluate by mapping every symbol to a value.
    pub fn eval<E>(
        &self,
        mut lookup: impl FnMut(&S) -> Result<GaussRat, E>,
    ) -> Result<GaussRat, E> {
        let mut acc = GaussRat::zero();
        for (m, c) in &self.terms {
            let mut prod = c.clone();
            for (s, e) in m.powers() {
                prod = &prod * &lookup(s)?.pow(*e);
            }
            acc = &acc + &prod;
        }
        Ok(acc)
    }

    /// Rebuild over a different symbol type.
    pub fn map_symbols<T: Symbol>(&self, mut f: impl FnMut(&S) -> T) -> StarPoly<T> {
        let mut out = StarPoly::zero();
        for (m, c) in &self.terms {
            let mapped =
                Monomial::from_powers(m.powers().iter().map(|(s, e)| (f(s), *e)).collect());
            out.add_term(mapped, c.clone());
        }
        out
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }
}

impl<S: Symbol> fmt::Display for StarPoly<S> {
    /// Canonical rendering in the expression grammar, leading term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_sign_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = if neg { -c } else { c.clone() };
            write_term(f, m, &mag)?;
        }
        Ok(())
    }
}

fn write_term<S: Symbol>(f: &mut fmt::Formatter<'_>, m: &Monomial<S>, c: &GaussRat) -> fmt::Result {
    // A real or purely imaginary coefficient renders as a plain factor;
    // a genuinely complex one needs parentheses inside a product.
    let simple = c.is_real() || c.re().is_zero();
    if m.is_one() {
        return if simple {
            write!(f, "{c}")
        } else {
            write!(f, "({c})")
        };
    }
    if c.is_one() {
        return write!(f, "{m}");
    }
    if simple {
        write!(f, "{c}*{m}")
    } else {
        write!(f, "({c})*{m}")
    }
}
