//! Exact rational functions in real coordinate variables.

use std::fmt;

use crate::scalar::{GaussRat, StarPoly, Symbol};

use super::HyperError;

/// A real coordinate variable. Conjugation fixes it.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CoordVar {
    X,
    Y,
    X1,
    Y1,
    X2,
    Y2,
    U,
}

impl CoordVar {
    pub fn name(self) -> &'static str {
        match self {
            CoordVar::X => "x",
            CoordVar::Y => "y",
            CoordVar::X1 => "x1",
            CoordVar::Y1 => "y1",
            CoordVar::X2 => "x2",
            CoordVar::Y2 => "y2",
            CoordVar::U => "u",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            CoordVar::X,
            CoordVar::Y,
            CoordVar::X1,
            CoordVar::Y1,
            CoordVar::X2,
            CoordVar::Y2,
            CoordVar::U,
        ]
        .into_iter()
        .find(|v| v.name() == name)
    }
}

impl Symbol for CoordVar {
    fn conj_symbol(&self) -> Self {
        *self
    }

    fn is_unit_symbol(&self) -> bool {
        false
    }

    fn write_expr(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A polynomial over the real coordinates with Gaussian-rational
/// coefficients.
pub type RealPoly = StarPoly<CoordVar>;

/// An exact quotient of real-coordinate polynomials. Not reduced by
/// default: equality goes through cross-multiplication, and a light
/// normalization exists for display.
#[derive(Clone, Debug)]
pub struct RationalFunc {
    num: RealPoly,
    den: RealPoly,
}

impl RationalFunc {
    pub fn new(num: RealPoly, den: RealPoly) -> Result<Self, HyperError> {
        if den.is_zero() {
            return Err(HyperError::DivisionByZero);
        }
        Ok(RationalFunc { num, den })
    }

    pub fn from_poly(num: RealPoly) -> Self {
        RationalFunc {
            num,
            den: RealPoly::one(),
        }
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::from_poly(RealPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::constant(GaussRat::zero())
    }

    pub fn one() -> Self {
        Self::constant(GaussRat::one())
    }

    pub fn numerator(&self) -> &RealPoly {
        &self.num
    }

    pub fn denominator(&self) -> &RealPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalFunc {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn neg(&self) -> Self {
        RationalFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunc {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        RationalFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self, HyperError> {
        if other.is_zero() {
            return Err(HyperError::DivisionByZero);
        }
        Ok(RationalFunc {
            num: self.num.mul(&other.den),
            den: self.den.mul(&other.num),
        })
    }

    pub fn conj(&self) -> Self {
        RationalFunc {
            num: self.num.conj(),
            den: self.den.conj(),
        }
    }

    /// Exact partial derivative by the quotient rule.
    pub fn partial(&self, v: &CoordVar) -> Self {
        RationalFunc {
            num: self
                .num
                .partial(v)
                .mul(&self.den)
                .sub(&self.num.mul(&self.den.partial(v))),
            den: self.den.mul(&self.den),
        }
    }

    /// Exact evaluation; a vanishing denominator is a pole.
    pub fn eval(&self, lookup: &dyn Fn(&CoordVar) -> GaussRat) -> Result<GaussRat, HyperError> {
        let den = self
            .den
            .eval::<std::convert::Infallible>(|v| Ok(lookup(v)))
            .unwrap();
        if den.is_zero() {
            return Err(HyperError::PoleAtPoint(self.den.to_string()));
        }
        let num = self
            .num
            .eval::<std::convert::Infallible>(|v| Ok(lookup(v)))
            .unwrap();
        Ok(num.div(&den).unwrap())
    }

    /// Light display normalization: cancels common monomial content and
    /// scales the denominator's leading coefficient to 1. No polynomial
    /// gcd is ever computed.
    pub fn normalized(&self) -> Self {
        if self.num.is_zero() {
            return RationalFunc::zero();
        }
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        // common monomial content
        let mut shared: Option<Vec<(CoordVar, u32)>> = None;
        for (m, _) in num.terms().chain(den.terms()) {
            let powers: Vec<(CoordVar, u32)> = m.powers().to_vec();
            shared = Some(match shared {
                None => powers,
                Some(prev) => prev
                    .into_iter()
                    .filter_map(|(v, e)| {
                        let e2 = m.exponent_of(&v);
                        (e2 > 0).then(|| (v, e.min(e2)))
                    })
                    .collect(),
            });
        }
        if let Some(content) = shared {
            for (v, e) in content {
                let divide = |p: &RealPoly| {
                    let mut out = RealPoly::zero();
                    for (m, c) in p.terms() {
                        out = out.add(&RealPoly::term(
                            m.try_div_power(&v, e).expect("content divides"),
                            c.clone(),
                        ));
                    }
                    out
                };
                num = divide(&num);
                den = divide(&den);
            }
        }
        // unit leading coefficient in the denominator
        let lead = den
            .terms()
            .next_back()
            .map(|(_, c)| c.clone())
            .expect("nonzero denominator");
        let inv = lead.inv().expect("nonzero leading coefficient");
        RationalFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }
}

impl PartialEq for RationalFunc {
    /// Equality via cross-multiplication.
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RationalFunc {}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.normalized();
        if n.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", n.num)
        } else {
            write!(f, "({})/({})", n.num, n.den)
        }
    }
}
