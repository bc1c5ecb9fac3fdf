//! Vector fields in the complexified coordinate basis and their exact
//! Lie brackets.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::GaussRat;

use super::ratfunc::{CoordVar, RationalFunc};
use super::{Ambient, HyperError};

/// A complexified coordinate direction.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Dir {
    Z1,
    Z2,
    W,
    Z1bar,
    Z2bar,
    Wbar,
}

impl Dir {
    pub fn conj(self) -> Self {
        match self {
            Dir::Z1 => Dir::Z1bar,
            Dir::Z2 => Dir::Z2bar,
            Dir::W => Dir::Wbar,
            Dir::Z1bar => Dir::Z1,
            Dir::Z2bar => Dir::Z2,
            Dir::Wbar => Dir::W,
        }
    }

    pub fn name(self, ambient: Ambient) -> &'static str {
        match (ambient, self) {
            (Ambient::C2, Dir::Z1) => "d/dz",
            (Ambient::C2, Dir::Z1bar) => "d/dzbar",
            (_, Dir::Z1) => "d/dz1",
            (_, Dir::Z2) => "d/dz2",
            (_, Dir::W) => "d/dw",
            (_, Dir::Z1bar) => "d/dz1bar",
            (_, Dir::Z2bar) => "d/dz2bar",
            (_, Dir::Wbar) => "d/dwbar",
        }
    }

    /// The action on a function of the real graph coordinates.
    fn apply(self, f: &RationalFunc, ambient: Ambient) -> RationalFunc {
        let half = GaussRat::from_ratio(1, 2);
        let half_i = &half * &GaussRat::i();
        let pair = |x: CoordVar, y: CoordVar, sign_plus: bool| {
            let dx = f.partial(&x).scale(&half);
            let dy = f.partial(&y).scale(&half_i);
            if sign_plus {
                dx.add(&dy)
            } else {
                dx.sub(&dy)
            }
        };
        match (ambient, self) {
            (Ambient::C2, Dir::Z1) => pair(CoordVar::X, CoordVar::Y, false),
            (Ambient::C2, Dir::Z1bar) => pair(CoordVar::X, CoordVar::Y, true),
            (Ambient::C3, Dir::Z1) => pair(CoordVar::X1, CoordVar::Y1, false),
            (Ambient::C3, Dir::Z1bar) => pair(CoordVar::X1, CoordVar::Y1, true),
            (Ambient::C3, Dir::Z2) => pair(CoordVar::X2, CoordVar::Y2, false),
            (Ambient::C3, Dir::Z2bar) => pair(CoordVar::X2, CoordVar::Y2, true),
            // v has been eliminated through the graph
            (_, Dir::W) | (_, Dir::Wbar) => f.partial(&CoordVar::U).scale(&half),
            (Ambient::C2, Dir::Z2 | Dir::Z2bar) => RationalFunc::zero(),
        }
    }
}

/// A vector field with rational-function components over the complexified
/// coordinate basis of its ambient space.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordVectorField {
    ambient: Ambient,
    comps: BTreeMap<Dir, RationalFunc>,
}

impl CoordVectorField {
    pub fn zero(ambient: Ambient) -> Self {
        CoordVectorField {
            ambient,
            comps: BTreeMap::new(),
        }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn set(&mut self, dir: Dir, value: RationalFunc) {
        if value.is_zero() {
            self.comps.remove(&dir);
        } else {
            self.comps.insert(dir, value);
        }
    }

    pub fn component(&self, dir: Dir) -> RationalFunc {
        self.comps
            .get(&dir)
            .cloned()
            .unwrap_or_else(RationalFunc::zero)
    }

    pub fn components(&self) -> impl Iterator<Item = (&Dir, &RationalFunc)> {
        self.comps.iter()
    }

    pub fn add(&self, other: &Self) -> Result<Self, HyperError> {
        if self.ambient != other.ambient {
            return Err(HyperError::AmbientMismatch);
        }
        let mut out = self.clone();
        for (d, c) in &other.comps {
            out.set(*d, out.component(*d).add(c));
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        CoordVectorField {
            ambient: self.ambient,
            comps: self.comps.iter().map(|(d, c)| (*d, c.neg())).collect(),
        }
    }

    pub fn scale(&self, f: &RationalFunc) -> Self {
        if f.is_zero() {
            return CoordVectorField::zero(self.ambient);
        }
        CoordVectorField {
            ambient: self.ambient,
            comps: self.comps.iter().map(|(d, c)| (*d, c.mul(f))).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        CoordVectorField {
            ambient: self.ambient,
            comps: self
                .comps
                .iter()
                .map(|(d, c)| (d.conj(), c.conj()))
                .collect(),
        }
    }

    /// The field applied to a function as a derivation.
    pub fn apply(&self, f: &RationalFunc) -> RationalFunc {
        let mut out = RationalFunc::zero();
        for (d, c) in &self.comps {
            out = out.add(&c.mul(&d.apply(f, self.ambient)));
        }
        out
    }

    /// Evaluate all components at graph coordinates.
    pub fn eval(
        &self,
        lookup: &dyn Fn(&CoordVar) -> GaussRat,
    ) -> Result<Vec<GaussRat>, HyperError> {
        self.ambient
            .dirs()
            .iter()
            .map(|d| self.component(*d).eval(lookup))
            .collect()
    }
}

impl fmt::Display for CoordVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}) {}", c, d.name(self.ambient))?;
        }
        Ok(())
    }
}

/// The Lie bracket `[X, Y]_j = X(Y_j) - Y(X_j)` with exact quotient-rule
/// differentiation.
pub fn coord_bracket(
    x: &CoordVectorField,
    y: &CoordVectorField,
) -> Result<CoordVectorField, HyperError> {
    if x.ambient != y.ambient {
        return Err(HyperError::AmbientMismatch);
    }
    let mut out = CoordVectorField::zero(x.ambient);
    for d in x.ambient.dirs() {
        let value = x.apply(&y.component(*d)).sub(&y.apply(&x.component(*d)));
        out.set(*d, value);
    }
    Ok(out)
}
