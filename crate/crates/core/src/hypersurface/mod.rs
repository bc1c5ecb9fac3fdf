//! Concrete coordinate computations on graphed hypersurfaces: CR
//! generators, coordinate Lie brackets, rank and Levi tests at rational
//! points, and the multiplier of an explicit equivalence.
//!
//! Everything stays in exact rational-function arithmetic over the real
//! coordinates; a point test never involves a float.
//!
//! ```
//! use crgeo::hypersurface::{classify_point, parse_manifold, Point, Verdict};
//!
//! let m = parse_manifold("ambient C2\nphi = x^2 + y^2\n")?;
//! let q = Point::from_ints(&[1, 2, 0, 5]); // v = x^2 + y^2
//! assert_eq!(classify_point(&m, &q)?.verdict, Verdict::ClassI);
//! # Ok::<(), crgeo::hypersurface::HyperError>(())
//! ```

mod classify;
mod field;
mod files;
mod multiplier;
mod ratfunc;

pub use classify::{
    classify_point, complex_rank, levi_matrix_at, rank_at_point, Classification, Verdict,
};
pub use field::{coord_bracket, CoordVectorField, Dir};
pub use files::{parse_manifold, parse_map, parse_point};
pub use multiplier::{multiplier_at, HoloMap, MultiplierResult, PrimedVar};
pub use ratfunc::{CoordVar, RationalFunc, RealPoly};

use num::rational::BigRational;
use thiserror::Error;

use crate::scalar::{GaussRat, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperError {
    #[error("point does not satisfy v = phi (expected v = {expected}, got {got})")]
    PointNotOnM { expected: String, got: String },
    #[error("denominator vanishes at the point: {0}")]
    PoleAtPoint(String),
    #[error("the multiplier denominator vanishes: the map is not a CR equivalence at this point")]
    ZeroDenominator,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("fields live over different ambient spaces")]
    AmbientMismatch,
    #[error("expected {expected} coordinates, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("{what} must be a polynomial in {allowed}: found {found}")]
    BadVariable {
        what: String,
        allowed: String,
        found: String,
    },
    #[error("line {line}: {msg}")]
    File { line: usize, msg: String },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// The two ambient spaces of the coordinate computations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Ambient {
    C2,
    C3,
}

impl Ambient {
    /// The real coordinates of the graph.
    pub fn vars(self) -> &'static [CoordVar] {
        match self {
            Ambient::C2 => &[CoordVar::X, CoordVar::Y, CoordVar::U],
            Ambient::C3 => &[
                CoordVar::X1,
                CoordVar::Y1,
                CoordVar::X2,
                CoordVar::Y2,
                CoordVar::U,
            ],
        }
    }

    /// Number of complex tangential coordinates.
    pub fn z_count(self) -> usize {
        match self {
            Ambient::C2 => 1,
            Ambient::C3 => 2,
        }
    }

    /// Number of real coordinates of a point, including `v`.
    pub fn point_arity(self) -> usize {
        self.vars().len() + 1
    }

    pub fn dirs(self) -> &'static [Dir] {
        match self {
            Ambient::C2 => &[Dir::Z1, Dir::W, Dir::Z1bar, Dir::Wbar],
            Ambient::C3 => &[Dir::Z1, Dir::Z2, Dir::W, Dir::Z1bar, Dir::Z2bar, Dir::Wbar],
        }
    }
}

/// A hypersurface graphed as `v = phi` over the real coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphedHypersurface {
    pub ambient: Ambient,
    pub phi: RealPoly,
}

/// A point of the ambient space in real coordinates, `v` last.
#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    pub coords: Vec<BigRational>,
}

impl Point {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Point { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point {
            coords: coords
                .iter()
                .map(|c| BigRational::from_integer((*c).into()))
                .collect(),
        }
    }
}

impl GraphedHypersurface {
    pub fn new(ambient: Ambient, phi: RealPoly) -> Self {
        GraphedHypersurface { ambient, phi }
    }

    /// The graph coordinates of a point after the on-graph check.
    pub fn check_point(&self, q: &Point) -> Result<Vec<GaussRat>, HyperError> {
        let arity = self.ambient.point_arity();
        if q.coords.len() != arity {
            return Err(HyperError::WrongArity {
                expected: arity,
                got: q.coords.len(),
            });
        }
        let values: Vec<GaussRat> = q
            .coords
            .iter()
            .map(|r| GaussRat::new(r.clone(), BigRational::from_integer(0.into())))
            .collect();
        let graph_values = &values[..arity - 1];
        let v = &values[arity - 1];
        let phi_at = self.eval_phi(graph_values)?;
        if phi_at != *v {
            return Err(HyperError::PointNotOnM {
                expected: phi_at.to_string(),
                got: v.to_string(),
            });
        }
        Ok(values)
    }

    fn eval_phi(&self, graph_values: &[GaussRat]) -> Result<GaussRat, HyperError> {
        let vars = self.ambient.vars();
        Ok(self
            .phi
            .eval::<std::convert::Infallible>(|s| {
                let idx = vars.iter().position(|v| v == s).expect("phi variable");
                Ok(graph_values[idx].clone())
            })
            .unwrap())
    }

    /// The tangential complex derivatives `phi_{z_k} = (phi_x - I phi_y)/2`.
    pub fn phi_z(&self, k: usize) -> RealPoly {
        let (x, y) = match (self.ambient, k) {
            (Ambient::C2, 0) => (CoordVar::X, CoordVar::Y),
            (Ambient::C3, 0) => (CoordVar::X1, CoordVar::Y1),
            (Ambient::C3, 1) => (CoordVar::X2, CoordVar::Y2),
            _ => panic!("tangential index out of range"),
        };
        let half = GaussRat::from_ratio(1, 2);
        let minus_half_i = &GaussRat::from_ratio(-1, 2) * &GaussRat::i();
        self.phi
            .partial(&x)
            .scale(&half)
            .add(&self.phi.partial(&y).scale(&minus_half_i))
    }

    pub fn phi_u(&self) -> RealPoly {
        self.phi.partial(&CoordVar::U)
    }

    /// The CR generators: one for the 3-dimensional case, two for the
    /// 5-dimensional one, with components over `I + phi_u`.
    pub fn generators(&self) -> Vec<CoordVectorField> {
        let den = RealPoly::constant(GaussRat::i()).add(&self.phi_u());
        let two = GaussRat::from_int(2);
        (0..self.ambient.z_count())
            .map(|k| {
                let a_k =
                    RationalFunc::new(self.phi_z(k), den.clone()).expect("i + phi_u is nonzero");
                let mut field = CoordVectorField::zero(self.ambient);
                field.set(
                    match k {
                        0 => Dir::Z1,
                        _ => Dir::Z2,
                    },
                    RationalFunc::one(),
                );
                field.set(Dir::W, a_k.scale(&two));
                field
            })
            .collect()
    }
}

/// Free-function alias for [`GraphedHypersurface::generators`].
pub fn build_generators(m: &GraphedHypersurface) -> Vec<CoordVectorField> {
    m.generators()
}
