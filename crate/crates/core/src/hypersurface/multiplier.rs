//! The multiplier of an explicit equivalence: the factor `a` with
//! `h'_*(L') = a L`, evaluated exactly at a point, together with the
//! consistency residual that vanishes exactly when the map intertwines
//! the two generators.

use std::fmt;

use serde::Serialize;

use crate::scalar::{GaussRat, StarPoly, Symbol};

use super::ratfunc::CoordVar;
use super::{Ambient, GraphedHypersurface, HyperError, Point};

/// A primed complex coordinate of the source of the map.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PrimedVar {
    Zp,
    Wp,
}

impl PrimedVar {
    pub fn name(self) -> &'static str {
        match self {
            PrimedVar::Zp => "z'",
            PrimedVar::Wp => "w'",
        }
    }
}

impl Symbol for PrimedVar {
    fn conj_symbol(&self) -> Self {
        // holomorphic polynomials never involve conjugated coordinates
        *self
    }

    fn is_unit_symbol(&self) -> bool {
        false
    }

    fn write_expr(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A holomorphic polynomial map `(z', w') -> (z, w)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HoloMap {
    pub z: StarPoly<PrimedVar>,
    pub w: StarPoly<PrimedVar>,
}

impl HoloMap {
    pub fn identity() -> Self {
        HoloMap {
            z: StarPoly::symbol(PrimedVar::Zp),
            w: StarPoly::symbol(PrimedVar::Wp),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplierResult {
    /// The multiplier value at the point, as an expression string.
    pub multiplier: String,
    /// The tangency residual; zero exactly when the map matches the two
    /// generators at the point.
    pub residual: String,
    #[serde(skip)]
    pub multiplier_value: GaussRat,
    #[serde(skip)]
    pub residual_value: GaussRat,
}

fn eval_holo(p: &StarPoly<PrimedVar>, z: &GaussRat, w: &GaussRat) -> GaussRat {
    p.eval::<std::convert::Infallible>(|v| {
        Ok(match v {
            PrimedVar::Zp => z.clone(),
            PrimedVar::Wp => w.clone(),
        })
    })
    .unwrap()
}

/// The tangential derivative coefficient `A = phi_z / (I + phi_u)` of a
/// graph, evaluated at given real coordinates.
fn coefficient_a(m: &GraphedHypersurface, x: &GaussRat, y: &GaussRat, u: &GaussRat) -> GaussRat {
    let lookup = |v: &CoordVar| match v {
        CoordVar::X => x.clone(),
        CoordVar::Y => y.clone(),
        CoordVar::U => u.clone(),
        other => panic!("unexpected variable {other:?} in a plane graph"),
    };
    let phi_z = m
        .phi_z(0)
        .eval::<std::convert::Infallible>(|v| Ok(lookup(v)))
        .unwrap();
    let phi_u = m
        .phi_u()
        .eval::<std::convert::Infallible>(|v| Ok(lookup(v)))
        .unwrap();
    let den = &GaussRat::i() + &phi_u;
    phi_z
        .div(&den)
        .expect("I + phi_u never vanishes for real phi_u")
}

/// Evaluate the multiplier `a = z_{z'} + 2 A' z_{w'}` of the map at a
/// point of the primed (target-side) hypersurface, and the residual
/// `A - (w_{z'} + 2 A' w_{w'}) / (2a)` at the matched point. The residual
/// is zero whenever the map carries the primed generator to `a` times the
/// unprimed one.
pub fn multiplier_at(
    map: &HoloMap,
    source: &GraphedHypersurface,
    target: &GraphedHypersurface,
    q_prime: &Point,
) -> Result<MultiplierResult, HyperError> {
    assert_eq!(
        source.ambient,
        Ambient::C2,
        "the multiplier lives in the plane case"
    );
    assert_eq!(target.ambient, Ambient::C2);
    let values = target.check_point(q_prime)?;
    let (xp, yp, up, vp) = (
        values[0].clone(),
        values[1].clone(),
        values[2].clone(),
        values[3].clone(),
    );
    let zp = &xp + &(&yp * &GaussRat::i());
    let wp = &up + &(&vp * &GaussRat::i());

    let a_prime = coefficient_a(target, &xp, &yp, &up);

    let z_zp = eval_holo(&map.z.partial(&PrimedVar::Zp), &zp, &wp);
    let z_wp = eval_holo(&map.z.partial(&PrimedVar::Wp), &zp, &wp);
    let w_zp = eval_holo(&map.w.partial(&PrimedVar::Zp), &zp, &wp);
    let w_wp = eval_holo(&map.w.partial(&PrimedVar::Wp), &zp, &wp);

    let two = GaussRat::from_int(2);
    let multiplier = &z_zp + &(&(&two * &a_prime) * &z_wp);
    if multiplier.is_zero() {
        return Err(HyperError::ZeroDenominator);
    }

    // the matched point h'(q') on the unprimed side
    let z = eval_holo(&map.z, &zp, &wp);
    let w = eval_holo(&map.w, &zp, &wp);
    let x = GaussRat::from_re(z.re().clone());
    let y = GaussRat::from_re(z.im().clone());
    let u = GaussRat::from_re(w.re().clone());
    let a = coefficient_a(source, &x, &y, &u);

    // tangency: the w-over-z component ratio of the pushed generator must
    // be 2A, so the residual compares A with half the ratio
    let ratio = (&w_zp + &(&(&two * &a_prime) * &w_wp))
        .div(&multiplier)
        .expect("multiplier checked nonzero");
    let residual = &a - &ratio.div(&two).unwrap();

    Ok(MultiplierResult {
        multiplier: multiplier.to_string(),
        residual: residual.to_string(),
        multiplier_value: multiplier,
        residual_value: residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypersurface::RealPoly;

    fn quadric() -> GraphedHypersurface {
        let x = RealPoly::symbol(CoordVar::X);
        let y = RealPoly::symbol(CoordVar::Y);
        GraphedHypersurface::new(Ambient::C2, x.pow(2).add(&y.pow(2)))
    }

    #[test]
    fn identity_map_has_unit_multiplier_everywhere() {
        let m = quadric();
        let map = HoloMap::identity();
        for (x, y, u) in [(0, 0, 0), (1, 0, 2), (-2, 3, 1)] {
            let q = Point::from_ints(&[x, y, u, x * x + y * y]);
            let r = multiplier_at(&map, &m, &m, &q).unwrap();
            assert!(r.multiplier_value.is_one(), "a = {}", r.multiplier);
            assert!(r.residual_value.is_zero(), "residual = {}", r.residual);
        }
    }

    #[test]
    fn dilation_of_the_quadric_has_constant_multiplier() {
        // z = lambda z', w = |lambda|^2 w' maps v' = |z'|^2 to v = |z|^2
        let m = quadric();
        let lambda = GaussRat::from_parts(2, 1);
        let norm = &lambda * &lambda.conj();
        let map = HoloMap {
            z: StarPoly::symbol(PrimedVar::Zp).scale(&lambda),
            w: StarPoly::symbol(PrimedVar::Wp).scale(&norm),
        };
        for (x, y, u) in [(0, 0, 0), (1, 1, 3), (2, -1, -4)] {
            let q = Point::from_ints(&[x, y, u, x * x + y * y]);
            let r = multiplier_at(&map, &m, &m, &q).unwrap();
            assert_eq!(r.multiplier_value, lambda);
            assert!(r.residual_value.is_zero(), "residual = {}", r.residual);
        }
    }

    #[test]
    fn degenerate_jacobian_reports_zero_denominator() {
        let m = quadric();
        let map = HoloMap {
            z: StarPoly::symbol(PrimedVar::Zp).pow(2),
            w: StarPoly::symbol(PrimedVar::Wp),
        };
        let q = Point::from_ints(&[0, 0, 0, 0]);
        assert!(matches!(
            multiplier_at(&map, &m, &m, &q),
            Err(HyperError::ZeroDenominator)
        ));
    }

    #[test]
    fn off_graph_point_is_rejected() {
        let m = quadric();
        let q = Point::from_ints(&[1, 0, 0, 7]);
        assert!(matches!(
            multiplier_at(&HoloMap::identity(), &m, &m, &q),
            Err(HyperError::PointNotOnM { .. })
        ));
    }
}
