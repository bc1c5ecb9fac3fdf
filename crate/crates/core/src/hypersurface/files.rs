//! Text formats: hypersurface files, map files, and points.
//!
//! A hypersurface file has two lines:
//!
//! ```text
//! ambient C2
//! phi = x^2 + y^2
//! ```
//!
//! with variables `x, y, u` (or `x1, y1, x2, y2, u`), no conjugations and
//! no denominators. A map file gives one component per line, in the
//! primed coordinates:
//!
//! ```text
//! z -> 2*z'
//! w -> 4*w'
//! ```
//!
//! Points are comma-separated rationals, `v` last.

use std::collections::BTreeSet;

use num::bigint::BigInt;
use num::rational::BigRational;

use crate::scalar::{parse_expr, StarPoly, SymbolRef, UnitFraction};

use super::multiplier::{HoloMap, PrimedVar};
use super::ratfunc::{CoordVar, RealPoly};
use super::{Ambient, GraphedHypersurface, HyperError, Point};

fn file_err(line: usize, msg: impl Into<String>) -> HyperError {
    HyperError::File {
        line,
        msg: msg.into(),
    }
}

/// Convert a parsed expression to a polynomial over a fixed variable set.
fn to_poly<V: crate::scalar::Symbol>(
    f: &UnitFraction,
    what: &str,
    allowed_names: &str,
    resolve: impl Fn(&SymbolRef) -> Option<V>,
) -> Result<StarPoly<V>, HyperError> {
    let poly = f.as_poly().ok_or_else(|| HyperError::BadVariable {
        what: what.to_string(),
        allowed: allowed_names.to_string(),
        found: "a denominator".to_string(),
    })?;
    let mut out = StarPoly::zero();
    for (m, c) in poly.terms() {
        let mut powers = Vec::new();
        for (s, e) in m.powers() {
            let v = resolve(s).ok_or_else(|| HyperError::BadVariable {
                what: what.to_string(),
                allowed: allowed_names.to_string(),
                found: s.to_string(),
            })?;
            powers.push((v, *e));
        }
        out = out.add(&StarPoly::term(
            crate::scalar::Monomial::from_powers(powers),
            c.clone(),
        ));
    }
    Ok(out)
}

/// Parse a hypersurface file.
pub fn parse_manifold(text: &str) -> Result<GraphedHypersurface, HyperError> {
    let mut ambient: Option<Ambient> = None;
    let mut phi: Option<RealPoly> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("ambient") {
            ambient = Some(match rest.trim() {
                "C2" => Ambient::C2,
                "C3" => Ambient::C3,
                other => return Err(file_err(line_no, format!("unknown ambient '{other}'"))),
            });
        } else if let Some(rest) = line.strip_prefix("phi") {
            let rest = rest.trim_start();
            let Some(expr_text) = rest.strip_prefix('=') else {
                return Err(file_err(line_no, "expected 'phi = <expression>'"));
            };
            let ambient =
                ambient.ok_or_else(|| file_err(line_no, "ambient must be declared before phi"))?;
            let parsed = parse_expr(expr_text.trim(), &BTreeSet::new())
                .map_err(|e| file_err(line_no, e.to_string()))?;
            let allowed: Vec<&str> = ambient.vars().iter().map(|v| v.name()).collect();
            let allowed_names = allowed.join(", ");
            let poly = to_poly(&parsed, "phi", &allowed_names, |s| {
                if s.is_conjugated() {
                    return None;
                }
                let v = CoordVar::from_name(s.name())?;
                ambient.vars().contains(&v).then_some(v)
            })?;
            phi = Some(poly);
        } else {
            return Err(file_err(line_no, format!("unrecognized line '{line}'")));
        }
    }
    let ambient = ambient.ok_or_else(|| file_err(0, "missing 'ambient' line"))?;
    let phi = phi.ok_or_else(|| file_err(0, "missing 'phi' line"))?;
    Ok(GraphedHypersurface::new(ambient, phi))
}

/// Parse a map file with components `z` and `w` in the primed variables.
pub fn parse_map(text: &str) -> Result<HoloMap, HyperError> {
    let mut z: Option<StarPoly<PrimedVar>> = None;
    let mut w: Option<StarPoly<PrimedVar>> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((target, expr_text)) = line.split_once("->") else {
            return Err(file_err(line_no, "expected '<component> -> <polynomial>'"));
        };
        let parsed = parse_expr(expr_text.trim(), &BTreeSet::new())
            .map_err(|e| file_err(line_no, e.to_string()))?;
        let poly = to_poly(&parsed, "map component", "z', w'", |s| {
            if s.is_conjugated() {
                return None;
            }
            match s.name() {
                "z'" => Some(PrimedVar::Zp),
                "w'" => Some(PrimedVar::Wp),
                _ => None,
            }
        })?;
        match target.trim().trim_end_matches('\'') {
            "z" => z = Some(poly),
            "w" => w = Some(poly),
            other => {
                return Err(file_err(
                    line_no,
                    format!("unknown map component '{other}' (expected z or w)"),
                ))
            }
        }
    }
    Ok(HoloMap {
        z: z.ok_or_else(|| file_err(0, "missing component 'z'"))?,
        w: w.ok_or_else(|| file_err(0, "missing component 'w'"))?,
    })
}

/// Parse a comma-separated point of exact rationals.
pub fn parse_point(text: &str) -> Result<Point, HyperError> {
    let mut coords = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        let (num_text, den_text) = match part.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (part, None),
        };
        let num: BigInt = num_text
            .parse()
            .map_err(|_| file_err(0, format!("bad rational '{part}'")))?;
        let den: BigInt = match den_text {
            Some(d) => d
                .parse()
                .map_err(|_| file_err(0, format!("bad rational '{part}'")))?,
            None => BigInt::from(1),
        };
        if den == BigInt::from(0) {
            return Err(file_err(0, format!("zero denominator in '{part}'")));
        }
        coords.push(BigRational::new(num, den));
    }
    Ok(Point::new(coords))
}
