//! Rank and Levi tests at rational points, and the pointwise class
//! verdict.

use serde::Serialize;

use crate::scalar::GaussRat;

use super::field::{coord_bracket, CoordVectorField, Dir};
use super::ratfunc::CoordVar;
use super::{Ambient, GraphedHypersurface, HyperError, Point};

/// Exact rank of a complex matrix given as rows, by Gaussian elimination
/// over the Gaussian rationals.
pub fn complex_rank(mut rows: Vec<Vec<GaussRat>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows.len() && col < cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            col += 1;
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        let (pivot_rows, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &pivot_rows[rank];
        for row in rest {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].div(&lead).unwrap();
            for (cell, above) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                let sub = above * &factor;
                *cell = &*cell - &sub;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// The complex rank of a list of fields at a point of the graph.
pub fn rank_at_point(
    fields: &[CoordVectorField],
    m: &GraphedHypersurface,
    q: &Point,
) -> Result<usize, HyperError> {
    let values = m.check_point(q)?;
    let vars = m.ambient.vars();
    let lookup = move |v: &CoordVar| {
        let idx = vars.iter().position(|w| w == v).expect("graph variable");
        values[idx].clone()
    };
    let rows = fields
        .iter()
        .map(|f| f.eval(&lookup))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(complex_rank(rows))
}

/// The Levi matrix of the two tangential generators at a point: the
/// transverse `w`-component of `I*[L_j, conj(L_k)]`, evaluated exactly.
pub fn levi_matrix_at(
    m: &GraphedHypersurface,
    q: &Point,
) -> Result<Vec<Vec<GaussRat>>, HyperError> {
    assert_eq!(m.ambient, Ambient::C3);
    let values = m.check_point(q)?;
    let vars = m.ambient.vars();
    let lookup = move |v: &CoordVar| {
        let idx = vars.iter().position(|w| w == v).expect("graph variable");
        values[idx].clone()
    };
    let gens = m.generators();
    let mut rows = Vec::with_capacity(2);
    for lj in &gens {
        let mut row = Vec::with_capacity(2);
        for lk in &gens {
            let bracket = coord_bracket(lj, &lk.conj())?;
            let w = bracket.component(Dir::W).eval(&lookup)?;
            row.push(&GaussRat::i() * &w);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// The pointwise class verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    /// Hypersurface in the plane case with bracket rank 3.
    ClassI,
    /// Levi form of rank 2 at the point.
    ClassIV1,
    /// Levi form of rank 1 at the point. A pointwise test cannot certify
    /// the constant-rank condition near the point, so this is only a
    /// candidacy.
    ClassIV2Candidate,
    /// Ranks below the class thresholds.
    Degenerate,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Verdict::ClassI => "ClassI",
            Verdict::ClassIV1 => "ClassIV1",
            Verdict::ClassIV2Candidate => "ClassIV2-candidate",
            Verdict::Degenerate => "Degenerate",
        };
        write!(f, "{name}")
    }
}

/// The verdict together with the exact quantities it rests on.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    /// Rank of (L, conj L, [L, conj L]) in the plane case.
    pub bracket_rank: Option<usize>,
    /// Levi rank and determinant in the space case.
    pub levi_rank: Option<usize>,
    pub levi_det: Option<String>,
    pub levi_matrix: Option<Vec<Vec<String>>>,
}

/// Classify a point of a graphed hypersurface by the rank criteria.
pub fn classify_point(m: &GraphedHypersurface, q: &Point) -> Result<Classification, HyperError> {
    match m.ambient {
        Ambient::C2 => {
            let gens = m.generators();
            let l = &gens[0];
            let lbar = l.conj();
            let bracket = coord_bracket(l, &lbar)?;
            let rank = rank_at_point(&[l.clone(), lbar, bracket], m, q)?;
            Ok(Classification {
                verdict: if rank == 3 {
                    Verdict::ClassI
                } else {
                    Verdict::Degenerate
                },
                bracket_rank: Some(rank),
                levi_rank: None,
                levi_det: None,
                levi_matrix: None,
            })
        }
        Ambient::C3 => {
            let levi = levi_matrix_at(m, q)?;
            let det = &(&levi[0][0] * &levi[1][1]) - &(&levi[0][1] * &levi[1][0]);
            let rank = complex_rank(levi.clone());
            let verdict = match rank {
                2 => Verdict::ClassIV1,
                1 => Verdict::ClassIV2Candidate,
                _ => Verdict::Degenerate,
            };
            Ok(Classification {
                verdict,
                bracket_rank: None,
                levi_rank: Some(rank),
                levi_det: Some(det.to_string()),
                levi_matrix: Some(
                    levi.iter()
                        .map(|r| r.iter().map(|e| e.to_string()).collect())
                        .collect(),
                ),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypersurface::RealPoly;

    fn poly(v: CoordVar) -> RealPoly {
        RealPoly::symbol(v)
    }

    fn quadric_c2() -> GraphedHypersurface {
        GraphedHypersurface::new(
            Ambient::C2,
            poly(CoordVar::X).pow(2).add(&poly(CoordVar::Y).pow(2)),
        )
    }

    #[test]
    fn quadric_is_class_i_at_on_graph_points() {
        let m = quadric_c2();
        // (x, y, u, v) with v = x^2 + y^2
        for (x, y, u) in [(0, 0, 0), (1, 0, 5), (2, -3, 1)] {
            let q = Point::from_ints(&[x, y, u, x * x + y * y]);
            let c = classify_point(&m, &q).unwrap();
            assert_eq!(c.verdict, Verdict::ClassI);
            assert_eq!(c.bracket_rank, Some(3));
        }
    }

    #[test]
    fn flat_graph_is_degenerate() {
        let m = GraphedHypersurface::new(Ambient::C2, RealPoly::zero());
        let q = Point::from_ints(&[0, 0, 0, 0]);
        let c = classify_point(&m, &q).unwrap();
        assert_eq!(c.verdict, Verdict::Degenerate);
        assert_eq!(c.bracket_rank, Some(2));
    }

    #[test]
    fn point_off_graph_is_rejected() {
        let m = quadric_c2();
        let q = Point::from_ints(&[1, 0, 0, 0]);
        assert!(matches!(
            classify_point(&m, &q),
            Err(HyperError::PointNotOnM { .. })
        ));
    }

    #[test]
    fn nondegenerate_quadric_in_c3_is_iv1() {
        let phi = poly(CoordVar::X1)
            .pow(2)
            .add(&poly(CoordVar::Y1).pow(2))
            .add(&poly(CoordVar::X2).pow(2))
            .add(&poly(CoordVar::Y2).pow(2));
        let m = GraphedHypersurface::new(Ambient::C3, phi);
        let q = Point::from_ints(&[0, 0, 0, 0, 0, 0]);
        let c = classify_point(&m, &q).unwrap();
        assert_eq!(c.verdict, Verdict::ClassIV1);
        assert_eq!(c.levi_rank, Some(2));
        // Levi matrix is -2 Id, determinant 4
        assert_eq!(c.levi_det.as_deref(), Some("4"));
    }

    #[test]
    fn degenerate_direction_gives_iv2_candidate() {
        let phi = poly(CoordVar::X1).pow(2).add(&poly(CoordVar::Y1).pow(2));
        let m = GraphedHypersurface::new(Ambient::C3, phi);
        let q = Point::from_ints(&[0, 0, 0, 0, 0, 0]);
        let c = classify_point(&m, &q).unwrap();
        assert_eq!(c.verdict, Verdict::ClassIV2Candidate);
        assert_eq!(c.levi_rank, Some(1));
    }

    #[test]
    fn rank_is_invariant_under_generator_rescaling() {
        let m = quadric_c2();
        let gens = m.generators();
        let l = &gens[0];
        // f = 1 + x^2, nonvanishing at rational points
        let f = crate::hypersurface::RationalFunc::from_poly(
            RealPoly::one().add(&poly(CoordVar::X).pow(2)),
        );
        let fl = l.scale(&f);
        let flbar = fl.conj();
        let fields = [
            fl.clone(),
            flbar.clone(),
            coord_bracket(&fl, &flbar).unwrap(),
        ];
        let q = Point::from_ints(&[1, 2, 3, 5]);
        assert_eq!(rank_at_point(&fields, &m, &q).unwrap(), 3);
    }

    #[test]
    fn levi_verdict_invariant_under_constant_frame_change() {
        use rand::{Rng, SeedableRng};
        let phi = poly(CoordVar::X1).pow(2).add(&poly(CoordVar::Y1).pow(2));
        let m = GraphedHypersurface::new(Ambient::C3, phi);
        let q = Point::from_ints(&[0, 0, 0, 0, 0, 0]);
        let gens = m.generators();

        let values = m.check_point(&q).unwrap();
        let vars = m.ambient.vars();
        let lookup = move |v: &CoordVar| {
            let idx = vars.iter().position(|w| w == v).unwrap();
            values[idx].clone()
        };
        let levi_rank = |l1p: &CoordVectorField, l2p: &CoordVectorField| {
            let mut rows = Vec::new();
            for lj in [l1p, l2p] {
                let mut row = Vec::new();
                for lk in [l1p, l2p] {
                    let b = coord_bracket(lj, &lk.conj()).unwrap();
                    row.push(&GaussRat::i() * &b.component(Dir::W).eval(&lookup).unwrap());
                }
                rows.push(row);
            }
            complex_rank(rows)
        };

        let mut rng = rand::rngs::StdRng::seed_from_u64(17);
        let mut tried = 0;
        while tried < 5 {
            let coeff = |rng: &mut rand::rngs::StdRng| {
                GaussRat::from_parts(rng.gen_range(-2i64..=2), rng.gen_range(-2i64..=2))
            };
            let (a, b, c, d) = (
                coeff(&mut rng),
                coeff(&mut rng),
                coeff(&mut rng),
                coeff(&mut rng),
            );
            if (&(&a * &d) - &(&b * &c)).is_zero() {
                continue;
            }
            let lift = |v: &GaussRat| crate::hypersurface::RationalFunc::constant(v.clone());
            let l1p = gens[0]
                .scale(&lift(&a))
                .add(&gens[1].scale(&lift(&b)))
                .unwrap();
            let l2p = gens[0]
                .scale(&lift(&c))
                .add(&gens[1].scale(&lift(&d)))
                .unwrap();
            assert_eq!(levi_rank(&l1p, &l2p), 1, "change ({a}, {b}; {c}, {d})");
            tried += 1;
        }
    }
}
