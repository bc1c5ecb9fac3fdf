//! Lie algebras of the group templates: tangent directions at the
//! identity, exact rank over the rationals, and commutator closure.

use num::rational::BigRational;
use num::traits::Zero;

use crate::matrix::Matrix;
use crate::scalar::{GaussRat, Symbol, SymbolRef};

use super::templates::GroupTemplate;

/// One basis matrix per real degree of freedom: the exact directional
/// derivative of the embedding at the identity parameters, computed by
/// polynomial differentiation of the entries.
pub fn lie_algebra_basis(t: &GroupTemplate) -> Vec<(String, Matrix<GaussRat>)> {
    // identity parameter values, looked up through conjugation
    let identity_value = |s: &SymbolRef| -> GaussRat {
        let unit = t
            .params()
            .iter()
            .find(|p| p.name == s.name())
            .map(|p| p.kind.is_unit())
            .unwrap_or(false);
        if unit {
            GaussRat::one()
        } else {
            GaussRat::zero()
        }
    };

    let mut basis = Vec::new();
    for p in t.params() {
        let directions: Vec<(String, GaussRat)> = if p.kind.is_real() {
            vec![(p.name.to_string(), GaussRat::one())]
        } else {
            vec![
                (format!("Re({})", p.name), GaussRat::one()),
                (format!("Im({})", p.name), GaussRat::i()),
            ]
        };
        for (label, d) in directions {
            let n = t.dim();
            let mut rows = Vec::with_capacity(n);
            for i in 0..n {
                let mut row = Vec::with_capacity(n);
                for j in 0..n {
                    let poly = t
                        .entry(i, j)
                        .as_poly()
                        .expect("template entries are polynomial");
                    // d/dt entry(identity + t*direction) at t = 0
                    let mut acc = GaussRat::zero();
                    for s in [
                        SymbolRef::new(p.name, p.kind.is_unit()),
                        SymbolRef::new(p.name, p.kind.is_unit()).conj_symbol(),
                    ] {
                        let partial = poly.partial(&s);
                        if partial.is_zero() {
                            continue;
                        }
                        let at_identity = partial
                            .eval::<std::convert::Infallible>(|sym| Ok(identity_value(sym)))
                            .unwrap();
                        let rate = if s.is_conjugated() {
                            d.conj()
                        } else {
                            d.clone()
                        };
                        acc = &acc + &(&at_identity * &rate);
                    }
                    row.push(acc);
                }
                rows.push(row);
            }
            basis.push((label, Matrix::from_rows(rows)));
        }
    }
    basis
}

fn flatten(m: &Matrix<GaussRat>) -> Vec<BigRational> {
    let n = m.dim();
    let mut out = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(m.get(i, j).re().clone());
            out.push(m.get(i, j).im().clone());
        }
    }
    out
}

/// Exact rank of a set of rational vectors by Gaussian elimination.
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows.len() && col < cols {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(pivot) = pivot else {
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
            let factor = &row[col] / &lead;
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

/// The real dimension: rank over the rationals of the flattened real
/// coordinates of the basis.
pub fn lie_dimension(basis: &[(String, Matrix<GaussRat>)]) -> usize {
    rational_rank(basis.iter().map(|(_, m)| flatten(m)).collect())
}

/// True iff every pairwise commutator `XY - YX` lies in the rational span
/// of the basis.
pub fn lie_closure(basis: &[(String, Matrix<GaussRat>)]) -> bool {
    let span: Vec<Vec<BigRational>> = basis.iter().map(|(_, m)| flatten(m)).collect();
    let base_rank = rational_rank(span.clone());
    for (i, (_, x)) in basis.iter().enumerate() {
        for (_, y) in &basis[i + 1..] {
            let xy = x.mul(y).expect("equal dimensions");
            let yx = y.mul(x).expect("equal dimensions");
            let comm = xy.sub(&yx).expect("equal dimensions");
            let mut augmented = span.clone();
            augmented.push(flatten(&comm));
            if rational_rank(augmented) != base_rank {
                return false;
            }
        }
    }
    true
}
