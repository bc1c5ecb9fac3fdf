//! Re-derivation of the frame-transfer matrices from first principles.
//!
//! Each class carries a recipe: the primed frame is built from the
//! transfer ansatz by iterated brackets (the defining brackets of the
//! class), each bracket row is pushed forward through the Leibniz
//! calculus, and the resulting coefficients are given fresh opaque names,
//! forgetting how they relate to the ansatz functions. The recipes are
//! data; the six classes differ only in recipe and table.

use std::collections::BTreeMap;

use crate::groups::GroupId;
use crate::scalar::{GaussRat, StarPoly, Symbol, SymbolRef};

use super::table::{builtin_declarations, parse_func_expr};
use super::vector::{vf_bracket, FuncPoly, VectorExpr};
use super::{FrameError, FrameSymbol, FuncAtom};

/// How one primed frame field is built.
enum RowSpec {
    /// Taken from the transfer ansatz.
    Ansatz(FrameSymbol),
    /// The conjugate of an earlier row.
    Conj(usize),
    /// `I*[row_a, row_b]`, with the stated shape.
    IBracket(usize, usize, &'static [EntrySpec]),
    /// `[row_a, row_b]`, with the stated shape.
    Bracket(usize, usize, &'static [EntrySpec]),
}

/// What each coefficient of a computed row must be.
enum EntrySpec {
    /// A forced weight monomial in the ansatz functions.
    Weight(&'static str),
    /// A fresh coefficient name; the definition is recorded.
    Fresh(&'static str),
    /// A fresh name that must be fixed by conjugation.
    FreshReal(&'static str),
    /// The conjugate of an already-named fresh coefficient.
    ConjFresh(&'static str),
    /// A forced zero.
    Zero,
}

struct Recipe {
    frame: &'static [FrameSymbol],
    rows: &'static [RowSpec],
}

use EntrySpec::{ConjFresh, Fresh, FreshReal, Weight, Zero};
use FrameSymbol::{Kbar, L1bar, L2bar, Lbar, Sbar, K, L, L1, L2, R, S, T};

fn recipe(class: GroupId) -> Recipe {
    match class {
        GroupId::I => Recipe {
            frame: &[L, Lbar, T],
            rows: &[
                RowSpec::Ansatz(L),
                RowSpec::Conj(0),
                RowSpec::IBracket(0, 1, &[Fresh("b"), ConjFresh("b"), Weight("a*conj(a)")]),
            ],
        },
        GroupId::II => Recipe {
            frame: &[L, Lbar, T, S],
            rows: &[
                RowSpec::Ansatz(L),
                RowSpec::Conj(0),
                RowSpec::IBracket(
                    0,
                    1,
                    &[Fresh("b"), ConjFresh("b"), Weight("a*conj(a)"), Zero],
                ),
                RowSpec::Bracket(
                    0,
                    2,
                    &[Fresh("e"), Fresh("d"), Fresh("c"), Weight("a^2*conj(a)")],
                ),
            ],
        },
        GroupId::III1 => Recipe {
            frame: &[L, Lbar, T, S, Sbar],
            rows: &[
                RowSpec::Ansatz(L),
                RowSpec::Conj(0),
                RowSpec::IBracket(
                    0,
                    1,
                    &[Fresh("b"), ConjFresh("b"), Weight("a*conj(a)"), Zero, Zero],
                ),
                RowSpec::Bracket(
                    0,
                    2,
                    &[
                        Fresh("e"),
                        Fresh("d"),
                        Fresh("c"),
                        Weight("a^2*conj(a)"),
                        Zero,
                    ],
                ),
                RowSpec::Conj(3),
            ],
        },
        GroupId::III2 => Recipe {
            frame: &[L, Lbar, T, S, R],
            rows: &[
                RowSpec::Ansatz(L),
                RowSpec::Conj(0),
                RowSpec::IBracket(
                    0,
                    1,
                    &[Fresh("b"), ConjFresh("b"), Weight("a*conj(a)"), Zero, Zero],
                ),
                RowSpec::Bracket(
                    0,
                    2,
                    &[
                        Fresh("e"),
                        Fresh("d"),
                        Fresh("c"),
                        Weight("a^2*conj(a)"),
                        Zero,
                    ],
                ),
                RowSpec::Bracket(
                    0,
                    3,
                    &[
                        Fresh("k"),
                        Fresh("h"),
                        Fresh("g"),
                        Fresh("f"),
                        Weight("a^3*conj(a)"),
                    ],
                ),
            ],
        },
        GroupId::IV1 => Recipe {
            frame: &[L1, L2, L1bar, L2bar, T],
            rows: &[
                RowSpec::Ansatz(L1),
                RowSpec::Ansatz(L2),
                RowSpec::Conj(0),
                RowSpec::Conj(1),
                RowSpec::IBracket(
                    0,
                    2,
                    &[
                        Fresh("b1"),
                        Fresh("b2"),
                        ConjFresh("b1"),
                        ConjFresh("b2"),
                        FreshReal("c"),
                    ],
                ),
            ],
        },
        GroupId::IV2 => Recipe {
            frame: &[K, L1, Kbar, L1bar, T],
            rows: &[
                RowSpec::Ansatz(K),
                RowSpec::Ansatz(L1),
                RowSpec::Conj(0),
                RowSpec::Conj(1),
                RowSpec::IBracket(
                    1,
                    3,
                    &[
                        Fresh("e"),
                        Fresh("d"),
                        ConjFresh("e"),
                        ConjFresh("d"),
                        Weight("a*conj(a)"),
                    ],
                ),
            ],
        },
    }
}

/// Display order of the fresh coefficients of each class.
pub fn coeff_order(class: GroupId) -> &'static [&'static str] {
    match class {
        GroupId::I => &["b"],
        GroupId::II | GroupId::III1 => &["b", "c", "d", "e"],
        GroupId::III2 => &["b", "c", "d", "e", "f", "g", "h", "k"],
        GroupId::IV1 => &["c", "b1", "b2"],
        GroupId::IV2 => &["d", "e"],
    }
}

/// A derived frame-transfer: the coefficient matrix of the primed frame
/// over the unprimed one, and the definitions of the fresh coefficient
/// names in terms of the ansatz functions and their derivations.
#[derive(Clone, Debug)]
pub struct DerivedTransfer {
    pub class: GroupId,
    pub frame: Vec<FrameSymbol>,
    pub matrix: Vec<Vec<FuncPoly>>,
    pub defs: Vec<(String, FuncPoly)>,
}

impl DerivedTransfer {
    pub fn entry(&self, i: usize, j: usize) -> &FuncPoly {
        &self.matrix[i][j]
    }

    pub fn def(&self, name: &str) -> Option<&FuncPoly> {
        self.defs.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    /// The matrix with atoms read as plain symbols, for comparison with a
    /// group template over the given unit set.
    pub fn pattern_matrix(
        &self,
        units: &std::collections::BTreeSet<String>,
    ) -> Option<Vec<Vec<StarPoly<SymbolRef>>>> {
        let mut out = Vec::with_capacity(self.matrix.len());
        for row in &self.matrix {
            let mut mapped = Vec::with_capacity(row.len());
            for entry in row {
                if entry.symbols().any(|a| !a.prefix().is_empty()) {
                    return None;
                }
                mapped.push(entry.map_symbols(|a: &FuncAtom| {
                    let base = SymbolRef::new(a.base(), units.contains(a.base()));
                    if a.is_base_conjugated() {
                        base.conj_symbol()
                    } else {
                        base
                    }
                }));
            }
            out.push(mapped);
        }
        Some(out)
    }
}

/// Build the primed frame of a class by its defining bracket recipe, push
/// each field forward, and express everything in the unprimed frame.
pub fn derive_transfer(class: GroupId) -> Result<DerivedTransfer, FrameError> {
    let decls = builtin_declarations();
    let table = decls.table(class);
    let transfer = decls.transfer(class);
    let recipe = recipe(class);

    let mut rows: Vec<VectorExpr> = Vec::with_capacity(recipe.rows.len());
    let mut defs: BTreeMap<String, FuncPoly> = BTreeMap::new();

    for spec in recipe.rows {
        let row = match spec {
            RowSpec::Ansatz(f) => transfer
                .rule_for(*f)
                .unwrap_or_else(|| panic!("no transfer ansatz for {f} in class {class}"))
                .clone(),
            RowSpec::Conj(i) => rows[*i].conj()?,
            RowSpec::IBracket(i, j, shape) => {
                let raw = vf_bracket(&rows[*i], &rows[*j], table)?.scale_const(&GaussRat::i());
                shape_row(class, table, raw, shape, recipe.frame, &mut defs)?
            }
            RowSpec::Bracket(i, j, shape) => {
                let raw = vf_bracket(&rows[*i], &rows[*j], table)?;
                shape_row(class, table, raw, shape, recipe.frame, &mut defs)?
            }
        };
        rows.push(row);
    }

    let matrix = rows
        .iter()
        .map(|row| recipe.frame.iter().map(|f| row.component(*f)).collect())
        .collect();
    let defs = coeff_order(class)
        .iter()
        .map(|name| {
            (
                name.to_string(),
                defs.remove(*name).expect("every named coefficient defined"),
            )
        })
        .collect();

    Ok(DerivedTransfer {
        class,
        frame: recipe.frame.to_vec(),
        matrix,
        defs,
    })
}

/// Check a computed row against its declared shape and replace derived
/// coefficients by fresh opaque names, recording their definitions.
fn shape_row(
    class: GroupId,
    table: &super::table::BracketTable,
    raw: VectorExpr,
    shape: &[EntrySpec],
    frame: &[FrameSymbol],
    defs: &mut BTreeMap<String, FuncPoly>,
) -> Result<VectorExpr, FrameError> {
    assert_eq!(shape.len(), frame.len());
    // every nonzero component must sit at a shaped position
    let shaped: Vec<FrameSymbol> = frame.to_vec();
    for (f, c) in raw.components() {
        if !shaped.contains(f) && !c.is_zero() {
            return Err(FrameError::NonzeroEntry {
                frame: *f,
                got: c.to_string(),
            });
        }
    }
    let mut out = VectorExpr::zero();
    for (f, spec) in frame.iter().zip(shape) {
        let coeff = raw.component(*f);
        match spec {
            EntrySpec::Weight(expected_text) => {
                let expected =
                    parse_func_expr(expected_text, table.reals()).expect("weight parses");
                if coeff != expected {
                    return Err(FrameError::WeightMismatch {
                        frame: *f,
                        expected: expected.to_string(),
                        got: coeff.to_string(),
                    });
                }
                out = out.add(&VectorExpr::term(*f, coeff));
            }
            EntrySpec::Fresh(name) => {
                defs.insert(name.to_string(), coeff);
                out = out.add(&VectorExpr::term(
                    *f,
                    FuncPoly::symbol(FuncAtom::new(name, false)),
                ));
            }
            EntrySpec::FreshReal(name) => {
                if coeff.conj() != coeff {
                    return Err(FrameError::NotReal {
                        name: name.to_string(),
                        got: coeff.to_string(),
                    });
                }
                defs.insert(name.to_string(), coeff);
                out = out.add(&VectorExpr::term(
                    *f,
                    FuncPoly::symbol(FuncAtom::new(name, true)),
                ));
            }
            EntrySpec::Zero => {
                if !coeff.is_zero() {
                    return Err(FrameError::NonzeroEntry {
                        frame: *f,
                        got: coeff.to_string(),
                    });
                }
            }
            EntrySpec::ConjFresh(name) => {
                let def = defs.get(*name).unwrap_or_else(|| {
                    panic!("class {class}: conjugate position before definition of {name}")
                });
                if coeff != def.conj() {
                    return Err(FrameError::ConjMismatch {
                        frame: *f,
                        name: name.to_string(),
                        got: coeff.to_string(),
                    });
                }
                out = out.add(&VectorExpr::term(
                    *f,
                    FuncPoly::symbol(FuncAtom::new(name, false).conj_symbol()),
                ));
            }
        }
    }
    Ok(out)
}
