//! The printed frame-transfer matrices and coefficient definitions, and
//! the entrywise diff of the derivation against them.
//!
//! A diff entry is a `match` or an `erratum(printed, derived)`; errata are
//! documentation, not failures. The derivation finds exactly two: the
//! first class's coefficient definition applies the derivation to the
//! wrong generator, and the second class's displayed matrix carries too
//! low a weight on its last diagonal entry.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::groups::GroupId;

use super::derive::{derive_transfer, DerivedTransfer};
use super::table::{builtin_declarations, parse_func_expr};
use super::FrameError;

pub use crate::groups::CheckStatus;

/// One entry of the diff: a matrix entry or a named coefficient.
#[derive(Clone, Debug, Serialize)]
pub struct TransferDiff {
    pub location: String,
    pub status: CheckStatus,
    pub printed: String,
    pub derived: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErratumReport {
    pub class: String,
    pub records: Vec<TransferDiff>,
}

impl ErratumReport {
    pub fn errata(&self) -> impl Iterator<Item = &TransferDiff> {
        self.records
            .iter()
            .filter(|r| r.status == CheckStatus::Erratum)
    }
}

struct Golden {
    matrix: &'static [&'static [&'static str]],
    coeffs: &'static [(&'static str, &'static str)],
}

fn golden(class: GroupId) -> Golden {
    match class {
        GroupId::I => Golden {
            matrix: &[
                &["a", "0", "0"],
                &["0", "conj(a)", "0"],
                &["b", "conj(b)", "a*conj(a)"],
            ],
            // printed with the underived generator applied to a
            coeffs: &[("b", "-I*conj(a)*L(a)")],
        },
        GroupId::II => Golden {
            matrix: &[
                &["a", "0", "0", "0"],
                &["0", "conj(a)", "0", "0"],
                &["b", "conj(b)", "a*conj(a)", "0"],
                // the printed display carries a*conj(a) in the corner
                &["e", "d", "c", "a*conj(a)"],
            ],
            coeffs: &[
                ("b", "-I*conj(a)*Lbar(a)"),
                ("c", "-I*a*conj(b) + a*L(a*conj(a))"),
                ("d", "a*L(conj(b))"),
                ("e", "a*L(b) - a*conj(a)*T(a) - conj(b)*Lbar(a) - b*L(a)"),
            ],
        },
        GroupId::III1 => Golden {
            matrix: &[
                &["a", "0", "0", "0", "0"],
                &["0", "conj(a)", "0", "0", "0"],
                &["b", "conj(b)", "a*conj(a)", "0", "0"],
                &["e", "d", "c", "a^2*conj(a)", "0"],
                &["conj(d)", "conj(e)", "conj(c)", "0", "a*conj(a)^2"],
            ],
            coeffs: &[
                ("b", "-I*conj(a)*Lbar(a)"),
                ("c", "-I*a*conj(b) + a*L(a*conj(a))"),
                ("d", "a*L(conj(b))"),
                ("e", "a*L(b) - a*conj(a)*T(a) - conj(b)*Lbar(a) - b*L(a)"),
            ],
        },
        GroupId::III2 => Golden {
            matrix: &[
                &["a", "0", "0", "0", "0"],
                &["0", "conj(a)", "0", "0", "0"],
                &["b", "conj(b)", "a*conj(a)", "0", "0"],
                &["e", "d", "c", "a^2*conj(a)", "0"],
                &["k", "h", "g", "f", "a^3*conj(a)"],
            ],
            coeffs: &[
                ("b", "-I*conj(a)*Lbar(a)"),
                ("c", "-I*a*conj(b) + a*L(a*conj(a))"),
                ("d", "a*L(conj(b))"),
                ("e", "a*L(b) - a*conj(a)*T(a) - conj(b)*Lbar(a) - b*L(a)"),
                ("f", "a*c + a*L(a^2*conj(a))"),
                ("g", "-I*a*d + a*L(c)"),
                ("h", "a*L(d)"),
                ("k", "a*L(e) - a^2*conj(a)*S(a) - c*T(a) - d*Lbar(a) - e*L(a)"),
            ],
        },
        GroupId::IV1 => Golden {
            matrix: &[
                &["a11", "a21", "0", "0", "0"],
                &["a12", "a22", "0", "0", "0"],
                &["0", "0", "conj(a11)", "conj(a21)", "0"],
                &["0", "0", "conj(a12)", "conj(a22)", "0"],
                &["b1", "b2", "conj(b1)", "conj(b2)", "c"],
            ],
            coeffs: &[
                (
                    "c",
                    "a11*conj(a11) + a21*conj(a11)*A + a11*conj(a21)*conj(A) + a21*conj(a21)*C",
                ),
                (
                    "b1",
                    "a21*conj(a11)*D1 + a11*conj(a21)*conj(B1) + a21*conj(a21)*E1 \
                     - I*conj(a11)*L1bar(a11) - I*conj(a21)*L2bar(a11)",
                ),
                (
                    "b2",
                    "a21*conj(a11)*D2 + a11*conj(a21)*conj(B2) + a21*conj(a21)*E2 \
                     - I*conj(a11)*L1bar(a21) - I*conj(a21)*L2bar(a21)",
                ),
            ],
        },
        GroupId::IV2 => Golden {
            matrix: &[
                &["c", "0", "0", "0", "0"],
                &["b", "a", "0", "0", "0"],
                &["0", "0", "conj(c)", "0", "0"],
                &["0", "0", "conj(b)", "conj(a)", "0"],
                &["e", "d", "conj(e)", "conj(d)", "a*conj(a)"],
            ],
            coeffs: &[
                (
                    "d",
                    "b*conj(a)*B + a*conj(b)*D - I*conj(a)*L1bar(a) - I*conj(b)*Kbar(a)",
                ),
                (
                    "e",
                    "b*conj(a)*A + a*conj(b)*C + b*conj(b)*E - I*conj(a)*L1bar(b) - I*conj(b)*Kbar(b)",
                ),
            ],
        },
    }
}

/// Entrywise diff of the derived transfer matrix and coefficient
/// definitions against the printed formulas.
pub fn compare_with_paper(class: GroupId) -> Result<ErratumReport, FrameError> {
    let derived = derive_transfer(class)?;
    Ok(diff_against_golden(&derived))
}

fn diff_against_golden(derived: &DerivedTransfer) -> ErratumReport {
    let class = derived.class;
    let g = golden(class);
    let reals = builtin_declarations().table(class).reals().clone();
    // fresh names declared real by the recipe (the Levi weight)
    let mut fresh_reals: BTreeSet<String> = reals.iter().cloned().collect();
    if class == GroupId::IV1 {
        fresh_reals.insert("c".to_string());
    }

    let mut records = Vec::new();
    for (i, row) in g.matrix.iter().enumerate() {
        for (j, printed_text) in row.iter().enumerate() {
            let printed = parse_func_expr(printed_text, &fresh_reals).expect("golden parses");
            let derived_entry = derived.entry(i, j);
            records.push(TransferDiff {
                location: format!("entry ({},{})", i + 1, j + 1),
                status: if printed == *derived_entry {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Erratum
                },
                printed: printed.to_string(),
                derived: derived_entry.to_string(),
            });
        }
    }
    for (name, printed_text) in g.coeffs {
        let printed = parse_func_expr(printed_text, &fresh_reals).expect("golden parses");
        let derived_def = derived.def(name).expect("derived coefficient exists");
        records.push(TransferDiff {
            location: format!("coefficient {name}"),
            status: if printed == *derived_def {
                CheckStatus::Pass
            } else {
                CheckStatus::Erratum
            },
            printed: printed.to_string(),
            derived: derived_def.to_string(),
        });
    }
    ErratumReport {
        class: class.to_string(),
        records,
    }
}
