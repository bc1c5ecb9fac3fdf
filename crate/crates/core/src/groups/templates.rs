//! The six group templates, as data: parameter lists, matrix embeddings,
//! and the pattern positions from which composition and inverse laws are
//! extracted.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::scalar::{parse_expr, UnitFraction};

/// Identifier of one of the six ambiguity groups.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GroupId {
    I,
    II,
    III1,
    III2,
    IV1,
    IV2,
}

impl GroupId {
    pub const ALL: [GroupId; 6] = [
        GroupId::I,
        GroupId::II,
        GroupId::III1,
        GroupId::III2,
        GroupId::IV1,
        GroupId::IV2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupId::I => "I",
            GroupId::II => "II",
            GroupId::III1 => "III1",
            GroupId::III2 => "III2",
            GroupId::IV1 => "IV1",
            GroupId::IV2 => "IV2",
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for GroupId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "I" => Ok(GroupId::I),
            "II" => Ok(GroupId::II),
            "III1" => Ok(GroupId::III1),
            "III2" => Ok(GroupId::III2),
            "IV1" => Ok(GroupId::IV1),
            "IV2" => Ok(GroupId::IV2),
            other => Err(format!(
                "unknown group '{other}' (expected I, II, III1, III2, IV1 or IV2)"
            )),
        }
    }
}

/// How a parameter enters the group: complex or real, invertible or free.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParamKind {
    ComplexFree,
    ComplexUnit,
    RealFree,
    RealUnit,
}

impl ParamKind {
    pub fn is_unit(self) -> bool {
        matches!(self, ParamKind::ComplexUnit | ParamKind::RealUnit)
    }

    pub fn is_real(self) -> bool {
        matches!(self, ParamKind::RealFree | ParamKind::RealUnit)
    }

    /// Real degrees of freedom contributed to the Lie algebra.
    pub fn real_freedoms(self) -> usize {
        if self.is_real() {
            1
        } else {
            2
        }
    }
}

#[derive(Clone, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
}

/// One of the six parametric embeddings into square matrices.
#[derive(Clone, Debug)]
pub struct GroupTemplate {
    id: GroupId,
    n: usize,
    params: Vec<ParamSpec>,
    expected_real_dim: usize,
    entries: Vec<Vec<UnitFraction>>,
    positions: Vec<(&'static str, usize, usize)>,
    units: BTreeSet<String>,
    /// Free parameters that take the value 1 at the identity element (the
    /// diagonal of a matrix block).
    identity_one: &'static [&'static str],
}

impl GroupTemplate {
    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> &[ParamSpec] {
        &self.params
    }

    pub fn expected_real_dim(&self) -> usize {
        self.expected_real_dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &UnitFraction {
        &self.entries[i][j]
    }

    pub fn positions(&self) -> &[(&'static str, usize, usize)] {
        &self.positions
    }

    /// The unit declarations of this template's symbol universe.
    pub fn units(&self) -> &BTreeSet<String> {
        &self.units
    }

    /// The value of a parameter at the identity element.
    pub fn identity_value(&self, name: &str) -> bool {
        self.identity_one.contains(&name)
            || self
                .params
                .iter()
                .any(|p| p.name == name && p.kind.is_unit())
    }

    /// A copy with one entry replaced: a deliberately broken template for
    /// negative controls.
    pub fn tampered(&self, i: usize, j: usize, expr: &str) -> GroupTemplate {
        let mut out = self.clone();
        out.entries[i][j] = parse_expr(expr, &self.units).expect("tampered entry parses");
        out
    }
}

fn build(
    id: GroupId,
    params: Vec<(&'static str, ParamKind)>,
    expected_real_dim: usize,
    rows: &[&[&str]],
    positions: Vec<(&'static str, usize, usize)>,
    identity_one: &'static [&'static str],
) -> GroupTemplate {
    let units: BTreeSet<String> = params
        .iter()
        .filter(|(_, k)| k.is_unit())
        .map(|(n, _)| n.to_string())
        .collect();
    let n = rows.len();
    let entries: Vec<Vec<UnitFraction>> = rows
        .iter()
        .map(|row| {
            assert_eq!(row.len(), n);
            row.iter()
                .map(|e| parse_expr(e, &units).expect("template entry parses"))
                .collect()
        })
        .collect();
    GroupTemplate {
        id,
        n,
        params: params
            .into_iter()
            .map(|(name, kind)| ParamSpec { name, kind })
            .collect(),
        expected_real_dim,
        entries,
        positions,
        units,
        identity_one,
    }
}

/// The built-in template of a group.
pub fn template(id: GroupId) -> &'static GroupTemplate {
    static TEMPLATES: OnceLock<BTreeMap<GroupId, GroupTemplate>> = OnceLock::new();
    &TEMPLATES.get_or_init(build_all)[&id]
}

fn build_all() -> BTreeMap<GroupId, GroupTemplate> {
    use ParamKind::{ComplexFree as CF, ComplexUnit as CU, RealUnit as RU};
    let mut map = BTreeMap::new();

    map.insert(
        GroupId::I,
        build(
            GroupId::I,
            vec![("a", CU), ("b", CF)],
            4,
            &[
                &["a", "0", "0"],
                &["0", "conj(a)", "0"],
                &["b", "conj(b)", "a*conj(a)"],
            ],
            vec![("a", 0, 0), ("b", 2, 0)],
            &[],
        ),
    );

    map.insert(
        GroupId::II,
        build(
            GroupId::II,
            vec![("a", CU), ("b", CF), ("c", CF), ("d", CF), ("e", CF)],
            10,
            &[
                &["a", "0", "0", "0"],
                &["0", "conj(a)", "0", "0"],
                &["b", "conj(b)", "a*conj(a)", "0"],
                &["e", "d", "c", "a^2*conj(a)"],
            ],
            vec![
                ("a", 0, 0),
                ("b", 2, 0),
                ("c", 3, 2),
                ("d", 3, 1),
                ("e", 3, 0),
            ],
            &[],
        ),
    );

    map.insert(
        GroupId::III1,
        build(
            GroupId::III1,
            vec![("a", CU), ("b", CF), ("c", CF), ("d", CF), ("e", CF)],
            10,
            &[
                &["a", "0", "0", "0", "0"],
                &["0", "conj(a)", "0", "0", "0"],
                &["b", "conj(b)", "a*conj(a)", "0", "0"],
                &["e", "d", "c", "a^2*conj(a)", "0"],
                &["conj(d)", "conj(e)", "conj(c)", "0", "a*conj(a)^2"],
            ],
            vec![
                ("a", 0, 0),
                ("b", 2, 0),
                ("c", 3, 2),
                ("d", 3, 1),
                ("e", 3, 0),
            ],
            &[],
        ),
    );

    map.insert(
        GroupId::III2,
        build(
            GroupId::III2,
            vec![
                ("a", CU),
                ("b", CF),
                ("c", CF),
                ("d", CF),
                ("e", CF),
                ("f", CF),
                ("g", CF),
                ("h", CF),
                ("k", CF),
            ],
            18,
            &[
                &["a", "0", "0", "0", "0"],
                &["0", "conj(a)", "0", "0", "0"],
                &["b", "conj(b)", "a*conj(a)", "0", "0"],
                &["e", "d", "c", "a^2*conj(a)", "0"],
                &["k", "h", "g", "f", "a^3*conj(a)"],
            ],
            vec![
                ("a", 0, 0),
                ("b", 2, 0),
                ("c", 3, 2),
                ("d", 3, 1),
                ("e", 3, 0),
                ("f", 4, 3),
                ("g", 4, 2),
                ("h", 4, 1),
                ("k", 4, 0),
            ],
            &[],
        ),
    );

    map.insert(
        GroupId::IV1,
        build(
            GroupId::IV1,
            vec![
                ("a11", CF),
                ("a12", CF),
                ("a21", CF),
                ("a22", CF),
                ("b1", CF),
                ("b2", CF),
                ("c", RU),
            ],
            13,
            &[
                &["a11", "a21", "0", "0", "0"],
                &["a12", "a22", "0", "0", "0"],
                &["0", "0", "conj(a11)", "conj(a21)", "0"],
                &["0", "0", "conj(a12)", "conj(a22)", "0"],
                &["b1", "b2", "conj(b1)", "conj(b2)", "c"],
            ],
            vec![
                ("a11", 0, 0),
                ("a21", 0, 1),
                ("a12", 1, 0),
                ("a22", 1, 1),
                ("b1", 4, 0),
                ("b2", 4, 1),
                ("c", 4, 4),
            ],
            &["a11", "a22"],
        ),
    );

    map.insert(
        GroupId::IV2,
        build(
            GroupId::IV2,
            vec![("a", CU), ("b", CF), ("c", CU), ("d", CF), ("e", CF)],
            10,
            &[
                &["c", "0", "0", "0", "0"],
                &["b", "a", "0", "0", "0"],
                &["0", "0", "conj(c)", "0", "0"],
                &["0", "0", "conj(b)", "conj(a)", "0"],
                &["e", "d", "conj(e)", "conj(d)", "a*conj(a)"],
            ],
            vec![
                ("c", 0, 0),
                ("b", 1, 0),
                ("a", 1, 1),
                ("e", 4, 0),
                ("d", 4, 1),
            ],
            &[],
        ),
    );

    map
}
