//! The inclusion poset of a set of named varieties, computed from separation
//! searches and embedded witnesses, and compared against the inclusions the
//! theorems assert.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{in_variety, FiniteGroupoid};
use crate::search::Searcher;

use super::catalog::{normalize_name, VarietyCatalog};
use super::witness::embedded_witnesses;
use super::AtlasError;

/// An inclusion `sub ⊆ sup` asserted by a theorem. Strict assertions also
/// assert `sup ⊄ sub`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub sub: &'static str,
    pub sup: &'static str,
    pub strict: bool,
    pub source: &'static str,
}

/// A non-inclusion asserted outright rather than through strictness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonInclusion {
    pub sub: &'static str,
    pub sup: &'static str,
    pub source: &'static str,
}

fn strict(sub: &'static str, sup: &'static str, source: &'static str) -> Assertion {
    Assertion { sub, sup, strict: true, source }
}

fn weak(sub: &'static str, sup: &'static str, source: &'static str) -> Assertion {
    Assertion { sub, sup, strict: false, source }
}

/// Every inclusion between catalog varieties that the theorems state, in
/// citation order. `T ⊆ V ⊆ I` for every catalog entry is left implicit.
pub fn asserted_inclusions() -> Vec<Assertion> {
    let mut out = vec![
        strict("T", "SL", "trivial variety"),
        strict("T", "BA", "trivial variety"),
        strict("SL", "A3", "Theorem 4.2(b)1"),
        strict("A3", "A4", "Theorem 4.2(b)1"),
        strict("BA", "A4", "Theorem 4.2(b)2"),
        strict("A4", "I", "Theorem 4.2(b)2"),
        strict("A3", "A1", "Theorem 4.2(b)3"),
        strict("A1", "I", "Theorem 4.2(b)3"),
        strict("A3", "A2", "Theorem 4.2(b)4"),
        strict("A2", "A11", "Theorem 4.2(b)4"),
        strict("A3", "A6", "Theorem 4.2(b)4"),
        strict("A6", "A11", "Theorem 4.2(b)4"),
        strict("A3", "A9", "Theorem 4.2(b)4"),
        strict("A9", "A11", "Theorem 4.2(b)4"),
        strict("A11", "A14", "Theorem 4.2(b)5"),
        strict("A14", "I", "Theorem 4.2(b)5"),
        weak("BA", "S", "Theorem 4.2(b)2"),
        weak("S", "A4", "Lemma 5.1"),
        strict("SL", "S14", "Theorem 5.8(b)1"),
        strict("S14", "S", "Theorem 5.8(b)1"),
    ];
    for j in ["A5", "A7", "A8", "A10"] {
        out.push(weak("A3", j, "Theorem 3.7"));
        out.push(weak(j, "A3", "Theorem 3.7"));
    }
    for j in ["A12", "A13"] {
        out.push(weak("A11", j, "Theorem 3.9"));
        out.push(weak(j, "A11", "Theorem 3.9"));
    }
    for j in 1..=14 {
        out.push(weak("A3", A_NAMES[j - 1], "Theorem 4.2 proof"));
        out.push(weak(S_NAMES[j - 1], A_NAMES[j - 1], "definition of Si"));
        out.push(weak(S_NAMES[j - 1], "S", "definition of Si"));
    }
    for j in [1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13] {
        out.push(weak(S_NAMES[j - 1], "SL", "Proposition 5.7"));
        out.push(weak("SL", S_NAMES[j - 1], "Proposition 5.7"));
    }
    out.push(weak("S", "S4", "Proposition 5.7"));
    out
}

/// Non-inclusions stated outright.
pub fn asserted_non_inclusions() -> Vec<NonInclusion> {
    vec![NonInclusion {
        sub: "BA",
        sup: "S14",
        source: "Theorem 5.8(b)2",
    }]
}

const A_NAMES: [&str; 14] = [
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11", "A12", "A13", "A14",
];
const S_NAMES: [&str; 14] = [
    "S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9", "S10", "S11", "S12", "S13", "S14",
];

/// The closure of the asserted relations over a fixed set of names.
#[derive(Clone, Debug)]
pub struct AssertedRelations {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    le: Vec<Vec<Option<String>>>,
    not_le: Vec<Vec<Option<String>>>,
}

impl AssertedRelations {
    pub fn new(catalog: &VarietyCatalog) -> AssertedRelations {
        let names: Vec<String> = catalog.names().map(str::to_string).collect();
        let index: BTreeMap<String, usize> =
            names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        let n = names.len();
        let mut le = vec![vec![None; n]; n];
        let mut not_le = vec![vec![None; n]; n];
        for i in 0..n {
            le[i][i] = Some("reflexivity".to_string());
            le[index["T"]][i].get_or_insert_with(|| "trivial variety".to_string());
            le[i][index["I"]].get_or_insert_with(|| "implication zroupoids".to_string());
        }
        let inclusions = asserted_inclusions();
        for a in &inclusions {
            le[index[a.sub]][index[a.sup]].get_or_insert_with(|| a.source.to_string());
        }
        for k in 0..n {
            for i in 0..n {
                if le[i][k].is_none() {
                    continue;
                }
                for j in 0..n {
                    if le[i][j].is_none() && le[k][j].is_some() {
                        le[i][j] = Some("transitivity".to_string());
                    }
                }
            }
        }
        let mut base: Vec<(usize, usize, &str)> = inclusions
            .iter()
            .filter(|a| a.strict)
            .map(|a| (index[a.sup], index[a.sub], a.source))
            .collect();
        base.extend(
            asserted_non_inclusions()
                .iter()
                .map(|x| (index[x.sub], index[x.sup], x.source)),
        );
        // X ⊄ Y follows from A ⊄ B whenever A ⊆ X and Y ⊆ B.
        for (a, b, source) in base {
            for x in 0..n {
                if le[a][x].is_none() {
                    continue;
                }
                for y in 0..n {
                    if le[y][b].is_some() && not_le[x][y].is_none() {
                        not_le[x][y] = Some(source.to_string());
                    }
                }
            }
        }
        AssertedRelations {
            names,
            index,
            le,
            not_le,
        }
    }

    /// The citation behind an asserted `sub ⊆ sup`, if any.
    pub fn asserts_subset(&self, sub: &str, sup: &str) -> Option<&str> {
        self.le[*self.index.get(sub)?][*self.index.get(sup)?].as_deref()
    }

    /// The citation behind an asserted `sub ⊄ sup`, if any.
    pub fn asserts_not_subset(&self, sub: &str, sup: &str) -> Option<&str> {
        self.not_le[*self.index.get(sub)?][*self.index.get(sup)?].as_deref()
    }

    /// True when no asserted relation is its own negation.
    pub fn is_consistent(&self) -> bool {
        let n = self.names.len();
        (0..n).all(|i| (0..n).all(|j| self.le[i][j].is_none() || self.not_le[i][j].is_none()))
    }
}

/// Where a non-inclusion comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessRef {
    Embedded { id: String, table: FiniteGroupoid },
    Found { table: FiniteGroupoid },
}

impl WitnessRef {
    pub fn table(&self) -> &FiniteGroupoid {
        match self {
            WitnessRef::Embedded { table, .. } | WitnessRef::Found { table } => table,
        }
    }

    pub fn label(&self) -> String {
        match self {
            WitnessRef::Embedded { id, .. } => id.clone(),
            WitnessRef::Found { table } => table.compact(),
        }
    }
}

/// Status of `row ⊆ column`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Relation {
    Equal,
    /// Asserted, and no member of size at most `up_to` refutes it.
    Consistent { up_to: usize, source: String },
    Witnessed { witness: WitnessRef },
    /// Not asserted either way, and no separating model found.
    Unknown { up_to: usize },
}

impl Relation {
    pub fn is_witnessed(&self) -> bool {
        matches!(self, Relation::Witnessed { .. })
    }

    pub fn is_consistent(&self) -> bool {
        matches!(self, Relation::Consistent { .. } | Relation::Equal)
    }

    fn symbol(&self) -> &'static str {
        match self {
            Relation::Equal => "=",
            Relation::Consistent { .. } => "<=",
            Relation::Witnessed { .. } => "!<=",
            Relation::Unknown { .. } => "?",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseEdge {
    pub lower: String,
    pub upper: String,
    /// Algebra in `upper` outside `lower`.
    pub strictness: WitnessRef,
}

/// An ordered pair whose computed status disagrees with, or fails to
/// confirm, what the theorems assert.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairNote {
    pub sub: String,
    pub sup: String,
    pub relation: Relation,
    pub source: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PosetReport {
    pub nodes: Vec<String>,
    pub budget: usize,
    /// `relation[i][j]` is the status of `nodes[i] ⊆ nodes[j]`.
    pub relation: Vec<Vec<Relation>>,
    pub hasse_edges: Vec<HasseEdge>,
    /// Asserted inclusions refuted by a model.
    pub discrepancies: Vec<PairNote>,
    /// Asserted non-inclusions with no witness at this budget.
    pub unconfirmed: Vec<PairNote>,
    /// Pairs the theorems say nothing about, with what was found.
    pub discovered: Vec<PairNote>,
}

impl PosetReport {
    pub fn edge_pairs(&self) -> Vec<(&str, &str)> {
        self.hasse_edges
            .iter()
            .map(|e| (e.lower.as_str(), e.upper.as_str()))
            .collect()
    }

    pub fn relation(&self, sub: &str, sup: &str) -> Option<&Relation> {
        let i = self.nodes.iter().position(|n| n == sub)?;
        let j = self.nodes.iter().position(|n| n == sup)?;
        Some(&self.relation[i][j])
    }

    /// One `lower upper` line per Hasse edge.
    pub fn edge_list(&self) -> String {
        self.hasse_edges
            .iter()
            .map(|e| format!("{} {}\n", e.lower, e.upper))
            .collect()
    }

    /// The Hasse diagram as a Graphviz digraph, edges pointing up.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph poset {\n  rankdir=BT;\n");
        for n in &self.nodes {
            let _ = writeln!(s, "  \"{n}\";");
        }
        for e in &self.hasse_edges {
            let _ = writeln!(s, "  \"{}\" -> \"{}\";", e.lower, e.upper);
        }
        s.push_str("}\n");
        s
    }

    /// The relation as a text grid, rows included in columns.
    pub fn matrix_text(&self) -> String {
        let width = self.nodes.iter().map(String::len).max().unwrap_or(1).max(3);
        let mut s = format!("{:width$}", "");
        for n in &self.nodes {
            let _ = write!(s, " {n:>width$}");
        }
        s.push('\n');
        for (i, n) in self.nodes.iter().enumerate() {
            let _ = write!(s, "{n:width$}");
            for r in &self.relation[i] {
                let _ = write!(s, " {:>width$}", r.symbol());
            }
            s.push('\n');
        }
        s
    }
}

/// Computes the inclusion relation among `nodes`, searching models up to
/// `budget` elements and falling back on embedded witnesses.
pub fn build_poset(
    nodes: &[&str],
    budget: usize,
    catalog: &VarietyCatalog,
    searcher: &Searcher,
) -> Result<PosetReport, AtlasError> {
    let mut names: Vec<String> = Vec::new();
    for n in nodes {
        let name = catalog.get(n)?.name.clone();
        if !names.contains(&name) {
            names.push(name);
        }
    }
    let specs = names
        .iter()
        .map(|n| catalog.get(n))
        .collect::<Result<Vec<_>, _>>()?;
    let asserted = AssertedRelations::new(catalog);
    let witnesses = embedded_witnesses();
    let k = names.len();
    let mut relation = vec![vec![Relation::Equal; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let found = searcher
                .find_separating_model(specs[i], specs[j], budget)?
                .separation
                .map(|s| WitnessRef::Found { table: s.model });
            let witness = found.or_else(|| {
                witnesses
                    .iter()
                    .find(|w| in_variety(&w.table, specs[i]).holds && !in_variety(&w.table, specs[j]).holds)
                    .map(|w| WitnessRef::Embedded {
                        id: w.id.to_string(),
                        table: w.table.clone(),
                    })
            });
            relation[i][j] = match (witness, asserted.asserts_subset(&names[i], &names[j])) {
                (Some(witness), _) => Relation::Witnessed { witness },
                (None, Some(source)) => Relation::Consistent {
                    up_to: budget,
                    source: source.to_string(),
                },
                (None, None) => Relation::Unknown { up_to: budget },
            };
        }
    }

    let mut discrepancies = Vec::new();
    let mut unconfirmed = Vec::new();
    let mut discovered = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let (sub, sup) = (&names[i], &names[j]);
            let note = |source: Option<&str>| PairNote {
                sub: sub.clone(),
                sup: sup.clone(),
                relation: relation[i][j].clone(),
                source: source.map(str::to_string),
            };
            let le = asserted.asserts_subset(sub, sup);
            let not_le = asserted.asserts_not_subset(sub, sup);
            match (le, not_le) {
                (Some(src), _) if relation[i][j].is_witnessed() => discrepancies.push(note(Some(src))),
                (_, Some(src)) if !relation[i][j].is_witnessed() => unconfirmed.push(note(Some(src))),
                (None, None) => discovered.push(note(None)),
                _ => {}
            }
        }
    }

    let strict = |i: usize, j: usize| i != j && relation[i][j].is_consistent() && relation[j][i].is_witnessed();
    let mut hasse_edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if !strict(i, j) || (0..k).any(|c| strict(i, c) && strict(c, j)) {
                continue;
            }
            let Relation::Witnessed { witness } = &relation[j][i] else {
                unreachable!("strict pairs carry a witness");
            };
            hasse_edges.push(HasseEdge {
                lower: names[i].clone(),
                upper: names[j].clone(),
                strictness: witness.clone(),
            });
        }
    }

    Ok(PosetReport {
        nodes: names,
        budget,
        relation,
        hasse_edges,
        discrepancies,
        unconfirmed,
        discovered,
    })
}

/// Parses a comma-separated node list, rejecting unknown names.
pub fn parse_nodes(list: &str, catalog: &VarietyCatalog) -> Result<Vec<String>, AtlasError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for raw in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let name = catalog.get(raw)?.name.clone();
        if seen.insert(normalize_name(&name)) {
            out.push(name);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn asserted_relations_are_consistent() {
        let c = VarietyCatalog::builtin();
        let p = AssertedRelations::new(&c);
        assert!(p.is_consistent());
        assert_eq!(p.asserts_subset("SL", "A4"), Some("transitivity"));
        assert_eq!(p.asserts_subset("A3", "A1"), Some("Theorem 4.2(b)3"));
        assert!(p.asserts_not_subset("A1", "A3").is_some());
        assert!(p.asserts_not_subset("I", "A14").is_some());
        assert_eq!(p.asserts_not_subset("BA", "S14"), Some("Theorem 5.8(b)2"));
        assert!(p.asserts_not_subset("BA", "SL").is_some());
        assert!(p.asserts_subset("A6", "A9").is_none());
        assert!(p.asserts_not_subset("A6", "A9").is_none());
        assert!(p.asserts_subset("A5", "A1").is_some());
    }

    #[test]
    fn single_node_has_no_edges() {
        let c = VarietyCatalog::builtin();
        let r = build_poset(&["I"], 3, &c, &Searcher::default()).unwrap();
        assert!(r.hasse_edges.is_empty());
        assert_eq!(r.relation, vec![vec![Relation::Equal]]);
    }

    #[test]
    fn equal_varieties_get_no_edge() {
        let c = VarietyCatalog::builtin();
        let r = build_poset(&["A11", "A12", "A14"], 3, &c, &Searcher::default()).unwrap();
        assert!(r.relation("A11", "A12").unwrap().is_consistent());
        assert!(r.relation("A12", "A11").unwrap().is_consistent());
        assert_eq!(r.edge_pairs(), vec![("A11", "A14"), ("A12", "A14")]);
        assert!(r.discrepancies.is_empty());
    }

    #[test]
    fn node_list_parsing() {
        let c = VarietyCatalog::builtin();
        assert_eq!(parse_nodes("a3, SL,A3", &c).unwrap(), vec!["A3", "SL"]);
        assert!(parse_nodes("A3,Q", &c).is_err());
    }

    #[test]
    fn dot_output() {
        let c = VarietyCatalog::builtin();
        let r = build_poset(&["T", "SL"], 2, &c, &Searcher::default()).unwrap();
        assert_eq!(r.edge_list(), "T SL\n");
        assert!(r.to_dot().contains("\"T\" -> \"SL\";"));
    }
}
