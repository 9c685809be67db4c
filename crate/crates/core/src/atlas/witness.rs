//! Small algebras that separate the varieties of the classification.

use serde::Serialize;

use crate::algebra::{in_variety, two_b, two_s, two_z, FiniteGroupoid, SatisfactionReport};

use super::catalog::{CatalogError, VarietyCatalog};

/// An algebra together with the memberships it is recorded to have.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub id: &'static str,
    pub table: FiniteGroupoid,
    pub in_varieties: Vec<&'static str>,
    pub not_in: Vec<&'static str>,
    pub source: &'static str,
}

/// One recorded membership and what checking it found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipCheck {
    pub variety: &'static str,
    pub expected: bool,
    pub report: SatisfactionReport,
}

impl MembershipCheck {
    pub fn ok(&self) -> bool {
        self.report.holds == self.expected
    }
}

impl WitnessRecord {
    /// Checks every recorded membership and non-membership.
    pub fn verify(&self, catalog: &VarietyCatalog) -> Result<Vec<MembershipCheck>, CatalogError> {
        let expected = self
            .in_varieties
            .iter()
            .map(|v| (*v, true))
            .chain(self.not_in.iter().map(|v| (*v, false)));
        expected
            .map(|(variety, expected)| {
                Ok(MembershipCheck {
                    variety,
                    expected,
                    report: in_variety(&self.table, catalog.get(variety)?),
                })
            })
            .collect()
    }

    pub fn verified(&self, catalog: &VarietyCatalog) -> bool {
        self.verify(catalog)
            .map(|checks| checks.iter().all(MembershipCheck::ok))
            .unwrap_or(false)
    }
}

fn table<const N: usize>(rows: [[u8; N]; N]) -> FiniteGroupoid {
    FiniteGroupoid::from_rows(&rows).expect("static witness table")
}

/// The separating algebras of the classification, two-element algebras
/// first.
pub fn proof_witnesses() -> Vec<WitnessRecord> {
    vec![
        WitnessRecord {
            id: "2_z",
            table: two_z(),
            in_varieties: vec!["I", "A3"],
            not_in: vec!["SL"],
            source: "Theorem 4.2(b)1",
        },
        WitnessRecord {
            id: "2_s",
            table: two_s(),
            in_varieties: vec!["I", "SL", "A4"],
            not_in: vec!["BA"],
            source: "Theorem 4.2(b)2",
        },
        WitnessRecord {
            id: "2_b",
            table: two_b(),
            in_varieties: vec!["I", "BA", "A4", "S"],
            not_in: vec!["A3", "A1", "A14", "S14"],
            source: "Theorem 4.2(b)1,3,5; Theorem 5.8",
        },
        WitnessRecord {
            id: "M3a",
            table: table([[0, 0, 0], [2, 0, 0], [0, 0, 0]]),
            in_varieties: vec!["I", "A11"],
            not_in: vec!["A4", "A2", "A6", "A9"],
            source: "Theorem 4.2(b)2,4",
        },
        WitnessRecord {
            id: "M3b",
            table: table([[0, 1, 2], [1, 1, 2], [2, 1, 2]]),
            in_varieties: vec!["I", "A1"],
            not_in: vec!["A3"],
            source: "Theorem 4.2(b)3",
        },
        WitnessRecord {
            id: "M3c",
            table: table([[0, 0, 0], [2, 0, 2], [0, 0, 0]]),
            in_varieties: vec!["I", "A2"],
            not_in: vec!["A3"],
            source: "Theorem 4.2(b)4",
        },
        WitnessRecord {
            id: "M4a",
            table: table([[0, 0, 0, 0], [0, 2, 3, 0], [0, 0, 0, 0], [0, 0, 0, 0]]),
            in_varieties: vec!["I", "A6", "A9"],
            not_in: vec!["A3"],
            source: "Theorem 4.2(b)4",
        },
        WitnessRecord {
            id: "M4b",
            table: table([[0, 1, 2, 3], [2, 3, 2, 3], [1, 1, 3, 3], [3, 3, 3, 3]]),
            in_varieties: vec!["I", "A14", "S14"],
            not_in: vec!["A11", "SL"],
            source: "Theorem 4.2(b)5; Theorem 5.8",
        },
    ]
}

/// Separating algebras found by search that no proof supplies. The A9/A6
/// separation first appears at five elements.
pub fn discovered_witnesses() -> Vec<WitnessRecord> {
    vec![WitnessRecord {
        id: "M5a",
        table: table([
            [0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0],
            [0, 0, 0, 0, 1],
            [0, 2, 0, 0, 0],
        ]),
        in_varieties: vec!["I", "A9", "A11", "A14"],
        not_in: vec!["A6", "A2", "A4"],
        source: "discovered: least member of A9 outside A6",
    }]
}

/// Proof witnesses followed by discovered ones.
pub fn embedded_witnesses() -> Vec<WitnessRecord> {
    let mut all = proof_witnesses();
    all.extend(discovered_witnesses());
    all
}

pub fn witness(id: &str) -> Option<WitnessRecord> {
    embedded_witnesses().into_iter().find(|w| w.id == id)
}
