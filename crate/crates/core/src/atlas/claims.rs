//! Every statement of the classification that can be checked on small
//! models, with its citation and the evidence gathered for it.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebra::{in_variety, is_izroupoid, Counterexample, FiniteGroupoid, VarietySpec};
use crate::assoc::{classify_identities, generate_associative_identities, generate_associative_terms, sigma, ASSOC_VARS};
use crate::parse::identity;
use crate::search::{ConditionalOutcome, Searcher};
use crate::term::Identity;

use super::catalog::{e4_instances, involutive, meet_commutative, type1_components, VarietyCatalog};
use super::witness::{embedded_witnesses, witness, WitnessRecord};
use super::AtlasError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClaimKind {
    Classification {
        terms: usize,
        identities: usize,
        classes: usize,
    },
    /// The record's table is an implication zroupoid with exactly the
    /// recorded memberships.
    Witness { witness: String },
    /// `witness` lies in `member_of` and not in `not_in`.
    Separation {
        member_of: String,
        not_in: String,
        witness: String,
    },
    Distinct { left: String, right: String },
    Inclusion { sub: String, sup: String },
    Equality { varieties: Vec<String> },
    Lemma {
        hypotheses: Vec<Identity>,
        conclusions: Vec<Identity>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: String,
    pub source: String,
    pub statement: String,
    pub kind: ClaimKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    InsufficientBudget,
}

/// What was checked for a claim. Absent fields did not apply.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Evidence {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub searched_up_to: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// The witness or counterexample table.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<FiniteGroupoid>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Counterexample>,
    /// Least separating model found by search, when one was looked for.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rediscovered: Option<FiniteGroupoid>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub claim: Claim,
    pub status: ClaimStatus,
    pub evidence: Evidence,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimLedger {
    pub budget: usize,
    pub deep_budget: usize,
    pub results: Vec<ClaimResult>,
}

impl ClaimLedger {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.status == ClaimStatus::Pass)
    }

    pub fn count(&self, status: ClaimStatus) -> usize {
        self.results.iter().filter(|r| r.status == status).count()
    }

    pub fn get(&self, id: &str) -> Option<&ClaimResult> {
        self.results.iter().find(|r| r.claim.id == id)
    }
}

fn claim(id: impl Into<String>, source: &str, statement: impl Into<String>, kind: ClaimKind) -> Claim {
    Claim {
        id: id.into(),
        source: source.to_string(),
        statement: statement.into(),
        kind,
    }
}

fn ids(texts: &[&str]) -> Vec<Identity> {
    texts.iter().map(|s| identity(s)).collect()
}

fn lemma(id: &str, source: &str, hypotheses: Vec<Identity>, conclusions: Vec<Identity>) -> Claim {
    let hyp = if hypotheses.is_empty() {
        "every I-zroupoid".to_string()
    } else {
        hypotheses.iter().map(Identity::render_compact).collect::<Vec<_>>().join(", ")
    };
    let concl = conclusions.iter().map(Identity::render_compact).collect::<Vec<_>>().join(", ");
    claim(
        format!("lemma:{id}"),
        source,
        format!("{hyp} => {concl}"),
        ClaimKind::Lemma {
            hypotheses,
            conclusions,
        },
    )
}

fn inclusion(sub: &str, sup: &str, source: &str) -> Claim {
    claim(
        format!("inclusion:{sub}/{sup}"),
        source,
        format!("{sub} is contained in {sup}"),
        ClaimKind::Inclusion {
            sub: sub.into(),
            sup: sup.into(),
        },
    )
}

fn equality(varieties: &[&str], source: &str) -> Claim {
    claim(
        format!("equality:{}", varieties.join("=")),
        source,
        varieties.join(" = "),
        ClaimKind::Equality {
            varieties: varieties.iter().map(|s| s.to_string()).collect(),
        },
    )
}

fn separation(member_of: &str, not_in: &str, witness: &str, source: &str) -> Claim {
    claim(
        format!("separation:{member_of}/{not_in}"),
        source,
        format!("{witness} is in {member_of} and not in {not_in}"),
        ClaimKind::Separation {
            member_of: member_of.into(),
            not_in: not_in.into(),
            witness: witness.into(),
        },
    )
}

fn distinct(left: &str, right: &str, source: &str) -> Claim {
    claim(
        format!("distinct:{left}/{right}"),
        source,
        format!("{left} differs from {right}"),
        ClaimKind::Distinct {
            left: left.into(),
            right: right.into(),
        },
    )
}

/// The claims in a fixed order: classification, witnesses, identities of
/// the preliminaries, the conditional lemmas and equalities, the main
/// theorem, then the symmetric case.
pub fn recorded_claims() -> Vec<Claim> {
    let mut out = vec![claim(
        "classification",
        "Proposition 2.1",
        "12 associative terms give 66 identities in 14 classes, one per member of Σ",
        ClaimKind::Classification {
            terms: 12,
            identities: 66,
            classes: 14,
        },
    )];
    for w in embedded_witnesses() {
        out.push(claim(
            format!("witness:{}", w.id),
            w.source,
            format!(
                "{} is an I-zroupoid in {} and not in {}",
                w.id,
                w.in_varieties.join(", "),
                w.not_in.join(", ")
            ),
            ClaimKind::Witness {
                witness: w.id.to_string(),
            },
        ));
    }

    let i20 = vec![involutive()];
    out.push(lemma("2.2", "Lemma 2.2", vec![], ids(&["x''' -> y = x' -> y"])));
    out.push(lemma("2.3(a)", "Lemma 2.3(a)", vec![], ids(&["(x -> y) -> z = ((x -> y) -> z)''"])));
    out.push(lemma("2.3(b)", "Lemma 2.3(b)", vec![], ids(&["(x -> y)' = (x'' -> y)'"])));
    let cond = ["0' -> x = x", "x'' = x", "(x -> x')' = x", "x' -> x = x"];
    for k in 0..4 {
        let next = (k + 1) % 4;
        out.push(lemma(
            &format!("2.4({}=>{})", k + 1, next + 1),
            "Lemma 2.4",
            ids(&[cond[k]]),
            ids(&[cond[next]]),
        ));
    }
    out.push(lemma("2.6(1)", "Lemma 2.6", i20.clone(), ids(&["x' -> 0' = 0 -> x"])));
    out.push(lemma("2.6(2)", "Lemma 2.6", i20.clone(), ids(&["0 -> x' = x -> 0'"])));
    let l27 = [
        ("a", "(x -> 0') -> y = (x -> y') -> y"),
        ("b", "(y -> x) -> y = (0 -> x) -> y"),
        ("c", "0 -> x = 0 -> (0 -> x)"),
        ("d", "(0 -> x) -> (0 -> y) = x -> (0 -> y)"),
        ("e", "x -> y = x -> (x -> y)"),
        ("f", "0 -> (x -> y) = x -> (0 -> y)"),
        ("g", "0 -> (x -> y')' = 0 -> (x' -> y)"),
        ("h", "x -> (y -> x') = y -> x'"),
    ];
    for (item, text) in l27 {
        out.push(lemma(
            &format!("2.7({item})"),
            &format!("Lemma 2.7({item})"),
            i20.clone(),
            ids(&[text]),
        ));
    }

    let [e1, e2, e3] = type1_components();
    out.push(lemma("3.1", "Lemma 3.1", vec![e2.clone()], ids(&["(x -> y) -> y' = x -> y'"])));
    let i20_e1 = vec![involutive(), e1.clone()];
    out.push(lemma("3.2", "Lemma 3.2", i20_e1.clone(), ids(&["x -> y' = x -> (0 -> y)"])));
    out.push(lemma(
        "3.3",
        "Lemma 3.3",
        i20_e1,
        ids(&["(x -> (y -> z)')' = x -> (y -> (0 -> z))'"]),
    ));
    out.push(lemma(
        "3.4",
        "Lemma 3.4",
        vec![e1.clone(), e2.clone()],
        ids(&["0 -> (x -> (y -> z)) = 0 -> ((x -> y) -> z)"]),
    ));
    out.push(lemma(
        "3.5",
        "Lemma 3.5",
        ids(&["(x -> y)' = (y -> x)'"]),
        ids(&["(x -> y) -> z = (y -> x) -> z"]),
    ));
    let all_sigma: Vec<Identity> = sigma().into_iter().map(|(_, id)| id).collect();
    for (k, e4) in e4_instances().into_iter().enumerate() {
        out.push(lemma(
            &format!("3.6(p{})", k + 1),
            "Theorem 3.6",
            vec![e1.clone(), e2.clone(), e3.clone(), e4],
            all_sigma.clone(),
        ));
    }
    let a = |i: usize| all_sigma[i - 1].clone();
    out.push(lemma(
        "A5",
        "Lemma on A5 members",
        vec![a(5)],
        ids(&["x' -> y = x -> y'", "(x -> y)' = 0 -> (x -> y)", "x -> (0 -> y) = 0 -> (x -> y)"]),
    ));
    out.push(lemma(
        "A8",
        "Lemma on A8 members",
        vec![a(8)],
        ids(&["x -> y' = x' -> y'", "x -> y' = 0 -> (y' -> x)"]),
    ));
    out.push(lemma(
        "A10",
        "Lemma on A10 members",
        vec![a(10)],
        ids(&["(0 -> (x -> y))' = x -> y'", "(y -> x)'' = x -> y'", "(x -> y)' = x -> y'"]),
    ));
    for j in [3, 5, 7, 8, 10] {
        out.push(lemma(
            &format!("type1(A{j})"),
            "Lemma on A3, A5, A7, A8, A10 members",
            vec![a(j)],
            type1_components().to_vec(),
        ));
    }
    out.push(equality(&["A3", "A5", "A7", "A8", "A10"], "Theorem 3.7"));
    let l38 = [
        ("a", "(x -> y)' = (0 -> x) -> y"),
        ("b", "(x -> y)' = x' -> y'"),
        ("c", "(x -> y)' = (0 -> y) -> x'"),
        ("d", "(x -> y)' = (x -> y)''"),
        ("e", "(x -> y)' = (y -> x)'"),
    ];
    for (item, text) in l38 {
        out.push(lemma(
            &format!("3.8({item})"),
            &format!("Lemma 3.8({item})"),
            vec![a(13)],
            ids(&[text]),
        ));
    }
    out.push(equality(&["A11", "A12", "A13"], "Theorem 3.9"));
    for j in ["A2", "A6", "A9"] {
        out.push(inclusion(j, "A11", "Lemma 4.1"));
    }
    out.push(lemma("A3-all", "Theorem 4.2 proof", vec![a(3)], all_sigma.clone()));

    let main = ["A1", "A2", "A3", "A4", "A6", "A9", "A11", "A14"];
    for (k, l) in main.iter().enumerate() {
        for r in &main[k + 1..] {
            out.push(distinct(l, r, "Theorem 4.2(a)"));
        }
    }
    for (sub, sup, src) in [
        ("SL", "A3", "Theorem 4.2(b)1"),
        ("A3", "A4", "Theorem 4.2(b)1"),
        ("BA", "A4", "Theorem 4.2(b)2"),
        ("A4", "I", "Theorem 4.2(b)2"),
        ("A3", "A1", "Theorem 4.2(b)3"),
        ("A1", "I", "Theorem 4.2(b)3"),
        ("A3", "A2", "Theorem 4.2(b)4"),
        ("A2", "A11", "Theorem 4.2(b)4"),
        ("A3", "A6", "Theorem 4.2(b)4"),
        ("A6", "A11", "Theorem 4.2(b)4"),
        ("A3", "A9", "Theorem 4.2(b)4"),
        ("A9", "A11", "Theorem 4.2(b)4"),
        ("A11", "A14", "Theorem 4.2(b)5"),
        ("A14", "I", "Theorem 4.2(b)5"),
    ] {
        let mut c = inclusion(sub, sup, src);
        c.id = format!("chain:{sub}/{sup}");
        out.push(c);
    }
    for (member_of, not_in, w, src) in [
        ("A3", "SL", "2_z", "Theorem 4.2(b)1"),
        ("A4", "A3", "2_b", "Theorem 4.2(b)1"),
        ("A4", "BA", "2_s", "Theorem 4.2(b)2"),
        ("I", "A4", "M3a", "Theorem 4.2(b)2"),
        ("I", "A1", "2_b", "Theorem 4.2(b)3"),
        ("A1", "A3", "M3b", "Theorem 4.2(b)3"),
        ("A2", "A3", "M3c", "Theorem 4.2(b)4"),
        ("A11", "A2", "M3a", "Theorem 4.2(b)4"),
        ("A6", "A3", "M4a", "Theorem 4.2(b)4"),
        ("A11", "A6", "M3a", "Theorem 4.2(b)4"),
        ("A9", "A3", "M4a", "Theorem 4.2(b)4"),
        ("A11", "A9", "M3a", "Theorem 4.2(b)4"),
        ("A14", "A11", "M4b", "Theorem 4.2(b)5"),
        ("I", "A14", "2_b", "Theorem 4.2(b)5"),
    ] {
        out.push(separation(member_of, not_in, w, src));
    }

    out.push(inclusion("S", "A4", "Lemma 5.1"));
    out.push(lemma(
        "5.2",
        "Lemma 5.2",
        vec![meet_commutative(), identity("x' = x")],
        ids(&["x' = x", "x -> y = y -> x"]),
    ));
    out.push(lemma(
        "5.3",
        "Lemma 5.3",
        vec![involutive(), meet_commutative(), identity("x -> x = x")],
        ids(&["x' = x"]),
    ));
    out.push(equality(&["S11", "SL"], "Lemma 5.4"));
    out.push(inclusion("S1", "SL", "Lemma 5.5"));
    for j in [1, 2, 3, 5, 6, 7, 8, 9, 10, 12, 13] {
        out.push(equality(&[&format!("S{j}"), "SL"], "Proposition 5.7"));
    }
    out.push(equality(&["S4", "S"], "Proposition 5.7"));
    for (l, r) in [("SL", "S14"), ("SL", "S"), ("S14", "S")] {
        out.push(distinct(l, r, "Theorem 5.8(a)"));
    }
    let mut c = inclusion("SL", "S14", "Theorem 5.8(b)1");
    c.id = "chain:SL/S14".into();
    out.push(c);
    let mut c = inclusion("S14", "S", "Theorem 5.8(b)1");
    c.id = "chain:S14/S".into();
    out.push(c);
    out.push(separation("S14", "SL", "M4b", "Theorem 5.8(b)1"));
    out.push(separation("S", "S14", "2_b", "Theorem 5.8(b)1"));
    out.push(separation("BA", "S14", "2_b", "Theorem 5.8(b)2"));
    out
}

struct Verifier<'a> {
    budget: usize,
    deep_budget: usize,
    catalog: &'a VarietyCatalog,
    searcher: &'a Searcher,
    witnesses: Vec<WitnessRecord>,
}

type Outcome = (ClaimStatus, Evidence);

impl Verifier<'_> {
    fn spec(&self, name: &str) -> Result<&VarietySpec, AtlasError> {
        Ok(self.catalog.get(name)?)
    }

    /// Exhaustive evidence that every member of `v` up to the budget lies
    /// in `w`.
    fn contained(&self, v: &VarietySpec, w: &VarietySpec) -> Result<Outcome, AtlasError> {
        if self.budget < 2 {
            return Ok((ClaimStatus::InsufficientBudget, Evidence::default()));
        }
        let outcome = self.searcher.find_separating_model(v, w, self.budget)?;
        Ok(match outcome.separation {
            None => (
                ClaimStatus::Pass,
                Evidence {
                    searched_up_to: Some(self.budget),
                    ..Evidence::default()
                },
            ),
            Some(s) => (
                ClaimStatus::Fail,
                Evidence {
                    searched_up_to: Some(outcome.searched_up_to),
                    table: Some(s.model),
                    failure: Some(s.failure),
                    ..Evidence::default()
                },
            ),
        })
    }

    fn verify(&self, claim: &Claim) -> Result<Outcome, AtlasError> {
        match &claim.kind {
            ClaimKind::Classification {
                terms,
                identities,
                classes,
            } => {
                let t = generate_associative_terms(&ASSOC_VARS).map(|t| t.len()).unwrap_or(0);
                let all = generate_associative_identities();
                let cls = classify_identities(&all).unwrap_or_default();
                let sigma_ids: Vec<Identity> = sigma().into_iter().map(|(_, id)| id).collect();
                let one_each = cls.iter().all(|c| {
                    c.members
                        .iter()
                        .filter(|m| sigma_ids.contains(m) || sigma_ids.contains(&m.swapped()))
                        .count()
                        == 1
                });
                let ok = t == *terms && all.len() == *identities && cls.len() == *classes && one_each;
                Ok((
                    if ok { ClaimStatus::Pass } else { ClaimStatus::Fail },
                    Evidence {
                        note: Some(format!(
                            "{t} terms, {} identities, {} classes",
                            all.len(),
                            cls.len()
                        )),
                        ..Evidence::default()
                    },
                ))
            }
            ClaimKind::Witness { witness: id } => {
                let w = self.witness(id);
                let izr = is_izroupoid(&w.table);
                let checks = w.verify(self.catalog)?;
                let bad = checks.iter().find(|c| !c.ok());
                let evidence = Evidence {
                    witness: Some(id.clone()),
                    table: Some(w.table.clone()),
                    failure: izr.counterexample.clone(),
                    note: bad.map(|c| format!("membership in {} is {}", c.variety, c.report.holds)),
                    ..Evidence::default()
                };
                let ok = izr.holds && bad.is_none();
                Ok((if ok { ClaimStatus::Pass } else { ClaimStatus::Fail }, evidence))
            }
            ClaimKind::Separation {
                member_of,
                not_in,
                witness: id,
            } => {
                let w = self.witness(id);
                let (v, u) = (self.spec(member_of)?, self.spec(not_in)?);
                let inside = in_variety(&w.table, v);
                let outside = in_variety(&w.table, u);
                let mut evidence = Evidence {
                    witness: Some(id.clone()),
                    table: Some(w.table.clone()),
                    failure: outside.counterexample.clone(),
                    ..Evidence::default()
                };
                let mut ok = inside.holds && !outside.holds;
                let bound = if w.table.size() <= self.budget {
                    self.budget
                } else {
                    self.deep_budget
                };
                if bound >= w.table.size() {
                    let found = self.searcher.find_separating_model(v, u, bound)?;
                    evidence.searched_up_to = Some(bound);
                    match found.separation {
                        Some(s) => evidence.rediscovered = Some(s.model),
                        None => ok = false,
                    }
                }
                Ok((if ok { ClaimStatus::Pass } else { ClaimStatus::Fail }, evidence))
            }
            ClaimKind::Distinct { left, right } => {
                let (l, r) = (self.spec(left)?, self.spec(right)?);
                for w in &self.witnesses {
                    let (in_l, in_r) = (in_variety(&w.table, l).holds, in_variety(&w.table, r).holds);
                    if in_l != in_r {
                        return Ok((
                            ClaimStatus::Pass,
                            Evidence {
                                witness: Some(w.id.to_string()),
                                table: Some(w.table.clone()),
                                note: Some(format!("in {}", if in_l { left } else { right })),
                                ..Evidence::default()
                            },
                        ));
                    }
                }
                for (a, b, name) in [(l, r, left), (r, l, right)] {
                    if let Some(s) = self.searcher.find_separating_model(a, b, self.budget)?.separation {
                        return Ok((
                            ClaimStatus::Pass,
                            Evidence {
                                searched_up_to: Some(self.budget),
                                table: Some(s.model),
                                failure: Some(s.failure),
                                note: Some(format!("in {name}")),
                                ..Evidence::default()
                            },
                        ));
                    }
                }
                Ok((
                    ClaimStatus::InsufficientBudget,
                    Evidence {
                        searched_up_to: Some(self.budget),
                        ..Evidence::default()
                    },
                ))
            }
            ClaimKind::Inclusion { sub, sup } => self.contained(self.spec(sub)?, self.spec(sup)?),
            ClaimKind::Equality { varieties } => {
                let mut last = (ClaimStatus::Pass, Evidence::default());
                for a in varieties {
                    for b in varieties {
                        if a == b {
                            continue;
                        }
                        last = self.contained(self.spec(a)?, self.spec(b)?)?;
                        if last.0 != ClaimStatus::Pass {
                            last.1.note = Some(format!("{a} is not contained in {b}"));
                            return Ok(last);
                        }
                    }
                }
                Ok(last)
            }
            ClaimKind::Lemma {
                hypotheses,
                conclusions,
            } => {
                if self.budget < 2 {
                    return Ok((ClaimStatus::InsufficientBudget, Evidence::default()));
                }
                Ok(
                    match self
                        .searcher
                        .conditional_identity_check(hypotheses, conclusions, self.budget)?
                    {
                        ConditionalOutcome::Holds { max_size } => (
                            ClaimStatus::Pass,
                            Evidence {
                                searched_up_to: Some(max_size),
                                ..Evidence::default()
                            },
                        ),
                        ConditionalOutcome::Counterexample { model, failure } => (
                            ClaimStatus::Fail,
                            Evidence {
                                table: Some(model),
                                failure: Some(failure),
                                ..Evidence::default()
                            },
                        ),
                    },
                )
            }
        }
    }

    fn witness(&self, id: &str) -> WitnessRecord {
        witness(id).unwrap_or_else(|| panic!("claim names unknown witness {id}"))
    }
}

/// Checks every claim. Searches for inclusion, equality and lemma evidence
/// cover sizes up to `budget`; rediscovering a proof witness larger than
/// `budget` searches up to `deep_budget`.
pub fn verify_claims(
    budget: usize,
    deep_budget: usize,
    catalog: &VarietyCatalog,
    searcher: &Searcher,
) -> Result<ClaimLedger, AtlasError> {
    verify_selected(&recorded_claims(), budget, deep_budget, catalog, searcher)
}

pub fn verify_selected(
    claims: &[Claim],
    budget: usize,
    deep_budget: usize,
    catalog: &VarietyCatalog,
    searcher: &Searcher,
) -> Result<ClaimLedger, AtlasError> {
    let v = Verifier {
        budget,
        deep_budget,
        catalog,
        searcher,
        witnesses: embedded_witnesses(),
    };
    let mut results = Vec::with_capacity(claims.len());
    for c in claims {
        let start = Instant::now();
        let (status, evidence) = v.verify(c)?;
        results.push(ClaimResult {
            claim: c.clone(),
            status,
            evidence,
            elapsed: start.elapsed(),
        });
    }
    Ok(ClaimLedger {
        budget,
        deep_budget,
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_are_unique_and_cited() {
        let claims = recorded_claims();
        let mut ids: Vec<_> = claims.iter().map(|c| c.id.clone()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), claims.len());
        assert!(claims.iter().all(|c| !c.source.is_empty()));
    }

    #[test]
    fn every_claim_names_catalog_varieties() {
        let catalog = VarietyCatalog::builtin();
        for c in recorded_claims() {
            let names: Vec<String> = match &c.kind {
                ClaimKind::Separation { member_of, not_in, .. } => vec![member_of.clone(), not_in.clone()],
                ClaimKind::Distinct { left, right } => vec![left.clone(), right.clone()],
                ClaimKind::Inclusion { sub, sup } => vec![sub.clone(), sup.clone()],
                ClaimKind::Equality { varieties } => varieties.clone(),
                _ => vec![],
            };
            for n in names {
                assert!(catalog.get(&n).is_ok(), "{} names {n}", c.id);
            }
        }
    }

    fn one(id: &str, budget: usize) -> ClaimResult {
        let claim = recorded_claims().into_iter().find(|c| c.id == id).unwrap();
        let ledger =
            verify_selected(&[claim], budget, 4, &VarietyCatalog::builtin(), &Searcher::default()).unwrap();
        ledger.results.into_iter().next().unwrap()
    }

    #[test]
    fn inclusion_a3_a1_passes() {
        let r = one("chain:A3/A1", 3);
        assert_eq!(r.status, ClaimStatus::Pass);
        assert_eq!(r.evidence.searched_up_to, Some(3));
    }

    #[test]
    fn equality_a11_a12_a13_passes() {
        assert_eq!(one("equality:A11=A12=A13", 3).status, ClaimStatus::Pass);
    }

    #[test]
    fn separation_sl_a3_via_2z() {
        let r = one("separation:A3/SL", 3);
        assert_eq!(r.status, ClaimStatus::Pass);
        assert_eq!(r.evidence.witness.as_deref(), Some("2_z"));
    }

    #[test]
    fn low_budget_is_reported() {
        assert_eq!(one("lemma:3.1", 1).status, ClaimStatus::InsufficientBudget);
        assert_eq!(one("separation:A3/SL", 1).status, ClaimStatus::Pass);
    }

    #[test]
    fn false_lemma_fails_with_counterexample() {
        let c = lemma("bogus", "none", vec![], ids(&["x -> y = y -> x"]));
        let ledger = verify_selected(&[c], 2, 2, &VarietyCatalog::builtin(), &Searcher::default()).unwrap();
        let r = &ledger.results[0];
        assert_eq!(r.status, ClaimStatus::Fail);
        assert!(r.evidence.table.is_some());
        assert!(!ledger.all_pass());
    }
}
