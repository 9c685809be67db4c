//! Identities of associative type of length 3 and their classification up
//! to renaming of variables and swapping of sides.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::parse::identity;
use crate::term::{Identity, Renaming, Term};

/// The variables associative-type identities are written in.
pub const ASSOC_VARS: [&str; 3] = ["x", "y", "z"];

/// Labels of the twelve associative terms, in generation order.
pub const ASSOC_TERM_LABELS: [&str; 12] = [
    "1a", "1b", "2a", "2b", "3a", "3b", "4a", "4b", "5a", "5b", "6a", "6b",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssocError {
    #[error("expected 3 distinct variables, got {0:?}")]
    WrongVariables(Vec<String>),
    #[error("variable {0:?} is outside the supported alphabet x, y, z")]
    UnsupportedVariable(String),
}

/// Index of one of the fourteen representative identities, 1 through 14.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SigmaLabel(pub u8);

impl fmt::Display for SigmaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", self.0)
    }
}

const SIGMA_TEXT: [&str; 14] = [
    "x -> (y -> z) = (x -> y) -> z",
    "x -> (y -> z) = x -> (z -> y)",
    "x -> (y -> z) = (x -> z) -> y",
    "x -> (y -> z) = y -> (x -> z)",
    "x -> (y -> z) = (y -> x) -> z",
    "x -> (y -> z) = y -> (z -> x)",
    "x -> (y -> z) = (y -> z) -> x",
    "x -> (y -> z) = (z -> x) -> y",
    "x -> (y -> z) = z -> (y -> x)",
    "x -> (y -> z) = (z -> y) -> x",
    "(x -> y) -> z = (x -> z) -> y",
    "(x -> y) -> z = (y -> x) -> z",
    "(x -> y) -> z = (y -> z) -> x",
    "(x -> y) -> z = (z -> y) -> x",
];

/// The fourteen representatives (A1)–(A14), labelled.
pub fn sigma() -> Vec<(SigmaLabel, Identity)> {
    SIGMA_TEXT
        .iter()
        .enumerate()
        .map(|(i, s)| (SigmaLabel(i as u8 + 1), identity(s)))
        .collect()
}

/// The representative (Ai) for `i` in 1..=14.
pub fn sigma_identity(i: u8) -> Option<Identity> {
    SIGMA_TEXT.get(usize::from(i).checked_sub(1)?).map(|s| identity(s))
}

/// The twelve terms using each of `vars` once, in the order
/// `a -> (b -> c)`, `(a -> b) -> c` for each permutation `(a, b, c)` of
/// `vars` taken lexicographically by position.
pub fn generate_associative_terms(vars: &[&str]) -> Result<Vec<Term>, AssocError> {
    let distinct: std::collections::BTreeSet<_> = vars.iter().collect();
    if vars.len() != 3 || distinct.len() != 3 {
        return Err(AssocError::WrongVariables(
            vars.iter().map(|s| s.to_string()).collect(),
        ));
    }
    let mut out = Vec::with_capacity(12);
    for [a, b, c] in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        let (a, b, c) = (Term::var(vars[a]), Term::var(vars[b]), Term::var(vars[c]));
        out.push(Term::arrow(a.clone(), Term::arrow(b.clone(), c.clone())));
        out.push(Term::arrow(Term::arrow(a, b), c));
    }
    Ok(out)
}

/// All 66 identities between two distinct associative terms over x, y, z.
pub fn generate_associative_identities() -> Vec<Identity> {
    let terms = generate_associative_terms(&ASSOC_VARS).expect("three distinct variables");
    let mut out = Vec::with_capacity(66);
    for i in 0..terms.len() {
        for j in i + 1..terms.len() {
            out.push(Identity::new(terms[i].clone(), terms[j].clone()));
        }
    }
    out
}

/// The least of `(σp, σq)` over the six renamings σ of x, y, z, each pair
/// taken with its smaller side first.
pub fn canonical_identity(id: &Identity) -> Result<Identity, AssocError> {
    if let Some(bad) = id.variables().into_iter().find(|v| !ASSOC_VARS.contains(&v.as_str())) {
        return Err(AssocError::UnsupportedVariable(bad));
    }
    Ok(Renaming::all_permutations(&ASSOC_VARS)
        .iter()
        .map(|sigma| sigma.apply_identity(id).sorted_sides())
        .min()
        .expect("six renamings"))
}

/// An equivalence class of identities under renaming and side swap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityClass {
    pub canonical: Identity,
    pub members: Vec<Identity>,
    pub sigma_label: Option<SigmaLabel>,
}

/// Partitions `ids` by canonical form. Classes containing a member of Σ
/// come first, ordered by label; the rest follow by canonical identity.
/// Members keep their input order.
pub fn classify_identities(ids: &[Identity]) -> Result<Vec<IdentityClass>, AssocError> {
    let mut by_canon: BTreeMap<Identity, Vec<Identity>> = BTreeMap::new();
    for id in ids {
        by_canon.entry(canonical_identity(id)?).or_default().push(id.clone());
    }
    let labels: BTreeMap<Identity, SigmaLabel> = sigma()
        .into_iter()
        .map(|(label, id)| (canonical_identity(&id).expect("Σ is over x, y, z"), label))
        .collect();
    let mut classes: Vec<IdentityClass> = by_canon
        .into_iter()
        .map(|(canonical, members)| IdentityClass {
            sigma_label: labels.get(&canonical).copied(),
            canonical,
            members,
        })
        .collect();
    classes.sort_by(|a, b| match (a.sigma_label, b.sigma_label) {
        (Some(x), Some(y)) => x.cmp(&y),
        (Some(_), None) => std::cmp::Ordering::Less,
        (None, Some(_)) => std::cmp::Ordering::Greater,
        (None, None) => a.canonical.cmp(&b.canonical),
    });
    Ok(classes)
}
