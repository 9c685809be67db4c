//! Named varieties: the implication zroupoids, the fourteen varieties of
//! associative type, their restrictions to symmetric zroupoids, and the
//! classical varieties they are compared against.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{in_variety, FiniteGroupoid, VarietySpec};
use crate::assoc::sigma;
use crate::parse::{identity, parse_term};
use crate::term::{Identity, Renaming, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown variety {0:?}")]
    UnknownVariety(String),
}

#[derive(Clone, Debug)]
pub struct VarietyCatalog {
    entries: BTreeMap<String, VarietySpec>,
}

fn spec(name: &str, ids: &[&str]) -> VarietySpec {
    VarietySpec::new(name, ids.iter().map(|s| identity(s)).collect(), true)
}

/// Identity of (I_{2,0}): `x'' = x`.
pub fn involutive() -> Identity {
    identity("x'' = x")
}

/// Identity of (MC): `x & y = y & x`.
pub fn meet_commutative() -> Identity {
    identity("x & y = y & x")
}

/// The components (E1)–(E3) of type 1.
pub fn type1_components() -> [Identity; 3] {
    [
        identity("(x -> y)' = x -> (0 -> y)"),
        identity("x' -> y = x -> y'"),
        identity("0 -> (x -> y) = 0 -> (y -> x)"),
    ]
}

/// The six instances of the (E4) schema
/// `x -> (y -> z) = (p(x) -> p(y)) -> p(z)`, identity permutation first.
pub fn e4_instances() -> Vec<Identity> {
    let lhs = parse_term("x -> (y -> z)").expect("static term");
    let rhs = Term::arrow(Term::arrow(Term::var("x"), Term::var("y")), Term::var("z"));
    Renaming::all_permutations(&["x", "y", "z"])
        .iter()
        .map(|p| Identity::new(lhs.clone(), p.apply_term(&rhs)))
        .collect()
}

/// Whether `g` is an implication zroupoid of type 1: it satisfies
/// (E1)–(E3) and (E4) for some permutation.
pub fn is_type1(g: &FiniteGroupoid) -> bool {
    let base = VarietySpec::new("E1-E3", type1_components().to_vec(), true);
    in_variety(g, &base).holds
        && e4_instances()
            .iter()
            .any(|id| crate::algebra::satisfies(g, id).holds)
}

impl VarietyCatalog {
    pub fn builtin() -> VarietyCatalog {
        let mut entries = BTreeMap::new();
        let mut add = |v: VarietySpec| {
            entries.insert(v.name.clone(), v);
        };
        add(spec("T", &["x = y"]));
        add(VarietySpec::new("I", Vec::new(), true));
        add(spec("I10", &["x' = x"]));
        add(spec("I20", &["x'' = x"]));
        add(spec("MC", &["x & y = y & x"]));
        let s = spec("S", &["x'' = x", "x & y = y & x"]);
        add(s.clone());
        add(spec("SL", &["x' = x", "x -> y = y -> x"]));
        add(spec("DM", &["(x -> y) -> x = x"]));
        add(spec("BA", &["(x -> y) -> x = x", "x -> x = 0'"]));
        for (label, id) in sigma() {
            let a = VarietySpec::new(label.to_string(), vec![id], true);
            add(a.intersect(&s, format!("S{}", label.0)));
            add(a);
        }
        for (i, id) in type1_components().into_iter().enumerate() {
            add(VarietySpec::new(format!("E{}", i + 1), vec![id], true));
        }
        VarietyCatalog { entries }
    }

    /// Looks a variety up, accepting spellings such as `I_{2,0}`, `a3` or
    /// `s14`.
    pub fn get(&self, name: &str) -> Result<&VarietySpec, CatalogError> {
        self.entries
            .get(&normalize_name(name))
            .ok_or_else(|| CatalogError::UnknownVariety(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = &VarietySpec> {
        self.entries.values()
    }

    /// The twelve nodes of the inclusion diagram of associative-type
    /// subvarieties of I, together with T, SL and BA.
    pub fn main_poset_nodes() -> Vec<&'static str> {
        vec!["T", "SL", "BA", "A1", "A2", "A3", "A4", "A6", "A9", "A11", "A14", "I"]
    }

    /// Nodes of the inclusion diagram inside symmetric zroupoids.
    pub fn symmetric_poset_nodes() -> Vec<&'static str> {
        vec!["T", "SL", "BA", "S14", "S"]
    }
}

pub fn normalize_name(name: &str) -> String {
    name.chars()
        .filter(|c| !matches!(c, '_' | '{' | '}' | ',' | ' '))
        .collect::<String>()
        .to_uppercase()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{two_b, two_s, two_z};

    #[test]
    fn catalog_entries() {
        let c = VarietyCatalog::builtin();
        assert_eq!(
            c.get("A1").unwrap().identities,
            vec![identity("x -> (y -> z) = (x -> y) -> z")]
        );
        assert_eq!(
            c.get("BA").unwrap().identities,
            vec![identity("(x -> y) -> x = x"), identity("x -> x = 0'")]
        );
        assert_eq!(c.get("T").unwrap().identities, vec![identity("x = y")]);
        assert!(c.get("I").unwrap().identities.is_empty());
        assert_eq!(c.get("S14").unwrap().identities.len(), 3);
        assert!(c.iter().all(|v| v.relative_to_i));
        // T, I, I10, I20, MC, S, SL, DM, BA, 14 A's, 14 S's, E1-E3.
        assert_eq!(c.names().count(), 9 + 28 + 3);
    }

    #[test]
    fn name_spellings() {
        let c = VarietyCatalog::builtin();
        assert_eq!(c.get("I_{2,0}").unwrap().name, "I20");
        assert_eq!(c.get("a3").unwrap().name, "A3");
        assert_eq!(c.get("s14").unwrap().name, "S14");
        assert_eq!(
            c.get("Q7").unwrap_err(),
            CatalogError::UnknownVariety("Q7".into())
        );
    }

    #[test]
    fn two_element_memberships() {
        let c = VarietyCatalog::builtin();
        assert!(in_variety(&two_s(), c.get("SL").unwrap()).holds);
        assert!(in_variety(&two_b(), c.get("BA").unwrap()).holds);
        let r = in_variety(&two_z(), c.get("SL").unwrap());
        let cx = r.counterexample.unwrap();
        assert_eq!(cx.identity, identity("x' = x"));
        assert_eq!(cx.assignment.get("x"), Some(1));
    }

    #[test]
    fn e4_schema() {
        let inst = e4_instances();
        assert_eq!(inst.len(), 6);
        assert_eq!(inst[0], identity("x -> (y -> z) = (x -> y) -> z"));
        assert!(inst.contains(&identity("x -> (y -> z) = (z -> y) -> x")));
        assert!(is_type1(&FiniteGroupoid::trivial()));
        assert!(is_type1(&two_s()));
        assert!(!is_type1(&two_b()));
    }
}
