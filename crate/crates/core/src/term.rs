//! Terms over `->` and the constant `0`, identities between them, and
//! variable renamings.
//!
//! Primes (`x'`) and meets (`x & y`) only exist in the surface syntax; the
//! parser desugars them, so a [`Term`] is always built from variables, `0`
//! and arrows.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// A term of the zroupoid language.
///
/// The derived ordering compares variants as `Zero < Var < Arrow`, variables
/// by name, and arrows left side first. That is exactly the lexicographic
/// order of preorder token streams, which the canonical identity ordering
/// relies on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Zero,
    Var(String),
    Arrow(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn arrow(left: Term, right: Term) -> Term {
        Term::Arrow(Box::new(left), Box::new(right))
    }

    /// `t'`, i.e. `t -> 0`.
    pub fn prime(self) -> Term {
        Term::arrow(self, Term::Zero)
    }

    /// `a & b`, i.e. `(a -> b')'`.
    pub fn meet(a: Term, b: Term) -> Term {
        Term::arrow(a, b.prime()).prime()
    }

    pub fn is_arrow(&self) -> bool {
        matches!(self, Term::Arrow(..))
    }

    /// Number of arrow nodes.
    pub fn arrow_count(&self) -> usize {
        match self {
            Term::Arrow(l, r) => 1 + l.arrow_count() + r.arrow_count(),
            _ => 0,
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Zero => {}
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Arrow(l, r) => {
                l.collect_variables(out);
                r.collect_variables(out);
            }
        }
    }

    /// Occurrences of each variable, in name order.
    pub fn variable_occurrences(&self) -> BTreeMap<String, usize> {
        fn walk(t: &Term, out: &mut BTreeMap<String, usize>) {
            match t {
                Term::Zero => {}
                Term::Var(v) => *out.entry(v.clone()).or_default() += 1,
                Term::Arrow(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = BTreeMap::new();
        walk(self, &mut out);
        out
    }

    /// Fully parenthesized text: every arrow is wrapped, nothing else is.
    pub fn render(&self) -> String {
        let mut s = String::new();
        self.render_into(&mut s);
        s
    }

    fn render_into(&self, out: &mut String) {
        match self {
            Term::Zero => out.push('0'),
            Term::Var(v) => out.push_str(v),
            Term::Arrow(l, r) => {
                out.push('(');
                l.render_into(out);
                out.push_str(" -> ");
                r.render_into(out);
                out.push(')');
            }
        }
    }

    /// Compact text using primes and right-associated arrows.
    ///
    /// `Arrow(t, Zero)` is written `t'`, so `0'` stands for `0 -> 0`.
    pub fn render_compact(&self) -> String {
        let mut s = String::new();
        self.compact_into(&mut s, false);
        s
    }

    fn compact_into(&self, out: &mut String, as_operand: bool) {
        match self {
            Term::Zero => out.push('0'),
            Term::Var(v) => out.push_str(v),
            Term::Arrow(l, r) if **r == Term::Zero => {
                if l.is_arrow() && !is_primed(l) {
                    out.push('(');
                    l.compact_into(out, false);
                    out.push(')');
                } else {
                    l.compact_into(out, true);
                }
                out.push('\'');
            }
            Term::Arrow(l, r) => {
                if as_operand {
                    out.push('(');
                }
                if l.is_arrow() && !is_primed(l) {
                    out.push('(');
                    l.compact_into(out, false);
                    out.push(')');
                } else {
                    l.compact_into(out, true);
                }
                out.push_str(" -> ");
                r.compact_into(out, false);
                if as_operand {
                    out.push(')');
                }
            }
        }
    }
}

fn is_primed(t: &Term) -> bool {
    matches!(t, Term::Arrow(_, r) if **r == Term::Zero)
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

/// `lhs ≈ rhs`. Sides are stored in the order given; equality of identities
/// up to side swap and renaming is what [`crate::assoc::canonical_identity`]
/// decides.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Identity {
        Identity { lhs, rhs }
    }

    pub fn swapped(&self) -> Identity {
        Identity::new(self.rhs.clone(), self.lhs.clone())
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut vars = self.lhs.variables();
        vars.extend(self.rhs.variables());
        vars
    }

    /// Both sides sorted, so `p ≈ q` and `q ≈ p` normalize to the same value.
    pub fn sorted_sides(&self) -> Identity {
        if self.lhs <= self.rhs {
            self.clone()
        } else {
            self.swapped()
        }
    }

    pub fn render(&self) -> String {
        format!("{} = {}", self.lhs.render(), self.rhs.render())
    }

    pub fn render_compact(&self) -> String {
        format!("{} = {}", self.lhs.render_compact(), self.rhs.render_compact())
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for Identity {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenamingError {
    #[error("variable {0:?} is mapped twice")]
    DuplicateSource(String),
    #[error("two variables are both mapped to {0:?}")]
    NotInjective(String),
}

/// A bijection between variable names. Variables it does not mention are
/// left alone.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Renaming {
    map: BTreeMap<String, String>,
}

impl Renaming {
    pub fn new<I, A, B>(pairs: I) -> Result<Renaming, RenamingError>
    where
        I: IntoIterator<Item = (A, B)>,
        A: Into<String>,
        B: Into<String>,
    {
        let mut map = BTreeMap::new();
        let mut targets = BTreeSet::new();
        for (a, b) in pairs {
            let (a, b) = (a.into(), b.into());
            if !targets.insert(b.clone()) {
                return Err(RenamingError::NotInjective(b));
            }
            if map.insert(a.clone(), b).is_some() {
                return Err(RenamingError::DuplicateSource(a));
            }
        }
        let sources: BTreeSet<&String> = map.keys().collect();
        let images: BTreeSet<&String> = map.values().collect();
        // A finite injective map is a bijection on its domain only when
        // domain and image coincide.
        if sources != images {
            let stray = images.difference(&sources).next().unwrap();
            return Err(RenamingError::NotInjective((*stray).clone()));
        }
        Ok(Renaming { map })
    }

    /// All permutations of `vars`, identity first, in lexicographic order of
    /// the image sequence.
    pub fn all_permutations(vars: &[&str]) -> Vec<Renaming> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (0..vars.len()).collect();
        loop {
            let map = vars
                .iter()
                .zip(&images)
                .map(|(a, &b)| (a.to_string(), vars[b].to_string()))
                .collect();
            out.push(Renaming { map });
            if !next_permutation(&mut images) {
                break;
            }
        }
        out
    }

    pub fn apply(&self, name: &str) -> String {
        self.map.get(name).cloned().unwrap_or_else(|| name.to_string())
    }

    pub fn apply_term(&self, t: &Term) -> Term {
        match t {
            Term::Zero => Term::Zero,
            Term::Var(v) => Term::Var(self.apply(v)),
            Term::Arrow(l, r) => Term::arrow(self.apply_term(l), self.apply_term(r)),
        }
    }

    pub fn apply_identity(&self, id: &Identity) -> Identity {
        Identity::new(self.apply_term(&id.lhs), self.apply_term(&id.rhs))
    }
}

/// Advances `v` to the next lexicographic permutation; false once `v` is the
/// last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Term {
        Term::var("x")
    }

    #[test]
    fn render_examples() {
        assert_eq!(x().prime().render(), "(x -> 0)");
        assert_eq!(Term::Zero.render(), "0");
        let t = Term::arrow(Term::arrow(x(), Term::var("y")), Term::var("z"));
        assert_eq!(t.render(), "((x -> y) -> z)");
    }

    #[test]
    fn compact_rendering() {
        let t = Term::arrow(Term::arrow(x(), Term::var("y")), Term::var("z"));
        assert_eq!(t.render_compact(), "(x -> y) -> z");
        let t = Term::arrow(x(), Term::arrow(Term::var("y"), Term::var("z")));
        assert_eq!(t.render_compact(), "x -> y -> z");
        assert_eq!(Term::Zero.prime().prime().render_compact(), "0''");
        let t = Term::arrow(x(), Term::var("y")).prime();
        assert_eq!(t.render_compact(), "(x -> y)'");
        let t = Term::arrow(x().prime(), Term::var("y"));
        assert_eq!(t.render_compact(), "x' -> y");
    }

    #[test]
    fn ordering_is_preorder_lexicographic() {
        assert!(Term::Zero < x());
        assert!(x() < Term::var("y"));
        assert!(Term::var("z") < Term::arrow(Term::Zero, Term::Zero));
        // Arrow(x, Arrow(..)) < Arrow(Arrow(..), x): second token decides.
        let a = Term::arrow(x(), Term::arrow(x(), x()));
        let b = Term::arrow(Term::arrow(x(), x()), x());
        assert!(a < b);
    }

    #[test]
    fn renaming_must_be_bijective() {
        assert!(Renaming::new([("x", "y"), ("y", "x")]).is_ok());
        assert_eq!(
            Renaming::new([("x", "z"), ("y", "z")]),
            Err(RenamingError::NotInjective("z".into()))
        );
        assert!(Renaming::new([("x", "y")]).is_err());
    }

    #[test]
    fn six_permutations_of_three() {
        let perms = Renaming::all_permutations(&["x", "y", "z"]);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms[0].apply("y"), "y");
        assert_eq!(perms[5].apply("x"), "z");
    }

    #[test]
    fn meet_desugars() {
        let m = Term::meet(x(), Term::var("y"));
        assert_eq!(m.render(), "((x -> (y -> 0)) -> 0)");
    }
}
