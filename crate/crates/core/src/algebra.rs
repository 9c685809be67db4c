//! Finite zroupoids given by Cayley tables, and satisfaction of identities
//! in them.
//!
//! Element `0` of every table is the constant `0` of the language.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::parse::identity;
use crate::term::{Identity, Term};

/// Largest table the `u8` element encoding can hold.
pub const MAX_TABLE_SIZE: usize = 255;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table size must be at least 1")]
    Empty,
    #[error("table size {0} exceeds {MAX_TABLE_SIZE}")]
    TooLarge(usize),
    #[error("expected {expected} entries, got {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("entry {value} at row {row}, column {col} is out of range for size {size}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

/// A groupoid `⟨{0..n}, ->, 0⟩` stored as a row-major Cayley table:
/// entry `a * n + b` is `a -> b`.
///
/// Orders first by size, then lexicographically by the row-major table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteGroupoid {
    size: usize,
    table: Vec<u8>,
}

impl FiniteGroupoid {
    pub fn new(size: usize, table: Vec<u8>) -> Result<FiniteGroupoid, TableError> {
        if size == 0 {
            return Err(TableError::Empty);
        }
        if size > MAX_TABLE_SIZE {
            return Err(TableError::TooLarge(size));
        }
        if table.len() != size * size {
            return Err(TableError::WrongLength {
                expected: size * size,
                found: table.len(),
            });
        }
        if let Some(i) = table.iter().position(|&e| usize::from(e) >= size) {
            return Err(TableError::OutOfRange {
                row: i / size,
                col: i % size,
                value: usize::from(table[i]),
                size,
            });
        }
        Ok(FiniteGroupoid { size, table })
    }

    /// Builds a table from rows; row `a` lists `a -> 0, a -> 1, ...`.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<FiniteGroupoid, TableError> {
        let size = rows.len();
        let mut table = Vec::with_capacity(size * size);
        for row in rows {
            let row = row.as_ref();
            if row.len() != size {
                return Err(TableError::WrongLength {
                    expected: size * size,
                    found: size * (table.len() / size.max(1)) + row.len(),
                });
            }
            table.extend_from_slice(row);
        }
        FiniteGroupoid::new(size, table)
    }

    /// The one-element algebra.
    pub fn trivial() -> FiniteGroupoid {
        FiniteGroupoid {
            size: 1,
            table: vec![0],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    #[inline]
    pub fn op(&self, a: u8, b: u8) -> u8 {
        self.table[usize::from(a) * self.size + usize::from(b)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.table.chunks(self.size)
    }

    /// The image of this algebra under the bijection `a ↦ perm[a]`, i.e.
    /// the table `h` with `h(perm[a], perm[b]) = perm[g(a, b)]`.
    ///
    /// Panics unless `perm` is a permutation of `0..size`.
    pub fn relabel(&self, perm: &[u8]) -> FiniteGroupoid {
        let n = self.size;
        assert_eq!(perm.len(), n, "permutation length");
        let mut seen = vec![false; n];
        for &p in perm {
            assert!(!std::mem::replace(&mut seen[usize::from(p)], true), "not a permutation");
        }
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let v = self.table[a * n + b];
                table[usize::from(perm[a]) * n + usize::from(perm[b])] = perm[usize::from(v)];
            }
        }
        FiniteGroupoid { size: n, table }
    }

    /// The least table, row-major, among all relabelings that fix `0`.
    pub fn canonical_form(&self) -> FiniteGroupoid {
        let n = self.size;
        let mut best = self.table.clone();
        let mut cand = vec![0u8; n * n];
        for_each_zero_fixing_inverse(n, |inv, perm| {
            if relabeled_cmp(&self.table, n, inv, perm, &best, &mut cand) == std::cmp::Ordering::Less {
                best.copy_from_slice(&cand);
            }
            true
        });
        FiniteGroupoid {
            size: n,
            table: best,
        }
    }

    /// True when no `0`-fixing relabeling yields a smaller table.
    pub fn is_canonical(&self) -> bool {
        let n = self.size;
        let mut cand = vec![0u8; n * n];
        let mut canonical = true;
        for_each_zero_fixing_inverse(n, |inv, perm| {
            if relabeled_cmp(&self.table, n, inv, perm, &self.table, &mut cand) == std::cmp::Ordering::Less {
                canonical = false;
            }
            canonical
        });
        canonical
    }

    /// Renders in the Cayley-table file format.
    pub fn to_table_string(&self) -> String {
        let mut s = format!("{}\n", self.size);
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }

    /// Rows joined on one line, e.g. `(0,1),(1,1)`.
    pub fn compact(&self) -> String {
        self.rows()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
                format!("({})", cells.join(","))
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Calls `f(inverse, perm)` for every permutation of `0..n` fixing 0, the
/// identity first. Stops early when `f` returns false.
fn for_each_zero_fixing_inverse(n: usize, mut f: impl FnMut(&[u8], &[u8]) -> bool) {
    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut inv = perm.clone();
    loop {
        for (i, &p) in perm.iter().enumerate() {
            inv[usize::from(p)] = i as u8;
        }
        if !f(&inv, &perm) {
            return;
        }
        if n < 3 || !crate::term::next_permutation(&mut perm[1..]) {
            return;
        }
    }
}

/// Compares the relabeled table against `best`, writing the relabeled cells
/// into `cand`. Stops filling as soon as the relabeled table is known to be
/// larger.
fn relabeled_cmp(
    table: &[u8],
    n: usize,
    inv: &[u8],
    perm: &[u8],
    best: &[u8],
    cand: &mut [u8],
) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let mut ord = Ordering::Equal;
    for i in 0..n {
        let a = usize::from(inv[i]);
        for j in 0..n {
            let b = usize::from(inv[j]);
            let v = perm[usize::from(table[a * n + b])];
            let k = i * n + j;
            cand[k] = v;
            if ord == Ordering::Equal {
                ord = v.cmp(&best[k]);
                if ord == Ordering::Greater {
                    return ord;
                }
            }
        }
    }
    ord
}

impl fmt::Display for FiniteGroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.size;
        let w = (n - 1).to_string().len();
        write!(f, "{:>w$} |", "->")?;
        for b in 0..n {
            write!(f, " {b:>w$}")?;
        }
        writeln!(f)?;
        writeln!(f, "{}", "-".repeat(w.max(2) + 2 + n * (w + 1)))?;
        for (a, row) in self.rows().enumerate() {
            write!(f, "{a:>w$} |", w = w.max(2))?;
            for e in row {
                write!(f, " {e:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Serialize for FiniteGroupoid {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.compact())
    }
}

impl FromStr for FiniteGroupoid {
    type Err = TableError;

    /// Parses the Cayley-table file format: the size on the first line, then
    /// one row per line. `#` lines and blank lines are skipped.
    fn from_str(s: &str) -> Result<FiniteGroupoid, TableError> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, first) = lines.next().ok_or(TableError::Format {
            line: 1,
            message: "missing size line".into(),
        })?;
        let size: usize = first.parse().map_err(|_| TableError::Format {
            line: line_no,
            message: format!("expected a size, found {first:?}"),
        })?;
        if size == 0 {
            return Err(TableError::Empty);
        }
        if size > MAX_TABLE_SIZE {
            return Err(TableError::TooLarge(size));
        }
        let mut table = Vec::with_capacity(size * size);
        let mut rows = 0;
        for (line_no, line) in lines {
            if rows == size {
                return Err(TableError::Format {
                    line: line_no,
                    message: format!("more than {size} rows"),
                });
            }
            let cells = line
                .split_whitespace()
                .map(|c| {
                    c.parse::<usize>().map_err(|_| TableError::Format {
                        line: line_no,
                        message: format!("not an element: {c:?}"),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            if cells.len() != size {
                return Err(TableError::Format {
                    line: line_no,
                    message: format!("expected {size} entries, found {}", cells.len()),
                });
            }
            for (col, &v) in cells.iter().enumerate() {
                if v >= size {
                    return Err(TableError::OutOfRange {
                        row: rows,
                        col,
                        value: v,
                        size,
                    });
                }
                table.push(v as u8);
            }
            rows += 1;
        }
        if rows != size {
            return Err(TableError::Format {
                line: s.lines().count(),
                message: format!("expected {size} rows, found {rows}"),
            });
        }
        FiniteGroupoid::new(size, table)
    }
}

/// Values for the variables of a term.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Assignment(pub BTreeMap<String, u8>);

impl Assignment {
    pub fn new() -> Assignment {
        Assignment::default()
    }

    pub fn with(mut self, var: &str, value: u8) -> Assignment {
        self.0.insert(var.to_string(), value);
        self
    }

    pub fn get(&self, var: &str) -> Option<u8> {
        self.0.get(var).copied()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable {0:?} has no value")]
    Unassigned(String),
    #[error("value {value} of {var:?} is not an element of a size-{size} algebra")]
    OutOfRange { var: String, value: u8, size: usize },
}

/// Evaluates `t` in `g` under `a`.
pub fn eval(t: &Term, g: &FiniteGroupoid, a: &Assignment) -> Result<u8, EvalError> {
    match t {
        Term::Zero => Ok(0),
        Term::Var(v) => {
            let value = a.get(v).ok_or_else(|| EvalError::Unassigned(v.clone()))?;
            if usize::from(value) >= g.size() {
                return Err(EvalError::OutOfRange {
                    var: v.clone(),
                    value,
                    size: g.size(),
                });
            }
            Ok(value)
        }
        Term::Arrow(l, r) => Ok(g.op(eval(l, g, a)?, eval(r, g, a)?)),
    }
}

/// Postfix instruction of a compiled term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Op {
    Zero,
    Var(u8),
    Arrow,
}

/// An identity flattened to postfix code over variable slots, slots
/// numbered by variable name order.
#[derive(Clone, Debug)]
pub(crate) struct CompiledIdentity {
    pub vars: Vec<String>,
    pub lhs: Vec<Op>,
    pub rhs: Vec<Op>,
}

impl CompiledIdentity {
    pub fn new(id: &Identity) -> CompiledIdentity {
        let vars: Vec<String> = id.variables().into_iter().collect();
        let slot: BTreeMap<&str, u8> = vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i as u8))
            .collect();
        let compile = |t: &Term| {
            fn go(t: &Term, slot: &BTreeMap<&str, u8>, out: &mut Vec<Op>) {
                match t {
                    Term::Zero => out.push(Op::Zero),
                    Term::Var(v) => out.push(Op::Var(slot[v.as_str()])),
                    Term::Arrow(l, r) => {
                        go(l, slot, out);
                        go(r, slot, out);
                        out.push(Op::Arrow);
                    }
                }
            }
            let mut out = Vec::new();
            go(t, &slot, &mut out);
            out
        };
        CompiledIdentity {
            lhs: compile(&id.lhs),
            rhs: compile(&id.rhs),
            vars,
        }
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }
}

/// Runs postfix code against a complete table.
#[inline]
pub(crate) fn run(code: &[Op], g: &FiniteGroupoid, vals: &[u8], stack: &mut Vec<u8>) -> u8 {
    stack.clear();
    for op in code {
        match *op {
            Op::Zero => stack.push(0),
            Op::Var(s) => stack.push(vals[usize::from(s)]),
            Op::Arrow => {
                let b = stack.pop().unwrap();
                let a = stack.pop().unwrap();
                stack.push(g.op(a, b));
            }
        }
    }
    stack.pop().unwrap()
}

/// Advances `vals` through `0..n` in odometer order, last slot fastest.
pub(crate) fn next_assignment(vals: &mut [u8], n: usize) -> bool {
    for v in vals.iter_mut().rev() {
        if usize::from(*v) + 1 < n {
            *v += 1;
            return true;
        }
        *v = 0;
    }
    false
}

/// A failing instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub identity: Identity,
    pub assignment: Assignment,
    pub lhs: u8,
    pub rhs: u8,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.assignment.0.is_empty() {
            String::new()
        } else {
            format!(" at {}", self.assignment)
        };
        write!(
            f,
            "{} fails{at}: lhs = {}, rhs = {}",
            self.identity.render_compact(),
            self.lhs,
            self.rhs
        )
    }
}

/// Outcome of a satisfaction or membership check. The check holds exactly
/// when there is no counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SatisfactionReport {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl SatisfactionReport {
    pub fn holds() -> SatisfactionReport {
        SatisfactionReport {
            holds: true,
            counterexample: None,
        }
    }

    pub fn fails(c: Counterexample) -> SatisfactionReport {
        SatisfactionReport {
            holds: false,
            counterexample: Some(c),
        }
    }
}

/// Checks `id` under every assignment of its variables, in lexicographic
/// order with variables sorted by name; the first failure is reported.
pub fn satisfies(g: &FiniteGroupoid, id: &Identity) -> SatisfactionReport {
    let compiled = CompiledIdentity::new(id);
    match first_failure(g, &compiled) {
        None => SatisfactionReport::holds(),
        Some((vals, lhs, rhs)) => SatisfactionReport::fails(Counterexample {
            identity: id.clone(),
            assignment: Assignment(compiled.vars.iter().cloned().zip(vals).collect()),
            lhs,
            rhs,
        }),
    }
}

pub(crate) fn first_failure(g: &FiniteGroupoid, c: &CompiledIdentity) -> Option<(Vec<u8>, u8, u8)> {
    let mut vals = vec![0u8; c.arity()];
    let mut stack = Vec::with_capacity(16);
    loop {
        let l = run(&c.lhs, g, &vals, &mut stack);
        let r = run(&c.rhs, g, &vals, &mut stack);
        if l != r {
            return Some((vals, l, r));
        }
        if !next_assignment(&mut vals, g.size()) {
            return None;
        }
    }
}

/// Axiom (I): `(x -> y) -> z = ((z' -> x) -> (y -> z)')'`.
pub fn axiom_i() -> Identity {
    identity("(x -> y) -> z = ((z' -> x) -> (y -> z)')'")
}

/// Axiom (I0): `0'' = 0`.
pub fn axiom_i0() -> Identity {
    identity("0'' = 0")
}

/// Both defining axioms of implication zroupoids, (I0) first.
pub fn izroupoid_axioms() -> Vec<Identity> {
    vec![axiom_i0(), axiom_i()]
}

pub fn is_izroupoid(g: &FiniteGroupoid) -> SatisfactionReport {
    for ax in izroupoid_axioms() {
        let report = satisfies(g, &ax);
        if !report.holds {
            return report;
        }
    }
    SatisfactionReport::holds()
}

/// A variety given by identities, optionally relative to the implication
/// zroupoid axioms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VarietySpec {
    pub name: String,
    pub identities: Vec<Identity>,
    pub relative_to_i: bool,
}

impl VarietySpec {
    pub fn new(name: impl Into<String>, identities: Vec<Identity>, relative_to_i: bool) -> VarietySpec {
        VarietySpec {
            name: name.into(),
            identities,
            relative_to_i,
        }
    }

    /// Identities a member must satisfy, axioms first when relative to I.
    pub fn all_identities(&self) -> Vec<Identity> {
        let mut out = if self.relative_to_i {
            izroupoid_axioms()
        } else {
            Vec::new()
        };
        out.extend(self.identities.iter().cloned());
        out
    }

    /// The intersection of two varieties, axioms of both.
    pub fn intersect(&self, other: &VarietySpec, name: impl Into<String>) -> VarietySpec {
        let mut ids = self.identities.clone();
        for id in &other.identities {
            if !ids.contains(id) {
                ids.push(id.clone());
            }
        }
        VarietySpec::new(name, ids, self.relative_to_i || other.relative_to_i)
    }
}

/// Membership in `v`; the counterexample names the first failing identity.
pub fn in_variety(g: &FiniteGroupoid, v: &VarietySpec) -> SatisfactionReport {
    for id in v.all_identities() {
        let report = satisfies(g, &id);
        if !report.holds {
            return report;
        }
    }
    SatisfactionReport::holds()
}

pub fn isomorphic(g1: &FiniteGroupoid, g2: &FiniteGroupoid) -> bool {
    g1.size() == g2.size() && g1.canonical_form() == g2.canonical_form()
}

/// The two-element algebra with `->` constantly 0.
pub fn two_z() -> FiniteGroupoid {
    FiniteGroupoid::from_rows(&[[0, 0], [0, 0]]).unwrap()
}

/// The two-element join-semilattice with least element 0.
pub fn two_s() -> FiniteGroupoid {
    FiniteGroupoid::from_rows(&[[0, 1], [1, 1]]).unwrap()
}

/// The two-element Boolean algebra under implication.
pub fn two_b() -> FiniteGroupoid {
    FiniteGroupoid::from_rows(&[[1, 1], [0, 1]]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_term;

    #[test]
    fn eval_examples() {
        let x = parse_term("x'").unwrap();
        assert_eq!(eval(&x, &two_b(), &Assignment::new().with("x", 0)), Ok(1));
        assert_eq!(eval(&Term::Zero, &two_z(), &Assignment::new()), Ok(0));
        let t = parse_term("x -> y").unwrap();
        let a = Assignment::new().with("x", 1).with("y", 1);
        assert_eq!(eval(&t, &two_z(), &a), Ok(0));
    }

    #[test]
    fn eval_reports_unassigned_and_out_of_range() {
        let t = parse_term("x -> y").unwrap();
        let a = Assignment::new().with("x", 1);
        assert_eq!(eval(&t, &two_z(), &a), Err(EvalError::Unassigned("y".into())));
        let a = Assignment::new().with("x", 5).with("y", 0);
        assert!(matches!(eval(&t, &two_z(), &a), Err(EvalError::OutOfRange { .. })));
    }

    #[test]
    fn associativity_in_two_element_algebras() {
        let a1 = identity("x -> (y -> z) = (x -> y) -> z");
        assert!(satisfies(&two_s(), &a1).holds);
        let r = satisfies(&two_b(), &a1);
        assert!(!r.holds);
        let c = r.counterexample.unwrap();
        // First failure in lexicographic order is x=y=z=0.
        assert_eq!(c.assignment, Assignment::new().with("x", 0).with("y", 0).with("z", 0));
        assert_eq!((c.lhs, c.rhs), (1, 0));
        let a = Assignment::new().with("x", 0).with("y", 1).with("z", 0);
        assert_eq!(eval(&a1.lhs, &two_b(), &a), Ok(1));
        assert_eq!(eval(&a1.rhs, &two_b(), &a), Ok(0));
    }

    #[test]
    fn trivial_algebra_satisfies_everything() {
        let g = FiniteGroupoid::trivial();
        assert!(satisfies(&g, &identity("x = y")).holds);
        assert!(satisfies(&g, &axiom_i()).holds);
        assert!(is_izroupoid(&g).holds);
    }

    #[test]
    fn two_element_izroupoids() {
        for g in [two_z(), two_s(), two_b()] {
            assert!(is_izroupoid(&g).holds, "{g}");
        }
    }

    #[test]
    fn ground_identity_reports_empty_assignment() {
        let r = satisfies(&two_b(), &axiom_i0());
        // In 2_b, 0' = 1 and 1' = 0, so 0'' = 0.
        assert!(r.holds);
        let bad = FiniteGroupoid::from_rows(&[[1, 0], [1, 0]]).unwrap();
        let r = satisfies(&bad, &axiom_i0());
        assert!(!r.holds);
        assert!(r.counterexample.unwrap().assignment.0.is_empty());
    }

    #[test]
    fn membership_reports_first_failing_identity() {
        let sl = VarietySpec::new(
            "SL",
            vec![identity("x' = x"), identity("x -> y = y -> x")],
            true,
        );
        assert!(in_variety(&two_s(), &sl).holds);
        let r = in_variety(&two_z(), &sl);
        let c = r.counterexample.unwrap();
        assert_eq!(c.identity, identity("x' = x"));
        assert_eq!(c.assignment, Assignment::new().with("x", 1));
        assert_eq!((c.lhs, c.rhs), (0, 1));
    }

    #[test]
    fn table_file_round_trip() {
        let text = "2\n1 1\n0 1\n";
        let g: FiniteGroupoid = text.parse().unwrap();
        assert_eq!(g, two_b());
        assert_eq!(g.to_table_string(), text);
        let commented = "# the Boolean algebra\n2\n\n1 1\n# row 1\n0 1\n";
        assert_eq!(commented.parse::<FiniteGroupoid>().unwrap(), two_b());
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(matches!("2\n1 2\n0 1\n".parse::<FiniteGroupoid>(), Err(TableError::OutOfRange { value: 2, .. })));
        assert!(matches!("2\n1 1\n".parse::<FiniteGroupoid>(), Err(TableError::Format { .. })));
        assert!(matches!("2\n1 1 1\n0 1\n".parse::<FiniteGroupoid>(), Err(TableError::Format { .. })));
        assert!(matches!("2\n1 1\n0 1\n1 1\n".parse::<FiniteGroupoid>(), Err(TableError::Format { .. })));
        assert!(matches!("0\n".parse::<FiniteGroupoid>(), Err(TableError::Empty)));
        assert!(matches!("".parse::<FiniteGroupoid>(), Err(TableError::Format { .. })));
        assert!(matches!("x\n".parse::<FiniteGroupoid>(), Err(TableError::Format { .. })));
        assert!(FiniteGroupoid::new(2, vec![0, 0, 0]).is_err());
        assert!(FiniteGroupoid::from_rows(&[vec![0u8, 0], vec![0]]).is_err());
    }

    #[test]
    fn canonical_form_basics() {
        let g = FiniteGroupoid::trivial();
        assert_eq!(g.canonical_form(), g);
        assert!(!isomorphic(&two_s(), &two_b()));
        assert!(isomorphic(&two_b(), &two_b()));
        let w = FiniteGroupoid::from_rows(&[[0, 0, 0], [2, 0, 0], [0, 0, 0]]).unwrap();
        let swapped = w.relabel(&[0, 2, 1]);
        assert_eq!(swapped, FiniteGroupoid::from_rows(&[[0, 0, 0], [0, 0, 0], [1, 0, 0]]).unwrap());
        assert!(isomorphic(&w, &swapped));
        let c = w.canonical_form();
        assert_eq!(c.canonical_form(), c);
        assert!(c.is_canonical());
        assert_eq!(c, swapped.canonical_form());
        assert!(c <= w && c <= swapped);
    }
}
