use proptest::prelude::*;

use zlab::algebra::{eval, satisfies, Assignment, FiniteGroupoid};
use zlab::assoc::{canonical_identity, generate_associative_terms, ASSOC_VARS};
use zlab::atlas::VarietyCatalog;
use zlab::parse::{parse_identity, parse_term};
use zlab::search::{enumerate_models, SearchProblem};
use zlab::term::{Identity, Renaming, Term};

fn term(vars: &'static [&'static str]) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        1 => Just(Term::Zero),
        3 => proptest::sample::select(vars).prop_map(Term::var),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| Term::arrow(l, r))
    })
}

fn identity_over(vars: &'static [&'static str]) -> impl Strategy<Value = Identity> {
    (term(vars), term(vars)).prop_map(|(l, r)| Identity::new(l, r))
}

fn groupoid(max: usize) -> impl Strategy<Value = FiniteGroupoid> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(0..n as u8, n * n)
            .prop_map(move |cells| FiniteGroupoid::new(n, cells).unwrap())
    })
}

/// A table with a 0-fixing permutation of its elements.
fn groupoid_and_perm(max: usize) -> impl Strategy<Value = (FiniteGroupoid, Vec<u8>)> {
    groupoid(max).prop_flat_map(|g| {
        let rest: Vec<u8> = (1..g.size() as u8).collect();
        (Just(g), Just(rest).prop_shuffle()).prop_map(|(g, rest)| {
            let mut perm = vec![0];
            perm.extend(rest);
            (g, perm)
        })
    })
}

const XYZW: &[&str] = &["x", "y", "z", "w"];
const XY: &[&str] = &["x", "y"];

proptest! {
    #[test]
    fn render_round_trips(t in term(XYZW)) {
        prop_assert_eq!(parse_term(&t.render()).unwrap(), t.clone());
        prop_assert_eq!(parse_term(&t.render_compact()).unwrap(), t);
    }

    #[test]
    fn identity_render_round_trips(id in identity_over(XYZW)) {
        prop_assert_eq!(parse_identity(&id.render()).unwrap(), id.clone());
        prop_assert_eq!(parse_identity(&id.render_compact()).unwrap(), id);
    }

    #[test]
    fn canonical_identity_ignores_renaming_and_swap(
        i in 0usize..12,
        j in 0usize..12,
        p in 0usize..6,
        swap in any::<bool>(),
    ) {
        let terms = generate_associative_terms(&ASSOC_VARS).unwrap();
        let id = Identity::new(terms[i].clone(), terms[j].clone());
        let sigma = &Renaming::all_permutations(&ASSOC_VARS)[p];
        let mut moved = sigma.apply_identity(&id);
        if swap {
            moved = moved.swapped();
        }
        prop_assert_eq!(canonical_identity(&moved).unwrap(), canonical_identity(&id).unwrap());
    }

    #[test]
    fn satisfaction_is_isomorphism_invariant(
        (g, perm) in groupoid_and_perm(4),
        id in identity_over(XY),
    ) {
        let h = g.relabel(&perm);
        prop_assert_eq!(satisfies(&g, &id).holds, satisfies(&h, &id).holds);
    }

    #[test]
    fn satisfaction_ignores_assignment_order(g in groupoid(3), id in identity_over(XY)) {
        // Walk assignments from the last one back to the first.
        let n = g.size() as u8;
        let mut holds = true;
        for x in (0..n).rev() {
            for y in (0..n).rev() {
                let a = Assignment::new().with("x", x).with("y", y);
                holds &= eval(&id.lhs, &g, &a).unwrap() == eval(&id.rhs, &g, &a).unwrap();
            }
        }
        prop_assert_eq!(satisfies(&g, &id).holds, holds);
    }

    #[test]
    fn first_failure_is_a_real_failure(g in groupoid(3), id in identity_over(XY)) {
        if let Some(c) = satisfies(&g, &id).counterexample {
            let a = &c.assignment;
            let full = ["x", "y"].iter().fold(Assignment::new(), |acc, v| acc.with(v, a.get(v).unwrap_or(0)));
            prop_assert_eq!(eval(&id.lhs, &g, &full).unwrap(), c.lhs);
            prop_assert_eq!(eval(&id.rhs, &g, &full).unwrap(), c.rhs);
            prop_assert_ne!(c.lhs, c.rhs);
        }
    }

    #[test]
    fn canonical_form_is_a_class_invariant((g, perm) in groupoid_and_perm(4)) {
        let c = g.canonical_form();
        prop_assert_eq!(g.relabel(&perm).canonical_form(), c.clone());
        prop_assert!(c.is_canonical());
        prop_assert!(c <= g);
        prop_assert_eq!(g.is_canonical(), c == g);
    }

    #[test]
    fn table_text_round_trips(g in groupoid(5)) {
        let back: FiniteGroupoid = g.to_table_string().parse().unwrap();
        prop_assert_eq!(back, g);
    }
}

#[test]
fn iso_rejection_is_sound_and_complete() {
    let catalog = VarietyCatalog::builtin();
    for name in ["I", "A1", "A4", "A11", "MC", "E1"] {
        let v = catalog.get(name).unwrap();
        for n in 2..=4 {
            let raw = enumerate_models(&SearchProblem::members(n, v)).unwrap().models;
            let iso = enumerate_models(&SearchProblem::members(n, v).up_to_iso(true)).unwrap().models;
            let mut classes: Vec<_> = raw.iter().map(|g| g.canonical_form()).collect();
            classes.sort();
            classes.dedup();
            assert_eq!(iso, classes, "{name} size {n}");
            assert!(iso.iter().all(|g| g.is_canonical()));
        }
    }
}
