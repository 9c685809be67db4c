//! One pass/fail line per acceptance criterion. Runs without the libtest
//! harness so the lines always reach the terminal.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use zlab::algebra::{in_variety, is_izroupoid, two_b, two_s, two_z};
use zlab::assoc::{classify_identities, generate_associative_identities, generate_associative_terms, ASSOC_VARS};
use zlab::atlas::claims::{recorded_claims, verify_selected, ClaimStatus};
use zlab::atlas::witness::witness;
use zlab::atlas::{build_poset, proof_witnesses, VarietyCatalog};
use zlab::search::{brute_force, find_separating_model, SearchConfig, SearchProblem, Searcher};

type Check = Result<(), String>;

/// Name, check and time limit.
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog() -> VarietyCatalog {
    VarietyCatalog::builtin()
}

fn classification() -> Check {
    let terms = generate_associative_terms(&ASSOC_VARS).map_err(|e| e.to_string())?;
    let ids = generate_associative_identities();
    let classes = classify_identities(&ids).map_err(|e| e.to_string())?;
    ensure(terms.len() == 12 && ids.len() == 66 && classes.len() == 14, || {
        format!("{} terms, {} identities, {} classes", terms.len(), ids.len(), classes.len())
    })?;
    let labels: BTreeSet<u8> = classes.iter().filter_map(|c| c.sigma_label.map(|l| l.0)).collect();
    ensure(labels == (1..=14).collect(), || format!("labels {labels:?}"))
}

fn two_element_algebras() -> Check {
    let c = catalog();
    for (name, g) in [("2_z", two_z()), ("2_s", two_s()), ("2_b", two_b())] {
        ensure(is_izroupoid(&g).holds, || format!("{name} is not an I-zroupoid"))?;
    }
    ensure(in_variety(&two_s(), c.get("SL").unwrap()).holds, || "2_s not in SL".into())?;
    ensure(in_variety(&two_b(), c.get("BA").unwrap()).holds, || "2_b not in BA".into())
}

fn witness_suite() -> Check {
    let c = catalog();
    let ws = proof_witnesses();
    ensure(ws.len() == 8, || format!("{} witnesses", ws.len()))?;
    for w in &ws {
        ensure(w.verified(&c), || format!("{} does not verify", w.id))?;
    }
    let m4b = witness("M4b").unwrap().table;
    ensure(m4b.compact() == "(0,1,2,3),(2,3,2,3),(1,1,3,3),(3,3,3,3)", || m4b.compact())?;
    let member = |v: &str| in_variety(&m4b, c.get(v).unwrap()).holds;
    ensure(member("A14") && !member("A11") && member("S14") && !member("SL"), || {
        "M4b memberships".into()
    })
}

fn equality_theorems() -> Check {
    let c = catalog();
    let groups: [&[&str]; 2] = [&["A3", "A5", "A7", "A8", "A10"], &["A11", "A12", "A13"]];
    // Naive side: every table of size at most 3 that is an I-zroupoid.
    let mut all = Vec::new();
    for n in 1..=3 {
        all.extend(brute_force(&SearchProblem::izroupoids(n)).map_err(|e| e.to_string())?);
    }
    for group in groups {
        for a in group {
            for b in group {
                let (va, vb) = (c.get(a).unwrap(), c.get(b).unwrap());
                if let Some(g) = all.iter().find(|g| in_variety(g, va).holds && !in_variety(g, vb).holds) {
                    return Err(format!("{} in {a} not {b}", g.compact()));
                }
                let o = find_separating_model(va, vb, 3).map_err(|e| e.to_string())?;
                ensure(o.separation.is_none(), || format!("search separates {a} from {b}"))?;
            }
        }
    }
    Ok(())
}

const MAIN_EDGES: [(&str, &str); 16] = [
    ("T", "SL"),
    ("T", "BA"),
    ("SL", "A3"),
    ("BA", "A4"),
    ("A1", "I"),
    ("A2", "A11"),
    ("A3", "A1"),
    ("A3", "A2"),
    ("A3", "A4"),
    ("A3", "A6"),
    ("A3", "A9"),
    ("A4", "I"),
    ("A6", "A11"),
    ("A9", "A11"),
    ("A11", "A14"),
    ("A14", "I"),
];

fn inclusion_evidence() -> Check {
    let c = catalog();
    for (sub, sup) in MAIN_EDGES {
        let o = find_separating_model(c.get(sub).unwrap(), c.get(sup).unwrap(), 3).map_err(|e| e.to_string())?;
        ensure(o.separation.is_none() && o.searched_up_to == 3, || format!("{sub} in {sup}"))?;
    }
    Ok(())
}

fn lemma_evidence() -> Check {
    let lemmas: Vec<_> = recorded_claims()
        .into_iter()
        .filter(|c| c.id.starts_with("lemma:"))
        .collect();
    let ledger = verify_selected(&lemmas, 3, 3, &catalog(), &Searcher::default()).map_err(|e| e.to_string())?;
    let bad: Vec<_> = ledger
        .results
        .iter()
        .filter(|r| r.status != ClaimStatus::Pass)
        .map(|r| r.claim.id.as_str())
        .collect();
    ensure(bad.is_empty() && ledger.results.len() >= 40, || {
        format!("{} lemma claims, failing {bad:?}", ledger.results.len())
    })
}

fn edge_set(edges: Vec<(&str, &str)>) -> BTreeSet<(String, String)> {
    edges.into_iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

fn poset_reproduction() -> Check {
    let c = catalog();
    let s = Searcher::default();
    let main = build_poset(&VarietyCatalog::main_poset_nodes(), 3, &c, &s).map_err(|e| e.to_string())?;
    ensure(main.discrepancies.is_empty(), || format!("{} discrepancies", main.discrepancies.len()))?;
    ensure(edge_set(main.edge_pairs()) == edge_set(MAIN_EDGES.to_vec()), || {
        format!("main edges {:?}", main.edge_pairs())
    })?;
    let sym = build_poset(&VarietyCatalog::symmetric_poset_nodes(), 3, &c, &s).map_err(|e| e.to_string())?;
    let expected = vec![("T", "SL"), ("T", "BA"), ("SL", "S14"), ("S14", "S"), ("BA", "S")];
    ensure(sym.discrepancies.is_empty() && edge_set(sym.edge_pairs()) == edge_set(expected), || {
        format!("symmetric edges {:?}", sym.edge_pairs())
    })?;
    ensure(sym.relation("BA", "S14").is_some_and(|r| r.is_witnessed()), || "BA in S14".into())
}

fn oracle_equivalence() -> Check {
    let c = catalog();
    for n in [2, 3] {
        for iso in [false, true] {
            for name in ["I", "A4", "A11", "SL", "MC"] {
                let p = SearchProblem::members(n, c.get(name).unwrap()).up_to_iso(iso);
                let fast = Searcher::default().enumerate_models(&p).map_err(|e| e.to_string())?.models;
                let naive = brute_force(&p).map_err(|e| e.to_string())?;
                ensure(fast == naive, || format!("{name} size {n} iso {iso}: {} vs {}", fast.len(), naive.len()))?;
            }
        }
    }
    Ok(())
}

fn reproduce_report(jobs: usize) -> Result<Vec<u8>, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("report.json");
    let status = Command::new(env!("CARGO_BIN_EXE_zlab"))
        .env_remove("ZLAB_MAX_SIZE")
        .args(["reproduce", "--budget", "3", "--jobs", &jobs.to_string(), "--report"])
        .arg(&path)
        .output()
        .map_err(|e| e.to_string())?
        .status;
    ensure(status.success(), || format!("reproduce exited with {status}"))?;
    std::fs::read(path).map_err(|e| e.to_string())
}

fn determinism() -> Check {
    let first = reproduce_report(1)?;
    ensure(first == reproduce_report(1)?, || "two runs differ".into())?;
    ensure(first == reproduce_report(4)?, || "--jobs 1 and --jobs 4 differ".into())?;
    // The library path must agree with the worker count too.
    let report = |jobs| {
        let s = Searcher::new(SearchConfig { max_size: 6, jobs });
        let r = zlab_cli::reproduce(3, 4, &catalog(), &s).unwrap();
        serde_json::to_string_pretty(&r).unwrap()
    };
    ensure(report(1) == report(4), || "library reports differ".into())
}

fn golden_counts() -> Check {
    let c = catalog();
    let text = include_str!("../../core/tests/golden/counts.txt");
    let mut rows = 0;
    for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let f: Vec<&str> = line.split_whitespace().collect();
        let [name, n, raw, iso] = f[..] else {
            return Err(format!("bad golden row {line:?}"));
        };
        let v = c.get(name).map_err(|e| e.to_string())?;
        let n: usize = n.parse().map_err(|_| line.to_string())?;
        let s = Searcher::default();
        let got = (
            s.count_models(n, v, false).map_err(|e| e.to_string())?,
            s.count_models(n, v, true).map_err(|e| e.to_string())?,
        );
        ensure(got.0.to_string() == raw && got.1.to_string() == iso, || format!("{line}: got {got:?}"))?;
        rows += 1;
    }
    // Frozen oracle values for the full class.
    let i = c.get("I").unwrap();
    let naive = |n, iso| brute_force(&SearchProblem::members(n, i).up_to_iso(iso)).map(|m| m.len());
    ensure(naive(2, false) == Ok(3) && naive(2, true) == Ok(3), || "size 2".into())?;
    ensure(naive(3, false) == Ok(31) && naive(3, true) == Ok(17), || "size 3".into())?;
    ensure(rows >= 60, || format!("{rows} golden rows"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("identity classification", classification, Duration::from_secs(1)),
        ("two-element algebras", two_element_algebras, Duration::from_secs(1)),
        ("witness suite", witness_suite, Duration::from_secs(1)),
        ("equality theorems", equality_theorems, Duration::from_secs(10)),
        ("inclusion evidence", inclusion_evidence, Duration::from_secs(30)),
        ("lemma evidence", lemma_evidence, Duration::from_secs(60)),
        ("poset reproduction", poset_reproduction, Duration::from_secs(120)),
        ("oracle equivalence", oracle_equivalence, Duration::from_secs(30)),
        ("determinism", determinism, Duration::from_secs(120)),
        ("golden counts", golden_counts, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (k, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = result.and_then(|()| ensure(took <= *limit, || format!("took {took:.2?}, limit {limit:?}")));
        match result {
            Ok(()) => println!("criterion {:>2} pass  {name} ({took:.2?})", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
