//! The `zlab` command line: parse, check, search, classify, build posets and
//! reproduce the full claim ledger.
//!
//! Exit codes: 0 on success or when the answer is positive, 1 on a definite
//! negative answer, 2 on usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use zlab::algebra::{in_variety, is_izroupoid, satisfies, Counterexample, FiniteGroupoid, VarietySpec};
use zlab::assoc::{classify_identities, generate_associative_identities, generate_associative_terms, IdentityClass, ASSOC_VARS};
use zlab::atlas::claims::{ClaimLedger, ClaimResult, ClaimStatus};
use zlab::atlas::poset::{parse_nodes, PosetReport, Relation};
use zlab::atlas::{build_poset, verify_claims, VarietyCatalog};
use zlab::parse::parse_identity;
use zlab::search::{SearchConfig, SearchProblem, Searcher, DEFAULT_MAX_SIZE};
use zlab::term::Identity;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable overriding the largest table size searched.
pub const MAX_SIZE_ENV: &str = "ZLAB_MAX_SIZE";

#[derive(Debug, Parser)]
#[command(name = "zlab", version, about = "Workbench for implication zroupoids and identities of associative type")]
struct Cli {
    /// Worker threads for search-backed subcommands.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check identities in a Cayley table.
    Check {
        #[arg(long)]
        algebra: PathBuf,
        /// An identity, or @FILE with one identity per line.
        #[arg(long)]
        identity: String,
    },
    /// Test membership of a Cayley table in a named variety.
    Member {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        variety: String,
    },
    /// Enumerate I-zroupoids of one size under constraints.
    Search(SearchArgs),
    /// Count the members of a variety of one size.
    Count {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        variety: String,
        #[arg(long)]
        up_to_iso: bool,
    },
    /// Classify the 66 identities of associative type.
    Classify {
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Compute the inclusion poset of named varieties.
    Poset {
        /// Comma-separated variety names; defaults to the twelve main nodes.
        #[arg(long, value_delimiter = ',')]
        nodes: Option<Vec<String>>,
        #[arg(long, default_value_t = 3)]
        budget: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Verify every claim and both posets, writing one report.
    Reproduce {
        #[arg(long, default_value_t = 3)]
        budget: usize,
        #[arg(long, default_value_t = 4)]
        deep_budget: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    size: usize,
    /// Identity every model must satisfy (repeatable).
    #[arg(long)]
    satisfy: Vec<String>,
    /// Identity every model must fail (repeatable).
    #[arg(long)]
    fail: Vec<String>,
    /// Restrict to a named variety.
    #[arg(long)]
    variety: Option<String>,
    #[arg(long)]
    up_to_iso: bool,
    /// Stop after this many models (default 1 unless --all).
    #[arg(long, conflicts_with = "all")]
    limit: Option<usize>,
    /// Return every model.
    #[arg(long)]
    all: bool,
}

/// An error reported on stderr with exit code 2.
#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> InputError {
        InputError(e.to_string())
    }
}

type CmdResult = Result<i32, InputError>;

/// Runs the command line `args` (program name first), writing the human
/// summary to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn max_size() -> Result<usize, InputError> {
    match std::env::var(MAX_SIZE_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| InputError(format!("{MAX_SIZE_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_SIZE),
    }
}

fn searcher(jobs: usize) -> Result<Searcher, InputError> {
    Ok(Searcher::new(SearchConfig {
        max_size: max_size()?,
        jobs: jobs.max(1),
    }))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CmdResult {
    let catalog = VarietyCatalog::builtin();
    match cli.command {
        Command::Check { algebra, identity } => check(&algebra, &identity, out),
        Command::Member { algebra, variety } => member(&algebra, catalog.get(&variety)?, out),
        Command::Search(args) => search(&args, &catalog, &searcher(cli.jobs)?, out),
        Command::Count {
            size,
            variety,
            up_to_iso,
        } => {
            let v = catalog.get(&variety)?;
            let n = searcher(cli.jobs)?.count_models(size, v, up_to_iso)?;
            let kind = if up_to_iso { "up to isomorphism" } else { "labelled" };
            writeln!(out, "{n} members of {} of size {size} ({kind})", v.name)?;
            Ok(EXIT_OK)
        }
        Command::Classify { report } => classify(report.as_deref(), out),
        Command::Poset { nodes, budget, report } => {
            let nodes = match nodes {
                Some(list) => parse_nodes(&list.join(","), &catalog)?,
                None => VarietyCatalog::main_poset_nodes().into_iter().map(String::from).collect(),
            };
            let names: Vec<&str> = nodes.iter().map(String::as_str).collect();
            let r = build_poset(&names, budget, &catalog, &searcher(cli.jobs)?)?;
            write_poset(&r, out)?;
            if let Some(path) = report {
                write_json(&path, &r)?;
            }
            Ok(if r.discrepancies.is_empty() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Reproduce {
            budget,
            deep_budget,
            report,
        } => {
            let start = Instant::now();
            let r = reproduce(budget, deep_budget, &catalog, &searcher(cli.jobs)?)?;
            write_reproduction(&r, out)?;
            writeln!(out, "elapsed: {:.2?}", start.elapsed())?;
            if let Some(path) = report {
                write_json(&path, &r)?;
            }
            Ok(if r.overall_pass { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

fn read_algebra(path: &Path) -> Result<FiniteGroupoid, InputError> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    text.parse()
        .map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// Identities from an inline string, or one per line of `@FILE`.
fn read_identities(arg: &str) -> Result<Vec<Identity>, InputError> {
    let Some(path) = arg.strip_prefix('@') else {
        return Ok(vec![parse_identity(arg)?]);
    };
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{path}: {e}")))?;
    let ids = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| parse_identity(l).map_err(|e| InputError(format!("{path}:{}: {e}", i + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    if ids.is_empty() {
        return Err(InputError(format!("{path}: no identities")));
    }
    Ok(ids)
}

fn describe_failure(c: &Counterexample) -> String {
    let at = if c.assignment.to_string().is_empty() {
        String::new()
    } else {
        format!(" at {}", c.assignment)
    };
    format!("{} fails{at}: lhs = {}, rhs = {}", c.identity, c.lhs, c.rhs)
}

fn check(algebra: &Path, identity: &str, out: &mut dyn Write) -> CmdResult {
    let g = read_algebra(algebra)?;
    let ids = read_identities(identity)?;
    let mut code = EXIT_OK;
    for id in &ids {
        match satisfies(&g, id).counterexample {
            None => writeln!(out, "{id} holds")?,
            Some(c) => {
                writeln!(out, "{}", describe_failure(&c))?;
                code = EXIT_NEGATIVE;
            }
        }
    }
    Ok(code)
}

fn member(algebra: &Path, v: &VarietySpec, out: &mut dyn Write) -> CmdResult {
    let g = read_algebra(algebra)?;
    let izr = is_izroupoid(&g);
    if !izr.holds {
        writeln!(out, "not an I-zroupoid")?;
    }
    match in_variety(&g, v).counterexample {
        None => {
            writeln!(out, "in {}", v.name)?;
            Ok(EXIT_OK)
        }
        Some(c) => {
            writeln!(out, "not in {}: {}", v.name, describe_failure(&c))?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn search(args: &SearchArgs, catalog: &VarietyCatalog, searcher: &Searcher, out: &mut dyn Write) -> CmdResult {
    let mut p = match &args.variety {
        Some(name) => SearchProblem::members(args.size, catalog.get(name)?),
        None => SearchProblem::izroupoids(args.size),
    };
    for s in &args.satisfy {
        for id in read_identities(s)? {
            p = p.satisfying(id);
        }
    }
    for f in &args.fail {
        for id in read_identities(f)? {
            p = p.failing(id);
        }
    }
    let limit = if args.all { None } else { Some(args.limit.unwrap_or(1)) };
    let outcome = searcher.enumerate_models(&p.up_to_iso(args.up_to_iso).limit(limit))?;
    for (k, m) in outcome.models.iter().enumerate() {
        writeln!(out, "# model {}", k + 1)?;
        write!(out, "{}", m.to_table_string())?;
    }
    writeln!(
        out,
        "# {} model(s), {}",
        outcome.models.len(),
        if outcome.exhausted { "search exhausted" } else { "stopped at limit" }
    )?;
    Ok(if outcome.models.is_empty() { EXIT_NEGATIVE } else { EXIT_OK })
}

#[derive(Debug, Serialize)]
struct ClassificationReport {
    version: &'static str,
    terms: Vec<String>,
    identities: usize,
    classes: Vec<IdentityClass>,
}

fn classification() -> ClassificationReport {
    let terms = generate_associative_terms(&ASSOC_VARS).expect("three distinct variables");
    let ids = generate_associative_identities();
    let classes = classify_identities(&ids).expect("identities over x, y, z");
    ClassificationReport {
        version: zlab::VERSION,
        terms: terms.iter().map(|t| t.render()).collect(),
        identities: ids.len(),
        classes,
    }
}

fn classify(report: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let r = classification();
    writeln!(
        out,
        "{} terms, {} identities, {} classes",
        r.terms.len(),
        r.identities,
        r.classes.len()
    )?;
    for c in &r.classes {
        let label = c.sigma_label.map(|l| l.to_string()).unwrap_or_else(|| "-".into());
        writeln!(out, "{label:>4}  {:<34} {} members", c.canonical.render_compact(), c.members.len())?;
    }
    if let Some(path) = report {
        write_json(path, &r)?;
    }
    Ok(EXIT_OK)
}

fn relation_text(r: &Relation) -> String {
    match r {
        Relation::Equal => "equal".into(),
        Relation::Consistent { up_to, source } => format!("contained up to size {up_to} ({source})"),
        Relation::Witnessed { witness } => format!("not contained, witness {}", witness.label()),
        Relation::Unknown { up_to } => format!("no separating model up to size {up_to}"),
    }
}

fn write_poset(r: &PosetReport, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "nodes: {} (budget {})", r.nodes.join(", "), r.budget)?;
    write!(out, "{}", r.matrix_text())?;
    writeln!(out, "hasse edges:")?;
    let mut shown: Vec<&FiniteGroupoid> = Vec::new();
    for e in &r.hasse_edges {
        writeln!(out, "  {} < {}  strict by {}", e.lower, e.upper, e.strictness.label())?;
        if !shown.contains(&e.strictness.table()) {
            shown.push(e.strictness.table());
        }
    }
    for (title, notes) in [
        ("discrepancies", &r.discrepancies),
        ("unconfirmed", &r.unconfirmed),
        ("discovered", &r.discovered),
    ] {
        writeln!(out, "{title}: {}", notes.len())?;
        for n in notes {
            writeln!(out, "  {} in {}: {}", n.sub, n.sup, relation_text(&n.relation))?;
        }
    }
    writeln!(out, "strictness witnesses:")?;
    for t in shown {
        writeln!(out, "# {}", t.compact())?;
        write!(out, "{}", t.to_table_string())?;
    }
    Ok(())
}

/// The machine report of `reproduce`. Wall-clock times are left out so the
/// document is byte-identical between runs.
#[derive(Debug, Serialize)]
pub struct ReproductionReport {
    pub version: &'static str,
    pub budget: usize,
    pub deep_budget: usize,
    pub overall_pass: bool,
    pub claims_passed: usize,
    pub claims_failed: usize,
    pub claims_insufficient: usize,
    pub entries: Vec<ClaimResult>,
    pub main_poset: PosetReport,
    pub symmetric_poset: PosetReport,
}

/// Verifies the claim ledger and builds both posets.
pub fn reproduce(
    budget: usize,
    deep_budget: usize,
    catalog: &VarietyCatalog,
    searcher: &Searcher,
) -> Result<ReproductionReport, zlab::atlas::AtlasError> {
    let ledger: ClaimLedger = verify_claims(budget, deep_budget, catalog, searcher)?;
    let main_poset = build_poset(&VarietyCatalog::main_poset_nodes(), budget, catalog, searcher)?;
    let symmetric_poset = build_poset(&VarietyCatalog::symmetric_poset_nodes(), budget, catalog, searcher)?;
    let posets_ok = [&main_poset, &symmetric_poset]
        .iter()
        .all(|p| p.discrepancies.is_empty() && p.unconfirmed.is_empty());
    Ok(ReproductionReport {
        version: zlab::VERSION,
        budget,
        deep_budget,
        overall_pass: ledger.all_pass() && posets_ok,
        claims_passed: ledger.count(ClaimStatus::Pass),
        claims_failed: ledger.count(ClaimStatus::Fail),
        claims_insufficient: ledger.count(ClaimStatus::InsufficientBudget),
        entries: ledger.results,
        main_poset,
        symmetric_poset,
    })
}

fn write_reproduction(r: &ReproductionReport, out: &mut dyn Write) -> std::io::Result<()> {
    for e in &r.entries {
        let status = match e.status {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::InsufficientBudget => "budget",
        };
        writeln!(
            out,
            "{status:<6} {:<28} {:<34} {:>9.2?}",
            e.claim.id, e.claim.source, e.elapsed
        )?;
        if e.status == ClaimStatus::Fail {
            if let Some(t) = &e.evidence.table {
                write!(out, "{}", t.to_table_string())?;
            }
            if let Some(c) = &e.evidence.failure {
                writeln!(out, "  {}", describe_failure(c))?;
            }
        }
    }
    for (name, p) in [("main", &r.main_poset), ("symmetric", &r.symmetric_poset)] {
        let edges: Vec<String> = p.hasse_edges.iter().map(|e| format!("{}<{}", e.lower, e.upper)).collect();
        writeln!(out, "{name} poset: {}", edges.join(" "))?;
        writeln!(
            out,
            "  discrepancies {}, unconfirmed {}, discovered {}",
            p.discrepancies.len(),
            p.unconfirmed.len(),
            p.discovered.len()
        )?;
    }
    writeln!(
        out,
        "claims: {} passed, {} failed, {} insufficient budget",
        r.claims_passed, r.claims_failed, r.claims_insufficient
    )?;
    writeln!(out, "overall: {}", if r.overall_pass { "pass" } else { "FAIL" })
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), InputError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}
