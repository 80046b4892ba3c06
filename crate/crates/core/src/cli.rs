//! Command-line front end.
//!
//! Exit codes: `0` when every requested check passes, `1` when any check
//! fails (or its hypothesis is unmet), `2` on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{primitive_part, primitive_prime_divisors};
use crate::atlas::{out_order, simple_order, ClassicalType, Family};
use crate::design::{
    classify_design, desdes_identities, extension_uniqueness_audit_with, flag_transitive,
    largeness_check, pp3_sweep, tactical_params, triple_factorization, DesignFile,
    IncidenceStructure, Verdict,
};
use crate::diophantine::{known_solutions, scan, signprime_audit, Bounds, EquationFamily};
use crate::geometry::GeometryBundle;
use crate::permgroup::{self, PermGroup};
use crate::report::Report;
use crate::{Error, Result};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "FLAGTRANS_THREADS";

#[derive(Debug, Parser)]
#[command(name = "flagtrans", version, about = "Flag-transitive 2-(144,12,λ) designs and the arithmetic around them")]
struct Cli {
    /// Add wall time to the report (outside the deterministic body).
    #[arg(long, global = true)]
    timing: bool,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct one of the two designs and write its block list.
    BuildDesign {
        #[arg(long, value_enum, default_value = "lambda3")]
        variant: Variant,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output file; the design goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a design file against the PSL(3,3) actions.
    VerifyDesign {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "psl33")]
        group: GroupChoice,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "2design,flags")]
        checks: Vec<CheckName>,
        #[arg(long, value_enum, default_value = "text")]
        report: Format,
    },
    /// Primitive parts and Zsigmondy primes.
    AuditArith {
        #[command(subcommand)]
        op: ArithOp,
    },
    /// Bounded scans of the square equations F1..F8.
    AuditDiophantine {
        /// A single family; all eight when omitted.
        #[arg(long)]
        family: Option<EquationFamily>,
        #[arg(long, default_value_t = Bounds::default().q_max)]
        bound_q: u64,
        #[arg(long, default_value_t = Bounds::default().n_max)]
        bound_n: u32,
        #[arg(long, default_value_t = Bounds::default().f_max)]
        bound_f: u32,
    },
    /// Audit a built-in table.
    AuditTable {
        #[arg(value_enum)]
        table: TableName,
    },
    /// Group orders.
    Atlas {
        #[command(subcommand)]
        op: AtlasOp,
    },
}

#[derive(Debug, Subcommand)]
enum ArithOp {
    /// Φ*_E(Q), the primitive part of Q^E − 1.
    PrimitivePart { q: u64, e: u32 },
    /// Primitive prime divisors of P^M − 1.
    Zsigmondy { p: u64, m: u32 },
    /// A JSON list of cases, each `{"op": …, …, "expect": …}`.
    Batch { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum AtlasOp {
    /// Order and |Out| of a simple classical group (q₀ for PSU).
    Order { family: Family, n: u32, q: u64 },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Variant {
    Lambda3,
    Lambda6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GroupChoice {
    Psl33,
    #[value(name = "psl33-ext")]
    Psl33Ext,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckName {
    #[value(name = "2design")]
    TwoDesign,
    Flags,
    Tactical,
    Pp3,
    Desdes,
    Largeness,
    Triple,
    Uniqueness,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableName {
    Signprime,
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first), runs the command, prints its output
/// and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let inv = invoke(argv);
    let _ = std::io::stdout().lock().write_all(inv.stdout.as_bytes());
    let _ = std::io::stderr().lock().write_all(inv.stderr.as_bytes());
    inv.code
}

/// Like [`run`], but returns the output instead of printing it.
pub fn invoke<I, T>(argv: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Invocation { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Invocation { code: EXIT_PASS, stdout: text, stderr: String::new() }
            };
        }
    };
    let echo: Vec<String> = argv.iter().skip(1).map(|s| s.to_string_lossy().into_owned()).collect();
    match with_thread_cap(|| execute(cli, echo)) {
        Ok(Output { text, passed }) => Invocation {
            code: if passed { EXIT_PASS } else { EXIT_FAIL },
            stdout: text,
            stderr: String::new(),
        },
        Err(e) => Invocation { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn with_thread_cap<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    let cap = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok());
    match cap.filter(|&n| n > 0) {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        None => f(),
    }
}

struct Output {
    text: String,
    passed: bool,
}

fn render(mut report: Report, json: bool, start: Option<Instant>) -> Output {
    report.elapsed_ms = start.map(|t| t.elapsed().as_millis() as u64);
    let passed = report.passed();
    let text = if json { report.to_json() } else { report.to_text() };
    Output { text, passed }
}

fn execute(cli: Cli, echo: Vec<String>) -> Result<Output> {
    let start = cli.timing.then(Instant::now);
    let mut report = Report::new(echo);
    let json_flag = cli.json;
    let json = match cli.command {
        Command::BuildDesign { variant, format, out } => {
            let bundle = GeometryBundle::build()?;
            let d = match variant {
                Variant::Lambda3 => bundle.d(),
                Variant::Lambda6 => bundle.d_prime(),
            };
            let body = match format {
                Format::Json => {
                    let mut s = serde_json::to_string(&d.to_file()?)?;
                    s.push('\n');
                    s
                }
                Format::Text => d.to_text()?,
            };
            let Some(path) = out else {
                return Ok(Output { text: body, passed: true });
            };
            std::fs::write(&path, body)?;
            match classify_design(d) {
                Ok(p) => report.push("2design", Verdict::Pass, p),
                Err(diag) => report.push("2design", Verdict::Fail, diag),
            }
            report.push("written", Verdict::Pass, path.display().to_string());
            json_flag
        }
        Command::VerifyDesign { file, group, checks, report: fmt } => {
            let d = read_design(&file)?;
            verify(&mut report, &d, group, &checks)?;
            json_flag || fmt == Format::Json
        }
        Command::AuditArith { op } => {
            match op {
                ArithOp::PrimitivePart { q, e } => arith_case(&mut report, &Case::PrimitivePart { q, e, expect: None })?,
                ArithOp::Zsigmondy { p, m } => arith_case(&mut report, &Case::Zsigmondy { p, m, expect: None })?,
                ArithOp::Batch { file } => {
                    let cases: Vec<Case> = serde_json::from_str(&std::fs::read_to_string(file)?)?;
                    for c in &cases {
                        arith_case(&mut report, c)?;
                    }
                }
            }
            json_flag
        }
        Command::AuditDiophantine { family, bound_q, bound_n, bound_f } => {
            let bounds = Bounds { q_max: bound_q, f_max: bound_f, n_max: bound_n };
            let families = family.map_or(EquationFamily::ALL.to_vec(), |f| vec![f]);
            for f in families {
                let r = scan(f, &bounds);
                let ok = r.solutions == known_solutions(f, &bounds);
                report.push(f.to_string(), Verdict::from_bool(ok), r);
            }
            json_flag
        }
        Command::AuditTable { table: TableName::Signprime } => {
            for row in signprime_audit()? {
                report.push(row.x.clone(), row.verdict, row);
            }
            json_flag
        }
        Command::Atlas { op: AtlasOp::Order { family, n, q } } => {
            let t = ClassicalType::new(family, n, q)?;
            let phi = primitive_part(t.p(), t.ppd_exponent() * t.field_f())?.value;
            report.push(
                t.to_string(),
                Verdict::Pass,
                AtlasEntry {
                    order: simple_order(&t)?.to_string(),
                    out: out_order(&t)?,
                    admissible: t.admissible(),
                    e: t.ppd_exponent(),
                    primitive_part: phi.to_string(),
                },
            );
            json_flag
        }
    };
    Ok(render(report, json, start))
}

#[derive(Serialize)]
struct AtlasEntry {
    order: String,
    out: u64,
    admissible: bool,
    e: u32,
    primitive_part: String,
}

/// One `audit-arith` case; `expect` turns the computation into a check.
#[derive(Debug, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
enum Case {
    PrimitivePart {
        q: u64,
        e: u32,
        #[serde(default)]
        expect: Option<u64>,
    },
    Zsigmondy {
        p: u64,
        m: u32,
        #[serde(default)]
        expect: Option<Vec<u64>>,
    },
}

fn arith_case(report: &mut Report, c: &Case) -> Result<()> {
    match c {
        Case::PrimitivePart { q, e, expect } => {
            let r = primitive_part(*q, *e)?;
            let ok = expect.map_or(true, |x| r.value == BigUint::from(x));
            report.push(format!("primitive-part {q} {e}"), Verdict::from_bool(ok), r);
        }
        Case::Zsigmondy { p, m, expect } => {
            let primes = primitive_prime_divisors(*p, *m)?;
            let congruent = primes.iter().all(|u| (u % *m).is_one());
            let listed: Vec<String> = primes.iter().map(ToString::to_string).collect();
            let matches = expect.as_ref().map_or(true, |x| {
                x.iter().map(|&u| BigUint::from(u)).collect::<Vec<_>>() == primes.iter().cloned().collect::<Vec<_>>()
            });
            report.push(
                format!("zsigmondy {p} {m}"),
                Verdict::from_bool(congruent && matches),
                serde_json::json!({ "primes": listed, "congruent_to_1_mod_m": congruent }),
            );
        }
    }
    Ok(())
}

/// Reads a design in either the JSON or the plain-text format.
pub fn read_design(path: &Path) -> Result<IncidenceStructure> {
    let s = std::fs::read_to_string(path)?;
    if s.trim_start().starts_with('{') {
        IncidenceStructure::from_file(serde_json::from_str::<DesignFile>(&s)?)
    } else {
        IncidenceStructure::from_text(&s)
    }
}

fn verify(report: &mut Report, d: &IncidenceStructure, choice: GroupChoice, checks: &[CheckName]) -> Result<()> {
    let bundle = GeometryBundle::build()?;
    let group: &PermGroup = match choice {
        GroupChoice::Psl33 => &bundle.psl.g_perm,
        GroupChoice::Psl33Ext => &bundle.ext.a_perm,
    };
    if d.v() != group.degree() {
        return Err(Error::InvalidStructure(format!("design has {} points, the group acts on {}", d.v(), group.degree())));
    }
    let base = bundle.psl.base_point;
    let mut seen = Vec::new();
    for &c in checks {
        if seen.contains(&c) {
            continue;
        }
        seen.push(c);
        match c {
            CheckName::TwoDesign => match classify_design(d) {
                Ok(p) => report.push("2design", Verdict::Pass, p),
                Err(diag) => report.push("2design", Verdict::Fail, diag),
            },
            CheckName::Flags => match flag_transitive(group, d) {
                Ok(f) => report.push("flags", Verdict::from_bool(f.transitive), f),
                Err(Error::NotAutomorphism(i)) => report.push(
                    "flags",
                    Verdict::Fail,
                    serde_json::json!({ "block_set_not_preserved_by_generator": i }),
                ),
                Err(e) => return Err(e),
            },
            CheckName::Tactical => {
                let stab = permgroup::stabilizer(group, base)?;
                let through = d.blocks_through(base);
                let mut rows = Vec::new();
                let mut ok = true;
                for o in permgroup::orbits(stab.generators(), d.v()) {
                    if o == [base] {
                        continue;
                    }
                    let t = tactical_params(&o, &through);
                    ok &= t.is_ok();
                    rows.push(match t {
                        Ok(t) => serde_json::json!({ "orbit": o.len(), "params": t }),
                        Err(e) => serde_json::json!({ "orbit": o.len(), "not_tactical": e }),
                    });
                }
                report.push("tactical", Verdict::from_bool(ok), rows);
            }
            CheckName::Pp3 => {
                let sweep = pp3_sweep(group, d)?;
                let verdict = crate::report::overall(sweep.iter().map(|r| r.verdict));
                let mut pairs: Vec<(usize, usize)> = sweep.iter().flat_map(|r| r.pairs.iter().copied()).collect();
                pairs.sort_unstable();
                pairs.dedup();
                report.push("pp3", verdict, serde_json::json!({ "points": sweep.len(), "pairs": pairs }));
            }
            CheckName::Desdes => match classify_design(d) {
                Ok(p) => {
                    let r = desdes_identities(&p);
                    let v = crate::report::overall([
                        r.r_equals_lambda_k_plus_1,
                        r.b_equals_lambda_k_k_plus_1,
                        r.ratio_square_exceeds_k_square,
                    ]);
                    report.push("desdes", v, r);
                }
                Err(diag) => report.push("desdes", Verdict::HypothesisUnmet, diag),
            },
            CheckName::Largeness => {
                let stab = permgroup::stabilizer(group, base)?;
                let (g, gx) = (group.order() as u128, stab.order() as u128);
                let large = largeness_check(g, gx)?;
                report.push("largeness", Verdict::from_bool(large), serde_json::json!({ "order": g, "stabilizer": gx }));
            }
            CheckName::Triple => {
                let (g, p) = match choice {
                    GroupChoice::Psl33 => (&bundle.psl.g, permgroup::normalizer(&bundle.psl.g, &bundle.psl.p)?),
                    GroupChoice::Psl33Ext => (&bundle.ext.a, bundle.ext.n_ap.clone()),
                };
                let t = triple_factorization(g, &p, &bundle.psl.l)?;
                report.push("triple", Verdict::from_bool(t.covers && !t.degenerate), t);
            }
            CheckName::Uniqueness => {
                let u = extension_uniqueness_audit_with(&bundle, d)?;
                report.push("uniqueness", Verdict::from_bool(u.passed), u.checks);
            }
        }
    }
    Ok(())
}
