//! `aisle`: command-line front end for the t-structure engine.
//!
//! One session file, one command per invocation. Exit codes: 0 success,
//! 1 false verdict, 2 user error, 3 resource exhaustion, 4 internal error.

mod session;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use aisle_core::complex::{cohomology, free_resolution, soft_triangle, Complex};
use aisle_core::error::EngineError;
use aisle_core::groebner::{
    groebner_basis, ideal_intersect, ideal_member, ideal_quotient, normal_form, radical_member,
    saturate, set_max_pairs, Ideal,
};
use aisle_core::koszul::{depth_via_koszul, ext_modules, inf_rhom, koszul_complex};
use aisle_core::module::{torsion_submodule, PresentedModule};
use aisle_core::poly::parse_polynomial;
use aisle_core::spectrum::{support, SpFiltration};
use aisle_core::tstruct::{
    aisle_member, bounded_below_check, coaisle_member, coaisle_member_gamma, compact_generators,
    synthesize_filtration, MembershipReport,
};
use aisle_core::verify::{run_suite, SUITES};

use session::{parse_session, Decl, Session};

const SCHEMA: &str = "1";
const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "aisle", version, about = "exact t-structure engine")]
struct Cli {
    /// Session file (defaults to stdin)
    #[arg(long, global = true)]
    session: Option<String>,

    /// Emit the machine-readable JSON report
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized verify suites
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Case count for randomized verify suites
    #[arg(long, global = true)]
    cases: Option<usize>,

    /// Degree window `a..b` for windowed commands
    #[arg(long, global = true)]
    window: Option<String>,

    /// S-pair budget for Groebner computations
    #[arg(long = "max-pairs", global = true)]
    max_pairs: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Groebner basis of a declared ideal
    Gb { ideal: String },
    /// Normal form of a polynomial against an ideal
    Nf { ideal: String, poly: String },
    /// Ideal membership, or t-structure membership with --side
    Member {
        ideal: Option<String>,
        poly: Option<String>,
        #[arg(long)]
        side: Option<String>,
        #[arg(long)]
        filtration: Option<String>,
        #[arg(long)]
        complex: Option<String>,
    },
    /// Radical membership via the Rabinowitsch trick
    RadicalMember { ideal: String, poly: String },
    /// Intersection of two ideals
    Intersect { a: String, b: String },
    /// Ideal quotient (a : b)
    Quotient { a: String, b: String },
    /// Saturation (a : b^infinity) with the stabilizing exponent
    Saturate { a: String, b: String },
    /// Free resolution of a module
    Resolve {
        module: String,
        #[arg(long, default_value_t = 4)]
        length: u32,
    },
    /// Cohomology of a complex, one degree or the whole window
    Cohomology {
        complex: String,
        #[arg(long)]
        n: Option<i64>,
    },
    /// Koszul complex of an ideal's generators
    Koszul { ideal: String },
    /// Ext^n(M, X) over a degree window
    Ext { module: String, complex: String },
    /// Koszul depth and inf RHom legs of an ideal against a complex
    Depth { ideal: String, complex: String },
    /// I-torsion submodule with its stabilizing exponent
    Torsion { ideal: String, module: String },
    /// Support of a module as a closed set
    Support { module: String },
    /// Compact generator specs of a filtration over a window
    Generators {
        #[arg(long)]
        filtration: String,
    },
    /// Synthesize an sp-filtration from coaisle evidence
    Synthesize {
        #[arg(long)]
        evidence: String,
    },
    /// Boundedness check for a filtration
    BoundedCheck {
        #[arg(long)]
        filtration: String,
    },
    /// Standard soft-truncation triangle at degree n
    Truncate {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        complex: String,
    },
    /// Run a randomized property suite (or `all`)
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

struct Report {
    body: Value,
    verdict: Option<bool>,
    human: Vec<String>,
}

enum CliError {
    User(String),
    Engine(EngineError),
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        CliError::Engine(e)
    }
}

impl From<String> for CliError {
    fn from(m: String) -> Self {
        CliError::User(m)
    }
}

type CResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var("AISLE_MAX_PAIRS") {
        if let Ok(n) = v.parse::<usize>() {
            set_max_pairs(n);
        }
    }
    if let Some(n) = cli.max_pairs {
        set_max_pairs(n);
    }
    let started = std::time::Instant::now();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.body).expect("report serialization")
                );
            } else {
                for line in &report.human {
                    println!("{}", line);
                }
                println!("elapsed: {:.1} ms", started.elapsed().as_secs_f64() * 1e3);
            }
            if report.verdict == Some(false) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            let (code, kind, message) = match &e {
                CliError::User(m) => (2u8, "user", m.clone()),
                CliError::Engine(EngineError::ResourceExhausted(n)) => (
                    3,
                    "resource",
                    format!("S-pair budget of {} exhausted", n),
                ),
                CliError::Engine(EngineError::Internal(m)) => {
                    (4, "internal", format!("internal invariant violation: {}", m))
                }
                CliError::Engine(err) => (2, "engine", err.to_string()),
            };
            if cli.json {
                let obj = json!({
                    "schema": SCHEMA,
                    "error": { "kind": kind, "message": message },
                });
                println!("{}", serde_json::to_string_pretty(&obj).unwrap());
            } else {
                eprintln!("error: {}", message);
            }
            ExitCode::from(code)
        }
    }
}

fn load_session(cli: &Cli) -> CResult<Session> {
    let text = match &cli.session {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::User(format!("cannot read {}: {}", path, e)))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::User(format!("cannot read stdin: {}", e)))?;
            buf
        }
    };
    parse_session(&text).map_err(|e| CliError::User(format!("parse error at {}", e)))
}

fn get_ideal(s: &Session, name: &str) -> CResult<Ideal> {
    match s.get(name)? {
        Decl::IdealDecl(i) => Ok(i.clone()),
        Decl::PrimeDecl(p) => Ok(p.ideal.clone()),
        _ => Err(CliError::User(format!("`{}` is not an ideal", name))),
    }
}

fn get_module(s: &Session, name: &str) -> CResult<PresentedModule> {
    match s.get(name)? {
        Decl::ModuleDecl(m) => Ok(m.clone()),
        _ => Err(CliError::User(format!("`{}` is not a module", name))),
    }
}

fn get_complex(s: &Session, name: &str) -> CResult<Complex> {
    match s.get(name)? {
        Decl::ComplexDecl(x) => Ok(x.clone()),
        Decl::ModuleDecl(m) => Ok(Complex::stalk(m, 0)),
        _ => Err(CliError::User(format!("`{}` is not a complex", name))),
    }
}

fn get_filtration(s: &Session, name: &str) -> CResult<SpFiltration> {
    match s.get(name)? {
        Decl::FiltrationDecl(phi) => Ok(phi.clone()),
        _ => Err(CliError::User(format!("`{}` is not a filtration", name))),
    }
}

fn parse_window(cli: &Cli, default: Option<(i64, i64)>) -> CResult<(i64, i64)> {
    match &cli.window {
        Some(text) => {
            let parts: Vec<&str> = text.split("..").collect();
            let parse = |t: &str| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| CliError::User(format!("bad window `{}`", text)))
            };
            if parts.len() != 2 {
                return Err(CliError::User(format!("bad window `{}`", text)));
            }
            Ok((parse(parts[0])?, parse(parts[1])?))
        }
        None => default.ok_or_else(|| CliError::User("this command needs --window a..b".into())),
    }
}

fn module_json(m: &PresentedModule) -> Value {
    json!({
        "rank": m.rank,
        "relations": m
            .relations
            .iter()
            .map(|col| col.iter().map(|p| p.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

fn module_human(m: &PresentedModule) -> String {
    if m.relations.is_empty() {
        format!("free of rank {}", m.rank)
    } else {
        format!(
            "rank {} with relations {}",
            m.rank,
            m.relations
                .iter()
                .map(|col| format!(
                    "({})",
                    col.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
                ))
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

fn membership_json(cmd: &str, rep: &MembershipReport) -> Value {
    json!({
        "schema": SCHEMA,
        "command": cmd,
        "engine": ENGINE_VERSION,
        "verdict": rep.verdict,
        "side": match rep.side {
            aisle_core::tstruct::Side::Aisle => "aisle",
            aisle_core::tstruct::Side::Coaisle => "coaisle",
        },
        "witnesses": rep
            .witnesses
            .iter()
            .map(|w| json!({ "degree": w.degree, "description": w.description }))
            .collect::<Vec<_>>(),
        "windows": [rep.window.0, rep.window.1],
    })
}

fn membership_human(rep: &MembershipReport) -> Vec<String> {
    let mut out = vec![format!(
        "verdict: {} (window {}..{})",
        rep.verdict, rep.window.0, rep.window.1
    )];
    for w in &rep.witnesses {
        out.push(format!("  witness at degree {}: {}", w.degree, w.description));
    }
    out
}

fn run(cli: &Cli) -> CResult<Report> {
    match &cli.cmd {
        Cmd::Gb { ideal } => {
            let s = load_session(cli)?;
            let i = get_ideal(&s, ideal)?;
            let gb = groebner_basis(&i)?;
            let basis: Vec<String> = gb.basis.iter().map(|p| p.to_string()).collect();
            let order = format!("{:?}", s.ring.order);
            let mut human = vec![format!("order: {}", order)];
            human.extend(basis.iter().cloned());
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("gb {}", ideal),
                    "engine": ENGINE_VERSION,
                    "order": order,
                    "basis": basis,
                }),
                verdict: None,
                human,
            })
        }
        Cmd::Nf { ideal, poly } => {
            let s = load_session(cli)?;
            let i = get_ideal(&s, ideal)?;
            let f = parse_polynomial(&s.ring, poly)?;
            let nf = normal_form(&f, &groebner_basis(&i)?)?;
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("nf {} {}", ideal, poly),
                    "engine": ENGINE_VERSION,
                    "normal_form": nf.to_string(),
                }),
                verdict: None,
                human: vec![nf.to_string()],
            })
        }
        Cmd::Member {
            ideal,
            poly,
            side,
            filtration,
            complex,
        } => {
            let s = load_session(cli)?;
            if let Some(side) = side {
                let phi = get_filtration(
                    &s,
                    filtration
                        .as_deref()
                        .ok_or_else(|| CliError::User("--side needs --filtration".into()))?,
                )?;
                let x = get_complex(
                    &s,
                    complex
                        .as_deref()
                        .ok_or_else(|| CliError::User("--side needs --complex".into()))?,
                )?;
                let rep = match side.as_str() {
                    "aisle" => aisle_member(&phi, &x)?,
                    "coaisle" => coaisle_member(&phi, &x)?,
                    "coaisle-gamma" => coaisle_member_gamma(&phi, &x)?,
                    other => {
                        return Err(CliError::User(format!(
                            "unknown side `{}`: expected aisle, coaisle or coaisle-gamma",
                            other
                        )))
                    }
                };
                let cmd = format!("member --side {}", side);
                Ok(Report {
                    verdict: Some(rep.verdict),
                    human: membership_human(&rep),
                    body: membership_json(&cmd, &rep),
                })
            } else {
                let iname = ideal
                    .as_deref()
                    .ok_or_else(|| CliError::User("member needs an ideal and a polynomial".into()))?;
                let ptext = poly
                    .as_deref()
                    .ok_or_else(|| CliError::User("member needs a polynomial".into()))?;
                let i = get_ideal(&s, iname)?;
                let f = parse_polynomial(&s.ring, ptext)?;
                let verdict = ideal_member(&f, &i)?;
                Ok(Report {
                    body: json!({
                        "schema": SCHEMA,
                        "command": format!("member {} {}", iname, ptext),
                        "engine": ENGINE_VERSION,
                        "verdict": verdict,
                    }),
                    verdict: Some(verdict),
                    human: vec![format!("verdict: {}", verdict)],
                })
            }
        }
        Cmd::RadicalMember { ideal, poly } => {
            let s = load_session(cli)?;
            let i = get_ideal(&s, ideal)?;
            let f = parse_polynomial(&s.ring, poly)?;
            let verdict = radical_member(&f, &i)?;
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("radical-member {} {}", ideal, poly),
                    "engine": ENGINE_VERSION,
                    "verdict": verdict,
                }),
                verdict: Some(verdict),
                human: vec![format!("verdict: {}", verdict)],
            })
        }
        Cmd::Intersect { a, b } | Cmd::Quotient { a, b } | Cmd::Saturate { a, b } => {
            let s = load_session(cli)?;
            let ia = get_ideal(&s, a)?;
            let ib = get_ideal(&s, b)?;
            let (name, result, exponent) = match &cli.cmd {
                Cmd::Intersect { .. } => ("intersect", ideal_intersect(&ia, &ib)?, None),
                Cmd::Quotient { .. } => ("quotient", ideal_quotient(&ia, &ib)?, None),
                _ => {
                    let (sat, e) = saturate(&ia, &ib)?;
                    ("saturate", sat, Some(e))
                }
            };
            let gens: Vec<String> = groebner_basis(&result)?
                .basis
                .iter()
                .map(|p| p.to_string())
                .collect();
            let mut human = vec![format!("({})", gens.join(", "))];
            if let Some(e) = exponent {
                human.push(format!("stabilized at exponent {}", e));
            }
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("{} {} {}", name, a, b),
                    "engine": ENGINE_VERSION,
                    "generators": gens,
                    "exponent": exponent,
                }),
                verdict: None,
                human,
            })
        }
        Cmd::Resolve { module, length } => {
            let s = load_session(cli)?;
            let m = get_module(&s, module)?;
            let res = free_resolution(&m, *length)?;
            let ranks: Vec<(i64, usize)> = (res.complex.lo..=res.complex.hi)
                .map(|n| (n, res.complex.object(n).rank))
                .collect();
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("resolve {} --length {}", module, length),
                    "engine": ENGINE_VERSION,
                    "ranks": ranks,
                    "complete": res.complete,
                }),
                verdict: None,
                human: vec![
                    format!(
                        "ranks: {}",
                        ranks
                            .iter()
                            .map(|(n, r)| format!("{}:{}", n, r))
                            .collect::<Vec<_>>()
                            .join(" ")
                    ),
                    format!("complete: {}", res.complete),
                ],
            })
        }
        Cmd::Cohomology { complex, n } => {
            let s = load_session(cli)?;
            let x = get_complex(&s, complex)?;
            let degrees: Vec<i64> = match n {
                Some(k) => vec![*k],
                None => (x.lo..=x.hi).collect(),
            };
            let mut entries = Vec::new();
            let mut human = Vec::new();
            for k in degrees {
                let h = cohomology(&x, k)?.module;
                human.push(format!("H^{}: {}", k, module_human(&h)));
                entries.push(json!({ "degree": k, "module": module_json(&h) }));
            }
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("cohomology {}", complex),
                    "engine": ENGINE_VERSION,
                    "cohomology": entries,
                }),
                verdict: None,
                human,
            })
        }
        Cmd::Koszul { ideal } => {
            let s = load_session(cli)?;
            let i = get_ideal(&s, ideal)?;
            let k = koszul_complex(&i.gens)?;
            let ranks: Vec<(i64, usize)> = (k.underlying.lo..=k.underlying.hi)
                .map(|n| (n, k.underlying.object(n).rank))
                .collect();
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("koszul {}", ideal),
                    "engine": ENGINE_VERSION,
                    "ranks": ranks,
                }),
                verdict: None,
                human: vec![format!(
                    "ranks: {}",
                    ranks
                        .iter()
                        .map(|(n, r)| format!("{}:{}", n, r))
                        .collect::<Vec<_>>()
                        .join(" ")
                )],
            })
        }
        Cmd::Ext { module, complex } => {
            let s = load_session(cli)?;
            let m = get_module(&s, module)?;
            let x = get_complex(&s, complex)?;
            let (a, b) = parse_window(cli, Some((0, x.hi - x.lo + s.ring.vars.len() as i64)))?;
            let ext = ext_modules(&m, &x, a, b)?;
            let mut entries = Vec::new();
            let mut human = Vec::new();
            for (k, h) in &ext.modules {
                human.push(format!("Ext^{}: {}", k, module_human(h)));
                entries.push(json!({ "degree": k, "module": module_json(h) }));
            }
            human.push(format!(
                "resolution length {} (complete: {})",
                ext.resolution_length, ext.resolution_complete
            ));
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("ext {} {}", module, complex),
                    "engine": ENGINE_VERSION,
                    "windows": [a, b],
                    "ext": entries,
                    "resolution_length": ext.resolution_length,
                    "resolution_complete": ext.resolution_complete,
                }),
                verdict: None,
                human,
            })
        }
        Cmd::Depth { ideal, complex } => {
            let s = load_session(cli)?;
            let i = get_ideal(&s, ideal)?;
            let x = get_complex(&s, complex)?;
            let koszul_leg = depth_via_koszul(&i, &x)?;
            let ext_leg = inf_rhom(&i, &x)?;
            let show = |v: &Option<i64>| match v {
                Some(n) => n.to_string(),
                None => "infinity".to_string(),
            };
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("depth {} {}", ideal, complex),
                    "engine": ENGINE_VERSION,
                    "koszul_depth": koszul_leg.value,
                    "inf_rhom": ext_leg.value,
                    "witnesses": [koszul_leg.witness, ext_leg.witness],
                }),
                verdict: None,
                human: vec![
                    format!("koszul depth: {}", show(&koszul_leg.value)),
                    format!("inf RHom: {}", show(&ext_leg.value)),
                ],
            })
        }
        Cmd::Torsion { ideal, module } => {
            let s = load_session(cli)?;
            let i = get_ideal(&s, ideal)?;
            let m = get_module(&s, module)?;
            let t = torsion_submodule(&i, &m)?;
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("torsion {} {}", ideal, module),
                    "engine": ENGINE_VERSION,
                    "module": module_json(&t.submodule.module),
                    "exponent": t.exponent,
                }),
                verdict: None,
                human: vec![
                    format!("torsion submodule: {}", module_human(&t.submodule.module)),
                    format!("stabilized at exponent {}", t.exponent),
                ],
            })
        }
        Cmd::Support { module } => {
            let s = load_session(cli)?;
            let m = get_module(&s, module)?;
            let supp = support(&m)?;
            let gens: Vec<String> = supp.defining.gens.iter().map(|p| p.to_string()).collect();
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("support {}", module),
                    "engine": ENGINE_VERSION,
                    "defining_ideal": gens,
                }),
                verdict: None,
                human: vec![format!("V({})", gens.join(", "))],
            })
        }
        Cmd::Generators { filtration } => {
            let s = load_session(cli)?;
            let phi = get_filtration(&s, filtration)?;
            let (a, b) = parse_window(cli, Some((phi.lo, phi.hi)))?;
            let gens = compact_generators(&phi, a, b)?;
            let entries: Vec<Value> = gens
                .iter()
                .map(|g| {
                    json!({
                        "ideal": g.ideal.gens.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                        "shift": g.shift,
                    })
                })
                .collect();
            let human: Vec<String> = gens
                .iter()
                .map(|g| {
                    format!(
                        "K({})[{}]",
                        g.ideal.gens.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "),
                        -g.shift
                    )
                })
                .collect();
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("generators --filtration {}", filtration),
                    "engine": ENGINE_VERSION,
                    "windows": [a, b],
                    "generators": entries,
                }),
                verdict: None,
                human,
            })
        }
        Cmd::Synthesize { evidence } => {
            let s = load_session(cli)?;
            let ev = match s.get(evidence)? {
                Decl::EvidenceDecl(e) => e.clone(),
                _ => return Err(CliError::User(format!("`{}` is not evidence", evidence))),
            };
            let (a, b) = parse_window(cli, None)?;
            let phi = synthesize_filtration(&ev, a, b)?;
            let step_json = |v: &aisle_core::spectrum::SpcSet| -> Value {
                Value::Array(
                    v.components
                        .iter()
                        .map(|c| {
                            Value::Array(
                                c.defining
                                    .gens
                                    .iter()
                                    .map(|p| Value::String(p.to_string()))
                                    .collect(),
                            )
                        })
                        .collect(),
                )
            };
            let mut human = Vec::new();
            let show = |v: &aisle_core::spectrum::SpcSet| -> String {
                if v.is_empty_set() {
                    "empty".to_string()
                } else {
                    v.components
                        .iter()
                        .map(|c| {
                            format!(
                                "V({})",
                                c.defining
                                    .gens
                                    .iter()
                                    .map(|p| p.to_string())
                                    .collect::<Vec<_>>()
                                    .join(", ")
                            )
                        })
                        .collect::<Vec<_>>()
                        .join(" + ")
                }
            };
            human.push(format!("below: {}", show(&phi.below_lo)));
            for n in phi.lo..=phi.hi {
                human.push(format!("{}: {}", n, show(phi.at(n))));
            }
            human.push(format!("above: {}", show(&phi.above_hi)));
            human.push("note: relative to the declared prime poset only".to_string());
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("synthesize --evidence {}", evidence),
                    "engine": ENGINE_VERSION,
                    "windows": [a, b],
                    "below": step_json(&phi.below_lo),
                    "steps": (phi.lo..=phi.hi).map(|n| step_json(phi.at(n))).collect::<Vec<_>>(),
                    "above": step_json(&phi.above_hi),
                    "relative_to_declared_poset": true,
                }),
                verdict: None,
                human,
            })
        }
        Cmd::BoundedCheck { filtration } => {
            let s = load_session(cli)?;
            let phi = get_filtration(&s, filtration)?;
            let rep = bounded_below_check(&phi)?;
            let verdict = rep.m.is_some();
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("bounded-check --filtration {}", filtration),
                    "engine": ENGINE_VERSION,
                    "verdict": verdict,
                    "m": rep.m,
                    "above_tail_empty": rep.above_tail_empty,
                }),
                verdict: Some(verdict),
                human: vec![
                    match rep.m {
                        Some(m) => format!("phi attains Spec(R) at m = {}", m),
                        None => "degenerate: the union of the steps is not Spec(R)".to_string(),
                    },
                    format!("above tail empty: {}", rep.above_tail_empty),
                ],
            })
        }
        Cmd::Truncate { n, complex } => {
            let s = load_session(cli)?;
            let x = get_complex(&s, complex)?;
            let tri = soft_triangle(&x, *n)?;
            let ranks = |c: &Complex| -> Vec<(i64, usize)> {
                (c.lo..=c.hi).map(|k| (k, c.object(k).rank)).collect()
            };
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("truncate --n {} {}", n, complex),
                    "engine": ENGINE_VERSION,
                    "le_ranks": ranks(&tri.le),
                    "gt_ranks": ranks(&tri.gt),
                }),
                verdict: None,
                human: vec![
                    format!(
                        "tau<={}: degrees {}..{}",
                        n, tri.le.lo, tri.le.hi
                    ),
                    format!("tau>{}: degrees {}..{}", n, tri.gt.lo, tri.gt.hi),
                ],
            })
        }
        Cmd::Verify { suite } => {
            let seed = cli.seed.unwrap_or(0);
            let selected: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else if SUITES.contains(&suite.as_str()) {
                vec![suite.as_str()]
            } else {
                return Err(CliError::User(format!(
                    "unknown suite `{}`; available: {}",
                    suite,
                    SUITES.join(", ")
                )));
            };
            let mut entries = Vec::new();
            let mut human = Vec::new();
            let mut all_pass = true;
            for name in selected {
                let cases = cli.cases.unwrap_or(default_cases(name));
                let rep = run_suite(name, seed, cases)?;
                all_pass &= rep.passed();
                human.push(format!(
                    "{}: {} ({} cases)",
                    name,
                    if rep.passed() { "pass" } else { "FAIL" },
                    cases
                ));
                if let Some(f) = rep.failures.first() {
                    human.push(format!("  first failure, case {}: {}", f.case, f.detail));
                }
                entries.push(json!({
                    "suite": rep.suite,
                    "seed": rep.seed,
                    "cases": rep.cases,
                    "failures": rep
                        .failures
                        .iter()
                        .map(|f| json!({ "case": f.case, "detail": f.detail }))
                        .collect::<Vec<_>>(),
                }));
            }
            Ok(Report {
                body: json!({
                    "schema": SCHEMA,
                    "command": format!("verify --suite {}", suite),
                    "engine": ENGINE_VERSION,
                    "seed": seed,
                    "suites": entries,
                }),
                verdict: Some(all_pass),
                human,
            })
        }
    }
}

fn default_cases(suite: &str) -> usize {
    match suite {
        "groebner-oracle" => 200,
        "fi-depth" => 50,
        "orthogonality" => 100,
        "coaisle-agreement" => 100,
        "synthesis" => 100,
        "homological-core" => 200,
        _ => 1,
    }
}
