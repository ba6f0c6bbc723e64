use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gicar::algebra::{bratteli, bratteli_dot, wedderburn_check, ProjectionPattern};
use gicar::cmodule::{decompose, irr_matrices, IrrModuleSpec, SequenceModule};
use gicar::diagram::{count_formula, enumerate, AnyDiagram, DiagramKind};
use gicar::fock::{gicar_element, theta, Monomial};
use gicar::lincomb::LinComb;
use gicar::tensorrep::{annular_degeneracy_report, minimal_projection_trace, ToyContext};
use gicar::verify::{run_suite, spec_label, toy_suite, VerifyConfig, VerifyReport, SUITES};
use gicar::word::{normalize, psi, psi_inverse, Word};
use serde::Serialize;
use serde_json::{json, Value};

const DEFAULT_CAP: usize = 8;

#[derive(Parser)]
#[command(name = "gicarkit", version, about = "GICAR and annular planar rook categories, exactly")]
struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit human-readable text.
    #[arg(long, global = true)]
    text: bool,
    /// Write the output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Print a metadata record (version, command, timestamp) on stderr.
    #[arg(long, global = true)]
    meta: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compose two diagrams, FIRST applied first. Diagrams are JSON objects or '-' for stdin.
    Compose { first: String, second: String },
    /// List all basis diagrams from m to n points.
    Enumerate(CountArgs),
    /// Number of annular (or rectangular) diagrams from m to n points.
    Count(CountArgs),
    /// Standard form of a word such as "a3 a1 t^2 a*2 a*4 @5".
    Normalize { word: String },
    /// The diagram of a word.
    Psi { word: String },
    /// The standard word of a diagram given as JSON.
    PsiInv { diagram: String },
    /// θ of a GICAR monomial as a combination of rectangular diagrams.
    Theta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        word: String,
    },
    /// Matrix of a GICAR monomial on the Fock space.
    FockMatrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        word: String,
    },
    /// Check the matrix unit decomposition of RP_n or AP_n.
    Wedderburn {
        #[arg(long, default_value = "rect")]
        kind: DiagramKind,
        #[arg(long)]
        n: usize,
    },
    /// The Bratteli diagram of RP_0 ⊂ RP_1 ⊂ … ⊂ RP_max.
    Bratteli {
        #[arg(long)]
        max: usize,
        /// Write DOT to FILE, or to stdout with '-'.
        #[arg(long, value_name = "FILE")]
        dot: Option<String>,
    },
    /// Generator matrices of an irreducible module.
    Irr {
        #[arg(long, default_value = "rect")]
        kind: DiagramKind,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        omega: Option<usize>,
        #[arg(long, default_value_t = 4)]
        mmax: usize,
    },
    /// Decompose a module given as JSON (file or '-' for stdin).
    Decompose {
        #[arg(default_value = "-")]
        input: String,
    },
    /// The tensor power representation on C^(d+1).
    Toy(ToyArgs),
    /// Run the acceptance suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max: Option<usize>,
    },
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, default_value = "ann")]
    kind: DiagramKind,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct ToyArgs {
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 4)]
    mmax: usize,
    #[command(subcommand)]
    action: ToyAction,
}

#[derive(Subcommand)]
enum ToyAction {
    /// Run the identity suite and print a pass/fail table.
    Verify,
    /// Trace of a minimal projection, e.g. --pattern bdd.
    Trace {
        #[arg(long)]
        pattern: ProjectionPattern,
    },
    /// Multiplicities of the irreducibles in the tensor powers.
    Report,
}

struct Output {
    json: Value,
    text: String,
    ok: bool,
}

impl Output {
    fn new<T: Serialize>(value: &T, text: String) -> Result<Self, String> {
        Ok(Output { json: serde_json::to_value(value).map_err(|e| e.to_string())?, text, ok: true })
    }
}

fn cap() -> Result<usize, String> {
    match std::env::var("GICARKIT_MAX") {
        Ok(v) => v.trim().parse().map_err(|_| format!("GICARKIT_MAX must be a number, got {v:?}")),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn bounded(name: &str, value: usize) -> Result<usize, String> {
    let cap = cap()?;
    if value > cap {
        return Err(format!("{name} = {value} exceeds GICARKIT_MAX = {cap}"));
    }
    Ok(value)
}

fn read_arg(arg: &str) -> Result<String, String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(arg: &str, what: &str) -> Result<T, String> {
    serde_json::from_str(&read_arg(arg)?).map_err(|e| format!("malformed {what}: {e}"))
}

fn report_text(reports: &[VerifyReport]) -> String {
    let mut lines = Vec::new();
    for r in reports {
        for c in &r.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            lines.push(format!("{mark}  {:<16} {}", r.suite, c.id));
            if !c.pass {
                lines.push(format!("      expected {}\n      got      {}", c.expected, c.got));
            }
        }
    }
    let passed: usize = reports.iter().map(|r| r.passed).sum();
    let failed: usize = reports.iter().map(|r| r.failed).sum();
    lines.push(format!("{passed} passed, {failed} failed"));
    lines.join("\n")
}

fn reports_output(reports: Vec<VerifyReport>) -> Result<Output, String> {
    let passed: usize = reports.iter().map(|r| r.passed).sum();
    let failed: usize = reports.iter().map(|r| r.failed).sum();
    let text = report_text(&reports);
    let json = json!({ "suites": reports, "passed": passed, "failed": failed });
    Ok(Output { json, text, ok: failed == 0 })
}

fn run(command: Command) -> Result<Output, String> {
    let e = |err: gicar::Error| err.to_string();
    match command {
        Command::Compose { first, second } => {
            let f: AnyDiagram = parse_json(&first, "diagram")?;
            let g: AnyDiagram = parse_json(&second, "diagram")?;
            let h = f.compose(&g).map_err(e)?;
            Output::new(&h, h.to_string())
        }
        Command::Enumerate(a) => {
            let (m, n) = (bounded("m", a.m)?, bounded("n", a.n)?);
            let list = enumerate(a.kind, m, n, a.k);
            let text = list.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            Output::new(&list, text)
        }
        Command::Count(a) => {
            let count = match a.kind {
                DiagramKind::Ann => count_formula(a.m, a.n, a.k),
                DiagramKind::Rect => match a.k {
                    Some(k) => gicar::diagram::rect_count(a.m, a.n, k),
                    None => gicar::diagram::rect_count_total(a.m, a.n),
                },
            };
            Output::new(&count, count.to_string())
        }
        Command::Normalize { word } => {
            let w: Word = word.parse().map_err(e)?;
            let s = normalize(&w).map_err(e)?;
            Output::new(&s, s.to_string())
        }
        Command::Psi { word } => {
            let w: Word = word.parse().map_err(e)?;
            let d = AnyDiagram::Ann(psi(&w));
            Output::new(&d, d.to_string())
        }
        Command::PsiInv { diagram } => {
            let d: AnyDiagram = parse_json(&diagram, "diagram")?;
            let s = psi_inverse(&d.to_ann());
            Output::new(&s, s.to_string())
        }
        Command::Theta { n, word } => {
            let m: Monomial = word.parse().map_err(e)?;
            let x = theta(&LinComb::basis(m), bounded("n", n)?).map_err(e)?;
            Output::new(&x, x.to_string())
        }
        Command::FockMatrix { n, word } => {
            let m: Monomial = word.parse().map_err(e)?;
            let x = gicar_element(&m, bounded("n", n)?).map_err(e)?;
            Output::new(&x, x.to_string())
        }
        Command::Wedderburn { kind, n } => {
            let r = wedderburn_check(kind, bounded("n", n)?).map_err(e)?;
            let mut lines: Vec<String> = r
                .summands
                .iter()
                .map(|s| match s.omega {
                    Some(o) => format!("weight {} ω=ζ^{o}: {}×{}", s.weight, s.size, s.size),
                    None => format!("weight {}: {}×{}", s.weight, s.size, s.size),
                })
                .collect();
            lines.push(format!("dimension {} (enumerated {}), {} checks, {} failures", r.dimension, r.enumerated, r.checks, r.failures.len()));
            let ok = r.ok();
            Ok(Output { ok, ..Output::new(&r, lines.join("\n"))? })
        }
        Command::Bratteli { max, dot } => {
            let rows = bratteli(bounded("max", max)?).map_err(e)?;
            let graph = bratteli_dot(&rows);
            match dot.as_deref() {
                Some("-") => Ok(Output { json: Value::String(graph.clone()), text: graph, ok: true }),
                Some(path) => {
                    std::fs::write(path, &graph).map_err(|err| format!("{path}: {err}"))?;
                    let text = rows.iter().map(|r| format!("{:?}", r.multiplicities)).collect::<Vec<_>>().join("\n");
                    Output::new(&rows, text)
                }
                None => {
                    let text = rows.iter().map(|r| format!("{:?}", r.multiplicities)).collect::<Vec<_>>().join("\n");
                    Output::new(&rows, text)
                }
            }
        }
        Command::Irr { kind, k, omega, mmax } => {
            let spec = match kind {
                DiagramKind::Rect => IrrModuleSpec { kind, k, omega },
                DiagramKind::Ann => IrrModuleSpec::ann(k, omega.unwrap_or(0)),
            };
            spec.check().map_err(e)?;
            let v = irr_matrices(&spec, bounded("mmax", mmax)?).map_err(e)?;
            Output::new(&v, format!("{} with level dimensions {:?}", spec_label(&spec), v.dims))
        }
        Command::Decompose { input } => {
            let module: SequenceModule = parse_json(&input, "module")?;
            bounded("m_max", module.m_max)?;
            let d = decompose(&module).map_err(e)?;
            let text = d
                .components
                .iter()
                .map(|c| format!("{} × {}", spec_label(&c.spec), c.multiplicity))
                .collect::<Vec<_>>()
                .join("\n");
            Output::new(&d, text)
        }
        Command::Toy(t) => {
            let ctx = ToyContext::new(t.d);
            match t.action {
                ToyAction::Verify => reports_output(vec![toy_suite(&ctx, bounded("mmax", t.mmax)?).map_err(e)?]),
                ToyAction::Trace { pattern } => {
                    bounded("pattern length", pattern.n())?;
                    let tr = minimal_projection_trace(&ctx, &pattern).map_err(e)?;
                    let json = json!({ "d": t.d, "pattern": pattern.to_string(), "trace": tr, "value": tr.to_string() });
                    Ok(Output { json, text: tr.to_string(), ok: true })
                }
                ToyAction::Report => {
                    let r = annular_degeneracy_report(&ctx, bounded("mmax", t.mmax)?).map_err(e)?;
                    let mut lines: Vec<String> = r.rect.iter().map(|m| format!("rect k={}: {}", m.k, m.multiplicity)).collect();
                    lines.extend(r.ann.iter().map(|m| format!("ann k={} r={}: {}", m.k, m.r.unwrap_or(0), m.multiplicity)));
                    let ok = r.consistent;
                    Ok(Output { ok, ..Output::new(&r, lines.join("\n"))? })
                }
            }
        }
        Command::Verify { suite, max } => {
            let max = bounded("max", max.unwrap_or(cap()?))?;
            let cfg = VerifyConfig { max, ..VerifyConfig::default() };
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else if SUITES.contains(&suite.as_str()) {
                vec![suite.as_str()]
            } else {
                return Err(format!("unknown suite {suite:?}; expected one of all, {}", SUITES.join(", ")));
            };
            let reports = names.iter().map(|s| run_suite(s, &cfg)).collect::<Result<Vec<_>, _>>().map_err(e)?;
            reports_output(reports)
        }
    }
}

fn command_name(args: &[String]) -> String {
    args.iter().skip(1).filter(|a| !a.starts_with('-')).take(1).cloned().collect()
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = err.print();
                return ExitCode::SUCCESS;
            }
            let msg = err.to_string();
            let line = msg.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            eprintln!("gicarkit: {line}");
            return ExitCode::from(2);
        }
    };
    if cli.meta {
        let stamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let meta = json!({ "version": env!("CARGO_PKG_VERSION"), "command": command_name(&args), "timestamp": stamp });
        eprintln!("{meta}");
    }
    let raw_dot = matches!(&cli.command, Command::Bratteli { dot: Some(d), .. } if d == "-");
    let out = match run(cli.command) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("gicarkit: {msg}");
            return ExitCode::FAILURE;
        }
    };
    let body = if raw_dot {
        out.text.clone()
    } else if cli.text {
        format!("{}\n", out.text.trim_end())
    } else {
        format!("{}\n", serde_json::to_string_pretty(&out.json).expect("JSON values serialize"))
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &body).map_err(|err| format!("{}: {err}", path.display())),
        None => std::io::stdout().write_all(body.as_bytes()).map_err(|err| err.to_string()),
    };
    if let Err(msg) = written {
        eprintln!("gicarkit: {msg}");
        return ExitCode::FAILURE;
    }
    if !out.ok {
        eprintln!("gicarkit: some checks failed");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
