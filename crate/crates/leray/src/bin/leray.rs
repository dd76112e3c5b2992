//! Batch command-line surface over the library: load fixtures from JSON,
//! run the nerve / Leray / norm computations and the verification suites,
//! and emit machine-readable reports.
//!
//! Exit codes are a stable contract: 0 success, 1 parse or I/O failure,
//! 2 precondition violation, 3 property failure.

use clap::{Parser, Subcommand};
use serde_json::json;

use leray::io;
use leray::leray as lr;
use leray::norms;
use leray::rat::parse_rational;
use leray::systems::{ChainSystem, CochainSystem, SystemSpec};
use leray::verify;
use leray::Error;

#[derive(Parser)]
#[command(name = "leray", version, about = "Exact nerve and covering computations on finite simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// write the JSON report here instead of stdout
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Nerve and supports of a covering
    Nerve {
        complex: String,
        covering: String,
    },
    /// Canonical homomorphisms from nerve cohomology, with acyclicity,
    /// factorization and vanishing verdicts
    Leray {
        complex: String,
        covering: String,
        /// FULL, TRUNC:m or EXPLICIT:path
        #[arg(long, default_value = "FULL")]
        system: String,
        /// restrict the report to a single degree
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Canonical map from base homology to nerve homology
    HomologyLeray {
        complex: String,
        covering: String,
        /// FULL, TRUNC:m or EXPLICIT:path
        #[arg(long, default_value = "FULL")]
        system: String,
    },
    /// Seminorms of (co)homology classes by exact linear programming
    Norm {
        complex: String,
        #[arg(long)]
        degree: i32,
        /// comma-separated rational coordinates in the stored basis
        #[arg(long, default_value = "")]
        class: String,
        /// l1, linf or duality
        #[arg(long)]
        kind: String,
    },
    /// Run every property suite
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<i32, (i32, String)> {
    let out = cli.out.as_deref();
    let parse_err = |e: Error| (1, e.to_string());
    let emit = |v: &serde_json::Value| {
        io::emit(v, out).map_err(|e| (1i32, e.to_string()))
    };
    match cli.command {
        Command::Nerve { complex, covering } => {
            let x = io::load_complex(&complex).map_err(parse_err)?;
            let u = load_covering_for(&covering, &x)?;
            let nerve = u.nerve();
            emit(&io::nerve_report(&nerve))?;
            Ok(0)
        }
        Command::Leray {
            complex,
            covering,
            system,
            degree,
        } => {
            let x = io::load_complex(&complex).map_err(parse_err)?;
            let u = load_covering_for(&covering, &x)?;
            let nerve = u.nerve();
            let spec = SystemSpec::parse(&system).map_err(parse_err)?;
            let sys = cochain_system(&nerve, &spec)?;
            let acyclicity = lr::is_acyclic(&nerve, &sys).map_err(precondition)?;
            let leray = lr::leray_map(&u).map_err(precondition)?;
            let (fact, vanish) = if acyclicity.acyclic {
                let f = lr::factorization_check(&u, &sys).map_err(precondition)?;
                let v = lr::vanishing_check(&u, &sys).map_err(precondition)?;
                (Some(f), Some(v))
            } else {
                (None, None)
            };
            let mut report = io::leray_report(
                &nerve,
                &leray,
                &acyclicity,
                fact.as_ref(),
                vanish.as_ref(),
            );
            if let Some(n) = degree {
                let degrees = report
                    .get("degrees")
                    .and_then(|d| d.get(n.to_string()))
                    .cloned()
                    .unwrap_or(json!(null));
                report = json!({ "degree": n, "report": degrees });
            }
            emit(&report)?;
            Ok(0)
        }
        Command::HomologyLeray {
            complex,
            covering,
            system,
        } => {
            let x = io::load_complex(&complex).map_err(parse_err)?;
            let u = load_covering_for(&covering, &x)?;
            let nerve = u.nerve();
            let spec = SystemSpec::parse(&system).map_err(parse_err)?;
            let leray = lr::homology_leray_map(&u).map_err(precondition)?;
            let mut report = io::homology_leray_report(&leray);
            if !matches!(spec, SystemSpec::Full) {
                let sys = chain_system(&nerve, &spec)?;
                let fact = lr::homology_factorization_check(&u, &sys).map_err(precondition)?;
                report.as_object_mut().unwrap().insert(
                    "factorization".into(),
                    json!({ "verdict": if fact.equal { "pass" } else { "fail" } }),
                );
            }
            emit(&report)?;
            Ok(0)
        }
        Command::Norm {
            complex,
            degree,
            class,
            kind,
        } => {
            let x = io::load_complex(&complex).map_err(parse_err)?;
            let coords: Vec<_> = if class.is_empty() {
                Vec::new()
            } else {
                class
                    .split(',')
                    .map(|s| parse_rational(s).map_err(|e| (1, e.to_string())))
                    .collect::<Result<_, _>>()?
            };
            let report = match kind.as_str() {
                "l1" => {
                    let r = norms::l1_seminorm(&x, degree, &coords).map_err(precondition)?;
                    io::seminorm_to_value(&r)
                }
                "linf" => {
                    let r = norms::linf_seminorm(&x, degree, &coords).map_err(precondition)?;
                    io::seminorm_to_value(&r)
                }
                "duality" => {
                    let r = norms::duality_check(&x, degree).map_err(precondition)?;
                    io::duality_to_value(&r)
                }
                other => return Err((1, format!("unknown norm kind `{other}`"))),
            };
            emit(&report)?;
            Ok(0)
        }
        Command::Verify { seed } => {
            let report = verify::run_all(seed);
            emit(&report.to_value())?;
            if report.passed() {
                Ok(0)
            } else {
                let dump = match out {
                    Some(path) => path.to_string(),
                    None => {
                        let path = std::env::temp_dir().join(format!("leray-verify-{seed}.json"));
                        let path = path.to_string_lossy().into_owned();
                        io::emit(&report.to_value(), Some(&path))
                            .map_err(|e| (1, e.to_string()))?;
                        path
                    }
                };
                let (name, failure) = report.first_failure().expect("failing suite");
                Err((
                    3,
                    format!("property `{name}` failed: {failure}; counterexample report at {dump}"),
                ))
            }
        }
    }
}

fn precondition(e: Error) -> (i32, String) {
    let code = match e {
        Error::Parse(_) | Error::Io(_) => 1,
        _ => 2,
    };
    (code, e.to_string())
}

fn load_covering_for(
    path: &str,
    x: &leray::simplicial::SimplicialComplex,
) -> Result<leray::covering::Covering, (i32, String)> {
    let covering = io::load_covering(path).map_err(|e| match e {
        Error::NotFine(_) => (2, e.to_string()),
        other => (1, other.to_string()),
    })?;
    if covering.base().simplex_set() != x.simplex_set() {
        return Err((
            2,
            "the covering's base does not match the given complex".to_string(),
        ));
    }
    Ok(covering)
}

fn cochain_system(
    nerve: &leray::covering::Nerve,
    spec: &SystemSpec,
) -> Result<CochainSystem, (i32, String)> {
    match spec {
        SystemSpec::Full => CochainSystem::full(nerve).map_err(precondition),
        SystemSpec::Truncated(m) => CochainSystem::truncated(nerve, *m).map_err(precondition),
        SystemSpec::Explicit(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| (1, e.to_string()))?;
            let v: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| (1, format!("{path}: {e}")))?;
            CochainSystem::from_json(nerve, &v).map_err(precondition)
        }
    }
}

fn chain_system(
    nerve: &leray::covering::Nerve,
    spec: &SystemSpec,
) -> Result<ChainSystem, (i32, String)> {
    match spec {
        SystemSpec::Full => ChainSystem::full(nerve).map_err(precondition),
        SystemSpec::Truncated(m) => ChainSystem::truncated(nerve, *m).map_err(precondition),
        SystemSpec::Explicit(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| (1, e.to_string()))?;
            let v: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| (1, format!("{path}: {e}")))?;
            ChainSystem::from_json(nerve, &v).map_err(precondition)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err((code, message)) => {
            eprintln!("error: {message}");
            std::process::exit(code);
        }
    }
}
