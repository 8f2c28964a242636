use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use vtis_core::graph::Graph;
use vtis_core::mis::{enumerate_maximum_independent_sets, independence_number, is_is_primitive};
use vtis_core::mis::{Primitivity, SearchLimits};
use vtis_core::spec::{eval_spec, parse_spec};
use vtis_core::theorem::{classify_multifactor, classify_product, Auditor, MultiVerdict};
use vtis_core::{report, symmetry, Error, Result};

/// Independence numbers and maximum independent sets of vertex-transitive
/// graphs and their direct products.
///
/// Graphs are written in a small expression language, for example
/// `kneser(1,2,5)`, `circ(2,5)`, `perm(3)`, `cycle(6)`, `complete(3)`,
/// `cayley_zn(8,1,3)`, `union(complete(3),complete(3))`,
/// `product(perm(3),circ(2,4))` or `load("graph.json")`.
///
/// Exit codes: 0 success, 2 bad argument or spec, 3 search budget
/// exhausted, 4 a checked prediction failed.
#[derive(Parser)]
#[command(name = "vtis", version)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Branch-and-bound node budget per search.
    #[arg(long, global = true, value_name = "N")]
    budget: Option<u64>,

    /// Worker threads for enumeration (0 uses every core).
    #[arg(long, global = true, value_name = "N", default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Independence number.
    Alpha { spec: String },
    /// Every maximum independent set.
    Mis { spec: String },
    /// Vertex-transitivity by certificate or automorphism search.
    CheckVt { spec: String },
    /// Whether some nonempty non-maximum independent set A has
    /// |A|/|N[A]| equal to the independence ratio.
    CheckPrimitive { spec: String },
    /// Classify the maximum independent sets of G×H.
    CheckNormal { g: String, h: String },
    /// Decompose every maximum independent set of G×H and check each step.
    Audit { g: String, h: String },
    /// Predict normality of a product of several connected factors.
    Multi {
        #[arg(required = true, num_args = 2..)]
        specs: Vec<String>,
        /// Confirm the prediction by enumerating the full product.
        #[arg(long)]
        cross_check: bool,
    },
    /// Regenerate the reference tables as CSV.
    Report {
        /// Write to a file instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

struct Output {
    json: bool,
    text: String,
    value: serde_json::Value,
}

impl Output {
    fn new(json: bool, value: impl Serialize, text: String) -> Output {
        Output {
            json,
            text,
            value: serde_json::to_value(value).expect("reports serialize"),
        }
    }

    fn render(&self) -> String {
        if self.json {
            let mut s = serde_json::to_string_pretty(&self.value).expect("value serializes");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

fn load(text: &str) -> Result<(String, Graph)> {
    let spec = parse_spec(text)?;
    Ok((spec.to_string(), eval_spec(&spec)?))
}

fn set_list(sets: impl IntoIterator<Item = impl Serialize>) -> String {
    let mut out = String::new();
    for s in sets {
        out.push_str(&serde_json::to_string(&s).expect("sets serialize"));
        out.push('\n');
    }
    out
}

fn primitivity_text(p: &Primitivity) -> String {
    match p {
        Primitivity::Primitive => "primitive\n".to_string(),
        Primitivity::Imprimitive { witness } => format!(
            "imprimitive: A = {} with |N[A]| = {}\n",
            serde_json::to_string(&witness.set).expect("sets serialize"),
            witness.closed_nbhd_size
        ),
        Primitivity::Unknown { reason } => format!("unknown: {reason}\n"),
    }
}

/// Runs one command. A report whose prediction failed comes back as
/// `Err(Verification)` after its output has been written.
fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let mut limits = SearchLimits {
        threads: cli.threads,
        ..SearchLimits::default()
    };
    if let Some(b) = cli.budget {
        limits.node_budget = b;
    }
    let json = cli.json;
    let mut failure = None;
    let output = match &cli.command {
        Command::Alpha { spec } => {
            let (canonical, g) = load(spec)?;
            let alpha = independence_number(&g, &limits)?;
            Output::new(
                json,
                json!({"spec": canonical, "order": g.n(), "alpha": alpha}),
                format!("{alpha}\n"),
            )
        }
        Command::Mis { spec } => {
            let (_, g) = load(spec)?;
            let family = enumerate_maximum_independent_sets(&g, &limits)?;
            let text = format!(
                "alpha {} with {} maximum sets\n{}",
                family.alpha,
                family.len(),
                set_list(&family.sets)
            );
            Output::new(json, &family, text)
        }
        Command::CheckVt { spec } => {
            let (canonical, g) = load(spec)?;
            let certified = g.certificates().vertex_transitive;
            let (vt, orbits) = if certified {
                (true, None)
            } else {
                let orbits = symmetry::automorphism_orbits(&g)?;
                (orbits.len() <= 1, Some(orbits.blocks))
            };
            let text = match (&orbits, vt) {
                (None, _) => "vertex-transitive (by construction)\n".to_string(),
                (Some(_), true) => "vertex-transitive (automorphism search)\n".to_string(),
                (Some(o), false) => format!("not vertex-transitive: {} orbits\n", o.len()),
            };
            Output::new(
                json,
                json!({
                    "spec": canonical,
                    "vertex_transitive": vt,
                    "certified": certified,
                    "orbits": orbits,
                }),
                text,
            )
        }
        Command::CheckPrimitive { spec } => {
            let (_, g) = load(spec)?;
            let p = is_is_primitive(&g, &limits)?;
            let text = primitivity_text(&p);
            Output::new(json, &p, text)
        }
        Command::CheckNormal { g, h } => {
            let (_, g) = load(g)?;
            let (_, h) = load(h)?;
            let c = classify_product(&g, &h, &limits)?;
            let mut text = format!(
                "{}: alpha {}, {} maximum sets ({} from G, {} from H)\n",
                serde_json::to_value(c.verdict)
                    .expect("verdict serializes")
                    .as_str()
                    .unwrap(),
                c.alpha,
                c.mis_count,
                c.left_preimages,
                c.right_preimages
            );
            if let Some(w) = &c.witness {
                text.push_str(&format!("witness {}\n", serde_json::to_string(w).unwrap()));
            }
            Output::new(json, &c, text)
        }
        Command::Audit { g, h } => {
            let (_, g) = load(g)?;
            let (_, h) = load(h)?;
            let auditor = Auditor::new(&g, &h, &limits)?;
            let family = enumerate_maximum_independent_sets(auditor.product(), &limits)?;
            let mut failed = Vec::new();
            for s in &family.sets {
                let audit = auditor.audit(s)?;
                if !audit.passed() {
                    failed.push(json!({
                        "set": s,
                        "failures": audit.failures().collect::<Vec<_>>(),
                    }));
                }
            }
            let mut text = format!(
                "audited {} maximum sets of size {}: {} failed\n",
                family.len(),
                family.alpha,
                failed.len()
            );
            for f in &failed {
                text.push_str(&format!("{f}\n"));
            }
            if !failed.is_empty() {
                failure = Some(format!("{} maximum sets failed the audit", failed.len()));
            }
            Output::new(
                json,
                json!({
                    "alpha": family.alpha,
                    "audited": family.len(),
                    "passed": family.len() - failed.len(),
                    "failures": failed,
                }),
                text,
            )
        }
        Command::Multi { specs, cross_check } => {
            let factors = specs
                .iter()
                .map(|s| load(s).map(|(_, g)| g))
                .collect::<Result<Vec<_>>>()?;
            let r = classify_multifactor(&factors, *cross_check, &limits)?;
            let verdict = match r.predicted {
                MultiVerdict::MisNormal => "mis_normal",
                MultiVerdict::NotNormal => "not_normal",
            };
            let mut text = format!("{verdict}: {}\n", r.reason);
            if let Some(c) = &r.cross_check {
                text.push_str(&format!(
                    "confirmed: alpha {}, {} maximum sets, {} preimages\n",
                    c.alpha, c.mis_count, c.preimage_count
                ));
                if let Some(w) = &c.witness {
                    text.push_str(&format!("witness {}\n", serde_json::to_string(w).unwrap()));
                }
            }
            Output::new(json, &r, text)
        }
        Command::Report { output } => {
            let rows = report::full_report(&limits)?;
            let bad = rows.iter().filter(|r| !r.matches).count();
            if bad > 0 {
                failure = Some(format!("{bad} report rows do not match"));
            }
            let csv = report::to_csv(&rows);
            match output {
                Some(path) => {
                    std::fs::write(path, &csv)?;
                    Output::new(
                        json,
                        json!({"rows": rows.len(), "mismatches": bad}),
                        String::new(),
                    )
                }
                None => Output::new(json, &rows, csv),
            }
        }
    };
    out.write_all(output.render().as_bytes())?;
    match failure {
        Some(msg) => Err(Error::verification(msg)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = lock.flush();
            match &e {
                Error::Parse(p) => eprintln!("error [{}]: {e}", p.code()),
                _ => eprintln!("error: {e}"),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
