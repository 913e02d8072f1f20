//! Command-line front end. Every command reads one complex document from a
//! path or stdin and writes one canonical JSON (or DOT) document to stdout.
//!
//! Exit codes: 0 success or decided verdict, 2 undecided verdict, 1 error.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::complex::{ComplexKind, DirectedComplex, PreComplex, Violation};
use crate::document::{emit_complex, parse_complex, parse_precomplex, to_canonical_json};
use crate::dot::{complex_dot, link_dot};
use crate::dual::{dual_complex, DualDoc};
use crate::error::Error;
use crate::generate::{generate_random_complex, GenParams};
use crate::homology::euler::{euler_identity_report, EulerReport};
use crate::homology::{summary_fp, summary_integral};
use crate::link::{is_locally_connected, link_graph, link_graph_by_id, LinkGraph};
use crate::rotation::{RotationSystem, SigmaDoc};
use crate::search::{
    preferred_rotation_system, search_generalized_prs, search_planar_rotation_system, verify_generalized, GprsDoc,
    Mode, SearchOptions,
};
use crate::surface::{local_surfaces, SurfaceReport};
use crate::trace::is_planar_rotation_system;
use crate::verdict::{verdict, Answer, VerdictOptions};
use crate::words::{klein_word_admissible, WordMode};

#[derive(Debug, Parser)]
#[command(name = "embed3", version, about = "Embeddability of 2-complexes in 3-space")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PrsAction {
    Find,
    Count,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GprsAction {
    Find,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the standing assumptions and report violations
    Validate { input: Option<PathBuf> },
    /// Link graphs of every vertex, or of one
    Links {
        input: Option<PathBuf>,
        #[arg(long)]
        vertex: Option<String>,
        #[arg(long)]
        dot: bool,
    },
    /// Search for planar rotation systems
    Prs {
        action: PrsAction,
        input: Option<PathBuf>,
        #[arg(long, default_value_t = SearchOptions::default().cap)]
        cap: u64,
        /// Split the search across threads (same result)
        #[arg(long)]
        parallel: bool,
    },
    /// Local surfaces of a rotation system
    Surfaces {
        input: Option<PathBuf>,
        #[arg(long)]
        sigma: Option<PathBuf>,
    },
    /// The dual complex of a rotation system
    Dual {
        input: Option<PathBuf>,
        #[arg(long)]
        sigma: Option<PathBuf>,
    },
    /// First homology over a prime field or the integers
    #[command(group(ArgGroup::new("coefficients").required(true)))]
    Homology {
        input: Option<PathBuf>,
        #[arg(long, group = "coefficients")]
        prime: Option<u64>,
        #[arg(long, group = "coefficients")]
        integral: bool,
    },
    /// Euler characteristic identities between a complex and its dual
    Identities {
        input: Option<PathBuf>,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        sigma: Option<PathBuf>,
    },
    /// Embeddability verdict
    Verdict {
        input: Option<PathBuf>,
        #[arg(long, required = true, value_delimiter = ',')]
        primes: Vec<u64>,
        #[arg(long, default_value_t = crate::pi1::DEFAULT_BUDGET)]
        tietze_budget: u64,
    },
    /// Search for generalised planar rotation systems
    Gprs {
        action: GprsAction,
        input: Option<PathBuf>,
        #[arg(long, default_value_t = SearchOptions::default().cap)]
        cap: u64,
    },
    /// Admissible crossing word for Klein-bottle windings
    Words {
        #[arg(long, required = true, value_delimiter = ',')]
        windings: Vec<u8>,
        /// Compare words without rotation
        #[arg(long)]
        linear: bool,
    },
    /// Random simplicial complex
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = GenParams::default().prob)]
        prob: f64,
    },
    /// Graphviz rendering of the 1-skeleton
    Dot { input: Option<PathBuf> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, code: 0 }
    }
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, Error> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(std::fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

/// Accepts a bare sigma document or any document whose `sigma` field is one.
fn read_sigma(c: &PreComplex, path: &Option<PathBuf>) -> Result<RotationSystem, Error> {
    let Some(path) = path else {
        return Ok(preferred_rotation_system(c));
    };
    let text = std::fs::read_to_string(path)?;
    if let Ok(sigma) = RotationSystem::parse(c, &text) {
        return Ok(sigma);
    }
    let nested = serde_json::from_str::<serde_json::Value>(&text)
        .ok()
        .and_then(|v| v.get("sigma").cloned())
        .and_then(|v| serde_json::from_value::<SigmaDoc>(v).ok());
    match nested {
        Some(doc) => Ok(RotationSystem::from_doc(c, &doc)?),
        None => Ok(RotationSystem::parse(c, &text)?),
    }
}

#[derive(Serialize)]
struct Counts {
    vertices: usize,
    edges: usize,
    faces: usize,
}

#[derive(Serialize)]
struct ValidateDoc {
    valid: bool,
    kind: ComplexKind,
    counts: Counts,
    violations: Vec<Violation>,
}

#[derive(Serialize)]
struct LinkEdgeDoc {
    id: String,
    ends: [String; 2],
}

#[derive(Serialize)]
struct LinkDoc {
    vertex: String,
    vertices: Vec<String>,
    edges: Vec<LinkEdgeDoc>,
    components: usize,
    planar: bool,
}

#[derive(Serialize)]
struct LinksDoc {
    locally_connected: bool,
    links: Vec<LinkDoc>,
}

fn link_doc(c: &PreComplex, g: &LinkGraph) -> LinkDoc {
    LinkDoc {
        vertex: c.vertex_id(g.center).to_string(),
        vertices: (0..g.vertices.len()).map(|i| g.vertex_label(c, i)).collect(),
        edges: g
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| LinkEdgeDoc {
                id: g.edge_label(c, i),
                ends: [g.vertex_label(c, e.ends[0]), g.vertex_label(c, e.ends[1])],
            })
            .collect(),
        components: g.component_labels().1,
        planar: g.is_planar(),
    }
}

#[derive(Serialize)]
struct SurfacesDoc {
    sigma: SigmaDoc,
    planar: bool,
    surfaces: Vec<SurfaceReport>,
}

#[derive(Serialize)]
struct DualOut {
    sigma: SigmaDoc,
    #[serde(flatten)]
    dual: DualDoc,
}

#[derive(Serialize)]
struct IdentitiesDoc {
    sigma: SigmaDoc,
    #[serde(flatten)]
    report: EulerReport,
}

#[derive(Serialize)]
struct GprsOut {
    #[serde(flatten)]
    result: GprsDoc,
    verified: bool,
}

#[derive(Serialize)]
struct WordsDoc {
    windings: Vec<u8>,
    mode: WordMode,
    admissible: bool,
    word: Option<String>,
}

fn json<T: Serialize>(value: &T) -> Outcome {
    Outcome::ok(to_canonical_json(value))
}

fn complex(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<DirectedComplex, Error> {
    Ok(parse_complex(&read_input(path, stdin)?)?)
}

pub fn run_command(cmd: &Command, stdin: &mut dyn Read) -> Result<Outcome, Error> {
    Ok(match cmd {
        Command::Validate { input } => {
            let c = parse_precomplex(&read_input(input, stdin)?)?;
            let violations = c.validate();
            json(&ValidateDoc {
                valid: violations.is_empty(),
                kind: c.kind(),
                counts: Counts {
                    vertices: c.vertex_count(),
                    edges: c.edge_count(),
                    faces: c.face_count(),
                },
                violations,
            })
        }
        Command::Links { input, vertex, dot } => {
            let c = complex(input, stdin)?;
            let graphs: Vec<LinkGraph> = match vertex {
                Some(id) => vec![link_graph_by_id(&c, id)?],
                None => c
                    .sorted_vertices()
                    .into_iter()
                    .map(|v| link_graph(&c, v))
                    .collect::<Result<_, _>>()?,
            };
            if *dot {
                Outcome::ok(graphs.iter().map(|g| link_dot(&c, g)).collect())
            } else {
                json(&LinksDoc {
                    locally_connected: is_locally_connected(&c).0,
                    links: graphs.iter().map(|g| link_doc(&c, g)).collect(),
                })
            }
        }
        Command::Prs {
            action,
            input,
            cap,
            parallel,
        } => {
            let c = complex(input, stdin)?;
            let mode = match action {
                PrsAction::Find => Mode::First,
                PrsAction::Count => Mode::Count,
            };
            let r = search_planar_rotation_system(
                &c,
                SearchOptions {
                    mode,
                    cap: *cap,
                    parallel: *parallel,
                },
            )?;
            json(&r.to_doc(&c))
        }
        Command::Surfaces { input, sigma } => {
            let c = complex(input, stdin)?;
            let sigma = read_sigma(&c, sigma)?;
            json(&SurfacesDoc {
                sigma: sigma.to_doc(&c),
                planar: is_planar_rotation_system(&c, &sigma).0,
                surfaces: local_surfaces(&c, &sigma).iter().map(|s| s.report(&c)).collect(),
            })
        }
        Command::Dual { input, sigma } => {
            let c = complex(input, stdin)?;
            let sigma = read_sigma(&c, sigma)?;
            json(&DualOut {
                sigma: sigma.to_doc(&c),
                dual: dual_complex(&c, &sigma).to_doc(),
            })
        }
        Command::Homology { input, prime, .. } => {
            let c = complex(input, stdin)?;
            match prime {
                Some(p) => json(&summary_fp(&c, *p)?),
                None => json(&summary_integral(&c)),
            }
        }
        Command::Identities { input, prime, sigma } => {
            let c = complex(input, stdin)?;
            let sigma = read_sigma(&c, sigma)?;
            json(&IdentitiesDoc {
                sigma: sigma.to_doc(&c),
                report: euler_identity_report(&c, &sigma, *prime)?,
            })
        }
        Command::Verdict {
            input,
            primes,
            tietze_budget,
        } => {
            let c = complex(input, stdin)?;
            let opts = VerdictOptions {
                pi1_budget: *tietze_budget,
                ..VerdictOptions::default()
            };
            let v = verdict(&c, primes, opts)?;
            let code = if v.sphere3 == Answer::Unknown { 2 } else { 0 };
            Outcome {
                stdout: to_canonical_json(&v),
                code,
            }
        }
        Command::Gprs {
            action: GprsAction::Find,
            input,
            cap,
        } => {
            let c = complex(input, stdin)?;
            let r = search_generalized_prs(&c, *cap)?;
            let verified = r.witness.as_ref().is_some_and(|w| verify_generalized(&c, w));
            json(&GprsOut {
                result: r.to_doc(&c),
                verified,
            })
        }
        Command::Words { windings, linear } => {
            let mode = if *linear { WordMode::Linear } else { WordMode::Cyclic };
            let word = klein_word_admissible(windings, mode)?;
            json(&WordsDoc {
                windings: windings.clone(),
                mode,
                admissible: word.is_some(),
                word,
            })
        }
        Command::Gen { seed, vertices, prob } => {
            let c = generate_random_complex(GenParams {
                seed: *seed,
                n_vertices: *vertices,
                prob: *prob,
            })?;
            Outcome::ok(emit_complex(&c))
        }
        Command::Dot { input } => Outcome::ok(complex_dot(&complex(input, stdin)?.into_inner())),
    })
}

/// Parses `args`, runs the command and writes its output. Returns the exit code.
pub fn main_with<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn std::io::Write,
    stderr: &mut dyn std::io::Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                1
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    match run_command(&cli.command, stdin) {
        Ok(out) => {
            let _ = stdout.write_all(out.stdout.as_bytes());
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}
