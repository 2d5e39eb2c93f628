use std::fmt::Write as _;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use inscribe::decider::{
    decide_circumscribable_with, decide_inscribable_pair, verify_certificate, Method,
};
use inscribe::graph::{parse_embedding, to_polygraph, validate_steinitz};
use inscribe::rational::to_string as pq;
use inscribe::{
    dihedral_angles, dual, generate, parse_graph, Certificate, DecideError, DecideOptions, Family,
    GraphError, GraphRole, PolyhedralGraph,
};
use serde_json::json;
use thiserror::Error;

#[derive(Parser)]
#[command(name = "inscribe", version, about = "Decide whether polyhedral graphs are inscribable or circumscribable")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report Euler characteristic and 3-connectivity checks.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the faces of the embedding.
    Faces {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the planar dual, followed by the edge bijection as comments.
    Dual { file: PathBuf },
    /// Print a generated graph, e.g. `generate prism 5` or `generate kleetope(cube)`.
    Generate { family: String, n: Option<usize> },
    Decide(DecideArgs),
    /// Ideal dihedral angles (multiples of pi) from an inscribability certificate.
    Angles {
        certificate: PathBuf,
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-check a certificate against its graph.
    Verify { certificate: PathBuf, file: PathBuf },
}

/// Decide inscribability or circumscribability.
#[derive(Args)]
struct DecideArgs {
    #[arg(long, conflicts_with = "circumscribable", required_unless_present = "circumscribable")]
    inscribable: bool,
    #[arg(long)]
    circumscribable: bool,
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Answer 4-connected graphs without running the LP.
    #[arg(long)]
    fast_path: bool,
    /// Maximum number of circuit cuts (default 10 times the edge count).
    #[arg(long, value_name = "K")]
    max_iters: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Decide(#[from] DecideError),
    #[error("certificate failed verification")]
    Rejected,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Rejected => 1,
            CliError::Io { .. } | CliError::Usage(_) | CliError::Graph(_) => 2,
            CliError::Decide(e) => match e {
                DecideError::IterationCap { .. }
                | DecideError::Separation(_)
                | DecideError::Lp(_)
                | DecideError::UnexpectedStatus(_) => 3,
                _ => 2,
            },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Rejected) => ExitCode::from(1),
        Err(e) => {
            eprintln!("inscribe: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Validate { file, format } => {
            let g = parse_embedding(&read(&file)?)?;
            let report = validate_steinitz(&g);
            Ok(match format {
                Format::Json => pretty(&json!(report)),
                Format::Text => format!(
                    "vertices {}\nedges {}\nfaces {}\nplanar_spherical {}\nthree_connected {}\npolyhedral {}\n",
                    report.vertices,
                    report.edges,
                    report.faces,
                    report.planar_spherical,
                    report.three_connected,
                    report.is_polyhedral()
                ),
            })
        }
        Command::Faces { file, format } => {
            let g = parse_graph(&read(&file)?)?;
            Ok(faces(&g, format))
        }
        Command::Dual { file } => {
            let pair = dual(&parse_graph(&read(&file)?)?)?;
            let mut out = to_polygraph(&pair.dual);
            out.push_str("# edge bijection: primal edge -> dual edge\n");
            for (e, &e_star) in pair.edge_bijection().iter().enumerate() {
                writeln!(out, "# {e} -> {e_star}").unwrap();
            }
            Ok(out)
        }
        Command::Generate { family, n } => {
            let family: Family = family.parse()?;
            Ok(to_polygraph(&generate(&family, n)?))
        }
        Command::Decide(args) => decide(args),
        Command::Angles { certificate, file, format } => {
            let (cert, g) = read_pair(&certificate, &file)?;
            let pair = dual(&g)?;
            let angles = dihedral_angles(&cert, &pair)?;
            Ok(match format {
                Format::Json => {
                    let map: serde_json::Map<String, serde_json::Value> = angles
                        .coefficients()
                        .iter()
                        .enumerate()
                        .map(|(e, c)| (e.to_string(), json!(pq(c))))
                        .collect();
                    pretty(&json!({ "angles": map }))
                }
                Format::Text => {
                    let mut out = String::new();
                    for (e, c) in angles.coefficients().iter().enumerate() {
                        let [u, v] = g.endpoints(e);
                        writeln!(out, "edge {e} ({u} {v}): {} pi", pq(c)).unwrap();
                    }
                    out
                }
            })
        }
        Command::Verify { certificate, file } => {
            let (cert, g) = read_pair(&certificate, &file)?;
            let verification = match verify_certificate(&cert, &g) {
                Err(DecideError::Mismatch(reason)) => {
                    eprintln!("inscribe: {reason}");
                    return Err(CliError::Rejected);
                }
                other => other?,
            };
            if verification.is_valid() {
                Ok("certificate verified\n".into())
            } else {
                for p in &verification.problems {
                    eprintln!("inscribe: {p}");
                }
                Err(CliError::Rejected)
            }
        }
    }
}

fn decide(args: DecideArgs) -> Result<String, CliError> {
    let g = parse_graph(&read(&args.file)?)?;
    let opts = DecideOptions {
        max_iterations: args.max_iters,
        fast_path: args.fast_path,
        ..DecideOptions::default()
    };
    let cert = if args.inscribable {
        decide_inscribable_pair(&dual(&g)?, &opts)?
    } else {
        decide_circumscribable_with(&g, &opts)?
    };
    Ok(match args.format {
        Format::Json => cert.to_json() + "\n",
        Format::Text => describe(&cert, args.inscribable),
    })
}

fn describe(cert: &Certificate, inscribable: bool) -> String {
    let property = if inscribable { "inscribable" } else { "circumscribable" };
    let mut out = format!("{property}: {}\n", if cert.is_yes() { "yes" } else { "no" });
    let tested = match cert.graph_role {
        GraphRole::Primal => "input graph",
        GraphRole::Dual => "planar dual",
    };
    writeln!(out, "tested on: {tested}").unwrap();
    if cert.method == Method::FourConnected {
        writeln!(out, "method: 4-connected, no LP run").unwrap();
        return out;
    }
    match &cert.lp_optimum {
        Some(t) => writeln!(out, "lp optimum: {}", pq(t)).unwrap(),
        None => writeln!(out, "lp optimum: infeasible").unwrap(),
    }
    writeln!(out, "iterations: {}", cert.iterations).unwrap();
    writeln!(out, "cuts: {}", cert.cuts.len()).unwrap();
    for c in &cert.cuts {
        writeln!(out, "  {:?}", c.edges()).unwrap();
    }
    if let Some(w) = &cert.weights {
        writeln!(out, "weights:").unwrap();
        for (e, x) in w.iter().enumerate() {
            writeln!(out, "  {e}: {}", pq(x)).unwrap();
        }
    }
    out
}

fn faces(g: &PolyhedralGraph, format: Format) -> String {
    match format {
        Format::Json => {
            let list: Vec<_> = g
                .faces()
                .iter()
                .map(|f| {
                    json!({
                        "id": f.id,
                        "vertices": f.vertices(g),
                        "edges": f.edges().collect::<Vec<_>>(),
                    })
                })
                .collect();
            pretty(&json!({ "faces": list }))
        }
        Format::Text => {
            let mut out = String::new();
            for f in g.faces() {
                let vs: Vec<String> = f.vertices(g).iter().map(|v| v.to_string()).collect();
                let es: Vec<String> = f.edges().map(|e| e.to_string()).collect();
                writeln!(out, "face {}: vertices {} edges {}", f.id, vs.join(" "), es.join(" "))
                    .unwrap();
            }
            out
        }
    }
}

fn read_pair(certificate: &Path, file: &Path) -> Result<(Certificate, PolyhedralGraph), CliError> {
    if is_stdin(certificate) && is_stdin(file) {
        return Err(CliError::Usage("only one input may be read from standard input".into()));
    }
    let cert = Certificate::from_json(&read(certificate)?)?;
    let g = parse_graph(&read(file)?)?;
    Ok((cert, g))
}

fn is_stdin(path: &Path) -> bool {
    path.as_os_str() == "-"
}

fn read(path: &Path) -> Result<String, CliError> {
    let wrap = |source| CliError::Io { path: path.display().to_string(), source };
    if is_stdin(path) {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(wrap)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(wrap)
    }
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).unwrap() + "\n"
}
