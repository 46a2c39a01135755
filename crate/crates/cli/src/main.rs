use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use oneplanar::bounds::{self, SizeBounds};
use oneplanar::constructions::{self, Family};
use oneplanar::io::{self, Provenance};
use oneplanar::oracle::{self, Checkpoint, OracleVerdict, SearchOptions};
use oneplanar::{Graph, OnePlanarDrawing};

/// Constructions, bounds, validation and a brute-force oracle for
/// bipartite 1-planar graphs.
#[derive(Parser)]
#[command(name = "oneplanar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the best known (or a named) construction for classes (x, y).
    Construct {
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
        #[arg(long, default_value = "auto")]
        family: FamilyArg,
        /// Write the drawing document here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Validate a drawing document.
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Upper and lower edge bounds for classes (x, y), as CSV or JSON.
    Bounds {
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
        #[arg(long)]
        json: bool,
    },
    /// Bounds for every 1 <= x <= xmax, x <= y <= ymax, as CSV or JSON.
    Table {
        #[arg(long)]
        xmax: usize,
        #[arg(long)]
        ymax: usize,
        /// Only y >= 6x - 12, with open intervals against the conjectured bound.
        #[arg(long)]
        conjecture: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide 1-planarity of a small graph by exhaustive search.
    Oracle {
        /// Graph or drawing document.
        #[arg(
            required_unless_present = "complete_bipartite",
            conflicts_with = "complete_bipartite"
        )]
        file: Option<PathBuf>,
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        complete_bipartite: Option<Vec<usize>>,
        /// Maximum number of crossings (default: floor(E/2), capped by 6x - 12).
        #[arg(long)]
        budget: Option<usize>,
        /// Give up after this many seconds.
        #[arg(long)]
        timeout: Option<f64>,
        /// Resume from and save progress to this file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Write the drawing found here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Export a drawing document as DOT or SVG.
    Export {
        file: PathBuf,
        #[arg(long)]
        format: Format,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Auto,
    W3,
    B,
    Balanced,
    Near,
    K36,
    Star,
    Planar,
}

impl FamilyArg {
    fn family(self) -> Option<Family> {
        match self {
            FamilyArg::Auto => None,
            FamilyArg::W3 => Some(Family::W3),
            FamilyArg::B => Some(Family::B),
            FamilyArg::Balanced => Some(Family::Balanced),
            FamilyArg::Near => Some(Family::NearBalanced),
            FamilyArg::K36 => Some(Family::K36),
            FamilyArg::Star => Some(Family::Star),
            FamilyArg::Planar => Some(Family::Planar),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Svg,
}

/// Exit statuses: 0 ok, 1 failed check or "no", 2 usage, 3 undecided.
enum Failure {
    Fail(String),
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Fail(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

const UNKNOWN: u8 = 3;

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct {
            x,
            y,
            family,
            out,
            json,
        } => construct(x, y, family.family(), out.as_deref(), json),
        Command::Verify { file, json } => verify(&file, json),
        Command::Bounds { x, y, json } => bounds_cmd(x, y, json),
        Command::Table {
            xmax,
            ymax,
            conjecture,
            json,
        } => table(xmax, ymax, conjecture, json),
        Command::Oracle {
            file,
            complete_bipartite,
            budget,
            timeout,
            checkpoint,
            out,
            json,
        } => oracle_cmd(
            file.as_deref(),
            complete_bipartite,
            budget,
            timeout,
            checkpoint.as_deref(),
            out.as_deref(),
            json,
        ),
        Command::Export { file, format, out } => export(&file, format, out.as_deref()),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let (Failure::Fail(msg) | Failure::Usage(msg)) = &f;
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn load_drawing(path: &Path) -> Result<OnePlanarDrawing, Failure> {
    io::load(&read(path)?).map_err(|e| Failure::Fail(format!("{}: {e}", path.display())))
}

/// Writes bulk output, exiting quietly if the reader has gone away.
fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(value: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&value).expect("json"));
}

fn construct(x: usize, y: usize, family: Option<Family>, out: Option<&Path>, json: bool) -> Outcome {
    let (family, drawing) = match family {
        None => {
            let c = constructions::best_known(x, y).map_err(|e| Failure::Usage(e.to_string()))?;
            (c.family, c.drawing)
        }
        Some(f) => (
            f,
            constructions::construct(f, x, y).map_err(|e| Failure::Usage(e.to_string()))?,
        ),
    };
    if let Some(path) = out {
        let mut parameters = std::collections::BTreeMap::new();
        parameters.insert("x".to_string(), json!(x));
        parameters.insert("y".to_string(), json!(y));
        let prov = Provenance {
            generator: family.name().to_string(),
            parameters,
        };
        write(path, &(io::save(&drawing, Some(prov)) + "\n"))?;
    }
    let n = drawing.vertex_count();
    let (e, c) = (drawing.edge_count(), drawing.crossing_count());
    if json {
        print_json(json!({
            "family": family.name(),
            "formula": family.formula(),
            "x": x,
            "y": y,
            "n": n,
            "edges": e,
            "crossings": c,
        }));
    } else {
        println!(
            "family {family}  n {n}  edges {e}  crossings {c}  formula {}",
            family.formula()
        );
    }
    Ok(0)
}

fn verify(path: &Path, json: bool) -> Outcome {
    let text = read(path)?;
    let drawing = match io::load(&text) {
        Ok(d) => d,
        Err(e) => {
            if json {
                print_json(json!({ "passed": false, "error": e.to_string() }));
            } else {
                println!("FAIL {e}");
            }
            return Ok(1);
        }
    };
    let report = drawing.validate();
    if json {
        print_json(json!({
            "passed": report.passed(),
            "vertices": report.vertices,
            "edges": report.edges,
            "crossings": report.crossings,
            "classes": report.classes,
            "crossing_ceiling": report.crossing_ceiling,
            "exceeds_minimal_bound": report.exceeds_minimal_bound,
            "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        }));
    } else {
        println!("{report}");
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn bounds_cmd(x: usize, y: usize, json: bool) -> Outcome {
    let b = SizeBounds::new(x, y).map_err(|e| Failure::Usage(e.to_string()))?;
    if json {
        print_json(serde_json::to_value(&b).expect("json"));
    } else {
        println!("{}", SizeBounds::CSV_HEADER);
        println!("{}", b.csv_row());
    }
    Ok(0)
}

fn table(xmax: usize, ymax: usize, conjecture: bool, json: bool) -> Outcome {
    if conjecture {
        let rows = bounds::conjecture_table(xmax, ymax);
        if json {
            print_json(serde_json::to_value(&rows).expect("json"));
        } else {
            let mut out = String::from("x,y,n,lower,conjectured,proven_upper,interval,status,conjecture_met\n");
            for r in rows {
                let status = if r.tight { "tight" } else { "open" };
                out += &format!(
                    "{},{},{},{},{},{},[{};{}],{status},{}\n",
                    r.x,
                    r.y,
                    r.x + r.y,
                    r.constructive_lower,
                    r.conjectured_upper,
                    r.proven_upper,
                    r.open_interval[0],
                    r.open_interval[1],
                    r.conjecture_met
                );
            }
            emit(&out);
        }
    } else {
        let rows = bounds::table(xmax, ymax);
        if json {
            print_json(serde_json::to_value(&rows).expect("json"));
        } else {
            let mut out = String::from("x,y,n,lower,upper,gap,family,regime\n");
            for r in rows {
                let regime = serde_json::to_value(r.regime).expect("json");
                out += &format!(
                    "{},{},{},{},{},{},{},{}\n",
                    r.x,
                    r.y,
                    r.n,
                    r.lower_constructive,
                    r.upper_final,
                    r.gap(),
                    r.lower_family,
                    regime.as_str().expect("string")
                );
            }
            emit(&out);
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn oracle_cmd(
    file: Option<&Path>,
    complete_bipartite: Option<Vec<usize>>,
    budget: Option<usize>,
    timeout: Option<f64>,
    checkpoint: Option<&Path>,
    out: Option<&Path>,
    json: bool,
) -> Outcome {
    let graph = match (file, complete_bipartite.as_deref()) {
        (_, Some(&[a, b])) => Graph::complete_bipartite(a, b),
        (Some(path), _) => {
            io::load_graph(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
        }
        _ => return Err(Failure::Usage("give a graph file or --complete-bipartite A B".into())),
    };
    let budget = budget.unwrap_or_else(|| oracle::default_budget(&graph));
    let timeout = match timeout {
        Some(s) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => return Err(Failure::Usage(format!("invalid timeout {s}"))),
        None => None,
    };
    let resume = match checkpoint {
        Some(path) if path.exists() => {
            let cp: Checkpoint =
                serde_json::from_str(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Some(cp)
        }
        _ => None,
    };
    let verdict = oracle::is_one_planar_with(&graph, budget, &SearchOptions { timeout, resume });
    let (answer, crossings, code) = match &verdict {
        OracleVerdict::Yes(d) => ("yes", Some(d.crossing_count()), 0),
        OracleVerdict::No => ("no", None, 1),
        OracleVerdict::Unknown(_) => ("unknown", None, UNKNOWN),
    };
    match &verdict {
        OracleVerdict::Yes(d) => {
            if let Some(path) = out {
                let prov = Provenance {
                    generator: "oracle".into(),
                    parameters: Default::default(),
                };
                write(path, &(io::save(d, Some(prov)) + "\n"))?;
            }
        }
        OracleVerdict::Unknown(cp) => {
            if let Some(path) = checkpoint {
                write(path, &(serde_json::to_string_pretty(cp).expect("json") + "\n"))?;
            }
        }
        OracleVerdict::No => {}
    }
    if json {
        print_json(json!({
            "verdict": answer,
            "crossings": crossings,
            "budget": budget,
            "vertices": graph.vertex_count(),
            "edges": graph.edge_count(),
        }));
    } else {
        match crossings {
            Some(c) => println!("{answer}, {c} crossing{}", if c == 1 { "" } else { "s" }),
            None => println!("{answer} (budget {budget})"),
        }
    }
    Ok(code)
}

fn export(path: &Path, format: Format, out: Option<&Path>) -> Outcome {
    let d = load_drawing(path)?;
    let text = match format {
        Format::Dot => io::export_dot(&d),
        Format::Svg => io::export_svg(&d),
    };
    match out {
        Some(p) => write(p, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}
