//! Command-line surface: graph construction, exact solving, certificate
//! verification, diagram coloring, and the acceptance report.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use curvecolor::fractional::{
    self, verify_fractional_clique, verify_fractional_coloring, CertificateError,
    FractionalCliqueJson, FractionalColoringJson,
};
use curvecolor::graph::{Coloring, Graph};
use curvecolor::kneser;
use curvecolor::report;
use curvecolor::solve::{chromatic_number, clique_number, SearchError};
use curvecolor::special;
use curvecolor::surface::{diagram_from_json, homologous_color, DiagramJson};
use curvecolor::Budget;

#[derive(Parser)]
#[command(name = "curvecolor", version, about = "Curve-graph relatives: exact colorings and certificates")]
struct Cli {
    /// Search-node budget for exact solvers.
    #[arg(long, global = true, default_value_t = curvecolor::DEFAULT_BUDGET)]
    budget: u64,
    /// Emit machine-readable JSON where applicable.
    #[arg(long, global = true)]
    json: bool,
    /// Write primary output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Kg,
    Cg,
    KgTotal,
    CgTotal,
    Sp,
    Farey,
    OctahedronN,
    OctahedronC,
}

#[derive(Clone, Copy, ValueEnum)]
enum CertKind {
    Coloring,
    Clique,
}

#[derive(Clone, Copy, ValueEnum)]
enum NamedColoring {
    Kneser,
    Total,
    FareyMod2,
    FareyMod3,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a graph family and emit DIMACS.
    Build {
        family: Family,
        /// Family parameters: kg/cg take n k; kg-total/cg-total take n;
        /// sp takes 2g; farey takes the truncation bound.
        params: Vec<usize>,
        /// For farey: use the determinant-{1,2} edge rule.
        #[arg(long)]
        extended: bool,
    },
    /// Exact chromatic number of a DIMACS graph, with witness.
    Chromatic { graph: PathBuf },
    /// Exact clique number of a DIMACS graph, with witness.
    Clique { graph: PathBuf },
    /// Verify a fractional coloring or clique certificate against a graph.
    FractionalVerify {
        graph: PathBuf,
        certificate: PathBuf,
        #[arg(long, value_enum)]
        kind: CertKind,
    },
    /// Apply a named coloring to its graph and emit the coloring JSON.
    Color {
        which: NamedColoring,
        /// kneser takes n k; total takes n; farey-mod* take the bound.
        params: Vec<usize>,
    },
    /// Solve a curve diagram: prints m(D), f', f.
    Domain { diagram: PathBuf },
    /// Farey truncation: DIMACS plus optional mod coloring.
    Farey {
        #[arg(long)]
        bound: i64,
        #[arg(long)]
        extended: bool,
        /// Also emit the coloring JSON for this modulus (2 or 3).
        #[arg(long)]
        color: Option<i64>,
    },
    /// The octahedron graphs N and C.
    Octahedron {
        /// n or c.
        variant: String,
    },
    /// The symplectic graph Sp(2g).
    Sp {
        #[arg(long)]
        g: u32,
    },
    /// Chromatic bounds for the full curve graph of genus g.
    Bounds {
        #[arg(long)]
        genus: u32,
    },
    /// Run the acceptance suite.
    Report,
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Graph::from_dimacs(&text).map_err(|e| e.to_string())
}

fn farey_coloring_json(bound: i64, m: i64) -> String {
    let lines = special::farey_lines(bound);
    let colors = lines
        .iter()
        .map(|&l| special::farey_color_index(special::farey_mod_coloring(l, m), m))
        .collect();
    let coloring = Coloring { colors, palette_size: m as usize + 1 };
    let g = special::build_farey(bound, m == 3);
    let mut s = coloring.to_json(&g).to_string();
    s.push('\n');
    s
}

/// Exit: 0 success, 1 failed check, 2 usage, 3 budget exhausted.
fn run(cli: Cli) -> Result<u8, String> {
    let mut budget = Budget::new(cli.budget);
    let budget_exit = |e: SearchError| -> Result<u8, String> {
        eprintln!("{e}");
        Ok(3)
    };
    match cli.command {
        Command::Build { family, params, extended } => {
            let need = |k: usize| -> Result<u32, String> {
                params.get(k).map(|&v| v as u32).ok_or_else(|| "missing family parameter".to_string())
            };
            let g = match family {
                Family::Kg => kneser::build_kg(need(0)?, need(1)?).map_err(|e| e.to_string())?,
                Family::Cg => kneser::build_cg(need(0)?, need(1)?).map_err(|e| e.to_string())?,
                Family::KgTotal => {
                    kneser::build_total_kg(need(0)?).map_err(|e| e.to_string())?
                }
                Family::CgTotal => {
                    kneser::build_total_cg(need(0)?).map_err(|e| e.to_string())?
                }
                Family::Sp => special::build_sp(need(0)? as usize).map_err(|e| e.to_string())?,
                Family::Farey => special::build_farey(need(0)? as i64, extended),
                Family::OctahedronN => special::build_octahedron_graphs().0,
                Family::OctahedronC => special::build_octahedron_graphs().1,
            };
            emit(&cli.out, &g.to_dimacs())?;
            Ok(0)
        }
        Command::Chromatic { graph } => {
            let g = load_graph(&graph)?;
            match chromatic_number(&g, &mut budget) {
                Ok((chi, witness)) => {
                    if cli.json {
                        emit(&cli.out, &format!("{}\n", witness.to_json(&g)))?;
                    } else {
                        emit(&cli.out, &format!("chromatic number: {chi}\n{}\n", witness.to_json(&g)))?;
                    }
                    Ok(0)
                }
                Err(e) => budget_exit(e),
            }
        }
        Command::Clique { graph } => {
            let g = load_graph(&graph)?;
            match clique_number(&g, &mut budget) {
                Ok((omega, witness)) => {
                    let labels: Vec<&str> = witness.iter().map(|&v| g.label(v)).collect();
                    emit(&cli.out, &format!("clique number: {omega}\nwitness: {labels:?}\n"))?;
                    Ok(0)
                }
                Err(e) => budget_exit(e),
            }
        }
        Command::FractionalVerify { graph, certificate, kind } => {
            let g = load_graph(&graph)?;
            let text =
                fs::read_to_string(&certificate).map_err(|e| format!("{}: {e}", certificate.display()))?;
            let outcome = match kind {
                CertKind::Coloring => {
                    let json: FractionalColoringJson =
                        serde_json::from_str(&text).map_err(|e| e.to_string())?;
                    let fc = fractional::FractionalColoring::from_json(&g, &json).map_err(|e| e.to_string())?;
                    verify_fractional_coloring(&g, &fc)
                }
                CertKind::Clique => {
                    let json: FractionalCliqueJson =
                        serde_json::from_str(&text).map_err(|e| e.to_string())?;
                    let fc = fractional::FractionalClique::from_json(&g, &json).map_err(|e| e.to_string())?;
                    verify_fractional_clique(&g, &fc, &mut budget)
                }
            };
            match outcome {
                Ok(value) => {
                    emit(&cli.out, &format!("valid certificate, value {value}\n"))?;
                    Ok(0)
                }
                Err(CertificateError::Search(e)) => budget_exit(e),
                Err(e) => {
                    eprintln!("certificate rejected: {e}");
                    Ok(1)
                }
            }
        }
        Command::Color { which, params } => {
            let need = |k: usize| -> Result<u32, String> {
                params.get(k).map(|&v| v as u32).ok_or_else(|| "missing coloring parameter".to_string())
            };
            let text = match which {
                NamedColoring::Kneser => {
                    let (n, k) = (need(0)?, need(1)?);
                    let g = kneser::build_kg(n, k).map_err(|e| e.to_string())?;
                    let coloring = kneser::classical_kneser_full_coloring(n, k);
                    format!("{}\n", coloring.to_json(&g))
                }
                NamedColoring::Total => {
                    let n = need(0)?;
                    let g = kneser::build_total_kg(n).map_err(|e| e.to_string())?;
                    let coloring = kneser::total_full_coloring(n);
                    format!("{}\n", coloring.to_json(&g))
                }
                NamedColoring::FareyMod2 => farey_coloring_json(need(0)? as i64, 2),
                NamedColoring::FareyMod3 => farey_coloring_json(need(0)? as i64, 3),
            };
            emit(&cli.out, &text)?;
            Ok(0)
        }
        Command::Domain { diagram } => {
            let text =
                fs::read_to_string(&diagram).map_err(|e| format!("{}: {e}", diagram.display()))?;
            let json: DiagramJson = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let diag = diagram_from_json(&json).map_err(|e| e.to_string())?;
            let col = homologous_color(&diag).map_err(|e| e.to_string())?;
            emit(
                &cli.out,
                &format!(
                    "{{\"m\":\"{}\",\"f_prime\":{},\"f\":{}}}\n",
                    col.measure, col.f_prime, col.f
                ),
            )?;
            Ok(0)
        }
        Command::Farey { bound, extended, color } => {
            let g = special::build_farey(bound, extended);
            let mut text = g.to_dimacs();
            if let Some(m) = color {
                if m != 2 && m != 3 {
                    return Err("--color must be 2 or 3".into());
                }
                text.push_str(&farey_coloring_json(bound, m));
            }
            emit(&cli.out, &text)?;
            Ok(0)
        }
        Command::Octahedron { variant } => {
            let (n, c) = special::build_octahedron_graphs();
            let g = match variant.as_str() {
                "n" => n,
                "c" => c,
                other => return Err(format!("unknown octahedron variant {other:?}")),
            };
            emit(&cli.out, &g.to_dimacs())?;
            Ok(0)
        }
        Command::Sp { g } => {
            let graph = special::build_sp(2 * g as usize).map_err(|e| e.to_string())?;
            emit(&cli.out, &graph.to_dimacs())?;
            Ok(0)
        }
        Command::Bounds { genus } => {
            if genus < 2 {
                return Err("genus must be at least 2".into());
            }
            let b = special::bounds_table(genus);
            emit(
                &cli.out,
                &format!(
                    "g log g >= {:.4}\nseparating-count upper: {}\nhomologous upper g*4^g: {}\n",
                    b.lower_g_log_g, b.separating_upper, b.homologous_upper
                ),
            )?;
            Ok(0)
        }
        Command::Report => {
            let entries = report::run_all(cli.budget);
            let text = if cli.json {
                let mut s = serde_json::to_string_pretty(&entries).unwrap();
                s.push('\n');
                s
            } else {
                report::format_table(&entries)
            };
            emit(&cli.out, &text)?;
            let any_fail = entries.iter().any(|e| e.status == report::Status::Fail);
            let any_skip = entries.iter().any(|e| e.status == report::Status::SkippedBudget);
            Ok(if any_fail {
                1
            } else if any_skip {
                3
            } else {
                0
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
