//! Command-line front end. Every subcommand reads the JSON or plain-text
//! polygon formats and writes JSON (or a rendered document) to standard
//! output. Exit codes: 0 success, 2 invalid input or parameters, 3 a verifier
//! found a counterexample.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use latpoly::{
    apex_candidates, append, canonical_candidate, classify, collinear_ngon, corpus,
    inequality_sweep, noncollinear_ngon, normalize_collinear, points_from_str, polygon_from_str,
    polygon_to_json, render_svg, render_tikz, saturate, strip_violation_search,
    verify_append_once, ClassificationReport, ConvexLatticePolygon, LatticePoint, RenderOptions,
    StripRegion,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "latpoly", version, about = "Exact arithmetic for convex lattice polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a polygon and report its boundary and interior counts
    Analyze { file: PathBuf },
    /// Show the canonical apex of an edge, or the whole feasible window
    Apex {
        file: PathBuf,
        #[arg(long)]
        edge: usize,
        /// List every feasible apex instead of just the canonical one
        #[arg(long)]
        all: bool,
    },
    /// Append a primitive triangle to an edge, or sweep to the fixpoint
    Append {
        file: PathBuf,
        #[arg(long, conflicts_with = "saturate", required_unless_present = "saturate")]
        edge: Option<usize>,
        /// Explicit apex "x,y"; defaults to the canonical apex
        #[arg(long, value_parser = parse_point, requires = "edge")]
        apex: Option<LatticePoint>,
        /// Keep appending in ascending edge order until nothing fires
        #[arg(long)]
        saturate: bool,
    },
    /// Emit a polygon from one of the stock families
    Construct {
        family: Family,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        n: usize,
    },
    /// Map collinear points onto (1,0), (2,0), ... by a unimodular map
    Normalize { file: PathBuf },
    /// Bulk checkers; exit 3 when a counterexample turns up
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Draw a polygon to standard output
    Render {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        /// Dot every lattice point of the frame
        #[arg(long)]
        grid: bool,
        /// Mark the interior lattice points
        #[arg(long)]
        interior: bool,
        /// Second polygon drawn behind the main one
        #[arg(long)]
        overlay: Option<PathBuf>,
        #[arg(long, default_value_t = 20)]
        scale: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Interior points exactly (1,0), ..., (k,0)
    Collinear,
    /// k interior points not all on one line
    Noncollinear,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Tikz,
}

#[derive(Subcommand)]
enum Check {
    /// Enumerate all polygons with interior (1,0)..(k,0) and compare the
    /// reachable vertex counts against {3,4,5,6}
    Classification {
        #[arg(long)]
        k: i64,
        /// Check every k up to this bound
        #[arg(long)]
        kmax: Option<i64>,
    },
    /// Random-corpus check that appended edges never admit a second append
    AppendOnce {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long = "box", default_value_t = 16)]
        box_size: i64,
    },
    /// Random-corpus check of the boundary/interior inequalities
    Coleman {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5000)]
        count: usize,
        #[arg(long = "box", default_value_t = 16)]
        box_size: i64,
    },
    /// Region search for a tall polygon with interior exactly (1,0)..(k,0)
    Strip {
        #[arg(long)]
        k: i64,
    },
}

fn parse_point(text: &str) -> Result<LatticePoint, String> {
    let (x, y) = text
        .split_once(',')
        .ok_or_else(|| format!("expected \"x,y\", got {text:?}"))?;
    let x = x.trim().parse().map_err(|_| format!("bad x in {text:?}"))?;
    let y = y.trim().parse().map_err(|_| format!("bad y in {text:?}"))?;
    Ok(LatticePoint::new(x, y))
}

fn read_polygon(path: &Path) -> Result<ConvexLatticePolygon> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(polygon_from_str(&text)?)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { file } => {
            let report = read_polygon(&file)?.analyze();
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::Apex { file, edge, all } => {
            let p = read_polygon(&file)?;
            let out = if all {
                serde_json::to_string_pretty(&apex_candidates(&p, edge)?)?
            } else {
                serde_json::to_string_pretty(&canonical_candidate(&p, edge)?)?
            };
            println!("{out}");
        }
        Command::Append {
            file,
            edge,
            apex,
            saturate: sweep,
        } => {
            let p = read_polygon(&file)?;
            let (result, reports) = if sweep {
                saturate(&p)?
            } else {
                let report = append(&p, edge.expect("clap enforces --edge"), apex)?;
                (report.after.clone(), vec![report])
            };
            let out = json!({ "reports": reports, "result": result });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Command::Construct { family, k, n } => {
            let p = match family {
                Family::Collinear => collinear_ngon(k, n)?,
                Family::Noncollinear => noncollinear_ngon(k, n)?,
            };
            println!("{}", polygon_to_json(&p));
        }
        Command::Normalize { file } => {
            let text =
                fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let points = points_from_str(&text)?;
            let map = normalize_collinear(&points)?;
            let moved = points
                .iter()
                .map(|&q| map.apply_point(q))
                .collect::<latpoly::Result<Vec<_>>>()?;
            let out = json!({ "map": map, "points": moved });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Command::Verify { check } => return verify(check),
        Command::Render {
            file,
            format,
            grid,
            interior,
            overlay,
            scale,
        } => {
            let p = read_polygon(&file)?;
            let overlay = overlay.as_deref().map(read_polygon).transpose()?;
            let opts = RenderOptions {
                grid,
                highlight_interior: interior,
                overlay,
                scale,
                ..RenderOptions::default()
            };
            let text = match format {
                Format::Svg => render_svg(&p, &opts)?,
                Format::Tikz => render_tikz(&p, &opts)?,
            };
            print!("{text}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(check: Check) -> Result<ExitCode> {
    let counterexample = ExitCode::from(3);
    match check {
        Check::Classification { k, kmax } => {
            let expected: BTreeSet<usize> = [3, 4, 5, 6].into();
            let reports = (k..=kmax.unwrap_or(k))
                .map(classify)
                .collect::<latpoly::Result<Vec<ClassificationReport>>>()?;
            println!("{}", serde_json::to_string_pretty(&reports)?);
            if reports.iter().any(|r| r.achievable_n != expected) {
                return Ok(counterexample);
            }
        }
        Check::AppendOnce {
            seed,
            count,
            box_size,
        } => {
            let polygons = corpus(seed, box_size, count)?;
            let mut violations = Vec::new();
            for p in &polygons {
                violations.extend(verify_append_once(p)?);
            }
            let out = json!({ "polygons": polygons.len(), "violations": &violations });
            println!("{}", serde_json::to_string_pretty(&out)?);
            if !violations.is_empty() {
                return Ok(counterexample);
            }
        }
        Check::Coleman {
            seed,
            count,
            box_size,
        } => {
            let polygons = corpus(seed, box_size, count)?;
            let violations = inequality_sweep(&polygons);
            let out = json!({ "polygons": polygons.len(), "violations": &violations });
            println!("{}", serde_json::to_string_pretty(&out)?);
            if !violations.is_empty() {
                return Ok(counterexample);
            }
        }
        Check::Strip { k } => {
            let report = strip_violation_search(k, StripRegion::default_for(k))?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            if report.counterexample.is_some() {
                return Ok(counterexample);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
