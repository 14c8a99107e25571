//! The `lucas-count` command line.
//!
//! Every command prints one JSON report on stdout:
//! `{"command":..,"inputs":{path: sha256},"results":{..}}`. Integers that
//! can grow are printed as decimal strings. Wall-clock time is only added
//! (as `elapsed_ms`) with `--timing`, so reports are byte-identical across
//! runs otherwise.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 unreadable or
//! malformed input, 3 input that parses but violates a precondition, 4 a
//! size guard was hit.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::asm_grid::{self, AsmMatrix, RestrictedColoring};
use crate::error::Error;
use crate::karoubi::{self, Projection};
use crate::lucas::{self, enumerate_lucas};
use crate::matching_algebra::state_sum;
use crate::matchings::{self, count_perfect_matchings, enumerate_perfect_matchings, Graph};
use crate::planar_graph::{parse_map_value, EdgeColoring, PlanarMap};
use crate::tilings;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SEMANTIC: i32 = 3;
pub const EXIT_GUARD: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "lucas-count", version, about = "Exact counts of Lucas-colorings, perfect matchings, ASMs and lozenge tilings")]
pub struct Cli {
    /// Worker threads (defaults to LUCAS_COUNT_JOBS, then all cores).
    #[arg(long, global = true, env = "LUCAS_COUNT_JOBS")]
    pub jobs: Option<usize>,
    /// Lift the desk-scale size limits.
    #[arg(long, global = true)]
    pub deep: bool,
    /// Add elapsed_ms to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count (or list) the Lucas-colorings of a planar map.
    Luc {
        map: PathBuf,
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        list: bool,
        /// At most this many colorings are listed.
        #[arg(long)]
        limit: Option<usize>,
        /// Also report the statistic with all-y vertices as special.
        #[arg(long)]
        dual: bool,
    },
    /// Polygon blow-up of a planar map, with both sides of M = m.
    Blowup {
        map: PathBuf,
        /// Print the blow-up as DOT inside the report.
        #[arg(long)]
        dot: bool,
    },
    /// Perfect matchings of a planar map or an adjacency-list graph.
    Match {
        graph: PathBuf,
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// State sum of a graph over an ordered list of distinguished vertices.
    Statesum {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        distinguished: Vec<usize>,
    },
    /// Alternating sign matrices and restricted grid colorings.
    Asm {
        #[command(subcommand)]
        action: AsmCommand,
    },
    /// Domino tilings of the Aztec diamond.
    Aztec {
        #[arg(long)]
        n: usize,
        /// Include the dual graph.
        #[arg(long)]
        graph: bool,
    },
    /// Lozenge regions.
    Region {
        #[command(subcommand)]
        kind: RegionCommand,
    },
    /// Direct summands of the two-colored cube of resolutions.
    Karoubi(ProjectionArg),
    /// Check one of the counting identities.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum AsmCommand {
    /// All n × n alternating sign matrices.
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// ASM JSON to the restricted coloring of the grid graph.
    ToColoring { asm: PathBuf },
    /// Restricted coloring JSON of G_n back to an ASM.
    FromColoring {
        #[arg(long)]
        n: usize,
        coloring: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum RegionCommand {
    /// The hexagon with sides a, b, c, a, b, c.
    Hex {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        c: u32,
        #[command(flatten)]
        out: RegionOutput,
    },
    /// The region T_a and the graph t_a.
    Ta {
        #[arg(long)]
        a: u32,
        #[command(flatten)]
        out: RegionOutput,
    },
}

#[derive(Debug, Args)]
pub struct RegionOutput {
    /// Write an SVG drawing here.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Include the cell list.
    #[arg(long)]
    cells: bool,
}

#[derive(Debug, Args)]
pub struct ProjectionArg {
    /// Planar-map JSON of a 4-regular projection.
    proj: Option<PathBuf>,
    /// A bundled projection instead of a file.
    #[arg(long, conflicts_with = "proj")]
    fixture: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Which identity: 1 Aztec/ASM, 2 summands, 3 ASM/grid bijection, 4 T_a, 5 blow-up.
    #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
    identity: u8,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: Option<u32>,
    /// Planar map (identity 5) or projection (identity 2).
    #[arg(long)]
    map: Option<PathBuf>,
    #[arg(long)]
    proj: Option<PathBuf>,
    #[arg(long)]
    fixture: Option<String>,
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError { code: exit_code(&e), message: e.to_string() }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::MalformedDocument(_) | Error::InvalidMap(_) | Error::Io(_) => EXIT_INPUT,
        Error::TooLarge { .. } | Error::LimitExceeded { .. } | Error::ArityTooLarge(_) => EXIT_GUARD,
        _ => EXIT_SEMANTIC,
    }
}

fn guard(what: &'static str, value: u64, max: u64, deep: bool) -> Result<(), CliError> {
    if value > max && !deep {
        return Err(Error::TooLarge { what, value, max }.into());
    }
    Ok(())
}

struct Inputs(BTreeMap<String, String>);

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<Value, CliError> {
        let bytes = std::fs::read(path).map_err(Error::from)?;
        self.0.insert(path.display().to_string(), hex::encode(Sha256::digest(&bytes)));
        let text = String::from_utf8(bytes).map_err(|e| Error::MalformedDocument(e.to_string()))?;
        Ok(serde_json::from_str(&text).map_err(Error::from)?)
    }
}

fn big(x: &BigUint) -> Value {
    Value::String(x.to_string())
}

/// Planar maps are recognized by their `vertices` key, everything else is
/// read as `{"n":..,"edges":[[u,v],..]}`.
fn graph_of(value: &Value) -> Result<(Graph, Option<PlanarMap>), CliError> {
    if value.get("vertices").is_some() {
        let m = parse_map_value(value)?;
        Ok((Graph::from(&m), Some(m)))
    } else {
        Ok((Graph::from_json(&value.to_string())?, None))
    }
}

fn projection(arg_path: Option<&Path>, fixture: Option<&str>, inputs: &mut Inputs) -> Result<(String, Projection), CliError> {
    match (arg_path, fixture) {
        (Some(p), _) => Ok((p.display().to_string(), Projection::from_json(&inputs.read(p)?)?)),
        (None, Some(name)) => karoubi::fixtures::all()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(n, p)| (n.to_string(), p))
            .ok_or_else(|| CliError { code: EXIT_INPUT, message: format!("unknown fixture {name:?}") }),
        (None, None) => Err(CliError { code: EXIT_INPUT, message: "give a projection file or --fixture".into() }),
    }
}

fn write_svg(path: &Option<PathBuf>, region: &tilings::TriangularRegion) -> Result<(), CliError> {
    if let Some(p) = path {
        std::fs::write(p, region.to_svg(24.0)).map_err(Error::from)?;
    }
    Ok(())
}

/// Runs a parsed command; returns the report and the exit code.
pub fn execute(cli: &Cli) -> Result<(Value, i32), CliError> {
    let mut inputs = Inputs(BTreeMap::new());
    let deep = cli.deep;
    let (name, results, code) = match &cli.command {
        Command::Luc { map, stats: _, list, limit, dual } => {
            let m = parse_map_value(&inputs.read(map)?)?;
            let hist = lucas::special_histogram(&m);
            let count: u64 = hist.iter().sum();
            let mut r = json!({ "count": count.to_string(), "m": big(&lucas::weighted_sum(&hist)) });
            if *dual {
                r["m_dual"] = big(&lucas::weighted_sum(&lucas::dual_special_histogram(&m)));
            }
            if *list {
                let shown: Vec<Value> = enumerate_lucas(&m)
                    .take(limit.unwrap_or(usize::MAX))
                    .map(|w| {
                        let mut c = w.coloring.to_json(&m);
                        c["special"] = json!(lucas::special_count(&m, &w));
                        c
                    })
                    .collect();
                r["colorings"] = Value::Array(shown);
            }
            ("luc", r, EXIT_OK)
        }
        Command::Blowup { map, dot } => {
            let m = parse_map_value(&inputs.read(map)?)?;
            let b = matchings::blow_up(&m)?;
            let report = matchings::verify_theorem5(&m)?;
            let mut r = json!({
                "map": b.result.to_json(),
                "vertex_origin": b.vertex_origin,
                "m_of_g": big(&report.m_of_g),
                "matchings": big(&report.matchings_of_blow_up),
                "equal": report.equal,
            });
            if *dot {
                r["dot"] = Value::String(b.result.to_dot());
            }
            ("blowup", r, if report.equal { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Match { graph, list, limit } => {
            let (g, _) = graph_of(&inputs.read(graph)?)?;
            let mut r = json!({
                "vertices": g.num_vertices(),
                "edges": g.edges().len(),
                "matchings": big(&count_perfect_matchings(&g).0),
            });
            if *list {
                r["list"] = json!(enumerate_perfect_matchings(&g, Some(*limit))?);
            }
            ("match", r, EXIT_OK)
        }
        Command::Statesum { graph, distinguished } => {
            let (g, _) = graph_of(&inputs.read(graph)?)?;
            guard("distinguished vertices", distinguished.len() as u64, 12, deep)?;
            let s = state_sum(&g, distinguished)?;
            ("statesum", s.to_json(), EXIT_OK)
        }
        Command::Asm { action } => match action {
            AsmCommand::Enum { n, count_only } => {
                guard("n", *n as u64, 6, deep)?;
                let all = asm_grid::enumerate_asms(*n)?;
                let mut r = json!({ "n": n, "count": all.len().to_string() });
                if !count_only {
                    r["asms"] = Value::Array(all.iter().map(|a| json!(a.rows())).collect());
                }
                ("asm enum", r, EXIT_OK)
            }
            AsmCommand::ToColoring { asm } => {
                let a = AsmMatrix::from_json(&inputs.read(asm)?.to_string())?;
                let grid = asm_grid::grid_graph(a.n())?;
                let c = asm_grid::asm_to_coloring(&grid, &a)?;
                let r = json!({ "n": a.n(), "map": grid.map().to_json(), "coloring": c.coloring().to_json(grid.map()) });
                ("asm to-coloring", r, EXIT_OK)
            }
            AsmCommand::FromColoring { n, coloring } => {
                let grid = asm_grid::grid_graph(*n)?;
                let value = inputs.read(coloring)?;
                let doc = value.get("coloring").unwrap_or(&value);
                let c = RestrictedColoring::new(&grid, EdgeColoring::from_json(grid.map(), doc)?)?;
                let a = asm_grid::coloring_to_asm(&grid, &c)?;
                ("asm from-coloring", a.to_json(), EXIT_OK)
            }
        },
        Command::Aztec { n, graph } => {
            guard("n", *n as u64, 12, deep)?;
            let g = asm_grid::aztec_dual(*n)?;
            let mut r = json!({ "n": n, "squares": g.num_vertices(), "matchings": big(&count_perfect_matchings(&g).0) });
            if *graph {
                r["dual"] = g.to_json();
            }
            ("aztec", r, EXIT_OK)
        }
        Command::Region { kind } => match kind {
            RegionCommand::Hex { a, b, c, out } => {
                guard("a+b+c", (*a + *b + *c) as u64, 18, deep)?;
                let region = tilings::hexagon_region(*a, *b, *c)?;
                write_svg(&out.svg, &region)?;
                let tilings = region.tilings();
                let formula = tilings::macmahon(*a, *b, *c);
                let mut r = json!({
                    "cells": region.cells().len(),
                    "tilings": big(&tilings),
                    "macmahon": big(&formula),
                    "equal": tilings == formula,
                });
                if out.cells {
                    r["region"] = region.to_json();
                }
                ("region hex", r, if tilings == formula { EXIT_OK } else { EXIT_FAIL })
            }
            RegionCommand::Ta { a, out } => {
                let region = tilings::ta_region(*a)?;
                write_svg(&out.svg, &region)?;
                let t = tilings::t_graph(*a)?;
                let mut r = json!({
                    "a": a,
                    "cells": region.cells().len(),
                    "tilings": big(&region.tilings()),
                    "t_graph": t.map.to_json(),
                });
                if out.cells {
                    r["region"] = region.to_json();
                }
                ("region ta", r, EXIT_OK)
            }
        },
        Command::Karoubi(arg) => {
            let (label, p) = projection(arg.proj.as_deref(), arg.fixture.as_deref(), &mut inputs)?;
            guard("crossings", p.crossings() as u64, 10, deep)?;
            let rep = karoubi::verify_theorem2(&p)?;
            let mut r = rep.to_json();
            r["projection"] = json!(label);
            r["crossings"] = json!(p.crossings());
            r["link_components"] = json!(karoubi::link_components(&p));
            ("karoubi", r, if rep.equal { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Verify(v) => {
            let (r, ok) = verify(v, deep, &mut inputs)?;
            ("verify", r, if ok { EXIT_OK } else { EXIT_FAIL })
        }
    };
    let report = json!({ "command": name, "inputs": inputs.0, "results": results });
    Ok((report, code))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn verify(v: &VerifyArgs, deep: bool, inputs: &mut Inputs) -> Result<(Value, bool), CliError> {
    let missing = |flag: &str| CliError { code: EXIT_INPUT, message: format!("identity {} needs {flag}", v.identity) };
    match v.identity {
        1 => {
            let n = v.n.ok_or_else(|| missing("--n"))?;
            guard("n", n as u64, 3, deep)?;
            let r = asm_grid::verify_theorem1(n)?;
            Ok((
                json!({
                    "identity": 1, "n": n,
                    "aztec_matchings": big(&r.matchings),
                    "asm_plus_sum": big(&r.plus_sum),
                    "asm_minus_sum": big(&r.minus_sum),
                    "verdict": verdict(r.all_equal),
                }),
                r.all_equal,
            ))
        }
        2 => {
            let (label, p) = projection(v.proj.as_deref().or(v.map.as_deref()), v.fixture.as_deref(), inputs)?;
            guard("crossings", p.crossings() as u64, 10, deep)?;
            let r = karoubi::verify_theorem2(&p)?;
            let mut out = r.to_json();
            out["identity"] = json!(2);
            out["projection"] = json!(label);
            out["verdict"] = json!(verdict(r.equal));
            Ok((out, r.equal))
        }
        3 => {
            let n = v.n.ok_or_else(|| missing("--n"))?;
            guard("n", n as u64, 4, deep)?;
            let grid = asm_grid::grid_graph(n)?;
            let asms = asm_grid::enumerate_asms(n)?;
            let colorings = asm_grid::enumerate_restricted(&grid)?;
            let forward = asms.iter().all(|a| {
                asm_grid::asm_to_coloring(&grid, a)
                    .and_then(|c| asm_grid::coloring_to_asm(&grid, &c))
                    .is_ok_and(|b| &b == a)
            });
            let backward = colorings.iter().all(|c| {
                asm_grid::coloring_to_asm(&grid, c)
                    .and_then(|a| asm_grid::asm_to_coloring(&grid, &a))
                    .is_ok_and(|d| &d == c)
            });
            let ok = asms.len() == colorings.len() && forward && backward;
            Ok((
                json!({
                    "identity": 3, "n": n,
                    "asms": asms.len().to_string(),
                    "restricted_colorings": colorings.len().to_string(),
                    "asm_round_trip": forward,
                    "coloring_round_trip": backward,
                    "verdict": verdict(ok),
                }),
                ok,
            ))
        }
        4 => {
            let a = v.a.ok_or_else(|| missing("--a"))?;
            guard("a", a as u64, 5, deep)?;
            let r = tilings::verify_theorem4(a, true)?;
            let mut out = r.to_json();
            out["identity"] = json!(4);
            out["verdict"] = json!(verdict(r.all_equal));
            Ok((out, r.all_equal))
        }
        _ => {
            let m = match (&v.map, v.a) {
                (Some(p), _) => parse_map_value(&inputs.read(p)?)?,
                (None, Some(a)) => {
                    guard("a", a as u64, 4, deep)?;
                    tilings::t_graph(a)?.map
                }
                (None, None) => return Err(missing("--map or --a")),
            };
            let r = matchings::verify_theorem5(&m)?;
            Ok((
                json!({
                    "identity": 5,
                    "m_of_g": big(&r.m_of_g),
                    "blow_up_matchings": big(&r.matchings_of_blow_up),
                    "verdict": verdict(r.equal),
                }),
                r.equal,
            ))
        }
    }
}

/// Parses `args`, runs, prints, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    if let Some(jobs) = cli.jobs {
        // a second initialisation (tests running in one process) is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    let start = Instant::now();
    match execute(&cli) {
        Ok((mut report, code)) => {
            if cli.timing {
                report["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
            }
            println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
            code
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}
