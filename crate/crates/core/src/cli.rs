//! The `geodiam` command line.
//!
//! Exit codes: 0 success, 1 a "no" answer under `--strict`, 2 usage or input
//! errors, 3 a verification inconsistency.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{run_bench, BenchAlgo, CSV_HEADER};
use crate::campaign::{check_trials, diam2_campaign, verify_campaign};
use crate::diam2::{diam2_explain, FrontPair};
use crate::error::{Error, Result};
use crate::generate::{gen_random_hypergraph, gen_random_ov, gen_random_squares};
use crate::graph::{build_graph_bucketed, diameter, IntersectionGraph};
use crate::io::{hypergraph_from_text, ov_from_text, ShapeFile};
use crate::oracles::{verify_reduction, Instance};
use crate::reductions::hypergraph::HyperSemantics;
use crate::reductions::ov::OvMode;
use crate::reductions::{
    hyperclique_to_hypercubes, hypergraph_preprocess, ov_to_segments, ov_to_triangles, ov_to_unit_segments,
    realize_ga_balls, realize_gprime_a_segments, rotate_scale_to_cubes, ConstructionKind, InputKind,
};
use crate::scalar::format_scalar;
use crate::shape::{Shape, Square2};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "geodiam", version, about = "Diameter of geometric intersection graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Random orthogonal-vectors instance.
    GenOv {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Probability of a one bit.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::TwoSet)]
        mode: ModeArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Random unit squares on a 1/1024 grid in [0, window]^2.
    GenSquares {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        window: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Random 6-partite 3-uniform hypergraph.
    GenHypergraph {
        /// Vertices per part.
        #[arg(long)]
        n: usize,
        /// Probability of each transversal triple.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = SemanticsArg::Independent)]
        semantics: SemanticsArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Shapes realizing a hardness construction for an OV or hypergraph file.
    Reduce {
        #[arg(long)]
        kind: ConstructionKind,
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Intersection graph of a shape file.
    Graph {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Exact diameter of a shape file or graph dump.
    Diameter {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Decide diameter <= 2 for unit squares.
    Diam2 {
        #[arg(long = "in")]
        input: PathBuf,
        /// Print a center pair without a common neighbor on a "no".
        #[arg(long)]
        explain: bool,
        /// Exit with status 1 on a "no".
        #[arg(long)]
        strict: bool,
    },
    /// Check a construction against its brute-force oracle.
    Verify {
        /// A construction kind, or `diam2` for the fast/naive Diameter-2 check.
        #[arg(long)]
        kind: String,
        #[arg(long = "in", conflicts_with = "random", required_unless_present = "random")]
        input: Option<PathBuf>,
        /// Campaign of seeded instances: N D TRIALS SEED.
        #[arg(long, num_args = 4, value_names = ["N", "D", "TRIALS", "SEED"])]
        random: Option<Vec<u64>>,
        /// Only print inconsistent records.
        #[arg(long)]
        quiet: bool,
    },
    /// Time the Diameter-2 deciders; CSV on stdout.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "diam2-fast")]
        algos: Vec<BenchAlgo>,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Allow the naive decider above its size guard.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args, Debug)]
struct OutArg {
    /// Output file; stdout when absent.
    #[arg(long = "out")]
    path: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    TwoSet,
    SingleSet,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SemanticsArg {
    Clique,
    Independent,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "geodiam: {e}");
            EXIT_USAGE
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::usage(format!("{}: {e}", path.display())))
    }
}

fn emit(out: &OutArg, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match &out.path {
        Some(p) => fs::write(p, text).map_err(|e| Error::usage(format!("{}: {e}", p.display()))),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

fn instance_from_text(kind: ConstructionKind, text: &str) -> Result<Instance> {
    Ok(match kind.input() {
        InputKind::Hypergraph => Instance::Hypergraph(hypergraph_from_text(text)?),
        _ => Instance::Ov(ov_from_text(text)?),
    })
}

/// Graph of a shape file or a graph dump, chosen by the header.
fn load_graph(text: &str) -> Result<IntersectionGraph> {
    if text.starts_with("graph ") {
        return IntersectionGraph::from_dump(text);
    }
    let file = ShapeFile::parse(text)?;
    if file.shapes.is_empty() {
        return IntersectionGraph::from_edges(0, []);
    }
    let g = build_graph_bucketed(&file.shapes)?;
    match file.labels {
        Some(l) => g.with_labels(l),
        None => Ok(g),
    }
}

fn load_squares(text: &str) -> Result<Vec<Square2>> {
    ShapeFile::parse(text)?
        .shapes
        .into_iter()
        .enumerate()
        .map(|(i, s)| match s {
            Shape::Square(sq) => Ok(sq),
            other => Err(Error::usage(format!(
                "shape {i} is a {}, expected a square",
                other.family().name()
            ))),
        })
        .collect()
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match command {
        Command::GenOv {
            n,
            d,
            p,
            seed,
            mode,
            out,
        } => {
            let mode = match mode {
                ModeArg::TwoSet => OvMode::TwoSet,
                ModeArg::SingleSet => OvMode::SingleSet,
            };
            emit(
                &out,
                &crate::io::ov_to_text(&gen_random_ov(n, d, p, seed, mode)?),
                stdout,
            )?;
        }
        Command::GenSquares { n, window, seed, out } => {
            let shapes = gen_random_squares(n, window, seed)?
                .into_iter()
                .map(Shape::Square)
                .collect();
            emit(&out, &ShapeFile::new(shapes, None)?.to_text(), stdout)?;
        }
        Command::GenHypergraph {
            n,
            p,
            seed,
            semantics,
            out,
        } => {
            let sem = match semantics {
                SemanticsArg::Clique => HyperSemantics::CliqueInput,
                SemanticsArg::Independent => HyperSemantics::IndependentInput,
            };
            emit(
                &out,
                &crate::io::hypergraph_to_text(&gen_random_hypergraph(n, p, seed, sem)?),
                stdout,
            )?;
        }
        Command::Reduce { kind, input, out } => {
            let instance = instance_from_text(kind, &read_input(&input)?)?;
            let c = match (kind, &instance) {
                (ConstructionKind::Segments, Instance::Ov(o)) => ov_to_segments(o)?,
                (ConstructionKind::UnitSegments, Instance::Ov(o)) => ov_to_unit_segments(o)?,
                (ConstructionKind::Triangles, Instance::Ov(o)) => ov_to_triangles(o)?,
                (ConstructionKind::Balls, Instance::Ov(o)) => realize_ga_balls(o)?,
                (ConstructionKind::AxparSegments, Instance::Ov(o)) => realize_gprime_a_segments(o)?,
                (ConstructionKind::CubesRot, Instance::Ov(o)) => {
                    let rot = rotate_scale_to_cubes(&realize_ga_balls(o)?)?;
                    writeln!(
                        stderr,
                        "cubes-rot: {} intended edges missing, {} extra edges",
                        rot.discrepancy.missing.len(),
                        rot.discrepancy.extra.len()
                    )?;
                    rot.construction
                }
                (ConstructionKind::Hypercubes, Instance::Hypergraph(h)) => {
                    hyperclique_to_hypercubes(&hypergraph_preprocess(h))?
                }
                _ => unreachable!("instance_from_text follows kind.input()"),
            };
            writeln!(stderr, "{kind}: {} shapes, threshold {}", c.shapes.len(), c.threshold)?;
            let labels = c.labels().to_vec();
            emit(&out, &ShapeFile::new(c.shapes, Some(labels))?.to_text(), stdout)?;
        }
        Command::Graph { input, out } => {
            emit(&out, &load_graph(&read_input(&input)?)?.to_dump(), stdout)?;
        }
        Command::Diameter { input } => {
            writeln!(stdout, "{}", diameter(&load_graph(&read_input(&input)?)?)?)?;
        }
        Command::Diam2 { input, explain, strict } => {
            let outcome = diam2_explain(&load_squares(&read_input(&input)?)?)?;
            writeln!(stdout, "{}", if outcome.at_most_2 { "YES" } else { "NO" })?;
            if let (true, Some(w)) = (explain, &outcome.witness) {
                let pair = match w.pair {
                    FrontPair::BlfTrf => "blf-trf",
                    FrontPair::TlfBrf => "tlf-brf",
                };
                let pt = |p: &crate::shape::Point2| format!("({}, {})", format_scalar(&p.x), format_scalar(&p.y));
                writeln!(stdout, "pair={pair} row={} col={}", w.row, w.col)?;
                writeln!(stdout, "centers {} {}", pt(&w.row_point), pt(&w.col_point))?;
            }
            if strict && !outcome.at_most_2 {
                return Ok(EXIT_NO);
            }
        }
        Command::Verify {
            kind,
            input,
            random,
            quiet,
        } => return verify(&kind, input, random, quiet, stdout),
        Command::Bench {
            algos,
            sizes,
            trials,
            seed,
            force,
            out,
        } => {
            let records = run_bench(&algos, &sizes, trials, seed, force)?;
            let mut text = format!("{CSV_HEADER}\n");
            for r in &records {
                text.push_str(&r.csv_row());
                text.push('\n');
            }
            emit(&out, &text, stdout)?;
        }
    }
    Ok(EXIT_OK)
}

fn verify(
    kind: &str,
    input: Option<PathBuf>,
    random: Option<Vec<u64>>,
    quiet: bool,
    stdout: &mut dyn Write,
) -> Result<i32> {
    let mut records: Vec<(bool, String)> = Vec::new();
    if kind == "diam2" {
        if let Some(path) = input {
            let squares = load_squares(&read_input(&path)?)?;
            let fast = diam2_explain(&squares)?.at_most_2;
            let naive = crate::oracles::diam2_naive(&squares)?;
            records.push((
                fast == naive,
                format!(
                    "kind=diam2\nfast={fast}\nnaive={naive}\nconsistent={}\n\n",
                    fast == naive
                ),
            ));
        } else if let Some(r) = random {
            check_trials(r[2] as usize)?;
            for rec in diam2_campaign(r[0] as usize, r[2] as usize, r[3])? {
                records.push((rec.consistent(), rec.to_text()));
            }
        }
    } else {
        let kind: ConstructionKind = kind.parse()?;
        let reports = if let Some(path) = input {
            vec![verify_reduction(kind, &instance_from_text(kind, &read_input(&path)?)?)?]
        } else {
            let r = random.expect("clap requires --in or --random");
            check_trials(r[2] as usize)?;
            verify_campaign(kind, r[0] as usize, r[1] as usize, r[2] as usize, r[3])?
        };
        records.extend(reports.iter().map(|r| (r.consistent, r.to_text())));
    }
    let bad = records.iter().filter(|(ok, _)| !ok).count();
    for (ok, text) in &records {
        if !quiet || !ok {
            stdout.write_all(text.as_bytes())?;
        }
    }
    writeln!(stdout, "# {} records, {} inconsistent", records.len(), bad)?;
    Ok(if bad == 0 { EXIT_OK } else { EXIT_INCONSISTENT })
}
