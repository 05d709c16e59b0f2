//! `surfcolor`: command-line front end.
//!
//! Exit status 0 on success, 1 when the answer is negative (no coloring, no
//! non-contractible cycle, an invalid coloring), 2 when nothing could be
//! computed. Errors are printed as `error[<kind>]: <message>`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use surfcolor_core::coloring::threshold::{self, Family};
use surfcolor_core::coloring::{
    color_000_9g4, color_22_9g4, solve_exact, verify_coloring, ColoringError, DefectVector, SolveOptions, SolveOutcome,
    UnsatReason,
};
use surfcolor_core::constructions::{self as cons, ConstructionError, DescartesSets, GeneratedGraph};
use surfcolor_core::discharging::{self, DischargingError, Scheme};
use surfcolor_core::embedding::{EmbeddedGraph, EmbeddingError};
use surfcolor_core::format::{self, FormatError, GraphInput};
use surfcolor_core::graph::SimpleGraph;
use surfcolor_core::planarize::{self, PlanarizeError};
use surfcolor_core::topology::{self, TopologyError};
use thiserror::Error;

#[derive(Debug, Error)]
enum CliError {
    #[error("error[io]: {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("error[format]: {0}")]
    Format(String),
    #[error("error[precondition]: {0}")]
    Precondition(String),
    #[error("error[budget]: search gave up after {0} nodes")]
    Budget(u64),
    #[error("error[internal]: {0}")]
    Internal(String),
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Format(e.to_string())
    }
}

impl From<EmbeddingError> for CliError {
    fn from(e: EmbeddingError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<TopologyError> for CliError {
    fn from(e: TopologyError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<PlanarizeError> for CliError {
    fn from(e: PlanarizeError) -> Self {
        match e {
            PlanarizeError::Invariant(m) => CliError::Internal(m),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<ColoringError> for CliError {
    fn from(e: ColoringError) -> Self {
        match e {
            ColoringError::Invariant(m) => CliError::Internal(m),
            ColoringError::Planarize(p) => p.into(),
            ColoringError::Precondition(m) => CliError::Precondition(m),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Invariant(m) => CliError::Internal(m),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<DischargingError> for CliError {
    fn from(e: DischargingError) -> Self {
        match e {
            DischargingError::NotConserved(m) => CliError::Internal(m),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "surfcolor", version, about = "Graphs on surfaces: genus, cycles, planarizing subgraphs, defective colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pipeline {
    #[value(name = "000")]
    Zero,
    #[value(name = "22")]
    TwoTwo,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Sprout,
    G1,
    G2,
    Gk,
    Not1kk,
    Descartes6,
    Twostar7,
}

#[derive(Subcommand)]
enum Command {
    /// Euler genus of an embedding.
    Genus { file: PathBuf },
    /// Facial walks of an embedding.
    Faces { file: PathBuf },
    /// A shortest non-contractible cycle.
    Ncc { file: PathBuf },
    /// Classify a cycle given as comma-separated vertices.
    Classify {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        cycle: Vec<usize>,
    },
    /// Planarizing subgraph containing the root (and `--with`, if given).
    Planarize {
        file: PathBuf,
        #[arg(long)]
        root: usize,
        #[arg(long)]
        with: Option<usize>,
    },
    /// Find a defective coloring, exactly or through a pipeline.
    Color {
        file: PathBuf,
        #[arg(long, required_unless_present = "pipeline", conflicts_with = "pipeline")]
        defects: Option<String>,
        /// `vertex=color`, colors numbered from 1.
        #[arg(long = "pin")]
        pins: Vec<String>,
        #[arg(long)]
        pipeline: Option<Pipeline>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Check a coloring file against a graph.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Defect threshold for a family at Euler genus g.
    Threshold {
        #[arg(long)]
        family: String,
        #[arg(long)]
        genus: u64,
    },
    /// Build one of the extremal constructions.
    Generate {
        #[arg(long)]
        family: GenFamily,
        #[arg(long)]
        k: u64,
        /// Order of the complete graph sprouted by `--family sprout`.
        #[arg(long, default_value_t = 4)]
        base_n: usize,
        /// Number of 7-tuples to materialize for `descartes6`.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        count_only: bool,
        /// Refuse to materialize all of `descartes6` above this many edges.
        #[arg(long, default_value_t = 5_000_000)]
        max_edges: u128,
        /// Run the solver on the non-colorability claim with this node budget.
        #[arg(long)]
        verify_budget: Option<u64>,
        /// Write the edge list here and the metadata to `<out>.meta`.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run a discharging scheme and report charges and transfers.
    Audit {
        file: PathBuf,
        #[arg(long)]
        scheme: String,
        #[arg(long = "K")]
        big_k: String,
    },
}

enum Outcome {
    Yes(String),
    No(String),
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load_graph(path: &Path) -> Result<GraphInput, CliError> {
    Ok(format::parse_graph(&read(path)?)?)
}

fn load_embedding(path: &Path) -> Result<EmbeddedGraph, CliError> {
    match load_graph(path)? {
        GraphInput::Embedded(g) => Ok(g),
        GraphInput::Plain(_) => Err(CliError::Precondition(format!("{} is an edge list; an embedding is needed", path.display()))),
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn parse_pin(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Format(format!("bad pin `{s}`, expected vertex=color"));
    let (v, c) = s.split_once('=').ok_or_else(bad)?;
    let v: usize = v.trim().parse().map_err(|_| bad())?;
    let c: usize = c.trim().parse().map_err(|_| bad())?;
    if c == 0 {
        return Err(CliError::Format("colors are numbered from 1".into()));
    }
    Ok((v, c - 1))
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Genus { file } => {
            let g = load_embedding(&file)?;
            Ok(Outcome::Yes(format!("eg {}\norientable {}\n", g.euler_genus()?, g.is_orientable()?)))
        }
        Command::Faces { file } => {
            let g = load_embedding(&file)?;
            let faces = g.faces();
            let mut out = format!("faces {}\n", faces.len());
            for (i, f) in faces.iter().enumerate() {
                out += &format!("f {i} degree {}: {}\n", f.degree(), join(&f.vertices));
            }
            Ok(Outcome::Yes(out))
        }
        Command::Ncc { file } => {
            let g = load_embedding(&file)?;
            match topology::shortest_noncontractible_cycle(&g)? {
                Some(c) => {
                    let class = topology::classify_cycle(&g, &c.vertices)?;
                    Ok(Outcome::Yes(format!("length {}\ncycle {}\nclass {class}\n", c.len(), join(&c.vertices))))
                }
                None => Ok(Outcome::No("NONE every cycle is contractible\n".into())),
            }
        }
        Command::Classify { file, cycle } => {
            let g = load_embedding(&file)?;
            Ok(Outcome::Yes(format!("{}\n", topology::classify_cycle(&g, &cycle)?)))
        }
        Command::Planarize { file, root, with } => {
            let g = load_embedding(&file)?;
            let p = match with {
                Some(w) => planarize::planarizing_subgraph_2pt(&g, root, w)?,
                None => planarize::planarizing_subgraph(&g, root)?,
            };
            let mut out = format!("eg {}\nh {}\nbound {}\nmax_neighbors {}\n", p.genus, join(&p.h_vertices), p.bound, p.max_neighbors_in_h);
            if let Some(case) = p.top_case {
                out += &format!("case {case}\n");
            }
            out += &format!("h_vertex {}\n", p.h_vertex);
            out += &format::print_edge_list(&p.quotient);
            Ok(Outcome::Yes(out))
        }
        Command::Color { file, defects, pins, pipeline, jobs, budget, out } => {
            let input = load_graph(&file)?;
            let options = SolveOptions {
                pins: pins.iter().map(|p| parse_pin(p)).collect::<Result<_, _>>()?,
                node_budget: budget,
                jobs,
                ..SolveOptions::default()
            };
            let (defects, coloring) = match pipeline {
                Some(kind) => {
                    if !options.pins.is_empty() {
                        return Err(CliError::Precondition("--pin cannot be combined with --pipeline".into()));
                    }
                    let g = input
                        .embedding()
                        .ok_or_else(|| CliError::Precondition("--pipeline needs an embedding".into()))?;
                    let r = match kind {
                        Pipeline::Zero => color_000_9g4(g, &options)?,
                        Pipeline::TwoTwo => color_22_9g4(g, &options)?,
                    };
                    (r.defects, r.coloring)
                }
                None => {
                    let d: DefectVector = defects.expect("clap requires --defects").parse()?;
                    match solve_exact(input.graph(), &d, &options)? {
                        SolveOutcome::Sat(c) => (d, c),
                        SolveOutcome::Unsat(UnsatReason::Exhausted { nodes }) => {
                            return Ok(Outcome::No(format!("UNSAT exhausted after {nodes} nodes\n")))
                        }
                        SolveOutcome::Unsat(UnsatReason::ContradictoryPins(why)) => {
                            return Ok(Outcome::No(format!("UNSAT pins: {why}\n")))
                        }
                        SolveOutcome::Aborted { nodes } => return Err(CliError::Budget(nodes)),
                    }
                }
            };
            let text = format::print_coloring(&defects, &coloring);
            match out {
                Some(path) => {
                    write(&path, &text)?;
                    Ok(Outcome::Yes(format!("SAT {}\n", path.display())))
                }
                None => Ok(Outcome::Yes(text)),
            }
        }
        Command::Verify { graph, coloring } => {
            let input = load_graph(&graph)?;
            let file = format::parse_coloring(&read(&coloring)?)?;
            let c = file.to_coloring(input.graph().vertex_count())?;
            let bad = verify_coloring(input.graph(), &file.defects, &c)?;
            if bad.is_empty() {
                Ok(Outcome::Yes(format!("VALID ({})\n", file.defects)))
            } else {
                let mut out = format!("INVALID {} violations\n", bad.len());
                for v in bad {
                    out += &format!("violation {v}\n");
                }
                Ok(Outcome::No(out))
            }
        }
        Command::Threshold { family, genus } => {
            let f: Family = family.parse()?;
            let t = threshold::threshold(f, genus)?;
            Ok(Outcome::Yes(format!("family {f}\neg {genus}\nexact {}\nvalue {:.9}\nK {}\n", t.exact, t.value, t.integer)))
        }
        Command::Generate { family, k, base_n, sample, seed, count_only, max_edges, verify_budget, out } => {
            if count_only {
                let (v, e) = closed_form_counts(family, k, base_n);
                return Ok(Outcome::Yes(format!("vertices {v}\nedges {e}\n")));
            }
            let mut gen = generate(family, k, base_n, sample, seed, max_edges)?;
            if let Some(budget) = verify_budget {
                let status = cons::verify_claim(&gen, &SolveOptions { node_budget: Some(budget), ..SolveOptions::default() })?;
                if let Some(claim) = gen.meta.claim.as_mut() {
                    claim.status = status;
                }
            }
            let meta = format::print_meta(&gen.meta);
            let edges = format::print_edge_list(&gen.graph);
            match out {
                Some(path) => {
                    write(&path, &edges)?;
                    let mut meta_path = path.clone().into_os_string();
                    meta_path.push(".meta");
                    write(Path::new(&meta_path), &meta)?;
                    Ok(Outcome::Yes(meta))
                }
                None => {
                    let header: String = meta.lines().map(|l| format!("# {l}\n")).collect();
                    Ok(Outcome::Yes(header + &edges))
                }
            }
        }
        Command::Audit { file, scheme, big_k } => {
            let g = load_embedding(&file)?;
            let scheme: Scheme = scheme.parse()?;
            let big_k = discharging::parse_threshold(&big_k)?;
            Ok(Outcome::Yes(discharging::audit(&g, scheme, &big_k)?.to_string()))
        }
    }
}

fn closed_form_counts(family: GenFamily, k: u64, base_n: usize) -> (u128, u128) {
    let wide = |(v, e): (u64, u64)| (v as u128, e as u128);
    match family {
        GenFamily::Sprout => {
            let n = base_n as u64;
            wide(cons::sprout_counts(n, n * n.saturating_sub(1) / 2, k))
        }
        GenFamily::G1 => wide(cons::sprout_counts(4, 6, k + 1)),
        GenFamily::G2 => wide(cons::sprout_counts(7, 21, k + 1)),
        GenFamily::Gk => wide(cons::gk_counts(k)),
        GenFamily::Not1kk => {
            let (v, e) = cons::hv_gadget_counts(k);
            wide((3 * v, 3 * e + 3))
        }
        GenFamily::Descartes6 => cons::descartes_counts(k),
        GenFamily::Twostar7 => wide(cons::two_star_counts(k)),
    }
}

fn generate(
    family: GenFamily,
    k: u64,
    base_n: usize,
    sample: Option<u64>,
    seed: u64,
    max_edges: u128,
) -> Result<GeneratedGraph, CliError> {
    if sample.is_some() && !matches!(family, GenFamily::Descartes6) {
        return Err(CliError::Precondition("--sample only applies to descartes6".into()));
    }
    Ok(match family {
        GenFamily::Sprout => cons::sprout(&SimpleGraph::complete(base_n), k)?,
        GenFamily::G1 => cons::g1(k)?,
        GenFamily::G2 => cons::g2(k)?,
        GenFamily::Gk => cons::gk_2kk(k)?,
        GenFamily::Not1kk => cons::not_1kk(k)?,
        GenFamily::Descartes6 => {
            let sets = match sample {
                Some(sets) => DescartesSets::Sample { sets, seed },
                None => DescartesSets::All { max_edges },
            };
            cons::descartes_girth6(k, sets)?
        }
        GenFamily::Twostar7 => cons::two_star_girth7(k)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Yes(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::No(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}
