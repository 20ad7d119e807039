use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use lcdgraph::bounds::{self, bound_dual_minwt_a, bound_dual_minwt_a_min, bound_dual_minwt_ai, bound_dual_minwt_ai_min};
use lcdgraph::code::DEFAULT_BUDGET;
use lcdgraph::correspondence::{code_from_graph_f2, code_from_twograph_f3, graph_from_code_f2, graph_from_code_f3};
use lcdgraph::graph::{canonical_form, paley, AdjacencyKind};
use lcdgraph::io;
use lcdgraph::matrix::p_rank;
use lcdgraph::strategy::equivalence_strategies;
use lcdgraph::twograph::{switch, switching_class_iso, TwoGraph};
use lcdgraph::verify::{format_report, run_suites, write_repro_bundles, VerifyConfig, ALL_SUITES};
use lcdgraph::{Error, LinearCode, SimpleGraph, SrgParams};

/// LCD codes, their projectors, and the graphs behind them.
#[derive(Parser)]
#[command(name = "lcdgraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Out {
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Budget {
    /// Maximum number of codewords to enumerate.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Field {
    #[value(name = "2")]
    F2,
    #[value(name = "3")]
    F3,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertTo {
    Graph,
    Exmat,
}

#[derive(Subcommand)]
enum Command {
    /// Paley graph of order q.
    Paley {
        q: u32,
        #[command(flatten)]
        out: Out,
    },
    /// Row span of an idempotent adjacency matrix (0/1 over F2, ∓1 over F3).
    CodeFromGraph {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "2")]
        field: Field,
        /// Also compute the minimum weight.
        #[arg(long)]
        minweight: bool,
        #[command(flatten)]
        budget: Budget,
        #[command(flatten)]
        out: Out,
    },
    /// Graph whose adjacency matrix is the projector of the code.
    GraphFromCode {
        code: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    Minweight {
        code: PathBuf,
        #[command(flatten)]
        budget: Budget,
    },
    /// Weight distribution as CSV.
    Weightdist {
        code: PathBuf,
        #[command(flatten)]
        budget: Budget,
        #[command(flatten)]
        out: Out,
    },
    Dual {
        code: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Whether the code meets its dual trivially.
    Lcd { code: PathBuf },
    /// Orthogonal projector as a matrix file.
    Projector {
        code: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Delete coordinates (1-indexed).
    Puncture {
        code: PathBuf,
        #[arg(required = true)]
        coords: Vec<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// Keep codewords vanishing on the coordinates (1-indexed), then delete them.
    Shorten {
        code: PathBuf,
        #[arg(required = true)]
        coords: Vec<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// Decide monomial equivalence of two codes.
    Equiv {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value = "auto")]
        method: String,
    },
    /// Group graph files into isomorphism classes.
    Iso {
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
    },
    /// Two-graph of a graph; with --representative, a graph of a two-graph file.
    Twograph {
        input: PathBuf,
        #[arg(long)]
        representative: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Seidel switching on a vertex subset, or with --iso a switching-class test.
    Switch {
        graph: PathBuf,
        vertices: Vec<usize>,
        #[arg(long, conflicts_with = "vertices")]
        iso: Option<PathBuf>,
        #[command(flatten)]
        out: Out,
    },
    /// Dual minimum-weight bounds from `v k lambda mu` or a graph file.
    Bounds {
        #[arg(required = true, num_args = 1..=4)]
        args: Vec<String>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Rank over F_p of an integer matrix or a graph's adjacency matrix.
    Prank {
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        field: u32,
        /// Use the ∓1 adjacency matrix of a graph.
        #[arg(long)]
        pm1: bool,
    },
    /// Run self-check suites (`paper` runs all).
    Verify {
        #[arg(default_value = ALL_SUITES)]
        suites: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Where reproduction bundles for failed claims go.
        #[arg(long, default_value = "verify-failures")]
        bundle_dir: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Convert a graph between edge-list and matrix files.
    Convert {
        input: PathBuf,
        #[arg(long, value_enum)]
        to: ConvertTo,
        #[command(flatten)]
        out: Out,
    },
}

/// A command ran but a checked property failed.
#[derive(Debug)]
struct Failed(String);

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failed {}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_code(path: &Path) -> Result<LinearCode> {
    io::parse_code(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn load_graph(path: &Path) -> Result<SimpleGraph> {
    io::parse_graph(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn emit(out: &Out, text: &str) -> Result<()> {
    match &out.out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn zero_indexed(coords: &[usize], n: usize) -> Result<Vec<usize>> {
    coords
        .iter()
        .map(|&c| {
            if c == 0 || c > n {
                bail!(Error::CoordinateOutOfRange { coordinate: c, length: n })
            }
            Ok(c - 1)
        })
        .collect()
}

fn code_summary(c: &LinearCode, d: Option<usize>) -> Result<String> {
    let params = match d {
        Some(d) => format!("[{},{},{d}]", c.len(), c.dim()),
        None => format!("[{},{}]", c.len(), c.dim()),
    };
    Ok(if c.is_binary() {
        format!("{params} even={} lcd={}", c.is_even()?, c.is_lcd())
    } else {
        format!("{params} lcd={} two-graph={}", c.is_lcd(), graph_from_code_f3(c).is_ok())
    })
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Paley { q, out } => emit(&out, &io::write_graph(&paley(q)?)),
        Command::CodeFromGraph { graph, field, minweight, budget, out } => {
            let g = load_graph(&graph)?;
            let c = match field {
                Field::F2 => code_from_graph_f2(&g)?,
                Field::F3 => code_from_twograph_f3(&g)?,
            };
            let d = if minweight && c.dim() > 0 { Some(c.min_weight_with_budget(budget.budget)?) } else { None };
            println!("{}", code_summary(&c, d)?);
            if let Some(p) = &out.out {
                fs::write(p, io::write_code(&c)).with_context(|| format!("cannot write {}", p.display()))?;
            }
            Ok(())
        }
        Command::GraphFromCode { code, out } => {
            let c = load_code(&code)?;
            let g = if c.is_binary() { graph_from_code_f2(&c)? } else { graph_from_code_f3(&c)? };
            emit(&out, &io::write_graph(&g))
        }
        Command::Minweight { code, budget } => {
            println!("{}", load_code(&code)?.min_weight_with_budget(budget.budget)?);
            Ok(())
        }
        Command::Weightdist { code, budget, out } => {
            emit(&out, &load_code(&code)?.weight_distribution_with_budget(budget.budget)?.to_csv())
        }
        Command::Dual { code, out } => emit(&out, &io::write_code(&load_code(&code)?.dual())),
        Command::Lcd { code } => {
            let c = load_code(&code)?;
            println!("lcd={} hull={}", c.is_lcd(), c.hull_dim());
            Ok(())
        }
        Command::Projector { code, out } => emit(&out, &io::write_exmat(&load_code(&code)?.projector()?)),
        Command::Puncture { code, coords, out } => {
            let c = load_code(&code)?;
            let idx = zero_indexed(&coords, c.len())?;
            emit(&out, &io::write_code(&c.puncture(&idx)?))
        }
        Command::Shorten { code, coords, out } => {
            let c = load_code(&code)?;
            let idx = zero_indexed(&coords, c.len())?;
            emit(&out, &io::write_code(&c.shorten(&idx)?))
        }
        Command::Equiv { a, b, method } => {
            let (c1, c2) = (load_code(&a)?, load_code(&b)?);
            let registry = equivalence_strategies();
            let s = registry.get(&method)?;
            if !s.applies(&c1, &c2) {
                bail!(Error::NotApplicable(format!("method `{method}` does not handle these codes: {}", s.describe())));
            }
            println!("equivalent={}", s.decide(&c1, &c2)?);
            Ok(())
        }
        Command::Iso { graphs } => {
            let mut forms: Vec<SimpleGraph> = Vec::new();
            let mut lines = Vec::new();
            for path in &graphs {
                let f = canonical_form(&load_graph(path)?)?.graph;
                let class = forms.iter().position(|x| *x == f).unwrap_or_else(|| {
                    forms.push(f);
                    forms.len() - 1
                });
                lines.push(format!("{} class={class}", path.display()));
            }
            println!("classes={}", forms.len());
            if graphs.len() == 2 {
                println!("isomorphic={}", forms.len() == 1);
            }
            for l in lines {
                println!("{l}");
            }
            Ok(())
        }
        Command::Twograph { input, representative, out } => {
            if representative {
                let t = io::parse_twograph(&read(&input)?).with_context(|| format!("in {}", input.display()))?;
                emit(&out, &io::write_graph(&t.representative()))
            } else {
                emit(&out, &io::write_twograph(&TwoGraph::from_graph(&load_graph(&input)?)))
            }
        }
        Command::Switch { graph, vertices, iso, out } => {
            let g = load_graph(&graph)?;
            match iso {
                Some(other) => {
                    let h = load_graph(&other)?;
                    match switching_class_iso(&g, &h)? {
                        Some(w) => {
                            let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                            println!("switching-isomorphic=true subset={} phi={}", join(&w.subset), join(&w.phi));
                        }
                        None => println!("switching-isomorphic=false"),
                    }
                    Ok(())
                }
                None => emit(&out, &io::write_graph(&switch(&g, &vertices)?)),
            }
        }
        Command::Bounds { args, budget } => bounds_cmd(&args, budget.budget),
        Command::Prank { input, field, pm1 } => {
            let text = read(&input)?;
            let header_fields = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).map_or(0, |l| l.split_whitespace().count());
            let m = if header_fields == 4 && !pm1 {
                io::parse_exmat(&text).with_context(|| format!("in {}", input.display()))?.to_int()
            } else {
                let kind = if pm1 { AdjacencyKind::Pm1 } else { AdjacencyKind::ZeroOne };
                load_graph(&input)?.adjacency(kind)
            };
            println!("{}", p_rank(&m, field)?);
            Ok(())
        }
        Command::Verify { suites, seed, jobs, samples, bundle_dir, out } => {
            let cfg = VerifyConfig { seed, samples };
            let claims = run_suites(&suites, &cfg, jobs)?;
            emit(&out, &format_report(&claims))?;
            let failed = claims.iter().filter(|c| !c.passed).count();
            if failed > 0 {
                let dirs = write_repro_bundles(&claims, &bundle_dir)?;
                for d in dirs {
                    eprintln!("reproduction bundle: {}", d.display());
                }
                return Err(Failed(format!("{failed} claims failed")).into());
            }
            Ok(())
        }
        Command::Convert { input, to, out } => {
            let g = load_graph(&input)?;
            let text = match to {
                ConvertTo::Graph => io::write_graph(&g),
                ConvertTo::Exmat => io::write_exmat(&g.adjacency_over(AdjacencyKind::ZeroOne, &lcdgraph::FieldSpec::f2())),
            };
            emit(&out, &text)
        }
    }
}

fn bounds_cmd(args: &[String], budget: u64) -> Result<()> {
    match args.len() {
        4 => {
            let n: Vec<usize> = args.iter().map(|a| a.parse().with_context(|| format!("`{a}` is not a count"))).collect::<Result<_>>()?;
            let p = SrgParams::new(n[0], n[1], n[2], n[3]);
            if !p.is_feasible() {
                bail!(Error::BadInput(format!("{p} violates k(k - λ - 1) = (v - k - 1)μ")));
            }
            let show = |b: lcdgraph::Result<bounds::Bound>| match b {
                Ok(b) => format!("{b} (ceil {})", bounds::ceil(&b)),
                Err(e) => format!("undefined ({e})"),
            };
            println!("{p}");
            println!("A:   max {}  min {}", show(bound_dual_minwt_a(&p)), show(bound_dual_minwt_a_min(&p)));
            println!("A+I: max {}  min {}", show(Ok(bound_dual_minwt_ai(&p))), show(Ok(bound_dual_minwt_ai_min(&p))));
            Ok(())
        }
        1 => {
            let g = load_graph(Path::new(&args[0]))?;
            println!("{}", bounds::verify_bounds_with_budget(&g, budget)?);
            if let Ok(parity) = bounds::parity_corollary_check(&g) {
                println!("  odd valency: dual distance {} is even={}", parity.dual_min_weight.map_or("none".into(), |d| d.to_string()), parity.holds);
                if !parity.holds {
                    return Err(Failed("odd valency with odd dual distance".into()).into());
                }
            }
            Ok(())
        }
        _ => bail!(Usage("bounds takes `v k lambda mu` or one graph file".into())),
    }
}

#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// 1 for failed checks, 2 for bad input or usage.
fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<Failed>().is_some() {
        return 1;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::TheoremViolation(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
