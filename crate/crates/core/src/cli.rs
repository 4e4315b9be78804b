//! The `ultratree` command line.
//!
//! [`run`] parses arguments, executes one verb and returns the exit code:
//! 0 on success, 1 when the input is invalid or a check fails, 2 on usage
//! errors and 3 when a capacity fence refuses the input. Setting
//! `ULTRATREE_MAX_N` lowers (never raises) the fences of the exhaustive
//! verbs.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::explorer::{
    check_closed_balls, check_con3, check_hol, check_suite, check_theorem_suite, is_ut, random_labeled_tree,
    CampaignReport, ClosedBallSource, ExplorerError, ENUMERATION_LIMIT, HOL_LIMIT, IS_UT_LIMIT,
};
use crate::io::{
    diametrical_dot, matrix_to_csv, parse_matrix_csv, parse_raw_tree_json, parse_tree_json, report_to_json,
    tree_to_json, IoError,
};
use crate::metric::{
    center_of_distances, diametrical_graph, enumerate_centered_spheres, multipartite_parts, scan_subsets,
    spanning_star, FiniteUltrametricSpace, MetricError, SUBSET_SCAN_LIMIT,
};
use crate::padic::{sample_space, PadicError, SampleMetric};
use crate::rational::parse_list;
use crate::tree::{canonical_labeling, distance_matrix, validate_tree, TreeError};

pub const MAX_N_VAR: &str = "ULTRATREE_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "ultratree",
    version,
    about = "Exact analysis of finite ultrametric spaces generated by labeled trees"
)]
struct Cli {
    /// Worker threads for campaigns; output does not depend on it.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a tree JSON file, including non-degeneracy of the labeling.
    Validate { tree: PathBuf },
    /// Write the distance matrix of a tree as CSV.
    Distances {
        tree: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Zero every label that is not a distance; the space is unchanged.
    Canonical {
        tree: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the center of distances.
    Center { input: PathBuf },
    /// Print the diametrical graph, its parts and spanning star.
    Diametrical {
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
    /// List the centered spheres, or classify every subset with --subsets.
    Spheres {
        input: PathBuf,
        #[arg(long)]
        subsets: bool,
    },
    /// Run the theorem suite; --ut enables the checks for tree-generated spaces.
    Check {
        input: PathBuf,
        #[arg(long)]
        ut: bool,
    },
    /// Run a campaign over every class of n-point spaces.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        check: Campaign,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Distance matrix of a rational sample under the p-adic metric.
    Padic {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        sample: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Distance matrix of a non-negative sample under max(a, b).
    Dplus {
        #[arg(long)]
        sample: String,
    },
    /// Search for a labeled tree generating a matrix.
    IsUt { matrix: PathBuf },
    /// Print a random non-degenerate labeled tree.
    RandomTree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        pool: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Campaign {
    Con3,
    Hol,
    ClosedBalls,
    Suite,
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Capacity(String),
    Usage(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Invalid(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Capacity(_) => 3,
        }
    }
}

fn invalid(e: impl Display) -> Failure {
    Failure::Invalid(e.to_string())
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Metric(m) => m.into(),
            other => invalid(other),
        }
    }
}

impl From<MetricError> for Failure {
    fn from(e: MetricError) -> Self {
        match e {
            MetricError::CapacityExceeded { .. } => Failure::Capacity(e.to_string()),
            other => invalid(other),
        }
    }
}

impl From<ExplorerError> for Failure {
    fn from(e: ExplorerError) -> Self {
        match e {
            ExplorerError::TooLarge { .. } => Failure::Capacity(e.to_string()),
            ExplorerError::Metric(m) => m.into(),
            other => invalid(other),
        }
    }
}

impl From<TreeError> for Failure {
    fn from(e: TreeError) -> Self {
        invalid(e)
    }
}

impl From<PadicError> for Failure {
    fn from(e: PadicError) -> Self {
        match e {
            PadicError::Metric(m) => m.into(),
            other => invalid(other),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        invalid(e)
    }
}

/// Fence after applying `ULTRATREE_MAX_N`.
fn fence(default: usize) -> usize {
    std::env::var(MAX_N_VAR).ok().and_then(|v| v.trim().parse().ok()).map_or(default, |v: usize| v.min(default))
}

fn require_within(what: &str, n: usize, default: usize) -> Result<(), Failure> {
    let limit = fence(default);
    if n > limit {
        return Err(Failure::Capacity(format!("{what} is limited to n <= {limit}, got {n}")));
    }
    Ok(())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

/// Tree JSON or matrix CSV, told apart by content. The flag is true for trees.
fn load_space(path: &Path) -> Result<(FiniteUltrametricSpace, bool), Failure> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let t = parse_tree_json(&text)?;
        Ok((distance_matrix(&t)?, true))
    } else {
        Ok((parse_matrix_csv(&text)?, false))
    }
}

fn emit(out: &mut dyn Write, target: Option<&Path>, text: &str) -> Result<(), Failure> {
    match target {
        Some(path) => std::fs::write(path, text).map_err(|e| invalid(format!("{}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(Failure::from),
    }
}

fn set_text(s: &FiniteUltrametricSpace, members: impl IntoIterator<Item = usize>) -> String {
    let ids: Vec<&str> = members.into_iter().map(|i| s.point(i)).collect();
    format!("{{{}}}", ids.join(", "))
}

fn print_report(out: &mut dyn Write, report: &CampaignReport) -> Result<(), Failure> {
    for c in &report.checks {
        writeln!(
            out,
            "{:<15} {} (passed {}, failed {}, skipped {})",
            c.verdict.to_string(),
            c.name,
            c.passed,
            c.failed,
            c.skipped
        )?;
    }
    for w in &report.witnesses {
        writeln!(out, "witness for {}: {}", w.check, w.label)?;
        out.write_all(w.matrix_csv.as_bytes())?;
    }
    Ok(())
}

fn assert_report(report: &CampaignReport) -> Result<(), Failure> {
    match report.checks.iter().find(|c| c.verdict == crate::explorer::Verdict::Fail) {
        Some(c) => Err(Failure::Invalid(format!("check {} failed", c.name))),
        None => Ok(()),
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { tree } => {
            let raw = parse_raw_tree_json(&read(&tree)?)?;
            let t = validate_tree(&raw)?;
            distance_matrix(&t)?;
            writeln!(out, "valid: {} vertices, {} edges, non-degenerate labeling", t.len(), t.edges().len())?;
        }
        Command::Distances { tree, output } => {
            let t = parse_tree_json(&read(&tree)?)?;
            emit(out, output.as_deref(), &matrix_to_csv(&distance_matrix(&t)?))?;
        }
        Command::Canonical { tree, output } => {
            let t = parse_tree_json(&read(&tree)?)?;
            emit(out, output.as_deref(), &tree_to_json(&canonical_labeling(&t)?))?;
        }
        Command::Center { input } => {
            let (s, _) = load_space(&input)?;
            writeln!(out, "{}", center_of_distances(&s))?;
        }
        Command::Diametrical { input, dot } => {
            let (s, _) = load_space(&input)?;
            let g = diametrical_graph(&s);
            writeln!(out, "diam = {}", g.diameter())?;
            writeln!(out, "edges: {}", g.edges().len())?;
            for &(u, v) in g.edges() {
                writeln!(out, "  {} -- {}", s.point(u), s.point(v))?;
            }
            match multipartite_parts(&g) {
                Ok(d) => {
                    let parts: Vec<String> = d.parts.iter().map(|p| set_text(&s, p.iter().copied())).collect();
                    writeln!(out, "parts: {}", parts.join(" "))?;
                }
                Err(e) => writeln!(out, "parts: none ({e})")?,
            }
            match spanning_star(&g) {
                Some(c) => writeln!(out, "star center: {}", s.point(c.center))?,
                None => writeln!(out, "star center: none")?,
            }
            if let Some(path) = dot {
                emit(out, Some(&path), &diametrical_dot(&s))?;
            }
        }
        Command::Spheres { input, subsets } => {
            let (s, _) = load_space(&input)?;
            if subsets {
                require_within("subset scan", s.len(), SUBSET_SCAN_LIMIT)?;
                for (set, cert) in scan_subsets(&s)? {
                    match cert {
                        Some(c) => writeln!(
                            out,
                            "{} sphere center {} radius {}",
                            set_text(&s, set.iter()),
                            s.point(c.center),
                            c.radius
                        )?,
                        None => writeln!(out, "{} not a centered sphere", set_text(&s, set.iter()))?,
                    }
                }
            } else {
                for c in enumerate_centered_spheres(&s) {
                    writeln!(
                        out,
                        "{} center {} radius {}",
                        set_text(&s, c.subset.iter()),
                        s.point(c.center),
                        c.radius
                    )?;
                }
            }
        }
        Command::Check { input, ut } => {
            let (s, from_tree) = load_space(&input)?;
            let report = check_theorem_suite(&s, ut || from_tree);
            print_report(out, &report)?;
            assert_report(&report)?;
        }
        Command::Enumerate { n, check, output } => {
            let report = match check {
                Campaign::Con3 => {
                    require_within("center-size campaign", n, ENUMERATION_LIMIT)?;
                    check_con3(n)?
                }
                Campaign::Hol => {
                    require_within("all-subsets campaign", n, HOL_LIMIT)?;
                    check_hol(n)?
                }
                Campaign::ClosedBalls => {
                    require_within("closed-ball campaign over classes", n, IS_UT_LIMIT)?;
                    check_closed_balls(&ClosedBallSource::Enumerated(n))?
                }
                Campaign::Suite => {
                    require_within("theorem suite campaign", n, ENUMERATION_LIMIT)?;
                    check_suite(n)?
                }
            };
            emit(out, output.as_deref(), &report_to_json(&report))?;
            if let Err(e) = assert_report(&report) {
                print_report(out, &report)?;
                return Err(e);
            }
        }
        Command::Padic { p, sample, output } => {
            let values = parse_list(&sample).map_err(invalid)?;
            emit(out, output.as_deref(), &matrix_to_csv(&sample_space(&values, SampleMetric::PAdic(p))?))?;
        }
        Command::Dplus { sample } => {
            let values = parse_list(&sample).map_err(invalid)?;
            emit(out, None, &matrix_to_csv(&sample_space(&values, SampleMetric::Plus)?))?;
        }
        Command::IsUt { matrix } => {
            let s = parse_matrix_csv(&read(&matrix)?)?;
            match is_ut(&s, fence(IS_UT_LIMIT))? {
                Some(t) => out.write_all(tree_to_json(&t).as_bytes())?,
                None => writeln!(out, "not tree-generated")?,
            }
        }
        Command::RandomTree { n, seed, pool } => {
            let pool = parse_list(&pool).map_err(invalid)?;
            out.write_all(tree_to_json(&random_labeled_tree(n, &pool, seed)?).as_bytes())?;
        }
    }
    Ok(())
}

/// Runs one command line. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{e}");
            return Failure::Usage(String::new()).code();
        }
        // --help and --version
        Err(e) => {
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    // buffered so campaigns can run inside a dedicated pool
    let mut buffer = Vec::new();
    let result = match cli.jobs {
        Some(0) => Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| execute(cli, &mut buffer)),
            Err(e) => Err(invalid(e)),
        },
        None => execute(cli, &mut buffer),
    };
    // partial output is still shown when the command fails
    let written = out.write_all(&buffer);
    let result = result.and_then(|()| Ok(written?));
    match result {
        Ok(()) => 0,
        Err(f) => {
            let (Failure::Invalid(msg) | Failure::Capacity(msg) | Failure::Usage(msg)) = &f;
            let _ = writeln!(err, "error: {msg}");
            f.code()
        }
    }
}
