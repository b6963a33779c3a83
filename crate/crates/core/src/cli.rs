//! Command-line front end. Every command writes deterministic text or JSON.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{Polynomial, RationalFunction, Var};
use crate::classes::{self, WeightSystem};
use crate::degree::{self, DegreeError, Method};
use crate::gpd::{self, BoundarySpec, Gpd};
use crate::schubert;
use crate::symmetric::{PartialPermutation, Permutation, Word};

/// Exit status for a failed verification.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Exit status for malformed invocations.
pub const EXIT_USAGE: i32 = 2;
/// Exit status when a computation exceeds its state budget.
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "pipedream", version, about = "Generic pipe dreams and the classes they compute")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for enumeration and the frontier DP.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for the sampled checks of `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List or count the pipe dreams for a boundary.
    Gpds {
        #[command(flatten)]
        boundary: BoundaryArgs,
        #[arg(long)]
        count: bool,
    },
    /// The GPD polynomial G_w.
    Gw {
        #[arg(long)]
        perm: Permutation,
    },
    /// The class G_w / (A+B)^n.
    Class {
        #[arg(long)]
        perm: Permutation,
    },
    /// The double Schubert polynomial S_w.
    Schubert {
        #[arg(long)]
        perm: Permutation,
    },
    /// Run the leading-form and cross-oracle checks over S_n.
    Verify {
        #[arg(long)]
        n: usize,
    },
    /// Degree of E_w, or of the commuting variety with --n.
    Degree {
        #[arg(long, conflicts_with = "perm")]
        n: Option<usize>,
        #[arg(long)]
        perm: Option<Permutation>,
        #[arg(long, default_value = "dp")]
        method: Method,
        /// Print the individual powers of 2 (enumerates every filling).
        #[arg(long)]
        terms: bool,
    },
    /// CSM classes: Kazhdan–Lusztig (--word --perm), orbit of a partial
    /// permutation (--matrix) or double Bruhat cell (--u --v).
    Csm {
        #[command(flatten)]
        boundary: BoundaryArgs,
        #[arg(long)]
        word: Option<Word>,
    },
    /// SSM restriction of a Kazhdan–Lusztig class.
    Ssm {
        #[arg(long)]
        word: Word,
        #[arg(long)]
        perm: Permutation,
        /// Simple reflections generating W_P, e.g. `1,3`.
        #[arg(long, value_delimiter = ',')]
        parabolic: Vec<usize>,
    },
    /// K-theoretic weights: motivic class with --word, GPD sum otherwise.
    Ktheory {
        #[arg(long)]
        perm: Permutation,
        #[arg(long)]
        word: Option<Word>,
    },
    /// Parse a tile grid (rows separated by `/`) against a boundary and print it.
    Render {
        #[command(flatten)]
        boundary: BoundaryArgs,
        #[arg(long)]
        grid: String,
    },
}

#[derive(Args, Debug)]
struct BoundaryArgs {
    #[arg(long)]
    perm: Option<Permutation>,
    #[arg(long)]
    matrix: Option<PartialPermutation>,
    #[arg(long, requires = "v")]
    u: Option<Permutation>,
    #[arg(long, requires = "u")]
    v: Option<Permutation>,
}

impl BoundaryArgs {
    fn spec(&self) -> Result<BoundarySpec, Failure> {
        match (&self.perm, &self.matrix, &self.u, &self.v) {
            (Some(w), None, None, None) => Ok(BoundarySpec::standard(w)),
            (None, Some(m), None, None) => Ok(BoundarySpec::partial(m)),
            (None, None, Some(u), Some(v)) => {
                if u.size() != v.size() {
                    return Err(Failure::Usage("--u and --v must have the same size".into()));
                }
                Ok(BoundarySpec::double_bruhat(u, v))
            }
            _ => Err(Failure::Usage("give exactly one of --perm, --matrix or --u/--v".into())),
        }
    }
}

enum Failure {
    Usage(String),
    Verify(String),
    Infeasible(String),
    Internal(String),
}

impl From<classes::ClassError> for Failure {
    fn from(e: classes::ClassError) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<gpd::GpdError> for Failure {
    fn from(e: gpd::GpdError) -> Self {
        match e {
            gpd::GpdError::Parse(m) => Failure::Usage(m),
            other => Failure::Internal(other.to_string()),
        }
    }
}

impl From<DegreeError> for Failure {
    fn from(e: DegreeError) -> Self {
        match e {
            DegreeError::InfeasibleSize { .. } | DegreeError::TooLarge(_) => Failure::Infeasible(e.to_string()),
            DegreeError::Gpd(g) => g.into(),
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let text = e.to_string();
            let line = text.lines().next().unwrap_or("invalid arguments");
            eprintln!("{}", line.trim_start_matches("error: "));
            return EXIT_USAGE;
        }
    };
    let pool = match cli.threads {
        Some(0) => {
            eprintln!("--threads must be at least 1");
            return EXIT_USAGE;
        }
        Some(t) => rayon::ThreadPoolBuilder::new().num_threads(t).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("cannot start worker threads: {e}");
            return EXIT_VERIFY_FAILED;
        }
    };
    let (output, status) = match pool.install(|| execute(&cli)) {
        Ok(out) => (out, 0),
        Err(Failure::Verify(out)) => (out, EXIT_VERIFY_FAILED),
        Err(Failure::Usage(m)) => {
            eprintln!("{m}");
            return EXIT_USAGE;
        }
        Err(Failure::Infeasible(m)) => {
            eprintln!("{m}");
            return EXIT_INFEASIBLE;
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            return EXIT_VERIFY_FAILED;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &output),
        None => std::io::stdout().write_all(output.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("cannot write output: {e}");
        return EXIT_USAGE;
    }
    status
}

fn poly_out(p: &Polynomial, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", p.canonical_string()),
        Format::Json => format!("{}\n", p.to_json()),
    }
}

fn rational_out(r: &RationalFunction, format: Format) -> String {
    match format {
        Format::Text => format!("{r}\n"),
        Format::Json => format!(
            "{}\n",
            json!({"numerator": r.numerator().to_json(), "denominator": r.denominator().to_json()})
        ),
    }
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Gpds { boundary, count } => {
            let spec = boundary.spec()?;
            if *count {
                let c = gpd::count(&spec)?;
                return Ok(match format {
                    Format::Text => format!("{c}\n"),
                    Format::Json => format!("{}\n", json!({"count": c.to_string()})),
                });
            }
            let all: Vec<Gpd> = gpd::enumerate(&spec)?.collect();
            Ok(match format {
                Format::Text => all.iter().map(|g| format!("{}\n", g.render())).collect::<Vec<_>>().join("\n"),
                Format::Json => format!("{}\n", Value::Array(all.iter().map(Gpd::to_json).collect())),
            })
        }
        Command::Gw { perm } => Ok(poly_out(&classes::gpd_polynomial(perm)?, format)),
        Command::Class { perm } => Ok(poly_out(&classes::class_ew(perm)?, format)),
        Command::Schubert { perm } => Ok(poly_out(&schubert::double_schubert(perm), format)),
        Command::Verify { n } => verify(*n, cli.seed, format),
        Command::Degree { n, perm, method, terms } => {
            let w = match (n, perm) {
                (Some(n), None) => Permutation::identity(*n),
                (None, Some(w)) => w.clone(),
                _ => return Err(Failure::Usage("give --n or --perm".into())),
            };
            if w.size() == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            let d = degree::degree_ew(&w, *method)?;
            let parts = if *terms { Some(degree::degree_terms(&w)?) } else { None };
            Ok(degree_out(&d, parts.as_deref(), format))
        }
        Command::Csm { boundary, word } => {
            let p = match (word, boundary) {
                (Some(q), BoundaryArgs { perm: Some(w), matrix: None, u: None, v: None }) => {
                    let rank = w.size().max(q.min_rank());
                    classes::csm_kl(q, &w.extend_to(rank), rank)
                }
                (None, BoundaryArgs { perm: None, matrix: Some(m), u: None, v: None }) => classes::csm_partial_perm(m)?,
                (None, BoundaryArgs { perm: None, matrix: None, u: Some(u), v: Some(v) }) => {
                    if u.size() != v.size() {
                        return Err(Failure::Usage("--u and --v must have the same size".into()));
                    }
                    classes::csm_double_bruhat(u, v)?
                }
                _ => return Err(Failure::Usage("give --word with --perm, or --matrix, or --u with --v".into())),
            };
            Ok(poly_out(&p, format))
        }
        Command::Ssm { word, perm, parabolic } => {
            let rank = perm.size().max(word.min_rank());
            let gens: BTreeSet<usize> = parabolic.iter().copied().collect();
            if let Some(&g) = gens.iter().find(|&&g| g == 0 || g >= rank) {
                return Err(Failure::Usage(format!("generator {g} is not a simple reflection of S_{rank}")));
            }
            let w = perm.extend_to(rank);
            let r = if gens.is_empty() {
                classes::ssm_restriction(word, &w, rank)
            } else {
                classes::ssm_parabolic(word, &w, rank, &gens)
            };
            Ok(rational_out(&r, format))
        }
        Command::Ktheory { perm, word } => {
            let p = match word {
                Some(q) => {
                    let rank = perm.size().max(q.min_rank());
                    classes::motivic_kl(q, &perm.extend_to(rank), rank)
                }
                None => classes::gpd_sum(&BoundarySpec::standard(perm), WeightSystem::KTheory)?,
            };
            Ok(poly_out(&p, format))
        }
        Command::Render { boundary, grid } => {
            let spec = boundary.spec()?;
            let west = spec.west.iter().map(|c| c.input_label()).collect();
            let south = spec.south.iter().map(|c| c.input_label()).collect();
            let g = Gpd::parse_grid(&grid.replace('/', "\n"), west, south)?;
            if !gpd::satisfies(&g, &spec) {
                return Err(Failure::Usage("the grid does not meet the boundary".into()));
            }
            Ok(match format {
                Format::Text => format!("{}\n", g.render()),
                Format::Json => format!("{}\n", g.to_json()),
            })
        }
    }
}

fn degree_out(d: &BigUint, terms: Option<&[BigUint]>, format: Format) -> String {
    match (format, terms) {
        (Format::Text, None) => format!("{d}\n"),
        (Format::Text, Some(t)) => {
            let parts: Vec<String> = t.iter().map(BigUint::to_string).collect();
            format!("{d} = {}\n", parts.join("+"))
        }
        (Format::Json, t) => {
            let mut v = json!({"degree": d.to_string()});
            if let Some(t) = t {
                v["terms"] = Value::Array(t.iter().map(|b| Value::String(b.to_string())).collect());
            }
            format!("{v}\n")
        }
    }
}

struct Report {
    checks: Vec<(String, Option<String>)>,
}

impl Report {
    fn record(&mut self, name: String, outcome: Result<(), String>) {
        self.checks.push((name, outcome.err()));
    }
}

/// Runs every check available at size `n`; exhaustive where cheap, seeded
/// samples for the double Bruhat identity when `n ≥ 3`.
fn verify(n: usize, seed: u64, format: Format) -> Result<String, Failure> {
    if n == 0 || n > 4 {
        return Err(Failure::Usage("verify supports 1 <= n <= 4".into()));
    }
    let mut report = Report { checks: Vec::new() };
    let diff = |m: classes::Mismatch| m.to_string().replace('\n', "; ");
    for w in Permutation::all(n) {
        report.record(format!("b-leading {w}"), schubert::verify_b_leading(&w)?.map_err(diff));
        report.record(format!("a-leading {w}"), schubert::verify_a_leading(&w)?.map_err(diff));
        let g = classes::gpd_polynomial(&w)?;
        let divisible = g
            .exact_div(&Polynomial::linear(&[(Var::A, 1), (Var::B, 1)], 0).pow(n as u32))
            .map_err(|e| e.to_string())
            .and_then(|q| if q == classes::class_ew(&w).map_err(|e| e.to_string())? { Ok(()) } else { Err("quotient differs from class".into()) });
        report.record(format!("divisibility {w}"), divisible);
        report.record(format!("full-perm csm {w}"), classes::csm_full_perm_check(&w)?.map_err(diff));
        let words = Word::all_reduced(&w);
        let independent = Permutation::all(n).iter().all(|x| {
            let first = classes::csm_kl(&words[0], x, n);
            words[1..].iter().all(|q| classes::csm_kl(q, x, n) == first)
        });
        report.record(format!("reduced-word independence {w}"), independent.then_some(()).ok_or_else(|| "csm differs between reduced words".into()));
        let brute = degree::degree_ew(&w, Method::Brute)?;
        let dp = degree::degree_ew(&w, Method::Dp)?;
        report.record(format!("degree dp=brute {w}"), if brute == dp { Ok(()) } else { Err(format!("{dp} != {brute}")) });
    }
    let mut pairs: Vec<(Permutation, Permutation)> = Permutation::all(n)
        .into_iter()
        .flat_map(|u| Permutation::all(n).into_iter().map(move |v| (u.clone(), v)))
        .collect();
    if n >= 3 {
        pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        pairs.truncate(8);
    }
    for (u, v) in pairs {
        let cells = classes::csm_double_bruhat(&u, &v)?;
        let heap = classes::csm_kl(&Word::cut_deck(n), &u.direct_sum(&v), 2 * n);
        report.record(format!("double bruhat {u} {v}"), if cells == heap { Ok(()) } else { Err("cell sum differs from heap sum".into()) });
    }

    let failed = report.checks.iter().filter(|(_, e)| e.is_some()).count();
    let out = match format {
        Format::Text => {
            let mut s = String::new();
            for (name, err) in &report.checks {
                match err {
                    None => writeln!(s, "PASS {name}").expect("string write"),
                    Some(e) => writeln!(s, "FAIL {name}: {e}").expect("string write"),
                }
            }
            writeln!(s, "{} checks, {failed} failed", report.checks.len()).expect("string write");
            s
        }
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|(name, err)| json!({"name": name, "passed": err.is_none(), "detail": err}))
                .collect();
            format!("{}\n", json!({"checks": checks, "failed": failed}))
        }
    };
    if failed > 0 {
        Err(Failure::Verify(out))
    } else {
        Ok(out)
    }
}
