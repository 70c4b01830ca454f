use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use isg_core::bisection::{local_bisections, DEFAULT_BISECTION_BOUND};
use isg_core::congruence::{
    all_congruences, ideal_generated_by, mu, quotient, rees_quotient, sigma, xi,
    DEFAULT_ORACLE_BOUND,
};
use isg_core::corpus::{corpus, duality_groupoids};
use isg_core::format::{
    groupoid_to_dot, read_groupoid, read_semigroup, write_groupoid, write_semigroup,
};
use isg_core::groupoid::atomic_groupoid;
use isg_core::munn::{munn_semigroup, MeetSemilattice, DEFAULT_MUNN_BOUND};
use isg_core::pbij::{label_rank, DEFAULT_ENUMERATION_DEGREE};
use isg_core::report::analyze;
use isg_core::semigroup::DEFAULT_CLOSURE_BOUND;
use isg_core::suite::{run_suite, Suite};
use isg_core::{
    closure_from_generators, Error, FiniteGroupoid, FiniteInverseSemigroup, PartialBijection,
    Result,
};

/// Finite inverse semigroup toolkit.
#[derive(Parser)]
#[command(name = "isg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Close a set of partial bijections under product and inverse.
    Closure {
        #[arg(short, long)]
        degree: usize,
        #[arg(short, long = "gen", required = true)]
        generators: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_BOUND)]
        bound: usize,
    },
    /// Print the analysis report.
    Analyze {
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Quotient by sigma, mu, xi or a Rees congruence (`rees=a,b` or `rees=rank1`).
    Quotient {
        input: Option<PathBuf>,
        #[arg(long)]
        by: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Munn semigroup of the semilattice of idempotents.
    Munn {
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MUNN_BOUND)]
        bound: usize,
    },
    /// Underlying groupoid, or the groupoid of atoms with --atoms.
    Groupoid {
        input: Option<PathBuf>,
        #[arg(long)]
        atoms: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Inverse monoid of local bisections of a groupoid.
    Bisections {
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BISECTION_BOUND)]
        bound: usize,
    },
    /// Run invariant suites; exit 1 if any check fails.
    Check {
        input: Option<PathBuf>,
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Enumerate the symmetric inverse monoid In.
    Oracle {
        monoid: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List every congruence.
    Congruences {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        bound: usize,
    },
    /// Write the built-in example semigroups and groupoids to a directory.
    Corpus { dir: PathBuf },
}

enum Failure {
    Check,
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn read_input(path: Option<&Path>) -> io::Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> io::Result<()> {
    match path {
        Some(p) if p != Path::new("-") => fs::write(p, text),
        _ => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn load(path: Option<&Path>) -> std::result::Result<FiniteInverseSemigroup, Failure> {
    Ok(read_semigroup(&read_input(path)?, DEFAULT_CLOSURE_BOUND)?)
}

fn rees_ideal(s: &FiniteInverseSemigroup, list: &str) -> Result<Vec<usize>> {
    let mut gens = Vec::new();
    for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some(found) = s.find_label(token) {
            gens.push(found);
        } else if let Some(k) = token
            .strip_prefix("rank")
            .and_then(|k| k.parse::<usize>().ok())
        {
            let before = gens.len();
            gens.extend(
                s.elements()
                    .filter(|&a| label_rank(s.label(a)).is_some_and(|r| r <= k)),
            );
            if gens.len() == before {
                return Err(Error::Parse(format!("no element has rank at most {k}")));
            }
        } else {
            return Err(Error::Parse(format!("unknown element {token:?}")));
        }
    }
    if gens.is_empty() {
        return Err(Error::Parse("empty Rees ideal".into()));
    }
    Ok(ideal_generated_by(s, &gens))
}

fn parse_oracle_degree(text: &str) -> Result<usize> {
    let digits = text.strip_prefix('I').unwrap_or(text);
    digits
        .parse()
        .map_err(|_| Error::Parse(format!("expected In, got {text:?}")))
}

fn run(cli: Cli) -> std::result::Result<(), Failure> {
    match cli.command {
        Command::Closure {
            degree,
            generators,
            output,
            bound,
        } => {
            let gens = generators
                .iter()
                .map(|g| PartialBijection::parse(g, degree))
                .collect::<Result<Vec<_>>>()?;
            let (s, _) = closure_from_generators(&gens, bound)?;
            write_output(output.as_deref(), &write_semigroup(&s)?)?;
        }
        Command::Analyze { input, json } => {
            let report = analyze(&load(input.as_deref())?)?;
            let text = if json {
                report.to_json()?
            } else {
                report.to_text()
            };
            write_output(None, &text)?;
        }
        Command::Quotient { input, by, output } => {
            let s = load(input.as_deref())?;
            let q = match by.as_str() {
                "sigma" => quotient(&s, &sigma(&s))?.0,
                "mu" => quotient(&s, &mu(&s))?.0,
                "xi" => quotient(&s, &xi(&s)?)?.0,
                other => match other.strip_prefix("rees=") {
                    Some(list) => rees_quotient(&s, &rees_ideal(&s, list)?)?,
                    None => {
                        return Err(Error::Parse(format!("unknown congruence {other:?}")).into())
                    }
                },
            };
            write_output(output.as_deref(), &write_semigroup(&q)?)?;
        }
        Command::Munn {
            input,
            output,
            bound,
        } => {
            let s = load(input.as_deref())?;
            let t = munn_semigroup(&MeetSemilattice::of_idempotents(&s), bound)?;
            write_output(output.as_deref(), &write_semigroup(&t.semigroup)?)?;
        }
        Command::Groupoid {
            input,
            atoms,
            dot,
            output,
        } => {
            let s = load(input.as_deref())?;
            let g = if atoms {
                atomic_groupoid(&s)?
            } else {
                FiniteGroupoid::underlying(&s)
            };
            if let Some(path) = dot {
                write_output(Some(&path), &groupoid_to_dot(&g))?;
            }
            write_output(output.as_deref(), &write_groupoid(&g)?)?;
        }
        Command::Bisections {
            input,
            output,
            bound,
        } => {
            let g = read_groupoid(&read_input(input.as_deref())?)?;
            let k = local_bisections(&g, bound)?;
            write_output(output.as_deref(), &write_semigroup(&k.semigroup)?)?;
        }
        Command::Check { input, suite } => {
            let suite: Suite = suite.parse()?;
            let report = run_suite(&load(input.as_deref())?, suite)?;
            write_output(None, &report.to_string())?;
            if !report.passed() {
                return Err(Failure::Check);
            }
        }
        Command::Oracle { monoid, output } => {
            let n = parse_oracle_degree(&monoid)?;
            if n > DEFAULT_ENUMERATION_DEGREE {
                return Err(Error::BoundExceeded {
                    what: "oracle degree",
                    size: n,
                    bound: DEFAULT_ENUMERATION_DEGREE,
                }
                .into());
            }
            let s = isg_core::boolean::symmetric_inverse_monoid(n)?;
            write_output(output.as_deref(), &write_semigroup(&s)?)?;
        }
        Command::Congruences { input, bound } => {
            let s = load(input.as_deref())?;
            let mut out = String::new();
            for c in all_congruences(&s, bound)? {
                out.push_str(&serde_json::to_string(&c.labelled(&s)).map_err(Error::from)?);
                out.push('\n');
            }
            write_output(None, &out)?;
        }
        Command::Corpus { dir } => {
            fs::create_dir_all(&dir)?;
            for (name, s) in corpus() {
                fs::write(dir.join(format!("{name}.isg")), write_semigroup(&s)?)?;
            }
            for (name, g) in duality_groupoids() {
                fs::write(dir.join(format!("{name}.grpd")), write_groupoid(&g)?)?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Lib(e @ Error::BoundExceeded { .. })) => {
            eprintln!("isg: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("isg: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("isg: {e}");
            ExitCode::from(2)
        }
    }
}
