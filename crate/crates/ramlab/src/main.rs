use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ramlab::config::{DimsRef, FiltrationOp, ProfileRef, Scenario, ScenarioConfig};
use ramlab::json::load_tower;
use ramlab::render::render_text;
use ramlab::{CliError, Format};

#[derive(Parser)]
#[command(name = "ramlab", version, about = "Wild monodromy, ramification filtrations and Swan conductors")]
struct Cli {
    /// Output format; a config file's own format wins over the default.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Absolute working precision in units of v(p) (overrides RAMLAB_PRECISION).
    #[arg(long, global = true)]
    precision: Option<i64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario config file.
    Run { config: String },
    #[command(subcommand)]
    Analyze(Analyze),
    #[command(subcommand)]
    Filtration(Filtration),
    #[command(subcommand)]
    Conductor(Conductor),
    #[command(subcommand)]
    Group(Group),
}

#[derive(Subcommand)]
enum Analyze {
    /// Y^p = 1 + cX^q + X^(1+q) with q = p^n.
    GoodReduction {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "1")]
        c: String,
        #[arg(long)]
        f_ur: Option<usize>,
        /// Also read the L/K filtration off the conjugates of y (needs 2n | f_ur).
        #[arg(long)]
        galois_roots: bool,
    },
    /// Y^2 = 1 + b2 X^2 + b3 X^3 + b4 X^4 + X^5 over a 2-adic tower.
    Genus2 {
        /// type-i, type-ii or type-iii.
        #[arg(long, conflicts_with_all = ["coeffs", "tower"])]
        preset: Option<String>,
        /// b2,b3,b4 as expressions over the tower.
        #[arg(long, requires = "tower")]
        coeffs: Option<String>,
        /// Tower JSON, inline or as a file path.
        #[arg(long, requires = "coeffs")]
        tower: Option<String>,
        #[arg(long)]
        f_ur: Option<usize>,
        /// f_ur values at which to record the factorization shape of T_f.
        #[arg(long, value_delimiter = ',')]
        shape_f_ur: Vec<usize>,
    },
}

#[derive(Args)]
struct ProfileAt {
    /// Preset name (q8-A-B), inline JSON or file path.
    #[arg(long)]
    profile: String,
    #[arg(long)]
    at: String,
}

#[derive(Subcommand)]
enum Filtration {
    /// Herbrand phi of a profile at a point.
    Phi(ProfileAt),
    /// Herbrand psi of a profile at a point.
    Psi(ProfileAt),
    /// Filtration of M/K from Gal(M/L) and Gal(L/K).
    Compose {
        #[arg(long)]
        sub: String,
        #[arg(long)]
        quot: String,
        #[arg(long, default_value = "G")]
        group: String,
        /// SUB,QUOT=NAME naming the composite subgroup; repeatable.
        #[arg(long = "label")]
        labels: Vec<String>,
    },
    /// Upper filtration of an arithmetically disjoint compositum.
    Product {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Filtration after a tame base change of the given degree.
    Tame {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        degree: u64,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value = "G'")]
        label: String,
    },
}

#[derive(Subcommand)]
enum Conductor {
    /// Swan conductor and conductor exponent.
    Swan {
        #[arg(long)]
        profile: String,
        /// good-reduction(p,n), elliptic-q8xq8, inline JSON or a file path.
        #[arg(long)]
        dims: String,
        #[arg(long, requires = "p")]
        tame_degree: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
    },
}

#[derive(Subcommand)]
enum Group {
    /// Order, center, derived and Frattini subgroups of a named group.
    Info {
        #[arg(long)]
        name: String,
    },
}

fn profile_ref(s: &str) -> ProfileRef {
    ProfileRef::Name(s.to_string())
}

fn dims_ref(s: &str) -> Result<DimsRef, CliError> {
    let trimmed = s.trim_start();
    if trimmed.starts_with('{') || s.ends_with(".json") {
        let text = if trimmed.starts_with('{') { s.to_string() } else { ramlab::json::read_file(s)? };
        let d = serde_json::from_str(&text).map_err(|e| CliError::Config(format!("dims: {}", e)))?;
        return Ok(DimsRef::Inline(d));
    }
    Ok(DimsRef::Name(s.to_string()))
}

fn scenario(command: Command) -> Result<ScenarioConfig, CliError> {
    let scenario = match command {
        Command::Run { config } => return ScenarioConfig::load(&config),
        Command::Analyze(Analyze::GoodReduction { p, n, c, f_ur, galois_roots }) => {
            Scenario::GoodReduction { p, n, c, f_ur, galois_roots }
        }
        Command::Analyze(Analyze::Genus2 { preset, coeffs, tower, f_ur, shape_f_ur }) => {
            let coeffs = match coeffs {
                Some(c) => {
                    let parts: Vec<String> = c.split(',').map(|s| s.trim().to_string()).collect();
                    let arr: [String; 3] =
                        parts.try_into().map_err(|_| CliError::Config(String::from("--coeffs takes b2,b3,b4")))?;
                    Some(arr)
                }
                None => None,
            };
            let tower = tower.as_deref().map(load_tower).transpose()?;
            Scenario::Genus2 { preset, tower, coeffs, f_ur, shape_f_ur }
        }
        Command::Filtration(f) => Scenario::FiltrationAlgebra {
            operation: match f {
                Filtration::Phi(a) => FiltrationOp::Phi { profile: profile_ref(&a.profile), at: a.at },
                Filtration::Psi(a) => FiltrationOp::Psi { profile: profile_ref(&a.profile), at: a.at },
                Filtration::Compose { sub, quot, group, labels } => {
                    let labels = labels
                        .iter()
                        .map(|l| {
                            let (pair, name) = l.split_once('=').ok_or_else(|| bad_label(l))?;
                            let (a, b) = pair.split_once(',').ok_or_else(|| bad_label(l))?;
                            Ok((a.to_string(), b.to_string(), name.to_string()))
                        })
                        .collect::<Result<Vec<_>, CliError>>()?;
                    FiltrationOp::Compose { sub: profile_ref(&sub), quot: profile_ref(&quot), group, labels }
                }
                Filtration::Product { a, b } => FiltrationOp::Product { a: profile_ref(&a), b: profile_ref(&b) },
                Filtration::Tame { profile, degree, p, label } => {
                    FiltrationOp::Tame { profile: profile_ref(&profile), degree, p, label }
                }
            },
        },
        Command::Conductor(Conductor::Swan { profile, dims, tame_degree, p }) => {
            Scenario::Conductor { profile: profile_ref(&profile), dims: dims_ref(&dims)?, tame_degree, p }
        }
        Command::Group(Group::Info { name }) => Scenario::Group { name },
    };
    Ok(ScenarioConfig { precision: None, format: None, scenario })
}

fn bad_label(l: &str) -> CliError {
    CliError::Config(format!("label {:?} is not SUB,QUOT=NAME", l))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = scenario(cli.command).and_then(|mut cfg| {
        if cli.precision.is_some() {
            cfg.precision = cli.precision;
        }
        let format = cli.format.or(cfg.format).unwrap_or_default();
        ramlab::run::run(&cfg).map(|r| (r, format))
    });
    match result {
        Ok((report, format)) => {
            match format {
                Format::Json => print!("{}", report.to_json()),
                Format::Text => print!("{}", render_text(&report)),
            }
            if report.has_mismatch() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            if let Some(h) = e.hint() {
                eprintln!("hint: {}", h);
            }
            ExitCode::from(2)
        }
    }
}
