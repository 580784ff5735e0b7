use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use secdef::algebra::AlgebraTag;
use secdef::certify::Certifier;
use secdef::defect;
use secdef::jets::{join_dimension, second_fundamental_form, tangent_join_dimension, PolyMap};
use secdef::linalg::{Scalar, Stream};
use secdef::report::{self, AnalyzeOptions, Format, Input};
use secdef::zoo::{self, Family};
use secdef::{Error, Result};

#[derive(Parser)]
#[command(name = "secdef", version, about = "Exact secant and tangential defect analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of a poly_map or quadric_system JSON file.
    Analyze {
        #[command(flatten)]
        common: Common,
        /// Secant orders for the σ_k table.
        #[arg(long = "k", value_delimiter = ',', default_values_t = [2, 3, 4])]
        ks: Vec<usize>,
        /// Chart point for parametrizations, comma separated rationals.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        point: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Emit the poly_map JSON of a catalog variety.
    Zoo {
        /// segre, veronese, severi, grassmannian, cone, rank, linear, conic,
        /// a catalog name, or `list`.
        family: String,
        params: Vec<String>,
        /// Division algebra for `severi`.
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Jacobian-rank oracles on a poly_map.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Clifford structure of the second fundamental form.
    Clifford {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// dim σ_k by Terracini's lemma.
    Join {
        #[command(flatten)]
        common: Common,
        #[arg(long = "k", default_value_t = 2)]
        k: usize,
    },
    /// dim τ from the tangent-line parametrization.
    Tangent {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Input file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    /// Initial sampling bound for random integers.
    #[arg(long, default_value_t = 16)]
    bound: i64,
    /// Bound doublings allowed after a disagreement.
    #[arg(long, default_value_t = 3)]
    escalations: u32,
    #[arg(long, default_value_t = 3)]
    order: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

impl Common {
    fn certifier(&self) -> Result<Certifier> {
        Certifier::new(self.trials, self.bound, self.escalations)
    }

    fn read(&self) -> Result<(Input, String)> {
        let text = if self.input == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        } else {
            std::fs::read_to_string(&self.input)?
        };
        let label = if self.input == "-" { "stdin".to_string() } else { self.input.clone() };
        Ok((Input::parse(&text)?, label))
    }

    fn read_map(&self) -> Result<PolyMap> {
        match self.read()?.0 {
            Input::Map(f) => Ok(f),
            Input::System(_) => Err(Error::Invalid("oracles need a poly_map input".into())),
        }
    }
}

fn int_param(params: &[String], i: usize, name: &str) -> Result<usize> {
    params
        .get(i)
        .ok_or_else(|| Error::Invalid(format!("missing parameter {name}")))?
        .parse()
        .map_err(|_| Error::Invalid(format!("parameter {name} must be a nonnegative integer")))
}

fn zoo_entry(family: &str, params: &[String], algebra: Option<&str>) -> Result<zoo::ZooEntry> {
    let p = |i, name| int_param(params, i, name);
    let f = match family {
        "segre" => Family::Segre { k: p(0, "k")?, r: p(1, "r")? },
        "veronese" => Family::Veronese { d: p(0, "d")? as u32, m: p(1, "m")? },
        "severi" => {
            let tag = algebra.or(params.first().map(String::as_str)).ok_or_else(|| {
                Error::Invalid("severi needs an algebra tag R, C, H or O".into())
            })?;
            Family::Severi(AlgebraTag::parse(tag)?)
        }
        "grassmannian" => Family::Grassmannian { m: p(0, "m")? },
        "rank" => Family::RankVariety { k: p(0, "k")?, r: p(1, "r")?, l: p(2, "l")? },
        "linear" => Family::Linear { n: p(0, "n")?, m: p(1, "m")? },
        "cone" => return Ok(zoo::quartic_cone()),
        "conic" => return Ok(zoo::conic_reembedding()),
        name => return zoo::by_name(name),
    };
    zoo::build(&f)
}

fn parse_point(p: &[String]) -> Result<Vec<Scalar>> {
    p.iter().map(|s| Scalar::parse_parts(s.trim(), "0").map_err(Error::Parse)).collect()
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Analyze { common, ks, point, format } => {
            let opts = AnalyzeOptions {
                seed: common.seed,
                certifier: common.certifier()?,
                order: common.order,
                ks,
                point: point.as_deref().map(parse_point).transpose()?,
            };
            let (input, label) = common.read()?;
            let r = report::analyze(&input, &label, &opts)?;
            let fmt = match format {
                OutputFormat::Text => Format::Text,
                OutputFormat::Json => Format::Json,
            };
            Ok(report::render(&r, fmt))
        }
        Command::Zoo { family, params, algebra } => {
            if family == "list" {
                return Ok(zoo::catalog().iter().map(|e| format!("{:<28} {}\n", e.name, e.notes)).collect());
            }
            let e = zoo_entry(&family, &params, algebra.as_deref())?;
            Ok(e.map.to_json() + "\n")
        }
        Command::Oracle { which: OracleCommand::Join { common, k } } => {
            let f = common.read_map()?;
            let d = join_dimension(&f, k, &Stream::new(common.seed), &common.certifier()?)?;
            Ok(format!("{d}\n"))
        }
        Command::Oracle { which: OracleCommand::Tangent { common } } => {
            let f = common.read_map()?;
            let d = tangent_join_dimension(&f, &Stream::new(common.seed), &common.certifier()?)?;
            Ok(format!("{d}\n"))
        }
        Command::Clifford { common } => {
            let cert = common.certifier()?;
            let root = Stream::new(common.seed);
            let s = match common.read()?.0 {
                Input::System(s) => s,
                Input::Map(f) => second_fundamental_form(&report::default_chart(&f, common.order, &root)?.1),
            };
            let profile = s.certified_profile(&root.derive_named("profile"), &cert)?;
            let vtx = defect::vertex(&s, &root.derive_named("defect"), &cert)?;
            let v = s.generic_vector(&profile, profile.bound, 32, &mut root.derive_named("generic"))?;
            let verdict = defect::clifford_verdict(&s, &v, &profile, &vtx)?.ok_or_else(|| {
                Error::Invalid("the image of the second fundamental form is not a hypersurface with a point vertex".into())
            })?;
            Ok(serde_json::to_string_pretty(&verdict).expect("serializable") + "\n")
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = run(cli);
    let code = report::exit_code(&out);
    match out {
        Ok(s) => print!("{s}"),
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(code as u8)
}
