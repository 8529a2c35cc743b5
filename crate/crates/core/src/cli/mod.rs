//! Command-line front end: `nash`, `fan`, `gb`, `nobile` and `hilbert`.
//!
//! Cones and semigroups are given as semicolon-separated vectors with
//! comma-separated entries, e.g. `--cone "0,1;4,-3"`. Ideals are JSON files
//! holding a list of polynomials, each a list of `{"coeff": "p/q", "exp": [..]}`
//! terms, either bare or under a `"generators"` key.

pub mod doc;
pub mod svg;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::gfan;
use crate::nash;
use crate::polyhedral::{self, Cone, IntVector};
use crate::semigroup::SemigroupPresentation;
use crate::subalgebra::{self, SubalgebraOrder, SubalgebraPoly};
pub use doc::{emit_json, emit_text, Document};
pub use svg::emit_svg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Nash,
    Fan,
    Gb,
    Nobile,
    Hilbert,
}

/// What a job operates on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Cone(Cone),
    Ideal { presentation: Arc<SemigroupPresentation>, generators: Vec<SubalgebraPoly> },
}

/// A validated command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub mode: Mode,
    pub payload: Payload,
    pub n: u32,
    /// Required for `gb` only.
    pub weight: Option<IntVector>,
    /// `hilbert` only: use the dual of the given cone.
    pub dual: bool,
    pub format: Format,
    pub output: Option<PathBuf>,
}

#[derive(Parser, Debug)]
#[command(name = "nashfan", version, about = "Gröbner fans in monomial subalgebras and higher Nash blowups of toric varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fan of the normalized n-th Nash blowup of the toric variety of a cone
    Nash {
        #[command(flatten)]
        cone: ConeArg,
        #[arg(short = 'n', long = "order", default_value_t = 1)]
        n: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Gröbner fan of an ideal in k[A] over the weight cone of A
    Fan {
        #[command(flatten)]
        ideal: IdealArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Reduced Gröbner basis of an ideal in k[A] for a weight
    Gb {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Weight vector, e.g. "1,1"
        #[arg(short = 'w', long, allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check that the Nash fan is trivial exactly when the cone is smooth
    Nobile {
        #[command(flatten)]
        cone: ConeArg,
        #[arg(short = 'n', long = "order", default_value_t = 1)]
        n: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Hilbert basis of a cone (or of its dual)
    Hilbert {
        #[command(flatten)]
        cone: ConeArg,
        #[arg(long)]
        dual: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct ConeArg {
    /// Rays, e.g. "0,1;4,-3"
    #[arg(long, allow_hyphen_values = true)]
    cone: String,
}

#[derive(Args, Debug)]
struct IdealArgs {
    /// Semigroup generators, e.g. "1,0;1,1;2,3"
    #[arg(long)]
    semigroup: Option<String>,
    /// JSON file with the ideal generators
    #[arg(long)]
    ideal: PathBuf,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to a file instead of standard output
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

/// Parses a vector list such as `"0,1;4,-3"`; `field` names the option in
/// diagnostics.
pub fn parse_vectors(field: &str, text: &str) -> Result<Vec<IntVector>> {
    let vectors = text
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|v| {
            v.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<BigInt>()
                        .map_err(|_| Error::Input(format!("{field}: '{}' is not an integer", x.trim())))
                })
                .collect::<Result<Vec<_>>>()
                .map(IntVector::new)
        })
        .collect::<Result<Vec<_>>>()?;
    let d = vectors.first().map(IntVector::dim).ok_or_else(|| Error::Input(format!("{field}: no vectors")))?;
    if let Some(v) = vectors.iter().find(|v| v.dim() != d) {
        return Err(Error::Input(format!("{field}: {v} has {} entries, expected {d}", v.dim())));
    }
    Ok(vectors)
}

/// A full-dimensional pointed cone from its generators.
pub fn parse_cone(text: &str) -> Result<Cone> {
    let rays = parse_vectors("cone", text)?;
    let d = rays[0].dim();
    match Cone::from_rays(d, rays) {
        Ok(c) if c.is_full_dimensional() && !c.rays().is_empty() => Ok(c),
        Ok(_) => Err(Error::Input(format!("cone must span dimension {d}"))),
        Err(Error::NotStrictlyConvex) => Err(Error::Input("cone must be strictly convex".into())),
        Err(e) => Err(Error::Input(format!("cone: {e}"))),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffIn {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
struct TermIn {
    coeff: CoeffIn,
    exp: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IdealFile {
    Bare(Vec<Vec<TermIn>>),
    Keyed { generators: Vec<Vec<TermIn>>, semigroup: Option<Vec<IntVector>> },
}

fn parse_rational(s: &str) -> Result<BigRational> {
    s.trim().parse::<BigRational>().map_err(|_| Error::Input(format!("ideal: '{s}' is not a rational number")))
}

fn read_ideal(path: &Path, semigroup: Option<&str>) -> Result<Payload> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("ideal: {}: {e}", path.display())))?;
    let file: IdealFile =
        serde_json::from_str(&text).map_err(|e| Error::Input(format!("ideal: {}: {e}", path.display())))?;
    let (polys, from_file) = match file {
        IdealFile::Bare(p) => (p, None),
        IdealFile::Keyed { generators, semigroup } => (generators, semigroup),
    };
    let gens = match (semigroup, from_file) {
        (Some(s), _) => parse_vectors("semigroup", s)?,
        (None, Some(g)) => g,
        (None, None) => return Err(Error::Input("semigroup: required (flag or ideal file key)".into())),
    };
    let presentation =
        Arc::new(SemigroupPresentation::new(gens).map_err(|e| Error::Input(format!("semigroup: {e}")))?);
    let generators = polys
        .into_iter()
        .map(|terms| {
            let terms = terms
                .into_iter()
                .map(|t| {
                    let c = match t.coeff {
                        CoeffIn::Int(i) => BigRational::from_integer(i.into()),
                        CoeffIn::Text(s) => parse_rational(&s)?,
                    };
                    Ok((t.exp, c))
                })
                .collect::<Result<Vec<_>>>()?;
            SubalgebraPoly::from_terms(&presentation, terms).map_err(|e| Error::Input(format!("ideal: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if generators.iter().all(SubalgebraPoly::is_zero) {
        return Err(Error::Input("ideal: no non-zero generators".into()));
    }
    Ok(Payload::Ideal { presentation, generators })
}

fn job_from_cli(cli: Cli) -> Result<JobSpec> {
    let job = |mode, payload, n, out: OutputArgs| JobSpec {
        mode,
        payload,
        n,
        weight: None,
        dual: false,
        format: out.format,
        output: out.output,
    };
    Ok(match cli.command {
        Command::Nash { cone, n, out } => job(Mode::Nash, Payload::Cone(parse_cone(&cone.cone)?), n, out),
        Command::Nobile { cone, n, out } => {
            if n == 0 {
                return Err(Error::Input("n: the smoothness test needs n >= 1".into()));
            }
            job(Mode::Nobile, Payload::Cone(parse_cone(&cone.cone)?), n, out)
        }
        Command::Hilbert { cone, dual, out } => {
            let mut j = job(Mode::Hilbert, Payload::Cone(parse_cone(&cone.cone)?), 0, out);
            j.dual = dual;
            j
        }
        Command::Fan { ideal, out } => {
            job(Mode::Fan, read_ideal(&ideal.ideal, ideal.semigroup.as_deref())?, 0, out)
        }
        Command::Gb { ideal, weight, out } => {
            let payload = read_ideal(&ideal.ideal, ideal.semigroup.as_deref())?;
            let w = parse_vectors("weight", &weight)?;
            let [w] = <[IntVector; 1]>::try_from(w).map_err(|_| Error::Input("weight: expected one vector".into()))?;
            if let Payload::Ideal { presentation, .. } = &payload {
                if w.dim() != presentation.ambient_dim() {
                    return Err(Error::Input(format!(
                        "weight: {w} has {} entries, expected {}",
                        w.dim(),
                        presentation.ambient_dim()
                    )));
                }
            }
            let mut j = job(Mode::Gb, payload, 0, out);
            j.weight = Some(w);
            j
        }
    })
}

/// Parses a full argument vector (program name first).
pub fn parse_job<I, T>(args: I) -> Result<JobSpec>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| Error::Input(e.render().to_string()))?;
    job_from_cli(cli)
}

/// Outcome of [`run`]: the rendered artifact and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub exit_code: i32,
    pub bytes: Vec<u8>,
}

/// Computes the result document of a job.
pub fn compute(job: &JobSpec) -> Result<Document> {
    match (&job.mode, &job.payload) {
        (Mode::Nash, Payload::Cone(sigma)) => Ok(Document::Nash(doc::NashDoc::from(&nash::nash_fan(sigma, job.n)?))),
        (Mode::Nobile, Payload::Cone(sigma)) => {
            let r = nash::nobile_check(sigma, job.n)?;
            Ok(Document::Nobile(doc::NobileDoc::new(sigma, job.n, &r)))
        }
        (Mode::Hilbert, Payload::Cone(c)) => {
            let target = if job.dual { polyhedral::dual_cone(c)? } else { c.clone() };
            Ok(Document::Hilbert(doc::HilbertDoc {
                cone: doc::RaysDoc { rays: c.rays().to_vec() },
                dual: job.dual,
                hilbert_basis: polyhedral::hilbert_basis(&target)?,
            }))
        }
        (Mode::Fan, Payload::Ideal { presentation, generators }) => {
            let fan = gfan::enumerate_fan(generators, &presentation.weight_cone()?)?;
            Ok(Document::Fan(doc::FanDoc::new(presentation, &fan)))
        }
        (Mode::Gb, Payload::Ideal { presentation, generators }) => {
            let w = job.weight.as_ref().ok_or_else(|| Error::Input("weight: required for gb".into()))?;
            let basis = subalgebra::reduced_groebner_basis(generators, &SubalgebraOrder::new(w)?)?;
            let sigma = presentation.weight_cone()?;
            let cone = gfan::cone_of(&basis, &sigma)?;
            let initial = subalgebra::initial_ideal(&basis, w)?;
            Ok(Document::Gb(doc::GbDoc::new(presentation, w, &basis, &initial, &cone)))
        }
        _ => Err(Error::Input("payload does not match mode".into())),
    }
}

fn render(doc: &Document, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => Ok(emit_json(doc)),
        Format::Text => Ok(emit_text(doc)),
        Format::Svg => {
            let (sigma, cones) = match doc {
                Document::Nash(d) => (&d.sigma.rays, &d.fan),
                Document::Fan(d) => (&d.sigma.rays, &d.fan),
                _ => return Err(Error::Unsupported("SVG output is available for nash and fan".into())),
            };
            let d = sigma[0].dim();
            if d != 2 {
                return Err(Error::Unsupported("SVG output requires dimension 2".into()));
            }
            let sigma = Cone::from_rays(d, sigma.clone())?;
            let cones = cones.iter().map(|c| Cone::from_rays(d, c.rays.clone())).collect::<Result<Vec<_>>>()?;
            emit_svg(&sigma, &cones)
        }
    }
}

/// Runs a job. Exit code 0 on success; 2 when the smoothness test reports an
/// inconsistency, which indicates an internal error.
pub fn run(job: &JobSpec) -> Result<RunOutput> {
    let doc = compute(job)?;
    let bytes = render(&doc, job.format)?;
    let exit_code = match &doc {
        Document::Nobile(d) if !d.consistent => 2,
        _ => 0,
    };
    Ok(RunOutput { exit_code, bytes })
}

/// Full command-line behavior; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
        }
    };
    let result = job_from_cli(cli).and_then(|job| Ok((run(&job)?, job.output)));
    match result {
        Ok((out, path)) => {
            let written = match path {
                Some(p) => std::fs::write(&p, &out.bytes).map_err(|e| format!("{}: {e}", p.display())),
                None => std::io::stdout().write_all(&out.bytes).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => out.exit_code,
                Err(e) => {
                    eprintln!("error: {e}");
                    1
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &[&str]) -> Vec<String> {
        std::iter::once("nashfan").chain(s.iter().copied()).map(String::from).collect()
    }

    #[test]
    fn parses_nash_job() {
        let job = parse_job(args(&["nash", "--cone", "0,1;4,-3", "-n", "1", "--format", "json"])).unwrap();
        assert_eq!(job.mode, Mode::Nash);
        assert_eq!(job.n, 1);
        assert_eq!(job.format, Format::Json);
        let Payload::Cone(c) = job.payload else { panic!("expected a cone") };
        assert_eq!(c.rays(), &[IntVector::from([0, 1]), IntVector::from([4, -3])]);
    }

    #[test]
    fn default_order_is_one() {
        assert_eq!(parse_job(args(&["nash", "--cone", "1,0;0,1"])).unwrap().n, 1);
    }

    #[test]
    fn cone_diagnostics() {
        let e = parse_job(args(&["nash", "--cone", "0,1"])).unwrap_err();
        assert_eq!(e, Error::Input("cone must span dimension 2".into()));
        let e = parse_job(args(&["nash", "--cone", "0,x;1,0"])).unwrap_err();
        assert!(e.to_string().contains("cone: 'x' is not an integer"));
        let e = parse_job(args(&["nash", "--cone", "0,1;1,0,0"])).unwrap_err();
        assert!(e.to_string().contains("cone:"));
        assert!(parse_job(args(&["explode", "--cone", "0,1;1,0"])).is_err());
    }

    #[test]
    fn nobile_requires_positive_order() {
        assert!(parse_job(args(&["nobile", "--cone", "0,1;1,0", "-n", "0"])).is_err());
    }

    #[test]
    fn svg_is_limited_to_planar_fans() {
        let job = parse_job(args(&["nash", "--cone", "1,0,0;0,1,0;0,0,1", "--format", "svg"])).unwrap();
        assert_eq!(run(&job).unwrap_err().to_string(), "SVG output requires dimension 2");
    }
}
