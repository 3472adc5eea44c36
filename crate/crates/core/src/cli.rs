//! The `foulkes` command line.
//!
//! Exit codes: 0 success, 1 usage or bad input, 2 degree guard exceeded,
//! 3 verification mismatch, 4 internal consistency failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::certificate_from_closed_tuple;
use crate::constituents::{constituents, CharacterSpec, ConstituentReport, Extremum, Flavor};
use crate::error::{Error, Result};
use crate::families::{enumerate_closed_families, is_minimal_tuple, BlockKind, FamilyTuple};
use crate::oracle::{InnerFlavor, PlethysmOracle, SchurExpansion, DEFAULT_GUARD};
use crate::partition::{partitions_of, Partition};
use crate::special::{agaoka_lex_least, rectangular_certificate, theta_decomposition};

/// Environment variable naming the character cache directory when
/// `--cache` is not given.
pub const CACHE_ENV: &str = "FOULKES_CACHE_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_GUARD: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CharacterArg {
    Phi,
    Psi,
}

impl From<CharacterArg> for Flavor {
    fn from(c: CharacterArg) -> Flavor {
        match c {
            CharacterArg::Phi => Flavor::Phi,
            CharacterArg::Psi => Flavor::Psi,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Set,
    Multiset,
}

impl From<KindArg> for BlockKind {
    fn from(k: KindArg) -> BlockKind {
        match k {
            KindArg::Set => BlockKind::Set,
            KindArg::Multiset => BlockKind::Multiset,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Row,
    Column,
}

impl From<FlavorArg> for InnerFlavor {
    fn from(f: FlavorArg) -> InnerFlavor {
        match f {
            FlavorArg::Row => InnerFlavor::Row,
            FlavorArg::Column => InnerFlavor::Column,
        }
    }
}

/// A parsed invocation.
#[derive(Debug, Parser)]
#[command(
    name = "foulkes",
    version,
    about = "Extremal constituents of twisted Foulkes characters"
)]
pub struct JobConfig {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    /// Largest degree the oracle expands in full.
    #[arg(long, global = true, default_value_t = DEFAULT_GUARD)]
    pub guard: u32,

    /// Directory for the persistent character cache.
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache: Option<PathBuf>,

    /// Leave witness tuples out of the report.
    #[arg(long, global = true)]
    pub no_witness: bool,
}

#[derive(Debug, Args)]
pub struct CharacterArgs {
    #[arg(long)]
    pub m: u32,
    /// Comma separated parts, e.g. 2,1,1.
    #[arg(long)]
    pub nu: Partition,
    #[arg(long, value_enum, default_value = "phi")]
    pub character: CharacterArg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dominance-minimal constituents with witness tuples.
    MinConstituents(CharacterArgs),
    /// Dominance-maximal constituents with witness tuples.
    MaxConstituents(CharacterArgs),
    /// Schur expansion of s_ν ∘ s_(m) or s_ν ∘ s_(1^m) from the oracle.
    Expand {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        nu: Partition,
        #[arg(long, value_enum, default_value = "row")]
        flavor: FlavorArg,
        /// Compute only the coefficient of this Schur function.
        #[arg(long)]
        lambda: Option<Partition>,
    },
    /// Compare the combinatorial rules with the oracle.
    Verify {
        #[arg(long)]
        m: u32,
        #[arg(long, required_unless_present = "seed_sweep")]
        nu: Option<Partition>,
        /// Restrict to one character; both by default.
        #[arg(long, value_enum)]
        character: Option<CharacterArg>,
        /// Check every ν ⊢ n.
        #[arg(long, requires = "n")]
        seed_sweep: bool,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Greedy closed form of the lexicographically least type of n blocks.
    Agaoka {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "set")]
        kind: KindArg,
    },
    /// Decomposition of s_(1^n) ∘ s_(2).
    Theta {
        #[arg(long)]
        n: u32,
    },
    /// Closed families of n blocks, minimal ones marked.
    Families {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "set")]
        kind: KindArg,
    },
    /// Constituent certified by a closed tuple, or by a rectangle.
    Certificate {
        /// Family tuple as JSON; needs --nu and --character.
        #[arg(long, conflicts_with_all = ["a", "k"])]
        tuple: Option<String>,
        #[arg(long)]
        nu: Option<Partition>,
        #[arg(long, value_enum, default_value = "phi")]
        character: CharacterArg,
        /// Ground set size of the rectangular certificate.
        #[arg(long, requires_all = ["k", "m"])]
        a: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_enum, default_value = "set")]
        kind: KindArg,
    },
}

/// Parses `args` (program name first), runs the job and returns the exit
/// code. Usage errors go to `err`.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match JobConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match run(&config, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DegreeGuard { .. } => EXIT_GUARD,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

/// Runs a parsed job, writing the whole report to `out` once computed.
pub fn run(config: &JobConfig, out: &mut dyn Write) -> Result<i32> {
    let (report, code) = match &config.command {
        Command::MinConstituents(c) => (constituent_job(config, c, Extremum::Minimal)?, EXIT_OK),
        Command::MaxConstituents(c) => (constituent_job(config, c, Extremum::Maximal)?, EXIT_OK),
        Command::Expand {
            m,
            nu,
            flavor,
            lambda,
        } => (
            expand_job(config, *m, nu, (*flavor).into(), lambda.as_ref())?,
            EXIT_OK,
        ),
        Command::Verify {
            m,
            nu,
            character,
            seed_sweep,
            n,
        } => {
            let nus = match (seed_sweep, nu, n) {
                (true, _, Some(n)) => partitions_of(*n),
                (false, Some(nu), _) => vec![nu.clone()],
                _ => return Err(Error::InvalidArgument("give --nu or --seed-sweep --n".into())),
            };
            let flavors = match character {
                Some(c) => vec![Flavor::from(*c)],
                None => vec![Flavor::Phi, Flavor::Psi],
            };
            verify_job(config, *m, &nus, &flavors)?
        }
        Command::Agaoka { m, n, kind } => (agaoka_job(config, *m, *n, (*kind).into())?, EXIT_OK),
        Command::Theta { n } => (theta_job(config, *n)?, EXIT_OK),
        Command::Families { m, n, kind } => (families_job(config, *m, *n, (*kind).into())?, EXIT_OK),
        Command::Certificate {
            tuple,
            nu,
            character,
            a,
            k,
            m,
            kind,
        } => {
            let report = match (tuple, a, k, m) {
                (Some(text), _, _, _) => {
                    let nu = nu
                        .clone()
                        .ok_or_else(|| Error::InvalidArgument("--tuple needs --nu".into()))?;
                    tuple_certificate_job(config, text, nu, (*character).into())?
                }
                (None, Some(a), Some(k), Some(m)) => rectangle_job(config, *a, *m, *k, (*kind).into())?,
                _ => {
                    return Err(Error::InvalidArgument(
                        "give --tuple with --nu, or --a --m --k".into(),
                    ))
                }
            };
            (report, EXIT_OK)
        }
    };
    out.write_all(report.as_bytes())?;
    Ok(code)
}

fn oracle(config: &JobConfig) -> PlethysmOracle {
    let o = PlethysmOracle::new().with_guard(config.guard);
    match &config.cache {
        Some(dir) => o.with_cache_dir(dir),
        None => o,
    }
}

fn render(config: &JobConfig, json: Value, text: String) -> Result<String> {
    Ok(match config.format {
        Format::Json => {
            let mut s = serde_json::to_string(&json)?;
            s.push('\n');
            s
        }
        Format::Text => text,
    })
}

fn with_schema(body: Value) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("schema".into(), json!(1));
    if let Value::Object(fields) = body {
        map.extend(fields);
    }
    Value::Object(map)
}

fn paren(p: &Partition) -> String {
    format!("{p:?}")
}

fn tuple_text(t: &FamilyTuple) -> String {
    t.families()
        .iter()
        .map(|f| serde_json::to_string(&f.to_lists()).expect("lists serialize"))
        .collect::<Vec<_>>()
        .join(" | ")
}

fn constituent_job(config: &JobConfig, c: &CharacterArgs, extremum: Extremum) -> Result<String> {
    let spec = CharacterSpec::new(c.m, c.nu.clone(), c.character.into())?;
    let report = constituents(&spec, extremum)?;
    render(
        config,
        constituent_json(config, &report),
        constituent_text(config, &report),
    )
}

fn constituent_json(config: &JobConfig, report: &ConstituentReport) -> Value {
    let mut body = json!({
        "character": report.spec.flavor,
        "m": report.spec.m,
        "nu": report.spec.nu,
        "extremum": report.extremum,
        "labels": report.labels(),
    });
    if !config.no_witness {
        body["witnesses"] = report
            .constituents
            .iter()
            .map(|c| c.witness.to_json_value())
            .collect();
    }
    with_schema(body)
}

fn constituent_text(config: &JobConfig, report: &ConstituentReport) -> String {
    let mut s = format!("{} constituents of {}\n", report.extremum, report.spec);
    for c in &report.constituents {
        if config.no_witness {
            s.push_str(&format!("{}\n", paren(&c.label)));
        } else {
            s.push_str(&format!("{}  {}\n", paren(&c.label), tuple_text(&c.witness)));
        }
    }
    s
}

fn expansion_json(e: &SchurExpansion) -> Result<Value> {
    Ok(serde_json::to_value(e)?)
}

fn expansion_text(e: &SchurExpansion) -> String {
    let terms: Vec<String> = e
        .terms()
        .map(|(p, c)| {
            if c == 1 {
                paren(p)
            } else {
                format!("{c}{}", paren(p))
            }
        })
        .collect();
    if terms.is_empty() {
        "0\n".into()
    } else {
        format!("{}\n", terms.join(" + "))
    }
}

fn expand_job(
    config: &JobConfig,
    m: u32,
    nu: &Partition,
    flavor: InnerFlavor,
    lambda: Option<&Partition>,
) -> Result<String> {
    let mut o = oracle(config);
    match lambda {
        Some(lambda) => {
            let c = o.multiplicity(nu, m, lambda, flavor)?;
            let body = json!({
                "degree": m * nu.weight(),
                "lambda": lambda,
                "multiplicity": c,
            });
            render(config, with_schema(body), format!("{c}\n"))
        }
        None => {
            let e = o.expansion(nu, m, flavor)?;
            render(config, with_schema(expansion_json(&e)?), expansion_text(&e))
        }
    }
}

struct VerifyCase {
    spec: CharacterSpec,
    extremum: Extremum,
    rule: Vec<Partition>,
    oracle: Vec<Partition>,
}

impl VerifyCase {
    fn agrees(&self) -> bool {
        self.rule == self.oracle
    }
}

fn verify_job(config: &JobConfig, m: u32, nus: &[Partition], flavors: &[Flavor]) -> Result<(String, i32)> {
    let mut o = oracle(config);
    let mut cases = Vec::new();
    for nu in nus {
        for &flavor in flavors {
            let spec = CharacterSpec::new(m, nu.clone(), flavor)?;
            let e = o.expansion(nu, m, flavor.inner())?;
            for extremum in [Extremum::Minimal, Extremum::Maximal] {
                let rule = constituents(&spec, extremum)?.labels();
                let oracle = match extremum {
                    Extremum::Minimal => e.minimal_support(),
                    Extremum::Maximal => e.maximal_support(),
                };
                cases.push(VerifyCase {
                    spec: spec.clone(),
                    extremum,
                    rule,
                    oracle,
                });
            }
        }
    }
    let agree = cases.iter().all(VerifyCase::agrees);
    let verdict = if agree { "AGREE" } else { "MISMATCH" };
    let body = json!({
        "verdict": verdict,
        "cases": cases.iter().map(|c| json!({
            "character": c.spec.flavor,
            "m": c.spec.m,
            "nu": c.spec.nu,
            "extremum": c.extremum,
            "rule": c.rule,
            "oracle": c.oracle,
            "agree": c.agrees(),
        })).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    for c in &cases {
        let fmt = |ls: &[Partition]| ls.iter().map(paren).collect::<Vec<_>>().join(" ");
        text.push_str(&format!(
            "{} {} {}: {}",
            c.extremum,
            c.spec,
            fmt(&c.rule),
            if c.agrees() { "ok" } else { "differs" }
        ));
        if !c.agrees() {
            text.push_str(&format!(" (oracle {})", fmt(&c.oracle)));
        }
        text.push('\n');
    }
    text.push_str(verdict);
    text.push('\n');
    let code = if agree { EXIT_OK } else { EXIT_MISMATCH };
    Ok((render(config, with_schema(body), text)?, code))
}

fn agaoka_job(config: &JobConfig, m: u32, n: u32, kind: BlockKind) -> Result<String> {
    let data = agaoka_lex_least(m, n, kind)?;
    let mut text = format!("{}\n", paren(&data.assembled));
    for (i, ((p, a), b)) in data
        .indices
        .iter()
        .zip(&data.residuals)
        .zip(&data.widths)
        .enumerate()
    {
        text.push_str(&format!("  step {}: index {p}, residual {a}, width {b}\n", i + 1));
    }
    render(config, with_schema(serde_json::to_value(&data)?), text)
}

fn theta_job(config: &JobConfig, n: u32) -> Result<String> {
    let e = theta_decomposition(n)?;
    render(config, with_schema(expansion_json(&e)?), expansion_text(&e))
}

fn families_job(config: &JobConfig, m: u32, n: u32, kind: BlockKind) -> Result<String> {
    let mut rows = Vec::new();
    for family in enumerate_closed_families(m, n, kind) {
        let label = family
            .family_type()
            .ok_or_else(|| Error::Internal(format!("closed family {family:?} has no type")))?;
        let minimal = is_minimal_tuple(&FamilyTuple::new(vec![family.clone()])?)?;
        rows.push((family, label, minimal));
    }
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    let body = json!({
        "m": m,
        "n": n,
        "kind": kind,
        "families": rows.iter().map(|(f, label, minimal)| json!({
            "blocks": f.to_lists(),
            "type": label,
            "minimal": minimal,
        })).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    for (f, label, minimal) in &rows {
        text.push_str(&format!(
            "{} {}  {}\n",
            if *minimal { "*" } else { " " },
            serde_json::to_string(&f.to_lists())?,
            paren(label)
        ));
    }
    render(config, with_schema(body), text)
}

fn tuple_certificate_job(config: &JobConfig, text: &str, nu: Partition, flavor: Flavor) -> Result<String> {
    let tuple: FamilyTuple =
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("cannot read tuple: {e}")))?;
    let spec = CharacterSpec::new(tuple.m(), nu, flavor)?;
    let label = certificate_from_closed_tuple(&spec, &tuple)?;
    let body = json!({
        "character": spec.flavor,
        "m": spec.m,
        "nu": spec.nu,
        "label": label,
        "witness": tuple.to_json_value(),
    });
    render(
        config,
        with_schema(body),
        format!("{} occurs in {}\n", paren(&label), spec),
    )
}

fn rectangle_job(config: &JobConfig, a: u32, m: u32, k: u32, kind: BlockKind) -> Result<String> {
    let cert = rectangular_certificate(a, m, k, kind)?;
    let spec = CharacterSpec::new(m, cert.nu.clone(), Flavor::Phi)?;
    let mut body = json!({
        "character": Flavor::Phi,
        "m": m,
        "nu": cert.nu,
        "kind": kind,
        "label": cert.rectangle,
    });
    if !config.no_witness {
        body["witness"] = cert.witness.to_json_value();
    }
    render(
        config,
        with_schema(body),
        format!("{} occurs in {}\n", paren(&cert.rectangle), spec),
    )
}
