//! `hyperbetti`: build the complete hypergraph families and compute or
//! cross-check the Betti numbers of their edge ideals.
//!
//! Exit codes: 0 ok, 1 verification mismatch, 2 input error, 3 resource
//! limit exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperbetti::betti::{
    betti_from_fvector_linear, hilbert_from_fvector, hochster_graded_with, hochster_multigraded_with, HilbertSeries,
    SweepConfig,
};
use hyperbetti::format::{
    betti_csv, betti_text, parse_betti_json, parse_complex, parse_hypergraph, write_complex, write_hypergraph,
    ComplexJson, HypergraphJson,
};
use hyperbetti::verify::{verify_family, VerifyOptions};
use hyperbetti::{
    reduced_homology, BettiTable, Error, FamilyKind, FamilySpec, FieldSpec, Hypergraph, IntervalSpec,
    SimplicialComplex,
};

#[derive(Parser)]
#[command(name = "hyperbetti", version, about = "Betti numbers of complete hypergraph families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family instance in the hypergraph text format.
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compute a Betti table.
    Betti {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        compute: Compute,
        #[arg(long, value_enum, default_value_t = Method::Hochster)]
        method: Method,
        /// Report multigraded entries (Hochster only).
        #[arg(long)]
        multigraded: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run every applicable method on a family and compare.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        compute: Compute,
        /// Fields to compare; defaults to 2, 3 and q.
        #[arg(long = "fields", value_delimiter = ',')]
        fields: Vec<FieldSpec>,
        /// Betti table JSON the Hochster result must match.
        #[arg(long)]
        expect: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Alexander dual of the complex (of the independence complex for
    /// hypergraph input).
    Dual {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reduced homology as `{degree: dim}`.
    Homology {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "2")]
        field: FieldSpec,
    },
    /// Hilbert series numerator from the f-vector.
    Hilbert {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Hochster,
    Closed,
    Fvector,
}

#[derive(Args)]
struct FamilyArgs {
    /// knd, multipartite, da or dI.
    #[arg(long)]
    family: Option<FamilyKind>,
    /// Block sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Composition for `da`, comma separated.
    #[arg(long, value_delimiter = ',')]
    a: Vec<usize>,
    /// Intervals for `dI`, e.g. `1:2,1:1,2:3`.
    #[arg(long)]
    intervals: Option<IntervalSpec>,
    /// Reject `dI` intervals that need shrinking.
    #[arg(long)]
    strict_intervals: bool,
}

impl FamilyArgs {
    fn spec(&self) -> Result<Option<FamilySpec>, Error> {
        let Some(kind) = self.family else {
            return Ok(None);
        };
        if self.n.is_empty() {
            return Err(Error::InvalidFamily("--n is required".into()));
        }
        let spec = FamilySpec {
            kind,
            n: self.n.clone(),
            d: self.d,
            a: (!self.a.is_empty()).then(|| self.a.clone()),
            intervals: self.intervals.clone(),
        };
        spec.degree()?;
        Ok(Some(spec))
    }

    fn require(&self) -> Result<FamilySpec, Error> {
        self.spec()?.ok_or_else(|| Error::Input("--family is required".into()))
    }
}

#[derive(Args)]
struct Source {
    #[command(flatten)]
    family: FamilyArgs,
    /// Hypergraph (`edge:` lines) or complex (`facet:` lines) file, text or
    /// JSON.
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct Compute {
    /// `q` or a prime.
    #[arg(long, default_value = "2")]
    field: FieldSpec,
    /// Largest vertex count for the subset sweep.
    #[arg(long, env = "HYPERBETTI_LIMIT", default_value_t = hyperbetti::betti::DEFAULT_ENUMERATION_LIMIT)]
    limit: usize,
    /// Worker threads; 0 uses every core.
    #[arg(long, env = "HYPERBETTI_JOBS", default_value_t = 0)]
    jobs: usize,
}

impl Compute {
    fn config(&self) -> SweepConfig {
        SweepConfig { limit: self.limit, jobs: (self.jobs > 0).then_some(self.jobs) }
    }
}

enum Loaded {
    Family(FamilySpec, Hypergraph),
    Hypergraph(Hypergraph),
    Complex(SimplicialComplex),
}

impl Loaded {
    fn complex(&self) -> SimplicialComplex {
        match self {
            Loaded::Family(_, h) | Loaded::Hypergraph(h) => h.independence_complex(),
            Loaded::Complex(c) => c.clone(),
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load_file(path: &PathBuf) -> Result<Loaded, Error> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        let bad = |e: serde_json::Error| Error::Input(format!("{}: {e}", path.display()));
        return if value.get("facets").is_some() {
            let c: ComplexJson = serde_json::from_value(value).map_err(bad)?;
            Ok(Loaded::Complex(c.to_complex()?))
        } else {
            let h: HypergraphJson = serde_json::from_value(value).map_err(bad)?;
            Ok(Loaded::Hypergraph(h.to_hypergraph()?))
        };
    }
    let is_complex = text.lines().map(str::trim).any(|l| l.starts_with("facet") || l == "void");
    if is_complex {
        Ok(Loaded::Complex(parse_complex(&text)?))
    } else {
        Ok(Loaded::Hypergraph(parse_hypergraph(&text)?))
    }
}

fn load(source: &Source) -> Result<Loaded, Error> {
    if let Some(path) = &source.input {
        return load_file(path);
    }
    match source.family.spec()? {
        Some(spec) => {
            let h = spec.hypergraph(source.family.strict_intervals)?;
            Ok(Loaded::Family(spec, h))
        }
        None => Err(Error::Input("give --family or --input".into())),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn render_table(table: &BettiTable, format: Format) -> String {
    match format {
        Format::Json => json(table),
        Format::Csv => betti_csv(table),
        Format::Text => {
            let mut out = betti_text(table);
            let pd = hyperbetti::betti::projective_dimension(table);
            out.push_str(&format!("pd: {pd}\n"));
            if let Some(depth) = table.vertex_count().checked_sub(pd) {
                out.push_str(&format!("depth: {depth}\n"));
            }
            match table.linear_degree() {
                Some(d) => out.push_str(&format!("linear: yes (d = {d})\n")),
                None => out.push_str("linear: no\n"),
            }
            out
        }
    }
}

fn polynomial(coeffs: &[i128]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
        let sign = if c < 0 { "-" } else { "+" };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let a = c.unsigned_abs();
        match (k, a) {
            (0, _) => out.push_str(&a.to_string()),
            (_, 1) => {}
            _ => out.push_str(&a.to_string()),
        }
        match k {
            0 => {}
            1 => out.push('t'),
            _ => out.push_str(&format!("t^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn hilbert_text(h: &HilbertSeries) -> String {
    format!("numerator: {}\ndenominator: (1 - t)^{}\n", polynomial(&h.numerator), h.denominator_power)
}

/// Output and exit status of a command.
struct Outcome {
    stdout: String,
    stderr: String,
    mismatch: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), mismatch: false }
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Generate { family, format, output } => {
            let spec = family.require()?;
            let h = spec.hypergraph(family.strict_intervals)?;
            let body = match format {
                Format::Json => json(&HypergraphJson::from_hypergraph(&h)),
                _ => write_hypergraph(&h),
            };
            let mut stderr = String::new();
            if h.edges().is_empty() {
                stderr.push_str("warning: the hypergraph has no edges\n");
            }
            let count = format!("{} edges\n", h.edges().len());
            match output {
                Some(path) => {
                    fs::write(&path, body).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
                    Ok(Outcome { stdout: count, stderr, mismatch: false })
                }
                None => {
                    stderr.push_str(&count);
                    Ok(Outcome { stdout: body, stderr, mismatch: false })
                }
            }
        }
        Command::Betti { source, compute, method, multigraded, format } => {
            let loaded = load(&source)?;
            let complex = loaded.complex();
            let config = compute.config();
            if multigraded {
                if method != Method::Hochster {
                    return Err(Error::Input("--multigraded needs --method hochster".into()));
                }
                let table = hochster_multigraded_with(&complex, compute.field, &config)?;
                return Ok(Outcome::ok(match format {
                    Format::Json => json(&table),
                    _ => {
                        let mut out = String::from("i,degree,beta\n");
                        for (i, v, b) in table.entries() {
                            out.push_str(&format!("{i},{},{b}\n", complex.universe().face_labels(v).join(" ")));
                        }
                        out
                    }
                }));
            }
            let table = match method {
                Method::Hochster => hochster_graded_with(&complex, compute.field, &config)?,
                Method::Closed => {
                    let Loaded::Family(spec, _) = &loaded else {
                        return Err(Error::Input("--method closed needs --family".into()));
                    };
                    closed_table(spec, source.family.strict_intervals)?
                        .with_field(Some(compute.field))
                }
                Method::Fvector => {
                    let d = match (&loaded, source.family.d) {
                        (Loaded::Family(spec, _), _) => spec.degree()?,
                        (_, Some(d)) => d,
                        _ => return Err(Error::Input("--method fvector needs --d".into())),
                    };
                    betti_from_fvector_linear(&complex, d)?.with_field(Some(compute.field))
                }
            };
            Ok(Outcome::ok(render_table(&table, format)))
        }
        Command::Verify { family, compute, fields, expect, format } => {
            let spec = family.require()?;
            let expected = expect.as_ref().map(|p| read(p).and_then(|t| parse_betti_json(&t))).transpose()?;
            let opts = VerifyOptions {
                fields: if fields.is_empty() { VerifyOptions::default().fields } else { fields },
                config: compute.config(),
                strict_intervals: family.strict_intervals,
                expected: expected.as_ref(),
            };
            let report = verify_family(&spec, &opts)?;
            let stdout = match format {
                Format::Json => json(&report),
                _ => report.to_text(),
            };
            Ok(Outcome { stdout, stderr: String::new(), mismatch: !report.pass })
        }
        Command::Dual { source, format } => {
            let dual = load(&source)?.complex().alexander_dual();
            Ok(Outcome::ok(match format {
                Format::Json => json(&ComplexJson::from_complex(&dual)),
                _ => write_complex(&dual),
            }))
        }
        Command::Homology { source, field } => {
            let complex = load(&source)?.complex();
            Ok(Outcome::ok(json(&reduced_homology(&complex, field))))
        }
        Command::Hilbert { source, format } => {
            let h = hilbert_from_fvector(&load(&source)?.complex())?;
            Ok(Outcome::ok(match format {
                Format::Json => json(&h),
                _ => hilbert_text(&h),
            }))
        }
    }
}

/// Closed forms per family. `dI` has a linear resolution, so its table
/// follows from the f-vector.
fn closed_table(spec: &FamilySpec, strict: bool) -> Result<BettiTable, Error> {
    match spec.kind {
        FamilyKind::DI => {
            let h = spec.hypergraph(strict)?;
            betti_from_fvector_linear(&h.independence_complex(), spec.degree()?)
        }
        _ => spec.closed_betti(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            if out.mismatch {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_resource_limit() { 3 } else { 2 })
        }
    }
}
