//! The `rotinv` command line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rotinv_core::counting::{closed_form_check, poincare_series, weight_table};
use rotinv_core::kravchuk::{eigenvector, spectrum};
use rotinv_core::moments::{
    evaluate_invariant, normalized_from, verify_invariance, verify_raster_invariance,
};
use rotinv_core::monoid::{polynomial_generators, DEFAULT_DEGREE_CAP};
use rotinv_core::rational::{beta_values, default_anchor, independence_check, rational_generators};
use rotinv_core::symbolic::character;
use rotinv_core::{EigenSymbol, MomentTable};

use crate::error::{Error, Result};
use crate::io::{load_input, Input};
use crate::json::{
    complex_pair, EigenJson, FeatureJson, FeaturesJson, GeneratorJson, VerifyJson,
};

#[derive(Debug, Parser)]
#[command(name = "rotinv", version, about = "Rotation invariants of binary forms and image moments")]
pub struct Cli {
    /// Output format; `eigen` defaults to text, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Polynomial,
    Rational,
}

#[derive(Debug, Args)]
pub struct Order {
    /// Highest order d of the binary forms (at least 2).
    #[arg(long = "d", value_parser = clap::value_parser!(u32).range(2..))]
    pub d: u32,
}

#[derive(Debug, Args)]
pub struct Anchor {
    /// Order p of the anchor form e_p(qi); defaults to 3 (2 when d = 2).
    #[arg(long, requires = "q")]
    pub p: Option<u32>,
    /// Weight q of the anchor form.
    #[arg(long, requires = "p", allow_negative_numbers = true)]
    pub q: Option<i32>,
}

impl Anchor {
    fn resolve(&self, d: u32) -> (u32, i32) {
        match (self.p, self.q) {
            (Some(p), Some(q)) => (p, q),
            _ => default_anchor(d),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenforms e_n(si) of the rotation derivation for n = 2..=d.
    Eigen {
        #[command(flatten)]
        order: Order,
    },
    /// Minimal polynomial generators or a rational transcendence basis.
    Generators {
        #[command(flatten)]
        order: Order,
        #[arg(long, value_enum, default_value = "polynomial")]
        kind: Kind,
        #[command(flatten)]
        anchor: Anchor,
        /// Guard on the Hilbert basis search depth.
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: u32,
    },
    /// Dimensions of the homogeneous invariants of degrees A through B.
    Dims {
        #[command(flatten)]
        order: Order,
        /// Inclusive degree range `A..B`, or a single degree.
        #[arg(long = "n", value_parser = parse_range)]
        n: (u32, u32),
    },
    /// Poincaré series coefficients c_0..=c_N.
    Poincare {
        #[command(flatten)]
        order: Order,
        #[arg(long, default_value_t = 10)]
        terms: u32,
    },
    /// Weight multiplicities of W_d.
    Character {
        #[command(flatten)]
        order: Order,
    },
    /// Invariant values of a raster (.pgm) or point cloud (.csv).
    Features {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        order: Order,
        #[command(flatten)]
        anchor: Anchor,
        /// Evaluate the generators listed in this JSON file instead.
        #[arg(long)]
        generators_file: Option<PathBuf>,
    },
    /// Rotation-invariance report for the rational basis on an input.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        order: Order,
        #[command(flatten)]
        anchor: Anchor,
        /// Comma-separated rotation angles in radians.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, default_value = "0.3,1.0,2.5")]
        angles: Vec<f64>,
        /// Seed for the random points of the Jacobian check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare the known closed-form Poincaré series (d = 3, 4) with counting.
    CheckClosedForm {
        #[command(flatten)]
        order: Order,
        #[arg(long, default_value_t = 20)]
        terms: u32,
    },
}

fn parse_range(s: &str) -> std::result::Result<(u32, u32), String> {
    let parse = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let n = parse(s)?;
            (n, n)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

fn json_array(values: &[BigUint]) -> String {
    let items: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(","))
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)?)
}

fn moments_of(input: &Input, order: u32) -> Result<MomentTable> {
    Ok(match input {
        Input::Raster(img) => normalized_from(img, order)?,
        Input::Cloud(pc) => normalized_from(pc, order)?,
    })
}

/// Executes one parsed command, returning its standard output.
pub fn execute(cli: &Cli) -> Result<String> {
    let format = cli.format;
    let json = |default_json: bool| format.map_or(default_json, |f| f == Format::Json);
    match &cli.command {
        Command::Eigen { order } => {
            let mut forms = Vec::new();
            for n in 2..=order.d {
                for s in spectrum(n)?.into_iter().rev() {
                    let sym = EigenSymbol::new(n, s)?;
                    forms.push((sym, eigenvector(n, s)?));
                }
            }
            if json(false) {
                let items: Vec<EigenJson> = forms.iter().map(|(s, f)| EigenJson::new(*s, f)).collect();
                to_json(&items)
            } else {
                let mut out = String::new();
                for (sym, form) in &forms {
                    writeln!(out, "{sym} = {form}").unwrap();
                }
                Ok(out.trim_end().to_owned())
            }
        }
        Command::Generators { order, kind, anchor, degree_cap } => {
            let d = order.d;
            match kind {
                Kind::Polynomial => {
                    let gens = polynomial_generators(d, *degree_cap)?;
                    if json(true) {
                        to_json(&gens.iter().map(GeneratorJson::from).collect::<Vec<_>>())
                    } else {
                        let mut out = String::new();
                        for (i, g) in gens.iter().enumerate() {
                            writeln!(out, "g{}\t{}\t{}", i + 1, g.degree, g.monomial).unwrap();
                        }
                        Ok(out.trim_end().to_owned())
                    }
                }
                Kind::Rational => {
                    let (p, q) = anchor.resolve(d);
                    let gens = rational_generators(d, p, q)?;
                    if json(true) {
                        to_json(&gens.iter().map(GeneratorJson::from).collect::<Vec<_>>())
                    } else {
                        let mut out = String::new();
                        for (i, g) in gens.iter().enumerate() {
                            writeln!(
                                out,
                                "b{}\t{}\t{}\t{}\t{}",
                                i + 1,
                                g.degree(),
                                g.kind,
                                g.short_name(),
                                g.factors
                            )
                            .unwrap();
                        }
                        Ok(out.trim_end().to_owned())
                    }
                }
            }
        }
        Command::Dims { order, n: (a, b) } => {
            let table = weight_table(order.d, *b)?;
            let dims: Vec<BigUint> = (*a..=*b).map(|n| table.get(n, 0)).collect();
            if json(true) {
                Ok(json_array(&dims))
            } else {
                let lines: Vec<String> =
                    (*a..=*b).zip(&dims).map(|(n, c)| format!("{n}\t{c}")).collect();
                Ok(lines.join("\n"))
            }
        }
        Command::Poincare { order, terms: count } => {
            let series = poincare_series(order.d, *count)?;
            if json(true) {
                Ok(json_array(&series.coefficients))
            } else {
                let terms: Vec<String> = series
                    .coefficients
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != BigUint::ZERO)
                    .map(|(n, c)| match n {
                        0 => c.to_string(),
                        1 => format!("{c}*z"),
                        _ => format!("{c}*z^{n}"),
                    })
                    .collect();
                Ok(format!("{} + O(z^{})", terms.join(" + "), count + 1))
            }
        }
        Command::Character { order } => {
            let ch = character(order.d)?;
            if json(true) {
                let items: Vec<serde_json::Value> = ch
                    .iter()
                    .map(|(k, l)| serde_json::json!({ "weight": k, "multiplicity": l }))
                    .collect();
                to_json(&items)
            } else {
                let terms: Vec<String> = ch
                    .iter()
                    .map(|(k, l)| {
                        let power = match k {
                            0 => String::new(),
                            1 => "q".to_owned(),
                            _ => format!("q^{k}"),
                        };
                        match (l, power.is_empty()) {
                            (_, true) => l.to_string(),
                            (1, false) => power,
                            _ => format!("{l}*{power}"),
                        }
                    })
                    .collect();
                Ok(terms.join(" + "))
            }
        }
        Command::Features { input, order, anchor, generators_file } => {
            let d = order.d;
            let (p, q) = anchor.resolve(d);
            let source = load_input(input)?;
            let features = match generators_file {
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|source| Error::Io {
                        path: path.clone(),
                        source,
                    })?;
                    let gens: Vec<GeneratorJson> = serde_json::from_str(&text)?;
                    let mut monomials = Vec::with_capacity(gens.len());
                    for g in &gens {
                        monomials.push((g.kind.is_some(), g.to_exponents()?));
                    }
                    let needed = monomials.iter().map(|(_, m)| m.max_order()).max().unwrap_or(2);
                    let eta = moments_of(&source, needed.max(d))?;
                    monomials
                        .iter()
                        .enumerate()
                        .map(|(i, (rational, m))| {
                            let prefix = if *rational { "b" } else { "g" };
                            Ok(FeatureJson {
                                name: format!("{prefix}{}", i + 1),
                                value: complex_pair(evaluate_invariant(m, &eta)?),
                            })
                        })
                        .collect::<Result<Vec<_>>>()?
                }
                None => {
                    let gens = rational_generators(d, p, q)?;
                    let eta = moments_of(&source, d)?;
                    beta_values(&gens, &eta)?
                        .into_iter()
                        .map(|(name, v)| FeatureJson { name, value: complex_pair(v) })
                        .collect::<Vec<_>>()
                }
            };
            let mut features = features;
            features.sort_by_key(|f| f.name[1..].parse::<usize>().unwrap_or(0));
            let doc = FeaturesJson { d, anchor: [p as i64, q as i64], features };
            if json(true) {
                to_json(&doc)
            } else {
                let lines: Vec<String> = doc
                    .features
                    .iter()
                    .map(|f| format!("{}\t{:e}\t{:e}", f.name, f.value[0], f.value[1]))
                    .collect();
                Ok(lines.join("\n"))
            }
        }
        Command::Verify { input, order, anchor, angles, seed } => {
            let d = order.d;
            let (p, q) = anchor.resolve(d);
            let gens = rational_generators(d, p, q)?;
            let source = load_input(input)?;
            let (report, kind) = match &source {
                Input::Raster(img) => (verify_raster_invariance(img, d, p, q, angles)?, "raster"),
                Input::Cloud(pc) => (verify_invariance(pc, d, p, q, angles)?, "cloud"),
            };
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let independent = independence_check(&gens, d, 5, &mut rng)?;
            let doc = VerifyJson::new(&report, &gens, kind, *seed, independent);
            if json(true) {
                to_json(&doc)
            } else {
                let mut out = String::new();
                writeln!(out, "input {kind}, d = {d}, anchor ({p}, {q}), angles {angles:?}").unwrap();
                for g in &doc.generators {
                    writeln!(
                        out,
                        "{}\t{}\t{:.3e}{}",
                        g.name,
                        g.generator,
                        g.max_relative_deviation,
                        if g.vanishing { "\tvanishing" } else { "" }
                    )
                    .unwrap();
                }
                writeln!(out, "max relative deviation {:.3e}", doc.max_relative_deviation).unwrap();
                write!(out, "jacobian rank check (seed {seed}): {}", if independent { "pass" } else { "fail" }).unwrap();
                Ok(out)
            }
        }
        Command::CheckClosedForm { order, terms } => {
            let ok = closed_form_check(order.d, *terms)?;
            if json(true) {
                Ok(serde_json::json!({ "d": order.d, "terms": terms, "matches": ok }).to_string())
            } else {
                Ok(format!("d = {}, {} terms: {}", order.d, terms, if ok { "match" } else { "MISMATCH" }))
            }
        }
    }
}

/// Parses `args`, runs the command and writes its output; returns the exit
/// code (0 success, 1 domain or input error, 2 usage error).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = writeln!(stdout, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}
