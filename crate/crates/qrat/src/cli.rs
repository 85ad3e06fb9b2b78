//! Argument parsing and dispatch for the `qrat` binary.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use qrat_core::cdga::CdgaPresentation;
use qrat_core::freelie::{hall_basis, LieElement};
use qrat_core::groupwords::{lcs_weight, log_coordinates, FreeGroupWord, LcsWeight};
use qrat_core::malcev::{bch_table, symbol_name, MalcevElement};
use qrat_core::rational::parse_rational;
use qrat_core::simplicial::FiniteSimplicialSet;
use qrat_core::sullivan::{
    apl_cohomology, is_realization_point, minimal_model_of_cdga, minimal_model_of_space, PolynomialForm,
};

use crate::error::{CliError, EXIT_USAGE};
use crate::formats::{coordinates_json, CdgaJson, SimplicialJson};

#[derive(Debug, Parser)]
#[command(name = "qrat", version, about = "Exact rational homotopy and Malcev computations")]
pub struct Cli {
    /// Machine-readable JSON on stdout and stderr.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

type Bound = u32;

fn positive() -> clap::builder::RangedI64ValueParser<Bound> {
    clap::value_parser!(Bound).range(1..)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lyndon basis of the free Lie algebra on K generators, weights 1..=N.
    Hall {
        #[arg(value_parser = positive())]
        k: Bound,
        #[arg(value_parser = positive())]
        n: Bound,
    },
    /// The universal BCH series log(exp a · exp b) through weight N.
    Bch {
        #[arg(value_parser = positive())]
        n: Bound,
    },
    /// BCH product of two Lie elements in the class-N quotient.
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(short = 'n', long = "class", value_parser = positive())]
        n: Bound,
    },
    /// Rational power g^q, i.e. q·g.
    Power {
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(short = 'n', long = "class", value_parser = positive())]
        n: Bound,
    },
    /// Malcev coordinates of a free-group word at stage N.
    LogWord {
        word: String,
        #[arg(short = 'n', long = "class", value_parser = positive())]
        n: Bound,
    },
    /// Lower central series weight of a free-group word, checked up to N.
    LcsWeight {
        word: String,
        #[arg(short = 'n', long = "class", value_parser = positive())]
        n: Bound,
    },
    /// Rational homology of a simplicial set file.
    Homology { file: PathBuf },
    /// Rational cohomology of a simplicial set file.
    Cohomology { file: PathBuf },
    /// H^n of polynomial forms of degree ≤ D, for D up to --dmax.
    AplCohomology {
        file: PathBuf,
        #[arg(long)]
        degree: Bound,
        #[arg(long, value_parser = positive())]
        dmax: Bound,
    },
    /// Minimal model of a cdga file (or of a simplicial set via --dmax).
    MinimalModel {
        file: PathBuf,
        #[arg(long, value_parser = positive())]
        up_to: Bound,
        #[arg(long, value_parser = positive())]
        dmax: Option<Bound>,
    },
    /// Ranks of π_n ⊗ Q for 2 ≤ n ≤ --up-to.
    PiRational {
        file: PathBuf,
        #[arg(long, value_parser = positive())]
        up_to: Bound,
        /// Polynomial degree bound; required for simplicial sets.
        #[arg(long, value_parser = positive())]
        dmax: Option<Bound>,
    },
    /// Whether a cdga file is minimal and simply connected.
    CheckMinimal {
        file: PathBuf,
        /// Also check the filtration condition M(n) = ∪ M(n,m) through this degree.
        #[arg(long, value_parser = positive())]
        degree_bound: Option<Bound>,
    },
    /// Whether generator ↦ form assignments give a cdga map into ∇(Δ^n).
    CheckRealization {
        file: PathBuf,
        #[arg(long, value_parser = positive())]
        simplex_dim: Bound,
        /// `name=form`, e.g. `x=dt1`; unlisted generators go to zero.
        #[arg(long = "assign")]
        assign: Vec<String>,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Text and JSON renderings of a successful result.
struct Report {
    text: String,
    json: Value,
    /// Printed, but the invocation still fails with this error.
    error: Option<CliError>,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report { text, json, error: None }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_USAGE, stdout: String::new(), stderr: rendered }
            } else {
                Output { code: 0, stdout: rendered, stderr: String::new() }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Output {
    let (report, error) = match dispatch(&cli.command) {
        Ok(mut r) => {
            let e = r.error.take();
            (Some(r), e)
        }
        Err(e) => (None, Some(e)),
    };
    let stdout = match &report {
        Some(r) if cli.json => json_line(&r.json),
        Some(r) => r.text.clone(),
        None => String::new(),
    };
    let (code, stderr) = match error {
        None => (0, String::new()),
        Some(e) if cli.json => (e.exit_code(), json_line(&e.to_json())),
        Some(e) => (e.exit_code(), format!("error: {e}\n")),
    };
    Output { code, stdout, stderr }
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn dispatch(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Hall { k, n } => hall(*k as usize, *n as usize),
        Command::Bch { n } => {
            let table = bch_table(*n as usize)?;
            let text = table.render();
            let terms: Vec<Value> = (1..=*n as usize)
                .flat_map(|w| table.terms(w))
                .map(|(word, c)| {
                    json!({
                        "word": word.render(&symbol_name),
                        "coefficient": qrat_core::rational::format_rational(&c),
                    })
                })
                .collect();
            Ok(Report::new(line(&text), json!({ "class_bound": n, "series": text, "terms": terms })))
        }
        Command::Mul { a, b, n } => {
            let n = *n as usize;
            let a = MalcevElement::from(LieElement::parse(a, n)?);
            let b = MalcevElement::from(LieElement::parse(b, n)?);
            Ok(element_report(&a.mul(&b)?))
        }
        Command::Power { g, q, n } => {
            let g = MalcevElement::from(LieElement::parse(g, *n as usize)?);
            let q = parse_rational(q)?;
            Ok(element_report(&g.rational_power(&q)))
        }
        Command::LogWord { word, n } => {
            let w: FreeGroupWord = word.parse()?;
            Ok(element_report(&log_coordinates(&w, *n as usize)?))
        }
        Command::LcsWeight { word, n } => {
            let w: FreeGroupWord = word.parse()?;
            let weight = lcs_weight(&w, *n as usize)?;
            let json = match weight {
                LcsWeight::Exactly(i) => json!({ "weight": i }),
                LcsWeight::ExceedsBound(n) => json!({ "weight": null, "exceeds": n }),
            };
            Ok(Report::new(line(&weight.to_string()), json))
        }
        Command::Homology { file } => {
            let x = read_simplicial(file)?;
            let t = x.homology();
            Ok(Report::new(line(&t.to_string()), json!({ "homology": t.dims })))
        }
        Command::Cohomology { file } => {
            let x = read_simplicial(file)?;
            let t = x.cohomology();
            Ok(Report::new(line(&t.to_string()), json!({ "cohomology": t.dims })))
        }
        Command::AplCohomology { file, degree, dmax } => {
            let x = read_simplicial(file)?;
            apl_report(&x, *degree as usize, *dmax as usize)
        }
        Command::MinimalModel { file, up_to, dmax } => {
            minimal_model_report(file, *up_to as usize, dmax.map(|d| d as usize))
        }
        Command::PiRational { file, up_to, dmax } => pi_rational(file, *up_to as usize, dmax.map(|d| d as usize)),
        Command::CheckMinimal { file, degree_bound } => {
            let a = read_cdga(file)?;
            let minimal = a.is_minimal_simply_connected()?;
            let mut text = format!("minimal: {minimal}\n");
            let mut json = json!({ "minimal": minimal });
            if let Some(bound) = degree_bound {
                let filtration = a.satisfies_filtration_condition(*bound as usize);
                writeln!(text, "filtration condition through degree {bound}: {filtration}").unwrap();
                json["filtration_condition"] = json!(filtration);
                json["degree_bound"] = json!(bound);
            }
            Ok(Report::new(text, json))
        }
        Command::CheckRealization { file, simplex_dim, assign } => {
            let a = read_cdga(file)?;
            let n = *simplex_dim as usize;
            let mut parsed = Vec::with_capacity(assign.len());
            for item in assign {
                let (name, form) = item
                    .split_once('=')
                    .ok_or_else(|| CliError::Usage(format!("--assign expects name=form, got {item:?}")))?;
                parsed.push((name.trim().to_string(), PolynomialForm::parse(n, form)?));
            }
            let refs: Vec<(&str, PolynomialForm)> = parsed.iter().map(|(k, f)| (k.as_str(), f.clone())).collect();
            let ok = is_realization_point(&a, &refs, n)?;
            Ok(Report::new(line(&ok.to_string()), json!({ "realization_point": ok, "simplex_dim": n })))
        }
    }
}

fn line(s: &str) -> String {
    format!("{s}\n")
}

fn hall(k: usize, n: usize) -> Result<Report, CliError> {
    if k > u8::MAX as usize {
        return Err(CliError::Usage(format!("at most {} generators", u8::MAX)));
    }
    let basis = hall_basis(k, n);
    let mut text = String::new();
    let mut weights = Vec::new();
    for (i, words) in basis.iter().enumerate() {
        let names: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        writeln!(text, "weight {} ({}): {}", i + 1, names.len(), names.join(" ")).unwrap();
        weights.push(json!({ "weight": i + 1, "dim": names.len(), "words": names }));
    }
    Ok(Report::new(text, json!({ "num_generators": k, "class_bound": n, "weights": weights })))
}

fn element_report(e: &MalcevElement) -> Report {
    let text = e.to_string();
    Report::new(
        line(&text),
        json!({ "class_bound": e.class_bound(), "element": text, "coordinates": coordinates_json(e) }),
    )
}

fn apl_report(x: &FiniteSimplicialSet, degree: usize, dmax: usize) -> Result<Report, CliError> {
    let h = apl_cohomology(x, degree, dmax)?;
    let mut text = String::new();
    for (d, dim) in &h.values {
        writeln!(text, "D={d} dim={dim}").unwrap();
    }
    match h.stabilized {
        Some((d, v)) => writeln!(text, "H{degree}={v} (stable from D={d}; simplicial {})", h.simplicial),
        None => writeln!(text, "H{degree} inconclusive (simplicial {})", h.simplicial),
    }
    .unwrap();
    let json = json!({
        "degree": degree,
        "dmax": dmax,
        "values": h.values.iter().map(|(d, v)| json!({ "D": d, "dim": v })).collect::<Vec<_>>(),
        "stabilized": h.stabilized.map(|(d, v)| json!({ "D": d, "dim": v })),
        "simplicial": h.simplicial,
    });
    let error = h.value().err().map(CliError::from);
    Ok(Report { text, json, error })
}

fn counts_table(counts: &[usize]) -> (String, Value) {
    let mut text = String::from("degree generators\n");
    let mut rows = Vec::new();
    for (d, c) in counts.iter().enumerate().skip(1) {
        writeln!(text, "{d:>6} {c:>10}").unwrap();
        rows.push(json!({ "degree": d, "count": c }));
    }
    (text, Value::Array(rows))
}

/// Generator name, JSON image and text image.
type Image = (String, Value, String);

fn minimal_model_report(file: &Path, up_to: usize, dmax: Option<usize>) -> Result<Report, CliError> {
    let (model, counts, images, verified): (CdgaPresentation, Vec<usize>, Vec<Image>, bool) =
        match read_input(file)? {
            Input::Cdga(a) => {
                let m = minimal_model_of_cdga(&a, up_to)?;
                let verified = m.verify(&a)?;
                let images = m
                    .model
                    .generators()
                    .iter()
                    .zip(&m.images)
                    .map(|(g, p)| {
                        let s = a.render(p);
                        (g.name.clone(), json!(s), s)
                    })
                    .collect();
                (m.model.clone(), m.generator_counts(), images, verified)
            }
            Input::Simplicial(x) => {
                let dmax = dmax.ok_or_else(|| CliError::Usage("--dmax is required for simplicial sets".into()))?;
                let (apl, m) = minimal_model_of_space(&x, up_to, dmax)?;
                let verified = m.verify(&apl)?;
                let images = m
                    .model
                    .generators()
                    .iter()
                    .zip(&m.images)
                    .map(|(g, form)| {
                        let per_cell: Vec<String> = form.forms().iter().map(|f| f.render()).collect();
                        let text = apl
                            .cells()
                            .iter()
                            .zip(&per_cell)
                            .map(|((k, id), f)| format!("[{k}:{id}] {f}"))
                            .collect::<Vec<_>>()
                            .join("; ");
                        (g.name.clone(), json!(per_cell), text)
                    })
                    .collect();
                (m.model.clone(), m.generator_counts(), images, verified)
            }
        };
    let (table, counts_json) = counts_table(&counts);
    let mut text = format!("{model}\n\n{table}\n");
    for (name, _, s) in &images {
        writeln!(text, "{name} ↦ {s}").unwrap();
    }
    writeln!(text, "\nverified: {verified}").unwrap();
    let json = json!({
        "model": CdgaJson::from_presentation(&model),
        "built_up_to": up_to,
        "generator_counts": counts_json,
        "images": images.into_iter().map(|(k, v, _)| (k, v)).collect::<serde_json::Map<_, _>>(),
        "verified": verified,
    });
    Ok(Report::new(text, json))
}

fn pi_rational(file: &Path, up_to: usize, dmax: Option<usize>) -> Result<Report, CliError> {
    let dims = match read_input(file)? {
        Input::Cdga(a) => qrat_core::sullivan::rational_homotopy_dims_of_cdga(&a, up_to)?,
        Input::Simplicial(x) => {
            let dmax = dmax.ok_or_else(|| CliError::Usage("--dmax is required for simplicial sets".into()))?;
            qrat_core::sullivan::rational_homotopy_dims(&x, up_to, dmax)?
        }
    };
    let text = dims.iter().map(|(n, d)| format!("pi{n}={d}")).collect::<Vec<_>>().join(" ");
    let json = json!({
        "up_to": up_to,
        "dims": dims.iter().map(|(n, d)| json!({ "degree": n, "dim": d })).collect::<Vec<_>>(),
    });
    Ok(Report::new(line(&text), json))
}

enum Input {
    Simplicial(FiniteSimplicialSet),
    Cdga(CdgaPresentation),
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn parse_json<T: DeserializeOwned>(path: &Path, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Json {
        path: path.display().to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn read_simplicial(path: &Path) -> Result<FiniteSimplicialSet, CliError> {
    let text = read_text(path)?;
    parse_json::<SimplicialJson>(path, &text)?.to_set()
}

fn read_cdga(path: &Path) -> Result<CdgaPresentation, CliError> {
    let text = read_text(path)?;
    parse_json::<CdgaJson>(path, &text)?.to_presentation()
}

/// Dispatches on the top-level keys: `simplices` or `generators`.
fn read_input(path: &Path) -> Result<Input, CliError> {
    let text = read_text(path)?;
    let value: Value = parse_json(path, &text)?;
    let has = |k: &str| value.get(k).is_some();
    if has("simplices") {
        Ok(Input::Simplicial(parse_json::<SimplicialJson>(path, &text)?.to_set()?))
    } else if has("generators") {
        Ok(Input::Cdga(parse_json::<CdgaJson>(path, &text)?.to_presentation()?))
    } else {
        Err(CliError::Format(format!(
            "{}: expected a simplicial set (\"simplices\") or a cdga (\"generators\")",
            path.display()
        )))
    }
}
