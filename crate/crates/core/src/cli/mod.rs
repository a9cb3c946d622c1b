//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 for mathematical/domain errors, 3 for
//! malformed input. Errors are written to stderr as
//! `{"error": <kind>, "message": <text>}`.

mod dispatch;
mod polyparse;
mod render;

pub use dispatch::{
    construct, find_point, parse_elem, parse_field, parse_form, parse_point, split_point, trinomial_shape,
    Construction, FieldSpec, Instance, InstanceFile, MethodChoice,
};
pub use polyparse::parse_poly;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::constructions::reducible_factorization;
use crate::cubicfield::CubicField;
use crate::error::{Error, Result};
use crate::exactmath::parse_rational;
use crate::verify::sample_points;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "normcurve",
    version,
    about = "Rational curves on N(X1,X2,X3) = f(t) over cubic fields"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build and certify a rational curve on the hypersurface.
    Construct(ConstructArgs),
    /// Construct a curve and list rational points on it.
    Sample(SampleArgs),
    /// Re-run a construction and print its certificate.
    Verify(VerifyArgs),
    /// Norm or inverse of a field element.
    Norm(NormArgs),
    /// Factor the degenerate sextic family for given c1, c3.
    Factor(FactorArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Args)]
struct InstanceArgs {
    /// JSON instance file; inline flags override its fields.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Field parameters `a,b` of x^3 + a*x + b.
    #[arg(long, allow_hyphen_values = true)]
    field: Option<String>,
    /// Right-hand side polynomial in t.
    #[arg(long = "f", allow_hyphen_values = true)]
    f: Option<String>,
    /// Known point `x,y,z,t` or `x,y,z,inf`.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    /// Cubic form parameters `a,b,c,d,e`.
    #[arg(long, allow_hyphen_values = true)]
    form: Option<String>,
    /// Exponent m for the trinomial construction.
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, value_enum, default_value_t = MethodChoice::Auto)]
    method: MethodChoice,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct SampleArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Output of an earlier `construct`.
    #[arg(long)]
    from: Option<PathBuf>,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Output of an earlier `construct`; its digest is checked.
    #[arg(long)]
    from: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct NormArgs {
    #[arg(long, allow_hyphen_values = true)]
    field: String,
    #[arg(long, allow_hyphen_values = true)]
    elem: String,
    /// Print the inverse instead of the norm.
    #[arg(long)]
    inv: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct FactorArgs {
    #[arg(long, allow_hyphen_values = true)]
    c1: String,
    #[arg(long, allow_hyphen_values = true)]
    c3: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn instance_file(v: Value, path: &Path) -> Result<InstanceFile> {
    serde_json::from_value(v).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

/// Merges the file named by `--input` (or the `instance` of a `--from`
/// document) with inline flags, which take precedence.
fn resolve(args: &InstanceArgs, from: Option<&Path>) -> Result<(Instance, MethodChoice)> {
    let mut file = InstanceFile::default();
    let mut method = args.method;
    if let Some(path) = from {
        let doc = read_json(path)?;
        let inst = doc
            .get("instance")
            .cloned()
            .ok_or_else(|| Error::InvalidInput(format!("{}: missing `instance`", path.display())))?;
        file = instance_file(inst, path)?;
        if method == MethodChoice::Auto {
            if let Some(m) = doc.get("method").and_then(Value::as_str) {
                method = MethodChoice::from_str(m.trim_end_matches("-exceptional"), true)
                    .map_err(|_| Error::InvalidInput(format!("unknown method `{m}`")))?;
            }
        }
    }
    if let Some(path) = &args.input {
        file = instance_file(read_json(path)?, path)?;
    }
    if let Some(s) = &args.field {
        file.field = Some(parse_field(s)?);
    }
    if let Some(s) = &args.form {
        file.form = Some(parse_form(s)?);
    }
    if let Some(s) = &args.f {
        file.f = Some(s.clone());
    }
    if let Some(s) = &args.point {
        file.point = Some(split_point(s));
    }
    if args.m.is_some() {
        file.m = args.m;
    }
    Ok((Instance::from_file(&file)?, method))
}

fn emit(out: &mut dyn Write, format: Format, json: Value, text: impl FnOnce() -> String) -> Result<()> {
    let s = match format {
        Format::Json => serde_json::to_string_pretty(&json).expect("serializable"),
        Format::Text => text(),
    };
    match writeln!(out, "{}", s.trim_end()) {
        // a closed downstream pipe (`| head`) is not an error
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => r.map_err(|e| Error::InvalidInput(format!("write failed: {e}"))),
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Construct(a) => {
            let (inst, method) = resolve(&a.instance, None)?;
            let c = construct(&inst, method)?;
            emit(out, a.format, render::construction_json(&c), || {
                render::construction_text(&c)
            })
        }
        Command::Sample(a) => {
            let (inst, method) = resolve(&a.instance, a.from.as_deref())?;
            let c = construct(&inst, method)?;
            if let Some(path) = &a.from {
                check_digest(&c, path)?;
            }
            let points = sample_points(&c.curve, &c.surface, a.count, a.seed)?;
            let json = serde_json::to_value(&points).expect("serializable");
            emit(out, a.format, json, || render::points_text(&points))
        }
        Command::Verify(a) => {
            let (inst, method) = resolve(&a.instance, a.from.as_deref())?;
            let c = construct(&inst, method)?;
            if let Some(path) = &a.from {
                check_digest(&c, path)?;
            }
            let json = json!({ "method": c.method().name(), "certificate": render::certificate_json(&c.certificate) });
            emit(out, a.format, json, || render::certificate_text(&c))
        }
        Command::Norm(a) => {
            let fs = parse_field(&a.field)?;
            let k = CubicField::new(fs.a, fs.b)?;
            let e = parse_elem(&a.elem)?;
            if a.inv {
                let inv = k.inv(&e)?;
                let json = json!({ "inverse": [inv.x.to_string(), inv.y.to_string(), inv.z.to_string()] });
                emit(out, a.format, json, || inv.to_string())
            } else {
                let n = k.norm(&e);
                emit(out, a.format, json!({ "norm": n.to_string() }), || n.to_string())
            }
        }
        Command::Factor(a) => {
            let c1 = parse_rational(&a.c1)?;
            let c3 = parse_rational(&a.c3)?;
            let (q, c) = reducible_factorization(&c1, &c3);
            let g = (&q * &c).scale(&parse_rational("-1/144")?);
            let json = json!({ "quadratic": q.to_string(), "cubic": c.to_string(), "g": g.to_string() });
            emit(out, a.format, json, || format!("g = -1/144 * ({q}) * ({c})\n  = {g}"))
        }
    }
}

fn check_digest(c: &Construction, path: &Path) -> Result<()> {
    let doc = read_json(path)?;
    let stored = doc.pointer("/certificate/digest").and_then(Value::as_str);
    match stored {
        Some(d) if d == c.certificate.digest => Ok(()),
        Some(d) => Err(Error::CertificateMismatch {
            stored: d.to_string(),
            computed: c.certificate.digest.clone(),
        }),
        None => Err(Error::InvalidInput(format!(
            "{}: missing certificate digest",
            path.display()
        ))),
    }
}

fn error_json(kind: &str, message: &str, e: Option<&Error>) -> String {
    let mut v = json!({ "error": kind, "message": message });
    if let Some(Error::Syntax { offset, expected }) = e {
        v["offset"] = json!(offset);
        v["expected"] = json!(expected);
    }
    serde_json::to_string(&v).expect("serializable")
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let _ = writeln!(err, "{}", error_json("UsageError", e.to_string().trim(), None));
            return EXIT_PARSE;
        }
    };
    match execute(cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "{}", error_json(e.kind(), &e.to_string(), Some(&e)));
            if e.is_parse_error() {
                EXIT_PARSE
            } else {
                EXIT_DOMAIN
            }
        }
    }
}
