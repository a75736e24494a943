//! Command-line front end. Each subcommand parses its flags, delegates to
//! the owning module, and prints a single JSON document (default) or a
//! plain-text rendering (`--format text`) to stdout. No algebra lives here.
//!
//! Exit codes: 0 on success (for `verify`: all cells pass or skip), 1 when
//! any `verify` cell fails, 2 on bad usage or malformed input.

use std::fmt::Write as _;
use std::fs;
use std::str::FromStr;
use std::sync::Arc;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify;
use crate::intmat::{self, IntMatrix};
use crate::ring::{ElementId, Ring};
use crate::sr::{self, Side, VariantKind};
use crate::suite::{self, PropertyReport};

const RING_SPEC_HELP: &str =
    "Ring spec: Z/n, M(k,R), T(k,R), corner(R,e), op(R), quot(R,g,..), or products with \" x \"";

#[derive(Parser)]
#[command(
    name = "srone",
    version,
    about = "Decide, certify, and brute-force-verify stable range one for ring elements"
)]
struct Cli {
    /// Output rendering
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a ring from a spec string and summarize it
    Ring(RingArgs),
    /// Report every class membership of one element
    Classify(ClassifyArgs),
    /// Decide a property of one element
    Check(CheckArgs),
    /// Build a certified witness, re-verified before printing
    Witness(WitnessArgs),
    /// Exact decisions for integer matrices
    #[command(subcommand)]
    Intmat(IntmatCommand),
    /// Run verification cells and report one line per (theorem, ring)
    Verify(VerifyArgs),
}

#[derive(Args)]
struct RingArgs {
    #[arg(help = RING_SPEC_HELP)]
    spec: String,
    /// Also compute ring-level predicates (scans all elements; slow past a
    /// few thousand elements)
    #[arg(long)]
    predicates: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(help = RING_SPEC_HELP)]
    ring: String,
    /// Element literal (e.g. "5", "[[1,0],[0,0]]", "(1,0)"), or #index
    #[arg(long)]
    element: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    /// Stable range one
    Sr,
}

#[derive(Args)]
struct CheckArgs {
    /// Property to decide
    #[arg(value_enum)]
    property: Property,
    #[arg(help = RING_SPEC_HELP)]
    ring: String,
    /// Element literal, or #index
    #[arg(long)]
    element: String,
    /// Mirror-image condition to use
    #[arg(long, default_value = "right", value_parser = Side::from_str)]
    side: Side,
    /// Witness set the unitizer must come from
    #[arg(long, default_value = "full", value_parser = VariantKind::from_str)]
    variant: VariantKind,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["t", "x"])))]
struct WitnessArgs {
    #[arg(help = RING_SPEC_HELP)]
    ring: String,
    /// The element to unitize (literal or #index)
    #[arg(long)]
    a: String,
    /// Pair mode: complete the comaximal pair aR + tR = R to a unit a + tb
    #[arg(long)]
    t: Option<String>,
    /// Form3 mode: find b with a + b - axb a unit
    #[arg(long)]
    x: Option<String>,
    /// Mirror-image condition (form3 mode only)
    #[arg(long, default_value = "right", value_parser = Side::from_str)]
    side: Side,
    /// Witness set b must come from (form3 mode only)
    #[arg(long, default_value = "full", value_parser = VariantKind::from_str)]
    variant: VariantKind,
}

#[derive(Subcommand)]
enum IntmatCommand {
    /// Decide stable range one: yes iff det is 0 or ±1, else a refutation
    /// certificate
    Check(IntmatCheckArgs),
    /// Find B with A + (I - AX)B unimodular
    Witness(IntmatWitnessArgs),
    /// Audit both orientations of the 2x2-block example, determinant and
    /// Schur criteria side by side
    #[command(name = "audit-6-12")]
    Audit612,
}

const MATRIX_HELP: &str =
    "Path to a matrix file {\"n\": k, \"rows\": [[\"..\", ..], ..]}, or inline JSON starting with {";

#[derive(Args)]
struct IntmatCheckArgs {
    #[arg(long, help = MATRIX_HELP)]
    matrix: String,
}

#[derive(Args)]
struct IntmatWitnessArgs {
    #[arg(long, help = MATRIX_HELP)]
    matrix: String,
    /// The conductor X, same format
    #[arg(long, help = MATRIX_HELP)]
    x: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated selectors: exact ids, prefixes (T2, L3.2), families
    /// (sjl, prop36, circle), or all
    #[arg(long, default_value = "all")]
    theorems: String,
    /// "default" for the standing registry, or comma-separated ring specs
    #[arg(long, default_value = "default")]
    rings: String,
    /// Instance budget per cell; falls back to SRONE_BUDGET, then the
    /// built-in default
    #[arg(long)]
    budget: Option<u64>,
}

/// Parse the process arguments and run; the result is the exit code.
pub fn run() -> u8 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok((output, code)) => {
            println!("{output}");
            code
        }
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            2
        }
    }
}

struct Failure(String);

fn bad<E: std::fmt::Display>(e: E) -> Failure {
    Failure(e.to_string())
}

fn dispatch(cli: &Cli) -> Result<(String, u8), Failure> {
    match &cli.command {
        Command::Ring(args) => ring_summary(args, cli.format),
        Command::Classify(args) => classify_element(args, cli.format),
        Command::Check(args) => check_property(args, cli.format),
        Command::Witness(args) => build_witness(args, cli.format),
        Command::Intmat(IntmatCommand::Check(args)) => intmat_check(args, cli.format),
        Command::Intmat(IntmatCommand::Witness(args)) => intmat_witness(args, cli.format),
        Command::Intmat(IntmatCommand::Audit612) => intmat_audit(cli.format),
        Command::Verify(args) => verify(args, cli.format),
    }
}

/// `text` names an element either as a literal or as `#index`.
fn element_arg(ring: &Ring, text: &str) -> Result<ElementId, Failure> {
    if let Some(index) = text.strip_prefix('#') {
        let i: usize = index
            .parse()
            .map_err(|_| Failure(format!("`#{index}` is not an element index")))?;
        if i >= ring.order() {
            return Err(Failure(format!(
                "index {i} out of range: {} has {} elements",
                ring.id(),
                ring.order()
            )));
        }
        Ok(i as ElementId)
    } else {
        ring.parse_element(text).map_err(bad)
    }
}

fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => value.to_string(),
        Format::Text => match value.as_object() {
            Some(map) => {
                let width = map.keys().map(String::len).max().unwrap_or(0);
                let mut lines: Vec<String> = Vec::new();
                for (k, v) in map {
                    let shown = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    lines.push(format!("{k:<width$}  {shown}"));
                }
                lines.join("\n")
            }
            None => value.to_string(),
        },
    }
}

fn ring_summary(args: &RingArgs, format: Format) -> Result<(String, u8), Failure> {
    let ring = Ring::parse_spec(&args.spec).map_err(bad)?;
    let commutative = ring
        .elements()
        .all(|a| ring.elements().all(|b| ring.mul(a, b) == ring.mul(b, a)));
    let mut out = json!({
        "id": ring.id(),
        "order": ring.order(),
        "commutative": commutative,
        "units": ring.units().units.len(),
        "idempotents": ring.idempotents().len(),
        "involution": ring.has_involution(),
    });
    if args.predicates {
        out["predicates"] = serde_json::to_value(classify::ring_predicates(&ring)).map_err(bad)?;
    }
    Ok((render(&out, format), 0))
}

fn classify_element(args: &ClassifyArgs, format: Format) -> Result<(String, u8), Failure> {
    let ring = Ring::parse_spec(&args.ring).map_err(bad)?;
    let a = element_arg(&ring, &args.element)?;
    let mut out = json!({
        "ring": ring.id(),
        "element": ring.format_element(a),
    });
    out["classes"] = serde_json::to_value(classify::classify(&ring, a)).map_err(bad)?;
    Ok((render(&out, format), 0))
}

fn check_property(args: &CheckArgs, format: Format) -> Result<(String, u8), Failure> {
    let ring = Ring::parse_spec(&args.ring).map_err(bad)?;
    let a = element_arg(&ring, &args.element)?;
    let Property::Sr = args.property;
    let sr = sr::has_sr1(&ring, a, args.side, args.variant);
    let mut out = json!({
        "sr": sr,
        "side": args.side.label(),
    });
    if args.variant != VariantKind::Full {
        out["variant"] = json!(args.variant.label());
    }
    Ok((render(&out, format), 0))
}

fn build_witness(args: &WitnessArgs, format: Format) -> Result<(String, u8), Failure> {
    let ring = Ring::parse_spec(&args.ring).map_err(bad)?;
    let a = element_arg(&ring, &args.a)?;
    if let Some(t_text) = &args.t {
        if args.side == Side::Left {
            return Err(Failure(
                "pair witnesses are right-sided; wrap the ring in op(..) for the left version"
                    .into(),
            ));
        }
        if args.variant != VariantKind::Full {
            return Err(Failure(
                "pair witnesses search the full ring; --variant applies to --x mode".into(),
            ));
        }
        let t = element_arg(&ring, t_text)?;
        let cert = sr::pair_witness(&ring, a, t).map_err(bad)?;
        return Ok((render(&cert.render(&ring), format), 0));
    }
    let x = element_arg(&ring, args.x.as_deref().expect("clap enforces the mode group"))?;
    match sr::sr1_witness(&ring, a, x, args.side, args.variant) {
        Some(cert) => Ok((render(&cert.render(&ring), format), 0)),
        None => {
            let out = json!({
                "found": false,
                "a": ring.format_element(a),
                "x": ring.format_element(x),
                "side": args.side.label(),
                "variant": args.variant.label(),
            });
            Ok((render(&out, format), 0))
        }
    }
}

/// A `--matrix` argument is inline JSON when it starts with `{`, otherwise a
/// file path.
fn load_matrix(source: &str) -> Result<IntMatrix, Failure> {
    let text = if source.trim_start().starts_with('{') {
        source.to_string()
    } else {
        fs::read_to_string(source).map_err(|e| Failure(format!("reading {source}: {e}")))?
    };
    IntMatrix::from_json_str(&text).map_err(bad)
}

fn intmat_check(args: &IntmatCheckArgs, format: Format) -> Result<(String, u8), Failure> {
    let m = load_matrix(&args.matrix)?;
    let out = json!({
        "sr": intmat::sr1_int(&m),
        "det": m.det_exact().to_string(),
    });
    Ok((render(&out, format), 0))
}

fn intmat_witness(args: &IntmatWitnessArgs, format: Format) -> Result<(String, u8), Failure> {
    let a = load_matrix(&args.matrix)?;
    let x = load_matrix(&args.x)?;
    let b = intmat::int_witness(&a, &x).map_err(bad)?;
    let completed = a.add(&IntMatrix::identity(a.n()).sub(&a.mul(&x)).mul(&b));
    let output = match format {
        Format::Json => json!({
            "b": b.to_json(),
            "det": completed.det_exact().to_string(),
        })
        .to_string(),
        Format::Text => format!("b    {b}\ndet  {}", completed.det_exact()),
    };
    Ok((output, 0))
}

fn intmat_audit(format: Format) -> Result<(String, u8), Failure> {
    let audit = intmat::audit_6_12();
    let output = match format {
        Format::Json => serde_json::to_string(&audit).map_err(bad)?,
        Format::Text => {
            let mut text = String::new();
            for side in &audit.sides {
                let _ = writeln!(
                    text,
                    "{}: det {} (sr {}), schur complement {} with det {} (sr {})",
                    side.label,
                    side.det,
                    if side.det_criterion_sr_one { "yes" } else { "no" },
                    side.schur_complement,
                    side.schur_det,
                    if side.schur_criterion_sr_one { "yes" } else { "no" },
                );
            }
            let _ = writeln!(
                text,
                "sr-one orientation: {}",
                audit.sr_one_label.as_deref().unwrap_or("none")
            );
            let _ = writeln!(text, "criteria agree: {}", audit.criteria_agree);
            let _ = write!(text, "note: {}", audit.note);
            text
        }
    };
    Ok((output, 0))
}

/// Split on commas outside parentheses, so specs like "M(2,Z/4)" survive in
/// a comma-separated list.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts.into_iter().map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn verify(args: &VerifyArgs, format: Format) -> Result<(String, u8), Failure> {
    let mut ids: Vec<&'static str> = Vec::new();
    for selector in split_top_level(&args.theorems) {
        ids.extend(suite::expand_selector(selector).map_err(bad)?);
    }
    ids.sort_unstable();
    ids.dedup();
    if ids.is_empty() {
        return Err(Failure("no theorems selected".into()));
    }
    let rings: Vec<Arc<Ring>> = if args.rings == "default" {
        suite::default_registry()
    } else {
        split_top_level(&args.rings)
            .into_iter()
            .map(|spec| Ring::parse_spec(spec).map_err(bad))
            .collect::<Result<_, _>>()?
    };
    let budget = args.budget.unwrap_or_else(suite::default_budget);
    let reports = suite::run_suite(&rings, &ids, budget).map_err(bad)?;
    let code = if suite::any_fail(&reports) { 1 } else { 0 };
    let output = match format {
        Format::Json => serde_json::to_string(&reports).map_err(bad)?,
        Format::Text => report_table(&reports),
    };
    Ok((output, code))
}

fn report_table(reports: &[PropertyReport]) -> String {
    let tw = reports.iter().map(|r| r.theorem.len()).chain([7]).max().unwrap();
    let rw = reports.iter().map(|r| r.ring.len()).chain([4]).max().unwrap();
    let iw = reports
        .iter()
        .map(|r| r.instances.to_string().len())
        .chain(["instances".len()])
        .max()
        .unwrap();
    let mut lines = vec![format!(
        "{:<tw$}  {:<rw$}  {:>iw$}  outcome",
        "theorem", "ring", "instances"
    )];
    for r in reports {
        lines.push(format!(
            "{:<tw$}  {:<rw$}  {:>iw$}  {}",
            r.theorem,
            r.ring,
            r.instances,
            r.outcome.label()
        ));
        if let Some(cx) = &r.counterexample {
            lines.push(format!("{:tw$}  counterexample: {cx}", ""));
        }
    }
    lines.join("\n")
}
