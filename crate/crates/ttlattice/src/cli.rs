//! Command-line front end.
//!
//! Parses poset and space files, dispatches to the library, and emits
//! reports as canonical JSON (sorted keys, integers and strings only),
//! DOT diagrams, or a plain text summary. JSON output is byte-identical
//! for identical input and seed; timing appears only in the text format.

use crate::bigsupport::{
    self, big_supp, cb_filtration, ltg_report_for_space, sigma_property_suite,
    thomason_categorified, CheckOutcome, LtgVerdict,
};
use crate::bits::{self, Row};
use crate::frame::{
    alexandrov_space, hochster_dual, omega, parse_space, space_properties, specialization_order,
    stone_counit, stone_unit, triangle_identity_frame, triangle_identity_space, FiniteFrame,
    FiniteSpace,
};
use crate::perf::{
    self, object_with_support, parse_object, phi, psi, rho, rho_by_scan, support,
    support_datum_check, tensor, ClosedPointSpec, PerfError, PerfObject, TensorIdealHandle,
    ThomasonKx,
};
use crate::poly::{
    self, parse_field, parse_poly, rad_is_prime, rad_join, rad_leq, rad_meet, FieldSpec, Poly,
    PrimeIdealKx, PrimeVerdict, RadicalIdeal,
};
use crate::poset::{
    check_lattice, downset_lattice, find_forbidden_sublattice, is_distributive, parse_poset,
    FinitePoset, LatticeCheck,
};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

/// Output format for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable summary with timing.
    Text,
    /// Canonical JSON: sorted keys, no floats, no timing.
    Json,
    /// DOT diagram for graph-shaped results.
    Dot,
}

#[derive(Parser)]
#[command(
    name = "ttlat",
    version,
    about = "Finite Stone duality, radical ideals of k[x], the perfect-complex spectrum, and local-to-global checks"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Sample count for randomized suites.
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a poset file: lattice structure, distributivity with a
    /// forbidden-sublattice witness, and the irreducible round trip.
    Lattice {
        /// `check`
        op: String,
        /// Poset file.
        file: String,
    },
    /// Stone duality: `points`, `dual`, or `roundtrip` on a poset or
    /// space file.
    Stone {
        /// `points`, `dual`, or `roundtrip`
        op: String,
        /// Poset or space file.
        file: String,
    },
    /// Radical-ideal arithmetic in k[x]: `meet`, `join`, or `prime`.
    Rad {
        /// Coefficient field: `q`, `f2`, `f5`, or a bare prime.
        field: String,
        /// `meet`, `join`, or `prime`
        op: String,
        /// Generator polynomials.
        polys: Vec<String>,
    },
    /// The perfect-complex model: `support`, `tensor`, `rho`, `phi`,
    /// `psi`, or `object-for`.
    Ttspec {
        /// Operation name.
        op: String,
        /// Operation arguments; a trailing `mod p` or `over Q` names the
        /// field.
        args: Vec<String>,
    },
    /// Big supports: `cb-rank`, `ltg`, or `supp` on a space file.
    Big {
        /// `cb-rank`, `ltg`, or `supp`
        op: String,
        /// Poset or space file.
        file: String,
        /// Point labels for `supp`.
        points: Vec<String>,
    },
    /// Deterministic randomized property suites.
    Fuzz {
        /// One of: distributivity, rad-laws, support-axioms, sigma, ltg,
        /// stone.
        suite: String,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, message: msg.into() }
}

/// Result of a dispatched command: the report, whether a property that
/// must hold was violated, and an optional DOT rendering.
struct Outcome {
    report: Value,
    failed: bool,
    dot: Option<String>,
}

impl Outcome {
    fn plain(report: Value) -> Outcome {
        Outcome { report, failed: false, dot: None }
    }
}

/// Entry point over the process arguments and standard streams.
pub fn run() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(&args, &mut stdout.lock(), &mut stderr.lock())
}

/// Testable entry point: parses `argv`, writes the report to `out` and
/// diagnostics to `err`, and returns the exit code. Code 0 is a verdict,
/// 1 a violated property, 2 a usage or input error.
pub fn run_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let started = Instant::now();
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not failures.
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render();
            if code == 0 {
                let _ = write!(out, "{}", rendered);
            } else {
                let _ = write!(err, "{}", rendered);
            }
            return code;
        }
    };
    let format = cli.format;
    match dispatch(cli) {
        Ok(outcome) => {
            match format {
                Format::Json => {
                    let _ = writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&outcome.report).expect("serializable")
                    );
                }
                Format::Text => {
                    let mut text = String::new();
                    render_text(&outcome.report, 0, &mut text);
                    let _ = write!(out, "{}", text);
                    let _ = writeln!(out, "elapsed_ms: {}", started.elapsed().as_millis());
                }
                Format::Dot => match outcome.dot {
                    Some(dot) => {
                        let _ = write!(out, "{}", dot);
                    }
                    None => {
                        let _ = writeln!(err, "error: no DOT rendering for this command");
                        return 2;
                    }
                },
            }
            i32::from(outcome.failed)
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Lattice { op, file } => cmd_lattice(&op, &file),
        Command::Stone { op, file } => cmd_stone(&op, &file),
        Command::Rad { field, op, polys } => cmd_rad(&field, &op, &polys),
        Command::Ttspec { op, args } => cmd_ttspec(&op, &args),
        Command::Big { op, file, points } => cmd_big(&op, &file, &points, cli.seed, cli.samples),
        Command::Fuzz { suite } => cmd_fuzz(&suite, cli.seed, cli.samples),
    }
}

fn render_text(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) if !is_short(v) => {
                        let _ = writeln!(out, "{}{}:", pad, k);
                        render_text(v, indent + 1, out);
                    }
                    _ => {
                        let _ = writeln!(out, "{}{}: {}", pad, k, scalar_text(v));
                    }
                }
            }
        }
        Value::Array(items) => {
            for v in items {
                if is_short(v) {
                    let _ = writeln!(out, "{}- {}", pad, scalar_text(v));
                } else {
                    let _ = writeln!(out, "{}-", pad);
                    render_text(v, indent + 1, out);
                }
            }
        }
        other => {
            let _ = writeln!(out, "{}{}", pad, scalar_text(other));
        }
    }
}

fn is_short(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_object() && !i.is_array()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn base_report(command: &str) -> serde_json::Map<String, Value> {
    let mut map = serde_json::Map::new();
    map.insert("command".into(), Value::String(command.to_string()));
    map.insert("version".into(), Value::String(env!("CARGO_PKG_VERSION").to_string()));
    map
}

/// A parsed input carrier: either a poset or a topological space.
enum Carrier {
    Poset(FinitePoset),
    Space(FiniteSpace),
}

fn load_carrier(path: &str) -> Result<Carrier, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {}", path, e)))?;
    let keyword = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if keyword.starts_with("points:") {
        Ok(Carrier::Space(
            parse_space(&text).map_err(|e| usage(format!("{}: {}", path, e)))?,
        ))
    } else if keyword.starts_with("elements:") {
        Ok(Carrier::Poset(
            parse_poset(&text).map_err(|e| usage(format!("{}: {}", path, e)))?,
        ))
    } else {
        Err(usage(format!(
            "{}: expected a `points:` or `elements:` header",
            path
        )))
    }
}

fn load_space(path: &str) -> Result<FiniteSpace, Failure> {
    match load_carrier(path)? {
        Carrier::Space(x) => Ok(x),
        Carrier::Poset(p) => Ok(alexandrov_space(&p)),
    }
}

fn row_labels(labels: &[String], r: Row) -> Value {
    Value::Array(
        bits::members(r)
            .into_iter()
            .map(|i| Value::String(labels[i].clone()))
            .collect(),
    )
}

fn poset_dot(p: &FinitePoset) -> String {
    let mut dot = String::from("digraph hasse {\n  rankdir=BT;\n");
    for i in 0..p.len() {
        let _ = writeln!(dot, "  n{} [label=\"{}\"];", i, p.label(i));
    }
    for i in 0..p.len() {
        for j in p.upper_covers(i) {
            let _ = writeln!(dot, "  n{} -> n{};", i, j);
        }
    }
    dot.push_str("}\n");
    dot
}

fn space_dot(x: &FiniteSpace) -> Result<String, Failure> {
    let order = specialization_order(x)
        .map_err(|e| usage(format!("no specialization order: {}", e)))?;
    Ok(poset_dot(&order))
}

// ---------------------------------------------------------------------
// lattice

fn cmd_lattice(op: &str, file: &str) -> Result<Outcome, Failure> {
    if op != "check" {
        return Err(usage(format!("unknown lattice operation {:?}; expected `check`", op)));
    }
    let p = match load_carrier(file)? {
        Carrier::Poset(p) => p,
        Carrier::Space(_) => {
            return Err(usage("lattice check expects a poset file, not a space"))
        }
    };
    let mut report = base_report("lattice check");
    report.insert("elements".into(), json!(p.len()));
    let dot = Some(poset_dot(&p));
    let mut failed = false;
    match check_lattice(&p) {
        LatticeCheck::NotLattice { failure, bottom, top } => {
            report.insert("is_lattice".into(), json!(false));
            report.insert(
                "failure".into(),
                json!({
                    "pair": [p.label(failure.pair.0), p.label(failure.pair.1)],
                    "missing": if failure.missing_meet { "meet" } else { "join" },
                }),
            );
            report.insert("has_bottom".into(), json!(bottom.is_some()));
            report.insert("has_top".into(), json!(top.is_some()));
        }
        LatticeCheck::Lattice(l) => {
            report.insert("is_lattice".into(), json!(true));
            let verdict = is_distributive(&l);
            report.insert("distributive".into(), json!(verdict.distributive));
            if verdict.distributive {
                // Irreducible round trip: the downsets of the
                // join-irreducible subposet reassemble the lattice.
                let ji = l.join_irreducibles();
                let sub = l
                    .poset()
                    .induced_subposet(&ji)
                    .map_err(|e| usage(format!("irreducible subposet: {}", e)))?;
                let dl = downset_lattice(&sub)
                    .map_err(|e| usage(format!("downset lattice: {}", e)))?;
                let ok = dl.lattice.is_isomorphic(&l);
                report.insert("irreducible_round_trip".into(), json!(ok));
                failed |= !ok;
            } else {
                if let Some(w) = verdict.witness {
                    report.insert(
                        "witness".into(),
                        json!([p.label(w[0]), p.label(w[1]), p.label(w[2])]),
                    );
                }
                match verdict.forbidden.or_else(|| find_forbidden_sublattice(&l)) {
                    Some(f) => {
                        report.insert(
                            "forbidden".into(),
                            json!({
                                "kind": f.kind.to_string(),
                                "elements": f.elements.iter().map(|&e| p.label(e)).collect::<Vec<_>>(),
                            }),
                        );
                    }
                    None => {
                        // Non-distributive lattices always contain one.
                        report.insert("forbidden".into(), Value::Null);
                        failed = true;
                    }
                }
            }
        }
    }
    Ok(Outcome { report: Value::Object(report), failed, dot })
}

// ---------------------------------------------------------------------
// stone

fn frame_of(carrier: &Carrier) -> Result<(FiniteFrame, Vec<Row>, Vec<String>), Failure> {
    match carrier {
        Carrier::Space(x) => {
            let spatial = omega(x).map_err(|e| usage(e.to_string()))?;
            Ok((spatial.frame, spatial.opens, x.labels().to_vec()))
        }
        Carrier::Poset(p) => {
            let dl = downset_lattice(p).map_err(|e| usage(e.to_string()))?;
            let frame = FiniteFrame::new(dl.lattice)
                .expect("downset lattices are distributive");
            Ok((frame, dl.members, p.labels().to_vec()))
        }
    }
}

fn cmd_stone(op: &str, file: &str) -> Result<Outcome, Failure> {
    let carrier = load_carrier(file)?;
    match op {
        "points" => {
            let (frame, members, labels) = frame_of(&carrier)?;
            let pts = crate::frame::points(&frame);
            let pt_space = crate::frame::pt_space(&frame);
            let mut report = base_report("stone points");
            report.insert("frame_elements".into(), json!(frame.len()));
            report.insert("points".into(), json!(pts.len()));
            report.insert(
                "primes".into(),
                Value::Array(
                    pts.iter()
                        .map(|p| row_labels(&labels, members[p.prime]))
                        .collect(),
                ),
            );
            let dot = space_dot(&pt_space).ok();
            Ok(Outcome { report: Value::Object(report), failed: false, dot })
        }
        "dual" => {
            let x = match carrier {
                Carrier::Space(x) => x,
                Carrier::Poset(p) => alexandrov_space(&p),
            };
            let mut report = base_report("stone dual");
            match hochster_dual(&x) {
                Err(e) => {
                    report.insert("coherent".into(), json!(false));
                    report.insert("reason".into(), json!(e.to_string()));
                    Ok(Outcome::plain(Value::Object(report)))
                }
                Ok(dual) => {
                    report.insert("coherent".into(), json!(true));
                    report.insert("points".into(), json!(dual.points_len()));
                    report.insert("opens".into(), json!(dual.opens().len()));
                    let dd = hochster_dual(&dual).map_err(|e| usage(e.to_string()))?;
                    let involution = dd == x;
                    report.insert("involution".into(), json!(involution));
                    let dot = space_dot(&dual).ok();
                    Ok(Outcome {
                        report: Value::Object(report),
                        failed: !involution,
                        dot,
                    })
                }
            }
        }
        "roundtrip" => match carrier {
            Carrier::Space(x) => {
                let unit = stone_unit(&x).map_err(|e| usage(e.to_string()))?;
                let props = space_properties(&x);
                let triangles = triangle_identity_space(&x).map_err(|e| usage(e.to_string()))?;
                let mut report = base_report("stone roundtrip");
                report.insert("carrier".into(), json!("space"));
                report.insert("t0".into(), json!(props.t0));
                report.insert("sober".into(), json!(props.sober));
                report.insert("unit_continuous".into(), json!(unit.continuous));
                report.insert("unit_injective".into(), json!(unit.injective));
                report.insert("unit_surjective".into(), json!(unit.surjective));
                report.insert("unit_homeomorphism".into(), json!(unit.homeomorphism));
                report.insert("triangle_identities".into(), json!(triangles));
                // Sobriety theorem: the unit is a homeomorphism exactly
                // for T0 sober spaces.
                let coherent_claim = unit.homeomorphism == (props.t0 && props.sober);
                let failed = !triangles || !coherent_claim || !unit.continuous;
                Ok(Outcome { report: Value::Object(report), failed, dot: None })
            }
            Carrier::Poset(p) => {
                let dl = downset_lattice(&p).map_err(|e| usage(e.to_string()))?;
                let frame =
                    FiniteFrame::new(dl.lattice).expect("downset lattices are distributive");
                let counit = stone_counit(&frame);
                let triangles = triangle_identity_frame(&frame);
                let mut report = base_report("stone roundtrip");
                report.insert("carrier".into(), json!("poset"));
                report.insert("frame_elements".into(), json!(frame.len()));
                report.insert("counit_isomorphism".into(), json!(counit.is_isomorphism()));
                report.insert("triangle_identities".into(), json!(triangles));
                // Finite distributive lattices are spatial, so both must
                // hold.
                let failed = !counit.is_isomorphism() || !triangles;
                Ok(Outcome { report: Value::Object(report), failed, dot: None })
            }
        },
        other => Err(usage(format!(
            "unknown stone operation {:?}; expected points, dual, or roundtrip",
            other
        ))),
    }
}

// ---------------------------------------------------------------------
// rad

fn radical_from_text(text: &str, field: FieldSpec) -> Result<RadicalIdeal, Failure> {
    let f = parse_poly(text, field).map_err(|e| usage(e.to_string()))?;
    RadicalIdeal::radical_of_generator(&f).map_err(|e| usage(e.to_string()))
}

fn radical_value(i: &RadicalIdeal) -> Value {
    let kind = match i {
        RadicalIdeal::Zero => "zero",
        RadicalIdeal::Unit => "unit",
        RadicalIdeal::Principal(_) => "principal",
    };
    json!({ "kind": kind, "ideal": i.to_string() })
}

fn cmd_rad(field_text: &str, op: &str, polys: &[String]) -> Result<Outcome, Failure> {
    let field = parse_field(field_text).map_err(|e| usage(e.to_string()))?;
    let mut report = base_report(&format!("rad {}", op));
    report.insert("field".into(), json!(field.to_string()));
    match op {
        "meet" | "join" => {
            if polys.len() != 2 {
                return Err(usage(format!("rad {} expects exactly two polynomials", op)));
            }
            let a = radical_from_text(&polys[0], field)?;
            let b = radical_from_text(&polys[1], field)?;
            let result = if op == "meet" {
                rad_meet(&a, &b)
            } else {
                rad_join(&a, &b)
            }
            .map_err(|e| usage(e.to_string()))?;
            report.insert("left".into(), radical_value(&a));
            report.insert("right".into(), radical_value(&b));
            report.insert("result".into(), radical_value(&result));
            // Order compatibility: the meet sits below, the join above.
            let ok = if op == "meet" {
                rad_leq(&result, &a).unwrap_or(false) && rad_leq(&result, &b).unwrap_or(false)
            } else {
                rad_leq(&a, &result).unwrap_or(false) && rad_leq(&b, &result).unwrap_or(false)
            };
            Ok(Outcome { report: Value::Object(report), failed: !ok, dot: None })
        }
        "prime" => {
            if polys.len() != 1 {
                return Err(usage("rad prime expects exactly one polynomial"));
            }
            let i = radical_from_text(&polys[0], field)?;
            let verdict = match rad_is_prime(&i) {
                PrimeVerdict::Prime => "prime",
                PrimeVerdict::NotPrime => "not prime",
                PrimeVerdict::Undecided => "undecided",
            };
            report.insert("ideal".into(), radical_value(&i));
            report.insert("verdict".into(), json!(verdict));
            Ok(Outcome::plain(Value::Object(report)))
        }
        other => Err(usage(format!(
            "unknown rad operation {:?}; expected meet, join, or prime",
            other
        ))),
    }
}

// ---------------------------------------------------------------------
// ttspec

/// Splits a trailing `mod p` or `over Q` pair off an argument list and
/// resolves the working field, falling back to the TTLAT_FIELD variable.
fn split_field_suffix(args: &[String]) -> Result<(Vec<String>, Option<FieldSpec>), Failure> {
    let n = args.len();
    if n >= 2 && (args[n - 2] == "mod" || args[n - 2] == "over") {
        let spec = format!("x {} {}", args[n - 2], args[n - 1]);
        let (_, field) = poly::parse_poly_spec(&spec).map_err(|e| usage(e.to_string()))?;
        return Ok((args[..n - 2].to_vec(), field));
    }
    match std::env::var("TTLAT_FIELD") {
        Ok(name) => {
            let field = parse_field(&name)
                .map_err(|e| usage(format!("TTLAT_FIELD: {}", e)))?;
            Ok((args.to_vec(), Some(field)))
        }
        Err(_) => Ok((args.to_vec(), None)),
    }
}

fn require_field(field: Option<FieldSpec>) -> Result<FieldSpec, Failure> {
    field.ok_or_else(|| {
        usage("no field given; append `mod <p>` or `over Q`, or set TTLAT_FIELD")
    })
}

fn parse_thomason(args: &[String], field: FieldSpec) -> Result<ThomasonKx, Failure> {
    let joined = args.join(" ");
    let t = joined.trim();
    match t {
        "whole" => Ok(ThomasonKx::Whole),
        "closed" => Ok(ThomasonKx::AllClosed),
        "empty" | "" => Ok(ThomasonKx::Finite(Vec::new())),
        list => {
            let gens: Result<Vec<Poly>, _> = list
                .split(',')
                .map(|s| parse_poly(s.trim(), field))
                .collect();
            ThomasonKx::finite(gens.map_err(|e| usage(e.to_string()))?)
                .map_err(|e| usage(e.to_string()))
        }
    }
}

fn parse_ideal(args: &[String], field: FieldSpec) -> Result<TensorIdealHandle, Failure> {
    match args.split_first() {
        Some((head, rest)) if head == "everything" && rest.is_empty() => {
            Ok(TensorIdealHandle::Everything)
        }
        Some((head, rest)) if head == "torsion" => {
            if rest.is_empty() {
                Ok(TensorIdealHandle::TorsionOn(ClosedPointSpec::AllClosed))
            } else {
                match parse_thomason(rest, field)? {
                    ThomasonKx::Finite(gens) => {
                        Ok(TensorIdealHandle::TorsionOn(ClosedPointSpec::Finite(gens)))
                    }
                    _ => Err(usage("torsion ideals take a finite generator list")),
                }
            }
        }
        _ => Err(usage(
            "expected `everything`, `torsion`, or `torsion <f,g,...>`",
        )),
    }
}

fn cmd_ttspec(op: &str, raw_args: &[String]) -> Result<Outcome, Failure> {
    let (args, field) = split_field_suffix(raw_args)?;
    let mut report = base_report(&format!("ttspec {}", op));
    match op {
        "support" => {
            if args.len() != 1 {
                return Err(usage("ttspec support expects one object"));
            }
            let e = parse_object(&args[0], field).map_err(|e| usage(e.to_string()))?;
            report.insert("object".into(), json!(e.to_string()));
            report.insert("support".into(), json!(support(&e).to_string()));
            Ok(Outcome::plain(Value::Object(report)))
        }
        "tensor" => {
            if args.len() != 2 {
                return Err(usage("ttspec tensor expects two objects"));
            }
            let a = parse_object(&args[0], field).map_err(|e| usage(e.to_string()))?;
            let b = parse_object(&args[1], field).map_err(|e| usage(e.to_string()))?;
            let prod = tensor(&a, &b).map_err(|e| usage(e.to_string()))?;
            report.insert("left".into(), json!(a.to_string()));
            report.insert("right".into(), json!(b.to_string()));
            report.insert("result".into(), json!(prod.to_string()));
            // The support formula is part of the contract.
            let ok = support(&prod) == support(&a).inter(&support(&b));
            report.insert("support_formula".into(), json!(ok));
            Ok(Outcome { report: Value::Object(report), failed: !ok, dot: None })
        }
        "rho" => {
            if args.len() != 1 {
                return Err(usage("ttspec rho expects one prime: `0` or an irreducible"));
            }
            let field = require_field(field)?;
            let prime = if args[0] == "0" || args[0] == "(0)" || args[0] == "zero" {
                PrimeIdealKx::Zero
            } else {
                let f = parse_poly(&args[0], field).map_err(|e| usage(e.to_string()))?;
                PrimeIdealKx::closed(&f).map_err(|e| usage(e.to_string()))?
            };
            let image = rho(field, &prime).map_err(|e| usage(e.to_string()))?;
            report.insert("prime".into(), json!(prime.to_string()));
            report.insert("rho".into(), json!(image.to_string()));
            let mut failed = false;
            if let FieldSpec::Modular(p) = field {
                if p <= 5 {
                    let scanned = rho_by_scan(field, &prime, 3)
                        .map_err(|e| usage(e.to_string()))?;
                    let agree = scanned == image;
                    report.insert("scan_agrees".into(), json!(agree));
                    failed = !agree;
                }
            }
            Ok(Outcome { report: Value::Object(report), failed, dot: None })
        }
        "phi" => {
            let field = require_field(field)?;
            let ideal = parse_ideal(&args, field)?;
            let v = phi(&ideal);
            report.insert("ideal".into(), json!(ideal.to_string()));
            report.insert("thomason".into(), json!(v.to_string()));
            let round = psi(&v) == ideal;
            report.insert("round_trip".into(), json!(round));
            Ok(Outcome { report: Value::Object(report), failed: !round, dot: None })
        }
        "psi" => {
            let field = require_field(field)?;
            let v = parse_thomason(&args, field)?;
            let ideal = psi(&v);
            report.insert("thomason".into(), json!(v.to_string()));
            report.insert("ideal".into(), json!(ideal.to_string()));
            let round = phi(&ideal) == v;
            report.insert("round_trip".into(), json!(round));
            Ok(Outcome { report: Value::Object(report), failed: !round, dot: None })
        }
        "object-for" => {
            let field = require_field(field)?;
            let v = parse_thomason(&args, field)?;
            report.insert("thomason".into(), json!(v.to_string()));
            match object_with_support(field, &v) {
                Ok(e) => {
                    report.insert("realizable".into(), json!(true));
                    report.insert("object".into(), json!(e.to_string()));
                    let back = match (&v, support(&e)) {
                        (ThomasonKx::Whole, perf::SupportSet::Whole) => true,
                        (ThomasonKx::Finite(gens), perf::SupportSet::ClosedPoints(s)) => {
                            *gens == s
                        }
                        _ => false,
                    };
                    report.insert("support_matches".into(), json!(back));
                    Ok(Outcome { report: Value::Object(report), failed: !back, dot: None })
                }
                Err(e @ PerfError::NoRealization(_)) => {
                    report.insert("realizable".into(), json!(false));
                    report.insert("reason".into(), json!(e.to_string()));
                    Ok(Outcome::plain(Value::Object(report)))
                }
                Err(e) => Err(usage(e.to_string())),
            }
        }
        other => Err(usage(format!(
            "unknown ttspec operation {:?}; expected support, tensor, rho, phi, psi, or object-for",
            other
        ))),
    }
}

// ---------------------------------------------------------------------
// big

fn cmd_big(
    op: &str,
    file: &str,
    points: &[String],
    seed: u64,
    samples: usize,
) -> Result<Outcome, Failure> {
    let x = load_space(file)?;
    match op {
        "cb-rank" => {
            let filt = cb_filtration(&x);
            let mut report = base_report("big cb-rank");
            report.insert("points".into(), json!(x.points_len()));
            report.insert("rank".into(), json!(filt.rank.to_string()));
            report.insert(
                "stages".into(),
                Value::Array(
                    filt.stages
                        .iter()
                        .map(|s| row_labels(x.labels(), *s))
                        .collect(),
                ),
            );
            let dot = Some(filtration_dot(&x, &filt.stages));
            Ok(Outcome { report: Value::Object(report), failed: false, dot })
        }
        "ltg" => {
            let r = ltg_report_for_space(&x, seed, samples);
            let mut report = base_report("big ltg");
            report.insert("sober".into(), json!(r.sober));
            report.insert("td".into(), json!(r.td));
            report.insert("cb_rank".into(), json!(r.filtration.rank.to_string()));
            report.insert(
                "components".into(),
                Value::Array(
                    r.components
                        .iter()
                        .map(|c| {
                            json!({
                                "name": c.name,
                                "outcome": c.outcome.to_string(),
                            })
                        })
                        .collect(),
                ),
            );
            let verdict = r.verdict();
            report.insert("verdict".into(), json!(verdict.to_string()));
            let dot = Some(filtration_dot(&x, &r.filtration.stages));
            Ok(Outcome {
                report: Value::Object(report),
                failed: verdict == LtgVerdict::Fail,
                dot,
            })
        }
        "supp" => {
            let mut w = bits::EMPTY;
            for label in points {
                let i = x
                    .index_of(label)
                    .ok_or_else(|| usage(format!("unknown point {:?}", label)))?;
                bits::set(&mut w, i);
            }
            let mut report = base_report("big supp");
            report.insert("subset".into(), row_labels(x.labels(), w));
            match thomason_categorified(&x).and_then(|cl| big_supp(&cl, w)) {
                Ok(supp) => {
                    report.insert("applicable".into(), json!(true));
                    report.insert("support".into(), row_labels(x.labels(), supp));
                    Ok(Outcome::plain(Value::Object(report)))
                }
                Err(
                    e @ (bigsupport::BigError::HypothesesUnverified(_)
                    | bigsupport::BigError::NotTd(_)
                    | bigsupport::BigError::Space(_)),
                ) => {
                    report.insert("applicable".into(), json!(false));
                    report.insert("reason".into(), json!(e.to_string()));
                    Ok(Outcome::plain(Value::Object(report)))
                }
                Err(e) => Err(usage(e.to_string())),
            }
        }
        other => Err(usage(format!(
            "unknown big operation {:?}; expected cb-rank, ltg, or supp",
            other
        ))),
    }
}

fn filtration_dot(x: &FiniteSpace, stages: &[Row]) -> String {
    let mut dot = String::from("digraph filtration {\n  rankdir=BT;\n");
    for (i, stage) in stages.iter().enumerate() {
        let names: Vec<&str> = bits::members(*stage)
            .into_iter()
            .map(|p| x.label(p))
            .collect();
        let _ = writeln!(dot, "  s{} [label=\"stage {}: {{{}}}\"];", i, i, names.join(" "));
    }
    for i in 1..stages.len() {
        let _ = writeln!(dot, "  s{} -> s{};", i - 1, i);
    }
    dot.push_str("}\n");
    dot
}

// ---------------------------------------------------------------------
// fuzz

fn random_poset(rng: &mut ChaCha8Rng, max_n: usize) -> FinitePoset {
    let n = rng.gen_range(1..=max_n);
    let labels: Vec<String> = (0..n).map(|i| format!("e{}", i)).collect();
    let mut relations = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(0.35) {
                relations.push((i, j));
            }
        }
    }
    FinitePoset::new(labels, &relations).expect("index-ordered relations are acyclic")
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> Row {
    let mut w = bits::EMPTY;
    for p in 0..n {
        if rng.gen_bool(0.5) {
            bits::set(&mut w, p);
        }
    }
    w
}

fn random_poly(rng: &mut ChaCha8Rng, field: FieldSpec, max_degree: usize) -> Poly {
    let deg = rng.gen_range(0..=max_degree);
    let coeffs: Vec<poly::Scalar> = (0..=deg)
        .map(|i| {
            let last = i == deg;
            match field {
                FieldSpec::Modular(p) => {
                    let c = if last {
                        rng.gen_range(1..p)
                    } else {
                        rng.gen_range(0..p)
                    };
                    poly::Scalar::Mod(c)
                }
                FieldSpec::Rationals => {
                    let num: i64 = if last {
                        *[-3, -2, -1, 1, 2, 3].get(rng.gen_range(0..6)).unwrap()
                    } else {
                        rng.gen_range(-3..=3)
                    };
                    field.from_integer(num)
                }
            }
        })
        .collect();
    Poly::new(field, coeffs)
}

fn random_object(rng: &mut ChaCha8Rng, field: FieldSpec, irreducibles: &[Poly]) -> PerfObject {
    let count = rng.gen_range(0..=4);
    let mut obj = PerfObject::zero(field);
    for _ in 0..count {
        let shift = rng.gen_range(-2..=2i64);
        let part = if rng.gen_bool(0.3) {
            PerfObject::free(field, shift)
        } else {
            let g = &irreducibles[rng.gen_range(0..irreducibles.len())];
            let power = rng.gen_range(1..=3);
            PerfObject::torsion(g, power, shift).expect("generator is irreducible")
        };
        obj = obj.direct_sum(&part).expect("same field");
    }
    obj
}

struct SuiteResult {
    checked: usize,
    failures: Vec<String>,
}

impl SuiteResult {
    fn new() -> SuiteResult {
        SuiteResult { checked: 0, failures: Vec::new() }
    }

    fn note(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 8 {
            self.failures.push(describe());
        } else if !ok {
            self.failures.push("(further failures suppressed)".into());
        }
    }
}

fn fixture_m3() -> FinitePoset {
    FinitePoset::new(
        vec!["bot", "a", "b", "c", "top"],
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )
    .expect("m3 is a valid poset")
}

fn fixture_n5() -> FinitePoset {
    FinitePoset::new(
        vec!["bot", "u", "v", "w", "top"],
        &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
    )
    .expect("n5 is a valid poset")
}

fn suite_distributivity(rng: &mut ChaCha8Rng, samples: usize) -> SuiteResult {
    let mut result = SuiteResult::new();
    let mut candidates: Vec<FinitePoset> = vec![fixture_m3(), fixture_n5()];
    while candidates.len() < samples.max(8) {
        candidates.push(random_poset(rng, 8));
    }
    for p in &candidates {
        if let LatticeCheck::Lattice(l) = check_lattice(p) {
            let verdict = is_distributive(&l);
            let forbidden = find_forbidden_sublattice(&l);
            // Dual route: the triple-law scan and the sublattice search
            // must agree.
            result.note(verdict.distributive == forbidden.is_none(), || {
                format!("disagreement on a {}-element lattice", l.len())
            });
        }
    }
    result
}

fn suite_rad_laws(rng: &mut ChaCha8Rng, samples: usize) -> SuiteResult {
    let mut result = SuiteResult::new();
    let fields = [FieldSpec::Rationals, FieldSpec::Modular(2), FieldSpec::Modular(5)];
    for _ in 0..samples {
        let field = fields[rng.gen_range(0..fields.len())];
        let f = random_poly(rng, field, 6);
        let g = random_poly(rng, field, 6);
        let h = random_poly(rng, field, 6);
        let (ra, rb, rc) = (
            RadicalIdeal::radical_of_generator(&f).expect("radical"),
            RadicalIdeal::radical_of_generator(&g).expect("radical"),
            RadicalIdeal::radical_of_generator(&h).expect("radical"),
        );
        let lhs = rad_meet(&ra, &rad_join(&rb, &rc).expect("join")).expect("meet");
        let rhs = rad_join(
            &rad_meet(&ra, &rb).expect("meet"),
            &rad_meet(&ra, &rc).expect("meet"),
        )
        .expect("join");
        result.note(lhs == rhs, || format!("distributivity failed over {}", field));
        // Product-then-radical oracle for the meet.
        let product = RadicalIdeal::radical_of_generator(&f.mul(&g)).expect("radical");
        let meet = rad_meet(&ra, &rb).expect("meet");
        result.note(product == meet, || {
            format!("radical of product disagreed over {}", field)
        });
    }
    result
}

fn suite_support_axioms(rng: &mut ChaCha8Rng, samples: usize) -> SuiteResult {
    let mut result = SuiteResult::new();
    for _ in 0..samples.div_euclid(8).max(4) {
        let p = if rng.gen_bool(0.5) { 2 } else { 3 };
        let field = FieldSpec::Modular(p);
        let irreducibles =
            poly::enumerate_irreducibles(p, 2).expect("small irreducible sieve");
        let mut sample = vec![PerfObject::zero(field), PerfObject::unit(field)];
        for _ in 0..6 {
            sample.push(random_object(rng, field, &irreducibles));
        }
        match support_datum_check(&sample) {
            Ok(report) => result.note(report.pass(), || {
                let bad: Vec<&str> = report
                    .axioms
                    .iter()
                    .filter(|a| !a.holds)
                    .map(|a| a.name)
                    .collect();
                format!("axioms failed over F_{}: {}", p, bad.join(", "))
            }),
            Err(e) => result.note(false, || e.to_string()),
        }
    }
    result
}

fn suite_sigma(rng: &mut ChaCha8Rng, samples: usize) -> SuiteResult {
    let mut result = SuiteResult::new();
    for _ in 0..samples.div_euclid(10).max(4) {
        let p = random_poset(rng, 5);
        let x = alexandrov_space(&p);
        let cl = match thomason_categorified(&x) {
            Ok(cl) => cl,
            Err(e) => {
                result.note(false, || format!("finite T0 space rejected: {}", e));
                continue;
            }
        };
        let subsets: Vec<Row> = (0..10).map(|_| random_subset(rng, x.points_len())).collect();
        let report = sigma_property_suite(&cl, &subsets);
        result.note(report.pass(), || {
            let bad: Vec<&str> = report
                .properties
                .iter()
                .filter(|q| !q.holds)
                .map(|q| q.id)
                .collect();
            format!("sigma properties failed: {}", bad.join(", "))
        });
    }
    result
}

fn suite_ltg(rng: &mut ChaCha8Rng, samples: usize) -> SuiteResult {
    let mut result = SuiteResult::new();
    for k in 0..samples.div_euclid(10).max(4) {
        let p = random_poset(rng, 5);
        let x = alexandrov_space(&p);
        let report = ltg_report_for_space(&x, k as u64, 20);
        // Finite T0 spaces satisfy every hypothesis, so only a full pass
        // is acceptable.
        result.note(report.verdict() == LtgVerdict::Pass, || {
            let bad: Vec<String> = report
                .components
                .iter()
                .filter(|c| !matches!(c.outcome, CheckOutcome::Pass { .. }))
                .map(|c| format!("{}: {}", c.name, c.outcome))
                .collect();
            format!("{}-point space: {}", x.points_len(), bad.join("; "))
        });
    }
    result
}

fn suite_stone(rng: &mut ChaCha8Rng, samples: usize) -> SuiteResult {
    let mut result = SuiteResult::new();
    for _ in 0..samples.div_euclid(10).max(4) {
        let p = random_poset(rng, 6);
        let dl = downset_lattice(&p).expect("within size bounds");
        let frame = FiniteFrame::new(dl.lattice).expect("distributive");
        let counit = stone_counit(&frame);
        result.note(counit.is_isomorphism(), || {
            format!("counit not iso on a {}-element frame", frame.len())
        });
        result.note(triangle_identity_frame(&frame), || {
            format!("frame triangle identity failed on {} elements", frame.len())
        });
        let x = alexandrov_space(&p);
        let unit = stone_unit(&x).expect("alexandrov spaces are T0");
        result.note(unit.homeomorphism, || {
            format!("unit not a homeomorphism on {} points", x.points_len())
        });
        match triangle_identity_space(&x) {
            Ok(ok) => result.note(ok, || "space triangle identity failed".into()),
            Err(e) => result.note(false, || e.to_string()),
        }
    }
    result
}

fn cmd_fuzz(suite: &str, seed: u64, samples: usize) -> Result<Outcome, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let result = match suite {
        "distributivity" => suite_distributivity(&mut rng, samples),
        "rad-laws" => suite_rad_laws(&mut rng, samples),
        "support-axioms" => suite_support_axioms(&mut rng, samples),
        "sigma" => suite_sigma(&mut rng, samples),
        "ltg" => suite_ltg(&mut rng, samples),
        "stone" => suite_stone(&mut rng, samples),
        other => {
            return Err(usage(format!(
                "unknown fuzz suite {:?}; expected distributivity, rad-laws, support-axioms, sigma, ltg, or stone",
                other
            )))
        }
    };
    let mut report = base_report(&format!("fuzz {}", suite));
    report.insert("seed".into(), json!(seed));
    report.insert("samples".into(), json!(samples));
    report.insert("checked".into(), json!(result.checked));
    report.insert("pass".into(), json!(result.failures.is_empty()));
    report.insert(
        "failures".into(),
        Value::Array(result.failures.iter().map(|f| json!(f)).collect()),
    );
    let failed = !result.failures.is_empty();
    Ok(Outcome { report: Value::Object(report), failed, dot: None })
}

// ---------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn run_strings(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("ttlat".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(&argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn rad_join_of_coprime_generators_is_the_unit() {
        let (code, out, _) = run_strings(&["rad", "f5", "join", "x", "x+1"]);
        assert_eq!(code, 0);
        assert!(out.contains("unit"), "{}", out);
    }

    #[test]
    fn tensor_example_from_the_worked_model() {
        let (code, out, _) =
            run_strings(&["ttspec", "tensor", "k[x]/(x)", "k[x]/(x^2)", "mod", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("k[x]/(x) + S^1 k[x]/(x)"), "{}", out);
    }

    #[test]
    fn unknown_subcommand_is_a_usage_error() {
        let (code, _, err) = run_strings(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());
    }

    #[test]
    fn unknown_suite_is_a_usage_error() {
        let (code, _, err) = run_strings(&["fuzz", "nonsense"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown fuzz suite"));
    }

    #[test]
    fn fuzz_suites_pass_with_small_budgets() {
        for suite in ["distributivity", "rad-laws", "support-axioms", "sigma", "ltg", "stone"] {
            let (code, out, err) = run_strings(&[
                "fuzz", suite, "--seed", "7", "--samples", "40", "--format", "json",
            ]);
            assert_eq!(code, 0, "suite {}: {} {}", suite, out, err);
        }
    }

    #[test]
    fn json_output_is_deterministic() {
        let (c1, out1, _) =
            run_strings(&["fuzz", "rad-laws", "--seed", "3", "--samples", "20", "--format", "json"]);
        let (c2, out2, _) =
            run_strings(&["fuzz", "rad-laws", "--seed", "3", "--samples", "20", "--format", "json"]);
        assert_eq!(c1, 0);
        assert_eq!(c2, 0);
        assert_eq!(out1, out2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_strings(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("ttlat"));
    }
}
