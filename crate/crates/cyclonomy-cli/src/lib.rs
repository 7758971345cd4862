//! JSON command-line front end. Every subcommand prints one CommandResult
//! object: `{"command", "ok", "data"}` on success, `{"command", "ok",
//! "error": {"code", "message"}}` on failure. Exit codes: 0 success, 1 domain
//! error (or a flagged irregular prime), 2 usage.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use cyclonomy::bernoulli::{bernoulli, with_table};
use cyclonomy::class_number::certify_class_number;
use cyclonomy::context::{Ctx, FieldContext};
use cyclonomy::descent::{classify_case, flt_search, q_table, CaseClass, FermatTriple};
use cyclonomy::hilbert90::{hilbert90_integral, hilbert90_witness, GaloisGroup};
use cyclonomy::parse::{parse_int_element, parse_rat_element};
use cyclonomy::regularity::{is_regular, RegularityReport};
use cyclonomy::splitting::prime_split;
use cyclonomy::units::{
    as_unit, decompose_real, default_kummer_generators, kummer_search, UnitElem,
};
use cyclonomy::{CycInt, CycRat, Error};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use std::ffi::OsString;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(
    name = "cyclonomy",
    version,
    about = "Exact arithmetic in prime cyclotomic fields: regularity, ideals, units, descent"
)]
struct Cli {
    /// Emit compact JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,

    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    /// Bernoulli cache file: JSON array of [n, numerator, denominator].
    #[arg(long, global = true, env = "CYCLONOMY_CACHE")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Test whether an odd prime is regular.
    Regular {
        p: u64,
        /// Exit with code 1 when the prime turns out irregular.
        #[arg(long)]
        fail_on_irregular: bool,
    },
    /// Regularity reports for every prime in [from, to].
    #[command(name = "regular-range")]
    RegularRange { from: u64, to: u64 },
    /// The exact Bernoulli number B_n.
    Bernoulli { n: u64 },
    /// Certified class number for p in {3, 5, 7}.
    #[command(name = "class-number")]
    ClassNumber {
        #[arg(short)]
        p: u64,
    },
    /// Splitting of the rational prime q in the p-th cyclotomic field.
    Split {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        q: u64,
    },
    /// Exhaustive search for a^p + b^p = c^p with c below the bound.
    #[command(name = "flt-search")]
    FltSearch {
        #[arg(short, value_parser = clap::value_parser!(u32).range(2..))]
        p: u32,
        #[arg(long)]
        bound: u64,
    },
    /// Case split of a candidate triple.
    Classify {
        #[arg(short)]
        p: u64,
        a: i64,
        b: i64,
        c: i64,
    },
    /// Quotient table (x + zeta^m y)/(zeta - 1) with residues.
    Qtable {
        #[arg(short)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Witness epsilon with eta * sigma(epsilon) = epsilon for norm-one eta.
    #[command(name = "hilbert90")]
    Hilbert90 {
        #[arg(short)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
    },
    /// Bounded search for a p-th root of a unit.
    #[command(name = "kummer-check")]
    KummerCheck {
        #[arg(short)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        unit: String,
        #[arg(long = "gen", allow_hyphen_values = true)]
        gens: Vec<String>,
        #[arg(long)]
        bound: u64,
    },
    /// Decomposition u = zeta^n x with x fixed by conjugation.
    #[command(name = "unit-decompose")]
    UnitDecompose {
        #[arg(short)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        unit: String,
    },
    /// Field norm of an element (use -- before negative coefficients).
    Norm {
        #[arg(short)]
        p: u64,
        element: String,
    },
    /// Field trace of an element (use -- before negative coefficients).
    Trace {
        #[arg(short)]
        p: u64,
        element: String,
    },
}

/// One command's outcome, serialized verbatim as the process output.
#[derive(Clone, Debug)]
pub struct CommandResult {
    pub command: String,
    pub ok: bool,
    pub data: Option<Value>,
    pub error: Option<Value>,
}

impl CommandResult {
    pub fn to_value(&self) -> Value {
        let mut map = Map::new();
        map.insert("command".into(), Value::String(self.command.clone()));
        map.insert("ok".into(), Value::Bool(self.ok));
        if let Some(data) = &self.data {
            map.insert("data".into(), data.clone());
        }
        if let Some(error) = &self.error {
            map.insert("error".into(), error.clone());
        }
        Value::Object(map)
    }
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Regular { .. } => "regular",
        Cmd::RegularRange { .. } => "regular-range",
        Cmd::Bernoulli { .. } => "bernoulli",
        Cmd::ClassNumber { .. } => "class-number",
        Cmd::Split { .. } => "split",
        Cmd::FltSearch { .. } => "flt-search",
        Cmd::Classify { .. } => "classify",
        Cmd::Qtable { .. } => "qtable",
        Cmd::Hilbert90 { .. } => "hilbert90",
        Cmd::KummerCheck { .. } => "kummer-check",
        Cmd::UnitDecompose { .. } => "unit-decompose",
        Cmd::Norm { .. } => "norm",
        Cmd::Trace { .. } => "trace",
    }
}

fn int_coeffs(e: &CycInt) -> Value {
    Value::Array(
        e.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

fn rat_coeffs(e: &CycRat) -> Value {
    Value::Array(
        e.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

fn report_value(report: &RegularityReport) -> Value {
    json!({
        "p": report.p,
        "regular": report.regular,
        "irregular_pairs": report.irregular_pairs,
    })
}

fn ctx_for(p: u64) -> Result<Ctx, Error> {
    FieldContext::new(p)
}

fn parse_unit(ctx: &Ctx, text: &str) -> Result<UnitElem, Error> {
    as_unit(parse_int_element(ctx, text)?)
}

fn dispatch(cli: &Cli) -> Result<Value, Error> {
    match &cli.command {
        Cmd::Regular { p, .. } => Ok(report_value(&is_regular(*p)?)),
        Cmd::RegularRange { from, to } => {
            let reports: Vec<Value> = (*from..=*to)
                .filter_map(|p| is_regular(p).ok())
                .map(|r| report_value(&r))
                .collect();
            Ok(json!({ "from": from, "to": to, "reports": reports }))
        }
        Cmd::Bernoulli { n } => {
            let b = bernoulli(*n);
            Ok(json!({
                "n": b.n,
                "numerator": b.numerator.to_string(),
                "denominator": b.denominator.to_string(),
            }))
        }
        Cmd::ClassNumber { p } => {
            let ctx = ctx_for(*p)?;
            let cert = certify_class_number(&ctx)?;
            let primes: Vec<Value> = cert
                .primes_checked
                .iter()
                .map(|c| {
                    json!({
                        "q": c.q,
                        "f": c.f,
                        "g": c.g,
                        "principal_witness": c
                            .principal_witness
                            .as_ref()
                            .map(int_coeffs)
                            .unwrap_or(Value::Null),
                    })
                })
                .collect();
            Ok(json!({
                "p": cert.p,
                "minkowski_hi": cert.minkowski_hi.to_string(),
                "primes_checked": primes,
                "class_number": cert.class_number,
            }))
        }
        Cmd::Split { p, q } => {
            let ctx = ctx_for(*p)?;
            let data = prime_split(&ctx, *q)?;
            let norms: Vec<Value> = data
                .primes
                .iter()
                .map(|ideal| Value::String(ideal.norm().to_string()))
                .collect();
            Ok(json!({
                "q": data.q,
                "e": data.e,
                "f": data.f,
                "g": data.g,
                "norms": norms,
            }))
        }
        Cmd::FltSearch { p, bound } => {
            let solutions: Vec<Value> = flt_search(*p, *bound)
                .iter()
                .map(|t| json!({ "a": t.a, "b": t.b, "c": t.c }))
                .collect();
            Ok(json!({ "p": p, "bound": bound, "solutions": solutions }))
        }
        Cmd::Classify { p, a, b, c } => {
            ctx_for(*p)?;
            let triple = FermatTriple {
                a: *a,
                b: *b,
                c: *c,
                exponent: *p as u32,
            };
            let case = match classify_case(&triple, *p) {
                CaseClass::CaseI => "CaseI",
                CaseClass::CaseII => "CaseII",
                CaseClass::Degenerate => "Degenerate",
            };
            Ok(json!({ "p": p, "a": a, "b": b, "c": c, "case": case }))
        }
        Cmd::Qtable { p, x, y } => {
            let ctx = ctx_for(*p)?;
            let x = parse_int_element(&ctx, x)?;
            let y = parse_int_element(&ctx, y)?;
            let table = q_table(&x, &y)?;
            let zeros: Vec<u64> = table
                .iter()
                .filter(|e| e.residue == 0)
                .map(|e| e.m)
                .collect();
            let entries: Vec<Value> = table
                .iter()
                .map(|e| {
                    json!({
                        "m": e.m,
                        "quotient": int_coeffs(&e.quotient),
                        "residue": e.residue,
                    })
                })
                .collect();
            Ok(json!({
                "p": p,
                "x": int_coeffs(&x),
                "y": int_coeffs(&y),
                "entries": entries,
                "eta_zero": if zeros.len() == 1 { json!(zeros[0]) } else { Value::Null },
            }))
        }
        Cmd::Hilbert90 { p, eta } => {
            let ctx = ctx_for(*p)?;
            let eta = parse_rat_element(&ctx, eta)?;
            let group = GaloisGroup::new(&ctx);
            let (epsilon, coeffs) = if eta.is_integral() {
                let eps = hilbert90_integral(&eta)?;
                let rat = eps.to_rat();
                (rat, int_coeffs(&eps))
            } else {
                let eps = hilbert90_witness(&eta)?;
                let coeffs = rat_coeffs(&eps);
                (eps, coeffs)
            };
            let verified = &eta * &group.apply(1, &epsilon) == epsilon;
            if !verified {
                return Err(Error::InternalInconsistency(
                    "witness failed re-verification".into(),
                ));
            }
            Ok(json!({
                "p": p,
                "generator": group.generator(),
                "epsilon": coeffs,
                "verified": true,
            }))
        }
        Cmd::KummerCheck {
            p,
            unit,
            gens,
            bound,
        } => {
            let ctx = ctx_for(*p)?;
            let unit = parse_unit(&ctx, unit)?;
            // without --gen, fall back to the cyclotomic-unit stock
            let generators = if gens.is_empty() {
                default_kummer_generators(&ctx)
            } else {
                gens.iter()
                    .map(|g| parse_unit(&ctx, g))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let witness = kummer_search(&unit, &generators, *bound);
            Ok(json!({
                "p": p,
                "bound": bound,
                "generators": generators
                    .iter()
                    .map(|g| int_coeffs(g.value()))
                    .collect::<Vec<Value>>(),
                "found": witness.is_some(),
                "witness": witness
                    .map(|w| int_coeffs(w.value()))
                    .unwrap_or(Value::Null),
            }))
        }
        Cmd::UnitDecompose { p, unit } => {
            let ctx = ctx_for(*p)?;
            let unit = parse_unit(&ctx, unit)?;
            let (n, x) = decompose_real(&unit)?;
            Ok(json!({ "p": p, "n": n, "x": int_coeffs(&x) }))
        }
        Cmd::Norm { p, element } => {
            let ctx = ctx_for(*p)?;
            let e = parse_rat_element(&ctx, element)?;
            Ok(json!({ "value": e.norm().to_string() }))
        }
        Cmd::Trace { p, element } => {
            let ctx = ctx_for(*p)?;
            let e = parse_rat_element(&ctx, element)?;
            Ok(json!({ "value": e.trace().to_string() }))
        }
    }
}

fn uses_bernoulli(cmd: &Cmd) -> bool {
    matches!(
        cmd,
        Cmd::Regular { .. } | Cmd::RegularRange { .. } | Cmd::Bernoulli { .. }
    )
}

fn load_cache(path: &Path) {
    let Ok(text) = std::fs::read_to_string(path) else {
        return;
    };
    let Ok(value) = serde_json::from_str::<Value>(&text) else {
        eprintln!("warning: ignoring unparseable cache {}", path.display());
        return;
    };
    let Some(rows) = value.as_array() else {
        eprintln!("warning: ignoring malformed cache {}", path.display());
        return;
    };
    let mut entries = Vec::with_capacity(rows.len());
    for row in rows {
        let parsed = row.as_array().and_then(|triple| {
            let n = triple.first()?.as_u64()?;
            let numer: BigInt = triple.get(1)?.as_str()?.parse().ok()?;
            let denom: BigInt = triple.get(2)?.as_str()?.parse().ok()?;
            Some((n, numer, denom))
        });
        match parsed {
            Some(entry) => entries.push(entry),
            None => {
                eprintln!("warning: ignoring malformed cache {}", path.display());
                return;
            }
        }
    }
    // the cache is advisory: rows are recomputed and compared, never trusted
    let verified = with_table(|t| t.verify_entries(&entries));
    if !verified {
        eprintln!(
            "warning: cache {} disagreed with recomputation",
            path.display()
        );
    }
}

fn save_cache(path: &Path) {
    let rows: Vec<Value> = with_table(|t| t.snapshot())
        .iter()
        .map(|(n, numer, denom)| json!([n, numer.to_string(), denom.to_string()]))
        .collect();
    if let Err(err) = std::fs::write(path, Value::Array(rows).to_string()) {
        eprintln!("warning: could not write cache {}: {err}", path.display());
    }
}

/// Parses argv (including the program name) and runs one command.
///
/// Returns the result, whether pretty rendering was requested, and the exit
/// code: 0 success, 1 domain error or flagged irregular, 2 usage.
pub fn run(argv: &[OsString]) -> (CommandResult, bool, i32) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let result = CommandResult {
                command: "usage".into(),
                ok: false,
                data: None,
                error: Some(json!({
                    "code": "Usage",
                    "message": err.to_string(),
                })),
            };
            return (result, false, 2);
        }
    };
    let name = command_name(&cli.command);
    if let Some(path) = &cli.cache {
        if uses_bernoulli(&cli.command) {
            load_cache(path);
        }
    }
    let outcome = dispatch(&cli);
    if let Some(path) = &cli.cache {
        if uses_bernoulli(&cli.command) && outcome.is_ok() {
            save_cache(path);
        }
    }
    let (result, code) = match outcome {
        Ok(data) => {
            // a flagged irregular prime is a finding reported as a failure
            if let Cmd::Regular {
                fail_on_irregular: true,
                ..
            } = &cli.command
            {
                if data["regular"] == Value::Bool(false) {
                    let result = CommandResult {
                        command: name.into(),
                        ok: false,
                        data: None,
                        error: Some(json!({
                            "code": "FoundIrregular",
                            "message": format!(
                                "p = {} is irregular: pairs {}",
                                data["p"], data["irregular_pairs"]
                            ),
                        })),
                    };
                    return (result, cli.pretty, 1);
                }
            }
            let result = CommandResult {
                command: name.into(),
                ok: true,
                data: Some(data),
                error: None,
            };
            (result, 0)
        }
        Err(err) => {
            let code = match err {
                Error::InvalidElement(_) => 2,
                _ => 1,
            };
            let result = CommandResult {
                command: name.into(),
                ok: false,
                data: None,
                error: Some(json!({
                    "code": err.code(),
                    "message": err.to_string(),
                })),
            };
            (result, code)
        }
    };
    (result, cli.pretty, code)
}

/// Runs one command and renders its output; help and version requests render
/// as plain text with exit code 0.
pub fn execute(argv: &[OsString]) -> (String, i32) {
    if let Err(err) = Cli::try_parse_from(argv) {
        if matches!(
            err.kind(),
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
        ) {
            return (err.to_string(), 0);
        }
    }
    let (result, pretty, code) = run(argv);
    let value = result.to_value();
    let rendered = if pretty {
        serde_json::to_string_pretty(&value).expect("JSON rendering")
    } else {
        value.to_string()
    };
    (rendered, code)
}

/// Convenience for tests: string arguments instead of OsStrings.
pub fn execute_str(argv: &[&str]) -> (String, i32) {
    let owned: Vec<OsString> = argv.iter().map(OsString::from).collect();
    execute(&owned)
}
