//! Command-line front end: ideal input, subcommand dispatch and reports.
//!
//! Exit codes: `0` success, `1` a verification check failed, `2` parse or
//! usage error, `3` resource cap exceeded.

pub mod parse;
pub mod report;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use monomial_lab::{
    ass_profile, associated_primes, freiman_test, h_numerator, has_embedded_primes,
    integral_closure_with, irreducible_decomposition, is_unmixed, multiplicity_formula,
    multiplicity_oracle, toric_hilbert_formula, toric_hilbert_oracle, ClosureOptions, Error,
    ExpVec, FamilyParams, MonomialIdeal, DEFAULT_BOX_CAP,
};
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::parse::{format_ideal, parse_ideal};
use crate::report::{big, bigs, Check, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "monomial-lab",
    version,
    about = "Exact computations on monomial ideals"
)]
pub struct Cli {
    /// Ideal in the text grammar, e.g. "x1^2*x3, x2"
    #[arg(long, global = true)]
    ideal: Option<String>,

    /// JSON file holding {"n": int, "gens": [[int, ...], ...]}
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,

    /// Ambient variable count (may only enlarge the largest index used)
    #[arg(long, global = true)]
    nvars: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest candidate box scanned when computing integral closures
    #[arg(long, global = true, default_value_t = DEFAULT_BOX_CAP)]
    box_cap: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Integral closure of the ideal
    Closure,
    /// K-th power of the ideal
    Power {
        #[arg(short = 'k')]
        k: u32,
    },
    /// Associated primes, or their profile over powers 1..=KMAX
    Ass {
        #[arg(long, value_name = "KMAX")]
        powers: Option<u32>,
    },
    /// Hilbert function, series numerator and multiplicity of M_{n,t}
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        upto: usize,
    },
    /// Analytic spread and Freiman test of an equigenerated ideal
    Freiman,
    /// Check every family claim for M_{n,t}
    VerifyFamily {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: u32,
        /// Last power inspected for Ass-stability (default n)
        #[arg(long)]
        kmax: Option<u32>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonIdeal {
    n: usize,
    gens: Vec<Vec<u32>>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCap { .. } => Failure::Resource(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Ctx {
    opts: ClosureOptions,
}

/// Parses `argv` (including the program name), runs the command and writes
/// the report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((report, text)) => {
            let body = match cli.format {
                Format::Json => report.to_json() + "\n",
                Format::Text => text.unwrap_or_else(|| report.to_text()),
            };
            let _ = out.write_all(body.as_bytes());
            exit_code(&report)
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Resource(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_RESOURCE
        }
    }
}

/// Exit code for a report that was produced without error.
pub fn exit_code(report: &Report) -> i32 {
    if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn load_ideal(cli: &Cli) -> Result<(MonomialIdeal, Value), Failure> {
    match (&cli.ideal, &cli.json) {
        (Some(_), Some(_)) => Err(Failure::Usage(
            "give either --ideal or --json, not both".into(),
        )),
        (None, None) => Err(Failure::Usage(
            "this command needs --ideal or --json".into(),
        )),
        (Some(text), None) => {
            let ideal = parse_ideal(text, cli.nvars).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok((ideal, json!({ "ideal": text, "n": cli.nvars })))
        }
        (None, Some(path)) => {
            let raw = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let parsed: JsonIdeal = serde_json::from_str(&raw)
                .map_err(|e| Failure::Usage(format!("invalid ideal JSON: {e}")))?;
            let n = match cli.nvars {
                Some(nv) if nv < parsed.n => {
                    return Err(Failure::Usage(format!(
                        "--nvars {nv} is below n = {}",
                        parsed.n
                    )))
                }
                Some(nv) => nv,
                None => parsed.n,
            };
            let declared = MonomialIdeal::new(parsed.n, parsed.gens.into_iter().map(ExpVec::new))?;
            let padded = declared.gens().iter().map(|g| {
                let mut v = g.entries().to_vec();
                v.resize(n, 0);
                ExpVec::new(v)
            });
            let ideal = MonomialIdeal::new(n, padded)?;
            Ok((ideal, json!({ "json": path.display().to_string(), "n": n })))
        }
    }
}

fn generators(ideal: &MonomialIdeal) -> Vec<Vec<u32>> {
    // same order as the printed form
    ideal
        .gens()
        .iter()
        .rev()
        .map(|g| g.entries().to_vec())
        .collect()
}

type Dispatched = (Report, Option<String>);

fn dispatch(cli: &Cli) -> Result<Dispatched, Failure> {
    let ctx = Ctx {
        opts: ClosureOptions {
            box_cap: cli.box_cap,
        },
    };
    match &cli.command {
        Command::Closure => closure_cmd(cli, &ctx),
        Command::Power { k } => power_cmd(cli, *k),
        Command::Ass { powers } => ass_cmd(cli, *powers),
        Command::Hilbert { n, upto } => hilbert_cmd(*n, *upto),
        Command::Freiman => freiman_cmd(cli),
        Command::VerifyFamily { n, t, kmax } => verify_cmd(&ctx, *n, *t, *kmax),
    }
}

fn closure_cmd(cli: &Cli, ctx: &Ctx) -> Result<Dispatched, Failure> {
    let (ideal, inputs) = load_ideal(cli)?;
    let closure = integral_closure_with(&ideal, &ctx.opts)?;
    let text = format_ideal(&closure);
    let results = json!({
        "ideal": text,
        "generators": generators(&closure),
        "mu": closure.mu(),
        "integrally_closed": closure == ideal,
    });
    Ok((
        Report::new("closure", inputs, results, vec![]),
        Some(text + "\n"),
    ))
}

fn power_cmd(cli: &Cli, k: u32) -> Result<Dispatched, Failure> {
    let (ideal, mut inputs) = load_ideal(cli)?;
    inputs["k"] = json!(k);
    let pow = ideal.power(k)?;
    let text = format_ideal(&pow);
    let results = json!({
        "ideal": text,
        "generators": generators(&pow),
        "mu": pow.mu(),
    });
    Ok((
        Report::new("power", inputs, results, vec![]),
        Some(text + "\n"),
    ))
}

fn ass_cmd(cli: &Cli, powers: Option<u32>) -> Result<Dispatched, Failure> {
    let (ideal, mut inputs) = load_ideal(cli)?;
    let results = match powers {
        None => {
            let comps = irreducible_decomposition(&ideal)?;
            let primes = associated_primes(&ideal)?;
            json!({
                "components": comps.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "primes": primes.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "unmixed": is_unmixed(&ideal)?,
                "embedded_primes": has_embedded_primes(&ideal)?,
            })
        }
        Some(kmax) => {
            inputs["powers"] = json!(kmax);
            let profile = ass_profile(&ideal, kmax)?;
            let per_power: Vec<Vec<String>> = profile
                .per_power
                .iter()
                .map(|s| s.iter().map(ToString::to_string).collect())
                .collect();
            json!({
                "per_power": per_power,
                "stabilization_index": profile.stabilization_index,
                "certified_beyond_window": false,
            })
        }
    };
    Ok((Report::new("ass", inputs, results, vec![]), None))
}

fn hilbert_cmd(n: usize, upto: usize) -> Result<Dispatched, Failure> {
    let params = FamilyParams::new(n, 1)?;
    let h: Vec<BigInt> = (0..=upto).map(|i| toric_hilbert_formula(n, i)).collect();
    let family = monomial_lab::family_mnt(params);
    let oracle = (0..=upto)
        .map(|i| toric_hilbert_oracle(&family, i))
        .collect::<monomial_lab::Result<Vec<_>>>()?;
    let q = h_numerator(n);
    let e = multiplicity_formula(n);
    let e_oracle = multiplicity_oracle(n)?;
    let window = 2 * n + 6;
    let num_check =
        monomial_lab::hilbert::numerator_check(n, window, monomial_lab::InnerBlockCount::NMinusR);
    let results = json!({
        "H": bigs(&h),
        "Q": bigs(q.coeffs()),
        "e": big(&e),
        "series": format!("({q}) / (1 - t)^{n}"),
        "notes": [verify::NOTES[1], verify::NOTES[2]],
    });
    let checks = vec![
        Check::new(
            "hilbert-function",
            "closed form equals the count of distinct i-fold sums of the M_{n,1} generators",
            h == oracle,
            json!({ "oracle": bigs(&oracle) }),
        ),
        Check::new(
            "series-numerator",
            "(1-t)^n * sum H(i) t^i matches Q(t) through degree 2n+5",
            num_check.holds(),
            json!({ "first_mismatch": num_check.first_mismatch }),
        ),
        Check::new(
            "multiplicity",
            "multiplicity formula equals the finite-difference value and Q(1)",
            e == e_oracle && e == q.eval(&BigInt::from(1)),
            json!({ "finite_difference": big(&e_oracle) }),
        ),
    ];
    Ok((
        Report::new("hilbert", json!({ "n": n, "upto": upto }), results, checks),
        None,
    ))
}

fn freiman_cmd(cli: &Cli) -> Result<Dispatched, Failure> {
    let (ideal, inputs) = load_ideal(cli)?;
    let r = freiman_test(&ideal)?;
    let results = json!({
        "mu_I": r.mu_i,
        "mu_I2": r.mu_i2,
        "spread": r.spread,
        "bound": r.bound,
        "is_freiman": r.is_freiman,
        "meets_lower_bound": r.meets_lower_bound(),
    });
    Ok((Report::new("freiman", inputs, results, vec![]), None))
}

fn verify_cmd(ctx: &Ctx, n: usize, t: u32, kmax: Option<u32>) -> Result<Dispatched, Failure> {
    let params = FamilyParams::new(n, t)?;
    let kmax = kmax.unwrap_or(n as u32);
    if (kmax as usize) < n {
        return Err(Failure::Usage(format!(
            "--kmax must be at least n = {n} to observe stabilisation at n-1"
        )));
    }
    let v = verify::verify_family(params, kmax, &ctx.opts)?;
    let results = json!({
        "overall": v.overall(),
        "family": format_ideal(&monomial_lab::family_mnt(params)),
        "observations": v.observations,
        "notes": verify::NOTES,
    });
    let inputs = json!({ "n": n, "t": t, "kmax": v.kmax });
    Ok((
        Report::new("verify-family", inputs, results, v.checks),
        None,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_check_maps_to_exit_one() {
        let ok = Check::new("a", "holds", true, json!({}));
        let bad = Check::new("b", "does not hold", false, json!({}));
        let pass = Report::new("freiman", json!({}), json!({}), vec![ok.clone()]);
        let fail = Report::new("freiman", json!({}), json!({}), vec![ok, bad]);
        assert_eq!(exit_code(&pass), EXIT_OK);
        assert_eq!(exit_code(&fail), EXIT_CHECK_FAILED);
        assert!(fail.to_text().contains("FAIL b: does not hold"));
    }

    #[test]
    fn help_goes_to_stdout_with_success() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(
            run_command(["monomial-lab", "--help"], &mut out, &mut err),
            EXIT_OK
        );
        assert!(String::from_utf8(out).unwrap().contains("verify-family"));
        assert!(err.is_empty());
    }
}
