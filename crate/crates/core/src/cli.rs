//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith::{parse_rational, rat_normalize, render, Rational};
use crate::closed_forms::{binet_term, decomposed_term};
use crate::error::{domain, Error, Result};
use crate::export::{render_table, Format};
use crate::identities::{verify_range, IdentityId, Report};
use crate::sequences::{range, SequenceParams};
use crate::series::gf_coefficients;
use crate::sums::{
    prefix_sum_closed, strided_sum_closed, strided_sum_oracle, sum_oracle, weighted_sum_closed,
    weighted_sum_oracle, StridedSumContext,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "jacobsthal3", version, about = "Generalized third-order Jacobsthal sequences in exact arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Seeds `(a, b, c)`; defaults give the ordinary Jacobsthal numbers.
#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long, default_value = "0", value_parser = rational_arg, allow_hyphen_values = true)]
    pub a: Rational,
    #[arg(long, default_value = "1", value_parser = rational_arg, allow_hyphen_values = true)]
    pub b: Rational,
    #[arg(long, default_value = "1", value_parser = rational_arg, allow_hyphen_values = true)]
    pub c: Rational,
}

impl ParamArgs {
    pub fn params(&self) -> SequenceParams {
        SequenceParams::new(self.a.clone(), self.b.clone(), self.c.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumMode {
    Prefix,
    Weighted,
    Strided,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print terms from..=to of the sequence.
    Gen {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 0)]
        from: u64,
        #[arg(long, default_value_t = 20)]
        to: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sweep an identity (or `all`) against the recurrence; one JSON report per line.
    Verify {
        #[arg(long)]
        identity: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 64)]
        n_max: i64,
        /// Cap on the Catalan shift r (defaults to n-max).
        #[arg(long)]
        r_max: Option<i64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Expand the generating function and compare with the recurrence.
    Gf {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 16)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate a prefix, weighted or strided sum in closed form and by the oracle.
    Sum {
        #[arg(long, value_enum)]
        mode: SumMode,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        x: Option<Rational>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the whole identity catalog and every closed form at default bounds.
    Selftest {
        #[arg(long, default_value_t = 64)]
        n_max: i64,
    },
}

/// Parameter sets exercised by `selftest`.
pub fn selftest_params() -> Vec<SequenceParams> {
    let q = |p, d| rat_normalize(p, d).expect("nonzero denominator");
    vec![
        SequenceParams::jacobsthal(),
        SequenceParams::jacobsthal_lucas(),
        SequenceParams::from_ints(1, 2, 3),
        SequenceParams::from_ints(5, -1, 2),
        SequenceParams::new(q(1, 2), q(-3, 4), q(7, 1)),
        SequenceParams::new(q(-3, 1), q(4, 5), q(-2, 7)),
    ]
}

struct Outcome {
    text: String,
    code: i32,
    output: Option<PathBuf>,
}

impl Outcome {
    fn new(text: String, code: i32, output: Option<PathBuf>) -> Self {
        Self { text, code, output }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let is_info = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let sink: &mut dyn Write = if is_info { stdout } else { stderr };
            let _ = write!(sink, "{}", e.render());
            return if is_info { EXIT_OK } else { EXIT_USAGE };
        }
    };

    let outcome = match execute(cli.command) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &outcome.output {
        Some(path) => std::fs::write(path, &outcome.text).map_err(Error::from),
        None => stdout.write_all(outcome.text.as_bytes()).map_err(Error::from),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_USAGE;
    }
    outcome.code
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Gen { params, from, to, format, output } => {
            cmd_gen(&params.params(), from, to, format).map(|t| Outcome::new(t, EXIT_OK, output))
        }
        Command::Verify { identity, params, n_max, r_max, output } => {
            let (text, ok) = cmd_verify(&identity, &params.params(), n_max, r_max)?;
            Ok(Outcome::new(text, if ok { EXIT_OK } else { EXIT_FAILURE }, output))
        }
        Command::Gf { params, terms, format, output } => {
            let (text, ok) = cmd_gf(&params.params(), terms, format)?;
            Ok(Outcome::new(text, if ok { EXIT_OK } else { EXIT_FAILURE }, output))
        }
        Command::Sum { mode, params, x, n, m, r, output } => {
            let value = cmd_sum(mode, &params.params(), x, n, m, r)?;
            let ok = value["agree"] != Value::Bool(false);
            let text = format!("{value}\n");
            Ok(Outcome::new(text, if ok { EXIT_OK } else { EXIT_FAILURE }, output))
        }
        Command::Selftest { n_max } => {
            let (text, ok) = cmd_selftest(n_max)?;
            Ok(Outcome::new(text, if ok { EXIT_OK } else { EXIT_FAILURE }, None))
        }
    }
}

/// Table of `n, J(n)` for `from..=to`.
pub fn cmd_gen(params: &SequenceParams, from: u64, to: u64, format: Format) -> Result<String> {
    let values = range(params, from, to)?;
    let rows: Vec<(u64, Rational)> = (from..=to).zip(values).collect();
    render_table(&rows, format)
}

/// Runs the sweep(s); returns the JSON lines and whether everything passed.
pub fn cmd_verify(
    identity: &str,
    params: &SequenceParams,
    n_max: i64,
    r_max: Option<i64>,
) -> Result<(String, bool)> {
    let ids: Vec<IdentityId> = if identity.eq_ignore_ascii_case("all") {
        IdentityId::ALL.to_vec()
    } else {
        vec![identity.parse()?]
    };
    let mut text = String::new();
    let mut ok = true;
    for id in ids {
        let report = verify_range(id, params, n_max, r_max.filter(|_| id.uses_r()))?;
        ok &= report.all_passed();
        text.push_str(&report.to_json().to_string());
        text.push('\n');
    }
    Ok((text, ok))
}

/// Generating-function coefficients plus a `matches recurrence` footer.
pub fn cmd_gf(params: &SequenceParams, terms: usize, format: Format) -> Result<(String, bool)> {
    if terms < 1 {
        return Err(domain("--terms must be at least 1"));
    }
    let coeffs = gf_coefficients(params, terms)?;
    let matches = coeffs == range(params, 0, terms as u64 - 1)?;
    let text = match format {
        Format::Json => {
            let values: Vec<String> = coeffs.iter().map(render).collect();
            format!("{}\n", json!({ "coefficients": values, "matches_recurrence": matches }))
        }
        Format::Csv | Format::Bfile => {
            let rows: Vec<(u64, Rational)> = (0..).zip(coeffs).collect();
            let mut t = render_table(&rows, format)?;
            t.push_str(&format!("# matches recurrence: {matches}\n"));
            t
        }
    };
    Ok((text, matches))
}

fn required<T>(value: Option<T>, flag: &str, mode: &str) -> Result<T> {
    value.ok_or_else(|| domain(format!("--{flag} is required for --mode {mode}")))
}

fn seeds_json(params: &SequenceParams) -> Value {
    let [a, b, c] = params.seeds();
    json!([render(a), render(b), render(c)])
}

/// Closed form next to oracle value. A closed form that does not exist for
/// the input (pole, degenerate stride) is reported as `null` with a warning.
pub fn cmd_sum(
    mode: SumMode,
    params: &SequenceParams,
    x: Option<Rational>,
    n: Option<u64>,
    m: Option<u64>,
    r: Option<u64>,
) -> Result<Value> {
    let agree = |closed: &Rational, oracle: &Rational| closed == oracle;
    match mode {
        SumMode::Prefix => {
            let n = required(n, "n", "prefix")?;
            let indices: Vec<i64> = (0..=n as i64).collect();
            let oracle = sum_oracle(&SequenceParams::jacobsthal(), &indices, None)?;
            let closed = prefix_sum_closed(n);
            Ok(json!({
                "mode": "prefix",
                "params": seeds_json(&SequenceParams::jacobsthal()),
                "n": n,
                "closed_form": render(&closed),
                "oracle": render(&oracle),
                "agree": agree(&closed, &oracle),
            }))
        }
        SumMode::Weighted => {
            let x = required(x, "x", "weighted")?;
            let n = required(n, "n", "weighted")?;
            let oracle = weighted_sum_oracle(params, &x, n)?;
            let mut out = json!({
                "mode": "weighted",
                "params": seeds_json(params),
                "x": render(&x),
                "n": n,
                "oracle": render(&oracle),
            });
            match weighted_sum_closed(params, &x, n) {
                Ok(closed) => {
                    out["closed_form"] = json!(render(&closed));
                    out["agree"] = json!(agree(&closed, &oracle));
                }
                Err(e @ Error::Pole(_)) => {
                    out["closed_form"] = Value::Null;
                    out["agree"] = Value::Null;
                    out["warning"] = json!(e.to_string());
                }
                Err(e) => return Err(e),
            }
            Ok(out)
        }
        SumMode::Strided => {
            let m = required(m, "m", "strided")?;
            let r = required(r, "r", "strided")?;
            let n = required(n, "n", "strided")?;
            let ctx = StridedSumContext::new(m, r)?;
            let oracle = strided_sum_oracle(params, m, r, n)?;
            let mut out = json!({
                "mode": "strided",
                "params": seeds_json(params),
                "m": m,
                "r": r,
                "n": n,
                "sigma": render(&ctx.sigma),
                "mu": render(&ctx.mu),
                "oracle": render(&oracle),
            });
            match strided_sum_closed(params, m, r, n) {
                Ok(closed) => {
                    out["closed_form"] = json!(render(&closed));
                    out["agree"] = json!(agree(&closed, &oracle));
                }
                Err(Error::DegenerateStride(_)) => {
                    out["closed_form"] = Value::Null;
                    out["agree"] = Value::Null;
                    out["warning"] = json!("sigma=0 for m divisible by 3; closed form undefined, oracle value only");
                }
                Err(e) => return Err(e),
            }
            Ok(out)
        }
    }
}

/// One line per check group; returns the text and whether everything passed.
pub fn cmd_selftest(n_max: i64) -> Result<(String, bool)> {
    if n_max < 3 {
        return Err(domain("selftest needs --n-max >= 3"));
    }
    let params = selftest_params();
    let mut lines = Vec::new();
    let mut ok = true;
    let mut record = |label: String, passed: usize, total: usize| {
        let good = passed == total;
        ok &= good;
        lines.push(format!("{} {label}: {passed}/{total}", if good { "ok  " } else { "FAIL" }));
    };

    for id in IdentityId::ALL {
        let sets: &[SequenceParams] = if id.fixed_params() { &params[..1] } else { &params };
        for p in sets {
            let report: Report = verify_range(id, p, n_max, None)?;
            record(format!("{id} {p}"), report.passed, report.total);
        }
    }

    let n_terms = (2 * n_max).max(1) as u64;
    for p in &params {
        let oracle = range(p, 0, n_terms)?;
        let mut passed = 0;
        for (n, value) in (0..=n_terms).zip(&oracle) {
            if binet_term(p, n)? == *value && decomposed_term(p, n) == *value {
                passed += 1;
            }
        }
        record(format!("closed forms {p}"), passed, oracle.len());

        let gf = gf_coefficients(p, oracle.len())?;
        let passed = gf.iter().zip(&oracle).filter(|(g, o)| g == o).count();
        record(format!("generating function {p}"), passed, oracle.len());

        let xs = ["1", "-1", "3", "1/2", "-2/3", "5"].map(|s| parse_rational(s).expect("literal"));
        let (mut passed, mut total) = (0, 0);
        for x in &xs {
            for n in 0..=32u64 {
                total += 1;
                if weighted_sum_closed(p, x, n)? == weighted_sum_oracle(p, x, n)? {
                    passed += 1;
                }
            }
        }
        record(format!("weighted sums {p}"), passed, total);

        let (mut passed, mut total) = (0, 0);
        for m in [1u64, 2, 4, 5] {
            for r in m..=m + 6 {
                for n in 0..=24u64 {
                    total += 1;
                    if strided_sum_closed(p, m, r, n)? == strided_sum_oracle(p, m, r, n)? {
                        passed += 1;
                    }
                }
            }
        }
        record(format!("strided sums {p}"), passed, total);
    }

    let mut text = lines.join("\n");
    text.push('\n');
    text.push_str(if ok { "selftest passed\n" } else { "selftest FAILED\n" });
    Ok((text, ok))
}
