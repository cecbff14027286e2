//! Command-line front end.

use std::f64::consts::PI;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::apoly::{
    apoly_closed_form, canonical_check, elimination_oracle_with, is_reciprocal, newton_polygon, numeric_witness,
    Component,
};
use crate::error::{Error, Result};
use crate::riley::{
    canonical_poly, equal_up_to_unit, riley_closed_form, riley_from_matrices, trace_bindings, LinkSpec,
};
use crate::volume::{cyclic_cover_volume_with_tol, estimate_alpha_bound, volume_with_tol, DEFAULT_TOL};

#[derive(Debug, Parser)]
#[command(name = "whitehead", version, about = "Invariants of the twisted Whitehead links W_k")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Format {
    /// Emit JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct KArg {
    /// Twist parameter of W_k.
    #[arg(long)]
    pub k: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Riley polynomial of W_k or of a two-bridge link b(2p,q).
    Riley {
        #[arg(long, required_unless_present = "two_bridge", conflicts_with = "two_bridge")]
        k: Option<u32>,
        /// Schubert parameters `2p,q`.
        #[arg(long, value_name = "2p,q")]
        two_bridge: Option<String>,
        #[command(flatten)]
        format: Format,
    },
    /// The A-polynomial 2-tuple of W_k.
    Apoly {
        #[command(flatten)]
        k: KArg,
        #[command(flatten)]
        format: Format,
    },
    /// Canonical-component polynomial of W_k and the boundary-slope check.
    Canonical {
        #[command(flatten)]
        k: KArg,
        #[command(flatten)]
        format: Format,
    },
    /// Newton polygon of the canonical factor of W_k.
    Newton {
        #[command(flatten)]
        k: KArg,
        #[command(flatten)]
        format: Format,
    },
    /// Cone-manifold volume of W_k at cone angle alpha.
    Volume {
        #[command(flatten)]
        k: KArg,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tolerance: f64,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Emit the sampled curve as CSV.
        #[arg(long)]
        csv: bool,
    },
    /// Volume of the r-fold cyclic branched cover.
    Cover {
        #[command(flatten)]
        k: KArg,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tolerance: f64,
        #[command(flatten)]
        format: Format,
    },
    /// Estimate the angle where W_k stops being hyperbolic.
    AlphaBound {
        #[command(flatten)]
        k: KArg,
        #[command(flatten)]
        format: Format,
    },
    /// Cross-check closed forms against matrices, elimination and numerics.
    Verify {
        #[command(flatten)]
        k: KArg,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
        #[command(flatten)]
        format: Format,
    },
}

/// Format with 12 significant digits.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&mag) {
        return format!("{x:.11e}");
    }
    let digits = (11 - mag).max(0) as usize;
    format!("{x:.digits$}")
}

fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Round every float in a JSON tree to 12 significant digits.
fn round_json(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => n
            .as_f64()
            .and_then(|x| serde_json::Number::from_f64(round_sig(x)))
            .map(Value::Number)
            .unwrap_or(Value::Null),
        Value::Array(a) => Value::Array(a.into_iter().map(round_json).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_json(v))).collect()),
        other => other,
    }
}

fn to_json<T: serde::Serialize>(t: &T) -> Result<Value> {
    serde_json::to_value(t).map_err(|e| Error::Json(e.to_string()))
}

fn emit_json(out: &mut dyn Write, v: Value) -> Result<()> {
    let s = serde_json::to_string_pretty(&round_json(v)).map_err(|e| Error::Json(e.to_string()))?;
    writeln!(out, "{s}").map_err(io_err)
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("output: {e}"))
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(io_err)?
    };
}

fn run_riley(k: Option<u32>, two_bridge: Option<String>, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    if let Some(tb) = two_bridge {
        let spec = LinkSpec::parse_two_bridge(&tb)?;
        let r = riley_from_matrices(&spec)?;
        if json {
            return emit_json(out, json!({ "link": spec.to_string(), "riley": to_json(&r)? }));
        }
        say!(out, "{spec}: {r}");
        return Ok(());
    }
    let k = k.expect("clap enforces --k or --two-bridge");
    if k == 0 {
        say!(err, "warning: W_0 is the torus link T(2,4), which is not hyperbolic");
    }
    let data = riley_closed_form(k)?;
    if json {
        let mut v = to_json(&data)?;
        v["riley_uform"] = to_json(&data.riley_uform)?;
        return emit_json(out, v);
    }
    say!(out, "W_{k} Riley polynomial (x, y, z): {}", data.riley_xyz);
    for f in &data.factors {
        say!(out, "  factor: {}", f.poly);
    }
    say!(out, "in (u, s1, s2): {}", data.riley_uform);
    Ok(())
}

fn run_apoly(k: u32, json: bool, out: &mut dyn Write) -> Result<()> {
    let t = apoly_closed_form(k)?;
    let np = newton_polygon(&t.canonical_factor)?;
    if json {
        let mut v = to_json(&t)?;
        v["newton_polygon"] = to_json(&np)?;
        return emit_json(out, v);
    }
    say!(out, "A1 = A2 = ({}) * ({})", t.nonhyp_factor, t.canonical_factor);
    say!(out, "canonical factor: {}", t.canonical_factor);
    say!(out, "boundary slopes: {}", join(&np.slopes));
    Ok(())
}

fn join<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn run_canonical(k: u32, json: bool, out: &mut dyn Write) -> Result<()> {
    let p = canonical_poly(k)?;
    let ok = canonical_check(k)?;
    if json {
        return emit_json(out, json!({ "k": k, "canonical_xyz": to_json(&p)?, "canonical_check": ok }));
    }
    say!(out, "W_{k} canonical component: {p}");
    say!(out, "canonical factor has two boundary slopes: {ok}");
    Ok(())
}

fn run_newton(k: u32, json: bool, out: &mut dyn Write) -> Result<()> {
    let np = newton_polygon(&apoly_closed_form(k)?.canonical_factor)?;
    if json {
        return emit_json(out, to_json(&np)?);
    }
    let verts: Vec<String> = np.vertices.iter().map(|(i, j)| format!("({i},{j})")).collect();
    say!(out, "vertices: {}", verts.join(" "));
    say!(out, "slopes: {}", join(&np.slopes));
    Ok(())
}

fn run_volume(k: u32, alpha: f64, tol: f64, json: bool, csv: bool, out: &mut dyn Write) -> Result<()> {
    let curve = volume_with_tol(k, alpha, tol)?;
    if json {
        return emit_json(out, to_json(&curve)?);
    }
    if csv {
        say!(out, "omega,re_z,im_z,integrand");
        for s in &curve.samples {
            say!(out, "{},{},{},{}", fmt_num(s.omega), fmt_num(s.z.0), fmt_num(s.z.1), fmt_num(s.integrand));
        }
        return Ok(());
    }
    say!(out, "Vol E_W{k}({}) = {}", fmt_num(alpha), fmt_num(curve.volume));
    say!(out, "quadrature error estimate: {}", fmt_num(curve.quadrature_error_estimate));
    if !curve.branch_jumps.is_empty() {
        say!(out, "branch jumps: {}", curve.branch_jumps.len());
    }
    Ok(())
}

fn run_cover(k: u32, r: u32, tol: f64, json: bool, out: &mut dyn Write) -> Result<()> {
    let v = cyclic_cover_volume_with_tol(k, r, tol)?;
    if json {
        return emit_json(out, json!({ "k": k, "r": r, "volume": v }));
    }
    say!(out, "{}", fmt_num(v));
    Ok(())
}

fn run_alpha_bound(k: u32, json: bool, out: &mut dyn Write) -> Result<()> {
    let b = estimate_alpha_bound(k)?;
    if json {
        return emit_json(out, json!({ "k": k, "alpha_bound": b, "in_range": b >= 2.0 * PI / 3.0 && b < PI }));
    }
    say!(out, "{}", fmt_num(b));
    Ok(())
}

struct Check {
    name: String,
    passed: bool,
    detail: String,
}

fn verify_checks(k: u32, trials: usize, seed: u64, tol: f64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut add = |name: &str, passed: bool, detail: String| {
        checks.push(Check { name: name.to_string(), passed, detail })
    };

    let closed = riley_closed_form(k)?;
    let matrices = riley_from_matrices(&LinkSpec::TwistedWhitehead { k })?;
    add(
        "riley: matrices vs closed form",
        equal_up_to_unit(&matrices, &closed.riley_uform),
        format!("{} terms", matrices.num_terms()),
    );
    let product = closed.factors.iter().map(|f| f.poly.clone()).product::<crate::polyring::LaurentPoly>();
    add(
        "riley: factorization",
        product.substitute_poly(&trace_bindings())? == closed.riley_uform,
        String::new(),
    );
    if k == 0 {
        return Ok(checks);
    }

    let t = apoly_closed_form(k)?;
    for c in [Component::A, Component::B] {
        for eps in [1i8, -1] {
            let o = elimination_oracle_with(k, c, eps)?;
            add(
                &format!("apoly: elimination oracle ({c}, s = {eps})"),
                equal_up_to_unit(&o.reduced, &t.canonical_factor),
                format!("{} terms", o.reduced.num_terms()),
            );
        }
    }
    add("apoly: reciprocity", is_reciprocal(&t.canonical_factor), String::new());
    add("apoly: two boundary slopes", canonical_check(k)?, String::new());

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = numeric_witness(k, trials, &mut rng)?;
    add(
        "apoly: numeric witnesses",
        w.passed(tol) && w.skipped == 0,
        format!(
            "{} trials, max residual {}, max non-canonical defect {}",
            w.trials.len(),
            fmt_num(w.max_residual),
            fmt_num(w.max_noncanonical_defect)
        ),
    );

    let b = estimate_alpha_bound(k)?;
    add(
        "volume: hyperbolicity bound in [2π/3, π)",
        b >= 2.0 * PI / 3.0 - 1e-6 && b < PI,
        fmt_num(b),
    );
    Ok(checks)
}

fn run_verify(k: u32, trials: usize, seed: u64, tol: f64, json: bool, out: &mut dyn Write) -> Result<bool> {
    let checks = verify_checks(k, trials, seed, tol)?;
    let all = checks.iter().all(|c| c.passed);
    if json {
        let v: Vec<Value> = checks
            .iter()
            .map(|c| json!({ "check": c.name, "passed": c.passed, "detail": c.detail }))
            .collect();
        emit_json(out, json!({ "k": k, "passed": all, "checks": v }))?;
    } else {
        for c in &checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                say!(out, "{tag} {}", c.name);
            } else {
                say!(out, "{tag} {} ({})", c.name, c.detail);
            }
        }
    }
    Ok(all)
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool> {
    match cmd {
        Command::Riley { k, two_bridge, format } => run_riley(k, two_bridge, format.json, out, err)?,
        Command::Apoly { k, format } => run_apoly(k.k, format.json, out)?,
        Command::Canonical { k, format } => run_canonical(k.k, format.json, out)?,
        Command::Newton { k, format } => run_newton(k.k, format.json, out)?,
        Command::Volume { k, alpha, tolerance, json, csv } => run_volume(k.k, alpha, tolerance, json, csv, out)?,
        Command::Cover { k, r, tolerance, format } => run_cover(k.k, r, tolerance, format.json, out)?,
        Command::AlphaBound { k, format } => run_alpha_bound(k.k, format.json, out)?,
        Command::Verify { k, trials, seed, tolerance, format } => {
            return run_verify(k.k, trials, seed, tolerance, format.json, out)
        }
    }
    Ok(true)
}

/// Parse `argv` (including the program name) and run. Returns the exit
/// code: 0 on success, 2 on usage errors, 1 on computation errors or
/// failed verification.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("whitehead").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn number_formatting() {
        assert_eq!(fmt_num(3.663862376708876), "3.66386237671");
        assert_eq!(fmt_num(0.5), "0.500000000000");
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(round_sig(1.23456789012345), 1.23456789012);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["apoly"]).0, 2);
        assert_eq!(run_str(&["apoly", "--k", "1", "--bogus"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn computation_errors_exit_1() {
        let (code, _, err) = run_str(&["apoly", "--k", "0"]);
        assert_eq!(code, 1);
        assert!(err.contains("not hyperbolic"));
        assert_eq!(run_str(&["cover", "--k", "1", "--r", "2"]).0, 1);
        assert_eq!(run_str(&["riley", "--two-bridge", "8,2"]).0, 1);
    }

    #[test]
    fn riley_k0_warns() {
        let (code, out, err) = run_str(&["riley", "--k", "0"]);
        assert_eq!(code, 0);
        assert!(err.contains("not hyperbolic"));
        assert!(out.contains("Riley polynomial"));
    }
}
