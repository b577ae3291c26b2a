//! Command-line front end: `count`, `scan`, `regions`, `roots`, `verify`.
//!
//! Exit codes: 0 ok, 1 input error, 2 query radius sits on a jump circle,
//! 3 oracle failure or failed verification.
//!
//! The config file is `key=value` lines mirroring [`CliConfig`], with nested
//! records written as `tol.int_hit=1e-10` or `oracle.density=2`. Lines
//! starting with `#` are ignored.

use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::counter::{circle_roots, CountConfig, CountFlag, CountResult, JumpSet};
use crate::error::Error;
use crate::oracle::{find_all_roots, verify, OracleParams, VerificationReport};
use crate::region::RegionProfile;
use crate::tolerances::Tolerances;
use crate::trinomial::{gcd, HarmonicTrinomial};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_BOUNDARY: i32 = 2;
pub const EXIT_ORACLE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CliConfig {
    pub format: Format,
    pub closed_disk: bool,
    pub tol: Tolerances,
    pub oracle: OracleParams,
}

impl CliConfig {
    /// Renders the config as `key=value` lines, one per leaf field.
    pub fn to_config_string(&self) -> String {
        let mut out = String::new();
        let value = serde_json::to_value(self).expect("config serializes");
        flatten("", &value, &mut out);
        out
    }

    pub fn from_config_str(text: &str) -> std::result::Result<Self, String> {
        let mut root = Map::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, val) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value", lineno + 1))?;
            let val = val.trim();
            let parsed = serde_json::from_str::<Value>(val).unwrap_or_else(|_| Value::String(val.to_string()));
            let mut slot = &mut root;
            let parts: Vec<&str> = key.trim().split('.').collect();
            for part in &parts[..parts.len() - 1] {
                let entry = slot.entry(part.to_string()).or_insert_with(|| Value::Object(Map::new()));
                slot = entry
                    .as_object_mut()
                    .ok_or_else(|| format!("line {}: `{part}` is not a section", lineno + 1))?;
            }
            slot.insert(parts[parts.len() - 1].to_string(), parsed);
        }
        serde_json::from_value(Value::Object(root)).map_err(|e| format!("config: {e}"))
    }

    pub fn count_config(&self) -> CountConfig {
        CountConfig { tol: self.tol, closed_disk: self.closed_disk, oracle: Some(self.oracle) }
    }
}

fn flatten(prefix: &str, value: &Value, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, out);
            }
        }
        Value::String(s) => {
            let _ = writeln!(out, "{prefix}={s}");
        }
        other => {
            let _ = writeln!(out, "{prefix}={other}");
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "trinomial", version, about = "Zero counting for a z^n + b conj(z)^m + c")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// key=value config file; flags override it
    #[arg(long, global = true)]
    config: Option<String>,
    /// Count zeros with |z| <= r instead of |z| < r
    #[arg(long, global = true)]
    closed_disk: bool,
    /// Integer-hit tolerance in pivot units
    #[arg(long, global = true)]
    tol_int: Option<f64>,
    /// Oracle grid density multiplier
    #[arg(long, global = true)]
    grid_density: Option<usize>,
    /// Draw a random test instance from this seed when no coefficients are given
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Args, Debug, Clone)]
struct InstanceArgs {
    /// Coefficient of z^n, as `re,im` or `mod@argdeg`
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Coefficient of conj(z)^m
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Constant term
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// Instance as JSON (inline or a file path): {"a":[re,im],...,"n":..,"m":..}
    #[arg(long, conflicts_with_all = ["a", "b", "c", "n", "m"])]
    instance: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of zeros in the disk of radius r
    Count {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, allow_hyphen_values = true)]
        r: f64,
    },
    /// Counts over a radius grid, or the exact step function with --jumps
    Scan {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(required_unless_present = "jumps")]
        r_min: Option<f64>,
        #[arg(required_unless_present = "jumps")]
        r_max: Option<f64>,
        #[arg(required_unless_present = "jumps")]
        steps: Option<usize>,
        #[arg(long)]
        jumps: bool,
    },
    /// Breakpoints, case, pivot and angles
    Regions {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Reconstructed circle roots next to the oracle roots
    Roots {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Cross-check the crossing count against the oracle
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,
    },
}

/// What a CLI invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Self { code, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self { code, stdout: String::new(), stderr }
    }
}

fn lib_failure(e: &Error) -> Outcome {
    let code = if e.is_input_error() { EXIT_INPUT } else { EXIT_ORACLE };
    Outcome::fail(code, format!("error[{}]: {e}\n", e.kind()))
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    return Outcome::ok(EXIT_OK, e.to_string());
                }
                _ => EXIT_INPUT,
            };
            return Outcome::fail(code, e.render().to_string());
        }
    };
    let config = match resolve_config(&cli.global) {
        Ok(c) => c,
        Err(msg) => return Outcome::fail(EXIT_INPUT, format!("error: {msg}\n")),
    };
    let seed = cli.global.seed;
    let (instance_args, cmd) = match &cli.command {
        Command::Count { instance, .. }
        | Command::Scan { instance, .. }
        | Command::Regions { instance }
        | Command::Roots { instance }
        | Command::Verify { instance } => (instance, &cli.command),
    };
    let t = match build_instance(instance_args, seed) {
        Ok(t) => t,
        Err(InstanceError::Parse(msg)) => return Outcome::fail(EXIT_INPUT, format!("error: {msg}\n")),
        Err(InstanceError::Lib(e)) => return lib_failure(&e),
    };
    match cmd {
        Command::Count { r, .. } => cmd_count(&t, *r, &config),
        Command::Scan { r_min, r_max, steps, jumps, .. } => {
            let grid = if *jumps { None } else { Some((r_min.unwrap_or(0.0), r_max.unwrap_or(0.0), steps.unwrap_or(0))) };
            cmd_scan(&t, grid, &config)
        }
        Command::Regions { .. } => cmd_regions(&t, &config),
        Command::Roots { .. } => cmd_roots(&t, &config),
        Command::Verify { .. } => cmd_verify(&t, &config),
    }
}

fn resolve_config(g: &GlobalArgs) -> std::result::Result<CliConfig, String> {
    let mut cfg = match &g.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
            CliConfig::from_config_str(&text)?
        }
        None => CliConfig::default(),
    };
    if let Some(f) = g.format {
        cfg.format = f;
    }
    if g.closed_disk {
        cfg.closed_disk = true;
    }
    if let Some(tol) = g.tol_int {
        if !(tol > 0.0 && tol < 0.5) {
            return Err(format!("--tol-int must lie in (0, 0.5), got {tol}"));
        }
        cfg.tol.int_hit = tol;
    }
    if let Some(d) = g.grid_density {
        if d == 0 {
            return Err("--grid-density must be at least 1".into());
        }
        cfg.oracle.density = d;
    }
    Ok(cfg)
}

enum InstanceError {
    Parse(String),
    Lib(Error),
}

/// Parses `re,im`, `mod@argdeg` or a bare real number.
pub fn parse_coefficient(s: &str) -> std::result::Result<Complex64, String> {
    let s = s.trim();
    let num = |x: &str| x.trim().parse::<f64>().map_err(|_| format!("invalid number `{}` in coefficient `{s}`", x.trim()));
    if let Some((modulus, arg)) = s.split_once('@') {
        let arg = num(arg)?.to_radians();
        return Ok(Complex64::from_polar(num(modulus)?, arg));
    }
    if let Some((re, im)) = s.split_once(',') {
        return Ok(Complex64::new(num(re)?, num(im)?));
    }
    Ok(Complex64::new(num(s)?, 0.0))
}

fn build_instance(args: &InstanceArgs, seed: Option<u64>) -> std::result::Result<HarmonicTrinomial, InstanceError> {
    if let Some(src) = &args.instance {
        let text = if src.trim_start().starts_with('{') {
            src.clone()
        } else {
            std::fs::read_to_string(src).map_err(|e| InstanceError::Parse(format!("cannot read {src}: {e}")))?
        };
        let raw: Value = serde_json::from_str(&text).map_err(|e| InstanceError::Parse(format!("instance JSON: {e}")))?;
        return instance_from_json(raw);
    }
    let given = [&args.a, &args.b, &args.c];
    if given.iter().all(|x| x.is_none()) {
        if let Some(seed) = seed {
            return random_instance(seed, args.n, args.m).map_err(InstanceError::Lib);
        }
    }
    let mut coef = [Complex64::new(0.0, 0.0); 3];
    for (slot, (name, val)) in coef.iter_mut().zip(["a", "b", "c"].into_iter().zip(given)) {
        let val = val.as_ref().ok_or_else(|| InstanceError::Parse(format!("missing --{name}")))?;
        *slot = parse_coefficient(val).map_err(InstanceError::Parse)?;
    }
    let n = args.n.ok_or_else(|| InstanceError::Parse("missing --n".into()))?;
    let m = args.m.ok_or_else(|| InstanceError::Parse("missing --m".into()))?;
    HarmonicTrinomial::new(coef[0], coef[1], coef[2], n, m).map_err(InstanceError::Lib)
}

fn instance_from_json(raw: Value) -> std::result::Result<HarmonicTrinomial, InstanceError> {
    let obj = raw.as_object().ok_or_else(|| InstanceError::Parse("instance JSON must be an object".into()))?;
    let coef = |name: &str| -> std::result::Result<Complex64, InstanceError> {
        let pair = obj
            .get(name)
            .and_then(Value::as_array)
            .filter(|p| p.len() == 2)
            .ok_or_else(|| InstanceError::Parse(format!("instance JSON: `{name}` must be [re, im]")))?;
        let part = |v: &Value| v.as_f64().ok_or_else(|| InstanceError::Parse(format!("instance JSON: `{name}` must be numeric")));
        Ok(Complex64::new(part(&pair[0])?, part(&pair[1])?))
    };
    let exp = |name: &str| -> std::result::Result<u32, InstanceError> {
        obj.get(name)
            .and_then(Value::as_u64)
            .and_then(|v| u32::try_from(v).ok())
            .ok_or_else(|| InstanceError::Parse(format!("instance JSON: `{name}` must be a non-negative integer")))
    };
    HarmonicTrinomial::new(coef("a")?, coef("b")?, coef("c")?, exp("n")?, exp("m")?).map_err(InstanceError::Lib)
}

/// Test-corpus instance: moduli log-uniform in `[0.1, 10]`, uniform phases,
/// and (unless given) `2 <= n <= 6` with a coprime `m < n`.
pub fn random_instance(seed: u64, n: Option<u32>, m: Option<u32>) -> crate::Result<HarmonicTrinomial> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let n = n.unwrap_or_else(|| rng.gen_range(2..=6));
    let m = match m {
        Some(m) => m,
        None if n >= 2 => loop {
            let m = rng.gen_range(1..n);
            if gcd(n, m) == 1 {
                break m;
            }
        },
        None => 1,
    };
    let mut coef = || Complex64::from_polar(10f64.powf(rng.gen_range(-1.0..=1.0)), rng.gen_range(0.0..TAU));
    let (a, b, c) = (coef(), coef(), coef());
    HarmonicTrinomial::new(a, b, c, n, m)
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn cmd_count(t: &HarmonicTrinomial, r: f64, cfg: &CliConfig) -> Outcome {
    let cc = cfg.count_config();
    let result = match JumpSet::compute(t, &cc).and_then(|s| s.count_result(r, &cc)) {
        Ok(res) => res,
        Err(e) => return lib_failure(&e),
    };
    let code = if result.flags.contains(&CountFlag::AmbiguousBoundary) { EXIT_BOUNDARY } else { EXIT_OK };
    let body = match cfg.format {
        Format::Json => json(&result),
        Format::Csv => format!("r,count\n{},{}\n", result.radius, result.count),
        Format::Text => count_text(&result),
    };
    Outcome::ok(code, body)
}

fn count_text(res: &CountResult) -> String {
    let mut s = String::new();
    let disk = if res.closed_disk { "|z| <= r" } else { "|z| < r" };
    let _ = writeln!(s, "count: {} zeros with {disk}, r = {}", res.count, res.radius);
    let _ = writeln!(s, "regime: {:?}", res.regime);
    let _ = writeln!(s, "generic: {}", res.generic);
    for e in &res.jumps_used {
        let _ = writeln!(s, "  jump r = {} path {} k = {}", e.radius, e.path.symbol(), e.k);
    }
    for w in &res.boundary_warnings {
        let _ = writeln!(s, "warning: jump circle at r = {} is {:e} away", w.radius, w.distance);
    }
    if let Some(o) = res.outer_regime.filter(|o| o.mismatch) {
        let _ = writeln!(
            s,
            "note: closed-form outer value n + 2m = {} differs from the crossing count {}",
            o.closed_form, o.crossing_count
        );
    }
    s
}

#[derive(Serialize)]
struct ScanRow {
    r: f64,
    count: usize,
}

fn cmd_scan(t: &HarmonicTrinomial, grid: Option<(f64, f64, usize)>, cfg: &CliConfig) -> Outcome {
    let cc = cfg.count_config();
    let set = match JumpSet::compute(t, &cc) {
        Ok(s) => s,
        Err(e) => return lib_failure(&e),
    };
    let rows: Vec<ScanRow> = match grid {
        None => set.profile().into_iter().map(|p| ScanRow { r: p.radius, count: p.count_after }).collect(),
        Some((lo, hi, steps)) => {
            if !(lo >= 0.0 && hi >= lo && hi.is_finite()) || steps == 0 {
                return Outcome::fail(EXIT_INPUT, "error: scan needs 0 <= r_min <= r_max and steps >= 1\n".into());
            }
            (0..steps)
                .map(|i| {
                    let r = if steps == 1 { lo } else { lo + (hi - lo) * i as f64 / (steps - 1) as f64 };
                    let count = if r > 0.0 { set.count(r, cfg.closed_disk) } else { 0 };
                    ScanRow { r, count }
                })
                .collect()
        }
    };
    let body = match cfg.format {
        Format::Json => json(&rows),
        Format::Csv | Format::Text => {
            let mut s = String::from("r,count\n");
            for row in &rows {
                let _ = writeln!(s, "{},{}", row.r, row.count);
            }
            s
        }
    };
    Outcome::ok(EXIT_OK, body)
}

#[derive(Serialize)]
struct Angle {
    rad: f64,
    pi: f64,
}

impl Angle {
    fn new(rad: f64) -> Self {
        Self { rad, pi: rad / PI }
    }
}

#[derive(Serialize)]
struct RegionsReport {
    #[serde(flatten)]
    profile: RegionProfile,
    p_star: f64,
    generic: bool,
    r1: Option<f64>,
    /// `gcd(n, m)`; radii above belong to the reduced instance in `w = z^d`.
    gcd: u32,
    alpha: Angle,
    beta: Angle,
}

fn cmd_regions(t: &HarmonicTrinomial, cfg: &CliConfig) -> Outcome {
    let set = match JumpSet::compute(t, &cfg.count_config()) {
        Ok(s) => s,
        Err(e) => return lib_failure(&e),
    };
    let report = RegionsReport {
        profile: set.region,
        p_star: set.pivot.p_star,
        generic: set.pivot.generic,
        r1: set.region.r1,
        gcd: set.gcd(),
        alpha: Angle::new(set.reduced.alpha()),
        beta: Angle::new(set.reduced.beta()),
    };
    let body = match cfg.format {
        Format::Json => json(&report),
        Format::Csv | Format::Text => {
            let mut flat = String::new();
            flatten("", &serde_json::to_value(&report).expect("report serializes"), &mut flat);
            let mut s = if cfg.format == Format::Csv { String::from("key,value\n") } else { String::new() };
            let sep = if cfg.format == Format::Csv { "," } else { ": " };
            for line in flat.lines() {
                let (k, v) = line.split_once('=').unwrap_or((line, ""));
                let _ = writeln!(s, "{k}{sep}{v}");
            }
            s
        }
    };
    Outcome::ok(EXIT_OK, body)
}

#[derive(Serialize)]
struct RootsReport {
    circle_roots: Vec<crate::counter::CircleRoot>,
    oracle_roots: Vec<crate::oracle::OracleRoot>,
}

fn cmd_roots(t: &HarmonicTrinomial, cfg: &CliConfig) -> Outcome {
    let cc = cfg.count_config();
    let oracle = match find_all_roots(t, &cfg.oracle) {
        Ok(r) => r,
        Err(e) => return lib_failure(&e),
    };
    let circle = match circle_roots(t, &cc) {
        Ok(r) => r,
        Err(e) => return lib_failure(&e),
    };
    let report = RootsReport { circle_roots: circle, oracle_roots: oracle.roots };
    let body = match cfg.format {
        Format::Json => json(&report),
        Format::Csv | Format::Text => {
            let mut s = String::from("source,re,im,modulus,residual,tag\n");
            for c in &report.circle_roots {
                let _ = writeln!(
                    s,
                    "circle,{},{},{},{:e},{}",
                    c.zeta.re,
                    c.zeta.im,
                    c.zeta.norm(),
                    c.residual,
                    c.path.symbol()
                );
            }
            for o in &report.oracle_roots {
                let tag = serde_json::to_value(o.jac_sign).expect("sign serializes");
                let _ = writeln!(
                    s,
                    "oracle,{},{},{},{:e},{}",
                    o.zeta.re,
                    o.zeta.im,
                    o.zeta.norm(),
                    o.residual,
                    tag.as_str().unwrap_or("?")
                );
            }
            if cfg.format == Format::Text {
                s = s.replace(',', "  ");
            }
            s
        }
    };
    Outcome::ok(EXIT_OK, body)
}

fn cmd_verify(t: &HarmonicTrinomial, cfg: &CliConfig) -> Outcome {
    let report: VerificationReport = verify(t, &cfg.count_config());
    let body = match cfg.format {
        Format::Json => json(&report),
        Format::Csv | Format::Text => {
            let mut s = if cfg.format == Format::Csv { String::from("check,passed,detail\n") } else { String::new() };
            for c in &report.checks {
                if cfg.format == Format::Csv {
                    let _ = writeln!(s, "{},{},\"{}\"", c.name, c.passed, c.detail.replace('"', "'"));
                } else {
                    let _ = writeln!(s, "{:<16} {}  {}", c.name, if c.passed { "PASS" } else { "FAIL" }, c.detail);
                }
            }
            if cfg.format == Format::Text {
                let _ = writeln!(
                    s,
                    "{}: formula {} vs oracle {}",
                    if report.passed { "PASS" } else { "FAIL" },
                    report.formula_total.map_or("-".into(), |v| v.to_string()),
                    report.oracle_total.map_or("-".into(), |v| v.to_string()),
                );
            }
            s
        }
    };
    if let Some(err) = &report.oracle_error {
        return Outcome { code: EXIT_ORACLE, stdout: body, stderr: format!("error: oracle failed: {err}\n") };
    }
    if let Some(err) = &report.formula_error {
        return Outcome { code: EXIT_ORACLE, stdout: body, stderr: format!("error: {err}\n") };
    }
    if !report.passed {
        return Outcome { code: EXIT_ORACLE, stdout: body, stderr: "error: verification failed\n".into() };
    }
    Outcome::ok(EXIT_OK, body)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(line: &str) -> Outcome {
        run(std::iter::once("trinomial").chain(line.split_whitespace()))
    }

    #[test]
    fn coefficient_forms() {
        assert_eq!(parse_coefficient("1,0").unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(parse_coefficient("-2.5,3").unwrap(), Complex64::new(-2.5, 3.0));
        let z = parse_coefficient("2@90").unwrap();
        assert!((z - Complex64::new(0.0, 2.0)).norm() < 1e-15);
        assert_eq!(parse_coefficient("4").unwrap(), Complex64::new(4.0, 0.0));
        assert!(parse_coefficient("1,x").is_err());
    }

    #[test]
    fn count_examples() {
        let out = run_args("count --a 1,0 --b 1,0 --c 1,0 --n 2 --m 1 --r 1.5 --format csv");
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "r,count\n1.5,2\n");
        let out = run_args("count --a 1,0 --b 1,0 --c 1,0 --n 2 --m 1 --r 0.1 --format csv");
        assert_eq!(out.stdout, "r,count\n0.1,0\n");
        let out = run_args("count --a 0,0 --b 1,0 --c 1,0 --n 2 --m 1 --r 1");
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("ZeroCoefficient"));
    }

    #[test]
    fn config_round_trip() {
        let mut cfg = CliConfig::default();
        cfg.format = Format::Csv;
        cfg.closed_disk = true;
        cfg.tol.int_hit = 3.0e-11;
        cfg.tol.boundary = 0.1 + 0.2;
        cfg.oracle.density = 3;
        let text = cfg.to_config_string();
        assert!(text.contains("format=csv\n"));
        assert!(text.contains("tol.int_hit=3e-11\n"));
        assert_eq!(CliConfig::from_config_str(&text).unwrap(), cfg);
        assert_eq!(CliConfig::from_config_str("").unwrap(), CliConfig::default());
        assert!(CliConfig::from_config_str("bogus=1").is_err());
    }

    #[test]
    fn random_instances_are_reproducible() {
        let a = random_instance(42, None, None).unwrap();
        let b = random_instance(42, None, None).unwrap();
        assert_eq!(a, b);
        assert_eq!(gcd(a.n(), a.m()), 1);
    }
}
