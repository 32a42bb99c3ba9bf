//! Command-line experiment runner.

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use crate::compacta::{directed_hausdorff, to_cloud, CompactCloud, DEFAULT_SINGLETON_DELTA};
use crate::curves::{cardioid, circle, SampledCurve};
use crate::error::{Error, Result};
use crate::groups::{limit_set_sample, octahedral_net, psu2_net, GroupNet, GroupSpec};
use crate::io::{curves_svg, member_rows_csv, to_canonical_json};
use crate::moebius::{format_complex, MoebiusMap};
use crate::orbit::{
    bh_empirical_test, default_metric, degeneration_profile, fatten_family, orbit_family_with_delta,
    provenance_residual, summarize_family, DEFAULT_ESTIMATOR_RESOLUTION,
};
use crate::quasicircle::{quasicircle_verdict, turning_constant, Metric};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "QUASIORBIT_OUT_DIR";

const DEFAULT_RESOLUTION: usize = 512;
const DEFAULT_K_CAP: f64 = 10.0;
const SVG_MEMBER_LIMIT: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "quasiorbit", version, about = "Möbius orbits of sampled Jordan curves")]
pub struct Cli {
    /// JSON file with parameters; command-line flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Directory for JSON/CSV/SVG files [env: QUASIORBIT_OUT_DIR].
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker thread cap.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Also write SVG plots (needs an output directory).
    #[arg(long, global = true)]
    pub svg: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a curve, check it and export it.
    Curve(CurveArgs),
    /// Classify a Möbius map given as four complex entries.
    Classify(MatrixArgs),
    /// Iwasawa factorization of a Möbius map.
    Iwasawa(MatrixArgs),
    /// Chordal Hausdorff distance between two curves or clouds.
    Hausdorff(HausdorffArgs),
    /// Turning constant of a curve, or its trend over resolutions.
    Qc(QcArgs),
    /// Orbit family of a curve under a group.
    Orbit(OrbitArgs),
    /// Sup of orbit turning constants across resolutions.
    BhTest(BhArgs),
    /// Fixed-point sample of a group's limit set.
    LimitSet(LimitSetArgs),
    /// Orbit family fattened by a finite set of rotations.
    Fatten(FattenArgs),
}

/// Curve syntax: `cardioid[:n=512,p=1]`, `circle[:cx=0,cy=0,r=1,n=512]` or `file:PATH`.
#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(long)]
    pub curve: Option<String>,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// Four complex tokens a b c d, e.g. "1 1 0 1" or "2 3+1i 0 0.5".
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: Option<String>,
}

#[derive(Debug, Args)]
pub struct HausdorffArgs {
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub b: Option<String>,
}

#[derive(Debug, Args)]
pub struct QcArgs {
    #[arg(long)]
    pub curve: Option<String>,
    /// Comma-separated sample counts; without it the curve is estimated once.
    #[arg(long, value_delimiter = ',')]
    pub resolutions: Option<Vec<usize>>,
    #[arg(long)]
    pub metric: Option<Metric>,
    #[arg(long)]
    pub k_cap: Option<f64>,
}

/// Group syntax: `trivial`, `parabolic`, `loxodromic:lambda=2`, `rank2:tau=i`.
/// Curves default to 2048 samples here so member constants are comparable.
#[derive(Debug, Args)]
pub struct OrbitArgs {
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long)]
    pub curve: Option<String>,
    #[arg(long)]
    pub bound: Option<usize>,
    #[arg(long)]
    pub metric: Option<Metric>,
    /// Chordal diameter below which a member counts as degenerate.
    #[arg(long)]
    pub delta: Option<f64>,
}

#[derive(Debug, Args)]
pub struct BhArgs {
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long)]
    pub curve: Option<String>,
    #[arg(long)]
    pub bound: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub resolutions: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
pub struct LimitSetArgs {
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long)]
    pub bound: Option<usize>,
}

/// Net syntax: `identity`, `octahedral` or `psu2:res=0.5`.
#[derive(Debug, Args)]
pub struct FattenArgs {
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long)]
    pub curve: Option<String>,
    #[arg(long)]
    pub bound: Option<usize>,
    #[arg(long)]
    pub net: Option<String>,
    #[arg(long)]
    pub metric: Option<Metric>,
}

/// A group given either in the command-line syntax or as a tagged object.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum GroupArg {
    Text(String),
    Spec(GroupSpec),
}

impl GroupArg {
    fn resolve(&self) -> Result<GroupSpec> {
        match self {
            GroupArg::Text(s) => parse_group_spec(s),
            GroupArg::Spec(g) => Ok(g.clone()),
        }
    }
}

/// Parameters accepted in a `--config` file. Unknown keys are rejected.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub curve: Option<String>,
    pub group: Option<GroupArg>,
    pub bound: Option<usize>,
    pub resolutions: Option<Vec<usize>>,
    pub metric: Option<Metric>,
    pub k_cap: Option<f64>,
    pub matrix: Option<String>,
    pub a: Option<String>,
    pub b: Option<String>,
    pub net: Option<String>,
    pub delta: Option<f64>,
    pub out: Option<PathBuf>,
    pub svg: Option<bool>,
    pub threads: Option<usize>,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CurveSpec {
    Cardioid { n: usize, p: f64 },
    Circle { center: Complex64, r: f64, n: usize },
    File(PathBuf),
}

impl CurveSpec {
    /// The curve at its own resolution.
    pub fn build(&self) -> Result<SampledCurve> {
        match self {
            CurveSpec::Cardioid { n, p } => cardioid(*n, *p),
            CurveSpec::Circle { center, r, n } => circle(*center, *r, *n),
            CurveSpec::File(path) => SampledCurve::from_file_str(&read(path)?, true),
        }
    }

    /// The curve resampled with `n` points; files have a fixed resolution.
    pub fn at_resolution(&self, n: usize) -> Result<SampledCurve> {
        match self {
            CurveSpec::Cardioid { p, .. } => cardioid(n, *p),
            CurveSpec::Circle { center, r, .. } => circle(*center, *r, n),
            CurveSpec::File(path) => Err(Error::OutOfRange(format!(
                "curve file {} has a fixed resolution",
                path.display()
            ))),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn key_values(kind: &str, rest: Option<&str>, allowed: &[&str]) -> Result<Vec<(String, String)>> {
    let Some(rest) = rest.filter(|r| !r.is_empty()) else { return Ok(Vec::new()) };
    rest.split(',')
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("{kind}: expected key=value, got {kv:?}")))?;
            let k = k.trim();
            if !allowed.contains(&k) {
                return Err(Error::Parse(format!("{kind}: unknown parameter {k:?} (allowed: {})", allowed.join(", "))));
            }
            Ok((k.to_string(), v.trim().to_string()))
        })
        .collect()
}

fn number<T: std::str::FromStr>(kind: &str, key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| Error::Parse(format!("{kind}: bad value {v:?} for {key}")))
}

pub fn parse_curve_spec(s: &str) -> Result<CurveSpec> {
    parse_curve_spec_with_default(s, DEFAULT_RESOLUTION)
}

/// As [`parse_curve_spec`], with `default_n` samples when `n` is not given.
pub fn parse_curve_spec_with_default(s: &str, default_n: usize) -> Result<CurveSpec> {
    let (kind, rest) = match s.split_once(':') {
        Some((k, r)) => (k, Some(r)),
        None => (s, None),
    };
    match kind {
        "cardioid" => {
            let (mut n, mut p) = (default_n, 1.0);
            for (k, v) in key_values(kind, rest, &["n", "p"])? {
                match k.as_str() {
                    "n" => n = number(kind, &k, &v)?,
                    _ => p = number(kind, &k, &v)?,
                }
            }
            Ok(CurveSpec::Cardioid { n, p })
        }
        "circle" => {
            let (mut cx, mut cy, mut r, mut n) = (0.0, 0.0, 1.0, default_n);
            for (k, v) in key_values(kind, rest, &["cx", "cy", "r", "n"])? {
                match k.as_str() {
                    "cx" => cx = number(kind, &k, &v)?,
                    "cy" => cy = number(kind, &k, &v)?,
                    "r" => r = number(kind, &k, &v)?,
                    _ => n = number(kind, &k, &v)?,
                }
            }
            Ok(CurveSpec::Circle { center: Complex64::new(cx, cy), r, n })
        }
        "file" => match rest {
            Some(path) if !path.is_empty() => Ok(CurveSpec::File(PathBuf::from(path))),
            _ => Err(Error::Parse("file: missing path".into())),
        },
        _ => Err(Error::Parse(format!("unknown curve {kind:?} (cardioid|circle|file:PATH)"))),
    }
}

pub fn parse_group_spec(s: &str) -> Result<GroupSpec> {
    let (kind, rest) = match s.split_once(':') {
        Some((k, r)) => (k, Some(r)),
        None => (s, None),
    };
    let complex = |kind: &str, key: &str, default: Complex64| -> Result<Complex64> {
        match key_values(kind, rest, &[key])?.first() {
            Some((_, v)) => crate::moebius::parse_complex(v),
            None => Ok(default),
        }
    };
    match kind {
        "trivial" => key_values(kind, rest, &[]).map(|_| GroupSpec::Trivial),
        "parabolic" => key_values(kind, rest, &[]).map(|_| GroupSpec::CyclicParabolic),
        "loxodromic" => GroupSpec::cyclic_loxodromic(complex(kind, "lambda", Complex64::new(2.0, 0.0))?),
        "rank2" => GroupSpec::rank_two_parabolic(complex(kind, "tau", Complex64::i())?),
        _ => Err(Error::Parse(format!(
            "unknown group {kind:?} (trivial|parabolic|loxodromic[:lambda=..]|rank2[:tau=..]); custom groups go in --config"
        ))),
    }
}

pub fn parse_net(s: &str) -> Result<GroupNet> {
    let (kind, rest) = match s.split_once(':') {
        Some((k, r)) => (k, Some(r)),
        None => (s, None),
    };
    match kind {
        "identity" => Ok(GroupNet::identity()),
        "octahedral" => Ok(octahedral_net()),
        "psu2" => {
            let kv = key_values(kind, rest, &["res"])?;
            let res = match kv.first() {
                Some((k, v)) => number(kind, k, v)?,
                None => 0.5,
            };
            psu2_net(res)
        }
        _ => Err(Error::Parse(format!("unknown net {kind:?} (identity|octahedral|psu2[:res=..])"))),
    }
}

fn require<T>(value: Option<T>, what: &str) -> Result<T> {
    value.ok_or_else(|| Error::OutOfRange(format!("missing required parameter --{what}")))
}

struct Output {
    dir: Option<PathBuf>,
    svg: bool,
}

impl Output {
    fn write(&self, name: &str, contents: &str) -> Result<()> {
        if let Some(dir) = &self.dir {
            std::fs::create_dir_all(dir)?;
            std::fs::write(dir.join(name), contents)?;
        }
        Ok(())
    }

    fn plot(&self, name: &str, curves: &[&SampledCurve]) -> Result<Option<usize>> {
        if !self.svg || self.dir.is_none() {
            return Ok(None);
        }
        let p = curves_svg(curves);
        self.write(name, &p.svg)?;
        Ok(Some(p.clipped_points))
    }
}

fn curve_or_cloud(s: &str) -> Result<CompactCloud> {
    match s.strip_prefix("file:") {
        Some(path) => CompactCloud::from_file_str(&read(Path::new(path))?),
        None => Ok(to_cloud(&parse_curve_spec(s)?.build()?)),
    }
}

fn json<T: Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Parse(e.to_string()))
}

fn matrix_json(m: &MoebiusMap) -> Value {
    json!(m.entries().iter().map(|z| format_complex(*z)).collect::<Vec<_>>())
}

/// Runs a parsed command and returns the canonical JSON it prints.
pub fn execute(cli: &Cli) -> Result<String> {
    let cfg = match &cli.config {
        Some(path) => ExperimentConfig::from_json(&read(path)?)?,
        None => ExperimentConfig::default(),
    };
    if let Some(t) = cli.threads.or(cfg.threads) {
        if t == 0 {
            return Err(Error::OutOfRange("--threads must be at least 1".into()));
        }
        // a pool can only be installed once per process; later calls keep the first
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let out = Output {
        dir: cli
            .out
            .clone()
            .or(cfg.out.clone())
            .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from)),
        svg: cli.svg || cfg.svg.unwrap_or(false),
    };
    let curve_arg = |flag: &Option<String>| flag.clone().or(cfg.curve.clone());
    let group_arg = |flag: &Option<String>| -> Result<GroupSpec> {
        match (flag, &cfg.group) {
            (Some(s), _) => parse_group_spec(s),
            (None, Some(g)) => g.resolve(),
            (None, None) => Err(Error::OutOfRange("missing required parameter --group".into())),
        }
    };

    let (command, result) = match &cli.command {
        Command::Curve(a) => {
            let c = parse_curve_spec(&require(curve_arg(&a.curve), "curve")?)?.build()?;
            out.write("curve.txt", &c.to_file_string())?;
            let clipped = out.plot("curve.svg", &[&c])?;
            let cloud = to_cloud(&c);
            (
                "curve",
                json!({
                    "label": c.label(),
                    "samples": c.len(),
                    "simple": c.is_simple(),
                    "contains_infinity": c.contains_infinity(),
                    "chordal_diameter": crate::compacta::chordal_diameter(&cloud),
                    "cloud_epsilon": cloud.epsilon(),
                    "svg_clipped_points": clipped,
                }),
            )
        }
        Command::Classify(a) => {
            let m: MoebiusMap = require(a.matrix.clone().or(cfg.matrix.clone()), "matrix")?.parse()?;
            let class = m.classify();
            let fixed = match m.fixed_points() {
                Ok(f) => json(&f)?,
                Err(Error::IdentityFixedPoints) => Value::String("all".into()),
                Err(e) => return Err(e),
            };
            (
                "classify",
                json!({
                    "matrix": matrix_json(&m),
                    "class": class.tag,
                    "trace_squared": format_complex(class.trace_squared),
                    "fixed_points": fixed,
                }),
            )
        }
        Command::Iwasawa(a) => {
            let m: MoebiusMap = require(a.matrix.clone().or(cfg.matrix.clone()), "matrix")?.parse()?;
            let f = m.iwasawa();
            (
                "iwasawa",
                json!({
                    "matrix": matrix_json(&m),
                    "k": matrix_json(&f.k),
                    "b": matrix_json(&f.b),
                    "residual": f.k.compose(&f.b).projective_entry_diff(&m),
                    "k_unitary": f.k.is_unitary(1e-9),
                    "b_borel": f.b.is_in_borel(1e-12),
                }),
            )
        }
        Command::Hausdorff(a) => {
            let x = curve_or_cloud(&require(a.a.clone().or(cfg.a.clone()), "a")?)?;
            let y = curve_or_cloud(&require(a.b.clone().or(cfg.b.clone()), "b")?)?;
            let (ab, ba) = (directed_hausdorff(&x, &y), directed_hausdorff(&y, &x));
            (
                "hausdorff",
                json!({
                    "distance": ab.max(ba),
                    "directed_ab": ab,
                    "directed_ba": ba,
                    "error_bound": x.epsilon() + y.epsilon(),
                    "sizes": [x.len(), y.len()],
                }),
            )
        }
        Command::Qc(a) => {
            let spec = parse_curve_spec(&require(curve_arg(&a.curve), "curve")?)?;
            let metric = a.metric.or(cfg.metric).unwrap_or(Metric::Euclidean);
            match a.resolutions.clone().or(cfg.resolutions.clone()) {
                None => {
                    let c = spec.build()?;
                    let e = turning_constant(&c, metric)?;
                    out.plot("qc.svg", &[&c])?;
                    ("qc", json!({ "curve": c.label(), "estimate": json(&e)? }))
                }
                Some(res) => {
                    let k_cap = a.k_cap.or(cfg.k_cap).unwrap_or(DEFAULT_K_CAP);
                    let (verdict, trend) = quasicircle_verdict(|n| spec.at_resolution(n), &res, k_cap, metric)?;
                    let mut table = String::from("resolution,constant\n");
                    for (n, c) in trend.resolutions.iter().zip(&trend.constants) {
                        table.push_str(&format!("{n},{c:.16e}\n"));
                    }
                    out.write("qc.csv", &table)?;
                    ("qc", json!({ "metric": metric, "k_cap": k_cap, "trend": json(&trend)?, "verdict": json(&verdict)? }))
                }
            }
        }
        Command::Orbit(a) => {
            let spec = group_arg(&a.group)?;
            let base = parse_curve_spec_with_default(&require(curve_arg(&a.curve), "curve")?, DEFAULT_ESTIMATOR_RESOLUTION)?
                .build()?;
            let bound = require(a.bound.or(cfg.bound), "bound")?;
            let delta = a.delta.or(cfg.delta).unwrap_or(DEFAULT_SINGLETON_DELTA);
            let family = orbit_family_with_delta(&spec, &base, bound, delta)?;
            let metric = a.metric.or(cfg.metric).unwrap_or_else(|| default_metric(&family));
            let summary = summarize_family(&family, metric)?;
            out.write("orbit_members.csv", &member_rows_csv(&summary.rows)?)?;
            let shown: Vec<&SampledCurve> = family.members.iter().take(SVG_MEMBER_LIMIT).map(|m| &m.curve).collect();
            out.plot("orbit.svg", &shown)?;
            let profile = if spec.is_cyclic() { Some(json(&degeneration_profile(&family)?)?) } else { None };
            (
                "orbit",
                json!({
                    "group": spec.name(),
                    "base": base.label(),
                    "bound": bound,
                    "members": family.len(),
                    "summary": json(&summary)?,
                    "degeneration": profile,
                }),
            )
        }
        Command::BhTest(a) => {
            let spec = group_arg(&a.group)?;
            let curve = parse_curve_spec(&require(curve_arg(&a.curve), "curve")?)?;
            let bound = require(a.bound.or(cfg.bound), "bound")?;
            let res = require(a.resolutions.clone().or(cfg.resolutions.clone()), "resolutions")?;
            let report = bh_empirical_test(&spec, |n| curve.at_resolution(n), bound, &res)?;
            for r in &report.records {
                out.write(&format!("bh_members_{}.csv", r.resolution), &member_rows_csv(&r.family.rows)?)?;
            }
            ("bh-test", json(&report)?)
        }
        Command::LimitSet(a) => {
            let spec = group_arg(&a.group)?;
            let bound = require(a.bound.or(cfg.bound), "bound")?;
            let cloud = limit_set_sample(&spec, bound)?;
            out.write("limit_set.txt", &cloud.to_file_string())?;
            ("limit-set", json!({ "group": spec.name(), "bound": bound, "points": json(&cloud.points())? }))
        }
        Command::Fatten(a) => {
            let spec = group_arg(&a.group)?;
            let base = parse_curve_spec_with_default(&require(curve_arg(&a.curve), "curve")?, DEFAULT_ESTIMATOR_RESOLUTION)?
                .build()?;
            let bound = require(a.bound.or(cfg.bound), "bound")?;
            let net = parse_net(&a.net.clone().or(cfg.net.clone()).unwrap_or_else(|| "octahedral".into()))?;
            let family = orbit_family_with_delta(&spec, &base, bound, cfg.delta.unwrap_or(DEFAULT_SINGLETON_DELTA))?;
            let fat = fatten_family(&family, &net);
            let metric = a.metric.or(cfg.metric).unwrap_or(Metric::Chordal);
            let summary = summarize_family(&fat, metric)?;
            out.write("fatten_members.csv", &member_rows_csv(&summary.rows)?)?;
            let shown: Vec<&SampledCurve> = fat.members.iter().take(SVG_MEMBER_LIMIT).map(|m| &m.curve).collect();
            out.plot("fatten.svg", &shown)?;
            (
                "fatten",
                json!({
                    "group": spec.name(),
                    "net": net.description,
                    "net_size": net.len(),
                    "family_size": family.len(),
                    "members": fat.len(),
                    "all_simple": fat.members.iter().all(|m| m.simple),
                    "provenance_residual": provenance_residual(&fat, &family, &net)?,
                    "summary": json(&summary)?,
                }),
            )
        }
    };
    let text = to_canonical_json(&json!({ "command": command, "result": result }))?;
    out.write(&format!("{command}.json"), &text)?;
    Ok(text)
}

/// Parses `argv`, runs the command, prints JSON to stdout and returns the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(text) => {
            use std::io::Write;
            // a closed pipe on stdout is reported, not a panic
            match writeln!(std::io::stdout(), "{text}") {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("error: writing output: {e}");
                    1
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Result<Value> {
        let cli = Cli::try_parse_from(std::iter::once("quasiorbit").chain(args.iter().copied())).unwrap();
        execute(&cli).map(|s| serde_json::from_str(&s).unwrap())
    }

    #[test]
    fn curve_spec_syntax() {
        assert_eq!(parse_curve_spec("cardioid").unwrap(), CurveSpec::Cardioid { n: 512, p: 1.0 });
        assert_eq!(parse_curve_spec("cardioid:n=64,p=2").unwrap(), CurveSpec::Cardioid { n: 64, p: 2.0 });
        assert_eq!(
            parse_curve_spec("circle:cx=1,r=2,n=16").unwrap(),
            CurveSpec::Circle { center: Complex64::new(1.0, 0.0), r: 2.0, n: 16 }
        );
        assert_eq!(parse_curve_spec("file:/x/y").unwrap(), CurveSpec::File("/x/y".into()));
        assert!(parse_curve_spec("cardioid:q=1").is_err());
        assert!(parse_curve_spec("cardioid:n=abc").is_err());
        assert!(parse_curve_spec("ellipse").is_err());
        assert!(parse_curve_spec("file:").is_err());
    }

    #[test]
    fn group_and_net_syntax() {
        assert_eq!(parse_group_spec("trivial").unwrap(), GroupSpec::Trivial);
        assert_eq!(parse_group_spec("parabolic").unwrap(), GroupSpec::CyclicParabolic);
        assert_eq!(
            parse_group_spec("loxodromic:lambda=2").unwrap(),
            GroupSpec::CyclicLoxodromic { lambda: Complex64::new(2.0, 0.0) }
        );
        assert_eq!(
            parse_group_spec("rank2:tau=0.5+1i").unwrap(),
            GroupSpec::RankTwoParabolic { tau: Complex64::new(0.5, 1.0) }
        );
        assert!(parse_group_spec("loxodromic:lambda=0.5").is_err());
        assert!(parse_group_spec("free").is_err());
        assert_eq!(parse_net("octahedral").unwrap().len(), 24);
        assert_eq!(parse_net("identity").unwrap().len(), 1);
        assert!(parse_net("psu2:res=0.9").unwrap().len() > 24);
        assert!(parse_net("psu2:res=-1").is_err());
    }

    #[test]
    fn config_rejects_unknown_fields() {
        assert!(ExperimentConfig::from_json(r#"{"curve":"cardioid","colour":"red"}"#).is_err());
        let c = ExperimentConfig::from_json(r#"{"group":{"kind":"rank_two_parabolic","tau":[0,2]},"bound":1}"#).unwrap();
        assert_eq!(
            c.group.unwrap().resolve().unwrap(),
            GroupSpec::RankTwoParabolic { tau: Complex64::new(0.0, 2.0) }
        );
        let c = ExperimentConfig::from_json(r#"{"group":"parabolic"}"#).unwrap();
        assert_eq!(c.group.unwrap().resolve().unwrap(), GroupSpec::CyclicParabolic);
    }

    #[test]
    fn classify_and_iwasawa() {
        let v = exec(&["classify", "--matrix", "1 1 0 1"]).unwrap();
        assert_eq!(v["command"], "classify");
        assert_eq!(v["result"]["class"], "Parabolic");
        let v = exec(&["classify", "--matrix", "2 3 0 1"]).unwrap();
        assert_eq!(v["result"]["class"], "Loxodromic");
        let v = exec(&["iwasawa", "--matrix", "1 2 3 7"]).unwrap();
        assert!(v["result"]["residual"].as_f64().unwrap() < 1e-12);
        assert_eq!(v["result"]["k_unitary"], true);
        assert!(matches!(exec(&["classify", "--matrix", "1 2 2 4"]), Err(Error::SingularMatrix)));
        assert!(matches!(exec(&["classify"]), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn qc_and_files() {
        let dir = tempfile::tempdir().unwrap();
        let d = dir.path().to_str().unwrap();
        let v = exec(&["qc", "--curve", "cardioid", "--resolutions", "64,128,256", "--out", d]).unwrap();
        assert_eq!(v["result"]["verdict"]["verdict"], "unbounded_trend");
        assert!(dir.path().join("qc.csv").exists());
        assert!(dir.path().join("qc.json").exists());
        let v = exec(&["curve", "--curve", "circle:n=64", "--out", d, "--svg"]).unwrap();
        assert_eq!(v["result"]["simple"], true);
        let file = dir.path().join("curve.txt");
        let spec = format!("file:{}", file.display());
        let v = exec(&["qc", "--curve", &spec]).unwrap();
        assert!((v["result"]["estimate"]["constant"].as_f64().unwrap() - 1.0).abs() < 1e-2);
        assert!(dir.path().join("curve.svg").exists());
        let h = exec(&["hausdorff", "--a", &spec, "--b", "circle:n=64"]).unwrap();
        assert_eq!(h["result"]["distance"].as_f64(), Some(0.0));
        assert!(exec(&["qc", "--curve", &spec, "--resolutions", "64,128,256"]).is_err());
    }

    #[test]
    fn group_commands() {
        let v = exec(&["limit-set", "--group", "loxodromic:lambda=2", "--bound", "2"]).unwrap();
        assert_eq!(v["result"]["points"].as_array().unwrap().len(), 2);
        assert!(matches!(exec(&["limit-set", "--group", "trivial", "--bound", "2"]), Err(Error::TrivialLimitSet)));
        let v = exec(&["orbit", "--group", "parabolic", "--curve", "cardioid:n=64", "--bound", "2"]).unwrap();
        assert_eq!(v["result"]["members"], 5);
        assert!(v["result"]["degeneration"].is_object());
        let v = exec(&["fatten", "--group", "parabolic", "--curve", "cardioid:n=64", "--bound", "1"]).unwrap();
        assert_eq!(v["result"]["members"], 72);
        assert_eq!(v["result"]["all_simple"], true);
    }
}
