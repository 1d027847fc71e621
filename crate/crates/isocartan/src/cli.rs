//! Argument parsing and subcommand dispatch.
//!
//! [`run`] never touches stdout or the process exit code; it returns a
//! [`Run`] that `main` (or a test) writes out. Exit codes: 0 pass, 1 a
//! verified identity or theorem check failed, 2 bad input.

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use isocartan_core::cartan::{self, Tolerances};
use isocartan_core::fixtures::{self, CATALOG};
use isocartan_core::focal::{self, FocalSet, Interval};
use isocartan_core::model::{self, HypersurfaceModel};
use isocartan_core::rootsys::{self, RootProjection};
use isocartan_core::{Error, Rational};

use crate::census;
use crate::io::{self, IdentityOut, TheoremCOut, TheoremDOut, VerifyOut};
use crate::text::{c12, g12};

#[derive(Debug, Parser)]
#[command(name = "isocartan", version, about = "Focal radii, Cartan-type identities and the restricted-root census")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Acceptance tolerance on |total| [default: 1e-9]
    #[arg(long, global = true, value_name = "TOL")]
    pub tol: Option<f64>,
    /// Distance |lambda - T(mu)| below which a block counts as focal [default: 1e-7]
    #[arg(long, global = true, value_name = "TOL")]
    pub membership_tol: Option<f64>,
    /// Radii closer than this are merged [default: 1e-9]
    #[arg(long, global = true, value_name = "TOL")]
    pub merge_tol: Option<f64>,
    /// Real-part window (LO, HI], open at LO [default: (0, 4P] with P the largest period]
    #[arg(long, global = true, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    pub re_window: Option<Vec<f64>>,
    /// Imaginary-part window [LO, HI] [default: [-2P, 2P]]
    #[arg(long, global = true, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    pub im_window: Option<Vec<f64>>,
    /// Output format; `md` and `csv` apply to tables and radius lists
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the census tables and their differences from the stored values
    Tables,
    /// Check a model file for sign, multiplicity and duplicate problems
    Validate {
        model: PathBuf,
        /// Also require the multiplicities to sum to this dimension
        #[arg(long)]
        dim: Option<u32>,
    },
    /// List focal radii in the window
    Focal {
        model: PathBuf,
        /// Only real radii, even for non-compact models
        #[arg(long)]
        real: bool,
    },
    /// Evaluate the Cartan sum at every focal radius in the window
    Verify { model: PathBuf },
    /// Two-curvature, tube-spectrum and counting checks for a non-compact model
    CheckC {
        model: PathBuf,
        /// Symmetric space for the counting bound, e.g. `G2^2/SO(4)` or `CH3`
        #[arg(long, requires = "direction")]
        space: Option<String>,
        /// Direction in the root coordinates, e.g. `1,0,-1` or `1/3,1/3,-2/3`
        #[arg(long, requires = "space", allow_hyphen_values = true)]
        direction: Option<String>,
    },
    /// Unique real focal radius, vanishing focal shape operator and the tube flow
    CheckD { model: PathBuf },
    /// List or build fixture models
    #[command(subcommand)]
    Fixtures(FixturesCommand),
    /// Symmetric or interleaved truncation of the lifted trace sum
    LiftedTrace(LiftedArgs),
}

#[derive(Debug, Subcommand)]
pub enum FixturesCommand {
    List,
    Build {
        name: String,
        /// Parameter override `key=value`, repeatable
        #[arg(long = "param", value_name = "KEY=VALUE", value_parser = parse_param)]
        params: Vec<(String, f64)>,
    },
}

#[derive(Debug, Args)]
pub struct LiftedArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub r1: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub r2: f64,
    #[arg(long)]
    pub m1: u32,
    #[arg(long)]
    pub m2: u32,
    /// Index of the base point on the lattice
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub i0: i64,
    /// Symmetric truncation order
    #[arg(long, default_value_t = 10, conflicts_with = "ordered")]
    pub k: u64,
    /// Use the interleaved order 1, 0, 2, -1, ... with this many terms instead
    #[arg(long)]
    pub ordered: Option<u64>,
}

fn parse_param(s: &str) -> Result<(String, f64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected KEY=VALUE, got `{s}`"))?;
    let v: f64 = v.trim().parse().map_err(|e| format!("value of `{k}`: {e}"))?;
    Ok((k.trim().to_string(), v))
}

/// What a subcommand produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub report: String,
    /// Human diagnostics for standard error.
    pub diagnostics: String,
    pub code: u8,
}

impl Run {
    fn ok(report: String) -> Self {
        Self { report, diagnostics: String::new(), code: 0 }
    }

    fn verdict(report: String, passed: bool) -> Self {
        Self { report, diagnostics: String::new(), code: if passed { 0 } else { 1 } }
    }
}

fn positive(name: &str, v: Option<f64>, default: f64) -> Result<f64> {
    match v {
        None => Ok(default),
        Some(x) if x > 0.0 && x.is_finite() => Ok(x),
        Some(x) => bail!("--{name} must be positive and finite, got {x}"),
    }
}

impl Options {
    pub fn tolerances(&self) -> Result<Tolerances> {
        let d = Tolerances::default();
        Ok(Tolerances {
            membership: positive("membership-tol", self.membership_tol, d.membership)?,
            accept: positive("tol", self.tol, d.accept)?,
            merge: positive("merge-tol", self.merge_tol, d.merge)?,
        })
    }

    fn windows(&self, m: &HypersurfaceModel) -> Result<(Interval, Interval)> {
        let (mut re, mut im) = focal::default_windows(m);
        if let Some(w) = &self.re_window {
            re = Interval::left_open(w[0], w[1]);
        }
        if let Some(w) = &self.im_window {
            im = Interval::closed(w[0], w[1]);
        }
        for (name, w) in [("re-window", re), ("im-window", im)] {
            if w.is_empty() || w.lo.is_nan() || w.hi.is_nan() {
                bail!("--{name} ({}, {}) is empty", w.lo, w.hi);
            }
        }
        Ok((re, im))
    }

    fn format(&self, allowed: &[Format], default: Format) -> Result<Format> {
        let f = self.format.unwrap_or(default);
        if !allowed.contains(&f) {
            bail!("--format {:?} is not available for this subcommand", f);
        }
        Ok(f)
    }
}

pub fn run(cli: &Cli) -> Result<Run> {
    let o = &cli.opts;
    match &cli.command {
        Command::Tables => tables(o),
        Command::Validate { model, dim } => validate(o, &io::read_model(model)?, *dim),
        Command::Focal { model, real } => focal_cmd(o, &io::read_model(model)?, *real),
        Command::Verify { model } => verify(o, &io::read_model(model)?),
        Command::CheckC { model, space, direction } => {
            let proj = match (space, direction) {
                (Some(s), Some(d)) => Some(projection(s, d)?),
                _ => None,
            };
            check_c(o, &io::read_model(model)?, proj.as_ref())
        }
        Command::CheckD { model } => check_d(o, &io::read_model(model)?),
        Command::Fixtures(FixturesCommand::List) => fixtures_list(o),
        Command::Fixtures(FixturesCommand::Build { name, params }) => fixtures_build(o, name, params),
        Command::LiftedTrace(a) => lifted(o, a),
    }
}

fn tables(o: &Options) -> Result<Run> {
    let rows = census::computed();
    let diffs = census::diff(&rows, &census::reference()?);
    let report = match o.format(&[Format::Md, Format::Text, Format::Csv, Format::Json], Format::Md)? {
        Format::Md | Format::Text => census::to_markdown(&rows, &diffs),
        Format::Csv => census::to_csv(&rows)?,
        Format::Json => io::to_json(&census::CensusJson { rows: &rows, diffs: &diffs }),
    };
    let mut diagnostics = String::new();
    for d in &diffs {
        let show = |v: Option<usize>| v.map_or("missing".to_string(), |v| v.to_string());
        let _ = writeln!(
            diagnostics,
            "census diff{}: {} {}: computed {} stored {}",
            if d.flagged { " (flagged row)" } else { "" },
            d.quotient,
            d.column,
            show(d.computed),
            show(d.stored)
        );
    }
    let unexpected = diffs.iter().any(|d| !d.flagged);
    Ok(Run { report, diagnostics, code: if unexpected { 1 } else { 0 } })
}

fn validate(o: &Options, m: &HypersurfaceModel, dim: Option<u32>) -> Result<Run> {
    let rep = model::validate_with_dim(m, dim);
    let mut diagnostics = String::new();
    for v in &rep.violations {
        let _ = writeln!(diagnostics, "error: {v}");
    }
    let mut notes = Vec::new();
    for n in &rep.notices {
        notes.push(match n {
            model::Notice::Merged { lambda, mu, count } => {
                format!("merged {count} blocks with lambda = {}, mu = {}", g12(*lambda), g12(*mu))
            }
            model::Notice::NearDuplicate { first, second, distance } => {
                format!("merged blocks {first} and {second} differ by only {}", g12(*distance))
            }
        });
    }
    let proper = model::is_proper(m, model::PROPER_TOL).ok();
    let report = match o.format(&[Format::Text, Format::Json], Format::Text)? {
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Out {
                valid: bool,
                violations: Vec<String>,
                notices: Vec<String>,
                proper: Option<bool>,
                merged: io::ModelFile,
            }
            io::to_json(&Out {
                valid: rep.is_valid(),
                violations: rep.violations.iter().map(ToString::to_string).collect(),
                notices: notes.clone(),
                proper: proper.as_ref().map(|p| p.proper),
                merged: io::ModelFile::from(&rep.merged),
            })
        }
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "model: {} ({}), {} blocks, dim {}", m.name, m.ambient, m.blocks.len(), m.dim());
            for n in &notes {
                let _ = writeln!(s, "note: {n}");
            }
            if let Some(p) = &proper {
                let _ = writeln!(s, "proper: {}", if p.proper { "yes" } else { "no" });
                for (i, b) in &p.witnesses {
                    let _ = writeln!(s, "  block {i}: lambda = {} = ±sqrt(-mu)", g12(b.lambda));
                }
            }
            let _ = writeln!(s, "{}", if rep.is_valid() { "valid" } else { "invalid" });
            s
        }
    };
    Ok(Run { report, diagnostics, code: if rep.is_valid() { 0 } else { 2 } })
}

/// Real radii for compact-like ambients (or on request), complex otherwise.
fn solve(o: &Options, m: &HypersurfaceModel, real: bool) -> Result<(FocalSet, Interval, Option<Interval>)> {
    let tol = o.tolerances()?;
    let (re, im) = o.windows(m)?;
    let real = real || m.ambient.is_compact_like();
    let res = if real {
        focal::focal_radii_real(m, re, tol.merge)
    } else {
        focal::focal_radii_complex(m, re, im, tol.merge)
    };
    let set = match res {
        Ok(s) => s,
        Err(Error::EmptyWindow) => FocalSet {
            radii: Vec::new(),
            radius_free: focal::radius_free(m),
        },
        Err(e) => return Err(anyhow!(e)),
    };
    Ok((set, re, (!real).then_some(im)))
}

fn window_text(re: &Interval, im: Option<&Interval>) -> String {
    let mut s = format!("Re ({}, {}]", g12(re.lo), g12(re.hi));
    if let Some(im) = im {
        let _ = write!(s, ", Im [{}, {}]", g12(im.lo), g12(im.hi));
    } else {
        s.push_str(", real axis");
    }
    s
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn focal_cmd(o: &Options, m: &HypersurfaceModel, real: bool) -> Result<Run> {
    let (set, re, im) = solve(o, m, real)?;
    let out = io::radii_out(&set);
    let report = match o.format(&[Format::Text, Format::Json, Format::Csv], Format::Text)? {
        Format::Json => io::to_json(&out),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["re", "im", "mult", "blocks"])?;
            for r in &out {
                w.write_record([r.re.to_string(), r.im.to_string(), r.mult.to_string(), join(&r.blocks)])?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "model: {} ({})", m.name, m.ambient);
            let _ = writeln!(s, "window: {}", window_text(&re, im.as_ref()));
            let _ = writeln!(s, "{:<36} {:>5}  blocks", "radius", "mult");
            for r in &set.radii {
                let _ = writeln!(s, "{:<36} {:>5}  {}", c12(r.value), r.multiplicity, join(&r.focal_blocks));
            }
            if !set.radius_free.is_empty() {
                let _ = writeln!(s, "radius-free blocks: {}", join(&set.radius_free));
            }
            s
        }
    };
    Ok(Run::ok(report))
}

fn verify(o: &Options, m: &HypersurfaceModel) -> Result<Run> {
    let tol = o.tolerances()?;
    let (set, re, im) = solve(o, m, false)?;
    let mut reports = Vec::new();
    for r in &set.radii {
        let rep = cartan::cartan_sum(m, r.value, &tol).with_context(|| format!("radius {}", c12(r.value)))?;
        reports.push(rep);
    }
    let passed = !reports.is_empty() && reports.iter().all(|r| r.passed);
    let out = VerifyOut {
        model: m.name.clone(),
        ambient: m.ambient.to_string(),
        radius_free: set.radius_free.clone(),
        reports: reports.iter().map(IdentityOut::from).collect(),
        passed,
    };
    let report = match o.format(&[Format::Text, Format::Json], Format::Text)? {
        Format::Json => io::to_json(&out),
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "model: {} ({})", m.name, m.ambient);
            let _ = writeln!(s, "window: {}", window_text(&re, im.as_ref()));
            for rep in &reports {
                let _ = writeln!(s, "\nr0 = {}", c12(rep.radius));
                let _ = writeln!(s, "  {:>20} {:>10} {:>4} {:>5} {:>36}", "lambda", "mu", "m", "in_S", "term");
                for t in &rep.terms {
                    let _ = writeln!(
                        s,
                        "  {:>20} {:>10} {:>4} {:>5} {:>36}",
                        g12(t.lambda),
                        g12(t.mu),
                        t.mult,
                        if t.in_s { "yes" } else { "no" },
                        c12(t.weight * t.mult as f64)
                    );
                }
                let _ = writeln!(s, "  |total| = {}  {}", g12(rep.total.norm()), if rep.passed { "PASS" } else { "FAIL" });
            }
            let _ = writeln!(s, "\n{} radii, {}", reports.len(), if passed { "all pass" } else { "FAILED" });
            s
        }
    };
    let mut run = Run::verdict(report, passed);
    if reports.is_empty() {
        run.diagnostics = "no focal radius in the window\n".into();
    }
    Ok(run)
}

fn projection(space: &str, direction: &str) -> Result<RootProjection> {
    let entry = rootsys::lookup(space).ok_or_else(|| anyhow!("unknown symmetric space `{space}`"))?;
    let v: Vec<Rational> = direction
        .split(',')
        .map(|c| c.trim().parse::<Rational>().map_err(|e| anyhow!("direction component `{c}`: {e}")))
        .collect::<Result<_>>()?;
    rootsys::project_roots(&entry.roots, &v).with_context(|| format!("projecting {space} on ({direction})"))
}

fn part(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn opt(x: Option<f64>) -> String {
    x.map_or("-".to_string(), g12)
}

fn check_c(o: &Options, m: &HypersurfaceModel, proj: Option<&RootProjection>) -> Result<Run> {
    let rep = cartan::check_theorem_c(m, proj, &o.tolerances()?);
    let out = TheoremCOut::new(&m.name, &rep);
    let report = match o.format(&[Format::Text, Format::Json], Format::Text)? {
        Format::Json => io::to_json(&out),
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "model: {} ({})", m.name, m.ambient);
            for c in &rep.mu_classes {
                let ls: Vec<String> = c.lambdas.iter().map(|l| g12(*l)).collect();
                let _ = writeln!(s, "  mu = {}: lambda in {{{}}}", g12(c.mu), ls.join(", "));
            }
            let _ = writeln!(s, "(a) at most two curvatures per mu: {}", part(rep.part_a));
            let _ = writeln!(s, "    s0 = {} (spread {})", opt(rep.s0), g12(rep.s0_spread));
            let _ = writeln!(s, "(b) tube spectrum at s0: {}", part(rep.part_b));
            if !rep.offending.is_empty() {
                let _ = writeln!(s, "    offending blocks: {}", join(&rep.offending));
            }
            match (rep.bound, rep.part_c) {
                (Some(b), Some(c)) => {
                    let _ = writeln!(s, "(c) {} distinct curvatures <= bound {}: {}", rep.distinct_lambdas, b, part(c));
                }
                _ => {
                    let _ = writeln!(s, "(c) not checked: no root projection given");
                }
            }
            for n in &rep.notes {
                let _ = writeln!(s, "note: {n}");
            }
            let _ = writeln!(s, "{}", if rep.passed { "PASS" } else { "FAIL" });
            s
        }
    };
    Ok(Run::verdict(report, rep.passed))
}

fn check_d(o: &Options, m: &HypersurfaceModel) -> Result<Run> {
    let rep = cartan::check_theorem_d(m, &o.tolerances()?);
    let out = TheoremDOut::new(&m.name, &rep);
    let report = match o.format(&[Format::Text, Format::Json], Format::Text)? {
        Format::Json => io::to_json(&out),
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "model: {} ({})", m.name, m.ambient);
            let radii: Vec<String> = rep.real_radii.iter().map(|r| g12(*r)).collect();
            let _ = writeln!(s, "(a) positive real focal radii {{{}}}: {}", radii.join(", "), part(rep.part_a));
            let _ = writeln!(s, "(b) max |kappa| at s0 = {}: {} ({})", opt(rep.s0), g12(rep.max_kappa), part(rep.part_b));
            let _ = writeln!(s, "(c) flow start error {}", g12(rep.flow_start_error));
            let _ = writeln!(s, "    horizontal curvature near s0 {}", g12(rep.flow_horizontal_limit));
            let _ = writeln!(s, "    flow vs -J'/J at s0/2 {}", g12(rep.flow_vs_jacobi));
            let _ = writeln!(s, "    focal radius after flowing to s0/2: {} ({})", opt(rep.half_flow_radius), part(rep.part_c));
            for n in &rep.notes {
                let _ = writeln!(s, "note: {n}");
            }
            let _ = writeln!(s, "{}", if rep.passed { "PASS" } else { "FAIL" });
            s
        }
    };
    Ok(Run::verdict(report, rep.passed))
}

fn fixtures_list(o: &Options) -> Result<Run> {
    let report = match o.format(&[Format::Text, Format::Json], Format::Text)? {
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Entry {
                name: &'static str,
                summary: &'static str,
                params: &'static [&'static str],
            }
            let v: Vec<Entry> = CATALOG.iter().map(|e| Entry { name: e.name, summary: e.summary, params: e.params }).collect();
            io::to_json(&v)
        }
        _ => {
            let mut s = String::new();
            for e in CATALOG {
                let _ = writeln!(s, "{:<20} [{}]  {}", e.name, e.params.join(" "), e.summary);
            }
            s
        }
    };
    Ok(Run::ok(report))
}

fn fixtures_build(o: &Options, name: &str, params: &[(String, f64)]) -> Result<Run> {
    o.format(&[Format::Json], Format::Json)?;
    let pairs: Vec<(&str, f64)> = params.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    let spec = fixtures::from_name(name, &pairs)?;
    let m = spec.build()?;
    let mut run = Run::ok(io::model_to_json(&m));
    if !spec.oracle_verified() {
        run.diagnostics = format!("warning: {name} has no independent oracle for its multiplicity split\n");
    }
    Ok(run)
}

fn lifted(o: &Options, a: &LiftedArgs) -> Result<Run> {
    let (sum, order) = match a.ordered {
        Some(n) => (cartan::lifted_trace_ordered(a.r1, a.r2, a.m1, a.m2, a.i0, n)?, format!("interleaved, {n} terms")),
        None => (cartan::lifted_trace(a.r1, a.r2, a.m1, a.m2, a.i0, a.k)?, format!("symmetric, K = {}", a.k)),
    };
    let report = match o.format(&[Format::Text, Format::Json], Format::Text)? {
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Out<'a> {
                r1: f64,
                r2: f64,
                m1: u32,
                m2: u32,
                i0: i64,
                truncation: &'a str,
                sum: f64,
            }
            io::to_json(&Out { r1: a.r1, r2: a.r2, m1: a.m1, m2: a.m2, i0: a.i0, truncation: &order, sum })
        }
        _ => format!("lifted trace ({order}): {}\n", g12(sum)),
    };
    Ok(Run::ok(report))
}
