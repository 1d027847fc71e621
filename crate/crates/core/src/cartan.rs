//! Cartan-type sums, the focal eigenvalue map `κ`, and the structural checkers.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::cmath::{self, Cx};
use crate::focal::{self, Interval};
use crate::model::{self, AmbientKind, CurvatureBlock, HypersurfaceModel};
use crate::rootsys::RootProjection;
use crate::{Error, Result};

/// The three tolerance knobs. Membership and acceptance differ on purpose:
/// the summand is singular across the membership boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// `|lambda - T(mu)| <= membership` puts a block in the focal space.
    pub membership: f64,
    /// `|total| < accept` passes an identity.
    pub accept: f64,
    /// Radii closer than this are one radius.
    pub merge: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { membership: 1e-7, accept: 1e-9, merge: focal::MERGE_TOL }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub block: usize,
    pub lambda: f64,
    pub mu: f64,
    pub mult: u32,
    /// `T(mu)` at the tested radius (`lambda0` for the space-form sum).
    pub kernel: Cx,
    /// `(mu + lambda·T)/(lambda - T)`; zero when the block is not in `S`.
    pub weight: Cx,
    pub in_s: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub radius: Cx,
    pub terms: Vec<Term>,
    /// `Σ weight·mult` over the terms in `S`.
    pub total: Cx,
    pub passed: bool,
    pub accept_tol: f64,
}

impl IdentityReport {
    fn from_terms(radius: Cx, terms: Vec<Term>, accept_tol: f64) -> Self {
        let total = sum_terms(&terms);
        Self { radius, passed: total.norm() < accept_tol, terms, total, accept_tol }
    }

    /// Recomputes the total from the listed terms.
    pub fn recomputed_total(&self) -> Cx {
        sum_terms(&self.terms)
    }
}

fn sum_terms(terms: &[Term]) -> Cx {
    terms.iter().filter(|t| t.in_s).fold(Cx::new(0.0, 0.0), |acc, t| acc + t.weight * t.mult as f64)
}

fn weight(lambda: f64, mu: f64, t: Cx) -> Cx {
    (t * lambda + mu) / (cmath::re(lambda) - t)
}

/// `Σ_{lambda != lambda0} (c + lambda·lambda0)/(lambda - lambda0)·m_lambda` in a space form.
pub fn cartan_sum_spaceform(model: &HypersurfaceModel, lambda0: f64, tol: &Tolerances) -> Result<IdentityReport> {
    let AmbientKind::SpaceForm(c) = model.ambient else {
        return Err(Error::WrongAmbient { expected: "space form" });
    };
    if !model.blocks.iter().any(|b| (b.lambda - lambda0).abs() <= tol.membership) {
        return Err(Error::UnknownEigenvalue(lambda0));
    }
    let t = cmath::re(lambda0);
    let terms = model
        .blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let in_s = (b.lambda - lambda0).abs() > tol.membership;
            let w = if in_s { weight(b.lambda, c, t) } else { Cx::new(0.0, 0.0) };
            Term { block: i, lambda: b.lambda, mu: b.mu, mult: b.mult, kernel: t, weight: w, in_s }
        })
        .collect();
    Ok(IdentityReport::from_terms(cmath::re(0.0), terms, tol.accept))
}

/// `Σ_{(lambda,mu) ∈ S} (mu + lambda·T(mu))/(lambda - T(mu))·m` at the radius `r0`.
///
/// `T` is `τ_{r0}` for `mu > 0` and `τ̂_{r0}` otherwise. The report keeps the
/// sum without the unit factor `r0/|r0|`, which does not affect vanishing.
pub fn cartan_sum(model: &HypersurfaceModel, r0: Cx, tol: &Tolerances) -> Result<IdentityReport> {
    let mut terms = Vec::with_capacity(model.blocks.len());
    for (i, b) in model.blocks.iter().enumerate() {
        let t = focal::kernel(r0, b.mu).map_err(|e| match e {
            Error::Pole { .. } => Error::Pole { block: Some(i) },
            e => e,
        })?;
        let in_s = (cmath::re(b.lambda) - t).norm() > tol.membership;
        let w = if in_s { weight(b.lambda, b.mu, t) } else { Cx::new(0.0, 0.0) };
        terms.push(Term { block: i, lambda: b.lambda, mu: b.mu, mult: b.mult, kernel: t, weight: w, in_s });
    }
    Ok(IdentityReport::from_terms(r0, terms, tol.accept))
}

/// `-(mu + lambda·T)/(lambda - T)`: the focal shape eigenvalue before the unit factor.
pub fn c_value(lambda: f64, mu: f64, r0: Cx, tol: f64) -> Result<Cx> {
    let t = focal::kernel(r0, mu)?;
    if (cmath::re(lambda) - t).norm() <= tol {
        return Err(Error::FocalBlock { lambda, mu });
    }
    Ok(-weight(lambda, mu, t))
}

/// Eigenvalue of the focal submanifold's shape operator on the image of the block.
///
/// Compact-like ambients: `c_value`. Otherwise `c_value` times `r0/|r0|`.
pub fn kappa(lambda: f64, mu: f64, r0: Cx, ambient: &AmbientKind, tol: f64) -> Result<Cx> {
    let c = c_value(lambda, mu, r0, tol)?;
    Ok(if ambient.is_compact_like() { c } else { c * cmath::unit(r0) })
}

/// The Cartan sum rebuilt from `κ`: `-Σ κ·m` (compact) or `-conj(u)·Σ κ·m`
/// with `u = r0/|r0|`, summed over `S`.
pub fn total_via_kappa(model: &HypersurfaceModel, r0: Cx, tol: &Tolerances) -> Result<Cx> {
    let mut s = Cx::new(0.0, 0.0);
    for b in &model.blocks {
        match kappa(b.lambda, b.mu, r0, &model.ambient, tol.membership) {
            Ok(k) => s += k * b.mult as f64,
            Err(Error::FocalBlock { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(if model.ambient.is_compact_like() { -s } else { -cmath::unit(r0).conj() * s })
}

/// Real part of `c_value` from its closed form in terms of `Re r`, `Re r0`, `Im r0`.
///
/// `r` is any focal radius of the block `(lambda, mu)`; only its real part
/// enters. With `β = √(-mu)`, `T = tanh(β(Re r - Re r0))`, `y = β Im r0`:
/// `βT/(T²cos²y + sin²y)` when `|lambda| > β`, `βT/(cos²y + T²sin²y)` when `|lambda| < β`.
pub fn re_c_closed_form(lambda: f64, mu: f64, r: Cx, r0: Cx) -> Result<f64> {
    if mu >= 0.0 {
        return Err(Error::CaseUndefined);
    }
    let b = (-mu).sqrt();
    let t = (b * (r.re - r0.re)).tanh();
    let (s, c) = (b * r0.im).sin_cos();
    let (s2, c2, t2) = (s * s, c * c, t * t);
    if lambda.abs() > b {
        Ok(b * t / (t2 * c2 + s2))
    } else if lambda.abs() < b {
        Ok(b * t / (c2 + t2 * s2))
    } else {
        Err(Error::CaseUndefined)
    }
}

fn cluster(values: &mut Vec<f64>, tol: f64) {
    values.sort_by(f64::total_cmp);
    values.dedup_by(|a, b| (*a - *b).abs() <= tol);
}

#[derive(Debug, Clone, PartialEq)]
pub struct MuClass {
    pub mu: f64,
    pub lambdas: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremCReport {
    pub notes: Vec<String>,
    pub mu_classes: Vec<MuClass>,
    /// At most two principal curvatures per `mu`.
    pub part_a: bool,
    /// Common real part of the complex focal radii.
    pub s0: Option<f64>,
    pub s0_spread: f64,
    /// Spectra inside `{1/s0, 0}` and `{β coth(βs0), β tanh(βs0)}`.
    pub part_b: bool,
    pub offending: Vec<usize>,
    pub distinct_lambdas: usize,
    pub bound: Option<usize>,
    pub part_c: Option<bool>,
    pub passed: bool,
}

fn noncompact_like(a: &AmbientKind) -> bool {
    match a {
        AmbientKind::Noncompact => true,
        AmbientKind::SpaceForm(c) => *c < 0.0,
        AmbientKind::Compact => false,
    }
}

/// The two-curvature and tube-spectrum statements for a proper non-compact model,
/// with the counting bound when the root projection is supplied.
pub fn check_theorem_c(model: &HypersurfaceModel, proj: Option<&RootProjection>, tol: &Tolerances) -> TheoremCReport {
    let mut notes = Vec::new();
    let mut mus: Vec<f64> = model.blocks.iter().map(|b| b.mu).collect();
    cluster(&mut mus, tol.accept);
    let mu_classes: Vec<MuClass> = mus
        .iter()
        .map(|&mu| {
            let mut lambdas: Vec<f64> =
                model.blocks.iter().filter(|b| (b.mu - mu).abs() <= tol.accept).map(|b| b.lambda).collect();
            cluster(&mut lambdas, tol.accept);
            MuClass { mu, lambdas }
        })
        .collect();
    let part_a = mu_classes.iter().all(|c| c.lambdas.len() <= 2);
    if !part_a {
        notes.push(String::from("some mu-class carries more than two principal curvatures"));
    }

    let applicable = noncompact_like(&model.ambient);
    if !applicable {
        notes.push(format!("ambient {} is not of non-compact type", model.ambient));
    }
    let proper = applicable && model::is_proper(model, model::PROPER_TOL).map(|r| r.proper).unwrap_or(false);
    if applicable && !proper {
        notes.push(String::from("model is not proper"));
    }

    let (s0, s0_spread) = if proper { extract_s0(model, tol) } else { (None, f64::INFINITY) };
    let mut offending = Vec::new();
    let part_b = match s0 {
        Some(s0) if s0 > 0.0 && s0_spread <= tol.accept => {
            for (i, b) in model.blocks.iter().enumerate() {
                let ok = if b.mu == 0.0 {
                    (b.lambda - 1.0 / s0).abs() <= tol.accept || b.lambda.abs() <= tol.accept
                } else {
                    let w = (-b.mu).sqrt();
                    let v = w / (w * s0).tanh();
                    let h = w * (w * s0).tanh();
                    (b.lambda - v).abs() <= tol.accept || (b.lambda - h).abs() <= tol.accept
                };
                if !ok {
                    offending.push(i);
                }
            }
            offending.is_empty()
        }
        Some(_) => {
            notes.push(format!("focal radii do not share one positive real part (spread {s0_spread:e})"));
            false
        }
        None => {
            notes.push(String::from("no complex focal radius to extract s0 from"));
            false
        }
    };

    let distinct_lambdas = model.distinct_lambdas(tol.accept).len();
    let bound = proj.map(RootProjection::principal_curvature_bound);
    let part_c = bound.map(|b| distinct_lambdas <= b);
    let passed = applicable && proper && part_a && part_b && part_c != Some(false);
    TheoremCReport { notes, mu_classes, part_a, s0, s0_spread, part_b, offending, distinct_lambdas, bound, part_c, passed }
}

/// Median real part of the complex focal radii, one imaginary period deep.
fn extract_s0(model: &HypersurfaceModel, tol: &Tolerances) -> (Option<f64>, f64) {
    let beta_min = model.blocks.iter().filter(|b| b.mu < 0.0).map(|b| (-b.mu).sqrt()).fold(f64::INFINITY, f64::min);
    let im_hi = if beta_min.is_finite() { PI / beta_min } else { 1.0 };
    let re = Interval::closed(f64::NEG_INFINITY, f64::INFINITY);
    let Ok(set) = focal::focal_radii_complex(model, re, Interval::closed(0.0, im_hi), tol.merge) else {
        return (None, f64::INFINITY);
    };
    let mut xs: Vec<f64> = set.radii.iter().map(|r| r.value.re).collect();
    xs.sort_by(f64::total_cmp);
    let spread = xs[xs.len() - 1] - xs[0];
    (Some(xs[xs.len() / 2]), spread)
}

/// Block role in a tube over a totally geodesic focal submanifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TubeRole {
    /// Focal at `s0`: `β coth(βs0)` or `1/s0`.
    Vertical,
    /// Not focal at `s0`: `β tanh(βs0)` or `0`.
    Horizontal,
}

/// Classifies every block against the tube spectrum at `s0`.
pub fn tube_roles(model: &HypersurfaceModel, s0: f64, tol: f64) -> Result<Vec<TubeRole>> {
    model
        .blocks
        .iter()
        .map(|b| {
            let (v, h) = tube_values(b.mu, s0);
            if (b.lambda - v).abs() <= tol * v.abs().max(1.0) {
                Ok(TubeRole::Vertical)
            } else if (b.lambda - h).abs() <= tol * h.abs().max(1.0) {
                Ok(TubeRole::Horizontal)
            } else {
                Err(Error::Domain("block does not fit the tube spectrum"))
            }
        })
        .collect()
}

/// `(vertical, horizontal)` principal curvatures at distance `d` from the focal set.
fn tube_values(mu: f64, d: f64) -> (f64, f64) {
    if mu == 0.0 {
        (1.0 / d, 0.0)
    } else {
        let w = (-mu).sqrt();
        (w / (w * d).tanh(), w * (w * d).tanh())
    }
}

/// The parallel hypersurface at signed distance `s` toward the focal set.
pub fn tube_flow(model: &HypersurfaceModel, s0: f64, s: f64, tol: f64) -> Result<HypersurfaceModel> {
    if s.partial_cmp(&s0) != Some(core::cmp::Ordering::Less) {
        return Err(Error::Domain("flow parameter must stay below s0"));
    }
    let roles = tube_roles(model, s0, tol)?;
    let blocks = model
        .blocks
        .iter()
        .zip(&roles)
        .map(|(b, role)| {
            let (v, h) = tube_values(b.mu, s0 - s);
            let lambda = if *role == TubeRole::Vertical { v } else { h };
            CurvatureBlock::new(lambda, b.mu, b.mult)
        })
        .collect();
    Ok(HypersurfaceModel::new(format!("{}@s={s}", model.name), model.ambient, blocks))
}

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremDReport {
    pub notes: Vec<String>,
    pub real_radii: Vec<f64>,
    /// Exactly one positive real focal radius.
    pub part_a: bool,
    pub s0: Option<f64>,
    /// `(block, κ(lambda, mu, s0))` over blocks outside the focal space.
    pub kappas: Vec<(usize, Cx)>,
    pub max_kappa: f64,
    pub part_b: bool,
    /// Largest deviation of the flow at `s = 0` from the model.
    pub flow_start_error: f64,
    /// Largest `|lambda|` of a horizontal block at `s = s0(1 - 1e-6)`.
    pub flow_horizontal_limit: f64,
    /// Largest deviation of the flow from `-J'/J` at `s = s0/2`.
    pub flow_vs_jacobi: f64,
    /// Unique positive real focal radius of the flow model at `s0/2`.
    pub half_flow_radius: Option<f64>,
    pub part_c: bool,
    pub passed: bool,
}

fn unique_positive_real_radius(model: &HypersurfaceModel, tol: &Tolerances) -> Vec<f64> {
    let re = Interval::left_open(0.0, f64::INFINITY);
    let im = Interval::closed(0.0, 0.0);
    focal::focal_radii_complex(model, re, im, tol.merge)
        .map(|s| s.radii.iter().map(|r| r.value.re).collect())
        .unwrap_or_default()
}

/// Tube structure: one real focal radius, a totally geodesic focal set, and the eigenvalue flow.
pub fn check_theorem_d(model: &HypersurfaceModel, tol: &Tolerances) -> TheoremDReport {
    let mut notes = Vec::new();
    let real_radii = unique_positive_real_radius(model, tol);
    let part_a = real_radii.len() == 1;
    if !part_a {
        notes.push(format!("{} positive real focal radii, expected exactly one", real_radii.len()));
    }
    let mut r = TheoremDReport {
        notes: Vec::new(),
        real_radii: real_radii.clone(),
        part_a,
        s0: None,
        kappas: Vec::new(),
        max_kappa: f64::INFINITY,
        part_b: false,
        flow_start_error: f64::INFINITY,
        flow_horizontal_limit: f64::INFINITY,
        flow_vs_jacobi: f64::INFINITY,
        half_flow_radius: None,
        part_c: false,
        passed: false,
    };
    let Some(&s0) = real_radii.first() else {
        r.notes = notes;
        return r;
    };
    r.s0 = Some(s0);
    let r0 = cmath::re(s0);

    let mut kappa_err = None;
    for (i, b) in model.blocks.iter().enumerate() {
        match kappa(b.lambda, b.mu, r0, &model.ambient, tol.membership) {
            Ok(k) => r.kappas.push((i, k)),
            Err(Error::FocalBlock { .. }) => {}
            Err(e) => kappa_err = Some(e),
        }
    }
    r.max_kappa = r.kappas.iter().map(|(_, k)| k.norm()).fold(0.0, f64::max);
    r.part_b = kappa_err.is_none() && r.max_kappa < tol.accept;
    if let Some(e) = kappa_err {
        notes.push(format!("kappa evaluation failed: {e}"));
    }

    match flow_checks(model, s0, tol) {
        Ok((start, limit, jac, half)) => {
            r.flow_start_error = start;
            r.flow_horizontal_limit = limit;
            r.flow_vs_jacobi = jac;
            r.half_flow_radius = half;
            let half_ok = half.is_some_and(|h| (h - s0 / 2.0).abs() <= tol.accept);
            r.part_c = start <= tol.accept && limit <= 1e-5 && jac <= tol.accept && half_ok;
        }
        Err(e) => notes.push(format!("tube flow unavailable: {e}")),
    }
    r.passed = r.part_a && r.part_b && r.part_c;
    r.notes = notes;
    r
}

fn flow_checks(model: &HypersurfaceModel, s0: f64, tol: &Tolerances) -> Result<(f64, f64, f64, Option<f64>)> {
    let start = tube_flow(model, s0, 0.0, tol.accept)?;
    let start_err =
        model.blocks.iter().zip(&start.blocks).map(|(a, b)| (a.lambda - b.lambda).abs()).fold(0.0, f64::max);

    let roles = tube_roles(model, s0, tol.accept)?;
    let near = tube_flow(model, s0, s0 * (1.0 - 1e-6), tol.accept)?;
    let limit = near
        .blocks
        .iter()
        .zip(&roles)
        .filter(|(_, r)| **r == TubeRole::Horizontal)
        .map(|(b, _)| b.lambda.abs())
        .fold(0.0, f64::max);

    let half = tube_flow(model, s0, s0 / 2.0, tol.accept)?;
    let sh = cmath::re(s0 / 2.0);
    let jac = model
        .blocks
        .iter()
        .zip(&half.blocks)
        .map(|(b, h)| {
            let j = focal::jacobi_coeff(sh, b.lambda, b.mu);
            let dj = focal::jacobi_coeff_derivative(sh, b.lambda, b.mu);
            let from_jacobi = -(dj / j).re;
            (from_jacobi - h.lambda).abs() / h.lambda.abs().max(1.0)
        })
        .fold(0.0, f64::max);

    let radii = unique_positive_real_radius(&half, tol);
    let half_radius = if radii.len() == 1 { Some(radii[0]) } else { None };
    Ok((start_err, limit, jac, half_radius))
}

fn lattice_check(r1: f64, r2: f64) -> Result<f64> {
    if r1 == r2 {
        return Err(Error::DegenerateLattice("r1 == r2"));
    }
    if !(r2 < 0.0 && 0.0 < r1) {
        return Err(Error::Domain("lifted trace needs r2 < 0 < r1"));
    }
    Ok(r1 - r2)
}

/// Multiplicity of the lattice point `k·r1 + (1-k)·r2`: `m1` at odd `k`, `m2` at even `k`.
fn lattice_mult(k: i64, m1: u32, m2: u32) -> f64 {
    if k.rem_euclid(2) == 1 {
        m1 as f64
    } else {
        m2 as f64
    }
}

/// Symmetric truncation `Σ_{0<|j|<=K} m(i0+j)/(r_{i0+j} - r_{i0})` on the focal lattice.
///
/// Since `r_{i0+j} - r_{i0} = j(r1 - r2)` and `±j` share parity, the pairs
/// cancel term by term.
pub fn lifted_trace(r1: f64, r2: f64, m1: u32, m2: u32, i0: i64, k: u64) -> Result<f64> {
    let d = lattice_check(r1, r2)?;
    let mut s = 0.0;
    for j in 1..=k as i64 {
        let m = lattice_mult(i0 + j, m1, m2);
        s += m / (j as f64 * d);
        s += m / (-(j as f64) * d);
    }
    Ok(s)
}

/// Lattice index of the `n`-th lifted principal curvature: 1, 0, 2, -1, 3, -2, ...
pub fn lifted_index(n: u64) -> i64 {
    if n.is_multiple_of(2) {
        (n / 2) as i64 + 1
    } else {
        -((n / 2) as i64)
    }
}

/// Partial sum over the first `n_terms` lifted principal curvatures in their
/// natural interleaved order, skipping `i0`. Decays like `1/n_terms`.
pub fn lifted_trace_ordered(r1: f64, r2: f64, m1: u32, m2: u32, i0: i64, n_terms: u64) -> Result<f64> {
    let d = lattice_check(r1, r2)?;
    let mut s = 0.0;
    for n in 0..n_terms {
        let k = lifted_index(n);
        if k != i0 {
            s += lattice_mult(k, m1, m2) / ((k - i0) as f64 * d);
        }
    }
    Ok(s)
}
