//! Focal kernels and focal-radius solvers.
//!
//! Each block `(lambda, mu)` contributes the Jacobi field coefficient
//! `J(s) = cos(√mu s) - lambda sin(√mu s)/√mu` (continued analytically to
//! `mu <= 0`). Its zeros are the focal radii of the block, and a block lies in
//! the focal space of `r0` iff `lambda` equals the kernel `τ_{r0}(mu)` or
//! `τ̂_{r0}(mu)`. The solvers below enumerate those zeros in closed form.

use alloc::vec::Vec;
use core::f64::consts::PI;


use crate::cmath::{self, Cx, POLE_TOL};
use crate::model::{CurvatureBlock, HypersurfaceModel};
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// Default merge tolerance for radii (absolute, on the complex distance).
pub const MERGE_TOL: f64 = 1e-9;

/// Hard cap on radii enumerated per block, to reject absurd windows.
const MAX_RADII_PER_BLOCK: f64 = 1e6;

/// `τ_r(s) = √s / tan(r√s)`, and `1/r` at `s = 0`.
pub fn tau(r: f64, s: f64) -> Result<f64> {
    if r == 0.0 {
        return Err(Error::Domain("tau needs r != 0"));
    }
    if s < 0.0 {
        return Err(Error::Domain("tau needs s >= 0"));
    }
    if s == 0.0 {
        return Ok(1.0 / r);
    }
    // (r√s)cot(r√s)/r keeps the s -> 0 limit free of cancellation
    cmath::x_cot_x(r * s.sqrt()).map(|v| v / r).ok_or(Error::Pole { block: None })
}

/// `τ̂_z(s) = √(-s) coth(z√(-s))`, and `1/z` at `s = 0`.
pub fn tau_hat(z: Cx, s: f64) -> Result<Cx> {
    if z == Cx::new(0.0, 0.0) {
        return Err(Error::Domain("tau_hat needs z != 0"));
    }
    if s > 0.0 {
        return Err(Error::Domain("tau_hat needs s <= 0"));
    }
    if s == 0.0 {
        return Ok(z.inv());
    }
    cmath::x_coth_x(z * (-s).sqrt()).map(|v| v / z).ok_or(Error::Pole { block: None })
}

/// The focal kernel for one eigenvalue `mu` at radius `r0`.
///
/// `mu > 0` uses `τ` and needs a real radius; `mu <= 0` uses `τ̂`. Both agree
/// with `1/r0` at `mu = 0`, so the choice depends on `mu` alone.
pub fn kernel(r0: Cx, mu: f64) -> Result<Cx> {
    if mu > 0.0 {
        if r0.im.abs() > POLE_TOL * r0.re.abs().max(1.0) {
            return Err(Error::Domain("positive mu needs a real radius"));
        }
        tau(r0.re, mu).map(cmath::re)
    } else {
        tau_hat(r0, mu)
    }
}

/// `J(s)` for the block `(lambda, mu)`; entire in `s`.
pub fn jacobi_coeff(s: Cx, lambda: f64, mu: f64) -> Cx {
    if mu > 0.0 {
        let b = mu.sqrt();
        let w = s * b;
        w.cos() - w.sin() * (lambda / b)
    } else if mu < 0.0 {
        cmath::hyperbolic_coeff(s, lambda, (-mu).sqrt())
    } else {
        Cx::new(1.0, 0.0) - s * lambda
    }
}

/// `J'(s)`.
pub fn jacobi_coeff_derivative(s: Cx, lambda: f64, mu: f64) -> Cx {
    if mu > 0.0 {
        let b = mu.sqrt();
        let w = s * b;
        -w.sin() * b - w.cos() * lambda
    } else if mu < 0.0 {
        let b = (-mu).sqrt();
        let w = s * b;
        w.sinh() * b - w.cosh() * lambda
    } else {
        cmath::re(-lambda)
    }
}

/// Closed interval `[lo, hi]`, optionally open at `lo`. Either end may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_open: bool,
}

impl Interval {
    pub fn closed(lo: f64, hi: f64) -> Self {
        Self { lo, hi, lo_open: false }
    }

    pub fn left_open(lo: f64, hi: f64) -> Self {
        Self { lo, hi, lo_open: true }
    }

    pub fn is_empty(&self) -> bool {
        self.lo.partial_cmp(&self.hi).is_none_or(|o| o.is_gt()) || (self.lo_open && self.lo == self.hi)
    }

    /// Membership with `tol` slack on closed ends and `tol` clearance on an open end.
    pub fn contains(&self, x: f64, tol: f64) -> bool {
        let above = if self.lo_open { x > self.lo + tol } else { x >= self.lo - tol };
        above && x <= self.hi + tol
    }

    pub fn widen(&self, d: f64) -> Self {
        Self { lo: self.lo - d, hi: self.hi + d, lo_open: self.lo_open }
    }

    /// Integers `k` with `base + k·step` in the interval (step > 0).
    fn lattice_range(&self, base: f64, step: f64, tol: f64) -> Result<(i64, i64)> {
        if !self.lo.is_finite() || !self.hi.is_finite() {
            return Err(Error::Domain("periodic radii need a bounded window"));
        }
        let k_lo = ((self.lo - tol - base) / step).floor();
        let k_hi = ((self.hi + tol - base) / step).ceil();
        if k_hi - k_lo > MAX_RADII_PER_BLOCK {
            return Err(Error::Domain("window spans too many periods"));
        }
        Ok((k_lo as i64, k_hi as i64))
    }
}

/// A focal radius with the blocks whose Jacobi coefficient vanishes there.
#[derive(Debug, Clone, PartialEq)]
pub struct FocalRadius {
    pub value: Cx,
    /// Indices into the model's block list, ascending.
    pub focal_blocks: Vec<usize>,
    /// `Σ mult` over `focal_blocks`.
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct FocalSet {
    /// Sorted by `(Re, Im)`.
    pub radii: Vec<FocalRadius>,
    /// Blocks with no focal radius at all: `lambda = mu = 0`, or `lambda = ±√(-mu)`.
    pub radius_free: Vec<usize>,
}

/// Where a block's zeros sit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BlockRadii {
    /// `J` never vanishes.
    None,
    /// Exactly one zero, on the real axis.
    Single(f64),
    /// `base + k·step` on the real axis.
    RealLattice { base: f64, step: f64 },
    /// `re + i(im_base + k·step)`.
    ImagLattice { re: f64, im_base: f64, step: f64 },
}

/// Closed-form description of all zeros of `J` for one block.
pub fn block_radii(b: &CurvatureBlock) -> BlockRadii {
    let (l, mu) = (b.lambda, b.mu);
    if mu > 0.0 {
        let w = mu.sqrt();
        BlockRadii::RealLattice { base: w.atan2(l) / w, step: PI / w }
    } else if mu == 0.0 {
        if l == 0.0 {
            BlockRadii::None
        } else {
            BlockRadii::Single(1.0 / l)
        }
    } else {
        let w = (-mu).sqrt();
        let step = PI / w;
        if l.abs() > w {
            BlockRadii::ImagLattice { re: (w / l).atanh() / w, im_base: 0.0, step }
        } else if l.abs() < w {
            BlockRadii::ImagLattice { re: (l / w).atanh() / w, im_base: step / 2.0, step }
        } else {
            BlockRadii::None
        }
    }
}

fn enumerate_block(
    b: &CurvatureBlock,
    re: &Interval,
    im: Option<&Interval>,
    tol: f64,
    out: &mut Vec<Cx>,
) -> Result<()> {
    let im_ok = |y: f64| im.is_none_or(|w| w.contains(y, tol));
    match block_radii(b) {
        BlockRadii::None => {}
        BlockRadii::Single(x) => {
            if re.contains(x, tol) && im_ok(0.0) {
                out.push(cmath::re(x));
            }
        }
        BlockRadii::RealLattice { base, step } => {
            if im_ok(0.0) {
                let (k0, k1) = re.lattice_range(base, step, tol)?;
                for k in k0..=k1 {
                    let x = base + k as f64 * step;
                    if re.contains(x, tol) {
                        out.push(cmath::re(x));
                    }
                }
            }
        }
        BlockRadii::ImagLattice { re: x, im_base, step } => match im {
            None => {
                // real solver: only the k = 0 point of the coth branch is real
                if im_base == 0.0 && re.contains(x, tol) {
                    out.push(cmath::re(x));
                }
            }
            Some(w) => {
                if re.contains(x, tol) {
                    let (k0, k1) = w.lattice_range(im_base, step, tol)?;
                    for k in k0..=k1 {
                        let y = im_base + k as f64 * step;
                        if w.contains(y, tol) {
                            out.push(Cx::new(x, y));
                        }
                    }
                }
            }
        },
    }
    Ok(())
}

fn lex(a: &Cx, b: &Cx) -> core::cmp::Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// Greedy clustering of per-block candidates, in `(Re, Im)` order.
fn merge(model: &HypersurfaceModel, cands: Vec<(Cx, usize)>, tol: f64) -> Vec<FocalRadius> {
    let mut cands = cands;
    cands.sort_by(|a, b| lex(&a.0, &b.0).then(a.1.cmp(&b.1)));
    let mut out: Vec<FocalRadius> = Vec::new();
    for (z, i) in cands {
        match out.iter_mut().find(|r| cmath::dist(r.value, z) <= tol) {
            Some(r) => {
                if !r.focal_blocks.contains(&i) {
                    r.focal_blocks.push(i);
                    r.multiplicity += model.blocks[i].mult;
                }
            }
            None => out.push(FocalRadius { value: z, focal_blocks: alloc::vec![i], multiplicity: model.blocks[i].mult }),
        }
    }
    for r in &mut out {
        r.focal_blocks.sort_unstable();
    }
    out.sort_by(|a, b| lex(&a.value, &b.value));
    out
}

/// Blocks whose Jacobi coefficient never vanishes.
pub fn radius_free(model: &HypersurfaceModel) -> Vec<usize> {
    model
        .blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| block_radii(b) == BlockRadii::None)
        .map(|(i, _)| i)
        .collect()
}

fn solve(model: &HypersurfaceModel, re: &Interval, im: Option<&Interval>, tol: f64) -> Result<FocalSet> {
    if re.is_empty() || im.is_some_and(Interval::is_empty) {
        return Err(Error::EmptyWindow);
    }
    let mut cands = Vec::new();
    for (i, b) in model.blocks.iter().enumerate() {
        let mut zs = Vec::new();
        enumerate_block(b, re, im, tol, &mut zs)?;
        cands.extend(zs.into_iter().map(|z| (z, i)));
    }
    let radii = merge(model, cands, tol);
    if radii.is_empty() {
        return Err(Error::EmptyWindow);
    }
    Ok(FocalSet { radii, radius_free: radius_free(model) })
}

/// Real focal radii in `window`.
///
/// `mu > 0` blocks give `atan2(√mu, lambda)/√mu + kπ/√mu`, `mu = 0` blocks
/// give `1/lambda`, and `mu < 0` blocks with `|lambda| > √(-mu)` give the
/// single real point `artanh(√(-mu)/lambda)/√(-mu)`.
pub fn focal_radii_real(model: &HypersurfaceModel, window: Interval, tol: f64) -> Result<FocalSet> {
    solve(model, &window, None, tol)
}

/// Complex focal radii with `Re ∈ re_window`, `Im ∈ im_window`.
///
/// `mu < 0` blocks give vertical lattices of step `πi/√(-mu)`: through the
/// real point when `|lambda| > √(-mu)`, shifted by half a step otherwise.
/// Non-proper blocks are listed in [`FocalSet::radius_free`].
pub fn focal_radii_complex(
    model: &HypersurfaceModel,
    re_window: Interval,
    im_window: Interval,
    tol: f64,
) -> Result<FocalSet> {
    solve(model, &re_window, Some(&im_window), tol)
}

/// Largest lattice period `π/√|mu|` over blocks with `mu != 0`, or `π` if there are none.
pub fn max_period(model: &HypersurfaceModel) -> f64 {
    model
        .blocks
        .iter()
        .filter(|b| b.mu != 0.0)
        .map(|b| PI / b.mu.abs().sqrt())
        .fold(None, |acc: Option<f64>, p| Some(acc.map_or(p, |a| a.max(p))))
        .unwrap_or(PI)
}

/// `Re ∈ (0, 4P]`, `|Im| <= 2P` with `P` the largest period.
pub fn default_windows(model: &HypersurfaceModel) -> (Interval, Interval) {
    let p = max_period(model);
    (Interval::left_open(0.0, 4.0 * p), Interval::closed(-2.0 * p, 2.0 * p))
}

/// `lambda = T_{r0}(mu)` within `tol`: the block lies in the focal space of `r0`.
pub fn is_focal_block(b: &CurvatureBlock, r0: Cx, tol: f64) -> Result<bool> {
    match kernel(r0, b.mu) {
        Ok(t) => Ok((cmath::re(b.lambda) - t).norm() <= tol),
        // a pole of the kernel means J(r0) = cos/cosh-part only, never zero there
        Err(Error::Pole { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::AmbientKind;
    use alloc::vec;
    use core::f64::consts::FRAC_PI_4;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(2.0, 0.0).unwrap(), 0.5);
        assert!(close(tau(FRAC_PI_4, 1.0).unwrap(), 1.0, 1e-15));
        assert!(close(tau(2.0 * PI / 3.0, 1.0).unwrap(), -1.0 / 3f64.sqrt(), 1e-15));
        assert_eq!(tau(PI, 1.0), Err(Error::Pole { block: None }));
        assert!(tau(0.0, 1.0).is_err());
    }

    #[test]
    fn tau_hat_examples() {
        let coth1 = 1.0 / 1f64.tanh();
        assert!((tau_hat(cmath::re(1.0), -1.0).unwrap() - cmath::re(coth1)).norm() < 1e-15);
        let z = Cx::new(0.7, -0.2);
        assert!((tau_hat(z, 0.0).unwrap() - z.inv()).norm() < 1e-15);
        let z = Cx::new(1.0, PI / 2.0);
        assert!((tau_hat(z, -1.0).unwrap() - cmath::re(1f64.tanh())).norm() < 1e-15);
        assert!(tau_hat(Cx::new(0.0, PI), -1.0).is_err());
    }

    #[test]
    fn tau_hat_is_i_times_tau_continued() {
        // i√(-s)/tan(i z √(-s)) computed with num_complex directly
        for &(a, b, s) in &[(0.4, 0.3, -2.0), (1.1, -0.8, -0.3), (2.0, 0.0, -1.0)] {
            let z = Cx::new(a, b);
            let w = (-s).sqrt();
            let iw = Cx::new(0.0, w);
            let direct = iw / (Cx::new(0.0, 1.0) * z * w).tan();
            assert!((tau_hat(z, s).unwrap() - direct).norm() < 1e-13);
        }
    }

    #[test]
    fn jacobi_coeff_examples() {
        assert_eq!(jacobi_coeff(Cx::new(3.0, -2.0), 0.0, 0.0), cmath::re(1.0));
        let r = 0.9;
        assert!(jacobi_coeff(cmath::re(r), 1.0 / r.tan(), 1.0).norm() < 1e-15);
        let l = 1.0 / 1f64.tanh();
        assert!(jacobi_coeff(cmath::re(1.0), l, -1.0).norm() < 1e-15);
        assert!(jacobi_coeff(Cx::new(1.0, PI), l, -1.0).norm() < 1e-14);
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        let h = 1e-6;
        for &(l, mu) in &[(0.3, 2.0), (1.7, -3.0), (0.4, 0.0)] {
            let s = Cx::new(0.8, 0.25);
            let fd = (jacobi_coeff(s + h, l, mu) - jacobi_coeff(s - h, l, mu)) / (2.0 * h);
            assert!((fd - jacobi_coeff_derivative(s, l, mu)).norm() < 1e-8);
        }
    }

    fn cp2(t: f64) -> HypersurfaceModel {
        HypersurfaceModel::new(
            "cp2",
            AmbientKind::Compact,
            vec![CurvatureBlock::new(2.0 / (2.0 * t).tan(), 4.0, 1), CurvatureBlock::new(1.0 / t.tan(), 1.0, 2)],
        )
    }

    #[test]
    fn cp2_sphere_real_radii() {
        let set = focal_radii_real(&cp2(PI / 6.0), Interval::left_open(0.0, PI), MERGE_TOL).unwrap();
        let vals: Vec<f64> = set.radii.iter().map(|r| r.value.re).collect();
        assert_eq!(vals.len(), 2);
        assert!(close(vals[0], PI / 6.0, 1e-12) && close(vals[1], 2.0 * PI / 3.0, 1e-12));
        assert_eq!(set.radii[0].focal_blocks, vec![0, 1]);
        assert_eq!(set.radii[0].multiplicity, 3);
        assert_eq!(set.radii[1].focal_blocks, vec![0]);
        assert_eq!(set.radii[1].multiplicity, 1);
    }

    #[test]
    fn flat_and_sphere_radii() {
        let m = HypersurfaceModel::new("f", AmbientKind::SpaceForm(0.0), vec![CurvatureBlock::new(0.25, 0.0, 3)]);
        let set = focal_radii_real(&m, Interval::left_open(0.0, 10.0), MERGE_TOL).unwrap();
        assert_eq!(set.radii.len(), 1);
        assert!(close(set.radii[0].value.re, 4.0, 1e-15));
        assert_eq!(set.radii[0].multiplicity, 3);

        let s2 = HypersurfaceModel::new("s2", AmbientKind::SpaceForm(1.0), vec![CurvatureBlock::new(1.0, 1.0, 1)]);
        let set = focal_radii_real(&s2, Interval::closed(-2.0 * PI, 3.0 * PI), MERGE_TOL).unwrap();
        let vals: Vec<f64> = set.radii.iter().map(|r| r.value.re).collect();
        let want: Vec<f64> = (-2..=2).map(|k| FRAC_PI_4 + k as f64 * PI).collect();
        assert_eq!(vals.len(), want.len());
        assert!(vals.iter().zip(&want).all(|(a, b)| close(*a, *b, 1e-12)));
    }

    #[test]
    fn ch2_sphere_complex_radii() {
        let t = 1.0f64;
        let m = HypersurfaceModel::new(
            "ch2",
            AmbientKind::Noncompact,
            vec![CurvatureBlock::new(2.0 / (2.0 * t).tanh(), -4.0, 1), CurvatureBlock::new(1.0 / t.tanh(), -1.0, 2)],
        );
        let set = focal_radii_complex(&m, Interval::left_open(0.0, 3.0), Interval::closed(-PI, PI), MERGE_TOL).unwrap();
        let find = |z: Cx| set.radii.iter().find(|r| cmath::dist(r.value, z) < 1e-12).unwrap();
        assert_eq!(find(cmath::re(1.0)).multiplicity, 3);
        let half = find(Cx::new(1.0, PI / 2.0));
        assert_eq!((half.focal_blocks.clone(), half.multiplicity), (vec![0], 1));
        let full = find(Cx::new(1.0, PI));
        assert_eq!(full.multiplicity, 3);
        assert_eq!(set.radii.len(), 5);
    }

    #[test]
    fn tanh_branch_and_flat_block() {
        let m = HypersurfaceModel::new("h", AmbientKind::Noncompact, vec![CurvatureBlock::new(1f64.tanh(), -1.0, 2)]);
        let set = focal_radii_complex(&m, Interval::left_open(0.0, 3.0), Interval::closed(-4.0, 4.0), MERGE_TOL).unwrap();
        let ims: Vec<f64> = set.radii.iter().map(|r| r.value.im).collect();
        assert_eq!(ims.len(), 2);
        assert!(close(ims[0], -PI / 2.0, 1e-12) && close(ims[1], PI / 2.0, 1e-12));
        assert!(set.radii.iter().all(|r| close(r.value.re, 1.0, 1e-12)));

        let m = HypersurfaceModel::new("d0", AmbientKind::Noncompact, vec![CurvatureBlock::new(1.0 / 0.7, 0.0, 2)]);
        let set = focal_radii_complex(&m, Interval::left_open(0.0, 3.0), Interval::closed(-1.0, 1.0), MERGE_TOL).unwrap();
        assert_eq!(set.radii.len(), 1);
        assert!(close(set.radii[0].value.re, 0.7, 1e-15));
    }

    #[test]
    fn non_proper_blocks_are_radius_free() {
        let m = HypersurfaceModel::new(
            "np",
            AmbientKind::Noncompact,
            vec![CurvatureBlock::new(1.0, -1.0, 1), CurvatureBlock::new(0.0, 0.0, 1), CurvatureBlock::new(2.0, -1.0, 1)],
        );
        let set = focal_radii_complex(&m, Interval::left_open(0.0, 3.0), Interval::closed(-1.0, 1.0), MERGE_TOL).unwrap();
        assert_eq!(set.radius_free, vec![0, 1]);
        assert_eq!(set.radii.len(), 1);
        let only = HypersurfaceModel::new("np", AmbientKind::Noncompact, vec![CurvatureBlock::new(1.0, -1.0, 1)]);
        let r = focal_radii_complex(&only, Interval::left_open(0.0, 3.0), Interval::closed(-1.0, 1.0), MERGE_TOL);
        assert_eq!(r, Err(Error::EmptyWindow));
    }

    #[test]
    fn focal_membership_both_directions() {
        let m = cp2(0.5);
        let set = focal_radii_real(&m, Interval::left_open(0.0, 2.0 * PI), MERGE_TOL).unwrap();
        for r in &set.radii {
            for (i, b) in m.blocks.iter().enumerate() {
                let focal = is_focal_block(b, r.value, 1e-7).unwrap();
                assert_eq!(focal, r.focal_blocks.contains(&i));
            }
        }
    }

    #[test]
    fn unbounded_windows_rejected_for_lattices() {
        let m = cp2(0.5);
        assert!(focal_radii_real(&m, Interval::left_open(0.0, f64::INFINITY), MERGE_TOL).is_err());
    }
}
