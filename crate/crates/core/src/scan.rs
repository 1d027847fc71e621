//! Brute-force zero finders used as oracles against the closed-form solvers.
//!
//! The real scan brackets sign changes on a uniform grid and bisects. The
//! complex scan counts zeros in a rectangle through the winding number of
//! `f` along its boundary and subdivides until each zero sits alone in a
//! small cell. Neither is ever on the production path.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_traits::Float;

use crate::cmath::Cx;
use crate::focal::{self, Interval};
use crate::model::{AmbientKind, CurvatureBlock, HypersurfaceModel};

/// Samples per rectangle edge before adaptive refinement.
pub const EDGE_SAMPLES: usize = 256;

/// Phase step above which an edge segment is split further.
const MAX_PHASE_STEP: f64 = PI / 4.0;

/// Recursion cap for edge refinement.
const MAX_EDGE_DEPTH: u32 = 24;

/// `|f|` below this on the boundary means a zero sits on the contour.
const BOUNDARY_TOL: f64 = 1e-10;

/// Zeros of a real function on `[lo, hi]` via sign changes on `n` cells and bisection.
pub fn real_zeros(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let h = (hi - lo) / n as f64;
    let mut out = Vec::new();
    let mut a = lo;
    let mut fa = f(a);
    for i in 1..=n {
        let b = lo + i as f64 * h;
        let fb = f(b);
        if fa == 0.0 {
            out.push(a);
        } else if fa.signum() != fb.signum() && fb != 0.0 {
            out.push(bisect(&f, a, b, fa));
        }
        a = b;
        fa = fb;
    }
    if fa == 0.0 {
        out.push(a);
    }
    out
}

fn bisect(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m == a || m == b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Axis-aligned rectangle in the complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub re0: f64,
    pub re1: f64,
    pub im0: f64,
    pub im1: f64,
}

impl Rect {
    pub fn new(re0: f64, re1: f64, im0: f64, im1: f64) -> Self {
        Self { re0, re1, im0, im1 }
    }

    pub fn contains(&self, z: Cx) -> bool {
        z.re >= self.re0 && z.re <= self.re1 && z.im >= self.im0 && z.im <= self.im1
    }

    pub fn center(&self) -> Cx {
        Cx::new(0.5 * (self.re0 + self.re1), 0.5 * (self.im0 + self.im1))
    }

    pub fn diameter(&self) -> f64 {
        Float::hypot(self.re1 - self.re0, self.im1 - self.im0)
    }

    fn corners(&self) -> [Cx; 4] {
        [
            Cx::new(self.re0, self.im0),
            Cx::new(self.re1, self.im0),
            Cx::new(self.re1, self.im1),
            Cx::new(self.re0, self.im1),
        ]
    }

    /// Splits the longer side at fraction `t`.
    fn split(&self, t: f64) -> (Rect, Rect) {
        if self.re1 - self.re0 >= self.im1 - self.im0 {
            let m = self.re0 + t * (self.re1 - self.re0);
            (Rect::new(self.re0, m, self.im0, self.im1), Rect::new(m, self.re1, self.im0, self.im1))
        } else {
            let m = self.im0 + t * (self.im1 - self.im0);
            (Rect::new(self.re0, self.re1, self.im0, m), Rect::new(self.re0, self.re1, m, self.im1))
        }
    }
}

fn phase_step(a: Cx, b: Cx) -> f64 {
    (b / a).arg()
}

fn edge_winding(f: &impl Fn(Cx) -> Cx, a: Cx, b: Cx, fa: Cx, fb: Cx, depth: u32) -> Option<f64> {
    let d = phase_step(fa, fb);
    if d.abs() <= MAX_PHASE_STEP {
        return Some(d);
    }
    if depth >= MAX_EDGE_DEPTH {
        return None;
    }
    let m = (a + b) * 0.5;
    let fm = f(m);
    if fm.norm() < BOUNDARY_TOL {
        return None;
    }
    Some(edge_winding(f, a, m, fa, fm, depth + 1)? + edge_winding(f, m, b, fm, fb, depth + 1)?)
}

/// Number of zeros of `f` inside `rect`, or `None` if a zero lies on (or too
/// near) the boundary or the phase cannot be resolved.
pub fn winding_count(f: &impl Fn(Cx) -> Cx, rect: &Rect) -> Option<usize> {
    let c = rect.corners();
    let mut total = 0.0;
    for e in 0..4 {
        let (a, b) = (c[e], c[(e + 1) % 4]);
        let mut prev = a;
        let mut fprev = f(a);
        if fprev.norm() < BOUNDARY_TOL {
            return None;
        }
        for k in 1..=EDGE_SAMPLES {
            let z = a + (b - a) * (k as f64 / EDGE_SAMPLES as f64);
            let fz = f(z);
            if fz.norm() < BOUNDARY_TOL {
                return None;
            }
            total += edge_winding(f, prev, z, fprev, fz, 0)?;
            prev = z;
            fprev = fz;
        }
    }
    let n = total / (2.0 * PI);
    let k = n.round();
    if (n - k).abs() > 1e-3 || k < 0.0 {
        return None;
    }
    Some(k as usize)
}

/// A cell of diameter below the resolution holding exactly one zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroCell {
    pub rect: Rect,
}

impl ZeroCell {
    pub fn center(&self) -> Cx {
        self.rect.center()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexScan {
    pub cells: Vec<ZeroCell>,
    /// Winding count of the whole rectangle.
    pub total: usize,
}

/// Isolates the zeros of `f` in `rect` down to cells of diameter `< resolution`.
///
/// Returns `None` if a boundary of the outer rectangle meets a zero; callers
/// should perturb the rectangle and retry. Interior splits that land on a zero
/// are retried at a different fraction.
pub fn complex_zeros(f: impl Fn(Cx) -> Cx, rect: Rect, resolution: f64) -> Option<ComplexScan> {
    let total = winding_count(&f, &rect)?;
    let mut cells = Vec::new();
    isolate(&f, rect, total, resolution, &mut cells, 0)?;
    Some(ComplexScan { cells, total })
}

const SPLIT_FRACTIONS: [f64; 4] = [0.4871, 0.5309, 0.4417, 0.5683];

fn isolate(f: &impl Fn(Cx) -> Cx, rect: Rect, count: usize, res: f64, out: &mut Vec<ZeroCell>, depth: u32) -> Option<()> {
    if count == 0 {
        return Some(());
    }
    if count == 1 && rect.diameter() < res {
        out.push(ZeroCell { rect });
        return Some(());
    }
    if depth > 80 {
        return None;
    }
    for t in SPLIT_FRACTIONS {
        let (a, b) = rect.split(t);
        let (Some(ca), Some(cb)) = (winding_count(f, &a), winding_count(f, &b)) else {
            continue;
        };
        if ca + cb != count {
            continue;
        }
        isolate(f, a, ca, res, out, depth + 1)?;
        isolate(f, b, cb, res, out, depth + 1)?;
        return Some(());
    }
    None
}

/// Closed-form zeros of one block next to the zeros found by scanning.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockComparison {
    pub rect: Rect,
    pub closed_form: Vec<Cx>,
    pub scanned: Vec<Cx>,
    /// Same count and every closed-form zero within `resolution` of its own scanned zero.
    pub agree: bool,
    /// Largest `|J|` at a closed-form zero.
    pub max_residual: f64,
}

fn closed_form_zeros(b: &CurvatureBlock, rect: &Rect, real: bool) -> Vec<Cx> {
    let m = HypersurfaceModel::new("oracle", AmbientKind::Noncompact, alloc::vec![*b]);
    let re = Interval::closed(rect.re0, rect.re1);
    let set = if real {
        focal::focal_radii_real(&m, re, 0.0)
    } else {
        focal::focal_radii_complex(&m, re, Interval::closed(rect.im0, rect.im1), 0.0)
    };
    set.map(|s| s.radii.into_iter().map(|r| r.value).filter(|z| rect.contains(*z)).collect())
        .unwrap_or_default()
}

/// Scans `J` for one block over `rect` and compares with the closed form.
///
/// Blocks with `mu >= 0` only vanish on the real axis and are scanned there
/// by sign changes; `mu < 0` blocks get the winding-number scan. The rectangle
/// is nudged outward a few times if a zero sits on its boundary.
pub fn compare_block(b: &CurvatureBlock, rect: Rect, resolution: f64) -> Option<BlockComparison> {
    let f = |s: Cx| focal::jacobi_coeff(s, b.lambda, b.mu);
    let real = b.mu >= 0.0;
    let mut rect = rect;
    for attempt in 0..6 {
        let scanned = if real {
            let n = ((rect.re1 - rect.re0) / resolution).ceil().max(16.0) as usize;
            Some(real_zeros(|x| f(Cx::new(x, 0.0)).re, rect.re0, rect.re1, n).into_iter().map(|x| Cx::new(x, 0.0)).collect())
        } else {
            complex_zeros(f, rect, resolution).map(|s| s.cells.iter().map(ZeroCell::center).collect::<Vec<_>>())
        };
        if let Some(scanned) = scanned {
            let closed = closed_form_zeros(b, &rect, real);
            let max_residual = closed.iter().map(|z| f(*z).norm()).fold(0.0, f64::max);
            let agree = closed.len() == scanned.len()
                && closed.iter().all(|z| scanned.iter().filter(|w| (*w - z).norm() < resolution).count() == 1);
            return Some(BlockComparison { rect, closed_form: closed, scanned, agree, max_residual });
        }
        let d = 0.0137 * (attempt + 1) as f64;
        rect = Rect::new(rect.re0 - d, rect.re1 + d, rect.im0 - d, rect.im1 + d);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_scan_finds_sine_zeros() {
        let z = real_zeros(f64::sin, 0.5, 10.0, 1000);
        assert_eq!(z.len(), 3);
        for (k, x) in z.iter().enumerate() {
            assert!((x - (k + 1) as f64 * PI).abs() < 1e-12);
        }
    }

    #[test]
    fn winding_counts_polynomial_roots() {
        let f = |z: Cx| (z - Cx::new(0.3, 0.2)) * (z - Cx::new(-0.5, 0.1)) * (z - Cx::new(2.0, 2.0));
        assert_eq!(winding_count(&f, &Rect::new(-1.0, 1.0, -1.0, 1.0)), Some(2));
        assert_eq!(winding_count(&f, &Rect::new(-1.0, 3.0, -1.0, 3.0)), Some(3));
        assert_eq!(winding_count(&f, &Rect::new(1.0, 1.5, -1.0, 1.0)), Some(0));
        // zero on the contour
        assert_eq!(winding_count(&f, &Rect::new(0.3, 1.0, -1.0, 1.0)), None);
    }

    #[test]
    fn isolates_cosh_zeros() {
        let f = |z: Cx| z.cosh();
        let scan = complex_zeros(f, Rect::new(-0.37, 0.41, -5.03, 5.11), 1e-4).unwrap();
        assert_eq!(scan.total, 4);
        assert_eq!(scan.cells.len(), 4);
        for (c, k) in scan.cells.iter().zip([-3.0, -1.0, 1.0, 3.0]) {
            assert!((c.center() - Cx::new(0.0, k * PI / 2.0)).norm() < 1e-4);
        }
    }
}
