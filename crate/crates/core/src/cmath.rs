//! Complex hyperbolic helpers that stay finite for large real parts.
//!
//! `num_complex` evaluates `tanh` through `sinh/cosh`, which overflows once
//! `|Re z|` passes a few hundred. Away from the imaginary axis `coth` and
//! `tanh` are computed from `exp(-2|Re z|)` instead; near it, where that form
//! cancels, the direct quotient is both safe and accurate.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

pub type Cx = Complex64;

/// Pole threshold on `|sin|`, `|sinh|` style denominators.
pub const POLE_TOL: f64 = 1e-13;

pub const I: Cx = Cx::new(0.0, 1.0);

#[inline]
pub fn re(x: f64) -> Cx {
    Cx::new(x, 0.0)
}

/// `exp(-2z)` for `Re z >= 0` together with a flag telling whether `z` was negated.
fn folded_exp(z: Cx) -> (Cx, bool) {
    if z.re >= 0.0 {
        ((-2.0 * z).exp(), false)
    } else {
        ((2.0 * z).exp(), true)
    }
}

/// Below this `|Re z|` the quotient `cosh/sinh` is used directly.
const DIRECT_RE: f64 = 0.5;

/// `coth z`, or `None` within [`POLE_TOL`] of `z ∈ iπℤ`.
pub fn coth(z: Cx) -> Option<Cx> {
    if z.re.abs() < DIRECT_RE {
        let sh = z.sinh();
        return (sh.norm() > POLE_TOL).then(|| z.cosh() / sh);
    }
    let (e, flipped) = folded_exp(z);
    let den = Cx::new(1.0, 0.0) - e;
    if den.norm() <= POLE_TOL {
        return None;
    }
    let v = (Cx::new(1.0, 0.0) + e) / den;
    Some(if flipped { -v } else { v })
}

/// `tanh z`, or `None` within [`POLE_TOL`] of `z ∈ iπ(ℤ + 1/2)`.
pub fn tanh(z: Cx) -> Option<Cx> {
    if z.re.abs() < DIRECT_RE {
        let ch = z.cosh();
        return (ch.norm() > POLE_TOL).then(|| z.sinh() / ch);
    }
    let (e, flipped) = folded_exp(z);
    let den = Cx::new(1.0, 0.0) + e;
    if den.norm() <= POLE_TOL {
        return None;
    }
    let v = (Cx::new(1.0, 0.0) - e) / den;
    Some(if flipped { -v } else { v })
}

/// Radius below which `x coth x` and `x cot x` switch to their Taylor series.
const SERIES_RADIUS: f64 = 1e-3;

/// `x coth x`, continuous through `x = 0`; `None` near `x ∈ iπℤ∖{0}`.
pub fn x_coth_x(x: Cx) -> Option<Cx> {
    if x.norm() < SERIES_RADIUS {
        let x2 = x * x;
        return Some(Cx::new(1.0, 0.0) + x2 / 3.0 - x2 * x2 / 45.0);
    }
    coth(x).map(|c| c * x)
}

/// `x cot x` for real `x`, continuous through `0`; `None` near `x ∈ πℤ∖{0}`.
pub fn x_cot_x(x: f64) -> Option<f64> {
    if x.abs() < SERIES_RADIUS {
        let x2 = x * x;
        return Some(1.0 - x2 / 3.0 - x2 * x2 / 45.0);
    }
    let (s, c) = x.sin_cos();
    (s.abs() > POLE_TOL).then(|| x * c / s)
}

/// `cosh(b s) - lambda * sinh(b s) / b` written through exponentials so that
/// cancellation at a zero is not amplified by two large terms.
pub fn hyperbolic_coeff(s: Cx, lambda: f64, b: f64) -> Cx {
    let w = s * b;
    let ep = w.exp();
    let em = (-w).exp();
    let k = lambda / b;
    (ep * (1.0 - k) + em * (1.0 + k)) * 0.5
}

/// Squared distance helper used by merge and window tests.
#[inline]
pub fn dist(a: Cx, b: Cx) -> f64 {
    (a - b).norm()
}

/// `r / |r|`; `1` for `r = 0`.
pub fn unit(r: Cx) -> Cx {
    let n = r.norm();
    if n == 0.0 {
        Cx::new(1.0, 0.0)
    } else {
        r / n
    }
}

#[allow(dead_code)]
pub(crate) fn is_finite(z: Cx) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
