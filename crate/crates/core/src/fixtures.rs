//! Block models of hypersurfaces with known spectra.
//!
//! Rank-one families use the normalization where the Jacobi eigenvalues are
//! `±scale` and `±4·scale` (holomorphic or quaternionic sectional curvature
//! `±4` at `scale = 1`). Root-data tubes take their spectrum from a root
//! projection and a vertical/horizontal split of its classes.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::cartan::TubeRole;
use crate::model::{AmbientKind, CurvatureBlock, HypersurfaceModel};
use crate::rootsys::{self, RootProjection};
use crate::{Error, Rational, Result};

/// `|sin|` below this at a compact radius parameter counts as a pole.
const POLE_GUARD: f64 = 1e-9;

/// Tube of radius `s0` over a totally geodesic focal submanifold, built from root data.
#[derive(Debug, Clone, PartialEq)]
pub struct RootTube {
    pub space: String,
    pub projection: RootProjection,
    /// One role per projection class.
    pub roles: Vec<TubeRole>,
    /// Split of `Ker R(v)` into the `1/s0` and `0` eigenspaces.
    pub kernel_vertical: u32,
    pub kernel_horizontal: u32,
    pub s0: f64,
}

impl RootTube {
    pub fn new(
        space: impl Into<String>,
        projection: RootProjection,
        roles: Vec<TubeRole>,
        kernel_vertical: u32,
        kernel_horizontal: u32,
        s0: f64,
    ) -> Result<Self> {
        if roles.len() != projection.classes.len() {
            return Err(Error::PoleParams(format!(
                "{} roles for {} root classes",
                roles.len(),
                projection.classes.len()
            )));
        }
        if kernel_vertical + kernel_horizontal != projection.jacobi_kernel_dim() {
            return Err(Error::PoleParams(format!(
                "kernel split {kernel_vertical}+{kernel_horizontal} != dim Ker R(v) = {}",
                projection.jacobi_kernel_dim()
            )));
        }
        if !(s0 > 0.0 && s0.is_finite()) {
            return Err(Error::PoleParams(format!("tube radius s0 = {s0} must be positive")));
        }
        Ok(Self { space: space.into(), projection, roles, kernel_vertical, kernel_horizontal, s0 })
    }

    fn preset(name: &str, v: &[Rational], roles: Vec<TubeRole>, kv: u32, kh: u32, s0: f64) -> Result<Self> {
        let entry = rootsys::lookup(name).expect("preset space is in the census");
        let proj = rootsys::project_roots(&entry.roots, v)?;
        Self::new(name, proj, roles, kv, kh, s0)
    }

    /// `SL(3,R)/SO(3)`, `v = (1,0,-1)`: classes `β = 1, 2`, both vertical.
    pub fn a2(s0: f64) -> Result<Self> {
        let v = [q(1), q(0), q(-1)];
        Self::preset("SL(3,R)/SO(3)", &v, vec![TubeRole::Vertical; 2], 0, 1, s0)
    }

    /// `SO0(2,4)`, `v = (1,1)` on the wall of the long root: `β = 1` horizontal, `β = 2` vertical.
    pub fn b2(s0: f64) -> Result<Self> {
        let v = [q(1), q(1)];
        Self::preset("SO0(2,4)/SO(2)xSO(4)", &v, vec![TubeRole::Horizontal, TubeRole::Vertical], 0, 2, s0)
    }

    /// `G2^2/SO(4)`, `v = (0,1,-1)` orthogonal to a long root: `β = 1, 2, 3`, all vertical.
    pub fn g2(s0: f64) -> Result<Self> {
        let v = [q(0), q(1), q(-1)];
        Self::preset("G2^2/SO(4)", &v, vec![TubeRole::Vertical; 3], 0, 2, s0)
    }

    /// `G2^2/SO(4)`, `v = (1,1,-2)/3` orthogonal to a short root: `β = 1, 2`, both vertical.
    pub fn g2_short_wall(s0: f64) -> Result<Self> {
        let v = [Rational::new(1, 3), Rational::new(1, 3), Rational::new(-2, 3)];
        Self::preset("G2^2/SO(4)", &v, vec![TubeRole::Vertical; 2], 0, 2, s0)
    }

    fn blocks(&self) -> Vec<CurvatureBlock> {
        let s0 = self.s0;
        let mut out: Vec<CurvatureBlock> = self
            .projection
            .classes
            .iter()
            .zip(&self.roles)
            .map(|(c, role)| {
                let b = c.beta();
                let lambda = match role {
                    TubeRole::Vertical => b / (b * s0).tanh(),
                    TubeRole::Horizontal => b * (b * s0).tanh(),
                };
                CurvatureBlock::new(lambda, -(b * b), c.total_mult)
            })
            .collect();
        if self.kernel_vertical > 0 {
            out.push(CurvatureBlock::new(1.0 / s0, 0.0, self.kernel_vertical));
        }
        if self.kernel_horizontal > 0 {
            out.push(CurvatureBlock::new(0.0, 0.0, self.kernel_horizontal));
        }
        out
    }
}

fn q(n: i128) -> Rational {
    Rational::from_integer(n)
}

#[derive(Debug, Clone, PartialEq)]
pub enum FixtureSpec {
    /// Geodesic sphere of radius `t` in `S^n(c)`.
    SphereGeodesicSphere { n: u32, t: f64, c: f64 },
    /// Isoparametric hypersurface in `S^n(1)` with `g` principal curvatures
    /// `cot(t + kπ/g)` and alternating multiplicities `m1, m2`.
    SphereIsoparametric { g: u32, m1: u32, m2: u32, t: f64 },
    /// Tube of radius `t` around a totally geodesic `RH^k` in `RH^n`.
    RealHyperbolicTube { n: u32, k: u32, t: f64 },
    ComplexProjectiveGeodesicSphere { n: u32, t: f64, scale: f64 },
    ComplexHyperbolicGeodesicSphere { n: u32, t: f64, scale: f64 },
    QuaternionicGeodesicSphere { compact: bool, n: u32, t: f64, scale: f64 },
    /// Same pattern with multiplicities 7 and 8; no independent oracle.
    CayleyGeodesicSphere { compact: bool, t: f64, scale: f64 },
    RootDataTube(RootTube),
}

fn pole(msg: String) -> Error {
    Error::PoleParams(msg)
}

fn cot_checked(x: f64, what: &str) -> Result<f64> {
    let (s, c) = x.sin_cos();
    if s.abs() < POLE_GUARD {
        return Err(pole(format!("{what}: cot has a pole at {x}")));
    }
    Ok(c / s)
}

fn coth_checked(x: f64, what: &str) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(pole(format!("{what}: radius must be positive, got {x}")));
    }
    Ok(1.0 / x.tanh())
}

/// `[(2w f(2wt), ±4w², m_top), (w f(wt), ±w², m_rest)]` with `w = √scale`.
fn rank_one_sphere(compact: bool, t: f64, scale: f64, m_top: u32, m_rest: u32, what: &str) -> Result<Vec<CurvatureBlock>> {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(pole(format!("{what}: scale must be positive")));
    }
    let w = scale.sqrt();
    let (f1, f2, sign) = if compact {
        (cot_checked(w * t, what)?, cot_checked(2.0 * w * t, what)?, 1.0)
    } else {
        (coth_checked(w * t, what)?, coth_checked(2.0 * w * t, what)?, -1.0)
    };
    Ok(vec![
        CurvatureBlock::new(2.0 * w * f2, sign * 4.0 * scale, m_top),
        CurvatureBlock::new(w * f1, sign * scale, m_rest),
    ])
}

fn ambient(compact: bool) -> AmbientKind {
    if compact {
        AmbientKind::Compact
    } else {
        AmbientKind::Noncompact
    }
}

fn at_least(n: u32, min: u32, what: &str) -> Result<()> {
    if n < min {
        return Err(pole(format!("{what}: n = {n} must be at least {min}")));
    }
    Ok(())
}

impl FixtureSpec {
    pub fn name(&self) -> String {
        match self {
            FixtureSpec::SphereGeodesicSphere { n, t, c } => format!("S{n}(c={c}) geodesic sphere t={t}"),
            FixtureSpec::SphereIsoparametric { g, m1, m2, t } => format!("S isoparametric g={g} m=({m1},{m2}) t={t}"),
            FixtureSpec::RealHyperbolicTube { n, k, t } => format!("RH{n} tube over RH{k} t={t}"),
            FixtureSpec::ComplexProjectiveGeodesicSphere { n, t, .. } => format!("CP{n} geodesic sphere t={t}"),
            FixtureSpec::ComplexHyperbolicGeodesicSphere { n, t, .. } => format!("CH{n} geodesic sphere t={t}"),
            FixtureSpec::QuaternionicGeodesicSphere { compact, n, t, .. } => {
                format!("{}{n} geodesic sphere t={t}", if *compact { "HP" } else { "HH" })
            }
            FixtureSpec::CayleyGeodesicSphere { compact, t, .. } => {
                format!("{} geodesic sphere t={t}", if *compact { "OP2" } else { "OH2" })
            }
            FixtureSpec::RootDataTube(r) => format!("root tube over {} s0={}", r.space, r.s0),
        }
    }

    /// Root projection behind the spectrum, when there is one.
    pub fn projection(&self) -> Option<RootProjection> {
        match self {
            FixtureSpec::ComplexHyperbolicGeodesicSphere { n, .. } => rank_one_projection("CH", *n),
            FixtureSpec::QuaternionicGeodesicSphere { compact: false, n, .. } => rank_one_projection("HH", *n),
            FixtureSpec::CayleyGeodesicSphere { compact: false, .. } => rank_one_projection("OH", 2),
            FixtureSpec::RealHyperbolicTube { n, .. } => rank_one_projection("RH", *n),
            FixtureSpec::RootDataTube(r) => Some(r.projection.clone()),
            _ => None,
        }
    }

    /// `false` only for the Cayley plane, whose multiplicity split has no independent check.
    pub fn oracle_verified(&self) -> bool {
        !matches!(self, FixtureSpec::CayleyGeodesicSphere { .. })
    }

    pub fn build(&self) -> Result<HypersurfaceModel> {
        let name = self.name();
        let (amb, blocks) = match *self {
            FixtureSpec::SphereGeodesicSphere { n, t, c } => {
                at_least(n, 2, "sphere")?;
                if !(c > 0.0 && c.is_finite()) {
                    return Err(pole(format!("sphere: curvature c = {c} must be positive")));
                }
                let w = c.sqrt();
                (AmbientKind::SpaceForm(c), vec![CurvatureBlock::new(w * cot_checked(w * t, "sphere")?, c, n - 1)])
            }
            FixtureSpec::SphereIsoparametric { g, m1, m2, t } => {
                if ![1, 2, 3, 4, 6].contains(&g) {
                    return Err(pole(format!("isoparametric: g = {g} not in {{1,2,3,4,6}}")));
                }
                if m1 == 0 || m2 == 0 || (g % 2 == 1 && m1 != m2) {
                    return Err(pole(format!("isoparametric: multiplicities ({m1},{m2}) invalid for g = {g}")));
                }
                let mut blocks = Vec::new();
                for k in 0..g {
                    let l = cot_checked(t + k as f64 * PI / g as f64, "isoparametric")?;
                    blocks.push(CurvatureBlock::new(l, 1.0, if k % 2 == 0 { m1 } else { m2 }));
                }
                (AmbientKind::SpaceForm(1.0), blocks)
            }
            FixtureSpec::RealHyperbolicTube { n, k, t } => {
                at_least(n, 2, "real hyperbolic tube")?;
                if k + 2 > n {
                    return Err(pole(format!("real hyperbolic tube: k = {k} must be at most n - 2")));
                }
                let v = coth_checked(t, "real hyperbolic tube")?;
                let mut blocks = vec![CurvatureBlock::new(v, -1.0, n - 1 - k)];
                if k > 0 {
                    blocks.push(CurvatureBlock::new(t.tanh(), -1.0, k));
                }
                (AmbientKind::SpaceForm(-1.0), blocks)
            }
            FixtureSpec::ComplexProjectiveGeodesicSphere { n, t, scale } => {
                at_least(n, 2, "CP")?;
                (AmbientKind::Compact, rank_one_sphere(true, t, scale, 1, 2 * n - 2, "CP")?)
            }
            FixtureSpec::ComplexHyperbolicGeodesicSphere { n, t, scale } => {
                at_least(n, 2, "CH")?;
                (AmbientKind::Noncompact, rank_one_sphere(false, t, scale, 1, 2 * n - 2, "CH")?)
            }
            FixtureSpec::QuaternionicGeodesicSphere { compact, n, t, scale } => {
                at_least(n, 2, "quaternionic")?;
                (ambient(compact), rank_one_sphere(compact, t, scale, 3, 4 * n - 4, "quaternionic")?)
            }
            FixtureSpec::CayleyGeodesicSphere { compact, t, scale } => {
                (ambient(compact), rank_one_sphere(compact, t, scale, 7, 8, "Cayley")?)
            }
            FixtureSpec::RootDataTube(ref r) => (AmbientKind::Noncompact, r.blocks()),
        };
        Ok(HypersurfaceModel::new(name, amb, blocks))
    }

    /// Sets one named parameter; integer parameters must be integral.
    pub fn with_param(mut self, key: &str, value: f64) -> Result<Self> {
        let int = |v: f64| -> Result<u32> {
            if v >= 0.0 && v.fract() == 0.0 && v <= u32::MAX as f64 {
                Ok(v as u32)
            } else {
                Err(pole(format!("parameter {key} = {v} must be a non-negative integer")))
            }
        };
        let unknown = || Error::UnknownParam(key.to_string());
        match &mut self {
            FixtureSpec::SphereGeodesicSphere { n, t, c } => match key {
                "n" => *n = int(value)?,
                "t" => *t = value,
                "c" => *c = value,
                _ => return Err(unknown()),
            },
            FixtureSpec::SphereIsoparametric { g, m1, m2, t } => match key {
                "g" => *g = int(value)?,
                "m1" => *m1 = int(value)?,
                "m2" => *m2 = int(value)?,
                "t" => *t = value,
                _ => return Err(unknown()),
            },
            FixtureSpec::RealHyperbolicTube { n, k, t } => match key {
                "n" => *n = int(value)?,
                "k" => *k = int(value)?,
                "t" => *t = value,
                _ => return Err(unknown()),
            },
            FixtureSpec::ComplexProjectiveGeodesicSphere { n, t, scale }
            | FixtureSpec::ComplexHyperbolicGeodesicSphere { n, t, scale }
            | FixtureSpec::QuaternionicGeodesicSphere { n, t, scale, .. } => match key {
                "n" => *n = int(value)?,
                "t" => *t = value,
                "scale" => *scale = value,
                _ => return Err(unknown()),
            },
            FixtureSpec::CayleyGeodesicSphere { t, scale, .. } => match key {
                "t" => *t = value,
                "scale" => *scale = value,
                _ => return Err(unknown()),
            },
            FixtureSpec::RootDataTube(r) => match key {
                "s0" => {
                    if !(value > 0.0 && value.is_finite()) {
                        return Err(pole(format!("tube radius s0 = {value} must be positive")));
                    }
                    r.s0 = value
                }
                _ => return Err(unknown()),
            },
        }
        Ok(self)
    }
}

fn rank_one_projection(kind: &str, n: u32) -> Option<RootProjection> {
    let entry = rootsys::rank_one(&format!("{kind}{n}"))?;
    rootsys::project_roots(&entry.roots, &[q(1)]).ok()
}

/// A named fixture with its default parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub params: &'static [&'static str],
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry { name: "sphere", summary: "geodesic sphere in S^n(c), default n=3 t=0.7 c=1", params: &["n", "t", "c"] },
    CatalogEntry {
        name: "sphere-iso",
        summary: "isoparametric hypersurface in S^n(1), default g=4 m1=1 m2=2 t=0.3",
        params: &["g", "m1", "m2", "t"],
    },
    CatalogEntry {
        name: "rh-tube",
        summary: "tube over totally geodesic RH^k in RH^n, default n=4 k=1 t=1",
        params: &["n", "k", "t"],
    },
    CatalogEntry { name: "cp-sphere", summary: "geodesic sphere in CP^n, default n=2 t=pi/6", params: &["n", "t", "scale"] },
    CatalogEntry { name: "ch-sphere", summary: "geodesic sphere in CH^n, default n=2 t=1", params: &["n", "t", "scale"] },
    CatalogEntry { name: "hp-sphere", summary: "geodesic sphere in HP^n, default n=2 t=pi/5", params: &["n", "t", "scale"] },
    CatalogEntry { name: "hh-sphere", summary: "geodesic sphere in HH^n, default n=2 t=1", params: &["n", "t", "scale"] },
    CatalogEntry {
        name: "op-sphere",
        summary: "geodesic sphere in the Cayley plane, default t=0.5 (unverified split)",
        params: &["t", "scale"],
    },
    CatalogEntry {
        name: "oh-sphere",
        summary: "geodesic sphere in the Cayley hyperbolic plane, default t=1 (unverified split)",
        params: &["t", "scale"],
    },
    CatalogEntry { name: "root-tube-a2", summary: "tube from SL(3,R)/SO(3), v=(1,0,-1), default s0=0.7", params: &["s0"] },
    CatalogEntry { name: "root-tube-b2", summary: "tube from SO0(2,4), v=(1,1), default s0=0.7", params: &["s0"] },
    CatalogEntry { name: "root-tube-g2", summary: "tube from G2^2/SO(4), v=(0,1,-1), default s0=0.7", params: &["s0"] },
    CatalogEntry {
        name: "root-tube-g2-short",
        summary: "tube from G2^2/SO(4), v=(1,1,-2)/3, default s0=0.7",
        params: &["s0"],
    },
];

/// Default spec for a catalog name. `cp2-sphere`, `ch2-sphere`, `hp2-sphere`
/// and `hh2-sphere` are accepted as aliases.
pub fn default_spec(name: &str) -> Result<FixtureSpec> {
    let spec = match name {
        "sphere" => FixtureSpec::SphereGeodesicSphere { n: 3, t: 0.7, c: 1.0 },
        "sphere-iso" => FixtureSpec::SphereIsoparametric { g: 4, m1: 1, m2: 2, t: 0.3 },
        "rh-tube" => FixtureSpec::RealHyperbolicTube { n: 4, k: 1, t: 1.0 },
        "cp-sphere" | "cp2-sphere" => FixtureSpec::ComplexProjectiveGeodesicSphere { n: 2, t: PI / 6.0, scale: 1.0 },
        "ch-sphere" | "ch2-sphere" => FixtureSpec::ComplexHyperbolicGeodesicSphere { n: 2, t: 1.0, scale: 1.0 },
        "hp-sphere" | "hp2-sphere" => {
            FixtureSpec::QuaternionicGeodesicSphere { compact: true, n: 2, t: PI / 5.0, scale: 1.0 }
        }
        "hh-sphere" | "hh2-sphere" => FixtureSpec::QuaternionicGeodesicSphere { compact: false, n: 2, t: 1.0, scale: 1.0 },
        "op-sphere" => FixtureSpec::CayleyGeodesicSphere { compact: true, t: 0.5, scale: 1.0 },
        "oh-sphere" => FixtureSpec::CayleyGeodesicSphere { compact: false, t: 1.0, scale: 1.0 },
        "root-tube-a2" => FixtureSpec::RootDataTube(RootTube::a2(0.7)?),
        "root-tube-b2" => FixtureSpec::RootDataTube(RootTube::b2(0.7)?),
        "root-tube-g2" => FixtureSpec::RootDataTube(RootTube::g2(0.7)?),
        "root-tube-g2-short" => FixtureSpec::RootDataTube(RootTube::g2_short_wall(0.7)?),
        _ => return Err(Error::UnknownFixture(name.to_string())),
    };
    Ok(spec)
}

/// [`default_spec`] followed by [`FixtureSpec::with_param`] for each pair.
pub fn from_name(name: &str, params: &[(&str, f64)]) -> Result<FixtureSpec> {
    params.iter().try_fold(default_spec(name)?, |s, (k, v)| s.with_param(k, *v))
}

/// Compact fixtures exercised by the real-radius identity checks.
pub fn compact_suite() -> Vec<FixtureSpec> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for t in [0.2, 0.5, PI / 6.0, 1.0, 1.3] {
            out.push(FixtureSpec::ComplexProjectiveGeodesicSphere { n, t, scale: 1.0 });
        }
    }
    out.push(FixtureSpec::QuaternionicGeodesicSphere { compact: true, n: 2, t: PI / 5.0, scale: 1.0 });
    for (n, t) in [(2, 0.4), (3, 0.7), (5, 2.0)] {
        out.push(FixtureSpec::SphereGeodesicSphere { n, t, c: 1.0 });
    }
    out.push(FixtureSpec::SphereGeodesicSphere { n: 4, t: 0.3, c: 2.5 });
    for (g, m1, m2) in [(2, 2, 3), (3, 2, 2), (4, 1, 2), (4, 3, 4), (6, 1, 1)] {
        out.push(FixtureSpec::SphereIsoparametric { g, m1, m2, t: 0.3 });
    }
    out
}

/// Non-compact fixtures exercised by the complex-radius identity checks.
pub fn noncompact_suite() -> Result<Vec<FixtureSpec>> {
    let mut out = Vec::new();
    for n in 2..=4 {
        out.push(FixtureSpec::ComplexHyperbolicGeodesicSphere { n, t: 1.0, scale: 1.0 });
    }
    out.push(FixtureSpec::ComplexHyperbolicGeodesicSphere { n: 3, t: 0.45, scale: 1.0 });
    out.push(FixtureSpec::QuaternionicGeodesicSphere { compact: false, n: 2, t: 1.0, scale: 1.0 });
    for s0 in [0.3, 0.7, 1.5] {
        out.push(FixtureSpec::RootDataTube(RootTube::a2(s0)?));
        out.push(FixtureSpec::RootDataTube(RootTube::b2(s0)?));
        out.push(FixtureSpec::RootDataTube(RootTube::g2(s0)?));
        out.push(FixtureSpec::RootDataTube(RootTube::g2_short_wall(s0)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::validate;

    #[test]
    fn ch2_sphere_values() {
        let m = default_spec("ch2-sphere").unwrap().build().unwrap();
        assert!((m.blocks[0].lambda - 2.074_629_441_455_096).abs() < 1e-12);
        assert!((m.blocks[1].lambda - 1.313_035_285_499_3).abs() < 1e-12);
        assert_eq!((m.blocks[0].mu, m.blocks[0].mult), (-4.0, 1));
        assert_eq!((m.blocks[1].mu, m.blocks[1].mult), (-1.0, 2));
    }

    #[test]
    fn sphere_is_umbilic() {
        let m = FixtureSpec::SphereGeodesicSphere { n: 4, t: 0.5, c: 4.0 }.build().unwrap();
        assert_eq!(m.blocks.len(), 1);
        assert!((m.blocks[0].lambda - 2.0 / 1f64.tan()).abs() < 1e-15);
        assert_eq!(m.blocks[0].mult, 3);
    }

    #[test]
    fn poles_and_ranges_rejected() {
        let bad = [
            FixtureSpec::ComplexProjectiveGeodesicSphere { n: 2, t: PI / 2.0, scale: 1.0 },
            FixtureSpec::SphereGeodesicSphere { n: 3, t: PI, c: 1.0 },
            FixtureSpec::ComplexHyperbolicGeodesicSphere { n: 2, t: -1.0, scale: 1.0 },
            FixtureSpec::RealHyperbolicTube { n: 3, k: 2, t: 1.0 },
            FixtureSpec::SphereIsoparametric { g: 3, m1: 1, m2: 2, t: 0.3 },
            FixtureSpec::SphereIsoparametric { g: 5, m1: 1, m2: 1, t: 0.3 },
        ];
        for s in bad {
            assert!(matches!(s.build(), Err(Error::PoleParams(_))), "{s:?}");
        }
    }

    #[test]
    fn params_by_name() {
        let s = from_name("ch-sphere", &[("n", 3.0), ("t", 0.5)]).unwrap();
        assert_eq!(s, FixtureSpec::ComplexHyperbolicGeodesicSphere { n: 3, t: 0.5, scale: 1.0 });
        assert_eq!(from_name("ch-sphere", &[("s0", 1.0)]), Err(Error::UnknownParam("s0".into())));
        assert!(from_name("ch-sphere", &[("n", 2.5)]).is_err());
        assert_eq!(from_name("nope", &[]), Err(Error::UnknownFixture("nope".into())));
        for e in CATALOG {
            let spec = default_spec(e.name).unwrap();
            assert!(validate(&spec.build().unwrap()).is_valid(), "{}", e.name);
        }
    }

    #[test]
    fn root_tubes_have_tangent_dimension() {
        let expected = [(RootTube::a2(0.7).unwrap(), 4), (RootTube::b2(0.7).unwrap(), 7), (RootTube::g2(0.7).unwrap(), 7)];
        for (tube, dim_m) in expected {
            let m = FixtureSpec::RootDataTube(tube).build().unwrap();
            assert_eq!(m.dim(), dim_m);
        }
    }

    #[test]
    fn root_tube_split_must_cover_kernel() {
        let t = RootTube::a2(0.7).unwrap();
        assert!(RootTube::new("x", t.projection.clone(), t.roles.clone(), 1, 1, 0.7).is_err());
        assert!(RootTube::new("x", t.projection.clone(), vec![TubeRole::Vertical], 0, 1, 0.7).is_err());
        assert!(RootTube::new("x", t.projection, t.roles, 0, 1, 0.0).is_err());
    }
}
