//! Block model of a curvature-adapted hypersurface at one point.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Float;

use crate::{Error, Result};

/// Default absolute tolerance for [`is_proper`].
pub const PROPER_TOL: f64 = 1e-9;

/// Distance below which two distinct stored pairs draw a near-duplicate notice.
pub const NEAR_DUPLICATE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AmbientKind {
    Compact,
    Noncompact,
    /// Constant curvature `c`; every block has `mu == c`.
    SpaceForm(f64),
}

impl AmbientKind {
    /// Compact type or a space form with `c >= 0`: real focal radii, no unit factor.
    pub fn is_compact_like(&self) -> bool {
        match self {
            AmbientKind::Compact => true,
            AmbientKind::Noncompact => false,
            AmbientKind::SpaceForm(c) => *c >= 0.0,
        }
    }

    pub fn mu_allowed(&self, mu: f64) -> bool {
        match self {
            AmbientKind::Compact => mu >= 0.0,
            AmbientKind::Noncompact => mu <= 0.0,
            AmbientKind::SpaceForm(c) => mu == *c,
        }
    }
}

impl fmt::Display for AmbientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AmbientKind::Compact => f.write_str("compact"),
            AmbientKind::Noncompact => f.write_str("noncompact"),
            AmbientKind::SpaceForm(c) => write!(f, "spaceform(c={c})"),
        }
    }
}

/// `Ker(A - lambda) ∩ Ker(R(v) - mu)` of dimension `mult`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureBlock {
    pub lambda: f64,
    pub mu: f64,
    pub mult: u32,
}

impl CurvatureBlock {
    pub const fn new(lambda: f64, mu: f64, mult: u32) -> Self {
        Self { lambda, mu, mult }
    }

    fn same_pair(&self, other: &Self) -> bool {
        self.lambda == other.lambda && self.mu == other.mu
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HypersurfaceModel {
    pub name: String,
    pub ambient: AmbientKind,
    pub blocks: Vec<CurvatureBlock>,
}

impl HypersurfaceModel {
    pub fn new(name: impl Into<String>, ambient: AmbientKind, blocks: Vec<CurvatureBlock>) -> Self {
        Self { name: name.into(), ambient, blocks }
    }

    /// `dim M = Σ mult`
    pub fn dim(&self) -> u32 {
        self.blocks.iter().map(|b| b.mult).sum()
    }

    /// Sums the multiplicities of blocks with identical `(lambda, mu)`,
    /// keeping the order of first occurrence.
    pub fn merged(&self) -> Self {
        let mut blocks: Vec<CurvatureBlock> = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            match blocks.iter_mut().find(|x| x.same_pair(b)) {
                Some(x) => x.mult += b.mult,
                None => blocks.push(*b),
            }
        }
        Self { name: self.name.clone(), ambient: self.ambient, blocks }
    }

    /// Distinct principal curvatures, sorted, clustered within `tol`.
    pub fn distinct_lambdas(&self, tol: f64) -> Vec<f64> {
        let mut ls: Vec<f64> = self.blocks.iter().map(|b| b.lambda).collect();
        ls.sort_by(f64::total_cmp);
        let mut out: Vec<f64> = Vec::new();
        for l in ls {
            if out.last().is_none_or(|p| (l - p).abs() > tol) {
                out.push(l);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    EmptyModel,
    NonFinite { block: usize },
    ZeroMultiplicity { block: usize },
    MuSign { block: usize, mu: f64, ambient: AmbientKind },
    NonFiniteCurvature { c: f64 },
    DimensionMismatch { expected: u32, got: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyModel => f.write_str("model has no blocks"),
            Violation::NonFinite { block } => write!(f, "block {block}: non-finite lambda or mu"),
            Violation::ZeroMultiplicity { block } => write!(f, "block {block}: multiplicity must be >= 1"),
            Violation::MuSign { block, mu, ambient } => {
                write!(f, "block {block}: mu sign: mu = {mu} not allowed in a {ambient} ambient")
            }
            Violation::NonFiniteCurvature { c } => write!(f, "space form curvature {c} is not finite"),
            Violation::DimensionMismatch { expected, got } => {
                write!(f, "sum of multiplicities is {got}, expected dim M = {expected}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Notice {
    /// `count` blocks with this pair were summed.
    Merged { lambda: f64, mu: f64, count: usize },
    NearDuplicate { first: usize, second: usize, distance: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub notices: Vec<Notice>,
    pub merged: HypersurfaceModel,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate(model: &HypersurfaceModel) -> ValidationReport {
    validate_with_dim(model, None)
}

/// [`validate`] plus `Σ mult == expected_dim` when the model is tied to a known `dim M`.
pub fn validate_with_dim(model: &HypersurfaceModel, expected_dim: Option<u32>) -> ValidationReport {
    let mut violations = Vec::new();
    let mut notices = Vec::new();
    if model.blocks.is_empty() {
        violations.push(Violation::EmptyModel);
    }
    if let AmbientKind::SpaceForm(c) = model.ambient {
        if !c.is_finite() {
            violations.push(Violation::NonFiniteCurvature { c });
        }
    }
    for (i, b) in model.blocks.iter().enumerate() {
        if !b.lambda.is_finite() || !b.mu.is_finite() {
            violations.push(Violation::NonFinite { block: i });
            continue;
        }
        if b.mult == 0 {
            violations.push(Violation::ZeroMultiplicity { block: i });
        }
        if !model.ambient.mu_allowed(b.mu) {
            violations.push(Violation::MuSign { block: i, mu: b.mu, ambient: model.ambient });
        }
    }
    let merged = model.merged();
    for m in &merged.blocks {
        let count = model.blocks.iter().filter(|b| b.same_pair(m)).count();
        if count > 1 {
            notices.push(Notice::Merged { lambda: m.lambda, mu: m.mu, count });
        }
    }
    for (i, a) in merged.blocks.iter().enumerate() {
        for (j, b) in merged.blocks.iter().enumerate().skip(i + 1) {
            let distance = Float::hypot(a.lambda - b.lambda, a.mu - b.mu);
            if distance < NEAR_DUPLICATE_TOL {
                notices.push(Notice::NearDuplicate { first: i, second: j, distance });
            }
        }
    }
    if let Some(expected) = expected_dim {
        let got = model.dim();
        if got != expected {
            violations.push(Violation::DimensionMismatch { expected, got });
        }
    }
    ValidationReport { violations, notices, merged }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProperReport {
    pub proper: bool,
    /// Blocks with `lambda = ±sqrt(-mu)`, as `(index, block)`.
    pub witnesses: Vec<(usize, CurvatureBlock)>,
}

/// Checks `lambda != ±sqrt(-mu)` on every block with `mu < 0`.
pub fn is_proper(model: &HypersurfaceModel, tol: f64) -> Result<ProperReport> {
    if let AmbientKind::Compact = model.ambient {
        return Err(Error::WrongAmbient { expected: "non-compact" });
    }
    if let AmbientKind::SpaceForm(c) = model.ambient {
        if c > 0.0 {
            return Err(Error::WrongAmbient { expected: "non-compact" });
        }
    }
    let witnesses: Vec<(usize, CurvatureBlock)> = model
        .blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| b.mu < 0.0 && (b.lambda.abs() - (-b.mu).sqrt()).abs() <= tol)
        .map(|(i, b)| (i, *b))
        .collect();
    Ok(ProperReport { proper: witnesses.is_empty(), witnesses })
}
