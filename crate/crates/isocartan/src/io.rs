//! On-disk formats: model files in, radius and identity reports out.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use isocartan_core::cartan::{IdentityReport, TheoremCReport, TheoremDReport};
use isocartan_core::focal::FocalSet;
use isocartan_core::model::{AmbientKind, CurvatureBlock, HypersurfaceModel};
use isocartan_core::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AmbientTag {
    Compact,
    Noncompact,
    Spaceform,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmbientFile {
    pub kind: AmbientTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockFile {
    pub lambda: f64,
    pub mu: f64,
    pub mult: u32,
}

/// The model schema: `{"name", "ambient": {"kind", "c"?}, "blocks": [{"lambda", "mu", "mult"}]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub name: String,
    pub ambient: AmbientFile,
    pub blocks: Vec<BlockFile>,
}

impl From<&HypersurfaceModel> for ModelFile {
    fn from(m: &HypersurfaceModel) -> Self {
        let ambient = match m.ambient {
            AmbientKind::Compact => AmbientFile { kind: AmbientTag::Compact, c: None },
            AmbientKind::Noncompact => AmbientFile { kind: AmbientTag::Noncompact, c: None },
            AmbientKind::SpaceForm(c) => AmbientFile { kind: AmbientTag::Spaceform, c: Some(c) },
        };
        let blocks = m.blocks.iter().map(|b| BlockFile { lambda: b.lambda, mu: b.mu, mult: b.mult }).collect();
        Self { name: m.name.clone(), ambient, blocks }
    }
}

impl TryFrom<ModelFile> for HypersurfaceModel {
    type Error = anyhow::Error;

    fn try_from(f: ModelFile) -> Result<Self> {
        let ambient = match (f.ambient.kind, f.ambient.c) {
            (AmbientTag::Compact, None) => AmbientKind::Compact,
            (AmbientTag::Noncompact, None) => AmbientKind::Noncompact,
            (AmbientTag::Spaceform, Some(c)) => AmbientKind::SpaceForm(c),
            (AmbientTag::Spaceform, None) => bail!("field `ambient.c`: required when kind is \"spaceform\""),
            (kind, Some(_)) => bail!("field `ambient.c`: only allowed when kind is \"spaceform\", got {kind:?}"),
        };
        let blocks = f.blocks.into_iter().map(|b| CurvatureBlock::new(b.lambda, b.mu, b.mult)).collect();
        Ok(HypersurfaceModel::new(f.name, ambient, blocks))
    }
}

pub fn model_from_json(s: &str) -> Result<HypersurfaceModel> {
    let f: ModelFile = serde_json::from_str(s)?;
    f.try_into()
}

pub fn model_to_json(m: &HypersurfaceModel) -> String {
    to_json(&ModelFile::from(m))
}

pub fn read_model(path: &Path) -> Result<HypersurfaceModel> {
    let s = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    model_from_json(&s).with_context(|| format!("parsing model file {}", path.display()))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexOut {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexOut {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusOut {
    pub re: f64,
    pub im: f64,
    pub mult: u32,
    pub blocks: Vec<usize>,
}

pub fn radii_out(set: &FocalSet) -> Vec<RadiusOut> {
    set.radii
        .iter()
        .map(|r| RadiusOut { re: r.value.re, im: r.value.im, mult: r.multiplicity, blocks: r.focal_blocks.clone() })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TermOut {
    pub block: usize,
    pub lambda: f64,
    pub mu: f64,
    pub mult: u32,
    pub in_s: bool,
    pub kernel: ComplexOut,
    /// `weight·mult`, zero outside `S`.
    pub term: ComplexOut,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityOut {
    pub radius: ComplexOut,
    pub total: ComplexOut,
    pub abs_total: f64,
    pub accept_tol: f64,
    pub passed: bool,
    pub terms: Vec<TermOut>,
}

impl From<&IdentityReport> for IdentityOut {
    fn from(r: &IdentityReport) -> Self {
        let terms = r
            .terms
            .iter()
            .map(|t| TermOut {
                block: t.block,
                lambda: t.lambda,
                mu: t.mu,
                mult: t.mult,
                in_s: t.in_s,
                kernel: t.kernel.into(),
                term: (t.weight * t.mult as f64).into(),
            })
            .collect();
        Self {
            radius: r.radius.into(),
            total: r.total.into(),
            abs_total: r.total.norm(),
            accept_tol: r.accept_tol,
            passed: r.passed,
            terms,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyOut {
    pub model: String,
    pub ambient: String,
    pub radius_free: Vec<usize>,
    pub reports: Vec<IdentityOut>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MuClassOut {
    pub mu: f64,
    pub lambdas: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremCOut {
    pub model: String,
    pub mu_classes: Vec<MuClassOut>,
    pub part_a: bool,
    pub s0: Option<f64>,
    pub s0_spread: Option<f64>,
    pub part_b: bool,
    pub offending_blocks: Vec<usize>,
    pub distinct_lambdas: usize,
    pub bound: Option<usize>,
    pub part_c: Option<bool>,
    pub passed: bool,
    pub notes: Vec<String>,
}

impl TheoremCOut {
    pub fn new(model: &str, r: &TheoremCReport) -> Self {
        Self {
            model: model.to_string(),
            mu_classes: r.mu_classes.iter().map(|c| MuClassOut { mu: c.mu, lambdas: c.lambdas.clone() }).collect(),
            part_a: r.part_a,
            s0: r.s0,
            s0_spread: finite(r.s0_spread),
            part_b: r.part_b,
            offending_blocks: r.offending.clone(),
            distinct_lambdas: r.distinct_lambdas,
            bound: r.bound,
            part_c: r.part_c,
            passed: r.passed,
            notes: r.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KappaOut {
    pub block: usize,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremDOut {
    pub model: String,
    pub real_radii: Vec<f64>,
    pub part_a: bool,
    pub s0: Option<f64>,
    pub kappas: Vec<KappaOut>,
    pub max_kappa: Option<f64>,
    pub part_b: bool,
    pub flow_start_error: Option<f64>,
    pub flow_horizontal_limit: Option<f64>,
    pub flow_vs_jacobi: Option<f64>,
    pub half_flow_radius: Option<f64>,
    pub part_c: bool,
    pub passed: bool,
    pub notes: Vec<String>,
}

/// JSON cannot carry NaN or infinities; those become `null`.
fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

impl TheoremDOut {
    pub fn new(model: &str, r: &TheoremDReport) -> Self {
        Self {
            model: model.to_string(),
            real_radii: r.real_radii.clone(),
            part_a: r.part_a,
            s0: r.s0,
            kappas: r.kappas.iter().map(|(b, k)| KappaOut { block: *b, re: k.re, im: k.im }).collect(),
            max_kappa: finite(r.max_kappa),
            part_b: r.part_b,
            flow_start_error: finite(r.flow_start_error),
            flow_horizontal_limit: finite(r.flow_horizontal_limit),
            flow_vs_jacobi: finite(r.flow_vs_jacobi),
            half_flow_radius: r.half_flow_radius,
            part_c: r.part_c,
            passed: r.passed,
            notes: r.notes.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spaceform_needs_c() {
        let s = r#"{"name":"x","ambient":{"kind":"spaceform"},"blocks":[]}"#;
        let e = model_from_json(s).unwrap_err().to_string();
        assert!(e.contains("ambient.c"), "{e}");
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let s = r#"{"name":"x","ambient":{"kind":"compact"},"blocks":[{"lambda":1,"mu":1,"mult":1,"extra":0}]}"#;
        let e = model_from_json(s).unwrap_err().to_string();
        assert!(e.contains("extra"), "{e}");
    }

    #[test]
    fn c_is_omitted_for_non_space_forms() {
        let m = HypersurfaceModel::new("n", AmbientKind::Noncompact, vec![CurvatureBlock::new(1.5, -1.0, 2)]);
        let s = model_to_json(&m);
        assert!(!s.contains("\"c\""));
        assert_eq!(model_from_json(&s).unwrap(), m);
    }
}
