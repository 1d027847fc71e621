//! Computed census rows against the stored reference table.
//!
//! The reference values live in `data/reference_census.csv` and are compiled in,
//! so the diff never silently prefers one side.

use anyhow::{Context, Result};
use isocartan_core::rootsys::{self, CensusRow, SymmetricSpaceEntry};
use serde::{Deserialize, Serialize};

const REFERENCE_CSV: &str = include_str!("../data/reference_census.csv");

/// Families whose reference rows are known to disagree with some classifications.
/// A diff in one of these is reported but does not fail the run.
pub const FLAGGED_TYPES: &[&str] = &["EII", "DIII"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusLine {
    pub table: u8,
    #[serde(rename = "type")]
    pub label: String,
    pub quotient: String,
    pub sharp_dp: usize,
    pub sharp_dp1: usize,
    pub m: usize,
    pub dim_m: usize,
}

impl CensusLine {
    fn from_entry(e: &SymmetricSpaceEntry) -> Self {
        let CensusRow { sharp_dp, sharp_dp1, m, dim_m } = rootsys::census_entry(e);
        Self { table: e.table, label: e.label.clone(), quotient: e.quotient_name.clone(), sharp_dp, sharp_dp1, m, dim_m }
    }

    fn columns(&self) -> [(&'static str, usize); 4] {
        [("sharp_dp", self.sharp_dp), ("sharp_dp1", self.sharp_dp1), ("m", self.m), ("dim_m", self.dim_m)]
    }
}

pub fn computed() -> Vec<CensusLine> {
    rootsys::census().iter().map(CensusLine::from_entry).collect()
}

pub fn reference() -> Result<Vec<CensusLine>> {
    parse_csv(REFERENCE_CSV).context("stored reference census")
}

pub fn parse_csv(s: &str) -> Result<Vec<CensusLine>> {
    csv::Reader::from_reader(s.as_bytes())
        .deserialize()
        .enumerate()
        .map(|(i, r)| r.with_context(|| format!("census row {}", i + 2)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diff {
    pub quotient: String,
    #[serde(rename = "type")]
    pub label: String,
    /// Column name, or `row` when the space is missing on one side.
    pub column: String,
    pub computed: Option<usize>,
    pub stored: Option<usize>,
    pub flagged: bool,
}

/// Column-by-column comparison, keyed by quotient name, in computed order.
pub fn diff(computed: &[CensusLine], stored: &[CensusLine]) -> Vec<Diff> {
    let flagged = |label: &str| FLAGGED_TYPES.contains(&label);
    let mut out = Vec::new();
    for c in computed {
        match stored.iter().find(|s| s.quotient == c.quotient) {
            Some(s) => {
                for ((name, a), (_, b)) in c.columns().into_iter().zip(s.columns()) {
                    if a != b {
                        out.push(Diff {
                            quotient: c.quotient.clone(),
                            label: c.label.clone(),
                            column: name.to_string(),
                            computed: Some(a),
                            stored: Some(b),
                            flagged: flagged(&c.label),
                        });
                    }
                }
            }
            None => out.push(Diff {
                quotient: c.quotient.clone(),
                label: c.label.clone(),
                column: "row".into(),
                computed: Some(c.m),
                stored: None,
                flagged: flagged(&c.label),
            }),
        }
    }
    for s in stored.iter().filter(|s| !computed.iter().any(|c| c.quotient == s.quotient)) {
        out.push(Diff {
            quotient: s.quotient.clone(),
            label: s.label.clone(),
            column: "row".into(),
            computed: None,
            stored: Some(s.m),
            flagged: flagged(&s.label),
        });
    }
    out
}

pub fn to_csv(lines: &[CensusLine]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for l in lines {
        w.serialize(l)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn to_markdown(lines: &[CensusLine], diffs: &[Diff]) -> String {
    let mut s = String::new();
    for table in [1u8, 2] {
        let title = if table == 1 { "Real forms" } else { "Complex groups as real spaces" };
        s.push_str(&format!("## Table {table}: {title}\n\n"));
        s.push_str("| Type | G/K | ♯Δ₊ | ♯Δ₊¹ | m_{G/K} | dim M |\n|---|---|---:|---:|---:|---:|\n");
        for l in lines.iter().filter(|l| l.table == table) {
            s.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} |\n",
                l.label, l.quotient, l.sharp_dp, l.sharp_dp1, l.m, l.dim_m
            ));
        }
        s.push('\n');
    }
    s.push_str("## Differences from the stored census\n\n");
    if diffs.is_empty() {
        s.push_str("none\n");
    } else {
        s.push_str("| Type | G/K | column | computed | stored | flagged |\n|---|---|---|---:|---:|---|\n");
        for d in diffs {
            let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
            s.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} |\n",
                d.label,
                d.quotient,
                d.column,
                show(d.computed),
                show(d.stored),
                if d.flagged { "yes" } else { "no" }
            ));
        }
    }
    s
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusJson<'a> {
    pub rows: &'a [CensusLine],
    pub diffs: &'a [Diff],
}
