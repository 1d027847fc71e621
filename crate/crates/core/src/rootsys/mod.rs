//! Restricted root systems with multiplicities.
//!
//! Roots are stored as integer vectors in a fixed Euclidean coordinate model
//! of each type, divided by a common `scale` (2 for the types whose standard
//! model uses half-integers). Pairings `alpha(v)` are evaluated exactly over
//! the rationals, which keeps the grouping of `|alpha(v)|` into classes free
//! of floating-point merging mistakes.

mod catalog;

pub use catalog::*;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{Signed, Zero};

use crate::model::AmbientKind;
use crate::{Error, Rational, Result};

/// Irreducible (possibly non-reduced) root system type with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootType {
    A(u8),
    B(u8),
    C(u8),
    D(u8),
    BC(u8),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl RootType {
    pub fn rank(self) -> usize {
        match self {
            RootType::A(n) | RootType::B(n) | RootType::C(n) | RootType::D(n) | RootType::BC(n) => {
                n as usize
            }
            RootType::E6 => 6,
            RootType::E7 => 7,
            RootType::E8 => 8,
            RootType::F4 => 4,
            RootType::G2 => 2,
        }
    }

    /// Number of coordinates of the Euclidean model the roots live in.
    pub fn coordinate_dim(self) -> usize {
        match self {
            RootType::A(n) => n as usize + 1,
            RootType::B(n) | RootType::C(n) | RootType::D(n) | RootType::BC(n) => n as usize,
            RootType::E6 | RootType::E7 | RootType::E8 => 8,
            RootType::F4 => 4,
            RootType::G2 => 3,
        }
    }

    /// Textbook count of positive roots.
    pub fn expected_positive_count(self) -> usize {
        let n = self.rank();
        match self {
            RootType::A(_) => n * (n + 1) / 2,
            RootType::B(_) | RootType::C(_) => n * n,
            RootType::D(_) => n * (n - 1),
            RootType::BC(_) => n * n + n,
            RootType::E6 => 36,
            RootType::E7 => 63,
            RootType::E8 => 120,
            RootType::F4 => 24,
            RootType::G2 => 6,
        }
    }

    fn check_rank(self) -> Result<()> {
        let ok = match self {
            RootType::A(n) | RootType::B(n) | RootType::BC(n) => n >= 1,
            RootType::C(n) => n >= 2,
            RootType::D(n) => n >= 3,
            _ => true,
        };
        if ok && self.rank() <= 32 {
            Ok(())
        } else {
            Err(Error::InvalidRootData(format!("unsupported rank for {self}")))
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootType::A(n) => write!(f, "A{n}"),
            RootType::B(n) => write!(f, "B{n}"),
            RootType::C(n) => write!(f, "C{n}"),
            RootType::D(n) => write!(f, "D{n}"),
            RootType::BC(n) => write!(f, "BC{n}"),
            RootType::E6 => f.write_str("E6"),
            RootType::E7 => f.write_str("E7"),
            RootType::E8 => f.write_str("E8"),
            RootType::F4 => f.write_str("F4"),
            RootType::G2 => f.write_str("G2"),
        }
    }
}

fn unit_vec(dim: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = c;
    v
}

fn pair_vec(dim: usize, i: usize, a: i64, j: usize, b: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = a;
    v[j] = b;
    v
}

fn norm_sq(v: &[i64]) -> i64 {
    v.iter().map(|x| x * x).sum()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `±e_i ± e_j`, `i < j`, multiplied by `c`.
fn pm_pairs(dim: usize, c: i64, out: &mut Vec<Vec<i64>>) {
    for i in 0..dim {
        for j in i + 1..dim {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(pair_vec(dim, i, a * c, j, b * c));
            }
        }
    }
}

/// E8 roots in the even coordinate model, doubled to integers.
fn e8_roots() -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(240);
    pm_pairs(8, 2, &mut out);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push((0..8).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    out
}

/// All roots of `t` and the common denominator of their coordinates.
fn all_roots(t: RootType) -> (i64, Vec<Vec<i64>>) {
    let d = t.coordinate_dim();
    let mut out = Vec::new();
    match t {
        RootType::A(_) => {
            for i in 0..d {
                for j in 0..d {
                    if i != j {
                        out.push(pair_vec(d, i, 1, j, -1));
                    }
                }
            }
            (1, out)
        }
        RootType::B(_) | RootType::C(_) | RootType::D(_) | RootType::BC(_) => {
            if d >= 2 {
                pm_pairs(d, 1, &mut out);
            }
            for i in 0..d {
                if matches!(t, RootType::B(_) | RootType::BC(_)) {
                    out.push(unit_vec(d, i, 1));
                    out.push(unit_vec(d, i, -1));
                }
                if matches!(t, RootType::C(_) | RootType::BC(_)) {
                    out.push(unit_vec(d, i, 2));
                    out.push(unit_vec(d, i, -2));
                }
            }
            (1, out)
        }
        RootType::E8 => (2, e8_roots()),
        RootType::E7 => {
            let h = [1i64; 8];
            (2, e8_roots().into_iter().filter(|r| dot(r, &h) == 0).collect())
        }
        RootType::E6 => {
            let h = [1i64; 8];
            let k = [0, 0, 0, 0, 0, 0, 2, 2];
            let roots = e8_roots()
                .into_iter()
                .filter(|r| dot(r, &h) == 0 && dot(r, &k) == 0)
                .collect();
            (2, roots)
        }
        RootType::F4 => {
            pm_pairs(4, 2, &mut out);
            for i in 0..4 {
                out.push(unit_vec(4, i, 2));
                out.push(unit_vec(4, i, -2));
            }
            for mask in 0u32..16 {
                out.push((0..4).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
            }
            (2, out)
        }
        RootType::G2 => {
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        out.push(pair_vec(3, i, 1, j, -1));
                    }
                }
                let mut long = vec![-1; 3];
                long[i] = 2;
                out.push(long.iter().map(|x| -x).collect());
                out.push(long);
            }
            (1, out)
        }
    }
}

fn lex_positive(v: &[i64]) -> bool {
    v.iter().find(|x| **x != 0).is_some_and(|x| *x > 0)
}

/// A restricted root system `Δ` with the root-space dimensions `dim 𝔭_α`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSystemData {
    type_tag: RootType,
    scale: i64,
    positive_roots: Vec<Vec<i64>>,
    /// `(|α|² in scaled coordinates, multiplicity)`, ascending by length.
    multiplicity: Vec<(i64, u32)>,
}

impl RootSystemData {
    /// Builds the positive system (lexicographic order) of `type_tag` and
    /// attaches one multiplicity per root length, shortest first.
    pub fn new(type_tag: RootType, mults_by_length: &[u32]) -> Result<Self> {
        type_tag.check_rank()?;
        let (scale, roots) = all_roots(type_tag);
        let positive_roots: Vec<Vec<i64>> = roots.into_iter().filter(|r| lex_positive(r)).collect();
        let mut lengths: Vec<i64> = positive_roots.iter().map(|r| norm_sq(r)).collect();
        lengths.sort_unstable();
        lengths.dedup();
        if lengths.len() != mults_by_length.len() {
            return Err(Error::InvalidRootData(format!(
                "{type_tag} has {} root lengths, got {} multiplicities",
                lengths.len(),
                mults_by_length.len()
            )));
        }
        if mults_by_length.contains(&0) {
            return Err(Error::InvalidRootData(format!("{type_tag}: zero multiplicity")));
        }
        let multiplicity = lengths.into_iter().zip(mults_by_length.iter().copied()).collect();
        Ok(Self { type_tag, scale, positive_roots, multiplicity })
    }

    pub fn type_tag(&self) -> RootType {
        self.type_tag
    }

    pub fn rank(&self) -> usize {
        self.type_tag.rank()
    }

    pub fn coordinate_dim(&self) -> usize {
        self.type_tag.coordinate_dim()
    }

    /// Common denominator of the stored integer coordinates.
    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn length_multiplicities(&self) -> &[(i64, u32)] {
        &self.multiplicity
    }

    /// `dim 𝔭_α`. Panics if `root` has a length foreign to this system.
    pub fn mult(&self, root: &[i64]) -> u32 {
        let n = norm_sq(root);
        self.multiplicity
            .iter()
            .find(|(l, _)| *l == n)
            .map(|(_, m)| *m)
            .unwrap_or_else(|| panic!("root of squared length {n} not in {}", self.type_tag))
    }

    /// `♯Δ₊`
    pub fn sharp_positive(&self) -> usize {
        self.positive_roots.len()
    }

    /// `♯Δ₊¹`, the positive roots with one-dimensional root space.
    pub fn sharp_rank_one(&self) -> usize {
        self.positive_roots.iter().filter(|r| self.mult(r) == 1).count()
    }

    /// `Σ_{α ∈ Δ₊} dim 𝔭_α`
    pub fn total_multiplicity(&self) -> u32 {
        self.positive_roots.iter().map(|r| self.mult(r)).sum()
    }

    /// `α(v)` with `v` given in the same coordinates as the roots.
    pub fn pairing(&self, root: &[i64], v: &[Rational]) -> Rational {
        let s: Rational = root
            .iter()
            .zip(v)
            .map(|(a, x)| *x * Rational::from_integer(*a as i128))
            .fold(Rational::zero(), |acc, t| acc + t);
        s / Rational::from_integer(self.scale as i128)
    }
}

/// One value of `|β(v)|` on `Δ₊|_{ℝv}` with the summed root-space dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct RootClass {
    /// `β(v)²`, exact.
    pub beta_sq: Rational,
    pub total_mult: u32,
    /// Member of `(Δ₊|_{ℝv})¹`, i.e. `total_mult == 1`.
    pub is_rank_one_class: bool,
}

impl RootClass {
    pub fn beta(&self) -> f64 {
        rational_to_f64(self.beta_sq).sqrt()
    }
}

pub(crate) fn rational_to_f64(q: Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// `Δ₊|_{ℝv}` grouped by `|β(v)|`, plus what falls into `Ker R(v)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootProjection {
    /// Ascending in `β²`; all `β > 0`.
    pub classes: Vec<RootClass>,
    /// `Σ dim 𝔭_α` over positive roots with `α(v) = 0`.
    pub kernel_mult: u32,
    pub rank: usize,
}

impl RootProjection {
    /// `♯(Δ₊|_{ℝv} ∖ (Δ₊|_{ℝv})¹)`
    pub fn sharp_non_rank_one(&self) -> usize {
        self.classes.iter().filter(|c| !c.is_rank_one_class).count()
    }

    /// `♯(Δ₊|_{ℝv})¹`
    pub fn sharp_rank_one(&self) -> usize {
        self.classes.iter().filter(|c| c.is_rank_one_class).count()
    }

    /// `dim Ker R(v)` on the tangent space: the rest of `𝔞` plus vanishing roots.
    pub fn jacobi_kernel_dim(&self) -> u32 {
        (self.rank as u32 - 1) + self.kernel_mult
    }

    /// Upper bound on the number of distinct principal curvatures.
    pub fn principal_curvature_bound(&self) -> usize {
        m_formula(self.sharp_non_rank_one(), self.sharp_rank_one(), self.rank)
    }

    /// Dimension of the tangent space the projection accounts for.
    pub fn tangent_dim(&self) -> u32 {
        self.classes.iter().map(|c| c.total_mult).sum::<u32>() + self.jacobi_kernel_dim()
    }
}

/// `2·♯(non rank-one) + ♯(rank-one)`, plus 1 at rank 2 and 2 at rank ≥ 3.
pub fn m_formula(non_rank_one: usize, rank_one: usize, rank: usize) -> usize {
    let base = 2 * non_rank_one + rank_one;
    match rank {
        0 | 1 => base,
        2 => base + 1,
        _ => base + 2,
    }
}

pub fn project_roots(roots: &RootSystemData, v: &[Rational]) -> Result<RootProjection> {
    if v.len() != roots.coordinate_dim() {
        return Err(Error::DimensionMismatch { expected: roots.coordinate_dim(), got: v.len() });
    }
    let mut classes: Vec<RootClass> = Vec::new();
    let mut kernel_mult = 0;
    for root in roots.positive_roots() {
        let p = roots.pairing(root, v);
        let m = roots.mult(root);
        if p.is_zero() {
            kernel_mult += m;
            continue;
        }
        let b2 = p.abs() * p.abs();
        match classes.iter_mut().find(|c| c.beta_sq == b2) {
            Some(c) => c.total_mult += m,
            None => classes.push(RootClass { beta_sq: b2, total_mult: m, is_rank_one_class: false }),
        }
    }
    if classes.is_empty() {
        return Err(Error::ZeroVector);
    }
    classes.sort_by_key(|c| c.beta_sq);
    for c in &mut classes {
        c.is_rank_one_class = c.total_mult == 1;
    }
    Ok(RootProjection { classes, kernel_mult, rank: roots.rank() })
}

/// `Spec R(v)` with multiplicities.
///
/// Non-compact ambients get `μ = -β²`; compact ambients use the sign-flipped
/// `μ = +β²`. The zero eigenvalue carries `rank - 1` plus the dimensions of
/// the root spaces that vanish on `v`, and is omitted when that is zero.
pub fn jacobi_spectrum(proj: &RootProjection, ambient: &AmbientKind) -> Vec<(f64, u32)> {
    let sign = if ambient.is_compact_like() { 1.0 } else { -1.0 };
    let mut out: Vec<(f64, u32)> =
        proj.classes.iter().map(|c| (sign * rational_to_f64(c.beta_sq), c.total_mult)).collect();
    let k = proj.jacobi_kernel_dim();
    if k > 0 {
        out.push((0.0, k));
    }
    out
}

/// `(♯Δ₊, ♯Δ₊¹, m_{G/K}, dim M)` for one symmetric space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusRow {
    pub sharp_dp: usize,
    pub sharp_dp1: usize,
    pub m: usize,
    pub dim_m: usize,
}

pub fn census_entry(entry: &SymmetricSpaceEntry) -> CensusRow {
    let roots = &entry.roots;
    let dp = roots.sharp_positive();
    let dp1 = roots.sharp_rank_one();
    CensusRow { sharp_dp: dp, sharp_dp1: dp1, m: m_formula(dp - dp1, dp1, entry.rank), dim_m: entry.ambient_dim - 1 }
}

/// Reflection `s_α(β) = β - 2(β·α)/(α·α) α`, exact on the integer model.
pub fn reflect(alpha: &[i64], beta: &[i64]) -> Option<Vec<i64>> {
    let num = 2 * dot(beta, alpha);
    let den = norm_sq(alpha);
    if num % den != 0 {
        return None;
    }
    let c = num / den;
    Some(beta.iter().zip(alpha).map(|(b, a)| b - c * a).collect())
}
