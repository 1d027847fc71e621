//! Restricted root data of the irreducible non-compact symmetric spaces.
//!
//! Each family takes its `dim G/K` from the classical dimension formula, not
//! from the root data, so `ambient_dim == rank + Σ mult` is a real check.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{RootSystemData, RootType};

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricSpaceEntry {
    /// 1 for the real forms, 2 for the complex groups viewed as real spaces.
    pub table: u8,
    pub label: String,
    pub quotient_name: String,
    pub rank: usize,
    /// `dim G/K`
    pub ambient_dim: usize,
    pub roots: RootSystemData,
}

impl SymmetricSpaceEntry {
    fn new(table: u8, label: &str, name: String, t: RootType, mults: &[u32], ambient_dim: usize) -> Self {
        let roots = RootSystemData::new(t, mults).expect("catalog root data is well formed");
        Self { table, label: label.to_string(), quotient_name: name, rank: t.rank(), ambient_dim, roots }
    }

    /// `dim G/K == rank + Σ_{α∈Δ₊} dim 𝔭_α`
    pub fn dimension_consistent(&self) -> bool {
        self.ambient_dim == self.rank + self.roots.total_multiplicity() as usize
    }
}

fn u(n: usize) -> u32 {
    n as u32
}

fn r(n: usize) -> u8 {
    n as u8
}

pub fn sl_real(n: usize) -> SymmetricSpaceEntry {
    SymmetricSpaceEntry::new(1, "AI", format!("SL({n},R)/SO({n})"), RootType::A(r(n - 1)), &[1], n * (n + 1) / 2 - 1)
}

pub fn su_star(n: usize) -> SymmetricSpaceEntry {
    let name = format!("SU*({})/Sp({n})", 2 * n);
    SymmetricSpaceEntry::new(1, "AII", name, RootType::A(r(n - 1)), &[4], 2 * n * n - n - 1)
}

pub fn su_pq(p: usize, q: usize) -> SymmetricSpaceEntry {
    let name = format!("SU({p},{q})/S(U({p})xU({q}))");
    let dim = 2 * p * q;
    if p == q {
        SymmetricSpaceEntry::new(1, "AIII", name, RootType::C(r(p)), &[2, 1], dim)
    } else if p == 1 {
        SymmetricSpaceEntry::new(1, "AIII", name, RootType::BC(1), &[u(2 * (q - 1)), 1], dim)
    } else {
        SymmetricSpaceEntry::new(1, "AIII", name, RootType::BC(r(p)), &[u(2 * (q - p)), 2, 1], dim)
    }
}

pub fn so_pq(p: usize, q: usize) -> SymmetricSpaceEntry {
    if p == 1 {
        let name = format!("SO0(1,{q})/SO({q})");
        return SymmetricSpaceEntry::new(1, "BDI", name, RootType::B(1), &[u(q - 1)], q);
    }
    let name = format!("SO0({p},{q})/SO({p})xSO({q})");
    SymmetricSpaceEntry::new(1, "BDI", name, RootType::B(r(p)), &[u(q - p), 1], p * q)
}

pub fn so_star(n: usize) -> SymmetricSpaceEntry {
    let name = format!("SO*({})/U({n})", 2 * n);
    let dim = n * (n - 1);
    if n.is_multiple_of(2) {
        SymmetricSpaceEntry::new(1, "DIII", name, RootType::C(r(n / 2)), &[4, 1], dim)
    } else {
        SymmetricSpaceEntry::new(1, "DIII", name, RootType::BC(r(n / 2)), &[4, 4, 1], dim)
    }
}

pub fn sp_real(n: usize) -> SymmetricSpaceEntry {
    SymmetricSpaceEntry::new(1, "CI", format!("Sp({n},R)/U({n})"), RootType::C(r(n)), &[1, 1], n * (n + 1))
}

pub fn sp_pq(p: usize, q: usize) -> SymmetricSpaceEntry {
    let name = format!("Sp({p},{q})/Sp({p})xSp({q})");
    let dim = 4 * p * q;
    if p == q {
        SymmetricSpaceEntry::new(1, "CII", name, RootType::C(r(p)), &[4, 3], dim)
    } else if p == 1 {
        SymmetricSpaceEntry::new(1, "CII", name, RootType::BC(1), &[u(4 * (q - 1)), 3], dim)
    } else {
        SymmetricSpaceEntry::new(1, "CII", name, RootType::BC(r(p)), &[u(4 * (q - p)), 4, 3], dim)
    }
}

/// The twelve exceptional non-compact real forms.
pub fn exceptional_entries() -> Vec<SymmetricSpaceEntry> {
    use RootType::*;
    let rows: [(&str, &str, RootType, &[u32], usize); 12] = [
        ("EI", "E6^6/Sp(4)", E6, &[1], 42),
        ("EII", "E6^2/SU(6)SU(2)", F4, &[2, 1], 40),
        ("EIII", "E6^-14/Spin(10)U(1)", BC(2), &[8, 6, 1], 32),
        ("EIV", "E6^-26/F4", A(2), &[8], 26),
        ("EV", "E7^7/(SU(8)/{+-1})", E7, &[1], 70),
        ("EVI", "E7^-5/SO'(12)SU(2)", F4, &[4, 1], 64),
        ("EVII", "E7^-25/E6U(1)", C(3), &[8, 1], 54),
        ("EVIII", "E8^8/SO'(16)", E8, &[1], 128),
        ("EIX", "E8^-24/E7Sp(1)", F4, &[8, 1], 112),
        ("FI", "F4^4/Sp(3)Sp(1)", F4, &[1, 1], 28),
        ("FII", "F4^-20/Spin(9)", BC(1), &[8, 7], 16),
        ("G", "G2^2/SO(4)", G2, &[1, 1], 8),
    ];
    rows.iter()
        .map(|(label, name, t, m, dim)| SymmetricSpaceEntry::new(1, label, name.to_string(), *t, m, *dim))
        .collect()
}

pub fn sl_complex(n: usize) -> SymmetricSpaceEntry {
    SymmetricSpaceEntry::new(2, "II-A", format!("SL({n},C)/SU({n})"), RootType::A(r(n - 1)), &[2], n * n - 1)
}

pub fn so_complex(n: usize) -> SymmetricSpaceEntry {
    let name = format!("SO({n},C)/SO({n})");
    let k = n / 2;
    let dim = n * (n - 1) / 2;
    if n % 2 == 1 {
        SymmetricSpaceEntry::new(2, "II-BD", name, RootType::B(r(k)), &[2, 2], dim)
    } else {
        SymmetricSpaceEntry::new(2, "II-BD", name, RootType::D(r(k)), &[2], dim)
    }
}

pub fn sp_complex(n: usize) -> SymmetricSpaceEntry {
    SymmetricSpaceEntry::new(2, "II-C", format!("Sp({n},C)/Sp({n})"), RootType::C(r(n)), &[2, 2], n * (2 * n + 1))
}

fn complex_exceptional() -> Vec<SymmetricSpaceEntry> {
    use RootType::*;
    let rows: [(&str, &str, RootType, &[u32], usize); 5] = [
        ("II-E6", "E6^C/E6", E6, &[2], 78),
        ("II-E7", "E7^C/E7", E7, &[2], 133),
        ("II-E8", "E8^C/E8", E8, &[2], 248),
        ("II-F4", "F4^C/F4", F4, &[2, 2], 52),
        ("II-G2", "G2^C/G2", G2, &[2, 2], 14),
    ];
    rows.iter()
        .map(|(label, name, t, m, dim)| SymmetricSpaceEntry::new(2, label, name.to_string(), *t, m, *dim))
        .collect()
}

/// The built-in census, parameter ranges as in the stored reference tables.
pub fn census() -> Vec<SymmetricSpaceEntry> {
    let mut out = Vec::new();
    out.extend((3..=8).map(sl_real));
    out.extend((3..=7).map(su_star));
    for p in 1..=5 {
        out.extend((p + 1..=6).map(|q| su_pq(p, q)));
    }
    out.extend((2..=6).map(|p| su_pq(p, p)));
    for p in 3..=7 {
        out.extend((p + 1..=8).map(|q| so_pq(p, q)));
    }
    out.extend((3..=8).map(|q| so_pq(2, q)));
    out.extend((2..=8).map(|q| so_pq(1, q)));
    out.extend((4..=10).map(so_star));
    out.extend((2..=7).map(sp_real));
    for p in 1..=5 {
        out.extend((p + 1..=6).map(|q| sp_pq(p, q)));
    }
    out.extend((2..=6).map(|p| sp_pq(p, p)));
    out.extend(exceptional_entries());
    out.extend((3..=8).map(sl_complex));
    out.extend((6..=12).map(so_complex));
    out.push(so_complex(5));
    out.extend((3..=7).map(sp_complex));
    out.extend(complex_exceptional());
    out
}

/// Real, complex and quaternionic hyperbolic spaces and the Cayley plane.
pub fn rank_one(name: &str) -> Option<SymmetricSpaceEntry> {
    let (kind, n) = name.split_at(name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len()));
    let n: usize = n.parse().ok().filter(|n| (2..=64).contains(n))?;
    match kind {
        "RH" => Some(so_pq(1, n)),
        "CH" => Some(su_pq(1, n)),
        "HH" => Some(sp_pq(1, n)),
        "OH" if n == 2 => Some(exceptional_entries().swap_remove(10)),
        _ => None,
    }
}

/// Finds an entry by quotient name, or a rank-one space by `RHn`, `CHn`, `HHn`, `OH2`.
pub fn lookup(name: &str) -> Option<SymmetricSpaceEntry> {
    census().into_iter().find(|e| e.quotient_name == name).or_else(|| rank_one(name))
}
