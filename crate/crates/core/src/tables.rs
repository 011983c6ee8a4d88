//! Normalized coefficient families of the width-`k` descent distributions,
//! their symmetry and recurrence laws, and table emitters (CSV/JSON/LaTeX).
//!
//! Raw counts `d`/`d̄` split the signed descent counts between the
//! even-signed subgroup and its complement; `alpha`, `beta`, `delta`,
//! `deltabar` are those distributions with the multiplicity factor
//! (`M_{n,k}` times the appropriate power of two) divided out exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::dist::{closed_width_a, closed_width_b, closed_width_d, distribution, DistError};
use crate::enumerate::{histogram, EnumCaps, ExecMode, Group};
use crate::gamma::{gamma_expand, group_gamma, GammaError};
use crate::poly::{binomial, multinomial, IntPolynomial, WidthRangeError};
use crate::stats::{stat, StatKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffFamily {
    Alpha,
    Beta,
    Delta,
    DeltaBar,
    DD,
    DDBar,
    GammaA,
    GammaB,
    GammaD,
}

impl CoeffFamily {
    pub const ALL: [CoeffFamily; 9] = [
        CoeffFamily::Alpha,
        CoeffFamily::Beta,
        CoeffFamily::Delta,
        CoeffFamily::DeltaBar,
        CoeffFamily::DD,
        CoeffFamily::DDBar,
        CoeffFamily::GammaA,
        CoeffFamily::GammaB,
        CoeffFamily::GammaD,
    ];

    pub fn token(self) -> &'static str {
        match self {
            CoeffFamily::Alpha => "alpha",
            CoeffFamily::Beta => "beta",
            CoeffFamily::Delta => "delta",
            CoeffFamily::DeltaBar => "deltabar",
            CoeffFamily::DD => "dD",
            CoeffFamily::DDBar => "dDbar",
            CoeffFamily::GammaA => "gammaA",
            CoeffFamily::GammaB => "gammaB",
            CoeffFamily::GammaD => "gammaD",
        }
    }

    /// Number of `p` entries a row carries, trailing zeros included.
    pub fn width(self, n: u32, k: u32) -> usize {
        match self {
            CoeffFamily::Alpha => (n - k + 1) as usize,
            CoeffFamily::Beta
            | CoeffFamily::Delta
            | CoeffFamily::DeltaBar
            | CoeffFamily::DD
            | CoeffFamily::DDBar => (n - k + 2) as usize,
            CoeffFamily::GammaA => (n - k) as usize / 2 + 1,
            CoeffFamily::GammaB | CoeffFamily::GammaD => (n - k + 1) as usize / 2 + 1,
        }
    }
}

impl fmt::Display for CoeffFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown coefficient family {found:?}")]
pub struct ParseFamilyError {
    pub found: String,
}

impl FromStr for CoeffFamily {
    type Err = ParseFamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CoeffFamily::ALL
            .into_iter()
            .find(|f| f.token() == s)
            .ok_or_else(|| ParseFamilyError {
                found: s.to_string(),
            })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error(transparent)]
    Dist(#[from] DistError),
    #[error(transparent)]
    Gamma(#[from] GammaError),
    #[error(transparent)]
    Width(#[from] WidthRangeError),
    #[error(
        "{family}({n},{k}): coefficient {coeff} at p={p} is not divisible by the \
         normalization factor {scale}"
    )]
    IntegrityFailure {
        family: CoeffFamily,
        n: u32,
        k: u32,
        p: usize,
        coeff: BigInt,
        scale: BigInt,
    },
    #[error("{family}({n},{k}): distribution is unexpectedly not palindromic")]
    Asymmetric { family: CoeffFamily, n: u32, k: u32 },
    #[error("{family} rows follow no two-term recurrence law")]
    UnsupportedFamily { family: CoeffFamily },
}

/// One table row: the `p`-indexed values of a family at `(n, k)`.
/// `values` is `None` only for `gammaD` at `k = 1`, odd `n`, where the
/// distribution is not palindromic and no gamma vector exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffRow {
    pub family: CoeffFamily,
    pub n: u32,
    pub k: u32,
    pub values: Option<Vec<BigInt>>,
}

fn pad(mut values: Vec<BigInt>, width: usize) -> Vec<BigInt> {
    while values.len() < width {
        values.push(BigInt::zero());
    }
    values
}

fn divide_exact(
    poly: &IntPolynomial,
    scale: &BigInt,
    family: CoeffFamily,
    n: u32,
    k: u32,
) -> Result<Vec<BigInt>, TableError> {
    poly.coeffs()
        .iter()
        .enumerate()
        .map(|(p, coeff)| {
            let (q, r) = coeff.div_rem(scale);
            if r.is_zero() {
                Ok(q)
            } else {
                Err(TableError::IntegrityFailure {
                    family,
                    n,
                    k,
                    p,
                    coeff: coeff.clone(),
                    scale: scale.clone(),
                })
            }
        })
        .collect()
}

fn signed_counts(
    group_kind: CoeffFamily,
    n: u32,
    k: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<IntPolynomial, DistError> {
    match group_kind {
        // Raw counts over the even-signed subgroup.
        CoeffFamily::DD | CoeffFamily::Delta => distribution(
            StatKind::DesBK,
            Group::EvenSigned,
            n as usize,
            k,
            caps,
            mode,
        ),
        // Raw counts over the odd-signed complement: fold the whole signed
        // group but let the kernel skip even-signed words.
        _ => {
            stat(StatKind::DesBK, &crate::perm::SignedPermutation::identity(n as usize), k)?;
            let counts = histogram(Group::Hyperoctahedral, n as usize, caps, mode, |w| {
                if w.is_even_signed() {
                    None
                } else {
                    Some(stat(StatKind::DesBK, w, k).unwrap() as usize)
                }
            })?;
            Ok(IntPolynomial::from_counts(&counts))
        }
    }
}

/// Compute one normalized row. `alpha`, `beta`, `delta` (`k ≥ 2`), and the
/// gamma families come from the closed-form products; `delta` at `k = 1`,
/// `deltabar`, `dD`, and `dDbar` are enumerated (the odd-signed counts have
/// no product form).
pub fn row(
    family: CoeffFamily,
    n: u32,
    k: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<CoeffRow, TableError> {
    let d = n / k;
    let width = family.width(n, k);
    let values = match family {
        CoeffFamily::Alpha => {
            let poly = closed_width_a(n, k, caps, mode)?;
            Some(divide_exact(&poly, &multinomial(n, k)?, family, n, k)?)
        }
        CoeffFamily::Beta => {
            let poly = closed_width_b(n, k, caps, mode)?;
            let scale = multinomial(n, k)? * (BigInt::one() << (n - d));
            Some(divide_exact(&poly, &scale, family, n, k)?)
        }
        CoeffFamily::Delta => {
            let poly = closed_width_d(n, k, caps, mode)?.poly;
            if k == 1 {
                Some(poly.coeffs().to_vec())
            } else {
                let scale = multinomial(n, k)? * (BigInt::one() << (n - d - 1));
                Some(divide_exact(&poly, &scale, family, n, k)?)
            }
        }
        CoeffFamily::DeltaBar => {
            let poly = signed_counts(family, n, k, caps, mode)?;
            if k == 1 {
                Some(poly.coeffs().to_vec())
            } else {
                let scale = multinomial(n, k)? * (BigInt::one() << (n - d - 1));
                Some(divide_exact(&poly, &scale, family, n, k)?)
            }
        }
        CoeffFamily::DD | CoeffFamily::DDBar => {
            Some(signed_counts(family, n, k, caps, mode)?.coeffs().to_vec())
        }
        CoeffFamily::GammaA => {
            let poly = closed_width_a(n, k, caps, mode)?;
            let gamma = gamma_expand(&poly, (n - k) as usize)?;
            Some(gamma.ok_or(TableError::Asymmetric { family, n, k })?)
        }
        CoeffFamily::GammaB => {
            let poly = closed_width_b(n, k, caps, mode)?;
            let gamma = gamma_expand(&poly, (n - k + 1) as usize)?;
            Some(gamma.ok_or(TableError::Asymmetric { family, n, k })?)
        }
        CoeffFamily::GammaD => group_gamma(Group::EvenSigned, n, k, caps, mode)?.gamma,
    };
    Ok(CoeffRow {
        family,
        n,
        k,
        values: values.map(|v| pad(v, width)),
    })
}

fn entry(values: &[BigInt], p: i64) -> BigInt {
    if p < 0 || p as usize >= values.len() {
        BigInt::zero()
    } else {
        values[p as usize].clone()
    }
}

/// Symmetry law for the normalized even/odd split rows: for `n` even (any
/// `k`) or `n` odd with `k ≥ 2`, both `delta` and `deltabar` are palindromic
/// in `p ↦ n-k+1-p`; for `n` odd and `k = 1` the two families mirror each
/// other: `delta[p] = deltabar[n-p]`.
pub fn verify_symmetry(
    n: u32,
    k: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<bool, TableError> {
    let delta = row(CoeffFamily::Delta, n, k, caps, mode)?.values.unwrap();
    let deltabar = row(CoeffFamily::DeltaBar, n, k, caps, mode)?.values.unwrap();
    let top = (n - k + 1) as i64;
    if n.is_multiple_of(2) || k >= 2 {
        Ok((0..=top).all(|p| {
            entry(&delta, p) == entry(&delta, top - p)
                && entry(&deltabar, p) == entry(&deltabar, top - p)
        }))
    } else {
        Ok((0..=top).all(|p| {
            entry(&delta, p) == entry(&deltabar, top - p)
                && entry(&deltabar, p) == entry(&delta, top - p)
        }))
    }
}

/// Three-term recurrence for the raw width-1 even/odd split counts:
/// `d(n,p) = (2p+1)·d(n-1,p) + (2n-2p+1)·d(n-1,p-1) + (-1)^p·C(n-1,p-1)`,
/// and the same for `d̄` with the sign of the binomial term flipped.
pub fn verify_d_recurrence(n: u32, caps: &EnumCaps, mode: ExecMode) -> Result<bool, TableError> {
    assert!(n >= 2, "recurrence needs a previous rank");
    let d_now = row(CoeffFamily::DD, n, 1, caps, mode)?.values.unwrap();
    let d_prev = row(CoeffFamily::DD, n - 1, 1, caps, mode)?.values.unwrap();
    let dbar_now = row(CoeffFamily::DDBar, n, 1, caps, mode)?.values.unwrap();
    let dbar_prev = row(CoeffFamily::DDBar, n - 1, 1, caps, mode)?.values.unwrap();
    for p in 0..=n as i64 {
        let sign = if p % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let correction = &sign * binomial(n as i64 - 1, p - 1);
        let stretch = |prev: &[BigInt]| {
            BigInt::from(2 * p + 1) * entry(prev, p)
                + BigInt::from(2 * n as i64 - 2 * p + 1) * entry(prev, p - 1)
        };
        if entry(&d_now, p) != stretch(&d_prev) + &correction {
            return Ok(false);
        }
        if entry(&dbar_now, p) != stretch(&dbar_prev) - &correction {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Does `family(n, k, p) = family(n-2, k-1, p-1) + family(n-2, k-1, p)` hold
/// for every `p`? Valid for the four normalized/raw descent families and any
/// `2 ≤ k ≤ n-1`.
pub fn two_term_holds(
    family: CoeffFamily,
    n: u32,
    k: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<bool, TableError> {
    if !matches!(
        family,
        CoeffFamily::Alpha | CoeffFamily::Beta | CoeffFamily::Delta | CoeffFamily::DeltaBar
    ) {
        return Err(TableError::UnsupportedFamily { family });
    }
    assert!(k >= 2 && k < n, "need a valid predecessor row");
    let prev = row(family, n - 2, k - 1, caps, mode)?.values.unwrap();
    let now = row(family, n, k, caps, mode)?.values.unwrap();
    let top = now.len().max(prev.len() + 1) as i64;
    Ok((0..top).all(|p| entry(&now, p) == entry(&prev, p - 1) + entry(&prev, p)))
}

/// The width the two-term law is stated at: the smallest `k` that splits the
/// target (`n` for `alpha`, `n+1` for the signed families) as `2k + r` with
/// `0 ≤ r < k`.
pub fn stated_width(family: CoeffFamily, n: u32) -> u32 {
    let target = match family {
        CoeffFamily::Alpha => n,
        _ => n + 1,
    };
    target / 3 + 1
}

/// Two-term law at the stated width. Meaningful from `n = 4` for `alpha`
/// and `deltabar`, `n = 3` for `beta` and `delta`.
pub fn verify_partial_recurrence(
    family: CoeffFamily,
    n: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<bool, TableError> {
    two_term_holds(family, n, stated_width(family, n), caps, mode)
}

/// One probe of the two-term law. `stated` marks the `(n, k)` pairs the law
/// is asserted at; the rest are exploratory data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanEntry {
    pub family: CoeffFamily,
    pub n: u32,
    pub k: u32,
    pub stated: bool,
    pub holds: bool,
}

/// Probe the two-term law for every admissible `(family, n, k)` with
/// `n ≤ n_max`, reporting where it holds — no claim beyond the data.
pub fn recurrence_scan(
    n_max: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<Vec<ScanEntry>, TableError> {
    let families = [
        CoeffFamily::Alpha,
        CoeffFamily::Beta,
        CoeffFamily::Delta,
        CoeffFamily::DeltaBar,
    ];
    let mut entries = Vec::new();
    for family in families {
        let n_min = match family {
            CoeffFamily::Beta | CoeffFamily::Delta => 3,
            _ => 4,
        };
        for n in n_min..=n_max {
            for k in 2..n {
                entries.push(ScanEntry {
                    family,
                    n,
                    k,
                    stated: k == stated_width(family, n),
                    holds: two_term_holds(family, n, k, caps, mode)?,
                });
            }
        }
    }
    Ok(entries)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
    Latex,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown table format {found:?} (expected csv, json, or latex)")]
pub struct ParseFormatError {
    pub found: String,
}

impl FromStr for TableFormat {
    type Err = ParseFormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            "latex" => Ok(TableFormat::Latex),
            other => Err(ParseFormatError {
                found: other.to_string(),
            }),
        }
    }
}

/// Family shown by each numbered table.
pub fn table_family(id: u8) -> Option<CoeffFamily> {
    match id {
        1 => Some(CoeffFamily::Alpha),
        2 => Some(CoeffFamily::GammaA),
        3 => Some(CoeffFamily::Beta),
        4 => Some(CoeffFamily::GammaB),
        5 => Some(CoeffFamily::Delta),
        6 => Some(CoeffFamily::DeltaBar),
        7 => Some(CoeffFamily::GammaD),
        _ => None,
    }
}

/// The `(n, k)` keys each numbered table lists, in row order.
pub fn table_keys(id: u8) -> Vec<(u32, u32)> {
    let mut keys = Vec::new();
    match id {
        // The unsigned families stop at k = n-1 (the k = n rows are constant),
        // except the lone n = 1 row.
        1 | 2 => {
            keys.push((1, 1));
            for n in 2..=6 {
                for k in 1..n {
                    keys.push((n, k));
                }
            }
        }
        3..=6 => {
            for n in 1..=6 {
                for k in 1..=n {
                    keys.push((n, k));
                }
            }
        }
        7 => {
            for n in 2..=6 {
                for k in 1..=n {
                    keys.push((n, k));
                }
            }
        }
        _ => {}
    }
    keys
}

pub fn table_rows(
    id: u8,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<Vec<CoeffRow>, TableError> {
    let family = table_family(id).expect("table id in 1..=7");
    table_keys(id)
        .into_iter()
        .map(|(n, k)| row(family, n, k, caps, mode))
        .collect()
}

fn emit_csv(rows: &[CoeffRow]) -> String {
    let width = rows
        .iter()
        .filter_map(|r| r.values.as_ref().map(Vec::len))
        .max()
        .unwrap_or(0);
    let mut out = String::from("family,n,k");
    for p in 0..width {
        out.push_str(&format!(",p{p}"));
    }
    out.push('\n');
    for r in rows {
        out.push_str(&format!("{},{},{}", r.family, r.n, r.k));
        if let Some(values) = &r.values {
            for v in values {
                out.push_str(&format!(",{v}"));
            }
        }
        out.push('\n');
    }
    out
}

fn emit_json(rows: &[CoeffRow]) -> String {
    let family = rows.first().map(|r| r.family.token()).unwrap_or("");
    let body: Vec<String> = rows
        .iter()
        .map(|r| {
            let values = match &r.values {
                Some(v) => {
                    let items: Vec<String> = v.iter().map(BigInt::to_string).collect();
                    format!("[{}]", items.join(","))
                }
                None => "null".to_string(),
            };
            format!("{{\"n\":{},\"k\":{},\"values\":{}}}", r.n, r.k, values)
        })
        .collect();
    format!("{{\"family\":\"{}\",\"rows\":[{}]}}\n", family, body.join(","))
}

fn emit_latex(rows: &[CoeffRow]) -> String {
    let width = rows
        .iter()
        .filter_map(|r| r.values.as_ref().map(Vec::len))
        .max()
        .unwrap_or(0);
    let family = rows.first().map(|r| r.family.token()).unwrap_or("");
    let mut out = String::from("\\documentclass{article}\n\\begin{document}\n");
    out.push_str("\\begin{table}[ht]\n\\centering\n");
    out.push_str(&format!("\\begin{{tabular}}{{rr|{}}}\n", "r".repeat(width)));
    out.push_str("\\hline\n$n$ & $k$");
    for p in 0..width {
        out.push_str(&format!(" & $p={p}$"));
    }
    out.push_str(" \\\\\n\\hline\n");
    for r in rows {
        out.push_str(&format!("{} & {}", r.n, r.k));
        for p in 0..width {
            match &r.values {
                Some(v) if p < v.len() => out.push_str(&format!(" & {}", v[p])),
                _ => out.push_str(" & "),
            }
        }
        out.push_str(" \\\\\n");
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out.push_str(&format!("\\caption{{{family} coefficients}}\n"));
    out.push_str("\\end{table}\n\\end{document}\n");
    out
}

/// Render a numbered table. The CSV form is the golden-file format: a
/// `family,n,k,p0,…` header sized to the widest row, then one ragged line
/// per `(n, k)`; rows with no values end after the `k` column.
pub fn emit(
    id: u8,
    format: TableFormat,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<String, TableError> {
    let rows = table_rows(id, caps, mode)?;
    Ok(match format {
        TableFormat::Csv => emit_csv(&rows),
        TableFormat::Json => emit_json(&rows),
        TableFormat::Latex => emit_latex(&rows),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> EnumCaps {
        EnumCaps::default()
    }

    fn values(family: CoeffFamily, n: u32, k: u32) -> Vec<BigInt> {
        row(family, n, k, &caps(), ExecMode::Parallel)
            .unwrap()
            .values
            .unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn pinned_rows() {
        assert_eq!(values(CoeffFamily::Alpha, 6, 2), big(&[1, 8, 18, 8, 1]));
        assert_eq!(values(CoeffFamily::Beta, 5, 2), big(&[1, 10, 26, 10, 1]));
        assert_eq!(values(CoeffFamily::Delta, 3, 1), big(&[1, 10, 13, 0]));
        assert_eq!(
            values(CoeffFamily::DeltaBar, 6, 1),
            big(&[0, 364, 5264, 11784, 5264, 364, 0])
        );
        assert_eq!(values(CoeffFamily::GammaB, 5, 2), big(&[80, 480, 640]));
        assert_eq!(values(CoeffFamily::GammaA, 4, 2), big(&[6, 0]));
        assert_eq!(values(CoeffFamily::DD, 2, 1), big(&[1, 2, 1]));
        assert_eq!(values(CoeffFamily::DDBar, 2, 1), big(&[0, 4, 0]));
        let blank = row(CoeffFamily::GammaD, 3, 1, &caps(), ExecMode::Parallel).unwrap();
        assert_eq!(blank.values, None);
        assert_eq!(values(CoeffFamily::GammaD, 4, 1), big(&[1, 32, 48]));
    }

    #[test]
    fn raw_counts_split_the_group() {
        // b(n,k,p) = d(n,k,p) + d̄(n,k,p): the even/odd split is exhaustive.
        for n in 1..=4u32 {
            for k in 1..=n {
                let b = row(CoeffFamily::Beta, n, k, &caps(), ExecMode::Parallel).unwrap();
                let d_n = n / k;
                let scale = multinomial(n, k).unwrap() * (BigInt::one() << (n - d_n));
                let b_raw: Vec<BigInt> = b
                    .values
                    .unwrap()
                    .iter()
                    .map(|v| v * &scale)
                    .collect();
                let d = values(CoeffFamily::DD, n, k);
                let dbar = values(CoeffFamily::DDBar, n, k);
                let sum: Vec<BigInt> = d.iter().zip(&dbar).map(|(a, b)| a + b).collect();
                assert_eq!(b_raw, sum, "({n},{k})");
            }
        }
    }

    #[test]
    fn delta_families_coincide_at_larger_widths() {
        for n in 2..=5u32 {
            for k in 2..=n {
                assert_eq!(
                    values(CoeffFamily::Delta, n, k),
                    values(CoeffFamily::DeltaBar, n, k),
                    "({n},{k})"
                );
            }
        }
    }

    #[test]
    fn symmetry_laws() {
        let m = ExecMode::Parallel;
        assert!(verify_symmetry(6, 1, &caps(), m).unwrap());
        assert!(verify_symmetry(5, 2, &caps(), m).unwrap());
        assert!(verify_symmetry(5, 1, &caps(), m).unwrap());
        assert!(verify_symmetry(3, 1, &caps(), m).unwrap());
        assert!(verify_symmetry(4, 3, &caps(), m).unwrap());
        // The cross-mirror reads values from both families.
        let d5 = values(CoeffFamily::Delta, 5, 1);
        let dbar5 = values(CoeffFamily::DeltaBar, 5, 1);
        assert_eq!(d5[1], dbar5[4]);
        assert_eq!(d5[1], BigInt::from(116));
    }

    #[test]
    fn d_recurrence_small_ranks() {
        let m = ExecMode::Parallel;
        for n in 2..=5 {
            assert!(verify_d_recurrence(n, &caps(), m).unwrap(), "n={n}");
        }
    }

    #[test]
    fn stated_two_term_boundaries() {
        let m = ExecMode::Parallel;
        assert_eq!(stated_width(CoeffFamily::Alpha, 6), 3);
        assert_eq!(stated_width(CoeffFamily::Beta, 5), 3);
        for n in 4..=6 {
            assert!(
                verify_partial_recurrence(CoeffFamily::Alpha, n, &caps(), m).unwrap(),
                "alpha n={n}"
            );
        }
        for n in 3..=6 {
            assert!(
                verify_partial_recurrence(CoeffFamily::Beta, n, &caps(), m).unwrap(),
                "beta n={n}"
            );
        }
        // The signed-split families fail the law at the smallest ranks and
        // hold from n = 5 on: that boundary is pinned data, not a bug.
        assert!(!verify_partial_recurrence(CoeffFamily::Delta, 3, &caps(), m).unwrap());
        assert!(!verify_partial_recurrence(CoeffFamily::Delta, 4, &caps(), m).unwrap());
        assert!(verify_partial_recurrence(CoeffFamily::Delta, 5, &caps(), m).unwrap());
        assert!(verify_partial_recurrence(CoeffFamily::Delta, 6, &caps(), m).unwrap());
        assert!(!verify_partial_recurrence(CoeffFamily::DeltaBar, 4, &caps(), m).unwrap());
        assert!(verify_partial_recurrence(CoeffFamily::DeltaBar, 5, &caps(), m).unwrap());
        assert!(verify_partial_recurrence(CoeffFamily::DeltaBar, 6, &caps(), m).unwrap());
    }

    #[test]
    fn scan_marks_stated_regime() {
        let entries = recurrence_scan(5, &caps(), ExecMode::Parallel).unwrap();
        let stated: Vec<&ScanEntry> = entries.iter().filter(|e| e.stated).collect();
        assert!(stated
            .iter()
            .any(|e| e.family == CoeffFamily::Alpha && e.n == 4 && e.k == 2 && e.holds));
        assert!(stated
            .iter()
            .any(|e| e.family == CoeffFamily::Delta && e.n == 4 && e.k == 2 && !e.holds));
        assert!(entries
            .iter()
            .all(|e| e.k >= 2 && e.k < e.n && e.n <= 5));
    }

    #[test]
    fn family_tokens_round_trip() {
        for family in CoeffFamily::ALL {
            assert_eq!(family.token().parse::<CoeffFamily>().unwrap(), family);
        }
        assert!("Alpha".parse::<CoeffFamily>().is_err());
    }

    #[test]
    fn emission_formats() {
        let m = ExecMode::Parallel;
        let csv = emit(1, TableFormat::Csv, &caps(), m).unwrap();
        assert!(csv.starts_with("family,n,k,p0,p1,p2,p3,p4,p5\n"));
        assert!(csv.contains("\nalpha,6,2,1,8,18,8,1\n"));

        let csv7 = emit(7, TableFormat::Csv, &caps(), m).unwrap();
        assert!(csv7.contains("\ngammaD,3,1\n"));
        assert!(csv7.contains("\ngammaD,6,2,80,1760,3200\n"));

        let json = emit(4, TableFormat::Json, &caps(), m).unwrap();
        assert!(json.contains("{\"n\":4,\"k\":2,\"values\":[24,96]}"));
        assert!(json.starts_with("{\"family\":\"gammaB\","));

        let json7 = emit(7, TableFormat::Json, &caps(), m).unwrap();
        assert!(json7.contains("{\"n\":3,\"k\":1,\"values\":null}"));

        let latex = emit(2, TableFormat::Latex, &caps(), m).unwrap();
        assert!(latex.starts_with("\\documentclass{article}\n"));
        assert!(latex.contains("\\begin{tabular}{rr|rrr}"));
        assert!(latex.ends_with("\\end{document}\n"));
    }
}
