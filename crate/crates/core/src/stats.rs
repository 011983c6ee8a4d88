//! Width-`k` statistics on signed words.
//!
//! For a word `w` of length `n` and a width `1 ≤ k ≤ n`:
//!
//! * `desA_k`  — `#{1 ≤ i ≤ n-k : w(i) > w(i+k)}`
//! * `desB_k`  — the same with `i` from `0` and `w(0) = 0`
//! * `fdesB_k` — `desA_k + desB_k`
//! * `ndesB_k` — `#{1 ≤ i ≤ n-k : -w(i) > w(i+k)}`
//! * `invA_k`  — `#{(i,j) : j-i ∈ kℤ⁺, w(i) > w(j)}`
//! * `neg_k`   — `#{1 ≤ i ≤ ⌊n/k⌋ : w(ik) < 0}`
//! * `nsp_k`   — `#{(i,j) : j-i ∈ kℤ⁺, w(i) + w(j) < 0}`
//! * `invB_k`  — `invA_k + neg_k + nsp_k`
//! * `desD_k`  — `desB_k` restricted to even-signed words
//! * `ddesA_k` — `#{i : w(i-k) > w(i) > w(i+k)}` reading `+∞` outside `1..=n`
//! * `peak_k`  — `#{k+1 ≤ i ≤ n-k : w(i-k) < w(i) > w(i+k)}`
//! * `lpeakA_k`— the same with `i` from `k` and `w(0) = 0`
//! * `lengthB_k` — Coxeter length of the width-`k` chain content: classical
//!   `invB` of the standardized chain of positions `k, 2k, …` plus classical
//!   `invA + nsp` of every other standardized chain
//!
//! The unsuffixed kinds are the classical statistics, implemented as
//! independent direct loops; each width-`k` kind at `k = 1` agrees with its
//! classical counterpart. Comparisons always treat entries as signed
//! integers.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use thiserror::Error;

use crate::perm::{psi, SignedPermutation};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum StatKind {
    DesAK,
    InvAK,
    DesBK,
    FdesBK,
    NdesBK,
    NegK,
    NspK,
    InvBK,
    DesDK,
    DdesAK,
    PeakK,
    LpeakAK,
    LengthBK,
    DesA,
    DesB,
    FdesB,
    InvA,
    Neg,
    Nsp,
    InvB,
    Eps,
}

impl StatKind {
    pub const ALL: [StatKind; 21] = [
        StatKind::DesAK,
        StatKind::InvAK,
        StatKind::DesBK,
        StatKind::FdesBK,
        StatKind::NdesBK,
        StatKind::NegK,
        StatKind::NspK,
        StatKind::InvBK,
        StatKind::DesDK,
        StatKind::DdesAK,
        StatKind::PeakK,
        StatKind::LpeakAK,
        StatKind::LengthBK,
        StatKind::DesA,
        StatKind::DesB,
        StatKind::FdesB,
        StatKind::InvA,
        StatKind::Neg,
        StatKind::Nsp,
        StatKind::InvB,
        StatKind::Eps,
    ];

    pub fn token(self) -> &'static str {
        match self {
            StatKind::DesAK => "desA_k",
            StatKind::InvAK => "invA_k",
            StatKind::DesBK => "desB_k",
            StatKind::FdesBK => "fdesB_k",
            StatKind::NdesBK => "ndesB_k",
            StatKind::NegK => "neg_k",
            StatKind::NspK => "nsp_k",
            StatKind::InvBK => "invB_k",
            StatKind::DesDK => "desD_k",
            StatKind::DdesAK => "ddesA_k",
            StatKind::PeakK => "peak_k",
            StatKind::LpeakAK => "lpeakA_k",
            StatKind::LengthBK => "lengthB_k",
            StatKind::DesA => "desA",
            StatKind::DesB => "desB",
            StatKind::FdesB => "fdesB",
            StatKind::InvA => "invA",
            StatKind::Neg => "neg",
            StatKind::Nsp => "nsp",
            StatKind::InvB => "invB",
            StatKind::Eps => "eps",
        }
    }

    /// True for the kinds parameterized by a width; the classical kinds
    /// ignore the width argument.
    pub fn is_width(self) -> bool {
        matches!(
            self,
            StatKind::DesAK
                | StatKind::InvAK
                | StatKind::DesBK
                | StatKind::FdesBK
                | StatKind::NdesBK
                | StatKind::NegK
                | StatKind::NspK
                | StatKind::InvBK
                | StatKind::DesDK
                | StatKind::DdesAK
                | StatKind::PeakK
                | StatKind::LpeakAK
                | StatKind::LengthBK
        )
    }

    /// The classical statistic a width kind specializes to at `k = 1`,
    /// where one exists among the classical tags.
    pub fn classical_counterpart(self) -> Option<StatKind> {
        match self {
            StatKind::DesAK => Some(StatKind::DesA),
            StatKind::DesBK | StatKind::DesDK => Some(StatKind::DesB),
            StatKind::FdesBK => Some(StatKind::FdesB),
            StatKind::InvAK => Some(StatKind::InvA),
            StatKind::NegK => Some(StatKind::Neg),
            StatKind::NspK => Some(StatKind::Nsp),
            StatKind::InvBK | StatKind::LengthBK => Some(StatKind::InvB),
            _ => None,
        }
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown statistic {0:?}")]
pub struct ParseStatError(String);

impl FromStr for StatKind {
    type Err = ParseStatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StatKind::ALL
            .iter()
            .copied()
            .find(|k| k.token() == s)
            .ok_or_else(|| ParseStatError(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StatError {
    #[error("width {k} is outside 1..={n}")]
    WidthOutOfRange { k: u32, n: usize },
    #[error("desD_k requires an even number of negative entries; this word has {negatives}")]
    NotEvenSigned { negatives: usize },
    #[error("the width set K must be nonempty")]
    EmptyWidthSet,
    #[error("{kind} has no defining index set")]
    NoIndexSet { kind: StatKind },
    #[error("cannot union an index set with a pair set")]
    MixedUnion,
}

/// The defining set behind a counted statistic: descent-style positions, or
/// inversion-style pairs.
///
/// Pair sets use one encoding across all inversion parts so that unions
/// over several widths count correctly: an `invA`-type pair is `(i, j)`, the
/// negativity of position `j` is `(0, j)`, and a negative-sum pair is
/// `(-i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexSet {
    Indices(BTreeSet<i64>),
    Pairs(BTreeSet<(i64, i64)>),
}

impl IndexSet {
    pub fn len(&self) -> usize {
        match self {
            IndexSet::Indices(s) => s.len(),
            IndexSet::Pairs(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn indices(&self) -> Option<&BTreeSet<i64>> {
        match self {
            IndexSet::Indices(s) => Some(s),
            IndexSet::Pairs(_) => None,
        }
    }

    pub fn pairs(&self) -> Option<&BTreeSet<(i64, i64)>> {
        match self {
            IndexSet::Pairs(s) => Some(s),
            IndexSet::Indices(_) => None,
        }
    }

    /// Set union; both operands must be the same variant.
    pub fn union(self, other: IndexSet) -> Result<IndexSet, StatError> {
        match (self, other) {
            (IndexSet::Indices(mut a), IndexSet::Indices(b)) => {
                a.extend(b);
                Ok(IndexSet::Indices(a))
            }
            (IndexSet::Pairs(mut a), IndexSet::Pairs(b)) => {
                a.extend(b);
                Ok(IndexSet::Pairs(a))
            }
            _ => Err(StatError::MixedUnion),
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        match self {
            IndexSet::Indices(s) => {
                for (idx, v) in s.iter().enumerate() {
                    if idx > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
            }
            IndexSet::Pairs(s) => {
                for (idx, (a, b)) in s.iter().enumerate() {
                    if idx > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "({a},{b})")?;
                }
            }
        }
        write!(f, "}}")
    }
}

fn check_width(k: u32, n: usize) -> Result<(), StatError> {
    if k == 0 || k as usize > n {
        Err(StatError::WidthOutOfRange { k, n })
    } else {
        Ok(())
    }
}

/// Evaluates `kind` on `w` at width `k`. Classical kinds ignore `k`;
/// `desD_k` additionally requires an even-signed word.
pub fn stat(kind: StatKind, w: &SignedPermutation, k: u32) -> Result<u64, StatError> {
    let n = w.n();
    if kind.is_width() {
        check_width(k, n)?;
    }
    if kind == StatKind::DesDK && !w.is_even_signed() {
        return Err(StatError::NotEvenSigned {
            negatives: w.neg_count(),
        });
    }
    let k = k as usize;
    Ok(match kind {
        StatKind::DesAK => des_a_k(w, k),
        StatKind::DesBK | StatKind::DesDK => des_b_k(w, k),
        StatKind::FdesBK => des_a_k(w, k) + des_b_k(w, k),
        StatKind::NdesBK => ndes_b_k(w, k),
        StatKind::InvAK => inv_a_k(w, k),
        StatKind::NegK => neg_k(w, k),
        StatKind::NspK => nsp_k(w, k),
        StatKind::InvBK => inv_a_k(w, k) + neg_k(w, k) + nsp_k(w, k),
        StatKind::DdesAK => ddes_a_k(w, k),
        StatKind::PeakK => peak_k(w, k),
        StatKind::LpeakAK => lpeak_a_k(w, k),
        StatKind::LengthBK => length_b_k(w, k),
        StatKind::DesA => des_a(w),
        StatKind::DesB => des_a(w) + eps(w),
        StatKind::FdesB => 2 * des_a(w) + eps(w),
        StatKind::InvA => inv_a(w),
        StatKind::Neg => w.neg_count() as u64,
        StatKind::Nsp => nsp(w),
        StatKind::InvB => inv_a(w) + w.neg_count() as u64 + nsp(w),
        StatKind::Eps => eps(w),
    })
}

/// The defining index or pair set of `kind` on `w` at width `k`. Supported
/// for every width kind with a set-shaped definition; composite counts
/// (`fdesB_k`, `lengthB_k`) and the classical kinds have none.
pub fn stat_set(kind: StatKind, w: &SignedPermutation, k: u32) -> Result<IndexSet, StatError> {
    let n = w.n();
    if kind.is_width() {
        check_width(k, n)?;
    }
    if kind == StatKind::DesDK && !w.is_even_signed() {
        return Err(StatError::NotEvenSigned {
            negatives: w.neg_count(),
        });
    }
    let k = k as usize;
    match kind {
        StatKind::DesAK => Ok(indices((1..=n.saturating_sub(k)).filter(|&i| gt(w, i, i + k)))),
        StatKind::DesBK | StatKind::DesDK => {
            Ok(indices((0..=n - k).filter(|&i| val0(w, i) > w.entry(i + k))))
        }
        StatKind::NdesBK => {
            Ok(indices((1..=n.saturating_sub(k)).filter(|&i| -w.entry(i) > w.entry(i + k))))
        }
        StatKind::InvAK => Ok(IndexSet::Pairs(inv_a_pairs(w, k))),
        StatKind::NegK => Ok(IndexSet::Pairs(neg_pairs(w, k))),
        StatKind::NspK => Ok(IndexSet::Pairs(nsp_pairs(w, k))),
        StatKind::InvBK => {
            let mut set = inv_a_pairs(w, k);
            set.extend(neg_pairs(w, k));
            set.extend(nsp_pairs(w, k));
            Ok(IndexSet::Pairs(set))
        }
        StatKind::DdesAK => Ok(indices((1..=n).filter(|&i| is_ddes(w, i, k)))),
        StatKind::PeakK => {
            Ok(indices(((k + 1)..=n.saturating_sub(k)).filter(|&i| is_peak(w, i, k))))
        }
        StatKind::LpeakAK => {
            Ok(indices((k..=n.saturating_sub(k)).filter(|&i| is_lpeak(w, i, k))))
        }
        other => Err(StatError::NoIndexSet { kind: other }),
    }
}

/// Union of `stat_set` over every width in `K`.
pub fn stat_union(kind: StatKind, w: &SignedPermutation, ks: &[u32]) -> Result<IndexSet, StatError> {
    if ks.is_empty() {
        return Err(StatError::EmptyWidthSet);
    }
    let mut acc: Option<IndexSet> = None;
    for &k in ks {
        let s = stat_set(kind, w, k)?;
        acc = Some(match acc {
            None => s,
            Some(a) => a.union(s)?,
        });
    }
    Ok(acc.expect("ks is nonempty"))
}

/// Recovers `invB_k` from descents alone:
/// `Σ_{m ≥ 1, mk ≤ n} (desB_{mk} + ndesB_{mk})`.
pub fn inv_from_descents(w: &SignedPermutation, k: u32) -> Result<u64, StatError> {
    check_width(k, w.n())?;
    let mut total = 0;
    let mut width = k as usize;
    while width <= w.n() {
        total += des_b_k(w, width) + ndes_b_k(w, width);
        width += k as usize;
    }
    Ok(total)
}

/// Computes `|Inv_K^B|` by inclusion–exclusion over nonempty `K' ⊆ K`:
/// `Σ (-1)^(|K'|+1) · invB_{lcm K'}`, a term vanishing once `lcm K' > n`.
/// The lcm is taken in arbitrary precision, so large subsets simply drop out
/// rather than overflow.
pub fn inv_inclusion_exclusion(w: &SignedPermutation, ks: &[u32]) -> Result<u64, StatError> {
    if ks.is_empty() {
        return Err(StatError::EmptyWidthSet);
    }
    let n = w.n();
    let mut widths: Vec<u32> = ks.to_vec();
    widths.sort_unstable();
    widths.dedup();
    for &k in &widths {
        check_width(k, n)?;
    }
    let big_n = BigUint::from(n);
    let mut total: i128 = 0;
    for mask in 1u32..(1 << widths.len()) {
        let mut lcm = BigUint::one();
        let mut size = 0u32;
        for (bit, &k) in widths.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                lcm = lcm.lcm(&BigUint::from(k));
                size += 1;
            }
        }
        if lcm > big_n {
            continue;
        }
        let small: u32 = lcm.try_into().expect("lcm <= n fits");
        let term = stat(StatKind::InvBK, w, small)? as i128;
        if size % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    debug_assert!(total >= 0);
    Ok(total as u64)
}

fn indices(iter: impl Iterator<Item = usize>) -> IndexSet {
    IndexSet::Indices(iter.map(|i| i as i64).collect())
}

/// Value at position `i` with the type-B convention `w(0) = 0`.
fn val0(w: &SignedPermutation, i: usize) -> i32 {
    if i == 0 {
        0
    } else {
        w.entry(i)
    }
}

fn gt(w: &SignedPermutation, i: usize, j: usize) -> bool {
    w.entry(i) > w.entry(j)
}

fn des_a_k(w: &SignedPermutation, k: usize) -> u64 {
    (1..=w.n().saturating_sub(k)).filter(|&i| gt(w, i, i + k)).count() as u64
}

fn des_b_k(w: &SignedPermutation, k: usize) -> u64 {
    (0..=w.n() - k).filter(|&i| val0(w, i) > w.entry(i + k)).count() as u64
}

fn ndes_b_k(w: &SignedPermutation, k: usize) -> u64 {
    (1..=w.n().saturating_sub(k))
        .filter(|&i| -w.entry(i) > w.entry(i + k))
        .count() as u64
}

fn neg_k(w: &SignedPermutation, k: usize) -> u64 {
    (1..=w.n() / k).filter(|&m| w.entry(m * k) < 0).count() as u64
}

fn width_pairs(n: usize, k: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + k..=n).step_by(k).map(move |j| (i, j)))
}

fn inv_a_k(w: &SignedPermutation, k: usize) -> u64 {
    width_pairs(w.n(), k).filter(|&(i, j)| gt(w, i, j)).count() as u64
}

fn nsp_k(w: &SignedPermutation, k: usize) -> u64 {
    width_pairs(w.n(), k)
        .filter(|&(i, j)| w.entry(i) + w.entry(j) < 0)
        .count() as u64
}

fn inv_a_pairs(w: &SignedPermutation, k: usize) -> BTreeSet<(i64, i64)> {
    width_pairs(w.n(), k)
        .filter(|&(i, j)| gt(w, i, j))
        .map(|(i, j)| (i as i64, j as i64))
        .collect()
}

fn neg_pairs(w: &SignedPermutation, k: usize) -> BTreeSet<(i64, i64)> {
    (1..=w.n() / k)
        .filter(|&m| w.entry(m * k) < 0)
        .map(|m| (0i64, (m * k) as i64))
        .collect()
}

fn nsp_pairs(w: &SignedPermutation, k: usize) -> BTreeSet<(i64, i64)> {
    width_pairs(w.n(), k)
        .filter(|&(i, j)| w.entry(i) + w.entry(j) < 0)
        .map(|(i, j)| (-(i as i64), j as i64))
        .collect()
}

/// Value at `i` for the double-descent boundary: `+∞` outside `1..=n`.
fn val_inf(w: &SignedPermutation, i: isize) -> i64 {
    if i < 1 || i > w.n() as isize {
        i64::MAX
    } else {
        i64::from(w.entry(i as usize))
    }
}

fn is_ddes(w: &SignedPermutation, i: usize, k: usize) -> bool {
    let mid = i64::from(w.entry(i));
    val_inf(w, i as isize - k as isize) > mid && mid > val_inf(w, i as isize + k as isize)
}

fn ddes_a_k(w: &SignedPermutation, k: usize) -> u64 {
    (1..=w.n()).filter(|&i| is_ddes(w, i, k)).count() as u64
}

fn is_peak(w: &SignedPermutation, i: usize, k: usize) -> bool {
    w.entry(i - k) < w.entry(i) && w.entry(i) > w.entry(i + k)
}

fn peak_k(w: &SignedPermutation, k: usize) -> u64 {
    ((k + 1)..=w.n().saturating_sub(k))
        .filter(|&i| is_peak(w, i, k))
        .count() as u64
}

fn is_lpeak(w: &SignedPermutation, i: usize, k: usize) -> bool {
    val0(w, i - k) < w.entry(i) && w.entry(i) > w.entry(i + k)
}

fn lpeak_a_k(w: &SignedPermutation, k: usize) -> u64 {
    (k..=w.n().saturating_sub(k))
        .filter(|&i| is_lpeak(w, i, k))
        .count() as u64
}

/// Length through the chain decomposition: the chain of positions
/// `k, 2k, …` carries the type-B boundary, so it contributes a full
/// classical `invB`; every other chain contributes `invA + nsp`.
fn length_b_k(w: &SignedPermutation, k: usize) -> u64 {
    let comps = psi(w, k as u32).expect("width already validated");
    let last = comps.len() - 1;
    comps
        .iter()
        .enumerate()
        .map(|(idx, c)| {
            if idx == last {
                inv_a(c) + c.neg_count() as u64 + nsp(c)
            } else {
                inv_a(c) + nsp(c)
            }
        })
        .sum()
}

fn des_a(w: &SignedPermutation) -> u64 {
    (1..w.n()).filter(|&i| gt(w, i, i + 1)).count() as u64
}

fn eps(w: &SignedPermutation) -> u64 {
    u64::from(w.entry(1) < 0)
}

fn inv_a(w: &SignedPermutation) -> u64 {
    let n = w.n();
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| gt(w, i, j))
        .count() as u64
}

fn nsp(w: &SignedPermutation) -> u64 {
    let n = w.n();
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| w.entry(i) + w.entry(j) < 0)
        .count() as u64
}
