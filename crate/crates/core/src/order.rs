//! Counting weakly decreasing labelings attached to a word's width-`k`
//! descent structure, plus the generating-series and subset-sum identities
//! those counts satisfy.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::dist::{closed_width_b, DistError};
use crate::enumerate::{EnumCaps, ExecMode};
use crate::perm::SignedPermutation;
use crate::poly::{binomial, IntPolynomial};
use crate::stats::{stat, stat_set, StatError, StatKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error(transparent)]
    Stat(#[from] StatError),
    #[error("subset scan over {m} indices is past the 2^24 budget")]
    SubsetTooLarge { m: usize },
    #[error("left-peak subset sums need an unsigned word; found {negatives} negative entries")]
    SignedWord { negatives: usize },
}

/// Number of chains `p ≥ a_1 ≥ … ≥ a_m ≥ 0` (with `m = n-k+1`) that are
/// strict at the slots named by the word's width-`k` signed descent set:
/// `C(p - desB_k(w) + n - k + 1, n - k + 1)`.
pub fn order_count(w: &SignedPermutation, k: u32, p: u64) -> Result<BigInt, StatError> {
    let n = w.n() as i64;
    let des = stat(StatKind::DesBK, w, k)? as i64;
    let m = n - k as i64 + 1;
    Ok(binomial(p as i64 - des + m, m))
}

/// The same count by brute force: enumerate every `(a_1, …, a_m)` in
/// `{0..p}^m` and test the slot conditions. Exponential — only for
/// cross-checking tiny cases.
#[cfg(feature = "experimental")]
pub fn order_count_direct(w: &SignedPermutation, k: u32, p: u64) -> Result<BigInt, StatError> {
    let n = w.n();
    let strict = match stat_set(StatKind::DesBK, w, k)? {
        crate::stats::IndexSet::Indices(s) => s,
        _ => unreachable!("signed descents report index sets"),
    };
    let m = n - k as usize + 1;
    let mut a = vec![0u64; m];
    let mut total = BigInt::zero();
    loop {
        let mut ok = true;
        for slot in 0..m {
            let upper = if slot == 0 { p } else { a[slot - 1] };
            let lower = a[slot];
            if upper < lower || (strict.contains(&(slot as i64)) && upper == lower) {
                ok = false;
                break;
            }
        }
        if ok {
            total += 1;
        }
        // Odometer over {0..p}^m.
        let mut i = 0;
        loop {
            if i == m {
                return Ok(total);
            }
            if a[i] < p {
                a[i] += 1;
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

/// A power series kept to a fixed number of leading coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPrefix {
    coeffs: Vec<BigInt>,
}

impl SeriesPrefix {
    pub fn from_poly(poly: &IntPolynomial, len: usize) -> Self {
        let mut coeffs: Vec<BigInt> = poly.coeffs().iter().take(len).cloned().collect();
        coeffs.resize(len, BigInt::zero());
        SeriesPrefix { coeffs }
    }

    /// The all-ones series `1 + x + x² + …`, i.e. `1/(1-x)`.
    pub fn ones(len: usize) -> Self {
        SeriesPrefix {
            coeffs: vec![BigInt::one(); len],
        }
    }

    /// `1/(1-x)^m` by `m`-fold truncated multiplication of the all-ones
    /// series — deliberately avoids the binomial shortcut so the two can be
    /// checked against each other.
    pub fn geometric_power(m: u32, len: usize) -> Self {
        let ones = SeriesPrefix::ones(len);
        let mut out = SeriesPrefix::from_poly(&IntPolynomial::one(), len);
        for _ in 0..m {
            out = out.mul(&ones);
        }
        out
    }

    pub fn mul(&self, other: &SeriesPrefix) -> SeriesPrefix {
        let len = self.coeffs.len().min(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().take(len).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(len - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        SeriesPrefix { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

/// First `p_max + 1` order counts of `w`, straight from the binomial.
pub fn order_counts_prefix(
    w: &SignedPermutation,
    k: u32,
    p_max: u64,
) -> Result<Vec<BigInt>, StatError> {
    (0..=p_max).map(|p| order_count(w, k, p)).collect()
}

/// The same prefix from the generating identity
/// `Σ_p count(p) x^p = x^(desB_k(w)) / (1-x)^(n-k+2)`,
/// with the geometric powers built by series multiplication.
pub fn order_series_prefix(
    w: &SignedPermutation,
    k: u32,
    p_max: u64,
) -> Result<Vec<BigInt>, StatError> {
    let n = w.n() as u32;
    let des = stat(StatKind::DesBK, w, k)? as usize;
    let len = p_max as usize + 1;
    let numerator = SeriesPrefix::from_poly(&IntPolynomial::monomial(BigInt::one(), des), len);
    let series = numerator.mul(&SeriesPrefix::geometric_power(n - k + 2, len));
    Ok(series.coeffs().to_vec())
}

fn lpeak_set(w: &SignedPermutation, k: u32) -> Result<Vec<usize>, OrderError> {
    if !w.is_unsigned() {
        return Err(OrderError::SignedWord {
            negatives: w.neg_count(),
        });
    }
    match stat_set(StatKind::LpeakAK, w, k)? {
        crate::stats::IndexSet::Indices(s) => Ok(s.into_iter().map(|i| i as usize).collect()),
        _ => unreachable!("left peaks report index sets"),
    }
}

/// `Σ x^|D|` over subsets `D ⊆ {0, …, n-k}` whose symmetric difference with
/// the shifted copy `D + k` covers every width-`k` left peak of `w`.
/// Exhaustive over all `2^(n-k+1)` subsets; refuses more than 24 indices.
pub fn lpeak_subset_sum(w: &SignedPermutation, k: u32) -> Result<IntPolynomial, OrderError> {
    let peaks = lpeak_set(w, k)?;
    let m = w.n() - k as usize + 1;
    if m > 24 {
        return Err(OrderError::SubsetTooLarge { m });
    }
    let mut counts = vec![0u64; m + 1];
    for mask in 0u32..(1u32 << m) {
        // s ∈ D Δ (D+k) means exactly one of s, s-k lies in D.
        let covered = peaks.iter().all(|&s| {
            let hi = (mask >> s) & 1;
            let lo = (mask >> (s - k as usize)) & 1;
            hi ^ lo == 1
        });
        if covered {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(IntPolynomial::from_counts(&counts))
}

/// Closed form of [`lpeak_subset_sum`]: `(2x)^L (1+x)^(n-k+1-2L)` where `L`
/// is the word's width-`k` left-peak count. Exact for every word, because the
/// index pairs `{s-k, s}` over peaks `s` are pairwise disjoint — two left
/// peaks can never sit exactly `k` apart.
pub fn lpeak_subset_closed(w: &SignedPermutation, k: u32) -> Result<IntPolynomial, OrderError> {
    let peaks = lpeak_set(w, k)?;
    let m = w.n() - k as usize + 1;
    let l = peaks.len();
    debug_assert!(2 * l <= m, "peak pairs are disjoint, so 2L ≤ n-k+1");
    let two_x = IntPolynomial::from_i64(&[0, 2]);
    let one_plus_x = IntPolynomial::from_i64(&[1, 1]);
    Ok(&two_x.pow(l as u32) * &one_plus_x.pow((m - 2 * l) as u32))
}

/// Prefix comparison of the odd-power series against the width-`k` signed
/// descent polynomial: returns
/// `(Σ_{p ≤ p_max} (2p+1)^(n-k+1) x^p · (1-x)^(n-k+2)` truncated,
/// `closed product coefficients)` — both padded to `p_max + 1` entries.
///
/// The sides agree exactly when `k = 1`: that is the classical odd-power
/// identity for the signed descent polynomial. For `k ≥ 2` the left side
/// telescopes to the classical rank-`(n-k+1)` descent polynomial, which is
/// smaller than the width-`k` product (already at `(n,k) = (4,2)`,
/// coefficient 0 is 1 versus 24), so the comparison reports the mismatch.
/// The left-peak reconstruction in the `gamma` module is the identity that
/// does hold at every width.
pub fn odd_power_prefix(
    n: u32,
    k: u32,
    p_max: u64,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<(Vec<BigInt>, Vec<BigInt>), DistError> {
    let wb = closed_width_b(n, k, caps, mode)?;
    let len = p_max as usize + 1;
    let mut sum = IntPolynomial::zero();
    for p in 0..=p_max {
        let c = BigInt::from(2 * p + 1).pow(n - k + 1);
        sum = &sum + &IntPolynomial::monomial(c, p as usize);
    }
    let one_minus_x = IntPolynomial::from_i64(&[1, -1]);
    let product = &sum * &one_minus_x.pow(n - k + 2);
    let take = |poly: &IntPolynomial| -> Vec<BigInt> {
        let mut v: Vec<BigInt> = poly.coeffs().iter().take(len).cloned().collect();
        v.resize(len, BigInt::zero());
        v
    };
    Ok((take(&product), take(&wb)))
}
