//! Signed permutations in one-line notation.
//!
//! A word `(w(1), …, w(n))` of nonzero integers whose absolute values are
//! exactly `{1, …, n}` represents an element of the hyperoctahedral group
//! `B_n`; the implicit action on negative indices is `w(-i) = -w(i)`. The
//! all-positive words form the symmetric group `S_n`, and the words with an
//! even number of negative entries form `D_n`.
//!
//! This module also provides the chain decomposition of a word at a width
//! `k`: position `i` starts the chain `(w(i), w(i+k), w(i+2k), …)`, so a
//! word of length `n = d·k + r` (with `0 ≤ r < k`) splits into `r` chains
//! of length `d + 1` followed by `k - r` chains of length `d`. Chains are
//! standardized by replacing absolute values with their ranks while keeping
//! signs, which preserves the order of entries as signed integers.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("word is empty")]
    Empty,
    #[error("token {position} ({found:?}) is not a nonzero integer")]
    BadToken { position: usize, found: String },
    #[error("entry {position} is zero")]
    ZeroEntry { position: usize },
    #[error("entry {position} has absolute value {value}, outside 1..={n}")]
    OutOfRange { position: usize, value: u32, n: usize },
    #[error("entry {position} repeats absolute value {value}")]
    RepeatedValue { position: usize, value: u32 },
    #[error("width {k} is outside 1..={n}")]
    WidthOutOfRange { k: u32, n: usize },
}

/// An element of `B_n` in one-line notation.
///
/// The word is validated on construction; every accessor may assume the
/// absolute values are exactly `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    word: Vec<i32>,
}

impl SignedPermutation {
    /// Validates a one-line word. Entries must be nonzero and their
    /// absolute values must be exactly `{1, …, len}` with no repeats.
    pub fn new(word: Vec<i32>) -> Result<Self, PermError> {
        if word.is_empty() {
            return Err(PermError::Empty);
        }
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for (idx, &v) in word.iter().enumerate() {
            let position = idx + 1;
            if v == 0 {
                return Err(PermError::ZeroEntry { position });
            }
            let a = v.unsigned_abs();
            if a as usize > n {
                return Err(PermError::OutOfRange { position, value: a, n });
            }
            if seen[a as usize] {
                return Err(PermError::RepeatedValue { position, value: a });
            }
            seen[a as usize] = true;
        }
        Ok(Self { word })
    }

    /// The identity of `B_n`.
    pub fn identity(n: usize) -> Self {
        Self {
            word: (1..=n as i32).collect(),
        }
    }

    /// Construction for words already known to be valid (enumeration, ψ).
    pub(crate) fn from_trusted(word: Vec<i32>) -> Self {
        debug_assert!(Self::new(word.clone()).is_ok());
        Self { word }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    /// `w(i)` for `1 ≤ i ≤ n`.
    pub fn entry(&self, i: usize) -> i32 {
        self.word[i - 1]
    }

    /// The full map on `±1..±n`: `image(-i) = -image(i)`.
    pub fn image(&self, i: i64) -> i64 {
        let a = i.unsigned_abs() as usize;
        assert!(a >= 1 && a <= self.n(), "index {i} outside ±1..±{}", self.n());
        let v = i64::from(self.word[a - 1]);
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn neg_count(&self) -> usize {
        self.word.iter().filter(|&&v| v < 0).count()
    }

    pub fn is_unsigned(&self) -> bool {
        self.word.iter().all(|&v| v > 0)
    }

    /// Membership in `D_n`: an even number of negative entries.
    pub fn is_even_signed(&self) -> bool {
        self.neg_count().is_multiple_of(2)
    }

    /// Entrywise negation `w ↦ -w`; an involution on `B_n` that maps
    /// `D_n` onto itself exactly when `n` is even.
    pub fn negate(&self) -> Self {
        Self {
            word: self.word.iter().map(|&v| -v).collect(),
        }
    }

    pub(crate) fn word_mut(&mut self) -> &mut [i32] {
        &mut self.word
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.word {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPermutation({self})")
    }
}

impl FromStr for SignedPermutation {
    type Err = PermError;

    /// Accepts entries separated by whitespace and/or commas:
    /// `"4 -1 -3 -6 5 -7 2"` or `"4,-1,-3,-6,5,-7,2"`.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let mut word = Vec::new();
        for (idx, tok) in s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .enumerate()
        {
            let v: i32 = tok.parse().map_err(|_| PermError::BadToken {
                position: idx + 1,
                found: tok.to_string(),
            })?;
            word.push(v);
        }
        Self::new(word)
    }
}

/// Replaces entries by the rank of their absolute value (smallest ↦ 1),
/// keeping signs. Input entries must be nonzero with distinct absolute
/// values; the result is a valid word of the same length.
///
/// The map is strictly increasing on signed values, so every pairwise
/// comparison (and hence every comparison-based statistic) is preserved.
pub fn standardize(chain: &[i32]) -> Result<SignedPermutation, PermError> {
    if chain.is_empty() {
        return Err(PermError::Empty);
    }
    let mut abs: Vec<u32> = Vec::with_capacity(chain.len());
    for (idx, &v) in chain.iter().enumerate() {
        if v == 0 {
            return Err(PermError::ZeroEntry { position: idx + 1 });
        }
        let a = v.unsigned_abs();
        if abs.contains(&a) {
            return Err(PermError::RepeatedValue {
                position: idx + 1,
                value: a,
            });
        }
        abs.push(a);
    }
    let mut sorted = abs.clone();
    sorted.sort_unstable();
    let word = chain
        .iter()
        .map(|&v| {
            let rank = (sorted.binary_search(&v.unsigned_abs()).unwrap() + 1) as i32;
            if v < 0 {
                -rank
            } else {
                rank
            }
        })
        .collect();
    Ok(SignedPermutation::from_trusted(word))
}

/// The chain decomposition of a word at width `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDecomposition {
    n: usize,
    k: u32,
    chains: Vec<Vec<i32>>,
}

impl ChainDecomposition {
    /// Quotient `d` of `n = d·k + r`.
    pub fn quotient(&self) -> u32 {
        self.n as u32 / self.k
    }

    /// Remainder `r` of `n = d·k + r`; the first `r` chains are the long
    /// ones.
    pub fn remainder(&self) -> u32 {
        self.n as u32 % self.k
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The raw chains, chain `i` listing positions `i, i+k, i+2k, …`.
    pub fn chains(&self) -> &[Vec<i32>] {
        &self.chains
    }

    /// Reassembles the original word by interleaving the chains.
    pub fn interleave(&self) -> SignedPermutation {
        let mut word = vec![0i32; self.n];
        for (c, chain) in self.chains.iter().enumerate() {
            for (j, &v) in chain.iter().enumerate() {
                word[c + j * self.k as usize] = v;
            }
        }
        SignedPermutation::from_trusted(word)
    }

    /// Standardizes every chain; component `i` lies in `B_{d+1}` for
    /// `i ≤ r` and in `B_d` otherwise.
    pub fn standardized(&self) -> Vec<SignedPermutation> {
        self.chains
            .iter()
            .map(|c| standardize(c).expect("chains of a valid word standardize"))
            .collect()
    }
}

/// Splits `w` into its `k` chains. Requires `1 ≤ k ≤ n`.
pub fn decompose(w: &SignedPermutation, k: u32) -> Result<ChainDecomposition, PermError> {
    let n = w.n();
    if k == 0 || k as usize > n {
        return Err(PermError::WidthOutOfRange { k, n });
    }
    let k_us = k as usize;
    let mut chains = Vec::with_capacity(k_us);
    for start in 1..=k_us {
        let chain: Vec<i32> = (start..=n).step_by(k_us).map(|i| w.entry(i)).collect();
        chains.push(chain);
    }
    Ok(ChainDecomposition { n, k, chains })
}

/// The standardized chain decomposition `ψ(w) = (std chain 1, …, std chain k)`.
pub fn psi(w: &SignedPermutation, k: u32) -> Result<Vec<SignedPermutation>, PermError> {
    Ok(decompose(w, k)?.standardized())
}

/// Running example used across the test suite.
#[cfg(test)]
pub(crate) fn sample_b7() -> SignedPermutation {
    "4 -1 -3 -6 5 -7 2".parse().unwrap()
}
