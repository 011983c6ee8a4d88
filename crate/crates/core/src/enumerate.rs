//! Exhaustive enumeration of `S_n`, `B_n`, and `D_n`.
//!
//! Words are generated in lexicographic order on signed entries
//! (`-n < … < -1 < 1 < … < n`). The stream splits into blocks by first
//! entry; folds evaluate blocks independently — sequentially or via rayon —
//! and always merge in block order, so both execution modes produce
//! identical results.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

use crate::perm::SignedPermutation;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    /// `S_n`: all-positive words; order `n!`.
    Symmetric,
    /// `B_n`: all signed words; order `2^n · n!`.
    Hyperoctahedral,
    /// `D_n`: signed words with an even number of negatives; order `2^(n-1) · n!`.
    EvenSigned,
}

impl Group {
    pub const ALL: [Group; 3] = [Group::Symmetric, Group::Hyperoctahedral, Group::EvenSigned];

    pub fn symbol(self) -> &'static str {
        match self {
            Group::Symmetric => "S",
            Group::Hyperoctahedral => "B",
            Group::EvenSigned => "D",
        }
    }

    pub fn contains(self, w: &SignedPermutation) -> bool {
        match self {
            Group::Symmetric => w.is_unsigned(),
            Group::Hyperoctahedral => true,
            Group::EvenSigned => w.is_even_signed(),
        }
    }

    pub fn order(self, n: usize) -> BigUint {
        let fact = (1..=n as u64).fold(BigUint::from(1u8), |acc, i| acc * i);
        match self {
            Group::Symmetric => fact,
            Group::Hyperoctahedral => fact << n,
            Group::EvenSigned => {
                if n == 0 {
                    fact
                } else {
                    fact << (n - 1)
                }
            }
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown group {0:?}; expected S, B, or D")]
pub struct ParseGroupError(String);

impl FromStr for Group {
    type Err = ParseGroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "S" | "s" => Ok(Group::Symmetric),
            "B" | "b" => Ok(Group::Hyperoctahedral),
            "D" | "d" => Ok(Group::EvenSigned),
            other => Err(ParseGroupError(other.to_string())),
        }
    }
}

/// Upper bounds on the rank `n` accepted for exhaustive enumeration.
/// The defaults keep any single enumeration under a few seconds.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct EnumCaps {
    pub symmetric: usize,
    pub signed: usize,
}

impl Default for EnumCaps {
    fn default() -> Self {
        Self {
            symmetric: 9,
            signed: 7,
        }
    }
}

impl EnumCaps {
    pub fn unlimited() -> Self {
        Self {
            symmetric: usize::MAX,
            signed: usize::MAX,
        }
    }

    pub fn cap_for(&self, group: Group) -> usize {
        match group {
            Group::Symmetric => self.symmetric,
            Group::Hyperoctahedral | Group::EvenSigned => self.signed,
        }
    }

    pub fn check(&self, group: Group, n: usize) -> Result<(), EnumError> {
        let cap = self.cap_for(group);
        if n > cap {
            Err(EnumError::CapExceeded {
                group,
                n,
                cap,
                order: group.order(n).to_string(),
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error(
        "enumerating {group}_{n} ({order} elements) exceeds the configured cap n <= {cap}; \
         raise the enumeration cap to proceed"
    )]
    CapExceeded {
        group: Group,
        n: usize,
        cap: usize,
        order: String,
    },
}

/// How a fold over the enumeration executes. `Parallel` silently degrades
/// to the sequential path when the `parallel` feature is disabled.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// In-place cursor over a (sub)stream of group elements. `advance` moves to
/// the next word and `current` borrows it without allocating, which keeps
/// the fold hot loop free of per-element clones.
#[derive(Clone, Debug)]
struct Walker {
    group: Group,
    perm: SignedPermutation,
    /// Bit `a` set ⇔ absolute value `a` occurs in the word.
    used: u32,
    /// Leading positions that never advance (block prefix).
    fixed: usize,
    state: State,
}

impl Walker {
    /// Cursor over all of `group` at rank `n` (`1 ≤ n ≤ 31`).
    fn new(group: Group, n: usize) -> Self {
        Self::with_prefix(group, n, &[])
    }

    /// Cursor over the words of `group` beginning with `prefix`. The prefix
    /// must itself be valid (nonzero, distinct absolute values in `1..=n`,
    /// positive for `Symmetric`).
    fn with_prefix(group: Group, n: usize, prefix: &[i32]) -> Self {
        assert!((1..=31).contains(&n), "rank {n} outside 1..=31");
        assert!(prefix.len() <= n);
        let mut word = vec![0i32; n];
        let mut used = 0u32;
        word[..prefix.len()].copy_from_slice(prefix);
        for &v in prefix {
            debug_assert!(v != 0 && v.unsigned_abs() as usize <= n);
            debug_assert!(used & (1 << v.unsigned_abs()) == 0);
            debug_assert!(group != Group::Symmetric || v > 0);
            used |= 1 << v.unsigned_abs();
        }
        let mut walker = Self {
            group,
            perm: SignedPermutation::identity(n),
            used,
            fixed: prefix.len(),
            state: State::Fresh,
        };
        walker.perm.word_mut().copy_from_slice(&word);
        walker.fill_from(prefix.len());
        walker
    }

    fn n(&self) -> usize {
        self.perm.n()
    }

    fn current(&self) -> &SignedPermutation {
        debug_assert!(self.state == State::Running);
        &self.perm
    }

    /// Smallest candidate value in the per-group order.
    fn first_candidate(&self) -> i32 {
        match self.group {
            Group::Symmetric => 1,
            _ => -(self.n() as i32),
        }
    }

    /// Successor of `v` in the per-group candidate order, ignoring usage.
    fn succ(&self, v: i32) -> Option<i32> {
        let n = self.n() as i32;
        match self.group {
            Group::Symmetric => (v < n).then_some(v + 1),
            _ => match v {
                -1 => Some(1),
                v if v == n => None,
                v => Some(v + 1),
            },
        }
    }

    fn is_free(&self, v: i32) -> bool {
        self.used & (1 << v.unsigned_abs()) == 0
    }

    /// Fills positions `from..n` with the smallest free values in order.
    fn fill_from(&mut self, from: usize) {
        for j in from..self.n() {
            let mut c = self.first_candidate();
            while !self.is_free(c) {
                c = self.succ(c).expect("a free value exists for every open position");
            }
            self.used |= 1 << c.unsigned_abs();
            self.perm.word_mut()[j] = c;
        }
    }

    /// One lexicographic step, ignoring the parity filter.
    fn advance_raw(&mut self) -> bool {
        let n = self.n();
        let mut i = n;
        while i > self.fixed {
            i -= 1;
            let cur = self.perm.word()[i];
            self.used &= !(1 << cur.unsigned_abs());
            let mut cand = self.succ(cur);
            while let Some(c) = cand {
                if self.is_free(c) {
                    self.perm.word_mut()[i] = c;
                    self.used |= 1 << c.unsigned_abs();
                    self.fill_from(i + 1);
                    return true;
                }
                cand = self.succ(c);
            }
        }
        false
    }

    /// Moves to the next element of the group; `false` once exhausted.
    fn advance(&mut self) -> bool {
        loop {
            let stepped = match self.state {
                State::Fresh => {
                    self.state = State::Running;
                    true
                }
                State::Running => self.advance_raw(),
                State::Done => false,
            };
            if !stepped {
                self.state = State::Done;
                return false;
            }
            if self.group.contains(&self.perm) {
                return true;
            }
        }
    }
}

/// Owning iterator over a whole group, yielding words in lexicographic
/// order. Obtained from [`stream`].
#[derive(Clone, Debug)]
pub struct PermIter {
    walker: Walker,
}

impl Iterator for PermIter {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        if self.walker.advance() {
            Some(self.walker.current().clone())
        } else {
            None
        }
    }
}

/// Iterator over all of `group` at rank `n`, cap-checked up front.
pub fn stream(group: Group, n: usize, caps: &EnumCaps) -> Result<PermIter, EnumError> {
    caps.check(group, n)?;
    Ok(PermIter {
        walker: Walker::new(group, n),
    })
}

/// The sub-streams with fixed first entry, in lexicographic order of that
/// entry; their concatenation is the full stream.
fn blocks(group: Group, n: usize) -> Vec<Walker> {
    let firsts: Vec<i32> = match group {
        Group::Symmetric => (1..=n as i32).collect(),
        _ => (-(n as i32)..=n as i32).filter(|&v| v != 0).collect(),
    };
    if n == 1 {
        // A one-letter word has no tail to vary; a single full walker
        // avoids duplicating the lone element across blocks.
        return vec![Walker::new(group, n)];
    }
    firsts
        .into_iter()
        .map(|f| Walker::with_prefix(group, n, &[f]))
        .collect()
}

fn fold_walker<T>(
    mut walker: Walker,
    init: &(impl Fn() -> T + Sync),
    kernel: &(impl Fn(&mut T, &SignedPermutation) + Sync),
) -> T {
    let mut acc = init();
    while walker.advance() {
        kernel(&mut acc, walker.current());
    }
    acc
}

/// Folds a kernel over the whole group. Each first-entry block is folded
/// from `init()`, then the block results are merged in block order, so the
/// outcome is independent of `mode` whenever `merge` is associative over
/// the block ordering (e.g. pointwise addition).
pub fn fold_blocks<T, K, M>(
    group: Group,
    n: usize,
    caps: &EnumCaps,
    mode: ExecMode,
    init: impl Fn() -> T + Sync,
    kernel: K,
    merge: M,
) -> Result<T, EnumError>
where
    T: Send,
    K: Fn(&mut T, &SignedPermutation) + Sync,
    M: Fn(T, T) -> T,
{
    caps.check(group, n)?;
    let blocks = blocks(group, n);
    let results: Vec<T> = match mode {
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            blocks
                .into_par_iter()
                .map(|w| fold_walker(w, &init, &kernel))
                .collect()
        }
        _ => blocks
            .into_iter()
            .map(|w| fold_walker(w, &init, &kernel))
            .collect(),
    };
    Ok(results.into_iter().fold(init(), merge))
}

/// Tallies `stat` over the group into `counts[value]`. A `None` from the
/// kernel skips the element, which is how sub-populations (e.g. the
/// odd-signed part of `B_n`) are tallied without a fourth group.
pub fn histogram<F>(
    group: Group,
    n: usize,
    caps: &EnumCaps,
    mode: ExecMode,
    stat: F,
) -> Result<Vec<u64>, EnumError>
where
    F: Fn(&SignedPermutation) -> Option<usize> + Sync,
{
    fold_blocks(
        group,
        n,
        caps,
        mode,
        Vec::new,
        |acc: &mut Vec<u64>, w| {
            if let Some(v) = stat(w) {
                if acc.len() <= v {
                    acc.resize(v + 1, 0);
                }
                acc[v] += 1;
            }
        },
        |mut a, b| {
            if a.len() < b.len() {
                a.resize(b.len(), 0);
            }
            for (i, v) in b.into_iter().enumerate() {
                a[i] += v;
            }
            a
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(group: Group, n: usize) -> Vec<SignedPermutation> {
        stream(group, n, &EnumCaps::default()).unwrap().collect()
    }

    #[test]
    fn orders_match_counts() {
        for n in 1..=5 {
            assert_eq!(
                BigUint::from(collect(Group::Symmetric, n).len()),
                Group::Symmetric.order(n)
            );
        }
        for n in 1..=4 {
            assert_eq!(
                BigUint::from(collect(Group::Hyperoctahedral, n).len()),
                Group::Hyperoctahedral.order(n)
            );
            assert_eq!(
                BigUint::from(collect(Group::EvenSigned, n).len()),
                Group::EvenSigned.order(n)
            );
        }
        assert_eq!(Group::Hyperoctahedral.order(7), BigUint::from(645_120u32));
        assert_eq!(Group::EvenSigned.order(1), BigUint::from(1u8));
    }

    #[test]
    fn b2_stream_is_exactly_lexicographic() {
        let words: Vec<Vec<i32>> = collect(Group::Hyperoctahedral, 2)
            .iter()
            .map(|w| w.word().to_vec())
            .collect();
        assert_eq!(
            words,
            vec![
                vec![-2, -1],
                vec![-2, 1],
                vec![-1, -2],
                vec![-1, 2],
                vec![1, -2],
                vec![1, 2],
                vec![2, -1],
                vec![2, 1],
            ]
        );
    }

    #[test]
    fn streams_are_strictly_increasing() {
        for group in Group::ALL {
            let words = collect(group, 4);
            for pair in words.windows(2) {
                assert!(pair[0].word() < pair[1].word());
            }
            assert!(words.iter().all(|w| group.contains(w)));
        }
    }

    #[test]
    fn even_signed_is_the_parity_filtered_signed_stream() {
        let filtered: Vec<SignedPermutation> = collect(Group::Hyperoctahedral, 4)
            .into_iter()
            .filter(|w| w.is_even_signed())
            .collect();
        assert_eq!(collect(Group::EvenSigned, 4), filtered);
    }

    #[test]
    fn blocks_concatenate_to_the_stream() {
        for group in Group::ALL {
            for n in 1..=4 {
                let mut from_blocks = Vec::new();
                for mut w in blocks(group, n) {
                    while w.advance() {
                        from_blocks.push(w.current().clone());
                    }
                }
                assert_eq!(from_blocks, collect(group, n), "{group}_{n}");
            }
        }
    }

    #[test]
    fn caps_reject_oversized_ranks() {
        let caps = EnumCaps::default();
        assert!(stream(Group::Symmetric, 9, &caps).is_ok());
        let err = stream(Group::Symmetric, 10, &caps).unwrap_err();
        assert!(matches!(err, EnumError::CapExceeded { cap: 9, n: 10, .. }));
        assert!(err.to_string().contains("3628800"));
        assert!(stream(Group::Hyperoctahedral, 8, &caps).is_err());
        assert!(stream(Group::EvenSigned, 8, &caps).is_err());
        assert!(stream(Group::EvenSigned, 8, &EnumCaps::unlimited()).is_ok());
    }

    #[test]
    fn histogram_modes_agree() {
        let stat = |w: &SignedPermutation| Some(w.neg_count());
        let seq = histogram(
            Group::Hyperoctahedral,
            5,
            &EnumCaps::default(),
            ExecMode::Sequential,
            stat,
        )
        .unwrap();
        let par = histogram(
            Group::Hyperoctahedral,
            5,
            &EnumCaps::default(),
            ExecMode::Parallel,
            stat,
        )
        .unwrap();
        assert_eq!(seq, par);
        // neg_count over B_5 is binomial(5, j) * 5!.
        assert_eq!(seq, vec![120, 600, 1200, 1200, 600, 120]);
    }

    #[test]
    fn histogram_kernel_can_filter() {
        let odd_total: u64 = histogram(
            Group::Hyperoctahedral,
            4,
            &EnumCaps::default(),
            ExecMode::Sequential,
            |w| (!w.is_even_signed()).then_some(0),
        )
        .unwrap()
        .iter()
        .sum();
        assert_eq!(BigUint::from(odd_total), Group::EvenSigned.order(4));
    }

    #[test]
    fn group_tokens_parse() {
        assert_eq!("S".parse::<Group>().unwrap(), Group::Symmetric);
        assert_eq!("b".parse::<Group>().unwrap(), Group::Hyperoctahedral);
        assert_eq!("D".parse::<Group>().unwrap(), Group::EvenSigned);
        assert!("A".parse::<Group>().is_err());
    }
}
