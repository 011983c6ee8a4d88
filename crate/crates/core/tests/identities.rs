//! Cross-module identities exercised through the public API: chain
//! decompositions, classical specializations, negation symmetry, and the
//! shape guarantees behind every gamma vector. Randomized cases use proptest;
//! the structural identities are also checked exhaustively at small rank.

use proptest::prelude::*;
use widthk::{
    distribution, group_gamma, inv_from_descents, psi, row, stat, CoeffFamily, EnumCaps,
    ExecMode, Group, SignedPermutation, StatKind,
};

fn caps() -> EnumCaps {
    EnumCaps::default()
}

const MODE: ExecMode = ExecMode::Parallel;

fn words(max_n: usize) -> impl Strategy<Value = SignedPermutation> {
    (1..=max_n).prop_flat_map(|n| {
        (
            Just((1..=n as i32).collect::<Vec<i32>>()).prop_shuffle(),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(|(mut values, signs)| {
                for (v, flip) in values.iter_mut().zip(signs) {
                    if flip {
                        *v = -*v;
                    }
                }
                SignedPermutation::new(values).unwrap()
            })
    })
}

fn words_with_width(max_n: usize) -> impl Strategy<Value = (SignedPermutation, u32)> {
    words(max_n).prop_flat_map(|w| {
        let n = w.n() as u32;
        (Just(w), 1..=n)
    })
}

/// Width-k descents split over the standardized chains: the chain holding
/// position k keeps the signed boundary comparison, the rest contribute
/// plain descents.
fn descents_from_chains(w: &SignedPermutation, k: u32) -> u64 {
    let comps = psi(w, k).unwrap();
    comps
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let kind = if i == k as usize - 1 {
                StatKind::DesB
            } else {
                StatKind::DesA
            };
            stat(kind, c, 1).unwrap()
        })
        .sum()
}

proptest! {
    #[test]
    fn parse_display_round_trip(w in words(7)) {
        prop_assert_eq!(w.to_string().parse::<SignedPermutation>().unwrap(), w);
    }

    #[test]
    fn negation_complements_width_descents((w, k) in words_with_width(7)) {
        let n = w.n() as u64;
        let lhs = stat(StatKind::DesBK, &w.negate(), k).unwrap();
        let rhs = stat(StatKind::DesBK, &w, k).unwrap();
        prop_assert_eq!(lhs, n - k as u64 + 1 - rhs);
    }

    #[test]
    fn width_one_specializes_to_classical(w in words(7)) {
        let pairs = [
            (StatKind::DesAK, StatKind::DesA),
            (StatKind::DesBK, StatKind::DesB),
            (StatKind::FdesBK, StatKind::FdesB),
            (StatKind::InvAK, StatKind::InvA),
            (StatKind::NegK, StatKind::Neg),
            (StatKind::NspK, StatKind::Nsp),
            (StatKind::InvBK, StatKind::InvB),
            (StatKind::LengthBK, StatKind::InvB),
        ];
        for (wide, classical) in pairs {
            prop_assert_eq!(
                stat(wide, &w, 1).unwrap(),
                stat(classical, &w, 1).unwrap(),
                "{} at width 1 vs {}", wide, classical
            );
        }
    }

    #[test]
    fn inversions_recovered_two_ways((w, k) in words_with_width(7)) {
        let direct = stat(StatKind::InvBK, &w, k).unwrap();
        prop_assert_eq!(inv_from_descents(&w, k).unwrap(), direct);
        prop_assert_eq!(stat(StatKind::LengthBK, &w, k).unwrap(), direct);
    }

    #[test]
    fn descents_decompose_through_chains((w, k) in words_with_width(7)) {
        prop_assert_eq!(
            descents_from_chains(&w, k),
            stat(StatKind::DesBK, &w, k).unwrap()
        );
    }
}

#[test]
fn chain_decomposition_exhaustive_at_rank_four() {
    for w in widthk::stream(Group::Hyperoctahedral, 4, &caps()).unwrap() {
        for k in 1..=4u32 {
            assert_eq!(
                descents_from_chains(&w, k),
                stat(StatKind::DesBK, &w, k).unwrap(),
                "descent split fails at w = {w}, k = {k}"
            );
            assert_eq!(
                stat(StatKind::LengthBK, &w, k).unwrap(),
                stat(StatKind::InvBK, &w, k).unwrap(),
                "length split fails at w = {w}, k = {k}"
            );
        }
    }
}

#[test]
fn gamma_reports_are_internally_consistent() {
    for n in 1..=6u32 {
        for k in 1..=n {
            for group in [Group::Symmetric, Group::Hyperoctahedral, Group::EvenSigned] {
                let r = group_gamma(group, n, k, &caps(), MODE).unwrap();
                if r.gamma.is_some() {
                    assert!(r.palindromic, "{group:?} ({n}, {k}): gamma without symmetry");
                }
                if r.gamma_nonnegative() {
                    assert!(r.palindromic && r.unimodal,
                        "{group:?} ({n}, {k}): nonnegative gamma must force shape");
                }
                if group != Group::EvenSigned {
                    assert!(
                        r.gamma_nonnegative(),
                        "{group:?} ({n}, {k}): descent polynomial should be gamma-positive"
                    );
                }
            }
        }
    }
}

#[test]
fn split_families_coincide_above_width_one() {
    for n in 2..=5u32 {
        for k in 2..=n {
            assert_eq!(
                row(CoeffFamily::Delta, n, k, &caps(), MODE).unwrap().values,
                row(CoeffFamily::DeltaBar, n, k, &caps(), MODE).unwrap().values,
                "split rows differ at ({n}, {k})"
            );
        }
    }
}

#[test]
fn execution_modes_agree() {
    for (kind, group) in [
        (StatKind::DesBK, Group::Hyperoctahedral),
        (StatKind::InvAK, Group::Symmetric),
        (StatKind::DesDK, Group::EvenSigned),
    ] {
        for k in 1..=5u32 {
            assert_eq!(
                distribution(kind, group, 5, k, &caps(), ExecMode::Sequential).unwrap(),
                distribution(kind, group, 5, k, &caps(), ExecMode::Parallel).unwrap(),
                "modes disagree for {kind} over {group:?} at k = {k}"
            );
        }
    }
}
