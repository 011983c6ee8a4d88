//! Heavyweight exhaustive checks, ignored by default; run with
//! `cargo test --test slow -- --ignored`.

use widthk::{
    closed_width_b, closed_width_d, distribution, run_suite, EnumCaps, ExecMode, Group, StatKind,
    SuiteId,
};

fn caps() -> EnumCaps {
    EnumCaps::default()
}

const MODE: ExecMode = ExecMode::Parallel;

#[test]
#[ignore = "walks all 645120 words of B_7 once per width"]
fn rank_seven_signed_products() {
    for k in 1..=7u32 {
        let enumerated =
            distribution(StatKind::DesBK, Group::Hyperoctahedral, 7, k, &caps(), MODE).unwrap();
        assert_eq!(enumerated, closed_width_b(7, k, &caps(), MODE).unwrap());
    }
}

#[test]
#[ignore = "walks all 322560 words of D_7 once per width"]
fn rank_seven_even_signed_products() {
    for k in 1..=7u32 {
        let enumerated =
            distribution(StatKind::DesDK, Group::EvenSigned, 7, k, &caps(), MODE).unwrap();
        assert_eq!(enumerated, closed_width_d(7, k, &caps(), MODE).unwrap().poly);
    }
}

#[test]
#[ignore = "exhaustive inversion identities over B_7"]
fn rank_seven_inversion_identities() {
    let outcome = run_suite(SuiteId::Eq1, 7, &caps(), MODE).unwrap();
    assert!(outcome.pass, "{}", outcome.render_line());
    let outcome = run_suite(SuiteId::Prop8, 7, &caps(), MODE).unwrap();
    assert!(outcome.pass, "{}", outcome.render_line());
}
