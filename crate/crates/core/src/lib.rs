//! Exact width-`k` descent and inversion statistics on the symmetric,
//! hyperoctahedral, and even-signed permutation groups, together with their
//! generating polynomials, gamma expansions, order-counting polynomials, and
//! coefficient tables.
//!
//! Everything is exact: counts are `u64`, polynomial coefficients are
//! arbitrary-precision integers. Group enumerations run either sequentially
//! or data-parallel (feature `parallel`, on by default); both paths fold
//! blocks of the same lexicographic stream in the same order, so results are
//! identical bit for bit.

pub mod dist;
pub mod enumerate;
pub mod gamma;
pub mod oeis;
pub mod order;
pub mod perm;
pub mod poly;
pub mod stats;
pub mod tables;
pub mod verify;

pub use dist::{
    bivariate_inv_nsp, closed_flag, closed_inversion_b, closed_width_a, closed_width_b,
    closed_width_d, distribution, eulerian_a, eulerian_b, eulerian_d, flag_poly, DistError,
    WdPoly,
};
pub use enumerate::{fold_blocks, histogram, stream, EnumCaps, EnumError, ExecMode, Group};
pub use gamma::{
    gamma_a_counts, gamma_b_from_lpeaks, gamma_expand, group_gamma, lpeak_counts,
    lpeak_reconstruction, report, GammaError, GammaReport,
};
pub use oeis::{
    closed_half_row, compare_eq5, ConventionReport, Eq5Report, OeisClient, OeisError,
    OeisSequence, SequenceSource,
};
pub use order::{
    odd_power_prefix, lpeak_subset_closed, lpeak_subset_sum, order_count, order_counts_prefix,
    order_series_prefix, OrderError, SeriesPrefix,
};
pub use perm::{decompose, psi, standardize, ChainDecomposition, PermError, SignedPermutation};
pub use poly::{
    binomial, is_palindromic, is_unimodal, multinomial, q_double_factorial_even, q_factorial,
    q_int, BivariatePolynomial, IntPolynomial,
};
pub use tables::{
    emit, recurrence_scan, row, stated_width, table_family, table_keys, table_rows,
    two_term_holds, verify_d_recurrence, verify_partial_recurrence, verify_symmetry, CoeffFamily,
    CoeffRow, ScanEntry, TableError, TableFormat,
};

pub use stats::{
    inv_from_descents, inv_inclusion_exclusion, stat, stat_set, stat_union, IndexSet, StatError,
    StatKind,
};
pub use verify::{parse_suites, run_suite, ParseSuiteError, SuiteId, SuiteOutcome, VerifyError};
