//! Gamma vectors: expanding a palindromic polynomial of center `d/2` in the
//! basis `x^p (1+x)^(d-2p)`, and the combinatorial count formulas that
//! reproduce those coefficients directly.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::dist::{
    closed_width_a, closed_width_b, closed_width_d, distribution, DistError,
};
use crate::enumerate::{histogram, EnumCaps, ExecMode, Group};
use crate::poly::{is_palindromic, is_unimodal, IntPolynomial};
use crate::stats::{stat, StatKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GammaError {
    #[error(transparent)]
    Dist(#[from] DistError),
    #[error("expansion with symmetry center {d}/2 needs degree ≤ {d}, got {degree}")]
    DegreeAboveSymmetry { degree: usize, d: usize },
}

/// Expand `poly` in the basis `x^p (1+x)^(d-2p)`, `0 ≤ p ≤ ⌊d/2⌋`, by peeling
/// coefficients from the bottom degree up. The expansion exists exactly when
/// `poly` is palindromic with center `d/2`; otherwise `None`.
pub fn gamma_expand(
    poly: &IntPolynomial,
    d: usize,
) -> Result<Option<Vec<BigInt>>, GammaError> {
    if let Some(degree) = poly.degree() {
        if degree > d {
            return Err(GammaError::DegreeAboveSymmetry { degree, d });
        }
    }
    let one_plus_x = IntPolynomial::from_i64(&[1, 1]);
    let mut remainder = poly.clone();
    let mut gamma = Vec::with_capacity(d / 2 + 1);
    for p in 0..=(d / 2) {
        let g = remainder.coeff(p);
        if !g.is_zero() {
            let basis =
                &IntPolynomial::monomial(g.clone(), p) * &one_plus_x.pow((d - 2 * p) as u32);
            remainder = &remainder - &basis;
        }
        gamma.push(g);
    }
    if remainder.is_zero() {
        Ok(Some(gamma))
    } else {
        Ok(None)
    }
}

/// Shape summary of a distribution polynomial relative to symmetry center
/// `d/2`: palindromicity, unimodality, and the gamma vector when it exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaReport {
    pub poly: IntPolynomial,
    pub d: usize,
    pub palindromic: bool,
    pub unimodal: bool,
    pub gamma: Option<Vec<BigInt>>,
}

impl GammaReport {
    pub fn gamma_nonnegative(&self) -> bool {
        match &self.gamma {
            Some(g) => g.iter().all(|c| !c.is_negative()),
            None => false,
        }
    }

    /// JSON object with keys `d`, `palindromic`, `unimodal`, and — only when
    /// the expansion exists — `gamma`.
    pub fn to_json(&self) -> String {
        let mut out = format!(
            "{{\"d\":{},\"palindromic\":{},\"unimodal\":{}",
            self.d, self.palindromic, self.unimodal
        );
        if let Some(g) = &self.gamma {
            let items: Vec<String> = g.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!(",\"gamma\":[{}]", items.join(",")));
        }
        out.push('}');
        out
    }
}

pub fn report(poly: &IntPolynomial, d: usize) -> Result<GammaReport, GammaError> {
    let gamma = gamma_expand(poly, d)?;
    Ok(GammaReport {
        palindromic: is_palindromic(poly, d),
        unimodal: is_unimodal(poly),
        gamma,
        poly: poly.clone(),
        d,
    })
}

/// Gamma report for a group's width-`k` descent distribution, built from the
/// closed-form product (enumeration only in the `D`, `k = 1` case, which has
/// no product form). The symmetry center is `(n-k)/2` for `S_n` and
/// `(n-k+1)/2` for `B_n` and `D_n`.
pub fn group_gamma(
    group: Group,
    n: u32,
    k: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<GammaReport, GammaError> {
    let (poly, d) = match group {
        Group::Symmetric => (closed_width_a(n, k, caps, mode)?, (n - k) as usize),
        Group::Hyperoctahedral => (closed_width_b(n, k, caps, mode)?, (n - k + 1) as usize),
        Group::EvenSigned => (
            closed_width_d(n, k, caps, mode)?.poly,
            (n - k + 1) as usize,
        ),
    };
    report(&poly, d)
}

fn padded_counts(counts: Vec<u64>, width: usize) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = counts.into_iter().map(BigInt::from).collect();
    while out.len() < width {
        out.push(BigInt::zero());
    }
    out
}

/// `entry p` = number of words in `S_n` with exactly `p` width-`k` descents
/// and no width-`k` double descents; the gamma vector of the `desA_k`
/// distribution. Padded to the expansion width `⌊(n-k)/2⌋ + 1`.
pub fn gamma_a_counts(
    n: u32,
    k: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<Vec<BigInt>, DistError> {
    stat(StatKind::DesAK, &crate::perm::SignedPermutation::identity(n as usize), k)?;
    let counts = histogram(Group::Symmetric, n as usize, caps, mode, |w| {
        if stat(StatKind::DdesAK, w, k).unwrap() == 0 {
            Some(stat(StatKind::DesAK, w, k).unwrap() as usize)
        } else {
            None
        }
    })?;
    Ok(padded_counts(counts, (n - k) as usize / 2 + 1))
}

/// Distribution of width-`k` left peaks over `S_n`, padded to the type-B
/// expansion width `⌊(n-k+1)/2⌋ + 1`.
pub fn lpeak_counts(
    n: u32,
    k: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<Vec<BigInt>, DistError> {
    let poly = distribution(StatKind::LpeakAK, Group::Symmetric, n as usize, k, caps, mode)?;
    let counts: Vec<BigInt> = poly.coeffs().to_vec();
    let width = (n - k + 1) as usize / 2 + 1;
    let mut out = counts;
    while out.len() < width {
        out.push(BigInt::zero());
    }
    Ok(out)
}

/// `entry p` = `2^(2p+k-1)` times the number of words in `S_n` with `p`
/// width-`k` left peaks; the gamma vector of the `desB_k` distribution.
pub fn gamma_b_from_lpeaks(
    n: u32,
    k: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<Vec<BigInt>, DistError> {
    let counts = lpeak_counts(n, k, caps, mode)?;
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(p, c)| c * (BigInt::one() << (2 * p as u32 + k - 1)))
        .collect())
}

/// Rebuild the `desB_k` distribution from left-peak counts over `S_n`:
/// returns `(2^(k-1) · Σ_p lp_p · (4x)^p (1+x)^(n-k+1-2p), closed product)`.
/// The two agree exactly.
pub fn lpeak_reconstruction(
    n: u32,
    k: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<(IntPolynomial, IntPolynomial), DistError> {
    let counts = lpeak_counts(n, k, caps, mode)?;
    let one_plus_x = IntPolynomial::from_i64(&[1, 1]);
    let four_x = IntPolynomial::from_i64(&[0, 4]);
    let mut sum = IntPolynomial::zero();
    for (p, c) in counts.iter().enumerate() {
        let term = (&four_x.pow(p as u32) * &one_plus_x.pow(n - k + 1 - 2 * p as u32))
            .scalar_mul(c);
        sum = &sum + &term;
    }
    let lhs = sum.scalar_mul(&(BigInt::one() << (k - 1)));
    let rhs = closed_width_b(n, k, caps, mode)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> EnumCaps {
        EnumCaps::default()
    }

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn expansion_peels_palindromes() {
        assert_eq!(
            gamma_expand(&p(&[1, 8, 18, 8, 1]), 4).unwrap(),
            Some(big(&[1, 4, 4]))
        );
        assert_eq!(
            gamma_expand(&p(&[1, 26, 66, 26, 1]), 4).unwrap(),
            Some(big(&[1, 22, 16]))
        );
        // Padded center: degree 1 with center 2/2 = 1 ... here degree 2, d = 2.
        assert_eq!(gamma_expand(&p(&[1, 2, 1]), 2).unwrap(), Some(big(&[1, 0])));
        assert_eq!(gamma_expand(&IntPolynomial::zero(), 3).unwrap(), Some(big(&[0, 0])));
    }

    #[test]
    fn expansion_rejects_asymmetry() {
        assert_eq!(gamma_expand(&p(&[1, 2]), 1).unwrap(), None);
        // Degree below d without mirror mass: c0 must equal c3.
        assert_eq!(gamma_expand(&p(&[1, 10, 13]), 3).unwrap(), None);
        assert!(matches!(
            gamma_expand(&p(&[1, 0, 0, 1]), 2),
            Err(GammaError::DegreeAboveSymmetry { degree: 3, d: 2 })
        ));
    }

    #[test]
    fn report_flags_and_json() {
        let r = report(&p(&[1, 2, 1]), 2).unwrap();
        assert!(r.palindromic && r.unimodal && r.gamma_nonnegative());
        assert_eq!(r.to_json(), "{\"d\":2,\"palindromic\":true,\"unimodal\":true,\"gamma\":[1,0]}");

        let bad = report(&p(&[1, 116, 846, 836, 121]), 5).unwrap();
        assert!(!bad.palindromic && bad.unimodal && bad.gamma.is_none());
        assert_eq!(bad.to_json(), "{\"d\":5,\"palindromic\":false,\"unimodal\":true}");
        assert!(!bad.gamma_nonnegative());
    }

    #[test]
    fn group_reports() {
        let m = ExecMode::Parallel;
        let a = group_gamma(Group::Symmetric, 6, 2, &caps(), m).unwrap();
        assert_eq!(a.gamma, Some(big(&[20, 80, 80])));
        assert_eq!(a.d, 4);

        let b = group_gamma(Group::Hyperoctahedral, 6, 2, &caps(), m).unwrap();
        assert_eq!(b.gamma, Some(big(&[160, 3520, 6400])));
        assert_eq!(b.d, 5);

        let d_poly = group_gamma(Group::EvenSigned, 4, 1, &caps(), m).unwrap();
        assert_eq!(d_poly.gamma, Some(big(&[1, 32, 48])));

        let d_even = group_gamma(Group::EvenSigned, 6, 1, &caps(), m).unwrap();
        assert_eq!(d_even.gamma, Some(big(&[1, 352, 3856, 1920])));

        let d_odd = group_gamma(Group::EvenSigned, 3, 1, &caps(), m).unwrap();
        assert!(!d_odd.palindromic && d_odd.gamma.is_none());
        assert_eq!(d_odd.d, 3);

        let d_wide = group_gamma(Group::EvenSigned, 6, 2, &caps(), m).unwrap();
        assert_eq!(d_wide.gamma, Some(big(&[80, 1760, 3200])));
    }

    #[test]
    fn counted_gammas_match_expansions() {
        let m = ExecMode::Parallel;
        for (n, k) in [(4, 1), (4, 2), (5, 1), (5, 2), (6, 2), (6, 4)] {
            let counted = gamma_a_counts(n, k, &caps(), m).unwrap();
            let expanded = group_gamma(Group::Symmetric, n, k, &caps(), m)
                .unwrap()
                .gamma
                .unwrap();
            assert_eq!(counted, expanded, "A ({n},{k})");

            let scaled = gamma_b_from_lpeaks(n, k, &caps(), m).unwrap();
            let expanded_b = group_gamma(Group::Hyperoctahedral, n, k, &caps(), m)
                .unwrap()
                .gamma
                .unwrap();
            assert_eq!(scaled, expanded_b, "B ({n},{k})");
        }
    }

    #[test]
    fn lpeaks_rebuild_the_distribution() {
        let m = ExecMode::Parallel;
        for (n, k) in [(4, 1), (5, 2), (6, 2), (6, 5)] {
            let (lhs, rhs) = lpeak_reconstruction(n, k, &caps(), m).unwrap();
            assert_eq!(lhs, rhs, "({n},{k})");
        }
    }

    #[test]
    fn known_lpeak_histograms() {
        let m = ExecMode::Parallel;
        assert_eq!(lpeak_counts(5, 1, &caps(), m).unwrap(), big(&[1, 58, 61]));
        assert_eq!(lpeak_counts(6, 1, &caps(), m).unwrap(), big(&[1, 179, 479, 61]));
        assert_eq!(lpeak_counts(6, 2, &caps(), m).unwrap(), big(&[80, 440, 200]));
        // No admissible index at k = 5, so every word counts zero peaks.
        assert_eq!(lpeak_counts(6, 5, &caps(), m).unwrap(), big(&[720, 0]));
    }
}
