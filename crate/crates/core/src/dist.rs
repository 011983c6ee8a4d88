//! Distribution polynomials: `Σ x^stat` over a whole group, computed both
//! by exhaustive enumeration and by closed-form products.
//!
//! The classical families `A_m`, `B_m`, `D_m`, `F_m` are always obtained by
//! enumeration (memoized), so every closed-form product here is tested
//! against a single independent oracle. The closed forms only enumerate
//! their small chain components — of size `d = ⌊n/k⌋` or `d + 1` — so they
//! reach well past the ranks where full enumeration is feasible.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::enumerate::{fold_blocks, histogram, EnumCaps, EnumError, ExecMode, Group};
use crate::poly::{
    multinomial, q_double_factorial_even, q_int, BivariatePolynomial, IntPolynomial,
    WidthRangeError,
};
use crate::stats::{stat, StatError, StatKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistError {
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Stat(#[from] StatError),
    #[error(transparent)]
    Width(#[from] WidthRangeError),
    #[error("{kind} cannot be tallied over B_n, which contains odd-signed words")]
    IncompatibleKind { kind: StatKind },
}

/// `Σ_{w ∈ group} x^{kind(w, k)}` by exhaustive enumeration.
pub fn distribution(
    kind: StatKind,
    group: Group,
    n: usize,
    k: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<IntPolynomial, DistError> {
    if kind == StatKind::DesDK && group == Group::Hyperoctahedral {
        return Err(DistError::IncompatibleKind { kind });
    }
    if kind.is_width() {
        stat(kind, &crate::perm::SignedPermutation::identity(n), k)?;
    }
    let counts = histogram(group, n, caps, mode, |w| {
        Some(stat(kind, w, k).expect("arguments validated before the fold") as usize)
    })?;
    Ok(IntPolynomial::from_counts(&counts))
}

fn memoized(
    cache: &'static OnceLock<Mutex<HashMap<usize, IntPolynomial>>>,
    m: usize,
    compute: impl FnOnce() -> Result<IntPolynomial, DistError>,
) -> Result<IntPolynomial, DistError> {
    let cell = cache.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cell.lock().unwrap().get(&m) {
        return Ok(hit.clone());
    }
    let value = compute()?;
    cell.lock().unwrap().insert(m, value.clone());
    Ok(value)
}

/// Classical Eulerian polynomial `A_m(x)`, the `desA` distribution over `S_m`.
pub fn eulerian_a(m: usize, caps: &EnumCaps, mode: ExecMode) -> Result<IntPolynomial, DistError> {
    static CACHE: OnceLock<Mutex<HashMap<usize, IntPolynomial>>> = OnceLock::new();
    if m == 0 {
        return Ok(IntPolynomial::one());
    }
    memoized(&CACHE, m, || {
        distribution(StatKind::DesA, Group::Symmetric, m, 1, caps, mode)
    })
}

/// Type-B Eulerian polynomial `B_m(x)`, the `desB` distribution over `B_m`.
pub fn eulerian_b(m: usize, caps: &EnumCaps, mode: ExecMode) -> Result<IntPolynomial, DistError> {
    static CACHE: OnceLock<Mutex<HashMap<usize, IntPolynomial>>> = OnceLock::new();
    if m == 0 {
        return Ok(IntPolynomial::one());
    }
    memoized(&CACHE, m, || {
        distribution(StatKind::DesB, Group::Hyperoctahedral, m, 1, caps, mode)
    })
}

/// `desB` distribution over `D_m`.
pub fn eulerian_d(m: usize, caps: &EnumCaps, mode: ExecMode) -> Result<IntPolynomial, DistError> {
    static CACHE: OnceLock<Mutex<HashMap<usize, IntPolynomial>>> = OnceLock::new();
    if m == 0 {
        return Ok(IntPolynomial::one());
    }
    memoized(&CACHE, m, || {
        distribution(StatKind::DesB, Group::EvenSigned, m, 1, caps, mode)
    })
}

/// Flag polynomial `F_m(x)`, the `fdesB` distribution over `B_m`.
pub fn flag_poly(m: usize, caps: &EnumCaps, mode: ExecMode) -> Result<IntPolynomial, DistError> {
    static CACHE: OnceLock<Mutex<HashMap<usize, IntPolynomial>>> = OnceLock::new();
    if m == 0 {
        return Ok(IntPolynomial::one());
    }
    memoized(&CACHE, m, || {
        distribution(StatKind::FdesB, Group::Hyperoctahedral, m, 1, caps, mode)
    })
}

fn split(n: u32, k: u32) -> Result<(u32, u32, BigInt), WidthRangeError> {
    let m = multinomial(n, k)?;
    Ok((n / k, n % k, m))
}

/// Closed form for the `desA_k` distribution over `S_n`:
/// `M_{n,k} · A_{d+1}(x)^r · A_d(x)^(k-r)`.
pub fn closed_width_a(
    n: u32,
    k: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<IntPolynomial, DistError> {
    let (d, r, m) = split(n, k)?;
    let long = eulerian_a(d as usize + 1, caps, mode)?;
    let short = eulerian_a(d as usize, caps, mode)?;
    Ok((&long.pow(r) * &short.pow(k - r)).scalar_mul(&m))
}

/// Closed form for the `desB_k` distribution over `B_n`:
/// `2^(n-d) · M_{n,k} · B_d(x) · A_d(x)^(k-r-1) · A_{d+1}(x)^r`.
pub fn closed_width_b(
    n: u32,
    k: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<IntPolynomial, DistError> {
    let (d, r, m) = split(n, k)?;
    let b = eulerian_b(d as usize, caps, mode)?;
    let a_short = eulerian_a(d as usize, caps, mode)?;
    let a_long = eulerian_a(d as usize + 1, caps, mode)?;
    let scale = m * (BigInt::one() << (n - d));
    Ok((&(&b * &a_short.pow(k - r - 1)) * &a_long.pow(r)).scalar_mul(&scale))
}

/// Closed form for the `fdesB_k` distribution over `B_n`:
/// `2^(n-d) · M_{n,k} · F_d(x) · A_d(x²)^(k-r-1) · A_{d+1}(x²)^r`.
pub fn closed_flag(
    n: u32,
    k: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<IntPolynomial, DistError> {
    let (d, r, m) = split(n, k)?;
    let f = flag_poly(d as usize, caps, mode)?;
    let a_short = eulerian_a(d as usize, caps, mode)?.substitute_x_squared();
    let a_long = eulerian_a(d as usize + 1, caps, mode)?.substitute_x_squared();
    let scale = m * (BigInt::one() << (n - d));
    Ok((&(&f * &a_short.pow(k - r - 1)) * &a_long.pow(r)).scalar_mul(&scale))
}

/// Closed form for the `invB_k` distribution over `B_n`:
/// `2^(k-1) · M_{n,k} · [d]^(k-r-1) · [d+1]^r · ([2d]!!)^(r+1) · ([2(d-1)]!!)^(k-r-1)`.
///
/// Pure q-products — no enumeration, so no caps are involved.
pub fn closed_inversion_b(n: u32, k: u32) -> Result<IntPolynomial, DistError> {
    let (d, r, m) = split(n, k)?;
    let poly = &(&q_int(d).pow(k - r - 1) * &q_int(d + 1).pow(r))
        * &(&q_double_factorial_even(d).pow(r + 1)
            * &q_double_factorial_even(d.saturating_sub(1)).pow(k - r - 1));
    let scale = m * (BigInt::one() << (k - 1));
    Ok(poly.scalar_mul(&scale))
}

/// The `desD_k` distribution over `D_n` with its provenance: the closed
/// product `2^(n-d-1) · M_{n,k} · B_d(x) · A_d(x)^(k-r-1) · A_{d+1}(x)^r`
/// covers `k ≥ 2`; at `k = 1` no such product applies and the distribution
/// is enumerated instead, flagged by `enumerated`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WdPoly {
    pub poly: IntPolynomial,
    pub enumerated: bool,
}

pub fn closed_width_d(
    n: u32,
    k: u32,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<WdPoly, DistError> {
    let (d, r, m) = split(n, k)?;
    if k == 1 {
        let poly = distribution(StatKind::DesDK, Group::EvenSigned, n as usize, 1, caps, mode)?;
        return Ok(WdPoly {
            poly,
            enumerated: true,
        });
    }
    let b = eulerian_b(d as usize, caps, mode)?;
    let a_short = eulerian_a(d as usize, caps, mode)?;
    let a_long = eulerian_a(d as usize + 1, caps, mode)?;
    let scale = m * (BigInt::one() << (n - d - 1));
    Ok(WdPoly {
        poly: (&(&b * &a_short.pow(k - r - 1)) * &a_long.pow(r)).scalar_mul(&scale),
        enumerated: false,
    })
}

/// Both sides of the signed inversion–negativity identity on `B_n`:
/// `Σ_w x^(invA(w) + nsp(w)) t^(neg(w)) = [n]_x! · ∏_{i=0}^{n-1} (1 + t·x^i)`.
pub fn bivariate_inv_nsp(
    n: usize,
    caps: &EnumCaps,
    mode: ExecMode,
) -> Result<(BivariatePolynomial, BivariatePolynomial), DistError> {
    let lhs = fold_blocks(
        Group::Hyperoctahedral,
        n,
        caps,
        mode,
        BivariatePolynomial::zero,
        |acc: &mut BivariatePolynomial, w| {
            let x_exp = stat(StatKind::InvA, w, 1).unwrap() + stat(StatKind::Nsp, w, 1).unwrap();
            acc.add_term(x_exp as u32, w.neg_count() as u32, BigInt::one());
        },
        |a, b| &a + &b,
    )?;
    let mut rhs = BivariatePolynomial::from_x_poly(&crate::poly::q_factorial(n as u32));
    for i in 0..n as u32 {
        let mut factor = BivariatePolynomial::one();
        factor.add_term(i, 1, BigInt::one());
        rhs = &rhs * &factor;
    }
    Ok((lhs, rhs))
}
