//! Exact integer polynomials, q-analogues, and the combinatorial
//! coefficients the generating-function identities are built from.
//!
//! Univariate polynomials are dense (degrees here stay below ~60);
//! bivariate ones are sparse maps. Everything is arbitrary-precision — no
//! coefficient is ever rounded.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("width {k} is outside 1..={n}")]
pub struct WidthRangeError {
    pub k: u32,
    pub n: u32,
}

/// Dense polynomial over the integers; index = exponent, no trailing
/// zeros stored, the zero polynomial has empty support.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Histogram to polynomial: `counts[i]` becomes the coefficient of `x^i`.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i`; zero beyond the formal degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `p(x) ↦ p(x²)`.
    pub fn substitute_x_squared(&self) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().saturating_mul(2)];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[2 * i] = c.clone();
            }
        }
        Self::new(coeffs)
    }

    /// `p(x) ↦ x^m · p(x)`.
    pub fn shift_up(&self, m: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPolynomial::new(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    /// Lowest degree first: `1 + 4*x + x^2`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.magnitude();
            let unit = mag == &BigUint::one();
            match (deg, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{deg}")?,
                (_, false) => write!(f, "{mag}*x^{deg}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// `[n]_x = 1 + x + … + x^(n-1)`; `[0]_x = 0`.
pub fn q_int(n: u32) -> IntPolynomial {
    IntPolynomial::new(vec![BigInt::one(); n as usize])
}

/// `[n]_x! = ∏_{i=1..n} [i]_x`, empty product for `n = 0`.
pub fn q_factorial(n: u32) -> IntPolynomial {
    (1..=n).fold(IntPolynomial::one(), |acc, i| &acc * &q_int(i))
}

/// `[2n]_x!! = ∏_{i=1..n} [2i]_x`, empty product for `n = 0`.
pub fn q_double_factorial_even(n: u32) -> IntPolynomial {
    (1..=n).fold(IntPolynomial::one(), |acc, i| &acc * &q_int(2 * i))
}

/// `binomial(top, bottom)` with the combinatorial convention: zero whenever
/// `bottom < 0` or `top < bottom`.
pub fn binomial(top: i64, bottom: i64) -> BigInt {
    if bottom < 0 || top < bottom {
        return BigInt::zero();
    }
    let bottom = bottom.min(top - bottom);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..bottom {
        num *= top - i;
        den *= i + 1;
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// The chain multinomial `M_{n,k} = n! / ((d+1)!^r · d!^(k-r))` where
/// `n = dk + r`: the number of ways to distribute `{1..n}` over the `k`
/// width-`k` chains.
pub fn multinomial(n: u32, k: u32) -> Result<BigInt, WidthRangeError> {
    if k == 0 || k > n {
        return Err(WidthRangeError { k, n });
    }
    let d = n / k;
    let r = n % k;
    let fact = |m: u32| -> BigInt { (1..=m).fold(BigInt::one(), |acc, i| acc * i) };
    let denom = fact(d + 1).pow(r) * fact(d).pow(k - r);
    let (q, rem) = fact(n).div_rem(&denom);
    assert!(rem.is_zero(), "chain multinomial must divide exactly");
    Ok(q)
}

/// Whether `p` is symmetric about `d/2`, i.e. `c_i = c_(d-i)` for all
/// `0 ≤ i ≤ d`, reading absent coefficients as zero. A polynomial of formal
/// degree above `d` is never palindromic for that `d`.
pub fn is_palindromic(p: &IntPolynomial, d: usize) -> bool {
    if p.degree().is_some_and(|deg| deg > d) {
        return false;
    }
    (0..=d / 2).all(|i| p.coeff(i) == p.coeff(d - i))
}

/// Whether the coefficients rise to a pivot and then fall:
/// `c_0 ≤ … ≤ c_j ≥ … ≥ c_deg` for some `j`.
pub fn is_unimodal(p: &IntPolynomial) -> bool {
    let cs = p.coeffs();
    let mut falling = false;
    for w in cs.windows(2) {
        if w[1] > w[0] {
            if falling {
                return false;
            }
        } else if w[1] < w[0] {
            falling = true;
        }
    }
    true
}

/// Sparse polynomial in `x` and `t`; keys are `(x-exponent, t-exponent)`,
/// zero entries never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, BigInt::one());
        p
    }

    pub fn add_term(&mut self, x_exp: u32, t_exp: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((x_exp, t_exp)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(x_exp, t_exp));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Embeds a univariate polynomial in `x` (t-degree zero throughout).
    pub fn from_x_poly(p: &IntPolynomial) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(i as u32, 0, c.clone());
        }
        out
    }

    /// Sets `t = 1`, collapsing onto a univariate polynomial in `x`.
    pub fn specialize_t_one(&self) -> IntPolynomial {
        let max_x = self.terms.keys().map(|&(x, _)| x).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); max_x as usize + 1];
        for (&(x, _), c) in &self.terms {
            coeffs[x as usize] += c;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(x, t), c) in &rhs.terms {
            out.add_term(x, t, c.clone());
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(x1, t1), c1) in &self.terms {
            for (&(x2, t2), c2) in &rhs.terms {
                out.add_term(x1 + x2, t1 + t2, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    #[test]
    fn ring_basics() {
        let one_plus_x = p(&[1, 1]);
        assert_eq!(&one_plus_x * &one_plus_x, p(&[1, 2, 1]));
        assert_eq!(one_plus_x.pow(0), IntPolynomial::one());
        assert_eq!(one_plus_x.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(&p(&[1, 2]) + &p(&[0, -2, 5]), p(&[1, 0, 5]));
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), IntPolynomial::zero());
        assert_eq!(p(&[3, 0, 0]).degree(), Some(0));
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(p(&[1, 2, 3]).shift_up(2), p(&[0, 0, 1, 2, 3]));
        assert_eq!(p(&[1, 2]).substitute_x_squared(), p(&[1, 0, 2]));
        assert_eq!(p(&[-5, 7]).eval(&BigInt::from(3)), BigInt::from(16));
    }

    #[test]
    fn q_analogues() {
        assert_eq!(q_int(3), p(&[1, 1, 1]));
        assert_eq!(q_int(0), IntPolynomial::zero());
        assert_eq!(q_factorial(0), IntPolynomial::one());
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
        assert_eq!(
            q_double_factorial_even(2),
            &p(&[1, 1]) * &p(&[1, 1, 1, 1])
        );
        for n in 0..=6u32 {
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(q_factorial(n).eval_one(), BigInt::from(fact.max(1)));
            assert_eq!(
                q_double_factorial_even(n).eval_one(),
                BigInt::from((1u64 << n) * fact.max(1))
            );
        }
    }

    #[test]
    fn binomials_and_multinomials() {
        assert_eq!(binomial(4, 3), BigInt::from(4));
        assert_eq!(binomial(10, 5), BigInt::from(252));
        assert_eq!(binomial(3, 0), BigInt::one());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(2, -1), BigInt::zero());
        assert_eq!(multinomial(6, 2).unwrap(), BigInt::from(20));
        assert_eq!(multinomial(7, 3).unwrap(), BigInt::from(210));
        for n in 1..=8 {
            assert_eq!(multinomial(n, 1).unwrap(), BigInt::one());
            // All chains have length one, so M_{n,n} counts every word.
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(multinomial(n, n).unwrap(), BigInt::from(fact));
        }
        assert!(multinomial(4, 0).is_err());
        assert!(multinomial(4, 5).is_err());
    }

    #[test]
    fn shape_predicates() {
        assert!(is_palindromic(&p(&[1, 4, 1]), 2));
        assert!(is_unimodal(&p(&[1, 4, 1])));
        assert!(!is_palindromic(&p(&[1, 116, 846, 836, 121]), 5));
        assert!(is_palindromic(&p(&[1, 0, 0, 1]), 3));
        assert!(!is_unimodal(&p(&[1, 0, 0, 1])));
        assert!(is_palindromic(&IntPolynomial::zero(), 4));
        assert!(is_unimodal(&IntPolynomial::zero()));
        // Formal degree above the declared symmetry degree.
        assert!(!is_palindromic(&p(&[1, 2, 1]), 1));
        // Trailing zero against the declared degree breaks symmetry.
        assert!(!is_palindromic(&p(&[1, 2]), 2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, 4, 1]).to_string(), "1 + 4*x + x^2");
        assert_eq!(p(&[160, 4320]).to_string(), "160 + 4320*x");
        assert_eq!(p(&[1, -1]).to_string(), "1 - x");
        assert_eq!(p(&[0, 0, -3]).to_string(), "-3*x^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(p(&[0, 1]).to_string(), "x");
    }

    #[test]
    fn bivariate_basics() {
        // (1 + t)(1 + t*x) = 1 + t + t*x + t^2*x.
        let mut a = BivariatePolynomial::one();
        a.add_term(0, 1, BigInt::one());
        let mut b = BivariatePolynomial::one();
        b.add_term(1, 1, BigInt::one());
        let prod = &a * &b;
        let mut expected = BivariatePolynomial::one();
        expected.add_term(0, 1, BigInt::one());
        expected.add_term(1, 1, BigInt::one());
        expected.add_term(1, 2, BigInt::one());
        assert_eq!(prod, expected);
        assert_eq!(prod.specialize_t_one(), p(&[2, 2]));
        let embedded = BivariatePolynomial::from_x_poly(&p(&[1, 2, 3]));
        assert_eq!(embedded.specialize_t_one(), p(&[1, 2, 3]));
    }

    #[test]
    fn from_counts_trims() {
        assert_eq!(IntPolynomial::from_counts(&[1, 6, 1, 0]), p(&[1, 6, 1]));
        assert_eq!(IntPolynomial::from_counts(&[]), IntPolynomial::zero());
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-20i64..=20, 0..=9).prop_map(|v| IntPolynomial::from_i64(&v))
    }

    proptest! {
        #[test]
        fn mul_matches_bruteforce_convolution(a in small_poly(), b in small_poly()) {
            let prod = &a * &b;
            let deg_bound = a.coeffs().len() + b.coeffs().len();
            let mut expected = vec![BigInt::zero(); deg_bound.max(1)];
            for i in 0..a.coeffs().len() {
                for j in 0..b.coeffs().len() {
                    let term = a.coeff(i) * b.coeff(j);
                    expected[i + j] += term;
                }
            }
            prop_assert_eq!(prod, IntPolynomial::new(expected));
        }

        #[test]
        fn eval_is_a_ring_homomorphism(a in small_poly(), b in small_poly(), x in -9i64..=9) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        }

        #[test]
        fn palindromic_after_reversal(coeffs in prop::collection::vec(0i64..=50, 1..=7)) {
            let mut sym: Vec<i64> = coeffs.clone();
            sym.extend(coeffs.iter().rev());
            let d = sym.len() - 1;
            prop_assert!(is_palindromic(&IntPolynomial::from_i64(&sym), d));
        }
    }
}
