//! Exact arbitrary-precision arithmetic for q-analogs.
//!
//! Everything in the bound pipeline runs on big integers; no floating point
//! is used anywhere. The quantities of interest (powers `q^e`, q-brackets,
//! Gaussian binomials, the discriminant of the quadratic upper bound) exceed
//! 64 bits already for q = 9 and moderate n, so all values are [`Natural`]
//! (unsigned) or [`Int`] (signed) big integers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;
/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Exact division; panics on a nonzero remainder.
///
/// Every division in the pipeline is of a quantity that is divisible by
/// construction, so a remainder is a caller bug and fails loudly.
pub fn exact_div(num: &Natural, den: &Natural) -> Natural {
    let (quot, rem) = num.div_rem(den);
    assert!(
        rem.is_zero(),
        "exact_div: {num} is not divisible by {den} (remainder {rem})"
    );
    quot
}

/// `q^e`, exactly.
pub fn q_pow(q: u32, e: u32) -> Natural {
    BigUint::from(q).pow(e)
}

/// The q-bracket `[a]_q = (q^a - 1)/(q - 1)`: the number of projective
/// points (1-dimensional subspaces) of `F_q^a`.
pub fn q_bracket(a: u32, q: u32) -> Natural {
    debug_assert!(q >= 2);
    exact_div(&(q_pow(q, a) - 1u32), &BigUint::from(q - 1))
}

/// The Gaussian binomial: the number of k-dimensional subspaces of `F_q^n`.
///
/// Computed by the product formula
/// `prod_{i=0}^{k-1} (q^{n-i} - 1)/(q^{i+1} - 1)`,
/// dividing after each factor. Every prefix of the product is itself a
/// Gaussian binomial, so each intermediate division is exact (and asserted).
pub fn gaussian_binomial(n: u32, k: u32, q: u32) -> Natural {
    assert!(k <= n, "gaussian_binomial: k = {k} exceeds n = {n}");
    let mut result = Natural::one();
    for i in 0..k {
        result *= q_pow(q, n - i) - 1u32;
        result = exact_div(&result, &(q_pow(q, i + 1) - 1u32));
    }
    result
}

/// Floor of the square root: the largest `s` with `s^2 <= d`.
///
/// Newton iteration from a bit-length seed. The seed only affects iteration
/// count, never the result: the loop terminates at the exact fixed point.
pub fn isqrt(d: &Natural) -> Natural {
    if d.is_zero() {
        return Natural::zero();
    }
    let mut x: Natural = Natural::one() << d.bits().div_ceil(2);
    loop {
        let next = (&x + d / &x) >> 1;
        if next >= x {
            return x;
        }
        x = next;
    }
}

/// The exact ceiling `ceil(lambda - 1/2 - sqrt(d)/2)` for `d >= 1`.
///
/// With `s = isqrt(d)` the value equals `lambda - floor((1 + s)/2)` whether
/// or not d is a perfect square: writing `ceil(x) = -floor(-x)` reduces the
/// expression to `lambda - floor((1 + sqrt(d))/2)`, and `floor((1 + r)/2)`
/// is constant for real `r` in `[s, s+1)`.
pub fn ceil_bound_term(lambda: &Natural, d: &Natural) -> Int {
    assert!(!d.is_zero(), "ceil_bound_term requires d >= 1");
    let half = (isqrt(d) + 1u32) >> 1;
    Int::from(lambda.clone()) - Int::from(half)
}

/// The q-adic valuation: the largest f with `q^f` dividing n.
///
/// By convention returns 0 for n = 0 (the valuation is unbounded there;
/// callers use this only to gate descent ranges, where 0 is the safe value).
pub fn valuation(n: &Natural, q: u32) -> u32 {
    if n.is_zero() {
        return 0;
    }
    let q = BigUint::from(q);
    let mut f = 0;
    let mut rest = n.clone();
    loop {
        let (quot, rem) = rest.div_rem(&q);
        if !rem.is_zero() {
            return f;
        }
        f += 1;
        rest = quot;
    }
}
