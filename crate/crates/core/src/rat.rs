//! Exact rational scalars. Everything in the crate is computed over
//! `BigRational`; no floating point appears anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n / d` as a rational. `d` must be nonzero.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Binomial coefficient as a rational, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Rat {
    Rat::from_integer(binomial_int(n, k))
}

/// Binomial coefficient as an integer, zero when `k > n`.
pub fn binomial_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num::integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rat {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rat::from_integer(acc)
}

/// True when the rational is an integer.
pub fn is_integer(q: &Rat) -> bool {
    q.denom().is_one()
}

/// `p^e` as a rational, for scaling Chern classes under Frobenius pullback.
pub fn int_pow(p: u64, e: u64) -> Rat {
    Rat::from_integer(BigInt::from(p).pow(e as u32))
}

/// Render a rational the way the CLI serializes it: `p` or `p/q`.
pub fn display(q: &Rat) -> String {
    if is_integer(q) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Signed magnitude used by tests that compare against tolerances of zero:
/// exact arithmetic means equality checks, but a few reports want |q|.
pub fn abs(q: &Rat) -> Rat {
    q.abs()
}
