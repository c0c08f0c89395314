//! Small number-theoretic helpers shared by the counting engines.

use num_bigint::BigUint;
use num_traits::One;

/// Greatest common divisor with the convention `gcd(0, n) = n`.
pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Number-theoretic Möbius function.
pub fn moebius(n: u64) -> i64 {
    assert!(n >= 1, "moebius is defined on positive integers");
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Euler's totient by direct gcd scan.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient is defined on positive integers");
    (1..=n).filter(|&a| gcd(a, n) == 1).count() as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `base^exp mod modulus`.
pub fn pow_mod(base: u64, exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut result = 1u128 % m;
    let mut b = base as u128 % m;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    result as u64
}

/// Multiplicative order of a unit by repeated multiplication.
pub fn multiplicative_order(a: u64, modulus: u64) -> u64 {
    assert!(gcd(a, modulus) == 1, "order of a non-unit");
    if modulus == 1 {
        return 1;
    }
    let mut x = a % modulus;
    let mut d = 1;
    while x != 1 {
        x = x * a % modulus;
        d += 1;
    }
    d
}
