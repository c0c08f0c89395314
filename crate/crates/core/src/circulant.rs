//! Cyclic groups `Z_n`, with automorphisms represented by unit multipliers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{CensusError, Result};
use crate::formula::TildeTildeCounts;
use crate::group::FiniteGroup;
use crate::morphism::Automorphism;
use crate::numbers::{binomial, divisors, factorial, gcd, is_prime, multiplicative_order, pow_mod};

pub use crate::numbers::totient;

fn check_unit(n: u64, alpha: u64) -> Result<()> {
    if n == 0 || gcd(alpha % n, n) != 1 {
        return Err(CensusError::NotAUnit { multiplier: alpha, modulus: n });
    }
    Ok(())
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p % 2 == 1 && is_prime(p) {
        Ok(())
    } else {
        Err(CensusError::NotOddPrime(p))
    }
}

/// The automorphism `x -> alpha * x` of the cyclic group built by
/// [`crate::group::builders::cyclic`].
pub fn multiplier_automorphism(g: &FiniteGroup, alpha: u64) -> Result<Automorphism> {
    let n = g.order() as u64;
    check_unit(n, alpha)?;
    let image = (0..n).map(|x| (alpha * x % n) as usize).collect();
    Automorphism::from_map(g, image)
}

/// Fixed-point counts of `alpha^r` on `Z_n` from gcds, with `gcd(0, n) = n`.
/// Elements with `2g = 0` are fixed by every multiplier and are removed
/// from `FF` and `II`.
pub fn zn_tilde_tilde_counts(n: u64, alpha: u64, r: u64) -> Result<TildeTildeCounts> {
    check_unit(n, alpha)?;
    let a = pow_mod(alpha, r, n);
    let self_inverse = if n.is_multiple_of(2) { 2 } else { 1 };
    let ff = gcd((a + n - 1) % n, n) - self_inverse;
    let ii = gcd((a + 1) % n, n) - self_inverse;
    Ok(TildeTildeCounts { ff, ii, ffo: u64::from(n.is_multiple_of(2)) })
}

/// Exact-orbit-length counts `(F, I)` on `Z_p`: `F = p - 1` when `r` is odd
/// and equals the order of `alpha`; `I = p - 1` when the order is `2r`.
pub fn zp_inverted_counts(p: u64, alpha: u64, r: u64) -> Result<(u64, u64)> {
    check_odd_prime(p)?;
    check_unit(p, alpha)?;
    let order = multiplicative_order(alpha % p, p);
    let f = if r % 2 == 1 && order == r && (p - 1).is_multiple_of(r) { p - 1 } else { 0 };
    let i = if order == 2 * r && ((p - 1) / 2).is_multiple_of(r) { p - 1 } else { 0 };
    Ok((f, i))
}

/// `prod_{t < len} (h - k t) / (k^len len!)`, which is `C(h/k, len)`.
fn cyclic_term(h: u64, k: u64, len: u64) -> Result<BigUint> {
    let mut num = BigUint::one();
    for t in 0..len {
        match h.checked_sub(k * t) {
            Some(f) if f > 0 => num *= f,
            _ => return Ok(BigUint::zero()),
        }
    }
    let den = BigUint::from(k).pow(len as u32) * factorial(len);
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(CensusError::Inconsistency(format!("term for k = {k} does not divide evenly")));
    }
    Ok(q)
}

/// Weak equivalence classes of connected degree-`m` circulant graphs on
/// `p` vertices, by the divisor sum over `k | gcd((p-1)/2, m/2)`.
pub fn circulant_prime_weak_count(p: u64, m: u64) -> Result<BigUint> {
    check_odd_prime(p)?;
    if m == 0 {
        return Err(CensusError::Precondition("degree must be at least 1".into()));
    }
    if m % 2 == 1 {
        return Ok(BigUint::zero());
    }
    let h = (p - 1) / 2;
    let j = m / 2;
    let mut sum = BigUint::zero();
    for k in divisors(gcd(h, j)) {
        let term = cyclic_term(h, k, j / k)?;
        if k % 2 == 1 {
            sum += totient(k) * &term;
        }
        sum += totient(2 * k) * term;
    }
    let (q, r) = sum.div_rem(&BigUint::from(p - 1));
    if !r.is_zero() {
        return Err(CensusError::Inconsistency(format!("circulant sum {sum} is not divisible by {}", p - 1)));
    }
    Ok(q)
}

/// Isomorphism classes of connected degree-`m` circulants on `p` vertices.
/// For prime order, isomorphic circulants are related by a multiplier, so
/// this is the weak equivalence count.
pub fn circulant_iso_count_prime(p: u64, m: u64) -> Result<BigUint> {
    circulant_prime_weak_count(p, m)
}

/// A published closed form that is kept callable for comparison only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErratumClaim {
    /// The value the closed form claims.
    pub claimed: BigUint,
    /// The value of the divisor-sum formula at the same point.
    pub formula: BigUint,
    /// Always set: the claim is known to fail cross-validation and must not
    /// feed census output.
    pub erratum: bool,
}

impl ErratumClaim {
    pub fn agrees(&self) -> bool {
        self.claimed == self.formula
    }
}

/// The binomial shortcut `C((p-3)/2, m/2)` stated for coprime
/// `(p-1)/2` and `m/2`. It is wrong in general: at `(7, 2)` it gives 2
/// where every degree-2 circulant on 7 vertices is a 7-cycle.
pub fn binomial_special_case(p: u64, m: u64) -> Result<ErratumClaim> {
    check_odd_prime(p)?;
    if m == 0 || m % 2 == 1 {
        return Err(CensusError::Precondition(format!("degree {m} must be positive and even")));
    }
    if gcd((p - 1) / 2, m / 2) != 1 {
        return Err(CensusError::Precondition(format!("gcd((p-1)/2, m/2) = {} is not 1", gcd((p - 1) / 2, m / 2))));
    }
    Ok(ErratumClaim {
        claimed: binomial((p - 3) / 2, m / 2),
        formula: circulant_prime_weak_count(p, m)?,
        erratum: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{inverted_counts, tilde_tilde_counts};
    use crate::group::builders::cyclic;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    /// Orbits of the rotation group of order `h` on `j`-subsets of an
    /// `h`-cycle (necklace count), independent of the divisor sum above.
    fn necklaces(h: u64, j: u64) -> BigUint {
        let total: BigUint = divisors(gcd(h, j)).into_iter().map(|d| totient(d) * binomial(h / d, j / d)).sum();
        total / h
    }

    #[test]
    fn totients() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(2), 1);
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn gcd_counts_examples() {
        let c = zn_tilde_tilde_counts(9, 1, 1).unwrap();
        assert_eq!((c.ff, c.ii), (8, 0));
        let c = zn_tilde_tilde_counts(8, 3, 1).unwrap();
        assert_eq!((c.ff, c.ii, c.ffo), (0, 2, 1));
        let c = zn_tilde_tilde_counts(13, 12, 1).unwrap();
        assert_eq!((c.ff, c.ii), (0, 12));
        assert!(matches!(zn_tilde_tilde_counts(8, 2, 1), Err(CensusError::NotAUnit { .. })));
    }

    #[test]
    fn gcd_counts_match_table_scans() {
        for n in 1..=24u64 {
            let g = cyclic(n as usize);
            for alpha in (1..=n).filter(|&a| gcd(a % n, n) == 1) {
                let auto = multiplier_automorphism(&g, alpha).unwrap();
                for r in 1..=auto.order() as u64 {
                    assert_eq!(
                        zn_tilde_tilde_counts(n, alpha, r).unwrap(),
                        tilde_tilde_counts(&g, g.elements(), &auto, r as usize).unwrap(),
                        "n={n} alpha={alpha} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn prime_inverted_examples() {
        assert_eq!(zp_inverted_counts(13, 1, 1).unwrap(), (12, 0));
        assert_eq!(zp_inverted_counts(13, 12, 1).unwrap(), (0, 12));
        assert_eq!(zp_inverted_counts(13, 5, 2).unwrap(), (0, 12));
        assert!(matches!(zp_inverted_counts(15, 2, 1), Err(CensusError::NotOddPrime(15))));
        assert!(matches!(zp_inverted_counts(2, 1, 1), Err(CensusError::NotOddPrime(2))));
    }

    #[test]
    fn prime_inverted_match_generic_inversion() {
        for p in [3u64, 5, 7, 11, 13, 17] {
            let g = cyclic(p as usize);
            for alpha in 1..p {
                let auto = multiplier_automorphism(&g, alpha).unwrap();
                for r in 1..=(p - 1) {
                    let generic = inverted_counts(&g, g.elements(), &auto, r as usize).unwrap();
                    let (f, i) = zp_inverted_counts(p, alpha, r).unwrap();
                    assert_eq!((f, i), (generic.f, generic.i), "p={p} alpha={alpha} r={r}");
                    // combined case analysis: p - 1 exactly when the pair-class orbit has length r
                    let ord = multiplicative_order(alpha, p);
                    let combined = if (r % 2 == 1 && ord == r) || ord == 2 * r { p - 1 } else { 0 };
                    assert_eq!(f + i, combined);
                }
            }
        }
    }

    #[test]
    fn weak_count_examples() {
        assert_eq!(circulant_prime_weak_count(5, 2).unwrap(), big(1));
        assert_eq!(circulant_prime_weak_count(13, 4).unwrap(), big(3));
        assert_eq!(circulant_prime_weak_count(13, 6).unwrap(), big(4));
        assert_eq!(circulant_prime_weak_count(13, 5).unwrap(), big(0));
        assert_eq!(circulant_iso_count_prime(7, 3).unwrap(), big(0));
        assert_eq!(circulant_iso_count_prime(13, 4).unwrap(), big(3));
        assert!(matches!(circulant_prime_weak_count(9, 2), Err(CensusError::NotOddPrime(9))));
    }

    #[test]
    fn weak_count_is_a_necklace_count() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
            for m in (2..p).step_by(2) {
                assert_eq!(circulant_prime_weak_count(p, m).unwrap(), necklaces((p - 1) / 2, m / 2), "p={p} m={m}");
            }
            // complete graph
            assert_eq!(circulant_prime_weak_count(p, p - 1).unwrap(), big(1));
            assert_eq!(circulant_prime_weak_count(p, p + 1).unwrap(), big(0));
        }
    }

    #[test]
    fn binomial_shortcut_is_flagged() {
        let c = binomial_special_case(7, 2).unwrap();
        assert_eq!((c.claimed.clone(), c.formula.clone()), (big(2), big(1)));
        assert!(c.erratum && !c.agrees());
        let c = binomial_special_case(11, 4).unwrap();
        assert_eq!((c.claimed.clone(), c.formula.clone()), (big(6), big(2)));
        assert!(!c.agrees());
        let c = binomial_special_case(5, 2).unwrap();
        assert!(c.erratum && c.agrees());
        assert!(binomial_special_case(13, 4).is_err());
        assert!(binomial_special_case(7, 3).is_err());
    }
}
