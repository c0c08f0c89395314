//! Closed-form class counts.
//!
//! For each automorphism `α` of the acting group and each `α`-invariant
//! subgroup `S`, the number of `(α, σ, τ)`-fixed tuples of pair classes in
//! `S` is a product of falling factorials in the counts of pair classes
//! (resp. involutions) whose `α`-orbit has exact length `r`. Möbius
//! inversion over the invariant subgroups removes the non-generating
//! tuples, and Burnside averaging over `H × S_k × S_{m-2k}` gives the orbit
//! count of each stratum `G_{m,k}(A)`.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{CensusError, Result};
use crate::group::{ElementSet, FiniteGroup};
use crate::lattice::{moebius_values, SubgroupLattice};
use crate::limits::Limits;
use crate::morphism::{Automorphism, AutomorphismGroup, Mode};
use crate::numbers::{binomial, divisors, factorial, moebius};
use crate::partition::{cycle_types, CycleType};

/// Direct scans `(FF, II, FFo)` for `α^r` on `S`:
/// `FF` counts `g` with `α^r(g) = g ≠ g^-1`, `II` counts `g` with
/// `α^r(g) = g^-1 ≠ g`, `FFo` counts involutions fixed by `α^r`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TildeTildeCounts {
    pub ff: u64,
    pub ii: u64,
    pub ffo: u64,
}

/// Elements of `S` whose `α`-orbit has exact length `r`:
/// `F` non-involutions with `α^r(g) = g` and no earlier `α^l(g) ∈ {g, g^-1}`,
/// `I` the same with `α^r(g) = g^-1`, `Fo` involutions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct InvertedCounts {
    pub f: u64,
    pub i: u64,
    pub fo: u64,
}

fn check_invariant(s: ElementSet, alpha: &Automorphism) -> Result<()> {
    if alpha.fixes_set(s) {
        Ok(())
    } else {
        Err(CensusError::NotInvariant)
    }
}

fn scan(g: &FiniteGroup, s: ElementSet, power: &Automorphism) -> TildeTildeCounts {
    let mut counts = TildeTildeCounts::default();
    for x in s.iter().filter(|&x| x != g.identity()) {
        let y = power.apply(x);
        let xi = g.inv(x);
        if xi == x {
            counts.ffo += u64::from(y == x);
        } else if y == x {
            counts.ff += 1;
        } else if y == xi {
            counts.ii += 1;
        }
    }
    counts
}

pub fn tilde_tilde_counts(g: &FiniteGroup, s: ElementSet, alpha: &Automorphism, r: usize) -> Result<TildeTildeCounts> {
    check_invariant(s, alpha)?;
    Ok(scan(g, s, &alpha.power(r)))
}

/// The exact-orbit-length counts obtained from the direct scans by
/// divisor Möbius inversion.
pub fn inverted_counts(g: &FiniteGroup, s: ElementSet, alpha: &Automorphism, r: usize) -> Result<InvertedCounts> {
    check_invariant(s, alpha)?;
    let table = FixedCountTable::build(g, s, alpha, r)?;
    Ok(table.inverted(r))
}

/// The same counts read straight off their definitions, without inversion.
pub fn inverted_counts_by_definition(g: &FiniteGroup, s: ElementSet, alpha: &Automorphism, r: usize) -> Result<InvertedCounts> {
    check_invariant(s, alpha)?;
    let powers: Vec<Automorphism> = (0..=r).map(|l| alpha.power(l)).collect();
    let mut out = InvertedCounts::default();
    for x in s.iter().filter(|&x| x != g.identity()) {
        let xi = g.inv(x);
        let y = powers[r].apply(x);
        if xi == x {
            let earlier = (1..r).any(|l| powers[l].apply(x) == x);
            out.fo += u64::from(y == x && !earlier);
        } else {
            let earlier = (1..r).any(|l| {
                let z = powers[l].apply(x);
                z == x || z == xi
            });
            if !earlier {
                out.f += u64::from(y == x);
                out.i += u64::from(y == xi);
            }
        }
    }
    Ok(out)
}

/// Fixed counts for one `(S, α)` pair for exponents `1..=max_r`.
#[derive(Clone, Debug)]
pub struct FixedCountTable {
    direct: Vec<TildeTildeCounts>,
    inverted: Vec<InvertedCounts>,
}

impl FixedCountTable {
    pub fn build(g: &FiniteGroup, s: ElementSet, alpha: &Automorphism, max_r: usize) -> Result<Self> {
        check_invariant(s, alpha)?;
        let mut direct = vec![TildeTildeCounts::default(); max_r + 1];
        let mut power = alpha.clone();
        for slot in direct.iter_mut().skip(1) {
            *slot = scan(g, s, &power);
            power = power.compose(alpha);
        }
        let order = alpha.order();
        let mut inverted = vec![InvertedCounts::default(); max_r + 1];
        for r in 1..=max_r {
            let ii = if order.is_multiple_of(2 * r) {
                divisors(r as u64)
                    .into_iter()
                    .filter(|d| (r as u64 / d) % 2 == 1)
                    .map(|d| moebius(r as u64 / d) * direct[d as usize].ii as i64)
                    .sum()
            } else {
                0
            };
            let (ff, ffo) = if order.is_multiple_of(r) {
                let inv = |pick: fn(&TildeTildeCounts) -> u64| -> i64 {
                    divisors(r as u64).into_iter().map(|d| moebius(r as u64 / d) * pick(&direct[d as usize]) as i64).sum()
                };
                let mut ff = inv(|c| c.ff);
                if r % 2 == 0 {
                    ff -= inverted[r / 2].i as i64;
                }
                (ff, inv(|c| c.ffo))
            } else {
                (0, 0)
            };
            let to_count = |v: i64, what: &str| {
                u64::try_from(v).map_err(|_| CensusError::Inconsistency(format!("negative {what} count {v} at r = {r}")))
            };
            inverted[r] = InvertedCounts { f: to_count(ff, "F")?, i: to_count(ii, "I")?, fo: to_count(ffo, "Fo")? };
            if (inverted[r].f + inverted[r].i) % 2 != 0 {
                return Err(CensusError::Inconsistency(format!("F + I is odd at r = {r}")));
            }
        }
        Ok(FixedCountTable { direct, inverted })
    }

    pub fn max_r(&self) -> usize {
        self.direct.len() - 1
    }

    pub fn direct(&self, r: usize) -> TildeTildeCounts {
        self.direct[r]
    }

    pub fn inverted(&self, r: usize) -> InvertedCounts {
        self.inverted[r]
    }

    /// Pair classes whose orbit has exact length `r`.
    pub fn pair_supply(&self, r: usize) -> u64 {
        let c = self.inverted[r];
        (c.f + c.i) / 2
    }

    /// Fixed tuples of pair classes for the `x` slots permuted by a
    /// permutation of type `sigma`.
    pub fn pair_product(&self, sigma: &CycleType) -> BigUint {
        sigma.cycles().map(|(r, j)| falling(self.pair_supply(r), r, j)).product()
    }

    /// Fixed tuples of involutions for the `y` slots permuted by `tau`.
    pub fn involution_product(&self, tau: &CycleType) -> BigUint {
        tau.cycles().map(|(l, j)| falling(self.inverted[l].fo, l, j)).product()
    }

    pub fn fixed_tuple_count(&self, sigma: &CycleType, tau: &CycleType) -> BigUint {
        self.pair_product(sigma) * self.involution_product(tau)
    }
}

/// `c (c - step) (c - 2 step) ...` with `len` factors; zero once a factor
/// would be non-positive.
fn falling(c: u64, step: usize, len: usize) -> BigUint {
    let mut acc = BigUint::one();
    for t in 0..len {
        let Some(factor) = c.checked_sub((step * t) as u64).filter(|&f| f > 0) else {
            return BigUint::zero();
        };
        acc *= factor;
    }
    acc
}

/// `|F̃_{(α,σ,τ)}(m, k, S)|` from the product formula.
pub fn fixed_tuple_count(
    g: &FiniteGroup,
    s: ElementSet,
    alpha: &Automorphism,
    sigma_type: &CycleType,
    tau_type: &CycleType,
    m: usize,
    k: usize,
) -> Result<BigUint> {
    if sigma_type.degree() != k || 2 * k > m || tau_type.degree() != m - 2 * k {
        return Err(CensusError::Precondition(format!("cycle types do not fit m = {m}, k = {k}")));
    }
    let table = FixedCountTable::build(g, s, alpha, m.max(1))?;
    Ok(table.fixed_tuple_count(sigma_type, tau_type))
}

/// Number of classes of Cayley graphs of one degree, split by the number
/// `k` of non-involution pair classes in the connection set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCount {
    pub group: String,
    pub degree: usize,
    pub mode: Mode,
    pub total: BigUint,
    /// `per_k[k]` is the number of classes with `m - 2k` involutions.
    pub per_k: Vec<BigUint>,
}

impl ClassCount {
    pub fn new(group: &str, degree: usize, mode: Mode, per_k: Vec<BigUint>) -> Self {
        let total = per_k.iter().sum();
        ClassCount { group: group.to_string(), degree, mode, total, per_k }
    }
}

/// Knobs for [`class_count`].
#[derive(Clone, Debug, Default)]
pub struct CountOptions {
    pub limits: Limits,
    /// Worker threads for the sum over automorphisms; 0 or 1 runs inline.
    pub threads: usize,
    /// Test hook: negates every Möbius value below the top so that
    /// cross-validation has something to catch.
    #[doc(hidden)]
    pub corrupt_moebius: bool,
}

/// Classes of degree-`m` Cayley graphs of `g` under `Aut(A)` (weak) or
/// `Inn(A)` (equiv), by the closed-form Burnside/Möbius sum.
pub fn class_count(g: &FiniteGroup, m: usize, mode: Mode, opts: &CountOptions) -> Result<ClassCount> {
    if m == 0 {
        return Err(CensusError::Precondition("degree must be at least 1".into()));
    }
    let action = AutomorphismGroup::for_mode(g, mode, &opts.limits)?;
    let lattice = SubgroupLattice::new(g, &opts.limits)?;
    class_count_with(g, m, &action, &lattice, opts)
}

/// As [`class_count`] with a precomputed acting group and lattice.
pub fn class_count_with(g: &FiniteGroup, m: usize, action: &AutomorphismGroup, lattice: &SubgroupLattice, opts: &CountOptions) -> Result<ClassCount> {
    let kmax = m / 2;
    // weighted cycle types: class sizes turn the sum over permutations into
    // a sum over conjugacy classes
    let weighted = |d: usize| -> Vec<(CycleType, BigUint)> {
        cycle_types(d)
            .into_iter()
            .map(|t| {
                let w = t.class_size();
                (t, w)
            })
            .collect()
    };
    let sigma_types: Vec<Vec<(CycleType, BigUint)>> = (0..=kmax).map(weighted).collect();
    let tau_types: Vec<Vec<(CycleType, BigUint)>> = (0..=m).map(|d| if (m - d).is_multiple_of(2) { weighted(d) } else { Vec::new() }).collect();

    let per_alpha = |alpha: &Automorphism| -> Result<Vec<BigInt>> {
        let poset = lattice.invariant_subposet(alpha);
        let mut mu = moebius_values(&poset)?;
        if opts.corrupt_moebius {
            mu.iter_mut().skip(1).for_each(|x| *x = -*x);
        }
        let mut acc = vec![BigInt::zero(); kmax + 1];
        for (&s, &mu_s) in poset.members().iter().zip(&mu) {
            if mu_s == 0 {
                continue;
            }
            let table = FixedCountTable::build(g, s, alpha, m)?;
            for (k, slot) in acc.iter_mut().enumerate() {
                let pairs: BigUint = sigma_types[k].iter().map(|(t, w)| w * table.pair_product(t)).sum();
                if pairs.is_zero() {
                    continue;
                }
                let invs: BigUint = tau_types[m - 2 * k].iter().map(|(t, w)| w * table.involution_product(t)).sum();
                *slot += BigInt::from(mu_s) * BigInt::from_biguint(Sign::Plus, pairs * invs);
            }
        }
        Ok(acc)
    };
    let add = |mut a: Vec<BigInt>, b: Vec<BigInt>| {
        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        a
    };
    let zero = || vec![BigInt::zero(); kmax + 1];
    let sums = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| CensusError::Precondition(format!("cannot start worker pool: {e}")))?;
        pool.install(|| {
            action
                .members()
                .par_iter()
                .map(per_alpha)
                .try_reduce(zero, |a, b| Ok(add(a, b)))
        })?
    } else {
        action.iter().map(per_alpha).try_fold(zero(), |a, b| b.map(|b| add(a, b)))?
    };

    let per_k = sums
        .into_iter()
        .enumerate()
        .map(|(k, sum)| {
            let denom = BigInt::from(action.len()) * BigInt::from_biguint(Sign::Plus, factorial(k as u64) * factorial((m - 2 * k) as u64));
            exact_quotient(&sum, &denom, &format!("stratum k = {k}"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassCount::new(g.name(), m, action.kind(), per_k))
}

fn exact_quotient(sum: &BigInt, denom: &BigInt, what: &str) -> Result<BigUint> {
    let (q, r) = sum.div_rem(denom);
    if !r.is_zero() {
        return Err(CensusError::Inconsistency(format!("{what}: Burnside sum {sum} is not divisible by {denom}")));
    }
    if q.is_negative() {
        return Err(CensusError::Inconsistency(format!("{what}: negative class count {q}")));
    }
    Ok(q.to_biguint().expect("non-negative"))
}

/// Closed form for abelian groups, where `Inn(A)` is trivial:
/// `sum_k sum_S mu(S) C((|S| - |O2(S)| - 1)/2, k) C(|O2(S)|, m - 2k)`.
pub fn abelian_class_count(g: &FiniteGroup, m: usize, limits: &Limits) -> Result<ClassCount> {
    if !g.is_abelian() {
        return Err(CensusError::NotAbelian);
    }
    if m == 0 {
        return Err(CensusError::Precondition("degree must be at least 1".into()));
    }
    let lattice = SubgroupLattice::new(g, limits)?;
    let per_k = (0..=m / 2)
        .map(|k| {
            let sum: BigInt = lattice
                .subgroups()
                .iter()
                .zip(lattice.mu())
                .filter(|(_, &mu)| mu != 0)
                .map(|(&s, &mu)| {
                    let o2 = g.involution_set(s).len() as u64;
                    let pairs = (s.len() as u64 - o2 - 1) / 2;
                    BigInt::from(mu) * BigInt::from_biguint(Sign::Plus, binomial(pairs, k as u64) * binomial(o2, (m - 2 * k) as u64))
                })
                .sum();
            exact_quotient(&sum, &BigInt::one(), &format!("stratum k = {k}"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassCount::new(g.name(), m, Mode::Equiv, per_k))
}

/// The odd-order specialization: `sum_S mu(S) C((|S| - 1)/2, m/2)` for even
/// `m`, zero for odd `m`.
pub fn odd_abelian_class_count(g: &FiniteGroup, m: usize, limits: &Limits) -> Result<BigUint> {
    if !g.is_abelian() {
        return Err(CensusError::NotAbelian);
    }
    if g.order().is_multiple_of(2) {
        return Err(CensusError::Precondition("group order must be odd".into()));
    }
    if m % 2 == 1 {
        return Ok(BigUint::zero());
    }
    let lattice = SubgroupLattice::new(g, limits)?;
    let sum: BigInt = lattice
        .subgroups()
        .iter()
        .zip(lattice.mu())
        .map(|(s, &mu)| BigInt::from(mu) * BigInt::from_biguint(Sign::Plus, binomial((s.len() as u64 - 1) / 2, m as u64 / 2)))
        .sum();
    exact_quotient(&sum, &BigInt::one(), "odd-order abelian count")
}
