//! Cycle types of permutations, i.e. integer partitions in multiplicity form.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::numbers::factorial;

/// Multiplicities `j_1, j_2, ...`: `j_i` cycles of length `i`, with
/// `sum i * j_i` equal to the degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    multiplicities: Vec<usize>,
}

impl CycleType {
    /// From multiplicities; trailing zeros are trimmed.
    pub fn from_multiplicities(mut multiplicities: Vec<usize>) -> Self {
        while multiplicities.last() == Some(&0) {
            multiplicities.pop();
        }
        CycleType { multiplicities }
    }

    /// From cycle lengths in any order.
    pub fn from_parts(parts: &[usize]) -> Self {
        let max = parts.iter().copied().max().unwrap_or(0);
        let mut multiplicities = vec![0; max];
        for &p in parts {
            assert!(p > 0, "cycle lengths are positive");
            multiplicities[p - 1] += 1;
        }
        Self::from_multiplicities(multiplicities)
    }

    /// Cycle type of a permutation of `0..n`.
    pub fn of_permutation(perm: &[usize]) -> Self {
        let mut seen = vec![false; perm.len()];
        let mut parts = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
                len += 1;
            }
            parts.push(len);
        }
        Self::from_parts(&parts)
    }

    /// `j_r`, the number of cycles of length `r`.
    pub fn count(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.multiplicities.get(r - 1).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// `(length, count)` for every length that occurs.
    pub fn cycles(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.multiplicities.iter().enumerate().filter(|(_, &j)| j > 0).map(|(i, &j)| (i + 1, j))
    }

    pub fn degree(&self) -> usize {
        self.cycles().map(|(r, j)| r * j).sum()
    }

    /// Cycle lengths in decreasing order.
    pub fn parts(&self) -> Vec<usize> {
        let mut parts: Vec<usize> = self.cycles().flat_map(|(r, j)| std::iter::repeat_n(r, j)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    /// Centralizer order `prod r^{j_r} j_r!`.
    pub fn centralizer_order(&self) -> BigUint {
        self.cycles().fold(BigUint::one(), |acc, (r, j)| acc * BigUint::from(r).pow(j as u32) * factorial(j as u64))
    }

    /// Size of the conjugacy class in the symmetric group of this degree.
    pub fn class_size(&self) -> BigUint {
        factorial(self.degree() as u64) / self.centralizer_order()
    }

    /// Canonical representative: cycles in increasing length over
    /// consecutive letters.
    pub fn representative(&self) -> Vec<usize> {
        let mut perm = Vec::with_capacity(self.degree());
        let mut base = 0;
        for (r, j) in self.cycles() {
            for _ in 0..j {
                for i in 0..r {
                    perm.push(base + (i + 1) % r);
                }
                base += r;
            }
        }
        perm
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts())
    }
}

/// All cycle types of degree `k`, largest parts first. `k = 0` yields the
/// single empty type.
pub fn cycle_types(k: usize) -> Vec<CycleType> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    partitions_into(k, k, &mut parts, &mut out);
    out
}

fn partitions_into(rest: usize, max: usize, parts: &mut Vec<usize>, out: &mut Vec<CycleType>) {
    if rest == 0 {
        out.push(CycleType::from_parts(parts));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        parts.push(p);
        partitions_into(rest - p, p, parts, out);
        parts.pop();
    }
}
