//! Subgroup lattices and the Möbius function used for inclusion–exclusion
//! over generated subgroups.

use std::collections::HashSet;

use crate::error::{CensusError, Result};
use crate::group::{ElementSet, FiniteGroup};
use crate::limits::Limits;
use crate::morphism::Automorphism;

/// A set of subgroups ordered by inclusion. Members are kept sorted by
/// decreasing size so every strict supergroup precedes its subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupPoset {
    members: Vec<ElementSet>,
}

impl SubgroupPoset {
    pub fn new(mut members: Vec<ElementSet>) -> Self {
        members.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        members.dedup();
        SubgroupPoset { members }
    }

    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.members[i].is_subset(self.members[j])
    }

    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.len()).map(|i| (0..self.len()).map(|j| self.leq(i, j)).collect()).collect()
    }

    /// Index of the unique maximum, if there is one.
    pub fn top(&self) -> Option<usize> {
        let first = *self.members.first()?;
        self.members.iter().all(|s| s.is_subset(first)).then_some(0)
    }

    pub fn index_of(&self, s: ElementSet) -> Option<usize> {
        self.members.iter().position(|&m| m == s)
    }
}

/// Möbius values `mu(S) = mu_P(S, top)`: `mu(top) = 1` and
/// `mu(S) = -sum_{S' > S} mu(S')`.
pub fn moebius_values(poset: &SubgroupPoset) -> Result<Vec<i64>> {
    poset.top().ok_or(CensusError::MissingTop)?;
    let members = poset.members();
    let mut mu = vec![0i64; members.len()];
    mu[0] = 1;
    for i in 1..members.len() {
        mu[i] = -(0..i).filter(|&j| members[i].is_subset(members[j]) && members[i] != members[j]).map(|j| mu[j]).sum::<i64>();
    }
    Ok(mu)
}

/// Re-sums `sum_{S' >= S} mu(S')` for every `S` and compares with `[S = top]`.
pub fn moebius_identity_holds(poset: &SubgroupPoset, mu: &[i64]) -> bool {
    let Some(top) = poset.top() else { return false };
    (0..poset.len()).all(|i| {
        let total: i64 = (0..poset.len()).filter(|&j| poset.leq(i, j)).map(|j| mu[j]).sum();
        total == i64::from(i == top)
    })
}

/// Every subgroup of `g`, duplicate-free: cyclic subgroups closed under
/// pairwise joins until nothing new appears.
pub fn all_subgroups(g: &FiniteGroup, limits: &Limits) -> Result<Vec<ElementSet>> {
    if g.order() > limits.formula_max_order {
        return Err(CensusError::ScaleExceeded { order: g.order(), bound: limits.formula_max_order, what: "subgroup enumeration" });
    }
    let mut seen = HashSet::new();
    let mut found: Vec<ElementSet> = Vec::new();
    for x in 0..g.order() {
        let c = g.generated_subgroup(ElementSet::singleton(x));
        if seen.insert(c) {
            found.push(c);
        }
    }
    let mut next = 0;
    while next < found.len() {
        let s = found[next];
        for i in 0..next {
            let joined = g.extend_subgroup(s, found[i]);
            if seen.insert(joined) {
                found.push(joined);
            }
        }
        next += 1;
    }
    Ok(found)
}

/// All subgroups with their inclusion order and Möbius values.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    poset: SubgroupPoset,
    leq: Vec<Vec<bool>>,
    mu: Vec<i64>,
}

impl SubgroupLattice {
    pub fn new(g: &FiniteGroup, limits: &Limits) -> Result<Self> {
        let poset = SubgroupPoset::new(all_subgroups(g, limits)?);
        let mu = moebius_values(&poset)?;
        let leq = poset.leq_matrix();
        Ok(SubgroupLattice { poset, leq, mu })
    }

    pub fn subgroups(&self) -> &[ElementSet] {
        self.poset.members()
    }

    pub fn poset(&self) -> &SubgroupPoset {
        &self.poset
    }

    pub fn leq(&self) -> &[Vec<bool>] {
        &self.leq
    }

    pub fn mu(&self) -> &[i64] {
        &self.mu
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// The subgroups `S` with `alpha(S) = S`, with the induced order.
    pub fn invariant_subposet(&self, alpha: &Automorphism) -> SubgroupPoset {
        SubgroupPoset { members: self.subgroups().iter().copied().filter(|&s| alpha.fixes_set(s)).collect() }
    }
}

pub fn invariant_subgroups(lattice: &SubgroupLattice, alpha: &Automorphism) -> SubgroupPoset {
    lattice.invariant_subposet(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builders::*;
    use crate::morphism::automorphism_group;
    use crate::numbers::{divisors, moebius};

    fn lattice(g: &FiniteGroup) -> SubgroupLattice {
        SubgroupLattice::new(g, &Limits::default()).unwrap()
    }

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(lattice(&cyclic(12)).len(), 6);
        assert_eq!(lattice(&cyclic(13)).len(), 2);
        assert_eq!(lattice(&direct_product(&[cyclic(2), cyclic(2)]).unwrap()).len(), 5);
        assert_eq!(lattice(&symmetric(3).unwrap()).len(), 6);
        assert_eq!(lattice(&quaternion()).len(), 6);
        assert_eq!(lattice(&dihedral(4).unwrap()).len(), 10);
        assert_eq!(lattice(&alternating(4).unwrap()).len(), 10);
        assert_eq!(lattice(&direct_product(&[cyclic(2), cyclic(2), cyclic(2)]).unwrap()).len(), 16);
    }

    #[test]
    fn subgroups_are_closed_under_meet() {
        for g in [dihedral(6).unwrap(), alternating(4).unwrap(), direct_product(&[cyclic(2), cyclic(4)]).unwrap()] {
            let l = lattice(&g);
            let subs: HashSet<ElementSet> = l.subgroups().iter().copied().collect();
            for &a in l.subgroups() {
                assert!(g.is_subgroup(a));
                for &b in l.subgroups() {
                    assert!(subs.contains(&a.intersection(b)));
                }
            }
        }
    }

    #[test]
    fn cyclic_moebius_matches_number_theory() {
        for n in 1..=24usize {
            let g = cyclic(n);
            let l = lattice(&g);
            assert_eq!(l.len(), divisors(n as u64).len());
            for (s, &mu) in l.subgroups().iter().zip(l.mu()) {
                assert_eq!(mu, moebius((n / s.len()) as u64), "Z{n}, |S| = {}", s.len());
            }
        }
    }

    #[test]
    fn moebius_hand_examples() {
        let chain = SubgroupPoset::new(vec![set(&[0]), ElementSet::full(5)]);
        assert_eq!(moebius_values(&chain).unwrap(), vec![1, -1]);

        let z9 = SubgroupPoset::new(vec![set(&[0]), set(&[0, 3, 6]), ElementSet::full(9)]);
        assert_eq!(moebius_values(&z9).unwrap(), vec![1, -1, 0]);

        let v4 = lattice(&direct_product(&[cyclic(2), cyclic(2)]).unwrap());
        assert_eq!(v4.mu(), &[1, -1, -1, -1, 2]);
        assert!(moebius_identity_holds(v4.poset(), v4.mu()));
    }

    #[test]
    fn missing_top_is_an_error() {
        let p = SubgroupPoset::new(vec![set(&[0, 1]), set(&[0, 2])]);
        assert_eq!(moebius_values(&p), Err(CensusError::MissingTop));
    }

    #[test]
    fn invariant_subposets() {
        let z8 = cyclic(8);
        let l = lattice(&z8);
        let times3 = Automorphism::from_map(&z8, (0..8).map(|x| 3 * x % 8).collect()).unwrap();
        assert_eq!(invariant_subgroups(&l, &times3).len(), 4);
        assert_eq!(l.invariant_subposet(&Automorphism::identity(8)).members(), l.subgroups());

        // Z2xZ2 with indices (a,b) -> 2a+b; swap the factors
        let v4 = direct_product(&[cyclic(2), cyclic(2)]).unwrap();
        let swap = Automorphism::from_map(&v4, vec![0, 2, 1, 3]).unwrap();
        let p = lattice(&v4).invariant_subposet(&swap);
        assert_eq!(p.len(), 3);
        assert!(p.index_of(set(&[0, 3])).is_some());
        assert_eq!(moebius_values(&p).unwrap(), vec![1, -1, 0]);
    }

    #[test]
    fn identity_holds_on_every_invariant_subposet() {
        for g in [quaternion(), dihedral(4).unwrap(), alternating(4).unwrap()] {
            let l = lattice(&g);
            for alpha in &automorphism_group(&g, &Limits::default()).unwrap() {
                let p = l.invariant_subposet(alpha);
                assert!(p.members().iter().all(|&s| alpha.fixes_set(s)));
                let mu = moebius_values(&p).unwrap();
                assert!(moebius_identity_holds(&p, &mu));
            }
        }
    }
}
