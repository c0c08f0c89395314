//! Automorphisms of finite groups and the groups `Aut(A)` and `Inn(A)`.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{CensusError, Result};
use crate::group::{ElementSet, FiniteGroup, IDENTITY};
use crate::limits::Limits;

/// Which automorphisms act: all of them (weak equivalence) or only the inner
/// ones (equivalence).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Weak,
    Equiv,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Weak => "weak",
            Mode::Equiv => "equiv",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "weak" => Ok(Mode::Weak),
            "equiv" => Ok(Mode::Equiv),
            other => Err(format!("unknown mode `{other}` (expected weak or equiv)")),
        }
    }
}

/// A group automorphism stored as a dense index map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    image: Vec<usize>,
    order: usize,
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism({:?}, order {})", self.image, self.order)
    }
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism { image: (0..n).collect(), order: 1 }
    }

    /// Wraps a map already known to be an automorphism.
    fn from_trusted(image: Vec<usize>) -> Self {
        let order = map_order(&image);
        Automorphism { image, order }
    }

    /// Validates that `image` is a bijective homomorphism of `g`.
    pub fn from_map(g: &FiniteGroup, image: Vec<usize>) -> Result<Self> {
        let n = g.order();
        if image.len() != n {
            return Err(CensusError::Precondition(format!("map has {} entries for a group of order {n}", image.len())));
        }
        if image.iter().any(|&x| x >= n) || image.iter().collect::<HashSet<_>>().len() != n {
            return Err(CensusError::Precondition("map is not a bijection".into()));
        }
        if !is_homomorphism(g, &image) {
            return Err(CensusError::Precondition("map is not a homomorphism".into()));
        }
        Ok(Self::from_trusted(image))
    }

    /// Conjugation `g -> x^-1 g x`.
    pub fn inner(g: &FiniteGroup, x: usize) -> Self {
        let xi = g.inv(x);
        Self::from_trusted((0..g.order()).map(|a| g.mul(g.mul(xi, a), x)).collect())
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Order of this automorphism in `Aut(A)`.
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.image[g]
    }

    pub fn apply_to_set(&self, s: ElementSet) -> ElementSet {
        s.iter().map(|g| self.image[g]).collect()
    }

    pub fn fixes_set(&self, s: ElementSet) -> bool {
        self.apply_to_set(s) == s
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Self::from_trusted(other.image.iter().map(|&x| self.image[x]).collect())
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Automorphism { image: inv, order: self.order }
    }

    /// The `r`-fold composite.
    pub fn power(&self, r: usize) -> Automorphism {
        let r = r % self.order;
        let mut image: Vec<usize> = (0..self.image.len()).collect();
        for _ in 0..r {
            for x in image.iter_mut() {
                *x = self.image[*x];
            }
        }
        Self::from_trusted(image)
    }
}

fn map_order(image: &[usize]) -> usize {
    // lcm of cycle lengths
    let mut seen = vec![false; image.len()];
    let mut order = 1;
    for start in 0..image.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = image[x];
            len += 1;
        }
        order = num_integer::lcm(order, len);
    }
    order
}

pub fn is_homomorphism(g: &FiniteGroup, image: &[usize]) -> bool {
    let n = g.order();
    (0..n).all(|a| (0..n).all(|b| image[g.mul(a, b)] == g.mul(image[a], image[b])))
}

/// A group of automorphisms acting on the elements of `A`.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    members: Vec<Automorphism>,
    kind: Mode,
}

impl AutomorphismGroup {
    pub fn new(members: Vec<Automorphism>, kind: Mode) -> Self {
        AutomorphismGroup { members, kind }
    }

    /// `Aut(A)` for [`Mode::Weak`], `Inn(A)` for [`Mode::Equiv`].
    pub fn for_mode(g: &FiniteGroup, mode: Mode, limits: &Limits) -> Result<Self> {
        match mode {
            Mode::Weak => automorphism_group(g, limits),
            Mode::Equiv => inner_automorphism_group(g, limits),
        }
    }

    pub fn members(&self) -> &[Automorphism] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Automorphism> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn kind(&self) -> Mode {
        self.kind
    }

    pub fn contains(&self, alpha: &Automorphism) -> bool {
        self.members.iter().any(|m| m.image == alpha.image)
    }

    /// Checks that the members are distinct, contain the identity and are
    /// closed under composition and inversion.
    pub fn is_closed(&self) -> bool {
        let set: HashSet<&[usize]> = self.members.iter().map(|a| a.image.as_slice()).collect();
        set.len() == self.members.len()
            && self.members.iter().any(Automorphism::is_identity)
            && self.members.iter().all(|a| set.contains(a.inverse().image.as_slice()))
            && self
                .members
                .iter()
                .cartesian_product(&self.members)
                .all(|(a, b)| set.contains(a.compose(b).image.as_slice()))
    }
}

impl<'a> IntoIterator for &'a AutomorphismGroup {
    type Item = &'a Automorphism;
    type IntoIter = std::slice::Iter<'a, Automorphism>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

fn check_scale(g: &FiniteGroup, limits: &Limits) -> Result<()> {
    if g.order() > limits.formula_max_order {
        return Err(CensusError::ScaleExceeded { order: g.order(), bound: limits.formula_max_order, what: "automorphism computation" });
    }
    Ok(())
}

/// Greedy generating sequence: repeatedly add an element of largest order
/// outside the subgroup generated so far.
pub fn generating_sequence(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut h = ElementSet::singleton(IDENTITY);
    while h.len() < g.order() {
        let next = (0..g.order())
            .filter(|&x| !h.contains(x))
            .max_by_key(|&x| (g.element_orders()[x], std::cmp::Reverse(x)))
            .expect("proper subgroup has a complement");
        gens.push(next);
        h = g.extend_subgroup(h, ElementSet::singleton(next));
    }
    gens
}

const UNSET: usize = usize::MAX;

/// Extends a partial homomorphism defined on the subgroup generated by
/// `gens[..images.len()-1]` to one that also sends the last generator to the
/// last image. Returns `None` on a consistency or injectivity conflict.
fn extend_partial(g: &FiniteGroup, gens: &[usize], images: &[usize], map: &[usize]) -> Option<Vec<usize>> {
    let mut map = map.to_vec();
    let mut used: ElementSet = map.iter().filter(|&&x| x != UNSET).copied().collect();
    let mut queue: Vec<usize> = (0..g.order()).filter(|&x| map[x] != UNSET).collect();
    while let Some(x) = queue.pop() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = g.mul(map[x], t);
            if map[y] == UNSET {
                if used.contains(fy) {
                    return None;
                }
                map[y] = fy;
                used.insert(fy);
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// Computes `Aut(A)` by backtracking over images of a generating sequence.
pub fn automorphism_group(g: &FiniteGroup, limits: &Limits) -> Result<AutomorphismGroup> {
    check_scale(g, limits)?;
    let gens = generating_sequence(g);
    let mut start = vec![UNSET; g.order()];
    start[IDENTITY] = IDENTITY;
    let mut found = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    search(g, &gens, &mut images, &start, &mut found);
    found.sort();
    let members = found.into_iter().map(Automorphism::from_trusted).collect();
    Ok(AutomorphismGroup::new(members, Mode::Weak))
}

fn search(g: &FiniteGroup, gens: &[usize], images: &mut Vec<usize>, map: &[usize], found: &mut Vec<Vec<usize>>) {
    let level = images.len();
    if level == gens.len() {
        debug_assert!(map.iter().all(|&x| x != UNSET));
        found.push(map.to_vec());
        return;
    }
    let want = g.element_orders()[gens[level]];
    for candidate in 0..g.order() {
        if g.element_orders()[candidate] != want || map.contains(&candidate) {
            continue;
        }
        images.push(candidate);
        if let Some(next) = extend_partial(g, &gens[..=level], images, map) {
            search(g, gens, images, &next, found);
        }
        images.pop();
    }
}

/// `Aut(A)` by scanning every bijection fixing the identity. Only feasible for
/// tiny groups; used to cross-check the backtracking search.
pub fn automorphisms_by_full_scan(g: &FiniteGroup) -> Result<AutomorphismGroup> {
    if g.order() > 8 {
        return Err(CensusError::ScaleExceeded { order: g.order(), bound: 8, what: "full bijection scan" });
    }
    let members = (1..g.order())
        .permutations(g.order() - 1)
        .map(|rest| std::iter::once(IDENTITY).chain(rest).collect::<Vec<_>>())
        .filter(|image| is_homomorphism(g, image))
        .map(Automorphism::from_trusted)
        .collect();
    Ok(AutomorphismGroup::new(members, Mode::Weak))
}

/// `Inn(A)`: conjugation maps with duplicates removed, identity first.
pub fn inner_automorphism_group(g: &FiniteGroup, limits: &Limits) -> Result<AutomorphismGroup> {
    check_scale(g, limits)?;
    let mut seen = HashSet::new();
    let members = (0..g.order())
        .map(|x| Automorphism::inner(g, x))
        .filter(|a| seen.insert(a.image.clone()))
        .collect();
    Ok(AutomorphismGroup::new(members, Mode::Equiv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builders::*;
    use crate::numbers::totient;

    fn aut(g: &FiniteGroup) -> AutomorphismGroup {
        automorphism_group(g, &Limits::default()).unwrap()
    }

    fn inn(g: &FiniteGroup) -> AutomorphismGroup {
        inner_automorphism_group(g, &Limits::default()).unwrap()
    }

    fn multiplier(n: usize, a: usize) -> Automorphism {
        Automorphism::from_map(&cyclic(n), (0..n).map(|x| a * x % n).collect()).unwrap()
    }

    #[test]
    fn aut_sizes() {
        assert_eq!(aut(&cyclic(8)).len(), 4);
        assert_eq!(aut(&direct_product(&[cyclic(2), cyclic(2)]).unwrap()).len(), 6);
        assert_eq!(aut(&cyclic(1)).len(), 1);
        assert_eq!(aut(&quaternion()).len(), 24);
        assert_eq!(aut(&dihedral(4).unwrap()).len(), 8);
        assert_eq!(aut(&symmetric(3).unwrap()).len(), 6);
        assert_eq!(aut(&alternating(4).unwrap()).len(), 24);
        assert_eq!(aut(&direct_product(&[cyclic(2), cyclic(2), cyclic(2)]).unwrap()).len(), 168);
    }

    #[test]
    fn aut_of_cyclic_is_units() {
        for n in 1..=24 {
            let a = aut(&cyclic(n));
            assert_eq!(a.len() as u64, totient(n as u64), "Z{n}");
            let mut multipliers: Vec<usize> = a.iter().map(|m| m.apply(1 % n)).collect();
            multipliers.sort();
            let units: Vec<usize> = (0..n).filter(|&u| num_integer::gcd(u, n) == 1 || n == 1).collect();
            assert_eq!(multipliers, units);
        }
    }

    #[test]
    fn backtracking_matches_full_scan() {
        let groups = [
            cyclic(6),
            cyclic(8),
            direct_product(&[cyclic(2), cyclic(4)]).unwrap(),
            direct_product(&[cyclic(2), cyclic(2), cyclic(2)]).unwrap(),
            dihedral(3).unwrap(),
            dihedral(4).unwrap(),
            quaternion(),
        ];
        for g in &groups {
            let mut a: Vec<Vec<usize>> = aut(g).iter().map(|m| m.image().to_vec()).collect();
            let mut b: Vec<Vec<usize>> = automorphisms_by_full_scan(g).unwrap().iter().map(|m| m.image().to_vec()).collect();
            a.sort();
            b.sort();
            assert_eq!(a, b, "{}", g.name());
        }
    }

    #[test]
    fn aut_is_closed_group_of_homomorphisms() {
        for g in [dihedral(5).unwrap(), alternating(4).unwrap(), quaternion()] {
            let a = aut(&g);
            assert!(a.is_closed());
            assert!(a.iter().all(|m| is_homomorphism(&g, m.image())));
            let i = inn(&g);
            assert!(i.is_closed());
            assert!(i.iter().all(|m| a.contains(m)));
        }
    }

    #[test]
    fn inner_sizes() {
        assert_eq!(inn(&cyclic(9)).len(), 1);
        assert!(inn(&cyclic(9)).members()[0].is_identity());
        assert_eq!(inn(&symmetric(3).unwrap()).len(), 6);
        assert_eq!(inn(&quaternion()).len(), 4);
        let a4 = alternating(4).unwrap();
        assert_eq!(inn(&a4).len(), a4.order() / a4.center().len());
    }

    #[test]
    fn apply_and_power() {
        let times3 = multiplier(8, 3);
        assert_eq!(times3.apply_to_set([1, 7].into_iter().collect()).to_vec(), vec![3, 5]);
        assert_eq!(times3.order(), 2);
        assert!(times3.power(2).is_identity());
        assert!(times3.power(0).is_identity());
        let times2 = multiplier(13, 2);
        assert_eq!(times2.order(), 12);
        assert_eq!(times2.power(6), multiplier(13, 12));
        let s: ElementSet = [2, 5, 6].into_iter().collect();
        assert_eq!(Automorphism::identity(8).apply_to_set(s), s);
    }

    #[test]
    fn inversion_fixes_symmetric_sets() {
        let g = direct_product(&[cyclic(3), cyclic(4)]).unwrap();
        let inversion = Automorphism::from_map(&g, g.inverses().to_vec()).unwrap();
        let s: ElementSet = [1, g.inv(1), 5, g.inv(5)].into_iter().collect();
        assert!(inversion.fixes_set(s));
    }

    #[test]
    fn from_map_rejects_non_automorphisms() {
        let z4 = cyclic(4);
        assert!(Automorphism::from_map(&z4, vec![0, 2, 1, 3]).is_err());
        assert!(Automorphism::from_map(&z4, vec![0, 1, 1, 3]).is_err());
        assert!(Automorphism::from_map(&z4, vec![0, 1]).is_err());
    }

    #[test]
    fn scale_bound() {
        let limits = Limits { formula_max_order: 10, oracle_max_order: 10 };
        assert!(matches!(automorphism_group(&cyclic(12), &limits), Err(CensusError::ScaleExceeded { .. })));
    }
}
