//! Brute-force ground truth: explicit connection sets, pairwise equivalence
//! tests and orbit counts that do not rely on any closed-form expression.

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{CensusError, Result};
use crate::group::{ElementSet, FiniteGroup, IDENTITY};
use crate::morphism::{Automorphism, AutomorphismGroup};
use crate::partition::CycleType;

/// An inverse-closed, identity-free subset `Ω` of the group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectionSet(ElementSet);

impl ConnectionSet {
    pub fn new(g: &FiniteGroup, members: ElementSet) -> Result<Self> {
        if !members.is_subset(g.elements()) {
            return Err(CensusError::InvalidConnectionSet("contains indices outside the group".into()));
        }
        if members.contains(IDENTITY) {
            return Err(CensusError::InvalidConnectionSet("contains the identity".into()));
        }
        if let Some(x) = members.iter().find(|&x| !members.contains(g.inv(x))) {
            return Err(CensusError::InvalidConnectionSet(format!("not inverse-closed: missing the inverse of {}", g.element_name(x))));
        }
        Ok(ConnectionSet(members))
    }

    pub fn from_indices(g: &FiniteGroup, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: ElementSet = indices.into_iter().filter(|&i| i < 128).collect();
        Self::new(g, members)
    }

    pub fn members(&self) -> ElementSet {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `|O_2(Ω)|`.
    pub fn involution_count(&self, g: &FiniteGroup) -> usize {
        g.involution_set(self.0).len()
    }

    pub fn generates(&self, g: &FiniteGroup) -> bool {
        g.generated_subgroup(self.0).len() == g.order()
    }
}

/// The unordered pair `{x, x^-1}` with `x` not an involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairClass {
    pub representative: usize,
    pub partner: usize,
}

/// Splits `s \ {e}` into non-involution pair classes and involutions.
pub fn pair_classes(g: &FiniteGroup, s: ElementSet) -> (Vec<PairClass>, Vec<usize>) {
    let mut pairs = Vec::new();
    let mut involutions = Vec::new();
    for x in s.iter().filter(|&x| x != IDENTITY) {
        let xi = g.inv(x);
        if xi == x {
            involutions.push(x);
        } else if x < xi {
            pairs.push(PairClass { representative: x, partner: xi });
        }
    }
    (pairs, involutions)
}

/// A simple undirected Cayley graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyGraph {
    pub vertex_count: usize,
    /// Edges `(g, h)` with `g < h`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl CayleyGraph {
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Edges `{g, h}` with `g^-1 h ∈ Ω`.
pub fn build_cayley_graph(g: &FiniteGroup, omega: &ConnectionSet) -> Result<CayleyGraph> {
    let omega = ConnectionSet::new(g, omega.members())?;
    let n = g.order();
    let edges = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| omega.members().contains(g.mul(g.inv(a), b)))
        .collect();
    Ok(CayleyGraph { vertex_count: n, edges })
}

/// `G_m(A)` stratified by `k`: stratum `k` holds the sets with exactly
/// `m - 2k` involutions.
#[derive(Clone, Debug, Default)]
pub struct ConnectionSetFamily {
    pub degree: usize,
    pub strata: Vec<Vec<ConnectionSet>>,
}

impl ConnectionSetFamily {
    pub fn len(&self) -> usize {
        self.strata.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn sets(&self) -> impl Iterator<Item = &ConnectionSet> + '_ {
        self.strata.iter().flatten()
    }

    pub fn to_vec(&self) -> Vec<ConnectionSet> {
        self.sets().copied().collect()
    }
}

/// Every generating connection set of size `m`, each exactly once, built
/// from `k` non-involution pair classes and `m - 2k` involutions.
pub fn enumerate_connection_sets(g: &FiniteGroup, m: usize) -> ConnectionSetFamily {
    let (pairs, involutions) = pair_classes(g, g.elements());
    let strata = (0..=m / 2)
        .map(|k| {
            let mut stratum = Vec::new();
            if k > pairs.len() || m - 2 * k > involutions.len() {
                return stratum;
            }
            for chosen_pairs in pairs.iter().combinations(k) {
                let base: ElementSet = chosen_pairs.iter().flat_map(|p| [p.representative, p.partner]).collect();
                for chosen_inv in involutions.iter().copied().combinations(m - 2 * k) {
                    let set = base.union(chosen_inv.into_iter().collect());
                    if g.generated_subgroup(set).len() == g.order() {
                        stratum.push(ConnectionSet(set));
                    }
                }
            }
            stratum
        })
        .collect();
    ConnectionSetFamily { degree: m, strata }
}

fn check_same_degree(a: &ConnectionSet, b: &ConnectionSet) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(CensusError::DegreeMismatch { left: a.degree(), right: b.degree() });
    }
    Ok(())
}

/// True iff some automorphism in `aut` maps `a` onto `b`.
pub fn are_weakly_equivalent(a: &ConnectionSet, b: &ConnectionSet, aut: &AutomorphismGroup) -> Result<bool> {
    check_same_degree(a, b)?;
    Ok(aut.iter().any(|alpha| alpha.apply_to_set(a.members()) == b.members()))
}

/// True iff `x^-1 a x = b` for some `x`.
pub fn are_equivalent(g: &FiniteGroup, a: &ConnectionSet, b: &ConnectionSet) -> Result<bool> {
    check_same_degree(a, b)?;
    Ok((0..g.order()).any(|x| g.conjugate_set(a.members(), x) == b.members()))
}

pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Classes in order of their smallest member.
    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: HashMap<usize, usize> = HashMap::new();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            let slot = *by_root.entry(r).or_insert_with(|| {
                out.push(Vec::new());
                out.len() - 1
            });
            out[slot].push(x);
        }
        out
    }
}

/// Orbits of `action` on `sets`, as lists of indices into `sets`.
pub fn orbit_partition(sets: &[ConnectionSet], action: &AutomorphismGroup) -> Result<Vec<Vec<usize>>> {
    let index: HashMap<ElementSet, usize> = sets.iter().enumerate().map(|(i, s)| (s.members(), i)).collect();
    let mut uf = UnionFind::new(sets.len());
    for alpha in action {
        for (i, s) in sets.iter().enumerate() {
            let image = alpha.apply_to_set(s.members());
            let j = *index
                .get(&image)
                .ok_or_else(|| CensusError::Precondition("the action does not preserve the set family".into()))?;
            uf.union(i, j);
        }
    }
    Ok(uf.classes())
}

/// Number of orbits, counted by union-find and cross-checked with the
/// Burnside average of fixed-point counts.
pub fn orbit_count(sets: &[ConnectionSet], action: &AutomorphismGroup) -> Result<usize> {
    let orbits = orbit_partition(sets, action)?.len();
    let fixed: usize = action
        .iter()
        .map(|alpha| sets.iter().filter(|s| alpha.fixes_set(s.members())).count())
        .sum();
    if action.is_empty() || !fixed.is_multiple_of(action.len()) {
        return Err(CensusError::Inconsistency(format!("Burnside sum {fixed} is not divisible by |H| = {}", action.len())));
    }
    if fixed / action.len() != orbits {
        return Err(CensusError::Inconsistency(format!(
            "union-find found {orbits} orbits but the Burnside average is {}",
            fixed / action.len()
        )));
    }
    Ok(orbits)
}

/// Per-stratum orbit counts of `G_m(A)`.
pub fn stratified_orbit_counts(family: &ConnectionSetFamily, action: &AutomorphismGroup) -> Result<Vec<usize>> {
    family.strata.iter().map(|stratum| orbit_count(stratum, action)).collect()
}

/// Brute-force count of tuples `(x̄_1..x̄_k, ȳ_1..ȳ_{m-2k})` of distinct pair
/// classes in `s` fixed by `(alpha, sigma, tau)`, using the canonical
/// representatives of the two cycle types.
pub fn enumerate_fixed_tuples(
    g: &FiniteGroup,
    s: ElementSet,
    alpha: &Automorphism,
    sigma_type: &CycleType,
    tau_type: &CycleType,
    m: usize,
    k: usize,
) -> Result<u64> {
    if sigma_type.degree() != k || 2 * k > m || tau_type.degree() != m - 2 * k {
        return Err(CensusError::Precondition(format!(
            "cycle types of degree {} and {} do not fit m = {m}, k = {k}",
            sigma_type.degree(),
            tau_type.degree()
        )));
    }
    enumerate_fixed_tuples_with(g, s, alpha, &sigma_type.representative(), &tau_type.representative())
}

/// As [`enumerate_fixed_tuples`] with explicit permutations `sigma` on the
/// `x` slots and `tau` on the `y` slots.
pub fn enumerate_fixed_tuples_with(g: &FiniteGroup, s: ElementSet, alpha: &Automorphism, sigma: &[usize], tau: &[usize]) -> Result<u64> {
    let (pairs, involutions) = pair_classes(g, s);
    let class_of = |x: usize| x.min(g.inv(x));
    // slot permutation over all m - k positions
    let k = sigma.len();
    let perm: Vec<usize> = sigma.iter().copied().chain(tau.iter().map(|&t| t + k)).collect();
    let x_candidates: Vec<usize> = pairs.iter().map(|p| p.representative).collect();
    let mut tuple = Vec::with_capacity(perm.len());
    let mut count = 0;
    fill(&x_candidates, &involutions, k, &perm, &mut tuple, &mut |t: &[usize]| {
        // fixed iff class(alpha(t_j)) == t_{perm(j)} for every slot j
        if (0..t.len()).all(|j| class_of(alpha.apply(t[j])) == t[perm[j]]) {
            count += 1;
        }
    });
    Ok(count)
}

fn fill(xs: &[usize], ys: &[usize], k: usize, perm: &[usize], tuple: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if tuple.len() == perm.len() {
        visit(tuple);
        return;
    }
    let pool = if tuple.len() < k { xs } else { ys };
    for &c in pool {
        if tuple.contains(&c) {
            continue;
        }
        tuple.push(c);
        fill(xs, ys, k, perm, tuple, visit);
        tuple.pop();
    }
}
