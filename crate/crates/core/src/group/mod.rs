//! Finite groups as immutable multiplication tables.
//!
//! Elements are indexed `0..n` and the identity always sits at index 0.
//! Builders for the standard families live in [`builders`]; textual group
//! specs and JSON table files are handled by [`spec`].

pub mod builders;
mod set;
pub mod spec;

use std::collections::VecDeque;

pub use set::{ElementSet, Iter, MAX_ORDER};

use crate::error::{CensusError, Result};

pub const IDENTITY: usize = 0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    element_orders: Vec<usize>,
    names: Vec<String>,
}

/// Outcome of validating an externally supplied table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LoadReport {
    /// `relabeling[old] = new` when the identity was not at index 0.
    pub relabeling: Option<Vec<usize>>,
}

impl FiniteGroup {
    /// Builds a group from a table already known to satisfy the group axioms
    /// with identity at index 0.
    pub(crate) fn from_trusted(name: impl Into<String>, order: usize, table: Vec<usize>, names: Vec<String>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!(order <= MAX_ORDER);
        let mut inverses = vec![IDENTITY; order];
        for g in 0..order {
            inverses[g] = (0..order)
                .find(|&h| table[g * order + h] == IDENTITY)
                .expect("every element has an inverse");
        }
        let mut element_orders = vec![1; order];
        for (g, slot) in element_orders.iter_mut().enumerate() {
            let mut x = g;
            while x != IDENTITY {
                x = table[x * order + g];
                *slot += 1;
            }
        }
        let names = if names.len() == order { names } else { (0..order).map(|i| i.to_string()).collect() };
        FiniteGroup { name: name.into(), order, table, inverses, element_orders, names }
    }

    /// Validates an arbitrary multiplication table. The identity is moved to
    /// index 0 if necessary; the relabeling is returned in the report.
    pub fn from_table(name: impl Into<String>, rows: &[Vec<usize>], names: Option<Vec<String>>) -> Result<(Self, LoadReport)> {
        let n = rows.len();
        if n == 0 {
            return Err(CensusError::NotAGroup("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(CensusError::TooLarge { max: MAX_ORDER });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(CensusError::NotAGroup(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(CensusError::NotAGroup(format!("entry {bad} in row {i} is out of range")));
            }
        }
        if let Some(names) = &names {
            if names.len() != n {
                return Err(CensusError::NotAGroup(format!("{} names for {n} elements", names.len())));
            }
        }
        let at = |a: usize, b: usize| rows[a][b];

        let identity = (0..n)
            .find(|&e| (0..n).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or_else(|| CensusError::NotAGroup("no two-sided identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(CensusError::NotAGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        for g in 0..n {
            if !(0..n).any(|h| at(g, h) == identity && at(h, g) == identity) {
                return Err(CensusError::NotAGroup(format!("element {g} has no inverse")));
            }
        }

        // swap the identity into slot 0
        let relabel: Vec<usize> = (0..n)
            .map(|g| if g == identity { 0 } else if g == 0 { identity } else { g })
            .collect();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel[a] * n + relabel[b]] = relabel[at(a, b)];
            }
        }
        let names = names
            .map(|names| {
                let mut out = names.clone();
                for (old, name) in names.into_iter().enumerate() {
                    out[relabel[old]] = name;
                }
                out
            })
            .unwrap_or_default();
        let report = LoadReport { relabeling: (identity != 0).then_some(relabel) };
        Ok((Self::from_trusted(name, n, table, names), report))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        IDENTITY
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_orders
    }

    /// Least `d >= 1` with `g^d = e`.
    pub fn element_order(&self, g: usize) -> Result<usize> {
        self.check_index(g)?;
        Ok(self.element_orders[g])
    }

    pub fn element_name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    /// Looks up an element by its display name.
    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn check_index(&self, g: usize) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(CensusError::IndexOutOfRange { index: g, order: self.order })
        }
    }

    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    /// Rows of the multiplication table.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Members `g` of `s` with `g*g = e`, `g != e`.
    pub fn involution_set(&self, s: ElementSet) -> ElementSet {
        s.iter().filter(|&g| g != IDENTITY && self.element_orders[g] == 2).collect()
    }

    /// Elements of `s` that are not their own inverse.
    pub fn non_involutions(&self, s: ElementSet) -> ElementSet {
        s.iter().filter(|&g| self.inverses[g] != g).collect()
    }

    /// The subgroup generated by `gens`.
    pub fn generated_subgroup(&self, gens: ElementSet) -> ElementSet {
        self.extend_subgroup(ElementSet::singleton(IDENTITY), gens)
    }

    /// Smallest subgroup containing the subgroup `base` and the elements of
    /// `gens`. In a finite group closure under right multiplication by the
    /// generators already yields inverses.
    pub fn extend_subgroup(&self, base: ElementSet, gens: ElementSet) -> ElementSet {
        let gens: Vec<usize> = base.union(gens).iter().filter(|&g| g != IDENTITY).collect();
        let mut seen = base;
        seen.insert(IDENTITY);
        let mut queue: VecDeque<usize> = seen.iter().collect();
        while let Some(a) = queue.pop_front() {
            for &x in &gens {
                let b = self.mul(a, x);
                if !seen.contains(b) {
                    seen.insert(b);
                    queue.push_back(b);
                }
            }
        }
        seen
    }

    pub fn is_subgroup(&self, s: ElementSet) -> bool {
        s.contains(IDENTITY) && s.iter().all(|a| s.iter().all(|b| s.contains(self.mul(a, b))))
    }

    /// Image of `s` under conjugation `g -> x^-1 g x`.
    pub fn conjugate_set(&self, s: ElementSet, x: usize) -> ElementSet {
        let xi = self.inv(x);
        s.iter().map(|g| self.mul(self.mul(xi, g), x)).collect()
    }

    pub fn center(&self) -> ElementSet {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Formats a set using element names.
    pub fn format_set(&self, s: ElementSet) -> String {
        let parts: Vec<&str> = s.iter().map(|g| self.element_name(g)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}
