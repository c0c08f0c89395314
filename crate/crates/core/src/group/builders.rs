//! Constructors for the standard families. Builders produce tables that
//! satisfy the group axioms by construction and skip validation.

use std::collections::HashMap;

use itertools::Itertools;

use super::{FiniteGroup, MAX_ORDER};
use crate::error::{CensusError, Result};

/// Largest degree accepted by [`symmetric`] and [`alternating`].
pub const MAX_PERMUTATION_DEGREE: usize = 5;

/// The cyclic group `Z_n`; element `i` is the residue `i`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!((1..=MAX_ORDER).contains(&n), "cyclic group order out of range");
    let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
    FiniteGroup::from_trusted(format!("Z{n}"), n, table, (0..n).map(|i| i.to_string()).collect())
}

/// Direct product of the factors; the last factor varies fastest.
pub fn direct_product(factors: &[FiniteGroup]) -> Result<FiniteGroup> {
    let order = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.order()).filter(|&n| n <= MAX_ORDER))
        .ok_or(CensusError::TooLarge { max: MAX_ORDER })?;
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut parts = vec![0; factors.len()];
        for (slot, f) in parts.iter_mut().zip(factors).rev() {
            *slot = idx % f.order();
            idx /= f.order();
        }
        parts
    };
    let encode = |parts: &[usize]| parts.iter().zip(factors).fold(0, |acc, (&p, f)| acc * f.order() + p);
    let coords: Vec<Vec<usize>> = (0..order).map(decode).collect();
    let mut table = Vec::with_capacity(order * order);
    for a in &coords {
        for b in &coords {
            let prod: Vec<usize> = factors.iter().zip(a.iter().zip(b)).map(|(f, (&x, &y))| f.mul(x, y)).collect();
            table.push(encode(&prod));
        }
    }
    let names = coords
        .iter()
        .map(|c| format!("({})", c.iter().zip(factors).map(|(&x, f)| f.element_name(x)).join(",")))
        .collect();
    let name = factors.iter().map(FiniteGroup::name).join("x");
    Ok(FiniteGroup::from_trusted(name, order, table, names))
}

/// The dihedral group of order `2n`. Index `i < n` is `r^i`, index `n + i`
/// is `s r^i`, with `r s = s r^-1`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 || 2 * n > MAX_ORDER {
        return Err(CensusError::TooLarge { max: MAX_ORDER });
    }
    let order = 2 * n;
    let split = |x: usize| (x / n, x % n);
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            let (a, i) = split(x);
            let (b, j) = split(y);
            let rot = if b == 0 { (i + j) % n } else { (n - i + j) % n };
            table.push(((a + b) % 2) * n + rot);
        }
    }
    let rot_name = |i: usize| match i {
        0 => String::new(),
        1 => "r".to_string(),
        _ => format!("r^{i}"),
    };
    let names = (0..order)
        .map(|x| {
            let (a, i) = split(x);
            match (a, i) {
                (0, 0) => "e".to_string(),
                (0, _) => rot_name(i),
                _ => format!("s{}", rot_name(i)),
            }
        })
        .collect();
    Ok(FiniteGroup::from_trusted(format!("D{n}"), order, table, names))
}

/// The quaternion group `Q8` with elements `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion() -> FiniteGroup {
    // basis 0..4 = 1, i, j, k; product of basis units as (sign, basis)
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let table = (0..8)
        .flat_map(|x| {
            (0..8).map(move |y| {
                let (neg, basis) = UNIT[x / 2][y / 2];
                let negative = neg ^ (x % 2 == 1) ^ (y % 2 == 1);
                basis * 2 + usize::from(negative)
            })
        })
        .collect();
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    FiniteGroup::from_trusted("Q8", 8, table, names)
}

fn permutation_group(name: String, perms: Vec<Vec<usize>>) -> FiniteGroup {
    let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let order = perms.len();
    let mut table = Vec::with_capacity(order * order);
    for p in &perms {
        for q in &perms {
            // (p q)(x) = p(q(x))
            let pq: Vec<usize> = q.iter().map(|&x| p[x]).collect();
            table.push(index[pq.as_slice()]);
        }
    }
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_trusted(name, order, table, names)
}

fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = perm[start];
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = perm[x];
        }
        out.push_str(&format!("({})", cycle.iter().join(" ")));
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

fn is_even(perm: &[usize]) -> bool {
    let inversions = (0..perm.len()).flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
    inversions % 2 == 0
}

fn check_degree(n: usize) -> Result<()> {
    if (1..=MAX_PERMUTATION_DEGREE).contains(&n) {
        Ok(())
    } else {
        Err(CensusError::Precondition(format!("permutation degree {n} outside 1..={MAX_PERMUTATION_DEGREE}")))
    }
}

/// The symmetric group on `n` letters, elements in lexicographic order.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    check_degree(n)?;
    let perms = (0..n).permutations(n).collect();
    Ok(permutation_group(format!("S{n}"), perms))
}

/// The alternating group on `n` letters.
pub fn alternating(n: usize) -> Result<FiniteGroup> {
    check_degree(n)?;
    let perms = (0..n).permutations(n).filter(|p| is_even(p)).collect();
    Ok(permutation_group(format!("A{n}"), perms))
}
