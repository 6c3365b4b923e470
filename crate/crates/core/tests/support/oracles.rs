//! Brute-force oracles that share no code with the library.
//!
//! * partitions: every composition of `j` (bitmask over the `j-1` gaps),
//!   sorted and deduplicated;
//! * box counting: order ideals of `N^3` grown one addable box at a time,
//!   deduplicated as sets, with an optional infinite leg along the third axis;
//! * configuration spaces: inclusion–exclusion over set partitions of the
//!   `r` points with the Möbius function of the partition lattice.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

pub fn partitions_brute(j: u32) -> BTreeSet<Vec<u32>> {
    if j == 0 {
        return [Vec::new()].into_iter().collect();
    }
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << (j - 1)) {
        let mut parts = Vec::new();
        let mut run = 1;
        for gap in 0..j - 1 {
            if mask & (1 << gap) != 0 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(parts);
    }
    out
}

type Box3 = (u32, u32, u32);

fn in_leg(b: Box3, leg: bool) -> bool {
    leg && b.0 == 0 && b.1 == 0
}

fn addable(set: &BTreeSet<Box3>, b: Box3, leg: bool) -> bool {
    if set.contains(&b) || in_leg(b, leg) {
        return false;
    }
    let present = |p: Box3| set.contains(&p) || in_leg(p, leg);
    (b.0 == 0 || present((b.0 - 1, b.1, b.2)))
        && (b.1 == 0 || present((b.0, b.1 - 1, b.2)))
        && (b.2 == 0 || present((b.0, b.1, b.2 - 1)))
}

/// Number of finite box sets of each size `0..=max`, grown level by level.
pub fn box_counts_by_growth(max: usize, leg: bool) -> Vec<u64> {
    let mut level: HashSet<BTreeSet<Box3>> = [BTreeSet::new()].into_iter().collect();
    let mut counts = vec![1u64];
    for _ in 0..max {
        let mut next = HashSet::new();
        for set in &level {
            let mut candidates: BTreeSet<Box3> = [(0, 0, 0), (1, 0, 0), (0, 1, 0)].into();
            for &(x, y, z) in set {
                candidates.extend([(x + 1, y, z), (x, y + 1, z), (x, y, z + 1)]);
            }
            if leg {
                // boxes resting directly on the leg's sides
                let top = set.iter().map(|b| b.2 + 1).max().unwrap_or(0);
                for z in 0..=top {
                    candidates.extend([(1, 0, z), (0, 1, z)]);
                }
            }
            for b in candidates {
                if addable(set, b, leg) {
                    let mut grown = set.clone();
                    grown.insert(b);
                    next.insert(grown);
                }
            }
        }
        counts.push(next.len() as u64);
        level = next;
    }
    counts
}

fn set_partitions(r: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new()];
    for point in 0..r {
        let mut next = Vec::new();
        for blocks in &out {
            for i in 0..blocks.len() {
                let mut b: Vec<Vec<usize>> = blocks.clone();
                b[i].push(point);
                next.push(b);
            }
            let mut b = blocks.clone();
            b.push(vec![point]);
            next.push(b);
        }
        out = next;
    }
    out
}

fn factorial(k: usize) -> i128 {
    (1..=k as i128).product()
}

/// `χ(C^r ∖ Δ)` by inclusion–exclusion over the diagonals: each set
/// partition `π` of the points contributes `μ(0̂, π) · e^{|π|}`.
pub fn config_space_inclusion_exclusion(e: i64, r: usize) -> i128 {
    set_partitions(r)
        .iter()
        .map(|blocks| {
            let mobius: i128 = blocks
                .iter()
                .map(|b| {
                    let sign = if b.len() % 2 == 1 { 1 } else { -1 };
                    sign * factorial(b.len() - 1)
                })
                .product();
            mobius * i128::from(e).pow(blocks.len() as u32)
        })
        .sum()
}

/// Number of distinct sequences obtained by permuting `parts`.
pub fn distinct_orderings(parts: &[u32]) -> usize {
    fn go(rest: &mut Vec<u32>, prefix: &mut Vec<u32>, seen: &mut HashSet<Vec<u32>>) {
        if rest.is_empty() {
            seen.insert(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            go(rest, prefix, seen);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let mut seen = HashSet::new();
    go(&mut parts.to_vec(), &mut Vec::new(), &mut seen);
    seen.len()
}
