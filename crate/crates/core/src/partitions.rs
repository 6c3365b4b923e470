//! Integer partitions and the combinatorial factors attached to them.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Returns `None` unless `parts` is weakly decreasing with every part at least 1.
    pub fn new(parts: Vec<u32>) -> Option<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        let positive = parts.iter().all(|&p| p >= 1);
        (decreasing && positive).then_some(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn total(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Number of entries, counted with multiplicity.
    ///
    /// `(2,1,1)` has part count 3. This is the number of points in the
    /// configuration space each stratum is fibred over.
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// `(value, multiplicity)` pairs in decreasing order of value.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Order of the group permuting equal parts: `∏ (multiplicity of v)!`.
    pub fn aut_order(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .map(|(_, m)| factorial(m))
            .product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn factorial(m: usize) -> BigInt {
    (2..=m).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// All partitions of `j` in reverse-lexicographic order, starting at `(j)`
/// and ending at `(1,...,1)`. `j = 0` yields the single empty partition.
pub fn partitions_of(j: u32) -> Vec<Partition> {
    PartitionIter::new(j).collect()
}

/// Streaming form of [`partitions_of`].
#[derive(Debug, Clone)]
pub struct PartitionIter {
    next: Option<Vec<u32>>,
}

impl PartitionIter {
    pub fn new(j: u32) -> Self {
        let first = if j == 0 { Vec::new() } else { vec![j] };
        PartitionIter { next: Some(first) }
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

/// Next partition in reverse-lex order: strip the trailing ones, decrement
/// the last part `k > 1`, and refill the freed amount greedily with parts ≤ k-1.
fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    let ones = parts.iter().rev().take_while(|&&p| p == 1).count();
    let head_len = parts.len() - ones;
    if head_len == 0 {
        return None;
    }
    let mut out = parts[..head_len].to_vec();
    let k = out.pop().expect("head is non-empty") - 1;
    let mut rest = ones as u32 + k + 1;
    while rest > 0 {
        let p = k.min(rest);
        out.push(p);
        rest -= p;
    }
    Some(out)
}
