//! Partitions, compositions and multipartitions.
//!
//! A block configuration of an operator is a pair of partitions (one for the
//! conjugate-pair blocks, one for the real blocks), so this is the vocabulary
//! the rest of the crate is written in. The partition of 0 is the empty
//! sequence; zero parts never appear in a [`Partition`] or a
//! [`DerivedComposition`].

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates `parts` as written; no reordering.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be positive",
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be weakly decreasing",
            });
        }
        Ok(Self { parts })
    }

    /// Sorts into canonical order and drops zero parts.
    pub fn canonical(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p != 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// The integer being partitioned.
    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

/// An ordered sequence of nonnegative integers in which 0 occurs at most once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().filter(|&&p| p == 0).count() > 1 {
            return Err(Error::InvalidComposition {
                parts,
                reason: "0 may appear at most once",
            });
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, zero parts included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

/// One partition per part of a composition `mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multipartition {
    pub mu: Composition,
    pub thetas: Vec<Partition>,
}

impl Multipartition {
    pub fn new(mu: Composition, thetas: Vec<Partition>) -> Result<Self> {
        let m = Self { mu, thetas };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if self.mu.len() != self.thetas.len() {
            return Err(Error::InvalidMultipartition(format!(
                "composition {} has {} parts but {} partitions were given",
                self.mu,
                self.mu.len(),
                self.thetas.len()
            )));
        }
        for (i, (&part, theta)) in self.mu.parts().iter().zip(&self.thetas).enumerate() {
            if theta.sum() != part {
                return Err(Error::InvalidMultipartition(format!(
                    "partition {theta} at position {i} does not sum to {part}"
                )));
            }
        }
        Ok(())
    }
}

/// The concatenation of a multipartition's partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DerivedComposition {
    parts: Vec<usize>,
}

impl DerivedComposition {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for DerivedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

/// Removes the grouping of a multipartition, e.g. `((4,1),(3,2,1),(2,1))`
/// becomes `(4,1,3,2,1,2,1)`.
pub fn derived_composition(m: &Multipartition) -> Result<DerivedComposition> {
    m.validate()?;
    let parts = m
        .thetas
        .iter()
        .flat_map(|t| t.parts().iter().copied())
        .collect();
    Ok(DerivedComposition { parts })
}

/// Streams the partitions of `n` in reverse-lexicographic order, starting
/// from `(n)` and ending at `(1,…,1)`.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// Iterator returned by [`partitions_of`].
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

impl std::iter::FusedIterator for Partitions {}

// Decrement the rightmost part larger than 1 and refill the tail greedily
// with parts no larger than the decremented value.
fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let mut next = parts.to_vec();
    advance(&mut next).then_some(next)
}

fn advance(parts: &mut Vec<usize>) -> bool {
    let Some(pivot) = parts.iter().rposition(|&p| p > 1) else {
        return false;
    };
    let mut rest: usize = parts[pivot..].iter().sum();
    let cap = parts[pivot] - 1;
    parts.truncate(pivot);
    while rest > 0 {
        let take = cap.min(rest);
        parts.push(take);
        rest -= take;
    }
    true
}

/// Calls `f` on every partition of `n`, in the same order as
/// [`partitions_of`], reusing one buffer.
pub fn for_each_partition(n: usize, mut f: impl FnMut(&[usize])) {
    let mut parts = if n == 0 { Vec::new() } else { vec![n] };
    loop {
        f(&parts);
        if !advance(&mut parts) {
            break;
        }
    }
}

/// The partition function p(n), via Euler's pentagonal-number recurrence
/// `p(n) = Σ_{k≥1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]`.
pub fn partition_count(n: usize) -> BigUint {
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    table.push(BigUint::one());
    for m in 1..=n {
        // Alternating sum kept as (positive, negative) halves to stay unsigned.
        let mut pos = BigUint::zero();
        let mut neg = BigUint::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let bucket = if k % 2 == 1 { &mut pos } else { &mut neg };
            *bucket += &table[m - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                *bucket += &table[m - g2];
            }
        }
        table.push(pos - neg);
    }
    table.swap_remove(n)
}

pub(crate) fn write_tuple(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}
