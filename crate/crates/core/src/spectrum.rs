//! The set Mₙ of attainable invariant-subspace counts on ℝⁿ.
//!
//! A finite count comes from a configuration of Jordan blocks with pairwise
//! distinct roots. A standard block of size `k` contributes a chain of `k + 1`
//! invariant subspaces; a real block of size `2k` (one conjugate pair)
//! contributes `k + 1` as well, at even dimensions only. Invariant subspaces
//! of the whole space are direct sums of one chain member per block.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinatorics::{for_each_partition, partitions_of, Partition};
use crate::error::{Error, Result};

/// Block sizes of an operator with one Jordan block per distinct root.
///
/// A part `k` of `complex_blocks` is a real Jordan block of size `2k`; a part
/// `k` of `real_blocks` is a standard Jordan block of size `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockConfig {
    complex_blocks: Partition,
    real_blocks: Partition,
}

impl BlockConfig {
    pub fn new(complex_blocks: Partition, real_blocks: Partition) -> Self {
        Self {
            complex_blocks,
            real_blocks,
        }
    }

    /// Builds a config from block sizes in any order.
    pub fn from_blocks(complex: Vec<usize>, real: Vec<usize>) -> Self {
        Self::new(Partition::canonical(complex), Partition::canonical(real))
    }

    pub fn complex_blocks(&self) -> &Partition {
        &self.complex_blocks
    }

    pub fn real_blocks(&self) -> &Partition {
        &self.real_blocks
    }

    /// `r`: half the dimension taken by the complex blocks.
    pub fn complex_weight(&self) -> usize {
        self.complex_blocks.sum()
    }

    /// `s`: the dimension taken by the real blocks.
    pub fn real_weight(&self) -> usize {
        self.real_blocks.sum()
    }

    pub fn dimension(&self) -> usize {
        2 * self.complex_weight() + self.real_weight()
    }
}

impl fmt::Display for BlockConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "complex={} real={}",
            self.complex_blocks, self.real_blocks
        )
    }
}

/// Sorted, deduplicated counts attainable on ℝⁿ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumSet {
    pub n: usize,
    pub values: Vec<BigUint>,
}

impl SpectrumSet {
    fn from_set(n: usize, set: BTreeSet<BigUint>) -> Self {
        Self {
            n,
            values: set.into_iter().collect(),
        }
    }

    pub fn contains(&self, m: &BigUint) -> bool {
        self.values.binary_search(m).is_ok()
    }

    pub fn max(&self) -> Option<&BigUint> {
        self.values.last()
    }

    pub fn min(&self) -> Option<&BigUint> {
        self.values.first()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl fmt::Display for SpectrumSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_{} = {{", self.n)?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Number of invariant subspaces by dimension; `coefficients[d]` counts the
/// ones of dimension `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionProfile {
    pub coefficients: Vec<BigUint>,
}

impl DimensionProfile {
    pub fn total(&self) -> BigUint {
        self.coefficients.iter().sum()
    }
}

/// `∏ (k + 1)` over every block part `k`.
pub fn count_for_config(c: &BlockConfig) -> BigUint {
    c.complex_blocks
        .parts()
        .iter()
        .chain(c.real_blocks.parts())
        .fold(BigUint::one(), |acc, &k| acc * BigUint::from(k + 1))
}

/// Product of the per-block chain polynomials: `1 + x + … + x^k` for a real
/// block, `1 + x² + … + x^{2k}` for a complex block.
pub fn dimension_profile(c: &BlockConfig) -> DimensionProfile {
    let mut coefficients = vec![BigUint::one()];
    let factors = c
        .complex_blocks
        .parts()
        .iter()
        .map(|&k| (k, 2))
        .chain(c.real_blocks.parts().iter().map(|&k| (k, 1)));
    for (k, step) in factors {
        let mut next = vec![BigUint::zero(); coefficients.len() + k * step];
        for (d, coeff) in coefficients.iter().enumerate() {
            for j in 0..=k {
                next[d + j * step] += coeff;
            }
        }
        coefficients = next;
    }
    DimensionProfile { coefficients }
}

/// Streams every block configuration on ℝⁿ: `r` ascending from 0 to ⌊n/2⌋,
/// then complex partitions of `r`, then real partitions of `n − 2r`.
pub fn enumerate_configs(n: usize) -> Result<impl Iterator<Item = BlockConfig>> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    Ok(configs_unchecked(n))
}

fn configs_unchecked(n: usize) -> impl Iterator<Item = BlockConfig> {
    (0..=n / 2).flat_map(move |r| configs_with_weight(n, r))
}

/// Configurations on ℝⁿ whose complex blocks take dimension `2r`.
pub(crate) fn configs_with_weight(n: usize, r: usize) -> impl Iterator<Item = BlockConfig> {
    let s = n - 2 * r;
    partitions_of(r).flat_map(move |complex| {
        partitions_of(s).map(move |real| BlockConfig::new(complex.clone(), real))
    })
}

/// Mₙ: every `count_for_config` value over [`enumerate_configs`].
///
/// A config's count factors as (complex-block product) × (real-block
/// product), so for each `r` the counts are the pairwise products of the
/// distinct values those two factors take. That visits each partition of `r`
/// and of `n − 2r` once instead of every pair of them.
pub fn enumerate_mn(n: usize) -> Result<SpectrumSet> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut products: Vec<Option<BTreeSet<BigUint>>> = vec![None; n + 1];
    let mut set = BTreeSet::new();
    for r in 0..=n / 2 {
        let s = n - 2 * r;
        for m in [r, s] {
            if products[m].is_none() {
                products[m] = Some(distinct_products(m));
            }
        }
        let (complex, real) = (
            products[r].as_ref().expect("filled"),
            products[s].as_ref().expect("filled"),
        );
        for a in complex {
            for b in real {
                set.insert(a * b);
            }
        }
    }
    Ok(SpectrumSet::from_set(n, set))
}

/// Distinct values of `∏ (k + 1)` over the partitions of `m`.
fn distinct_products(m: usize) -> BTreeSet<BigUint> {
    // (k + 1) <= 2^k, so every product is at most 2^m.
    if m < 128 {
        let mut seen = HashSet::new();
        for_each_partition(m, |parts| {
            seen.insert(parts.iter().fold(1u128, |acc, &k| acc * (k as u128 + 1)));
        });
        return seen.into_iter().map(BigUint::from).collect();
    }
    let mut seen = BTreeSet::new();
    for_each_partition(m, |parts| {
        seen.insert(
            parts
                .iter()
                .fold(BigUint::one(), |acc, &k| acc * BigUint::from(k + 1)),
        );
    });
    seen
}

/// Mₙ by brute force: recursively choose block multisets (complex sizes
/// nonincreasing, then real sizes nonincreasing) filling dimension `n`.
///
/// Shares nothing with the partition machinery used by [`enumerate_mn`].
pub fn oracle_mn(n: usize) -> Result<SpectrumSet> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut found = BTreeSet::new();
    oracle_complex(n, n / 2, BigUint::one(), &mut found);
    Ok(SpectrumSet::from_set(n, found))
}

// Choose the next complex block (dimension 2b, b <= max_b), or stop choosing
// complex blocks and switch to real ones.
fn oracle_complex(remaining: usize, max_b: usize, product: BigUint, out: &mut BTreeSet<BigUint>) {
    for b in (1..=max_b.min(remaining / 2)).rev() {
        oracle_complex(remaining - 2 * b, b, &product * (b + 1), out);
    }
    oracle_real(remaining, remaining, product, out);
}

fn oracle_real(remaining: usize, max_a: usize, product: BigUint, out: &mut BTreeSet<BigUint>) {
    if remaining == 0 {
        out.insert(product);
        return;
    }
    for a in (1..=max_a.min(remaining)).rev() {
        oracle_real(remaining - a, a, &product * (a + 1), out);
    }
}
