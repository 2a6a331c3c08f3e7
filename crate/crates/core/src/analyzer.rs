//! Invariant-subspace counts of concrete rational matrices.
//!
//! A matrix has finitely many invariant subspaces exactly when it is
//! nonderogatory (minimal polynomial = characteristic polynomial, i.e. one
//! Jordan block per distinct root). In that case the count depends only on
//! the root multiplicities, split into real roots and conjugate pairs, and
//! those come out of a squarefree decomposition of the characteristic
//! polynomial plus a Sturm count per factor. No root is ever located.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::{
    char_poly, count_real_roots, min_poly, squarefree_decompose, Rational, RationalMatrix,
};
use crate::spectrum::{count_for_config, dimension_profile, BlockConfig, DimensionProfile};

/// Root multiplicities of the characteristic polynomial, one entry per
/// distinct real root and one per distinct conjugate pair. Both lists are
/// kept in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct JordanSignature {
    pub real: Vec<usize>,
    pub complex: Vec<usize>,
}

impl JordanSignature {
    pub fn new(mut real: Vec<usize>, mut complex: Vec<usize>) -> Self {
        real.sort_unstable_by(|a, b| b.cmp(a));
        complex.sort_unstable_by(|a, b| b.cmp(a));
        Self { real, complex }
    }

    pub fn dimension(&self) -> usize {
        self.real.iter().sum::<usize>() + 2 * self.complex.iter().sum::<usize>()
    }

    /// The block configuration of a nonderogatory operator with this
    /// signature.
    pub fn block_config(&self) -> BlockConfig {
        BlockConfig::from_blocks(self.complex.clone(), self.real.clone())
    }
}

impl From<&BlockConfig> for JordanSignature {
    fn from(c: &BlockConfig) -> Self {
        Self::new(
            c.real_blocks().parts().to_vec(),
            c.complex_blocks().parts().to_vec(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubspaceCount {
    Infinite,
    Finite {
        count: BigUint,
        signature: JordanSignature,
        profile: DimensionProfile,
    },
}

impl SubspaceCount {
    pub fn is_finite(&self) -> bool {
        matches!(self, Self::Finite { .. })
    }

    pub fn count(&self) -> Option<&BigUint> {
        match self {
            Self::Finite { count, .. } => Some(count),
            Self::Infinite => None,
        }
    }
}

/// Splits each squarefree factor of the characteristic polynomial into its
/// real roots and conjugate pairs, all carrying the factor's multiplicity.
pub fn jordan_signature(a: &RationalMatrix) -> JordanSignature {
    let decomposition =
        squarefree_decompose(&char_poly(a)).expect("characteristic polynomial has degree n >= 1");
    let mut real = Vec::new();
    let mut complex = Vec::new();
    for f in &decomposition.factors {
        let degree = f.factor.degree().expect("nonzero factor");
        let real_roots = count_real_roots(&f.factor).expect("Yun factors are squarefree");
        let m = f.multiplicity as usize;
        real.extend(std::iter::repeat_n(m, real_roots));
        complex.extend(std::iter::repeat_n(m, (degree - real_roots) / 2));
    }
    JordanSignature::new(real, complex)
}

/// True iff the minimal polynomial has full degree.
pub fn is_count_finite(a: &RationalMatrix) -> bool {
    min_poly(a).degree() == Some(a.dim())
}

pub fn count_invariant_subspaces(a: &RationalMatrix) -> SubspaceCount {
    if !is_count_finite(a) {
        return SubspaceCount::Infinite;
    }
    let signature = jordan_signature(a);
    let config = signature.block_config();
    SubspaceCount::Finite {
        count: count_for_config(&config),
        profile: dimension_profile(&config),
        signature,
    }
}

/// A real Jordan form matrix realizing `c`: complex blocks first with roots
/// `±i, ±2i, …`, then standard blocks with roots `1, 2, …`.
pub fn realize_config(c: &BlockConfig) -> RationalMatrix {
    let complex = c
        .complex_blocks()
        .parts()
        .iter()
        .zip(1i64..)
        .map(|(&k, b)| real_jordan_block(&Rational::zero(), &Rational::from_integer(b.into()), k));
    let real = c
        .real_blocks()
        .parts()
        .iter()
        .zip(1i64..)
        .map(|(&k, lambda)| jordan_block(&Rational::from_integer(lambda.into()), k));
    let blocks: Vec<RationalMatrix> = complex.chain(real).collect();
    RationalMatrix::block_diagonal(&blocks).expect("configuration has positive dimension")
}

/// `J_{λ,k}`: λ on the diagonal, 1 on the superdiagonal.
pub fn jordan_block(lambda: &Rational, k: usize) -> RationalMatrix {
    let mut m = RationalMatrix::scalar(k, lambda.clone());
    for i in 1..k {
        m[(i - 1, i)] = Rational::one();
    }
    m
}

/// The `2k × 2k` real Jordan block for `a ± bi`: `[[a, −b], [b, a]]` on the
/// diagonal and `I₂` on the block superdiagonal.
pub fn real_jordan_block(a: &Rational, b: &Rational, k: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(2 * k);
    for j in 0..k {
        let o = 2 * j;
        m[(o, o)] = a.clone();
        m[(o, o + 1)] = -b.clone();
        m[(o + 1, o)] = b.clone();
        m[(o + 1, o + 1)] = a.clone();
        if j + 1 < k {
            m[(o, o + 2)] = Rational::one();
            m[(o + 1, o + 3)] = Rational::one();
        }
    }
    m
}

/// `∏ (m+1)` taken directly over a squarefree decomposition of the
/// characteristic polynomial, counting each factor's real roots and
/// conjugate pairs separately. Used to cross-check the signature route.
pub fn divisor_count(a: &RationalMatrix) -> BigUint {
    let decomposition =
        squarefree_decompose(&char_poly(a)).expect("characteristic polynomial has degree n >= 1");
    let mut total = BigUint::one();
    for f in &decomposition.factors {
        let degree = f.factor.degree().expect("nonzero factor");
        let real_roots = count_real_roots(&f.factor).expect("Yun factors are squarefree");
        let irreducible_real_factors = real_roots + (degree - real_roots) / 2;
        let base = BigUint::from(f.multiplicity + 1);
        total *= base.pow(irreducible_real_factors as u32);
    }
    total
}
