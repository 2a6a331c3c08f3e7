mod common;

use common::*;
use invsub::analyzer::{divisor_count, jordan_block, real_jordan_block};
use invsub::{
    count_for_config, count_invariant_subspaces, enumerate_configs, enumerate_mn, is_count_finite,
    jordan_signature, min_poly, realize_config, JordanSignature, RationalMatrix, SubspaceCount,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn signature_for_mixed_factorization() {
    // characteristic polynomial (x^2 + 1)^2 (x - 3), conjugated to hide the form
    let a = RationalMatrix::block_diagonal(&[
        real_jordan_block(&int(0), &int(1), 2),
        jordan_block(&int(3), 1),
    ])
    .unwrap();
    let p = matrix(&[
        &[1, 2, 0, 0, 1],
        &[0, 1, 1, 0, 0],
        &[1, 0, 1, 1, 0],
        &[0, 0, 0, 1, 3],
        &[2, 0, 0, 0, 1],
    ]);
    let b = a.conjugate_by(&p).unwrap().expect("invertible");
    assert_eq!(jordan_signature(&b), JordanSignature::new(vec![1], vec![2]));
    assert_eq!(
        count_invariant_subspaces(&b).count(),
        Some(&BigUint::from(6u32))
    );
}

#[test]
fn jordan_blocks_count_k_plus_one() {
    for k in 1..=6 {
        let j = jordan_block(&frac(-7, 3), k);
        match count_invariant_subspaces(&j) {
            SubspaceCount::Finite {
                count,
                profile,
                signature,
            } => {
                assert_eq!(count, BigUint::from(k + 1));
                assert!(profile
                    .coefficients
                    .iter()
                    .all(|c| c == &BigUint::from(1u32)));
                assert_eq!(signature, JordanSignature::new(vec![k], vec![]));
            }
            SubspaceCount::Infinite => panic!("single block must be finite"),
        }
    }
}

#[test]
fn realize_round_trip_through_n_8() {
    for n in 1..=8 {
        for c in enumerate_configs(n).unwrap() {
            let a = realize_config(&c);
            assert_eq!(a.dim(), n);
            match count_invariant_subspaces(&a) {
                SubspaceCount::Finite {
                    count, signature, ..
                } => {
                    assert_eq!(count, count_for_config(&c), "{c}");
                    assert_eq!(signature, JordanSignature::from(&c));
                }
                SubspaceCount::Infinite => panic!("{c} realized as derogatory"),
            }
        }
    }
}

#[test]
fn random_operators_obey_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0a11_7e57);
    let spectra: Vec<_> = (1..=5).map(|n| enumerate_mn(n).unwrap()).collect();
    let mut finite = 0;
    let mut infinite = 0;
    for _ in 0..150 {
        let n = rng.gen_range(1..=5);
        let a = random_operator(&mut rng, n);
        let full_degree = min_poly(&a).degree() == Some(n);
        assert_eq!(is_count_finite(&a), full_degree);
        match count_invariant_subspaces(&a) {
            SubspaceCount::Finite {
                count,
                signature,
                profile,
            } => {
                finite += 1;
                assert!(spectra[n - 1].contains(&count));
                assert_eq!(count, divisor_count(&a));
                assert_eq!(signature.dimension(), n);
                assert_eq!(profile.total(), count);
            }
            SubspaceCount::Infinite => infinite += 1,
        }
    }
    assert!(
        finite > 20 && infinite > 10,
        "finite {finite}, infinite {infinite}"
    );
}

#[test]
fn derogatory_examples() {
    // J_{1,2} ⊕ J_{1,1}: two blocks for root 1
    let a = RationalMatrix::block_diagonal(&[jordan_block(&int(1), 2), jordan_block(&int(1), 1)])
        .unwrap();
    assert!(!is_count_finite(&a));
    assert_eq!(count_invariant_subspaces(&a), SubspaceCount::Infinite);
    assert_eq!(
        count_invariant_subspaces(&RationalMatrix::zeros(3)),
        SubspaceCount::Infinite
    );
    // signature is still defined for derogatory input
    assert_eq!(jordan_signature(&a), JordanSignature::new(vec![3], vec![]));
}
