//! Exit criteria. Each check prints one PASS/FAIL line; the process fails if
//! any check fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use invsub::analyzer::jordan_block;
use invsub::cli::{table_report, Payload};
use invsub::{
    char_poly, count_for_config, count_invariant_subspaces, count_real_roots, derived_composition,
    enumerate_configs, enumerate_mn, min_poly, oracle_mn, partition_count, partitions_of,
    realize_config, Composition, Multipartition, Partition, RationalMatrix, SubspaceCount,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type TableGolden = (usize, &'static [(&'static [usize], u64)]);
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(
        elapsed < limit,
        format!("took {elapsed:?}, limit {limit:?}"),
    )
}

fn big(values: &[u64]) -> Vec<BigUint> {
    values.iter().map(|&v| BigUint::from(v)).collect()
}

fn m4_exact() -> Check {
    // warm up allocator and code paths before timing
    enumerate_mn(4).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let m = enumerate_mn(4).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(
        m.values == big(&[3, 4, 5, 6, 8, 9, 12, 16]),
        format!("got {m}"),
    )?;
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("{m} in {elapsed:?}"))
}

fn tables_for_four() -> Check {
    let expected: [TableGolden; 3] = [
        (
            0,
            &[
                (&[0, 4], 5),
                (&[0, 3, 1], 8),
                (&[0, 2, 2], 9),
                (&[0, 2, 1, 1], 12),
                (&[0, 1, 1, 1, 1], 16),
            ],
        ),
        (1, &[(&[1, 2], 6), (&[1, 1, 1], 8)]),
        (2, &[(&[2, 0], 3), (&[1, 1, 0], 4)]),
    ];
    let report = table_report(4).map_err(|e| e.to_string())?;
    let Payload::Table { groups, .. } = report.result else {
        return Err("wrong payload".into());
    };
    ensure(groups.len() == 3, format!("{} groups", groups.len()))?;
    let mut rows = 0;
    for (group, (r, want)) in groups.iter().zip(expected) {
        ensure(group.r == r, format!("group r = {}", group.r))?;
        let got: Vec<(Vec<usize>, String)> = group
            .rows
            .iter()
            .map(|row| (row.composition.clone(), row.product.clone()))
            .collect();
        let want: Vec<(Vec<usize>, String)> = want
            .iter()
            .map(|(c, p)| (c.to_vec(), p.to_string()))
            .collect();
        ensure(got == want, format!("r = {r}: got {got:?}"))?;
        rows += got.len();
    }
    ensure(rows == 9, format!("{rows} rows"))?;
    Ok("9 rows, products 5,8,9,12,16 | 6,8 | 3,4".into())
}

fn derived_golden() -> Check {
    let part = |p: &[usize]| Partition::new(p.to_vec()).unwrap();
    let m = Multipartition::new(
        Composition::new(vec![5, 6, 3]).unwrap(),
        vec![part(&[4, 1]), part(&[3, 2, 1]), part(&[2, 1])],
    )
    .map_err(|e| e.to_string())?;
    let d = derived_composition(&m).map_err(|e| e.to_string())?;
    ensure(d.parts() == [4, 1, 3, 2, 1, 2, 1], format!("got {d}"))?;
    Ok(d.to_string())
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    for n in 1..=12 {
        let a = enumerate_mn(n).map_err(|e| e.to_string())?;
        let b = oracle_mn(n).map_err(|e| e.to_string())?;
        ensure(a == b, format!("n = {n}: {a} vs {b}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("n = 1..12 in {elapsed:?}"))
}

fn structural() -> Check {
    for n in 1..=20usize {
        let m = enumerate_mn(n).map_err(|e| e.to_string())?;
        let top = BigUint::from(2u32).pow(n as u32);
        ensure(m.max() == Some(&top), format!("n = {n}: max {:?}", m.max()))?;
        ensure(
            m.contains(&BigUint::from(n + 1)),
            format!("n = {n}: n+1 missing"),
        )?;
    }
    Ok("max = 2^n and n+1 present for n = 1..20".into())
}

fn partition_oracle() -> Check {
    ensure(partition_count(10) == BigUint::from(42u32), "p(10) != 42")?;
    ensure(partition_count(20) == BigUint::from(627u32), "p(20) != 627")?;
    for n in 0..=40 {
        let listed = partitions_of(n).count();
        ensure(
            BigUint::from(listed) == partition_count(n),
            format!("n = {n}: listed {listed}, p = {}", partition_count(n)),
        )?;
    }
    Ok(format!("n = 0..40, p(40) = {}", partition_count(40)))
}

fn analyzer_goldens() -> Check {
    let finite = |a: &RationalMatrix| count_invariant_subspaces(a).count().cloned();
    ensure(
        count_invariant_subspaces(&RationalMatrix::identity(2)) == SubspaceCount::Infinite,
        "identity not infinite",
    )?;
    for k in 1..=5 {
        let j = jordan_block(&int(5), k);
        ensure(
            finite(&j) == Some(BigUint::from(k + 1)),
            format!("J(5,{k}) gave {:?}", finite(&j)),
        )?;
    }
    ensure(
        finite(&matrix(&[&[0, -1], &[1, 0]])) == Some(BigUint::from(2u32)),
        "rotation",
    )?;
    ensure(
        finite(&matrix(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]])) == Some(BigUint::from(8u32)),
        "diag(1,2,3)",
    )?;
    Ok("identity infinite, J(k) -> k+1, rotation 2, diag(1,2,3) 8".into())
}

fn similarity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x51_3111);
    let start = Instant::now();
    let pairs = 120;
    let mut finite = 0;
    for i in 0..pairs {
        let n = rng.gen_range(1..=4);
        let a = random_operator(&mut rng, n);
        let p = random_invertible(&mut rng, n);
        let b = a
            .conjugate_by(&p)
            .map_err(|e| e.to_string())?
            .ok_or("P not invertible")?;
        let (ca, cb) = (count_invariant_subspaces(&a), count_invariant_subspaces(&b));
        ensure(ca == cb, format!("pair {i}: {ca:?} vs {cb:?}"))?;
        finite += usize::from(ca.is_finite());
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!(
        "{pairs} pairs ({finite} finite, {} infinite) in {elapsed:?}",
        pairs - finite
    ))
}

fn round_trip() -> Check {
    let start = Instant::now();
    let mut configs = 0;
    for n in 1..=8 {
        for c in enumerate_configs(n).map_err(|e| e.to_string())? {
            let got = count_invariant_subspaces(&realize_config(&c));
            ensure(
                got.count() == Some(&count_for_config(&c)),
                format!("{c}: {got:?}"),
            )?;
            configs += 1;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("{configs} configs in {elapsed:?}"))
}

fn exact_algebra() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xe8ac7);
    let count = 120;
    for i in 0..count {
        let n = rng.gen_range(1..=5);
        let a = if i % 2 == 0 {
            random_matrix(&mut rng, n)
        } else {
            random_operator(&mut rng, n)
        };
        let c = char_poly(&a);
        let m = min_poly(&a);
        ensure(
            c == cofactor_char_poly(&a),
            format!("matrix {i}: char_poly vs cofactor"),
        )?;
        ensure(
            c.rem(&m).map_err(|e| e.to_string())?.is_zero(),
            format!("matrix {i}: min_poly does not divide char_poly"),
        )?;
        ensure(
            a.eval_poly(&m).is_zero(),
            format!("matrix {i}: min_poly does not annihilate"),
        )?;
    }
    for (p, want) in [
        (poly(&[1, 0, 1]), 0),
        (poly(&[-2, 0, 1]), 2),
        (poly(&[0, -1, 0, 1]), 3),
    ] {
        let got = count_real_roots(&p).map_err(|e| e.to_string())?;
        ensure(
            got == want,
            format!("{p}: {got} real roots, expected {want}"),
        )?;
    }
    Ok(format!(
        "{count} matrices, Sturm goldens x^2+1, x^2-2, x^3-x"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("M_4 exact match", m4_exact),
        ("Tables 1-3 reproduction", tables_for_four),
        ("derived-composition golden", derived_golden),
        ("oracle equivalence n <= 12", oracle_equivalence),
        ("structural properties n <= 20", structural),
        ("partition oracle n <= 40", partition_oracle),
        ("analyzer goldens", analyzer_goldens),
        ("similarity invariance", similarity),
        ("realize round-trip n <= 8", round_trip),
        ("exact-algebra suite", exact_algebra),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
