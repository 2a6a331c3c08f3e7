#![allow(dead_code)]

use invsub::analyzer::{jordan_block, real_jordan_block};
use invsub::{BlockConfig, Rational, RationalMatrix, RationalPolynomial};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

pub fn poly(c: &[i64]) -> RationalPolynomial {
    RationalPolynomial::from_i64s(c)
}

pub fn matrix(rows: &[&[i64]]) -> RationalMatrix {
    RationalMatrix::from_i64_rows(rows).unwrap()
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let p = rng.gen_range(-6..=6);
    let q = if rng.gen_bool(0.25) {
        rng.gen_range(1..=4)
    } else {
        1
    };
    frac(p, q)
}

pub fn random_matrix(rng: &mut impl Rng, n: usize) -> RationalMatrix {
    RationalMatrix::from_rows(
        (0..n)
            .map(|_| (0..n).map(|_| random_rational(rng)).collect())
            .collect(),
    )
    .unwrap()
}

pub fn random_invertible(rng: &mut impl Rng, n: usize) -> RationalMatrix {
    loop {
        let p = random_matrix(rng, n);
        if p.inverse().is_some() {
            return p;
        }
    }
}

/// A random operator in real Jordan form with a small eigenvalue pool, so
/// repeated roots (and hence derogatory matrices) come up regularly.
pub fn random_jordan_form(rng: &mut impl Rng, n: usize) -> RationalMatrix {
    let mut blocks = Vec::new();
    let mut remaining = n;
    while remaining > 0 {
        if remaining >= 2 && rng.gen_bool(0.3) {
            let k = rng.gen_range(1..=remaining / 2);
            let a = int(rng.gen_range(0..=1));
            let b = int(1);
            blocks.push(real_jordan_block(&a, &b, k));
            remaining -= 2 * k;
        } else {
            let k = rng.gen_range(1..=remaining);
            blocks.push(jordan_block(&int(rng.gen_range(0..=1)), k));
            remaining -= k;
        }
    }
    blocks.shuffle(rng);
    RationalMatrix::block_diagonal(&blocks).unwrap()
}

/// A mix of dense random matrices, Jordan forms with shared roots, and
/// realized block configurations.
pub fn random_operator(rng: &mut impl Rng, n: usize) -> RationalMatrix {
    match rng.gen_range(0..3) {
        0 => random_matrix(rng, n),
        1 => random_jordan_form(rng, n),
        _ => {
            let configs: Vec<BlockConfig> = invsub::enumerate_configs(n).unwrap().collect();
            invsub::realize_config(configs.choose(rng).unwrap())
        }
    }
}

/// `det(xI − A)` by Laplace expansion along the first row, over polynomial
/// entries.
pub fn cofactor_char_poly(a: &RationalMatrix) -> RationalPolynomial {
    let n = a.dim();
    let entries: Vec<Vec<RationalPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = RationalPolynomial::constant(-a[(i, j)].clone());
                    if i == j {
                        &c + &RationalPolynomial::x()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    laplace(&entries)
}

fn laplace(m: &[Vec<RationalPolynomial>]) -> RationalPolynomial {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = RationalPolynomial::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<RationalPolynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &laplace(&minor);
        total = if j % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}
