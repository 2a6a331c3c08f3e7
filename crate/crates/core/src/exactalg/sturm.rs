use crate::error::{Error, Result};
use crate::exactalg::RationalPolynomial;

/// `p₀ = p, p₁ = p', p_{i+1} = −(p_{i−1} mod p_i)`, ending at the last
/// nonzero remainder.
pub fn sturm_sequence(p: &RationalPolynomial) -> Vec<RationalPolynomial> {
    let mut chain = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let prev = chain.last().expect("nonempty");
        let rem = prev.rem(&next).expect("next is nonzero");
        chain.push(next);
        next = -&rem;
    }
    chain
}

/// Distinct real roots of a squarefree polynomial: the sign-variation drop of
/// its Sturm sequence from −∞ to +∞.
pub fn count_real_roots(p: &RationalPolynomial) -> Result<usize> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let chain = sturm_sequence(p);
    if !chain.last().expect("nonempty").is_constant() {
        return Err(Error::NotSquarefree);
    }
    let (at_pos, at_neg): (Vec<i8>, Vec<i8>) = chain
        .iter()
        .map(RationalPolynomial::signs_at_infinity)
        .unzip();
    Ok(sign_variations(&at_neg) - sign_variations(&at_pos))
}

fn sign_variations(signs: &[i8]) -> usize {
    let nonzero: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}
