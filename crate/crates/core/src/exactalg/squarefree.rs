use crate::error::{Error, Result};
use crate::exactalg::{Rational, RationalPolynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeFactor {
    /// Monic, squarefree, nonconstant.
    pub factor: RationalPolynomial,
    pub multiplicity: u32,
}

/// `p = unit · ∏ factorᵢ^{multiplicityᵢ}` with the factors pairwise coprime.
/// Factors come out in strictly increasing multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Rational,
    pub factors: Vec<SquarefreeFactor>,
}

impl SquarefreeDecomposition {
    pub fn reconstruct(&self) -> RationalPolynomial {
        self.factors
            .iter()
            .fold(RationalPolynomial::constant(self.unit.clone()), |acc, f| {
                &acc * &f.factor.pow(f.multiplicity)
            })
    }
}

/// Yun's algorithm over ℚ.
///
/// ```text
/// g = gcd(p, p'),  a = p / g,  b = p' / g
/// loop:  c = b − a';  d = gcd(a, c);  emit (d, i);  a = a / d;  b = c / d
/// ```
/// stopping once `a` is constant. Trivial `d` (multiplicities with no factor)
/// are skipped.
pub fn squarefree_decompose(p: &RationalPolynomial) -> Result<SquarefreeDecomposition> {
    let unit = match p.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(_) => p.leading_coeff().expect("nonzero").clone(),
    };
    let p = p.monic();
    let dp = p.derivative();
    let g = p.gcd(&dp);
    let mut a = p.div_rem(&g)?.0;
    let mut b = dp.div_rem(&g)?.0;
    let mut factors = Vec::new();
    let mut multiplicity = 1;
    while !a.is_constant() {
        let c = &b - &a.derivative();
        let d = a.gcd(&c);
        if !d.is_constant() {
            factors.push(SquarefreeFactor {
                factor: d.clone(),
                multiplicity,
            });
        }
        a = a.div_rem(&d)?.0;
        b = c.div_rem(&d)?.0;
        multiplicity += 1;
    }
    Ok(SquarefreeDecomposition { unit, factors })
}
