//! Dense finite-variable polynomials: the brute-force oracle side of the
//! monomial algebra.
//!
//! Substituting a homogeneous symmetric function into `num_vars >= degree`
//! variables is a faithful image, so two sparse expansions are equal iff
//! their dense images agree. The dense route is kept out of every production
//! path (its term count explodes multinomially) and exists to cross-check
//! [`crate::monomial`].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, MonomialExpansion, Partition, Result};

/// A homogeneous polynomial in a fixed number of variables, keyed by
/// exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePolynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl DensePolynomial {
    pub fn zero(num_vars: usize) -> Self {
        Self {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exponents: Vec<u32>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.num_vars != other.num_vars {
            return Err(Error::TooFewVariables {
                num_vars: self.num_vars.min(other.num_vars),
                degree: 0,
            });
        }
        let mut out = Self::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.num_vars != other.num_vars {
            return Err(Error::TooFewVariables {
                num_vars: self.num_vars.min(other.num_vars),
                degree: 0,
            });
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(self.num_vars);
        }
        Self {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }
}

/// Substitutes the first `num_vars` variables into `f`. Requires
/// `num_vars >= degree(f)` so the image is faithful.
pub fn to_dense(f: &MonomialExpansion, num_vars: usize) -> Result<DensePolynomial> {
    if num_vars < f.degree() as usize {
        return Err(Error::TooFewVariables {
            num_vars,
            degree: f.degree(),
        });
    }
    let mut out = DensePolynomial::zero(num_vars);
    for (lam, coeff) in f.terms() {
        for exps in distinct_arrangements(lam, num_vars) {
            out.add_term(exps, coeff.clone());
        }
    }
    Ok(out)
}

/// The dense image of a single `m_lambda`: one term per distinct arrangement
/// of the parts (padded with zeros) over the variables.
fn distinct_arrangements(lambda: &Partition, num_vars: usize) -> Vec<Vec<u32>> {
    let mut pool: Vec<(u32, u32)> = lambda.multiplicities();
    let zeros = num_vars - lambda.len();
    if zeros > 0 {
        pool.push((0, zeros as u32));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(num_vars);
    fn rec(
        pool: &mut Vec<(u32, u32)>,
        current: &mut Vec<u32>,
        num_vars: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if current.len() == num_vars {
            out.push(current.clone());
            return;
        }
        for idx in 0..pool.len() {
            if pool[idx].1 == 0 {
                continue;
            }
            pool[idx].1 -= 1;
            current.push(pool[idx].0);
            rec(pool, current, num_vars, out);
            current.pop();
            pool[idx].1 += 1;
        }
    }
    rec(&mut pool, &mut current, num_vars, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn m11_in_three_variables() {
        // x1 x2 + x1 x3 + x2 x3
        let d = to_dense(&MonomialExpansion::monomial(p(&[1, 1])), 3).unwrap();
        assert_eq!(d.num_terms(), 3);
        assert_eq!(d.coefficient(&[1, 1, 0]), BigInt::one());
        assert_eq!(d.coefficient(&[1, 0, 1]), BigInt::one());
        assert_eq!(d.coefficient(&[0, 1, 1]), BigInt::one());
    }

    #[test]
    fn m2_in_two_variables() {
        let d = to_dense(&MonomialExpansion::monomial(p(&[2])), 2).unwrap();
        assert_eq!(d.num_terms(), 2);
        assert_eq!(d.coefficient(&[2, 0]), BigInt::one());
        assert_eq!(d.coefficient(&[0, 2]), BigInt::one());
    }

    #[test]
    fn p1_squared_is_m2_plus_2m11() {
        // (x1+x2)^2 expands to the dense image of m2 + 2*m11.
        let m1 = to_dense(&MonomialExpansion::monomial(p(&[1])), 2).unwrap();
        let square = m1.mul(&m1).unwrap();
        let combo = MonomialExpansion::from_terms(
            2,
            vec![(p(&[2]), 1.into()), (p(&[1, 1]), 2.into())],
        )
        .unwrap();
        assert_eq!(square, to_dense(&combo, 2).unwrap());
    }

    #[test]
    fn unfaithful_image_is_rejected() {
        let f = MonomialExpansion::monomial(p(&[2, 1]));
        assert!(matches!(
            to_dense(&f, 2),
            Err(Error::TooFewVariables {
                num_vars: 2,
                degree: 3
            })
        ));
        assert!(to_dense(&f, 3).is_ok());
    }

    #[test]
    fn faithful_images_separate_expansions() {
        let f = MonomialExpansion::monomial(p(&[2, 1]));
        let g = MonomialExpansion::monomial(p(&[1, 1, 1]));
        assert_ne!(to_dense(&f, 3).unwrap(), to_dense(&g, 3).unwrap());
    }
}
