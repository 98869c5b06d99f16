//! Exact sparse arithmetic for homogeneous symmetric functions in the
//! monomial basis, and the two sides of the alternating power-sum identity.
//!
//! The product `m_mu * m_nu` is computed combinatorially: the coefficient of
//! `m_lambda` is the number of pairs of vectors `(alpha, beta)` of length
//! `len(lambda)`, where `alpha` is a distinct rearrangement of `mu` padded
//! with zeros, `beta` one of `nu` padded with zeros, and
//! `alpha_i + beta_i = lambda_i` for all `i`. Since `alpha` is determined by
//! `beta`, only the `beta` side is enumerated, and positions of `lambda` with
//! equal value are grouped so that the enumeration walks assignment matrices
//! weighted by multinomials rather than individual rearrangements. Repeated
//! parts are therefore never overcounted and no factorial-sized orbit is ever
//! materialized.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::ev::ev_multiset;
use crate::{DegreeGuard, Error, Partition, Result};

/// A homogeneous symmetric function expressed over monomial symmetric
/// functions `m_lambda` with exact integer coefficients.
///
/// Invariants: every key has degree equal to the expansion's degree, and no
/// zero coefficient is stored. Terms iterate in canonical order (the order
/// the serialized forms use).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialExpansion {
    degree: u32,
    terms: BTreeMap<Partition, BigInt>,
}

impl MonomialExpansion {
    pub fn zero(degree: u32) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `m_lambda` itself.
    pub fn monomial(lambda: Partition) -> Self {
        let degree = lambda.degree();
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigInt::one());
        Self { degree, terms }
    }

    pub fn from_terms(
        degree: u32,
        terms: impl IntoIterator<Item = (Partition, BigInt)>,
    ) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (lam, c) in terms {
            if lam.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: lam.degree(),
                });
            }
            out.add_term(lam, c);
        }
        Ok(out)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Largest part occurring anywhere in the support (0 if zero).
    pub fn max_part(&self) -> u32 {
        self.terms.keys().map(|p| p.first()).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(lambda.degree(), self.degree);
        match self.terms.entry(lambda) {
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

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut out = self.clone();
        for (lam, c) in other.terms() {
            out.add_term(lam.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c * factor))
                .collect(),
        }
    }
}

impl fmt::Display for MonomialExpansion {
    /// Stable text form, e.g. `4*m[2,2,1,1] + 4*m[3,2,1] + 4*m[3,3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (lam, c)) in self.terms.iter().enumerate() {
            let body = if lam.is_empty() {
                "m[]".to_string()
            } else {
                format!("m[{lam}]")
            };
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-{}*{}", c.magnitude(), body)?;
                } else {
                    write!(f, "{c}*{body}")?;
                }
            } else if c.is_negative() {
                write!(f, " - {}*{}", c.magnitude(), body)?;
            } else {
                write!(f, " + {c}*{body}")?;
            }
        }
        Ok(())
    }
}

/// Exact product in the ring of symmetric functions; degrees add.
pub fn monomial_product(f: &MonomialExpansion, g: &MonomialExpansion) -> MonomialExpansion {
    let mut out = MonomialExpansion::zero(f.degree() + g.degree());
    for (tau, a) in f.terms() {
        for (sigma, b) in g.terms() {
            let ab = a * b;
            for (lam, count) in term_product(tau, sigma) {
                out.add_term(lam, &ab * count);
            }
        }
    }
    out
}

/// Expansion of the single product `m_mu * m_nu`.
fn term_product(mu: &Partition, nu: &Partition) -> Vec<(Partition, BigInt)> {
    // Enumerate placements from the shorter factor.
    let (big, small) = if mu.len() >= nu.len() {
        (mu, nu)
    } else {
        (nu, mu)
    };
    let small_vals = small.multiplicities();
    let small_counts: Vec<u32> = small_vals.iter().map(|&(_, c)| c).collect();

    // Candidate targets: bump value groups of `big` (plus a zero group wide
    // enough for all of `small`) by parts of `small` in every distinct way.
    let mut groups = big.multiplicities();
    groups.push((0, small.len() as u32));
    let caps: Vec<u32> = groups.iter().map(|&(_, c)| c).collect();
    let mut candidates = std::collections::BTreeSet::new();
    distribute(&small_counts, &caps, |_, _| true, &mut |matrix, used| {
        let mut parts = Vec::with_capacity(big.len() + small.len());
        for (i, &(v, cap)) in groups.iter().enumerate() {
            if v > 0 {
                for _ in 0..(cap - used[i]) {
                    parts.push(v);
                }
            }
            for (j, &(w, _)) in small_vals.iter().enumerate() {
                for _ in 0..matrix[j][i] {
                    parts.push(v + w);
                }
            }
        }
        candidates.insert(Partition::from_unsorted(parts));
    });

    candidates
        .into_iter()
        .rev()
        .filter_map(|lam| {
            let count = overlay_count(&lam, big, &small_vals);
            if count.is_zero() {
                None
            } else {
                Some((lam, count))
            }
        })
        .collect()
}

/// Number of vectors `beta` (distinct rearrangements of `small` padded with
/// zeros to `len(lambda)`) such that `lambda - beta` is componentwise
/// nonnegative and is a rearrangement of `big` padded with zeros.
fn overlay_count(lambda: &Partition, big: &Partition, small_vals: &[(u32, u32)]) -> BigInt {
    let groups = lambda.multiplicities();
    let caps: Vec<u32> = groups.iter().map(|&(_, c)| c).collect();
    let small_counts: Vec<u32> = small_vals.iter().map(|&(_, c)| c).collect();
    let mut total = BigInt::zero();
    let mut diff: Vec<u32> = Vec::with_capacity(lambda.len());
    distribute(
        &small_counts,
        &caps,
        |i, j| groups[i].0 >= small_vals[j].0,
        &mut |matrix, used| {
            diff.clear();
            for (i, &(v, cap)) in groups.iter().enumerate() {
                for _ in 0..(cap - used[i]) {
                    diff.push(v);
                }
                for (j, &(w, _)) in small_vals.iter().enumerate() {
                    if matrix[j][i] > 0 {
                        let d = v - w;
                        if d > 0 {
                            for _ in 0..matrix[j][i] {
                                diff.push(d);
                            }
                        }
                    }
                }
            }
            diff.sort_unstable_by(|a, b| b.cmp(a));
            if diff == big.parts() {
                // Positions within a value group are interchangeable, so one
                // assignment matrix stands for a multinomial's worth of betas.
                let mut weight = BigInt::one();
                for (i, &(_, g)) in groups.iter().enumerate() {
                    let mut left = u64::from(g);
                    for row in matrix {
                        weight *= binomial(BigInt::from(left), BigInt::from(row[i]));
                        left -= u64::from(row[i]);
                    }
                }
                total += weight;
            }
        },
    );
    total
}

/// Walks every assignment matrix `matrix[j][i]` placing `small_counts[j]`
/// items of kind `j` into slots `i` with capacities `caps[i]`, restricted to
/// pairs where `allowed(i, j)` holds.
fn distribute<F, A>(small_counts: &[u32], caps: &[u32], allowed: A, leaf: &mut F)
where
    F: FnMut(&[Vec<u32>], &[u32]),
    A: Fn(usize, usize) -> bool + Copy,
{
    let mut matrix = vec![vec![0u32; caps.len()]; small_counts.len()];
    let mut used = vec![0u32; caps.len()];
    fn by_value<F, A>(
        j: usize,
        small_counts: &[u32],
        caps: &[u32],
        allowed: A,
        matrix: &mut Vec<Vec<u32>>,
        used: &mut Vec<u32>,
        leaf: &mut F,
    ) where
        F: FnMut(&[Vec<u32>], &[u32]),
        A: Fn(usize, usize) -> bool + Copy,
    {
        if j == small_counts.len() {
            leaf(matrix, used);
            return;
        }
        by_slot(j, 0, small_counts[j], small_counts, caps, allowed, matrix, used, leaf);
    }
    #[allow(clippy::too_many_arguments)]
    fn by_slot<F, A>(
        j: usize,
        i: usize,
        remaining: u32,
        small_counts: &[u32],
        caps: &[u32],
        allowed: A,
        matrix: &mut Vec<Vec<u32>>,
        used: &mut Vec<u32>,
        leaf: &mut F,
    ) where
        F: FnMut(&[Vec<u32>], &[u32]),
        A: Fn(usize, usize) -> bool + Copy,
    {
        if i == caps.len() {
            if remaining == 0 {
                by_value(j + 1, small_counts, caps, allowed, matrix, used, leaf);
            }
            return;
        }
        let free = caps[i] - used[i];
        let max_take = if allowed(i, j) {
            remaining.min(free)
        } else {
            0
        };
        for take in 0..=max_take {
            matrix[j][i] = take;
            used[i] += take;
            by_slot(j, i + 1, remaining - take, small_counts, caps, allowed, matrix, used, leaf);
            used[i] -= take;
            matrix[j][i] = 0;
        }
    }
    by_value(0, small_counts, caps, allowed, &mut matrix, &mut used, leaf);
}

/// Expands the power sum `p_lambda` in the monomial basis by folding the
/// single-row expansions `p_k = m_(k)`. All coefficients are positive.
pub fn power_to_monomial(lambda: &Partition, guard: DegreeGuard) -> Result<MonomialExpansion> {
    guard.check(lambda.degree())?;
    let mut acc = MonomialExpansion::monomial(Partition::empty());
    for &k in lambda.parts() {
        let pk = MonomialExpansion::monomial(Partition::new(vec![k]).expect("positive part"));
        acc = monomial_product(&acc, &pk);
    }
    Ok(acc)
}

/// The alternating sum `sum over Ev(lambda), with multiplicity, of
/// (-1)^len * p` in the monomial basis.
pub fn alternating_ev_sum(lambda: &Partition, guard: DegreeGuard) -> Result<MonomialExpansion> {
    guard.check(2 * lambda.degree())?;
    let mut acc = MonomialExpansion::zero(2 * lambda.degree());
    for entry in ev_multiset(lambda).entries() {
        let expansion = power_to_monomial(&entry.partition, guard)?;
        let weight = BigInt::from(entry.sign()) * BigInt::from(entry.multiplicity);
        acc = acc.checked_add(&expansion.scale(&weight))?;
    }
    Ok(acc)
}

/// The closed form `2^r * prod over parts k of m_(k,k)`.
pub fn theorem_rhs(lambda: &Partition, guard: DegreeGuard) -> Result<MonomialExpansion> {
    guard.check(2 * lambda.degree())?;
    let mut acc = MonomialExpansion::monomial(Partition::empty());
    for &k in lambda.parts() {
        let two_row = MonomialExpansion::monomial(Partition::new(vec![k, k]).expect("valid"));
        acc = monomial_product(&acc, &two_row);
    }
    Ok(acc.scale(&(BigInt::one() << lambda.len())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::to_dense;
    use crate::partitions_of;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn m(parts: &[u32]) -> MonomialExpansion {
        MonomialExpansion::monomial(p(parts))
    }

    fn guard() -> DegreeGuard {
        DegreeGuard::default()
    }

    #[test]
    fn square_of_m1() {
        // (sum x_i)^2 = sum x_i^2 + 2 sum_{i<j} x_i x_j.
        let got = monomial_product(&m(&[1]), &m(&[1]));
        let want = MonomialExpansion::from_terms(
            2,
            vec![(p(&[2]), 1.into()), (p(&[1, 1]), 2.into())],
        )
        .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn product_m22_by_m11() {
        let got = monomial_product(&m(&[2, 2]), &m(&[1, 1]));
        let want = MonomialExpansion::from_terms(
            6,
            vec![
                (p(&[2, 2, 1, 1]), 1.into()),
                (p(&[3, 2, 1]), 1.into()),
                (p(&[3, 3]), 1.into()),
            ],
        )
        .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn product_m2_by_m1() {
        let got = monomial_product(&m(&[2]), &m(&[1]));
        let want = MonomialExpansion::from_terms(
            3,
            vec![(p(&[3]), 1.into()), (p(&[2, 1]), 1.into())],
        )
        .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn power_expansion_examples() {
        let g = guard();
        // p_n = m_n.
        for n in 1..=8 {
            let pn = power_to_monomial(&p(&[n]), g).unwrap();
            assert_eq!(pn, m(&[n]));
        }
        let p21 = power_to_monomial(&p(&[2, 1]), g).unwrap();
        assert_eq!(
            p21,
            MonomialExpansion::from_terms(3, vec![(p(&[3]), 1.into()), (p(&[2, 1]), 1.into())])
                .unwrap()
        );
        let p11 = power_to_monomial(&p(&[1, 1]), g).unwrap();
        assert_eq!(
            p11,
            MonomialExpansion::from_terms(2, vec![(p(&[2]), 1.into()), (p(&[1, 1]), 2.into())])
                .unwrap()
        );
    }

    #[test]
    fn power_coefficients_are_positive() {
        let g = guard();
        for lam in partitions_of(7, g).unwrap() {
            let f = power_to_monomial(&lam, g).unwrap();
            for (_, c) in f.terms() {
                assert!(c > &BigInt::zero());
            }
        }
    }

    #[test]
    fn alternating_sum_for_single_box() {
        // -p_2 + p_11 = 2*m_11.
        let got = alternating_ev_sum(&p(&[1]), guard()).unwrap();
        let want =
            MonomialExpansion::from_terms(2, vec![(p(&[1, 1]), 2.into())]).unwrap();
        assert_eq!(got, want);
        assert_eq!(got, theorem_rhs(&p(&[1]), guard()).unwrap());
    }

    #[test]
    fn worked_example_21() {
        let lhs = alternating_ev_sum(&p(&[2, 1]), guard()).unwrap();
        let rhs = theorem_rhs(&p(&[2, 1]), guard()).unwrap();
        let want = MonomialExpansion::from_terms(
            6,
            vec![
                (p(&[2, 2, 1, 1]), 4.into()),
                (p(&[3, 2, 1]), 4.into()),
                (p(&[3, 3]), 4.into()),
            ],
        )
        .unwrap();
        assert_eq!(lhs, want);
        assert_eq!(rhs, want);
        assert_eq!(lhs.to_string(), "4*m[2,2,1,1] + 4*m[3,2,1] + 4*m[3,3]");
    }

    #[test]
    fn rhs_trivial_cases() {
        assert_eq!(
            theorem_rhs(&p(&[3]), guard()).unwrap().to_string(),
            "2*m[3,3]"
        );
        assert_eq!(
            theorem_rhs(&p(&[1]), guard()).unwrap().to_string(),
            "2*m[1,1]"
        );
    }

    #[test]
    fn identity_for_22_via_dense_oracle() {
        // Brute-force both sides in 8 variables.
        let g = guard();
        let lhs = alternating_ev_sum(&p(&[2, 2]), g).unwrap();
        let rhs = theorem_rhs(&p(&[2, 2]), g).unwrap();
        assert_eq!(lhs, rhs);
        let d_lhs = to_dense(&lhs, 8).unwrap();
        let m22 = to_dense(&m(&[2, 2]), 8).unwrap();
        let d_prod = m22.mul(&m22).unwrap().scale(&4.into());
        assert_eq!(d_lhs, d_prod);
    }

    #[test]
    fn guard_applies_to_double_degree()
    {
        let lam = p(&[13]);
        assert!(matches!(
            theorem_rhs(&lam, guard()),
            Err(Error::DegreeGuardExceeded { degree: 26, .. })
        ));
        assert!(matches!(
            alternating_ev_sum(&lam, guard()),
            Err(Error::DegreeGuardExceeded { degree: 26, .. })
        ));
        assert!(theorem_rhs(&lam, DegreeGuard::new(26)).is_ok());
    }

    #[test]
    fn display_of_zero_and_signs() {
        assert_eq!(MonomialExpansion::zero(4).to_string(), "0");
        let f = MonomialExpansion::from_terms(
            2,
            vec![(p(&[2]), BigInt::from(-1)), (p(&[1, 1]), 2.into())],
        )
        .unwrap();
        assert_eq!(f.to_string(), "2*m[1,1] - 1*m[2]");
    }

    #[test]
    fn oracle_soundness_small_degrees() {
        // to_dense(product) == dense product of to_dense images, for every
        // pair of monomial basis elements with total degree <= 6.
        let g = guard();
        for d1 in 1..=5u32 {
            for d2 in 1..=(6 - d1).min(d1) {
                let nv = (d1 + d2) as usize;
                for mu in partitions_of(d1, g).unwrap() {
                    for nu in partitions_of(d2, g).unwrap() {
                        let fm = MonomialExpansion::monomial(mu.clone());
                        let gm = MonomialExpansion::monomial(nu.clone());
                        let lhs = to_dense(&monomial_product(&fm, &gm), nv).unwrap();
                        let rhs = to_dense(&fm, nv)
                            .unwrap()
                            .mul(&to_dense(&gm, nv).unwrap())
                            .unwrap();
                        assert_eq!(lhs, rhs, "m[{mu}] * m[{nu}]");
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_soundness_equal_degree_pairs() {
        // Same check on every pair of partitions of one degree m <= 5,
        // substituted into 2m variables.
        let g = guard();
        for m in 1..=5u32 {
            let nv = (2 * m) as usize;
            for mu in partitions_of(m, g).unwrap() {
                for nu in partitions_of(m, g).unwrap() {
                    let fm = MonomialExpansion::monomial(mu.clone());
                    let gm = MonomialExpansion::monomial(nu.clone());
                    let lhs = to_dense(&monomial_product(&fm, &gm), nv).unwrap();
                    let rhs = to_dense(&fm, nv)
                        .unwrap()
                        .mul(&to_dense(&gm, nv).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs, "m[{mu}] * m[{nu}]");
                }
            }
        }
    }

    fn arb_expansion(degree: u32) -> impl Strategy<Value = MonomialExpansion> {
        let parts = partitions_of(degree, DegreeGuard::default()).unwrap();
        let n = parts.len();
        proptest::collection::vec(-4i64..=4, n).prop_map(move |coeffs| {
            MonomialExpansion::from_terms(
                degree,
                parts
                    .iter()
                    .cloned()
                    .zip(coeffs.into_iter().map(BigInt::from)),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn product_commutes(f in arb_expansion(3), g in arb_expansion(3)) {
            prop_assert_eq!(monomial_product(&f, &g), monomial_product(&g, &f));
        }

        #[test]
        fn product_associates(
            f in arb_expansion(2),
            g in arb_expansion(2),
            h in arb_expansion(2),
        ) {
            let left = monomial_product(&monomial_product(&f, &g), &h);
            let right = monomial_product(&f, &monomial_product(&g, &h));
            prop_assert_eq!(left, right);
        }
    }
}
