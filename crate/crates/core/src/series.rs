//! Exact Poincaré series of free graded-commutative algebras.
//!
//! A free algebra on odd generators of degrees `d_i` and even generators of
//! degrees `e_j` has Poincaré series `Π(1 + t^{d_i}) / Π(1 - t^{e_j})`. The
//! series is kept in this factored form; expansion multiplies factor by
//! factor with truncation, in exact big-integer arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::cohomology::FreeGradedAlgebra;

/// `numerator / denominator` with `numerator = Π(1 + t^d)` and
/// `denominator = Π(1 - t^e)`; the denominator has constant term 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    /// Degrees `d` of the numerator factors `1 + t^d`, sorted.
    numerator_factors: Vec<u32>,
    /// Degrees `e` of the denominator factors `1 - t^e`, sorted.
    denominator_factors: Vec<u32>,
}

impl RationalSeries {
    /// Factor degrees must be positive.
    pub fn from_factors(
        mut numerator_factors: Vec<u32>,
        mut denominator_factors: Vec<u32>,
    ) -> Self {
        assert!(
            numerator_factors
                .iter()
                .chain(&denominator_factors)
                .all(|&d| d > 0),
            "factor degrees must be positive"
        );
        numerator_factors.sort_unstable();
        denominator_factors.sort_unstable();
        RationalSeries {
            numerator_factors,
            denominator_factors,
        }
    }

    pub fn one() -> Self {
        RationalSeries::from_factors(Vec::new(), Vec::new())
    }

    pub fn numerator_factors(&self) -> &[u32] {
        &self.numerator_factors
    }

    pub fn denominator_factors(&self) -> &[u32] {
        &self.denominator_factors
    }

    /// Expanded numerator coefficients, constant term first.
    pub fn numerator(&self) -> Vec<BigInt> {
        product_of_binomials(&self.numerator_factors, BigInt::one())
    }

    /// Expanded denominator coefficients, constant term first.
    pub fn denominator(&self) -> Vec<BigInt> {
        product_of_binomials(&self.denominator_factors, -BigInt::one())
    }

    /// Value at `t = 1` when the denominator is trivial: `2^(number of odd
    /// generators)`.
    pub fn value_at_one(&self) -> Option<BigUint> {
        if self.denominator_factors.is_empty() {
            Some(BigUint::one() << self.numerator_factors.len())
        } else {
            None
        }
    }

    /// Coefficients of `t^0 ..= t^max_degree`.
    pub fn expand(&self, max_degree: usize) -> Vec<BigUint> {
        let n = max_degree;
        let mut coeffs = vec![BigUint::zero(); n + 1];
        coeffs[0] = BigUint::one();
        for &d in &self.numerator_factors {
            let d = d as usize;
            // times (1 + t^d), high to low so each term is used once
            for i in (d..=n).rev() {
                let (lo, hi) = coeffs.split_at_mut(i);
                hi[0] += &lo[i - d];
            }
        }
        for &e in &self.denominator_factors {
            let e = e as usize;
            // divided by (1 - t^e): c[i] += c[i - e], low to high
            for i in e..=n {
                let (lo, hi) = coeffs.split_at_mut(i);
                hi[0] += &lo[i - e];
            }
        }
        coeffs
    }
}

fn product_of_binomials(degrees: &[u32], sign: BigInt) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for &d in degrees {
        let d = d as usize;
        let mut next = vec![BigInt::zero(); poly.len() + d];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + d] += &sign * c;
        }
        poly = next;
    }
    poly
}

fn write_factors(f: &mut fmt::Formatter<'_>, degrees: &[u32], op: char) -> fmt::Result {
    let mut grouped: BTreeMap<u32, usize> = BTreeMap::new();
    for &d in degrees {
        *grouped.entry(d).or_insert(0) += 1;
    }
    for (d, mult) in grouped {
        write!(f, "(1{op}t^{d})")?;
        if mult > 1 {
            write!(f, "^{mult}")?;
        }
    }
    Ok(())
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator_factors.is_empty() {
            f.write_str("1")?;
        } else {
            write_factors(f, &self.numerator_factors, '+')?;
        }
        if !self.denominator_factors.is_empty() {
            f.write_str("/(")?;
            write_factors(f, &self.denominator_factors, '-')?;
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Poincaré series of the free algebra `a`. The trivial algebra gives `1`.
pub fn poincare_series(a: &FreeGradedAlgebra) -> RationalSeries {
    let (odd, even): (Vec<u32>, Vec<u32>) =
        a.generator_degrees().into_iter().partition(|d| d % 2 == 1);
    RationalSeries::from_factors(odd, even)
}

pub fn expand(s: &RationalSeries, max_degree: usize) -> Vec<BigUint> {
    s.expand(max_degree)
}

/// `dim H^degree` of the free algebra `a`.
pub fn betti(a: &FreeGradedAlgebra, degree: usize) -> BigUint {
    poincare_series(a)
        .expand(degree)
        .pop()
        .expect("expansion has degree + 1 entries")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn alg(gens: &[(u32, u64)]) -> FreeGradedAlgebra {
        FreeGradedAlgebra::from_generators(gens.iter().copied())
    }

    // Counts monomials degree by degree: odd generators with exponent 0 or 1,
    // even generators with any exponent.
    fn brute_force(degrees: &[u32], n: usize) -> Vec<u64> {
        fn go(degrees: &[u32], used: usize, n: usize, out: &mut [u64]) {
            let Some((&d, rest)) = degrees.split_first() else {
                out[used] += 1;
                return;
            };
            let max_power = if d % 2 == 1 { 1 } else { usize::MAX };
            let mut power = 0;
            let mut total = used;
            while total <= n && power <= max_power {
                go(rest, total, n, out);
                total += d as usize;
                power += 1;
            }
        }
        let mut out = vec![0; n + 1];
        go(degrees, 0, n, &mut out);
        out
    }

    #[test]
    fn exterior_on_one_generator() {
        let s = poincare_series(&alg(&[(3, 1)]));
        assert_eq!(s.to_string(), "(1+t^3)");
        assert_eq!(s.expand(5), ints(&[1, 0, 0, 1, 0, 0]));
        assert_eq!(s.numerator(), [1, 0, 0, 1].map(BigInt::from).to_vec());
        assert_eq!(s.denominator(), vec![BigInt::one()]);
    }

    #[test]
    fn polynomial_on_two_generators() {
        let s = poincare_series(&alg(&[(2, 2)]));
        assert_eq!(s.to_string(), "1/((1-t^2)^2)");
        // brute force: x1^a x2^b with 2a + 2b <= 4
        assert_eq!(s.expand(4), ints(&[1, 0, 2, 0, 3]));
        assert_eq!(s.denominator(), [1, 0, -2, 0, 1].map(BigInt::from).to_vec());
    }

    #[test]
    fn su2_b_star_with_two_classes() {
        let s = poincare_series(&alg(&[(2, 2), (4, 1)]));
        assert_eq!(s.to_string(), "1/((1-t^2)^2(1-t^4))");
        // degree 4: x1², x1x2, x2², y
        assert_eq!(s.expand(4), ints(&[1, 0, 2, 0, 4]));
    }

    #[test]
    fn betti_numbers() {
        // z_i z_j with i < j from three degree-1 generators
        assert_eq!(betti(&alg(&[(1, 3), (3, 1)]), 2), BigUint::from(3u32));
        assert_eq!(betti(&alg(&[]), 0), BigUint::one());
        assert_eq!(betti(&alg(&[(3, 1)]), 6), BigUint::zero());
        assert_eq!(poincare_series(&alg(&[])), RationalSeries::one());
        assert_eq!(RationalSeries::one().to_string(), "1");
    }

    #[test]
    fn exact_beyond_u64() {
        // 1/(1-t)^40 at t^60 is C(99, 39), far above u64::MAX
        let s = RationalSeries::from_factors(vec![], vec![1; 40]);
        let c = s.expand(60).pop().unwrap();
        let mut binom = BigUint::one();
        for i in 0..39u32 {
            binom = binom * BigUint::from(99 - i) / BigUint::from(i + 1);
        }
        assert_eq!(c, binom);
        assert!(c > BigUint::from(u64::MAX));
    }

    fn small_algebra() -> impl Strategy<Value = Vec<(u32, u64)>> {
        prop::collection::vec((1u32..12, 0u64..3), 0..5)
    }

    proptest! {
        #[test]
        fn expansion_matches_monomial_count(gens in small_algebra(), n in 0usize..24) {
            let a = alg(&gens);
            let expected: Vec<BigUint> = brute_force(&a.generator_degrees(), n)
                .into_iter().map(BigUint::from).collect();
            prop_assert_eq!(poincare_series(&a).expand(n), expected);
        }

        #[test]
        fn exterior_series_at_one(odd in prop::collection::vec(0u32..8, 0..6)) {
            let a = alg(&odd.iter().map(|&k| (2 * k + 1, 1)).collect::<Vec<_>>());
            let s = poincare_series(&a);
            let top = s.numerator_factors().iter().map(|&d| d as usize).sum::<usize>();
            let total: BigUint = s.expand(top).into_iter().sum();
            prop_assert_eq!(Some(total.clone()), s.value_at_one());
            prop_assert_eq!(Some(total), a.total_dimension());
        }

        #[test]
        fn numerator_over_denominator_is_expansion(gens in small_algebra(), n in 0usize..20) {
            // denominator · expansion ≡ numerator mod t^(n+1)
            let s = poincare_series(&alg(&gens));
            let e = s.expand(n);
            let den = s.denominator();
            let num = s.numerator();
            for k in 0..=n {
                let mut acc = BigInt::zero();
                for (i, c) in den.iter().enumerate().take(k + 1) {
                    acc += c * BigInt::from(e[k - i].clone());
                }
                let want = num.get(k).cloned().unwrap_or_default();
                prop_assert_eq!(acc, want);
            }
            prop_assert_eq!(e[0].clone(), BigUint::one());
        }
    }
}
