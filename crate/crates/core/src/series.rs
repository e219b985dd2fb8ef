//! Truncated power series in `z` with coefficients in the cohomology ring,
//! and the series `φ_k(z) = Σ iᵏ zⁱ` that drive the Adams-operation route.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::CohClass;
use crate::scalar::{self, Scalar};

/// `Σ_{i=0..=order} a_i zⁱ` with all arithmetic truncated at `z^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSeries {
    coeffs: Vec<CohClass>,
}

impl RingSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![CohClass::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = CohClass::one();
        s
    }

    /// Builds a series from its first coefficients; missing ones are zero and
    /// extra ones are dropped.
    pub fn from_coeffs<I: IntoIterator<Item = CohClass>>(order: usize, coeffs: I) -> Self {
        let mut s = Self::zero(order);
        for (i, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[i] = c;
        }
        s
    }

    /// A series with coefficients in `Q·1`.
    pub fn from_scalars<F: FnMut(usize) -> Scalar>(order: usize, mut f: F) -> Self {
        Self {
            coeffs: (0..=order).map(|i| CohClass::scalar(f(i))).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `zⁱ`; zero beyond the truncation order.
    pub fn coeff(&self, i: usize) -> CohClass {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[CohClass] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &RingSeries) -> RingSeries {
        assert_eq!(self.order(), other.order(), "truncation orders differ");
        Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn neg(&self) -> RingSeries {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, a: &Scalar) -> RingSeries {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.scale(a)).collect(),
        }
    }

    /// Multiplies every coefficient by the class `x`.
    pub fn mul_class(&self, x: &CohClass) -> RingSeries {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * x).collect(),
        }
    }

    pub fn mul(&self, other: &RingSeries) -> RingSeries {
        assert_eq!(self.order(), other.order(), "truncation orders differ");
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// `exp(A)` for an argument with zero constant coefficient.
    ///
    /// Uses `E' = A' E`, i.e. `n e_n = Σ_{i=1..n} i a_i e_{n-i}`, which holds
    /// because the coefficient ring is commutative. Agrees with the finite
    /// sum `Σ_{m≤order} Aᵐ/m!`.
    pub fn exp(&self) -> Result<RingSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::SeriesNotNilpotent);
        }
        let n = self.order();
        let weighted: Vec<CohClass> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a.scale(&scalar::int(i as i64)))
            .collect();
        let mut e = vec![CohClass::one()];
        for m in 1..=n {
            let mut acc = CohClass::zero();
            for i in 1..=m {
                if !weighted[i].is_zero() && !e[m - i].is_zero() {
                    acc += &weighted[i] * &e[m - i];
                }
            }
            e.push(acc.scale(&scalar::ratio(1, m as i64)));
        }
        Ok(Self { coeffs: e })
    }
}

/// The polynomial `p_k(w) = ((w + w²) ∂_w)ᵏ w`, with `φ_k(z) = p_k(z/(1-z))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiPolynomial {
    k: u32,
    coeffs: Vec<BigInt>,
}

impl PhiPolynomial {
    pub fn new(k: u32) -> Self {
        let mut coeffs = vec![BigInt::zero(), BigInt::one()];
        for _ in 0..k {
            // (w + w²) ∂_w  sends a_j w^j to j a_j w^j + j a_j w^{j+1}
            let mut next = vec![BigInt::zero(); coeffs.len() + 1];
            for (j, a) in coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                next[j] += a * j;
                next[j + 1] += a * j;
            }
            coeffs = next;
        }
        Self { k, coeffs }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Coefficient `a^k_j` of `w^j`.
    pub fn coefficient(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    /// `p_k(f(z))` with `f(z) = z/(1-z) = Σ_{i≥1} zⁱ`, truncated at `order`.
    ///
    /// Uses `fʲ = Σ_{i≥j} C(i-1, j-1) zⁱ` for `j ≥ 1`, so the result has
    /// scalar coefficients.
    pub fn evaluate_at_geometric(&self, order: usize) -> RingSeries {
        RingSeries::from_scalars(order, |i| {
            if i == 0 {
                return scalar::from_big(self.coefficient(0));
            }
            let sum: BigInt = self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .take_while(|(j, _)| *j <= i)
                .map(|(j, a)| a * scalar::binomial(i as u64 - 1, j as u64 - 1))
                .sum();
            scalar::from_big(sum)
        })
    }
}

/// `φ_k(z)` truncated at `order`: `-ln(1-z)` for `k = -1`, otherwise
/// `p_k(z/(1-z))`.
pub fn phi_series(k: i64, order: usize) -> Result<RingSeries> {
    match k {
        -1 => Ok(RingSeries::from_scalars(order, |i| {
            if i == 0 {
                Scalar::zero()
            } else {
                scalar::ratio(1, i as i64)
            }
        })),
        k if k >= 0 => {
            let k = u32::try_from(k).map_err(|_| Error::PhiIndex(k))?;
            Ok(PhiPolynomial::new(k).evaluate_at_geometric(order))
        }
        k => Err(Error::PhiIndex(k)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::SchubertBasis::*;
    use crate::scalar::{int, ratio};

    fn scalars(s: &RingSeries) -> Vec<Scalar> {
        s.coeffs().iter().map(|c| c.coefficient(One)).collect()
    }

    #[test]
    fn phi_polynomials_match_listed_forms() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(PhiPolynomial::new(0).coeffs, ints(&[0, 1]));
        assert_eq!(PhiPolynomial::new(1).coeffs[..3], ints(&[0, 1, 1])[..]);
        assert_eq!(PhiPolynomial::new(2).coefficient(3), BigInt::from(2));
        assert_eq!(PhiPolynomial::new(2).coefficient(2), BigInt::from(3));
        assert_eq!(PhiPolynomial::new(3).degree(), 4);
    }

    #[test]
    fn phi_recursion_matches_a_table() {
        // a^{k+1}_j = j a^k_j + (j-1) a^k_{j-1}
        for k in 0..8 {
            let p = PhiPolynomial::new(k);
            let q = PhiPolynomial::new(k + 1);
            for j in 1..=k as usize + 2 {
                let expected = p.coefficient(j) * j + p.coefficient(j - 1) * (j - 1);
                assert_eq!(q.coefficient(j), expected, "k={k} j={j}");
            }
        }
    }

    #[test]
    fn phi_series_examples() {
        assert_eq!(scalars(&phi_series(0, 5).unwrap()), [0, 1, 1, 1, 1, 1].map(int));
        assert_eq!(scalars(&phi_series(1, 5).unwrap()), [0, 1, 2, 3, 4, 5].map(int));
        assert_eq!(phi_series(2, 5).unwrap().coeff(3), CohClass::scalar(int(9)));
        assert_eq!(phi_series(-1, 3).unwrap().coeff(3), CohClass::scalar(ratio(1, 3)));
        assert_eq!(phi_series(-2, 3), Err(Error::PhiIndex(-2)));
    }

    #[test]
    fn phi_series_are_power_sums_of_integers() {
        for k in 0..=3u32 {
            let s = phi_series(k as i64, 12).unwrap();
            for i in 1..=12usize {
                assert_eq!(s.coeff(i), CohClass::scalar(int((i as i64).pow(k))));
            }
        }
    }

    #[test]
    fn geometric_binomial_extraction() {
        // f^a (1+f)^b = Σ_{m≥a} C(b-1+m, a+b-1) z^m with 1+f = 1/(1-z)
        let n = 10;
        let f = phi_series(0, n).unwrap();
        let one_plus_f = RingSeries::one(n).add(&f);
        for a in 0..4u32 {
            for b in 1..4u32 {
                let mut s = RingSeries::one(n);
                for _ in 0..a {
                    s = s.mul(&f);
                }
                for _ in 0..b {
                    s = s.mul(&one_plus_f);
                }
                for m in 0..=n {
                    let expected = if m < a as usize {
                        BigInt::zero()
                    } else {
                        scalar::binomial((b - 1) as u64 + m as u64, (a + b - 1) as u64)
                    };
                    assert_eq!(s.coeff(m), CohClass::scalar(scalar::from_big(expected)));
                }
            }
        }
    }

    #[test]
    fn exp_matches_power_sum_definition() {
        let n = 6;
        let a = RingSeries::from_coeffs(
            n,
            [
                CohClass::zero(),
                CohClass::scalar(int(2)) - CohClass::basis(S1),
                CohClass::basis(S11).scale(&ratio(1, 2)),
                CohClass::basis(S21),
                CohClass::scalar(ratio(-1, 3)),
            ],
        );
        let mut direct = RingSeries::zero(n);
        let mut power = RingSeries::one(n);
        for m in 0..=n {
            direct = direct.add(&power.scale(&scalar::from_big(scalar::factorial(m as u64)).recip()));
            power = power.mul(&a);
        }
        assert_eq!(a.exp().unwrap(), direct);
        assert_eq!(a.exp().unwrap().mul(&a.neg().exp().unwrap()), RingSeries::one(n));
    }

    #[test]
    fn exp_needs_zero_constant() {
        assert_eq!(RingSeries::one(3).exp(), Err(Error::SeriesNotNilpotent));
        assert_eq!(RingSeries::zero(3).exp().unwrap(), RingSeries::one(3));
    }

    #[test]
    fn valuation() {
        assert_eq!(RingSeries::zero(4).valuation(), None);
        assert_eq!(phi_series(0, 4).unwrap().valuation(), Some(1));
        assert_eq!(phi_series(0, 4).unwrap().mul(&phi_series(1, 4).unwrap()).valuation(), Some(2));
    }
}
