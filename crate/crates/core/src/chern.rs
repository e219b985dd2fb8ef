//! Total Chern classes, Chern characters and the Newton identities that
//! connect them through power sums of Chern roots.

use crate::error::{Error, Result};
use crate::ring::{CohClass, SchubertBasis, TOP_DEGREE};
use crate::scalar::{self, Scalar};

const PARTS: usize = TOP_DEGREE + 1;

fn split_graded(c: &CohClass) -> [CohClass; PARTS] {
    std::array::from_fn(|j| c.degree_component(j).expect("j <= TOP_DEGREE"))
}

fn check_graded(parts: &[CohClass]) -> Result<()> {
    for (j, p) in parts.iter().enumerate() {
        if !p.is_homogeneous_of(j) {
            return Err(Error::NotHomogeneous(j));
        }
    }
    Ok(())
}

fn sum_parts(parts: &[CohClass]) -> CohClass {
    parts.iter().fold(CohClass::zero(), |acc, p| acc + p)
}

/// A total Chern class `1 + c₁ + c₂ + c₃ + c₄`, stored by degree.
///
/// The rank of the bundle is not recorded here; see [`ChernCharacter::rank`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalChernClass {
    parts: [CohClass; PARTS],
}

impl TotalChernClass {
    pub fn one() -> Self {
        Self::from_class(&CohClass::one())
    }

    /// Builds the class from its graded pieces; piece `j` must be homogeneous
    /// of degree `j`.
    pub fn from_parts(parts: [CohClass; PARTS]) -> Result<Self> {
        check_graded(&parts)?;
        Ok(Self { parts })
    }

    pub fn from_class(c: &CohClass) -> Self {
        Self {
            parts: split_graded(c),
        }
    }

    /// The degree-`j` piece `c_j`. Panics if `j > 4`.
    pub fn part(&self, j: usize) -> &CohClass {
        &self.parts[j]
    }

    pub fn parts(&self) -> &[CohClass; PARTS] {
        &self.parts
    }

    pub fn total(&self) -> CohClass {
        sum_parts(&self.parts)
    }

    /// Whitney-sum product, truncated at degree 4.
    pub fn mul(&self, other: &TotalChernClass) -> TotalChernClass {
        Self::from_class(&(self.total() * other.total()))
    }
}

/// `c(τ*) = 1 + σ1 + σ11`.
pub fn chern_class_of_tau_star() -> TotalChernClass {
    use SchubertBasis::*;
    TotalChernClass::from_class(&(CohClass::one() + CohClass::basis(S1) + CohClass::basis(S11)))
}

/// `c(ν) = 1 - σ1 + σ2`.
pub fn chern_class_of_nu() -> TotalChernClass {
    use SchubertBasis::*;
    TotalChernClass::from_class(&(CohClass::one() - CohClass::basis(S1) + CohClass::basis(S2)))
}

/// The inverse `d = c⁻¹` in the truncated ring, solved degree by degree from
/// `Σ_{i=0..j} c_i d_{j-i} = 0` for `j ≥ 1`.
pub fn invert_total(c: &TotalChernClass) -> Result<TotalChernClass> {
    let c0 = c.part(0);
    if *c0 != CohClass::one() {
        return Err(Error::NonUnitConstant(c0.to_string()));
    }
    let mut d: Vec<CohClass> = vec![CohClass::one()];
    for j in 1..PARTS {
        let mut dj = CohClass::zero();
        for i in 1..=j {
            dj -= c.part(i) * &d[j - i];
        }
        d.push(dj);
    }
    Ok(TotalChernClass {
        parts: d.try_into().expect("five parts"),
    })
}

/// A Chern character `ch₀ + ch₁ + … + ch₄`; `ch₀` is the (virtual) rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernCharacter {
    parts: [CohClass; PARTS],
}

impl ChernCharacter {
    pub fn zero() -> Self {
        Self::from_class(&CohClass::zero())
    }

    pub fn from_parts(parts: [CohClass; PARTS]) -> Result<Self> {
        check_graded(&parts)?;
        Ok(Self { parts })
    }

    pub fn from_class(c: &CohClass) -> Self {
        Self {
            parts: split_graded(c),
        }
    }

    /// The degree-`j` piece `ch_j`. Panics if `j > 4`.
    pub fn part(&self, j: usize) -> &CohClass {
        &self.parts[j]
    }

    pub fn parts(&self) -> &[CohClass; PARTS] {
        &self.parts
    }

    pub fn total(&self) -> CohClass {
        sum_parts(&self.parts)
    }

    pub fn rank(&self) -> Scalar {
        self.parts[0].coefficient(SchubertBasis::One)
    }

    pub fn add(&self, other: &ChernCharacter) -> ChernCharacter {
        Self::from_class(&(self.total() + other.total()))
    }

    pub fn sub(&self, other: &ChernCharacter) -> ChernCharacter {
        Self::from_class(&(self.total() - other.total()))
    }

    pub fn scale(&self, a: &Scalar) -> ChernCharacter {
        Self::from_class(&self.total().scale(a))
    }

    /// Character of a tensor product.
    pub fn mul(&self, other: &ChernCharacter) -> ChernCharacter {
        Self::from_class(&(self.total() * other.total()))
    }
}

/// Power sums `s_l = Σ x_i^l` of Chern roots, for `l = 1..=4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSums {
    parts: [CohClass; 4],
}

impl PowerSums {
    pub fn zero() -> Self {
        Self {
            parts: std::array::from_fn(|_| CohClass::zero()),
        }
    }

    /// `parts[l-1]` must be homogeneous of degree `l`.
    pub fn new(parts: [CohClass; 4]) -> Result<Self> {
        for (i, p) in parts.iter().enumerate() {
            if !p.is_homogeneous_of(i + 1) {
                return Err(Error::NotHomogeneous(i + 1));
            }
        }
        Ok(Self { parts })
    }

    /// `s_l = l! · ch_l`.
    pub fn of_character(ch: &ChernCharacter) -> Self {
        Self {
            parts: std::array::from_fn(|i| {
                let l = i as u64 + 1;
                ch.part(i + 1).scale(&scalar::from_big(scalar::factorial(l)))
            }),
        }
    }

    /// `s_l` for `l` in `1..=4`. Panics otherwise.
    pub fn get(&self, l: usize) -> &CohClass {
        assert!((1..=4).contains(&l), "power sum index {l} outside 1..=4");
        &self.parts[l - 1]
    }

    pub fn negate(&self) -> Self {
        Self {
            parts: std::array::from_fn(|i| -&self.parts[i]),
        }
    }
}

/// Power sums of the negated class: `s_l(-E) = -(l! · ch_l(E))`.
pub fn power_sums_from_negated_character(ch: &ChernCharacter) -> PowerSums {
    PowerSums::of_character(ch).negate()
}

/// `c₄ = (s₁⁴ + 8 s₃ s₁ - 6 s₁² s₂ + 3 s₂² - 6 s₄) / 24`.
pub fn c4_from_power_sums(s: &PowerSums) -> CohClass {
    let (s1, s2, s3, s4) = (s.get(1), s.get(2), s.get(3), s.get(4));
    let s1_sq = s1 * s1;
    let numerator = &s1_sq * &s1_sq + (s3 * s1).scale(&scalar::int(8))
        - (&s1_sq * s2).scale(&scalar::int(6))
        + (s2 * s2).scale(&scalar::int(3))
        - s4.scale(&scalar::int(6));
    numerator.scale(&scalar::ratio(1, 24))
}

/// Elementary symmetric functions of the roots from their power sums via
/// Newton's recursion `j c_j = Σ_{i=1..j} (-1)^{i-1} c_{j-i} s_i`.
pub fn lower_chern_from_power_sums(s: &PowerSums) -> TotalChernClass {
    let mut c: Vec<CohClass> = vec![CohClass::one()];
    for j in 1..PARTS {
        let mut acc = CohClass::zero();
        for i in 1..=j {
            let term = &c[j - i] * s.get(i);
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        c.push(acc.scale(&scalar::ratio(1, j as i64)));
    }
    TotalChernClass {
        parts: c.try_into().expect("five parts"),
    }
}

impl Default for PowerSums {
    fn default() -> Self {
        Self::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::SchubertBasis::*;
    use crate::scalar::{int, ratio};

    fn b(x: SchubertBasis) -> CohClass {
        CohClass::basis(x)
    }

    /// The textbook closed forms, used as an oracle for the recursion.
    fn explicit_inverse(c: &TotalChernClass) -> [CohClass; 5] {
        let (c1, c2, c3, c4) = (c.part(1), c.part(2), c.part(3), c.part(4));
        [
            CohClass::one(),
            -c1,
            c1 * c1 - c2,
            -(c1 * c1 * c1) + (c1 * c2).scale(&int(2)) - c3,
            c1.pow(4) - (c1 * c1 * c2).scale(&int(3)) + c2 * c2 + (c1 * c3).scale(&int(2)) - c4,
        ]
    }

    #[test]
    fn tau_star_and_nu() {
        let tau = chern_class_of_tau_star();
        assert_eq!(tau.total(), CohClass::one() + b(S1) + b(S11));
        assert!(tau.part(3).is_zero());
        let nu = chern_class_of_nu();
        assert_eq!(nu.total(), CohClass::one() - b(S1) + b(S2));
        assert!(nu.part(4).is_zero());
        assert_eq!(tau.mul(&nu), TotalChernClass::one());
        assert_eq!(invert_total(&tau).unwrap(), nu);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert_total(&TotalChernClass::one()).unwrap(), TotalChernClass::one());
        let c = TotalChernClass::from_class(&(CohClass::one() + b(S1) + b(S2) + b(S21)));
        let d = invert_total(&c).unwrap();
        assert_eq!(c.mul(&d), TotalChernClass::one());
        assert_eq!(d.parts(), &explicit_inverse(&c));
        assert_eq!(invert_total(&d).unwrap(), c);
    }

    #[test]
    fn invert_rejects_non_unit() {
        let c = TotalChernClass::from_class(&(CohClass::scalar(int(2)) + b(S1)));
        assert!(matches!(invert_total(&c), Err(Error::NonUnitConstant(_))));
        let c = TotalChernClass::from_class(&b(S1));
        assert!(invert_total(&c).is_err());
    }

    #[test]
    fn from_parts_checks_grading() {
        let mut parts: [CohClass; 5] = std::array::from_fn(|_| CohClass::zero());
        parts[0] = CohClass::one();
        parts[2] = b(S1);
        assert_eq!(TotalChernClass::from_parts(parts), Err(Error::NotHomogeneous(2)));
        assert!(PowerSums::new([b(S1), b(S2), b(S21), b(S11)]).is_err());
    }

    #[test]
    fn negated_power_sums() {
        // ch of V at (d,k) = (2,2): ch₁ = -3σ1
        let ch = ChernCharacter::from_class(&(CohClass::scalar(int(3)) - b(S1).scale(&int(3))));
        let s = power_sums_from_negated_character(&ch);
        assert_eq!(s.get(1), &b(S1).scale(&int(3)));
        assert_eq!(power_sums_from_negated_character(&ChernCharacter::zero()), PowerSums::zero());
        // ch₄ = -1/3 σ22 gives s₄ = 24/3 σ22
        let ch = ChernCharacter::from_class(&b(S22).scale(&ratio(-1, 3)));
        assert_eq!(power_sums_from_negated_character(&ch).get(4), &b(S22).scale(&int(8)));
    }

    #[test]
    fn c4_of_zero() {
        assert!(c4_from_power_sums(&PowerSums::zero()).is_zero());
        assert_eq!(lower_chern_from_power_sums(&PowerSums::zero()), TotalChernClass::one());
    }

    #[test]
    fn newton_recovers_nu() {
        // ch(ν) = 2 - σ1 + (σ11 - σ2)/2 + σ21/6
        let ch = ChernCharacter::from_class(
            &(CohClass::scalar(int(2)) - b(S1)
                + (b(S11) - b(S2)).scale(&ratio(1, 2))
                + b(S21).scale(&ratio(1, 6))),
        );
        let s = PowerSums::of_character(&ch);
        assert_eq!(s.get(1), &-b(S1));
        assert_eq!(s.get(2), &(b(S11) - b(S2)));
        let c = lower_chern_from_power_sums(&s);
        assert_eq!(c, chern_class_of_nu());
        assert_eq!(
            invert_total(&c).unwrap(),
            lower_chern_from_power_sums(&s.negate())
        );
    }
}
