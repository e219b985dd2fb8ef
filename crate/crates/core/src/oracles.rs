//! Independent checks that share no code path with the characteristic-class
//! pipeline.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chern::ChernCharacter;
use crate::counter::SurfaceQuery;
use crate::error::{Error, Result};
use crate::ring::{CohClass, SchubertBasis};
use crate::scalar::{self, ratio, Scalar};
use crate::series::RingSeries;
use crate::sym::{ch_sym_direct, symmetric_power_series};

/// `N(k,k)` for unions of `k` planes through a common line:
/// `(k-1)k(k+1)(k+2)(k+3)(k+4)(3k² - 3k + 2) / 24²`.
pub fn planes_count_closed(k: u32) -> Result<BigInt> {
    let k = i64::from(k);
    let n = scalar::from_big(
        scalar::falling_factorial(k + 4, 6) * BigInt::from(3 * k * k - 3 * k + 2),
    ) * ratio(1, 576);
    integral(n)
}

/// `N(k,k)` by counting point configurations: two triples, one triple and two
/// pairs, or four pairs (the last with two transversal lines).
pub fn planes_count_cases(k: u32) -> Result<BigInt> {
    let n = i64::from(k) + 4;
    let term = |len: u32, denom: i64| scalar::from_big(scalar::falling_factorial(n, len)) * ratio(1, denom);
    // (k+4)!/((k-2)! 3! 3! 2), (k+4)!/((k-3)! 3! 2³), (k+4)!/((k-4)! 4! 2³)
    let total = term(6, 6 * 6 * 2) + term(7, 6 * 8) + term(8, 24 * 8);
    integral(total)
}

fn integral(q: Scalar) -> Result<BigInt> {
    scalar::to_integer(&q).ok_or_else(|| Error::NonIntegral(q.to_string()))
}

/// Counts monomials `x^p y^q z^r t^s` of degree `d` with `p + q >= k` by
/// enumeration: the dimension of the space of degree-`d` forms vanishing to
/// order `k` on the line `z = t = 0`.
pub fn rank_monomial_oracle(d: i64, k: i64) -> Result<u64> {
    if k < 1 || d < k {
        let constraint = if k < 1 { "k >= 1" } else { "d >= k" };
        return Err(Error::InvalidQuery { d, k, constraint });
    }
    let mut count = 0u64;
    for p in 0..=d {
        for q in 0..=d - p {
            if p + q < k {
                continue;
            }
            // z^r t^s with r + s = d - p - q
            for _r in 0..=d - p - q {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `ch(τ*)` from its Chern roots `x' + y' = σ1`, `x'y' = σ11`, using
/// `p_n = e₁ p_{n-1} - e₂ p_{n-2}` and `ch_n = p_n / n!`.
fn ch_tau_star() -> ChernCharacter {
    let e1 = CohClass::basis(SchubertBasis::S1);
    let e2 = CohClass::basis(SchubertBasis::S11);
    let mut p = vec![CohClass::scalar(scalar::int(2)), e1.clone()];
    for n in 2..=4 {
        let next = &e1 * &p[n - 1] - &e2 * &p[n - 2];
        p.push(next);
    }
    let total = p.iter().enumerate().fold(CohClass::zero(), |acc, (n, pn)| {
        acc + pn.scale(&scalar::from_big(scalar::factorial(n as u64)).recip())
    });
    ChernCharacter::from_class(&total)
}

/// `Σ_j ch(Symʲτ*) zʲ` through `z^order`.
pub fn tau_star_sym_series(order: usize) -> Result<RingSeries> {
    symmetric_power_series(&ch_tau_star(), order)
}

/// `ch(V_{k,d})` from the filtration of degree-`d` forms by order of
/// vanishing along the line: `[V_{k,d}] = Σ_{m=k..d} [Symᵐν]·[Sym^{d-m}τ*]`.
/// Shares no code with the K-class assembly in [`crate::counter::ch_vkd`].
pub fn ch_vkd_filtration(q: &SurfaceQuery) -> Result<ChernCharacter> {
    Ok(ch_vkd_filtration_with(q, &tau_star_sym_series(q.u() as usize)?))
}

/// [`ch_vkd_filtration`] reusing a series from [`tau_star_sym_series`] of
/// order at least `d - k`.
pub fn ch_vkd_filtration_with(q: &SurfaceQuery, tau_sym: &RingSeries) -> ChernCharacter {
    let (d, k) = (q.d() as usize, q.k() as usize);
    assert!(tau_sym.order() >= d - k, "series order {} below d - k = {}", tau_sym.order(), d - k);
    let mut total = ChernCharacter::zero();
    for m in k..=d {
        let graded = ChernCharacter::from_class(&tau_sym.coeff(d - m));
        total = total.add(&ch_sym_direct(m as u32).mul(&graded));
    }
    total
}

/// Torus weights used by [`localization_count`]; any pairwise distinct
/// integers give the same answer.
pub const DEFAULT_WEIGHTS: [i64; 4] = [0, 3, 8, 19];

/// `N(d,k)` by Bott residues on Gr(2,4): the sum over the six coordinate
/// lines of `h₄(weights of V) / e(T)`. Independent of the Schubert basis,
/// Chern characters and Newton identities.
pub fn localization_count(q: &SurfaceQuery) -> Result<BigInt> {
    localization_count_with(q, DEFAULT_WEIGHTS)
}

/// [`localization_count`] with explicit weights.
pub fn localization_count_with(q: &SurfaceQuery, weights: [i64; 4]) -> Result<BigInt> {
    let (d, k) = (i64::from(q.d()), i64::from(q.k()));
    let mut total = Scalar::zero();
    for i in 0..4 {
        for j in i + 1..4 {
            let normal: Vec<usize> = (0..4).filter(|&a| a != i && a != j).collect();
            // complete homogeneous h₀..h₄ of the fiber weights of V
            let mut h = [BigInt::from(1), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
            for p0 in 0..=d {
                for p1 in 0..=d - p0 {
                    for p2 in 0..=d - p0 - p1 {
                        let exps = [p0, p1, p2, d - p0 - p1 - p2];
                        if normal.iter().map(|&a| exps[a]).sum::<i64>() < k {
                            continue;
                        }
                        let w: i64 = -(0..4).map(|a| exps[a] * weights[a]).sum::<i64>();
                        for n in 1..5 {
                            let prev = h[n - 1].clone();
                            h[n] += prev * w;
                        }
                    }
                }
            }
            let mut euler = BigInt::from(1);
            for &a in &normal {
                for b in [i, j] {
                    let diff = weights[a] - weights[b];
                    if diff == 0 {
                        return Err(Error::DegenerateWeights);
                    }
                    euler *= diff;
                }
            }
            total += Scalar::new(h[4].clone(), euler);
        }
    }
    integral(total)
}

/// The populated cells of the table of small values, as `(d, k, N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceTable {
    entries: Vec<(u32, u32, u64)>,
}

const TABLE: [(u32, u32, u64); 27] = [
    (2, 1, 0),
    (2, 2, 10),
    (3, 1, 27),
    (3, 2, 522),
    (3, 3, 175),
    (4, 1, 320),
    (4, 2, 7674),
    (4, 3, 9624),
    (4, 4, 1330),
    (5, 1, 1990),
    (5, 2, 58315),
    (5, 3, 139572),
    (5, 4, 76335),
    (5, 5, 6510),
    (6, 1, 8680),
    (6, 2, 296190),
    (6, 3, 1043290),
    (6, 4, 1115310),
    (6, 5, 387360),
    (6, 6, 24150),
    (7, 1, 29960),
    (7, 2, 1147440),
    (7, 3, 5224695),
    (7, 4, 8332500),
    (7, 5, 5710755),
    (7, 6, 1480920),
    (7, 7, 73920),
];

impl ReferenceTable {
    pub fn entries(&self) -> &[(u32, u32, u64)] {
        &self.entries
    }

    pub fn lookup(&self, d: u32, k: u32) -> Option<u64> {
        self.entries
            .iter()
            .find(|(ed, ek, _)| *ed == d && *ek == k)
            .map(|e| e.2)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn reference_table() -> ReferenceTable {
    ReferenceTable {
        entries: TABLE.to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planes_closed_examples() {
        assert_eq!(planes_count_closed(2).unwrap(), BigInt::from(10));
        assert_eq!(planes_count_closed(3).unwrap(), BigInt::from(175));
        assert_eq!(planes_count_closed(1).unwrap(), BigInt::from(0));
    }

    #[test]
    fn planes_cases_examples() {
        // only the two-triples term survives at k = 2: 6!/(36·2)
        assert_eq!(planes_count_cases(2).unwrap(), BigInt::from(10));
        assert_eq!(planes_count_cases(3).unwrap(), BigInt::from(175));
        assert_eq!(planes_count_cases(4).unwrap(), BigInt::from(1330));
        assert_eq!(planes_count_cases(1).unwrap(), BigInt::from(0));
    }

    #[test]
    fn rank_oracle_examples() {
        assert_eq!(rank_monomial_oracle(3, 1).unwrap(), 16);
        assert_eq!(rank_monomial_oracle(2, 2).unwrap(), 3);
        for d in 1..15 {
            assert_eq!(rank_monomial_oracle(d, d).unwrap(), d as u64 + 1);
        }
        assert!(rank_monomial_oracle(1, 2).is_err());
        assert!(rank_monomial_oracle(3, 0).is_err());
    }

    #[test]
    fn rank_oracle_matches_sum() {
        for d in 1..20i64 {
            for k in 1..=d {
                let sum: i64 = (k..=d).map(|m| (m + 1) * (d - m + 1)).sum();
                assert_eq!(rank_monomial_oracle(d, k).unwrap(), sum as u64);
            }
        }
    }

    #[test]
    fn filtration_matches_k_class() {
        for q in SurfaceQuery::grid(12) {
            assert_eq!(ch_vkd_filtration(&q).unwrap(), crate::counter::ch_vkd(&q), "{q:?}");
        }
        let series = tau_star_sym_series(20).unwrap();
        let q = SurfaceQuery::new(9, 4).unwrap();
        assert_eq!(ch_vkd_filtration_with(&q, &series), ch_vkd_filtration(&q).unwrap());
    }

    #[test]
    fn tau_star_character() {
        // 4 = [ν] + [τ*] in K-theory
        let sum = ch_tau_star().add(&crate::sym::ch_nu());
        assert_eq!(sum.total(), CohClass::scalar(scalar::int(4)));
    }

    #[test]
    fn localization_examples() {
        let q = |d, k| SurfaceQuery::new(d, k).unwrap();
        assert_eq!(localization_count(&q(2, 2)).unwrap(), BigInt::from(10));
        assert_eq!(localization_count(&q(3, 1)).unwrap(), BigInt::from(27));
        assert_eq!(localization_count(&q(2, 1)).unwrap(), BigInt::from(0));
        assert_eq!(localization_count(&q(3, 2)).unwrap(), BigInt::from(504));
        assert_eq!(localization_count(&q(7, 7)).unwrap(), BigInt::from(73920));
        assert_eq!(
            localization_count_with(&q(5, 3), [2, -7, 11, 40]).unwrap(),
            localization_count(&q(5, 3)).unwrap()
        );
    }

    #[test]
    fn localization_rejects_repeated_weights() {
        let q = SurfaceQuery::new(3, 1).unwrap();
        assert_eq!(localization_count_with(&q, [0, 1, 1, 5]), Err(Error::DegenerateWeights));
    }

    #[test]
    fn table_lookup() {
        let t = reference_table();
        assert_eq!(t.len(), 27);
        assert_eq!(t.lookup(6, 6), Some(24150));
        assert_eq!(t.lookup(7, 1), Some(29960));
        assert_eq!(t.lookup(2, 1), Some(0));
        assert_eq!(t.lookup(1, 1), None);
    }
}
