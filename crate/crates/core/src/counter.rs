//! The bundle `V_{k,d}` of degree-`d` forms vanishing to order `k` along a
//! line, and the number `N(d,k)` of such surfaces through `δ` generic points.
//!
//! In K-theory `[V_{k,d}] = C(u+3,3)[Symᵏν] - C(u+2,3)[∧²ν][Symᵏ⁻¹ν]` with
//! `u = d - k`. `N` is the `σ22` coefficient of the degree-4 part of
//! `c(V_{k,d})⁻¹`, computed here through Newton's identities and checked
//! against the inverse of the full total Chern class.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::chern::{
    c4_from_power_sums, invert_total, lower_chern_from_power_sums,
    power_sums_from_negated_character, ChernCharacter, PowerSums,
};
use crate::error::{Error, Result};
use crate::ring::{CohClass, SchubertBasis};
use crate::scalar::{self, ratio, Scalar};
use crate::sym::{ch_sym_direct, ch_wedge2_nu};

/// Largest accepted surface degree. Keeps ranks inside `u64`.
pub const MAX_DEGREE: i64 = 1_000_000;

/// A validated pair `(d, k)` with `1 <= k <= d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceQuery {
    d: u32,
    k: u32,
    u: u32,
}

impl SurfaceQuery {
    pub fn new(d: i64, k: i64) -> Result<Self> {
        let invalid = |constraint| Error::InvalidQuery { d, k, constraint };
        if k < 1 {
            return Err(invalid("k >= 1"));
        }
        if d < k {
            return Err(invalid("d >= k"));
        }
        if d > MAX_DEGREE {
            return Err(invalid("d <= 1000000"));
        }
        let (d, k) = (d as u32, k as u32);
        Ok(Self { d, k, u: d - k })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `u = d - k`.
    pub fn u(&self) -> u32 {
        self.u
    }

    /// All queries with `1 <= k <= d <= dmax`, ordered by `d` then `k`.
    pub fn grid(dmax: u32) -> impl Iterator<Item = SurfaceQuery> {
        (1..=dmax).flat_map(|d| {
            (1..=d).map(move |k| SurfaceQuery::new(i64::from(d), i64::from(k)).expect("in range"))
        })
    }
}

/// Domain caveats attached to a count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Warning {
    /// `(d,k) = (2,1)`: a quadric has infinitely many lines.
    InfiniteLinesD2K1,
    /// `(d,k) = (3,1)`: a cubic has 27 lines, each counted separately.
    NonuniqueLineD3K1,
}

impl Warning {
    pub fn code(self) -> &'static str {
        match self {
            Warning::InfiniteLinesD2K1 => "INFINITE_LINES_D2K1",
            Warning::NonuniqueLineD3K1 => "NONUNIQUE_LINE_D3K1",
        }
    }

    pub fn message(self) -> &'static str {
        match self {
            Warning::InfiniteLinesD2K1 => {
                "a quadric surface contains infinitely many lines so the count is not enumeratively meaningful"
            }
            Warning::NonuniqueLineD3K1 => {
                "every cubic surface contains 27 lines and N counts (surface, line) pairs: divide by 27 for distinct surfaces"
            }
        }
    }

    pub fn for_query(q: &SurfaceQuery) -> Vec<Warning> {
        match (q.d, q.k) {
            (2, 1) => vec![Warning::InfiniteLinesD2K1],
            (3, 1) => vec![Warning::NonuniqueLineD3K1],
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code(), self.message())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub query: SurfaceQuery,
    pub n: BigInt,
    pub rank: u64,
    /// Number of point conditions, `rank + 3`.
    pub delta: u64,
    pub phi: Scalar,
    pub warnings: Vec<Warning>,
}

fn binom(n: u32, r: u64) -> Scalar {
    scalar::from_big(scalar::binomial(u64::from(n), r))
}

/// `ch(V_{k,d})` assembled from the symmetric-power characters.
pub fn ch_vkd(q: &SurfaceQuery) -> ChernCharacter {
    let sym_k = ch_sym_direct(q.k);
    let twisted = ch_wedge2_nu().mul(&ch_sym_direct(q.k - 1));
    sym_k
        .scale(&binom(q.u + 3, 3))
        .sub(&twisted.scale(&binom(q.u + 2, 3)))
}

/// `ch(V_{k,d})` from the coefficient-by-coefficient closed forms.
pub fn ch_vkd_closedform(q: &SurfaceQuery) -> ChernCharacter {
    use SchubertBasis::*;
    let a = binom(q.u + 3, 3);
    let b = binom(q.u + 2, 3);
    let u2 = binom(q.u + 2, 2);
    let k2 = binom(q.k + 1, 2);
    let k3 = binom(q.k + 1, 3);
    let k3_shift = binom(q.k + 2, 3);
    let k = scalar::int(i64::from(q.k));
    ChernCharacter::from_class(&CohClass::from_terms([
        (One, &a + &k * &u2),
        (S1, -(&u2 * &k2)),
        (S11, &u2 * (&k2 * ratio(1, 2) + &k3)),
        (S2, -((&a + &b) * &k2 * ratio(1, 2))),
        (
            S21,
            (&a + &b * scalar::int(2)) * &k2 * ratio(1, 6) + (&a + &b) * &k3 * ratio(1, 2),
        ),
        (S22, (&a * &k3 - &b * &k3_shift) * ratio(1, 12)),
    ]))
}

fn rank_of(ch: &ChernCharacter) -> Result<u64> {
    let r = ch.rank();
    scalar::to_integer(&r)
        .and_then(|n| n.to_u64())
        .ok_or_else(|| Error::NonIntegral(r.to_string()))
}

/// `δ = rank(V_{k,d}) + 3`.
pub fn delta(q: &SurfaceQuery) -> u64 {
    rank_of(&ch_vkd(q)).expect("rank is a nonnegative integer") + 3
}

/// `φ = (u+2)(u+1)(k+1)k / 12`.
pub fn phi(q: &SurfaceQuery) -> Scalar {
    let (u, k) = (i64::from(q.u), i64::from(q.k));
    scalar::from_big(BigInt::from(u + 2) * (u + 1) * (k + 1) * k) * ratio(1, 12)
}

/// The power sums `s_l(-[V_{k,d}])` written in terms of `φ`:
/// `s₁ = 3φσ1`, `s₂ = φ((2u+3)σ2 - (2k+1)σ11)`, `s₃ = -φ(u + 3k + 2uk)σ21`,
/// `s₄ = 2φ(u-k+1)σ22`.
pub fn power_sums_phi_form(q: &SurfaceQuery) -> PowerSums {
    use SchubertBasis::*;
    let phi = phi(q);
    let (u, k) = (i64::from(q.u), i64::from(q.k));
    let int = scalar::int;
    PowerSums::new([
        CohClass::term(S1, &phi * int(3)),
        CohClass::from_terms([
            (S2, &phi * int(2 * u + 3)),
            (S11, -(&phi * int(2 * k + 1))),
        ]),
        CohClass::term(S21, -(&phi * int(u + 3 * k + 2 * u * k))),
        CohClass::term(S22, &phi * int(2 * (u - k + 1))),
    ])
    .expect("each s_l is homogeneous")
}

/// `N(d,k)` through the full characteristic-class pipeline.
///
/// The degree-4 Chern class of `-[V]` is computed from its power sums and
/// compared with `d₄` of the inverted total Chern class of `+[V]`; the two
/// must coincide.
pub fn count_via_pipeline(q: &SurfaceQuery) -> Result<CountResult> {
    let ch = ch_vkd(q);

    let c4_negated = c4_from_power_sums(&power_sums_from_negated_character(&ch));
    let total = lower_chern_from_power_sums(&PowerSums::of_character(&ch));
    let inverse = invert_total(&total)?;
    let d4 = inverse.part(4);
    if &c4_negated != d4 {
        return Err(Error::RouteMismatch(format!(
            "(d,k)=({},{}): c4(-V) = {c4_negated}, d4 = {d4}",
            q.d, q.k
        )));
    }

    let top = c4_negated.coefficient(SchubertBasis::S22);
    let n = scalar::to_integer(&top).ok_or_else(|| Error::NonIntegral(top.to_string()))?;
    let rank = rank_of(&ch)?;
    Ok(CountResult {
        query: *q,
        n,
        rank,
        delta: rank + 3,
        phi: phi(q),
        warnings: Warning::for_query(q),
    })
}

/// `N = φ/4 [(3φ)³ - 2(9φ²+1)(u-k+1) + φ(2u² + 2k² - 8uk + 2u - 10k + 5)]`.
pub fn count_closed_form(q: &SurfaceQuery) -> Result<BigInt> {
    let (u, k) = (i64::from(q.u), i64::from(q.k));
    closed_form_with(q, 2 * u * u + 2 * k * k - 8 * u * k + 2 * u - 10 * k + 5)
}

/// The closed form the reference table of small values was generated with:
/// `φ/4 [(3φ)³ - 2(9φ²+1)(u-k+1) + φ(2u² + 2k² - 6u - 10k + 5)]`.
///
/// It takes the `σ21` part of `ch₃(V)` with `C(u+2,2)` where the K-class
/// gives `C(u+3,3) + C(u+2,3)`, and so exceeds [`count_closed_form`] by
/// `2φ²u(k-1)`. The two agree when `k = 1` or `d = k`.
pub fn count_reference_formula(q: &SurfaceQuery) -> Result<BigInt> {
    let (u, k) = (i64::from(q.u), i64::from(q.k));
    closed_form_with(q, 2 * u * u + 2 * k * k - 6 * u - 10 * k + 5)
}

fn closed_form_with(q: &SurfaceQuery, quadratic: i64) -> Result<BigInt> {
    let phi = phi(q);
    let (u, k) = (i64::from(q.u), i64::from(q.k));
    let int = scalar::int;
    let three_phi = &phi * int(3);
    let bracket = &three_phi * &three_phi * &three_phi
        - (&phi * &phi * int(9) + int(1)) * int(2) * int(u - k + 1)
        + &phi * int(quadratic);
    let n = &phi * ratio(1, 4) * bracket;
    scalar::to_integer(&n).ok_or_else(|| Error::NonIntegral(n.to_string()))
}
