//! Chern characters of `ν`, `∧²ν` and the symmetric powers `Symᵗν`.
//!
//! `Symᵗν` is computed twice: [`ch_sym_direct`] evaluates the binomial
//! closed form, [`ch_sym_adams`] extracts the `zᵗ` coefficient of
//! `exp(Σ_k φ_{k-1}(z) ch_k)`. The two must agree exactly.

use crate::chern::ChernCharacter;
use crate::error::Result;
use crate::ring::{CohClass, SchubertBasis, TOP_DEGREE};
use crate::scalar::{self, ratio};
use crate::series::{phi_series, RingSeries};

/// `ch(ν) = 2 - σ1 + (σ11 - σ2)/2 + σ21/6`.
pub fn ch_nu() -> ChernCharacter {
    use SchubertBasis::*;
    ChernCharacter::from_class(&CohClass::from_terms([
        (One, scalar::int(2)),
        (S1, scalar::int(-1)),
        (S11, ratio(1, 2)),
        (S2, ratio(-1, 2)),
        (S21, ratio(1, 6)),
    ]))
}

/// `ch(∧²ν) = e^{-σ1}`.
pub fn ch_wedge2_nu() -> ChernCharacter {
    use SchubertBasis::*;
    ChernCharacter::from_class(&CohClass::from_terms([
        (One, scalar::int(1)),
        (S1, scalar::int(-1)),
        (S11, ratio(1, 2)),
        (S2, ratio(1, 2)),
        (S21, ratio(-1, 3)),
        (S22, ratio(1, 12)),
    ]))
}

/// Binomial closed form for `ch(Symᵗν)`.
pub fn ch_sym_direct(t: u32) -> ChernCharacter {
    use SchubertBasis::*;
    let t1 = u64::from(t) + 1;
    let c2 = scalar::from_big(scalar::binomial(t1, 2));
    let c3 = scalar::from_big(scalar::binomial(t1, 3));
    let half = ratio(1, 2);
    ChernCharacter::from_class(&CohClass::from_terms([
        (One, scalar::from_big(t1.into())),
        (S1, -&c2),
        (S11, &c2 * &half + &c3),
        (S2, -(&c2 * &half)),
        (S21, &c2 * ratio(1, 6) + &c3 * &half),
        (S22, &c3 * ratio(1, 12)),
    ]))
}

/// `ch(S_E(z)) = Σ_t ch(Symᵗ E) zᵗ = exp(Σ_{k=0..4} φ_{k-1}(z) ch_k(E))`,
/// truncated at `zᵒʳᵈᵉʳ`.
pub fn symmetric_power_series(ch: &ChernCharacter, order: usize) -> Result<RingSeries> {
    let mut arg = RingSeries::zero(order);
    for k in 0..=TOP_DEGREE {
        let part = ch.part(k);
        if part.is_zero() {
            continue;
        }
        let phi = phi_series(k as i64 - 1, order)?;
        arg = arg.add(&phi.mul_class(part));
    }
    arg.exp()
}

/// `ch(Symᵗν)` through the Adams-operation generating function.
pub fn ch_sym_adams(t: u32) -> Result<ChernCharacter> {
    let order = t as usize;
    let series = symmetric_power_series(&ch_nu(), order)?;
    Ok(ChernCharacter::from_class(&series.coeff(order)))
}
