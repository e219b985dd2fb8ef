//! Exact intersection theory on the Grassmannian of lines in P³.
//!
//! The crate counts degree-`d` surfaces in P³ that are singular to order `k`
//! along some line and pass through the expected number of generic points.
//! Everything is computed with exact rationals:
//!
//! * [`ring`]: the cohomology ring of Gr(2,4) in the Schubert basis,
//! * [`chern`]: total Chern classes, Chern characters and Newton identities,
//! * [`series`] and [`sym`]: Chern characters of symmetric powers, both by a
//!   direct binomial formula and by the Adams-operation generating function,
//! * [`counter`]: the bundle of forms vanishing to order `k` on a line, and
//!   the resulting count,
//! * [`oracles`]: independent checks (plane arrangements, monomial counts,
//!   a filtration of the bundle, torus localization, the table of small values),
//! * [`verify`]: the self-check suites driven by the `singline verify` command.
//!
//! ```
//! use singline_core::{count_via_pipeline, SurfaceQuery};
//!
//! let q = SurfaceQuery::new(3, 1).unwrap();
//! let res = count_via_pipeline(&q).unwrap();
//! assert_eq!(res.n, 27.into());
//! assert_eq!(res.delta, 19);
//! ```

pub mod chern;
pub mod counter;
pub mod error;
pub mod oracles;
pub mod ring;
pub mod scalar;
pub mod series;
pub mod sym;
pub mod verify;

pub use chern::{
    c4_from_power_sums, chern_class_of_nu, chern_class_of_tau_star, invert_total,
    lower_chern_from_power_sums, power_sums_from_negated_character, ChernCharacter, PowerSums,
    TotalChernClass,
};
pub use counter::{
    ch_vkd, ch_vkd_closedform, count_closed_form, count_reference_formula, count_via_pipeline, delta, phi,
    power_sums_phi_form, CountResult, SurfaceQuery, Warning,
};
pub use error::{Error, Result};
pub use oracles::{
    ch_vkd_filtration, ch_vkd_filtration_with, localization_count, localization_count_with,
    planes_count_cases, planes_count_closed, rank_monomial_oracle, reference_table,
    tau_star_sym_series, ReferenceTable,
};
pub use ring::{CohClass, MultiplicationTable, SchubertBasis};
pub use scalar::Scalar;
pub use series::{phi_series, PhiPolynomial, RingSeries};
pub use sym::{ch_nu, ch_sym_adams, ch_sym_direct, ch_wedge2_nu, symmetric_power_series};

pub use num_bigint::BigInt;
