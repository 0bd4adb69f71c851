//! Intersection rings: Grassmannians in the Schubert basis, projective
//! bundles over them, integration and tautological Chern classes.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * On `G(k, n)` the Schubert class `σ_i` is `c_i(Q)` for the universal
//!   quotient `Q` of rank `n-k`, and `σ_{1^i} = c_i(S^*)`. Partitions live in
//!   the box with `k` rows and `n-k` columns. On `G(3,5)` this means `σ_2`
//!   exists and `σ_3` does not, and `∫σ_2 σ_1^4 = 2`, whereas on `G(2,5)` the
//!   same expression integrates to `3`. Mixing the two boxes silently changes
//!   intersection numbers.
//! * `P(E)` is the bundle of lines in `E` and `H = c_1(O_{P(E)}(1))`. Then
//!   `Σ c_i(E) H^{r-i} = 0` and `π_*(H^{r-1+j}) = [c(E)^{-1}]_j`.

mod json;
mod ops;
mod ring;

use thiserror::Error;

use crate::symfunc::Partition;

pub use json::{class_from_json, class_to_json, descriptor_from_json, descriptor_to_json};
pub use ops::{
    bundle_tangent_total, dual_total, evaluate_series, grassmann_tangent_chern, integrate, integrate_integer,
    inverse_total, pushforward_to_base, relative_tangent_chern, taut_chern, taut_total, total, Tautological,
};
pub use ring::{grassmann_ring, point_ring, proj_bundle_ring, same_ring, Monomial, RingClass, RingDescriptor, RingRef};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChowError {
    #[error("bad Grassmannian dimensions G({k},{n}): need 0 < k < n <= 12")]
    BadDimensions { k: usize, n: usize },
    #[error("classes live in different rings")]
    RingMismatch,
    #[error("class is not of top degree")]
    NotTopDegree,
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("intersection number {0} is not an integer")]
    NonIntegral(String),
    #[error("partition {0} does not fit the Schubert box")]
    NotInBox(Partition),
    #[error("projective bundles are supported over a point or a Grassmannian only")]
    UnsupportedBase,
    #[error("invalid Chern classes: {0}")]
    BadChernClasses(String),
    #[error("malformed class JSON: {0}")]
    Json(String),
}
