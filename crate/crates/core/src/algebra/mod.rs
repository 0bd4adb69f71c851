//! Exact arithmetic: coefficient rings, polynomials, linear algebra,
//! factorization over ℚ, number fields and resultants.

pub mod factor;
pub mod linalg;
pub mod mpoly;
pub mod numfield;
pub mod resultant;
pub mod ring;
pub mod upoly;

pub use mpoly::MPoly;
pub use numfield::{NfElem, NumberField};
pub use ring::{Field, PrimeField, Rationals, Ring};
pub use upoly::UPoly;
