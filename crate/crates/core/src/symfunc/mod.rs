//! Symmetric-function toolkit: partitions, Littlewood–Richardson
//! coefficients, Weyl dimensions and universal Chern-class polynomials.

mod chern;
mod lr;
mod partition;

use thiserror::Error;

pub use chern::{
    chern_from_roots, chern_sym2, chern_tensor, chern_twist, chern_wedge2, e_basis_to_roots, elementary, is_unit,
    roots_to_e_basis, roots_to_e_basis_blocks, segre_from_chern, ChernSeries,
};
pub use lr::{count_lr_tableaux, lr_coefficients, lr_coefficients_bounded, ShapeBound};
pub use partition::{weyl_dimension, weyl_dimension_signed, Partition, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymFuncError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<u32>),
    #[error("expression is not symmetric in its root variables")]
    NotSymmetric,
    #[error("total Chern class must have constant term 1")]
    NonUnitConstant,
}
