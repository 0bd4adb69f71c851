#![allow(
    clippy::needless_range_loop,
    clippy::len_without_is_empty,
    clippy::wrong_self_convention
)]

pub mod algebra;
pub mod bott;
pub mod chow;
pub mod pencil;
pub mod symfunc;
pub mod verify;
