//! Symbols of classical Weyl groups and the combinatorics around them.

pub mod array;
pub mod asai;
pub mod beta;
pub mod degrees;
pub mod enumerate;
pub mod error;
pub mod flags;
pub mod formal;
pub mod hooks;
pub mod mn;
pub mod operators;
pub mod sets;
pub mod signed;
pub mod weyl;
pub mod young;

pub use array::{Array, DegenerateSign, Symbol};
pub use beta::{BetaSet, Partition};
pub use error::{Error, Result};
pub use formal::FormalSum;
pub use hooks::HookPosition;
pub use mn::PhiRoute;
pub use signed::{SignedCycleType, SignedPermutation};
