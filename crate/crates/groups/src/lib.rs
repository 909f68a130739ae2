//! Small finite groups over finite fields: closure, conjugacy classes, exact
//! character tables, class-product counts and the checks built on them.

pub mod classical;
pub mod dixon;
pub mod cyclo;
pub mod error;
pub mod field;
pub mod group;
pub mod matrix;
pub mod modp;
pub mod parabolic;
pub mod poly;
pub mod products;
pub mod support;

pub use error::{Error, Result};
pub use field::Field;
pub use matrix::Matrix;
pub use group::{ConjugacyClass, GroupOps, SmallGroup};
pub use classical::{build_group, Family, MatrixGroup, MatrixOps};
pub use dixon::{character_table, CharacterTable, TableValidation};
