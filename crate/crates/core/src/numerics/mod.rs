//! Arbitrary-precision evaluation of single and double zeta values,
//! numeric identity checks and period matrices.

pub mod bigreal;
pub mod cache;
pub mod identities;
pub mod mzv;
pub mod period;
pub mod zeta;

pub use bigreal::{BigReal, Complex};
pub use identities::{verify_double_shuffle, verify_euler, verify_parity_relation, verify_square};
pub use mzv::{double_zeta, mzv_numeric};
pub use period::{numeric_instantiate, period_matrix, PeriodExpr, PeriodMatrix};
pub use zeta::zeta_single;
