//! Finitely presented group computations: Smith normal form, abelianization,
//! Tietze simplification and branched-cover enumeration.

mod abelian;
mod covers;
mod matrix;
mod tietze;

pub use abelian::{abelianization, AbelianGroupStructure};
pub use covers::{enumerate_covers, CoverError, CoverLimits, CoverSolution, MeridianSet};
pub use matrix::{smith_normal_form, IntegerMatrix, SmithForm};
pub use tietze::{tietze_simplify, TietzeLimits};
