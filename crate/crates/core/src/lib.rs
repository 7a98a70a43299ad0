//! Discrete calculus of braid monodromy and Luttinger surgery.
//!
//! The crate is organised bottom-up:
//!
//! * [`braid`]: braid words, permutation braids, Garside normal form, the
//!   Artin action on free groups.
//! * [`factorization`]: braid monodromy factorizations, Hurwitz moves and
//!   partial conjugation (the algebraic form of braiding a branch curve).
//! * [`vankampen`]: presentations of curve-complement fundamental groups.
//! * [`groups`]: Smith normal form, abelianization, Tietze simplification and
//!   enumeration of branched covers.
//! * [`surgery`]: homology and canonical-class bookkeeping for surgery along
//!   a torus.
//! * [`moishezon`]: closed-form invariants of the family `X_{p,k}`.
//!
//! Everything is exact: integers are arbitrary precision where they can grow
//! and rationals are `BigRational`.

pub mod braid;
pub mod factorization;
pub mod groups;
pub mod moishezon;
pub mod rational;
pub mod surgery;
pub mod vankampen;

pub use braid::{BraidError, BraidWord, FreeWord, NormalForm, Permutation};
pub use factorization::{Factor, Factorization, FactorizationError, SingularityCensus};
pub use groups::{AbelianGroupStructure, CoverSolution, IntegerMatrix};
pub use moishezon::{FamilyInvariants, FamilyParams};
pub use surgery::{HomologyClass, SurgerySpec};
pub use vankampen::GroupPresentation;
