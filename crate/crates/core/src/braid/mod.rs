//! Braid group arithmetic.
//!
//! Conventions used throughout the crate:
//!
//! * A [`BraidWord`] is read left to right; letter `i > 0` is `σ_i`, letter
//!   `-i` is `σ_i⁻¹`.
//! * The Artin action is `σ_i : x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i`.
//!   For a word `w = a_1 … a_l` the automorphism is `φ_w = φ_{a_1} ∘ … ∘ φ_{a_l}`,
//!   so `φ_{uv} = φ_u ∘ φ_v`. Every `φ_w` fixes the product `x_1 x_2 … x_n`.
//! * [`BraidWord::perm`] is the permutation induced on the free generators:
//!   `φ_w(x_j)` is a conjugate of `x_{perm(w)(j)}`. With `(a * b)(j) = a(b(j))`
//!   this is a homomorphism, and `σ_1 σ_2 ↦ (1 2 3)`.

mod free;
mod garside;
mod perm;
mod word;

pub use free::FreeWord;
pub use garside::{NormalForm, PermutationBraid};
pub use perm::Permutation;
pub use word::BraidWord;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("strand count must be at least {min}, got {got}")]
    TooFewStrands { min: usize, got: usize },
    #[error("letter {letter} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("free generator {letter} is out of range for rank {rank}")]
    FreeLetterOutOfRange { letter: i32, rank: usize },
    #[error("rank mismatch: braid on {strands} strands acting on free group of rank {rank}")]
    RankMismatch { strands: usize, rank: usize },
    #[error("band generator needs 1 <= s < t <= n, got n={n}, s={s}, t={t}")]
    BandIndices { n: usize, s: usize, t: usize },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("cannot parse {0:?} as a signed generator index")]
    Parse(String),
}

/// Parses whitespace-separated nonzero integers, the text form of braid and
/// free words.
pub fn parse_letters(text: &str) -> Result<Vec<i32>, BraidError> {
    text.split_whitespace()
        .map(|tok| match tok.parse::<i32>() {
            Ok(0) | Err(_) => Err(BraidError::Parse(tok.to_string())),
            Ok(v) => Ok(v),
        })
        .collect()
}

pub(crate) fn format_letters(letters: &[i32]) -> String {
    let mut out = String::new();
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&l.to_string());
    }
    out
}
