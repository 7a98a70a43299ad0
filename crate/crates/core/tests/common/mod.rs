#![allow(dead_code)]

use luttinger_core::factorization::Direction;
use luttinger_core::Factorization;

/// `σ₁³ · σ₁⁻¹σ₂σ₁ · σ₁ · σ₂`, a cuspidal cubic with one cusp.
pub const CUSPIDAL_CUBIC: &str = "bmf 1\nstrands 3\nfactor 3 1 ;\nfactor 1 2 ; -1\nfactor 1 1 ;\nfactor 1 2 ;\n";

pub fn cuspidal_cubic() -> Factorization {
    Factorization::parse_bmf(CUSPIDAL_CUBIC).unwrap()
}

/// Applies moves given as `(index seed, forward?)`, reducing indices modulo
/// the number of adjacent pairs.
pub fn apply_moves(f: &Factorization, moves: &[(usize, bool)]) -> Factorization {
    let mut g = f.clone();
    for &(i, fwd) in moves {
        let dir = if fwd { Direction::Forward } else { Direction::Backward };
        g = g.hurwitz_move(i % (g.len() - 1), dir).unwrap();
    }
    g
}
