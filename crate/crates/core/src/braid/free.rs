use std::fmt;

use super::{format_letters, BraidError};

/// A freely reduced word in the free group on `x_1..x_rank`.
///
/// Letter `i > 0` is `x_i`, `-i` is `x_i⁻¹`. Every constructor reduces, so
/// two `FreeWord`s are equal as group elements iff they compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

fn push_reduced(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl FreeWord {
    pub fn new(rank: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(BraidError::FreeLetterOutOfRange { letter: l, rank });
            }
        }
        let mut out = Vec::with_capacity(letters.len());
        for l in letters {
            push_reduced(&mut out, l);
        }
        Ok(FreeWord { rank, letters: out })
    }

    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// The 1-based generator `x_i`.
    pub fn generator(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank, "generator {i} out of range for rank {rank}");
        FreeWord {
            rank,
            letters: vec![i as i32],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        assert_eq!(self.rank, other.rank, "free word ranks differ");
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        FreeWord {
            rank: self.rank,
            letters: out,
        }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `self * other * self⁻¹`
    pub fn conjugate(&self, other: &FreeWord) -> FreeWord {
        self.mul(other).mul(&self.inverse())
    }

    pub fn commutator(&self, other: &FreeWord) -> FreeWord {
        self.mul(other).mul(&self.inverse()).mul(&other.inverse())
    }

    pub fn pow(&self, e: i64) -> FreeWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity(self.rank);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Replaces each `x_i` by `images[i-1]`; the result lives in the rank of
    /// the images.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        assert_eq!(images.len(), self.rank, "need one image per generator");
        let target_rank = images.first().map_or(0, FreeWord::rank);
        let mut out = Vec::new();
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                for &m in &img.letters {
                    push_reduced(&mut out, m);
                }
            } else {
                for &m in img.letters.iter().rev() {
                    push_reduced(&mut out, -m);
                }
            }
        }
        FreeWord {
            rank: target_rank,
            letters: out,
        }
    }

    /// Exponent sum of each generator (the image in the abelianization).
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.rank];
        for &l in &self.letters {
            sums[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        sums
    }

    /// Strips matching first/last letters, giving a cyclic conjugate.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let l = &self.letters;
        let (mut a, mut b) = (0usize, l.len());
        while b - a >= 2 && l[a] == -l[b - 1] {
            a += 1;
            b -= 1;
        }
        FreeWord {
            rank: self.rank,
            letters: l[a..b].to_vec(),
        }
    }

    /// How often generator `i` (1-based) occurs, with either sign.
    pub fn occurrences(&self, i: usize) -> usize {
        self.letters.iter().filter(|l| l.unsigned_abs() as usize == i).count()
    }

    /// Same letters viewed in a different rank; letters must stay in range.
    pub fn with_rank(&self, rank: usize) -> Result<FreeWord, BraidError> {
        FreeWord::new(rank, self.letters.clone())
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.letters))
    }
}
