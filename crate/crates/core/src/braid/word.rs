use std::fmt;

use super::garside::NormalForm;
use super::{format_letters, parse_letters, BraidError, FreeWord, Permutation};

/// A word in the Artin generators of the braid group on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands < 1 {
            return Err(BraidError::TooFewStrands { min: 1, got: strands });
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1);
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Parses the whitespace-separated text syntax, e.g. `"1 2 -1"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self, BraidError> {
        BraidWord::new(strands, parse_letters(text)?)
    }

    /// `σ_i^e` for a 1-based generator index.
    pub fn generator_power(strands: usize, i: usize, e: i64) -> Result<Self, BraidError> {
        let letter = i32::try_from(i).map_err(|_| BraidError::Parse(i.to_string()))?;
        let l = if e < 0 { -letter } else { letter };
        BraidWord::new(strands, vec![l; e.unsigned_abs() as usize])
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// `self * inner * self⁻¹`
    pub fn conjugate(&self, inner: &BraidWord) -> Result<BraidWord, BraidError> {
        self.compose(inner)?.compose(&self.invert())
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` pairs. The braid is unchanged.
    pub fn freely_reduced(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// Image in the symmetric group; see the module docs for the convention.
    pub fn perm(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            p.swap_images(i, i + 1);
        }
        p
    }

    /// The full twist `Δ² = (σ_1 … σ_{n-1})^n`.
    pub fn full_twist(n: usize) -> Result<BraidWord, BraidError> {
        if n < 2 {
            return Err(BraidError::TooFewStrands { min: 2, got: n });
        }
        let row: Vec<i32> = (1..n as i32).collect();
        let mut letters = Vec::with_capacity(n * (n - 1));
        for _ in 0..n {
            letters.extend_from_slice(&row);
        }
        Ok(BraidWord { strands: n, letters })
    }

    /// The half twist `Δ` as a positive word.
    pub fn half_twist(n: usize) -> Result<BraidWord, BraidError> {
        if n < 1 {
            return Err(BraidError::TooFewStrands { min: 1, got: n });
        }
        let mut letters = Vec::new();
        for top in (1..n as i32).rev() {
            letters.extend(1..=top);
        }
        Ok(BraidWord { strands: n, letters })
    }

    /// Half-twist exchanging strands `s < t` behind the strands between them:
    /// `X σ_s X⁻¹` with `X = σ_{t-1} … σ_{s+1}`.
    pub fn band_generator(n: usize, s: usize, t: usize) -> Result<BraidWord, BraidError> {
        if !(1 <= s && s < t && t <= n) {
            return Err(BraidError::BandIndices { n, s, t });
        }
        let (s, t) = (s as i32, t as i32);
        let mut letters: Vec<i32> = ((s + 1)..t).rev().collect();
        letters.push(s);
        letters.extend(((s + 1)..t).map(|i| -i));
        BraidWord::new(n, letters)
    }

    pub fn normal_form(&self) -> NormalForm {
        NormalForm::of(self)
    }

    /// Decides equality in the braid group via the Garside normal form.
    pub fn equal(&self, other: &BraidWord) -> Result<bool, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(self.normal_form() == other.normal_form())
    }

    pub fn is_trivial(&self) -> bool {
        self.normal_form().is_identity()
    }

    /// Images `φ_w(x_1), …, φ_w(x_n)` of the free generators.
    pub fn artin_images(&self) -> Vec<FreeWord> {
        let n = self.strands;
        let mut img: Vec<FreeWord> = (1..=n).map(|i| FreeWord::generator(n, i)).collect();
        // φ_{uσ} = φ_u ∘ φ_σ: substitute the current images into φ_σ(x_j).
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let (a, b) = (img[i].clone(), img[i + 1].clone());
            if l > 0 {
                img[i] = a.conjugate(&b);
                img[i + 1] = a;
            } else {
                img[i] = b.clone();
                img[i + 1] = b.inverse().conjugate(&a);
            }
        }
        img
    }

    /// The Artin action of this braid on a free word of rank `strands`.
    pub fn artin_action(&self, x: &FreeWord) -> Result<FreeWord, BraidError> {
        if x.rank() != self.strands {
            return Err(BraidError::RankMismatch {
                strands: self.strands,
                rank: x.rank(),
            });
        }
        Ok(x.substitute(&self.artin_images()))
    }

    /// `φ_w(x_i)` for a single 1-based generator. Works right to left so only
    /// one image is carried.
    pub fn artin_generator_image(&self, i: usize) -> FreeWord {
        let n = self.strands;
        let mut word = FreeWord::generator(n, i);
        for &l in self.letters.iter().rev() {
            let j = l.unsigned_abs() as usize;
            let mut imgs: Vec<FreeWord> = (1..=n).map(|g| FreeWord::generator(n, g)).collect();
            let (xj, xj1) = (FreeWord::generator(n, j), FreeWord::generator(n, j + 1));
            if l > 0 {
                imgs[j - 1] = xj.conjugate(&xj1);
                imgs[j] = xj;
            } else {
                imgs[j - 1] = xj1.clone();
                imgs[j] = xj1.inverse().conjugate(&xj);
            }
            word = word.substitute(&imgs);
        }
        word
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.letters))
    }
}
