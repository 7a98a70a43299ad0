//! Left-greedy Garside normal form over permutation braids.
//!
//! A permutation braid is stored positionally: `pos[p]` is the final position
//! of the strand that starts at position `p` (0-based). Strands `p < q` cross
//! exactly when `pos[p] > pos[q]`.

use std::fmt;

use super::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationBraid {
    pos: Vec<usize>,
}

impl PermutationBraid {
    fn identity(n: usize) -> Self {
        PermutationBraid { pos: (0..n).collect() }
    }

    fn delta(n: usize) -> Self {
        PermutationBraid {
            pos: (0..n).rev().collect(),
        }
    }

    /// `σ_{i+1}` for a 0-based index.
    fn generator(n: usize, i: usize) -> Self {
        let mut s = Self::identity(n);
        s.pos.swap(i, i + 1);
        s
    }

    /// `Δ σ_{i+1}⁻¹`, the left complement of a generator.
    fn delta_over_generator(n: usize, i: usize) -> Self {
        let pos = (0..n)
            .map(|p| {
                let v = n - 1 - p;
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        PermutationBraid { pos }
    }

    pub fn strands(&self) -> usize {
        self.pos.len()
    }

    /// Final positions of the strands, 0-based.
    pub fn positions(&self) -> &[usize] {
        &self.pos
    }

    pub fn is_identity(&self) -> bool {
        self.pos.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.pos.len();
        self.pos.iter().enumerate().all(|(i, &v)| v == n - 1 - i)
    }

    fn starts_with(&self, i: usize) -> bool {
        self.pos[i] > self.pos[i + 1]
    }

    fn inverse_positions(&self) -> Vec<usize> {
        let mut inv = vec![0; self.pos.len()];
        for (p, &v) in self.pos.iter().enumerate() {
            inv[v] = p;
        }
        inv
    }

    /// Conjugation by `Δ`: `σ_i ↦ σ_{n-i}`.
    fn flip(&self) -> Self {
        let n = self.pos.len();
        PermutationBraid {
            pos: (0..n).map(|p| n - 1 - self.pos[n - 1 - p]).collect(),
        }
    }

    /// Positive word, one letter per crossing.
    pub fn word(&self) -> Vec<i32> {
        let mut rest = self.pos.clone();
        let mut out = Vec::new();
        'outer: loop {
            for i in 0..rest.len().saturating_sub(1) {
                if rest[i] > rest[i + 1] {
                    out.push(i as i32 + 1);
                    rest.swap(i, i + 1);
                    continue 'outer;
                }
            }
            break;
        }
        out
    }
}

/// Makes the pair `(a, b)` left-weighted: moves every generator that starts
/// `b` but does not finish `a` across. Returns whether anything moved.
fn left_weight(a: &mut PermutationBraid, b: &mut PermutationBraid) -> bool {
    let n = a.pos.len();
    let mut changed = false;
    let mut a_inv = a.inverse_positions();
    loop {
        let mut moved = false;
        for i in 0..n - 1 {
            let finishes_a = a_inv[i] > a_inv[i + 1];
            if b.starts_with(i) && !finishes_a {
                // a ← a σ_i, b ← σ_i⁻¹ b
                a_inv.swap(i, i + 1);
                b.pos.swap(i, i + 1);
                moved = true;
                changed = true;
            }
        }
        if !moved {
            break;
        }
    }
    if changed {
        for (v, &p) in a_inv.iter().enumerate() {
            a.pos[p] = v;
        }
    }
    changed
}

/// `Δ^infimum · A_1 ⋯ A_r` with every `A_j` a proper permutation braid and
/// each adjacent pair left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    infimum: i64,
    factors: Vec<PermutationBraid>,
}

impl NormalForm {
    pub fn of(word: &BraidWord) -> NormalForm {
        let n = word.strands();
        if n < 2 {
            return NormalForm {
                strands: n,
                infimum: 0,
                factors: Vec::new(),
            };
        }
        let letters = word.letters();
        // σ_i⁻¹ = Δ⁻¹ (Δσ_i⁻¹); each Δ⁻¹ is pushed left through the simples
        // before it, flipping them. Only the parity of the flips matters.
        let mut simples = Vec::with_capacity(letters.len());
        let mut negatives_after = letters.iter().filter(|&&l| l < 0).count();
        let infimum = -(negatives_after as i64);
        for &l in letters {
            let i = l.unsigned_abs() as usize - 1;
            if l < 0 {
                negatives_after -= 1;
            }
            let mut s = if l > 0 {
                PermutationBraid::generator(n, i)
            } else {
                PermutationBraid::delta_over_generator(n, i)
            };
            if negatives_after % 2 == 1 {
                s = s.flip();
            }
            simples.push(s);
        }
        let mut nf = NormalForm {
            strands: n,
            infimum,
            factors: Vec::new(),
        };
        for s in simples {
            nf.push_simple(s);
        }
        nf.canonicalize();
        nf
    }

    fn push_simple(&mut self, s: PermutationBraid) {
        if s.is_identity() {
            return;
        }
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
    }

    fn canonicalize(&mut self) {
        let leading = self.factors.iter().take_while(|f| f.is_delta()).count();
        self.factors.drain(..leading);
        self.infimum += leading as i64;
        while self.factors.last().is_some_and(PermutationBraid::is_identity) {
            self.factors.pop();
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    /// Number of canonical factors (canonical length).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[PermutationBraid] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// A word representing the same braid. Normalizing it gives `self` back.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let mut letters = Vec::new();
        if n >= 2 {
            let delta = PermutationBraid::delta(n).word();
            let block: Vec<i32> = if self.infimum < 0 {
                delta.iter().rev().map(|l| -l).collect()
            } else {
                delta
            };
            for _ in 0..self.infimum.unsigned_abs() {
                letters.extend_from_slice(&block);
            }
            for f in &self.factors {
                letters.extend(f.word());
            }
        }
        BraidWord::new(n, letters).expect("normal form letters are in range")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.infimum)?;
        for factor in &self.factors {
            write!(f, " [")?;
            for (i, l) in factor.word().iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{l}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(n: usize, l: &[i32]) -> NormalForm {
        BraidWord::new(n, l.to_vec()).unwrap().normal_form()
    }

    #[test]
    fn delta_complement_composes_to_delta() {
        for n in 2..6 {
            for i in 0..n - 1 {
                let mut w = PermutationBraid::delta_over_generator(n, i).word();
                w.push(i as i32 + 1);
                assert_eq!(nf(n, &w), nf(n, &PermutationBraid::delta(n).word()));
            }
        }
    }

    #[test]
    fn delta_and_full_twist() {
        let d = nf(3, &[1, 2, 1]);
        assert_eq!(d.infimum(), 1);
        assert_eq!(d.canonical_length(), 0);
        let t = nf(4, BraidWord::full_twist(4).unwrap().letters());
        assert_eq!(t.infimum(), 2);
        assert_eq!(t.canonical_length(), 0);
    }

    #[test]
    fn inverse_generator() {
        let n = nf(3, &[-1]);
        assert_eq!(n.infimum(), -1);
        assert_eq!(n.canonical_length(), 1);
        assert_eq!(n.factors()[0].word(), vec![1, 2]);
    }

    #[test]
    fn left_weighted_pairs() {
        let w = nf(4, &[1, 3, 2, 2, 1, 3, 3, -2, 1]);
        for pair in w.factors().windows(2) {
            let a_inv = pair[0].inverse_positions();
            for i in 0..3 {
                if pair[1].starts_with(i) {
                    assert!(a_inv[i] > a_inv[i + 1]);
                }
            }
        }
        for f in w.factors() {
            assert!(!f.is_identity() && !f.is_delta());
        }
    }

    #[test]
    fn to_word_is_idempotent() {
        for l in [&[1, -2, 1, 2, -1][..], &[-1, -1, -2], &[2, 1, 2, 1], &[]] {
            let a = nf(3, l);
            assert_eq!(a.to_word().normal_form(), a);
        }
    }

    #[test]
    fn two_strands() {
        assert_eq!(nf(2, &[1, 1, -1]).infimum(), 1);
        assert!(nf(2, &[1, -1]).is_identity());
        assert_eq!(nf(2, &[-1, -1]).infimum(), -2);
    }
}
