//! Braid monodromy factorizations.
//!
//! A factorization of a degree-`m` curve is an ordered list of factors
//! `Q σ_c^r Q⁻¹` whose product is the full twist of `B_m`. Powers 1, 2, 3
//! stand for simple branch points, nodes and cusps.

use std::fmt;
use std::ops::Range;

use thiserror::Error;

use crate::braid::{parse_letters, BraidError, BraidWord, NormalForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorizationError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("factor {index}: power {power} outside 1..=3")]
    IllegalPower { index: usize, power: u32 },
    #[error("factor {index}: core generator {core} out of range for {strands} strands")]
    CoreOutOfRange { index: usize, core: usize, strands: usize },
    #[error("factor {index}: conjugator has {got} strands, expected {expected}")]
    ConjugatorStrands { index: usize, got: usize, expected: usize },
    #[error("Hurwitz move at {index} needs index + 1 < {len}")]
    MoveOutOfRange { index: usize, len: usize },
    #[error("empty factor range {start}..{end} (factorization has {len} factors)")]
    EmptyRange { start: usize, end: usize, len: usize },
    #[error("factor range {start}..{end} exceeds factorization length {len}")]
    RangeOutOfBounds { start: usize, end: usize, len: usize },
    #[error("twisting braid does not commute with the block product: b·P has normal form {left}, P·b has normal form {right}")]
    NotCommuting { left: String, right: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// `conjugator · σ_core^power · conjugator⁻¹`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factor {
    pub power: u32,
    pub core: usize,
    pub conjugator: BraidWord,
}

impl Factor {
    pub fn new(power: u32, core: usize, conjugator: BraidWord) -> Self {
        Factor {
            power,
            core,
            conjugator,
        }
    }

    /// Factor with trivial conjugator.
    pub fn plain(strands: usize, power: u32, core: usize) -> Self {
        Factor {
            power,
            core,
            conjugator: BraidWord::identity(strands),
        }
    }

    pub fn strands(&self) -> usize {
        self.conjugator.strands()
    }

    /// The braid this factor denotes, expanded into a word.
    pub fn braid(&self) -> Result<BraidWord, BraidError> {
        let n = self.strands();
        let core = BraidWord::generator_power(n, self.core, self.power as i64)?;
        self.conjugator.conjugate(&core)
    }

    /// Same factor conjugated by `b`: the conjugator becomes `b · Q`, stored
    /// as the shorter of its free reduction and its normal-form word.
    pub fn conjugated_by(&self, b: &BraidWord) -> Result<Factor, BraidError> {
        let q = b.compose(&self.conjugator)?.freely_reduced();
        let nf = q.normal_form().to_word();
        let conjugator = if nf.len() < q.len() { nf } else { q };
        Ok(Factor {
            power: self.power,
            core: self.core,
            conjugator,
        })
    }

    /// Equality of the braids the two factors denote.
    pub fn equal(&self, other: &Factor) -> Result<bool, BraidError> {
        Ok(self.power == other.power && self.braid()?.equal(&other.braid()?)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SingularityCensus {
    pub branch_points: usize,
    pub nodes: usize,
    pub cusps: usize,
}

impl SingularityCensus {
    pub fn total(&self) -> usize {
        self.branch_points + self.nodes + self.cusps
    }
}

/// Outcome of [`Factorization::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// A factor has a power other than 1, 2, 3 (and higher powers were not allowed).
    IllegalPower {
        index: usize,
        power: u32,
    },
    /// The product is not the full twist.
    WrongProduct {
        exponent_sum: i64,
        expected: i64,
    },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }

    pub fn reason(&self) -> &'static str {
        match self {
            Validity::Valid => "ok",
            Validity::IllegalPower { .. } => "illegal-power",
            Validity::WrongProduct { .. } => "wrong-product",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn from_sign(sign: i32) -> Option<Direction> {
        match sign {
            1 => Some(Direction::Forward),
            -1 => Some(Direction::Backward),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    strands: usize,
    factors: Vec<Factor>,
}

impl Factorization {
    /// Checks that every factor lives on `strands` strands and has an
    /// in-range core. Powers are only checked by [`validate`](Self::validate).
    pub fn new(strands: usize, factors: Vec<Factor>) -> Result<Self, FactorizationError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands { min: 2, got: strands }.into());
        }
        for (index, f) in factors.iter().enumerate() {
            if f.strands() != strands {
                return Err(FactorizationError::ConjugatorStrands {
                    index,
                    got: f.strands(),
                    expected: strands,
                });
            }
            if f.core < 1 || f.core >= strands {
                return Err(FactorizationError::CoreOutOfRange {
                    index,
                    core: f.core,
                    strands,
                });
            }
            if f.power == 0 {
                return Err(FactorizationError::IllegalPower { index, power: 0 });
            }
        }
        Ok(Factorization { strands, factors })
    }

    pub fn empty(strands: usize) -> Result<Self, FactorizationError> {
        Factorization::new(strands, Vec::new())
    }

    /// The `m(m-1)` half-twists read off the letters of `(σ_1 … σ_{m-1})^m`.
    pub fn smooth_curve(m: usize) -> Result<Self, FactorizationError> {
        let twist = BraidWord::full_twist(m)?;
        let factors = twist
            .letters()
            .iter()
            .map(|&l| Factor::plain(m, 1, l as usize))
            .collect();
        Factorization::new(m, factors)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Concatenation of the expanded factors.
    pub fn product(&self) -> BraidWord {
        let mut letters = Vec::new();
        for f in &self.factors {
            letters.extend_from_slice(f.braid().expect("factor checked at construction").letters());
        }
        BraidWord::new(self.strands, letters).expect("factor letters in range")
    }

    fn block_product(&self, range: Range<usize>) -> BraidWord {
        let mut letters = Vec::new();
        for f in &self.factors[range] {
            letters.extend_from_slice(f.braid().expect("factor checked at construction").letters());
        }
        BraidWord::new(self.strands, letters).expect("factor letters in range")
    }

    pub fn validate(&self) -> Validity {
        self.validate_with(false)
    }

    /// With `allow_higher_powers`, powers above 3 (tangencies) are accepted.
    pub fn validate_with(&self, allow_higher_powers: bool) -> Validity {
        if !allow_higher_powers {
            if let Some((index, f)) = self.factors.iter().enumerate().find(|(_, f)| f.power > 3) {
                return Validity::IllegalPower { index, power: f.power };
            }
        }
        let m = self.strands as i64;
        let expected = m * (m - 1);
        let exponent_sum: i64 = self.factors.iter().map(|f| f.power as i64).sum();
        if exponent_sum != expected {
            return Validity::WrongProduct { exponent_sum, expected };
        }
        let twist = BraidWord::full_twist(self.strands).expect("strands >= 2");
        if self.product().normal_form() == twist.normal_form() {
            Validity::Valid
        } else {
            Validity::WrongProduct { exponent_sum, expected }
        }
    }

    pub fn census(&self) -> Result<SingularityCensus, FactorizationError> {
        let mut c = SingularityCensus::default();
        for (index, f) in self.factors.iter().enumerate() {
            match f.power {
                1 => c.branch_points += 1,
                2 => c.nodes += 1,
                3 => c.cusps += 1,
                power => return Err(FactorizationError::IllegalPower { index, power }),
            }
        }
        Ok(c)
    }

    /// Hurwitz move on the pair at `(index, index + 1)`, 0-based.
    ///
    /// Forward: `(f, g) ↦ (f g f⁻¹, f)`. Backward: `(f, g) ↦ (g, g⁻¹ f g)`.
    pub fn hurwitz_move(&self, index: usize, direction: Direction) -> Result<Self, FactorizationError> {
        let len = self.factors.len();
        if index + 1 >= len {
            return Err(FactorizationError::MoveOutOfRange { index, len });
        }
        let (f, g) = (&self.factors[index], &self.factors[index + 1]);
        let (first, second) = match direction {
            Direction::Forward => (g.conjugated_by(&f.braid()?)?, f.clone()),
            Direction::Backward => (g.clone(), f.conjugated_by(&g.braid()?.invert())?),
        };
        let mut factors = self.factors.clone();
        factors[index] = first;
        factors[index + 1] = second;
        Ok(Factorization {
            strands: self.strands,
            factors,
        })
    }

    /// Conjugates every factor in `range` by `b^k`. The block product must
    /// commute with `b`; this is checked with normal forms.
    pub fn partial_conjugate(&self, range: Range<usize>, b: &BraidWord, k: i64) -> Result<Self, FactorizationError> {
        let len = self.factors.len();
        if range.start >= range.end {
            return Err(FactorizationError::EmptyRange {
                start: range.start,
                end: range.end,
                len,
            });
        }
        if range.end > len {
            return Err(FactorizationError::RangeOutOfBounds {
                start: range.start,
                end: range.end,
                len,
            });
        }
        if b.strands() != self.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: b.strands(),
            }
            .into());
        }
        if k == 0 {
            return Ok(self.clone());
        }
        let block = self.block_product(range.clone());
        let left = b.compose(&block)?.normal_form();
        let right = block.compose(b)?.normal_form();
        if left != right {
            return Err(FactorizationError::NotCommuting {
                left: left.to_string(),
                right: right.to_string(),
            });
        }
        let twist = b.pow(k);
        let mut factors = self.factors.clone();
        for f in &mut factors[range] {
            *f = f.conjugated_by(&twist)?;
        }
        Ok(Factorization {
            strands: self.strands,
            factors,
        })
    }

    /// Factorwise equality of the denoted braids.
    pub fn equal_factorwise(&self, other: &Factorization) -> Result<bool, BraidError> {
        if self.strands != other.strands || self.len() != other.len() {
            return Ok(false);
        }
        for (a, b) in self.factors.iter().zip(&other.factors) {
            if !a.equal(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn product_normal_form(&self) -> NormalForm {
        self.product().normal_form()
    }

    /// Permutations of the individual factors, the branching data of the
    /// curve's sheets.
    pub fn permutation_data(&self) -> Vec<crate::braid::Permutation> {
        self.factors
            .iter()
            .map(|f| f.braid().expect("factor checked at construction").perm())
            .collect()
    }

    pub fn to_bmf(&self) -> String {
        let mut out = format!("bmf 1\nstrands {}\n", self.strands);
        for f in &self.factors {
            out.push_str(&format!("factor {} {} ;", f.power, f.core));
            for l in f.conjugator.letters() {
                out.push_str(&format!(" {l}"));
            }
            out.push('\n');
        }
        out
    }

    /// Parses the BMF text format; powers outside 1..=3 are rejected.
    pub fn parse_bmf(text: &str) -> Result<Self, FactorizationError> {
        Self::parse_bmf_with(text, false)
    }

    pub fn parse_bmf_with(text: &str, allow_higher_powers: bool) -> Result<Self, FactorizationError> {
        let perr = |line: usize, message: String| FactorizationError::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        match lines.next() {
            Some((_, "bmf 1")) => {}
            Some((n, other)) => return Err(perr(n, format!("malformed header {other:?}, expected \"bmf 1\""))),
            None => return Err(perr(1, "malformed header: empty input".into())),
        }
        let strands = match lines.next() {
            Some((n, l)) => {
                let mut toks = l.split_whitespace();
                match (toks.next(), toks.next().map(str::parse::<usize>), toks.next()) {
                    (Some("strands"), Some(Ok(m)), None) if m >= 2 => m,
                    _ => {
                        return Err(perr(
                            n,
                            format!("malformed header {l:?}, expected \"strands <m>\" with m >= 2"),
                        ))
                    }
                }
            }
            None => return Err(perr(2, "malformed header: missing strands line".into())),
        };

        let mut factors = Vec::new();
        for (n, l) in lines {
            let (head, conj) = l
                .split_once(';')
                .ok_or_else(|| perr(n, "factor line needs ';' before the conjugator".into()))?;
            let toks: Vec<&str> = head.split_whitespace().collect();
            if toks.len() != 3 || toks[0] != "factor" {
                return Err(perr(n, format!("expected \"factor <power> <core> ;\", got {l:?}")));
            }
            let power: u32 = toks[1]
                .parse()
                .map_err(|_| perr(n, format!("bad power {:?}", toks[1])))?;
            if power == 0 || (power > 3 && !allow_higher_powers) {
                return Err(perr(n, format!("illegal power {power}")));
            }
            let core: usize = toks[2]
                .parse()
                .map_err(|_| perr(n, format!("bad core {:?}", toks[2])))?;
            if core < 1 || core >= strands {
                return Err(perr(n, format!("core index {core} out of range for {strands} strands")));
            }
            let letters = parse_letters(conj).map_err(|e| perr(n, e.to_string()))?;
            let conjugator =
                BraidWord::new(strands, letters).map_err(|e| perr(n, format!("conjugator index out of range: {e}")))?;
            factors.push(Factor {
                power,
                core,
                conjugator,
            });
        }
        Ok(Factorization { strands, factors })
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bmf())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn product_examples() {
        let f = Factorization::smooth_curve(2).unwrap();
        assert!(f.product().equal(&bw(2, &[1, 1])).unwrap());
        assert!(Factorization::empty(2).unwrap().product().is_empty());
        let single = Factorization::new(2, vec![Factor::plain(2, 2, 1)]).unwrap();
        assert_eq!(single.product().letters(), &[1, 1]);
    }

    #[test]
    fn validate_examples() {
        assert!(Factorization::smooth_curve(3).unwrap().validate().is_valid());
        let lone = Factorization::new(2, vec![Factor::plain(2, 1, 1)]).unwrap();
        assert_eq!(
            lone.validate(),
            Validity::WrongProduct {
                exponent_sum: 1,
                expected: 2
            }
        );
        let mut bumped = Factorization::smooth_curve(2).unwrap();
        bumped.factors[0].power = 2;
        assert_eq!(bumped.validate().reason(), "wrong-product");
        let m4 = Factorization::smooth_curve(4).unwrap();
        assert_eq!(m4.len(), 12);
        assert!(m4.validate().is_valid());
    }

    #[test]
    fn same_exponent_sum_but_wrong_braid() {
        // σ1 σ1 σ2 σ2 σ2 σ2 has exponent sum 6 but is not Δ² in B_3
        let factors = [1, 1, 2, 2, 2, 2].iter().map(|&c| Factor::plain(3, 1, c)).collect();
        let f = Factorization::new(3, factors).unwrap();
        assert_eq!(f.validate().reason(), "wrong-product");
    }

    #[test]
    fn illegal_powers() {
        let f = Factorization::new(2, vec![Factor::plain(2, 4, 1)]).unwrap();
        assert_eq!(f.validate(), Validity::IllegalPower { index: 0, power: 4 });
        assert_eq!(f.validate_with(true).reason(), "wrong-product");
        assert!(Factorization::new(2, vec![Factor::plain(2, 0, 1)]).is_err());
    }

    #[test]
    fn census_examples() {
        let c = Factorization::smooth_curve(3).unwrap().census().unwrap();
        assert_eq!(
            c,
            SingularityCensus {
                branch_points: 6,
                nodes: 0,
                cusps: 0
            }
        );
        let mixed = Factorization::new(
            3,
            vec![Factor::plain(3, 1, 1), Factor::plain(3, 2, 2), Factor::plain(3, 3, 1)],
        )
        .unwrap();
        assert_eq!(
            mixed.census().unwrap(),
            SingularityCensus {
                branch_points: 1,
                nodes: 1,
                cusps: 1
            }
        );
        assert_eq!(Factorization::empty(3).unwrap().census().unwrap().total(), 0);
        let bad = Factorization::new(2, vec![Factor::plain(2, 5, 1)]).unwrap();
        assert!(bad.census().is_err());
    }

    #[test]
    fn hurwitz_examples() {
        let f = Factorization::new(3, vec![Factor::plain(3, 1, 1), Factor::plain(3, 1, 2)]).unwrap();
        let g = f.hurwitz_move(0, Direction::Forward).unwrap();
        assert!(g.factors[0].braid().unwrap().equal(&bw(3, &[1, 2, -1])).unwrap());
        assert!(g.factors[1].braid().unwrap().equal(&bw(3, &[1])).unwrap());
        assert!(g.product().equal(&bw(3, &[1, 2])).unwrap());
        let back = g.hurwitz_move(0, Direction::Backward).unwrap();
        assert!(back.equal_factorwise(&f).unwrap());
        assert_eq!(g.census().unwrap(), f.census().unwrap());
        assert!(f.hurwitz_move(1, Direction::Forward).is_err());
    }

    #[test]
    fn partial_conjugate_examples() {
        let f = Factorization::smooth_curve(3).unwrap();
        let b = bw(3, &[1, -2, 2, 2]);
        let t = f.partial_conjugate(0..f.len(), &b, 1).unwrap();
        assert!(t.validate().is_valid());
        assert_eq!(t.census().unwrap(), f.census().unwrap());
        assert_eq!(f.partial_conjugate(0..2, &b, 0).unwrap(), f);
        let undone = t.partial_conjugate(0..t.len(), &b, -1).unwrap();
        assert!(undone.equal_factorwise(&f).unwrap());
    }

    #[test]
    fn partial_conjugate_errors() {
        let f = Factorization::smooth_curve(3).unwrap();
        let b = bw(3, &[2]);
        assert!(matches!(
            f.partial_conjugate(0..1, &b, 1),
            Err(FactorizationError::NotCommuting { .. })
        ));
        assert!(matches!(
            f.partial_conjugate(2..2, &b, 1),
            Err(FactorizationError::EmptyRange { .. })
        ));
        assert!(matches!(
            f.partial_conjugate(0..9, &b, 1),
            Err(FactorizationError::RangeOutOfBounds { .. })
        ));
        // σ1 commutes with the block σ1 at index 0
        assert!(f.partial_conjugate(0..1, &bw(3, &[1]), 2).is_ok());
    }

    #[test]
    fn bmf_format() {
        let f = Factorization::smooth_curve(2).unwrap();
        assert_eq!(f.to_bmf(), "bmf 1\nstrands 2\nfactor 1 1 ;\nfactor 1 1 ;\n");
        let parsed = Factorization::parse_bmf(&f.to_bmf()).unwrap();
        assert_eq!(parsed, f);
        let with_conj = "# a comment\nbmf 1\nstrands 3\n\nfactor 2 1 ; 2 -1  # trailing\n";
        let g = Factorization::parse_bmf(with_conj).unwrap();
        assert_eq!(g.factors()[0].conjugator.letters(), &[2, -1]);
        assert_eq!(g.to_bmf(), "bmf 1\nstrands 3\nfactor 2 1 ; 2 -1\n");
    }

    #[test]
    fn bmf_errors_carry_line_numbers() {
        let err = Factorization::parse_bmf("bmf 1\nstrands 2\nfactor 4 1 ;\n").unwrap_err();
        assert_eq!(
            err,
            FactorizationError::Parse {
                line: 3,
                message: "illegal power 4".into()
            }
        );
        assert!(Factorization::parse_bmf_with("bmf 1\nstrands 2\nfactor 4 1 ;\n", true).is_ok());
        let err = Factorization::parse_bmf("bmf 2\n").unwrap_err();
        assert!(matches!(err, FactorizationError::Parse { line: 1, .. }));
        let err = Factorization::parse_bmf("bmf 1\nstrands 3\nfactor 1 3 ;\n").unwrap_err();
        assert!(matches!(err, FactorizationError::Parse { line: 3, .. }));
        let err = Factorization::parse_bmf("bmf 1\nstrands 3\nfactor 1 1 ;\nfactor 1 1 ; 5\n").unwrap_err();
        assert!(matches!(err, FactorizationError::Parse { line: 4, .. }));
    }
}
