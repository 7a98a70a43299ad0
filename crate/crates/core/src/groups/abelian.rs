use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::matrix::{smith_normal_form, IntegerMatrix};
use crate::vankampen::GroupPresentation;

/// `Z^free_rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with `d_1 | d_2 | … | d_k`, all `d_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroupStructure {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupStructure {
    pub fn trivial() -> Self {
        AbelianGroupStructure {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    /// `Z/n`; `n = 0` gives `Z` and `n = 1` the trivial group.
    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => AbelianGroupStructure {
                free_rank: 1,
                torsion: Vec::new(),
            },
            1 => Self::trivial(),
            n => AbelianGroupStructure {
                free_rank: 0,
                torsion: vec![BigInt::from(n)],
            },
        }
    }

    /// Cokernel of the integer matrix whose rows are relations among
    /// `columns` generators.
    pub fn from_relations(m: &IntegerMatrix) -> Self {
        let snf = smith_normal_form(m);
        let factors = snf.invariant_factors();
        let torsion = factors.iter().filter(|d| !d.is_one()).map(|d| d.abs()).collect();
        AbelianGroupStructure {
            free_rank: m.cols() - factors.len(),
            torsion,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d))
    }
}

impl fmt::Display for AbelianGroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// Abelianization via the relator exponent-sum matrix.
pub fn abelianization(p: &GroupPresentation) -> AbelianGroupStructure {
    let rows: Vec<Vec<i64>> = p.relators().iter().map(|r| r.exponent_sums()).collect();
    let m = IntegerMatrix::from_rows_with_cols(&rows, p.generator_count());
    AbelianGroupStructure::from_relations(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::FreeWord;

    fn pres(g: usize, rels: &[&[i32]]) -> GroupPresentation {
        GroupPresentation::new(g, rels.iter().map(|r| FreeWord::new(g, r.to_vec()).unwrap()).collect())
    }

    #[test]
    fn cyclic_of_order_three() {
        let a = abelianization(&pres(1, &[&[1, 1, 1]]));
        assert_eq!(a, AbelianGroupStructure::cyclic(3));
        assert_eq!(a.to_string(), "Z/3");
    }

    #[test]
    fn conic_is_z2() {
        let a = abelianization(&pres(2, &[&[1, -2], &[1, -2], &[1, 2]]));
        assert_eq!(a.to_string(), "Z/2");
        assert_eq!(a.order(), Some(BigInt::from(2)));
    }

    #[test]
    fn free_and_mixed() {
        assert_eq!(abelianization(&pres(2, &[])).to_string(), "Z^2");
        assert_eq!(
            abelianization(&pres(3, &[&[1, 1], &[2, 2, 2, 2], &[3, -3]])).to_string(),
            "Z/2 x Z/4 x Z"
        );
        assert_eq!(abelianization(&pres(2, &[&[1, 2, -1, -2]])).order(), None);
        assert!(abelianization(&pres(1, &[&[1]])).is_trivial());
        assert_eq!(AbelianGroupStructure::trivial().to_string(), "0");
    }
}
