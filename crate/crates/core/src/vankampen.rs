//! Zariski–van Kampen presentations of curve-complement fundamental groups.
//!
//! For a factor `Q σ_i^r Q⁻¹` put `A = φ_Q(x_i)`, `B = φ_Q(x_{i+1})` and emit
//! `A = B` (r = 1), `AB = BA` (r = 2) or `ABA = BAB` (r = 3). The projective
//! relator is the boundary product `x_1 x_2 … x_m`, which every braid fixes
//! under the crate's Artin action.

use std::fmt;

use thiserror::Error;

use crate::braid::{parse_letters, FreeWord};
use crate::factorization::{Factorization, Validity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("factorization is not valid ({0})")]
    InvalidFactorization(&'static str),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A finitely presented group on generators `x_1..x_g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: usize,
    relators: Vec<FreeWord>,
    labels: Option<Vec<String>>,
}

impl GroupPresentation {
    /// Relators must all have rank `generators`; they are already reduced
    /// since [`FreeWord`] always is.
    pub fn new(generators: usize, relators: Vec<FreeWord>) -> Self {
        for r in &relators {
            assert_eq!(r.rank(), generators, "relator rank differs from generator count");
        }
        GroupPresentation {
            generators,
            relators,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.generators);
        self.labels = Some(labels);
        self
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of the 1-based generator `i` (defaults to `x<i>`).
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i - 1].clone(),
            None => format!("x{i}"),
        }
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(FreeWord::len).sum()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("gens {}\n", self.generators);
        for r in &self.relators {
            if r.is_empty() {
                out.push_str("rel\n");
            } else {
                out.push_str(&format!("rel {r}\n"));
            }
        }
        out
    }

    /// Parses `gens <g>` followed by `rel <letters…>` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let perr = |line: usize, message: String| PresentationError::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let generators = match lines.next() {
            Some((n, l)) => {
                let mut toks = l.split_whitespace();
                match (toks.next(), toks.next().map(str::parse::<usize>), toks.next()) {
                    (Some("gens"), Some(Ok(g)), None) => g,
                    _ => return Err(perr(n, format!("expected \"gens <g>\", got {l:?}"))),
                }
            }
            None => return Err(perr(1, "empty presentation".into())),
        };
        let mut relators = Vec::new();
        for (n, l) in lines {
            let rest = match l.strip_prefix("rel") {
                Some(rest) if rest.is_empty() || rest.starts_with(char::is_whitespace) => rest,
                _ => return Err(perr(n, format!("expected \"rel <letters>\", got {l:?}"))),
            };
            let letters = parse_letters(rest).map_err(|e| perr(n, e.to_string()))?;
            let word = FreeWord::new(generators, letters).map_err(|e| perr(n, e.to_string()))?;
            relators.push(word);
        }
        Ok(GroupPresentation {
            generators,
            relators,
            labels: None,
        })
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Builds the van Kampen presentation of a valid factorization. With
/// `projective`, the boundary relator `x_1 … x_m` is appended.
pub fn presentation(f: &Factorization, projective: bool) -> Result<GroupPresentation, PresentationError> {
    match f.validate() {
        Validity::Valid => {}
        other => return Err(PresentationError::InvalidFactorization(other.reason())),
    }
    let m = f.strands();
    let mut relators = Vec::with_capacity(f.len() + 1);
    for factor in f.factors() {
        let a = factor.conjugator.artin_generator_image(factor.core);
        let b = factor.conjugator.artin_generator_image(factor.core + 1);
        let rel = match factor.power {
            1 => a.mul(&b.inverse()),
            2 => a.commutator(&b),
            3 => {
                let aba = a.mul(&b).mul(&a);
                let bab = b.mul(&a).mul(&b);
                aba.mul(&bab.inverse())
            }
            _ => unreachable!("validate rejects other powers"),
        };
        relators.push(rel);
    }
    if projective {
        let boundary: Vec<i32> = (1..=m as i32).collect();
        relators.push(FreeWord::new(m, boundary).expect("generators in range"));
    }
    Ok(GroupPresentation::new(m, relators))
}
