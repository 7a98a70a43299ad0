use std::cmp::Reverse;

use crate::braid::FreeWord;
use crate::vankampen::GroupPresentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TietzeLimits {
    /// Only relators at most this long are used to eliminate a generator.
    pub max_eliminator_length: usize,
    /// An elimination is skipped if it would create a relator longer than this.
    pub max_relator_length: usize,
}

impl Default for TietzeLimits {
    fn default() -> Self {
        TietzeLimits {
            max_eliminator_length: 24,
            max_relator_length: 400,
        }
    }
}

/// Smallest rotation of `w` or of its inverse, for spotting duplicate relators.
fn cyclic_key(w: &FreeWord) -> Vec<i32> {
    let l = w.letters();
    let inv = w.inverse();
    let li = inv.letters();
    let mut best = l.to_vec();
    for s in [l, li] {
        for k in 0..s.len() {
            let rot: Vec<i32> = s[k..].iter().chain(&s[..k]).copied().collect();
            if rot < best {
                best = rot;
            }
        }
    }
    best
}

fn tidy(relators: Vec<FreeWord>) -> Vec<FreeWord> {
    let mut seen = std::collections::HashSet::new();
    relators
        .into_iter()
        .map(|r| r.cyclically_reduced())
        .filter(|r| !r.is_identity())
        .filter(|r| seen.insert(cyclic_key(r)))
        .collect()
}

/// Expresses generator `x` (occurring once in `r`) through the others and
/// returns the substitution images in rank `g - 1`.
fn elimination_images(r: &FreeWord, x: usize) -> Vec<FreeWord> {
    let g = r.rank();
    let l = r.letters();
    let pos = l
        .iter()
        .position(|c| c.unsigned_abs() as usize == x)
        .expect("x occurs in r");
    let eps = l[pos].signum();
    // rotate so that x^eps comes first: x^eps · rest = 1
    let rest: Vec<i32> = l[pos + 1..].iter().chain(&l[..pos]).copied().collect();
    let renumber = |c: i32| {
        let a = c.unsigned_abs() as usize;
        let a = if a > x { a - 1 } else { a } as i32;
        a * c.signum()
    };
    let rest = FreeWord::new(g - 1, rest.into_iter().map(renumber).collect()).expect("renumbered letters in range");
    let value = if eps > 0 { rest.inverse() } else { rest };
    (1..=g)
        .map(|j| match j.cmp(&x) {
            std::cmp::Ordering::Less => FreeWord::generator(g - 1, j),
            std::cmp::Ordering::Equal => value.clone(),
            std::cmp::Ordering::Greater => FreeWord::generator(g - 1, j - 1),
        })
        .collect()
}

/// Applies Tietze moves until none fits the limits: drops trivial and
/// duplicate relators, cyclically reduces, and eliminates generators that
/// occur exactly once in a short relator. Deterministic.
pub fn tietze_simplify(p: &GroupPresentation, limits: TietzeLimits) -> GroupPresentation {
    let mut g = p.generator_count();
    let mut labels: Vec<String> = (1..=g).map(|i| p.label(i)).collect();
    let mut relators = tidy(p.relators().to_vec());

    'rounds: loop {
        let mut candidates: Vec<(usize, Reverse<usize>, usize)> = Vec::new();
        for (ri, r) in relators.iter().enumerate() {
            if r.len() > limits.max_eliminator_length {
                continue;
            }
            for x in 1..=g {
                if r.occurrences(x) == 1 {
                    candidates.push((r.len(), Reverse(x), ri));
                }
            }
        }
        candidates.sort();
        for (_, Reverse(x), ri) in candidates {
            let images = elimination_images(&relators[ri], x);
            let substituted: Vec<FreeWord> = relators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != ri)
                .map(|(_, r)| r.substitute(&images))
                .collect();
            if substituted.iter().any(|r| r.len() > limits.max_relator_length) {
                continue;
            }
            relators = tidy(substituted);
            labels.remove(x - 1);
            g -= 1;
            continue 'rounds;
        }
        break;
    }

    let out = GroupPresentation::new(g, relators);
    if p.labels().is_some() {
        out.with_labels(labels)
    } else {
        out
    }
}
