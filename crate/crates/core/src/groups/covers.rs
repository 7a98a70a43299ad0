//! Enumeration of degree-`n` branched covers as homomorphisms to `S_n`.
//!
//! Homomorphisms are counted up to simultaneous conjugation. A tuple of
//! images is kept only if it is the lexicographic minimum of its conjugacy
//! orbit; this is enforced generator by generator while backtracking, using
//! the centralizer of the images chosen so far.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::braid::{FreeWord, Permutation};
use crate::vankampen::GroupPresentation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("cover degree must be at least 1")]
    ZeroDegree,
    #[error("meridian generator {index} out of range for {generators} generators")]
    MeridianOutOfRange { index: usize, generators: usize },
    #[error("search exceeded the node limit of {limit}")]
    NodeLimit { limit: u64 },
    #[error("search exceeded the time limit of {limit:?}")]
    TimeLimit { limit: Duration },
    #[error("degree {n} is too large for an unconstrained generator (n! candidates exceed the node limit)")]
    TooLarge { n: usize },
}

/// Which generators are meridians, i.e. must map to transpositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeridianSet {
    All,
    /// 1-based generator indices.
    Subset(Vec<usize>),
}

impl MeridianSet {
    fn mask(&self, generators: usize) -> Result<Vec<bool>, CoverError> {
        match self {
            MeridianSet::All => Ok(vec![true; generators]),
            MeridianSet::Subset(ix) => {
                let mut mask = vec![false; generators];
                for &i in ix {
                    if i == 0 || i > generators {
                        return Err(CoverError::MeridianOutOfRange { index: i, generators });
                    }
                    mask[i - 1] = true;
                }
                Ok(mask)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverLimits {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
    pub workers: usize,
    /// Strict: meridians map to transpositions. Otherwise a meridian may also
    /// map to the identity (unbranched along that component).
    pub strict_meridians: bool,
}

impl Default for CoverLimits {
    fn default() -> Self {
        CoverLimits {
            max_nodes: 50_000_000,
            time_limit: None,
            workers: 1,
            strict_meridians: true,
        }
    }
}

/// One homomorphism, as the image of each generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoverSolution {
    pub images: Vec<Permutation>,
}

impl CoverSolution {
    /// One line per generator in cycle notation, e.g. `x1 (1 2)`.
    pub fn to_text(&self, p: &GroupPresentation) -> String {
        self.images
            .iter()
            .enumerate()
            .map(|(i, g)| format!("{} {}\n", p.label(i + 1), g))
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.images.first().map_or(0, Permutation::degree)
    }
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    // Heap-free lexicographic generation
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation::from_images(a.clone()).expect("valid permutation"));
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| a[i] < a[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).expect("successor exists");
        a.swap(i, j);
        a[i + 1..].reverse();
    }
    out
}

fn transpositions(n: usize) -> Vec<Permutation> {
    let mut t: Vec<Permutation> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| Permutation::transposition(n, a, b)))
        .collect();
    t.sort();
    t
}

fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

fn evaluate(word: &FreeWord, images: &[Permutation], n: usize) -> Permutation {
    let mut acc = Permutation::identity(n);
    for &l in word.letters() {
        let g = &images[l.unsigned_abs() as usize - 1];
        acc = if l > 0 { &acc * g } else { &acc * &g.inverse() };
    }
    acc
}

fn is_transitive(images: &[Permutation], n: usize) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for g in images {
        for i in 0..n {
            let (a, b) = (find(&mut parent, i), find(&mut parent, g.apply(i)));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
    }
    components <= 1
}

struct Search<'a> {
    n: usize,
    candidates: Vec<Vec<Permutation>>,
    /// relators grouped by the last generator they mention
    checks: Vec<Vec<&'a FreeWord>>,
    limits: CoverLimits,
    nodes: &'a AtomicU64,
    abort: &'a AtomicBool,
    start: Instant,
}

impl Search<'_> {
    fn tick(&self) -> Result<(), CoverError> {
        if self.abort.load(Ordering::Relaxed) {
            return Err(CoverError::NodeLimit {
                limit: self.limits.max_nodes,
            });
        }
        let seen = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if seen > self.limits.max_nodes {
            self.abort.store(true, Ordering::Relaxed);
            return Err(CoverError::NodeLimit {
                limit: self.limits.max_nodes,
            });
        }
        if let Some(limit) = self.limits.time_limit {
            if seen.is_multiple_of(1024) && self.start.elapsed() > limit {
                self.abort.store(true, Ordering::Relaxed);
                return Err(CoverError::TimeLimit { limit });
            }
        }
        Ok(())
    }

    /// Tries `g` as the image of generator `depth`. Returns the centralizer
    /// for the next level if `g` keeps the tuple orbit-minimal and all
    /// checkable relators hold.
    fn admit(
        &self,
        depth: usize,
        g: &Permutation,
        images: &mut Vec<Permutation>,
        stab: &[Permutation],
    ) -> Option<Vec<Permutation>> {
        let mut next = Vec::new();
        for c in stab {
            let h = g.conjugate_by(c);
            match h.cmp(g) {
                std::cmp::Ordering::Less => return None,
                std::cmp::Ordering::Equal => next.push(c.clone()),
                std::cmp::Ordering::Greater => {}
            }
        }
        images.push(g.clone());
        let ok = self.checks[depth]
            .iter()
            .all(|r| evaluate(r, images, self.n).is_identity());
        images.pop();
        ok.then_some(next)
    }

    fn descend(
        &self,
        depth: usize,
        images: &mut Vec<Permutation>,
        stab: &[Permutation],
        out: &mut Vec<CoverSolution>,
    ) -> Result<(), CoverError> {
        if depth == self.candidates.len() {
            if is_transitive(images, self.n) {
                out.push(CoverSolution { images: images.clone() });
            }
            return Ok(());
        }
        for g in &self.candidates[depth] {
            self.tick()?;
            if let Some(next) = self.admit(depth, g, images, stab) {
                images.push(g.clone());
                self.descend(depth + 1, images, &next, out)?;
                images.pop();
            }
        }
        Ok(())
    }
}

/// All transitive homomorphisms from the presented group to `S_n`, with the
/// meridian generators sent to transpositions, one per conjugacy class, in
/// canonical (lexicographic) order.
pub fn enumerate_covers(
    p: &GroupPresentation,
    n: usize,
    meridians: &MeridianSet,
    limits: CoverLimits,
) -> Result<Vec<CoverSolution>, CoverError> {
    if n == 0 {
        return Err(CoverError::ZeroDegree);
    }
    let gens = p.generator_count();
    let mask = meridians.mask(gens)?;
    if gens == 0 {
        // only the trivial homomorphism; transitive iff n = 1
        let ok = n == 1 && p.relators().iter().all(FreeWord::is_identity);
        return Ok(if ok {
            vec![CoverSolution { images: Vec::new() }]
        } else {
            Vec::new()
        });
    }

    let n_fact = factorial(n);
    if mask.iter().any(|m| !m) && n_fact.is_none_or(|f| f > limits.max_nodes) {
        return Err(CoverError::TooLarge { n });
    }
    let everything = if n_fact.is_some_and(|f| f <= limits.max_nodes) {
        all_permutations(n)
    } else {
        Vec::new()
    };
    let trans = transpositions(n);
    let meridian_candidates = if limits.strict_meridians {
        trans
    } else {
        std::iter::once(Permutation::identity(n)).chain(trans).collect()
    };
    let candidates: Vec<Vec<Permutation>> = mask
        .iter()
        .map(|&m| {
            if m {
                meridian_candidates.clone()
            } else {
                everything.clone()
            }
        })
        .collect();

    let mut checks: Vec<Vec<&FreeWord>> = vec![Vec::new(); gens];
    for r in p.relators() {
        if let Some(last) = r.letters().iter().map(|l| l.unsigned_abs() as usize).max() {
            checks[last - 1].push(r);
        }
    }

    // centralizer search needs the whole symmetric group at the root
    if everything.is_empty() {
        return Err(CoverError::TooLarge { n });
    }

    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let search = Search {
        n,
        candidates,
        checks,
        limits,
        nodes: &nodes,
        abort: &abort,
        start: Instant::now(),
    };

    let roots: Vec<(Permutation, Vec<Permutation>)> = {
        let mut roots = Vec::new();
        let mut scratch = Vec::new();
        for g in &search.candidates[0] {
            search.tick()?;
            if let Some(next) = search.admit(0, g, &mut scratch, &everything) {
                roots.push((g.clone(), next));
            }
        }
        roots
    };

    let workers = limits.workers.max(1).min(roots.len().max(1));
    let mut solutions = Vec::new();
    if workers == 1 {
        for (g, stab) in &roots {
            let mut images = vec![g.clone()];
            search.descend(1, &mut images, stab, &mut solutions)?;
        }
    } else {
        let results: Vec<Result<Vec<CoverSolution>, CoverError>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let search = &search;
                    let roots = &roots;
                    scope.spawn(move || {
                        let mut local = Vec::new();
                        for (g, stab) in roots.iter().skip(w).step_by(workers) {
                            let mut images = vec![g.clone()];
                            search.descend(1, &mut images, stab, &mut local)?;
                        }
                        Ok(local)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("cover worker panicked"))
                .collect()
        });
        for r in results {
            solutions.extend(r?);
        }
    }
    solutions.sort();
    Ok(solutions)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(g: usize, rels: &[&[i32]]) -> GroupPresentation {
        GroupPresentation::new(g, rels.iter().map(|r| FreeWord::new(g, r.to_vec()).unwrap()).collect())
    }

    fn count(p: &GroupPresentation, n: usize) -> usize {
        enumerate_covers(p, n, &MeridianSet::All, CoverLimits::default())
            .unwrap()
            .len()
    }

    #[test]
    fn conic_has_one_double_cover() {
        let conic = pres(2, &[&[1, -2], &[1, -2], &[1, 2]]);
        let sols = enumerate_covers(&conic, 2, &MeridianSet::All, CoverLimits::default()).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].to_text(&conic), "x1 (1 2)\nx2 (1 2)\n");
    }

    #[test]
    fn cubic_has_no_double_cover() {
        let cubic = pres(
            3,
            &[&[1, -2], &[2, -3], &[1, -2], &[2, -3], &[1, -2], &[2, -3], &[1, 2, 3]],
        );
        assert_eq!(count(&cubic, 2), 0);
    }

    #[test]
    fn degree_one() {
        let conic = pres(2, &[&[1, -2], &[1, 2]]);
        assert_eq!(count(&conic, 1), 0);
        let lax = CoverLimits {
            strict_meridians: false,
            ..CoverLimits::default()
        };
        assert_eq!(enumerate_covers(&conic, 1, &MeridianSet::All, lax).unwrap().len(), 1);
    }

    #[test]
    fn free_group_counts() {
        // transitive actions of Z on 3 points up to conjugacy: the 3-cycle
        let z = pres(1, &[]);
        assert_eq!(
            enumerate_covers(&z, 3, &MeridianSet::Subset(vec![]), CoverLimits::default())
                .unwrap()
                .len(),
            1
        );
        // F_2 -> S_2 transitive up to conjugacy: 3 (any pair not both identity)
        let f2 = pres(2, &[]);
        assert_eq!(
            enumerate_covers(&f2, 2, &MeridianSet::Subset(vec![]), CoverLimits::default())
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn node_limit_is_an_error() {
        let f2 = pres(2, &[]);
        let tight = CoverLimits {
            max_nodes: 30,
            ..CoverLimits::default()
        };
        assert!(matches!(
            enumerate_covers(&f2, 4, &MeridianSet::Subset(vec![]), tight),
            Err(CoverError::NodeLimit { limit: 30 })
        ));
    }

    #[test]
    fn workers_do_not_change_output() {
        let f2 = pres(2, &[&[1, 2, -1, -2]]);
        let one = enumerate_covers(&f2, 4, &MeridianSet::Subset(vec![]), CoverLimits::default()).unwrap();
        let four = CoverLimits {
            workers: 4,
            ..CoverLimits::default()
        };
        assert_eq!(
            enumerate_covers(&f2, 4, &MeridianSet::Subset(vec![]), four).unwrap(),
            one
        );
    }

    #[test]
    fn bad_inputs() {
        let p = pres(2, &[]);
        assert_eq!(
            enumerate_covers(&p, 0, &MeridianSet::All, CoverLimits::default()),
            Err(CoverError::ZeroDegree)
        );
        assert!(matches!(
            enumerate_covers(&p, 2, &MeridianSet::Subset(vec![3]), CoverLimits::default()),
            Err(CoverError::MeridianOutOfRange { index: 3, .. })
        ));
    }
}
