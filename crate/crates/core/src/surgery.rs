//! Homological bookkeeping for surgery along a torus `T` with twist loop `γ`.
//!
//! Classes are formal rational combinations over caller-named symbols. The
//! surgered meridian is `[μ̃] = [μ] + k[γ]`, and when `c₁(K) = λ[ω]` the
//! canonical-symplectic defect after surgery is `k · H(γ, τ_T) · PD[T]`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::groups::{smith_normal_form, IntegerMatrix};
use crate::rational::{format_rational_full, int, parse_rational};

/// Basis symbol of the Poincaré dual of the surgery torus.
pub const PD_TORUS: &str = "PD[T]";
/// Basis symbol of the preimage of a line, `[f⁻¹(L)]`.
pub const HYPERPLANE: &str = "H_cls";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurgeryError {
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("relation {index} has {got} entries, expected {expected}")]
    RelationWidth { index: usize, got: usize, expected: usize },
    #[error("class has non-integral coefficient on {0:?}")]
    NonIntegral(String),
    #[error("sheet count must be nonzero")]
    ZeroSheets,
    #[error("boundary-weighted intersection {0} is not a half-integer")]
    NotHalfInteger(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A finitely supported rational combination of named basis symbols.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyClass {
    coefficients: BTreeMap<String, BigRational>,
}

impl HomologyClass {
    pub fn zero() -> Self {
        HomologyClass::default()
    }

    pub fn basis(symbol: &str) -> Self {
        Self::term(symbol, BigRational::one())
    }

    pub fn term(symbol: &str, coefficient: BigRational) -> Self {
        let mut c = HomologyClass::zero();
        c.add_term(symbol, coefficient);
        c
    }

    pub fn add_term(&mut self, symbol: &str, coefficient: BigRational) {
        let entry = self
            .coefficients
            .entry(symbol.to_string())
            .or_insert_with(BigRational::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.coefficients.remove(symbol);
        }
    }

    pub fn coefficient(&self, symbol: &str) -> BigRational {
        self.coefficients.get(symbol).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.coefficients.keys().map(String::as_str)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&str, &BigRational)> {
        self.coefficients.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn add(&self, other: &HomologyClass) -> HomologyClass {
        let mut out = self.clone();
        for (s, c) in &other.coefficients {
            out.add_term(s, c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &BigRational) -> HomologyClass {
        let mut out = HomologyClass::zero();
        for (s, c) in &self.coefficients {
            out.add_term(s, c * factor);
        }
        out
    }

    pub fn neg(&self) -> HomologyClass {
        self.scale(&-BigRational::one())
    }

    pub fn sub(&self, other: &HomologyClass) -> HomologyClass {
        self.add(&other.neg())
    }

    /// `sym <name> <num>/<den>` lines, sorted by symbol.
    pub fn to_text(&self) -> String {
        self.coefficients
            .iter()
            .map(|(s, c)| format!("sym {s} {}\n", format_rational_full(c)))
            .collect()
    }

    pub fn parse(text: &str) -> Result<Self, SurgeryError> {
        let mut out = HomologyClass::zero();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let perr = |message: String| SurgeryError::Parse { line: i + 1, message };
            if toks.len() != 3 || toks[0] != "sym" {
                return Err(perr(format!("expected \"sym <name> <num>/<den>\", got {line:?}")));
            }
            let q = parse_rational(toks[2]).map_err(|e| perr(e.to_string()))?;
            out.add_term(toks[1], q);
        }
        Ok(out)
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// An abelian group given by named generators and integer relation rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianPresentation {
    generators: Vec<String>,
    relations: Vec<Vec<BigInt>>,
}

impl AbelianPresentation {
    pub fn new(generators: Vec<String>, relations: Vec<Vec<BigInt>>) -> Result<Self, SurgeryError> {
        for (index, r) in relations.iter().enumerate() {
            if r.len() != generators.len() {
                return Err(SurgeryError::RelationWidth {
                    index,
                    got: r.len(),
                    expected: generators.len(),
                });
            }
        }
        Ok(AbelianPresentation { generators, relations })
    }

    pub fn from_i64(generators: &[&str], relations: &[Vec<i64>]) -> Result<Self, SurgeryError> {
        Self::new(
            generators.iter().map(|s| s.to_string()).collect(),
            relations
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[Vec<BigInt>] {
        &self.relations
    }

    fn index_of(&self, symbol: &str) -> Result<usize, SurgeryError> {
        self.generators
            .iter()
            .position(|g| g == symbol)
            .ok_or_else(|| SurgeryError::UnknownSymbol(symbol.to_string()))
    }

    /// Reduces an integral class into SNF coordinates of the quotient.
    pub fn reduce(&self, class: &HomologyClass) -> Result<ReducedClass, SurgeryError> {
        let g = self.generators.len();
        let mut vector = vec![BigInt::zero(); g];
        for (s, c) in class.terms() {
            let i = self.index_of(s)?;
            if !c.is_integer() {
                return Err(SurgeryError::NonIntegral(s.to_string()));
            }
            vector[i] = c.to_integer();
        }
        let m = IntegerMatrix::from_rows_with_cols(&self.relations, g);
        let snf = smith_normal_form(&m);
        // rowspace(M) = rowspace(D V⁻¹), so v ∈ rowspace(M) iff v·V ∈ rowspace(D)
        let mut moduli = vec![BigInt::zero(); g];
        for (i, d) in snf.invariant_factors().into_iter().enumerate() {
            moduli[i] = d;
        }
        let coordinates = (0..g)
            .map(|j| {
                let y: BigInt = (0..g).map(|i| &vector[i] * &snf.v[(i, j)]).sum();
                if moduli[j].is_zero() {
                    y
                } else {
                    y.mod_floor(&moduli[j])
                }
            })
            .collect();
        Ok(ReducedClass {
            class: class.clone(),
            coordinates,
            moduli,
        })
    }
}

/// A class together with its coordinates in `Z/d_1 ⊕ … ⊕ Z/d_g` (modulus 0
/// meaning a free `Z` summand, modulus 1 a trivial one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedClass {
    pub class: HomologyClass,
    pub coordinates: Vec<BigInt>,
    pub moduli: Vec<BigInt>,
}

impl ReducedClass {
    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(Zero::is_zero)
    }

    /// Order in the quotient; `None` for infinite order.
    pub fn order(&self) -> Option<BigInt> {
        let mut order = BigInt::one();
        for (c, d) in self.coordinates.iter().zip(&self.moduli) {
            if c.is_zero() {
                continue;
            }
            if d.is_zero() {
                return None;
            }
            let o = d / c.gcd(d);
            order = order.lcm(&o);
        }
        Some(order)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coorientation {
    Positive,
    Negative,
}

impl Coorientation {
    pub fn sign(self) -> i64 {
        match self {
            Coorientation::Positive => 1,
            Coorientation::Negative => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Coorientation::Positive => Coorientation::Negative,
            Coorientation::Negative => Coorientation::Positive,
        }
    }
}

/// Surgery on `T` along `γ` with twist `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgerySpec {
    pub k: i64,
    pub gamma: String,
    pub mu: String,
    pub coorientation: Coorientation,
}

impl SurgerySpec {
    pub fn new(k: i64, gamma: &str, mu: &str) -> Self {
        SurgerySpec {
            k,
            gamma: gamma.into(),
            mu: mu.into(),
            coorientation: Coorientation::Positive,
        }
    }

    /// Twist measured against the positively cooriented `γ`.
    pub fn effective_twist(&self) -> i64 {
        self.k * self.coorientation.sign()
    }

    /// `γ*` with `-k` describes the same manifold.
    pub fn reverse_coorientation(&self) -> SurgerySpec {
        SurgerySpec {
            k: -self.k,
            coorientation: self.coorientation.flipped(),
            ..self.clone()
        }
    }

    /// Canonical defect using the holonomy of the positively cooriented `γ`.
    pub fn defect(&self, h: &HolonomyValue) -> HomologyClass {
        canonical_defect(self.effective_twist(), h)
    }
}

/// `[μ] + k[γ]` (with `γ` taken with the chosen coorientation), reduced in
/// the quotient presented by `ambient`.
pub fn meridian_after_surgery(spec: &SurgerySpec, ambient: &AbelianPresentation) -> Result<ReducedClass, SurgeryError> {
    ambient.index_of(&spec.mu)?;
    ambient.index_of(&spec.gamma)?;
    let mut class = HomologyClass::basis(&spec.mu);
    class.add_term(&spec.gamma, int(spec.effective_twist()));
    ambient.reduce(&class)
}

/// The ambient relations `[μ] = 0`, `3[γ] = 0`, `p[γ] = 0` of the torus
/// complement in `X_{p,0}`.
pub fn family_torus_complement(p: i64) -> AbelianPresentation {
    AbelianPresentation::from_i64(&["mu", "gamma"], &[vec![1, 0], vec![0, 3], vec![0, p]])
        .expect("relations have two entries")
}

/// Whether `[T]` is primitive after `k` twists, decided by triviality of the
/// surgered meridian in the torus complement of `X_{p,0}`.
pub fn torus_primitivity(p: i64, k: i64) -> Result<bool, SurgeryError> {
    if p < 2 {
        return Err(SurgeryError::OutOfRange(format!("p = {p} < 2")));
    }
    if k < 0 {
        return Err(SurgeryError::OutOfRange(format!("k = {k} < 0")));
    }
    let spec = SurgerySpec::new(k, "gamma", "mu");
    Ok(meridian_after_surgery(&spec, &family_torus_complement(p))?.is_zero())
}

/// The real number `H(δ, τ)`; defined only up to integers when the
/// trivialization class changes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HolonomyValue {
    pub value: BigRational,
    /// Set when the value is tied to one specific trivialization class.
    pub trivialization_dependent: bool,
}

impl HolonomyValue {
    pub fn new(value: BigRational) -> Self {
        HolonomyValue {
            value,
            trivialization_dependent: true,
        }
    }

    /// Changing the trivialization shifts `H` by an integer.
    pub fn trivialization_shift(&self, s: i64) -> HolonomyValue {
        HolonomyValue {
            value: &self.value + int(s),
            ..self.clone()
        }
    }

    /// Moving the loop shifts `H` by `λ` times the swept area.
    pub fn deformation_shift(&self, lambda: &BigRational, swept_area: &BigRational) -> HolonomyValue {
        HolonomyValue {
            value: &self.value + lambda * swept_area,
            ..self.clone()
        }
    }

    /// Holonomy of the loop with reversed orientation.
    pub fn reversed(&self) -> HolonomyValue {
        HolonomyValue {
            value: -&self.value,
            ..self.clone()
        }
    }
}

/// `c₁(K̃) − λ[ω̃] = k · H · PD[T]`
pub fn canonical_defect(k: i64, h: &HolonomyValue) -> HomologyClass {
    HomologyClass::term(PD_TORUS, int(k) * &h.value)
}

/// `H = (λ·⟨ω_Y, f_*N⟩ − ⟨c₁(K_Y), f_*N⟩ − I(N, R)) / m` for a surface `N`
/// bounded by `m` parallel copies of `γ`; boundary intersections count 1/2.
pub fn holonomy_relative(
    m: i64,
    lambda: &BigRational,
    omega_pairing: &BigRational,
    canonical_pairing: &BigRational,
    intersection_halfweighted: &BigRational,
) -> Result<HolonomyValue, SurgeryError> {
    if m == 0 {
        return Err(SurgeryError::ZeroSheets);
    }
    let den = intersection_halfweighted.denom();
    if !(den.is_one() || *den == BigInt::from(2)) {
        return Err(SurgeryError::NotHalfInteger(crate::rational::format_rational(
            intersection_halfweighted,
        )));
    }
    let numerator = lambda * omega_pairing - canonical_pairing - intersection_halfweighted;
    Ok(HolonomyValue::new(numerator / int(m)))
}

/// `c₁(K_X) = f*c₁(K_Y) + PD[R]`. `pullback` maps each symbol of `c1_ky`
/// to its pulled-back symbol on `X`.
pub fn canonical_pullback(
    c1_ky: &HomologyClass,
    pullback: &BTreeMap<String, String>,
    ramification: &HomologyClass,
) -> Result<HomologyClass, SurgeryError> {
    let mut pulled = HomologyClass::zero();
    for (s, c) in c1_ky.terms() {
        let target = pullback
            .get(s)
            .ok_or_else(|| SurgeryError::UnknownSymbol(s.to_string()))?;
        pulled.add_term(target, c.clone());
    }
    Ok(pulled.add(ramification))
}

/// For a branched cover of the projective plane, `[R] = PD(c₁(K)) + 3[H]`;
/// with `c₁(K) = c·[H]` this is `(c + 3)[H]`.
pub fn ramification_class_cp2(c1k_coefficient: &BigRational) -> HomologyClass {
    HomologyClass::term(HYPERPLANE, c1k_coefficient + int(3))
}

/// A word in named Dehn twists, `(generator, exponent)` from left to right.
/// No relations between distinct twists are assumed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MappingClassWord {
    syllables: Vec<(String, i64)>,
}

impl MappingClassWord {
    pub fn identity() -> Self {
        MappingClassWord::default()
    }

    pub fn new(syllables: Vec<(String, i64)>) -> Self {
        let mut w = MappingClassWord::identity();
        for (g, e) in syllables {
            w.push(&g, e);
        }
        w
    }

    pub fn twist(name: &str, exponent: i64) -> Self {
        Self::new(vec![(name.to_string(), exponent)])
    }

    fn push(&mut self, g: &str, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.syllables.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.syllables.pop();
                }
                return;
            }
        }
        self.syllables.push((g.to_string(), e));
    }

    pub fn syllables(&self) -> &[(String, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// `self ∘ other`: `other` acts first, written on the right.
    pub fn compose(&self, other: &MappingClassWord) -> MappingClassWord {
        let mut out = self.clone();
        for (g, e) in &other.syllables {
            out.push(g, *e);
        }
        out
    }
}

impl fmt::Display for MappingClassWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.syllables.iter().map(|(g, e)| format!("{g}^{e}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Surgery on `S¹ × Y(φ)` along a loop in a fiber gives `S¹ × Y(τ_γ^k ∘ φ)`.
pub fn mapping_torus_surgery(phi: &MappingClassWord, gamma_twist: &str, k: i64) -> MappingClassWord {
    MappingClassWord::twist(gamma_twist, k).compose(phi)
}
