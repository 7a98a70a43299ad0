//! Closed-form invariants of the family `X_{p,k}`: branched covers of the
//! projective plane of degree `p`, twisted `k` times along a Lagrangian torus.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::groups::AbelianGroupStructure;
use crate::rational::{format_rational, int, ratio};
use crate::surgery::{holonomy_relative, ramification_class_cp2, torus_primitivity, HYPERPLANE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("p must be at least 2, got {0}")]
    DegreeTooSmall(i64),
    #[error("k must be nonnegative, got {0}")]
    NegativeTwist(i64),
    #[error("curve degree must be at least 1, got {0}")]
    CurveDegree(i64),
    #[error("genus formula gives {0}, which is negative")]
    NegativeGenus(BigInt),
    #[error("{0} overflows the closed forms")]
    Overflow(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    pub p: i64,
    pub k: i64,
}

impl FamilyParams {
    pub fn new(p: i64, k: i64) -> Result<Self, FamilyError> {
        if p < 2 {
            return Err(FamilyError::DegreeTooSmall(p));
        }
        if k < 0 {
            return Err(FamilyError::NegativeTwist(k));
        }
        if p > 1_000_000 {
            return Err(FamilyError::Overflow("p"));
        }
        Ok(FamilyParams { p, k })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInvariants {
    pub params: FamilyParams,
    /// Number of lines in the degenerate generic-projection picture.
    pub d: BigInt,
    /// Degree of the branch curve.
    pub m: BigInt,
    pub cusps: BigInt,
    pub nodes: BigInt,
    /// `c₁(K) = λ_p [ω]`
    pub lambda_p: BigRational,
    /// `H(γ, τ_T)` for the surgery torus.
    pub holonomy: BigRational,
    /// `c₁(K̃) − λ_p[ω̃] = α · PD[T]`
    pub alpha_coefficient: BigRational,
    /// First homology; taken as stated in the literature rather than derived.
    pub h1: AbelianGroupStructure,
    pub h1_asserted: bool,
    pub torus_primitive: bool,
}

pub fn lambda(p: i64) -> BigRational {
    ratio(6 * p - 9, p)
}

pub fn holonomy(p: i64) -> BigRational {
    ratio(2 * p - 3, p)
}

pub fn invariants(params: FamilyParams) -> Result<FamilyInvariants, FamilyError> {
    let FamilyParams { p, k } = FamilyParams::new(params.p, params.k)?;
    let bp = BigInt::from(p);
    let one = BigInt::from(1);
    let two = BigInt::from(2);
    let d = BigInt::from(3) * &bp * (&bp - &one);
    let m = BigInt::from(3) * &d;
    let cusps = BigInt::from(27) * (&bp - &one) * (BigInt::from(4) * &bp - BigInt::from(5));
    let twice_nodes = BigInt::from(27)
        * (&bp - &one)
        * (&bp - &two)
        * (BigInt::from(3) * &bp * &bp + BigInt::from(3) * &bp - BigInt::from(8));
    let (nodes, rem) = twice_nodes.div_rem(&two);
    assert!(rem.is_zero(), "node count must be integral");
    let h = holonomy(p);
    let alpha_coefficient = int(k) * &h;
    let h1 = if p % 3 == 0 && k % 3 == 0 {
        AbelianGroupStructure::cyclic(3)
    } else {
        AbelianGroupStructure::trivial()
    };
    let torus_primitive = torus_primitivity(p, k).expect("parameters already validated");
    Ok(FamilyInvariants {
        params: FamilyParams { p, k },
        d,
        m,
        cusps,
        nodes,
        lambda_p: lambda(p),
        holonomy: h,
        alpha_coefficient,
        h1,
        h1_asserted: true,
        torus_primitive,
    })
}

impl FamilyInvariants {
    /// `(key, value)` records in a fixed order.
    pub fn records(&self) -> Vec<(&'static str, String)> {
        vec![
            ("p", self.params.p.to_string()),
            ("k", self.params.k.to_string()),
            ("d", self.d.to_string()),
            ("m", self.m.to_string()),
            ("cusps", self.cusps.to_string()),
            ("nodes", self.nodes.to_string()),
            ("lambda", format_rational(&self.lambda_p)),
            ("H", format_rational(&self.holonomy)),
            ("alpha", format_rational(&self.alpha_coefficient)),
            ("h1", self.h1.to_string()),
            (
                "h1_source",
                if self.h1_asserted {
                    "asserted".into()
                } else {
                    "derived".into()
                },
            ),
            ("torus_primitive", self.torus_primitive.to_string()),
        ]
    }
}

/// The periods of `α_{p,k}` on integral classes are exactly the integer
/// multiples of `generator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodSet {
    pub k: i64,
    pub generator: BigRational,
}

impl fmt::Display for PeriodSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "multiples of {}", format_rational(&self.generator))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distinction {
    /// The period sets differ; `witness` lies in exactly one of them.
    Distinct {
        first: PeriodSet,
        second: PeriodSet,
        witness: BigRational,
    },
    Same {
        first: PeriodSet,
        second: PeriodSet,
    },
    /// Outside the regime where the torus class is primitive.
    NotDecided {
        reason: String,
    },
}

impl Distinction {
    pub fn is_distinct(&self) -> bool {
        matches!(self, Distinction::Distinct { .. })
    }

    pub fn records(&self) -> Vec<(&'static str, String)> {
        match self {
            Distinction::Distinct { first, second, witness } => vec![
                ("result", "distinct".into()),
                ("periods1", first.to_string()),
                ("periods2", second.to_string()),
                ("witness", format_rational(witness)),
            ],
            Distinction::Same { first, second } => vec![
                ("result", "same".into()),
                ("periods1", first.to_string()),
                ("periods2", second.to_string()),
            ],
            Distinction::NotDecided { reason } => {
                vec![("result", "not-decided".into()), ("reason", reason.clone())]
            }
        }
    }
}

/// Compares `X_{p,k1}` and `X_{p,k2}` through the periods of the
/// canonical-symplectic defect.
pub fn distinguish(p: i64, k1: i64, k2: i64) -> Result<Distinction, FamilyError> {
    FamilyParams::new(p, k1)?;
    FamilyParams::new(p, k2)?;
    if p % 3 == 0 && (k1 % 3 != 0 || k2 % 3 != 0) {
        return Ok(Distinction::NotDecided {
            reason: format!("torus class not primitive for p={p} unless k is a multiple of 3"),
        });
    }
    let first = PeriodSet {
        k: k1,
        generator: int(k1) * holonomy(p),
    };
    let second = PeriodSet {
        k: k2,
        generator: int(k2) * holonomy(p),
    };
    if first.generator.abs() == second.generator.abs() {
        return Ok(Distinction::Same { first, second });
    }
    let (a, b) = (first.generator.abs(), second.generator.abs());
    let witness = if a.is_zero() {
        b
    } else if b.is_zero() {
        a
    } else {
        a.min(b)
    };
    Ok(Distinction::Distinct { first, second, witness })
}

/// Geometric genus `(m−1)(m−2)/2 − nodes − cusps` of an irreducible curve.
pub fn plucker_genus(m: i64, nodes: &BigInt, cusps: &BigInt) -> Result<BigInt, FamilyError> {
    if m < 1 {
        return Err(FamilyError::CurveDegree(m));
    }
    let bm = BigInt::from(m);
    let arithmetic: BigInt = (&bm - 1) * (&bm - 2) / 2;
    let g = arithmetic - nodes - cusps;
    if g.is_negative() {
        return Err(FamilyError::NegativeGenus(g));
    }
    Ok(g)
}

/// Checks `p·(λ_p + 3) = 9p − 9` through the ramification class and
/// returns the arithmetic chain as a certificate.
pub fn ramification_consistency(p: i64) -> Result<(bool, String), FamilyError> {
    FamilyParams::new(p, 0)?;
    let l = lambda(p);
    let r = ramification_class_cp2(&l).coefficient(HYPERPLANE);
    let lhs = int(p) * &r;
    let rhs = int(9 * p - 9);
    // λ_p is the unique solution of p(λ + 3) = 9p − 9
    let solved = (&rhs / int(p)) - int(3);
    let ok = lhs == rhs && solved == l;
    let cert = format!("{p}*({}+3) = {} = 9*{p}-9", format_rational(&l), format_rational(&lhs));
    Ok((ok, cert))
}

/// `H(γ, τ_T)` from the ramification-count data and from the degree-one
/// surface data; both equal `(2p−3)/p`.
pub fn holonomy_two_ways(p: i64) -> Result<(BigRational, BigRational), FamilyError> {
    FamilyParams::new(p, 0)?;
    let l = lambda(p);
    let zero = int(0);
    let first = holonomy_relative(p, &l, &zero, &zero, &int(p - (3 * p - 3))).expect("integral intersection");
    let second = holonomy_relative(3, &l, &int(1), &int(-3), &int(3)).expect("integral intersection");
    Ok((first.value, second.value))
}
