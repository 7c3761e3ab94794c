//! Weight-line bookkeeping for twisted sectors: degree shifts, the
//! age/normal formal classes of a tangent representation, obstruction and
//! excess classes, and mechanical checks of the identities relating them.
//!
//! A tangent space at a torus-fixed point splits into weight lines. Every
//! construction here is a line-by-line computation on fractional pairings
//! `w = ⟨λ, t⟩ mod 1`, so all identities are verified exactly.

use crate::rational::{frac_mod1, Rat};
use crate::root_datum::{CommutingTuple, RootDatum, TorusElement, Weight};
use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("tuple of length {found} given, at least {need} elements required")]
    TupleTooShort { need: usize, found: usize },
    #[error("weight line {0} has zero multiplicity")]
    ZeroMultiplicity(Weight),
    #[error("eigen-weight sum over the closed tuple is not an integer at line {0}")]
    NonIntegerSum(Weight),
}

/// Fractional pairing `⟨λ, t⟩ mod 1`, the exponent of the eigenvalue of `t`
/// on the weight line `λ`.
pub fn eigen_weight(lambda: &Weight, t: &TorusElement) -> Result<Rat, WeightError> {
    if lambda.rank() != t.rank() {
        return Err(WeightError::RankMismatch {
            expected: lambda.rank(),
            found: t.rank(),
        });
    }
    Ok(frac_mod1(&lambda.pairing(t)))
}

/// Finite-dimensional torus representation recorded by its weight multiset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightRep {
    ambient_rank: usize,
    lines: BTreeMap<Weight, u32>,
}

impl WeightRep {
    pub fn empty(ambient_rank: usize) -> Self {
        WeightRep {
            ambient_rank,
            lines: BTreeMap::new(),
        }
    }

    /// Build from `(weight, multiplicity)` pairs; duplicates accumulate.
    pub fn from_lines(
        ambient_rank: usize,
        lines: impl IntoIterator<Item = (Weight, u32)>,
    ) -> Result<Self, WeightError> {
        let mut rep = WeightRep::empty(ambient_rank);
        for (w, mult) in lines {
            rep.push_line(w, mult)?;
        }
        Ok(rep)
    }

    /// Weights of the adjoint representation on the complexified Lie
    /// algebra, torus directions omitted (zero weights never contribute to
    /// shifts or normal classes).
    /// Complexified adjoint representation: one line per root plus the
    /// Cartan as zero-weight lines, so the dimension is the group's.
    pub fn adjoint(datum: &RootDatum) -> Self {
        let mut rep = WeightRep::empty(datum.rank());
        for root in datum.all_roots() {
            rep.push_line(root, 1).expect("roots share the datum rank");
        }
        rep.push_line(Weight(vec![0; datum.rank()]), datum.rank() as u32)
            .expect("zero weight shares the datum rank");
        rep
    }

    pub fn push_line(&mut self, weight: Weight, mult: u32) -> Result<(), WeightError> {
        if weight.rank() != self.ambient_rank {
            return Err(WeightError::RankMismatch {
                expected: self.ambient_rank,
                found: weight.rank(),
            });
        }
        if mult == 0 {
            return Err(WeightError::ZeroMultiplicity(weight));
        }
        *self.lines.entry(weight).or_insert(0) += mult;
        Ok(())
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Complex dimension: total multiplicity.
    pub fn dim(&self) -> u64 {
        self.lines.values().map(|&m| m as u64).sum()
    }

    pub fn lines(&self) -> impl Iterator<Item = (&Weight, u32)> {
        self.lines.iter().map(|(w, &m)| (w, m))
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Sub-multiset of lines fixed by `t` (integral pairing).
    pub fn fixed_lines(&self, t: &TorusElement) -> Result<WeightRep, WeightError> {
        let mut rep = WeightRep::empty(self.ambient_rank);
        for (w, m) in self.lines() {
            if eigen_weight(w, t)?.is_zero() {
                rep.push_line(w.clone(), m)?;
            }
        }
        Ok(rep)
    }

    /// Union of multisets.
    pub fn concat(&self, other: &WeightRep) -> Result<WeightRep, WeightError> {
        if other.ambient_rank != self.ambient_rank {
            return Err(WeightError::RankMismatch {
                expected: self.ambient_rank,
                found: other.ambient_rank,
            });
        }
        let mut rep = self.clone();
        for (w, m) in other.lines() {
            rep.push_line(w.clone(), m)?;
        }
        Ok(rep)
    }
}

impl fmt::Display for WeightRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lines.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .lines()
            .map(|(w, m)| {
                if m == 1 {
                    w.to_string()
                } else {
                    format!("{m}*{w}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Formal linear combination of weight lines with exact rational
/// coefficients; zero coefficients are pruned, so structural equality is
/// coefficient-wise equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VirtualRep {
    ambient_rank: usize,
    coeffs: BTreeMap<Weight, Rat>,
}

impl VirtualRep {
    pub fn zero(ambient_rank: usize) -> Self {
        VirtualRep {
            ambient_rank,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_rep(rep: &WeightRep) -> Self {
        let mut v = VirtualRep::zero(rep.ambient_rank());
        for (w, m) in rep.lines() {
            v.add_term(w.clone(), Rat::from_integer(BigInt::from(m)));
        }
        v
    }

    fn add_term(&mut self, weight: Weight, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let now_zero = {
            let entry = self.coeffs.entry(weight.clone()).or_insert_with(Rat::zero);
            *entry += coeff;
            entry.is_zero()
        };
        if now_zero {
            self.coeffs.remove(&weight);
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, weight: &Weight) -> Rat {
        self.coeffs.get(weight).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &Rat)> {
        self.coeffs.iter()
    }

    /// Formal rank: the sum of all coefficients.
    pub fn rank(&self) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.values() {
            acc += c;
        }
        acc
    }

    pub fn add(&self, other: &VirtualRep) -> Result<VirtualRep, WeightError> {
        if other.ambient_rank != self.ambient_rank {
            return Err(WeightError::RankMismatch {
                expected: self.ambient_rank,
                found: other.ambient_rank,
            });
        }
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &VirtualRep) -> Result<VirtualRep, WeightError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> VirtualRep {
        VirtualRep {
            ambient_rank: self.ambient_rank,
            coeffs: self.coeffs.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.denom().is_one())
    }

    /// True when every coefficient is a nonnegative integer, i.e. the class
    /// is an honest representation.
    pub fn is_effective(&self) -> bool {
        self.is_integral() && self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Convert to a weight multiset; requires an effective class.
    pub fn to_rep(&self) -> Option<WeightRep> {
        if !self.is_effective() {
            return None;
        }
        let mut rep = WeightRep::empty(self.ambient_rank);
        for (w, c) in &self.coeffs {
            let m = c.to_integer().to_u32()?;
            rep.push_line(w.clone(), m).ok()?;
        }
        Some(rep)
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(w, c)| format!("{}*{}", crate::rational::format_rat(c), w))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Degree-shift certificate for one sector class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftRecord {
    pub class_rep: TorusElement,
    pub shift: Rat,
    pub ambient_dim: u64,
}

impl ShiftRecord {
    pub fn new(class_rep: TorusElement, shift: Rat, ambient_dim: u64) -> Self {
        assert!(!shift.is_negative(), "shift is a sum of values in [0,1)");
        assert!(
            shift < Rat::from_integer(BigInt::from(ambient_dim)) || ambient_dim == 0,
            "shift below complex dimension"
        );
        ShiftRecord {
            class_rep,
            shift,
            ambient_dim,
        }
    }
}

/// Age of `t` on `rep`: the sum of fractional eigen-weights over all lines.
pub fn degree_shift(rep: &WeightRep, t: &TorusElement) -> Result<Rat, WeightError> {
    let mut acc = Rat::zero();
    for (w, m) in rep.lines() {
        acc += eigen_weight(w, t)? * Rat::from_integer(BigInt::from(m));
    }
    Ok(acc)
}

/// Age class of `t` on `rep`: each line `λ` weighted by
/// `mult · (⟨λ,t⟩ mod 1)`. Its rank is the degree shift.
pub fn age_class(rep: &WeightRep, t: &TorusElement) -> Result<VirtualRep, WeightError> {
    let mut out = VirtualRep::zero(rep.ambient_rank());
    for (w, m) in rep.lines() {
        let coeff = eigen_weight(w, t)? * Rat::from_integer(BigInt::from(m));
        out.add_term(w.clone(), coeff);
    }
    Ok(out)
}

/// Eigen-weights of a line over the closed tuple `(g_0, g_1, …, g_m)` with
/// `g_0 = (g_1 ⋯ g_m)^{-1}`.
fn closed_weights(line: &Weight, tuple: &CommutingTuple) -> Result<Vec<Rat>, WeightError> {
    let mut ws = vec![eigen_weight(line, &tuple.closure_element())?];
    for g in tuple.elements() {
        ws.push(eigen_weight(line, g)?);
    }
    Ok(ws)
}

/// Integer eigen-weight sum per distinct line over the closed tuple.
///
/// For each line the sum `w_0 + w_1 + ⋯ + w_m` is an integer in `[0, m]`
/// because the closed tuple multiplies to the identity; a non-integer sum
/// is an arithmetic bug and is surfaced as an error.
pub fn weight_sums(
    rep: &WeightRep,
    tuple: &CommutingTuple,
) -> Result<Vec<(Weight, u64)>, WeightError> {
    let mut out = Vec::new();
    for (w, _) in rep.lines() {
        let total: Rat = closed_weights(w, tuple)?.into_iter().sum();
        if !frac_mod1(&total).is_zero() {
            return Err(WeightError::NonIntegerSum(w.clone()));
        }
        let sum = total
            .to_integer()
            .to_u64()
            .ok_or_else(|| WeightError::NonIntegerSum(w.clone()))?;
        debug_assert!(sum <= tuple.len() as u64);
        out.push((w.clone(), sum));
    }
    Ok(out)
}

/// Normal class of the tuple's fixed locus: lines moved by some element of
/// the closed tuple, kept with their full multiplicity.
///
/// The keep-condition "eigen-weight sum over the closed tuple ≥ 1" is
/// equivalent to "some element acts nontrivially on the line".
pub fn normal_class(
    rep: &WeightRep,
    tuple: &CommutingTuple,
) -> Result<VirtualRep, WeightError> {
    let mut out = VirtualRep::zero(rep.ambient_rank());
    for (w, m) in rep.lines() {
        let total: Rat = closed_weights(w, tuple)?.into_iter().sum();
        if total >= Rat::one() {
            out.add_term(w.clone(), Rat::from_integer(BigInt::from(m)));
        }
    }
    Ok(out)
}

/// Obstruction class of a tuple of length ≥ 2: line `λ` enters with
/// coefficient `mult · (Σ w − 1)` whenever the closed eigen-weight sum is
/// at least 2, and is dropped otherwise. Coefficients are nonnegative
/// integers by construction.
pub fn obstruction_class(
    rep: &WeightRep,
    tuple: &CommutingTuple,
) -> Result<VirtualRep, WeightError> {
    if tuple.len() < 2 {
        return Err(WeightError::TupleTooShort {
            need: 2,
            found: tuple.len(),
        });
    }
    let mut out = VirtualRep::zero(rep.ambient_rank());
    let two = Rat::from_integer(BigInt::from(2));
    for (w, m) in rep.lines() {
        let total: Rat = closed_weights(w, tuple)?.into_iter().sum();
        if total >= two {
            let coeff = (total - Rat::one()) * Rat::from_integer(BigInt::from(m));
            out.add_term(w.clone(), coeff);
        }
    }
    Ok(out)
}

/// Which pairwise product is formed first when a triple is multiplied.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Grouping {
    /// `(h₁ h₂) h₃`
    Left,
    /// `h₁ (h₂ h₃)`
    Right,
}

/// Excess class of a triple for the given grouping: the virtual difference
/// of fixed-locus normal classes measuring non-transversality of the
/// stepwise intersection. For the left grouping it is
/// `N(h₁,h₂) ⊕ N(h₁h₂,h₃) ⊖ N(h₁h₂) ⊖ N(h₁,h₂,h₃)`; the right grouping
/// mirrors it. Integer coefficients; the rank is nonnegative.
pub fn excess_class(
    rep: &WeightRep,
    triple: &CommutingTuple,
    grouping: Grouping,
) -> Result<VirtualRep, WeightError> {
    if triple.len() != 3 {
        return Err(WeightError::TupleTooShort {
            need: 3,
            found: triple.len(),
        });
    }
    let [h1, h2, h3] = [
        triple.elements()[0].clone(),
        triple.elements()[1].clone(),
        triple.elements()[2].clone(),
    ];
    let make = |els: Vec<TorusElement>| {
        CommutingTuple::new(els).expect("ranks agree within one triple")
    };
    let (step_pair, step_single) = match grouping {
        Grouping::Left => {
            let h12 = h1.product(&h2).expect("ranks agree");
            (
                make(vec![h1.clone(), h2.clone()]),
                (make(vec![h12.clone(), h3.clone()]), make(vec![h12])),
            )
        }
        Grouping::Right => {
            let h23 = h2.product(&h3).expect("ranks agree");
            (
                make(vec![h2.clone(), h3.clone()]),
                (make(vec![h1.clone(), h23.clone()]), make(vec![h23])),
            )
        }
    };
    let (joined_pair, partial_single) = step_single;
    let excess = normal_class(rep, &step_pair)?
        .add(&normal_class(rep, &joined_pair)?)?
        .sub(&normal_class(rep, &partial_single)?)?
        .sub(&normal_class(rep, triple)?)?;
    debug_assert!(excess.is_integral());
    debug_assert!(!excess.rank().is_negative());
    Ok(excess)
}

/// Verifies `age_class(t) ⊕ age_class(t⁻¹) = normal_class((t))`
/// coefficient-wise: a line moved by `t` contributes fractional ages
/// summing to 1, a fixed line contributes nothing to either side.
pub fn verify_age_normal_split(
    rep: &WeightRep,
    t: &TorusElement,
) -> Result<bool, WeightError> {
    let lhs = age_class(rep, t)?.add(&age_class(rep, &t.inverse())?)?;
    let rhs = normal_class(rep, &CommutingTuple::single(t.clone()))?;
    Ok(lhs == rhs)
}

/// Verifies the three-fold compatibility behind associativity: for both
/// groupings, obstruction ⊕ obstruction ⊕ excess agree, and both equal the
/// closed form `age(h₁) ⊕ age(h₂) ⊕ age(h₃) ⊕ age(h₀) ⊖ normal(triple)`
/// with `h₀` the closing element.
pub fn verify_excess_associativity(
    rep: &WeightRep,
    triple: &CommutingTuple,
) -> Result<bool, WeightError> {
    if triple.len() != 3 {
        return Err(WeightError::TupleTooShort {
            need: 3,
            found: triple.len(),
        });
    }
    let [h1, h2, h3] = [
        triple.elements()[0].clone(),
        triple.elements()[1].clone(),
        triple.elements()[2].clone(),
    ];
    let pair = |a: &TorusElement, b: &TorusElement| {
        CommutingTuple::new(vec![a.clone(), b.clone()]).expect("ranks agree")
    };
    let h12 = h1.product(&h2).expect("ranks agree");
    let h23 = h2.product(&h3).expect("ranks agree");

    let left = obstruction_class(rep, &pair(&h1, &h2))?
        .add(&obstruction_class(rep, &pair(&h12, &h3))?)?
        .add(&excess_class(rep, triple, Grouping::Left)?)?;
    let right = obstruction_class(rep, &pair(&h2, &h3))?
        .add(&obstruction_class(rep, &pair(&h1, &h23))?)?
        .add(&excess_class(rep, triple, Grouping::Right)?)?;

    let h0 = triple.closure_element();
    let closed_form = age_class(rep, &h1)?
        .add(&age_class(rep, &h2)?)?
        .add(&age_class(rep, &h3)?)?
        .add(&age_class(rep, &h0)?)?
        .sub(&normal_class(rep, triple)?)?;

    Ok(left == right && left == closed_form)
}

/// Verifies the shifted-degree bookkeeping of the product: with
/// `deg(product) = deg₁ + deg₂ + 2·rank(obstruction) + 2·rank(normal
/// difference)`, the shifted degrees balance:
/// `deg(product) + 2ι(g₁g₂) = deg₁ + 2ι(g₁) + deg₂ + 2ι(g₂)`.
pub fn verify_degree_identity(
    rep: &WeightRep,
    pair: &CommutingTuple,
    deg1: &Rat,
    deg2: &Rat,
) -> Result<bool, WeightError> {
    if pair.len() != 2 {
        return Err(WeightError::TupleTooShort {
            need: 2,
            found: pair.len(),
        });
    }
    let g1 = &pair.elements()[0];
    let g2 = &pair.elements()[1];
    let g12 = g1.product(g2).expect("ranks agree");
    let single = CommutingTuple::single(g12.clone());

    let obstruction_rank = obstruction_class(rep, pair)?.rank();
    let normal_difference_rank =
        normal_class(rep, pair)?.rank() - normal_class(rep, &single)?.rank();
    let two = Rat::from_integer(BigInt::from(2));
    let product_degree = deg1 + deg2
        + &two * obstruction_rank
        + &two * normal_difference_rank;

    let lhs = product_degree + &two * degree_shift(rep, &g12)?;
    let rhs = deg1 + &two * degree_shift(rep, g1)? + deg2 + &two * degree_shift(rep, g2)?;
    Ok(lhs == rhs)
}
