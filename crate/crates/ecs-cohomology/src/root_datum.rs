//! Root data, finite-order torus elements, and centralizer combinatorics.
//!
//! A root datum here is a rank-`r` lattice picture of a compact connected
//! group: weights and roots live in `ℤ^r` (coordinates in a basis of
//! fundamental weights), torus elements live in `(ℚ/ℤ)^r` (coordinates dual
//! to the weight basis, so the pairing is the dot product), and simple
//! reflections act by integer matrices. This fixes the simply-connected
//! normalization; other forms of the same Lie type are not modeled.
//!
//! Everything downstream — degree shifts, obstruction bundles, centralizer
//! corrections — reduces to exact pairings `⟨weight, torus element⟩ ∈ ℚ/ℤ`
//! computed in this module.

use crate::rational::{denominator_lcm, format_rat_list, frac_mod1, Rat};
use num::bigint::BigInt;
use num::{Signed, ToPrimitive, Zero};
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use thiserror::Error;

/// Largest supported rank for a single datum (products included).
pub const MAX_RANK: usize = 6;
/// Reflection closure larger than this signals non-finite input.
pub const ROOT_BOUND: usize = 250;
/// Weyl closure larger than this signals non-finite input.
pub const WEYL_BOUND: usize = 50_000;
/// Default cap on torus-element entry denominators.
pub const MAX_DENOMINATOR: u64 = 3600;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDatumError {
    #[error("unsupported root datum label {0:?}")]
    UnsupportedLabel(String),
    #[error("rank {rank} exceeds supported maximum {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("invalid simple roots: {0}")]
    InvalidSimpleRoots(String),
    #[error("reflection closure exceeded {bound} roots; input is not of finite type")]
    RootClosureExceeded { bound: usize },
    #[error("Weyl closure exceeded {bound} elements; input is not of finite type")]
    WeylClosureExceeded { bound: usize },
    #[error("torus entry denominator {denom} exceeds bound {bound}")]
    DenominatorTooLarge { denom: String, bound: u64 },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("commuting tuple must contain at least one element")]
    EmptyTuple,
    #[error("orbit enumeration exceeded the Weyl-order bound {bound}")]
    OrbitBoundExceeded { bound: usize },
    #[error("tuple class enumeration exceeded {bound} candidates")]
    ClassBoundExceeded { bound: usize },
    #[error("centralizer containment violated: {0}")]
    ContainmentViolated(String),
    #[error(
        "no Lie-algebra element realizes this centralizer: every vector annihilating the \
         integral roots also annihilates {}",
        fmt_weights(extra_roots)
    )]
    NonLeviClass { extra_roots: Vec<Weight> },
    #[error("regular vector search exhausted (internal invariant violated)")]
    SearchExhausted,
}

fn fmt_weights(ws: &[Weight]) -> String {
    let parts: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
    parts.join(", ")
}

/// Integral weight (or root) in the rank-`r` weight lattice.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|&c| -c).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `⟨self, t⟩` as an exact rational (not reduced mod 1).
    pub fn pairing(&self, t: &TorusElement) -> Rat {
        debug_assert_eq!(self.rank(), t.rank());
        let mut acc = Rat::zero();
        for (c, x) in self.0.iter().zip(t.entries()) {
            acc += x * Rat::from_integer(BigInt::from(*c));
        }
        acc
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Finite-order point of the maximal torus, entries reduced into `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TorusElement {
    entries: Vec<Rat>,
}

impl TorusElement {
    /// Reduce each entry mod 1 and enforce the default denominator bound.
    pub fn new(entries: Vec<Rat>) -> Result<Self, RootDatumError> {
        Self::with_denominator_bound(entries, MAX_DENOMINATOR)
    }

    pub fn with_denominator_bound(
        entries: Vec<Rat>,
        bound: u64,
    ) -> Result<Self, RootDatumError> {
        let reduced: Vec<Rat> = entries.iter().map(frac_mod1).collect();
        for x in &reduced {
            if x.denom() > &BigInt::from(bound) {
                return Err(RootDatumError::DenominatorTooLarge {
                    denom: x.denom().to_string(),
                    bound,
                });
            }
        }
        Ok(TorusElement { entries: reduced })
    }

    pub fn identity(rank: usize) -> Self {
        TorusElement {
            entries: vec![Rat::zero(); rank],
        }
    }

    /// Convenience constructor from `"p/q"` strings.
    pub fn from_strs(entries: &[&str]) -> Result<Self, RootDatumError> {
        let parsed: Result<Vec<Rat>, String> =
            entries.iter().map(|s| crate::rational::parse_rat(s)).collect();
        Self::new(parsed.map_err(RootDatumError::InvalidSimpleRoots)?)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    /// Group inverse: entrywise negation mod 1.
    pub fn inverse(&self) -> TorusElement {
        TorusElement {
            entries: self.entries.iter().map(|x| frac_mod1(&(-x))).collect(),
        }
    }

    /// Group product: entrywise addition mod 1.
    pub fn product(&self, other: &TorusElement) -> Result<TorusElement, RootDatumError> {
        if self.rank() != other.rank() {
            return Err(RootDatumError::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(TorusElement {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| frac_mod1(&(a + b)))
                .collect(),
        })
    }

    /// Order in `(ℚ/ℤ)^r`: lcm of the entry denominators.
    pub fn order(&self) -> BigInt {
        denominator_lcm(&self.entries)
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    fn apply_matrix(&self, m: &IMat) -> TorusElement {
        let raw = m.apply_rat(&self.entries);
        TorusElement {
            entries: raw.iter().map(frac_mod1).collect(),
        }
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", format_rat_list(&self.entries))
    }
}

/// Ordered tuple of torus elements. Torus points always commute, so the
/// only structural requirements are a shared rank and nonemptiness; the
/// generated subgroup is automatically finite with order dividing the
/// product of the element orders.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CommutingTuple {
    elements: Vec<TorusElement>,
}

impl CommutingTuple {
    pub fn new(elements: Vec<TorusElement>) -> Result<Self, RootDatumError> {
        let first = elements.first().ok_or(RootDatumError::EmptyTuple)?;
        let rank = first.rank();
        for e in &elements {
            if e.rank() != rank {
                return Err(RootDatumError::RankMismatch {
                    expected: rank,
                    found: e.rank(),
                });
            }
        }
        Ok(CommutingTuple { elements })
    }

    pub fn single(element: TorusElement) -> Self {
        CommutingTuple {
            elements: vec![element],
        }
    }

    pub fn pair(a: TorusElement, b: TorusElement) -> Result<Self, RootDatumError> {
        Self::new(vec![a, b])
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty tuples
    }

    pub fn rank(&self) -> usize {
        self.elements[0].rank()
    }

    pub fn elements(&self) -> &[TorusElement] {
        &self.elements
    }

    /// `g_1 ⋯ g_m`.
    pub fn product_element(&self) -> TorusElement {
        let mut acc = TorusElement::identity(self.rank());
        for e in &self.elements {
            acc = acc.product(e).expect("ranks checked at construction");
        }
        acc
    }

    /// The closing element `g_0 = (g_1 ⋯ g_m)^{-1}`.
    pub fn closure_element(&self) -> TorusElement {
        self.product_element().inverse()
    }

    /// Order of the generated subgroup, enumerated exactly when the product
    /// of element orders stays under `cap` (it always divides that product).
    pub fn subgroup_order_bounded(&self, cap: u64) -> Option<u64> {
        let mut budget: u64 = 1;
        for e in &self.elements {
            budget = budget.checked_mul(e.order_u64()?)?;
            if budget > cap {
                return None;
            }
        }
        // BFS closure under the generators; the group is finite, so
        // inverses are powers and need no separate handling.
        let mut group: BTreeSet<TorusElement> = BTreeSet::new();
        let mut queue = VecDeque::new();
        let id = TorusElement::identity(self.rank());
        group.insert(id.clone());
        queue.push_back(id);
        while let Some(g) = queue.pop_front() {
            for e in &self.elements {
                let h = g.product(e).expect("ranks checked at construction");
                if group.insert(h.clone()) {
                    queue.push_back(h);
                }
            }
        }
        Some(group.len() as u64)
    }
}

impl fmt::Display for CommutingTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Combinatorial centralizer data of a tuple: the positive roots pairing
/// integrally with every element, plus the resulting group dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CentralizerData {
    integral_roots: Vec<Weight>,
    dim: u64,
    rank: usize,
}

impl CentralizerData {
    /// Positive roots integral on the whole tuple, sorted.
    pub fn integral_roots(&self) -> &[Weight] {
        &self.integral_roots
    }

    /// Real dimension: `rank + 2·#integral_roots`.
    pub fn dim(&self) -> u64 {
        self.dim
    }

    /// The maximal torus rank (shared with the ambient group).
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Count of integral roots including negatives.
    pub fn full_root_count(&self) -> u64 {
        2 * self.integral_roots.len() as u64
    }
}

/// Row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
struct IMat {
    n: usize,
    a: Vec<i64>,
}

impl IMat {
    fn identity(n: usize) -> Self {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        IMat { n, a }
    }

    fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    fn mul(&self, other: &IMat) -> IMat {
        let n = self.n;
        let mut a = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let s = self.get(i, k);
                if s == 0 {
                    continue;
                }
                for j in 0..n {
                    a[i * n + j] += s * other.get(k, j);
                }
            }
        }
        IMat { n, a }
    }

    fn transpose(&self) -> IMat {
        let n = self.n;
        let mut a = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[j * n + i] = self.get(i, j);
            }
        }
        IMat { n, a }
    }

    fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    fn apply_rat(&self, v: &[Rat]) -> Vec<Rat> {
        (0..self.n)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.n {
                    let c = self.get(i, j);
                    if c != 0 {
                        acc += &v[j] * Rat::from_integer(BigInt::from(c));
                    }
                }
                acc
            })
            .collect()
    }
}

/// Root datum of a compact connected group in the simply-connected
/// normalization, with the full (finite) Weyl group enumerated up front.
#[derive(Clone, Debug)]
pub struct RootDatum {
    rank: usize,
    label: Option<String>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    weyl_generators: Vec<IMat>,
    weyl_torus_elements: Vec<IMat>,
}

impl RootDatum {
    /// Build from a label: `A1..A6`, `B2..B4`, `C2..C4`, `D4`, `G2`,
    /// torus factors `T1..T4`, and `x`-separated products such as `A1xA1`.
    pub fn from_label(label: &str) -> Result<Self, RootDatumError> {
        let mut rank = 0usize;
        // (row expressed in its factor's coordinates, column offset)
        let mut rows: Vec<(Vec<i64>, usize)> = Vec::new();
        for part in label.split('x') {
            let (factor_rank, factor_rows) = label_factor(part)
                .ok_or_else(|| RootDatumError::UnsupportedLabel(label.to_string()))?;
            for row in factor_rows {
                rows.push((row, rank));
            }
            rank += factor_rank;
        }
        if rank == 0 {
            return Err(RootDatumError::UnsupportedLabel(label.to_string()));
        }
        let mut padded = Vec::with_capacity(rows.len());
        for (row, offset) in rows {
            let mut full = vec![0i64; rank];
            full[offset..offset + row.len()].copy_from_slice(&row);
            padded.push(full);
        }
        Self::build(rank, padded, Some(label.to_string()))
    }

    /// Build from an explicit square matrix whose rows are the simple roots
    /// in weight coordinates. The normalization forces `rows[i][i] == 2`
    /// (each simple root pairs to 2 against its own coroot).
    pub fn from_simple_roots(rows: Vec<Vec<i64>>) -> Result<Self, RootDatumError> {
        let rank = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(RootDatumError::InvalidSimpleRoots(format!(
                    "row {i} has length {}, expected {rank}",
                    row.len()
                )));
            }
            if row[i] != 2 {
                return Err(RootDatumError::InvalidSimpleRoots(format!(
                    "row {i} has diagonal entry {}, expected 2",
                    row[i]
                )));
            }
        }
        Self::build(rank, rows, None)
    }

    fn build(
        rank: usize,
        simple_rows: Vec<Vec<i64>>,
        label: Option<String>,
    ) -> Result<Self, RootDatumError> {
        if rank > MAX_RANK {
            return Err(RootDatumError::RankTooLarge {
                rank,
                max: MAX_RANK,
            });
        }
        for row in &simple_rows {
            if row.iter().all(|&c| c == 0) {
                return Err(RootDatumError::InvalidSimpleRoots(
                    "zero simple root".to_string(),
                ));
            }
        }
        let rat_rows: Vec<Vec<Rat>> = simple_rows
            .iter()
            .map(|r| r.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
            .collect();
        if linalg::row_rank(&rat_rows) != simple_rows.len() {
            return Err(RootDatumError::InvalidSimpleRoots(
                "simple roots are linearly dependent".to_string(),
            ));
        }

        // Simple reflection on weights: s_i(λ) = λ - λ_i · α_i, where the
        // pairing against the i-th coroot reads off coordinate i. Each row
        // must sit at its own coordinate with pairing 2 for this to be an
        // involution; label-built data satisfy this by construction.
        let mut generators = Vec::with_capacity(simple_rows.len());
        let mut coroot_index = Vec::with_capacity(simple_rows.len());
        for row in &simple_rows {
            // Locate the coordinate this root reflects through.
            let idx = row
                .iter()
                .position(|&c| c == 2)
                .filter(|&i| {
                    // involution check happens below; position must pair to 2
                    row[i] == 2
                })
                .ok_or_else(|| {
                    RootDatumError::InvalidSimpleRoots(
                        "simple root has no coordinate pairing to 2".to_string(),
                    )
                })?;
            coroot_index.push(idx);
            let n = rank;
            let mut m = IMat::identity(n);
            for j in 0..n {
                m.a[j * n + idx] -= row[j];
            }
            // s_i(λ)_j = λ_j - λ_idx · row_j  ⇒ column `idx` adjusted.
            generators.push(m);
        }
        for (g, row) in generators.iter().zip(&simple_rows) {
            let sq = g.mul(g);
            if sq != IMat::identity(rank) {
                return Err(RootDatumError::InvalidSimpleRoots(format!(
                    "reflection for root {} is not an involution",
                    Weight(row.clone())
                )));
            }
        }

        // Reflection closure of the simple roots.
        let mut roots: BTreeSet<Vec<i64>> = simple_rows.iter().cloned().collect();
        let mut queue: VecDeque<Vec<i64>> = roots.iter().cloned().collect();
        while let Some(v) = queue.pop_front() {
            for g in &generators {
                let w = g.apply(&v);
                if roots.insert(w.clone()) {
                    if roots.len() > ROOT_BOUND {
                        return Err(RootDatumError::RootClosureExceeded { bound: ROOT_BOUND });
                    }
                    queue.push_back(w);
                }
            }
        }

        for v in &roots {
            if v.iter().all(|&c| c == 0) {
                return Err(RootDatumError::InvalidSimpleRoots(
                    "reflection closure contains the zero vector".to_string(),
                ));
            }
            let neg: Vec<i64> = v.iter().map(|c| -c).collect();
            if !roots.contains(&neg) {
                return Err(RootDatumError::InvalidSimpleRoots(format!(
                    "root set not closed under negation at {}",
                    Weight(v.clone())
                )));
            }
        }
        for g in &generators {
            for v in &roots {
                if !roots.contains(&g.apply(v)) {
                    return Err(RootDatumError::InvalidSimpleRoots(
                        "a Weyl generator does not permute the root set".to_string(),
                    ));
                }
            }
        }

        // Positivity: expand in the simple roots; coefficients carry one sign.
        let mut positive_roots = Vec::new();
        for v in &roots {
            let coeffs = linalg::expand_in_rows(&rat_rows, v).ok_or_else(|| {
                RootDatumError::InvalidSimpleRoots(format!(
                    "root {} does not lie in the span of the simple roots",
                    Weight(v.clone())
                ))
            })?;
            let pos = coeffs.iter().all(|c| !c.is_negative());
            let neg = coeffs.iter().all(|c| !c.is_positive());
            if pos == neg {
                return Err(RootDatumError::InvalidSimpleRoots(format!(
                    "root {} has mixed-sign simple coefficients",
                    Weight(v.clone())
                )));
            }
            if pos {
                positive_roots.push(Weight(v.clone()));
            }
        }
        positive_roots.sort();

        // Full Weyl group in the torus representation (transposed
        // generators; reflections are involutions so transpose = inverse
        // transpose, and the pairing is preserved).
        let torus_generators: Vec<IMat> = generators.iter().map(IMat::transpose).collect();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut elements: Vec<IMat> = Vec::new();
        let id = IMat::identity(rank);
        seen.insert(id.a.clone());
        elements.push(id);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for g in &torus_generators {
                let next = g.mul(&current);
                if seen.insert(next.a.clone()) {
                    if elements.len() + 1 > WEYL_BOUND {
                        return Err(RootDatumError::WeylClosureExceeded { bound: WEYL_BOUND });
                    }
                    elements.push(next);
                }
            }
        }

        Ok(RootDatum {
            rank,
            label,
            simple_roots: simple_rows.into_iter().map(Weight).collect(),
            positive_roots,
            weyl_generators: generators,
            weyl_torus_elements: elements,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// All roots, negatives included, sorted.
    pub fn all_roots(&self) -> Vec<Weight> {
        let mut all: Vec<Weight> = self
            .positive_roots
            .iter()
            .flat_map(|w| [w.clone(), w.neg()])
            .collect();
        all.sort();
        all
    }

    /// Simple-reflection matrices acting on weight coordinates, row-major.
    pub fn weyl_generators(&self) -> Vec<Vec<Vec<i64>>> {
        self.weyl_generators
            .iter()
            .map(|m| {
                (0..m.n)
                    .map(|i| (0..m.n).map(|j| m.get(i, j)).collect())
                    .collect()
            })
            .collect()
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl_torus_elements.len()
    }

    pub fn is_abelian(&self) -> bool {
        self.positive_roots.is_empty()
    }

    /// Real dimension of the group: `rank + #roots`.
    pub fn dim(&self) -> u64 {
        self.rank as u64 + 2 * self.positive_roots.len() as u64
    }

    fn check_rank(&self, found: usize) -> Result<(), RootDatumError> {
        if found != self.rank {
            return Err(RootDatumError::RankMismatch {
                expected: self.rank,
                found,
            });
        }
        Ok(())
    }

    /// Weyl orbit of a torus element, sorted, duplicates removed.
    pub fn weyl_orbit(&self, t: &TorusElement) -> Result<Vec<TorusElement>, RootDatumError> {
        self.check_rank(t.rank())?;
        let gens: Vec<IMat> = self.weyl_generators.iter().map(IMat::transpose).collect();
        let bound = 2 * self.weyl_order();
        let mut orbit: BTreeSet<TorusElement> = BTreeSet::new();
        let mut queue = VecDeque::new();
        orbit.insert(t.clone());
        queue.push_back(t.clone());
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.apply_matrix(g);
                if orbit.insert(y.clone()) {
                    if orbit.len() > bound {
                        return Err(RootDatumError::OrbitBoundExceeded { bound });
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(orbit.into_iter().collect())
    }

    /// Lexicographically smallest member of the Weyl orbit.
    pub fn weyl_canonical(&self, t: &TorusElement) -> Result<TorusElement, RootDatumError> {
        Ok(self
            .weyl_orbit(t)?
            .into_iter()
            .next()
            .expect("orbit contains its seed"))
    }

    /// Diagonal Weyl images of a tuple: one image tuple per Weyl element,
    /// with the same group element applied to every entry. The identity
    /// image is included.
    pub fn weyl_tuple_images(
        &self,
        tuple: &CommutingTuple,
    ) -> Result<Vec<CommutingTuple>, RootDatumError> {
        self.check_rank(tuple.rank())?;
        Ok(self
            .weyl_torus_elements
            .iter()
            .map(|w| CommutingTuple {
                elements: tuple.elements().iter().map(|t| t.apply_matrix(w)).collect(),
            })
            .collect())
    }

    /// Integral-root data of the tuple's centralizer.
    ///
    /// The centralizer of a torus tuple is connected in the
    /// simply-connected normalization, so it is determined by the set of
    /// roots pairing integrally with every tuple element; its dimension is
    /// `rank + 2·#(positive integral roots)`.
    pub fn centralizer(
        &self,
        tuple: &CommutingTuple,
    ) -> Result<CentralizerData, RootDatumError> {
        self.check_rank(tuple.rank())?;
        let integral_roots: Vec<Weight> = self
            .positive_roots
            .iter()
            .filter(|root| {
                tuple
                    .elements()
                    .iter()
                    .all(|t| frac_mod1(&root.pairing(t)).is_zero())
            })
            .cloned()
            .collect();
        // Integral roots are closed under root addition: pairing is linear.
        for a in &integral_roots {
            for b in &integral_roots {
                let sum = a.add(b);
                if self.positive_roots.contains(&sum) {
                    assert!(
                        integral_roots.contains(&sum),
                        "integral root set not closed under addition"
                    );
                }
            }
        }
        let dim = self.rank as u64 + 2 * integral_roots.len() as u64;
        Ok(CentralizerData {
            integral_roots,
            dim,
            rank: self.rank,
        })
    }

    /// Dimension of the fiber `C(sub)/C(tuple)` for a tuple refining `sub`
    /// (sub-list or product closure), always even because centralizer
    /// dimensions differ by twice a root count.
    pub fn fiber_dimension(
        &self,
        tuple: &CommutingTuple,
        sub: &CommutingTuple,
    ) -> Result<u64, RootDatumError> {
        let cen_tuple = self.centralizer(tuple)?;
        let cen_sub = self.centralizer(sub)?;
        for root in cen_tuple.integral_roots() {
            if !cen_sub.integral_roots().contains(root) {
                return Err(RootDatumError::ContainmentViolated(format!(
                    "root {root} is integral on the tuple but not on the subtuple; \
                     C(tuple) is not contained in C(sub)"
                )));
            }
        }
        let fiber = cen_sub.dim() - cen_tuple.dim();
        debug_assert_eq!(fiber % 2, 0);
        Ok(fiber)
    }

    /// Deterministic Lie-algebra vector whose vanishing root set equals the
    /// tuple's integral root set, when one exists.
    ///
    /// The search space is the annihilator of the integral roots. A vector
    /// with the exact vanishing set exists iff no further root vanishes
    /// identically on that subspace; the failure case is real (for example
    /// the order-2 class in `G2` whose centralizer is the non-Levi subgroup
    /// `SO(4)`) and is reported as [`RootDatumError::NonLeviClass`].
    ///
    /// The search enumerates integer combinations of a canonical basis of
    /// the annihilator by increasing sup-norm, lexicographically within each
    /// shell, and returns the first combination avoiding every other root
    /// hyperplane. With at most `#Φ⁺ ≤ 120` hyperplanes a shell of radius
    /// 121 always contains a valid point, so the cap below is unreachable.
    pub fn regular_alpha(
        &self,
        tuple: &CommutingTuple,
    ) -> Result<Vec<Rat>, RootDatumError> {
        let cen = self.centralizer(tuple)?;
        let integral: BTreeSet<&Weight> = cen.integral_roots().iter().collect();
        let rows: Vec<Vec<Rat>> = cen
            .integral_roots()
            .iter()
            .map(|w| {
                w.0.iter()
                    .map(|&c| Rat::from_integer(BigInt::from(c)))
                    .collect()
            })
            .collect();
        let basis = linalg::integer_kernel_basis(&rows, self.rank);

        let pair_int = |root: &Weight, vec: &[i64]| -> i64 {
            root.0.iter().zip(vec).map(|(a, b)| a * b).sum()
        };
        let vanishing_on_all: Vec<Weight> = self
            .positive_roots
            .iter()
            .filter(|root| basis.iter().all(|b| pair_int(root, b) == 0))
            .cloned()
            .collect();
        let extra: Vec<Weight> = vanishing_on_all
            .iter()
            .filter(|r| !integral.contains(*r))
            .cloned()
            .collect();
        if !extra.is_empty() {
            return Err(RootDatumError::NonLeviClass { extra_roots: extra });
        }

        let others: Vec<&Weight> = self
            .positive_roots
            .iter()
            .filter(|r| !integral.contains(*r))
            .collect();
        let k = basis.len();
        if k == 0 {
            // Annihilator is {0}; reachable only when every root is integral.
            return Ok(vec![Rat::zero(); self.rank]);
        }
        let max_radius: i64 = 130;
        let mut coeffs = vec![0i64; k];
        for radius in 0..=max_radius {
            let found = search_shell(&mut coeffs, 0, radius, false, &mut |c| {
                let alpha: Vec<i64> = (0..self.rank)
                    .map(|j| {
                        c.iter()
                            .zip(&basis)
                            .map(|(&ci, b)| ci * b[j])
                            .sum::<i64>()
                    })
                    .collect();
                others.iter().all(|r| pair_int(r, &alpha) != 0).then_some(alpha)
            });
            if let Some(alpha) = found {
                return Ok(alpha
                    .into_iter()
                    .map(|c| Rat::from_integer(BigInt::from(c)))
                    .collect());
            }
        }
        Err(RootDatumError::SearchExhausted)
    }

    /// Positive roots vanishing on a rational vector, sorted.
    pub fn vanishing_roots(&self, alpha: &[Rat]) -> Vec<Weight> {
        self.positive_roots
            .iter()
            .filter(|root| {
                let mut acc = Rat::zero();
                for (c, x) in root.0.iter().zip(alpha) {
                    acc += x * Rat::from_integer(BigInt::from(*c));
                }
                acc.is_zero()
            })
            .cloned()
            .collect()
    }

    /// Diagonal-Weyl classes of tuples drawn from the orbits of
    /// `class_reps`: the Cartesian product of the orbits, deduplicated by
    /// the simultaneous Weyl action, one lexicographically minimal
    /// representative per class, sorted.
    ///
    /// Classes are tuple classes for the diagonal Weyl action; no claim is
    /// made that they biject with conjugacy classes of commuting tuples in
    /// the ambient group.
    pub fn tuple_classes(
        &self,
        class_reps: &[TorusElement],
    ) -> Result<Vec<CommutingTuple>, RootDatumError> {
        const CANDIDATE_BOUND: usize = 1_000_000;
        let orbits: Vec<Vec<TorusElement>> = class_reps
            .iter()
            .map(|t| self.weyl_orbit(t))
            .collect::<Result<_, _>>()?;
        if orbits.is_empty() {
            return Ok(Vec::new());
        }
        let mut total: usize = 1;
        for o in &orbits {
            total = total.saturating_mul(o.len());
            if total > CANDIDATE_BOUND {
                return Err(RootDatumError::ClassBoundExceeded {
                    bound: CANDIDATE_BOUND,
                });
            }
        }
        let mut canonical: BTreeSet<Vec<TorusElement>> = BTreeSet::new();
        let mut indices = vec![0usize; orbits.len()];
        loop {
            let tuple: Vec<TorusElement> = indices
                .iter()
                .zip(&orbits)
                .map(|(&i, o)| o[i].clone())
                .collect();
            canonical.insert(self.canonical_tuple(&tuple));
            // advance multi-index
            let mut pos = orbits.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                indices[pos] += 1;
                if indices[pos] < orbits[pos].len() {
                    break;
                }
                indices[pos] = 0;
                if pos == 0 {
                    return Ok(canonical
                        .into_iter()
                        .map(|els| CommutingTuple { elements: els })
                        .collect());
                }
            }
        }
    }

    fn canonical_tuple(&self, tuple: &[TorusElement]) -> Vec<TorusElement> {
        let mut best: Option<Vec<TorusElement>> = None;
        for w in &self.weyl_torus_elements {
            let image: Vec<TorusElement> = tuple.iter().map(|t| t.apply_matrix(w)).collect();
            if best.as_ref().map_or(true, |b| image < *b) {
                best = Some(image);
            }
        }
        best.expect("Weyl group contains the identity")
    }
}

/// Depth-first enumeration of coefficient vectors with sup-norm exactly
/// `radius` (lexicographic order), returning the first value `f` accepts.
fn search_shell(
    coeffs: &mut Vec<i64>,
    depth: usize,
    radius: i64,
    shell_hit: bool,
    f: &mut impl FnMut(&[i64]) -> Option<Vec<i64>>,
) -> Option<Vec<i64>> {
    if depth == coeffs.len() {
        if !shell_hit && radius != 0 {
            return None; // interior point, already tried at a smaller radius
        }
        return f(coeffs);
    }
    let mut c = -radius;
    while c <= radius {
        coeffs[depth] = c;
        let hit = shell_hit || c.abs() == radius;
        if let Some(found) = search_shell(coeffs, depth + 1, radius, hit, f) {
            return Some(found);
        }
        c += 1;
    }
    None
}

/// All torus elements of the given rank whose order (lcm of entry
/// denominators) is at most `max_order`, sorted.
pub fn enumerate_torus_elements(rank: usize, max_order: u64) -> Vec<TorusElement> {
    let mut fractions = vec![Rat::zero()];
    for q in 2..=max_order {
        for p in 1..q {
            if num::integer::gcd(p, q) == 1 {
                fractions.push(Rat::new(BigInt::from(p), BigInt::from(q)));
            }
        }
    }
    fractions.sort();
    let mut out = Vec::new();
    let mut indices = vec![0usize; rank];
    'outer: loop {
        let entries: Vec<Rat> = indices.iter().map(|&i| fractions[i].clone()).collect();
        let elem = TorusElement::new(entries).expect("denominators bounded by max_order");
        if elem.order() <= BigInt::from(max_order) {
            out.push(elem);
        }
        for pos in (0..rank).rev() {
            indices[pos] += 1;
            if indices[pos] < fractions.len() {
                continue 'outer;
            }
            indices[pos] = 0;
        }
        break;
    }
    out.sort();
    out
}

fn label_factor(part: &str) -> Option<(usize, Vec<Vec<i64>>)> {
    if part.len() < 2 || !part.is_ascii() {
        return None;
    }
    let (family, digits) = part.split_at(1);
    let n: usize = digits.parse().ok()?;
    let chain = |n: usize| -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| {
                let mut row = vec![0i64; n];
                row[i] = 2;
                if i > 0 {
                    row[i - 1] = -1;
                }
                if i + 1 < n {
                    row[i + 1] = -1;
                }
                row
            })
            .collect()
    };
    match family {
        "A" if (1..=6).contains(&n) => Some((n, chain(n))),
        "B" if (2..=4).contains(&n) => {
            let mut rows = chain(n);
            rows[n - 1][n - 2] = -2;
            Some((n, rows))
        }
        "C" if (2..=4).contains(&n) => {
            let mut rows = chain(n);
            rows[n - 2][n - 1] = -2;
            Some((n, rows))
        }
        "D" if n == 4 => {
            let mut rows = chain(n - 1);
            for row in &mut rows {
                row.push(0);
            }
            let mut last = vec![0i64; n];
            last[n - 1] = 2;
            last[n - 3] = -1;
            rows[n - 3][n - 1] = -1;
            rows.push(last);
            Some((n, rows))
        }
        "G" if n == 2 => Some((2, vec![vec![2, -1], vec![-3, 2]])),
        "T" if (1..=4).contains(&n) => Some((n, Vec::new())),
        _ => None,
    }
}

mod linalg {
    //! Exact rational row reduction, kernel bases, and expansion solves.

    use super::Rat;
    use num::bigint::BigInt;
    use num::Zero;

    /// Reduced row echelon form in place; returns pivot column per row used.
    fn rref(mat: &mut Vec<Vec<Rat>>) -> Vec<usize> {
        let rows = mat.len();
        if rows == 0 {
            return Vec::new();
        }
        let cols = mat[0].len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
                continue;
            };
            mat.swap(r, p);
            let inv = mat[r][c].clone();
            for x in mat[r].iter_mut() {
                *x /= &inv;
            }
            for i in 0..rows {
                if i != r && !mat[i][c].is_zero() {
                    let factor = mat[i][c].clone();
                    for j in 0..cols {
                        let delta = &factor * &mat[r][j];
                        mat[i][j] -= delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        pivots
    }

    pub fn row_rank(rows: &[Vec<Rat>]) -> usize {
        let mut m = rows.to_vec();
        rref(&mut m).len()
    }

    /// Canonical integer basis of `{x : rows · x = 0}` in `ℚ^n`, one vector
    /// per free column in column order, denominators cleared, first nonzero
    /// entry positive.
    pub fn integer_kernel_basis(rows: &[Vec<Rat>], n: usize) -> Vec<Vec<i64>> {
        if rows.is_empty() {
            return (0..n)
                .map(|i| {
                    let mut v = vec![0i64; n];
                    v[i] = 1;
                    v
                })
                .collect();
        }
        let mut m = rows.to_vec();
        let pivots = rref(&mut m);
        let mut basis = Vec::new();
        for free in 0..n {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); n];
            v[free] = Rat::from_integer(BigInt::from(1));
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -m[row][free].clone();
            }
            let lcm = crate::rational::denominator_lcm(&v);
            let mut iv: Vec<i64> = v
                .iter()
                .map(|x| {
                    let scaled = x * Rat::from_integer(lcm.clone());
                    scaled
                        .to_integer()
                        .try_into()
                        .expect("kernel basis entry fits in i64")
                })
                .collect();
            if let Some(first) = iv.iter().find(|&&c| c != 0) {
                if *first < 0 {
                    for c in iv.iter_mut() {
                        *c = -*c;
                    }
                }
            }
            basis.push(iv);
        }
        basis
    }

    /// Coefficients expressing `target` in the given independent rows, if it
    /// lies in their span.
    pub fn expand_in_rows(rows: &[Vec<Rat>], target: &[i64]) -> Option<Vec<Rat>> {
        let n = target.len();
        let s = rows.len();
        // Columns of the system are the rows (transposed), augmented.
        let mut m: Vec<Vec<Rat>> = (0..n)
            .map(|j| {
                let mut row: Vec<Rat> = rows.iter().map(|r| r[j].clone()).collect();
                row.push(Rat::from_integer(BigInt::from(target[j])));
                row
            })
            .collect();
        let pivots = rref(&mut m);
        if pivots.contains(&s) {
            return None; // inconsistent
        }
        let mut coeffs = vec![Rat::zero(); s];
        for (row, &p) in pivots.iter().enumerate() {
            coeffs[p] = m[row][s].clone();
        }
        Some(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use std::collections::HashSet;

    fn t(entries: &[&str]) -> TorusElement {
        TorusElement::from_strs(entries).unwrap()
    }

    /// Independent closure oracle: saturate a hash set by applying the
    /// generator matrices until stable, with no positivity bookkeeping.
    fn brute_force_root_count(rd: &RootDatum) -> usize {
        let gens = rd.weyl_generators();
        let apply = |m: &Vec<Vec<i64>>, v: &Vec<i64>| -> Vec<i64> {
            (0..v.len())
                .map(|i| (0..v.len()).map(|j| m[i][j] * v[j]).sum())
                .collect()
        };
        let mut set: HashSet<Vec<i64>> = rd
            .simple_roots()
            .iter()
            .map(|w| w.0.clone())
            .collect();
        loop {
            let mut next = set.clone();
            for v in &set {
                for g in &gens {
                    next.insert(apply(g, v));
                }
            }
            if next.len() == set.len() {
                return set.len();
            }
            set = next;
        }
    }

    #[test]
    fn positive_root_counts_match_brute_force_closure() {
        // Closed-form counts for the supported families, frozen here, and
        // cross-checked against an independent saturation of the closure.
        for (label, expect_positive) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("C2", 4),
            ("B3", 9),
            ("G2", 6),
            ("D4", 12),
            ("A1xA1", 2),
            ("A2xA1", 4),
            ("T2", 0),
            ("A1xT1", 1),
        ] {
            let rd = RootDatum::from_label(label).unwrap();
            assert_eq!(
                rd.positive_roots().len(),
                expect_positive,
                "positive root count for {label}"
            );
            assert_eq!(
                brute_force_root_count(&rd),
                2 * expect_positive,
                "brute-force closure for {label}"
            );
        }
    }

    #[test]
    fn weyl_orders() {
        for (label, order) in [
            ("A1", 2),
            ("A2", 6),
            ("B2", 8),
            ("G2", 12),
            ("A1xA1", 4),
            ("A3", 24),
            ("D4", 192),
            ("T3", 1),
        ] {
            assert_eq!(
                RootDatum::from_label(label).unwrap().weyl_order(),
                order,
                "Weyl order for {label}"
            );
        }
    }

    #[test]
    fn generators_permute_roots_and_negation_closes() {
        for label in ["A2", "B2", "G2", "D4", "A2xB2"] {
            let rd = RootDatum::from_label(label).unwrap();
            let all: BTreeSet<Weight> = rd.all_roots().into_iter().collect();
            assert_eq!(all.len(), 2 * rd.positive_roots().len());
            for w in &all {
                assert!(all.contains(&w.neg()));
                assert!(!w.is_zero());
            }
        }
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        assert!(matches!(
            RootDatum::from_label("E8"),
            Err(RootDatumError::UnsupportedLabel(_))
        ));
        assert!(matches!(
            RootDatum::from_label("A0"),
            Err(RootDatumError::UnsupportedLabel(_))
        ));
        assert!(RootDatum::from_label("A2x").is_err());
        // dependent rows
        assert!(matches!(
            RootDatum::from_simple_roots(vec![vec![2, -1], vec![2, -1]]),
            Err(RootDatumError::InvalidSimpleRoots(_))
        ));
        // wrong diagonal
        assert!(matches!(
            RootDatum::from_simple_roots(vec![vec![1, 0], vec![0, 2]]),
            Err(RootDatumError::InvalidSimpleRoots(_))
        ));
        // affine-type matrix: rows are opposite roots, hence dependent
        assert!(matches!(
            RootDatum::from_simple_roots(vec![vec![2, -2], vec![-2, 2]]),
            Err(RootDatumError::InvalidSimpleRoots(_))
        ));
        // hyperbolic-type matrix: reflection closure is infinite
        assert!(matches!(
            RootDatum::from_simple_roots(vec![vec![2, -5], vec![-1, 2]]),
            Err(RootDatumError::RootClosureExceeded { .. })
        ));
        // rank cap
        assert!(matches!(
            RootDatum::from_label("A4xA3"),
            Err(RootDatumError::RankTooLarge { .. })
        ));
    }

    #[test]
    fn torus_element_reduction_and_order() {
        let x = TorusElement::new(vec![rat(5, 4), rat(-1, 3)]).unwrap();
        assert_eq!(x.entries()[0], rat(1, 4));
        assert_eq!(x.entries()[1], rat(2, 3));
        assert_eq!(x.order_u64(), Some(12));
        assert!(x.product(&x.inverse()).unwrap().is_identity());
        assert!(matches!(
            TorusElement::with_denominator_bound(vec![rat(1, 7)], 6),
            Err(RootDatumError::DenominatorTooLarge { .. })
        ));
    }

    #[test]
    fn orbit_of_one_third_in_a1() {
        let rd = RootDatum::from_label("A1").unwrap();
        let orbit = rd.weyl_orbit(&t(&["1/3"])).unwrap();
        assert_eq!(orbit, vec![t(&["1/3"]), t(&["2/3"])]);
        let fixed = rd.weyl_orbit(&TorusElement::identity(1)).unwrap();
        assert_eq!(fixed, vec![TorusElement::identity(1)]);
        // every generator maps the orbit into itself
        assert_eq!(rd.weyl_canonical(&t(&["2/3"])).unwrap(), t(&["1/3"]));
    }

    #[test]
    fn orbit_closure_property_random_elements() {
        for label in ["A2", "B2", "G2"] {
            let rd = RootDatum::from_label(label).unwrap();
            for seed in [("1/3", "0"), ("1/4", "1/2"), ("1/5", "2/5")] {
                let orbit = rd.weyl_orbit(&t(&[seed.0, seed.1])).unwrap();
                let set: BTreeSet<_> = orbit.iter().cloned().collect();
                assert!(orbit.len() <= rd.weyl_order());
                for gen in rd.weyl_generators.iter().map(IMat::transpose) {
                    for x in &orbit {
                        assert!(set.contains(&x.apply_matrix(&gen)));
                    }
                }
            }
        }
    }

    #[test]
    fn centralizer_dimensions_in_a1() {
        let rd = RootDatum::from_label("A1").unwrap();
        let cases = [("0", 3u64), ("1/2", 3), ("1/4", 1), ("1/3", 1)];
        for (entry, dim) in cases {
            let tuple = CommutingTuple::single(t(&[entry]));
            let cen = rd.centralizer(&tuple).unwrap();
            assert_eq!(cen.dim(), dim, "dim C for t = {entry}");
        }
        // identity tuple: full group
        let cen = rd
            .centralizer(&CommutingTuple::single(TorusElement::identity(1)))
            .unwrap();
        assert_eq!(cen.dim(), rd.dim());
    }

    #[test]
    fn centralizer_is_reorder_invariant_and_at_least_torus() {
        let rd = RootDatum::from_label("B2").unwrap();
        let a = t(&["1/2", "1/4"]);
        let b = t(&["1/3", "0"]);
        let ab = CommutingTuple::new(vec![a.clone(), b.clone()]).unwrap();
        let ba = CommutingTuple::new(vec![b, a]).unwrap();
        let da = rd.centralizer(&ab).unwrap().dim();
        let db = rd.centralizer(&ba).unwrap().dim();
        assert_eq!(da, db);
        assert!(da >= rd.rank() as u64);
    }

    #[test]
    fn fiber_dimensions_match_hand_counts() {
        let rd = RootDatum::from_label("A1").unwrap();
        let quarter = t(&["1/4"]);
        let tuple = CommutingTuple::pair(quarter.clone(), quarter.clone()).unwrap();
        let product = CommutingTuple::single(tuple.product_element());
        assert_eq!(product.elements()[0], t(&["1/2"]));
        assert_eq!(rd.fiber_dimension(&tuple, &product).unwrap(), 2);
        assert_eq!(rd.fiber_dimension(&tuple, &tuple).unwrap(), 0);

        let rd2 = RootDatum::from_label("A2").unwrap();
        let g = t(&["1/5", "1/5"]);
        let pair = CommutingTuple::pair(g.clone(), g.inverse()).unwrap();
        let prod = CommutingTuple::single(pair.product_element());
        assert_eq!(rd2.centralizer(&pair).unwrap().dim(), 2);
        assert_eq!(rd2.centralizer(&prod).unwrap().dim(), 8);
        assert_eq!(rd2.fiber_dimension(&pair, &prod).unwrap(), 6);

        // containment violation: the tuple centralizes more than the sub
        let err = rd.fiber_dimension(
            &CommutingTuple::single(t(&["1/2"])),
            &CommutingTuple::single(t(&["1/4"])),
        );
        assert!(matches!(err, Err(RootDatumError::ContainmentViolated(_))));
    }

    #[test]
    fn regular_alpha_on_levi_classes() {
        let rd = RootDatum::from_label("A1").unwrap();
        // identity: alpha = 0, vanishing set = all roots
        let alpha = rd
            .regular_alpha(&CommutingTuple::single(TorusElement::identity(1)))
            .unwrap();
        assert_eq!(rd.vanishing_roots(&alpha), rd.positive_roots().to_vec());
        // order 4: no integral roots, alpha misses the single hyperplane
        let alpha = rd
            .regular_alpha(&CommutingTuple::single(t(&["1/4"])))
            .unwrap();
        assert!(rd.vanishing_roots(&alpha).is_empty());

        // A2, order-5 element with empty integral set: three hyperplanes avoided
        let rd2 = RootDatum::from_label("A2").unwrap();
        let g = CommutingTuple::single(t(&["1/5", "1/5"]));
        assert!(rd2.centralizer(&g).unwrap().integral_roots().is_empty());
        let alpha = rd2.regular_alpha(&g).unwrap();
        assert!(rd2.vanishing_roots(&alpha).is_empty());
    }

    #[test]
    fn regular_alpha_detects_non_levi_centralizers() {
        // Order-2 class in G2 with centralizer SO(4): the two integral
        // roots span the plane, so no Lie-algebra vector realizes it.
        let rd = RootDatum::from_label("G2").unwrap();
        let g = CommutingTuple::single(t(&["1/2", "0"]));
        let cen = rd.centralizer(&g).unwrap();
        assert_eq!(cen.integral_roots().len(), 2);
        assert_eq!(cen.dim(), 6);
        assert!(matches!(
            rd.regular_alpha(&g),
            Err(RootDatumError::NonLeviClass { .. })
        ));

        // Same phenomenon for B2 at the order-2 class with both long roots
        // integral (centralizer SU(2)×SU(2)).
        let rd = RootDatum::from_label("B2").unwrap();
        let g = CommutingTuple::single(t(&["1/2", "1/2"]));
        let cen = rd.centralizer(&g).unwrap();
        assert_eq!(cen.integral_roots().len(), 2);
        assert!(matches!(
            rd.regular_alpha(&g),
            Err(RootDatumError::NonLeviClass { .. })
        ));
    }

    #[test]
    fn regular_alpha_exhaustive_on_a_type_rank_two() {
        // Exhaustive over order ≤ 6 elements: A-type and torus data always
        // admit a realizing vector and the vanishing set matches exactly.
        for label in ["A1", "A1xA1", "A2", "T2"] {
            let rd = RootDatum::from_label(label).unwrap();
            for elem in enumerate_torus_elements(rd.rank(), 6) {
                let tuple = CommutingTuple::single(elem.clone());
                let cen = rd.centralizer(&tuple).unwrap();
                let alpha = rd.regular_alpha(&tuple).unwrap_or_else(|e| {
                    panic!("{label}: unexpected failure at {elem}: {e}")
                });
                assert_eq!(
                    rd.vanishing_roots(&alpha),
                    cen.integral_roots().to_vec(),
                    "{label} at {elem}"
                );
            }
        }
    }

    #[test]
    fn tuple_classes_match_brute_force_quotient() {
        let rd = RootDatum::from_label("A1").unwrap();
        let third = t(&["1/3"]);
        let classes = rd
            .tuple_classes(&[third.clone(), third.clone()])
            .unwrap();
        // Brute force: 4 orbit pairs, diagonal action {id, negation}.
        let orbit = rd.weyl_orbit(&third).unwrap();
        let mut quotient: BTreeSet<Vec<TorusElement>> = BTreeSet::new();
        for a in &orbit {
            for b in &orbit {
                let raw = vec![a.clone(), b.clone()];
                let negated = vec![a.inverse(), b.inverse()];
                quotient.insert(raw.min(negated));
            }
        }
        assert_eq!(classes.len(), quotient.len());
        assert_eq!(classes.len(), 2);
        let got: BTreeSet<Vec<TorusElement>> = classes
            .iter()
            .map(|c| c.elements().to_vec())
            .collect();
        assert_eq!(got, quotient);
    }

    #[test]
    fn tuple_class_count_is_representative_independent() {
        let rd = RootDatum::from_label("A2").unwrap();
        let rep = t(&["1/3", "0"]);
        let orbit = rd.weyl_orbit(&rep).unwrap();
        let baseline = rd.tuple_classes(&[rep.clone(), rep.clone()]).unwrap().len();
        for other in &orbit {
            let count = rd
                .tuple_classes(&[other.clone(), rep.clone()])
                .unwrap()
                .len();
            assert_eq!(count, baseline);
        }
    }

    #[test]
    fn element_enumeration_counts() {
        // rank 1: totient sums 1+1+2+2+4+2 up to order 6
        assert_eq!(enumerate_torus_elements(1, 1).len(), 1);
        assert_eq!(enumerate_torus_elements(1, 2).len(), 2);
        assert_eq!(enumerate_torus_elements(1, 6).len(), 12);
        // rank 2, order ≤ 2: entries in {0, 1/2}
        assert_eq!(enumerate_torus_elements(2, 2).len(), 4);
        // order filter: (1/2, 1/3) has order 6 > 3 and is excluded
        let elems = enumerate_torus_elements(2, 3);
        assert!(!elems.contains(&TorusElement::from_strs(&["1/2", "1/3"]).unwrap()));
        assert_eq!(elems.len(), 1 + 3 + 2 * 4); // id, order-2 pairs, order-3 pairs
    }

    #[test]
    fn subgroup_order_divides_product_of_orders() {
        let tuple = CommutingTuple::new(vec![t(&["1/2", "0"]), t(&["0", "1/3"])]).unwrap();
        assert_eq!(tuple.subgroup_order_bounded(1000), Some(6));
        let tuple = CommutingTuple::new(vec![t(&["1/4", "0"]), t(&["1/2", "0"])]).unwrap();
        // second generator lies in the first's cyclic group
        assert_eq!(tuple.subgroup_order_bounded(1000), Some(4));
    }
}
