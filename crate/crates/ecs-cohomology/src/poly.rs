//! Sparse multivariate polynomials over the rationals.
//!
//! Coefficients live in `ℚ[x_1, …, x_r]` with exact [`Rat`] arithmetic and a
//! fixed arity per polynomial. Zero coefficients are pruned eagerly so that
//! structural equality is semantic equality. The only division this crate
//! needs is exact division by a nonzero linear form, which is what the GKM
//! edge condition and the localization sums ask for.

use crate::rational::{format_rat, Rat};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in `arity` variables with rational coefficients.
///
/// Terms map exponent vectors (length `arity`) to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    pub fn zero(arity: usize) -> Self {
        Poly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rat::one())
    }

    pub fn constant(arity: usize, c: Rat) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(vec![0; arity], c);
        }
        p
    }

    /// The variable `x_i` (zero-based).
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index {i} out of range for arity {arity}");
        let mut e = vec![0; arity];
        e[i] = 1;
        let mut p = Self::zero(arity);
        p.terms.insert(e, Rat::one());
        p
    }

    /// The linear form `Σ coeffs[i]·x_i`.
    pub fn linear_form(coeffs: &[i64]) -> Self {
        let mut p = Self::zero(coeffs.len());
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                let mut e = vec![0; coeffs.len()];
                e[i] = 1;
                p.terms.insert(e, Rat::from_integer(c.into()));
            }
        }
        p
    }

    /// Build from raw `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms(
        arity: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Rat)>,
    ) -> Result<Self, String> {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            if e.len() != arity {
                return Err(format!(
                    "exponent vector of length {} in polynomial of arity {arity}",
                    e.len()
                ));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_arity(&self, other: &Poly) {
        assert_eq!(
            self.arity, other.arity,
            "polynomial arity mismatch ({} vs {})",
            self.arity, other.arity
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check_arity(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check_arity(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        let mut out = Self::zero(self.arity);
        for (e, k) in &self.terms {
            out.terms.insert(e.clone(), k * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_arity(other);
        let mut out = Self::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Self::one(self.arity);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Maximum total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `Some(d)` iff nonzero and every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for e in self.terms.keys() {
            let d: u32 = e.iter().sum();
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 == d => {}
                Some(_) => return None,
            }
        }
        deg
    }

    /// Exact division by the linear form `Σ coeffs[i]·x_i`.
    ///
    /// Returns `Some(q)` with `q·L == self` when the division is exact,
    /// `None` otherwise. Panics if the form is identically zero.
    pub fn divide_by_linear(&self, coeffs: &[i64]) -> Option<Poly> {
        assert_eq!(coeffs.len(), self.arity, "linear form arity mismatch");
        let pivot = coeffs
            .iter()
            .position(|&c| c != 0)
            .expect("division by the zero linear form");
        let pivot_coeff = Rat::from_integer(coeffs[pivot].into());
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.arity);
        // Synthetic division in the pivot variable: cancel the top
        // pivot-degree slice of the remainder at each step.
        loop {
            let d = match rem.terms.keys().map(|e| e[pivot]).max() {
                None => return Some(quot), // remainder is zero
                Some(0) => return if rem.is_zero() { Some(quot) } else { None },
                Some(d) => d,
            };
            let top: Vec<(Vec<u32>, Rat)> = rem
                .terms
                .iter()
                .filter(|(e, _)| e[pivot] == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect();
            let mut step = Poly::zero(self.arity);
            for (mut e, c) in top {
                e[pivot] -= 1;
                step.add_term(e, c / &pivot_coeff);
            }
            let l = Poly::linear_form(coeffs);
            rem = rem.sub(&step.mul(&l));
            quot = quot.add(&step);
        }
    }

    /// True iff `self - other` is divisible by the linear form.
    pub fn congruent_mod_linear(&self, other: &Poly, coeffs: &[i64]) -> bool {
        self.sub(other).is_divisible_by_linear(coeffs)
    }

    pub fn is_divisible_by_linear(&self, coeffs: &[i64]) -> bool {
        self.is_zero() || self.divide_by_linear(coeffs).is_some()
    }

    /// JSON-facing coefficient map: `"e1,e2,…" → "p/q"`, sorted by exponents.
    pub fn coefficient_map(&self) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let key = e
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                (key, format_rat(c))
            })
            .collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, k)
                    }
                })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{}", format_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rat(&mag), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use proptest::prelude::*;

    fn x(i: usize) -> Poly {
        Poly::var(2, i)
    }

    #[test]
    fn arithmetic_and_pruning() {
        let p = x(0).add(&x(1));
        let q = x(0).sub(&x(1));
        let prod = p.mul(&q);
        let expect = x(0).mul(&x(0)).sub(&x(1).mul(&x(1)));
        assert_eq!(prod, expect);
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.sub(&p), Poly::zero(2));
    }

    #[test]
    fn exact_linear_division() {
        // (x1 - x2) * (x1^2 + x2) / (x1 - x2)
        let l = Poly::linear_form(&[1, -1]);
        let p = x(0).pow(2).add(&x(1));
        let prod = l.mul(&p);
        assert_eq!(prod.divide_by_linear(&[1, -1]), Some(p.clone()));
        // x1^2 + x2 is not divisible by x1 - x2
        assert_eq!(p.divide_by_linear(&[1, -1]), None);
        // zero is divisible by anything nonzero
        assert!(Poly::zero(2).is_divisible_by_linear(&[3, 5]));
        // division by a form not involving the leading variable
        let l2 = Poly::linear_form(&[0, 2]);
        let prod2 = l2.mul(&p);
        assert_eq!(prod2.divide_by_linear(&[0, 2]), Some(p));
    }

    #[test]
    fn degrees() {
        let p = x(0).mul(&x(1)).add(&Poly::constant(2, rat_int(3)));
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!(p.homogeneous_degree(), None);
        assert_eq!(x(0).mul(&x(1)).homogeneous_degree(), Some(2));
        assert_eq!(Poly::zero(2).total_degree(), None);
    }

    #[test]
    fn display_is_readable() {
        let p = x(0)
            .pow(2)
            .scale(&rat(1, 2))
            .sub(&x(1))
            .add(&Poly::constant(2, rat_int(1)));
        assert_eq!(p.to_string(), "1 - x2 + 1/2*x1^2");
    }

    #[test]
    fn coefficient_map_is_canonical() {
        let p = x(0).scale(&rat(-2, 4));
        let m = p.coefficient_map();
        assert_eq!(m.get("1,0").map(String::as_str), Some("-1/2"));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(
            (
                proptest::collection::vec(0u32..4, 2),
                (-6i64..7, 1i64..5),
            ),
            0..6,
        )
        .prop_map(|terms| {
            Poly::from_terms(
                2,
                terms.into_iter().map(|(e, (n, d))| (e, rat(n, d))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&b).sub(&b), a);
        }

        #[test]
        fn linear_division_inverts_multiplication(
            a in arb_poly(),
            l in proptest::collection::vec(-3i64..4, 2)
                .prop_filter("nonzero form", |v| v.iter().any(|&c| c != 0)),
        ) {
            let form = Poly::linear_form(&l);
            let prod = form.mul(&a);
            prop_assert_eq!(prod.divide_by_linear(&l), Some(a));
        }
    }
}
