//! Exact multivariate polynomials over the integers with dense exponent vectors.
//!
//! The first `positives` variables print as `x1, x2, …`, the rest as `y1, y2, …`.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

/// An exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `Σ c_m x^m` with no zero coefficients stored.
///
/// Coefficient arithmetic is checked `i64`; overflow panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialPolynomial {
    arity: usize,
    positives: usize,
    terms: BTreeMap<Monomial, i64>,
}

impl MonomialPolynomial {
    /// The zero polynomial in `positives` x-variables and `arity - positives` y-variables.
    pub fn zero(arity: usize, positives: usize) -> Self {
        assert!(positives <= arity, "more x-variables than variables");
        MonomialPolynomial {
            arity,
            positives,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, positives: usize, c: i64) -> Self {
        let mut p = MonomialPolynomial::zero(arity, positives);
        p.add_term(Monomial::one(arity), c);
        p
    }

    pub fn one(arity: usize, positives: usize) -> Self {
        MonomialPolynomial::constant(arity, positives, 1)
    }

    /// The variable with index `var` (0-based over all variables).
    pub fn variable(arity: usize, positives: usize, var: usize) -> Self {
        let mut e = vec![0; arity];
        e[var] = 1;
        let mut p = MonomialPolynomial::zero(arity, positives);
        p.add_term(Monomial(e), 1);
        p
    }

    /// A zero polynomial over the same variables as `self`.
    pub fn zero_like(&self) -> Self {
        MonomialPolynomial::zero(self.arity, self.positives)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn positives(&self) -> usize {
        self.positives
    }

    pub fn add_term(&mut self, monomial: Monomial, coeff: i64) {
        assert_eq!(monomial.0.len(), self.arity, "exponent vector arity mismatch");
        if coeff == 0 {
            return;
        }
        match self.terms.entry(monomial) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o
                    .get()
                    .checked_add(coeff)
                    .expect("polynomial coefficient overflow");
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lexicographic increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, i64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn scale(&self, factor: i64) -> Self {
        let mut out = self.zero_like();
        if factor != 0 {
            for (m, &c) in &self.terms {
                let c = c.checked_mul(factor).expect("polynomial coefficient overflow");
                out.terms.insert(m.clone(), c);
            }
        }
        out
    }

    /// Drops every term of total degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Self {
        let mut out = self.zero_like();
        out.terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() <= max_degree)
            .map(|(m, &c)| (m.clone(), c))
            .collect();
        out
    }

    /// Product with every term above `max_degree` discarded.
    pub fn mul_truncated(&self, other: &Self, max_degree: Option<u32>) -> Self {
        self.check_compatible(other);
        let mut out = self.zero_like();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                if let Some(d) = max_degree {
                    if a.degree() + b.degree() > d {
                        continue;
                    }
                }
                let c = ca.checked_mul(cb).expect("polynomial coefficient overflow");
                out.add_term(a.times(b), c);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(MonomialPolynomial::one(self.arity, self.positives), |acc, _| &acc * self)
    }

    /// Exchanges two variables.
    pub fn swap_variables(&self, a: usize, b: usize) -> Self {
        let mut out = self.zero_like();
        for (m, &c) in &self.terms {
            let mut e = m.0.clone();
            e.swap(a, b);
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// Re-homes every variable `v` at `positions[v]` in a ring with `arity` variables.
    pub fn embed(&self, positions: &[usize], arity: usize, positives: usize) -> Self {
        assert_eq!(positions.len(), self.arity, "one position per variable");
        let mut out = MonomialPolynomial::zero(arity, positives);
        for (m, &c) in &self.terms {
            let mut e = vec![0; arity];
            for (v, &exp) in m.0.iter().enumerate() {
                e[positions[v]] += exp;
            }
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// Groups terms by the exponent of `var`; each group is a polynomial in the
    /// remaining variables.
    pub fn collect_by(&self, var: usize) -> BTreeMap<u32, MonomialPolynomial> {
        let positives = if var < self.positives {
            self.positives - 1
        } else {
            self.positives
        };
        let mut out: BTreeMap<u32, MonomialPolynomial> = BTreeMap::new();
        for (m, &c) in &self.terms {
            let mut e = m.0.clone();
            let k = e.remove(var);
            out.entry(k)
                .or_insert_with(|| MonomialPolynomial::zero(self.arity - 1, positives))
                .add_term(Monomial(e), c);
        }
        out
    }

    /// Whether every term has total degree `d`.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            self.arity == other.arity && self.positives == other.positives,
            "polynomials over different variable sets"
        );
    }

    fn variable_name(&self, v: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if v < self.positives {
            write!(f, "x{}", v + 1)
        } else {
            write!(f, "y{}", v - self.positives + 1)
        }
    }
}

impl AddAssign<&MonomialPolynomial> for MonomialPolynomial {
    fn add_assign(&mut self, rhs: &MonomialPolynomial) {
        self.check_compatible(rhs);
        for (m, &c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl Add<&MonomialPolynomial> for &MonomialPolynomial {
    type Output = MonomialPolynomial;

    fn add(self, rhs: &MonomialPolynomial) -> MonomialPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MonomialPolynomial> for &MonomialPolynomial {
    type Output = MonomialPolynomial;

    fn sub(self, rhs: &MonomialPolynomial) -> MonomialPolynomial {
        self + &rhs.scale(-1)
    }
}

impl Neg for &MonomialPolynomial {
    type Output = MonomialPolynomial;

    fn neg(self) -> MonomialPolynomial {
        self.scale(-1)
    }
}

impl Mul<&MonomialPolynomial> for &MonomialPolynomial {
    type Output = MonomialPolynomial;

    fn mul(self, rhs: &MonomialPolynomial) -> MonomialPolynomial {
        self.mul_truncated(rhs, None)
    }
}

/// Terms in decreasing graded-lexicographic order, e.g. `+1 * x1^2 -1 * x1 y1`;
/// the zero polynomial prints as `0`.
impl fmt::Display for MonomialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{:+}", c)?;
            let mut first = true;
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                f.write_str(if first { " * " } else { " " })?;
                first = false;
                self.variable_name(v, f)?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialPolynomial({})", self)
    }
}
