//! Integer linear combinations of Schur functions.
//!
//! Coefficients are `i64`; arithmetic is checked and panics on overflow, which
//! desk-scale computations never approach.

use alloc::collections::btree_map::{self, BTreeMap};
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::partition::Partition;
use crate::straighten::{Sign, Straightening};

/// A finite sum `Σ c_λ s_λ` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        SchurExpansion::default()
    }

    /// The single term `s_λ`.
    pub fn schur(lambda: Partition) -> Self {
        let mut e = SchurExpansion::zero();
        e.add_term(lambda, 1);
        e
    }

    /// `sign * s_λ`, or the zero expansion.
    pub fn from_straightening(s: &Straightening) -> Self {
        match s {
            Straightening::Zero => SchurExpansion::zero(),
            Straightening::Signed { sign, partition } => {
                let mut e = SchurExpansion::zero();
                e.add_term(partition.clone(), sign.to_i64());
                e
            }
        }
    }

    /// Adds `coeff * s_λ`, deleting the key if the net coefficient becomes zero.
    pub fn add_term(&mut self, lambda: Partition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(lambda) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o
                    .get()
                    .checked_add(coeff)
                    .expect("Schur coefficient overflow");
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_signed(&mut self, lambda: Partition, sign: Sign) {
        self.add_term(lambda, sign.to_i64());
    }

    pub fn coefficient(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
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

    /// Terms in lexicographically increasing partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> + '_ {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    /// Whether every term has weight `degree`.
    pub fn is_homogeneous_of(&self, degree: usize) -> bool {
        self.terms.keys().all(|p| p.weight() == degree)
    }

    pub fn scale(&self, factor: i64) -> SchurExpansion {
        let mut out = SchurExpansion::zero();
        if factor == 0 {
            return out;
        }
        for (p, &c) in &self.terms {
            let c = c.checked_mul(factor).expect("Schur coefficient overflow");
            out.terms.insert(p.clone(), c);
        }
        out
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<F, E>(&self, mut f: F) -> Result<SchurExpansion, E>
    where
        F: FnMut(&Partition) -> Result<SchurExpansion, E>,
    {
        let mut out = SchurExpansion::zero();
        for (p, &c) in &self.terms {
            out += f(p)?.scale(c);
        }
        Ok(out)
    }
}

impl AddAssign<SchurExpansion> for SchurExpansion {
    fn add_assign(&mut self, rhs: SchurExpansion) {
        for (p, c) in rhs.terms {
            self.add_term(p, c);
        }
    }
}

impl AddAssign<&SchurExpansion> for SchurExpansion {
    fn add_assign(&mut self, rhs: &SchurExpansion) {
        for (p, &c) in &rhs.terms {
            self.add_term(p.clone(), c);
        }
    }
}

impl Add for SchurExpansion {
    type Output = SchurExpansion;

    fn add(mut self, rhs: SchurExpansion) -> SchurExpansion {
        self += rhs;
        self
    }
}

impl Neg for SchurExpansion {
    type Output = SchurExpansion;

    fn neg(self) -> SchurExpansion {
        self.scale(-1)
    }
}

impl Sub for SchurExpansion {
    type Output = SchurExpansion;

    fn sub(self, rhs: SchurExpansion) -> SchurExpansion {
        self + (-rhs)
    }
}

impl Mul<i64> for SchurExpansion {
    type Output = SchurExpansion;

    fn mul(self, rhs: i64) -> SchurExpansion {
        self.scale(rhs)
    }
}

impl FromIterator<(Partition, i64)> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = (Partition, i64)>>(iter: I) -> Self {
        let mut out = SchurExpansion::zero();
        for (p, c) in iter {
            out.add_term(p, c);
        }
        out
    }
}

/// Text form in increasing partition order: `-s[4,4,4,2,1] -s[6,3,3,2,1] -s[6,5,4]`,
/// `+2*s[2,1]`, or `0`.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match c {
                1 => write!(f, "+s{}", p)?,
                -1 => write!(f, "-s{}", p)?,
                _ => write!(f, "{:+}*s{}", c, p)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurExpansion({})", self)
    }
}

/// Schur expansions split by degree, each piece homogeneous.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct GradedExpansion {
    by_degree: BTreeMap<usize, SchurExpansion>,
}

impl GradedExpansion {
    pub fn new() -> Self {
        GradedExpansion::default()
    }

    /// Adds a term to the piece of degree `|λ|`.
    pub fn add_term(&mut self, lambda: Partition, coeff: i64) {
        let degree = lambda.weight();
        let piece = self.by_degree.entry(degree).or_default();
        piece.add_term(lambda, coeff);
        if piece.is_zero() {
            self.by_degree.remove(&degree);
        }
    }

    /// The degree-`d` piece (empty when absent).
    pub fn degree(&self, d: usize) -> SchurExpansion {
        self.by_degree.get(&d).cloned().unwrap_or_default()
    }

    /// Nonzero pieces in increasing degree.
    pub fn pieces(&self) -> impl Iterator<Item = (usize, &SchurExpansion)> + '_ {
        self.by_degree.iter().map(|(&d, e)| (d, e))
    }
}
