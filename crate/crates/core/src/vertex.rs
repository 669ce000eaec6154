//! The vertex operator `Γ_(t|X) s_α = Σ_n s_(n,α) t^n`.
//!
//! Three independent evaluations of each coefficient of `t^n`:
//!
//! - [`vertex_lhs`] straightens `(n, α)` directly;
//! - [`vertex_lemma`] builds the rectified shape from `α` by adding one cell to
//!   each of the first `k` columns and removing the last cell of every row longer
//!   than `k`;
//! - [`vertex_rhs`] expands `σ[tX] s_α[X − 1/t]`: remove a vertical `j`-strip with
//!   sign `(-1)^j`, then add a horizontal `(n + j)`-strip.
//!
//! [`involution_report`] runs the sign-reversing involution on the raw terms of
//! the third route, toggling the leftmost α-removable corner, and checks that
//! the fixed points are exactly the terms of the second route.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::expansion::SchurExpansion;
use crate::partition::{Cell, Partition};
use crate::straighten::{staircase_straighten, Sign};
use crate::strips::{
    alpha_removable_corners, horizontal_strip_additions, is_horizontal_strip, is_vertical_strip,
    vertical_strip_removals,
};

/// A window `[n_min, n_max]` of the Laurent series `Γ_(t|X) s_α`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexSeries {
    alpha: Partition,
    n_min: i64,
    n_max: i64,
    coefficients: Vec<SchurExpansion>,
}

impl VertexSeries {
    fn empty(alpha: &Partition, n_min: i64, n_max: i64) -> Result<Self> {
        if n_min > n_max {
            return Err(Error::OutOfRange {
                name: "n_max",
                min: n_min,
                value: n_max,
            });
        }
        let width = n_max
            .checked_sub(n_min)
            .and_then(|w| usize::try_from(w).ok())
            .and_then(|w| w.checked_add(1))
            .ok_or(Error::Overflow("sizing the t-window"))?;
        Ok(VertexSeries {
            alpha: alpha.clone(),
            n_min,
            n_max,
            coefficients: alloc::vec![SchurExpansion::zero(); width],
        })
    }

    fn slot(&mut self, n: i64) -> &mut SchurExpansion {
        &mut self.coefficients[(n - self.n_min) as usize]
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn window(&self) -> (i64, i64) {
        (self.n_min, self.n_max)
    }

    /// Coefficient of `t^n`; `None` outside the window.
    pub fn coefficient(&self, n: i64) -> Option<&SchurExpansion> {
        if n < self.n_min || n > self.n_max {
            return None;
        }
        self.coefficients.get((n - self.n_min) as usize)
    }

    /// `(n, coefficient)` for every `n` in the window.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &SchurExpansion)> + '_ {
        (self.n_min..=self.n_max).zip(self.coefficients.iter())
    }

    /// First `n` at which two series over the same window differ.
    pub fn first_difference(&self, other: &VertexSeries) -> Option<i64> {
        self.iter()
            .zip(other.iter())
            .find(|((_, a), (_, b))| a != b)
            .map(|((n, _), _)| n)
    }
}

/// Header line `alpha=[..] n=a:b`, then one `t^{n}: <expansion>` line per `n`.
impl fmt::Display for VertexSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={} n={}:{}", self.alpha, self.n_min, self.n_max)?;
        for (n, e) in self.iter() {
            write!(f, "\nt^{{{}}}: {}", n, e)?;
        }
        Ok(())
    }
}

fn weight_i64(p: &Partition) -> i64 {
    p.weight() as i64
}

/// Coefficients `s_(n, α)` straightened directly.
pub fn vertex_lhs(alpha: &Partition, n_min: i64, n_max: i64) -> Result<VertexSeries> {
    let mut series = VertexSeries::empty(alpha, n_min, n_max)?;
    let base = alpha.to_sequence();
    for n in n_min..=n_max {
        let s = staircase_straighten(&base.prepend(n))?;
        *series.slot(n) = SchurExpansion::from_straightening(&s);
    }
    Ok(series)
}

/// One term of the column-adding description for a fixed `k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LemmaTerm {
    pub k: usize,
    pub n: i64,
    pub sign: Sign,
    pub mu: Partition,
    /// Number of rows of `α` longer than `k`, each losing its last cell.
    pub ht: usize,
}

/// The term for `k`: add a cell atop each of columns `1..=k` of `α`, then remove
/// the last cell of every row with `α_i > k`.
pub fn lemma_term(alpha: &Partition, k: usize) -> Result<LemmaTerm> {
    let mut columns = alpha.conjugate().parts().to_vec();
    if columns.len() < k {
        columns.resize(k, 0);
    }
    for c in columns.iter_mut().take(k) {
        *c += 1;
    }
    let grown = Partition::new(columns)
        .map_err(|_| Error::Verification(format!("column growth of {} at k={} is not a partition", alpha, k)))?
        .conjugate();
    let mut parts = grown.parts().to_vec();
    let mut ht = 0;
    for (i, &a) in alpha.parts().iter().enumerate() {
        if a > k {
            parts[i] -= 1;
            ht += 1;
        }
    }
    let mu = Partition::new(parts)
        .map_err(|_| Error::Verification(format!("lemma shape of {} at k={} is not a partition", alpha, k)))?;
    let n = k as i64 - ht as i64;
    if weight_i64(&mu) != weight_i64(alpha) + n {
        return Err(Error::Verification(format!(
            "lemma shape {} at k={} has the wrong weight",
            mu, k
        )));
    }
    Ok(LemmaTerm {
        k,
        n,
        sign: Sign::power(ht),
        mu,
        ht,
    })
}

/// Lemma terms whose `n` lies in `[n_min, n_max]`, in increasing `k` (and `n`).
pub fn lemma_terms(alpha: &Partition, n_min: i64, n_max: i64) -> Result<Vec<LemmaTerm>> {
    let mut out = Vec::new();
    let mut previous_n: Option<i64> = None;
    for k in 0usize.. {
        let term = lemma_term(alpha, k)?;
        if let Some(prev) = previous_n {
            if term.n <= prev {
                return Err(Error::Verification(format!(
                    "lemma exponent not increasing at k={} for {}",
                    k, alpha
                )));
            }
        }
        previous_n = Some(term.n);
        if term.n > n_max {
            break;
        }
        if term.n >= n_min {
            out.push(term);
        }
    }
    Ok(out)
}

/// Coefficients built from [`lemma_terms`].
pub fn vertex_lemma(alpha: &Partition, n_min: i64, n_max: i64) -> Result<VertexSeries> {
    let mut series = VertexSeries::empty(alpha, n_min, n_max)?;
    for term in lemma_terms(alpha, n_min, n_max)? {
        series.slot(term.n).add_signed(term.mu, term.sign);
    }
    Ok(series)
}

/// One summand of `σ[tX] s_α[X − 1/t]` before cancellation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RawTerm {
    /// Size of the vertical strip `α/λ`.
    pub j: usize,
    pub lambda: Partition,
    pub mu: Partition,
    /// Exponent of `t`, `|μ| − |α|`.
    pub n: i64,
    pub sign: Sign,
}

impl fmt::Display for RawTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(j={}, lambda={}, mu={}, n={}, {})",
            self.j, self.lambda, self.mu, self.n, self.sign
        )
    }
}

/// All raw terms with `n` in the window, ordered by `j`, then `λ`, then `n`, then `μ`.
pub fn vertex_rhs_raw(alpha: &Partition, n_min: i64, n_max: i64) -> Result<Vec<RawTerm>> {
    VertexSeries::empty(alpha, n_min, n_max)?;
    let mut out = Vec::new();
    for j in 0..=alpha.length() {
        let sign = Sign::power(j);
        for lambda in vertical_strip_removals(alpha, j) {
            // horizontal strip size n + j must be nonnegative
            let low = n_min.max(-(j as i64));
            for n in low..=n_max {
                let size = usize::try_from(n + j as i64).map_err(|_| Error::Overflow("sizing a strip"))?;
                for mu in horizontal_strip_additions(&lambda, size)? {
                    out.push(RawTerm {
                        j,
                        lambda: lambda.clone(),
                        mu,
                        n,
                        sign,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Raw terms grouped by `n` and summed.
pub fn vertex_rhs(alpha: &Partition, n_min: i64, n_max: i64) -> Result<VertexSeries> {
    let mut series = VertexSeries::empty(alpha, n_min, n_max)?;
    for term in vertex_rhs_raw(alpha, n_min, n_max)? {
        series.slot(term.n).add_signed(term.mu, term.sign);
    }
    Ok(series)
}

/// Image of a raw term under the involution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Pairing {
    Fixed,
    Partner { term: RawTerm, corner: Cell },
}

fn invalid(term: &RawTerm, reason: &'static str) -> Error {
    Error::InvalidTerm {
        term: format!("{}", term),
        reason,
    }
}

fn check_raw_term(alpha: &Partition, term: &RawTerm) -> Result<()> {
    if !is_vertical_strip(alpha, &term.lambda) {
        return Err(invalid(term, "alpha/lambda is not a vertical strip"));
    }
    if alpha.weight() - term.lambda.weight() != term.j {
        return Err(invalid(term, "vertical strip size differs from j"));
    }
    if !is_horizontal_strip(&term.mu, &term.lambda) {
        return Err(invalid(term, "mu/lambda is not a horizontal strip"));
    }
    if weight_i64(&term.mu) - weight_i64(alpha) != term.n {
        return Err(invalid(term, "n differs from |mu| - |alpha|"));
    }
    if term.sign != Sign::power(term.j) {
        return Err(invalid(term, "sign differs from (-1)^j"));
    }
    Ok(())
}

/// Toggles the leftmost α-removable corner `(i, α_i)` of `μ` in `λ`.
///
/// The corner set depends on `μ` only, so the partner has the same leftmost
/// corner and toggling twice is the identity.
pub fn pair_term(alpha: &Partition, term: &RawTerm) -> Result<Pairing> {
    check_raw_term(alpha, term)?;
    let corners = alpha_removable_corners(alpha, &term.mu);
    let Some(&corner) = corners.first() else {
        return Ok(Pairing::Fixed);
    };
    let row = corner.row - 1;
    let mut parts = term.lambda.parts().to_vec();
    if parts.len() <= row {
        parts.resize(row + 1, 0);
    }
    let (lambda_part, j) = if parts[row] == corner.column {
        (corner.column - 1, term.j + 1)
    } else {
        (corner.column, term.j - 1)
    };
    parts[row] = lambda_part;
    let lambda = Partition::new(parts).map_err(|_| invalid(term, "toggled lambda is not a partition"))?;
    let partner = RawTerm {
        j,
        lambda,
        mu: term.mu.clone(),
        n: term.n,
        sign: -term.sign,
    };
    check_raw_term(alpha, &partner).map_err(|_| invalid(term, "toggled term breaks the strip conditions"))?;
    Ok(Pairing::Partner {
        term: partner,
        corner,
    })
}

/// Two raw terms matched by the involution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Couple {
    pub first: RawTerm,
    pub second: RawTerm,
    pub corner: Cell,
}

/// Outcome of running the involution on the raw terms of one exponent `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvolutionReport {
    pub alpha: Partition,
    pub n: i64,
    pub couples: Vec<Couple>,
    pub survivors: Vec<RawTerm>,
    /// The lemma term sharing this `n`, if any.
    pub lemma: Option<LemmaTerm>,
}

fn describe(alpha: &Partition, term: &RawTerm, what: &str) -> Error {
    Error::Verification(format!("alpha={}: {} {}", alpha, what, term))
}

/// Pairs the raw terms of `t^n` and checks every couple and survivor.
pub fn involution_report(alpha: &Partition, n: i64) -> Result<InvolutionReport> {
    let raw = vertex_rhs_raw(alpha, n, n)?;
    let index: BTreeMap<&RawTerm, usize> = raw.iter().enumerate().map(|(i, t)| (t, i)).collect();
    if index.len() != raw.len() {
        return Err(Error::Verification(format!("alpha={}: duplicate raw terms", alpha)));
    }
    let mut couples = Vec::new();
    let mut survivors = Vec::new();
    for (i, term) in raw.iter().enumerate() {
        match pair_term(alpha, term)? {
            Pairing::Fixed => survivors.push(term.clone()),
            Pairing::Partner { term: partner, corner } => {
                if partner.mu != term.mu || partner.n != term.n {
                    return Err(describe(alpha, term, "partner changes mu or n for"));
                }
                if partner.sign == term.sign {
                    return Err(describe(alpha, term, "partner has the same sign as"));
                }
                let Some(&p) = index.get(&partner) else {
                    return Err(describe(alpha, &partner, "partner missing from the raw terms:"));
                };
                match pair_term(alpha, &partner)? {
                    Pairing::Partner { term: back, .. } if back == *term => {}
                    _ => return Err(describe(alpha, term, "pairing is not an involution at")),
                }
                if i < p {
                    couples.push(Couple {
                        first: term.clone(),
                        second: partner,
                        corner,
                    });
                }
            }
        }
    }
    for term in &survivors {
        check_forced_rows(alpha, term)?;
    }
    let lemma = lemma_terms(alpha, n, n)?.into_iter().next();
    match (&lemma, survivors.as_slice()) {
        (None, []) => {}
        (Some(l), [s]) if l.mu == s.mu && l.sign == s.sign => {}
        (_, [s, ..]) => return Err(describe(alpha, s, "survivors disagree with the lemma term at")),
        (Some(l), []) => {
            return Err(Error::Verification(format!(
                "alpha={}: lemma term {}s{} at n={} has no surviving raw term",
                alpha, l.sign, l.mu, n
            )))
        }
    }
    Ok(InvolutionReport {
        alpha: alpha.clone(),
        n,
        couples,
        survivors,
        lemma,
    })
}

/// Each row of a fixed point either loses its last cell with `μ_i = α_i − 1`,
/// or keeps it because `μ_{i+1} ≥ α_i`.
fn check_forced_rows(alpha: &Partition, term: &RawTerm) -> Result<()> {
    for (i, &a) in alpha.parts().iter().enumerate() {
        let removed = term.mu.part(i) + 1 == a && term.lambda.part(i) + 1 == a;
        let kept = term.mu.part(i + 1) >= a && term.lambda.part(i) == a;
        if !(removed || kept) {
            return Err(describe(alpha, term, "row choice not forced in fixed point"));
        }
    }
    Ok(())
}

impl InvolutionReport {
    /// Signed sum of survivors.
    pub fn survivor_expansion(&self) -> SchurExpansion {
        let mut e = SchurExpansion::zero();
        for s in &self.survivors {
            e.add_signed(s.mu.clone(), s.sign);
        }
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[usize]) -> SchurExpansion {
        SchurExpansion::schur(p(parts))
    }

    #[test]
    fn lhs_examples() {
        let alpha = p(&[5, 4, 3, 3]);
        let series = vertex_lhs(&alpha, -6, 8).unwrap();
        assert!(series.coefficient(-5).unwrap().is_zero());
        assert_eq!(series.coefficient(3).unwrap(), &s(&[4, 4, 4, 3, 3]).scale(-1));
        assert_eq!(vertex_lhs(&p(&[]), 2, 2).unwrap().coefficient(2).unwrap(), &s(&[2]));
        assert!(vertex_lhs(&alpha, 1, 0).is_err());
    }

    #[test]
    fn lemma_examples() {
        let alpha = p(&[5, 4, 3, 3]);
        let t0 = lemma_term(&alpha, 0).unwrap();
        assert_eq!((t0.n, t0.sign, t0.mu.clone()), (-4, Sign::Plus, p(&[4, 3, 2, 2])));
        let t5 = lemma_term(&alpha, 5).unwrap();
        assert_eq!((t5.n, t5.sign, t5.mu.clone()), (5, Sign::Plus, p(&[5, 5, 4, 3, 3])));
        let t4 = lemma_term(&alpha, 4).unwrap();
        assert_eq!((t4.n, t4.sign, t4.mu.clone()), (3, Sign::Minus, p(&[4, 4, 4, 3, 3])));
        let ns: Vec<i64> = lemma_terms(&alpha, -6, 8).unwrap().iter().map(|t| t.n).collect();
        assert_eq!(ns, vec![-4, -3, -2, 1, 3, 5, 6, 7, 8]);
    }

    #[test]
    fn raw_examples() {
        let alpha = p(&[1]);
        let raw = vertex_rhs_raw(&alpha, 0, 0).unwrap();
        assert_eq!(
            raw,
            vec![
                RawTerm { j: 0, lambda: p(&[1]), mu: p(&[1]), n: 0, sign: Sign::Plus },
                RawTerm { j: 1, lambda: p(&[]), mu: p(&[1]), n: 0, sign: Sign::Minus },
            ]
        );
        let raw = vertex_rhs_raw(&alpha, 1, 1).unwrap();
        let shapes: Vec<_> = raw.iter().map(|t| (t.j, t.mu.clone(), t.sign)).collect();
        assert_eq!(
            shapes,
            vec![
                (0, p(&[2]), Sign::Plus),
                (0, p(&[1, 1]), Sign::Plus),
                (1, p(&[2]), Sign::Minus),
            ]
        );
        let raw = vertex_rhs_raw(&p(&[]), 2, 2).unwrap();
        assert_eq!(raw.len(), 1);
        assert_eq!(raw[0].mu, p(&[2]));
    }

    #[test]
    fn rhs_examples() {
        assert_eq!(vertex_rhs(&p(&[1]), 1, 1).unwrap().coefficient(1).unwrap(), &s(&[1, 1]));
        assert!(vertex_rhs(&p(&[1]), 0, 0).unwrap().coefficient(0).unwrap().is_zero());
        assert_eq!(
            vertex_rhs(&p(&[5, 4, 3, 3]), 3, 3).unwrap().coefficient(3).unwrap(),
            &s(&[4, 4, 4, 3, 3]).scale(-1)
        );
    }

    #[test]
    fn pairing_examples() {
        let alpha = p(&[1]);
        let t = RawTerm { j: 0, lambda: p(&[1]), mu: p(&[2]), n: 1, sign: Sign::Plus };
        let Pairing::Partner { term, corner } = pair_term(&alpha, &t).unwrap() else {
            panic!("expected a partner");
        };
        assert_eq!(term, RawTerm { j: 1, lambda: p(&[]), mu: p(&[2]), n: 1, sign: Sign::Minus });
        assert_eq!(corner, Cell::new(1, 1));
        assert_eq!(
            pair_term(&alpha, &term).unwrap(),
            Pairing::Partner { term: t, corner }
        );
        let fixed = RawTerm { j: 0, lambda: p(&[1]), mu: p(&[1, 1]), n: 1, sign: Sign::Plus };
        assert_eq!(pair_term(&alpha, &fixed).unwrap(), Pairing::Fixed);
        let broken = RawTerm { j: 0, lambda: p(&[1]), mu: p(&[1, 1]), n: 1, sign: Sign::Minus };
        assert!(matches!(pair_term(&alpha, &broken), Err(Error::InvalidTerm { .. })));
    }

    #[test]
    fn involution_examples() {
        let r = involution_report(&p(&[1]), 0).unwrap();
        assert_eq!((r.couples.len(), r.survivors.len()), (1, 0));
        let r = involution_report(&p(&[1]), 1).unwrap();
        assert_eq!(r.couples.len(), 1);
        assert_eq!(r.couples[0].first.mu, p(&[2]));
        assert_eq!(r.survivor_expansion(), s(&[1, 1]));
        let r = involution_report(&p(&[]), 2).unwrap();
        assert_eq!((r.couples.len(), r.survivor_expansion()), (0, s(&[2])));
        let r = involution_report(&p(&[5, 4, 3, 3]), 3).unwrap();
        assert_eq!(r.survivor_expansion(), s(&[4, 4, 4, 3, 3]).scale(-1));
    }

    #[test]
    fn series_text_form() {
        let series = vertex_lhs(&p(&[1]), -1, 1).unwrap();
        assert_eq!(
            alloc::string::ToString::to_string(&series),
            "alpha=[1] n=-1:1\nt^{-1}: -s[]\nt^{0}: 0\nt^{1}: +s[1,1]"
        );
    }
}
