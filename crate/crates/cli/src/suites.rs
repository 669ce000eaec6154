//! Verification sweeps. Each suite returns a [`Tally`]; cases are evaluated in
//! parallel and merged in input order, so the result is deterministic.

use std::collections::BTreeSet;

use rayon::prelude::*;
use schur_vertex_core::oracle::{
    cauchy_truncated, dual_cauchy_truncated, jt_matches_straightening,
    negative_alphabet_corollary_check, schur_difference_check, sigma_additivity_check,
    signed_tableaux_expand, vertex_monomial_check, AlphabetSpec, MonomialPolynomial,
};
use schur_vertex_core::partition::partitions_up_to;
use schur_vertex_core::{
    gamma_one, involution_report, murnaghan_nakayama_perp, p_perp, row_exchange_straighten,
    staircase_straighten, vertex_lemma, vertex_lhs, vertex_rhs, IntegerSequence, Partition,
    Result,
};

use crate::report::Tally;

/// An inclusive range of `n`.
pub type Window = (i64, i64);

fn sweep<T: Sync>(items: &[T], f: impl Fn(&T) -> Tally + Sync) -> Tally {
    items.par_iter().map(&f).collect::<Vec<_>>().into_iter().collect()
}

/// Sequences with entries in `window`, at most `max_weight` parts and
/// `Σ|s_i| ≤ max_weight`, together with every `(n, α)` for `|α| ≤ max_weight`
/// and `n` in `window`.
pub fn straighten_cases(max_weight: usize, window: Window) -> Vec<IntegerSequence> {
    let mut out = BTreeSet::new();
    let mut current = Vec::new();
    fn go(
        budget: i64,
        slots: usize,
        window: Window,
        current: &mut Vec<i64>,
        out: &mut BTreeSet<IntegerSequence>,
    ) {
        out.insert(IntegerSequence::new(current.clone()));
        if slots == 0 {
            return;
        }
        for v in window.0.max(-budget)..=window.1.min(budget) {
            current.push(v);
            go(budget - v.abs(), slots - 1, window, current, out);
            current.pop();
        }
    }
    go(max_weight as i64, max_weight, window, &mut current, &mut out);
    for alpha in partitions_up_to(max_weight) {
        for n in window.0..=window.1 {
            out.insert(alpha.to_sequence().prepend(n));
        }
    }
    out.into_iter().collect()
}

pub fn straighten_agree(seqs: &[IntegerSequence]) -> Tally {
    sweep(seqs, |seq| {
        let mut t = Tally::new();
        let outcome = (|| -> Result<_> { Ok((staircase_straighten(seq)?, row_exchange_straighten(seq)?)) })();
        match outcome {
            Ok((a, b)) => t.record(a == b, || format!("{}: staircase {} row-exchange {}", seq, a, b)),
            Err(e) => t.record(false, || format!("{}: {}", seq, e)),
        }
        t
    })
}

pub fn vertex_three_way(alphas: &[Partition], window: impl Fn(&Partition) -> Window + Sync) -> Tally {
    sweep(alphas, |alpha| {
        let mut t = Tally::new();
        let (lo, hi) = window(alpha);
        let series = (|| -> Result<_> {
            Ok((
                vertex_lhs(alpha, lo, hi)?,
                vertex_lemma(alpha, lo, hi)?,
                vertex_rhs(alpha, lo, hi)?,
            ))
        })();
        match series {
            Ok((lhs, lemma, rhs)) => {
                for n in lo..=hi {
                    let (a, b, c) = (lhs.coefficient(n), lemma.coefficient(n), rhs.coefficient(n));
                    t.record(a == b && b == c, || {
                        format!(
                            "alpha={} n={}: lhs {} lemma {} rhs {}",
                            alpha,
                            n,
                            a.unwrap(),
                            b.unwrap(),
                            c.unwrap()
                        )
                    });
                }
            }
            Err(e) => t.record(false, || format!("alpha={}: {}", alpha, e)),
        }
        t
    })
}

pub fn involution_sound(alphas: &[Partition], window: impl Fn(&Partition) -> Window + Sync) -> Tally {
    sweep(alphas, |alpha| {
        let mut t = Tally::new();
        let (lo, hi) = window(alpha);
        for n in lo..=hi {
            let outcome = (|| -> Result<bool> {
                let report = involution_report(alpha, n)?;
                let lhs = vertex_lhs(alpha, n, n)?;
                Ok(Some(&report.survivor_expansion()) == lhs.coefficient(n))
            })();
            t.record_result(outcome, || format!("alpha={} n={}", alpha, n));
        }
        t
    })
}

/// `p_i^⊥ s_α` by straightening against border strips, for `1 ≤ i ≤ max_i`.
pub fn perp_agree(alphas: &[Partition], max_i: usize) -> Tally {
    sweep(alphas, |alpha| {
        let mut t = Tally::new();
        for i in 1..=max_i {
            let outcome = (|| -> Result<bool> {
                Ok(p_perp(i, alpha)? == murnaghan_nakayama_perp(i, alpha)?)
            })();
            t.record_result(outcome, || format!("i={} alpha={}", i, alpha));
        }
        t
    })
}

/// `Γ_1 s_α` degree by degree against `Σ_n s_(n,α)`, up to degree `|α| + extra`.
pub fn gamma1_agree(alphas: &[Partition], extra: usize) -> Tally {
    sweep(alphas, |alpha| {
        let mut t = Tally::new();
        let w = alpha.weight();
        let top = w + extra;
        let outcome = (|| -> Result<_> {
            Ok((
                gamma_one(alpha, top)?,
                vertex_lhs(alpha, -(w as i64), extra as i64)?,
            ))
        })();
        match outcome {
            Ok((gamma, series)) => {
                for d in 0..=top {
                    let n = d as i64 - w as i64;
                    let piece = gamma.degree(d);
                    let expected = series.coefficient(n).unwrap();
                    t.record(&piece == expected, || {
                        format!("alpha={} degree {}: gamma1 {} series {}", alpha, d, piece, expected)
                    });
                }
            }
            Err(e) => t.record(false, || format!("alpha={}: {}", alpha, e)),
        }
        t
    })
}

/// Sequences of length at most 4, entries in `[-4, 6]`, weight at most `max_degree`,
/// plus the sequences `(4,5)` and `(5,3,2,7)`.
pub fn jt_cases(max_degree: usize) -> Vec<IntegerSequence> {
    let mut out = BTreeSet::new();
    let mut current = Vec::new();
    fn go(current: &mut Vec<i64>, max: i64, out: &mut BTreeSet<IntegerSequence>) {
        if current.iter().sum::<i64>() <= max {
            out.insert(IntegerSequence::new(current.clone()));
        }
        if current.len() == 4 {
            return;
        }
        for v in -4..=6 {
            current.push(v);
            go(current, max, out);
            current.pop();
        }
    }
    go(&mut current, max_degree as i64, &mut out);
    out.insert(IntegerSequence::new(vec![4, 5]));
    out.insert(IntegerSequence::new(vec![5, 3, 2, 7]));
    out.into_iter().collect()
}

pub fn jt_vs_ssyt(seqs: &[IntegerSequence], spec: AlphabetSpec) -> Tally {
    sweep(seqs, |seq| {
        let mut t = Tally::new();
        t.record_result(jt_matches_straightening(seq, spec), || format!("{}", seq));
        t
    })
}

/// `s_λ[X−Y]` by signed tableaux against Jacobi–Trudi for `|λ| ≤ max_degree`.
///
/// With one variable on each side the expansion of `s_(1,1)` is also compared
/// with `y1^2 − x1 y1`.
pub fn schur_diff(spec: AlphabetSpec, max_degree: usize) -> Tally {
    let lambdas = partitions_up_to(max_degree);
    let mut t = sweep(&lambdas, |lambda| {
        let mut t = Tally::new();
        t.record(schur_difference_check(lambda, spec), || format!("lambda={}", lambda));
        t
    });
    if spec.positives == 1 && spec.negatives == 1 && max_degree >= 2 {
        let x = MonomialPolynomial::variable(2, 1, spec.x(1));
        let y = MonomialPolynomial::variable(2, 1, spec.y(1));
        let expected = &(&y * &y) - &(&x * &y);
        let lambda = Partition::new(vec![1, 1]).expect("valid partition");
        let got = signed_tableaux_expand(&lambda, spec);
        t.record(got == expected, || format!("s[1,1][x1 - y1] = {}", got));
    }
    t
}

pub fn cauchy(p: usize, q: usize, d: usize) -> Tally {
    let (left, right) = cauchy_truncated(p, q, d);
    let mut t = Tally::new();
    t.record(left == right, || format!("cauchy p={} q={} d={}", p, q, d));
    t
}

pub fn dual_cauchy(p: usize, q: usize) -> Tally {
    let (left, right) = dual_cauchy_truncated(p, q);
    let mut t = Tally::new();
    t.record(left == right, || format!("dual cauchy p={} q={}", p, q));
    t
}

pub fn sigma_add(p1: usize, p2: usize, d: usize) -> Tally {
    let mut t = Tally::new();
    t.record(sigma_additivity_check(p1, p2, d), || {
        format!("sigma additivity p1={} p2={} d={}", p1, p2, d)
    });
    t
}

pub fn neg_alphabet(p: usize, max_degree: usize) -> Tally {
    let alphas = partitions_up_to(max_degree);
    sweep(&alphas, |alpha| {
        let mut t = Tally::new();
        t.record(negative_alphabet_corollary_check(alpha, p), || format!("alpha={} p={}", alpha, p));
        t
    })
}

/// `s_(n,α)` in `x_1..x_p` against the `t^n` coefficient of the product side,
/// for `|α| ≤ max_degree` and `n ∈ [-length(α), 4]`.
pub fn vertex_monomial(p: usize, max_degree: usize) -> Tally {
    let alphas = partitions_up_to(max_degree);
    sweep(&alphas, |alpha| {
        let mut t = Tally::new();
        for n in -(alpha.length() as i64)..=4 {
            t.record_result(vertex_monomial_check(alpha, p, n), || {
                format!("alpha={} p={} n={}", alpha, p, n)
            });
        }
        t
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn straighten_cases_small() {
        let cases = straighten_cases(0, (-8, 6));
        assert_eq!(cases, vec![IntegerSequence::new(vec![])]
            .into_iter()
            .chain((-8..=6).map(|n| IntegerSequence::new(vec![n])))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect::<Vec<_>>());
        let cases = straighten_cases(1, (0, 0));
        assert!(cases.contains(&IntegerSequence::new(vec![0])));
        assert!(cases.contains(&IntegerSequence::new(vec![0, 1])));
        assert!(!cases.contains(&IntegerSequence::new(vec![0, 0])));
    }

    #[test]
    fn jt_cases_include_goldens() {
        let cases = jt_cases(4);
        assert!(cases.contains(&IntegerSequence::new(vec![4, 5])));
        assert!(cases.contains(&IntegerSequence::new(vec![])));
        assert!(!cases.contains(&IntegerSequence::new(vec![6, 6])));
        assert!(cases.contains(&IntegerSequence::new(vec![-4, 6, 2])));
    }
}
