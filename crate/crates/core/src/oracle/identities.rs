//! Identity checks between independently expanded polynomials.

use alloc::vec::Vec;

use crate::error::Result;
use crate::oracle::poly::{Monomial, MonomialPolynomial};
use crate::oracle::symmetric::{h_expand, jt_determinant_expand};
use crate::oracle::tableaux::{signed_tableaux_expand, ssyt_expand, AlphabetSpec};
use crate::partition::{partitions_in_box, partitions_up_to, IntegerSequence, Partition};
use crate::straighten::{staircase_straighten, Straightening};
use crate::strips::vertical_strip_removals;
use crate::vertex::vertex_lhs;

fn x_positions(p: usize) -> Vec<usize> {
    (0..p).collect()
}

fn y_positions(p: usize, q: usize) -> Vec<usize> {
    (p..p + q).collect()
}

/// Both sides of the Cauchy kernel in `x_1..x_p, y_1..y_q`, truncated to total degree `2d`:
/// `Σ_{|λ| ≤ d} s_λ[x] s_λ[y]` and `Π_{i,j} 1/(1 − x_i y_j)`.
pub fn cauchy_truncated(p: usize, q: usize, d: usize) -> (MonomialPolynomial, MonomialPolynomial) {
    let arity = p + q;
    let mut schur_side = MonomialPolynomial::zero(arity, p);
    for lambda in partitions_up_to(d) {
        if lambda.length() > p.min(q) {
            continue;
        }
        let sx = ssyt_expand(&lambda, p).embed(&x_positions(p), arity, p);
        let sy = ssyt_expand(&lambda, q).embed(&y_positions(p, q), arity, p);
        schur_side += &(&sx * &sy);
    }
    let bound = Some(2 * d as u32);
    let mut product = MonomialPolynomial::one(arity, p);
    for i in 0..p {
        for j in 0..q {
            let mut geometric = MonomialPolynomial::zero(arity, p);
            for m in 0..=d as u32 {
                let mut e = alloc::vec![0; arity];
                e[i] = m;
                e[p + j] = m;
                geometric.add_term(Monomial::new(e), 1);
            }
            product = product.mul_truncated(&geometric, bound);
        }
    }
    (schur_side, product)
}

/// Both sides of the dual Cauchy identity, exactly:
/// `Π_{i,j} (1 − x_i y_j)` and `Σ_λ (−1)^|λ| s_λ'[x] s_λ[y]` over `λ` in the `q × p` box.
pub fn dual_cauchy_truncated(p: usize, q: usize) -> (MonomialPolynomial, MonomialPolynomial) {
    let arity = p + q;
    let mut product = MonomialPolynomial::one(arity, p);
    for i in 0..p {
        for j in 0..q {
            let mut factor = MonomialPolynomial::one(arity, p);
            let mut e = alloc::vec![0; arity];
            e[i] = 1;
            e[p + j] = 1;
            factor.add_term(Monomial::new(e), -1);
            product = &product * &factor;
        }
    }
    let mut schur_side = MonomialPolynomial::zero(arity, p);
    for lambda in partitions_in_box(q, p) {
        let sx = ssyt_expand(&lambda.conjugate(), p).embed(&x_positions(p), arity, p);
        let sy = ssyt_expand(&lambda, q).embed(&y_positions(p, q), arity, p);
        let term = &sx * &sy;
        schur_side += &if lambda.weight() % 2 == 0 { term } else { -&term };
    }
    (product, schur_side)
}

/// `σ[x_1..x_{p1+p2}] = σ[first p1] σ[last p2]`, both truncated at degree `d`.
pub fn sigma_additivity_check(p1: usize, p2: usize, d: usize) -> bool {
    let arity = p1 + p2;
    let sigma = |vars: usize| {
        let mut s = MonomialPolynomial::zero(vars, vars);
        for k in 0..=d {
            s += &h_expand(k, vars);
        }
        s
    };
    let whole = sigma(arity);
    let first = sigma(p1).embed(&x_positions(p1), arity, arity);
    let second = sigma(p2).embed(&(p1..arity).collect::<Vec<_>>(), arity, arity);
    whole == first.mul_truncated(&second, Some(d as u32))
}

/// `s_α[X − u]` by signed tableaux versus `Σ_k (−u)^k Σ_{α/λ vertical k-strip} s_λ[X]`,
/// with `u` the single negative variable.
pub fn negative_alphabet_corollary_check(alpha: &Partition, p: usize) -> bool {
    let spec = AlphabetSpec::new(p, 1);
    let direct = signed_tableaux_expand(alpha, spec);
    let arity = spec.arity();
    let u = MonomialPolynomial::variable(arity, p, spec.y(1));
    let minus_u = -&u;
    let mut strips = spec.zero();
    for k in 0..=alpha.length() {
        let power = minus_u.pow(k as u32);
        for lambda in vertical_strip_removals(alpha, k) {
            let s = ssyt_expand(&lambda, p).embed(&x_positions(p), arity, p);
            strips += &(&s * &power);
        }
    }
    direct == strips
}

/// Monomial form of a straightening: `sign · s_λ[X − Y]`, or zero.
pub fn straightening_polynomial(s: &Straightening, spec: AlphabetSpec) -> MonomialPolynomial {
    match s {
        Straightening::Zero => spec.zero(),
        Straightening::Signed { sign, partition } => {
            let poly = if spec.negatives == 0 {
                ssyt_expand(partition, spec.positives)
            } else {
                signed_tableaux_expand(partition, spec)
            };
            poly.scale(sign.to_i64())
        }
    }
}

/// `det(h_{α_i + j − i})` against the tableau expansion of the straightened sequence.
pub fn jt_matches_straightening(seq: &IntegerSequence, spec: AlphabetSpec) -> Result<bool> {
    let s = staircase_straighten(seq)?;
    Ok(jt_determinant_expand(seq, spec) == straightening_polynomial(&s, spec))
}

/// Signed-tableau expansion of `s_λ[X − Y]` against the Jacobi–Trudi determinant.
pub fn schur_difference_check(lambda: &Partition, spec: AlphabetSpec) -> bool {
    signed_tableaux_expand(lambda, spec) == jt_determinant_expand(&lambda.to_sequence(), spec)
}

/// Coefficient of `t^n` in `σ[tX] s_α[X − 1/t]`, computed at monomial level in
/// `x_1..x_p` through the signed tableaux of `α` on `X − {u}`, `u = 1/t`.
pub fn vertex_product_coefficient(alpha: &Partition, p: usize, n: i64) -> MonomialPolynomial {
    let spec = AlphabetSpec::new(p, 1);
    let by_u = signed_tableaux_expand(alpha, spec).collect_by(spec.y(1));
    let mut out = MonomialPolynomial::zero(p, p);
    for (k, x_part) in by_u {
        // t^m from σ[tX] meets u^k = t^(-k)
        let m = n + k as i64;
        if m >= 0 {
            out += &(&h_expand(m as usize, p) * &x_part);
        }
    }
    out
}

/// The straightened `s_(n, α)` in `x_1..x_p` against [`vertex_product_coefficient`].
pub fn vertex_monomial_check(alpha: &Partition, p: usize, n: i64) -> Result<bool> {
    let series = vertex_lhs(alpha, n, n)?;
    let mut lhs = MonomialPolynomial::zero(p, p);
    if let Some(e) = series.coefficient(n) {
        for (lambda, c) in e.iter() {
            lhs += &ssyt_expand(lambda, p).scale(c);
        }
    }
    Ok(lhs == vertex_product_coefficient(alpha, p, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cauchy_single_variables() {
        let (left, right) = cauchy_truncated(1, 1, 3);
        assert_eq!(left, right);
        assert_eq!(left.len(), 4);
        for m in 0..=3 {
            assert_eq!(left.coefficient(&[m, m]), 1);
        }
        let (left, right) = cauchy_truncated(2, 2, 2);
        assert_eq!(left, right);
        let (left, right) = cauchy_truncated(2, 1, 2);
        assert_eq!(left, right);
    }

    #[test]
    fn dual_cauchy_small() {
        let (a, b) = dual_cauchy_truncated(1, 1);
        assert_eq!(a, b);
        assert_eq!(alloc::string::ToString::to_string(&a), "-1 * x1 y1 +1");
        let (a, b) = dual_cauchy_truncated(2, 2);
        assert_eq!(a, b);
        assert_eq!(a.len(), 15);
        let (a, b) = dual_cauchy_truncated(1, 2);
        assert_eq!(a, b);
    }

    #[test]
    fn sigma_additivity() {
        assert!(sigma_additivity_check(1, 1, 2));
        assert!(sigma_additivity_check(2, 1, 3));
        assert!(sigma_additivity_check(0, 3, 4));
    }

    #[test]
    fn negative_alphabet_examples() {
        assert!(negative_alphabet_corollary_check(&p(&[1]), 1));
        assert!(negative_alphabet_corollary_check(&p(&[2, 1]), 2));
        assert!(negative_alphabet_corollary_check(&p(&[1, 1, 1]), 1));
    }

    #[test]
    fn vertex_monomial_examples() {
        for n in -3..=3 {
            assert!(vertex_monomial_check(&p(&[2, 1]), 2, n).unwrap(), "n={}", n);
        }
    }
}
