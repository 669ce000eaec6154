//! Classical symmetric polynomials and Jacobi–Trudi determinants at monomial level.

use alloc::vec;
use alloc::vec::Vec;

use crate::oracle::poly::{Monomial, MonomialPolynomial};
use crate::oracle::tableaux::AlphabetSpec;
use crate::partition::IntegerSequence;

/// `h_k` in the variables `vars`, inside a ring of the given shape.
fn complete_in(k: usize, vars: core::ops::Range<usize>, arity: usize, positives: usize) -> MonomialPolynomial {
    let mut out = MonomialPolynomial::zero(arity, positives);
    let vars: Vec<usize> = vars.collect();
    let mut exponents = vec![0u32; arity];
    fn go(k: usize, vars: &[usize], exponents: &mut Vec<u32>, out: &mut MonomialPolynomial) {
        match vars.split_first() {
            None => {
                if k == 0 {
                    out.add_term(Monomial::new(exponents.clone()), 1);
                }
            }
            Some((&v, rest)) => {
                for e in 0..=k {
                    exponents[v] = e as u32;
                    go(k - e, rest, exponents, out);
                }
                exponents[v] = 0;
            }
        }
    }
    go(k, &vars, &mut exponents, &mut out);
    out
}

/// `e_k` in the variables `vars`.
fn elementary_in(k: usize, vars: core::ops::Range<usize>, arity: usize, positives: usize) -> MonomialPolynomial {
    let mut out = MonomialPolynomial::zero(arity, positives);
    let vars: Vec<usize> = vars.collect();
    let mut exponents = vec![0u32; arity];
    fn go(k: usize, vars: &[usize], exponents: &mut Vec<u32>, out: &mut MonomialPolynomial) {
        if k == 0 {
            out.add_term(Monomial::new(exponents.clone()), 1);
            return;
        }
        for (i, &v) in vars.iter().enumerate() {
            exponents[v] = 1;
            go(k - 1, &vars[i + 1..], exponents, out);
            exponents[v] = 0;
        }
    }
    go(k, &vars, &mut exponents, &mut out);
    out
}

/// Complete homogeneous `h_k(x_1..x_p)`.
pub fn h_expand(k: usize, p: usize) -> MonomialPolynomial {
    complete_in(k, 0..p, p, p)
}

/// Elementary `e_k(x_1..x_p)`; zero for `k > p`.
pub fn e_expand(k: usize, p: usize) -> MonomialPolynomial {
    elementary_in(k, 0..p, p, p)
}

/// Power sum `p_k(x_1..x_p)`, `k ≥ 1`.
pub fn p_expand(k: usize, p: usize) -> MonomialPolynomial {
    assert!(k >= 1, "power sums start at p_1");
    let mut out = MonomialPolynomial::zero(p, p);
    for v in 0..p {
        let mut e = vec![0u32; p];
        e[v] = k as u32;
        out.add_term(Monomial::new(e), 1);
    }
    out
}

/// `h_k[X − Y] = Σ_j (−1)^j h_{k−j}[X] e_j[Y]`; zero for `k < 0`.
pub fn h_difference_expand(k: i64, spec: AlphabetSpec) -> MonomialPolynomial {
    let mut out = spec.zero();
    if k < 0 {
        return out;
    }
    let k = k as usize;
    let (arity, p) = (spec.arity(), spec.positives);
    for j in 0..=k.min(spec.negatives) {
        let h = complete_in(k - j, 0..p, arity, p);
        let e = elementary_in(j, p..arity, arity, p);
        let term = &h * &e;
        out += &if j % 2 == 0 { term } else { -&term };
    }
    out
}

/// `det(h_{α_i + j − i}[X − Y])` by Laplace expansion over column subsets.
///
/// Rows are processed bottom-up; `minors[S]` holds the determinant of the last
/// `|S|` rows restricted to the columns in the bitmask `S`.
pub fn jt_determinant_expand(seq: &IntegerSequence, spec: AlphabetSpec) -> MonomialPolynomial {
    let l = seq.length();
    assert!(l < usize::BITS as usize, "determinant too large");
    let entry = |i: usize, j: usize| -> MonomialPolynomial {
        h_difference_expand(seq.parts()[i] + j as i64 - i as i64, spec)
    };
    let mut minors: Vec<Option<MonomialPolynomial>> = vec![None; 1 << l];
    minors[0] = Some(spec.one());
    for row in (0..l).rev() {
        let size = l - row;
        let entries: Vec<MonomialPolynomial> = (0..l).map(|j| entry(row, j)).collect();
        for mask in 0usize..(1 << l) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let mut det = spec.zero();
            for (position, col) in (0..l).filter(|c| mask & (1 << c) != 0).enumerate() {
                if entries[col].is_zero() {
                    continue;
                }
                let Some(minor) = &minors[mask & !(1 << col)] else {
                    continue;
                };
                if minor.is_zero() {
                    continue;
                }
                let product = &entries[col] * minor;
                det += &if position % 2 == 0 { product } else { -&product };
            }
            minors[mask] = Some(det);
        }
    }
    minors[(1 << l) - 1].take().unwrap_or_else(|| spec.zero())
}
