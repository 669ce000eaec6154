//! Operators on Schur expansions.
//!
//! `multiply_h` is `U_(k)` (Pieri), `skew_column` is `D_(1^j)` (dual Pieri),
//! `p_perp` is the adjoint of multiplication by a power sum, computed through
//! straightening, with `murnaghan_nakayama_perp` as an independent rim-hook
//! enumeration of the same operator.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::expansion::{GradedExpansion, SchurExpansion};
use crate::partition::{IntegerSequence, Partition};
use crate::straighten::{staircase_straighten, Sign};
use crate::strips::{horizontal_strip_additions, vertical_strip_removals};

/// `U_(k)`: multiplication by `h_k`.
pub fn multiply_h(expansion: &SchurExpansion, k: usize) -> Result<SchurExpansion> {
    expansion.map_linear(|lambda| {
        Ok(horizontal_strip_additions(lambda, k)?
            .into_iter()
            .map(|mu| (mu, 1))
            .collect())
    })
}

/// `D_(1^j)`: skewing by the column `(1^j)`.
pub fn skew_column(expansion: &SchurExpansion, j: usize) -> SchurExpansion {
    let out: core::result::Result<_, core::convert::Infallible> = expansion.map_linear(|lambda| {
        Ok(vertical_strip_removals(lambda, j)
            .into_iter()
            .map(|mu| (mu, 1))
            .collect())
    });
    match out {
        Ok(e) => e,
        Err(never) => match never {},
    }
}

fn require_positive(name: &'static str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::OutOfRange { name, min: 1, value: 0 });
    }
    Ok(())
}

/// `p_i^⊥ s_α = Σ_k s_(α_1, …, α_k − i, …, α_n)`, each term straightened.
pub fn p_perp(i: usize, alpha: &Partition) -> Result<SchurExpansion> {
    require_positive("i", i)?;
    let shift = i64::try_from(i).map_err(|_| Error::Overflow("converting i"))?;
    let base = alpha.to_sequence();
    let mut out = SchurExpansion::zero();
    for k in 0..alpha.length() {
        let mut parts = base.parts().to_vec();
        parts[k] -= shift;
        let s = staircase_straighten(&IntegerSequence::new(parts))?;
        out += SchurExpansion::from_straightening(&s);
    }
    Ok(out)
}

/// A border strip removed from a partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BorderStrip {
    /// First (top) row touched, 1-based.
    pub top_row: usize,
    /// Last (bottom) row touched, 1-based.
    pub bottom_row: usize,
    /// What remains after removal.
    pub remainder: Partition,
}

impl BorderStrip {
    pub fn height(&self) -> usize {
        self.bottom_row - self.top_row
    }

    /// `(-1)^(rows touched - 1)`.
    pub fn sign(&self) -> Sign {
        Sign::power(self.height())
    }
}

/// Every border strip of `size` cells removable from `alpha`, found by walking
/// the rim.
///
/// The rim runs from `(1, α_1)` to `(l, 1)`, stepping down when the cell below
/// is in the diagram and left otherwise. A removable strip is a contiguous run
/// of that path that starts at the end of a row and is not followed by a
/// downward step.
pub fn border_strips(alpha: &Partition, size: usize) -> Vec<BorderStrip> {
    let mut out = Vec::new();
    if size == 0 || alpha.is_empty() {
        return out;
    }
    // rim cells as (row, column), 1-based
    let mut rim = Vec::new();
    let (mut row, mut col) = (1usize, alpha.part(0));
    loop {
        rim.push((row, col));
        if alpha.part(row) >= col {
            row += 1;
        } else if col > 1 {
            col -= 1;
        } else {
            break;
        }
    }
    for start in 0..rim.len() {
        let end = start + size - 1;
        if end >= rim.len() {
            break;
        }
        let (top_row, top_col) = rim[start];
        if top_col != alpha.part(top_row - 1) {
            continue;
        }
        if end + 1 < rim.len() && rim[end + 1].0 != rim[end].0 {
            continue;
        }
        let mut parts = alpha.parts().to_vec();
        for &(r, _) in &rim[start..=end] {
            parts[r - 1] -= 1;
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        out.push(BorderStrip {
            top_row,
            bottom_row: rim[end].0,
            remainder: Partition::from_parts_unchecked(parts),
        });
    }
    out
}

/// `p_i^⊥ s_α` by the Murnaghan–Nakayama rule: `Σ (-1)^(ht) s_(α − strip)` over
/// border strips of size `i`.
pub fn murnaghan_nakayama_perp(i: usize, alpha: &Partition) -> Result<SchurExpansion> {
    require_positive("i", i)?;
    let mut out = SchurExpansion::zero();
    for strip in border_strips(alpha, i) {
        out.add_signed(strip.remainder.clone(), strip.sign());
    }
    Ok(out)
}

/// `Γ_1 s_α = (Σ_i U_(i)) (Σ_j (-1)^j D_(1^j)) s_α`, truncated to degrees `≤ max_degree`.
pub fn gamma_one(alpha: &Partition, max_degree: usize) -> Result<GradedExpansion> {
    let start = SchurExpansion::schur(alpha.clone());
    let mut out = GradedExpansion::new();
    for j in 0..=alpha.length() {
        let skewed = skew_column(&start, j).scale(Sign::power(j).to_i64());
        for i in 0..=max_degree {
            for (mu, c) in multiply_h(&skewed, i)?.iter() {
                if mu.weight() <= max_degree {
                    out.add_term(mu.clone(), c);
                }
            }
        }
    }
    Ok(out)
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
    fn pieri_examples() {
        assert_eq!(multiply_h(&s(&[1]), 1).unwrap(), s(&[2]) + s(&[1, 1]));
        assert_eq!(multiply_h(&s(&[3, 1]), 0).unwrap(), s(&[3, 1]));
        assert_eq!(multiply_h(&s(&[]), 3).unwrap(), s(&[3]));
    }

    #[test]
    fn skew_examples() {
        assert_eq!(skew_column(&s(&[2, 1]), 1), s(&[2]) + s(&[1, 1]));
        assert_eq!(skew_column(&s(&[2, 1]), 0), s(&[2, 1]));
        assert!(skew_column(&s(&[1]), 2).is_zero());
    }

    #[test]
    fn perp_example_both_routes() {
        let expected = (s(&[4, 4, 4, 2, 1]) + s(&[6, 3, 3, 2, 1]) + s(&[6, 5, 4])).scale(-1);
        let alpha = p(&[6, 5, 4, 2, 1]);
        assert_eq!(p_perp(3, &alpha).unwrap(), expected);
        assert_eq!(murnaghan_nakayama_perp(3, &alpha).unwrap(), expected);
    }

    #[test]
    fn perp_small_cases() {
        assert_eq!(p_perp(1, &p(&[1])).unwrap(), s(&[]));
        assert!(p_perp(2, &p(&[1])).unwrap().is_zero());
        assert!(p_perp(9, &p(&[2, 1])).unwrap().is_zero());
        assert_eq!(murnaghan_nakayama_perp(1, &p(&[2])).unwrap(), s(&[1]));
        assert!(murnaghan_nakayama_perp(5, &p(&[2, 1])).unwrap().is_zero());
        assert!(matches!(p_perp(0, &p(&[1])), Err(Error::OutOfRange { .. })));
        assert!(matches!(murnaghan_nakayama_perp(0, &p(&[1])), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn border_strip_heights() {
        let strips = border_strips(&p(&[6, 5, 4, 2, 1]), 3);
        let found: Vec<_> = strips
            .iter()
            .map(|b| (b.remainder.clone(), b.height()))
            .collect();
        assert!(found.contains(&(p(&[6, 5, 4]), 1)));
        assert!(found.contains(&(p(&[4, 4, 4, 2, 1]), 1)));
        assert!(found.contains(&(p(&[6, 3, 3, 2, 1]), 1)));
        assert_eq!(found.len(), 3);
        assert_eq!(border_strips(&p(&[2, 1]), 3), vec![BorderStrip {
            top_row: 1,
            bottom_row: 2,
            remainder: p(&[]),
        }]);
    }

    #[test]
    fn gamma_one_examples() {
        let g = gamma_one(&p(&[1]), 2).unwrap();
        assert_eq!(g.degree(2), s(&[1, 1]));
        assert_eq!(g.degree(0), s(&[]).scale(-1));
        assert!(g.degree(1).is_zero());
        let g = gamma_one(&p(&[]), 4).unwrap();
        for k in 0..=4 {
            assert_eq!(g.degree(k), s(&[k]));
        }
    }
}
