//! Straightening of Jacobi–Trudi indices.
//!
//! Any integer sequence `α` defines `det(h_{α_i + j - i})`, and that determinant
//! equals zero or `±s_λ` for a partition `λ` of the same weight. Two independent
//! routes compute `λ`: sorting the shifted sequence `α + δ` (staircase), and
//! repeated adjacent row exchanges `(a, b) -> (b - 1, a + 1)`.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::partition::{IntegerSequence, Partition};

/// A sign `±1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn power(k: usize) -> Sign {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Outcome of straightening: the determinant vanishes, or equals `sign * s_partition`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Straightening {
    Zero,
    Signed { sign: Sign, partition: Partition },
}

impl Straightening {
    pub fn is_zero(&self) -> bool {
        matches!(self, Straightening::Zero)
    }

    fn signed(sign: Sign, parts: Vec<usize>) -> Self {
        Straightening::Signed {
            sign,
            partition: Partition::from_parts_unchecked(parts),
        }
    }
}

impl fmt::Display for Straightening {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Straightening::Zero => f.write_str("0"),
            Straightening::Signed { sign, partition } => write!(f, "{}s{}", sign, partition),
        }
    }
}

fn to_part(value: i128) -> Result<usize> {
    usize::try_from(value).map_err(|_| Error::Overflow("converting a straightened part"))
}

/// Straightens by sorting `α + δ`, `δ = (l-1, ..., 1, 0)`.
///
/// Zero when a shifted entry is negative (an identically zero row) or when two
/// shifted entries coincide (a repeated row).
pub fn staircase_straighten(seq: &IntegerSequence) -> Result<Straightening> {
    let l = seq.length();
    // i128 holds any i64 part plus any staircase offset.
    let mut shifted: Vec<i128> = seq
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i128 + (l - 1 - i) as i128)
        .collect();
    if shifted.iter().any(|&b| b < 0) {
        return Ok(Straightening::Zero);
    }
    let mut inversions = 0usize;
    for i in 0..l {
        for j in i + 1..l {
            match shifted[i].cmp(&shifted[j]) {
                core::cmp::Ordering::Equal => return Ok(Straightening::Zero),
                core::cmp::Ordering::Less => inversions += 1,
                core::cmp::Ordering::Greater => {}
            }
        }
    }
    shifted.sort_unstable_by(|a, b| b.cmp(a));
    let parts = shifted
        .iter()
        .enumerate()
        .map(|(i, &b)| to_part(b - (l - 1 - i) as i128))
        .collect::<Result<Vec<_>>>()?;
    Ok(Straightening::signed(Sign::power(inversions), parts))
}

/// One adjacent exchange applied during row-exchange straightening.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExchangeStep {
    /// Index of the left part of the exchanged pair (0-based).
    pub position: usize,
    /// Sequence after the exchange.
    pub sequence: IntegerSequence,
    /// Accumulated sign after the exchange.
    pub sign: Sign,
}

/// Result of row-exchange straightening along with the exchanges performed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExchangeTrace {
    pub steps: Vec<ExchangeStep>,
    pub result: Straightening,
}

/// The single adjacent exchange `(a, b) -> (b - 1, a + 1)`.
///
/// `None` when `b = a + 1`, where the exchange maps the pair to itself.
pub fn exchange_pair(a: i64, b: i64) -> Result<Option<(i64, i64)>> {
    let overflow = || Error::Overflow("exchanging adjacent parts");
    if b.checked_sub(a).ok_or_else(overflow)? == 1 {
        return Ok(None);
    }
    let left = b.checked_sub(1).ok_or_else(overflow)?;
    let right = a.checked_add(1).ok_or_else(overflow)?;
    Ok(Some((left, right)))
}

/// Straightens by repeatedly exchanging the leftmost out-of-order adjacent pair.
pub fn row_exchange_straighten(seq: &IntegerSequence) -> Result<Straightening> {
    row_exchange_trace(seq).map(|trace| trace.result)
}

/// Like [`row_exchange_straighten`], recording every intermediate sequence.
pub fn row_exchange_trace(seq: &IntegerSequence) -> Result<ExchangeTrace> {
    let l = seq.length() as u64;
    let abs_weight = seq
        .parts()
        .iter()
        .try_fold(0u64, |acc, &p| acc.checked_add(p.unsigned_abs()))
        .ok_or(Error::Overflow("bounding row exchanges"))?;
    let cap = abs_weight.saturating_add(l.saturating_mul(l));

    let mut parts = seq.parts().to_vec();
    let mut sign = Sign::Plus;
    let mut steps = Vec::new();
    while let Some(position) = parts.windows(2).position(|w| w[0] < w[1]) {
        if steps.len() as u64 >= cap {
            return Err(Error::IterationCap {
                cap,
                sequence: seq.to_string(),
            });
        }
        match exchange_pair(parts[position], parts[position + 1])? {
            None => {
                return Ok(ExchangeTrace {
                    steps,
                    result: Straightening::Zero,
                })
            }
            Some((left, right)) => {
                parts[position] = left;
                parts[position + 1] = right;
                sign = -sign;
                steps.push(ExchangeStep {
                    position,
                    sequence: IntegerSequence::new(parts.clone()),
                    sign,
                });
            }
        }
    }
    let result = if parts.last().is_some_and(|&p| p < 0) {
        Straightening::Zero
    } else {
        let parts = parts
            .iter()
            .map(|&p| to_part(p as i128))
            .collect::<Result<Vec<_>>>()?;
        Straightening::signed(sign, parts)
    };
    Ok(ExchangeTrace { steps, result })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn seq(parts: &[i64]) -> IntegerSequence {
        IntegerSequence::from(parts)
    }

    fn signed(sign: Sign, parts: &[usize]) -> Straightening {
        Straightening::Signed {
            sign,
            partition: Partition::new(parts.to_vec()).unwrap(),
        }
    }

    #[test]
    fn golden_straightenings() {
        let cases: [(&[i64], Straightening); 5] = [
            (&[5, 3, 2, 7], signed(Sign::Plus, &[5, 5, 4, 3])),
            (&[4, 5], Straightening::Zero),
            (&[-2, 5, 4, 3, 3], signed(Sign::Plus, &[4, 3, 2, 2, 2])),
            (&[3, 5, 4, 3, 3], signed(Sign::Minus, &[4, 4, 4, 3, 3])),
            (&[3, 1], signed(Sign::Plus, &[3, 1])),
        ];
        for (input, expected) in cases {
            assert_eq!(staircase_straighten(&seq(input)).unwrap(), expected, "{:?}", input);
            assert_eq!(row_exchange_straighten(&seq(input)).unwrap(), expected, "{:?}", input);
        }
    }

    #[test]
    fn exchange_chains() {
        let trace = row_exchange_trace(&seq(&[5, 3, 2, 7])).unwrap();
        let chain: Vec<_> = trace.steps.iter().map(|s| s.sequence.parts().to_vec()).collect();
        assert_eq!(chain, vec![vec![5, 3, 6, 3], vec![5, 5, 4, 3]]);
        assert_eq!(trace.steps[0].sign, Sign::Minus);

        let trace = row_exchange_trace(&seq(&[-2, 5, 4, 3, 3])).unwrap();
        let chain: Vec<_> = trace.steps.iter().map(|s| s.sequence.parts().to_vec()).collect();
        assert_eq!(
            chain,
            vec![
                vec![4, -1, 4, 3, 3],
                vec![4, 3, 0, 3, 3],
                vec![4, 3, 2, 1, 3],
                vec![4, 3, 2, 2, 2],
            ]
        );
        let signs: Vec<_> = trace.steps.iter().map(|s| s.sign).collect();
        assert_eq!(signs, vec![Sign::Minus, Sign::Plus, Sign::Minus, Sign::Plus]);
    }

    #[test]
    fn zero_cases() {
        assert!(row_exchange_straighten(&seq(&[0, 1])).unwrap().is_zero());
        assert!(staircase_straighten(&seq(&[0, 1])).unwrap().is_zero());
        assert!(staircase_straighten(&seq(&[2, -1])).unwrap().is_zero());
        assert!(row_exchange_straighten(&seq(&[2, -1])).unwrap().is_zero());
        assert!(staircase_straighten(&seq(&[-6, 5, 4, 3, 3])).unwrap().is_zero());
    }

    #[test]
    fn empty_sequence_is_the_unit() {
        let expected = Straightening::Signed {
            sign: Sign::Plus,
            partition: Partition::empty(),
        };
        assert_eq!(staircase_straighten(&seq(&[])).unwrap(), expected);
        assert_eq!(row_exchange_straighten(&seq(&[])).unwrap(), expected);
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        assert_eq!(
            staircase_straighten(&seq(&[2, 0, 0])).unwrap(),
            signed(Sign::Plus, &[2])
        );
        assert_eq!(
            row_exchange_straighten(&seq(&[0, 2])).unwrap(),
            signed(Sign::Minus, &[1, 1])
        );
    }

    #[test]
    fn extreme_parts_do_not_panic() {
        let big = seq(&[i64::MIN, i64::MAX]);
        assert!(staircase_straighten(&big).is_ok());
        assert!(matches!(row_exchange_straighten(&big), Err(Error::Overflow(_))));
    }

    #[test]
    fn double_exchange_is_identity() {
        for a in -5..=5 {
            for b in -5..=5 {
                if let Some((x, y)) = exchange_pair(a, b).unwrap() {
                    assert_eq!(exchange_pair(x, y).unwrap(), Some((a, b)));
                }
            }
        }
    }
}
