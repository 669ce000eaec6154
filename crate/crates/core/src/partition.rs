//! Partitions, integer sequences and cells.
//!
//! Both sequence types share the bracketed text form `[5,4,3,3]`; the empty
//! tuple is `[]`.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;
use core::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition in canonical form: weakly decreasing, no trailing zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition.
    pub const fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from weakly decreasing parts, stripping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        for (index, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::NotDecreasing {
                    index: index + 1,
                    previous: w[0] as i64,
                    value: w[1] as i64,
                });
            }
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from signed parts, rejecting negative or increasing entries.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(parts.len());
        for (index, &value) in parts.iter().enumerate() {
            if value < 0 {
                return Err(Error::NegativePart { index, value });
            }
            if index > 0 && parts[index - 1] < value {
                return Err(Error::NotDecreasing {
                    index,
                    previous: parts[index - 1],
                    value,
                });
            }
            out.push(usize::try_from(value).map_err(|_| Error::Overflow("converting a part"))?);
        }
        Partition::new(out)
    }

    /// Single-row partition `(k)`; empty when `k = 0`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Partition::empty()
        } else {
            Partition { parts: alloc::vec![k] }
        }
    }

    /// Single-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition {
            parts: alloc::vec![1; k],
        }
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Whether the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length()
            && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Whether `cell` lies in the diagram.
    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.column >= 1 && self.part(cell.row - 1) >= cell.column
    }

    /// The parts as a signed integer sequence.
    pub fn to_sequence(&self) -> IntegerSequence {
        IntegerSequence::new(self.parts.iter().map(|&p| p as i64).collect())
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, index: usize) -> &usize {
        self.parts.get(index).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, self.parts.iter())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{}", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let seq: IntegerSequence = s.parse()?;
        Partition::from_signed(seq.parts())
    }
}

impl TryFrom<&[usize]> for Partition {
    type Error = Error;

    fn try_from(parts: &[usize]) -> Result<Self> {
        Partition::new(parts.to_vec())
    }
}

/// An arbitrary finite integer tuple indexing a Jacobi–Trudi determinant.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IntegerSequence {
    parts: Vec<i64>,
}

impl IntegerSequence {
    pub fn new(parts: Vec<i64>) -> Self {
        IntegerSequence { parts }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts, checked.
    pub fn weight(&self) -> Result<i64> {
        self.parts
            .iter()
            .try_fold(0i64, |acc, &p| acc.checked_add(p))
            .ok_or(Error::Overflow("summing sequence parts"))
    }

    /// The sequence `(n, parts...)`.
    pub fn prepend(&self, n: i64) -> IntegerSequence {
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(n);
        parts.extend_from_slice(&self.parts);
        IntegerSequence { parts }
    }
}

impl From<Vec<i64>> for IntegerSequence {
    fn from(parts: Vec<i64>) -> Self {
        IntegerSequence { parts }
    }
}

impl From<&[i64]> for IntegerSequence {
    fn from(parts: &[i64]) -> Self {
        IntegerSequence {
            parts: parts.to_vec(),
        }
    }
}

impl fmt::Display for IntegerSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, self.parts.iter())
    }
}

impl fmt::Debug for IntegerSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerSequence{}", self)
    }
}

impl FromStr for IntegerSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                token: trimmed.to_string(),
                reason: "expected a bracketed list such as [5,4,3,3]",
            })?;
        if inner.trim().is_empty() {
            return Ok(IntegerSequence::default());
        }
        inner
            .split(',')
            .map(|token| {
                let token = token.trim();
                token.parse::<i64>().map_err(|_| Error::Parse {
                    token: token.to_string(),
                    reason: "not an integer",
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(IntegerSequence::new)
    }
}

fn write_bracketed<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    f.write_str("[")?;
    for (i, item) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", item)?;
    }
    f.write_str("]")
}

/// A cell of a Young diagram, 1-based. Row 1 is the longest row.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub row: usize,
    pub column: usize,
}

impl Cell {
    pub const fn new(row: usize, column: usize) -> Self {
        Cell { row, column }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.column)
    }
}

/// All partitions of `n`, in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// All partitions of weight at most `max_weight`, grouped by increasing weight.
pub fn partitions_up_to(max_weight: usize) -> Vec<Partition> {
    (0..=max_weight).flat_map(partitions_of).collect()
}

/// Partitions fitting inside a `rows × columns` box.
pub fn partitions_in_box(rows: usize, columns: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_box(rows, columns, &mut current, &mut out);
    out
}

fn fill_box(rows: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    out.push(Partition {
        parts: current.clone(),
    });
    if current.len() == rows {
        return;
    }
    for part in (1..=max_part).rev() {
        current.push(part);
        fill_box(rows, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn make_partition_examples() {
        let p = Partition::from_signed(&[5, 4, 3, 3]).unwrap();
        assert_eq!(p.parts(), &[5, 4, 3, 3]);
        let p = Partition::from_signed(&[2, 1, 0, 0]).unwrap();
        assert_eq!(p.parts(), &[2, 1]);
        assert_eq!(
            Partition::from_signed(&[4, 5]),
            Err(Error::NotDecreasing {
                index: 1,
                previous: 4,
                value: 5
            })
        );
        assert_eq!(
            Partition::from_signed(&[3, -1]),
            Err(Error::NegativePart { index: 1, value: -1 })
        );
    }

    #[test]
    fn text_forms() {
        let p: Partition = "[5,4,3,3]".parse().unwrap();
        assert_eq!(p.to_string(), "[5,4,3,3]");
        assert_eq!(Partition::empty().to_string(), "[]");
        let s: IntegerSequence = " [ -2, 5,4,3,3 ] ".parse().unwrap();
        assert_eq!(s.parts(), &[-2, 5, 4, 3, 3]);
        assert_eq!(s.to_string(), "[-2,5,4,3,3]");
        match "[1,x]".parse::<IntegerSequence>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("unexpected {:?}", other),
        }
        assert!("1,2".parse::<IntegerSequence>().is_err());
        assert!("[1,2]".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugate_and_containment() {
        let p = Partition::new(vec![5, 4, 3, 3]).unwrap();
        assert_eq!(p.conjugate().parts(), &[4, 4, 4, 2, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert!(p.contains(&Partition::new(vec![5, 1]).unwrap()));
        assert!(!p.contains(&Partition::new(vec![6]).unwrap()));
        assert!(p.contains_cell(Cell::new(4, 3)));
        assert!(!p.contains_cell(Cell::new(4, 4)));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let four = partitions_of(4);
        assert!(four.windows(2).all(|w| w[0] > w[1]));
        // C(4, 2) partitions fit in a 2x2 box
        assert_eq!(partitions_in_box(2, 2).len(), 6);
    }
}
