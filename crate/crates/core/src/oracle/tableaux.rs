//! Semistandard and signed tableaux, enumerated explicitly.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::oracle::poly::{Monomial, MonomialPolynomial};
use crate::partition::Partition;

/// Sizes of the positive alphabet `X = {x_1..x_p}` and negative alphabet `Y = {y_1..y_q}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AlphabetSpec {
    pub positives: usize,
    pub negatives: usize,
}

impl AlphabetSpec {
    pub const fn new(positives: usize, negatives: usize) -> Self {
        AlphabetSpec {
            positives,
            negatives,
        }
    }

    pub fn arity(&self) -> usize {
        self.positives + self.negatives
    }

    pub fn zero(&self) -> MonomialPolynomial {
        MonomialPolynomial::zero(self.arity(), self.positives)
    }

    pub fn one(&self) -> MonomialPolynomial {
        MonomialPolynomial::one(self.arity(), self.positives)
    }

    /// Variable index of `x_a` (1-based `a`).
    pub fn x(&self, a: usize) -> usize {
        a - 1
    }

    /// Variable index of `y_a` (1-based `a`).
    pub fn y(&self, a: usize) -> usize {
        self.positives + a - 1
    }
}

/// A letter of `X − Y`. Negative letters precede positive ones, and ties go by
/// absolute value: `−1 < −2 < … < −q < 1 < 2 < … < p`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    Negative(u32),
    Positive(u32),
}

impl Letter {
    /// `-a` for negative input, `a` for positive; zero is not a letter.
    pub fn from_signed(v: i32) -> Option<Letter> {
        match v {
            0 => None,
            v if v < 0 => Some(Letter::Negative(v.unsigned_abs())),
            v => Some(Letter::Positive(v as u32)),
        }
    }

    pub fn is_negative(self) -> bool {
        matches!(self, Letter::Negative(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Negative(a) => write!(f, "-{}", a),
            Letter::Positive(a) => write!(f, "{}", a),
        }
    }
}

/// A filling of a diagram by signed letters: rows and columns weakly increase,
/// positive letters strictly increase up columns, negative letters strictly
/// increase along rows. Row 0 is the longest row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedTableau {
    shape: Partition,
    rows: Vec<Vec<Letter>>,
}

impl SignedTableau {
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::Verification("empty row in tableau".into()));
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &letter) in row.iter().enumerate() {
                if c > 0 {
                    let left = row[c - 1];
                    if left > letter || (left == letter && letter.is_negative()) {
                        return Err(Error::Verification(alloc::format!(
                            "row condition fails at row {} column {}",
                            r + 1,
                            c + 1
                        )));
                    }
                }
                if r > 0 {
                    let below = rows[r - 1][c];
                    if below > letter || (below == letter && !letter.is_negative()) {
                        return Err(Error::Verification(alloc::format!(
                            "column condition fails at row {} column {}",
                            r + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(SignedTableau { shape, rows })
    }

    /// Builds from signed integers, `-a` meaning the negative letter `-a`.
    pub fn from_signed_rows(rows: &[&[i32]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| {
                        Letter::from_signed(v).ok_or(Error::Parse {
                            token: "0".into(),
                            reason: "zero is not a letter",
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SignedTableau::new(rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    /// `Π x_a` over positive letters times `Π (−y_a)` over negative letters.
    pub fn weight(&self, spec: AlphabetSpec) -> Result<MonomialPolynomial> {
        let mut exponents = vec![0u32; spec.arity()];
        let mut negatives = 0usize;
        for &letter in self.rows.iter().flatten() {
            let var = match letter {
                Letter::Positive(a) if (a as usize) <= spec.positives => spec.x(a as usize),
                Letter::Negative(a) if (a as usize) <= spec.negatives => {
                    negatives += 1;
                    spec.y(a as usize)
                }
                _ => {
                    return Err(Error::Verification(alloc::format!(
                        "letter {} outside the alphabet",
                        letter
                    )))
                }
            };
            exponents[var] += 1;
        }
        let mut p = spec.zero();
        p.add_term(Monomial::new(exponents), if negatives.is_multiple_of(2) { 1 } else { -1 });
        Ok(p)
    }
}

/// `s_λ(x_1..x_p)` as a sum over semistandard tableaux with entries in `1..=p`.
pub fn ssyt_expand(lambda: &Partition, p: usize) -> MonomialPolynomial {
    let mut out = MonomialPolynomial::zero(p, p);
    if lambda.length() > p {
        return out;
    }
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0u32; p];
    fill_ssyt(lambda, p, 0, 0, &mut grid, &mut content, &mut out);
    out
}

fn fill_ssyt(
    lambda: &Partition,
    p: usize,
    row: usize,
    col: usize,
    grid: &mut Vec<Vec<usize>>,
    content: &mut Vec<u32>,
    out: &mut MonomialPolynomial,
) {
    if row == lambda.length() {
        out.add_term(Monomial::new(content.clone()), 1);
        return;
    }
    let (next_row, next_col) = if col + 1 == lambda.part(row) {
        (row + 1, 0)
    } else {
        (row, col + 1)
    };
    let mut low = 1;
    if col > 0 {
        low = low.max(grid[row][col - 1]);
    }
    if row > 0 {
        low = low.max(grid[row - 1][col] + 1);
    }
    for v in low..=p {
        grid[row][col] = v;
        content[v - 1] += 1;
        fill_ssyt(lambda, p, next_row, next_col, grid, content, out);
        content[v - 1] -= 1;
    }
}

/// Letters of the alphabet in increasing order.
fn ordered_letters(spec: AlphabetSpec) -> Vec<Letter> {
    (1..=spec.negatives as u32)
        .map(Letter::Negative)
        .chain((1..=spec.positives as u32).map(Letter::Positive))
        .collect()
}

struct SignedFill<'a> {
    lambda: &'a Partition,
    spec: AlphabetSpec,
    letters: Vec<Letter>,
    grid: Vec<Vec<usize>>,
    exponents: Vec<u32>,
    budget: Option<Vec<u32>>,
    negatives: usize,
}

impl SignedFill<'_> {
    fn variable(&self, letter: Letter) -> usize {
        match letter {
            Letter::Positive(a) => self.spec.x(a as usize),
            Letter::Negative(a) => self.spec.y(a as usize),
        }
    }

    fn run(&mut self, row: usize, col: usize, visit: &mut dyn FnMut(&[u32], usize)) {
        if row == self.lambda.length() {
            visit(&self.exponents, self.negatives);
            return;
        }
        let (next_row, next_col) = if col + 1 == self.lambda.part(row) {
            (row + 1, 0)
        } else {
            (row, col + 1)
        };
        for idx in 0..self.letters.len() {
            let letter = self.letters[idx];
            if col > 0 {
                let left = self.grid[row][col - 1];
                if idx < left || (idx == left && letter.is_negative()) {
                    continue;
                }
            }
            if row > 0 {
                let below = self.grid[row - 1][col];
                if idx < below || (idx == below && !letter.is_negative()) {
                    continue;
                }
            }
            let var = self.variable(letter);
            if let Some(budget) = &self.budget {
                if self.exponents[var] >= budget[var] {
                    continue;
                }
            }
            self.grid[row][col] = idx;
            self.exponents[var] += 1;
            if letter.is_negative() {
                self.negatives += 1;
            }
            self.run(next_row, next_col, visit);
            self.exponents[var] -= 1;
            if letter.is_negative() {
                self.negatives -= 1;
            }
        }
    }
}

fn signed_fill<'a>(lambda: &'a Partition, spec: AlphabetSpec, budget: Option<Vec<u32>>) -> SignedFill<'a> {
    SignedFill {
        lambda,
        spec,
        letters: ordered_letters(spec),
        grid: lambda.parts().iter().map(|&len| vec![0; len]).collect(),
        exponents: vec![0; spec.arity()],
        budget,
        negatives: 0,
    }
}

/// `s_λ[X − Y]` as the signed sum over signed tableaux of shape `λ`.
pub fn signed_tableaux_expand(lambda: &Partition, spec: AlphabetSpec) -> MonomialPolynomial {
    let mut out = spec.zero();
    let mut fill = signed_fill(lambda, spec, None);
    fill.run(0, 0, &mut |exponents, negatives| {
        out.add_term(
            Monomial::new(exponents.to_vec()),
            if negatives.is_multiple_of(2) { 1 } else { -1 },
        );
    });
    out
}

/// One coefficient of `s_λ[X − Y]`, enumerating only tableaux with the given content.
pub fn signed_tableaux_coefficient(lambda: &Partition, spec: AlphabetSpec, exponents: &[u32]) -> i64 {
    assert_eq!(exponents.len(), spec.arity(), "exponent vector arity mismatch");
    if exponents.iter().map(|&e| e as usize).sum::<usize>() != lambda.weight() {
        return 0;
    }
    let mut total = 0i64;
    let mut fill = signed_fill(lambda, spec, Some(exponents.to_vec()));
    fill.run(0, 0, &mut |_, negatives| {
        total += if negatives.is_multiple_of(2) { 1 } else { -1 };
    });
    total
}
