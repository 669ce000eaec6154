//! Vertical and horizontal strips, and the α-removable corners that drive the
//! cancellation involution.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

/// Every `λ ⊆ α` such that `α/λ` is a vertical strip of `k` cells, in
/// lexicographically decreasing order.
pub fn vertical_strip_removals(alpha: &Partition, k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if k > alpha.length() {
        return out;
    }
    let mut current = Vec::with_capacity(alpha.length());
    remove_column_cells(alpha.parts(), k, usize::MAX, &mut current, &mut out);
    out
}

fn remove_column_cells(
    rows: &[usize],
    remaining: usize,
    previous: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let Some((&row, rest)) = rows.split_first() else {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(current.clone()));
        }
        return;
    };
    if remaining > rows.len() {
        return;
    }
    // keep first, so output is lexicographically decreasing
    if row <= previous && remaining < rows.len() {
        current.push(row);
        remove_column_cells(rest, remaining, row, current, out);
        current.pop();
    }
    if remaining > 0 && row - 1 <= previous {
        current.push(row - 1);
        remove_column_cells(rest, remaining - 1, row - 1, current, out);
        current.pop();
    }
}

/// Every `μ ⊇ λ` such that `μ/λ` is a horizontal strip of `k` cells, i.e.
/// `μ_1 ≥ λ_1 ≥ μ_2 ≥ λ_2 ≥ …`, in lexicographically decreasing order.
pub fn horizontal_strip_additions(lambda: &Partition, k: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    let top = lambda
        .part(0)
        .checked_add(k)
        .ok_or(Error::Overflow("adding a horizontal strip"))?;
    let mut current = Vec::with_capacity(lambda.length() + 1);
    add_row_cells(lambda.parts(), 0, k, top, &mut current, &mut out);
    Ok(out)
}

fn add_row_cells(
    lambda: &[usize],
    row: usize,
    remaining: usize,
    ceiling: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let floor = lambda.get(row).copied().unwrap_or(0);
    if row > lambda.len() {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(current.clone()));
        }
        return;
    }
    // rows below can absorb at most λ_row more cells in total
    let capacity_below = floor;
    let most = (ceiling - floor).min(remaining);
    let least = remaining.saturating_sub(capacity_below);
    if least > most {
        return;
    }
    for extra in (least..=most).rev() {
        current.push(floor + extra);
        add_row_cells(lambda, row + 1, remaining - extra, floor, current, out);
        current.pop();
    }
}

/// Whether `big/small` is a vertical strip (at most one cell per row).
pub fn is_vertical_strip(big: &Partition, small: &Partition) -> bool {
    big.contains(small) && (0..big.length()).all(|i| big.part(i) - small.part(i) <= 1)
}

/// Whether `big/small` is a horizontal strip (at most one cell per column).
pub fn is_horizontal_strip(big: &Partition, small: &Partition) -> bool {
    big.contains(small) && (0..big.length()).all(|i| big.part(i + 1) <= small.part(i))
}

/// The α-removable corners of `μ`, sorted by increasing column.
///
/// The candidate in row `i` is the last cell `(i, α_i)` of that row of `α`. It is
/// removable when it lies in `μ` and `μ` has no cell directly on top of it,
/// that is `μ_i ≥ α_i` and `μ_{i+1} < α_i`. Distinct removable corners never
/// share a column: equal parts `α_i = α_{i'}` with `i < i'` would force
/// `μ_{i+1} ≥ μ_{i'} ≥ α_i`.
pub fn alpha_removable_corners(alpha: &Partition, mu: &Partition) -> Vec<Cell> {
    let mut cells: Vec<Cell> = alpha
        .parts()
        .iter()
        .enumerate()
        .filter(|&(i, &a)| mu.part(i) >= a && mu.part(i + 1) < a)
        .map(|(i, &a)| Cell::new(i + 1, a))
        .collect();
    cells.sort_by_key(|c| c.column);
    debug_assert!(cells.windows(2).all(|w| w[0].column < w[1].column));
    cells
}
