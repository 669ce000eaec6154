use std::collections::BTreeSet;

use proptest::prelude::*;
use schur_vertex_core::partition::{partitions_of, partitions_up_to};
use schur_vertex_core::strips::{is_horizontal_strip, is_vertical_strip};
use schur_vertex_core::{
    alpha_removable_corners, horizontal_strip_additions, vertical_strip_removals, Cell, Partition,
};

fn cells(p: &Partition) -> BTreeSet<(usize, usize)> {
    p.parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (1..=len).map(move |c| (i + 1, c)))
        .collect()
}

fn skew(big: &Partition, small: &Partition) -> Option<BTreeSet<(usize, usize)>> {
    let (b, s) = (cells(big), cells(small));
    s.is_subset(&b).then(|| b.difference(&s).copied().collect())
}

fn distinct<T: Ord>(items: impl Iterator<Item = T>) -> bool {
    let v: Vec<T> = items.collect();
    let n = v.len();
    v.into_iter().collect::<BTreeSet<_>>().len() == n
}

fn brute_vertical(alpha: &Partition, k: usize) -> Vec<Partition> {
    if k > alpha.weight() {
        return Vec::new();
    }
    partitions_of(alpha.weight() - k)
        .into_iter()
        .filter(|l| skew(alpha, l).is_some_and(|s| distinct(s.iter().map(|c| c.0))))
        .collect()
}

fn brute_horizontal(lambda: &Partition, k: usize) -> Vec<Partition> {
    partitions_of(lambda.weight() + k)
        .into_iter()
        .filter(|m| skew(m, lambda).is_some_and(|s| distinct(s.iter().map(|c| c.1))))
        .collect()
}

fn is_lex_decreasing(v: &[Partition]) -> bool {
    v.windows(2).all(|w| w[0] > w[1])
}

#[test]
fn vertical_removals_match_brute_force() {
    for alpha in partitions_up_to(8) {
        for k in 0..=alpha.length() + 1 {
            let got = vertical_strip_removals(&alpha, k);
            assert_eq!(got, brute_vertical(&alpha, k), "alpha={} k={}", alpha, k);
            assert!(is_lex_decreasing(&got));
            for l in &got {
                assert!(is_vertical_strip(&alpha, l));
            }
        }
    }
}

#[test]
fn horizontal_additions_match_brute_force() {
    for lambda in partitions_up_to(8) {
        for k in 0..=4 {
            let got = horizontal_strip_additions(&lambda, k).unwrap();
            assert_eq!(got, brute_horizontal(&lambda, k), "lambda={} k={}", lambda, k);
            assert!(is_lex_decreasing(&got));
            for m in &got {
                assert!(is_horizontal_strip(m, &lambda));
                // interlacing μ_1 ≥ λ_1 ≥ μ_2 ≥ λ_2 ≥ …
                for i in 0..m.length() {
                    assert!(m.part(i) >= lambda.part(i) && lambda.part(i) >= m.part(i + 1));
                }
            }
        }
    }
}

#[test]
fn predicates_match_cell_sets() {
    let ps = partitions_up_to(6);
    for a in &ps {
        for b in &ps {
            let s = skew(a, b);
            let vertical = s.as_ref().is_some_and(|s| distinct(s.iter().map(|c| c.0)));
            let horizontal = s.as_ref().is_some_and(|s| distinct(s.iter().map(|c| c.1)));
            assert_eq!(is_vertical_strip(a, b), vertical, "{} / {}", a, b);
            assert_eq!(is_horizontal_strip(a, b), horizontal, "{} / {}", a, b);
        }
    }
}

fn brute_corners(alpha: &Partition, mu: &Partition) -> Vec<Cell> {
    let m = cells(mu);
    let mut out: Vec<Cell> = (1..=alpha.length())
        .map(|i| (i, alpha.part(i - 1)))
        .filter(|&(i, c)| m.contains(&(i, c)) && !m.contains(&(i + 1, c)))
        .map(|(i, c)| Cell::new(i, c))
        .collect();
    out.sort_by_key(|c| c.column);
    out
}

#[test]
fn corners_match_brute_force() {
    let alphas = partitions_up_to(6);
    let mus = partitions_up_to(8);
    for alpha in &alphas {
        for mu in &mus {
            let got = alpha_removable_corners(alpha, mu);
            assert_eq!(got, brute_corners(alpha, mu), "alpha={} mu={}", alpha, mu);
            assert!(distinct(got.iter().map(|c| c.column)));
        }
    }
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..=9, 0..=7).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn corner_columns_are_distinct(alpha in partition(), mu in partition()) {
        let corners = alpha_removable_corners(&alpha, &mu);
        prop_assert!(distinct(corners.iter().map(|c| c.column)));
        prop_assert!(corners.windows(2).all(|w| w[0].column < w[1].column));
    }

    #[test]
    fn strip_sizes_are_exact(alpha in partition(), k in 0usize..5) {
        for l in vertical_strip_removals(&alpha, k) {
            prop_assert_eq!(alpha.weight() - l.weight(), k);
        }
        for m in horizontal_strip_additions(&alpha, k).unwrap() {
            prop_assert_eq!(m.weight() - alpha.weight(), k);
        }
    }
}
