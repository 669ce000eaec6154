use schur_vertex_core::partition::partitions_up_to;
use schur_vertex_core::vertex::lemma_terms;
use schur_vertex_core::{
    involution_report, pair_term, vertex_lemma, vertex_lhs, vertex_rhs, vertex_rhs_raw, Pairing,
    Partition, SchurExpansion, Sign,
};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn three_routes_agree() {
    for alpha in partitions_up_to(8) {
        let (lo, hi) = (-(alpha.length() as i64) - 2, 8);
        let lhs = vertex_lhs(&alpha, lo, hi).unwrap();
        let lemma = vertex_lemma(&alpha, lo, hi).unwrap();
        let rhs = vertex_rhs(&alpha, lo, hi).unwrap();
        assert_eq!(lhs.first_difference(&lemma), None, "alpha={}", alpha);
        assert_eq!(lhs.first_difference(&rhs), None, "alpha={}", alpha);
        assert_eq!(lhs, lemma);
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn vanishing_window() {
    for alpha in partitions_up_to(8) {
        let l = alpha.length() as i64;
        let series = vertex_lhs(&alpha, -l - 3, 8).unwrap();
        for (n, e) in series.iter() {
            if n < -l {
                assert!(e.is_zero(), "alpha={} n={}", alpha, n);
            }
            assert!(e.len() <= 1);
            assert!(e.iter().all(|(mu, c)| c.abs() == 1 && mu.weight() as i64 == alpha.weight() as i64 + n));
        }
        // the lowest surviving term removes the last cell of every row
        let first = series.coefficient(-l).unwrap();
        assert_eq!(first.len(), 1, "alpha={}", alpha);
        let expected: Vec<usize> = alpha.parts().iter().map(|&a| a - 1).collect();
        assert_eq!(
            first.coefficient(&Partition::new(expected).unwrap()),
            Sign::power(alpha.length()).to_i64()
        );
    }
}

#[test]
fn lemma_terms_are_monotone_and_valid() {
    for alpha in partitions_up_to(8) {
        let terms = lemma_terms(&alpha, -(alpha.length() as i64) - 2, 10).unwrap();
        assert!(terms.windows(2).all(|w| w[0].n < w[1].n && w[0].k < w[1].k));
        for t in &terms {
            assert_eq!(t.mu.weight() as i64, alpha.weight() as i64 + t.n);
            assert_eq!(t.sign, Sign::power(t.ht));
            assert!(t.mu.parts().windows(2).all(|w| w[0] >= w[1]));
        }
    }
}

#[test]
fn pairing_is_a_sign_reversing_involution() {
    for alpha in partitions_up_to(6) {
        let l = alpha.length() as i64;
        for term in vertex_rhs_raw(&alpha, -l - 2, 6).unwrap() {
            match pair_term(&alpha, &term).unwrap() {
                Pairing::Fixed => {}
                Pairing::Partner { term: other, corner } => {
                    assert_ne!(other, term);
                    assert_eq!(other.mu, term.mu);
                    assert_eq!(other.n, term.n);
                    assert_eq!(other.sign, -term.sign);
                    assert_eq!(other.j.abs_diff(term.j), 1);
                    assert_eq!(
                        pair_term(&alpha, &other).unwrap(),
                        Pairing::Partner { term: term.clone(), corner }
                    );
                }
            }
        }
    }
}

#[test]
fn involution_reports_validate() {
    for alpha in partitions_up_to(6) {
        let l = alpha.length() as i64;
        for n in -l - 2..=6 {
            let r = involution_report(&alpha, n).unwrap();
            let lhs = vertex_lhs(&alpha, n, n).unwrap();
            assert_eq!(&r.survivor_expansion(), lhs.coefficient(n).unwrap());
            assert!(r.survivors.len() <= 1);
            match (&r.lemma, r.survivors.first()) {
                (None, None) => {}
                (Some(t), Some(s)) => {
                    assert_eq!((&t.mu, t.sign), (&s.mu, s.sign));
                    assert_eq!(t.ht, s.j);
                }
                other => panic!("alpha={} n={}: {:?}", alpha, n, other),
            }
            for c in &r.couples {
                assert_eq!(c.first.sign, -c.second.sign);
                assert_eq!(c.first.mu, c.second.mu);
            }
        }
    }
}

#[test]
fn fixed_points_have_forced_rows() {
    for alpha in partitions_up_to(6) {
        let l = alpha.length() as i64;
        for term in vertex_rhs_raw(&alpha, -l - 2, 6).unwrap() {
            if pair_term(&alpha, &term).unwrap() != Pairing::Fixed {
                continue;
            }
            for i in 0..alpha.length() {
                let (a, m) = (alpha.part(i), term.mu.part(i));
                let removed = term.lambda.part(i) < a;
                if removed {
                    assert!(m + 1 == a, "alpha={} term={}", alpha, term);
                } else {
                    assert!(term.mu.part(i + 1) >= a, "alpha={} term={}", alpha, term);
                }
            }
        }
    }
}

#[test]
fn window_for_5433() {
    let alpha = p(&[5, 4, 3, 3]);
    let expected: [(i64, Sign, &[usize]); 9] = [
        (-4, Sign::Plus, &[4, 3, 2, 2]),
        (-3, Sign::Plus, &[4, 3, 2, 2, 1]),
        (-2, Sign::Plus, &[4, 3, 2, 2, 2]),
        (1, Sign::Plus, &[4, 3, 3, 3, 3]),
        (3, Sign::Minus, &[4, 4, 4, 3, 3]),
        (5, Sign::Plus, &[5, 5, 4, 3, 3]),
        (6, Sign::Plus, &[6, 5, 4, 3, 3]),
        (7, Sign::Plus, &[7, 5, 4, 3, 3]),
        (8, Sign::Plus, &[8, 5, 4, 3, 3]),
    ];
    let series = vertex_lhs(&alpha, -6, 8).unwrap();
    for n in -6..=8 {
        let want = expected
            .iter()
            .find(|e| e.0 == n)
            .map(|&(_, sign, mu)| {
                let mut e = SchurExpansion::zero();
                e.add_signed(p(mu), sign);
                e
            })
            .unwrap_or_default();
        assert_eq!(series.coefficient(n).unwrap(), &want, "n={}", n);
    }
    assert_eq!(vertex_lemma(&alpha, -6, 8).unwrap(), series);
    assert_eq!(vertex_rhs(&alpha, -6, 8).unwrap(), series);
    let ks: Vec<usize> = lemma_terms(&alpha, -6, 8).unwrap().iter().map(|t| t.k).collect();
    assert_eq!(ks, (0..=8).collect::<Vec<_>>());
}
