mod support;

use linesplit::fan::DEFAULT_MAX_FAN_GRAPHS;
use linesplit::gpp::gpp_witness_at;
use linesplit::incidence::{affine_points, points_off_line};
use linesplit::linalg::RatVector;
use linesplit::random::{corpus_arrangement, random_arrangement, RandomSpec};
use linesplit::resonance::coordinate_sum;
use linesplit::*;
use num_traits::Zero;
use proptest::prelude::*;
use support::oracles;

const SEED: u64 = 0x5eed_11e5;

fn corpus(count: u64, max_lines: usize) -> impl Iterator<Item = IncidenceData> {
    (0..count).map(move |i| build_incidence(&corpus_arrangement(SEED, i, max_lines)))
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn nonzero_triple() -> impl Strategy<Value = [(i64, i64); 3]> {
    prop::array::uniform3((-20i64..=20, 1i64..=9))
        .prop_filter("nonzero", |t| t.iter().any(|&(n, _)| n != 0))
}

proptest! {
    #[test]
    fn normalization_is_scale_invariant(
        t in nonzero_triple(),
        (ln, ld) in (-15i64..=15, 1i64..=15).prop_filter("nonzero", |&(n, _)| n != 0),
    ) {
        let raw = t.map(|(n, d)| q(n, d));
        let lambda = q(ln, ld);
        let scaled = raw.clone().map(|r| r * &lambda);
        let once = normalize_line(&raw).unwrap();
        prop_assert_eq!(&once, &normalize_line(&scaled).unwrap());
        let again = normalize_line(&once.clone().map(Rational::from_integer)).unwrap();
        prop_assert_eq!(once, again);
    }

    #[test]
    fn intersection_lies_on_both_lines(a in nonzero_triple(), b in nonzero_triple()) {
        let l1 = ProjLine::new(&a.map(|(n, d)| q(n, d)), "a").unwrap();
        let l2 = ProjLine::new(&b.map(|(n, d)| q(n, d)), "b").unwrap();
        prop_assume!(!l1.same_line(&l2));
        let p = intersect(&l1, &l2).unwrap();
        prop_assert!(point_on_line(&p, &l1));
        prop_assert!(point_on_line(&p, &l2));
        prop_assert_eq!(p, intersect(&l2, &l1).unwrap());
    }

    #[test]
    fn affine_round_trip(a in -20i64..=20, b in -20i64..=20, c in -20i64..=20) {
        prop_assume!(a != 0 || b != 0);
        let l = AffLine::from_ints(a, b, c, "l").unwrap();
        let z = ProjLine::from_ints(0, 0, 1, "z").unwrap();
        prop_assert_eq!(restrict_to_affine(&projectivize(&l), &z).unwrap(), l);
    }

    #[test]
    fn intersection_dimension_law(
        gens_a in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 0..4),
        gens_b in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 0..4),
    ) {
        let to_rows = |g: &Vec<Vec<i64>>| -> Vec<RatVector> {
            g.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect()
        };
        let (ra, rb) = (to_rows(&gens_a), to_rows(&gens_b));
        let a = SubspaceBasis::span(5, ra.clone()).unwrap();
        let b = SubspaceBasis::span(5, rb.clone()).unwrap();
        prop_assert_eq!(a.dim(), oracles::rank(&ra));
        let formula = span_dim(&a) + span_dim(&b) - span_dim(&span_sum(&a, &b).unwrap());
        prop_assert_eq!(intersection_dim(&a, &b).unwrap(), formula);
        prop_assert_eq!(formula, oracles::intersection_dim_zassenhaus(a.rows(), b.rows()));
        // canonical: a permuted generator list gives identical rows
        let mut rev = ra.clone();
        rev.reverse();
        prop_assert_eq!(SubspaceBasis::span(5, rev).unwrap(), a);
    }
}

#[test]
fn pair_count_identity_and_decone_bijection() {
    for inc in corpus(200, 8) {
        let n = inc.line_count();
        let pairs: usize = inc
            .points()
            .iter()
            .map(|p| p.multiplicity() * (p.multiplicity() - 1) / 2)
            .sum();
        assert_eq!(pairs, n * (n - 1) / 2);
        for p in inc.points() {
            assert!(p.multiplicity() >= 2);
        }
        for at in 0..n {
            let d = decone(inc.arrangement(), at).unwrap();
            assert_eq!(affine_points(&d).len(), points_off_line(&inc, at));
        }
    }
}

#[test]
fn general_position_partition_is_symmetric() {
    for inc in corpus(60, 7) {
        let d = decone(inc.arrangement(), 0).unwrap();
        let m = d.len();
        for mask in 1u32..(1 << m) - 1 {
            let (p1, p2): (Vec<usize>, Vec<usize>) = (0..m).partition(|&i| mask & (1 << i) != 0);
            assert_eq!(
                is_general_position_partition(&d, &p1, &p2).unwrap(),
                is_general_position_partition(&d, &p2, &p1).unwrap()
            );
        }
    }
}

#[test]
fn oka_sakamoto_agrees_with_cone_incidence() {
    for (i, inc) in corpus(120, 7).enumerate() {
        let n = inc.line_count();
        // decone at the last line, then split the affine lines by a mask
        let d = decone(inc.arrangement(), n - 1).unwrap();
        let m = d.len();
        let mask = (i as u32 % ((1 << m) - 2)) + 1;
        let pick = |want: bool| {
            AffArrangement::new(
                (0..m)
                    .filter(|&j| (mask & (1 << j) != 0) == want)
                    .map(|j| d.lines()[j].clone())
                    .collect(),
            )
            .unwrap()
        };
        let (a1, a2) = (pick(true), pick(false));
        let report = check_oka_sakamoto_hypothesis(&a1, &a2).unwrap();

        let coned = build_incidence(&cone(&report.union, "@inf").unwrap());
        let inf = report.union.len();
        let bad = coned.points().iter().any(|p| {
            let crosses = p.incident.iter().any(|&l| l < a1.len())
                && p.incident.iter().any(|&l| l >= a1.len() && l < inf);
            crosses && p.multiplicity() >= 3
        });
        assert_eq!(report.holds(), !bad, "instance {i}");
    }
}

#[test]
fn fan_graph_invariants() {
    let mut checked = 0;
    for inc in corpus(200, 8) {
        let m3 = inc.multiple_point_ids(3);
        let expected_edges: usize = (0..inc.line_count())
            .map(|i| inc.triple_points_on(i).len().saturating_sub(1))
            .sum();
        let all = enumerate_fan_graphs(&inc, 1000);
        if all.truncated {
            continue;
        }
        checked += 1;
        assert_eq!(all.graphs.len() as u128, fan_graph_count(&inc));
        let connected = is_connected(&all.graphs[0]);
        for g in &all.graphs {
            assert_eq!(g.vertices(), m3.as_slice());
            assert_eq!(g.edges().len(), expected_edges);
            for e in g.edges() {
                assert!(inc.point(e.ends.0).contains_line(e.line));
                assert!(inc.point(e.ends.1).contains_line(e.line));
            }
            assert_eq!(is_connected(g), connected);
            if g.vertices().len() <= 8 {
                assert_eq!(bridge_edges(g), oracles::bridges_by_circuit_search(g));
            }
        }
    }
    assert!(checked > 150);
}

#[test]
fn enumeration_truncates() {
    // Grid lines x = k, y = k (k = 0..3) plus the diagonal, which carries the
    // four triple points (k, k) and so admits 4!/2 orderings.
    let mut lines = Vec::new();
    for k in 0..4 {
        lines.push(ProjLine::from_ints(1, 0, -k, format!("X{k}")).unwrap());
        lines.push(ProjLine::from_ints(0, 1, -k, format!("Y{k}")).unwrap());
    }
    lines.push(ProjLine::from_ints(1, -1, 0, "D").unwrap());
    let inc = build_incidence(&ProjArrangement::new(lines).unwrap());
    let total = fan_graph_count(&inc);
    assert_eq!(total, 12);
    let capped = enumerate_fan_graphs(&inc, 5);
    assert_eq!(capped.graphs.len(), 5);
    assert!(capped.truncated);
    let exact = enumerate_fan_graphs(&inc, total as usize);
    assert!(!exact.truncated);
    assert_eq!(DEFAULT_MAX_FAN_GRAPHS, 10_000);
}

#[test]
fn norepeats_matches_enumeration_oracle() {
    let mut compared = 0;
    for inc in corpus(200, 8) {
        if inc.multiple_point_ids(3).len() > 8 {
            continue;
        }
        let Some(literal) = oracles::norepeats_by_enumeration(&inc, 1000) else {
            continue;
        };
        compared += 1;
        assert_eq!(norepeats_witness(&inc).is_some(), literal);
    }
    assert!(compared > 150);
}

#[test]
fn gpp_decision_matches_oracle() {
    for (i, inc) in corpus(200, 8).enumerate() {
        let fast = has_gpp_decone(&inc).unwrap();
        let slow = gpp_oracle(&inc).unwrap();
        assert_eq!(fast.is_some(), slow.is_some(), "instance {i}");
        if let Some(w) = fast {
            assert!(w.verify(&inc).unwrap());
        }
        if let Some(w) = slow {
            assert!(w.verify(&inc).unwrap());
        }
        for at in 0..inc.line_count() {
            if let Some(w) = gpp_witness_at(&inc, at).unwrap() {
                assert!(w.verify(&inc).unwrap());
            }
        }
    }
}

#[test]
fn lemma_firings_imply_decone() {
    for inc in corpus(200, 8) {
        let report = lemma_pipeline_report(&inc);
        let decided = has_gpp_decone(&inc).unwrap();
        if report.any_fired() {
            assert!(decided.is_some());
        }
        for w in report.witnesses() {
            assert!(w.verify(&inc).unwrap(), "{w:?}");
        }
        if decided.is_none() {
            assert!(report.corollary_conditions_hold());
        }
    }
}

#[test]
fn adding_a_generic_line_creates_a_decone() {
    for (i, inc) in corpus(100, 7).enumerate() {
        let mut extra = 0u64;
        let line = loop {
            let cand = random_arrangement(
                i as u64 * 1000 + extra,
                &RandomSpec {
                    lines: 1,
                    ..Default::default()
                },
            )
            .lines()[0]
                .clone();
            extra += 1;
            let fresh = inc.arrangement().lines().iter().all(|l| !l.same_line(&cand))
                && inc.points().iter().all(|p| !point_on_line(&p.point, &cand));
            if fresh {
                break cand;
            }
        };
        let mut lines = inc.arrangement().lines().to_vec();
        lines.push(ProjLine::new(&line.coeffs().clone().map(Rational::from_integer), "G").unwrap());
        let bigger = build_incidence(&ProjArrangement::new(lines).unwrap());
        assert!(has_gpp_decone(&bigger).unwrap().is_some());
    }
}

#[test]
fn resonance_invariants() {
    let mut with_two = 0;
    for inc in corpus(400, 8) {
        let comps = local_components(&inc);
        for c in &comps {
            assert_eq!(c.basis.dim(), c.incident.len() - 1);
            for row in c.basis.rows() {
                assert!(coordinate_sum(row).is_zero());
                for (i, x) in row.iter().enumerate() {
                    assert!(x.is_zero() || c.incident.contains(&i));
                }
            }
        }
        if comps.len() < 2 {
            continue;
        }
        with_two += 1;
        let found = find_span_disjoint_bipartition(&comps).unwrap();
        if comps.len() <= 10 {
            assert_eq!(found.is_some(), oracles::span_bipartition_naive(&comps));
        }
        if found.is_some() {
            assert!(has_gpp_decone(&inc).unwrap().is_some());
        }
    }
    assert!(with_two >= 50);
}
