//! Construction families against the formulas and the checkers.

use k4sat_core::constructions::{find_f_params, saturation_number};
use k4sat_core::{
    construct_complete_bipartite, construct_f, construct_star_matching, contains_k4_minus,
    coverage_set, f_formula, is_bipartite, is_k4_minus_saturated, naive_contains,
    spectrum_formula, verify_interval_coverage, ConstructionParams, PatternGraph, VertexSet,
};

fn f(n: usize, a: usize, b: usize) -> k4sat_core::Graph {
    construct_f(ConstructionParams::new(n, a, b).unwrap()).unwrap().0
}

#[test]
fn formula_matches_construction_for_every_b() {
    for n in 5..=60 {
        for p in ConstructionParams::grid(n, 0..=n - 5) {
            let g = f(p.n, p.a, p.b);
            assert_eq!(g.edge_count() as u64, f_formula(p.n, p.a, p.b).unwrap(), "{p:?}");
        }
    }
}

#[test]
fn parts_cover_all_vertices() {
    for (n, a, b) in [(10, 0, 2), (12, 3, 2), (20, 4, 7), (7, 0, 0)] {
        let (g, parts) = construct_f(ConstructionParams::new(n, a, b).unwrap()).unwrap();
        let all: Vec<usize> = [&parts.i, &parts.a1, &parts.a2, &parts.b1, &parts.b2, &parts.c]
            .iter()
            .flat_map(|p| p.iter().copied())
            .collect();
        assert_eq!(all, (0..n).collect::<Vec<_>>());
        assert_eq!((parts.a2.len(), parts.b2.len(), parts.c.len()), (a, b, n - a - b - 5));
        for [u, v] in parts.matching {
            assert!(parts.a1.contains(&u) && parts.b1.contains(&v) && g.has_edge(u, v));
        }
        assert_ne!(parts.matching[0][0], parts.matching[1][0]);
        assert_ne!(parts.matching[0][1], parts.matching[1][1]);
        assert!(!g.has_edge(parts.a1[0], parts.a1[1]));
        assert!(!g.has_edge(parts.b1[0], parts.b1[1]));
    }
}

#[test]
fn exactly_two_triangles_through_the_hub() {
    for n in 9..=40 {
        for p in ConstructionParams::grid(n, 2..=n - 5) {
            let (g, parts) = construct_f(p).unwrap();
            assert_eq!(g.triangle_count(), 2, "{p:?}");
            for [u, v] in parts.matching {
                assert!(g.has_edge(0, u) && g.has_edge(0, v) && g.has_edge(u, v));
            }
        }
    }
}

#[test]
fn family_is_free_saturated_and_non_bipartite() {
    for n in 9..=60 {
        for p in ConstructionParams::grid(n, 2..=n - 5) {
            let g = f(p.n, p.a, p.b);
            let v = is_k4_minus_saturated(&g);
            assert!(v.saturated, "{p:?}: {v:?}");
            assert!(!is_bipartite(&g).is_bipartite());
        }
    }
}

#[test]
fn f10_0_2_is_diamond_free_by_the_oracle() {
    let g = f(10, 0, 2);
    assert!(!naive_contains(&g, &PatternGraph::k4_minus()));
    for (u, v) in g.non_edges() {
        assert!(naive_contains(&g.with_edge(u, v).unwrap(), &PatternGraph::k4_minus()));
    }
}

#[test]
fn each_saturating_case_of_f12_3_2() {
    // Every non-edge of F_12(3,2) falls into one of seven part-pair cases;
    // each one's named 4-set spans a diamond after the edge is added.
    let (g, p) = construct_f(ConstructionParams::new(12, 3, 2).unwrap()).unwrap();
    let x = p.i[0];
    let [u1, u2] = [p.a1[0], p.a1[1]];
    let [v1, v2] = [p.b1[0], p.b1[1]];
    let a_side: Vec<usize> = [&p.a1[..], &p.a2[..], &p.c[..]].concat();
    let spans = |t1: usize, t2: usize, others: [usize; 2]| {
        let h = g.with_edge(t1, t2).unwrap();
        h.induced_edge_count(VertexSet::from_slice(&[t1, t2, others[0], others[1]])) >= 5
    };
    let mut seen = 0;
    for (s, t) in g.non_edges() {
        let case = |a: usize, b: usize| -> Option<[usize; 2]> {
            if a_side.contains(&a) && a_side.contains(&b) {
                Some([p.b2[0], p.b2[1]])
            } else if p.b2.contains(&a) && p.b2.contains(&b) {
                Some([u1, u2])
            } else if p.b1.contains(&a) && p.b1.contains(&b) {
                Some([u1, x])
            } else if p.b1.contains(&a) && p.b2.contains(&b) {
                Some([x, if a == v1 { u1 } else { u2 }])
            } else if a == x && p.a2.contains(&b) {
                Some([v1, v2])
            } else if a == x && p.b2.contains(&b) {
                Some([u1, u2])
            } else if p.a1.contains(&a) && p.b1.contains(&b) {
                Some([x, if a == u1 { v1 } else { v2 }])
            } else if p.c.contains(&a) && p.b1.contains(&b) {
                Some([x, if b == v1 { u1 } else { u2 }])
            } else {
                None
            }
        };
        let others = case(s, t).or_else(|| case(t, s)).unwrap_or_else(|| panic!("({s},{t}) unclassified"));
        assert!(spans(s, t, others), "({s},{t}) with {others:?}");
        seen += 1;
    }
    assert_eq!(seen, 66 - 28);
}

#[test]
fn hypothesis_b_ge_2_is_needed() {
    // b = 0 with a non-empty C leaves pairs inside C without a diamond
    let g = f(10, 0, 0);
    let v = is_k4_minus_saturated(&g);
    assert!(v.h_free && !v.saturated);
    v.verify_against(&g).unwrap();
    // some small-b instances are nonetheless saturated
    assert!(is_k4_minus_saturated(&f(10, 0, 1)).saturated);
    assert_eq!(f(10, 0, 1).edge_count(), 16);
}

#[test]
fn star_matching_is_saturated_at_sat_number() {
    for n in 4..=60 {
        let g = construct_star_matching(n).unwrap();
        assert_eq!(g.edge_count() as u64, saturation_number(n));
        assert!(is_k4_minus_saturated(&g).saturated, "n={n}");
    }
}

#[test]
fn complete_bipartite_saturation_pattern() {
    for n in 4..=40 {
        for i in 1..n {
            let sat = is_k4_minus_saturated(&construct_complete_bipartite(n, i).unwrap()).saturated;
            assert_eq!(sat, (2..=n - 2).contains(&i), "n={n} i={i}");
        }
    }
}

#[test]
fn complete_bipartite_k2_8_is_saturated() {
    let g = construct_complete_bipartite(10, 2).unwrap();
    assert_eq!(g.edge_count(), 16);
    assert!(is_k4_minus_saturated(&g).saturated);
    assert!(contains_k4_minus(&g).is_none());
}

#[test]
fn coverage_holds_up_to_500() {
    for n in 10..=500 {
        let chk = verify_interval_coverage(n).unwrap();
        assert!(chk.holds, "n={n} missing {:?}", chk.missing);
        assert_eq!(chk.lo, f_formula(n, 0, 2).unwrap());
    }
}

#[test]
fn coverage_is_a_single_interval() {
    for n in 10..=120 {
        let runs = coverage_set(n).unwrap().intervals();
        assert_eq!(runs.len(), 1, "n={n}: {runs:?}");
    }
}

#[test]
fn generated_sizes_lie_in_the_formula_spectrum() {
    for n in 10..=60 {
        let spec = spectrum_formula(n).unwrap();
        let mut sizes = vec![construct_star_matching(n).unwrap().edge_count() as u64];
        for i in 2..=n - 2 {
            sizes.push(construct_complete_bipartite(n, i).unwrap().edge_count() as u64);
        }
        for p in ConstructionParams::grid(n, 2..=n - 5) {
            sizes.push(f_formula(p.n, p.a, p.b).unwrap());
        }
        for m in sizes {
            assert!(spec.contains(m), "n={n} size {m}");
        }
        assert_eq!(spec.unwitnessed.iter().copied().collect::<Vec<_>>(), vec![n as u64 - 1]);
        assert!(!is_k4_minus_saturated(&construct_complete_bipartite(n, 1).unwrap()).saturated);
    }
}

#[test]
fn witness_search_finds_every_interval_size() {
    for n in 10..=30 {
        for m in 3 * n as u64 - 11..=k4sat_core::bipartite_threshold(n) {
            let p = find_f_params(n, m).unwrap_or_else(|| panic!("n={n} m={m}"));
            assert!(p.b >= 2);
            assert_eq!(f(p.n, p.a, p.b).edge_count() as u64, m);
        }
    }
}
