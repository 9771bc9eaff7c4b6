mod common;

use hyperburn::{
    burning_number_exact, burning_number_exact_with, lazy_burning_number_exact, lazy_closure,
    parse_hypergraph, propagate_step, run_schedule, serialize_hypergraph, Hypergraph,
    SolverConfig, VertexSet,
};
use proptest::prelude::*;

fn hypergraph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(|n| {
        let edge = proptest::collection::btree_set(0..n, 0..=n.min(4));
        proptest::collection::vec(edge, 0..=n + 2).prop_map(move |edges| {
            Hypergraph::new(n, edges.into_iter().map(|e| e.into_iter().collect::<Vec<_>>()))
                .unwrap()
        })
    })
}

fn with_subsets(max_n: usize) -> impl Strategy<Value = (Hypergraph, VertexSet, VertexSet)> {
    hypergraph(max_n).prop_flat_map(|h| {
        let n = h.vertex_count();
        (
            Just(h),
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(h, a, b)| {
                let t = VertexSet::from_members(n, (0..n).filter(|&v| a[v] || b[v]));
                let s = VertexSet::from_members(n, (0..n).filter(|&v| a[v]));
                (h, s, t)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn closure_is_monotone_and_idempotent((h, s, t) in with_subsets(12)) {
        let cs = lazy_closure(&h, &s).closure;
        let ct = lazy_closure(&h, &t).closure;
        prop_assert!(cs.is_subset(&ct));
        prop_assert_eq!(lazy_closure(&h, &cs).closure, cs.clone());
        prop_assert!(propagate_step(&h, &cs).is_empty());
    }

    #[test]
    fn closure_trace_partitions((h, s, _t) in with_subsets(12)) {
        let run = lazy_closure(&h, &s);
        let mut seen = run.initial.clone();
        for wave in &run.steps {
            prop_assert!(!wave.is_empty());
            prop_assert!(wave.is_disjoint(&seen));
            seen.union_with(wave);
        }
        prop_assert_eq!(seen, run.closure);
    }

    #[test]
    fn lazy_never_exceeds_round_based(h in hypergraph(7)) {
        let b = burning_number_exact(&h).unwrap();
        let bl = lazy_burning_number_exact(&h).unwrap();
        prop_assert!(bl.value <= b.value);
        prop_assert!(b.value <= h.vertex_count());
        if h.vertex_count() >= 2 && h.unignitable_vertices().is_empty() {
            prop_assert!(bl.value < b.value);
        }
        prop_assert!(run_schedule(&h, &b.witness.sources).unwrap().is_complete());
        prop_assert!(b.bounds.0 <= b.value && b.value <= b.bounds.1);
        prop_assert!(bl.bounds.0 <= bl.value);
    }

    #[test]
    fn solvers_match_oracles(h in hypergraph(6)) {
        prop_assert_eq!(burning_number_exact(&h).unwrap().value, common::brute_burning_number(&h));
        prop_assert_eq!(
            lazy_burning_number_exact(&h).unwrap().value,
            common::brute_lazy_burning_number(&h)
        );
    }

    #[test]
    fn lazy_witness_holds_no_whole_edge(h in hypergraph(8)) {
        let w = lazy_burning_number_exact(&h).unwrap().witness;
        for e in h.edges().iter().filter(|e| e.len() >= 2) {
            prop_assert!(!w.contains_all(e));
        }
    }

    #[test]
    fn text_format_round_trips(h in hypergraph(10)) {
        let text = serialize_hypergraph(&h);
        let back = parse_hypergraph(&text).unwrap();
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(serialize_hypergraph(&back), text);
    }

    #[test]
    fn thread_count_is_invisible(h in hypergraph(9)) {
        let one = burning_number_exact_with(&h, &SolverConfig::default().with_threads(Some(1))).unwrap();
        let many = burning_number_exact_with(&h, &SolverConfig::default().with_threads(Some(3))).unwrap();
        prop_assert_eq!(one, many);
    }
}
