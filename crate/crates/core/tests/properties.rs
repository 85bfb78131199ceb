//! Cross-module invariants on generated corpora, plus property tests for
//! the serializers and the epsilon closure.

use observa_core::oracle::{oracle_is_observable, oracle_is_partly_observable};
use observa_core::*;
use proptest::prelude::*;
use rayon::prelude::*;

/// Deciders agree with word enumeration on four-node graphs too
/// (exhaustive over all edge subsets up to four edges).
#[test]
fn oracle_equivalence_extends_to_four_nodes() {
    let budget = OracleBudget::default();
    let disagreements: usize = (0..generators::exhaustive_mask_count(4, 2))
        .into_par_iter()
        .filter(|mask| mask.count_ones() <= 4)
        .map(|mask| {
            let g = generators::graph_from_edge_mask(4, 2, mask);
            let obs = is_observable(&g).unwrap().0 != oracle_is_observable(&g, &budget).unwrap();
            let partly = is_partly_observable(&g).unwrap().0
                != oracle_is_partly_observable(&g, &budget).unwrap();
            usize::from(obs) + usize::from(partly)
        })
        .sum();
    assert_eq!(disagreements, 0);
}

/// The quadratic family stays observable as it grows, and its exact
/// minimal horizon matches the computed value n(n-1)/2 (a regression pin
/// for a quantity that is computed, not claimed).
#[test]
fn worst_case_family_horizons() {
    for n in 3..=10usize {
        let g = generators::worst_case_family(n).unwrap();
        assert!(is_observable(&g).unwrap().0, "n={n}");
    }
    for n in 3..=8usize {
        let g = generators::worst_case_family(n).unwrap();
        assert_eq!(
            min_observation_time(&g).unwrap(),
            Some(n * (n - 1) / 2),
            "n={n}"
        );
    }
}

/// Partial localization never needs more observations than full
/// localization, wherever both horizons exist.
#[test]
fn partial_horizon_at_most_full_horizon() {
    let mut graphs: Vec<ColoredDigraph> = Vec::new();
    graphs.extend(generators::exhaustive_graphs(2, 2, None));
    graphs.extend(generators::exhaustive_graphs(3, 2, Some(6)));
    for i in 0..2000u64 {
        let n = 1 + (i % 5) as usize;
        graphs.push(generators::random_colored_graph(n, 2, 0.3, 60_000 + i).unwrap());
    }
    for g in &graphs {
        if let (Some(full), Some(partial)) = (
            min_observation_time(g).unwrap(),
            min_partial_observation_time(g).unwrap(),
        ) {
            assert!(partial <= full, "graph {g:?}");
        }
    }
}

/// Discrete-event-system workflow end to end: close the unobservable
/// edges, then analyze.
#[test]
fn des_closure_then_analysis() {
    let mut g = ColoredDigraph::from_parts(
        vec!["h".into(), "i".into(), "j".into(), "k".into()],
        vec!["a".into(), "b".into()],
        vec![Edge::new(0, 1, 0), Edge::new(2, 3, 1)],
        vec![(1, 2)],
    );
    g.add_edge(3, 3, 1);
    assert!(is_observable(&g).is_err());
    let closed = g.epsilon_closure();
    assert!(closed
        .edges()
        .contains(&Edge::new(0, 2, 0)));
    let report = analyze(&closed).unwrap();
    assert!(report.partly_observable);
}

/// Strategy: a colored digraph with arbitrary distinct labels.
fn arbitrary_graph() -> impl Strategy<Value = ColoredDigraph> {
    let labels = |size: std::ops::Range<usize>| {
        prop::collection::btree_set(any::<String>(), size)
            .prop_map(|set| set.into_iter().collect::<Vec<String>>())
    };
    (labels(0..5), labels(1..4)).prop_flat_map(|(nodes, colors)| {
        let n = nodes.len();
        let m = colors.len();
        let max_edges = (n * n * m).max(1);
        (
            Just(nodes),
            Just(colors),
            prop::collection::btree_set(0..max_edges, 0..max_edges.min(12)),
            prop::collection::btree_set(0..(n * n).max(1), 0..(n * n).clamp(1, 5)),
        )
            .prop_map(move |(nodes, colors, edge_picks, unobs_picks)| {
                // decode flat indices; for n = 0 both pick sets stay unused
                let edges = if n == 0 {
                    Vec::new()
                } else {
                    edge_picks
                        .into_iter()
                        .map(|t| Edge::new(t / (n * m), (t / m) % n, t % m))
                        .collect()
                };
                let unobservable = if n == 0 {
                    Vec::new()
                } else {
                    unobs_picks.into_iter().map(|t| (t / n, t % n)).collect()
                };
                ColoredDigraph::from_parts(nodes, colors, edges, unobservable)
            })
    })
}

proptest! {
    /// JSON serialization round-trips exactly, whatever the labels.
    #[test]
    fn json_round_trip(g in arbitrary_graph()) {
        prop_assume!(g.validate().ok);
        let text = format::to_json(&g);
        let parsed = GraphDocument::parse(&text, Format::Json).unwrap();
        prop_assert_eq!(parsed, GraphDocument::Colored(g));
    }

    /// DOT round-trips exactly whenever the graph's color table is
    /// already in first-use order with no unused colors (the exporter
    /// cannot represent declarations of unused colors).
    #[test]
    fn dot_round_trip(g in arbitrary_graph()) {
        prop_assume!(g.validate().ok);
        // remap colors to first-use order and drop unused ones
        let mut order: Vec<usize> = Vec::new();
        for e in g.edges() {
            if !order.contains(&e.color) {
                order.push(e.color);
            }
        }
        let rank = |c: usize| order.iter().position(|&x| x == c).unwrap();
        let remapped = ColoredDigraph::from_parts(
            g.node_labels().to_vec(),
            order.iter().map(|&c| g.color_label(c).to_string()).collect(),
            g.edges()
                .iter()
                .map(|e| Edge::new(e.from, e.to, rank(e.color)))
                .collect(),
            g.unobservable_edges().to_vec(),
        );
        let expected = if remapped.color_count() == 0 {
            // a document with no labeled edge at all reads back as an
            // uncolored digraph; unobservable edges become its plain edges
            GraphDocument::Uncolored(UncoloredDigraph::from_parts(
                remapped.node_labels().to_vec(),
                remapped.unobservable_edges().to_vec(),
            ))
        } else {
            GraphDocument::Colored(remapped.clone())
        };
        let text = format::to_dot(&remapped);
        let parsed = GraphDocument::parse(&text, Format::Dot).unwrap();
        prop_assert_eq!(parsed, expected);
    }

    /// The epsilon closure is idempotent, keeps every colored edge, adds
    /// no nodes, and leaves nothing unobservable.
    #[test]
    fn epsilon_closure_properties(g in arbitrary_graph()) {
        prop_assume!(g.validate().ok);
        let closed = g.epsilon_closure();
        prop_assert!(closed.unobservable_edges().is_empty());
        prop_assert_eq!(closed.node_labels(), g.node_labels());
        for e in g.edges() {
            prop_assert!(closed.edges().contains(e));
        }
        prop_assert_eq!(closed.epsilon_closure(), closed);
    }

    /// Verdict implication chain on arbitrary (closed) graphs.
    #[test]
    fn implication_chain(g in arbitrary_graph()) {
        prop_assume!(g.validate().ok);
        let closed = g.epsilon_closure();
        let obs = is_observable(&closed).unwrap().0;
        let partly = is_partly_observable(&closed).unwrap().0;
        let apost = is_partly_aposteriori_observable(&closed).unwrap();
        prop_assert!(!obs || partly);
        prop_assert!(!partly || apost);
    }
}
