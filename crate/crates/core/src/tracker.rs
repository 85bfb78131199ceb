//! Position tracking: propagate the set of possible agent positions along
//! an observation word, and count allowed paths with boolean adjacency
//! matrix products (the zero/one-probability Viterbi recursion).

use crate::bitset::NodeSet;
use crate::graph::{Adjacency, ColorId, ColoredDigraph, Word};
use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TrackError {
    #[error("undeclared color {color} (graph declares {declared})")]
    UndeclaredColor { color: ColorId, declared: usize },
}

/// The set of possible positions after consuming `step` symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackState {
    pub possible: NodeSet,
    pub step: usize,
}

/// One δ step: every node reachable from `state` along a single edge of
/// the given color. May be empty.
pub fn step(
    graph: &ColoredDigraph,
    state: &NodeSet,
    color: ColorId,
) -> Result<NodeSet, TrackError> {
    check_color(graph, color)?;
    Ok(Adjacency::new(graph).step_set(state, color))
}

/// Folds [`step`] over the word: entry `t` holds the positions compatible
/// with the first `t` symbols, starting from `start` (all nodes when
/// omitted) at `t = 0`.
pub fn track(
    graph: &ColoredDigraph,
    word: &Word,
    start: Option<NodeSet>,
) -> Result<Vec<TrackState>, TrackError> {
    for &c in word.symbols() {
        check_color(graph, c)?;
    }
    let adjacency = Adjacency::new(graph);
    let mut current = start.unwrap_or_else(|| NodeSet::full(graph.node_count()));
    let mut states = Vec::with_capacity(word.len() + 1);
    states.push(TrackState {
        possible: current.clone(),
        step: 0,
    });
    for (t, &c) in word.symbols().iter().enumerate() {
        current = adjacency.step_set(&current, c);
        states.push(TrackState {
            possible: current.clone(),
            step: t + 1,
        });
    }
    Ok(states)
}

/// The steps `1 <= t <= |word|` at which the agent is localized: the
/// position set over all start nodes has at most one element. The empty
/// prefix (t = 0) is not reported.
pub fn localization_times(
    graph: &ColoredDigraph,
    word: &Word,
) -> Result<Vec<usize>, TrackError> {
    let states = track(graph, word, None)?;
    Ok(states
        .iter()
        .skip(1)
        .filter(|s| s.possible.len() <= 1)
        .map(|s| s.step)
        .collect())
}

/// Path-count matrix for a word: entry `(i, j)` is the number of paths
/// from `i` to `j` whose color sequence spells the word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountMatrix {
    n: usize,
    entries: Vec<BigUint>,
    pub word: Word,
}

impl CountMatrix {
    fn identity(n: usize, word: Word) -> Self {
        let mut entries = vec![BigUint::ZERO; n * n];
        for i in 0..n {
            entries[i * n + i] = BigUint::from(1u8);
        }
        CountMatrix { n, entries, word }
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigUint {
        &self.entries[i * self.n + j]
    }

    /// Indices of columns with a nonzero sum: exactly the nodes reachable
    /// from some start node along the word.
    pub fn nonzero_columns(&self) -> NodeSet {
        let mut set = NodeSet::empty(self.n);
        for j in 0..self.n {
            if (0..self.n).any(|i| self.entries[i * self.n + j] != BigUint::ZERO) {
                set.insert(j);
            }
        }
        set
    }
}

/// Multiplies the per-color boolean adjacency matrices along the word.
/// Counts are arbitrary precision: over quadratic-length words the number
/// of allowed paths can grow exponentially, so fixed-width counters could
/// overflow. The empty word yields the identity matrix.
pub fn path_count_matrix(
    graph: &ColoredDigraph,
    word: &Word,
) -> Result<CountMatrix, TrackError> {
    for &c in word.symbols() {
        check_color(graph, c)?;
    }
    let n = graph.node_count();
    let mut result = CountMatrix::identity(n, word.clone());
    let adjacency = Adjacency::new(graph);
    for &c in word.symbols() {
        let mut next = vec![BigUint::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let count = &result.entries[i * n + k];
                if *count == BigUint::ZERO {
                    continue;
                }
                for &j in adjacency.successor_list(c, k) {
                    next[i * n + j as usize] += count;
                }
            }
        }
        result.entries = next;
    }
    Ok(result)
}

fn check_color(graph: &ColoredDigraph, color: ColorId) -> Result<(), TrackError> {
    if color >= graph.color_count() {
        return Err(TrackError::UndeclaredColor {
            color,
            declared: graph.color_count(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn set(n: usize, members: &[usize]) -> NodeSet {
        NodeSet::from_indices(n, members.iter().copied())
    }

    #[test]
    fn step_star_center_splits() {
        let g = generators::star(2);
        let out = step(&g, &set(3, &[0]), 0).unwrap();
        assert_eq!(out, set(3, &[1, 2]));
    }

    #[test]
    fn step_self_loop_fixed_point() {
        let g = generators::named_example("loop1").unwrap();
        assert_eq!(step(&g, &set(1, &[0]), 0).unwrap(), set(1, &[0]));
    }

    #[test]
    fn step_sink_set_goes_empty() {
        let g = generators::named_example("amb").unwrap();
        assert!(step(&g, &set(3, &[1, 2]), 0).unwrap().is_empty());
    }

    #[test]
    fn step_rejects_undeclared_color() {
        let g = generators::named_example("loop1").unwrap();
        assert_eq!(
            step(&g, &set(1, &[0]), 7),
            Err(TrackError::UndeclaredColor {
                color: 7,
                declared: 1
            })
        );
    }

    #[test]
    fn track_star_word_sd() {
        let g = generators::star(2);
        let word = Word::parse("SD", &g).unwrap();
        let states = track(&g, &word, None).unwrap();
        let sets: Vec<NodeSet> = states.into_iter().map(|s| s.possible).collect();
        assert_eq!(sets, vec![set(3, &[0, 1, 2]), set(3, &[1, 2]), set(3, &[0])]);
    }

    #[test]
    fn track_loop_stays_put() {
        let g = generators::named_example("loop1").unwrap();
        let word = Word::new(vec![0, 0, 0]);
        for state in track(&g, &word, None).unwrap() {
            assert_eq!(state.possible, set(1, &[0]));
        }
    }

    #[test]
    fn track_two_cycle_never_narrows() {
        let g = generators::named_example("twocyc").unwrap();
        let word = Word::new(vec![0, 0]);
        let states = track(&g, &word, None).unwrap();
        for state in &states {
            assert_eq!(state.possible, set(2, &[0, 1]));
        }
        // cross-check the final set against the matrix-product oracle
        let matrix = path_count_matrix(&g, &word).unwrap();
        assert_eq!(matrix.nonzero_columns(), states.last().unwrap().possible);
    }

    #[test]
    fn track_empty_word_returns_start() {
        let g = generators::star(2);
        let states = track(&g, &Word::default(), Some(set(3, &[1]))).unwrap();
        assert_eq!(states.len(), 1);
        assert_eq!(states[0].possible, set(3, &[1]));
    }

    #[test]
    fn counts_two_cycle_squares_to_identity() {
        let g = generators::named_example("twocyc").unwrap();
        let m = path_count_matrix(&g, &Word::new(vec![0, 0])).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let expected = u8::from(i == j);
                assert_eq!(m.entry(i, j), &BigUint::from(expected));
            }
        }
    }

    #[test]
    fn counts_empty_word_is_identity() {
        let g = generators::star(2);
        let m = path_count_matrix(&g, &Word::default()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.entry(i, j), &BigUint::from(u8::from(i == j)));
            }
        }
    }

    #[test]
    fn counts_diamond_has_two_paths() {
        let mut g = ColoredDigraph::with_size(4, 2);
        g.add_edge(0, 1, 0);
        g.add_edge(0, 2, 0);
        g.add_edge(1, 3, 1);
        g.add_edge(2, 3, 1);
        let m = path_count_matrix(&g, &Word::new(vec![0, 1])).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expected = if (i, j) == (0, 3) { 2u8 } else { 0 };
                assert_eq!(m.entry(i, j), &BigUint::from(expected), "({i}, {j})");
            }
        }
    }

    #[test]
    fn localization_star_sds() {
        let g = generators::star(2);
        let word = Word::parse("SDS", &g).unwrap();
        assert_eq!(localization_times(&g, &word).unwrap(), vec![2]);
    }

    #[test]
    fn localization_loop_every_step() {
        let g = generators::named_example("loop1").unwrap();
        let word = Word::new(vec![0; 4]);
        assert_eq!(localization_times(&g, &word).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn localization_two_cycle_never() {
        let g = generators::named_example("twocyc").unwrap();
        let word = Word::new(vec![0; 4]);
        assert!(localization_times(&g, &word).unwrap().is_empty());
    }

    /// Exhaustive consistency on small graphs: the support of the matrix
    /// column sums equals the tracked final set, for every word up to
    /// length 6.
    #[test]
    fn counts_and_tracking_agree_exhaustively() {
        let mut graphs = vec![
            generators::named_example("twocyc").unwrap(),
            generators::named_example("chain").unwrap(),
            generators::named_example("amb").unwrap(),
            generators::named_example("shift").unwrap(),
            generators::star(2),
        ];
        for seed in 0..40 {
            graphs.push(generators::random_colored_graph(5, 2, 0.3, seed).unwrap());
        }
        for g in &graphs {
            let m = g.color_count();
            let mut words = vec![Word::default()];
            for len in 1..=6usize {
                let mut count = 1usize;
                for _ in 0..len {
                    count *= m;
                }
                for idx in 0..count {
                    let mut symbols = Vec::with_capacity(len);
                    let mut rest = idx;
                    for _ in 0..len {
                        symbols.push(rest % m);
                        rest /= m;
                    }
                    words.push(Word::new(symbols));
                }
            }
            for word in &words {
                let tracked = track(g, word, None).unwrap();
                let matrix = path_count_matrix(g, word).unwrap();
                assert_eq!(
                    matrix.nonzero_columns(),
                    tracked.last().unwrap().possible,
                    "word {word:?}"
                );
            }
        }
    }

    /// step is monotone in the state argument.
    #[test]
    fn step_monotonicity() {
        for seed in 0..60u64 {
            let g = generators::random_colored_graph(5, 3, 0.3, 1000 + seed).unwrap();
            let mut rng = crate::generators::test_rng(seed);
            for _ in 0..20 {
                let small = NodeSet::from_indices(5, (0..5).filter(|_| rng.next_unit() < 0.4));
                let mut large = small.clone();
                for v in 0..5 {
                    if rng.next_unit() < 0.4 {
                        large.insert(v);
                    }
                }
                for c in 0..3 {
                    let step_small = step(&g, &small, c).unwrap();
                    let step_large = step(&g, &large, c).unwrap();
                    assert!(step_small.is_subset_of(&step_large));
                }
            }
        }
    }

    /// If the full-start set stays ambiguous under a word, it stays
    /// ambiguous under every suffix of that word.
    #[test]
    fn suffix_property_on_small_instances() {
        for seed in 0..40u64 {
            let g = generators::random_colored_graph(4, 2, 0.35, 2000 + seed).unwrap();
            for idx in 0..(1 << 5) {
                let symbols: Vec<usize> = (0..5).map(|b| (idx >> b) & 1).collect();
                let word = Word::new(symbols.clone());
                let final_size = track(&g, &word, None)
                    .unwrap()
                    .last()
                    .unwrap()
                    .possible
                    .len();
                if final_size >= 2 {
                    for start in 1..symbols.len() {
                        let suffix = Word::new(symbols[start..].to_vec());
                        let suffix_size = track(&g, &suffix, None)
                            .unwrap()
                            .last()
                            .unwrap()
                            .possible
                            .len();
                        assert!(suffix_size >= 2);
                    }
                }
            }
        }
    }

    /// Tracking composes: uv from V equals v from (u from V).
    #[test]
    fn track_composition() {
        for seed in 0..40u64 {
            let g = generators::random_colored_graph(5, 2, 0.3, 3000 + seed).unwrap();
            let u = Word::new(vec![0, 1, 0]);
            let v = Word::new(vec![1, 1]);
            let uv = Word::new(vec![0, 1, 0, 1, 1]);
            let after_u = track(&g, &u, None).unwrap().last().unwrap().possible.clone();
            let composed = track(&g, &v, Some(after_u))
                .unwrap()
                .last()
                .unwrap()
                .possible
                .clone();
            let direct = track(&g, &uv, None).unwrap().last().unwrap().possible.clone();
            assert_eq!(composed, direct);
        }
    }
}
