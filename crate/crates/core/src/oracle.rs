//! Brute-force reference deciders.
//!
//! Everything here works by enumerating observation words, never by pair
//! graphs, so the polynomial deciders in [`crate::analysis`] can be
//! validated against an independent route on small instances.
//!
//! Words are enumerated breadth-first by length with position-set
//! memoization: two words reaching the same set of possible positions
//! are interchangeable for every question asked here, so each layer
//! holds distinct sets instead of raw words. This keeps the worst case
//! at `2^n` states per layer instead of `m^length` words while returning
//! verdicts identical to literal enumeration (a meta-test below checks
//! that on small graphs).

use crate::bitset::NodeSet;
use crate::graph::{Adjacency, ColoredDigraph, Word};
use std::collections::HashMap;
use thiserror::Error;

/// Enumeration limits. The oracle refuses with an error rather than
/// silently truncating when a limit would be crossed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Longest word length the search may need to reach.
    pub max_word_length: usize,
    /// Cap on (state, color) expansions across all layers.
    pub max_word_count: u64,
}

impl OracleBudget {
    pub fn new(max_word_length: usize, max_word_count: u64) -> Result<Self, OracleError> {
        if max_word_length == 0 || max_word_count == 0 {
            return Err(OracleError::InvalidBudget);
        }
        Ok(OracleBudget {
            max_word_length,
            max_word_count,
        })
    }
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_word_length: 4096,
            max_word_count: 50_000_000,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("budget exceeded: the search needs words of length {needed}, budget allows {allowed}")]
    LengthBudget { needed: usize, allowed: usize },
    #[error("budget exceeded: more than {allowed} word expansions")]
    CountBudget { allowed: u64 },
    #[error("budget limits must be positive")]
    InvalidBudget,
}

/// Layered exploration of the position-set automaton from the all-nodes
/// start set, with parent links for witness reconstruction.
struct LayeredSearch<'a> {
    adjacency: Adjacency,
    budget: &'a OracleBudget,
    work: u64,
    states: Vec<NodeSet>,
    index: HashMap<NodeSet, u32>,
    /// Per depth: the states of that layer (ascending ids) and, for every
    /// state first reached at this depth-layer, its predecessor and color.
    layers: Vec<Vec<u32>>,
    parents: Vec<HashMap<u32, (u32, usize)>>,
}

impl<'a> LayeredSearch<'a> {
    fn new(graph: &ColoredDigraph, budget: &'a OracleBudget) -> Self {
        let adjacency = Adjacency::new(graph);
        let start = NodeSet::full(graph.node_count());
        let mut search = LayeredSearch {
            adjacency,
            budget,
            work: 0,
            states: Vec::new(),
            index: HashMap::new(),
            layers: Vec::new(),
            parents: Vec::new(),
        };
        let id = search.intern(start);
        search.layers.push(vec![id]);
        search.parents.push(HashMap::new());
        search
    }

    fn intern(&mut self, set: NodeSet) -> u32 {
        if let Some(&id) = self.index.get(&set) {
            return id;
        }
        let id = self.states.len() as u32;
        self.states.push(set.clone());
        self.index.insert(set, id);
        id
    }

    fn state(&self, id: u32) -> &NodeSet {
        &self.states[id as usize]
    }

    /// Expands one more layer, keeping only states accepted by `keep`.
    /// Returns false once the new layer is empty.
    fn advance(&mut self, keep: impl Fn(&NodeSet) -> bool) -> Result<bool, OracleError> {
        let depth = self.layers.len();
        let previous = self.layers[depth - 1].clone();
        let mut layer = Vec::new();
        let mut parents = HashMap::new();
        for &sid in &previous {
            for color in 0..self.adjacency.m {
                self.work += 1;
                if self.work > self.budget.max_word_count {
                    return Err(OracleError::CountBudget {
                        allowed: self.budget.max_word_count,
                    });
                }
                let next = self.adjacency.step_set(self.state(sid), color);
                if !keep(&next) {
                    continue;
                }
                let id = self.intern(next);
                if let std::collections::hash_map::Entry::Vacant(slot) = parents.entry(id) {
                    slot.insert((sid, color));
                    layer.push(id);
                }
            }
        }
        layer.sort_unstable();
        let empty = layer.is_empty();
        self.layers.push(layer);
        self.parents.push(parents);
        Ok(!empty)
    }

    /// True when some state of the layer at `depth` keeps two or more
    /// positions possible.
    fn layer_has_ambiguity(&self, depth: usize) -> bool {
        self.layers[depth]
            .iter()
            .any(|&sid| self.state(sid).len() >= 2)
    }

    /// Rebuilds one word leading to an ambiguous state of the layer at
    /// `depth` by following parent links.
    fn witness(&self, depth: usize) -> Word {
        let mut sid = *self.layers[depth]
            .iter()
            .find(|&&sid| self.state(sid).len() >= 2)
            .expect("witness requested on a layer without ambiguity");
        let mut symbols = Vec::with_capacity(depth);
        for d in (1..=depth).rev() {
            let &(prev, color) = self.parents[d]
                .get(&sid)
                .expect("layer states carry parent links");
            symbols.push(color);
            sid = prev;
        }
        symbols.reverse();
        Word::new(symbols)
    }
}

fn check_length(needed: usize, budget: &OracleBudget) -> Result<(), OracleError> {
    if needed > budget.max_word_length {
        return Err(OracleError::LengthBudget {
            needed,
            allowed: budget.max_word_length,
        });
    }
    Ok(())
}

/// True iff no word of length `n^2 - n` still allows two end positions.
/// That length is sufficient: a bad word's suffixes are bad, and in an
/// observable graph every bad word is shorter than `n^2 - n`.
pub fn oracle_is_observable(
    graph: &ColoredDigraph,
    budget: &OracleBudget,
) -> Result<bool, OracleError> {
    let n = graph.node_count();
    let target = n * n - n;
    Ok(oracle_longest_bad_word(graph, target, budget)?
        .is_none_or(|(length, _)| length < target))
}

/// True iff no word of length `n^2` keeps two or more positions possible
/// at every prefix `1..=n^2`. Enumeration only extends all-prefix
/// ambiguous words, pruning as soon as a prefix localizes.
pub fn oracle_is_partly_observable(
    graph: &ColoredDigraph,
    budget: &OracleBudget,
) -> Result<bool, OracleError> {
    let n = graph.node_count();
    if n <= 1 {
        // two positions can never be confused
        return Ok(true);
    }
    let target = n * n;
    check_length(target, budget)?;
    let mut search = LayeredSearch::new(graph, budget);
    for _ in 1..=target {
        if !search.advance(|set| set.len() >= 2)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The longest `k <= bound` such that some word of length `k` allows two
/// distinct end positions, with one such word. The empty word counts for
/// graphs with two or more nodes; `None` means no word of any length
/// qualifies. Adding one to the result (zero for `None`) gives the
/// minimal localization horizon whenever the graph is observable and the
/// bound exceeds the returned length.
pub fn oracle_longest_bad_word(
    graph: &ColoredDigraph,
    bound: usize,
    budget: &OracleBudget,
) -> Result<Option<(usize, Word)>, OracleError> {
    let n = graph.node_count();
    if n <= 1 {
        return Ok(None);
    }
    check_length(bound, budget)?;
    let mut search = LayeredSearch::new(graph, budget);
    let mut best = 0usize;
    for depth in 1..=bound {
        if !search.advance(|_| true)? {
            break;
        }
        if search.layer_has_ambiguity(depth) {
            best = depth;
        } else {
            // a bad word of some length yields bad words of every shorter
            // length, so an ambiguity-free layer ends the search
            break;
        }
    }
    Ok(Some((best, search.witness(best))))
}

/// The longest `k <= bound` such that some word of length `k` keeps two
/// or more positions possible at every step `0..=k`, with one such word.
/// `None` for graphs with fewer than two nodes. Adding one to the result
/// (zero for `None`) gives the minimal partial-localization horizon
/// whenever the graph is partly observable and the bound is large enough.
pub fn oracle_longest_ambiguous_word(
    graph: &ColoredDigraph,
    bound: usize,
    budget: &OracleBudget,
) -> Result<Option<(usize, Word)>, OracleError> {
    let n = graph.node_count();
    if n <= 1 {
        return Ok(None);
    }
    check_length(bound, budget)?;
    let mut search = LayeredSearch::new(graph, budget);
    let mut best = 0usize;
    for depth in 1..=bound {
        if !search.advance(|set| set.len() >= 2)? {
            break;
        }
        best = depth;
    }
    Ok(Some((best, search.witness(best))))
}
