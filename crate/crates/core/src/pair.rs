//! Auxiliary pair graphs over ordered node pairs.
//!
//! A pair node `(v1, v2)` stands for two simultaneous walks; one pair
//! edge consumes one color for both. Three variants share the machinery:
//!
//! * [`PairKind::Strict`]: distinct pairs only; an edge needs one color
//!   allowing both component edges. A cycle witnesses two separated
//!   cycles with identical color sequences.
//! * [`PairKind::Relaxed`]: distinct pairs; an edge needs one color under
//!   which each target component is reachable from either source
//!   component. A cycle witnesses eternally ambiguous observations, the
//!   failure of partial observability. The strict edge set is always a
//!   subset of the relaxed one.
//! * [`PairKind::Augmented`]: the strict rule over all ordered pairs,
//!   diagonal included. Walk pairs may coincide at a node and split
//!   later, which distinct-pair graphs cannot represent; paths ending at
//!   an off-diagonal pair correspond exactly to words that still allow
//!   two distinct positions, so this variant carries the exact minimal
//!   localization horizon.
//!
//! Construction cost is within O(n^4 m). Rows are built independently per
//! source pair, so the parallel build (feature `parallel`, on by default)
//! is deterministic and identical to the sequential one.

use crate::bitset::NodeSet;
use crate::graph::{Adjacency, ColoredDigraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    Strict,
    Relaxed,
    Augmented,
}

impl PairKind {
    pub fn includes_diagonal(self) -> bool {
        matches!(self, PairKind::Augmented)
    }
}

/// A directed edge between pair nodes, witnessed by the smallest color
/// that allows it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairEdge {
    pub to: u32,
    pub color: u32,
}

/// Pair graph over `base_n * base_n` indices (`pair = v1 * base_n + v2`).
/// Diagonal rows stay empty and count as absent for non-augmented kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairGraph {
    kind: PairKind,
    base_n: usize,
    adjacency: Vec<Vec<PairEdge>>,
}

/// Builds the pair graph of the requested kind; parallel over source
/// pairs when the `parallel` feature is enabled.
pub fn build_pair_graph(graph: &ColoredDigraph, kind: PairKind) -> PairGraph {
    let adjacency = Adjacency::new(graph);
    let n = graph.node_count();
    #[cfg(feature = "parallel")]
    let rows = {
        use rayon::prelude::*;
        // one task per source node (n rows): single rows are too small
        // to pay for task dispatch
        (0..n * n)
            .into_par_iter()
            .with_min_len(n.max(64))
            .map(|p| build_row(&adjacency, kind, p))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows = (0..n * n).map(|p| build_row(&adjacency, kind, p)).collect();
    PairGraph {
        kind,
        base_n: n,
        adjacency: rows,
    }
}

/// Sequential reference construction; the parallel build must match it
/// exactly. Also the benchmark baseline.
pub fn build_pair_graph_sequential(graph: &ColoredDigraph, kind: PairKind) -> PairGraph {
    let adjacency = Adjacency::new(graph);
    let n = graph.node_count();
    PairGraph {
        kind,
        base_n: n,
        adjacency: (0..n * n).map(|p| build_row(&adjacency, kind, p)).collect(),
    }
}

fn build_row(adjacency: &Adjacency, kind: PairKind, pair: usize) -> Vec<PairEdge> {
    let n = adjacency.n;
    let v1 = pair / n;
    let v2 = pair % n;
    if v1 == v2 && !kind.includes_diagonal() {
        return Vec::new();
    }
    let mut row: Vec<PairEdge> = Vec::new();
    for color in 0..adjacency.m {
        match kind {
            PairKind::Strict | PairKind::Augmented => {
                for &a in adjacency.successor_list(color, v1) {
                    for &b in adjacency.successor_list(color, v2) {
                        if a == b && !kind.includes_diagonal() {
                            continue;
                        }
                        row.push(PairEdge {
                            to: a * n as u32 + b,
                            color: color as u32,
                        });
                    }
                }
            }
            PairKind::Relaxed => {
                let mut union = adjacency.successor_mask(color, v1).clone();
                union.union_with(adjacency.successor_mask(color, v2));
                for a in union.iter() {
                    for b in union.iter() {
                        if a == b {
                            continue;
                        }
                        row.push(PairEdge {
                            to: (a * n + b) as u32,
                            color: color as u32,
                        });
                    }
                }
            }
        }
    }
    // keep one edge per target, witnessed by the smallest color
    row.sort_unstable_by_key(|e| (e.to, e.color));
    row.dedup_by_key(|e| e.to);
    row
}

impl PairGraph {
    pub fn kind(&self) -> PairKind {
        self.kind
    }

    pub fn base_node_count(&self) -> usize {
        self.base_n
    }

    /// Decodes a pair index into its base-node components.
    pub fn components(&self, pair: u32) -> (usize, usize) {
        let p = pair as usize;
        (p / self.base_n, p % self.base_n)
    }

    pub fn contains_pair(&self, pair: u32) -> bool {
        let (v1, v2) = self.components(pair);
        v1 != v2 || self.kind.includes_diagonal()
    }

    /// Pair nodes in index order: all ordered pairs of distinct nodes,
    /// plus the diagonal for the augmented kind.
    pub fn pair_nodes(&self) -> impl Iterator<Item = u32> + '_ {
        (0..(self.base_n * self.base_n) as u32).filter(|&p| self.contains_pair(p))
    }

    pub fn node_count(&self) -> usize {
        let n = self.base_n;
        if self.kind.includes_diagonal() {
            n * n
        } else {
            n * n - n
        }
    }

    pub fn edges_from(&self, pair: u32) -> &[PairEdge] {
        &self.adjacency[pair as usize]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    /// True when the strict edge set is contained in `other`'s (compared
    /// by targets, ignoring witness colors).
    pub fn edges_subset_of(&self, other: &PairGraph) -> bool {
        debug_assert_eq!(self.base_n, other.base_n);
        self.adjacency.iter().enumerate().all(|(p, row)| {
            if !other.contains_pair(p as u32) {
                return row.is_empty();
            }
            row.iter().all(|e| {
                other.adjacency[p]
                    .binary_search_by_key(&e.to, |o| o.to)
                    .is_ok()
            })
        })
    }

    /// Topological order over the pair nodes selected by `active` (all
    /// pair nodes when `None`), or a cycle as a list of pair indices when
    /// one exists. Iterative DFS; edges leaving the active set are
    /// ignored.
    pub fn topological_order(&self, active: Option<&NodeSet>) -> Result<Vec<u32>, Vec<u32>> {
        let total = self.base_n * self.base_n;
        let is_active = |p: u32| {
            self.contains_pair(p) && active.is_none_or(|set| set.contains(p as usize))
        };

        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            White,
            Grey,
            Black,
        }
        let mut mark = vec![Mark::White; total];
        let mut order = Vec::new();
        // (pair, next edge position, parent pair or sentinel)
        let mut stack: Vec<(u32, usize)> = Vec::new();
        let mut parent = vec![u32::MAX; total];

        for root in 0..total as u32 {
            if !is_active(root) || mark[root as usize] != Mark::White {
                continue;
            }
            mark[root as usize] = Mark::Grey;
            stack.push((root, 0));
            while let Some(&(p, mut next)) = stack.last() {
                let row = &self.adjacency[p as usize];
                let mut descend_to = None;
                while next < row.len() {
                    let q = row[next].to;
                    next += 1;
                    if !is_active(q) {
                        continue;
                    }
                    match mark[q as usize] {
                        Mark::White => {
                            descend_to = Some(q);
                            break;
                        }
                        Mark::Grey => {
                            // unwind the DFS chain from p back to q; the
                            // cycle in edge order is q, .., parent(p), p
                            let mut cycle = vec![q];
                            let mut cur = p;
                            while cur != q {
                                cycle.push(cur);
                                cur = parent[cur as usize];
                            }
                            cycle[1..].reverse();
                            return Err(cycle);
                        }
                        Mark::Black => {}
                    }
                }
                stack.last_mut().expect("frame exists").1 = next;
                match descend_to {
                    Some(q) => {
                        mark[q as usize] = Mark::Grey;
                        parent[q as usize] = p;
                        stack.push((q, 0));
                    }
                    None => {
                        mark[p as usize] = Mark::Black;
                        order.push(p);
                        stack.pop();
                    }
                }
            }
        }
        order.reverse();
        Ok(order)
    }

    /// Shortest cycle through `start` (BFS over active pair nodes),
    /// including the length-1 self-loop case. Returns the cycle as pair
    /// indices starting at `start`.
    pub fn shortest_cycle_through(&self, start: u32, active: Option<&NodeSet>) -> Option<Vec<u32>> {
        let total = self.base_n * self.base_n;
        let is_active = |p: u32| {
            self.contains_pair(p) && active.is_none_or(|set| set.contains(p as usize))
        };
        let mut pred = vec![u32::MAX; total];
        let mut seen = vec![false; total];
        let mut queue = std::collections::VecDeque::new();
        seen[start as usize] = true;
        queue.push_back(start);
        while let Some(p) = queue.pop_front() {
            for e in &self.adjacency[p as usize] {
                if !is_active(e.to) {
                    continue;
                }
                if e.to == start {
                    // found the shortest return path; unwind it
                    let mut cycle = vec![start];
                    let mut cur = p;
                    while cur != start {
                        cycle.push(cur);
                        cur = pred[cur as usize];
                    }
                    if cycle.len() > 1 {
                        cycle[1..].reverse();
                    }
                    return Some(cycle);
                }
                if !seen[e.to as usize] {
                    seen[e.to as usize] = true;
                    pred[e.to as usize] = p;
                    queue.push_back(e.to);
                }
            }
        }
        None
    }

    /// The witnessing color of the edge `from -> to`, if present.
    pub fn edge_color(&self, from: u32, to: u32) -> Option<u32> {
        self.adjacency[from as usize]
            .binary_search_by_key(&to, |e| e.to)
            .ok()
            .map(|i| self.adjacency[from as usize][i].color)
    }

    /// Pair nodes from which some off-diagonal pair node is reachable
    /// (including off-diagonal nodes themselves). Backward closure over
    /// reversed edges.
    pub fn reaching_off_diagonal(&self) -> NodeSet {
        let n = self.base_n;
        let total = n * n;
        let mut reverse = vec![Vec::new(); total];
        for (p, row) in self.adjacency.iter().enumerate() {
            for e in row {
                reverse[e.to as usize].push(p as u32);
            }
        }
        let mut marked = NodeSet::empty(total);
        let mut queue = std::collections::VecDeque::new();
        for p in self.pair_nodes() {
            let (v1, v2) = self.components(p);
            if v1 != v2 {
                marked.insert(p as usize);
                queue.push_back(p);
            }
        }
        while let Some(p) = queue.pop_front() {
            for &q in &reverse[p as usize] {
                if self.contains_pair(q) && !marked.contains(q as usize) {
                    marked.insert(q as usize);
                    queue.push_back(q);
                }
            }
        }
        marked
    }

    /// Maximum edge count over paths within the active set, ending at a
    /// node satisfying `target`. The active subgraph must be acyclic
    /// (callers establish this first). Returns `None` when no active node
    /// satisfies `target`.
    pub fn longest_path_to(
        &self,
        active: Option<&NodeSet>,
        target: impl Fn(u32) -> bool,
    ) -> Option<usize> {
        let order = self
            .topological_order(active)
            .expect("longest_path_to requires an acyclic active subgraph");
        let total = self.base_n * self.base_n;
        let mut length = vec![0usize; total];
        let mut best: Option<usize> = None;
        let in_active = |p: u32, active: Option<&NodeSet>| {
            active.is_none_or(|set| set.contains(p as usize))
        };
        for &p in &order {
            if target(p) {
                best = Some(best.map_or(length[p as usize], |b| b.max(length[p as usize])));
            }
            for e in &self.adjacency[p as usize] {
                if !self.contains_pair(e.to) || !in_active(e.to, active) {
                    continue;
                }
                length[e.to as usize] = length[e.to as usize].max(length[p as usize] + 1);
            }
        }
        best
    }

    /// Debug export: the pair graph as an ordinary colored digraph with
    /// pair nodes labeled `v1|v2` and edges labeled by witness color.
    pub fn to_digraph(&self, base: &ColoredDigraph) -> ColoredDigraph {
        let order: Vec<u32> = self.pair_nodes().collect();
        let mut index_of = vec![usize::MAX; self.base_n * self.base_n];
        let mut labels = Vec::with_capacity(order.len());
        for (i, &p) in order.iter().enumerate() {
            index_of[p as usize] = i;
            let (v1, v2) = self.components(p);
            labels.push(format!("{}|{}", base.node_label(v1), base.node_label(v2)));
        }
        let mut out = ColoredDigraph::from_parts(
            labels,
            base.color_labels().to_vec(),
            Vec::new(),
            Vec::new(),
        );
        for &p in &order {
            for e in &self.adjacency[p as usize] {
                out.add_edge(
                    index_of[p as usize],
                    index_of[e.to as usize],
                    e.color as usize,
                );
            }
        }
        out
    }
}
