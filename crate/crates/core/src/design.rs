//! Exact small-scale solvers for the coloring-design problems: color the
//! nodes (or edges) of an uncolored digraph with `k` colors so the result
//! is observable (or partly observable).
//!
//! Both problems are NP-complete, so the solvers are plain backtracking
//! over the target elements in descending-degree order, with canonical
//! symmetry breaking over color permutations: the first element takes
//! color 0 and every new color index is introduced in order. The returned
//! assignment is the lexicographically smallest feasible one under that
//! ordering, and results are deterministic.

use crate::analysis;
use crate::graph::{ColoredDigraph, Edge, UncoloredDigraph};
use crate::pair::{build_pair_graph_sequential, PairKind};
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DesignError {
    #[error("k must be at least 1")]
    InvalidK,
}

/// Search limits: explored assignment count and wall clock. Exceeding
/// either yields the distinct `BudgetExceeded` status, never a wrong
/// feasibility answer.
#[derive(Debug, Clone, Copy)]
pub struct DesignBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for DesignBudget {
    fn default() -> Self {
        DesignBudget {
            max_nodes: 20_000_000,
            max_time: Duration::from_secs(60),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringTarget {
    Nodes,
    Edges,
}

/// A total coloring of the chosen target set. `colors[i]` is the color of
/// node `i` (or of edge `i` in the input's edge order); the colors used
/// form the prefix `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringAssignment {
    pub target: ColoringTarget,
    pub colors: Vec<usize>,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DesignStatus {
    Feasible(ColoringAssignment),
    Infeasible,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignResult {
    pub status: DesignStatus,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// The three supported design problems. Edge coloring for full
/// observability is an experimental extra: unlike the other two it is
/// not backed by a hardness result or validated instances, only by the
/// same checker-at-the-leaves construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DesignProblem {
    NodesForObservability,
    EdgesForPartialObservability,
    EdgesForObservability,
}

impl DesignProblem {
    pub fn target(self) -> ColoringTarget {
        match self {
            DesignProblem::NodesForObservability => ColoringTarget::Nodes,
            _ => ColoringTarget::Edges,
        }
    }

    fn check(self, g: &ColoredDigraph) -> bool {
        match self {
            DesignProblem::NodesForObservability | DesignProblem::EdgesForObservability => {
                analysis::is_observable(g).expect("solver graphs carry no unobservable edges").0
            }
            DesignProblem::EdgesForPartialObservability => {
                analysis::is_partly_observable(g)
                    .expect("solver graphs carry no unobservable edges")
                    .0
            }
        }
    }
}

/// Node colorings induce edge colors on incoming edges: edge `(u, v)`
/// takes the color of `v`. Declares exactly `k` colors.
pub fn apply_node_coloring(
    g: &UncoloredDigraph,
    colors: &[usize],
    k: usize,
) -> ColoredDigraph {
    debug_assert_eq!(colors.len(), g.node_count());
    let edges = g
        .edges()
        .iter()
        .map(|&(from, to)| Edge::new(from, to, colors[to]))
        .collect();
    ColoredDigraph::from_parts(
        g.node_labels().to_vec(),
        color_labels(k),
        edges,
        Vec::new(),
    )
}

/// Edge colorings color each edge directly, in the input's edge order.
pub fn apply_edge_coloring(
    g: &UncoloredDigraph,
    colors: &[usize],
    k: usize,
) -> ColoredDigraph {
    debug_assert_eq!(colors.len(), g.edges().len());
    let edges = g
        .edges()
        .iter()
        .zip(colors)
        .map(|(&(from, to), &c)| Edge::new(from, to, c))
        .collect();
    ColoredDigraph::from_parts(
        g.node_labels().to_vec(),
        color_labels(k),
        edges,
        Vec::new(),
    )
}

fn color_labels(k: usize) -> Vec<String> {
    (0..k).map(|i| format!("c{i}")).collect()
}

/// Can the nodes be colored with `k` colors so the graph is observable?
pub fn design_node_coloring_observable(
    g: &UncoloredDigraph,
    k: usize,
    budget: &DesignBudget,
) -> Result<DesignResult, DesignError> {
    solve(g, DesignProblem::NodesForObservability, k, &mut Metrics::new(budget))
}

/// Can the edges be colored with `k` colors so the graph is partly
/// observable?
pub fn design_edge_coloring_partly_observable(
    g: &UncoloredDigraph,
    k: usize,
    budget: &DesignBudget,
) -> Result<DesignResult, DesignError> {
    solve(
        g,
        DesignProblem::EdgesForPartialObservability,
        k,
        &mut Metrics::new(budget),
    )
}

/// Experimental: can the edges be colored with `k` colors so the graph is
/// fully observable? Same machinery, no theory backing; see
/// [`DesignProblem::EdgesForObservability`].
pub fn design_edge_coloring_observable(
    g: &UncoloredDigraph,
    k: usize,
    budget: &DesignBudget,
) -> Result<DesignResult, DesignError> {
    solve(
        g,
        DesignProblem::EdgesForObservability,
        k,
        &mut Metrics::new(budget),
    )
}

pub fn design(
    g: &UncoloredDigraph,
    problem: DesignProblem,
    k: usize,
    budget: &DesignBudget,
) -> Result<DesignResult, DesignError> {
    solve(g, problem, k, &mut Metrics::new(budget))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimumColorsOutcome {
    Found {
        k: usize,
        assignment: ColoringAssignment,
        nodes_explored: u64,
        elapsed: Duration,
    },
    BudgetExceeded {
        /// Largest k proven infeasible before the budget ran out.
        largest_infeasible: Option<usize>,
        nodes_explored: u64,
        elapsed: Duration,
    },
}

/// Smallest `k` for which the chosen problem is feasible, by ascending
/// linear search from 1 up to the target count. The budget covers the
/// whole search.
pub fn minimum_colors(
    g: &UncoloredDigraph,
    problem: DesignProblem,
    budget: &DesignBudget,
) -> MinimumColorsOutcome {
    let target_count = match problem.target() {
        ColoringTarget::Nodes => g.node_count(),
        ColoringTarget::Edges => g.edges().len(),
    };
    let mut metrics = Metrics::new(budget);
    for k in 1..=target_count.max(1) {
        let result = solve(g, problem, k, &mut metrics).expect("k >= 1 by construction");
        match result.status {
            DesignStatus::Feasible(assignment) => {
                return MinimumColorsOutcome::Found {
                    k,
                    assignment,
                    nodes_explored: result.nodes_explored,
                    elapsed: result.elapsed,
                }
            }
            DesignStatus::Infeasible => continue,
            DesignStatus::BudgetExceeded => {
                return MinimumColorsOutcome::BudgetExceeded {
                    largest_infeasible: (k > 1).then(|| k - 1),
                    nodes_explored: result.nodes_explored,
                    elapsed: result.elapsed,
                }
            }
        }
    }
    unreachable!("coloring every target element distinctly is always feasible")
}

/// Shared explored-node counter and deadline, so `minimum_colors` can
/// spread one budget across its ascending feasibility checks.
struct Metrics {
    explored: u64,
    started: Instant,
    deadline: Instant,
    max_nodes: u64,
}

impl Metrics {
    fn new(budget: &DesignBudget) -> Self {
        let started = Instant::now();
        Metrics {
            explored: 0,
            started,
            deadline: started + budget.max_time,
            max_nodes: budget.max_nodes,
        }
    }

    /// Counts one search node; true when a limit is crossed.
    fn spend(&mut self) -> bool {
        self.explored += 1;
        if self.explored > self.max_nodes {
            return true;
        }
        self.explored.is_multiple_of(1024) && Instant::now() > self.deadline
    }
}

fn solve(
    g: &UncoloredDigraph,
    problem: DesignProblem,
    k: usize,
    metrics: &mut Metrics,
) -> Result<DesignResult, DesignError> {
    if k == 0 {
        return Err(DesignError::InvalidK);
    }
    let n = g.node_count();

    // dedup edges once; the pruning structures assume simple adjacency
    let mut simple_edges: Vec<(usize, usize)> = g.edges().to_vec();
    simple_edges.sort_unstable();
    simple_edges.dedup();

    let mut out_deg = vec![0usize; n];
    let mut in_deg = vec![0usize; n];
    for &(u, v) in &simple_edges {
        out_deg[u] += 1;
        in_deg[v] += 1;
    }

    let target_count = match problem.target() {
        ColoringTarget::Nodes => n,
        ColoringTarget::Edges => g.edges().len(),
    };

    // assignment order: descending degree, ties by index
    let mut order: Vec<usize> = (0..target_count).collect();
    match problem.target() {
        ColoringTarget::Nodes => {
            order.sort_by_key(|&v| (std::cmp::Reverse(out_deg[v] + in_deg[v]), v));
        }
        ColoringTarget::Edges => {
            let degree = |i: usize| {
                let (u, v) = g.edges()[i];
                out_deg[u] + in_deg[u] + out_deg[v] + in_deg[v]
            };
            order.sort_by_key(|&i| (std::cmp::Reverse(degree(i)), i));
        }
    }

    // node-problem pruning structures: out-neighborhoods of asymptotically
    // reachable nodes must be rainbow
    let reachable = g.as_single_color().asymptotically_reachable();
    let mut out_neighbors = vec![Vec::new(); n];
    let mut in_neighbors = vec![Vec::new(); n];
    for &(u, v) in &simple_edges {
        out_neighbors[u].push(v);
        in_neighbors[v].push(u);
    }

    let mut search = Search {
        g,
        problem,
        k,
        metrics,
        order,
        colors: vec![usize::MAX; target_count],
        reachable,
        out_neighbors,
        in_neighbors,
        result: None,
        budget_hit: false,
    };
    search.descend(0, 0);

    let status = if search.budget_hit {
        DesignStatus::BudgetExceeded
    } else {
        match search.result {
            Some(assignment) => DesignStatus::Feasible(assignment),
            None => DesignStatus::Infeasible,
        }
    };
    Ok(DesignResult {
        status,
        nodes_explored: search.metrics.explored,
        elapsed: search.metrics.started.elapsed(),
    })
}

struct Search<'a> {
    g: &'a UncoloredDigraph,
    problem: DesignProblem,
    k: usize,
    metrics: &'a mut Metrics,
    order: Vec<usize>,
    colors: Vec<usize>,
    reachable: crate::bitset::NodeSet,
    out_neighbors: Vec<Vec<usize>>,
    in_neighbors: Vec<Vec<usize>>,
    result: Option<ColoringAssignment>,
    budget_hit: bool,
}

impl Search<'_> {
    /// Depth-first over positions in `order`; `used` counts the colors
    /// introduced so far (canonical form: a fresh element may use at most
    /// one new color index).
    fn descend(&mut self, position: usize, used: usize) {
        if self.result.is_some() || self.budget_hit {
            return;
        }
        if position == self.order.len() {
            if self.leaf_feasible() {
                self.result = Some(ColoringAssignment {
                    target: self.problem.target(),
                    colors: self.colors.clone(),
                    k: used,
                });
            }
            return;
        }
        let element = self.order[position];
        let limit = self.k.min(used + 1);
        for color in 0..limit {
            if self.metrics.spend() {
                self.budget_hit = true;
                return;
            }
            self.colors[element] = color;
            if self.partial_ok(element) {
                self.descend(position + 1, used.max(color + 1));
                if self.result.is_some() || self.budget_hit {
                    self.colors[element] = usize::MAX;
                    return;
                }
            }
            self.colors[element] = usize::MAX;
        }
    }

    fn partial_ok(&self, element: usize) -> bool {
        match self.problem {
            DesignProblem::NodesForObservability => self.node_partial_ok(element),
            DesignProblem::EdgesForPartialObservability => {
                self.edge_partial_ok(PairKind::Relaxed)
            }
            DesignProblem::EdgesForObservability => self.edge_partial_ok(PairKind::Strict),
        }
    }

    /// Rainbow condition: an asymptotically reachable node whose two
    /// colored out-neighbors share a color can never become observable,
    /// because its outgoing edges inherit the neighbor colors.
    fn node_partial_ok(&self, node: usize) -> bool {
        let color = self.colors[node];
        for &p in &self.in_neighbors[node] {
            if !self.reachable.contains(p) {
                continue;
            }
            for &w in &self.out_neighbors[p] {
                if w != node && self.colors[w] == color {
                    return false;
                }
            }
        }
        true
    }

    /// A pair-graph cycle among the already-colored edges survives any
    /// completion (more colored edges only add pair edges), so the branch
    /// is dead.
    fn edge_partial_ok(&self, kind: PairKind) -> bool {
        let colored: Vec<Edge> = self
            .g
            .edges()
            .iter()
            .zip(&self.colors)
            .filter(|(_, &c)| c != usize::MAX)
            .map(|(&(from, to), &c)| Edge::new(from, to, c))
            .collect();
        let partial = ColoredDigraph::from_parts(
            self.g.node_labels().to_vec(),
            color_labels(self.k),
            colored,
            Vec::new(),
        );
        build_pair_graph_sequential(&partial, kind)
            .topological_order(None)
            .is_ok()
    }

    fn leaf_feasible(&mut self) -> bool {
        let used = self.colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        let k = used.max(1).min(self.k);
        let candidate = match self.problem.target() {
            ColoringTarget::Nodes => apply_node_coloring(self.g, &self.colors, k),
            ColoringTarget::Edges => apply_edge_coloring(self.g, &self.colors, k),
        };
        self.problem.check(&candidate)
    }
}

/// JSON form of a design result: status, color count, the assignment
/// keyed by node label (or `from->to` edge key), and search statistics.
pub fn design_result_json(result: &DesignResult, g: &UncoloredDigraph) -> serde_json::Value {
    let mut doc = serde_json::Map::new();
    doc.insert(
        "nodes_explored".to_string(),
        serde_json::Value::from(result.nodes_explored),
    );
    doc.insert(
        "elapsed_ms".to_string(),
        serde_json::Value::from(result.elapsed.as_millis() as u64),
    );
    match &result.status {
        DesignStatus::Infeasible => {
            doc.insert("status".to_string(), "infeasible".into());
        }
        DesignStatus::BudgetExceeded => {
            doc.insert("status".to_string(), "budget_exceeded".into());
        }
        DesignStatus::Feasible(assignment) => {
            doc.insert("status".to_string(), "feasible".into());
            doc.insert("k".to_string(), serde_json::Value::from(assignment.k));
            let mut map = serde_json::Map::new();
            match assignment.target {
                ColoringTarget::Nodes => {
                    for (v, &c) in assignment.colors.iter().enumerate() {
                        map.insert(g.node_label(v).to_string(), serde_json::Value::from(c));
                    }
                }
                ColoringTarget::Edges => {
                    for (i, &c) in assignment.colors.iter().enumerate() {
                        let (u, v) = g.edges()[i];
                        map.insert(
                            format!("{}->{}", g.node_label(u), g.node_label(v)),
                            serde_json::Value::from(c),
                        );
                    }
                }
            }
            doc.insert("assignment".to_string(), serde_json::Value::Object(map));
        }
    }
    serde_json::Value::Object(doc)
}
