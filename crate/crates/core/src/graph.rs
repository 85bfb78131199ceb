//! Edge-colored directed graphs: the data model, structural validation,
//! strongly connected components, asymptotic reachability and the
//! unobservable-transition closure.
//!
//! Nodes and colors are dense integer indices with a label table, so that
//! pair-graph indices and matrix rows map in O(1). All values are immutable
//! after construction and every operation here is a pure function.

use crate::bitset::NodeSet;

pub type NodeId = usize;
pub type ColorId = usize;

/// A directed edge carrying one color. Parallel edges with distinct colors
/// are allowed; exact duplicates are a validation error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: NodeId,
    pub to: NodeId,
    pub color: ColorId,
}

impl Edge {
    pub fn new(from: NodeId, to: NodeId, color: ColorId) -> Self {
        Edge { from, to, color }
    }
}

/// An edge-colored directed graph, optionally with unobservable
/// (color-free) edges in the discrete-event-system style.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDigraph {
    nodes: Vec<String>,
    colors: Vec<String>,
    edges: Vec<Edge>,
    unobservable: Vec<(NodeId, NodeId)>,
}

impl ColoredDigraph {
    /// Assembles a graph from raw parts without checking invariants;
    /// run [`ColoredDigraph::validate`] to obtain a structural report.
    pub fn from_parts(
        nodes: Vec<String>,
        colors: Vec<String>,
        edges: Vec<Edge>,
        unobservable: Vec<(NodeId, NodeId)>,
    ) -> Self {
        ColoredDigraph {
            nodes,
            colors,
            edges,
            unobservable,
        }
    }

    /// Graph with `n` nodes labeled `"0"..` and `m` colors labeled
    /// `"a".."z"` (then `"c26"..`) and no edges.
    pub fn with_size(n: usize, m: usize) -> Self {
        ColoredDigraph {
            nodes: (0..n).map(|i| i.to_string()).collect(),
            colors: (0..m).map(default_color_label).collect(),
            edges: Vec::new(),
            unobservable: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn color_count(&self) -> usize {
        self.colors.len()
    }

    pub fn node_labels(&self) -> &[String] {
        &self.nodes
    }

    pub fn color_labels(&self) -> &[String] {
        &self.colors
    }

    pub fn node_label(&self, v: NodeId) -> &str {
        &self.nodes[v]
    }

    pub fn color_label(&self, c: ColorId) -> &str {
        &self.colors[c]
    }

    pub fn node_by_label(&self, label: &str) -> Option<NodeId> {
        self.nodes.iter().position(|l| l == label)
    }

    pub fn color_by_label(&self, label: &str) -> Option<ColorId> {
        self.colors.iter().position(|l| l == label)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn unobservable_edges(&self) -> &[(NodeId, NodeId)] {
        &self.unobservable
    }

    pub fn add_edge(&mut self, from: NodeId, to: NodeId, color: ColorId) {
        self.edges.push(Edge { from, to, color });
    }

    pub fn add_unobservable_edge(&mut self, from: NodeId, to: NodeId) {
        self.unobservable.push((from, to));
    }

    /// Reports every structural violation; never mutates the input and
    /// never fails. `ok` is true iff no error-severity issue was found.
    pub fn validate(&self) -> ValidationReport {
        let n = self.node_count();
        let m = self.color_count();
        let mut issues = Vec::new();

        let mut seen_labels = std::collections::HashMap::new();
        for (i, label) in self.nodes.iter().enumerate() {
            if let Some(first) = seen_labels.insert(label.as_str(), i) {
                issues.push(Issue::error(
                    format!("duplicate node label {label:?} (first at nodes[{first}])"),
                    format!("nodes[{i}]"),
                ));
            }
        }
        let mut seen_colors = std::collections::HashMap::new();
        for (i, label) in self.colors.iter().enumerate() {
            if let Some(first) = seen_colors.insert(label.as_str(), i) {
                issues.push(Issue::error(
                    format!("duplicate color label {label:?} (first at colors[{first}])"),
                    format!("colors[{i}]"),
                ));
            }
        }

        let mut seen_edges = std::collections::HashSet::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.from >= n {
                issues.push(Issue::error(
                    format!("dangling endpoint: node {} is not declared", e.from),
                    format!("edges[{i}]"),
                ));
            }
            if e.to >= n {
                issues.push(Issue::error(
                    format!("dangling endpoint: node {} is not declared", e.to),
                    format!("edges[{i}]"),
                ));
            }
            if e.color >= m {
                issues.push(Issue::error(
                    format!("undeclared color: {} is not declared", e.color),
                    format!("edges[{i}]"),
                ));
            }
            if !seen_edges.insert(*e) {
                issues.push(Issue::error(
                    format!(
                        "duplicate edge ({}, {}, {})",
                        e.from, e.to, e.color
                    ),
                    format!("edges[{i}]"),
                ));
            }
        }

        let mut seen_unobs = std::collections::HashSet::new();
        for (i, &(from, to)) in self.unobservable.iter().enumerate() {
            if from >= n || to >= n {
                issues.push(Issue::error(
                    format!("dangling endpoint: unobservable edge ({from}, {to})"),
                    format!("unobservable[{i}]"),
                ));
            }
            if !seen_unobs.insert((from, to)) {
                issues.push(Issue::warning(
                    format!("duplicate unobservable edge ({from}, {to})"),
                    format!("unobservable[{i}]"),
                ));
            }
        }

        ValidationReport::from_issues(issues)
    }

    /// Nodes at which paths of unboundedly many lengths end: everything
    /// reachable (colors ignored) from a node that lies on a directed
    /// cycle. Unobservable edges do not count; apply
    /// [`ColoredDigraph::epsilon_closure`] first if they matter.
    pub fn asymptotically_reachable(&self) -> NodeSet {
        let n = self.node_count();
        let mut succ = vec![Vec::new(); n];
        let mut self_loop = vec![false; n];
        for e in &self.edges {
            succ[e.from].push(e.to);
            if e.from == e.to {
                self_loop[e.from] = true;
            }
        }

        let comp = strongly_connected_components_from_adj(&succ);
        let mut comp_size = vec![0usize; comp.count];
        for v in 0..n {
            comp_size[comp.component[v]] += 1;
        }

        let mut result = NodeSet::empty(n);
        let mut queue = std::collections::VecDeque::new();
        for v in 0..n {
            if self_loop[v] || comp_size[comp.component[v]] >= 2 {
                result.insert(v);
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &w in &succ[v] {
                if !result.contains(w) {
                    result.insert(w);
                    queue.push_back(w);
                }
            }
        }
        result
    }

    /// Strongly connected components (colors ignored), one `Vec` of node
    /// ids per component, in reverse topological order of the condensation.
    pub fn strongly_connected_components(&self) -> Vec<Vec<NodeId>> {
        let n = self.node_count();
        let mut succ = vec![Vec::new(); n];
        for e in &self.edges {
            succ[e.from].push(e.to);
        }
        let comp = strongly_connected_components_from_adj(&succ);
        let mut groups = vec![Vec::new(); comp.count];
        for v in 0..n {
            groups[comp.component[v]].push(v);
        }
        groups
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.node_count() <= 1 || self.strongly_connected_components().len() == 1
    }

    /// Eliminates unobservable edges: whenever an edge `(h, i, c)` exists
    /// and `j` is reachable from `i` through one or more unobservable
    /// edges, the result contains `(h, j, c)`. Original colored edges are
    /// retained, the node set is unchanged and the output carries no
    /// unobservable edges. Idempotent.
    pub fn epsilon_closure(&self) -> ColoredDigraph {
        let n = self.node_count();
        if self.unobservable.is_empty() {
            let mut g = self.clone();
            g.unobservable.clear();
            return g;
        }

        let mut unobs_succ = vec![Vec::new(); n];
        for &(from, to) in &self.unobservable {
            unobs_succ[from].push(to);
        }
        // reach[i] = nodes reachable from i via one or more unobservable edges
        let mut reach: Vec<NodeSet> = Vec::with_capacity(n);
        for start in 0..n {
            let mut seen = NodeSet::empty(n);
            let mut queue: Vec<NodeId> = unobs_succ[start].clone();
            while let Some(v) = queue.pop() {
                if !seen.contains(v) {
                    seen.insert(v);
                    queue.extend_from_slice(&unobs_succ[v]);
                }
            }
            reach.push(seen);
        }

        let mut present: std::collections::HashSet<Edge> = self.edges.iter().copied().collect();
        let mut added = Vec::new();
        for e in &self.edges {
            for j in reach[e.to].iter() {
                let candidate = Edge::new(e.from, j, e.color);
                if present.insert(candidate) {
                    added.push(candidate);
                }
            }
        }
        added.sort_unstable();

        let mut edges = self.edges.clone();
        edges.extend(added);
        ColoredDigraph {
            nodes: self.nodes.clone(),
            colors: self.colors.clone(),
            edges,
            unobservable: Vec::new(),
        }
    }
}

fn default_color_label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("c{i}")
    }
}

/// Issue severity in a [`ValidationReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

/// One structural finding: what is wrong and where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Issue {
    pub severity: Severity,
    pub message: String,
    pub location: String,
}

impl Issue {
    fn error(message: String, location: String) -> Self {
        Issue {
            severity: Severity::Error,
            message,
            location,
        }
    }

    fn warning(message: String, location: String) -> Self {
        Issue {
            severity: Severity::Warning,
            message,
            location,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    fn from_issues(issues: Vec<Issue>) -> Self {
        let ok = issues.iter().all(|i| i.severity != Severity::Error);
        ValidationReport { ok, issues }
    }
}

/// A finite sequence of color identifiers: the observation string.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word(pub Vec<ColorId>);

impl Word {
    pub fn new(symbols: Vec<ColorId>) -> Self {
        Word(symbols)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[ColorId] {
        &self.0
    }

    /// Parses a textual word against a graph's color table. A string with
    /// commas is split on them; otherwise, when every declared color label
    /// is a single character, each character is one symbol; otherwise the
    /// whole string must be a single label.
    pub fn parse(text: &str, graph: &ColoredDigraph) -> Result<Word, String> {
        if text.is_empty() {
            return Ok(Word::default());
        }
        let lookup = |label: &str| {
            graph
                .color_by_label(label)
                .ok_or_else(|| format!("unknown color label {label:?}"))
        };
        if text.contains(',') {
            return text
                .split(',')
                .map(|part| lookup(part.trim()))
                .collect::<Result<Vec<_>, _>>()
                .map(Word);
        }
        if graph.color_labels().iter().all(|l| l.chars().count() == 1) {
            return text
                .chars()
                .map(|ch| lookup(&ch.to_string()))
                .collect::<Result<Vec<_>, _>>()
                .map(Word);
        }
        lookup(text).map(|c| Word(vec![c]))
    }

    /// Renders the word with the graph's color labels, joined bare when
    /// all labels are single characters and comma-separated otherwise.
    pub fn display(&self, graph: &ColoredDigraph) -> String {
        let labels: Vec<&str> = self.0.iter().map(|&c| graph.color_label(c)).collect();
        if labels.iter().all(|l| l.chars().count() == 1) {
            labels.concat()
        } else {
            labels.join(",")
        }
    }
}

/// An uncolored directed graph: the input to the coloring-design solvers
/// and the output of the hardness-reduction generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncoloredDigraph {
    nodes: Vec<String>,
    edges: Vec<(NodeId, NodeId)>,
}

impl UncoloredDigraph {
    pub fn from_parts(nodes: Vec<String>, edges: Vec<(NodeId, NodeId)>) -> Self {
        UncoloredDigraph { nodes, edges }
    }

    pub fn with_size(n: usize) -> Self {
        UncoloredDigraph {
            nodes: (0..n).map(|i| i.to_string()).collect(),
            edges: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node_labels(&self) -> &[String] {
        &self.nodes
    }

    pub fn node_label(&self, v: NodeId) -> &str {
        &self.nodes[v]
    }

    pub fn node_by_label(&self, label: &str) -> Option<NodeId> {
        self.nodes.iter().position(|l| l == label)
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn add_edge(&mut self, from: NodeId, to: NodeId) {
        self.edges.push((from, to));
    }

    /// Single-color view: every edge carries the placeholder color `*`.
    /// An edgeless graph maps to zero colors.
    pub fn as_single_color(&self) -> ColoredDigraph {
        let colors = if self.edges.is_empty() {
            Vec::new()
        } else {
            vec!["*".to_string()]
        };
        ColoredDigraph {
            nodes: self.nodes.clone(),
            colors,
            edges: self
                .edges
                .iter()
                .map(|&(from, to)| Edge::new(from, to, 0))
                .collect(),
            unobservable: Vec::new(),
        }
    }
}

/// Forgets colors and collapses parallel edges; unobservable edges are
/// dropped.
impl From<&ColoredDigraph> for UncoloredDigraph {
    fn from(g: &ColoredDigraph) -> Self {
        let mut edges: Vec<(NodeId, NodeId)> =
            g.edges.iter().map(|e| (e.from, e.to)).collect();
        edges.sort_unstable();
        edges.dedup();
        UncoloredDigraph {
            nodes: g.nodes.clone(),
            edges,
        }
    }
}

/// Per-color successor structure compiled from a graph: bit masks for
/// δ-stepping and plain lists for pair-graph construction.
pub(crate) struct Adjacency {
    pub n: usize,
    pub m: usize,
    masks: Vec<NodeSet>,
    lists: Vec<Vec<u32>>,
}

impl Adjacency {
    pub fn new(g: &ColoredDigraph) -> Self {
        let n = g.node_count();
        let m = g.color_count();
        let mut masks = vec![NodeSet::empty(n); n * m];
        let mut lists = vec![Vec::new(); n * m];
        for e in g.edges() {
            let slot = e.color * n + e.from;
            if !masks[slot].contains(e.to) {
                masks[slot].insert(e.to);
                lists[slot].push(e.to as u32);
            }
        }
        for list in &mut lists {
            list.sort_unstable();
        }
        Adjacency { n, m, masks, lists }
    }

    pub fn successor_mask(&self, color: ColorId, v: NodeId) -> &NodeSet {
        &self.masks[color * self.n + v]
    }

    pub fn successor_list(&self, color: ColorId, v: NodeId) -> &[u32] {
        &self.lists[color * self.n + v]
    }

    /// One δ step: all nodes reachable from `state` along one edge of the
    /// given color.
    pub fn step_set(&self, state: &NodeSet, color: ColorId) -> NodeSet {
        let mut out = NodeSet::empty(self.n);
        for v in state.iter() {
            out.union_with(self.successor_mask(color, v));
        }
        out
    }
}

struct SccResult {
    component: Vec<usize>,
    count: usize,
}

/// Iterative Tarjan over an adjacency list. Components are numbered in
/// completion order (reverse topological).
fn strongly_connected_components_from_adj(succ: &[Vec<NodeId>]) -> SccResult {
    let n = succ.len();
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut component = vec![UNSET; n];
    let mut stack = Vec::new();
    let mut next_index = 0usize;
    let mut count = 0usize;

    // call frames: (node, next child position)
    let mut frames: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        frames.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut child)) = frames.last_mut() {
            if *child < succ[v].len() {
                let w = succ[v][*child];
                *child += 1;
                if index[w] == UNSET {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("scc stack underflow");
                        on_stack[w] = false;
                        component[w] = count;
                        if w == v {
                            break;
                        }
                    }
                    count += 1;
                }
                if let Some(&(parent, _)) = frames.last() {
                    low[parent] = low[parent].min(low[v]);
                }
            }
        }
    }

    SccResult { component, count }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn validate_empty_graph_ok() {
        let g = ColoredDigraph::with_size(0, 0);
        assert!(g.validate().ok);
    }

    #[test]
    fn validate_dangling_endpoint() {
        let g = ColoredDigraph::from_parts(
            vec!["0".into(), "1".into()],
            vec!["a".into()],
            vec![Edge::new(5, 0, 0)],
            vec![],
        );
        let report = g.validate();
        assert!(!report.ok);
        assert!(report.issues[0].message.contains("dangling endpoint"));
        assert_eq!(report.issues[0].location, "edges[0]");
    }

    #[test]
    fn validate_loop1_ok() {
        let g = generators::named_example("loop1").unwrap();
        assert!(g.validate().ok);
    }

    #[test]
    fn validate_duplicate_edge_and_color() {
        let mut g = ColoredDigraph::with_size(2, 1);
        g.add_edge(0, 1, 0);
        g.add_edge(0, 1, 0);
        g.add_edge(0, 1, 3);
        let report = g.validate();
        assert!(!report.ok);
        let messages: Vec<&str> = report.issues.iter().map(|i| i.message.as_str()).collect();
        assert!(messages.iter().any(|m| m.contains("duplicate edge")));
        assert!(messages.iter().any(|m| m.contains("undeclared color")));
    }

    #[test]
    fn validate_duplicate_unobservable_is_warning() {
        let mut g = ColoredDigraph::with_size(2, 1);
        g.add_edge(0, 1, 0);
        g.add_unobservable_edge(0, 1);
        g.add_unobservable_edge(0, 1);
        let report = g.validate();
        assert!(report.ok);
        assert_eq!(report.issues.len(), 1);
        assert_eq!(report.issues[0].severity, Severity::Warning);
    }

    #[test]
    fn asymptotic_two_cycle_is_everything() {
        let g = generators::named_example("twocyc").unwrap();
        assert_eq!(
            g.asymptotically_reachable(),
            NodeSet::from_indices(2, [0, 1])
        );
    }

    #[test]
    fn asymptotic_acyclic_is_empty() {
        let g = generators::named_example("amb").unwrap();
        assert!(g.asymptotically_reachable().is_empty());
    }

    #[test]
    fn asymptotic_star_is_everything() {
        let g = generators::star(2);
        assert_eq!(
            g.asymptotically_reachable(),
            NodeSet::full(g.node_count())
        );
    }

    #[test]
    fn asymptotic_sink_fed_by_cycle_counts() {
        // 0 <-> 1, 1 -> 2 where 2 is a sink: paths of every length >= 1 end at 2.
        let mut g = ColoredDigraph::with_size(3, 1);
        g.add_edge(0, 1, 0);
        g.add_edge(1, 0, 0);
        g.add_edge(1, 2, 0);
        assert_eq!(
            g.asymptotically_reachable(),
            NodeSet::from_indices(3, [0, 1, 2])
        );
    }

    /// Brute-force reference: v qualifies iff some path of length exactly
    /// n^2 ends at v (pigeonhole makes n^2 sufficient).
    fn asymptotic_by_path_dp(g: &ColoredDigraph) -> NodeSet {
        let n = g.node_count();
        let mut reachable_now = NodeSet::full(n);
        for _ in 0..n * n {
            let mut next = NodeSet::empty(n);
            for e in g.edges() {
                if reachable_now.contains(e.from) {
                    next.insert(e.to);
                }
            }
            reachable_now = next;
        }
        reachable_now
    }

    #[test]
    fn asymptotic_matches_path_dp_on_small_graphs() {
        for n in 0..=3usize {
            let triples = n * n; // single color
            for mask in 0u32..(1u32 << triples) {
                let mut g = ColoredDigraph::with_size(n, 1);
                for (t, _) in (0..triples).enumerate() {
                    if mask & (1 << t) != 0 {
                        g.add_edge(t / n, t % n, 0);
                    }
                }
                assert_eq!(
                    g.asymptotically_reachable(),
                    asymptotic_by_path_dp(&g),
                    "n={n} mask={mask:b}"
                );
            }
        }
        for seed in 0..500u64 {
            let g = generators::random_colored_graph(5, 2, 0.25, seed).unwrap();
            assert_eq!(g.asymptotically_reachable(), asymptotic_by_path_dp(&g));
        }
    }

    #[test]
    fn scc_groups_and_strong_connectivity() {
        let mut g = ColoredDigraph::with_size(4, 1);
        g.add_edge(0, 1, 0);
        g.add_edge(1, 0, 0);
        g.add_edge(1, 2, 0);
        g.add_edge(2, 3, 0);
        let mut comps: Vec<Vec<NodeId>> = g.strongly_connected_components();
        for c in &mut comps {
            c.sort_unstable();
        }
        comps.sort();
        assert_eq!(comps, vec![vec![0, 1], vec![2], vec![3]]);
        assert!(!g.is_strongly_connected());
        assert!(generators::named_example("twocyc")
            .unwrap()
            .is_strongly_connected());
    }

    #[test]
    fn closure_identity_without_unobservable() {
        let g = generators::star(2);
        assert_eq!(g.epsilon_closure(), g);
    }

    #[test]
    fn closure_single_hop() {
        // h -> i colored, i -> j unobservable.
        let mut g = ColoredDigraph::with_size(3, 1);
        g.add_edge(0, 1, 0);
        g.add_unobservable_edge(1, 2);
        let closed = g.epsilon_closure();
        assert!(closed.unobservable_edges().is_empty());
        assert_eq!(
            closed.edges(),
            &[Edge::new(0, 1, 0), Edge::new(0, 2, 0)]
        );
    }

    #[test]
    fn closure_follows_chains() {
        let mut g = ColoredDigraph::with_size(4, 1);
        g.add_edge(0, 1, 0);
        g.add_unobservable_edge(1, 2);
        g.add_unobservable_edge(2, 3);
        let closed = g.epsilon_closure();
        assert_eq!(
            closed.edges(),
            &[
                Edge::new(0, 1, 0),
                Edge::new(0, 2, 0),
                Edge::new(0, 3, 0)
            ]
        );
    }

    #[test]
    fn closure_handles_unobservable_cycles() {
        let mut g = ColoredDigraph::with_size(3, 1);
        g.add_edge(0, 1, 0);
        g.add_unobservable_edge(1, 2);
        g.add_unobservable_edge(2, 1);
        let closed = g.epsilon_closure();
        assert_eq!(
            closed.edges(),
            &[Edge::new(0, 1, 0), Edge::new(0, 2, 0)]
        );
        assert_eq!(closed.epsilon_closure(), closed);
    }

    #[test]
    fn word_parse_single_char_and_comma_forms() {
        let g = generators::star(2);
        assert_eq!(Word::parse("SD", &g).unwrap(), Word(vec![0, 1]));
        assert_eq!(Word::parse("S,D", &g).unwrap(), Word(vec![0, 1]));
        assert_eq!(Word::parse("", &g).unwrap(), Word(vec![]));
        assert!(Word::parse("SX", &g).is_err());

        let wf = generators::worst_case_family(4).unwrap();
        let w = Word::parse("A1,A1,B1,A2,B2", &wf).unwrap();
        assert_eq!(w.len(), 5);
        assert_eq!(w.display(&wf), "A1,A1,B1,A2,B2");
    }
}
