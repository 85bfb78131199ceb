//! Hardness-reduction instance builders.
//!
//! Both constructions take an undirected source graph and emit an
//! uncolored directed graph together with a role map, so that the design
//! solvers (and the recipe colorings below) can be exercised on instances
//! whose feasibility is known from the source graph.

use crate::graph::{ColoredDigraph, Edge, NodeId, UncoloredDigraph};

use super::GenError;

/// Undirected reduction source. Edges are stored normalized (`u < v`)
/// and sorted; self-loops and duplicates are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GenError> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(GenError::InvalidParameter(format!(
                    "self-loop on node {u} in undirected graph"
                )));
            }
            if u >= n || v >= n {
                return Err(GenError::InvalidParameter(format!(
                    "edge ({u}, {v}) leaves the node range 0..{n}"
                )));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        let before = normalized.len();
        normalized.dedup();
        if normalized.len() != before {
            return Err(GenError::InvalidParameter(
                "duplicate edge in undirected graph".to_string(),
            ));
        }
        Ok(UndirectedGraph {
            n,
            edges: normalized,
        })
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        UndirectedGraph { n, edges }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 nodes");
        let edges = (0..n).map(|i| {
            let j = (i + 1) % n;
            (i.min(j), i.max(j))
        });
        Self::new(n, &edges.collect::<Vec<_>>()).expect("cycle edges are simple")
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Edges in the frozen reduction order `e1..es`: sorted normalized
    /// endpoint pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    /// Triangles as sorted node triples, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.has_edge(i, j) {
                    continue;
                }
                for k in j + 1..self.n {
                    if self.has_edge(i, k) && self.has_edge(j, k) {
                        out.push([i, j, k]);
                    }
                }
            }
        }
        out
    }

    fn edge_index(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search(&key)
            .expect("edge_index on missing edge")
    }

    /// Checks a proper node coloring (adjacent nodes differ).
    pub fn is_proper_coloring(&self, coloring: &[usize]) -> bool {
        coloring.len() == self.n
            && self.edges.iter().all(|&(u, v)| coloring[u] != coloring[v])
    }

    /// Checks a triangle coloring (no triangle has all edges equal).
    pub fn is_triangle_coloring(&self, edge_colors: &[u8]) -> bool {
        edge_colors.len() == self.edges.len()
            && self.triangles().iter().all(|t| {
                let q = edge_colors[self.edge_index(t[0], t[1])];
                let r = edge_colors[self.edge_index(t[0], t[2])];
                let s = edge_colors[self.edge_index(t[1], t[2])];
                !(q == r && r == s)
            })
    }
}

/// What a node of a reduction output stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Copy of a source-graph node.
    Real,
    /// Fan-out node pointing at the two endpoints of one source edge.
    EdgeSelector,
    /// Chain node feeding one selector and the next chain node.
    ChainNode,
    /// Two-node tail hung off every real node, returning to the chain head.
    Tail,
    /// Endpoint of a detached directed edge standing for one source edge.
    RealEdge,
    /// Tree leaf standing for one source triangle.
    TriangleLeaf,
    /// Internal binary-tree node.
    TreeInternal,
    /// Node of the shared return path from real-edge sinks to tree roots.
    Connector,
}

impl Role {
    pub fn as_str(&self) -> &'static str {
        match self {
            Role::Real => "real",
            Role::EdgeSelector => "edge-selector",
            Role::ChainNode => "chain",
            Role::Tail => "tail",
            Role::RealEdge => "real-edge",
            Role::TriangleLeaf => "triangle-leaf",
            Role::TreeInternal => "tree-internal",
            Role::Connector => "connector",
        }
    }
}

/// Size bookkeeping for a reduction output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionMeta {
    /// Number of edges in the source graph.
    pub source_edges: usize,
    /// Number of triangles in the source graph (zero for the node
    /// reduction, which does not use them).
    pub triangle_count: usize,
    /// Depth of each leaf tree: ceil(log2(triangle_count)).
    pub tree_depth: usize,
    /// Number of tree copies (2 * triangle_count + 1).
    pub copies: usize,
}

#[derive(Debug, Clone)]
pub struct ReductionArtifact {
    pub output: UncoloredDigraph,
    /// Role of every output node, indexed by node id.
    pub roles: Vec<Role>,
    pub meta: ReductionMeta,
    layout: Layout,
}

#[derive(Debug, Clone)]
enum Layout {
    ThreeColorability(ThreeColLayout),
    MonochromaticTriangle(TriangleLayout),
}

#[derive(Debug, Clone)]
struct ThreeColLayout {
    source_edges: Vec<(usize, usize)>,
    real: Vec<NodeId>,
    selectors: Vec<NodeId>,
    chain: Vec<NodeId>,
}

#[derive(Debug, Clone)]
struct TriangleLayout {
    source: UndirectedGraph,
    /// Edge indices `(q, r, s)` of each triangle, ascending.
    triangles: Vec<[usize; 3]>,
    /// `(source, sink)` node pair of the detached edge for each source edge.
    real_edges: Vec<(NodeId, NodeId)>,
    copies: Vec<TreeCopy>,
    /// Connector levels 1..=N+3, three nodes each.
    levels: Vec<[NodeId; 3]>,
}

#[derive(Debug, Clone)]
struct TreeCopy {
    root: NodeId,
    /// Leaf node per triangle index.
    leaves: Vec<NodeId>,
    /// `(parent, child, bit)` with bit 0 for the left child edge.
    tree_edges: Vec<(NodeId, NodeId, u8)>,
}

impl ReductionArtifact {
    /// Roles keyed by node label, for the sidecar JSON emitted by the CLI.
    pub fn roles_by_label(&self) -> Vec<(String, &'static str)> {
        self.roles
            .iter()
            .enumerate()
            .map(|(v, role)| (self.output.node_label(v).to_string(), role.as_str()))
            .collect()
    }
}

/// Builds the directed instance whose 3-node-colorability for
/// observability matches 3-colorability of the source: one real node per
/// source node, a selector with edges to both endpoints per source edge,
/// a chain threading the selectors, and a two-node tail from every real
/// node back to the chain head. The output is strongly connected whenever
/// the source is connected and has an edge.
pub fn reduce_three_colorability(
    g: &UndirectedGraph,
) -> Result<ReductionArtifact, GenError> {
    let n = g.node_count();
    let s = g.edges().len();
    if s == 0 {
        return Err(GenError::EdgelessSource);
    }

    let mut labels = Vec::with_capacity(3 * n + 2 * s);
    let mut roles = Vec::with_capacity(3 * n + 2 * s);
    let real: Vec<NodeId> = (0..n).collect();
    for v in 0..n {
        labels.push(format!("v{v}"));
        roles.push(Role::Real);
    }
    let selectors: Vec<NodeId> = (n..n + s).collect();
    for j in 1..=s {
        labels.push(format!("e{j}s"));
        roles.push(Role::EdgeSelector);
    }
    let chain: Vec<NodeId> = (n + s..n + 2 * s).collect();
    for j in 1..=s {
        labels.push(format!("e{j}c"));
        roles.push(Role::ChainNode);
    }
    let mut tails = Vec::with_capacity(n);
    for v in 0..n {
        let a = labels.len();
        labels.push(format!("v{v}t1"));
        roles.push(Role::Tail);
        labels.push(format!("v{v}t2"));
        roles.push(Role::Tail);
        tails.push((a, a + 1));
    }

    let mut edges = Vec::with_capacity(3 * s + (s - 1) + 3 * n);
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((selectors[j], real[u]));
        edges.push((selectors[j], real[v]));
    }
    for j in 0..s {
        edges.push((chain[j], selectors[j]));
    }
    for j in 0..s - 1 {
        edges.push((chain[j], chain[j + 1]));
    }
    for v in 0..n {
        let (t1, t2) = tails[v];
        edges.push((real[v], t1));
        edges.push((t1, t2));
        edges.push((t2, chain[0]));
    }

    Ok(ReductionArtifact {
        output: UncoloredDigraph::from_parts(labels, edges),
        roles,
        meta: ReductionMeta {
            source_edges: s,
            triangle_count: 0,
            tree_depth: 0,
            copies: 0,
        },
        layout: Layout::ThreeColorability(ThreeColLayout {
            source_edges: g.edges().to_vec(),
            real,
            selectors,
            chain,
        }),
    })
}

/// Applies the node-coloring recipe to a 3-colorability reduction: real
/// nodes take the source coloring, selectors are blue, chain nodes red
/// and tail nodes green; every node's color is assigned to its incoming
/// edges. With a proper source 3-coloring the result passes the
/// observability checker.
pub fn apply_node_coloring_recipe(
    artifact: &ReductionArtifact,
    coloring: &[usize],
) -> Result<ColoredDigraph, GenError> {
    let Layout::ThreeColorability(layout) = &artifact.layout else {
        return Err(GenError::InvalidParameter(
            "node-coloring recipe applies to 3-colorability artifacts".to_string(),
        ));
    };
    if coloring.len() != layout.real.len() {
        return Err(GenError::InvalidColoring(format!(
            "expected {} node colors, got {}",
            layout.real.len(),
            coloring.len()
        )));
    }
    if coloring.iter().any(|&c| c >= 3) {
        return Err(GenError::InvalidColoring(
            "recipe uses exactly three colors".to_string(),
        ));
    }
    if let Some(&(u, v)) = layout
        .source_edges
        .iter()
        .find(|&&(u, v)| coloring[u] == coloring[v])
    {
        return Err(GenError::InvalidColoring(format!(
            "source nodes {u} and {v} are adjacent but share a color"
        )));
    }

    const RED: usize = 0;
    const BLUE: usize = 1;
    const GREEN: usize = 2;
    let mut node_color = vec![GREEN; artifact.output.node_count()];
    for (v, &node) in layout.real.iter().enumerate() {
        node_color[node] = coloring[v];
    }
    for &node in &layout.selectors {
        node_color[node] = BLUE;
    }
    for &node in &layout.chain {
        node_color[node] = RED;
    }

    let edges = artifact
        .output
        .edges()
        .iter()
        .map(|&(from, to)| Edge::new(from, to, node_color[to]))
        .collect();
    Ok(ColoredDigraph::from_parts(
        artifact.output.node_labels().to_vec(),
        vec!["R".to_string(), "B".to_string(), "G".to_string()],
        edges,
        Vec::new(),
    ))
}

/// Builds the directed instance whose 2-edge-colorability for partial
/// observability matches triangle-colorability of the source: one
/// detached directed edge per source edge, `2S + 1` binary-tree copies
/// whose leaves point at the three edges of their triangle, and a shared
/// three-wide connector of `N + 3` levels returning every real-edge sink
/// to the tree roots.
pub fn reduce_monochromatic_triangle(
    g: &UndirectedGraph,
) -> Result<ReductionArtifact, GenError> {
    let s = g.edges().len();
    let triangles_nodes = g.triangles();
    let triangle_count = triangles_nodes.len();
    if triangle_count == 0 {
        return Err(GenError::TriangleFreeSource);
    }
    let depth = triangle_count.next_power_of_two().trailing_zeros() as usize;
    let copies_count = 2 * triangle_count + 1;

    let triangles: Vec<[usize; 3]> = triangles_nodes
        .iter()
        .map(|t| {
            let mut e = [
                g.edge_index(t[0], t[1]),
                g.edge_index(t[0], t[2]),
                g.edge_index(t[1], t[2]),
            ];
            e.sort_unstable();
            e
        })
        .collect();

    let mut labels = Vec::new();
    let mut roles = Vec::new();
    let mut real_edges = Vec::with_capacity(s);
    for j in 1..=s {
        let a = labels.len();
        labels.push(format!("E{j}a"));
        roles.push(Role::RealEdge);
        labels.push(format!("E{j}b"));
        roles.push(Role::RealEdge);
        real_edges.push((a, a + 1));
    }

    let mut edges: Vec<(NodeId, NodeId)> = real_edges.to_vec();

    let mut copies = Vec::with_capacity(copies_count);
    for k in 0..copies_count {
        let copy = build_tree_copy(
            k,
            triangle_count,
            &mut labels,
            &mut roles,
            &mut edges,
        );
        for (i, &leaf) in copy.leaves.iter().enumerate() {
            for &edge_idx in &triangles[i] {
                edges.push((leaf, real_edges[edge_idx].0));
            }
        }
        copies.push(copy);
    }

    let mut levels = Vec::with_capacity(depth + 3);
    for lvl in 1..=depth + 3 {
        let base = labels.len();
        for pos in 0..3 {
            labels.push(format!("L{lvl}.{pos}"));
            roles.push(Role::Connector);
        }
        levels.push([base, base + 1, base + 2]);
    }
    for (j, &(_, sink)) in real_edges.iter().enumerate() {
        edges.push((sink, levels[0][j % 3]));
    }
    for w in levels.windows(2) {
        for &from in &w[0] {
            for &to in &w[1] {
                edges.push((from, to));
            }
        }
    }
    let last = levels[levels.len() - 1];
    for (k, copy) in copies.iter().enumerate() {
        edges.push((last[k % 3], copy.root));
    }

    Ok(ReductionArtifact {
        output: UncoloredDigraph::from_parts(labels, edges),
        roles,
        meta: ReductionMeta {
            source_edges: s,
            triangle_count,
            tree_depth: depth,
            copies: copies_count,
        },
        layout: Layout::MonochromaticTriangle(TriangleLayout {
            source: g.clone(),
            triangles,
            real_edges,
            copies,
            levels,
        }),
    })
}

/// Builds one left-complete binary tree with `leaf_count` leaves, wiring
/// edges from the root toward the leaves. Trees with a non-power-of-two
/// leaf count keep depth `ceil(log2(leaf_count))`; single-child nodes are
/// contracted away by splitting `2^(d-1)` leaves to the left.
fn build_tree_copy(
    copy_idx: usize,
    leaf_count: usize,
    labels: &mut Vec<String>,
    roles: &mut Vec<Role>,
    edges: &mut Vec<(NodeId, NodeId)>,
) -> TreeCopy {
    let mut leaves = vec![0usize; leaf_count];
    let mut tree_edges = Vec::new();
    let mut internal_counter = 0usize;

    struct Builder<'a> {
        copy_idx: usize,
        labels: &'a mut Vec<String>,
        roles: &'a mut Vec<Role>,
        edges: &'a mut Vec<(NodeId, NodeId)>,
        leaves: &'a mut Vec<usize>,
        tree_edges: &'a mut Vec<(NodeId, NodeId, u8)>,
        internal_counter: &'a mut usize,
    }

    fn build(b: &mut Builder, first_leaf: usize, count: usize) -> NodeId {
        if count == 1 {
            let id = b.labels.len();
            b.labels.push(format!("T{}.{}", b.copy_idx, first_leaf + 1));
            b.roles.push(Role::TriangleLeaf);
            b.leaves[first_leaf] = id;
            return id;
        }
        let id = b.labels.len();
        b.labels.push(format!("N{}.{}", b.copy_idx, b.internal_counter));
        *b.internal_counter += 1;
        b.roles.push(Role::TreeInternal);
        let depth = count.next_power_of_two().trailing_zeros() as usize;
        let left_count = (1usize << (depth - 1)).min(count - 1);
        let left = build(b, first_leaf, left_count);
        b.edges.push((id, left));
        b.tree_edges.push((id, left, 0));
        let right = build(b, first_leaf + left_count, count - left_count);
        b.edges.push((id, right));
        b.tree_edges.push((id, right, 1));
        id
    }

    let root = build(
        &mut Builder {
            copy_idx,
            labels,
            roles,
            edges,
            leaves: &mut leaves,
            tree_edges: &mut tree_edges,
            internal_counter: &mut internal_counter,
        },
        0,
        leaf_count,
    );

    TreeCopy {
        root,
        leaves,
        tree_edges,
    }
}

/// Applies the edge-coloring recipe to a monochromatic-triangle
/// reduction: real edges take the source coloring, every root-to-leaf
/// tree path spells a distinct color sequence, each triangle leaf gives
/// opposite colors to its two edges reaching equally colored real edges,
/// real-edge exits and root entries are `S`, and the remaining connector
/// edges are `D`. With a valid source triangle coloring the result passes
/// the partial-observability checker.
pub fn apply_triangle_coloring_recipe(
    artifact: &ReductionArtifact,
    edge_colors: &[u8],
) -> Result<ColoredDigraph, GenError> {
    let Layout::MonochromaticTriangle(layout) = &artifact.layout else {
        return Err(GenError::InvalidParameter(
            "triangle-coloring recipe applies to monochromatic-triangle artifacts".to_string(),
        ));
    };
    if edge_colors.len() != layout.real_edges.len() {
        return Err(GenError::InvalidColoring(format!(
            "expected {} edge colors, got {}",
            layout.real_edges.len(),
            edge_colors.len()
        )));
    }
    if edge_colors.iter().any(|&c| c > 1) {
        return Err(GenError::InvalidColoring(
            "recipe uses exactly two colors".to_string(),
        ));
    }
    if !layout.source.is_triangle_coloring(edge_colors) {
        return Err(GenError::InvalidColoring(
            "some source triangle is monochromatic".to_string(),
        ));
    }

    const S: usize = 0;
    const D: usize = 1;
    let mut color_of: std::collections::HashMap<(NodeId, NodeId), usize> =
        std::collections::HashMap::new();

    for (j, &(a, b)) in layout.real_edges.iter().enumerate() {
        color_of.insert((a, b), edge_colors[j] as usize);
    }
    for copy in &layout.copies {
        for &(parent, child, bit) in &copy.tree_edges {
            color_of.insert((parent, child), bit as usize);
        }
        for (i, &leaf) in copy.leaves.iter().enumerate() {
            let [q, r, s] = layout.triangles[i];
            // the two edges reaching equally colored real edges get
            // opposite colors; the remaining edge defaults to S
            let (first, second, third) = if edge_colors[q] == edge_colors[r] {
                (q, r, s)
            } else if edge_colors[q] == edge_colors[s] {
                (q, s, r)
            } else {
                (r, s, q)
            };
            color_of.insert((leaf, layout.real_edges[first].0), S);
            color_of.insert((leaf, layout.real_edges[second].0), D);
            color_of.insert((leaf, layout.real_edges[third].0), S);
        }
    }
    for &(_, sink) in &layout.real_edges {
        let entry = layout.levels[0];
        for &to in &entry {
            color_of.entry((sink, to)).or_insert(S);
        }
    }
    for w in layout.levels.windows(2) {
        for &from in &w[0] {
            for &to in &w[1] {
                color_of.insert((from, to), D);
            }
        }
    }
    let last = layout.levels[layout.levels.len() - 1];
    for copy in &layout.copies {
        for &from in &last {
            color_of.entry((from, copy.root)).or_insert(S);
        }
    }

    let edges = artifact
        .output
        .edges()
        .iter()
        .map(|&(from, to)| {
            let c = *color_of
                .get(&(from, to))
                .expect("recipe covers every reduction edge");
            Edge::new(from, to, c)
        })
        .collect();
    Ok(ColoredDigraph::from_parts(
        artifact.output.node_labels().to_vec(),
        vec!["S".to_string(), "D".to_string()],
        edges,
        Vec::new(),
    ))
}
