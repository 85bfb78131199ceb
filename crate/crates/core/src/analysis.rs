//! Observability deciders and minimal localization horizons.
//!
//! All operations expect a validated graph with no unobservable edges;
//! run the epsilon closure first when tracking a discrete event system.

use crate::graph::{ColorId, ColoredDigraph, NodeId};
use crate::pair::{build_pair_graph, PairGraph, PairKind};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("graph has unobservable edges; apply the epsilon closure first")]
    UnobservableEdges,
}

/// Why a check failed: either a cycle in a pair graph (two forever
/// indistinguishable walks) or a reachable node whose outgoing edges
/// repeat a color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    PairCycle {
        kind: PairKind,
        /// The cycle as ordered node pairs; entry `i` steps to entry
        /// `i + 1` (wrapping) under `colors[i]`.
        cycle: Vec<(NodeId, NodeId)>,
        colors: Vec<ColorId>,
    },
    ColorSplit {
        node: NodeId,
        color: ColorId,
        targets: (NodeId, NodeId),
    },
}

/// Combined verdicts with whichever witness applies and the minimal
/// horizons where defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservabilityReport {
    pub observable: bool,
    pub partly_observable: bool,
    pub partly_aposteriori: bool,
    pub witness: Option<Witness>,
    pub min_time: Option<usize>,
    pub min_partial_time: Option<usize>,
}

fn check_closed(graph: &ColoredDigraph) -> Result<(), AnalysisError> {
    if graph.unobservable_edges().is_empty() {
        Ok(())
    } else {
        Err(AnalysisError::UnobservableEdges)
    }
}

fn cycle_witness(pg: &PairGraph, raw_cycle: &[u32]) -> Witness {
    // report the shortest cycle through the smallest pair index on the
    // found cycle; any cycle is a valid witness, short ones read better
    let anchor = *raw_cycle.iter().min().expect("cycles are nonempty");
    let cycle = pg
        .shortest_cycle_through(anchor, None)
        .expect("anchor lies on a cycle");
    let colors = cycle
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let q = cycle[(i + 1) % cycle.len()];
            pg.edge_color(p, q).expect("consecutive cycle edge") as ColorId
        })
        .collect();
    Witness::PairCycle {
        kind: pg.kind(),
        cycle: cycle.iter().map(|&p| pg.components(p)).collect(),
        colors,
    }
}

/// Finds an asymptotically reachable node with two same-colored outgoing
/// edges (necessarily toward distinct targets, since duplicate triples
/// are invalid).
fn find_color_split(graph: &ColoredDigraph) -> Option<Witness> {
    let reachable = graph.asymptotically_reachable();
    let n = graph.node_count();
    let m = graph.color_count();
    let mut first: Vec<Option<NodeId>> = vec![None; n * m];
    let mut split: Option<Witness> = None;
    for e in graph.edges() {
        if !reachable.contains(e.from) {
            continue;
        }
        let slot = e.from * m + e.color;
        match first[slot] {
            None => first[slot] = Some(e.to),
            Some(other) if other != e.to => {
                let candidate = Witness::ColorSplit {
                    node: e.from,
                    color: e.color,
                    targets: (other.min(e.to), other.max(e.to)),
                };
                // keep the smallest (node, color) for determinism
                let better = match &split {
                    None => true,
                    Some(Witness::ColorSplit { node, color, .. }) => {
                        (e.from, e.color) < (*node, *color)
                    }
                    Some(_) => unreachable!(),
                };
                if better {
                    split = Some(candidate);
                }
            }
            Some(_) => {}
        }
    }
    split
}

/// A graph is observable iff some horizon makes every long observation
/// determine a unique end position. Holds iff the strict pair graph is
/// acyclic and no asymptotically reachable node has two outgoing edges
/// of one color; the witness reports whichever condition fails first.
pub fn is_observable(
    graph: &ColoredDigraph,
) -> Result<(bool, Option<Witness>), AnalysisError> {
    check_closed(graph)?;
    let pg = build_pair_graph(graph, PairKind::Strict);
    if let Err(cycle) = pg.topological_order(None) {
        return Ok((false, Some(cycle_witness(&pg, &cycle))));
    }
    if let Some(witness) = find_color_split(graph) {
        return Ok((false, Some(witness)));
    }
    Ok((true, None))
}

/// A graph is partly observable iff some horizon makes every long
/// observation localize the agent at some intermediate step. Holds iff
/// the relaxed pair graph is acyclic.
pub fn is_partly_observable(
    graph: &ColoredDigraph,
) -> Result<(bool, Option<Witness>), AnalysisError> {
    check_closed(graph)?;
    let pg = build_pair_graph(graph, PairKind::Relaxed);
    match pg.topological_order(None) {
        Ok(_) => Ok((true, None)),
        Err(cycle) => Ok((false, Some(cycle_witness(&pg, &cycle)))),
    }
}

/// The weaker a-posteriori notion: after any sufficiently long
/// observation some past position is determined. Decided as acyclicity
/// of the strict pair graph, the criterion the separated-cycles
/// condition induces; see the crate docs for the reading adopted here.
pub fn is_partly_aposteriori_observable(
    graph: &ColoredDigraph,
) -> Result<bool, AnalysisError> {
    check_closed(graph)?;
    let pg = build_pair_graph(graph, PairKind::Strict);
    Ok(pg.topological_order(None).is_ok())
}

/// Minimal `T` such that every observation of length `T` (hence any
/// longer one) pins the agent to at most one node; `None` when the graph
/// is not observable, `0` for graphs with at most one node.
///
/// Words of length `l` still allowing two end positions correspond
/// exactly to paths of `l` edges in the augmented pair graph that end at
/// an off-diagonal pair, so `T` is one more than the longest such path.
/// Only pair nodes that can reach an off-diagonal pair matter; that
/// restriction is acyclic for observable graphs, and a cycle in it would
/// contradict the observability verdict, so it is treated as a fatal
/// internal error.
pub fn min_observation_time(
    graph: &ColoredDigraph,
) -> Result<Option<usize>, AnalysisError> {
    if !is_observable(graph)?.0 {
        return Ok(None);
    }
    if graph.node_count() <= 1 {
        return Ok(Some(0));
    }
    let pg = build_pair_graph(graph, PairKind::Augmented);
    let active = pg.reaching_off_diagonal();
    if pg.topological_order(Some(&active)).is_err() {
        panic!(
            "internal invariant violation: cycle reaches an off-diagonal pair \
             in a graph judged observable"
        );
    }
    let n = graph.node_count();
    let longest = pg
        .longest_path_to(Some(&active), |p| {
            let (v1, v2) = ((p as usize) / n, (p as usize) % n);
            v1 != v2
        })
        .unwrap_or(0);
    Ok(Some(longest + 1))
}

/// Minimal `T` such that every observation of length `T` localizes the
/// agent at some step `1..=T`; `None` when the graph is not partly
/// observable, `0` for graphs with at most one node. One more than the
/// longest path in the (acyclic) relaxed pair graph.
pub fn min_partial_observation_time(
    graph: &ColoredDigraph,
) -> Result<Option<usize>, AnalysisError> {
    check_closed(graph)?;
    let pg = build_pair_graph(graph, PairKind::Relaxed);
    if pg.topological_order(None).is_err() {
        return Ok(None);
    }
    if graph.node_count() <= 1 {
        return Ok(Some(0));
    }
    let longest = pg.longest_path_to(None, |_| true).unwrap_or(0);
    Ok(Some(longest + 1))
}

/// Runs every decider once and assembles the full report. The witness is
/// the observability one (pair cycle or color split); min times are
/// present exactly when the corresponding verdict holds.
pub fn analyze(graph: &ColoredDigraph) -> Result<ObservabilityReport, AnalysisError> {
    let (observable, witness) = is_observable(graph)?;
    let (partly_observable, partial_witness) = is_partly_observable(graph)?;
    let partly_aposteriori = is_partly_aposteriori_observable(graph)?;
    let min_time = if observable {
        min_observation_time(graph)?
    } else {
        None
    };
    let min_partial_time = if partly_observable {
        min_partial_observation_time(graph)?
    } else {
        None
    };
    Ok(ObservabilityReport {
        observable,
        partly_observable,
        partly_aposteriori,
        witness: witness.or(partial_witness),
        min_time,
        min_partial_time,
    })
}
