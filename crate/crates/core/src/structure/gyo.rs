use std::collections::BTreeSet;

use crate::model::{VertexId, WeightedHypergraph};

/// One GYO rule application. Edge ids index the input hypergraph's edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GyoStep {
    /// `vertex` lies in no other remaining edge and is deleted from `edge`.
    DeleteDegreeOneVertex {
        vertex: VertexId,
        edge: usize,
    },
    /// The remainder of `edge` is contained in the remainder of `into`.
    AbsorbSubsetEdge {
        edge: usize,
        into: usize,
    },
    DeleteEmptyEdge {
        edge: usize,
    },
}

/// A complete GYO reduction run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GyoTrace {
    steps: Vec<GyoStep>,
    residual: Vec<(usize, Vec<VertexId>)>,
    deletion_order: Vec<usize>,
}

impl GyoTrace {
    pub fn steps(&self) -> &[GyoStep] {
        &self.steps
    }

    /// Edges that survive, with their remaining vertices.
    pub fn residual(&self) -> &[(usize, Vec<VertexId>)] {
        &self.residual
    }

    /// Edge ids in the order they vanished (absorbed or emptied).
    pub fn deletion_order(&self) -> &[usize] {
        &self.deletion_order
    }

    pub fn is_empty_residual(&self) -> bool {
        self.residual.is_empty()
    }
}

/// The working state of a reduction: remaining vertex set per live edge.
#[derive(Debug, Clone)]
struct State {
    live: Vec<Option<BTreeSet<VertexId>>>,
}

impl State {
    fn new(h: &WeightedHypergraph) -> Self {
        State {
            live: h
                .edges()
                .iter()
                .map(|e| Some(e.vertices().iter().copied().collect()))
                .collect(),
        }
    }

    /// Every applicable step, in rule-priority order (rule 1, 2, 3; lowest ids first).
    fn applicable(&self) -> Vec<GyoStep> {
        let mut out = Vec::new();
        let mut holders: std::collections::BTreeMap<VertexId, Vec<usize>> = Default::default();
        for (i, e) in self.live.iter().enumerate() {
            for &v in e.iter().flatten() {
                holders.entry(v).or_default().push(i);
            }
        }
        for (&vertex, edges) in &holders {
            if let [edge] = edges[..] {
                out.push(GyoStep::DeleteDegreeOneVertex { vertex, edge });
            }
        }
        for (i, a) in self.live.iter().enumerate() {
            let Some(a) = a else { continue };
            if a.is_empty() {
                continue;
            }
            if let Some(into) = self
                .live
                .iter()
                .enumerate()
                .find(|(j, b)| *j != i && b.as_ref().is_some_and(|b| a.is_subset(b)))
                .map(|(j, _)| j)
            {
                out.push(GyoStep::AbsorbSubsetEdge { edge: i, into });
            }
        }
        for (i, a) in self.live.iter().enumerate() {
            if a.as_ref().is_some_and(BTreeSet::is_empty) {
                out.push(GyoStep::DeleteEmptyEdge { edge: i });
            }
        }
        out
    }

    /// Applies `step`, returning the edge that vanished, if any.
    fn apply(&mut self, step: GyoStep) -> Option<usize> {
        match step {
            GyoStep::DeleteDegreeOneVertex { vertex, edge } => {
                self.live[edge].as_mut().expect("live edge").remove(&vertex);
                None
            }
            GyoStep::AbsorbSubsetEdge { edge, .. } | GyoStep::DeleteEmptyEdge { edge } => {
                self.live[edge] = None;
                Some(edge)
            }
        }
    }
}

/// Runs the GYO reduction, always applying the first applicable step in
/// priority order: degree-one vertex deletions, then subset absorptions, then
/// empty-edge deletions, lowest vertex/edge id first.
pub fn gyo_reduce(h: &WeightedHypergraph) -> GyoTrace {
    gyo_reduce_by(h, |_| 0)
}

/// Runs the GYO reduction with `choose` picking among the applicable steps
/// (given in priority order) at each turn. The emptiness of the residual
/// does not depend on the choices.
pub fn gyo_reduce_by(
    h: &WeightedHypergraph,
    mut choose: impl FnMut(&[GyoStep]) -> usize,
) -> GyoTrace {
    let mut state = State::new(h);
    let mut steps = Vec::new();
    let mut deletion_order = Vec::new();
    loop {
        let options = state.applicable();
        if options.is_empty() {
            break;
        }
        let step = options[choose(&options).min(options.len() - 1)];
        if let Some(e) = state.apply(step) {
            deletion_order.push(e);
        }
        steps.push(step);
    }
    let residual = state
        .live
        .into_iter()
        .enumerate()
        .filter_map(|(i, e)| e.map(|e| (i, e.into_iter().collect())))
        .collect();
    GyoTrace {
        steps,
        residual,
        deletion_order,
    }
}

/// Replays `steps` on `h` and returns the residual, or `None` if some step
/// was not applicable when its turn came.
pub fn replay_gyo(
    h: &WeightedHypergraph,
    steps: &[GyoStep],
) -> Option<Vec<(usize, Vec<VertexId>)>> {
    let mut state = State::new(h);
    for &step in steps {
        let ok = match step {
            GyoStep::DeleteDegreeOneVertex { vertex, edge } => {
                let holders = state
                    .live
                    .iter()
                    .filter(|e| e.as_ref().is_some_and(|e| e.contains(&vertex)))
                    .count();
                holders == 1
                    && state.live[edge]
                        .as_ref()
                        .is_some_and(|e| e.contains(&vertex))
            }
            GyoStep::AbsorbSubsetEdge { edge, into } => {
                edge != into
                    && match (&state.live[edge], &state.live[into]) {
                        (Some(a), Some(b)) => a.is_subset(b),
                        _ => false,
                    }
            }
            GyoStep::DeleteEmptyEdge { edge } => {
                state.live[edge].as_ref().is_some_and(BTreeSet::is_empty)
            }
        };
        if !ok {
            return None;
        }
        state.apply(step);
    }
    Some(
        state
            .live
            .into_iter()
            .enumerate()
            .filter_map(|(i, e)| e.map(|e| (i, e.into_iter().collect())))
            .collect(),
    )
}

pub fn is_alpha_acyclic(h: &WeightedHypergraph) -> bool {
    gyo_reduce(h).is_empty_residual()
}
