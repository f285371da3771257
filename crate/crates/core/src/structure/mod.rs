//! Classification of weighted hypergraphs: GYO reduction, conformality, and
//! the cycle shapes with dedicated constructions.

mod conformal;
mod cycles;
mod gyo;

pub use conformal::{is_conformal, two_section, SimpleGraph, MAX_CONFORMAL_VERTICES};
pub use cycles::{
    recognize_five_vertex_cycle, recognize_loose_cycle, FiveVertexCycle, FiveVertexCycleConditions,
    LooseCycle,
};
pub use gyo::{gyo_reduce, gyo_reduce_by, is_alpha_acyclic, replay_gyo, GyoStep, GyoTrace};

use crate::error::{precondition, Result};
use crate::model::{VertexId, WeightedHypergraph};

/// `K_k^r` on vertices `1..=k`, vertex `i` weighted `weights[i - 1]`.
pub fn complete_uniform(k: usize, r: usize, weights: &[u32]) -> Result<WeightedHypergraph> {
    if !(2..=3).contains(&r) {
        return precondition(format!("edge size {r} is not supported"));
    }
    if weights.len() != k {
        return precondition(format!("{} weights given for {k} vertices", weights.len()));
    }
    let ids: Vec<VertexId> = (1..=k as VertexId).collect();
    let mut edges = Vec::new();
    for (i, &a) in ids.iter().enumerate() {
        for (j, &b) in ids.iter().enumerate().skip(i + 1) {
            if r == 2 {
                edges.push(vec![a, b]);
            } else {
                edges.extend(ids[j + 1..].iter().map(|&c| vec![a, b, c]));
            }
        }
    }
    WeightedHypergraph::new(ids.into_iter().zip(weights.iter().copied()), edges)
}
