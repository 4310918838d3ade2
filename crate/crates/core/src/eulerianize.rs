//! Degree-balancing lift of an arbitrary digraph to an Eulerian one.
//!
//! Every vertex `v` with `outdeg(v) > indeg(v)` gets `outdeg - indeg` fresh
//! midpoints `w` with arcs `hub -> w -> v`; every vertex with a deficit of
//! out-arcs gets midpoints with arcs `v -> w -> hub`. With `d` the total
//! surplus, the lift adds `2d + 1` vertices and `4d` arcs, and its maximum
//! acyclic arc set is exactly `3d` larger than the original's.

use serde::Serialize;

use crate::acyclic::{min_fas_heuristic, stretch_to_fixpoint, HeuristicSolution};
use crate::error::{Error, Result};
use crate::graph::{ArcSet, Digraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianizedInstance {
    pub original: Digraph,
    pub lifted: Digraph,
    /// The hub vertex; absent when the original was already Eulerian.
    pub hub: Option<usize>,
    /// Total out-degree surplus over all vertices.
    pub d: usize,
    /// Lifted id of each original vertex (the identity).
    pub vertex_map: Vec<usize>,
}

/// Builds the lift. Original vertices keep their ids, the hub is `n`, and
/// midpoints follow from `n + 1` in ascending `(vertex, copy)` order.
/// Disconnected inputs share the one hub.
pub fn eulerianize(g: &Digraph) -> EulerianizedInstance {
    let n = g.n();
    let vertex_map = (0..n).collect();
    if g.is_eulerian() {
        return EulerianizedInstance {
            original: g.clone(),
            lifted: g.clone(),
            hub: None,
            d: 0,
            vertex_map,
        };
    }
    let hub = n;
    let mut next = n + 1;
    let mut arcs: Vec<(usize, usize)> = g.arcs().to_vec();
    let mut d = 0;
    for v in 0..n {
        let (indeg, outdeg) = (g.indeg(v), g.outdeg(v));
        if indeg < outdeg {
            d += outdeg - indeg;
            for _ in 0..outdeg - indeg {
                arcs.push((hub, next));
                arcs.push((next, v));
                next += 1;
            }
        } else if outdeg < indeg {
            for _ in 0..indeg - outdeg {
                arcs.push((v, next));
                arcs.push((next, hub));
                next += 1;
            }
        }
    }
    let lifted = Digraph::new(next, arcs).expect("lift is a simple digraph");
    EulerianizedInstance {
        original: g.clone(),
        lifted,
        hub: Some(hub),
        d,
        vertex_map,
    }
}

/// Minimum feedback arc set size of the original from the lifted optimum
/// `b`: `b + 3d + |E| - |E'|`.
pub fn recover_minfas(inst: &EulerianizedInstance, b: usize) -> Result<usize> {
    (b + 3 * inst.d + inst.original.arc_count())
        .checked_sub(inst.lifted.arc_count())
        .ok_or_else(|| {
            Error::Precondition(format!(
                "{b} is below the smallest possible feedback arc set of the lift"
            ))
        })
}

/// The arithmetic converting an optimum of the lift back to the original.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionCertificate {
    pub d: usize,
    pub hub: Option<usize>,
    pub original_vertices: usize,
    pub original_arcs: usize,
    pub lifted_vertices: usize,
    pub lifted_arcs: usize,
    /// Minimum feedback arc set size of the lift.
    pub lifted_optimum: usize,
    /// `lifted_optimum + 3d + original_arcs - lifted_arcs`.
    pub recovered_optimum: usize,
}

pub fn certify(inst: &EulerianizedInstance, b: usize) -> Result<ReductionCertificate> {
    Ok(ReductionCertificate {
        d: inst.d,
        hub: inst.hub,
        original_vertices: inst.original.n(),
        original_arcs: inst.original.arc_count(),
        lifted_vertices: inst.lifted.n(),
        lifted_arcs: inst.lifted.arc_count(),
        lifted_optimum: b,
        recovered_optimum: recover_minfas(inst, b)?,
    })
}

/// Maps an acyclic arc set of the lift to one of the original.
///
/// The set is first stretched at the hub until it has no arc into the hub,
/// which never shrinks it; then the added arcs are dropped. A maximum
/// acyclic set of the lift maps to a maximum acyclic set of the original.
pub fn lower_acyclic_witness(inst: &EulerianizedInstance, lifted: &ArcSet) -> Result<ArcSet> {
    let g = &inst.lifted;
    g.check_arc_set(lifted)?;
    if g.is_acyclic_set(lifted)?.is_none() {
        return Err(Error::NotAcyclic);
    }
    let stretched = match inst.hub {
        Some(hub) => stretch_to_fixpoint(g, lifted, hub).0,
        None => lifted.clone(),
    };
    let n = inst.original.n();
    let kept = g
        .pairs(&stretched)
        .into_iter()
        .filter(|&(u, v)| u < n && v < n);
    inst.original.arc_set(kept)
}

/// Maps a feedback arc set of the lift to one of the original; optimal
/// inputs map to optimal outputs.
pub fn recover_fas_witness(inst: &EulerianizedInstance, lifted_fas: &ArcSet) -> Result<ArcSet> {
    inst.lifted.check_arc_set(lifted_fas)?;
    Ok(lower_acyclic_witness(inst, &lifted_fas.complement())?.complement())
}

/// Heuristic feedback arc set for digraphs that need not be Eulerian: the
/// heuristic runs on the lift and its acyclic set is lowered. The lowered
/// set loses at most `3d` arcs, so the bound never exceeds
/// `recover_minfas` of the lifted bound. `root` is a vertex of the lift.
pub fn min_fas_heuristic_lifted(g: &Digraph) -> Result<HeuristicSolution> {
    let inst = eulerianize(g);
    let lifted = min_fas_heuristic(&inst.lifted)?;
    let acyclic = lower_acyclic_witness(&inst, &lifted.witness.complement())?;
    let witness = acyclic.complement();
    let bound = recover_minfas(&inst, lifted.upper_bound)?;
    if witness.len() > bound {
        return Err(Error::InvariantViolation(format!(
            "lowered witness has {} arcs, bound is {bound}",
            witness.len()
        )));
    }
    Ok(HeuristicSolution {
        upper_bound: witness.len(),
        witness,
        root: lifted.root,
    })
}
