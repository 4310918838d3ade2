//! Feedback arc sets of Eulerian digraphs and their link to minimum
//! recurrent configurations of the chip-firing game.
//!
//! The pieces: [`graph`] for digraphs and arc sets, [`acyclic`] for rooted
//! acyclic arc sets and exact and heuristic solvers, [`eulerianize`] for
//! the lift of an arbitrary digraph to an Eulerian one, [`chipfire`] for
//! the game itself and [`recurrence`] for recurrent configurations.

pub mod acyclic;
pub mod chipfire;
pub mod error;
pub mod eulerianize;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod graph;
pub mod recurrence;

pub use acyclic::{
    count_chi, cut_stretch, max_acyclic_exact, maximal_rooted_sets, min_fas_exact,
    min_fas_heuristic, rootify, HeuristicSolution, RootedAcyclicSet, Solution,
};
pub use chipfire::{fire, stabilize, stabilize_with, Configuration, FiringPolicy, Odometer};
pub use error::{Error, Result};
pub use eulerianize::{certify, eulerianize, recover_minfas, EulerianizedInstance, ReductionCertificate};
pub use graph::{Arc, ArcSet, Digraph, VertexSet};
pub use recurrence::{is_recurrent, minrec_exact, MinRec};
