//! The small named digraphs used in examples and tests.
//!
//! Vertex 0 plays the sink. In K3 the other two vertices are `U` and `V`,
//! in C3 they are `A` and `B`.

use crate::graph::Digraph;

pub const S: usize = 0;
pub const U: usize = 1;
pub const V: usize = 2;
pub const A: usize = 1;
pub const B: usize = 2;

/// Digon `0 <-> 1`.
pub fn d2() -> Digraph {
    Digraph::new(2, [(0, 1), (1, 0)]).unwrap()
}

/// Directed 3-cycle `0 -> 1 -> 2 -> 0`.
pub fn c3() -> Digraph {
    Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
}

/// Bidirected triangle on `{0, 1, 2}`.
pub fn k3() -> Digraph {
    Digraph::new(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]).unwrap()
}

/// Single arc `0 -> 1`.
pub fn p1() -> Digraph {
    Digraph::new(2, [(0, 1)]).unwrap()
}

/// Bidirected complete digraph on `n` vertices.
pub fn complete(n: usize) -> Digraph {
    let arcs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
    Digraph::new(n, arcs).unwrap()
}
