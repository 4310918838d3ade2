//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Digraph;

const MAX_ATTEMPTS: usize = 10_000;

/// Uniformly random simple digraph with `n` vertices and `m` arcs.
pub fn random_digraph<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Result<Digraph> {
    let max = n * n.saturating_sub(1);
    if m > max {
        return Err(Error::Infeasible(format!(
            "{m} arcs requested, a simple digraph on {n} vertices has at most {max}"
        )));
    }
    let mut all: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    all.shuffle(rng);
    all.truncate(m);
    Digraph::new(n, all)
}

/// Default arc count for Eulerian generation: `2n`, clamped to the
/// number of simple arcs.
pub fn default_eulerian_arcs(n: usize) -> usize {
    (2 * n).min(n * n.saturating_sub(1))
}

/// Random strongly connected Eulerian digraph with exactly `m` arcs, built
/// by superposing random directed cycles whose arcs are all new.
pub fn random_eulerian<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Result<Digraph> {
    let max = n * n.saturating_sub(1);
    if m > max {
        return Err(Error::Infeasible(format!(
            "{m} arcs requested, a simple digraph on {n} vertices has at most {max}"
        )));
    }
    if n > 1 && m < n {
        return Err(Error::Infeasible(format!(
            "a strongly connected digraph on {n} vertices needs at least {n} arcs"
        )));
    }
    if n <= 1 {
        return Digraph::new(n, []);
    }
    for _ in 0..MAX_ATTEMPTS {
        if let Some(g) = try_cycles(rng, n, m) {
            if g.is_strongly_connected() && g.is_eulerian() {
                return Ok(g);
            }
        }
    }
    Err(Error::Infeasible(format!(
        "no strongly connected Eulerian digraph with n = {n}, m = {m} found"
    )))
}

fn try_cycles<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Option<Digraph> {
    let mut present = vec![vec![false; n]; n];
    let mut arcs = Vec::with_capacity(m);
    let mut stalls = 0;
    let vertices: Vec<usize> = (0..n).collect();
    while arcs.len() < m {
        let left = m - arcs.len();
        let longest = n.min(left);
        // A leftover of one arc can never be closed into a cycle.
        let lengths: Vec<usize> = (2..=longest).filter(|&l| left - l != 1).collect();
        let &len = lengths.choose(rng)?;
        let cycle: Vec<usize> = vertices.choose_multiple(rng, len).copied().collect();
        let cycle_arcs: Vec<(usize, usize)> =
            (0..len).map(|i| (cycle[i], cycle[(i + 1) % len])).collect();
        if cycle_arcs.iter().any(|&(u, v)| present[u][v]) {
            stalls += 1;
            if stalls > 200 {
                return None;
            }
            continue;
        }
        for &(u, v) in &cycle_arcs {
            present[u][v] = true;
        }
        arcs.extend(cycle_arcs);
    }
    Digraph::new(n, arcs).ok()
}

/// Random digraph in which `sink` is a global sink: random arcs, the
/// sink's out-arcs dropped, then one arc added from every vertex that
/// cannot reach the sink towards one that can.
pub fn random_global_sink<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    m: usize,
    sink: usize,
) -> Result<Digraph> {
    if sink >= n {
        return Err(Error::VertexOutOfRange { vertex: sink, n });
    }
    let base = random_digraph(rng, n, m)?;
    let mut arcs: Vec<(usize, usize)> = base.arcs().iter().copied().filter(|&(u, _)| u != sink).collect();
    loop {
        let g = Digraph::new(n, arcs.clone())?;
        let reaching = g.reaching(sink);
        let Some(stuck) = (0..n).find(|&v| !reaching.contains(v)) else {
            return Ok(g);
        };
        let targets: Vec<usize> = reaching.iter().collect();
        let &t = targets.choose(rng).expect("sink reaches itself");
        arcs.push((stuck, t));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn eulerian_generation_is_deterministic() {
        let a = random_eulerian(&mut ChaCha8Rng::seed_from_u64(7), 5, 12).unwrap();
        let b = random_eulerian(&mut ChaCha8Rng::seed_from_u64(7), 5, 12).unwrap();
        assert_eq!(a, b);
        assert!(a.is_eulerian() && a.is_strongly_connected());
        assert_eq!(a.arc_count(), 12);
    }

    #[test]
    fn infeasible_requests() {
        let rng = &mut ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(random_eulerian(rng, 2, 3), Err(Error::Infeasible(_))));
        assert!(matches!(random_eulerian(rng, 4, 3), Err(Error::Infeasible(_))));
        assert!(matches!(random_digraph(rng, 3, 7), Err(Error::Infeasible(_))));
    }

    #[test]
    fn small_eulerian_cases() {
        let rng = &mut ChaCha8Rng::seed_from_u64(1);
        assert_eq!(random_eulerian(rng, 2, 2).unwrap().arc_count(), 2);
        assert_eq!(random_eulerian(rng, 3, 6).unwrap().arc_count(), 6);
        assert_eq!(random_eulerian(rng, 1, 0).unwrap().n(), 1);
    }

    #[test]
    fn global_sink_generation() {
        let rng = &mut ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = random_global_sink(rng, 6, 8, 0).unwrap();
            assert_eq!(g.global_sink(), Some(0));
        }
    }
}
