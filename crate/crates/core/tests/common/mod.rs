//! Instance generators and brute-force oracles shared by the integration
//! tests. Oracles avoid the library's own acyclicity and recurrence code.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use chipfas::chipfire::{fire, stabilize, Configuration};
use chipfas::generate::{random_digraph, random_eulerian, random_global_sink};
use chipfas::Digraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A strongly connected Eulerian digraph with `2 <= n <= max_n` vertices
/// and between `n` and `3n` arcs.
pub fn eulerian<R: Rng>(rng: &mut R, max_n: usize) -> Digraph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let hi = (3 * n).min(n * (n - 1));
        let m = rng.gen_range(n..=hi);
        if let Ok(g) = random_eulerian(rng, n, m) {
            return g;
        }
    }
}

pub fn eulerian_sample(count: usize, max_n: usize, seed: u64) -> Vec<Digraph> {
    let mut r = rng(seed);
    (0..count).map(|_| eulerian(&mut r, max_n)).collect()
}

/// Any simple digraph with `1 <= n <= max_n` and at most `max_m` arcs.
pub fn digraph<R: Rng>(rng: &mut R, max_n: usize, max_m: usize) -> Digraph {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(0..=max_m.min(n * (n - 1)));
    random_digraph(rng, n, m).expect("feasible arc count")
}

/// A digraph with a global sink at a random vertex.
pub fn global_sink<R: Rng>(rng: &mut R, max_n: usize) -> (Digraph, usize) {
    let n = rng.gen_range(2..=max_n);
    let m = rng.gen_range(0..=(2 * n).min(n * (n - 1)));
    let s = rng.gen_range(0..n);
    (random_global_sink(rng, n, m, s).expect("valid sink"), s)
}

/// Configuration with up to `3 outdeg(v)` chips on every non-sink vertex.
pub fn random_configuration<R: Rng>(rng: &mut R, g: &Digraph, s: usize) -> Configuration {
    let pairs: Vec<(usize, u64)> = (0..g.n())
        .filter(|&v| v != s)
        .map(|v| (v, rng.gen_range(0..=3 * g.outdeg(v) as u64)))
        .collect();
    Configuration::from_pairs(g.n(), s, pairs).unwrap()
}

/// Every strongly connected Eulerian digraph on `n` labelled vertices.
pub fn all_eulerian(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .filter_map(|mask| {
            let arcs: Vec<_> = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Digraph::new(n, arcs).unwrap();
            (g.is_eulerian() && g.is_strongly_connected()).then_some(g)
        })
        .collect()
}

/// Cycle detection by three-colour depth-first search.
pub fn has_cycle(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in arcs {
        adj[u].push(v);
    }
    fn visit(v: usize, adj: &[Vec<usize>], colour: &mut [u8]) -> bool {
        colour[v] = 1;
        for &w in &adj[v] {
            if colour[w] == 1 || (colour[w] == 0 && visit(w, adj, colour)) {
                return true;
            }
        }
        colour[v] = 2;
        false
    }
    let mut colour = vec![0u8; n];
    (0..n).any(|v| colour[v] == 0 && visit(v, &adj, &mut colour))
}

/// Arc subsets of `g` as index masks, with their arcs.
pub fn subset_arcs(g: &Digraph, mask: u32) -> Vec<(usize, usize)> {
    g.arcs()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &a)| a)
        .collect()
}

/// Every acyclic arc subset of `g`, as masks over arc indices.
pub fn acyclic_masks(g: &Digraph) -> Vec<u32> {
    assert!(g.arc_count() <= 20, "too many arcs for subset enumeration");
    (0u32..1 << g.arc_count())
        .filter(|&mask| !has_cycle(g.n(), &subset_arcs(g, mask)))
        .collect()
}

/// Largest acyclic arc subset, over all `2^|E|` subsets.
pub fn brute_max_acyclic(g: &Digraph) -> usize {
    acyclic_masks(g)
        .into_iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Vertices reachable from `s` along `arcs`.
pub fn reach_of(arcs: &[(usize, usize)], s: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([s]);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &(a, b) in arcs {
            if a == u && seen.insert(b) {
                queue.push_back(b);
            }
        }
    }
    seen
}

/// Maximum acyclic sets whose every vertex is reached from `s`, counted over
/// all arc subsets.
pub fn brute_chi(g: &Digraph, s: usize) -> u64 {
    let masks = acyclic_masks(g);
    let best = masks.iter().map(|m| m.count_ones()).max().unwrap_or(0);
    masks
        .into_iter()
        .filter(|m| m.count_ones() == best)
        .filter(|&m| reach_of(&subset_arcs(g, m), s).len() == g.n())
        .count() as u64
}

/// Recurrent configurations from the definition: everything reachable from
/// the stabilization of `2 outdeg` by adding chips and stabilizing.
pub fn accessible_closure(g: &Digraph, s: usize) -> BTreeSet<Configuration> {
    let delta = Configuration::from_pairs(
        g.n(),
        s,
        (0..g.n()).filter(|&v| v != s).map(|v| (v, 2 * g.outdeg(v) as u64)),
    )
    .unwrap();
    let start = stabilize(g, &delta).unwrap().0;
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for v in (0..g.n()).filter(|&v| v != s) {
            let mut next = c.clone();
            next.set(v, c.get(v) + 1).unwrap();
            let stable = stabilize(g, &next).unwrap().0;
            if seen.insert(stable.clone()) {
                queue.push_back(stable);
            }
        }
    }
    seen
}

/// Calls `visit` with every maximal legal firing sequence from `c`.
pub fn all_legal_sequences(g: &Digraph, c: &Configuration, visit: &mut dyn FnMut(&[usize])) {
    fn go(
        g: &Digraph,
        c: &Configuration,
        seq: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        let active: Vec<usize> = (0..g.n())
            .filter(|&v| v != c.sink() && g.outdeg(v) > 0 && c.get(v) >= g.outdeg(v) as u64)
            .collect();
        if active.is_empty() {
            visit(seq);
            return;
        }
        for v in active {
            let next = fire(g, c, v).unwrap();
            seq.push(v);
            go(g, &next, seq, visit);
            seq.pop();
        }
    }
    go(g, c, &mut Vec::new(), visit);
}
