//! Recurrent configurations of the chip-firing game with a sink.
//!
//! Recurrence is decided by adding a configuration equivalent to zero and
//! checking that stabilization returns the start: `beta` (one chip per
//! out-neighbour of the sink) on Eulerian digraphs, `epsilon` on any
//! digraph where the sink is global. Minimal recurrent configurations are
//! in bijection with maximal acyclic arc sets rooted at the sink, through
//! `c(v) = outdeg(v) - indeg_A(v)`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::acyclic::{
    forward_arcs, is_maximal_acyclic, max_acyclic_exact_capped, maximal_rooted_sets, rootify,
    RootedAcyclicSet, DEFAULT_EXACT_MAX_N,
};
use crate::chipfire::{active_vertices, fire, stabilize, Configuration};
use crate::error::{Error, Result};
use crate::graph::{ArcSet, Digraph};

/// Largest number of stable configurations an enumeration will visit.
pub const ENUMERATION_CAP: u128 = 1_000_000;

/// Laplacian with the sink's row and column removed, rows and columns in
/// ascending vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedLaplacian {
    pub order: Vec<usize>,
    pub entries: Vec<Vec<i64>>,
}

impl ReducedLaplacian {
    pub fn dim(&self) -> usize {
        self.order.len()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        let mut m: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = t / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }
}

pub fn reduced_laplacian(g: &Digraph, s: usize) -> Result<ReducedLaplacian> {
    g.check_vertex(s)?;
    let order: Vec<usize> = (0..g.n()).filter(|&v| v != s).collect();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut entries = vec![vec![0i64; order.len()]; order.len()];
    for (i, &v) in order.iter().enumerate() {
        entries[i][i] = -(g.outdeg(v) as i64);
        for &w in g.out_neighbors(v) {
            if w != s {
                entries[i][pos[w]] += 1;
            }
        }
    }
    Ok(ReducedLaplacian { order, entries })
}

/// Number of recurrent configurations, as `|det|` of the reduced Laplacian.
pub fn group_order(g: &Digraph, s: usize) -> Result<BigUint> {
    let det = reduced_laplacian(g, s)?.determinant();
    if det.is_zero() {
        return Err(Error::Singular);
    }
    Ok(det.abs().to_biguint().expect("absolute value is non-negative"))
}

fn require_global_sink(g: &Digraph, s: usize) -> Result<()> {
    g.check_vertex(s)?;
    if !g.is_global_sink_after_cut(s) {
        return Err(Error::NoGlobalSink { sink: s });
    }
    Ok(())
}

fn require_eulerian_sink(g: &Digraph, s: usize) -> Result<()> {
    g.check_vertex(s)?;
    if !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    require_global_sink(g, s)
}

fn require_stable(g: &Digraph, c: &Configuration) -> Result<()> {
    let active = active_vertices(g, c);
    if active.is_empty() {
        Ok(())
    } else {
        Err(Error::NotStable { active })
    }
}

fn check_config(g: &Digraph, s: usize, c: &Configuration) -> Result<()> {
    if c.n() != g.n() || c.sink() != s {
        return Err(Error::ConfigurationMismatch);
    }
    Ok(())
}

/// One chip on every out-neighbour of the sink.
pub fn beta(g: &Digraph, s: usize) -> Result<Configuration> {
    g.check_vertex(s)?;
    if !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    Configuration::from_pairs(g.n(), s, g.out_neighbors(s).iter().map(|&v| (v, 1)))
}

/// Base configuration `delta` whose stabilization defines `epsilon`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DeltaChoice {
    /// `delta(v) = 2 outdeg(v)`.
    #[default]
    TwiceOutdeg,
    /// `delta(v) = outdeg(v)`.
    Outdeg,
}

/// `epsilon = delta - stabilize(delta)` with `delta(v) = 2 outdeg(v)`.
pub fn epsilon(g: &Digraph, s: usize) -> Result<Configuration> {
    epsilon_with(g, s, DeltaChoice::default())
}

pub fn epsilon_with(g: &Digraph, s: usize, choice: DeltaChoice) -> Result<Configuration> {
    require_global_sink(g, s)?;
    let factor = match choice {
        DeltaChoice::TwiceOutdeg => 2,
        DeltaChoice::Outdeg => 1,
    };
    let delta = Configuration::from_pairs(
        g.n(),
        s,
        (0..g.n())
            .filter(|&v| v != s)
            .map(|v| (v, factor * g.outdeg(v) as u64)),
    )?;
    let (stable, _) = stabilize(g, &delta)?;
    let chips = delta
        .chips()
        .iter()
        .zip(stable.chips())
        .map(|(d, k)| d - k)
        .collect();
    Configuration::from_vec(s, chips)
}

/// Which zero-equivalent configuration a recurrence test adds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecurrenceTest {
    Beta,
    Epsilon(DeltaChoice),
}

/// Recurrence of a stable configuration, with `beta` on Eulerian digraphs
/// and `epsilon` otherwise.
pub fn is_recurrent(g: &Digraph, s: usize, c: &Configuration) -> Result<bool> {
    let test = if g.is_eulerian() {
        RecurrenceTest::Beta
    } else {
        RecurrenceTest::Epsilon(DeltaChoice::default())
    };
    is_recurrent_with(g, s, c, test)
}

/// True iff `c == stabilize(c + test)`.
pub fn is_recurrent_with(
    g: &Digraph,
    s: usize,
    c: &Configuration,
    test: RecurrenceTest,
) -> Result<bool> {
    check_config(g, s, c)?;
    let probe = match test {
        RecurrenceTest::Beta => {
            require_eulerian_sink(g, s)?;
            beta(g, s)?
        }
        RecurrenceTest::Epsilon(choice) => epsilon_with(g, s, choice)?,
    };
    require_stable(g, c)?;
    Ok(recurrent_against(g, c, &probe)?)
}

fn recurrent_against(g: &Digraph, c: &Configuration, probe: &Configuration) -> Result<bool> {
    let (stable, _) = stabilize(g, &c.add(probe)?)?;
    Ok(&stable == c)
}

/// The burning order of a recurrent configuration: starting from `c + beta`,
/// repeatedly fire the smallest-id vertex that has not fired yet and is
/// active. Fails with the unburnt vertices when `c` is not recurrent.
pub fn burning_sequence(g: &Digraph, s: usize, c: &Configuration) -> Result<Vec<usize>> {
    check_config(g, s, c)?;
    require_eulerian_sink(g, s)?;
    require_stable(g, c)?;
    let mut cur = c.add(&beta(g, s)?)?;
    let mut burnt = vec![false; g.n()];
    burnt[s] = true;
    let mut order = Vec::with_capacity(g.n().saturating_sub(1));
    'burn: loop {
        for v in 0..g.n() {
            if !burnt[v] && active_vertices_contains(g, &cur, v) {
                cur = fire(g, &cur, v)?;
                burnt[v] = true;
                order.push(v);
                continue 'burn;
            }
        }
        break;
    }
    let unburnt: Vec<usize> = (0..g.n()).filter(|&v| !burnt[v]).collect();
    if !unburnt.is_empty() {
        return Err(Error::NotRecurrent { unburnt });
    }
    if &cur != c {
        return Err(Error::InvariantViolation(
            "burning every vertex once did not return the configuration".into(),
        ));
    }
    Ok(order)
}

fn active_vertices_contains(g: &Digraph, c: &Configuration, v: usize) -> bool {
    let d = g.outdeg(v) as u64;
    d >= 1 && c.get(v) >= d
}

/// Arcs transferring chips during one burning pass: every arc out of the
/// sink and every arc from an earlier to a later vertex of the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiringGraph {
    pub arcs: ArcSet,
    pub order: Vec<usize>,
}

impl FiringGraph {
    pub fn indeg(&self, g: &Digraph, v: usize) -> usize {
        g.indeg_in(&self.arcs, v)
    }
}

/// Firing graph of `c` for the burning order `seq`, which must fire every
/// non-sink vertex once, legally, from `c + beta` back to `c`.
pub fn firing_graph(g: &Digraph, s: usize, c: &Configuration, seq: &[usize]) -> Result<FiringGraph> {
    check_config(g, s, c)?;
    require_eulerian_sink(g, s)?;
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    for &v in seq {
        g.check_vertex(v)?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::Precondition(format!(
                "vertex {v} repeated or is the sink in the burning order"
            )));
        }
    }
    if seen.iter().any(|&b| !b) {
        return Err(Error::Precondition(
            "burning order misses a non-sink vertex".into(),
        ));
    }
    let mut cur = c.add(&beta(g, s)?)?;
    for &v in seq {
        cur = fire(g, &cur, v).map_err(|_| {
            Error::Precondition(format!("vertex {v} is not active at its turn"))
        })?;
    }
    if &cur != c {
        return Err(Error::Precondition(
            "burning order does not return to the configuration".into(),
        ));
    }
    let order: Vec<usize> = std::iter::once(s).chain(seq.iter().copied()).collect();
    Ok(FiringGraph {
        arcs: forward_arcs(g, &order),
        order: seq.to_vec(),
    })
}

/// `c(v) = outdeg(v) - indeg_R(v)` for a set rooted at the sink.
pub fn config_from_arcset(g: &Digraph, s: usize, r: &RootedAcyclicSet) -> Result<Configuration> {
    g.check_arc_set(r.arcs())?;
    if !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    if r.root() != s {
        return Err(Error::Precondition(format!(
            "arc set is rooted at {}, not at the sink {s}",
            r.root()
        )));
    }
    config_from_arcs_unchecked(g, s, r.arcs())
}

fn config_from_arcs_unchecked(g: &Digraph, s: usize, arcs: &ArcSet) -> Result<Configuration> {
    let mut c = Configuration::zero(g.n(), s)?;
    for v in (0..g.n()).filter(|&v| v != s) {
        c.set(v, (g.outdeg(v) - g.indeg_in(arcs, v)) as u64)?;
    }
    Ok(c)
}

/// Minimality through the bijection: `c` is minimal iff it is recurrent,
/// equals `outdeg - indeg_F` for its firing graph `F`, and `F` is a
/// maximal acyclic arc set.
pub fn is_minimal_recurrent(g: &Digraph, s: usize, c: &Configuration) -> Result<bool> {
    let seq = match burning_sequence(g, s, c) {
        Ok(seq) => seq,
        Err(Error::NotRecurrent { .. }) => return Ok(false),
        Err(e) => return Err(e),
    };
    let fg = firing_graph(g, s, c, &seq)?;
    let tight = (0..g.n())
        .filter(|&v| v != s)
        .all(|v| c.get(v) == (g.outdeg(v) - fg.indeg(g, v)) as u64);
    Ok(tight && is_maximal_acyclic(g, &fg.arcs)?)
}

/// Number of stable configurations, `prod (outdeg(v))` over non-sink `v`.
pub fn stable_count(g: &Digraph, s: usize) -> u128 {
    (0..g.n())
        .filter(|&v| v != s)
        .map(|v| g.outdeg(v) as u128)
        .try_fold(1u128, |acc, d| acc.checked_mul(d))
        .unwrap_or(u128::MAX)
}

fn check_enumeration(g: &Digraph, s: usize) -> Result<()> {
    let count = stable_count(g, s);
    if count > ENUMERATION_CAP {
        return Err(Error::SizeLimit {
            what: "stable configurations",
            size: count,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(())
}

fn stable_at(g: &Digraph, s: usize, mut index: u128) -> Configuration {
    let mut c = Configuration::zero(g.n(), s).expect("sink in range");
    for v in (0..g.n()).filter(|&v| v != s) {
        let d = g.outdeg(v) as u128;
        c.set(v, (index % d) as u64).expect("non-sink vertex");
        index /= d;
    }
    c
}

/// Every stable configuration, sorted.
pub fn stable_configurations(g: &Digraph, s: usize) -> Result<Vec<Configuration>> {
    require_global_sink(g, s)?;
    check_enumeration(g, s)?;
    let mut all: Vec<Configuration> = (0..stable_count(g, s)).map(|i| stable_at(g, s, i)).collect();
    all.sort();
    Ok(all)
}

/// All recurrent configurations, sorted; found by testing every stable
/// configuration in parallel.
pub fn enumerate_recurrent(g: &Digraph, s: usize) -> Result<Vec<Configuration>> {
    require_global_sink(g, s)?;
    check_enumeration(g, s)?;
    let probe = if g.is_eulerian() {
        beta(g, s)?
    } else {
        epsilon(g, s)?
    };
    let total = stable_count(g, s) as u64;
    let mut found = (0..total)
        .into_par_iter()
        .map(|i| {
            let c = stable_at(g, s, i as u128);
            recurrent_against(g, &c, &probe).map(|r| r.then_some(c))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    found.sort();
    Ok(found)
}

/// The pointwise-minimal members of a set of configurations, sorted.
pub fn pointwise_minimal(configs: &[Configuration]) -> Vec<Configuration> {
    let mut out: Vec<Configuration> = configs
        .iter()
        .filter(|c| !configs.iter().any(|o| o != *c && o.le(c)))
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Minimal recurrent configurations, built from the maximal acyclic arc
/// sets rooted at the sink and checked against pointwise-minimal filtering
/// of [`enumerate_recurrent`].
pub fn enumerate_minimal_recurrent(g: &Digraph, s: usize) -> Result<Vec<Configuration>> {
    require_eulerian_sink(g, s)?;
    let mut from_sets = maximal_rooted_sets(g, s)?
        .iter()
        .map(|a| config_from_arcs_unchecked(g, s, a))
        .collect::<Result<Vec<_>>>()?;
    from_sets.sort();
    let filtered = pointwise_minimal(&enumerate_recurrent(g, s)?);
    if from_sets != filtered {
        return Err(Error::InvariantViolation(format!(
            "{} configurations from maximal rooted sets, {} pointwise-minimal recurrent ones",
            from_sets.len(),
            filtered.len()
        )));
    }
    Ok(filtered)
}

/// A minimum recurrent configuration and its chip total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinRec {
    pub chips: u128,
    pub witness: Configuration,
}

/// Minimum chips of a recurrent configuration on an Eulerian digraph, as
/// `sum of outdeg(v) over v != s` minus the maximum acyclic arc set size.
/// The witness comes from a maximum acyclic set rooted at `s`.
pub fn minrec_exact(g: &Digraph, s: usize) -> Result<MinRec> {
    minrec_exact_capped(g, s, DEFAULT_EXACT_MAX_N)
}

/// [`minrec_exact`] with the exact solver limited to `max_n` vertices.
pub fn minrec_exact_capped(g: &Digraph, s: usize, max_n: usize) -> Result<MinRec> {
    require_eulerian_sink(g, s)?;
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let best = max_acyclic_exact_capped(g, max_n)?;
    let rooted = rootify(g, &best.witness, s)?;
    if rooted.len() != best.size {
        return Err(Error::InvariantViolation(
            "rooting changed the size of a maximum acyclic set".into(),
        ));
    }
    let witness = config_from_arcset(g, s, &rooted)?;
    let outdeg_sum: usize = (0..g.n()).filter(|&v| v != s).map(|v| g.outdeg(v)).sum();
    let chips = (outdeg_sum - best.size) as u128;
    if witness.total() != chips {
        return Err(Error::InvariantViolation(format!(
            "witness carries {} chips, expected {chips}",
            witness.total()
        )));
    }
    Ok(MinRec { chips, witness })
}

/// Minimum chips over all recurrent configurations by enumeration; works
/// for any digraph where `s` is a global sink.
pub fn minrec_brute(g: &Digraph, s: usize) -> Result<MinRec> {
    enumerate_recurrent(g, s)?
        .into_iter()
        .min_by_key(|c| c.total())
        .map(|witness| MinRec {
            chips: witness.total(),
            witness,
        })
        .ok_or_else(|| Error::InvariantViolation("no recurrent configuration".into()))
}

/// The recurrent configuration equivalent to `c`, reached by adding `beta`
/// (Eulerian) or `epsilon` and stabilizing until recurrent.
pub fn canonical_recurrent(g: &Digraph, s: usize, c: &Configuration) -> Result<Configuration> {
    check_config(g, s, c)?;
    require_global_sink(g, s)?;
    let probe = if g.is_eulerian() {
        beta(g, s)?
    } else {
        epsilon(g, s)?
    };
    let max_deg = (0..g.n()).map(|v| g.outdeg(v)).max().unwrap_or(0);
    let bound = (g.n() * max_deg * g.n()).max(1);
    let (mut cur, _) = stabilize(g, c)?;
    for _ in 0..=bound {
        if recurrent_against(g, &cur, &probe)? {
            return Ok(cur);
        }
        cur = stabilize(g, &cur.add(&probe)?)?.0;
    }
    Err(Error::InvariantViolation(format!(
        "no recurrent representative within {bound} rounds"
    )))
}

/// Identity of the group of recurrent configurations.
pub fn identity(g: &Digraph, s: usize) -> Result<Configuration> {
    canonical_recurrent(g, s, &Configuration::zero(g.n(), s)?)
}

/// True iff `c1 - c2` lies in the lattice spanned by the reduced Laplacian.
pub fn equivalent(g: &Digraph, s: usize, c1: &Configuration, c2: &Configuration) -> Result<bool> {
    Ok(canonical_recurrent(g, s, c1)? == canonical_recurrent(g, s, c2)?)
}

/// `stabilize(c1 + c2)` for recurrent `c1`, `c2`.
pub fn group_add(
    g: &Digraph,
    s: usize,
    c1: &Configuration,
    c2: &Configuration,
) -> Result<Configuration> {
    for c in [c1, c2] {
        if !is_recurrent(g, s, c)? {
            return Err(Error::Precondition(format!("{c:?} is not recurrent")));
        }
    }
    Ok(stabilize(g, &c1.add(c2)?)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn conf(n: usize, pairs: &[(usize, u64)]) -> Configuration {
        Configuration::from_pairs(n, S, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn laplacians() {
        assert_eq!(reduced_laplacian(&k3(), S).unwrap().entries, vec![vec![-2, 1], vec![1, -2]]);
        assert_eq!(reduced_laplacian(&c3(), S).unwrap().entries, vec![vec![-1, 1], vec![0, -1]]);
        assert_eq!(reduced_laplacian(&d2(), S).unwrap().entries, vec![vec![-1]]);
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order(&k3(), S).unwrap(), BigUint::from(3u32));
        assert_eq!(group_order(&c3(), S).unwrap(), BigUint::from(1u32));
        assert_eq!(group_order(&d2(), S).unwrap(), BigUint::from(1u32));
        // Vertex 0 cannot reach the sink 2.
        let g = Digraph::new(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(group_order(&g, 0), Err(Error::Singular));
    }

    #[test]
    fn determinant_needs_pivoting() {
        let l = ReducedLaplacian {
            order: vec![1, 2, 3],
            entries: vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]],
        };
        assert_eq!(l.determinant(), BigInt::from(-5));
    }

    #[test]
    fn betas() {
        assert_eq!(beta(&k3(), S).unwrap(), conf(3, &[(U, 1), (V, 1)]));
        assert_eq!(beta(&c3(), S).unwrap(), conf(3, &[(A, 1)]));
        assert_eq!(beta(&d2(), S).unwrap(), conf(2, &[(1, 1)]));
        assert_eq!(beta(&p1(), S), Err(Error::NotEulerian));
    }

    #[test]
    fn epsilons() {
        // delta = (4,4) stabilizes to (1,1) after six firings.
        assert_eq!(epsilon(&k3(), S).unwrap(), conf(3, &[(U, 3), (V, 3)]));
        // delta = (2,2) drains completely along the path a -> b -> s.
        assert_eq!(epsilon(&c3(), S).unwrap(), conf(3, &[(A, 2), (B, 2)]));
        assert_eq!(epsilon(&d2(), S).unwrap(), conf(2, &[(1, 2)]));
        assert_eq!(
            epsilon_with(&c3(), S, DeltaChoice::Outdeg).unwrap(),
            conf(3, &[(A, 1), (B, 1)])
        );
        assert_eq!(
            epsilon_with(&d2(), S, DeltaChoice::Outdeg).unwrap(),
            conf(2, &[(1, 1)])
        );
    }

    #[test]
    fn recurrence_examples() {
        assert!(is_recurrent(&k3(), S, &conf(3, &[(U, 1), (V, 1)])).unwrap());
        assert!(!is_recurrent(&k3(), S, &conf(3, &[])).unwrap());
        assert!(is_recurrent(&c3(), S, &conf(3, &[])).unwrap());
        assert!(matches!(
            is_recurrent(&k3(), S, &conf(3, &[(U, 2)])),
            Err(Error::NotStable { .. })
        ));
    }

    #[test]
    fn burning_examples() {
        let g = k3();
        assert_eq!(burning_sequence(&g, S, &conf(3, &[(U, 1), (V, 1)])).unwrap(), vec![U, V]);
        assert_eq!(burning_sequence(&g, S, &conf(3, &[(U, 1)])).unwrap(), vec![U, V]);
        assert_eq!(
            burning_sequence(&g, S, &conf(3, &[])),
            Err(Error::NotRecurrent { unburnt: vec![U, V] })
        );
        assert_eq!(burning_sequence(&c3(), S, &conf(3, &[])).unwrap(), vec![A, B]);
    }

    #[test]
    fn firing_graph_examples() {
        let g = k3();
        let fg = firing_graph(&g, S, &conf(3, &[(U, 1)]), &[U, V]).unwrap();
        assert_eq!(g.pairs(&fg.arcs), vec![(S, U), (S, V), (U, V)]);
        let fg = firing_graph(&g, S, &conf(3, &[(U, 1), (V, 1)]), &[U, V]).unwrap();
        assert_eq!(g.pairs(&fg.arcs), vec![(S, U), (S, V), (U, V)]);
        let g = c3();
        let fg = firing_graph(&g, S, &conf(3, &[]), &[A, B]).unwrap();
        assert_eq!(g.pairs(&fg.arcs), vec![(S, A), (A, B)]);
        // b is not active before a fires.
        assert!(firing_graph(&g, S, &conf(3, &[]), &[B, A]).is_err());
        assert!(firing_graph(&g, S, &conf(3, &[]), &[A]).is_err());
    }

    #[test]
    fn configurations_from_rooted_sets() {
        let g = k3();
        let r = RootedAcyclicSet::new(&g, g.arc_set([(S, U), (S, V), (U, V)]).unwrap(), S).unwrap();
        assert_eq!(config_from_arcset(&g, S, &r).unwrap(), conf(3, &[(U, 1), (V, 0)]));
        let r = RootedAcyclicSet::new(&g, g.arc_set([(S, U), (S, V), (V, U)]).unwrap(), S).unwrap();
        assert_eq!(config_from_arcset(&g, S, &r).unwrap(), conf(3, &[(U, 0), (V, 1)]));
        let g = c3();
        let r = RootedAcyclicSet::new(&g, g.arc_set([(S, A), (A, B)]).unwrap(), S).unwrap();
        assert_eq!(config_from_arcset(&g, S, &r).unwrap(), conf(3, &[]));
        let r = RootedAcyclicSet::new(&g, g.arc_set([(A, B), (B, S)]).unwrap(), A).unwrap();
        assert!(config_from_arcset(&g, S, &r).is_err());
    }

    #[test]
    fn minimality_examples() {
        let g = k3();
        assert!(is_minimal_recurrent(&g, S, &conf(3, &[(U, 1)])).unwrap());
        assert!(!is_minimal_recurrent(&g, S, &conf(3, &[(U, 1), (V, 1)])).unwrap());
        assert!(!is_minimal_recurrent(&g, S, &conf(3, &[])).unwrap());
        assert!(is_minimal_recurrent(&c3(), S, &conf(3, &[])).unwrap());
    }

    #[test]
    fn enumerations() {
        let g = k3();
        assert_eq!(
            enumerate_recurrent(&g, S).unwrap(),
            vec![conf(3, &[(V, 1)]), conf(3, &[(U, 1)]), conf(3, &[(U, 1), (V, 1)])]
        );
        assert_eq!(enumerate_recurrent(&c3(), S).unwrap(), vec![conf(3, &[])]);
        assert_eq!(enumerate_recurrent(&d2(), S).unwrap(), vec![conf(2, &[])]);
        assert_eq!(
            enumerate_minimal_recurrent(&g, S).unwrap(),
            vec![conf(3, &[(V, 1)]), conf(3, &[(U, 1)])]
        );
        assert_eq!(enumerate_minimal_recurrent(&c3(), S).unwrap(), vec![conf(3, &[])]);
        assert_eq!(enumerate_minimal_recurrent(&d2(), S).unwrap(), vec![conf(2, &[])]);
    }

    #[test]
    fn enumeration_cap() {
        let g = complete(9);
        assert!(matches!(enumerate_recurrent(&g, 0), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn minrec_examples() {
        let m = minrec_exact(&k3(), S).unwrap();
        assert_eq!(m.chips, 1);
        assert!(m.witness == conf(3, &[(U, 1)]) || m.witness == conf(3, &[(V, 1)]));
        assert_eq!(minrec_exact(&c3(), S).unwrap().chips, 0);
        assert_eq!(minrec_exact(&d2(), S).unwrap().chips, 0);
        assert_eq!(minrec_brute(&k3(), S).unwrap().chips, 1);
    }

    #[test]
    fn canonical_examples() {
        let g = k3();
        assert_eq!(canonical_recurrent(&g, S, &conf(3, &[])).unwrap(), conf(3, &[(U, 1), (V, 1)]));
        assert_eq!(canonical_recurrent(&g, S, &conf(3, &[(U, 1)])).unwrap(), conf(3, &[(U, 1)]));
        assert_eq!(canonical_recurrent(&c3(), S, &conf(3, &[])).unwrap(), conf(3, &[]));
        // Unstable input is stabilized first: (4,4) -> (1,1).
        assert_eq!(
            canonical_recurrent(&g, S, &conf(3, &[(U, 4), (V, 4)])).unwrap(),
            conf(3, &[(U, 1), (V, 1)])
        );
    }

    #[test]
    fn k3_group_is_cyclic_of_order_three() {
        let g = k3();
        let e = conf(3, &[(U, 1), (V, 1)]);
        let x = conf(3, &[(U, 1)]);
        let y = conf(3, &[(V, 1)]);
        assert_eq!(identity(&g, S).unwrap(), e);
        assert_eq!(group_add(&g, S, &e, &e).unwrap(), e);
        assert_eq!(group_add(&g, S, &e, &x).unwrap(), x);
        assert_eq!(group_add(&g, S, &x, &y).unwrap(), e);
        assert_eq!(group_add(&g, S, &x, &x).unwrap(), y);
        assert_eq!(group_add(&g, S, &y, &y).unwrap(), x);
        assert!(group_add(&g, S, &conf(3, &[]), &x).is_err());
    }

    #[test]
    fn epsilon_test_on_non_eulerian_sink_digraph() {
        // 1 -> 2 -> 0, 1 -> 0, 2 -> 1: global sink 0, not Eulerian.
        let g = Digraph::new(3, [(1, 2), (2, 0), (1, 0), (2, 1)]).unwrap();
        assert!(!g.is_eulerian());
        let rec = enumerate_recurrent(&g, 0).unwrap();
        assert_eq!(BigUint::from(rec.len()), group_order(&g, 0).unwrap());
        assert!(burning_sequence(&g, 0, &rec[0]).is_err());
    }
}
