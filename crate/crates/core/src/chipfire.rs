//! Chip-firing on a digraph with a sink.
//!
//! The game is played on the digraph with the sink's out-arcs removed: a
//! non-sink vertex `v` is active when it holds at least `outdeg(v) >= 1`
//! chips, firing sends one chip along every out-arc, and chips that reach
//! the sink vanish. Out-degrees of non-sink vertices are the same in the
//! cut digraph, so no copy of it is ever built.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Hard cap on individual firings in one stabilization.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000_000;

/// Chip counts on the non-sink vertices of a digraph. Stored densely by
/// vertex id; the sink entry is always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    sink: usize,
    chips: Vec<u64>,
}

impl Configuration {
    pub fn zero(n: usize, sink: usize) -> Result<Self> {
        if sink >= n {
            return Err(Error::VertexOutOfRange { vertex: sink, n });
        }
        Ok(Configuration {
            sink,
            chips: vec![0; n],
        })
    }

    /// `chips[v]` for every vertex; `chips[sink]` must be zero.
    pub fn from_vec(sink: usize, chips: Vec<u64>) -> Result<Self> {
        let n = chips.len();
        if sink >= n {
            return Err(Error::VertexOutOfRange { vertex: sink, n });
        }
        if chips[sink] != 0 {
            return Err(Error::Precondition("the sink carries no chips".into()));
        }
        Ok(Configuration { sink, chips })
    }

    /// From `(vertex, count)` pairs; unlisted vertices hold zero.
    pub fn from_pairs(
        n: usize,
        sink: usize,
        pairs: impl IntoIterator<Item = (usize, u64)>,
    ) -> Result<Self> {
        let mut c = Configuration::zero(n, sink)?;
        for (v, k) in pairs {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if v == sink {
                return Err(Error::Precondition("the sink carries no chips".into()));
            }
            c.chips[v] = k;
        }
        Ok(c)
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn n(&self) -> usize {
        self.chips.len()
    }

    pub fn chips(&self) -> &[u64] {
        &self.chips
    }

    pub fn get(&self, v: usize) -> u64 {
        self.chips[v]
    }

    /// Sets the count at a non-sink vertex.
    pub fn set(&mut self, v: usize, count: u64) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        if v == self.sink {
            return Err(Error::Precondition("the sink carries no chips".into()));
        }
        self.chips[v] = count;
        Ok(())
    }

    /// `(vertex, count)` for every non-sink vertex, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.chips
            .iter()
            .enumerate()
            .filter(move |&(v, _)| v != self.sink)
            .map(|(v, &k)| (v, k))
    }

    pub fn total(&self) -> u128 {
        self.chips.iter().map(|&k| k as u128).sum()
    }

    /// Pointwise `<=`.
    pub fn le(&self, other: &Configuration) -> bool {
        self.sink == other.sink
            && self.n() == other.n()
            && self.chips.iter().zip(&other.chips).all(|(a, b)| a <= b)
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Configuration) -> Result<Configuration> {
        if self.sink != other.sink || self.n() != other.n() {
            return Err(Error::ConfigurationMismatch);
        }
        let chips = self
            .chips
            .iter()
            .zip(&other.chips)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Configuration {
            sink: self.sink,
            chips,
        })
    }

    fn check_parent(&self, g: &Digraph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::ConfigurationMismatch);
        }
        Ok(())
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (v, k)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}:{k}")?;
        }
        write!(f, ")")
    }
}

/// Number of times each vertex fired during one stabilization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Odometer {
    fires: Vec<u64>,
}

impl Odometer {
    pub fn get(&self, v: usize) -> u64 {
        self.fires[v]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.fires
    }

    pub fn total(&self) -> u128 {
        self.fires.iter().map(|&k| k as u128).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.fires.iter().all(|&k| k == 0)
    }
}

/// Which active vertex to fire next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiringPolicy {
    AscendingId,
    DescendingId,
    Random { seed: u64 },
    Fifo,
    Lifo,
}

impl Default for FiringPolicy {
    fn default() -> Self {
        FiringPolicy::AscendingId
    }
}

impl FiringPolicy {
    pub const ALL_DETERMINISTIC: [FiringPolicy; 4] = [
        FiringPolicy::AscendingId,
        FiringPolicy::DescendingId,
        FiringPolicy::Fifo,
        FiringPolicy::Lifo,
    ];
}

fn active_at(g: &Digraph, c: &Configuration, v: usize) -> bool {
    let d = g.outdeg(v) as u64;
    v != c.sink && d >= 1 && c.chips[v] >= d
}

pub fn is_active(g: &Digraph, c: &Configuration, v: usize) -> Result<bool> {
    c.check_parent(g)?;
    g.check_vertex(v)?;
    if v == c.sink {
        return Err(Error::Precondition("the sink never fires".into()));
    }
    Ok(active_at(g, c, v))
}

/// Active vertices, ascending.
pub fn active_vertices(g: &Digraph, c: &Configuration) -> Vec<usize> {
    (0..c.n()).filter(|&v| active_at(g, c, v)).collect()
}

pub fn is_stable(g: &Digraph, c: &Configuration) -> bool {
    (0..c.n()).all(|v| !active_at(g, c, v))
}

fn fire_in_place(g: &Digraph, c: &mut Configuration, v: usize) -> Result<()> {
    c.chips[v] -= g.outdeg(v) as u64;
    for &w in g.out_neighbors(v) {
        if w != c.sink {
            c.chips[w] = c.chips[w].checked_add(1).ok_or(Error::Overflow)?;
        }
    }
    Ok(())
}

/// One legal firing of `v`.
pub fn fire(g: &Digraph, c: &Configuration, v: usize) -> Result<Configuration> {
    if !is_active(g, c, v)? {
        return Err(Error::IllegalFiring { vertex: v });
    }
    let mut next = c.clone();
    fire_in_place(g, &mut next, v)?;
    Ok(next)
}

/// Stabilizes with the default policy (smallest active id first).
pub fn stabilize(g: &Digraph, c: &Configuration) -> Result<(Configuration, Odometer)> {
    stabilize_with(g, c, FiringPolicy::default(), DEFAULT_STEP_BUDGET)
}

enum Schedule {
    Ordered { set: BTreeSet<usize>, descending: bool },
    Random { pool: Vec<usize>, rng: ChaCha8Rng },
    Fifo(VecDeque<usize>),
    Lifo(Vec<usize>),
}

impl Schedule {
    fn new(policy: FiringPolicy) -> Self {
        match policy {
            FiringPolicy::AscendingId => Schedule::Ordered {
                set: BTreeSet::new(),
                descending: false,
            },
            FiringPolicy::DescendingId => Schedule::Ordered {
                set: BTreeSet::new(),
                descending: true,
            },
            FiringPolicy::Random { seed } => Schedule::Random {
                pool: Vec::new(),
                rng: ChaCha8Rng::seed_from_u64(seed),
            },
            FiringPolicy::Fifo => Schedule::Fifo(VecDeque::new()),
            FiringPolicy::Lifo => Schedule::Lifo(Vec::new()),
        }
    }

    fn push(&mut self, v: usize) {
        match self {
            Schedule::Ordered { set, .. } => {
                set.insert(v);
            }
            Schedule::Random { pool, .. } => pool.push(v),
            Schedule::Fifo(q) => q.push_back(v),
            Schedule::Lifo(st) => st.push(v),
        }
    }

    fn pop(&mut self) -> Option<usize> {
        match self {
            Schedule::Ordered { set, descending } => {
                if *descending {
                    set.pop_last()
                } else {
                    set.pop_first()
                }
            }
            Schedule::Random { pool, rng } => {
                if pool.is_empty() {
                    None
                } else {
                    let i = rng.gen_range(0..pool.len());
                    Some(pool.swap_remove(i))
                }
            }
            Schedule::Fifo(q) => q.pop_front(),
            Schedule::Lifo(st) => st.pop(),
        }
    }
}

/// Stabilizes `c`, firing one active vertex at a time in the order chosen
/// by `policy`, and fails once more than `budget` firings were needed.
pub fn stabilize_with(
    g: &Digraph,
    c: &Configuration,
    policy: FiringPolicy,
    budget: u64,
) -> Result<(Configuration, Odometer)> {
    c.check_parent(g)?;
    if !g.is_global_sink_after_cut(c.sink) {
        return Err(Error::NoGlobalSink { sink: c.sink });
    }
    let mut cur = c.clone();
    let mut fires = vec![0u64; c.n()];
    let mut queued = vec![false; c.n()];
    let mut schedule = Schedule::new(policy);
    for v in active_vertices(g, &cur) {
        queued[v] = true;
        schedule.push(v);
    }
    let mut steps = 0u64;
    while let Some(v) = schedule.pop() {
        queued[v] = false;
        if !active_at(g, &cur, v) {
            continue;
        }
        if steps == budget {
            return Err(Error::StepBudgetExceeded { budget });
        }
        steps += 1;
        fire_in_place(g, &mut cur, v)?;
        fires[v] += 1;
        for w in std::iter::once(v).chain(g.out_neighbors(v).iter().copied()) {
            if !queued[w] && active_at(g, &cur, w) {
                queued[w] = true;
                schedule.push(w);
            }
        }
    }
    Ok((cur, Odometer { fires }))
}
