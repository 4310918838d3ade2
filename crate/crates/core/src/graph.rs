//! Simple directed graphs, arc subsets and the structural predicates used
//! throughout the crate.
//!
//! Arcs are stored in ascending `(tail, head)` order and every arc gets a
//! stable index into that order. [`ArcSet`] and [`VertexSet`] are bitsets
//! over those indices, so set algebra is cheap and iteration is always
//! deterministic.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// An ordered pair `(tail, head)`.
pub type Arc = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<Arc>,
    index: HashMap<Arc, usize>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    names: Option<Vec<String>>,
}

impl Digraph {
    /// Builds a simple digraph on `0..n`. Self-loops, duplicate arcs and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut list: Vec<Arc> = Vec::new();
        for (u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            list.push((u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!(
                "duplicate arc {}->{}",
                w[0].0, w[0].1
            )));
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        let mut index = HashMap::with_capacity(list.len());
        for (i, &(u, v)) in list.iter().enumerate() {
            out_adj[u].push(v);
            in_adj[v].push(u);
            index.insert((u, v), i);
        }
        for adj in &mut in_adj {
            adj.sort_unstable();
        }
        Ok(Digraph {
            n,
            arcs: list,
            index,
            out_adj,
            in_adj,
            names: None,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::Precondition(format!(
                "expected {} vertex names, got {}",
                self.n,
                names.len()
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// All arcs in ascending `(tail, head)` order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, index: usize) -> Arc {
        self.arcs[index]
    }

    pub fn arc_index(&self, tail: usize, head: usize) -> Option<usize> {
        self.index.get(&(tail, head)).copied()
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.index.contains_key(&(tail, head))
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn outdeg(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn indeg(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Label of `v`: its name if the digraph carries names, its id otherwise.
    pub fn label(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// `(indegree, outdegree)` of `v`.
    pub fn degrees(&self, v: usize) -> Result<(usize, usize)> {
        self.check_vertex(v)?;
        Ok((self.indeg(v), self.outdeg(v)))
    }

    pub fn is_eulerian(&self) -> bool {
        (0..self.n).all(|v| self.indeg(v) == self.outdeg(v))
    }

    /// Vertices reachable from `start` along arcs of the whole digraph.
    pub fn reachable_from(&self, start: usize) -> VertexSet {
        self.bfs(start, |v| &self.out_adj[v])
    }

    /// Vertices that reach `target` along arcs of the whole digraph.
    pub fn reaching(&self, target: usize) -> VertexSet {
        self.bfs(target, |v| &self.in_adj[v])
    }

    fn bfs<'a>(&'a self, start: usize, next: impl Fn(usize) -> &'a [usize]) -> VertexSet {
        let mut seen = VertexSet::empty(self.n);
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in next(v) {
                if !seen.contains(w) {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// True iff every vertex reaches every other. The empty digraph and
    /// the single vertex count as strongly connected.
    pub fn is_strongly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reachable_from(0).len() == self.n && self.reaching(0).len() == self.n
    }

    /// True iff the underlying undirected graph is connected.
    pub fn is_weakly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let seen = self.bfs_undirected(0);
        seen.len() == self.n
    }

    fn bfs_undirected(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::empty(self.n);
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in self.out_adj[v].iter().chain(&self.in_adj[v]) {
                if !seen.contains(w) {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// The vertex with out-degree 0 that every vertex reaches, if any.
    pub fn global_sink(&self) -> Option<usize> {
        let mut sinks = (0..self.n).filter(|&v| self.outdeg(v) == 0);
        let s = sinks.next()?;
        if sinks.next().is_some() {
            return None;
        }
        (self.reaching(s).len() == self.n).then_some(s)
    }

    /// True iff `s` becomes a global sink once its out-arcs are removed,
    /// i.e. every vertex has a path to `s`.
    pub fn is_global_sink_after_cut(&self, s: usize) -> bool {
        s < self.n && self.reaching(s).len() == self.n
    }

    /// The digraph with every out-arc of `s` deleted.
    pub fn cut_out_arcs(&self, s: usize) -> Result<Digraph> {
        self.check_vertex(s)?;
        let kept = self.arcs.iter().copied().filter(|&(u, _)| u != s);
        let g = Digraph::new(self.n, kept)?;
        Ok(match &self.names {
            Some(names) => g.with_names(names.clone())?,
            None => g,
        })
    }

    /// The empty arc set of this digraph.
    pub fn empty_arcs(&self) -> ArcSet {
        ArcSet::empty(self.arcs.len())
    }

    pub fn all_arcs(&self) -> ArcSet {
        let mut set = ArcSet::empty(self.arcs.len());
        set.bits.insert_range(..);
        set
    }

    /// Arc set from explicit `(tail, head)` pairs; every pair must be an arc.
    pub fn arc_set(&self, pairs: impl IntoIterator<Item = Arc>) -> Result<ArcSet> {
        let mut set = self.empty_arcs();
        for (u, v) in pairs {
            let i = self
                .arc_index(u, v)
                .ok_or(Error::UnknownArc { tail: u, head: v })?;
            set.bits.insert(i);
        }
        Ok(set)
    }

    pub fn check_arc_set(&self, set: &ArcSet) -> Result<()> {
        if set.universe() == self.arcs.len() {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "arc set built for {} arcs, digraph has {}",
                set.universe(),
                self.arcs.len()
            )))
        }
    }

    /// Pairs of an arc set, ascending.
    pub fn pairs(&self, set: &ArcSet) -> Vec<Arc> {
        set.indices().map(|i| self.arcs[i]).collect()
    }

    /// Vertices reachable from `s` using only arcs of `set`; always contains `s`.
    pub fn reach(&self, set: &ArcSet, s: usize) -> Result<VertexSet> {
        self.check_vertex(s)?;
        self.check_arc_set(set)?;
        Ok(self.reach_unchecked(set, s))
    }

    pub(crate) fn reach_unchecked(&self, set: &ArcSet, s: usize) -> VertexSet {
        let mut seen = VertexSet::empty(self.n);
        seen.insert(s);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &self.out_adj[v] {
                if !seen.contains(w) && set.contains(self.index[&(v, w)]) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// A vertex order in which every arc of `set` points forward, or `None`
    /// if `set` contains a directed cycle. Kahn elimination, smallest ready
    /// vertex first.
    pub fn is_acyclic_set(&self, set: &ArcSet) -> Result<Option<Vec<usize>>> {
        self.check_arc_set(set)?;
        Ok(self.topological_order(set))
    }

    pub(crate) fn topological_order(&self, set: &ArcSet) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for i in set.indices() {
            indeg[self.arcs[i].1] += 1;
        }
        let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..self.n)
            .filter(|&v| indeg[v] == 0)
            .map(std::cmp::Reverse)
            .collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(std::cmp::Reverse(v)) = ready.pop() {
            order.push(v);
            for &w in &self.out_adj[v] {
                if set.contains(self.index[&(v, w)]) {
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        ready.push(std::cmp::Reverse(w));
                    }
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    /// `(out_cut, in_cut)` of `s`: arcs leaving `s` and arcs entering it.
    pub fn cuts(&self, s: &VertexSet) -> Result<(ArcSet, ArcSet)> {
        if s.universe() != self.n {
            return Err(Error::Precondition(format!(
                "vertex set built for {} vertices, digraph has {}",
                s.universe(),
                self.n
            )));
        }
        let mut out_cut = self.empty_arcs();
        let mut in_cut = self.empty_arcs();
        for (i, &(u, v)) in self.arcs.iter().enumerate() {
            match (s.contains(u), s.contains(v)) {
                (true, false) => out_cut.bits.insert(i),
                (false, true) => in_cut.bits.insert(i),
                _ => {}
            }
        }
        Ok((out_cut, in_cut))
    }

    /// In-degree of `v` in the spanning subgraph `G[set]`.
    pub fn indeg_in(&self, set: &ArcSet, v: usize) -> usize {
        self.in_adj[v]
            .iter()
            .filter(|&&u| set.contains(self.index[&(u, v)]))
            .count()
    }
}

/// A subset of the arcs of some digraph, as a bitset over arc indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArcSet {
    bits: FixedBitSet,
}

impl ArcSet {
    pub fn empty(arc_count: usize) -> Self {
        ArcSet {
            bits: FixedBitSet::with_capacity(arc_count),
        }
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.bits.contains(index)
    }

    pub fn insert(&mut self, index: usize) {
        self.bits.insert(index);
    }

    pub fn remove(&mut self, index: usize) {
        self.bits.set(index, false);
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn is_subset(&self, other: &ArcSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &ArcSet) -> ArcSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ArcSet { bits }
    }

    pub fn difference(&self, other: &ArcSet) -> ArcSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        ArcSet { bits }
    }

    pub fn complement(&self) -> ArcSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        ArcSet { bits }
    }
}

impl fmt::Debug for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}

/// A subset of `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = VertexSet::empty(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            set.insert(v);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}
