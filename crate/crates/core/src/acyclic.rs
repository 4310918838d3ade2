//! Acyclic arc sets of Eulerian digraphs: cut-stretch, rooting, exact and
//! heuristic feedback arc set solvers, and counting of maximum rooted sets.
//!
//! A *root* of an acyclic arc set `A` is a vertex with in-degree 0 in
//! `G[A]`. A set with a unique root reaches every vertex from it.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{ArcSet, Digraph, VertexSet};

/// Default vertex cap of the exact subset DP.
pub const DEFAULT_EXACT_MAX_N: usize = 22;
/// Absolute ceiling of the exact DP regardless of overrides.
pub const EXACT_HARD_MAX_N: usize = 30;
/// Refuse to allocate more than this for the DP tables.
pub const EXACT_MEMORY_LIMIT_BYTES: u128 = 8 << 30;
/// Vertex cap for enumerations over maximum or maximal rooted sets.
pub const ENUMERATION_MAX_N: usize = 9;

/// An acyclic arc set whose unique root `root` reaches every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedAcyclicSet {
    arcs: ArcSet,
    root: usize,
}

impl RootedAcyclicSet {
    pub fn new(g: &Digraph, arcs: ArcSet, root: usize) -> Result<Self> {
        g.check_vertex(root)?;
        if g.is_acyclic_set(&arcs)?.is_none() {
            return Err(Error::NotAcyclic);
        }
        if !g.reach_unchecked(&arcs, root).is_full() {
            return Err(Error::Precondition(format!(
                "vertex {root} does not reach every vertex in the arc set"
            )));
        }
        Ok(RootedAcyclicSet { arcs, root })
    }

    pub fn arcs(&self) -> &ArcSet {
        &self.arcs
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn into_arcs(self) -> ArcSet {
        self.arcs
    }
}

/// An optimum (or bound) together with an arc set attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub size: usize,
    pub witness: ArcSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeuristicSolution {
    /// Size of the feedback arc set found; an upper bound on the optimum.
    pub upper_bound: usize,
    /// The feedback arc set.
    pub witness: ArcSet,
    /// Root whose rooted acyclic set gave the best result.
    pub root: usize,
}

fn check_acyclic(g: &Digraph, a: &ArcSet) -> Result<()> {
    if g.is_acyclic_set(a)?.is_none() {
        return Err(Error::NotAcyclic);
    }
    Ok(())
}

fn stretch(g: &Digraph, a: &ArcSet, s: usize) -> (ArcSet, VertexSet) {
    let reach = g.reach_unchecked(a, s);
    let (out_cut, in_cut) = g.cuts(&reach).expect("reach set matches digraph");
    (a.difference(&in_cut).union(&out_cut), reach)
}

/// `(A \ in_cut(R)) ∪ out_cut(R)` where `R` is the set reached from `s`
/// in `G[A]`. Acyclic and no smaller than `A` on Eulerian digraphs.
pub fn cut_stretch(g: &Digraph, a: &ArcSet, s: usize) -> Result<ArcSet> {
    g.check_vertex(s)?;
    if !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    check_acyclic(g, a)?;
    Ok(stretch(g, a, s).0)
}

/// Repeats cut-stretch at `s` until the reach set stops growing. Returns
/// the final set and the number of stretches that grew the reach set.
pub(crate) fn stretch_to_fixpoint(g: &Digraph, a: &ArcSet, s: usize) -> (ArcSet, usize) {
    let mut current = a.clone();
    let mut steps = 0;
    loop {
        let (next, reach) = stretch(g, &current, s);
        if next == current {
            return (current, steps);
        }
        let grown = g.reach_unchecked(&next, s);
        current = next;
        if grown.len() == reach.len() {
            return (current, steps);
        }
        steps += 1;
    }
}

/// Iterates cut-stretch at `s` until `s` reaches every vertex, giving an
/// acyclic set at least as large as `a` with no arc into `s`.
pub fn rootify(g: &Digraph, a: &ArcSet, s: usize) -> Result<RootedAcyclicSet> {
    rootify_steps(g, a, s).map(|(r, _)| r)
}

/// [`rootify`], also returning how many stretches grew the reach set.
pub fn rootify_steps(g: &Digraph, a: &ArcSet, s: usize) -> Result<(RootedAcyclicSet, usize)> {
    g.check_vertex(s)?;
    if !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    check_acyclic(g, a)?;
    let (arcs, steps) = stretch_to_fixpoint(g, a, s);
    if steps >= g.n().max(1) {
        return Err(Error::InvariantViolation(format!(
            "rooting took {steps} stretches on {} vertices",
            g.n()
        )));
    }
    let rooted = RootedAcyclicSet::new(g, arcs, s)?;
    Ok((rooted, steps))
}

/// True iff some arc of `G` ends at the root of `r` and starts in the set
/// reached from `t`.
pub fn is_sinkable(g: &Digraph, r: &RootedAcyclicSet, t: usize) -> Result<bool> {
    g.check_vertex(t)?;
    g.check_arc_set(r.arcs())?;
    if t == r.root {
        return Err(Error::Precondition("vertex is already the root".into()));
    }
    let reach = g.reach_unchecked(r.arcs(), t);
    Ok(g.in_neighbors(r.root).iter().any(|&x| reach.contains(x)))
}

/// Greedily adds arcs in ascending `(tail, head)` order while the set stays
/// acyclic. The result is a maximal acyclic arc set containing `a`.
pub fn maximal_extend(g: &Digraph, a: &ArcSet) -> Result<ArcSet> {
    check_acyclic(g, a)?;
    Ok(extend_unchecked(g, a))
}

fn extend_unchecked(g: &Digraph, a: &ArcSet) -> ArcSet {
    let mut set = a.clone();
    for (i, &(u, v)) in g.arcs().iter().enumerate() {
        if !set.contains(i) && !g.reach_unchecked(&set, v).contains(u) {
            set.insert(i);
        }
    }
    set
}

/// True iff no arc outside `a` can be added without closing a cycle.
pub fn is_maximal_acyclic(g: &Digraph, a: &ArcSet) -> Result<bool> {
    check_acyclic(g, a)?;
    Ok(g.arcs()
        .iter()
        .enumerate()
        .all(|(i, &(u, v))| a.contains(i) || g.reach_unchecked(a, v).contains(u)))
}

/// Bytes the exact DP allocates for `n` vertices.
pub fn exact_memory_bytes(n: usize) -> u128 {
    5u128 << n
}

fn check_exact_cap(n: usize, max_n: usize) -> Result<()> {
    let cap = max_n.min(EXACT_HARD_MAX_N);
    if n > cap {
        return Err(Error::SizeLimit {
            what: "exact solver vertex count",
            size: n as u128,
            cap: cap as u128,
        });
    }
    let bytes = exact_memory_bytes(n);
    if bytes > EXACT_MEMORY_LIMIT_BYTES {
        return Err(Error::SizeLimit {
            what: "exact solver memory (bytes)",
            size: bytes,
            cap: EXACT_MEMORY_LIMIT_BYTES,
        });
    }
    Ok(())
}

/// Maximum acyclic arc set, with the default vertex cap.
pub fn max_acyclic_exact(g: &Digraph) -> Result<Solution> {
    max_acyclic_exact_capped(g, DEFAULT_EXACT_MAX_N)
}

/// Maximum acyclic arc set by DP over vertex subsets: `best[S]` is the
/// largest number of forward arcs of an ordering of `S` placed first.
pub fn max_acyclic_exact_capped(g: &Digraph, max_n: usize) -> Result<Solution> {
    let n = g.n();
    check_exact_cap(n, max_n)?;
    if n == 0 {
        return Ok(Solution {
            size: 0,
            witness: g.empty_arcs(),
        });
    }
    let in_mask: Vec<u32> = (0..n)
        .map(|v| g.in_neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let full = (1usize << n) - 1;
    let mut best = vec![0u32; full + 1];
    let mut last = vec![u8::MAX; full + 1];
    for set in 0..full {
        let base = best[set];
        let mut free = !set & full;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            let next = set | 1 << v;
            let val = base + (in_mask[v] & set as u32).count_ones();
            if last[next] == u8::MAX || val > best[next] {
                best[next] = val;
                last[next] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut set = full;
    while set != 0 {
        let v = last[set] as usize;
        order.push(v);
        set &= !(1 << v);
    }
    order.reverse();
    let witness = forward_arcs(g, &order);
    debug_assert_eq!(witness.len(), best[full] as usize);
    Ok(Solution {
        size: best[full] as usize,
        witness,
    })
}

/// Arcs pointing forward in a vertex order.
pub fn forward_arcs(g: &Digraph, order: &[usize]) -> ArcSet {
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut set = g.empty_arcs();
    for (i, &(u, v)) in g.arcs().iter().enumerate() {
        if pos[u] < pos[v] {
            set.insert(i);
        }
    }
    set
}

/// Minimum feedback arc set, with the default vertex cap.
pub fn min_fas_exact(g: &Digraph) -> Result<Solution> {
    min_fas_exact_capped(g, DEFAULT_EXACT_MAX_N)
}

/// Complement of a maximum acyclic arc set.
pub fn min_fas_exact_capped(g: &Digraph, max_n: usize) -> Result<Solution> {
    let best = max_acyclic_exact_capped(g, max_n)?;
    Ok(Solution {
        size: g.arc_count() - best.size,
        witness: best.witness.complement(),
    })
}

/// Feedback arc set upper bound on an Eulerian digraph: from every root,
/// stretch a greedy maximal acyclic set until rooted there, extend it
/// greedily again, and keep the largest result.
pub fn min_fas_heuristic(g: &Digraph) -> Result<HeuristicSolution> {
    if !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let seed = extend_unchecked(g, &g.empty_arcs());
    let mut best: Option<(ArcSet, usize)> = None;
    for s in 0..g.n() {
        let rooted = rootify(g, &seed, s)?;
        let candidate = extend_unchecked(g, rooted.arcs());
        if best.as_ref().map_or(true, |(b, _)| candidate.len() > b.len()) {
            best = Some((candidate, s));
        }
    }
    let (acyclic, root) = best.unwrap_or_else(|| (g.empty_arcs(), 0));
    Ok(HeuristicSolution {
        upper_bound: g.arc_count() - acyclic.len(),
        witness: acyclic.complement(),
        root,
    })
}

fn check_enumeration_cap(g: &Digraph) -> Result<()> {
    if g.n() > ENUMERATION_MAX_N {
        return Err(Error::SizeLimit {
            what: "enumeration vertex count",
            size: g.n() as u128,
            cap: ENUMERATION_MAX_N as u128,
        });
    }
    Ok(())
}

/// Number of maximum acyclic arc sets whose unique root is `s`.
///
/// Branch and bound over arc inclusion: arcs are grouped by unordered
/// vertex pair (at most one arc per pair can be chosen), arcs into `s` are
/// never chosen, and a branch is cut when the remaining pairs cannot lift
/// it to the optimum size or some vertex has lost every possible in-arc.
pub fn count_chi(g: &Digraph, s: usize) -> Result<u64> {
    g.check_vertex(s)?;
    if !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    check_enumeration_cap(g)?;
    let target = max_acyclic_exact(g)?.size;

    // Candidate arcs grouped by unordered pair.
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut seen_pair = HashSet::new();
    for (i, &(u, v)) in g.arcs().iter().enumerate() {
        if v == s {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if !seen_pair.insert(key) {
            continue;
        }
        let mut group = vec![i];
        if let Some(j) = g.arc_index(v, u).filter(|_| u != s) {
            group.push(j);
        }
        groups.push(group);
    }
    let mut open_in = vec![0usize; g.n()];
    for group in &groups {
        for &i in group {
            open_in[g.arc(i).1] += 1;
        }
    }
    let mut search = ChiSearch {
        g,
        s,
        target,
        groups,
        open_in,
        indeg: vec![0; g.n()],
        set: g.empty_arcs(),
        size: 0,
        count: 0,
    };
    search.run(0);
    Ok(search.count)
}

struct ChiSearch<'a> {
    g: &'a Digraph,
    s: usize,
    target: usize,
    groups: Vec<Vec<usize>>,
    /// In-arcs of each vertex not yet decided.
    open_in: Vec<usize>,
    indeg: Vec<usize>,
    set: ArcSet,
    size: usize,
    count: u64,
}

impl ChiSearch<'_> {
    fn starved(&self) -> bool {
        (0..self.g.n()).any(|v| v != self.s && self.indeg[v] == 0 && self.open_in[v] == 0)
    }

    fn run(&mut self, k: usize) {
        if self.size + (self.groups.len() - k) < self.target || self.starved() {
            return;
        }
        if k == self.groups.len() {
            if self.size == self.target {
                self.count += 1;
            }
            return;
        }
        let group = self.groups[k].clone();
        for &i in &group {
            self.open_in[self.g.arc(i).1] -= 1;
        }
        for &i in &group {
            let (u, v) = self.g.arc(i);
            if self.g.reach_unchecked(&self.set, v).contains(u) {
                continue;
            }
            self.set.insert(i);
            self.indeg[v] += 1;
            self.size += 1;
            self.run(k + 1);
            self.size -= 1;
            self.indeg[v] -= 1;
            self.set.remove(i);
        }
        self.run(k + 1);
        for &i in &group {
            self.open_in[self.g.arc(i).1] += 1;
        }
    }
}

/// All maximal acyclic arc sets with unique root `s`, in ascending order of
/// their arc-index bitsets.
///
/// Each such set is the forward-arc set of a vertex order starting at `s`,
/// so orders are enumerated depth-first, extending only by vertices with
/// an in-arc from the current prefix.
pub fn maximal_rooted_sets(g: &Digraph, s: usize) -> Result<Vec<ArcSet>> {
    g.check_vertex(s)?;
    check_enumeration_cap(g)?;
    let mut found: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    let mut order = vec![s];
    let mut placed = vec![false; g.n()];
    placed[s] = true;
    orders_dfs(g, &mut order, &mut placed, &mut |order| {
        let set = forward_arcs(g, order);
        let key: Vec<usize> = set.indices().collect();
        if !found.contains(&key) && is_maximal_acyclic(g, &set).unwrap_or(false) {
            found.insert(key);
            out.push(set);
        }
    });
    out.sort_by_key(|set| set.indices().collect::<Vec<_>>());
    Ok(out)
}

fn orders_dfs(
    g: &Digraph,
    order: &mut Vec<usize>,
    placed: &mut [bool],
    visit: &mut dyn FnMut(&[usize]),
) {
    if order.len() == g.n() {
        visit(order);
        return;
    }
    for v in 0..g.n() {
        if placed[v] || !g.in_neighbors(v).iter().any(|&u| placed[u]) {
            continue;
        }
        placed[v] = true;
        order.push(v);
        orders_dfs(g, order, placed, visit);
        order.pop();
        placed[v] = false;
    }
}
