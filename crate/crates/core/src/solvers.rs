//! Exact minimum h-way split solvers.
//!
//! Three routes are provided:
//!
//! * [`min_split_bruteforce`]: partition enumeration with branch-and-bound,
//!   the ground truth for every other solver on small graphs.
//! * [`min_cut_maxadjacency`]: deterministic global minimum 2-way cut via
//!   maximum adjacency orderings, usable on graphs of any size.
//! * [`min_split_dp`]: component-wise decomposition that combines
//!   per-component exact cuts with a budget search, extending the exact
//!   solvers to disconnected graphs.
//!
//! An h-way split of a graph with `c` components is an edge set whose removal
//! leaves `c + h - 1` components. For a minimum-weight choice it suffices to
//! enumerate partitions of the vertex set into exactly `c + h - 1` blocks and
//! take inter-block edges: with strictly positive weights every minimum-weight
//! partition induces connected blocks, so the removal count is exact.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{ComponentLabeling, Edge, Graph, UnionFind};
use crate::rational::Rational;

/// Exhaustive enumeration refuses graphs larger than this (after reduction);
/// set partition counts grow too fast beyond it.
pub const ENUMERATION_LIMIT: usize = 14;

/// An edge set whose removal increases the component count by
/// `achieved_h - 1`, together with its exact total weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitResult {
    pub edge_ids: BTreeSet<usize>,
    pub weight: Rational,
    pub achieved_h: usize,
}

/// Deterministic rule selecting among equal-weight minimum splits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreakPolicy {
    /// The minimum whose sorted edge-id list is lexicographically smallest.
    CanonicalLex,
    /// Among minima, prefer splits containing no edge of the highest-indexed
    /// component of the input graph; fall back to canonical-lex.
    AvoidLastComponent,
}

/// One connected component of a graph, re-indexed to local dense vertices.
/// Edges keep their original ids and weights.
pub(crate) struct ComponentView {
    pub graph: Graph,
    #[allow(dead_code)]
    pub vertices: Vec<usize>,
}

pub(crate) fn component_subgraphs(g: &Graph) -> Vec<ComponentView> {
    let labeling = g.components();
    let mut views = Vec::with_capacity(labeling.component_count);
    let mut local = vec![usize::MAX; g.vertex_count()];
    for comp in 0..labeling.component_count {
        let vertices: Vec<usize> =
            (0..g.vertex_count()).filter(|&v| labeling.labels[v] == comp).collect();
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges: Vec<Edge> = g
            .edges()
            .iter()
            .filter(|e| labeling.labels[e.u] == comp)
            .map(|e| Edge { id: e.id, u: local[e.u], v: local[e.v], weight: e.weight.clone() })
            .collect();
        let graph = Graph::from_edges(vertices.len(), edges)
            .expect("component subgraph inherits validity");
        views.push(ComponentView { graph, vertices });
    }
    views
}

fn feasibility(g: &Graph, h: usize) -> Result<(ComponentLabeling, usize)> {
    if h == 0 {
        return Err(Error::InvalidArgument("h must be at least 1".to_string()));
    }
    let labeling = g.components();
    let target = labeling.component_count + h - 1;
    if target > g.vertex_count() {
        return Err(Error::Infeasible {
            needed_components: target,
            vertex_count: g.vertex_count(),
        });
    }
    Ok((labeling, target))
}

fn empty_split() -> SplitResult {
    SplitResult { edge_ids: BTreeSet::new(), weight: Rational::zero(), achieved_h: 1 }
}

/// Weight of some valid h-way split, obtained by repeatedly removing the
/// cheapest global min cut among the current components. Used as an upper
/// bound for safe edge contraction; never as the returned optimum.
fn repeated_min_cut_bound(g: &Graph, h: usize) -> Result<Rational> {
    let mut current = g.clone();
    let mut total = Rational::zero();
    for _ in 0..h - 1 {
        let mut best: Option<SplitResult> = None;
        for view in component_subgraphs(&current) {
            if view.graph.vertex_count() < 2 {
                continue;
            }
            let local = min_cut_maxadjacency(&view.graph)?;
            if best.as_ref().is_none_or(|b| local.weight < b.weight) {
                best = Some(local);
            }
        }
        let cut = best.expect("feasibility guarantees a splittable component");
        total += &cut.weight;
        current = current.remove_edges(&cut.edge_ids)?;
    }
    Ok(total)
}

/// Contracts every edge strictly heavier than `bound`. When `bound` is the
/// weight of some feasible h-way split, no minimum h-way split can contain
/// such an edge, so the set of minimum splits (and hence tie-breaking) is
/// unchanged. Edges that end up inside a merged vertex are dropped: their
/// endpoints stay connected without them, so a minimum split never contains
/// them either.
fn contract_heavy_edges(g: &Graph, bound: &Rational) -> Graph {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    for e in g.edges() {
        if e.weight > *bound {
            uf.union(e.u, e.v);
        }
    }
    let mut root_label = vec![usize::MAX; n];
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for (v, slot) in label.iter_mut().enumerate() {
        let r = uf.find(v);
        if root_label[r] == usize::MAX {
            root_label[r] = next;
            next += 1;
        }
        *slot = root_label[r];
    }
    let edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter_map(|e| {
            let (u, v) = (label[e.u], label[e.v]);
            (u != v).then(|| Edge { id: e.id, u, v, weight: e.weight.clone() })
        })
        .collect();
    Graph::from_edges(next, edges).expect("contraction preserves validity")
}

/// Cost accumulator for the partition search. Weights are pre-scaled to
/// integers; u128 is used when everything fits, BigInt otherwise.
trait Cost: Clone + Ord {
    fn zero() -> Self;
    fn add(&mut self, rhs: &Self);
    fn sub(&mut self, rhs: &Self);
}

impl Cost for u128 {
    fn zero() -> Self {
        0
    }
    fn add(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub(&mut self, rhs: &Self) {
        *self -= rhs;
    }
}

impl Cost for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn add(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub(&mut self, rhs: &Self) {
        *self -= rhs;
    }
}

struct PartitionSearch<'a, T: Cost> {
    edges: &'a [Edge],
    /// Per vertex: aggregated scaled weight to each smaller-index neighbor.
    lower_adj: Vec<Vec<(usize, T)>>,
    n: usize,
    target_blocks: usize,
    policy: TieBreakPolicy,
    in_last_component: &'a BTreeMap<usize, bool>,
    block_of: Vec<usize>,
    blocks_used: usize,
    cost: T,
    best_cost: T,
    best: Option<(bool, Vec<usize>)>,
}

impl<'a, T: Cost> PartitionSearch<'a, T> {
    fn new(
        g: &'a Graph,
        scaled: &[T],
        target_blocks: usize,
        policy: TieBreakPolicy,
        in_last_component: &'a BTreeMap<usize, bool>,
        seed_bound: T,
    ) -> Self {
        let n = g.vertex_count();
        let mut agg: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); n];
        for (pos, e) in g.edges().iter().enumerate() {
            let (lo, hi) = if e.u < e.v { (e.u, e.v) } else { (e.v, e.u) };
            agg[hi]
                .entry(lo)
                .and_modify(|w| w.add(&scaled[pos]))
                .or_insert_with(|| scaled[pos].clone());
        }
        let lower_adj = agg.into_iter().map(|m| m.into_iter().collect()).collect();
        PartitionSearch {
            edges: g.edges(),
            lower_adj,
            n,
            target_blocks,
            policy,
            in_last_component,
            block_of: vec![usize::MAX; n],
            blocks_used: 0,
            cost: T::zero(),
            best_cost: seed_bound,
            best: None,
        }
    }

    fn run(mut self) -> Option<(T, Vec<usize>)> {
        self.assign(0);
        self.best.map(|(_, ids)| (self.best_cost, ids))
    }

    /// Assigns vertex `v` to each block in canonical (restricted-growth)
    /// order: existing blocks first, then at most one new block.
    fn assign(&mut self, v: usize) {
        if v == self.n {
            if self.blocks_used == self.target_blocks {
                self.consider_leaf();
            }
            return;
        }
        // the remaining vertices (v included) must be able to open every
        // still-missing block
        if self.blocks_used + (self.n - v) < self.target_blocks {
            return;
        }
        let mut to_block = vec![T::zero(); self.blocks_used];
        let mut total = T::zero();
        for (u, w) in &self.lower_adj[v] {
            total.add(w);
            to_block[self.block_of[*u]].add(w);
        }
        let can_open = self.blocks_used < self.target_blocks;
        let upper = self.blocks_used + usize::from(can_open);
        // b == blocks_used opens a new block, so it has no to_block entry
        #[allow(clippy::needless_range_loop)]
        for b in 0..upper {
            let mut delta = total.clone();
            if b < self.blocks_used {
                delta.sub(&to_block[b]);
            }
            let mut new_cost = self.cost.clone();
            new_cost.add(&delta);
            if new_cost > self.best_cost {
                continue;
            }
            let opened = b == self.blocks_used;
            let saved = core::mem::replace(&mut self.cost, new_cost);
            self.block_of[v] = b;
            if opened {
                self.blocks_used += 1;
            }
            self.assign(v + 1);
            if opened {
                self.blocks_used -= 1;
            }
            self.block_of[v] = usize::MAX;
            self.cost = saved;
        }
    }

    fn consider_leaf(&mut self) {
        // pruning guarantees cost <= best_cost here
        let mut ids: Vec<usize> = self
            .edges
            .iter()
            .filter(|e| self.block_of[e.u] != self.block_of[e.v])
            .map(|e| e.id)
            .collect();
        ids.sort_unstable();
        let touches = match self.policy {
            TieBreakPolicy::CanonicalLex => false,
            TieBreakPolicy::AvoidLastComponent => {
                ids.iter().any(|id| self.in_last_component[id])
            }
        };
        let replace = if self.cost < self.best_cost {
            true
        } else {
            match &self.best {
                None => true,
                Some((best_touches, best_ids)) => (touches, &ids) < (*best_touches, best_ids),
            }
        };
        if replace {
            self.best_cost = self.cost.clone();
            self.best = Some((touches, ids));
        }
    }
}

fn enumerate_min_partition(
    g: &Graph,
    target_blocks: usize,
    policy: TieBreakPolicy,
    in_last_component: &BTreeMap<usize, bool>,
    bound: &Rational,
) -> Vec<usize> {
    let mut scale = BigInt::one();
    for e in g.edges() {
        scale = scale.lcm(e.weight.denom());
    }
    let scaled: Vec<BigInt> =
        g.edges().iter().map(|e| e.weight.numer() * (&scale / e.weight.denom())).collect();
    // The seed bound is a valid split weight, so enumeration may prune
    // strictly above it; round up to keep that sound if it is fractional.
    let scaled_bound = (bound * Rational::from_integer(scale)).ceil().numer().clone();
    let total: BigInt = scaled.iter().sum();
    let best = if let (Some(_), Some(seed)) = (total.to_u128(), scaled_bound.to_u128()) {
        let scaled_u: Vec<u128> = scaled.iter().map(|w| w.to_u128().unwrap()).collect();
        PartitionSearch::new(g, &scaled_u, target_blocks, policy, in_last_component, seed)
            .run()
            .map(|(_, ids)| ids)
    } else {
        PartitionSearch::new(g, &scaled, target_blocks, policy, in_last_component, scaled_bound)
            .run()
            .map(|(_, ids)| ids)
    };
    best.expect("a feasible target always has a minimum partition")
}

/// Exact minimum h-way split by exhaustive partition enumeration.
///
/// Enumerates partitions of the vertex set into exactly
/// `components + h - 1` blocks with branch-and-bound on the inter-block
/// weight; ties are resolved per `policy`. Graphs above
/// [`ENUMERATION_LIMIT`] vertices are first reduced by contracting edges
/// provably absent from every minimum split; if the reduced graph is still
/// too large, a size-limit error is returned. Accepts `h = 1` (the empty
/// split).
pub fn min_split_bruteforce(g: &Graph, h: usize, policy: TieBreakPolicy) -> Result<SplitResult> {
    let (labeling, target) = feasibility(g, h)?;
    if h == 1 {
        return Ok(empty_split());
    }
    let last = labeling.component_count - 1;
    let in_last: BTreeMap<usize, bool> =
        g.edges().iter().map(|e| (e.id, labeling.labels[e.u] == last)).collect();

    let (reduced, bound);
    if g.vertex_count() <= ENUMERATION_LIMIT {
        reduced = g.clone();
        bound = g.total_weight();
    } else {
        let b = repeated_min_cut_bound(g, h)?;
        let r = contract_heavy_edges(g, &b);
        if r.vertex_count() > ENUMERATION_LIMIT {
            return Err(Error::SizeLimit { vertices: r.vertex_count(), limit: ENUMERATION_LIMIT });
        }
        reduced = r;
        bound = b;
    }
    debug_assert_eq!(reduced.components().component_count, labeling.component_count);

    let ids = enumerate_min_partition(&reduced, target, policy, &in_last, &bound);
    let edge_ids: BTreeSet<usize> = ids.into_iter().collect();
    let weight = g.weight_of(&edge_ids)?;
    let result = SplitResult { edge_ids, weight, achieved_h: h };
    assert_eq!(
        g.split_cardinality(&result.edge_ids)?,
        h,
        "minimum partition must induce exactly the target component count"
    );
    Ok(result)
}

/// Deterministic global minimum 2-way cut via maximum adjacency orderings.
///
/// Runs `n - 1` phases; each phase orders the current vertices by maximum
/// adjacency to the ordered prefix (ties to the smallest index), records the
/// cut isolating the last-ordered vertex, and merges the last two. Parallel
/// edges are aggregated during the ordering; merged vertices are tracked in a
/// merge map so the returned edge ids refer to the input graph.
pub fn min_cut_maxadjacency(g: &Graph) -> Result<SplitResult> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::InvalidArgument("minimum cut needs at least two vertices".to_string()));
    }
    if g.components().component_count != 1 {
        return Err(Error::Disconnected);
    }

    let mut adj = vec![vec![Rational::zero(); n]; n];
    for e in g.edges() {
        adj[e.u][e.v] += &e.weight;
        adj[e.v][e.u] += &e.weight;
    }
    let mut active: Vec<usize> = (0..n).collect();
    let mut merged: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut best: Option<(Rational, Vec<usize>)> = None;

    while active.len() > 1 {
        let mut in_prefix = vec![false; n];
        let start = active[0];
        in_prefix[start] = true;
        let mut weight_to_prefix = vec![Rational::zero(); n];
        for &u in &active {
            if u != start {
                weight_to_prefix[u] = adj[start][u].clone();
            }
        }
        let mut prev = start;
        let mut last = start;
        let mut last_weight = Rational::zero();
        for _ in 1..active.len() {
            let mut pick = usize::MAX;
            for &u in &active {
                if !in_prefix[u]
                    && (pick == usize::MAX || weight_to_prefix[u] > weight_to_prefix[pick])
                {
                    pick = u;
                }
            }
            in_prefix[pick] = true;
            prev = last;
            last = pick;
            last_weight = weight_to_prefix[pick].clone();
            for &u in &active {
                if !in_prefix[u] {
                    let w = adj[pick][u].clone();
                    weight_to_prefix[u] += w;
                }
            }
        }
        if best.as_ref().is_none_or(|(w, _)| last_weight < *w) {
            best = Some((last_weight, merged[last].clone()));
        }
        let absorbed = core::mem::take(&mut merged[last]);
        merged[prev].extend(absorbed);
        for &u in &active {
            if u != prev && u != last {
                let w = adj[last][u].clone();
                adj[prev][u] += &w;
                adj[u][prev] = adj[prev][u].clone();
            }
        }
        active.retain(|&u| u != last);
    }

    let (phase_weight, side) = best.expect("connected graph with n >= 2 has a cut");
    let side: BTreeSet<usize> = side.into_iter().collect();
    let mut edge_ids = BTreeSet::new();
    let mut weight = Rational::zero();
    for e in g.edges() {
        if side.contains(&e.u) != side.contains(&e.v) {
            edge_ids.insert(e.id);
            weight += &e.weight;
        }
    }
    debug_assert_eq!(weight, phase_weight);
    Ok(SplitResult { edge_ids, weight, achieved_h: 2 })
}

/// Budget search over ways to distribute `h - 1` extra components across the
/// connected components, given per-component exact splits.
struct DpCombiner<'a> {
    options: &'a [Vec<Option<SplitResult>>],
    policy: TieBreakPolicy,
    choice: Vec<usize>,
    best: Option<(Rational, bool, Vec<usize>)>,
}

impl DpCombiner<'_> {
    fn descend(&mut self, comp: usize, budget: usize, partial: Rational) {
        if let Some((best_w, _, _)) = &self.best {
            if partial > *best_w {
                return;
            }
        }
        if comp == self.options.len() {
            if budget == 0 {
                self.consider(partial);
            }
            return;
        }
        let capacity: usize =
            self.options[comp..].iter().map(|o| o.len().saturating_sub(1)).sum();
        if capacity < budget {
            return;
        }
        for extra in 0..=budget.min(self.options[comp].len() - 1) {
            if let Some(split) = &self.options[comp][extra] {
                let mut next = partial.clone();
                next += &split.weight;
                self.choice.push(extra);
                self.descend(comp + 1, budget - extra, next);
                self.choice.pop();
            }
        }
    }

    fn consider(&mut self, total: Rational) {
        let touches = match self.policy {
            TieBreakPolicy::CanonicalLex => false,
            TieBreakPolicy::AvoidLastComponent => *self.choice.last().expect("q >= 1") > 0,
        };
        let mut ids: Vec<usize> = Vec::new();
        for (comp, &extra) in self.choice.iter().enumerate() {
            if extra > 0 {
                let split = self.options[comp][extra].as_ref().expect("chosen option exists");
                ids.extend(split.edge_ids.iter().copied());
            }
        }
        ids.sort_unstable();
        let replace = match &self.best {
            None => true,
            Some((w, t, i)) => total < *w || (total == *w && (touches, &ids) < (*t, i)),
        };
        if replace {
            self.best = Some((total, touches, ids));
        }
    }
}

/// Exact minimum h-way split of a possibly disconnected graph.
///
/// Solves each connected component exactly for every useful part count, then
/// searches over ways to distribute the `h - 1` extra components. Agrees in
/// weight with [`min_split_bruteforce`] run on the whole graph, and matches
/// its tie-breaking too, because per-component candidate sets live in
/// disjoint edge-id universes.
pub fn min_split_dp(g: &Graph, h: usize, policy: TieBreakPolicy) -> Result<SplitResult> {
    feasibility(g, h)?;
    if h == 1 {
        return Ok(empty_split());
    }
    let views = component_subgraphs(g);
    // options[i][j - 1] = minimum j-way split of component i, None when the
    // component has fewer than j vertices
    let mut options: Vec<Vec<Option<SplitResult>>> = Vec::with_capacity(views.len());
    for view in &views {
        let cap = view.graph.vertex_count().min(h);
        let mut per = vec![None; cap];
        per[0] = Some(empty_split());
        for j in 2..=cap {
            per[j - 1] = Some(min_split_bruteforce(&view.graph, j, TieBreakPolicy::CanonicalLex)?);
        }
        options.push(per);
    }
    let mut combiner = DpCombiner { options: &options, policy, choice: Vec::new(), best: None };
    combiner.descend(0, h - 1, Rational::zero());
    let (weight, _, ids) = combiner.best.expect("feasibility guarantees a valid distribution");
    let edge_ids: BTreeSet<usize> = ids.into_iter().collect();
    let result = SplitResult { edge_ids, weight, achieved_h: h };
    assert_eq!(
        g.split_cardinality(&result.edge_ids)?,
        h,
        "component-wise splits must compose to the target component count"
    );
    Ok(result)
}

/// Adds one new vertex adjacent to the smallest-index vertex of every
/// component via an edge of weight `heavy`; the result is connected. With
/// `heavy` exceeding the total graph weight, minimum h-way splits of the
/// input coincide with minimum h-way cuts of the closure.
pub fn star_closure(g: &Graph, heavy: &Rational) -> Result<Graph> {
    if *heavy <= Rational::zero() {
        return Err(Error::NonpositiveWeight);
    }
    let labeling = g.components();
    let hub = g.vertex_count();
    let mut next_id = g.edge_ids().max().map_or(0, |m| m + 1);
    let mut edges: Vec<Edge> = g.edges().to_vec();
    let mut seen = vec![false; labeling.component_count];
    for v in 0..g.vertex_count() {
        let comp = labeling.labels[v];
        if !seen[comp] {
            seen[comp] = true;
            edges.push(Edge { id: next_id, u: hub, v, weight: heavy.clone() });
            next_id += 1;
        }
    }
    Graph::from_edges(hub + 1, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn complete(n: usize, w: i64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v, rat(w)));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    fn path(weights: &[i64]) -> Graph {
        let edges: Vec<_> =
            weights.iter().enumerate().map(|(i, &w)| (i, i + 1, rat(w))).collect();
        Graph::new(weights.len() + 1, edges).unwrap()
    }

    #[test]
    fn bruteforce_k3_two_way() {
        let r = min_split_bruteforce(&complete(3, 1), 2, TieBreakPolicy::CanonicalLex).unwrap();
        assert_eq!(r.weight, rat(2));
        assert_eq!(r.achieved_h, 2);
    }

    #[test]
    fn bruteforce_path_two_way() {
        let r = min_split_bruteforce(&path(&[1, 1]), 2, TieBreakPolicy::CanonicalLex).unwrap();
        assert_eq!(r.weight, rat(1));
        // lex tie-break picks edge 0 over edge 1
        assert_eq!(r.edge_ids, BTreeSet::from([0]));
    }

    #[test]
    fn bruteforce_k4_three_way() {
        // best 3-block partition of K4 has sizes {2,1,1}, cutting 5 of 6 edges
        let r = min_split_bruteforce(&complete(4, 1), 3, TieBreakPolicy::CanonicalLex).unwrap();
        assert_eq!(r.weight, rat(5));
    }

    #[test]
    fn bruteforce_h_one_is_empty() {
        let r = min_split_bruteforce(&complete(3, 1), 1, TieBreakPolicy::CanonicalLex).unwrap();
        assert_eq!(r, empty_split());
    }

    #[test]
    fn bruteforce_infeasible_h() {
        let err = min_split_bruteforce(&complete(3, 1), 4, TieBreakPolicy::CanonicalLex);
        assert_eq!(err, Err(Error::Infeasible { needed_components: 4, vertex_count: 3 }));
    }

    #[test]
    fn bruteforce_size_limit() {
        // all weights equal: the reduction cannot contract anything
        let g = path(&[1; 15]);
        match min_split_bruteforce(&g, 2, TieBreakPolicy::CanonicalLex) {
            Err(Error::SizeLimit { vertices: 16, limit }) => assert_eq!(limit, ENUMERATION_LIMIT),
            other => panic!("expected size-limit error, got {other:?}"),
        }
    }

    #[test]
    fn bruteforce_reduces_oversized_graph_with_heavy_edges() {
        // 20-vertex path: one unit edge in the middle, the rest weight 50;
        // contraction collapses everything except the unit edge
        let mut weights = [50i64; 19];
        weights[9] = 1;
        let g = path(&weights);
        let r = min_split_bruteforce(&g, 2, TieBreakPolicy::CanonicalLex).unwrap();
        assert_eq!(r.weight, rat(1));
        assert_eq!(r.edge_ids, BTreeSet::from([9]));
    }

    #[test]
    fn maxadjacency_star_cheapest_leaf() {
        let g = Graph::new(4, [(0, 1, rat(5)), (0, 2, rat(7)), (0, 3, rat(3))]).unwrap();
        let r = min_cut_maxadjacency(&g).unwrap();
        assert_eq!(r.weight, rat(3));
        assert_eq!(r.edge_ids, BTreeSet::from([2]));
    }

    #[test]
    fn maxadjacency_k4() {
        let r = min_cut_maxadjacency(&complete(4, 1)).unwrap();
        assert_eq!(r.weight, rat(3));
    }

    #[test]
    fn maxadjacency_bridge() {
        // two unit triangles joined by one bridge
        let g = Graph::new(
            6,
            [
                (0, 1, rat(1)),
                (1, 2, rat(1)),
                (0, 2, rat(1)),
                (3, 4, rat(1)),
                (4, 5, rat(1)),
                (3, 5, rat(1)),
                (2, 3, rat(1)),
            ],
        )
        .unwrap();
        let r = min_cut_maxadjacency(&g).unwrap();
        assert_eq!(r.weight, rat(1));
        assert_eq!(r.edge_ids, BTreeSet::from([6]));
    }

    #[test]
    fn maxadjacency_rejects_disconnected() {
        let g = Graph::disjoint_union(&[complete(3, 1), complete(3, 1)]).unwrap();
        assert_eq!(min_cut_maxadjacency(&g), Err(Error::Disconnected));
    }

    #[test]
    fn maxadjacency_rejects_single_vertex() {
        let g = Graph::new(1, []).unwrap();
        assert!(matches!(min_cut_maxadjacency(&g), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn maxadjacency_parallel_edges() {
        let g = Graph::new(3, [(0, 1, rat(1)), (0, 1, rat(1)), (1, 2, rat(1))]).unwrap();
        let r = min_cut_maxadjacency(&g).unwrap();
        assert_eq!(r.weight, rat(1));
        assert_eq!(r.edge_ids, BTreeSet::from([2]));
    }

    #[test]
    fn dp_two_triangles() {
        let g = Graph::disjoint_union(&[complete(3, 1), complete(3, 1)]).unwrap();
        let two = min_split_dp(&g, 2, TieBreakPolicy::CanonicalLex).unwrap();
        assert_eq!(two.weight, rat(2));
        // a 3-way cut of one triangle (weight 3) beats two 2-way cuts (2 + 2)
        let three = min_split_dp(&g, 3, TieBreakPolicy::CanonicalLex).unwrap();
        assert_eq!(three.weight, rat(3));
        assert_eq!(three.edge_ids, BTreeSet::from([0, 1, 2]));
    }

    #[test]
    fn dp_matches_bruteforce_on_connected_graph() {
        let g = complete(5, 1);
        for h in 1..=5 {
            let dp = min_split_dp(&g, h, TieBreakPolicy::CanonicalLex).unwrap();
            let bf = min_split_bruteforce(&g, h, TieBreakPolicy::CanonicalLex).unwrap();
            assert_eq!(dp, bf);
        }
    }

    #[test]
    fn dp_avoid_last_component() {
        // equal min cuts in both components: lex and avoid-last both pick the
        // first component
        let g = Graph::disjoint_union(&[path(&[1, 2]), path(&[1, 2])]).unwrap();
        let lex = min_split_dp(&g, 2, TieBreakPolicy::CanonicalLex).unwrap();
        assert_eq!(lex.edge_ids, BTreeSet::from([0]));
        let avoid = min_split_dp(&g, 2, TieBreakPolicy::AvoidLastComponent).unwrap();
        assert_eq!(avoid.edge_ids, BTreeSet::from([0]));

        // the unique minimum lives in the last component; fallback keeps it
        let g2 = Graph::disjoint_union(&[path(&[3, 2]), path(&[1, 2])]).unwrap();
        let avoid2 = min_split_dp(&g2, 2, TieBreakPolicy::AvoidLastComponent).unwrap();
        assert_eq!(avoid2.edge_ids, BTreeSet::from([2]));
    }

    #[test]
    fn star_closure_connected_graph_gets_pendant() {
        let g = complete(3, 1);
        let closed = star_closure(&g, &rat(9)).unwrap();
        assert_eq!(closed.vertex_count(), 4);
        assert_eq!(closed.edge_count(), 4);
        assert_eq!(closed.components().component_count, 1);
    }

    #[test]
    fn star_closure_two_triangles() {
        let g = Graph::disjoint_union(&[complete(3, 1), complete(3, 1)]).unwrap();
        let closed = star_closure(&g, &rat(1000)).unwrap();
        assert_eq!(closed.vertex_count(), 7);
        assert_eq!(closed.edge_count(), 8);
        assert_eq!(closed.components().component_count, 1);
        // hub edges attach to the smallest vertex of each component
        let hub_edges: Vec<_> = closed.edges().iter().filter(|e| e.u == 6 || e.v == 6).collect();
        assert_eq!(hub_edges.len(), 2);
        assert_eq!(hub_edges[0].v, 0);
        assert_eq!(hub_edges[1].v, 3);
    }

    #[test]
    fn star_closure_isolated_vertices() {
        let g = Graph::new(3, []).unwrap();
        let closed = star_closure(&g, &rat(5)).unwrap();
        assert_eq!(closed.vertex_count(), 4);
        assert_eq!(closed.edge_count(), 3);
        assert!(closed.edges().iter().all(|e| e.weight == rat(5)));
    }

    #[test]
    fn star_closure_rejects_nonpositive_heavy() {
        assert_eq!(star_closure(&complete(3, 1), &rat(0)), Err(Error::NonpositiveWeight));
    }

    #[test]
    fn tie_break_canonical_lex_picks_smallest_ids() {
        // unit 4-cycle: all opposite edge pairs tie at weight 2
        let g = Graph::new(4, [(0, 1, rat(1)), (1, 2, rat(1)), (2, 3, rat(1)), (3, 0, rat(1))])
            .unwrap();
        let r = min_split_bruteforce(&g, 2, TieBreakPolicy::CanonicalLex).unwrap();
        assert_eq!(r.weight, rat(2));
        assert_eq!(r.edge_ids, BTreeSet::from([0, 1]));
    }

    #[test]
    fn solvers_are_deterministic() {
        let g = Graph::disjoint_union(&[complete(4, 1), path(&[1, 1, 1])]).unwrap();
        for policy in [TieBreakPolicy::CanonicalLex, TieBreakPolicy::AvoidLastComponent] {
            let a = min_split_dp(&g, 4, policy).unwrap();
            let b = min_split_dp(&g, 4, policy).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rational_weights_stay_exact() {
        let g = Graph::new(3, [(0, 1, ratio(1, 3)), (1, 2, ratio(1, 2)), (0, 2, ratio(1, 6))])
            .unwrap();
        let r = min_split_bruteforce(&g, 2, TieBreakPolicy::CanonicalLex).unwrap();
        // isolating vertex 0 costs 1/3 + 1/6, vertex 2 costs 1/2 + 1/6,
        // vertex 1 costs 1/3 + 1/2
        assert_eq!(r.weight, ratio(1, 2));
        assert_eq!(r.edge_ids, BTreeSet::from([0, 2]));
    }
}
