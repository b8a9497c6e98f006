//! Exact-weighted undirected multigraph with connectivity queries.
//!
//! Graphs are immutable after construction; every operation that "modifies" a
//! graph returns a new one. Edge identity survives deletion, so cut reports
//! can always refer back to the ids of the original input.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A weighted undirected edge. Parallel edges are permitted, self-loops are
/// not. Weights are strictly positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: usize,
    pub u: usize,
    pub v: usize,
    pub weight: Rational,
}

/// Undirected multigraph with exact rational edge weights and stable edge ids.
///
/// A freshly constructed graph has edge ids dense in `[0, m)`; graphs derived
/// by [`Graph::remove_edges`] keep the surviving original ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

/// Connected-component labeling. Component indices are dense in
/// `[0, component_count)` and assigned in order of each component's smallest
/// vertex, so the labeling is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    pub labels: Vec<usize>,
    pub component_count: usize,
}

/// Union-find over dense vertex indices.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

impl Graph {
    /// Builds a graph from `(u, v, weight)` triples, assigning edge ids
    /// densely in input order.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let edges = edges
            .into_iter()
            .enumerate()
            .map(|(id, (u, v, weight))| Edge { id, u, v, weight })
            .collect();
        Self::from_edges(vertex_count, edges)
    }

    /// Builds a graph from fully specified edges. Ids must be unique but need
    /// not be dense; derived graphs (deletions, contractions) use this.
    pub fn from_edges(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidArgument("graph needs at least one vertex".to_string()));
        }
        let mut seen = BTreeSet::new();
        for e in &edges {
            for &x in &[e.u, e.v] {
                if x >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: x, vertex_count });
                }
            }
            if e.u == e.v {
                return Err(Error::SelfLoop { vertex: e.u });
            }
            if e.weight <= Rational::zero() {
                return Err(Error::NonpositiveWeight);
            }
            if !seen.insert(e.id) {
                return Err(Error::DuplicateEdgeId(e.id));
            }
        }
        Ok(Graph { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_by_id(&self, id: usize) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    pub fn total_weight(&self) -> Rational {
        self.edges.iter().map(|e| &e.weight).sum()
    }

    /// Sum of the weights of the given edge ids. Errors on unknown ids.
    pub fn weight_of(&self, edge_ids: &BTreeSet<usize>) -> Result<Rational> {
        let mut total = Rational::zero();
        for &id in edge_ids {
            let e = self.edge_by_id(id).ok_or(Error::UnknownEdgeId(id))?;
            total += &e.weight;
        }
        Ok(total)
    }

    /// Deterministic connected-component labeling.
    pub fn components(&self) -> ComponentLabeling {
        let mut uf = UnionFind::new(self.vertex_count);
        for e in &self.edges {
            uf.union(e.u, e.v);
        }
        // Scanning vertices in order assigns component indices by smallest
        // contained vertex.
        let mut labels = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        let mut root_label = vec![usize::MAX; self.vertex_count];
        for (v, label) in labels.iter_mut().enumerate() {
            let r = uf.find(v);
            if root_label[r] == usize::MAX {
                root_label[r] = next;
                next += 1;
            }
            *label = root_label[r];
        }
        ComponentLabeling { labels, component_count: next }
    }

    /// Returns the graph with the given edges absent. Surviving edges keep
    /// their original ids; the vertex set is unchanged.
    pub fn remove_edges(&self, edge_ids: &BTreeSet<usize>) -> Result<Graph> {
        for &id in edge_ids {
            if self.edge_by_id(id).is_none() {
                return Err(Error::UnknownEdgeId(id));
            }
        }
        let edges = self.edges.iter().filter(|e| !edge_ids.contains(&e.id)).cloned().collect();
        Ok(Graph { vertex_count: self.vertex_count, edges })
    }

    /// The `h` for which `edge_ids` is an h-way split: one plus the increase
    /// in component count caused by removing the edges. Returns 1 for sets
    /// whose removal disconnects nothing.
    pub fn split_cardinality(&self, edge_ids: &BTreeSet<usize>) -> Result<usize> {
        let before = self.components().component_count;
        let after = self.remove_edges(edge_ids)?.components().component_count;
        Ok(after - before + 1)
    }

    /// Disjoint union. Vertices of later parts are shifted; edge ids are
    /// reassigned densely in part order.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        if parts.is_empty() {
            return Err(Error::InvalidArgument("disjoint union of zero graphs".to_string()));
        }
        let mut edges = Vec::new();
        let mut offset = 0;
        let mut id = 0;
        for g in parts {
            for e in &g.edges {
                edges.push(Edge { id, u: e.u + offset, v: e.v + offset, weight: e.weight.clone() });
                id += 1;
            }
            offset += g.vertex_count;
        }
        Graph::from_edges(offset, edges)
    }
}
