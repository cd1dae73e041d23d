//! Immutable simple undirected graph in compressed sparse row form.

mod cores;
mod traversal;

use std::collections::HashMap;

use thiserror::Error;

use crate::nodeset::NodeSet;

pub use cores::{core_decomposition, CoreDecomposition};
pub use traversal::{
    articulation_points, bfs_distances, connected_components, is_connected,
};

pub type NodeId = u32;

/// Node ids must fit in a non-negative `i32`.
pub const MAX_NODES: usize = i32::MAX as usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} nodes, more than the supported {MAX_NODES}")]
    TooManyNodes(usize),
    #[error("edge endpoint {node} is not below the node count {n}")]
    NodeOutOfRange { node: NodeId, n: usize },
}

/// What was discarded while building a graph.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct BuildSummary {
    pub self_loops: usize,
    pub duplicate_edges: usize,
}

#[derive(Clone, Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
    labels: Vec<String>,
}

impl Graph {
    /// Builds a graph on nodes `0..n`. Self-loops are dropped and parallel
    /// edges collapsed. Labels are the decimal node ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        Self::from_edges_with_summary(n, edges).map(|(g, _)| g)
    }

    pub fn from_edges_with_summary<I>(
        n: usize,
        edges: I,
    ) -> Result<(Self, BuildSummary), GraphError>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let labels = (0..n).map(|v| v.to_string()).collect();
        Self::assemble(n, edges, labels)
    }

    fn assemble<I>(
        n: usize,
        edges: I,
        labels: Vec<String>,
    ) -> Result<(Self, BuildSummary), GraphError>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        if n > MAX_NODES {
            return Err(GraphError::TooManyNodes(n));
        }
        let mut summary = BuildSummary::default();
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for node in [u, v] {
                if node as usize >= n {
                    return Err(GraphError::NodeOutOfRange { node, n });
                }
            }
            if u == v {
                summary.self_loops += 1;
                continue;
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        let before = pairs.len();
        pairs.dedup();
        summary.duplicate_edges = before - pairs.len();

        let mut degree = vec![0usize; n];
        for &(u, v) in &pairs {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0; offsets[n]];
        for &(u, v) in &pairs {
            targets[fill[u as usize]] = v;
            fill[u as usize] += 1;
            targets[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        for v in 0..n {
            targets[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Ok((
            Graph {
                offsets,
                targets,
                labels,
            },
            summary,
        ))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    /// Sorted neighbours of `v`.
    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: NodeId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        0..self.n() as NodeId
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.nodes().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// External identifier of `v`.
    pub fn label(&self, v: NodeId) -> &str {
        &self.labels[v as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn max_degree(&self) -> usize {
        self.nodes().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Number of neighbours of `v` inside `set`.
    pub fn degree_in(&self, v: NodeId, set: &NodeSet) -> usize {
        self.neighbors(v).iter().filter(|&&w| set.contains(w)).count()
    }

    /// Induced subgraph on `set`, relabelled densely in ascending id order.
    /// Returns the subgraph and the map from new ids to ids of `self`.
    /// Labels carry over.
    pub fn induced_subgraph(&self, set: &NodeSet) -> (Graph, Vec<NodeId>) {
        let to_parent: Vec<NodeId> = set.as_slice().to_vec();
        let mut to_local = vec![NodeId::MAX; self.n()];
        for (i, &v) in to_parent.iter().enumerate() {
            to_local[v as usize] = i as NodeId;
        }
        let mut offsets = Vec::with_capacity(to_parent.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for &v in &to_parent {
            // parent lists are sorted and the relabelling is monotone
            targets.extend(
                self.neighbors(v)
                    .iter()
                    .map(|&w| to_local[w as usize])
                    .filter(|&w| w != NodeId::MAX),
            );
            offsets.push(targets.len());
        }
        let labels = to_parent
            .iter()
            .map(|&v| self.labels[v as usize].clone())
            .collect();
        (
            Graph {
                offsets,
                targets,
                labels,
            },
            to_parent,
        )
    }
}

/// Builds a graph from edges between arbitrary external identifiers.
///
/// Identifiers are remapped densely: when every identifier is a non-negative
/// integer they are ordered numerically, otherwise lexicographically, so the
/// mapping does not depend on edge order. The original identifiers are kept as
/// node labels.
pub fn build_graph<L, I>(pairs: I) -> Result<(Graph, BuildSummary), GraphError>
where
    L: ToString,
    I: IntoIterator<Item = (L, L)>,
{
    let raw: Vec<(String, String)> = pairs
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let mut distinct: Vec<&str> = raw
        .iter()
        .flat_map(|(a, b)| [a.as_str(), b.as_str()])
        .collect();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() > MAX_NODES {
        return Err(GraphError::TooManyNodes(distinct.len()));
    }
    let numeric: Option<Vec<(u64, &str)>> = distinct
        .iter()
        .map(|&s| s.parse::<u64>().ok().map(|k| (k, s)))
        .collect();
    if let Some(mut keyed) = numeric {
        // "007" and "7" stay distinct nodes; ties break on the text
        keyed.sort_unstable();
        distinct = keyed.into_iter().map(|(_, s)| s).collect();
    }
    let index: HashMap<&str, NodeId> = distinct
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, i as NodeId))
        .collect();
    let edges: Vec<(NodeId, NodeId)> = raw
        .iter()
        .map(|(a, b)| (index[a.as_str()], index[b.as_str()]))
        .collect();
    let labels = distinct.iter().map(|s| s.to_string()).collect();
    Graph::assemble(index.len(), edges, labels)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn k33() -> Graph {
        let edges = (0..3).flat_map(|a| (3..6).map(move |b| (a, b)));
        Graph::from_edges(6, edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let n32 = n as NodeId;
        let edges = (0..n32).flat_map(|a| (a + 1..n32).map(move |b| (a, b)));
        Graph::from_edges(n, edges).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n as NodeId).map(|v| (v - 1, v))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let n32 = n as NodeId;
        Graph::from_edges(n, (0..n32).map(|v| (v, (v + 1) % n32))).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves as NodeId).map(|v| (0, v))).unwrap()
    }

    /// K5 on 0..5, node 5 adjacent to {2,3,4}, node 6 adjacent to {3,4,5}.
    pub fn k5_with_tail() -> Graph {
        let mut edges: Vec<(NodeId, NodeId)> =
            (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        edges.extend([(5, 2), (5, 3), (5, 4), (6, 3), (6, 4), (6, 5)]);
        Graph::from_edges(7, edges).unwrap()
    }

    /// K5 plus a pendant node 5 attached to node 0.
    pub fn k5_pendant() -> Graph {
        let mut edges: Vec<(NodeId, NodeId)> =
            (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        edges.push((0, 5));
        Graph::from_edges(6, edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn build_drops_loops_and_duplicates() {
        let (g, summary) = build_graph([(0, 1), (1, 0), (1, 1), (1, 2)]).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert_eq!(
            summary,
            BuildSummary {
                self_loops: 1,
                duplicate_edges: 1
            }
        );
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn build_empty() {
        let (g, _) = build_graph(Vec::<(u32, u32)>::new()).unwrap();
        assert_eq!((g.n(), g.m()), (0, 0));
    }

    #[test]
    fn k33_counts() {
        let g = k33();
        assert_eq!((g.n(), g.m()), (6, 9));
        assert!(g.nodes().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn numeric_labels_order_numerically() {
        let (g, _) = build_graph([("10", "2"), ("2", "33")]).unwrap();
        assert_eq!(g.labels(), &["2", "10", "33"]);
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn string_labels_order_lexicographically() {
        let (g, _) = build_graph([("bob", "alice"), ("carol", "bob")]).unwrap();
        assert_eq!(g.labels(), &["alice", "bob", "carol"]);
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn rejects_out_of_range_endpoint() {
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]).unwrap_err(),
            GraphError::NodeOutOfRange { node: 2, n: 2 }
        );
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = k5_with_tail();
        let mut total = 0;
        for v in g.nodes() {
            let nb = g.neighbors(v);
            assert!(nb.windows(2).all(|w| w[0] < w[1]));
            for &w in nb {
                assert!(g.neighbors(w).contains(&v));
                assert_ne!(w, v);
            }
            total += nb.len();
        }
        assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = k5_with_tail();
        let (sub, map) = g.induced_subgraph(&NodeSet::from_ids(7, [2, 4, 5, 6]));
        assert_eq!(map, vec![2, 4, 5, 6]);
        assert_eq!(sub.m(), 5);
        assert_eq!(sub.neighbors(2), &[0, 1, 3]);
        assert_eq!(sub.label(3), "6");
    }
}
