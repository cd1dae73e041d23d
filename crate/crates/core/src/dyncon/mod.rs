//! Fully dynamic connectivity with polylogarithmic amortized updates.
//!
//! Level-structured spanning forests in the Holm–de Lichtenberg–Thorup style.
//! Every live edge has a level. Forest `F_i` spans the edges of level at least
//! `i`, with `F_0` a spanning forest of the whole live graph, and trees of
//! `F_i` have at most `n / 2^i` vertices. Deleting a tree edge searches for a
//! replacement level by level, raising the edges it inspects so that their
//! total work is paid for by level increases.

mod euler;

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::graph::{Graph, NodeId};
use crate::nodeset::NodeSet;
use euler::{EulerArena, NIL};

/// Canonical arc of a tree edge whose level equals the forest's level.
const TREE: u8 = 1;
/// Vertex with at least one non-tree edge at the forest's level.
const NONTREE: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DynConnError {
    #[error("node {0} does not exist")]
    UnknownNode(NodeId),
    #[error("node {0} has been removed")]
    DeadNode(NodeId),
    #[error("edge ({0}, {1}) is not live")]
    EdgeAbsent(NodeId, NodeId),
    #[error("edge ({0}, {1}) is already live")]
    EdgePresent(NodeId, NodeId),
    #[error("self-loop on node {0}")]
    SelfLoop(NodeId),
}

#[derive(Debug)]
struct EdgeRec {
    level: usize,
    tree: bool,
    /// Arc pair in `F_0..=F_level` for a tree edge.
    arcs: Vec<(u32, u32)>,
}

#[derive(Debug, Default)]
struct Level {
    /// Vertex node of each vertex in this forest, `NIL` until first needed.
    vnode: Vec<u32>,
    /// Non-tree edges of exactly this level.
    nontree: HashMap<NodeId, BTreeSet<NodeId>>,
}

#[derive(Debug)]
pub struct DynConn {
    alive: Vec<bool>,
    adj: Vec<BTreeSet<NodeId>>,
    edges: HashMap<(NodeId, NodeId), EdgeRec>,
    levels: Vec<Level>,
    arena: EulerArena,
}

fn key(u: NodeId, v: NodeId) -> (NodeId, NodeId) {
    (u.min(v), u.max(v))
}

impl DynConn {
    /// Nodes `0..n`, all live, no edges.
    pub fn new(n: usize) -> Self {
        DynConn {
            alive: vec![true; n],
            adj: vec![BTreeSet::new(); n],
            edges: HashMap::new(),
            levels: Vec::new(),
            arena: EulerArena::new(0x5eed_cafe),
        }
    }

    /// All edges of `G[scope]`. Nodes outside `scope` are absent.
    pub fn from_graph(g: &Graph, scope: &NodeSet) -> Self {
        let mut dc = DynConn::new(g.n());
        for v in g.nodes() {
            dc.alive[v as usize] = scope.contains(v);
        }
        for (u, v) in g.edges() {
            if scope.contains(u) && scope.contains(v) {
                dc.insert_edge(u, v).expect("graph edges are simple");
            }
        }
        dc
    }

    pub fn n(&self) -> usize {
        self.alive.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_live(&self, v: NodeId) -> bool {
        self.alive.get(v as usize).copied().unwrap_or(false)
    }

    fn check(&self, v: NodeId) -> Result<(), DynConnError> {
        match self.alive.get(v as usize) {
            None => Err(DynConnError::UnknownNode(v)),
            Some(false) => Err(DynConnError::DeadNode(v)),
            Some(true) => Ok(()),
        }
    }

    /// Live neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: NodeId) -> Result<impl Iterator<Item = NodeId> + '_, DynConnError> {
        self.check(v)?;
        Ok(self.adj[v as usize].iter().copied())
    }

    pub fn degree(&self, v: NodeId) -> Result<usize, DynConnError> {
        self.check(v)?;
        Ok(self.adj[v as usize].len())
    }

    /// Live edges as `(u, v)` with `u < v`, ascending.
    pub fn live_edges(&self) -> Vec<(NodeId, NodeId)> {
        let mut out: Vec<_> = self.edges.keys().copied().collect();
        out.sort_unstable();
        out
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.edges.contains_key(&key(u, v))
    }

    fn ensure_level(&mut self, i: usize) {
        while self.levels.len() <= i {
            self.levels.push(Level {
                vnode: vec![NIL; self.alive.len()],
                nontree: HashMap::new(),
            });
        }
    }

    fn vnode(&mut self, i: usize, v: NodeId) -> u32 {
        self.ensure_level(i);
        let slot = self.levels[i].vnode[v as usize];
        if slot != NIL {
            return slot;
        }
        let x = self.arena.new_vertex(v);
        self.levels[i].vnode[v as usize] = x;
        x
    }

    fn connected_at(&self, i: usize, u: NodeId, v: NodeId) -> bool {
        if u == v {
            return true;
        }
        let Some(level) = self.levels.get(i) else {
            return false;
        };
        let (x, y) = (level.vnode[u as usize], level.vnode[v as usize]);
        x != NIL && y != NIL && self.arena.same_tree(x, y)
    }

    pub fn connected(&self, u: NodeId, v: NodeId) -> Result<bool, DynConnError> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.connected_at(0, u, v))
    }

    fn link_tree_edge(&mut self, level: usize, u: NodeId, v: NodeId) -> Vec<(u32, u32)> {
        let mut arcs = Vec::with_capacity(level + 1);
        for i in 0..=level {
            let (x, y) = (self.vnode(i, u), self.vnode(i, v));
            arcs.push(self.arena.link(x, y));
        }
        self.arena.set_flag(arcs[level].0, TREE, true);
        arcs
    }

    fn add_nontree(&mut self, level: usize, u: NodeId, v: NodeId) {
        for (a, b) in [(u, v), (v, u)] {
            let x = self.vnode(level, a);
            self.levels[level].nontree.entry(a).or_default().insert(b);
            self.arena.set_flag(x, NONTREE, true);
        }
    }

    fn remove_nontree(&mut self, level: usize, u: NodeId, v: NodeId) {
        for (a, b) in [(u, v), (v, u)] {
            let lv = &mut self.levels[level];
            let set = lv.nontree.get_mut(&a).expect("non-tree edge recorded");
            set.remove(&b);
            if set.is_empty() {
                lv.nontree.remove(&a);
                let x = lv.vnode[a as usize];
                self.arena.set_flag(x, NONTREE, false);
            }
        }
    }

    pub fn insert_edge(&mut self, u: NodeId, v: NodeId) -> Result<(), DynConnError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(DynConnError::SelfLoop(u));
        }
        let k = key(u, v);
        if self.edges.contains_key(&k) {
            return Err(DynConnError::EdgePresent(k.0, k.1));
        }
        let rec = if self.connected_at(0, u, v) {
            self.add_nontree(0, k.0, k.1);
            EdgeRec {
                level: 0,
                tree: false,
                arcs: Vec::new(),
            }
        } else {
            EdgeRec {
                level: 0,
                tree: true,
                arcs: self.link_tree_edge(0, k.0, k.1),
            }
        };
        self.edges.insert(k, rec);
        self.adj[u as usize].insert(v);
        self.adj[v as usize].insert(u);
        Ok(())
    }

    pub fn delete_edge(&mut self, u: NodeId, v: NodeId) -> Result<(), DynConnError> {
        self.check(u)?;
        self.check(v)?;
        let k = key(u, v);
        let rec = self
            .edges
            .remove(&k)
            .ok_or(DynConnError::EdgeAbsent(k.0, k.1))?;
        self.adj[u as usize].remove(&v);
        self.adj[v as usize].remove(&u);
        if !rec.tree {
            self.remove_nontree(rec.level, k.0, k.1);
            return Ok(());
        }
        for &(a1, a2) in &rec.arcs {
            self.arena.cut(a1, a2);
        }
        for i in (0..=rec.level).rev() {
            if self.replace(i, k.0, k.1) {
                break;
            }
        }
        Ok(())
    }

    /// After the tree edge `(u, v)` was cut from `F_0..=F_i`, looks for a
    /// replacement among the level-`i` non-tree edges of the smaller side.
    fn replace(&mut self, i: usize, u: NodeId, v: NodeId) -> bool {
        let (xu, xv) = (self.vnode(i, u), self.vnode(i, v));
        let (ru, rv) = (self.arena.root(xu), self.arena.root(xv));
        let small = if self.arena.vertex_count(ru) <= self.arena.vertex_count(rv) {
            xu
        } else {
            xv
        };

        // raise the level-i tree edges of the smaller tree
        while let Some(arc) = self.arena.find_flag(self.arena.root(small), TREE) {
            let (a, b) = self.arena.arc(arc);
            self.arena.set_flag(arc, TREE, false);
            let (x, y) = (self.vnode(i + 1, a), self.vnode(i + 1, b));
            let pair = self.arena.link(x, y);
            self.arena.set_flag(pair.0, TREE, true);
            let rec = self.edges.get_mut(&key(a, b)).expect("tree edge recorded");
            rec.level = i + 1;
            rec.arcs.push(pair);
        }

        while let Some(node) = self.arena.find_flag(self.arena.root(small), NONTREE) {
            let x = self.arena.vertex(node);
            let y = *self.levels[i].nontree[&x]
                .first()
                .expect("flag implies a non-tree edge");
            let yn = self.vnode(i, y);
            self.remove_nontree(i, x, y);
            let k = key(x, y);
            if self.arena.same_tree(small, yn) {
                self.add_nontree(i + 1, x, y);
                self.edges.get_mut(&k).expect("non-tree edge recorded").level = i + 1;
            } else {
                let arcs = self.link_tree_edge(i, k.0, k.1);
                let rec = self.edges.get_mut(&k).expect("non-tree edge recorded");
                rec.level = i;
                rec.tree = true;
                rec.arcs = arcs;
                return true;
            }
        }
        false
    }

    /// Whether deleting `u` would disconnect some of its live neighbours from
    /// each other. Edges are removed temporarily and restored before
    /// returning, so the live edge set is unchanged. An isolated node never
    /// disconnects anything.
    pub fn node_removal_disconnects(&mut self, u: NodeId) -> Result<bool, DynConnError> {
        self.check(u)?;
        let nbrs: Vec<NodeId> = self.adj[u as usize].iter().copied().collect();
        let Some((&first, rest)) = nbrs.split_first() else {
            return Ok(false);
        };
        for &w in &nbrs {
            self.delete_edge(u, w)?;
        }
        let split = rest.iter().any(|&w| !self.connected_at(0, first, w));
        for &w in &nbrs {
            self.insert_edge(u, w)?;
        }
        Ok(split)
    }

    /// Deletes every edge at `u` and marks it dead.
    pub fn commit_node_removal(&mut self, u: NodeId) -> Result<(), DynConnError> {
        self.check(u)?;
        let nbrs: Vec<NodeId> = self.adj[u as usize].iter().copied().collect();
        for w in nbrs {
            self.delete_edge(u, w)?;
        }
        self.alive[u as usize] = false;
        Ok(())
    }

    /// Consistency of levels, flags and forests; test helper.
    #[cfg(test)]
    fn validate(&self) {
        for (&(u, v), rec) in &self.edges {
            if rec.tree {
                assert_eq!(rec.arcs.len(), rec.level + 1);
                for (i, &(a1, _)) in rec.arcs.iter().enumerate() {
                    assert_eq!(self.arena.has_flag(a1, TREE), i == rec.level);
                }
            } else {
                assert!(self.levels[rec.level].nontree[&u].contains(&v));
                assert!(self.levels[rec.level].nontree[&v].contains(&u));
            }
            for i in 0..=rec.level {
                assert!(self.connected_at(i, u, v), "edge ({u},{v}) level {} not spanned at {i}", rec.level);
            }
        }
        for (i, level) in self.levels.iter().enumerate() {
            for (v, &x) in level.vnode.iter().enumerate() {
                if x != NIL {
                    let count = self.arena.vertex_count(self.arena.root(x)) as usize;
                    assert!(count <= (self.n() >> i).max(1), "level {i} tree too large");
                    assert_eq!(
                        self.arena.has_flag(x, NONTREE),
                        level.nontree.contains_key(&(v as NodeId))
                    );
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{articulation_points, connected_components};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn from_pairs(n: usize, pairs: &[(NodeId, NodeId)]) -> DynConn {
        let g = Graph::from_edges(n, pairs.iter().copied()).unwrap();
        DynConn::from_graph(&g, &NodeSet::full(n))
    }

    #[test]
    fn construction_examples() {
        let k33: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        let dc = from_pairs(6, &k33);
        assert!(dc.connected(0, 1).unwrap());
        let dc = from_pairs(4, &[(0, 1), (2, 3)]);
        assert!(!dc.connected(0, 2).unwrap());
        let dc = DynConn::new(0);
        assert_eq!(dc.connected(0, 1), Err(DynConnError::UnknownNode(0)));
    }

    #[test]
    fn scope_hides_outside_nodes() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let dc = DynConn::from_graph(&g, &NodeSet::from_ids(3, [0, 2]));
        assert_eq!(dc.num_edges(), 0);
        assert!(!dc.connected(0, 2).unwrap());
        assert_eq!(dc.connected(0, 1), Err(DynConnError::DeadNode(1)));
    }

    #[test]
    fn delete_and_reinsert() {
        let mut dc = from_pairs(3, &[(0, 1), (1, 2)]);
        dc.delete_edge(1, 2).unwrap();
        assert!(!dc.connected(0, 2).unwrap());
        dc.insert_edge(1, 2).unwrap();
        assert!(dc.connected(0, 2).unwrap());
        let mut cycle = from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        cycle.delete_edge(2, 3).unwrap();
        assert!(cycle.connected(0, 3).unwrap() && cycle.connected(2, 3).unwrap());
        cycle.validate();
    }

    #[test]
    fn contract_violations() {
        let mut dc = from_pairs(3, &[(0, 1)]);
        assert_eq!(dc.insert_edge(1, 0), Err(DynConnError::EdgePresent(0, 1)));
        assert_eq!(dc.delete_edge(1, 2), Err(DynConnError::EdgeAbsent(1, 2)));
        assert_eq!(dc.insert_edge(2, 2), Err(DynConnError::SelfLoop(2)));
        dc.commit_node_removal(0).unwrap();
        assert_eq!(dc.commit_node_removal(0), Err(DynConnError::DeadNode(0)));
        assert_eq!(dc.insert_edge(0, 2), Err(DynConnError::DeadNode(0)));
    }

    #[test]
    fn removal_test_examples() {
        let mut path = from_pairs(3, &[(0, 1), (1, 2)]);
        assert!(path.node_removal_disconnects(1).unwrap());
        assert!(!path.node_removal_disconnects(0).unwrap());
        let mut cycle = from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        for u in 0..5 {
            assert!(!cycle.node_removal_disconnects(u).unwrap());
        }
        let mut pairs: Vec<_> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        pairs.push((0, 5));
        let mut pendant = from_pairs(6, &pairs);
        assert!(pendant.node_removal_disconnects(0).unwrap());
        assert!(!pendant.node_removal_disconnects(5).unwrap());
        let mut lonely = from_pairs(2, &[]);
        assert!(!lonely.node_removal_disconnects(0).unwrap());
    }

    #[test]
    fn commit_examples() {
        let mut path = from_pairs(3, &[(0, 1), (1, 2)]);
        path.commit_node_removal(0).unwrap();
        assert!(path.connected(1, 2).unwrap());
        let mut tri = from_pairs(3, &[(0, 1), (1, 2), (0, 2)]);
        tri.commit_node_removal(0).unwrap();
        assert_eq!(tri.live_edges(), vec![(1, 2)]);
        let mut star = from_pairs(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        star.commit_node_removal(0).unwrap();
        for a in 1..5 {
            for b in a + 1..5 {
                assert!(!star.connected(a, b).unwrap());
            }
        }
    }

    fn bfs_connected(n: usize, edges: &BTreeSet<(NodeId, NodeId)>, u: NodeId, v: NodeId) -> bool {
        let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
        crate::graph::bfs_distances(&g, u, None)[v as usize].is_some()
    }

    #[test]
    fn stress_against_bfs_mirror() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (n, ops) in [(12usize, 3000), (60, 3000), (256, 4000)] {
            let mut dc = DynConn::new(n);
            let mut mirror = BTreeSet::new();
            for step in 0..ops {
                let u = rng.gen_range(0..n as NodeId);
                let v = rng.gen_range(0..n as NodeId);
                match rng.gen_range(0..3) {
                    _ if u == v => continue,
                    0 => {
                        let k = key(u, v);
                        if mirror.insert(k) {
                            dc.insert_edge(u, v).unwrap();
                        } else {
                            assert!(dc.insert_edge(u, v).is_err());
                        }
                    }
                    1 => {
                        // prefer deleting something that exists
                        let k = if mirror.is_empty() {
                            key(u, v)
                        } else {
                            *mirror.iter().nth(rng.gen_range(0..mirror.len())).unwrap()
                        };
                        if mirror.remove(&k) {
                            dc.delete_edge(k.0, k.1).unwrap();
                        } else {
                            assert!(dc.delete_edge(k.0, k.1).is_err());
                        }
                    }
                    _ => {
                        assert_eq!(
                            dc.connected(u, v).unwrap(),
                            bfs_connected(n, &mirror, u, v),
                            "n={n} step={step}"
                        );
                    }
                }
                if step % 500 == 0 {
                    dc.validate();
                }
            }
            dc.validate();
            assert_eq!(dc.live_edges(), mirror.iter().copied().collect::<Vec<_>>());
        }
    }

    #[test]
    fn removal_test_matches_articulation_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let n = rng.gen_range(2..40usize);
            let mut pairs: Vec<(NodeId, NodeId)> = (1..n as NodeId)
                .map(|v| (v, rng.gen_range(0..v)))
                .collect();
            for _ in 0..rng.gen_range(0..2 * n) {
                pairs.push((rng.gen_range(0..n as NodeId), rng.gen_range(0..n as NodeId)));
            }
            let g = Graph::from_edges(n, pairs).unwrap();
            assert_eq!(connected_components(&g, None).len(), 1);
            let aps = articulation_points(&g, None);
            let mut dc = DynConn::from_graph(&g, &NodeSet::full(n));
            let before = dc.live_edges();
            for u in g.nodes() {
                assert_eq!(dc.node_removal_disconnects(u).unwrap(), aps.contains(&u));
                assert_eq!(dc.live_edges(), before);
            }
            dc.validate();
        }
    }
}
