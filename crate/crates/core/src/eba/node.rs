use crate::graph::{is_connected, Graph, NodeId};
use crate::nodeset::NodeSet;

/// Distance label of a node that cannot reach the partial set.
pub(crate) const INF: u32 = u32::MAX;

/// Which of the four disjoint sets a node currently belongs to. `Out` covers
/// both the exclusion set and nodes that never were in scope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Out,
    Partial,
    Reachable,
    Unreachable,
}

/// One state of the connectivity-preserving branching: the partial set `S`,
/// reachable candidates `C^r` (adjacent to `S`, kept in branch order),
/// unreachable candidates `C^un`, and everything else excluded.
///
/// Adjusted degrees are degrees inside the scope `S ∪ C^r ∪ C^un`.
#[derive(Clone, Debug)]
pub struct SearchNode {
    slot: Vec<Slot>,
    adj: Vec<u32>,
    dist: Vec<u32>,
    partial: Vec<NodeId>,
    /// `(sort key at insertion, id)`, ascending.
    reachable: Vec<(u32, NodeId)>,
    scope_len: usize,
}

impl SearchNode {
    /// Empty partial set with every node of `scope` an unreachable candidate.
    pub fn root(g: &Graph, scope: &NodeSet) -> Self {
        let n = g.n();
        let mut slot = vec![Slot::Out; n];
        let mut adj = vec![0; n];
        for v in scope.iter() {
            slot[v as usize] = Slot::Unreachable;
            adj[v as usize] = g.degree_in(v, scope) as u32;
        }
        SearchNode {
            slot,
            adj,
            dist: vec![0; n],
            partial: Vec::new(),
            reachable: Vec::new(),
            scope_len: scope.len(),
        }
    }

    #[inline]
    pub fn slot(&self, v: NodeId) -> Slot {
        self.slot[v as usize]
    }

    #[inline]
    pub fn in_scope(&self, v: NodeId) -> bool {
        self.slot[v as usize] != Slot::Out
    }

    #[inline]
    pub fn is_candidate(&self, v: NodeId) -> bool {
        matches!(self.slot[v as usize], Slot::Reachable | Slot::Unreachable)
    }

    /// `S` in insertion order.
    pub fn partial(&self) -> &[NodeId] {
        &self.partial
    }

    pub fn partial_set(&self) -> NodeSet {
        NodeSet::from_ids(self.slot.len(), self.partial.iter().copied())
    }

    /// `C^r` in branch order.
    pub fn reachable(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.reachable.iter().map(|&(_, v)| v)
    }

    /// `C^un` ascending.
    pub fn unreachable(&self) -> Vec<NodeId> {
        self.ids_where(|s| s == Slot::Unreachable)
    }

    /// `C^r ∪ C^un` ascending.
    pub fn candidates(&self) -> Vec<NodeId> {
        self.ids_where(|s| matches!(s, Slot::Reachable | Slot::Unreachable))
    }

    /// `S ∪ C^r ∪ C^un` ascending.
    pub fn scope(&self) -> Vec<NodeId> {
        self.ids_where(|s| s != Slot::Out)
    }

    fn ids_where(&self, pred: impl Fn(Slot) -> bool) -> Vec<NodeId> {
        (0..self.slot.len() as NodeId)
            .filter(|&v| pred(self.slot[v as usize]))
            .collect()
    }

    pub fn scope_len(&self) -> usize {
        self.scope_len
    }

    #[inline]
    pub fn adjusted_degree(&self, v: NodeId) -> u32 {
        self.adj[v as usize]
    }

    /// Largest distance from `v` to any member of `S` seen so far, `None` if
    /// some member was unreachable. Meaningless while `S` is empty.
    pub fn dist(&self, v: NodeId) -> Option<u32> {
        Some(self.dist[v as usize]).filter(|&d| d != INF)
    }

    #[inline]
    pub(crate) fn raw_dist(&self, v: NodeId) -> u32 {
        self.dist[v as usize]
    }

    #[inline]
    pub(crate) fn raise_dist(&mut self, v: NodeId, d: u32) {
        let cur = &mut self.dist[v as usize];
        *cur = (*cur).max(d);
    }

    pub fn min_partial_degree(&self) -> Option<u32> {
        self.partial.iter().map(|&v| self.adj[v as usize]).min()
    }

    /// Moves candidate `v` into `S`; its unreachable neighbours become
    /// reachable. With `sorted`, reachable candidates are ordered by their
    /// adjusted degree at insertion, otherwise by id.
    pub fn add_to_partial(&mut self, g: &Graph, v: NodeId, sorted: bool) {
        debug_assert!(self.is_candidate(v));
        if self.slot[v as usize] == Slot::Reachable {
            self.drop_reachable(v);
        }
        self.slot[v as usize] = Slot::Partial;
        self.partial.push(v);
        for &w in g.neighbors(v) {
            if self.slot[w as usize] == Slot::Unreachable {
                self.slot[w as usize] = Slot::Reachable;
                let entry = (if sorted { self.adj[w as usize] } else { 0 }, w);
                let pos = self.reachable.partition_point(|&e| e < entry);
                self.reachable.insert(pos, entry);
            }
        }
    }

    fn drop_reachable(&mut self, v: NodeId) {
        let pos = self
            .reachable
            .iter()
            .position(|&(_, x)| x == v)
            .expect("reachable list out of sync");
        self.reachable.remove(pos);
    }

    /// Takes `v` out of the scope and updates adjusted degrees.
    pub fn remove_from_scope(&mut self, g: &Graph, v: NodeId) {
        match self.slot[v as usize] {
            Slot::Out => return,
            Slot::Reachable => self.drop_reachable(v),
            Slot::Partial => {
                self.partial.retain(|&x| x != v);
            }
            Slot::Unreachable => {}
        }
        self.slot[v as usize] = Slot::Out;
        self.scope_len -= 1;
        for &w in g.neighbors(v) {
            if self.in_scope(w) {
                self.adj[w as usize] -= 1;
            }
        }
    }

    /// Structural invariants that must hold at every explored node. Returns a
    /// description of each violated one.
    pub fn violations(&self, g: &Graph) -> Vec<&'static str> {
        let mut out = Vec::new();
        let scope = self.scope();
        if scope.len() != self.scope_len {
            out.push("scope size out of sync");
        }
        let in_s = self.ids_where(|s| s == Slot::Partial);
        let mut listed = self.partial.clone();
        listed.sort_unstable();
        if listed != in_s {
            out.push("partial list out of sync");
        }
        let mut cr: Vec<NodeId> = self.reachable().collect();
        cr.sort_unstable();
        if cr != self.ids_where(|s| s == Slot::Reachable) {
            out.push("reachable list out of sync");
        }
        if !self.partial.is_empty() && !is_connected(g, &self.partial_set()) {
            out.push("partial set disconnected");
        }
        for &v in &scope {
            let touches = g.neighbors(v).iter().any(|&w| self.slot[w as usize] == Slot::Partial);
            match self.slot[v as usize] {
                Slot::Reachable if !touches => out.push("reachable candidate without a partial neighbour"),
                Slot::Unreachable if touches => out.push("unreachable candidate next to the partial set"),
                _ => {}
            }
            let degree = g.neighbors(v).iter().filter(|&&w| self.in_scope(w)).count() as u32;
            if degree != self.adj[v as usize] {
                out.push("adjusted degree out of sync");
            }
        }
        out
    }
}
