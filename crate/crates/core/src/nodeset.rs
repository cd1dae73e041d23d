use crate::graph::NodeId;

/// Set of node ids below a fixed universe size: a dense bitmap for O(1)
/// membership plus a sorted member list for iteration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NodeSet {
    words: Vec<u64>,
    members: Vec<NodeId>,
    universe: usize,
}

impl NodeSet {
    pub fn new(universe: usize) -> Self {
        NodeSet {
            words: vec![0; universe.div_ceil(64)],
            members: Vec::new(),
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        Self::from_ids(universe, 0..universe as NodeId)
    }

    /// # Panics
    ///
    /// If any id is not below `universe`.
    pub fn from_ids<I: IntoIterator<Item = NodeId>>(universe: usize, ids: I) -> Self {
        let mut set = NodeSet::new(universe);
        for v in ids {
            assert!(
                (v as usize) < universe,
                "node {v} outside universe of {universe}"
            );
            if !set.bit(v) {
                set.set_bit(v, true);
                set.members.push(v);
            }
        }
        set.members.sort_unstable();
        set
    }

    #[inline]
    fn bit(&self, v: NodeId) -> bool {
        let v = v as usize;
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    fn set_bit(&mut self, v: NodeId, on: bool) {
        let v = v as usize;
        if on {
            self.words[v / 64] |= 1 << (v % 64);
        } else {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    #[inline]
    pub fn contains(&self, v: NodeId) -> bool {
        (v as usize) < self.universe && self.bit(v)
    }

    /// Returns `true` if `v` was not already present.
    pub fn insert(&mut self, v: NodeId) -> bool {
        assert!((v as usize) < self.universe);
        if self.bit(v) {
            return false;
        }
        self.set_bit(v, true);
        let pos = self.members.partition_point(|&x| x < v);
        self.members.insert(pos, v);
        true
    }

    /// Returns `true` if `v` was present.
    pub fn remove(&mut self, v: NodeId) -> bool {
        if !self.contains(v) {
            return false;
        }
        self.set_bit(v, false);
        let pos = self.members.partition_point(|&x| x < v);
        self.members.remove(pos);
        true
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Members in ascending order.
    pub fn as_slice(&self) -> &[NodeId] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.members.iter().copied()
    }

    pub fn into_vec(self) -> Vec<NodeId> {
        self.members
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}
