//! Euler-tour sequences stored as implicit treaps.
//!
//! Every tree of a spanning forest is a cyclic sequence holding one node per
//! vertex and one node per arc (two per tree edge). Nodes of all forests share
//! one arena; sequences of different forests never mix. Each node carries a
//! small flag set whose OR over a subtree is maintained, so a flagged node can
//! be found from a root in logarithmic time.

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

pub(crate) const NIL: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct TNode {
    left: u32,
    right: u32,
    parent: u32,
    prio: u32,
    size: u32,
    vcount: u32,
    own: u8,
    agg: u8,
    /// Vertex id for a vertex node, arc tail otherwise.
    tail: u32,
    /// Arc head, `NIL` for a vertex node.
    head: u32,
}

#[derive(Debug)]
pub(crate) struct EulerArena {
    nodes: Vec<TNode>,
    free: Vec<u32>,
    rng: SmallRng,
}

impl EulerArena {
    pub fn new(seed: u64) -> Self {
        EulerArena {
            nodes: Vec::new(),
            free: Vec::new(),
            rng: SmallRng::seed_from_u64(seed),
        }
    }

    fn alloc(&mut self, tail: u32, head: u32) -> u32 {
        let node = TNode {
            left: NIL,
            right: NIL,
            parent: NIL,
            prio: self.rng.gen(),
            size: 1,
            vcount: u32::from(head == NIL),
            own: 0,
            agg: 0,
            tail,
            head,
        };
        match self.free.pop() {
            Some(i) => {
                self.nodes[i as usize] = node;
                i
            }
            None => {
                self.nodes.push(node);
                (self.nodes.len() - 1) as u32
            }
        }
    }

    /// A one-node sequence for vertex `v`.
    pub fn new_vertex(&mut self, v: u32) -> u32 {
        self.alloc(v, NIL)
    }

    fn release(&mut self, x: u32) {
        self.free.push(x);
    }

    /// `(tail, head)` of an arc node.
    pub fn arc(&self, x: u32) -> (u32, u32) {
        let n = &self.nodes[x as usize];
        debug_assert_ne!(n.head, NIL);
        (n.tail, n.head)
    }

    /// Vertex id of a vertex node.
    pub fn vertex(&self, x: u32) -> u32 {
        debug_assert_eq!(self.nodes[x as usize].head, NIL);
        self.nodes[x as usize].tail
    }

    #[inline]
    fn size(&self, x: u32) -> u32 {
        if x == NIL {
            0
        } else {
            self.nodes[x as usize].size
        }
    }

    #[inline]
    fn pull(&mut self, x: u32) {
        let (l, r) = {
            let n = &self.nodes[x as usize];
            (n.left, n.right)
        };
        let mut size = 1;
        let mut vcount = 0;
        let mut agg = 0;
        for c in [l, r] {
            if c != NIL {
                let cn = &self.nodes[c as usize];
                size += cn.size;
                vcount += cn.vcount;
                agg |= cn.agg;
            }
        }
        let n = &mut self.nodes[x as usize];
        n.size = size;
        n.vcount = vcount + u32::from(n.head == NIL);
        n.agg = agg | n.own;
    }

    #[inline]
    fn set_parent(&mut self, x: u32, p: u32) {
        if x != NIL {
            self.nodes[x as usize].parent = p;
        }
    }

    pub fn root(&self, mut x: u32) -> u32 {
        while self.nodes[x as usize].parent != NIL {
            x = self.nodes[x as usize].parent;
        }
        x
    }

    pub fn same_tree(&self, x: u32, y: u32) -> bool {
        self.root(x) == self.root(y)
    }

    /// Number of vertices in the tree whose sequence is rooted at `root`.
    pub fn vertex_count(&self, root: u32) -> u32 {
        self.nodes[root as usize].vcount
    }

    /// Zero-based position of `x` within its sequence.
    fn index(&self, mut x: u32) -> u32 {
        let mut idx = self.size(self.nodes[x as usize].left);
        loop {
            let p = self.nodes[x as usize].parent;
            if p == NIL {
                return idx;
            }
            if self.nodes[p as usize].right == x {
                idx += self.size(self.nodes[p as usize].left) + 1;
            }
            x = p;
        }
    }

    fn merge_inner(&mut self, a: u32, b: u32) -> u32 {
        if a == NIL {
            return b;
        }
        if b == NIL {
            return a;
        }
        if self.nodes[a as usize].prio > self.nodes[b as usize].prio {
            let r = self.nodes[a as usize].right;
            let m = self.merge_inner(r, b);
            self.nodes[a as usize].right = m;
            self.set_parent(m, a);
            self.pull(a);
            a
        } else {
            let l = self.nodes[b as usize].left;
            let m = self.merge_inner(a, l);
            self.nodes[b as usize].left = m;
            self.set_parent(m, b);
            self.pull(b);
            b
        }
    }

    /// Concatenates two sequences given by their roots.
    fn merge(&mut self, a: u32, b: u32) -> u32 {
        let r = self.merge_inner(a, b);
        self.set_parent(r, NIL);
        r
    }

    fn split_inner(&mut self, t: u32, k: u32) -> (u32, u32) {
        if t == NIL {
            return (NIL, NIL);
        }
        let l = self.nodes[t as usize].left;
        let ls = self.size(l);
        if k <= ls {
            let (a, b) = self.split_inner(l, k);
            self.nodes[t as usize].left = b;
            self.set_parent(b, t);
            self.pull(t);
            (a, t)
        } else {
            let r = self.nodes[t as usize].right;
            let (a, b) = self.split_inner(r, k - ls - 1);
            self.nodes[t as usize].right = a;
            self.set_parent(a, t);
            self.pull(t);
            (t, b)
        }
    }

    /// Splits the sequence rooted at `t` into its first `k` nodes and the rest.
    fn split(&mut self, t: u32, k: u32) -> (u32, u32) {
        let (a, b) = self.split_inner(t, k);
        self.set_parent(a, NIL);
        self.set_parent(b, NIL);
        (a, b)
    }

    /// Rotates the tour containing vertex node `v` so that it starts at `v`.
    fn reroot(&mut self, v: u32) -> u32 {
        let root = self.root(v);
        let k = self.index(v);
        if k == 0 {
            return root;
        }
        let (a, b) = self.split(root, k);
        self.merge(b, a)
    }

    /// Joins the trees of vertex nodes `u` and `v` (which must differ) with a
    /// new edge and returns its two arc nodes `(u→v, v→u)`.
    pub fn link(&mut self, u: u32, v: u32) -> (u32, u32) {
        debug_assert!(!self.same_tree(u, v));
        let (uid, vid) = (self.vertex(u), self.vertex(v));
        let ru = self.reroot(u);
        let rv = self.reroot(v);
        let a1 = self.alloc(uid, vid);
        let a2 = self.alloc(vid, uid);
        let left = self.merge(ru, a1);
        let left = self.merge(left, rv);
        self.merge(left, a2);
        (a1, a2)
    }

    /// Removes a tree edge given by its two arc nodes and frees them.
    pub fn cut(&mut self, a1: u32, a2: u32) {
        let root = self.root(a1);
        debug_assert_eq!(root, self.root(a2));
        let (mut i1, mut i2) = (self.index(a1), self.index(a2));
        if i1 > i2 {
            std::mem::swap(&mut i1, &mut i2);
        }
        // X a Y b Z  →  Y and X Z
        let (x, rest) = self.split(root, i1);
        let (_, rest) = self.split(rest, 1);
        let (_y, rest) = self.split(rest, i2 - i1 - 1);
        let (_, z) = self.split(rest, 1);
        self.merge(x, z);
        self.release(a1);
        self.release(a2);
    }

    #[cfg(test)]
    pub fn has_flag(&self, x: u32, bit: u8) -> bool {
        self.nodes[x as usize].own & bit != 0
    }

    pub fn set_flag(&mut self, x: u32, bit: u8, on: bool) {
        let n = &mut self.nodes[x as usize];
        let own = if on { n.own | bit } else { n.own & !bit };
        if own == n.own {
            return;
        }
        n.own = own;
        let mut cur = x;
        while cur != NIL {
            self.pull(cur);
            cur = self.nodes[cur as usize].parent;
        }
    }

    /// Some node carrying `bit` in the sequence rooted at `root`.
    pub fn find_flag(&self, root: u32, bit: u8) -> Option<u32> {
        if self.nodes[root as usize].agg & bit == 0 {
            return None;
        }
        let mut x = root;
        loop {
            let n = &self.nodes[x as usize];
            if n.own & bit != 0 {
                return Some(x);
            }
            x = if n.left != NIL && self.nodes[n.left as usize].agg & bit != 0 {
                n.left
            } else {
                n.right
            };
        }
    }

    /// The sequence containing `x`, in order. Test helper.
    #[cfg(test)]
    pub fn sequence(&self, x: u32) -> Vec<u32> {
        fn walk(a: &EulerArena, t: u32, out: &mut Vec<u32>) {
            if t == NIL {
                return;
            }
            let n = &a.nodes[t as usize];
            walk(a, n.left, out);
            out.push(t);
            walk(a, n.right, out);
        }
        let mut out = Vec::new();
        walk(self, self.root(x), &mut out);
        out
    }
}
