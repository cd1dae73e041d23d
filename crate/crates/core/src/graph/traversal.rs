use std::collections::VecDeque;

use super::{Graph, NodeId};
use crate::nodeset::NodeSet;

/// Connected components, each sorted ascending, ordered by smallest member.
/// When `within` is given only those nodes and the edges between them count.
pub fn connected_components(g: &Graph, within: Option<&NodeSet>) -> Vec<Vec<NodeId>> {
    let inside = |v: NodeId| within.is_none_or(|s| s.contains(v));
    let mut seen = vec![false; g.n()];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for start in g.nodes() {
        if seen[start as usize] || !inside(start) {
            continue;
        }
        seen[start as usize] = true;
        queue.push_back(start);
        let mut comp = Vec::new();
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if !seen[w as usize] && inside(w) {
                    seen[w as usize] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// Whether the subgraph induced on `set` is connected. The empty set is not.
pub fn is_connected(g: &Graph, set: &NodeSet) -> bool {
    let Some(start) = set.iter().next() else {
        return false;
    };
    let dist = bfs_distances(g, start, Some(set));
    set.iter().all(|v| dist[v as usize].is_some())
}

/// Hop distances from `source`, `None` for unreachable nodes. When `within` is
/// given the search stays inside it; `source` itself must be a member.
pub fn bfs_distances(g: &Graph, source: NodeId, within: Option<&NodeSet>) -> Vec<Option<u32>> {
    let inside = |v: NodeId| within.is_none_or(|s| s.contains(v));
    let mut dist = vec![None; g.n()];
    if !inside(source) {
        return dist;
    }
    dist[source as usize] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = dist[u as usize].unwrap() + 1;
        for &w in g.neighbors(u) {
            if dist[w as usize].is_none() && inside(w) {
                dist[w as usize] = Some(next);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Articulation points of `G[within]` (the whole graph when `None`) in
/// ascending order.
///
/// Iterative Tarjan low-link search, so deep graphs do not overflow the stack.
pub fn articulation_points(g: &Graph, within: Option<&NodeSet>) -> Vec<NodeId> {
    const UNSEEN: u32 = u32::MAX;
    let inside = |v: NodeId| within.is_none_or(|s| s.contains(v));
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut parent = vec![NodeId::MAX; n];
    let mut is_cut = vec![false; n];
    // (node, index of the next neighbour to look at)
    let mut stack: Vec<(NodeId, usize)> = Vec::new();
    let mut clock = 0u32;

    for root in g.nodes() {
        if disc[root as usize] != UNSEEN || !inside(root) {
            continue;
        }
        disc[root as usize] = clock;
        low[root as usize] = clock;
        clock += 1;
        let mut root_children = 0;
        stack.push((root, 0));
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            let nb = g.neighbors(u);
            if *next < nb.len() {
                let w = nb[*next];
                *next += 1;
                if !inside(w) {
                    continue;
                }
                let ui = u as usize;
                let wi = w as usize;
                if disc[wi] == UNSEEN {
                    parent[wi] = u;
                    disc[wi] = clock;
                    low[wi] = clock;
                    clock += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, 0));
                } else if w != parent[ui] {
                    low[ui] = low[ui].min(disc[wi]);
                }
            } else {
                stack.pop();
                let p = parent[u as usize];
                if p != NodeId::MAX {
                    let (pi, ui) = (p as usize, u as usize);
                    low[pi] = low[pi].min(low[ui]);
                    if p != root && low[ui] >= disc[pi] {
                        is_cut[pi] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root as usize] = true;
        }
    }
    g.nodes().filter(|&v| is_cut[v as usize]).collect()
}
