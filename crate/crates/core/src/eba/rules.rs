//! Pruning rules and branching steps, each usable on its own.
//!
//! All of them assume a best known solution of some size and only rule out
//! solutions that are not strictly larger. `theta` is the minimum degree such
//! a solution needs, `⌊(best + 1)^τ⌋`.

use std::collections::VecDeque;

use super::node::{SearchNode, Slot, INF};
use crate::bounds::{degree_diameter_bound, floor_invpow, PowTable};
use crate::flexi::is_flexi;
use crate::graph::{core_decomposition, Graph, NodeId};
use crate::nodeset::NodeSet;
use crate::tau::Tau;

/// Some member of `S` is already too weak inside the scope.
pub fn rule1_prune(node: &SearchNode, theta: u32) -> bool {
    node.min_partial_degree().is_some_and(|d| d < theta)
}

/// The weakest member of `S` caps the size of any solution containing `S`;
/// prune when `S` already exceeds the cap, or meets it without being valid.
pub fn rule2_prune(node: &SearchNode, g: &Graph, tau: Tau) -> bool {
    let Some(d) = node.min_partial_degree() else {
        return false;
    };
    let Some(cap) = floor_invpow(u64::from(d) + 1, tau) else {
        return false;
    };
    let size = node.partial().len() as u64;
    size > cap || (size == cap && !is_flexi(g, &node.partial_set(), tau))
}

/// No strictly larger solution fits in the remaining scope.
pub fn scope_bound_prune(node: &SearchNode, best_size: usize) -> bool {
    node.scope_len() <= best_size
}

/// Raises every in-scope distance label to at least its distance from
/// `added` inside the scope, or to infinity when unreachable.
pub fn update_distances(node: &mut SearchNode, g: &Graph, added: NodeId) {
    let mut seen = vec![INF; g.n()];
    seen[added as usize] = 0;
    let mut queue = VecDeque::from([added]);
    while let Some(u) = queue.pop_front() {
        let next = seen[u as usize] + 1;
        for &w in g.neighbors(u) {
            if seen[w as usize] == INF && node.in_scope(w) {
                seen[w as usize] = next;
                queue.push_back(w);
            }
        }
    }
    for v in node.scope() {
        node.raise_dist(v, seen[v as usize]);
    }
}

/// The θ-core: nodes that can belong to a Flexi-clique larger than the
/// incumbent.
pub fn rule6_reduce(g: &Graph, theta: u32) -> NodeSet {
    core_decomposition(g).k_core(theta)
}

/// Why a candidate was filtered out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Removal {
    /// Outside the θ-core of the current incumbent.
    NotAlive,
    /// Adjusted degree below θ.
    LowDegree,
    /// Cannot reach `S` inside the scope.
    Unreachable,
    /// The degree-diameter bound exceeds the scope size.
    Diameter,
    /// The degree-diameter bound forces a threshold some member of `S` misses.
    DegreeDiameter,
}

/// Which candidate filters are active.
#[derive(Clone, Copy, Debug)]
pub struct FilterRules {
    pub low_degree: bool,
    pub diameter: bool,
    pub degree_diameter: bool,
}

/// Removes candidates that cannot be part of a larger solution containing
/// `S`, repeating until nothing changes. Returns every removed node and the
/// first reason that applied. Candidates are only checked against distances
/// when one of the distance rules is on; `S` must be non-empty for those.
pub fn filter_candidates(
    node: &mut SearchNode,
    g: &Graph,
    theta: u32,
    pow: &PowTable,
    rules: FilterRules,
    alive: Option<&[bool]>,
) -> Vec<(NodeId, Removal)> {
    let use_dist = (rules.diameter || rules.degree_diameter) && !node.partial().is_empty();
    let mut removed = Vec::new();
    loop {
        let min_partial = node.min_partial_degree().map_or(u64::MAX, u64::from);
        let scope_len = node.scope_len() as u64;
        let before = removed.len();
        for u in node.candidates() {
            let dist = node.raw_dist(u);
            let bound = || degree_diameter_bound(u64::from(theta), u64::from(dist));
            let reason = if alive.is_some_and(|a| !a[u as usize]) {
                Some(Removal::NotAlive)
            } else if rules.low_degree && node.adjusted_degree(u) < theta {
                Some(Removal::LowDegree)
            } else if use_dist && dist == INF {
                Some(Removal::Unreachable)
            } else if use_dist && rules.diameter && bound() > scope_len {
                Some(Removal::Diameter)
            } else if use_dist && rules.degree_diameter && pow.get(bound()) > min_partial {
                Some(Removal::DegreeDiameter)
            } else {
                None
            };
            if let Some(r) = reason {
                node.remove_from_scope(g, u);
                removed.push((u, r));
            }
        }
        if removed.len() == before {
            return removed;
        }
    }
}

/// The distance-based filters alone: returns `(kept, removed)` candidates.
pub fn rule34_filter(
    node: &mut SearchNode,
    g: &Graph,
    theta: u32,
    tau: Tau,
) -> (Vec<NodeId>, Vec<NodeId>) {
    let pow = PowTable::new(tau, g.n());
    let rules = FilterRules {
        low_degree: false,
        diameter: true,
        degree_diameter: true,
    };
    let removed = filter_candidates(node, g, theta, &pow, rules, None);
    (node.candidates(), removed.into_iter().map(|(v, _)| v).collect())
}

/// Result of excluding one node from a scope.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Exclusion {
    /// Nodes that dropped below θ as a consequence, in removal order.
    pub followers: Vec<NodeId>,
    /// The cascade reached a member of `S`: no sibling to the right can
    /// succeed. The node is left partially updated in that case.
    pub kill: bool,
}

/// Takes `v` out of the scope. With `cascade`, every in-scope node whose
/// adjusted degree falls below θ follows it, transitively.
pub fn exclude(node: &mut SearchNode, g: &Graph, v: NodeId, theta: u32, cascade: bool) -> Exclusion {
    node.remove_from_scope(g, v);
    let mut result = Exclusion::default();
    if !cascade {
        return result;
    }
    let mut stack: Vec<NodeId> = g.neighbors(v).to_vec();
    while let Some(u) = stack.pop() {
        if !node.in_scope(u) || node.adjusted_degree(u) >= theta {
            continue;
        }
        if node.slot(u) == Slot::Partial {
            result.kill = true;
            return result;
        }
        node.remove_from_scope(g, u);
        result.followers.push(u);
        stack.extend(g.neighbors(u).iter().copied().filter(|&w| node.in_scope(w)));
    }
    result
}

/// Followers of excluding `v`, leaving `node` untouched.
pub fn compute_followers(node: &SearchNode, g: &Graph, v: NodeId, theta: u32) -> Exclusion {
    exclude(&mut node.clone(), g, v, theta, true)
}

/// Nodes to branch on, in order: at the root every candidate by ascending
/// adjusted degree (or id without sorting), otherwise the reachable list.
pub fn branch_order(node: &SearchNode, sorted: bool) -> Vec<NodeId> {
    if node.partial().is_empty() {
        let mut order = node.unreachable();
        if sorted {
            order.sort_by_key(|&v| (node.adjusted_degree(v), v));
        }
        order
    } else {
        node.reachable().collect()
    }
}

/// All children of `node`, built eagerly. The i-th child adds the i-th branch
/// node to `S`; earlier branch nodes and, with `cascade`, their followers are
/// excluded. Stops early when a cascade reaches `S`.
pub fn make_children(
    node: &SearchNode,
    g: &Graph,
    theta: u32,
    sorted: bool,
    cascade: bool,
) -> Vec<SearchNode> {
    let mut base = node.clone();
    let mut children = Vec::new();
    for v in branch_order(node, sorted) {
        if !base.is_candidate(v) {
            continue;
        }
        let mut child = base.clone();
        child.add_to_partial(g, v, sorted);
        children.push(child);
        if exclude(&mut base, g, v, theta, cascade).kill {
            break;
        }
    }
    children
}
