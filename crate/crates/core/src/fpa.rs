//! Core-seeded peeling heuristic.
//!
//! The seed is taken from the core hierarchy: find the smallest `k` whose
//! k-core has a largest component that already is a Flexi-clique, then step
//! one core level down to leave the peeling phase some room. Peeling then
//! repeatedly drops the lowest-degree member whose removal keeps the set
//! connected until the degree requirement is met.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::bounds::floor_pow;
use crate::dyncon::DynConn;
use crate::flexi::{is_flexi, Algorithm, FlexiResult};
use crate::graph::{bfs_distances, connected_components, core_decomposition, is_connected, Graph, NodeId};
use crate::nodeset::NodeSet;
use crate::tau::Tau;

/// Largest component of `G[within]`, ties to the one with the smallest id.
fn largest_component(g: &Graph, within: &NodeSet) -> Vec<NodeId> {
    let mut best: Vec<NodeId> = Vec::new();
    // components arrive ordered by smallest member, so strict > keeps ties
    for comp in connected_components(g, Some(within)) {
        if comp.len() > best.len() {
            best = comp;
        }
    }
    best
}

/// Starting set for peeling. Empty for an edgeless graph.
pub fn select_seed(g: &Graph, tau: Tau) -> NodeSet {
    let n = g.n();
    if g.m() == 0 {
        return NodeSet::new(n);
    }
    let cores = core_decomposition(g);
    for k in 1..=cores.max_core {
        let lcc = largest_component(g, &cores.k_core(k));
        if is_flexi(g, &NodeSet::from_ids(n, lcc.iter().copied()), tau) {
            let below = cores.k_core(k - 1);
            let dist = bfs_distances(g, lcc[0], Some(&below));
            return NodeSet::from_ids(n, g.nodes().filter(|&v| dist[v as usize].is_some()));
        }
    }
    NodeSet::from_ids(n, largest_component(g, &cores.k_core(cores.max_core)))
}

/// Peels the seed down to a Flexi-clique. Returns an invalid empty result if
/// the set shrinks below two nodes first.
pub fn run_fpa(g: &Graph, tau: Tau) -> FlexiResult {
    let start = Instant::now();
    let mut members = select_seed(g, tau);
    if members.len() < 2 {
        return FlexiResult::empty(Algorithm::Fpa, start.elapsed());
    }
    let mut dc = DynConn::from_graph(g, &members);
    let mut degree = vec![0usize; g.n()];
    let mut buckets: Vec<BTreeSet<NodeId>> = vec![BTreeSet::new(); g.max_degree() + 1];
    for v in members.iter() {
        degree[v as usize] = g.degree_in(v, &members);
        buckets[degree[v as usize]].insert(v);
    }

    while members.len() >= 2 {
        let min_degree = buckets.iter().position(|b| !b.is_empty()).unwrap_or(0);
        if min_degree as u64 >= floor_pow(members.len() as u64, tau) {
            debug_assert!(is_flexi(g, &members, tau));
            return FlexiResult {
                members: members.into_vec(),
                valid: true,
                runtime: start.elapsed(),
                algorithm: Algorithm::Fpa,
            };
        }
        let mut victim = None;
        'scan: for bucket in &buckets[min_degree..] {
            for &v in bucket {
                if !dc.node_removal_disconnects(v).expect("member is live") {
                    victim = Some(v);
                    break 'scan;
                }
            }
        }
        // some leaf of a spanning tree is never an articulation point
        let Some(v) = victim else { break };

        dc.commit_node_removal(v).expect("member is live");
        members.remove(v);
        buckets[degree[v as usize]].remove(&v);
        for &w in g.neighbors(v) {
            if members.contains(w) {
                let d = &mut degree[w as usize];
                buckets[*d].remove(&w);
                *d -= 1;
                buckets[*d].insert(w);
            }
        }
        debug_assert!(is_connected(g, &members));
    }
    FlexiResult::empty(Algorithm::Fpa, start.elapsed())
}
