//! Seeded random graphs.

use std::collections::BTreeSet;

use flexi_core::{Graph, NodeId, NodeSet};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{m} edges requested but {n} nodes allow at most {max}")]
    TooManyEdges { n: usize, m: usize, max: usize },
    #[error("planted clique of {size} nodes does not fit in {n} nodes")]
    CliqueTooLarge { size: usize, n: usize },
    #[error("{0} nodes is more than the generator supports")]
    TooManyNodes(usize),
}

fn max_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `m` distinct node pairs drawn uniformly by rejection. Dense requests
/// sample the missing pairs instead so the loop stays short.
fn sample_pairs(rng: &mut ChaCha8Rng, n: usize, m: usize) -> BTreeSet<(NodeId, NodeId)> {
    let max = max_edges(n);
    let complement = m > max / 2;
    let want = if complement { max - m } else { m };
    let mut picked = BTreeSet::new();
    while picked.len() < want {
        let u = rng.gen_range(0..n as NodeId);
        let v = rng.gen_range(0..n as NodeId);
        if u != v {
            picked.insert((u.min(v), u.max(v)));
        }
    }
    if !complement {
        return picked;
    }
    let mut all = BTreeSet::new();
    for u in 0..n as NodeId {
        for v in u + 1..n as NodeId {
            if !picked.contains(&(u, v)) {
                all.insert((u, v));
            }
        }
    }
    all
}

fn check_size(n: usize, m: usize) -> Result<(), GenError> {
    if n > i32::MAX as usize {
        return Err(GenError::TooManyNodes(n));
    }
    let max = max_edges(n);
    if m > max {
        return Err(GenError::TooManyEdges { n, m, max });
    }
    Ok(())
}

/// Uniform simple graph with `n` nodes and exactly `m` edges.
pub fn gen_er(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    check_size(n, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = sample_pairs(&mut rng, n, m);
    Ok(Graph::from_edges(n, edges).expect("sampled ids are in range"))
}

/// Random background of `m_background` edges plus a clique on
/// `clique_size` randomly chosen nodes. Background and clique edges may
/// coincide, so the edge count can be below the sum.
pub fn gen_planted(
    n: usize,
    m_background: usize,
    clique_size: usize,
    seed: u64,
) -> Result<(Graph, NodeSet), GenError> {
    check_size(n, m_background)?;
    if clique_size > n {
        return Err(GenError::CliqueTooLarge { size: clique_size, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = sample_pairs(&mut rng, n, m_background);
    let planted = NodeSet::from_ids(
        n,
        sample(&mut rng, n, clique_size).into_iter().map(|v| v as NodeId),
    );
    let members = planted.as_slice();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            edges.insert((u, v));
        }
    }
    let g = Graph::from_edges(n, edges).expect("sampled ids are in range");
    Ok((g, planted))
}
