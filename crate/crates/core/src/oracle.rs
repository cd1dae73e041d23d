//! Exhaustive search over node subsets, for small graphs only.
//!
//! Deliberately naive: every subset is checked from scratch with bitmask
//! degree counts and a bitmask flood fill, sharing no code with the solvers
//! beyond the threshold arithmetic.

use std::collections::BTreeSet;
use std::time::Instant;

use thiserror::Error;

use crate::bounds::floor_pow;
use crate::flexi::{Algorithm, FlexiResult};
use crate::graph::{Graph, NodeId};
use crate::tau::Tau;

/// Largest graph the oracle accepts by default.
pub const DEFAULT_NODE_CAP: usize = 20;

/// Hard limit of the 32-bit subset masks.
const MASK_BITS: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} nodes; the brute-force oracle is limited to {cap}")]
    TooLarge { n: usize, cap: usize },
}

struct Masks {
    adj: Vec<u32>,
    need: Vec<u32>,
}

impl Masks {
    fn new(g: &Graph, tau: Tau, cap: usize) -> Result<Self, OracleError> {
        let cap = cap.min(MASK_BITS);
        if g.n() > cap {
            return Err(OracleError::TooLarge { n: g.n(), cap });
        }
        let adj = g
            .nodes()
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        let need = (0..=g.n() as u64).map(|s| floor_pow(s, tau) as u32).collect();
        Ok(Masks { adj, need })
    }

    fn valid(&self, set: u32) -> bool {
        if set == 0 {
            return false;
        }
        let need = self.need[set.count_ones() as usize];
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (self.adj[v] & set).count_ones() < need {
                return false;
            }
        }
        let mut reached = set & set.wrapping_neg();
        loop {
            let mut grown = reached;
            let mut frontier = reached;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                grown |= self.adj[v] & set;
            }
            if grown == reached {
                return reached == set;
            }
            reached = grown;
        }
    }
}

/// All masks over `n` bits with exactly `k` set bits, ascending.
fn masks_with_popcount(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << n;
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut next = Some(first).filter(|&m| m < limit);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let m = (((r ^ cur) >> 2) / c) | r;
            Some(m).filter(|&m| m < limit)
        };
        Some(cur as u32)
    })
}

fn members_of(mask: u32) -> Vec<NodeId> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// A maximum Flexi-clique by exhaustive search: sizes are tried from largest
/// to smallest and the numerically smallest valid mask of the first size that
/// has one wins. Empty when none exists.
pub fn brute_force_max_flexi(g: &Graph, tau: Tau, node_cap: usize) -> Result<FlexiResult, OracleError> {
    let start = Instant::now();
    let masks = Masks::new(g, tau, node_cap)?;
    for k in (1..=g.n()).rev() {
        if let Some(mask) = masks_with_popcount(g.n(), k).find(|&m| masks.valid(m)) {
            return Ok(FlexiResult {
                members: members_of(mask),
                valid: true,
                runtime: start.elapsed(),
                algorithm: Algorithm::Oracle,
            });
        }
    }
    Ok(FlexiResult::empty(Algorithm::Oracle, start.elapsed()))
}

/// Every size for which some Flexi-clique exists.
pub fn all_flexi_sizes(g: &Graph, tau: Tau) -> Result<BTreeSet<usize>, OracleError> {
    let masks = Masks::new(g, tau, DEFAULT_NODE_CAP)?;
    Ok((1..=g.n())
        .filter(|&k| masks_with_popcount(g.n(), k).any(|m| masks.valid(m)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flexi::is_flexi;
    use crate::graph::fixtures::*;
    use crate::nodeset::NodeSet;

    fn tau(p: u32, q: u32) -> Tau {
        Tau::new(p, q).unwrap()
    }

    fn oracle_size(g: &Graph, t: Tau) -> usize {
        brute_force_max_flexi(g, t, DEFAULT_NODE_CAP).unwrap().size()
    }

    #[test]
    fn gosper_enumerates_binomials() {
        assert_eq!(masks_with_popcount(5, 2).count(), 10);
        assert_eq!(masks_with_popcount(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(masks_with_popcount(3, 3).collect::<Vec<_>>(), vec![7]);
        assert_eq!(masks_with_popcount(20, 10).count(), 184_756);
        let v: Vec<_> = masks_with_popcount(4, 2).collect();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn reference_sizes() {
        assert_eq!(oracle_size(&k33(), tau(3, 4)), 6);
        assert_eq!(oracle_size(&path(6), tau(3, 4)), 2);
        assert_eq!(oracle_size(&Graph::from_edges(5, []).unwrap(), tau(1, 2)), 0);
        let r = brute_force_max_flexi(&path(6), tau(3, 4), 20).unwrap();
        assert_eq!(r.members, vec![0, 1], "smallest mask wins ties");
    }

    #[test]
    fn refuses_large_graphs() {
        assert_eq!(
            brute_force_max_flexi(&path(21), Tau::ZERO, 20).unwrap_err(),
            OracleError::TooLarge { n: 21, cap: 20 }
        );
        assert!(brute_force_max_flexi(&path(8), Tau::ZERO, 7).is_err());
    }

    #[test]
    fn size_sets() {
        let sizes = all_flexi_sizes(&k33(), tau(3, 4)).unwrap();
        assert_eq!(sizes, BTreeSet::from([2, 4, 6]));
        assert_eq!(all_flexi_sizes(&path(2), tau(1, 2)).unwrap(), BTreeSet::from([2]));
        assert_eq!(all_flexi_sizes(&complete(3), tau(3, 4)).unwrap(), BTreeSet::from([2, 3]));
    }

    #[test]
    fn non_heredity_witness() {
        let g = k33();
        let t = tau(3, 4);
        assert!(is_flexi(&g, &NodeSet::full(6), t));
        // a 4-cycle across the bipartition
        assert!(is_flexi(&g, &NodeSet::from_ids(6, [0, 1, 3, 4]), t));
        for drop in 0..6 {
            let five = NodeSet::from_ids(6, (0..6).filter(|&v| v != drop));
            assert!(!is_flexi(&g, &five, t));
        }
    }

    #[test]
    fn oracle_agrees_with_predicate_and_is_maximal() {
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..60 {
            let n = rng.gen_range(1..11usize);
            let edges: Vec<_> = (0..rng.gen_range(0..3 * n))
                .map(|_| (rng.gen_range(0..n as NodeId), rng.gen_range(0..n as NodeId)))
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            for t in [Tau::ZERO, tau(1, 2), tau(3, 4)] {
                let r = brute_force_max_flexi(&g, t, 20).unwrap();
                if r.valid {
                    assert!(is_flexi(&g, &NodeSet::from_ids(n, r.members.iter().copied()), t));
                }
                // no larger subset passes the independent predicate
                for mask in 0u32..1 << n {
                    if mask.count_ones() as usize > r.size() {
                        let set = NodeSet::from_ids(n, members_of(mask));
                        assert!(!is_flexi(&g, &set, t));
                    }
                }
            }
        }
    }
}
