use super::{Graph, NodeId};
use crate::nodeset::NodeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreDecomposition {
    pub core_number: Vec<u32>,
    pub max_core: u32,
}

impl CoreDecomposition {
    /// Nodes with core number at least `k`.
    pub fn k_core(&self, k: u32) -> NodeSet {
        let n = self.core_number.len();
        NodeSet::from_ids(
            n,
            (0..n as NodeId).filter(|&v| self.core_number[v as usize] >= k),
        )
    }
}

/// Core numbers by bucket peeling in `O(n + m)`.
pub fn core_decomposition(g: &Graph) -> CoreDecomposition {
    let n = g.n();
    if n == 0 {
        return CoreDecomposition {
            core_number: Vec::new(),
            max_core: 0,
        };
    }
    let mut deg: Vec<usize> = g.nodes().map(|v| g.degree(v)).collect();
    let max_deg = *deg.iter().max().unwrap();

    // nodes laid out sorted by current degree; bin[d] is where degree d starts
    let mut bin = vec![0usize; max_deg + 1];
    for &d in &deg {
        bin[d] += 1;
    }
    let mut start = 0;
    for b in bin.iter_mut() {
        let count = *b;
        *b = start;
        start += count;
    }
    let mut order = vec![0 as NodeId; n];
    let mut pos = vec![0usize; n];
    for v in 0..n {
        pos[v] = bin[deg[v]];
        order[pos[v]] = v as NodeId;
        bin[deg[v]] += 1;
    }
    for d in (1..=max_deg).rev() {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    for i in 0..n {
        let v = order[i];
        for &w in g.neighbors(v) {
            let wi = w as usize;
            if deg[wi] > deg[v as usize] {
                // swap w with the first node of its bin, then shrink the bin
                let dw = deg[wi];
                let first = bin[dw];
                let u = order[first];
                if u != w {
                    order.swap(first, pos[wi]);
                    pos[u as usize] = pos[wi];
                    pos[wi] = first;
                }
                bin[dw] += 1;
                deg[wi] -= 1;
            }
        }
    }
    let core_number: Vec<u32> = deg.into_iter().map(|d| d as u32).collect();
    let max_core = core_number.iter().copied().max().unwrap_or(0);
    CoreDecomposition {
        core_number,
        max_core,
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reference_cores() {
        assert_eq!(core_decomposition(&complete(5)).core_number, vec![4; 5]);
        assert_eq!(core_decomposition(&star(5)).core_number, vec![1; 6]);
        let c = core_decomposition(&k5_with_tail());
        assert_eq!(c.core_number, vec![4, 4, 4, 4, 4, 3, 3]);
        assert_eq!(c.max_core, 4);
        let c = core_decomposition(&Graph::from_edges(3, [(0, 1)]).unwrap());
        assert_eq!(c.core_number, vec![1, 1, 0]);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::from_edges(0, []).unwrap();
        assert_eq!(core_decomposition(&g).max_core, 0);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((0..n as NodeId, 0..n as NodeId), 0..n * 4)
                .prop_map(move |edges| Graph::from_edges(n, edges).unwrap())
        })
    }

    proptest! {
        #[test]
        fn cores_are_valid_and_maximal(g in arb_graph(64)) {
            let c = core_decomposition(&g);
            for k in 0..=c.max_core + 1 {
                let core = c.k_core(k);
                for v in core.iter() {
                    prop_assert!(g.degree_in(v, &core) >= k as usize);
                }
                // maximality: peeling the whole graph down to min degree k
                // leaves exactly the k-core
                let mut rest = NodeSet::full(g.n());
                loop {
                    let weak: Vec<NodeId> = rest
                        .iter()
                        .filter(|&v| g.degree_in(v, &rest) < k as usize)
                        .collect();
                    if weak.is_empty() {
                        break;
                    }
                    for v in weak {
                        rest.remove(v);
                    }
                }
                prop_assert_eq!(rest.as_slice(), core.as_slice());
            }
        }
    }
}
