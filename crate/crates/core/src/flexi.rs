use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::bounds::floor_pow;
use crate::graph::{is_connected, Graph, NodeId};
use crate::nodeset::NodeSet;
use crate::tau::Tau;

/// Whether `candidate` is a Flexi-clique of `g`: non-empty, connected, and
/// every member has at least `⌊|candidate|^τ⌋` neighbours inside it.
///
/// Singletons never qualify since the threshold is at least 1.
pub fn is_flexi(g: &Graph, candidate: &NodeSet, tau: Tau) -> bool {
    if candidate.is_empty() {
        return false;
    }
    let need = floor_pow(candidate.len() as u64, tau) as usize;
    candidate.iter().all(|v| g.degree_in(v, candidate) >= need) && is_connected(g, candidate)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Fpa,
    Eba,
    Oracle,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Fpa => "fpa",
            Algorithm::Eba => "eba",
            Algorithm::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlexiResult {
    /// Members in ascending id order.
    pub members: Vec<NodeId>,
    pub valid: bool,
    pub runtime: Duration,
    pub algorithm: Algorithm,
}

impl FlexiResult {
    pub fn empty(algorithm: Algorithm, runtime: Duration) -> Self {
        FlexiResult {
            members: Vec::new(),
            valid: false,
            runtime,
            algorithm,
        }
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}
