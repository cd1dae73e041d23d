//! Exact maximum Flexi-clique search.
//!
//! Connectivity-preserving branch and bound: every partial set stays
//! connected because branching only ever adds a neighbour of it. An incumbent
//! (seeded by the peeling heuristic) fixes the minimum degree θ any better
//! solution needs, which drives six pruning rules:
//!
//! 1. a member of `S` has adjusted degree below θ;
//! 2. the weakest member of `S` caps the solution size below `|S|`;
//! 3. the degree-diameter bound for a candidate exceeds the scope;
//! 4. that bound forces a threshold some member of `S` cannot meet;
//! 5. excluding a node drags its followers (nodes falling below θ) with it;
//! 6. only the θ-core of the graph is searched.

mod node;
mod rules;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bounds::{theta, PowTable};
use crate::flexi::{is_flexi, Algorithm, FlexiResult};
use crate::fpa::run_fpa;
use crate::graph::{core_decomposition, Graph, NodeId};
use crate::nodeset::NodeSet;
use crate::tau::Tau;

pub use node::{SearchNode, Slot};
pub use rules::{
    branch_order, compute_followers, exclude, filter_candidates, make_children, rule1_prune,
    rule2_prune, rule34_filter, rule6_reduce, scope_bound_prune, update_distances, Exclusion,
    FilterRules, Removal,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Rules 1 to 6, in order.
    pub rules: [bool; 6],
    /// Branch on candidates by ascending adjusted degree instead of by id.
    pub sort_candidates: bool,
    /// Start from the heuristic's solution instead of an empty incumbent.
    pub heuristic_seed: bool,
    pub time_budget: Option<Duration>,
    /// Verify structural invariants at every explored node.
    pub check_invariants: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            rules: [true; 6],
            sort_candidates: true,
            heuristic_seed: true,
            time_budget: None,
            check_invariants: false,
        }
    }
}

impl SolverConfig {
    /// # Panics
    ///
    /// If `rule` is not in `1..=6`.
    pub fn without_rule(mut self, rule: usize) -> Self {
        assert!((1..=6).contains(&rule), "rules are numbered 1 to 6");
        self.rules[rule - 1] = false;
        self
    }

    pub fn rule(&self, rule: usize) -> bool {
        self.rules[rule - 1]
    }

    /// Enabled rules as six `0`/`1` digits, then `s` or `u` for sorted or
    /// unsorted branching.
    pub fn rulemask(&self) -> String {
        let mut out: String = self.rules.iter().map(|&on| if on { '1' } else { '0' }).collect();
        out.push(if self.sort_candidates { 's' } else { 'u' });
        out
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneStats {
    pub explored_nodes: u64,
    pub prunes_rule1: u64,
    pub prunes_rule2: u64,
    pub prunes_rule3: u64,
    pub prunes_rule4: u64,
    pub prunes_rule5: u64,
    pub prunes_rule6: u64,
    pub prunes_scope_bound: u64,
    pub incumbent_updates: u64,
    pub invariant_violations: u64,
}

impl PruneStats {
    /// Prune counts for rules 1 to 6.
    pub fn rule_prunes(&self) -> [u64; 6] {
        [
            self.prunes_rule1,
            self.prunes_rule2,
            self.prunes_rule3,
            self.prunes_rule4,
            self.prunes_rule5,
            self.prunes_rule6,
        ]
    }
}

#[derive(Clone, Debug)]
pub struct EbaOutcome {
    pub result: FlexiResult,
    pub stats: PruneStats,
    /// `false` when the time budget ran out before the search finished.
    pub optimal: bool,
}

struct Solver<'a> {
    g: &'a Graph,
    to_global: Vec<NodeId>,
    tau: Tau,
    cfg: &'a SolverConfig,
    pow: PowTable,
    core: Vec<u32>,
    alive: Vec<bool>,
    /// Incumbent in global ids.
    best: Vec<NodeId>,
    theta: u32,
    stats: PruneStats,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Solver<'_> {
    fn filter_rules(&self) -> FilterRules {
        FilterRules {
            low_degree: self.cfg.rule(5),
            diameter: self.cfg.rule(3),
            degree_diameter: self.cfg.rule(4),
        }
    }

    fn set_incumbent(&mut self, members: Vec<NodeId>) {
        self.best = members;
        self.theta = theta(self.best.len() as u64, self.tau) as u32;
        if self.cfg.rule(6) {
            for (a, &c) in self.alive.iter_mut().zip(&self.core) {
                *a = c >= self.theta;
            }
        }
    }

    fn out_of_time(&mut self) -> bool {
        if !self.timed_out {
            self.timed_out = self.deadline.is_some_and(|d| Instant::now() >= d);
        }
        self.timed_out
    }

    fn search(&mut self, node: SearchNode) {
        if self.out_of_time() {
            return;
        }
        self.stats.explored_nodes += 1;
        if self.cfg.check_invariants {
            self.stats.invariant_violations += node.violations(self.g).len() as u64;
        }
        if !node.partial().is_empty() {
            if self.cfg.rule(1) && rule1_prune(&node, self.theta) {
                self.stats.prunes_rule1 += 1;
                return;
            }
            if self.cfg.rule(2) && rule2_prune(&node, self.g, self.tau) {
                self.stats.prunes_rule2 += 1;
                return;
            }
        }
        if scope_bound_prune(&node, self.best.len()) {
            self.stats.prunes_scope_bound += 1;
            return;
        }

        let sorted = self.cfg.sort_candidates;
        let mut base = node.clone();
        for v in branch_order(&node, sorted) {
            if !base.is_candidate(v) {
                continue;
            }
            let mut child = base.clone();
            child.add_to_partial(self.g, v, sorted);
            if self.cfg.check_invariants {
                self.check_growth(&base, &child);
            }
            if child.partial().len() > self.best.len()
                && is_flexi(self.g, &child.partial_set(), self.tau)
            {
                let members = child.partial().iter().map(|&u| self.to_global[u as usize]).collect();
                self.set_incumbent(members);
                self.stats.incumbent_updates += 1;
            }
            if self.prepare(&mut child, v) {
                self.search(child);
            }
            if self.timed_out {
                return;
            }
            let before = base.scope_len();
            let exclusion = exclude(&mut base, self.g, v, self.theta, self.cfg.rule(5));
            if self.cfg.check_invariants && !exclusion.kill && base.scope_len() >= before {
                self.stats.invariant_violations += 1;
            }
            if exclusion.kill {
                self.stats.prunes_rule5 += 1;
                break;
            }
            self.stats.prunes_rule5 += exclusion.followers.len() as u64;
        }
    }

    /// Refreshes distances and filters the child's candidates. Returns
    /// `false` if the child is already hopeless.
    fn prepare(&mut self, child: &mut SearchNode, added: NodeId) -> bool {
        let rule6 = self.cfg.rule(6);
        if rule6 && child.partial().iter().any(|&u| !self.alive[u as usize]) {
            self.stats.prunes_rule6 += 1;
            return false;
        }
        let rules = self.filter_rules();
        if rules.diameter || rules.degree_diameter {
            update_distances(child, self.g, added);
        }
        let alive = rule6.then_some(self.alive.as_slice());
        let removed = filter_candidates(child, self.g, self.theta, &self.pow, rules, alive);
        for (_, reason) in removed {
            let counter = match reason {
                Removal::NotAlive => &mut self.stats.prunes_rule6,
                Removal::LowDegree => &mut self.stats.prunes_rule5,
                Removal::Unreachable if rules.diameter => &mut self.stats.prunes_rule3,
                Removal::Unreachable => &mut self.stats.prunes_rule4,
                Removal::Diameter => &mut self.stats.prunes_rule3,
                Removal::DegreeDiameter => &mut self.stats.prunes_rule4,
            };
            *counter += 1;
        }
        true
    }

    /// A child's `S` strictly extends its parent's and its scope never grows.
    fn check_growth(&mut self, parent: &SearchNode, child: &SearchNode) {
        let s_grows = child.partial().len() == parent.partial().len() + 1
            && parent.partial().iter().all(|&u| child.slot(u) == Slot::Partial);
        let d_kept = child.scope().iter().all(|&u| parent.in_scope(u));
        self.stats.invariant_violations += u64::from(!s_grows) + u64::from(!d_kept);
    }
}

/// Finds a maximum Flexi-clique. The result is empty when none exists, which
/// happens exactly for edgeless graphs.
pub fn run_eba(g: &Graph, tau: Tau, cfg: &SolverConfig) -> EbaOutcome {
    let start = Instant::now();
    let deadline = cfg.time_budget.map(|b| start + b);
    let mut stats = PruneStats::default();

    let seed = if cfg.heuristic_seed {
        let fpa = run_fpa(g, tau);
        if fpa.valid {
            fpa.members
        } else {
            Vec::new()
        }
    } else {
        Vec::new()
    };
    let theta0 = theta(seed.len() as u64, tau) as u32;
    let scope = if cfg.rule(6) {
        let core = rule6_reduce(g, theta0);
        stats.prunes_rule6 += (g.n() - core.len()) as u64;
        core
    } else {
        NodeSet::full(g.n())
    };
    let (local, to_global) = g.induced_subgraph(&scope);
    let core = core_decomposition(&local).core_number;

    let mut solver = Solver {
        g: &local,
        to_global,
        tau,
        cfg,
        pow: PowTable::new(tau, local.n() + 1),
        alive: vec![true; local.n()],
        core,
        best: Vec::new(),
        theta: theta0,
        stats,
        deadline,
        timed_out: false,
    };
    solver.set_incumbent(seed);
    solver.search(SearchNode::root(&local, &NodeSet::full(local.n())));

    let mut members = solver.best;
    members.sort_unstable();
    let valid = !members.is_empty();
    debug_assert!(!valid || is_flexi(g, &NodeSet::from_ids(g.n(), members.iter().copied()), tau));
    EbaOutcome {
        result: FlexiResult {
            members,
            valid,
            runtime: start.elapsed(),
            algorithm: Algorithm::Eba,
        },
        stats: solver.stats,
        optimal: !solver.timed_out,
    }
}
