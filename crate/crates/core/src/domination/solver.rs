//! Exact `gamma_{x k, t}(G_I)` by branch and bound over red cliques.
//!
//! For `k >= 2` a set `S` is a kTDS of an inflation exactly when every red
//! clique `X_i` keeps at least `k` members and, whenever it keeps exactly
//! `k`, each of those members has its blue partner in `S`. A member sees
//! only `|S ∩ X_i| - 1` red neighbours, so with `k` members it needs the
//! blue one; a non-member already sees `k`. The search fixes one clique
//! intersection at a time and propagates that forcing rule.

use std::time::{Duration, Instant};

use super::{check_k, generic_upper_set, is_ktds, Method, SolveResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::inflation::{inflate, InflatedGraph};
use crate::vertex_set::VertexSet;

pub const DEFAULT_MAX_NODES: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Search nodes allowed across the optimization and witness passes.
    pub max_nodes: u64,
    /// Wall-clock cap. Leave unset for reproducible runs.
    pub time_limit: Option<Duration>,
    /// Return the lexicographically least optimal witness rather than the first one found.
    pub lex_witness: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { max_nodes: DEFAULT_MAX_NODES, time_limit: None, lex_witness: true }
    }
}

pub fn solve_inflated(g: &Graph, k: usize) -> Result<SolveResult> {
    solve_inflated_with(g, k, &SolverConfig::default())
}

pub fn solve_inflated_with(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<SolveResult> {
    solve(&inflate(g)?, k, cfg)
}

/// Minimum kTDS of an already inflated graph.
pub fn solve(gi: &InflatedGraph, k: usize, cfg: &SolverConfig) -> Result<SolveResult> {
    let base = gi.base();
    check_k(base, k)?;
    let deadline = cfg.time_limit.map(|t| Instant::now() + t);
    let n = base.order();
    let mut floor = (n * k).max((2 * k * base.size()).div_ceil(base.max_degree()));
    if n % 2 == 1 && k % 2 == 1 {
        // n k would need a k-regular spanning subgraph of odd order and odd degree
        floor = floor.max(n * k + 1);
    }

    let start = generic_upper_set(gi, k)?;
    let mut budget = Budget { used: 0, max: cfg.max_nodes, deadline };
    let mut witness: Vec<usize> = start.iter().collect();

    if witness.len() > floor {
        let mut search = Search::new(gi, k, witness.len(), floor, false);
        let outcome = search.run(&[], &[], &mut budget);
        if outcome == Outcome::Aborted {
            let upper = search.best.as_ref().map_or(witness.len(), Vec::len);
            return Err(Error::Budget { lower: floor, upper, nodes: budget.used });
        }
        if let Some(better) = search.best {
            witness = better;
        }
    }
    let gamma = witness.len();

    if cfg.lex_witness {
        witness = least_witness(gi, k, gamma, witness, &mut budget).map_err(|_| Error::Budget {
            lower: gamma,
            upper: gamma,
            nodes: budget.used,
        })?;
    }

    let witness: VertexSet = witness.into_iter().collect();
    assert!(is_ktds(gi.graph(), &witness, k)?, "solver produced a non-dominating set");
    Ok(SolveResult { gamma, witness, method: Method::CliqueBnb, nodes_explored: budget.used })
}

/// Greedy lexicographic minimization: include each vertex in index order
/// whenever some optimum still contains it.
fn least_witness(
    gi: &InflatedGraph,
    k: usize,
    gamma: usize,
    mut current: Vec<usize>,
    budget: &mut Budget,
) -> std::result::Result<Vec<usize>, ()> {
    let total = gi.order();
    let mut fixed_in = Vec::new();
    let mut fixed_out = Vec::new();
    for v in 0..total {
        if fixed_in.len() == gamma {
            break;
        }
        if current.binary_search(&v).is_ok() {
            fixed_in.push(v);
            continue;
        }
        fixed_in.push(v);
        let mut search = Search::new(gi, k, gamma + 1, gamma, true);
        match search.run(&fixed_in, &fixed_out, budget) {
            Outcome::Aborted => return Err(()),
            _ => match search.best {
                Some(found) => current = found,
                None => {
                    fixed_in.pop();
                    fixed_out.push(v);
                }
            },
        }
    }
    Ok(fixed_in)
}

struct Budget {
    used: u64,
    max: u64,
    deadline: Option<Instant>,
}

impl Budget {
    fn tick(&mut self) -> bool {
        self.used += 1;
        if self.used > self.max {
            return false;
        }
        if self.used.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                return Instant::now() < d;
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Exhausted,
    Stopped,
    Aborted,
}

struct Search<'a> {
    gi: &'a InflatedGraph,
    k: usize,
    order: Vec<usize>,
    in_s: Vec<bool>,
    decided: Vec<bool>,
    must: Vec<u32>,
    must_cnt: Vec<usize>,
    fixed_out: Vec<bool>,
    /// Chosen so far plus `max(k, must_cnt)` for every undecided clique.
    lb: usize,
    /// Only solutions strictly smaller than this are of interest.
    bound: usize,
    /// A solution of this size is optimal; stop on reaching it.
    floor: usize,
    first_only: bool,
    best: Option<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(gi: &'a InflatedGraph, k: usize, bound: usize, floor: usize, first_only: bool) -> Self {
        let n = gi.base().order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(gi.clique_range(i).len()), i));
        Search {
            gi,
            k,
            order,
            in_s: vec![false; gi.order()],
            decided: vec![false; n],
            must: vec![0; gi.order()],
            must_cnt: vec![0; n],
            fixed_out: vec![false; gi.order()],
            lb: n * k,
            bound,
            floor,
            first_only,
            best: None,
        }
    }

    fn run(&mut self, fixed_in: &[usize], fixed_out: &[usize], budget: &mut Budget) -> Outcome {
        for &v in fixed_out {
            self.fixed_out[v] = true;
        }
        for &v in fixed_in {
            if self.fixed_out[v] {
                return Outcome::Exhausted;
            }
            self.require(v);
        }
        self.dfs(0, budget)
    }

    fn floor_of(&self, count: usize) -> usize {
        count.max(self.k)
    }

    /// Marks `v` as mandatory, keeping `lb` in step.
    fn require(&mut self, v: usize) {
        self.must[v] += 1;
        if self.must[v] == 1 {
            let c = self.gi.clique_of(v);
            let old = self.must_cnt[c];
            self.must_cnt[c] += 1;
            self.lb = self.lb + self.floor_of(old + 1) - self.floor_of(old);
        }
    }

    fn release(&mut self, v: usize) {
        self.must[v] -= 1;
        if self.must[v] == 0 {
            let c = self.gi.clique_of(v);
            let old = self.must_cnt[c];
            self.must_cnt[c] -= 1;
            self.lb = self.lb + self.floor_of(old - 1) - self.floor_of(old);
        }
    }

    fn dfs(&mut self, depth: usize, budget: &mut Budget) -> Outcome {
        if self.lb >= self.bound {
            return Outcome::Exhausted;
        }
        if !budget.tick() {
            return Outcome::Aborted;
        }
        if depth == self.order.len() {
            let found: Vec<usize> = (0..self.in_s.len()).filter(|&v| self.in_s[v]).collect();
            self.bound = found.len();
            self.best = Some(found);
            return if self.first_only || self.bound <= self.floor { Outcome::Stopped } else { Outcome::Exhausted };
        }

        let c = self.order[depth];
        let range = self.gi.clique_range(c);
        let mandatory: Vec<usize> = range.clone().filter(|&v| self.must[v] > 0).collect();
        if mandatory.iter().any(|&v| self.fixed_out[v]) {
            return Outcome::Exhausted;
        }
        let free: Vec<usize> = range.filter(|&v| self.must[v] == 0 && !self.fixed_out[v]).collect();
        let lb_without = self.lb - self.floor_of(mandatory.len());
        self.decided[c] = true;

        let mut outcome = Outcome::Exhausted;
        let smallest = self.k.max(mandatory.len());
        'sizes: for size in smallest..=mandatory.len() + free.len() {
            if lb_without + size >= self.bound {
                break;
            }
            let extra = size - mandatory.len();
            let mut pick: Vec<usize> = (0..extra).collect();
            loop {
                let members: Vec<usize> = mandatory.iter().copied().chain(pick.iter().map(|&i| free[i])).collect();
                let result = self.branch(depth, &members, lb_without, budget);
                if result != Outcome::Exhausted {
                    outcome = result;
                    break 'sizes;
                }
                if lb_without + size >= self.bound || !advance(&mut pick, free.len()) {
                    break;
                }
            }
        }
        self.decided[c] = false;
        outcome
    }

    fn branch(&mut self, depth: usize, members: &[usize], lb_without: usize, budget: &mut Budget) -> Outcome {
        let saved_lb = self.lb;
        for &v in members {
            self.in_s[v] = true;
        }
        self.lb = lb_without + members.len();

        let mut forced = Vec::new();
        let mut consistent = true;
        if members.len() == self.k {
            for &u in members {
                let p = self.gi.blue_index(u);
                let cp = self.gi.clique_of(p);
                if self.decided[cp] {
                    if !self.in_s[p] {
                        consistent = false;
                        break;
                    }
                } else if self.fixed_out[p] {
                    consistent = false;
                    break;
                } else {
                    self.require(p);
                    forced.push(p);
                }
            }
        }

        let outcome = if consistent { self.dfs(depth + 1, budget) } else { Outcome::Exhausted };

        for &p in forced.iter().rev() {
            self.release(p);
        }
        for &v in members {
            self.in_s[v] = false;
        }
        self.lb = saved_lb;
        outcome
    }
}

/// Next `pick.len()`-subset of `0..n` in lexicographic order.
fn advance(pick: &mut [usize], n: usize) -> bool {
    let len = pick.len();
    let mut i = len;
    while i > 0 {
        i -= 1;
        if pick[i] < n - len + i {
            pick[i] += 1;
            for j in i + 1..len {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::brute_force_min_ktds;
    use crate::graph::{complete_bipartite, complete_graph, cycle_graph, petersen_graph};

    fn gamma(g: &Graph, k: usize) -> usize {
        solve_inflated(g, k).unwrap().gamma
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(gamma(&complete_graph(4).unwrap(), 2), 8);
        assert_eq!(gamma(&complete_graph(5).unwrap(), 3), 16);
        assert_eq!(gamma(&complete_graph(4).unwrap(), 3), 12);
    }

    #[test]
    fn petersen_family() {
        assert_eq!(gamma(&petersen_graph(5, 2).unwrap(), 2), 20);
        // the degree-2 inner paths a_i b_i b_{i+3} a_{i+3} close into a
        // Hamiltonian cycle through an outer perfect matching, so nk is reached
        assert_eq!(gamma(&petersen_graph(6, 3).unwrap(), 2), 24);
    }

    #[test]
    fn cycle_takes_everything() {
        let r = solve_inflated(&cycle_graph(5).unwrap(), 2).unwrap();
        assert_eq!(r.gamma, 10);
        assert_eq!(r.witness.len(), 10);
    }

    #[test]
    fn witness_matches_brute_force_lex_least() {
        for g in [complete_graph(4).unwrap(), complete_bipartite(2, 3).unwrap(), cycle_graph(4).unwrap()] {
            let gi = inflate(&g).unwrap();
            for k in 2..=g.min_degree() {
                let bb = solve(&gi, k, &SolverConfig::default()).unwrap();
                let bf = brute_force_min_ktds(gi.graph(), k).unwrap();
                assert_eq!(bb.gamma, bf.gamma);
                assert_eq!(bb.witness, bf.witness);
            }
        }
    }

    #[test]
    fn budget_exhaustion_reports_interval() {
        let cfg = SolverConfig { max_nodes: 3, ..SolverConfig::default() };
        match solve_inflated_with(&complete_graph(5).unwrap(), 3, &cfg) {
            Err(Error::Budget { lower, upper, .. }) => {
                assert_eq!(lower, 16);
                assert!((16..=19).contains(&upper));
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_k() {
        assert!(matches!(solve_inflated(&cycle_graph(5).unwrap(), 3), Err(Error::Infeasible(_))));
        assert!(matches!(solve_inflated(&cycle_graph(5).unwrap(), 1), Err(Error::Input(_))));
    }

    #[test]
    fn advance_enumerates_all() {
        let mut p = vec![0, 1, 2];
        let mut count = 1;
        while advance(&mut p, 5) {
            count += 1;
        }
        assert_eq!(count, 10);
        let mut empty: Vec<usize> = vec![];
        assert!(!advance(&mut empty, 3));
    }
}
