//! CBU membership: search for an orientation whose slot system is acyclic.
//!
//! Edges are branched in DFS order per component. The slot classes are kept
//! in a rollback union-find; after every assignment the precedence digraph
//! on the current classes is checked for a cycle. The first edge of each
//! component is fixed (reversing every arc and negating labels maps
//! labelings to labelings).

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, Orientation};
use crate::labeling::{solve_labeling, ArcLabeling};
use crate::unionfind::RollbackUnionFind;

pub const DEFAULT_BUDGET: u64 = 1 << 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Member,
    NonMember,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SearchStats {
    /// Search nodes visited (each node assigns one edge).
    pub nodes: u64,
    /// Nodes rejected because the slot precedences closed a cycle.
    pub pruned: u64,
    /// Complete orientations reached.
    pub leaves: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonMemberReason {
    Triangle(usize, usize, usize),
    /// Every orientation with the first edge of each component fixed was
    /// examined or pruned.
    Exhausted { component: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CbuCertificate {
    pub verdict: Verdict,
    pub witness: Option<ArcLabeling>,
    pub reason: Option<NonMemberReason>,
    pub stats: SearchStats,
}

impl CbuCertificate {
    pub fn is_member(&self) -> bool {
        self.verdict == Verdict::Member
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("search budget of {budget} nodes exhausted")]
pub struct BudgetExhausted {
    pub budget: u64,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub budget: u64,
    /// Worker threads; 1 keeps the witness deterministic.
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, jobs: 1 }
    }
}

/// Edges of one component in DFS discovery order: tree edges interleaved with
/// the back edges they close, so cycles are completed early.
fn dfs_edge_order(g: &Graph, root: usize, seen: &mut [bool]) -> Vec<(usize, usize)> {
    let mut order = Vec::new();
    let mut used = vec![false; g.m()];
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(&v) = stack.last() {
        let next = g.neighbors(v).iter().copied().find(|&w| !seen[w]);
        match next {
            Some(w) => {
                seen[w] = true;
                let e = g.edge_index(v, w).unwrap();
                used[e] = true;
                order.push((v, w));
                for &x in g.neighbors(w) {
                    if seen[x] && x != v {
                        let f = g.edge_index(w, x).unwrap();
                        if !used[f] {
                            used[f] = true;
                            order.push((w, x));
                        }
                    }
                }
                stack.push(w);
            }
            None => {
                stack.pop();
            }
        }
    }
    order
}

struct Search<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    uf: RollbackUnionFind,
    in_deg: Vec<u32>,
    out_deg: Vec<u32>,
    arcs: Vec<(usize, usize)>,
    stats: SearchStats,
    budget: u64,
    shared_nodes: Option<&'a AtomicU64>,
    stop: Option<&'a AtomicBool>,
}

enum Step {
    Found,
    Exhausted,
    Budget,
    Stopped,
}

impl<'a> Search<'a> {
    fn new(n: usize, edges: &'a [(usize, usize)], budget: u64) -> Self {
        Search {
            n,
            edges,
            uf: RollbackUnionFind::new(2 * n),
            in_deg: vec![0; n],
            out_deg: vec![0; n],
            arcs: Vec::with_capacity(edges.len()),
            stats: SearchStats::default(),
            budget,
            shared_nodes: None,
            stop: None,
        }
    }

    fn push(&mut self, t: usize, h: usize) {
        self.uf.union(2 * t + 1, 2 * h);
        self.out_deg[t] += 1;
        self.in_deg[h] += 1;
        self.arcs.push((t, h));
    }

    fn pop(&mut self) {
        let (t, h) = self.arcs.pop().expect("non-empty arc stack");
        self.uf.undo();
        self.out_deg[t] -= 1;
        self.in_deg[h] -= 1;
    }

    /// Cycle check on the precedence digraph between current slot classes.
    fn consistent(&self) -> bool {
        let n = self.n;
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
        let mut indeg = vec![0usize; 2 * n];
        let mut any = false;
        for v in 0..n {
            if self.in_deg[v] > 0 && self.out_deg[v] > 0 {
                let a = self.uf.find(2 * v);
                let b = self.uf.find(2 * v + 1);
                if a == b {
                    return false;
                }
                succ[a].push(b);
                indeg[b] += 1;
                any = true;
            }
        }
        if !any {
            return true;
        }
        let mut total: usize = indeg.iter().sum();
        let mut queue: Vec<usize> = (0..2 * n).filter(|&c| indeg[c] == 0).collect();
        while let Some(c) = queue.pop() {
            for &d in &succ[c] {
                total -= 1;
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    queue.push(d);
                }
            }
        }
        total == 0
    }

    fn tick(&mut self) -> Option<Step> {
        self.stats.nodes += 1;
        let spent = match self.shared_nodes {
            Some(shared) => shared.fetch_add(1, Ordering::Relaxed) + 1,
            None => self.stats.nodes,
        };
        if spent > self.budget {
            return Some(Step::Budget);
        }
        if let Some(stop) = self.stop {
            if self.stats.nodes % 1024 == 0 && stop.load(Ordering::Relaxed) {
                return Some(Step::Stopped);
            }
        }
        None
    }

    fn run(&mut self) -> Step {
        let k = self.arcs.len();
        if k == self.edges.len() {
            self.stats.leaves += 1;
            return Step::Found;
        }
        let (u, v) = self.edges[k];
        let choices: &[(usize, usize)] = if k == 0 { &[(u, v)] } else { &[(u, v), (v, u)] };
        for &(t, h) in choices {
            if let Some(stop) = self.tick() {
                return stop;
            }
            self.push(t, h);
            if self.consistent() {
                match self.run() {
                    Step::Exhausted => {}
                    other => return other,
                }
            } else {
                self.stats.pruned += 1;
            }
            self.pop();
        }
        Step::Exhausted
    }
}

fn add_stats(a: &mut SearchStats, b: &SearchStats) {
    a.nodes += b.nodes;
    a.pruned += b.pruned;
    a.leaves += b.leaves;
}

enum ComponentResult {
    Arcs(Vec<(usize, usize)>),
    NoOrientation,
    Budget,
}

fn search_component(
    n: usize,
    edges: &[(usize, usize)],
    opts: &SearchOptions,
    spent: u64,
    stats: &mut SearchStats,
) -> ComponentResult {
    let budget = opts.budget.saturating_sub(spent);
    if opts.jobs <= 1 || edges.len() < 6 {
        let mut s = Search::new(n, edges, budget);
        let step = s.run();
        add_stats(stats, &s.stats);
        return match step {
            Step::Found => ComponentResult::Arcs(s.arcs),
            Step::Exhausted => ComponentResult::NoOrientation,
            Step::Budget | Step::Stopped => ComponentResult::Budget,
        };
    }

    // Split on the directions of edges 1..=depth; edge 0 stays fixed.
    let depth = (usize::BITS - opts.jobs.leading_zeros()) as usize + 1;
    let depth = depth.min(edges.len() - 1);
    let shared = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let tasks = 1u64 << depth;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build().expect("search thread pool");
    let results: Vec<(u64, Step, SearchStats, Vec<(usize, usize)>)> = pool.install(|| {
        (0..tasks)
            .into_par_iter()
            .filter_map(|task| {
                if stop.load(Ordering::Relaxed) {
                    return None;
                }
                let mut s = Search::new(n, edges, budget);
                s.shared_nodes = Some(&shared);
                s.stop = Some(&stop);
                let (u, v) = edges[0];
                s.push(u, v);
                let mut ok = s.consistent();
                for (i, &(a, b)) in edges[1..=depth].iter().enumerate() {
                    if !ok {
                        break;
                    }
                    if task >> i & 1 == 0 {
                        s.push(a, b);
                    } else {
                        s.push(b, a);
                    }
                    ok = s.consistent();
                }
                let step = if ok { s.run() } else { Step::Exhausted };
                if matches!(step, Step::Found | Step::Budget) {
                    stop.store(true, Ordering::Relaxed);
                }
                Some((task, step, s.stats.clone(), s.arcs.clone()))
            })
            .collect()
    });

    let mut found: Option<(u64, Vec<(usize, usize)>)> = None;
    let mut budget_hit = false;
    for (task, step, st, arcs) in results {
        add_stats(stats, &st);
        match step {
            Step::Found => {
                if found.as_ref().map_or(true, |(t, _)| task < *t) {
                    found = Some((task, arcs));
                }
            }
            Step::Budget => budget_hit = true,
            Step::Stopped => {}
            Step::Exhausted => {}
        }
    }
    if let Some((_, arcs)) = found {
        ComponentResult::Arcs(arcs)
    } else if budget_hit || stop.load(Ordering::Relaxed) {
        ComponentResult::Budget
    } else {
        ComponentResult::NoOrientation
    }
}

/// Decides CBU membership with the default options.
pub fn decide_cbu(g: &Graph, budget: u64) -> Result<CbuCertificate, BudgetExhausted> {
    decide_cbu_with(g, &SearchOptions { budget, jobs: 1 })
}

pub fn decide_cbu_with(g: &Graph, opts: &SearchOptions) -> Result<CbuCertificate, BudgetExhausted> {
    let mut stats = SearchStats::default();
    if let Some((a, b, c)) = g.find_triangle() {
        log::debug!("triangle {a},{b},{c}: not CBU");
        return Ok(CbuCertificate {
            verdict: Verdict::NonMember,
            witness: None,
            reason: Some(NonMemberReason::Triangle(a, b, c)),
            stats,
        });
    }
    let mut seen = vec![false; g.n()];
    let mut arcs = Vec::with_capacity(g.m());
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        let order = dfs_edge_order(g, root, &mut seen);
        if order.is_empty() {
            continue;
        }
        match search_component(g.n(), &order, opts, stats.nodes, &mut stats) {
            ComponentResult::Arcs(a) => arcs.extend(a),
            ComponentResult::Budget => {
                return Err(BudgetExhausted { budget: opts.budget, stats });
            }
            ComponentResult::NoOrientation => {
                let mut component: Vec<usize> =
                    order.iter().flat_map(|&(u, v)| [u, v]).collect();
                component.sort_unstable();
                component.dedup();
                log::debug!("component of {root} has no labelable orientation");
                return Ok(CbuCertificate {
                    verdict: Verdict::NonMember,
                    witness: None,
                    reason: Some(NonMemberReason::Exhausted { component }),
                    stats,
                });
            }
        }
    }
    let o = Orientation::from_graph_arcs(g.clone(), &arcs).expect("search assigns every edge");
    let witness = solve_labeling(&o)
        .labeling()
        .expect("search only accepts orientations with an acyclic slot system");
    debug_assert!(witness.check().is_ok());
    Ok(CbuCertificate { verdict: Verdict::Member, witness: Some(witness), reason: None, stats })
}

/// A homomorphism into the 5-cycle `0-1-2-3-4`, by backtracking in BFS
/// order. Values are tried in increasing order, so bipartite graphs map onto
/// `{0, 1}`.
pub fn find_homomorphism_c5(g: &Graph) -> Option<Vec<u8>> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for r in 0..n {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let start = order.len();
        order.push(r);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut map = vec![u8::MAX; n];
    fn adjacent(a: u8, b: u8) -> bool {
        (a + 5 - b) % 5 == 1 || (b + 5 - a) % 5 == 1
    }
    fn rec(g: &Graph, order: &[usize], pos: &[usize], i: usize, map: &mut [u8]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let earlier: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] < i).collect();
        // a component root is placed at 0 by symmetry
        let range: &[u8] = if earlier.is_empty() { &[0] } else { &[0, 1, 2, 3, 4] };
        for &c in range {
            if earlier.iter().all(|&w| adjacent(map[w], c)) {
                map[v] = c;
                if rec(g, order, pos, i + 1, map) {
                    return true;
                }
            }
        }
        map[v] = u8::MAX;
        false
    }
    rec(g, &order, &pos, 0, &mut map).then_some(map)
}

/// The labeled orientation of the 5-cycle `0..5` with source 0 and sink 2.
pub fn c5_labeling() -> ArcLabeling {
    let o = Orientation::from_arcs(5, &[(0, 1), (1, 2), (0, 4), (4, 3), (3, 2)]).unwrap();
    solve_labeling(&o).labeling().expect("C5 with paths of lengths 2 and 3 is labelable")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PullbackError {
    #[error("map has {got} entries for {expected} vertices")]
    WrongLength { expected: usize, got: usize },
    #[error("edge {0}-{1} is not mapped onto an edge")]
    NotHomomorphism(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Orients each edge `uv` of `g` like the arc between `hom(u)` and `hom(v)`
/// and copies its label.
pub fn pullback_labeling(
    g: &Graph,
    hom: &[usize],
    h_labeling: &ArcLabeling,
) -> Result<ArcLabeling, PullbackError> {
    if hom.len() != g.n() {
        return Err(PullbackError::WrongLength { expected: g.n(), got: hom.len() });
    }
    let ho = h_labeling.orientation();
    let h = ho.graph();
    let mut arcs = Vec::with_capacity(g.m());
    let mut labels = Vec::with_capacity(g.m());
    for &(u, v) in g.edges() {
        let (a, b) = (hom[u], hom[v]);
        if a >= h.n() || b >= h.n() || !h.has_edge(a, b) {
            return Err(PullbackError::NotHomomorphism(u, v));
        }
        if ho.has_arc(a, b) {
            arcs.push((u, v));
            labels.push(h_labeling.label_of(a, b).unwrap());
        } else {
            arcs.push((v, u));
            labels.push(h_labeling.label_of(b, a).unwrap());
        }
    }
    let o = Orientation::from_graph_arcs(g.clone(), &arcs)?;
    // from_graph_arcs stores arcs in edge order, matching `labels`
    Ok(ArcLabeling::new(o, labels).expect("one label per edge"))
}
