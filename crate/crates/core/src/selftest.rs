//! Reduced-scale runs of the exhaustive oracle and constructor suites.

use serde::Serialize;

use crate::analysis::{fractional_chromatic_number, independence_number};
use crate::constructors::{double_subdivision_to_3cbu, grid_2cbu, labeling_to_representation, shift_graph_representation};
use crate::families::{g3, shift_graph};
use crate::generators::{grid, random_corpus};
use crate::geometry::{induced_labeling, verify_representation, BoxRepresentation};
use crate::graph::{subdivide, Graph, Orientation};
use crate::iso::nonisomorphic_graphs_up_to;
use crate::labeling::{find_bad_cycle, find_cover_orientation, solve_labeling, synthesize_by_source_merge};
use crate::rational::{frac, q};
use crate::recognition::{decide_cbu_with, SearchOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, Copy)]
pub struct SelftestOptions {
    pub level: Level,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for SelftestOptions {
    fn default() -> Self {
        SelftestOptions { level: Level::Quick, seed: 1, jobs: 1 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    /// At most a handful of failing cases, described.
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        CheckResult { name, cases: 0, failures: Vec::new() }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub level: Level,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

fn short(g: &Graph) -> String {
    serde_json::to_string(g).unwrap()
}

fn representation_ok(r: &BoxRepresentation, g: &Graph) -> bool {
    verify_representation(r, g).is_ok() && induced_labeling(r).is_ok_and(|l| l.check().is_ok())
}

pub fn run_selftest(opts: &SelftestOptions) -> SelftestReport {
    let full = opts.level == Level::Full;
    let n_max = if full { 6 } else { 5 };
    let search = SearchOptions { jobs: opts.jobs, ..SearchOptions::default() };
    let graphs = nonisomorphic_graphs_up_to(n_max);
    let mut checks = Vec::new();

    let mut oracle = CheckResult::new("labeling-oracles");
    for g in graphs.iter().filter(|g| g.n() >= 2 && g.is_connected()) {
        for bits in 0..1u64 << g.m() {
            let o = Orientation::from_bits(g.clone(), bits);
            let solved = solve_labeling(&o);
            let feasible = solved.is_feasible();
            let valid = solved.labeling().is_none_or(|l| l.check().is_ok());
            let bad = find_bad_cycle(&o, g.n()).is_some();
            let merged = synthesize_by_source_merge(&o).is_ok();
            oracle.case(valid && feasible != bad && merged == feasible, || {
                format!("orientation {}", serde_json::to_string(&o).unwrap())
            });
        }
    }
    checks.push(oracle);

    let mut decide = CheckResult::new("membership");
    for g in &graphs {
        let cert = match decide_cbu_with(g, &search) {
            Ok(c) => c,
            Err(e) => {
                decide.case(false, || format!("{}: {e}", short(g)));
                continue;
            }
        };
        let triangle = g.find_triangle().is_some();
        let witness_ok = cert.witness.as_ref().is_none_or(|l| l.check().is_ok() && l.orientation().graph() == g);
        let expected = if triangle { !cert.is_member() } else if g.is_bipartite() { cert.is_member() } else { true };
        decide.case(expected && witness_ok && cert.is_member() == cert.witness.is_some(), || short(g));
    }
    checks.push(decide);

    let mut cons = CheckResult::new("constructors");
    for m in 2..=n_max {
        cons.case(shift_graph_representation(m).is_ok_and(|r| representation_ok(&r, &shift_graph(m))), || {
            format!("shift representation m={m}")
        });
    }
    for n in 1..=if full { 8 } else { 5 } {
        cons.case(grid_2cbu(n).is_ok_and(|r| representation_ok(&r, &grid(n))), || format!("grid n={n}"));
    }
    for g in graphs.iter().filter(|g| g.n() <= if full { 6 } else { 4 }) {
        let target = subdivide(g, &vec![2; g.m()]).graph;
        cons.case(
            double_subdivision_to_3cbu(g, &vec![2; g.m()]).is_ok_and(|r| representation_ok(&r, &target)),
            || format!("double subdivision of {}", short(g)),
        );
    }
    for g in graphs.iter().filter(|g| g.n() <= if full { 5 } else { 4 }) {
        let Ok(cert) = decide_cbu_with(g, &search) else { continue };
        let Some(l) = cert.witness else { continue };
        let ok = labeling_to_representation(g, &l).is_ok_and(|p| {
            representation_ok(&p.representation, g) && p.representation.d() <= (2 * g.n()).saturating_sub(1).max(1)
        });
        cons.case(ok, || format!("labeling pipeline on {}", short(g)));
    }
    checks.push(cons);

    let mut corpus = CheckResult::new("random-corpus");
    for g in random_corpus(opts.seed, if full { 200 } else { 40 }, 8) {
        let Ok(cert) = decide_cbu_with(&g, &search) else {
            corpus.case(false, || format!("budget on {}", short(&g)));
            continue;
        };
        let ok = if cert.is_member() {
            let n = g.n() as i64;
            let chi_f = fractional_chromatic_number(&g).map(|f| f.value);
            let alpha = independence_number(&g).unwrap() as i64;
            cert.witness.as_ref().is_some_and(|l| l.check().is_ok())
                && chi_f.is_ok_and(|v| v < q(4))
                && q(alpha) > frac(n, 4)
        } else {
            true
        };
        corpus.case(ok && !(cert.is_member() && g.find_triangle().is_some()), || short(&g));
    }
    checks.push(corpus);

    if full {
        let mut witness = CheckResult::new("planar-witness");
        let g = g3();
        witness.case(decide_cbu_with(&g, &search).is_ok_and(|c| !c.is_member()), || "G3 accepted".into());
        witness.case(
            find_cover_orientation(&g, 1 << 24)
                .is_ok_and(|o| o.is_some_and(|o| o.is_acyclic() && crate::labeling::has_quasi_cycle(&o).is_none())),
            || "no cover orientation of G3".into(),
        );
        checks.push(witness);
    }

    SelftestReport { level: opts.level, seed: opts.seed, checks }
}
