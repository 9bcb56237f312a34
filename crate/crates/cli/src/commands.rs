use anyhow::{anyhow, bail, Context, Result};
use log::info;
use serde_json::{json, Value};

use cbu_core::analysis::{
    chromatic_number, colouring_with, fractional_chromatic_number_with_limit, girth, maximum_independent_set,
};
use cbu_core::constructors::{
    bipartite_to_cbu, double_subdivision_to_3cbu, grid_2cbu, grid_rect_2cbu, labeling_to_representation,
    outerplanar_2cbu, r_prime_2cbu, shift_graph_representation, subdivision_from_proper, IntersectionRepresentation,
};
use cbu_core::families::generate;
use cbu_core::formats::{graph_to_dot, to_edge_list};
use cbu_core::generators::grid_rect;
use cbu_core::geometry::svg::to_svg;
use cbu_core::geometry::verify_representation;
use cbu_core::labeling::{infeasibility_certificate, solve_labeling, LabelingCertificate, LabelingOutcome};
use cbu_core::recognition::{decide_cbu, decide_cbu_with, CbuCertificate, NonMemberReason, SearchOptions};
use cbu_core::selftest::{run_selftest, SelftestOptions};
use cbu_core::{ArcLabeling, BoxRepresentation, Graph};

use crate::io::{read_graph, read_orientation, read_representation, read_text, to_json, write_json, write_text};
use crate::{Command, Construction, FamilyArgs, GraphFormat, Level, Outcome};

pub fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Gen { family, params, format, output } => gen(&family, &params, format, &output),
        Command::Decide { input, budget, certificate, jobs } => decide(&input, budget, certificate.as_deref(), jobs),
        Command::CheckOrientation { input, output } => check_orientation(&input, &output),
        Command::Build { construction, input, params, count, labeling, budget, output } => {
            let input = input.as_deref().unwrap_or("-");
            match build(construction, input, &params, count, labeling.as_deref(), budget)? {
                Built::Rep(r) => {
                    write_json(&output, &r)?;
                    Ok(Outcome::Positive)
                }
                Built::Refused(outcome) => Ok(outcome),
            }
        }
        Command::Verify { representation, graph } => verify(&representation, &graph),
        Command::Svg { representation, output } => {
            let r = read_representation(&representation)?;
            write_text(&output, &to_svg(&r)?)?;
            Ok(Outcome::Positive)
        }
        Command::Analyze { input, alpha, chi, chif, girth, limit } => {
            let all = !(alpha || chi || chif || girth);
            analyze(&input, all || alpha, all || chi, all || chif, all || girth, limit)
        }
        Command::Selftest { level, seed, jobs, json } => selftest(level, seed, jobs, json),
    }
}

fn gen(family: &str, params: &FamilyArgs, format: GraphFormat, output: &str) -> Result<Outcome> {
    let g = generate(family, &params.to_params())?;
    info!("{family}: {} vertices, {} edges", g.n(), g.m());
    let text = match format {
        GraphFormat::Json => to_json(&g)?,
        GraphFormat::Edges => to_edge_list(&g),
        GraphFormat::Dot => graph_to_dot(&g),
    };
    write_text(output, &text)?;
    Ok(Outcome::Positive)
}

fn summary(c: &CbuCertificate) -> String {
    match &c.reason {
        None => "member".to_string(),
        Some(NonMemberReason::Triangle(a, b, c)) => format!("non-member: triangle {a} {b} {c}"),
        Some(NonMemberReason::Exhausted { component }) => {
            format!("non-member: no labelable orientation of the component of vertex {}", component[0])
        }
    }
}

fn decide(input: &str, budget: u64, certificate: Option<&str>, jobs: usize) -> Result<Outcome> {
    let g = read_graph(input)?;
    let opts = SearchOptions { budget, jobs: jobs.max(1) };
    let c = match decide_cbu_with(&g, &opts) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            return Ok(Outcome::BudgetExhausted);
        }
    };
    info!("{} after {} search nodes", summary(&c), c.stats.nodes);
    match certificate {
        Some(path) => {
            write_json(path, &c)?;
            if path != "-" {
                println!("{}", summary(&c));
            }
        }
        None => write_json("-", &c)?,
    }
    Ok(if c.is_member() { Outcome::Positive } else { Outcome::Negative })
}

fn check_orientation(input: &str, output: &str) -> Result<Outcome> {
    let o = read_orientation(input)?;
    let (cert, ok) = match solve_labeling(&o) {
        LabelingOutcome::Feasible(l) => (LabelingCertificate::from_labeling(&l), true),
        LabelingOutcome::Infeasible(sc) => (infeasibility_certificate(&o, &sc), false),
    };
    write_json(output, &cert)?;
    Ok(if ok { Outcome::Positive } else { Outcome::Negative })
}

enum Built {
    Rep(BoxRepresentation),
    Refused(Outcome),
}

fn need(name: &str, value: Option<usize>) -> Result<usize> {
    value.ok_or_else(|| anyhow!("missing --{name}"))
}

fn build(
    construction: Construction,
    input: &str,
    params: &FamilyArgs,
    count: usize,
    labeling: Option<&str>,
    budget: u64,
) -> Result<Built> {
    let rep = match construction {
        Construction::Grid2cbu => match (params.rows, params.cols, params.n) {
            (Some(r), Some(c), _) => grid_rect_2cbu(r, c)?,
            (_, _, Some(n)) => grid_2cbu(n)?,
            _ => {
                let g = read_graph(input)?;
                let n = (0..=g.n()).find(|k| k * k >= g.n()).unwrap_or(0);
                if n * n != g.n() || g != grid_rect(n, n) {
                    bail!("input is not a square grid graph; pass --n");
                }
                grid_2cbu(n)?
            }
        },
        Construction::RPrime2cbu => r_prime_2cbu(need("n1", params.n1)?, need("n2", params.n2)?)?,
        Construction::Shift => shift_graph_representation(need("m", params.m)?)?,
        Construction::Outerplanar => outerplanar_2cbu(&read_graph(input)?)?.representation,
        Construction::DoubleSubdivision => {
            let g = read_graph(input)?;
            double_subdivision_to_3cbu(&g, &vec![count; g.m()])?
        }
        Construction::Bipartite => {
            let g = read_graph(input)?;
            let side = g.bipartition().ok_or_else(|| anyhow!("input graph is not bipartite"))?;
            let a: Vec<usize> = (0..g.n()).filter(|&v| !side[v]).collect();
            let b: Vec<usize> = (0..g.n()).filter(|&v| side[v]).collect();
            bipartite_to_cbu(&IntersectionRepresentation::from_non_edges(&g), &a, &b)?
        }
        Construction::Subdivision => {
            let g = read_graph(input)?;
            subdivision_from_proper(&IntersectionRepresentation::from_non_edges(&g), &g)
                .context("the non-edge representation of this graph is not proper")?
        }
        Construction::Cbu => {
            let g = read_graph(input)?;
            let lab = match labeling {
                Some(path) => serde_json::from_str::<ArcLabeling>(&read_text(path)?)
                    .with_context(|| format!("parsing labeling from {path}"))?,
                None => match decide_cbu(&g, budget) {
                    Ok(c) => match c.witness {
                        Some(l) => l,
                        None => {
                            eprintln!("{}", summary(&c));
                            return Ok(Built::Refused(Outcome::Negative));
                        }
                    },
                    Err(e) => {
                        eprintln!("{e}");
                        return Ok(Built::Refused(Outcome::BudgetExhausted));
                    }
                },
            };
            let p = labeling_to_representation(&g, &lab)?;
            info!(
                "dimension {} ({} before removing {} stars, {} twins)",
                p.representation.d(),
                p.shift_dimension,
                p.stars.len(),
                p.embedding.twin_count()
            );
            p.representation
        }
    };
    info!("{} boxes in dimension {}", rep.n(), rep.d());
    Ok(Built::Rep(rep))
}

fn verify(representation: &str, graph: &str) -> Result<Outcome> {
    let r = read_representation(representation)?;
    let g = read_graph(graph)?;
    let (ok, report) = match verify_representation(&r, &g) {
        Ok(()) => (true, Default::default()),
        Err(report) => (false, report),
    };
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| json!({ "u": v.u, "v": v.v, "kind": v.kind.to_string() }))
        .collect();
    let mut out = json!({ "verified": ok, "violations": violations });
    if let Some((boxes, vertices)) = report.vertex_count {
        out["vertex_count"] = json!({ "boxes": boxes, "vertices": vertices });
    }
    write_json("-", &out)?;
    Ok(if ok { Outcome::Positive } else { Outcome::Negative })
}

fn analyze(input: &str, alpha: bool, chi: bool, chif: bool, want_girth: bool, limit: usize) -> Result<Outcome> {
    let g: Graph = read_graph(input)?;
    let mut out = json!({ "n": g.n(), "m": g.m() });
    out["triangle"] = json!(g.find_triangle().map(|(a, b, c)| [a, b, c]));
    if alpha {
        let set = maximum_independent_set(&g)?;
        out["alpha"] = json!({ "value": set.len(), "set": set });
    }
    if chi {
        let k = chromatic_number(&g)?;
        let colouring = colouring_with(&g, k)?.unwrap_or_default();
        out["chi"] = json!({ "value": k, "colouring": colouring });
    }
    if chif {
        let f = fractional_chromatic_number_with_limit(&g, limit)?;
        debug_assert!(f.verify(&g));
        out["chif"] = serde_json::to_value(&f)?;
    }
    if want_girth {
        out["girth"] = json!(girth(&g));
    }
    write_json("-", &out)?;
    Ok(Outcome::Positive)
}

fn selftest(level: Level, seed: u64, jobs: usize, as_json: bool) -> Result<Outcome> {
    let level = match level {
        Level::Quick => cbu_core::selftest::Level::Quick,
        Level::Full => cbu_core::selftest::Level::Full,
    };
    let report = run_selftest(&SelftestOptions { level, seed, jobs: jobs.max(1) });
    if as_json {
        write_json("-", &report)?;
    } else {
        for c in &report.checks {
            println!("{} {} ({} cases)", if c.passed() { "PASS" } else { "FAIL" }, c.name, c.cases);
            for f in &c.failures {
                println!("  {f}");
            }
        }
    }
    Ok(if report.passed() { Outcome::Positive } else { Outcome::Negative })
}
