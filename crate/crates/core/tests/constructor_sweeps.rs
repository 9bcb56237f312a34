mod common;

use cbu_core::constructors::outerplanar_2cbu;
use cbu_core::constructors::{
    bipartite_to_cbu, bprime_construction, bprime_graph, double_subdivision_to_3cbu, grid_rect_2cbu,
    labeling_to_representation, one_subdivision, r_prime_2cbu, remove_bipartite_edges,
    shift_graph_representation, subdivision_from_proper, twin_representation, IntersectionRepresentation,
};
use cbu_core::families::{r_prime, shift_graph, shift_index};
use cbu_core::generators::grid_rect;
use cbu_core::geometry::{contact_graph, induced_labeling, verify_representation};
use cbu_core::graph::{add_false_twin, subdivide};
use cbu_core::labeling::solve_labeling;
use cbu_core::Graph;
use common::{has_triangle, homogeneous, labelled_graphs, orientations, par_failures};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// A triangle-free outerplanar graph: a polygon with non-crossing chords,
/// some edges deleted, pendant trees attached, vertices shuffled.
fn random_outerplanar(rng: &mut ChaCha8Rng) -> Graph {
    let k = rng.gen_range(4..=11);
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i.min((i + 1) % k), i.max((i + 1) % k))).collect();
    let mut chords: Vec<(usize, usize)> = Vec::new();
    for _ in 0..rng.gen_range(0..k) {
        let a = rng.gen_range(0..k);
        let b = rng.gen_range(0..k);
        let c = (a.min(b), a.max(b));
        if c.1 - c.0 < 2 || c == (0, k - 1) || edges.contains(&c) || chords.iter().any(|&x| crosses(x, c)) {
            continue;
        }
        let mut trial = edges.clone();
        trial.push(c);
        if !has_triangle(&Graph::new(k, trial.iter().copied()).unwrap()) {
            edges.push(c);
            chords.push(c);
        }
    }
    edges.retain(|_| rng.gen_bool(0.9));
    let mut n = k;
    for _ in 0..rng.gen_range(0..5) {
        let at = rng.gen_range(0..n);
        edges.push((at, n));
        n += 1;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    Graph::new(n, edges).unwrap().permuted(&perm)
}

#[test]
fn outerplanar_graphs_get_planar_representations() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..400 {
        let g = random_outerplanar(&mut rng);
        let out = outerplanar_2cbu(&g).unwrap_or_else(|e| panic!("{e}: {:?}", g.edges()));
        assert_eq!(out.representation.d(), 2);
        assert!(verify_representation(&out.representation, &g).is_ok(), "{:?}", g.edges());
        // bottom and top segments both belong to the root
        assert_eq!(out.walks.len(), g.components().len());
        for w in &out.walks {
            assert_eq!(w.first(), w.last());
            assert!(w.windows(2).all(|p| g.has_edge(p[0], p[1])), "{w:?}");
        }
    }
}

#[test]
fn outerplanar_ladders_and_rectangles() {
    for cols in 1..=8 {
        let g = grid_rect(2, cols);
        let out = outerplanar_2cbu(&g).unwrap();
        assert!(verify_representation(&out.representation, &g).is_ok());
    }
}

fn bipartitions(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let side = g.bipartition()?;
    let a = (0..g.n()).filter(|&v| !side[v]).collect();
    let b = (0..g.n()).filter(|&v| side[v]).collect();
    Some((a, b))
}

#[test]
fn bipartite_lift_of_every_small_bipartite_graph() {
    for n in 1..=6 {
        let graphs = labelled_graphs(n);
        let (bad, notes) = par_failures(&graphs, 3, |g| {
            let (a, b) = bipartitions(g)?;
            let r = IntersectionRepresentation::from_non_edges(g);
            if r.intersection_graph() != *g {
                return Some(format!("non-edge rep of {:?}", g.edges()));
            }
            let c = bipartite_to_cbu(&r, &a, &b).ok()?;
            if verify_representation(&c, g).is_err() {
                return Some(format!("lift of {:?}", g.edges()));
            }
            let bp = bprime_construction(&r, &a, &b).ok()?;
            if verify_representation(&bp, &bprime_graph(g, &a, &b)).is_err() {
                return Some(format!("B' of {:?}", g.edges()));
            }
            None
        });
        assert_eq!(bad, 0, "{notes:?}");
    }
}

#[test]
fn subdivisions_from_proper_representations() {
    let mut proper = 0;
    for n in 1..=5 {
        for g in labelled_graphs(n) {
            let r = IntersectionRepresentation::from_non_edges(&g);
            if !r.is_proper() {
                assert!(subdivision_from_proper(&r, &g).is_err());
                continue;
            }
            proper += 1;
            let s = subdivision_from_proper(&r, &g).unwrap();
            assert!(verify_representation(&s, &one_subdivision(&g)).is_ok(), "{:?}", g.edges());
        }
    }
    assert!(proper > 0);
}

#[test]
fn double_subdivisions_of_small_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let graphs: Vec<Graph> = (1..=5).flat_map(labelled_graphs).collect();
    for g in &graphs {
        if !rng.gen_bool(0.3) {
            continue;
        }
        let counts: Vec<usize> = (0..g.m()).map(|_| rng.gen_range(2..=4)).collect();
        let r = double_subdivision_to_3cbu(g, &counts).unwrap();
        assert_eq!(r.d(), 3);
        assert!(verify_representation(&r, &subdivide(g, &counts).graph).is_ok(), "{:?} {counts:?}", g.edges());
    }
}

#[test]
fn twin_and_star_lifts() {
    let bases = [grid_rect_2cbu(2, 3).unwrap(), r_prime_2cbu(2, 2).unwrap(), shift_graph_representation(5).unwrap()];
    for r in &bases {
        let g = contact_graph(r).unwrap();
        for v in 0..r.n() {
            let t = twin_representation(r, v).unwrap();
            assert_eq!(contact_graph(&t).unwrap(), add_false_twin(&g, v).unwrap());
            let nb = g.neighbors(v).to_vec();
            if !nb.is_empty() {
                let cut = remove_bipartite_edges(r, &[v], &nb).unwrap();
                let removed: Vec<(usize, usize)> = nb.iter().map(|&w| (v.min(w), v.max(w))).collect();
                assert_eq!(contact_graph(&cut).unwrap(), g.without_edges(&removed));
            }
        }
    }
}

#[test]
fn r_prime_and_grids_match_their_graphs() {
    for n1 in 1..=4 {
        for n2 in 1..=4 {
            assert!(verify_representation(&r_prime_2cbu(n1, n2).unwrap(), &r_prime(n1, n2)).is_ok());
            assert!(verify_representation(&grid_rect_2cbu(n1, n2).unwrap(), &grid_rect(n1, n2)).is_ok());
        }
    }
}

#[test]
fn shift_graph_representations() {
    for m in 2..=7 {
        let r = shift_graph_representation(m).unwrap();
        assert_eq!(r.d(), m - 1);
        let h = shift_graph(m);
        assert!(verify_representation(&r, &h).is_ok());
        let l = induced_labeling(&r).unwrap();
        for (t, hd) in l.orientation().arcs() {
            // (i, j) -> (j, k)
            let ok = (1..=m).any(|i| {
                (i + 1..=m).any(|j| (j + 1..=m).any(|k| t == shift_index(m, i, j) && hd == shift_index(m, j, k)))
            });
            assert!(ok, "arc {t}->{hd}");
        }
    }
}

#[test]
fn labeling_pipeline_reproduces_the_orientation() {
    let graphs: Vec<Graph> = (1..=5).flat_map(labelled_graphs).collect();
    let (bad, notes) = par_failures(&graphs, 3, |g| {
        for o in orientations(g) {
            let Some(lab) = solve_labeling(&o).labeling() else { continue };
            let p = match labeling_to_representation(g, &lab) {
                Ok(p) => p,
                Err(e) => return Some(format!("{e} on {:?}", o.arcs().collect::<Vec<_>>())),
            };
            if verify_representation(&p.representation, g).is_err() {
                return Some(format!("wrong graph for {:?}", o.arcs().collect::<Vec<_>>()));
            }
            if g.n() > 0 && p.representation.d() > 2 * g.n() - 1 {
                return Some(format!("dimension {} for n = {}", p.representation.d(), g.n()));
            }
            let induced = induced_labeling(&p.representation).unwrap();
            if induced.orientation() != &o || !homogeneous(&o, induced.labels()) {
                return Some(format!("orientation changed for {:?}", o.arcs().collect::<Vec<_>>()));
            }
        }
        None
    });
    assert_eq!(bad, 0, "{notes:?}");
}
