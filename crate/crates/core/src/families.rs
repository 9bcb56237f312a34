//! Named graph families, with their vertex numbering and, where one is
//! known, a homogeneous labeling.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::generators;
use crate::graph::{Graph, Orientation};
use crate::labeling::ArcLabeling;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    Unknown(String),
    #[error("family {family} needs parameter --{param}")]
    MissingParam { family: String, param: String },
    #[error("family {family}: {reason}")]
    InvalidSize { family: String, reason: String },
}

/// Index of `(i, j)`, `1 <= i < j <= m`, in lexicographic order.
pub fn shift_index(m: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= m);
    // pairs with first entry below i, then the offset inside row i
    (i - 1) * (2 * m - i) / 2 + (j - i - 1)
}

/// All pairs `(i, j)` in vertex order.
pub fn shift_pairs(m: usize) -> Vec<(usize, usize)> {
    (1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).collect()
}

/// The shift graph `H_m`: `(i, j) ~ (j, k)`.
pub fn shift_graph(m: usize) -> Graph {
    assert!(m >= 2, "shift graph needs m >= 2");
    let mut edges = Vec::new();
    for (i, j) in shift_pairs(m) {
        for k in j + 1..=m {
            edges.push((shift_index(m, i, j), shift_index(m, j, k)));
        }
    }
    Graph::new(m * (m - 1) / 2, edges).unwrap()
}

/// Arc `(i, j) -> (j, k)` with label `j`.
pub fn shift_labeling(m: usize) -> ArcLabeling {
    let mut triples = Vec::new();
    for (i, j) in shift_pairs(m) {
        for k in j + 1..=m {
            triples.push((shift_index(m, i, j), shift_index(m, j, k), j as i64));
        }
    }
    ArcLabeling::from_triples(shift_graph(m), &triples).unwrap()
}

/// Jones graph vertex names: `J_1` is the 5-cycle `a_1 b_1 c_1 d e` on
/// `0..5`; step `i >= 2` appends `a_i, b_i, c_i` as `3i-1, 3i, 3i+1`.
pub mod jones {
    pub const D: usize = 3;
    pub const E: usize = 4;

    pub fn a(i: usize) -> usize {
        if i == 1 { 0 } else { 3 * i - 1 }
    }

    pub fn b(i: usize) -> usize {
        if i == 1 { 1 } else { 3 * i }
    }

    pub fn c(i: usize) -> usize {
        if i == 1 { 2 } else { 3 * i + 1 }
    }
}

fn jones_triples(i: usize) -> Vec<(usize, usize, i64)> {
    use jones::*;
    assert!(i >= 1, "Jones graphs start at J_1");
    // Closing the 5-cycle takes labels 0 (e -> a_1, e -> d) and 1 (d -> c_1).
    let mut t = vec![(E, a(1), 0), (E, D, 0), (D, c(1), 1)];
    for s in 1..=i {
        let l = 2 * s as i64;
        t.push((a(s), b(s), l));
        t.push((c(s), b(s), l));
        if s < i {
            t.push((b(s), a(s + 1), l + 1));
            t.push((a(s), c(s + 1), l));
            t.push((c(s), c(s + 1), l));
        }
    }
    t
}

/// `J_i` on `3i + 2` vertices.
pub fn jones_graph(i: usize) -> Graph {
    Graph::new(3 * i + 2, jones_triples(i).into_iter().map(|(u, v, _)| (u, v))).unwrap()
}

pub fn jones_labeling(i: usize) -> ArcLabeling {
    ArcLabeling::from_triples(jones_graph(i), &jones_triples(i)).unwrap()
}

/// `W'_g`: the cycle `0..g`, apexes `g` and `g+1`, and every ray from an apex
/// to a cycle vertex subdivided `floor(g/2)` times. Subdivision vertices of
/// the ray from apex `p` to cycle vertex `c` follow from the apex outwards.
pub fn double_wheel_subdivided(g: usize) -> Graph {
    assert!(g >= 3, "W'_g needs g >= 3");
    let k = g / 2;
    let mut edges: Vec<(usize, usize)> = (0..g).map(|i| (i, (i + 1) % g)).collect();
    let mut next = g + 2;
    for apex in [g, g + 1] {
        for c in 0..g {
            let mut prev = apex;
            for _ in 0..k {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, c));
        }
    }
    Graph::new(next, edges).unwrap()
}

/// `a = 0`, `b = 1` joined by `k` paths `a x_i y_i b` (`x_i = 2+2i`,
/// `y_i = 3+2i`), then a path of length 5 from each `x_i` to `y_i` through
/// `2+2k+4i .. 2+2k+4i+3`.
pub fn series_parallel_gadget(k: usize) -> Graph {
    assert!(k >= 1, "gadget needs at least one path");
    let mut edges = Vec::new();
    for i in 0..k {
        let (x, y) = (2 + 2 * i, 3 + 2 * i);
        edges.extend([(0, x), (x, y), (y, 1)]);
        let base = 2 + 2 * k + 4 * i;
        let mut prev = x;
        for s in 0..4 {
            edges.push((prev, base + s));
            prev = base + s;
        }
        edges.push((prev, y));
    }
    Graph::new(2 + 6 * k, edges).unwrap()
}

/// Vertex names of `G_1 .. G_3`. `G_1` is the 4-cycle `a b d c` with the
/// path `b e f c`; `G_2` adds the path `a j k d`; `G_3` glues a second copy
/// of `G_2` whose `a, b, c, d` are `j, a, i, c` and whose `a-d` path is
/// `j k d c`, with new vertices `i, e', f'`.
pub mod planar_witness {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
    pub const D: usize = 3;
    pub const E: usize = 4;
    pub const F: usize = 5;
    pub const J: usize = 6;
    pub const K: usize = 7;
    pub const I: usize = 8;
    pub const E2: usize = 9;
    pub const F2: usize = 10;
}

pub fn g1() -> Graph {
    use planar_witness::*;
    Graph::new(6, [(A, B), (A, C), (B, D), (C, D), (B, E), (C, F), (E, F)]).unwrap()
}

pub fn g2() -> Graph {
    use planar_witness::*;
    let mut e = g1().edges().to_vec();
    e.extend([(A, J), (J, K), (K, D)]);
    Graph::new(8, e).unwrap()
}

pub fn g3() -> Graph {
    use planar_witness::*;
    let mut e = g2().edges().to_vec();
    e.extend([(J, I), (I, C), (A, E2), (E2, F2), (F2, I)]);
    Graph::new(11, e).unwrap()
}

/// A vertex of `R'(n1, n2)`: a surviving grid vertex, or one of the four
/// vertices replacing a removed grid vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RPrimeVertex {
    Grid(usize, usize),
    /// Parts 0..4 are left-bottom, right-bottom, left-top, right-top in the
    /// 2-CBU drawing; they form the path `0 - 1 - 2 - 3`.
    Gadget(usize, usize, u8),
}

/// Grid vertices `(i, j)` with `i` and `j` both even are removed; those with
/// `i + j = 2 (mod 4)` are replaced by a 4-vertex path whose ends and inner
/// vertices connect to the four grid neighbours: part 0 to `(i-1, j)`,
/// part 1 to `(i, j+1)`, part 2 to `(i, j-1)`, part 3 to `(i+1, j)`.
/// Vertices are numbered in row-major order of positions.
pub fn r_prime_vertices(n1: usize, n2: usize) -> Vec<RPrimeVertex> {
    let mut out = Vec::new();
    for i in 1..=n1 {
        for j in 1..=n2 {
            if i % 2 == 1 || j % 2 == 1 {
                out.push(RPrimeVertex::Grid(i, j));
            } else if (i + j) % 4 == 2 {
                out.extend((0..4).map(|p| RPrimeVertex::Gadget(i, j, p)));
            }
        }
    }
    out
}

pub fn r_prime(n1: usize, n2: usize) -> Graph {
    assert!(n1 >= 1 && n2 >= 1, "R' needs positive dimensions");
    let verts = r_prime_vertices(n1, n2);
    let index: BTreeMap<RPrimeVertex, usize> = verts.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let grid = |i: usize, j: usize| index.get(&RPrimeVertex::Grid(i, j)).copied();
    let mut edges = Vec::new();
    for (&v, &k) in &index {
        match v {
            RPrimeVertex::Grid(i, j) => {
                for w in [grid(i, j + 1), grid(i + 1, j)].into_iter().flatten() {
                    edges.push((k, w));
                }
            }
            RPrimeVertex::Gadget(i, j, p) => {
                let next = index.get(&RPrimeVertex::Gadget(i, j, p + 1)).copied();
                let outer = match p {
                    0 => grid(i - 1, j),
                    1 => grid(i, j + 1),
                    2 => grid(i, j - 1),
                    _ => grid(i + 1, j),
                };
                edges.extend(next.into_iter().chain(outer).map(|w| (k, w)));
            }
        }
    }
    Graph::new(verts.len(), edges).unwrap()
}

pub type Params = BTreeMap<String, usize>;

fn param(family: &str, params: &Params, name: &str, default: Option<usize>) -> Result<usize, FamilyError> {
    params.get(name).copied().or(default).ok_or_else(|| FamilyError::MissingParam {
        family: family.to_string(),
        param: name.to_string(),
    })
}

fn at_least(family: &str, name: &str, value: usize, min: usize) -> Result<usize, FamilyError> {
    if value < min {
        Err(FamilyError::InvalidSize {
            family: family.to_string(),
            reason: format!("{name} = {value} is below {min}"),
        })
    } else {
        Ok(value)
    }
}

/// Family names accepted by [`generate`].
pub const FAMILY_NAMES: &[&str] = &[
    "cycle", "path", "complete", "complete-bipartite", "crown", "grid", "hypercube", "shift", "jones",
    "double-wheel", "series-parallel", "g1", "g2", "g3", "r-prime",
];

/// Builds a family by name. Sizes come from `params` (`n`, `a`, `b`, `m`,
/// `i`, `g`, `k`, `n1`, `n2`, `d`).
pub fn generate(name: &str, params: &Params) -> Result<Graph, FamilyError> {
    let p = |n: &str, d: Option<usize>| param(name, params, n, d);
    let min = |n: &str, v: usize, m: usize| at_least(name, n, v, m);
    Ok(match name {
        "cycle" => generators::cycle(min("n", p("n", None)?, 3)?),
        "path" => generators::path(min("n", p("n", None)?, 1)?),
        "complete" => generators::complete(p("n", None)?),
        "complete-bipartite" => generators::complete_bipartite(p("a", None)?, p("b", None)?),
        "crown" => generators::complete_bipartite_minus_matching(p("n", None)?),
        "grid" => {
            let n = params.get("n").copied();
            let rows = min("rows", p("rows", n)?, 1)?;
            let cols = min("cols", p("cols", n)?, 1)?;
            generators::grid_rect(rows, cols)
        }
        "hypercube" => {
            let d = p("d", None)?;
            if d > 16 {
                return Err(FamilyError::InvalidSize { family: name.into(), reason: "d above 16".into() });
            }
            generators::hypercube(d as u32)
        }
        "shift" => shift_graph(min("m", p("m", None)?, 2)?),
        "jones" => jones_graph(min("i", p("i", None)?, 1)?),
        "double-wheel" => double_wheel_subdivided(min("g", p("g", None)?, 3)?),
        "series-parallel" => series_parallel_gadget(min("k", p("k", Some(9))?, 1)?),
        "g1" => g1(),
        "g2" => g2(),
        "g3" => g3(),
        "r-prime" => r_prime(min("n1", p("n1", None)?, 1)?, min("n2", p("n2", None)?, 1)?),
        other => return Err(FamilyError::Unknown(other.to_string())),
    })
}

/// The homogeneous labeling that comes with a family, if any.
pub fn family_labeling(name: &str, params: &Params) -> Result<Option<ArcLabeling>, FamilyError> {
    let g = generate(name, params)?;
    Ok(match name {
        "shift" => Some(shift_labeling(params["m"])),
        "jones" => Some(jones_labeling(params["i"])),
        _ if g.is_bipartite() => {
            let side = g.bipartition().unwrap();
            let arcs: Vec<_> =
                g.edges().iter().map(|&(u, v)| if side[u] { (v, u) } else { (u, v) }).collect();
            let o = Orientation::from_graph_arcs(g.clone(), &arcs).unwrap();
            let m = o.graph().m();
            Some(ArcLabeling::new(o, vec![1; m]).unwrap())
        }
        _ => None,
    })
}
