//! Explicit box representations. Every constructor returns boxes whose
//! contact graph is the intended graph; tests check this with the exact
//! verifier.

mod outerplanar;

use std::collections::BTreeMap;

use num_traits::Signed;
use thiserror::Error;

use crate::families::{r_prime_vertices, shift_index, shift_pairs, RPrimeVertex};
use crate::geometry::{contact_graph, lift_dimension, AxisBox, BoxError, BoxRepresentation, Relation};
use crate::graph::{subdivide, Graph};
use crate::labeling::{ArcLabeling, LabelingViolation};
use crate::rational::{frac, half, q, Q};

pub use outerplanar::{outerplanar_2cbu, OuterplanarError, OuterplanarRepresentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{0}")]
    Box(#[from] BoxError),
    #[error("edge {0}-{1} does not cross the given bipartition")]
    NotBipartite(usize, usize),
    #[error("part lists must cover each vertex exactly once")]
    BadParts,
    #[error("no point lies in boxes {0} and {1} only")]
    Improper(usize, usize),
    #[error("intersection graph differs from the given graph")]
    GraphMismatch,
    #[error("every edge must be subdivided at least twice (edge {0}-{1} has {2})")]
    TooFewSubdivisions(usize, usize, usize),
    #[error("{0}-{1} is not a contact of the representation")]
    NotInContact(usize, usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("labeling is not homogeneous: {0}")]
    Labeling(#[from] LabelingViolation),
    #[error("size parameter must be at least {0}")]
    TooSmall(usize),
}

/// Boxes that may overlap; their intersection graph is the represented
/// graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionRepresentation {
    d: usize,
    boxes: Vec<AxisBox>,
}

impl IntersectionRepresentation {
    pub fn new(d: usize, boxes: Vec<AxisBox>) -> Result<Self, ConstructionError> {
        // reuse the dimension checks of contact representations
        let r = BoxRepresentation::new(d, boxes)?;
        Ok(IntersectionRepresentation { d, boxes: r.boxes().to_vec() })
    }

    pub fn from_ints(boxes: &[&[(i64, i64)]]) -> Self {
        let d = boxes.first().map_or(1, |b| b.len());
        Self::new(d, boxes.iter().map(|b| AxisBox::from_ints(b)).collect()).expect("consistent dimensions")
    }

    /// One axis per non-adjacent pair `{u, v}`: `u` gets `[0,1]`, `v` gets
    /// `[2,3]`, every other vertex `[0,3]`.
    pub fn from_non_edges(g: &Graph) -> Self {
        let n = g.n();
        let mut axes: Vec<Vec<(Q, Q)>> = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !g.has_edge(u, v) {
                    axes.push(
                        (0..n)
                            .map(|w| match w {
                                _ if w == u => (q(0), q(1)),
                                _ if w == v => (q(2), q(3)),
                                _ => (q(0), q(3)),
                            })
                            .collect(),
                    );
                }
            }
        }
        if axes.is_empty() {
            axes.push(vec![(q(0), q(1)); n]);
        }
        let boxes = (0..n)
            .map(|w| AxisBox::new(axes.iter().map(|a| a[w].clone()).collect()).unwrap())
            .collect();
        IntersectionRepresentation { d: axes.len(), boxes }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.boxes.len()
    }

    pub fn boxes(&self) -> &[AxisBox] {
        &self.boxes
    }

    pub fn intersection_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.boxes[u].intersects(&self.boxes[v]) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n(), edges).unwrap()
    }

    /// Quarter of the smallest positive gap between endpoint coordinates,
    /// per axis. Growing every box by this much on each side keeps the
    /// intersection graph and makes every intersection full-dimensional.
    fn expansion(&self) -> Vec<Q> {
        (0..self.d)
            .map(|k| {
                let mut c: Vec<&Q> = self.boxes.iter().flat_map(|b| [b.lo(k), b.hi(k)]).collect();
                c.sort();
                c.dedup();
                let gap = c.windows(2).map(|w| w[1] - w[0]).min().unwrap_or_else(|| q(4));
                gap / q(4)
            })
            .collect()
    }

    fn expanded(&self, delta: &[Q]) -> Vec<AxisBox> {
        self.boxes
            .iter()
            .map(|b| {
                AxisBox::new(
                    b.intervals().iter().zip(delta).map(|((lo, hi), e)| (lo - e, hi + e)).collect(),
                )
                .unwrap()
            })
            .collect()
    }

    /// A point of boxes `u` and `v` outside every other box, with every
    /// coordinate an endpoint or the midpoint of two consecutive endpoints.
    pub fn private_point(&self, u: usize, v: usize) -> Option<Vec<Q>> {
        let (a, b) = (&self.boxes[u], &self.boxes[v]);
        let mut cands: Vec<Vec<Q>> = Vec::with_capacity(self.d);
        for k in 0..self.d {
            let lo = a.lo(k).max(b.lo(k)).clone();
            let hi = a.hi(k).min(b.hi(k)).clone();
            if lo > hi {
                return None;
            }
            let mut c: Vec<Q> = self
                .boxes
                .iter()
                .flat_map(|x| [x.lo(k).clone(), x.hi(k).clone()])
                .filter(|x| *x >= lo && *x <= hi)
                .collect();
            c.push(lo);
            c.push(hi);
            c.sort();
            c.dedup();
            let mids: Vec<Q> = c.windows(2).map(|w| (&w[0] + &w[1]) / q(2)).collect();
            c.extend(mids);
            c.sort();
            cands.push(c);
        }
        let mut idx = vec![0usize; self.d];
        loop {
            let p: Vec<Q> = idx.iter().enumerate().map(|(k, &i)| cands[k][i].clone()).collect();
            let private =
                (0..self.n()).all(|w| w == u || w == v || !self.boxes[w].contains_point(&p));
            if private {
                return Some(p);
            }
            let mut k = 0;
            loop {
                if k == self.d {
                    return None;
                }
                idx[k] += 1;
                if idx[k] < cands[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    /// Every edge of the intersection graph owns a private point.
    pub fn is_proper(&self) -> bool {
        self.intersection_graph().edges().iter().all(|&(u, v)| self.private_point(u, v).is_some())
    }
}

fn check_parts(n: usize, a: &[usize], b: &[usize]) -> Result<Vec<Option<bool>>, ConstructionError> {
    let mut side = vec![None; n];
    for (&v, s) in a.iter().map(|v| (v, false)).chain(b.iter().map(|v| (v, true))) {
        if v >= n {
            return Err(ConstructionError::VertexOutOfRange(v));
        }
        if side[v].is_some() {
            return Err(ConstructionError::BadParts);
        }
        side[v] = Some(s);
    }
    Ok(side)
}

/// Expands the boxes, then prepends the contact axis with `[0,1]` for part
/// `a` and `[1,2]` for part `b`.
pub fn bipartite_to_cbu(
    r: &IntersectionRepresentation,
    a: &[usize],
    b: &[usize],
) -> Result<BoxRepresentation, ConstructionError> {
    let side = check_parts(r.n(), a, b)?;
    if side.iter().any(Option::is_none) {
        return Err(ConstructionError::BadParts);
    }
    let g = r.intersection_graph();
    for &(u, v) in g.edges() {
        if side[u] == side[v] {
            return Err(ConstructionError::NotBipartite(u, v));
        }
    }
    let expanded = r.expanded(&r.expansion());
    let boxes = expanded
        .iter()
        .zip(&side)
        .map(|(x, s)| {
            let first = if *s == Some(true) { (q(1), q(2)) } else { (q(0), q(1)) };
            x.with_prefix_axis(first)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BoxRepresentation::new(r.d() + 1, boxes)?)
}

/// Representation of the 1-subdivision of `g` (numbered as
/// [`subdivide`] numbers it) from a proper intersection representation.
/// Vertex `v` gets `[2v, 2v+1]` on the contact axis; the subdivision vertex
/// of `uv`, `u < v`, gets `[2u+1, 2v]` times a small box around a private
/// point of `u` and `v`.
pub fn subdivision_from_proper(
    r: &IntersectionRepresentation,
    g: &Graph,
) -> Result<BoxRepresentation, ConstructionError> {
    if r.intersection_graph() != *g {
        return Err(ConstructionError::GraphMismatch);
    }
    let delta = r.expansion();
    let mut boxes: Vec<AxisBox> = r
        .expanded(&delta)
        .iter()
        .enumerate()
        .map(|(v, x)| x.with_prefix_axis((q(2 * v as i64), q(2 * v as i64 + 1))))
        .collect::<Result<_, _>>()?;
    for &(u, v) in g.edges() {
        let p = r.private_point(u, v).ok_or(ConstructionError::Improper(u, v))?;
        let mut iv = vec![(q(2 * u as i64 + 1), q(2 * v as i64))];
        iv.extend(p.iter().zip(&delta).map(|(c, e)| (c - e / q(2), c + e / q(2))));
        boxes.push(AxisBox::new(iv)?);
    }
    Ok(BoxRepresentation::new(r.d() + 1, boxes)?)
}

/// 3-dimensional representation of the subdivision of `g` with `counts[e]`
/// (at least 2) new vertices on edge `e`, numbered as [`subdivide`] does.
///
/// With `v_i` the `i`-th vertex (from 1) and edge `k` (from 1) joining
/// `v_i, v_j`, `i < j`, subdivided `r` times:
/// `v_i = [3i, 3i+1] x [n-i, n-i+1] x [0, max(2m, 1)]`,
/// `u_1 = [3i+1, 3i+2] x [n-j, n-i+1] x [2k-1, 2k]`, and `u_l` (`l >= 2`)
/// takes the `(l-1)`-th of `r-1` equal pieces of `[3i+2, 3j]` times
/// `[n-j, n-j+1/2] x [2k-1, 2k]`.
pub fn double_subdivision_to_3cbu(g: &Graph, counts: &[usize]) -> Result<BoxRepresentation, ConstructionError> {
    assert_eq!(counts.len(), g.m(), "one count per edge");
    for (&(u, v), &c) in g.edges().iter().zip(counts) {
        if c < 2 {
            return Err(ConstructionError::TooFewSubdivisions(u, v, c));
        }
    }
    let n = g.n() as i64;
    let m = g.m() as i64;
    let mut boxes: Vec<AxisBox> = (0..g.n())
        .map(|v| {
            let i = v as i64 + 1;
            AxisBox::new(vec![(q(3 * i), q(3 * i + 1)), (q(n - i), q(n - i + 1)), (q(0), q((2 * m).max(1)))])
        })
        .collect::<Result<_, _>>()?;
    for (e, (&(u, v), &r)) in g.edges().iter().zip(counts).enumerate() {
        let (i, j, k) = (u as i64 + 1, v as i64 + 1, e as i64 + 1);
        let z = (q(2 * k - 1), q(2 * k));
        boxes.push(AxisBox::new(vec![(q(3 * i + 1), q(3 * i + 2)), (q(n - j), q(n - i + 1)), z.clone()])?);
        let step = frac(3 * j - 3 * i - 2, r as i64 - 1);
        for l in 2..=r as i64 {
            let x0 = q(3 * i + 2) + &step * q(l - 2);
            let x1 = q(3 * i + 2) + &step * q(l - 1);
            boxes.push(AxisBox::new(vec![(x0, x1), (q(n - j), q(n - j) + half()), z.clone()])?);
        }
    }
    Ok(BoxRepresentation::new(3, boxes)?)
}

/// Grid vertex `(i, j)` (numbered as in [`crate::generators::grid`]) gets
/// `[i+j-1, i+j] x [2i-2j, 2i-2j+3]`.
pub fn grid_2cbu(n: usize) -> Result<BoxRepresentation, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::TooSmall(1));
    }
    grid_rect_2cbu(n, n)
}

pub fn grid_rect_2cbu(rows: usize, cols: usize) -> Result<BoxRepresentation, ConstructionError> {
    let mut boxes = Vec::with_capacity(rows * cols);
    for i in 1..=rows as i64 {
        for j in 1..=cols as i64 {
            boxes.push(grid_box(i, j));
        }
    }
    Ok(BoxRepresentation::new(2, boxes)?)
}

fn grid_box(i: i64, j: i64) -> AxisBox {
    AxisBox::from_ints(&[(i + j - 1, i + j), (2 * i - 2 * j, 2 * i - 2 * j + 3)])
}

/// Grid boxes for the surviving grid vertices; a replaced vertex at
/// `(i, j)` with `s = i+j`, `t = 2i-2j` becomes
/// `[s-1, s-1/2] x [t, t+1]`, `[s-1/2, s] x [t, t+7/4]`,
/// `[s-1, s-1/2] x [t+3/2, t+3]`, `[s-1/2, s] x [t+2, t+3]`.
pub fn r_prime_2cbu(n1: usize, n2: usize) -> Result<BoxRepresentation, ConstructionError> {
    if n1 == 0 || n2 == 0 {
        return Err(ConstructionError::TooSmall(1));
    }
    let boxes = r_prime_vertices(n1, n2)
        .into_iter()
        .map(|v| match v {
            RPrimeVertex::Grid(i, j) => Ok(grid_box(i as i64, j as i64)),
            RPrimeVertex::Gadget(i, j, part) => {
                let s = q(i as i64 + j as i64);
                let t = q(2 * i as i64 - 2 * j as i64);
                let left = (&s - q(1), &s - half());
                let right = (&s - half(), s.clone());
                let (x, y) = match part {
                    0 => (left, (t.clone(), &t + q(1))),
                    1 => (right, (t.clone(), &t + frac(7, 4))),
                    2 => (left, (&t + frac(3, 2), &t + q(3))),
                    _ => (right, (&t + q(2), &t + q(3))),
                };
                AxisBox::new(vec![x, y])
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BoxRepresentation::new(2, boxes)?)
}

fn max_abs_coordinate(boxes: &[AxisBox]) -> Q {
    boxes
        .iter()
        .flat_map(|b| b.intervals().iter().flat_map(|(lo, hi)| [lo.abs(), hi.abs()]))
        .max()
        .unwrap_or_else(|| q(0))
}

/// Representation of `H_m` (numbered as [`crate::families::shift_graph`])
/// in dimension `m - 1`, with contact-axis interval `[i, j]` for `(i, j)`.
pub fn shift_graph_representation(m: usize) -> Result<BoxRepresentation, ConstructionError> {
    if m < 2 {
        return Err(ConstructionError::TooSmall(2));
    }
    let mut boxes: BTreeMap<(usize, usize), Vec<(Q, Q)>> = BTreeMap::new();
    boxes.insert((1, 2), vec![(q(1), q(2))]);
    for top in 3..=m {
        let prev = top - 1;
        let omega = {
            let all: Vec<AxisBox> = boxes.values().map(|iv| AxisBox::new(iv.clone()).unwrap()).collect();
            max_abs_coordinate(&all) + q(1)
        };
        let old_dims = top - 3; // axes besides the contact axis
        let mut next: BTreeMap<(usize, usize), Vec<(Q, Q)>> = BTreeMap::new();
        for (&(i, j), iv) in &boxes {
            let mut a = iv.clone();
            a.push(if j == prev { (q(1), q(2)) } else { (q(1), q(4)) });
            next.insert((i, j), a);
            if j == prev {
                let mut twin = iv.clone();
                twin[0] = (q(i as i64), q(top as i64));
                twin.push((q(3), q(4)));
                next.insert((i, top), twin);
            }
        }
        let mut apex = vec![(q(prev as i64), q(top as i64))];
        apex.extend(std::iter::repeat((-omega.clone(), omega.clone())).take(old_dims));
        apex.push((q(1), q(2)));
        next.insert((prev, top), apex);
        boxes = next;
    }
    let out = shift_pairs(m)
        .into_iter()
        .map(|p| AxisBox::new(boxes.remove(&p).expect("every pair is built")))
        .collect::<Result<Vec<_>, _>>()?;
    debug_assert!(shift_pairs(m).iter().enumerate().all(|(k, &(i, j))| shift_index(m, i, j) == k));
    Ok(BoxRepresentation::new(m - 1, out)?)
}

/// Adds a new last axis: `[0,1]` for `a`, `[2,3]` for `b`, `[0,3]` for the
/// rest. Removes exactly the `a`-`b` contacts, which must all exist.
pub fn remove_bipartite_edges(
    r: &BoxRepresentation,
    a: &[usize],
    b: &[usize],
) -> Result<BoxRepresentation, ConstructionError> {
    let side = check_parts(r.n(), a, b)?;
    for &u in a {
        for &v in b {
            if !matches!(crate::geometry::classify(r.get(u), r.get(v)), Relation::Contact { .. }) {
                return Err(ConstructionError::NotInContact(u, v));
            }
        }
    }
    let intervals: Vec<(Q, Q)> = side
        .iter()
        .map(|s| match s {
            Some(false) => (q(0), q(1)),
            Some(true) => (q(2), q(3)),
            None => (q(0), q(3)),
        })
        .collect();
    Ok(lift_dimension(r, &intervals)?)
}

/// Adds a false twin `v' = n` of `v`: same boxes, then a new axis with
/// `[0,1]` for `v`, `[2,3]` for `v'` and `[0,3]` for the rest.
pub fn twin_representation(r: &BoxRepresentation, v: usize) -> Result<BoxRepresentation, ConstructionError> {
    if v >= r.n() {
        return Err(ConstructionError::VertexOutOfRange(v));
    }
    let mut boxes = r.boxes().to_vec();
    boxes.push(r.get(v).clone());
    let widened = BoxRepresentation::new(r.d(), boxes)?;
    let intervals: Vec<(Q, Q)> = (0..widened.n())
        .map(|w| match w {
            _ if w == v => (q(0), q(1)),
            _ if w == r.n() => (q(2), q(3)),
            _ => (q(0), q(3)),
        })
        .collect();
    Ok(lift_dimension(&widened, &intervals)?)
}

/// Where each vertex of `g` sits in `H_m` plus twins: vertex `v` with
/// in-label `i` and out-label `j` (1 for sources, `m` for sinks) maps to copy
/// `gamma[v].2` of `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftEmbedding {
    pub m: usize,
    pub gamma: Vec<(usize, usize, usize)>,
    /// Number of twins added per pair.
    pub twins: BTreeMap<(usize, usize), usize>,
}

impl ShiftEmbedding {
    pub fn twin_count(&self) -> usize {
        self.twins.values().sum()
    }
}

/// Normalizes labels to `2..m-1` with `m` minimal and maps every vertex to
/// its `(in, out)` pair.
pub fn shift_embedding(lab: &ArcLabeling) -> Result<ShiftEmbedding, ConstructionError> {
    lab.check()?;
    let mut distinct: Vec<i64> = lab.labels().to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let m = distinct.len() + 2;
    let rank = |l: i64| distinct.binary_search(&l).unwrap() + 2;
    let n = lab.orientation().graph().n();
    let mut copies: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut gamma = Vec::with_capacity(n);
    for v in 0..n {
        let i = lab.in_label(v).map_or(1, rank);
        let j = lab.out_label(v).map_or(m, rank);
        let c = copies.entry((i, j)).or_insert(0);
        gamma.push((i, j, *c));
        *c += 1;
    }
    let twins = copies.into_iter().filter(|&(_, c)| c > 1).map(|(p, c)| (p, c - 1)).collect();
    Ok(ShiftEmbedding { m, gamma, twins })
}

#[derive(Debug, Clone)]
pub struct ShiftPipeline {
    pub representation: BoxRepresentation,
    pub embedding: ShiftEmbedding,
    /// Dimension before the star removals (`m - 1 + t`).
    pub shift_dimension: usize,
    /// Stars `K_{1,b}` removed, as `(centre, leaves)`.
    pub stars: Vec<(usize, Vec<usize>)>,
}

/// Box representation of `g` from a homogeneous labeling of one of its
/// orientations: embed `g` into `H_m` with twins, represent that, keep the
/// used boxes and cut the surplus contacts as stars, centres in increasing
/// vertex order.
pub fn labeling_to_representation(g: &Graph, lab: &ArcLabeling) -> Result<ShiftPipeline, ConstructionError> {
    if lab.orientation().graph() != g {
        return Err(ConstructionError::GraphMismatch);
    }
    let emb = shift_embedding(lab)?;
    let m = emb.m;
    let mut rep = shift_graph_representation(m)?;
    // box index of copy c of (i, j)
    let mut copy_index: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for (k, (i, j)) in shift_pairs(m).into_iter().enumerate() {
        copy_index.insert((i, j, 0), k);
    }
    for (&(i, j), &t) in &emb.twins {
        let base = shift_index(m, i, j);
        for c in 1..=t {
            rep = twin_representation(&rep, base)?;
            copy_index.insert((i, j, c), rep.n() - 1);
        }
    }
    let shift_dimension = rep.d();
    let chosen: Vec<usize> = emb.gamma.iter().map(|&(i, j, c)| copy_index[&(i, j, c)]).collect();
    rep = rep.restrict(&chosen);

    let host = contact_graph(&rep).map_err(|_| ConstructionError::GraphMismatch)?;
    let mut extra: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for &(u, v) in host.edges() {
        if !g.has_edge(u, v) {
            extra[u].push(v);
            extra[v].push(u);
        }
    }
    if g.edges().iter().any(|&(u, v)| !host.has_edge(u, v)) {
        return Err(ConstructionError::GraphMismatch);
    }
    let mut removed = vec![false; g.n()];
    let mut stars = Vec::new();
    for v in 0..g.n() {
        let leaves: Vec<usize> = extra[v].iter().copied().filter(|&w| !removed[w]).collect();
        removed[v] = true;
        if leaves.is_empty() {
            continue;
        }
        rep = remove_bipartite_edges(&rep, &[v], &leaves)?;
        stars.push((v, leaves));
    }
    Ok(ShiftPipeline { representation: rep, embedding: emb, shift_dimension, stars })
}

/// `B'`: `b` plus vertices `x = n`, `z = n+1`, `y = n+2`, the path `x z y`,
/// `x` joined to all of `xs` and `y` to all of `ys`.
pub fn bprime_graph(b: &Graph, xs: &[usize], ys: &[usize]) -> Graph {
    let n = b.n();
    let (x, z, y) = (n, n + 1, n + 2);
    let mut edges = b.edges().to_vec();
    edges.extend([(x, z), (z, y)]);
    edges.extend(xs.iter().map(|&v| (v, x)));
    edges.extend(ys.iter().map(|&v| (v, y)));
    Graph::new(n + 3, edges).unwrap()
}

/// Representation of [`bprime_graph`] in dimension `d + 1` from an
/// intersection representation of `b` in dimension `d`. With `W` the
/// largest coordinate magnitude of the shifted part plus 2:
/// `x = [-1,0] x [-W,W]^d`, `y = [2,3] x [-W,W]^d`,
/// `z = [0,2] x [W-1,W]^d`.
pub fn bprime_construction(
    r: &IntersectionRepresentation,
    xs: &[usize],
    ys: &[usize],
) -> Result<BoxRepresentation, ConstructionError> {
    let base = bipartite_to_cbu(r, xs, ys)?;
    let omega = max_abs_coordinate(base.boxes()) + q(2);
    let d = r.d();
    let wide = |a: i64, b: i64| {
        let mut iv = vec![(q(a), q(b))];
        iv.extend(std::iter::repeat((-omega.clone(), omega.clone())).take(d));
        AxisBox::new(iv)
    };
    let mut boxes = base.boxes().to_vec();
    boxes.push(wide(-1, 0)?);
    let mut z = vec![(q(0), q(2))];
    z.extend(std::iter::repeat((&omega - q(1), omega.clone())).take(d));
    boxes.push(AxisBox::new(z)?);
    boxes.push(wide(2, 3)?);
    Ok(BoxRepresentation::new(d + 1, boxes)?)
}

/// The uniform 1-subdivision target of [`subdivision_from_proper`].
pub fn one_subdivision(g: &Graph) -> Graph {
    subdivide(g, &vec![1; g.m()]).graph
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::shift_graph;
    use crate::generators::{complete, complete_bipartite, cycle, grid, path};
    use crate::geometry::{induced_labeling, verify_representation};
    use crate::graph::add_false_twin;
    use crate::labeling::solve_labeling;
    use crate::{Orientation};

    fn ok(r: &BoxRepresentation, g: &Graph) {
        if let Err(report) = verify_representation(r, g) {
            panic!("verification failed:\n{report}");
        }
        assert!(induced_labeling(r).unwrap().check().is_ok());
    }

    #[test]
    fn bipartite_lift() {
        let edge = IntersectionRepresentation::from_ints(&[&[(0, 2)], &[(1, 3)]]);
        ok(&bipartite_to_cbu(&edge, &[0], &[1]).unwrap(), &path(2));
        // star: centre [0,10], leaves at 1-2, 4-5, 8-9
        let star = IntersectionRepresentation::from_ints(&[&[(0, 10)], &[(1, 2)], &[(4, 5)], &[(8, 9)]]);
        let r = bipartite_to_cbu(&star, &[0], &[1, 2, 3]).unwrap();
        assert_eq!(r.d(), 2);
        ok(&r, &complete_bipartite(1, 3));
        assert!(matches!(bipartite_to_cbu(&star, &[0, 1], &[2, 3]), Err(ConstructionError::NotBipartite(0, 1))));
    }

    /// An intersection representation of `C_6` in the plane.
    pub(crate) fn c6_rep() -> IntersectionRepresentation {
        IntersectionRepresentation::from_ints(&[
            &[(0, 2), (0, 1)],
            &[(2, 4), (0, 1)],
            &[(4, 5), (0, 5)],
            &[(2, 4), (4, 5)],
            &[(0, 2), (4, 5)],
            &[(-1, 0), (0, 5)],
        ])
    }

    #[test]
    fn c6_in_three_dimensions() {
        let r = c6_rep();
        assert_eq!(r.intersection_graph(), cycle(6));
        let rep = bipartite_to_cbu(&r, &[0, 2, 4], &[1, 3, 5]).unwrap();
        assert_eq!(rep.d(), 3);
        ok(&rep, &cycle(6));
    }

    fn k3_proper() -> IntersectionRepresentation {
        IntersectionRepresentation::from_ints(&[&[(0, 2), (0, 2)], &[(1, 3), (0, 2)], &[(0, 3), (1, 3)]])
    }

    #[test]
    fn proper_subdivisions() {
        let edge = IntersectionRepresentation::from_ints(&[&[(0, 2)], &[(1, 3)]]);
        ok(&subdivision_from_proper(&edge, &path(2)).unwrap(), &path(3).permuted(&[0, 2, 1]));
        let r = k3_proper();
        assert!(r.is_proper());
        let rep = subdivision_from_proper(&r, &complete(3)).unwrap();
        assert_eq!(rep.d(), 3);
        ok(&rep, &one_subdivision(&complete(3)));
        let bad = IntersectionRepresentation::from_ints(&[&[(0, 4)], &[(1, 3)], &[(1, 3)]]);
        assert!(!bad.is_proper());
        assert!(matches!(subdivision_from_proper(&bad, &complete(3)), Err(ConstructionError::Improper(0, 1))));
    }

    #[test]
    fn double_subdivisions() {
        let sub = |g: &Graph| subdivide(g, &vec![2; g.m()]).graph;
        for g in [complete(3), path(2), complete(4)] {
            ok(&double_subdivision_to_3cbu(&g, &vec![2; g.m()]).unwrap(), &sub(&g));
        }
        let g = complete(4);
        let counts = vec![2, 3, 4, 5, 2, 7];
        ok(&double_subdivision_to_3cbu(&g, &counts).unwrap(), &subdivide(&g, &counts).graph);
        assert!(double_subdivision_to_3cbu(&path(2), &[1]).is_err());
    }

    #[test]
    fn grids() {
        assert_eq!(grid_2cbu(1).unwrap().n(), 1);
        let r = grid_2cbu(4).unwrap();
        assert_eq!(r.get(0), &AxisBox::from_ints(&[(1, 2), (0, 3)]));
        for n in 1..=8 {
            ok(&grid_2cbu(n).unwrap(), &grid(n));
        }
    }

    #[test]
    fn r_prime_reps() {
        for (a, b) in [(3, 3), (3, 5), (5, 5), (6, 7), (8, 8)] {
            ok(&r_prime_2cbu(a, b).unwrap(), &crate::families::r_prime(a, b));
        }
    }

    #[test]
    fn shift_reps() {
        for m in 2..=7 {
            let r = shift_graph_representation(m).unwrap();
            assert_eq!(r.d(), m - 1);
            ok(&r, &shift_graph(m));
            for (k, (i, j)) in shift_pairs(m).into_iter().enumerate() {
                assert_eq!(r.get(k).lo(0), &q(i as i64));
                assert_eq!(r.get(k).hi(0), &q(j as i64));
            }
        }
    }

    #[test]
    fn lifts() {
        let r = grid_2cbu(3).unwrap();
        let g = grid(3);
        // remove the star at the centre
        let centre = 4;
        let leaves: Vec<usize> = g.neighbors(centre).to_vec();
        let cut: Vec<(usize, usize)> = leaves.iter().map(|&l| (centre, l)).collect();
        ok(&remove_bipartite_edges(&r, &[centre], &leaves).unwrap(), &g.without_edges(&cut));
        assert!(matches!(remove_bipartite_edges(&r, &[0], &[8]), Err(ConstructionError::NotInContact(0, 8))));
        let p = BoxRepresentation::new(1, vec![AxisBox::from_ints(&[(0, 1)]), AxisBox::from_ints(&[(1, 2)])]).unwrap();
        ok(&twin_representation(&p, 0).unwrap(), &add_false_twin(&path(2), 0).unwrap());
    }

    #[test]
    fn pipeline_small() {
        let o = Orientation::from_arcs(2, &[(0, 1)]).unwrap();
        let l = solve_labeling(&o).labeling().unwrap();
        let out = labeling_to_representation(&path(2), &l).unwrap();
        assert!(out.representation.d() <= 3);
        ok(&out.representation, &path(2));

        let c5 = crate::recognition::c5_labeling();
        let out = labeling_to_representation(&cycle(5), &c5).unwrap();
        assert!(out.representation.d() <= 9);
        assert!(out.shift_dimension <= 5);
        ok(&out.representation, &cycle(5));
    }

    #[test]
    fn bprime() {
        let edge = IntersectionRepresentation::from_ints(&[&[(0, 2)], &[(1, 3)]]);
        let g = bprime_graph(&path(2), &[0], &[1]);
        assert!(crate::iso::are_isomorphic(&g, &cycle(5)));
        ok(&bprime_construction(&edge, &[0], &[1]).unwrap(), &g);

        // K_{2,2}: parts {0,1} and {2,3}, crossing strips in the plane
        let k22 = IntersectionRepresentation::from_ints(&[
            &[(0, 1), (0, 3)],
            &[(2, 3), (0, 3)],
            &[(0, 3), (0, 1)],
            &[(0, 3), (2, 3)],
        ]);
        assert_eq!(k22.intersection_graph(), complete_bipartite(2, 2));
        ok(&bprime_construction(&k22, &[0, 1], &[2, 3]).unwrap(), &bprime_graph(&complete_bipartite(2, 2), &[0, 1], &[2, 3]));

        let c6 = tests::c6_rep();
        ok(&bprime_construction(&c6, &[0, 2, 4], &[1, 3, 5]).unwrap(), &bprime_graph(&cycle(6), &[0, 2, 4], &[1, 3, 5]));
    }

    #[test]
    fn non_edge_representation() {
        for g in [cycle(5), complete(4), grid(2), Graph::empty(3)] {
            assert_eq!(IntersectionRepresentation::from_non_edges(&g).intersection_graph(), g);
        }
    }
}
