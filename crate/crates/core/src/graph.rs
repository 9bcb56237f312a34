//! Undirected simple graphs, orientations and the elementary transformations
//! (subdivision, false twins) used by every other module.
//!
//! Vertices are dense indices `0..n`. Edges are stored as `(u, v)` with
//! `u < v`, sorted lexicographically, so an edge index is stable for a given
//! graph and can be used to address per-edge data (orientations, labels).

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("edge endpoint {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(String),
    #[error("arc list does not cover every edge exactly once: {0}")]
    BadArcs(String),
    #[error("invalid size: {0}")]
    InvalidSize(String),
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges and out-of-range
    /// endpoints. Edge direction in the input is irrelevant.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(GraphError::ParallelEdge(e.0, e.1));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    /// Like [`Graph::new`] but silently merges repeated edges.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let set: BTreeSet<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        Self::new(n, set)
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Adjacency as bitmasks; only valid for `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency needs n <= 64");
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, &w| acc | (1 << w)))
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Some triangle `(a, b, c)` with `a < b < c`, if one exists.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for &(u, v) in &self.edges {
            for &w in &self.adj[v] {
                if w > v && self.has_edge(u, w) {
                    return Some((u, v, w));
                }
            }
        }
        None
    }

    /// A proper 2-colouring (`false`/`true` per vertex), or `None` when the
    /// graph has an odd cycle. Each component's smallest vertex gets `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]));
        Graph::new(vertices.len(), edges).expect("induced subgraph of a valid graph")
    }

    /// Same vertex set, with the given edges removed.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Graph {
        let removed: BTreeSet<_> = removed.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let edges = self.edges.iter().copied().filter(|e| !removed.contains(e)).collect();
        Self::from_sorted(self.n, edges)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("permutation of a valid graph")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let k = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + k, v + k)));
        Graph::new(self.n + other.n, edges).expect("disjoint union of valid graphs")
    }
}

/// Where a vertex of a subdivided graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Original(usize),
    /// `position` counts from 1 starting at the smaller endpoint of the edge.
    Subdivision { edge: usize, position: usize },
}

#[derive(Debug, Clone)]
pub struct Subdivision {
    pub graph: Graph,
    pub provenance: Vec<Provenance>,
    /// For every original edge, the full replacement path (endpoints included),
    /// starting at the smaller endpoint.
    pub paths: Vec<Vec<usize>>,
}

/// Replaces edge `e = {u, v}` (u < v) by a path `u, s_1, .., s_r, v` where `r =
/// counts[e]`. Original vertices keep their indices; fresh vertices are
/// numbered from `n` in edge order, then along each path.
pub fn subdivide(g: &Graph, counts: &[usize]) -> Subdivision {
    assert_eq!(counts.len(), g.m(), "one subdivision count per edge");
    let mut provenance: Vec<Provenance> = (0..g.n()).map(Provenance::Original).collect();
    let mut edges = Vec::new();
    let mut paths = Vec::with_capacity(g.m());
    let mut next = g.n();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let mut path = vec![u];
        for position in 1..=counts[e] {
            provenance.push(Provenance::Subdivision { edge: e, position });
            path.push(next);
            next += 1;
        }
        path.push(v);
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
        paths.push(path);
    }
    let graph = Graph::new(next, edges).expect("subdivision of a valid graph");
    Subdivision { graph, provenance, paths }
}

/// Subdivides every edge `times` times.
pub fn subdivide_uniform(g: &Graph, times: usize) -> Subdivision {
    subdivide(g, &vec![times; g.m()])
}

/// Adds vertex `g.n()` with the same neighbourhood as `v`.
pub fn add_false_twin(g: &Graph, v: usize) -> Result<Graph, GraphError> {
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let twin = g.n();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(g.neighbors(v).iter().map(|&w| (w, twin)));
    Graph::new(g.n() + 1, edges)
}

/// A cycle given by its cyclic vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WalkCycle {
    vertices: Vec<usize>,
}

impl WalkCycle {
    /// Checks length >= 3, distinct vertices and that all cyclically
    /// consecutive pairs are edges of `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<WalkCycle, GraphError> {
        if vertices.len() < 3 {
            return Err(GraphError::InvalidSize(format!(
                "cycle of length {} (need >= 3)",
                vertices.len()
            )));
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(GraphError::InvalidSize("cycle repeats a vertex".into()));
        }
        let k = vertices.len();
        for i in 0..k {
            let (a, b) = (vertices[i], vertices[(i + 1) % k]);
            if !g.has_edge(a, b) {
                return Err(GraphError::NotAnEdge(format!("{a}-{b}")));
            }
        }
        Ok(WalkCycle { vertices })
    }

    pub(crate) fn new_unchecked(vertices: Vec<usize>) -> WalkCycle {
        WalkCycle { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The same cycle traversed in the opposite direction, starting at the
    /// same vertex.
    pub fn reversed(&self) -> WalkCycle {
        let mut vs = self.vertices.clone();
        vs[1..].reverse();
        WalkCycle { vertices: vs }
    }

    /// Canonical rotation/reflection: smallest vertex first, then the smaller
    /// of its two cycle neighbours.
    pub fn canonical(&self) -> WalkCycle {
        let k = self.vertices.len();
        let start = (0..k).min_by_key(|&i| self.vertices[i]).unwrap();
        let mut fwd: Vec<usize> = (0..k).map(|i| self.vertices[(start + i) % k]).collect();
        if fwd[1] > fwd[k - 1] {
            fwd[1..].reverse();
        }
        WalkCycle { vertices: fwd }
    }
}

/// An orientation of every edge of a graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    graph: Graph,
    /// `forward[e]` means edge `(u, v)` (u < v) is oriented `u -> v`.
    forward: Vec<bool>,
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<_> = self.arcs().collect();
        write!(f, "Orientation(n={}, arcs={:?})", self.graph.n(), arcs)
    }
}

impl Orientation {
    pub fn new(graph: Graph, forward: Vec<bool>) -> Orientation {
        assert_eq!(graph.m(), forward.len(), "one direction per edge");
        Orientation { graph, forward }
    }

    /// Every edge oriented from its smaller to its larger endpoint.
    pub fn ascending(graph: Graph) -> Orientation {
        let m = graph.m();
        Orientation::new(graph, vec![true; m])
    }

    /// Builds both the graph and its orientation from a list of arcs.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Orientation, GraphError> {
        let graph = Graph::new(n, arcs.iter().copied())?;
        Self::from_graph_arcs(graph, arcs)
    }

    /// Orients `graph` according to `arcs`, which must contain every edge
    /// exactly once.
    pub fn from_graph_arcs(graph: Graph, arcs: &[(usize, usize)]) -> Result<Orientation, GraphError> {
        let mut forward: Vec<Option<bool>> = vec![None; graph.m()];
        for &(t, h) in arcs {
            let e = graph
                .edge_index(t, h)
                .ok_or_else(|| GraphError::NotAnEdge(format!("{t}-{h}")))?;
            if forward[e].is_some() {
                return Err(GraphError::BadArcs(format!("edge {t}-{h} oriented twice")));
            }
            forward[e] = Some(t < h);
        }
        let forward = forward
            .into_iter()
            .enumerate()
            .map(|(e, f)| {
                f.ok_or_else(|| {
                    let (u, v) = graph.edges()[e];
                    GraphError::BadArcs(format!("edge {u}-{v} has no direction"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Orientation { graph, forward })
    }

    /// Orientation number `bits` of `graph`: bit `e` set means edge `e` is
    /// oriented from larger to smaller endpoint. Requires `m <= 64`.
    pub fn from_bits(graph: Graph, bits: u64) -> Orientation {
        let forward = (0..graph.m()).map(|e| bits >> e & 1 == 0).collect();
        Orientation { graph, forward }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn forward(&self) -> &[bool] {
        &self.forward
    }

    /// `(tail, head)` of edge `e`.
    pub fn arc(&self, e: usize) -> (usize, usize) {
        let (u, v) = self.graph.edges()[e];
        if self.forward[e] {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.graph.m()).map(move |e| self.arc(e))
    }

    /// Whether the orientation contains the arc `tail -> head`.
    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.graph
            .edge_index(tail, head)
            .is_some_and(|e| self.arc(e) == (tail, head))
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.graph.neighbors(v).iter().copied().filter(move |&w| self.has_arc(v, w))
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.graph.neighbors(v).iter().copied().filter(move |&w| self.has_arc(w, v))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_neighbors(v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_neighbors(v).count()
    }

    pub fn reversed(&self) -> Orientation {
        Orientation {
            graph: self.graph.clone(),
            forward: self.forward.iter().map(|f| !f).collect(),
        }
    }

    /// A topological order, or `None` if the orientation has a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.graph.n();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.in_degree(v)).collect();
        let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for w in self.out_neighbors(v).collect::<Vec<_>>() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Restriction to the subgraph induced by `vertices` (renumbered in order).
    pub fn induced(&self, vertices: &[usize]) -> Orientation {
        let sub = self.graph.induced(vertices);
        let arcs: Vec<_> = self
            .arcs()
            .filter_map(|(t, h)| {
                let pt = vertices.iter().position(|&x| x == t)?;
                let ph = vertices.iter().position(|&x| x == h)?;
                Some((pt, ph))
            })
            .collect();
        Orientation::from_graph_arcs(sub, &arcs).expect("restriction of a valid orientation")
    }

    /// The cycle `c` as a standalone oriented cycle graph on `0..k`, vertex
    /// `i` standing for `c[i]`.
    pub fn restrict_to_cycle(&self, c: &WalkCycle) -> Orientation {
        let vs = c.vertices();
        let k = vs.len();
        let arcs: Vec<_> = (0..k)
            .map(|i| {
                let j = (i + 1) % k;
                if self.has_arc(vs[i], vs[j]) {
                    (i, j)
                } else {
                    (j, i)
                }
            })
            .collect();
        Orientation::from_arcs(k, &arcs).expect("cycle restriction")
    }
}
