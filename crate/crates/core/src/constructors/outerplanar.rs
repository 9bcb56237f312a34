//! 2-dimensional representations of triangle-free outerplanar graphs.
//!
//! The graph is peeled down to one vertex per component by removing
//! pendant vertices, ears (a path of degree-2 vertices whose ends are
//! adjacent) and cycles hanging from a single vertex. Boxes are then placed
//! in reverse order. Throughout, looking from `x = +inf`, the visible right
//! sides listed bottom to top follow the outer facial walk, and every new box
//! goes into the free region right of that envelope.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::geometry::{AxisBox, BoxRepresentation};
use crate::graph::Graph;
use crate::rational::{q, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OuterplanarError {
    #[error("triangle {0}-{1}-{2}")]
    Triangle(usize, usize, usize),
    #[error("graph is not outerplanar")]
    NotOuterplanar,
}

#[derive(Debug, Clone)]
pub struct OuterplanarRepresentation {
    pub representation: BoxRepresentation,
    /// Per component, the visible boxes from bottom to top: a closed walk
    /// around the outer face.
    pub walks: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
enum Step {
    Pendant { leaf: usize, at: usize },
    Ear { from: usize, inner: Vec<usize>, to: usize },
    Hanging { at: usize, inner: Vec<usize> },
}

/// Peels one connected component; returns the surviving root and the steps
/// in peeling order.
fn peel(g: &Graph, comp: &[usize]) -> Result<(usize, Vec<Step>), OuterplanarError> {
    let mut adj: BTreeMap<usize, BTreeSet<usize>> =
        comp.iter().map(|&v| (v, g.neighbors(v).iter().copied().collect())).collect();
    let mut steps = Vec::new();
    let remove = |adj: &mut BTreeMap<usize, BTreeSet<usize>>, v: usize| {
        for w in adj.remove(&v).unwrap() {
            adj.get_mut(&w).unwrap().remove(&v);
        }
    };
    // walks from `x` through `first` along degree-2 vertices
    let chain = |adj: &BTreeMap<usize, BTreeSet<usize>>, x: usize, first: usize| {
        let (mut prev, mut cur) = (x, first);
        let mut inner = Vec::new();
        while cur != x && adj[&cur].len() == 2 {
            inner.push(cur);
            let next = *adj[&cur].iter().find(|&&w| w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        (inner, cur)
    };
    while adj.len() > 1 {
        if let Some((&leaf, nb)) = adj.iter().find(|(_, nb)| nb.len() == 1) {
            let at = *nb.iter().next().unwrap();
            steps.push(Step::Pendant { leaf, at });
            remove(&mut adj, leaf);
            continue;
        }
        let mut found = None;
        'outer: for (&x, nb) in adj.iter().filter(|(_, nb)| nb.len() >= 3) {
            for &w in nb {
                let (inner, end) = chain(&adj, x, w);
                if inner.is_empty() {
                    continue;
                }
                if end == x {
                    found = Some(Step::Hanging { at: x, inner });
                    break 'outer;
                }
                if adj[&x].contains(&end) {
                    found = Some(Step::Ear { from: x, inner, to: end });
                    break 'outer;
                }
            }
        }
        if found.is_none() && adj.values().all(|nb| nb.len() == 2) {
            let (&x, nb) = adj.iter().next().unwrap();
            let (inner, _) = chain(&adj, x, *nb.iter().next().unwrap());
            found = Some(Step::Hanging { at: x, inner });
        }
        let step = found.ok_or(OuterplanarError::NotOuterplanar)?;
        let inner = match &step {
            Step::Ear { inner, .. } | Step::Hanging { inner, .. } => inner.clone(),
            Step::Pendant { .. } => unreachable!(),
        };
        for v in inner {
            remove(&mut adj, v);
        }
        steps.push(step);
    }
    Ok((*adj.keys().next().unwrap(), steps))
}

/// `[x0, x1, y0, y1]`
type Rect = [Q; 4];

#[derive(Debug, Clone)]
struct Segment {
    v: usize,
    lo: Q,
    hi: Q,
    x: Q,
}

#[derive(Default)]
struct Envelope {
    boxes: BTreeMap<usize, Rect>,
    segs: Vec<Segment>,
}

impl Envelope {
    fn mirror(&mut self) {
        for r in self.boxes.values_mut() {
            let (y0, y1) = (-r[3].clone(), -r[2].clone());
            r[2] = y0;
            r[3] = y1;
        }
        self.segs.reverse();
        for s in &mut self.segs {
            let (lo, hi) = (-s.hi.clone(), -s.lo.clone());
            s.lo = lo;
            s.hi = hi;
        }
    }

    fn pendant(&mut self, i: usize, leaf: usize) {
        let s = self.segs[i].clone();
        let h = (&s.hi - &s.lo) / q(3);
        let a = &s.lo + &h;
        let b = &a + &h;
        let x1 = &s.x + q(1);
        self.boxes.insert(leaf, [s.x.clone(), x1.clone(), a.clone(), b.clone()]);
        let parts = [
            Segment { v: s.v, lo: s.lo.clone(), hi: a.clone(), x: s.x.clone() },
            Segment { v: leaf, lo: a, hi: b.clone(), x: x1 },
            Segment { v: s.v, lo: b, hi: s.hi.clone(), x: s.x.clone() },
        ];
        self.segs.splice(i..=i, parts);
    }

    /// Path `inner` from the owner of segment `i` to that of `i + 1`.
    fn ear(&mut self, i: usize, inner: &[usize]) {
        use std::cmp::Ordering;
        match self.segs[i].x.cmp(&self.segs[i + 1].x) {
            Ordering::Less => self.rising_ear(i, inner),
            Ordering::Greater => {
                self.mirror();
                let j = self.segs.len() - 2 - i;
                let rev: Vec<usize> = inner.iter().rev().copied().collect();
                self.rising_ear(j, &rev);
                self.mirror();
            }
            Ordering::Equal => unreachable!("neighbouring segments never share an x"),
        }
    }

    /// Ear when the upper segment lies further right: a staircase inside the
    /// lower segment's strip, then one box right of the upper segment
    /// reaching down to the staircase.
    fn rising_ear(&mut self, i: usize, inner: &[usize]) {
        let s = inner.len();
        assert!(s >= 2, "ears have at least two inner vertices");
        let (low, up) = (self.segs[i].clone(), self.segs[i + 1].clone());
        let h = &low.hi - &low.lo;
        let y = |k: usize| &low.lo + &h * Q::new((k as i64).into(), ((s + 2) as i64).into());
        let dx = &up.x - &low.x;
        let x = |k: usize| &low.x + &dx * Q::new(((k - 1) as i64).into(), ((s - 1) as i64).into());
        let mid = (&up.lo + &up.hi) / q(2);
        let mut parts = vec![Segment { v: low.v, lo: low.lo.clone(), hi: y(1), x: low.x.clone() }];
        for k in 1..s {
            self.boxes.insert(inner[k - 1], [x(k), x(k + 1), y(k), y(k + 2)]);
            parts.push(Segment { v: inner[k - 1], lo: y(k), hi: y(k + 1), x: x(k + 1) });
        }
        let last_x = &up.x + q(1);
        self.boxes.insert(inner[s - 1], [up.x.clone(), last_x.clone(), y(s), mid.clone()]);
        parts.push(Segment { v: inner[s - 1], lo: y(s), hi: mid.clone(), x: last_x });
        parts.push(Segment { v: up.v, lo: mid, hi: up.hi.clone(), x: up.x.clone() });
        self.segs.splice(i..=i + 1, parts);
    }

    fn position(&self, v: usize) -> usize {
        self.segs.iter().position(|s| s.v == v).expect("placed vertices stay visible")
    }
}

/// Representation in the plane of a triangle-free outerplanar graph, contact
/// axis first. Components are stacked along the second axis.
pub fn outerplanar_2cbu(g: &Graph) -> Result<OuterplanarRepresentation, OuterplanarError> {
    if let Some((a, b, c)) = g.find_triangle() {
        return Err(OuterplanarError::Triangle(a, b, c));
    }
    let mut rects: Vec<Option<Rect>> = vec![None; g.n()];
    let mut walks = Vec::new();
    for (ci, comp) in g.components().iter().enumerate() {
        let (root, steps) = peel(g, comp)?;
        let mut env = Envelope::default();
        env.boxes.insert(root, [q(0), q(1), q(0), q(1)]);
        env.segs.push(Segment { v: root, lo: q(0), hi: q(1), x: q(1) });
        for step in steps.iter().rev() {
            match step {
                Step::Pendant { leaf, at } => {
                    let i = env.position(*at);
                    env.pendant(i, *leaf);
                }
                Step::Hanging { at, inner } => {
                    let i = env.position(*at);
                    env.pendant(i, inner[0]);
                    env.ear(i + 1, &inner[1..]);
                }
                Step::Ear { from, inner, to } => {
                    let hit = env.segs.windows(2).enumerate().find_map(|(i, w)| {
                        if (w[0].v, w[1].v) == (*from, *to) {
                            Some((i, false))
                        } else if (w[0].v, w[1].v) == (*to, *from) {
                            Some((i, true))
                        } else {
                            None
                        }
                    });
                    let (i, rev) = hit.ok_or(OuterplanarError::NotOuterplanar)?;
                    let path: Vec<usize> =
                        if rev { inner.iter().rev().copied().collect() } else { inner.clone() };
                    env.ear(i, &path);
                }
            }
        }
        let shift = q(2 * ci as i64);
        for (v, r) in env.boxes {
            let [x0, x1, y0, y1] = r;
            rects[v] = Some([x0, x1, y0 + &shift, y1 + &shift]);
        }
        walks.push(env.segs.iter().map(|s| s.v).collect());
    }
    let boxes = rects
        .into_iter()
        .map(|r| {
            let [x0, x1, y0, y1] = r.expect("every vertex is placed");
            AxisBox::new(vec![(x0, x1), (y0, y1)]).expect("positive extents")
        })
        .collect();
    let representation = BoxRepresentation::new(2, boxes).expect("all boxes are planar");
    Ok(OuterplanarRepresentation { representation, walks })
}
