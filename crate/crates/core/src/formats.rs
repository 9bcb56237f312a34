//! Text formats: JSON for graphs, orientations, labelings and membership
//! certificates; DOT and edge lists for graphs and orientations.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, Orientation};
use crate::labeling::ArcLabeling;
use crate::recognition::{CbuCertificate, NonMemberReason, SearchStats, Verdict};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Graph(#[from] crate::graph::GraphError),
    #[error("expected {expected}, found {found}")]
    WrongKind { expected: &'static str, found: &'static str },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphJson { n: self.n(), edges: self.edges().iter().map(|&(u, v)| [u, v]).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        Graph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v))).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OrientationJson {
    n: usize,
    arcs: Vec<[usize; 2]>,
}

impl Serialize for Orientation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        OrientationJson { n: self.graph().n(), arcs: self.arcs().map(|(t, h)| [t, h]).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Orientation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = OrientationJson::deserialize(d)?;
        let arcs: Vec<(usize, usize)> = raw.arcs.into_iter().map(|[t, h]| (t, h)).collect();
        Orientation::from_arcs(raw.n, &arcs).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LabelingJson {
    n: usize,
    arcs: Vec<(usize, usize, i64)>,
}

impl LabelingJson {
    fn build(self) -> Result<ArcLabeling, String> {
        let g = Graph::new(self.n, self.arcs.iter().map(|&(t, h, _)| (t, h))).map_err(|e| e.to_string())?;
        ArcLabeling::from_triples(g, &self.arcs).map_err(|e| e.to_string())
    }
}

/// `{"n": .., "arcs": [[tail, head, label], ..]}`; labels need not be
/// homogeneous to parse, call [`ArcLabeling::check`] for that.
impl Serialize for ArcLabeling {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LabelingJson { n: self.orientation().graph().n(), arcs: self.triples() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ArcLabeling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        LabelingJson::deserialize(d)?.build().map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
enum ReasonJson {
    Triangle { vertices: [usize; 3] },
    Exhausted { component: Vec<usize> },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateJson {
    verdict: Verdict,
    witness: Option<ArcLabeling>,
    reason: Option<ReasonJson>,
    stats: SearchStats,
}

impl Serialize for CbuCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CertificateJson {
            verdict: self.verdict,
            witness: self.witness.clone(),
            reason: self.reason.as_ref().map(|r| match r {
                NonMemberReason::Triangle(a, b, c) => ReasonJson::Triangle { vertices: [*a, *b, *c] },
                NonMemberReason::Exhausted { component } => ReasonJson::Exhausted { component: component.clone() },
            }),
            stats: self.stats.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CbuCertificate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CertificateJson::deserialize(d)?;
        Ok(CbuCertificate {
            verdict: raw.verdict,
            witness: raw.witness,
            reason: raw.reason.map(|r| match r {
                ReasonJson::Triangle { vertices: [a, b, c] } => NonMemberReason::Triangle(a, b, c),
                ReasonJson::Exhausted { component } => NonMemberReason::Exhausted { component },
            }),
            stats: raw.stats,
        })
    }
}

/// A graph or orientation read from any supported format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Graph(Graph),
    Orientation(Orientation),
}

impl Parsed {
    fn kind(&self) -> &'static str {
        match self {
            Parsed::Graph(_) => "an undirected graph",
            Parsed::Orientation(_) => "an orientation",
        }
    }

    /// Underlying graph; orientations forget their directions.
    pub fn into_graph(self) -> Graph {
        match self {
            Parsed::Graph(g) => g,
            Parsed::Orientation(o) => o.graph().clone(),
        }
    }

    pub fn into_orientation(self) -> Result<Orientation, FormatError> {
        match self {
            Parsed::Orientation(o) => Ok(o),
            other => Err(FormatError::WrongKind { expected: "an orientation", found: other.kind() }),
        }
    }
}

/// Detects the format: JSON if the text starts with `{`, DOT if it starts
/// with `graph`, `digraph` or `strict`, otherwise an edge list.
pub fn parse_any(text: &str) -> Result<Parsed, FormatError> {
    let t = text.trim_start();
    if t.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(t)?;
        if v.get("edges").is_some() {
            Ok(Parsed::Graph(serde_json::from_value(v)?))
        } else {
            Ok(Parsed::Orientation(serde_json::from_value(v)?))
        }
    } else if ["graph", "digraph", "strict"].iter().any(|k| t.starts_with(k)) {
        parse_dot(text)
    } else {
        Ok(Parsed::Graph(parse_edge_list(text)?))
    }
}

/// One `u v` pair per line; blank lines and `#` comments are skipped. A line
/// `n N` sets the vertex count, otherwise it is one more than the largest
/// vertex.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |msg: &str| FormatError::Syntax { line: i + 1, msg: msg.to_string() };
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts.as_slice() {
            ["n", k] => n = Some(k.parse().map_err(|_| syntax("bad vertex count"))?),
            [u, v] => edges.push((
                u.parse::<usize>().map_err(|_| syntax("vertex is not an index"))?,
                v.parse::<usize>().map_err(|_| syntax("vertex is not an index"))?,
            )),
            _ => return Err(syntax("expected `u v`")),
        }
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Ok(Graph::new(n, edges)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(s, "  {v};");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

pub fn orientation_to_dot(o: &Orientation) -> String {
    let mut s = String::from("digraph G {\n");
    for v in 0..o.graph().n() {
        let _ = writeln!(s, "  {v};");
    }
    for (t, h) in o.arcs() {
        let _ = writeln!(s, "  {t} -> {h};");
    }
    s.push_str("}\n");
    s
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Id(String),
    Edge,
    Arrow,
    Open,
    Close,
    Semi,
    Attrs,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, FormatError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let mut line = 1;
    while let Some(c) = chars.next() {
        match c {
            '\n' => line += 1,
            c if c.is_whitespace() || c == ',' => {}
            '{' => out.push((Tok::Open, line)),
            '}' => out.push((Tok::Close, line)),
            ';' => out.push((Tok::Semi, line)),
            '[' => {
                for c in chars.by_ref() {
                    if c == '\n' {
                        line += 1;
                    }
                    if c == ']' {
                        break;
                    }
                }
                out.push((Tok::Attrs, line));
            }
            '#' => {
                for c in chars.by_ref() {
                    if c == '\n' {
                        line += 1;
                        break;
                    }
                }
            }
            '/' if chars.peek() == Some(&'/') => {
                for c in chars.by_ref() {
                    if c == '\n' {
                        line += 1;
                        break;
                    }
                }
            }
            '-' if chars.peek() == Some(&'-') => {
                chars.next();
                out.push((Tok::Edge, line));
            }
            '-' if chars.peek() == Some(&'>') => {
                chars.next();
                out.push((Tok::Arrow, line));
            }
            '"' => {
                let mut id = String::new();
                for c in chars.by_ref() {
                    if c == '"' {
                        break;
                    }
                    id.push(c);
                }
                out.push((Tok::Id(id), line));
            }
            c if c.is_alphanumeric() || c == '_' || c == '.' => {
                let mut id = c.to_string();
                while let Some(&d) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' || d == '.' {
                        id.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((Tok::Id(id), line));
            }
            other => return Err(FormatError::Syntax { line, msg: format!("unexpected {other:?}") }),
        }
    }
    Ok(out)
}

/// Reads the subset of DOT used by [`graph_to_dot`] and
/// [`orientation_to_dot`]: node statements and edge chains, attributes
/// ignored. Numeric node names are used as indices; otherwise nodes are
/// numbered in order of first appearance.
pub fn parse_dot(text: &str) -> Result<Parsed, FormatError> {
    let toks = tokenize(text)?;
    let mut pos = 0;
    let mut directed = None;
    while let Some((t, line)) = toks.get(pos) {
        pos += 1;
        match t {
            Tok::Id(k) if k == "strict" => {}
            Tok::Id(k) if k == "graph" => directed = Some(false),
            Tok::Id(k) if k == "digraph" => directed = Some(true),
            Tok::Id(_) if directed.is_some() => {}
            Tok::Open if directed.is_some() => break,
            _ => return Err(FormatError::Syntax { line: *line, msg: "expected a graph header".into() }),
        }
    }
    let directed = directed.ok_or(FormatError::Syntax { line: 1, msg: "empty input".into() })?;
    let mut names: Vec<String> = Vec::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut index = BTreeMap::new();
    let mut statement: Vec<String> = Vec::new();
    let mut closed = false;
    let mut flush = |statement: &mut Vec<String>, names: &mut Vec<String>, arcs: &mut Vec<(usize, usize)>| {
        let ids: Vec<usize> = statement
            .drain(..)
            .map(|s| {
                *index.entry(s.clone()).or_insert_with(|| {
                    names.push(s);
                    names.len() - 1
                })
            })
            .collect();
        arcs.extend(ids.windows(2).map(|w| (w[0], w[1])));
    };
    let mut expect_id = true;
    for (t, line) in &toks[pos..] {
        let syntax = |msg: &str| FormatError::Syntax { line: *line, msg: msg.to_string() };
        match t {
            Tok::Id(s) => {
                if !expect_id {
                    flush(&mut statement, &mut names, &mut arcs);
                }
                statement.push(s.clone());
                expect_id = false;
            }
            Tok::Edge | Tok::Arrow => {
                if (*t == Tok::Arrow) != directed {
                    return Err(syntax("edge operator does not match the graph type"));
                }
                if expect_id {
                    return Err(syntax("edge operator without a tail"));
                }
                expect_id = true;
            }
            Tok::Attrs => {}
            Tok::Semi => {
                if expect_id && !statement.is_empty() {
                    return Err(syntax("edge operator without a head"));
                }
                flush(&mut statement, &mut names, &mut arcs);
                expect_id = true;
            }
            Tok::Close => {
                flush(&mut statement, &mut names, &mut arcs);
                closed = true;
                break;
            }
            Tok::Open => return Err(syntax("subgraphs are not supported")),
        }
    }
    if !closed {
        return Err(FormatError::Syntax { line: toks.last().map_or(1, |t| t.1), msg: "missing `}`".into() });
    }
    let numeric: Option<Vec<usize>> = names.iter().map(|s| s.parse().ok()).collect();
    let (n, map): (usize, Vec<usize>) = match numeric {
        Some(ix) => (ix.iter().map(|&i| i + 1).max().unwrap_or(0), ix),
        None => (names.len(), (0..names.len()).collect()),
    };
    let arcs: Vec<(usize, usize)> = arcs.into_iter().map(|(a, b)| (map[a], map[b])).collect();
    if directed {
        Ok(Parsed::Orientation(Orientation::from_arcs(n, &arcs)?))
    } else {
        Ok(Parsed::Graph(Graph::new(n, arcs)?))
    }
}
