//! Finite multigraphs with loops, their part sets, and the object rules of
//! the four graph categories.
//!
//! A graph is a finite set of vertices, a finite set of edges, and an
//! incidence map assigning each edge an unordered pair of endpoints (equal
//! endpoints make a loop). Vertices and edges together form the *part set*
//! of the graph, the single carrier that morphisms act on. A vertex is
//! treated as incident to itself, so `incidence_of` is total on parts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Whether a part is a vertex or an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PartKind {
    Vertex,
    Edge,
}

/// A part of a graph: its kind plus an opaque label.
///
/// Labels are unique per kind within a graph, so `(kind, label)` identifies
/// a part. The derived ordering (vertices first, then edges, each by label)
/// is the canonical part order used throughout.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartId {
    pub kind: PartKind,
    pub label: String,
}

impl PartId {
    pub fn vertex(label: impl Into<String>) -> Self {
        PartId {
            kind: PartKind::Vertex,
            label: label.into(),
        }
    }

    pub fn edge(label: impl Into<String>) -> Self {
        PartId {
            kind: PartKind::Edge,
            label: label.into(),
        }
    }

    pub fn is_vertex(&self) -> bool {
        self.kind == PartKind::Vertex
    }

    pub fn is_edge(&self) -> bool {
        self.kind == PartKind::Edge
    }
}

impl fmt::Display for PartId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PartKind::Vertex => write!(f, "v:{}", self.label),
            PartKind::Edge => write!(f, "e:{}", self.label),
        }
    }
}

/// Unordered pair of endpoint vertex labels, stored with the smaller label
/// first so that equality is set equality. Both entries equal means a loop.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Incidence {
    lo: String,
    hi: String,
}

impl Incidence {
    pub fn new(x: impl Into<String>, y: impl Into<String>) -> Self {
        let (x, y) = (x.into(), y.into());
        if x <= y {
            Incidence { lo: x, hi: y }
        } else {
            Incidence { lo: y, hi: x }
        }
    }

    /// The two endpoint labels in stored (sorted) order.
    pub fn ends(&self) -> (&str, &str) {
        (&self.lo, &self.hi)
    }

    pub fn is_loop(&self) -> bool {
        self.lo == self.hi
    }

    pub fn touches(&self, v: &str) -> bool {
        self.lo == v || self.hi == v
    }

    /// Applies a label substitution to both endpoints, re-normalizing.
    pub fn map(&self, mut f: impl FnMut(&str) -> String) -> Incidence {
        Incidence::new(f(&self.lo), f(&self.hi))
    }
}

impl fmt::Display for Incidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge label `{0}`")]
    DuplicateEdge(String),
    #[error("edge `{edge}` references unknown vertex `{vertex}`")]
    UnknownEndpoint { edge: String, vertex: String },
    #[error("unknown part {0}")]
    UnknownPart(PartId),
}

/// A finite multigraph with loops. Immutable once built: constructions
/// always produce fresh graphs, so values can be shared freely across
/// threads.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    vertices: BTreeSet<String>,
    edges: BTreeMap<String, Incidence>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// Builds a graph from vertex labels and `(edge label, endpoint,
    /// endpoint)` triples.
    pub fn build<V, E, S>(vertices: V, edges: E) -> Result<Graph, GraphError>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S, S)>,
        S: Into<String>,
    {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v)?;
        }
        for (l, x, y) in edges {
            g.add_edge(l, x, y)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<(), GraphError> {
        let label = label.into();
        if !self.vertices.insert(label.clone()) {
            return Err(GraphError::DuplicateVertex(label));
        }
        Ok(())
    }

    pub fn add_edge(
        &mut self,
        label: impl Into<String>,
        x: impl Into<String>,
        y: impl Into<String>,
    ) -> Result<(), GraphError> {
        let label = label.into();
        let (x, y) = (x.into(), y.into());
        for end in [&x, &y] {
            if !self.vertices.contains(end) {
                return Err(GraphError::UnknownEndpoint {
                    edge: label,
                    vertex: end.clone(),
                });
            }
        }
        if self.edges.contains_key(&label) {
            return Err(GraphError::DuplicateEdge(label));
        }
        self.edges.insert(label, Incidence::new(x, y));
        Ok(())
    }

    pub fn vertex_labels(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(|s| s.as_str())
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = &str> {
        self.edges.keys().map(|s| s.as_str())
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &Incidence)> {
        self.edges.iter().map(|(l, i)| (l.as_str(), i))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn part_count(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty()
    }

    pub fn has_vertex(&self, label: &str) -> bool {
        self.vertices.contains(label)
    }

    pub fn has_edge(&self, label: &str) -> bool {
        self.edges.contains_key(label)
    }

    pub fn has_part(&self, p: &PartId) -> bool {
        match p.kind {
            PartKind::Vertex => self.has_vertex(&p.label),
            PartKind::Edge => self.has_edge(&p.label),
        }
    }

    /// The part set: all vertices, then all edges, each sorted by label.
    pub fn part_set(&self) -> Vec<PartId> {
        self.vertices
            .iter()
            .map(PartId::vertex)
            .chain(self.edges.keys().map(PartId::edge))
            .collect()
    }

    /// Incidence of any part. Edges report their stored endpoints; a vertex
    /// is incident to itself, which is what lets morphisms send edges to
    /// vertices while still preserving incidence.
    pub fn incidence_of(&self, p: &PartId) -> Result<Incidence, GraphError> {
        match p.kind {
            PartKind::Vertex => {
                if self.vertices.contains(&p.label) {
                    Ok(Incidence::new(p.label.clone(), p.label.clone()))
                } else {
                    Err(GraphError::UnknownPart(p.clone()))
                }
            }
            PartKind::Edge => self
                .edges
                .get(&p.label)
                .cloned()
                .ok_or_else(|| GraphError::UnknownPart(p.clone())),
        }
    }

    /// Degree of a vertex, loops counted twice.
    pub fn degree(&self, v: &str) -> usize {
        self.edges
            .values()
            .map(|inc| {
                let (x, y) = inc.ends();
                (x == v) as usize + (y == v) as usize
            })
            .sum()
    }

    pub fn loop_count(&self, v: &str) -> usize {
        self.edges
            .values()
            .filter(|inc| inc.is_loop() && inc.touches(v))
            .count()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.values().any(|inc| inc.is_loop())
    }

    /// Edge labels grouped by incidence; groups of size > 1 are parallel
    /// classes (two loops on one vertex are parallel too).
    pub fn parallel_classes(&self) -> BTreeMap<Incidence, Vec<String>> {
        let mut classes: BTreeMap<Incidence, Vec<String>> = BTreeMap::new();
        for (l, inc) in &self.edges {
            classes.entry(inc.clone()).or_default().push(l.clone());
        }
        classes
    }

    pub fn has_parallel_edges(&self) -> bool {
        self.parallel_classes().values().any(|c| c.len() > 1)
    }

    /// True iff the graph satisfies `cat`'s object rules.
    pub fn validate_in(&self, cat: Category) -> bool {
        match cat {
            Category::Grphs | Category::StGrphs => true,
            Category::SiGrphs => !self.has_loops() && !self.has_parallel_edges(),
            // At most one loop per vertex is subsumed by "no parallel
            // edges": two loops on one vertex share their incidence.
            Category::SLStGrphs => !self.has_parallel_edges(),
        }
    }

    /// The subgraph on exactly the given parts. Errors if an edge is
    /// requested without both endpoints.
    pub fn subgraph_on(&self, parts: &BTreeSet<PartId>) -> Result<Graph, GraphError> {
        let mut g = Graph::new();
        for p in parts {
            if !self.has_part(p) {
                return Err(GraphError::UnknownPart(p.clone()));
            }
            if p.is_vertex() {
                g.add_vertex(p.label.clone())?;
            }
        }
        for p in parts {
            if p.is_edge() {
                let inc = self.incidence_of(p)?;
                let (x, y) = inc.ends();
                g.add_edge(p.label.clone(), x, y)?;
            }
        }
        Ok(g)
    }

    /// The graph minus one vertex and every edge incident to it.
    pub fn delete_vertex(&self, v: &str) -> Result<Graph, GraphError> {
        if !self.vertices.contains(v) {
            return Err(GraphError::UnknownPart(PartId::vertex(v)));
        }
        let mut g = Graph::new();
        for w in &self.vertices {
            if w != v {
                g.add_vertex(w.clone())?;
            }
        }
        for (l, inc) in &self.edges {
            if !inc.touches(v) {
                let (x, y) = inc.ends();
                g.add_edge(l.clone(), x, y)?;
            }
        }
        Ok(g)
    }

    /// The graph minus one edge; vertices are untouched.
    pub fn delete_edge(&self, e: &str) -> Result<Graph, GraphError> {
        if !self.edges.contains_key(e) {
            return Err(GraphError::UnknownPart(PartId::edge(e)));
        }
        let mut g = self.clone();
        g.edges.remove(e);
        Ok(g)
    }

    /// Display form of a part used when composing labels of constructed
    /// graphs. Plain label unless this graph uses the same label for both a
    /// vertex and an edge, in which case the kind prefix disambiguates.
    pub fn component_tag(&self, p: &PartId) -> String {
        if self.vertices.contains(&p.label) && self.edges.contains_key(&p.label) {
            p.to_string()
        } else {
            p.label.clone()
        }
    }
}

/// The four categories of graphs this crate works in. The tag fixes which
/// graphs are objects, which morphisms are admitted (strict categories
/// require edges to map to edges), how epi/mono are characterized, and the
/// post-processing applied by coequalizers and products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    /// All multigraphs with loops; all incidence-preserving part maps.
    Grphs,
    /// All multigraphs with loops; edges must map to edges.
    StGrphs,
    /// Simple graphs (no loops, no parallel edges); all part maps.
    SiGrphs,
    /// Simple graphs with at most one loop per vertex; strict maps.
    SLStGrphs,
}

impl Category {
    pub const ALL: [Category; 4] = [
        Category::Grphs,
        Category::StGrphs,
        Category::SiGrphs,
        Category::SLStGrphs,
    ];

    /// Strict categories require edges to map to edges.
    pub fn strict(self) -> bool {
        matches!(self, Category::StGrphs | Category::SLStGrphs)
    }

    /// Categories whose epi/mono predicates look only at vertex sets, and
    /// whose coequalizers collapse parallel edges (and loops, for simple
    /// graphs) to keep objects legal.
    pub fn restricted_objects(self) -> bool {
        matches!(self, Category::SiGrphs | Category::SLStGrphs)
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Category::Grphs => "grphs",
            Category::StGrphs => "stgrphs",
            Category::SiGrphs => "sigrphs",
            Category::SLStGrphs => "slstgrphs",
        };
        f.write_str(s)
    }
}

impl FromStr for Category {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "grphs" => Ok(Category::Grphs),
            "stgrphs" => Ok(Category::StGrphs),
            "sigrphs" => Ok(Category::SiGrphs),
            "slstgrphs" => Ok(Category::SLStGrphs),
            other => Err(format!(
                "unknown category `{other}` (expected grphs|stgrphs|sigrphs|slstgrphs)"
            )),
        }
    }
}

/// Free-function form of [`Graph::validate_in`].
pub fn validate_in_category(g: &Graph, cat: Category) -> bool {
    g.validate_in(cat)
}
