//! Products, coproducts, equalizers, and coequalizers in the four graph
//! categories, with canonical labels so repeated runs are bit-identical.
//!
//! The product generalizes the strong product: every ordered pair of parts
//! `(e, f)` yields a part whose endpoints pair up first-with-first, plus a
//! crossed twin `bar(e,f)` when both incidences are non-degenerate. Strict
//! categories drop the mixed vertex/edge pairs (tensor product); the
//! simple-graph categories post-collapse the result by their object rules.
//!
//! The coequalizer quotients the codomain by the equivalence closure of
//! `f(a) ~ g(a)`. A class containing a vertex is a vertex; an edge whose
//! class turns vertex absorbs its endpoints' classes (repeated to a
//! fixpoint); surviving edge classes inherit the endpoint classes of any
//! representative, which is checked to be well defined.

use thiserror::Error;

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{Category, Graph, GraphError, Incidence, PartId, PartKind};
use crate::morphism::{Morphism, MorphismError};

#[derive(Debug, Error)]
pub enum LimitsError {
    #[error("input graph is not an object of {0}: {1:?}")]
    InvalidObject(Category, Box<Graph>),
    #[error("morphism is not valid in {0}")]
    InvalidMorphism(Category),
    #[error("the two morphisms do not share domain and codomain")]
    ParallelPairMismatch,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

/// Which construction produced a [`ConeResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeKind {
    Product,
    Coproduct,
    Equalizer,
    Coequalizer,
}

/// A constructed (co)limit object together with its legs: projections for
/// products, injections for coproducts, the inclusion for equalizers, and
/// the quotient map for coequalizers. (Co)equalizers also carry the parallel
/// pair they were built from, so universal properties can be re-checked.
#[derive(Debug, Clone)]
pub struct ConeResult {
    pub kind: ConeKind,
    pub category: Category,
    pub object: Graph,
    pub legs: Vec<Morphism>,
    pub pair: Option<Box<(Morphism, Morphism)>>,
}

/// Canonical label of the product part made from parts `pa` of `a` and `pb`
/// of `b`.
pub fn product_pair_label(a: &Graph, pa: &PartId, b: &Graph, pb: &PartId) -> String {
    format!("({},{})", a.component_tag(pa), b.component_tag(pb))
}

/// Canonical label of the crossed twin of `(pa, pb)`.
pub fn product_bar_label(a: &Graph, pa: &PartId, b: &Graph, pb: &PartId) -> String {
    format!("bar({},{})", a.component_tag(pa), b.component_tag(pb))
}

/// The categorical product of `a` and `b` in `cat`, with projection legs.
pub fn product(a: &Graph, b: &Graph, cat: Category) -> Result<ConeResult, LimitsError> {
    for g in [a, b] {
        if !g.validate_in(cat) {
            return Err(LimitsError::InvalidObject(cat, Box::new(g.clone())));
        }
    }

    let mut object = Graph::new();
    let mut p0: BTreeMap<PartId, PartId> = BTreeMap::new();
    let mut p1: BTreeMap<PartId, PartId> = BTreeMap::new();

    let vertex_pair = |x: &str, y: &str| {
        product_pair_label(a, &PartId::vertex(x), b, &PartId::vertex(y))
    };

    for va in a.vertex_labels() {
        for vb in b.vertex_labels() {
            let label = vertex_pair(va, vb);
            object.add_vertex(label.clone())?;
            p0.insert(PartId::vertex(label.clone()), PartId::vertex(va));
            p1.insert(PartId::vertex(label), PartId::vertex(vb));
        }
    }

    for pa in a.part_set() {
        for pb in b.part_set() {
            if pa.is_vertex() && pb.is_vertex() {
                continue; // already a vertex of the product
            }
            if cat.strict() && (pa.is_vertex() != pb.is_vertex()) {
                continue; // mixed pairs are deleted in the strict categories
            }
            let (a1, a2) = {
                let inc = a.incidence_of(&pa)?;
                let (x, y) = inc.ends();
                (x.to_owned(), y.to_owned())
            };
            let (b1, b2) = {
                let inc = b.incidence_of(&pb)?;
                let (x, y) = inc.ends();
                (x.to_owned(), y.to_owned())
            };

            let label = product_pair_label(a, &pa, b, &pb);
            object.add_edge(label.clone(), vertex_pair(&a1, &b1), vertex_pair(&a2, &b2))?;
            p0.insert(PartId::edge(label.clone()), pa.clone());
            p1.insert(PartId::edge(label), pb.clone());

            if a1 != a2 && b1 != b2 {
                let bar = product_bar_label(a, &pa, b, &pb);
                object.add_edge(bar.clone(), vertex_pair(&a1, &b2), vertex_pair(&a2, &b1))?;
                // the crossed twin has the same projections
                p0.insert(PartId::edge(bar.clone()), pa.clone());
                p1.insert(PartId::edge(bar), pb.clone());
            }
        }
    }

    // Simple-graph categories collapse the raw object by their rules. For
    // valid inputs this is a no-op, but the legs are remapped through the
    // collapse regardless, with a consistency check.
    let (object, collapse) = category_collapse(&object, cat)?;
    let p0 = remap_leg(p0, &collapse)?;
    let p1 = remap_leg(p1, &collapse)?;

    let legs = vec![
        Morphism::new(object.clone(), a.clone(), p0)?,
        Morphism::new(object.clone(), b.clone(), p1)?,
    ];
    Ok(ConeResult {
        kind: ConeKind::Product,
        category: cat,
        object,
        legs,
        pair: None,
    })
}

fn remap_leg(
    leg: BTreeMap<PartId, PartId>,
    collapse: &BTreeMap<PartId, PartId>,
) -> Result<BTreeMap<PartId, PartId>, LimitsError> {
    let mut out: BTreeMap<PartId, PartId> = BTreeMap::new();
    for (raw, target) in leg {
        let class = collapse
            .get(&raw)
            .ok_or_else(|| LimitsError::Invariant(format!("no collapse image for {raw}")))?;
        if let Some(prev) = out.get(class) {
            if *prev != target {
                return Err(LimitsError::Invariant(format!(
                    "collapse identified parts with different projections at {class}"
                )));
            }
        }
        out.insert(class.clone(), target);
    }
    Ok(out)
}

/// The coproduct (disjoint union) of the given graphs, parts relabeled
/// `<index>.<label>`, with the injections as legs. The disjoint union
/// satisfies every category's object rules whenever the inputs do.
pub fn coproduct(gs: &[Graph], cat: Category) -> Result<ConeResult, LimitsError> {
    for g in gs {
        if !g.validate_in(cat) {
            return Err(LimitsError::InvalidObject(cat, Box::new(g.clone())));
        }
    }
    let mut object = Graph::new();
    let mut legs = Vec::with_capacity(gs.len());
    for (i, g) in gs.iter().enumerate() {
        let tag = |l: &str| format!("{i}.{l}");
        for v in g.vertex_labels() {
            object.add_vertex(tag(v))?;
        }
        for (e, inc) in g.edges() {
            let (x, y) = inc.ends();
            object.add_edge(tag(e), tag(x), tag(y))?;
        }
        let map = g
            .part_set()
            .into_iter()
            .map(|p| {
                let img = PartId {
                    kind: p.kind,
                    label: tag(&p.label),
                };
                (p, img)
            })
            .collect();
        legs.push((g.clone(), map));
    }
    let legs = legs
        .into_iter()
        .map(|(g, map)| Morphism::new(g, object.clone(), map))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ConeResult {
        kind: ConeKind::Coproduct,
        category: cat,
        object,
        legs,
        pair: None,
    })
}

fn check_parallel_pair(
    f: &Morphism,
    g: &Morphism,
    cat: Category,
) -> Result<(), LimitsError> {
    if f.domain() != g.domain() || f.codomain() != g.codomain() {
        return Err(LimitsError::ParallelPairMismatch);
    }
    for m in [f, g] {
        if !m.is_valid_in(cat) {
            return Err(LimitsError::InvalidMorphism(cat));
        }
    }
    Ok(())
}

/// The equalizer of a parallel pair `f, g : A -> B`: the subgraph of `A` on
/// the parts where the morphisms agree, an edge included only if they also
/// agree on both of its endpoints. The leg is the inclusion.
pub fn equalizer(f: &Morphism, g: &Morphism, cat: Category) -> Result<ConeResult, LimitsError> {
    check_parallel_pair(f, g, cat)?;
    let a = f.domain();
    let mut keep: BTreeSet<PartId> = BTreeSet::new();
    for p in a.part_set() {
        if f.apply(&p) != g.apply(&p) {
            continue;
        }
        let inc = a.incidence_of(&p)?;
        let (x, y) = inc.ends();
        let agree_on = |v: &str| {
            let v = PartId::vertex(v);
            f.apply(&v) == g.apply(&v)
        };
        if agree_on(x) && agree_on(y) {
            keep.insert(p);
        }
    }
    let object = a.subgraph_on(&keep)?;
    let inclusion = Morphism::inclusion(&object, a)?;
    Ok(ConeResult {
        kind: ConeKind::Equalizer,
        category: cat,
        object,
        legs: vec![inclusion],
        pair: Some(Box::new((f.clone(), g.clone()))),
    })
}

/// The coequalizer of a parallel pair `f, g : A -> B`: the quotient of `B`
/// by the equivalence closure of `{ f(a) ~ g(a) }`, stabilized so that an
/// edge identified with a vertex becomes a vertex and absorbs its endpoints,
/// then post-collapsed by the category's object rules (parallel classes to a
/// single edge; loops to their vertex in the simple-graph category). The leg
/// is the quotient map.
pub fn coequalizer(f: &Morphism, g: &Morphism, cat: Category) -> Result<ConeResult, LimitsError> {
    check_parallel_pair(f, g, cat)?;
    let b = f.codomain();

    let mut quot = Quotienter::new(b);
    for p in f.domain().part_set() {
        quot.union(f.apply(&p), g.apply(&p));
    }
    quot.stabilize();
    let (q1, map1) = quot.build()?;

    let (object, map2) = category_collapse(&q1, cat)?;

    let q_map: BTreeMap<PartId, PartId> = map1
        .into_iter()
        .map(|(p, c)| {
            let final_class = map2
                .get(&c)
                .cloned()
                .ok_or_else(|| LimitsError::Invariant(format!("no collapse image for {c}")))?;
            Ok((p, final_class))
        })
        .collect::<Result<_, LimitsError>>()?;

    let q = Morphism::new(b.clone(), object.clone(), q_map)?;
    Ok(ConeResult {
        kind: ConeKind::Coequalizer,
        category: cat,
        object,
        legs: vec![q],
        pair: Some(Box::new((f.clone(), g.clone()))),
    })
}

/// Collapses a graph by a category's object rules and returns the quotient
/// map. Identity for the unrestricted categories. For the restricted ones,
/// parallel edge classes merge into their minimum-labeled member; simple
/// graphs additionally fold each loop into its vertex.
pub fn category_collapse(
    g: &Graph,
    cat: Category,
) -> Result<(Graph, BTreeMap<PartId, PartId>), LimitsError> {
    if !cat.restricted_objects() {
        let id = g.part_set().into_iter().map(|p| (p.clone(), p)).collect();
        return Ok((g.clone(), id));
    }
    let mut quot = Quotienter::new(g);
    for labels in g.parallel_classes().values() {
        for w in labels.windows(2) {
            quot.union(&PartId::edge(w[0].clone()), &PartId::edge(w[1].clone()));
        }
    }
    if cat == Category::SiGrphs {
        for (e, inc) in g.edges() {
            if inc.is_loop() {
                let (v, _) = inc.ends();
                quot.union(&PartId::edge(e), &PartId::vertex(v));
            }
        }
    }
    quot.stabilize();
    quot.build()
}

/// Union-find over the parts of one graph, with the vertex-absorption rule
/// and quotient-graph construction shared by coequalizers and collapses.
struct Quotienter<'g> {
    graph: &'g Graph,
    parts: Vec<PartId>,
    index: BTreeMap<PartId, usize>,
    parent: Vec<usize>,
    // per-root flag: does the class contain a vertex (i.e. is it a vertex)?
    has_vertex: Vec<bool>,
}

impl<'g> Quotienter<'g> {
    fn new(graph: &'g Graph) -> Self {
        let parts = graph.part_set();
        let index = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let parent = (0..parts.len()).collect();
        let has_vertex = parts.iter().map(PartId::is_vertex).collect();
        Quotienter {
            graph,
            parts,
            index,
            parent,
            has_vertex,
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union_idx(&mut self, i: usize, j: usize) -> bool {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri == rj {
            return false;
        }
        self.parent[ri] = rj;
        self.has_vertex[rj] |= self.has_vertex[ri];
        true
    }

    fn union(&mut self, p: &PartId, q: &PartId) {
        let (i, j) = (self.index[p], self.index[q]);
        self.union_idx(i, j);
    }

    /// If an edge shares a class with a vertex, the class is a vertex and
    /// both endpoint classes merge into it. Repeats until nothing changes.
    fn stabilize(&mut self) {
        let edges: Vec<(usize, usize, usize)> = self
            .graph
            .edges()
            .map(|(e, inc)| {
                let (x, y) = inc.ends();
                (
                    self.index[&PartId::edge(e)],
                    self.index[&PartId::vertex(x)],
                    self.index[&PartId::vertex(y)],
                )
            })
            .collect();
        loop {
            let mut changed = false;
            for &(e, x, y) in &edges {
                let root = self.find(e);
                if self.has_vertex[root] {
                    changed |= self.union_idx(x, e);
                    changed |= self.union_idx(y, e);
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// Builds the quotient graph and the part-to-class map. A class is a
    /// vertex iff it contains one; its label is the minimum member label of
    /// the class's own kind, which keeps labels unique per kind. Edge-class
    /// incidence must agree across representatives.
    fn build(&mut self) -> Result<(Graph, BTreeMap<PartId, PartId>), LimitsError> {
        let n = self.parts.len();
        let mut members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let r = self.find(i);
            members.entry(r).or_default().push(i);
        }

        let mut class_id: BTreeMap<usize, PartId> = BTreeMap::new();
        for (&root, idxs) in &members {
            let has_vertex = idxs.iter().any(|&i| self.parts[i].is_vertex());
            let kind = if has_vertex {
                PartKind::Vertex
            } else {
                PartKind::Edge
            };
            let label = idxs
                .iter()
                .map(|&i| &self.parts[i])
                .filter(|p| p.kind == kind)
                .map(|p| p.label.clone())
                .min()
                .ok_or_else(|| LimitsError::Invariant("class without a label donor".into()))?;
            class_id.insert(root, PartId { kind, label });
        }

        let mut part_to_class: BTreeMap<PartId, PartId> = BTreeMap::new();
        for i in 0..n {
            let r = self.find(i);
            part_to_class.insert(self.parts[i].clone(), class_id[&r].clone());
        }

        let mut object = Graph::new();
        for cid in class_id.values() {
            if cid.is_vertex() {
                object.add_vertex(cid.label.clone())?;
            }
        }
        // Edge classes inherit the endpoint classes of a representative;
        // every member must agree or the quotient is not a graph.
        let mut placed: BTreeMap<PartId, Incidence> = BTreeMap::new();
        for (&root, idxs) in &members {
            let cid = &class_id[&root];
            if cid.is_vertex() {
                continue;
            }
            let mut incidence: Option<Incidence> = None;
            for &i in idxs {
                let part = &self.parts[i];
                let inc = self.graph.incidence_of(part)?;
                let mapped = inc.map(|v| part_to_class[&PartId::vertex(v)].label.clone());
                match &incidence {
                    None => incidence = Some(mapped),
                    Some(prev) if *prev == mapped => {}
                    Some(prev) => {
                        return Err(LimitsError::Invariant(format!(
                            "edge class {cid} has inconsistent incidence {prev} vs {mapped}"
                        )))
                    }
                }
            }
            let inc = incidence
                .ok_or_else(|| LimitsError::Invariant("empty edge class".into()))?;
            placed.insert(cid.clone(), inc);
        }
        for (cid, inc) in placed {
            let (x, y) = inc.ends();
            object.add_edge(cid.label, x, y)?;
        }
        Ok((object, part_to_class))
    }
}
