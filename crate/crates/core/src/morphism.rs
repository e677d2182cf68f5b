//! Graph morphisms as total functions on part sets.
//!
//! A morphism sends parts to parts, vertices to vertices, and preserves
//! incidence: an edge with endpoints `{x, y}` must land on a part whose
//! incidence is `{f(x), f(y)}`. Because a vertex is self-incident, this one
//! rule also admits edge contractions (edge to vertex) in the non-strict
//! categories. Strict categories additionally require edges to map to edges.
//!
//! Epimorphisms and monomorphisms are characterized concretely: in the
//! unrestricted categories they are exactly the part-set surjections and
//! injections; in the simple-graph categories only the vertex sets matter.
//! The brute-force universal-arrow checks backing these characterizations
//! live in the test suites, not here.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{Category, Graph, Incidence, PartId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphismError {
    #[error("part map is missing domain part {0}")]
    MissingPart(PartId),
    #[error("part map mentions {0} which is not a domain part")]
    NotADomainPart(PartId),
    #[error("image {image} of {part} is not a codomain part")]
    ImageOutsideCodomain { part: PartId, image: PartId },
    #[error("vertex {0} is mapped to an edge")]
    VertexToEdge(PartId),
    #[error("codomain of the inner morphism differs from domain of the outer")]
    ComposeMismatch,
    #[error("{0} is not a subgraph part of the ambient graph")]
    NotASubgraphPart(PartId),
}

/// A single incidence-preservation or strictness failure, reported by
/// [`Morphism::violations`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub part: PartId,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.part, self.message)
    }
}

/// A total part map between two graphs.
///
/// Construction enforces that the map is a function `P(domain) ->
/// P(codomain)` taking vertices to vertices. Incidence preservation (and
/// strictness, where the category demands it) is a separate, queryable
/// property so that candidate maps can be enumerated and filtered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    domain: Graph,
    codomain: Graph,
    part_map: BTreeMap<PartId, PartId>,
}

impl Morphism {
    pub fn new(
        domain: Graph,
        codomain: Graph,
        part_map: BTreeMap<PartId, PartId>,
    ) -> Result<Morphism, MorphismError> {
        for p in part_map.keys() {
            if !domain.has_part(p) {
                return Err(MorphismError::NotADomainPart(p.clone()));
            }
        }
        for p in domain.part_set() {
            let image = part_map
                .get(&p)
                .ok_or_else(|| MorphismError::MissingPart(p.clone()))?;
            if !codomain.has_part(image) {
                return Err(MorphismError::ImageOutsideCodomain {
                    part: p.clone(),
                    image: image.clone(),
                });
            }
            if p.is_vertex() && image.is_edge() {
                return Err(MorphismError::VertexToEdge(p));
            }
        }
        Ok(Morphism {
            domain,
            codomain,
            part_map,
        })
    }

    pub fn identity(g: &Graph) -> Morphism {
        let part_map = g.part_set().into_iter().map(|p| (p.clone(), p)).collect();
        Morphism {
            domain: g.clone(),
            codomain: g.clone(),
            part_map,
        }
    }

    /// The inclusion of a subgraph into an ambient graph (labels shared).
    pub fn inclusion(sub: &Graph, ambient: &Graph) -> Result<Morphism, MorphismError> {
        for p in sub.part_set() {
            if !ambient.has_part(&p)
                || sub.incidence_of(&p).ok() != ambient.incidence_of(&p).ok()
            {
                return Err(MorphismError::NotASubgraphPart(p));
            }
        }
        let part_map = sub.part_set().into_iter().map(|p| (p.clone(), p)).collect();
        Ok(Morphism {
            domain: sub.clone(),
            codomain: ambient.clone(),
            part_map,
        })
    }

    pub fn domain(&self) -> &Graph {
        &self.domain
    }

    pub fn codomain(&self) -> &Graph {
        &self.codomain
    }

    pub fn part_map(&self) -> &BTreeMap<PartId, PartId> {
        &self.part_map
    }

    /// Image of a domain part. Panics on a non-domain part; totality is a
    /// construction invariant.
    pub fn apply(&self, p: &PartId) -> &PartId {
        self.part_map
            .get(p)
            .unwrap_or_else(|| panic!("part {p} is not in the domain of this morphism"))
    }

    /// Incidence-preservation (and, in strict categories, strictness)
    /// failures, one entry per offending part. Empty means valid in `cat`.
    pub fn violations(&self, cat: Category) -> Vec<Violation> {
        let mut out = Vec::new();
        for p in self.domain.part_set() {
            let image = self.apply(&p);
            let inc = self.domain.incidence_of(&p).expect("domain part");
            let (x, y) = inc.ends();
            let fx = self.apply(&PartId::vertex(x));
            let fy = self.apply(&PartId::vertex(y));
            let expected = Incidence::new(fx.label.clone(), fy.label.clone());
            let got = self.codomain.incidence_of(image).expect("codomain part");
            if got != expected {
                out.push(Violation {
                    part: p.clone(),
                    message: format!(
                        "incidence not preserved: image {image} has {got}, endpoints map to {expected}"
                    ),
                });
            }
            if cat.strict() && p.is_edge() && image.is_vertex() {
                out.push(Violation {
                    part: p,
                    message: format!("edge mapped to vertex {image} in a strict category"),
                });
            }
        }
        out
    }

    pub fn is_valid_in(&self, cat: Category) -> bool {
        self.violations(cat).is_empty()
    }

    fn distinct_images(&self) -> BTreeSet<&PartId> {
        self.part_map.values().collect()
    }

    fn distinct_vertex_images(&self) -> BTreeSet<&PartId> {
        self.part_map
            .iter()
            .filter(|(p, _)| p.is_vertex())
            .map(|(_, q)| q)
            .collect()
    }

    /// Epimorphism test. Unrestricted categories: surjective on parts.
    /// Simple-graph categories: surjective on vertices.
    pub fn is_epi(&self, cat: Category) -> bool {
        if cat.restricted_objects() {
            self.distinct_vertex_images().len() == self.codomain.vertex_count()
        } else {
            self.distinct_images().len() == self.codomain.part_count()
        }
    }

    /// Monomorphism test. Unrestricted categories: injective on parts.
    /// Simple-graph categories: injective on vertices.
    pub fn is_mono(&self, cat: Category) -> bool {
        if cat.restricted_objects() {
            self.distinct_vertex_images().len() == self.domain.vertex_count()
        } else {
            self.distinct_images().len() == self.domain.part_count()
        }
    }

    /// Isomorphism test: the part map is a bijection and the inverse map is
    /// itself a valid morphism of `cat`. In the unrestricted categories this
    /// coincides with epi-and-mono (they are balanced); in the simple-graph
    /// categories it deliberately does not.
    pub fn is_iso(&self, cat: Category) -> bool {
        self.is_valid_in(cat)
            && match self.inverse() {
                Some(inv) => inv.is_valid_in(cat),
                None => false,
            }
    }

    /// The inverse morphism, when the part map is a bijection whose reverse
    /// is a function taking vertices to vertices.
    pub fn inverse(&self) -> Option<Morphism> {
        if self.distinct_images().len() != self.part_map.len()
            || self.part_map.len() != self.codomain.part_count()
        {
            return None;
        }
        let reversed: BTreeMap<PartId, PartId> = self
            .part_map
            .iter()
            .map(|(p, q)| (q.clone(), p.clone()))
            .collect();
        Morphism::new(self.codomain.clone(), self.domain.clone(), reversed).ok()
    }
}

/// Composition `g . f` (apply `f` first). Errors unless `f`'s codomain
/// equals `g`'s domain.
pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism, MorphismError> {
    if f.codomain != g.domain {
        return Err(MorphismError::ComposeMismatch);
    }
    let part_map = f
        .part_map
        .iter()
        .map(|(p, q)| (p.clone(), g.apply(q).clone()))
        .collect();
    Ok(Morphism {
        domain: f.domain.clone(),
        codomain: g.codomain.clone(),
        part_map,
    })
}
