//! Seeded random graphs and morphisms for the randomized suites.
//!
//! Morphisms are built by construction rather than rejection: pick a random
//! partition of the domain's vertices, quotient onto fresh codomain
//! vertices, send each edge to a (possibly shared) codomain edge between the
//! image vertices or contract it where the category allows, then optionally
//! pad the codomain with parts outside the image. Every map produced this
//! way is a valid morphism of the requested category.

use std::collections::BTreeMap;

use rand::Rng;

use crate::graph::{Category, Graph, Incidence, PartId};
use crate::morphism::Morphism;

/// A random object of `cat` with at most `max_parts` parts.
pub fn random_graph<R: Rng>(rng: &mut R, cat: Category, max_parts: usize) -> Graph {
    let max_parts = max_parts.max(1);
    let nv = rng.random_range(0..=max_parts.min(6));
    let mut g = Graph::new();
    for i in 0..nv {
        g.add_vertex(format!("v{i}")).unwrap();
    }
    if nv == 0 {
        return g;
    }
    let ne_cap = max_parts.saturating_sub(nv);
    let ne = rng.random_range(0..=ne_cap);
    let mut placed = 0usize;
    let mut attempts = 0usize;
    while placed < ne && attempts < 8 * ne + 8 {
        attempts += 1;
        let x = rng.random_range(0..nv);
        let y = rng.random_range(0..nv);
        let (x, y) = (format!("v{}", x.min(y)), format!("v{}", x.max(y)));
        let inc = Incidence::new(x.clone(), y.clone());
        match cat {
            Category::Grphs | Category::StGrphs => {}
            Category::SiGrphs => {
                if inc.is_loop() || g.parallel_classes().contains_key(&inc) {
                    continue;
                }
            }
            Category::SLStGrphs => {
                if g.parallel_classes().contains_key(&inc) {
                    continue;
                }
            }
        }
        g.add_edge(format!("e{placed}"), x, y).unwrap();
        placed += 1;
    }
    g
}

/// A random valid morphism of `cat` whose domain and codomain each have at
/// most `max_parts` parts.
pub fn random_morphism<R: Rng>(rng: &mut R, cat: Category, max_parts: usize) -> Morphism {
    let domain = random_graph(rng, cat, max_parts);
    random_morphism_from(rng, &domain, cat, max_parts)
}

/// A random valid morphism of `cat` out of the given domain; the codomain is
/// constructed and has at most `max_parts` parts.
pub fn random_morphism_from<R: Rng>(
    rng: &mut R,
    domain: &Graph,
    cat: Category,
    max_parts: usize,
) -> Morphism {
    let domain = domain.clone();
    let nv = domain.vertex_count();

    let mut codomain = Graph::new();
    let mut map: BTreeMap<PartId, PartId> = BTreeMap::new();

    // quotient the vertices onto k groups
    let k = if nv == 0 { 0 } else { rng.random_range(1..=nv) };
    let mut group_of: BTreeMap<String, usize> = BTreeMap::new();
    for (i, v) in domain.vertex_labels().enumerate() {
        // make sure every group is inhabited, then assign freely
        let grp = if i < k { i } else { rng.random_range(0..k) };
        group_of.insert(v.to_owned(), grp);
    }
    let groups = group_of.values().copied().max().map_or(0, |m| m + 1);
    for gidx in 0..groups {
        codomain.add_vertex(format!("w{gidx}")).unwrap();
    }
    for v in domain.vertex_labels() {
        map.insert(
            PartId::vertex(v),
            PartId::vertex(format!("w{}", group_of[v])),
        );
    }

    // edges: contract (non-strict, collapsed endpoints), or land on a shared
    // or fresh codomain edge between the image vertices
    let mut pools: BTreeMap<Incidence, Vec<String>> = BTreeMap::new();
    let mut next_edge = 0usize;
    for (e, inc) in domain.edges() {
        let (x, y) = inc.ends();
        let (gx, gy) = (group_of[x], group_of[y]);
        let target_inc = Incidence::new(format!("w{gx}"), format!("w{gy}"));
        let may_contract = !cat.strict() && gx == gy;
        if may_contract && rng.random_bool(0.5) {
            map.insert(PartId::edge(e), PartId::vertex(format!("w{gx}")));
            continue;
        }
        if target_inc.is_loop() && cat == Category::SiGrphs {
            // no loops available: contraction is the only option
            map.insert(PartId::edge(e), PartId::vertex(format!("w{gx}")));
            continue;
        }
        let pool = pools.entry(target_inc.clone()).or_default();
        let dedupe = cat.restricted_objects();
        let reuse = !pool.is_empty() && (dedupe || rng.random_bool(0.5));
        let label = if reuse {
            pool[rng.random_range(0..pool.len())].clone()
        } else {
            let label = format!("f{next_edge}");
            next_edge += 1;
            let (tx, ty) = target_inc.ends();
            codomain.add_edge(label.clone(), tx, ty).unwrap();
            pool.push(label.clone());
            label
        };
        map.insert(PartId::edge(e), PartId::edge(label));
    }

    // pad the codomain with parts outside the image
    let budget = max_parts.saturating_sub(codomain.part_count());
    if budget > 0 {
        let extra = rng.random_range(0..=budget.min(3));
        for i in 0..extra {
            codomain.add_vertex(format!("x{i}")).unwrap();
        }
        if extra >= 2 && !cat.strict() && rng.random_bool(0.5) {
            codomain.add_edge("xe0", "x0", "x1").unwrap();
        }
    }

    let m = Morphism::new(domain, codomain, map).expect("constructed map is total");
    debug_assert!(m.is_valid_in(cat));
    m
}
