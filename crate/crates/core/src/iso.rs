//! Isomorphism search between finite multigraphs.
//!
//! Backtracking over vertex bijections with invariant pruning (degree with
//! loops counted twice, loop counts, pairwise edge multiplicities), followed
//! by a label-ordered pairing of parallel edge classes. Candidates are tried
//! in label order, so the returned witness is the first in canonical order
//! and repeated runs agree.

use std::collections::BTreeMap;

use crate::graph::{Graph, Incidence, PartId};
use crate::morphism::Morphism;

struct Side {
    vertices: Vec<String>,
    profile: Vec<(usize, usize)>,
    // multiplicity of edges between an unordered pair of vertex indices
    mult: BTreeMap<(usize, usize), usize>,
}

impl Side {
    fn new(g: &Graph) -> Side {
        let vertices: Vec<String> = g.vertex_labels().map(str::to_owned).collect();
        let index: BTreeMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let profile = vertices
            .iter()
            .map(|v| (g.degree(v), g.loop_count(v)))
            .collect();
        let mut mult = BTreeMap::new();
        for (_, inc) in g.edges() {
            let (x, y) = inc.ends();
            let (i, j) = (index[x], index[y]);
            *mult.entry((i.min(j), i.max(j))).or_insert(0) += 1;
        }
        Side {
            vertices,
            profile,
            mult,
        }
    }

    fn mult(&self, i: usize, j: usize) -> usize {
        *self.mult.get(&(i.min(j), i.max(j))).unwrap_or(&0)
    }
}

fn extend(g: &Side, h: &Side, mapping: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
    let i = mapping.len();
    if i == g.vertices.len() {
        return true;
    }
    for cand in 0..h.vertices.len() {
        if used[cand] || g.profile[i] != h.profile[cand] {
            continue;
        }
        if (0..i).any(|j| g.mult(i, j) != h.mult(cand, mapping[j]))
            || g.mult(i, i) != h.mult(cand, cand)
        {
            continue;
        }
        mapping.push(cand);
        used[cand] = true;
        if extend(g, h, mapping, used) {
            return true;
        }
        used[cand] = false;
        mapping.pop();
    }
    false
}

/// Finds some isomorphism from `g` to `h`, or `None` when the graphs are not
/// isomorphic. Deterministic: vertices are matched in label order and
/// parallel edges are paired by sorted label.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Morphism> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let gs = Side::new(g);
    let hs = Side::new(h);

    let mut g_profiles = gs.profile.clone();
    let mut h_profiles = hs.profile.clone();
    g_profiles.sort_unstable();
    h_profiles.sort_unstable();
    if g_profiles != h_profiles {
        return None;
    }

    let mut mapping = Vec::with_capacity(gs.vertices.len());
    let mut used = vec![false; hs.vertices.len()];
    if !extend(&gs, &hs, &mut mapping, &mut used) {
        return None;
    }

    let vertex_of = |i: usize| hs.vertices[mapping[i]].clone();
    let g_index: BTreeMap<&str, usize> = gs
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect();

    let mut part_map: BTreeMap<PartId, PartId> = BTreeMap::new();
    for (i, v) in gs.vertices.iter().enumerate() {
        part_map.insert(PartId::vertex(v.clone()), PartId::vertex(vertex_of(i)));
    }

    // Pair up parallel classes: the class of {x, y} in g maps to the class
    // of {f(x), f(y)} in h, labels matched in sorted order. The classes have
    // equal sizes by the multiplicity checks above.
    let h_classes = h.parallel_classes();
    for (inc, g_labels) in g.parallel_classes() {
        let (x, y) = inc.ends();
        let target = Incidence::new(vertex_of(g_index[x]), vertex_of(g_index[y]));
        let h_labels = h_classes
            .get(&target)
            .expect("matched vertex map must align parallel classes");
        debug_assert_eq!(g_labels.len(), h_labels.len());
        for (ge, he) in g_labels.iter().zip(h_labels) {
            part_map.insert(PartId::edge(ge.clone()), PartId::edge(he.clone()));
        }
    }

    let m = Morphism::new(g.clone(), h.clone(), part_map)
        .expect("isomorphism candidate must be a total map");
    debug_assert!(m.is_iso(crate::graph::Category::Grphs));
    Some(m)
}
