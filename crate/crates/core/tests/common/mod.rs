//! Helpers shared by the integration suites: brute-force oracles and small
//! exhaustive universes. Everything here is deliberately independent of the
//! library's own construction paths.
#![allow(dead_code)] // each test target uses its own subset

use std::collections::BTreeSet;

use grphcat_core::graph::{Category, Graph, PartId};
use grphcat_core::morphism::Morphism;
use grphcat_core::ump::enumerate_morphisms;

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            go(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), 0, &mut out);
    out
}

/// Brute-force isomorphism oracle: try every vertex bijection and compare
/// edge multiplicities between every vertex pair.
pub fn iso_oracle(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let gv: Vec<&str> = g.vertex_labels().collect();
    let hv: Vec<&str> = h.vertex_labels().collect();
    let mult = |gr: &Graph, x: &str, y: &str| {
        gr.edges()
            .filter(|(_, inc)| {
                let (a, b) = inc.ends();
                (a, b) == (x.min(y), x.max(y))
            })
            .count()
    };
    permutations(gv.len()).into_iter().any(|perm| {
        (0..gv.len()).all(|i| {
            (i..gv.len()).all(|j| mult(g, gv[i], gv[j]) == mult(h, hv[perm[i]], hv[perm[j]]))
        })
    })
}

/// All graphs of a category with at most `max_parts` parts, enumerated as
/// multisets of incidences over canonical vertex labels. Contains
/// iso-duplicates, which only add redundant checks.
pub fn small_universe(cat: Category, max_parts: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for nv in 0..=max_parts {
        let vertices: Vec<String> = (0..nv).map(|i| format!("v{i}")).collect();
        let mut slots = Vec::new();
        for i in 0..nv {
            for j in i..nv {
                slots.push((i, j));
            }
        }
        let max_edges = max_parts - nv;
        // non-decreasing slot sequences = multisets of incidences
        let mut stacks: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..max_edges {
            let mut next = Vec::new();
            for stack in &stacks {
                let lo = stack.last().copied().unwrap_or(0);
                for s in lo..slots.len() {
                    let mut st = stack.clone();
                    st.push(s);
                    next.push(st);
                }
            }
            stacks.extend(next);
            stacks = stacks
                .into_iter()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
        }
        for stack in stacks {
            let mut g = Graph::new();
            for v in &vertices {
                g.add_vertex(v.clone()).unwrap();
            }
            for (e, &s) in stack.iter().enumerate() {
                let (i, j) = slots[s];
                g.add_edge(format!("e{e}"), format!("v{i}"), format!("v{j}"))
                    .unwrap();
            }
            if g.validate_in(cat) {
                out.push(g);
            }
        }
    }
    out
}

/// Universal epimorphism check: `f` is epi iff no two distinct morphisms
/// out of its codomain agree on the image of `f`. Quantifies over the given
/// test objects.
pub fn universal_epi(f: &Morphism, tests: &[Graph], cat: Category) -> bool {
    let image: Vec<&PartId> = f.part_map().values().collect();
    for c in tests {
        let homs = enumerate_morphisms(f.codomain(), c, cat).unwrap();
        let mut seen: BTreeSet<Vec<&PartId>> = BTreeSet::new();
        for g in &homs {
            let key: Vec<&PartId> = image.iter().map(|p| g.apply(p)).collect();
            if !seen.insert(key) {
                return false;
            }
        }
    }
    true
}

/// Universal monomorphism check: `f` is mono iff no two distinct morphisms
/// into its domain become equal after `f`.
pub fn universal_mono(f: &Morphism, tests: &[Graph], cat: Category) -> bool {
    for c in tests {
        let homs = enumerate_morphisms(c, f.domain(), cat).unwrap();
        let mut seen: BTreeSet<Vec<&PartId>> = BTreeSet::new();
        for g in &homs {
            let key: Vec<&PartId> = g.part_map().values().map(|p| f.apply(p)).collect();
            if !seen.insert(key) {
                return false;
            }
        }
    }
    true
}
