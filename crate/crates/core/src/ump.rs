//! Brute-force verification of universal mapping properties.
//!
//! Given a constructed cone and a competing (co)cone, enumerates every part
//! map in the mediating direction, filters to valid morphisms of the
//! category, and demands exactly one that commutes. Intended for desk-scale
//! objects; the search space is bounded and overruns are reported as errors
//! rather than silently truncated.

use std::collections::BTreeMap;

use crate::graph::{Category, Graph, PartId};
use crate::limits::{ConeKind, ConeResult, LimitsError};
use crate::morphism::{compose, Morphism};

/// A competing cone (or cocone) handed to the verifier: for products and
/// coproducts one leg per factor (all sharing an apex), for (co)equalizers a
/// single morphism.
#[derive(Debug, Clone)]
pub struct CompetingCone {
    pub legs: Vec<Morphism>,
}

/// Verdict of a universal-property check, with a human-readable transcript
/// line per competing cone.
#[derive(Debug, Clone)]
pub struct UmpReport {
    pub ok: bool,
    pub transcript: Vec<String>,
}

const ENUMERATION_BUDGET: u64 = 20_000_000;

/// Enumerates every valid morphism `dom -> cod` of `cat`. Vertices range
/// over the codomain's vertices, edges over its full part set (edges only,
/// in the strict categories); each assignment is validated before being
/// kept. Errors if the raw search space exceeds the budget.
pub fn enumerate_morphisms(
    dom: &Graph,
    cod: &Graph,
    cat: Category,
) -> Result<Vec<Morphism>, LimitsError> {
    let parts = dom.part_set();
    let candidates: Vec<Vec<PartId>> = parts
        .iter()
        .map(|p| {
            if p.is_vertex() {
                cod.part_set().into_iter().filter(PartId::is_vertex).collect()
            } else if cat.strict() {
                cod.part_set().into_iter().filter(PartId::is_edge).collect()
            } else {
                cod.part_set()
            }
        })
        .collect();

    let mut space: u64 = 1;
    for c in &candidates {
        space = space.saturating_mul(c.len().max(1) as u64);
        if space > ENUMERATION_BUDGET {
            return Err(LimitsError::Invariant(format!(
                "morphism enumeration space exceeds budget ({} parts into {} parts)",
                dom.part_count(),
                cod.part_count()
            )));
        }
    }
    if candidates.iter().any(|c| c.is_empty()) && !parts.is_empty() {
        return Ok(Vec::new());
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; parts.len()];
    loop {
        let map: BTreeMap<PartId, PartId> = parts
            .iter()
            .enumerate()
            .map(|(k, p)| (p.clone(), candidates[k][choice[k]].clone()))
            .collect();
        if let Ok(m) = Morphism::new(dom.clone(), cod.clone(), map) {
            if m.is_valid_in(cat) {
                out.push(m);
            }
        }
        // advance the mixed-radix counter
        let mut k = 0;
        loop {
            if k == parts.len() {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Checks existence and uniqueness of the mediating morphism for each
/// competing cone against the constructed cone. Competing cones that fail
/// their own preconditions (wrong shapes, or a (co)equalizer test morphism
/// that does not equalize the pair) are recorded as vacuous.
pub fn verify_universal_property(
    cone: &ConeResult,
    competing: &[CompetingCone],
) -> Result<UmpReport, LimitsError> {
    let mut ok = true;
    let mut transcript = Vec::new();
    for (idx, test) in competing.iter().enumerate() {
        match check_one(cone, test) {
            Ok(CheckOutcome::Mediated) => {
                transcript.push(format!("cone {idx}: unique mediating morphism found"));
            }
            Ok(CheckOutcome::Vacuous(reason)) => {
                transcript.push(format!("cone {idx}: vacuous ({reason})"));
            }
            Ok(CheckOutcome::Failed(reason)) => {
                ok = false;
                transcript.push(format!("cone {idx}: FAILED ({reason})"));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(UmpReport { ok, transcript })
}

enum CheckOutcome {
    Mediated,
    Vacuous(String),
    Failed(String),
}

fn check_one(cone: &ConeResult, test: &CompetingCone) -> Result<CheckOutcome, LimitsError> {
    let cat = cone.category;
    for leg in &test.legs {
        if !leg.is_valid_in(cat) {
            return Ok(CheckOutcome::Vacuous("test morphism invalid in category".into()));
        }
    }
    match cone.kind {
        ConeKind::Product => {
            if test.legs.len() != cone.legs.len() {
                return Ok(CheckOutcome::Vacuous("leg count mismatch".into()));
            }
            let apex = test.legs[0].domain().clone();
            for (t, leg) in test.legs.iter().zip(&cone.legs) {
                if t.domain() != &apex || t.codomain() != leg.codomain() {
                    return Ok(CheckOutcome::Vacuous("test cone shape mismatch".into()));
                }
            }
            let equations = |m: &Morphism| {
                cone.legs
                    .iter()
                    .zip(&test.legs)
                    .all(|(leg, t)| compose(leg, m).ok().as_ref() == Some(t))
            };
            mediate(&apex, &cone.object, cat, equations)
        }
        ConeKind::Coproduct => {
            if test.legs.len() != cone.legs.len() {
                return Ok(CheckOutcome::Vacuous("leg count mismatch".into()));
            }
            if test.legs.is_empty() {
                return Ok(CheckOutcome::Vacuous("empty coproduct test".into()));
            }
            let apex = test.legs[0].codomain().clone();
            for (t, leg) in test.legs.iter().zip(&cone.legs) {
                if t.codomain() != &apex || t.domain() != leg.domain() {
                    return Ok(CheckOutcome::Vacuous("test cocone shape mismatch".into()));
                }
            }
            let equations = |m: &Morphism| {
                cone.legs
                    .iter()
                    .zip(&test.legs)
                    .all(|(leg, t)| compose(m, leg).ok().as_ref() == Some(t))
            };
            mediate(&cone.object, &apex, cat, equations)
        }
        ConeKind::Equalizer => {
            let (f, g) = cone
                .pair
                .as_deref()
                .ok_or_else(|| LimitsError::Invariant("equalizer cone lost its pair".into()))?;
            if test.legs.len() != 1 {
                return Ok(CheckOutcome::Vacuous("equalizer test needs one leg".into()));
            }
            let z = &test.legs[0];
            if z.codomain() != f.domain() {
                return Ok(CheckOutcome::Vacuous("test morphism lands elsewhere".into()));
            }
            if compose(f, z).ok() != compose(g, z).ok() {
                return Ok(CheckOutcome::Vacuous(
                    "test morphism does not equalize the pair".into(),
                ));
            }
            let inclusion = &cone.legs[0];
            let equations = |m: &Morphism| compose(inclusion, m).ok().as_ref() == Some(z);
            mediate(z.domain(), &cone.object, cat, equations)
        }
        ConeKind::Coequalizer => {
            let (f, g) = cone
                .pair
                .as_deref()
                .ok_or_else(|| LimitsError::Invariant("coequalizer cone lost its pair".into()))?;
            if test.legs.len() != 1 {
                return Ok(CheckOutcome::Vacuous("coequalizer test needs one leg".into()));
            }
            let z = &test.legs[0];
            if z.domain() != f.codomain() {
                return Ok(CheckOutcome::Vacuous("test morphism starts elsewhere".into()));
            }
            if compose(z, f).ok() != compose(z, g).ok() {
                return Ok(CheckOutcome::Vacuous(
                    "test morphism does not coequalize the pair".into(),
                ));
            }
            let q = &cone.legs[0];
            let equations = |m: &Morphism| compose(m, q).ok().as_ref() == Some(z);
            mediate(&cone.object, z.codomain(), cat, equations)
        }
    }
}

fn mediate(
    dom: &Graph,
    cod: &Graph,
    cat: Category,
    commutes: impl Fn(&Morphism) -> bool,
) -> Result<CheckOutcome, LimitsError> {
    let all = enumerate_morphisms(dom, cod, cat)?;
    let satisfying: Vec<&Morphism> = all.iter().filter(|m| commutes(m)).collect();
    match satisfying.len() {
        1 => Ok(CheckOutcome::Mediated),
        0 => Ok(CheckOutcome::Failed("no mediating morphism exists".into())),
        n => Ok(CheckOutcome::Failed(format!(
            "mediating morphism not unique ({n} candidates)"
        ))),
    }
}
