//! Decks, deck matching, and the categorical reconstruction check.
//!
//! A deck is the indexed family of single-part-deleted subgraphs of a simple
//! graph. Matching two decks produces explicit isomorphisms card by card;
//! the cotupling of those isomorphisms through the deck coproduct gives the
//! morphism `Gamma` onto the second graph, which must be surjective on parts
//! (this is the place where the "at least 3 vertices" / "at least 4 edges"
//! hypotheses bite). Running the image factorization of `Gamma` in the
//! strict category yields the coimage `I`, always isomorphic to the target;
//! reconstructability then reduces to the existence of an epimorphism
//! `delta` off the deck coproduct with `delta.p0.k = delta.p1.k`, which is
//! searched for as an isomorphism `Delta : I -> G` and assembled as
//! `delta = Delta . q`.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::fmt::{fmt_factorize, FmtError, FmtFactorization};
use crate::graph::{Category, Graph, GraphError, PartId};
use crate::iso::find_isomorphism;
use crate::limits::{coproduct, ConeResult, LimitsError};
use crate::morphism::{compose, Morphism, MorphismError};

#[derive(Debug, Error)]
pub enum ReconstructionError {
    #[error("deck source must be a simple graph")]
    NonSimple,
    #[error("decks have different modes")]
    ModeMismatch,
    #[error("matching does not fit the decks: {0}")]
    InvalidMatching(String),
    #[error("gamma is not surjective on parts; {missing} parts uncovered (input below the size hypothesis)")]
    GammaNotEpi { missing: usize },
    #[error("sweep budget allows at most 7 vertices, got {0}")]
    BudgetExceeded(usize),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Limits(#[from] LimitsError),
    #[error(transparent)]
    Fmt(#[from] FmtError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DeckMode {
    VertexDeleted,
    EdgeDeleted,
}

impl std::fmt::Display for DeckMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DeckMode::VertexDeleted => f.write_str("vertex"),
            DeckMode::EdgeDeleted => f.write_str("edge"),
        }
    }
}

impl std::str::FromStr for DeckMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "vertex" => Ok(DeckMode::VertexDeleted),
            "edge" => Ok(DeckMode::EdgeDeleted),
            other => Err(format!("unknown deck mode `{other}` (expected vertex|edge)")),
        }
    }
}

/// One card of a deck: the graph left after deleting the recorded part.
#[derive(Debug, Clone)]
pub struct DeckCard {
    pub deleted: PartId,
    pub graph: Graph,
}

/// The full deck of a simple graph, cards ordered by deleted-part label.
#[derive(Debug, Clone)]
pub struct Deck {
    pub mode: DeckMode,
    pub source: Graph,
    pub cards: Vec<DeckCard>,
}

impl Deck {
    /// Advisory warnings where the input sits below the size hypotheses of
    /// the reconstruction conjectures; such decks still compute.
    pub fn hypothesis_warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        match self.mode {
            DeckMode::VertexDeleted => {
                if self.source.vertex_count() < 3 {
                    out.push(format!(
                        "vertex deck of a graph with {} < 3 vertices",
                        self.source.vertex_count()
                    ));
                }
            }
            DeckMode::EdgeDeleted => {
                if self.source.edge_count() < 4 {
                    out.push(format!(
                        "edge deck of a graph with {} < 4 edges",
                        self.source.edge_count()
                    ));
                }
            }
        }
        out
    }
}

/// Builds the deck of a simple graph. Non-simple sources are rejected; the
/// size hypotheses are advisory only (see [`Deck::hypothesis_warnings`]).
pub fn make_deck(g: &Graph, mode: DeckMode) -> Result<Deck, ReconstructionError> {
    if !g.validate_in(Category::SiGrphs) {
        return Err(ReconstructionError::NonSimple);
    }
    let cards = match mode {
        DeckMode::VertexDeleted => g
            .vertex_labels()
            .map(|v| {
                Ok(DeckCard {
                    deleted: PartId::vertex(v),
                    graph: g.delete_vertex(v)?,
                })
            })
            .collect::<Result<Vec<_>, ReconstructionError>>()?,
        DeckMode::EdgeDeleted => g
            .edge_labels()
            .map(|e| {
                Ok(DeckCard {
                    deleted: PartId::edge(e),
                    graph: g.delete_edge(e)?,
                })
            })
            .collect::<Result<Vec<_>, ReconstructionError>>()?,
    };
    Ok(Deck {
        mode,
        source: g.clone(),
        cards,
    })
}

/// A perfect matching between two decks: `sigma[i]` is the index of the
/// matched card and `gammas[i]` the isomorphism onto it.
#[derive(Debug, Clone)]
pub struct DeckMatching {
    pub sigma: Vec<usize>,
    pub gammas: Vec<Morphism>,
}

impl DeckMatching {
    /// The same matching read backwards.
    pub fn inverted(&self) -> Option<DeckMatching> {
        let n = self.sigma.len();
        let mut sigma = vec![usize::MAX; n];
        let mut gammas: Vec<Option<Morphism>> = vec![None; n];
        for (i, &j) in self.sigma.iter().enumerate() {
            sigma[j] = i;
            gammas[j] = Some(self.gammas[i].inverse()?);
        }
        Some(DeckMatching {
            sigma,
            gammas: gammas.into_iter().collect::<Option<Vec<_>>>()?,
        })
    }
}

/// Per-vertex fingerprint entry: (degree, loops, sorted neighbor profiles).
type KeyEntry = (usize, usize, Vec<(usize, usize)>);

/// A cheap isomorphism-invariant fingerprint: counts plus the sorted
/// per-vertex (degree, loops) profiles refined once by the sorted profiles
/// of the resolved neighborhood.
fn canonical_key(g: &Graph) -> Vec<KeyEntry> {
    let base: BTreeMap<&str, (usize, usize)> = g
        .vertex_labels()
        .map(|v| (v, (g.degree(v), g.loop_count(v))))
        .collect();
    let mut refined: Vec<KeyEntry> = g
        .vertex_labels()
        .map(|v| {
            let mut neighborhood: Vec<(usize, usize)> = g
                .edges()
                .filter_map(|(_, inc)| {
                    let (x, y) = inc.ends();
                    if x == v && !inc.is_loop() {
                        Some(base[y])
                    } else if y == v && !inc.is_loop() {
                        Some(base[x])
                    } else {
                        None
                    }
                })
                .collect();
            neighborhood.sort_unstable();
            let (d, l) = base[v];
            (d, l, neighborhood)
        })
        .collect();
    refined.sort_unstable();
    refined
}

/// Groups cards of both decks into isomorphism classes, reusing iso searches
/// via class representatives. Returns, per card, its class plus the
/// isomorphism onto the class representative.
fn classify(decks: [&Deck; 2]) -> Vec<Vec<(usize, Morphism)>> {
    struct Class {
        key: Vec<KeyEntry>,
        rep: Graph,
    }
    let mut classes: Vec<Class> = Vec::new();
    let mut out = Vec::new();
    for deck in decks {
        let mut deck_out = Vec::new();
        for card in &deck.cards {
            let key = canonical_key(&card.graph);
            let mut found = None;
            for (ci, class) in classes.iter().enumerate() {
                if class.key != key {
                    continue;
                }
                if let Some(m) = find_isomorphism(&card.graph, &class.rep) {
                    found = Some((ci, m));
                    break;
                }
            }
            let (ci, m) = found.unwrap_or_else(|| {
                classes.push(Class {
                    key,
                    rep: card.graph.clone(),
                });
                let id = Morphism::identity(&card.graph);
                (classes.len() - 1, id)
            });
            deck_out.push((ci, m));
        }
        out.push(deck_out);
    }
    out
}

/// Finds a perfect matching between the decks' cards under isomorphism, with
/// explicit card isomorphisms, or `None` when the decks differ. Maximum
/// matching by augmenting paths over the class-equality relation.
pub fn match_decks(dg: &Deck, dh: &Deck) -> Result<Option<DeckMatching>, ReconstructionError> {
    if dg.mode != dh.mode {
        return Err(ReconstructionError::ModeMismatch);
    }
    if dg.cards.len() != dh.cards.len() {
        return Ok(None);
    }
    let n = dg.cards.len();
    let classified = classify([dg, dh]);
    let (g_classes, h_classes) = (&classified[0], &classified[1]);

    // Kuhn's augmenting-path matching, G cards on the left.
    let mut match_of_h: Vec<Option<usize>> = vec![None; n];
    fn try_augment(
        i: usize,
        g_classes: &[(usize, Morphism)],
        h_classes: &[(usize, Morphism)],
        visited: &mut [bool],
        match_of_h: &mut [Option<usize>],
    ) -> bool {
        for j in 0..h_classes.len() {
            if visited[j] || g_classes[i].0 != h_classes[j].0 {
                continue;
            }
            visited[j] = true;
            let free = match match_of_h[j] {
                None => true,
                Some(prev) => try_augment(prev, g_classes, h_classes, visited, match_of_h),
            };
            if free {
                match_of_h[j] = Some(i);
                return true;
            }
        }
        false
    }
    let mut matched = 0;
    for i in 0..n {
        let mut visited = vec![false; n];
        if try_augment(i, g_classes, h_classes, &mut visited, &mut match_of_h) {
            matched += 1;
        }
    }
    if matched != n {
        return Ok(None);
    }

    let mut sigma = vec![usize::MAX; n];
    for (j, m) in match_of_h.iter().enumerate() {
        let i = m.ok_or_else(|| {
            ReconstructionError::Invariant("perfect matching left a hole".into())
        })?;
        sigma[i] = j;
    }
    let mut gammas = Vec::with_capacity(n);
    for i in 0..n {
        let j = sigma[i];
        // card_i -> rep -> card_j
        let to_rep = &g_classes[i].1;
        let from_rep = h_classes[j].1.inverse().ok_or_else(|| {
            ReconstructionError::Invariant("class isomorphism is not invertible".into())
        })?;
        let gamma = compose(&from_rep, to_rep)?;
        if !gamma.is_iso(Category::StGrphs) {
            return Err(ReconstructionError::Invariant(
                "matched cards are not strictly isomorphic".into(),
            ));
        }
        gammas.push(gamma);
    }
    Ok(Some(DeckMatching { sigma, gammas }))
}

/// The deck coproduct together with the cotupled morphism onto `h`.
#[derive(Debug, Clone)]
pub struct GammaBuild {
    pub cone: ConeResult,
    pub gamma: Morphism,
}

/// Cotuples the matched card isomorphisms through the deck coproduct: on
/// card `i` the morphism acts as the inclusion of `h`'s card `sigma[i]`
/// after `gamma_i`. Errors when the result is not surjective on `h`'s parts,
/// which is how undersized inputs manifest.
pub fn build_gamma(
    dg: &Deck,
    matching: &DeckMatching,
    h: &Graph,
) -> Result<GammaBuild, ReconstructionError> {
    let n = dg.cards.len();
    if matching.sigma.len() != n || matching.gammas.len() != n {
        return Err(ReconstructionError::InvalidMatching(
            "matching size differs from deck size".into(),
        ));
    }
    let cards: Vec<Graph> = dg.cards.iter().map(|c| c.graph.clone()).collect();
    let cone = coproduct(&cards, Category::StGrphs)?;

    let mut map: BTreeMap<PartId, PartId> = BTreeMap::new();
    for (i, gamma_i) in matching.gammas.iter().enumerate() {
        if gamma_i.domain() != &cards[i] {
            return Err(ReconstructionError::InvalidMatching(format!(
                "gamma {i} does not start at card {i}"
            )));
        }
        // the matched card must be an actual subgraph of h for the
        // inclusion to make sense
        let inclusion = Morphism::inclusion(gamma_i.codomain(), h).map_err(|_| {
            ReconstructionError::InvalidMatching(format!(
                "gamma {i} does not land in a subgraph of the target"
            ))
        })?;
        let into_h = compose(&inclusion, gamma_i)?;
        for p in cards[i].part_set() {
            let injected = cone.legs[i].apply(&p).clone();
            map.insert(injected, into_h.apply(&p).clone());
        }
    }
    let gamma = Morphism::new(cone.object.clone(), h.clone(), map)?;
    if !gamma.is_valid_in(Category::StGrphs) {
        return Err(ReconstructionError::Invariant(
            "cotupled morphism is not strict".into(),
        ));
    }
    if !gamma.is_epi(Category::StGrphs) {
        let covered: std::collections::BTreeSet<&PartId> = gamma.part_map().values().collect();
        return Err(ReconstructionError::GammaNotEpi {
            missing: h.part_count() - covered.len(),
        });
    }
    Ok(GammaBuild { cone, gamma })
}

/// A fully computed reconstruction pipeline for one ordered pair of graphs.
/// `g` and `h` are the roles actually run (`swapped` records whether the
/// caller's arguments were exchanged to get a surjective `Gamma`).
#[derive(Debug)]
pub struct ReconstructionCase {
    pub mode: DeckMode,
    pub g: Graph,
    pub h: Graph,
    pub swapped: bool,
    pub matching: DeckMatching,
    pub coproduct: ConeResult,
    pub gamma: Morphism,
    pub fx: FmtFactorization,
    /// The isomorphism `q* . h : I -> H` asserting the intermediate theorem.
    pub coimage_iso_h: Morphism,
    /// `Delta : I -> G`, when the coimage is isomorphic to `g`.
    pub delta_mediator: Option<Morphism>,
    /// `delta = Delta . q`, the epimorphism certifying reconstructability.
    pub delta: Option<Morphism>,
}

/// Outcome of [`reconstruction_check`].
#[derive(Debug)]
pub enum ReconstructionOutcome {
    /// Decks do not match; nothing further to compute.
    DecksMismatch { reason: String },
    /// Decks match, but neither orientation yields a surjective `Gamma`
    /// (inputs below the size hypotheses).
    HypothesisViolation { reason: String },
    /// The pipeline ran to completion.
    Case(Box<ReconstructionCase>),
}

impl ReconstructionOutcome {
    pub fn delta_found(&self) -> bool {
        matches!(self, ReconstructionOutcome::Case(c) if c.delta.is_some())
    }
}

fn run_case(
    mode: DeckMode,
    g: &Graph,
    h: &Graph,
    matching: DeckMatching,
    gb: GammaBuild,
    swapped: bool,
) -> Result<ReconstructionCase, ReconstructionError> {
    let fx = fmt_factorize(&gb.gamma, Category::StGrphs)?;

    // the coimage is isomorphic to the target through q* . h
    let coimage_iso_h = compose(&fx.q_star, &fx.h)?;
    if !coimage_iso_h.is_iso(Category::StGrphs) {
        return Err(ReconstructionError::Invariant(
            "q* . h is not an isomorphism onto the target".into(),
        ));
    }
    if fx.coimage.vertex_count() != h.vertex_count()
        || fx.coimage.edge_count() != h.edge_count()
    {
        return Err(ReconstructionError::Invariant(
            "coimage part counts differ from the target".into(),
        ));
    }

    let delta_mediator = find_isomorphism(&fx.coimage, g);
    let delta = match &delta_mediator {
        None => None,
        Some(mediator) => {
            let delta = compose(mediator, &fx.q)?;
            if !delta.is_epi(Category::StGrphs) {
                return Err(ReconstructionError::Invariant(
                    "delta is not an epimorphism".into(),
                ));
            }
            let p0k = compose(&fx.p0, &fx.k)?;
            let p1k = compose(&fx.p1, &fx.k)?;
            if compose(&delta, &p0k)? != compose(&delta, &p1k)? {
                return Err(ReconstructionError::Invariant(
                    "delta . p0 . k differs from delta . p1 . k".into(),
                ));
            }
            Some(delta)
        }
    };

    Ok(ReconstructionCase {
        mode,
        g: g.clone(),
        h: h.clone(),
        swapped,
        matching,
        coproduct: gb.cone,
        gamma: gb.gamma,
        fx,
        coimage_iso_h,
        delta_mediator,
        delta,
    })
}

/// Runs the full reconstruction pipeline for `g` against `h`. When `Gamma`
/// fails its surjectivity assertion toward `h`, the orientation is swapped
/// once (the matching inverted) before giving up; the existence of `delta`
/// is symmetric, so the verdict is unaffected.
pub fn reconstruction_check(
    g: &Graph,
    h: &Graph,
    mode: DeckMode,
) -> Result<ReconstructionOutcome, ReconstructionError> {
    let dg = make_deck(g, mode)?;
    let dh = make_deck(h, mode)?;
    if dg.cards.len() != dh.cards.len() {
        return Ok(ReconstructionOutcome::DecksMismatch {
            reason: format!(
                "deck sizes differ: {} vs {}",
                dg.cards.len(),
                dh.cards.len()
            ),
        });
    }
    let matching = match match_decks(&dg, &dh)? {
        None => {
            return Ok(ReconstructionOutcome::DecksMismatch {
                reason: "cards admit no perfect isomorphism matching".into(),
            })
        }
        Some(m) => m,
    };

    match build_gamma(&dg, &matching, h) {
        Ok(gb) => Ok(ReconstructionOutcome::Case(Box::new(run_case(
            mode, g, h, matching, gb, false,
        )?))),
        Err(ReconstructionError::GammaNotEpi { .. }) => {
            let inverted = matching.inverted().ok_or_else(|| {
                ReconstructionError::Invariant("matching not invertible".into())
            })?;
            match build_gamma(&dh, &inverted, g) {
                Ok(gb) => Ok(ReconstructionOutcome::Case(Box::new(run_case(
                    mode, h, g, inverted, gb, true,
                )?))),
                Err(ReconstructionError::GammaNotEpi { missing }) => {
                    Ok(ReconstructionOutcome::HypothesisViolation {
                        reason: format!(
                            "gamma not surjective in either orientation ({missing} parts uncovered)"
                        ),
                    })
                }
                Err(e) => Err(e),
            }
        }
        Err(e) => Err(e),
    }
}

/// All simple graphs on `n` vertices up to isomorphism, with canonical
/// labels `v0..` / `e0..`. Representatives are the lexicographically least
/// adjacency bitmasks of their isomorphism class.
pub fn enumerate_simple_graphs(n: usize) -> Result<Vec<Graph>, ReconstructionError> {
    if n > 7 {
        return Err(ReconstructionError::BudgetExceeded(n));
    }
    if n == 0 {
        return Ok(vec![Graph::new()]);
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let pair_index: BTreeMap<(usize, usize), usize> = pairs
        .iter()
        .enumerate()
        .map(|(k, &p)| (p, k))
        .collect();

    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut perms);

    let masks: Vec<u32> = (0u32..1 << pairs.len())
        .into_par_iter()
        .filter(|&mask| {
            // keep only the least mask of each isomorphism class
            perms.iter().all(|perm| {
                let mut image = 0u32;
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                        image |= 1 << pair_index[&(a, b)];
                    }
                }
                image >= mask
            })
        })
        .collect();

    let mut out = Vec::with_capacity(masks.len());
    for mask in masks {
        let mut g = Graph::new();
        for i in 0..n {
            g.add_vertex(format!("v{i}"))?;
        }
        let mut e = 0usize;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.add_edge(format!("e{e}"), format!("v{i}"), format!("v{j}"))?;
                e += 1;
            }
        }
        out.push(g);
    }
    Ok(out)
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub mode: DeckMode,
    pub n_min: usize,
    pub n_max: usize,
    /// Skip graphs with fewer edges (the edge conjecture's hypothesis).
    pub min_edges: usize,
}

impl SweepOptions {
    pub fn new(mode: DeckMode, n_max: usize) -> Self {
        SweepOptions {
            mode,
            n_min: 2,
            n_max,
            min_edges: 0,
        }
    }
}

/// Per-vertex-count tallies of one sweep.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub n: usize,
    pub pairs_checked: usize,
    /// Deck-matched pairs of non-isomorphic graphs (conjecture-relevant;
    /// expected only below the size hypotheses at this scale).
    pub deck_equal_noniso: usize,
    /// Violations of the biconditional "delta exists iff isomorphic".
    pub delta_failures: usize,
    /// Deck-matched pairs whose `Gamma` failed surjectivity both ways.
    pub gamma_blocked: usize,
    pub seconds: f64,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub mode: DeckMode,
    pub rows: Vec<SweepRow>,
    /// Descriptions of deck-matched non-isomorphic pairs.
    pub noniso_pairs: Vec<String>,
    /// Descriptions of biconditional violations (expected empty).
    pub violations: Vec<String>,
}

impl SweepReport {
    pub fn total_delta_failures(&self) -> usize {
        self.rows.iter().map(|r| r.delta_failures).sum()
    }

    pub fn total_deck_equal_noniso(&self) -> usize {
        self.rows.iter().map(|r| r.deck_equal_noniso).sum()
    }
}

enum PairClass {
    Mismatch,
    Blocked { noniso: bool },
    Completed { noniso: bool, violation: Option<String> },
}

/// Exhaustively tests the delta biconditional over all pairs of simple
/// graphs (up to isomorphism) for each vertex count in range. Pairs are
/// sharded across threads; the report is aggregated in sorted order.
pub fn corpus_sweep(opts: &SweepOptions) -> Result<SweepReport, ReconstructionError> {
    if opts.n_max > 7 {
        return Err(ReconstructionError::BudgetExceeded(opts.n_max));
    }
    let mut rows = Vec::new();
    let mut noniso_pairs = Vec::new();
    let mut violations = Vec::new();
    for n in opts.n_min..=opts.n_max {
        let start = Instant::now();
        let graphs: Vec<Graph> = enumerate_simple_graphs(n)?
            .into_iter()
            .filter(|g| g.edge_count() >= opts.min_edges)
            .collect();
        let pairs: Vec<(usize, usize)> = (0..graphs.len())
            .flat_map(|i| (i..graphs.len()).map(move |j| (i, j)))
            .collect();
        let classified: Vec<(usize, usize, PairClass)> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let class = classify_pair(&graphs[i], &graphs[j], opts.mode)?;
                Ok((i, j, class))
            })
            .collect::<Result<_, ReconstructionError>>()?;

        let mut row = SweepRow {
            n,
            pairs_checked: 0,
            deck_equal_noniso: 0,
            delta_failures: 0,
            gamma_blocked: 0,
            seconds: 0.0,
        };
        for (i, j, class) in classified {
            row.pairs_checked += 1;
            let describe = |tag: &str| {
                format!("n={n} mode={} pair #{i} vs #{j}: {tag}", opts.mode)
            };
            match class {
                PairClass::Mismatch => {}
                PairClass::Blocked { noniso } => {
                    row.gamma_blocked += 1;
                    if noniso {
                        row.deck_equal_noniso += 1;
                        noniso_pairs.push(describe("deck-equal, non-isomorphic (gamma blocked)"));
                    }
                }
                PairClass::Completed { noniso, violation } => {
                    if noniso {
                        row.deck_equal_noniso += 1;
                        noniso_pairs.push(describe("deck-equal, non-isomorphic"));
                    }
                    if let Some(v) = violation {
                        row.delta_failures += 1;
                        violations.push(describe(&v));
                    }
                }
            }
        }
        row.seconds = start.elapsed().as_secs_f64();
        rows.push(row);
    }
    Ok(SweepReport {
        mode: opts.mode,
        rows,
        noniso_pairs,
        violations,
    })
}

fn classify_pair(
    g: &Graph,
    h: &Graph,
    mode: DeckMode,
) -> Result<PairClass, ReconstructionError> {
    match reconstruction_check(g, h, mode)? {
        ReconstructionOutcome::DecksMismatch { .. } => Ok(PairClass::Mismatch),
        ReconstructionOutcome::HypothesisViolation { .. } => {
            let noniso = find_isomorphism(g, h).is_none();
            Ok(PairClass::Blocked { noniso })
        }
        ReconstructionOutcome::Case(case) => {
            let iso = find_isomorphism(g, h).is_some();
            let delta = case.delta.is_some();
            let violation = if delta != iso {
                Some(format!(
                    "delta {} but graphs {}",
                    if delta { "exists" } else { "absent" },
                    if iso { "isomorphic" } else { "non-isomorphic" }
                ))
            } else {
                None
            };
            Ok(PairClass::Completed {
                noniso: !iso,
                violation,
            })
        }
    }
}
