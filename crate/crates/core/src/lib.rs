//! Four categories of finite multigraphs with loops — all graph morphisms,
//! strict morphisms, and their simple-graph restrictions — with the
//! categorical constructions that make them tick: products, coproducts,
//! equalizers, coequalizers, the image factorization through kernel and
//! cokernel pairs (the Fundamental Morphism Theorem), and the categorical
//! reconstruction check for vertex and edge decks.
//!
//! Everything is deterministic: constructed graphs carry canonical labels,
//! collections iterate in sorted order, and searches try candidates in label
//! order, so identical inputs give bit-identical outputs.

pub mod fmt;
pub mod gen;
pub mod graph;
pub mod iso;
pub mod limits;
pub mod morphism;
pub mod reconstruction;
pub mod text;
pub mod ump;

pub use fmt::{
    check_fmt, fmt_factorize, image_oracle, kernel_pair_oracle, FmtError, FmtFactorization,
    FmtVerdict,
};
pub use gen::{random_graph, random_morphism, random_morphism_from};
pub use graph::{validate_in_category, Category, Graph, GraphError, Incidence, PartId, PartKind};
pub use iso::find_isomorphism;
pub use limits::{
    category_collapse, coequalizer, coproduct, equalizer, product, ConeKind, ConeResult,
    LimitsError,
};
pub use morphism::{compose, Morphism, MorphismError, Violation};
pub use reconstruction::{
    build_gamma, corpus_sweep, enumerate_simple_graphs, make_deck, match_decks,
    reconstruction_check, Deck, DeckCard, DeckMatching, DeckMode, ReconstructionCase,
    ReconstructionError, ReconstructionOutcome, SweepOptions, SweepReport, SweepRow,
};
pub use text::{parse_graph, parse_morphism, print_graph, print_morphism, to_dot, ParseError};
pub use ump::{enumerate_morphisms, verify_universal_property, CompetingCone, UmpReport};
