//! Exact combinatorial analysis of complex line arrangements.
//!
//! Given lines in the projective plane with rational coefficients, this crate
//! computes the multiple-point structure, graphs of Fan type, local
//! components of the first resonance variety, and decides whether some
//! decone splits into two transversal subarrangements.

pub mod error;
pub mod fan;
pub mod geom;
pub mod gpp;
pub mod incidence;
pub mod linalg;
pub mod random;
pub mod resonance;

pub use error::{Error, Result};
pub use fan::{
    bridge_edges, build_fan_graph, enumerate_fan_graphs, fan_graph_count, is_connected,
    lemma_multipt_witness, norepeats_witness, FanEdge, FanEnumeration, FanGraph, NorepeatsWitness,
    OrderingPolicy,
};
pub use geom::{
    intersect, normalize_line, point_on_line, projectivize, restrict_to_affine, AffLine, AffPoint,
    ProjLine, ProjPoint, Rational,
};
pub use gpp::{
    gpp_oracle, gpp_witness_at, has_gpp_decone, lemma_pipeline_report, sharing_graph, GppWitness,
    LemmaReport, SharingGraph,
};
pub use incidence::{
    build_incidence, check_oka_sakamoto_hypothesis, cone, decone, is_general_position_partition,
    multiple_points, AffArrangement, CrossPairDefect, IncidenceData, PointRecord, ProjArrangement,
    TransversalityReport,
};
pub use linalg::{intersection_dim, span_dim, span_sum, SubspaceBasis};
pub use resonance::{
    find_span_disjoint_bipartition, local_components, product_obstruction, LocalComponent,
    ResonanceEvidence, SpanBipartition, Verdict,
};
