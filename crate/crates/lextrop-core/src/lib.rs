//! Exact arithmetic for rank-`k` lexicographic valuations.
//!
//! The library models the value group `R^k` under the lexicographic order
//! (extended by a maximum `Infinity`), Hahn series with exponents in that
//! group, polyhedra cut out by lexicographic halfspaces together with their
//! Euclidean flattenings, tropical hypersurfaces of valuated polynomials,
//! piecewise-linear path certificates between hypersurface points, and
//! metric graphs with rank-`k` edge lengths.
//!
//! All arithmetic is exact (arbitrary-precision rationals); every operation
//! is deterministic, so serialised outputs are directly comparable.

mod elim;
pub mod error;
pub mod hahnseries;
pub mod lexgroup;
pub mod paths;
pub mod polyhedra;
pub mod serial;
pub mod skeleton;
pub mod tropicalize;

pub use error::{Error, Result};
pub use hahnseries::{parse_hahn_series, HahnSeries};
pub use lexgroup::{parse_lex_value, CoefficientField, LexValue, RankContext, Rat};
pub use serial::{
    canonical_json_string, complex_to_json, parse_complex, parse_graph, parse_json, parse_path,
    parse_pieces, parse_point, path_to_json, pieces_to_json, point_to_json, polynomial_from_json,
    polynomial_to_json, report_to_json,
};
pub use paths::{
    build_adjacency, connect, verify_path, verify_path_report, CellAdjacency,
    GeneralizedInterval, OrientedSegment, PLPath, PathDefect, PathSegment,
};
pub use skeleton::{
    edge_valuation, faithful_injectivity_check, marked_edge_valuation, skeleton_path,
    InjectivityReport, MetricEdge, MetricGraph, SkeletonPath, SkeletonPoint, SkeletonSegment,
};
pub use polyhedra::{
    canonical_union, parse_halfspace, parse_linear_constraint, EuclideanPiece, LexComplex,
    LexHalfspace, LexPolyhedron, LinearConstraint, Relation,
};
pub use tropicalize::{
    banerjee_trop, extended_trop_membership, monomial_valuation, monomial_valuation_of_terms,
    trop_hypersurface, trop_membership, trop_project, ExtendedPoint, ValuatedPolynomial,
};
