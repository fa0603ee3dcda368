//! Exact enumeration of lozenge tilings of fern-cored hexagons on the
//! triangular lattice.
//!
//! A fern is a row of lattice triangles of alternating orientation strung
//! along a horizontal lattice line; carving one out of the center of a
//! suitably sized hexagon leaves a region whose tilings are counted by a
//! closed hyperfactorial product. This crate builds all of the regions
//! involved, counts their tilings with three independent exact engines, and
//! machine-verifies the product formulas, condensation recurrences, and
//! ratio identities against those counts over parameter grids.
//!
//! - [`geometry`]: the oblique coordinate system, cells, regions, symmetries,
//!   and the bipartite dual graph.
//! - [`builder`]: hexagons, dented trapezoids, semihexagons, ferns, and the
//!   four fern-cored placements.
//! - [`counting`]: profile-sweep, signed-determinant, and permanent engines.
//! - [`formulas`]: hyperfactorials (integer and half-integer), boxed counts,
//!   cored-hexagon products, and the general fern ratio.
//! - [`verify`]: per-identity checks and the grid suite runner.

// Parity tests read clearest as `% 2` comparisons throughout.
#![allow(clippy::manual_is_multiple_of)]

pub mod builder;
pub mod counting;
pub mod formulas;
pub mod geometry;
pub mod verify;

pub use builder::{
    aux_center, cored_hexagon, fern_base_point, fern_cells, fern_cored_hexagon, fern_envelope,
    fern_hexagon_sides, hexagon, placement_kind, semihexagon, semihexagon_dents,
    trapezoid_with_dents, BuildError, FernSpec, PlacementKind,
};
pub use counting::{
    count_frontier_dp, count_kasteleyn, count_ryser, count_tilings, count_tilings_with, CountError,
    EngineCaps, EngineKind,
};
pub use formulas::{
    cored_count, cored_count_in, fern_cored_count, fern_ratio, hyperfactorial, hyperfactorial_half,
    macmahon_count, semihex_count, semihex_product_form, trapezoid_count, two_lobe_count,
    two_lobe_ratio, two_lobe_ratio_in, FormulaError, PiMonomial, SharedParity,
};
pub use geometry::{
    DualGraph, LatticeVec, Orient, RegionTransform, TransformError, TriRegion, UnitTriangle,
};
pub use verify::{
    check_base_case, check_condensation, check_count_vs_formula, check_envelope, check_g_identity,
    check_macmahon, check_ratio_constancy, check_scalar_identity, check_semihex, envelope_count,
    run_suite, CheckError, GridConfig, SuiteKind, SuiteOutcome, Summary, VerificationReport,
};
