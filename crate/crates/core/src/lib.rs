//! Exact-arithmetic library for slope statistics on Young diagrams.
//!
//! The crate computes the statistics h, h+, h-, c+, c-, ctot, and midd of a
//! Young diagram at a coprime slope (p, q) straight from their definitions,
//! canonicalizes arrow classes to realize the inside-versus-complement hook
//! census bijectively, builds the labeled boundary multigraph with its
//! Eulerian tour, evaluates the Loehr-Warrington formulas for ctot and midd
//! on that graph, and checks the weighted-content generating identities.
//! Everything is integer-exact: slope comparisons are cross-multiplied and
//! overflow aborts rather than wraps.
//!
//! All types are immutable values and all operations are pure functions, so
//! sharing across threads is safe and enumeration sweeps parallelize freely.

pub mod arrows;
pub mod boundary;
pub mod diagram;
pub mod error;
pub mod laurent;
pub mod series;
pub mod slope;
pub mod stats;

pub use arrows::{
    canonical_inside, canonical_outside, is_escaping, rect_corollaries, rect_hook_census,
    verify_hook_theorem, Arrow, CanonicalClass, CorollaryReport, MatchPair, MatchingReport,
    RectReport,
};
pub use boundary::{
    boundary_path, box_edge_vertices, check_fit, count_below_diagonal, minimal_k,
    tour_order_inside, BoundaryGraph, BoundaryPath, Step, StepDir,
};
pub use diagram::{partitions, Cell, HookPair, Partitions, YoungDiagram};
pub use error::Error;
pub use laurent::LaurentPoly;
pub use series::{
    content_poly, pn_from_content, pn_poly, pw_poly, same_component, verify_series_identity,
};
pub use slope::{breakpoint_slopes, coprime_slopes_bounded, Slope};
pub use stats::{classify, stats_at_slope, HookClass, StatBundle};

#[cfg(test)]
mod thread_safety {
    use super::*;

    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_can_be_shared_across_threads() {
        assert_send_sync::<YoungDiagram>();
        assert_send_sync::<Slope>();
        assert_send_sync::<StatBundle>();
        assert_send_sync::<BoundaryGraph>();
        assert_send_sync::<LaurentPoly>();
        assert_send_sync::<Partitions>();
        assert_send_sync::<Error>();
    }
}
