//! Weighted-content generating polynomials and the identities tying them to
//! the boundary multigraph.
//!
//! The content polynomial of a diagram collects t^(q x + p y) over its boxes.
//! Summing the contents of the half-rows west of each northward boundary edge
//! and subtracting the half-strip left of the quadrant yields, after clearing
//! denominators, the finite identity
//!
//!   (1 - t^p)(1 - t^q) C(t) = (1 - t^(Kpq)) - t^(Kpq-p) (1 - t^p) P_N(1/t)
//!
//! and the analogous identity with p and q exchanged for P_W. Both are
//! invertible, so the content polynomial and the multigraph determine each
//! other.

use crate::boundary::{boundary_path, minimal_k, BoundaryGraph};
use crate::diagram::YoungDiagram;
use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::slope::Slope;

/// Sum of t^(q x + p y) over the boxes of the diagram.
pub fn content_poly(d: &YoungDiagram, slope: Slope) -> LaurentPoly {
    let (p, q) = (slope.p(), slope.q());
    LaurentPoly::from_terms(d.cells().map(|c| (q * c.x + p * c.y, 1)))
}

/// Sum of |N_in(v)| t^v over the vertices of the graph.
pub fn pn_poly(g: &BoundaryGraph) -> LaurentPoly {
    LaurentPoly::from_terms(g.n_in_map().iter().map(|(&v, &c)| (v, c)))
}

/// Sum of |W_out(v)| t^v over the vertices of the graph.
pub fn pw_poly(g: &BoundaryGraph) -> LaurentPoly {
    LaurentPoly::from_terms(g.w_out_map().iter().map(|(&v, &c)| (v, c)))
}

fn one_minus_power(exp: i64) -> LaurentPoly {
    LaurentPoly::from_terms([(0, 1), (exp, -1)])
}

/// Left-hand side (1 - t^p)(1 - t^q) C(t) shared by both identities.
fn cleared_content(content: &LaurentPoly, slope: Slope) -> LaurentPoly {
    &(&one_minus_power(slope.p()) * &one_minus_power(slope.q())) * content
}

/// Right-hand side (1 - t^(Kpq)) - t^(Kpq-e) (1 - t^e) P(1/t), where `e` is
/// p for the northward polynomial and q for the westward one.
fn cleared_graph_side(poly: &LaurentPoly, exp: i64, kpq: i64) -> LaurentPoly {
    let shifted = &poly.invert_variable().shifted(kpq - exp) * &one_minus_power(exp);
    &one_minus_power(kpq) - &shifted
}

/// Checks both cleared-denominator identities coefficient-wise.
pub fn verify_series_identity(d: &YoungDiagram, slope: Slope, k: i64) -> Result<bool, Error> {
    let g = boundary_path(d, slope, k)?.graph();
    let kpq = k * slope.p() * slope.q();
    let lhs = cleared_content(&content_poly(d, slope), slope);
    let rhs_n = cleared_graph_side(&pn_poly(&g), slope.p(), kpq);
    let rhs_w = cleared_graph_side(&pw_poly(&g), slope.q(), kpq);
    Ok(lhs == rhs_n && lhs == rhs_w)
}

/// Inverts the northward identity: recovers P_N from a content polynomial.
/// The division by (1 - t^p) must be exact; a remainder signals that the
/// input is not the content polynomial of a diagram fitting (p, q, K).
pub fn pn_from_content(content: &LaurentPoly, slope: Slope, k: i64) -> Result<LaurentPoly, Error> {
    let kpq = k * slope.p() * slope.q();
    let numer = &one_minus_power(kpq) - &cleared_content(content, slope);
    let pn_inverted = numer
        .shifted(-(kpq - slope.p()))
        .div_exact(&one_minus_power(slope.p()))?;
    Ok(pn_inverted.invert_variable())
}

/// Whether two diagrams have the same weighted content at this slope. This
/// is equivalent to their boundary multigraphs coinciding at a common K, and
/// the equivalence is asserted.
pub fn same_component(d1: &YoungDiagram, d2: &YoungDiagram, slope: Slope) -> bool {
    let k = minimal_k(d1, slope).max(minimal_k(d2, slope));
    let content_eq = content_poly(d1, slope) == content_poly(d2, slope);
    let graph = |d: &YoungDiagram| {
        boundary_path(d, slope, k)
            .expect("diagram fits at its minimal K")
            .graph()
    };
    let graph_eq = graph(d1).multigraph_eq(&graph(d2));
    assert_eq!(
        content_eq, graph_eq,
        "content equality and multigraph equality disagree for {d1} and {d2} at ({slope})"
    );
    content_eq
}
