//! Acceptance suite: pinned reference values plus the exhaustive sweeps,
//! each with its runtime budget. The harness prints one pass/fail line per
//! check.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use slopestat::arrows::escaping_arrow;
use slopestat::{
    boundary_path, box_edge_vertices, canonical_outside, coprime_slopes_bounded, minimal_k,
    partitions, rect_corollaries, rect_hook_census, stats_at_slope, verify_hook_theorem, Cell,
    HookPair, Slope, YoungDiagram,
};
use slopestat_cli::suites::{run_suite, verify_equidistribution, SuiteName};
use slopestat_cli::tables::{histogram, Histogram};

fn diagram(s: &str) -> YoungDiagram {
    s.parse().unwrap()
}

fn slope(p: i64, q: i64) -> Slope {
    Slope::new(p, q).unwrap()
}

fn assert_within(elapsed: Duration, budget_ms: u64, what: &str) {
    assert!(
        elapsed <= Duration::from_millis(budget_ms),
        "{what} took {elapsed:?}, budget {budget_ms} ms"
    );
}

#[test]
fn acceptance_01_reference_multigraph_multiplicities() {
    // warm up so the timed run measures the computation alone
    let d = diagram("8,8,6,6,2,2");
    let s = slope(3, 2);
    let _ = boundary_path(&d, s, 4).unwrap().graph();

    let started = Instant::now();
    let g = boundary_path(&d, s, 4).unwrap().graph();
    let elapsed = started.elapsed();

    assert_eq!(
        g.vertices().iter().copied().collect::<Vec<i64>>(),
        vec![0, 2, 3, 4, 5, 6, 8]
    );
    assert_eq!(
        g.w_in_map(),
        &BTreeMap::from([(2, 2), (4, 4), (6, 4), (8, 2)])
    );
    assert_eq!(
        g.n_in_map(),
        &BTreeMap::from([(0, 2), (2, 2), (3, 2), (5, 2)])
    );
    assert_within(elapsed, 1, "building the graph");
}

#[test]
fn acceptance_02_box_edge_vertex_labels() {
    let d = diagram("8,8,6,6,2,2");
    let s = slope(3, 2);
    let _ = box_edge_vertices(&d, s, 4, Cell::new(2, 1)).unwrap();

    let started = Instant::now();
    let inside = box_edge_vertices(&d, s, 4, Cell::new(2, 1)).unwrap();
    let outside = box_edge_vertices(&d, s, 4, Cell::new(7, 5)).unwrap();
    let elapsed = started.elapsed();

    assert_eq!(inside, (8, 2));
    assert_eq!(8, 2 + 6 * 2 - 2 * 3);
    assert_eq!(outside, (4, 2));
    assert_eq!(2, 4 + 5 * 2 - 4 * 3);
    assert_within(elapsed, 1, "edge-vertex lookups");
}

#[test]
fn acceptance_03_escaping_class_inside_rectangle() {
    let d = diagram("7,7,7,7,3,3,3,3,3");
    let s = slope(3, 2);
    assert_eq!(minimal_k(&d, s), 6);
    let _ = canonical_outside(&d, escaping_arrow(&d, HookPair::new(4, 4))).unwrap();

    let started = Instant::now();
    let escape_box = canonical_outside(&d, escaping_arrow(&d, HookPair::new(4, 4))).unwrap();
    let report = rect_hook_census(&d, s, 6, 4, 4).unwrap();
    let elapsed = started.elapsed();

    assert_eq!(escape_box, Cell::new(7, 4));
    assert_eq!(report.case, 2);
    assert_eq!((report.inside_count, report.complement_count), (0, 1));
    assert_eq!(report.complement_cells, vec![Cell::new(7, 4)]);
    assert_within(elapsed, 10, "escaping class and rectangle census");
}

#[test]
fn acceptance_04_graph_formulas_equal_definitional_statistics() {
    let started = Instant::now();
    let slopes = coprime_slopes_bounded(5);
    for n in 0..=10 {
        for d in partitions(n) {
            for &s in &slopes {
                let bundle = stats_at_slope(&d, s);
                let k_min = minimal_k(&d, s);
                for k in k_min..=k_min + 2 {
                    let g = boundary_path(&d, s, k).unwrap().graph();
                    assert_eq!(g.ctot(), bundle.ctot, "ctot of {d} at ({s}), K = {k}");
                    assert_eq!(g.midd(), bundle.midd, "midd of {d} at ({s}), K = {k}");
                }
            }
        }
    }
    assert_within(started.elapsed(), 60_000, "formula sweep");
}

#[test]
fn acceptance_05_hook_censuses_and_matchings() {
    let started = Instant::now();
    for n in 0..=10 {
        for d in partitions(n) {
            for arm in 0..=10 {
                for leg in 0..=10 {
                    let (inside, complement) = d.hook_census(arm, leg).unwrap();
                    assert_eq!(complement, inside + 1, "{d} at ({arm}, {leg})");
                    let report = verify_hook_theorem(&d, arm, leg)
                        .unwrap_or_else(|e| panic!("matching on {d} at ({arm}, {leg}): {e}"));
                    assert_eq!(report.inside_count, inside);
                    assert_eq!(report.pairs.len() as i64, complement);
                }
            }
        }
    }
    assert_within(started.elapsed(), 60_000, "hook sweep");
}

#[test]
fn acceptance_06_rectangle_censuses_and_corollaries() {
    let started = Instant::now();
    let slopes = coprime_slopes_bounded(4);
    for n in 0..=8 {
        for d in partitions(n) {
            for &s in &slopes {
                let k_min = minimal_k(&d, s);
                for k in [k_min, k_min + 1] {
                    rect_corollaries(&d, s, k)
                        .unwrap_or_else(|e| panic!("corollaries on {d} at ({s}), K = {k}: {e}"));
                    let (width, height) = (k * s.p(), k * s.q());
                    for arm in 0..=10.min(width - 1) {
                        for leg in 0..=10.min(height - 1) {
                            let northwest = leg * s.p() >= s.q() * (arm + 1);
                            let southeast = (leg + 1) * s.p() <= s.q() * arm;
                            if !northwest && !southeast {
                                continue;
                            }
                            let report = rect_hook_census(&d, s, k, arm, leg).unwrap_or_else(|e| {
                                panic!("census on {d} at ({s}), K = {k}, hook ({arm}, {leg}): {e}")
                            });
                            let expected = if report.case == 1 {
                                report.complement_count
                            } else {
                                report.complement_count - 1
                            };
                            assert_eq!(report.inside_count, expected);
                        }
                    }
                }
            }
        }
    }
    assert_within(started.elapsed(), 120_000, "rectangle sweep");
}

#[test]
fn acceptance_07_equidistribution_across_slopes() {
    let started = Instant::now();
    for n in 0..=10 {
        let report = verify_equidistribution(n, 4);
        assert!(report.passed(), "n = {n}: {:?}", report.failures);
    }

    // the common histogram at n = 4, derived by hand
    let expected = Histogram::from([(1, 1), (2, 2), (3, 1), (4, 1)]);
    for s in [
        slope(4, 1),
        slope(1, 4),
        slope(2, 3),
        slope(3, 2),
        slope(5, 1),
        slope(1, 7),
    ] {
        assert_eq!(histogram(4, s).unwrap(), expected, "histogram at ({s})");
    }
    assert_within(started.elapsed(), 30_000, "equidistribution sweep");

    // h+ and h- are equidistributed at every breakpoint slope
    for n in 0..=9 {
        let report = verify_equidistribution(n, 1);
        assert!(report.passed(), "n = {n}: {:?}", report.failures);
    }
}

#[test]
fn acceptance_08_series_identities_and_round_trip() {
    let started = Instant::now();
    let report = run_suite(SuiteName::Series, 8, None);
    assert!(report.passed(), "{:?}", report.failures);
    assert_eq!(report.instances, 3 * 67); // three slopes, 67 partitions of n <= 8
    assert_within(started.elapsed(), 30_000, "series sweep");
}

#[test]
fn acceptance_09_content_equality_is_multigraph_equality() {
    let started = Instant::now();
    let report = run_suite(SuiteName::Component, 9, None);
    assert!(report.passed(), "{:?}", report.failures);
    assert_within(started.elapsed(), 60_000, "component sweep");
}

#[test]
fn acceptance_10_tour_order_characterizes_membership() {
    let started = Instant::now();
    let slopes = coprime_slopes_bounded(5);
    for n in 0..=10 {
        for d in partitions(n) {
            for &s in &slopes {
                let k_min = minimal_k(&d, s);
                for k in k_min..=k_min + 2 {
                    let g = boundary_path(&d, s, k).unwrap().graph();
                    let positions = g.edge_positions();
                    for x in 0..g.width() {
                        for y in 0..g.height() {
                            let north_first =
                                positions.n_by_row[y as usize] < positions.w_by_col[x as usize];
                            assert_eq!(
                                north_first,
                                d.contains(Cell::new(x, y)),
                                "{d} at ({s}), K = {k}, box ({x}, {y})"
                            );
                        }
                    }
                }
            }
        }
    }
    assert_within(started.elapsed(), 60_000, "tour-order sweep");
}
