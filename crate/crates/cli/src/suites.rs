//! Exhaustive verification suites over all partitions up to a bound, with
//! machine-readable counterexamples. A clean run has an empty failure list.

use std::fmt;
use std::time::Instant;

use serde::Serialize;
use slopestat::{
    boundary_path, breakpoint_slopes, coprime_slopes_bounded, minimal_k, partitions,
    pn_from_content, pn_poly, rect_corollaries, rect_hook_census, series::content_poly,
    stats_at_slope, verify_hook_theorem, verify_series_identity, Slope, YoungDiagram,
};

use crate::tables::{histogram, Histogram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SuiteName {
    Hooks,
    Rectangle,
    LwFormulas,
    Series,
    Component,
    Equidistribution,
}

impl SuiteName {
    pub const ALL: [SuiteName; 6] = [
        SuiteName::Hooks,
        SuiteName::Rectangle,
        SuiteName::LwFormulas,
        SuiteName::Series,
        SuiteName::Component,
        SuiteName::Equidistribution,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteName::Hooks => "hooks",
            SuiteName::Rectangle => "rectangle",
            SuiteName::LwFormulas => "lw-formulas",
            SuiteName::Series => "series",
            SuiteName::Component => "component",
            SuiteName::Equidistribution => "equidistribution",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for SuiteName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        SuiteName::ALL
            .into_iter()
            .find(|name| name.as_str() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// One failed instance with enough context to re-run it in isolation.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition2: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arm: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leg: Option<i64>,
    pub detail: String,
}

impl Counterexample {
    fn new(detail: impl Into<String>) -> Self {
        Counterexample {
            n: None,
            partition: None,
            partition2: None,
            p: None,
            q: None,
            k: None,
            arm: None,
            leg: None,
            detail: detail.into(),
        }
    }

    fn diagram(mut self, d: &YoungDiagram) -> Self {
        self.partition = Some(d.to_string());
        self
    }

    fn slope(mut self, s: Slope) -> Self {
        self.p = Some(s.p());
        self.q = Some(s.q());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: u64,
    pub failures: Vec<Counterexample>,
    pub wall_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Sweep {
    instances: u64,
    failures: Vec<Counterexample>,
}

impl Sweep {
    fn new() -> Self {
        Sweep {
            instances: 0,
            failures: Vec::new(),
        }
    }

    fn instance(&mut self) {
        self.instances += 1;
    }

    fn fail(&mut self, counterexample: Counterexample) {
        self.failures.push(counterexample);
    }

    fn finish(self, suite: SuiteName, started: Instant) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            instances: self.instances,
            failures: self.failures,
            wall_ms: started.elapsed().as_millis() as u64,
        }
    }
}

/// Runs one named suite over all partitions of area at most `max_n`.
/// `slope_bound` bounds the slope components (rectangle, lw-formulas) or the
/// slope budget beyond n (equidistribution); suites with a fixed slope set
/// ignore it.
pub fn run_suite(name: SuiteName, max_n: i64, slope_bound: Option<i64>) -> SuiteReport {
    match name {
        SuiteName::Hooks => hooks_suite(max_n),
        SuiteName::Rectangle => rectangle_suite(max_n, slope_bound.unwrap_or(4)),
        SuiteName::LwFormulas => lw_formulas_suite(max_n, slope_bound.unwrap_or(5)),
        SuiteName::Series => series_suite(max_n),
        SuiteName::Component => component_suite(max_n),
        SuiteName::Equidistribution => equidistribution_suite(max_n, slope_bound.unwrap_or(4)),
    }
}

/// Hook census returns (k, k+1) and the explicit matching is a bijection,
/// for all hooks with arm, leg <= 10.
fn hooks_suite(max_n: i64) -> SuiteReport {
    let started = Instant::now();
    let mut sweep = Sweep::new();
    for n in 0..=max_n {
        for d in partitions(n) {
            for arm in 0..=10 {
                for leg in 0..=10 {
                    sweep.instance();
                    let tag = || {
                        let mut c = Counterexample::new("").diagram(&d);
                        c.arm = Some(arm);
                        c.leg = Some(leg);
                        c
                    };
                    match d.hook_census(arm, leg) {
                        Ok((inside, complement)) if complement == inside + 1 => {}
                        Ok((inside, complement)) => {
                            let mut c = tag();
                            c.detail = format!(
                                "hook census returned ({inside}, {complement}), expected ({inside}, {})",
                                inside + 1
                            );
                            sweep.fail(c);
                            continue;
                        }
                        Err(e) => {
                            let mut c = tag();
                            c.detail = format!("hook census failed: {e}");
                            sweep.fail(c);
                            continue;
                        }
                    }
                    if let Err(e) = verify_hook_theorem(&d, arm, leg) {
                        let mut c = tag();
                        c.detail = format!("matching failed: {e}");
                        sweep.fail(c);
                    }
                }
            }
        }
    }
    sweep.finish(SuiteName::Hooks, started)
}

/// Rectangle census case split and both corollary identities, for coprime
/// slopes with components at most `slope_bound`, K in {minimal, minimal+1},
/// and all qualifying hooks with arm, leg <= 10.
fn rectangle_suite(max_n: i64, slope_bound: i64) -> SuiteReport {
    let started = Instant::now();
    let mut sweep = Sweep::new();
    let slopes = coprime_slopes_bounded(slope_bound);
    for n in 0..=max_n {
        for d in partitions(n) {
            for &slope in &slopes {
                let k_min = minimal_k(&d, slope);
                for k in [k_min, k_min + 1] {
                    sweep.instance();
                    if let Err(e) = rect_corollaries(&d, slope, k) {
                        let mut c = Counterexample::new(format!("corollaries failed: {e}"))
                            .diagram(&d)
                            .slope(slope);
                        c.k = Some(k);
                        sweep.fail(c);
                    }
                    let (width, height) = (k * slope.p(), k * slope.q());
                    for arm in 0..=10.min(width - 1) {
                        for leg in 0..=10.min(height - 1) {
                            let northwest = leg * slope.p() >= slope.q() * (arm + 1);
                            let southeast = (leg + 1) * slope.p() <= slope.q() * arm;
                            if !northwest && !southeast {
                                continue;
                            }
                            sweep.instance();
                            if let Err(e) = rect_hook_census(&d, slope, k, arm, leg) {
                                let mut c =
                                    Counterexample::new(format!("rectangle census failed: {e}"))
                                        .diagram(&d)
                                        .slope(slope);
                                c.k = Some(k);
                                c.arm = Some(arm);
                                c.leg = Some(leg);
                                sweep.fail(c);
                            }
                        }
                    }
                }
            }
        }
    }
    sweep.finish(SuiteName::Rectangle, started)
}

/// Graph formulas against the definitional statistics, plus the tour-order
/// membership characterization over every box of the rectangle, for coprime
/// slopes with components at most `slope_bound` and K in minimal..minimal+2.
fn lw_formulas_suite(max_n: i64, slope_bound: i64) -> SuiteReport {
    let started = Instant::now();
    let mut sweep = Sweep::new();
    let slopes = coprime_slopes_bounded(slope_bound);
    for n in 0..=max_n {
        for d in partitions(n) {
            for &slope in &slopes {
                let bundle = stats_at_slope(&d, slope);
                let k_min = minimal_k(&d, slope);
                for k in k_min..=k_min + 2 {
                    sweep.instance();
                    let tag = |detail: String| {
                        let mut c = Counterexample::new(detail).diagram(&d).slope(slope);
                        c.k = Some(k);
                        c
                    };
                    let graph = match boundary_path(&d, slope, k) {
                        Ok(path) => path.graph(),
                        Err(e) => {
                            sweep.fail(tag(format!("path construction failed: {e}")));
                            continue;
                        }
                    };
                    if graph.ctot() != bundle.ctot {
                        sweep.fail(tag(format!(
                            "graph ctot {} != definitional ctot {}",
                            graph.ctot(),
                            bundle.ctot
                        )));
                    }
                    if graph.midd() != bundle.midd {
                        sweep.fail(tag(format!(
                            "graph midd {} != definitional midd {}",
                            graph.midd(),
                            bundle.midd
                        )));
                    }
                    let positions = graph.edge_positions();
                    for x in 0..graph.width() {
                        for y in 0..graph.height() {
                            let north_first =
                                positions.n_by_row[y as usize] < positions.w_by_col[x as usize];
                            let inside = d.contains(slopestat::Cell::new(x, y));
                            if north_first != inside {
                                sweep.fail(tag(format!(
                                    "tour order at ({x}, {y}): north edge first = {north_first} \
                                     but membership = {inside}"
                                )));
                            }
                        }
                    }
                }
            }
        }
    }
    sweep.finish(SuiteName::LwFormulas, started)
}

/// The cleared-denominator identities and the content -> edge-polynomial
/// round trip at minimal K, for (p, q) in {(2,1), (3,2), (5,3)}.
fn series_suite(max_n: i64) -> SuiteReport {
    let started = Instant::now();
    let mut sweep = Sweep::new();
    let slopes = [
        Slope::new(2, 1).unwrap(),
        Slope::new(3, 2).unwrap(),
        Slope::new(5, 3).unwrap(),
    ];
    for n in 0..=max_n {
        for d in partitions(n) {
            for &slope in &slopes {
                sweep.instance();
                let k = minimal_k(&d, slope);
                let tag = |detail: String| {
                    let mut c = Counterexample::new(detail).diagram(&d).slope(slope);
                    c.k = Some(k);
                    c
                };
                match verify_series_identity(&d, slope, k) {
                    Ok(true) => {}
                    Ok(false) => sweep.fail(tag("series identities do not hold".to_string())),
                    Err(e) => sweep.fail(tag(format!("series verification failed: {e}"))),
                }
                let expected = boundary_path(&d, slope, k).map(|path| pn_poly(&path.graph()));
                match (
                    pn_from_content(&content_poly(&d, slope), slope, k),
                    expected,
                ) {
                    (Ok(recovered), Ok(expected)) if recovered == expected => {}
                    (Ok(recovered), Ok(expected)) => sweep.fail(tag(format!(
                        "recovered edge polynomial {recovered} != {expected}"
                    ))),
                    (recovered, expected) => sweep.fail(tag(format!(
                        "round trip failed: {recovered:?} vs {expected:?}"
                    ))),
                }
            }
        }
    }
    sweep.finish(SuiteName::Series, started)
}

/// Content-polynomial equality agrees with multigraph equality on all pairs
/// of partitions of equal area, at (p, q) = (3, 2).
fn component_suite(max_n: i64) -> SuiteReport {
    let started = Instant::now();
    let mut sweep = Sweep::new();
    let slope = Slope::new(3, 2).unwrap();
    for n in 0..=max_n {
        let diagrams: Vec<YoungDiagram> = partitions(n).collect();
        for (i, d1) in diagrams.iter().enumerate() {
            for d2 in &diagrams[i..] {
                sweep.instance();
                let k = minimal_k(d1, slope).max(minimal_k(d2, slope));
                let content_eq = content_poly(d1, slope) == content_poly(d2, slope);
                let graph = |d: &YoungDiagram| boundary_path(d, slope, k).map(|p| p.graph());
                let graph_eq = match (graph(d1), graph(d2)) {
                    (Ok(g1), Ok(g2)) => g1.multigraph_eq(&g2),
                    (e1, e2) => {
                        let mut c = Counterexample::new(format!(
                            "graph construction failed: {e1:?} / {e2:?}"
                        ))
                        .diagram(d1)
                        .slope(slope);
                        c.partition2 = Some(d2.to_string());
                        sweep.fail(c);
                        continue;
                    }
                };
                if content_eq != graph_eq {
                    let mut c = Counterexample::new(format!(
                        "content equality ({content_eq}) != multigraph equality ({graph_eq})"
                    ))
                    .diagram(d1)
                    .slope(slope);
                    c.partition2 = Some(d2.to_string());
                    c.k = Some(k);
                    sweep.fail(c);
                }
            }
        }
    }
    sweep.finish(SuiteName::Component, started)
}

fn equidistribution_suite(max_n: i64, budget: i64) -> SuiteReport {
    let started = Instant::now();
    let mut sweep = Sweep::new();
    for n in 0..=max_n {
        let sub = verify_equidistribution(n, budget);
        sweep.instances += sub.instances;
        sweep.failures.extend(sub.failures);
    }
    sweep.finish(SuiteName::Equidistribution, started)
}

fn h_side_histograms(n: i64, slope: Slope) -> (Histogram, Histogram) {
    let mut plus = Histogram::new();
    let mut minus = Histogram::new();
    for d in partitions(n) {
        let bundle = stats_at_slope(&d, slope);
        *plus.entry(bundle.h_plus).or_insert(0) += 1;
        *minus.entry(bundle.h_minus).or_insert(0) += 1;
    }
    (plus, minus)
}

/// Checks that the histogram of h is the same for every coprime slope with
/// n < p + q <= n + budget, and that the h+ and h- histograms coincide at
/// every breakpoint slope of n.
pub fn verify_equidistribution(n: i64, budget: i64) -> SuiteReport {
    assert!(n >= 0 && budget >= 1);
    let started = Instant::now();
    let mut sweep = Sweep::new();

    let slopes: Vec<Slope> = breakpoint_slopes(n + budget)
        .into_iter()
        .filter(|s| s.p() + s.q() > n)
        .collect();
    let mut reference: Option<(Slope, Histogram)> = None;
    for &slope in &slopes {
        sweep.instance();
        let table = match histogram(n, slope) {
            Ok(table) => table,
            Err(e) => {
                let mut c = Counterexample::new(format!("histogram failed: {e}")).slope(slope);
                c.n = Some(n);
                sweep.fail(c);
                continue;
            }
        };
        match &reference {
            None => reference = Some((slope, table)),
            Some((ref_slope, ref_table)) => {
                if table != *ref_table {
                    let mut c = Counterexample::new(format!(
                        "histogram {} at ({slope}) differs from histogram {} at ({ref_slope})",
                        serde_json::to_string(&table).unwrap(),
                        serde_json::to_string(ref_table).unwrap(),
                    ))
                    .slope(slope);
                    c.n = Some(n);
                    sweep.fail(c);
                }
            }
        }
    }

    for slope in breakpoint_slopes(n) {
        sweep.instance();
        let (plus, minus) = h_side_histograms(n, slope);
        if plus != minus {
            let mut c = Counterexample::new(format!(
                "h+ histogram {} differs from h- histogram {}",
                serde_json::to_string(&plus).unwrap(),
                serde_json::to_string(&minus).unwrap(),
            ))
            .slope(slope);
            c.n = Some(n);
            sweep.fail(c);
        }
    }

    sweep.finish(SuiteName::Equidistribution, started)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_bounds() {
        for name in SuiteName::ALL {
            let report = run_suite(name, 4, None);
            assert!(
                report.passed(),
                "suite {name} failed: {:?}",
                report.failures
            );
            assert!(report.instances > 0);
        }
    }

    #[test]
    fn equidistribution_examples() {
        let report = verify_equidistribution(4, 3);
        assert!(report.passed());

        let report = verify_equidistribution(0, 1);
        assert!(report.passed());
    }

    #[test]
    fn suite_names_round_trip() {
        for name in SuiteName::ALL {
            assert_eq!(name.as_str().parse::<SuiteName>(), Ok(name));
        }
        assert!("nonsense".parse::<SuiteName>().is_err());
    }

    #[test]
    fn counterexamples_serialize_compactly() {
        let mut c = Counterexample::new("graph ctot 3 != definitional ctot 2")
            .diagram(&"2,1".parse().unwrap())
            .slope(Slope::new(3, 2).unwrap());
        c.k = Some(2);
        let value = serde_json::to_value(&c).unwrap();
        assert_eq!(value["partition"], "2,1");
        assert_eq!(value["p"], 3);
        assert_eq!(value["k"], 2);
        // unset fields stay out of the payload
        assert!(value.get("arm").is_none());
        assert!(value.get("n").is_none());
    }
}
