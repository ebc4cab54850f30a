//! Boundary lattice paths and their labeled multigraphs.
//!
//! The boundary path of a diagram inside the K p x K q rectangle runs from
//! the southeast corner to the northwest corner along the diagram's boundary.
//! The starting corner is labeled 0, each westward step adds q, and each
//! northward step subtracts p, so the corner (X, Y) carries the label
//! q(P - X) - pY. Identifying equal labels turns the path into a multigraph
//! equipped with the Eulerian tour the path traces.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::diagram::{Cell, YoungDiagram};
use crate::error::Error;
use crate::slope::Slope;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StepDir {
    W,
    N,
}

/// One edge of the boundary path, with the labels of its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Step {
    pub dir: StepDir,
    pub from: i64,
    pub to: i64,
}

/// The boundary path of a diagram inside the K p x K q rectangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryPath {
    slope: Slope,
    k: i64,
    width: i64,
    height: i64,
    steps: Vec<Step>,
}

/// Largest weighted content q x + p y over the boxes of the diagram, with the
/// box attaining it. `None` for the empty diagram.
fn max_weighted_content(d: &YoungDiagram, slope: Slope) -> Option<(i64, Cell)> {
    let (p, q) = (slope.p(), slope.q());
    (0..d.height())
        .map(|y| {
            let x = d.row_len(y) - 1;
            (q * x + p * y, Cell::new(x, y))
        })
        .max_by_key(|&(content, _)| content)
}

/// Smallest K >= 1 such that the diagram fits under the diagonal of the
/// K p x K q rectangle.
pub fn minimal_k(d: &YoungDiagram, slope: Slope) -> i64 {
    match max_weighted_content(d, slope) {
        None => 1,
        Some((max_content, _)) => {
            let pq = slope.p() * slope.q();
            // smallest K with K*p*q - p - q >= max_content
            let needed = max_content + slope.p() + slope.q();
            ((needed + pq - 1) / pq).max(1)
        }
    }
}

/// Checks that every box (x, y) of the diagram satisfies
/// q x + p y <= K p q - p - q, naming a violating box otherwise.
pub fn check_fit(d: &YoungDiagram, slope: Slope, k: i64) -> Result<(), Error> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!(
            "K must be at least 1, got {k}"
        )));
    }
    if let Some((max_content, cell)) = max_weighted_content(d, slope) {
        if max_content > k * slope.p() * slope.q() - slope.p() - slope.q() {
            return Err(Error::DoesNotFit {
                cell,
                p: slope.p(),
                q: slope.q(),
                k,
            });
        }
    }
    Ok(())
}

/// Walks the boundary of the diagram from (K p, 0) to (0, K q), one row at a
/// time: westward to the end of the row, then one step north.
///
/// ```
/// use slopestat::{boundary_path, Slope, YoungDiagram};
///
/// let d: YoungDiagram = "1".parse().unwrap();
/// let path = boundary_path(&d, Slope::new(3, 2).unwrap(), 1).unwrap();
/// assert_eq!(path.labels(), vec![0, 2, 4, 1, 3, 0]);
/// ```
pub fn boundary_path(d: &YoungDiagram, slope: Slope, k: i64) -> Result<BoundaryPath, Error> {
    check_fit(d, slope, k)?;
    let (p, q) = (slope.p(), slope.q());
    let (width, height) = (k * p, k * q);

    // labels come from the closed form q(P - X) - pY; the running sums
    // (+q per west step, -p per north step) must agree at every corner
    let corner_label = |x: i64, y: i64| q * (width - x) - p * y;

    let mut steps = Vec::with_capacity((width + height) as usize);
    let mut x = width;
    let mut running = 0;
    for y in 0..height {
        let row_end = d.row_len(y);
        while x > row_end {
            let from = corner_label(x, y);
            steps.push(Step {
                dir: StepDir::W,
                from,
                to: corner_label(x - 1, y),
            });
            debug_assert_eq!(from, running);
            running += q;
            x -= 1;
        }
        let from = corner_label(x, y);
        steps.push(Step {
            dir: StepDir::N,
            from,
            to: corner_label(x, y + 1),
        });
        debug_assert_eq!(from, running);
        running -= p;
    }
    // the fit condition keeps the top rows of the rectangle empty, so the
    // west steps are exhausted before the path reaches the northwest corner
    debug_assert_eq!(x, 0);
    debug_assert_eq!(running, 0);

    Ok(BoundaryPath {
        slope,
        k,
        width,
        height,
        steps,
    })
}

impl BoundaryPath {
    pub fn slope(&self) -> Slope {
        self.slope
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn width(&self) -> i64 {
        self.width
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The vertex labels along the path, starting and ending at 0.
    pub fn labels(&self) -> Vec<i64> {
        std::iter::once(0)
            .chain(self.steps.iter().map(|s| s.to))
            .collect()
    }

    /// Aggregates the path into the labeled multigraph, keeping the tour.
    pub fn graph(&self) -> BoundaryGraph {
        let mut vertices = BTreeSet::new();
        let mut w_in = BTreeMap::new();
        let mut n_in = BTreeMap::new();
        let mut w_out = BTreeMap::new();
        let mut n_out = BTreeMap::new();
        vertices.insert(0);
        for step in &self.steps {
            vertices.insert(step.from);
            vertices.insert(step.to);
            let (ins, outs) = match step.dir {
                StepDir::W => (&mut w_in, &mut w_out),
                StepDir::N => (&mut n_in, &mut n_out),
            };
            *ins.entry(step.to).or_insert(0) += 1;
            *outs.entry(step.from).or_insert(0) += 1;
        }
        BoundaryGraph {
            slope: self.slope,
            k: self.k,
            width: self.width,
            height: self.height,
            vertices,
            w_in,
            n_in,
            w_out,
            n_out,
            tour: self.steps.clone(),
        }
    }
}

/// The boundary multigraph: integer-labeled vertices, westward and northward
/// edge multiplicities, and the Eulerian tour inherited from the path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryGraph {
    #[serde(skip)]
    slope: Slope,
    #[serde(skip)]
    k: i64,
    #[serde(skip)]
    width: i64,
    #[serde(skip)]
    height: i64,
    vertices: BTreeSet<i64>,
    w_in: BTreeMap<i64, i64>,
    n_in: BTreeMap<i64, i64>,
    #[serde(skip)]
    w_out: BTreeMap<i64, i64>,
    #[serde(skip)]
    n_out: BTreeMap<i64, i64>,
    tour: Vec<Step>,
}

impl BoundaryGraph {
    pub fn slope(&self) -> Slope {
        self.slope
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn width(&self) -> i64 {
        self.width
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn vertices(&self) -> &BTreeSet<i64> {
        &self.vertices
    }

    pub fn tour(&self) -> &[Step] {
        &self.tour
    }

    pub fn w_in(&self, v: i64) -> i64 {
        self.w_in.get(&v).copied().unwrap_or(0)
    }

    pub fn n_in(&self, v: i64) -> i64 {
        self.n_in.get(&v).copied().unwrap_or(0)
    }

    pub fn w_out(&self, v: i64) -> i64 {
        self.w_out.get(&v).copied().unwrap_or(0)
    }

    pub fn n_out(&self, v: i64) -> i64 {
        self.n_out.get(&v).copied().unwrap_or(0)
    }

    pub fn w_in_map(&self) -> &BTreeMap<i64, i64> {
        &self.w_in
    }

    pub fn n_in_map(&self) -> &BTreeMap<i64, i64> {
        &self.n_in
    }

    pub fn w_out_map(&self) -> &BTreeMap<i64, i64> {
        &self.w_out
    }

    pub fn n_out_map(&self) -> &BTreeMap<i64, i64> {
        &self.n_out
    }

    /// ctot evaluated on the graph:
    /// sum over vertices of |W_in(v)| |N_in(v)|, minus K, plus |N_in(0)|.
    pub fn ctot(&self) -> i64 {
        let paired: i64 = self.w_in.iter().map(|(&v, &w)| w * self.n_in(v)).sum();
        paired - self.k + self.n_in(0)
    }

    /// midd evaluated on the graph: the sub-diagonal box count minus
    /// sum over ordered vertex pairs v <= w of |W_in(v)| |N_in(w)|.
    pub fn midd(&self) -> i64 {
        let crossing: i64 = self
            .w_in
            .iter()
            .map(|(&v, &wc)| wc * self.n_in.range(v..).map(|(_, &nc)| nc).sum::<i64>())
            .sum();
        count_below_diagonal(self.slope, self.k) - crossing
    }

    /// Equality as labeled multigraphs: same vertex set and the same four
    /// multiplicity maps. The tour is extra structure and is ignored.
    pub fn multigraph_eq(&self, other: &BoundaryGraph) -> bool {
        self.vertices == other.vertices
            && self.w_in == other.w_in
            && self.n_in == other.n_in
            && self.w_out == other.w_out
            && self.n_out == other.n_out
    }

    /// Tour positions of the unique northward edge of each row and westward
    /// edge of each column. The path visits rows bottom-up and columns
    /// east-to-west.
    pub fn edge_positions(&self) -> EdgePositions {
        let mut n_by_row = vec![0usize; self.height as usize];
        let mut w_by_col = vec![0usize; self.width as usize];
        let mut rows_seen = 0usize;
        let mut cols_seen = 0usize;
        for (idx, step) in self.tour.iter().enumerate() {
            match step.dir {
                StepDir::N => {
                    n_by_row[rows_seen] = idx;
                    rows_seen += 1;
                }
                StepDir::W => {
                    w_by_col[self.width as usize - 1 - cols_seen] = idx;
                    cols_seen += 1;
                }
            }
        }
        debug_assert_eq!(rows_seen, self.height as usize);
        debug_assert_eq!(cols_seen, self.width as usize);
        EdgePositions { n_by_row, w_by_col }
    }

    /// Graphviz rendering: one node per vertex in label order, one edge per
    /// tour step, westward edges solid and northward edges dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph boundary_graph {\n  rankdir=LR;\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for step in &self.tour {
            let style = match step.dir {
                StepDir::W => "solid",
                StepDir::N => "dashed",
            };
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [style={style}];\n",
                step.from, step.to
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Tour indices of the per-row northward edges and per-column westward edges.
pub struct EdgePositions {
    pub n_by_row: Vec<usize>,
    pub w_by_col: Vec<usize>,
}

/// Number of boxes of the K p x K q rectangle on or below the shifted
/// diagonal q x + p y <= K p q - p - q.
pub fn count_below_diagonal(slope: Slope, k: i64) -> i64 {
    assert!(k >= 1, "K must be at least 1");
    let (p, q) = (slope.p(), slope.q());
    let (width, height) = (k * p, k * q);
    let lim = k * p * q - p - q;
    let mut total = 0;
    for y in 0..height {
        let rem = lim - p * y;
        if rem < 0 {
            break;
        }
        total += width.min(rem / q + 1);
    }
    assert_eq!(
        total,
        (width * height - width - height + k) / 2,
        "direct count disagrees with the closed form"
    );
    total
}

fn require_in_rectangle(c: Cell, width: i64, height: i64) -> Result<(), Error> {
    if c.x < 0 || c.y < 0 || c.x >= width || c.y >= height {
        return Err(Error::OutsideRectangle {
            cell: c,
            width,
            height,
        });
    }
    Ok(())
}

/// Labels (v, w) entered by the westward edge of the box's column and the
/// northward edge of its row. For a box of the diagram
/// v = w + (a+1) q - l p, and for a box of the rectangle complement
/// w = v + a q - (l+1) p.
pub fn box_edge_vertices(
    d: &YoungDiagram,
    slope: Slope,
    k: i64,
    c: Cell,
) -> Result<(i64, i64), Error> {
    check_fit(d, slope, k)?;
    let (p, q) = (slope.p(), slope.q());
    let (width, height) = (k * p, k * q);
    require_in_rectangle(c, width, height)?;

    let v = q * (width - c.x) - p * d.col_height(c.x);
    let w = q * (width - d.row_len(c.y)) - p * (c.y + 1);

    if d.contains(c) {
        let hook = d.arm_leg_inside(c).expect("box is inside");
        assert_eq!(
            v,
            w + (hook.arm + 1) * q - hook.leg * p,
            "edge labels of {c} contradict the inside identity"
        );
    } else {
        let hook = d.arm_leg_complement(c).expect("box is in the complement");
        assert_eq!(
            w,
            v + hook.arm * q - (hook.leg + 1) * p,
            "edge labels of {c} contradict the complement identity"
        );
    }
    Ok((v, w))
}

/// Whether the northward edge of the box's row precedes the westward edge of
/// its column in the Eulerian tour. This happens exactly for boxes of the
/// diagram; the graph must have been built for `d`.
pub fn tour_order_inside(g: &BoundaryGraph, d: &YoungDiagram, c: Cell) -> Result<bool, Error> {
    require_in_rectangle(c, g.width(), g.height())?;
    let positions = g.edge_positions();
    let north_first = positions.n_by_row[c.y as usize] < positions.w_by_col[c.x as usize];
    assert_eq!(
        north_first,
        d.contains(c),
        "tour order at {c} contradicts diagram membership"
    );
    Ok(north_first)
}
