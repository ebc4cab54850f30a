//! Arrow classes between the complement of a diagram and its extended inside.
//!
//! An arrow points from a box of the complement (taken inside the
//! non-negative quadrant) to a box that is either inside the diagram or has a
//! negative coordinate. Arrows differing by unit translations that keep both
//! endpoints valid are equivalent. A class is escaping when some
//! representative's head leaves the quadrant; for northwest arrows that means
//! head.x < 0, since heads of northwest arrows never have negative y.
//!
//! Each northwest class is canonicalized two ways: pushed north/west it lands
//! on a box of the diagram (or escapes), pushed south/east it lands on a box
//! of the complement. Matching the two canonical forms realizes the
//! inside-versus-complement hook census bijectively.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::boundary::count_below_diagonal;
use crate::diagram::{Cell, HookPair, YoungDiagram};
use crate::error::Error;
use crate::slope::Slope;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub tail: Cell,
    pub head: Cell,
}

impl Arrow {
    pub fn new(tail: Cell, head: Cell) -> Self {
        Arrow { tail, head }
    }

    /// Displacement (dx, dy) from tail to head.
    pub fn vector(&self) -> (i64, i64) {
        (self.head.x - self.tail.x, self.head.y - self.tail.y)
    }

    /// The hook pair (a, l) determined by the vector (-a-1, l) of a
    /// northwest arrow.
    pub fn hook(&self) -> HookPair {
        let (dx, dy) = self.vector();
        debug_assert!(dx <= -1 && dy >= 0, "hook is defined for northwest arrows");
        HookPair::new(-dx - 1, dy)
    }

    fn shifted(&self, dx: i64, dy: i64) -> Arrow {
        Arrow {
            tail: Cell::new(self.tail.x + dx, self.tail.y + dy),
            head: Cell::new(self.head.x + dx, self.head.y + dy),
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.tail, self.head)
    }
}

fn tail_ok(d: &YoungDiagram, c: Cell) -> bool {
    d.in_complement(c)
}

fn head_ok(d: &YoungDiagram, c: Cell) -> bool {
    c.x < 0 || c.y < 0 || d.contains(c)
}

fn arrow_ok(d: &YoungDiagram, arrow: Arrow) -> bool {
    tail_ok(d, arrow.tail) && head_ok(d, arrow.head)
}

fn validate_northwest(d: &YoungDiagram, arrow: Arrow) -> Result<(), Error> {
    if !tail_ok(d, arrow.tail) {
        return Err(Error::InvalidArrow {
            arrow,
            reason: "tail must lie in the complement of the diagram",
        });
    }
    if !head_ok(d, arrow.head) {
        return Err(Error::InvalidArrow {
            arrow,
            reason: "head must lie in the diagram or off the quadrant",
        });
    }
    if !(arrow.head.x < arrow.tail.x && arrow.head.y >= arrow.tail.y) {
        return Err(Error::InvalidArrow {
            arrow,
            reason: "arrow must point northwest",
        });
    }
    Ok(())
}

/// Canonical form of a northwest arrow class after pushing north, then west,
/// to a fixpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalClass {
    /// The class of the unique extremal arrow sitting over this diagram box.
    Inside(Cell),
    /// The class contains an arrow whose head is outside the quadrant.
    Escaping,
}

/// Pushes the arrow north then west as far as validity allows. A non-escaping
/// fixpoint `(r, s) -> (k, m)` corresponds to the diagram box `(k, s)`.
pub fn canonical_inside(d: &YoungDiagram, arrow: Arrow) -> Result<CanonicalClass, Error> {
    validate_northwest(d, arrow)?;
    let mut arr = arrow;
    loop {
        if arr.head.x < 0 {
            return Ok(CanonicalClass::Escaping);
        }
        let mut moved = false;
        while arrow_ok(d, arr.shifted(0, 1)) {
            arr = arr.shifted(0, 1);
            moved = true;
        }
        while arrow_ok(d, arr.shifted(-1, 0)) {
            arr = arr.shifted(-1, 0);
            moved = true;
        }
        if !moved {
            let cell = Cell::new(arr.head.x, arr.tail.y);
            debug_assert!(d.contains(cell));
            return Ok(CanonicalClass::Inside(cell));
        }
    }
}

/// Pushes the arrow south then east as far as validity allows. The fixpoint
/// `(r, s) -> (k, m)` corresponds to the complement box `(r, m)`; every
/// northwest class, escaping or not, has one.
pub fn canonical_outside(d: &YoungDiagram, arrow: Arrow) -> Result<Cell, Error> {
    validate_northwest(d, arrow)?;
    let mut arr = arrow;
    loop {
        let mut moved = false;
        while arrow_ok(d, arr.shifted(0, -1)) {
            arr = arr.shifted(0, -1);
            moved = true;
        }
        while arrow_ok(d, arr.shifted(1, 0)) {
            arr = arr.shifted(1, 0);
            moved = true;
        }
        if !moved {
            let cell = Cell::new(arr.tail.x, arr.head.y);
            debug_assert!(d.in_complement(cell));
            return Ok(cell);
        }
    }
}

pub fn is_escaping(d: &YoungDiagram, arrow: Arrow) -> Result<bool, Error> {
    Ok(matches!(
        canonical_inside(d, arrow)?,
        CanonicalClass::Escaping
    ))
}

/// The north/west extremal arrow whose class corresponds to a diagram box.
pub fn arrow_for_diagram_cell(d: &YoungDiagram, c: Cell) -> Result<Arrow, Error> {
    let hook = d.arm_leg_inside(c)?;
    Ok(Arrow::new(
        Cell::new(c.x + hook.arm + 1, c.y),
        Cell::new(c.x, c.y + hook.leg),
    ))
}

/// The south/east extremal arrow whose class corresponds to a complement box.
pub fn arrow_for_complement_cell(d: &YoungDiagram, c: Cell) -> Result<Arrow, Error> {
    let hook = d.arm_leg_complement(c)?;
    Ok(Arrow::new(
        Cell::new(c.x, c.y - hook.leg),
        Cell::new(c.x - hook.arm - 1, c.y),
    ))
}

/// A representative of the unique escaping class with vector (-a-1, l).
pub fn escaping_arrow(d: &YoungDiagram, hook: HookPair) -> Arrow {
    debug_assert!(hook.arm >= 0 && hook.leg >= 0);
    let rim = d.col_height(hook.arm);
    Arrow::new(Cell::new(hook.arm, rim), Cell::new(-1, rim + hook.leg))
}

/// One matched pair of the hook bijection. `inside: None` marks the escaping
/// class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MatchPair {
    pub inside: Option<Cell>,
    pub complement: Cell,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingReport {
    pub partition: String,
    pub arm: i64,
    pub leg: i64,
    pub inside_count: i64,
    pub complement_count: i64,
    pub pairs: Vec<MatchPair>,
}

/// Builds the explicit bijection from the diagram boxes with hook (a, l),
/// plus the escaping class, onto the complement boxes with the same hook,
/// by composing the two canonicalizations.
pub fn verify_hook_theorem(d: &YoungDiagram, arm: i64, leg: i64) -> Result<MatchingReport, Error> {
    let (inside_count, complement_count) = d.hook_census(arm, leg)?;
    let complement_cells: BTreeSet<Cell> =
        d.complement_cells_with_hook(arm, leg).into_iter().collect();

    let mut pairs = Vec::new();
    let mut seen = BTreeSet::new();
    let mut push_target = |source: Option<Cell>, target: Cell| -> Result<(), Error> {
        if !complement_cells.contains(&target) {
            return Err(Error::BijectionFailure {
                cell: target,
                detail: format!(
                    "image of {} is not a complement box with hook (arm {arm}, leg {leg})",
                    source.map_or_else(|| "the escaping class".to_string(), |c| c.to_string()),
                ),
            });
        }
        if !seen.insert(target) {
            return Err(Error::BijectionFailure {
                cell: target,
                detail: "two classes canonicalize to the same complement box".to_string(),
            });
        }
        pairs.push(MatchPair {
            inside: source,
            complement: target,
        });
        Ok(())
    };

    for c in d.cells_with_hook(arm, leg) {
        let arrow = arrow_for_diagram_cell(d, c)?;
        let target = canonical_outside(d, arrow)?;
        push_target(Some(c), target)?;
    }
    let escape_target = canonical_outside(d, escaping_arrow(d, HookPair::new(arm, leg)))?;
    push_target(None, escape_target)?;

    if seen.len() as i64 != complement_count {
        let missing = complement_cells
            .iter()
            .find(|c| !seen.contains(c))
            .copied()
            .expect("some complement box is unmatched");
        return Err(Error::BijectionFailure {
            cell: missing,
            detail: "complement box is not hit by any class".to_string(),
        });
    }

    Ok(MatchingReport {
        partition: d.to_string(),
        arm,
        leg,
        inside_count,
        complement_count,
        pairs,
    })
}

/// Hook census inside a K p x K q rectangle, with the case split decided by
/// the discriminator box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RectReport {
    pub partition: String,
    pub p: i64,
    pub q: i64,
    pub k: i64,
    pub width: i64,
    pub height: i64,
    pub arm: i64,
    pub leg: i64,
    /// 1 when the discriminator box lies in the diagram (counts equal),
    /// 2 when it lies in the rectangle complement (inside is one less).
    pub case: u8,
    pub discriminator: Cell,
    pub discriminator_in_diagram: bool,
    pub inside_count: i64,
    pub complement_count: i64,
    pub inside_cells: Vec<Cell>,
    pub complement_cells: Vec<Cell>,
}

fn swap_cell(c: Cell) -> Cell {
    Cell::new(c.y, c.x)
}

/// Census of boxes with hook (arm, leg) inside the diagram versus inside the
/// rectangle complement, for hooks at least as steep as the diagonal
/// (leg*p >= q*(arm+1)) or at most as shallow ((leg+1)*p <= q*arm); the
/// shallow case is handled by transposing the diagram and swapping roles.
pub fn rect_hook_census(
    d: &YoungDiagram,
    slope: Slope,
    k: i64,
    arm: i64,
    leg: i64,
) -> Result<RectReport, Error> {
    if arm < 0 || leg < 0 {
        return Err(Error::InvalidArgument(format!(
            "hook lengths must be non-negative, got arm {arm}, leg {leg}"
        )));
    }
    crate::boundary::check_fit(d, slope, k)?;
    let (p, q) = (slope.p(), slope.q());
    let (width, height) = (k * p, k * q);
    if arm >= width || leg >= height {
        return Err(Error::InvalidArgument(format!(
            "hook (arm {arm}, leg {leg}) does not fit in the {width} x {height} rectangle"
        )));
    }

    if leg * p >= q * (arm + 1) {
        rect_census_northwest(d, p, q, k, arm, leg)
    } else if (leg + 1) * p <= q * arm {
        // southeast arrows reduce to northwest ones for the transpose
        let report = rect_census_northwest(&d.transpose(), q, p, k, leg, arm)?;
        Ok(RectReport {
            partition: d.to_string(),
            p,
            q,
            k,
            width,
            height,
            arm,
            leg,
            case: report.case,
            discriminator: swap_cell(report.discriminator),
            discriminator_in_diagram: report.discriminator_in_diagram,
            inside_count: report.inside_count,
            complement_count: report.complement_count,
            inside_cells: report.inside_cells.into_iter().map(swap_cell).collect(),
            complement_cells: report.complement_cells.into_iter().map(swap_cell).collect(),
        })
    } else {
        Err(Error::SlopeCondition { arm, leg, p, q })
    }
}

fn rect_census_northwest(
    d: &YoungDiagram,
    p: i64,
    q: i64,
    k: i64,
    arm: i64,
    leg: i64,
) -> Result<RectReport, Error> {
    let (width, height) = (k * p, k * q);
    // the diagram fits under the diagonal, so its boxes are inside the rectangle
    let inside_cells = d.cells_with_hook(arm, leg);
    let complement_cells: Vec<Cell> = d
        .complement_cells_with_hook(arm, leg)
        .into_iter()
        .filter(|c| c.x < width && c.y < height)
        .collect();

    let discriminator = Cell::new(arm, height - 1 - leg);
    let discriminator_in_diagram = d.contains(discriminator);
    let case = if discriminator_in_diagram { 1 } else { 2 };

    let inside_count = inside_cells.len() as i64;
    let complement_count = complement_cells.len() as i64;
    let expected_inside = if case == 1 {
        complement_count
    } else {
        complement_count - 1
    };
    if inside_count != expected_inside {
        return Err(Error::TheoremViolation(format!(
            "rectangle census case {case} for hook (arm {arm}, leg {leg}) on {d}: \
             inside {inside_count}, complement {complement_count}"
        )));
    }

    Ok(RectReport {
        partition: d.to_string(),
        p,
        q,
        k,
        width,
        height,
        arm,
        leg,
        case,
        discriminator,
        discriminator_in_diagram,
        inside_count,
        complement_count,
        inside_cells,
        complement_cells,
    })
}

/// Both corollary identities over a K p x K q rectangle: summing the
/// rectangle census over all steep hooks (and, dually, all shallow hooks)
/// shows the steep boxes of the diagram plus the boxes of the sub-diagonal
/// region outside the diagram match the steep boxes of the rectangle
/// complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub partition: String,
    pub p: i64,
    pub q: i64,
    pub k: i64,
    pub width: i64,
    pub height: i64,
    pub r_plus: i64,
    pub steep_inside: i64,
    pub steep_complement: i64,
    pub shallow_inside: i64,
    pub shallow_complement: i64,
}

pub fn rect_corollaries(d: &YoungDiagram, slope: Slope, k: i64) -> Result<CorollaryReport, Error> {
    crate::boundary::check_fit(d, slope, k)?;
    let (p, q) = (slope.p(), slope.q());
    let (width, height) = (k * p, k * q);

    let steep = |h: HookPair| h.leg * p >= q * (h.arm + 1);
    let shallow = |h: HookPair| (h.leg + 1) * p <= q * h.arm;

    let mut steep_inside = 0;
    let mut shallow_inside = 0;
    for c in d.cells() {
        let hook = d.arm_leg_inside(c).expect("cell is inside");
        if steep(hook) {
            steep_inside += 1;
        }
        if shallow(hook) {
            shallow_inside += 1;
        }
    }

    let mut steep_complement = 0;
    let mut shallow_complement = 0;
    for x in 0..width {
        for y in 0..height {
            let c = Cell::new(x, y);
            if d.contains(c) {
                continue;
            }
            let hook = d.arm_leg_complement(c).expect("cell is in the complement");
            if steep(hook) {
                steep_complement += 1;
            }
            if shallow(hook) {
                shallow_complement += 1;
            }
        }
    }

    let r_plus = count_below_diagonal(slope, k);
    let below_outside = r_plus - d.area();
    if steep_inside + below_outside != steep_complement {
        return Err(Error::TheoremViolation(format!(
            "steep corollary fails on {d} at ({p}, {q}), K = {k}: \
             {steep_inside} + {below_outside} != {steep_complement}"
        )));
    }
    if shallow_inside + below_outside != shallow_complement {
        return Err(Error::TheoremViolation(format!(
            "shallow corollary fails on {d} at ({p}, {q}), K = {k}: \
             {shallow_inside} + {below_outside} != {shallow_complement}"
        )));
    }

    Ok(CorollaryReport {
        partition: d.to_string(),
        p,
        q,
        k,
        width,
        height,
        r_plus,
        steep_inside,
        steep_complement,
        shallow_inside,
        shallow_complement,
    })
}
