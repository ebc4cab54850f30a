//! The slope statistics computed directly from their definitions. These
//! definitional counts are the oracle against which the boundary-graph
//! formulas are checked.

use std::cmp::Ordering;

use serde::Serialize;

use crate::diagram::{HookPair, YoungDiagram};
use crate::slope::Slope;

/// Position of a hook relative to the slope q/p. The five classes partition
/// the boxes of any diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HookClass {
    /// l/(a+1) > q/p
    Steep,
    /// l/(a+1) = q/p (counted by c+)
    LowerCritical,
    /// l/(a+1) < q/p < (l+1)/a
    Middle,
    /// (l+1)/a = q/p (counted by c-)
    UpperCritical,
    /// (l+1)/a < q/p
    Shallow,
}

pub fn classify(hook: HookPair, slope: Slope) -> HookClass {
    match slope.cmp_lower(hook) {
        Ordering::Greater => HookClass::Steep,
        Ordering::Equal => HookClass::LowerCritical,
        Ordering::Less => match slope.cmp_upper(hook) {
            Ordering::Less => HookClass::Shallow,
            Ordering::Equal => HookClass::UpperCritical,
            Ordering::Greater => HookClass::Middle,
        },
    }
}

/// All slope statistics of one diagram at one slope. `h` is present exactly
/// when no box sits on a critical fraction (ctot = 0), in which case it
/// equals midd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatBundle {
    pub c_plus: i64,
    pub c_minus: i64,
    pub ctot: i64,
    pub midd: i64,
    pub h_plus: i64,
    pub h_minus: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<i64>,
}

/// Counts every box of the diagram against the defining (in)equalities of
/// c+, c-, and midd, and assembles h+ = midd + c+, h- = midd + c-.
///
/// ```
/// use slopestat::{stats_at_slope, Slope, YoungDiagram};
///
/// let d: YoungDiagram = "8,8,6,6,2,2".parse().unwrap();
/// let bundle = stats_at_slope(&d, Slope::new(3, 2).unwrap());
/// assert_eq!((bundle.c_plus, bundle.c_minus, bundle.midd), (1, 1, 20));
/// assert_eq!(bundle.h, None); // two boxes sit on critical fractions
/// ```
pub fn stats_at_slope(diagram: &YoungDiagram, slope: Slope) -> StatBundle {
    let mut c_plus = 0;
    let mut c_minus = 0;
    let mut midd = 0;
    for cell in diagram.cells() {
        let hook = diagram.arm_leg_inside(cell).expect("cell is inside");
        match classify(hook, slope) {
            HookClass::LowerCritical => c_plus += 1,
            HookClass::UpperCritical => c_minus += 1,
            HookClass::Middle => midd += 1,
            HookClass::Steep | HookClass::Shallow => {}
        }
    }
    let ctot = c_plus + c_minus;
    StatBundle {
        c_plus,
        c_minus,
        ctot,
        midd,
        h_plus: midd + c_plus,
        h_minus: midd + c_minus,
        h: (ctot == 0).then_some(midd),
    }
}
