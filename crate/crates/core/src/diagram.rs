//! Young diagrams in French orientation: row 0 is the bottom (longest) row
//! and the box (0, 0) sits in the southwest corner.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// A lattice box addressed by column `x` and row `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Cell {
    pub x: i64,
    pub y: i64,
}

impl Cell {
    pub fn new(x: i64, y: i64) -> Self {
        Cell { x, y }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Arm and leg lengths of a box, measured inside the diagram or inside its
/// complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HookPair {
    pub arm: i64,
    pub leg: i64,
}

impl HookPair {
    pub fn new(arm: i64, leg: i64) -> Self {
        HookPair { arm, leg }
    }
}

impl fmt::Display for HookPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(arm {}, leg {})", self.arm, self.leg)
    }
}

/// A Young diagram stored as its weakly decreasing row lengths, bottom row
/// first. No zero rows are stored; the empty diagram has no rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YoungDiagram {
    rows: Vec<i64>,
}

impl YoungDiagram {
    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    /// Builds a diagram from row lengths, bottom row first. Entries must be
    /// positive and weakly decreasing.
    pub fn from_row_lengths<I>(rows: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = i64>,
    {
        let rows: Vec<i64> = rows.into_iter().collect();
        for &len in &rows {
            if len <= 0 {
                return Err(Error::InvalidPartition(format!(
                    "row length {len} is not positive"
                )));
            }
        }
        if let Some(w) = rows.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "row lengths must be weakly decreasing, got {} before {}",
                w[0], w[1]
            )));
        }
        Ok(YoungDiagram { rows })
    }

    /// Internal constructor for rows already known to be valid.
    pub(crate) fn from_sorted_rows(rows: Vec<i64>) -> Self {
        debug_assert!(rows.iter().all(|&len| len > 0));
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        YoungDiagram { rows }
    }

    pub fn rows(&self) -> &[i64] {
        &self.rows
    }

    pub fn area(&self) -> i64 {
        self.rows.iter().sum()
    }

    pub fn height(&self) -> i64 {
        self.rows.len() as i64
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Length of row `y`, or 0 for rows above the diagram.
    pub fn row_len(&self, y: i64) -> i64 {
        assert!(y >= 0, "row index must be non-negative");
        self.rows.get(y as usize).copied().unwrap_or(0)
    }

    /// Number of boxes in column `x`, or 0 for columns right of the diagram.
    pub fn col_height(&self, x: i64) -> i64 {
        assert!(x >= 0, "column index must be non-negative");
        // rows are weakly decreasing, so `len > x` holds on a prefix
        self.rows.partition_point(|&len| len > x) as i64
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.x >= 0 && c.y >= 0 && c.x < self.row_len(c.y)
    }

    /// Membership in the complement of the diagram inside the non-negative
    /// quadrant.
    pub fn in_complement(&self, c: Cell) -> bool {
        c.x >= 0 && c.y >= 0 && c.x >= self.row_len(c.y)
    }

    /// Boxes of the diagram, bottom row first, west to east.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(y, &len)| (0..len).map(move |x| Cell::new(x, y as i64)))
    }

    pub fn transpose(&self) -> YoungDiagram {
        let width = self.rows.first().copied().unwrap_or(0);
        let rows = (0..width).map(|x| self.col_height(x)).collect();
        YoungDiagram::from_sorted_rows(rows)
    }

    /// Arm and leg of a box inside the diagram: the number of boxes strictly
    /// east of it in its row and strictly north of it in its column.
    pub fn arm_leg_inside(&self, c: Cell) -> Result<HookPair, Error> {
        if !self.contains(c) {
            return Err(Error::BoxOutsideDiagram(c));
        }
        Ok(HookPair::new(
            self.row_len(c.y) - 1 - c.x,
            self.col_height(c.x) - 1 - c.y,
        ))
    }

    /// Arm and leg of a box in the complement: the number of complement boxes
    /// strictly west of it down to the diagram boundary, and strictly south.
    pub fn arm_leg_complement(&self, c: Cell) -> Result<HookPair, Error> {
        if !self.in_complement(c) {
            return Err(Error::BoxInsideDiagram(c));
        }
        Ok(HookPair::new(
            c.x - self.row_len(c.y),
            c.y - self.col_height(c.x),
        ))
    }

    /// Boxes of the diagram whose hook equals (arm, leg), in scan order.
    pub fn cells_with_hook(&self, arm: i64, leg: i64) -> Vec<Cell> {
        self.cells()
            .filter(|&c| self.arm_leg_inside(c) == Ok(HookPair::new(arm, leg)))
            .collect()
    }

    /// Complement boxes whose hook equals (arm, leg), in row order.
    ///
    /// The scan is finite: in row y the only candidate is x = row_len(y) + arm,
    /// and any solution of y = col_height(x) + leg has y <= height + leg
    /// because col_height(x) <= height.
    pub fn complement_cells_with_hook(&self, arm: i64, leg: i64) -> Vec<Cell> {
        let mut found = Vec::new();
        for y in 0..=self.height() + leg {
            let x = self.row_len(y) + arm;
            if self.col_height(x) + leg == y {
                found.push(Cell::new(x, y));
            }
        }
        found
    }

    /// Counts the boxes with hook (arm, leg) inside the diagram and inside its
    /// complement. The complement always holds exactly one more.
    ///
    /// ```
    /// use slopestat::YoungDiagram;
    ///
    /// let d: YoungDiagram = "1".parse().unwrap();
    /// assert_eq!(d.hook_census(0, 0).unwrap(), (1, 2));
    /// ```
    pub fn hook_census(&self, arm: i64, leg: i64) -> Result<(i64, i64), Error> {
        if arm < 0 || leg < 0 {
            return Err(Error::InvalidArgument(format!(
                "hook lengths must be non-negative, got arm {arm}, leg {leg}"
            )));
        }
        let inside = self.cells_with_hook(arm, leg).len() as i64;
        let complement = self.complement_cells_with_hook(arm, leg).len() as i64;
        Ok((inside, complement))
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "-");
        }
        for (i, len) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{len}")?;
        }
        Ok(())
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    /// Parses comma-separated row lengths, bottom row first. The empty string
    /// or `-` denotes the empty diagram.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(YoungDiagram::empty());
        }
        let rows = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse entry {part:?}")))
            })
            .collect::<Result<Vec<i64>, Error>>()?;
        YoungDiagram::from_row_lengths(rows)
    }
}

/// Iterator over all partitions of `n` in reverse-lexicographic order on the
/// row sequences, so `n` itself comes first and the all-ones partition last.
pub struct Partitions {
    next: Option<Vec<i64>>,
}

/// Enumerates every partition of `n` exactly once, largest part first.
pub fn partitions(n: i64) -> Partitions {
    assert!(n >= 0, "cannot partition a negative integer");
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Partitions { next: Some(first) }
}

impl Iterator for Partitions {
    type Item = YoungDiagram;

    fn next(&mut self) -> Option<YoungDiagram> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(YoungDiagram::from_sorted_rows(current))
    }
}

/// Next partition after `parts` in reverse-lexicographic order: shrink the
/// last part greater than 1 and repack the freed units greedily.
fn successor(parts: &[i64]) -> Option<Vec<i64>> {
    let pivot = parts.iter().rposition(|&p| p > 1)?;
    let mut next = parts[..=pivot].to_vec();
    next[pivot] -= 1;
    let cap = next[pivot];
    let mut rem = parts.len() as i64 - pivot as i64;
    while rem > cap {
        next.push(cap);
        rem -= cap;
    }
    next.push(rem);
    Some(next)
}
