//! Coprime slopes (p, q) and exact comparisons against hook fractions.
//!
//! All comparisons of q/p against l/(a+1) or (l+1)/a are done on
//! cross-multiplied integers; no rational or floating type appears anywhere.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::diagram::HookPair;
use crate::error::Error;

/// A pair of positive coprime integers (p, q), standing for the slope q/p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Slope {
    p: i64,
    q: i64,
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Slope {
    pub fn new(p: i64, q: i64) -> Result<Self, Error> {
        if p <= 0 || q <= 0 || gcd(p, q) != 1 {
            return Err(Error::InvalidSlope { p, q });
        }
        Ok(Slope { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// The slope p/q, obtained by swapping the two components.
    pub fn reciprocal(&self) -> Slope {
        Slope {
            p: self.q,
            q: self.p,
        }
    }

    /// Compares the lower critical fraction l/(a+1) of a hook with q/p.
    pub fn cmp_lower(&self, hook: HookPair) -> Ordering {
        (hook.leg * self.p).cmp(&(self.q * (hook.arm + 1)))
    }

    /// Compares the upper critical fraction (l+1)/a of a hook with q/p.
    /// With a = 0 the fraction is +infinity, and the cross-multiplied test
    /// (l+1)*p > q*0 agrees.
    pub fn cmp_upper(&self, hook: HookPair) -> Ordering {
        ((hook.leg + 1) * self.p).cmp(&(self.q * hook.arm))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Parses `p,q`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let parse = |part: &str| {
            part.trim().parse::<i64>().map_err(|_| {
                Error::InvalidArgument(format!("cannot parse slope component {part:?}"))
            })
        };
        match s.split_once(',') {
            Some((p, q)) => Slope::new(parse(p)?, parse(q)?),
            None => Err(Error::InvalidArgument(format!(
                "slope must be written p,q, got {s:?}"
            ))),
        }
    }
}

/// All coprime (p, q) with p + q <= n, the only slopes where the statistic
/// h can jump on diagrams of area n. Sorted by (p + q, p).
pub fn breakpoint_slopes(n: i64) -> Vec<Slope> {
    let mut slopes = Vec::new();
    for sum in 2..=n {
        for p in 1..sum {
            let q = sum - p;
            if gcd(p, q) == 1 {
                slopes.push(Slope { p, q });
            }
        }
    }
    slopes
}

/// All coprime (p, q) with both components at most `bound`, sorted by
/// (p + q, p).
pub fn coprime_slopes_bounded(bound: i64) -> Vec<Slope> {
    breakpoint_slopes(2 * bound)
        .into_iter()
        .filter(|s| s.p <= bound && s.q <= bound)
        .collect()
}
