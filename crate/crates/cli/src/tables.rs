//! Distribution tables of the statistic h over all partitions of a given
//! area.

use std::collections::BTreeMap;

use slopestat::{partitions, stats_at_slope, Error, Slope};

/// Statistic value -> number of partitions attaining it. The counts sum to
/// the number of partitions of n.
pub type Histogram = BTreeMap<i64, i64>;

fn require_large_slope(n: i64, slope: Slope) -> Result<(), Error> {
    if slope.p() + slope.q() <= n {
        return Err(Error::SlopeTooSmall {
            n,
            p: slope.p(),
            q: slope.q(),
        });
    }
    Ok(())
}

/// Histogram of h over all partitions of n. Requires p + q > n so that h is
/// defined everywhere.
pub fn histogram(n: i64, slope: Slope) -> Result<Histogram, Error> {
    require_large_slope(n, slope)?;
    let mut table = Histogram::new();
    for d in partitions(n) {
        let bundle = stats_at_slope(&d, slope);
        debug_assert_eq!(bundle.ctot, 0, "p + q > n leaves no critical boxes");
        *table.entry(bundle.midd).or_insert(0) += 1;
    }
    Ok(table)
}

/// Histogram of the cell dimension |D| + h over all partitions of n; the h
/// histogram shifted by n.
pub fn cell_dimension_table(n: i64, slope: Slope) -> Result<Histogram, Error> {
    Ok(histogram(n, slope)?
        .into_iter()
        .map(|(value, count)| (value + n, count))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slope(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn histogram_examples() {
        assert_eq!(
            histogram(0, slope(1, 1)).unwrap(),
            Histogram::from([(0, 1)])
        );
        let expected = Histogram::from([(1, 1), (2, 2), (3, 1), (4, 1)]);
        assert_eq!(histogram(4, slope(4, 1)).unwrap(), expected);
        assert_eq!(histogram(4, slope(2, 3)).unwrap(), expected);
    }

    #[test]
    fn histogram_counts_sum_to_partition_count() {
        let table = histogram(7, slope(7, 1)).unwrap();
        assert_eq!(table.values().sum::<i64>(), 15);
    }

    #[test]
    fn small_slope_is_rejected() {
        assert_eq!(
            histogram(4, slope(2, 1)),
            Err(Error::SlopeTooSmall { n: 4, p: 2, q: 1 })
        );
    }

    #[test]
    fn dimension_table_examples() {
        assert_eq!(
            cell_dimension_table(1, slope(1, 2)).unwrap(),
            Histogram::from([(2, 1)])
        );
        assert_eq!(
            cell_dimension_table(4, slope(4, 1)).unwrap(),
            Histogram::from([(5, 1), (6, 2), (7, 1), (8, 1)])
        );
        assert_eq!(
            cell_dimension_table(0, slope(1, 1)).unwrap(),
            Histogram::from([(0, 1)])
        );
    }
}
