//! Distribution tables and verification suites behind the slopestat CLI.

pub mod suites;
pub mod tables;

pub use suites::{run_suite, verify_equidistribution, Counterexample, SuiteName, SuiteReport};
pub use tables::{cell_dimension_table, histogram, Histogram};
