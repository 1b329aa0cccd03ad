//! Partitions into distinct parts and the signed statistics built on their
//! smallest parts, computed by enumeration, sieves and small dynamic programs
//! that never touch the series engine's product code.
//!
//! Enumeration is meant for `n <= 100` (`|D(100)| = 444793`); beyond that
//! use the sieves and tables.

mod arith;
mod enumerate;
mod stats;

pub use arith::{
    divisor_count, divisor_ge_table, divisor_power_series, divisor_table, isqrt,
    largest_sum_fixed_len, parity_sign_sums, parts_lt_count, parts_lt_table, pentagonal_index,
    smallest_part_sign_table,
};
pub use enumerate::{enum_distinct, for_each_distinct, s_k, DistinctPartition, DistinctPartitions};
pub use stats::{
    closed_form, closed_form_table, ffw_k, stat_poly, weighted_sum, ClosedForm, Parity,
    SignConvention, StatVariant,
};

#[cfg(test)]
mod tests;
