//! Brute-force ground truth and the checks built on it.

mod paper;
mod tables;
mod verify;

pub use paper::{fixture, verify_paper_formulas, Fixture, PaperCheck, SeriesDiff, FIXTURES, PAPER_DIFF_ORDER};
pub use tables::{
    brute_parity_table, brute_parity_table_capped, brute_table, brute_table_capped, golden_diff_counts,
    golden_diff_even, CountTable, GoldenDiff, ParityTable, DEFAULT_TABLE_CAP, TABLE1, TABLE2_EVEN,
};
pub use verify::{compare_with_tables, verify_series_vs_brute, SeriesMismatch, SeriesReport};
