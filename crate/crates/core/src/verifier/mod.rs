//! Sweeps that compare the closed forms with the brute-force oracles.
//!
//! Oracles only use `cyclotomic` and `codec`; claims come from `formulas` and
//! `classifier`. A run passes when its mismatches equal the known-findings
//! ledger exactly.

pub mod checks;
pub mod ledger;
pub mod report;
pub mod suite;

pub use checks::{dimension_points, Check, Runner};
pub use ledger::{Finding, Ledger, LedgerDiff};
pub use report::{CheckCase, Counts, GridEntry, Outcome, ParamValue, Params, Report, Verdict};
pub use suite::{run_suite, CheckSpec, SuiteConfig, SuiteRun};
