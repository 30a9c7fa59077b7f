//! Group catalog, suite configuration, suite runner and reports.

mod catalog;
mod config;
mod report;
mod suites;

pub use catalog::{builtin_entries, Catalog, CatalogEntry, Recipe};
pub use config::{Config, ConfigEcho, Overrides, DEFAULT_MAX_ORDER};
pub use report::{emit_report, Format, GroupRecord, Report, Status, SuiteResult, Totals, REPORT_VERSION};
pub use suites::{resolve_suites, run_suite, verify, SUITE_IDS};
