//! Document format, command dispatch and verification suites for the
//! `novikov` command-line tool.

pub mod app;
pub mod document;
pub mod suites;

pub use app::run;
pub use document::{emit_algebra, parse_algebra, parse_element, DocumentError};
pub use suites::{run_suite, suite_names, SuiteConfig, Status, VerifyResult};
