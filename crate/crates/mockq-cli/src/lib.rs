//! Command-line front end for the mockq workbench, and its identity DSL.

pub mod app;
pub mod cache;
pub mod config;
pub mod dsl;
pub mod format;
pub mod report;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use app::run_with;

/// Run with the process arguments and environment, writing to stdout/stderr.
pub fn run() -> i32 {
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    run_with(std::env::args_os(), &mut out, &mut err, &|k| std::env::var(k).ok())
}
