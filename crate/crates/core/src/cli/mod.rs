//! The `spinlab` command-line harness: configuration, seeded sampling, the
//! verification suites and report rendering.

pub mod check;
pub mod commands;
pub mod config;
pub mod expr;
pub mod render;
pub mod sampler;

pub use check::{cmd_check, Report};
pub use commands::{cmd_classify, cmd_compare, cmd_table2};
pub use config::{Format, RunConfig};
