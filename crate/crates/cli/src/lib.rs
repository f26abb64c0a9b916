//! Report schema and renderers for the `wreathgap` binary.

pub mod report;
