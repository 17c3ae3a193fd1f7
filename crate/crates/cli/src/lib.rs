//! Command-line front end for gvdkit: argument parsing, report emission and
//! the acceptance harness.

pub mod cli;
pub mod commands;
pub mod harness;
pub mod render;
