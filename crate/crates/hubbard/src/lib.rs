//! File formats, command-line front end and parallel sweeps for
//! `hubbard-core`.
//!
//! Every subcommand reads an optional JSON run configuration, writes JSON
//! reports and CSV plot data into an output directory, and finishes with a
//! `manifest.json` listing the SHA-256 of each file.

pub mod artifacts;
pub mod cli;
pub mod commands;
pub mod config;
pub mod parallel;
