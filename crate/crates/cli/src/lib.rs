//! Command-line front end for the dcpoly library: the series specification
//! format, the builtin corpus, machine-readable reports, and the command
//! handlers behind the `dcpoly` binary.

pub mod commands;
pub mod report;
pub mod spec;
