//! Command line companion to `halftheta`: configuration, JSON reports,
//! commands and seeded verification suites.

pub mod commands;
pub mod config;
pub mod report;
pub mod suite;
