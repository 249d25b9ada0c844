//! File formats, caching, parallel census and verification suites on top of
//! `powmon-core`.

pub mod cache;
pub mod config;
pub mod export;
pub mod fixtures;
pub mod parallel;
pub mod table_file;
pub mod verify;

pub use powmon_core as core;
