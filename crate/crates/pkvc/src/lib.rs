//! Standard-library companion to `pkvc-core`: edge-list files, JSON and CSV
//! reports, the ratio benchmark and the `pkvc` command-line tool.

pub mod bench;
pub mod cli;
pub mod edgelist;
pub mod report;

pub use pkvc_core;
