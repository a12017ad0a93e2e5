//! Library surface of the `resint` command-line tool: job-file parsing,
//! JSON report builders, and the built-in example corpus. The binary in
//! `main.rs` is a thin dispatcher over these.

pub mod corpus;
pub mod job;
pub mod report;
