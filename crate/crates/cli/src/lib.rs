//! Library surface of the batch front end, shared by the binary and the
//! acceptance suite: instance-file parsing, report assembly/validation,
//! the per-command runners and the bundled corpus.

pub mod commands;
pub mod corpus;
pub mod instance;
pub mod report;
