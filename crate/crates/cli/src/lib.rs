//! Library half of the command-line tool: the JSON report schemas, kept as
//! real types so tests (and downstream scripts) can round-trip them.

pub mod reports;
