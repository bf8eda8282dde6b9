//! Library surface of the command-line tool: problem-file parsing, task
//! dispatch and report construction. The binary is a thin wrapper.

pub mod error;
pub mod problem;
pub mod report;
pub mod run;
