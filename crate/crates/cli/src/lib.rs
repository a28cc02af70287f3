//! Library surface of the command-line tool, exposed so integration tests
//! can drive commands without spawning processes.

pub mod commands;
pub mod report;
