//! File formats, generators and the command-line front end for
//! [`bisplit_core`].

pub mod cli;
pub mod generate;
pub mod instance;
pub mod parallel;
pub mod report;
pub mod svg;
