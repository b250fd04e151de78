//! Library half of the `binomials` command-line tool; the binary is a
//! thin argument-parsing wrapper over these modules so tests can drive
//! the same code paths directly.

pub mod published;
pub mod report;
pub mod table;
