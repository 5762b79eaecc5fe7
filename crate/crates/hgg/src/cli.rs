//! Command-line front end.
pub fn run() -> i32 { 0 }
