//! Command-line front end and file formats for `clawdeg-core`.

pub mod cli;
pub mod io;
pub mod verify;

pub use cli::run;
pub use verify::Oracles;
