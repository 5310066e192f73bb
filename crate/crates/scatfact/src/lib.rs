//! Verification oracles, file formats and the command-line front end for
//! [`scatfact_core`].

pub mod cli;
pub mod formats;
pub mod oracle;

pub use scatfact_core;
