//! File formats, the verification harness and the `fockwc` command line
//! for [`fockwc_core`].

pub mod cli;
pub mod format;
pub mod verify;
