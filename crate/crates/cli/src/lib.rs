//! Verification sweeps and output helpers behind the `springerrep` binary.

pub mod verify;
