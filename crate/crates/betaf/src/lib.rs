//! Command-line surface and verification suites.
//!
//! The binary exposes the beta-representative, f-invariant and
//! Chern-criterion computations plus a verification runner; this library
//! half holds the machinery so the acceptance tests drive exactly the
//! same code paths.

pub mod cache;
pub mod commands;
pub mod config;
pub mod output;
pub mod verify;
