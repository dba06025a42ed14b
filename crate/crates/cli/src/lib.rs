//! IO, serialization, experiment plumbing, and command dispatch around the
//! exact-arithmetic core. The binary target `paucity` is a thin wrapper over
//! [`commands`].

pub mod commands;
pub mod error;
pub mod experiment;
pub mod json;
pub mod parallel;
pub mod witness_io;
