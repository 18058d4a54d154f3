//! Library half of the `evenzeta` binary: command bodies and report rendering.

pub mod commands;
pub mod report;
