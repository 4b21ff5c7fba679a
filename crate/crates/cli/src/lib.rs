//! Command-line front end: argument handling, character cache, rendering.

pub mod cache;
pub mod commands;
pub mod config;
pub mod render;
