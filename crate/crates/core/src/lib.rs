//! Certified short paths in proper power graphs of alternating groups.

pub mod bounds;
pub mod graph;
pub mod notation;
pub mod perm;
mod pointset;
pub mod primes;
pub mod sample;
pub mod synth;
