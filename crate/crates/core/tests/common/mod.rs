#![allow(dead_code)]

pub mod catalogue;
pub mod divisors;
pub mod goeritz;
pub mod rewriting;
pub mod rotations;
