//! Branched double covers of knots, spherical space forms, and the orbit
//! spaces of weighted circle actions on the 3-sphere.

pub mod analyzer;
pub mod arith;
pub mod groups;
pub mod knot;
pub mod orbit;
pub mod presentation;
pub mod spaceform;
