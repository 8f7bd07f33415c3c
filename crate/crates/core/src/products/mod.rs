//! Doubles and their products: componentwise powers and quiver-wired
//! ("entangled") powers on S × S.

mod double;
mod power;
mod quiver;

pub use double::{Component, Double};
pub use power::{componentwise_power, hetero_power, identity_report_for_power, DoubledStructure, IdentityReport};
pub use quiver::{arity_after_intact, builtin_quiver, QuiverSpec, Wire, BUILTIN_QUIVERS};
