//! Polyadic (m-ary) semigroups and their group completions.
//!
//! The crate is organised bottom-up:
//!
//! * [`value`], [`carrier`], [`operation`], [`structure`]: carriers, n-ary
//!   operations and one-operation structures.
//! * [`assoc`], [`elements`], [`commutativity`], [`group`]: the single-structure
//!   checks (total associativity, identities, zeros, neutral polyads,
//!   querelements, Dörnte relations, polyadic group axioms).
//! * [`products`]: componentwise and hetero ("entangled") powers on doubles,
//!   wired by [`products::QuiverSpec`].
//! * [`completion`]: equivalence of doubles, class partitions, class products,
//!   queroperations and the assembled completion group `K₀^(m,n)`.
//! * [`worked`]: ready-made structures (ℕ₀, negative integers, odd naturals,
//!   residue classes, the 4-ary matrix semigroup, cyclic groups).
//!
//! Exhaustive checks walk tuple spaces in parallel when the `parallel`
//! feature is enabled; every verdict is independent of scheduling.

pub mod assoc;
pub mod carrier;
pub mod commutativity;
pub mod completion;
pub mod elements;
pub mod error;
pub mod exec;
pub mod group;
pub mod operation;
pub mod products;
pub mod structure;
pub mod table;
pub mod tuples;
pub mod value;
pub mod worked;

pub use assoc::{check_total_associativity, AssocCounterexample, AssocVerdict};
pub use carrier::Carrier;
pub use commutativity::{commutativity_report, Commutativity};
pub use error::{Error, Result};
pub use exec::{CheckMode, Exec};
pub use group::{verify_polyadic_group, GroupVerdict};
pub use operation::NAryOperation;
pub use products::{Component, Double, QuiverSpec};
pub use structure::{PolyadicStructure, StructureReport};
pub use value::Value;
