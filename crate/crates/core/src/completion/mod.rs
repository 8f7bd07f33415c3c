//! Group completion of m-ary semigroups: equivalence classes of doubles,
//! class products and quers, and the assembled n-ary group.

mod axioms;
mod build;
mod classes;
mod equivalence;
mod partition;
mod universal;

pub use axioms::{check_equivalence_axioms, check_relation_coincidence, AxiomsVerdict, CoincidenceVerdict};
pub use build::{build_completion, BuildOptions, CompletionGroup, CompletionReport, GroupStatus};
pub use classes::{class_product, render_class, ClassAlgebra, QuerMode, QuerOutcome, SwapCounterexample, WellDefinedness};
pub use equivalence::{
    compose_gauge_witnesses, compose_twist_witnesses, gauge_equivalent, gauge_from_twist, gauge_witness,
    is_gauge_witness, is_twist_witness, twist_equivalent, twist_from_gauge, twist_sides, twist_witness,
    EquivalenceDecision, Relation, Rule,
};
pub use partition::{partition_classes, partition_classes_with, partition_pairwise, ClassDouble, DisjointSets, Partition};
pub use universal::{check_universal_factorization, phi_sg, phi_sg_identity_form, FactorizationVerdict, TargetGroup};

use crate::carrier::Canonicalizer;
use crate::products::Double;
use crate::structure::PolyadicStructure;

/// A base structure with the data needed to work with classes of its doubles.
#[derive(Clone)]
pub struct ClassSpace<V> {
    pub base: PolyadicStructure<V>,
    pub decision: EquivalenceDecision<V>,
    pub canonical: Option<Canonicalizer<Double<V>>>,
    /// The truncated (or, for finite carriers, complete) set of doubles.
    pub domain: Vec<Double<V>>,
    /// Witness bound for cross-checks against witness search.
    pub search_bound: usize,
}
