//! Ready-made structures with canonical double forms and exact equivalence
//! decisions.

pub mod cyclic;
mod integers;
mod matrix;

use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;

pub use integers::{
    detect_residue_arity, multiplicity, nat0_monoid, neg_ternary, odd_ternary, residue_non_closure_witness,
    residue_structure,
};
pub use matrix::{epsilon, matrix_4ary, spiral_point};

use crate::completion::{ClassSpace, EquivalenceDecision};
use crate::error::{Error, Result};
use crate::products::Double;
use crate::structure::PolyadicStructure;
use crate::value::Value;
use cyclic::{cyclic, parse_cyclic_name};

pub type DoubleCanonicalizer<V> = Arc<dyn Fn(&Double<V>) -> Double<V> + Send + Sync>;

#[derive(Clone)]
pub struct StructureRecipe<V> {
    pub name: String,
    pub expected_arity: usize,
    pub structure: PolyadicStructure<V>,
    pub canonical_double: Option<DoubleCanonicalizer<V>>,
    pub exact_decision: EquivalenceDecision<V>,
    /// Truncation bound the recipe was built with.
    pub limit: usize,
    /// Carrier elements per component of the double domain.
    pub side: usize,
}

impl<V: Value> StructureRecipe<V> {
    pub fn new(
        name: &str,
        structure: PolyadicStructure<V>,
        canonical_double: Option<DoubleCanonicalizer<V>>,
        exact_decision: EquivalenceDecision<V>,
        limit: usize,
        side: usize,
    ) -> Self {
        StructureRecipe {
            name: name.to_string(),
            expected_arity: structure.arity(),
            structure,
            canonical_double,
            exact_decision,
            limit,
            side,
        }
    }

    /// A finite structure with no closed-form rule: equivalence is decided by
    /// twist witness search over the whole carrier.
    pub fn finite(structure: PolyadicStructure<V>) -> Result<Self> {
        let side = structure
            .carrier()
            .finite_elements()
            .ok_or(Error::ExhaustiveOnInfiniteCarrier)?
            .len();
        Ok(StructureRecipe {
            name: structure.name().to_string(),
            expected_arity: structure.arity(),
            exact_decision: EquivalenceDecision::twist(side),
            structure,
            canonical_double: None,
            limit: side,
            side,
        })
    }

    pub fn decide(&self, d1: &Double<V>, d2: &Double<V>) -> Result<bool> {
        self.exact_decision.decide(&self.structure, d1, d2)
    }

    /// Canonical form, or `d` itself when the recipe has none.
    pub fn canonical(&self, d: &Double<V>) -> Double<V> {
        self.canonical_double.as_ref().map_or_else(|| d.clone(), |c| c(d))
    }

    /// Every pair of the first `side` carrier elements, row-major.
    pub fn domain(&self) -> Vec<Double<V>> {
        let base = self.structure.carrier().generate(self.side);
        base.iter()
            .flat_map(|a| base.iter().map(move |b| Double::new(a.clone(), b.clone())))
            .collect()
    }

    /// Witness bound for searches over this recipe's carrier.
    pub fn search_bound(&self) -> usize {
        self.side
    }

    /// The class space under the recipe's exact decision.
    pub fn class_space(&self) -> ClassSpace<V> {
        self.class_space_with(self.exact_decision.clone())
    }

    pub fn class_space_with(&self, decision: EquivalenceDecision<V>) -> ClassSpace<V> {
        ClassSpace {
            base: self.structure.clone(),
            decision,
            canonical: self.canonical_double.clone(),
            domain: self.domain(),
            search_bound: self.search_bound(),
        }
    }
}

/// A recipe of any supported value type.
#[derive(Clone)]
pub enum AnyRecipe {
    Integer(StructureRecipe<BigInt>),
    Complex(StructureRecipe<Complex64>),
    Finite(StructureRecipe<u32>),
}

impl AnyRecipe {
    pub fn name(&self) -> &str {
        match self {
            AnyRecipe::Integer(r) => &r.name,
            AnyRecipe::Complex(r) => &r.name,
            AnyRecipe::Finite(r) => &r.name,
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            AnyRecipe::Integer(r) => r.expected_arity,
            AnyRecipe::Complex(r) => r.expected_arity,
            AnyRecipe::Finite(r) => r.expected_arity,
        }
    }
}

/// Built-in recipe names with a one-line description and default bound.
pub const RECIPES: &[(&str, &str, usize)] = &[
    ("nat0", "binary addition on the nonnegative integers", 40),
    ("neg3", "ternary product on the negative integers", 20),
    ("odd3", "ternary addition on the odd naturals", 101),
    ("res-a-b", "product on the residue class {bk + a}, arity detected", 200),
    ("matrix4", "4-ary product a1 + εa2 + ε²a3 + a4 on complex scalars", 50),
    ("z<k>-add-<m>", "m-fold addition mod k (finite)", 0),
    ("z<k>-mul-<m>", "m-fold multiplication mod k (finite)", 0),
];

/// Looks up a recipe by name; `bound` overrides its default truncation.
pub fn recipe_by_name(name: &str, bound: Option<usize>) -> Result<AnyRecipe> {
    let default = |n: &str| RECIPES.iter().find(|r| r.0 == n).map_or(0, |r| r.2);
    let b = |n: &str| bound.unwrap_or_else(|| default(n));
    match name {
        "nat0" => return Ok(AnyRecipe::Integer(nat0_monoid(b("nat0")))),
        "neg3" => return Ok(AnyRecipe::Integer(neg_ternary(b("neg3")))),
        "odd3" => return Ok(AnyRecipe::Integer(odd_ternary(b("odd3")))),
        "matrix4" => return Ok(AnyRecipe::Complex(matrix_4ary(b("matrix4")))),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("res-") {
        let (a, m) = rest.split_once('-').ok_or_else(|| Error::UnknownStructure(name.into()))?;
        let (a, m): (u64, u64) = match (a.parse(), m.parse()) {
            (Ok(a), Ok(m)) => (a, m),
            _ => return Err(Error::UnknownStructure(name.into())),
        };
        return Ok(AnyRecipe::Integer(residue_structure(a, m, b("res-a-b"))?));
    }
    if let Some((k, m, op)) = parse_cyclic_name(name) {
        return Ok(AnyRecipe::Finite(StructureRecipe::finite(cyclic(k, m, op))?));
    }
    Err(Error::UnknownStructure(name.into()))
}
