use std::fmt;

use super::double::Double;
use super::quiver::QuiverSpec;
use crate::elements::{find_identities, identity_positions};
use crate::error::{Error, Result};
use crate::structure::PolyadicStructure;
use crate::value::Value;

/// A base structure, a wiring, and the resulting product on doubles.
#[derive(Clone)]
pub struct DoubledStructure<V> {
    base: PolyadicStructure<V>,
    quiver: QuiverSpec,
    doubles: PolyadicStructure<Double<V>>,
}

impl<V: Value> fmt::Debug for DoubledStructure<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DoubledStructure")
            .field("base", &self.base.name())
            .field("quiver", &self.quiver.to_string())
            .finish()
    }
}

impl<V: Value> DoubledStructure<V> {
    pub fn base(&self) -> &PolyadicStructure<V> {
        &self.base
    }

    pub fn quiver(&self) -> &QuiverSpec {
        &self.quiver
    }

    /// The doubles as a structure in their own right.
    pub fn structure(&self) -> &PolyadicStructure<Double<V>> {
        &self.doubles
    }

    pub fn arity(&self) -> usize {
        self.quiver.output_arity()
    }
}

/// Applies `q` to the base operation. Associativity is not checked.
pub fn hetero_power<V: Value>(s: &PolyadicStructure<V>, q: &QuiverSpec) -> Result<DoubledStructure<V>> {
    if q.input_arity() != s.arity() {
        return Err(Error::ArityMismatch {
            expected: s.arity(),
            got: q.input_arity(),
        });
    }
    let mut doubles = PolyadicStructure::new(
        format!("{} [{}]", s.name(), q),
        s.carrier().square(),
        q.operation(s.op()),
    );
    if let Some(r) = s.renderer() {
        doubles = doubles.with_renderer(move |d: &Double<V>| format!("({}, {})", r(&d.top), r(&d.bottom)));
    }
    Ok(DoubledStructure {
        base: s.clone(),
        quiver: q.clone(),
        doubles,
    })
}

pub fn componentwise_power<V: Value>(s: &PolyadicStructure<V>) -> DoubledStructure<V> {
    let q = QuiverSpec::componentwise(s.arity()).expect("componentwise wiring is valid for arity >= 2");
    hetero_power(s, &q).expect("arities agree by construction")
}

/// Where `E = (e, e)` acts as an identity in a doubles product.
#[derive(Clone, Debug, PartialEq)]
pub enum IdentityReport<V> {
    /// Both `μ′[E, .., E, S] = S` and `μ′[S, E, .., E] = S`.
    TwoSided(Double<V>),
    /// `μ′[E, .., E, S] = S` but not `μ′[S, E, .., E] = S`.
    OneSidedLeft(Double<V>),
    /// `μ′[S, E, .., E] = S` but not `μ′[E, .., E, S] = S`.
    OneSidedRight(Double<V>),
    None,
}

impl<V: fmt::Display> fmt::Display for IdentityReport<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityReport::TwoSided(e) => write!(f, "two-sided identity {e}"),
            IdentityReport::OneSidedLeft(e) => write!(f, "left identity {e} only"),
            IdentityReport::OneSidedRight(e) => write!(f, "right identity {e} only"),
            IdentityReport::None => f.write_str("no identity"),
        }
    }
}

/// Classifies `E = (e, e)` for the first identity `e` of the base structure
/// by the two outer placements. Middle placements are not consulted; use
/// [`crate::elements::identity_positions`] for the full picture.
pub fn identity_report_for_power<V: Value>(d: &DoubledStructure<V>) -> IdentityReport<V> {
    let Some(e) = find_identities(d.base()).into_iter().next() else {
        return IdentityReport::None;
    };
    let big_e = Double::new(e.clone(), e);
    let n = d.arity();
    let pos = identity_positions(d.structure(), &big_e);
    match (pos.contains(&(n - 1)), pos.contains(&0)) {
        (true, true) => IdentityReport::TwoSided(big_e),
        (true, false) => IdentityReport::OneSidedLeft(big_e),
        (false, true) => IdentityReport::OneSidedRight(big_e),
        (false, false) => IdentityReport::None,
    }
}
