use std::borrow::Cow;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::value::{position_of, Value};

pub type Predicate<V> = Arc<dyn Fn(&V) -> bool + Send + Sync>;
pub type Canonicalizer<V> = Arc<dyn Fn(&V) -> V + Send + Sync>;
/// Yields the first `n` members in a fixed order.
pub type Generator<V> = Arc<dyn Fn(usize) -> Vec<V> + Send + Sync>;

#[derive(Clone)]
pub enum CarrierKind<V> {
    FiniteEnumerated(Vec<V>),
    RuleBased {
        contains: Predicate<V>,
        canonicalize: Canonicalizer<V>,
        generate: Generator<V>,
    },
}

/// The underlying set of a structure.
///
/// `witness_bound` caps how many elements existential searches (identities,
/// querelements, equivalence witnesses) may draw from a rule-based carrier.
/// For finite carriers it equals the carrier size.
#[derive(Clone)]
pub struct Carrier<V> {
    kind: CarrierKind<V>,
    witness_bound: usize,
}

impl<V: Value> Carrier<V> {
    pub fn finite(elements: Vec<V>) -> Result<Self> {
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].iter().any(|x| x.same(e)) {
                return Err(Error::DuplicateElement(e.to_string()));
            }
        }
        let witness_bound = elements.len();
        Ok(Carrier {
            kind: CarrierKind::FiniteEnumerated(elements),
            witness_bound,
        })
    }

    pub fn rule_based(
        contains: impl Fn(&V) -> bool + Send + Sync + 'static,
        canonicalize: impl Fn(&V) -> V + Send + Sync + 'static,
        generate: impl Fn(usize) -> Vec<V> + Send + Sync + 'static,
        witness_bound: usize,
    ) -> Self {
        assert!(witness_bound > 0, "witness bound must be positive");
        Carrier {
            kind: CarrierKind::RuleBased {
                contains: Arc::new(contains),
                canonicalize: Arc::new(canonicalize),
                generate: Arc::new(generate),
            },
            witness_bound,
        }
    }

    pub fn kind(&self) -> &CarrierKind<V> {
        &self.kind
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, CarrierKind::FiniteEnumerated(_))
    }

    pub fn witness_bound(&self) -> usize {
        self.witness_bound
    }

    pub fn finite_elements(&self) -> Option<&[V]> {
        match &self.kind {
            CarrierKind::FiniteEnumerated(e) => Some(e),
            CarrierKind::RuleBased { .. } => None,
        }
    }

    pub fn contains(&self, v: &V) -> bool {
        match &self.kind {
            CarrierKind::FiniteEnumerated(e) => position_of(e, v).is_some(),
            CarrierKind::RuleBased { contains, .. } => contains(v),
        }
    }

    pub fn canonicalize(&self, v: &V) -> V {
        match &self.kind {
            CarrierKind::FiniteEnumerated(e) => position_of(e, v).map_or_else(|| v.clone(), |i| e[i].clone()),
            CarrierKind::RuleBased { canonicalize, .. } => canonicalize(v),
        }
    }

    /// First `n` members in carrier order.
    pub fn generate(&self, n: usize) -> Vec<V> {
        match &self.kind {
            CarrierKind::FiniteEnumerated(e) => e.iter().take(n).cloned().collect(),
            CarrierKind::RuleBased { generate, .. } => generate(n),
        }
    }

    /// The elements searched for existential witnesses: the whole finite
    /// carrier, or the first `witness_bound` generated members.
    pub fn witnesses(&self) -> Cow<'_, [V]> {
        match &self.kind {
            CarrierKind::FiniteEnumerated(e) => Cow::Borrowed(e),
            CarrierKind::RuleBased { generate, .. } => Cow::Owned(generate(self.witness_bound)),
        }
    }

    pub fn with_witness_bound(mut self, bound: usize) -> Self {
        if !self.is_finite() {
            assert!(bound > 0, "witness bound must be positive");
            self.witness_bound = bound;
        }
        self
    }

    /// Cartesian square, used as the carrier of doubles.
    pub fn square(&self) -> Carrier<crate::products::Double<V>> {
        use crate::products::Double;
        match &self.kind {
            CarrierKind::FiniteEnumerated(e) => {
                let pairs = e
                    .iter()
                    .flat_map(|a| e.iter().map(move |b| Double::new(a.clone(), b.clone())))
                    .collect();
                Carrier::finite(pairs).expect("square of a duplicate-free carrier")
            }
            CarrierKind::RuleBased {
                contains,
                canonicalize,
                generate,
            } => {
                let (c1, c2, g) = (contains.clone(), canonicalize.clone(), generate.clone());
                let bound = self.witness_bound;
                Carrier::rule_based(
                    move |d: &Double<V>| c1(&d.top) && c1(&d.bottom),
                    move |d: &Double<V>| Double::new(c2(&d.top), c2(&d.bottom)),
                    move |n| square_prefix(&g, n),
                    bound.saturating_mul(bound).max(1),
                )
            }
        }
    }
}

/// First `n` pairs of the row-major square of the smallest generated prefix
/// whose square has at least `n` elements.
fn square_prefix<V: Value>(g: &Generator<V>, n: usize) -> Vec<crate::products::Double<V>> {
    use crate::products::Double;
    let mut side = 1;
    while side * side < n {
        side += 1;
    }
    let base = g(side);
    base.iter()
        .flat_map(|a| base.iter().map(move |b| Double::new(a.clone(), b.clone())))
        .take(n)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_carrier_rejects_duplicates() {
        assert!(Carrier::finite(vec![1u32, 2, 1]).is_err());
        let c = Carrier::finite(vec![0u32, 1, 2]).unwrap();
        assert!(c.contains(&2));
        assert!(!c.contains(&3));
        assert_eq!(c.witnesses().len(), 3);
    }

    #[test]
    fn rule_based_generation_is_deterministic_and_member_only() {
        let c = Carrier::rule_based(|v: &u32| v % 2 == 1, |v| *v, |n| (0..n as u32).map(|k| 2 * k + 1).collect(), 10);
        let w = c.witnesses();
        assert_eq!(w.len(), 10);
        assert!(w.iter().all(|v| c.contains(v)));
        assert_eq!(c.generate(4), c.generate(4));
    }

    #[test]
    fn square_of_rule_based_carrier() {
        let c = Carrier::rule_based(|_: &u32| true, |v| *v, |n| (0..n as u32).collect(), 3);
        let sq = c.square();
        assert_eq!(sq.witness_bound(), 9);
        let w = sq.witnesses();
        assert_eq!(w.len(), 9);
        assert_eq!(w[1].bottom, 1);
        let fin = Carrier::finite(vec![0u32, 1]).unwrap().square();
        assert_eq!(fin.finite_elements().unwrap().len(), 4);
    }
}
