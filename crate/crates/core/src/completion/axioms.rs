//! Sanity checks on equivalence decisions: the relation axioms with the
//! proof's witness constructions, and gauge/twist coincidence.

use rand::seq::IndexedRandom;

use crate::error::{Error, Result};
use crate::products::Double;
use crate::structure::PolyadicStructure;
use crate::tuples::rng;
use crate::value::Value;

use super::equivalence::{
    compose_gauge_witnesses, compose_twist_witnesses, gauge_from_twist, gauge_witness, is_gauge_witness,
    is_twist_witness, twist_witness, EquivalenceDecision,
};
use super::partition::{partition_pairwise, Partition};
use super::ClassSpace;

#[derive(Clone, Debug)]
pub struct AxiomsVerdict<V> {
    pub samples: usize,
    pub reflexivity_failures: Vec<Double<V>>,
    pub symmetry_failures: Vec<(Double<V>, Double<V>)>,
    pub transitivity_failures: Vec<(Double<V>, Double<V>, Double<V>)>,
    /// Triples where the composed twist and gauge witnesses were verified.
    pub construction_checked: usize,
    /// Triples where a composed witness failed its equation.
    pub construction_failures: Vec<(Double<V>, Double<V>, Double<V>)>,
    /// Triples skipped because no twist witness was found within the bound.
    pub construction_skipped: usize,
    /// Pairs where the decision and gauge witness search definitely disagree.
    pub gauge_disagreements: Vec<(Double<V>, Double<V>)>,
}

impl<V> AxiomsVerdict<V> {
    pub fn is_equivalence(&self) -> bool {
        self.reflexivity_failures.is_empty() && self.symmetry_failures.is_empty() && self.transitivity_failures.is_empty()
    }

    pub fn holds(&self) -> bool {
        self.is_equivalence() && self.construction_failures.is_empty() && self.gauge_disagreements.is_empty()
    }
}

fn definite(r: Result<bool>) -> Result<Option<bool>> {
    match r {
        Ok(b) => Ok(Some(b)),
        Err(Error::BoundExhausted(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Samples `samples` triples `d₁ ∼ d₂ ∼ d₃` from the domain and checks
/// reflexivity, symmetry and transitivity of the decision. Where twist
/// witnesses `z₁, z₂` exist within the space's search bound, the composed
/// witnesses for `d₁ ∼ d₃` (twist and gauge form) are verified directly.
/// Every sampled pair is also cross-checked against gauge witness search.
pub fn check_equivalence_axioms<V: Value>(space: &ClassSpace<V>, samples: usize, seed: u64) -> Result<AxiomsVerdict<V>> {
    let s = &space.base;
    let dec = &space.decision;
    let domain = &space.domain;
    let bound = space.search_bound;
    let pad = s
        .carrier()
        .witnesses()
        .first()
        .cloned()
        .ok_or_else(|| Error::Unsupported("empty carrier".into()))?;
    let mut v = AxiomsVerdict {
        samples,
        reflexivity_failures: vec![],
        symmetry_failures: vec![],
        transitivity_failures: vec![],
        construction_checked: 0,
        construction_failures: vec![],
        construction_skipped: 0,
        gauge_disagreements: vec![],
    };
    if domain.is_empty() {
        return Ok(v);
    }
    let mut r = rng(seed);
    let related = |d: &Double<V>| -> Result<Vec<usize>> {
        let mut out = vec![];
        for (i, x) in domain.iter().enumerate() {
            if dec.decide(s, d, x)? {
                out.push(i);
            }
        }
        Ok(out)
    };
    let gauge_check = |a: &Double<V>, b: &Double<V>, said: bool, v: &mut AxiomsVerdict<V>| -> Result<()> {
        if let Some(g) = definite(EquivalenceDecision::gauge(bound).decide(s, a, b))? {
            if g != said {
                v.gauge_disagreements.push((a.clone(), b.clone()));
            }
        }
        Ok(())
    };
    for _ in 0..samples {
        let d1 = domain.choose(&mut r).expect("non-empty").clone();
        if !dec.decide(s, &d1, &d1)? {
            v.reflexivity_failures.push(d1.clone());
        }
        let other = domain.choose(&mut r).expect("non-empty").clone();
        let (there, back) = (dec.decide(s, &d1, &other)?, dec.decide(s, &other, &d1)?);
        if there != back {
            v.symmetry_failures.push((d1.clone(), other.clone()));
        }
        gauge_check(&d1, &other, there, &mut v)?;

        let near1 = related(&d1)?;
        let Some(&i2) = near1.choose(&mut r) else { continue };
        let d2 = domain[i2].clone();
        gauge_check(&d1, &d2, true, &mut v)?;
        let near2 = related(&d2)?;
        let Some(&i3) = near2.choose(&mut r) else { continue };
        let d3 = domain[i3].clone();
        if !dec.decide(s, &d1, &d3)? {
            v.transitivity_failures.push((d1.clone(), d2.clone(), d3.clone()));
        }
        let (Some(z1), Some(z2)) = (twist_witness(s, &d1, &d2, bound), twist_witness(s, &d2, &d3, bound)) else {
            v.construction_skipped += 1;
            continue;
        };
        let z3 = compose_twist_witnesses(s, &d2, &z1, &z2, &pad);
        let g1 = gauge_from_twist(s, &d1, &d2, &z1);
        let g2 = gauge_from_twist(s, &d2, &d3, &z2);
        let (x3, y3) = compose_gauge_witnesses(s, &d2, (&g1.0, &g1.1), (&g2.0, &g2.1), &pad);
        let ok = is_twist_witness(s, &d1, &d3, &z3)
            && is_gauge_witness(s, &d1, &d2, &g1.0, &g1.1)
            && is_gauge_witness(s, &d2, &d3, &g2.0, &g2.1)
            && is_gauge_witness(s, &d1, &d3, &x3, &y3);
        if ok {
            v.construction_checked += 1;
        } else {
            v.construction_failures.push((d1, d2, d3));
        }
    }
    Ok(v)
}

#[derive(Clone, Debug)]
pub struct CoincidenceVerdict<V> {
    pub gauge: Partition<V>,
    pub twist: Partition<V>,
    /// Pairs with `(gauge, twist)` answers that differ.
    pub disagreements: Vec<(Double<V>, Double<V>, bool, bool)>,
}

impl<V> CoincidenceVerdict<V> {
    pub fn coincide(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Both relations on every pair of doubles of a finite structure, witnesses
/// ranging over the whole carrier.
pub fn check_relation_coincidence<V: Value>(s: &PolyadicStructure<V>) -> Result<CoincidenceVerdict<V>> {
    let domain = s
        .carrier()
        .square()
        .finite_elements()
        .ok_or(Error::ExhaustiveOnInfiniteCarrier)?
        .to_vec();
    let mut disagreements = vec![];
    for (i, a) in domain.iter().enumerate() {
        for b in &domain[i..] {
            let g = gauge_witness(s, a, b, 0).is_some();
            let t = twist_witness(s, a, b, 0).is_some();
            if g != t {
                disagreements.push((a.clone(), b.clone(), g, t));
            }
        }
    }
    Ok(CoincidenceVerdict {
        gauge: partition_pairwise(s, domain.clone(), &EquivalenceDecision::gauge(0))?,
        twist: partition_pairwise(s, domain, &EquivalenceDecision::twist(0))?,
        disagreements,
    })
}
