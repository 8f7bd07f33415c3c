//! Gauge and twist equivalence of doubles, decided either by an exact closed
//! form or by bounded witness search.

use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::operation::NAryOperation;
use crate::products::Double;
use crate::structure::PolyadicStructure;
use crate::value::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `∃x,y: μ[a₁^{m−1},x] = μ[a₂^{m−1},y]` and the same for the bottoms.
    Gauge,
    /// `∃z: μ°²[a₁^{m−1}, b₂^{m−1}, z] = μ°²[a₂^{m−1}, b₁^{m−1}, z]`.
    Twist,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Gauge => "gauge",
            Relation::Twist => "twist",
        })
    }
}

pub type Rule<V> = Arc<dyn Fn(&Double<V>, &Double<V>) -> bool + Send + Sync>;

#[derive(Clone)]
pub enum EquivalenceDecision<V> {
    ExactRule { name: String, rule: Rule<V> },
    /// Witnesses range over the whole carrier when it is finite, else over
    /// the first `bound` generated elements.
    WitnessSearch { relation: Relation, bound: usize },
}

impl<V> fmt::Debug for EquivalenceDecision<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivalenceDecision::ExactRule { name, .. } => write!(f, "ExactRule({name})"),
            EquivalenceDecision::WitnessSearch { relation, bound } => write!(f, "WitnessSearch({relation}, {bound})"),
        }
    }
}

impl<V: Value> EquivalenceDecision<V> {
    pub fn exact(name: impl Into<String>, rule: impl Fn(&Double<V>, &Double<V>) -> bool + Send + Sync + 'static) -> Self {
        EquivalenceDecision::ExactRule {
            name: name.into(),
            rule: Arc::new(rule),
        }
    }

    pub fn twist(bound: usize) -> Self {
        EquivalenceDecision::WitnessSearch {
            relation: Relation::Twist,
            bound,
        }
    }

    pub fn gauge(bound: usize) -> Self {
        EquivalenceDecision::WitnessSearch {
            relation: Relation::Gauge,
            bound,
        }
    }

    /// `Ok(true)`, `Ok(false)`, or `Err(BoundExhausted)` when a bounded search
    /// over an infinite carrier finds nothing.
    pub fn decide(&self, s: &PolyadicStructure<V>, d1: &Double<V>, d2: &Double<V>) -> Result<bool> {
        match self {
            EquivalenceDecision::ExactRule { rule, .. } => Ok(rule(d1, d2)),
            EquivalenceDecision::WitnessSearch { relation, bound } => {
                let found = match relation {
                    Relation::Gauge => gauge_witness(s, d1, d2, *bound).is_some(),
                    Relation::Twist => twist_witness(s, d1, d2, *bound).is_some(),
                };
                match (found, s.carrier().is_finite()) {
                    (true, _) => Ok(true),
                    (false, true) => Ok(false),
                    (false, false) => Err(Error::BoundExhausted(*bound)),
                }
            }
        }
    }
}

pub(crate) fn search_space<V: Value>(s: &PolyadicStructure<V>, bound: usize) -> Vec<V> {
    match s.carrier().finite_elements() {
        Some(e) => e.to_vec(),
        None => s.carrier().generate(bound),
    }
}

fn power_then<V: Value>(op: &NAryOperation<V>, g: &V, x: &V) -> V {
    let mut args: SmallVec<[V; 16]> = SmallVec::from_elem(g.clone(), op.arity() - 1);
    args.push(x.clone());
    op.apply(&args)
}

/// The two sides of the twist relation at witness `z`.
pub fn twist_sides<V: Value>(s: &PolyadicStructure<V>, d1: &Double<V>, d2: &Double<V>, z: &V) -> (V, V) {
    let m = s.arity();
    let op2 = s.op().iterate(2);
    let side = |a: &V, b: &V| {
        let mut args: Vec<V> = Vec::with_capacity(2 * m - 1);
        args.extend(std::iter::repeat_n(a.clone(), m - 1));
        args.extend(std::iter::repeat_n(b.clone(), m - 1));
        args.push(z.clone());
        op2.apply(&args)
    };
    (side(&d1.top, &d2.bottom), side(&d2.top, &d1.bottom))
}

pub fn is_twist_witness<V: Value>(s: &PolyadicStructure<V>, d1: &Double<V>, d2: &Double<V>, z: &V) -> bool {
    let (l, r) = twist_sides(s, d1, d2, z);
    l.same(&r)
}

pub fn is_gauge_witness<V: Value>(s: &PolyadicStructure<V>, d1: &Double<V>, d2: &Double<V>, x: &V, y: &V) -> bool {
    let op = s.op();
    power_then(op, &d1.top, x).same(&power_then(op, &d2.top, y))
        && power_then(op, &d1.bottom, x).same(&power_then(op, &d2.bottom, y))
}

pub fn twist_witness<V: Value>(s: &PolyadicStructure<V>, d1: &Double<V>, d2: &Double<V>, bound: usize) -> Option<V> {
    search_space(s, bound)
        .into_iter()
        .find(|z| is_twist_witness(s, d1, d2, z))
}

pub fn gauge_witness<V: Value>(s: &PolyadicStructure<V>, d1: &Double<V>, d2: &Double<V>, bound: usize) -> Option<(V, V)> {
    let space = search_space(s, bound);
    space.iter().find_map(|x| {
        space
            .iter()
            .find(|y| is_gauge_witness(s, d1, d2, x, y))
            .map(|y| (x.clone(), y.clone()))
    })
}

pub fn gauge_equivalent<V: Value>(
    s: &PolyadicStructure<V>,
    d1: &Double<V>,
    d2: &Double<V>,
    dec: &EquivalenceDecision<V>,
) -> Result<bool> {
    match dec {
        EquivalenceDecision::WitnessSearch { bound, .. } => EquivalenceDecision::gauge(*bound).decide(s, d1, d2),
        exact => exact.decide(s, d1, d2),
    }
}

pub fn twist_equivalent<V: Value>(
    s: &PolyadicStructure<V>,
    d1: &Double<V>,
    d2: &Double<V>,
    dec: &EquivalenceDecision<V>,
) -> Result<bool> {
    match dec {
        EquivalenceDecision::WitnessSearch { bound, .. } => EquivalenceDecision::twist(*bound).decide(s, d1, d2),
        exact => exact.decide(s, d1, d2),
    }
}

/// Gauge witnesses built from a twist witness `z`:
/// `x = μ[b₂^{m−1}, z]`, `y = μ[b₁^{m−1}, z]`.
pub fn gauge_from_twist<V: Value>(s: &PolyadicStructure<V>, d1: &Double<V>, d2: &Double<V>, z: &V) -> (V, V) {
    (power_then(s.op(), &d2.bottom, z), power_then(s.op(), &d1.bottom, z))
}

/// A twist witness built from gauge witnesses: `z = μ[x, y, t₁..t_{m−2}]`.
pub fn twist_from_gauge<V: Value>(s: &PolyadicStructure<V>, x: &V, y: &V, pad: &V) -> V {
    let m = s.arity();
    let mut args = vec![x.clone(), y.clone()];
    args.extend(std::iter::repeat_n(pad.clone(), m - 2));
    s.op().apply(&args)
}

/// Twist witness for `d₁ ∼ d₃` from witnesses `z₁` (for `d₁ ∼ d₂`) and `z₂`
/// (for `d₂ ∼ d₃`): `z₃ = μ°³[a₂^{m−1}, b₂^{m−1}, z₁, z₂, t₁..t_{m−2}]`.
pub fn compose_twist_witnesses<V: Value>(s: &PolyadicStructure<V>, d2: &Double<V>, z1: &V, z2: &V, pad: &V) -> V {
    let m = s.arity();
    let mut args: Vec<V> = Vec::with_capacity(3 * m - 2);
    args.extend(std::iter::repeat_n(d2.top.clone(), m - 1));
    args.extend(std::iter::repeat_n(d2.bottom.clone(), m - 1));
    args.push(z1.clone());
    args.push(z2.clone());
    args.extend(std::iter::repeat_n(pad.clone(), m - 2));
    s.op().iterate(3).apply(&args)
}

/// Gauge witnesses for `d₁ ∼ d₃` from `(x₁,y₁)` and `(x₂,y₂)`:
/// `x₃ = μ°²[a₂^{m−1}, x₁, x₂, t..]`, `y₃ = μ°²[a₂^{m−1}, y₁, y₂, t..]`.
pub fn compose_gauge_witnesses<V: Value>(
    s: &PolyadicStructure<V>,
    d2: &Double<V>,
    (x1, y1): (&V, &V),
    (x2, y2): (&V, &V),
    pad: &V,
) -> (V, V) {
    let m = s.arity();
    let op2 = s.op().iterate(2);
    let build = |p: &V, q: &V| {
        let mut args: Vec<V> = Vec::with_capacity(2 * m - 1);
        args.extend(std::iter::repeat_n(d2.top.clone(), m - 1));
        args.push(p.clone());
        args.push(q.clone());
        args.extend(std::iter::repeat_n(pad.clone(), m - 2));
        op2.apply(&args)
    };
    (build(x1, x2), build(y1, y2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::worked::cyclic::{cyclic, CyclicOp};

    #[test]
    fn witness_conversions_hold_on_cyclic_structures() {
        for (k, m, op) in [(5, 3, CyclicOp::Add), (3, 2, CyclicOp::Add), (4, 3, CyclicOp::Mul)] {
            let s = cyclic(k, m, op);
            let sq = s.carrier().square();
            let doubles = sq.finite_elements().unwrap();
            for d1 in doubles {
                for d2 in doubles {
                    if let Some(z) = twist_witness(&s, d1, d2, 0) {
                        let (x, y) = gauge_from_twist(&s, d1, d2, &z);
                        assert!(is_gauge_witness(&s, d1, d2, &x, &y));
                    }
                    if let Some((x, y)) = gauge_witness(&s, d1, d2, 0) {
                        let z = twist_from_gauge(&s, &x, &y, &0);
                        assert!(is_twist_witness(&s, d1, d2, &z));
                    }
                }
            }
        }
    }

    #[test]
    fn finite_search_is_definite() {
        let s = cyclic(4, 3, CyclicOp::Mul);
        let dec = EquivalenceDecision::twist(1);
        // every pair is equivalent: z = 0 kills both sides
        assert!(dec.decide(&s, &Double::new(1, 2), &Double::new(3, 0)).unwrap());
        let z5 = cyclic(5, 3, CyclicOp::Add);
        assert!(!dec.decide(&z5, &Double::new(1, 2), &Double::new(3, 0)).unwrap());
        assert!(dec.decide(&z5, &Double::new(1, 2), &Double::new(4, 0)).unwrap());
    }
}
