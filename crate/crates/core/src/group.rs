//! Polyadic group verification: total associativity plus unique solvability
//! of `μ[g₁..x..g_{n−1}] = h` for `x` at every position.

use std::fmt;

use crate::assoc::{check_total_associativity, AssocVerdict};
use crate::elements::{check_doernte, querelement, with_inserted};
use crate::error::Result;
use crate::exec::{find_first, CheckMode, Exec};
use crate::structure::PolyadicStructure;
use crate::tuples::{search_tuples, TupleSpace};
use crate::value::{position_of, Value};

/// An equation `μ[polyad with x at position] = target` without a unique solution.
#[derive(Clone, Debug)]
pub struct SolvabilityFailure<V> {
    pub polyad: Vec<V>,
    /// Zero-based position of the unknown.
    pub position: usize,
    pub target: V,
    /// Number of solutions found among the searched elements (0 or ≥ 2).
    pub solutions: usize,
}

impl<V: Value> fmt::Display for SolvabilityFailure<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut slots: Vec<String> = self.polyad.iter().map(|v| v.to_string()).collect();
        slots.insert(self.position, "x".into());
        write!(f, "μ[{}] = {} has {} solution(s)", slots.join(", "), self.target, self.solutions)
    }
}

#[derive(Clone, Debug)]
pub struct GroupVerdict<V> {
    pub associativity: AssocVerdict<V>,
    pub solvability: Option<SolvabilityFailure<V>>,
}

impl<V> GroupVerdict<V> {
    pub fn is_group(&self) -> bool {
        self.associativity.holds() && self.solvability.is_none()
    }
}

impl<V: Value> fmt::Display for GroupVerdict<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_group() {
            return write!(f, "group ({})", self.associativity);
        }
        f.write_str("not-a-group: ")?;
        if !self.associativity.holds() {
            write!(f, "associativity {}", self.associativity)?;
            if self.solvability.is_some() {
                f.write_str("; ")?;
            }
        }
        if let Some(s) = &self.solvability {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Finite carriers: every map `x ↦ μ[.., x, ..]` must be a bijection.
fn bijection_failure<V: Value>(s: &PolyadicStructure<V>, elems: &[V], exec: Exec) -> Result<Option<SolvabilityFailure<V>>> {
    let n = s.arity();
    let k = elems.len();
    let space = TupleSpace::new(k, n - 1);
    let total = space.size()?;
    let positions = n as u64;
    Ok(find_first(exec, total * positions, |i| {
        let idx = space.tuple(i / positions);
        let position = (i % positions) as usize;
        let polyad: Vec<V> = idx.iter().map(|&j| elems[j].clone()).collect();
        let mut hits = vec![0usize; k];
        for x in elems {
            let r = s.op().apply(&with_inserted(&polyad, x, position));
            if let Some(j) = position_of(elems, &r) {
                hits[j] += 1;
            }
        }
        hits.iter().position(|&h| h != 1).map(|j| SolvabilityFailure {
            polyad,
            position,
            target: elems[j].clone(),
            solutions: hits[j],
        })
    }))
}

/// Sampled: random (polyad, target) equations, solved over the witness list.
fn sampled_failure<V: Value>(s: &PolyadicStructure<V>, mode: CheckMode) -> Result<Option<SolvabilityFailure<V>>> {
    let n = s.arity();
    let witnesses = s.carrier().witnesses();
    let (hit, _) = search_tuples(s.carrier(), n, mode, Exec::default(), |t| {
        let (polyad, target) = (&t[..n - 1], &t[n - 1]);
        (0..n).find_map(|position| {
            let solutions = witnesses
                .iter()
                .filter(|x| s.op().apply(&with_inserted(polyad, x, position)).same(target))
                .count();
            (solutions != 1).then(|| SolvabilityFailure {
                polyad: polyad.to_vec(),
                position,
                target: target.clone(),
                solutions,
            })
        })
    })?;
    Ok(hit)
}

/// Exhaustive mode needs a finite carrier. Sampled mode searches for solutions
/// among the witness list, so on rule-based carriers a missing solution means
/// "not found within the witness bound".
pub fn verify_polyadic_group<V: Value>(s: &PolyadicStructure<V>, mode: CheckMode) -> Result<GroupVerdict<V>> {
    let associativity = check_total_associativity(s, mode)?;
    let solvability = match (mode, s.carrier().finite_elements()) {
        (CheckMode::Exhaustive, Some(elems)) => bijection_failure(s, elems, Exec::default())?,
        (CheckMode::Exhaustive, None) => unreachable!("exhaustive associativity rejects rule-based carriers"),
        (CheckMode::Sampled { .. }, _) => sampled_failure(s, mode)?,
    };
    Ok(GroupVerdict {
        associativity,
        solvability,
    })
}

/// Diagrammatic definition: associativity, a unique querelement for every
/// witness, and the Dörnte relations for every pair of witnesses.
pub fn verify_diagrammatic<V: Value>(s: &PolyadicStructure<V>, mode: CheckMode) -> Result<bool> {
    if !check_total_associativity(s, mode)?.holds() {
        return Ok(false);
    }
    let w = s.carrier().witnesses();
    for h in w.iter() {
        if querelement(s, h).is_err() {
            return Ok(false);
        }
        for g in w.iter() {
            if !check_doernte(s, g, h)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::worked::cyclic::{cyclic, CyclicOp};

    #[test]
    fn cyclic_addition_is_a_group() {
        let s = cyclic(5, 3, CyclicOp::Add);
        let v = verify_polyadic_group(&s, CheckMode::Exhaustive).unwrap();
        assert!(v.is_group(), "{v}");
        assert!(verify_diagrammatic(&s, CheckMode::Exhaustive).unwrap());
    }

    #[test]
    fn multiplication_mod_4_is_not() {
        let s = cyclic(4, 3, CyclicOp::Mul);
        let v = verify_polyadic_group(&s, CheckMode::Exhaustive).unwrap();
        assert!(!v.is_group());
        let f = v.solvability.unwrap();
        // μ[0, 0, x] = 0 has four solutions
        assert_eq!((f.polyad, f.position, f.target, f.solutions), (vec![0, 0], 0, 0, 4));
        assert!(!verify_diagrammatic(&s, CheckMode::Exhaustive).unwrap());
    }

    #[test]
    fn both_definitions_agree_on_small_cyclic_structures() {
        for k in 2..=5 {
            for m in 2..=4 {
                for op in [CyclicOp::Add, CyclicOp::Mul] {
                    let s = cyclic(k, m, op);
                    let a = verify_polyadic_group(&s, CheckMode::Exhaustive).unwrap().is_group();
                    let b = verify_diagrammatic(&s, CheckMode::Exhaustive).unwrap();
                    assert_eq!(a, b, "z{k} {op:?} {m}");
                }
            }
        }
    }
}
