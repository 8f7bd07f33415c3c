//! Total associativity: invariance of a doubled product under all placements
//! of the inner product inside a fixed (2n−1)-polyad.

use std::fmt;

use smallvec::SmallVec;

use crate::error::Result;
use crate::exec::{CheckMode, Exec};
use crate::operation::{NAryOperation, Polyad};
use crate::structure::PolyadicStructure;
use crate::tuples::search_tuples;
use crate::value::Value;

#[derive(Clone, Debug)]
pub enum AssocVerdict<V> {
    ProvedExhaustive { tuples: u64 },
    PassedSampled { count: usize },
    Failed(AssocCounterexample<V>),
}

/// A (2n−1)-polyad on which two placements of the inner product disagree.
#[derive(Clone, Debug)]
pub struct AssocCounterexample<V> {
    pub tuple: Vec<V>,
    pub placements: (usize, usize),
    pub results: (V, V),
}

impl<V> AssocVerdict<V> {
    pub fn holds(&self) -> bool {
        !matches!(self, AssocVerdict::Failed(_))
    }

    pub fn counterexample(&self) -> Option<&AssocCounterexample<V>> {
        match self {
            AssocVerdict::Failed(c) => Some(c),
            _ => None,
        }
    }
}

impl<V: fmt::Display> fmt::Display for AssocVerdict<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AssocVerdict::ProvedExhaustive { tuples } => write!(f, "proved-exhaustive({tuples} tuples)"),
            AssocVerdict::PassedSampled { count } => write!(f, "passed-sampled({count})"),
            AssocVerdict::Failed(c) => write!(f, "failed({c})"),
        }
    }
}

impl<V: fmt::Display> fmt::Display for AssocCounterexample<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.tuple.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "tuple [{}]: inner product at {} gives {}, at {} gives {}",
            t.join(", "),
            self.placements.0 + 1,
            self.results.0,
            self.placements.1 + 1,
            self.results.1
        )
    }
}

impl<V: Value> AssocCounterexample<V> {
    /// Re-evaluates both placements; true if they still disagree.
    pub fn replay(&self, s: &PolyadicStructure<V>) -> bool {
        let op = s.op();
        if self.tuple.len() != 2 * op.arity() - 1 {
            return false;
        }
        let a = evaluate_placement(op, &self.tuple, self.placements.0);
        let b = evaluate_placement(op, &self.tuple, self.placements.1);
        !a.same(&b)
    }
}

/// `μ[t₁..t_p, μ[t_{p+1}..t_{p+n}], ...]` for a (2n−1)-polyad `t`, `p` zero-based.
pub fn evaluate_placement<V: Value>(op: &NAryOperation<V>, t: &[V], p: usize) -> V {
    let n = op.arity();
    let inner = op.apply(&t[p..p + n]);
    let mut outer: Polyad<V> = SmallVec::with_capacity(n);
    outer.extend(t[..p].iter().cloned());
    outer.push(inner);
    outer.extend(t[p + n..].iter().cloned());
    op.apply(&outer)
}

fn first_violation<V: Value>(op: &NAryOperation<V>, t: &[V]) -> Option<AssocCounterexample<V>> {
    let first = evaluate_placement(op, t, 0);
    (1..op.arity()).find_map(|p| {
        let r = evaluate_placement(op, t, p);
        (!r.same(&first)).then(|| AssocCounterexample {
            tuple: t.to_vec(),
            placements: (0, p),
            results: (first.clone(), r),
        })
    })
}

pub fn check_total_associativity<V: Value>(s: &PolyadicStructure<V>, mode: CheckMode) -> Result<AssocVerdict<V>> {
    check_total_associativity_with(s, mode, Exec::default())
}

/// As [`check_total_associativity`], with explicit scheduling. The
/// counterexample reported is the first in row-major tuple order (exhaustive)
/// or sample order (sampled), whatever the schedule.
pub fn check_total_associativity_with<V: Value>(
    s: &PolyadicStructure<V>,
    mode: CheckMode,
    exec: Exec,
) -> Result<AssocVerdict<V>> {
    let op = s.op();
    let len = 2 * op.arity() - 1;
    let (found, total) = search_tuples(s.carrier(), len, mode, exec, |t| first_violation(op, t))?;
    Ok(match (found, mode) {
        (Some(c), _) => AssocVerdict::Failed(c),
        (None, CheckMode::Exhaustive) => AssocVerdict::ProvedExhaustive { tuples: total },
        (None, CheckMode::Sampled { .. }) => AssocVerdict::PassedSampled { count: total as usize },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::carrier::Carrier;
    use crate::worked::cyclic::{cyclic, CyclicOp};

    #[test]
    fn derived_cyclic_structures_are_associative() {
        for (k, m) in [(3, 3), (4, 2), (2, 5)] {
            let s = cyclic(k, m, CyclicOp::Add);
            let v = check_total_associativity(&s, CheckMode::Exhaustive).unwrap();
            assert!(matches!(v, AssocVerdict::ProvedExhaustive { .. }), "{k} {m}");
        }
    }

    #[test]
    fn corrupted_table_fails_with_replayable_counterexample() {
        // ternary addition mod 3 with the entry for (0,0,0) changed to 1
        let carrier = Carrier::finite(vec![0u32, 1, 2]).unwrap();
        let op = NAryOperation::new(3, "bad", |a: &[u32]| {
            if a == [0, 0, 0] {
                1
            } else {
                a.iter().sum::<u32>() % 3
            }
        });
        let s = PolyadicStructure::new("bad", carrier, op);
        let v = check_total_associativity(&s, CheckMode::Exhaustive).unwrap();
        let c = v.counterexample().expect("must fail");
        assert!(c.replay(&s));
        // independent brute force over all placements, row-major order
        let brute = (0..243u32)
            .map(|i| (0..5).rev().map(|d| (i / 3u32.pow(d)) % 3).collect::<Vec<_>>())
            .find(|t| {
                let f = |x: &[u32]| if x == [0, 0, 0] { 1 } else { x.iter().sum::<u32>() % 3 };
                let r: Vec<u32> = (0..3)
                    .map(|p| {
                        let mut o = t[..p].to_vec();
                        o.push(f(&t[p..p + 3]));
                        o.extend_from_slice(&t[p + 3..]);
                        f(&o)
                    })
                    .collect();
                r.iter().any(|x| *x != r[0])
            })
            .unwrap();
        assert_eq!(c.tuple, brute);
    }

    #[test]
    fn exhaustive_on_rule_based_carrier_is_an_error() {
        let carrier = Carrier::rule_based(|_: &u32| true, |v| *v, |n| (0..n as u32).collect(), 5);
        let s = PolyadicStructure::new("n", carrier, NAryOperation::new(2, "+", |a: &[u32]| a[0] + a[1]));
        assert_eq!(
            check_total_associativity(&s, CheckMode::Exhaustive).unwrap_err(),
            Error::ExhaustiveOnInfiniteCarrier
        );
        assert!(check_total_associativity(&s, CheckMode::sampled(200, 1)).unwrap().holds());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let s = cyclic(3, 3, CyclicOp::Mul);
        let a = check_total_associativity_with(&s, CheckMode::Exhaustive, Exec::Sequential).unwrap();
        let b = check_total_associativity_with(&s, CheckMode::Exhaustive, Exec::Parallel).unwrap();
        assert_eq!(a.to_string(), b.to_string());
    }
}
