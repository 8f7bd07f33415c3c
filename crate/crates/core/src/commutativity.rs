//! Full, semi and σ-commutativity of an n-ary operation.

use std::fmt;

use crate::error::{Error, Result};
use crate::exec::{CheckMode, Exec};
use crate::structure::PolyadicStructure;
use crate::tuples::search_tuples;
use crate::value::Value;

/// Strongest commutativity level that holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Commutativity {
    /// Invariant under every permutation of the arguments.
    Full,
    /// Invariant under swapping the first and last argument.
    Semi,
    /// Invariant under the given zero-based permutation.
    Sigma(Vec<usize>),
    None,
}

impl fmt::Display for Commutativity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Commutativity::Full => f.write_str("full"),
            Commutativity::Semi => f.write_str("semi"),
            Commutativity::Sigma(p) => {
                let one_based: Vec<String> = p.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, "sigma({})", one_based.join(" "))
            }
            Commutativity::None => f.write_str("none"),
        }
    }
}

fn validate_permutation(sigma: &[usize], n: usize) -> Result<()> {
    if sigma.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: sigma.len(),
        });
    }
    let mut seen = vec![false; n];
    for &i in sigma {
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(Error::Unsupported(format!("{sigma:?} is not a permutation of 0..{n}")));
        }
    }
    Ok(())
}

fn permuted<V: Value>(t: &[V], sigma: &[usize]) -> Vec<V> {
    sigma.iter().map(|&i| t[i].clone()).collect()
}

/// First tuple `t` with `μ[t_σ(1), .., t_σ(n)] ≠ μ[t]`, if any.
pub fn sigma_counterexample<V: Value>(
    s: &PolyadicStructure<V>,
    sigma: &[usize],
    mode: CheckMode,
) -> Result<Option<Vec<V>>> {
    let n = s.arity();
    validate_permutation(sigma, n)?;
    let op = s.op();
    let (hit, _) = search_tuples(s.carrier(), n, mode, Exec::default(), |t| {
        (!op.apply(&permuted(t, sigma)).same(&op.apply(t))).then(|| t.to_vec())
    })?;
    Ok(hit)
}

pub fn is_sigma_commutative<V: Value>(s: &PolyadicStructure<V>, sigma: &[usize], mode: CheckMode) -> Result<bool> {
    Ok(sigma_counterexample(s, sigma, mode)?.is_none())
}

/// First tuple breaking invariance under some adjacent transposition. Adjacent
/// transpositions generate the symmetric group, so none means full commutativity.
pub fn full_counterexample<V: Value>(s: &PolyadicStructure<V>, mode: CheckMode) -> Result<Option<Vec<V>>> {
    let n = s.arity();
    let op = s.op();
    let (hit, _) = search_tuples(s.carrier(), n, mode, Exec::default(), |t| {
        let base = op.apply(t);
        let mut u = t.to_vec();
        (0..n.saturating_sub(1))
            .any(|i| {
                u.swap(i, i + 1);
                let r = op.apply(&u);
                u.swap(i, i + 1);
                !r.same(&base)
            })
            .then(|| t.to_vec())
    })?;
    Ok(hit)
}

/// Semicommutativity: `μ[a, g₁..g_{n−2}, b] = μ[b, g₁..g_{n−2}, a]` for
/// every middle polyad.
pub fn is_semicommutative<V: Value>(s: &PolyadicStructure<V>, mode: CheckMode) -> Result<bool> {
    let n = s.arity();
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, n - 1);
    is_sigma_commutative(s, &swap, mode)
}

/// Reports the strongest level that holds: Full, then Semi, then the first of
/// `sigmas` that holds, else None.
pub fn commutativity_report<V: Value>(
    s: &PolyadicStructure<V>,
    mode: CheckMode,
    sigmas: &[Vec<usize>],
) -> Result<Commutativity> {
    if full_counterexample(s, mode)?.is_none() {
        return Ok(Commutativity::Full);
    }
    if is_semicommutative(s, mode)? {
        return Ok(Commutativity::Semi);
    }
    for sigma in sigmas {
        if is_sigma_commutative(s, sigma, mode)? {
            return Ok(Commutativity::Sigma(sigma.clone()));
        }
    }
    Ok(Commutativity::None)
}
