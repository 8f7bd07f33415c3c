//! Distinguished elements and polyads: identities, zeros, neutral polyads,
//! querelements and the Dörnte relations.
//!
//! "For all g" quantifiers range over the carrier's witness list: the whole
//! carrier when finite, the first `witness_bound` members otherwise.

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::operation::Polyad;
use crate::structure::PolyadicStructure;
use crate::tuples::TupleSpace;
use crate::value::Value;

/// Largest number of (n−1)-polyads scanned when looking for zeros.
pub const ZERO_SCAN_LIMIT: u64 = 1 << 20;

/// `polyad` with `g` inserted at zero-based position `pos`.
pub(crate) fn with_inserted<V: Value>(polyad: &[V], g: &V, pos: usize) -> Polyad<V> {
    let mut out: Polyad<V> = SmallVec::with_capacity(polyad.len() + 1);
    out.extend(polyad[..pos].iter().cloned());
    out.push(g.clone());
    out.extend(polyad[pos..].iter().cloned());
    out
}

/// Positions `i` (zero-based) at which `μ[e, .., g, .., e] = g` holds for every `g`.
pub fn identity_positions<V: Value>(s: &PolyadicStructure<V>, e: &V) -> Vec<usize> {
    let n = s.arity();
    let tests = s.carrier().witnesses();
    let es = vec![e.clone(); n - 1];
    (0..n)
        .filter(|&i| {
            tests
                .iter()
                .all(|g| s.op().apply(&with_inserted(&es, g, i)).same(g))
        })
        .collect()
}

/// Every candidate that acts as an identity in at least one position, with
/// the positions where it does. One-sided identities show up here with a
/// partial position list.
pub fn positional_identities<V: Value>(s: &PolyadicStructure<V>) -> Vec<(V, Vec<usize>)> {
    s.carrier()
        .witnesses()
        .iter()
        .filter_map(|e| {
            let pos = identity_positions(s, e);
            (!pos.is_empty()).then(|| (e.clone(), pos))
        })
        .collect()
}

/// Elements that are identities in every position, in carrier order.
pub fn find_identities<V: Value>(s: &PolyadicStructure<V>) -> Vec<V> {
    let n = s.arity();
    positional_identities(s)
        .into_iter()
        .filter(|(_, pos)| pos.len() == n)
        .map(|(e, _)| e)
        .collect()
}

/// Elements `z` with `μ[g₁..g_{n−1}, z] = z` for every polyad and every
/// position of `z`.
pub fn find_zeros<V: Value>(s: &PolyadicStructure<V>) -> Vec<V> {
    let n = s.arity();
    let tests = s.carrier().witnesses();
    let mut width = tests.len();
    while width > 1 && (width as u64).checked_pow((n - 1) as u32).is_none_or(|c| c > ZERO_SCAN_LIMIT) {
        width -= 1;
    }
    let tests = &tests[..width];
    let space = TupleSpace::new(width, n - 1);
    let total = space.size().unwrap_or(0);
    s.carrier()
        .witnesses()
        .iter()
        .filter(|z| {
            let mut idx = vec![0; n - 1];
            (0..total).all(|i| {
                space.decode(i, &mut idx);
                let polyad: Vec<V> = idx.iter().map(|&j| tests[j].clone()).collect();
                (0..n).all(|p| s.op().apply(&with_inserted(&polyad, z, p)).same(z))
            })
        })
        .cloned()
        .collect()
}

/// Whether `polyad` (length n−1) is neutral: `μ[g, polyad] = g` for every
/// `g` at every one of the n positions.
pub fn is_neutral_polyad<V: Value>(s: &PolyadicStructure<V>, polyad: &[V]) -> Result<bool> {
    let n = s.arity();
    if polyad.len() + 1 != n {
        return Err(Error::ArityMismatch {
            expected: n - 1,
            got: polyad.len(),
        });
    }
    for p in polyad {
        s.check_member(p)?;
    }
    let tests = s.carrier().witnesses();
    Ok(tests
        .iter()
        .all(|g| (0..n).all(|i| s.op().apply(&with_inserted(polyad, g, i)).same(g))))
}

/// All `x` solving `μ[g^{n−1}, x] = g` with `x` in every position, in carrier order.
pub fn querelement_solutions<V: Value>(s: &PolyadicStructure<V>, g: &V) -> Vec<V> {
    let n = s.arity();
    let gs = vec![g.clone(); n - 1];
    s.carrier()
        .witnesses()
        .iter()
        .filter(|x| (0..n).all(|i| s.op().apply(&with_inserted(&gs, x, i)).same(g)))
        .cloned()
        .collect()
}

/// The querelement `ḡ` of `g`. The structure is assumed totally associative.
///
/// Multiple solutions are reported, never resolved.
pub fn querelement<V: Value>(s: &PolyadicStructure<V>, g: &V) -> Result<V> {
    s.check_member(g)?;
    let mut sols = querelement_solutions(s, g);
    match sols.len() {
        0 => Err(Error::NotFound {
            bound: s.carrier().witnesses().len(),
        }),
        1 => Ok(sols.remove(0)),
        _ => Err(Error::NotUnique(sols.iter().map(|v| s.render(v)).collect())),
    }
}

/// The Dörnte relations `μ[g, n_{h;i}] = μ[n_{h;j}, g] = g` for all placements
/// of `h̄` inside the neutral polyad `n_h = (h^{n−2}, h̄)`.
pub fn check_doernte<V: Value>(s: &PolyadicStructure<V>, g: &V, h: &V) -> Result<bool> {
    let n = s.arity();
    if n < 2 {
        return Err(Error::Unsupported("Dörnte relations need arity at least 2".into()));
    }
    s.check_member(g)?;
    let hbar = querelement(s, h)?;
    let hs = vec![h.clone(); n - 2];
    Ok((0..n - 1).all(|i| {
        let polyad = with_inserted(&hs, &hbar, i);
        let left = with_inserted(&polyad, g, 0);
        let right = with_inserted(&polyad, g, n - 1);
        s.op().apply(&left).same(g) && s.op().apply(&right).same(g)
    }))
}
