//! Integer-valued recipes: ⟨ℕ₀,+⟩, ternary products of negatives, ternary
//! sums of odd naturals, and multiplicative residue classes.
//!
//! Each exact decision comes from the twist relation by cancellation in ℤ:
//! additive cases cancel `z` and halve, multiplicative cases cancel `z` and
//! take the (m−1)-th root of a positive product.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::carrier::Carrier;
use crate::completion::EquivalenceDecision;
use crate::error::{Error, Result};
use crate::operation::NAryOperation;
use crate::products::Double;
use crate::structure::PolyadicStructure;

use super::StructureRecipe;

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn sum(args: &[BigInt]) -> BigInt {
    args.iter().sum()
}

fn product(args: &[BigInt]) -> BigInt {
    args.iter().product()
}

fn cross_rule(name: &str) -> EquivalenceDecision<BigInt> {
    EquivalenceDecision::exact(name, |d1: &Double<BigInt>, d2: &Double<BigInt>| {
        &d1.top * &d2.bottom == &d2.top * &d1.bottom
    })
}

/// ⟨ℕ₀, +⟩ with doubles up to `limit` in each component.
pub fn nat0_monoid(limit: usize) -> StructureRecipe<BigInt> {
    let side = limit + 1;
    let carrier = Carrier::rule_based(
        |v: &BigInt| !v.is_negative(),
        BigInt::clone,
        |n| (0..n as i64).map(int).collect(),
        side,
    );
    let structure = PolyadicStructure::new("nat0", carrier, NAryOperation::new(2, "+", sum));
    StructureRecipe::new(
        "nat0",
        structure,
        Some(std::sync::Arc::new(|d: &Double<BigInt>| {
            let diff = &d.top - &d.bottom;
            if diff.is_negative() {
                Double::new(BigInt::zero(), -diff)
            } else {
                Double::new(diff, BigInt::zero())
            }
        })),
        EquivalenceDecision::exact("n1 + m2 = n2 + m1", |d1: &Double<BigInt>, d2: &Double<BigInt>| {
            &d1.top + &d2.bottom == &d2.top + &d1.bottom
        }),
        limit,
        side,
    )
}

/// Negative integers under the ternary product, components down to `-limit`.
pub fn neg_ternary(limit: usize) -> StructureRecipe<BigInt> {
    let carrier = Carrier::rule_based(
        |v: &BigInt| v.is_negative(),
        BigInt::clone,
        |n| (1..=n as i64).map(|k| int(-k)).collect(),
        limit,
    );
    let structure = PolyadicStructure::new("neg3", carrier, NAryOperation::new(3, "×", product));
    StructureRecipe::new(
        "neg3",
        structure,
        Some(std::sync::Arc::new(|d: &Double<BigInt>| {
            let g = d.top.gcd(&d.bottom);
            Double::new(&d.top / &g, &d.bottom / &g)
        })),
        cross_rule("p1 q2 = p2 q1"),
        limit,
        limit,
    )
}

/// Odd naturals under the ternary sum, components up to `limit`.
pub fn odd_ternary(limit: usize) -> StructureRecipe<BigInt> {
    let side = limit.div_ceil(2).max(1);
    let carrier = Carrier::rule_based(
        |v: &BigInt| v.is_positive() && v.is_odd(),
        BigInt::clone,
        |n| (0..n as i64).map(|k| int(2 * k + 1)).collect(),
        side,
    );
    let structure = PolyadicStructure::new("odd3", carrier, NAryOperation::new(3, "+", sum));
    StructureRecipe::new(
        "odd3",
        structure,
        Some(std::sync::Arc::new(|d: &Double<BigInt>| {
            let diff = &d.top - &d.bottom;
            if diff.is_positive() {
                Double::new(diff + 1, BigInt::one())
            } else {
                Double::new(BigInt::one(), BigInt::one() - diff)
            }
        })),
        EquivalenceDecision::exact("a1 - b1 = a2 - b2", |d1: &Double<BigInt>, d2: &Double<BigInt>| {
            &d1.top - &d1.bottom == &d2.top - &d2.bottom
        }),
        limit,
        side,
    )
}

/// Smallest `m` in `2..=bound` with `aᵐ ≡ a (mod b)`: the arity at which
/// products of class members stay in the class.
pub fn detect_residue_arity(a: u64, b: u64, bound: usize) -> Result<usize> {
    if b == 0 {
        return Err(Error::Unsupported("modulus must be positive".into()));
    }
    let (a, bb) = (a % b, b as u128);
    let mut power = (a as u128 * a as u128) % bb;
    for m in 2..=bound {
        if power == a as u128 {
            return Ok(m);
        }
        power = (power * a as u128) % bb;
    }
    Err(Error::NoClosedArity(bound))
}

/// `(a, .., a)` of length `m` if its product leaves the class, proving that
/// arity `m` is not closed.
pub fn residue_non_closure_witness(a: u64, b: u64, m: usize) -> Option<Vec<BigInt>> {
    let p = BigInt::from(a).pow(m as u32);
    (p.mod_floor(&BigInt::from(b)) != BigInt::from(a % b)).then(|| vec![BigInt::from(a); m])
}

/// The class `{bk + a : k ≥ 0}` under the m-fold product, `m` detected.
pub fn residue_structure(a: u64, b: u64, limit: usize) -> Result<StructureRecipe<BigInt>> {
    if a >= b {
        return Err(Error::Unsupported(format!("residue {a} must be below modulus {b}")));
    }
    let m = detect_residue_arity(a, b, b as usize + 1)?;
    let name = format!("res-{a}-{b}");
    let side = ((limit as u64).saturating_sub(a) / b + 1) as usize;
    let (ab, bb) = (int(a as i64), int(b as i64));
    let (ab2, bb2) = (ab.clone(), bb.clone());
    let carrier = Carrier::rule_based(
        move |v: &BigInt| !v.is_negative() && v.mod_floor(&bb2) == ab2,
        BigInt::clone,
        move |n| (0..n as i64).map(|k| int(k) * &bb + &ab).collect(),
        side,
    );
    let structure = PolyadicStructure::new(name.clone(), carrier, NAryOperation::new(m, "×", product));
    let (decision, canonical): (EquivalenceDecision<BigInt>, super::DoubleCanonicalizer<BigInt>) = if a == 0 {
        (
            EquivalenceDecision::exact("all doubles equivalent", |_: &Double<BigInt>, _: &Double<BigInt>| true),
            std::sync::Arc::new(|_: &Double<BigInt>| Double::new(BigInt::zero(), BigInt::zero())),
        )
    } else {
        let (ab, bb) = (int(a as i64), int(b as i64));
        (
            cross_rule("a1 b2 = a2 b1"),
            std::sync::Arc::new(move |d: &Double<BigInt>| {
                let g = d.top.gcd(&d.bottom);
                let (p, q) = (&d.top / &g, &d.bottom / &g);
                let k = (1..=b as i64).map(int).find(|k| {
                    (k * &p).mod_floor(&bb) == ab && (k * &q).mod_floor(&bb) == ab
                });
                match k {
                    Some(k) => Double::new(&k * p, k * q),
                    None => d.clone(),
                }
            }),
        )
    };
    Ok(StructureRecipe::new(&name, structure, Some(canonical), decision, limit, side))
}

/// Exponent of the prime `p` in `n`.
pub fn multiplicity(n: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut k = 0;
    while !n.is_zero() && (&n % &p).is_zero() {
        n /= &p;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: i64, b: i64) -> Double<BigInt> {
        Double::new(int(a), int(b))
    }

    #[test]
    fn nat0_rule_and_canonical() {
        let r = nat0_monoid(10);
        assert!(r.decide(&d(3, 1), &d(5, 3)).unwrap());
        assert_eq!(r.canonical(&d(7, 7)), d(0, 0));
        assert_eq!(r.canonical(&d(2, 9)), d(0, 7));
        assert_eq!(r.domain().len(), 121);
    }

    #[test]
    fn negatives() {
        let r = neg_ternary(10);
        assert!(r.decide(&d(-1, -2), &d(-2, -4)).unwrap());
        assert!(r.decide(&d(-4, -3), &d(-8, -6)).unwrap());
        assert_eq!(r.canonical(&d(-8, -6)), d(-4, -3));
        assert_eq!(r.structure.evaluate(&[int(-1), int(-2), int(-3)]).unwrap(), int(-6));
    }

    #[test]
    fn odds() {
        let r = odd_ternary(11);
        assert!(r.decide(&d(3, 1), &d(5, 3)).unwrap());
        assert!(r.decide(&d(5, 3), &d(7, 5)).unwrap());
        assert_eq!(r.canonical(&d(9, 3)), d(7, 1));
        assert_eq!(r.canonical(&d(3, 9)), d(1, 7));
        assert_eq!(r.canonical(&d(5, 5)), d(1, 1));
        assert_eq!(r.structure.evaluate(&[int(1), int(3), int(5)]).unwrap(), int(9));
        assert_eq!(r.domain().len(), 36);
    }

    #[test]
    fn residue_arity() {
        assert_eq!(detect_residue_arity(7, 10, 20).unwrap(), 5);
        assert_eq!(detect_residue_arity(3, 10, 20).unwrap(), 5);
        assert_eq!(detect_residue_arity(0, 10, 20).unwrap(), 2);
        assert_eq!(detect_residue_arity(1, 10, 20).unwrap(), 2);
        assert_eq!(detect_residue_arity(2, 4, 20), Err(Error::NoClosedArity(20)));
        for m in 2..5 {
            assert!(residue_non_closure_witness(7, 10, m).is_some());
        }
        assert!(residue_non_closure_witness(7, 10, 5).is_none());
    }

    #[test]
    fn residue_recipe() {
        let r = residue_structure(7, 10, 200).unwrap();
        assert_eq!(r.expected_arity, 5);
        assert!(r.decide(&d(7, 17), &d(77, 187)).unwrap());
        assert_eq!(r.canonical(&d(77, 187)), d(7, 17));
        assert_eq!(r.domain().len(), 400);
        assert!(residue_structure(10, 10, 5).is_err());
        let z = residue_structure(0, 10, 50).unwrap();
        assert!(z.decide(&d(0, 10), &d(20, 30)).unwrap());
    }

    #[test]
    fn multiplicity_counts_prime_powers() {
        assert_eq!(multiplicity(&int(7 * 7 * 7 * 17 * 17), 7), 3);
        assert_eq!(multiplicity(&int(11994367), 11), 2);
    }
}
