//! The classical binary completion: the embedding `Φ_SG` and the
//! factorization of monoid maps through the completion.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::seq::IndexedRandom;
use rand::Rng;

use crate::elements::find_identities;
use crate::error::{Error, Result};
use crate::exec::CheckMode;
use crate::group::verify_polyadic_group;
use crate::products::Double;
use crate::tuples::rng;
use crate::value::Value;
use crate::worked::cyclic::{cyclic, CyclicOp};

use super::build::CompletionGroup;
use super::classes::ClassAlgebra;

/// An abelian target group written additively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TargetGroup {
    Integers,
    IntegersMod(u32),
}

impl FromStr for TargetGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "integers" => Ok(TargetGroup::Integers),
            _ => s
                .strip_prefix("integers-mod-")
                .and_then(|k| k.parse().ok())
                .filter(|&k: &u32| k >= 1)
                .map(TargetGroup::IntegersMod)
                .ok_or_else(|| Error::Unsupported(format!("unknown target group `{s}`"))),
        }
    }
}

impl TargetGroup {
    pub fn reduce(&self, x: BigInt) -> BigInt {
        match self {
            TargetGroup::Integers => x,
            TargetGroup::IntegersMod(k) => x.mod_floor(&BigInt::from(*k)),
        }
    }

    pub fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a - b)
    }

    /// ℤ is a group by fiat; ℤ_k is checked exhaustively.
    pub fn verify(&self) -> Result<()> {
        match self {
            TargetGroup::Integers => Ok(()),
            TargetGroup::IntegersMod(k) => {
                let v = verify_polyadic_group(&cyclic(*k, 2, CyclicOp::Add), CheckMode::Exhaustive)?;
                if v.is_group() {
                    Ok(())
                } else {
                    Err(Error::TargetNotAGroup(v.to_string()))
                }
            }
        }
    }
}

fn require_binary<V: Value>(alg: &ClassAlgebra<V>) -> Result<()> {
    if alg.arity() != 2 || alg.base().arity() != 2 {
        return Err(Error::Unsupported(format!(
            "universal property is implemented for binary completions only (arity {})",
            alg.arity()
        )));
    }
    Ok(())
}

/// `Φ_SG(a) = [a·a; a]`, which needs no identity.
pub fn phi_sg<V: Value>(alg: &ClassAlgebra<V>, a: &V) -> Result<Double<V>> {
    require_binary(alg)?;
    let base = alg.base();
    base.check_member(a)?;
    alg.label(&Double::new(base.op().apply(&[a.clone(), a.clone()]), a.clone()))
}

/// Whether `Φ_SG(a) ∼ [a; e]`, or `None` when the base has no identity.
pub fn phi_sg_identity_form<V: Value>(alg: &ClassAlgebra<V>, a: &V) -> Result<Option<bool>> {
    let Some(e) = find_identities(alg.base()).into_iter().next() else {
        return Ok(None);
    };
    let lhs = phi_sg(alg, a)?;
    alg.equivalent(&lhs, &Double::new(a.clone(), e)).map(Some)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationVerdict {
    pub samples: usize,
}

pub type MonoidMap<V> = Arc<dyn Fn(&V) -> BigInt + Send + Sync>;

/// Checks on `samples` seeded draws that `phi` is a monoid map into the
/// target, that `Φ_GG′([a;b]) = Φ(a) − Φ(b)` is constant on classes and
/// multiplicative, and that `Φ_GG′ ∘ Φ_SG = Φ`.
pub fn check_universal_factorization<V: Value>(
    k: &CompletionGroup<V>,
    target: &TargetGroup,
    phi: MonoidMap<V>,
    samples: usize,
    seed: u64,
) -> Result<FactorizationVerdict> {
    let alg = &k.algebra;
    require_binary(alg)?;
    target.verify()?;
    let base = alg.base();
    let elems = base.carrier().witnesses();
    let partition = alg.partition();
    if elems.is_empty() || partition.is_empty() {
        return Ok(FactorizationVerdict { samples: 0 });
    }
    let f = |v: &V| target.reduce(phi(v));
    let phi_gg = |d: &Double<V>| target.sub(&f(&d.top), &f(&d.bottom));
    let mut r = rng(seed);
    for _ in 0..samples {
        let a = elems.choose(&mut r).expect("non-empty");
        let b = elems.choose(&mut r).expect("non-empty");
        let ab = base.op().apply(&[a.clone(), b.clone()]);
        if f(&ab) != target.add(&f(a), &f(b)) {
            return Err(Error::NotAHomomorphism(format!(
                "Φ({}) = {} but Φ({}) + Φ({}) = {}",
                base.render(&ab),
                f(&ab),
                base.render(a),
                base.render(b),
                target.add(&f(a), &f(b))
            )));
        }
        let i1 = r.random_range(0..partition.len());
        let c1 = &partition.classes[i1];
        let c2 = partition.classes.choose(&mut r).expect("non-empty");
        let value = phi_gg(&c1.representative);
        if let Some(m) = partition.members(i1).find(|m| phi_gg(m) != value) {
            return Err(Error::NotAHomomorphism(format!(
                "Φ_GG′ differs on {} and {} in the same class",
                alg.render(m),
                alg.render(&c1.representative)
            )));
        }
        let prod = alg.product(&[c1.representative.clone(), c2.representative.clone()])?;
        let expected = target.add(&value, &phi_gg(&c2.representative));
        if phi_gg(&prod) != expected {
            return Err(Error::NotAHomomorphism(format!(
                "Φ_GG′({}) ≠ Φ_GG′({}) + Φ_GG′({})",
                alg.render(&prod),
                alg.render(&c1.representative),
                alg.render(&c2.representative)
            )));
        }
        let embedded = phi_sg(alg, a)?;
        if phi_gg(&embedded) != f(a) {
            return Err(Error::NotAHomomorphism(format!(
                "Φ_GG′(Φ_SG({})) = {} but Φ({}) = {}",
                base.render(a),
                phi_gg(&embedded),
                base.render(a),
                f(a)
            )));
        }
    }
    Ok(FactorizationVerdict { samples })
}
