use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::assoc::{check_total_associativity, AssocVerdict};
use crate::carrier::Carrier;
use crate::commutativity::{commutativity_report, Commutativity};
use crate::elements::{find_identities, find_zeros};
use crate::error::{Error, Result};
use crate::exec::CheckMode;
use crate::operation::NAryOperation;
use crate::value::Value;

pub type Renderer<V> = Arc<dyn Fn(&V) -> String + Send + Sync>;

/// Cached structural facts about a [`PolyadicStructure`].
#[derive(Clone, Debug)]
pub struct StructureReport<V> {
    pub mode: CheckMode,
    pub totally_associative: AssocVerdict<V>,
    pub identities: Vec<V>,
    pub zeros: Vec<V>,
    pub commutativity: Commutativity,
}

/// A carrier with one n-ary operation.
#[derive(Clone)]
pub struct PolyadicStructure<V> {
    name: String,
    carrier: Carrier<V>,
    op: NAryOperation<V>,
    render: Option<Renderer<V>>,
    facts: Arc<OnceLock<StructureReport<V>>>,
}

impl<V: Value> fmt::Debug for PolyadicStructure<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PolyadicStructure")
            .field("name", &self.name)
            .field("arity", &self.op.arity())
            .field("finite", &self.carrier.is_finite())
            .finish()
    }
}

impl<V: Value> PolyadicStructure<V> {
    pub fn new(name: impl Into<String>, carrier: Carrier<V>, op: NAryOperation<V>) -> Self {
        PolyadicStructure {
            name: name.into(),
            carrier,
            op,
            render: None,
            facts: Arc::new(OnceLock::new()),
        }
    }

    pub fn with_renderer(mut self, render: impl Fn(&V) -> String + Send + Sync + 'static) -> Self {
        self.render = Some(Arc::new(render));
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn carrier(&self) -> &Carrier<V> {
        &self.carrier
    }

    pub fn op(&self) -> &NAryOperation<V> {
        &self.op
    }

    pub fn arity(&self) -> usize {
        self.op.arity()
    }

    pub fn render(&self, v: &V) -> String {
        match &self.render {
            Some(r) => r(v),
            None => v.to_string(),
        }
    }

    pub(crate) fn renderer(&self) -> Option<Renderer<V>> {
        self.render.clone()
    }

    pub(crate) fn check_member(&self, v: &V) -> Result<()> {
        if self.carrier.contains(v) {
            Ok(())
        } else {
            Err(Error::NonMember(self.render(v)))
        }
    }

    /// Applies the operation after checking arity and membership.
    pub fn evaluate(&self, args: &[V]) -> Result<V> {
        if args.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: args.len(),
            });
        }
        for a in args {
            self.check_member(a)?;
        }
        Ok(self.op.apply(args))
    }

    /// `g^<ell>`: the `ell`-fold iterated product on `ell·(n−1)+1` copies of `g`.
    pub fn polyadic_power(&self, g: &V, ell: usize) -> Result<V> {
        self.check_member(g)?;
        let it = self.op.iterate(ell);
        let args = vec![g.clone(); it.arity()];
        Ok(it.apply(&args))
    }

    /// Whether `g^<ell> = z`. `z` must be a zero of the structure.
    pub fn is_nilpotent(&self, g: &V, ell: usize, z: &V) -> Result<bool> {
        let zeros = find_zeros(self);
        if !zeros.iter().any(|x| x.same(z)) {
            return Err(Error::NotAZero(self.render(z)));
        }
        Ok(self.polyadic_power(g, ell)?.same(z))
    }

    /// Runs all structural checks, caching the first result.
    pub fn facts(&self, mode: CheckMode) -> Result<&StructureReport<V>> {
        if let Some(r) = self.facts.get() {
            if r.mode == mode {
                return Ok(r);
            }
        }
        let report = self.analyze(mode)?;
        let _ = self.facts.set(report);
        match self.facts.get() {
            Some(r) if r.mode == mode => Ok(r),
            _ => Err(Error::Unsupported(
                "facts already cached under a different check mode".into(),
            )),
        }
    }

    pub fn analyze(&self, mode: CheckMode) -> Result<StructureReport<V>> {
        Ok(StructureReport {
            mode,
            totally_associative: check_total_associativity(self, mode)?,
            identities: find_identities(self),
            zeros: find_zeros(self),
            commutativity: commutativity_report(self, mode, &[])?,
        })
    }
}
