//! Class products, their representative-independence, and class quers.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exec::{find_first, Exec};
use crate::operation::NAryOperation;
use crate::products::{Double, QuiverSpec};
use crate::structure::PolyadicStructure;
use crate::tuples::rng;
use crate::value::Value;

use super::partition::{partition_classes, Partition};
use super::ClassSpace;

/// `[a;b]` with the base structure's element rendering.
pub fn render_class<V: Value>(base: &PolyadicStructure<V>, d: &Double<V>) -> String {
    format!("[{};{}]", base.render(&d.top), base.render(&d.bottom))
}

/// A partitioned domain of doubles together with the wiring used to
/// multiply classes.
#[derive(Clone)]
pub struct ClassAlgebra<V> {
    space: ClassSpace<V>,
    quiver: QuiverSpec,
    partition: Partition<V>,
}

impl<V: Value> ClassAlgebra<V> {
    pub fn new(space: ClassSpace<V>, quiver: QuiverSpec) -> Result<Self> {
        let partition = partition_classes(&space.base, space.domain.clone(), &space.decision, space.canonical.as_ref())?;
        Self::from_partition(space, quiver, partition)
    }

    pub fn from_partition(space: ClassSpace<V>, quiver: QuiverSpec, partition: Partition<V>) -> Result<Self> {
        if quiver.input_arity() != space.base.arity() {
            return Err(Error::ArityMismatch {
                expected: space.base.arity(),
                got: quiver.input_arity(),
            });
        }
        Ok(ClassAlgebra {
            space,
            quiver,
            partition,
        })
    }

    pub fn space(&self) -> &ClassSpace<V> {
        &self.space
    }

    pub fn base(&self) -> &PolyadicStructure<V> {
        &self.space.base
    }

    pub fn quiver(&self) -> &QuiverSpec {
        &self.quiver
    }

    pub fn partition(&self) -> &Partition<V> {
        &self.partition
    }

    /// Arity of the class product.
    pub fn arity(&self) -> usize {
        self.quiver.output_arity()
    }

    pub fn render(&self, d: &Double<V>) -> String {
        render_class(self.base(), d)
    }

    pub fn equivalent(&self, a: &Double<V>, b: &Double<V>) -> Result<bool> {
        self.space.decision.decide(self.base(), a, b)
    }

    /// Canonical label of the class of `d`: the structure's canonical form,
    /// else the representative of the partition class equivalent to `d`.
    pub fn label(&self, d: &Double<V>) -> Result<Double<V>> {
        if let Some(c) = &self.space.canonical {
            return Ok(c(d));
        }
        let reps: Vec<&Double<V>> = self.partition.representatives().collect();
        let hit = find_first(Exec::default(), reps.len() as u64, |i| {
            match self.equivalent(reps[i as usize], d) {
                Ok(true) => Some(Ok(i as usize)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            }
        });
        match hit.transpose()? {
            Some(i) => Ok(reps[i].clone()),
            None => Err(Error::NotFound {
                bound: self.partition.domain.len(),
            }),
        }
    }

    /// The wiring applied to the given doubles, without relabelling.
    pub fn raw_product(&self, args: &[Double<V>]) -> Double<V> {
        self.quiver.apply(self.base().op(), args)
    }

    pub fn product(&self, args: &[Double<V>]) -> Result<Double<V>> {
        self.label(&self.raw_product(args))
    }

    /// Replaces `args[position]` by `replacement` (which must be equivalent
    /// to it) and reports the swap if the two products are inequivalent.
    pub fn check_representative_swap(
        &self,
        args: &[Double<V>],
        position: usize,
        replacement: &Double<V>,
    ) -> Result<Option<SwapCounterexample<V>>> {
        if !self.equivalent(&args[position], replacement)? {
            return Err(Error::Unsupported(format!(
                "{} is not equivalent to {}",
                self.render(replacement),
                self.render(&args[position])
            )));
        }
        let before = self.raw_product(args);
        let mut swapped = args.to_vec();
        swapped[position] = replacement.clone();
        let after = self.raw_product(&swapped);
        Ok((!self.equivalent(&before, &after)?).then(|| SwapCounterexample {
            args: args.to_vec(),
            position,
            replacement: replacement.clone(),
            results: (before, after),
        }))
    }

    /// Samples class tuples and swaps one argument for another member of its
    /// class. Only classes with several domain members can be swapped, so the
    /// swapped position always draws from those.
    pub fn check_well_definedness(&self, samples: usize, seed: u64) -> Result<WellDefinedness<V>> {
        let n = self.arity();
        let p = &self.partition;
        let multi: Vec<usize> = (0..p.len()).filter(|&c| p.classes[c].members.len() > 1).collect();
        if multi.is_empty() || samples == 0 {
            return Ok(WellDefinedness::WellDefined { checked: 0 });
        }
        let mut r = rng(seed);
        let plans: Vec<(Vec<Double<V>>, usize, Double<V>)> = (0..samples)
            .map(|_| {
                let position = r.random_range(0..n);
                let mut args: Vec<Double<V>> = (0..n)
                    .map(|_| p.classes[r.random_range(0..p.len())].representative.clone())
                    .collect();
                let class = &p.classes[multi[r.random_range(0..multi.len())]];
                args[position] = class.representative.clone();
                let others: Vec<usize> = class
                    .members
                    .iter()
                    .copied()
                    .filter(|&i| !p.domain[i].same(&class.representative))
                    .collect();
                let pick = others[r.random_range(0..others.len())];
                (args, position, p.domain[pick].clone())
            })
            .collect();
        let hit = find_first(Exec::default(), plans.len() as u64, |i| {
            let (args, position, replacement) = &plans[i as usize];
            self.check_representative_swap(args, *position, replacement).transpose()
        });
        Ok(match hit.transpose()? {
            Some(c) => WellDefinedness::Counterexample(c),
            None => WellDefinedness::WellDefined { checked: samples },
        })
    }

    /// The class product as an operation. Results that cannot be labelled
    /// (outside a truncated domain) are returned unlabelled.
    pub fn operation(&self) -> NAryOperation<Double<V>> {
        let me = self.clone();
        NAryOperation::new(self.arity(), format!("classes [{}]", self.quiver), move |args: &[Double<V>]| {
            let raw = me.raw_product(args);
            me.label(&raw).unwrap_or(raw)
        })
    }

    /// Whether `μ̃[c, .., q, .., c]` (q at `slot`) is equivalent to `c`.
    pub fn quer_holds_at(&self, class: &Double<V>, quer: &Double<V>, slot: usize) -> Result<bool> {
        let mut args = vec![class.clone(); self.arity()];
        args[slot] = quer.clone();
        self.equivalent(&self.raw_product(&args), class)
    }

    /// The class quer by formula or search. The last slot is the designated
    /// one and must hold; the other slots are reported as they come out.
    pub fn quer(&self, class: &Double<V>, mode: QuerMode) -> Result<QuerOutcome<V>> {
        let n = self.arity();
        let m = self.base().arity();
        let op = self.base().op();
        let power = |x: &V, k: usize, y: &V| {
            let mut args = vec![x.clone(); k];
            args.extend(std::iter::repeat_n(y.clone(), m - k));
            op.apply(&args)
        };
        let (a, b) = (&class.top, &class.bottom);
        let candidate = match mode {
            QuerMode::ComponentwiseFormula => Some(Double::new(power(a, 1, b), power(a, m - 1, b))),
            QuerMode::PostFormula => {
                if m != 3 {
                    return Err(Error::Unsupported("the Post-like quer formula is ternary only".into()));
                }
                Some(Double::new(power(a, 2, b), power(a, 1, b)))
            }
            QuerMode::Search(bound) => {
                let mut found = None;
                for rep in self.partition.representatives().take(bound) {
                    if self.quer_holds_at(class, rep, n - 1)? {
                        found = Some(rep.clone());
                        break;
                    }
                }
                if found.is_none() {
                    return Err(Error::QuerNotFound(self.render(class)));
                }
                found
            }
        };
        let quer = self.label(&candidate.expect("set above"))?;
        if !self.quer_holds_at(class, &quer, n - 1)? {
            return Err(Error::QuerFormulaFailsVerification(self.render(class)));
        }
        let slots = (0..n).map(|i| self.quer_holds_at(class, &quer, i)).collect::<Result<_>>()?;
        Ok(QuerOutcome {
            class: class.clone(),
            quer,
            slots,
        })
    }

    /// Binary completions only: the inverse class `[b;a]`.
    pub fn inverse(&self, class: &Double<V>) -> Result<Double<V>> {
        if self.arity() != 2 {
            return Err(Error::Unsupported("inverses are defined for binary class products".into()));
        }
        self.label(&class.clone().swapped())
    }
}

/// The class product as an n-ary operation on class labels.
pub fn class_product<V: Value>(alg: &ClassAlgebra<V>) -> NAryOperation<Double<V>> {
    alg.operation()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuerMode {
    /// `[μ[a, b^{m−1}]; μ[a^{m−1}, b]]`.
    ComponentwiseFormula,
    /// `[μ[a², b]; μ[a, b²]]`, ternary only.
    PostFormula,
    /// First class representative, among the first `bound`, solving the quer equation.
    Search(usize),
}

#[derive(Clone, Debug)]
pub struct QuerOutcome<V> {
    pub class: Double<V>,
    pub quer: Double<V>,
    /// Whether the quer equation holds with the quer at each slot.
    pub slots: Vec<bool>,
}

#[derive(Clone, Debug)]
pub struct SwapCounterexample<V> {
    pub args: Vec<Double<V>>,
    pub position: usize,
    pub replacement: Double<V>,
    /// Products before and after the swap; they are not equivalent.
    pub results: (Double<V>, Double<V>),
}

impl<V: Value> fmt::Display for SwapCounterexample<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args.iter().map(|d| d.to_string()).collect();
        write!(
            f,
            "args [{}] with slot {} replaced by {}: {} vs {} are inequivalent",
            args.join(", "),
            self.position + 1,
            self.replacement,
            self.results.0,
            self.results.1
        )
    }
}

#[derive(Clone, Debug)]
pub enum WellDefinedness<V> {
    WellDefined { checked: usize },
    Counterexample(SwapCounterexample<V>),
}

impl<V> WellDefinedness<V> {
    pub fn holds(&self) -> bool {
        matches!(self, WellDefinedness::WellDefined { .. })
    }
}

impl<V: Value> fmt::Display for WellDefinedness<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WellDefinedness::WellDefined { checked } => write!(f, "well-defined({checked} swaps)"),
            WellDefinedness::Counterexample(c) => write!(f, "counterexample({c})"),
        }
    }
}
