//! Assembly of the n-ary group completion and its JSON report.

use std::fmt;

use rand::seq::IndexedRandom;
use serde::Serialize;

use crate::assoc::{check_total_associativity, AssocVerdict};
use crate::carrier::Carrier;
use crate::error::{Error, Result};
use crate::exec::CheckMode;
use crate::group::verify_polyadic_group;
use crate::products::{hetero_power, Double, QuiverSpec};
use crate::structure::PolyadicStructure;
use crate::tuples::{rng, TupleSpace};
use crate::value::Value;

use super::classes::{ClassAlgebra, QuerMode, QuerOutcome, WellDefinedness};
use super::partition::ClassDouble;
use super::ClassSpace;

/// Largest class tuple space verified exhaustively; larger ones are sampled.
const EXHAUSTIVE_GROUP_LIMIT: u64 = 2_000_000;

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    /// Sample count for every sampled stage.
    pub samples: usize,
    pub seed: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { samples: 1000, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupStatus {
    Group(String),
    NotAGroup(String),
    Skipped(String),
}

impl fmt::Display for GroupStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupStatus::Group(d) => write!(f, "group({d})"),
            GroupStatus::NotAGroup(d) => write!(f, "not-a-group({d})"),
            GroupStatus::Skipped(d) => write!(f, "skipped({d})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CompletionReport<V> {
    /// Number of doubles in the partitioned domain.
    pub domain_size: usize,
    pub associative: AssocVerdict<Double<V>>,
    pub well_defined: WellDefinedness<V>,
    pub group: GroupStatus,
}

#[derive(Clone)]
pub struct CompletionGroup<V> {
    pub m: usize,
    pub n: usize,
    pub quiver_name: String,
    pub algebra: ClassAlgebra<V>,
    /// Per class, in class order; absent when an earlier stage failed.
    pub quers: Option<Vec<QuerOutcome<V>>>,
    pub report: CompletionReport<V>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum SizeHint {
    Count(usize),
    Label(&'static str),
}

#[derive(Serialize)]
struct ClassJson {
    rep: [String; 2],
    size_hint: SizeHint,
}

#[derive(Serialize)]
struct ReportJson {
    associative: String,
    well_defined: String,
    group: String,
}

#[derive(Serialize)]
struct CompletionJson {
    m: usize,
    n: usize,
    quiver: String,
    classes: Vec<ClassJson>,
    quer: Vec<[[String; 2]; 2]>,
    report: ReportJson,
}

impl<V: Value> CompletionGroup<V> {
    pub fn is_group(&self) -> bool {
        matches!(self.report.group, GroupStatus::Group(_))
    }

    pub fn classes(&self) -> &[ClassDouble<V>] {
        &self.algebra.partition().classes
    }

    pub fn product(&self, args: &[Double<V>]) -> Result<Double<V>> {
        self.algebra.product(args)
    }

    /// The quer of the class labelled `rep`, if computed.
    pub fn quer_of(&self, rep: &Double<V>) -> Option<&Double<V>> {
        self.quers.as_ref()?.iter().find(|q| q.class.same(rep)).map(|q| &q.quer)
    }

    fn pair(&self, d: &Double<V>) -> [String; 2] {
        let b = self.algebra.base();
        [b.render(&d.top), b.render(&d.bottom)]
    }

    /// Pretty JSON with the fixed key order m, n, quiver, classes, quer, report.
    pub fn to_json(&self) -> String {
        let finite = self.algebra.base().carrier().is_finite();
        let doc = CompletionJson {
            m: self.m,
            n: self.n,
            quiver: self.quiver_name.clone(),
            classes: self
                .classes()
                .iter()
                .map(|c| ClassJson {
                    rep: self.pair(&c.representative),
                    size_hint: if finite {
                        SizeHint::Count(c.members.len())
                    } else {
                        SizeHint::Label("infinite")
                    },
                })
                .collect(),
            quer: self
                .quers
                .iter()
                .flatten()
                .map(|q| [self.pair(&q.class), self.pair(&q.quer)])
                .collect(),
            report: ReportJson {
                associative: self.report.associative.to_string(),
                well_defined: self.report.well_defined.to_string(),
                group: self.report.group.to_string(),
            },
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }
}

/// Partition, class product, well-definedness, class quers and group check,
/// in that order. A failing stage leaves later stages skipped and the quer
/// table absent; the report records why.
pub fn build_completion<V: Value>(
    space: ClassSpace<V>,
    quiver: &QuiverSpec,
    quiver_name: &str,
    quer_mode: QuerMode,
    opts: BuildOptions,
) -> Result<CompletionGroup<V>> {
    let base = space.base.clone();
    let m = base.arity();
    let doubles = hetero_power(&base, quiver)?;
    let assoc_mode = if base.carrier().is_finite() {
        CheckMode::Exhaustive
    } else {
        CheckMode::sampled(opts.samples, opts.seed)
    };
    let associative = check_total_associativity(doubles.structure(), assoc_mode)?;
    let domain_size = space.domain.len();
    let algebra = ClassAlgebra::new(space, quiver.clone())?;
    let n = algebra.arity();
    let well_defined = algebra.check_well_definedness(opts.samples, opts.seed)?;

    let mut quers = None;
    let group = if !associative.holds() {
        GroupStatus::Skipped("product of doubles is not associative".into())
    } else if !well_defined.holds() {
        GroupStatus::Skipped("class product is not well defined".into())
    } else {
        let mut out = Vec::with_capacity(algebra.partition().len());
        let mut failure = None;
        for c in algebra.partition().representatives() {
            match algebra.quer(c, quer_mode) {
                Ok(q) => out.push(q),
                Err(e @ (Error::QuerNotFound(_) | Error::QuerFormulaFailsVerification(_))) => {
                    failure = Some(e.to_string());
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        match failure {
            Some(f) => GroupStatus::NotAGroup(f),
            None => {
                let status = verify_classes(&algebra, &out, opts)?;
                quers = Some(out);
                status
            }
        }
    };
    Ok(CompletionGroup {
        m,
        n,
        quiver_name: quiver_name.to_string(),
        algebra,
        quers,
        report: CompletionReport {
            domain_size,
            associative,
            well_defined,
            group,
        },
    })
}

fn verify_classes<V: Value>(alg: &ClassAlgebra<V>, quers: &[QuerOutcome<V>], opts: BuildOptions) -> Result<GroupStatus> {
    let reps: Vec<Double<V>> = alg.partition().representatives().cloned().collect();
    let n = alg.arity();
    let complete = alg.base().carrier().is_finite();
    let small = TupleSpace::new(reps.len(), 2 * n - 1)
        .size()
        .is_ok_and(|s| s <= EXHAUSTIVE_GROUP_LIMIT);
    if complete && small {
        let carrier = Carrier::finite(reps)?;
        let s = PolyadicStructure::new("classes", carrier, alg.operation());
        let v = verify_polyadic_group(&s, CheckMode::Exhaustive)?;
        let label = format!("exhaustive over {} classes", alg.partition().len());
        return Ok(if v.is_group() {
            GroupStatus::Group(label)
        } else {
            GroupStatus::NotAGroup(v.to_string())
        });
    }
    // Truncated class set: associativity on sampled class tuples, the quer of
    // every class, and the Dörnte relations on sampled pairs.
    let mut r = rng(opts.seed);
    let op = alg.operation();
    let len = 2 * n - 1;
    for _ in 0..opts.samples {
        let t: Vec<Double<V>> = (0..len).map(|_| reps.choose(&mut r).expect("classes").clone()).collect();
        let inner = |p: usize| {
            let mut args = t[..p].to_vec();
            args.push(op.apply(&t[p..p + n]));
            args.extend_from_slice(&t[p + n..]);
            op.apply(&args)
        };
        let first = inner(0);
        if let Some(p) = (1..n).find(|&p| !alg.equivalent(&inner(p), &first).unwrap_or(false)) {
            let shown: Vec<String> = t.iter().map(|d| alg.render(d)).collect();
            return Ok(GroupStatus::NotAGroup(format!(
                "class product placements 1 and {} differ on [{}]",
                p + 1,
                shown.join(", ")
            )));
        }
    }
    for _ in 0..opts.samples {
        let g = reps.choose(&mut r).expect("classes");
        let hq = quers.choose(&mut r).expect("quers");
        for i in 0..n - 1 {
            let mut polyad = vec![hq.class.clone(); n - 2];
            polyad.insert(i, hq.quer.clone());
            let mut left = vec![g.clone()];
            left.extend(polyad.iter().cloned());
            let mut right = polyad;
            right.push(g.clone());
            if !alg.equivalent(&op.apply(&left), g)? || !alg.equivalent(&op.apply(&right), g)? {
                return Ok(GroupStatus::NotAGroup(format!(
                    "Dörnte relation fails for g = {}, h = {}",
                    alg.render(g),
                    alg.render(&hq.class)
                )));
            }
        }
    }
    Ok(GroupStatus::Group(format!(
        "truncated to {} classes, {} sampled tuples",
        reps.len(),
        opts.samples
    )))
}
