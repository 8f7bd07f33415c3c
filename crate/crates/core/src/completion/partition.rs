//! Partitioning a finite domain of doubles into equivalence classes.

use crate::carrier::Canonicalizer;
use crate::error::Result;
use crate::exec::{find_first, Exec};
use crate::products::Double;
use crate::structure::PolyadicStructure;
use crate::value::Value;

use super::equivalence::EquivalenceDecision;

/// Union-find with path halving and union by size.
#[derive(Clone, Debug)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    /// Groups of indices, each sorted, ordered by smallest member.
    pub fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            let r = self.find(i);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(i);
        }
        out
    }
}

/// One equivalence class: its canonical label and its members in the domain.
#[derive(Clone, Debug)]
pub struct ClassDouble<V> {
    pub representative: Double<V>,
    pub structure_tag: String,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Partition<V> {
    pub domain: Vec<Double<V>>,
    pub classes: Vec<ClassDouble<V>>,
    class_of: Vec<usize>,
}

impl<V: Value> Partition<V> {
    fn from_groups(
        domain: Vec<Double<V>>,
        groups: Vec<Vec<usize>>,
        canonical: Option<&Canonicalizer<Double<V>>>,
        tag: &str,
    ) -> Self {
        let mut class_of = vec![0; domain.len()];
        let classes = groups
            .into_iter()
            .enumerate()
            .map(|(c, members)| {
                for &i in &members {
                    class_of[i] = c;
                }
                let first = &domain[members[0]];
                ClassDouble {
                    representative: canonical.map_or_else(|| first.clone(), |f| f(first)),
                    structure_tag: tag.to_string(),
                    members,
                }
            })
            .collect();
        Partition {
            domain,
            classes,
            class_of,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class index of the `i`-th domain element.
    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn representatives(&self) -> impl Iterator<Item = &Double<V>> {
        self.classes.iter().map(|c| &c.representative)
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = &Double<V>> {
        self.classes[class].members.iter().map(|&i| &self.domain[i])
    }

    pub fn class_with_representative(&self, d: &Double<V>) -> Option<usize> {
        self.classes.iter().position(|c| c.representative.same(d))
    }

    /// Whether each class is internally equivalent and no two classes are,
    /// checked on class representatives.
    pub fn is_consistent(&self, s: &PolyadicStructure<V>, dec: &EquivalenceDecision<V>) -> Result<bool> {
        for c in &self.classes {
            let first = &self.domain[c.members[0]];
            for &i in &c.members[1..] {
                if !dec.decide(s, first, &self.domain[i])? {
                    return Ok(false);
                }
            }
        }
        for (i, a) in self.classes.iter().enumerate() {
            for b in &self.classes[i + 1..] {
                if dec.decide(s, &self.domain[a.members[0]], &self.domain[b.members[0]])? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Leader scan: each element joins the first earlier class whose leader it is
/// equivalent to, else founds a new class. Relies on transitivity, which
/// [`super::check_equivalence_axioms`] tests separately.
///
/// Classes appear in order of their first member; the label is the
/// canonicalizer's image of that member, or the member itself.
pub fn partition_classes<V: Value>(
    s: &PolyadicStructure<V>,
    domain: Vec<Double<V>>,
    dec: &EquivalenceDecision<V>,
    canonical: Option<&Canonicalizer<Double<V>>>,
) -> Result<Partition<V>> {
    partition_classes_with(s, domain, dec, canonical, Exec::default())
}

pub fn partition_classes_with<V: Value>(
    s: &PolyadicStructure<V>,
    domain: Vec<Double<V>>,
    dec: &EquivalenceDecision<V>,
    canonical: Option<&Canonicalizer<Double<V>>>,
    exec: Exec,
) -> Result<Partition<V>> {
    let mut sets = DisjointSets::new(domain.len());
    let mut leaders: Vec<usize> = Vec::new();
    for i in 0..domain.len() {
        let hit = find_first(exec, leaders.len() as u64, |j| {
            let l = leaders[j as usize];
            match dec.decide(s, &domain[l], &domain[i]) {
                Ok(true) => Some(Ok(l)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            }
        });
        match hit.transpose()? {
            Some(l) => {
                sets.union(l, i);
            }
            None => leaders.push(i),
        }
    }
    let tag = s.name().to_string();
    Ok(Partition::from_groups(domain, sets.groups(), canonical, &tag))
}

/// Unions every equivalent pair, assuming nothing about transitivity. Costs
/// a quadratic number of decisions.
pub fn partition_pairwise<V: Value>(
    s: &PolyadicStructure<V>,
    domain: Vec<Double<V>>,
    dec: &EquivalenceDecision<V>,
) -> Result<Partition<V>> {
    let n = domain.len();
    let mut sets = DisjointSets::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if dec.decide(s, &domain[i], &domain[j])? {
                sets.union(i, j);
            }
        }
    }
    let tag = s.name().to_string();
    Ok(Partition::from_groups(domain, sets.groups(), None, &tag))
}
