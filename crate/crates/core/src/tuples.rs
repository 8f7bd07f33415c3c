//! Row-major enumeration and seeded sampling of index tuples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::carrier::Carrier;
use crate::error::{Error, Result};
use crate::exec::{find_first, CheckMode, Exec};
use crate::operation::Polyad;
use crate::value::Value;

/// All tuples of length `len` over `0..base`, first coordinate most significant.
#[derive(Clone, Copy, Debug)]
pub struct TupleSpace {
    pub base: usize,
    pub len: usize,
}

impl TupleSpace {
    pub fn new(base: usize, len: usize) -> Self {
        TupleSpace { base, len }
    }

    pub fn size(&self) -> Result<u64> {
        (self.base as u64)
            .checked_pow(self.len as u32)
            .ok_or(Error::TupleSpaceTooLarge {
                base: self.base,
                len: self.len,
            })
    }

    pub fn decode(&self, mut index: u64, out: &mut [usize]) {
        debug_assert_eq!(out.len(), self.len);
        let base = self.base as u64;
        for slot in out.iter_mut().rev() {
            *slot = (index % base) as usize;
            index /= base;
        }
    }

    pub fn tuple(&self, index: u64) -> Vec<usize> {
        let mut out = vec![0; self.len];
        self.decode(index, &mut out);
        out
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` index tuples drawn uniformly from `0..base`, reproducible from `seed`.
pub fn sample_tuples(base: usize, len: usize, count: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| (0..len).map(|_| rng.random_range(0..base)).collect())
        .collect()
}

/// Runs `f` over length-`len` tuples of carrier elements: every tuple of a
/// finite carrier in row-major order, or `count` seeded samples from the
/// witness list. Returns the first hit and the number of tuples in scope.
pub(crate) fn search_tuples<V, R, F>(
    carrier: &Carrier<V>,
    len: usize,
    mode: CheckMode,
    exec: Exec,
    f: F,
) -> Result<(Option<R>, u64)>
where
    V: Value,
    R: Send,
    F: Fn(&[V]) -> Option<R> + Sync + Send,
{
    match mode {
        CheckMode::Exhaustive => {
            let elems = carrier.finite_elements().ok_or(Error::ExhaustiveOnInfiniteCarrier)?;
            let space = TupleSpace::new(elems.len(), len);
            let total = space.size()?;
            let hit = find_first(exec, total, |i| {
                let mut idx: smallvec::SmallVec<[usize; 16]> = smallvec::SmallVec::from_elem(0, len);
                space.decode(i, &mut idx);
                let t: Polyad<V> = idx.iter().map(|&j| elems[j].clone()).collect();
                f(&t)
            });
            Ok((hit, total))
        }
        CheckMode::Sampled { count, seed } => {
            let elems = carrier.witnesses();
            if elems.is_empty() {
                return Ok((None, 0));
            }
            let samples = sample_tuples(elems.len(), len, count, seed);
            let hit = find_first(exec, samples.len() as u64, |i| {
                let t: Polyad<V> = samples[i as usize].iter().map(|&j| elems[j].clone()).collect();
                f(&t)
            });
            Ok((hit, count as u64))
        }
    }
}
