use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::value::Value;

pub type Evaluator<V> = Arc<dyn Fn(&[V]) -> V + Send + Sync>;

/// Stack buffer for polyads; the arities handled here are small.
pub(crate) type Polyad<V> = SmallVec<[V; 16]>;

/// An n-ary operation: an arity and a total evaluator on n-tuples.
#[derive(Clone)]
pub struct NAryOperation<V> {
    arity: usize,
    label: String,
    eval: Evaluator<V>,
}

impl<V> fmt::Debug for NAryOperation<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NAryOperation")
            .field("arity", &self.arity)
            .field("label", &self.label)
            .finish()
    }
}

impl<V: Value> NAryOperation<V> {
    pub fn new(arity: usize, label: impl Into<String>, eval: impl Fn(&[V]) -> V + Send + Sync + 'static) -> Self {
        assert!(arity >= 1, "operations have arity at least 1");
        NAryOperation {
            arity,
            label: label.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Applies the evaluator. The caller guarantees `args.len() == arity`.
    #[inline]
    pub fn apply(&self, args: &[V]) -> V {
        debug_assert_eq!(args.len(), self.arity);
        (self.eval)(args)
    }

    /// The `ell`-fold iterated product, of arity `ell·(arity−1)+1`.
    ///
    /// Nesting is to the left: the innermost product consumes the first
    /// `arity` arguments and each further product takes the running result
    /// followed by the next `arity−1` arguments.
    pub fn iterate(&self, ell: usize) -> NAryOperation<V> {
        assert!(ell >= 1, "iteration count must be at least 1");
        if ell == 1 {
            return self.clone();
        }
        let n = self.arity;
        let inner = self.eval.clone();
        NAryOperation {
            arity: iterated_arity(n, ell),
            label: format!("({})^{ell}", self.label),
            eval: Arc::new(move |args: &[V]| fold_left(&inner, n, args)),
        }
    }
}

pub fn iterated_arity(arity: usize, ell: usize) -> usize {
    ell * (arity - 1) + 1
}

pub(crate) fn fold_left<V: Value>(eval: &Evaluator<V>, n: usize, args: &[V]) -> V {
    let mut acc = eval(&args[..n]);
    if n == 1 {
        return acc;
    }
    let mut buf: Polyad<V> = SmallVec::with_capacity(n);
    for chunk in args[n..].chunks(n - 1) {
        buf.clear();
        buf.push(acc);
        buf.extend(chunk.iter().cloned());
        acc = eval(&buf);
    }
    acc
}
