//! Text format for finite operation tables.
//!
//! ```text
//! arity 3
//! size 2
//! 0
//! 1
//! ...            (size^arity result indices, row-major)
//! labels         (optional, then one label per element)
//! e
//! a
//! ```

use std::fmt::Write as _;
use std::sync::Arc;

use crate::carrier::Carrier;
use crate::error::{Error, Result};
use crate::operation::NAryOperation;
use crate::structure::PolyadicStructure;
use crate::tuples::TupleSpace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    pub arity: usize,
    pub size: usize,
    /// `size^arity` result indices in row-major order.
    pub entries: Vec<u32>,
    pub labels: Option<Vec<String>>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn header(lines: &mut impl Iterator<Item = (usize, String)>, key: &str) -> Result<usize> {
    let (no, line) = lines.next().ok_or_else(|| parse_err(0, format!("missing `{key}` line")))?;
    let rest = line
        .strip_prefix(key)
        .ok_or_else(|| parse_err(no, format!("expected `{key} <int>`")))?;
    rest.trim()
        .parse()
        .map_err(|_| parse_err(no, format!("bad {key} `{}`", rest.trim())))
}

impl CayleyTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim().to_string()))
            .filter(|(_, l)| !l.is_empty());
        let arity = header(&mut lines, "arity")?;
        let size = header(&mut lines, "size")?;
        if arity == 0 || size == 0 {
            return Err(parse_err(2, "arity and size must be positive"));
        }
        let count = TupleSpace::new(size, arity).size()?;
        let mut entries = Vec::with_capacity(count as usize);
        let mut last = 2;
        while (entries.len() as u64) < count {
            let (no, line) = lines
                .next()
                .ok_or_else(|| parse_err(last, format!("expected {count} entries, found {}", entries.len())))?;
            let v: u32 = line.parse().map_err(|_| parse_err(no, format!("bad entry `{line}`")))?;
            if v as usize >= size {
                return Err(parse_err(no, format!("entry {v} out of range 0..{size}")));
            }
            entries.push(v);
            last = no;
        }
        let labels = match lines.next() {
            None => None,
            Some((no, l)) if l == "labels" => {
                let labels: Vec<String> = lines.by_ref().take(size).map(|(_, l)| l).collect();
                if labels.len() != size {
                    return Err(parse_err(no, format!("expected {size} labels, found {}", labels.len())));
                }
                Some(labels)
            }
            Some((no, l)) => return Err(parse_err(no, format!("unexpected `{l}` after table"))),
        };
        if let Some((no, l)) = lines.next() {
            return Err(parse_err(no, format!("unexpected `{l}` after labels")));
        }
        Ok(CayleyTable {
            arity,
            size,
            entries,
            labels,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("arity {}\nsize {}\n", self.arity, self.size);
        for e in &self.entries {
            let _ = writeln!(out, "{e}");
        }
        if let Some(labels) = &self.labels {
            out.push_str("labels\n");
            for l in labels {
                let _ = writeln!(out, "{l}");
            }
        }
        out
    }

    /// Tabulates an operation on a finite carrier; elements become their indices.
    pub fn from_structure<V: crate::value::Value>(s: &PolyadicStructure<V>) -> Result<Self> {
        let elems = s.carrier().finite_elements().ok_or(Error::ExhaustiveOnInfiniteCarrier)?;
        let (arity, size) = (s.arity(), elems.len());
        let space = TupleSpace::new(size, arity);
        let entries = (0..space.size()?)
            .map(|i| {
                let args: Vec<V> = space.tuple(i).into_iter().map(|j| elems[j].clone()).collect();
                let r = s.op().apply(&args);
                crate::value::position_of(elems, &r)
                    .map(|j| j as u32)
                    .ok_or_else(|| Error::NonMember(s.render(&r)))
            })
            .collect::<Result<_>>()?;
        Ok(CayleyTable {
            arity,
            size,
            entries,
            labels: Some(elems.iter().map(|v| s.render(v)).collect()),
        })
    }

    pub fn into_structure(self, name: impl Into<String>) -> PolyadicStructure<u32> {
        let name = name.into();
        let CayleyTable {
            arity,
            size,
            entries,
            labels,
        } = self;
        let carrier = Carrier::finite((0..size as u32).collect()).expect("indices are distinct");
        let entries = Arc::new(entries);
        let op = NAryOperation::new(arity, name.clone(), move |args: &[u32]| {
            let idx = args.iter().fold(0usize, |acc, &a| acc * size + a as usize);
            entries[idx]
        });
        let s = PolyadicStructure::new(name, carrier, op);
        match labels {
            Some(labels) => s.with_renderer(move |v: &u32| labels[*v as usize].clone()),
            None => s,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::check_total_associativity;
    use crate::exec::CheckMode;
    use crate::worked::cyclic::{cyclic, CyclicOp};

    #[test]
    fn round_trip_through_text() {
        let t = CayleyTable::from_structure(&cyclic(3, 3, CyclicOp::Add)).unwrap();
        assert_eq!(t.entries.len(), 27);
        let back = CayleyTable::parse(&t.to_text()).unwrap();
        assert_eq!(back, t);
        let s = back.into_structure("z3");
        assert_eq!(s.evaluate(&[1, 2, 2]).unwrap(), 2);
        assert!(check_total_associativity(&s, CheckMode::Exhaustive).unwrap().holds());
    }

    #[test]
    fn labels_render() {
        let s = CayleyTable::parse("arity 2\nsize 2\n0\n1\n1\n0\nlabels\ne\na\n")
            .unwrap()
            .into_structure("z2");
        assert_eq!(s.render(&1), "a");
        assert_eq!(s.evaluate(&[1, 1]).unwrap(), 0);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = |t: &str| match CayleyTable::parse(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(bad("arity 2\nsize 2\n0\n1\n7\n0\n"), 5);
        assert_eq!(bad("arity 2\nsize 2\n0\nx\n"), 4);
        assert_eq!(bad("arity 2\nsize 2\n0\n1\n"), 4);
        assert_eq!(bad("ary 2\n"), 1);
        assert_eq!(bad("arity 1\nsize 1\n0\nlabels\n"), 4);
        assert_eq!(bad("arity 1\nsize 1\n0\n0\n"), 4);
    }
}
