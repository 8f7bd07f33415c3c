use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use super::double::{Component, Double};
use crate::error::{Error, Result};
use crate::operation::NAryOperation;
use crate::value::Value;

/// One output component of a doubles product. Slots are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Wire {
    /// The base operation applied to exactly m picks.
    Product(Vec<(usize, Component)>),
    /// A single input component passed through unchanged.
    Intact(usize, Component),
}

impl Wire {
    pub fn picks(&self) -> Vec<(usize, Component)> {
        match self {
            Wire::Product(p) => p.clone(),
            Wire::Intact(s, c) => vec![(*s, *c)],
        }
    }

    fn eval<V: Value>(&self, op: &NAryOperation<V>, args: &[Double<V>]) -> V {
        match self {
            Wire::Product(p) => {
                let picked: SmallVec<[V; 16]> = p.iter().map(|&(s, c)| args[s - 1].get(c).clone()).collect();
                op.apply(&picked)
            }
            Wire::Intact(s, c) => args[s - 1].get(*c).clone(),
        }
    }
}

impl fmt::Display for Wire {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, c) in self.picks() {
            write!(f, "({s},{})", c.letter())?;
        }
        Ok(())
    }
}

/// `n = m − ((m−1)/2)·ℓ_id`, defined only when the result is an integer.
pub fn arity_after_intact(m: usize, ell_id: usize) -> Result<usize> {
    if m < 2 {
        return Err(Error::InvalidQuiver(format!("input arity {m} is below 2")));
    }
    match ell_id {
        0 => Ok(m),
        1 if (m - 1).is_multiple_of(2) => Ok(m - (m - 1) / 2),
        1 => Err(Error::NotQuantized { m, ell_id }),
        _ => Err(Error::InvalidQuiver(format!("{ell_id} intact elements; at most 1 allowed"))),
    }
}

/// Wiring of a product on doubles: m-ary base operation in, n-ary product out.
///
/// Only valid wirings can be constructed: the arity law holds and every
/// (slot, component) input is consumed exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiverSpec {
    input_arity: usize,
    output_arity: usize,
    top: Wire,
    bottom: Wire,
}

impl QuiverSpec {
    pub fn new(input_arity: usize, top: Wire, bottom: Wire) -> Result<Self> {
        let m = input_arity;
        let ell_id = [&top, &bottom].iter().filter(|w| matches!(w, Wire::Intact(..))).count();
        let n = arity_after_intact(m, ell_id)?;
        let mut used = vec![[false; 2]; n];
        for (name, wire) in [("top", &top), ("bottom", &bottom)] {
            if let Wire::Product(p) = wire {
                if p.len() != m {
                    return Err(Error::InvalidQuiver(format!("{name} wire has {} picks, expected {m}", p.len())));
                }
            }
            for (s, c) in wire.picks() {
                if s == 0 || s > n {
                    return Err(Error::InvalidQuiver(format!("slot {s} outside 1..={n}")));
                }
                if std::mem::replace(&mut used[s - 1][c as usize], true) {
                    return Err(Error::InvalidQuiver(format!("input ({s},{}) used twice", c.letter())));
                }
            }
        }
        if let Some(s) = used.iter().position(|u| !(u[0] && u[1])) {
            let c = if used[s][0] { 'B' } else { 'T' };
            return Err(Error::InvalidQuiver(format!("input ({},{c}) never used", s + 1)));
        }
        Ok(QuiverSpec {
            input_arity: m,
            output_arity: n,
            top,
            bottom,
        })
    }

    /// Top and bottom multiplied independently.
    pub fn componentwise(m: usize) -> Result<Self> {
        let wire = |c| Wire::Product((1..=m).map(|s| (s, c)).collect());
        QuiverSpec::new(m, wire(Component::Top), wire(Component::Bottom))
    }

    pub fn input_arity(&self) -> usize {
        self.input_arity
    }

    pub fn output_arity(&self) -> usize {
        self.output_arity
    }

    pub fn intact_count(&self) -> usize {
        [&self.top, &self.bottom]
            .iter()
            .filter(|w| matches!(w, Wire::Intact(..)))
            .count()
    }

    pub fn top(&self) -> &Wire {
        &self.top
    }

    pub fn bottom(&self) -> &Wire {
        &self.bottom
    }

    pub fn is_componentwise(&self) -> bool {
        QuiverSpec::componentwise(self.input_arity).is_ok_and(|c| &c == self)
    }

    /// Applies the wiring to `n` doubles. Panics on a wrong argument count.
    pub fn apply<V: Value>(&self, op: &NAryOperation<V>, args: &[Double<V>]) -> Double<V> {
        assert_eq!(args.len(), self.output_arity, "quiver expects {} doubles", self.output_arity);
        Double::new(self.top.eval(op, args), self.bottom.eval(op, args))
    }

    /// The product on doubles as an n-ary operation.
    pub fn operation<V: Value>(&self, op: &NAryOperation<V>) -> NAryOperation<Double<V>> {
        let q = self.clone();
        let base = op.clone();
        NAryOperation::new(self.output_arity, self.to_string(), move |args: &[Double<V>]| q.apply(&base, args))
    }
}

impl fmt::Display for QuiverSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}<-{} intact={}; top={}; bottom={}",
            self.output_arity,
            self.input_arity,
            self.intact_count(),
            self.top,
            self.bottom
        )
    }
}

fn parse_picks(text: &str) -> Result<Vec<(usize, Component)>> {
    let bad = || Error::InvalidQuiver(format!("bad pick list `{text}`"));
    let text = text.trim();
    let inner = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
    inner
        .split(")(")
        .map(|p| {
            let (s, c) = p.split_once(',').ok_or_else(bad)?;
            let s: usize = s.trim().parse().map_err(|_| bad())?;
            let c = match c.trim() {
                "T" => Component::Top,
                "B" => Component::Bottom,
                _ => return Err(bad()),
            };
            Ok((s, c))
        })
        .collect()
}

fn wire_from(picks: Vec<(usize, Component)>) -> Wire {
    match picks.as_slice() {
        [(s, c)] => Wire::Intact(*s, *c),
        _ => Wire::Product(picks),
    }
}

impl FromStr for QuiverSpec {
    type Err = Error;

    /// Parses `n<-m intact=ℓ; top=(s,c)...; bottom=(s,c)...`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |what: &str| Error::InvalidQuiver(format!("{what} in `{text}`"));
        let parts: Vec<&str> = text.split(';').map(str::trim).collect();
        let [head, top, bottom] = parts.as_slice() else {
            return Err(bad("expected three `;`-separated parts"));
        };
        let (arities, intact) = head.split_once(' ').ok_or_else(|| bad("missing intact count"))?;
        let (n, m) = arities.split_once("<-").ok_or_else(|| bad("missing `n<-m`"))?;
        let n: usize = n.trim().parse().map_err(|_| bad("bad output arity"))?;
        let m: usize = m.trim().parse().map_err(|_| bad("bad input arity"))?;
        let ell: usize = intact
            .trim()
            .strip_prefix("intact=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| bad("bad intact count"))?;
        let top = top.strip_prefix("top=").ok_or_else(|| bad("missing `top=`"))?;
        let bottom = bottom.strip_prefix("bottom=").ok_or_else(|| bad("missing `bottom=`"))?;
        let q = QuiverSpec::new(m, wire_from(parse_picks(top)?), wire_from(parse_picks(bottom)?))?;
        if q.output_arity != n || q.intact_count() != ell {
            return Err(bad("declared arity or intact count disagrees with the wiring"));
        }
        Ok(q)
    }
}

pub const BUILTIN_QUIVERS: &[&str] = &[
    "componentwise-<m>",
    "twisted-binary",
    "ternary-to-binary-a",
    "ternary-to-binary-b",
    "post-ternary",
    "post-5ary",
    "five-to-three-intact",
];

pub fn builtin_quiver(name: &str) -> Result<QuiverSpec> {
    use Component::{Bottom as B, Top as T};
    let unknown = || Error::UnknownQuiver(name.to_string());
    if let Some(m) = name.strip_prefix("componentwise-") {
        let m: usize = m.parse().map_err(|_| unknown())?;
        return QuiverSpec::componentwise(m);
    }
    let p = |picks: &[(usize, Component)]| Wire::Product(picks.to_vec());
    match name {
        "twisted-binary" => QuiverSpec::new(2, p(&[(1, T), (2, B)]), p(&[(2, T), (1, B)])),
        "ternary-to-binary-a" => QuiverSpec::new(3, p(&[(1, T), (1, B), (2, T)]), Wire::Intact(2, B)),
        "ternary-to-binary-b" => QuiverSpec::new(3, p(&[(1, T), (2, B), (2, T)]), Wire::Intact(1, B)),
        "post-ternary" => QuiverSpec::new(3, p(&[(1, T), (2, B), (3, T)]), p(&[(1, B), (2, T), (3, B)])),
        "post-5ary" => QuiverSpec::new(
            5,
            p(&[(1, T), (2, B), (3, T), (4, B), (5, T)]),
            p(&[(1, B), (2, T), (3, B), (4, T), (5, B)]),
        ),
        "five-to-three-intact" => QuiverSpec::new(5, p(&[(1, T), (2, B), (3, T), (1, B), (2, T)]), Wire::Intact(3, B)),
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn arity_law_table() {
        assert_eq!(arity_after_intact(3, 1).unwrap(), 2);
        assert_eq!(arity_after_intact(5, 1).unwrap(), 3);
        assert_eq!(arity_after_intact(7, 1).unwrap(), 4);
        assert_eq!(arity_after_intact(6, 0).unwrap(), 6);
        assert_eq!(arity_after_intact(4, 1), Err(Error::NotQuantized { m: 4, ell_id: 1 }));
    }

    #[test]
    fn builtin_wirings() {
        let q = builtin_quiver("post-ternary").unwrap();
        assert_eq!(q.to_string(), "3<-3 intact=0; top=(1,T)(2,B)(3,T); bottom=(1,B)(2,T)(3,B)");
        let q = builtin_quiver("five-to-three-intact").unwrap();
        assert_eq!(q.output_arity(), 3);
        assert_eq!(q.bottom(), &Wire::Intact(3, Component::Bottom));
        let q = builtin_quiver("ternary-to-binary-a").unwrap();
        assert_eq!(q.to_string(), "2<-3 intact=1; top=(1,T)(1,B)(2,T); bottom=(2,B)");
        assert!(builtin_quiver("componentwise-4").unwrap().is_componentwise());
        assert!(!builtin_quiver("twisted-binary").unwrap().is_componentwise());
        assert!(matches!(builtin_quiver("post-7ary"), Err(Error::UnknownQuiver(_))));
        for name in BUILTIN_QUIVERS {
            let name = name.replace("<m>", "3");
            let q = builtin_quiver(&name).unwrap();
            assert_eq!(q.to_string().parse::<QuiverSpec>().unwrap(), q);
        }
    }

    #[test]
    fn invalid_wirings_are_rejected() {
        use Component::*;
        // slot reused
        let twice = QuiverSpec::new(2, Wire::Product(vec![(1, Top), (1, Top)]), Wire::Product(vec![(2, Bottom), (2, Top)]));
        assert!(matches!(twice, Err(Error::InvalidQuiver(_))));
        // wrong pick count
        let short = QuiverSpec::new(3, Wire::Product(vec![(1, Top), (2, Top)]), Wire::Intact(2, Bottom));
        assert!(matches!(short, Err(Error::InvalidQuiver(_))));
        // intact with even m
        let even = QuiverSpec::new(4, Wire::Product(vec![(1, Top); 4]), Wire::Intact(1, Bottom));
        assert!(matches!(even, Err(Error::NotQuantized { .. })));
        assert!("2<-3 intact=0; top=(1,T)(1,B)(2,T); bottom=(2,B)".parse::<QuiverSpec>().is_err());
        assert!("garbage".parse::<QuiverSpec>().is_err());
    }

    #[test]
    fn apply_post_ternary() {
        let op = NAryOperation::new(3, "concat", |a: &[u32]| a[0] * 100 + a[1] * 10 + a[2]);
        let q = builtin_quiver("post-ternary").unwrap();
        let args = [Double::new(1, 2), Double::new(3, 4), Double::new(5, 6)];
        assert_eq!(q.apply(&op, &args), Double::new(145, 236));
    }

    fn arb_quiver() -> impl Strategy<Value = QuiverSpec> {
        (2usize..=7, 0usize..=1)
            .prop_filter("quantized", |&(m, ell)| arity_after_intact(m, ell).is_ok())
            .prop_flat_map(|(m, ell)| {
                let n = arity_after_intact(m, ell).unwrap();
                let inputs: Vec<(usize, Component)> = (1..=n)
                    .flat_map(|s| [(s, Component::Top), (s, Component::Bottom)])
                    .collect();
                Just(inputs).prop_shuffle().prop_map(move |mut inputs| {
                    let bottom = inputs.split_off(m);
                    QuiverSpec::new(m, Wire::Product(inputs), wire_from(bottom)).unwrap()
                })
            })
    }

    proptest! {
        #[test]
        fn serialization_round_trips(q in arb_quiver()) {
            let text = q.to_string();
            let back: QuiverSpec = text.parse().unwrap();
            prop_assert_eq!(&back, &q);
            prop_assert_eq!(back.to_string(), text);
        }

        #[test]
        fn arity_law_holds_for_every_valid_spec(q in arb_quiver()) {
            let m = q.input_arity();
            prop_assert_eq!(q.output_arity(), m - ((m - 1) / 2) * q.intact_count());
        }
    }
}
