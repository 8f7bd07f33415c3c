//! Derived structures on ℤ_k: the m-fold sum or product of residues.

use crate::carrier::Carrier;
use crate::operation::NAryOperation;
use crate::structure::PolyadicStructure;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CyclicOp {
    Add,
    Mul,
}

/// `z<k>-add-<m>` or `z<k>-mul-<m>`.
pub fn cyclic_name(k: u32, m: usize, op: CyclicOp) -> String {
    let o = match op {
        CyclicOp::Add => "add",
        CyclicOp::Mul => "mul",
    };
    format!("z{k}-{o}-{m}")
}

/// Parses a name produced by [`cyclic_name`].
pub fn parse_cyclic_name(name: &str) -> Option<(u32, usize, CyclicOp)> {
    let rest = name.strip_prefix('z')?;
    let mut parts = rest.splitn(3, '-');
    let k: u32 = parts.next()?.parse().ok()?;
    let op = match parts.next()? {
        "add" => CyclicOp::Add,
        "mul" => CyclicOp::Mul,
        _ => return None,
    };
    let m: usize = parts.next()?.parse().ok()?;
    (k >= 1 && m >= 2).then_some((k, m, op))
}

/// The m-ary operation derived from addition or multiplication mod `k`.
pub fn cyclic(k: u32, m: usize, op: CyclicOp) -> PolyadicStructure<u32> {
    assert!(k >= 1 && m >= 2, "need k >= 1 and m >= 2");
    let carrier = Carrier::finite((0..k).collect()).expect("residues are distinct");
    let kk = k as u64;
    let eval = move |args: &[u32]| -> u32 {
        let r = match op {
            CyclicOp::Add => args.iter().fold(0u64, |acc, &a| (acc + a as u64) % kk),
            CyclicOp::Mul => args.iter().fold(1u64 % kk, |acc, &a| (acc * a as u64) % kk),
        };
        r as u32
    };
    let name = cyclic_name(k, m, op);
    PolyadicStructure::new(name.clone(), carrier, NAryOperation::new(m, name, eval))
}
