//! The 4-ary semigroup of matrices `[[u,0],[0,0]]` with
//! `μ⁴[a₁..a₄] = a₁ + εa₂ + ε²a₃ + a₄`, `ε = e^{2πi/3}`, stored as the scalar `u`.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use crate::carrier::Carrier;
use crate::completion::EquivalenceDecision;
use crate::operation::NAryOperation;
use crate::products::Double;
use crate::structure::PolyadicStructure;

use super::StructureRecipe;

pub fn epsilon() -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI / 3.0)
}

/// Point `i` of a golden-angle spiral in the open unit disk; point 0 is 0.
pub fn spiral_point(i: usize) -> Complex64 {
    let golden = PI * (3.0 - 5f64.sqrt());
    let frac = (i as f64 * (5f64.sqrt() - 1.0) / 2.0).fract();
    Complex64::from_polar(frac.sqrt(), i as f64 * golden)
}

/// `points` is the number of spiral points per component in the domain.
pub fn matrix_4ary(points: usize) -> StructureRecipe<Complex64> {
    let eps = epsilon();
    let eps2 = eps * eps;
    let op = NAryOperation::new(4, "a1 + εa2 + ε²a3 + a4", move |a: &[Complex64]| a[0] + eps * a[1] + eps2 * a[2] + a[3]);
    let carrier = Carrier::rule_based(
        |u: &Complex64| u.re.is_finite() && u.im.is_finite(),
        |u: &Complex64| *u,
        |n| (0..n).map(spiral_point).collect(),
        points.max(1),
    );
    let structure = PolyadicStructure::new("matrix4", carrier, op).with_renderer(|u: &Complex64| format!("{:.6}{:+.6}i", u.re, u.im));
    StructureRecipe::new(
        "matrix4",
        structure,
        Some(Arc::new(|_: &Double<Complex64>| Double::new(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)))),
        EquivalenceDecision::exact("all doubles equivalent", |_: &Double<Complex64>, _: &Double<Complex64>| true),
        points,
        points.max(1),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::Value;

    #[test]
    fn idempotent_and_left_cancelling() {
        let r = matrix_4ary(20);
        let w = r.structure.carrier().witnesses();
        for a in w.iter() {
            assert!(r.structure.evaluate(&[*a; 4]).unwrap().same(a));
            for b in w.iter() {
                assert!(r.structure.evaluate(&[*a, *a, *a, *b]).unwrap().same(b));
            }
        }
        assert!(w.iter().all(|u| u.norm() < 1.0));
    }
}
