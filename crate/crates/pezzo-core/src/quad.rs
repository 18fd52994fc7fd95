//! The real quadratic field Q(sqrt 5), represented as `a + b*sqrt(5)`.
//!
//! Used for the most symmetric real cubic surface, whose distinguished
//! parameter point has coordinates in Q(sqrt 5): the generic pipeline runs
//! over this field exactly, with no floating point.

use crate::rat::{rat_i, Field, Rat};
use num_traits::Zero;

/// `a + b*sqrt(5)` with rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadExt5 {
    pub a: Rat,
    pub b: Rat,
}

impl QuadExt5 {
    pub fn new(a: Rat, b: Rat) -> Self {
        QuadExt5 { a, b }
    }
    /// The generator sqrt(5).
    pub fn sqrt5() -> Self {
        QuadExt5 { a: rat_i(0), b: rat_i(1) }
    }
    /// Galois conjugate `a - b*sqrt(5)`.
    pub fn conj(&self) -> Self {
        QuadExt5 { a: self.a.clone(), b: -&self.b }
    }
    /// Field norm `a^2 - 5 b^2` (rational; zero iff the element is zero,
    /// since 5 is not a rational square).
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - rat_i(5) * &self.b * &self.b
    }
}

impl Field for QuadExt5 {
    fn zero() -> Self {
        QuadExt5 { a: rat_i(0), b: rat_i(0) }
    }
    fn one() -> Self {
        QuadExt5 { a: rat_i(1), b: rat_i(0) }
    }
    fn from_rat(r: &Rat) -> Self {
        QuadExt5 { a: r.clone(), b: rat_i(0) }
    }
    fn add(&self, o: &Self) -> Self {
        QuadExt5 { a: &self.a + &o.a, b: &self.b + &o.b }
    }
    fn sub(&self, o: &Self) -> Self {
        QuadExt5 { a: &self.a - &o.a, b: &self.b - &o.b }
    }
    fn mul(&self, o: &Self) -> Self {
        // (a + b r)(c + d r) = ac + 5bd + (ad + bc) r, with r^2 = 5.
        QuadExt5 {
            a: &self.a * &o.a + rat_i(5) * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
    fn neg(&self) -> Self {
        QuadExt5 { a: -&self.a, b: -&self.b }
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if Zero::is_zero(&n) {
            return None;
        }
        let ni = n.recip();
        Some(QuadExt5 { a: &self.a * &ni, b: -&self.b * &ni })
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn sqrt5_squares_to_five() {
        let r = QuadExt5::sqrt5();
        assert_eq!(r.mul(&r), QuadExt5::from_rat(&rat_i(5)));
    }

    #[test]
    fn golden_ratio_identity() {
        // phi = (1+sqrt5)/2 satisfies phi^2 = phi + 1.
        let phi = QuadExt5::new(rat(1, 2), rat(1, 2));
        assert_eq!(phi.mul(&phi), phi.add(&QuadExt5::one()));
    }

    #[test]
    fn inverse_roundtrip() {
        let x = QuadExt5::new(rat(3, 7), rat(-2, 5));
        let xi = x.inv().unwrap();
        assert_eq!(x.mul(&xi), QuadExt5::one());
    }
}
