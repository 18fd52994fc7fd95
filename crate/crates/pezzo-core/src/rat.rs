//! Arbitrary-precision rational scalars and the `Field` abstraction.
//!
//! Every geometric routine in this crate that does not need ordering is
//! generic over [`Field`], so the same pipeline runs over plain rationals,
//! over first-order jets (for derivatives), and over Q(sqrt 5) (for the
//! most symmetric cubic surface, whose special point lives there).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;

/// Arbitrary-precision integer.
pub type Int = BigInt;
/// Arbitrary-precision rational; always stored gcd-reduced by `num-rational`.
pub type Rat = num_rational::BigRational;

/// `n` as a rational.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// `n/d` as a rational (`d != 0`).
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Minimal exact-field interface used by the generic geometry pipelines.
///
/// Implementations must be exact (no rounding): plain rationals, jets over
/// the rationals, and quadratic extensions all qualify. Division is exposed
/// as [`Field::inv`] returning `None` for non-units so callers decide how to
/// handle degeneracies.
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    /// Embed a rational constant.
    fn from_rat(r: &Rat) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` when the element is not invertible.
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;

    /// Convenience: `self - o * c`.
    fn sub_mul(&self, o: &Self, c: &Self) -> Self {
        self.sub(&o.mul(c))
    }
    /// Convenience: `self / o`, `None` if `o` is not invertible.
    fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }
    fn from_i64(n: i64) -> Self {
        Self::from_rat(&rat_i(n))
    }
}

impl Field for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Scale a rational vector to a primitive integer vector: clear denominators,
/// divide by the gcd of the numerators, and flip signs so the first nonzero
/// entry is positive. The zero vector is returned unchanged.
///
/// This is the canonical representative used everywhere a vector is only
/// defined up to scale (linear forms, nullspace generators, facet normals).
pub fn primitive(v: &[Rat]) -> Vec<Rat> {
    let mut denom_lcm = Int::one();
    for x in v {
        denom_lcm = num_integer::lcm(denom_lcm, x.denom().clone());
    }
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&denom_lcm / x.denom())).collect();
    let mut g = Int::zero();
    for n in &ints {
        g = num_integer::gcd(g, n.clone());
    }
    if g.is_zero() {
        return v.to_vec();
    }
    let mut out: Vec<Int> = ints.iter().map(|n| n / &g).collect();
    if let Some(first) = out.iter().find(|n| !n.is_zero()) {
        if first.is_negative() {
            for n in &mut out {
                *n = -n.clone();
            }
        }
    }
    out.into_iter().map(Rat::from_integer).collect()
}

/// True when `a` and `b` are proportional over Q (including both zero).
pub fn proportional(a: &[Rat], b: &[Rat]) -> bool {
    assert_eq!(a.len(), b.len());
    // Cross-multiply: a_i b_j == a_j b_i for all i < j.
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return false;
            }
        }
    }
    // Rule out one vector zero and the other not.
    let az = a.iter().all(|x| Zero::is_zero(x));
    let bz = b.iter().all(|x| Zero::is_zero(x));
    az == bz || a.iter().zip(b).all(|(x, y)| Zero::is_zero(x) == Zero::is_zero(y))
}

/// True when `a` and `b` are proportional over any field (generic version).
pub fn proportional_f<F: Field>(a: &[F], b: &[F]) -> bool {
    assert_eq!(a.len(), b.len());
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if a[i].mul(&b[j]) != a[j].mul(&b[i]) {
                return false;
            }
        }
    }
    let az = a.iter().all(|x| x.is_zero());
    let bz = b.iter().all(|x| x.is_zero());
    az == bz
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_clears_denominators_and_signs() {
        let v = vec![rat(-4, 6), rat(-6, 6), rat_i(0)];
        assert_eq!(primitive(&v), vec![rat_i(2), rat_i(3), rat_i(0)]);
        let w = vec![rat_i(0), rat(9, 4), rat(-3, 2)];
        assert_eq!(primitive(&w), vec![rat_i(0), rat_i(3), rat_i(-2)]);
    }

    #[test]
    fn proportional_detects_scaling() {
        let a = vec![rat_i(2), rat_i(-4), rat_i(0)];
        let b = vec![rat_i(-3), rat_i(6), rat_i(0)];
        assert!(proportional(&a, &b));
        let c = vec![rat_i(-3), rat_i(6), rat_i(1)];
        assert!(!proportional(&a, &c));
    }
}
