//! First-order jets in four variables: forward-mode exact differentiation.
//!
//! A [`Jet4`] carries a value together with the four partial derivatives of
//! the quantity it represents with respect to four chart coordinates. All
//! arithmetic follows the Leibniz rule exactly over the rationals, so any
//! rational-function pipeline evaluated on jets yields exact Jacobians with
//! no symbolic differentiation.

use crate::rat::{rat_i, Field, Rat};
use num_traits::Zero;

/// Value plus four exact partial derivatives.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Jet4 {
    pub v: Rat,
    pub d: [Rat; 4],
}

impl Jet4 {
    /// Constant jet (all derivatives zero).
    pub fn constant(v: Rat) -> Self {
        Jet4 { v, d: std::array::from_fn(|_| rat_i(0)) }
    }

    /// Seed for the `i`-th coordinate: value `v`, derivative `e_i`.
    pub fn variable(v: Rat, i: usize) -> Self {
        let mut d = std::array::from_fn(|_| rat_i(0));
        d[i] = rat_i(1);
        Jet4 { v, d }
    }
}

impl Field for Jet4 {
    fn zero() -> Self {
        Jet4::constant(rat_i(0))
    }
    fn one() -> Self {
        Jet4::constant(rat_i(1))
    }
    fn from_rat(r: &Rat) -> Self {
        Jet4::constant(r.clone())
    }
    fn add(&self, o: &Self) -> Self {
        Jet4 {
            v: &self.v + &o.v,
            d: std::array::from_fn(|i| &self.d[i] + &o.d[i]),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        Jet4 {
            v: &self.v - &o.v,
            d: std::array::from_fn(|i| &self.d[i] - &o.d[i]),
        }
    }
    fn mul(&self, o: &Self) -> Self {
        Jet4 {
            v: &self.v * &o.v,
            d: std::array::from_fn(|i| &self.d[i] * &o.v + &self.v * &o.d[i]),
        }
    }
    fn neg(&self) -> Self {
        Jet4 {
            v: -&self.v,
            d: std::array::from_fn(|i| -&self.d[i]),
        }
    }
    /// (1/f)' = -f'/f^2; invertible iff the value part is nonzero.
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(&self.v) {
            return None;
        }
        let iv = self.v.recip();
        let m = -(&iv * &iv);
        Some(Jet4 {
            v: iv,
            d: std::array::from_fn(|i| &self.d[i] * &m),
        })
    }
    /// Zero means the *value* is zero; derivative parts are irrelevant for
    /// pivoting decisions (a unit is exactly an element with nonzero value).
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.v) && self.d.iter().all(|x| Zero::is_zero(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i};

    #[test]
    fn leibniz_rule_on_quotient() {
        // f(x) = x0^2 / (x0 + x1) at x0=2, x1=3:
        // value 4/5, df/dx0 = (2*x0*(x0+x1) - x0^2)/ (x0+x1)^2 = (20-4)/25 = 16/25,
        // df/dx1 = -x0^2/(x0+x1)^2 = -4/25.
        let x0 = Jet4::variable(rat_i(2), 0);
        let x1 = Jet4::variable(rat_i(3), 1);
        let f = x0.mul(&x0).div(&x0.add(&x1)).unwrap();
        assert_eq!(f.v, rat(4, 5));
        assert_eq!(f.d[0], rat(16, 25));
        assert_eq!(f.d[1], rat(-4, 25));
        assert_eq!(f.d[2], rat_i(0));
    }

    #[test]
    fn inverse_of_zero_value_fails() {
        let z = Jet4::variable(rat_i(0), 2);
        assert!(z.inv().is_none());
    }
}
