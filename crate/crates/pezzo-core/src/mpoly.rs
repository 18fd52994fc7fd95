//! Sparse multivariate polynomials over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors (lexicographic
//! order), which makes equality, hashing of canonical forms, and stable
//! display trivial. All polynomials used in this crate are small (tens of
//! terms), so the simple O(t1*t2) product is the right tool.

use crate::rat::{primitive, rat_i, Field, Rat};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse polynomial: exponent vector -> nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    pub arity: usize,
    pub terms: BTreeMap<Vec<u16>, Rat>,
}

impl MPoly {
    pub fn zero(arity: usize) -> Self {
        MPoly { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: Rat) -> Self {
        let mut p = MPoly::zero(arity);
        if !c.is_zero() {
            p.terms.insert(vec![0; arity], c);
        }
        p
    }

    /// The variable `x_i`.
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity);
        let mut e = vec![0; arity];
        e[i] = 1;
        let mut p = MPoly::zero(arity);
        p.terms.insert(e, rat_i(1));
        p
    }

    /// Build from (exponent vector, coefficient) pairs; repeated exponents add.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<u16>, Rat)>) -> Self {
        let mut p = MPoly::zero(arity);
        for (e, c) in terms {
            assert_eq!(e.len(), arity);
            p.add_term(e, c);
        }
        p
    }

    /// A homogeneous linear form `sum c_i x_i`.
    pub fn linear(coeffs: &[Rat]) -> Self {
        let arity = coeffs.len();
        MPoly::from_terms(
            arity,
            coeffs.iter().enumerate().map(|(i, c)| {
                let mut e = vec![0; arity];
                e[i] = 1;
                (e, c.clone())
            }),
        )
    }

    fn add_term(&mut self, e: Vec<u16>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        assert_eq!(self.arity, o.arity);
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.arity);
        }
        MPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        assert_eq!(self.arity, o.arity);
        let mut p = MPoly::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut p = MPoly::constant(self.arity, rat_i(1));
        for _ in 0..n {
            p = p.mul(self);
        }
        p
    }

    /// Exact evaluation over any field (rationals, jets, Q(sqrt5), ...).
    pub fn eval<F: Field>(&self, pt: &[F]) -> F {
        assert_eq!(pt.len(), self.arity);
        // Precompute the powers actually needed per variable.
        let mut maxe = vec![0u16; self.arity];
        for e in self.terms.keys() {
            for (m, &x) in maxe.iter_mut().zip(e) {
                *m = (*m).max(x);
            }
        }
        let pows: Vec<Vec<F>> = (0..self.arity)
            .map(|i| {
                let mut v = Vec::with_capacity(maxe[i] as usize + 1);
                v.push(F::one());
                for k in 1..=maxe[i] as usize {
                    let last = v[k - 1].clone();
                    v.push(last.mul(&pt[i]));
                }
                v
            })
            .collect();
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = F::from_rat(c);
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    t = t.mul(&pows[i][x as usize]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Partial derivative with respect to `x_i`.
    pub fn partial(&self, i: usize) -> MPoly {
        assert!(i < self.arity);
        let mut p = MPoly::zero(self.arity);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            p.add_term(e2, c * rat_i(e[i] as i64));
        }
        p
    }

    pub fn total_degree(&self) -> u16 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// Canonical representative up to scale: integer coefficients with gcd 1
    /// and positive coefficient on the lexicographically smallest exponent.
    pub fn primitive_normalize(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let (exps, coeffs): (Vec<_>, Vec<_>) =
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).unzip();
        let norm = primitive(&coeffs);
        MPoly {
            arity: self.arity,
            terms: exps.into_iter().zip(norm).collect(),
        }
    }

    /// True when the two polynomials agree up to a nonzero rational scale.
    pub fn proportional_to(&self, o: &MPoly) -> bool {
        self.primitive_normalize() == o.primitive_normalize()
    }

    /// Human-readable form with the given variable names.
    pub fn display(&self, vars: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in &self.terms {
            let mut mon = String::new();
            for (i, &x) in e.iter().enumerate() {
                if x == 1 {
                    mon.push_str(&format!("*{}", vars[i]));
                } else if x > 1 {
                    mon.push_str(&format!("*{}^{}", vars[i], x));
                }
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&format!("({}){}", c, mon));
        }
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.arity).map(|i| format!("x{}", i)).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", self.display(&refs))
    }
}

/// All exponent vectors of total degree exactly `d` in `arity` variables,
/// in lexicographic order. Used to index monomial bases.
pub fn monomials_of_degree(arity: usize, d: u16) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; arity];
    fn rec(i: usize, left: u16, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
    }
    if arity == 0 {
        if d == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::Jet4;
    use crate::rat::rat;

    #[test]
    fn product_and_eval_agree() {
        // (x0 + 2 x1)(x0 - x1) = x0^2 + x0 x1 - 2 x1^2
        let a = MPoly::linear(&[rat_i(1), rat_i(2)]);
        let b = MPoly::linear(&[rat_i(1), rat_i(-1)]);
        let p = a.mul(&b);
        assert_eq!(p.terms.len(), 3);
        let v = p.eval(&[rat(1, 2), rat_i(3)]);
        // (1/2 + 6)(1/2 - 3) = (13/2)(-5/2) = -65/4
        assert_eq!(v, rat(-65, 4));
    }

    #[test]
    fn jets_differentiate_polynomials() {
        // p = x0^2 x1, dp/dx0 = 2 x0 x1, dp/dx1 = x0^2 at (3, 5, 0, 0).
        let p = MPoly::from_terms(4, [(vec![2, 1, 0, 0], rat_i(1))]);
        let pt = [
            Jet4::variable(rat_i(3), 0),
            Jet4::variable(rat_i(5), 1),
            Jet4::variable(rat_i(0), 2),
            Jet4::variable(rat_i(0), 3),
        ];
        let j = p.eval(&pt);
        assert_eq!(j.v, rat_i(45));
        assert_eq!(j.d[0], rat_i(30));
        assert_eq!(j.d[1], rat_i(9));
    }

    #[test]
    fn monomial_basis_count() {
        // Cubic monomials in four variables: C(3+3,3) = 20.
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
    }

    #[test]
    fn primitive_normalization_is_canonical() {
        let p = MPoly::linear(&[rat(-2, 3), rat(4, 3)]);
        let q = MPoly::linear(&[rat_i(1), rat_i(-2)]);
        assert!(p.proportional_to(&q));
    }
}
