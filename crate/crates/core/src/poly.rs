//! Sparse multivariate polynomials over a scalar ring.
//!
//! A polynomial is a map from monomials to nonzero coefficients. The
//! monomial order is degree-reverse-lexicographic (grevlex) with respect to
//! the declared variable order: monomials compare first by total degree,
//! ties broken by the *last* position where the exponent vectors differ,
//! smaller exponent there winning. Storing terms in a `BTreeMap` keyed by
//! this order makes the leading term the last entry and gives every
//! polynomial a unique normal representation for free.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::scalar::{Scalar, ScalarRing};

/// Exponent vector of a monomial; length equals the ambient variable count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, caller must have checked divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (da, db) = (self.total_degree(), other.total_degree());
        if da != db {
            return da.cmp(&db);
        }
        for i in (0..self.0.len()).rev() {
            if self.0[i] != other.0[i] {
                // reverse: smaller exponent in the latest variable is larger
                return other.0[i].cmp(&self.0[i]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial: nonzero terms only, keyed by grevlex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub nvars: usize,
    pub terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, ring: ScalarRing, c: Scalar) -> Poly {
        let mut p = Poly::zero(nvars);
        p.add_term(ring, Monomial::one(nvars), c);
        p
    }

    pub fn var(nvars: usize, ring: ScalarRing, idx: usize) -> Poly {
        let mut p = Poly::zero(nvars);
        p.add_term(ring, Monomial::var(nvars, idx), ring.one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.total_degree() == 0)
    }

    /// The constant coefficient (zero scalar if absent).
    pub fn constant_coeff(&self, ring: ScalarRing) -> Scalar {
        self.terms
            .get(&Monomial::one(self.nvars))
            .cloned()
            .unwrap_or_else(|| ring.zero())
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Every monomial has the same total degree `d` (zero is homogeneous).
    pub fn is_homogeneous_of_degree(&self, d: u64) -> bool {
        self.terms.keys().all(|m| m.total_degree() == d)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.last_key_value()
    }

    /// Add `c * m`, removing the entry if the sum cancels.
    pub fn add_term(&mut self, ring: ScalarRing, m: Monomial, c: Scalar) {
        if ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = ring.add(e.get(), &c);
                if ring.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, ring: ScalarRing, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(ring, m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, ring: ScalarRing) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), ring.neg(c))).collect(),
        }
    }

    pub fn sub(&self, ring: ScalarRing, other: &Poly) -> Poly {
        self.add(ring, &other.neg(ring))
    }

    pub fn mul(&self, ring: ScalarRing, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(ring, m1.mul(m2), ring.mul(c1, c2));
            }
        }
        out
    }

    pub fn scale(&self, ring: ScalarRing, c: &Scalar) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, a) in &self.terms {
            out.add_term(ring, m.clone(), ring.mul(a, c));
        }
        out
    }

    pub fn pow(&self, ring: ScalarRing, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::constant(self.nvars, ring, ring.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(ring, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(ring, &base);
            }
        }
        acc
    }

    /// Substitute scalars for all variables.
    pub fn eval(&self, ring: ScalarRing, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = ring.mul(&t, &point[i]);
                }
            }
            acc = ring.add(&acc, &t);
        }
        acc
    }

    /// Substitute polynomials for all variables. The substituted
    /// polynomials live in a possibly different variable count `out_nvars`.
    pub fn compose(&self, ring: ScalarRing, args: &[Poly], out_nvars: usize) -> Poly {
        assert_eq!(args.len(), self.nvars);
        let mut acc = Poly::zero(out_nvars);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(out_nvars, ring, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(ring, &args[i].pow(ring, e as u64));
                }
            }
            acc = acc.add(ring, &t);
        }
        acc
    }

    /// Division with remainder by a single divisor: returns `(q, r)` with
    /// `self = q * d + r` and no monomial of `r` divisible by the leading
    /// monomial of `d`. Requires the leading coefficient of `d` to be a
    /// unit of the scalar ring; a single divisor is its own Groebner basis
    /// of the ideal it generates, so `r` is the unique normal form.
    pub fn div_rem(&self, ring: ScalarRing, d: &Poly) -> Option<(Poly, Poly)> {
        let (lm, lc) = d.leading()?;
        let lc_inv = ring.inv(lc)?;
        let mut work = self.clone();
        let mut quo = Poly::zero(self.nvars);
        let mut rem = Poly::zero(self.nvars);
        while let Some((m, c)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if lm.divides(&m) {
                let qm = lm.quotient(&m);
                let qc = ring.mul(&c, &lc_inv);
                quo.add_term(ring, qm.clone(), qc.clone());
                let mut step = Poly::zero(self.nvars);
                step.add_term(ring, qm, qc);
                work = work.sub(ring, &step.mul(ring, d));
            } else {
                rem.add_term(ring, m.clone(), c.clone());
                work.terms.remove(&m);
            }
        }
        Some((quo, rem))
    }

    /// Exact divisibility test: Some(q) iff `self == q * d`.
    pub fn exact_div(&self, ring: ScalarRing, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(ring, d)?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Map coefficients into another scalar ring (e.g. Z -> F_p).
    pub fn map_coeffs(&self, from: ScalarRing, to: ScalarRing) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let big = match (from, c) {
                (ScalarRing::Int, Scalar::Int(x)) => x.clone(),
                (ScalarRing::Fp(_), Scalar::Fp(x)) => num::BigInt::from(*x),
                _ => panic!("coefficient mapping defined for integer-like sources only"),
            };
            out.add_term(to, m.clone(), to.from_bigint(&big));
        }
        out
    }

    /// Canonical text: terms in descending grevlex order, ` + ` / ` - `
    /// separators, coefficient omitted when 1, `^` for exponents above 1.
    pub fn to_text(&self, ring: ScalarRing, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = match c {
                Scalar::Int(x) => x < &num::BigInt::from(0),
                Scalar::Rat(x) => x < &num::BigRational::from(num::BigInt::from(0)),
                Scalar::Fp(_) => false,
            };
            let abs = if neg { ring.neg(c) } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (vi, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(vars[vi].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", vars[vi], e));
                }
            }
            let coeff_txt = abs.to_text();
            if factors.is_empty() {
                out.push_str(&coeff_txt);
            } else if coeff_txt == "1" {
                out.push_str(&factors.join("*"));
            } else {
                out.push_str(&coeff_txt);
                out.push('*');
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> ScalarRing {
        ScalarRing::Rat
    }

    #[test]
    fn grevlex_order_basics() {
        // variable order x1 < y1 < x2 < y2
        let x1y1 = Monomial(vec![1, 1, 0, 0]);
        let x2y2 = Monomial(vec![0, 0, 1, 1]);
        assert!(x1y1 > x2y2);
        let x1sq = Monomial(vec![2, 0, 0, 0]);
        assert!(x1sq > x1y1);
        let deg3 = Monomial(vec![1, 1, 1, 0]);
        assert!(deg3 > x1sq);
    }

    #[test]
    fn mul_and_pow() {
        // (x + 1)^2 = x^2 + 2x + 1 over Q, one variable
        let r = q();
        let x = Poly::var(1, r, 0);
        let one = Poly::constant(1, r, r.one());
        let p = x.add(r, &one).pow(r, 2);
        assert_eq!(p.terms.len(), 3);
        assert_eq!(p.terms.get(&Monomial(vec![1])), Some(&r.from_i64(2)));
    }

    #[test]
    fn division_single_divisor() {
        // f = (x1*y1)^2, d = x1*y1 + x2*y2 - 1 in vars x1<y1<x2<y2;
        // remainder must be (x2*y2)^2 - 2*x2*y2 + 1
        let r = q();
        let x1 = Poly::var(4, r, 0);
        let y1 = Poly::var(4, r, 1);
        let x2 = Poly::var(4, r, 2);
        let y2 = Poly::var(4, r, 3);
        let one = Poly::constant(4, r, r.one());
        let d = x1.mul(r, &y1).add(r, &x2.mul(r, &y2)).sub(r, &one);
        let f = x1.mul(r, &y1).pow(r, 2);
        let (quo, rem) = f.div_rem(r, &d).unwrap();
        let expected = x2
            .mul(r, &y2)
            .pow(r, 2)
            .sub(r, &x2.mul(r, &y2).scale(r, &r.from_i64(2)))
            .add(r, &one);
        assert_eq!(rem, expected);
        // f - rem == quo * d exactly
        let diff = f.sub(r, &rem);
        assert_eq!(diff, quo.mul(r, &d));
        assert_eq!(diff.exact_div(r, &d), Some(quo));
    }

    #[test]
    fn remainder_is_normal_form() {
        // dividing the remainder again changes nothing
        let r = q();
        let x1 = Poly::var(4, r, 0);
        let y1 = Poly::var(4, r, 1);
        let x2 = Poly::var(4, r, 2);
        let y2 = Poly::var(4, r, 3);
        let one = Poly::constant(4, r, r.one());
        let d = x1.mul(r, &y1).add(r, &x2.mul(r, &y2)).sub(r, &one);
        let f = x1.add(r, &y2).pow(r, 3).mul(r, &x1.mul(r, &y1).add(r, &one));
        let (_, rem) = f.div_rem(r, &d).unwrap();
        let (q2, rem2) = rem.div_rem(r, &d).unwrap();
        assert!(q2.is_zero());
        assert_eq!(rem2, rem);
    }

    #[test]
    fn eval_matches_compose() {
        let r = ScalarRing::Fp(5);
        let x = Poly::var(2, r, 0);
        let y = Poly::var(2, r, 1);
        let p = x.pow(r, 3).add(r, &x.mul(r, &y)).sub(r, &Poly::constant(2, r, r.from_i64(2)));
        let val = p.eval(r, &[r.from_i64(3), r.from_i64(4)]);
        // 27 + 12 - 2 = 37 = 2 mod 5
        assert_eq!(val, r.from_i64(2));
    }

    #[test]
    fn text_rendering() {
        let r = ScalarRing::Rat;
        let vars: Vec<String> = ["x1", "y1", "x2", "y2"].iter().map(|s| s.to_string()).collect();
        let x1 = Poly::var(4, r, 0);
        let y1 = Poly::var(4, r, 1);
        let x2 = Poly::var(4, r, 2);
        let y2 = Poly::var(4, r, 3);
        let one = Poly::constant(4, r, r.one());
        let p = x1.mul(r, &y1).add(r, &x2.mul(r, &y2)).sub(r, &one);
        assert_eq!(p.to_text(r, &vars), "x1*y1 + x2*y2 - 1");
        let sq = x1.pow(r, 2).sub(r, &y1.scale(r, &r.from_i64(3)));
        assert_eq!(sq.to_text(r, &vars), "x1^2 - 3*y1");
    }
}
