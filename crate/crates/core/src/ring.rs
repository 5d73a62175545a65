//! Ring contexts and elements.
//!
//! The supported tower: the integers, the rationals, prime fields F_p,
//! multivariate polynomial rings over one of those three, and quotients of
//! a polynomial ring by a single polynomial. Every element carries a handle
//! to its context; elements of quotient rings are always stored in normal
//! form (the unique remainder under division by the modulus), so structural
//! equality is semantic equality in every context.
//!
//! Arithmetic between elements of different contexts is a caller bug; the
//! checked entry points (`try_add` and friends) report it as
//! [`Error::CtxMismatch`], while the operator impls on references panic.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};
use crate::rng::SplitMix64;
use crate::scalar::{is_prime_u64, Scalar, ScalarRing};

#[derive(Debug, PartialEq, Eq)]
pub enum CtxNode {
    Integers,
    Rationals,
    PrimeField(u64),
    Polynomial { base: RingCtx, vars: Vec<String> },
    Quotient { base: RingCtx, modulus: Poly },
}

/// Shared, cheaply clonable handle to a ring description.
#[derive(Debug, Clone)]
pub struct RingCtx(Arc<CtxNode>);

impl PartialEq for RingCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for RingCtx {}

impl RingCtx {
    pub fn integers() -> RingCtx {
        RingCtx(Arc::new(CtxNode::Integers))
    }

    pub fn rationals() -> RingCtx {
        RingCtx(Arc::new(CtxNode::Rationals))
    }

    pub fn prime_field(p: u64) -> Result<RingCtx> {
        if !is_prime_u64(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(RingCtx(Arc::new(CtxNode::PrimeField(p))))
    }

    /// Polynomial ring over a scalar base in the named variables; the
    /// declared order of `vars` fixes the monomial order.
    pub fn polynomial(base: &RingCtx, vars: &[&str]) -> Result<RingCtx> {
        if base.scalar_kind().is_none() || base.is_poly_like() {
            return Err(Error::Unsupported(
                "polynomial base must be Z, Q, or a prime field".to_string(),
            ));
        }
        if vars.is_empty() {
            return Err(Error::Unsupported("polynomial ring needs at least one variable".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for v in vars {
            if v.is_empty()
                || !v.chars().next().unwrap().is_ascii_alphabetic()
                || !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(Error::Unsupported(format!("invalid variable name {v:?}")));
            }
            if !seen.insert(v.to_string()) {
                return Err(Error::Unsupported(format!("duplicate variable name {v:?}")));
            }
        }
        Ok(RingCtx(Arc::new(CtxNode::Polynomial {
            base: base.clone(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
        })))
    }

    /// Quotient of a polynomial ring by the ideal of one polynomial. The
    /// modulus must be nonzero with unit leading coefficient so that
    /// division yields unique normal forms.
    pub fn quotient(base: &RingCtx, modulus: &RingElt) -> Result<RingCtx> {
        let CtxNode::Polynomial { .. } = &*base.0 else {
            return Err(Error::InvalidModulus("quotient base must be a polynomial ring".into()));
        };
        if modulus.ctx != *base {
            return Err(Error::CtxMismatch);
        }
        let Repr::Poly(m) = &modulus.repr else { unreachable!() };
        if m.is_zero() {
            return Err(Error::InvalidModulus("modulus is zero".into()));
        }
        let scalar = base.scalar_kind().unwrap();
        let (_, lc) = m.leading().unwrap();
        if scalar.inv(lc).is_none() {
            return Err(Error::InvalidModulus("leading coefficient is not a unit".into()));
        }
        Ok(RingCtx(Arc::new(CtxNode::Quotient { base: base.clone(), modulus: m.clone() })))
    }

    pub fn node(&self) -> &CtxNode {
        &self.0
    }

    pub fn is_poly_like(&self) -> bool {
        matches!(&*self.0, CtxNode::Polynomial { .. } | CtxNode::Quotient { .. })
    }

    /// True for Q and F_p, the contexts where linear algebra can eliminate.
    pub fn is_field(&self) -> bool {
        matches!(&*self.0, CtxNode::Rationals | CtxNode::PrimeField(_))
    }

    pub fn characteristic(&self) -> u64 {
        self.scalar_kind().map(|s| s.characteristic()).unwrap_or(0)
    }

    /// The coefficient arithmetic backing this context: the context itself
    /// for scalar kinds, the base scalars for polynomial-like kinds.
    pub fn scalar_kind(&self) -> Option<ScalarRing> {
        match &*self.0 {
            CtxNode::Integers => Some(ScalarRing::Int),
            CtxNode::Rationals => Some(ScalarRing::Rat),
            CtxNode::PrimeField(p) => Some(ScalarRing::Fp(*p)),
            CtxNode::Polynomial { base, .. } => base.scalar_kind(),
            CtxNode::Quotient { base, .. } => base.scalar_kind(),
        }
    }

    pub fn vars(&self) -> Option<&[String]> {
        match &*self.0 {
            CtxNode::Polynomial { vars, .. } => Some(vars),
            CtxNode::Quotient { base, .. } => base.vars(),
            _ => None,
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars().map(|v| v.len()).unwrap_or(0)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars().and_then(|vs| vs.iter().position(|v| v == name))
    }

    /// For a quotient context, the polynomial ring it reduces.
    pub fn poly_base(&self) -> Option<&RingCtx> {
        match &*self.0 {
            CtxNode::Quotient { base, .. } => Some(base),
            _ => None,
        }
    }

    pub fn modulus_poly(&self) -> Option<&Poly> {
        match &*self.0 {
            CtxNode::Quotient { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    fn make(&self, repr: Repr) -> RingElt {
        let repr = match (&*self.0, repr) {
            (CtxNode::Quotient { modulus, .. }, Repr::Poly(p)) => {
                let scalar = self.scalar_kind().unwrap();
                let (_, rem) = p.div_rem(scalar, modulus).expect("modulus has unit lc");
                Repr::Poly(rem)
            }
            (_, r) => r,
        };
        RingElt { ctx: self.clone(), repr }
    }

    pub fn zero(&self) -> RingElt {
        self.from_i64(0)
    }

    pub fn one(&self) -> RingElt {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> RingElt {
        let scalar = self.scalar_kind().expect("context has scalar arithmetic");
        if self.is_poly_like() {
            let mut p = Poly::zero(self.nvars());
            p.add_term(scalar, Monomial::one(self.nvars()), scalar.from_i64(n));
            self.make(Repr::Poly(p))
        } else {
            self.make(Repr::Scalar(scalar.from_i64(n)))
        }
    }

    pub fn var(&self, name: &str) -> Result<RingElt> {
        let idx = self
            .var_index(name)
            .ok_or_else(|| Error::Unsupported(format!("no variable {name:?} in this ring")))?;
        let scalar = self.scalar_kind().unwrap();
        Ok(self.make(Repr::Poly(Poly::var(self.nvars(), scalar, idx))))
    }

    /// Wrap a raw polynomial (in this context's variable count) as an
    /// element, reducing if this is a quotient context.
    pub fn elt_from_poly(&self, p: Poly) -> RingElt {
        assert!(self.is_poly_like(), "elt_from_poly on scalar context");
        assert_eq!(p.nvars, self.nvars());
        self.make(Repr::Poly(p))
    }

    pub fn elt_from_scalar(&self, s: Scalar) -> RingElt {
        if self.is_poly_like() {
            let scalar = self.scalar_kind().unwrap();
            let mut p = Poly::zero(self.nvars());
            p.add_term(scalar, Monomial::one(self.nvars()), s);
            self.make(Repr::Poly(p))
        } else {
            self.make(Repr::Scalar(s))
        }
    }

    /// Deterministic sample for randomized checks: small coefficients, at
    /// most `terms` monomials with per-variable exponents below `max_exp`.
    pub fn sample(&self, rng: &mut SplitMix64, terms: u32, max_exp: u32, coeff_bound: i64) -> RingElt {
        let scalar = self.scalar_kind().expect("context has scalar arithmetic");
        let coeff = |rng: &mut SplitMix64| -> Scalar {
            match scalar {
                ScalarRing::Fp(p) => ScalarRing::Fp(p).from_i64(rng.below(p) as i64),
                _ => scalar.from_i64(rng.range_i64(-coeff_bound, coeff_bound)),
            }
        };
        if !self.is_poly_like() {
            return self.make(Repr::Scalar(coeff(rng)));
        }
        let n = self.nvars();
        let mut p = Poly::zero(n);
        for _ in 0..terms {
            let mut m = vec![0u32; n];
            for e in m.iter_mut() {
                *e = rng.below(max_exp as u64 + 1) as u32;
            }
            p.add_term(scalar, Monomial(m), coeff(rng));
        }
        self.make(Repr::Poly(p))
    }
}

impl fmt::Display for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            CtxNode::Integers => write!(f, "Z"),
            CtxNode::Rationals => write!(f, "Q"),
            CtxNode::PrimeField(p) => write!(f, "F{p}"),
            CtxNode::Polynomial { base, vars } => write!(f, "{}[{}]", base, vars.join(",")),
            CtxNode::Quotient { base, modulus } => {
                let scalar = base.scalar_kind().unwrap();
                let vars = base.vars().unwrap();
                write!(f, "{}/({})", base, modulus.to_text(scalar, vars))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Repr {
    Scalar(Scalar),
    Poly(Poly),
}

/// An element of a [`RingCtx`]. Quotient elements are kept in normal form,
/// so `==` decides equality in the ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElt {
    ctx: RingCtx,
    repr: Repr,
}

impl RingElt {
    pub fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    pub fn repr(&self) -> &Repr {
        &self.repr
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Scalar(s) => self.ctx.scalar_kind().unwrap().is_zero(s),
            Repr::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ctx.one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match &self.repr {
            Repr::Poly(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_scalar(&self) -> Option<&Scalar> {
        match &self.repr {
            Repr::Scalar(s) => Some(s),
            _ => None,
        }
    }

    /// Constant value of a polynomial-like element, if it is constant.
    pub fn constant_value(&self) -> Option<Scalar> {
        match &self.repr {
            Repr::Scalar(s) => Some(s.clone()),
            Repr::Poly(p) => {
                if p.is_constant() {
                    Some(p.constant_coeff(self.ctx.scalar_kind().unwrap()))
                } else {
                    None
                }
            }
        }
    }

    fn binop(
        &self,
        rhs: &RingElt,
        s_op: impl Fn(ScalarRing, &Scalar, &Scalar) -> Scalar,
        p_op: impl Fn(ScalarRing, &Poly, &Poly) -> Poly,
    ) -> Result<RingElt> {
        if self.ctx != rhs.ctx {
            return Err(Error::CtxMismatch);
        }
        let scalar = self.ctx.scalar_kind().unwrap();
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Scalar(a), Repr::Scalar(b)) => Repr::Scalar(s_op(scalar, a, b)),
            (Repr::Poly(a), Repr::Poly(b)) => Repr::Poly(p_op(scalar, a, b)),
            _ => unreachable!("repr shape is determined by ctx"),
        };
        Ok(self.ctx.make(repr))
    }

    pub fn try_add(&self, rhs: &RingElt) -> Result<RingElt> {
        self.binop(rhs, |s, a, b| s.add(a, b), |s, a, b| a.add(s, b))
    }

    pub fn try_sub(&self, rhs: &RingElt) -> Result<RingElt> {
        self.binop(rhs, |s, a, b| s.sub(a, b), |s, a, b| a.sub(s, b))
    }

    pub fn try_mul(&self, rhs: &RingElt) -> Result<RingElt> {
        self.binop(rhs, |s, a, b| s.mul(a, b), |s, a, b| a.mul(s, b))
    }

    pub fn neg(&self) -> RingElt {
        let scalar = self.ctx.scalar_kind().unwrap();
        let repr = match &self.repr {
            Repr::Scalar(a) => Repr::Scalar(scalar.neg(a)),
            Repr::Poly(a) => Repr::Poly(a.neg(scalar)),
        };
        self.ctx.make(repr)
    }

    pub fn pow(&self, mut e: u64) -> RingElt {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse. In polynomial-like contexts only constants
    /// with unit value are inverted; anything else reports [`Error::NotUnit`].
    pub fn inv(&self) -> Result<RingElt> {
        let scalar = self.ctx.scalar_kind().unwrap();
        let c = self.constant_value().ok_or(Error::NotUnit)?;
        let i = scalar.inv(&c).ok_or(Error::NotUnit)?;
        Ok(self.ctx.elt_from_scalar(i))
    }

    pub fn scale_i64(&self, n: i64) -> RingElt {
        &self.ctx.from_i64(n) * self
    }

    /// Representative in the base polynomial ring (quotient contexts), or a
    /// clone for every other context.
    pub fn lift(&self) -> RingElt {
        match (&*self.ctx.0, &self.repr) {
            (CtxNode::Quotient { base, .. }, Repr::Poly(p)) => base.elt_from_poly(p.clone()),
            _ => self.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        match &self.repr {
            Repr::Scalar(s) => s.to_text(),
            Repr::Poly(p) => {
                p.to_text(self.ctx.scalar_kind().unwrap(), self.ctx.vars().unwrap())
            }
        }
    }
}

impl fmt::Display for RingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

macro_rules! ref_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&RingElt> for &RingElt {
            type Output = RingElt;
            fn $method(self, rhs: &RingElt) -> RingElt {
                self.$checked(rhs).expect("ring context mismatch")
            }
        }
    };
}

ref_binop!(Add, add, try_add);
ref_binop!(Sub, sub, try_sub);
ref_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &RingElt {
    type Output = RingElt;
    fn neg(self) -> RingElt {
        RingElt::neg(self)
    }
}

/// Canonical representative of `f` in the quotient context `ctx`.
///
/// `f` may live in `ctx` itself (the reduction is then the identity, since
/// quotient elements are stored reduced) or in the underlying polynomial
/// ring.
pub fn normal_form(f: &RingElt, ctx: &RingCtx) -> Result<RingElt> {
    let CtxNode::Quotient { base, .. } = &*ctx.0 else {
        return Err(Error::InvalidModulus("normal form needs a quotient context".into()));
    };
    if f.ctx == *ctx {
        return Ok(f.clone());
    }
    if f.ctx != *base {
        return Err(Error::CtxMismatch);
    }
    let Repr::Poly(p) = &f.repr else { unreachable!() };
    Ok(ctx.elt_from_poly(p.clone()))
}

/// Coordinate ring of the smooth affine quadric of dimension `n` over a
/// scalar base ring: for n = 2m-1 the ring
/// base[x1,y1,..,xm,ym] / (sum x_i y_i - 1), and for n = 2m the ring
/// base[x1,y1,..,xm,ym,z] / (sum x_i y_i - z - z^2). Variables are ordered
/// x1 < y1 < x2 < y2 < ... (< z).
pub fn quadric_ring(n: u32, base: &RingCtx) -> Result<RingCtx> {
    if n == 0 {
        return Err(Error::Unsupported("quadric dimension must be at least 1".into()));
    }
    let m = (n as usize + 1) / 2;
    let even = n % 2 == 0;
    let mut names: Vec<String> = Vec::new();
    for i in 1..=m {
        names.push(format!("x{i}"));
        names.push(format!("y{i}"));
    }
    if even {
        names.push("z".to_string());
    }
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let poly = RingCtx::polynomial(base, &name_refs)?;
    let mut rel = poly.zero();
    for i in 1..=m {
        let x = poly.var(&format!("x{i}"))?;
        let y = poly.var(&format!("y{i}"))?;
        rel = &rel + &(&x * &y);
    }
    if even {
        let z = poly.var("z")?;
        rel = &rel - &(&z + &z.pow(2));
    } else {
        rel = &rel - &poly.one();
    }
    RingCtx::quotient(&poly, &rel)
}


#[cfg(test)]
mod axiom_tests {
    use proptest::prelude::*;

    use super::*;
    use crate::scalar::ScalarRing;

    type TermSpec = (i64, u8, u8, u8);

    fn axiom_contexts() -> Vec<RingCtx> {
        let z = RingCtx::integers();
        let q = RingCtx::rationals();
        let f5 = RingCtx::prime_field(5).unwrap();
        vec![
            z.clone(),
            q.clone(),
            f5.clone(),
            RingCtx::polynomial(&z, &["x", "y"]).unwrap(),
            RingCtx::polynomial(&q, &["x", "y"]).unwrap(),
            RingCtx::polynomial(&f5, &["x", "y"]).unwrap(),
            quadric_ring(3, &q).unwrap(),
            quadric_ring(4, &f5).unwrap(),
        ]
    }

    fn build_elt(ctx: &RingCtx, spec: &[TermSpec]) -> RingElt {
        let mut acc = ctx.zero();
        for &(coeff, den, e1, e2) in spec {
            let mut term = ctx.from_i64(coeff);
            if ctx.scalar_kind() == Some(ScalarRing::Rat) {
                let d = ctx.from_i64(i64::from(den % 7) + 1);
                term = &term * &d.inv().unwrap();
            }
            if let Some(vars) = ctx.vars() {
                let x = ctx.var(&vars[0].clone()).unwrap();
                let y = ctx.var(&vars[1].clone()).unwrap();
                term = &term * &x.pow(u64::from(e1 % 3));
                term = &term * &y.pow(u64::from(e2 % 3));
            }
            acc = &acc + &term;
        }
        acc
    }

    fn term_spec() -> impl Strategy<Value = Vec<TermSpec>> {
        proptest::collection::vec((-9i64..=9, 0u8..8, 0u8..5, 0u8..5), 0..4)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn ring_axioms_hold_on_random_triples(
            sa in term_spec(),
            sb in term_spec(),
            sc in term_spec(),
        ) {
            for ctx in axiom_contexts() {
                let a = build_elt(&ctx, &sa);
                let b = build_elt(&ctx, &sb);
                let c = build_elt(&ctx, &sc);
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&a + &ctx.zero(), a.clone());
                prop_assert_eq!(&a * &ctx.one(), a.clone());
                prop_assert_eq!(&a - &a, ctx.zero());
            }
        }

        #[test]
        fn normal_form_is_idempotent_and_reduces_mod_the_relation(
            spec in term_spec(),
        ) {
            let rings = [
                quadric_ring(3, &RingCtx::rationals()).unwrap(),
                quadric_ring(4, &RingCtx::prime_field(5).unwrap()).unwrap(),
            ];
            for ring in &rings {
                let base = ring.poly_base().unwrap();
                let f = build_elt(base, &spec);
                let nf = normal_form(&f, ring).unwrap();
                prop_assert_eq!(normal_form(&nf, ring).unwrap(), nf.clone());
                prop_assert_eq!(normal_form(&nf.lift(), ring).unwrap(), nf.clone());
                let diff = &f - &nf.lift();
                if !diff.is_zero() {
                    let scalar = base.scalar_kind().unwrap();
                    let modulus = ring.modulus_poly().unwrap();
                    let (_, rem) =
                        diff.as_poly().unwrap().div_rem(scalar, modulus).unwrap();
                    prop_assert!(rem.terms.is_empty());
                }
            }
        }
    }
}
