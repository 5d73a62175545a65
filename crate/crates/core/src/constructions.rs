//! Explicit constructions on unimodular rows and the polynomial tower
//! behind low-dimensional stably free modules.
//!
//! A pair of rows (v, w) of length r with pairing sum v_i w_i produces the
//! Suslin matrix S(v, w) of size 2^(r-1) through the block recursion
//!
//! ```text
//! S(a0) = (a0)        S(v, w) = [ a0 Id          S(v', w') ]
//!                               [ -S(w', v')^T       b0 Id ]
//! ```
//!
//! where v = (a0, v') and w = (b0, w'). For r >= 2 its determinant is
//! (sum v_i w_i)^(2^(r-2)), so a unimodular pair yields a special linear
//! matrix and the quadric sum x_i y_i = 1 maps into SL_{2^(r-1)}.
//!
//! On the coordinate ring of the 7-dimensional quadric
//! sum_{i=1}^4 x_i y_i = 1, the row (x1^n, x2, x3, x4) is unimodular with
//! witness (y1^n, s y2, s y3, s y4) for s = sum_{j<n} (x1 y1)^j, since the
//! geometric series gives s (1 - x1 y1) = 1 - (x1 y1)^n.
//!
//! The Mohan Kumar tower starts from a cubic f over a field with f(0)
//! invertible, homogenizes it to the binary form F(x0, x1) = x1^3 f(x0/x1),
//! and iterates F_1 = F, F_{i+1} = F(F_i, a^(t_i) x_{i+1}^(3^i)) with
//! t_i = (3^i - 1)/2, so F_i is homogeneous of degree 3^i in x0..xi. With
//! G = F_3 - a^(t_3) x4^e, any common zero of F_3 and G forces x4 = 0 and
//! then F_4 = F(0, 0) = 0, so the complements of F_3 and G cover the
//! complement of F_4; the cover check certifies this pointwise over a
//! prime field. A deterministic univariate irreducibility test (Frobenius
//! fixed points plus coprimality at maximal proper subfield degrees)
//! certifies base cubics with f(x^27) irreducible.

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::census::CountReport;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::poly::{Monomial, Poly};
use crate::ring::{CtxNode, RingCtx, RingElt};
use crate::scalar::{is_prime_u64, Scalar, ScalarRing};
use crate::zorn::UnimodularRow;

fn dot(a: &[RingElt], b: &[RingElt]) -> RingElt {
    let mut acc = a[0].ctx().zero();
    for (x, y) in a.iter().zip(b) {
        acc = &acc + &(x * y);
    }
    acc
}

/// The recursive block matrix of a pair of equal-length rows.
#[derive(Debug, Clone)]
pub struct SuslinMatrix {
    v: Vec<RingElt>,
    w: Vec<RingElt>,
    mat: Mat,
}

impl SuslinMatrix {
    pub fn ctx(&self) -> &RingCtx {
        self.v[0].ctx()
    }

    pub fn v(&self) -> &[RingElt] {
        &self.v
    }

    pub fn w(&self) -> &[RingElt] {
        &self.w
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    /// Matrix size 2^(r-1) for row length r.
    pub fn size(&self) -> usize {
        1usize << (self.v.len() - 1)
    }

    /// The pairing sum v_i w_i.
    pub fn pairing(&self) -> RingElt {
        dot(&self.v, &self.w)
    }

    pub fn det(&self) -> Result<RingElt> {
        self.mat.det()
    }

    /// (sum v_i w_i)^(2^(r-2)), the determinant the recursion guarantees.
    pub fn expected_det(&self) -> RingElt {
        self.pairing().pow(1u64 << (self.v.len() - 2))
    }

    pub fn det_matches(&self) -> Result<bool> {
        Ok(self.det()? == self.expected_det())
    }
}

fn suslin_block(ctx: &RingCtx, v: &[RingElt], w: &[RingElt]) -> Vec<Vec<RingElt>> {
    if v.len() == 1 {
        return vec![vec![v[0].clone()]];
    }
    let s = suslin_block(ctx, &v[1..], &w[1..]);
    let t = suslin_block(ctx, &w[1..], &v[1..]);
    let half = s.len();
    let mut rows = Vec::with_capacity(2 * half);
    for i in 0..half {
        let mut row = Vec::with_capacity(2 * half);
        for j in 0..half {
            row.push(if i == j { v[0].clone() } else { ctx.zero() });
        }
        row.extend(s[i].iter().cloned());
        rows.push(row);
    }
    for i in 0..half {
        let mut row = Vec::with_capacity(2 * half);
        for j in 0..half {
            row.push(-&t[j][i]);
        }
        for j in 0..half {
            row.push(if i == j { w[0].clone() } else { ctx.zero() });
        }
        rows.push(row);
    }
    rows
}

/// Build the Suslin matrix of two rows of the same length r >= 2 over a
/// common context.
pub fn suslin_matrix(v: &[RingElt], w: &[RingElt]) -> Result<SuslinMatrix> {
    if v.len() != w.len() {
        return Err(Error::LengthMismatch { expected: v.len(), got: w.len() });
    }
    if v.len() < 2 {
        return Err(Error::LengthMismatch { expected: 2, got: v.len() });
    }
    let ctx = v[0].ctx().clone();
    if v.iter().chain(w).any(|e| e.ctx() != &ctx) {
        return Err(Error::CtxMismatch);
    }
    let rows = suslin_block(&ctx, v, w);
    let mat = Mat::from_rows(&ctx, rows)?;
    Ok(SuslinMatrix { v: v.to_vec(), w: w.to_vec(), mat })
}

/// The unimodular row (x1^n, x2, x3, x4) on a ring with variables
/// x1..x4, y1..y4, witnessed by (y1^n, s y2, s y3, s y4) with
/// s = sum_{j<n} (x1 y1)^j. The constructor of the returned row verifies
/// that the pairing reduces to 1, so the ring must satisfy the quadric
/// relation sum x_i y_i = 1.
pub fn power_row_witness(n: u64, ring: &RingCtx) -> Result<UnimodularRow> {
    if n == 0 {
        return Err(Error::Unsupported("the power must be at least 1".into()));
    }
    let x1 = ring.var("x1")?;
    let y1 = ring.var("y1")?;
    let mut v = vec![x1.pow(n)];
    let mut w = vec![y1.pow(n)];
    let x1y1 = &x1 * &y1;
    let mut s = ring.zero();
    let mut term = ring.one();
    for _ in 0..n {
        s = &s + &term;
        term = &term * &x1y1;
    }
    for i in 2..=4 {
        v.push(ring.var(&format!("x{i}"))?);
        w.push(&s * &ring.var(&format!("y{i}"))?);
    }
    UnimodularRow::new(v, w)
}

fn scalar_pow(srk: ScalarRing, a: &Scalar, mut e: u64) -> Scalar {
    let mut acc = srk.one();
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = srk.mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = srk.mul(&base, &base);
        }
    }
    acc
}

/// The binary form x1^3 f(x0/x1) of a cubic, as a polynomial in two slots.
fn binary_form(fp: &Poly, srk: ScalarRing) -> Poly {
    let mut bf = Poly::zero(2);
    for (m, c) in &fp.terms {
        bf.add_term(srk, Monomial(vec![m.0[0], 3 - m.0[0]]), c.clone());
    }
    bf
}

fn univariate_over(f: &RingElt) -> Result<(RingCtx, String, ScalarRing)> {
    let CtxNode::Polynomial { base, vars } = f.ctx().node() else {
        return Err(Error::Unsupported("a univariate polynomial ring is required".into()));
    };
    if vars.len() != 1 {
        return Err(Error::Unsupported("a univariate polynomial ring is required".into()));
    }
    Ok((base.clone(), vars[0].clone(), base.scalar_kind().unwrap()))
}

/// The tower of forms F_1..F_4 over k[x0..x4], together with the cover
/// polynomial G = F_3 - a^(t_3) x4^e.
#[derive(Debug, Clone)]
pub struct MKSystem {
    f: RingElt,
    a: RingElt,
    exponent: u64,
    t: [u64; 4],
    ring: RingCtx,
    forms: [RingElt; 4],
    g: RingElt,
}

/// Degrees and homogeneity of a built tower. The recursion produces the
/// monomial x4^27 at level 4; a different cover exponent is legal but
/// breaks homogeneity of G, so the report states both.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MKReport {
    pub t: [u64; 4],
    pub degrees: [u64; 4],
    pub homogeneous: [bool; 4],
    pub g_degree: u64,
    pub g_homogeneous: bool,
    pub exponent: u64,
    pub recursion_exponent: u64,
    pub exponent_matches_recursion: bool,
}

impl MKSystem {
    pub fn f(&self) -> &RingElt {
        &self.f
    }

    pub fn a(&self) -> &RingElt {
        &self.a
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// t_i = (3^i - 1) / 2 for i = 1..4.
    pub fn t(&self) -> [u64; 4] {
        self.t
    }

    /// The polynomial ring k[x0..x4] holding the forms.
    pub fn ring(&self) -> &RingCtx {
        &self.ring
    }

    /// F_1..F_4.
    pub fn forms(&self) -> &[RingElt; 4] {
        &self.forms
    }

    pub fn g(&self) -> &RingElt {
        &self.g
    }

    pub fn report(&self) -> MKReport {
        let mut degrees = [0u64; 4];
        let mut homogeneous = [false; 4];
        for i in 0..4 {
            let p = self.forms[i].as_poly().expect("forms are polynomials");
            degrees[i] = p.total_degree().unwrap_or(0);
            homogeneous[i] = p.is_homogeneous_of_degree(3u64.pow(i as u32 + 1));
        }
        let gp = self.g.as_poly().expect("G is a polynomial");
        MKReport {
            t: self.t,
            degrees,
            homogeneous,
            g_degree: gp.total_degree().unwrap_or(0),
            g_homogeneous: gp.is_homogeneous_of_degree(27),
            exponent: self.exponent,
            recursion_exponent: 27,
            exponent_matches_recursion: self.exponent == 27,
        }
    }
}

/// Build the tower from a cubic f with f(0) invertible and a unit a, both
/// constants of the same univariate ring over a field. The cover exponent
/// is the power of x4 subtracted from F_3 to form G; 27 continues the
/// recursion pattern.
pub fn mk_polys(f: &RingElt, a: &RingElt, exponent: u64) -> Result<MKSystem> {
    let (base, _, srk) = univariate_over(f)?;
    if !base.is_field() {
        return Err(Error::Unsupported("the coefficients must come from a field".into()));
    }
    let fp = f.as_poly().expect("polynomial context");
    if fp.total_degree() != Some(3) {
        return Err(Error::DegreeNotThree);
    }
    if srk.is_zero(&fp.constant_coeff(srk)) {
        return Err(Error::NotUnit);
    }
    if a.ctx() != f.ctx() {
        return Err(Error::CtxMismatch);
    }
    let a_val = a.constant_value().ok_or(Error::NotUnit)?;
    if srk.is_zero(&a_val) {
        return Err(Error::NotUnit);
    }
    let e32 = u32::try_from(exponent)
        .map_err(|_| Error::Unsupported("the cover exponent does not fit a monomial".into()))?;
    if e32 == 0 {
        return Err(Error::Unsupported("the cover exponent must be positive".into()));
    }
    let mut t = [0u64; 4];
    for (i, slot) in t.iter_mut().enumerate() {
        *slot = (3u64.pow(i as u32 + 1) - 1) / 2;
    }
    let ring = RingCtx::polynomial(&base, &["x0", "x1", "x2", "x3", "x4"])?;
    let bf = binary_form(fp, srk);
    let mut forms: Vec<Poly> =
        vec![bf.compose(srk, &[Poly::var(5, srk, 0), Poly::var(5, srk, 1)], 5)];
    for i in 1..4usize {
        let mut mono = Monomial::one(5);
        mono.0[i + 1] = 3u32.pow(i as u32);
        let mut arg = Poly::zero(5);
        arg.add_term(srk, mono, scalar_pow(srk, &a_val, t[i - 1]));
        let next = bf.compose(srk, &[forms[i - 1].clone(), arg], 5);
        forms.push(next);
    }
    let mut cover_mono = Monomial::one(5);
    cover_mono.0[4] = e32;
    let mut cover = Poly::zero(5);
    cover.add_term(srk, cover_mono, scalar_pow(srk, &a_val, t[2]));
    let g = ring.elt_from_poly(forms[2].sub(srk, &cover));
    let forms: Vec<RingElt> = forms.into_iter().map(|p| ring.elt_from_poly(p)).collect();
    let forms: [RingElt; 4] = forms.try_into().expect("four levels");
    Ok(MKSystem { f: f.clone(), a: a.clone(), exponent, t, ring, forms, g })
}

/// Values of (F_3, G, F_4) at a point, computed through the defining
/// recursion rather than the expanded forms.
fn tower_values(sys: &MKSystem, bf: &Poly, point: &[Scalar; 5]) -> (Scalar, Scalar, Scalar) {
    let srk = sys.ring.scalar_kind().expect("polynomial ring");
    let a_val = sys.a.constant_value().expect("a is a constant");
    let mut u = bf.eval(srk, &point[0..2]);
    for i in 1..=2u32 {
        let arg = srk.mul(
            &scalar_pow(srk, &a_val, sys.t[i as usize - 1]),
            &scalar_pow(srk, &point[i as usize + 1], 3u64.pow(i)),
        );
        u = bf.eval(srk, &[u, arg]);
    }
    let f3 = u;
    let a_t3 = scalar_pow(srk, &a_val, sys.t[2]);
    let arg4 = srk.mul(&a_t3, &scalar_pow(srk, &point[4], 27));
    let f4 = bf.eval(srk, &[f3.clone(), arg4]);
    let g = srk.sub(&f3, &srk.mul(&a_t3, &scalar_pow(srk, &point[4], sys.exponent)));
    (f3, g, f4)
}

/// Locus sizes from enumerating all q^5 points: how often F_3, G, and F_4
/// vanish, how often F_3 and G vanish together, and how many of those
/// common zeros escape V(F_4). The cover property is zero escapes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MKCoverReport {
    pub q: u64,
    pub points: u128,
    pub f3_zeros: u128,
    pub g_zeros: u128,
    pub common_zeros: u128,
    pub f4_zeros: u128,
    pub violations: u128,
    pub covered: bool,
}

impl MKCoverReport {
    pub fn as_count_report(&self) -> CountReport {
        CountReport {
            label: "V(F3) and V(G) meet inside V(F4)".to_string(),
            q: self.q,
            observed: self.violations,
            predicted: 0,
            matches: self.violations == 0,
        }
    }
}

/// Enumerate the points of A^5 over the system's prime field and verify
/// that no common zero of F_3 and G lies outside V(F_4).
pub fn mk_cover_check(sys: &MKSystem, budget: u128) -> Result<MKCoverReport> {
    let Some(ScalarRing::Fp(q)) = sys.ring.scalar_kind() else {
        return Err(Error::Unsupported("the cover check enumerates a prime field".into()));
    };
    let srk = ScalarRing::Fp(q);
    let needed = (q as u128)
        .checked_pow(5)
        .ok_or_else(|| Error::Unsupported("the point count overflows".into()))?;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let elems: Vec<Scalar> = (0..q).map(|x| srk.from_bigint(&BigInt::from(x))).collect();
    let bf = binary_form(sys.f.as_poly().expect("polynomial"), srk);
    let mut report = MKCoverReport {
        q,
        points: needed,
        f3_zeros: 0,
        g_zeros: 0,
        common_zeros: 0,
        f4_zeros: 0,
        violations: 0,
        covered: false,
    };
    for c in 0..needed {
        let mut k = c;
        let mut point: [Scalar; 5] =
            [srk.zero(), srk.zero(), srk.zero(), srk.zero(), srk.zero()];
        for slot in &mut point {
            *slot = elems[(k % q as u128) as usize].clone();
            k /= q as u128;
        }
        let (f3, g, f4) = tower_values(sys, &bf, &point);
        let f3z = srk.is_zero(&f3);
        let gz = srk.is_zero(&g);
        let f4z = srk.is_zero(&f4);
        if f3z {
            report.f3_zeros += 1;
        }
        if gz {
            report.g_zeros += 1;
        }
        if f4z {
            report.f4_zeros += 1;
        }
        if f3z && gz {
            report.common_zeros += 1;
            if !f4z {
                report.violations += 1;
            }
        }
    }
    report.covered = report.violations == 0;
    Ok(report)
}

/// f(x^k) for univariate f.
pub fn substitute_power(f: &RingElt, k: u32) -> Result<RingElt> {
    let (_, _, srk) = univariate_over(f)?;
    let fp = f.as_poly().expect("polynomial context");
    let mut out = Poly::zero(1);
    for (m, c) in &fp.terms {
        out.add_term(srk, Monomial(vec![m.0[0] * k]), c.clone());
    }
    Ok(f.ctx().elt_from_poly(out))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn gcd_is_constant(srk: ScalarRing, a: &Poly, b: &Poly) -> bool {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, lc) = b.leading().expect("nonzero");
        let monic = b.scale(srk, &srk.inv(lc).expect("field"));
        let (_, r) = a.div_rem(srk, &monic).expect("unit leading coefficient");
        a = b;
        b = r;
    }
    a.total_degree() == Some(0)
}

/// Deterministic irreducibility over a prime field for degree up to 128:
/// g of degree d is irreducible iff x^(q^d) = x mod g and, for every prime
/// l dividing d, x^(q^(d/l)) - x is coprime to g.
pub fn irreducible_check(g: &RingElt) -> Result<bool> {
    let (base, var, srk) = univariate_over(g)?;
    let ScalarRing::Fp(q) = srk else {
        return Err(Error::Unsupported("irreducibility runs over a prime field".into()));
    };
    let _ = base;
    let gp = g.as_poly().expect("polynomial context");
    let d = match gp.total_degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::Unsupported("irreducibility needs positive degree".into())),
    };
    if d > 128 {
        return Err(Error::Unsupported("the degree cap is 128".into()));
    }
    if d == 1 {
        return Ok(true);
    }
    let (_, lc) = gp.leading().expect("nonzero");
    let monic_poly = gp.scale(srk, &srk.inv(lc).expect("field"));
    let monic = g.ctx().elt_from_poly(monic_poly.clone());
    let modular = RingCtx::quotient(g.ctx(), &monic)?;
    let xbar = modular.var(&var)?;
    let mut frob = vec![xbar.clone()];
    for _ in 1..=d {
        frob.push(frob.last().unwrap().pow(q));
    }
    if frob[d as usize] != xbar {
        return Ok(false);
    }
    for l in prime_factors(d) {
        let h = &frob[(d / l) as usize] - &xbar;
        if h.is_zero() {
            return Ok(false);
        }
        let lifted = h.lift();
        if !gcd_is_constant(srk, lifted.as_poly().expect("polynomial"), &monic_poly) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Scan primes q up to the limit and monic cubics f = x^3 + c2 x^2 +
/// c1 x + c0 with c0 nonzero, in increasing (q, c2, c1, c0) order, for
/// the first f with f(x^27) irreducible over F_q.
pub fn find_mk_cubic(q_limit: u64) -> Result<(u64, RingElt)> {
    for q in 2..=q_limit {
        if !is_prime_u64(q) {
            continue;
        }
        let fq = RingCtx::prime_field(q)?;
        let kx = RingCtx::polynomial(&fq, &["x"])?;
        let x = kx.var("x")?;
        for c2 in 0..q {
            for c1 in 0..q {
                for c0 in 1..q {
                    let f = &(&(&x.pow(3) + &x.pow(2).scale_i64(c2 as i64))
                        + &x.scale_i64(c1 as i64))
                        + &kx.from_i64(c0 as i64);
                    if irreducible_check(&substitute_power(&f, 27)?)? {
                        return Ok((q, f));
                    }
                }
            }
        }
    }
    Err(Error::Unsupported(format!("no qualifying cubic found up to q = {q_limit}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_elt;
    use crate::points::DEFAULT_BUDGET;
    use crate::ring::quadric_ring;
    use crate::rng::SplitMix64;
    use crate::zorn::{Module3, ZornAlgebra};

    #[test]
    fn suslin_two_by_two_matches_the_closed_form() {
        let z = RingCtx::integers();
        let ring = RingCtx::polynomial(&z, &["a0", "a1", "b0", "b1"]).unwrap();
        let a0 = ring.var("a0").unwrap();
        let a1 = ring.var("a1").unwrap();
        let b0 = ring.var("b0").unwrap();
        let b1 = ring.var("b1").unwrap();
        let s = suslin_matrix(&[a0.clone(), a1.clone()], &[b0.clone(), b1.clone()]).unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(*s.mat().at(0, 0), a0);
        assert_eq!(*s.mat().at(0, 1), a1);
        assert_eq!(*s.mat().at(1, 0), -&b1);
        assert_eq!(*s.mat().at(1, 1), b0);
        let det = s.det().unwrap();
        assert_eq!(det, &(&a0 * &b0) + &(&a1 * &b1));
        assert_eq!(det, s.pairing());
        assert!(s.det_matches().unwrap());
    }

    #[test]
    fn suslin_determinant_is_a_power_of_the_pairing() {
        let z = RingCtx::integers();
        for r in [3usize, 4] {
            let mut names = Vec::new();
            for i in 0..r {
                names.push(format!("a{i}"));
            }
            for i in 0..r {
                names.push(format!("b{i}"));
            }
            let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let ring = RingCtx::polynomial(&z, &name_refs).unwrap();
            let v: Vec<RingElt> =
                (0..r).map(|i| ring.var(&format!("a{i}")).unwrap()).collect();
            let w: Vec<RingElt> =
                (0..r).map(|i| ring.var(&format!("b{i}")).unwrap()).collect();
            let s = suslin_matrix(&v, &w).unwrap();
            assert_eq!(s.size(), 1 << (r - 1));
            assert_eq!(s.det().unwrap(), s.pairing().pow(1 << (r - 2)), "r = {r}");
        }
    }

    #[test]
    fn suslin_validation_and_unimodular_specialization() {
        let z = RingCtx::integers();
        let one = z.one();
        let zero = z.zero();
        assert_eq!(
            suslin_matrix(&[one.clone()], &[one.clone()]).unwrap_err(),
            Error::LengthMismatch { expected: 2, got: 1 }
        );
        assert_eq!(
            suslin_matrix(&[one.clone(), zero.clone()], &[one.clone()]).unwrap_err(),
            Error::LengthMismatch { expected: 2, got: 1 }
        );
        let q = RingCtx::rationals();
        assert_eq!(
            suslin_matrix(&[z.one(), z.zero()], &[q.one(), q.zero()]).unwrap_err(),
            Error::CtxMismatch
        );
        let v = [one.clone(), zero.clone(), zero.clone(), zero.clone()];
        let s = suslin_matrix(&v, &v).unwrap();
        assert_eq!(s.size(), 8);
        assert!(s.pairing().is_one());
        assert!(s.det().unwrap().is_one());
    }

    #[test]
    fn suslin_on_the_five_quadric_lands_in_sl4() {
        let a = quadric_ring(5, &RingCtx::rationals()).unwrap();
        let v: Vec<RingElt> = (1..=3).map(|i| a.var(&format!("x{i}")).unwrap()).collect();
        let w: Vec<RingElt> = (1..=3).map(|i| a.var(&format!("y{i}")).unwrap()).collect();
        let s = suslin_matrix(&v, &w).unwrap();
        assert_eq!(s.size(), 4);
        assert!(s.pairing().is_one());
        assert!(s.det().unwrap().is_one());
    }

    #[test]
    fn power_rows_are_unimodular_up_to_the_sixth_power() {
        for base in [RingCtx::rationals(), RingCtx::prime_field(5).unwrap()] {
            let a = quadric_ring(7, &base).unwrap();
            for n in 1..=6u64 {
                let row = power_row_witness(n, &a).unwrap();
                assert_eq!(dot(row.v(), row.w()), a.one(), "n = {n}");
            }
        }
    }

    #[test]
    fn power_row_witness_shapes() {
        let a = quadric_ring(7, &RingCtx::rationals()).unwrap();
        let row = power_row_witness(1, &a).unwrap();
        for (i, wi) in row.w().iter().enumerate() {
            assert_eq!(*wi, a.var(&format!("y{}", i + 1)).unwrap());
        }
        let row2 = power_row_witness(2, &a).unwrap();
        let x1 = a.var("x1").unwrap();
        let y1 = a.var("y1").unwrap();
        let s = &a.one() + &(&x1 * &y1);
        assert_eq!(row2.v()[0], x1.pow(2));
        assert_eq!(row2.w()[0], y1.pow(2));
        assert_eq!(row2.w()[1], &s * &a.var("y2").unwrap());
        assert_eq!(
            power_row_witness(0, &a).unwrap_err(),
            Error::Unsupported("the power must be at least 1".into())
        );
        let plain = RingCtx::polynomial(&RingCtx::rationals(), &["u"]).unwrap();
        assert!(power_row_witness(1, &plain).is_err());
    }

    #[test]
    fn power_row_zorn_algebra_satisfies_the_composition_identity() {
        let a = quadric_ring(7, &RingCtx::prime_field(5).unwrap()).unwrap();
        let row = power_row_witness(2, &a).unwrap();
        let module = Module3::from_row(row);
        assert!(module.rank_certificate().unwrap().ok());
        let alg = ZornAlgebra::new(module);
        let mut rng = SplitMix64::new(11);
        let random_vec = |rng: &mut SplitMix64| -> Vec<RingElt> {
            (0..4).map(|_| a.from_i64(rng.range_i64(-2, 2))).collect()
        };
        for _ in 0..2 {
            let u = alg
                .elt(
                    a.from_i64(rng.range_i64(-2, 2)),
                    alg.module().project_vector(&random_vec(&mut rng)).unwrap(),
                    alg.module().project_covector(&random_vec(&mut rng)).unwrap(),
                    a.from_i64(rng.range_i64(-2, 2)),
                )
                .unwrap();
            let v = alg
                .elt(
                    a.from_i64(rng.range_i64(-2, 2)),
                    alg.module().project_vector(&random_vec(&mut rng)).unwrap(),
                    alg.module().project_covector(&random_vec(&mut rng)).unwrap(),
                    a.from_i64(rng.range_i64(-2, 2)),
                )
                .unwrap();
            let uv = alg.mul(&u, &v).unwrap();
            assert_eq!(alg.norm(&uv), &alg.norm(&u) * &alg.norm(&v));
            assert_eq!(alg.trace(&uv), alg.trace(&alg.mul(&v, &u).unwrap()));
            let cc = alg.mul(&alg.conj(&v), &alg.conj(&u)).unwrap();
            assert_eq!(alg.conj(&uv), cc);
        }
    }

    #[test]
    fn mk_tower_over_f2_matches_the_hand_homogenization() {
        let f2 = RingCtx::prime_field(2).unwrap();
        let kx = RingCtx::polynomial(&f2, &["x"]).unwrap();
        let f = parse_elt("x^3 + x + 1", &kx).unwrap();
        let sys = mk_polys(&f, &kx.one(), 27).unwrap();
        assert_eq!(sys.t(), [1, 4, 13, 40]);
        let f1 = parse_elt("x0^3 + x0*x1^2 + x1^3", sys.ring()).unwrap();
        assert_eq!(sys.forms()[0], f1);
        let report = sys.report();
        assert_eq!(report.degrees, [3, 9, 27, 81]);
        assert_eq!(report.homogeneous, [true, true, true, true]);
        assert_eq!(report.g_degree, 27);
        assert!(report.g_homogeneous);
        assert!(report.exponent_matches_recursion);
    }

    #[test]
    fn mk_tower_validation() {
        let f3 = RingCtx::prime_field(3).unwrap();
        let kx = RingCtx::polynomial(&f3, &["x"]).unwrap();
        let quad = parse_elt("x^2 + 1", &kx).unwrap();
        assert_eq!(mk_polys(&quad, &kx.one(), 27).unwrap_err(), Error::DegreeNotThree);
        let no_unit = parse_elt("x^3 + x", &kx).unwrap();
        assert_eq!(mk_polys(&no_unit, &kx.one(), 27).unwrap_err(), Error::NotUnit);
        let f = parse_elt("x^3 + 2*x + 1", &kx).unwrap();
        assert_eq!(mk_polys(&f, &kx.zero(), 27).unwrap_err(), Error::NotUnit);
        let zx = RingCtx::polynomial(&RingCtx::integers(), &["x"]).unwrap();
        let fz = parse_elt("x^3 + x + 1", &zx).unwrap();
        assert!(matches!(mk_polys(&fz, &zx.one(), 27), Err(Error::Unsupported(_))));
    }

    #[test]
    fn mk_cover_holds_for_both_exponents() {
        let f3 = RingCtx::prime_field(3).unwrap();
        let kx = RingCtx::polynomial(&f3, &["x"]).unwrap();
        let f = parse_elt("x^3 + 2*x + 1", &kx).unwrap();
        let a = kx.from_i64(2);
        for exponent in [27u64, 11] {
            let sys = mk_polys(&f, &a, exponent).unwrap();
            let report = mk_cover_check(&sys, DEFAULT_BUDGET).unwrap();
            assert_eq!(report.points, 243);
            assert!(report.covered, "exponent {exponent}");
            assert_eq!(report.violations, 0);
            assert!(report.common_zeros >= 1);
            assert!(report.as_count_report().matches);
            assert_eq!(sys.report().g_homogeneous, exponent == 27);
        }
        let f2 = RingCtx::prime_field(2).unwrap();
        let kx2 = RingCtx::polynomial(&f2, &["x"]).unwrap();
        let g = parse_elt("x^3 + x + 1", &kx2).unwrap();
        let sys2 = mk_polys(&g, &kx2.one(), 27).unwrap();
        let report2 = mk_cover_check(&sys2, DEFAULT_BUDGET).unwrap();
        assert_eq!(report2.points, 32);
        assert!(report2.covered);
        assert!(matches!(
            mk_cover_check(&sys2, 10),
            Err(Error::BudgetExceeded { needed: 32, budget: 10 })
        ));
    }

    #[test]
    fn mk_expanded_forms_agree_with_the_recursion_pointwise() {
        let f3 = RingCtx::prime_field(3).unwrap();
        let kx = RingCtx::polynomial(&f3, &["x"]).unwrap();
        let f = parse_elt("x^3 + 2*x + 1", &kx).unwrap();
        let sys = mk_polys(&f, &kx.from_i64(2), 27).unwrap();
        let srk = ScalarRing::Fp(3);
        let bf = binary_form(sys.f().as_poly().unwrap(), srk);
        let f3_poly = sys.forms()[2].as_poly().unwrap();
        let f4_poly = sys.forms()[3].as_poly().unwrap();
        let g_poly = sys.g().as_poly().unwrap();
        let mut rng = SplitMix64::new(5);
        for _ in 0..20 {
            let point: [Scalar; 5] = std::array::from_fn(|_| {
                srk.from_bigint(&BigInt::from(rng.below(3)))
            });
            let (f3v, gv, f4v) = tower_values(&sys, &bf, &point);
            assert_eq!(f3_poly.eval(srk, &point), f3v);
            assert_eq!(f4_poly.eval(srk, &point), f4v);
            assert_eq!(g_poly.eval(srk, &point), gv);
        }
    }

    #[test]
    fn irreducibility_certificate_matches_hand_checks() {
        let f3 = RingCtx::prime_field(3).unwrap();
        let kx3 = RingCtx::polynomial(&f3, &["x"]).unwrap();
        assert!(irreducible_check(&parse_elt("x^2 + 1", &kx3).unwrap()).unwrap());
        assert!(!irreducible_check(&parse_elt("x^2 - 1", &kx3).unwrap()).unwrap());
        assert!(!irreducible_check(&parse_elt("x^2 + x + 1", &kx3).unwrap()).unwrap());
        assert!(irreducible_check(&parse_elt("x + 2", &kx3).unwrap()).unwrap());
        let f5 = RingCtx::prime_field(5).unwrap();
        let kx5 = RingCtx::polynomial(&f5, &["x"]).unwrap();
        assert!(!irreducible_check(&parse_elt("x^2 + 1", &kx5).unwrap()).unwrap());
        assert!(irreducible_check(&parse_elt("x^2 + 2", &kx5).unwrap()).unwrap());
        let f2 = RingCtx::prime_field(2).unwrap();
        let kx2 = RingCtx::polynomial(&f2, &["x"]).unwrap();
        assert!(irreducible_check(&parse_elt("x^3 + x + 1", &kx2).unwrap()).unwrap());
        assert!(!irreducible_check(&parse_elt("x^3 + x^2 + x + 1", &kx2).unwrap()).unwrap());
        assert!(irreducible_check(&kx2.one()).is_err());
        let qx = RingCtx::polynomial(&RingCtx::rationals(), &["x"]).unwrap();
        assert!(irreducible_check(&parse_elt("x^2 + 1", &qx).unwrap()).is_err());
    }

    #[test]
    fn substitution_spreads_exponents() {
        let f2 = RingCtx::prime_field(2).unwrap();
        let kx = RingCtx::polynomial(&f2, &["x"]).unwrap();
        let f = parse_elt("x^3 + x + 1", &kx).unwrap();
        let g = substitute_power(&f, 2).unwrap();
        assert_eq!(g, parse_elt("x^6 + x^2 + 1", &kx).unwrap());
    }

    #[test]
    fn cubic_search_settles_on_seven() {
        let (q, f) = find_mk_cubic(7).unwrap();
        assert_eq!(q, 7);
        assert_eq!(f.to_text(), "x^3 + 2");
        assert!(irreducible_check(&substitute_power(&f, 27).unwrap()).unwrap());
        let sys = mk_polys(&f, &f.ctx().one(), 27).unwrap();
        let report = mk_cover_check(&sys, DEFAULT_BUDGET).unwrap();
        assert!(report.covered);
        assert_eq!(report.points, 16807);
    }
}
