//! The split octonion algebra over a commutative ring, modeled as pairs of
//! 2x2 matrices.
//!
//! For u = (x, y) and v = (z, w) the product is
//!
//! ```text
//! u * v = (x z + w y*,  x* w + z y)
//! ```
//!
//! where `x*` is the adjugate [[d,-b],[-c,a]] of x = [[a,b],[c,d]], the
//! unique linear map with x x* = x* x = det(x) Id. The norm is
//! N(x, y) = det x - det y, the unit is (Id, 0), conjugation is
//! (x, y) -> (x*, -y), and the trace is Tr(x). The norm is multiplicative
//! and the algebra is alternative but not associative.

use crate::error::{Error, Result};
use crate::ring::{RingCtx, RingElt};

/// A 2x2 matrix [[a, b], [c, d]] over a ring context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2 {
    pub a: RingElt,
    pub b: RingElt,
    pub c: RingElt,
    pub d: RingElt,
}

impl Mat2 {
    pub fn new(a: RingElt, b: RingElt, c: RingElt, d: RingElt) -> Result<Mat2> {
        if a.ctx() != b.ctx() || a.ctx() != c.ctx() || a.ctx() != d.ctx() {
            return Err(Error::CtxMismatch);
        }
        Ok(Mat2 { a, b, c, d })
    }

    pub fn ctx(&self) -> &RingCtx {
        self.a.ctx()
    }

    pub fn zero(ctx: &RingCtx) -> Mat2 {
        Mat2 { a: ctx.zero(), b: ctx.zero(), c: ctx.zero(), d: ctx.zero() }
    }

    pub fn identity(ctx: &RingCtx) -> Mat2 {
        Mat2 { a: ctx.one(), b: ctx.zero(), c: ctx.zero(), d: ctx.one() }
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        Mat2 { a: &self.a + &o.a, b: &self.b + &o.b, c: &self.c + &o.c, d: &self.d + &o.d }
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        Mat2 { a: &self.a - &o.a, b: &self.b - &o.b, c: &self.c - &o.c, d: &self.d - &o.d }
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }

    pub fn scale(&self, s: &RingElt) -> Mat2 {
        Mat2 { a: &self.a * s, b: &self.b * s, c: &self.c * s, d: &self.d * s }
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        }
    }

    /// Adjugate: [[d, -b], [-c, a]]; satisfies m * m.star() = det(m) * Id.
    pub fn star(&self) -> Mat2 {
        Mat2 { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() }
    }

    pub fn det(&self) -> RingElt {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn trace(&self) -> RingElt {
        &self.a + &self.d
    }
}

/// A split octonion: a pair of 2x2 matrices over a shared context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitOct {
    pub m1: Mat2,
    pub m2: Mat2,
}

impl SplitOct {
    pub fn new(m1: Mat2, m2: Mat2) -> Result<SplitOct> {
        if m1.ctx() != m2.ctx() {
            return Err(Error::CtxMismatch);
        }
        Ok(SplitOct { m1, m2 })
    }

    pub fn ctx(&self) -> &RingCtx {
        self.m1.ctx()
    }

    pub fn zero(ctx: &RingCtx) -> SplitOct {
        SplitOct { m1: Mat2::zero(ctx), m2: Mat2::zero(ctx) }
    }

    pub fn one(ctx: &RingCtx) -> SplitOct {
        SplitOct { m1: Mat2::identity(ctx), m2: Mat2::zero(ctx) }
    }

    pub fn add(&self, o: &SplitOct) -> Result<SplitOct> {
        self.check(o)?;
        Ok(SplitOct { m1: self.m1.add(&o.m1), m2: self.m2.add(&o.m2) })
    }

    pub fn sub(&self, o: &SplitOct) -> Result<SplitOct> {
        self.check(o)?;
        Ok(SplitOct { m1: self.m1.sub(&o.m1), m2: self.m2.sub(&o.m2) })
    }

    pub fn neg(&self) -> SplitOct {
        SplitOct { m1: self.m1.neg(), m2: self.m2.neg() }
    }

    pub fn scale(&self, s: &RingElt) -> SplitOct {
        SplitOct { m1: self.m1.scale(s), m2: self.m2.scale(s) }
    }

    fn check(&self, o: &SplitOct) -> Result<()> {
        if self.ctx() != o.ctx() {
            return Err(Error::CtxMismatch);
        }
        Ok(())
    }

    /// (x, y)(z, w) = (x z + w y*, x* w + z y).
    pub fn mul(&self, o: &SplitOct) -> Result<SplitOct> {
        self.check(o)?;
        let (x, y) = (&self.m1, &self.m2);
        let (z, w) = (&o.m1, &o.m2);
        Ok(SplitOct {
            m1: x.mul(z).add(&w.mul(&y.star())),
            m2: x.star().mul(w).add(&z.mul(y)),
        })
    }

    pub fn norm(&self) -> RingElt {
        &self.m1.det() - &self.m2.det()
    }

    pub fn conj(&self) -> SplitOct {
        SplitOct { m1: self.m1.star(), m2: self.m2.neg() }
    }

    pub fn trace(&self) -> RingElt {
        self.m1.trace()
    }

    /// Polarization of the norm: B(u, v) = N(u+v) - N(u) - N(v).
    pub fn bilinear(&self, o: &SplitOct) -> Result<RingElt> {
        let sum = self.add(o)?;
        Ok(&(&sum.norm() - &self.norm()) - &o.norm())
    }

    /// Two-sided inverse N(u)^{-1} * conj(u); requires the norm to be a
    /// unit of the ring.
    pub fn inverse(&self) -> Result<SplitOct> {
        let n = self.norm();
        let ninv = n.inv().map_err(|_| Error::NonUnitNorm)?;
        Ok(self.conj().scale(&ninv))
    }

    /// Coordinates in the fixed basis: entries (a,b,c,d) of m1 then of m2.
    pub fn coords(&self) -> [RingElt; 8] {
        [
            self.m1.a.clone(),
            self.m1.b.clone(),
            self.m1.c.clone(),
            self.m1.d.clone(),
            self.m2.a.clone(),
            self.m2.b.clone(),
            self.m2.c.clone(),
            self.m2.d.clone(),
        ]
    }

    pub fn from_coords(ctx: &RingCtx, coords: &[RingElt]) -> Result<SplitOct> {
        if coords.len() != 8 {
            return Err(Error::LengthMismatch { expected: 8, got: coords.len() });
        }
        for c in coords {
            if c.ctx() != ctx {
                return Err(Error::CtxMismatch);
            }
        }
        Ok(SplitOct {
            m1: Mat2 {
                a: coords[0].clone(),
                b: coords[1].clone(),
                c: coords[2].clone(),
                d: coords[3].clone(),
            },
            m2: Mat2 {
                a: coords[4].clone(),
                b: coords[5].clone(),
                c: coords[6].clone(),
                d: coords[7].clone(),
            },
        })
    }

    /// The eight basis elements (matrix units of m1, then of m2), in the
    /// same order as [`SplitOct::coords`].
    pub fn basis(ctx: &RingCtx) -> [SplitOct; 8] {
        std::array::from_fn(|i| {
            let mut coords: Vec<RingElt> = (0..8).map(|_| ctx.zero()).collect();
            coords[i] = ctx.one();
            SplitOct::from_coords(ctx, &coords).unwrap()
        })
    }
}

/// The 8x8 Gram matrix B(b_i, b_j) of the polarized norm in the fixed
/// basis; entries land in `ctx`.
pub fn norm_gram(ctx: &RingCtx) -> crate::linalg::Mat {
    let basis = SplitOct::basis(ctx);
    let rows: Vec<Vec<RingElt>> = basis
        .iter()
        .map(|u| basis.iter().map(|v| u.bilinear(v).unwrap()).collect())
        .collect();
    crate::linalg::Mat::from_rows(ctx, rows).unwrap()
}
