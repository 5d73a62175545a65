//! Zorn vector matrices over oriented rank-3 projective modules.
//!
//! A unimodular row pair (v, w) of length 4 with sum v_i w_i = 1 presents
//! the projective module P = ker(v^T) = im(e) for the idempotent
//! e = Id - w v^T. Its dual P* sits inside the row vectors as
//! im(e^T) = { f : f(w) = 0 }. Both carry orientations through 4x4
//! determinants against the fixed row: the cross product of p, q in P is
//! the covector r -> det[p q r w], the dual cross of covectors a, b is the
//! vector with gamma -> det(rows a, b, gamma, v); both land back in the
//! module automatically because a repeated column or row kills the
//! determinant.
//!
//! The Zorn algebra on [R, P; P*, R] multiplies by
//!
//! ```text
//! [a1, x+; x-, a2] [b1, y+; y-, b2] =
//!   [a1 b1 - <x+, y->,            a1 y+ + b2 x+ + x- X y-;
//!    b1 x- + a2 y- + x+ X y+,     a2 b2 - <x-, y+>]
//! ```
//!
//! with norm N = a1 a2 + <x-, x+> and trace a1 + a2. For the free standard
//! row v = w = (0,0,0,1) this is the classical vector-matrix algebra: the
//! two cross operations restrict to the familiar cross product on the first
//! three coordinates, and the algebra is isomorphic to the split octonions
//! through the explicit basis correspondence in [`zorn_split_iso`].

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::oct::{Mat2, SplitOct};
use crate::ring::{RingCtx, RingElt};

fn dot(a: &[RingElt], b: &[RingElt]) -> RingElt {
    assert_eq!(a.len(), b.len());
    let mut acc = a[0].ctx().zero();
    for (x, y) in a.iter().zip(b) {
        acc = &acc + &(x * y);
    }
    acc
}

fn det_cols(ctx: &RingCtx, cols: [&[RingElt]; 4]) -> RingElt {
    let rows: Vec<Vec<RingElt>> =
        (0..4).map(|i| (0..4).map(|j| cols[j][i].clone()).collect()).collect();
    Mat::from_rows(ctx, rows).unwrap().det().unwrap()
}

fn det_rows(ctx: &RingCtx, rows: [&[RingElt]; 4]) -> RingElt {
    let rows: Vec<Vec<RingElt>> = rows.iter().map(|r| r.to_vec()).collect();
    Mat::from_rows(ctx, rows).unwrap().det().unwrap()
}

/// A pair of length-4 rows with sum v_i w_i = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodularRow {
    v: Vec<RingElt>,
    w: Vec<RingElt>,
}

impl UnimodularRow {
    pub fn new(v: Vec<RingElt>, w: Vec<RingElt>) -> Result<UnimodularRow> {
        if v.len() != 4 {
            return Err(Error::LengthMismatch { expected: 4, got: v.len() });
        }
        if w.len() != 4 {
            return Err(Error::LengthMismatch { expected: 4, got: w.len() });
        }
        let ctx = v[0].ctx().clone();
        if v.iter().chain(&w).any(|e| e.ctx() != &ctx) {
            return Err(Error::CtxMismatch);
        }
        if !dot(&v, &w).is_one() {
            return Err(Error::RowNotUnimodular);
        }
        Ok(UnimodularRow { v, w })
    }

    /// The standard free row v = w = (0, 0, 0, 1).
    pub fn free(ctx: &RingCtx) -> UnimodularRow {
        let mut v: Vec<RingElt> = (0..4).map(|_| ctx.zero()).collect();
        v[3] = ctx.one();
        UnimodularRow { v: v.clone(), w: v }
    }

    pub fn ctx(&self) -> &RingCtx {
        self.v[0].ctx()
    }

    pub fn v(&self) -> &[RingElt] {
        &self.v
    }

    pub fn w(&self) -> &[RingElt] {
        &self.w
    }

    pub fn is_free_standard(&self) -> bool {
        let ctx = self.ctx();
        let std = UnimodularRow::free(ctx);
        *self == std
    }
}

/// Oriented rank-3 projective module presented by a unimodular row.
#[derive(Debug, Clone)]
pub struct Module3 {
    row: UnimodularRow,
    e: Mat,
}

impl Module3 {
    pub fn from_row(row: UnimodularRow) -> Module3 {
        let ctx = row.ctx().clone();
        let mut e = Mat::identity(&ctx, 4);
        for i in 0..4 {
            for j in 0..4 {
                *e.at_mut(i, j) = &*e.at(i, j) - &(&row.w[i] * &row.v[j]);
            }
        }
        Module3 { row, e }
    }

    pub fn free(ctx: &RingCtx) -> Module3 {
        Module3::from_row(UnimodularRow::free(ctx))
    }

    pub fn ctx(&self) -> &RingCtx {
        self.row.ctx()
    }

    pub fn row(&self) -> &UnimodularRow {
        &self.row
    }

    /// The idempotent e = Id - w v^T with image P.
    pub fn idempotent(&self) -> &Mat {
        &self.e
    }

    pub fn is_free_standard(&self) -> bool {
        self.row.is_free_standard()
    }

    /// Membership of an ambient vector in P = { x : v . x = 0 }.
    pub fn contains_vector(&self, x: &[RingElt]) -> bool {
        x.len() == 4 && dot(&self.row.v, x).is_zero()
    }

    /// Membership of an ambient covector in P* = { f : f(w) = 0 }.
    pub fn contains_covector(&self, f: &[RingElt]) -> bool {
        f.len() == 4 && dot(f, &self.row.w).is_zero()
    }

    /// Projection e r of an arbitrary ambient vector into P.
    pub fn project_vector(&self, r: &[RingElt]) -> Result<Vec<RingElt>> {
        self.e.apply(r)
    }

    /// Projection e^T s of an arbitrary ambient covector into P*.
    pub fn project_covector(&self, s: &[RingElt]) -> Result<Vec<RingElt>> {
        self.e.transpose().apply(s)
    }

    /// Orientation: phi(p1, p2, p3) = det[p1 p2 p3 w], trivializing the
    /// third exterior power of P.
    pub fn orientation(&self, p1: &[RingElt], p2: &[RingElt], p3: &[RingElt]) -> Result<RingElt> {
        for p in [p1, p2, p3] {
            if !self.contains_vector(p) {
                return Err(Error::NotInModule);
            }
        }
        Ok(det_cols(self.ctx(), [p1, p2, p3, &self.row.w]))
    }

    /// Dual orientation: phi*(a1, a2, a3) = det of the rows a1, a2, a3, v.
    pub fn orientation_dual(
        &self,
        a1: &[RingElt],
        a2: &[RingElt],
        a3: &[RingElt],
    ) -> Result<RingElt> {
        for a in [a1, a2, a3] {
            if !self.contains_covector(a) {
                return Err(Error::NotInModule);
            }
        }
        Ok(det_rows(self.ctx(), [a1, a2, a3, &self.row.v]))
    }

    /// Cross product P x P -> P*: the covector r -> det[p q r w]. The
    /// result pairs to zero with w, hence lies in P*.
    pub fn cross(&self, p: &[RingElt], q: &[RingElt]) -> Result<Vec<RingElt>> {
        if !self.contains_vector(p) || !self.contains_vector(q) {
            return Err(Error::NotInModule);
        }
        let ctx = self.ctx();
        let mut out = Vec::with_capacity(4);
        for k in 0..4 {
            let mut ek: Vec<RingElt> = (0..4).map(|_| ctx.zero()).collect();
            ek[k] = ctx.one();
            out.push(det_cols(ctx, [p, q, &ek, &self.row.w]));
        }
        debug_assert!(self.contains_covector(&out));
        Ok(out)
    }

    /// Dual cross product P* x P* -> P: the vector u with gamma(u) =
    /// det(rows a, b, gamma, v). Pairs to zero with v, hence lies in P.
    pub fn cross_dual(&self, a: &[RingElt], b: &[RingElt]) -> Result<Vec<RingElt>> {
        if !self.contains_covector(a) || !self.contains_covector(b) {
            return Err(Error::NotInModule);
        }
        let ctx = self.ctx();
        let mut out = Vec::with_capacity(4);
        for k in 0..4 {
            let mut ek: Vec<RingElt> = (0..4).map(|_| ctx.zero()).collect();
            ek[k] = ctx.one();
            out.push(det_rows(ctx, [a, b, &ek, &self.row.v]));
        }
        debug_assert!(self.contains_vector(&out));
        Ok(out)
    }

    /// Direct-summand evidence for P + its trace. The idempotent square
    /// check and the splitting identity x = e x + w (v . x) hold for the
    /// four ambient basis vectors; trace(e) reduces to 3.
    pub fn rank_certificate(&self) -> Result<RankCertificate> {
        let ctx = self.ctx().clone();
        let idempotent_ok = self.e.mul(&self.e)? == self.e;
        let mut splitting_ok = true;
        for k in 0..4 {
            let mut ek: Vec<RingElt> = (0..4).map(|_| ctx.zero()).collect();
            ek[k] = ctx.one();
            let ex = self.e.apply(&ek)?;
            let vx = dot(&self.row.v, &ek);
            for i in 0..4 {
                let rhs = &ex[i] + &(&self.row.w[i] * &vx);
                if rhs != ek[i] {
                    splitting_ok = false;
                }
            }
        }
        let trace_is_three = self.e.trace()? == ctx.from_i64(3);
        let rank_over_field = if ctx.is_field() { Some(self.e.rank()?) } else { None };
        Ok(RankCertificate { idempotent_ok, splitting_ok, trace_is_three, rank_over_field })
    }
}

/// Evidence that the presented module is a rank-3 direct summand of R^4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCertificate {
    /// e . e = e exactly.
    pub idempotent_ok: bool,
    /// x = e x + w (v . x) for the ambient basis, so R^4 = P + R w.
    pub splitting_ok: bool,
    /// trace(e) = 4 - v . w = 3.
    pub trace_is_three: bool,
    /// Over field contexts, the rank of e from elimination.
    pub rank_over_field: Option<usize>,
}

impl RankCertificate {
    pub fn ok(&self) -> bool {
        self.idempotent_ok
            && self.splitting_ok
            && self.trace_is_three
            && self.rank_over_field.map(|r| r == 3).unwrap_or(true)
    }
}

/// An element [a1, x+; x-, a2] of the Zorn algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZornElt {
    pub a1: RingElt,
    pub xplus: Vec<RingElt>,
    pub xminus: Vec<RingElt>,
    pub a2: RingElt,
}

/// The Zorn vector-matrix algebra over a presented module.
#[derive(Debug, Clone)]
pub struct ZornAlgebra {
    module: Module3,
}

impl ZornAlgebra {
    pub fn new(module: Module3) -> ZornAlgebra {
        ZornAlgebra { module }
    }

    pub fn free(ctx: &RingCtx) -> ZornAlgebra {
        ZornAlgebra { module: Module3::free(ctx) }
    }

    pub fn ctx(&self) -> &RingCtx {
        self.module.ctx()
    }

    pub fn module(&self) -> &Module3 {
        &self.module
    }

    /// Build an element, checking the membership constraints.
    pub fn elt(
        &self,
        a1: RingElt,
        xplus: Vec<RingElt>,
        xminus: Vec<RingElt>,
        a2: RingElt,
    ) -> Result<ZornElt> {
        let ctx = self.ctx();
        if a1.ctx() != ctx
            || a2.ctx() != ctx
            || xplus.iter().any(|e| e.ctx() != ctx)
            || xminus.iter().any(|e| e.ctx() != ctx)
        {
            return Err(Error::CtxMismatch);
        }
        if xplus.len() != 4 {
            return Err(Error::LengthMismatch { expected: 4, got: xplus.len() });
        }
        if xminus.len() != 4 {
            return Err(Error::LengthMismatch { expected: 4, got: xminus.len() });
        }
        if !self.module.contains_vector(&xplus) || !self.module.contains_covector(&xminus) {
            return Err(Error::NotInModule);
        }
        Ok(ZornElt { a1, xplus, xminus, a2 })
    }

    /// Free-case convenience: three-coordinate vector and covector.
    pub fn elt_free(
        &self,
        a1: RingElt,
        xplus3: [RingElt; 3],
        xminus3: [RingElt; 3],
        a2: RingElt,
    ) -> Result<ZornElt> {
        if !self.module.is_free_standard() {
            return Err(Error::NotFreeCase);
        }
        let ctx = self.ctx();
        let [x1, x2, x3] = xplus3;
        let [y1, y2, y3] = xminus3;
        self.elt(a1, vec![x1, x2, x3, ctx.zero()], vec![y1, y2, y3, ctx.zero()], a2)
    }

    pub fn zero(&self) -> ZornElt {
        let ctx = self.ctx();
        let z: Vec<RingElt> = (0..4).map(|_| ctx.zero()).collect();
        ZornElt { a1: ctx.zero(), xplus: z.clone(), xminus: z, a2: ctx.zero() }
    }

    pub fn one(&self) -> ZornElt {
        let ctx = self.ctx();
        let z: Vec<RingElt> = (0..4).map(|_| ctx.zero()).collect();
        ZornElt { a1: ctx.one(), xplus: z.clone(), xminus: z, a2: ctx.one() }
    }

    pub fn add(&self, u: &ZornElt, v: &ZornElt) -> ZornElt {
        ZornElt {
            a1: &u.a1 + &v.a1,
            xplus: u.xplus.iter().zip(&v.xplus).map(|(a, b)| a + b).collect(),
            xminus: u.xminus.iter().zip(&v.xminus).map(|(a, b)| a + b).collect(),
            a2: &u.a2 + &v.a2,
        }
    }

    pub fn sub(&self, u: &ZornElt, v: &ZornElt) -> ZornElt {
        self.add(u, &self.neg(v))
    }

    pub fn neg(&self, u: &ZornElt) -> ZornElt {
        ZornElt {
            a1: -&u.a1,
            xplus: u.xplus.iter().map(|e| -e).collect(),
            xminus: u.xminus.iter().map(|e| -e).collect(),
            a2: -&u.a2,
        }
    }

    pub fn scale(&self, u: &ZornElt, c: &RingElt) -> ZornElt {
        ZornElt {
            a1: &u.a1 * c,
            xplus: u.xplus.iter().map(|e| e * c).collect(),
            xminus: u.xminus.iter().map(|e| e * c).collect(),
            a2: &u.a2 * c,
        }
    }

    /// The Zorn product.
    pub fn mul(&self, u: &ZornElt, v: &ZornElt) -> Result<ZornElt> {
        let cross = self.module.cross(&u.xplus, &v.xplus)?;
        let cross_dual = self.module.cross_dual(&u.xminus, &v.xminus)?;
        let a1 = &(&u.a1 * &v.a1) - &dot(&u.xplus, &v.xminus);
        let a2 = &(&u.a2 * &v.a2) - &dot(&u.xminus, &v.xplus);
        let xplus: Vec<RingElt> = (0..4)
            .map(|i| {
                &(&(&u.a1 * &v.xplus[i]) + &(&v.a2 * &u.xplus[i])) + &cross_dual[i]
            })
            .collect();
        let xminus: Vec<RingElt> = (0..4)
            .map(|i| {
                &(&(&v.a1 * &u.xminus[i]) + &(&u.a2 * &v.xminus[i])) + &cross[i]
            })
            .collect();
        Ok(ZornElt { a1, xplus, xminus, a2 })
    }

    /// N = a1 a2 + <x-, x+>.
    pub fn norm(&self, u: &ZornElt) -> RingElt {
        &(&u.a1 * &u.a2) + &dot(&u.xminus, &u.xplus)
    }

    pub fn trace(&self, u: &ZornElt) -> RingElt {
        &u.a1 + &u.a2
    }

    /// Conjugation trace(u) 1 - u = [a2, -x+; -x-, a1].
    pub fn conj(&self, u: &ZornElt) -> ZornElt {
        ZornElt {
            a1: u.a2.clone(),
            xplus: u.xplus.iter().map(|e| -e).collect(),
            xminus: u.xminus.iter().map(|e| -e).collect(),
            a2: u.a1.clone(),
        }
    }

    /// Polarization of the norm.
    pub fn bilinear(&self, u: &ZornElt, v: &ZornElt) -> RingElt {
        let sum = self.add(u, v);
        &(&self.norm(&sum) - &self.norm(u)) - &self.norm(v)
    }

    /// Free-case basis in the fixed order u1, p1, p2, p3, q1, q2, q3, u2.
    pub fn basis(&self) -> Result<[ZornElt; 8]> {
        if !self.module.is_free_standard() {
            return Err(Error::NotFreeCase);
        }
        let ctx = self.ctx().clone();
        let zero3 = || [ctx.zero(), ctx.zero(), ctx.zero()];
        let unit3 = |k: usize| {
            let mut v = [ctx.zero(), ctx.zero(), ctx.zero()];
            v[k] = ctx.one();
            v
        };
        let mut out: Vec<ZornElt> = Vec::with_capacity(8);
        out.push(self.elt_free(ctx.one(), zero3(), zero3(), ctx.zero())?);
        for k in 0..3 {
            out.push(self.elt_free(ctx.zero(), unit3(k), zero3(), ctx.zero())?);
        }
        for k in 0..3 {
            out.push(self.elt_free(ctx.zero(), zero3(), unit3(k), ctx.zero())?);
        }
        out.push(self.elt_free(ctx.zero(), zero3(), zero3(), ctx.one())?);
        Ok(out.try_into().unwrap())
    }

    /// Coordinates in the free-case basis, same order as [`Self::basis`].
    pub fn coords(&self, u: &ZornElt) -> Result<[RingElt; 8]> {
        if !self.module.is_free_standard() {
            return Err(Error::NotFreeCase);
        }
        Ok([
            u.a1.clone(),
            u.xplus[0].clone(),
            u.xplus[1].clone(),
            u.xplus[2].clone(),
            u.xminus[0].clone(),
            u.xminus[1].clone(),
            u.xminus[2].clone(),
            u.a2.clone(),
        ])
    }

    pub fn from_coords(&self, c: &[RingElt]) -> Result<ZornElt> {
        if c.len() != 8 {
            return Err(Error::LengthMismatch { expected: 8, got: c.len() });
        }
        self.elt_free(
            c[0].clone(),
            [c[1].clone(), c[2].clone(), c[3].clone()],
            [c[4].clone(), c[5].clone(), c[6].clone()],
            c[7].clone(),
        )
    }

    /// Generators of the Lagrangian submodule [0, P; 0, R] together with an
    /// exact isotropy and direct-summand certificate. Four generators in
    /// the free case (the three basis vectors of P and the a2 unit), five
    /// over a general row (the four columns of e and the a2 unit).
    pub fn lagrangian(&self) -> Result<(Vec<ZornElt>, LagrangianCertificate)> {
        let ctx = self.ctx().clone();
        let zero4: Vec<RingElt> = (0..4).map(|_| ctx.zero()).collect();
        let mut gens: Vec<ZornElt> = Vec::new();
        if self.module.is_free_standard() {
            for k in 0..3 {
                let mut x = zero4.clone();
                x[k] = ctx.one();
                gens.push(self.elt(ctx.zero(), x, zero4.clone(), ctx.zero())?);
            }
        } else {
            let e = self.module.idempotent();
            for k in 0..4 {
                gens.push(self.elt(ctx.zero(), e.col(k), zero4.clone(), ctx.zero())?);
            }
        }
        gens.push(self.elt(ctx.zero(), zero4.clone(), zero4.clone(), ctx.one())?);
        // N restricted to span(gens) vanishes iff all norms and pairwise
        // polarizations vanish: N(sum c_i g_i) expands into exactly those.
        let norms_zero = gens.iter().all(|g| self.norm(g).is_zero());
        let mut pairings_zero = true;
        for i in 0..gens.len() {
            for j in (i + 1)..gens.len() {
                if !self.bilinear(&gens[i], &gens[j]).is_zero() {
                    pairings_zero = false;
                }
            }
        }
        let rank = self.module.rank_certificate()?;
        Ok((gens, LagrangianCertificate { norms_zero, pairings_zero, module_rank: rank }))
    }
}

/// Exact certificate that the Lagrangian is a rank-4 isotropic direct
/// summand: generator norms vanish, pairwise polarizations vanish (so the
/// norm vanishes on every R-combination), and the underlying module is a
/// rank-3 summand complemented by the a2 line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangianCertificate {
    pub norms_zero: bool,
    pub pairings_zero: bool,
    pub module_rank: RankCertificate,
}

impl LagrangianCertificate {
    pub fn ok(&self) -> bool {
        self.norms_zero && self.pairings_zero && self.module_rank.ok()
    }
}

/// The fixed basis correspondence between the free Zorn algebra and the
/// split octonions:
///
/// ```text
/// u1 -> (E11, 0)    p1 -> (E12, 0)    p2 -> (0, E21)    p3 -> (0, E22)
/// u2 -> (E22, 0)    q1 -> (-E21, 0)   q2 -> (0, E12)    q3 -> (0, -E11)
/// ```
pub fn zorn_to_split(alg: &ZornAlgebra, u: &ZornElt) -> Result<SplitOct> {
    let c = alg.coords(u)?;
    let [a1, x1, x2, x3, y1, y2, y3, a2] = c;
    let m1 = Mat2::new(a1, x1, -&y1, a2)?;
    let m2 = Mat2::new(-&y3, y2, x2, x3)?;
    SplitOct::new(m1, m2)
}

/// Inverse of [`zorn_to_split`].
pub fn split_to_zorn(alg: &ZornAlgebra, o: &SplitOct) -> Result<ZornElt> {
    let coords = o.coords();
    let [a, b, c, d, e, f, g, h] = coords;
    alg.from_coords(&[a, b, g, h, -&c, f, -&e, d])
}

/// Outcome of verifying the basis correspondence: linearity is built in,
/// so the product table on all 64 basis pairs, the norms of all 64 sums of
/// basis pairs, the unit, and invertibility of the coordinate map decide
/// that the map is an isomorphism of unital algebras with norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoReport {
    pub pairs_checked: usize,
    pub product_mismatches: usize,
    pub norm_mismatches: usize,
    pub unit_ok: bool,
    pub bijective: bool,
}

impl IsoReport {
    pub fn ok(&self) -> bool {
        self.pairs_checked == 64
            && self.product_mismatches == 0
            && self.norm_mismatches == 0
            && self.unit_ok
            && self.bijective
    }
}

/// Check the Zorn/split-octonion correspondence over a context.
pub fn zorn_split_iso(ctx: &RingCtx) -> Result<IsoReport> {
    let alg = ZornAlgebra::free(ctx);
    let basis = alg.basis()?;
    let mut product_mismatches = 0;
    let mut norm_mismatches = 0;
    for bi in &basis {
        for bj in &basis {
            let zprod = alg.mul(bi, bj)?;
            let lhs = zorn_to_split(&alg, &zprod)?;
            let rhs = zorn_to_split(&alg, bi)?.mul(&zorn_to_split(&alg, bj)?)?;
            if lhs != rhs {
                product_mismatches += 1;
            }
            let zsum = alg.add(bi, bj);
            if alg.norm(&zsum) != zorn_to_split(&alg, &zsum)?.norm() {
                norm_mismatches += 1;
            }
        }
    }
    let unit_ok = zorn_to_split(&alg, &alg.one())? == SplitOct::one(ctx);
    // round trip on the basis certifies bijectivity of the signed
    // permutation coordinate map
    let bijective = basis.iter().all(|b| {
        let o = zorn_to_split(&alg, b).unwrap();
        split_to_zorn(&alg, &o).unwrap() == *b
    });
    Ok(IsoReport {
        pairs_checked: 64,
        product_mismatches,
        norm_mismatches,
        unit_ok,
        bijective,
    })
}
