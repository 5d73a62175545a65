//! Structure maps attached to the split octonions.
//!
//! The free Zorn algebra has basis `[u1, p1, p2, p3, q1, q2, q3, u2]` with
//! u1 = (1, 0, 0, 0), p_i = (0, e_i, 0, 0), q_i = (0, 0, e_i, 0) and
//! u2 = (0, 0, 0, 1). The diagonal elements form the split quadratic
//! subalgebra C = R x R with conjugation (a1, a2) -> (a2, a1).
//!
//! A 3x3 matrix g of determinant 1 acts on Zorn matrices by
//!
//! ```text
//! (a1, x+, x-, a2)  ->  (a1, g x+, adj(g)^T x-, a2)
//! ```
//!
//! where adj(g)^T is the inverse transpose. The action is an algebra
//! automorphism fixing C pointwise: the adjugate turns cross products of
//! transformed vectors back into transformed cross products, and the
//! pairing of x+ against x- is untouched.
//!
//! The orthogonal complement of C under the pairing (x, y) -> Tr(x conj(y))
//! is spanned by the p_i and q_i. Left multiplication by C makes it three
//! copies of C, and on triples of C-components the split Hermitian form
//! h(z, w) = z1 conj(w1) + z2 conj(w2) + z3 conj(w3) is invariant under the
//! determinant-1 action above.
//!
//! Derivations of the algebra are 8x8 matrices D with
//! D(uv) = D(u)v + u D(v). Away from characteristics 2 and 3 the space of
//! solutions has dimension 14, and the subspace of derivations vanishing
//! on C has dimension 8; both are computed here as exact nullspaces.
//!
//! Two more maps round out the picture: left multiplication by a unit-norm
//! split octonion is an 8x8 matrix preserving the norm Gram matrix with
//! determinant 1, and a determinant-1 matrix on R^4 induces a 6x6 matrix
//! on the second exterior power preserving the split quadratic form
//! w12 w34 - w13 w24 + w14 w23.

use num::BigRational;

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::oct::SplitOct;
use crate::ring::{CtxNode, RingCtx, RingElt};
use crate::rng::SplitMix64;
use crate::scalar::{Scalar, ScalarRing};
use crate::zorn::{ZornAlgebra, ZornElt};

/// A 3x3 matrix with determinant exactly 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SL3Elt {
    mat: Mat,
}

impl SL3Elt {
    pub fn new(mat: Mat) -> Result<SL3Elt> {
        if mat.rows() != 3 || mat.cols() != 3 {
            return Err(Error::Unsupported("a 3x3 matrix is required".into()));
        }
        if !mat.det()?.is_one() {
            return Err(Error::DetNotOne);
        }
        Ok(SL3Elt { mat })
    }

    pub fn identity(ctx: &RingCtx) -> SL3Elt {
        SL3Elt { mat: Mat::identity(ctx, 3) }
    }

    pub fn ctx(&self) -> &RingCtx {
        self.mat.ctx()
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn mul(&self, other: &SL3Elt) -> Result<SL3Elt> {
        Ok(SL3Elt { mat: self.mat.mul(&other.mat)? })
    }

    /// The inverse transpose, computed division-free as the transposed
    /// adjugate (the determinant is 1).
    pub fn dual_mat(&self) -> Mat {
        self.mat.adjugate().expect("3x3 adjugate").transpose()
    }
}

/// Action of a determinant-1 matrix on a free-case Zorn element:
/// (a1, x+, x-, a2) -> (a1, g x+, adj(g)^T x-, a2).
pub fn phi_action(alg: &ZornAlgebra, g: &SL3Elt, u: &ZornElt) -> Result<ZornElt> {
    if g.ctx() != alg.ctx() {
        return Err(Error::CtxMismatch);
    }
    let c = alg.coords(u)?;
    let xp = [c[1].clone(), c[2].clone(), c[3].clone()];
    let xm = [c[4].clone(), c[5].clone(), c[6].clone()];
    let new_xp = g.mat().apply(&xp)?;
    let new_xm = g.dual_mat().apply(&xm)?;
    alg.elt_free(
        c[0].clone(),
        new_xp.try_into().expect("length 3"),
        new_xm.try_into().expect("length 3"),
        c[7].clone(),
    )
}

/// The matrix of [`phi_action`] in the free-case Zorn basis.
pub fn phi_matrix(alg: &ZornAlgebra, g: &SL3Elt) -> Result<Mat> {
    let ctx = alg.ctx();
    let basis = alg.basis()?;
    let mut m = Mat::zero(ctx, 8, 8);
    for (j, b) in basis.iter().enumerate() {
        let col = alg.coords(&phi_action(alg, g, b)?)?;
        for i in 0..8 {
            *m.at_mut(i, j) = col[i].clone();
        }
    }
    Ok(m)
}

/// An element (a1, a2) of the split quadratic algebra C = R x R with
/// componentwise operations and swap conjugation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CElt {
    pub a1: RingElt,
    pub a2: RingElt,
}

impl CElt {
    pub fn new(a1: RingElt, a2: RingElt) -> Result<CElt> {
        if a1.ctx() != a2.ctx() {
            return Err(Error::CtxMismatch);
        }
        Ok(CElt { a1, a2 })
    }

    pub fn ctx(&self) -> &RingCtx {
        self.a1.ctx()
    }

    pub fn zero(ctx: &RingCtx) -> CElt {
        CElt { a1: ctx.zero(), a2: ctx.zero() }
    }

    pub fn one(ctx: &RingCtx) -> CElt {
        CElt { a1: ctx.one(), a2: ctx.one() }
    }

    pub fn add(&self, o: &CElt) -> Result<CElt> {
        CElt::new(self.a1.try_add(&o.a1)?, self.a2.try_add(&o.a2)?)
    }

    pub fn sub(&self, o: &CElt) -> Result<CElt> {
        CElt::new(self.a1.try_sub(&o.a1)?, self.a2.try_sub(&o.a2)?)
    }

    pub fn mul(&self, o: &CElt) -> Result<CElt> {
        CElt::new(self.a1.try_mul(&o.a1)?, self.a2.try_mul(&o.a2)?)
    }

    pub fn conj(&self) -> CElt {
        CElt { a1: self.a2.clone(), a2: self.a1.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.a1.is_zero() && self.a2.is_zero()
    }

    /// The diagonal Zorn element (a1, 0, 0, a2).
    pub fn embed(&self, alg: &ZornAlgebra) -> Result<ZornElt> {
        let ctx = alg.ctx();
        if self.ctx() != ctx {
            return Err(Error::CtxMismatch);
        }
        let zero4: Vec<RingElt> = (0..4).map(|_| ctx.zero()).collect();
        alg.elt(self.a1.clone(), zero4.clone(), zero4, self.a2.clone())
    }
}

/// Basis of the orthogonal complement of C together with the left action
/// of the two diagonal idempotents on it, in the returned basis.
#[derive(Debug, Clone)]
pub struct CPerpReport {
    pub basis: Vec<ZornElt>,
    pub u1_action: Mat,
    pub u2_action: Mat,
}

fn scalar_field(ctx: &RingCtx) -> Result<RingCtx> {
    match ctx.scalar_kind() {
        Some(ScalarRing::Fp(p)) => RingCtx::prime_field(p),
        Some(_) => Ok(RingCtx::rationals()),
        None => Err(Error::Unsupported("context has no scalar kind".into())),
    }
}

fn const_into_ctx(ctx: &RingCtx, s: &Scalar) -> Result<RingElt> {
    let kind = ctx
        .scalar_kind()
        .ok_or_else(|| Error::Unsupported("context has no scalar kind".into()))?;
    let converted = match (kind, s) {
        (ScalarRing::Int, Scalar::Int(n)) => ScalarRing::Int.from_bigint(n),
        (ScalarRing::Int, Scalar::Rat(r)) => {
            if !r.is_integer() {
                return Err(Error::Unsupported(format!(
                    "entry {} is not an integer",
                    s.to_text()
                )));
            }
            ScalarRing::Int.from_bigint(&r.to_integer())
        }
        (ScalarRing::Rat, Scalar::Int(n)) => Scalar::Rat(BigRational::from(n.clone())),
        (ScalarRing::Rat, Scalar::Rat(r)) => Scalar::Rat(r.clone()),
        (ScalarRing::Fp(p), Scalar::Fp(v)) => Scalar::Fp(v % p),
        _ => return Err(Error::Unsupported("scalar kinds do not match".into())),
    };
    Ok(ctx.elt_from_scalar(converted))
}

/// Basis of {x : Tr(x conj(z)) = 0 for all z in C}, computed as the exact
/// kernel of the trace pairing against the two diagonal idempotents, plus
/// the matrices of left multiplication by those idempotents on the kernel.
///
/// Over contexts with integer or rational scalars the kernel is computed
/// over the rationals and checked to be integral; over F_p it is computed
/// in place. Characteristic 2 is refused: the pairing degenerates there.
pub fn c_perp_basis(ctx: &RingCtx) -> Result<CPerpReport> {
    if ctx.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic(2));
    }
    let alg = ZornAlgebra::free(ctx);
    let basis = alg.basis()?;
    let u1 = &basis[0];
    let u2 = &basis[7];

    let field = scalar_field(ctx)?;
    let mut rows: Vec<Vec<RingElt>> = Vec::new();
    for z in [u1, u2] {
        let zbar = alg.conj(z);
        let mut row = Vec::with_capacity(8);
        for b in &basis {
            let t = alg.trace(&alg.mul(b, &zbar)?);
            let c = t
                .constant_value()
                .ok_or_else(|| Error::Unsupported("trace pairing is not constant".into()))?;
            row.push(const_into_ctx(&field, &c)?);
        }
        rows.push(row);
    }
    let pairing = Mat::from_rows(&field, rows)?;
    let kernel = pairing.nullspace()?;
    if kernel.len() != 6 {
        return Err(Error::Unsupported(format!(
            "trace pairing kernel has dimension {}, expected 6",
            kernel.len()
        )));
    }

    let mut perp: Vec<ZornElt> = Vec::with_capacity(6);
    for vec in &kernel {
        let coords: Vec<RingElt> = vec
            .iter()
            .map(|e| {
                let c = e
                    .constant_value()
                    .ok_or_else(|| Error::Unsupported("kernel entry is not constant".into()))?;
                const_into_ctx(ctx, &c)
            })
            .collect::<Result<_>>()?;
        perp.push(alg.from_coords(&coords)?);
    }

    let mut u1_action = Mat::zero(ctx, 6, 6);
    let mut u2_action = Mat::zero(ctx, 6, 6);
    for (j, x) in perp.iter().enumerate() {
        for (idem, action) in [(u1, &mut u1_action), (u2, &mut u2_action)] {
            let prod = alg.mul(idem, x)?;
            let pc = alg.coords(&prod)?;
            if !pc[0].is_zero() || !pc[7].is_zero() {
                return Err(Error::Unsupported(
                    "left C-multiplication leaves the complement".into(),
                ));
            }
            let in_perp = express_in_perp(&alg, &perp, &prod)?;
            for i in 0..6 {
                *action.at_mut(i, j) = in_perp[i].clone();
            }
        }
    }
    Ok(CPerpReport { basis: perp, u1_action, u2_action })
}

fn express_in_perp(alg: &ZornAlgebra, perp: &[ZornElt], x: &ZornElt) -> Result<Vec<RingElt>> {
    // the kernel basis consists of distinct free-basis vectors, so the
    // coefficients can be read off coordinatewise
    let xc = alg.coords(x)?;
    let mut out = Vec::with_capacity(perp.len());
    for b in perp {
        let bc = alg.coords(b)?;
        let k = (0..8)
            .find(|&k| bc[k].is_one())
            .ok_or_else(|| Error::Unsupported("kernel basis is not unit-coordinate".into()))?;
        out.push(xc[k].clone());
    }
    Ok(out)
}

/// Pack a triple of C-components into the complement of C:
/// (z1, z2, z3) -> sum of z_i.a1 p_i + z_i.a2 q_i.
pub fn triple_to_zorn(alg: &ZornAlgebra, z: &[CElt; 3]) -> Result<ZornElt> {
    let ctx = alg.ctx();
    for zi in z {
        if zi.ctx() != ctx {
            return Err(Error::CtxMismatch);
        }
    }
    alg.elt_free(
        ctx.zero(),
        [z[0].a1.clone(), z[1].a1.clone(), z[2].a1.clone()],
        [z[0].a2.clone(), z[1].a2.clone(), z[2].a2.clone()],
        ctx.zero(),
    )
}

/// Inverse of [`triple_to_zorn`]; the element must have zero diagonal.
pub fn zorn_to_triple(alg: &ZornAlgebra, x: &ZornElt) -> Result<[CElt; 3]> {
    let c = alg.coords(x)?;
    if !c[0].is_zero() || !c[7].is_zero() {
        return Err(Error::NotInModule);
    }
    Ok([
        CElt::new(c[1].clone(), c[4].clone())?,
        CElt::new(c[2].clone(), c[5].clone())?,
        CElt::new(c[3].clone(), c[6].clone())?,
    ])
}

/// The split Hermitian form sum of z_i conj(w_i) on triples of
/// C-components.
pub fn hermitian(z: &[CElt; 3], w: &[CElt; 3]) -> Result<CElt> {
    let mut acc = CElt::zero(z[0].ctx());
    for i in 0..3 {
        acc = acc.add(&z[i].mul(&w[i].conj())?)?;
    }
    Ok(acc)
}

/// Which linear system to solve for derivations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivationConstraint {
    /// The full Leibniz system.
    Full,
    /// Leibniz plus vanishing on the diagonal subalgebra C.
    FixC,
}

/// Exact basis of a derivation space.
#[derive(Debug, Clone)]
pub struct DerivationReport {
    pub dimension: usize,
    pub basis: Vec<Mat>,
}

/// Solve the Leibniz system D(uv) = D(u)v + u D(v) on the free Zorn basis
/// over a field of characteristic 0 or at least 5, optionally adding the
/// 16 equations that force D to vanish on C. Returns an exact nullspace
/// basis of 8x8 matrices.
pub fn derivation_basis(ctx: &RingCtx, constraint: DerivationConstraint) -> Result<DerivationReport> {
    if !ctx.is_field() {
        return Err(Error::Unsupported("derivation solve requires a field".into()));
    }
    let ch = ctx.characteristic();
    if ch == 2 || ch == 3 {
        return Err(Error::UnsupportedCharacteristic(ch));
    }
    let alg = ZornAlgebra::free(ctx);
    let basis = alg.basis()?;

    // structure constants sc[i][j][k]: coefficient of b_k in b_i b_j
    let mut sc: Vec<Vec<[RingElt; 8]>> = Vec::with_capacity(8);
    for i in 0..8 {
        let mut row = Vec::with_capacity(8);
        for j in 0..8 {
            row.push(alg.coords(&alg.mul(&basis[i], &basis[j])?)?);
        }
        sc.push(row);
    }

    // unknown d_{kl} = coefficient of b_k in D(b_l), flattened as 8k + l
    let idx = |k: usize, l: usize| 8 * k + l;
    let mut rows: Vec<Vec<RingElt>> = Vec::new();
    let mut seen: std::collections::HashSet<String> = std::collections::HashSet::new();
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                let mut row = vec![ctx.zero(); 64];
                for l in 0..8 {
                    row[idx(k, l)] = &row[idx(k, l)] + &sc[i][j][l];
                }
                for m in 0..8 {
                    row[idx(m, i)] = &row[idx(m, i)] - &sc[m][j][k];
                    row[idx(m, j)] = &row[idx(m, j)] - &sc[i][m][k];
                }
                if row.iter().all(|e| e.is_zero()) {
                    continue;
                }
                let key: String =
                    row.iter().map(|e| e.to_text()).collect::<Vec<_>>().join(",");
                if seen.insert(key) {
                    rows.push(row);
                }
            }
        }
    }
    if constraint == DerivationConstraint::FixC {
        for k in 0..8 {
            for l in [0usize, 7] {
                let mut row = vec![ctx.zero(); 64];
                row[idx(k, l)] = ctx.one();
                let key: String =
                    row.iter().map(|e| e.to_text()).collect::<Vec<_>>().join(",");
                if seen.insert(key) {
                    rows.push(row);
                }
            }
        }
    }

    let system = Mat::from_rows(ctx, rows)?;
    let null = system.nullspace()?;
    let mut mats = Vec::with_capacity(null.len());
    for v in &null {
        let mut m = Mat::zero(ctx, 8, 8);
        for k in 0..8 {
            for l in 0..8 {
                *m.at_mut(k, l) = v[idx(k, l)].clone();
            }
        }
        mats.push(m);
    }
    Ok(DerivationReport { dimension: mats.len(), basis: mats })
}

/// Apply an 8x8 matrix to a free-case Zorn element through its coordinates.
pub fn apply_to_zorn(alg: &ZornAlgebra, m: &Mat, u: &ZornElt) -> Result<ZornElt> {
    let c = alg.coords(u)?;
    let v = m.apply(&c)?;
    alg.from_coords(&v)
}

/// Check the Leibniz identity for one matrix on all 64 basis pairs.
pub fn is_derivation(alg: &ZornAlgebra, d: &Mat) -> Result<bool> {
    if d.rows() != 8 || d.cols() != 8 {
        return Err(Error::Unsupported("an 8x8 matrix is required".into()));
    }
    if d.ctx() != alg.ctx() {
        return Err(Error::CtxMismatch);
    }
    let basis = alg.basis()?;
    let images: Vec<ZornElt> =
        basis.iter().map(|b| apply_to_zorn(alg, d, b)).collect::<Result<_>>()?;
    for i in 0..8 {
        for j in 0..8 {
            let lhs = apply_to_zorn(alg, d, &alg.mul(&basis[i], &basis[j])?)?;
            let rhs =
                alg.add(&alg.mul(&images[i], &basis[j])?, &alg.mul(&basis[i], &images[j])?);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Flatten an 8x8 matrix to a 64-vector, row-major, matching the unknown
/// layout of [`derivation_basis`].
pub fn flatten8(m: &Mat) -> Result<Vec<RingElt>> {
    if m.rows() != 8 || m.cols() != 8 {
        return Err(Error::Unsupported("an 8x8 matrix is required".into()));
    }
    let mut v = Vec::with_capacity(64);
    for k in 0..8 {
        for l in 0..8 {
            v.push(m.at(k, l).clone());
        }
    }
    Ok(v)
}

/// Rank test for membership of `d` in the span of `basis` over a field.
pub fn in_span(basis: &[Mat], d: &Mat) -> Result<bool> {
    let ctx = d.ctx().clone();
    let mut rows: Vec<Vec<RingElt>> = Vec::with_capacity(basis.len() + 1);
    for b in basis {
        rows.push(flatten8(b)?);
    }
    let base_rank = Mat::from_rows(&ctx, rows.clone())?.rank()?;
    rows.push(flatten8(d)?);
    let full_rank = Mat::from_rows(&ctx, rows)?.rank()?;
    Ok(full_rank == base_rank)
}

/// The derivation obtained by differentiating the determinant-1 action
/// along a trace-zero 3x3 matrix X: (a1, x+, x-, a2) -> (0, X x+, -X^T x-, 0),
/// returned as its 8x8 matrix in the free Zorn basis.
pub fn phi_linearization(x: &Mat) -> Result<Mat> {
    if x.rows() != 3 || x.cols() != 3 {
        return Err(Error::Unsupported("a 3x3 matrix is required".into()));
    }
    if !x.trace()?.is_zero() {
        return Err(Error::Unsupported("the matrix must have trace zero".into()));
    }
    let ctx = x.ctx();
    let mut d = Mat::zero(ctx, 8, 8);
    for i in 0..3 {
        for j in 0..3 {
            *d.at_mut(1 + i, 1 + j) = x.at(i, j).clone();
            *d.at_mut(4 + i, 4 + j) = x.at(j, i).neg();
        }
    }
    Ok(d)
}

/// A based quadratic space: basis elements, polarized Gram matrix, its
/// rank, and its determinant.
#[derive(Debug, Clone)]
pub struct QuadraticSpace {
    pub basis: Vec<ZornElt>,
    pub gram: Mat,
    pub rank: usize,
    pub det: RingElt,
}

/// The polarized norm form restricted to the trace-zero hyperplane, in the
/// basis [u1 - u2, p1, p2, p3, q1, q2, q3]. Requires a field of
/// characteristic not 2; the result has rank 7 with the p/q part
/// hyperbolic and the diagonal line of square discriminant -2.
pub fn trace_zero_form(ctx: &RingCtx) -> Result<QuadraticSpace> {
    if ctx.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic(2));
    }
    if !ctx.is_field() {
        return Err(Error::Unsupported("trace-zero form requires a field".into()));
    }
    let alg = ZornAlgebra::free(ctx);
    let b = alg.basis()?;
    let mut basis: Vec<ZornElt> = vec![alg.sub(&b[0], &b[7])];
    basis.extend_from_slice(&b[1..7]);
    let mut gram = Mat::zero(ctx, 7, 7);
    for i in 0..7 {
        for j in 0..7 {
            *gram.at_mut(i, j) = alg.bilinear(&basis[i], &basis[j]);
        }
    }
    let rank = gram.rank()?;
    let det = gram.det()?;
    Ok(QuadraticSpace { basis, gram, rank, det })
}

/// The matrix of left multiplication y -> x y on the split octonion basis.
/// The norm of x must be exactly 1; the result then preserves the norm
/// Gram matrix and has determinant 1.
pub fn left_mult_matrix(x: &SplitOct) -> Result<Mat> {
    if !x.norm().is_one() {
        return Err(Error::NonUnitNorm);
    }
    let ctx = x.ctx().clone();
    let basis = SplitOct::basis(&ctx);
    let mut m = Mat::zero(&ctx, 8, 8);
    for (j, e) in basis.iter().enumerate() {
        let col = x.mul(e)?.coords();
        for i in 0..8 {
            *m.at_mut(i, j) = col[i].clone();
        }
    }
    Ok(m)
}

/// Ordered index pairs for the basis e1^e2, e1^e3, e1^e4, e2^e3, e2^e4,
/// e3^e4 of the second exterior power of R^4.
pub const LAMBDA2_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// The induced matrix of a determinant-1 4x4 matrix on the second exterior
/// power, in the basis of [`LAMBDA2_PAIRS`]. Entries are the 2x2 minors
/// of g. The result preserves [`lambda2_form`] and has determinant 1.
pub fn lambda2_action(g: &Mat) -> Result<Mat> {
    if g.rows() != 4 || g.cols() != 4 {
        return Err(Error::Unsupported("a 4x4 matrix is required".into()));
    }
    if g.ctx().characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic(2));
    }
    if !g.det()?.is_one() {
        return Err(Error::DetNotOne);
    }
    let ctx = g.ctx();
    let mut m = Mat::zero(ctx, 6, 6);
    for (r, &(u, v)) in LAMBDA2_PAIRS.iter().enumerate() {
        for (c, &(i, j)) in LAMBDA2_PAIRS.iter().enumerate() {
            *m.at_mut(r, c) = &(g.at(u, i) * g.at(v, j)) - &(g.at(u, j) * g.at(v, i));
        }
    }
    Ok(m)
}

/// The split quadratic form w12 w34 - w13 w24 + w14 w23 on coordinates in
/// the [`LAMBDA2_PAIRS`] order; half the wedge square.
pub fn lambda2_form(w: &[RingElt]) -> Result<RingElt> {
    if w.len() != 6 {
        return Err(Error::LengthMismatch { expected: 6, got: w.len() });
    }
    Ok(&(&(&w[0] * &w[5]) - &(&w[1] * &w[4])) + &(&w[2] * &w[3]))
}

fn random_constant(ctx: &RingCtx, rng: &mut SplitMix64) -> RingElt {
    match ctx.scalar_kind() {
        Some(ScalarRing::Fp(p)) => ctx.from_i64(rng.below(p.min(i64::MAX as u64)) as i64),
        _ => ctx.from_i64(rng.range_i64(-3, 3)),
    }
}

/// A random determinant-1 matrix, built as a product of `steps` random
/// elementary row additions starting from the identity.
pub fn sample_special_linear(
    ctx: &RingCtx,
    n: usize,
    rng: &mut SplitMix64,
    steps: usize,
) -> Result<Mat> {
    if n < 2 {
        return Ok(Mat::identity(ctx, n.max(1)));
    }
    let mut m = Mat::identity(ctx, n);
    for _ in 0..steps {
        let i = rng.below(n as u64) as usize;
        let mut j = rng.below(n as u64) as usize;
        while j == i {
            j = rng.below(n as u64) as usize;
        }
        let lam = random_constant(ctx, rng);
        let row_j: Vec<RingElt> = m.row(j).to_vec();
        for c in 0..n {
            let val = m.at(i, c) + &(&lam * &row_j[c]);
            *m.at_mut(i, c) = val;
        }
    }
    Ok(m)
}

/// Rejection-sample a split octonion of norm exactly 1 over a prime field.
pub fn sample_unit_octonion(
    ctx: &RingCtx,
    rng: &mut SplitMix64,
    max_tries: usize,
) -> Result<SplitOct> {
    let CtxNode::PrimeField(_) = ctx.node() else {
        return Err(Error::Unsupported("unit-norm sampling requires a prime field".into()));
    };
    for _ in 0..max_tries {
        let coords: Vec<RingElt> = (0..8).map(|_| random_constant(ctx, rng)).collect();
        let o = SplitOct::from_coords(ctx, &coords)?;
        if o.norm().is_one() {
            return Ok(o);
        }
    }
    Err(Error::Unsupported("no unit-norm sample found within the try budget".into()))
}
