//! Exact matrices over a ring context.
//!
//! One matrix type serves two regimes. Over any commutative context the
//! determinant is computed division-free by dynamic programming on column
//! subsets (Laplace expansion with memoization), which is well suited to
//! the small structured matrices that arise here (at most 8x8). Over the
//! field contexts (Q, F_p) Gaussian elimination provides rank, reduced row
//! echelon form, nullspace bases, and a faster determinant.

use crate::error::{Error, Result};
use crate::ring::{RingCtx, RingElt};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    ctx: RingCtx,
    rows: usize,
    cols: usize,
    data: Vec<RingElt>,
}

impl Mat {
    pub fn from_rows(ctx: &RingCtx, rows: Vec<Vec<RingElt>>) -> Result<Mat> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::LengthMismatch { expected: c, got: row.len() });
            }
            for e in row {
                if e.ctx() != ctx {
                    return Err(Error::CtxMismatch);
                }
                data.push(e);
            }
        }
        Ok(Mat { ctx: ctx.clone(), rows: r, cols: c, data })
    }

    pub fn zero(ctx: &RingCtx, rows: usize, cols: usize) -> Mat {
        Mat { ctx: ctx.clone(), rows, cols, data: vec![ctx.zero(); rows * cols] }
    }

    pub fn identity(ctx: &RingCtx, n: usize) -> Mat {
        let mut m = Mat::zero(ctx, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = ctx.one();
        }
        m
    }

    pub fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &RingElt {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut RingElt {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[RingElt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<RingElt> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(&self.ctx, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        if self.ctx != other.ctx {
            return Err(Error::CtxMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::LengthMismatch { expected: self.rows * self.cols, got: other.rows * other.cols });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Mat { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.add(&other.scale(&-&self.ctx.one()))
    }

    pub fn scale(&self, c: &RingElt) -> Mat {
        Mat {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| e * c).collect(),
        }
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.ctx != other.ctx {
            return Err(Error::CtxMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::LengthMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Mat::zero(&self.ctx, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = self.ctx.zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.at(r, k) * other.at(k, c));
                }
                *out.at_mut(r, c) = acc;
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[RingElt]) -> Result<Vec<RingElt>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, got: v.len() });
        }
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut acc = self.ctx.zero();
            for c in 0..self.cols {
                acc = &acc + &(self.at(r, c) * &v[c]);
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Determinant over any commutative context, division-free.
    ///
    /// Expands along rows with memoization on the set of still-unused
    /// columns: minor(k, S) for rows k.. and column set S. 2^n states.
    pub fn det(&self) -> Result<RingElt> {
        if self.rows != self.cols {
            return Err(Error::LengthMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.ctx.one());
        }
        assert!(n <= 20, "determinant DP is sized for small matrices");
        // minors[mask] = det of rows (n - popcount(mask))..n on columns in mask
        let mut minors = vec![None::<RingElt>; 1usize << n];
        minors[0] = Some(self.ctx.one());
        for mask in 1usize..(1 << n) {
            let k = n - (mask.count_ones() as usize);
            let mut acc = self.ctx.zero();
            let mut sign_pos = true;
            for c in 0..n {
                if mask & (1 << c) == 0 {
                    continue;
                }
                let entry = self.at(k, c);
                if !entry.is_zero() {
                    let sub = minors[mask & !(1 << c)].as_ref().unwrap();
                    let prod = entry * sub;
                    acc = if sign_pos { &acc + &prod } else { &acc - &prod };
                }
                sign_pos = !sign_pos;
            }
            minors[mask] = Some(acc);
        }
        Ok(minors[(1 << n) - 1].take().unwrap())
    }

    /// Adjugate (transposed cofactor matrix): `self * adj = det * Id`.
    pub fn adjugate(&self) -> Result<Mat> {
        if self.rows != self.cols {
            return Err(Error::LengthMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        let mut out = Mat::zero(&self.ctx, n, n);
        for r in 0..n {
            for c in 0..n {
                // cofactor C_{r,c} goes to adj[c][r]
                let mut minor_rows = Vec::with_capacity(n - 1);
                for i in 0..n {
                    if i == r {
                        continue;
                    }
                    let mut row = Vec::with_capacity(n - 1);
                    for j in 0..n {
                        if j == c {
                            continue;
                        }
                        row.push(self.at(i, j).clone());
                    }
                    minor_rows.push(row);
                }
                let minor = Mat::from_rows(&self.ctx, minor_rows)?.det()?;
                let cof = if (r + c) % 2 == 0 { minor } else { -&minor };
                *out.at_mut(c, r) = cof;
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<RingElt> {
        if self.rows != self.cols {
            return Err(Error::LengthMismatch { expected: self.rows, got: self.cols });
        }
        let mut acc = self.ctx.zero();
        for i in 0..self.rows {
            acc = &acc + self.at(i, i);
        }
        Ok(acc)
    }

    fn require_field(&self) -> Result<()> {
        if self.ctx.is_field() {
            Ok(())
        } else {
            Err(Error::Unsupported("elimination requires a field context (Q or F_p)".into()))
        }
    }

    /// Reduced row echelon form and the list of pivot columns.
    pub fn rref(&self) -> Result<(Mat, Vec<usize>)> {
        self.require_field()?;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for r in 0..m.rows {
            if lead >= m.cols {
                break;
            }
            // find a pivot row at or below r in column lead
            let mut pr = None;
            while lead < m.cols {
                pr = (r..m.rows).find(|&i| !m.at(i, lead).is_zero());
                if pr.is_some() {
                    break;
                }
                lead += 1;
            }
            let Some(pr) = pr else { break };
            if pr != r {
                for c in 0..m.cols {
                    let tmp = m.at(pr, c).clone();
                    *m.at_mut(pr, c) = m.at(r, c).clone();
                    *m.at_mut(r, c) = tmp;
                }
            }
            let inv = m.at(r, lead).inv().expect("pivot is nonzero in a field");
            for c in 0..m.cols {
                *m.at_mut(r, c) = &*m.at(r, c) * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, lead).is_zero() {
                    let f = m.at(i, lead).clone();
                    for c in 0..m.cols {
                        *m.at_mut(i, c) = &*m.at(i, c) - &(&f * m.at(r, c));
                    }
                }
            }
            pivots.push(lead);
            lead += 1;
        }
        Ok((m, pivots))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// Basis of the right nullspace { v : M v = 0 }, one vector per free
    /// column, in ascending free-column order.
    pub fn nullspace(&self) -> Result<Vec<Vec<RingElt>>> {
        let (r, pivots) = self.rref()?;
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![self.ctx.zero(); self.cols];
            v[free] = self.ctx.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r.at(row, free).clone();
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// Determinant via elimination; field contexts only.
    pub fn det_field(&self) -> Result<RingElt> {
        self.require_field()?;
        if self.rows != self.cols {
            return Err(Error::LengthMismatch { expected: self.rows, got: self.cols });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = m.ctx.one();
        for r in 0..n {
            let Some(pr) = (r..n).find(|&i| !m.at(i, r).is_zero()) else {
                return Ok(m.ctx.zero());
            };
            if pr != r {
                det = -&det;
                for c in 0..n {
                    let tmp = m.at(pr, c).clone();
                    *m.at_mut(pr, c) = m.at(r, c).clone();
                    *m.at_mut(r, c) = tmp;
                }
            }
            let piv = m.at(r, r).clone();
            det = &det * &piv;
            let inv = piv.inv().expect("pivot is nonzero in a field");
            for i in (r + 1)..n {
                if !m.at(i, r).is_zero() {
                    let f = &*m.at(i, r) * &inv;
                    for c in r..n {
                        *m.at_mut(i, c) = &*m.at(i, c) - &(&f * m.at(r, c));
                    }
                }
            }
        }
        Ok(det)
    }
}

/// Solve `A x = b` over a field; None when inconsistent. Returns one
/// solution (free variables set to zero).
pub fn solve(a: &Mat, b: &[RingElt]) -> Result<Option<Vec<RingElt>>> {
    if b.len() != a.rows() {
        return Err(Error::LengthMismatch { expected: a.rows(), got: b.len() });
    }
    let ctx = a.ctx().clone();
    let mut rows = Vec::with_capacity(a.rows());
    for r in 0..a.rows() {
        let mut row: Vec<RingElt> = a.row(r).to_vec();
        row.push(b[r].clone());
        rows.push(row);
    }
    let aug = Mat::from_rows(&ctx, rows)?;
    let (rr, pivots) = aug.rref()?;
    if pivots.contains(&a.cols()) {
        return Ok(None);
    }
    let mut x = vec![ctx.zero(); a.cols()];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = rr.at(row, a.cols()).clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_i64(ctx: &RingCtx, rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            ctx,
            rows.iter().map(|r| r.iter().map(|&v| ctx.from_i64(v)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn nullspace_of_rank_one() {
        let q = RingCtx::rationals();
        let m = mat_i64(&q, &[&[1, 2], &[2, 4]]);
        let ns = m.nullspace().unwrap();
        assert_eq!(ns.len(), 1);
        // basis vector proportional to (-2, 1)
        let v = &ns[0];
        assert_eq!(v[0], q.from_i64(-2));
        assert_eq!(v[1], q.from_i64(1));
        // M v = 0 exactly
        let mv = m.apply(v).unwrap();
        assert!(mv.iter().all(|e| e.is_zero()));
        assert_eq!(m.rank().unwrap(), 1);
    }

    #[test]
    fn rank_nullity() {
        let f5 = RingCtx::prime_field(5).unwrap();
        let m = mat_i64(&f5, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let rank = m.rank().unwrap();
        let nullity = m.nullspace().unwrap().len();
        assert_eq!(rank + nullity, 3);
        for v in m.nullspace().unwrap() {
            assert!(m.apply(&v).unwrap().iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn det_agrees_between_algorithms() {
        let q = RingCtx::rationals();
        let m = mat_i64(&q, &[&[2, 1, 0], &[1, -1, 3], &[0, 5, 4]]);
        assert_eq!(m.det().unwrap(), m.det_field().unwrap());
        // 2((-1)(4)-15) - 1(4-0) = -42 by cofactor expansion
        assert_eq!(m.det().unwrap(), q.from_i64(-42));
    }

    #[test]
    fn det_over_polynomial_ring() {
        let z = RingCtx::integers();
        let ring = RingCtx::polynomial(&z, &["a", "b", "c", "d"]).unwrap();
        let a = ring.var("a").unwrap();
        let b = ring.var("b").unwrap();
        let c = ring.var("c").unwrap();
        let d = ring.var("d").unwrap();
        let m = Mat::from_rows(&ring, vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]])
            .unwrap();
        assert_eq!(m.det().unwrap(), &(&a * &d) - &(&b * &c));
    }

    #[test]
    fn adjugate_identity() {
        let z = RingCtx::integers();
        let ring = RingCtx::polynomial(
            &z,
            &["a11", "a12", "a13", "a21", "a22", "a23", "a31", "a32", "a33"],
        )
        .unwrap();
        let entries: Vec<RingElt> = (1..=3)
            .flat_map(|i| (1..=3).map(move |j| format!("a{i}{j}")))
            .map(|n| ring.var(&n).unwrap())
            .collect();
        let m = Mat::from_rows(
            &ring,
            entries.chunks(3).map(|c| c.to_vec()).collect::<Vec<_>>(),
        )
        .unwrap();
        let adj = m.adjugate().unwrap();
        let det = m.det().unwrap();
        let prod = m.mul(&adj).unwrap();
        let expected = Mat::identity(&ring, 3).scale(&det);
        assert_eq!(prod, expected);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let q = RingCtx::rationals();
        let m = mat_i64(&q, &[&[1, 1], &[1, -1]]);
        let b = vec![q.from_i64(3), q.from_i64(1)];
        let x = solve(&m, &b).unwrap().unwrap();
        assert_eq!(x, vec![q.from_i64(2), q.from_i64(1)]);
        let sing = mat_i64(&q, &[&[1, 2], &[2, 4]]);
        let bad = vec![q.from_i64(1), q.from_i64(3)];
        assert!(solve(&sing, &bad).unwrap().is_none());
    }

    #[test]
    fn elimination_rejects_non_fields() {
        let z = RingCtx::integers();
        let m = mat_i64(&z, &[&[1, 2], &[3, 4]]);
        assert!(m.rref().is_err());
        assert!(m.det().is_ok());
    }
}
