//! Brute-force enumeration of affine points over prime fields.
//!
//! Given polynomials in F_p[v1..vk], walks all p^k coordinate tuples and
//! reports those where every polynomial vanishes. A budget guards the walk:
//! p^k above the budget is refused rather than attempted. The index range
//! can be partitioned into contiguous chunks evaluated on worker threads;
//! results are merged in index order, so the outcome is identical for any
//! partition count.

use crate::error::{Error, Result};
use crate::ring::{CtxNode, RingCtx, RingElt};
use crate::scalar::{mul_mod, pow_mod, Scalar};

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// A polynomial compiled to flat u64 arithmetic for fast evaluation.
struct Compiled {
    terms: Vec<(u64, Vec<(usize, u32)>)>,
}

impl Compiled {
    fn eval(&self, point: &[u64], p: u64) -> u64 {
        let mut acc = 0u64;
        for (c, vars) in &self.terms {
            let mut t = *c;
            for &(v, e) in vars {
                t = mul_mod(t, pow_mod(point[v], e as u64, p), p);
            }
            acc = (acc + t) % p;
        }
        acc
    }
}

fn compile(ctx: &RingCtx, polys: &[RingElt]) -> Result<(u64, usize, Vec<Compiled>)> {
    let CtxNode::Polynomial { base, .. } = ctx.node() else {
        return Err(Error::Unsupported("enumeration needs a polynomial context".into()));
    };
    let CtxNode::PrimeField(p) = base.node() else {
        return Err(Error::Unsupported("enumeration needs a prime field base".into()));
    };
    let p = *p;
    let k = ctx.nvars();
    let mut out = Vec::with_capacity(polys.len());
    for f in polys {
        if f.ctx() != ctx {
            return Err(Error::CtxMismatch);
        }
        let poly = f.as_poly().unwrap();
        let mut terms = Vec::with_capacity(poly.terms.len());
        for (m, c) in &poly.terms {
            let Scalar::Fp(cv) = c else { unreachable!() };
            let vars: Vec<(usize, u32)> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i, e))
                .collect();
            terms.push((*cv, vars));
        }
        out.push(Compiled { terms });
    }
    Ok((p, k, out))
}

fn index_to_point(mut idx: u128, p: u64, k: usize) -> Vec<u64> {
    let mut pt = vec![0u64; k];
    for coord in pt.iter_mut() {
        *coord = (idx % p as u128) as u64;
        idx /= p as u128;
    }
    pt
}

fn scan_range(
    compiled: &[Compiled],
    p: u64,
    k: usize,
    start: u128,
    end: u128,
    keep_points: bool,
) -> (u64, Vec<Vec<u64>>) {
    let mut count = 0u64;
    let mut pts = Vec::new();
    let mut point = index_to_point(start, p, k);
    let mut idx = start;
    while idx < end {
        if compiled.iter().all(|c| c.eval(&point, p) == 0) {
            count += 1;
            if keep_points {
                pts.push(point.clone());
            }
        }
        idx += 1;
        // odometer increment
        for coord in point.iter_mut() {
            *coord += 1;
            if *coord < p {
                break;
            }
            *coord = 0;
        }
    }
    (count, pts)
}

fn run(
    ctx: &RingCtx,
    polys: &[RingElt],
    budget: u128,
    parts: usize,
    keep_points: bool,
) -> Result<(u64, Vec<Vec<u64>>)> {
    let (p, k, compiled) = compile(ctx, polys)?;
    let total: u128 = (p as u128)
        .checked_pow(k as u32)
        .ok_or(Error::BudgetExceeded { needed: u128::MAX, budget })?;
    if total > budget {
        return Err(Error::BudgetExceeded { needed: total, budget });
    }
    let parts = parts.max(1).min(usize::try_from(total).unwrap_or(usize::MAX).max(1));
    let chunk = total / parts as u128;
    let bounds: Vec<(u128, u128)> = (0..parts as u128)
        .map(|i| (i * chunk, if i + 1 == parts as u128 { total } else { (i + 1) * chunk }))
        .collect();
    let results: Vec<(u64, Vec<Vec<u64>>)> = if parts == 1 {
        vec![scan_range(&compiled, p, k, 0, total, keep_points)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = bounds
                .iter()
                .map(|&(lo, hi)| {
                    let compiled = &compiled;
                    s.spawn(move || scan_range(compiled, p, k, lo, hi, keep_points))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("scan worker panicked")).collect()
        })
    };
    let mut count = 0u64;
    let mut pts = Vec::new();
    for (c, mut ps) in results {
        count += c;
        pts.append(&mut ps);
    }
    Ok((count, pts))
}

fn ctx_of(polys: &[RingElt]) -> Result<RingCtx> {
    polys
        .first()
        .map(|f| f.ctx().clone())
        .ok_or_else(|| Error::Unsupported("empty system needs an explicit context".into()))
}

/// All common zeros of `polys` in F_p^k, in ascending index order
/// (coordinate 0 varies fastest). The context is taken from the first
/// polynomial; an empty system needs [`enumerate_affine_points_in`].
pub fn enumerate_affine_points(polys: &[RingElt], budget: u128) -> Result<Vec<Vec<u64>>> {
    run(&ctx_of(polys)?, polys, budget, 1, true).map(|(_, pts)| pts)
}

/// Number of common zeros, optionally split across `parts` workers.
pub fn count_affine_points(polys: &[RingElt], budget: u128, parts: usize) -> Result<u64> {
    run(&ctx_of(polys)?, polys, budget, parts, false).map(|(c, _)| c)
}

/// Like [`enumerate_affine_points`] with an explicit context, so the empty
/// system is allowed and yields every tuple in F_p^k.
pub fn enumerate_affine_points_in(
    ctx: &RingCtx,
    polys: &[RingElt],
    budget: u128,
) -> Result<Vec<Vec<u64>>> {
    run(ctx, polys, budget, 1, true).map(|(_, pts)| pts)
}

/// Like [`count_affine_points`] with an explicit context.
pub fn count_affine_points_in(
    ctx: &RingCtx,
    polys: &[RingElt],
    budget: u128,
    parts: usize,
) -> Result<u64> {
    run(ctx, polys, budget, parts, false).map(|(c, _)| c)
}
