//! Point counts over prime fields and the group-order identities they
//! certify.
//!
//! The affine quadric Q_n is cut out by sum x_i y_i = 1 in 2m variables
//! for n = 2m - 1, and by sum x_i y_i = z + z^2 in 2m + 1 variables for
//! n = 2m. Counting F_q-points of either by brute force and comparing
//! against the closed forms
//!
//! ```text
//! |Q_{2m-1}(F_q)| = q^(m-1) (q^m - 1)        |Q_{2m}(F_q)| = q^m (q^m + 1)
//! ```
//!
//! gives an exact numerical check. The same counts appear as quotients of
//! split classical and exceptional group orders,
//!
//! ```text
//! |SL_n|  = q^(n(n-1)/2) (q^2 - 1)(q^3 - 1)...(q^n - 1)
//! |G2|    = q^6 (q^6 - 1)(q^2 - 1)
//! |Spin7| = q^9 (q^2 - 1)(q^4 - 1)(q^6 - 1)
//! |Spin8| = q^12 (q^2 - 1)(q^4 - 1)^2 (q^6 - 1)
//! ```
//!
//! through the identities |Q5| = |SL3|/|SL2|, |Q6| = |G2|/|SL3|,
//! |Q7| = |Spin7|/|G2| = |SL4|/|SL3| and |Q7|^2 = |Spin8|/|G2|, each of
//! which is verified here with both sides computed independently.
//!
//! Octonion loci are counted directly on the eight coordinates. The
//! norm-1 locus matches |Q7|. For trace-0 elements the square class of
//! the norm matters: x^2 = Tr(x) x - N(x), so Tr = 0, N = nu forces
//! x^2 = -nu, and the locus has q^3 (q^3 + chi(-nu)) points for the
//! quadratic character chi of F_q. Only nu = -1 (elements squaring to 1)
//! matches |Q6| = q^3 (q^3 + 1) at every odd q; nu = 1 does so exactly
//! when -1 is a square. The locus Tr = 1, N = 0 satisfies the Q6
//! equation itself after eliminating one diagonal coordinate and counts
//! |Q6| in every characteristic, including 2.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oct::SplitOct;
use crate::points::count_affine_points;
use crate::ring::{quadric_ring, RingCtx, RingElt};
use crate::scalar::is_prime_u64;

/// One observed-versus-predicted comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub label: String,
    pub q: u64,
    pub observed: u128,
    pub predicted: u128,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl CountReport {
    fn new(label: impl Into<String>, q: u64, observed: u128, predicted: u128) -> CountReport {
        CountReport { label: label.into(), q, observed, predicted, matches: observed == predicted }
    }
}

fn overflow() -> Error {
    Error::Unsupported("group order overflows 128 bits".into())
}

fn upow(q: u128, e: u32) -> Result<u128> {
    q.checked_pow(e).ok_or_else(overflow)
}

fn worker_parts() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(8)
}

fn require_prime(q: u64) -> Result<()> {
    if is_prime_u64(q) {
        Ok(())
    } else {
        Err(Error::InvalidPrime(q))
    }
}

/// Brute-force count of the F_q-points of the affine quadric Q_n; walks
/// all q^(n+1) coordinate tuples, so n and q must fit the budget.
pub fn count_quadric_points(n: u32, q: u64, budget: u128) -> Result<u128> {
    require_prime(q)?;
    let fq = RingCtx::prime_field(q)?;
    let quot = quadric_ring(n, &fq)?;
    let poly_ctx = quot.poly_base().expect("quotient has a polynomial base").clone();
    let equation = poly_ctx.elt_from_poly(quot.modulus_poly().expect("modulus").clone());
    let c = count_affine_points(&[equation], budget, worker_parts())?;
    Ok(c as u128)
}

/// Closed form for |Q_n(F_q)|: q^(m-1)(q^m - 1) for n = 2m - 1 and
/// q^m (q^m + 1) for n = 2m.
pub fn predicted_quadric_count(n: u32, q: u64) -> Result<u128> {
    if n == 0 {
        return Err(Error::Unsupported("the quadric needs a positive dimension".into()));
    }
    let qq = q as u128;
    let m = (n as usize + 1) / 2;
    let qm = upow(qq, m as u32)?;
    if n % 2 == 1 {
        upow(qq, m as u32 - 1)?.checked_mul(qm - 1).ok_or_else(overflow)
    } else {
        qm.checked_mul(qm + 1).ok_or_else(overflow)
    }
}

/// Octonion point sets counted coordinatewise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocusKind {
    /// N(x) = 1, a 7-dimensional quadric in the 8 coordinates.
    Norm1,
    /// Tr(x) = 0 and N(x) = 1, the square roots of -1; requires odd
    /// characteristic. Matches |Q6| only when -1 is a square mod q.
    Trace0Norm1,
    /// Tr(x) = 0 and N(x) = -1, the square roots of 1 other than
    /// scalars; requires odd characteristic. Matches |Q6| at every odd q.
    Trace0NormMinus1,
    /// Tr(x) = 1 and N(x) = 0; matches |Q6| in every characteristic.
    Trace1Norm0,
}

/// Count split octonions over F_q in the given locus by enumerating all
/// q^8 coordinate tuples. The defining equations are produced by the
/// octonion norm and trace on symbolic coordinates.
pub fn count_locus(kind: LocusKind, q: u64, budget: u128) -> Result<u128> {
    require_prime(q)?;
    if matches!(kind, LocusKind::Trace0Norm1 | LocusKind::Trace0NormMinus1) && q == 2 {
        return Err(Error::UnsupportedCharacteristic(2));
    }
    let fq = RingCtx::prime_field(q)?;
    let names = ["c0", "c1", "c2", "c3", "c4", "c5", "c6", "c7"];
    let ring = RingCtx::polynomial(&fq, &names)?;
    let coords: Vec<RingElt> = names.iter().map(|n| ring.var(n)).collect::<Result<_>>()?;
    let generic = SplitOct::from_coords(&ring, &coords)?;
    let norm = generic.norm();
    let trace = generic.trace();
    let polys = match kind {
        LocusKind::Norm1 => vec![&norm - &ring.one()],
        LocusKind::Trace0Norm1 => vec![&norm - &ring.one(), trace],
        LocusKind::Trace0NormMinus1 => vec![&norm + &ring.one(), trace],
        LocusKind::Trace1Norm0 => vec![norm, &trace - &ring.one()],
    };
    let c = count_affine_points(&polys, budget, worker_parts())?;
    Ok(c as u128)
}

/// Closed form for the locus sizes: |Q7| for the norm-1 locus, |Q6| for
/// the trace-1 norm-0 locus, and q^3 (q^3 + chi(-nu)) for the trace-0
/// norm-nu loci, where chi is the quadratic character of F_q.
pub fn predicted_locus_count(kind: LocusKind, q: u64) -> Result<u128> {
    match kind {
        LocusKind::Norm1 => predicted_quadric_count(7, q),
        LocusKind::Trace1Norm0 => predicted_quadric_count(6, q),
        LocusKind::Trace0NormMinus1 => {
            if q == 2 {
                return Err(Error::UnsupportedCharacteristic(2));
            }
            predicted_quadric_count(6, q)
        }
        LocusKind::Trace0Norm1 => {
            if q == 2 {
                return Err(Error::UnsupportedCharacteristic(2));
            }
            let q3 = upow(q as u128, 3)?;
            let q6 = q3.checked_mul(q3).ok_or_else(overflow)?;
            if q % 4 == 1 {
                Ok(q6 + q3)
            } else {
                Ok(q6 - q3)
            }
        }
    }
}

/// Order of SL_n(F_q): q^(n(n-1)/2) times the product of q^i - 1 for
/// i = 2..n.
fn special_linear_order(n: u32, q: u128) -> Result<u128> {
    let mut acc = upow(q, n * (n - 1) / 2)?;
    for i in 2..=n {
        acc = acc.checked_mul(upow(q, i)? - 1).ok_or_else(overflow)?;
    }
    Ok(acc)
}

/// Order of a split group over F_q by its classical formula. Accepted
/// names: SL2, SL3, SL4, G2, Spin7, Spin8 (case-insensitive).
pub fn group_order(name: &str, q: u64) -> Result<u128> {
    if q < 2 {
        return Err(Error::Unsupported("q must be at least 2".into()));
    }
    let qq = q as u128;
    let factor = |e: u32| -> Result<u128> { Ok(upow(qq, e)? - 1) };
    match name.to_ascii_lowercase().as_str() {
        "sl2" => special_linear_order(2, qq),
        "sl3" => special_linear_order(3, qq),
        "sl4" => special_linear_order(4, qq),
        "g2" => {
            let mut acc = upow(qq, 6)?;
            acc = acc.checked_mul(factor(6)?).ok_or_else(overflow)?;
            acc.checked_mul(factor(2)?).ok_or_else(overflow)
        }
        "spin7" => {
            let mut acc = upow(qq, 9)?;
            for e in [2u32, 4, 6] {
                acc = acc.checked_mul(factor(e)?).ok_or_else(overflow)?;
            }
            Ok(acc)
        }
        "spin8" => {
            let mut acc = upow(qq, 12)?;
            for e in [2u32, 4, 4, 6] {
                acc = acc.checked_mul(factor(e)?).ok_or_else(overflow)?;
            }
            Ok(acc)
        }
        _ => Err(Error::UnknownGroup(name.to_string())),
    }
}

fn exact_ratio(num: u128, den: u128) -> Result<u128> {
    if den == 0 || num % den != 0 {
        return Err(Error::Unsupported(format!("{num} is not divisible by {den}")));
    }
    Ok(num / den)
}

/// Check the homogeneous-space identities at one prime: brute-force
/// quadric counts on the observed side, group-order ratios on the
/// predicted side.
pub fn verify_quotient_identities(q: u64, budget: u128) -> Result<Vec<CountReport>> {
    let q5 = count_quadric_points(5, q, budget)?;
    let q6 = count_quadric_points(6, q, budget)?;
    let q7 = count_quadric_points(7, q, budget)?;
    let sl2 = group_order("SL2", q)?;
    let sl3 = group_order("SL3", q)?;
    let sl4 = group_order("SL4", q)?;
    let g2 = group_order("G2", q)?;
    let spin7 = group_order("Spin7", q)?;
    let spin8 = group_order("Spin8", q)?;
    let reports = vec![
        CountReport::new("Q5 = SL3/SL2", q, q5, exact_ratio(sl3, sl2)?),
        CountReport::new("Q6 = G2/SL3", q, q6, exact_ratio(g2, sl3)?),
        CountReport::new("Q7 = Spin7/G2", q, q7, exact_ratio(spin7, g2)?),
        CountReport::new("Q7 = SL4/SL3", q, q7, exact_ratio(sl4, sl3)?),
        CountReport::new("Q7^2 = Spin8/G2", q, q7.checked_mul(q7).ok_or_else(overflow)?, exact_ratio(spin8, g2)?),
    ];
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::points::DEFAULT_BUDGET;

    #[test]
    fn small_quadric_counts() {
        assert_eq!(count_quadric_points(1, 2, DEFAULT_BUDGET).unwrap(), 1);
        assert_eq!(count_quadric_points(3, 2, DEFAULT_BUDGET).unwrap(), 6);
        assert_eq!(count_quadric_points(6, 2, DEFAULT_BUDGET).unwrap(), 72);
        assert_eq!(count_quadric_points(7, 2, DEFAULT_BUDGET).unwrap(), 120);
        assert_eq!(count_quadric_points(7, 3, DEFAULT_BUDGET).unwrap(), 2160);
    }

    #[test]
    fn closed_form_matches_brute_force() {
        for q in [2u64, 3] {
            for n in 1..=7u32 {
                assert_eq!(
                    count_quadric_points(n, q, DEFAULT_BUDGET).unwrap(),
                    predicted_quadric_count(n, q).unwrap(),
                    "n = {n}, q = {q}"
                );
            }
        }
    }

    #[test]
    fn norm_one_locus_is_the_seven_quadric() {
        for q in [2u64, 3] {
            assert_eq!(
                count_locus(LocusKind::Norm1, q, DEFAULT_BUDGET).unwrap(),
                count_quadric_points(7, q, DEFAULT_BUDGET).unwrap()
            );
        }
        assert_eq!(count_locus(LocusKind::Norm1, 3, DEFAULT_BUDGET).unwrap(), 2160);
    }

    #[test]
    fn trace_zero_loci_split_by_the_square_class_of_the_norm() {
        // Tr = 0, N = 1 over F_3 consists of square roots of -1, which
        // generate nonsplit quadratic subalgebras since -1 is not a
        // square mod 3; its 702 = 3^6 - 3^3 points fall short of
        // |Q6(F_3)| = 756 = 3^6 + 3^3, reached instead by the square
        // roots of 1 cut out by Tr = 0, N = -1
        let plus = count_locus(LocusKind::Trace0Norm1, 3, DEFAULT_BUDGET).unwrap();
        let minus = count_locus(LocusKind::Trace0NormMinus1, 3, DEFAULT_BUDGET).unwrap();
        let q6 = count_quadric_points(6, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(plus, 702);
        assert_eq!(minus, 756);
        assert_eq!(q6, 756);
        assert_ne!(plus, q6);
        assert_eq!(plus, predicted_locus_count(LocusKind::Trace0Norm1, 3).unwrap());
        assert_eq!(minus, predicted_locus_count(LocusKind::Trace0NormMinus1, 3).unwrap());
        for kind in [LocusKind::Trace0Norm1, LocusKind::Trace0NormMinus1] {
            assert_eq!(
                count_locus(kind, 2, DEFAULT_BUDGET).unwrap_err(),
                Error::UnsupportedCharacteristic(2)
            );
        }
    }

    #[test]
    fn trace_zero_loci_agree_when_minus_one_is_a_square() {
        // -1 = 2^2 in F_5, so multiplying by a square root of -1 in the
        // scalars matches the two trace-zero loci with each other
        let plus = count_locus(LocusKind::Trace0Norm1, 5, DEFAULT_BUDGET).unwrap();
        let minus = count_locus(LocusKind::Trace0NormMinus1, 5, DEFAULT_BUDGET).unwrap();
        assert_eq!(plus, 15_750);
        assert_eq!(plus, minus);
        assert_eq!(plus, predicted_quadric_count(6, 5).unwrap());
        assert_eq!(plus, predicted_locus_count(LocusKind::Trace0Norm1, 5).unwrap());
    }

    #[test]
    fn trace_one_norm_zero_locus_matches_the_six_quadric_everywhere() {
        // Tr(x) = 1 pins the second diagonal coordinate, after which
        // N = 0 reads a - a^2 = <x-, x+>, the Q6 equation itself, valid
        // in characteristic 2 as well
        for q in [2u64, 3] {
            assert_eq!(
                count_locus(LocusKind::Trace1Norm0, q, DEFAULT_BUDGET).unwrap(),
                count_quadric_points(6, q, DEFAULT_BUDGET).unwrap()
            );
        }
        assert_eq!(count_locus(LocusKind::Trace1Norm0, 2, DEFAULT_BUDGET).unwrap(), 72);
    }

    #[test]
    fn group_orders_at_two() {
        assert_eq!(group_order("SL2", 2).unwrap(), 6);
        assert_eq!(group_order("SL3", 2).unwrap(), 168);
        assert_eq!(group_order("SL4", 2).unwrap(), 20160);
        assert_eq!(group_order("G2", 2).unwrap(), 12096);
        assert_eq!(group_order("Spin7", 2).unwrap(), 1_451_520);
        assert_eq!(group_order("Spin8", 2).unwrap(), 174_182_400);
        assert_eq!(group_order("E8", 2).unwrap_err(), Error::UnknownGroup("E8".into()));
    }

    #[test]
    fn spin7_and_sl4_ratios_agree() {
        for q in [2u64, 3, 5, 7, 11] {
            let lhs = exact_ratio(group_order("Spin7", q).unwrap(), group_order("G2", q).unwrap())
                .unwrap();
            let rhs = exact_ratio(group_order("SL4", q).unwrap(), group_order("SL3", q).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(lhs, predicted_quadric_count(7, q).unwrap());
        }
    }

    #[test]
    fn quotient_identities_hold() {
        for q in [2u64, 3] {
            let reports = verify_quotient_identities(q, DEFAULT_BUDGET).unwrap();
            assert_eq!(reports.len(), 5);
            for r in &reports {
                assert!(r.matches, "{} at q = {}: {} vs {}", r.label, q, r.observed, r.predicted);
            }
        }
    }

    #[test]
    fn budget_and_primality_are_enforced() {
        assert!(matches!(
            count_quadric_points(7, 11, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(count_quadric_points(3, 4, DEFAULT_BUDGET).unwrap_err(), Error::InvalidPrime(4));
    }
}
