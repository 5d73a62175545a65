//! Scalar coefficient arithmetic for the three base rings: the integers,
//! the rationals, and prime fields F_p with p < 2^63.
//!
//! Polynomial contexts carry a [`ScalarRing`] describing their coefficient
//! ring; coefficients themselves are [`Scalar`] values. Integer and rational
//! scalars are arbitrary precision (`num` crate), prime-field scalars are
//! canonical residues in 0..p held in a `u64` with `u128` intermediates.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Deterministic Miller-Rabin, exact for all u64 inputs with this base set.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo prime `p`, or None when `a == 0 (mod p)`.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    // extended Euclid on (a, p) keeping coefficients mod p
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    Some(s0.rem_euclid(p as i128) as u64)
}

/// The coefficient ring of a polynomial context.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarRing {
    Int,
    Rat,
    Fp(u64),
}

impl ScalarRing {
    pub fn fp(p: u64) -> Result<ScalarRing> {
        if is_prime_u64(p) {
            Ok(ScalarRing::Fp(p))
        } else {
            Err(Error::InvalidPrime(p))
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, ScalarRing::Int)
    }

    /// Characteristic: 0 for Z and Q, p for F_p.
    pub fn characteristic(self) -> u64 {
        match self {
            ScalarRing::Fp(p) => p,
            _ => 0,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            ScalarRing::Int => Scalar::Int(BigInt::from(n)),
            ScalarRing::Rat => Scalar::Rat(BigRational::from(BigInt::from(n))),
            ScalarRing::Fp(p) => Scalar::Fp((n.rem_euclid(p as i64)) as u64),
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            ScalarRing::Int => Scalar::Int(n.clone()),
            ScalarRing::Rat => Scalar::Rat(BigRational::from(n.clone())),
            ScalarRing::Fp(p) => {
                let m = n % BigInt::from(p);
                let m = if m.is_negative() { m + BigInt::from(p) } else { m };
                let digits = m.to_u64_digits().1;
                Scalar::Fp(digits.first().copied().unwrap_or(0))
            }
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (ScalarRing::Int, Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x + y),
            (ScalarRing::Rat, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (ScalarRing::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(add_mod(*x, *y, p)),
            _ => panic!("scalar does not belong to ring"),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (ScalarRing::Int, Scalar::Int(x)) => Scalar::Int(-x),
            (ScalarRing::Rat, Scalar::Rat(x)) => Scalar::Rat(-x),
            (ScalarRing::Fp(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar does not belong to ring"),
        }
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (ScalarRing::Int, Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x * y),
            (ScalarRing::Rat, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (ScalarRing::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(mul_mod(*x, *y, p)),
            _ => panic!("scalar does not belong to ring"),
        }
    }

    /// Multiplicative inverse when `a` is a unit of the ring.
    pub fn inv(self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (ScalarRing::Int, Scalar::Int(x)) => {
                if x.is_one() || (-x).is_one() {
                    Some(Scalar::Int(x.clone()))
                } else {
                    None
                }
            }
            (ScalarRing::Rat, Scalar::Rat(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(x.recip()))
                }
            }
            (ScalarRing::Fp(p), Scalar::Fp(x)) => inv_mod(*x, p).map(Scalar::Fp),
            _ => panic!("scalar does not belong to ring"),
        }
    }

    /// Exact division `a / b`, defined only when `b` divides `a` in the ring.
    pub fn exact_div(self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        match (self, a, b) {
            (ScalarRing::Int, Scalar::Int(x), Scalar::Int(y)) => {
                if y.is_zero() {
                    None
                } else if (x % y).is_zero() {
                    Some(Scalar::Int(x / y))
                } else {
                    None
                }
            }
            _ => {
                let binv = self.inv(b)?;
                Some(self.mul(a, &binv))
            }
        }
    }

    pub fn is_zero(self, a: &Scalar) -> bool {
        match a {
            Scalar::Int(x) => x.is_zero(),
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Fp(x) => *x == 0,
        }
    }
}

/// An element of one of the three scalar rings. Values are canonical:
/// rationals reduced (guaranteed by `BigRational`), residues in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Fp(u64),
}

impl Scalar {
    /// Plain text form: integers as-is, rationals as `a/b` when non-integral.
    pub fn to_text(&self) -> String {
        match self {
            Scalar::Int(x) => x.to_string(),
            Scalar::Rat(x) => {
                if x.is_integer() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Fp(x) => x.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(is_prime_u64(5));
        assert!(is_prime_u64(7));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(0));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(4));
        assert!(!is_prime_u64(1_000_000_007u64 * 3));
    }

    #[test]
    fn fp_inverses() {
        for p in [2u64, 3, 5, 7, 11, 97] {
            for a in 1..p {
                let i = inv_mod(a, p).unwrap();
                assert_eq!(mul_mod(a, i, p), 1);
            }
            assert_eq!(inv_mod(0, p), None);
        }
    }

    #[test]
    fn integer_unit_detection() {
        let z = ScalarRing::Int;
        assert_eq!(z.inv(&z.from_i64(1)), Some(z.from_i64(1)));
        assert_eq!(z.inv(&z.from_i64(-1)), Some(z.from_i64(-1)));
        assert_eq!(z.inv(&z.from_i64(2)), None);
        assert_eq!(z.exact_div(&z.from_i64(6), &z.from_i64(3)), Some(z.from_i64(2)));
        assert_eq!(z.exact_div(&z.from_i64(7), &z.from_i64(3)), None);
    }

    #[test]
    fn rational_text() {
        let q = ScalarRing::Rat;
        let half = q.exact_div(&q.from_i64(1), &q.from_i64(2)).unwrap();
        assert_eq!(half.to_text(), "1/2");
        assert_eq!(q.from_i64(-3).to_text(), "-3");
    }
}
