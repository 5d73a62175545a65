//! Exact arithmetic for split octonion and Zorn vector-matrix algebras over
//! commutative rings.
//!
//! The crate provides, bottom to top:
//!
//! * a small tower of exact coefficient rings (integers, rationals, prime
//!   fields, multivariate polynomial rings, quotients by one polynomial)
//!   with unique normal forms, so equality of representations is equality
//!   in the ring ([`ring`], [`poly`], [`scalar`]);
//! * exact linear algebra: matrices over any context, determinants,
//!   nullspaces over fields ([`linalg`]), and brute-force point enumeration
//!   over prime fields ([`points`]);
//! * the split octonion algebra as pairs of 2x2 matrices ([`oct`]) and the
//!   Zorn vector-matrix algebra over oriented rank-3 projective modules
//!   presented by unimodular rows ([`zorn`]);
//! * structure maps tied to the exceptional group G2: the SL3 action fixing
//!   a quadratic subring, derivation spaces, trace-zero quadratic forms,
//!   left multiplication matrices, and the induced action on the second
//!   exterior power ([`g2`]);
//! * finite-field certification: quadric point counts against classical
//!   group-order formulas ([`census`]);
//! * classical constructions: Suslin matrices, unimodular rows of powers on
//!   odd quadrics, and the Mohan Kumar family of complete intersection
//!   points ([`constructions`]);
//! * a deterministic check suite with machine-readable reports ([`suite`],
//!   [`report`]).

pub mod census;
pub mod constructions;
pub mod error;
pub mod g2;
pub mod linalg;
pub mod oct;
pub mod parse;
pub mod points;
pub mod poly;
pub mod report;
pub mod ring;
pub mod rng;
pub mod scalar;
pub mod serial;
pub mod suite;
pub mod zorn;

pub use error::{Error, Result};
pub use ring::{normal_form, quadric_ring, RingCtx, RingElt};
