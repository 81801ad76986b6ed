//! Exact computation of root clusters of irreducible polynomials over Q,
//! cluster magnification by composita with cyclic Galois fields, and
//! root-adjunction towers.
//!
//! Everything on a decision path is exact: big-rational arithmetic, integer
//! subresultants, factorization over Q and over number fields, and modular
//! root-counting certificates.  Floating point appears nowhere except the
//! `f64` instantiation of [`poly::Poly`] kept for quick diagnostics.

pub mod clusters;
pub mod error;
pub mod factor;
pub mod linalg;
pub mod magnify;
pub mod modp;
pub mod numfield;
pub mod poly;
pub mod sn_tower;

pub use error::{Error, Result};
pub use poly::{Coeff, FieldCoeff, Poly};

pub use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar used on all decision paths.
pub type Rat = BigRational;
/// Polynomial over Q.
pub type RatPoly = Poly<BigRational>;
/// Polynomial over Z, used by the integer algorithms behind the scenes.
pub type IntPoly = Poly<BigInt>;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from a numerator / denominator pair.  Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Rational polynomial from integer coefficients in ascending degree order.
pub fn ratpoly(coeffs: &[i64]) -> RatPoly {
    Poly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
}

/// Integer polynomial from coefficients in ascending degree order.
pub fn intpoly(coeffs: &[i64]) -> IntPoly {
    Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

/// Tunable limits for the exact and certified code paths.
///
/// The defaults keep every exact factorization at norm degree at most 100,
/// which is where dense subresultant and recombination costs stay
/// interactive; larger instances are served by modular certificates.
#[derive(Clone, Debug)]
pub struct Config {
    /// Absolute field degree up to which factorization over a number field
    /// is attempted exactly.
    pub exact_degree_cap: usize,
    /// Cap on the degree of the norm polynomial an exact factorization may
    /// create (field degree times polynomial degree).
    pub exact_norm_cap: usize,
    /// Number of usable primes sampled by the modular root-count bound.
    pub prime_budget: usize,
    /// How many candidate primes the magnifier search may scan.
    pub magnifier_prime_budget: usize,
    /// How many shift constants the primitive-element search may try.
    pub primitive_search_budget: usize,
    /// Absolute degree at which tower construction stops with a truncation
    /// marker instead of adjoining further roots.
    pub tower_degree_cap: usize,
    /// Worker threads for independent modular computations; 1 = sequential.
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            exact_degree_cap: 10,
            exact_norm_cap: 100,
            prime_budget: 24,
            magnifier_prime_budget: 10_000,
            primitive_search_budget: 100,
            tower_degree_cap: 24,
            threads: 1,
        }
    }
}
