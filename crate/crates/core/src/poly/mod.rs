//! Dense univariate polynomials over an arbitrary commutative scalar type.
//!
//! The representation is a coefficient vector in ascending degree order with
//! no trailing zeros, so the zero polynomial is the empty vector.  Generic
//! ring operations live here; algorithms that are specific to exact rational
//! or integer coefficients (primitive parts, subresultants, squarefree
//! decomposition) live in [`rational`].

pub mod rational;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Scalar types usable as polynomial coefficients: a commutative ring with
/// exact equality.  Blanket-implemented; do not implement by hand.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

/// Scalars forming a field, enabling division with remainder and monic
/// normalization.  Implemented only for types whose division is exact
/// division in a field (plus `f64` for approximate diagnostics).
pub trait FieldCoeff: Coeff + Div<Output = Self> {}

impl FieldCoeff for BigRational {}
impl FieldCoeff for f64 {}

/// A dense univariate polynomial.  `coeffs[i]` is the coefficient of `x^i`;
/// the vector is empty or ends in a nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T: Coeff> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Poly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Poly { coeffs: v }
    }

    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial known to be nonzero.  Panics on zero.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    /// Leading coefficient.  Panics on zero.
    pub fn lc(&self) -> &T {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut v = Vec::with_capacity(self.coeffs.len() - 1);
        let mut k = T::zero();
        for c in &self.coeffs {
            // k tracks the index as a ring element so no usize->T cast is needed
            v.push(c.clone() * k.clone());
            k = k + T::one();
        }
        v.remove(0);
        Poly::from_coeffs(v)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `x^k`.
    pub fn mul_xk(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitute `other` for the variable.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Coefficient reversal: `x^deg * p(1/x)` for `p` with nonzero constant
    /// term; in general the reversed coefficient vector, renormalized.
    pub fn reverse(&self) -> Self {
        Poly::from_coeffs(self.coeffs.iter().rev().cloned().collect())
    }
}

impl<T: FieldCoeff> Poly<T> {
    /// Euclidean division: returns `(q, r)` with `self = q * div + r`,
    /// `deg r < deg div`.  Panics if `div` is zero.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.deg();
        if self.is_zero() || self.deg() < dd {
            return (Poly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); self.deg() - dd + 1];
        let inv_lc = T::one() / div.lc().clone();
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].clone() * inv_lc.clone();
            quot[i - dd] = q.clone();
            for (j, dc) in div.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j].clone() - q.clone() * dc.clone();
            }
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, div: &Self) -> Self {
        let (q, r) = self.divrem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = T::one() / self.lc().clone();
        self.scale(&inv)
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(v)
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(v)
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(v)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

/// Sign and magnitude formatting hooks for canonical text output.
pub trait CoeffDisplay {
    fn is_displayed_negative(&self) -> bool;
    /// Textual form of the absolute value.
    fn abs_text(&self) -> String;
    /// True when the absolute value is the multiplicative unit.
    fn abs_is_one(&self) -> bool;
}

impl CoeffDisplay for BigRational {
    fn is_displayed_negative(&self) -> bool {
        self < &BigRational::zero()
    }
    fn abs_text(&self) -> String {
        let a = if self.is_displayed_negative() { -self.clone() } else { self.clone() };
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn abs_is_one(&self) -> bool {
        self.abs_text() == "1"
    }
}

impl CoeffDisplay for BigInt {
    fn is_displayed_negative(&self) -> bool {
        self < &BigInt::zero()
    }
    fn abs_text(&self) -> String {
        if self.is_displayed_negative() { (-self).to_string() } else { self.to_string() }
    }
    fn abs_is_one(&self) -> bool {
        self.abs_text() == "1"
    }
}

impl CoeffDisplay for f64 {
    fn is_displayed_negative(&self) -> bool {
        *self < 0.0
    }
    fn abs_text(&self) -> String {
        format!("{}", self.abs())
    }
    fn abs_is_one(&self) -> bool {
        *self == 1.0 || *self == -1.0
    }
}

/// Canonical text form: terms in decreasing degree, explicit `*` and `^`,
/// e.g. `x^4 - 2*x^3 + x - 1`.
impl<T: Coeff + CoeffDisplay> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_displayed_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = i == 0 || !c.abs_is_one();
            if show_coeff {
                write!(f, "{}", c.abs_text())?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

impl<T: Coeff + CoeffDisplay> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
