//! Polynomials over prime fields `F_p` for machine-word primes `p < 2^62`,
//! with complete factorization (squarefree, distinct-degree, equal-degree
//! stages) and Frobenius-based root counting in extensions `F_(p^e)`.
//!
//! The equal-degree splitting uses a fixed-seed deterministic generator, so
//! every run factors identically; results are sorted canonically anyway.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::{IntPoly, RatPoly};

/// Largest modulus accepted: primes must fit comfortably in a word so that
/// products stay inside u128.
pub const MAX_PRIME: u64 = 1 << 62;

pub fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p { s - p } else { s }
}

pub fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b { a - b } else { a + p - b }
}

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse mod a prime, by Fermat.  Panics on zero input.
pub fn invmod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod {}", p);
    powmod(a, p - 2, p)
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
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
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Iterator over the primes 2, 3, 5, ... in order.
pub struct Primes {
    next: u64,
}

impl Primes {
    pub fn new() -> Self {
        Primes { next: 2 }
    }

    /// Primes starting from the first prime >= lo.
    pub fn from(lo: u64) -> Self {
        Primes { next: lo.max(2) }
    }
}

impl Default for Primes {
    fn default() -> Self {
        Primes::new()
    }
}

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        let mut n = self.next;
        while !is_prime_u64(n) {
            n += 1;
        }
        self.next = n + 1;
        Some(n)
    }
}

/// Prime factorization of a word-size integer by trial division.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0u32;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Smallest primitive root mod an odd prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    assert!(is_prime_u64(p) && p > 2);
    let n = p - 1;
    let qs: Vec<u64> = factor_u64(n).into_iter().map(|(q, _)| q).collect();
    'next_g: for g in 2..p {
        for q in &qs {
            if powmod(g, n / q, p) == 1 {
                continue 'next_g;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root");
}

/// Fixed-increment splitmix generator; seeded from constants so runs are
/// reproducible without any external randomness source.
pub(crate) struct SplitMix {
    state: u64,
}

impl SplitMix {
    pub fn new(seed: u64) -> Self {
        SplitMix { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// Dense polynomial over `F_p`, coefficients in `[0, p)` ascending, no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModPoly {
    p: u64,
    c: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        assert!(p >= 2 && p < MAX_PRIME, "modulus out of range");
        let mut c: Vec<u64> = coeffs.into_iter().map(|x| x % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { p, c }
    }

    pub fn zero(p: u64) -> Self {
        ModPoly::new(p, Vec::new())
    }

    pub fn one(p: u64) -> Self {
        ModPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        ModPoly::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn lc(&self) -> u64 {
        *self.c.last().expect("leading coefficient of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    fn same_field(&self, other: &ModPoly) {
        debug_assert_eq!(self.p, other.p, "mixed moduli");
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        self.same_field(other);
        let n = self.c.len().max(other.c.len());
        let v = (0..n)
            .map(|i| addmod(self.coeff(i), other.coeff(i), self.p))
            .collect();
        ModPoly::new(self.p, v)
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        self.same_field(other);
        let n = self.c.len().max(other.c.len());
        let v = (0..n)
            .map(|i| submod(self.coeff(i), other.coeff(i), self.p))
            .collect();
        ModPoly::new(self.p, v)
    }

    pub fn neg(&self) -> ModPoly {
        let v = self.c.iter().map(|&x| if x == 0 { 0 } else { self.p - x }).collect();
        ModPoly::new(self.p, v)
    }

    pub fn scale(&self, k: u64) -> ModPoly {
        let k = k % self.p;
        let v = self.c.iter().map(|&x| mulmod(x, k, self.p)).collect();
        ModPoly::new(self.p, v)
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        self.same_field(other);
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(self.p);
        }
        let mut v = vec![0u64; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                v[i + j] = addmod(v[i + j], mulmod(a, b, self.p), self.p);
            }
        }
        ModPoly::new(self.p, v)
    }

    pub fn divrem(&self, div: &ModPoly) -> (ModPoly, ModPoly) {
        self.same_field(div);
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.deg();
        if self.is_zero() || self.deg() < dd {
            return (ModPoly::zero(self.p), self.clone());
        }
        let p = self.p;
        let inv = invmod(div.lc(), p);
        let mut rem = self.c.clone();
        let mut quot = vec![0u64; self.deg() - dd + 1];
        for i in (dd..rem.len()).rev() {
            if rem[i] == 0 {
                continue;
            }
            let q = mulmod(rem[i], inv, p);
            quot[i - dd] = q;
            for (j, &dc) in div.c.iter().enumerate() {
                rem[i - dd + j] = submod(rem[i - dd + j], mulmod(q, dc, p), p);
            }
        }
        rem.truncate(dd);
        (ModPoly::new(p, quot), ModPoly::new(p, rem))
    }

    pub fn rem(&self, div: &ModPoly) -> ModPoly {
        self.divrem(div).1
    }

    pub fn div_exact(&self, div: &ModPoly) -> ModPoly {
        let (q, r) = self.divrem(div);
        assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn monic(&self) -> ModPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(invmod(self.lc(), self.p))
    }

    pub fn gcd(&self, other: &ModPoly) -> ModPoly {
        self.same_field(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    pub fn derivative(&self) -> ModPoly {
        if self.c.len() <= 1 {
            return ModPoly::zero(self.p);
        }
        let v = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &x)| mulmod(x, (i as u64) % self.p, self.p))
            .collect();
        ModPoly::new(self.p, v)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.c.iter().rev() {
            acc = addmod(mulmod(acc, x, self.p), c, self.p);
        }
        acc
    }

    /// `self^e mod m` with a word exponent.
    pub fn powmod_u64(&self, mut e: u64, m: &ModPoly) -> ModPoly {
        let mut base = self.rem(m);
        let mut acc = ModPoly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// `self^e mod m` with an arbitrary-precision exponent.
    pub fn powmod_big(&self, e: &BigUint, m: &ModPoly) -> ModPoly {
        let mut acc = ModPoly::one(self.p);
        let mut base = self.rem(m);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }
}

/// Reduce an integer polynomial mod p.
pub fn reduce_int_poly(f: &IntPoly, p: u64) -> ModPoly {
    let pb = BigInt::from(p);
    let v = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    ModPoly::new(p, v)
}

/// Reduce a rational polynomial mod p; fails when a denominator vanishes
/// mod p.
pub fn reduce_rat_poly(f: &RatPoly, p: u64) -> Result<ModPoly> {
    let pb = BigInt::from(p);
    let mut v = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        let d = c.denom().mod_floor(&pb).to_u64().unwrap();
        if d == 0 {
            return Err(Error::BadReduction { p });
        }
        let n = c.numer().mod_floor(&pb).to_u64().unwrap();
        v.push(mulmod(n, invmod(d, p), p));
    }
    Ok(ModPoly::new(p, v))
}

/// Squarefree decomposition of a monic polynomial mod p, handling p-th
/// power parts.  Parts are monic, pairwise coprime, and multiply back with
/// their multiplicities to the input.
pub fn squarefree_decomposition_mod_p(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    assert!(!f.is_zero() && f.lc() == 1, "monic input required");
    fn pth_root(f: &ModPoly) -> ModPoly {
        let p = f.modulus() as usize;
        let v: Vec<u64> = f.coeffs().iter().step_by(p).copied().collect();
        ModPoly::new(f.modulus(), v)
    }
    fn go(f: &ModPoly, scale: usize, out: &mut Vec<(ModPoly, usize)>) {
        if f.deg() == 0 {
            return;
        }
        let d = f.derivative();
        if d.is_zero() {
            go(&pth_root(f), scale * f.modulus() as usize, out);
            return;
        }
        let mut c = f.gcd(&d);
        let mut w = f.div_exact(&c).monic();
        let mut i = 1usize;
        while w.deg() > 0 {
            let y = w.gcd(&c);
            let z = w.div_exact(&y).monic();
            if z.deg() > 0 {
                out.push((z, i * scale));
            }
            w = y;
            c = c.div_exact(&w).monic();
            i += 1;
        }
        if c.deg() > 0 {
            go(&pth_root(&c), scale * f.modulus() as usize, out);
        }
    }
    let mut out = Vec::new();
    go(f, 1, &mut out);
    out.sort_by(|a, b| canonical_key(&a.0).cmp(&canonical_key(&b.0)));
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial: returns
/// `(d, product of all irreducible factors of degree d)` pairs in
/// increasing d.
pub fn distinct_degree_factorization(f: &ModPoly) -> Vec<(usize, ModPoly)> {
    assert!(!f.is_zero() && f.lc() == 1, "monic input required");
    let p = f.modulus();
    let mut out = Vec::new();
    let mut v = f.clone();
    let mut h = ModPoly::x(p);
    let mut d = 0usize;
    while v.deg() > 0 {
        d += 1;
        if 2 * d > v.deg() {
            out.push((v.deg(), v));
            break;
        }
        h = h.powmod_u64(p, &v);
        let g = h.sub(&ModPoly::x(p)).gcd(&v);
        if g.deg() > 0 {
            v = v.div_exact(&g).monic();
            h = h.rem(&v);
            out.push((d, g));
        }
    }
    out
}

/// Split a monic product of distinct irreducibles of known equal degree d
/// into those irreducibles (Cantor-Zassenhaus, odd p).
pub fn equal_degree_factorization(f: &ModPoly, d: usize) -> Vec<ModPoly> {
    let p = f.modulus();
    assert!(p % 2 == 1, "odd characteristic required");
    assert!(f.deg() % d == 0);
    if f.deg() == d {
        return vec![f.monic()];
    }
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
    let mut rng = SplitMix::new(0xC1A5_5E5D ^ (p.wrapping_mul(0x9E37) ^ d as u64));
    loop {
        let a = ModPoly::new(p, (0..f.deg()).map(|_| rng.next_u64() % p).collect());
        if a.degree().map_or(true, |da| da == 0) {
            continue;
        }
        let shared = a.gcd(f);
        if shared.deg() > 0 && shared.deg() < f.deg() {
            let rest = f.div_exact(&shared).monic();
            let mut out = equal_degree_factorization(&shared, d);
            out.extend(equal_degree_factorization(&rest, d));
            out.sort_by(|x, y| canonical_key(x).cmp(&canonical_key(y)));
            return out;
        }
        let b = a.powmod_big(&e, f);
        let split = b.sub(&ModPoly::one(p)).gcd(f);
        if split.deg() > 0 && split.deg() < f.deg() {
            let rest = f.div_exact(&split).monic();
            let mut out = equal_degree_factorization(&split, d);
            out.extend(equal_degree_factorization(&rest, d));
            out.sort_by(|x, y| canonical_key(x).cmp(&canonical_key(y)));
            return out;
        }
    }
}

fn canonical_key(f: &ModPoly) -> (usize, Vec<u64>) {
    (f.c.len(), f.c.iter().rev().copied().collect())
}

/// Complete factorization over `F_p`: returns the unit (leading
/// coefficient) and monic irreducible factors with multiplicities, sorted
/// by degree then by coefficient sequence from the top.
pub fn factor_mod_p(f: &ModPoly) -> (u64, Vec<(ModPoly, usize)>) {
    assert!(!f.is_zero(), "factorization of zero");
    let unit = f.lc();
    let fm = f.monic();
    if fm.deg() == 0 {
        return (unit, Vec::new());
    }
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition_mod_p(&fm) {
        for (d, prod) in distinct_degree_factorization(&part) {
            for g in equal_degree_factorization(&prod, d) {
                out.push((g, mult));
            }
        }
    }
    out.sort_by(|a, b| canonical_key(&a.0).cmp(&canonical_key(&b.0)));
    (unit, out)
}

/// Degrees of the irreducible factors of a monic squarefree polynomial,
/// as a sorted multiset.  Cheaper than full factorization: no
/// equal-degree stage.
pub fn factor_degrees(f: &ModPoly) -> Vec<usize> {
    let mut out = Vec::new();
    for (d, prod) in distinct_degree_factorization(f) {
        for _ in 0..prod.deg() / d {
            out.push(d);
        }
    }
    out.sort_unstable();
    out
}

/// Whether a monic polynomial is irreducible over `F_p`.
pub fn is_irreducible_mod_p(f: &ModPoly) -> bool {
    if f.is_zero() || f.deg() == 0 {
        return false;
    }
    if f.deg() == 1 {
        return true;
    }
    let fm = f.monic();
    if fm.gcd(&fm.derivative()).deg() > 0 {
        return false;
    }
    let dd = distinct_degree_factorization(&fm);
    dd.len() == 1 && dd[0].0 == fm.deg()
}

/// Number of distinct roots of `f` in the extension field `F_(p^e)`:
/// the degree of `gcd(f, x^(p^e) - x)`, via iterated Frobenius.
pub fn count_roots_fq(f: &ModPoly, e: usize) -> usize {
    assert!(!f.is_zero(), "root count of zero polynomial");
    assert!(e >= 1);
    if f.deg() == 0 {
        return 0;
    }
    let p = f.modulus();
    let mut t = ModPoly::x(p).rem(f);
    for _ in 0..e {
        t = t.powmod_u64(p, f);
    }
    let g = t.sub(&ModPoly::x(p)).gcd(f);
    g.degree().map_or(0, |d| d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_utilities() {
        assert!(is_prime_u64(2) && is_prime_u64(3) && is_prime_u64(97));
        assert!(!is_prime_u64(1) && !is_prime_u64(91) && !is_prime_u64(561));
        assert!(is_prime_u64(4611686018427387847)); // large prime below 2^62
        let first: Vec<u64> = Primes::new().take(6).collect();
        assert_eq!(first, vec![2, 3, 5, 7, 11, 13]);
        let from7: Vec<u64> = Primes::from(6).take(3).collect();
        assert_eq!(from7, vec![7, 11, 13]);
        assert_eq!(factor_u64(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(13), 2);
        // primitive root generates all nonzero residues
        for p in [5u64, 11, 31] {
            let g = primitive_root(p);
            let mut seen = std::collections::HashSet::new();
            let mut x = 1u64;
            for _ in 0..p - 1 {
                x = mulmod(x, g, p);
                seen.insert(x);
            }
            assert_eq!(seen.len() as u64, p - 1);
        }
    }

    #[test]
    fn poly_arithmetic_mod_p() {
        let p = 13;
        let a = ModPoly::new(p, vec![1, 2, 3]);
        let b = ModPoly::new(p, vec![5, 1]);
        let prod = a.mul(&b);
        let (q, r) = prod.divrem(&b);
        assert_eq!(q, a);
        assert!(r.is_zero());
        let (q2, r2) = a.divrem(&b);
        assert_eq!(b.mul(&q2).add(&r2), a);
        assert!(r2.degree().map_or(true, |d| d < b.deg()));
        assert_eq!(a.eval(2), (1 + 2 * 2 + 3 * 4) % 13);
    }

    #[test]
    fn gcd_and_power() {
        let p = 7;
        let a = ModPoly::new(p, vec![6, 1]).mul(&ModPoly::new(p, vec![1, 1]));
        let b = ModPoly::new(p, vec![6, 1]).mul(&ModPoly::new(p, vec![3, 1]));
        assert_eq!(a.gcd(&b), ModPoly::new(p, vec![6, 1]));
        let x = ModPoly::x(p);
        let m = ModPoly::new(p, vec![1, 0, 1]); // x^2 + 1
        // x^7 mod (x^2+1) over F_7: x^2 = -1 so x^7 = (x^2)^3 * x = -x
        assert_eq!(x.powmod_u64(7, &m), ModPoly::new(p, vec![0, 6]));
        assert_eq!(
            x.powmod_big(&BigUint::from(7u32), &m),
            ModPoly::new(p, vec![0, 6])
        );
    }

    #[test]
    fn squarefree_decomposition_with_pth_powers() {
        let p = 3;
        // f = (x+1)^3 * (x+2)^2 * x over F_3
        let xp1 = ModPoly::new(p, vec![1, 1]);
        let xp2 = ModPoly::new(p, vec![2, 1]);
        let x = ModPoly::x(p);
        let f = xp1.mul(&xp1).mul(&xp1).mul(&xp2).mul(&xp2).mul(&x);
        let parts = squarefree_decomposition_mod_p(&f);
        let mut rebuilt = ModPoly::one(p);
        for (g, m) in &parts {
            assert!(g.lc() == 1);
            for _ in 0..*m {
                rebuilt = rebuilt.mul(g);
            }
        }
        assert_eq!(rebuilt, f.monic());
        assert!(parts.contains(&(xp1.clone(), 3)));
        assert!(parts.contains(&(xp2.clone(), 2)));
        assert!(parts.contains(&(x.clone(), 1)));
    }

    #[test]
    fn factorization_round_trip() {
        let p = 11;
        let f = ModPoly::new(p, vec![3, 0, 5, 1, 7]);
        let (unit, factors) = factor_mod_p(&f);
        assert_eq!(unit, 7);
        let mut rebuilt = ModPoly::new(p, vec![unit]);
        for (g, m) in &factors {
            assert!(is_irreducible_mod_p(g), "claimed factor {:?} not irreducible", g);
            for _ in 0..*m {
                rebuilt = rebuilt.mul(g);
            }
        }
        assert_eq!(rebuilt, f);
    }

    #[test]
    fn factorization_deterministic_across_calls() {
        let p = 101;
        let f = ModPoly::new(p, vec![1, 17, 0, 55, 2, 0, 1, 9]);
        let a = factor_mod_p(&f);
        let b = factor_mod_p(&f);
        assert_eq!(a, b);
    }

    #[test]
    fn distinct_degree_blocks() {
        let p = 5;
        // x^2 + 2 is irreducible over F_5 (no square roots of -2 = 3:
        // squares are 0,1,4), x + 1 and x + 2 are linear.
        let f = ModPoly::new(p, vec![2, 0, 1])
            .mul(&ModPoly::new(p, vec![1, 1]))
            .mul(&ModPoly::new(p, vec![2, 1]));
        let dd = distinct_degree_factorization(&f);
        assert_eq!(dd.len(), 2);
        assert_eq!(dd[0].0, 1);
        assert_eq!(dd[0].1, ModPoly::new(p, vec![1, 1]).mul(&ModPoly::new(p, vec![2, 1])));
        assert_eq!(dd[1].0, 2);
        assert_eq!(dd[1].1, ModPoly::new(p, vec![2, 0, 1]));
        assert_eq!(factor_degrees(&f), vec![1, 1, 2]);
    }

    #[test]
    fn root_counts_in_extensions() {
        // x^2 + 1 over F_5: roots 2, 3
        let f = ModPoly::new(5, vec![1, 0, 1]);
        assert_eq!(count_roots_fq(&f, 1), 2);
        // over F_3: none in F_3, both in F_9
        let g = ModPoly::new(3, vec![1, 0, 1]);
        assert_eq!(count_roots_fq(&g, 1), 0);
        assert_eq!(count_roots_fq(&g, 2), 2);
        // x^3 - 2 over F_5: cubing is a bijection on F_5^*, so exactly one
        // root 3 in F_5; the quadratic cofactor x^2 + 3x + 4 is irreducible
        // (its discriminant 3 is a non-square), so its roots live in F_25.
        let h = ModPoly::new(5, vec![3, 0, 0, 1]);
        assert_eq!(count_roots_fq(&h, 1), 1);
        assert_eq!(count_roots_fq(&h, 2), 3);
        assert_eq!(count_roots_fq(&h, 3), 1);
        assert_eq!(count_roots_fq(&h, 6), 3);
        // repeated roots are counted once
        let sq = ModPoly::new(5, vec![1, 2, 1]); // (x+1)^2
        assert_eq!(count_roots_fq(&sq, 1), 1);
    }

    #[test]
    fn reductions() {
        let f = crate::ratpoly(&[-1, 0, 1]);
        let r = reduce_rat_poly(&f, 7).unwrap();
        assert_eq!(r, ModPoly::new(7, vec![6, 0, 1]));
        let half = crate::RatPoly::from_coeffs(vec![crate::ratio(1, 2), crate::rat(1)]);
        assert_eq!(reduce_rat_poly(&half, 7).unwrap(), ModPoly::new(7, vec![4, 1]));
        assert!(matches!(
            reduce_rat_poly(&half, 2),
            Err(Error::BadReduction { p: 2 })
        ));
        let g = crate::intpoly(&[-3, 10, 1]);
        assert_eq!(reduce_int_poly(&g, 7), ModPoly::new(7, vec![4, 3, 1]));
    }
}
