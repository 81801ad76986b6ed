//! Factorization over Q: squarefree split, good-prime modular
//! factorization, quadratic Hensel lifting past the coefficient bound, and
//! subset recombination with degree-set and trailing-coefficient pruning.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::modp::{self, ModPoly};
use crate::poly::rational::{
    int_primitive_part, int_to_rat, primitive_integer_form, squarefree_decomposition,
};
use crate::poly::Poly;
use crate::{IntPoly, Rat, RatPoly};

/// Factorization of a rational polynomial: `input = unit * prod
/// factors[i].0 ^ factors[i].1` with monic irreducible factors sorted by
/// degree, then by coefficient sequence from the leading end.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorList {
    pub unit: Rat,
    pub factors: Vec<(RatPoly, usize)>,
}

impl FactorList {
    pub fn product(&self) -> RatPoly {
        let mut acc = RatPoly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }
}

/// Canonical factor order: degree first, then leading-end coefficient
/// comparison.
pub(crate) fn canonical_cmp(a: &RatPoly, b: &RatPoly) -> std::cmp::Ordering {
    let da = a.degree();
    let db = b.degree();
    da.cmp(&db).then_with(|| {
        let d = da.unwrap_or(0);
        for i in (0..=d).rev() {
            let o = a.coeff(i).cmp(&b.coeff(i));
            if o != std::cmp::Ordering::Equal {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    })
}

// coefficient-wise residues in [0, m)
fn pmod(f: &IntPoly, m: &BigInt) -> IntPoly {
    Poly::from_coeffs(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn pmod_mul(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    pmod(&(a * b), m)
}

/// Division with remainder mod m by a monic divisor.
fn pmod_divrem(a: &IntPoly, div: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    debug_assert!(div.lc().is_one(), "mod-m division needs a monic divisor");
    let dd = div.deg();
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    if rem.len() <= dd {
        return (Poly::zero(), pmod(a, m));
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let q = rem[i].mod_floor(m);
        if q.is_zero() {
            rem[i] = BigInt::zero();
            continue;
        }
        quot[i - dd] = q.clone();
        for (j, dc) in div.coeffs().iter().enumerate() {
            let t = (&rem[i - dd + j] - &q * dc).mod_floor(m);
            rem[i - dd + j] = t;
        }
    }
    rem.truncate(dd);
    (pmod(&Poly::from_coeffs(quot), m), pmod(&Poly::from_coeffs(rem), m))
}

/// Symmetric representative of each coefficient in `(-m/2, m/2]`.
fn symmetric(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / BigInt::from(2);
    Poly::from_coeffs(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn modpoly_to_int(f: &ModPoly) -> IntPoly {
    Poly::from_coeffs(f.coeffs().iter().map(|&c| BigInt::from(c)).collect())
}

/// One quadratic lift step: from modulus m to m^2 (then callers may
/// truncate).  Requires `target = a*b`, `s*a + t*b = 1` mod m, `b` monic,
/// `lc(a)` equal to `lc(target)` as integers.  Returns the refreshed
/// quadruple with the same shape mod m^2.
fn hensel_step(
    target: &IntPoly,
    a: &IntPoly,
    b: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let m2 = m * m;
    let e = pmod(&(target - &(a * b)), &m2);
    let (q, r) = pmod_divrem(&pmod_mul(s, &e, &m2), b, &m2);
    let bstar = pmod(&(b + &r), &m2);
    let mut astar = pmod(&(&(a + &pmod_mul(t, &e, &m2)) + &pmod_mul(&q, a, &m2)), &m2);
    // the correction has degree below deg(a) mod m^2, so the leading
    // coefficient can be pinned to the exact integer lc(target)
    debug_assert_eq!(astar.deg(), a.deg());
    let mut coeffs = astar.coeffs().to_vec();
    *coeffs.last_mut().unwrap() = target.lc().clone();
    astar = Poly::from_coeffs(coeffs);

    let bb = pmod(&(&(&pmod_mul(s, &astar, &m2) + &pmod_mul(t, &bstar, &m2)) - &IntPoly::one()), &m2);
    let (c, d) = pmod_divrem(&pmod_mul(s, &bb, &m2), &bstar, &m2);
    let sstar = pmod(&(s - &d), &m2);
    let tstar = pmod(&(&(t - &pmod_mul(t, &bb, &m2)) - &pmod_mul(&c, &astar, &m2)), &m2);
    debug_assert!(pmod(&(target - &(&astar * &bstar)), &m2).is_zero());
    debug_assert!(pmod(
        &(&(&pmod_mul(&sstar, &astar, &m2) + &pmod_mul(&tstar, &bstar, &m2)) - &IntPoly::one()),
        &m2
    )
    .is_zero());
    (astar, bstar, sstar, tstar)
}

fn modpoly_ext_gcd(a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly, ModPoly) {
    let p = a.modulus();
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = ModPoly::one(p);
    let mut s1 = ModPoly::zero(p);
    let mut t0 = ModPoly::zero(p);
    let mut t1 = ModPoly::one(p);
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let inv = modp::invmod(r0.lc(), p);
    (r0.scale(inv), s0.scale(inv), t0.scale(inv))
}

/// Lift `target = lc(target) * prod(facs)` from mod p to mod p^k along a
/// balanced factor tree; returns monic factors mod p^k.
fn lift_tree(target: &IntPoly, facs: &[ModPoly], p: u64, pk: &BigInt) -> Result<Vec<IntPoly>> {
    if facs.len() == 1 {
        let lc_inv = target
            .lc()
            .modinv(pk)
            .ok_or_else(|| Error::Internal("leading coefficient not invertible in lift".into()))?;
        return Ok(vec![pmod(&target.scale(&lc_inv), pk)]);
    }
    let mid = facs.len() / 2;
    let (left, right) = facs.split_at(mid);
    let mut a0 = ModPoly::new(p, vec![(target.lc().mod_floor(&BigInt::from(p)))
        .try_into()
        .map_err(|_| Error::Internal("lc residue out of range".into()))?]);
    for f in left {
        a0 = a0.mul(f);
    }
    let mut b0 = ModPoly::one(p);
    for f in right {
        b0 = b0.mul(f);
    }
    let (g, s0, t0) = modpoly_ext_gcd(&a0, &b0);
    if g.degree() != Some(0) {
        return Err(Error::FactorsNotCoprime { p });
    }
    let mut a = modpoly_to_int(&a0);
    {
        // pin the exact integer leading coefficient
        let mut coeffs = a.coeffs().to_vec();
        *coeffs.last_mut().unwrap() = target.lc().clone();
        a = Poly::from_coeffs(coeffs);
    }
    let mut b = modpoly_to_int(&b0);
    let mut s = modpoly_to_int(&s0);
    let mut t = modpoly_to_int(&t0);
    let mut m = BigInt::from(p);
    while &m < pk {
        let (a2, b2, s2, t2) = hensel_step(target, &a, &b, &s, &t, &m);
        m = &m * &m;
        if &m >= pk {
            a = pmod(&a2, pk);
            {
                let mut coeffs = a.coeffs().to_vec();
                *coeffs.last_mut().unwrap() = target.lc().clone();
                a = Poly::from_coeffs(coeffs);
            }
            b = pmod(&b2, pk);
            s = pmod(&s2, pk);
            t = pmod(&t2, pk);
        } else {
            a = a2;
            b = b2;
            s = s2;
            t = t2;
        }
    }
    let mut out = lift_tree(&a, left, p, pk)?;
    out.extend(lift_tree(&b, right, p, pk)?);
    Ok(out)
}

/// Hensel lifting of a complete monic factorization mod p of a squarefree
/// integer polynomial to mod p^k.
///
/// Requires `p` prime to `lc(f)`, `f` squarefree mod p, and
/// `f = lc(f) * prod(factors)` mod p with monic, pairwise coprime factors.
/// Returns `(p^k, lifted factors)`: monic mod p^k, reducing to the inputs
/// mod p, with `f = lc(f) * prod(lifted)` mod p^k.
pub fn hensel_lift(f: &IntPoly, factors: &[ModPoly], k: u32) -> Result<(BigInt, Vec<IntPoly>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if factors.is_empty() || k == 0 {
        return Err(Error::Internal("hensel lift needs factors and k >= 1".into()));
    }
    let p = factors[0].modulus();
    for fac in factors {
        if fac.modulus() != p || fac.is_zero() || fac.lc() != 1 {
            return Err(Error::Internal("hensel lift factors must be monic with one shared modulus".into()));
        }
    }
    let fbar = modp::reduce_int_poly(f, p);
    if fbar.degree() != f.degree() {
        return Err(Error::BadReduction { p });
    }
    let mut prod = ModPoly::new(p, vec![fbar.lc()]);
    for fac in factors {
        prod = prod.mul(fac);
    }
    if prod != fbar {
        return Err(Error::Internal("inputs are not a factorization of f mod p".into()));
    }
    if fbar.gcd(&fbar.derivative()).deg() > 0 {
        return Err(Error::Internal("f is not squarefree mod p".into()));
    }
    let pk = num_traits::pow::pow(BigInt::from(p), k as usize);
    let lifted = lift_tree(f, factors, p, &pk)?;
    Ok((pk, lifted))
}

/// Subset-sum closure of a degree multiset: which total degrees a product
/// of modular factors can have.
fn degree_sums(degrees: &[usize], n: usize) -> Vec<bool> {
    let mut dp = vec![false; n + 1];
    dp[0] = true;
    for &d in degrees {
        for i in (0..=n.saturating_sub(d)).rev() {
            if dp[i] {
                dp[i + d] = true;
            }
        }
    }
    dp
}

struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        if k == 0 {
            self.done = true;
            return Some(out);
        }
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] + 1 <= self.n - (k - i) {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Exact division test over Z; `div` primitive, so an exact rational
/// quotient of integer polynomials is integral.
fn int_divides(g: &IntPoly, div: &IntPoly) -> Option<IntPoly> {
    let (q, r) = int_to_rat(g).divrem(&int_to_rat(div));
    if !r.is_zero() {
        return None;
    }
    let mut out = Vec::with_capacity(q.coeffs().len());
    for c in q.coeffs() {
        if !c.is_integer() {
            return None;
        }
        out.push(c.numer().clone());
    }
    Some(Poly::from_coeffs(out))
}

/// Coefficient bound: any factor of `g` (over Z, with leading coefficient
/// dividing `lc(g)`) has max-norm at most `2^n * sqrt(n+1) * H(g) * |lc(g)|`.
fn factor_coeff_bound(g: &IntPoly) -> BigInt {
    let n = g.deg();
    let height = g
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let sqrt_np1 = BigInt::from(((n as u64) + 1).isqrt() + 1);
    (BigInt::one() << n) * sqrt_np1 * height * g.lc().abs()
}

/// How many good primes contribute degree information before recombination.
const DEGREE_SAMPLE_PRIMES: usize = 7;
/// How many of those are candidates for the lifting prime.
const LIFT_CANDIDATE_PRIMES: usize = 5;

/// Factor a primitive squarefree integer polynomial with positive leading
/// coefficient into primitive irreducible integer factors.
fn zassenhaus(g: &IntPoly) -> Result<Vec<IntPoly>> {
    let n = g.deg();
    if n <= 1 {
        return Ok(vec![g.clone()]);
    }
    // sample good primes: odd, not dividing lc, keeping the input squarefree
    let mut good: Vec<(u64, ModPoly, Vec<usize>)> = Vec::new();
    let mut scanned = 0usize;
    for p in modp::Primes::from(3) {
        scanned += 1;
        if scanned > 10_000 {
            return Err(Error::PrimeBudgetExhausted { scanned });
        }
        if (g.lc() % BigInt::from(p)).is_zero() {
            continue;
        }
        let gbar = modp::reduce_int_poly(g, p).monic();
        if gbar.gcd(&gbar.derivative()).deg() > 0 {
            continue;
        }
        let degs = modp::factor_degrees(&gbar);
        good.push((p, gbar, degs));
        if good.len() >= DEGREE_SAMPLE_PRIMES {
            break;
        }
    }
    // viable factor degrees: intersection of subset sums across primes
    let mut viable = vec![true; n + 1];
    for (_, _, degs) in &good {
        let sums = degree_sums(degs, n);
        for i in 0..=n {
            viable[i] = viable[i] && sums[i];
        }
    }
    if (1..n).all(|i| !viable[i]) {
        return Ok(vec![g.clone()]);
    }
    // the lifting prime: fewest modular factors among the first candidates
    let (p, gbar, degs) = good
        .iter()
        .take(LIFT_CANDIDATE_PRIMES)
        .min_by_key(|(_, _, degs)| degs.len())
        .expect("at least one good prime")
        .clone();
    if degs.len() == 1 {
        return Ok(vec![g.clone()]);
    }
    let (_, modular) = modp::factor_mod_p(&gbar);
    let modular: Vec<ModPoly> = modular.into_iter().map(|(f, _)| f).collect();

    let bound = factor_coeff_bound(g) * BigInt::from(2);
    let mut k = 1u32;
    let mut pk = BigInt::from(p);
    while pk <= bound {
        pk = pk * BigInt::from(p);
        k += 1;
    }
    let (pk, lifted) = hensel_lift(g, &modular, k)?;

    let mut avail = lifted;
    let mut gg = g.clone();
    let mut result: Vec<IntPoly> = Vec::new();
    let mut size = 1usize;
    'sizes: while 2 * size <= avail.len() {
        let mut iter = Combinations::new(avail.len(), size);
        while let Some(combo) = iter.next() {
            let dsum: usize = combo.iter().map(|&i| avail[i].deg()).sum();
            if dsum > gg.deg() || !viable[dsum] || !viable[gg.deg() - dsum] {
                continue;
            }
            // trailing-coefficient divisibility prune
            if !gg.coeff(0).is_zero() {
                let mut t0 = gg.lc().mod_floor(&pk);
                for &i in &combo {
                    t0 = (t0 * avail[i].coeff(0)).mod_floor(&pk);
                }
                let half = &pk / BigInt::from(2);
                if t0 > half {
                    t0 -= &pk;
                }
                if !t0.is_zero() && !(gg.lc() * gg.coeff(0)).is_multiple_of(&t0) {
                    continue;
                }
            }
            let mut cand = IntPoly::constant(gg.lc().clone());
            for &i in &combo {
                cand = pmod_mul(&cand, &avail[i], &pk);
            }
            cand = symmetric(&cand, &pk);
            let (_, cand) = int_primitive_part(&cand);
            if let Some(quot) = int_divides(&gg, &cand) {
                result.push(cand);
                let (_, qq) = int_primitive_part(&quot);
                gg = qq;
                let mut remaining = Vec::with_capacity(avail.len() - size);
                for (i, f) in avail.into_iter().enumerate() {
                    if !combo.contains(&i) {
                        remaining.push(f);
                    }
                }
                avail = remaining;
                continue 'sizes;
            }
        }
        size += 1;
    }
    if gg.deg() > 0 {
        result.push(gg);
    }
    Ok(result)
}

/// Complete factorization over Q.
pub fn factor_q(f: &RatPoly) -> Result<FactorList> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.lc().clone();
    if f.deg() == 0 {
        return Ok(FactorList { unit, factors: Vec::new() });
    }
    let mut factors: Vec<(RatPoly, usize)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&f.monic())? {
        let (_, prim) = primitive_integer_form(&part);
        for fac in zassenhaus(&prim)? {
            factors.push((int_to_rat(&fac).monic(), mult));
        }
    }
    factors.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    let out = FactorList { unit, factors };
    debug_assert_eq!(out.product(), *f);
    Ok(out)
}

/// Irreducibility over Q.  Constants are units, hence not irreducible.
/// Fast paths: a prime witness with an irreducible reduction, and the
/// multi-prime degree intersection; the full factorization decides the
/// rest.
pub fn is_irreducible_q(f: &RatPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(false);
    }
    if f.deg() == 1 {
        return Ok(true);
    }
    let (_, prim) = primitive_integer_form(f);
    let df = prim.derivative();
    let g = crate::poly::rational::poly_gcd(&int_to_rat(&prim), &int_to_rat(&df));
    if g.deg() > 0 {
        return Ok(false);
    }
    // prime witness: irreducible mod any good prime settles it
    let mut checked = 0usize;
    for p in modp::Primes::from(3) {
        if checked >= 3 {
            break;
        }
        if (prim.lc() % BigInt::from(p)).is_zero() {
            continue;
        }
        let fbar = modp::reduce_int_poly(&prim, p).monic();
        if fbar.gcd(&fbar.derivative()).deg() > 0 {
            continue;
        }
        checked += 1;
        if modp::is_irreducible_mod_p(&fbar) {
            return Ok(true);
        }
    }
    let fl = factor_q(f)?;
    Ok(fl.factors.len() == 1 && fl.factors[0].1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modp::SplitMix;
    use crate::{rat, ratio, ratpoly};

    #[test]
    fn combinations_enumerate() {
        let all: Vec<Vec<usize>> = Combinations::new(4, 2).collect();
        assert_eq!(all, vec![
            vec![0, 1], vec![0, 2], vec![0, 3],
            vec![1, 2], vec![1, 3], vec![2, 3],
        ]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn hensel_lift_x4_minus_1() {
        // x^4 - 1 mod 3 = (x+1)(x+2)(x^2+1)
        let f = crate::intpoly(&[-1, 0, 0, 0, 1]);
        let factors = vec![
            ModPoly::new(3, vec![1, 1]),
            ModPoly::new(3, vec![2, 1]),
            ModPoly::new(3, vec![1, 0, 1]),
        ];
        let (pk, lifted) = hensel_lift(&f, &factors, 4).unwrap();
        assert_eq!(pk, BigInt::from(81));
        assert_eq!(lifted.len(), 3);
        let mut prod = IntPoly::one();
        for (l, orig) in lifted.iter().zip(&factors) {
            assert!(l.lc().is_one());
            assert_eq!(&modp::reduce_int_poly(l, 3), orig);
            prod = pmod_mul(&prod, l, &pk);
        }
        assert_eq!(prod, pmod(&f, &pk));
    }

    #[test]
    fn hensel_lift_non_monic() {
        // 6x^2 + 5x + 1 = (2x+1)(3x+1); mod 5 the monic split is
        // (x + 3)(x + 2) after dividing by lc = 6 = 1 mod 5... work it out:
        // 6x^2+5x+1 = 6(x^2) + 5x + 1; mod 5: x^2 + 1 = (x+2)(x+3).
        let f = crate::intpoly(&[1, 5, 6]);
        let factors = vec![ModPoly::new(5, vec![2, 1]), ModPoly::new(5, vec![3, 1])];
        let (pk, lifted) = hensel_lift(&f, &factors, 3).unwrap();
        let mut prod = IntPoly::constant(f.lc().clone());
        for l in &lifted {
            prod = pmod_mul(&prod, l, &pk);
        }
        assert_eq!(prod, pmod(&f, &pk));
        // the symmetric representatives recover 2x+1 and 3x+1 up to scaling:
        // lc * (monic factors) recombines to the true factors
        let c = symmetric(&pmod_mul(&IntPoly::constant(f.lc().clone()), &lifted[0], &pk), &pk);
        let (_, c) = int_primitive_part(&c);
        assert!(c == crate::intpoly(&[1, 2]) || c == crate::intpoly(&[1, 3]));
    }

    #[test]
    fn hensel_rejects_bad_input() {
        let f = crate::intpoly(&[-1, 0, 0, 0, 1]);
        let wrong = vec![ModPoly::new(3, vec![1, 1]), ModPoly::new(3, vec![1, 1]),
                         ModPoly::new(3, vec![1, 0, 1])];
        assert!(hensel_lift(&f, &wrong, 2).is_err());
    }

    #[test]
    fn factor_products_of_linears() {
        // prod (x - i) for i = 1..6
        let mut f = RatPoly::one();
        for i in 1..=6 {
            f = &f * &ratpoly(&[-i, 1]);
        }
        let fl = factor_q(&f).unwrap();
        assert_eq!(fl.unit, rat(1));
        assert_eq!(fl.factors.len(), 6);
        // canonical order compares coefficients, so x - 6 sorts first
        for (i, (fac, m)) in fl.factors.iter().enumerate() {
            assert_eq!(*m, 1);
            assert_eq!(*fac, ratpoly(&[i as i64 - 6, 1]));
        }
    }

    #[test]
    fn factor_with_multiplicities_and_unit() {
        // 3 * (x-1)^2 * (x^2+1)
        let f = &(&ratpoly(&[3]) * &(&ratpoly(&[-1, 1]) * &ratpoly(&[-1, 1]))) * &ratpoly(&[1, 0, 1]);
        let fl = factor_q(&f).unwrap();
        assert_eq!(fl.unit, rat(3));
        assert_eq!(fl.factors, vec![(ratpoly(&[-1, 1]), 2), (ratpoly(&[1, 0, 1]), 1)]);
        assert_eq!(fl.product(), f);
    }

    #[test]
    fn factor_classic_splittings() {
        // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2)
        let fl = factor_q(&ratpoly(&[4, 0, 0, 0, 1])).unwrap();
        assert_eq!(fl.factors, vec![
            (ratpoly(&[2, -2, 1]), 1),
            (ratpoly(&[2, 2, 1]), 1),
        ]);
        // x^6 - 1 = (x-1)(x+1)(x^2-x+1)(x^2+x+1)
        let fl = factor_q(&ratpoly(&[-1, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(fl.factors, vec![
            (ratpoly(&[-1, 1]), 1),
            (ratpoly(&[1, 1]), 1),
            (ratpoly(&[1, -1, 1]), 1),
            (ratpoly(&[1, 1, 1]), 1),
        ]);
    }

    #[test]
    fn irreducibility_workhorse_cases() {
        assert!(is_irreducible_q(&ratpoly(&[-1, 1, 0, -2, 1])).unwrap()); // x^4 - 2x^3 + x - 1
        assert!(is_irreducible_q(&ratpoly(&[-2, 0, 0, 1])).unwrap()); // x^3 - 2
        assert!(is_irreducible_q(&ratpoly(&[-3, -3, 0, 0, 0, 1])).unwrap()); // x^5 - 3x - 3
        assert!(is_irreducible_q(&ratpoly(&[1, 1, 1, 1, 1])).unwrap()); // cyclotomic, index 5
        assert!(is_irreducible_q(&ratpoly(&[-1, -1, 0, 0, 1])).unwrap()); // x^4 - x - 1
        assert!(!is_irreducible_q(&ratpoly(&[-1, 0, 0, 0, 1])).unwrap()); // x^4 - 1
        assert!(!is_irreducible_q(&ratpoly(&[4, 0, 0, 0, 1])).unwrap()); // x^4 + 4
        assert!(!is_irreducible_q(&ratpoly(&[1, 2, 1])).unwrap()); // (x+1)^2
        assert!(!is_irreducible_q(&ratpoly(&[7])).unwrap()); // unit
        assert!(is_irreducible_q(&ratpoly(&[4, 2])).unwrap()); // 2x + 4
    }

    #[test]
    fn irreducible_but_reducible_mod_every_prime() {
        // x^4 - 10x^2 + 1: minimal polynomial of sqrt(2) + sqrt(3); its
        // reductions factor mod every prime, so the prime witness can
        // never certify and recombination must run.
        assert!(is_irreducible_q(&ratpoly(&[1, 0, -10, 0, 1])).unwrap());
    }

    #[test]
    fn factor_rational_coefficients() {
        // (x/2 - 1/3)(x + 5) scaled: unit carries the leading coefficient
        let f = &RatPoly::from_coeffs(vec![ratio(-1, 3), ratio(1, 2)]) * &ratpoly(&[5, 1]);
        let fl = factor_q(&f).unwrap();
        assert_eq!(fl.unit, ratio(1, 2));
        assert_eq!(fl.factors, vec![
            (RatPoly::from_coeffs(vec![ratio(-2, 3), rat(1)]), 1),
            (ratpoly(&[5, 1]), 1),
        ]);
        assert_eq!(fl.product(), f);
    }

    #[test]
    fn random_product_round_trips() {
        let mut rng = SplitMix::new(0x5EED_0001);
        for case in 0..25 {
            // 2 to 4 random factors with small coefficients, total degree <= 12
            let nf = 2 + (rng.next_u64() % 3) as usize;
            let mut f = RatPoly::one();
            let mut used = 0usize;
            for _ in 0..nf {
                let d = 1 + (rng.next_u64() % 3) as usize;
                if used + d > 12 {
                    break;
                }
                used += d;
                let mut coeffs: Vec<i64> = (0..d).map(|_| (rng.next_u64() % 11) as i64 - 5).collect();
                coeffs.push(1 + (rng.next_u64() % 3) as i64);
                f = &f * &crate::ratpoly(&coeffs);
            }
            if f.deg() == 0 {
                continue;
            }
            let fl = factor_q(&f).unwrap();
            assert_eq!(fl.product(), f, "case {} round trip failed for {}", case, f);
            for (fac, _) in &fl.factors {
                assert!(is_irreducible_q(fac).unwrap(), "case {}: {} not irreducible", case, fac);
            }
        }
    }
}
