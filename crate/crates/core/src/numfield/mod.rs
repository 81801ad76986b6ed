//! Number fields `K = Q[x]/(m)` presented by a monic irreducible minimal
//! polynomial, their elements as coordinate vectors over the power basis,
//! polynomial arithmetic over `K`, factorization over `K` by the norm map,
//! and modular upper bounds on the number of roots a rational polynomial
//! has in `K`.
//!
//! The field is the context object: elements are plain coordinate vectors
//! and every operation goes through the field that owns them.

pub mod tower;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factor::{factor_q, is_irreducible_q};
use crate::linalg;
use crate::modp::{self, Primes};
use crate::poly::rational::{eval_point, extended_gcd, lagrange_interpolate, poly_gcd, resultant};
use crate::poly::Poly;
use crate::{Rat, RatPoly};

/// An element of a number field: coordinates over the power basis
/// `1, theta, ..., theta^(n-1)` of its owning [`NumberField`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NfElem {
    coords: Vec<Rat>,
}

impl NfElem {
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The rational value when the element lies in the prime field.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coords.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coords.first().cloned().unwrap_or_else(Rat::zero))
        } else {
            None
        }
    }
}

/// `Q[x]/(m)` for a monic irreducible `m`.
#[derive(Clone, PartialEq, Debug)]
pub struct NumberField {
    minpoly: RatPoly,
}

impl NumberField {
    /// Construct after verifying irreducibility; the defining polynomial is
    /// normalized monic.
    pub fn new(m: &RatPoly) -> Result<Self> {
        if m.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if m.deg() == 0 {
            return Err(Error::DegreeOutOfRange {
                found: 0,
                why: "a number field needs a defining polynomial of degree >= 1".into(),
            });
        }
        if !is_irreducible_q(m)? {
            return Err(Error::NotIrreducible { poly: m.to_string() });
        }
        Ok(NumberField { minpoly: m.monic() })
    }

    /// Construct from a polynomial already known to be irreducible
    /// (a minimal polynomial produced by linear algebra, for instance).
    pub(crate) fn new_unchecked(m: RatPoly) -> Self {
        debug_assert!(!m.is_zero() && m.deg() >= 1);
        NumberField { minpoly: m.monic() }
    }

    pub fn minpoly(&self) -> &RatPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    fn check(&self, e: &NfElem) -> Result<()> {
        if e.coords.len() != self.degree() {
            return Err(Error::ElementFieldMismatch {
                expected: self.degree(),
                got: e.coords.len(),
            });
        }
        Ok(())
    }

    /// Element from explicit coordinates; the public, validated entry.
    pub fn element(&self, coords: Vec<Rat>) -> Result<NfElem> {
        if coords.len() != self.degree() {
            return Err(Error::ElementFieldMismatch {
                expected: self.degree(),
                got: coords.len(),
            });
        }
        Ok(NfElem { coords })
    }

    pub fn zero(&self) -> NfElem {
        NfElem { coords: vec![Rat::zero(); self.degree()] }
    }

    pub fn one(&self) -> NfElem {
        self.from_rat(Rat::one())
    }

    pub fn from_rat(&self, r: Rat) -> NfElem {
        let mut coords = vec![Rat::zero(); self.degree()];
        coords[0] = r;
        NfElem { coords }
    }

    pub fn generator(&self) -> NfElem {
        let mut coords = vec![Rat::zero(); self.degree()];
        if self.degree() > 1 {
            coords[1] = Rat::one();
        } else {
            // degree-one field: theta is the rational root of the minpoly
            coords[0] = -self.minpoly.coeff(0);
        }
        NfElem { coords }
    }

    /// Reduce a rational polynomial mod the minimal polynomial.
    pub fn from_poly(&self, f: &RatPoly) -> NfElem {
        let r = f.divrem(&self.minpoly).1;
        let mut coords = vec![Rat::zero(); self.degree()];
        for i in 0..r.coeffs().len() {
            coords[i] = r.coeff(i);
        }
        NfElem { coords }
    }

    pub fn to_poly(&self, e: &NfElem) -> RatPoly {
        Poly::from_coeffs(e.coords.clone())
    }

    pub fn add(&self, a: &NfElem, b: &NfElem) -> NfElem {
        debug_assert!(self.check(a).is_ok() && self.check(b).is_ok());
        NfElem {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x.clone() + y.clone())
                .collect(),
        }
    }

    pub fn sub(&self, a: &NfElem, b: &NfElem) -> NfElem {
        debug_assert!(self.check(a).is_ok() && self.check(b).is_ok());
        NfElem {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x.clone() - y.clone())
                .collect(),
        }
    }

    pub fn neg(&self, a: &NfElem) -> NfElem {
        NfElem { coords: a.coords.iter().map(|x| -x.clone()).collect() }
    }

    pub fn scale(&self, a: &NfElem, r: &Rat) -> NfElem {
        NfElem { coords: a.coords.iter().map(|x| x.clone() * r.clone()).collect() }
    }

    pub fn mul(&self, a: &NfElem, b: &NfElem) -> NfElem {
        debug_assert!(self.check(a).is_ok() && self.check(b).is_ok());
        let pa = self.to_poly(a);
        let pb = self.to_poly(b);
        self.from_poly(&(&pa * &pb))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the minimal polynomial.
    pub fn inv(&self, a: &NfElem) -> Result<NfElem> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let pa = self.to_poly(a);
        let (g, s, _) = extended_gcd(&pa, &self.minpoly);
        if g.deg() != 0 {
            // impossible over an irreducible modulus
            return Err(Error::Internal("gcd with minimal polynomial not trivial".into()));
        }
        Ok(self.from_poly(&s))
    }

    pub fn div(&self, a: &NfElem, b: &NfElem) -> Result<NfElem> {
        let bi = self.inv(b)?;
        Ok(self.mul(a, &bi))
    }

    pub fn pow(&self, a: &NfElem, mut e: usize) -> NfElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Checked arithmetic used by external callers: validates that both
    /// operands have this field's coordinate length.
    pub fn checked_add(&self, a: &NfElem, b: &NfElem) -> Result<NfElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_sub(&self, a: &NfElem, b: &NfElem) -> Result<NfElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub(a, b))
    }

    pub fn checked_mul(&self, a: &NfElem, b: &NfElem) -> Result<NfElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn checked_div(&self, a: &NfElem, b: &NfElem) -> Result<NfElem> {
        self.check(a)?;
        self.check(b)?;
        self.div(a, b)
    }

    /// Evaluate a rational polynomial at a field element.
    pub fn eval_poly(&self, f: &RatPoly, at: &NfElem) -> NfElem {
        let mut acc = self.zero();
        for c in f.coeffs().iter().rev() {
            acc = self.mul(&acc, at);
            acc = self.add(&acc, &self.from_rat(c.clone()));
        }
        acc
    }

    /// Minimal polynomial of an element over Q, by incremental linear
    /// algebra on its powers.  The degree divides the field degree.
    pub fn minpoly_of(&self, v: &NfElem) -> Result<RatPoly> {
        self.check(v)?;
        let mut cur = self.one();
        let dim = self.degree();
        let mp = linalg::minpoly_from_powers(dim, || {
            let coords = cur.coords.clone();
            cur = self.mul(&cur, v);
            coords
        });
        debug_assert!(self.eval_poly(&mp, v).is_zero());
        Ok(mp)
    }
}

/// Express `value` as a polynomial in `gen_image`, where `gen_image`
/// generates a subfield isomorphic to `Q[x]/(sub_minpoly)` inside
/// `ambient`.  Returns the coordinates over the subfield power basis, or
/// `None` when `value` lies outside the subfield.  The claimed embedding is
/// verified first.
pub fn express_in_field(
    ambient: &NumberField,
    gen_image: &NfElem,
    sub_minpoly: &RatPoly,
    value: &NfElem,
) -> Result<Option<Vec<Rat>>> {
    if sub_minpoly.is_zero() || sub_minpoly.deg() == 0 {
        return Err(Error::DegreeOutOfRange {
            found: 0,
            why: "subfield minimal polynomial must have degree >= 1".into(),
        });
    }
    if !ambient.eval_poly(&sub_minpoly.monic(), gen_image).is_zero() {
        return Err(Error::InconsistentEmbedding);
    }
    let d = sub_minpoly.deg();
    let n = ambient.degree();
    // columns: powers of gen_image
    let mut cols = Vec::with_capacity(d);
    let mut cur = ambient.one();
    for _ in 0..d {
        cols.push(cur.coords().to_vec());
        cur = ambient.mul(&cur, gen_image);
    }
    let a: Vec<Vec<Rat>> = (0..n)
        .map(|row| (0..d).map(|col| cols[col][row].clone()).collect())
        .collect();
    Ok(linalg::solve(&a, value.coords()))
}

/// Polynomial with coefficients in a number field, ascending order, no
/// trailing zeros.  All operations take the owning field as context.
#[derive(Clone, PartialEq, Debug)]
pub struct KPoly {
    coeffs: Vec<NfElem>,
}

impl KPoly {
    pub fn coeffs(&self) -> &[NfElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn lc(&self) -> &NfElem {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }
}

impl NumberField {
    pub fn kp_from_coeffs(&self, coeffs: Vec<NfElem>) -> KPoly {
        let mut c = coeffs;
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        KPoly { coeffs: c }
    }

    pub fn kp_zero(&self) -> KPoly {
        KPoly { coeffs: Vec::new() }
    }

    pub fn kp_one(&self) -> KPoly {
        KPoly { coeffs: vec![self.one()] }
    }

    pub fn kp_x(&self) -> KPoly {
        KPoly { coeffs: vec![self.zero(), self.one()] }
    }

    /// Embed a rational polynomial.
    pub fn kp_embed(&self, f: &RatPoly) -> KPoly {
        self.kp_from_coeffs(f.coeffs().iter().map(|c| self.from_rat(c.clone())).collect())
    }

    pub fn kp_coeff(&self, f: &KPoly, i: usize) -> NfElem {
        f.coeffs.get(i).cloned().unwrap_or_else(|| self.zero())
    }

    pub fn kp_add(&self, a: &KPoly, b: &KPoly) -> KPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        self.kp_from_coeffs(
            (0..n)
                .map(|i| self.add(&self.kp_coeff(a, i), &self.kp_coeff(b, i)))
                .collect(),
        )
    }

    pub fn kp_sub(&self, a: &KPoly, b: &KPoly) -> KPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        self.kp_from_coeffs(
            (0..n)
                .map(|i| self.sub(&self.kp_coeff(a, i), &self.kp_coeff(b, i)))
                .collect(),
        )
    }

    pub fn kp_mul(&self, a: &KPoly, b: &KPoly) -> KPoly {
        if a.is_zero() || b.is_zero() {
            return self.kp_zero();
        }
        let mut v = vec![self.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                let t = self.mul(x, y);
                v[i + j] = self.add(&v[i + j], &t);
            }
        }
        self.kp_from_coeffs(v)
    }

    pub fn kp_scale(&self, a: &KPoly, k: &NfElem) -> KPoly {
        self.kp_from_coeffs(a.coeffs.iter().map(|x| self.mul(x, k)).collect())
    }

    pub fn kp_divrem(&self, a: &KPoly, div: &KPoly) -> Result<(KPoly, KPoly)> {
        if div.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = div.deg();
        if a.is_zero() || a.deg() < dd {
            return Ok((self.kp_zero(), a.clone()));
        }
        let inv_lc = self.inv(div.lc())?;
        let mut rem = a.coeffs.clone();
        let mut quot = vec![self.zero(); a.deg() - dd + 1];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = self.mul(&rem[i], &inv_lc);
            quot[i - dd] = q.clone();
            for (j, dc) in div.coeffs.iter().enumerate() {
                let t = self.mul(&q, dc);
                rem[i - dd + j] = self.sub(&rem[i - dd + j], &t);
            }
        }
        rem.truncate(dd);
        Ok((self.kp_from_coeffs(quot), self.kp_from_coeffs(rem)))
    }

    pub fn kp_monic(&self, a: &KPoly) -> Result<KPoly> {
        if a.is_zero() {
            return Ok(self.kp_zero());
        }
        let inv = self.inv(a.lc())?;
        Ok(self.kp_scale(a, &inv))
    }

    pub fn kp_gcd(&self, a: &KPoly, b: &KPoly) -> Result<KPoly> {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = self.kp_divrem(&x, &y)?;
            x = std::mem::replace(&mut y, r);
        }
        self.kp_monic(&x)
    }

    pub fn kp_derivative(&self, a: &KPoly) -> KPoly {
        if a.coeffs.len() <= 1 {
            return self.kp_zero();
        }
        self.kp_from_coeffs(
            a.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.scale(c, &crate::rat(i as i64)))
                .collect(),
        )
    }

    pub fn kp_eval(&self, a: &KPoly, at: &NfElem) -> NfElem {
        let mut acc = self.zero();
        for c in a.coeffs.iter().rev() {
            acc = self.mul(&acc, at);
            acc = self.add(&acc, c);
        }
        acc
    }

    /// Taylor shift: `f(x + t)` for a field element `t`.
    pub fn kp_shift(&self, f: &KPoly, t: &NfElem) -> KPoly {
        let lin = self.kp_from_coeffs(vec![t.clone(), self.one()]);
        let mut acc = self.kp_zero();
        for c in f.coeffs.iter().rev() {
            acc = self.kp_mul(&acc, &lin);
            acc = self.kp_add(&acc, &self.kp_from_coeffs(vec![c.clone()]));
        }
        acc
    }

    pub fn kp_squarefree_part(&self, f: &KPoly) -> Result<KPoly> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let fm = self.kp_monic(f)?;
        if fm.deg() == 0 {
            return Ok(self.kp_one());
        }
        let g = self.kp_gcd(&fm, &self.kp_derivative(&fm))?;
        let (q, r) = self.kp_divrem(&fm, &g)?;
        debug_assert!(r.is_zero());
        self.kp_monic(&q)
    }
}

/// Deterministic order on polynomials over a field: degree, then
/// coordinates from the leading coefficient down.
pub(crate) fn kp_canonical_cmp(a: &KPoly, b: &KPoly) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let o = a.degree().cmp(&b.degree());
    if o != Ordering::Equal {
        return o;
    }
    for i in (0..a.coeffs.len()).rev() {
        let (x, y) = (&a.coeffs[i], &b.coeffs[i]);
        for (cx, cy) in x.coords().iter().zip(y.coords()) {
            let o = cx.cmp(cy);
            if o != Ordering::Equal {
                return o;
            }
        }
    }
    Ordering::Equal
}

/// Norm of a polynomial over `K` down to `Q[x]`: the product of the
/// conjugates `prod_sigma sigma(g)`, computed by specializing the variable
/// at `deg(m) * deg(g) + 1` rational points and interpolating; each
/// specialization is a univariate resultant against the minimal polynomial.
pub fn norm_poly(k: &NumberField, g: &KPoly) -> Result<RatPoly> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = k.degree();
    let dg = g.degree().unwrap_or(0);
    let target = n * dg;
    let mut points = Vec::with_capacity(target + 1);
    for i in 0..=target {
        let x0 = eval_point(i);
        // g(x0) as a polynomial in the generator variable y
        let mut acc = RatPoly::zero();
        for c in g.coeffs().iter().rev() {
            acc = &acc.scale(&x0) + &k.to_poly(c);
        }
        let val = resultant(k.minpoly(), &acc);
        points.push((x0, val));
    }
    Ok(lagrange_interpolate(&points))
}

/// Factorization over a number field by norms: squarefree part, a shift
/// making the norm squarefree, rational factorization of the norm, and
/// gcd pullbacks.  Factors are monic irreducible, sorted canonically, with
/// multiplicities against the input.
pub fn trager_factor(k: &NumberField, f: &KPoly) -> Result<Vec<(KPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(Vec::new());
    }
    let sf = k.kp_squarefree_part(f)?;
    let irreducibles = trager_squarefree(k, &sf)?;
    let mut out = Vec::with_capacity(irreducibles.len());
    for g in irreducibles {
        let mut mult = 0usize;
        let mut cur = f.clone();
        loop {
            let (q, r) = k.kp_divrem(&cur, &g)?;
            if !r.is_zero() {
                break;
            }
            mult += 1;
            cur = q;
            if cur.is_zero() || cur.deg() == 0 {
                break;
            }
        }
        debug_assert!(mult >= 1);
        out.push((g, mult));
    }
    out.sort_by(|a, b| kp_canonical_cmp(&a.0, &b.0));
    debug_assert_eq!(out.iter().map(|(g, m)| g.deg() * m).sum::<usize>(), f.deg());
    Ok(out)
}

fn trager_squarefree(k: &NumberField, fs: &KPoly) -> Result<Vec<KPoly>> {
    if fs.deg() == 0 {
        return Ok(Vec::new());
    }
    if fs.deg() == 1 {
        return Ok(vec![fs.clone()]);
    }
    let theta = k.generator();
    let mut shift_idx = 0usize;
    let (shift, shifted, norm) = loop {
        // shift sequence 0, 1, -1, 2, -2, ...
        let s = eval_point(shift_idx);
        shift_idx += 1;
        if shift_idx > 100 {
            return Err(Error::Internal("no squarefree norm among 100 shifts".into()));
        }
        let t = k.neg(&k.scale(&theta, &s));
        let g = k.kp_shift(fs, &t);
        let nrm = norm_poly(k, &g)?;
        let sq = poly_gcd(&nrm, &nrm.derivative());
        if sq.deg() == 0 {
            break (s, g, nrm);
        }
    };
    let fl = factor_q(&norm)?;
    let mut out = Vec::new();
    let tback = k.scale(&theta, &shift);
    for (nf, _) in &fl.factors {
        let g = k.kp_gcd(&shifted, &k.kp_embed(nf))?;
        debug_assert!(g.deg() >= 1, "norm factor must pull back nontrivially");
        out.push(k.kp_shift(&g, &tback));
    }
    debug_assert_eq!(out.iter().map(|g| g.deg()).sum::<usize>(), fs.deg());
    Ok(out)
}

/// Proof data for an upper bound on the number of roots in a field.
#[derive(Clone, Debug, PartialEq)]
pub struct RootBound {
    pub bound: usize,
    /// Primes that contributed; the certified bound is the minimum over
    /// all (prime, residue degree) pairs they provide.
    pub primes: Vec<u64>,
}

/// Certified upper bound for the number of roots of a squarefree rational
/// polynomial `f` in the field `K`.
///
/// For each good prime (both reductions defined, degrees preserved, both
/// reductions squarefree), every residue degree `e` of the factorization
/// of the minimal polynomial mod p embeds the roots of `f` in `K`
/// injectively into the roots of `f` mod p in `F_(p^e)`, so each Frobenius
/// count is an upper bound; the result is the minimum over `budget` good
/// primes.  Stops early when `stop_at` is reached, since the true count
/// cannot lie below a verified collection of distinct roots.
pub fn count_roots_upper_bound(
    f: &RatPoly,
    k: &NumberField,
    budget: usize,
    stop_at: Option<usize>,
    threads: usize,
) -> Result<RootBound> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if budget == 0 {
        return Err(Error::PrimeBudgetExhausted { scanned: 0 });
    }
    if f.deg() == 0 {
        return Ok(RootBound { bound: 0, primes: Vec::new() });
    }
    let m = k.minpoly();
    let mut good: Vec<(u64, modp::ModPoly, modp::ModPoly)> = Vec::new();
    let mut scanned = 0usize;
    for p in Primes::from(3) {
        scanned += 1;
        if scanned > 50_000 {
            break;
        }
        let Ok(mbar) = modp::reduce_rat_poly(m, p) else { continue };
        if mbar.degree() != Some(m.deg()) {
            continue;
        }
        if mbar.gcd(&mbar.derivative()).deg() > 0 {
            continue;
        }
        let Ok(fbar) = modp::reduce_rat_poly(f, p) else { continue };
        if fbar.degree() != Some(f.deg()) {
            continue;
        }
        let fbar = fbar.monic();
        if fbar.gcd(&fbar.derivative()).deg() > 0 {
            continue;
        }
        good.push((p, mbar.monic(), fbar));
        if good.len() >= budget {
            break;
        }
    }
    if good.is_empty() {
        return Err(Error::PrimeBudgetExhausted { scanned });
    }

    let eval = |(_p, mbar, fbar): &(u64, modp::ModPoly, modp::ModPoly)| -> usize {
        let mut best = usize::MAX;
        for (e, _) in modp::distinct_degree_factorization(mbar) {
            let c = modp::count_roots_fq(fbar, e);
            best = best.min(c);
        }
        best
    };

    let bounds: Vec<usize> = if threads > 1 && good.len() > 1 {
        let chunk = good.len().div_ceil(threads);
        let mut results = vec![0usize; good.len()];
        std::thread::scope(|scope| {
            for (slot, work) in results.chunks_mut(chunk).zip(good.chunks(chunk)) {
                scope.spawn(move || {
                    for (r, w) in slot.iter_mut().zip(work) {
                        *r = eval(w);
                    }
                });
            }
        });
        results
    } else {
        good.iter().map(eval).collect()
    };

    // apply early stopping in deterministic prime order
    let mut bound = usize::MAX;
    let mut primes = Vec::new();
    for ((p, _, _), b) in good.iter().zip(&bounds) {
        bound = bound.min(*b);
        primes.push(*p);
        if let Some(lo) = stop_at {
            if bound <= lo {
                break;
            }
        }
    }
    Ok(RootBound { bound, primes })
}
