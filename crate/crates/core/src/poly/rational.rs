//! Exact algorithms for polynomials over Q and Z: primitive forms, gcds by
//! primitive pseudo-remainder sequences, subresultant resultants,
//! discriminants, Yun squarefree decomposition, cyclotomic polynomials,
//! Lagrange interpolation, and the resultant route to the characteristic
//! polynomial of a sum of algebraic numbers.
//!
//! Resultant convention, fixed throughout the crate:
//! `Res(a, b) = lc(a)^deg(b) * prod b(alpha_i)` over the roots `alpha_i` of
//! `a`, equal to the determinant of the Sylvester matrix with the rows of
//! `a` on top.  Swapping arguments multiplies by `(-1)^(deg a * deg b)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::bareiss_det;
use crate::poly::Poly;
use crate::{IntPoly, Rat, RatPoly};

/// Write `f = c * P` with `P` a primitive integer polynomial with positive
/// leading coefficient and `c` rational.  Zero maps to `(0, 0)`.
pub fn primitive_integer_form(f: &RatPoly) -> (Rat, IntPoly) {
    if f.is_zero() {
        return (Rat::zero(), Poly::zero());
    }
    let mut den = BigInt::one();
    for c in f.coeffs() {
        den = den.lcm(c.denom());
    }
    let scaled: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let mut g = BigInt::zero();
    for c in &scaled {
        g = g.gcd(c);
    }
    let negate = scaled.last().unwrap().is_negative();
    if negate {
        g = -g;
    }
    let prim: Vec<BigInt> = scaled.iter().map(|c| c / &g).collect();
    (Rat::new(g, den), Poly::from_coeffs(prim))
}

/// Content (gcd of coefficients, signed to make the primitive part's
/// leading coefficient positive) and primitive part of an integer
/// polynomial.
pub fn int_primitive_part(f: &IntPoly) -> (BigInt, IntPoly) {
    if f.is_zero() {
        return (BigInt::zero(), Poly::zero());
    }
    let mut g = BigInt::zero();
    for c in f.coeffs() {
        g = g.gcd(c);
    }
    if f.lc().is_negative() {
        g = -g;
    }
    let prim: Vec<BigInt> = f.coeffs().iter().map(|c| c / &g).collect();
    (g, Poly::from_coeffs(prim))
}

pub fn int_to_rat(f: &IntPoly) -> RatPoly {
    Poly::from_coeffs(f.coeffs().iter().map(|c| Rat::from_integer(c.clone())).collect())
}

/// Pseudo-remainder: the `R` in `lc(b)^(deg a - deg b + 1) * a = Q*b + R`.
/// Requires `deg a >= deg b`, `b` nonzero.
fn int_pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.deg();
    let d = b.lc().clone();
    let mut r = a.clone();
    let mut scale_left = a.deg() - db + 1;
    while !r.is_zero() && r.deg() >= db {
        let k = r.deg() - db;
        let rl = r.lc().clone();
        r = &r.scale(&d) - &b.scale(&rl).mul_xk(k);
        scale_left -= 1;
        if r.is_zero() || r.deg() < db {
            break;
        }
    }
    // Remaining scalings keep the classical normalization exact.
    for _ in 0..scale_left {
        r = r.scale(&d);
    }
    r
}

/// Monic gcd over Q, computed by the primitive pseudo-remainder sequence
/// over Z to keep intermediate coefficients small.
pub fn poly_gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let (_, mut big) = primitive_integer_form(a);
    let (_, mut small) = primitive_integer_form(b);
    if big.deg() < small.deg() {
        std::mem::swap(&mut big, &mut small);
    }
    while !small.is_zero() {
        if small.deg() == 0 {
            return RatPoly::one();
        }
        let r = int_pseudo_rem(&big, &small);
        big = small;
        small = int_primitive_part(&r).1;
    }
    int_to_rat(&big).monic()
}

/// Extended Euclid over Q: returns monic `g = gcd(a, b)` and `(s, t)` with
/// `s*a + t*b = g`.  Intended for the modest degrees of minimal polynomials.
pub fn extended_gcd(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = RatPoly::one();
    let mut s1 = RatPoly::zero();
    let mut t0 = RatPoly::zero();
    let mut t1 = RatPoly::one();
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let inv = Rat::one() / r0.lc().clone();
    (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
}

/// Resultant of integer polynomials by the subresultant pseudo-remainder
/// sequence, with the sign tracked exactly.
pub fn int_resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    if a.deg() == 0 {
        return num_traits::pow::pow(a.lc().clone(), b.deg());
    }
    if b.deg() == 0 {
        return num_traits::pow::pow(b.lc().clone(), a.deg());
    }
    let mut s = 1i32;
    let (mut big, mut small);
    if a.deg() >= b.deg() {
        big = a.clone();
        small = b.clone();
    } else {
        big = b.clone();
        small = a.clone();
        if (a.deg() * b.deg()) % 2 == 1 {
            s = -s;
        }
    }
    let (ca, pa) = int_primitive_part(&big);
    let (cb, pb) = int_primitive_part(&small);
    // Res(ca*A, cb*B) = ca^deg(B) * cb^deg(A) * Res(A, B); the contents are
    // signed, which carries the sign normalization of the primitive parts.
    let t = num_traits::pow::pow(ca, small.deg()) * num_traits::pow::pow(cb, big.deg());
    big = pa;
    small = pb;
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = big.deg() - small.deg();
        if big.deg() % 2 == 1 && small.deg() % 2 == 1 {
            s = -s;
        }
        let r = int_pseudo_rem(&big, &small);
        big = small;
        // divide by g * h^delta, exact by the subresultant theory
        let divisor = &g * num_traits::pow::pow(h.clone(), delta);
        small = Poly::from_coeffs(r.coeffs().iter().map(|c| c / &divisor).collect());
        g = big.lc().clone();
        h = if delta == 0 {
            h
        } else {
            let gp = num_traits::pow::pow(g.clone(), delta);
            if delta == 1 {
                gp
            } else {
                &gp / num_traits::pow::pow(h.clone(), delta - 1)
            }
        };
        if small.is_zero() {
            return BigInt::zero();
        }
        if small.deg() == 0 {
            break;
        }
    }
    // here big is the last remainder of positive degree and small a constant
    let da = big.deg();
    let lb = num_traits::pow::pow(small.lc().clone(), da);
    let hfin = &lb / num_traits::pow::pow(h, da - 1);
    let r = t * hfin;
    if s < 0 { -r } else { r }
}

/// Resultant over Q under the crate convention.  Zero if either argument is
/// zero; two nonzero constants have resultant 1.
pub fn resultant(a: &RatPoly, b: &RatPoly) -> Rat {
    if a.is_zero() || b.is_zero() {
        return Rat::zero();
    }
    match (a.deg(), b.deg()) {
        (0, 0) => return Rat::one(),
        (0, db) => return num_traits::pow::pow(a.lc().clone(), db),
        (da, 0) => return num_traits::pow::pow(b.lc().clone(), da),
        _ => {}
    }
    let (ca, pa) = primitive_integer_form(a);
    let (cb, pb) = primitive_integer_form(b);
    let scale = num_traits::pow::pow(ca, b.deg()) * num_traits::pow::pow(cb, a.deg());
    scale * Rat::from_integer(int_resultant(&pa, &pb))
}

/// Resultant as the Bareiss determinant of the Sylvester matrix.  Slower
/// than [`resultant`]; kept as an independent cross-checking route.
pub fn sylvester_resultant(a: &RatPoly, b: &RatPoly) -> Rat {
    if a.is_zero() || b.is_zero() {
        return Rat::zero();
    }
    let (n, m) = (a.deg(), b.deg());
    if n == 0 && m == 0 {
        return Rat::one();
    }
    let (ca, pa) = primitive_integer_form(a);
    let (cb, pb) = primitive_integer_form(b);
    let size = n + m;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..m {
        for (k, i) in (0..=n).rev().enumerate() {
            mat[row][row + k] = pa.coeff(i);
        }
    }
    for row in 0..n {
        for (k, i) in (0..=m).rev().enumerate() {
            mat[m + row][row + k] = pb.coeff(i);
        }
    }
    let det = bareiss_det(mat);
    num_traits::pow::pow(ca, m) * num_traits::pow::pow(cb, n) * Rat::from_integer(det)
}

/// Discriminant `(-1)^(n(n-1)/2) * Res(f, f') / lc(f)` for `deg f >= 2`.
pub fn discriminant(f: &RatPoly) -> Result<Rat> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.deg();
    if n < 2 {
        return Err(Error::DiscriminantUndefined);
    }
    let r = resultant(f, &f.derivative());
    let signed = if (n * (n - 1) / 2) % 2 == 1 { -r } else { r };
    Ok(signed / f.lc().clone())
}

/// Monic squarefree part `f / gcd(f, f')`.
pub fn squarefree_part(f: &RatPoly) -> Result<RatPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(RatPoly::one());
    }
    let g = poly_gcd(f, &f.derivative());
    Ok(f.div_exact(&g).monic())
}

/// Yun squarefree decomposition: monic pairwise coprime squarefree parts
/// with multiplicities, so `f = lc(f) * prod part_i^(mult_i)`.
pub fn squarefree_decomposition(f: &RatPoly) -> Result<Vec<(RatPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let fm = f.monic();
    if fm.deg() == 0 {
        return Ok(Vec::new());
    }
    let df = fm.derivative();
    let a = poly_gcd(&fm, &df);
    if a.deg() == 0 {
        return Ok(vec![(fm, 1)]);
    }
    let mut parts = Vec::new();
    let mut w = fm.div_exact(&a).monic();
    let mut y = df.div_exact(&a);
    let mut i = 1usize;
    loop {
        let z = &y - &w.derivative();
        if z.is_zero() {
            if w.deg() > 0 {
                parts.push((w.monic(), i));
            }
            break;
        }
        let g = poly_gcd(&w, &z);
        if g.deg() > 0 {
            parts.push((g.clone(), i));
        }
        w = w.div_exact(&g).monic();
        y = z.div_exact(&g);
        if w.deg() == 0 {
            break;
        }
        i += 1;
    }
    Ok(parts)
}

/// The n-th cyclotomic polynomial, by exact division of `x^n - 1` by the
/// lower cyclotomics.
pub fn cyclotomic(n: u64) -> Result<RatPoly> {
    if n == 0 {
        return Err(Error::DegreeOutOfRange { found: 0, why: "cyclotomic index must be >= 1".into() });
    }
    let mut memo: Vec<(u64, RatPoly)> = Vec::new();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mut num = RatPoly::monomial(Rat::one(), d as usize);
        num = &num - &RatPoly::one();
        let mut phi = num;
        for (e, p) in &memo {
            if d % e == 0 {
                phi = phi.div_exact(p);
            }
        }
        memo.push((d, phi));
    }
    Ok(memo.pop().unwrap().1)
}

/// Unbounded deterministic sequence of distinct rationals
/// `0, 1, -1, 2, -2, ...` used as evaluation points.
pub fn eval_point(i: usize) -> Rat {
    if i == 0 {
        Rat::zero()
    } else if i % 2 == 1 {
        crate::rat(((i + 1) / 2) as i64)
    } else {
        crate::rat(-((i / 2) as i64))
    }
}

/// Lagrange interpolation through distinct points.
pub fn lagrange_interpolate(points: &[(Rat, Rat)]) -> RatPoly {
    let mut master = RatPoly::one();
    for (x, _) in points {
        let lin = RatPoly::from_coeffs(vec![-x.clone(), Rat::one()]);
        master = &master * &lin;
    }
    let mut acc = RatPoly::zero();
    for (x, y) in points {
        if y.is_zero() {
            continue;
        }
        let lin = RatPoly::from_coeffs(vec![-x.clone(), Rat::one()]);
        let li = master.div_exact(&lin);
        let denom = li.eval(x);
        acc = &acc + &li.scale(&(y.clone() / denom));
    }
    acc
}

/// Monic polynomial whose root multiset is `c * (roots of h)`,
/// coefficient-wise `z^j` term `h_j * c^(d-j) / lc(h)`.
fn scaled_root_poly(h: &RatPoly, c: &Rat) -> RatPoly {
    let d = h.deg();
    let lc = h.lc().clone();
    let mut coeffs = Vec::with_capacity(d + 1);
    let mut cpow = Rat::one();
    // build from degree d downward: coefficient of z^(d-k) is h_(d-k) * c^k
    let mut v = vec![Rat::zero(); d + 1];
    for k in 0..=d {
        v[d - k] = h.coeff(d - k) * cpow.clone() / lc.clone();
        if k < d {
            cpow = cpow * c.clone();
        }
    }
    coeffs.extend(v);
    RatPoly::from_coeffs(coeffs)
}

/// Characteristic polynomial of `alpha + c*beta` over Q for roots `alpha`
/// of `f` and `beta` of `h`: the monic degree `deg(f)*deg(h)` polynomial
/// `prod_(i,j) (x - alpha_i - c*beta_j)`, computed as the resultant
/// `Res_y(f(y), H(x - y))` with `H` monic with roots `c*beta_j`, evaluated
/// at `deg(f)*deg(h) + 1` rational points and interpolated.
///
/// The result is the minimal polynomial of `alpha + c*beta` exactly when it
/// is squarefree; callers check that.
pub fn sum_minpoly_resultant(f: &RatPoly, h: &RatPoly, c: &Rat) -> Result<RatPoly> {
    if f.is_zero() || h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 || h.deg() == 0 {
        return Err(Error::DegreeHypothesis {
            why: "sum characteristic polynomial needs two nonconstant inputs".into(),
        });
    }
    let n = f.deg();
    let d = h.deg();
    let hh = scaled_root_poly(h, c);
    let lcf_pow = num_traits::pow::pow(f.lc().clone(), d);
    let mut points = Vec::with_capacity(n * d + 1);
    for i in 0..=n * d {
        let x0 = eval_point(i);
        // H(x0 - y) as a polynomial in y
        let shift = RatPoly::from_coeffs(vec![x0.clone(), -Rat::one()]);
        let hy = hh.compose(&shift);
        let val = resultant(f, &hy) / lcf_pow.clone();
        points.push((x0, val));
    }
    Ok(lagrange_interpolate(&points))
}
