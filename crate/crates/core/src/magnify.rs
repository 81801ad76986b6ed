//! Cluster magnification: from an irreducible polynomial of degree n with
//! cluster size r and a linearly disjoint Galois polynomial of degree d,
//! produce an irreducible polynomial of degree nd with certified cluster
//! size rd.
//!
//! The magnifiers themselves are cyclic of any requested degree d: the
//! degree-d subfield of a cyclotomic field Q(zeta_p) with p = 1 (mod d),
//! presented by its Gaussian-period polynomial.  Choosing p outside the
//! discriminant of a designated polynomial keeps the subfield linearly
//! disjoint from that polynomial's splitting field (the subfield ramifies
//! only at p).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::clusters::{cluster_size, ClusterCertificate, ClusterReport, ClusterSize, Mode};
use crate::error::{Error, Result};
use crate::modp::{primitive_root, Primes};
use crate::numfield::count_roots_upper_bound;
use crate::numfield::tower::TowerField;
use crate::numfield::{NfElem, NumberField};
use crate::poly::rational::{cyclotomic, discriminant, primitive_integer_form, squarefree_part};
use crate::poly::Poly;
use crate::{Config, Rat, RatPoly};

/// A generated cyclic magnifier: the period polynomial of the degree-d
/// subfield of Q(zeta_p), together with the prime that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct Magnifier {
    pub degree: usize,
    pub avoid: RatPoly,
    pub prime: u64,
    pub poly: RatPoly,
}

/// Outcome of one magnification, carrying the compositum and the
/// certificate so every claim can be rechecked.
#[derive(Clone, Debug)]
pub struct Magnification {
    pub input: RatPoly,
    pub input_cluster: usize,
    pub magnifier: RatPoly,
    pub magnifier_degree: usize,
    /// Constant c with primitive element alpha + c * beta.
    pub shift: Rat,
    /// Minimal polynomial of the primitive element, degree n * d.
    pub output: RatPoly,
    pub size: ClusterSize,
    pub certificate: ClusterCertificate,
    pub compositum: TowerField,
}

/// The degree-d Gaussian-period polynomial for a prime p = 1 (mod d):
/// the minimal polynomial of eta_0 = sum of zeta^(g^(jd)) over
/// j = 0..(p-1)/d, computed exactly in Q[x]/(Phi_p) through power sums
/// and Newton's identities.
pub fn period_polynomial(p: u64, d: usize) -> Result<RatPoly> {
    debug_assert!(d >= 1 && (p - 1) % d as u64 == 0);
    let e = ((p - 1) / d as u64) as usize;
    let k = NumberField::new_unchecked(cyclotomic(p)?);
    let g = primitive_root(p);
    // exponent table g^t mod p for t = 0..p-2
    let mut exps = Vec::with_capacity((p - 1) as usize);
    let mut acc = 1u64;
    for _ in 0..p - 1 {
        exps.push(acc);
        acc = acc * g % p;
    }
    let periods: Vec<NfElem> = (0..d)
        .map(|i| {
            let mut s = k.zero();
            for j in 0..e {
                let zk = k.from_poly(&RatPoly::monomial(Rat::one(), exps[i + j * d] as usize));
                s = k.add(&s, &zk);
            }
            s
        })
        .collect();
    // rational power sums of the periods
    let mut s = vec![Rat::zero(); d + 1];
    let mut cur = periods.clone();
    for m in 1..=d {
        let mut total = k.zero();
        for c in &cur {
            total = k.add(&total, c);
        }
        s[m] = total
            .as_rational()
            .ok_or_else(|| Error::Internal("period power sum is not rational".into()))?;
        if m < d {
            for (c, eta) in cur.iter_mut().zip(&periods) {
                *c = k.mul(c, eta);
            }
        }
    }
    // Newton's identities: m * e_m = sum (-1)^(i-1) s_i e_(m-i)
    let mut esym = vec![Rat::one()];
    for m in 1..=d {
        let mut acc = Rat::zero();
        for i in 1..=m {
            let term = s[i].clone() * esym[m - i].clone();
            if i % 2 == 1 {
                acc = acc + term;
            } else {
                acc = acc - term;
            }
        }
        esym.push(acc / crate::rat(m as i64));
    }
    let mut coeffs = vec![Rat::zero(); d + 1];
    for (m, em) in esym.iter().enumerate() {
        coeffs[d - m] = if m % 2 == 0 { em.clone() } else { -em.clone() };
    }
    debug_assert!(coeffs.iter().all(|c| c.is_integer()), "periods are algebraic integers");
    Ok(RatPoly::from_coeffs(coeffs))
}

/// Generate a degree-d cyclic magnifier linearly disjoint from the
/// splitting field of `avoid`: the least prime p >= 5 with p = 1 (mod d)
/// and p not dividing the discriminant of (the squarefree part of)
/// `avoid`, turned into its period polynomial.
pub fn generate_magnifier(d: usize, avoid: &RatPoly, cfg: &Config) -> Result<Magnifier> {
    if d < 2 {
        return Err(Error::DegreeOutOfRange {
            found: d,
            why: "a magnifier must have degree at least 2".into(),
        });
    }
    if avoid.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // ramified primes of the avoided field: divisors of the integer
    // discriminant of the squarefree part
    let sf = squarefree_part(avoid)?;
    let disc_num: Option<BigInt> = if sf.deg() >= 2 {
        let (_, ip) = primitive_integer_form(&sf);
        let dv = discriminant(&crate::poly::rational::int_to_rat(&ip))?;
        debug_assert!(dv.is_integer());
        Some(dv.numer().abs())
    } else {
        None
    };
    let mut scanned = 0usize;
    let mut prime = None;
    for p in Primes::from(5) {
        scanned += 1;
        if scanned > cfg.magnifier_prime_budget {
            break;
        }
        if (p - 1) % d as u64 != 0 {
            continue;
        }
        if let Some(dn) = &disc_num {
            if dn.is_multiple_of(&BigInt::from(p)) {
                continue;
            }
        }
        prime = Some(p);
        break;
    }
    let Some(p) = prime else {
        return Err(Error::PrimeBudgetExhausted { scanned });
    };
    let poly = period_polynomial(p, d)?;
    // the periods form one Galois orbit, so this cannot fail
    if d <= cfg.exact_degree_cap && d * d <= cfg.exact_norm_cap && !is_galois(&poly, cfg)? {
        return Err(Error::Internal(format!("period polynomial for p={p}, d={d} is not Galois")));
    }
    Ok(Magnifier { degree: d, avoid: avoid.clone(), prime: p, poly })
}

/// Whether an irreducible polynomial is Galois over Q: it must split
/// completely over the field generated by one root.
pub fn is_galois(h: &RatPoly, cfg: &Config) -> Result<bool> {
    let rep = cluster_size(h, Mode::Exact, cfg)?;
    Ok(rep.size == ClusterSize::Exact(h.deg()))
}

/// Magnify the cluster of `f` (degree n > 2, cluster size r) by a Galois
/// polynomial `h` of degree d, producing the minimal polynomial of
/// alpha + c*beta with certified cluster size r*d.
pub fn magnify(f: &RatPoly, h: &RatPoly, cfg: &Config) -> Result<Magnification> {
    if f.is_zero() || h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.deg();
    if n <= 2 {
        return Err(Error::DegreeHypothesis {
            why: format!(
                "input degree {n} is too small: the construction is stated for degree > 2"
            ),
        });
    }
    let d = h.deg();
    if d < 2 {
        return Err(Error::DegreeOutOfRange {
            found: d,
            why: "a magnifier must have degree at least 2".into(),
        });
    }
    let f_report = cluster_size(f, Mode::Auto, cfg)?;
    let r = match f_report.size {
        ClusterSize::Exact(r) => r,
        ClusterSize::Interval { .. } => return Err(Error::InputClusterUncertified),
    };
    let h_report = cluster_size(h, Mode::Exact, cfg)?;
    if h_report.size != ClusterSize::Exact(d) {
        return Err(Error::NotGalois { poly: h.to_string() });
    }

    let kf = NumberField::new_unchecked(f.monic());
    let base = TowerField::new(kf.clone());
    let (compositum, info) = match base.adjoin_root(h, cfg) {
        Ok(ok) => ok,
        Err(Error::NothingToAdjoin) => {
            return Err(Error::NotLinearlyDisjoint { expected: n * d, got: n })
        }
        Err(e) => return Err(e),
    };
    if info.adjoined_degree < d {
        return Err(Error::NotLinearlyDisjoint {
            expected: n * d,
            got: n * info.adjoined_degree,
        });
    }
    let a = compositum.absolute();
    let g = a.minpoly().clone();
    debug_assert_eq!(g.deg(), n * d);

    // witnesses: every cluster member of f paired with every root of h,
    // mapped through the stored generator images
    let alpha_img = &compositum.gen_images()[0];
    let beta_img = &compositum.gen_images()[1];
    let c = info.shift.clone();
    let mut witnesses: Vec<NfElem> = Vec::with_capacity(r * d);
    for mem in &f_report.members {
        let am = a.eval_poly(&Poly::from_coeffs(mem.clone()), alpha_img);
        for hr in &h_report.members {
            let bm = a.eval_poly(&Poly::from_coeffs(hr.clone()), beta_img);
            witnesses.push(a.add(&am, &a.scale(&bm, &c)));
        }
    }
    // count only verified, pairwise distinct roots of g
    let mut verified: Vec<NfElem> = Vec::new();
    for w in witnesses {
        if a.eval_poly(&g, &w).is_zero() && !verified.contains(&w) {
            verified.push(w);
        }
    }
    let lower = verified.len();
    debug_assert_eq!(lower, r * d, "every witness must be a distinct root");

    let rb = count_roots_upper_bound(&g, a, cfg.prime_budget, Some(lower), cfg.threads)?;
    let size = if lower == r * d && rb.bound == lower {
        ClusterSize::Exact(lower)
    } else {
        ClusterSize::Interval { lower, upper: rb.bound }
    };
    Ok(Magnification {
        input: f.clone(),
        input_cluster: r,
        magnifier: h.clone(),
        magnifier_degree: d,
        shift: c,
        output: g,
        size,
        certificate: ClusterCertificate {
            witnesses: lower,
            upper_bound: rb.bound,
            primes: rb.primes,
        },
        compositum,
    })
}

/// Built-in singleton-cluster seed candidates of degree n.
fn seed_candidates(n: usize) -> Vec<RatPoly> {
    let mut out = Vec::new();
    if n % 2 == 1 {
        for p in [2i64, 3, 5, 7, 11, 13] {
            let mut c = vec![0i64; n + 1];
            c[0] = -p;
            c[n] = 1;
            out.push(crate::ratpoly(&c));
        }
    } else {
        // trinomials; each still gets its cluster verified before use
        for (a, b) in [(-1i64, -1i64), (1, -1), (-1, 1), (3, -1), (-3, -1)] {
            let mut c = vec![0i64; n + 1];
            c[0] = b;
            c[1] = a;
            c[n] = 1;
            out.push(crate::ratpoly(&c));
        }
    }
    out
}

/// Produce an irreducible polynomial of degree n*d whose clusters have
/// size exactly d: magnify a verified singleton-cluster seed of degree n
/// by a generated degree-d magnifier.
pub fn make_cluster_poly(
    n: usize,
    d: usize,
    seed: Option<RatPoly>,
    cfg: &Config,
) -> Result<Magnification> {
    if n < 3 {
        return Err(Error::DegreeOutOfRange {
            found: n,
            why: "seed degree must be at least 3".into(),
        });
    }
    if d < 2 {
        return Err(Error::DegreeOutOfRange {
            found: d,
            why: "a magnifier must have degree at least 2".into(),
        });
    }
    let seed = match seed {
        Some(sf) => {
            if sf.is_zero() || sf.deg() != n {
                return Err(Error::InvalidSeed {
                    why: format!("seed must have degree {n}"),
                });
            }
            let rep = cluster_size(&sf, Mode::Auto, cfg)?;
            if rep.size != ClusterSize::Exact(1) {
                return Err(Error::InvalidSeed {
                    why: format!("seed {sf} has cluster size {:?}, need exactly 1", rep.size),
                });
            }
            sf
        }
        None => {
            let mut found = None;
            let mut tried = Vec::new();
            for cand in seed_candidates(n) {
                tried.push(cand.to_string());
                let Ok(rep) = cluster_size(&cand, Mode::Auto, cfg) else { continue };
                if rep.size == ClusterSize::Exact(1) {
                    found = Some(cand);
                    break;
                }
            }
            found.ok_or(Error::NoSingletonSeed { n, tried: tried.join(", ") })?
        }
    };
    let magnifier = generate_magnifier(d, &seed, cfg)?;
    magnify(&seed, &magnifier.poly, cfg)
}

/// Result of the half-cluster construction: a polynomial of degree 2d
/// with clusters of size d, built from a dihedral quartic (two clusters
/// of size two) magnified by d/2.
#[derive(Clone, Debug)]
pub struct HalfCluster {
    pub quartic: RatPoly,
    pub quartic_report: ClusterReport,
    /// Absent when d = 2: the quartic itself already has the target size.
    pub magnification: Option<Magnification>,
    pub size: ClusterSize,
}

impl HalfCluster {
    pub fn output(&self) -> &RatPoly {
        match &self.magnification {
            Some(m) => &m.output,
            None => &self.quartic,
        }
    }
}

/// Degree-2d polynomial with cluster size d, for even d, from the
/// dihedral quartic family at parameter t.  Odd d is impossible by this
/// route: doubling a size-2 cluster reaches only even sizes.
pub fn make_half_cluster_poly(d: usize, t: i64, cfg: &Config) -> Result<HalfCluster> {
    if d < 2 {
        return Err(Error::DegreeOutOfRange {
            found: d,
            why: "target cluster size must be at least 2".into(),
        });
    }
    if d % 2 == 1 {
        return Err(Error::OddHalfClusterSize { d });
    }
    let (quartic, quartic_report) = crate::clusters::dihedral_quartic(t, cfg)?;
    if d == 2 {
        let size = quartic_report.size.clone();
        return Ok(HalfCluster { quartic, quartic_report, magnification: None, size });
    }
    let magnifier = generate_magnifier(d / 2, &quartic, cfg)?;
    let m = magnify(&quartic, &magnifier.poly, cfg)?;
    let size = m.size.clone();
    Ok(HalfCluster { quartic, quartic_report, magnification: Some(m), size })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::sum_minpoly_resultant;
    use crate::{rat, ratpoly};

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn quadratic_magnifier_over_five() {
        let m = generate_magnifier(2, &ratpoly(&[-2, 0, 1]), &cfg()).unwrap();
        assert_eq!(m.prime, 5);
        // eta = (-1 +- sqrt5)/2
        assert_eq!(m.poly, ratpoly(&[-1, 1, 1]));
    }

    #[test]
    fn cubic_magnifier_over_seven() {
        let m = generate_magnifier(3, &ratpoly(&[-2, 0, 0, 1]), &cfg()).unwrap();
        assert_eq!(m.prime, 7);
        assert_eq!(m.poly, ratpoly(&[-1, -2, 1, 1]));
    }

    #[test]
    fn ramified_prime_is_skipped() {
        // x^2 - 5 ramifies at 5, so the search must move on to 7,
        // whose quadratic periods satisfy x^2 + x + 2
        let m = generate_magnifier(2, &ratpoly(&[-5, 0, 1]), &cfg()).unwrap();
        assert_eq!(m.prime, 7);
        assert_eq!(m.poly, ratpoly(&[2, 1, 1]));
    }

    #[test]
    fn quartic_magnifier_is_the_cyclotomic_quintic() {
        // p = 5, d = 4 gives e = 1: the periods are the primitive fifth
        // roots of unity themselves
        let m = generate_magnifier(4, &ratpoly(&[-3, -3, 0, 0, 0, 1]), &cfg()).unwrap();
        assert_eq!(m.prime, 5);
        assert_eq!(m.poly, ratpoly(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn quintic_magnifier_is_the_cosine_polynomial() {
        // p = 11, d = 5, e = 2: eta_i = zeta^a + zeta^(-a), the classical
        // minimal polynomial of 2cos(2pi/11)
        let m = generate_magnifier(5, &ratpoly(&[-2, 0, 1]), &cfg()).unwrap();
        assert_eq!(m.prime, 11);
        assert_eq!(m.poly, ratpoly(&[1, 3, -3, -4, 1, 1]));
    }

    #[test]
    fn galois_detection() {
        assert!(is_galois(&ratpoly(&[1, 1, 1, 1, 1]), &cfg()).unwrap());
        assert!(is_galois(&ratpoly(&[-1, -3, 0, 1]), &cfg()).unwrap());
        assert!(!is_galois(&ratpoly(&[-2, 0, 0, 1]), &cfg()).unwrap());
        assert!(!is_galois(&ratpoly(&[-1, 1, 0, -2, 1]), &cfg()).unwrap());
        assert!(is_galois(&ratpoly(&[-2, 0, 1]), &cfg()).unwrap());
        // reducible input is an error, not "false"
        assert!(is_galois(&ratpoly(&[-1, 0, 1]), &cfg()).is_err());
    }

    #[test]
    fn doubling_a_quartic_cluster() {
        // degree 4, cluster 2, magnified by a generated quadratic; the
        // quartic's own field contains sqrt5 (5 ramifies), so the avoid
        // logic must steer the magnifier past p = 5
        let f = ratpoly(&[-1, 1, 0, -2, 1]);
        let h = generate_magnifier(2, &f, &cfg()).unwrap();
        assert_ne!(h.prime, 5);
        let m = magnify(&f, &h.poly, &cfg()).unwrap();
        assert_eq!(m.output.deg(), 8);
        assert_eq!(m.input_cluster, 2);
        assert_eq!(m.size, ClusterSize::Exact(4));
        assert_eq!(m.certificate.witnesses, 4);
        assert_eq!(m.certificate.upper_bound, 4);
        assert!(!m.certificate.primes.is_empty());
    }

    #[test]
    fn golden_row_quartic_times_cubic() {
        let f = ratpoly(&[-1, 1, 0, -2, 1]);
        let h = ratpoly(&[-1, -3, 0, 1]);
        let m = magnify(&f, &h, &cfg()).unwrap();
        let golden = ratpoly(&[19, -72, 63, -33, -114, 144, 117, -120, -51, 51, 0, -6, 1]);
        assert_eq!(m.output, golden);
        assert_eq!(m.shift, rat(1));
        assert_eq!(m.size, ClusterSize::Exact(6));
        // independent oracle: the characteristic polynomial of alpha + beta
        let by_resultant = sum_minpoly_resultant(&f, &h, &rat(1)).unwrap();
        assert_eq!(m.output, by_resultant);
    }

    #[test]
    fn golden_row_cubic_times_cubic() {
        let f = ratpoly(&[-2, 0, 0, 1]);
        let h = ratpoly(&[-1, -3, 0, 1]);
        let m = magnify(&f, &h, &cfg()).unwrap();
        let golden = ratpoly(&[27, 81, -81, -54, 0, 27, -9, -9, 0, 1]);
        assert_eq!(m.output, golden);
        assert_eq!(m.shift, rat(1));
        assert_eq!(m.size, ClusterSize::Exact(3));
        let by_resultant = sum_minpoly_resultant(&f, &h, &rat(1)).unwrap();
        assert_eq!(m.output, by_resultant);
    }

    #[test]
    fn golden_row_quintic_times_quartic() {
        let f = ratpoly(&[-3, -3, 0, 0, 0, 1]);
        let h = ratpoly(&[1, 1, 1, 1, 1]);
        let m = magnify(&f, &h, &cfg()).unwrap();
        let golden = ratpoly(&[
            781, 602, 54, 143, 3481, 4681, 3074, 1092, 2882, 5255, 5061, 2921, 944, 165, 50,
            61, 58, 35, 15, 5, 1,
        ]);
        assert_eq!(m.output, golden);
        assert_eq!(m.shift, rat(1));
        assert_eq!(m.size, ClusterSize::Exact(4));
        let by_resultant = sum_minpoly_resultant(&f, &h, &rat(1)).unwrap();
        assert_eq!(m.output, by_resultant);
    }

    #[test]
    fn hypothesis_violations_are_reported() {
        let quad = ratpoly(&[-2, 0, 1]);
        let cubic_h = ratpoly(&[-1, -3, 0, 1]);
        assert!(matches!(
            magnify(&quad, &cubic_h, &cfg()),
            Err(Error::DegreeHypothesis { .. })
        ));
        let f = ratpoly(&[-2, 0, 0, 1]);
        assert!(matches!(
            magnify(&f, &f, &cfg()),
            Err(Error::NotGalois { .. })
        ));
    }

    #[test]
    fn overlapping_fields_are_not_disjoint() {
        // sqrt5 lives inside the cyclotomic quintic field, so the golden
        // quadratic magnifier splits there
        let f = ratpoly(&[1, 1, 1, 1, 1]);
        let h = ratpoly(&[-1, 1, 1]);
        assert!(matches!(
            magnify(&f, &h, &cfg()),
            Err(Error::NotLinearlyDisjoint { expected: 8, got: 4 })
        ));
    }

    #[test]
    fn seeded_cluster_construction() {
        let m = make_cluster_poly(3, 2, None, &cfg()).unwrap();
        assert_eq!(m.input, ratpoly(&[-2, 0, 0, 1]));
        assert_eq!(m.output.deg(), 6);
        assert_eq!(m.size, ClusterSize::Exact(2));
        let m = make_cluster_poly(4, 2, None, &cfg()).unwrap();
        assert_eq!(m.input, ratpoly(&[-1, -1, 0, 0, 1]));
        assert_eq!(m.output.deg(), 8);
        assert_eq!(m.size, ClusterSize::Exact(2));
    }

    #[test]
    fn bad_seeds_are_rejected() {
        // cyclic cubic: cluster size 3, not a singleton
        let err = make_cluster_poly(3, 2, Some(ratpoly(&[-1, -3, 0, 1])), &cfg());
        assert!(matches!(err, Err(Error::InvalidSeed { .. })));
        let err = make_cluster_poly(3, 2, Some(ratpoly(&[-2, 0, 1])), &cfg());
        assert!(matches!(err, Err(Error::InvalidSeed { .. })));
    }

    #[test]
    fn half_cluster_base_case_and_doubling() {
        let hc = make_half_cluster_poly(2, 4, &cfg()).unwrap();
        assert_eq!(hc.quartic, ratpoly(&[1, 4, -1, -4, 1]));
        assert!(hc.magnification.is_none());
        assert_eq!(hc.size, ClusterSize::Exact(2));
        let hc = make_half_cluster_poly(4, 4, &cfg()).unwrap();
        assert_eq!(hc.output().deg(), 8);
        assert_eq!(hc.size, ClusterSize::Exact(4));
        assert!(matches!(
            make_half_cluster_poly(3, 4, &cfg()),
            Err(Error::OddHalfClusterSize { d: 3 })
        ));
    }

    #[test]
    fn magnification_composes() {
        let m1 = make_cluster_poly(3, 2, None, &cfg()).unwrap();
        let h2 = generate_magnifier(2, &m1.output, &cfg()).unwrap();
        let m2 = magnify(&m1.output, &h2.poly, &cfg()).unwrap();
        assert_eq!(m2.output.deg(), 12);
        assert_eq!(m2.size, ClusterSize::Exact(4));
    }
}
