//! Root clusters: how many roots of an irreducible rational polynomial
//! lie in the field generated by a single root.
//!
//! The cluster size is independent of the chosen root, divides the
//! degree, and can be computed two ways: exactly, by factoring the
//! polynomial over its own root field and counting linear factors, or by
//! a certificate pair (explicit in-field roots as a lower bound, a
//! modular Frobenius count as an upper bound) that stays cheap when the
//! degree puts exact factorization out of reach.


use crate::error::{Error, Result};
use crate::factor::is_irreducible_q;
use crate::numfield::{count_roots_upper_bound, trager_factor, NumberField};
use crate::poly::Poly;
use crate::{Config, Rat, RatPoly};

/// How the cluster size should be established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Pick exact factorization below the configured caps, certificates above.
    Auto,
    /// Factor over the root field; refused above the caps.
    Exact,
    /// Witnesses plus modular upper bound only.
    Certified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClusterSize {
    Exact(usize),
    /// Bounds did not meet; the true size lies in `lower..=upper`.
    Interval { lower: usize, upper: usize },
}

impl ClusterSize {
    pub fn exact(&self) -> Option<usize> {
        match self {
            ClusterSize::Exact(r) => Some(*r),
            ClusterSize::Interval { .. } => None,
        }
    }
}

/// How the reported size was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Linear factors counted after factoring over the root field.
    ExactFactorization,
    /// Witness lower bound met the modular upper bound.
    Certificate,
    /// Certificate bounds did not meet.
    Interval,
}

/// Checkable evidence for a certified size: `witnesses` distinct verified
/// roots from below, a Frobenius count from above.
#[derive(Clone, Debug, PartialEq)]
pub struct ClusterCertificate {
    pub witnesses: usize,
    pub upper_bound: usize,
    pub primes: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClusterReport {
    pub input: RatPoly,
    pub degree: usize,
    pub size: ClusterSize,
    /// Number of clusters `degree / size` when the size is exact.
    pub num_clusters: Option<usize>,
    /// Degrees of the factors over the root field, ascending; only the
    /// exact path produces it.
    pub factor_pattern: Option<Vec<usize>>,
    /// Coordinates of the roots lying in the root field, in the power
    /// basis of the designated generator; the generator itself first,
    /// the rest sorted lexicographically.
    pub members: Vec<Vec<Rat>>,
    pub method: Method,
    pub certificate: Option<ClusterCertificate>,
}

/// Compute the root cluster size of an irreducible polynomial.
pub fn cluster_size(f: &RatPoly, mode: Mode, cfg: &Config) -> Result<ClusterReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Err(Error::DegreeOutOfRange {
            found: 0,
            why: "cluster size needs degree >= 1".into(),
        });
    }
    if !is_irreducible_q(f)? {
        return Err(Error::NotIrreducible { poly: f.to_string() });
    }
    let n = f.deg();
    let within_caps = n <= cfg.exact_degree_cap && n * n <= cfg.exact_norm_cap;
    let use_exact = match mode {
        Mode::Auto => within_caps,
        Mode::Exact => {
            if !within_caps {
                return Err(Error::ExactCapExceeded {
                    why: format!(
                        "degree {n} needs a norm of degree {}, above the configured caps \
                         ({} / {}); use certified mode",
                        n * n,
                        cfg.exact_degree_cap,
                        cfg.exact_norm_cap
                    ),
                });
            }
            true
        }
        Mode::Certified => false,
    };
    let k = NumberField::new_unchecked(f.monic());
    if use_exact {
        exact_report(f, &k)
    } else {
        certified_report(f, &k, cfg)
    }
}

fn exact_report(f: &RatPoly, k: &NumberField) -> Result<ClusterReport> {
    let n = f.deg();
    let factors = trager_factor(k, &k.kp_embed(f))?;
    debug_assert!(factors.iter().all(|(_, m)| *m == 1));
    let mut pattern: Vec<usize> = factors.iter().map(|(g, _)| g.deg()).collect();
    pattern.sort_unstable();
    let mut members: Vec<Vec<Rat>> = factors
        .iter()
        .filter(|(g, _)| g.deg() == 1)
        .map(|(g, _)| k.neg(&k.kp_coeff(g, 0)).coords().to_vec())
        .collect();
    let r = members.len();
    debug_assert!(r >= 1 && n % r == 0, "cluster size must divide the degree");
    let gen_coords = k.generator().coords().to_vec();
    members.sort();
    let pos = members
        .iter()
        .position(|m| *m == gen_coords)
        .expect("the generator is always an in-field root");
    let g = members.remove(pos);
    members.insert(0, g);
    Ok(ClusterReport {
        input: f.clone(),
        degree: n,
        size: ClusterSize::Exact(r),
        num_clusters: Some(n / r),
        factor_pattern: Some(pattern),
        members,
        method: Method::ExactFactorization,
        certificate: None,
    })
}

fn certified_report(f: &RatPoly, k: &NumberField, cfg: &Config) -> Result<ClusterReport> {
    let n = f.deg();
    // the designated generator is always a root in the field
    debug_assert!(k.eval_poly(f, &k.generator()).is_zero());
    let lower = 1usize;
    let rb = count_roots_upper_bound(f, k, cfg.prime_budget, Some(lower), cfg.threads)?;
    let cert = ClusterCertificate {
        witnesses: lower,
        upper_bound: rb.bound,
        primes: rb.primes,
    };
    let members = vec![k.generator().coords().to_vec()];
    if rb.bound == lower {
        Ok(ClusterReport {
            input: f.clone(),
            degree: n,
            size: ClusterSize::Exact(lower),
            num_clusters: Some(n / lower),
            factor_pattern: None,
            members,
            method: Method::Certificate,
            certificate: Some(cert),
        })
    } else {
        Ok(ClusterReport {
            input: f.clone(),
            degree: n,
            size: ClusterSize::Interval { lower, upper: rb.bound },
            num_clusters: None,
            factor_pattern: None,
            members,
            method: Method::Interval,
            certificate: Some(cert),
        })
    }
}

/// `x^n f(-1/x)`: reverse the coefficients with alternating signs.
fn signed_reversal(f: &RatPoly) -> RatPoly {
    let n = f.deg();
    Poly::from_coeffs(
        (0..=n)
            .map(|i| {
                let c = f.coeff(n - i);
                if (n - i) % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect(),
    )
}

/// The quartic family `x^4 - t*x^3 - x^2 + t*x + 1` for integer `t >= 4`:
/// dihedral Galois group, two clusters of size two.  Returns the quartic
/// and its verified cluster report; checks the root-pairing identity
/// `x^4 f(-1/x) = f(x)` (so `-1/a` is a root whenever `a` is) along the way.
pub fn dihedral_quartic(t: i64, cfg: &Config) -> Result<(RatPoly, ClusterReport)> {
    if t < 4 {
        return Err(Error::FamilyParameterOutOfRange { t });
    }
    let f = crate::ratpoly(&[1, t, -1, -t, 1]);
    if signed_reversal(&f) != f {
        return Err(Error::Internal("root-pairing identity failed".into()));
    }
    let report = cluster_size(&f, Mode::Exact, cfg)?;
    if report.size != ClusterSize::Exact(2) {
        return Err(Error::Internal(format!(
            "dihedral quartic t={t} has cluster size {:?}, expected 2",
            report.size
        )));
    }
    Ok((f, report))
}

/// One named assertion of the consistency suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Structural facts every cluster computation must satisfy, checked on a
/// single irreducible input: divisibility, factor-pattern bookkeeping,
/// root-choice independence, and invariance under change of generator.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub input: RatPoly,
    pub degree: usize,
    pub cluster: usize,
    pub pattern: Vec<usize>,
    pub checks: Vec<SuiteCheck>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Run the consistency suite on one irreducible polynomial within the
/// exact-mode caps.
pub fn perlis_suite(f: &RatPoly, cfg: &Config) -> Result<SuiteReport> {
    let report = cluster_size(f, Mode::Exact, cfg)?;
    let n = report.degree;
    let r = report.size.exact().expect("exact mode reports exact sizes");
    let pattern = report.factor_pattern.clone().expect("exact mode reports the pattern");
    let k = NumberField::new_unchecked(f.monic());
    let mut checks = Vec::new();

    checks.push(SuiteCheck {
        name: "size divides degree",
        passed: r >= 1 && n % r == 0,
        detail: format!("r={r}, n={n}"),
    });

    let ones = pattern.iter().filter(|&&d| d == 1).count();
    let sum: usize = pattern.iter().sum();
    checks.push(SuiteCheck {
        name: "factor pattern bookkeeping",
        passed: ones == r && sum == n,
        detail: format!("pattern={pattern:?}"),
    });

    // every root lying in the field is itself a generator of it
    let mut independence = true;
    let mut detail = String::new();
    for m in &report.members {
        let rho = k.element(m.clone())?;
        if !k.eval_poly(f, &rho).is_zero() {
            independence = false;
            detail = format!("member {m:?} is not a root");
            break;
        }
        let mp = k.minpoly_of(&rho)?;
        if mp.deg() != n {
            independence = false;
            detail = format!("member {m:?} generates degree {} only", mp.deg());
            break;
        }
    }
    checks.push(SuiteCheck {
        name: "each in-field root generates the field",
        passed: independence,
        detail,
    });

    // an alternate primitive element must see the same cluster size
    let alt = alternate_generator(&k, cfg)?;
    let alt_minpoly = k.minpoly_of(&alt)?;
    let alt_report = cluster_size(&alt_minpoly, Mode::Exact, cfg)?;
    checks.push(SuiteCheck {
        name: "independent of the generator",
        passed: alt_report.size == ClusterSize::Exact(r),
        detail: format!("alternate generator minpoly {alt_minpoly}, size {:?}", alt_report.size),
    });

    Ok(SuiteReport { input: f.clone(), degree: n, cluster: r, pattern, checks })
}

/// A second primitive element of the field: the first of
/// `theta^2 + c*theta` (c = 0, 1, -1, 2, ...) with full-degree minimal
/// polynomial.  Degree-one fields fall back to a shifted generator.
fn alternate_generator(k: &NumberField, cfg: &Config) -> Result<crate::numfield::NfElem> {
    let n = k.degree();
    let theta = k.generator();
    if n == 1 {
        return Ok(k.add(&theta, &k.one()));
    }
    let theta2 = k.mul(&theta, &theta);
    for i in 0..cfg.primitive_search_budget {
        let c = crate::poly::rational::eval_point(i);
        let cand = k.add(&theta2, &k.scale(&theta, &c));
        if k.minpoly_of(&cand)?.deg() == n {
            return Ok(cand);
        }
    }
    Err(Error::PrimitiveSearchExhausted { tried: cfg.primitive_search_budget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratpoly};

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn quartic_with_two_clusters() {
        let f = ratpoly(&[-1, 1, 0, -2, 1]); // x^4 - 2x^3 + x - 1
        let rep = cluster_size(&f, Mode::Auto, &cfg()).unwrap();
        assert_eq!(rep.size, ClusterSize::Exact(2));
        assert_eq!(rep.num_clusters, Some(2));
        assert_eq!(rep.factor_pattern, Some(vec![1, 1, 2]));
        assert_eq!(rep.members.len(), 2);
        // generator first, and every member is a root
        let k = NumberField::new(&f).unwrap();
        assert_eq!(rep.members[0], k.generator().coords().to_vec());
        for m in &rep.members {
            let e = k.element(m.clone()).unwrap();
            assert!(k.eval_poly(&f, &e).is_zero());
        }
    }

    #[test]
    fn singleton_clusters() {
        let rep = cluster_size(&ratpoly(&[-2, 0, 0, 1]), Mode::Auto, &cfg()).unwrap();
        assert_eq!(rep.size, ClusterSize::Exact(1));
        assert_eq!(rep.num_clusters, Some(3));
        assert_eq!(rep.factor_pattern, Some(vec![1, 2]));
        let rep = cluster_size(&ratpoly(&[-3, -3, 0, 0, 0, 1]), Mode::Auto, &cfg()).unwrap();
        assert_eq!(rep.size, ClusterSize::Exact(1));
    }

    #[test]
    fn full_cluster_is_galois() {
        // cyclotomic quintic: every root is a power of any other
        let rep = cluster_size(&ratpoly(&[1, 1, 1, 1, 1]), Mode::Auto, &cfg()).unwrap();
        assert_eq!(rep.size, ClusterSize::Exact(4));
        assert_eq!(rep.num_clusters, Some(1));
        assert_eq!(rep.factor_pattern, Some(vec![1, 1, 1, 1]));
        // cyclic cubic
        let rep = cluster_size(&ratpoly(&[-1, -3, 0, 1]), Mode::Auto, &cfg()).unwrap();
        assert_eq!(rep.size, ClusterSize::Exact(3));
        // r = n exactly when the pattern is all ones
        assert!(rep.factor_pattern.unwrap().iter().all(|&d| d == 1));
        let rep = cluster_size(&ratpoly(&[1, 0, 1]), Mode::Auto, &cfg()).unwrap();
        assert_eq!(rep.size, ClusterSize::Exact(2));
    }

    #[test]
    fn rejects_reducible_and_constant() {
        assert!(matches!(
            cluster_size(&ratpoly(&[-1, 0, 1]), Mode::Auto, &cfg()),
            Err(Error::NotIrreducible { .. })
        ));
        assert!(cluster_size(&ratpoly(&[7]), Mode::Auto, &cfg()).is_err());
        assert!(cluster_size(&RatPoly::zero(), Mode::Auto, &cfg()).is_err());
    }

    #[test]
    fn certified_path_certifies_singletons() {
        let f = ratpoly(&[-2, 0, 0, 1]);
        let rep = cluster_size(&f, Mode::Certified, &cfg()).unwrap();
        assert_eq!(rep.size, ClusterSize::Exact(1));
        assert_eq!(rep.method, Method::Certificate);
        let cert = rep.certificate.unwrap();
        assert_eq!(cert.witnesses, 1);
        assert_eq!(cert.upper_bound, 1);
        assert!(!cert.primes.is_empty());
    }

    #[test]
    fn certified_path_reports_intervals_honestly() {
        // true cluster size 2: the certificate alone cannot close the gap,
        // and the upper bound can never drop below the truth
        let f = ratpoly(&[-1, 1, 0, -2, 1]);
        let rep = cluster_size(&f, Mode::Certified, &cfg()).unwrap();
        assert_eq!(rep.method, Method::Interval);
        match rep.size {
            ClusterSize::Interval { lower, upper } => {
                assert_eq!(lower, 1);
                assert_eq!(upper, 2);
            }
            ClusterSize::Exact(_) => panic!("bounds cannot meet here"),
        }
    }

    #[test]
    fn auto_switches_past_the_caps() {
        let mut small = cfg();
        small.exact_degree_cap = 3;
        let f = ratpoly(&[-2, 0, 0, 0, 1]); // x^4 - 2, degree above the lowered cap
        let rep = cluster_size(&f, Mode::Auto, &small).unwrap();
        assert!(matches!(rep.method, Method::Certificate | Method::Interval));
        assert!(matches!(
            cluster_size(&f, Mode::Exact, &small),
            Err(Error::ExactCapExceeded { .. })
        ));
    }

    #[test]
    fn degree_one_input() {
        let rep = cluster_size(&ratpoly(&[-3, 1]), Mode::Auto, &cfg()).unwrap();
        assert_eq!(rep.size, ClusterSize::Exact(1));
        assert_eq!(rep.members, vec![vec![rat(3)]]);
    }

    #[test]
    fn dihedral_family() {
        let (f, rep) = dihedral_quartic(4, &cfg()).unwrap();
        assert_eq!(f, ratpoly(&[1, 4, -1, -4, 1]));
        assert_eq!(rep.size, ClusterSize::Exact(2));
        assert_eq!(rep.num_clusters, Some(2));
        let (f, _) = dihedral_quartic(5, &cfg()).unwrap();
        assert_eq!(f, ratpoly(&[1, 5, -1, -5, 1]));
        assert!(matches!(
            dihedral_quartic(3, &cfg()),
            Err(Error::FamilyParameterOutOfRange { t: 3 })
        ));
    }

    #[test]
    fn signed_reversal_is_the_stated_identity() {
        // x^2 - 3x + 1: reversal gives 1 + 3x + x^2
        let f = ratpoly(&[1, -3, 1]);
        assert_eq!(signed_reversal(&f), ratpoly(&[1, 3, 1]));
        let f = ratpoly(&[1, 4, -1, -4, 1]);
        assert_eq!(signed_reversal(&f), f);
    }

    #[test]
    fn suite_on_the_golden_quartic() {
        let rep = perlis_suite(&ratpoly(&[-1, 1, 0, -2, 1]), &cfg()).unwrap();
        assert_eq!(rep.cluster, 2);
        assert_eq!(rep.pattern, vec![1, 1, 2]);
        assert!(rep.all_passed(), "{:?}", rep.checks);
    }

    #[test]
    fn suite_on_galois_and_quadratic_inputs() {
        let rep = perlis_suite(&ratpoly(&[-1, -3, 0, 1]), &cfg()).unwrap();
        assert_eq!(rep.cluster, 3);
        assert_eq!(rep.pattern, vec![1, 1, 1]);
        assert!(rep.all_passed(), "{:?}", rep.checks);
        let rep = perlis_suite(&ratpoly(&[1, 0, 1]), &cfg()).unwrap();
        assert_eq!(rep.cluster, 2);
        assert!(rep.all_passed(), "{:?}", rep.checks);
    }
}
