//! Towers built by adjoining several roots of one polynomial whose Galois
//! group is assumed fully symmetric, with the assumption verified at every
//! step through the factor pattern: after adjoining i roots the input must
//! split as i linear factors times one irreducible factor of degree n-i.
//! The primitive element of the k-th level has degree n(n-1)...(n-k+1),
//! and its minimal polynomial has clusters of size k!, certified by
//! explicit permuted-root witnesses and the modular upper bound.

use crate::clusters::{cluster_size, ClusterCertificate, ClusterSize, Mode};
use crate::error::{Error, Result};
use crate::factor::is_irreducible_q;
use crate::numfield::tower::TowerField;
use crate::numfield::{count_roots_upper_bound, NfElem, NumberField};
use crate::{Config, Rat, RatPoly};

/// Outcome of a tower construction, with the cluster certificate attached
/// when the run verified it.
#[derive(Clone, Debug)]
pub struct TowerReport {
    pub input: RatPoly,
    pub k: usize,
    /// Absolute degree after each adjunction.
    pub degree_sequence: Vec<usize>,
    /// Minimal polynomial of the top primitive element.
    pub output: RatPoly,
    pub tower: TowerField,
    pub size: Option<ClusterSize>,
    pub certificate: Option<ClusterCertificate>,
}

/// Degree sequence of repeated root adjunction, with no symmetry
/// assumption: it records whatever degrees actually appear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    pub degrees: Vec<usize>,
    /// True when the configured degree cap stopped the run early.
    pub truncated: bool,
}

fn validate_input(f: &RatPoly) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.deg();
    if n < 3 {
        return Err(Error::DegreeOutOfRange {
            found: n,
            why: "tower construction needs degree at least 3".into(),
        });
    }
    if !is_irreducible_q(f)? {
        return Err(Error::NotIrreducible { poly: f.to_string() });
    }
    Ok(n)
}

/// Adjoin k roots of f, verifying the symmetric-group factor pattern at
/// every step.  k is restricted to 1..=n-2: with n-1 roots adjoined the
/// field is already the full splitting field, where the cluster claim
/// changes shape, so that case gets its own diagnostic.
pub fn build_tower(f: &RatPoly, k: usize, cfg: &Config) -> Result<TowerReport> {
    let n = validate_input(f)?;
    if k == n - 1 {
        return Err(Error::FullSplittingField { k });
    }
    if k < 1 || k > n - 2 {
        return Err(Error::AdjunctionCountOutOfRange { k, n });
    }
    let base = NumberField::new_unchecked(f.monic());
    let mut tower = TowerField::new(base);
    let mut degrees = vec![n];
    for step in 2..=k {
        let expected: Vec<usize> = {
            let mut v = vec![1; step - 1];
            v.push(n - step + 1);
            v
        };
        match tower.adjoin_root(f, cfg) {
            Ok((next, info)) => {
                if info.factor_pattern != expected {
                    return Err(Error::TowerPatternMismatch {
                        step,
                        expected: format!("{expected:?}"),
                        found: format!("{:?}", info.factor_pattern),
                    });
                }
                degrees.push(info.new_degree);
                tower = next;
            }
            Err(Error::NothingToAdjoin) => {
                return Err(Error::TowerPatternMismatch {
                    step,
                    expected: format!("{expected:?}"),
                    found: "all factors linear".into(),
                });
            }
            Err(e) => return Err(e),
        }
    }
    let output = tower.absolute().minpoly().clone();
    debug_assert_eq!(output.deg(), *degrees.last().expect("nonempty"));
    Ok(TowerReport {
        input: f.clone(),
        k,
        degree_sequence: degrees,
        output,
        tower,
        size: None,
        certificate: None,
    })
}

/// All permutations of `0..k` in a deterministic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    heap_permute(&mut idx, k, &mut out);
    out
}

fn heap_permute(idx: &mut Vec<usize>, m: usize, out: &mut Vec<Vec<usize>>) {
    if m <= 1 {
        out.push(idx.clone());
        return;
    }
    for i in 0..m {
        heap_permute(idx, m - 1, out);
        if m % 2 == 0 {
            idx.swap(i, m - 1);
        } else {
            idx.swap(0, m - 1);
        }
    }
}

/// Build the k-root tower and certify that the cluster size of its
/// primitive minimal polynomial is k!.  The witnesses are the k! images
/// of the primitive element under permutations of the adjoined roots;
/// each is verified as an exact root before it counts.
pub fn theorem3_verify(f: &RatPoly, k: usize, cfg: &Config) -> Result<TowerReport> {
    let mut report = build_tower(f, k, cfg)?;
    if k == 1 {
        let rep = cluster_size(f, Mode::Auto, cfg)?;
        report.size = Some(rep.size.clone());
        report.certificate = rep.certificate;
        return Ok(report);
    }
    let a = report.tower.absolute();
    let g = &report.output;
    // weights of the primitive element: gamma = r_0 + c_1 r_1 + ...
    let mut weights: Vec<Rat> = Vec::with_capacity(k);
    weights.push(Rat::from_integer(1.into()));
    weights.extend(report.tower.shifts().iter().cloned());
    debug_assert_eq!(weights.len(), k);
    let roots = report.tower.gen_images();
    let mut verified: Vec<NfElem> = Vec::new();
    for sigma in permutations(k) {
        let mut w = a.zero();
        for (j, &s) in sigma.iter().enumerate() {
            w = a.add(&w, &a.scale(&roots[s], &weights[j]));
        }
        if a.eval_poly(g, &w).is_zero() && !verified.contains(&w) {
            verified.push(w);
        }
    }
    let lower = verified.len();
    let target: usize = (1..=k).product();
    debug_assert_eq!(lower, target, "all permuted primitive elements must be roots");
    let rb = count_roots_upper_bound(g, a, cfg.prime_budget, Some(lower), cfg.threads)?;
    let size = if lower == target && rb.bound == lower {
        ClusterSize::Exact(lower)
    } else {
        ClusterSize::Interval { lower, upper: rb.bound }
    };
    report.certificate = Some(ClusterCertificate {
        witnesses: lower,
        upper_bound: rb.bound,
        primes: rb.primes,
    });
    report.size = Some(size);
    Ok(report)
}

/// Degrees of repeated root adjunction for any irreducible input,
/// recording what actually happens: a step where the polynomial already
/// splits keeps the degree unchanged, and the configured absolute degree
/// cap truncates the run when the worst-case next degree would pass it.
pub fn tower_degrees(f: &RatPoly, k_max: usize, cfg: &Config) -> Result<DegreeSequence> {
    let n = validate_input(f)?;
    if k_max < 1 || k_max > n - 1 {
        return Err(Error::AdjunctionCountOutOfRange { k: k_max, n });
    }
    let base = NumberField::new_unchecked(f.monic());
    let mut tower = TowerField::new(base);
    let mut degrees = vec![n];
    let mut split = false;
    for _ in 2..=k_max {
        if split {
            degrees.push(*degrees.last().expect("nonempty"));
            continue;
        }
        // any proper adjunction at least doubles the degree, so when even
        // that passes the cap there is no point factoring
        if tower.degree() * 2 > cfg.tower_degree_cap {
            return Ok(DegreeSequence { degrees, truncated: true });
        }
        match tower.adjoin_root(f, cfg) {
            Ok((next, info)) => {
                if info.new_degree > cfg.tower_degree_cap {
                    return Ok(DegreeSequence { degrees, truncated: true });
                }
                degrees.push(info.new_degree);
                tower = next;
            }
            Err(Error::NothingToAdjoin) => {
                split = true;
                degrees.push(*degrees.last().expect("nonempty"));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(DegreeSequence { degrees, truncated: false })
}
